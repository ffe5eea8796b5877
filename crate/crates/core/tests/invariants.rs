mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use common::*;
use pgroup_core::corpus::{example1, example2, example2_odd, registry};
use pgroup_core::subgroup::close;
use pgroup_core::{parse, Element, Group, PresentationBuilder, Subgroup, Word};

fn groups() -> &'static [Group] {
    static GROUPS: OnceLock<Vec<Group>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        vec![
            Group::new(example1(5).unwrap()),
            Group::new(example2().unwrap()),
            Group::new(example2_odd(3).unwrap()),
        ]
    })
}

fn element(g: &Group, seed: u64) -> Element {
    g.element_at(seed % g.order())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn associativity(which in 0usize..3, a: u64, b: u64, c: u64) {
        let g = &groups()[which];
        let (x, y, z) = (element(g, a), element(g, b), element(g, c));
        let left = g.multiply(&g.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = g.multiply(&x, &g.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_is_a_power(which in 0usize..3, a: u64) {
        let g = &groups()[which];
        let x = element(g, a);
        let ord = g.order_of(&x).unwrap();
        prop_assert_eq!(g.order() % ord, 0);
        prop_assert_eq!(g.inverse(&x).unwrap(), g.power(&x, ord - 1).unwrap());
        let p = g.prime() as u64;
        for k in 0..6u32 {
            let trivial = g.power(&x, p.pow(k)).unwrap().is_identity();
            prop_assert_eq!(trivial, ord <= p.pow(k));
        }
    }

    #[test]
    fn words_collect_like_products(which in 0usize..3, letters in proptest::collection::vec((0usize..3, -40i64..40), 0..8)) {
        let g = &groups()[which];
        let w = Word::new(letters.clone());
        let mut acc = g.identity();
        for (gen, e) in letters {
            acc = g.multiply(&acc, &g.power_signed(&g.generator(gen), e).unwrap()).unwrap();
        }
        prop_assert_eq!(g.normal_form(&w).unwrap(), acc);
    }

    #[test]
    fn subgroup_order_divides_and_contains_agrees(which in 0usize..3, a: u64, b: u64, probe: u64) {
        let g = &groups()[which];
        let h = close(g, &[element(g, a), element(g, b)]).unwrap();
        prop_assert_eq!(g.order() % h.order(), 0);
        let x = element(g, probe);
        let xh = h.sift(&x).unwrap();
        prop_assert_eq!(h.contains(&x).unwrap(), xh.is_identity());
        for y in h.igs() {
            prop_assert!(h.contains(y).unwrap());
            prop_assert!(h.contains(&g.inverse(y).unwrap()).unwrap());
        }
    }
}

#[test]
fn normal_form_count_matches_candidate_order() {
    for spec in registry() {
        let g = Group::new(spec.build().unwrap());
        if g.order() > 1 << 12 {
            continue;
        }
        assert_eq!(whole(&g).len() as u64, g.order(), "{}", spec.name());
        assert_eq!(set_of(&Subgroup::whole(&g).unwrap()).len() as u64, g.order());
    }
}

#[test]
fn omega_is_monotone_and_agemo_antitone() {
    for spec in registry() {
        let g = Group::new(spec.build().unwrap());
        let whole = Subgroup::whole(&g).unwrap();
        for i in -1..4 {
            let (a, b) = (whole.omega(i).unwrap(), whole.omega(i + 1).unwrap());
            assert!(a.leq(&b).unwrap(), "{} omega {i}", spec.name());
        }
        for j in 0..4 {
            let (a, b) = (whole.agemo(j + 1).unwrap(), whole.agemo(j).unwrap());
            assert!(a.leq(&b).unwrap(), "{} agemo {j}", spec.name());
        }
    }
}

#[test]
fn candidate_order_is_multiplicative() {
    let mut b = PresentationBuilder::new(5);
    b.generator("x", 2).unwrap();
    let one = b.build().unwrap().candidate_order();
    let mut b = PresentationBuilder::new(5);
    b.generator("x", 2).unwrap();
    b.generator("y", 3).unwrap();
    assert_eq!(b.build().unwrap().candidate_order(), one * 125);
    assert_eq!(parse("p = 5\ngens x\norders x:5\n").unwrap().candidate_order(), 5);
}

#[test]
fn render_round_trips_the_corpus() {
    for spec in registry() {
        let pres = spec.build().unwrap();
        assert_eq!(parse(&pres.render()).unwrap(), pres, "{}", spec.name());
    }
}
