mod common;

use common::*;
use pgroup_core::corpus::{abelian, example1, example2, example2_odd, registry};
use pgroup_core::properties::{is_powerful, verify_chain};
use pgroup_core::report::{NoClock, Param, Status};
use pgroup_core::theorems::*;
use pgroup_core::{parse, Error, Group, Subgroup};

const D16: &str = include_str!("data/d16.pc");
const HEISENBERG3: &str = include_str!("data/heisenberg3.pc");

fn all_pass(reports: &[pgroup_core::report::CheckReport]) {
    for r in reports {
        assert!(r.is_ok(), "{} failed: {:?}", r.name, r.notes);
    }
}

#[test]
fn commutator_power_example() {
    let g = Group::new(example2_odd(3).unwrap());
    let (a3, b3) = (el(&g, "a^3"), el(&g, "b^3"));
    let c = g.commutator(&a3, &b3).unwrap();
    assert_eq!(c, el(&g, "c^81"));
    assert_eq!(g.order_of(&c).unwrap(), 3);
}

#[test]
fn exponent_of_omega_two_of_squares_is_four() {
    let g = Group::new(example2().unwrap());
    let h = Subgroup::whole(&g).unwrap().agemo(1).unwrap().omega(2).unwrap();
    assert_eq!(h.exponent().unwrap(), 4);
    let report = check_commutator_orders(&g, Mode::Exhaustive).unwrap();
    assert_eq!(report.status, Status::Pass);
    assert_eq!(report.params["mode"], Param::from("exhaustive"));
}

/// The bounds stated directly over `x, y, j, k`, with no reduction.
fn literal_violations(g: &Group) -> usize {
    let p = g.prime() as u64;
    let all: Vec<Vec<u32>> = whole(g).into_iter().collect();
    let lo: std::collections::BTreeMap<&Vec<u32>, i64> =
        all.iter().map(|x| (x, order_log(g, x) as i64)).collect();
    let mut bad = 0;
    for x in &all {
        for y in &all {
            let c = comm(g, x, y);
            if order_log(g, &c) as i64 > lo[y] {
                bad += 1;
            }
            let i = (lo[x] - 1).max(lo[y]).max(0);
            for j in 0..=3u32 {
                let u = pow(g, x, p.pow(j));
                for k in 0..=3u32 {
                    let v = pow(g, y, p.pow(k));
                    let c = comm(g, &u, &v);
                    let bound = i - j as i64 - k as i64;
                    let lc = order_log(g, &c) as i64;
                    if lc > bound.max(0) || (bound < 0 && lc > 0) {
                        bad += 1;
                    }
                }
            }
        }
    }
    bad
}

#[test]
fn reduced_scan_agrees_with_literal_statement() {
    for pres in [example1(3).unwrap(), pgroup_core::corpus::family(2, 2, 2, 3, 2).unwrap()] {
        let g = Group::new(pres);
        assert_eq!(literal_violations(&g), 0);
        let report = check_commutator_orders(&g, Mode::Exhaustive).unwrap();
        assert_eq!(report.status, Status::Pass);
        assert_eq!(report.tested, g.order() * g.order() + 1 + exponent_log(&g) as u64);
    }
}

fn exponent_log(g: &Group) -> u32 {
    Subgroup::whole(g).unwrap().exponent_log().unwrap()
}

#[test]
fn exhaustive_and_sampled_modes_agree() {
    for spec in registry() {
        let g = Group::new(spec.build().unwrap());
        if g.order() > 1 << 10 {
            continue;
        }
        let sample = Mode::Sample { samples: 2000, seed: 7 };
        for (a, b) in [
            (check_commutator_orders(&g, Mode::Exhaustive), check_commutator_orders(&g, sample)),
            (check_order_p_lemma(&g, Mode::Exhaustive), check_order_p_lemma(&g, sample)),
        ] {
            let (a, b) = (a.unwrap(), b.unwrap());
            assert_eq!(a.status, b.status, "{} {}", spec.name(), a.name);
            assert_eq!(b.params["mode"], Param::from("sample"));
        }
    }
}

#[test]
fn sampling_is_reproducible() {
    let g = Group::new(example2().unwrap());
    let mode = Mode::Sample { samples: 500, seed: 42 };
    let a = check_commutator_orders(&g, mode).unwrap();
    let b = check_commutator_orders(&g, mode).unwrap();
    assert_eq!(a, b);
}

#[test]
fn order_p_lemma_examples() {
    for pres in [example2_odd(3).unwrap(), example2().unwrap(), abelian(3, &[2, 3]).unwrap()] {
        let g = Group::new(pres);
        let report = check_order_p_lemma(&g, Mode::Exhaustive).unwrap();
        assert_eq!(report.status, Status::Pass);
        assert!(report.tested > 1);
    }
}

#[test]
fn power_inclusion_examples() {
    let g = Group::new(example2().unwrap());
    let mut lattice = Lattice::new(&g).unwrap();
    let left = lattice.omega_agemo(1, 2).unwrap().agemo(1).unwrap();
    let right = lattice.omega_agemo(2, 1).unwrap();
    assert!(left.leq(&right).unwrap());
    // (Ω_2(G^2))^2 = <a^4, b^4, c^16> and Ω_1(G^4) = <a^4, b^4, c^16>.
    assert_eq!(left.order(), 8);
    assert_eq!(right.order(), 8);
    let whole_set = whole(&g);
    let omega_set = omega(&g, &agemo(&g, &whole_set, 1), 2);
    assert_eq!(set_of(&left), agemo(&g, &omega_set, 1));

    let report = check_power_inclusion(&g, 4, 4, 3).unwrap();
    assert_eq!(report.status, Status::Pass);
    assert_eq!(report.tested, 5 * 5 * 3);

    let g = Group::new(example2_odd(3).unwrap());
    assert_eq!(check_power_inclusion(&g, 2, 1, 1).unwrap().status, Status::Pass);
}

#[test]
fn shortening_lemma_examples() {
    let g = Group::new(example2_odd(3).unwrap());
    assert_eq!(check_shortening_lemma(&g, 2, 0).unwrap().status, Status::Pass);
    let mut lattice = Lattice::new(&g).unwrap();
    let mid = lattice.omega_agemo(2, 1).unwrap();
    // j > i: both sides are trivial
    assert!(mid.agemo(2).unwrap().is_trivial());
    assert!(mid.agemo(4).unwrap().is_trivial());
    let g = Group::new(abelian(5, &[2, 2]).unwrap());
    assert_eq!(check_shortening_lemma(&g, 4, 4).unwrap().status, Status::Pass);
    let g = Group::new(example2().unwrap());
    assert!(matches!(check_shortening_lemma(&g, 2, 2), Err(Error::Precondition(_))));
}

#[test]
fn omega_chains() {
    let g = Group::new(example2_odd(3).unwrap());
    let chain = build_omega_chain(&g, 1).unwrap();
    assert_eq!(chain.length(), 1);
    assert!(chain.terms()[0].derived().unwrap().is_trivial());

    let chain = build_omega_chain(&g, 2).unwrap();
    assert_eq!(chain.length(), 2);
    let h = &chain.terms()[0];
    assert_eq!(verify_chain(h, &chain).unwrap().status, Status::Pass);

    for i in 1..=4 {
        let report = check_omega_chain(&g, i).unwrap();
        assert_eq!(report.status, Status::Pass, "i = {i}");
    }
    let g = Group::new(abelian(3, &[2, 3]).unwrap());
    for i in 1..=4 {
        assert_eq!(check_omega_chain(&g, i).unwrap().status, Status::Pass);
    }
}

#[test]
fn class_bound_is_attained_for_odd_p() {
    let g = Group::new(example2_odd(3).unwrap());
    let report = verify_main_odd(&g, 2, 1).unwrap();
    assert_eq!(report.status, Status::Pass);
    assert_eq!(report.params["class_attained"], Param::from("i=2 j=1"));

    let g = Group::new(example1(3).unwrap());
    let report = verify_main_odd(&g, 1, 1).unwrap();
    assert_eq!(report.status, Status::Pass);
    let h = Lattice::new(&g).unwrap().omega_agemo(1, 1).unwrap();
    assert_eq!(h.order(), 3);
}

#[test]
fn class_bound_for_p_two_and_negative_control() {
    let g = Group::new(example2().unwrap());
    let mut lattice = Lattice::new(&g).unwrap();
    assert!(lattice.omega_agemo(2, 2).unwrap().derived().unwrap().is_trivial());
    assert!(lattice.omega_agemo(2, 1).unwrap().derived().unwrap().is_trivial());

    let reports = verify_main_even(&g, 3, 3).unwrap();
    assert_eq!(reports[0].status, Status::Pass);
    let control: Vec<_> = reports[1..].iter().map(|r| r.status).collect();
    assert_eq!(control, [Status::Pass, Status::ExpectedFail, Status::Pass]);
    assert_eq!(reports[2].witnesses, [el(&g, "c^16").into_exponents()]);
}

#[test]
fn suites_pass_on_the_trivial_group() {
    let g = Group::new(abelian(2, &[]).unwrap());
    let reports = run_suite(&g, &SuiteConfig::default(), &NoClock).unwrap();
    all_pass(&reports);
    assert!(reports.iter().any(|r| r.name == "class_bound_even"));
}

#[test]
fn suites_skip_non_powerful_groups() {
    for text in [D16, HEISENBERG3] {
        let g = Group::new(parse(text).unwrap());
        assert!(!is_powerful(&Subgroup::whole(&g).unwrap()).unwrap());
        let reports = run_suite(&g, &SuiteConfig::default(), &NoClock).unwrap();
        assert_eq!(reports[0].status, Status::Pass);
        assert!(reports[1..].iter().all(|r| r.status == Status::Skipped));
        assert!(matches!(
            check_commutator_orders(&g, Mode::Exhaustive),
            Err(Error::Precondition(_))
        ));
    }
}

#[test]
fn suite_order_is_deterministic() {
    let g = Group::new(example1(5).unwrap());
    let config = SuiteConfig { i_max: 2, j_max: 2, ..SuiteConfig::default() };
    let a = run_suite(&g, &config, &NoClock).unwrap();
    let b = run_suite(&g, &config, &NoClock).unwrap();
    assert_eq!(a, b);
    let names: Vec<_> = a.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(
        names,
        [
            "consistency",
            "powerful",
            "commutator_orders",
            "order_p_lemma",
            "power_inclusion",
            "shortening_lemma",
            "omega_chain",
            "omega_chain",
            "class_bound_odd"
        ]
    );
    all_pass(&a);
}
