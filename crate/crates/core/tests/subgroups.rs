mod common;

use common::*;
use pgroup_core::corpus::{example1, example2};
use pgroup_core::subgroup::{close, commutator_subgroup, normal_closure};
use pgroup_core::{Group, Subgroup};

fn ex1() -> Group {
    Group::new(example1(3).unwrap())
}

fn ex2() -> Group {
    Group::new(example2().unwrap())
}

#[test]
fn closure_examples() {
    let g = ex1();
    let h = close(&g, &[el(&g, "a"), el(&g, "b"), el(&g, "c^3")]).unwrap();
    assert_eq!(h.order(), 27);
    let oracle = common::close(&g, &gens_of(&h));
    assert_eq!(set_of(&h), oracle);
    let whole = Subgroup::whole(&g).unwrap();
    assert!(h.equals(&whole.omega(1).unwrap()).unwrap());
    assert!(h.leq(&whole).unwrap());
    assert!(!whole.leq(&h).unwrap());
    assert_eq!(set_of(&whole).len(), 81);

    let g = ex2();
    let h = close(&g, &[el(&g, "a^2"), el(&g, "b^2")]).unwrap();
    let oracle = common::close(&g, &[el(&g, "a^2").into_exponents(), el(&g, "b^2").into_exponents()]);
    assert_eq!(h.order(), 32);
    assert_eq!(set_of(&h), oracle);
    assert!(h.contains(&el(&g, "c^16")).unwrap());
    let c16 = close(&g, &[el(&g, "c^16")]).unwrap();
    assert!(c16.leq(&h).unwrap());
}

#[test]
fn contains_matches_enumeration() {
    let g = ex2();
    let h = close(&g, &[el(&g, "a^2*c"), el(&g, "b^4")]).unwrap();
    let members = set_of(&h);
    for x in Subgroup::whole(&g).unwrap().elements().unwrap() {
        let x = x.unwrap();
        assert_eq!(h.contains(&x).unwrap(), members.contains(x.exponents()));
    }
}

#[test]
fn normal_closure_examples() {
    let g = ex2();
    let n = normal_closure(&g, &[el(&g, "c^4")], &g.generators()).unwrap();
    assert_eq!(n.order(), 8);

    let g = ex1();
    let n = normal_closure(&g, &[el(&g, "a")], &g.generators()).unwrap();
    assert_eq!(n.order(), 9);
    assert!(n.contains(&el(&g, "c^3")).unwrap());
    let ambient: Vec<Vec<u32>> = g.generators().into_iter().map(|x| x.into_exponents()).collect();
    assert_eq!(set_of(&n), common::normal_closure(&g, &[el(&g, "a").into_exponents()], &ambient));
}

#[test]
fn commutator_subgroup_examples() {
    let g = ex2();
    let whole = Subgroup::whole(&g).unwrap();
    let d = whole.derived().unwrap();
    assert_eq!(d.order(), 8);
    assert!(d.equals(&close(&g, &[el(&g, "c^4")]).unwrap()).unwrap());

    let h = close(&g, &[el(&g, "a^2"), el(&g, "b^2")]).unwrap();
    let d = commutator_subgroup(&h, &h).unwrap();
    assert_eq!(d.order(), 2);
    assert!(d.contains(&el(&g, "c^16")).unwrap());
    assert_eq!(set_of(&d), common::commutator_subgroup(&g, &gens_of(&h), &gens_of(&h)));

    let c = close(&g, &[el(&g, "c")]).unwrap();
    assert!(c.derived().unwrap().is_trivial());
}

#[test]
fn agemo_and_omega_examples() {
    let g = ex2();
    let whole = Subgroup::whole(&g).unwrap();
    let g2 = whole.agemo(1).unwrap();
    assert_eq!(g2.order(), 256);
    assert!(g2
        .equals(&close(&g, &[el(&g, "a^2"), el(&g, "b^2"), el(&g, "c^2")]).unwrap())
        .unwrap());
    assert_eq!(set_of(&g2), common::agemo(&g, &whole_set(&g), 1));

    let w = g2.omega(2).unwrap();
    assert_eq!(w.order(), 64);
    for x in ["a^2", "b^2", "c^8"] {
        assert!(w.contains(&el(&g, x)).unwrap(), "{x}");
    }
    assert!(!w.derived().unwrap().is_trivial());
    assert_eq!(w.exponent().unwrap(), 4);
    assert_eq!(set_of(&w), common::omega(&g, &set_of(&g2), 2));

    assert!(whole.omega(-1).unwrap().is_trivial());
    assert!(whole.agemo(0).unwrap().equals(&whole).unwrap());

    let g = ex1();
    let whole = Subgroup::whole(&g).unwrap();
    let g3 = whole.agemo(1).unwrap();
    assert_eq!(g3.order(), 3);
    assert!(g3.contains(&el(&g, "c^3")).unwrap());
    let o1 = whole.omega(1).unwrap();
    assert_eq!(o1.order(), 27);
    assert!(o1.is_normal_in(&whole).unwrap());
    assert_eq!(whole.index(&o1).unwrap(), 3);
    assert_eq!(Subgroup::trivial(&g).exponent().unwrap(), 1);
}

fn whole_set(g: &Group) -> Set {
    common::whole(g)
}

#[test]
fn center_of_example2_matches_brute_force() {
    let g = ex2();
    let whole = Subgroup::whole(&g).unwrap();
    let z = whole.central_preimage(&Subgroup::trivial(&g)).unwrap();
    let all = whole_set(&g);
    let oracle = common::central_preimage(&g, &all, &common::close(&g, &[]));
    assert_eq!(set_of(&z), oracle);
    // [a, b^t] = c^{4t}, so only b^8 = 1 commutes with a: the center is <c>.
    assert_eq!(z.order(), 32);
    assert!(z.equals(&close(&g, &[el(&g, "c")]).unwrap()).unwrap());

    assert!(whole.central_preimage(&whole).unwrap().equals(&whole).unwrap());
    let c = close(&g, &[el(&g, "c")]).unwrap();
    assert!(c.central_preimage(&Subgroup::trivial(&g)).unwrap().equals(&c).unwrap());
}

#[test]
fn central_preimage_requires_a_normal_subgroup() {
    let g = ex1();
    let whole = Subgroup::whole(&g).unwrap();
    let a = close(&g, &[el(&g, "a")]).unwrap();
    assert!(whole.central_preimage(&a).is_err());
}

#[test]
fn index_of_a_non_subgroup_is_an_error() {
    let g = ex1();
    let a = close(&g, &[el(&g, "a")]).unwrap();
    let b = close(&g, &[el(&g, "b")]).unwrap();
    assert!(a.index(&b).is_err());
}
