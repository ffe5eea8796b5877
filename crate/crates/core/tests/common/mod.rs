//! Naive set-based reference implementations. Everything here works on
//! explicit element sets and uses only `multiply` and `inverse`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use pgroup_core::{Element, Group, Subgroup, Word};

pub type Set = BTreeSet<Vec<u32>>;

pub fn el(g: &Group, text: &str) -> Element {
    let w = Word::parse(text, g.presentation().names(), true).unwrap();
    g.normal_form(&w).unwrap()
}

fn elem(g: &Group, v: &[u32]) -> Element {
    g.element(v).unwrap()
}

pub fn mul(g: &Group, x: &[u32], y: &[u32]) -> Vec<u32> {
    g.multiply(&elem(g, x), &elem(g, y)).unwrap().into_exponents()
}

pub fn inv(g: &Group, x: &[u32]) -> Vec<u32> {
    g.inverse(&elem(g, x)).unwrap().into_exponents()
}

pub fn comm(g: &Group, x: &[u32], y: &[u32]) -> Vec<u32> {
    let xi = inv(g, x);
    let yi = inv(g, y);
    mul(g, &mul(g, &mul(g, &xi, &yi), x), y)
}

pub fn conj(g: &Group, x: &[u32], y: &[u32]) -> Vec<u32> {
    mul(g, &mul(g, &inv(g, y), x), y)
}

pub fn pow(g: &Group, x: &[u32], k: u64) -> Vec<u32> {
    let mut acc = vec![0; g.len()];
    for _ in 0..k {
        acc = mul(g, &acc, x);
    }
    acc
}

/// Smallest `k` with `x^{p^k} = 1`, by repeated multiplication.
pub fn order_log(g: &Group, x: &[u32]) -> u32 {
    let p = g.prime() as u64;
    let mut y = x.to_vec();
    let mut k = 0;
    while y.iter().any(|&e| e != 0) {
        y = pow(g, &y, p);
        k += 1;
    }
    k
}

/// Breadth-first closure under right multiplication by the generators.
pub fn close(g: &Group, gens: &[Vec<u32>]) -> Set {
    let id = vec![0; g.len()];
    let mut seen: Set = [id.clone()].into();
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = mul(g, &x, s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

pub fn normal_closure(g: &Group, gens: &[Vec<u32>], ambient: &[Vec<u32>]) -> Set {
    let mut gens = gens.to_vec();
    loop {
        let set = close(g, &gens);
        let missing = set
            .iter()
            .flat_map(|x| ambient.iter().map(move |a| (x, a)))
            .map(|(x, a)| conj(g, x, a))
            .find(|c| !set.contains(c));
        match missing {
            Some(c) => gens.push(c),
            None => return set,
        }
    }
}

pub fn commutator_subgroup(g: &Group, hg: &[Vec<u32>], kg: &[Vec<u32>]) -> Set {
    let comms: Vec<Vec<u32>> = hg
        .iter()
        .flat_map(|x| kg.iter().map(move |y| (x, y)))
        .map(|(x, y)| comm(g, x, y))
        .collect();
    let ambient: Vec<Vec<u32>> = hg.iter().chain(kg).cloned().collect();
    normal_closure(g, &comms, &ambient)
}

pub fn agemo(g: &Group, h: &Set, j: u32) -> Set {
    let q = (g.prime() as u64).pow(j);
    let powers: Vec<Vec<u32>> = h.iter().map(|x| pow(g, x, q)).collect();
    close(g, &powers)
}

pub fn omega(g: &Group, h: &Set, i: i64) -> Set {
    if i < 0 {
        return close(g, &[]);
    }
    let small: Vec<Vec<u32>> = h
        .iter()
        .filter(|x| order_log(g, x) as i64 <= i)
        .cloned()
        .collect();
    close(g, &small)
}

/// `{x ∈ H : [x, h] ∈ N for every h ∈ H}`.
pub fn central_preimage(g: &Group, h: &Set, n: &Set) -> Set {
    h.iter()
        .filter(|x| h.iter().all(|y| n.contains(&comm(g, x, y))))
        .cloned()
        .collect()
}

/// As [`central_preimage`], testing commutators only against generators of
/// `H`, which suffices when `N` is normal in `H`.
pub fn central_preimage_by_gens(g: &Group, h: &Set, hgens: &[Vec<u32>], n: &Set) -> Set {
    h.iter()
        .filter(|x| hgens.iter().all(|y| n.contains(&comm(g, x, y))))
        .cloned()
        .collect()
}

pub fn set_of(h: &Subgroup<'_>) -> Set {
    h.elements()
        .unwrap()
        .map(|x| x.unwrap().into_exponents())
        .collect()
}

pub fn gens_of(h: &Subgroup<'_>) -> Vec<Vec<u32>> {
    h.igs().map(|x| x.exponents().to_vec()).collect()
}

pub fn whole(g: &Group) -> Set {
    let gens: Vec<Vec<u32>> = g.generators().into_iter().map(Element::into_exponents).collect();
    close(g, &gens)
}
