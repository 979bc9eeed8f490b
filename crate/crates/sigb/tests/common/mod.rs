//! Fixtures and checkers shared by the integration test targets.
#![allow(dead_code)]

use std::cmp::Ordering;

use sigb::bench::{gen_named, gen_random, parse_system, SystemSpec};
use sigb::sigcore::SigBasis;
use sigb::{Polynomial, SigRun};

/// Named systems small enough for the exhaustive grids.
pub const NAMED: &[(&str, usize)] = &[
    ("cyclic", 4),
    ("cyclic", 5),
    ("katsura", 3),
    ("katsura", 4),
    ("eco", 4),
    ("eco", 5),
    ("noon", 3),
    ("noon", 4),
];

/// Seeded random systems: `(n, dmin, dmax, seed, homogeneous)`.
pub const RANDOM: &[(usize, u32, u32, u64, bool)] = &[
    (3, 2, 3, 1, false),
    (3, 2, 3, 2, false),
    (3, 2, 3, 3, false),
    (4, 2, 2, 1, true),
    (4, 2, 2, 2, true),
    (4, 2, 3, 3, true),
];

pub fn fixtures() -> Vec<SystemSpec> {
    let mut out: Vec<SystemSpec> = NAMED.iter().map(|&(name, n)| gen_named(name, n).unwrap()).collect();
    out.extend(RANDOM.iter().map(|&(n, lo, hi, seed, hom)| gen_random(n, lo, hi, seed, hom).unwrap()));
    out
}

/// `x,y,z,t` system over GF(`p`).
pub fn system(p: u32, vars: &str, gens: &[&str]) -> SystemSpec {
    parse_system(&format!("p {p}\nvars {vars}\n{}\n", gens.join("\n"))).unwrap()
}

/// Pairs `(i, j)` such that `G[j]` top s-reduces `G[i]`: some `b` with
/// `b·lm(G[j]) = lm(G[i])` and `b·sig(G[j]) <= sig(G[i])`.
pub fn top_s_reducible_pairs(run: &SigRun) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in run.basis.iter().enumerate() {
        for (j, b) in run.basis.iter().enumerate() {
            if i == j || !b.lm().divides(a.lm()) {
                continue;
            }
            let m = b.lm().quotient_of(a.lm());
            if run.order.cmp(&b.sig.mul(&m), &a.sig) != Ordering::Greater {
                out.push((i, j));
            }
        }
    }
    out
}

/// The basis of a run rebuilt as a [`SigBasis`] in insertion order.
pub fn sig_basis(run: &SigRun) -> SigBasis {
    let mut elems = run.basis.clone();
    elems.sort_by_key(|e| e.ordinal);
    let mut g = SigBasis::new();
    for e in elems {
        g.push(e.sig, e.poly);
    }
    g
}

/// Whether no stored syzygy signature divides another one.
pub fn syzygies_minimal(run: &SigRun) -> bool {
    let sigs: Vec<_> = run.syzygies.iter().collect();
    sigs.iter()
        .enumerate()
        .all(|(i, s)| sigs.iter().enumerate().all(|(j, t)| i == j || !s.divides(t)))
}

pub fn same_up_to_scalar(field: &sigb::Field, a: &Polynomial, b: &Polynomial) -> bool {
    a.monic(field) == b.monic(field)
}
