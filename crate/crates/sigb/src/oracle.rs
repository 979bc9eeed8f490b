//! Classic Buchberger with Gebauer–Möller pair management.
//!
//! Deliberately built on `base` and `poly` alone so that it can check the
//! signature engines independently.

use std::cmp::Ordering;

use crate::base::{grevlex, Monomial};
use crate::engine::RunStats;
use crate::error::{Error, Result};
use crate::poly::{reduce, spoly, Polynomial, ReductionMode, Ring};

/// A critical pair of basis positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    pub degree: u32,
}

impl CriticalPair {
    fn new(polys: &[Polynomial], i: usize, j: usize) -> Self {
        let lcm = polys[i].lm().lcm_with(polys[j].lm());
        let degree = lcm.degree();
        CriticalPair { i: i.min(j), j: i.max(j), lcm, degree }
    }

    /// Normal strategy: degree, then lcm, then positions.
    fn cmp_selection(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| grevlex(&self.lcm, &other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

/// Options of the oracle engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerConfig {
    /// Apply the product and chain criteria.
    pub criteria: bool,
    pub reduction_mode: ReductionMode,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig {
            criteria: true,
            reduction_mode: ReductionMode::Full,
        }
    }
}

struct State {
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<CriticalPair>,
}

impl State {
    /// Gebauer–Möller update for the new element at position `h`.
    fn update(&mut self, h: usize, criteria: bool) {
        let basis: Vec<usize> = (0..h).filter(|&g| self.active[g]).collect();
        if !criteria {
            for g in basis {
                self.pairs.push(CriticalPair::new(&self.polys, g, h));
            }
            return;
        }
        let lh = self.polys[h].lm().clone();
        let cands: Vec<CriticalPair> = basis.iter().map(|&g| CriticalPair::new(&self.polys, g, h)).collect();
        let coprime: Vec<bool> = basis.iter().map(|&g| self.polys[g].lm().coprime(&lh)).collect();
        // Chain criterion among the new pairs: keep a pair unless another new
        // pair's lcm properly divides it; among equal lcms keep one, preferring
        // a coprime representative.
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a == b || !keep[b] || !cands[b].lcm.divides(&cands[a].lcm) {
                    continue;
                }
                if cands[b].lcm != cands[a].lcm {
                    keep[a] = false;
                    break;
                }
                // equal lcm: drop a in favour of b when b is coprime, or by position
                if coprime[b] && !coprime[a] || (coprime[b] == coprime[a] && b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // Product criterion.
        let fresh: Vec<CriticalPair> = cands
            .into_iter()
            .enumerate()
            .filter(|(a, _)| keep[*a] && !coprime[*a])
            .map(|(_, p)| p)
            .collect();
        // Chain criterion on old pairs.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let l1 = polys[p.i].lm().lcm_with(&lh);
            let l2 = polys[p.j].lm().lcm_with(&lh);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(fresh);
        for g in basis {
            if lh.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
    }

    fn pop(&mut self) -> Option<CriticalPair> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| self.pairs[a].cmp_selection(&self.pairs[b]))?;
        Some(self.pairs.swap_remove(best))
    }
}

/// A Gröbner basis of the ideal spanned by `inputs`.
pub fn buchberger(ring: &Ring, inputs: &[Polynomial], cfg: BuchbergerConfig, stats: &mut RunStats) -> Result<Vec<Polynomial>> {
    if inputs.iter().any(|f| f.is_zero()) {
        return Err(Error::ZeroOperand);
    }
    let mut st = State {
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut sorted: Vec<Polynomial> = inputs.iter().map(|f| f.monic(&ring.field)).collect();
    sorted.sort_by(|a, b| grevlex(a.lm(), b.lm()));
    for f in sorted {
        let current: Vec<Polynomial> = st.active_polys();
        let r = reduce(ring, &f, &current, cfg.reduction_mode, stats);
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        st.push(r.monic(&ring.field), cfg.criteria);
    }
    while let Some(p) = st.pop() {
        let s = spoly(ring, &st.polys[p.i], &st.polys[p.j])?;
        let current = st.active_polys();
        let r = reduce(ring, &s, &current, cfg.reduction_mode, stats);
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        st.push(r.monic(&ring.field), cfg.criteria);
    }
    let out = st.active_polys();
    stats.basis_size = out.len() as u64;
    Ok(out)
}

impl State {
    fn active_polys(&self) -> Vec<Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p.clone())
            .collect()
    }

    fn push(&mut self, p: Polynomial, criteria: bool) {
        self.polys.push(p);
        self.active.push(true);
        let h = self.polys.len() - 1;
        self.update(h, criteria);
    }
}

/// Canonical reduced form of a Gröbner basis: repeatedly replaces every
/// element by its full normal form modulo the others until nothing changes,
/// then sorts by increasing lead monomial. Monic throughout.
pub fn reduced_gb(ring: &Ring, g: &[Polynomial]) -> Vec<Polynomial> {
    let mut cur: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).map(|p| p.monic(&ring.field)).collect();
    cur.sort_by(|a, b| grevlex(a.lm(), b.lm()));
    let mut scratch = RunStats::default();
    loop {
        let mut changed = false;
        let mut k = 0;
        while k < cur.len() {
            let others: Vec<Polynomial> = cur
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, p)| p.clone())
                .collect();
            let r = reduce(ring, &cur[k], &others, ReductionMode::Full, &mut scratch).monic(&ring.field);
            if r.is_zero() {
                cur.remove(k);
                changed = true;
                continue;
            }
            if r != cur[k] {
                cur[k] = r;
                changed = true;
            }
            k += 1;
        }
        if !changed {
            break;
        }
    }
    cur.sort_by(|a, b| grevlex(a.lm(), b.lm()));
    cur
}

/// Whether two Gröbner bases have the same reduced form term for term.
pub fn verify_equivalence(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> bool {
    reduced_gb(ring, a) == reduced_gb(ring, b)
}

/// Whether every pairwise S-polynomial of `g` reduces to zero.
pub fn is_groebner_basis(ring: &Ring, g: &[Polynomial]) -> bool {
    let mut scratch = RunStats::default();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let Ok(s) = spoly(ring, &g[i], &g[j]) else { return false };
            if !reduce(ring, &s, g, ReductionMode::Full, &mut scratch).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Whether `f` lies in the ideal with Gröbner basis `g`.
pub fn in_ideal(ring: &Ring, f: &Polynomial, g: &[Polynomial]) -> bool {
    let mut scratch = RunStats::default();
    reduce(ring, f, g, ReductionMode::Full, &mut scratch).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Field;
    use crate::bench::{gen_named, parse_polynomial};

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(Field::new(32003).unwrap(), vars.iter().map(|s| s.to_string()).collect())
    }

    fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|x| parse_polynomial(r, x).unwrap()).collect()
    }

    #[test]
    fn product_criterion_only() {
        let r = ring(&["x", "y"]);
        let mut st = RunStats::default();
        let g = buchberger(&r, &polys(&r, &["x", "y"]), BuchbergerConfig::default(), &mut st).unwrap();
        assert_eq!(g, polys(&r, &["y", "x"]));
        assert_eq!(st.s_reduction_steps, 0);
    }

    #[test]
    fn cyclic3() {
        let sys = gen_named("cyclic", 3).unwrap();
        let mut st = RunStats::default();
        let g = buchberger(&sys.ring, &sys.gens, BuchbergerConfig::default(), &mut st).unwrap();
        let red = reduced_gb(&sys.ring, &g);
        let want = polys(&sys.ring, &["x1+x2+x3", "x2^2+x2*x3+x3^2", "x3^3-1"]);
        assert_eq!(red, want);
        assert!(is_groebner_basis(&sys.ring, &red));
        for f in &sys.gens {
            assert!(in_ideal(&sys.ring, f, &red));
        }
    }

    #[test]
    fn reduced_gb_examples() {
        let r = ring(&["x", "y"]);
        let g = reduced_gb(&r, &polys(&r, &["x", "x+y"]));
        assert_eq!(g, polys(&r, &["y", "x"]));
        assert_eq!(reduced_gb(&r, &g), g);
        assert!(verify_equivalence(&r, &g, &g));
        assert!(!verify_equivalence(&r, &polys(&r, &["x"]), &polys(&r, &["y"])));
    }

    #[test]
    fn criteria_do_not_change_the_result() {
        for (name, n) in [("cyclic", 4), ("katsura", 3), ("eco", 4), ("noon", 3)] {
            let sys = gen_named(name, n).unwrap();
            let mut a = RunStats::default();
            let mut b = RunStats::default();
            let with = buchberger(&sys.ring, &sys.gens, BuchbergerConfig::default(), &mut a).unwrap();
            let without = buchberger(
                &sys.ring,
                &sys.gens,
                BuchbergerConfig {
                    criteria: false,
                    ..Default::default()
                },
                &mut b,
            )
            .unwrap();
            assert!(verify_equivalence(&sys.ring, &with, &without), "{name}-{n}");
            assert!(a.zero_reductions <= b.zero_reductions);
            assert!(is_groebner_basis(&sys.ring, &with));
        }
    }

    #[test]
    fn top_reduction_mode_agrees() {
        let sys = gen_named("katsura", 4).unwrap();
        let mut st = RunStats::default();
        let full = buchberger(&sys.ring, &sys.gens, BuchbergerConfig::default(), &mut st).unwrap();
        let top = buchberger(
            &sys.ring,
            &sys.gens,
            BuchbergerConfig {
                reduction_mode: ReductionMode::Top,
                ..Default::default()
            },
            &mut st,
        )
        .unwrap();
        assert!(verify_equivalence(&sys.ring, &full, &top));
    }
}
