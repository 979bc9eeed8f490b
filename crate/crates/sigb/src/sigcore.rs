//! Sig-poly pairs, regular s-reduction, S-pairs, syzygy signatures and the
//! rewrite machinery shared by every signature engine.

use std::cmp::Ordering;

use crate::base::{grevlex_products, Field, FieldElement, Monomial};
use crate::engine::RunStats;
use crate::error::{Error, Result};
use crate::poly::{add_scaled_terms, Polynomial, ReductionMode, Term};
use crate::sigspace::{ModuleOrder, Signature};

/// One basis element: signature, polynomial part and insertion ordinal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigPoly {
    pub sig: Signature,
    pub poly: Polynomial,
    pub ordinal: usize,
}

impl SigPoly {
    #[inline]
    pub fn lm(&self) -> &Monomial {
        self.poly.lm()
    }
}

/// Lead signatures of known syzygies, kept minimal under divisibility.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SyzygySet {
    by_index: Vec<Vec<Monomial>>,
    len: usize,
    entered: usize,
}

impl SyzygySet {
    pub fn new() -> Self {
        SyzygySet::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of signatures ever offered to [`SyzygySet::insert`], whether
    /// kept, rejected as divisible or pruned later. This is the size of `H`
    /// as a plain collection of syzygies.
    pub fn entered(&self) -> usize {
        self.entered
    }

    /// Whether some member divides `s`.
    #[inline]
    pub fn divides(&self, s: &Signature) -> bool {
        match self.by_index.get(s.index - 1) {
            Some(list) => list.iter().any(|h| h.divides(&s.mon)),
            None => false,
        }
    }

    /// Adds `s` unless a member divides it; drops members that `s` divides.
    /// Returns whether the set changed.
    pub fn insert(&mut self, s: Signature) -> bool {
        self.entered += 1;
        if self.divides(&s) {
            return false;
        }
        if self.by_index.len() < s.index {
            self.by_index.resize_with(s.index, Vec::new);
        }
        let list = &mut self.by_index[s.index - 1];
        let before = list.len();
        list.retain(|h| !s.mon.divides(h));
        self.len -= before - list.len();
        list.push(s.mon);
        self.len += 1;
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = Signature> + '_ {
        self.by_index
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().map(move |m| Signature::new(m.clone(), i + 1)))
    }
}

/// Syzygy criterion: `T` is divisible by a known syzygy signature.
pub fn is_predictably_syzygy(t: &Signature, h: &SyzygySet) -> bool {
    h.divides(t)
}

/// The two rewrite orders on `G ∪ H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RewriteOrder {
    #[default]
    Add,
    Rat,
}

impl RewriteOrder {
    pub fn name(&self) -> &'static str {
        match self {
            RewriteOrder::Add => "add",
            RewriteOrder::Rat => "rat",
        }
    }
}

impl std::str::FromStr for RewriteOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "add" => Ok(RewriteOrder::Add),
            "rat" => Ok(RewriteOrder::Rat),
            _ => Err(Error::InvalidArgument(format!("unknown rewrite order `{s}`"))),
        }
    }
}

/// An element of `G ∪ H` as seen by the rewrite order.
#[derive(Debug, Clone, Copy)]
pub enum Member<'a> {
    Basis(&'a SigPoly),
    Syzygy(&'a Signature),
}

/// Rewrite-order comparison. Syzygy members are maximal; among syzygies the
/// module order decides.
pub fn cmp_rewrite(rw: RewriteOrder, order: &ModuleOrder, a: Member<'_>, b: Member<'_>) -> Ordering {
    match (a, b) {
        (Member::Syzygy(s), Member::Syzygy(t)) => order.cmp(s, t),
        (Member::Syzygy(_), Member::Basis(_)) => Ordering::Greater,
        (Member::Basis(_), Member::Syzygy(_)) => Ordering::Less,
        (Member::Basis(x), Member::Basis(y)) => match rw {
            RewriteOrder::Add => x.ordinal.cmp(&y.ordinal).then_with(|| x.sig.index.cmp(&y.sig.index)),
            RewriteOrder::Rat => order
                .cmp_mul(y.lm(), &x.sig, x.lm(), &y.sig)
                .then_with(|| order.cmp(&x.sig, &y.sig)),
        },
    }
}

/// The canonical rewriter found by [`SigBasis::canonical_rewriter`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rewriter {
    /// Position in the basis.
    Basis(usize),
    Syzygy(Signature),
}

/// A regular S-pair `big_mult·big − small_mult·small` with `sig = big_mult·sig(big)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPair {
    pub sig: Signature,
    pub lcm: Monomial,
    pub big: usize,
    pub big_mult: Monomial,
    pub small: usize,
    pub small_mult: Monomial,
    pub degree: u32,
}

/// Result of forming an S-pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairOutcome {
    Regular(SPair),
    Singular,
}

/// The basis `G` with per-index lookup tables.
#[derive(Debug, Clone, Default)]
pub struct SigBasis {
    elems: Vec<SigPoly>,
    by_index: Vec<Vec<usize>>,
    next_ordinal: usize,
}

impl SigBasis {
    pub fn new() -> Self {
        SigBasis::default()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[SigPoly] {
        &self.elems
    }

    pub fn get(&self, k: usize) -> &SigPoly {
        &self.elems[k]
    }

    pub fn into_elems(self) -> Vec<SigPoly> {
        self.elems
    }

    /// Appends a nonzero element and returns its position.
    pub fn push(&mut self, sig: Signature, poly: Polynomial) -> usize {
        debug_assert!(!poly.is_zero());
        if self.by_index.len() < sig.index {
            self.by_index.resize_with(sig.index, Vec::new);
        }
        let k = self.elems.len();
        self.by_index[sig.index - 1].push(k);
        self.elems.push(SigPoly {
            sig,
            poly,
            ordinal: self.next_ordinal,
        });
        self.next_ordinal += 1;
        k
    }

    fn same_index(&self, index: usize) -> &[usize] {
        self.by_index.get(index - 1).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Whether basis element `other` is rewrite-greater than `k` at a common
    /// multiple signature (both signatures share the index).
    #[inline]
    fn beats(&self, rw: RewriteOrder, other: usize, k: usize) -> bool {
        let a = &self.elems[k];
        let b = &self.elems[other];
        match rw {
            RewriteOrder::Add => b.ordinal > a.ordinal,
            RewriteOrder::Rat => match grevlex_products(&a.sig.mon, b.lm(), &b.sig.mon, a.lm()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => b.sig.mon.degree() > a.sig.mon.degree()
                    || (b.sig.mon.degree() == a.sig.mon.degree()
                        && crate::base::grevlex(&b.sig.mon, &a.sig.mon) == Ordering::Greater),
            },
        }
    }

    /// The rewrite-maximal member of `G ∪ H` whose signature divides `t`.
    pub fn canonical_rewriter(&self, t: &Signature, h: &SyzygySet, rw: RewriteOrder, order: &ModuleOrder) -> Result<Rewriter> {
        if let Some(list) = h.by_index.get(t.index - 1) {
            let mut best: Option<Signature> = None;
            for m in list.iter().filter(|m| m.divides(&t.mon)) {
                let s = Signature::new(m.clone(), t.index);
                if best.as_ref().is_none_or(|b| order.cmp(&s, b) == Ordering::Greater) {
                    best = Some(s);
                }
            }
            if let Some(s) = best {
                return Ok(Rewriter::Syzygy(s));
            }
        }
        let mut best: Option<usize> = None;
        for &k in self.same_index(t.index) {
            if self.elems[k].sig.mon.divides(&t.mon) && best.is_none_or(|b| self.beats(rw, k, b)) {
                best = Some(k);
            }
        }
        best.map(Rewriter::Basis).ok_or(Error::NoRewriter)
    }

    /// Whether `mult·G[k]` is not the canonical rewriter in its signature.
    pub fn is_rewritable(&self, mult: &Monomial, k: usize, h: &SyzygySet, rw: RewriteOrder) -> bool {
        let a = &self.elems[k];
        let t = a.sig.mul(mult);
        if h.divides(&t) {
            return true;
        }
        let list = self.same_index(t.index);
        match rw {
            RewriteOrder::Add => {
                // Later insertions dominate; only those can beat `k`.
                for &j in list.iter().rev() {
                    if self.elems[j].ordinal <= a.ordinal {
                        break;
                    }
                    if self.elems[j].sig.mon.divides(&t.mon) {
                        return true;
                    }
                }
                false
            }
            RewriteOrder::Rat => list
                .iter()
                .any(|&j| j != k && self.elems[j].sig.mon.divides(&t.mon) && self.beats(rw, j, k)),
        }
    }

    /// Rewritability of an S-pair: either multiplied generator is not canonical.
    pub fn rewritable(&self, sp: &SPair, h: &SyzygySet, rw: RewriteOrder) -> bool {
        self.is_rewritable(&sp.big_mult, sp.big, h, rw) || self.is_rewritable(&sp.small_mult, sp.small, h, rw)
    }

    /// Forms the S-pair of elements `i` and `j`.
    pub fn make_spair(&self, i: usize, j: usize, order: &ModuleOrder) -> Result<PairOutcome> {
        let (a, b) = (&self.elems[i], &self.elems[j]);
        if a.poly.is_zero() || b.poly.is_zero() {
            return Err(Error::ZeroOperand);
        }
        let lcm = a.lm().lcm_with(b.lm());
        let ma = a.lm().quotient_of(&lcm);
        let mb = b.lm().quotient_of(&lcm);
        let sa = a.sig.mul(&ma);
        let sb = b.sig.mul(&mb);
        let degree = lcm.degree();
        Ok(match order.cmp(&sa, &sb) {
            Ordering::Equal => PairOutcome::Singular,
            Ordering::Greater => PairOutcome::Regular(SPair {
                sig: sa,
                lcm,
                big: i,
                big_mult: ma,
                small: j,
                small_mult: mb,
                degree,
            }),
            Ordering::Less => PairOutcome::Regular(SPair {
                sig: sb,
                lcm,
                big: j,
                big_mult: mb,
                small: i,
                small_mult: ma,
                degree,
            }),
        })
    }

    /// Polynomial part of an S-pair (both sides are monic in `G`).
    pub fn spoly(&self, field: &Field, sp: &SPair, stats: &mut RunStats) -> Polynomial {
        let big = &self.elems[sp.big].poly;
        let small = &self.elems[sp.small].poly;
        let left = big.mul_term(field, field.inv(big.lc()).unwrap(), &sp.big_mult);
        let c = field.neg(field.inv(small.lc()).unwrap());
        let (terms, mults) = add_scaled_terms(field, left.terms(), c, &sp.small_mult, small.terms());
        stats.multiplications += mults;
        Polynomial::from_sorted(terms)
    }

    /// A reducer `b·G[k]` of the term `t` with `b·sig(G[k]) < cap`: the
    /// signature-minimal candidate that is not rewritable, falling back to the
    /// signature-minimal admissible one.
    pub fn find_regular_reducer(
        &self,
        t: &Monomial,
        cap: &Signature,
        h: &SyzygySet,
        order: &ModuleOrder,
        rw: RewriteOrder,
    ) -> Option<(Monomial, usize)> {
        let mut cands: Vec<(Signature, Monomial, usize)> = Vec::new();
        for (k, e) in self.elems.iter().enumerate() {
            let lm = e.lm();
            if !lm.divides(t) {
                continue;
            }
            let b = lm.quotient_of(t);
            let s = e.sig.mul(&b);
            if order.cmp(&s, cap) == Ordering::Less {
                cands.push((s, b, k));
            }
        }
        match cands.len() {
            0 => return None,
            1 => {
                let (_, b, k) = cands.pop().unwrap();
                return Some((b, k));
            }
            _ => {}
        }
        cands.sort_by(|x, y| order.cmp(&x.0, &y.0));
        let pick = cands
            .iter()
            .position(|(_, b, k)| !self.is_rewritable(b, *k, h, rw))
            .unwrap_or(0);
        let (_, b, k) = cands.swap_remove(pick);
        Some((b, k))
    }

    /// Whether some `b·G[k]` has lead `lm` and signature exactly `sig`.
    pub fn is_singular_top_reducible(&self, sig: &Signature, lm: &Monomial) -> bool {
        self.same_index(sig.index).iter().any(|&k| {
            let e = &self.elems[k];
            e.lm().divides(lm) && e.sig.mon.divides(&sig.mon) && {
                let b = e.lm().quotient_of(lm);
                e.sig.mon.mul(&b) == sig.mon
            }
        })
    }

    /// Regular s-reduction of `p` (signature `sig`) by the basis. The result is
    /// monic or zero; its signature is still `sig`.
    #[allow(clippy::too_many_arguments)]
    pub fn regular_s_reduce(
        &self,
        field: &Field,
        p: Polynomial,
        sig: &Signature,
        h: &SyzygySet,
        order: &ModuleOrder,
        rw: RewriteOrder,
        mode: ReductionMode,
        stats: &mut RunStats,
    ) -> Polynomial {
        let mut terms: Vec<Term> = p.terms().to_vec();
        let mut pos = 0;
        let mut done: Vec<Term> = Vec::new();
        while pos < terms.len() {
            let t = &terms[pos];
            match self.find_regular_reducer(&t.mon, sig, h, order, rw) {
                Some((b, k)) => {
                    let red = &self.elems[k].poly;
                    debug_assert_eq!(order.cmp(&self.elems[k].sig.mul(&b), sig), Ordering::Less);
                    let c: FieldElement = field.neg(field.mul(t.coef, field.inv(red.lc()).unwrap()));
                    let (next, mults) = add_scaled_terms(field, &terms[pos..], c, &b, red.terms());
                    stats.multiplications += mults;
                    stats.s_reduction_steps += 1;
                    terms = next;
                    pos = 0;
                }
                None => {
                    if mode == ReductionMode::Top {
                        break;
                    }
                    done.push(terms[pos].clone());
                    pos += 1;
                }
            }
        }
        done.extend_from_slice(&terms[pos..]);
        Polynomial::from_sorted(done).monic(field)
    }
}

/// Lead signatures of the Koszul syzygies `f_i e_j − f_j e_i`, pruned.
pub fn koszul_init(inputs: &[Polynomial], order: &ModuleOrder) -> SyzygySet {
    let mut h = SyzygySet::new();
    for i in 0..inputs.len() {
        for j in i + 1..inputs.len() {
            let sj = Signature::new(inputs[i].lm().clone(), j + 1);
            let si = Signature::new(inputs[j].lm().clone(), i + 1);
            match order.cmp(&sj, &si) {
                Ordering::Greater => {
                    h.insert(sj);
                }
                Ordering::Less => {
                    h.insert(si);
                }
                Ordering::Equal => {}
            }
        }
    }
    h
}

/// Adds `lm(G[k])·e_i` for every input `f_i` for which it is the lead signature
/// of the principal syzygy `f_i·G[k] − G[k]·e_i`, i.e. exceeds `sig(G[k])·lm(f_i)`.
/// Under pot and dpot these are exactly the later indices.
pub fn regenerate_against_inputs(g: &SigBasis, k: usize, inputs: &[Polynomial], h: &mut SyzygySet, order: &ModuleOrder) {
    let gamma = g.get(k);
    for (i, f) in inputs.iter().enumerate() {
        if i + 1 == gamma.sig.index {
            continue;
        }
        let s1 = Signature::new(gamma.lm().clone(), i + 1);
        let s2 = gamma.sig.mul(f.lm());
        if order.cmp(&s1, &s2) == Ordering::Greater {
            h.insert(s1);
        }
    }
}

/// Adds the lead signatures of the principal syzygies between `G[k]` and every
/// other basis element.
pub fn gvw2013_regenerate(g: &SigBasis, k: usize, h: &mut SyzygySet, order: &ModuleOrder) {
    let gamma = g.get(k);
    for (j, alpha) in g.elems().iter().enumerate() {
        if j == k {
            continue;
        }
        let s1 = gamma.sig.mul(alpha.lm());
        let s2 = alpha.sig.mul(gamma.lm());
        match order.cmp(&s1, &s2) {
            Ordering::Greater => {
                h.insert(s1);
            }
            Ordering::Less => {
                h.insert(s2);
            }
            Ordering::Equal => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::parse_polynomial;
    use crate::poly::Ring;
    use crate::sigspace::ModuleOrderKind;
    use proptest::prelude::*;

    fn ring(p: u32, vars: &str) -> Ring {
        Ring::new(Field::new(p).unwrap(), vars.split(',').map(String::from).collect())
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn f7() -> (Ring, Vec<Polynomial>) {
        let r = ring(7, "x,y,z,t");
        let gens = ["y*z-2*t^2", "x*y+t^2", "x^2*z+3*x*t^2-2*y*t^2"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        (r, gens)
    }

    #[test]
    fn syzygy_set_prunes() {
        let mut h = SyzygySet::new();
        assert!(h.insert(Signature::new(m(&[1, 2, 0]), 2)));
        assert!(h.insert(Signature::new(m(&[0, 2, 0]), 2)));
        assert_eq!(h.len(), 1);
        assert!(!h.insert(Signature::new(m(&[1, 2, 0]), 2)));
        assert!(is_predictably_syzygy(&Signature::new(m(&[1, 2, 0]), 2), &h));
        assert!(!is_predictably_syzygy(&Signature::new(m(&[1, 2, 0]), 3), &h));
    }

    #[test]
    fn koszul_examples() {
        let r = ring(5, "x,y,z");
        let gens: Vec<Polynomial> = ["y^2+4*y*z", "2*x^2+3*x*y+4*y^2+3*z^2", "3*x^2+4*x*y+2*y^2"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let o = ModuleOrder::new(ModuleOrderKind::Pot, &gens).unwrap();
        let h = koszul_init(&gens, &o);
        let mut got: Vec<Signature> = h.iter().collect();
        got.sort_by(|a, b| o.cmp(a, b));
        assert_eq!(
            got,
            vec![
                Signature::new(m(&[0, 2, 0]), 2),
                Signature::new(m(&[0, 2, 0]), 3),
                Signature::new(m(&[2, 0, 0]), 3)
            ]
        );
        assert!(koszul_init(&gens[..1], &o).is_empty());
    }

    #[test]
    fn koszul_matches_bruteforce_with_pruning() {
        let r = ring(32003, "x,y");
        // lt f1 = y^2, lt f2 = x y^2, lt f3 = y^2 x^0 + ... ensure duplicate-divisible entries
        let gens: Vec<Polynomial> = ["y^2+x", "x*y^2+1", "x^3+y"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let o = ModuleOrder::new(ModuleOrderKind::Pot, &gens).unwrap();
        let h = koszul_init(&gens, &o);
        // brute force: all larger Koszul signatures, then remove multiples
        let mut all = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                let a = Signature::new(gens[i].lm().clone(), j + 1);
                let b = Signature::new(gens[j].lm().clone(), i + 1);
                all.push(if o.cmp(&a, &b) == Ordering::Greater { a } else { b });
            }
        }
        let minimal: Vec<&Signature> = all
            .iter()
            .filter(|s| !all.iter().any(|t| t != *s && t.divides(s)))
            .collect();
        assert_eq!(h.len(), minimal.len());
        for s in minimal {
            assert!(h.iter().any(|t| &t == s));
        }
        // y^2 e3 divides x y^2 e3
        assert_eq!(h.len(), 2);
    }

    #[test]
    fn f7_spairs_and_rewriters() {
        let (r, gens) = f7();
        let o = ModuleOrder::new(ModuleOrderKind::Pot, &gens).unwrap();
        let mut g = SigBasis::new();
        g.push(Signature::unit(4, 1), gens[0].monic(&r.field));
        g.push(Signature::unit(4, 2), gens[1].monic(&r.field));
        let PairOutcome::Regular(sp) = g.make_spair(1, 0, &o).unwrap() else {
            panic!("expected a regular pair")
        };
        assert_eq!(sp.sig, Signature::new(m(&[0, 0, 1, 0]), 2));
        assert_eq!(sp.degree, 3);
        assert_eq!(g.make_spair(0, 0, &o).unwrap(), PairOutcome::Singular);
        let mut st = RunStats::default();
        let s = g.spoly(&r.field, &sp, &mut st);
        assert_eq!(s.monic(&r.field), parse_polynomial(&r, "x*t^2+4*z*t^2").unwrap());
        // H members win the rewriter contest
        let mut h = SyzygySet::new();
        h.insert(Signature::new(m(&[0, 0, 1, 0]), 2));
        assert_eq!(
            g.canonical_rewriter(&Signature::new(m(&[1, 0, 1, 0]), 2), &h, RewriteOrder::Rat, &o)
                .unwrap(),
            Rewriter::Syzygy(Signature::new(m(&[0, 0, 1, 0]), 2))
        );
        assert!(g.rewritable(&sp, &h, RewriteOrder::Add));
        assert!(!g.rewritable(&sp, &SyzygySet::new(), RewriteOrder::Add));
        assert_eq!(
            g.canonical_rewriter(&Signature::unit(4, 3), &SyzygySet::new(), RewriteOrder::Add, &o),
            Err(Error::NoRewriter)
        );
    }

    #[test]
    fn reducer_search_respects_cap() {
        let (r, gens) = f7();
        let o = ModuleOrder::new(ModuleOrderKind::Pot, &gens).unwrap();
        let mut g = SigBasis::new();
        g.push(Signature::unit(4, 1), gens[0].monic(&r.field));
        let h = SyzygySet::new();
        let yz = m(&[0, 1, 1, 0]);
        assert!(g.find_regular_reducer(&m(&[1, 0, 0, 0]), &Signature::unit(4, 2), &h, &o, RewriteOrder::Add).is_none());
        assert_eq!(
            g.find_regular_reducer(&yz, &Signature::unit(4, 2), &h, &o, RewriteOrder::Add),
            Some((Monomial::one(4), 0))
        );
        assert!(g.find_regular_reducer(&yz, &Signature::unit(4, 1), &h, &o, RewriteOrder::Add).is_none());
        assert!(!g.is_singular_top_reducible(&Signature::unit(4, 2), &yz));
        assert!(g.is_singular_top_reducible(&Signature::new(m(&[1, 0, 0, 0]), 1), &m(&[1, 1, 1, 0])));
    }

    #[test]
    fn gvw2013_examples() {
        let (r, gens) = f7();
        let o = ModuleOrder::new(ModuleOrderKind::Pot, &gens).unwrap();
        let mut g = SigBasis::new();
        let mut h = SyzygySet::new();
        g.push(Signature::unit(4, 1), gens[0].monic(&r.field));
        gvw2013_regenerate(&g, 0, &mut h, &o);
        assert!(h.is_empty());
        g.push(Signature::unit(4, 2), gens[1].monic(&r.field));
        gvw2013_regenerate(&g, 1, &mut h, &o);
        let k = koszul_init(&gens[..2], &o);
        assert_eq!(h, k);
        let before: Vec<Signature> = h.iter().collect();
        assert!(!h.insert(Signature::new(m(&[1, 1, 1, 0]), 2)));
        assert_eq!(h.iter().collect::<Vec<_>>(), before);
        assert_eq!((h.len(), h.entered()), (1, 2));
    }

    #[test]
    fn regeneration_targets_later_inputs_under_pot() {
        let (r, gens) = f7();
        let o = ModuleOrder::new(ModuleOrderKind::Pot, &gens).unwrap();
        let mut g = SigBasis::new();
        // z*e2 -> x*t^2 from the F7 trace
        g.push(Signature::new(m(&[0, 0, 1, 0]), 2), parse_polynomial(&r, "2*x*t^2+z*t^2").unwrap());
        let mut h = SyzygySet::new();
        regenerate_against_inputs(&g, 0, &gens, &mut h, &o);
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![Signature::new(m(&[1, 0, 0, 2]), 3)]);
    }

    proptest! {
        #[test]
        fn syzygy_set_stays_minimal(sigs in prop::collection::vec((prop::collection::vec(0u32..3, 3), 1usize..=3), 0..30)) {
            let mut h = SyzygySet::new();
            for (e, i) in sigs {
                h.insert(Signature::new(m(&e), i));
            }
            let all: Vec<Signature> = h.iter().collect();
            prop_assert_eq!(all.len(), h.len());
            for a in &all {
                for b in &all {
                    if a != b {
                        prop_assert!(!a.divides(b));
                    }
                }
            }
        }
    }
}
