//! Signatures `a·e_i` and the module-monomial orders extending grevlex.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::base::{grevlex, grevlex_products, Monomial};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// A monic module monomial `mon · e_index`; `index` counts from 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub mon: Monomial,
    pub index: usize,
}

impl Signature {
    pub fn new(mon: Monomial, index: usize) -> Self {
        debug_assert!(index >= 1);
        Signature { mon, index }
    }

    /// The unit vector `e_index`.
    pub fn unit(nvars: usize, index: usize) -> Self {
        Signature::new(Monomial::one(nvars), index)
    }

    /// `m · self`.
    #[inline]
    pub fn mul(&self, m: &Monomial) -> Signature {
        Signature {
            mon: self.mon.mul(m),
            index: self.index,
        }
    }

    /// Same index and the monomial divides.
    #[inline]
    pub fn divides(&self, other: &Signature) -> bool {
        self.index == other.index && self.mon.divides(&other.mon)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.mon.is_one() {
            format!("e{}", self.index)
        } else {
            format!("{}*e{}", self.mon.display_with(names), self.index)
        }
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}e{}", self.mon, self.index)
    }
}

/// `m · s`.
pub fn mul_sig(m: &Monomial, s: &Signature) -> Signature {
    s.mul(m)
}

/// The supported module-monomial orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleOrderKind {
    Pot,
    Top,
    Dpot,
    Dtop,
    Ltpot,
    Ext1,
    Ext2,
}

impl ModuleOrderKind {
    pub const ALL: [ModuleOrderKind; 7] = [
        ModuleOrderKind::Pot,
        ModuleOrderKind::Top,
        ModuleOrderKind::Dpot,
        ModuleOrderKind::Dtop,
        ModuleOrderKind::Ltpot,
        ModuleOrderKind::Ext1,
        ModuleOrderKind::Ext2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ModuleOrderKind::Pot => "pot",
            ModuleOrderKind::Top => "top",
            ModuleOrderKind::Dpot => "dpot",
            ModuleOrderKind::Dtop => "dtop",
            ModuleOrderKind::Ltpot => "ltpot",
            ModuleOrderKind::Ext1 => "ext1",
            ModuleOrderKind::Ext2 => "ext2",
        }
    }

    /// Orders whose first criterion is the degree of `a·f_i` (or a refinement of it
    /// for homogeneous input).
    pub fn is_degree_compatible(&self) -> bool {
        matches!(
            self,
            ModuleOrderKind::Dpot
                | ModuleOrderKind::Dtop
                | ModuleOrderKind::Ext2
                | ModuleOrderKind::Ltpot
                | ModuleOrderKind::Ext1
        )
    }
}

impl std::str::FromStr for ModuleOrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ModuleOrderKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown module order `{s}`")))
    }
}

/// A module order together with the generator data it consults.
#[derive(Debug, Clone)]
pub struct ModuleOrder {
    pub kind: ModuleOrderKind,
    /// Flips every index comparison (lower index greater), as in original F5.
    pub legacy_index_direction: bool,
    leads: Vec<Monomial>,
    degrees: Vec<u32>,
}

/// Heap key whose lexicographic order coincides with the module order.
pub type SigKey = SmallVec<[u32; 24]>;

fn push_grevlex_key(key: &mut SigKey, m: &Monomial) {
    key.push(m.degree());
    for &e in m.exps().iter().rev() {
        key.push(u16::MAX as u32 - e as u32);
    }
}

impl ModuleOrder {
    /// Order for the given generators; leads and degrees are taken from them.
    pub fn new(kind: ModuleOrderKind, gens: &[Polynomial]) -> Result<Self> {
        if gens.iter().any(|g| g.is_zero()) {
            return Err(Error::ZeroOperand);
        }
        let leads = gens.iter().map(|g| g.lm().clone()).collect();
        let degrees = gens.iter().map(|g| g.degree()).collect();
        Self::with_context(kind, leads, degrees)
    }

    pub fn with_context(kind: ModuleOrderKind, leads: Vec<Monomial>, degrees: Vec<u32>) -> Result<Self> {
        if kind == ModuleOrderKind::Ext1 {
            for i in 0..leads.len() {
                for j in i + 1..leads.len() {
                    if leads[i] == leads[j] {
                        return Err(Error::AmbiguousOrder(i + 1, j + 1));
                    }
                }
            }
        }
        Ok(ModuleOrder {
            kind,
            legacy_index_direction: false,
            leads,
            degrees,
        })
    }

    pub fn with_legacy_index_direction(mut self, flag: bool) -> Self {
        self.legacy_index_direction = flag;
        self
    }

    /// Number of generators in the context.
    pub fn len(&self) -> usize {
        self.leads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leads.is_empty()
    }

    /// Lead monomial of generator `index` (1-based).
    pub fn lead(&self, index: usize) -> &Monomial {
        &self.leads[index - 1]
    }

    /// Degree of generator `index` (1-based).
    pub fn gen_degree(&self, index: usize) -> u32 {
        self.degrees[index - 1]
    }

    /// `deg(a) + deg(f_i)`.
    #[inline]
    pub fn sig_degree(&self, s: &Signature) -> u32 {
        s.mon.degree() + self.degrees[s.index - 1]
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> Ordering {
        if self.legacy_index_direction {
            j.cmp(&i)
        } else {
            i.cmp(&j)
        }
    }

    /// Compares `s` and `t`. Both indices must lie in the context.
    #[inline]
    pub fn cmp(&self, s: &Signature, t: &Signature) -> Ordering {
        let (a, i) = (&s.mon, s.index);
        let (b, j) = (&t.mon, t.index);
        match self.kind {
            ModuleOrderKind::Pot => self.idx(i, j).then_with(|| grevlex(a, b)),
            ModuleOrderKind::Top => grevlex(a, b).then_with(|| self.idx(i, j)),
            ModuleOrderKind::Dpot => self
                .sig_degree(s)
                .cmp(&self.sig_degree(t))
                .then_with(|| self.idx(i, j))
                .then_with(|| grevlex(a, b)),
            ModuleOrderKind::Dtop => self
                .sig_degree(s)
                .cmp(&self.sig_degree(t))
                .then_with(|| grevlex(a, b))
                .then_with(|| self.idx(i, j)),
            ModuleOrderKind::Ltpot => grevlex_products(a, &self.leads[i - 1], b, &self.leads[j - 1])
                .then_with(|| self.idx(i, j))
                .then_with(|| grevlex(a, b)),
            ModuleOrderKind::Ext1 => grevlex_products(a, &self.leads[i - 1], b, &self.leads[j - 1])
                .then_with(|| grevlex(&self.leads[i - 1], &self.leads[j - 1]))
                .then_with(|| self.idx(i, j)),
            ModuleOrderKind::Ext2 => self
                .sig_degree(s)
                .cmp(&self.sig_degree(t))
                .then_with(|| grevlex(a, b))
                .then_with(|| self.idx(i, j)),
        }
    }

    /// Compares `a·s` with `b·t`.
    #[inline]
    pub fn cmp_mul(&self, a: &Monomial, s: &Signature, b: &Monomial, t: &Signature) -> Ordering {
        self.cmp(&s.mul(a), &t.mul(b))
    }

    /// Sort key; `key(s) < key(t)` iff `s < t`.
    pub fn key(&self, s: &Signature) -> SigKey {
        let mut k = SigKey::new();
        let idx = if self.legacy_index_direction {
            u32::MAX - s.index as u32
        } else {
            s.index as u32
        };
        match self.kind {
            ModuleOrderKind::Pot => {
                k.push(idx);
                push_grevlex_key(&mut k, &s.mon);
            }
            ModuleOrderKind::Top => {
                push_grevlex_key(&mut k, &s.mon);
                k.push(idx);
            }
            ModuleOrderKind::Dpot => {
                k.push(self.sig_degree(s));
                k.push(idx);
                push_grevlex_key(&mut k, &s.mon);
            }
            ModuleOrderKind::Dtop | ModuleOrderKind::Ext2 => {
                k.push(self.sig_degree(s));
                push_grevlex_key(&mut k, &s.mon);
                k.push(idx);
            }
            ModuleOrderKind::Ltpot => {
                push_grevlex_key(&mut k, &s.mon.mul(&self.leads[s.index - 1]));
                k.push(idx);
                push_grevlex_key(&mut k, &s.mon);
            }
            ModuleOrderKind::Ext1 => {
                push_grevlex_key(&mut k, &s.mon.mul(&self.leads[s.index - 1]));
                push_grevlex_key(&mut k, &self.leads[s.index - 1]);
                k.push(idx);
            }
        }
        k
    }

    /// Coarse, order-monotone prefix of the key used to batch pairs in the
    /// matrix engine: a value that never decreases along increasing signatures.
    pub fn batch_key(&self, s: &Signature) -> (u32, u32) {
        match self.kind {
            ModuleOrderKind::Pot => {
                let idx = if self.legacy_index_direction {
                    u32::MAX - s.index as u32
                } else {
                    s.index as u32
                };
                (idx, self.sig_degree(s))
            }
            ModuleOrderKind::Top => (0, s.mon.degree()),
            ModuleOrderKind::Dpot | ModuleOrderKind::Dtop | ModuleOrderKind::Ext2 => (0, self.sig_degree(s)),
            ModuleOrderKind::Ltpot | ModuleOrderKind::Ext1 => {
                (0, s.mon.degree() + self.leads[s.index - 1].degree())
            }
        }
    }
}

/// Checked signature comparison.
pub fn cmp_sig(order: &ModuleOrder, s: &Signature, t: &Signature) -> Result<Ordering> {
    for x in [s, t] {
        if x.index == 0 || x.index > order.len() {
            return Err(Error::InvalidArgument(format!("signature index {} out of range", x.index)));
        }
        if !order.is_empty() && x.mon.nvars() != order.lead(1).nvars() {
            return Err(Error::ArityMismatch(x.mon.nvars(), order.lead(1).nvars()));
        }
    }
    Ok(order.cmp(s, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn ctx(kind: ModuleOrderKind) -> ModuleOrder {
        // leads x^2, y^2 z, x y, z^3 ; degrees 2, 3, 2, 4
        ModuleOrder::with_context(
            kind,
            vec![m(&[2, 0, 0]), m(&[0, 2, 1]), m(&[1, 1, 0]), m(&[0, 0, 3])],
            vec![2, 3, 2, 4],
        )
        .unwrap()
    }

    #[test]
    fn pot_prefers_higher_index() {
        let o = ctx(ModuleOrderKind::Pot);
        let z = m(&[0, 0, 1]);
        assert_eq!(o.cmp(&Signature::new(z.clone(), 2), &Signature::new(z, 3)), Ordering::Less);
        let legacy = o.clone().with_legacy_index_direction(true);
        assert_eq!(
            legacy.cmp(&Signature::unit(3, 2), &Signature::unit(3, 3)),
            Ordering::Greater
        );
    }

    #[test]
    fn top_compares_monomial_first() {
        let o = ctx(ModuleOrderKind::Top);
        let x = m(&[1, 0, 0]);
        let y = m(&[0, 1, 0]);
        assert_eq!(o.cmp(&Signature::new(x.clone(), 1), &Signature::new(x.clone(), 4)), Ordering::Less);
        assert_eq!(o.cmp(&Signature::new(x, 4), &Signature::new(y, 1)), Ordering::Greater);
    }

    #[test]
    fn dpot_compares_degree_first() {
        let o = ModuleOrder::with_context(ModuleOrderKind::Dpot, vec![m(&[2, 0, 0]), m(&[0, 3, 0])], vec![2, 3])
            .unwrap();
        let s = Signature::new(m(&[1, 0, 0]), 2);
        let t = Signature::new(m(&[2, 1, 0]), 1);
        assert_eq!(o.cmp(&s, &t), Ordering::Less);
    }

    #[test]
    fn ext1_rejects_equal_leads() {
        let r = ModuleOrder::with_context(ModuleOrderKind::Ext1, vec![m(&[1, 1]), m(&[1, 1])], vec![2, 2]);
        assert_eq!(r.unwrap_err(), Error::AmbiguousOrder(1, 2));
    }

    #[test]
    fn checked_cmp_validates() {
        let o = ctx(ModuleOrderKind::Pot);
        assert!(cmp_sig(&o, &Signature::unit(3, 5), &Signature::unit(3, 1)).is_err());
        assert!(cmp_sig(&o, &Signature::unit(2, 1), &Signature::unit(3, 1)).is_err());
        assert_eq!(cmp_sig(&o, &Signature::unit(3, 1), &Signature::unit(3, 1)), Ok(Ordering::Equal));
    }

    #[test]
    fn mul_sig_examples() {
        let s = Signature::new(m(&[0, 1, 0]), 2);
        assert_eq!(mul_sig(&Monomial::one(3), &s), s);
        assert_eq!(mul_sig(&m(&[1, 0, 0]), &s), Signature::new(m(&[1, 1, 0]), 2));
    }

    fn sig() -> impl Strategy<Value = Signature> {
        (prop::collection::vec(0u32..4, 3), 1usize..=4).prop_map(|(e, i)| Signature::new(m(&e), i))
    }

    fn kind() -> impl Strategy<Value = ModuleOrderKind> {
        prop::sample::select(ModuleOrderKind::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn compatible_with_monomial_order(k in kind(), a in prop::collection::vec(0u32..4, 3), b in prop::collection::vec(0u32..4, 3), i in 1usize..=4) {
            let o = ctx(k);
            let (a, b) = (m(&a), m(&b));
            prop_assert_eq!(o.cmp(&Signature::new(a.clone(), i), &Signature::new(b.clone(), i)), grevlex(&a, &b));
        }

        #[test]
        fn multiplicative(k in kind(), s in sig(), t in sig(), c in prop::collection::vec(0u32..3, 3)) {
            let o = ctx(k);
            let c = m(&c);
            if o.cmp(&s, &t) == Ordering::Less {
                prop_assert_eq!(o.cmp(&s.mul(&c), &t.mul(&c)), Ordering::Less);
            }
        }

        #[test]
        fn total_and_antisymmetric(k in kind(), s in sig(), t in sig()) {
            let o = ctx(k);
            prop_assert_eq!(o.cmp(&s, &t) == Ordering::Equal, s == t);
            prop_assert_eq!(o.cmp(&s, &t), o.cmp(&t, &s).reverse());
        }

        #[test]
        fn key_agrees_with_cmp(k in kind(), legacy in any::<bool>(), s in sig(), t in sig()) {
            let o = ctx(k).with_legacy_index_direction(legacy);
            prop_assert_eq!(o.key(&s).cmp(&o.key(&t)), o.cmp(&s, &t));
            if o.cmp(&s, &t) != Ordering::Greater {
                prop_assert!(o.batch_key(&s) <= o.batch_key(&t));
            }
        }

        #[test]
        fn pot_matches_dpot_for_equal_degrees(s in sig(), t in sig()) {
            let leads = vec![m(&[2, 0, 0]), m(&[0, 2, 0]), m(&[1, 1, 0]), m(&[0, 1, 1])];
            let pot = ModuleOrder::with_context(ModuleOrderKind::Pot, leads.clone(), vec![2; 4]).unwrap();
            let dpot = ModuleOrder::with_context(ModuleOrderKind::Dpot, leads, vec![2; 4]).unwrap();
            if s.mon.degree() == t.mon.degree() {
                prop_assert_eq!(pot.cmp(&s, &t), dpot.cmp(&s, &t));
            }
        }
    }
}
