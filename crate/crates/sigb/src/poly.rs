//! Sparse polynomials over GF(p), classic reduction and S-polynomials.

use std::cmp::Ordering;
use std::fmt;

use crate::base::{grevlex, Field, FieldElement, Monomial, MonomialOrder};
use crate::engine::RunStats;
use crate::error::{Error, Result};

/// Coefficient field, variable names and monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    pub field: Field,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl Ring {
    pub fn new(field: Field, vars: Vec<String>) -> Self {
        Ring {
            field,
            vars,
            order: MonomialOrder::Grevlex,
        }
    }

    /// Ring with variables `x1..xn`.
    pub fn with_nvars(field: Field, n: usize) -> Self {
        Ring::new(field, (1..=n).map(|i| format!("x{i}")).collect())
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }
}

/// One nonzero coefficient times a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coef: FieldElement,
    pub mon: Monomial,
}

/// Whether classic and signature reductions touch only the lead term or all terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionMode {
    #[default]
    Top,
    Full,
}

impl ReductionMode {
    pub fn name(&self) -> &'static str {
        match self {
            ReductionMode::Top => "top",
            ReductionMode::Full => "full",
        }
    }
}

impl std::str::FromStr for ReductionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "top" => Ok(ReductionMode::Top),
            "full" => Ok(ReductionMode::Full),
            _ => Err(Error::InvalidArgument(format!("unknown reduction mode `{s}`"))),
        }
    }
}

/// Terms sorted strictly decreasing under grevlex; the empty list is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Normalizes arbitrary `(coef, monomial)` pairs: sorts, merges and drops zeros.
    pub fn from_terms(field: &Field, mut raw: Vec<(i64, Monomial)>) -> Self {
        raw.sort_by(|a, b| grevlex(&b.1, &a.1));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            let c = field.from_i64(c);
            match terms.last_mut() {
                Some(t) if t.mon == m => t.coef = field.add(t.coef, c),
                _ => terms.push(Term { coef: c, mon: m }),
            }
        }
        terms.retain(|t| t.coef != 0);
        Polynomial { terms }
    }

    /// Wraps terms that already satisfy the ordering invariant.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| grevlex(&w[0].mon, &w[1].mon) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.coef != 0));
        Polynomial { terms }
    }

    pub fn monomial(field: &Field, c: i64, m: Monomial) -> Self {
        Self::from_terms(field, vec![(c, m)])
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Lead monomial. Panics on the zero polynomial.
    #[inline]
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].mon
    }

    /// Lead coefficient. Panics on the zero polynomial.
    #[inline]
    pub fn lc(&self) -> FieldElement {
        self.terms[0].coef
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Maximal total degree of a term (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mon.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mon.degree() == t.mon.degree()),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, field: &Field, c: FieldElement, m: &Monomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: field.mul(t.coef, c),
                    mon: t.mon.mul(m),
                })
                .collect(),
        }
    }

    pub fn scale(&self, field: &Field, c: FieldElement) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: field.mul(t.coef, c),
                    mon: t.mon.clone(),
                })
                .collect(),
        }
    }

    /// Scales so the lead coefficient is one.
    pub fn monic(&self, field: &Field) -> Polynomial {
        match self.terms.first() {
            None => Polynomial::zero(),
            Some(t) if t.coef == 1 => self.clone(),
            Some(t) => self.scale(field, field.inv(t.coef).expect("nonzero lead")),
        }
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ring }
    }
}

/// Formats a polynomial in the textual system syntax.
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    ring: &'a Ring,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, t) in self.poly.terms.iter().enumerate() {
            let c = self.ring.field.to_signed(t.coef);
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k > 0 || sign == "-" {
                write!(f, "{sign}")?;
            }
            if t.mon.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", t.mon.display_with(&self.ring.vars))?;
            } else {
                write!(f, "{abs}*{}", t.mon.display_with(&self.ring.vars))?;
            }
        }
        Ok(())
    }
}

/// Merges `f + c*m*g` over term slices; returns the number of coefficient
/// products alongside the result.
pub(crate) fn add_scaled_terms(
    field: &Field,
    f: &[Term],
    c: FieldElement,
    m: &Monomial,
    g: &[Term],
) -> (Vec<Term>, u64) {
    if c == 0 || g.is_empty() {
        return (f.to_vec(), 0);
    }
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut gm = g[0].mon.mul(m);
    loop {
        if i == f.len() {
            if j < g.len() {
                out.push(Term {
                    coef: field.mul(c, g[j].coef),
                    mon: gm,
                });
                for t in &g[j + 1..] {
                    out.push(Term {
                        coef: field.mul(c, t.coef),
                        mon: t.mon.mul(m),
                    });
                }
            }
            break;
        }
        if j == g.len() {
            out.extend_from_slice(&f[i..]);
            break;
        }
        match grevlex(&f[i].mon, &gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    coef: field.mul(c, g[j].coef),
                    mon: gm,
                });
                j += 1;
                gm = if j < g.len() { g[j].mon.mul(m) } else { Monomial::one(0) };
            }
            Ordering::Equal => {
                let s = field.add(f[i].coef, field.mul(c, g[j].coef));
                if s != 0 {
                    out.push(Term { coef: s, mon: gm });
                }
                i += 1;
                j += 1;
                gm = if j < g.len() { g[j].mon.mul(m) } else { Monomial::one(0) };
            }
        }
    }
    (out, g.len() as u64)
}

/// Returns `f + c*m*g`, counting one multiplication per term of `g`.
pub fn add_scaled(
    ring: &Ring,
    f: &Polynomial,
    c: FieldElement,
    m: &Monomial,
    g: &Polynomial,
    stats: &mut RunStats,
) -> Polynomial {
    let (terms, mults) = add_scaled_terms(&ring.field, &f.terms, c, m, &g.terms);
    stats.multiplications += mults;
    Polynomial { terms }
}

/// Classic reduction. Reducers are tried in the order given; the first whose
/// lead monomial divides the current term is used.
pub fn reduce(
    ring: &Ring,
    f: &Polynomial,
    basis: &[Polynomial],
    mode: ReductionMode,
    stats: &mut RunStats,
) -> Polynomial {
    let field = &ring.field;
    let inv_lc: Vec<FieldElement> = basis
        .iter()
        .map(|g| if g.is_zero() { 0 } else { field.inv(g.lc()).unwrap() })
        .collect();
    let mut p: Vec<Term> = f.terms.clone();
    let mut pos = 0;
    let mut done: Vec<Term> = Vec::new();
    while pos < p.len() {
        let t = &p[pos];
        let hit = basis
            .iter()
            .enumerate()
            .find(|(_, g)| !g.is_zero() && g.lm().divides(&t.mon));
        match hit {
            Some((k, g)) => {
                let q = g.lm().quotient_of(&t.mon);
                let c = field.neg(field.mul(t.coef, inv_lc[k]));
                let (next, mults) = add_scaled_terms(field, &p[pos..], c, &q, &g.terms);
                stats.multiplications += mults;
                stats.s_reduction_steps += 1;
                p = next;
                pos = 0;
            }
            None => {
                if mode == ReductionMode::Top {
                    break;
                }
                done.push(p[pos].clone());
                pos += 1;
            }
        }
    }
    done.extend_from_slice(&p[pos..]);
    Polynomial::from_sorted(done)
}

/// `(λ/lt f)·f/lc(f) − (λ/lt g)·g/lc(g)` with `λ = lcm(lm f, lm g)`.
pub fn spoly(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let field = &ring.field;
    let lam = f.lm().lcm_with(g.lm());
    let a = f.lm().quotient_of(&lam);
    let b = g.lm().quotient_of(&lam);
    let left = f.mul_term(field, field.inv(f.lc())?, &a);
    let cb = field.neg(field.inv(g.lc())?);
    let mut scratch = RunStats::default();
    Ok(add_scaled(ring, &left, cb, &b, g, &mut scratch))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::parse_polynomial;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn ring(p: u32, vars: &str) -> Ring {
        Ring::new(Field::new(p).unwrap(), vars.split(',').map(String::from).collect())
    }

    fn pp(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn add_scaled_examples() {
        let r = ring(32003, "x,y");
        let mut st = RunStats::default();
        let x = pp(&r, "x");
        let got = add_scaled(&r, &Polynomial::zero(), 1, &r.one(), &x, &mut st);
        assert_eq!(got, x);
        let f = pp(&r, "x^2+3*x*y-y+7");
        let got = add_scaled(&r, &f, 32002, &r.one(), &f, &mut st);
        assert!(got.is_zero());
        assert_eq!(st.multiplications, 1 + 4);
    }

    #[test]
    fn reduce_examples() {
        let r = ring(5, "x,y,z");
        let mut st = RunStats::default();
        let f2 = pp(&r, "2*x^2+3*x*y+4*y^2+3*z^2");
        assert_eq!(reduce(&r, &f2, &[], ReductionMode::Top, &mut st), f2);
        let f1 = pp(&r, "y^2+4*y*z");
        let red = reduce(&r, &f2, &[f1], ReductionMode::Full, &mut st);
        assert_eq!(red, pp(&r, "2*x^2+3*x*y+4*y*z+3*z^2"));
        assert!(reduce(&r, &f2, std::slice::from_ref(&f2), ReductionMode::Top, &mut st).is_zero());
    }

    #[test]
    fn spoly_examples() {
        let r = ring(7, "x,y,z,t");
        let f = pp(&r, "x*y+t^2");
        let g = pp(&r, "y*z-2*t^2");
        assert_eq!(spoly(&r, &f, &g).unwrap(), pp(&r, "2*x*t^2+z*t^2"));
        assert!(spoly(&r, &f, &f).unwrap().is_zero());
        let x = pp(&r, "x");
        let y = pp(&r, "y");
        assert!(spoly(&r, &x, &y).unwrap().is_zero());
        assert_eq!(spoly(&r, &x, &Polynomial::zero()), Err(Error::ZeroOperand));
    }

    fn dense_add(field: &Field, f: &Polynomial, c: u32, m: &Monomial, g: &Polynomial) -> BTreeMap<Vec<u16>, u32> {
        let mut acc: BTreeMap<Vec<u16>, u32> = BTreeMap::new();
        for t in f.terms() {
            let e = acc.entry(t.mon.exps().to_vec()).or_insert(0);
            *e = field.add(*e, t.coef);
        }
        for t in g.terms() {
            let e = acc.entry(t.mon.mul(m).exps().to_vec()).or_insert(0);
            *e = field.add(*e, field.mul(c, t.coef));
        }
        acc.retain(|_, v| *v != 0);
        acc
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-20i64..20, prop::collection::vec(0u32..4, 3)), 0..8).prop_map(|v| {
            let f = Field::new(101).unwrap();
            Polynomial::from_terms(&f, v.into_iter().map(|(c, e)| (c, Monomial::new(&e).unwrap())).collect())
        })
    }

    proptest! {
        #[test]
        fn add_scaled_matches_dense(f in arb_poly(), g in arb_poly(), c in 0u32..101, e in prop::collection::vec(0u32..3, 3)) {
            let r = ring(101, "x,y,z");
            let m = Monomial::new(&e).unwrap();
            let mut st = RunStats::default();
            let got = add_scaled(&r, &f, c, &m, &g, &mut st);
            let mut expect = dense_add(&r.field, &f, c, &m, &g);
            for t in got.terms() {
                prop_assert_eq!(expect.remove(t.mon.exps()), Some(t.coef));
            }
            prop_assert!(expect.is_empty());
            prop_assert!(got.terms().windows(2).all(|w| grevlex(&w[0].mon, &w[1].mon) == Ordering::Greater));
        }

        #[test]
        fn spoly_lead_drops(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let r = ring(101, "x,y,z");
            let s = spoly(&r, &f, &g).unwrap();
            if !s.is_zero() {
                prop_assert_eq!(grevlex(s.lm(), &f.lm().lcm_with(g.lm())), Ordering::Less);
            }
        }

        #[test]
        fn full_reduction_leaves_no_divisible_term(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            let r = ring(101, "x,y,z");
            let mut st = RunStats::default();
            let basis = vec![g, h];
            let red = reduce(&r, &f, &basis, ReductionMode::Full, &mut st);
            for t in red.terms() {
                prop_assert!(basis.iter().all(|b| b.is_zero() || !b.lm().divides(&t.mon)));
            }
        }
    }
}
