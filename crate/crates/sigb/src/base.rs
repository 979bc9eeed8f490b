//! Prime-field scalars and monomials.
//!
//! Field elements are plain `u32` residues in `[0, p)`; the [`Field`] value
//! carries the characteristic and performs all arithmetic. Monomials are dense
//! exponent vectors with a cached total degree and a divisibility mask.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Residue representative of an element of GF(p). Always `< p`.
pub type FieldElement = u32;

/// Default characteristic used by every benchmark.
pub const DEFAULT_PRIME: u32 = 32003;

/// The prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: DEFAULT_PRIME }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let n = n as u64;
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// Builds GF(p); `p` must be a prime below 2^31.
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { p })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_multiple_of(self.p) {
            return Err(Error::InversionOfZero(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(t0.rem_euclid(self.p as i64) as u32)
    }

    /// Maps any integer to its canonical residue.
    pub fn from_i64(&self, v: i64) -> FieldElement {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn to_signed(&self, a: FieldElement) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// Exponent storage; twelve variables stay inline.
pub type Exponents = SmallVec<[u16; 12]>;

/// A power product `x^v` with cached degree and divisibility mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
    mask: u64,
}

fn mask_of(exps: &[u16]) -> u64 {
    let mut m = 0u64;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            m |= 1 << (i % 64);
        }
    }
    m
}

impl Monomial {
    /// Builds a monomial from exponents, rejecting values that do not fit.
    pub fn new(exps: &[u32]) -> Result<Self> {
        let mut v = Exponents::with_capacity(exps.len());
        let mut deg = 0u32;
        for &e in exps {
            let e16 = u16::try_from(e).map_err(|_| Error::DegreeOverflow)?;
            deg = deg.checked_add(e).ok_or(Error::DegreeOverflow)?;
            v.push(e16);
        }
        Ok(Self::from_exps(v))
    }

    pub(crate) fn from_exps(exps: Exponents) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        let mask = mask_of(&exps);
        Monomial { exps, deg, mask }
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; n],
            deg: 0,
            mask: 0,
        }
    }

    /// `x_i^e` in `n` variables.
    pub fn var(n: usize, i: usize, e: u16) -> Self {
        let mut exps: Exponents = smallvec::smallvec![0; n];
        exps[i] = e;
        Self::from_exps(exps)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Product; returns `DegreeOverflow` if an exponent leaves `u16`.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_arity(self, other)?;
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_add(*b).ok_or(Error::DegreeOverflow)?);
        }
        Ok(Monomial {
            exps,
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
        })
    }

    /// Product for hot paths. Panics on exponent overflow, which needs
    /// exponents beyond 65535 and never occurs for benchmark inputs.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exponents = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
        }
    }

    /// Divisibility test without arity checking.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps: Exponents = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(b, a)| b - a)
            .collect();
        Monomial {
            deg: other.deg - self.deg,
            mask: mask_of(&exps),
            exps,
        }
    }

    /// Componentwise maximum, without arity checking.
    #[inline]
    pub fn lcm_with(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Self::from_exps(exps)
    }

    /// True when the two monomials share no variable.
    #[inline]
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renders the monomial with the given variable names (`1` for the unit).
    pub fn display_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
            match e {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

fn check_arity(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::ArityMismatch(a.nvars(), b.nvars()));
    }
    Ok(())
}

/// Monomial orders; only graded reverse lexicographic is provided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
}

/// Grevlex comparison for monomials of equal arity.
#[inline]
pub fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Grevlex comparison of the products `a1*a2` and `b1*b2` without forming them.
#[inline]
pub fn grevlex_products(a1: &Monomial, a2: &Monomial, b1: &Monomial, b2: &Monomial) -> Ordering {
    match (a1.deg + a2.deg).cmp(&(b1.deg + b2.deg)) {
        Ordering::Equal => {}
        o => return o,
    }
    let n = a1.exps.len();
    for i in (0..n).rev() {
        let x = a1.exps[i] as u32 + a2.exps[i] as u32;
        let y = b1.exps[i] as u32 + b2.exps[i] as u32;
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Comparison without arity checks, for inner loops.
    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
        }
    }
}

/// Checked comparison of two monomials under `order`.
pub fn cmp(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_arity(a, b)?;
    Ok(order.compare(a, b))
}

/// Least common multiple (componentwise maximum).
pub fn lcm(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    check_arity(a, b)?;
    Ok(a.lcm_with(b))
}

/// Whether `a` divides `b`.
pub fn divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    check_arity(a, b)?;
    Ok(a.divides(b))
}

/// `b / a`; fails with `NotDivisible` unless `a | b`.
pub fn quotient(b: &Monomial, a: &Monomial) -> Result<Monomial> {
    check_arity(a, b)?;
    if !a.divides(b) {
        return Err(Error::NotDivisible);
    }
    Ok(a.quotient_of(b))
}
