//! Dense exponent vectors and the monomial orders used throughout.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::AlgebraError;

/// Largest exponent allowed on a single variable.
pub const EXPONENT_CAP: u32 = 64;

/// A monomial as a dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[u8; 16]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self, AlgebraError> {
        let mut out = SmallVec::with_capacity(exps.len());
        for &e in exps {
            if e > EXPONENT_CAP {
                return Err(AlgebraError::ExponentCap(e));
            }
            out.push(e as u8);
        }
        let degree = exps.iter().sum();
        Ok(Monomial { exps: out, degree })
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&e| e as u32)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product of two monomials.
    ///
    /// Panics if an exponent would exceed [`EXPONENT_CAP`]; no computation in
    /// this crate legitimately gets there, so hitting it means a runaway.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: SmallVec<[u8; 16]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                let e = a as u32 + b as u32;
                assert!(e <= EXPONENT_CAP, "exponent {e} exceeds cap {EXPONENT_CAP}: runaway computation");
                e as u8
            })
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(&self.exps).map(|(&a, &b)| a - b).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn try_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| divisor.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u8; 16]> = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub(crate) fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.degree = m.degree - m.exps[i] as u32 + e;
        m.exps[i] = e as u8;
        m
    }

    /// Index of the unique variable if this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Term orders on monomials of a fixed length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Eliminates the first `k` variables: GrevLex on the first block, ties
    /// broken by GrevLex on the remaining variables.
    Block(usize),
}

#[inline]
fn grevlex_slice(a: &[u8], b: &[u8]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            // smaller exponent in the last differing variable is larger
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compare two monomials of equal length.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => {
                    for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            MonomialOrder::Block(k) => {
                let k = k.min(a.nvars());
                grevlex_slice(&a.exps[..k], &b.exps[..k]).then_with(|| grevlex_slice(&a.exps[k..], &b.exps[k..]))
            }
        }
    }
}

/// Checked comparison that reports length mismatches instead of panicking.
pub fn compare_monomials(m1: &Monomial, m2: &Monomial, order: MonomialOrder) -> Result<Ordering, AlgebraError> {
    if m1.nvars() != m2.nvars() {
        return Err(AlgebraError::LengthMismatch { expected: m1.nvars(), found: m2.nvars() });
    }
    Ok(order.cmp(m1, m2))
}
