//! Dense univariate polynomials and the Euclidean gcd.

use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{Polynomial, Ring};
use super::scalar::Field;
use super::AlgebraError;

/// Dense univariate polynomial, `coeffs[i]` multiplies `x^i`; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
    domain: F::Domain,
}

impl<F: Field> UniPoly<F> {
    pub fn new(domain: &F::Domain, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, domain: domain.clone() }
    }

    pub fn zero(domain: &F::Domain) -> Self {
        UniPoly { coeffs: Vec::new(), domain: domain.clone() }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                UniPoly::new(&self.domain, self.coeffs.iter().map(|c| c.mul(&inv)).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul(&F::from_i64(&self.domain, i as i64))).collect();
        UniPoly::new(&self.domain, coeffs)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(&self.domain), |acc, c| acc.mul(x).add(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.domain);
        }
        let mut out = vec![F::zero(&self.domain); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(&self.domain, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlead_inv = divisor.leading().and_then(F::inv).expect("division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (UniPoly::zero(&self.domain), self.clone());
        }
        let mut quot = vec![F::zero(&self.domain); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&dlead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(d));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(&self.domain, quot), UniPoly::new(&self.domain, rem))
    }

    /// Monic gcd; `None` when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Option<Self> {
        let (mut a, mut b) = (self.clone(), other.clone());
        if a.is_zero() && b.is_zero() {
            return None;
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        Some(a.monic())
    }

    /// True when the polynomial has no repeated factor (gcd with derivative is 1).
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).is_some_and(|g| g.is_constant())
    }

    pub fn to_polynomial(&self, ring: &Arc<Ring<F>>) -> Polynomial<F> {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::from_exponents(&[i as u32]).expect("degree under cap"), c.clone()))
            .collect();
        Polynomial::from_terms(ring, MonomialOrder::default(), terms)
    }

    pub fn from_polynomial(f: &Polynomial<F>) -> Result<Self, AlgebraError> {
        if f.nvars() != 1 {
            return Err(AlgebraError::NotUnivariate(f.nvars()));
        }
        let domain = f.ring().domain();
        let deg = f.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![F::zero(domain); deg + 1];
        for (m, c) in f.terms() {
            coeffs[m.exponent(0) as usize] = c.clone();
        }
        Ok(UniPoly::new(domain, coeffs))
    }
}

/// Monic gcd of two univariate polynomials in the same one-variable ring.
pub fn univariate_gcd<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>, AlgebraError> {
    if !f.same_ring(g) {
        return Err(AlgebraError::VariableMismatch(f.ring().vars().join(","), g.ring().vars().join(",")));
    }
    let a = UniPoly::from_polynomial(f)?;
    let b = UniPoly::from_polynomial(g)?;
    let d = a.gcd(&b).ok_or(AlgebraError::BothZero)?;
    Ok(d.to_polynomial(f.ring()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_polynomial;
    use crate::algebra::scalar::{Fp, Rational};
    use crate::algebra::RingExt;

    #[test]
    fn gcd_examples() {
        let r: Arc<Ring<Rational>> = Ring::new(["x"], ());
        let f = parse_polynomial(&r, "2*x^2 + 4").unwrap();
        assert_eq!(univariate_gcd(&f, &r.zero()).unwrap(), parse_polynomial(&r, "x^2 + 2").unwrap());
        let a = parse_polynomial(&r, "x^2 - 1").unwrap();
        let b = parse_polynomial(&r, "x - 1").unwrap();
        assert_eq!(univariate_gcd(&a, &b).unwrap(), b);
        assert!(matches!(univariate_gcd(&r.zero(), &r.zero()), Err(AlgebraError::BothZero)));
        let two: Arc<Ring<Rational>> = Ring::new(["x", "y"], ());
        assert!(matches!(univariate_gcd(&two.var(0), &two.var(0)), Err(AlgebraError::NotUnivariate(2))));
    }

    /// Multiplicity of each root found by exhaustive search over a small field.
    fn brute_force_max_multiplicity(f: &UniPoly<Fp>, p: u32) -> usize {
        let mut best = 0;
        for x in 0..p {
            let root = UniPoly::new(&p, vec![Fp::from_signed(-(x as i64), p), Fp::new(1, p)]);
            let mut g = f.clone();
            let mut k = 0;
            loop {
                let (q, r) = g.div_rem(&root);
                if !r.is_zero() || g.is_zero() {
                    break;
                }
                g = q;
                k += 1;
            }
            best = best.max(k);
        }
        best
    }

    /// Largest k with gcd(f, f', ..., f^(k-1)) nonconstant.
    fn gcd_chain_multiplicity(f: &UniPoly<Fp>) -> usize {
        let mut g = f.clone();
        let mut d = f.clone();
        let mut k = 0;
        while !g.is_constant() {
            k += 1;
            d = d.derivative();
            g = g.gcd(&d).unwrap_or_else(|| g.clone());
            if d.is_zero() {
                break;
            }
        }
        k
    }

    #[test]
    fn derivative_gcd_chain_matches_root_search() {
        let p = 13u32;
        let lin = |a: i64| UniPoly::new(&p, vec![Fp::from_signed(-a, p), Fp::new(1, p)]);
        // s^3 t form: roots 0 (mult 3) and 5 (mult 1), times a split quadratic
        let cases = vec![
            lin(0).mul(&lin(0)).mul(&lin(0)).mul(&lin(5)),
            lin(1).mul(&lin(2)).mul(&lin(3)),
            lin(4).mul(&lin(4)).mul(&lin(7)).mul(&lin(7)),
            lin(6).mul(&lin(6)).mul(&lin(6)).mul(&lin(6)),
        ];
        for f in cases {
            assert_eq!(gcd_chain_multiplicity(&f), brute_force_max_multiplicity(&f, p), "{f:?}");
        }
    }

    #[test]
    fn squarefree_detection() {
        let p = 101u32;
        let lin = |a: i64| UniPoly::new(&p, vec![Fp::from_signed(-a, p), Fp::new(1, p)]);
        assert!(lin(1).mul(&lin(2)).is_squarefree());
        assert!(!lin(1).mul(&lin(1)).is_squarefree());
        assert!(UniPoly::new(&p, vec![Fp::new(3, p)]).is_squarefree());
    }

    #[test]
    fn div_rem_reconstructs() {
        let p = 10007u32;
        let a = UniPoly::new(&p, (1..9).map(|i| Fp::new(i * 37, p)).collect());
        let b = UniPoly::new(&p, (1..4).map(|i| Fp::new(i * 11 + 1, p)).collect());
        let (q, r) = a.div_rem(&b);
        let back = q.mul(&b);
        let sum: Vec<Fp> = (0..a.coeffs().len())
            .map(|i| {
                let x = back.coeffs().get(i).copied().unwrap_or(Fp::new(0, p));
                let y = r.coeffs().get(i).copied().unwrap_or(Fp::new(0, p));
                x.add(&y)
            })
            .collect();
        assert_eq!(UniPoly::new(&p, sum), a);
        assert!(r.degree().is_none_or(|d| d < 2));
    }
}
