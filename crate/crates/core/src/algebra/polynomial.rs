//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder};
use super::scalar::Field;
use super::AlgebraError;

/// Variable names and coefficient field shared by a family of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring<F: Field> {
    vars: Vec<String>,
    domain: F::Domain,
}

impl<F: Field> Ring<F> {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, domain: F::Domain) -> Arc<Self> {
        Arc::new(Ring { vars: vars.into_iter().map(Into::into).collect(), domain })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn domain(&self) -> &F::Domain {
        &self.domain
    }

    pub fn var_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    pub fn scalar(&self, n: i64) -> F {
        F::from_i64(&self.domain, n)
    }
}

/// Convenience constructors that need the `Arc` handle itself.
pub trait RingExt<F: Field> {
    fn zero(&self) -> Polynomial<F>;
    fn one(&self) -> Polynomial<F>;
    fn constant(&self, c: F) -> Polynomial<F>;
    fn int(&self, n: i64) -> Polynomial<F>;
    fn var(&self, index: usize) -> Polynomial<F>;
    fn var_named(&self, name: &str) -> Result<Polynomial<F>, AlgebraError>;
    fn gens(&self) -> Vec<Polynomial<F>>;
}

impl<F: Field> RingExt<F> for Arc<Ring<F>> {
    fn zero(&self) -> Polynomial<F> {
        Polynomial { ring: self.clone(), order: MonomialOrder::default(), terms: Vec::new() }
    }

    fn one(&self) -> Polynomial<F> {
        self.int(1)
    }

    fn constant(&self, c: F) -> Polynomial<F> {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::one(self.nvars()), c)] };
        Polynomial { ring: self.clone(), order: MonomialOrder::default(), terms }
    }

    fn int(&self, n: i64) -> Polynomial<F> {
        self.constant(self.scalar(n))
    }

    fn var(&self, index: usize) -> Polynomial<F> {
        let one = F::one(&self.domain);
        Polynomial {
            ring: self.clone(),
            order: MonomialOrder::default(),
            terms: vec![(Monomial::variable(self.nvars(), index), one)],
        }
    }

    fn var_named(&self, name: &str) -> Result<Polynomial<F>, AlgebraError> {
        Ok(self.var(self.var_index(name)?))
    }

    fn gens(&self) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }
}

/// A polynomial: nonzero terms sorted strictly descending in `order`.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    order: MonomialOrder,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        if !self.same_ring(other) || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<Ring<F>>, order: MonomialOrder, mut terms: Vec<(Monomial, F)>) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some((_, c)) if c.is_zero()) {
            out.pop();
        }
        Polynomial { ring: ring.clone(), order, terms: out }
    }

    pub fn monomial(ring: &Arc<Ring<F>>, coeff: F, mono: Monomial) -> Self {
        Polynomial::from_terms(ring, MonomialOrder::default(), vec![(mono, coeff)])
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn coefficient(&self, mono: &Monomial) -> F {
        self.terms
            .binary_search_by(|(m, _)| self.order.cmp(mono, m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero(self.ring.domain()))
    }

    /// The same polynomial with terms re-sorted for another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: self.ring.clone(), order, terms }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial { ring: self.ring.clone(), order: self.order, terms: Vec::new() };
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect();
        Polynomial { ring: self.ring.clone(), order: self.order, terms }
    }

    /// Scale so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial { ring: self.ring.clone(), order: self.order, terms: Vec::new() };
        }
        let terms = self.terms.iter().map(|(m, a)| (m.mul(mono), a.mul(c))).collect();
        Polynomial { ring: self.ring.clone(), order: self.order, terms }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.same_ring(other) {
            return Ok(());
        }
        if self.ring.domain != other.ring.domain {
            return Err(AlgebraError::DomainMismatch(
                format!("{:?}", self.ring.domain),
                format!("{:?}", other.ring.domain),
            ));
        }
        Err(AlgebraError::VariableMismatch(self.ring.vars.join(","), other.ring.vars.join(",")))
    }

    /// `self + sign * c * mono * other`, merging sorted term lists.
    fn merge_scaled(&self, other: &Self, c: &F, mono: Option<&Monomial>) -> Self {
        let order = self.order;
        let other_terms: Vec<(Monomial, F)>;
        let rhs: &[(Monomial, F)] = if other.order == order {
            &other.terms
        } else {
            other_terms = other.with_order(order).terms;
            &other_terms
        };
        let mut out = Vec::with_capacity(self.terms.len() + rhs.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |k: usize| -> Monomial {
            match mono {
                Some(m) => rhs[k].0.mul(m),
                None => rhs[k].0.clone(),
            }
        };
        let mut next_rhs = if j < rhs.len() { Some(shifted(j)) } else { None };
        while i < self.terms.len() || next_rhs.is_some() {
            let take = match (&self.terms.get(i), &next_rhs) {
                (Some((m, _)), Some(n)) => order.cmp(m, n),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match take {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let m = next_rhs.take().unwrap();
                    out.push((m, rhs[j].1.mul(c)));
                    j += 1;
                    next_rhs = if j < rhs.len() { Some(shifted(j)) } else { None };
                }
                Ordering::Equal => {
                    let s = self.terms[i].1.add(&rhs[j].1.mul(c));
                    let m = next_rhs.take().unwrap();
                    if !s.is_zero() {
                        out.push((m, s));
                    }
                    i += 1;
                    j += 1;
                    next_rhs = if j < rhs.len() { Some(shifted(j)) } else { None };
                }
            }
        }
        Polynomial { ring: self.ring.clone(), order, terms: out }
    }

    /// `self - c * mono * other`; the workhorse of polynomial division.
    pub fn sub_scaled(&self, c: &F, mono: &Monomial, other: &Self) -> Self {
        self.merge_scaled(other, &c.neg(), Some(mono))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.merge_scaled(other, &F::one(self.ring.domain()), None))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.merge_scaled(other, &F::one(self.ring.domain()).neg(), None))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc: BTreeMap<MonoKey, F> = BTreeMap::new();
        let order = self.order;
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                acc.entry(MonoKey(m, order)).and_modify(|e| *e = e.add(&c)).or_insert(c);
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.0, c)).collect();
        Ok(Polynomial { ring: self.ring.clone(), order, terms })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.one().with_order(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluate at a point of the ambient affine space.
    pub fn eval(&self, point: &[F]) -> Result<F, AlgebraError> {
        if point.len() != self.nvars() {
            return Err(AlgebraError::LengthMismatch { expected: self.nvars(), found: point.len() });
        }
        let domain = self.ring.domain();
        let mut powers: Vec<Vec<F>> = point.iter().map(|x| vec![F::one(domain), x.clone()]).collect();
        let mut acc = F::zero(domain);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.exponents().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().mul(&pw[1]);
                    pw.push(next);
                }
                t = t.mul(&pw[e as usize]);
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitute `images[i]` for variable `i`; all images share one ring.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>, AlgebraError> {
        if images.len() != self.nvars() {
            return Err(AlgebraError::LengthMismatch { expected: self.nvars(), found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for img in images {
            if !Arc::ptr_eq(&img.ring, &target) && *img.ring != *target {
                return Err(AlgebraError::VariableMismatch(target.vars.join(","), img.ring.vars.join(",")));
            }
        }
        let mut powers: Vec<Vec<Polynomial<F>>> = images.iter().map(|g| vec![target.one(), g.clone()]).collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, e) in m.exponents().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &pw[1];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitute by variable name; every variable of `self` needs an image.
    pub fn substitute_named(&self, images: &BTreeMap<String, Polynomial<F>>) -> Result<Polynomial<F>, AlgebraError> {
        let ordered = self
            .ring
            .vars
            .iter()
            .map(|v| images.get(v).cloned().ok_or_else(|| AlgebraError::MissingImage(v.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        self.substitute(&ordered)
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial<F> {
        let domain = self.ring.domain();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                (m.with_exponent(var, e - 1), c.mul(&F::from_i64(domain, e as i64)))
            })
            .collect();
        // Differentiation can merge nothing but may kill terms in small characteristic.
        Polynomial::from_terms(&self.ring, self.order, terms)
    }

    pub fn partial_derivative_named(&self, var: &str) -> Result<Polynomial<F>, AlgebraError> {
        Ok(self.partial_derivative(self.ring.var_index(var)?))
    }

    /// Move into another ring, sending variable `i` to `var_map[i]`.
    pub fn relabel(&self, target: &Arc<Ring<F>>, var_map: &[usize]) -> Polynomial<F> {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; n];
                for (i, e) in m.exponents().enumerate() {
                    exps[var_map[i]] += e;
                }
                (Monomial::from_exponents(&exps).expect("relabel keeps exponents"), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, self.order, terms)
    }

    /// Homogeneous component of the given degree.
    pub fn homogeneous_part(&self, degree: u32) -> Polynomial<F> {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == degree).cloned().collect();
        Polynomial { ring: self.ring.clone(), order: self.order, terms }
    }

    /// Apply a ring map to every coefficient (e.g. reduction mod p).
    pub fn map_coefficients<G: Field>(&self, target: &Arc<Ring<G>>, f: impl Fn(&F) -> G) -> Polynomial<G> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect();
        Polynomial::from_terms(target, self.order, terms)
    }
}

/// Orders monomials inside a `BTreeMap` by a term order.
#[derive(Clone, PartialEq, Eq)]
struct MonoKey(Monomial, MonomialOrder);

impl PartialOrd for MonoKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonoKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.1.cmp(&self.0, &other.0)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("polynomial addition across rings")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("polynomial subtraction across rings")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("polynomial multiplication across rings")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        Polynomial { ring: self.ring.clone(), order: self.order, terms }
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_polynomial(self))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", super::parse::format_polynomial(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_polynomial;
    use crate::algebra::scalar::{Fp, Rational};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn qring(vars: &[&str]) -> Arc<Ring<Rational>> {
        Ring::new(vars.iter().copied(), ())
    }

    fn q(ring: &Arc<Ring<Rational>>, s: &str) -> Polynomial<Rational> {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn add_zero_and_difference_of_squares() {
        let r = qring(&["x", "y"]);
        let f = q(&r, "3*x^2*y - y + 7");
        assert_eq!(&f + &r.zero(), f);
        assert_eq!(&q(&r, "x + y") * &q(&r, "x - y"), q(&r, "x^2 - y^2"));
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn product_mod_seven() {
        let r: Arc<Ring<Fp>> = Ring::new(["x"], 7);
        let f = parse_polynomial(&r, "3*x").unwrap();
        let g = parse_polynomial(&r, "5*x").unwrap();
        assert_eq!(&f * &g, parse_polynomial(&r, "x^2").unwrap());
    }

    #[test]
    fn ring_mismatches_are_errors() {
        let a: Arc<Ring<Fp>> = Ring::new(["x"], 7);
        let b: Arc<Ring<Fp>> = Ring::new(["x"], 11);
        let c: Arc<Ring<Fp>> = Ring::new(["y"], 7);
        assert!(matches!(a.var(0).try_add(&b.var(0)), Err(AlgebraError::DomainMismatch(..))));
        assert!(matches!(a.var(0).try_mul(&c.var(0)), Err(AlgebraError::VariableMismatch(..))));
    }

    #[test]
    fn eval_examples() {
        let r = qring(&["x", "y"]);
        let pt = [Rational::from_integer(3), Rational::from_integer(4)];
        assert_eq!(r.one().eval(&pt).unwrap(), Rational::from_integer(1));
        assert_eq!(q(&r, "x^2 - y").eval(&pt).unwrap(), Rational::from_integer(5));
        assert!(q(&r, "x").eval(&pt[..1]).is_err());
    }

    #[test]
    fn substitution_examples() {
        let r = qring(&["x", "y"]);
        let t = qring(&["t"]);
        let x = q(&r, "x");
        let id = BTreeMap::from([("x".to_string(), q(&r, "x")), ("y".to_string(), q(&r, "y"))]);
        assert_eq!(x.substitute_named(&id).unwrap(), x);
        let img = BTreeMap::from([("x".to_string(), q(&t, "t")), ("y".to_string(), q(&t, "t^2"))]);
        assert_eq!(q(&r, "x^2 + y").substitute_named(&img).unwrap(), q(&t, "2*t^2"));
        let partial = BTreeMap::from([("x".to_string(), q(&t, "t"))]);
        assert!(matches!(q(&r, "x + y").substitute_named(&partial), Err(AlgebraError::MissingImage(v)) if v == "y"));
    }

    #[test]
    fn derivative_examples() {
        let r = qring(&["x", "y"]);
        assert!(q(&r, "5").partial_derivative(0).is_zero());
        assert_eq!(q(&r, "x^3*y").partial_derivative(0), q(&r, "3*x^2*y"));
        assert!(q(&r, "x").partial_derivative_named("z").is_err());
    }

    #[test]
    fn order_change_preserves_equality() {
        let r = qring(&["x", "y", "z"]);
        let f = q(&r, "x*z^3 + y^2 + x^2*y - 4");
        let g = f.with_order(MonomialOrder::Lex);
        assert_eq!(f, g);
        assert_eq!(g.leading_monomial().unwrap(), &Monomial::from_exponents(&[2, 1, 0]).unwrap());
        assert_eq!(f.leading_monomial().unwrap(), &Monomial::from_exponents(&[1, 0, 3]).unwrap());
    }

    fn random_poly(ring: &Arc<Ring<Fp>>, rng: &mut ChaCha8Rng, terms: usize, maxdeg: u32) -> Polynomial<Fp> {
        use rand::Rng;
        let n = ring.nvars();
        let t = (0..terms)
            .map(|_| {
                let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=maxdeg)).collect();
                (Monomial::from_exponents(&e).unwrap(), Fp::random(ring.domain(), rng))
            })
            .collect();
        Polynomial::from_terms(ring, MonomialOrder::GrevLex, t)
    }

    #[test]
    fn eval_is_a_homomorphism() {
        let ring: Arc<Ring<Fp>> = Ring::new(["a", "b", "c"], crate::algebra::DEFAULT_PRIMES[0]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let f = random_poly(&ring, &mut rng, 6, 3);
            let g = random_poly(&ring, &mut rng, 6, 3);
            let pt: Vec<Fp> = (0..3).map(|_| Fp::random(ring.domain(), &mut rng)).collect();
            let lhs = (&f * &g).eval(&pt).unwrap();
            let rhs = f.eval(&pt).unwrap().mul(&g.eval(&pt).unwrap());
            assert_eq!(lhs, rhs);
            assert_eq!((&f + &g).eval(&pt).unwrap(), f.eval(&pt).unwrap().add(&g.eval(&pt).unwrap()));
        }
    }

    #[test]
    fn leibniz_rule() {
        let ring: Arc<Ring<Fp>> = Ring::new(["a", "b"], 101);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let f = random_poly(&ring, &mut rng, 5, 4);
            let g = random_poly(&ring, &mut rng, 5, 4);
            for v in 0..2 {
                let lhs = (&f * &g).partial_derivative(v);
                let rhs = &(&f * &g.partial_derivative(v)) + &(&g * &f.partial_derivative(v));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn substitution_composes() {
        let p = 1009;
        let src: Arc<Ring<Fp>> = Ring::new(["a", "b"], p);
        let mid: Arc<Ring<Fp>> = Ring::new(["c", "d"], p);
        let dst: Arc<Ring<Fp>> = Ring::new(["e"], p);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let f = random_poly(&src, &mut rng, 4, 2);
            let sigma = vec![random_poly(&mid, &mut rng, 3, 2), random_poly(&mid, &mut rng, 3, 2)];
            let tau = vec![random_poly(&dst, &mut rng, 3, 2), random_poly(&dst, &mut rng, 3, 2)];
            let two_step = f.substitute(&sigma).unwrap().substitute(&tau).unwrap();
            let composed: Vec<_> = sigma.iter().map(|s| s.substitute(&tau).unwrap()).collect();
            assert_eq!(two_step, f.substitute(&composed).unwrap());
        }
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u32..4, 3), -20i64..20), 0..8)
    }

    fn build(ring: &Arc<Ring<Rational>>, spec: &[(Vec<u32>, i64)]) -> Polynomial<Rational> {
        let t = spec.iter().map(|(e, c)| (Monomial::from_exponents(e).unwrap(), Rational::from_integer(*c))).collect();
        Polynomial::from_terms(ring, MonomialOrder::GrevLex, t)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let r = qring(&["x", "y", "z"]);
            let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert!((&f + &(-&f)).is_zero());
            prop_assert_eq!(&f * &r.one(), f.clone());
            for w in f.terms().windows(2) {
                prop_assert_eq!(MonomialOrder::GrevLex.cmp(&w[0].0, &w[1].0), Ordering::Greater);
            }
        }
    }
}
