//! Counting solutions of zero-dimensional systems through the staircase.

use std::collections::{BTreeSet, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, Monomial, Polynomial, UniPoly};

use super::buchberger::{buchberger, GroebnerBasis, GroebnerConfig};
use super::ideal::Ideal;
use super::GroebnerError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(usize),
    Infinite,
}

/// Solution count of a zero-dimensional ideal and whether the solutions were
/// shown to be reduced points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroDimCount {
    pub count: usize,
    pub certified_reduced: bool,
}

/// Number of standard monomials, or `Infinite` when the staircase is unbounded.
pub fn quotient_dimension<F: Field>(gb: &GroebnerBasis<F>) -> QuotientDimension {
    match standard_monomials(&gb.leading_monomials(), gb.ring().nvars()) {
        Some(s) => QuotientDimension::Finite(s.len()),
        None => QuotientDimension::Infinite,
    }
}

/// Standard monomials in increasing degree, or `None` if infinitely many.
pub fn standard_monomials(leading: &[Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    for v in 0..nvars {
        if !leading.iter().any(|m| m.pure_power_var() == Some(v) || m.is_one()) {
            return None;
        }
    }
    let in_ideal = |m: &Monomial| leading.iter().any(|l| l.divides(m));
    let one = Monomial::one(nvars);
    if in_ideal(&one) {
        return Some(Vec::new());
    }
    let mut seen = BTreeSet::new();
    let mut frontier = vec![one.clone()];
    seen.insert(one.exponents().collect::<Vec<_>>());
    let mut out = vec![one];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for v in 0..nvars {
                let n = m.mul(&Monomial::variable(nvars, v));
                if in_ideal(&n) || !seen.insert(n.exponents().collect::<Vec<_>>()) {
                    continue;
                }
                next.push(n);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Some(out)
}

/// Count the solutions of `ideal` and certify reducedness.
///
/// The count is the staircase size `N`. The solutions are certified reduced
/// when the minimal polynomial of multiplication by a random linear form on
/// the quotient has degree `N` and is squarefree.
pub fn certified_zero_dim_count<F: Field>(
    ideal: &Ideal<F>,
    seed: u64,
    config: &GroebnerConfig,
) -> Result<ZeroDimCount, GroebnerError> {
    let gb = buchberger(ideal, config)?;
    certified_count_from_basis(&gb, seed)
}

pub fn certified_count_from_basis<F: Field>(gb: &GroebnerBasis<F>, seed: u64) -> Result<ZeroDimCount, GroebnerError> {
    let ring = gb.ring();
    let n = ring.nvars();
    let domain = ring.domain();
    let staircase = standard_monomials(&gb.leading_monomials(), n).ok_or(GroebnerError::InfiniteQuotient)?;
    let count = staircase.len();
    if count == 0 {
        return Ok(ZeroDimCount { count: 0, certified_reduced: true });
    }
    let index: HashMap<Vec<u32>, usize> =
        staircase.iter().enumerate().map(|(i, m)| (m.exponents().collect(), i)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms: Vec<(Monomial, F)> = (0..n).map(|v| (Monomial::variable(n, v), F::random(domain, &mut rng))).collect();
    let u = Polynomial::from_terms(ring, gb.order(), terms);

    let to_vec = |p: &Polynomial<F>| -> Vec<F> {
        let mut v = vec![F::zero(domain); count];
        for (m, c) in p.terms() {
            v[index[&m.exponents().collect::<Vec<_>>()]] = c.clone();
        }
        v
    };

    // Krylov sequence 1, u, u^2, ... reduced into the staircase basis; the
    // first dependency gives the minimal polynomial of u.
    let mut echelon: Vec<(usize, Vec<F>, Vec<F>)> = Vec::new(); // (pivot, row, combination)
    let mut power = gb.reduce(&Polynomial::from_terms(ring, gb.order(), vec![(Monomial::one(n), F::one(domain))]));
    for k in 0..=count {
        let mut row = to_vec(&power);
        let mut comb = vec![F::zero(domain); k + 1];
        comb[k] = F::one(domain);
        for (pivot, prow, pcomb) in &echelon {
            let c = row[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(prow) {
                *x = x.sub(&c.mul(y));
            }
            for (x, y) in comb.iter_mut().zip(pcomb) {
                *x = x.sub(&c.mul(y));
            }
        }
        match row.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                let inv = row[pivot].inv().expect("nonzero pivot");
                let row: Vec<F> = row.iter().map(|x| x.mul(&inv)).collect();
                let comb: Vec<F> = comb.iter().map(|x| x.mul(&inv)).collect();
                echelon.push((pivot, row, comb));
            }
            None => {
                let minpoly = UniPoly::new(domain, comb);
                let degree = minpoly.degree().unwrap_or(0);
                let certified_reduced = degree == count && minpoly.is_squarefree();
                return Ok(ZeroDimCount { count, certified_reduced });
            }
        }
        power = gb.reduce(&(&u * &power));
    }
    unreachable!("a quotient of dimension {count} has a dependency among {} powers", count + 1)
}
