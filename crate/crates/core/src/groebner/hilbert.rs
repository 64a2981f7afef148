//! Hilbert series of monomial ideals, and the dimension and degree they encode.

use crate::algebra::{Field, Monomial};

use super::buchberger::GroebnerBasis;
use super::GroebnerError;

/// Projective dimension, degree and Hilbert series numerator of `S/I`.
///
/// The series is `numerator(t) / (1 - t)^n` with `n` the number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Projective dimension; -1 when the affine cone is a point or empty.
    pub dimension: i64,
    /// Degree; 0 only for the unit ideal.
    pub degree: i64,
    pub series_numerator: Vec<i64>,
}

/// Hilbert data of a homogeneous ideal from its Gröbner basis.
pub fn hilbert_data<F: Field>(gb: &GroebnerBasis<F>) -> Result<HilbertData, GroebnerError> {
    if gb.basis().iter().any(|g| !g.is_homogeneous()) {
        return Err(GroebnerError::NotHomogeneous);
    }
    let n = gb.ring().nvars();
    Ok(hilbert_data_of_monomials(&gb.leading_monomials(), n))
}

pub fn hilbert_data_of_monomials(gens: &[Monomial], nvars: usize) -> HilbertData {
    let numerator = hilbert_numerator(gens.to_vec());
    let (dimension, degree) = dimension_and_degree(&numerator, nvars);
    HilbertData { dimension, degree, series_numerator: numerator }
}

fn dimension_and_degree(numerator: &[i64], nvars: usize) -> (i64, i64) {
    if numerator.iter().all(|&c| c == 0) {
        return (-1, 0);
    }
    let mut q = numerator.to_vec();
    let mut cancelled = 0usize;
    while q.iter().sum::<i64>() == 0 {
        q = divide_by_one_minus_t(&q);
        cancelled += 1;
    }
    let krull = nvars as i64 - cancelled as i64;
    (krull - 1, q.iter().sum())
}

/// Exact division by `(1 - t)`; caller guarantees `p(1) = 0`.
fn divide_by_one_minus_t(p: &[i64]) -> Vec<i64> {
    // p = (1 - t) q  =>  q_k = sum_{j<=k} p_j
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    q
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn shift(a: &[i64], by: usize) -> Vec<i64> {
    let mut out = vec![0; by];
    out.extend_from_slice(a);
    out
}

/// Numerator `K(t)` of the Hilbert series of `S / <gens>`, by pivot splitting:
/// `K(I) = K(I + <p>) + t^deg(p) K(I : p)`.
fn hilbert_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, m| {
            let mut f = vec![0; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        });
    }
    // pivot on the variable occurring in the most non-linear generators
    let n = gens[0].nvars();
    let var = (0..n)
        .max_by_key(|&i| (gens.iter().filter(|m| m.exponent(i) > 0 && m.degree() > 1).count(), std::cmp::Reverse(i)))
        .expect("at least one variable");
    let pivot = Monomial::variable(n, var);
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| if m.exponent(var) > 0 { m.with_exponent(var, m.exponent(var) - 1) } else { m.clone() })
        .collect();
    poly_add(&hilbert_numerator(with_pivot), &shift(&hilbert_numerator(colon), 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    /// Count standard monomials of each degree directly.
    fn brute_force_hilbert_function(gens: &[Monomial], nvars: usize, max_deg: u32) -> Vec<i64> {
        fn rec(prefix: &mut Vec<u32>, left: u32, nvars: usize, gens: &[Monomial], count: &mut i64) {
            if prefix.len() == nvars - 1 {
                prefix.push(left);
                let m = Monomial::from_exponents(prefix).unwrap();
                if !gens.iter().any(|g| g.divides(&m)) {
                    *count += 1;
                }
                prefix.pop();
                return;
            }
            for e in 0..=left {
                prefix.push(e);
                rec(prefix, left - e, nvars, gens, count);
                prefix.pop();
            }
        }
        (0..=max_deg)
            .map(|d| {
                let mut c = 0;
                rec(&mut Vec::new(), d, nvars, gens, &mut c);
                c
            })
            .collect()
    }

    fn series_coefficients(numerator: &[i64], nvars: usize, max_deg: u32) -> Vec<i64> {
        // expand numerator / (1-t)^n
        let mut s: Vec<i64> = (0..=max_deg as usize).map(|k| numerator.get(k).copied().unwrap_or(0)).collect();
        for _ in 0..nvars {
            for k in 1..s.len() {
                s[k] += s[k - 1];
            }
        }
        s
    }

    #[test]
    fn line_in_the_plane() {
        let h = hilbert_data_of_monomials(&[mono(&[1, 0, 0])], 3);
        assert_eq!((h.dimension, h.degree), (1, 1));
    }

    #[test]
    fn irrelevant_and_unit_ideals() {
        let h = hilbert_data_of_monomials(&[mono(&[1, 0]), mono(&[0, 1])], 2);
        assert_eq!((h.dimension, h.degree), (-1, 1));
        let u = hilbert_data_of_monomials(&[mono(&[0, 0])], 2);
        assert_eq!((u.dimension, u.degree), (-1, 0));
    }

    #[test]
    fn numerator_matches_brute_force_counts() {
        let cases: Vec<(Vec<Monomial>, usize)> = vec![
            (vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 3, 1])], 3),
            (vec![mono(&[1, 1, 0, 0]), mono(&[0, 1, 1, 0]), mono(&[0, 0, 1, 1]), mono(&[2, 0, 0, 1])], 4),
            (vec![mono(&[0, 0, 0, 0])], 4),
            (vec![], 2),
        ];
        for (gens, n) in cases {
            let h = hilbert_data_of_monomials(&gens, n);
            assert_eq!(series_coefficients(&h.series_numerator, n, 8), brute_force_hilbert_function(&gens, n, 8));
        }
    }

    #[test]
    fn twisted_cubic_initial_ideal() {
        // grevlex initial ideal of the twisted cubic: x1^2, x1x2, x2^2 in x0..x3
        let gens = vec![mono(&[0, 2, 0, 0]), mono(&[0, 1, 1, 0]), mono(&[0, 0, 2, 0])];
        let h = hilbert_data_of_monomials(&gens, 4);
        assert_eq!((h.dimension, h.degree), (1, 3));
    }
}
