//! Intersection numbers on the blow-up of G(1,3) along a conic, and linear
//! systems of forms singular along a conic in P^5.

use std::time::Instant;

use crate::algebra::{Field, Matrix};

use super::{counting::fourfold_degree_formula, InvariantsError, PrimeTag, VerificationReport};

/// The divisor class `h H + e E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlowupClass {
    pub h: i64,
    pub e: i64,
}

/// `H^(4-k) E^k` for k = 0..4.
const TABLE: [i64; 5] = [2, 0, 0, 2, 6];

impl BlowupClass {
    pub fn new(h: i64, e: i64) -> Self {
        BlowupClass { h, e }
    }

    pub const H: BlowupClass = BlowupClass { h: 1, e: 0 };
    pub const E: BlowupClass = BlowupClass { h: 0, e: 1 };

    /// Intersection number of four classes, expanded multilinearly.
    pub fn intersect(classes: [BlowupClass; 4]) -> i64 {
        let mut total = 0;
        for mask in 0u32..16 {
            let mut coeff = 1;
            for (i, c) in classes.iter().enumerate() {
                coeff *= if mask & (1 << i) != 0 { c.e } else { c.h };
            }
            total += coeff * TABLE[mask.count_ones() as usize];
        }
        total
    }
}

/// `(aH - (a-1)E)^4` and `(aH - (a-1)E)^3 E` against their closed forms.
pub fn blowup_intersection(a: i64) -> Result<VerificationReport, InvariantsError> {
    let start = Instant::now();
    if a < 1 {
        return Err(InvariantsError::Precondition(format!("a ⩾ 1 required, got a = {a}")));
    }
    let d = BlowupClass::new(a, -(a - 1));
    let top = BlowupClass::intersect([d; 4]);
    let exc = BlowupClass::intersect([d, d, d, BlowupClass::E]);
    let closed = 12 * a * a - 16 * a + 6;
    let agrees = closed == fourfold_degree_formula(2 * a);
    Ok(VerificationReport::new("blowup", vec![top, exc], vec![closed, 6 * (a - 1) * (a - 1)], 0, PrimeTag::Rational)
        .param("a", a)
        .param("r", 2 * a)
        .param("agrees_with_degree_formula", agrees)
        .require(agrees)
        .timed(start))
}

fn monomials(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in (0..=degree).rev() {
        for mut rest in monomials(nvars - 1, degree - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Dimension of the space of degree-`degree` forms on P^5 vanishing to
/// order `mult` along the conic `(s^2, st, t^2, 0, 0, 0)`, and the rank of
/// the condition matrix.
fn forms_vanishing<F: Field>(degree: u32, mult: u32, domain: &F::Domain) -> (usize, usize) {
    let cols = monomials(6, degree);
    let mut rows = Vec::new();
    for order in 0..mult.min(degree + 1) {
        for alpha in monomials(6, order) {
            // derivative d^alpha pulled back to the conic: binary form of degree 2(degree - order)
            let width = 2 * (degree - order) as usize + 1;
            let mut block = vec![vec![F::zero(domain); cols.len()]; width];
            for (c, m) in cols.iter().enumerate() {
                if m.iter().zip(&alpha).any(|(mi, ai)| mi < ai) {
                    continue;
                }
                let rem: Vec<u32> = m.iter().zip(&alpha).map(|(mi, ai)| mi - ai).collect();
                if rem[3..].iter().any(|&e| e > 0) {
                    continue;
                }
                let falling: i64 =
                    m.iter().zip(&alpha).map(|(&mi, &ai)| (mi - ai + 1..=mi).map(i64::from).product::<i64>()).product();
                block[(rem[1] + 2 * rem[2]) as usize][c] = F::from_i64(domain, falling);
            }
            rows.extend(block);
        }
    }
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows, cols.len()).rank() };
    (cols.len() - rank, rank)
}

/// `|aH - (a-1)E|` realized as degree-a forms on P^5 singular to order a-1
/// along a conic, before and after removing the cones over the conic's plane.
pub fn conic_linear_system<F: Field>(a: u32, domain: &F::Domain) -> Result<VerificationReport, InvariantsError> {
    let start = Instant::now();
    if !(2..=4).contains(&a) {
        return Err(InvariantsError::Precondition(format!("2 ⩽ a ⩽ 4 required, got a = {a}")));
    }
    let (dim, conditions) = forms_vanishing::<F>(a, a - 1, domain);
    let (cone_dim, _) = forms_vanishing::<F>(a - 2, a - 2, domain);
    let projective = dim as i64 - 1;
    let cones = cone_dim as i64 - 1;
    let h = projective - 1 - cones;
    let a = a as i64;
    Ok(VerificationReport::new(
        "conic-system",
        vec![projective, h],
        vec![5 * a * (a + 1) / 2, a * (2 * a + 3)],
        0,
        PrimeTag::of::<F>(domain),
    )
    .param("a", a)
    .param("condition_rank", conditions)
    .param("cone_dimension", cones)
    .timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fp, Rational};

    #[test]
    fn table_entries() {
        use BlowupClass as B;
        assert_eq!(B::intersect([B::H; 4]), 2);
        assert_eq!(B::intersect([B::E; 4]), 6);
        assert_eq!(B::intersect([B::H, B::E, B::E, B::E]), 2);
        assert_eq!(B::intersect([B::E, B::H, B::E, B::H]), 0);
    }

    #[test]
    fn blowup_values() {
        assert_eq!(blowup_intersection(1).unwrap().computed, vec![2, 0]);
        assert_eq!(blowup_intersection(2).unwrap().computed, vec![22, 6]);
        assert_eq!(blowup_intersection(3).unwrap().computed, vec![66, 24]);
        assert!(blowup_intersection(0).is_err());
    }

    #[test]
    fn quadrics_through_conic() {
        // 21 quadrics, 5 conditions from the degree-4 pullback
        assert_eq!(forms_vanishing::<Rational>(2, 1, &()), (16, 5));
        let rep = conic_linear_system::<Rational>(2, &()).unwrap();
        assert_eq!(rep.computed, vec![15, 14]);
        let rep = conic_linear_system::<Fp>(3, &2_147_483_647).unwrap();
        assert_eq!(rep.computed, vec![30, 27]);
    }

    #[test]
    fn cones_over_the_plane() {
        // forms of degree d with multiplicity d along the conic involve x3, x4, x5 only
        for d in 0..4u32 {
            let expected = ((d + 1) * (d + 2) / 2) as usize;
            assert_eq!(forms_vanishing::<Rational>(d, d, &()).0, expected);
        }
    }
}
