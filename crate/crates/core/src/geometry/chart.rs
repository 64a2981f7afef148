use std::sync::Arc;

use crate::algebra::{Field, MonomialOrder, Polynomial, Ring, RingExt};
use crate::groebner::Ideal;

use super::plucker::secant_family;
use super::scroll::{two_by_two_minors, ScrollSpec};
use super::GeometryError;

/// Indices `i` with a chart coordinate pair `xi_i, eta_i`: `{1..r+1} \ {b+1}`.
fn chart_indices(spec: ScrollSpec) -> Vec<usize> {
    (1..=spec.r() + 1).filter(|&i| i != spec.b() + 1).collect()
}

/// Ring of the chart `U` around a ruling line: `xi_i` then `eta_i` for `i` in
/// `{1..r+1} \ {b+1}`.
pub fn chart_ring<F: Field>(spec: ScrollSpec, domain: &F::Domain) -> Arc<Ring<F>> {
    let idx = chart_indices(spec);
    let names: Vec<String> =
        idx.iter().map(|i| format!("xi{i}")).chain(idx.iter().map(|i| format!("eta{i}"))).collect();
    Ring::new(names, domain.clone())
}

/// Position of `xi_i` (or `eta_i` when `eta`) in [`chart_ring`].
pub(crate) fn chart_var(spec: ScrollSpec, i: usize, eta: bool) -> usize {
    let idx = chart_indices(spec);
    let pos = idx.iter().position(|&j| j == i).expect("chart index");
    if eta {
        pos + idx.len()
    } else {
        pos
    }
}

/// The chart relations in graph form `xi_i - Xi_i(xi1, eta1, xi_{b+2}, eta_{b+2})`
/// and `eta_i - Eta_i(...)`, with `Xi, Eta` given by the recursion
/// `xi_{i+1} = xi_1 xi_i + eta_i xi_{b+2}`, `eta_{i+1} = xi_i eta_1 + eta_i eta_{b+2}`.
pub fn chart_ideal<F: Field>(spec: ScrollSpec, domain: &F::Domain) -> Result<Ideal<F>, GeometryError> {
    spec.require_r(3)?;
    let ring = chart_ring::<F>(spec, domain);
    let (b, r) = (spec.b(), spec.r());
    let var = |i: usize, eta: bool| ring.var(chart_var(spec, i, eta));
    let (xi1, eta1, xib, etab) = (var(1, false), var(1, true), var(b + 2, false), var(b + 2, true));

    let mut gens = Vec::new();
    for block in [(1..b).collect::<Vec<_>>(), (b + 2..=r).collect()] {
        let Some(&start) = block.first() else { continue };
        let (mut xi, mut eta) = (var(start, false), var(start, true));
        for i in block {
            let next_xi = &(&xi1 * &xi) + &(&eta * &xib);
            let next_eta = &(&xi * &eta1) + &(&eta * &etab);
            gens.push(&var(i + 1, false) - &next_xi);
            gens.push(&var(i + 1, true) - &next_eta);
            xi = next_xi;
            eta = next_eta;
        }
    }
    Ok(Ideal::new(gens, MonomialOrder::GrevLex)?)
}

/// Chart coordinates of the secant line through the scroll points at
/// `(t1, v1)` and `(t2, v2)`: numerators in the order of [`chart_ring`] and the
/// common denominator `v2 - v1`.
///
/// The rows `(v2 P1 - v1 P2) / (v2 - v1)` and `(P2 - P1) / (v2 - v1)` are the
/// normal form with `x0 = 1, x_{b+1} = 0` and `x0 = 0, x_{b+1} = 1`.
pub fn chart_coordinates<F: Field>(spec: ScrollSpec, domain: &F::Domain) -> (Vec<Polynomial<F>>, Polynomial<F>) {
    let fam = secant_family::<F>(spec, domain);
    let ring = fam.source().clone();
    let (v1, v2) = (ring.var(1), ring.var(3));
    let (p1, p2) = (fam.p(), fam.q());
    let idx = chart_indices(spec);
    let mut out: Vec<Polynomial<F>> = idx.iter().map(|&i| &(&v2 * &p1[i]) - &(&v1 * &p2[i])).collect();
    out.extend(idx.iter().map(|&i| &p2[i] - &p1[i]));
    (out, &v2 - &v1)
}

/// 2×2 minors of the 3×(r-1) matrix with rows `(xi_1..xi_{r-1})`,
/// `(eta_1 - xi_0, ..., eta_{r-1} - xi_{r-2})` and `(eta_0..eta_{r-2})`.
pub fn tangent_cone_ideal<F: Field>(r: usize, domain: &F::Domain) -> Result<Ideal<F>, GeometryError> {
    if r < 3 {
        return Err(GeometryError::RTooSmall { min: 3, r });
    }
    let names: Vec<String> = (0..r).map(|i| format!("xi{i}")).chain((0..r).map(|i| format!("eta{i}"))).collect();
    let ring: Arc<Ring<F>> = Ring::new(names, domain.clone());
    let xi = |i: usize| ring.var(i);
    let eta = |i: usize| ring.var(r + i);
    let rows = vec![
        (1..r).map(xi).collect(),
        (1..r).map(|j| &eta(j) - &xi(j - 1)).collect(),
        (0..r - 1).map(eta).collect::<Vec<_>>(),
    ];
    Ok(Ideal::new(two_by_two_minors(&rows), MonomialOrder::GrevLex)?)
}

/// A point of the tangent cone whose matrix has rows `c_k w`, built from
/// `c = (c0, c1, c2)` and the two seeds `w0, w1` of
/// `c2 w_{j+1} = c1 w_j + c0 w_{j-1}`. `None` when `c2 = 0`.
pub fn tangent_cone_point<F: Field>(r: usize, c: [&F; 3], w0: &F, w1: &F) -> Option<Vec<F>> {
    if r < 3 {
        return None;
    }
    let inv = c[2].inv()?;
    let mut w = vec![w0.clone(), w1.clone()];
    while w.len() < r - 1 {
        let j = w.len() - 1;
        w.push(c[1].mul(&w[j]).add(&c[0].mul(&w[j - 1])).mul(&inv));
    }
    let mut point = Vec::with_capacity(2 * r);
    point.push(c[2].mul(&w[1]).sub(&c[1].mul(&w[0])));
    point.extend(w.iter().map(|x| c[0].mul(x)));
    point.extend(w.iter().map(|x| c[2].mul(x)));
    point.push(c[1].mul(&w[r - 2]).add(&c[0].mul(&w[r - 3])));
    Some(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fp, Rational};
    use crate::geometry::binomial;
    use crate::geometry::scroll::scroll_matrix;
    use crate::groebner::{buchberger, hilbert_data, jacobian_rank_at, GroebnerConfig};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: u32 = 2_147_483_647;

    fn all_specs(min_r: usize, max_r: usize) -> Vec<ScrollSpec> {
        (min_r..=max_r).flat_map(|r| (1..=r / 2).map(move |a| ScrollSpec::new(a, r - a).unwrap())).collect()
    }

    #[test]
    fn relation_counts_and_graph_form() {
        let spec = ScrollSpec::new(1, 2).unwrap();
        let ideal = chart_ideal::<Rational>(spec, &()).unwrap();
        assert_eq!(ideal.ring().nvars(), 6);
        assert_eq!(ideal.generators().len(), 2);
        for spec in all_specs(3, 6) {
            let ideal = chart_ideal::<Fp>(spec, &P).unwrap();
            let b = spec.b();
            assert_eq!(ideal.generators().len(), 2 * spec.r() - 4);
            let free: Vec<usize> = [(1, false), (1, true), (b + 2, false), (b + 2, true)]
                .iter()
                .map(|&(i, e)| chart_var(spec, i, e))
                .collect();
            let mut leads = Vec::new();
            for g in ideal.generators() {
                // exactly one dependent variable, appearing linearly with coefficient ±1
                let dependent: Vec<usize> = (0..ideal.ring().nvars())
                    .filter(|v| !free.contains(v) && g.degree_in(*v).unwrap_or(0) > 0)
                    .collect();
                assert_eq!(dependent.len(), 1);
                assert_eq!(g.degree_in(dependent[0]), Some(1));
                leads.push(dependent[0]);
            }
            leads.sort();
            leads.dedup();
            assert_eq!(leads.len(), 2 * spec.r() - 4);
        }
        assert!(chart_ideal::<Fp>(ScrollSpec::new(1, 1).unwrap(), &P).is_err());
    }

    #[test]
    fn seed_relations() {
        let spec = ScrollSpec::new(2, 2).unwrap();
        let ideal = chart_ideal::<Rational>(spec, &()).unwrap();
        let r = ideal.ring();
        let expect = [
            crate::algebra::parse_polynomial(r, "xi2 - xi1^2 - eta1*xi4").unwrap(),
            crate::algebra::parse_polynomial(r, "eta2 - xi1*eta1 - eta1*eta4").unwrap(),
        ];
        for e in &expect {
            assert!(ideal.generators().contains(e));
        }
    }

    /// Substituting a chart line into the scroll minors gives quadratics
    /// proportional to `l^2 xi_{b+2} + l m (eta_{b+2} - xi_1) - m^2 eta_1`.
    #[test]
    fn chart_lines_give_proportional_quadratics() {
        for spec in all_specs(3, 6) {
            let ideal = chart_ideal::<Fp>(spec, &P).unwrap();
            let chart = ideal.ring().clone();
            let (b, r) = (spec.b(), spec.r());
            // solve the graph relations for the dependent variables
            let mut images: Vec<Polynomial<Fp>> = chart.gens();
            for g in ideal.generators() {
                let dep = (0..chart.nvars())
                    .find(|v| {
                        ![
                            chart_var(spec, 1, false),
                            chart_var(spec, 1, true),
                            chart_var(spec, b + 2, false),
                            chart_var(spec, b + 2, true),
                        ]
                        .contains(v)
                            && g.degree_in(*v).unwrap_or(0) > 0
                    })
                    .unwrap();
                images[dep] = &chart.var(dep) - g;
            }
            let names: Vec<String> = chart.vars().iter().cloned().chain(["l".to_string(), "m".to_string()]).collect();
            let big: Arc<Ring<Fp>> = Ring::new(names, P);
            let n = chart.nvars();
            let lift = |p: &Polynomial<Fp>| p.relabel(&big, &(0..n).collect::<Vec<_>>());
            let (l, m) = (big.var(n), big.var(n + 1));
            let mut point = Vec::new();
            for i in 0..=r + 1 {
                point.push(if i == 0 {
                    l.clone()
                } else if i == b + 1 {
                    m.clone()
                } else {
                    &(&l * &lift(&images[chart_var(spec, i, false)])) + &(&m * &lift(&images[chart_var(spec, i, true)]))
                });
            }
            let xi1 = lift(&chart.var(chart_var(spec, 1, false)));
            let eta1 = lift(&chart.var(chart_var(spec, 1, true)));
            let xib = lift(&chart.var(chart_var(spec, b + 2, false)));
            let etab = lift(&chart.var(chart_var(spec, b + 2, true)));
            let reference = [xib.clone(), &etab - &xi1, -&eta1];
            let coeffs = |f: &Polynomial<Fp>| -> [Polynomial<Fp>; 3] {
                let mut out = [big.zero(), big.zero(), big.zero()];
                for (mono, c) in f.terms() {
                    let k = mono.exponent(n + 1) as usize;
                    assert_eq!(mono.exponent(n) as usize + k, 2);
                    let stripped = mono.with_exponent(n, 0).with_exponent(n + 1, 0);
                    out[k] = &out[k] + &Polynomial::monomial(&big, *c, stripped);
                }
                out
            };
            let mats = scroll_matrix::<Fp>(spec, &P);
            let minors = two_by_two_minors(&mats);
            let mut nonzero = 0;
            for g in &minors {
                let quad = g.substitute(&point).unwrap();
                if quad.is_zero() {
                    continue;
                }
                nonzero += 1;
                let c = coeffs(&quad);
                for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                    assert!((&(&c[i] * &reference[j]) - &(&c[j] * &reference[i])).is_zero(), "{spec:?}");
                }
            }
            assert!(nonzero > 0);
        }
    }

    #[test]
    fn tangent_cone_generators() {
        let ideal = tangent_cone_ideal::<Fp>(4, &P).unwrap();
        assert_eq!(ideal.ring().nvars(), 8);
        assert_eq!(ideal.generators().len(), 9);
        for r in 3..=6 {
            let ideal = tangent_cone_ideal::<Fp>(r, &P).unwrap();
            assert_eq!(ideal.generators().len(), 3 * binomial(r - 1, 2));
            assert!(ideal.is_homogeneous());
        }
        assert!(tangent_cone_ideal::<Fp>(2, &P).is_err());
    }

    #[test]
    fn tangent_cone_points_are_smooth() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for r in 3..=5 {
            let ideal = tangent_cone_ideal::<Fp>(r, &P).unwrap();
            for _ in 0..20 {
                let v: Vec<Fp> = (0..5).map(|_| Fp::random(&P, &mut rng)).collect();
                let pt = tangent_cone_point(r, [&v[0], &v[1], &v[2]], &v[3], &v[4]).unwrap();
                assert!(ideal.generators().iter().all(|g| g.eval(&pt).unwrap().is_zero()));
                assert_eq!(jacobian_rank_at(ideal.generators(), &pt).unwrap(), 2 * r - 4);
            }
            let origin = vec![Fp::new(0, P); 2 * r];
            assert_eq!(jacobian_rank_at(ideal.generators(), &origin).unwrap(), 0);
        }
    }

    #[test]
    fn tangent_cone_hilbert_data() {
        for r in 3..=5 {
            let ideal = tangent_cone_ideal::<Fp>(r, &P).unwrap();
            let h = hilbert_data(&buchberger(&ideal, &GroebnerConfig::default()).unwrap()).unwrap();
            assert_eq!((h.dimension, h.degree), (3, binomial(r, 2) as i64));
        }
    }
}
