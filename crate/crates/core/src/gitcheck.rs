//! Semistability certificate for hyperplanes of the span of `X_{1,3}`.
//!
//! A hyperplane `H` cuts a binary quartic on the curve `Γ` of ruling lines.
//! When that quartic is nonzero and has no root of multiplicity three or
//! more, `H` is semistable. Otherwise nothing is claimed.

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{format_polynomial, Field, Matrix, Monomial, MonomialOrder, Polynomial, Ring, RingExt, UniPoly};
use crate::geometry::{chord_family, gamma_family, singular_scroll_ideal, GeometryError, ScrollSpec};
use crate::invariants::structure::span_basis;
use crate::invariants::{PrimeTag, VerificationReport};

/// Projective dimension of the span of `X_{1,3}` plus one.
pub const SPAN_COORDS: usize = 15;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GitError {
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("hyperplane coefficients are all zero")]
    ZeroHyperplane,
    #[error("zero binary form has no root multiplicity")]
    ZeroForm,
    #[error("span coordinates do not restrict to the quartics on Γ")]
    DegenerateSpan,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Binary form of degree `d`; `coeffs[k]` multiplies `s^(d-k) t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> BinaryForm<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form has at least one coefficient");
        BinaryForm { coeffs }
    }

    /// Coefficients of a homogeneous polynomial in a two-variable ring.
    pub fn from_polynomial(f: &Polynomial<F>, degree: usize) -> Self {
        let mut coeffs = vec![F::zero(f.ring().domain()); degree + 1];
        for (m, c) in f.terms() {
            debug_assert_eq!(m.degree() as usize, degree);
            coeffs[m.exponent(1) as usize] = c.clone();
        }
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }

    pub fn to_polynomial(&self, ring: &Arc<Ring<F>>) -> Polynomial<F> {
        let d = self.degree() as u32;
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (Monomial::from_exponents(&[d - k as u32, k as u32]).expect("degree under cap"), c.clone()))
            .collect();
        Polynomial::from_terms(ring, MonomialOrder::Lex, terms)
    }

    /// `f(alpha s + beta t, gamma s + delta t)`.
    pub fn substitute(&self, m: [&F; 4], domain: &F::Domain) -> Self {
        let ring = st_ring::<F>(domain);
        let (s, t) = (ring.var(0), ring.var(1));
        let images = [&s.scale(m[0]) + &t.scale(m[1]), &s.scale(m[2]) + &t.scale(m[3])];
        let f = self.to_polynomial(&ring).substitute(&images).expect("two variables");
        BinaryForm::from_polynomial(&f, self.degree())
    }

    /// Text form over the variables `s, t`.
    pub fn format(&self, domain: &F::Domain) -> String {
        format_polynomial(&self.to_polynomial(&st_ring::<F>(domain)))
    }
}

fn st_ring<F: Field>(domain: &F::Domain) -> Arc<Ring<F>> {
    Ring::new(["s", "t"], domain.clone())
}

/// A hyperplane of the span, in the coordinates chosen by [`SpanCoordinates`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneClass<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> HyperplaneClass<F> {
    pub fn new(coeffs: Vec<F>) -> Result<Self, GitError> {
        if coeffs.len() != SPAN_COORDS {
            return Err(GitError::CoefficientCount { expected: SPAN_COORDS, got: coeffs.len() });
        }
        if coeffs.iter().all(Field::is_zero) {
            return Err(GitError::ZeroHyperplane);
        }
        Ok(HyperplaneClass { coeffs })
    }

    pub fn random<R: rand::Rng + ?Sized>(domain: &F::Domain, rng: &mut R) -> Self {
        loop {
            let coeffs: Vec<F> = (0..SPAN_COORDS).map(|_| F::random(domain, rng)).collect();
            if let Ok(h) = HyperplaneClass::new(coeffs) {
                return h;
            }
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn scale(&self, c: &F) -> Self {
        HyperplaneClass { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }
}

/// Coordinates on the span of `X_{1,3}`: fifteen Plücker coordinates of
/// `G(1,5)` in the `x0, x1, y0..y3` system whose restrictions are
/// independent, together with their restrictions to `Γ`.
#[derive(Clone, Debug)]
pub struct SpanCoordinates<F: Field> {
    names: Vec<String>,
    gamma: Vec<BinaryForm<F>>,
    domain: F::Domain,
}

impl<F: Field> SpanCoordinates<F> {
    pub fn new(domain: &F::Domain) -> Result<Self, GitError> {
        let spec = ScrollSpec::new(1, 3)?;
        let singular = singular_scroll_ideal::<F>(4, domain)?;
        let fam = chord_family::<F>(spec, domain).permuted(&singular.to_scroll);
        let basis = span_basis(&fam);
        if basis.len() != SPAN_COORDS {
            return Err(GitError::DegenerateSpan);
        }
        let gamma = gamma_family::<F>(domain);
        let coords = SpanCoordinates {
            names: basis.iter().map(|&k| gamma.label_name(k)).collect(),
            gamma: basis.iter().map(|&k| BinaryForm::from_polynomial(&gamma.entries()[k], 4)).collect(),
            domain: domain.clone(),
        };
        if coords.restriction_rank() != 5 {
            return Err(GitError::DegenerateSpan);
        }
        Ok(coords)
    }

    /// Plücker label names of the fifteen coordinates, e.g. `p(x0,y0)`.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn restriction_matrix(&self) -> Matrix<F> {
        let rows = (0..5).map(|k| self.gamma.iter().map(|g| g.coeffs[k].clone()).collect()).collect();
        Matrix::from_rows(rows, SPAN_COORDS)
    }

    /// Rank of the linear map from hyperplanes to binary quartics.
    pub fn restriction_rank(&self) -> usize {
        self.restriction_matrix().rank()
    }

    /// Basis of the hyperplanes containing `Γ`.
    pub fn annihilator(&self) -> Vec<Vec<F>> {
        self.restriction_matrix().kernel(&self.domain)
    }

    /// The quartic `H` cuts on `Γ`; zero exactly when `H` contains `Γ`.
    pub fn restrict_to_gamma(&self, h: &HyperplaneClass<F>) -> BinaryForm<F> {
        let mut coeffs = vec![F::zero(&self.domain); 5];
        for (c, g) in h.coeffs.iter().zip(&self.gamma) {
            for (acc, x) in coeffs.iter_mut().zip(&g.coeffs) {
                *acc = acc.add(&c.mul(x));
            }
        }
        BinaryForm { coeffs }
    }

    /// Some hyperplane cutting the given nonzero quartic on `Γ`.
    pub fn hyperplane_restricting_to(&self, f: &BinaryForm<F>) -> Option<HyperplaneClass<F>> {
        if f.degree() != 4 {
            return None;
        }
        let h = self.restriction_matrix().solve(&f.coeffs, &self.domain)?;
        HyperplaneClass::new(h).ok()
    }

    pub fn certificate(&self, h: &HyperplaneClass<F>) -> GitReport {
        let f = self.restrict_to_gamma(h);
        let max = max_root_multiplicity(&f, &self.domain).ok();
        GitReport { restriction: f.format(&self.domain), max_multiplicity: max, verdict: verdict_of(max) }
    }
}

/// Largest multiplicity of a projective root, or 0 for a nonzero form
/// without roots. Requires characteristic 0 or larger than the degree.
pub fn max_root_multiplicity<F: Field>(f: &BinaryForm<F>, domain: &F::Domain) -> Result<usize, GitError> {
    if f.is_zero() {
        return Err(GitError::ZeroForm);
    }
    // s = 1 sees every root but (0:1); t = 1 sees every root but (1:0)
    let s_chart = UniPoly::new(domain, f.coeffs.clone());
    let t_chart = UniPoly::new(domain, f.coeffs.iter().rev().cloned().collect());
    Ok(affine_multiplicity(&s_chart).max(affine_multiplicity(&t_chart)))
}

/// Max `k` with `gcd(g, g', ..., g^(k-1))` nonconstant.
fn affine_multiplicity<F: Field>(g: &UniPoly<F>) -> usize {
    let mut common = g.clone();
    let mut deriv = g.clone();
    let mut k = 0;
    while !common.is_constant() {
        k += 1;
        deriv = deriv.derivative();
        common = common.gcd(&deriv).expect("common factor is nonzero");
    }
    k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// No root of multiplicity three or more: semistable.
    Certified,
    /// Some root of multiplicity at least three; no claim either way.
    Inconclusive,
    /// The hyperplane contains `Γ`.
    ContainsGamma,
}

fn verdict_of(max: Option<usize>) -> Verdict {
    match max {
        None => Verdict::ContainsGamma,
        Some(m) if m <= 2 => Verdict::Certified,
        Some(_) => Verdict::Inconclusive,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GitReport {
    pub restriction: String,
    pub max_multiplicity: Option<usize>,
    pub verdict: Verdict,
}

/// Verdict for a hyperplane given by its fifteen span coordinates.
pub fn semistability_certificate<F: Field>(coords: &SpanCoordinates<F>, h: &HyperplaneClass<F>) -> Verdict {
    coords.certificate(h).verdict
}

/// Product of linear forms `l_i^{m_i}` with random `l_i`, for the given multiplicities.
pub fn random_form_with_multiplicities<F: Field, R: rand::Rng + ?Sized>(
    mults: &[u32],
    domain: &F::Domain,
    rng: &mut R,
) -> BinaryForm<F> {
    let ring = st_ring::<F>(domain);
    let (s, t) = (ring.var(0), ring.var(1));
    let mut f = ring.one();
    for &m in mults {
        let l = &s.scale(&F::random(domain, rng)) + &t.scale(&F::random(domain, rng));
        f = &f * &l.pow(m);
    }
    BinaryForm::from_polynomial(&f, mults.iter().sum::<u32>() as usize)
}

fn random_invertible<F: Field, R: rand::Rng + ?Sized>(domain: &F::Domain, rng: &mut R) -> [F; 4] {
    loop {
        let m: [F; 4] = std::array::from_fn(|_| F::random(domain, rng));
        if !m[0].mul(&m[3]).sub(&m[1].mul(&m[2])).is_zero() {
            return m;
        }
    }
}

/// Worked examples, invariance under scaling and reparametrization of `Γ`,
/// and the proportion of random hyperplanes that are certified.
pub fn git_check_report<F: Field>(
    pairs: usize,
    random_trials: usize,
    seed: u64,
    domain: &F::Domain,
) -> Result<VerificationReport, GitError> {
    let start = Instant::now();
    let coords = SpanCoordinates::<F>::new(domain)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let int = |n: i64| F::from_i64(domain, n);
    let form = |c: [i64; 5]| BinaryForm::new(c.iter().map(|&x| int(x)).collect());

    // s^2 t^2 - s^4, s^3 t, and a combination of hyperplanes containing Γ
    let certified = coords.hyperplane_restricting_to(&form([-1, 0, 1, 0, 0])).ok_or(GitError::DegenerateSpan)?;
    let inconclusive = coords.hyperplane_restricting_to(&form([0, 1, 0, 0, 0])).ok_or(GitError::DegenerateSpan)?;
    let mut containing = vec![F::zero(domain); SPAN_COORDS];
    for v in coords.annihilator() {
        let c = F::random(domain, &mut rng);
        for (acc, x) in containing.iter_mut().zip(&v) {
            *acc = acc.add(&c.mul(x));
        }
    }
    let containing = HyperplaneClass::new(containing)?;
    let examples = [
        semistability_certificate(&coords, &certified) == Verdict::Certified,
        semistability_certificate(&coords, &inconclusive) == Verdict::Inconclusive,
        semistability_certificate(&coords, &containing) == Verdict::ContainsGamma,
    ];

    const PATTERNS: [&[u32]; 5] = [&[1, 1, 1, 1], &[2, 1, 1], &[2, 2], &[3, 1], &[4]];
    let mut invariant = 0;
    for k in 0..pairs {
        let f = random_form_with_multiplicities::<F, _>(PATTERNS[k % PATTERNS.len()], domain, &mut rng);
        let Some(mut h) = coords.hyperplane_restricting_to(&f) else { continue };
        // move h off the particular solution by hyperplanes containing Γ
        for v in coords.annihilator() {
            let c = F::random(domain, &mut rng);
            h.coeffs.iter_mut().zip(&v).for_each(|(acc, x)| *acc = acc.add(&c.mul(x)));
        }
        let before = coords.certificate(&h);
        let m = random_invertible::<F, _>(domain, &mut rng);
        let moved = coords.restrict_to_gamma(&h).substitute([&m[0], &m[1], &m[2], &m[3]], domain);
        let moved_max = max_root_multiplicity(&moved, domain).ok();
        let scale = loop {
            let c = F::random(domain, &mut rng);
            if !c.is_zero() {
                break c;
            }
        };
        let scaled = coords.certificate(&h.scale(&scale));
        if before.max_multiplicity == moved_max
            && verdict_of(moved_max) == before.verdict
            && scaled.verdict == before.verdict
        {
            invariant += 1;
        }
    }

    let certified_random = (0..random_trials)
        .filter(|_| {
            semistability_certificate(&coords, &HyperplaneClass::random(domain, &mut rng)) == Verdict::Certified
        })
        .count();
    let share_ok = certified_random * 100 >= random_trials * 99;

    let mut computed: Vec<i64> = examples.iter().map(|&b| b as i64).collect();
    computed.push(invariant);
    let expected = vec![1, 1, 1, pairs as i64];
    Ok(VerificationReport::new("git-check", computed, expected, seed, PrimeTag::of::<F>(domain))
        .param("examples", "certified, inconclusive, contains_gamma")
        .param("invariance_pairs", pairs)
        .param("random_trials", random_trials)
        .param("random_certified", certified_random)
        .require(share_ok)
        .timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fp, Rational};

    fn q(coeffs: &[i64]) -> BinaryForm<Rational> {
        BinaryForm::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    #[test]
    fn multiplicities() {
        assert_eq!(max_root_multiplicity(&q(&[0, 0, 1, 0, 0]), &()).unwrap(), 2);
        assert_eq!(max_root_multiplicity(&q(&[0, 1, 0, 0, 0]), &()).unwrap(), 3);
        // (s - t)^4
        assert_eq!(max_root_multiplicity(&q(&[1, -4, 6, -4, 1]), &()).unwrap(), 4);
        assert_eq!(max_root_multiplicity(&q(&[1, 0, 0, 0, 0]), &()).unwrap(), 4);
        assert_eq!(max_root_multiplicity(&q(&[0, 0, 0, 0, 1]), &()).unwrap(), 4);
        // s^4 + t^4 has no rational roots
        assert_eq!(max_root_multiplicity(&q(&[1, 0, 0, 0, 1]), &()).unwrap(), 1);
        assert!(max_root_multiplicity(&q(&[0; 5]), &()).is_err());
    }

    #[test]
    fn span_coordinates_contain_the_pure_powers() {
        let coords = SpanCoordinates::<Rational>::new(&()).unwrap();
        assert_eq!(coords.names().len(), SPAN_COORDS);
        assert_eq!(coords.restriction_rank(), 5);
        assert_eq!(coords.annihilator().len(), 10);
        let dual = |name: &str| {
            let k = coords.index_of(name).unwrap();
            let mut c = vec![Rational::from_integer(0); SPAN_COORDS];
            c[k] = Rational::from_integer(1);
            coords.restrict_to_gamma(&HyperplaneClass::new(c).unwrap())
        };
        assert_eq!(dual("p(x0,y0)"), q(&[1, 0, 0, 0, 0]));
        assert_eq!(dual("p(x1,y3)"), q(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn substitution_moves_roots() {
        let p = 101u32;
        let f = BinaryForm::new(vec![Fp::new(0, p), Fp::new(1, p), Fp::new(0, p), Fp::new(0, p), Fp::new(0, p)]);
        let one = Fp::new(1, p);
        let two = Fp::new(2, p);
        let g = f.substitute([&one, &two, &two, &one], &p);
        assert_eq!(max_root_multiplicity(&g, &p).unwrap(), 3);
        assert!(g.coeffs().iter().all(|c| !c.is_zero()));
    }

    #[test]
    fn report_over_a_prime() {
        let rep = git_check_report::<Fp>(50, 200, 3, &2_147_483_647).unwrap();
        assert!(rep.matches, "{rep:?}");
    }

    #[test]
    fn hyperplane_validation() {
        let zero = vec![Rational::from_integer(0); SPAN_COORDS];
        assert_eq!(HyperplaneClass::new(zero).unwrap_err(), GitError::ZeroHyperplane);
        assert!(matches!(
            HyperplaneClass::new(vec![Rational::from_integer(1); 3]),
            Err(GitError::CoefficientCount { got: 3, .. })
        ));
    }
}
