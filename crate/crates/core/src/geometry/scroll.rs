use std::sync::Arc;

use crate::algebra::{Field, MonomialOrder, Polynomial, Ring, RingExt};
use crate::groebner::Ideal;

use super::GeometryError;

/// The smooth scroll `S_{a,b}` in `P^{r+1}`, `r = a + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScrollSpec {
    a: usize,
    b: usize,
}

impl ScrollSpec {
    pub fn new(a: usize, b: usize) -> Result<Self, GeometryError> {
        if a == 0 {
            return Err(GeometryError::ConeScroll);
        }
        if a > b {
            return Err(GeometryError::InvalidScroll { a, b });
        }
        Ok(ScrollSpec { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn r(&self) -> usize {
        self.a + self.b
    }

    /// Number of homogeneous coordinates of the ambient `P^{r+1}`.
    pub fn ambient_coords(&self) -> usize {
        self.r() + 2
    }

    pub(crate) fn require_r(&self, min: usize) -> Result<(), GeometryError> {
        if self.r() < min {
            return Err(GeometryError::RTooSmall { min, r: self.r() });
        }
        Ok(())
    }
}

/// Polynomial map from a parameter space to labelled target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialMap<F: Field> {
    source: Arc<Ring<F>>,
    components: Vec<Polynomial<F>>,
    target_labels: Vec<String>,
}

impl<F: Field> PolynomialMap<F> {
    pub fn new(
        source: &Arc<Ring<F>>,
        components: Vec<Polynomial<F>>,
        target_labels: Vec<String>,
    ) -> Result<Self, GeometryError> {
        if components.len() != target_labels.len() {
            return Err(GeometryError::PointLength(components.len(), target_labels.len()));
        }
        if let Some(bad) = components.iter().find(|c| **c.ring() != **source) {
            return Err(GeometryError::Algebra(crate::algebra::AlgebraError::VariableMismatch(
                source.vars().join(","),
                bad.ring().vars().join(","),
            )));
        }
        Ok(PolynomialMap { source: source.clone(), components, target_labels })
    }

    pub fn source(&self) -> &Arc<Ring<F>> {
        &self.source
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    pub fn target_labels(&self) -> &[String] {
        &self.target_labels
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn eval(&self, point: &[F]) -> Result<Vec<F>, GeometryError> {
        Ok(self.components.iter().map(|c| c.eval(point)).collect::<Result<_, _>>()?)
    }

    /// Pull a polynomial on the target back along the map.
    pub fn pullback(&self, f: &Polynomial<F>) -> Result<Polynomial<F>, GeometryError> {
        Ok(f.substitute(&self.components)?)
    }
}

/// All 2×2 minors of a matrix given by rows, rows and columns in lexicographic order.
pub(crate) fn two_by_two_minors<F: Field>(rows: &[Vec<Polynomial<F>>]) -> Vec<Polynomial<F>> {
    let mut out = Vec::new();
    let ncols = rows.first().map_or(0, Vec::len);
    for i in 0..rows.len() {
        for k in (i + 1)..rows.len() {
            for j in 0..ncols {
                for l in (j + 1)..ncols {
                    out.push(&(&rows[i][j] * &rows[k][l]) - &(&rows[i][l] * &rows[k][j]));
                }
            }
        }
    }
    out
}

fn coordinate_ring<F: Field>(prefix: &str, n: usize, domain: &F::Domain) -> Arc<Ring<F>> {
    Ring::new((0..n).map(|i| format!("{prefix}{i}")), domain.clone())
}

/// The 2×r matrix whose minors cut out the scroll, over `x0..x_{r+1}`.
pub fn scroll_matrix<F: Field>(spec: ScrollSpec, domain: &F::Domain) -> Vec<Vec<Polynomial<F>>> {
    let ring = coordinate_ring::<F>("x", spec.ambient_coords(), domain);
    let (a, b) = (spec.a(), spec.b());
    let top: Vec<usize> = (0..b).chain(b + 1..b + 1 + a).collect();
    vec![top.iter().map(|&i| ring.var(i)).collect(), top.iter().map(|&i| ring.var(i + 1)).collect()]
}

/// The `C(r,2)` quadrics cutting out `S_{a,b}`.
pub fn scroll_ideal<F: Field>(spec: ScrollSpec, domain: &F::Domain) -> Result<Ideal<F>, GeometryError> {
    Ok(Ideal::new(two_by_two_minors(&scroll_matrix(spec, domain)), MonomialOrder::GrevLex)?)
}

/// `x_i = u s^{b-i} t^i` for `i ≤ b`, `x_{b+1+j} = v s^{a-j} t^j` for `j ≤ a`.
pub fn scroll_parametrization<F: Field>(spec: ScrollSpec, domain: &F::Domain) -> PolynomialMap<F> {
    let ring: Arc<Ring<F>> = Ring::new(["s", "t", "u", "v"], domain.clone());
    let [s, t, u, v] = [ring.var(0), ring.var(1), ring.var(2), ring.var(3)];
    let (a, b) = (spec.a() as u32, spec.b() as u32);
    let mut comps = Vec::new();
    for i in 0..=b {
        comps.push(&(&u * &s.pow(b - i)) * &t.pow(i));
    }
    for j in 0..=a {
        comps.push(&(&v * &s.pow(a - j)) * &t.pow(j));
    }
    let labels = (0..comps.len()).map(|i| format!("x{i}")).collect();
    PolynomialMap { source: ring, components: comps, target_labels: labels }
}

/// `[s^d, s^{d-1} t, ..., t^d]`.
pub fn rnc_parametrization<F: Field>(d: usize, domain: &F::Domain) -> Result<PolynomialMap<F>, GeometryError> {
    if d < 2 {
        return Err(GeometryError::DegreeTooSmall(d));
    }
    let ring: Arc<Ring<F>> = Ring::new(["s", "t"], domain.clone());
    let (s, t) = (ring.var(0), ring.var(1));
    let comps = (0..=d as u32).map(|i| &s.pow(d as u32 - i) * &t.pow(i)).collect();
    let labels = (0..=d).map(|i| format!("x{i}")).collect();
    Ok(PolynomialMap { source: ring, components: comps, target_labels: labels })
}

/// 2×2 minors of the 2×d Hankel matrix `(x0..x_{d-1} / x1..x_d)`.
pub fn rnc_ideal<F: Field>(d: usize, domain: &F::Domain) -> Result<Ideal<F>, GeometryError> {
    if d < 2 {
        return Err(GeometryError::DegreeTooSmall(d));
    }
    let ring = coordinate_ring::<F>("x", d + 1, domain);
    let rows = vec![(0..d).map(|i| ring.var(i)).collect(), (1..=d).map(|i| ring.var(i)).collect()];
    Ok(Ideal::new(two_by_two_minors(&rows), MonomialOrder::GrevLex)?)
}

/// `S_{1,r-1}` in the coordinates `x0, x1, y0..y_{r-1}`.
#[derive(Clone, Debug)]
pub struct SingularScroll<F: Field> {
    pub ideal: Ideal<F>,
    /// `to_scroll[k]` is the index in `scroll_ideal(1, r-1)` coordinates of variable `k`.
    pub to_scroll: Vec<usize>,
}

/// Minors of `(x0, y0..y_{r-2} / x1, y1..y_{r-1})`, with the coordinate
/// permutation onto `scroll_ideal(1, r-1)`.
pub fn singular_scroll_ideal<F: Field>(r: usize, domain: &F::Domain) -> Result<SingularScroll<F>, GeometryError> {
    if r < 3 {
        return Err(GeometryError::RTooSmall { min: 3, r });
    }
    let names: Vec<String> =
        ["x0".to_string(), "x1".to_string()].into_iter().chain((0..r).map(|i| format!("y{i}"))).collect();
    let ring: Arc<Ring<F>> = Ring::new(names, domain.clone());
    let y = |i: usize| ring.var(2 + i);
    let top: Vec<Polynomial<F>> = std::iter::once(ring.var(0)).chain((0..r - 1).map(y)).collect();
    let bottom: Vec<Polynomial<F>> = std::iter::once(ring.var(1)).chain((1..r).map(y)).collect();
    let ideal = Ideal::new(two_by_two_minors(&[top, bottom]), MonomialOrder::GrevLex)?;
    let to_scroll = [r, r + 1].into_iter().chain(0..r).collect();
    Ok(SingularScroll { ideal, to_scroll })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, Fp, Rational};
    use crate::geometry::binomial;
    use crate::groebner::{buchberger, hilbert_data, GroebnerConfig};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: u32 = 2_147_483_647;

    fn specs(max_r: usize) -> Vec<ScrollSpec> {
        let mut out = Vec::new();
        for r in 2..=max_r {
            for a in 1..=r / 2 {
                out.push(ScrollSpec::new(a, r - a).unwrap());
            }
        }
        out
    }

    #[test]
    fn spec_validation() {
        assert_eq!(ScrollSpec::new(0, 4), Err(GeometryError::ConeScroll));
        assert!(ScrollSpec::new(3, 2).is_err());
        assert_eq!(ScrollSpec::new(2, 3).unwrap().r(), 5);
    }

    #[test]
    fn quadric_surface() {
        let ideal = scroll_ideal::<Rational>(ScrollSpec::new(1, 1).unwrap(), &()).unwrap();
        let expected = parse_polynomial(ideal.ring(), "x0*x3 - x1*x2").unwrap();
        assert_eq!(ideal.generators(), &[expected]);
    }

    #[test]
    fn generator_counts() {
        for spec in specs(6) {
            let ideal = scroll_ideal::<Fp>(spec, &P).unwrap();
            assert_eq!(ideal.generators().len(), binomial(spec.r(), 2));
            assert!(ideal.generators().iter().all(|g| g.is_homogeneous() && g.total_degree() == Some(2)));
        }
    }

    #[test]
    fn cubic_scroll_hilbert_data() {
        let ideal = scroll_ideal::<Rational>(ScrollSpec::new(1, 2).unwrap(), &()).unwrap();
        let h = hilbert_data(&buchberger(&ideal, &GroebnerConfig::default()).unwrap()).unwrap();
        assert_eq!((h.dimension, h.degree), (2, 3));
    }

    #[test]
    fn parametrization_lies_on_scroll() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for spec in specs(6) {
            let ideal = scroll_ideal::<Fp>(spec, &P).unwrap();
            let param = scroll_parametrization::<Fp>(spec, &P);
            for g in ideal.generators() {
                assert!(param.pullback(g).unwrap().is_zero());
            }
            for _ in 0..200 {
                let pt: Vec<Fp> = (0..4).map(|_| Fp::random(&P, &mut rng)).collect();
                let x = param.eval(&pt).unwrap();
                assert!(ideal.generators().iter().all(|g| g.eval(&x).unwrap().is_zero()));
            }
        }
    }

    #[test]
    fn parametrization_examples() {
        let param = scroll_parametrization::<Rational>(ScrollSpec::new(1, 1).unwrap(), &());
        let q = Rational::from_integer;
        assert_eq!(param.eval(&[q(1), q(0), q(1), q(0)]).unwrap(), vec![q(1), q(0), q(0), q(0)]);
        // fixing (s:t), the image is linear in (u,v)
        let spec = ScrollSpec::new(2, 3).unwrap();
        let param = scroll_parametrization::<Rational>(spec, &());
        let p1 = param.eval(&[q(2), q(3), q(1), q(0)]).unwrap();
        let p2 = param.eval(&[q(2), q(3), q(0), q(1)]).unwrap();
        let mixed = param.eval(&[q(2), q(3), q(5), q(-7)]).unwrap();
        for i in 0..mixed.len() {
            assert_eq!(mixed[i], p1[i].mul(&q(5)).add(&p2[i].mul(&q(-7))));
        }
    }

    #[test]
    fn rational_normal_curves() {
        let conic = rnc_ideal::<Rational>(2, &()).unwrap();
        assert_eq!(conic.generators().len(), 1);
        let expected = parse_polynomial(conic.ring(), "x0*x2 - x1^2").unwrap();
        assert!(conic.generators()[0] == expected || conic.generators()[0] == -&expected);
        let cubic = rnc_ideal::<Rational>(3, &()).unwrap();
        assert_eq!(cubic.generators().len(), 3);
        let h = hilbert_data(&buchberger(&cubic, &GroebnerConfig::default()).unwrap()).unwrap();
        assert_eq!((h.dimension, h.degree), (1, 3));
        for d in 2..=6 {
            let ideal = rnc_ideal::<Fp>(d, &P).unwrap();
            let param = rnc_parametrization::<Fp>(d, &P).unwrap();
            assert!(ideal.generators().iter().all(|g| param.pullback(g).unwrap().is_zero()));
        }
        assert_eq!(rnc_ideal::<Fp>(1, &P).unwrap_err(), GeometryError::DegreeTooSmall(1));
    }

    #[test]
    fn singular_scroll_is_a_relabelled_scroll() {
        for r in 3..=6 {
            let sing = singular_scroll_ideal::<Fp>(r, &P).unwrap();
            let scroll = scroll_ideal::<Fp>(ScrollSpec::new(1, r - 1).unwrap(), &P).unwrap();
            let cfg = GroebnerConfig::default();
            let gb = buchberger(&scroll, &cfg).unwrap();
            for g in sing.ideal.generators() {
                assert!(gb.contains(&g.relabel(scroll.ring(), &sing.to_scroll)));
            }
            // the line s: y = 0 lies on it
            let ring = sing.ideal.ring();
            let mut images = vec![ring.var(0), ring.var(1)];
            images.extend((0..r).map(|_| ring.zero()));
            assert!(sing.ideal.generators().iter().all(|g| g.substitute(&images).unwrap().is_zero()));
        }
        for r in 3..=4 {
            let sing = singular_scroll_ideal::<Fp>(r, &P).unwrap();
            let h = hilbert_data(&buchberger(&sing.ideal, &GroebnerConfig::default()).unwrap()).unwrap();
            assert_eq!((h.dimension, h.degree), (2, r as i64));
        }
    }
}
