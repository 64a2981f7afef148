use std::sync::Arc;

use rand::Rng;

use crate::algebra::{Field, Matrix, Monomial, Polynomial, Ring, RingExt};

use super::scroll::{two_by_two_minors, ScrollSpec};
use super::GeometryError;

/// Index pairs `(i, j)`, `i < j < n`, in lexicographic order.
pub fn plucker_labels(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Plücker coordinates `p_ij = P_i Q_j - P_j Q_i` of a family of lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector<F: Field> {
    coords: Vec<String>,
    labels: Vec<(usize, usize)>,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PluckerVector<F> {
    pub fn labels(&self) -> &[(usize, usize)] {
        &self.labels
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        &self.entries
    }

    /// Names of the ambient point coordinates the labels refer to.
    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    pub fn label_name(&self, k: usize) -> String {
        let (i, j) = self.labels[k];
        format!("p({},{})", self.coords[i], self.coords[j])
    }

    /// Entry `p_ij`; antisymmetric in the indices.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial<F> {
        let n = self.coords.len();
        assert!(i < n && j < n, "Plücker index out of range");
        if i == j {
            return self.entries[0].ring().zero();
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let k = self.labels.iter().position(|&l| l == (lo, hi)).expect("label present");
        if i < j {
            self.entries[k].clone()
        } else {
            -&self.entries[k]
        }
    }

    /// The three-term relations `p_ij p_kl - p_ik p_jl + p_il p_jk` for `i < j < k < l`.
    pub fn plucker_relations(&self) -> Vec<Polynomial<F>> {
        let n = self.coords.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        let t1 = &self.entry(i, j) * &self.entry(k, l);
                        let t2 = &self.entry(i, k) * &self.entry(j, l);
                        let t3 = &self.entry(i, l) * &self.entry(j, k);
                        out.push(&(&t1 - &t2) + &t3);
                    }
                }
            }
        }
        out
    }
}

/// `p_ij = P_i Q_j - P_j Q_i` for all `i < j`.
pub fn plucker_from_points<F: Field>(
    p: &[Polynomial<F>],
    q: &[Polynomial<F>],
) -> Result<PluckerVector<F>, GeometryError> {
    if p.len() != q.len() || p.is_empty() {
        return Err(GeometryError::PointLength(p.len(), q.len()));
    }
    let coords = (0..p.len()).map(|i| format!("x{i}")).collect();
    Ok(plucker_with_coords(p, q, coords))
}

fn plucker_with_coords<F: Field>(p: &[Polynomial<F>], q: &[Polynomial<F>], coords: Vec<String>) -> PluckerVector<F> {
    let labels = plucker_labels(p.len());
    let entries = labels.iter().map(|&(i, j)| &(&p[i] * &q[j]) - &(&p[j] * &q[i])).collect();
    PluckerVector { coords, labels, entries }
}

/// A family of lines spanned by two parametrized points.
#[derive(Clone, Debug)]
pub struct LineFamily<F: Field> {
    source: Arc<Ring<F>>,
    p: Vec<Polynomial<F>>,
    q: Vec<Polynomial<F>>,
}

impl<F: Field> LineFamily<F> {
    pub fn new(p: Vec<Polynomial<F>>, q: Vec<Polynomial<F>>) -> Result<Self, GeometryError> {
        if p.len() != q.len() || p.is_empty() {
            return Err(GeometryError::PointLength(p.len(), q.len()));
        }
        let source = p[0].ring().clone();
        Ok(LineFamily { source, p, q })
    }

    pub fn source(&self) -> &Arc<Ring<F>> {
        &self.source
    }

    pub fn p(&self) -> &[Polynomial<F>] {
        &self.p
    }

    pub fn q(&self) -> &[Polynomial<F>] {
        &self.q
    }

    pub fn ambient_coords(&self) -> usize {
        self.p.len()
    }

    pub fn plucker(&self) -> PluckerVector<F> {
        plucker_with_coords(&self.p, &self.q, (0..self.p.len()).map(|i| format!("x{i}")).collect())
    }

    /// The two spanning points evaluated at a parameter value.
    pub fn points_at(&self, params: &[F]) -> Result<(Vec<F>, Vec<F>), GeometryError> {
        let p = self.p.iter().map(|c| c.eval(params)).collect::<Result<_, _>>()?;
        let q = self.q.iter().map(|c| c.eval(params)).collect::<Result<_, _>>()?;
        Ok((p, q))
    }

    /// The same lines with the ambient coordinates reordered: new coordinate
    /// `k` is old coordinate `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        LineFamily {
            source: self.source.clone(),
            p: perm.iter().map(|&i| self.p[i].clone()).collect(),
            q: perm.iter().map(|&i| self.q[i].clone()).collect(),
        }
    }
}

/// A linear subspace of `P^{n-1}` cut out by independent linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubspace<F: Field> {
    forms: Vec<Vec<F>>,
}

impl<F: Field> LinearSubspace<F> {
    /// Forms given by coefficient rows; they must be independent.
    pub fn new(forms: Vec<Vec<F>>) -> Result<Self, GeometryError> {
        let n = forms.first().map_or(0, Vec::len);
        if forms.iter().any(|f| f.len() != n) {
            return Err(GeometryError::PointLength(n, forms.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n)));
        }
        let rank = Matrix::from_rows(forms.clone(), n).rank();
        if rank < forms.len() {
            return Err(GeometryError::DependentForms { rank, codim: forms.len() });
        }
        Ok(LinearSubspace { forms })
    }

    /// A random subspace of the given codimension; resamples until independent.
    pub fn random<R: Rng + ?Sized>(codim: usize, ambient: usize, domain: &F::Domain, rng: &mut R) -> Self {
        loop {
            let forms: Vec<Vec<F>> =
                (0..codim).map(|_| (0..ambient).map(|_| F::random(domain, rng)).collect()).collect();
            if let Ok(w) = LinearSubspace::new(forms) {
                return w;
            }
        }
    }

    /// `self` cut by `extra` more random forms.
    pub fn extended_random<R: Rng + ?Sized>(&self, extra: usize, domain: &F::Domain, rng: &mut R) -> Self {
        let n = self.ambient();
        loop {
            let mut forms = self.forms.clone();
            forms.extend((0..extra).map(|_| (0..n).map(|_| F::random(domain, rng)).collect::<Vec<F>>()));
            if let Ok(w) = LinearSubspace::new(forms) {
                return w;
            }
        }
    }

    pub fn forms(&self) -> &[Vec<F>] {
        &self.forms
    }

    pub fn codim(&self) -> usize {
        self.forms.len()
    }

    pub fn ambient(&self) -> usize {
        self.forms.first().map_or(0, Vec::len)
    }

    /// Form `k` applied to a parametrized point.
    pub fn apply(&self, k: usize, point: &[Polynomial<F>]) -> Polynomial<F> {
        let ring = point[0].ring();
        let mut acc = ring.zero();
        for (c, x) in self.forms[k].iter().zip(point) {
            if !c.is_zero() {
                acc = &acc + &x.scale(c);
            }
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Incidence {
    Meets,
    ContainedIn,
}

/// Conditions for the lines of `line` to meet, or lie in, `w`.
///
/// `Meets` gives the 2×2 minors of the `codim × 2` matrix `(L_i(P), L_i(Q))`;
/// `ContainedIn` gives the entries themselves.
pub fn incidence_equations<F: Field>(
    line: &LineFamily<F>,
    w: &LinearSubspace<F>,
    mode: Incidence,
) -> Result<Vec<Polynomial<F>>, GeometryError> {
    if w.ambient() != line.ambient_coords() {
        return Err(GeometryError::PointLength(w.ambient(), line.ambient_coords()));
    }
    let rows: Vec<Vec<Polynomial<F>>> =
        (0..w.codim()).map(|k| vec![w.apply(k, &line.p), w.apply(k, &line.q)]).collect();
    Ok(match mode {
        Incidence::Meets => {
            let cols: Vec<Vec<Polynomial<F>>> =
                vec![rows.iter().map(|r| r[0].clone()).collect(), rows.iter().map(|r| r[1].clone()).collect()];
            two_by_two_minors(&cols)
        }
        Incidence::ContainedIn => rows.into_iter().flatten().collect(),
    })
}

/// `h_k(x, y) = sum_{i=0}^k x^i y^{k-i}`; zero for negative `k`.
fn complete_homogeneous<F: Field>(ring: &Arc<Ring<F>>, x: usize, y: usize, k: i64) -> Polynomial<F> {
    if k < 0 {
        return ring.zero();
    }
    let n = ring.nvars();
    let one = F::one(ring.domain());
    let terms = (0..=k as u32)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[x] = i;
            e[y] = k as u32 - i;
            (Monomial::from_exponents(&e).expect("small degree"), one.clone())
        })
        .collect();
    Polynomial::from_terms(ring, Default::default(), terms)
}

fn scroll_point<F: Field>(spec: ScrollSpec, t: &Polynomial<F>, v: &Polynomial<F>) -> Vec<Polynomial<F>> {
    let (a, b) = (spec.a() as u32, spec.b() as u32);
    let mut pt: Vec<Polynomial<F>> = (0..=b).map(|i| t.pow(i)).collect();
    pt.extend((0..=a).map(|j| v * &t.pow(j)));
    pt
}

/// Lines through the scroll points at `(t1, v1)` and `(t2, v2)` in the chart `s = u = 1`.
pub fn secant_family<F: Field>(spec: ScrollSpec, domain: &F::Domain) -> LineFamily<F> {
    let ring: Arc<Ring<F>> = Ring::new(["t1", "v1", "t2", "v2"], domain.clone());
    let p = scroll_point(spec, &ring.var(0), &ring.var(1));
    let q = scroll_point(spec, &ring.var(2), &ring.var(3));
    LineFamily { source: ring, p, q }
}

/// Secant lines in divided-difference form, parameters `(t1, v1, t2, k)`.
///
/// With `v2 = v1 + k (t2 - t1)` the second point is `(P2 - P1) / (t2 - t1)`,
/// which is polynomial. The line is never degenerate, `t1 = t2` gives the
/// tangent lines, and `(t1, v1, t2, k) -> (t2, v1 + k (t2 - t1), t1, k)`
/// swaps the two points.
pub fn chord_family<F: Field>(spec: ScrollSpec, domain: &F::Domain) -> LineFamily<F> {
    let ring: Arc<Ring<F>> = Ring::new(["t1", "v1", "t2", "k"], domain.clone());
    let (t1, v1, t2, k) = (ring.var(0), ring.var(1), ring.var(2), ring.var(3));
    let p = scroll_point(spec, &t1, &v1);
    let (a, b) = (spec.a() as i64, spec.b() as i64);
    let mut q: Vec<Polynomial<F>> = (0..=b).map(|i| complete_homogeneous(&ring, 0, 2, i - 1)).collect();
    for j in 0..=a {
        q.push(&(&v1 * &complete_homogeneous(&ring, 0, 2, j - 1)) + &(&k * &t2.pow(j as u32)));
    }
    LineFamily { source: ring, p, q }
}

/// Chords of the rational normal curve of degree `d`, parameters `(t1, t2)`.
pub fn rnc_secant_family<F: Field>(d: usize, domain: &F::Domain) -> Result<LineFamily<F>, GeometryError> {
    if d < 2 {
        return Err(GeometryError::DegreeTooSmall(d));
    }
    let ring: Arc<Ring<F>> = Ring::new(["t1", "t2"], domain.clone());
    let p = (0..=d as u32).map(|i| ring.var(0).pow(i)).collect();
    let q = (0..=d as u32).map(|i| ring.var(1).pow(i)).collect();
    Ok(LineFamily { source: ring, p, q })
}

/// Chords of the rational normal curve in divided-difference form.
pub fn rnc_chord_family<F: Field>(d: usize, domain: &F::Domain) -> Result<LineFamily<F>, GeometryError> {
    if d < 2 {
        return Err(GeometryError::DegreeTooSmall(d));
    }
    let ring: Arc<Ring<F>> = Ring::new(["t1", "t2"], domain.clone());
    let p = (0..=d as u32).map(|i| ring.var(0).pow(i)).collect();
    let q = (0..=d as i64).map(|i| complete_homogeneous(&ring, 0, 1, i - 1)).collect();
    Ok(LineFamily { source: ring, p, q })
}

/// Ruling lines of `S_{1,3}` in the coordinates `x0, x1, y0..y3`:
/// the line through `(s, t, 0, 0, 0, 0)` and `(0, 0, s^3, s^2 t, s t^2, t^3)`.
pub fn gamma_family<F: Field>(domain: &F::Domain) -> PluckerVector<F> {
    let ring: Arc<Ring<F>> = Ring::new(["s", "t"], domain.clone());
    let (s, t) = (ring.var(0), ring.var(1));
    let zero = ring.zero();
    let p = vec![s.clone(), t.clone(), zero.clone(), zero.clone(), zero.clone(), zero.clone()];
    let mut q = vec![zero.clone(), zero];
    q.extend((0..4u32).map(|j| &s.pow(3 - j) * &t.pow(j)));
    let coords = ["x0", "x1", "y0", "y1", "y2", "y3"].iter().map(|c| c.to_string()).collect();
    plucker_with_coords(&p, &q, coords)
}
