use std::sync::Arc;

use crate::algebra::{format_polynomial, parse_polynomial, Field, MonomialOrder, Polynomial, Ring};

use super::buchberger::{buchberger, GroebnerConfig};
use super::GroebnerError;

/// A polynomial ideal given by generators over a common ring.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    generators: Vec<Polynomial<F>>,
    order: MonomialOrder,
    ring: Arc<Ring<F>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; an empty or all-zero list is rejected.
    pub fn new(generators: Vec<Polynomial<F>>, order: MonomialOrder) -> Result<Self, GroebnerError> {
        let ring = generators.first().ok_or(GroebnerError::NoGenerators)?.ring().clone();
        if let Some(bad) = generators.iter().find(|g| !g.same_ring(&generators[0])) {
            return Err(GroebnerError::RingMismatch(bad.ring().vars().join(",")));
        }
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order)).collect();
        if generators.is_empty() {
            return Err(GroebnerError::ZeroIdeal);
        }
        Ok(Ideal { generators, order, ring })
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Ideal {
            generators: self.generators.iter().map(|g| g.with_order(order)).collect(),
            order,
            ring: self.ring.clone(),
        }
    }

    /// Ideal generated by these generators and `extra`.
    pub fn extended(&self, extra: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ideal::new(gens, self.order)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }
}

/// Generators of `I ∩ k[x_{k+1},...]`, expressed in the ring of the
/// remaining variables.
///
/// Computed from a `Block(k)` Gröbner basis by keeping the elements free of
/// the first `k` variables.
pub fn elimination_ideal<F: Field>(
    ideal: &Ideal<F>,
    k: usize,
    config: &GroebnerConfig,
) -> Result<Ideal<F>, GroebnerError> {
    let n = ideal.ring().nvars();
    if k >= n {
        return Err(GroebnerError::EliminateAll { k, nvars: n });
    }
    let gb = buchberger(&ideal.with_order(MonomialOrder::Block(k)), config)?;
    let sub_ring: Arc<Ring<F>> = Ring::new(ideal.ring().vars()[k..].iter().cloned(), ideal.ring().domain().clone());
    let var_map: Vec<usize> = (0..n).map(|i| i.saturating_sub(k)).collect();
    let kept: Vec<Polynomial<F>> = gb
        .basis()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exponent(i) == 0)))
        .map(|g| g.relabel(&sub_ring, &var_map).with_order(MonomialOrder::GrevLex))
        .collect();
    if kept.is_empty() {
        return Err(GroebnerError::ZeroIdeal);
    }
    Ideal::new(kept, MonomialOrder::GrevLex)
}

/// Serialize generators in the ideal file format.
pub fn write_ideal_file<F: Field>(ring: &Ring<F>, generators: &[Polynomial<F>]) -> String {
    let mut out = format!("# vars: {}\n", ring.vars().join(","));
    for g in generators {
        out.push_str(&format_polynomial(g));
        out.push('\n');
    }
    out
}

/// A ring and generators read from an ideal file.
pub type IdealFile<F> = (Arc<Ring<F>>, Vec<Polynomial<F>>);

/// Parse an ideal file: a `# vars:` header, then one polynomial per line.
/// Other `#` lines and blank lines are ignored.
pub fn read_ideal_file<F: Field>(text: &str, domain: &F::Domain) -> Result<IdealFile<F>, GroebnerError> {
    let mut ring: Option<Arc<Ring<F>>> = None;
    let mut gens = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(vars) = rest.trim().strip_prefix("vars:") {
                if ring.is_some() {
                    return Err(GroebnerError::IdealFile { line: lineno + 1, message: "duplicate vars header".into() });
                }
                let names: Vec<String> =
                    vars.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
                if names.is_empty() {
                    return Err(GroebnerError::IdealFile { line: lineno + 1, message: "empty variable list".into() });
                }
                ring = Some(Ring::new(names, domain.clone()));
            }
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        let r = ring.as_ref().ok_or_else(|| GroebnerError::IdealFile {
            line: lineno + 1,
            message: "polynomial before vars header".into(),
        })?;
        let p = parse_polynomial(r, trimmed)
            .map_err(|e| GroebnerError::IdealFile { line: lineno + 1, message: e.to_string() })?;
        gens.push(p);
    }
    let ring = ring.ok_or(GroebnerError::IdealFile { line: 0, message: "missing `# vars:` header".into() })?;
    Ok((ring, gens))
}
