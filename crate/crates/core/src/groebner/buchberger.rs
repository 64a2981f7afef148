//! Normal forms and Buchberger's algorithm with sugar selection and the
//! Gebauer–Möller pair criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::algebra::{Field, Monomial, MonomialOrder, Polynomial, Ring};

use super::ideal::Ideal;
use super::GroebnerError;

/// Default cap on processed S-pairs.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs reduced before giving up.
    pub max_pairs: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: DEFAULT_PAIR_BUDGET }
    }
}

/// A reduced Gröbner basis: monic elements sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    basis: Vec<Polynomial<F>>,
    order: MonomialOrder,
    ring: Arc<Ring<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(f, &self.basis, self.order)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.reduce(f).is_zero()
    }

    /// Every S-polynomial reduces to zero (Buchberger's criterion).
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                if !self.reduce(&s_polynomial(&self.basis[i], &self.basis[j])).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// No term of any element is divisible by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.basis.iter().enumerate().all(|(i, g)| {
            g.leading_coeff().is_some_and(|c| c.is_one())
                && g.terms().iter().all(|(m, _)| lms.iter().enumerate().all(|(j, l)| i == j || !l.divides(m)))
        })
    }
}

/// `lcm/lm(f) * f / lc(f) - lcm/lm(g) * g / lc(g)`.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (mf, cf) = f.leading_term().expect("nonzero polynomial");
    let (mg, cg) = g.leading_term().expect("nonzero polynomial");
    let l = mf.lcm(mg);
    let left = f.mul_term(&mf.quotient_of(&l), &cf.inv().expect("nonzero"));
    left.sub_scaled(&cg.inv().expect("nonzero"), &mg.quotient_of(&l), g)
}

/// Remainder of multivariate division of `f` by `divisors` under `order`.
///
/// No term of the result is divisible by a leading monomial of a divisor,
/// and `f - result` lies in the ideal the divisors generate.
pub fn normal_form<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>], order: MonomialOrder) -> Polynomial<F> {
    let divs: Vec<Polynomial<F>> = divisors.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order)).collect();
    let reducers: Vec<Reducer<'_, F>> = divs.iter().map(Reducer::new).collect();
    full_reduce(f.with_order(order), &reducers)
}

struct Reducer<'a, F: Field> {
    poly: &'a Polynomial<F>,
    lm: &'a Monomial,
    lc_inv: F,
    mask: u64,
}

impl<'a, F: Field> Reducer<'a, F> {
    fn new(poly: &'a Polynomial<F>) -> Self {
        let (lm, lc) = poly.leading_term().expect("nonzero reducer");
        Reducer { poly, lm, lc_inv: lc.inv().expect("nonzero"), mask: divmask(lm) }
    }
}

fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, e) in m.exponents().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

fn find_reducer<'r, 'a, F: Field>(m: &Monomial, reducers: &'r [Reducer<'a, F>]) -> Option<&'r Reducer<'a, F>> {
    let mask = divmask(m);
    reducers.iter().find(|r| r.mask & !mask == 0 && r.lm.divides(m))
}

/// Reduce until the leading term is irreducible.
fn top_reduce<F: Field>(mut p: Polynomial<F>, reducers: &[Reducer<'_, F>]) -> Polynomial<F> {
    while let Some((m, c)) = p.leading_term() {
        let Some(r) = find_reducer(m, reducers) else { break };
        let shift = r.lm.quotient_of(m);
        let factor = c.mul(&r.lc_inv);
        p = p.sub_scaled(&factor, &shift, r.poly);
    }
    p
}

fn full_reduce<F: Field>(p: Polynomial<F>, reducers: &[Reducer<'_, F>]) -> Polynomial<F> {
    let ring = p.ring().clone();
    let order = p.order();
    let mut remainder: Vec<(Monomial, F)> = Vec::new();
    let mut p = p;
    loop {
        p = top_reduce(p, reducers);
        let Some((m, c)) = p.leading_term().cloned() else { break };
        remainder.push((m.clone(), c.clone()));
        // drop the irreducible leading term
        p = p.sub_scaled(&c, &Monomial::one(m.nvars()), &Polynomial::monomial(&ring, F::one(ring.domain()), m));
    }
    Polynomial::from_terms(&ring, order, remainder)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Entry<F: Field> {
    poly: Polynomial<F>,
    sugar: u32,
    active: bool,
}

/// Reduced Gröbner basis of `ideal` under its order.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, config: &GroebnerConfig) -> Result<GroebnerBasis<F>, GroebnerError> {
    let order = ideal.order();
    let ring = ideal.ring().clone();
    let mut inputs: Vec<Polynomial<F>> = ideal.generators().iter().map(|g| g.with_order(order).monic()).collect();
    // Deterministic processing order independent of how generators were listed.
    inputs.sort_by(|a, b| {
        order
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });

    let mut store: Vec<Entry<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for f in inputs {
        let reducers: Vec<Reducer<'_, F>> = store.iter().filter(|e| e.active).map(|e| Reducer::new(&e.poly)).collect();
        let h = top_reduce(f.clone(), &reducers);
        drop(reducers);
        if h.is_zero() {
            continue;
        }
        let sugar = f.total_degree().unwrap_or(0);
        insert(&mut store, &mut pairs, h.monic(), sugar, order);
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        let best = select_pair(&pairs, order);
        let pair = pairs.swap_remove(best);
        processed += 1;
        if processed > config.max_pairs {
            return Err(GroebnerError::BudgetExceeded { pairs: config.max_pairs });
        }
        let s = s_polynomial(&store[pair.i].poly, &store[pair.j].poly);
        let reducers: Vec<Reducer<'_, F>> = store.iter().filter(|e| e.active).map(|e| Reducer::new(&e.poly)).collect();
        let h = top_reduce(s, &reducers);
        drop(reducers);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            let one = Polynomial::from_terms(&ring, order, vec![(Monomial::one(ring.nvars()), F::one(ring.domain()))]);
            return Ok(GroebnerBasis { basis: vec![one], order, ring });
        }
        insert(&mut store, &mut pairs, h.monic(), pair.sugar, order);
    }

    let active: Vec<Polynomial<F>> = store.into_iter().filter(|e| e.active).map(|e| e.poly).collect();
    Ok(GroebnerBasis { basis: interreduce(active, order), order, ring })
}

fn select_pair(pairs: &[Pair], order: MonomialOrder) -> usize {
    let mut best = 0;
    for (k, p) in pairs.iter().enumerate().skip(1) {
        let b = &pairs[best];
        let ord =
            p.sugar.cmp(&b.sugar).then_with(|| order.cmp(&p.lcm, &b.lcm)).then_with(|| (p.i, p.j).cmp(&(b.i, b.j)));
        if ord == Ordering::Less {
            best = k;
        }
    }
    best
}

/// Add `h` to the basis, updating the pair list with the Gebauer–Möller rules.
fn insert<F: Field>(
    store: &mut Vec<Entry<F>>,
    pairs: &mut Vec<Pair>,
    h: Polynomial<F>,
    sugar: u32,
    order: MonomialOrder,
) {
    let hi = store.len();
    let lm_h = h.leading_monomial().unwrap().clone();
    let sugar_of =
        |e: &Entry<F>, l: &Monomial| -> u32 { e.sugar + (l.degree() - e.poly.leading_monomial().unwrap().degree()) };

    // candidate pairs (g, h) for active g
    let mut cands: Vec<(Pair, bool)> = store
        .iter()
        .enumerate()
        .filter(|(_, e)| e.active)
        .map(|(g, e)| {
            let lm_g = e.poly.leading_monomial().unwrap();
            let lcm = lm_g.lcm(&lm_h);
            let s = sugar_of(e, &lcm).max(sugar + (lcm.degree() - lm_h.degree()));
            (Pair { i: g, j: hi, lcm, sugar: s }, lm_g.is_coprime(&lm_h))
        })
        .collect();

    // chain criterion among the new pairs: drop (g1,h) if some other (g2,h) has lcm dividing it
    let mut keep = vec![true; cands.len()];
    for a in 0..cands.len() {
        if cands[a].1 {
            continue;
        }
        for b in 0..cands.len() {
            if a == b || !keep[b] {
                continue;
            }
            let (la, lb) = (&cands[a].0.lcm, &cands[b].0.lcm);
            if lb.divides(la) && (lb != la || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    // coprime leading monomials: the pair reduces to zero
    let mut fresh: Vec<Pair> = Vec::new();
    for (k, (p, coprime)) in cands.drain(..).enumerate() {
        if keep[k] && !coprime {
            fresh.push(p);
        }
    }

    // old pairs made redundant by h
    pairs.retain(|p| {
        if !lm_h.divides(&p.lcm) {
            return true;
        }
        let li = store[p.i].poly.leading_monomial().unwrap().lcm(&lm_h);
        let lj = store[p.j].poly.leading_monomial().unwrap().lcm(&lm_h);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(fresh);

    for e in store.iter_mut() {
        if e.active && lm_h.divides(e.poly.leading_monomial().unwrap()) {
            e.active = false;
        }
    }
    let _ = order;
    store.push(Entry { poly: h, sugar, active: true });
}

/// Minimalize and fully tail-reduce; output sorted by ascending leading monomial.
fn interreduce<F: Field>(mut polys: Vec<Polynomial<F>>, order: MonomialOrder) -> Vec<Polynomial<F>> {
    polys.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for p in polys {
        let lm = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Reducer<'_, F>> =
            minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| Reducer::new(q)).collect();
        out.push(full_reduce(minimal[k].clone(), &others).monic());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, Fp, Rational, Ring, RingExt};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn qring(vars: &[&str]) -> Arc<Ring<Rational>> {
        Ring::new(vars.iter().copied(), ())
    }

    fn polys<F: Field>(ring: &Arc<Ring<F>>, xs: &[&str]) -> Vec<Polynomial<F>> {
        xs.iter().map(|s| parse_polynomial(ring, s).unwrap()).collect()
    }

    fn gb<F: Field>(gens: Vec<Polynomial<F>>, order: MonomialOrder) -> GroebnerBasis<F> {
        buchberger(&Ideal::new(gens, order).unwrap(), &GroebnerConfig::default()).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = qring(&["x", "y"]);
        let g = parse_polynomial(&r, "x^2*y - y + 3").unwrap();
        assert!(normal_form(&g, std::slice::from_ref(&g), MonomialOrder::GrevLex).is_zero());
        let x = r.var(0);
        let y = r.var(1);
        assert!(normal_form(&(&x * &x), std::slice::from_ref(&x), MonomialOrder::GrevLex).is_zero());
        assert_eq!(normal_form(&y, std::slice::from_ref(&x), MonomialOrder::GrevLex), y);
    }

    #[test]
    fn remainder_terms_are_irreducible() {
        let r = qring(&["x", "y", "z"]);
        let divs = polys(&r, &["x*y - z", "y^2 - x"]);
        let f = parse_polynomial(&r, "x^3*y^2 + y^3*z - 7*x*z + 2").unwrap();
        let rem = normal_form(&f, &divs, MonomialOrder::GrevLex);
        for (m, _) in rem.terms() {
            for d in &divs {
                assert!(!d.leading_monomial().unwrap().divides(m));
            }
        }
        // f - rem is in the ideal: check with a Gröbner basis
        let basis = gb(divs, MonomialOrder::GrevLex);
        assert!(basis.contains(&(&f - &rem)));
    }

    #[test]
    fn principal_ideal() {
        let r = qring(&["x"]);
        let basis = gb(vec![r.var(0)], MonomialOrder::GrevLex);
        assert_eq!(basis.basis(), &[r.var(0)]);
    }

    #[test]
    fn sum_and_difference_of_squares() {
        let r = qring(&["x", "y"]);
        let basis = gb(polys(&r, &["x^2 + y^2", "x^2 - y^2"]), MonomialOrder::GrevLex);
        let target = polys(&r, &["x^2", "y^2"]);
        let target_gb = gb(target.clone(), MonomialOrder::GrevLex);
        for g in basis.basis() {
            assert!(target_gb.contains(g));
        }
        for t in &target {
            assert!(basis.contains(t));
        }
        assert!(basis.satisfies_buchberger_criterion());
        assert!(basis.is_reduced());
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = qring(&["x", "y"]);
        let basis = gb(polys(&r, &["x*y - 1", "x"]), MonomialOrder::GrevLex);
        assert!(basis.is_unit());
    }

    #[test]
    fn budget_exceeded_is_an_error() {
        let r = qring(&["a", "b", "c", "d"]);
        let gens =
            polys(&r, &["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"]);
        let ideal = Ideal::new(gens, MonomialOrder::GrevLex).unwrap();
        let res = buchberger(&ideal, &GroebnerConfig { max_pairs: 1 });
        assert!(matches!(res, Err(GroebnerError::BudgetExceeded { pairs: 1 })));
    }

    #[test]
    fn cyclic_four_mod_p() {
        let r: Arc<Ring<Fp>> = Ring::new(["a", "b", "c", "d"], 32003);
        let gens =
            polys(&r, &["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"]);
        let basis = gb(gens, MonomialOrder::GrevLex);
        assert!(basis.satisfies_buchberger_criterion());
        assert!(basis.is_reduced());
        let lex = gb(basis.basis().to_vec(), MonomialOrder::Lex);
        assert!(lex.satisfies_buchberger_criterion());
    }

    #[test]
    fn membership_both_directions() {
        let p = 10007;
        let r: Arc<Ring<Fp>> = Ring::new(["x", "y", "z"], p);
        let gens = polys(&r, &["x^2 - y*z", "y^2 - x*z + 1", "x*y*z - 2"]);
        let basis = gb(gens.clone(), MonomialOrder::GrevLex);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let mut member = r.zero();
            for g in &gens {
                let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                let h = Polynomial::monomial(&r, Fp::random(&p, &mut rng), Monomial::from_exponents(&e).unwrap());
                member = &member + &(&h * g);
            }
            assert!(normal_form(&member, basis.basis(), MonomialOrder::GrevLex).is_zero());
            let non_member = &member + &r.var(0);
            assert!(!basis.contains(&non_member));
        }
    }

    #[test]
    fn generator_order_does_not_matter() {
        let p = 10007;
        let r: Arc<Ring<Fp>> = Ring::new(["x", "y", "z", "w"], p);
        let mut gens = polys(&r, &["x*w - y*z", "x*z - y^2", "y*w - z^2", "x + y + z + w - 1"]);
        let reference = gb(gens.clone(), MonomialOrder::GrevLex);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            gens.shuffle(&mut rng);
            let scaled: Vec<_> = gens.iter().map(|g| g.scale(&Fp::new(rng.gen_range(1..p as u64), p))).collect();
            assert_eq!(gb(scaled, MonomialOrder::GrevLex), reference);
        }
    }
}
