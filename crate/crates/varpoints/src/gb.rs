//! Gröbner-basis engine: Buchberger's algorithm, normal forms, ideal
//! membership, elimination, Krull dimension and zero-dimensionality.
//!
//! Plain Buchberger with the coprime-leading-term skip and the chain
//! criterion, normal pair selection (minimal lcm degree first, ties by
//! generator index), full reduction, and interreduction to the unique
//! reduced basis. No F4/F5: inputs here are desk-scale and the performance
//! escape hatch is the probabilistic dimension estimate, not a faster
//! basis.

use std::collections::{BinaryHeap, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::poly::{
    exp_add, exp_divides, exp_lcm, exp_sub, exp_total, MonomialOrder, PolyMatrix, PolyRing,
    Polynomial,
};

/// A generator list with lazily cached reduced Gröbner bases, one per
/// monomial order. Generators are fixed at construction; the cache is the
/// only mutable state.
#[derive(Debug)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: PolyRing, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.ring() != &ring {
                return Err(Error::RingMismatch("generator outside the ring".into()));
            }
        }
        Ok(Ideal {
            ring,
            gens,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// A new ideal with extra generators appended; caches are not shared.
    pub fn extended(&self, extra: Vec<Polynomial>) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(self.ring.clone(), gens)
    }

    /// The Jacobian of the generators: variables index rows.
    pub fn jacobian(&self) -> PolyMatrix {
        PolyMatrix::jacobian(&self.ring, &self.gens).expect("generators share the ring")
    }

    /// Reduced Gröbner basis in the ring's own order.
    pub fn groebner(&self) -> Arc<Vec<Polynomial>> {
        self.groebner_in(self.ring.order())
    }

    /// Reduced Gröbner basis in an arbitrary order. The returned
    /// polynomials live in `self.ring().reordered(order)`.
    pub fn groebner_in(&self, order: MonomialOrder) -> Arc<Vec<Polynomial>> {
        self.groebner_budgeted(order, None)
            .expect("unbudgeted Buchberger cannot fail")
    }

    /// As [`groebner_in`](Self::groebner_in) with a step budget; each
    /// S-polynomial reduction costs one step.
    pub fn groebner_budgeted(
        &self,
        order: MonomialOrder,
        budget: Option<u64>,
    ) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(b) = self.cache.lock().unwrap().get(&order) {
            return Ok(b.clone());
        }
        let work = self.ring.reordered(order);
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.to_ring(&work)).collect();
        let outcome = buchberger(&work, gens, budget, None)?;
        let basis = Arc::new(outcome.basis);
        self.cache.lock().unwrap().insert(order, basis.clone());
        Ok(basis)
    }

    /// The unique remainder of `f` modulo the reduced basis in the ring's
    /// order.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch(
                "polynomial outside the ideal's ring".into(),
            ));
        }
        let basis = self.groebner();
        let work = self.ring.reordered(self.ring.order());
        let nf = reduce_full(&f.to_ring(&work), &basis);
        Ok(nf.to_ring(&self.ring))
    }

    pub fn is_member(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether the ideal is the unit ideal, i.e. `V(I)` is empty over the
    /// algebraic closure.
    pub fn contains_one(&self) -> bool {
        let basis = self.groebner();
        basis.len() == 1 && basis[0].is_constant()
    }

    /// Dimension of `V(I)`: the largest number of variables supporting no
    /// leading monomial of the basis, or -1 for the unit ideal.
    pub fn krull_dim(&self) -> i64 {
        let basis = self.groebner();
        if basis.len() == 1 && basis[0].is_constant() {
            return -1;
        }
        let n = self.ring.num_vars();
        let mut supports: Vec<Vec<usize>> = basis
            .iter()
            .map(|g| {
                let lm = g.leading_monomial().expect("basis elements are nonzero");
                (0..n).filter(|&i| lm[i] > 0).collect()
            })
            .collect();
        // minimal supports suffice for the independent-set computation
        supports.sort_by_key(|s| s.len());
        let mut minimal: Vec<Vec<usize>> = Vec::new();
        for s in supports {
            if !minimal.iter().any(|m| m.iter().all(|v| s.contains(v))) {
                minimal.push(s);
            }
        }
        let mut best = 0usize;
        let mut excluded = vec![false; n];
        max_independent(&minimal, &mut excluded, 0, n, &mut best);
        best as i64
    }

    /// True exactly when the basis has a pure power of every variable among
    /// its leading terms; the unit ideal reports false.
    pub fn is_zero_dimensional(&self) -> bool {
        let basis = self.groebner();
        if basis.is_empty() || (basis.len() == 1 && basis[0].is_constant()) {
            return false;
        }
        let n = self.ring.num_vars();
        (0..n).all(|v| {
            basis.iter().any(|g| {
                let lm = g.leading_monomial().unwrap();
                lm[v] > 0 && lm.iter().enumerate().all(|(i, &e)| i == v || e == 0)
            })
        })
    }

    /// Generators of `I ∩ k[keep]`, in a fresh grevlex ring on the kept
    /// variables (original names, original relative order).
    pub fn eliminate(&self, keep: &[usize]) -> Result<Ideal> {
        let (work, kept_ring, perm, n_elim) = self.elimination_setup(keep)?;
        let gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| permute_vars(g, &perm, &work))
            .collect();
        let outcome = buchberger(&work, gens, None, None)?;
        let kept: Vec<Polynomial> = outcome
            .basis
            .iter()
            .filter(|g| g.terms().all(|(e, _)| e[..n_elim].iter().all(|&x| x == 0)))
            .map(|g| strip_prefix_vars(g, n_elim, &kept_ring))
            .collect();
        Ideal::new(kept_ring, kept)
    }

    /// The first basis element supported entirely on the kept variables,
    /// discovered during an elimination-order Buchberger run and returned as
    /// soon as it appears. Errors with [`Error::Budget`] when the step
    /// budget runs out first.
    pub fn eliminate_one(&self, keep: &[usize], budget: Option<u64>) -> Result<Polynomial> {
        let (work, kept_ring, perm, n_elim) = self.elimination_setup(keep)?;
        let gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| permute_vars(g, &perm, &work))
            .collect();
        let kept_only =
            move |g: &Polynomial| g.terms().all(|(e, _)| e[..n_elim].iter().all(|&x| x == 0));
        let outcome = buchberger(&work, gens, budget, Some(&kept_only))?;
        match outcome.stopped_at {
            Some(g) => Ok(strip_prefix_vars(&g, n_elim, &kept_ring)),
            None => {
                // basis completed without ever producing a kept-only element
                let found = outcome.basis.iter().find(|g| kept_only(g));
                match found {
                    Some(g) => Ok(strip_prefix_vars(g, n_elim, &kept_ring)),
                    None => Err(Error::Budget(
                        "no element of the elimination ideal appeared".into(),
                    )),
                }
            }
        }
    }

    fn elimination_setup(&self, keep: &[usize]) -> Result<(PolyRing, PolyRing, Vec<usize>, usize)> {
        let n = self.ring.num_vars();
        if keep.is_empty() {
            return Err(Error::Contract(
                "eliminate: keep set must be nonempty".into(),
            ));
        }
        let keep_set: HashSet<usize> = keep.iter().copied().collect();
        if keep_set.len() != keep.len() || keep.iter().any(|&i| i >= n) {
            return Err(Error::Contract("eliminate: invalid keep set".into()));
        }
        let elim: Vec<usize> = (0..n).filter(|i| !keep_set.contains(i)).collect();
        let kept: Vec<usize> = (0..n).filter(|i| keep_set.contains(i)).collect();
        let n_elim = elim.len();
        // permuted variable list: eliminated block first (it compares larger)
        let perm: Vec<usize> = elim.iter().chain(kept.iter()).copied().collect();
        let names: Vec<&str> = perm.iter().map(|&i| self.ring.var_name(i)).collect();
        let work = PolyRing::with_order(
            self.ring.field().clone(),
            &names,
            MonomialOrder::Elim(n_elim),
        )?;
        let kept_names: Vec<&str> = kept.iter().map(|&i| self.ring.var_name(i)).collect();
        let kept_ring = PolyRing::new(self.ring.field().clone(), &kept_names)?;
        Ok((work, kept_ring, perm, n_elim))
    }
}

/// Rewrites `g` with variables permuted into `work`'s slot order:
/// `perm[і]` is the source variable landing in slot `i`.
fn permute_vars(g: &Polynomial, perm: &[usize], work: &PolyRing) -> Polynomial {
    let terms = g
        .terms()
        .map(|(e, c)| {
            let exps: Vec<u32> = perm.iter().map(|&src| e[src]).collect();
            (exps, c.clone())
        })
        .collect();
    work.from_terms(terms)
}

/// Drops the first `n_elim` exponent slots (all zero by construction).
fn strip_prefix_vars(g: &Polynomial, n_elim: usize, kept_ring: &PolyRing) -> Polynomial {
    let terms = g
        .terms()
        .map(|(e, c)| (e[n_elim..].to_vec(), c.clone()))
        .collect();
    kept_ring.from_terms(terms)
}

/// Branch and bound for the maximum independent variable set: a set is
/// independent when no minimal leading-term support is contained in it,
/// i.e. the excluded set hits every support.
fn max_independent(
    supports: &[Vec<usize>],
    excluded: &mut Vec<bool>,
    excluded_count: usize,
    n: usize,
    best: &mut usize,
) {
    if n - excluded_count <= *best {
        return;
    }
    match supports.iter().find(|s| !s.iter().any(|&v| excluded[v])) {
        None => *best = (*best).max(n - excluded_count),
        Some(s) => {
            for &v in s {
                excluded[v] = true;
                max_independent(supports, excluded, excluded_count + 1, n, best);
                excluded[v] = false;
            }
        }
    }
}

/// Direct Buchberger-criterion check: every S-polynomial of the basis
/// reduces to zero against it. Intended for verification and tests.
pub fn basis_is_groebner(basis: &[Polynomial]) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let one = first.ring().field().one();
    for a in 0..basis.len() {
        for b in (a + 1)..basis.len() {
            let la = basis[a].leading_monomial().unwrap();
            let lb = basis[b].leading_monomial().unwrap();
            let lcm = exp_lcm(la, lb);
            let fa = basis[a].mul_term(&exp_sub(&lcm, la), &one);
            let fb = basis[b].mul_term(&exp_sub(&lcm, lb), &one);
            let s = fa.monic().sub(&fb.monic());
            if !reduce_full(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Full reduction modulo a monic basis: the remainder has no term divisible
/// by any basis leading monomial. Reducer choice is first-in-basis-order.
pub(crate) fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut rem = ring.zero();
    let mut h = f.clone();
    'outer: while let Some(lm) = h.leading_monomial() {
        let lm = lm.to_vec();
        let lc = h.leading_coeff().unwrap().clone();
        for g in basis {
            let glm = g.leading_monomial().expect("basis elements are nonzero");
            if exp_divides(glm, &lm) {
                let factor = exp_sub(&lm, glm);
                let coeff = lc.mul(
                    &g.leading_coeff()
                        .unwrap()
                        .inv()
                        .expect("basis leading coefficients are nonzero"),
                );
                h = h.sub(&g.mul_term(&factor, &coeff));
                continue 'outer;
            }
        }
        // move the irreducible leading term over to the remainder
        let t = ring.from_terms(vec![(lm, lc)]);
        rem = rem.add(&t);
        h = h.sub(&t);
    }
    rem
}

pub(crate) struct BuchbergerOutcome {
    pub basis: Vec<Polynomial>,
    /// Set when a stop predicate fired; the element that triggered it.
    pub stopped_at: Option<Polynomial>,
}

#[derive(PartialEq, Eq)]
struct Pair {
    deg: u64,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // reversed: BinaryHeap is a max-heap, we want minimal (deg, i, j)
        (other.deg, other.i, other.j).cmp(&(self.deg, self.i, self.j))
    }
}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

type StopFn<'a> = &'a dyn Fn(&Polynomial) -> bool;

/// Buchberger's algorithm on generators already living in the working ring.
///
/// Returns the reduced basis, or stops early when `stop` accepts a basis
/// element (initial generators included, checked in index order). A nonzero
/// constant in the basis collapses the result to `{1}` immediately.
pub(crate) fn buchberger(
    ring: &PolyRing,
    gens: Vec<Polynomial>,
    budget: Option<u64>,
    stop: Option<StopFn<'_>>,
) -> Result<BuchbergerOutcome> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    // autoreduce the input: repeatedly replace each generator by its normal
    // form against the others until stable
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let g = basis.remove(i);
            let r = reduce_full(&g, &basis);
            if r.is_zero() {
                changed = true;
                continue;
            }
            let r = r.monic();
            if r != g {
                changed = true;
            }
            basis.insert(i, r);
            i += 1;
        }
        if !changed {
            break;
        }
    }

    if basis.iter().any(|g| g.is_constant()) {
        let one = ring.one();
        let stopped = stop.and_then(|s| if s(&one) { Some(one.clone()) } else { None });
        return Ok(BuchbergerOutcome {
            basis: vec![one],
            stopped_at: stopped,
        });
    }
    if let Some(s) = stop {
        for g in &basis {
            if s(g) {
                return Ok(BuchbergerOutcome {
                    basis,
                    stopped_at: None,
                }
                .with_stop_from_basis(s));
            }
        }
    }

    let mut queue: BinaryHeap<Pair> = BinaryHeap::new();
    let mut handled: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |queue: &mut BinaryHeap<Pair>, basis: &[Polynomial], t: usize| {
        let lt = basis[t].leading_monomial().unwrap();
        for i in 0..t {
            let li = basis[i].leading_monomial().unwrap();
            let deg = exp_total(&exp_lcm(li, lt));
            queue.push(Pair { deg, i, j: t });
        }
    };
    for t in 0..basis.len() {
        push_pairs(&mut queue, &basis, t);
    }

    let mut steps: u64 = 0;
    while let Some(Pair { i, j, .. }) = queue.pop() {
        let (li, lj) = (
            basis[i].leading_monomial().unwrap().to_vec(),
            basis[j].leading_monomial().unwrap().to_vec(),
        );
        let lcm = exp_lcm(&li, &lj);
        handled.insert((i, j));

        // coprime leading terms: S-polynomial reduces to zero
        if lcm == exp_add(&li, &lj) {
            continue;
        }
        // chain criterion: an intermediate k whose leading term divides the
        // lcm, with both sub-pairs already handled
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && exp_divides(basis[k].leading_monomial().unwrap(), &lcm)
                && handled.contains(&(i.min(k), i.max(k)))
                && handled.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        if let Some(b) = budget {
            steps += 1;
            if steps > b {
                return Err(Error::Budget(format!(
                    "Gröbner step budget of {b} exceeded"
                )));
            }
        }

        // S-polynomial (basis is monic)
        let fi = basis[i].mul_term(&exp_sub(&lcm, &li), &ring.field().one());
        let fj = basis[j].mul_term(&exp_sub(&lcm, &lj), &ring.field().one());
        let s = fi.sub(&fj);
        let r = reduce_full(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.is_constant() {
            return Ok(BuchbergerOutcome {
                basis: vec![ring.one()],
                stopped_at: stop.and_then(|s| {
                    if s(&ring.one()) {
                        Some(ring.one())
                    } else {
                        None
                    }
                }),
            });
        }
        if let Some(s) = stop {
            if s(&r) {
                return Ok(BuchbergerOutcome {
                    basis,
                    stopped_at: Some(r),
                });
            }
        }
        basis.push(r);
        push_pairs(&mut queue, &basis, basis.len() - 1);
    }

    Ok(BuchbergerOutcome {
        basis: interreduce(ring, basis),
        stopped_at: None,
    })
}

impl BuchbergerOutcome {
    fn with_stop_from_basis(mut self, stop: StopFn<'_>) -> Self {
        self.stopped_at = self.basis.iter().find(|g| stop(g)).cloned();
        self
    }
}

/// Minimalizes and tail-reduces a basis into the unique reduced form,
/// sorted descending by leading monomial.
fn interreduce(ring: &PolyRing, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    // drop elements whose leading monomial another element's divides
    basis.sort_by(|a, b| {
        ring.cmp_exps(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| exp_divides(h.leading_monomial().unwrap(), lm))
        {
            minimal.push(g);
        }
    }
    // tail-reduce each against the others
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        out.push(reduce_full(&minimal[i], &others).monic());
    }
    out.sort_by(|a, b| ring.cmp_exps(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::make_prime_field;
    use crate::parse::parse_polynomial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(make_prime_field(p).unwrap(), vars).unwrap()
    }

    fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(r, s).unwrap())
            .collect();
        Ideal::new(r.clone(), gens).unwrap()
    }

    #[test]
    fn already_a_basis_in_lex() {
        let r = ring(101, &["x", "y"]).reordered(MonomialOrder::Lex);
        let i = ideal(&r, &["x", "y"]);
        let basis = i.groebner_in(MonomialOrder::Lex);
        let expect: Vec<Polynomial> = ["x", "y"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        assert_eq!(*basis, expect);
    }

    #[test]
    fn hand_buchberger_oracle() {
        // oracle by hand: f1 = x^2 - y, f2 = x^3.
        // S(f1,f2) = x*f1 - f2 = -x*y, giving x*y.
        // S(f1,x*y) = y*f1 - x*(x*y) = -y^2, giving y^2.
        // remaining pairs have coprime leading terms or reduce to zero;
        // x^3 = x*(x^2 - y) + x*y is redundant, so the reduced basis is
        // {x^2 - y, x*y, y^2}.
        let r = ring(101, &["x", "y"]);
        let i = ideal(&r, &["x^2-y", "x^3"]);
        let basis = i.groebner();
        let expect: Vec<Polynomial> = ["x^2+100*y", "x*y", "y^2"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        assert_eq!(*basis, expect);
        // y^3 = y * y^2 is a member
        assert!(i.is_member(&parse_polynomial(&r, "y^3").unwrap()).unwrap());
    }

    #[test]
    fn principal_ideal_made_monic() {
        let r = ring(7, &["x", "y"]);
        let i = ideal(&r, &["3*x^2+3*y"]);
        let basis = i.groebner();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], parse_polynomial(&r, "x^2+y").unwrap());
    }

    #[test]
    fn membership_and_unit_detection() {
        let r = ring(101, &["x", "y"]);
        let i = ideal(&r, &["x", "y"]);
        assert!(i.is_member(&r.var(0)).unwrap());
        assert!(!i.is_member(&r.one()).unwrap());
        assert!(ideal(&r, &["x", "x+1"]).contains_one());
        assert!(!i.contains_one());
    }

    #[test]
    fn normal_form_idempotent() {
        let r = ring(5, &["x", "y", "z"]);
        let i = ideal(&r, &["x^2-y", "y*z-1"]);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let f = crate::poly::random_form(&r, 3, &mut rng);
            let nf = i.normal_form(&f).unwrap();
            assert_eq!(i.normal_form(&nf).unwrap(), nf);
        }
    }

    #[test]
    fn eliminate_examples() {
        let r = ring(101, &["x", "y"]);
        // projection of the graph x = y onto y is everything
        let graph = ideal(&r, &["x-y"]);
        let proj = graph.eliminate(&[1]).unwrap();
        assert!(proj.generators().is_empty());

        // substituting x = y into x^2
        let i = ideal(&r, &["x^2", "x-y"]);
        let e = i.eliminate(&[1]).unwrap();
        assert_eq!(e.generators().len(), 1);
        assert_eq!(
            e.generators()[0],
            parse_polynomial(e.ring(), "y^2").unwrap()
        );
    }

    #[test]
    fn eliminate_soundness_members_of_source() {
        let r = ring(5, &["x", "y", "z"]);
        let i = ideal(&r, &["x^2+y*z", "x*y-z^2", "y^3-z"]);
        let e = i.eliminate(&[1, 2]).unwrap();
        // re-embed each eliminated generator and check membership in I
        for g in e.generators() {
            let text = g.to_string();
            let back = parse_polynomial(&r, &text).unwrap();
            assert!(i.is_member(&back).unwrap());
        }
    }

    #[test]
    fn krull_dim_examples() {
        let r = ring(101, &["x", "y"]);
        assert_eq!(ideal(&r, &["x", "x+1"]).krull_dim(), -1);
        assert_eq!(ideal(&r, &["x"]).krull_dim(), 1);
        assert_eq!(ideal(&r, &[]).krull_dim(), 2);
        let r3 = ring(101, &["x", "y", "z"]);
        assert_eq!(ideal(&r3, &["x*y"]).krull_dim(), 2);
        assert_eq!(ideal(&r3, &["x", "y", "z"]).krull_dim(), 0);
    }

    #[test]
    fn zero_dimensionality() {
        let r = ring(7, &["x", "y"]);
        assert!(ideal(&r, &["x^2", "y^3"]).is_zero_dimensional());
        assert!(!ideal(&r, &["x*y"]).is_zero_dimensional());
        assert!(ideal(&r, &["x-3", "y+1"]).is_zero_dimensional());
        assert!(!ideal(&r, &["x", "x+1"]).is_zero_dimensional());
        assert!(!ideal(&r, &[]).is_zero_dimensional());
    }

    #[test]
    fn buchberger_criterion_on_random_ideals() {
        // every S-polynomial of a returned basis reduces to zero
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for trial in 0..25 {
            let p = if trial % 2 == 0 { 3 } else { 5 };
            let r = ring(p, &["x", "y", "z"]);
            let gens: Vec<Polynomial> = (0..2)
                .map(|_| crate::poly::random_form(&r, 1 + (trial % 2) as u32 + 1, &mut rng))
                .collect();
            let i = Ideal::new(r.clone(), gens).unwrap();
            let basis = i.groebner();
            for a in 0..basis.len() {
                for b in (a + 1)..basis.len() {
                    let la = basis[a].leading_monomial().unwrap();
                    let lb = basis[b].leading_monomial().unwrap();
                    let lcm = exp_lcm(la, lb);
                    let fa = basis[a].mul_term(&exp_sub(&lcm, la), &r.field().one());
                    let fb = basis[b].mul_term(&exp_sub(&lcm, lb), &r.field().one());
                    let s = fa.sub(&fb);
                    assert!(reduce_full(&s, &basis).is_zero());
                }
            }
            // every generator reduces to zero against the basis
            for g in i.generators() {
                assert!(reduce_full(&g.to_ring(basis[0].ring()), &basis).is_zero());
            }
        }
    }

    #[test]
    fn krull_dim_matches_exhaustive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for trial in 0..30 {
            let p = if trial % 2 == 0 { 3 } else { 5 };
            let r = ring(p, &["x", "y", "z"]);
            let gens: Vec<Polynomial> = (0..1 + trial % 3)
                .map(|_| crate::poly::random_form(&r, 2, &mut rng))
                .collect();
            let i = Ideal::new(r.clone(), gens).unwrap();
            let dim = i.krull_dim();

            // oracle: enumerate all variable subsets directly
            let basis = i.groebner();
            let oracle = if basis.len() == 1 && basis[0].is_constant() {
                -1
            } else {
                let n = 3usize;
                let mut best = 0i64;
                for mask in 0u32..(1 << n) {
                    let subset: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                    let independent = basis.iter().all(|g| {
                        let lm = g.leading_monomial().unwrap();
                        !(0..n).filter(|&v| lm[v] > 0).all(|v| subset.contains(&v))
                    });
                    if independent {
                        best = best.max(subset.len() as i64);
                    }
                }
                best
            };
            assert_eq!(dim, oracle, "trial {trial}");
        }
    }

    #[test]
    fn budget_error_on_tiny_budget() {
        let r = ring(101, &["x", "y", "z"]);
        let i = ideal(&r, &["x^2+y*z+1", "y^2+x*z+2", "z^2+x*y+3"]);
        match i.groebner_budgeted(MonomialOrder::GrevLex, Some(1)) {
            Err(Error::Budget(_)) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
        // unbudgeted computation succeeds and is cached
        let b1 = i.groebner();
        let b2 = i.groebner();
        assert!(Arc::ptr_eq(&b1, &b2));
    }
}
