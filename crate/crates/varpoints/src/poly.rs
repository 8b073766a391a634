//! Multivariate polynomials over a finite field.
//!
//! A [`PolyRing`] fixes the coefficient field, the variable names and a
//! monomial order; a [`Polynomial`] is a list of (exponent vector, nonzero
//! coefficient) terms kept strictly sorted in the ring's order, so equality
//! is term-list equality. [`RingMap`] is variable substitution between
//! rings, [`PolyMatrix`] a rectangular grid of polynomials (Jacobians live
//! here), and the `random_*` functions draw the dense forms and sparse
//! linear forms the point-search strategies cut with.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::ff::{embed, FqElement, FqField};

/// Total, multiplication-compatible orders on monomials. `Elim(m)` is the
/// block order that compares the first `m` variables grevlex before the
/// rest; it has the elimination property for those variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Elim(usize),
}

fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    // smaller exponent in the last differing slot wins
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Greater means "larger monomial".
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match *self {
            MonomialOrder::GrevLex => grevlex_cmp(a, b),
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Elim(m) => {
                grevlex_cmp(&a[..m], &b[..m]).then_with(|| grevlex_cmp(&a[m..], &b[m..]))
            }
        }
    }
}

// --------------------------------------------------------------------------
// exponent-vector helpers, shared with the Gröbner engine
// --------------------------------------------------------------------------

pub(crate) fn exp_add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub(crate) fn exp_sub(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

pub(crate) fn exp_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub(crate) fn exp_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y)
}

pub(crate) fn exp_total(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

#[derive(Debug)]
struct RingRepr {
    field: FqField,
    vars: Vec<String>,
    order: MonomialOrder,
}

/// A polynomial ring handle, cheap to clone.
#[derive(Clone, Debug)]
pub struct PolyRing(Arc<RingRepr>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.vars == other.0.vars
                && self.0.order == other.0.order)
    }
}
impl Eq for PolyRing {}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// A ring in grevlex order, the default for Gröbner work.
    pub fn new(field: FqField, vars: &[&str]) -> Result<PolyRing> {
        Self::with_order(field, vars, MonomialOrder::GrevLex)
    }

    pub fn with_order(field: FqField, vars: &[&str], order: MonomialOrder) -> Result<PolyRing> {
        if vars.is_empty() {
            return Err(Error::Contract("a ring needs at least one variable".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for v in vars {
            if !valid_var_name(v) {
                return Err(Error::Contract(format!("invalid variable name `{v}`")));
            }
            if field.degree() > 1 && *v == "a" {
                return Err(Error::Contract(
                    "variable name `a` is reserved for the field generator".into(),
                ));
            }
            if !seen.insert(*v) {
                return Err(Error::Contract(format!("duplicate variable name `{v}`")));
            }
        }
        if let MonomialOrder::Elim(m) = order {
            if m > vars.len() {
                return Err(Error::Contract(
                    "elimination block exceeds variable count".into(),
                ));
            }
        }
        Ok(PolyRing(Arc::new(RingRepr {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        })))
    }

    pub fn field(&self) -> &FqField {
        &self.0.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.0.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The same ring under a different monomial order. Polynomials must be
    /// converted explicitly; see [`Polynomial::into_ring`].
    pub fn reordered(&self, order: MonomialOrder) -> PolyRing {
        if order == self.0.order {
            return self.clone();
        }
        PolyRing(Arc::new(RingRepr {
            field: self.0.field.clone(),
            vars: self.0.vars.clone(),
            order,
        }))
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.0.order.cmp_exps(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.0.field.one())
    }

    /// The i-th variable as a polynomial.
    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.num_vars(), "variable index out of range");
        let mut exps = vec![0u32; self.num_vars()];
        exps[i] = 1;
        Polynomial {
            ring: self.clone(),
            terms: vec![Term {
                exps,
                coeff: self.0.field.one(),
            }],
        }
    }

    pub fn constant(&self, value: FqElement) -> Polynomial {
        assert!(
            value.field() == &self.0.field,
            "constant from a different field"
        );
        if value.is_zero() {
            return self.zero();
        }
        Polynomial {
            ring: self.clone(),
            terms: vec![Term {
                exps: vec![0; self.num_vars()],
                coeff: value,
            }],
        }
    }

    pub fn from_int(&self, n: i64) -> Polynomial {
        self.constant(self.0.field.from_i64(n))
    }

    /// Normalizes an arbitrary term list: merges duplicates, drops zeros,
    /// sorts descending in the ring order.
    pub fn from_terms(&self, terms: Vec<(Vec<u32>, FqElement)>) -> Polynomial {
        let mut acc: HashMap<Vec<u32>, FqElement> = HashMap::new();
        for (exps, coeff) in terms {
            assert_eq!(exps.len(), self.num_vars(), "exponent width mismatch");
            assert!(coeff.field() == &self.0.field, "coefficient field mismatch");
            match acc.entry(exps) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = e.get().add(&coeff);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !coeff.is_zero() {
                        e.insert(coeff);
                    }
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .map(|(exps, coeff)| Term { exps, coeff })
            .collect();
        terms.sort_by(|a, b| self.cmp_exps(&b.exps, &a.exps));
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    exps: Vec<u32>,
    coeff: FqElement,
}

/// A multivariate polynomial in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &FqElement)> {
        self.terms.iter().map(|t| (t.exps.as_slice(), &t.coeff))
    }

    pub fn leading_monomial(&self) -> Option<&[u32]> {
        self.terms.first().map(|t| t.exps.as_slice())
    }

    pub fn leading_coeff(&self) -> Option<&FqElement> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| exp_total(&t.exps)).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.exps[var]).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| exp_total(&t.exps) == 0)
    }

    /// The value of a constant polynomial (zero included), or None.
    pub fn constant_value(&self) -> Option<FqElement> {
        if self.is_zero() {
            return Some(self.ring.field().zero());
        }
        if self.is_constant() {
            return Some(self.terms[0].coeff.clone());
        }
        None
    }

    /// Indices of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let n = self.ring.num_vars();
        let mut used = vec![false; n];
        for t in &self.terms {
            for (i, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.ring == other.ring,
            "mixed rings in arithmetic: {} vs {}",
            self.ring,
            other.ring
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self
                .ring
                .cmp_exps(&self.terms[i].exps, &other.terms[j].exps)
            {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].coeff.add(&other.terms[j].coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            exps: self.terms[i].exps.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: t.exps.clone(),
                    coeff: t.coeff.neg(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FqElement) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: t.exps.clone(),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    /// Multiplication by a single term; preserves sortedness.
    pub(crate) fn mul_term(&self, exps: &[u32], coeff: &FqElement) -> Polynomial {
        if coeff.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: exp_add(&t.exps, exps),
                    coeff: t.coeff.mul(coeff),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let mut acc: HashMap<Vec<u32>, FqElement> = HashMap::new();
        for s in &self.terms {
            for t in &other.terms {
                let exps = exp_add(&s.exps, &t.exps);
                let prod = s.coeff.mul(&t.coeff);
                match acc.entry(exps) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let sum = e.get().add(&prod);
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            e.insert(sum);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !prod.is_zero() {
                            e.insert(prod);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .map(|(exps, coeff)| Term { exps, coeff })
            .collect();
        terms.sort_by(|a, b| self.ring.cmp_exps(&b.exps, &a.exps));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.ring.num_vars());
        let p = self.ring.field().characteristic();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.exps[var] > 0)
            .filter_map(|t| {
                let e = t.exps[var] as u64;
                let c = t.coeff.mul(&self.ring.field().from_u64(e % p));
                if c.is_zero() {
                    return None;
                }
                let mut exps = t.exps.clone();
                exps[var] -= 1;
                Some((exps, c))
            })
            .collect();
        self.ring.from_terms(terms)
    }

    /// Evaluates at a coordinate vector. The coordinates must all live in one
    /// field that either equals the coefficient field or extends it (prime
    /// subfield inclusion); the result lives in the coordinate field.
    pub fn evaluate(&self, coords: &[FqElement]) -> Result<FqElement> {
        let n = self.ring.num_vars();
        if coords.len() != n {
            return Err(Error::CoordinateCount {
                expected: n,
                got: coords.len(),
            });
        }
        let eval_field = coords
            .first()
            .map(|c| c.field().clone())
            .unwrap_or_else(|| self.ring.field().clone());
        for c in coords {
            if c.field() != &eval_field {
                return Err(Error::FieldMismatch(
                    "point coordinates live in different fields".into(),
                ));
            }
        }
        let mut acc = eval_field.zero();
        for t in &self.terms {
            let mut v = embed(&t.coeff, &eval_field)?;
            for (i, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    v = v.mul(&coords[i].pow(e as u64));
                }
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }

    /// The same polynomial viewed in another ring handle with identical
    /// variables and field but a different order; terms are re-sorted.
    pub(crate) fn to_ring(&self, ring: &PolyRing) -> Polynomial {
        assert_eq!(self.ring.var_names(), ring.var_names(), "variable mismatch");
        assert!(self.ring.field() == ring.field(), "field mismatch");
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp_exps(&b.exps, &a.exps));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Coefficient-wise embedding into a ring over an extension of this
    /// ring's field; variable names must match.
    pub fn embed_into(&self, target: &PolyRing) -> Result<Polynomial> {
        if self.ring.var_names() != target.var_names() {
            return Err(Error::RingMismatch(
                "variable names differ, cannot embed".into(),
            ));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exps.clone(), embed(&t.coeff, target.field())?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(target.from_terms(terms))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}
impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}
impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}
impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, "+")?;
            }
            let is_const = exp_total(&t.exps) == 0;
            let coeff_txt = if t.coeff.field().degree() == 1 || t.coeff.coeffs().len() == 1 {
                t.coeff.coeffs()[0].to_string()
            } else {
                format!("({})", t.coeff)
            };
            if is_const {
                write!(f, "{coeff_txt}")?;
                continue;
            }
            let mut wrote = false;
            if !t.coeff.is_one() {
                write!(f, "{coeff_txt}")?;
                wrote = true;
            }
            for (i, &e) in t.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                if e == 1 {
                    write!(f, "{}", self.ring.var_name(i))?;
                } else {
                    write!(f, "{}^{}", self.ring.var_name(i), e)?;
                }
            }
        }
        Ok(())
    }
}

/// A variable-substitution homomorphism between polynomial rings.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: PolyRing,
    target: PolyRing,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: PolyRing, target: PolyRing, images: Vec<Polynomial>) -> Result<RingMap> {
        if images.len() != source.num_vars() {
            return Err(Error::RingMismatch(format!(
                "need {} images, got {}",
                source.num_vars(),
                images.len()
            )));
        }
        for img in &images {
            if img.ring() != &target {
                return Err(Error::RingMismatch("image outside the target ring".into()));
            }
        }
        Ok(RingMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(ring: &PolyRing) -> RingMap {
        RingMap {
            source: ring.clone(),
            target: ring.clone(),
            images: (0..ring.num_vars()).map(|i| ring.var(i)).collect(),
        }
    }

    pub fn source(&self) -> &PolyRing {
        &self.source
    }

    pub fn target(&self) -> &PolyRing {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Substitutes the images for the source variables of `f`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.source {
            return Err(Error::RingMismatch(
                "polynomial not in the map's source".into(),
            ));
        }
        let mut acc = self.target.zero();
        for (exps, coeff) in f.terms() {
            let c = embed(coeff, self.target.field())?;
            let mut term = self.target.constant(c);
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&self.images[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// `self` then `next`: the composite source -> next.target.
    pub fn compose(&self, next: &RingMap) -> Result<RingMap> {
        if self.target != next.source {
            return Err(Error::RingMismatch("maps do not compose".into()));
        }
        let images = self
            .images
            .iter()
            .map(|img| next.apply(img))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(self.source.clone(), next.target.clone(), images)
    }
}

impl fmt::Display for RingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} -> {}", self.source.var_name(i), img)?;
        }
        write!(f, "]")
    }
}

/// A rectangular matrix of polynomials sharing one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: PolyRing, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Contract(format!(
                "matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.ring() != &ring {
                return Err(Error::RingMismatch("matrix entry outside the ring".into()));
            }
        }
        Ok(PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    /// The Jacobian of a generator list: entry (i, j) is d g_j / d x_i,
    /// variables indexing rows.
    pub fn jacobian(ring: &PolyRing, gens: &[Polynomial]) -> Result<PolyMatrix> {
        let n = ring.num_vars();
        let mut entries = Vec::with_capacity(n * gens.len());
        for i in 0..n {
            for g in gens {
                if g.ring() != ring {
                    return Err(Error::RingMismatch("generator outside the ring".into()));
                }
                entries.push(g.derivative(i));
            }
        }
        PolyMatrix::new(ring.clone(), n, gens.len(), entries)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.at(r, c).clone()))
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Determinant by Laplace expansion with memoization on column subsets.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Contract("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.ring.one());
        }
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut memo: HashMap<u32, Polynomial> = HashMap::new();
        self.det_rec(n, full, &mut memo);
        Ok(memo.remove(&full).unwrap())
    }

    fn det_rec(&self, n: usize, mask: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
        if let Some(d) = memo.get(&mask) {
            return d.clone();
        }
        let row = n - (mask.count_ones() as usize);
        let mut acc = self.ring.zero();
        let mut sign_neg = false;
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = self.at(row, c);
            if !entry.is_zero() {
                let sub = if mask.count_ones() == 1 {
                    self.ring.one()
                } else {
                    self.det_rec(n, mask & !(1 << c), memo)
                };
                let prod = entry.mul(&sub);
                acc = if sign_neg {
                    acc.sub(&prod)
                } else {
                    acc.add(&prod)
                };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Evaluates all entries at a coordinate vector.
    pub fn evaluate(&self, coords: &[FqElement]) -> Result<Vec<Vec<FqElement>>> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                row.push(self.at(r, c).evaluate(coords)?);
            }
            out.push(row);
        }
        Ok(out)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "| ")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, " |")?;
        }
        Ok(())
    }
}

/// Shapes of the sparse linear forms used for linear-space cuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Replacement {
    /// `a*x_i + b`
    Monomial,
    /// `a*x_i + b*x_j + c`
    Binomial,
    /// three variables plus a constant
    Trinomial,
    /// every variable gets a coefficient
    Full,
}

impl Replacement {
    /// Number of variables involved, degraded to the variable count when the
    /// nominal arity exceeds it.
    pub fn arity(&self, num_vars: usize) -> usize {
        let nominal = match self {
            Replacement::Monomial => 1,
            Replacement::Binomial => 2,
            Replacement::Trinomial => 3,
            Replacement::Full => num_vars,
        };
        nominal.min(num_vars)
    }
}

/// A dense random form of degree exactly `d`: every degree-`d` monomial gets
/// a uniform (possibly zero) coefficient; the all-zero draw is rejected.
pub fn random_form<R: Rng + ?Sized>(ring: &PolyRing, degree: u32, rng: &mut R) -> Polynomial {
    let n = ring.num_vars();
    let mut monomials = Vec::new();
    let mut current = vec![0u32; n];
    enumerate_degree(n, 0, degree, &mut current, &mut monomials);
    loop {
        let terms: Vec<(Vec<u32>, FqElement)> = monomials
            .iter()
            .map(|m| (m.clone(), ring.field().random_element(rng)))
            .collect();
        let f = ring.from_terms(terms);
        if !f.is_zero() {
            return f;
        }
    }
}

fn enumerate_degree(n: usize, i: usize, rem: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == n - 1 {
        current[i] = rem;
        out.push(current.clone());
        current[i] = 0;
        return;
    }
    for e in 0..=rem {
        current[i] = e;
        enumerate_degree(n, i + 1, rem - e, current, out);
    }
    current[i] = 0;
}

/// A random linear form in the given replacement shape: `arity` distinct
/// variables chosen uniformly, uniform coefficients with at least one
/// variable coefficient nonzero, plus a uniform constant unless
/// `homogeneous` is set.
pub fn random_linear_form<R: Rng + ?Sized>(
    ring: &PolyRing,
    replacement: Replacement,
    homogeneous: bool,
    rng: &mut R,
) -> Polynomial {
    let n = ring.num_vars();
    let m = replacement.arity(n);
    // partial Fisher-Yates for m distinct variable indices
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..m {
        let j = rng.random_range(i..n);
        idx.swap(i, j);
    }
    let chosen = &idx[..m];
    let field = ring.field();
    loop {
        let coeffs: Vec<FqElement> = (0..m).map(|_| field.random_element(rng)).collect();
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut terms: Vec<(Vec<u32>, FqElement)> = chosen
            .iter()
            .zip(coeffs)
            .map(|(&v, c)| {
                let mut exps = vec![0u32; n];
                exps[v] = 1;
                (exps, c)
            })
            .collect();
        if !homogeneous {
            terms.push((vec![0; n], field.random_element(rng)));
        }
        return ring.from_terms(terms);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::make_prime_field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring101() -> PolyRing {
        PolyRing::new(make_prime_field(101).unwrap(), &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn evaluate_paper_point() {
        let r = ring101();
        let f = crate::parse::parse_polynomial(&r, "x^3+y^2+1").unwrap();
        let g = crate::parse::parse_polynomial(&r, "z^3-x^2-y^2+2").unwrap();
        let field = r.field().clone();
        let pt = vec![field.from_i64(-1), field.from_i64(0), field.from_i64(-1)];
        assert!(f.evaluate(&pt).unwrap().is_zero());
        assert!(g.evaluate(&pt).unwrap().is_zero());
        assert!(r.one().evaluate(&pt).unwrap().is_one());
    }

    #[test]
    fn evaluate_errors() {
        let r = ring101();
        let f = r.var(0);
        let field = r.field().clone();
        assert!(matches!(
            f.evaluate(&[field.from_u64(1)]),
            Err(Error::CoordinateCount {
                expected: 3,
                got: 1
            })
        ));
        let f7 = make_prime_field(7).unwrap();
        let bad = vec![f7.from_u64(1), f7.from_u64(1), f7.from_u64(1)];
        assert!(f.evaluate(&bad).is_err());
    }

    #[test]
    fn ring_map_substitution() {
        let r = ring101();
        let f = crate::parse::parse_polynomial(&r, "x^2+y").unwrap();
        let id = RingMap::identity(&r);
        assert_eq!(id.apply(&f).unwrap(), f);

        // x -> x+2z, y -> 99y, z -> z on f = x gives x+2z
        let images = vec![
            crate::parse::parse_polynomial(&r, "x+2*z").unwrap(),
            crate::parse::parse_polynomial(&r, "99*y").unwrap(),
            r.var(2),
        ];
        let h = RingMap::new(r.clone(), r.clone(), images).unwrap();
        let x = r.var(0);
        assert_eq!(
            h.apply(&x).unwrap(),
            crate::parse::parse_polynomial(&r, "x+2*z").unwrap()
        );
    }

    #[test]
    fn ring_map_is_homomorphism_and_composes() {
        let r = ring101();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let images1: Vec<Polynomial> = (0..3)
                .map(|_| random_linear_form(&r, Replacement::Full, false, &mut rng))
                .collect();
            let images2: Vec<Polynomial> = (0..3)
                .map(|_| random_linear_form(&r, Replacement::Full, false, &mut rng))
                .collect();
            let h1 = RingMap::new(r.clone(), r.clone(), images1).unwrap();
            let h2 = RingMap::new(r.clone(), r.clone(), images2).unwrap();
            let f = random_form(&r, 2, &mut rng);
            let g = random_form(&r, 1, &mut rng);
            // homomorphism
            assert_eq!(
                h1.apply(&f.mul(&g)).unwrap(),
                h1.apply(&f).unwrap().mul(&h1.apply(&g).unwrap())
            );
            // composition agreement
            let composite = h1.compose(&h2).unwrap();
            assert_eq!(
                h2.apply(&h1.apply(&f).unwrap()).unwrap(),
                composite.apply(&f).unwrap()
            );
        }
    }

    #[test]
    fn jacobian_examples() {
        let field = make_prime_field(101).unwrap();
        let r = PolyRing::new(field, &["x", "y"]).unwrap();
        let f = crate::parse::parse_polynomial(&r, "x^3-y^2").unwrap();
        let m = PolyMatrix::jacobian(&r, &[f]).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 1));
        assert_eq!(
            m.at(0, 0),
            &crate::parse::parse_polynomial(&r, "3*x^2").unwrap()
        );
        assert_eq!(
            m.at(1, 0),
            &crate::parse::parse_polynomial(&r, "-2*y").unwrap()
        );

        let c = PolyMatrix::jacobian(&r, &[r.from_int(5)]).unwrap();
        assert!(c.at(0, 0).is_zero() && c.at(1, 0).is_zero());
    }

    #[test]
    fn leibniz_rule_random() {
        let r = ring101();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let f = random_form(&r, 2, &mut rng);
            let g = random_form(&r, 3, &mut rng);
            for v in 0..3 {
                let lhs = f.mul(&g).derivative(v);
                let rhs = f.derivative(v).mul(&g).add(&f.mul(&g.derivative(v)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn determinant_small() {
        let r = ring101();
        let x = r.var(0);
        let y = r.var(1);
        // det [[x, y], [1, x]] = x^2 - y
        let m = PolyMatrix::new(
            r.clone(),
            2,
            2,
            vec![x.clone(), y.clone(), r.one(), x.clone()],
        )
        .unwrap();
        assert_eq!(
            m.determinant().unwrap(),
            crate::parse::parse_polynomial(&r, "x^2-y").unwrap()
        );
    }

    #[test]
    fn random_linear_form_shapes() {
        let field = make_prime_field(5).unwrap();
        let r = PolyRing::new(field, &["x", "y", "z"]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let f = random_linear_form(&r, Replacement::Monomial, false, &mut rng);
            assert!(f.total_degree() == Some(1));
            assert_eq!(f.support().len(), 1);

            let g = random_linear_form(&r, Replacement::Full, true, &mut rng);
            assert!(!g.is_zero());
            assert!(g.terms().all(|(e, _)| exp_total(e) == 1));

            let h = random_linear_form(&r, Replacement::Trinomial, false, &mut rng);
            assert!(h.support().len() <= 3 && h.total_degree() == Some(1));
        }
        // degraded arity: binomial in a one-variable ring
        let r1 = PolyRing::new(make_prime_field(5).unwrap(), &["x"]).unwrap();
        for _ in 0..20 {
            let f = random_linear_form(&r1, Replacement::Binomial, false, &mut rng);
            assert_eq!(f.support(), vec![0]);
        }
    }

    #[test]
    fn random_form_is_homogeneous() {
        let r = ring101();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for d in 1..4u32 {
            let f = random_form(&r, d, &mut rng);
            assert!(f.terms().all(|(e, _)| exp_total(e) == d as u64));
        }
    }

    #[test]
    fn canonical_term_order_after_arithmetic() {
        let r = ring101();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..30 {
            let f = random_form(&r, 2, &mut rng);
            let g = random_form(&r, 3, &mut rng);
            for h in [f.add(&g), f.mul(&g), f.sub(&g)] {
                let exps: Vec<&[u32]> = h.terms().map(|(e, _)| e).collect();
                for w in exps.windows(2) {
                    assert_eq!(r.cmp_exps(w[0], w[1]), Ordering::Greater);
                }
                assert!(h.terms().all(|(_, c)| !c.is_zero()));
            }
        }
    }

    #[test]
    fn grevlex_vs_lex() {
        let field = make_prime_field(7).unwrap();
        let grev = PolyRing::new(field.clone(), &["x", "y", "z"]).unwrap();
        // grevlex: x*z > y^2? deg equal; last differing exponent decides
        assert_eq!(grev.cmp_exps(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        let lex = grev.reordered(MonomialOrder::Lex);
        assert_eq!(lex.cmp_exps(&[1, 0, 1], &[0, 2, 0]), Ordering::Greater);
        // x > y > z in both
        for r in [&grev, &lex] {
            assert_eq!(r.cmp_exps(&[1, 0, 0], &[0, 1, 0]), Ordering::Greater);
            assert_eq!(r.cmp_exps(&[0, 1, 0], &[0, 0, 1]), Ordering::Greater);
        }
    }
}
