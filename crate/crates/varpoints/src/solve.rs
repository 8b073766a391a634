//! Zero-dimensional system solving over finite fields.
//!
//! Rational roots of a univariate polynomial come from `gcd(f, x^q - x)`;
//! extension roots from distinct-degree factorization followed by randomized
//! equal-degree (Cantor–Zassenhaus) splitting, adjoining one extension per
//! irreducible factor. Multivariate systems are solved from a lex Gröbner
//! basis: the eliminant in the last variable is solved, each root is
//! substituted, and the remaining variables recurse.
//!
//! Extensions are a single step over the prime field: when the coefficient
//! field is already an extension, only rational roots are reported and the
//! `extend` flag has no further effect.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::ff::{embed, extension_with_modulus, FqElement, FqField};
use crate::gb::{buchberger, Ideal};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

/// A point of affine space with all coordinates in one field, which may be
/// an extension of the ambient ring's coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePoint {
    field: FqField,
    coords: Vec<FqElement>,
}

impl AffinePoint {
    pub fn new(field: FqField, coords: Vec<FqElement>) -> Result<AffinePoint> {
        for c in &coords {
            if c.field() != &field {
                return Err(Error::FieldMismatch(
                    "point coordinate outside the stated field".into(),
                ));
            }
        }
        Ok(AffinePoint { field, coords })
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn coords(&self) -> &[FqElement] {
        &self.coords
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn evaluate(&self, f: &Polynomial) -> Result<FqElement> {
        f.evaluate(&self.coords)
    }

    /// All generators vanish at this point.
    pub fn lies_on(&self, ideal: &Ideal) -> Result<bool> {
        for g in ideal.generators() {
            if !self.evaluate(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// dense univariate polynomials over an FqField
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
struct UPoly {
    field: FqField,
    /// ascending coefficients, no trailing zeros; empty is the zero poly
    c: Vec<FqElement>,
}

impl UPoly {
    fn zero(field: &FqField) -> UPoly {
        UPoly {
            field: field.clone(),
            c: Vec::new(),
        }
    }

    fn from_coeffs(field: &FqField, mut c: Vec<FqElement>) -> UPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly {
            field: field.clone(),
            c,
        }
    }

    fn x(field: &FqField) -> UPoly {
        UPoly::from_coeffs(field, vec![field.zero(), field.one()])
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    fn monic(&self) -> UPoly {
        match self.c.last() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient nonzero");
                UPoly::from_coeffs(&self.field, self.c.iter().map(|x| x.mul(&inv)).collect())
            }
        }
    }

    fn add(&self, other: &UPoly) -> UPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i).cloned().unwrap_or_else(|| self.field.zero());
            let b = other.c.get(i).cloned().unwrap_or_else(|| self.field.zero());
            out.push(a.add(&b));
        }
        UPoly::from_coeffs(&self.field, out)
    }

    fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i).cloned().unwrap_or_else(|| self.field.zero());
            let b = other.c.get(i).cloned().unwrap_or_else(|| self.field.zero());
            out.push(a.sub(&b));
        }
        UPoly::from_coeffs(&self.field, out)
    }

    fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::from_coeffs(&self.field, out)
    }

    /// Quotient and remainder by a nonzero divisor.
    fn divrem(&self, div: &UPoly) -> (UPoly, UPoly) {
        let dd = div.deg().expect("division by zero polynomial");
        let lc_inv = div.c[dd].inv().expect("leading coefficient nonzero");
        let mut rem = self.c.clone();
        let mut quo = vec![self.field.zero(); self.c.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let lead = rem[k].clone();
            if !lead.is_zero() {
                let q = lead.mul(&lc_inv);
                quo[k - dd] = q.clone();
                for i in 0..=dd {
                    let s = div.c[i].mul(&q);
                    rem[k - dd + i] = rem[k - dd + i].sub(&s);
                }
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (
            UPoly::from_coeffs(&self.field, quo),
            UPoly::from_coeffs(&self.field, rem),
        )
    }

    fn rem(&self, div: &UPoly) -> UPoly {
        self.divrem(div).1
    }

    fn div_exact(&self, div: &UPoly) -> UPoly {
        let (q, r) = self.divrem(div);
        debug_assert!(r.is_zero(), "division was not exact");
        q
    }

    fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn mulmod(&self, other: &UPoly, m: &UPoly) -> UPoly {
        self.mul(other).rem(m)
    }

    fn powmod(&self, mut exp: u64, m: &UPoly) -> UPoly {
        let mut acc = UPoly::from_coeffs(&self.field, vec![self.field.one()]);
        let mut base = self.rem(m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            exp >>= 1;
        }
        acc
    }

    fn eval(&self, x: &FqElement) -> FqElement {
        let mut acc = self.field.zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}

/// Reads a polynomial supported on at most one variable into dense
/// univariate form; None when it genuinely involves several variables.
fn as_univariate(f: &Polynomial) -> Option<UPoly> {
    let support = f.support();
    if support.len() > 1 {
        return None;
    }
    let field = f.ring().field().clone();
    let var = support.first().copied().unwrap_or(0);
    let deg = f.degree_in(var) as usize;
    let mut c = vec![field.zero(); deg + 1];
    for (exps, coeff) in f.terms() {
        c[exps[var] as usize] = coeff.clone();
    }
    Some(UPoly::from_coeffs(&field, c))
}

/// Distinct linear factors of `f` over its own field, as field elements:
/// the roots of `gcd(f, x^q - x)`.
fn rational_roots<R: Rng + ?Sized>(f: &UPoly, rng: &mut R) -> Vec<FqElement> {
    let field = f.field.clone();
    let q = field.order();
    if f.is_constant() {
        return Vec::new();
    }
    // x^q - x mod f, then the gcd isolates the rational-root part
    let xq = UPoly::x(&field).powmod(q, f);
    let lin = f.gcd(&xq.sub(&UPoly::x(&field)));
    let mut roots = match lin.deg() {
        None | Some(0) => Vec::new(),
        _ => {
            if q <= 4096 {
                field.elements().filter(|e| lin.eval(e).is_zero()).collect()
            } else {
                let mut out = Vec::new();
                split_linear(&lin, rng, &mut out);
                out
            }
        }
    };
    roots.sort();
    roots
}

/// Randomized splitting of a product of distinct monic linear factors.
fn split_linear<R: Rng + ?Sized>(h: &UPoly, rng: &mut R, out: &mut Vec<FqElement>) {
    let field = h.field.clone();
    match h.deg() {
        None | Some(0) => {}
        Some(1) => {
            // monic x + c0: root is -c0
            out.push(h.c[0].neg());
        }
        Some(_) => {
            let q = field.order();
            loop {
                let shift = field.random_element(rng);
                let probe = UPoly::from_coeffs(&field, vec![shift, field.one()]);
                let g = if q % 2 == 1 {
                    let w = probe.powmod((q - 1) / 2, h);
                    let one = UPoly::from_coeffs(&field, vec![field.one()]);
                    h.gcd(&w.sub(&one))
                } else {
                    // char 2: trace map sum_{i < log2 q} u^(2^i)
                    let bits = q.trailing_zeros() as usize;
                    let mut acc = probe.rem(h);
                    let mut t = probe.rem(h);
                    for _ in 1..bits {
                        t = t.mulmod(&t, h);
                        acc = acc.add(&t).rem(h);
                    }
                    h.gcd(&acc)
                };
                if let Some(d) = g.deg() {
                    if d > 0 && d < h.deg().unwrap() {
                        split_linear(&g, rng, out);
                        split_linear(&h.div_exact(&g), rng, out);
                        return;
                    }
                }
            }
        }
    }
}

/// Monic irreducible factors of degree exactly `d`, via Cantor–Zassenhaus
/// equal-degree splitting. `h` must be a product of distinct irreducibles of
/// degree `d`.
fn equal_degree_split<R: Rng + ?Sized>(h: &UPoly, d: usize, rng: &mut R, out: &mut Vec<UPoly>) {
    let deg = h.deg().unwrap_or(0);
    if deg == 0 {
        return;
    }
    if deg == d {
        out.push(h.monic());
        return;
    }
    let field = h.field.clone();
    let q = field.order();
    loop {
        let u = UPoly::from_coeffs(
            &field,
            (0..deg).map(|_| field.random_element(rng)).collect(),
        );
        if u.is_constant() {
            continue;
        }
        let g = if q % 2 == 1 {
            // norm u^(1 + q + ... + q^(d-1)), then a half-order power
            let mut acc = u.rem(h);
            let mut t = acc.clone();
            for _ in 1..d {
                t = t.powmod(q, h);
                acc = acc.mulmod(&t, h);
            }
            let w = acc.powmod((q - 1) / 2, h);
            let one = UPoly::from_coeffs(&field, vec![field.one()]);
            h.gcd(&w.sub(&one))
        } else {
            // char 2: trace over F_2 of the degree-d residue algebra
            let bits = (q.trailing_zeros() as usize) * d;
            let mut acc = u.rem(h);
            let mut t = u.rem(h);
            for _ in 1..bits {
                t = t.mulmod(&t, h);
                acc = acc.add(&t).rem(h);
            }
            h.gcd(&acc)
        };
        if let Some(gd) = g.deg() {
            if gd > 0 && gd < deg {
                equal_degree_split(&g, d, rng, out);
                equal_degree_split(&h.div_exact(&g), d, rng, out);
                return;
            }
        }
    }
}

/// Whether a univariate polynomial has a root in its own coefficient field,
/// decided by the degree of `gcd(f, x^q - x)`; no roots are materialized.
pub(crate) fn rational_root_exists(f: &Polynomial) -> Result<bool> {
    let up = as_univariate(f).ok_or_else(|| {
        Error::Contract("root existence check needs a univariate polynomial".into())
    })?;
    if up.is_zero() {
        return Ok(true);
    }
    if up.is_constant() {
        return Ok(false);
    }
    let field = up.field.clone();
    let xq = UPoly::x(&field).powmod(field.order(), &up);
    let g = up.gcd(&xq.sub(&UPoly::x(&field)));
    Ok(g.deg().unwrap_or(0) > 0)
}

/// All roots of a univariate polynomial: base-field roots always, and roots
/// in single-step extensions of degree `2..=max_degree` when `extend` is set
/// and the coefficient field is prime. Every root of each irreducible
/// factor is reported; multiplicities collapse.
pub fn univariate_roots<R: Rng + ?Sized>(
    f: &Polynomial,
    extend: bool,
    max_degree: usize,
    rng: &mut R,
) -> Result<Vec<FqElement>> {
    if f.is_zero() {
        return Err(Error::Contract("univariate_roots: zero polynomial".into()));
    }
    let up = as_univariate(f).ok_or_else(|| {
        Error::Contract("univariate_roots: polynomial involves several variables".into())
    })?;
    Ok(upoly_roots(&up, extend, max_degree, rng))
}

fn upoly_roots<R: Rng + ?Sized>(
    f: &UPoly,
    extend: bool,
    max_degree: usize,
    rng: &mut R,
) -> Vec<FqElement> {
    let field = f.field.clone();
    let mut roots = rational_roots(f, rng);
    if !extend || field.degree() > 1 || max_degree < 2 {
        return roots;
    }
    // distinct-degree stage: strip degree-e factors ascending so that the
    // gcd at stage d sees only factors of degree exactly d
    let mut rem = f.monic();
    let p = field.characteristic();
    let q = field.order();
    let mut frob = UPoly::x(&field); // x^(q^d) mod rem is rebuilt per stage
    let cap = max_degree.min(f.deg().unwrap_or(0));
    for d in 1..=cap {
        if rem.deg().unwrap_or(0) < d {
            break;
        }
        frob = frob.powmod(q, &rem);
        let hd = rem.gcd(&frob.sub(&UPoly::x(&field)));
        if hd.deg().unwrap_or(0) == 0 {
            continue;
        }
        // remove every copy of each degree-d factor
        loop {
            let g = rem.gcd(&hd);
            if g.deg().unwrap_or(0) == 0 {
                break;
            }
            rem = rem.div_exact(&g);
        }
        if d == 1 {
            continue; // rational roots already collected
        }
        let mut factors = Vec::new();
        equal_degree_split(&hd, d, rng, &mut factors);
        factors.sort_by(|a, b| {
            let ka: Vec<_> = a.c.iter().map(|c| c.coeffs().to_vec()).collect();
            let kb: Vec<_> = b.c.iter().map(|c| c.coeffs().to_vec()).collect();
            ka.cmp(&kb)
        });
        for m in factors {
            let modulus: Vec<u64> = m.c.iter().map(|c| c.coeffs()[0]).collect();
            let ext = extension_with_modulus(&field, modulus)
                .expect("equal-degree factors are irreducible");
            // the generator is a root; its Frobenius orbit gives the rest
            let mut root = ext.generator().expect("extension field");
            for _ in 0..d {
                roots.push(root.clone());
                let mut next = root.clone();
                for _ in 0..field.degree() {
                    next = next.pow(p);
                }
                root = next;
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Points of `V(I)` for a zero-dimensional ideal: lex basis, roots of the
/// eliminant in the last variable, substitution, recursion. Rational points
/// always; extension points when `extend` is set (prime base fields only);
/// `exclude_origin` drops the all-zero point; the search stops after
/// `max_points` points.
pub fn solve_zero_dim<R: Rng + ?Sized>(
    ideal: &Ideal,
    extend: bool,
    exclude_origin: bool,
    max_points: usize,
    rng: &mut R,
) -> Result<Vec<AffinePoint>> {
    if !ideal.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let ring = ideal.ring();
    let lex = ring.reordered(MonomialOrder::Lex);
    let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.to_ring(&lex)).collect();
    let names: Vec<String> = ring.var_names().iter().map(|s| s.to_string()).collect();
    let mut raw: Vec<Vec<FqElement>> = Vec::new();
    // over-collect by one when the origin may be dropped afterwards
    let budget = if exclude_origin {
        max_points.saturating_add(1)
    } else {
        max_points
    };
    solve_rec(ring.field(), &names, gens, extend, budget, rng, &mut raw)?;
    let mut out = Vec::new();
    for coords in raw {
        let field = coords[0].field().clone();
        let pt = AffinePoint::new(field, coords)?;
        if exclude_origin && pt.is_origin() {
            continue;
        }
        out.push(pt);
        if out.len() == max_points {
            break;
        }
    }
    Ok(out)
}

fn solve_rec<R: Rng + ?Sized>(
    field: &FqField,
    vars: &[String],
    gens: Vec<Polynomial>,
    extend: bool,
    budget: usize,
    rng: &mut R,
    out: &mut Vec<Vec<FqElement>>,
) -> Result<()> {
    if out.len() >= budget {
        return Ok(());
    }
    let m = vars.len();
    let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let ring = PolyRing::with_order(field.clone(), &names, MonomialOrder::Lex)?;
    let gens: Vec<Polynomial> = gens.into_iter().map(|g| g.to_ring(&ring)).collect();
    let basis = buchberger(&ring, gens, None, None)?.basis;
    if basis.is_empty() {
        return Err(Error::NotZeroDimensional);
    }
    if basis.len() == 1 && basis[0].is_constant() {
        return Ok(()); // no solutions along this branch
    }
    // the eliminant: the unique basis element supported on the last variable
    let eliminant = basis
        .iter()
        .find(|g| g.support() == vec![m - 1] || (m == 1 && g.support().len() <= 1))
        .ok_or(Error::NotZeroDimensional)?;
    let up = as_univariate(eliminant).expect("eliminant is univariate");
    let max_deg = 12.min(up.deg().unwrap_or(0));
    let roots = upoly_roots(&up, extend, max_deg, rng);
    if m == 1 {
        for r in roots {
            if out.len() >= budget {
                break;
            }
            out.push(vec![r]);
        }
        return Ok(());
    }
    for r in roots {
        if out.len() >= budget {
            break;
        }
        let root_field = r.field().clone();
        let sub_ring =
            PolyRing::with_order(root_field.clone(), &names[..m - 1], MonomialOrder::Lex)?;
        let mut sub_gens = Vec::new();
        for g in &basis {
            if std::ptr::eq(g, eliminant) {
                continue;
            }
            sub_gens.push(substitute_last(g, &r, &sub_ring)?);
        }
        let before = out.len();
        solve_rec(
            &root_field,
            &vars[..m - 1],
            sub_gens,
            extend,
            budget,
            rng,
            out,
        )?;
        for coords in out[before..].iter_mut() {
            let point_field = coords[0].field().clone();
            coords.push(embed(&r, &point_field)?);
        }
    }
    Ok(())
}

/// Substitutes the last variable by `value` (whose field may extend the
/// coefficient field) and re-expresses the result in a ring one variable
/// shorter.
fn substitute_last(g: &Polynomial, value: &FqElement, sub_ring: &PolyRing) -> Result<Polynomial> {
    let m = g.ring().num_vars();
    let target_field = value.field();
    let mut terms = Vec::new();
    for (exps, coeff) in g.terms() {
        let mut c = embed(coeff, target_field)?;
        let e_last = exps[m - 1];
        if e_last > 0 {
            c = c.mul(&value.pow(e_last as u64));
        }
        if !c.is_zero() {
            terms.push((exps[..m - 1].to_vec(), c));
        }
    }
    Ok(sub_ring.from_terms(terms))
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

    #[test]
    fn square_roots_of_one_mod_five() {
        let r = ring(5, &["x"]);
        let f = parse_polynomial(&r, "x^2-1").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let roots = univariate_roots(&f, false, 1, &mut rng).unwrap();
        let vals: Vec<u64> = roots.iter().map(|e| e.residue().unwrap()).collect();
        assert_eq!(vals, vec![1, 4]);
    }

    #[test]
    fn no_rational_sqrt_of_two_mod_five() {
        // squares mod 5 are {0, 1, 4}, so x^2 - 2 has no rational root
        let r = ring(5, &["x"]);
        let f = parse_polynomial(&r, "x^2-2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(univariate_roots(&f, false, 1, &mut rng).unwrap().is_empty());
    }

    #[test]
    fn extension_sqrt_of_two_matches_brute_force() {
        let r = ring(5, &["x"]);
        let f = parse_polynomial(&r, "x^2-2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let roots = univariate_roots(&f, true, 2, &mut rng).unwrap();
        assert_eq!(roots.len(), 2);
        let ext = roots[0].field().clone();
        assert_eq!(ext.order(), 25);
        // oracle: brute force over all 25 elements of the same field
        let two = ext.from_u64(2);
        let expected: Vec<FqElement> = ext.elements().filter(|e| e.mul(e) == two).collect();
        assert_eq!(roots.len(), expected.len());
        for r in &roots {
            assert!(expected.contains(r));
        }
    }

    #[test]
    fn roots_with_multiplicity_collapse() {
        let r = ring(7, &["x"]);
        let f = parse_polynomial(&r, "(x-2)^3*(x-2)*(x+1)").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let roots = univariate_roots(&f, false, 1, &mut rng).unwrap();
        let vals: Vec<u64> = roots.iter().map(|e| e.residue().unwrap()).collect();
        assert_eq!(vals, vec![2, 6]);
    }

    #[test]
    fn roots_over_larger_prime_field() {
        // exercise the Cantor–Zassenhaus path (q > 4096)
        let r = ring(7919, &["x"]);
        let f = parse_polynomial(&r, "(x-17)*(x-100)*(x-3000)*(x^2+1)").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let roots = univariate_roots(&f, false, 1, &mut rng).unwrap();
        let vals: Vec<u64> = roots.iter().map(|e| e.residue().unwrap()).collect();
        assert_eq!(vals, vec![17, 100, 3000]);
    }

    #[test]
    fn solve_explicit_point() {
        let r = ring(7, &["x", "y"]);
        let i = Ideal::new(
            r.clone(),
            vec![
                parse_polynomial(&r, "x-3").unwrap(),
                parse_polynomial(&r, "y+1").unwrap(),
            ],
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let pts = solve_zero_dim(&i, false, false, 10, &mut rng).unwrap();
        assert_eq!(pts.len(), 1);
        let vals: Vec<u64> = pts[0]
            .coords()
            .iter()
            .map(|c| c.residue().unwrap())
            .collect();
        assert_eq!(vals, vec![3, 6]);
    }

    #[test]
    fn solve_with_extension_over_f3() {
        let r = ring(3, &["x"]);
        let i = Ideal::new(r.clone(), vec![parse_polynomial(&r, "x^2+1").unwrap()]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(solve_zero_dim(&i, false, false, 10, &mut rng)
            .unwrap()
            .is_empty());
        let pts = solve_zero_dim(&i, true, false, 10, &mut rng).unwrap();
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert_eq!(p.field().order(), 9);
            assert!(p.lies_on(&i).unwrap());
        }
    }

    #[test]
    fn exclude_origin_empties_the_axes_point() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0), r.var(1)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(solve_zero_dim(&i, false, true, 10, &mut rng)
            .unwrap()
            .is_empty());
        assert_eq!(
            solve_zero_dim(&i, false, false, 10, &mut rng)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn contract_error_on_positive_dimension() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(
            solve_zero_dim(&i, false, false, 10, &mut rng),
            Err(Error::NotZeroDimensional)
        ));
    }

    #[test]
    fn completeness_matches_enumeration_small_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for &p in &[3u64, 5] {
            for trial in 0..10 {
                let r = ring(p, &["x", "y"]);
                let gens: Vec<Polynomial> = (0..2)
                    .map(|_| {
                        // inhomogeneous degree-2 polynomials keep things zero-dim often
                        let f = crate::poly::random_form(&r, 2, &mut rng);
                        let c = r.constant(r.field().random_element(&mut rng));
                        f.add(&c)
                    })
                    .collect();
                let i = Ideal::new(r.clone(), gens).unwrap();
                if !i.is_zero_dimensional() {
                    continue;
                }
                let pts = solve_zero_dim(&i, false, false, 1000, &mut rng).unwrap();
                // oracle: enumerate the whole affine plane
                let field = r.field().clone();
                let mut expected = Vec::new();
                for x in field.elements() {
                    for y in field.elements() {
                        let coords = vec![x.clone(), y.clone()];
                        if i.generators()
                            .iter()
                            .all(|g| g.evaluate(&coords).unwrap().is_zero())
                        {
                            expected.push(coords);
                        }
                    }
                }
                let got: Vec<Vec<u64>> = pts
                    .iter()
                    .map(|p| p.coords().iter().map(|c| c.residue().unwrap()).collect())
                    .collect();
                let mut want: Vec<Vec<u64>> = expected
                    .iter()
                    .map(|c| c.iter().map(|e| e.residue().unwrap()).collect())
                    .collect();
                let mut got_sorted = got.clone();
                got_sorted.sort();
                want.sort();
                assert_eq!(got_sorted, want, "p={p} trial={trial}");
                for p in &pts {
                    assert!(p.lies_on(&i).unwrap());
                }
            }
        }
    }

    #[test]
    fn deterministic_output_order() {
        let r = ring(5, &["x", "y"]);
        let gens = vec![
            parse_polynomial(&r, "x^2-1").unwrap(),
            parse_polynomial(&r, "y^2-y").unwrap(),
        ];
        let i = Ideal::new(r.clone(), gens).unwrap();
        let run = |seed: u64| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            solve_zero_dim(&i, false, false, 100, &mut rng).unwrap()
        };
        assert_eq!(run(9), run(9));
        assert_eq!(run(9), run(10)); // rational-only solving draws no randomness
    }

    #[test]
    fn extension_point_in_mixed_system() {
        // x^2 + 1 irreducible over F_7? -1 is a QR mod 7? squares: 1,4,2 -> no
        let r = ring(7, &["x", "y"]);
        let gens = vec![
            parse_polynomial(&r, "x^2+1").unwrap(),
            parse_polynomial(&r, "y-x-1").unwrap(),
        ];
        let i = Ideal::new(r.clone(), gens).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let pts = solve_zero_dim(&i, true, false, 10, &mut rng).unwrap();
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert_eq!(p.field().order(), 49);
            assert!(p.lies_on(&i).unwrap());
        }
    }
}
