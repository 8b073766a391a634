//! Exact arithmetic in prime fields `F_p` and extension fields `F_{p^k}`.
//!
//! A [`FqField`] is either a prime field `F_p` or a single-step extension
//! `F_p[a]/(m)` for a monic irreducible modulus `m` of degree `k`. Elements
//! are stored as reduced coefficient vectors over `F_p`, so equality is
//! representation equality and every element has one canonical form.
//!
//! Characteristics are capped below `2^31` so that products of residues fit
//! in 64-bit intermediates.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest allowed characteristic (exclusive).
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

#[derive(Debug)]
struct FieldRepr {
    p: u64,
    k: usize,
    /// Ascending coefficients of the monic modulus, length `k + 1`.
    /// Empty for prime fields.
    modulus: Vec<u64>,
    order: u64,
}

/// A finite field `F_{p^k}`, cheap to clone and share.
#[derive(Clone, Debug)]
pub struct FqField(Arc<FieldRepr>);

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FqField {}

/// An element of an [`FqField`], reduced to canonical form.
#[derive(Clone, Debug)]
pub struct FqElement {
    field: FqField,
    /// Ascending coefficients over `F_p`; length 1 for prime fields,
    /// length `k` otherwise. Always fully reduced mod p and the modulus.
    coeffs: Vec<u64>,
}

impl PartialEq for FqElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for FqElement {}

impl std::hash::Hash for FqElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.characteristic().hash(state);
        self.field.degree().hash(state);
        self.coeffs.hash(state);
    }
}

/// Representation order: by field (p, k, modulus), then by coefficient
/// vector. Total and deterministic, with no algebraic meaning; used to fix
/// traversal orders in solvers.
impl Ord for FqElement {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = &self.field.0;
        let b = &other.field.0;
        (a.p, a.k, &a.modulus, &self.coeffs).cmp(&(b.p, b.k, &b.modulus, &other.coeffs))
    }
}
impl PartialOrd for FqElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Deterministic Miller–Rabin, valid for all `n < 3_215_031_751` with the
/// witness set {2, 3, 5, 7}; characteristics are below `2^31`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    // operands are < 2^31 by the characteristic cap, but stay safe for the
    // primality test where n itself may approach 2^31
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Constructs the prime field `F_p`.
pub fn make_prime_field(p: u64) -> Result<FqField> {
    if p >= MAX_CHARACTERISTIC {
        return Err(Error::Contract(format!(
            "characteristic {p} exceeds the 2^31 bound"
        )));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(FqField(Arc::new(FieldRepr {
        p,
        k: 1,
        modulus: Vec::new(),
        order: p,
    })))
}

/// Constructs `F_{p^degree}` over a prime field by sampling random monic
/// polynomials until an irreducible modulus is found. Deterministic for a
/// fixed generator state; `degree == 1` returns the base field unchanged.
pub fn make_extension<R: Rng + ?Sized>(
    base: &FqField,
    degree: usize,
    rng: &mut R,
) -> Result<FqField> {
    if base.degree() != 1 {
        return Err(Error::Contract(
            "extension base must be a prime field".into(),
        ));
    }
    if degree == 0 {
        return Err(Error::Contract("extension degree must be >= 1".into()));
    }
    if degree == 1 {
        return Ok(base.clone());
    }
    let p = base.characteristic();
    let order = (0..degree).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&o| o < (1 << 63)));
    let order = order
        .ok_or_else(|| Error::Contract(format!("field order p^k = {p}^{degree} exceeds 2^63")))?;
    // an irreducible of every degree exists, roughly one in `degree` monic
    // polynomials is irreducible
    loop {
        let mut m: Vec<u64> = (0..degree).map(|_| rng.random_range(0..p)).collect();
        m.push(1);
        if up_is_irreducible(&m, p) {
            return Ok(FqField(Arc::new(FieldRepr {
                p,
                k: degree,
                modulus: m,
                order,
            })));
        }
    }
}

/// Extension with a caller-supplied modulus; used by the solver to adjoin a
/// root of an irreducible factor it has already computed.
pub(crate) fn extension_with_modulus(base: &FqField, modulus: Vec<u64>) -> Result<FqField> {
    if base.degree() != 1 {
        return Err(Error::Contract(
            "extension base must be a prime field".into(),
        ));
    }
    let p = base.characteristic();
    let k = modulus.len().saturating_sub(1);
    if k < 2 || modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p) {
        return Err(Error::Contract(
            "modulus must be monic of degree >= 2".into(),
        ));
    }
    if !up_is_irreducible(&modulus, p) {
        return Err(Error::Contract("modulus is reducible".into()));
    }
    let order = (0..k)
        .try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&o| o < (1 << 63)))
        .ok_or_else(|| Error::Contract(format!("field order {p}^{k} exceeds 2^63")))?;
    Ok(FqField(Arc::new(FieldRepr {
        p,
        k,
        modulus,
        order,
    })))
}

impl FqField {
    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Extension degree over the prime field; 1 for `F_p` itself.
    pub fn degree(&self) -> usize {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Ascending coefficients of the modulus, for extensions only.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.0.k > 1 {
            Some(&self.0.modulus)
        } else {
            None
        }
    }

    pub fn zero(&self) -> FqElement {
        self.from_coeffs(vec![])
    }

    pub fn one(&self) -> FqElement {
        self.from_coeffs(vec![1 % self.0.p])
    }

    /// The canonical residue of an integer under the inclusion `Z -> F_q`.
    pub fn from_u64(&self, n: u64) -> FqElement {
        self.from_coeffs(vec![n % self.0.p])
    }

    /// An integer of either sign, reduced into the prime subfield.
    pub fn from_i64(&self, n: i64) -> FqElement {
        let p = self.0.p as i64;
        let r = n.rem_euclid(p) as u64;
        self.from_u64(r)
    }

    /// The residue class of the generator `a`; errors on prime fields.
    pub fn generator(&self) -> Result<FqElement> {
        if self.0.k == 1 {
            return Err(Error::Contract(
                "prime field has no extension generator".into(),
            ));
        }
        Ok(self.from_coeffs(vec![0, 1]))
    }

    /// Builds an element from ascending coefficients over `F_p`, reducing
    /// each mod p. Lengths beyond `k` are a caller bug.
    pub fn from_coeffs(&self, mut coeffs: Vec<u64>) -> FqElement {
        assert!(
            coeffs.len() <= self.0.k,
            "coefficient vector longer than extension degree"
        );
        for c in &mut coeffs {
            *c %= self.0.p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        FqElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> FqElement {
        let p = self.0.p;
        let coeffs: Vec<u64> = (0..self.0.k).map(|_| rng.random_range(0..p)).collect();
        self.from_coeffs(coeffs)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FqElement {
        loop {
            let x = self.random_element(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// All field elements in representation order. Intended for small fields;
    /// the solver's exhaustive fallbacks and the test oracles iterate this.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        let q = self.0.order;
        (0..q).map(move |mut idx| {
            let mut coeffs = Vec::with_capacity(self.0.k);
            for _ in 0..self.0.k {
                coeffs.push(idx % self.0.p);
                idx /= self.0.p;
            }
            self.from_coeffs(coeffs)
        })
    }
}

impl fmt::Display for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.k)
        }
    }
}

impl FqElement {
    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    /// Ascending coefficients over `F_p`, unpadded.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// The residue for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        if self.field.degree() == 1 {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &FqElement) {
        assert!(
            self.field == other.field,
            "mixed fields in arithmetic: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &FqElement) -> FqElement {
        self.assert_same_field(other);
        let p = self.field.characteristic();
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + b) % p;
        }
        self.field.from_coeffs(out)
    }

    pub fn sub(&self, other: &FqElement) -> FqElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FqElement {
        let p = self.field.characteristic();
        let out = self.coeffs.iter().map(|&c| (p - c) % p).collect();
        self.field.from_coeffs(out)
    }

    pub fn mul(&self, other: &FqElement) -> FqElement {
        self.assert_same_field(other);
        let p = self.field.characteristic();
        if self.field.degree() == 1 {
            return self
                .field
                .from_coeffs(vec![self.coeffs[0] * other.coeffs[0] % p]);
        }
        let mut prod = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        up_rem_in_place(&mut prod, &self.field.0.modulus, p);
        self.field.from_coeffs(prod)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FqElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.characteristic();
        if self.field.degree() == 1 {
            return Ok(self
                .field
                .from_coeffs(vec![mod_pow(self.coeffs[0], p - 2, p)]));
        }
        // extended Euclid in F_p[x] against the irreducible modulus
        let inv = up_modular_inverse(&self.coeffs, &self.field.0.modulus, p)
            .expect("modulus is irreducible, nonzero elements are invertible");
        Ok(self.field.from_coeffs(inv))
    }

    pub fn div(&self, other: &FqElement) -> Result<FqElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut exp: u64) -> FqElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }
}

/// Carries an element into a target field: the identity when the fields are
/// equal, the natural inclusion when the source is the prime subfield of the
/// target. Anything else is a mismatch.
pub fn embed(a: &FqElement, target: &FqField) -> Result<FqElement> {
    if a.field() == target {
        return Ok(a.clone());
    }
    if a.field().degree() == 1 && a.field().characteristic() == target.characteristic() {
        return Ok(target.from_coeffs(vec![a.coeffs[0]]));
    }
    Err(Error::FieldMismatch(format!(
        "no embedding of {} into {}",
        a.field(),
        target
    )))
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "a")?,
                (1, _) => write!(f, "{c}*a")?,
                (_, 1) => write!(f, "a^{i}")?,
                (_, _) => write!(f, "{c}*a^{i}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Dense univariate arithmetic over F_p, ascending coefficients. Backs the
// modulus search and extension-element inversion.
// ---------------------------------------------------------------------------

fn up_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn up_deg(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo a monic divisor, in place.
fn up_rem_in_place(a: &mut Vec<u64>, m: &[u64], p: u64) {
    let md = up_deg(m).expect("monic modulus is nonzero");
    while let Some(ad) = up_deg(a) {
        if ad < md {
            break;
        }
        let lead = a[ad];
        let shift = ad - md;
        for i in 0..=md {
            let sub = lead * m[i] % p;
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
    }
    up_trim(a);
}

fn up_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    up_trim(&mut out);
    out
}

fn up_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut prod = up_mul(a, b, p);
    up_rem_in_place(&mut prod, m, p);
    prod
}

fn up_powmod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    up_rem_in_place(&mut b, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = up_mulmod(&acc, &b, m, p);
        }
        b = up_mulmod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

fn up_make_monic(v: &mut [u64], p: u64) {
    if let Some(d) = up_deg(v) {
        let inv = mod_pow(v[d], p - 2, p);
        for c in v.iter_mut() {
            *c = *c * inv % p;
        }
    }
}

fn up_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    up_trim(&mut a);
    up_trim(&mut b);
    while !b.is_empty() {
        let mut m = b.clone();
        up_make_monic(&mut m, p);
        up_rem_in_place(&mut a, &m, p);
        std::mem::swap(&mut a, &mut b);
    }
    up_make_monic(&mut a, p);
    a
}

/// Inverse of `a` modulo monic `m` via extended Euclid, or None when the gcd
/// is not constant.
fn up_modular_inverse(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    // invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    up_trim(&mut r0);
    up_trim(&mut r1);
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // divide r0 by r1
        let d1 = up_deg(&r1).unwrap();
        let lead_inv = mod_pow(r1[d1], p - 2, p);
        let mut q: Vec<u64> = vec![0; r0.len().saturating_sub(d1)];
        let mut rem = r0.clone();
        while let Some(d0) = up_deg(&rem) {
            if d0 < d1 {
                break;
            }
            let c = rem[d0] * lead_inv % p;
            q[d0 - d1] = c;
            for i in 0..=d1 {
                let sub = c * r1[i] % p;
                rem[i + d0 - d1] = (rem[i + d0 - d1] + p - sub) % p;
            }
        }
        up_trim(&mut rem);
        let qs1 = up_mul(&q, &s1, p);
        let mut s2 = s0.clone();
        s2.resize(s2.len().max(qs1.len()), 0);
        for (i, &c) in qs1.iter().enumerate() {
            s2[i] = (s2[i] + p - c) % p;
        }
        up_trim(&mut s2);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    let d = up_deg(&r0)?;
    if d != 0 {
        return None;
    }
    let scale = mod_pow(r0[0], p - 2, p);
    let mut out: Vec<u64> = s0.iter().map(|&c| c * scale % p).collect();
    up_trim(&mut out);
    Some(out)
}

/// Irreducibility of a monic polynomial over F_p: no factor of degree <= k/2,
/// detected by gcd(x^{p^i} - x, m) for 1 <= i <= k/2.
fn up_is_irreducible(m: &[u64], p: u64) -> bool {
    let k = match up_deg(m) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let mut t = x.clone();
    for _ in 1..=(k / 2) {
        t = up_powmod(&t, p, m, p);
        // gcd(t - x, m)
        let mut diff = t.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        up_trim(&mut diff);
        let g = up_gcd(&diff, m, p);
        if up_deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_construction() {
        let f = make_prime_field(101).unwrap();
        assert_eq!(f.order(), 101);
        assert!(matches!(make_prime_field(4), Err(Error::NotPrime(4))));
        let f2 = make_prime_field(2).unwrap();
        assert_eq!(f2.order(), 2);
    }

    #[test]
    fn extension_orders() {
        let f211 = make_prime_field(211).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ext = make_extension(&f211, 4, &mut rng).unwrap();
        assert_eq!(ext.order(), 1_982_119_441);

        let f5 = make_prime_field(5).unwrap();
        let same = make_extension(&f5, 1, &mut rng).unwrap();
        assert_eq!(same, f5);
    }

    #[test]
    fn unique_quadratic_over_f2() {
        // x^2 + x + 1 is the only monic irreducible quadratic over F_2:
        // enumerate all four monic quadratics and test by root search
        let mut irreducible = Vec::new();
        for c0 in 0..2u64 {
            for c1 in 0..2u64 {
                let m = [c0, c1, 1];
                let has_root = (0..2u64).any(|x| (c0 + c1 * x + x * x) % 2 == 0);
                if !has_root {
                    irreducible.push(m);
                }
            }
        }
        assert_eq!(irreducible, vec![[1, 1, 1]]);

        let f2 = make_prime_field(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let f4 = make_extension(&f2, 2, &mut rng).unwrap();
        assert_eq!(f4.order(), 4);
        assert_eq!(f4.modulus().unwrap(), &[1, 1, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = make_prime_field(5).unwrap();
        assert_eq!(f5.from_u64(2).inv().unwrap(), f5.from_u64(3));

        let f101 = make_prime_field(101).unwrap();
        assert!(f101.from_u64(50).add(&f101.from_u64(51)).is_zero());

        let f2 = make_prime_field(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let f4 = make_extension(&f2, 2, &mut rng).unwrap();
        let a = f4.generator().unwrap();
        // a*a = a + 1, forced by the modulus a^2 + a + 1
        assert_eq!(a.mul(&a), a.add(&f4.one()));
    }

    #[test]
    fn inv_zero_and_mismatch() {
        let f5 = make_prime_field(5).unwrap();
        assert!(matches!(f5.zero().inv(), Err(Error::DivisionByZero)));
        let f7 = make_prime_field(7).unwrap();
        assert!(embed(&f5.one(), &f7).is_err());
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f2 = make_prime_field(2).unwrap();
        let fields = [
            make_prime_field(5).unwrap(),
            make_prime_field(101).unwrap(),
            make_extension(&f2, 3, &mut rng).unwrap(),
            make_extension(&make_prime_field(7).unwrap(), 2, &mut rng).unwrap(),
        ];
        for field in &fields {
            for _ in 0..200 {
                let a = field.random_element(&mut rng);
                let b = field.random_element(&mut rng);
                let c = field.random_element(&mut rng);
                assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                assert_eq!(a.add(&a.neg()), field.zero());
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()), field.one());
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f3 = make_prime_field(3).unwrap();
        let f9 = make_extension(&f3, 2, &mut rng).unwrap();
        let f125 = make_extension(&make_prime_field(5).unwrap(), 3, &mut rng).unwrap();
        for field in [&f9, &f125] {
            let p = field.characteristic();
            for _ in 0..100 {
                let a = field.random_element(&mut rng);
                // a^(p^k) = a, computed by k-fold p-th powers
                let mut x = a.clone();
                for _ in 0..field.degree() {
                    x = x.pow(p);
                }
                assert_eq!(x, a);
            }
        }
    }

    #[test]
    fn extension_modulus_deterministic() {
        let f7 = make_prime_field(7).unwrap();
        let a = make_extension(&f7, 5, &mut ChaCha8Rng::seed_from_u64(99)).unwrap();
        let b = make_extension(&f7, 5, &mut ChaCha8Rng::seed_from_u64(99)).unwrap();
        assert_eq!(a.modulus(), b.modulus());
    }

    #[test]
    fn random_sampling_uniformity() {
        let f2 = make_prime_field(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut seen = [false; 2];
        for _ in 0..1000 {
            seen[f2.random_element(&mut rng).residue().unwrap() as usize] = true;
        }
        assert!(seen[0] && seen[1]);

        // identical seeds give identical draw sequences
        let f5 = make_prime_field(5).unwrap();
        let mut r1 = ChaCha8Rng::seed_from_u64(42);
        let mut r2 = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            assert_eq!(f5.random_element(&mut r1), f5.random_element(&mut r2));
        }

        // frequency within 5 sigma of the binomial expectation
        let f101 = make_prime_field(101).unwrap();
        let mut counts = vec![0u64; 101];
        for _ in 0..10100 {
            counts[f101.random_element(&mut rng).residue().unwrap() as usize] += 1;
        }
        let sigma = (10100.0_f64 * (1.0 / 101.0) * (100.0 / 101.0)).sqrt();
        for &c in &counts {
            assert!(
                (c as f64 - 100.0).abs() <= 5.0 * sigma,
                "count {c} out of range"
            );
        }
    }

    #[test]
    fn nonzero_sampling() {
        let f2 = make_prime_field(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            assert!(!f2.random_nonzero(&mut rng).is_zero());
        }
    }

    #[test]
    fn element_display() {
        let f101 = make_prime_field(101).unwrap();
        assert_eq!(f101.from_i64(-1).to_string(), "100");
        let f2 = make_prime_field(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let f4 = make_extension(&f2, 2, &mut rng).unwrap();
        let a = f4.generator().unwrap();
        assert_eq!(a.to_string(), "a");
        assert_eq!(a.add(&f4.one()).to_string(), "1+a");
        assert_eq!(f4.zero().to_string(), "0");
    }
}
