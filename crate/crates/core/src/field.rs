//! Exact arithmetic in GF(p^n), its Frobenius automorphisms, and
//! sigma-derivations.
//!
//! A field is presented as `F_p[x]/(pi(x))` with `pi` monic irreducible of
//! degree `n`; elements are little-endian digit vectors of length `n`.
//! The canonical integer encoding of an element is `sum digit_i * p^i`,
//! which is also the order used whenever elements are enumerated.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::Error;
use crate::Result;

/// Presentation of GF(p^n): characteristic, extension degree, and the monic
/// irreducible modulus (ascending digits, length n+1).
#[derive(Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    n: usize,
    modulus: Vec<u64>,
}

/// Cheap-to-clone handle to a [`FieldSpec`].
#[derive(Debug, Clone)]
pub struct Field {
    inner: Arc<FieldSpec>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() == 1 {
            write!(f, "GF({})", self.p())
        } else {
            write!(f, "GF({}^{})", self.p(), self.n())
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power q into (p, n); `None` if q is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut n = 0;
            while m % p == 0 {
                m /= p;
                n += 1;
            }
            return if m == 1 { Some((p, n)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

// ---- dense polynomial arithmetic over F_p (digit vectors, ascending) ----

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo monic `b` over F_p.
fn poly_rem_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*b.last().unwrap(), 1);
    let mut r: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + p * p - (lead * bi) % p) % p;
            }
        }
        r.pop();
    }
    trim(r)
}

fn is_irreducible_fp(modulus: &[u64], p: u64) -> std::result::Result<(), Vec<u64>> {
    let n = modulus.len() - 1;
    // Trial right away: divisibility by every monic factor of degree <= n/2.
    for deg in 1..=(n / 2) {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(deg + 1);
            let mut v = idx;
            for _ in 0..deg {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            if poly_rem_fp(modulus, &cand, p).is_empty() {
                return Err(cand);
            }
        }
    }
    Ok(())
}

fn poly_string_fp(digits: &[u64]) -> String {
    if digits.iter().all(|&c| c == 0) {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (i, &c) in digits.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match i {
            0 => format!("{c}"),
            1 if c == 1 => "x".to_string(),
            1 => format!("{c}x"),
            _ if c == 1 => format!("x^{i}"),
            _ => format!("{c}x^{i}"),
        };
        terms.push(t);
    }
    terms.join("+")
}

impl Field {
    /// Builds GF(p^n) with an explicit modulus (ascending digits, monic of
    /// degree n, irreducible over F_p).
    pub fn new(p: u64, n: usize, modulus: Vec<u64>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if modulus.len() != n + 1 || modulus[n] != 1 {
            return Err(Error::BadModulus { expected: n });
        }
        if let Some(&d) = modulus.iter().find(|&&d| d >= p) {
            return Err(Error::DigitOutOfRange { digit: d, p });
        }
        if let Err(factor) = is_irreducible_fp(&modulus, p) {
            return Err(Error::ReducibleModulus {
                factor: poly_string_fp(&factor),
            });
        }
        Ok(Field {
            inner: Arc::new(FieldSpec { p, n, modulus }),
        })
    }

    /// Builds GF(p^n) with the canonical modulus: the irreducible monic
    /// polynomial whose non-leading digit vector has the least integer
    /// encoding. This is deterministic and needs no external tables.
    pub fn gf_pn(p: u64, n: usize) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let count = p.checked_pow(n as u32).ok_or(Error::NotPrimePower(0))?;
        for idx in 0..count {
            let mut cand = Vec::with_capacity(n + 1);
            let mut v = idx;
            for _ in 0..n {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            if is_irreducible_fp(&cand, p).is_ok() {
                return Field::new(p, n, cand);
            }
        }
        unreachable!("an irreducible polynomial of degree n exists over every F_p")
    }

    /// Builds GF(q) for a prime power q with the canonical modulus.
    pub fn gf(q: u64) -> Result<Field> {
        let (p, n) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::gf_pn(p, n)
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    /// Field order q = p^n.
    pub fn order(&self) -> u64 {
        self.inner.p.pow(self.inner.n as u32)
    }

    /// Modulus digits, ascending, length n+1.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// Modulus rendered as a polynomial in x, e.g. `x^2+x+1`.
    pub fn modulus_string(&self) -> String {
        poly_string_fp(&self.inner.modulus)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            digits: vec![0; self.inner.n],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_encoding(1).expect("1 < q")
    }

    /// Element from explicit digits (little-endian, each < p); shorter vectors
    /// are zero-padded.
    pub fn element(&self, digits: &[u64]) -> Result<FieldElement> {
        if digits.len() > self.inner.n {
            return Err(Error::BadModulus {
                expected: self.inner.n,
            });
        }
        let mut d = digits.to_vec();
        if let Some(&bad) = d.iter().find(|&&x| x >= self.inner.p) {
            return Err(Error::DigitOutOfRange {
                digit: bad,
                p: self.inner.p,
            });
        }
        d.resize(self.inner.n, 0);
        Ok(FieldElement {
            field: self.clone(),
            digits: d,
        })
    }

    /// Element from its integer encoding `sum digit_i * p^i`.
    pub fn from_encoding(&self, value: u64) -> Result<FieldElement> {
        if value >= self.order() {
            return Err(Error::EncodingOutOfRange {
                value,
                order: self.order(),
            });
        }
        let mut digits = Vec::with_capacity(self.inner.n);
        let mut v = value;
        for _ in 0..self.inner.n {
            digits.push(v % self.inner.p);
            v /= self.inner.p;
        }
        Ok(FieldElement {
            field: self.clone(),
            digits,
        })
    }

    /// All q elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |v| self.from_encoding(v).unwrap())
    }

    /// The generator of K* with the least encoding.
    pub fn primitive_element(&self) -> FieldElement {
        let q = self.order();
        'outer: for v in 1..q {
            let a = self.from_encoding(v).unwrap();
            let mut acc = a.clone();
            for ord in 1..q {
                if acc.is_one() {
                    if ord == q - 1 {
                        return a;
                    }
                    continue 'outer;
                }
                acc = &acc * &a;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    /// Frobenius power sigma(a) = a^(p^k); requires k in [0, n).
    pub fn frobenius(&self, k: usize) -> Result<Automorphism> {
        if k >= self.inner.n {
            return Err(Error::FrobeniusOutOfRange {
                exp: k,
                n: self.inner.n,
            });
        }
        Ok(Automorphism { frob_exp: k })
    }
}

/// An element of GF(p^n): length-n digit vector plus its field handle.
///
/// Arithmetic panics if the operands disagree on the field presentation;
/// elements of different fields never mix.
#[derive(Debug, Clone)]
pub struct FieldElement {
    field: Field,
    digits: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.digits == other.digits
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn is_one(&self) -> bool {
        self.digits[0] == 1 && self.digits[1..].iter().all(|&d| d == 0)
    }

    /// Integer encoding `sum digit_i * p^i`.
    pub fn encoding(&self) -> u64 {
        let p = self.field.p();
        self.digits.iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "field spec mismatch: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let p = self.field.p();
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement {
            field: self.field.clone(),
            digits,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let p = self.field.p();
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement {
            field: self.field.clone(),
            digits,
        }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p();
        let digits = self.digits.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            field: self.field.clone(),
            digits,
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let p = self.field.p();
        let prod = poly_mul_fp(&self.digits, &other.digits, p);
        let mut digits = poly_rem_fp(&prod, self.field.modulus(), p);
        digits.resize(self.field.n(), 0);
        FieldElement {
            field: self.field.clone(),
            digits,
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        // a^(q-2) = a^(-1) in GF(q).
        Ok(self.pow(self.field.order() - 2))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encoding())
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// A field automorphism sigma(a) = a^(p^k); every automorphism of GF(p^n)
/// is such a Frobenius power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Automorphism {
    frob_exp: usize,
}

impl Automorphism {
    pub fn identity() -> Automorphism {
        Automorphism { frob_exp: 0 }
    }

    pub fn frob_exp(&self) -> usize {
        self.frob_exp
    }

    pub fn is_identity(&self) -> bool {
        self.frob_exp == 0
    }

    /// Order of sigma in Aut(GF(p^n)): n / gcd(n, k).
    pub fn order(&self, n: usize) -> usize {
        n / gcd(n, self.frob_exp)
    }

    /// sigma^i, with the exponent reduced mod n.
    pub fn power(&self, i: usize, n: usize) -> Automorphism {
        Automorphism {
            frob_exp: (self.frob_exp * i) % n,
        }
    }

    /// sigma^(-1).
    pub fn inverse(&self, n: usize) -> Automorphism {
        Automorphism {
            frob_exp: (n - self.frob_exp) % n,
        }
    }

    /// Applies sigma: a -> a^(p^k).
    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        if self.frob_exp == 0 {
            return a.clone();
        }
        let e = a.field().p().pow(self.frob_exp as u32);
        a.pow(e)
    }

    /// sigma^i applied to a (exponent reduced mod n internally).
    pub fn apply_power(&self, i: usize, a: &FieldElement) -> FieldElement {
        self.power(i, a.field().n()).apply(a)
    }

    pub fn fixes(&self, a: &FieldElement) -> bool {
        self.apply(a) == *a
    }

    /// Fix(sigma) = all a with sigma(a) = a, in encoding order; this is the
    /// subfield of size p^gcd(n, k).
    pub fn fixed_field(&self, field: &Field) -> Vec<FieldElement> {
        field.elements().filter(|a| self.fixes(a)).collect()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A left sigma-derivation of K.
///
/// Over a finite field these exhaust all possibilities: for sigma = id the
/// only sigma-derivation is zero, and for sigma != id every sigma-derivation
/// is inner, delta_beta(a) = beta(sigma(a) - a). The unit tests verify this
/// classification exhaustively for q <= 9.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Zero,
    Inner(FieldElement),
}

impl Derivation {
    /// Applies delta for the given sigma: 0, or beta(sigma(a) - a).
    pub fn apply(&self, sigma: Automorphism, a: &FieldElement) -> FieldElement {
        match self {
            Derivation::Zero => a.field().zero(),
            Derivation::Inner(beta) => beta.mul(&sigma.apply(a).sub(a)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Derivation::Zero)
            || matches!(self, Derivation::Inner(beta) if beta.is_zero())
    }
}
