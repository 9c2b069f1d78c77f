use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest accepted prime-field modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 62;

/// The coefficient ring of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "modulus", rename_all = "snake_case")]
pub enum Domain {
    Rationals,
    Integers,
    PrimeField(u64),
}

/// A coefficient. Rationals and integers share the arbitrary-precision
/// representation (integers always have denominator one); prime-field
/// elements are reduced representatives in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular(u64),
}

impl Domain {
    /// Builds `F_p`, rejecting composite or oversized moduli.
    pub fn prime_field(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidModulus(p));
        }
        if !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Domain::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::Integers)
    }

    /// 0 for Q and Z, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            Domain::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Domain::PrimeField(_) => Scalar::Modular(0),
            _ => Scalar::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Domain::PrimeField(_) => Scalar::Modular(1),
            _ => Scalar::Rational(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Domain::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Modular(r.to_u64().expect("reduced residue fits in u64"))
            }
            _ => Scalar::Rational(BigRational::from_integer(v.clone())),
        }
    }

    /// Maps a rational number into the domain. Fails when the value has a
    /// non-unit denominator in Z, or a denominator divisible by p in F_p.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match self {
            Domain::Rationals => Ok(Scalar::Rational(v.clone())),
            Domain::Integers => {
                if v.is_integer() {
                    Ok(Scalar::Rational(v.clone()))
                } else {
                    Err(Error::CoefficientNotInDomain(v.to_string()))
                }
            }
            Domain::PrimeField(p) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                if den == Scalar::Modular(0) {
                    return Err(Error::CoefficientNotInDomain(format!("{v} mod {p}")));
                }
                Ok(self.mul(&num, &self.inv(&den)?))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Modular(x), Scalar::Modular(y)) => {
                let p = self.modulus();
                let s = x + y;
                Scalar::Modular(if s >= p { s - p } else { s })
            }
            _ => panic!("mixed scalar representations"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Modular(0) => Scalar::Modular(0),
            Scalar::Modular(x) => Scalar::Modular(self.modulus() - x),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Modular(x), Scalar::Modular(y)) => Scalar::Modular(mul_mod(*x, *y, self.modulus())),
            _ => panic!("mixed scalar representations"),
        }
    }

    /// Multiplicative inverse; fails on zero and on non-units of Z.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (self, a) {
            (Domain::Integers, Scalar::Rational(x)) => {
                if x.abs().is_one() {
                    Ok(a.clone())
                } else {
                    Err(Error::NotInvertible(x.to_string()))
                }
            }
            (_, Scalar::Rational(x)) => Ok(Scalar::Rational(x.recip())),
            (_, Scalar::Modular(x)) => {
                let p = self.modulus();
                Ok(Scalar::Modular(pow_mod(*x, p - 2, p)))
            }
        }
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Whether `a` is a legitimate element of this domain.
    pub fn contains(&self, a: &Scalar) -> bool {
        match (self, a) {
            (Domain::Rationals, Scalar::Rational(_)) => true,
            (Domain::Integers, Scalar::Rational(r)) => r.is_integer(),
            (Domain::PrimeField(p), Scalar::Modular(v)) => v < p,
            _ => false,
        }
    }

    /// Sign used when formatting: prime-field elements are never negative.
    pub(crate) fn is_negative(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular(_) => false,
        }
    }

    /// Reduces an integer-valued scalar to a big integer (Q/Z only).
    pub fn to_bigint(&self, a: &Scalar) -> Option<BigInt> {
        match a {
            Scalar::Rational(r) if r.is_integer() => Some(r.to_integer()),
            Scalar::Modular(v) => Some(BigInt::from(*v)),
            _ => None,
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            Domain::PrimeField(p) => *p,
            _ => unreachable!("modular arithmetic outside a prime field"),
        }
    }

    /// Searches `F_p^*` for an element of exact multiplicative order `d`.
    pub fn primitive_root_of_unity(&self, d: u64) -> Option<Scalar> {
        match self {
            Domain::Rationals | Domain::Integers => match d {
                1 => Some(self.one()),
                2 => Some(self.from_i64(-1)),
                _ => None,
            },
            Domain::PrimeField(p) => {
                if d == 0 || (p - 1) % d != 0 {
                    return None;
                }
                (1..*p).map(Scalar::Modular).find(|z| self.multiplicative_order(z) == Some(d))
            }
        }
    }

    /// Order of `a` in the unit group, if finite and at most 2^16 checked steps
    /// are needed over Q/Z (only ±1 qualify there).
    pub fn multiplicative_order(&self, a: &Scalar) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        match self {
            Domain::PrimeField(p) => {
                let n = p - 1;
                let mut order = n;
                for q in prime_factors(n) {
                    while order % q == 0 && self.is_one(&self.pow(a, order / q)) {
                        order /= q;
                    }
                }
                Some(order)
            }
            _ => {
                if self.is_one(a) {
                    Some(1)
                } else if self.is_one(&self.neg(a)) {
                    Some(2)
                } else {
                    None
                }
            }
        }
    }

    pub(crate) fn format_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rational(r) => r.to_string(),
            Scalar::Modular(v) => v.to_string(),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rationals => write!(f, "QQ"),
            Domain::Integers => write!(f, "ZZ"),
            Domain::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
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

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p` with `d | p - 1`.
pub fn smallest_prime_with_roots_of_unity(d: u64) -> u64 {
    let d = d.max(1);
    let mut p = d + 1;
    loop {
        if is_prime(p) && (p - 1).is_multiple_of(d) {
            return p;
        }
        p += 1;
    }
}
