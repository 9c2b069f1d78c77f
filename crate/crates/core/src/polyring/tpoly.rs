use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::monomial::Monomial;
use crate::polyring::poly::{MultiPoly, PolyRing};

/// Univariate polynomial in the cover coordinate `t` whose coefficients are
/// polynomials in the base variables. `coeffs[k]` multiplies `t^k`; the last
/// stored coefficient is nonzero (the zero polynomial stores nothing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly {
    ring: PolyRing,
    coeffs: Vec<MultiPoly>,
}

impl TPoly {
    pub fn zero(ring: &PolyRing) -> Self {
        TPoly { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring.one())
    }

    pub fn constant(c: MultiPoly) -> Self {
        let ring = c.ring().clone();
        Self::from_coeffs(&ring, vec![c])
    }

    /// The monomial `t`.
    pub fn t(ring: &PolyRing) -> Self {
        Self::from_coeffs(ring, vec![ring.zero(), ring.one()])
    }

    /// `t^d - b`.
    pub fn cyclic(d: usize, b: &MultiPoly) -> Self {
        let ring = b.ring().clone();
        let mut coeffs = vec![ring.zero(); d + 1];
        coeffs[d] = ring.one();
        coeffs[0] = -b;
        Self::from_coeffs(&ring, coeffs)
    }

    pub fn from_coeffs(ring: &PolyRing, mut coeffs: Vec<MultiPoly>) -> Self {
        while coeffs.last().is_some_and(MultiPoly::is_zero) {
            coeffs.pop();
        }
        TPoly { ring: ring.clone(), coeffs }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn try_add(&self, other: &TPoly) -> Result<TPoly> {
        self.ring.check_compatible(&other.ring)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Ok(Self::from_coeffs(&self.ring, coeffs))
    }

    pub fn try_sub(&self, other: &TPoly) -> Result<TPoly> {
        self.try_add(&other.neg())
    }

    /// Exact convolution in `t`.
    pub fn try_mul(&self, other: &TPoly) -> Result<TPoly> {
        self.ring.check_compatible(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(Self::from_coeffs(&self.ring, coeffs))
    }

    pub fn neg(&self) -> TPoly {
        TPoly { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &MultiPoly) -> Result<TPoly> {
        self.ring.check_compatible(c.ring())?;
        Ok(Self::from_coeffs(&self.ring, self.coeffs.iter().map(|a| a * c).collect()))
    }

    pub fn pow(&self, e: u32) -> TPoly {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Substitutes a polynomial for `t` (Horner).
    pub fn eval(&self, at: &MultiPoly) -> Result<MultiPoly> {
        self.ring.check_compatible(at.ring())?;
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        Ok(acc)
    }

    /// Writes the polynomial in `ring_with_t`, whose last variable plays `t`.
    pub fn to_extended(&self, ring_with_t: &PolyRing) -> Result<MultiPoly> {
        if ring_with_t.nvars() != self.ring.nvars() + 1 {
            return Err(Error::VariableCountMismatch {
                left: self.ring.nvars() + 1,
                right: ring_with_t.nvars(),
            });
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            for (m, v) in c.terms() {
                terms.push((m.extended(k as u32), v.clone()));
            }
        }
        Ok(ring_with_t.from_terms(terms))
    }

    /// Inverse of [`TPoly::to_extended`].
    pub fn from_extended(p: &MultiPoly, base: &PolyRing) -> Result<TPoly> {
        if p.nvars() != base.nvars() + 1 {
            return Err(Error::VariableCountMismatch { left: base.nvars() + 1, right: p.nvars() });
        }
        let n = base.nvars();
        let mut buckets: Vec<Vec<(Monomial, _)>> = Vec::new();
        for (m, c) in p.terms() {
            let k = m.exponents()[n] as usize;
            if buckets.len() <= k {
                buckets.resize_with(k + 1, Vec::new);
            }
            buckets[k].push((Monomial::new(m.exponents()[..n].to_vec()), c.clone()));
        }
        let coeffs = buckets.into_iter().map(|b| base.from_terms(b)).collect();
        Ok(Self::from_coeffs(base, coeffs))
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let tpow = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            match (k, c.is_one()) {
                (0, _) => write!(f, "({c})")?,
                (_, true) => write!(f, "{tpow}")?,
                _ => write!(f, "({c})*{tpow}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Domain;

    #[test]
    fn conjugate_product() {
        let r = PolyRing::new(Domain::Rationals, &["p0"]).unwrap();
        let p0 = r.var(0);
        let t = TPoly::t(&r);
        let a = t.try_sub(&TPoly::constant(p0.clone())).unwrap();
        let b = t.try_add(&TPoly::constant(p0.clone())).unwrap();
        assert_eq!(a.try_mul(&b).unwrap(), TPoly::cyclic(2, &(&p0 * &p0)));
    }

    #[test]
    fn t_squared() {
        let r = PolyRing::with_default_names(Domain::Integers, 2);
        let t = TPoly::t(&r);
        let sq = t.try_mul(&t).unwrap();
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(sq.coeff(2), r.one());
        assert!(sq.coeff(0).is_zero() && sq.coeff(1).is_zero());
    }

    #[test]
    fn product_over_f7() {
        let r = PolyRing::new(Domain::PrimeField(7), &["x"]).unwrap();
        let x = r.var(0);
        let t = TPoly::t(&r);
        let a = t.try_sub(&TPoly::constant(x.clone())).unwrap();
        let b = t.try_sub(&TPoly::constant(x.scale(&r.domain().from_i64(2)))).unwrap();
        let prod = a.try_mul(&b).unwrap();
        assert_eq!(prod.coeff(2), r.one());
        assert_eq!(prod.coeff(1), r.parse("4*x").unwrap()); // -3x
        assert_eq!(prod.coeff(0), r.parse("2*x^2").unwrap());
    }

    #[test]
    fn extended_round_trip() {
        let r = PolyRing::new(Domain::Rationals, &["x", "y"]).unwrap();
        let rt = r.extended("t").unwrap();
        let p = TPoly::cyclic(3, &r.parse("x^3 + y^3").unwrap());
        let e = p.to_extended(&rt).unwrap();
        assert_eq!(e, rt.parse("t^3 - x^3 - y^3").unwrap());
        assert_eq!(TPoly::from_extended(&e, &r).unwrap(), p);
    }

    #[test]
    fn mismatch_rejected() {
        let a = TPoly::t(&PolyRing::with_default_names(Domain::Rationals, 1));
        let b = TPoly::t(&PolyRing::with_default_names(Domain::PrimeField(5), 1));
        assert!(a.try_mul(&b).is_err());
    }
}
