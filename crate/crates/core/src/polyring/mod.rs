//! Exact multivariate polynomials over Q, Z and prime fields.

mod domain;
mod monomial;
mod parse;
mod poly;
mod tpoly;

pub use domain::{is_prime, smallest_prime_with_roots_of_unity, Domain, Scalar, MAX_MODULUS};
pub use monomial::{monomial_basis, Monomial};
pub use poly::{MultiPoly, PolyRing};
pub use tpoly::TPoly;

/// Commutative ring elements that can populate a matrix.
pub trait RingElement: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// `sum a_i * b_i`, starting from `self` as the zero of the ring.
    fn sum_of_products<'a, I>(&self, pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a Self, &'a Self)>,
        Self: 'a,
    {
        pairs.into_iter().fold(self.zero_like(), |acc, (a, b)| acc.add(&a.mul(b)))
    }
}

impl RingElement for MultiPoly {
    fn zero_like(&self) -> Self {
        self.ring().zero()
    }
    fn one_like(&self) -> Self {
        self.ring().one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sum_of_products<'a, I>(&self, pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a Self, &'a Self)>,
    {
        MultiPoly::sum_of_products(self.ring(), pairs)
    }
}

impl RingElement for TPoly {
    fn zero_like(&self) -> Self {
        TPoly::zero(self.ring())
    }
    fn one_like(&self) -> Self {
        TPoly::one(self.ring())
    }
    fn is_zero(&self) -> bool {
        TPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("incompatible polynomial rings")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("incompatible polynomial rings")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("incompatible polynomial rings")
    }
    fn neg(&self) -> Self {
        TPoly::neg(self)
    }
}
