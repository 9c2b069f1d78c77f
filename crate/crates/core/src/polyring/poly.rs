use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::domain::{Domain, Scalar};
use crate::polyring::monomial::Monomial;

/// A polynomial ring context: coefficient domain plus fixed variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    domain: Domain,
    vars: Arc<[String]>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(domain: Domain, vars: &[S]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_alphanumeric());
            if !ok {
                return Err(Error::InvalidArgument(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate variable name `{v}`")));
            }
        }
        Ok(PolyRing { domain, vars: vars.into() })
    }

    /// Ring with variables named `x0 .. x{n-1}`.
    pub fn with_default_names(domain: Domain, nvars: usize) -> Self {
        let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
        PolyRing { domain, vars: names.into() }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables over another coefficient domain.
    pub fn with_domain(&self, domain: Domain) -> Self {
        PolyRing { domain, vars: self.vars.clone() }
    }

    /// Appends one variable (used to adjoin the cover coordinate `t`).
    pub fn extended(&self, name: &str) -> Result<Self> {
        let mut names: Vec<String> = self.vars.to_vec();
        names.push(name.to_string());
        PolyRing::new(self.domain, &names)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(self.domain.one())
    }

    pub fn constant(&self, c: Scalar) -> MultiPoly {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn from_i64(&self, c: i64) -> MultiPoly {
        self.constant(self.domain.from_i64(c))
    }

    pub fn var(&self, index: usize) -> MultiPoly {
        self.term(Monomial::variable(self.nvars(), index), self.domain.one())
    }

    pub fn term(&self, m: Monomial, c: Scalar) -> MultiPoly {
        assert_eq!(m.nvars(), self.nvars(), "monomial arity differs from ring");
        let mut terms = BTreeMap::new();
        if !self.domain.is_zero(&c) {
            terms.insert(m, c);
        }
        MultiPoly { ring: self.clone(), terms }
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(&self, terms: I) -> MultiPoly {
        let mut acc = BTreeMap::new();
        for (m, c) in terms {
            add_term(&self.domain, &mut acc, m, c);
        }
        acc.retain(|_, c| !self.domain.is_zero(c));
        MultiPoly { ring: self.clone(), terms: acc }
    }

    /// Sums duplicate monomials and drops zeros.
    fn collect_terms(&self, mut terms: Vec<(Monomial, Scalar)>) -> MultiPoly {
        let dom = self.domain;
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((last, acc)) if *last == m => *acc = dom.add(acc, &c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !dom.is_zero(c));
        MultiPoly { ring: self.clone(), terms: merged.into_iter().collect() }
    }

    pub(crate) fn check_compatible(&self, other: &PolyRing) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch { left: self.domain, right: other.domain });
        }
        if self.nvars() != other.nvars() {
            return Err(Error::VariableCountMismatch { left: self.nvars(), right: other.nvars() });
        }
        Ok(())
    }
}

fn push_products(dom: &Domain, out: &mut Vec<(Monomial, Scalar)>, a: &MultiPoly, b: &MultiPoly) {
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            out.push((ma.mul(mb), dom.mul(ca, cb)));
        }
    }
}

fn add_term(domain: &Domain, acc: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    match acc.get_mut(&m) {
        Some(existing) => *existing = domain.add(existing, &c),
        None => {
            acc.insert(m, c);
        }
    }
}

/// Sparse multivariate polynomial. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn domain(&self) -> Domain {
        self.ring.domain
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.degree() == 0 && self.ring.domain.is_one(c))
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.domain.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has total degree `deg` (the zero polynomial is
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self, deg: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == deg)
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.is_homogeneous(d).then_some(d)
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.ring.check_compatible(&other.ring)?;
        let dom = self.ring.domain;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&dom, &mut terms, m.clone(), c.clone());
        }
        terms.retain(|_, c| !dom.is_zero(c));
        Ok(MultiPoly { ring: self.ring.clone(), terms })
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.ring.check_compatible(&other.ring)?;
        let dom = self.ring.domain;
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        push_products(&dom, &mut products, self, other);
        Ok(self.ring.collect_terms(products))
    }

    /// `sum a_i * b_i` with a single merge of all term products.
    pub(crate) fn sum_of_products<'a, I>(ring: &PolyRing, pairs: I) -> MultiPoly
    where
        I: IntoIterator<Item = (&'a MultiPoly, &'a MultiPoly)>,
    {
        let dom = ring.domain;
        let mut products = Vec::new();
        for (a, b) in pairs {
            ring.check_compatible(&a.ring).expect("incompatible polynomial rings");
            ring.check_compatible(&b.ring).expect("incompatible polynomial rings");
            push_products(&dom, &mut products, a, b);
        }
        ring.collect_terms(products)
    }

    fn neg_ref(&self) -> MultiPoly {
        let dom = self.ring.domain;
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), dom.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        let dom = self.ring.domain;
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), dom.mul(v, c)))
            .filter(|(_, v)| !dom.is_zero(v))
            .collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Reinterprets the coefficients in another domain (e.g. reduce Z → F_p).
    pub fn change_domain(&self, domain: Domain) -> Result<MultiPoly> {
        let ring = self.ring.with_domain(domain);
        let from = self.ring.domain;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let v = match (from, c) {
                (Domain::PrimeField(p), Scalar::Modular(_)) if domain == Domain::PrimeField(p) => c.clone(),
                (Domain::PrimeField(_), Scalar::Modular(v)) => domain.from_i64(*v as i64),
                (_, Scalar::Rational(r)) => domain.from_rational(r)?,
                _ => unreachable!("scalar representation matches its domain"),
            };
            terms.push((m.clone(), v));
        }
        Ok(ring.from_terms(terms))
    }

    /// Moves the polynomial into a ring with the same domain and variable
    /// count but different names (or an extended ring, padding exponents).
    pub fn embed(&self, target: &PolyRing) -> Result<MultiPoly> {
        if target.domain() != self.domain() {
            return Err(Error::DomainMismatch { left: self.domain(), right: target.domain() });
        }
        if target.nvars() < self.nvars() {
            return Err(Error::VariableCountMismatch { left: self.nvars(), right: target.nvars() });
        }
        let extra = target.nvars() - self.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e.extend(std::iter::repeat_n(0, extra));
            (Monomial::new(e), c.clone())
        });
        Ok(target.from_terms(terms))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let dom = self.ring.domain;
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = dom.is_negative(c);
            let abs = if negative { dom.neg(c) } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        self.ring.vars[v].clone()
                    } else {
                        format!("{}^{}", self.ring.vars[v], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", dom.format_scalar(&abs))?;
            } else if dom.is_one(&abs) {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", dom.format_scalar(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    /// Panics on incompatible rings; use [`MultiPoly::try_add`] to handle that.
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("incompatible polynomial rings")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("incompatible polynomial rings")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("incompatible polynomial rings")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(domain: Domain) -> PolyRing {
        PolyRing::new(domain, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(Domain::Rationals);
        let (x, y) = (r.var(0), r.var(1));
        let prod = &(&x + &y) * &(&x - &y);
        assert_eq!(prod, &(&x * &x) - &(&y * &y));
        assert_eq!(prod.to_string(), "x^2 - y^2");
    }

    #[test]
    fn additive_identity() {
        let r = ring(Domain::Integers);
        let p = &r.var(0) + &r.from_i64(3);
        assert_eq!(&p + &r.zero(), p);
    }

    #[test]
    fn product_mod_seven() {
        let r = ring(Domain::PrimeField(7));
        let x = r.var(0);
        let a = x.scale(&r.domain().from_i64(2));
        let b = x.scale(&r.domain().from_i64(4));
        assert_eq!(&a * &b, &x * &x);
    }

    #[test]
    fn mismatched_domains_are_rejected() {
        let a = ring(Domain::Rationals).var(0);
        let b = ring(Domain::PrimeField(7)).var(0);
        assert!(matches!(a.try_add(&b), Err(Error::DomainMismatch { .. })));
        let c = ring(Domain::PrimeField(5)).var(0);
        assert!(matches!(b.try_mul(&c), Err(Error::DomainMismatch { .. })));
        let d = PolyRing::with_default_names(Domain::Rationals, 2).var(0);
        assert!(matches!(a.try_mul(&d), Err(Error::VariableCountMismatch { .. })));
    }

    #[test]
    fn homogeneity() {
        let r = ring(Domain::Rationals);
        let p = &(&r.var(0) * &r.var(1)) + &(&r.var(2) * &r.var(2));
        assert!(p.is_homogeneous(2));
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert!(r.zero().is_homogeneous(5));
        assert!(!(&p + &r.var(0)).is_homogeneous(2));
    }

    #[test]
    fn change_domain_reduces() {
        let r = ring(Domain::Integers);
        let p = &r.var(0).scale(&r.domain().from_i64(9)) - &r.from_i64(2);
        let q = p.change_domain(Domain::PrimeField(7)).unwrap();
        assert_eq!(q.to_string(), "2*x + 5");
    }

    #[test]
    fn rejects_bad_names() {
        assert!(PolyRing::new(Domain::Rationals, &["1x"]).is_err());
        assert!(PolyRing::new(Domain::Rationals, &["x", "x"]).is_err());
    }
}
