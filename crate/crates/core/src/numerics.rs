//! Closed-form cohomology calculators on projective space and on the
//! cyclic covers built from it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::GradedIdealPiece;
use crate::polyring::{MultiPoly, PolyRing};

/// Generalized binomial coefficient `C(n, k) = n (n-1) .. (n-k+1) / k!`.
pub fn binomial(n: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n) - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// `h^j(P^n, O(i))`.
///
/// The top row uses `C(-i-1, n)`, which is the value forced by Serre duality
/// `h^n(O(i)) = h^0(O(-i-n-1))`.
pub fn bott(n: u32, i: i64, j: u32) -> BigInt {
    let n64 = i64::from(n);
    if j == 0 && i >= 0 {
        binomial(n64 + i, n.into())
    } else if j == n && i < -n64 {
        binomial(-i - 1, n.into())
    } else {
        BigInt::zero()
    }
}

/// First `(n, i, j)` with `f(n, i, j) != f(n, -i-n-1, n-j)`, if any.
pub fn check_serre_duality<F>(f: F, max_n: u32, max_abs_i: i64) -> Option<(u32, i64, u32)>
where
    F: Fn(u32, i64, u32) -> BigInt,
{
    for n in 1..=max_n {
        for i in -max_abs_i..=max_abs_i {
            for j in 0..=n {
                if f(n, i, j) != f(n, -i - i64::from(n) - 1, n - j) {
                    return Some((n, i, j));
                }
            }
        }
    }
    None
}

/// First `(n, i)` where the alternating sum of `f(n, i, .)` differs from
/// the polynomial `C(i+n, n)`, if any.
pub fn check_euler_characteristic<F>(f: F, max_n: u32, max_abs_i: i64) -> Option<(u32, i64)>
where
    F: Fn(u32, i64, u32) -> BigInt,
{
    for n in 1..=max_n {
        let chi = HilbertPoly::binomial(n, 0);
        for i in -max_abs_i..=max_abs_i {
            let alt: BigInt = (0..=n).map(|j| if j % 2 == 0 { f(n, i, j) } else { -f(n, i, j) }).sum();
            if BigRational::from_integer(alt) != chi.eval(i) {
                return Some((n, i));
            }
        }
    }
    None
}

/// A cyclic cover `X -> P^n` of degree `d` with `f_* O_X = sum O(-i m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSpec {
    pub n: u32,
    pub m: u32,
    pub d: u32,
}

impl CoverSpec {
    pub fn new(n: u32, m: u32, d: u32) -> Result<Self> {
        if n == 0 || m == 0 || d == 0 {
            return Err(Error::InvalidArgument(format!("cover needs n, m, d >= 1, got ({n}, {m}, {d})")));
        }
        Ok(CoverSpec { n, m, d })
    }

    /// Twists of the line bundles in `f_* O_X`.
    pub fn pushforward_splitting(&self) -> Vec<i64> {
        (0..self.d).map(|i| -i64::from(i) * i64::from(self.m)).collect()
    }

    /// `k` with `omega_X = O_X(k)`.
    pub fn canonical_twist(&self) -> i64 {
        i64::from(self.m) * (i64::from(self.d) - 1) - i64::from(self.n) - 1
    }

    /// Hilbert polynomial of a rank `r` Ulrich sheaf: `r d C(t+n, n)`.
    pub fn ulrich_hilbert(&self, r: u32) -> HilbertPoly {
        HilbertPoly::binomial(self.n, 0).scale(&BigRational::from_integer(BigInt::from(r) * self.d))
    }

    /// Degree of the ramification-related class `r m d (d-1) / 2`.
    pub fn ulrich_degree(&self, r: u32) -> u64 {
        let d = u64::from(self.d);
        u64::from(r) * u64::from(self.m) * d * (d - 1) / 2
    }

    /// `H^(n-2) . c_2(E) = m^2` for a special rank-two sheaf on a double cover.
    pub fn c2_degree_rank2(&self) -> Result<u64> {
        if self.d != 2 {
            return Err(Error::InvalidArgument(format!("requires a double cover, got d = {}", self.d)));
        }
        Ok(u64::from(self.m).pow(2))
    }
}

/// A numerical polynomial in `t` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPoly {
    n: u32,
    /// Coefficient of `t^k` at index `k`.
    coeffs: Vec<BigRational>,
}

impl HilbertPoly {
    /// `C(t + n + shift, n)` as a polynomial in `t`.
    pub fn binomial(n: u32, shift: i64) -> Self {
        let mut coeffs = vec![BigRational::one()];
        for i in 1..=i64::from(n) {
            // multiply by (t + shift + i)
            let c = BigRational::from_integer((shift + i).into());
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (k, a) in coeffs.iter().enumerate() {
                next[k + 1] += a;
                next[k] += a * &c;
            }
            coeffs = next;
        }
        let fact: BigInt = (1..=u64::from(n)).map(BigInt::from).product();
        let fact = BigRational::from_integer(fact);
        HilbertPoly { n, coeffs: coeffs.into_iter().map(|c| c / &fact).collect() }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn ambient_dim(&self) -> u32 {
        self.n
    }

    /// Coefficients in the monomial basis, `t^0` first.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero);
                let b = other.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero);
                a + b
            })
            .collect();
        HilbertPoly { n: self.n.max(other.n), coeffs }.trimmed()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        HilbertPoly { n: self.n, coeffs: self.coeffs.iter().map(|a| a * c).collect() }.trimmed()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn eval(&self, t: i64) -> BigRational {
        let t = BigRational::from_integer(t.into());
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    /// Value at `t` when it is an integer.
    pub fn eval_integer(&self, t: i64) -> Option<BigInt> {
        let v = self.eval(t);
        v.is_integer().then(|| v.to_integer())
    }

    /// Checks integrality on `[-2n, 2n]`.
    pub fn is_integer_valued(&self) -> bool {
        let bound = 2 * i64::from(self.n.max(1));
        (-bound..=bound).all(|t| self.eval(t).is_integer())
    }

    /// Coefficients `a_k` with `P(t) = sum_k a_k C(t + n - k, n - k)`, `k = 0..=n`.
    pub fn binomial_basis(&self) -> Vec<BigRational> {
        let n = self.n.max(self.degree().unwrap_or(0) as u32);
        let mut rest = self.clone();
        let mut out = Vec::with_capacity(n as usize + 1);
        for k in 0..=n {
            let deg = n - k;
            let basis = HilbertPoly::binomial(deg, 0);
            let a = rest.coeffs.get(deg as usize).cloned().unwrap_or_else(BigRational::zero)
                / basis.leading_coefficient();
            rest = rest.sub(&basis.scale(&a));
            out.push(a);
        }
        out
    }
}

impl std::fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{a}*t^{k}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An `(m, m)` complete intersection `Z` in `P^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CIData {
    pub n: u32,
    pub m: u32,
}

impl CIData {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("complete intersection needs n >= 3, got {n}")));
        }
        if m == 0 {
            return Err(Error::InvalidArgument("m must be positive".into()));
        }
        Ok(CIData { n, m })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CISheaf {
    /// `I_Z(i)`
    Ideal,
    /// `O_Z(i)`
    Structure,
}

/// `h^j` of `I_Z(i)` or `O_Z(i)`, from the Koszul resolution
/// `0 -> O(-2m) -> O(-m)^2 -> I_Z -> 0` and `0 -> I_Z -> O -> O_Z -> 0`.
pub fn ci_cohomology(z: CIData, sheaf: CISheaf, i: i64, j: u32) -> Result<BigInt> {
    let CIData { n, m } = CIData::new(z.n, z.m)?;
    let m = i64::from(m);
    let ideal = |j: u32| -> BigInt {
        if j == 0 {
            BigInt::from(2) * bott(n, i - m, 0) - bott(n, i - 2 * m, 0)
        } else if j == n - 1 {
            bott(n, i - 2 * m, n) - BigInt::from(2) * bott(n, i - m, n) + bott(n, i, n)
        } else if j == n {
            bott(n, i, n)
        } else {
            BigInt::zero()
        }
    };
    Ok(match sheaf {
        _ if j > n => BigInt::zero(),
        CISheaf::Ideal => ideal(j),
        CISheaf::Structure if j == 0 => bott(n, i, 0) - ideal(0),
        CISheaf::Structure if j == n - 2 => ideal(n - 1),
        CISheaf::Structure => BigInt::zero(),
    })
}

/// Euler characteristic of `I_Z(i)` or `O_Z(i)`.
pub fn ci_euler_characteristic(z: CIData, sheaf: CISheaf, i: i64) -> Result<BigInt> {
    let mut chi = BigInt::zero();
    for j in 0..=z.n {
        let h = ci_cohomology(z, sheaf, i, j)?;
        if j % 2 == 0 {
            chi += h;
        } else {
            chi -= h;
        }
    }
    Ok(chi)
}

/// `P(I_Z(m))(t) = 2 C(t+n, n) - C(t+n-m, n)`.
pub fn hilbert_poly_ci(z: CIData) -> Result<HilbertPoly> {
    let z = CIData::new(z.n, z.m)?;
    let two = BigRational::from_integer(2.into());
    Ok(HilbertPoly::binomial(z.n, 0).scale(&two).sub(&HilbertPoly::binomial(z.n, -i64::from(z.m))))
}

/// Deformation numbers of a rank-two sheaf on a double solid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    pub m: u32,
    pub q: usize,
    #[serde(rename = "h0N")]
    pub h0n: i64,
    #[serde(rename = "h1N")]
    pub h1n: i64,
    pub hom: i64,
    pub ext1: i64,
    pub ext2: i64,
    pub ext3: i64,
    /// True when the forms span every degree `2m` polynomial (`q = 0`), the
    /// regime where the table is established.
    pub valid: bool,
}

impl ExtTable {
    /// `(h0N, h1N, hom, ext1, ext2, ext3)`.
    pub fn row(&self) -> [i64; 6] {
        [self.h0n, self.h1n, self.hom, self.ext1, self.ext2, self.ext3]
    }
}

/// `5 C(m+3, 3) - C(2m+3, 3) - 7`.
pub fn h0_normal_closed_form(m: u32) -> i64 {
    let m = i64::from(m);
    to_i64(binomial(m + 3, 3) * 5 - binomial(2 * m + 3, 3) - 7)
}

fn to_i64(v: BigInt) -> i64 {
    v.to_i64().expect("value fits in i64")
}

/// Builds the ext table for `b = p_0^2 + p_1 p_2 + p_3 p_4` of degree `2m` in four variables.
pub fn ext_table(m: u32, ps: &[MultiPoly]) -> Result<ExtTable> {
    if !(2..=4).contains(&m) {
        return Err(Error::InvalidArgument(format!("ext table is defined for m in 2..=4, got {m}")));
    }
    if ps.len() != 5 {
        return Err(Error::InvalidArgument(format!("expected 5 forms, got {}", ps.len())));
    }
    let ring: &PolyRing = ps[0].ring();
    if ring.nvars() != 4 {
        return Err(Error::VariableCountMismatch { left: 4, right: ring.nvars() });
    }
    if ring.domain().characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    for p in ps {
        if let Some(deg) = p.degree() {
            if deg != m {
                return Err(Error::DegreeMismatch { expected: m, found: deg });
            }
        }
    }
    let q = GradedIdealPiece::new(ring, ps.to_vec(), 2 * m)?.hilbert_function_quotient()?;
    let z = CIData::new(3, m)?;
    let h1_oz = to_i64(ci_cohomology(z, CISheaf::Structure, m.into(), 1)?);
    let qi = q as i64;
    let h1n = qi + 3 * h1_oz;
    let h0n = h0_normal_closed_form(m) + qi;
    let ext1 = h0n - 3;
    let (ext2, ext3) = if m == 4 { (ext1, 1) } else { (h1n, 0) };
    Ok(ExtTable { m, q, h0n, h1n, hom: 1, ext1, ext2, ext3, valid: q == 0 })
}

/// Dimension counts behind the nonexistence statements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub n: u32,
    pub m: u32,
    /// `C(2m+3, 3) - 3 - 3 C(m+3, 3)`; reported for `n = 3` only.
    pub rank1_gap: Option<i64>,
    /// `C(2m+n, n) - 5 C(m+n, n)`.
    pub rank2_gap: i128,
    /// `4 C(m+3, 3) - 5`.
    pub noic_dim: i64,
    /// `C(2m+3, 3) - noic_dim + 1`.
    pub noic_codim: i64,
}

pub fn counting_inequalities(n: u32, m: u32) -> Result<CountingReport> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("n and m must be positive".into()));
    }
    let (ni, mi) = (i64::from(n), i64::from(m));
    let sextic = binomial(2 * mi + 3, 3);
    let rank1_gap = (n == 3).then(|| to_i64(&sextic - 3 - binomial(mi + 3, 3) * 3));
    let rank2_gap: BigInt = binomial(2 * mi + ni, n.into()) - binomial(mi + ni, n.into()) * 5;
    let noic_dim = to_i64(binomial(mi + 3, 3) * 4 - 5);
    let noic_codim = to_i64(sextic) - noic_dim + 1;
    let rank2_gap = rank2_gap
        .to_i128()
        .ok_or_else(|| Error::InvalidArgument(format!("rank-two gap overflows for n = {n}, m = {m}")))?;
    Ok(CountingReport { n, m, rank1_gap, rank2_gap, noic_dim, noic_codim })
}

/// Smallest `m >= 1` from which `f(m)` stays positive through `upto`.
pub fn positive_from<F: Fn(u32) -> BigInt>(f: F, upto: u32) -> Option<u32> {
    let mut start = None;
    for m in 1..=upto {
        if f(m).is_positive() {
            start.get_or_insert(m);
        } else {
            start = None;
        }
    }
    start
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Domain;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bott_values() {
        assert_eq!(bott(3, 2, 0), int(10));
        assert_eq!(bott(3, -4, 3), int(1));
        assert_eq!(bott(3, -6, 3), int(10));
        for j in 0..=3 {
            assert_eq!(bott(3, -2, j), int(0));
        }
    }

    #[test]
    fn bott_identities() {
        assert_eq!(check_serre_duality(bott, 5, 12), None);
        assert_eq!(check_euler_characteristic(bott, 5, 12), None);
    }

    #[test]
    fn shifted_top_row_breaks_duality() {
        let shifted = |n: u32, i: i64, j: u32| {
            if j == n && i < -i64::from(n) {
                binomial(-i - i64::from(n) - 1, n.into())
            } else {
                bott(n, i, j)
            }
        };
        assert!(check_serre_duality(shifted, 3, 6).is_some());
    }

    #[test]
    fn cover_numbers() {
        let c = CoverSpec::new(3, 2, 2).unwrap();
        assert_eq!(c.pushforward_splitting(), vec![0, -2]);
        assert_eq!(CoverSpec::new(3, 2, 3).unwrap().pushforward_splitting(), vec![0, -2, -4]);
        assert_eq!(c.canonical_twist(), -2);
        assert_eq!(CoverSpec::new(3, 4, 2).unwrap().canonical_twist(), 0);
        assert_eq!(CoverSpec::new(5, 1, 1).unwrap().canonical_twist(), -6);
        assert_eq!(c.ulrich_degree(2), 4);
        assert_eq!(CoverSpec::new(3, 3, 2).unwrap().ulrich_degree(2), 6);
        assert_eq!(CoverSpec::new(3, 3, 1).unwrap().ulrich_degree(5), 0);
        assert_eq!(c.c2_degree_rank2().unwrap(), 4);
        assert!(CoverSpec::new(3, 2, 3).unwrap().c2_degree_rank2().is_err());
        assert!(CoverSpec::new(0, 2, 2).is_err());
    }

    #[test]
    fn ulrich_hilbert_polynomial() {
        let c = CoverSpec::new(3, 2, 2).unwrap();
        let p = c.ulrich_hilbert(2);
        assert_eq!(p.eval_integer(0), Some(int(4)));
        for t in -3..=-1 {
            assert_eq!(p.eval_integer(t), Some(int(0)));
        }
        assert!(p.is_integer_valued());
        let trivial = CoverSpec::new(3, 1, 1).unwrap().ulrich_hilbert(1);
        assert_eq!(trivial, HilbertPoly::binomial(3, 0));
        assert_eq!(trivial.to_string(), "1/6*t^3 + t^2 + 11/6*t + 1");
    }

    #[test]
    fn binomial_basis_round_trip() {
        let z = CIData::new(3, 2).unwrap();
        let p = hilbert_poly_ci(z).unwrap();
        let basis = p.binomial_basis();
        let mut rebuilt = HilbertPoly::binomial(0, 0).scale(&BigRational::zero());
        for (k, a) in basis.iter().enumerate() {
            rebuilt = rebuilt.add(&HilbertPoly::binomial(3 - k as u32, 0).scale(a));
        }
        assert_eq!(rebuilt.coefficients(), p.coefficients());
        assert_eq!(basis[0], BigRational::one());
    }

    #[test]
    fn ci_values() {
        let z = CIData::new(3, 2).unwrap();
        assert_eq!(ci_cohomology(z, CISheaf::Ideal, 2, 0).unwrap(), int(2));
        assert_eq!(ci_cohomology(z, CISheaf::Structure, 2, 0).unwrap(), int(8));
        assert_eq!(ci_cohomology(z, CISheaf::Structure, 4, 0).unwrap(), int(35 - 20 + 1));
        let z4 = CIData::new(3, 4).unwrap();
        assert_eq!(ci_cohomology(z4, CISheaf::Structure, 4, 1).unwrap(), int(1));
        assert!(CIData::new(2, 2).is_err());
        let p = hilbert_poly_ci(z).unwrap();
        assert_eq!(p.eval_integer(0), Some(int(2)));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.leading_coefficient(), BigRational::new(1.into(), 6.into()));
    }

    #[test]
    fn ci_euler_matches_polynomial() {
        for n in 3..=5 {
            for m in 1..=4 {
                let z = CIData::new(n, m).unwrap();
                let p = hilbert_poly_ci(z).unwrap();
                let span = 2 * i64::from(m) + i64::from(n);
                for t in -span..=span {
                    let i = t + i64::from(m);
                    let chi = ci_euler_characteristic(z, CISheaf::Ideal, i).unwrap();
                    assert_eq!(Some(chi.clone()), p.eval_integer(t));
                    let chi_o = ci_euler_characteristic(z, CISheaf::Structure, i).unwrap();
                    assert_eq!(chi_o, binomial(i + i64::from(n), n.into()) - chi);
                }
            }
        }
    }

    fn q_zero_forms(m: u32) -> Vec<MultiPoly> {
        let r = PolyRing::new(Domain::Rationals, &["x", "y", "z", "w"]).unwrap();
        ["x", "y", "z", "w", "(x + y + z + w)"]
            .iter()
            .map(|v| r.parse(&format!("{v}^{m}")).unwrap())
            .collect()
    }

    #[test]
    fn ext_rows() {
        assert_eq!(ext_table(2, &q_zero_forms(2)).unwrap().row(), [8, 0, 1, 5, 0, 0]);
        assert_eq!(ext_table(3, &q_zero_forms(3)).unwrap().row(), [9, 0, 1, 6, 0, 0]);
        let t4 = ext_table(4, &q_zero_forms(4)).unwrap();
        assert_eq!(t4.row(), [3, 3, 1, 0, 0, 1]);
        assert!(t4.valid);
    }

    #[test]
    fn ext_errors() {
        let r = PolyRing::new(Domain::PrimeField(2), &["x", "y", "z", "w"]).unwrap();
        let ps: Vec<_> = ["x^2", "y^2", "z^2", "w^2", "x*y"].iter().map(|s| r.parse(s).unwrap()).collect();
        assert_eq!(ext_table(2, &ps), Err(Error::CharacteristicTwo));
        let r3 = PolyRing::new(Domain::Rationals, &["x", "y", "z"]).unwrap();
        let ps3: Vec<_> = ["x^2", "y^2", "z^2", "x*y", "y*z"].iter().map(|s| r3.parse(s).unwrap()).collect();
        assert!(matches!(ext_table(2, &ps3), Err(Error::VariableCountMismatch { .. })));
        assert!(ext_table(2, &q_zero_forms(2)[..4]).is_err());
    }

    #[test]
    fn degenerate_forms_flag_table() {
        let r = PolyRing::new(Domain::Rationals, &["x", "y", "z", "w"]).unwrap();
        let ps: Vec<_> = ["x^2", "y^2", "z^2", "x*y", "x*z"].iter().map(|s| r.parse(s).unwrap()).collect();
        let t = ext_table(2, &ps).unwrap();
        assert!(t.q > 0);
        assert!(!t.valid);
        assert_eq!(t.ext1, t.h0n - 3);
    }

    #[test]
    fn counts() {
        let c = counting_inequalities(3, 2).unwrap();
        assert_eq!(c.rank1_gap, Some(2));
        assert_eq!(c.noic_dim, 35);
        assert_eq!(c.noic_codim, 1);
        assert_eq!(counting_inequalities(4, 2).unwrap().rank2_gap, -5);
        assert_eq!(counting_inequalities(4, 2).unwrap().rank1_gap, None);
        assert_eq!(counting_inequalities(3, 3).unwrap().noic_codim, 10);
        assert_eq!(counting_inequalities(3, 4).unwrap().noic_codim, 31);
        let gap = |m: u32| binomial(2 * i64::from(m) + 3, 3) - 3 - binomial(i64::from(m) + 3, 3) * 3;
        assert_eq!(positive_from(gap, 20), Some(2));
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(2, 3), int(0));
        assert_eq!(binomial(8, 4), int(70));
        assert_eq!(binomial(5, 0), int(1));
    }
}
