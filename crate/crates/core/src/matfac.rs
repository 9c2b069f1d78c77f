//! Cyclic matrix factorizations `A^d = b I` of branch polynomials.
//!
//! Given `b = p_0^d + sum_i prod_j p_{i,j}` with all `p` forms of one degree
//! `m`, the construction starts from the `1 x 1` matrix `[p_0]` and absorbs
//! one product at a time:
//!
//! ```text
//! A' = Z (x) A + X (x) I,   Z = diag(1, z, .., z^(d-1)),   X = cyclic shift of (q_1, .., q_d)
//! ```
//!
//! With `z` a primitive `d`-th root of unity, `X Z = z Z X`, so the two
//! summands `z`-commute and `A'^d = A^d (x) I + X^d (x) I = (c + q_1..q_d) I`.
//! For `d = 2` this is the doubling `[[A, q_1 I], [q_2 I, -A]]`.

use itertools_free::permutations;
use num_traits::ToPrimitive;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlinalg::{Matrix, PolyMatrix, TPolyMatrix, MAX_DET_SIZE};
use crate::graded::random_form;
use crate::par::{self, ExecMode};
use crate::polyring::{Domain, MultiPoly, PolyRing, RingElement, Scalar, TPoly};

/// A sum-of-products presentation of a branch polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    d: u32,
    m: Option<u32>,
    ring: PolyRing,
    power_term: Option<MultiPoly>,
    product_terms: Vec<Vec<MultiPoly>>,
}

impl Decomposition {
    pub fn new(
        ring: &PolyRing,
        d: u32,
        power_term: Option<MultiPoly>,
        product_terms: Vec<Vec<MultiPoly>>,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("covering degree must be positive".into()));
        }
        let mut m: Option<u32> = None;
        let all = power_term.iter().chain(product_terms.iter().flatten());
        for p in all {
            ring.check_compatible(p.ring())?;
            let Some(deg) = p.degree() else { continue };
            if !p.is_homogeneous(deg) {
                return Err(Error::NotHomogeneous { expected: deg });
            }
            match m {
                None => m = Some(deg),
                Some(expected) if expected != deg => return Err(Error::DegreeMismatch { expected, found: deg }),
                _ => {}
            }
        }
        if let Some(bad) = product_terms.iter().find(|t| t.len() != d as usize) {
            return Err(Error::InvalidArgument(format!(
                "each product needs {d} factors, found {}",
                bad.len()
            )));
        }
        Ok(Decomposition { d, m, ring: ring.clone(), power_term, product_terms })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Number of summands including the power term.
    pub fn s(&self) -> usize {
        self.product_terms.len() + 1
    }

    /// Common degree of the forms (`None` if they are all zero).
    pub fn form_degree(&self) -> Option<u32> {
        self.m
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn power_term(&self) -> Option<&MultiPoly> {
        self.power_term.as_ref()
    }

    pub fn product_terms(&self) -> &[Vec<MultiPoly>] {
        &self.product_terms
    }

    /// `b = p_0^d + sum_i prod_j p_{i,j}`.
    pub fn branch_polynomial(&self) -> MultiPoly {
        let mut b = match &self.power_term {
            Some(p) => p.pow(self.d),
            None => self.ring.zero(),
        };
        for prod in &self.product_terms {
            let term = prod.iter().fold(self.ring.one(), |acc, q| &acc * q);
            b = &b + &term;
        }
        b
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Decomposition(Decomposition),
    External,
}

/// A verified certificate `A^d = b I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicFactorization {
    d: u32,
    b: MultiPoly,
    matrix: PolyMatrix,
    provenance: Provenance,
}

impl CyclicFactorization {
    /// Wraps an externally supplied matrix, checking `A^d = b I`.
    pub fn from_matrix(matrix: PolyMatrix, d: u32, b: MultiPoly) -> Result<Self> {
        let check = verify_power(&matrix, d, &b)?;
        if !check.holds {
            return Err(Error::InvalidArgument(format!(
                "matrix power differs from b*I at entry {:?}",
                check.first_mismatch
            )));
        }
        Ok(CyclicFactorization { d, b, matrix, provenance: Provenance::External })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// Rank of the associated sheaf: `size / d`.
    pub fn rank(&self) -> usize {
        self.size() / self.d as usize
    }

    pub fn branch(&self) -> &MultiPoly {
        &self.b
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn certificate(&self) -> Certificate {
        Certificate {
            d: self.d,
            size: self.size(),
            b: self.b.to_string(),
            a: self.matrix.to_strings(),
            verified: true,
            rank: self.rank(),
        }
    }
}

/// JSON certificate layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub d: u32,
    pub size: usize,
    pub b: String,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    pub verified: bool,
    pub rank: usize,
}

/// Resolves the root of unity used by the construction.
fn resolve_zeta(domain: Domain, d: u32, zeta: Option<Scalar>) -> Result<Scalar> {
    let ch = domain.characteristic();
    if ch != 0 && u64::from(d) % ch == 0 {
        return Err(Error::CharacteristicDividesDegree { characteristic: ch, d: d.into() });
    }
    match zeta {
        Some(z) => {
            if !domain.contains(&z) || domain.multiplicative_order(&z) != Some(d.into()) {
                return Err(Error::NotPrimitiveRoot(domain.format_scalar(&z)));
            }
            Ok(z)
        }
        None if d <= 2 => Ok(if d == 1 { domain.one() } else { domain.from_i64(-1) }),
        None => Err(Error::MissingRootOfUnity { d: d.into(), domain }),
    }
}

/// Builds `A` of size `d^(s-1)` with `A^d = b I`. The result is checked with
/// [`verify_power`] before it is returned.
pub fn build_factorization(dec: &Decomposition, zeta: Option<Scalar>) -> Result<CyclicFactorization> {
    let ring = dec.ring();
    let dom = ring.domain();
    let d = dec.d as usize;
    let zeta = resolve_zeta(dom, dec.d, zeta)?;
    let powers: Vec<Scalar> = (0..d).map(|j| dom.pow(&zeta, j as u64)).collect();

    let p0 = dec.power_term.clone().unwrap_or_else(|| ring.zero());
    let mut a = PolyMatrix::scalar(1, &p0);
    for prod in &dec.product_terms {
        let n = a.size();
        let mut rows = vec![vec![ring.zero(); n * d]; n * d];
        for j in 0..d {
            for x in 0..n {
                for y in 0..n {
                    rows[j * n + x][j * n + y] = a.get(x, y).scale(&powers[j]);
                }
                rows[j * n + x][((j + 1) % d) * n + x] =
                    &rows[j * n + x][((j + 1) % d) * n + x] + &prod[j];
            }
        }
        a = PolyMatrix::from_rows(rows)?;
    }

    let b = dec.branch_polynomial();
    let check = verify_power(&a, dec.d, &b)?;
    if !check.holds {
        return Err(Error::InvalidArgument(format!(
            "constructed matrix fails A^d = b I at {:?}",
            check.first_mismatch
        )));
    }
    Ok(CyclicFactorization { d: dec.d, b, matrix: a, provenance: Provenance::Decomposition(dec.clone()) })
}

/// Outcome of [`verify_power`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerCheck {
    pub holds: bool,
    /// First entry (row-major) where `A^d` and `b I` differ.
    pub first_mismatch: Option<(usize, usize)>,
}

/// Checks `A^d = b I` by exact symbolic matrix powering.
pub fn verify_power(a: &PolyMatrix, d: u32, b: &MultiPoly) -> Result<PowerCheck> {
    if !a.is_square() {
        return Err(Error::Dimension("matrix factorization must be square".into()));
    }
    a.ring().check_compatible(b.ring())?;
    let power = a.pow(d)?;
    let n = a.size();
    let zero = b.ring().zero();
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j { b } else { &zero };
            if power.get(i, j) != expected {
                return Ok(PowerCheck { holds: false, first_mismatch: Some((i, j)) });
            }
        }
    }
    Ok(PowerCheck { holds: true, first_mismatch: None })
}

/// Checks `det(t I - A) = p^r`.
pub fn verify_determinantal(a: &PolyMatrix, p: &TPoly, r: usize) -> Result<bool> {
    let n = a.size();
    if n > MAX_DET_SIZE {
        return Err(Error::SizeExceeded { size: n, max: MAX_DET_SIZE });
    }
    let deg = p.degree().unwrap_or(0);
    if deg * r != n {
        return Err(Error::Dimension(format!("size {n} is not r*d = {r}*{deg}")));
    }
    Ok(a.characteristic_polynomial()? == p.pow(r as u32))
}

/// A skew-symmetric form of `t I - A` and its Pfaffian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    pub matrix: TPolyMatrix,
    pub pfaffian: TPoly,
    /// Row `i` of the skew matrix is `signs[i]` times row `rows[i]` of `t I - A`.
    pub rows: Vec<usize>,
    pub signs: Vec<i8>,
}

/// Skew-symmetrizes the characteristic matrix of a `4 x 4` doubling matrix.
pub fn skew_symmetrize_d2(a: &PolyMatrix) -> Result<SkewForm> {
    if a.rows() != 4 || a.cols() != 4 {
        return Err(Error::UnrecognizedShape(format!("expected 4x4, got {}x{}", a.rows(), a.cols())));
    }
    skew_symmetrize(&a.characteristic_matrix()?)
}

/// Finds a row permutation and row signs of determinant one that turn `m`
/// skew-symmetric (first in lexicographic order of permutation, then signs),
/// and returns the resulting matrix with its Pfaffian.
pub fn skew_symmetrize(m: &TPolyMatrix) -> Result<SkewForm> {
    let n = m.rows();
    if n != m.cols() || n % 2 == 1 || n > 8 {
        return Err(Error::UnrecognizedShape(format!("{}x{} matrix", m.rows(), m.cols())));
    }
    for perm in permutations(n) {
        let parity = permutation_sign(&perm);
        for mask in 0u32..(1 << n) {
            let negatives = mask.count_ones() as i8;
            // det(S) = sign(perm) * prod(signs) * det(M) must equal det(M)
            if parity * if negatives % 2 == 0 { 1 } else { -1 } != 1 {
                continue;
            }
            let signs: Vec<i8> = (0..n).map(|i| if mask & (1 << i) == 0 { 1 } else { -1 }).collect();
            let rows: Vec<Vec<TPoly>> = (0..n)
                .map(|i| {
                    m.row(perm[i])
                        .iter()
                        .map(|e| if signs[i] < 0 { RingElement::neg(e) } else { e.clone() })
                        .collect()
                })
                .collect();
            let s = Matrix::from_rows(rows)?;
            if s.is_skew_symmetric() {
                let pfaffian = s.pfaffian()?;
                return Ok(SkewForm { matrix: s, pfaffian, rows: perm, signs });
            }
        }
    }
    Err(Error::UnrecognizedShape("no signed row permutation is skew-symmetric".into()))
}

fn permutation_sign(perm: &[usize]) -> i8 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

mod itertools_free {
    /// All permutations of `0..n` in lexicographic order.
    pub fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(current.clone());
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).expect("successor exists");
            current.swap(i, j);
            current[i + 1..].reverse();
        }
    }
}

/// A decomposition with `s - 1` products of `d` random forms of degree `m`.
pub fn random_decomposition<R: Rng>(ring: &PolyRing, d: u32, s: usize, m: u32, rng: &mut R) -> Result<Decomposition> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    let p0 = random_form(ring, m, rng);
    let products = (1..s).map(|_| (0..d).map(|_| random_form(ring, m, rng)).collect()).collect();
    Decomposition::new(ring, d, Some(p0), products)
}

/// Result of checking one factorization of a batch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchOutcome {
    pub size: usize,
    pub power_ok: bool,
    pub determinantal_ok: bool,
}

impl BatchOutcome {
    pub fn ok(&self) -> bool {
        self.power_ok && self.determinantal_ok
    }
}

/// Builds and checks every decomposition, in order. The determinantal check
/// is skipped (reported false) above the determinant size cap.
pub fn verify_batch(decs: &[Decomposition], zeta: Option<Scalar>, mode: ExecMode) -> Result<Vec<BatchOutcome>> {
    par::map_slice(decs, mode, |dec| {
        let f = build_factorization(dec, zeta.clone())?;
        let power_ok = verify_power(f.matrix(), f.d(), f.branch())?.holds;
        let determinantal_ok = f.size() <= MAX_DET_SIZE
            && verify_determinantal(f.matrix(), &TPoly::cyclic(f.d() as usize, f.branch()), f.rank())?;
        Ok(BatchOutcome { size: f.size(), power_ok, determinantal_ok })
    })
    .into_iter()
    .collect()
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut f = 2;
    while f * f <= m {
        if m.is_multiple_of(f) {
            while m.is_multiple_of(f) {
                m /= f;
            }
            result -= result / f;
        }
        f += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Rank of the Ulrich sheaf obtained from `s` summands: `d^(s-2)` with
/// `d`-th roots of unity available, `d^(s-2) * phi(d)` otherwise.
pub fn rank_bound(d: u64, s: u64, has_root_of_unity: bool) -> Result<u64> {
    if s < 2 {
        return Err(Error::InvalidArgument("s = 1 forces a reducible cover".into()));
    }
    if d < 2 {
        return Err(Error::InvalidArgument("covering degree must be at least 2".into()));
    }
    let exp = u32::try_from(s - 2).map_err(|_| Error::InvalidArgument("s too large".into()))?;
    let base = d.checked_pow(exp).ok_or_else(|| Error::InvalidArgument("rank overflows u64".into()))?;
    let rank = if has_root_of_unity { Some(base) } else { base.checked_mul(euler_phi(d)) };
    rank.ok_or_else(|| Error::InvalidArgument("rank overflows u64".into()))
}

/// `rank_bound` as a plain integer for reporting.
pub fn rank_bound_usize(d: u64, s: u64, has_root_of_unity: bool) -> Result<usize> {
    rank_bound(d, s, has_root_of_unity)?
        .to_usize()
        .ok_or_else(|| Error::InvalidArgument("rank overflows usize".into()))
}
