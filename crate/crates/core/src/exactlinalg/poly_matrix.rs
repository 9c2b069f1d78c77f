use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::polyring::{MultiPoly, PolyRing, RingElement, TPoly};

/// Largest size accepted by the cofactor determinant.
pub const MAX_DET_SIZE: usize = 12;
/// Largest size accepted by the Pfaffian expansion.
pub const MAX_PFAFFIAN_SIZE: usize = 8;

/// Dense matrix over a commutative ring of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Square matrix with multivariate polynomial entries.
pub type PolyMatrix = Matrix<MultiPoly>;
/// Matrix whose entries are polynomials in `t`, e.g. `t I - A`.
pub type TPolyMatrix = Matrix<TPoly>;

impl<T: RingElement> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(Error::Dimension("matrix must have at least one entry".into()));
        }
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    /// `n x n` identity built from a template element of the target ring.
    pub fn identity(n: usize, template: &T) -> Self {
        Self::scalar(n, &template.one_like())
    }

    /// `c * I_n`.
    pub fn scalar(n: usize, c: &T) -> Self {
        let zero = c.zero_like();
        let mut data = vec![zero; n * n];
        for i in 0..n {
            data[i * n + i] = c.clone();
        }
        Matrix { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn size(&self) -> usize {
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn neg(&self) -> Self {
        self.map(RingElement::neg)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("shape mismatch in matrix sum".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.data[0].zero_like();
        let mut data = vec![zero; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        data[idx] = data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    /// `self^e` by repeated multiplication (`e >= 1`).
    pub fn pow(&self, e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(self.rows, &self.data[0]);
        for _ in 0..e {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (i + 1..self.cols).all(|j| *self.get(i, j) == self.get(j, i).neg())
            })
    }

    /// Determinant by Laplace expansion with memoized minors: the minor on
    /// the last `k` rows and column set `S` is computed once per `S`.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n > MAX_DET_SIZE {
            return Err(Error::SizeExceeded { size: n, max: MAX_DET_SIZE });
        }
        let zero = self.data[0].zero_like();
        let mut minors: Vec<Option<T>> = vec![None; 1 << n];
        minors[0] = Some(zero.one_like());
        for k in 1..=n {
            let row = n - k;
            for mask in 1usize..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut acc = zero.clone();
                let mut position = 0;
                for c in 0..n {
                    if mask & (1 << c) == 0 {
                        continue;
                    }
                    let entry = self.get(row, c);
                    if !entry.is_zero() {
                        let sub = minors[mask & !(1 << c)].as_ref().expect("smaller minors are filled first");
                        if !sub.is_zero() {
                            let term = entry.mul(sub);
                            acc = if position % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                        }
                    }
                    position += 1;
                }
                minors[mask] = Some(acc);
            }
        }
        Ok(minors[(1 << n) - 1].take().expect("full minor computed"))
    }

    /// Coefficients of `det(t I - A)`, highest power of `t` first, by the
    /// division-free Berkowitz recursion on trailing principal submatrices.
    pub fn characteristic_coefficients(&self) -> Result<Vec<T>> {
        if !self.is_square() {
            return Err(Error::Dimension("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let Some(first) = self.data.first() else { return Err(Error::Dimension("empty matrix".into())) };
        let zero = first.zero_like();
        let one = zero.one_like();
        let mut p = vec![one.clone()];
        for i in (0..n).rev() {
            let k = n - i;
            // first column of the Toeplitz matrix: 1, -a, -R C, -R A' C, ..
            let mut col = Vec::with_capacity(k + 1);
            col.push(one.clone());
            col.push(self.get(i, i).neg());
            let mut v: Vec<T> = (i + 1..n).map(|r| self.get(r, i).clone()).collect();
            for step in 0..k.saturating_sub(1) {
                if step > 0 {
                    v = (i + 1..n)
                        .map(|r| {
                            zero.sum_of_products(
                                (i + 1..n)
                                    .map(|c| (self.get(r, c), &v[c - i - 1]))
                                    .filter(|(a, x)| !a.is_zero() && !x.is_zero()),
                            )
                        })
                        .collect();
                }
                let dot = zero.sum_of_products(
                    (i + 1..n)
                        .map(|c| (self.get(i, c), &v[c - i - 1]))
                        .filter(|(a, x)| !a.is_zero() && !x.is_zero()),
                );
                col.push(dot.neg());
            }
            p = (0..=k)
                .map(|r| {
                    zero.sum_of_products(
                        (0..k.min(r + 1))
                            .map(|c| (&col[r - c], &p[c]))
                            .filter(|(a, x)| !a.is_zero() && !x.is_zero()),
                    )
                })
                .collect();
        }
        Ok(p)
    }

    /// Pfaffian by expansion along the first row, memoized over index sets.
    pub fn pfaffian(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Dimension("Pfaffian of a non-square matrix".into()));
        }
        let n = self.rows;
        if n % 2 == 1 {
            return Err(Error::OddSize(n));
        }
        if n > MAX_PFAFFIAN_SIZE {
            return Err(Error::SizeExceeded { size: n, max: MAX_PFAFFIAN_SIZE });
        }
        if !self.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        let mut memo = HashMap::new();
        Ok(self.pfaffian_rec((1usize << n) - 1, &mut memo))
    }

    fn pfaffian_rec(&self, mask: usize, memo: &mut HashMap<usize, T>) -> T {
        if mask == 0 {
            return self.data[0].one_like();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut acc = self.data[0].zero_like();
        let mut position = 1;
        for j in first + 1..self.rows {
            if rest & (1 << j) == 0 {
                continue;
            }
            let entry = self.get(first, j);
            if !entry.is_zero() {
                let sub = self.pfaffian_rec(rest & !(1 << j), memo);
                let term = entry.mul(&sub);
                acc = if position % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            }
            position += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

impl PolyMatrix {
    pub fn ring(&self) -> &PolyRing {
        self.data[0].ring()
    }

    /// Common degree of all nonzero entries (`None` if every entry is zero);
    /// errors if entries are inhomogeneous or of different degrees.
    pub fn entry_degree(&self) -> Result<Option<u32>> {
        let mut degree = None;
        for e in &self.data {
            let Some(d) = e.degree() else { continue };
            if !e.is_homogeneous(d) {
                return Err(Error::NotHomogeneous { expected: d });
            }
            match degree {
                None => degree = Some(d),
                Some(expected) if expected != d => return Err(Error::DegreeMismatch { expected, found: d }),
                _ => {}
            }
        }
        Ok(degree)
    }

    /// `t I - A`.
    pub fn characteristic_matrix(&self) -> Result<TPolyMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("characteristic matrix of a non-square matrix".into()));
        }
        let ring = self.ring().clone();
        let t = TPoly::t(&ring);
        let mut out = self.map(|a| TPoly::constant(-a));
        for i in 0..self.rows {
            let v = out.get(i, i).add(&t);
            out.set(i, i, v);
        }
        Ok(out)
    }

    /// `det(t I - A)` as a polynomial in `t`.
    pub fn characteristic_polynomial(&self) -> Result<TPoly> {
        if self.rows > MAX_DET_SIZE {
            return Err(Error::SizeExceeded { size: self.rows, max: MAX_DET_SIZE });
        }
        let mut coeffs = self.characteristic_coefficients()?;
        coeffs.reverse();
        Ok(TPoly::from_coeffs(self.ring(), coeffs))
    }

    /// Row-major strings, the JSON matrix representation.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect()
    }

    pub fn parse_rows<S: AsRef<str>>(ring: &PolyRing, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }
}

/// Polynomial determinant, optionally of the characteristic matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Determinant {
    Plain(MultiPoly),
    Characteristic(TPoly),
}

/// `det(M)`, or `det(t I - M)` when `in_t` is set.
pub fn poly_det(m: &PolyMatrix, in_t: bool) -> Result<Determinant> {
    if in_t {
        m.characteristic_polynomial().map(Determinant::Characteristic)
    } else {
        m.determinant().map(Determinant::Plain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Domain;

    fn ring(domain: Domain) -> PolyRing {
        PolyRing::new(domain, &["p0", "p1", "p2", "p3", "a"]).unwrap()
    }

    fn parse(r: &PolyRing, rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        PolyMatrix::parse_rows(r, &rows).unwrap()
    }

    #[test]
    fn two_by_two_characteristic_polynomial() {
        let r = ring(Domain::Rationals);
        let a = parse(&r, &[&["p0", "p1"], &["p2", "-p0"]]);
        let cp = a.characteristic_polynomial().unwrap();
        assert_eq!(cp, TPoly::cyclic(2, &r.parse("p0^2 + p1*p2").unwrap()));
    }

    #[test]
    fn identity_determinant() {
        let r = ring(Domain::Integers);
        for n in 1..6 {
            assert!(PolyMatrix::identity(n, &r.one()).determinant().unwrap().is_one());
        }
    }

    #[test]
    fn three_by_three_template_over_f7() {
        // zeta = 2 has order 3 mod 7
        let r = ring(Domain::PrimeField(7));
        let a = parse(&r, &[&["p0", "p1", "0"], &["0", "2*p0", "p2"], &["p3", "0", "4*p0"]]);
        let cp = a.characteristic_polynomial().unwrap();
        assert_eq!(cp, TPoly::cyclic(3, &r.parse("p0^3 + p1*p2*p3").unwrap()));
    }

    #[test]
    fn pfaffian_two_by_two() {
        let r = ring(Domain::Rationals);
        let m = parse(&r, &[&["0", "a"], &["-a", "0"]]);
        assert_eq!(m.pfaffian().unwrap(), r.var(4));
    }

    #[test]
    fn pfaffian_errors() {
        let r = ring(Domain::Rationals);
        assert_eq!(parse(&r, &[&["0", "a"], &["a", "0"]]).pfaffian(), Err(Error::NotSkewSymmetric));
        let odd = PolyMatrix::scalar(3, &r.zero());
        assert_eq!(odd.pfaffian(), Err(Error::OddSize(3)));
    }

    #[test]
    fn determinant_size_cap() {
        let r = ring(Domain::Rationals);
        let big = PolyMatrix::identity(13, &r.one());
        assert_eq!(big.determinant(), Err(Error::SizeExceeded { size: 13, max: 12 }));
    }

    #[test]
    fn four_by_four_pfaffian_squares_to_determinant() {
        let r = ring(Domain::Rationals);
        let m = parse(
            &r,
            &[
                &["0", "p0", "p1", "p2"],
                &["-p0", "0", "p3", "a"],
                &["-p1", "-p3", "0", "p0 + a"],
                &["-p2", "-a", "-p0 - a", "0"],
            ],
        );
        let pf = m.pfaffian().unwrap();
        // pf = a12 a34 - a13 a24 + a14 a23
        assert_eq!(pf, r.parse("p0*(p0 + a) - p1*a + p2*p3").unwrap());
        assert_eq!(&pf * &pf, m.determinant().unwrap());
    }

    #[test]
    fn entry_degree_checks() {
        let r = ring(Domain::Rationals);
        assert_eq!(parse(&r, &[&["p0", "0"], &["a", "p1"]]).entry_degree().unwrap(), Some(1));
        assert!(parse(&r, &[&["p0", "0"], &["a^2", "p1"]]).entry_degree().is_err());
    }
}
