use crate::error::{Error, Result};
use crate::polyring::{Domain, Scalar};

/// Dense row-major matrix over Q or a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    domain: Domain,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`FieldMatrix::rref_rank`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub rref: FieldMatrix,
    pub pivot_cols: Vec<usize>,
}

impl FieldMatrix {
    pub fn new(domain: Domain, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if !domain.is_field() {
            return Err(Error::RequiresField(domain));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(bad) = data.iter().find(|s| !domain.contains(s)) {
            return Err(Error::CoefficientNotInDomain(format!("{bad:?}")));
        }
        Ok(FieldMatrix { domain, rows, cols, data })
    }

    pub fn zeros(domain: Domain, rows: usize, cols: usize) -> Result<Self> {
        Self::new(domain, rows, cols, vec![domain.zero(); rows * cols])
    }

    pub fn identity(domain: Domain, n: usize) -> Result<Self> {
        let mut m = Self::zeros(domain, n, n)?;
        for i in 0..n {
            m.set(i, i, domain.one());
        }
        Ok(m)
    }

    /// Builds a matrix from small integer rows, reducing into `domain`.
    pub fn from_i64_rows(domain: Domain, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| domain.from_i64(v)).collect();
        Self::new(domain, rows.len(), cols, data)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        FieldMatrix { domain: self.domain, rows: self.cols, cols: self.rows, data }
    }

    /// Reduced row echelon form. Pivots are the first nonzero entry scanning
    /// columns left to right and rows top to bottom.
    pub fn rref_rank(&self) -> Rref {
        match self.domain {
            Domain::PrimeField(p) => self.rref_modular(p),
            _ => self.rref_generic(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rref_rank().rank
    }

    fn rref_generic(&self) -> Rref {
        let dom = self.domain;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !dom.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = dom.inv(m.get(r, c)).expect("nonzero pivot in a field");
            for j in c..m.cols {
                let v = dom.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || dom.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    if dom.is_zero(m.get(r, j)) {
                        continue;
                    }
                    let v = dom.sub(m.get(i, j), &dom.mul(&factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: r, rref: m, pivot_cols: pivots }
    }

    fn rref_modular(&self, p: u64) -> Rref {
        let mut a: Vec<u64> = self
            .data
            .iter()
            .map(|s| match s {
                Scalar::Modular(v) => *v,
                Scalar::Rational(_) => unreachable!("prime-field matrix holds residues"),
            })
            .collect();
        let pivots = rref_mod_p(&mut a, self.rows, self.cols, p);
        let rref = FieldMatrix {
            domain: self.domain,
            rows: self.rows,
            cols: self.cols,
            data: a.into_iter().map(Scalar::Modular).collect(),
        };
        Rref { rank: pivots.len(), rref, pivot_cols: pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// In-place RREF over F_p on a row-major buffer; returns the pivot columns.
pub(crate) fn rref_mod_p(a: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    use crate::polyring::Domain as D;
    let field = D::PrimeField(p);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                a.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = match field.inv(&Scalar::Modular(a[r * cols + c])) {
            Ok(Scalar::Modular(v)) => v,
            _ => unreachable!("nonzero residue is invertible"),
        };
        for j in c..cols {
            a[r * cols + j] = mulm(a[r * cols + j], inv, p);
        }
        for i in 0..rows {
            let f = a[i * cols + c];
            if i == r || f == 0 {
                continue;
            }
            let neg = p - f;
            for j in c..cols {
                let x = a[r * cols + j];
                if x != 0 {
                    let v = a[i * cols + j] as u128 + neg as u128 * x as u128;
                    a[i * cols + j] = (v % p as u128) as u64;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        for dom in [Domain::Rationals, Domain::PrimeField(7)] {
            assert_eq!(FieldMatrix::identity(dom, 3).unwrap().rank(), 3);
        }
    }

    #[test]
    fn zero_matrix_rank_zero() {
        let z = FieldMatrix::zeros(Domain::Rationals, 3, 4).unwrap();
        let r = z.rref_rank();
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());
    }

    #[test]
    fn proportional_rows() {
        let m = FieldMatrix::from_i64_rows(Domain::Rationals, &[vec![1, 2], vec![2, 4]]).unwrap();
        let r = m.rref_rank();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(r.rref, FieldMatrix::from_i64_rows(Domain::Rationals, &[vec![1, 2], vec![0, 0]]).unwrap());
    }

    #[test]
    fn rref_over_f5() {
        let m = FieldMatrix::from_i64_rows(Domain::PrimeField(5), &[vec![0, 2, 4], vec![3, 1, 0]]).unwrap();
        let r = m.rref_rank();
        assert_eq!(r.pivot_cols, vec![0, 1]);
        // row1 -> [1, 2, 0] scaled: 3^{-1}=2 -> [1,2,0]; row0 -> [0,1,2]; clear: [1,0,-4]=[1,0,1]
        assert_eq!(r.rref, FieldMatrix::from_i64_rows(Domain::PrimeField(5), &[vec![1, 0, 1], vec![0, 1, 2]]).unwrap());
    }

    #[test]
    fn integers_are_not_a_field() {
        assert!(matches!(FieldMatrix::zeros(Domain::Integers, 1, 1), Err(Error::RequiresField(_))));
    }
}
