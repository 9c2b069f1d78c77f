//! Graded pieces of homogeneous ideals and their quotients.
//!
//! The degree-`D` piece of the ideal `(g_1, ..., g_k)` is spanned by the
//! products `g_i * mu` with `mu` running over the monomials of degree
//! `D - deg g_i`. Writing those products in the monomial basis of degree `D`
//! gives the multiplication matrix; its rank, row echelon form or Smith form
//! answers every question about the quotient piece.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlinalg::{rref_mod_p, FieldMatrix, IntMatrix};
use crate::par::{self, ExecMode};
use crate::polyring::{monomial_basis, Domain, Monomial, MultiPoly, PolyRing, Scalar};

/// Default prime for randomized genericity checks.
pub const DEFAULT_TRIAL_PRIME: u64 = 101;

/// Homogeneous generators together with the degree being inspected.
#[derive(Clone, Debug)]
pub struct GradedIdealPiece {
    ring: PolyRing,
    generators: Vec<MultiPoly>,
    degrees: Vec<Option<u32>>,
    target_degree: u32,
}

/// Either field or integer multiplication matrix, rows indexed by monomials.
#[derive(Clone, Debug)]
pub enum MultiplicationMatrix {
    Field(FieldMatrix),
    Integer(IntMatrix),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldQuotientReport {
    pub ambient_dim: usize,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerQuotientReport {
    pub ambient_dim: usize,
    /// Rank of the ideal piece as a free Z-module.
    pub ideal_rank: usize,
    pub free_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
    /// One monomial per torsion invariant generating that cyclic summand.
    pub torsion_reps: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientPieceReport {
    Field(FieldQuotientReport),
    Integer(IntegerQuotientReport),
}

impl GradedIdealPiece {
    pub fn new(ring: &PolyRing, generators: Vec<MultiPoly>, target_degree: u32) -> Result<Self> {
        let mut degrees = Vec::with_capacity(generators.len());
        for g in &generators {
            ring.check_compatible(g.ring())?;
            let d = g.degree();
            if let Some(d) = d {
                if !g.is_homogeneous(d) {
                    return Err(Error::NotHomogeneous { expected: d });
                }
            }
            degrees.push(d);
        }
        Ok(GradedIdealPiece { ring: ring.clone(), generators, degrees, target_degree })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn target_degree(&self) -> u32 {
        self.target_degree
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// `dim V_D`, the number of monomials of the target degree.
    pub fn ambient_dim(&self) -> usize {
        monomial_basis(self.nvars(), self.target_degree).len()
    }

    /// Same generators over another coefficient domain.
    pub fn change_domain(&self, domain: Domain) -> Result<Self> {
        let ring = self.ring.with_domain(domain);
        let gens = self.generators.iter().map(|g| g.change_domain(domain)).collect::<Result<Vec<_>>>()?;
        Self::new(&ring, gens, self.target_degree)
    }

    /// Columns `g_i * mu` as coordinate vectors over the target monomials.
    /// Column order: generator index, then cofactor monomial order.
    fn columns(&self) -> (Vec<Monomial>, Vec<Vec<(usize, Scalar)>>) {
        let basis = monomial_basis(self.nvars(), self.target_degree);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut cols = Vec::new();
        for (g, deg) in self.generators.iter().zip(&self.degrees) {
            let Some(deg) = *deg else { continue };
            if deg > self.target_degree {
                continue;
            }
            for mu in monomial_basis(self.nvars(), self.target_degree - deg) {
                let col = g
                    .terms()
                    .map(|(m, c)| (index[&m.mul(&mu)], c.clone()))
                    .collect();
                cols.push(col);
            }
        }
        (basis, cols)
    }

    pub fn multiplication_matrix(&self) -> MultiplicationMatrix {
        let (basis, cols) = self.columns();
        let dom = self.ring.domain();
        let (rows, ncols) = (basis.len(), cols.len());
        match dom {
            Domain::Integers => {
                let mut m = IntMatrix::zeros(rows, ncols);
                for (j, col) in cols.iter().enumerate() {
                    for (i, c) in col {
                        m.set(*i, j, dom.to_bigint(c).expect("integer coefficient"));
                    }
                }
                MultiplicationMatrix::Integer(m)
            }
            _ => {
                let mut data = vec![dom.zero(); rows * ncols];
                for (j, col) in cols.iter().enumerate() {
                    for (i, c) in col {
                        data[i * ncols + j] = c.clone();
                    }
                }
                MultiplicationMatrix::Field(FieldMatrix::new(dom, rows, ncols, data).expect("field domain"))
            }
        }
    }

    /// Dimension of the ideal piece over a field.
    pub fn ideal_dim(&self) -> Result<usize> {
        let dom = self.ring.domain();
        let (basis, cols) = self.columns();
        match dom {
            Domain::Integers => Err(Error::RequiresField(dom)),
            Domain::PrimeField(p) => {
                let (rows, n) = (basis.len(), cols.len());
                let mut a = vec![0u64; rows * n];
                for (j, col) in cols.iter().enumerate() {
                    for (i, c) in col {
                        if let Scalar::Modular(v) = c {
                            a[i * n + j] = *v;
                        }
                    }
                }
                Ok(rref_mod_p(&mut a, rows, n, p).len())
            }
            Domain::Rationals => {
                // Clearing denominators column by column keeps the rank.
                let mut m = IntMatrix::zeros(basis.len(), cols.len());
                for (j, col) in cols.iter().enumerate() {
                    let lcm = col.iter().fold(BigInt::one(), |acc, (_, c)| match c {
                        Scalar::Rational(r) => acc.lcm(r.denom()),
                        Scalar::Modular(_) => acc,
                    });
                    for (i, c) in col {
                        if let Scalar::Rational(r) = c {
                            let scaled: BigRational = r * BigRational::from_integer(lcm.clone());
                            m.set(*i, j, scaled.to_integer());
                        }
                    }
                }
                Ok(m.rank())
            }
        }
    }

    /// `dim_k (k[x]/I)_D` over a field.
    pub fn hilbert_function_quotient(&self) -> Result<usize> {
        Ok(self.ambient_dim() - self.ideal_dim()?)
    }

    pub fn field_report(&self) -> Result<FieldQuotientReport> {
        let ideal_dim = self.ideal_dim()?;
        let ambient_dim = self.ambient_dim();
        Ok(FieldQuotientReport { ambient_dim, ideal_dim, quotient_dim: ambient_dim - ideal_dim })
    }

    /// Monomials of the target degree that are not leading monomials of the
    /// ideal piece after row reduction in descending graded-lex order. They
    /// form a basis of the quotient piece.
    pub fn quotient_basis(&self) -> Result<Vec<Monomial>> {
        let dom = self.ring.domain();
        if !dom.is_field() {
            return Err(Error::RequiresField(dom));
        }
        let (basis, cols) = self.columns();
        let mut data = vec![dom.zero(); cols.len() * basis.len()];
        for (r, col) in cols.iter().enumerate() {
            for (i, c) in col {
                data[r * basis.len() + i] = c.clone();
            }
        }
        let products = FieldMatrix::new(dom, cols.len(), basis.len(), data)?;
        let pivots = products.rref_rank().pivot_cols;
        let mut is_pivot = vec![false; basis.len()];
        for p in pivots {
            is_pivot[p] = true;
        }
        Ok(basis.into_iter().zip(is_pivot).filter(|(_, p)| !p).map(|(m, _)| m).collect())
    }

    /// Cokernel of the integer multiplication matrix via Smith normal form.
    pub fn quotient_structure_z(&self) -> Result<IntegerQuotientReport> {
        let dom = self.ring.domain();
        if dom != Domain::Integers {
            return Err(Error::RequiresIntegers(dom));
        }
        let MultiplicationMatrix::Integer(m) = self.multiplication_matrix() else {
            unreachable!("integer domain yields an integer matrix");
        };
        let basis = monomial_basis(self.nvars(), self.target_degree);
        let dec = m.smith_with_left_transform();
        let mut torsion = Vec::new();
        let mut reps = Vec::new();
        for (i, d) in dec.snf.invariant_factors.iter().enumerate() {
            if d.is_one() {
                continue;
            }
            torsion.push(d.clone());
            // The class of monomial k in this summand is U[i][k] mod d; pick
            // the smallest monomial whose class is nonzero there.
            let k = (0..basis.len())
                .rev()
                .find(|&k| !dec.left.get(i, k).is_multiple_of(d))
                .expect("a unimodular transform has a row nonzero modulo d");
            reps.push(basis[k].clone());
        }
        Ok(IntegerQuotientReport {
            ambient_dim: basis.len(),
            ideal_rank: dec.snf.rank,
            free_rank: basis.len() - dec.snf.rank,
            torsion,
            torsion_reps: reps,
        })
    }

    /// Field or integer report depending on the ring's domain.
    pub fn report(&self) -> Result<QuotientPieceReport> {
        match self.ring.domain() {
            Domain::Integers => self.quotient_structure_z().map(QuotientPieceReport::Integer),
            _ => self.field_report().map(QuotientPieceReport::Field),
        }
    }
}

/// Whether the differential of `(p_0..p_4) -> p_0^2 + p_1 p_2 + p_3 p_4` is
/// surjective onto `V_{2m}` at the given point. Since the characteristic is
/// not 2 this is the statement that `(p_0, .., p_4)` contains all of `V_{2m}`.
pub fn jacobian_surjective(ps: &[MultiPoly]) -> Result<bool> {
    if ps.len() != 5 {
        return Err(Error::InvalidArgument(format!("expected five forms, got {}", ps.len())));
    }
    let ring = ps[0].ring().clone();
    if ring.domain().characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let Some(m) = ps.iter().find_map(MultiPoly::degree) else {
        return Ok(false);
    };
    for p in ps {
        if !p.is_homogeneous(m) {
            return Err(Error::NotHomogeneous { expected: m });
        }
    }
    let piece = GradedIdealPiece::new(&ring, ps.to_vec(), 2 * m)?;
    Ok(piece.hilbert_function_quotient()? == 0)
}

/// A uniformly random form of degree `deg`: coefficients uniform in `[0, p)`
/// over F_p, uniform integers in `[-10, 10]` over Q or Z.
pub fn random_form<R: Rng>(ring: &PolyRing, deg: u32, rng: &mut R) -> MultiPoly {
    let dom = ring.domain();
    let terms = monomial_basis(ring.nvars(), deg).into_iter().map(|m| {
        let c = match dom {
            Domain::PrimeField(p) => Scalar::Modular(rng.gen_range(0..p)),
            _ => dom.from_i64(rng.gen_range(-10..=10)),
        };
        (m, c)
    });
    ring.from_terms(terms)
}

/// RNG for trial `index` of a seeded experiment; independent of scheduling.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialSummary {
    pub nvars: usize,
    pub m: u32,
    pub trials: usize,
    pub successes: usize,
    pub ratio: f64,
    /// Per-trial outcomes in trial order.
    pub outcomes: Vec<bool>,
}

/// Samples five random degree-`m` forms per trial and records whether the
/// differential is surjective there.
pub fn generic_writability_trial(
    nvars: usize,
    m: u32,
    domain: Domain,
    trials: usize,
    seed: u64,
    mode: ExecMode,
) -> Result<TrialSummary> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    if domain.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if domain == Domain::Integers {
        return Err(Error::RequiresField(domain));
    }
    let ring = PolyRing::with_default_names(domain, nvars);
    let results = par::map_range(trials, mode, |t| {
        let mut rng = trial_rng(seed, t as u64);
        let ps: Vec<MultiPoly> = (0..5).map(|_| random_form(&ring, m, &mut rng)).collect();
        jacobian_surjective(&ps)
    });
    let outcomes = results.into_iter().collect::<Result<Vec<bool>>>()?;
    let successes = outcomes.iter().filter(|&&b| b).count();
    Ok(TrialSummary { nvars, m, trials, successes, ratio: successes as f64 / trials as f64, outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(domain: Domain, names: &[&str]) -> PolyRing {
        PolyRing::new(domain, names).unwrap()
    }

    fn piece(r: &PolyRing, gens: &[&str], deg: u32) -> GradedIdealPiece {
        let gens = gens.iter().map(|g| r.parse(g).unwrap()).collect();
        GradedIdealPiece::new(r, gens, deg).unwrap()
    }

    #[test]
    fn linear_forms_fill_degree_two() {
        let r = ring(Domain::Rationals, &["x", "y"]);
        let p = piece(&r, &["x", "y"], 2);
        let MultiplicationMatrix::Field(m) = p.multiplication_matrix() else { panic!() };
        assert_eq!((m.rows(), m.cols()), (3, 4));
        assert_eq!(m.rank(), 3);
        assert_eq!(p.hilbert_function_quotient().unwrap(), 0);
    }

    #[test]
    fn empty_generators() {
        let r = ring(Domain::Rationals, &["x", "y", "z"]);
        let p = GradedIdealPiece::new(&r, vec![], 3).unwrap();
        let MultiplicationMatrix::Field(m) = p.multiplication_matrix() else { panic!() };
        assert_eq!(m.cols(), 0);
        assert_eq!(p.hilbert_function_quotient().unwrap(), 10);
    }

    #[test]
    fn inhomogeneous_generator_rejected() {
        let r = ring(Domain::Rationals, &["x", "y"]);
        let g = r.parse("x^2 + y").unwrap();
        assert!(matches!(GradedIdealPiece::new(&r, vec![g], 3), Err(Error::NotHomogeneous { .. })));
    }

    #[test]
    fn quotient_basis_of_x_squared() {
        let r = ring(Domain::Rationals, &["x", "y"]);
        let basis = piece(&r, &["x^2"], 2).quotient_basis().unwrap();
        assert_eq!(basis, vec![Monomial::new(vec![1, 1]), Monomial::new(vec![0, 2])]);
    }

    #[test]
    fn full_piece_has_empty_basis() {
        let r = ring(Domain::PrimeField(7), &["x", "y"]);
        assert!(piece(&r, &["x", "y"], 3).quotient_basis().unwrap().is_empty());
    }

    #[test]
    fn integer_zero_ideal() {
        let r = ring(Domain::Integers, &["x", "y"]);
        let rep = GradedIdealPiece::new(&r, vec![], 1).unwrap().quotient_structure_z().unwrap();
        assert_eq!(rep.free_rank, 2);
        assert!(rep.torsion.is_empty());
    }

    #[test]
    fn integer_torsion_detected() {
        // (2x, y) in degree 1: Z^2 / <2x, y> = Z/2 generated by x.
        let r = ring(Domain::Integers, &["x", "y"]);
        let rep = piece(&r, &["2*x", "y"], 1).quotient_structure_z().unwrap();
        assert_eq!(rep.free_rank, 0);
        assert_eq!(rep.torsion, vec![BigInt::from(2)]);
        assert_eq!(rep.torsion_reps, vec![Monomial::new(vec![1, 0])]);
    }

    #[test]
    fn domain_errors() {
        let z = ring(Domain::Integers, &["x"]);
        assert!(matches!(piece(&z, &["x"], 1).hilbert_function_quotient(), Err(Error::RequiresField(_))));
        assert!(matches!(piece(&z, &["x"], 1).quotient_basis(), Err(Error::RequiresField(_))));
        let q = ring(Domain::Rationals, &["x"]);
        assert!(matches!(piece(&q, &["x"], 1).quotient_structure_z(), Err(Error::RequiresIntegers(_))));
    }

    #[test]
    fn jacobian_cases() {
        let r = ring(Domain::Rationals, &["x", "y", "z", "w"]);
        let gens: Vec<_> = ["x^2", "y^2", "z^2", "w^2", "x*y"].iter().map(|g| r.parse(g).unwrap()).collect();
        assert!(jacobian_surjective(&gens).unwrap());
        assert!(!jacobian_surjective(&vec![r.zero(); 5]).unwrap());
        let f2 = r.with_domain(Domain::PrimeField(2));
        assert_eq!(jacobian_surjective(&vec![f2.var(0); 5]), Err(Error::CharacteristicTwo));
    }

    #[test]
    fn zero_trials_rejected() {
        assert!(generic_writability_trial(4, 2, Domain::PrimeField(101), 0, 0, ExecMode::Sequential).is_err());
        assert_eq!(
            generic_writability_trial(4, 2, Domain::PrimeField(2), 3, 0, ExecMode::Sequential),
            Err(Error::CharacteristicTwo)
        );
    }

    #[test]
    fn trials_independent_of_mode() {
        let a = generic_writability_trial(4, 2, Domain::PrimeField(101), 6, 7, ExecMode::Sequential).unwrap();
        let b = generic_writability_trial(4, 2, Domain::PrimeField(101), 6, 7, ExecMode::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
