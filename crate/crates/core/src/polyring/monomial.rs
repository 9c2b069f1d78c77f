use serde::{Serialize, Serializer};
use smallvec::SmallVec;

type Exponents = SmallVec<[u32; 7]>;

/// Exponent vector of a monomial. Ordered graded-lexicographically with the
/// first variable largest, so `x0^2 > x0*x1 > x1^2 > x0 > 1`.
// Field order matters: the derived `Ord` compares degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { degree: exponents.iter().sum(), exps: Exponents::from_vec(exponents) }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Appends a variable with the given exponent.
    pub fn extended(&self, exponent: u32) -> Monomial {
        let mut e = self.exps.clone();
        e.push(exponent);
        Monomial { degree: self.degree + exponent, exps: e }
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.exps.as_slice().serialize(serializer)
    }
}

/// All monomials of total degree `deg` in `nvars` variables, largest first in
/// graded-lex order. There are `C(deg + nvars - 1, nvars - 1)` of them.
pub fn monomial_basis(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0u32; nvars];
    fill(&mut current, 0, deg, &mut out);
    out
}

fn fill(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let last = current.len() - 1;
    if pos == last {
        current[pos] = remaining;
        out.push(Monomial::new(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}
