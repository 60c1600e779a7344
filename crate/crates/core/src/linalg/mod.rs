//! Exact rank and right-kernel computations over `Q` and `F_p`.
//!
//! Over `F_p` a plain Gaussian RREF suffices. Over `Q` small systems go
//! through fraction-free (Bareiss) elimination; large ones through a
//! certified modular method: a single RREF mod a 62-bit prime gives a rank
//! lower bound, and Hensel-lifted, exactly verified kernel vectors give the
//! matching upper bound, so the reported rank is exact — never a heuristic.

mod bareiss;
mod modular;

use crate::field::{FieldSpec, Scalar};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Above this dimension, rational matrices switch from Bareiss elimination to
/// the certified modular path (Bareiss minors grow too fast past ~25 rows).
const BAREISS_LIMIT: usize = 24;

/// Dense matrix over a single exact field. Construction validates shape and
/// field homogeneity, so every stored matrix is well-formed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    /// Row-major construction. Errors: entry count != `rows * cols`, or any
    /// entry from a different field (malformed input).
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch);
        }
        if data.iter().any(|s| s.field() != field) {
            return Err(Error::MixedFields);
        }
        Ok(ExactMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch);
        }
        Self::new(field, nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one(field);
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub(crate) fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        ExactMatrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Matrix-vector product; panics on length mismatch (internal misuse).
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.field);
                for (j, vj) in v.iter().enumerate() {
                    acc = acc.add(&self.at(i, j).mul(vj));
                }
                acc
            })
            .collect()
    }

    pub fn mat_mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = ExactMatrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = out.at(i, j).add(&a.mul(other.at(k, j)));
                    *out.at_mut(i, j) = t;
                }
            }
        }
        out
    }

    /// Exact rank over the matrix's field.
    pub fn rank(&self) -> usize {
        self.rank_nullspace_impl(false).0
    }

    /// Basis of the exact right kernel; length `cols - rank`. Over `Q` the
    /// vectors are primitive integer vectors with positive leading entry;
    /// over `F_p` they follow the RREF free-column convention.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        self.rank_nullspace_impl(true).1
    }

    /// Rank and kernel in one pass (the kernel is what certifies the rank on
    /// the modular path, so asking for both costs no more than asking for
    /// either).
    pub fn rank_and_nullspace(&self) -> (usize, Vec<Vec<Scalar>>) {
        self.rank_nullspace_impl(true)
    }

    fn rank_nullspace_impl(&self, want_kernel: bool) -> (usize, Vec<Vec<Scalar>>) {
        match self.field {
            FieldSpec::Prime(p) => {
                let entries: Vec<u64> = self
                    .data
                    .iter()
                    .map(|s| s.as_residue().expect("prime-field entry"))
                    .collect();
                let (rank, kernel) = modular::rank_nullspace_fp(self.rows, self.cols, entries, p);
                let kernel = kernel
                    .into_iter()
                    .map(|v| {
                        v.into_iter()
                            .map(|x| Scalar::Mod { value: x, prime: p })
                            .collect()
                    })
                    .collect();
                (rank, kernel)
            }
            FieldSpec::Rationals => {
                let int_rows = self.integerized_rows();
                let (rank, kernel) = if self.rows.max(self.cols) <= BAREISS_LIMIT {
                    bareiss::rank_nullspace_int(&int_rows, self.cols)
                } else {
                    modular::rank_nullspace_int(&int_rows, self.cols)
                };
                let kernel = if want_kernel {
                    kernel
                        .into_iter()
                        .map(|v| {
                            v.into_iter()
                                .map(|x| Scalar::Rational(BigRational::from_integer(x)))
                                .collect()
                        })
                        .collect()
                } else {
                    Vec::new()
                };
                (rank, kernel)
            }
        }
    }

    /// Clears denominators row by row and divides out the row content; the
    /// result has the same rank and kernel as `self`.
    fn integerized_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut lcm = BigInt::one();
                for s in row {
                    let r = s.as_rational().expect("rational entry");
                    lcm = lcm.lcm(r.denom());
                }
                let mut ints: Vec<BigInt> = row
                    .iter()
                    .map(|s| {
                        let r = s.as_rational().unwrap();
                        r.numer() * (&lcm / r.denom())
                    })
                    .collect();
                let mut content = BigInt::zero();
                for v in &ints {
                    content = content.gcd(v);
                }
                if !content.is_zero() && !content.is_one() {
                    for v in &mut ints {
                        *v = &*v / &content;
                    }
                }
                ints
            })
            .collect()
    }
}

/// Normalizes an integer vector in place to the primitive representative with
/// positive leading nonzero entry. No-op on the zero vector.
pub(crate) fn normalize_primitive(v: &mut [BigInt]) {
    let mut content = BigInt::zero();
    for x in v.iter() {
        content = content.gcd(x);
    }
    if content.is_zero() {
        return;
    }
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            content = -content;
        }
    }
    if !content.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &content;
        }
    }
}

/// Gauss-Jordan inverse over the matrix's own field; `None` if singular.
/// Meant for the small square systems of the projective module.
pub(crate) fn invert(m: &ExactMatrix) -> Option<ExactMatrix> {
    assert_eq!(m.rows, m.cols, "inverse of a nonsquare matrix");
    let n = m.rows;
    let field = m.field;
    let mut a = m.clone();
    let mut inv = ExactMatrix::identity(field, n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
        if pivot != col {
            for j in 0..n {
                let tmp = a.at(pivot, j).clone();
                *a.at_mut(pivot, j) = a.at(col, j).clone();
                *a.at_mut(col, j) = tmp;
                let tmp = inv.at(pivot, j).clone();
                *inv.at_mut(pivot, j) = inv.at(col, j).clone();
                *inv.at_mut(col, j) = tmp;
            }
        }
        let scale = a.at(col, col).inv().expect("pivot nonzero");
        for j in 0..n {
            *a.at_mut(col, j) = a.at(col, j).mul(&scale);
            *inv.at_mut(col, j) = inv.at(col, j).mul(&scale);
        }
        for r in 0..n {
            if r == col || a.at(r, col).is_zero() {
                continue;
            }
            let factor = a.at(r, col).clone();
            for j in 0..n {
                let t = a.at(r, j).sub(&factor.mul(a.at(col, j)));
                *a.at_mut(r, j) = t;
                let t = inv.at(r, j).sub(&factor.mul(inv.at(col, j)));
                *inv.at_mut(r, j) = t;
            }
        }
    }
    Some(inv)
}

/// Solves the square system `A x = b` exactly; `None` if `A` is singular.
pub(crate) fn solve_square(a: &ExactMatrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let inv = invert(a)?;
    Some(inv.apply(b))
}
