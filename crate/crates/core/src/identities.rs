//! Localization identities and the exact-rational moment system.
//!
//! For data at dimension `n` the fixed-point formula forces the integers
//! `I_i = sum_p sign_p (-1)^(q_p) C_i(q_p)` to vanish for `0 <= i <= n - 1`;
//! [`check_identities`] evaluates all of them. The same constraints, gathered
//! by weight, form an `n x n` moment system whose coefficient matrix is a
//! signed Vandermonde matrix; [`solve_moments`] inverts it exactly over the
//! rationals, which pins the signed multiplicities to binomial multiples of
//! `m[0]`.
//!
//! No floating point is used anywhere in this module.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chern::{chern_c, chern_c_multi, power, MultiIndex};
use crate::data::IsotropyData;

/// A single term `coefficient * u^u_exponent` in the equivariant parameter.
///
/// The zero monomial is canonical: a zero coefficient always carries
/// `u_exponent = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentMonomial {
    coefficient: BigInt,
    u_exponent: i64,
}

impl LaurentMonomial {
    pub fn new(coefficient: BigInt, u_exponent: i64) -> LaurentMonomial {
        if coefficient.is_zero() {
            LaurentMonomial::zero()
        } else {
            LaurentMonomial {
                coefficient,
                u_exponent,
            }
        }
    }

    pub fn zero() -> LaurentMonomial {
        LaurentMonomial {
            coefficient: BigInt::zero(),
            u_exponent: 0,
        }
    }

    pub fn coefficient(&self) -> &BigInt {
        &self.coefficient
    }

    pub fn u_exponent(&self) -> i64 {
        self.u_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.u_exponent {
            0 => write!(f, "{}", self.coefficient),
            1 => write!(f, "{}*u", self.coefficient),
            e => write!(f, "{}*u^{}", self.coefficient, e),
        }
    }
}

/// Signed weighted sum over the multiplicity table:
/// `sum_j m[j] * (-1)^j * weight(j)`.
fn signed_weight_sum(d: &IsotropyData, weight: impl Fn(u32) -> BigInt) -> BigInt {
    let table = d.multiplicities();
    let mut total = BigInt::zero();
    for j in 0..=d.n() {
        let term = &table.m()[j as usize] * weight(j);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The identity value `I_i = sum_p sign_p (-1)^(q_p) C_i(q_p)`.
///
/// Realizable data must have `I_i = 0` for `i < n`; values at `i >= n` are
/// still meaningful (`I_n` is the signed point count, an Euler
/// characteristic).
pub fn identity_i(d: &IsotropyData, i: u32) -> BigInt {
    let n = d.n();
    signed_weight_sum(d, |j| chern_c(n, j, i))
}

/// The moment `Q_k = sum_p sign_p (-1)^(q_p) q_p^k`, with `0^0 = 1`.
pub fn moment_q(d: &IsotropyData, k: u32) -> BigInt {
    signed_weight_sum(d, |j| power(j, k))
}

/// The fixed-point sum for a product of Chern classes, as a single monomial
/// in `u`: coefficient `sum_p sign_p (-1)^(q_p) prod_l C_{i_l}(q_p)` and
/// exponent `degree(I) - n` (normalized to the canonical zero when the
/// coefficient vanishes).
///
/// For a single index `(i)` the coefficient equals [`identity_i`].
pub fn localization_value(d: &IsotropyData, index: &MultiIndex) -> LaurentMonomial {
    let n = d.n();
    let coefficient = signed_weight_sum(d, |j| chern_c_multi(n, j, index));
    LaurentMonomial::new(coefficient, index.degree() as i64 - n as i64)
}

/// Residuals `I_0, ..., I_(n-1)` of one data value, with the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    n: u32,
    residuals: Vec<BigInt>,
}

impl IdentityReport {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `residuals()[i]` is the value of `I_i`, for `i = 0..n`.
    pub fn residuals(&self) -> &[BigInt] {
        &self.residuals
    }

    /// True iff every residual vanishes (vacuously true for `n = 0`).
    pub fn satisfied(&self) -> bool {
        self.residuals.iter().all(|r| r.is_zero())
    }

    /// Indices with nonzero residuals.
    pub fn violations(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.residuals
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(i, r)| (i as u32, r))
    }
}

/// Evaluates every identity `I_i` for `0 <= i <= n - 1`. All residuals are
/// computed (no short-circuit) so the report is complete for diagnostics.
pub fn check_identities(d: &IsotropyData) -> IdentityReport {
    let n = d.n();
    let residuals = (0..n).map(|i| identity_i(d, i)).collect();
    IdentityReport { n, residuals }
}

/// A dense matrix of exact rational numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> RationalMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RationalMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigRational {
        assert!(row < self.rows && col < self.cols);
        &self.entries[row * self.cols + col]
    }

    /// Determinant by fraction-free (Bareiss) elimination: denominators are
    /// cleared row by row, the elimination stays in the integers, and the
    /// accumulated scale is divided back out at the end.
    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigRational::one();
        }

        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut denom = BigInt::one();
            for c in 0..n {
                denom *= self.entry(r, c).denom();
            }
            let row = (0..n)
                .map(|c| {
                    let q = self.entry(r, c);
                    q.numer() * exact_div(denom.clone(), q.denom())
                })
                .collect();
            scale *= &denom;
            a.push(row);
        }

        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return BigRational::zero(),
                }
            }
            for i in k + 1..n {
                for c in k + 1..n {
                    let t = &a[i][c] * &a[k][k] - &a[i][k] * &a[k][c];
                    a[i][c] = exact_div(t, &prev);
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }

        let det = if negate {
            -a[n - 1][n - 1].clone()
        } else {
            a[n - 1][n - 1].clone()
        };
        BigRational::new(det, scale)
    }

    /// Solves `self * x = rhs` by rational Gaussian elimination.
    /// Returns `None` when the matrix is singular.
    pub fn solve(&self, rhs: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(self.rows, self.cols, "solve requires a square matrix");
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let n = self.rows;
        let mut aug: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                let mut row: Vec<BigRational> =
                    (0..n).map(|c| self.entry(r, c).clone()).collect();
                row.push(rhs[r].clone());
                row
            })
            .collect();

        for col in 0..n {
            let pivot_index = (col..n).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, pivot_index);
            let pivot = aug[col][col].clone();
            for entry in aug[col].iter_mut().skip(col) {
                *entry = &*entry / &pivot;
            }
            let pivot_row = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    let delta = &factor * p;
                    *entry = &*entry - &delta;
                }
            }
        }
        Some(aug.into_iter().map(|row| row[n].clone()).collect())
    }
}

fn exact_div(numerator: BigInt, denominator: &BigInt) -> BigInt {
    let remainder = &numerator % denominator;
    debug_assert!(remainder.is_zero(), "inexact division in elimination");
    numerator / denominator
}

/// The `n x n` moment-system matrix with entry `(-1)^(j-1) j^i` at row
/// `i = 0..n-1`, column `j = 1..n`.
pub fn moment_matrix(n: u32) -> RationalMatrix {
    assert!(n >= 1, "moment matrix requires n >= 1");
    RationalMatrix::from_fn(n as usize, n as usize, |i, c| {
        let j = c as u32 + 1;
        let value = power(j, i as u32);
        let value = if c % 2 == 0 { value } else { -value };
        BigRational::from_integer(value)
    })
}

/// Determinant of [`moment_matrix`], a signed Vandermonde determinant on the
/// nodes `1..n`; nonzero for every `n >= 1`.
pub fn vandermonde_det(n: u32) -> BigRational {
    moment_matrix(n).determinant()
}

/// The unique exact solution `(m_1, ..., m_n)` of the moment system with
/// right-hand side `(m0, 0, ..., 0)`; equals `(C(n,j) * m0)_j`.
pub fn solve_moments(n: u32, m0: &BigInt) -> Vec<BigRational> {
    assert!(n >= 1, "solve_moments requires n >= 1");
    let mut rhs = vec![BigRational::zero(); n as usize];
    rhs[0] = BigRational::from_integer(m0.clone());
    moment_matrix(n)
        .solve(&rhs)
        .expect("moment matrix is invertible")
}
