//! Exact combinatorics for elementary-symmetric Chern quantities.
//!
//! Everything here is integer arithmetic: extended binomial coefficients
//! (polynomial in the upper argument, so negative arguments are fine), the
//! values `C_i(j)` of the i-th elementary symmetric polynomial on `n - j`
//! ones and `j` minus-ones, products over multi-indices, and the alternating
//! binomial sums `D_i` that make the binomial multiplicity pattern the unique
//! solution of the moment system.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

/// A finite list of positive indices; the empty list stands for the trivial
/// product `c_() = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    entries: Vec<u32>,
}

impl MultiIndex {
    /// Validates that every entry is positive.
    pub fn new(entries: impl Into<Vec<u32>>) -> Result<MultiIndex, Error> {
        let entries = entries.into();
        if let Some(index) = entries.iter().position(|&e| e == 0) {
            return Err(Error::ZeroMultiIndexEntry { index });
        }
        Ok(MultiIndex { entries })
    }

    /// The empty multi-index, of degree zero.
    pub fn empty() -> MultiIndex {
        MultiIndex::default()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Sum of the entries.
    pub fn degree(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }
}

/// Extended binomial coefficient `j choose k` via the falling factorial
/// `j (j-1) ... (j-k+1) / k!`, which is a polynomial in `j` and therefore
/// defined for any integer `j`. Equals `1` for `k = 0` and `0` for
/// `0 <= j < k`. The division by `k!` is asserted to be exact.
pub fn ext_binom(j: i64, k: u32) -> BigInt {
    let mut numerator = BigInt::one();
    for l in 0..k as i64 {
        numerator *= BigInt::from(j - l);
    }
    let mut factorial = BigInt::one();
    for l in 1..=k as u64 {
        factorial *= BigInt::from(l);
    }
    let remainder = &numerator % &factorial;
    assert!(remainder.is_zero(), "falling factorial not divisible by k!");
    numerator / factorial
}

/// Ordinary binomial coefficient `n choose k` for nonnegative arguments.
pub fn binomial(n: u32, k: u32) -> BigInt {
    ext_binom(n as i64, k)
}

/// `C_i(j)`: the i-th elementary symmetric polynomial evaluated on `n - j`
/// ones and `j` minus-ones, via the closed form
/// `sum_k (n-j choose i-k) (j choose k) (-1)^k`. Vanishes for `i > n`.
pub fn chern_c(n: u32, j: u32, i: u32) -> BigInt {
    assert!(j <= n, "chern_c: j = {j} out of range for n = {n}");
    let mut total = BigInt::zero();
    for k in 0..=i {
        let term = ext_binom((n - j) as i64, i - k) * ext_binom(j as i64, k);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Independent evaluation of `C_i(j)`: expands the generating product
/// `(1 + y)^(n-j) (1 - y)^j` and extracts the coefficient of `y^i`.
pub fn chern_c_oracle(n: u32, j: u32, i: u32) -> BigInt {
    assert!(j <= n, "chern_c_oracle: j = {j} out of range for n = {n}");
    let mut coeffs = vec![BigInt::one()];
    for factor in 0..n {
        let negate = factor >= n - j;
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (deg, c) in coeffs.iter().enumerate() {
            next[deg] += c;
            if negate {
                next[deg + 1] -= c;
            } else {
                next[deg + 1] += c;
            }
        }
        coeffs = next;
    }
    coeffs.get(i as usize).cloned().unwrap_or_default()
}

/// Product `prod_l C_{i_l}(j)` over a multi-index; the empty index gives 1.
pub fn chern_c_multi(n: u32, j: u32, index: &MultiIndex) -> BigInt {
    let mut total = BigInt::one();
    for &i in index.entries() {
        total *= chern_c(n, j, i);
    }
    total
}

/// `D_i = sum_j (-1)^j (n choose j) j^i`, with `0^0 = 1`. Vanishes for
/// `i < n`; equals `(-1)^n n!` at `i = n`.
pub fn binomial_d(n: u32, i: u32) -> BigInt {
    let mut total = BigInt::zero();
    for j in 0..=n {
        let term = binomial(n, j) * power(j, i);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The i-th derivative of `(1 + x)^n` at `x = -1`, written as
/// `sum_j (n choose j) (-1)^(j-i) * j (j-1) ... (j-i+1)`. Vanishes for
/// `i < n`.
pub fn binomial_derivative_residual(n: u32, i: u32) -> BigInt {
    let mut total = BigInt::zero();
    for j in 0..=n {
        let mut falling = BigInt::one();
        for l in 0..i as i64 {
            falling *= BigInt::from(j as i64 - l);
        }
        let term = binomial(n, j) * falling;
        if (j + i).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `base^exp` with the convention `0^0 = 1`.
pub(crate) fn power(base: u32, exp: u32) -> BigInt {
    let mut total = BigInt::one();
    for _ in 0..exp {
        total *= BigInt::from(base);
    }
    total
}
