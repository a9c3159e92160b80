//! Sylvester-style hyperdeterminant for order-`k`, dimension-2 symmetric
//! hypermatrices.
//!
//! With profile `(a_0, …, a_k)`, the gradient system is the pair of binary
//! forms `f_1 = Σ C(k-1,t) a_t x^{k-1-t} y^t` and
//! `f_2 = Σ C(k-1,t) a_{t+1} x^{k-1-t} y^t`; the hyperdeterminant is their
//! Sylvester resultant.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{binomial_row, det_exact, BigMatrix};
use crate::hypermatrix::{SliceProfile, SymmetricHypermatrix};

/// The `2(k-1) x 2(k-1)` Sylvester matrix: `k-1` shifted copies of the
/// band `(a_0, C(k-1,1) a_1, …, a_{k-1})`, then `k-1` shifted copies of
/// `(a_1, C(k-1,1) a_2, …, a_k)`.
pub fn sylvester_matrix(p: &SliceProfile, k: usize) -> Result<BigMatrix> {
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    let a = p.values();
    if a.len() != k + 1 {
        return Err(Error::ProfileLength {
            expected: k + 1,
            found: a.len(),
        });
    }
    let binom = binomial_row(k - 1);
    let band = |offset: usize| -> Vec<BigInt> {
        (0..k)
            .map(|t| &binom[t] * BigInt::from(a[t + offset]))
            .collect()
    };
    let bands = [band(0), band(1)];
    let half = k - 1;
    let size = 2 * half;
    Ok(BigMatrix::from_fn(size, size, |i, j| {
        let (template, shift) = (&bands[i / half], i % half);
        j.checked_sub(shift)
            .and_then(|t| template.get(t))
            .cloned()
            .unwrap_or_default()
    }))
}

/// Exact hyperdeterminant of a dimension-2 symmetric hypermatrix.
pub fn hyperdet_dim2(a: &SymmetricHypermatrix) -> Result<BigInt> {
    let profile = a.dim2_profile()?;
    det_exact(&sylvester_matrix(&profile, a.order())?)
}
