//! Closed-form spectra of the all-ones hypermatrix and of `D_k(K_2)`, the
//! block-matrix reduction for dimension 2, and an NQZ power iteration for
//! the spectral radius of nonnegative symmetric hypermatrices.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{binomial_row, char_poly_exact, BigMatrix, Poly};
use crate::hypermatrix::SymmetricHypermatrix;

/// Relative tolerance for treating two eigenvalues as equal.
pub const MERGE_TOLERANCE: f64 = 1e-9;
/// Iteration cap for [`nqz_spectral_radius`].
pub const NQZ_MAX_ITERATIONS: usize = 10_000;
/// Largest `k` accepted by [`block_matrix_check`].
pub const BLOCK_CHECK_MAX_K: usize = 14;

#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub value: Complex64,
    pub multiplicity: BigRational,
}

impl Serialize for EigenPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EigenPair", 3)?;
        st.serialize_field("re", &self.value.re)?;
        st.serialize_field("im", &self.value.im)?;
        st.serialize_field("multiplicity", &self.multiplicity.to_string())?;
        st.end()
    }
}

/// A multiset of eigenvalues with merged, positive multiplicities, sorted by
/// real part then imaginary part.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Spectrum(Vec<EigenPair>);

fn tolerance(values: impl Iterator<Item = Complex64>) -> f64 {
    MERGE_TOLERANCE * (1.0 + values.map(|v| v.norm()).fold(0.0, f64::max))
}

impl Spectrum {
    /// Merges values within `1e-9 (1 + max modulus)` by summing their
    /// multiplicities; drops zero multiplicities.
    pub fn merge(pairs: Vec<EigenPair>) -> Spectrum {
        let tol = tolerance(pairs.iter().map(|p| p.value));
        let mut merged: Vec<EigenPair> = Vec::new();
        for p in pairs {
            match merged.iter_mut().find(|m| (m.value - p.value).norm() <= tol) {
                Some(m) => m.multiplicity += p.multiplicity,
                None => merged.push(p),
            }
        }
        merged.retain(|p| p.multiplicity.is_positive());
        let snap = |x: f64| if (x - x.round()).abs() <= tol { x.round() + 0.0 } else { x };
        for p in &mut merged {
            p.value = Complex64::new(snap(p.value.re), snap(p.value.im));
        }
        merged.sort_by(|a, b| {
            a.value
                .re
                .total_cmp(&b.value.re)
                .then(a.value.im.total_cmp(&b.value.im))
        });
        Spectrum(merged)
    }

    pub fn pairs(&self) -> &[EigenPair] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_multiplicity(&self) -> BigRational {
        self.0.iter().map(|p| p.multiplicity.clone()).sum()
    }

    /// Multiplicity of the cluster containing `value`, zero if absent.
    pub fn multiplicity_of(&self, value: Complex64) -> BigRational {
        let tol = tolerance(self.0.iter().map(|p| p.value).chain([value]));
        self.0
            .iter()
            .find(|p| (p.value - value).norm() <= tol)
            .map(|p| p.multiplicity.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Same values (within the merge tolerance) with equal multiplicities.
    pub fn approx_eq(&self, other: &Spectrum) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let tol = tolerance(self.0.iter().chain(&other.0).map(|p| p.value));
        let mut used = vec![false; other.len()];
        self.0.iter().all(|p| {
            let hit = other.0.iter().enumerate().position(|(i, q)| {
                !used[i] && q.multiplicity == p.multiplicity && (q.value - p.value).norm() <= tol
            });
            hit.map(|i| used[i] = true).is_some()
        })
    }

    pub fn shifted(&self, c: f64) -> Spectrum {
        Spectrum::merge(
            self.0
                .iter()
                .map(|p| EigenPair {
                    value: p.value + c,
                    multiplicity: p.multiplicity.clone(),
                })
                .collect(),
        )
    }

    pub fn spectral_radius(&self) -> f64 {
        self.0.iter().map(|p| p.value.norm()).fold(0.0, f64::max)
    }

    /// `Π (-λ)^m`, the constant term of the characteristic polynomial, or
    /// `None` if some multiplicity is not an integer.
    pub fn constant_term(&self) -> Option<Complex64> {
        let mut acc = Complex64::one();
        for p in &self.0 {
            if !p.multiplicity.is_integer() {
                return None;
            }
            let m = p.multiplicity.to_integer().to_u32()?;
            acc *= (-p.value).powu(m);
        }
        Some(acc)
    }
}

fn root_of_unity(j: usize, m: usize) -> Complex64 {
    Complex64::from_polar(1.0, TAU * (j % m) as f64 / m as f64)
}

/// Weak compositions of `n` into `parts` parts, in lexicographic order.
pub fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for r in 0..=left {
            cur.push(r);
            rec(left - r, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(n, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

fn multinomial(n: usize, r: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    let mut left = n;
    for &ri in r {
        acc *= &binomial_row(left)[ri];
        left -= ri;
    }
    acc
}

/// Characteristic polynomial of the all-ones hypermatrix `J_n^k` as a
/// merged eigenvalue multiset.
pub fn charpoly_allones(n: usize, k: usize) -> Result<Spectrum> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    let m = k - 1;
    let mut pairs = vec![EigenPair {
        value: Complex64::zero(),
        multiplicity: BigRational::from_integer(BigInt::from(n - 1) * BigInt::from(m).pow(n as u32 - 1)),
    }];
    for r in weak_compositions(n, m) {
        let base: Complex64 = r
            .iter()
            .enumerate()
            .map(|(j, &rj)| root_of_unity(j + 1, m) * rj as f64)
            .sum();
        pairs.push(EigenPair {
            value: base.powu(m as u32),
            multiplicity: BigRational::new(multinomial(n, &r), BigInt::from(m)),
        });
    }
    Ok(Spectrum::merge(pairs))
}

/// Eigenvalues of `D_k(K_2)`: `-1` with multiplicity `k-1` and
/// `(1 + ω^j)^(k-1) - 1` for `j = 0..k-2`, `ω = e^(2πi/(k-1))`.
pub fn eigenvalues_k2(k: usize) -> Result<Spectrum> {
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    let m = k - 1;
    let mut pairs = vec![EigenPair {
        value: Complex64::new(-1.0, 0.0),
        multiplicity: BigRational::from_integer(BigInt::from(m)),
    }];
    pairs.extend((0..m).map(|j| EigenPair {
        value: (root_of_unity(j, m) + 1.0).powu(m as u32) - 1.0,
        multiplicity: BigRational::one(),
    }));
    Ok(Spectrum::merge(pairs))
}

/// `charpoly_allones(2, k)` shifted by `-1`.
pub fn charpoly_d_dim2(k: usize) -> Result<Spectrum> {
    Ok(charpoly_allones(2, k)?.shifted(-1.0))
}

/// `2^(k-1) - 1`.
pub fn spectral_radius_k2(k: usize) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    Ok((BigInt::one() << (k - 1)) - 1)
}

/// Strictly upper triangular `(k-1) x (k-1)` band with `A[r][c] = C(k-1, c-r)`.
pub fn block_a(k: usize) -> BigMatrix {
    let m = k - 1;
    let binom = binomial_row(m);
    BigMatrix::from_fn(m, m, |r, c| if c > r { binom[c - r].clone() } else { BigInt::zero() })
}

/// Strictly lower triangular `(k-1) x (k-1)` band with `B[r][c] = C(k-1, r-c)`.
pub fn block_b(k: usize) -> BigMatrix {
    let m = k - 1;
    let binom = binomial_row(m);
    BigMatrix::from_fn(m, m, |r, c| if r > c { binom[r - c].clone() } else { BigInt::zero() })
}

/// `[[A, B + I], [A + I, B]]`.
pub fn block_matrix(k: usize) -> Result<BigMatrix> {
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    let (a, b) = (block_a(k), block_b(k));
    let id = BigMatrix::identity(k - 1);
    BigMatrix::block2(&a, &b.add(&id)?, &a.add(&id)?, &b)
}

/// Exact characteristic polynomial of the block matrix against the roots of
/// [`eigenvalues_k2`]: `(x+1)^(k-1)` must divide it exactly, and the monic
/// polynomial built from the remaining closed-form roots must match the
/// quotient coefficientwise.
pub fn block_matrix_check(k: usize) -> Result<bool> {
    if k > BLOCK_CHECK_MAX_K {
        return Err(Error::InvalidArgument(format!(
            "block_matrix_check supports k <= {BLOCK_CHECK_MAX_K}, got {k}"
        )));
    }
    let mut poly = char_poly_exact(&block_matrix(k)?)?;
    let minus_one = BigInt::from(-1);
    for _ in 0..k - 1 {
        let (q, rem) = poly.div_linear(&minus_one);
        if !rem.is_zero() {
            return Ok(false);
        }
        poly = q;
    }
    let m = k - 1;
    let roots: Vec<Complex64> = (0..m)
        .map(|j| (root_of_unity(j, m) + 1.0).powu(m as u32) - 1.0)
        .collect();
    Ok(coefficients_match(&poly, &roots))
}

fn coefficients_match(poly: &Poly, roots: &[Complex64]) -> bool {
    if poly.degree() != Some(roots.len()) {
        return false;
    }
    let mut num = vec![Complex64::one()];
    let mut scale = vec![1.0f64];
    for r in roots {
        let mut next = vec![Complex64::zero(); num.len() + 1];
        let mut next_scale = vec![0.0; num.len() + 1];
        for (i, c) in num.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
            next_scale[i + 1] += scale[i];
            next_scale[i] += scale[i] * r.norm();
        }
        num = next;
        scale = next_scale;
    }
    num.iter().zip(&scale).enumerate().all(|(i, (c, s))| {
        let exact = poly.coeff(i).to_f64().unwrap_or(f64::INFINITY);
        (c.re - exact).abs() <= MERGE_TOLERANCE * (1.0 + s) && c.im.abs() <= MERGE_TOLERANCE * (1.0 + s)
    })
}

/// Outcome of [`nqz_spectral_radius`]. `trace` holds the enclosure after
/// every iteration; `lo <= ρ(A) <= hi`.
#[derive(Clone, Debug, Serialize)]
pub struct NqzResult {
    pub radius: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
    #[serde(skip)]
    pub trace: Vec<(f64, f64)>,
}

/// Slack allowed for floating-point noise when asserting that the enclosure
/// never widens.
const MONOTONE_SLACK: f64 = 1e-12;

/// Spectral radius of a nonnegative symmetric hypermatrix by the NQZ power
/// iteration from the all-ones vector.
pub fn nqz_spectral_radius(a: &SymmetricHypermatrix, tol: f64) -> Result<NqzResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if !a.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    let n = a.dim();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let e = (a.order() - 1) as i32;
    let inv_e = 1.0 / e as f64;
    let mut x = vec![1.0f64; n];
    let mut trace = Vec::new();
    let (mut lo, mut hi) = (0.0, f64::INFINITY);
    for it in 1..=NQZ_MAX_ITERATIONS {
        let y = a.contract(&x)?;
        let ratios = y.iter().zip(&x).map(|(yi, xi)| yi / xi.powi(e));
        let (new_lo, new_hi) = ratios.fold((f64::INFINITY, 0.0f64), |(l, h), r| (l.min(r), h.max(r)));
        if !new_lo.is_finite() || new_lo <= 0.0 {
            return Err(Error::InvariantViolation(
                "iterate lost positivity; the hypermatrix is not weakly irreducible".into(),
            ));
        }
        if new_hi - new_lo > (hi - lo) + MONOTONE_SLACK * (1.0 + new_hi) {
            return Err(Error::InvariantViolation(format!(
                "enclosure widened at iteration {it}: [{lo}, {hi}] -> [{new_lo}, {new_hi}]"
            )));
        }
        lo = new_lo;
        hi = new_hi;
        trace.push((lo, hi));
        if hi - lo < tol {
            return Ok(NqzResult {
                radius: (lo + hi) / 2.0,
                lo,
                hi,
                iterations: it,
                trace,
            });
        }
        let mut next: Vec<f64> = y.iter().map(|v| v.powf(inv_e)).collect();
        let norm = next.iter().cloned().fold(0.0, f64::max);
        next.iter_mut().for_each(|v| *v /= norm);
        x = next;
    }
    Err(Error::NonConvergence {
        iterations: NQZ_MAX_ITERATIONS,
        lo,
        hi,
    })
}
