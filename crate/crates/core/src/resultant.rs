//! Symmetric hyperdeterminants as Macaulay resultants of the gradient
//! system `A x^{k-1} = 0`.
//!
//! Monomials are laid out in graded lexicographic order (all of one degree,
//! so plain lex with `x_1 > x_2 > … > x_n`). The resultant is normalized so
//! that `Res(x_1^d, …, x_n^d) = 1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{det_exact, BigMatrix};
use crate::hypermatrix::SymmetricHypermatrix;
use crate::modular::{self, Crt, Field};
use crate::sylvester2::hyperdet_dim2;

/// Largest dimension handled by the Macaulay route.
pub const MAX_DIM: usize = 4;
/// Largest order handled by the Macaulay route.
pub const MAX_ORDER: usize = 6;
/// Change-of-variables attempts before the perturbed-family fallback.
pub const MAX_SUBSTITUTIONS: usize = 8;

/// Sign relating `det(M) / det(M')` to the hyperdeterminant, fixed by
/// calibration against the Sylvester route (`n = 2`) and the ordinary
/// determinant (`k = 2`).
pub const MACAULAY_SIGN: i32 = 1;

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// Homogeneous polynomial with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPoly {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Exponents, BigInt>,
}

impl HomogeneousPoly {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        HomogeneousPoly {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` terms; like terms
    /// are combined and every term must have total degree `degree`.
    pub fn from_terms(
        nvars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Exponents, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars, degree);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            if e.iter().sum::<u32>() != degree {
                return Err(Error::InvalidArgument(format!(
                    "term {e:?} is not of degree {degree}"
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &HomogeneousPoly) -> HomogeneousPoly {
        let mut out = HomogeneousPoly::zero(self.nvars, self.degree + other.degree);
        let mut acc: HashMap<Exponents, BigInt> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out
    }

    /// Polynomial `x ↦ self(T x)`.
    fn substitute(&self, forms: &[Vec<HomogeneousPoly>]) -> HomogeneousPoly {
        let mut out = HomogeneousPoly::zero(self.nvars, self.degree);
        for (e, c) in &self.terms {
            let mut term = HomogeneousPoly::from_terms(self.nvars, 0, [(vec![0; self.nvars], c.clone())])
                .expect("constant term");
            for (j, &power) in e.iter().enumerate() {
                if power > 0 {
                    term = term.mul(&forms[j][power as usize]);
                }
            }
            for (te, tc) in term.terms {
                out.add_term(te, tc);
            }
        }
        out
    }
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(i, &p)| {
                        if p == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, p)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    mono.join("*")
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `n` homogeneous polynomials of a common degree in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousSystem {
    polys: Vec<HomogeneousPoly>,
    degree: u32,
}

impl HomogeneousSystem {
    pub fn new(polys: Vec<HomogeneousPoly>) -> Result<Self> {
        let n = polys.len();
        if n == 0 {
            return Err(Error::Empty("homogeneous system"));
        }
        let degree = polys[0].degree;
        if degree == 0 {
            return Err(Error::InvalidArgument("polynomials must have degree >= 1".into()));
        }
        for p in &polys {
            if p.nvars != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.nvars,
                });
            }
            if p.degree != degree {
                return Err(Error::InvalidArgument(
                    "all polynomials must share one degree".into(),
                ));
            }
        }
        Ok(HomogeneousSystem { polys, degree })
    }

    pub fn nvars(&self) -> usize {
        self.polys.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn polys(&self) -> &[HomogeneousPoly] {
        &self.polys
    }

    /// The system `g_i = Σ_j c_ij f_j` for a square integer matrix `C`.
    pub fn combine(&self, c: &BigMatrix) -> Result<HomogeneousSystem> {
        let n = self.nvars();
        if c.rows() != n || c.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: c.rows(),
            });
        }
        let polys = (0..n)
            .map(|i| {
                let mut g = HomogeneousPoly::zero(n, self.degree);
                for (j, f) in self.polys.iter().enumerate() {
                    let cij = &c[(i, j)];
                    if cij.is_zero() {
                        continue;
                    }
                    for (e, coef) in f.terms() {
                        g.add_term(e.clone(), coef * cij);
                    }
                }
                g
            })
            .collect();
        HomogeneousSystem::new(polys)
    }

    /// The system `f_i(T x)` for a square integer matrix `T`.
    pub fn substitute(&self, t: &BigMatrix) -> Result<HomogeneousSystem> {
        let n = self.nvars();
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: t.rows(),
            });
        }
        // forms[j][p] = (row j of T · x)^p
        let forms: Vec<Vec<HomogeneousPoly>> = (0..n)
            .map(|j| {
                let linear = HomogeneousPoly::from_terms(
                    n,
                    1,
                    (0..n).map(|l| {
                        let mut e = vec![0; n];
                        e[l] = 1;
                        (e, t[(j, l)].clone())
                    }),
                )
                .expect("linear form");
                let mut powers = vec![HomogeneousPoly::from_terms(n, 0, [(vec![0; n], BigInt::one())])
                    .expect("unit")];
                for p in 1..=self.degree as usize {
                    let next = powers[p - 1].mul(&linear);
                    powers.push(next);
                }
                powers
            })
            .collect();
        HomogeneousSystem::new(self.polys.iter().map(|p| p.substitute(&forms)).collect())
    }
}

/// Polynomial `i` is coordinate `i` of `A x^{k-1}`.
pub fn gradient_system(a: &SymmetricHypermatrix) -> HomogeneousSystem {
    let n = a.dim();
    let plan = a.plan();
    let exponents: Vec<Exponents> = plan
        .monomials()
        .iter()
        .map(|m| {
            let mut e = vec![0u32; n];
            for &v in m {
                e[v] += 1;
            }
            e
        })
        .collect();
    let degree = (a.order() - 1) as u32;
    let polys = plan
        .coefficients()
        .iter()
        .map(|row| {
            HomogeneousPoly::from_terms(
                n,
                degree,
                exponents
                    .iter()
                    .zip(row)
                    .map(|(e, &c)| (e.clone(), BigInt::from(c))),
            )
            .expect("gradient terms are homogeneous")
        })
        .collect();
    HomogeneousSystem::new(polys).expect("gradient system is square")
}

/// Exponent vectors of total degree `d` in `n` variables, lex-descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponents> {
    fn rec(prefix: &mut Exponents, n: usize, left: u32, out: &mut Vec<Exponents>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(&mut Vec::with_capacity(n), n, d, &mut out);
    }
    out
}

/// Macaulay matrix at the critical degree with the index list of its
/// non-reduced monomials (divisible by `x_i^d` for two or more `i`).
#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    pub matrix: BigMatrix,
    pub nonreduced: Vec<usize>,
    pub monomials: Vec<Exponents>,
}

impl MacaulayMatrix {
    pub fn build(sys: &HomogeneousSystem) -> Self {
        let n = sys.nvars();
        let d = sys.degree;
        let critical = n as u32 * (d - 1) + 1;
        let monomials = monomials_of_degree(n, critical);
        let index: HashMap<&Exponents, usize> =
            monomials.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut matrix = BigMatrix::zeros(monomials.len(), monomials.len());
        let mut nonreduced = Vec::new();
        for (row, alpha) in monomials.iter().enumerate() {
            let divisible: Vec<usize> = (0..n).filter(|&i| alpha[i] >= d).collect();
            if divisible.len() >= 2 {
                nonreduced.push(row);
            }
            let i = divisible[0];
            let mut shift = alpha.clone();
            shift[i] -= d;
            for (beta, c) in sys.polys[i].terms() {
                let target: Exponents = shift.iter().zip(beta).map(|(s, b)| s + b).collect();
                matrix[(row, index[&target])] = c.clone();
            }
        }
        MacaulayMatrix {
            matrix,
            nonreduced,
            monomials,
        }
    }

    /// The minor on non-reduced rows and columns.
    pub fn extraneous_minor(&self) -> BigMatrix {
        self.matrix.select(&self.nonreduced, &self.nonreduced)
    }
}

fn check_cap(n: usize, degree: u32) -> Result<()> {
    if n > MAX_DIM || degree as usize + 1 > MAX_ORDER {
        return Err(Error::SizeCap(format!(
            "Macaulay route supports n <= {MAX_DIM} and k <= {MAX_ORDER} (degree <= {}); got n = {n}, k = {}",
            MAX_ORDER - 1,
            degree + 1
        )));
    }
    Ok(())
}

fn reduce_mod(f: &Field, m: &BigMatrix) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| f.reduce_big(v)).collect())
        .collect()
}

/// `det(M) / det(M')`, or `None` when the extraneous minor is singular.
/// Singularity is screened modulo a large prime before any exact work.
fn macaulay_ratio(sys: &HomogeneousSystem) -> Result<Option<BigRational>> {
    let mac = MacaulayMatrix::build(sys);
    let minor_matrix = mac.extraneous_minor();
    let f = Field::new(modular::primes().next().expect("a prime"));
    if modular::det(&f, reduce_mod(&f, &minor_matrix)) == 0 {
        return Ok(None);
    }
    let minor = det_exact(&minor_matrix)?;
    let full = det_exact(&mac.matrix)?;
    Ok(Some(BigRational::new(full * MACAULAY_SIGN, minor)))
}

/// `Res(f)` as the constant term of `C(u) = Res(f_i - u x_i^d)
/// = det(M - uI) / det(M' - uI)`, evaluated modulo enough primes to
/// recover it from the bound `|Res| <= R^(n d^(n-1))`, where `R` is the
/// largest coefficient 1-norm among the `f_i`.
fn perturbed_resultant(sys: &HomogeneousSystem) -> Result<BigInt> {
    let n = sys.nvars();
    let d = sys.degree;
    let mac = MacaulayMatrix::build(sys);
    let minor = mac.extraneous_minor();
    let r = sys
        .polys
        .iter()
        .map(|p| p.terms().values().map(|c| c.abs()).sum::<BigInt>())
        .max()
        .unwrap_or_default();
    let bezout = n as u32 * d.pow(n as u32 - 1);
    let bound = Pow::pow(r, bezout) * 2u32 + 1u32;
    let parity_flip = (mac.matrix.rows() - minor.rows()) % 2 == 1;
    let mut crt = Crt::new();
    for p in modular::primes() {
        if crt.modulus() > &bound {
            break;
        }
        let f = Field::new(p);
        let num = modular::charpoly(&f, reduce_mod(&f, &mac.matrix));
        let den = modular::charpoly(&f, reduce_mod(&f, &minor));
        let (quot, exact) = modular::div_monic(&f, &num, &den);
        if !exact {
            return Err(Error::InvariantViolation(
                "extraneous factor does not divide the Macaulay polynomial".into(),
            ));
        }
        let mut c0 = f.leave(quot.first().copied().unwrap_or(0));
        if parity_flip {
            c0 = (p - c0) % p;
        }
        crt.push(c0, p);
    }
    Ok(crt.symmetric() * MACAULAY_SIGN)
}

/// Resultant of a square homogeneous system by Macaulay's determinant
/// quotient.
///
/// When the extraneous minor is singular the system is replaced by
/// `f(T x)` for seeded random invertible integer matrices `T`, and the
/// quotient is divided by `det(T)^(d^n)`. If every substitution is
/// degenerate (gradient systems of symmetric hypermatrices with `n >= 3`
/// usually are), the resultant is read off the perturbed family
/// `f_i - u x_i^d` instead.
pub fn macaulay_resultant(sys: &HomogeneousSystem, seed: u64) -> Result<BigRational> {
    let n = sys.nvars();
    check_cap(n, sys.degree)?;
    if let Some(r) = macaulay_ratio(sys)? {
        return Ok(r);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = sys.degree;
    for _ in 0..MAX_SUBSTITUTIONS {
        let (t, det_t) = random_invertible(n, &mut rng)?;
        if let Some(r) = macaulay_ratio(&sys.substitute(&t)?)? {
            let scale = Pow::pow(det_t, d.pow(n as u32));
            return Ok(r / BigRational::from_integer(scale));
        }
    }
    Ok(BigRational::from_integer(perturbed_resultant(sys)?))
}

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> Result<(BigMatrix, BigInt)> {
    loop {
        let t = BigMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-2i64..=2)));
        let det = det_exact(&t)?;
        if !det.is_zero() {
            return Ok((t, det));
        }
    }
}

/// Which computation produced a hyperdeterminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Sylvester,
    MatrixDet,
    Macaulay,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Sylvester => "sylvester",
            Route::MatrixDet => "matrix-det",
            Route::Macaulay => "macaulay",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperdet {
    pub value: BigRational,
    pub route: Route,
}

/// Symmetric hyperdeterminant: the ordinary determinant for `k = 2`, the
/// Sylvester formula for `n = 2`, and the Macaulay resultant otherwise.
pub fn hyperdet(a: &SymmetricHypermatrix, seed: u64) -> Result<Hyperdet> {
    let k = a.order();
    let n = a.dim();
    if k == 2 {
        let m = BigMatrix::from_fn(n, n, |i, j| {
            BigInt::from(a.entry(&[i + 1, j + 1]).expect("in range"))
        });
        return Ok(Hyperdet {
            value: BigRational::from_integer(det_exact(&m)?),
            route: Route::MatrixDet,
        });
    }
    if n == 2 {
        return Ok(Hyperdet {
            value: BigRational::from_integer(hyperdet_dim2(a)?),
            route: Route::Sylvester,
        });
    }
    check_cap(n, (k - 1) as u32)?;
    Ok(Hyperdet {
        value: macaulay_resultant(&gradient_system(a), seed)?,
        route: Route::Macaulay,
    })
}

/// Checks `(n, k)` against the hyperdeterminant routes without computing.
pub fn hyperdet_supported(n: usize, k: usize) -> Result<()> {
    if k == 2 || n == 2 {
        return Ok(());
    }
    check_cap(n, k.saturating_sub(1) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::hypermatrix::build_steiner_hypermatrix;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn poly(n: usize, d: u32, terms: &[(&[u32], i64)]) -> HomogeneousPoly {
        HomogeneousPoly::from_terms(n, d, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
            .unwrap()
    }

    #[test]
    fn gradient_system_examples() {
        let k2 = Graph::path(2);
        let s = gradient_system(&build_steiner_hypermatrix(&k2, 2).unwrap());
        assert_eq!(s.polys()[0], poly(2, 1, &[(&[0, 1], 1)]));
        assert_eq!(s.polys()[1], poly(2, 1, &[(&[1, 0], 1)]));

        let j = SymmetricHypermatrix::all_ones(2, 3).unwrap();
        let s = gradient_system(&j);
        let square = poly(2, 2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        assert_eq!(s.polys(), &[square.clone(), square]);

        let s = gradient_system(&build_steiner_hypermatrix(&k2, 3).unwrap());
        assert_eq!(s.polys()[0], poly(2, 2, &[(&[1, 1], 2), (&[0, 2], 1)]));
        assert_eq!(s.polys()[1], poly(2, 2, &[(&[2, 0], 1), (&[1, 1], 2)]));
    }

    #[test]
    fn system_validation() {
        assert!(HomogeneousSystem::new(vec![]).is_err());
        assert!(HomogeneousSystem::new(vec![poly(2, 1, &[(&[1, 0], 1)])]).is_err());
        assert!(HomogeneousPoly::from_terms(2, 2, [(vec![1, 0], BigInt::one())]).is_err());
        let mixed = vec![poly(2, 1, &[(&[1, 0], 1)]), poly(2, 2, &[(&[2, 0], 1)])];
        assert!(HomogeneousSystem::new(mixed).is_err());
    }

    #[test]
    fn monomial_layout() {
        let m = monomials_of_degree(3, 2);
        assert_eq!(
            m,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        // (n, k) = (4, 4): critical degree 9, 220 monomials
        assert_eq!(monomials_of_degree(4, 9).len(), 220);
    }

    #[test]
    fn linear_resultant_is_the_determinant() {
        let s = HomogeneousSystem::new(vec![
            poly(2, 1, &[(&[0, 1], 1)]),
            poly(2, 1, &[(&[1, 0], 1)]),
        ])
        .unwrap();
        assert_eq!(macaulay_resultant(&s, 0).unwrap(), int(-1));
    }

    #[test]
    fn pure_powers_have_unit_resultant() {
        for n in 1..=4 {
            for d in 1..=3u32 {
                let polys = (0..n)
                    .map(|i| {
                        let mut e = vec![0; n];
                        e[i] = d;
                        poly(n, d, &[(&e, 1)])
                    })
                    .collect();
                let s = HomogeneousSystem::new(polys).unwrap();
                assert_eq!(macaulay_resultant(&s, 0).unwrap(), int(1), "n={n} d={d}");
            }
        }
    }

    /// Res((L x)_1^d, …, (L x)_n^d) = det(L)^(d^n), checked both with a
    /// regular extraneous minor and through the substitution fallback.
    #[test]
    fn powers_of_linear_forms() {
        let cases: [(Vec<Vec<i64>>, u32); 4] = [
            (vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 2]], 2),
            (vec![vec![2, 1, 0], vec![1, 1, 1], vec![0, 1, 1]], 3),
            (vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]], 2),
            (vec![vec![1, 1], vec![1, -1]], 3),
        ];
        for (l, d) in cases {
            let n = l.len();
            let lm = BigMatrix::from_rows(&l).unwrap();
            let pure = HomogeneousSystem::new(
                (0..n)
                    .map(|i| {
                        let mut e = vec![0; n];
                        e[i] = d;
                        poly(n, d, &[(&e, 1)])
                    })
                    .collect(),
            )
            .unwrap();
            let s = pure.substitute(&lm).unwrap();
            let expect = BigRational::from_integer(Pow::pow(det_exact(&lm).unwrap(), d.pow(n as u32)));
            assert_eq!(macaulay_resultant(&s, 3).unwrap(), expect, "L = {l:?}, d = {d}");
        }
    }

    #[test]
    fn small_hyperdeterminants() {
        let k2 = Graph::path(2);
        let d3 = build_steiner_hypermatrix(&k2, 3).unwrap();
        assert_eq!(macaulay_resultant(&gradient_system(&d3), 0).unwrap(), int(-3));
        let p3 = Graph::path(3);
        let h = hyperdet(&build_steiner_hypermatrix(&p3, 2).unwrap(), 0).unwrap();
        assert_eq!((h.value, h.route), (int(4), Route::MatrixDet));
        let h = hyperdet(&build_steiner_hypermatrix(&p3, 3).unwrap(), 0).unwrap();
        assert_eq!((h.value, h.route), (int(0), Route::Macaulay));
        let h = hyperdet(&build_steiner_hypermatrix(&k2, 7).unwrap(), 0).unwrap();
        assert_eq!((h.value, h.route), (int(0), Route::Sylvester));
        let h = hyperdet(&build_steiner_hypermatrix(&Graph::star(4), 3).unwrap(), 0).unwrap();
        assert_eq!(h.value, int(0));
    }

    #[test]
    fn perturbed_route_agrees_with_quotient() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut checked = 0;
        while checked < 12 {
            let n = rng.gen_range(2..=3);
            let d = rng.gen_range(1..=3);
            let polys = (0..n)
                .map(|_| {
                    let terms: Vec<(Exponents, i64)> = monomials_of_degree(n, d)
                        .into_iter()
                        .map(|e| (e, rng.gen_range(-3..=3)))
                        .collect();
                    HomogeneousPoly::from_terms(n, d, terms.iter().map(|(e, c)| (e.clone(), BigInt::from(*c))))
                        .unwrap()
                })
                .collect();
            let sys = HomogeneousSystem::new(polys).unwrap();
            let Some(direct) = macaulay_ratio(&sys).unwrap() else {
                continue;
            };
            assert_eq!(BigRational::from_integer(perturbed_resultant(&sys).unwrap()), direct);
            checked += 1;
        }
    }

    #[test]
    fn three_vertex_path_order_four() {
        let h = hyperdet(&build_steiner_hypermatrix(&Graph::path(3), 4).unwrap(), 0).unwrap();
        assert_eq!(h.value, int(8_023_601_152));
    }

    #[test]
    fn cap_is_enforced() {
        let d = build_steiner_hypermatrix(&Graph::path(5), 3).unwrap();
        let err = hyperdet(&d, 0).unwrap_err();
        assert!(matches!(err, Error::SizeCap(_)));
        assert!(err.to_string().contains("n <= 4"));
        assert!(hyperdet_supported(3, 7).is_err());
        assert!(hyperdet_supported(2, 30).is_ok());
        assert!(hyperdet_supported(9, 2).is_ok());
    }

    #[test]
    fn calibration_sign_is_consistent() {
        // n = 2 against Sylvester, k = 2 against the ordinary determinant
        let k2 = Graph::path(2);
        for k in 3..=5 {
            let d = build_steiner_hypermatrix(&k2, k).unwrap();
            let mac = macaulay_resultant(&gradient_system(&d), 0).unwrap();
            assert_eq!(mac, BigRational::from_integer(hyperdet_dim2(&d).unwrap()), "k = {k}");
        }
        for g in [Graph::path(3), Graph::star(4), Graph::path(4)] {
            let d = build_steiner_hypermatrix(&g, 2).unwrap();
            let mac = macaulay_resultant(&gradient_system(&d), 0).unwrap();
            assert_eq!(mac, hyperdet(&d, 0).unwrap().value);
        }
    }
}
