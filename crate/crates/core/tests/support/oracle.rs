//! Independent high-precision oracle: Wendt's determinant as the product of
//! circulant eigenvalues `(1 + ω^j)^m - 1`, evaluated with 320-bit floats.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;

const P: usize = 320;
const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Clone)]
struct Complex {
    re: BigFloat,
    im: BigFloat,
}

impl Complex {
    fn real(x: BigFloat) -> Self {
        Complex {
            re: x,
            im: BigFloat::from_word(0, P),
        }
    }

    fn mul(&self, o: &Complex) -> Complex {
        let re = self.re.mul(&o.re, P, RM).sub(&self.im.mul(&o.im, P, RM), P, RM);
        let im = self.re.mul(&o.im, P, RM).add(&self.im.mul(&o.re, P, RM), P, RM);
        Complex { re, im }
    }

    fn add_real(&self, x: &BigFloat) -> Complex {
        Complex {
            re: self.re.add(x, P, RM),
            im: self.im.clone(),
        }
    }

    fn powu(&self, mut e: usize) -> Complex {
        let mut acc = Complex::real(BigFloat::from_word(1, P));
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// `Π_{j<m} ((1 + e^(2πij/m))^m - 1)` with 320-bit precision.
fn wendt_product(m: usize) -> Complex {
    let mut cc = Consts::new().expect("constants cache");
    let one = BigFloat::from_word(1, P);
    let minus_one = one.neg();
    let two_pi = cc.pi(P, RM).mul(&BigFloat::from_word(2, P), P, RM);
    let mut acc = Complex::real(one.clone());
    for j in 0..m {
        let theta = two_pi
            .mul(&BigFloat::from_word(j as u64, P), P, RM)
            .div(&BigFloat::from_word(m as u64, P), P, RM);
        let w = Complex {
            re: theta.cos(P, RM, &mut cc),
            im: theta.sin(P, RM, &mut cc),
        };
        let factor = w.add_real(&one).powu(m).add_real(&minus_one);
        acc = acc.mul(&factor);
    }
    acc
}

fn to_bigfloat(v: &BigInt) -> BigFloat {
    let mut cc = Consts::new().expect("constants cache");
    BigFloat::parse(&v.to_string(), Radix::Dec, P, RM, &mut cc)
}

/// Whether `candidate` is the integer nearest the oracle product and the
/// product's imaginary part is negligible.
pub fn wendt_oracle_agrees(m: usize, candidate: &BigInt) -> bool {
    let prod = wendt_product(m);
    let half = BigFloat::from_f64(0.5, P);
    let diff = prod.re.sub(&to_bigfloat(candidate), P, RM).abs();
    diff.cmp(&half) == Some(-1) && prod.im.abs().cmp(&half) == Some(-1)
}

