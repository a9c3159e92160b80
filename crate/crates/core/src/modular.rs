//! Word-size prime field arithmetic (Montgomery form), characteristic
//! polynomials modulo a prime, and Chinese remaindering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Odd prime modulus below 2^62 with Montgomery constants (R = 2^64).
#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    p: u64,
    /// -p^{-1} mod 2^64
    neg_inv: u64,
    /// R^2 mod p
    r2: u64,
}

impl Field {
    pub(crate) fn new(p: u64) -> Self {
        assert!(p % 2 == 1 && p < 1 << 62);
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Field {
            p,
            neg_inv: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline]
    fn reduce(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a as u128 * b as u128)
    }

    #[inline]
    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub(crate) fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub(crate) fn enter(&self, a: u64) -> u64 {
        self.mul(a % self.p, self.r2)
    }

    pub(crate) fn leave(&self, a: u64) -> u64 {
        self.reduce(a as u128)
    }

    pub(crate) fn reduce_big(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits");
        self.enter(r)
    }

    pub(crate) fn one(&self) -> u64 {
        self.enter(1)
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    // deterministic for all 64-bit n
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below 2^62 in decreasing order.
pub(crate) fn primes() -> impl Iterator<Item = u64> {
    let mut candidate = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while candidate > 3 {
            let c = candidate;
            candidate -= 2;
            if is_prime(c) {
                return Some(c);
            }
        }
        None
    })
}

/// `det(xI - a)` over the field, by reduction to upper Hessenberg form.
/// Input and output are in Montgomery form; coefficients ascend.
pub(crate) fn charpoly(f: &Field, mut h: Vec<Vec<u64>>) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(pivot) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if pivot != m {
            h.swap(pivot, m);
            for row in h.iter_mut() {
                row.swap(pivot, m);
            }
        }
        let inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            if h[i][m - 1] == 0 {
                continue;
            }
            let u = f.mul(h[i][m - 1], inv);
            // row_i -= u * row_m
            let (upper, lower) = h.split_at_mut(i);
            let (src, dst) = (&upper[m], &mut lower[0]);
            for j in m - 1..n {
                if src[j] != 0 {
                    dst[j] = f.sub(dst[j], f.mul(u, src[j]));
                }
            }
            // col_m += u * col_i
            for row in h.iter_mut() {
                if row[i] != 0 {
                    row[m] = f.add(row[m], f.mul(u, row[i]));
                }
            }
        }
    }
    let one = f.one();
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![one]);
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        let diag = h[m - 1][m - 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(diag, c));
        }
        let mut t = one;
        for i in 1..m {
            t = f.mul(t, h[m - i][m - i - 1]);
            if t == 0 {
                break;
            }
            let coef = f.mul(t, h[m - i - 1][m - 1]);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[m - i - 1].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 polynomials")
}

/// Determinant over the field by Gaussian elimination (Montgomery form).
pub(crate) fn det(f: &Field, mut a: Vec<Vec<u64>>) -> u64 {
    let n = a.len();
    let mut acc = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            acc = f.neg(acc);
        }
        acc = f.mul(acc, a[c][c]);
        let inv = f.inv(a[c][c]);
        let (upper, lower) = a.split_at_mut(c + 1);
        let pivot = &upper[c];
        for row in lower.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let u = f.mul(row[c], inv);
            for j in c..n {
                if pivot[j] != 0 {
                    row[j] = f.sub(row[j], f.mul(u, pivot[j]));
                }
            }
        }
    }
    acc
}

/// Exact quotient of `num` by the monic `den` (both ascending).
pub(crate) fn div_monic(f: &Field, num: &[u64], den: &[u64]) -> (Vec<u64>, bool) {
    let dn = den.len() - 1;
    if num.len() <= dn {
        return (Vec::new(), num.iter().all(|&c| c == 0));
    }
    let mut rem = num.to_vec();
    let mut q = vec![0u64; num.len() - dn];
    for i in (0..q.len()).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
    }
    (q, rem.iter().all(|&c| c == 0))
}

/// Incremental Chinese remaindering to a symmetric representative.
#[derive(Clone, Debug)]
pub(crate) struct Crt {
    value: BigInt,
    modulus: BigInt,
}

impl Crt {
    pub(crate) fn new() -> Self {
        Crt {
            value: BigInt::zero(),
            modulus: BigInt::one(),
        }
    }

    pub(crate) fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub(crate) fn push(&mut self, residue: u64, p: u64) {
        let pb = BigInt::from(p);
        let current = self.value.mod_floor(&pb);
        let diff = (BigInt::from(residue) - current).mod_floor(&pb);
        let m_mod_p = self.modulus.mod_floor(&pb);
        let inv = mod_inverse(&m_mod_p, &pb);
        let t = (diff * inv).mod_floor(&pb);
        self.value += &self.modulus * t;
        self.modulus *= pb;
    }

    /// Representative in `(-M/2, M/2]`.
    pub(crate) fn symmetric(&self) -> BigInt {
        let v = self.value.mod_floor(&self.modulus);
        if &v * 2 > self.modulus {
            v - &self.modulus
        } else {
            v
        }
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    let x = e.x.mod_floor(m);
    if x.is_negative() {
        x + m
    } else {
        x
    }
}
