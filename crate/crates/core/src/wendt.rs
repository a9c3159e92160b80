//! Wendt's determinant and the vanishing classification for Steiner
//! distance hyperdeterminants of trees.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial_row, circulant, det_exact};

/// `W_m`: determinant of the `m x m` circulant with first row
/// `C(m,0), C(m,1), …, C(m,m-1)`, computed exactly.
pub fn wendt(m: usize) -> Result<BigInt> {
    if m < 1 {
        return Err(Error::InvalidArgument("Wendt's determinant needs m >= 1".into()));
    }
    let mut row = binomial_row(m);
    row.pop();
    det_exact(&circulant(&row)?)
}

/// Lehmer's criterion: `W_m = 0` iff `6 | m`.
pub fn lehmer_vanishes(m: usize) -> bool {
    m.is_multiple_of(6)
}

/// Which clause of the classification decided the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VanishingBranch {
    /// A single vertex.
    #[serde(rename = "n=1")]
    SingleVertex,
    /// Odd order on three or more vertices.
    #[serde(rename = "odd-k-n>=3")]
    OddOrderThreePlus,
    /// `k ≡ 1 (mod 6)` on the single edge.
    #[serde(rename = "k=1-mod-6-n=2")]
    EdgeOrderOneModSix,
    #[serde(rename = "nonvanishing")]
    Nonvanishing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingVerdict {
    pub k: usize,
    pub n: usize,
    pub vanishes: bool,
    pub branch: VanishingBranch,
}

/// Whether `det(D_k(T))` vanishes for a tree `T` on `n` vertices. Never
/// computes a determinant.
pub fn theorem1_vanishes(k: usize, n: usize) -> VanishingVerdict {
    let branch = if n == 1 {
        VanishingBranch::SingleVertex
    } else if n >= 3 && k % 2 == 1 {
        VanishingBranch::OddOrderThreePlus
    } else if n == 2 && k % 6 == 1 {
        VanishingBranch::EdgeOrderOneModSix
    } else {
        VanishingBranch::Nonvanishing
    };
    VanishingVerdict {
        k,
        n,
        vanishes: branch != VanishingBranch::Nonvanishing,
        branch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(wendt(1).unwrap(), BigInt::from(1));
        assert_eq!(wendt(2).unwrap(), BigInt::from(-3));
        assert_eq!(wendt(3).unwrap(), BigInt::from(28));
        assert_eq!(wendt(6).unwrap(), BigInt::from(0));
        assert!(wendt(0).is_err());
    }

    #[test]
    fn lehmer_examples() {
        assert!(lehmer_vanishes(6));
        assert!(lehmer_vanishes(12));
        assert!(!lehmer_vanishes(5));
    }

    #[test]
    fn wendt_zero_iff_lehmer() {
        for m in 1..=12 {
            assert_eq!(wendt(m).unwrap() == BigInt::from(0), lehmer_vanishes(m), "m = {m}");
        }
    }

    #[test]
    fn classifier_examples() {
        let v = theorem1_vanishes(5, 7);
        assert!(v.vanishes);
        assert_eq!(v.branch, VanishingBranch::OddOrderThreePlus);
        let v = theorem1_vanishes(7, 2);
        assert!(v.vanishes);
        assert_eq!(v.branch, VanishingBranch::EdgeOrderOneModSix);
        let v = theorem1_vanishes(4, 5);
        assert!(!v.vanishes);
        assert_eq!(v.branch, VanishingBranch::Nonvanishing);
        assert_eq!(theorem1_vanishes(4, 1).branch, VanishingBranch::SingleVertex);
        assert!(!theorem1_vanishes(3, 2).vanishes);
    }

    #[test]
    fn edge_branch_tracks_lehmer() {
        for k in 2..=40 {
            assert_eq!(theorem1_vanishes(k, 2).vanishes, lehmer_vanishes(k - 1));
        }
    }

    #[test]
    fn verdict_json_shape() {
        let json = serde_json::to_string(&theorem1_vanishes(7, 2)).unwrap();
        assert_eq!(
            json,
            r#"{"k":7,"n":2,"vanishes":true,"branch":"k=1-mod-6-n=2"}"#
        );
    }
}
