//! Exponent tuples of standard-basis monomials.
//!
//! A monomial `τ_1^{m_1} ⋯ τ_n^{m_n}` is in normal form when `0 ≤ m_i < i`
//! for every `i`; in particular `m_1 = 0` always, so `τ_1` never appears.
//! There are `n!` such tuples. The mixed-radix value
//! `index = Σ_i m_i · (i−1)!` enumerates them `0 … n!−1`, and tuples
//! compare the way their indices do: by the *last* differing exponent
//! (`m_n` is the most significant digit).

use std::cmp::Ordering;

use crate::error::Error;

/// Exponent tuple of a standard-basis monomial; entry `i` (1-based) is the
/// exponent of `τ_i`, strictly below `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpVec {
    exps: Vec<u8>,
}

/// `n!`, the rank of the splitting algebra of a degree-`n` polynomial.
pub fn basis_size(n: usize) -> usize {
    (1..=n).product()
}

impl ExpVec {
    /// Validates `0 ≤ exps[i−1] < i` and builds the tuple.
    pub fn new(exps: Vec<u8>) -> Result<ExpVec, Error> {
        for (k, &e) in exps.iter().enumerate() {
            if (e as usize) > k {
                return Err(Error::Precondition(format!(
                    "exponent {e} of τ_{} exceeds bound {k}",
                    k + 1
                )));
            }
        }
        Ok(ExpVec { exps })
    }

    /// The unit monomial (all exponents zero).
    pub fn unit(n: usize) -> ExpVec {
        ExpVec { exps: vec![0; n] }
    }

    /// Number of variables `n`.
    pub fn len(&self) -> usize {
        self.exps.len()
    }

    /// Whether this tuple has zero variables (degree-0 algebra).
    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// The exponents, index `k` holding the exponent of `τ_{k+1}`.
    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    /// Exponent of `τ_i` (1-based).
    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i - 1]
    }

    /// Whether this is the unit monomial.
    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Mixed-radix index `Σ_i m_i · (i−1)!` in `0 … n!−1`.
    pub fn to_index(&self) -> usize {
        let mut idx = 0usize;
        let mut fact = 1usize;
        for (k, &e) in self.exps.iter().enumerate() {
            idx += e as usize * fact;
            fact *= k + 1;
        }
        idx
    }

    /// Inverse of [`ExpVec::to_index`].
    pub fn from_index(n: usize, mut idx: usize) -> ExpVec {
        let mut exps = Vec::with_capacity(n);
        for i in 1..=n {
            exps.push((idx % i) as u8);
            idx /= i;
        }
        debug_assert_eq!(idx, 0, "index out of range for degree {n}");
        ExpVec { exps }
    }
}

impl Ord for ExpVec {
    /// Orders tuples by mixed-radix index: compare exponents from the last
    /// variable down (`m_n` most significant).
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().rev().cmp(other.exps.iter().rev())
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_are_enforced() {
        assert!(ExpVec::new(vec![0, 1, 2]).is_ok());
        assert!(ExpVec::new(vec![1, 0, 0]).is_err()); // m_1 < 1
        assert!(ExpVec::new(vec![0, 2, 0]).is_err()); // m_2 < 2
        assert!(ExpVec::new(vec![]).is_ok()); // zero variables
    }

    #[test]
    fn index_roundtrip_and_order_agree() {
        for n in 0..=5 {
            let total = basis_size(n);
            let mut prev: Option<ExpVec> = None;
            for idx in 0..total {
                let e = ExpVec::from_index(n, idx);
                assert_eq!(e.to_index(), idx);
                assert!(ExpVec::new(e.exps().to_vec()).is_ok());
                if let Some(p) = prev {
                    assert!(p < e, "order must follow index");
                }
                prev = Some(e);
            }
        }
    }

    #[test]
    fn index_formula_known_values() {
        // (0,1,2): 0·1 + 1·1 + 2·2 = 5, the last basis monomial for n=3.
        assert_eq!(ExpVec::new(vec![0, 1, 2]).unwrap().to_index(), 5);
        assert_eq!(ExpVec::new(vec![0, 0, 0]).unwrap().to_index(), 0);
        assert_eq!(ExpVec::new(vec![0, 1, 0]).unwrap().to_index(), 1);
        assert_eq!(ExpVec::new(vec![0, 0, 1]).unwrap().to_index(), 2);
        assert_eq!(ExpVec::new(vec![0, 1, 1]).unwrap().to_index(), 3);
        assert_eq!(ExpVec::new(vec![0, 0, 2]).unwrap().to_index(), 4);
        assert_eq!(basis_size(3), 6);
        assert_eq!(basis_size(0), 1);
        assert_eq!(basis_size(6), 720);
    }
}
