//! Elements of the splitting algebra in normal form.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::ring::RingElem;
use crate::splitalg::expvec::{basis_size, ExpVec};

/// An element of the splitting algebra, stored sparsely as a finitely
/// supported map from standard-basis monomials to *nonzero* coefficients.
///
/// Canonical: two elements are equal iff supports and coefficients
/// coincide, which the map representation gives for free.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgElem {
    terms: BTreeMap<ExpVec, RingElem>,
}

impl AlgElem {
    /// Wraps a coefficient map; callers must have removed zero
    /// coefficients already (debug-checked).
    pub(crate) fn from_map(terms: BTreeMap<ExpVec, RingElem>) -> AlgElem {
        debug_assert!(
            terms.values().all(|c| !c.is_zero()),
            "zero coefficients must be dropped"
        );
        AlgElem { terms }
    }

    /// The zero element (of any algebra).
    pub fn zero() -> AlgElem {
        AlgElem::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Support/coefficient pairs in mixed-radix index order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &RingElem)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial, if nonzero.
    pub fn coeff(&self, e: &ExpVec) -> Option<&RingElem> {
        self.terms.get(e)
    }

    /// Coefficient of the unit monomial, if nonzero.
    pub fn constant_part(&self) -> Option<&RingElem> {
        self.terms
            .first_key_value()
            .filter(|(e, _)| e.is_unit())
            .map(|(_, c)| c)
    }

    /// Whether the support is contained in the unit monomial, i.e. the
    /// element lies in the base ring (true for zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(ExpVec::is_unit)
    }

    pub(crate) fn map(&self) -> &BTreeMap<ExpVec, RingElem> {
        &self.terms
    }
}

impl fmt::Display for AlgElem {
    /// Canonical element format: terms in mixed-radix index order joined
    /// by ` + `; each term `c*t2^e2*t3^e3*…` with zero exponents and unit
    /// coefficients omitted; the unit monomial prints as the bare
    /// coefficient; `0` for the zero element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                if e.is_unit() {
                    return c.to_string();
                }
                let vars: Vec<String> = e
                    .exps()
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(k, &m)| format!("t{}^{}", k + 1, m))
                    .collect();
                let mono = vars.join("*");
                if c.is_one() {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Rebuilds an element from one factor's dense coefficient row (length
/// `n!`, columns in mixed-radix order); coefficients become single-residue
/// ring elements. Used to display per-factor basis rows.
pub fn elem_from_dense_row(n: usize, row: &[u64]) -> Result<AlgElem, Error> {
    if row.len() != basis_size(n) {
        return Err(Error::DimensionMismatch(format!(
            "dense row has {} entries, expected {}!  = {}",
            row.len(),
            n,
            basis_size(n)
        )));
    }
    let mut terms = BTreeMap::new();
    for (idx, &v) in row.iter().enumerate() {
        if v != 0 {
            terms.insert(ExpVec::from_index(n, idx), RingElem::from_raw(vec![v]));
        }
    }
    Ok(AlgElem::from_map(terms))
}
