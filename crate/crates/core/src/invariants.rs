//! Invariant modules `A_f^G`, the n = 2 closed form, triviality tests for
//! transposition groups, the annihilator condition governing the main
//! theorem, and the stability products `2x, D_f·x ∈ A`.

use std::collections::HashMap;

use crate::error::Error;
use crate::modlinalg::{howell_form, in_row_span, kernel, HowellBasis, MatrixOverFactor};
use crate::ring::{Ideal, RingElem};
use crate::splitalg::{elem_from_dense_row, AlgElem, Perm, SplitAlg};

/// The module of `G`-invariant elements, as one Howell basis per ring
/// factor; rows are dense coefficient sequences of length `n!` (columns in
/// mixed-radix order). Since Howell bases are canonical, two invariant
/// modules over the same algebra are equal iff the values are `==`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantModule {
    degree: usize,
    bases: Vec<HowellBasis>,
}

impl InvariantModule {
    /// The per-factor Howell bases, in ring-factor order.
    pub fn factor_bases(&self) -> &[HowellBasis] {
        &self.bases
    }

    /// Rank (number of basis rows) per ring factor.
    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(HowellBasis::rank).collect()
    }

    /// The polynomial degree `n` of the underlying algebra.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Whether the module is exactly the base-ring constants: every factor
    /// basis must be precisely `{(1, 0, …, 0)}` (canonicity of Howell
    /// bases makes this a syntactic check).
    pub fn is_constants_only(&self) -> bool {
        self.bases.iter().all(|b| {
            b.rank() == 1 && {
                let row = &b.rows()[0];
                row[0] == 1 && row[1..].iter().all(|&x| x == 0)
            }
        })
    }

    /// Membership: `x` lies in the module iff its dense row lies in the
    /// row span for every ring factor.
    pub fn contains(&self, alg: &SplitAlg, x: &AlgElem) -> Result<bool, Error> {
        let rows = alg.dense_rows(x);
        if rows.len() != self.bases.len() {
            return Err(Error::DimensionMismatch(
                "element and module have different factor counts".into(),
            ));
        }
        for (row, basis) in rows.iter().zip(&self.bases) {
            if !in_row_span(row, basis)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A basis row as an element (coefficients in the single given
    /// factor), for display and reporting.
    pub fn row_elem(&self, factor: usize, row: usize) -> Result<AlgElem, Error> {
        elem_from_dense_row(self.degree, &self.bases[factor].rows()[row])
    }
}

/// Computes `A_f^G` for the subgroup generated by `generators` by exact
/// linear algebra: for each generator `g`, the `n!×n!` matrix of
/// `act(g, ·) − id` (columns are images of basis monomials minus
/// themselves); the blocks are stacked and the kernel taken per ring
/// factor. For `G = S_n` pass the adjacent transpositions.
pub fn invariant_module(alg: &SplitAlg, generators: &[Perm]) -> Result<InvariantModule, Error> {
    let n = alg.degree();
    let nb = alg.basis_size();
    let nf = alg.ring().num_factors();
    let moduli = alg.ring().factors().to_vec();
    let mut stacked: Vec<Vec<Vec<u64>>> = vec![Vec::new(); nf];
    for g in generators {
        if g.degree() != n {
            return Err(Error::DegreeMismatch(format!(
                "generator {g} has degree {}, algebra has degree {n}",
                g.degree()
            )));
        }
        // image of each basis monomial, as per-factor dense columns
        let mut cols: Vec<Vec<Vec<u64>>> = Vec::with_capacity(nb);
        for c in 0..nb {
            let img = alg.act(g, &alg.basis_monomial(c))?;
            cols.push(alg.dense_rows(&img));
        }
        for (f, target) in stacked.iter_mut().enumerate() {
            let m = moduli[f];
            let mut block = vec![vec![0u64; nb]; nb];
            for (c, col) in cols.iter().enumerate() {
                for (r, &val) in col[f].iter().enumerate() {
                    block[r][c] = val;
                }
                block[c][c] = (block[c][c] + m - 1) % m;
            }
            target.extend(block);
        }
    }
    let mut bases = Vec::with_capacity(nf);
    for (f, rows) in stacked.into_iter().enumerate() {
        let mat = MatrixOverFactor::from_rows(moduli[f], nb, rows)?;
        bases.push(kernel(&mat));
    }
    Ok(InvariantModule { degree: n, bases })
}

/// The closed form for `n = 2`: `A_f^{S_2} = A ⊕ (Ann 2 ∩ Ann(τ_1+τ_2))·τ_2`,
/// assembled directly from the annihilator intersection (whose generator
/// per factor spans the τ₂-column). Independent of [`invariant_module`] so
/// the two can verify each other.
pub fn s2_closed_form(alg: &SplitAlg) -> Result<InvariantModule, Error> {
    if alg.degree() != 2 {
        return Err(Error::DegreeMismatch(format!(
            "closed form applies to degree 2, not {}",
            alg.degree()
        )));
    }
    let ring = alg.ring();
    let two = ring.from_int(2);
    let inter = ring
        .ann(&two)
        .intersect(&ring.ann(&alg.d_f()))
        .expect("ideals share the ring");
    let mut bases = Vec::with_capacity(ring.num_factors());
    for (f, &m) in ring.factors().iter().enumerate() {
        let d = inter.generators()[f];
        let mut rows = vec![vec![1u64, 0]];
        if d != 0 {
            rows.push(vec![0, d]);
        }
        bases.push(howell_form(&MatrixOverFactor::from_rows(m, 2, rows)?));
    }
    Ok(InvariantModule { degree: 2, bases })
}

/// Cache of the per-pair spanning bases used by the transposition
/// triviality test; write-once per pair `(i, j)`.
#[derive(Default)]
pub struct TrivialityCache {
    spans: HashMap<(usize, usize), Vec<HowellBasis>>,
}

impl TrivialityCache {
    pub fn new() -> TrivialityCache {
        TrivialityCache::default()
    }

    /// Decides whether the `(i j)`-invariant `x` is a *trivial* invariant
    /// of the transposition `(i j)` — i.e. lies in the relabeled tail
    /// subalgebra `act(π, A[τ_3, …, τ_n])` with `π = (1 i)(2 j)`, the
    /// image of the generic invariants. Membership is decided per ring
    /// factor against the Howell basis of the `n!/2` spanning rows
    /// `act(π, b)` for tail basis monomials `b` (cached per pair).
    ///
    /// Errors if the pair is out of range or `x` is not `(i j)`-invariant.
    pub fn test(&mut self, alg: &SplitAlg, x: &AlgElem, i: usize, j: usize) -> Result<bool, Error> {
        let n = alg.degree();
        if i == 0 || i >= j || j > n {
            return Err(Error::InvalidPair(i, j, n));
        }
        let sigma = Perm::transposition(n, i, j)?;
        if &alg.act(&sigma, x)? != x {
            return Err(Error::NotInvariant(sigma.to_string()));
        }
        if let std::collections::hash_map::Entry::Vacant(slot) = self.spans.entry((i, j)) {
            slot.insert(transposition_trivial_span(alg, i, j)?);
        }
        let spans = &self.spans[&(i, j)];
        for (row, basis) in alg.dense_rows(x).iter().zip(spans) {
            if !in_row_span(row, basis)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Builds the per-factor Howell bases of `act(π, A[τ_3,…,τ_n])` with
/// `π = (1 i)(2 j)`: the span of the images of the tail basis monomials
/// (those with `m_1 = m_2 = 0`).
fn transposition_trivial_span(
    alg: &SplitAlg,
    i: usize,
    j: usize,
) -> Result<Vec<HowellBasis>, Error> {
    let n = alg.degree();
    let nb = alg.basis_size();
    let pi = Perm::transposition(n, 1, i)?.compose(&Perm::transposition(n, 2, j)?);
    let nf = alg.ring().num_factors();
    let mut rows: Vec<Vec<Vec<u64>>> = vec![Vec::new(); nf];
    for idx in 0..nb {
        let mono = alg.basis_monomial(idx);
        if !alg.tail_subalgebra_support(&mono, 2) {
            continue;
        }
        let img = alg.act(&pi, &mono)?;
        for (f, row) in alg.dense_rows(&img).into_iter().enumerate() {
            rows[f].push(row);
        }
    }
    let moduli = alg.ring().factors();
    rows.into_iter()
        .enumerate()
        .map(|(f, r)| Ok(howell_form(&MatrixOverFactor::from_rows(moduli[f], nb, r)?)))
        .collect()
}

/// One-shot convenience wrapper around [`TrivialityCache::test`].
pub fn trivial_transposition_test(
    alg: &SplitAlg,
    x: &AlgElem,
    i: usize,
    j: usize,
) -> Result<bool, Error> {
    TrivialityCache::new().test(alg, x, i, j)
}

/// Decides whether `x` is a trivial `G`-invariant for the subgroup
/// generated by `generators`. Supported subgroups: the full symmetric
/// group (trivial invariants = the constants, by
/// `tail_subalgebra_support(x, n)`) and single-transposition groups
/// (via [`trivial_transposition_test`]); anything else is rejected.
/// Invariance of `x` is checked against the given generators.
pub fn trivial_invariant_test(
    alg: &SplitAlg,
    x: &AlgElem,
    generators: &[Perm],
) -> Result<bool, Error> {
    let n = alg.degree();
    for g in generators {
        if &alg.act(g, x)? != x {
            return Err(Error::NotInvariant(g.to_string()));
        }
    }
    let elems = crate::splitalg::generate_subgroup(n, generators)?;
    let order: usize = (1..=n).product();
    if elems.len() == order {
        return Ok(alg.tail_subalgebra_support(x, n));
    }
    if elems.len() == 2 {
        let nontrivial = elems.iter().find(|p| !p.is_identity()).expect("order 2");
        if let Some((i, j)) = nontrivial.as_transposition() {
            return trivial_transposition_test(alg, x, i, j);
        }
    }
    Err(Error::UnsupportedSubgroup(format!(
        "order-{} subgroup of S_{n}",
        elems.len()
    )))
}

/// Outcome of the main-theorem condition `Ann_A 2 ∩ Ann_A D_f = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// Whether the intersection is zero — equivalently, whether the only
    /// `S_n`-invariants are the base-ring constants.
    pub holds: bool,
    /// The constant `D_f = ∏_{i<j}(τ_i + τ_j)`.
    pub d_f: RingElem,
    /// `Ann_A 2`.
    pub ann2: Ideal,
    /// `Ann_A D_f`.
    pub ann_d: Ideal,
    /// `ann2 ∩ ann_d`.
    pub intersection: Ideal,
    /// A deterministic nonzero element of the intersection when the
    /// condition fails (`None` iff `holds`).
    pub seed: Option<RingElem>,
}

/// Evaluates the condition `Ann_A 2 ∩ Ann_A D_f = 0`.
pub fn condition_star(alg: &SplitAlg) -> ConditionReport {
    let ring = alg.ring();
    let d_f = alg.d_f();
    let ann2 = ring.ann(&ring.from_int(2));
    let ann_d = ring.ann(&d_f);
    let intersection = ann2.intersect(&ann_d).expect("ideals share the ring");
    let seed = intersection.pick_nonzero();
    ConditionReport {
        holds: seed.is_none(),
        d_f,
        ann2,
        ann_d,
        intersection,
        seed,
    }
}

/// The two stability products of an (intended) `S_n`-invariant `x`:
/// both `2x` and `D_f·x` must land in the base ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    /// Whether `2x ∈ A`.
    pub two_x_in_base: bool,
    /// Whether `D_f·x ∈ A`.
    pub d_f_x_in_base: bool,
}

/// Evaluates `2x` and `D_f·x` and tests containment in the base ring.
pub fn stability_products(alg: &SplitAlg, x: &AlgElem) -> StabilityReport {
    let n = alg.degree();
    let ring = alg.ring();
    let two_x = alg.scale(&ring.from_int(2), x);
    let dfx = alg.scale(&alg.d_f(), x);
    StabilityReport {
        two_x_in_base: alg.tail_subalgebra_support(&two_x, n),
        d_f_x_in_base: alg.tail_subalgebra_support(&dfx, n),
    }
}
