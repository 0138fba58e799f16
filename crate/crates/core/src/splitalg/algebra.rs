//! The splitting algebra proper: tower construction and all arithmetic.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::Error;
use crate::ring::{Ring, RingElem};
use crate::splitalg::elem::AlgElem;
use crate::splitalg::expvec::{basis_size, ExpVec};
use crate::splitalg::perm::{generate_subgroup, left_transversal, Perm};

/// The splitting algebra `A_f` of a monic polynomial
/// `f = tⁿ + a_1 t^{n−1} + ⋯ + a_n` over a product of residue rings.
///
/// Construction: `f_n = f`; at each level a universal root `τ_i` of `f_i`
/// is adjoined and `f_{i−1} = f_i / (t − τ_i)` computed by synthetic
/// division (exact since `f_i(τ_i) = 0`). The result is a free module of
/// rank `n!` over the base with standard basis
/// `{τ_1^{m_1} ⋯ τ_n^{m_n} : 0 ≤ m_i < i}`; all arithmetic returns normal
/// forms in that basis.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone, Debug)]
pub struct SplitAlg {
    ring: Ring,
    degree: usize,
    coeffs: Vec<RingElem>,
    /// `chain[i−1][k−1]` is the tail coefficient `b_{i,k}` of
    /// `f_i = tⁱ + b_{i,1} t^{i−1} + ⋯ + b_{i,i}`, an element of
    /// `A[τ_{i+1}, …, τ_n]` in normal form.
    chain: Vec<Vec<AlgElem>>,
    /// `reduction[i−1][k−1] = −b_{i,k}`, cached because rewriting
    /// `τ_i^{m} → Σ_k (−b_{i,k}) τ_i^{m−k}` is the hot path.
    reduction: Vec<Vec<AlgElem>>,
}

/// First 1-based variable index whose exponent breaks the bound
/// `m_i < i`, if any.
fn smallest_out_of_range(tuple: &[u32]) -> Option<usize> {
    tuple
        .iter()
        .enumerate()
        .find(|&(k, &e)| e as usize > k)
        .map(|(k, _)| k + 1)
}

impl SplitAlg {
    /// Builds the splitting algebra of the monic polynomial with the given
    /// coefficients `(a_1, …, a_n)` below the lead.
    pub fn construct(ring: &Ring, coeffs: &[RingElem]) -> Result<SplitAlg, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        for c in coeffs {
            if c.residues().len() != ring.num_factors() {
                return Err(Error::DimensionMismatch(format!(
                    "coefficient has {} residues, ring {ring} has {} factors",
                    c.residues().len(),
                    ring.num_factors()
                )));
            }
        }
        let n = coeffs.len();
        let mut alg = SplitAlg {
            ring: ring.clone(),
            degree: n,
            coeffs: coeffs.to_vec(),
            chain: vec![Vec::new(); n],
            reduction: vec![Vec::new(); n],
        };
        // Top level: the tails of f_n are the input coefficients.
        alg.chain[n - 1] = coeffs.iter().map(|c| alg.constant(c)).collect();
        // Synthetic division downwards: f_{i−1} = f_i / (t − τ_i) has
        // tails c_k = b_{i,k} + τ_i·c_{k−1}, c_0 = 1. Multiplying by τ_i
        // only bumps its exponent to ≤ k ≤ i−1, so the intermediate
        // results are already in normal form and need no reduction.
        for i in (2..=n).rev() {
            let mut lower = Vec::with_capacity(i - 1);
            let mut prev = alg.one();
            for k in 1..i {
                let ck = alg.add(&alg.chain[i - 1][k - 1], &shift_root(&prev, i));
                lower.push(ck.clone());
                prev = ck;
            }
            alg.chain[i - 2] = lower;
        }
        alg.reduction = alg
            .chain
            .iter()
            .map(|tails| tails.iter().map(|b| alg.neg(b)).collect())
            .collect();
        Ok(alg)
    }

    /// The base ring.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The polynomial degree `n`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The input coefficients `(a_1, …, a_n)`.
    pub fn coefficients(&self) -> &[RingElem] {
        &self.coeffs
    }

    /// Rank of `A_f` as a free module over the base: `n!`.
    pub fn basis_size(&self) -> usize {
        basis_size(self.degree)
    }

    /// Tail coefficients `(b_{i,1}, …, b_{i,i})` of the level-`i`
    /// polynomial `f_i` (1 ≤ i ≤ n).
    pub fn tails(&self, i: usize) -> &[AlgElem] {
        &self.chain[i - 1]
    }

    // ----- module structure (no reduction needed) -----

    /// The zero element.
    pub fn zero(&self) -> AlgElem {
        AlgElem::zero()
    }

    /// The unit element.
    pub fn one(&self) -> AlgElem {
        self.constant(&self.ring.one())
    }

    /// The constant element `c`.
    pub fn constant(&self, c: &RingElem) -> AlgElem {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExpVec::unit(self.degree), c.clone());
        }
        AlgElem::from_map(terms)
    }

    /// The basis monomial with the given mixed-radix index, coefficient 1.
    pub fn basis_monomial(&self, idx: usize) -> AlgElem {
        let mut terms = BTreeMap::new();
        terms.insert(ExpVec::from_index(self.degree, idx), self.ring.one());
        AlgElem::from_map(terms)
    }

    /// Coefficientwise sum (normal forms are closed under addition).
    pub fn add(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let mut terms = x.map().clone();
        for (e, c) in y.terms() {
            match terms.entry(e.clone()) {
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let s = self.ring.add(o.get(), c);
                    if s.is_zero() {
                        o.remove();
                    } else {
                        o.insert(s);
                    }
                }
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c.clone());
                }
            }
        }
        AlgElem::from_map(terms)
    }

    /// Coefficientwise negation.
    pub fn neg(&self, x: &AlgElem) -> AlgElem {
        AlgElem::from_map(
            x.terms()
                .map(|(e, c)| (e.clone(), self.ring.neg(c)))
                .collect(),
        )
    }

    /// `x − y`.
    pub fn sub(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        self.add(x, &self.neg(y))
    }

    /// Scalar multiple `c·x`.
    pub fn scale(&self, c: &RingElem, x: &AlgElem) -> AlgElem {
        let mut terms = BTreeMap::new();
        for (e, d) in x.terms() {
            let p = self.ring.mul(c, d);
            if !p.is_zero() {
                terms.insert(e.clone(), p);
            }
        }
        AlgElem::from_map(terms)
    }

    /// The universal root `τ_i` in normal form (`τ_1` reduces to
    /// `−a_1 − τ_2 − ⋯ − τ_n` when n > 1).
    pub fn root(&self, i: usize) -> Result<AlgElem, Error> {
        if i == 0 || i > self.degree {
            return Err(Error::Precondition(format!(
                "root index {i} out of range 1..={}",
                self.degree
            )));
        }
        let mut tuple = vec![0u32; self.degree];
        tuple[i - 1] = 1;
        Ok(self.normalize([(tuple, self.ring.one())]))
    }

    // ----- normal-form arithmetic -----

    /// Reduces a raw sum of `(exponent tuple, coefficient)` terms to
    /// normal form.
    ///
    /// Strategy: repeatedly take the pending term whose smallest
    /// out-of-range variable index `i` (where `m_i ≥ i`) is minimal and
    /// rewrite `τ_i^{m_i} → Σ_{k=1..i} (−b_{i,k}) τ_i^{m_i−k}` with the
    /// cached tails of `f_i`, which involve only variables above `i`.
    /// Each rewrite strictly decreases the tuple in the lexicographic
    /// order with `m_1` most significant (position `i` drops; only
    /// positions `> i` grow), so the loop terminates; the result is the
    /// unique expansion in the standard basis. The worklist is a map
    /// keyed by `(out-of-range index, tuple)`, so picking the next term
    /// and merging duplicates are both logarithmic.
    pub fn normalize<I>(&self, raw: I) -> AlgElem
    where
        I: IntoIterator<Item = (Vec<u32>, RingElem)>,
    {
        let mut out: BTreeMap<ExpVec, RingElem> = BTreeMap::new();
        let mut work: BTreeMap<(usize, Vec<u32>), RingElem> = BTreeMap::new();
        for (tuple, coeff) in raw {
            self.push_term(&mut out, &mut work, tuple, coeff);
        }
        while let Some(((i, tuple), coeff)) = work.pop_first() {
            let e = tuple[i - 1];
            debug_assert!(e as usize >= i);
            for k in 1..=i {
                for (g, d) in self.reduction[i - 1][k - 1].terms() {
                    let mut nt = tuple.clone();
                    nt[i - 1] = e - k as u32;
                    for (pos, &ge) in g.exps().iter().enumerate() {
                        if ge > 0 {
                            debug_assert!(pos + 1 > i, "tails only involve later variables");
                            nt[pos] += ge as u32;
                        }
                    }
                    let nc = self.ring.mul(&coeff, d);
                    self.push_term(&mut out, &mut work, nt, nc);
                }
            }
        }
        AlgElem::from_map(out)
    }

    fn push_term(
        &self,
        out: &mut BTreeMap<ExpVec, RingElem>,
        work: &mut BTreeMap<(usize, Vec<u32>), RingElem>,
        tuple: Vec<u32>,
        coeff: RingElem,
    ) {
        debug_assert_eq!(tuple.len(), self.degree);
        if coeff.is_zero() {
            return;
        }
        match smallest_out_of_range(&tuple) {
            None => {
                let e = ExpVec::new(tuple.into_iter().map(|v| v as u8).collect())
                    .expect("in-range tuple");
                merge(&self.ring, out, e, coeff);
            }
            Some(i) => {
                merge(&self.ring, work, (i, tuple), coeff);
            }
        }
    }

    /// Product in normal form (commutative, associative, distributive).
    pub fn multiply(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let mut raw = Vec::with_capacity(x.num_terms() * y.num_terms());
        for (e1, c1) in x.terms() {
            for (e2, c2) in y.terms() {
                let tuple: Vec<u32> = e1
                    .exps()
                    .iter()
                    .zip(e2.exps())
                    .map(|(&a, &b)| a as u32 + b as u32)
                    .collect();
                raw.push((tuple, self.ring.mul(c1, c2)));
            }
        }
        self.normalize(raw)
    }

    // ----- the S_n action -----

    /// The algebra automorphism `ψ_σ` determined by `τ_i ↦ τ_{σ(i)}`.
    pub fn act(&self, sigma: &Perm, x: &AlgElem) -> Result<AlgElem, Error> {
        if sigma.degree() != self.degree {
            return Err(Error::DegreeMismatch(format!(
                "permutation degree {} vs algebra degree {}",
                sigma.degree(),
                self.degree
            )));
        }
        let raw: Vec<(Vec<u32>, RingElem)> = x
            .terms()
            .map(|(e, c)| {
                let mut tuple = vec![0u32; self.degree];
                for (k, &m) in e.exps().iter().enumerate() {
                    tuple[sigma.apply(k + 1) - 1] = m as u32;
                }
                (tuple, c.clone())
            })
            .collect();
        Ok(self.normalize(raw))
    }

    /// The orbit sum `Σ_G^H x = Σ_{σG ∈ H/G} act(σ, x)` lifting a
    /// `G`-invariant to an `H`-invariant. `G` and `H` are given by
    /// generator lists; invariance of `x` is checked against the given
    /// generators of `G`, and `G ⊆ H` by closure.
    pub fn orbit_sum(
        &self,
        g_gens: &[Perm],
        h_gens: &[Perm],
        x: &AlgElem,
    ) -> Result<AlgElem, Error> {
        for g in g_gens {
            if &self.act(g, x)? != x {
                return Err(Error::NotInvariant(g.to_string()));
            }
        }
        let g_set: BTreeSet<Perm> = generate_subgroup(self.degree, g_gens)?;
        let h_set: BTreeSet<Perm> = generate_subgroup(self.degree, h_gens)?;
        if !g_set.is_subset(&h_set) {
            return Err(Error::Precondition(
                "the first subgroup is not contained in the second".into(),
            ));
        }
        let mut sum = self.zero();
        for rep in left_transversal(&h_set, &g_set) {
            sum = self.add(&sum, &self.act(&rep, x)?);
        }
        Ok(sum)
    }

    // ----- pair products -----

    /// All index pairs `(i, j)` with `1 ≤ i < j ≤ n`, lexicographic.
    pub fn all_root_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.degree;
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for i in 1..=n {
            for j in (i + 1)..=n {
                pairs.push((i, j));
            }
        }
        pairs
    }

    /// The reduced product `∏ (τ_i + τ_j)` over the given pairs (empty
    /// product = 1). With all pairs this is the constant `D_f`.
    pub fn pair_product(&self, pairs: &[(usize, usize)]) -> Result<AlgElem, Error> {
        let mut acc = self.one();
        for &(i, j) in pairs {
            if i == 0 || i >= j || j > self.degree {
                return Err(Error::InvalidPair(i, j, self.degree));
            }
            let factor = self.add(&self.root(i)?, &self.root(j)?);
            acc = self.multiply(&acc, &factor);
        }
        Ok(acc)
    }

    /// The constant `D_f = ∏_{i<j} (τ_i + τ_j)` as a base-ring element
    /// (`1` for n = 1, where the product is empty). That the full pair
    /// product is constant is a theorem; its failure would be a bug here,
    /// hence the assertion.
    pub fn d_f(&self) -> RingElem {
        let p = self
            .pair_product(&self.all_root_pairs())
            .expect("all pairs are valid");
        assert!(
            p.is_constant(),
            "the full root-pair product must land in the base ring"
        );
        p.constant_part()
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    // ----- tail subalgebras -----

    /// Whether every support monomial has `m_1 = ⋯ = m_i = 0`, i.e.
    /// `x ∈ A[τ_{i+1}, …, τ_n]`; for `i = n` this tests `x ∈ A`.
    pub fn tail_subalgebra_support(&self, x: &AlgElem, i: usize) -> bool {
        assert!(i <= self.degree, "tail index out of range");
        x.terms()
            .all(|(e, _)| e.exps()[..i].iter().all(|&m| m == 0))
    }

    /// The unique decomposition `x = Σ_p c_p · p` over head monomials `p`
    /// in `τ_1, …, τ_i`, with coefficients `c_p` in the tail subalgebra
    /// `A[τ_{i+1}, …, τ_n]` (returned as full-algebra elements); zero
    /// coefficients omitted. Keys are head exponent tuples of length `i`.
    pub fn coeffs_over_tail(&self, x: &AlgElem, i: usize) -> BTreeMap<ExpVec, AlgElem> {
        assert!(i <= self.degree, "tail index out of range");
        let mut groups: BTreeMap<ExpVec, BTreeMap<ExpVec, RingElem>> = BTreeMap::new();
        for (e, c) in x.terms() {
            let head = ExpVec::new(e.exps()[..i].to_vec()).expect("prefix of a valid tuple");
            let mut tail_exps = e.exps().to_vec();
            for m in tail_exps.iter_mut().take(i) {
                *m = 0;
            }
            let tail = ExpVec::new(tail_exps).expect("zeroed prefix stays valid");
            groups.entry(head).or_default().insert(tail, c.clone());
        }
        groups
            .into_iter()
            .map(|(head, terms)| (head, AlgElem::from_map(terms)))
            .collect()
    }

    // ----- specialization -----

    /// Verifies that `∏ (t − ν_i)` reproduces the coefficients of `f`.
    pub fn verify_roots(&self, roots: &[RingElem]) -> Result<bool, Error> {
        if roots.len() != self.degree {
            return Err(Error::DimensionMismatch(format!(
                "{} roots for a degree-{} polynomial",
                roots.len(),
                self.degree
            )));
        }
        // Expand ∏(t − ν_i) coefficientwise: poly[k] is the coefficient
        // of t^{deg−k}, starting from the monic lead.
        let mut poly = vec![self.ring.one()];
        for nu in roots {
            let neg = self.ring.neg(nu);
            let mut next = vec![self.ring.zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k] = self.ring.add(&next[k], c);
                let lowered = self.ring.mul(c, &neg);
                next[k + 1] = self.ring.add(&next[k + 1], &lowered);
            }
            poly = next;
        }
        Ok(poly[1..]
            .iter()
            .zip(&self.coeffs)
            .all(|(expanded, given)| expanded == given))
    }

    /// Evaluates `x` at concrete roots `ν_1, …, ν_n` of `f` in the base
    /// ring — the universal-property morphism with `τ_i ↦ ν_i`. The roots
    /// must factor `f` exactly (checked), which makes this a ring
    /// homomorphism.
    pub fn specialize(&self, x: &AlgElem, roots: &[RingElem]) -> Result<RingElem, Error> {
        if !self.verify_roots(roots)? {
            return Err(Error::RootsDoNotFactor);
        }
        let mut total = self.ring.zero();
        for (e, c) in x.terms() {
            let mut term = c.clone();
            for (k, &m) in e.exps().iter().enumerate() {
                for _ in 0..m {
                    term = self.ring.mul(&term, &roots[k]);
                }
            }
            total = self.ring.add(&total, &term);
        }
        Ok(total)
    }

    // ----- dense bridge to the linear algebra -----

    /// Dense coefficient rows, one per ring factor, length `n!`, columns
    /// in mixed-radix order.
    pub fn dense_rows(&self, x: &AlgElem) -> Vec<Vec<u64>> {
        let nb = self.basis_size();
        let mut rows = vec![vec![0u64; nb]; self.ring.num_factors()];
        for (e, c) in x.terms() {
            let idx = e.to_index();
            for (f, &r) in c.residues().iter().enumerate() {
                rows[f][idx] = r;
            }
        }
        rows
    }

    /// Rebuilds an element from per-factor dense rows (inverse of
    /// [`SplitAlg::dense_rows`]).
    pub fn elem_from_dense(&self, rows: &[Vec<u64>]) -> Result<AlgElem, Error> {
        let nb = self.basis_size();
        if rows.len() != self.ring.num_factors() || rows.iter().any(|r| r.len() != nb) {
            return Err(Error::DimensionMismatch(
                "dense rows must be one per factor, each of length n!".into(),
            ));
        }
        let mut terms = BTreeMap::new();
        for idx in 0..nb {
            let residues: Vec<u64> = rows.iter().map(|r| r[idx]).collect();
            let c = self.ring.element_from_residues(residues)?;
            if !c.is_zero() {
                terms.insert(ExpVec::from_index(self.degree, idx), c);
            }
        }
        Ok(AlgElem::from_map(terms))
    }
}

/// Bumps the `τ_i` exponent of every term by one *without* reduction;
/// callers guarantee the result stays within the basis bounds.
fn shift_root(x: &AlgElem, i: usize) -> AlgElem {
    AlgElem::from_map(
        x.terms()
            .map(|(e, c)| {
                let mut exps = e.exps().to_vec();
                exps[i - 1] += 1;
                (
                    ExpVec::new(exps).expect("shift must stay within basis bounds"),
                    c.clone(),
                )
            })
            .collect(),
    )
}

/// Adds `coeff` into `map[key]`, dropping the entry if the sum vanishes.
fn merge<K: Ord>(ring: &Ring, map: &mut BTreeMap<K, RingElem>, key: K, coeff: RingElem) {
    match map.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = ring.add(o.get(), &coeff);
            if s.is_zero() {
                o.remove();
            } else {
                o.insert(s);
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
    }
}
