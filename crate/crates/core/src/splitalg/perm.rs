//! Permutations of `{1, …, n}`, subgroup closure, and coset transversals.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

/// A permutation of `{1, …, n}`, stored as the image list (`images[k]` is
/// the 1-based image of `k+1`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from 1-based images; must be a bijection.
    pub fn new(images: Vec<usize>) -> Result<Perm, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Precondition(format!(
                    "images {images:?} are not a permutation of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    /// The identity on `{1, …, n}`.
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (1..=n).collect(),
        }
    }

    /// The transposition `(a b)` in `S_n`; `a = b` gives the identity.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Perm, Error> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::Precondition(format!(
                "transposition ({a} {b}) out of range for S_{n}"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Perm { images })
    }

    /// Degree `n`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// The 1-based image list.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// If this is a transposition `(i j)`, returns `(i, j)` with `i < j`.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = self
            .images
            .iter()
            .enumerate()
            .filter(|&(k, &v)| v != k + 1)
            .map(|(k, _)| k + 1)
            .collect();
        match moved.as_slice() {
            &[i, j] if self.apply(i) == j && self.apply(j) == i => Some((i, j)),
            _ => None,
        }
    }

    /// The adjacent transpositions `(1 2), (2 3), …, (n−1 n)` generating
    /// `S_n` (empty for `n ≤ 1`).
    pub fn adjacent_transpositions(n: usize) -> Vec<Perm> {
        (1..n)
            .map(|i| Perm::transposition(n, i, i + 1).expect("in range"))
            .collect()
    }
}

impl fmt::Display for Perm {
    /// One-line image notation, e.g. `[2 3 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// The subgroup of `S_n` generated by `gens`, as a sorted set (closure by
/// breadth-first products; every subgroup here is tiny, ≤ n! ≤ 5040 for
/// the degrees this crate targets).
pub fn generate_subgroup(n: usize, gens: &[Perm]) -> Result<BTreeSet<Perm>, Error> {
    for g in gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch(format!(
                "generator {g} has degree {}, expected {n}",
                g.degree()
            )));
        }
    }
    let mut elems: BTreeSet<Perm> = BTreeSet::new();
    let mut queue: Vec<Perm> = vec![Perm::identity(n)];
    while let Some(p) = queue.pop() {
        if !elems.insert(p.clone()) {
            continue;
        }
        for g in gens {
            queue.push(g.compose(&p));
        }
    }
    Ok(elems)
}

/// Deterministic representatives of the left cosets `σH` of a subgroup `H`
/// (given as its full element set) inside a group `G` (ditto): scanning
/// `G` in sorted order and skipping covered elements yields the
/// lexicographically least representative of each coset.
pub fn left_transversal(group: &BTreeSet<Perm>, subgroup: &BTreeSet<Perm>) -> Vec<Perm> {
    let mut covered: BTreeSet<Perm> = BTreeSet::new();
    let mut reps = Vec::new();
    for sigma in group {
        if covered.contains(sigma) {
            continue;
        }
        reps.push(sigma.clone());
        for h in subgroup {
            covered.insert(sigma.compose(h));
        }
    }
    reps
}

/// Representatives of the left cosets of the stabilizer
/// `H = ⟨S_{n−2}, (n−1 n)⟩` of the unordered pair `{n−1, n}` in `S_n`,
/// one per unordered pair `{i, j} ⊆ {1, …, n}`: the representative for
/// `{i, j}` maps `n−1 ↦ i`, `n ↦ j` and is order-preserving on the rest.
/// Returned sorted by image list. Requires `n ≥ 2`.
pub fn coset_reps_pair_stabilizer(n: usize) -> Result<Vec<Perm>, Error> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "pair stabilizer needs degree ≥ 2, got {n}"
        )));
    }
    let mut reps = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in (i + 1)..=n {
            let rest: Vec<usize> = (1..=n).filter(|&k| k != i && k != j).collect();
            let mut images = rest;
            images.push(i);
            images.push(j);
            reps.push(Perm::new(images).expect("constructed bijection"));
        }
    }
    reps.sort();
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_right_factor_first() {
        // σ = (1 2), π = (2 3): (σ∘π)(2) = σ(3) = 3, (σ∘π)(1) = 2.
        let s = Perm::transposition(3, 1, 2).unwrap();
        let p = Perm::transposition(3, 2, 3).unwrap();
        let sp = s.compose(&p);
        assert_eq!(sp.images(), &[2, 3, 1]);
        let ps = p.compose(&s);
        assert_eq!(ps.images(), &[3, 1, 2]);
    }

    #[test]
    fn inverse_and_identity() {
        let p = Perm::new(vec![3, 1, 4, 2]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
        assert!(Perm::identity(4).is_identity());
    }

    #[test]
    fn new_rejects_non_bijections() {
        assert!(Perm::new(vec![1, 1]).is_err());
        assert!(Perm::new(vec![0, 2]).is_err());
        assert!(Perm::new(vec![3, 1]).is_err());
    }

    #[test]
    fn as_transposition_detects_exactly_transpositions() {
        assert_eq!(
            Perm::transposition(4, 2, 4).unwrap().as_transposition(),
            Some((2, 4))
        );
        assert_eq!(Perm::identity(3).as_transposition(), None);
        assert_eq!(Perm::new(vec![2, 3, 1]).unwrap().as_transposition(), None);
    }

    #[test]
    fn subgroup_closure_sizes() {
        // Adjacent transpositions generate all of S_n.
        for n in 1..=5 {
            let g = generate_subgroup(n, &Perm::adjacent_transpositions(n)).unwrap();
            assert_eq!(g.len(), (1..=n).product::<usize>());
        }
        // A single transposition generates a 2-element group.
        let g = generate_subgroup(4, &[Perm::transposition(4, 2, 4).unwrap()]).unwrap();
        assert_eq!(g.len(), 2);
        // ⟨(1 2 3)⟩ has order 3.
        let g = generate_subgroup(3, &[Perm::new(vec![2, 3, 1]).unwrap()]).unwrap();
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn transversal_covers_group_without_overlap() {
        let g = generate_subgroup(4, &Perm::adjacent_transpositions(4)).unwrap();
        let h = generate_subgroup(
            4,
            &[
                Perm::transposition(4, 1, 2).unwrap(),
                Perm::transposition(4, 3, 4).unwrap(),
            ],
        )
        .unwrap();
        let reps = left_transversal(&g, &h);
        assert_eq!(reps.len(), g.len() / h.len());
        let mut all: BTreeSet<Perm> = BTreeSet::new();
        for r in &reps {
            for e in &h {
                assert!(all.insert(r.compose(e)), "cosets overlap");
            }
        }
        assert_eq!(all, g);
    }

    #[test]
    fn pair_stabilizer_reps_known_values() {
        // n = 3: {id, (1 2), the 3-cycle 1→3→2→1}, sending the pair {2,3}
        // to {2,3}, {1,3}, {1,2} respectively.
        let reps = coset_reps_pair_stabilizer(3).unwrap();
        let images: Vec<&[usize]> = reps.iter().map(|p| p.images()).collect();
        assert_eq!(images, vec![&[1, 2, 3][..], &[2, 1, 3][..], &[3, 1, 2][..]]);
        // n = 2: single pair, identity representative.
        let reps = coset_reps_pair_stabilizer(2).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].is_identity());
        assert!(coset_reps_pair_stabilizer(1).is_err());
        // n = 4: index 24/4 = 6.
        assert_eq!(coset_reps_pair_stabilizer(4).unwrap().len(), 6);
    }

    #[test]
    fn pair_stabilizer_reps_are_a_left_transversal() {
        for n in 2..=5 {
            let reps = coset_reps_pair_stabilizer(n).unwrap();
            assert_eq!(reps.len(), n * (n - 1) / 2);
            // each pair {i,j} has exactly one rep sending n−1 ↦ i, n ↦ j,
            // order-preserving on the rest
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let matching: Vec<&Perm> = reps
                        .iter()
                        .filter(|p| p.apply(n - 1) == i && p.apply(n) == j)
                        .collect();
                    assert_eq!(matching.len(), 1, "n={n} pair ({i},{j})");
                    let rest: Vec<usize> = (1..n - 1).map(|k| matching[0].apply(k)).collect();
                    assert!(rest.windows(2).all(|w| w[0] < w[1]), "not order-preserving");
                }
            }
            // and they cover S_n without overlap against the stabilizer
            let mut gens = if n > 2 {
                Perm::adjacent_transpositions(n - 2)
                    .iter()
                    .map(|p| {
                        let mut im: Vec<usize> = p.images().to_vec();
                        im.push(n - 1);
                        im.push(n);
                        Perm::new(im).unwrap()
                    })
                    .collect::<Vec<_>>()
            } else {
                Vec::new()
            };
            gens.push(Perm::transposition(n, n - 1, n).unwrap());
            let h = generate_subgroup(n, &gens).unwrap();
            let g = generate_subgroup(n, &Perm::adjacent_transpositions(n)).unwrap();
            let mut all: BTreeSet<Perm> = BTreeSet::new();
            for r in &reps {
                for e in &h {
                    assert!(all.insert(r.compose(e)), "n={n}: cosets overlap");
                }
            }
            assert_eq!(all, g, "n={n}: cosets must cover S_n");
        }
    }
}
