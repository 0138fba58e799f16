//! Constructive witness pipeline: when `Ann_A 2 ∩ Ann_A D_f ≠ 0`, produce
//! a non-constant `S_n`-invariant element and verify it.
//!
//! The pipeline is descent → extraction → lift:
//! 1. multiply a nonzero annihilator seed by root-pair sums until the
//!    product dies, keeping the last nonzero partial product `z`;
//! 2. relabel the killing pair to `(n−1, n)`, split off the coefficient of
//!    the smallest head monomial, and — if that coefficient is still a
//!    trivial invariant — multiply by `τ_n` to leave the trivial module;
//! 3. sum the transposition-invariant result over coset representatives
//!    of the pair stabilizer to obtain a full `S_n`-invariant.

use crate::error::Error;
use crate::invariants::{
    condition_star, stability_products, trivial_transposition_test, StabilityReport,
};
use crate::ring::RingElem;
use crate::splitalg::{coset_reps_pair_stabilizer, AlgElem, Perm, SplitAlg};

/// One multiplication step of the descent: the pair used and the partial
/// product after multiplying by `(τ_i + τ_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStep {
    pub pair: (usize, usize),
    pub product: AlgElem,
}

/// Result of the annihilator descent: the last nonzero partial product
/// `z`, the root pair whose sum annihilates it, and the full trail
/// (every step including the final zero product).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descent {
    pub z: AlgElem,
    pub pair: (usize, usize),
    pub trail: Vec<DescentStep>,
}

/// Starting from a constant `c` with `2c = 0` and `D_f·c = 0`, multiplies
/// by the root-pair sums `(τ_i + τ_j)` in lexicographic pair order until
/// the product becomes zero (it must, since the full product is `D_f·c`).
/// Returns the last nonzero product and the pair that killed it.
pub fn annihilator_descent(alg: &SplitAlg, c: &RingElem) -> Result<Descent, Error> {
    let ring = alg.ring();
    if c.is_zero() {
        return Err(Error::Precondition("descent seed must be nonzero".into()));
    }
    if !ring.mul(&ring.from_int(2), c).is_zero() {
        return Err(Error::Precondition(format!(
            "descent seed {c} is not annihilated by 2"
        )));
    }
    if !ring.mul(&alg.d_f(), c).is_zero() {
        return Err(Error::Precondition(format!(
            "descent seed {c} is not annihilated by the root-pair product"
        )));
    }
    let mut current = alg.constant(c);
    let mut trail = Vec::new();
    for (i, j) in alg.all_root_pairs() {
        let sum = alg.add(&alg.root(i)?, &alg.root(j)?);
        let next = alg.multiply(&current, &sum);
        trail.push(DescentStep {
            pair: (i, j),
            product: next.clone(),
        });
        if next.is_zero() {
            return Ok(Descent {
                z: current,
                pair: (i, j),
                trail,
            });
        }
        current = next;
    }
    Err(Error::InternalVerification(
        "descent never reached zero although the seed annihilates the full pair product".into(),
    ))
}

/// Result of the extraction step: a non-trivial invariant `x` of the
/// transposition `(n−1, n)`, and whether the head coefficient had to be
/// multiplied by `τ_n` to leave the trivial module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaExtraction {
    pub x: AlgElem,
    pub multiplied_by_last_root: bool,
}

/// From a nonzero `z` with `2z = 0` and `z·(τ_i + τ_j) = 0`, produces an
/// invariant of the transposition `σ = (n−1, n)` that is *not* a trivial
/// invariant. The pair is relabeled to `(n−1, n)` by the order-preserving
/// permutation sending `i ↦ n−1, j ↦ n`; the coefficient of the smallest
/// head monomial (with respect to `τ_1, …, τ_{n−2}`) is σ-invariant, and
/// is multiplied by `τ_n` exactly when it is still trivial.
pub fn extract_sigma_invariant(
    alg: &SplitAlg,
    z: &AlgElem,
    pair: (usize, usize),
) -> Result<SigmaExtraction, Error> {
    let n = alg.degree();
    let (i, j) = pair;
    if i == 0 || i >= j || j > n {
        return Err(Error::InvalidPair(i, j, n));
    }
    if z.is_zero() {
        return Err(Error::Precondition(
            "extraction input must be nonzero".into(),
        ));
    }
    if !alg.scale(&alg.ring().from_int(2), z).is_zero() {
        return Err(Error::Precondition(
            "extraction input is not annihilated by 2".into(),
        ));
    }
    let pair_sum = alg.add(&alg.root(i)?, &alg.root(j)?);
    if !alg.multiply(z, &pair_sum).is_zero() {
        return Err(Error::Precondition(format!(
            "extraction input is not annihilated by (t{i} + t{j})"
        )));
    }
    // order-preserving relabeling i ↦ n−1, j ↦ n
    let mut images = vec![0usize; n];
    images[i - 1] = n - 1;
    images[j - 1] = n;
    let mut next = 1;
    for (k, slot) in images.iter_mut().enumerate() {
        if k + 1 != i && k + 1 != j {
            *slot = next;
            next += 1;
        }
    }
    let pi = Perm::new(images)?;
    let relabeled = alg.act(&pi, z)?;
    let parts = alg.coeffs_over_tail(&relabeled, n.saturating_sub(2));
    let (_, x0) = parts
        .into_iter()
        .next()
        .expect("a nonzero element has a nonzero head coefficient");
    let trivial = trivial_transposition_test(alg, &x0, n - 1, n)?;
    let x = if trivial {
        alg.multiply(&x0, &alg.root(n)?)
    } else {
        x0
    };
    Ok(SigmaExtraction {
        x,
        multiplied_by_last_root: trivial,
    })
}

/// Sums `act(rep, x)` over coset representatives of the stabilizer
/// `⟨S_{n−2} × ⟨(n−1, n)⟩⟩` in `S_n`, turning an `(n−1, n)`-invariant
/// supported on `A[τ_{n−1}, τ_n]` into a full `S_n`-invariant.
pub fn lift_to_full_invariant(alg: &SplitAlg, x: &AlgElem) -> Result<AlgElem, Error> {
    let n = alg.degree();
    if n < 2 {
        return Err(Error::Precondition(
            "the lift needs degree at least 2".into(),
        ));
    }
    let sigma = Perm::transposition(n, n - 1, n)?;
    if &alg.act(&sigma, x)? != x {
        return Err(Error::NotInvariant(sigma.to_string()));
    }
    if !alg.tail_subalgebra_support(x, n.saturating_sub(2)) {
        return Err(Error::Precondition(
            "the lift input must be supported on the last two roots only".into(),
        ));
    }
    let mut y = alg.zero();
    for rep in coset_reps_pair_stabilizer(n)? {
        y = alg.add(&y, &alg.act(&rep, x)?);
    }
    Ok(y)
}

/// Checks recorded about a finished witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    /// Fixed by every adjacent transposition (hence by all of `S_n`).
    pub invariant: bool,
    /// Whether the witness lies in the base ring (it must not).
    pub in_base: bool,
    /// The stability products `2y, D_f·y ∈ A`.
    pub stability: StabilityReport,
}

/// Full record of a witness construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    /// The annihilator seed the descent started from.
    pub seed: RingElem,
    /// The descent trail (pair, partial product), final zero step included.
    pub trail: Vec<DescentStep>,
    /// The extracted `(n−1, n)`-invariant.
    pub sigma_invariant: AlgElem,
    /// Whether extraction multiplied by `τ_n`.
    pub multiplied_by_last_root: bool,
    /// The final `S_n`-invariant witness.
    pub witness: AlgElem,
    /// Checks performed on the witness.
    pub verification: VerificationRecord,
}

/// Runs the verification checks on a candidate witness.
pub fn verify_witness(alg: &SplitAlg, y: &AlgElem) -> Result<VerificationRecord, Error> {
    let n = alg.degree();
    let mut invariant = true;
    for g in Perm::adjacent_transpositions(n) {
        if &alg.act(&g, y)? != y {
            invariant = false;
            break;
        }
    }
    Ok(VerificationRecord {
        invariant,
        in_base: alg.tail_subalgebra_support(y, n),
        stability: stability_products(alg, y),
    })
}

/// Decides the annihilator condition and, when it fails, runs the full
/// pipeline. Returns `None` when the condition holds (no witness exists);
/// otherwise the verified report. A witness that fails its own
/// verification is an internal error, never returned.
pub fn build_witness(alg: &SplitAlg) -> Result<Option<WitnessReport>, Error> {
    let report = condition_star(alg);
    let Some(seed) = report.seed else {
        return Ok(None);
    };
    let descent = annihilator_descent(alg, &seed)?;
    let extraction = extract_sigma_invariant(alg, &descent.z, descent.pair)?;
    let y = lift_to_full_invariant(alg, &extraction.x)?;
    let verification = verify_witness(alg, &y)?;
    let sound = verification.invariant
        && !verification.in_base
        && verification.stability.two_x_in_base
        && verification.stability.d_f_x_in_base;
    if !sound {
        return Err(Error::InternalVerification(format!(
            "constructed witness {y} failed verification"
        )));
    }
    Ok(Some(WitnessReport {
        seed,
        trail: descent.trail,
        sigma_invariant: extraction.x,
        multiplied_by_last_root: extraction.multiplied_by_last_root,
        witness: y,
        verification,
    }))
}
