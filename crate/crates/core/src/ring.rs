//! Finite commutative base rings: direct products of residue rings `Z/m`.
//!
//! All arithmetic is componentwise and total. Every ideal of `Z/m` is
//! principal with a canonical generator dividing `m`, so annihilators and
//! ideal intersections reduce to gcd/lcm arithmetic per factor.

use std::fmt;

use crate::arith::{gcd, lcm, mul_mod};
use crate::error::Error;

/// Largest admissible modulus (exclusive): moduli fit in 31 bits so that
/// products of residues stay inside u64.
const MAX_MODULUS: u64 = 1 << 31;

/// A finite product of residue rings `Z/m_k`, each modulus in `[2, 2^31)`.
///
/// The ring is a value object: elements do not carry a back-reference, and
/// all element arithmetic goes through `&Ring` methods.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    factors: Vec<u64>,
}

/// An element of a [`Ring`]: one reduced residue per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    residues: Vec<u64>,
}

/// An ideal of a [`Ring`], stored as the canonical generator per factor:
/// a divisor `d` of the modulus `m` with `0` standing for the zero ideal
/// (the "divisor" `m` reduced mod `m`). Two ideals are equal as sets iff
/// their stored generators are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<u64>,
}

impl Ring {
    /// Builds the product of `Z/m` for the given moduli.
    pub fn new(factors: Vec<u64>) -> Result<Ring, Error> {
        if factors.is_empty() {
            return Err(Error::Parse("a ring needs at least one factor".into()));
        }
        for &m in &factors {
            if !(2..MAX_MODULUS).contains(&m) {
                return Err(Error::Parse(format!("modulus {m} out of range [2, 2^31)")));
            }
        }
        Ok(Ring { factors })
    }

    /// Parses a ring spec: `Z/m` or `Z/m1 x Z/m2 x ...`, whitespace
    /// insensitive (`Z/4xZ/9`, `z/4 X z/9` are accepted).
    pub fn parse(spec: &str) -> Result<Ring, Error> {
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty ring spec".into()));
        }
        let mut factors = Vec::new();
        for part in compact.split(['x', 'X']) {
            let body = part
                .strip_prefix("Z/")
                .or_else(|| part.strip_prefix("z/"))
                .ok_or_else(|| {
                    Error::Parse(format!("expected a factor of the form Z/m, got `{part}`"))
                })?;
            let m: u64 = body
                .parse()
                .map_err(|_| Error::Parse(format!("invalid modulus `{body}`")))?;
            factors.push(m);
        }
        Ring::new(factors)
    }

    /// The moduli of the factors, in order.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of factors in the product.
    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// Number of elements of the ring (product of the moduli).
    pub fn size(&self) -> u128 {
        self.factors.iter().map(|&m| m as u128).product()
    }

    /// The zero element.
    pub fn zero(&self) -> RingElem {
        RingElem {
            residues: vec![0; self.factors.len()],
        }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> RingElem {
        self.from_int(1)
    }

    /// The image of an integer under the unique map `Z → R`.
    pub fn from_int(&self, v: i64) -> RingElem {
        RingElem {
            residues: self
                .factors
                .iter()
                .map(|&m| (v as i128).rem_euclid(m as i128) as u64)
                .collect(),
        }
    }

    /// Builds an element from one integer per factor, reducing each.
    pub fn element(&self, residues: &[i64]) -> Result<RingElem, Error> {
        if residues.len() != self.factors.len() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} residues, ring has {} factors",
                residues.len(),
                self.factors.len()
            )));
        }
        Ok(RingElem {
            residues: residues
                .iter()
                .zip(&self.factors)
                .map(|(&v, &m)| (v as i128).rem_euclid(m as i128) as u64)
                .collect(),
        })
    }

    /// Builds an element from already-reduced residues (debug-checked).
    pub fn element_from_residues(&self, residues: Vec<u64>) -> Result<RingElem, Error> {
        if residues.len() != self.factors.len() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} residues, ring has {} factors",
                residues.len(),
                self.factors.len()
            )));
        }
        Ok(RingElem {
            residues: residues
                .into_iter()
                .zip(&self.factors)
                .map(|(v, &m)| v % m)
                .collect(),
        })
    }

    fn check_len(&self, a: &RingElem) {
        assert_eq!(
            a.residues.len(),
            self.factors.len(),
            "element does not belong to this ring"
        );
    }

    /// Componentwise sum.
    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.check_len(a);
        self.check_len(b);
        RingElem {
            residues: self
                .factors
                .iter()
                .zip(a.residues.iter().zip(&b.residues))
                .map(|(&m, (&x, &y))| (x + y) % m)
                .collect(),
        }
    }

    /// Componentwise difference.
    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.check_len(a);
        self.check_len(b);
        RingElem {
            residues: self
                .factors
                .iter()
                .zip(a.residues.iter().zip(&b.residues))
                .map(|(&m, (&x, &y))| (x + m - y) % m)
                .collect(),
        }
    }

    /// Componentwise negation.
    pub fn neg(&self, a: &RingElem) -> RingElem {
        self.check_len(a);
        RingElem {
            residues: self
                .factors
                .iter()
                .zip(&a.residues)
                .map(|(&m, &x)| (m - x) % m)
                .collect(),
        }
    }

    /// Componentwise product.
    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.check_len(a);
        self.check_len(b);
        RingElem {
            residues: self
                .factors
                .iter()
                .zip(a.residues.iter().zip(&b.residues))
                .map(|(&m, (&x, &y))| mul_mod(x, y, m))
                .collect(),
        }
    }

    /// The annihilator ideal `Ann(a) = {x : x·a = 0}`. In `Z/m` this is the
    /// principal ideal generated by `m / gcd(a, m)`.
    pub fn ann(&self, a: &RingElem) -> Ideal {
        self.check_len(a);
        let gens = self
            .factors
            .iter()
            .zip(&a.residues)
            .map(|(&m, &x)| {
                let g = gcd(x, m); // gcd(0, m) = m, so Ann(0) = (1)
                (m / g) % m
            })
            .collect();
        Ideal {
            ring: self.clone(),
            gens,
        }
    }

    /// Enumerates all ring elements in mixed-radix order (first factor
    /// fastest). Intended for small rings in tests and oracles.
    pub fn enumerate(&self) -> impl Iterator<Item = RingElem> + '_ {
        let n = self.factors.len();
        let total = self.size();
        (0..total).map(move |mut idx| {
            let mut residues = Vec::with_capacity(n);
            for &m in &self.factors {
                residues.push((idx % m as u128) as u64);
                idx /= m as u128;
            }
            RingElem { residues }
        })
    }
}

impl RingElem {
    /// Wraps residues assumed already reduced (crate-internal fast path).
    pub(crate) fn from_raw(residues: Vec<u64>) -> RingElem {
        RingElem { residues }
    }

    /// The reduced residues, one per ring factor.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&x| x == 0)
    }

    /// Whether this is the multiplicative identity.
    pub fn is_one(&self) -> bool {
        self.residues.iter().all(|&x| x == 1)
    }
}

impl Ideal {
    /// The principal ideal generated by `a`, canonicalized per factor to the
    /// divisor `gcd(a, m)` (reduced mod `m`, so the zero ideal stores `0`).
    pub fn from_element(ring: &Ring, a: &RingElem) -> Ideal {
        ring.check_len(a);
        let gens = ring
            .factors
            .iter()
            .zip(&a.residues)
            .map(|(&m, &x)| gcd(x, m) % m)
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
        }
    }

    /// The zero ideal.
    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            gens: vec![0; ring.num_factors()],
            ring: ring.clone(),
        }
    }

    /// The ring this ideal lives in.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Canonical generators per factor (`0` = zero ideal in that factor).
    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    /// The canonical generator as a ring element.
    pub fn generator_elem(&self) -> RingElem {
        RingElem {
            residues: self.gens.clone(),
        }
    }

    /// Whether the ideal is the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|&d| d == 0)
    }

    /// Set intersection, computed per factor as `(lcm(d_1, d_2) mod m)`
    /// where a stored `0` counts as the divisor `m`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        let gens = self
            .ring
            .factors
            .iter()
            .zip(self.gens.iter().zip(&other.gens))
            .map(|(&m, (&d1, &d2))| {
                let e1 = if d1 == 0 { m } else { d1 };
                let e2 = if d2 == 0 { m } else { d2 };
                lcm(e1, e2) % m
            })
            .collect();
        Ok(Ideal {
            ring: self.ring.clone(),
            gens,
        })
    }

    /// Membership test: `a ∈ I` iff each residue is divisible by the
    /// factor's generator (zero generator admits only the zero residue).
    pub fn contains(&self, a: &RingElem) -> bool {
        self.ring.check_len(a);
        self.gens
            .iter()
            .zip(&a.residues)
            .all(|(&d, &x)| if d == 0 { x == 0 } else { x % d == 0 })
    }

    /// A deterministic nonzero element of the ideal, if one exists: the
    /// canonical generator of the first factor whose component is nonzero,
    /// padded with zeros elsewhere. Returns `None` iff the ideal is zero.
    pub fn pick_nonzero(&self) -> Option<RingElem> {
        let k = self.gens.iter().position(|&d| d != 0)?;
        let mut residues = vec![0; self.gens.len()];
        residues[k] = self.gens[k];
        Some(RingElem { residues })
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|m| format!("Z/{m}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl fmt::Display for RingElem {
    /// Single-factor elements print bare (`6`); products print as tuples
    /// (`(2,0)`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residues.len() == 1 {
            write!(f, "{}", self.residues[0])
        } else {
            let parts: Vec<String> = self.residues.iter().map(u64::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl fmt::Display for Ideal {
    /// Single-factor ideals print as `(d)`; products as `(d1)x(d2)x…`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|d| format!("({d})")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u64) -> Ring {
        Ring::new(vec![m]).unwrap()
    }

    #[test]
    fn parse_accepts_products_and_whitespace() {
        assert_eq!(Ring::parse("Z/12").unwrap(), z(12));
        assert_eq!(
            Ring::parse("Z/4 x Z/9").unwrap(),
            Ring::new(vec![4, 9]).unwrap()
        );
        assert_eq!(
            Ring::parse("  z/4xZ/9 ").unwrap(),
            Ring::new(vec![4, 9]).unwrap()
        );
        assert_eq!(
            Ring::parse("Z/2 X Z/3 X Z/5").unwrap(),
            Ring::new(vec![2, 3, 5]).unwrap()
        );
    }

    #[test]
    fn parse_rejects_bad_specs() {
        for bad in [
            "",
            "Z/1",
            "Z/0",
            "Q",
            "Z/",
            "Z/abc",
            "Z/4 + Z/9",
            "Z/2147483648",
        ] {
            assert!(Ring::parse(bad).is_err(), "accepted `{bad}`");
        }
        // Largest admissible modulus.
        assert!(Ring::parse("Z/2147483647").is_ok());
    }

    #[test]
    fn arithmetic_is_componentwise() {
        let r = Ring::new(vec![4, 9]).unwrap();
        let a = r.element(&[3, 7]).unwrap();
        let b = r.element(&[2, 5]).unwrap();
        assert_eq!(r.add(&a, &b), r.element(&[1, 3]).unwrap());
        assert_eq!(r.sub(&a, &b), r.element(&[1, 2]).unwrap());
        assert_eq!(r.mul(&a, &b), r.element(&[2, 8]).unwrap());
        assert_eq!(r.neg(&a), r.element(&[1, 2]).unwrap());
        assert_eq!(r.from_int(-1), r.element(&[3, 8]).unwrap());
    }

    #[test]
    fn ann_matches_known_values() {
        // Ann(2) in Z/12 is (6).
        let r = z(12);
        let i = r.ann(&r.from_int(2));
        assert_eq!(i.generators(), &[6]);
        // Ann(2) in Z/7 is the zero ideal (2 is a unit).
        let r = z(7);
        assert!(r.ann(&r.from_int(2)).is_zero());
        // Ann((2,0)) in Z/4 x Z/3 is (2) x (1).
        let r = Ring::new(vec![4, 3]).unwrap();
        let i = r.ann(&r.element(&[2, 0]).unwrap());
        assert_eq!(i.generators(), &[2, 1]);
        // Ann(0) = (1), Ann(1) = (0).
        let r = z(12);
        assert_eq!(r.ann(&r.zero()).generators(), &[1]);
        assert!(r.ann(&r.one()).is_zero());
    }

    /// Annihilators agree with the definition on every element of a family
    /// of small rings.
    #[test]
    fn ann_is_exact_annihilator_exhaustively() {
        let mut rings: Vec<Ring> = (2..=16).map(z).collect();
        rings.push(Ring::new(vec![4, 3]).unwrap());
        rings.push(Ring::new(vec![2, 2, 2]).unwrap());
        rings.push(Ring::new(vec![8, 8]).unwrap());
        for r in &rings {
            for a in r.enumerate() {
                let i = r.ann(&a);
                for x in r.enumerate() {
                    let kills = r.mul(&x, &a).is_zero();
                    assert_eq!(i.contains(&x), kills, "ring {r}, a={a}, x={x}");
                }
            }
        }
    }

    #[test]
    fn ideal_intersection_matches_known_values() {
        // (6) ∩ (4) = (12) = (0) in Z/12.
        let r = z(12);
        let i6 = Ideal::from_element(&r, &r.from_int(6));
        let i4 = Ideal::from_element(&r, &r.from_int(4));
        assert!(i6.intersect(&i4).unwrap().is_zero());
        // (2) ∩ (3) = (6) in Z/12.
        let i2 = Ideal::from_element(&r, &r.from_int(2));
        let i3 = Ideal::from_element(&r, &r.from_int(3));
        assert_eq!(i2.intersect(&i3).unwrap().generators(), &[6]);
        // (2) ∩ (6) = (6) in Z/12.
        assert_eq!(i2.intersect(&i6).unwrap().generators(), &[6]);
    }

    /// Intersection as sets equals the computed ideal, for all pairs of
    /// principal ideals of a family of small rings.
    #[test]
    fn intersection_is_set_intersection_exhaustively() {
        let mut rings: Vec<Ring> = (2..=12).map(z).collect();
        rings.push(Ring::new(vec![4, 6]).unwrap());
        for r in &rings {
            let ideals: Vec<Ideal> = r.enumerate().map(|a| Ideal::from_element(r, &a)).collect();
            for i in &ideals {
                for j in &ideals {
                    let k = i.intersect(j).unwrap();
                    for x in r.enumerate() {
                        assert_eq!(
                            k.contains(&x),
                            i.contains(&x) && j.contains(&x),
                            "ring {r}, {i} ∩ {j} at {x}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn intersect_rejects_mismatched_rings() {
        let i = Ideal::zero(&z(4));
        let j = Ideal::zero(&z(9));
        assert!(matches!(i.intersect(&j), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn pick_nonzero_is_deterministic_and_sound() {
        // (0) x (3) in Z/4 x Z/9 picks (0,3).
        let r = Ring::new(vec![4, 9]).unwrap();
        let a = r.element(&[0, 3]).unwrap();
        let i = Ideal::from_element(&r, &a);
        assert_eq!(i.pick_nonzero().unwrap(), r.element(&[0, 3]).unwrap());
        // Zero ideal has no pick.
        assert_eq!(Ideal::zero(&r).pick_nonzero(), None);
        // First nonzero factor wins.
        let b = r.element(&[2, 3]).unwrap();
        let j = Ideal::from_element(&r, &b);
        assert_eq!(j.pick_nonzero().unwrap(), r.element(&[2, 0]).unwrap());
        // The pick is a nonzero member of the ideal, across small rings.
        for m in 2..=16 {
            let r = z(m);
            for a in r.enumerate() {
                let i = Ideal::from_element(&r, &a);
                match i.pick_nonzero() {
                    Some(x) => {
                        assert!(!x.is_zero());
                        assert!(i.contains(&x));
                    }
                    None => assert!(i.is_zero()),
                }
            }
        }
    }

    #[test]
    fn canonical_generators_identify_equal_ideals() {
        // (2) and (6) in Z/8 generate the same set {0,2,4,6}.
        let r = z(8);
        let i2 = Ideal::from_element(&r, &r.from_int(2));
        let i6 = Ideal::from_element(&r, &r.from_int(6));
        assert_eq!(i2, i6);
        assert_eq!(i2.generators(), &[2]);
        // Exhaustively: equal sets ⇔ equal canonical generators.
        for m in 2..=16 {
            let r = z(m);
            let elems: Vec<RingElem> = r.enumerate().collect();
            for a in &elems {
                for b in &elems {
                    let ia = Ideal::from_element(&r, a);
                    let ib = Ideal::from_element(&r, b);
                    let same_set = elems.iter().all(|x| ia.contains(x) == ib.contains(x));
                    assert_eq!(ia == ib, same_set, "Z/{m}, a={a}, b={b}");
                }
            }
        }
    }

    #[test]
    fn display_formats() {
        let r = Ring::new(vec![4, 3]).unwrap();
        assert_eq!(r.to_string(), "Z/4 x Z/3");
        assert_eq!(z(12).to_string(), "Z/12");
        assert_eq!(z(12).from_int(6).to_string(), "6");
        assert_eq!(r.element(&[2, 0]).unwrap().to_string(), "(2,0)");
        let i = r.ann(&r.element(&[2, 0]).unwrap());
        assert_eq!(i.to_string(), "(2)x(1)");
        assert_eq!(z(12).ann(&z(12).from_int(2)).to_string(), "(6)");
    }

    #[test]
    fn enumerate_covers_the_ring_once() {
        let r = Ring::new(vec![3, 4]).unwrap();
        let all: Vec<RingElem> = r.enumerate().collect();
        assert_eq!(all.len(), 12);
        let mut dedup = all.clone();
        dedup.sort_by(|a, b| a.residues().cmp(b.residues()));
        dedup.dedup();
        assert_eq!(dedup.len(), 12);
    }
}
