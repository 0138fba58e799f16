//! Exact linear algebra over a single residue ring `Z/m`.
//!
//! Over `Z/m`, plain row echelon form cannot answer membership questions:
//! over `Z/4` the row `(0,2) = 2·(2,1)` lies in the span of `(2,1)` even
//! though no row operation on `(2,1)` exposes it. The Howell normal form
//! repairs this by inserting, for each pivot row with pivot `d`, its
//! annihilator multiple `(m/d)·row` back into the elimination, so that the
//! row span becomes closed under "truncation": every span element whose
//! first `k` entries vanish is a combination of basis rows with pivot past
//! `k`. With pivots normalized to canonical divisors of `m` and entries
//! above each pivot reduced, the form is unique: two row sets generate the
//! same submodule of `(Z/m)^c` iff their Howell bases are identical.
//!
//! Products of residue rings are handled one factor at a time by the
//! callers (a submodule of a product splits as a product of submodules).

use crate::arith::{egcd, gcd, mul_mod, unit_to_canonical};
use crate::error::Error;

/// A dense matrix over `Z/m` with reduced entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOverFactor {
    modulus: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// The Howell normal form of a row span in `(Z/m)^c`.
///
/// Invariants: rows are nonzero, sorted by strictly increasing pivot
/// column; each pivot is the canonical divisor `gcd(entry, m)` of the
/// original leading entry; entries above a pivot are reduced modulo it;
/// and the span is truncation-closed (see module docs). Two submodules are
/// equal iff their `HowellBasis` values are `==`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HowellBasis {
    modulus: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl MatrixOverFactor {
    /// Builds a matrix from rows, reducing every entry mod `m`.
    pub fn from_rows(modulus: u64, cols: usize, rows: Vec<Vec<u64>>) -> Result<Self, Error> {
        if modulus < 2 {
            return Err(Error::Parse(format!("modulus {modulus} out of range")));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
        }
        let data = rows.iter().flatten().map(|&x| x % modulus).collect();
        Ok(MatrixOverFactor {
            modulus,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// The zero matrix of the given shape.
    pub fn zeros(modulus: u64, rows: usize, cols: usize) -> Self {
        MatrixOverFactor {
            modulus,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// Entry at (row, col), zero-based.
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    /// Sets the entry at (row, col), reducing mod `m`.
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.modulus;
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix–vector product `M v` over `Z/m`.
    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector has {} entries, matrix has {} columns",
                v.len(),
                self.cols
            )));
        }
        let m = self.modulus;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + mul_mod(a, b % m, m)) % m)
            })
            .collect())
    }
}

impl HowellBasis {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// The basis rows, sorted by pivot column.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Number of basis rows.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Whether the span is the zero submodule.
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Pivot column of each row (index of its first nonzero entry).
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect()
    }
}

fn is_zero_row(row: &[u64]) -> bool {
    row.iter().all(|&x| x == 0)
}

/// Replaces `(p, r)` — both with nonzero entries in column `j` — by a
/// combined row with entry `gcd(p[j], r[j])` at `j` and a remainder row
/// with entry 0 at `j`, spanning the same module: the 2×2 transform
/// `[s t; -b/g a/g]` with `s·a + t·b = g` has unit determinant mod `m`.
fn gcd_combine(p: &[u64], r: &[u64], j: usize, m: u64) -> (Vec<u64>, Vec<u64>) {
    let a = p[j] as i128;
    let b = r[j] as i128;
    let (g, s, t) = egcd(a, b);
    let (u, v) = (-(b / g), a / g);
    let mm = m as i128;
    let comb = p
        .iter()
        .zip(r)
        .map(|(&x, &y)| (s * x as i128 + t * y as i128).rem_euclid(mm) as u64)
        .collect();
    let rem = p
        .iter()
        .zip(r)
        .map(|(&x, &y)| (u * x as i128 + v * y as i128).rem_euclid(mm) as u64)
        .collect();
    (comb, rem)
}

/// Computes the Howell normal form of the row span of `mat`.
///
/// Column sweep: for each column left to right, all remaining rows with a
/// nonzero entry there are gcd-combined into a single pivot row; the pivot
/// is scaled by a unit to the canonical divisor `d = gcd(pivot, m)`; the
/// annihilator multiple `(m/d)·row` rejoins the remaining rows so the span
/// stays truncation-closed. A final pass reduces entries above each pivot.
pub fn howell_form(mat: &MatrixOverFactor) -> HowellBasis {
    let m = mat.modulus;
    let cols = mat.cols;
    let mut work: Vec<Vec<u64>> = (0..mat.rows)
        .map(|r| mat.row(r).to_vec())
        .filter(|r| !is_zero_row(r))
        .collect();
    let mut result: Vec<Vec<u64>> = Vec::new();

    for j in 0..cols {
        let mut pivot: Option<Vec<u64>> = None;
        let mut rest: Vec<Vec<u64>> = Vec::new();
        for row in work.drain(..) {
            if row[j] == 0 {
                rest.push(row);
                continue;
            }
            pivot = Some(match pivot.take() {
                None => row,
                Some(p) => {
                    let (comb, rem) = gcd_combine(&p, &row, j, m);
                    if !is_zero_row(&rem) {
                        rest.push(rem);
                    }
                    comb
                }
            });
        }
        work = rest;
        if let Some(mut p) = pivot {
            let u = unit_to_canonical(p[j], m);
            for x in p.iter_mut() {
                *x = mul_mod(u, *x, m);
            }
            let d = p[j];
            debug_assert_eq!(d, gcd(d, m), "pivot must be a canonical divisor");
            if d != 1 {
                // (m/d)·p kills the pivot but may not vanish elsewhere;
                // keeping it preserves truncation-closure of the span.
                let ann = m / d;
                let ann_row: Vec<u64> = p.iter().map(|&x| mul_mod(ann, x, m)).collect();
                if !is_zero_row(&ann_row) {
                    work.push(ann_row);
                }
            }
            result.push(p);
        }
    }

    // Reduce entries above each pivot modulo the pivot.
    for i in 0..result.len() {
        let j = result[i].iter().position(|&x| x != 0).expect("nonzero row");
        let d = result[i][j];
        for k in 0..i {
            let q = result[k][j] / d;
            if q != 0 {
                let lower = result[i].clone();
                for (x, &y) in result[k].iter_mut().zip(&lower) {
                    *x = (*x + (m - mul_mod(q % m, y, m)) % m) % m;
                }
            }
        }
    }

    HowellBasis {
        modulus: m,
        cols,
        rows: result,
    }
}

/// Computes the Howell basis of the kernel `{v : M v = 0}` of `mat`.
///
/// Rows of the augmented matrix `[Mᵀ | I]` are pairs `(M v, v)` for
/// coordinate vectors `v`; their span consists of all such pairs. In its
/// Howell form, the rows whose left block vanishes carry exactly the
/// kernel in the right block — completeness is the truncation-closure of
/// the Howell span applied at the block boundary.
pub fn kernel(mat: &MatrixOverFactor) -> HowellBasis {
    let m = mat.modulus;
    let r = mat.rows;
    let c = mat.cols;
    let mut aug = MatrixOverFactor::zeros(m, c, r + c);
    for i in 0..c {
        for k in 0..r {
            aug.set(i, k, mat.get(k, i));
        }
        aug.set(i, r + i, 1);
    }
    let h = howell_form(&aug);
    let rows: Vec<Vec<u64>> = h
        .rows
        .iter()
        .filter(|row| is_zero_row(&row[..r]))
        .map(|row| row[r..].to_vec())
        .collect();
    let sub = MatrixOverFactor::from_rows(m, c, rows).expect("consistent widths");
    howell_form(&sub)
}

/// Decides whether `v` lies in the row span of a Howell basis.
///
/// Greedy elimination down the pivots: at each pivot column the residual
/// entry must be divisible by the pivot (sound because any span element's
/// entry there is a multiple of the pivot; complete by truncation-closure),
/// and the residual must vanish at the end.
pub fn in_row_span(v: &[u64], basis: &HowellBasis) -> Result<bool, Error> {
    if v.len() != basis.cols {
        return Err(Error::DimensionMismatch(format!(
            "vector has {} entries, basis has {} columns",
            v.len(),
            basis.cols
        )));
    }
    let m = basis.modulus;
    let mut res: Vec<u64> = v.iter().map(|&x| x % m).collect();
    for row in &basis.rows {
        let j = row.iter().position(|&x| x != 0).expect("nonzero row");
        let d = row[j];
        let c = res[j];
        if !c.is_multiple_of(d) {
            return Ok(false);
        }
        let q = c / d;
        if q != 0 {
            for (x, &y) in res.iter_mut().zip(row) {
                *x = (*x + (m - mul_mod(q, y, m)) % m) % m;
            }
        }
    }
    Ok(is_zero_row(&res))
}
