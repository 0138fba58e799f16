//! The splitting algebra of a monic polynomial and its symmetric-group
//! action.
//!
//! For monic `f` of degree `n` over a base ring `A`, the algebra
//! `A_f = A[τ_n, …, τ_1]` is built as a tower: adjoin a root `τ_n` of
//! `f_n = f`, divide to get `f_{n−1}` of degree `n−1` over `A[τ_n]`,
//! adjoin `τ_{n−1}`, and so on. The result is a free `A`-module of rank
//! `n!` with standard basis `{τ_1^{m_1} ⋯ τ_n^{m_n} : 0 ≤ m_i < i}`, and
//! `f(t) = (t − τ_1)⋯(t − τ_n)` holds exactly. Permuting the roots
//! extends to an action of `S_n` by `A`-algebra automorphisms.

mod algebra;
mod elem;
mod expvec;
mod perm;

pub use algebra::SplitAlg;
pub use elem::{elem_from_dense_row, AlgElem};
pub use expvec::{basis_size, ExpVec};
pub use perm::{coset_reps_pair_stabilizer, generate_subgroup, left_transversal, Perm};
