//! Exact linear algebra over prime fields.
//!
//! Everything here is dense and exact: ranks, null spaces, column spaces,
//! preimages, sums, intersections and quotients of subspaces of `F_p^n`.
//! Subspaces keep a reduced row-echelon basis so membership tests and
//! coordinates are a single reduction pass.

mod field;
mod matrix;
mod subspace;

pub use field::PrimeField;
pub use matrix::Matrix;
pub use subspace::{preimage_subspace, quotient_map, Frame, Quotient, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the enclosing space")]
    NotContained,
    #[error("field mismatch")]
    FieldMismatch,
}

/// In-place reduced row echelon form.
///
/// Returns the pivot columns in ascending order; afterwards `rows[..r]` are the
/// pivot rows (pivot entry 1, zero in every other pivot column) and the
/// remaining rows are zero. When `track` is given, the same row operations
/// are applied to it, so `track` ends up as the transform `T` with
/// `T · original = rows`.
pub(crate) fn echelon(
    field: PrimeField,
    rows: &mut [Vec<u32>],
    mut track: Option<&mut [Vec<u32>]>,
) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, found);
        if let Some(t) = track.as_deref_mut() {
            t.swap(r, found);
        }
        let inv = field.inv(rows[r][c]);
        if inv != 1 {
            rows[r].iter_mut().for_each(|v| *v = field.mul(*v, inv));
            if let Some(t) = track.as_deref_mut() {
                t[r].iter_mut().for_each(|v| *v = field.mul(*v, inv));
            }
        }
        let pivot_row = rows[r].clone();
        let pivot_track = track.as_deref().map(|t| t[r].clone());
        for i in 0..rows.len() {
            if i == r {
                continue;
            }
            let factor = rows[i][c];
            if factor == 0 {
                continue;
            }
            for (v, &pv) in rows[i].iter_mut().zip(&pivot_row).skip(c) {
                if pv != 0 {
                    *v = field.sub_mul(*v, factor, pv);
                }
            }
            if let (Some(t), Some(pt)) = (track.as_deref_mut(), pivot_track.as_ref()) {
                for (v, &pv) in t[i].iter_mut().zip(pt) {
                    if pv != 0 {
                        *v = field.sub_mul(*v, factor, pv);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
