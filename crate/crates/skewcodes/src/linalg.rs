//! Small exact linear-algebra routines over F_q: row reduction, rank,
//! row-space membership, and affine solves. Used for module membership
//! tests over R (via the F_q coordinate expansion) and for the linear
//! fallback in the common-multiple computation.

use crate::error::{Error, Result};
use crate::gf::FieldElement;

/// Reduced row echelon form in place; returns the pivot column indices.
/// Zero rows are removed afterwards.
pub(crate) fn rref(rows: &mut Vec<Vec<FieldElement>>) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return Ok(pivots);
    }
    let ncols = rows[0].len();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inverse()?;
        for e in rows[r].iter_mut() {
            *e = e.mul(&inv)?;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..ncols {
                    let t = rows[r][j].mul(&factor)?;
                    rows[i][j] = rows[i][j].sub(&t)?;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|e| !e.is_zero()));
    Ok(pivots)
}

/// Membership of v in the row space of already-reduced rows (unit pivots).
pub(crate) fn in_row_space(
    rref_rows: &[Vec<FieldElement>],
    pivots: &[usize],
    v: &[FieldElement],
) -> Result<bool> {
    let mut v = v.to_vec();
    for (row, &c) in rref_rows.iter().zip(pivots) {
        if !v[c].is_zero() {
            let factor = v[c].clone();
            for j in 0..v.len() {
                let t = row[j].mul(&factor)?;
                v[j] = v[j].sub(&t)?;
            }
        }
    }
    Ok(v.iter().all(FieldElement::is_zero))
}

/// Solves A·x = rhs over F_q. Returns None when inconsistent, otherwise a
/// particular solution together with a basis of the kernel of A.
#[allow(clippy::type_complexity)]
pub(crate) fn solve_affine(
    a: &[Vec<FieldElement>],
    rhs: &[FieldElement],
) -> Result<Option<(Vec<FieldElement>, Vec<Vec<FieldElement>>)>> {
    if a.len() != rhs.len() || a.is_empty() {
        return Err(Error::Internal("malformed linear system".into()));
    }
    let ncols = a[0].len();
    let spec = rhs[0].spec().clone();
    let mut aug: Vec<Vec<FieldElement>> = a
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug)?;
    if pivots.contains(&ncols) {
        return Ok(None);
    }
    let mut particular = vec![spec.zero(); ncols];
    for (row, &c) in aug.iter().zip(&pivots) {
        particular[c] = row[ncols].clone();
    }
    let mut kernel = Vec::new();
    for fc in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut k = vec![spec.zero(); ncols];
        k[fc] = spec.one();
        for (row, &c) in aug.iter().zip(&pivots) {
            k[c] = row[fc].neg();
        }
        kernel.push(k);
    }
    Ok(Some((particular, kernel)))
}
