//! Row reduction over the tiny fields, on raw row-major `u8` buffers.
//!
//! Everything here is exact: elimination over a finite field needs no
//! pivoting strategy beyond "any nonzero entry". Callers guarantee that the
//! encodings match `kind`.

use crate::field::FieldKind;

/// Determinant by triangularization. `a` is n x n row-major; the 0 x 0
/// determinant is 1 by convention.
pub(crate) fn det(kind: FieldKind, n: usize, mut a: Vec<u8>) -> u8 {
    debug_assert_eq!(a.len(), n * n);
    let mut det = 1u8;
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if p != col {
            for j in 0..n {
                a.swap(p * n + j, col * n + j);
            }
            det = kind.mul_raw(det, kind.neg_raw(1));
        }
        let pivot = a[col * n + col];
        det = kind.mul_raw(det, pivot);
        let pinv = kind.inv_raw(pivot).expect("pivot is nonzero");
        for r in col + 1..n {
            let factor = kind.mul_raw(a[r * n + col], pinv);
            if factor == 0 {
                continue;
            }
            for j in col..n {
                let sub = kind.mul_raw(factor, a[col * n + j]);
                a[r * n + j] = kind.sub_raw(a[r * n + j], sub);
            }
        }
    }
    det
}

/// Inverse by Gauss-Jordan on the augmented system; None when singular.
pub(crate) fn invert(kind: FieldKind, n: usize, a: &[u8]) -> Option<Vec<u8>> {
    debug_assert_eq!(a.len(), n * n);
    let w = 2 * n;
    let mut aug = vec![0u8; n * w];
    for r in 0..n {
        aug[r * w..r * w + n].copy_from_slice(&a[r * n..(r + 1) * n]);
        aug[r * w + n + r] = 1;
    }
    for col in 0..n {
        let p = (col..n).find(|&r| aug[r * w + col] != 0)?;
        if p != col {
            for j in 0..w {
                aug.swap(p * w + j, col * w + j);
            }
        }
        let pinv = kind.inv_raw(aug[col * w + col]).expect("pivot is nonzero");
        for j in 0..w {
            aug[col * w + j] = kind.mul_raw(aug[col * w + j], pinv);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = aug[r * w + col];
            if factor == 0 {
                continue;
            }
            for j in 0..w {
                let sub = kind.mul_raw(factor, aug[col * w + j]);
                aug[r * w + j] = kind.sub_raw(aug[r * w + j], sub);
            }
        }
    }
    let mut out = vec![0u8; n * n];
    for r in 0..n {
        out[r * n..(r + 1) * n].copy_from_slice(&aug[r * w + n..r * w + w]);
    }
    Some(out)
}

/// `a` (r x k) times `b` (k x c), row-major.
pub(crate) fn mat_mul(
    kind: FieldKind,
    a: &[u8],
    r: usize,
    k: usize,
    b: &[u8],
    c: usize,
) -> Vec<u8> {
    debug_assert_eq!(a.len(), r * k);
    debug_assert_eq!(b.len(), k * c);
    let mut out = vec![0u8; r * c];
    for i in 0..r {
        for t in 0..k {
            let av = a[i * k + t];
            if av == 0 {
                continue;
            }
            for j in 0..c {
                let prod = kind.mul_raw(av, b[t * c + j]);
                out[i * c + j] = kind.add_raw(out[i * c + j], prod);
            }
        }
    }
    out
}

/// Reduces `rows` in place to reduced row echelon form, drops zero rows and
/// returns the pivot columns in ascending order. The result is the canonical
/// basis of the row space for the given column order.
pub(crate) fn rref(kind: FieldKind, rows: &mut Vec<Vec<u8>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(row, p);
        let pinv = kind.inv_raw(rows[row][col]).expect("pivot is nonzero");
        for e in rows[row].iter_mut() {
            *e = kind.mul_raw(*e, pinv);
        }
        let pivot_row = rows[row].clone();
        for (r, other) in rows.iter_mut().enumerate() {
            if r == row {
                continue;
            }
            let factor = other[col];
            if factor == 0 {
                continue;
            }
            for (e, &pe) in other.iter_mut().zip(&pivot_row) {
                *e = kind.sub_raw(*e, kind.mul_raw(factor, pe));
            }
        }
        pivots.push(col);
        row += 1;
    }
    rows.truncate(row);
    pivots
}

/// Basis of the right kernel {v : rows * v = 0}, one vector per free column.
pub(crate) fn kernel_basis(kind: FieldKind, rows: &[Vec<u8>], ncols: usize) -> Vec<Vec<u8>> {
    let mut reduced: Vec<Vec<u8>> = rows.to_vec();
    let pivots = rref(kind, &mut reduced, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![0u8; ncols];
        v[free] = 1;
        for (r, &p) in pivots.iter().enumerate() {
            // Row r reads v[p] + reduced[r][free] * v[free] = 0.
            v[p] = kind.neg_raw(reduced[r][free]);
        }
        basis.push(v);
    }
    basis
}
