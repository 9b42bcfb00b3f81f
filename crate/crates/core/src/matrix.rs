//! Matrices with labelled rows and columns over the tiny fields.
//!
//! The central operation is the principal pivot transform `ppt`: for a
//! square matrix A over V and X subseteq V with A[X] nonsingular, writing A
//! in blocks P = A[X], Q = A[X, V-X], R = A[V-X, X], S = A[V-X],
//!
//!   A*X = [ P^-1       -P^-1 Q      ]
//!         [ R P^-1      S - R P^-1 Q ]
//!
//! indexed so that (A*X)[X] = P^-1. A singular A[X] is a recoverable
//! `SingularPivot` error: callers probe pivots and are expected to handle it.

use crate::error::Error;
use crate::field::{Automorphism, FieldElement, FieldKind};
use crate::gauss;
use crate::ground::{GroundSet, LabelSet};

#[derive(Debug, Clone)]
pub struct LabeledMatrix {
    rows: GroundSet,
    cols: GroundSet,
    kind: FieldKind,
    data: Vec<u8>, // row-major canonical encodings
}

impl LabeledMatrix {
    /// Rectangular matrix from rows of elements, in ground order.
    pub fn new(
        rows: GroundSet,
        cols: GroundSet,
        kind: FieldKind,
        entries: Vec<Vec<FieldElement>>,
    ) -> Result<LabeledMatrix, Error> {
        if entries.len() != rows.len() {
            return Err(Error::Shape(format!(
                "expected {} rows, found {}",
                rows.len(),
                entries.len()
            )));
        }
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for row in &entries {
            if row.len() != cols.len() {
                return Err(Error::Shape(format!(
                    "expected {} columns, found {}",
                    cols.len(),
                    row.len()
                )));
            }
            for e in row {
                if e.kind() != kind {
                    return Err(Error::FieldMismatch {
                        expected: kind,
                        found: e.kind(),
                    });
                }
                data.push(e.value());
            }
        }
        Ok(LabeledMatrix {
            rows,
            cols,
            kind,
            data,
        })
    }

    /// Square matrix: rows and columns share one ground set.
    pub fn square(
        ground: GroundSet,
        kind: FieldKind,
        entries: Vec<Vec<FieldElement>>,
    ) -> Result<LabeledMatrix, Error> {
        LabeledMatrix::new(ground.clone(), ground, kind, entries)
    }

    pub fn zeros(rows: GroundSet, cols: GroundSet, kind: FieldKind) -> LabeledMatrix {
        let data = vec![0; rows.len() * cols.len()];
        LabeledMatrix {
            rows,
            cols,
            kind,
            data,
        }
    }

    pub fn identity(ground: GroundSet, kind: FieldKind) -> LabeledMatrix {
        let n = ground.len();
        let mut m = LabeledMatrix::zeros(ground.clone(), ground, kind);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub(crate) fn from_raw(
        rows: GroundSet,
        cols: GroundSet,
        kind: FieldKind,
        data: Vec<u8>,
    ) -> LabeledMatrix {
        debug_assert_eq!(data.len(), rows.len() * cols.len());
        LabeledMatrix {
            rows,
            cols,
            kind,
            data,
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn row_ground(&self) -> &GroundSet {
        &self.rows
    }

    pub fn col_ground(&self) -> &GroundSet {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows.same_order(&self.cols)
    }

    fn require_square(&self) -> Result<(), Error> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare)
        }
    }

    /// The shared ground set of a square matrix.
    pub fn ground(&self) -> &GroundSet {
        debug_assert!(self.is_square());
        &self.rows
    }

    pub fn entry(&self, row: &str, col: &str) -> Result<FieldElement, Error> {
        let i = self.rows.index_of(row).ok_or_else(|| Error::UnknownLabel {
            label: row.to_string(),
        })?;
        let j = self.cols.index_of(col).ok_or_else(|| Error::UnknownLabel {
            label: col.to_string(),
        })?;
        Ok(self.entry_at(i, j))
    }

    pub fn entry_at(&self, i: usize, j: usize) -> FieldElement {
        FieldElement::new(self.kind, self.raw_at(i, j)).expect("entries are canonical")
    }

    pub(crate) fn raw_at(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols.len() + j]
    }

    fn gather(&self, ri: &[usize], ci: &[usize]) -> Vec<u8> {
        let mut out = Vec::with_capacity(ri.len() * ci.len());
        for &r in ri {
            for &c in ci {
                out.push(self.raw_at(r, c));
            }
        }
        out
    }

    fn check_row_set(&self, x: &LabelSet) {
        assert!(
            x.ground().same_order(&self.rows),
            "label set does not belong to this matrix's row ground set"
        );
    }

    fn check_col_set(&self, y: &LabelSet) {
        assert!(
            y.ground().same_order(&self.cols),
            "label set does not belong to this matrix's column ground set"
        );
    }

    /// A[X, Y]: the submatrix with rows X and columns Y, in ambient order.
    pub fn submatrix(&self, x: &LabelSet, y: &LabelSet) -> LabeledMatrix {
        self.check_row_set(x);
        self.check_col_set(y);
        let ri: Vec<usize> = x.indices().collect();
        let ci: Vec<usize> = y.indices().collect();
        LabeledMatrix {
            rows: self.rows.restrict(x),
            cols: self.cols.restrict(y),
            kind: self.kind,
            data: self.gather(&ri, &ci),
        }
    }

    /// A[X] = A[X, X] of a square matrix.
    pub fn principal_submatrix(&self, x: &LabelSet) -> LabeledMatrix {
        debug_assert!(self.is_square());
        self.submatrix(x, x)
    }

    pub fn transpose(&self) -> LabeledMatrix {
        let (r, c) = (self.nrows(), self.ncols());
        let mut data = vec![0; r * c];
        for i in 0..r {
            for j in 0..c {
                data[j * r + i] = self.raw_at(i, j);
            }
        }
        LabeledMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            kind: self.kind,
            data,
        }
    }

    pub fn neg(&self) -> LabeledMatrix {
        self.map_raw(|v| self.kind.neg_raw(v))
    }

    pub fn apply_automorphism(&self, alpha: Automorphism) -> Result<LabeledMatrix, Error> {
        if alpha.kind() != self.kind {
            return Err(Error::FieldMismatch {
                expected: self.kind,
                found: alpha.kind(),
            });
        }
        Ok(self.map_raw(|v| alpha.apply_raw(v)))
    }

    fn map_raw(&self, f: impl Fn(u8) -> u8) -> LabeledMatrix {
        LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            kind: self.kind,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn add(&self, other: &LabeledMatrix) -> Result<LabeledMatrix, Error> {
        if self.kind != other.kind {
            return Err(Error::FieldMismatch {
                expected: self.kind,
                found: other.kind,
            });
        }
        if !self.rows.same_order(&other.rows) || !self.cols.same_order(&other.cols) {
            return Err(Error::GroundMismatch);
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.kind.add_raw(a, b))
            .collect();
        Ok(LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            kind: self.kind,
            data,
        })
    }

    pub fn times(&self, other: &LabeledMatrix) -> Result<LabeledMatrix, Error> {
        if self.kind != other.kind {
            return Err(Error::FieldMismatch {
                expected: self.kind,
                found: other.kind,
            });
        }
        if !self.cols.same_order(&other.rows) {
            return Err(Error::GroundMismatch);
        }
        let data = gauss::mat_mul(
            self.kind,
            &self.data,
            self.nrows(),
            self.ncols(),
            &other.data,
            other.ncols(),
        );
        Ok(LabeledMatrix {
            rows: self.rows.clone(),
            cols: other.cols.clone(),
            kind: self.kind,
            data,
        })
    }

    /// Exact determinant; the empty matrix has determinant 1.
    pub fn det(&self) -> Result<FieldElement, Error> {
        self.require_square()?;
        let d = gauss::det(self.kind, self.nrows(), self.data.clone());
        Ok(FieldElement::new(self.kind, d).expect("det is canonical"))
    }

    /// det A[X] for the principal index mask, without building the submatrix.
    pub(crate) fn det_principal_mask(&self, mask: u32) -> u8 {
        let idx: Vec<usize> = (0..self.nrows()).filter(|i| mask & (1 << i) != 0).collect();
        gauss::det(self.kind, idx.len(), self.gather(&idx, &idx))
    }

    pub fn inverse(&self) -> Result<LabeledMatrix, Error> {
        self.require_square()?;
        let data =
            gauss::invert(self.kind, self.nrows(), &self.data).ok_or(Error::SingularPivot)?;
        Ok(LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            kind: self.kind,
            data,
        })
    }

    /// Principal pivot transform A*X. Fails with `SingularPivot` iff A[X] is
    /// singular. `ppt(A, empty)` is A and `ppt(A, V)` is the full inverse.
    pub fn ppt(&self, x: &LabelSet) -> Result<LabeledMatrix, Error> {
        self.require_square()?;
        self.check_row_set(x);
        let n = self.nrows();
        let kind = self.kind;
        let xi: Vec<usize> = x.indices().collect();
        let yi: Vec<usize> = (0..n).filter(|i| !x.contains_index(*i)).collect();
        let (k, m) = (xi.len(), yi.len());

        let p = self.gather(&xi, &xi);
        let p_inv = gauss::invert(kind, k, &p).ok_or(Error::SingularPivot)?;
        let q = self.gather(&xi, &yi);
        let r = self.gather(&yi, &xi);
        let s = self.gather(&yi, &yi);

        let p_inv_q = gauss::mat_mul(kind, &p_inv, k, k, &q, m);
        let r_p_inv = gauss::mat_mul(kind, &r, m, k, &p_inv, k);
        let r_p_inv_q = gauss::mat_mul(kind, &r_p_inv, m, k, &q, m);

        let mut out = vec![0u8; n * n];
        for (a, &ga) in xi.iter().enumerate() {
            for (b, &gb) in xi.iter().enumerate() {
                out[ga * n + gb] = p_inv[a * k + b];
            }
            for (b, &gb) in yi.iter().enumerate() {
                out[ga * n + gb] = kind.neg_raw(p_inv_q[a * m + b]);
            }
        }
        for (a, &ga) in yi.iter().enumerate() {
            for (b, &gb) in xi.iter().enumerate() {
                out[ga * n + gb] = r_p_inv[a * k + b];
            }
            for (b, &gb) in yi.iter().enumerate() {
                out[ga * n + gb] = kind.sub_raw(s[a * m + b], r_p_inv_q[a * m + b]);
            }
        }
        Ok(LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            kind,
            data: out,
        })
    }

    /// The Schur complement A/A[X] = A[V-X] - A[V-X,X] A[X]^-1 A[X,V-X],
    /// i.e. the (V-X)-corner of A*X, on the ground set V-X.
    pub fn schur_complement(&self, x: &LabelSet) -> Result<LabeledMatrix, Error> {
        let pivoted = self.ppt(x)?;
        Ok(pivoted.principal_submatrix(&x.complement()))
    }

    /// A + X: adds 1 to the diagonal entries indexed by X.
    pub fn add_identity_on(&self, x: &LabelSet) -> Result<LabeledMatrix, Error> {
        self.require_square()?;
        self.check_row_set(x);
        let n = self.nrows();
        let mut out = self.clone();
        for i in x.indices() {
            out.data[i * n + i] = self.kind.add_raw(out.data[i * n + i], 1);
        }
        Ok(out)
    }

    /// Whether alpha(-A^T) = A.
    pub fn is_alpha_symmetric(&self, alpha: Automorphism) -> Result<bool, Error> {
        self.require_square()?;
        if alpha.kind() != self.kind {
            return Err(Error::FieldMismatch {
                expected: self.kind,
                found: alpha.kind(),
            });
        }
        let n = self.nrows();
        for i in 0..n {
            for j in 0..n {
                let mirrored = alpha.apply_raw(self.kind.neg_raw(self.raw_at(j, i)));
                if mirrored != self.raw_at(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether every principal minor determinant lies in {0, 1, -1}.
    pub fn is_principally_unimodular(&self) -> Result<bool, Error> {
        self.require_square()?;
        let neg_one = self.kind.neg_raw(1);
        for i in 0..1u32 << self.nrows() {
            let mask = i ^ (i >> 1);
            let d = self.det_principal_mask(mask);
            if d != 0 && d != 1 && d != neg_one {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Label-aware equality: ground sets must coincide as sets and entries must
/// agree under label alignment, whatever the serialization order.
impl PartialEq for LabeledMatrix {
    fn eq(&self, other: &Self) -> bool {
        if self.kind != other.kind
            || !self.rows.same_labels(&other.rows)
            || !self.cols.same_labels(&other.cols)
        {
            return false;
        }
        if self.rows.same_order(&other.rows) && self.cols.same_order(&other.cols) {
            return self.data == other.data;
        }
        let rmap: Vec<usize> = self
            .rows
            .labels()
            .iter()
            .map(|l| other.rows.index_of(l).expect("same labels"))
            .collect();
        let cmap: Vec<usize> = self
            .cols
            .labels()
            .iter()
            .map(|l| other.cols.index_of(l).expect("same labels"))
            .collect();
        for (i, &ri) in rmap.iter().enumerate() {
            for (j, &cj) in cmap.iter().enumerate() {
                if self.raw_at(i, j) != other.raw_at(ri, cj) {
                    return false;
                }
            }
        }
        true
    }
}

impl Eq for LabeledMatrix {}
