//! Linear subspaces with canonical bases, the matroids they induce, and the
//! bicycle-space constructions that tie matroid representations to
//! delta-matroids of zero-diagonal matrices.

use std::fmt;

use crate::delta::matrix_delta_matroid;
use crate::error::Error;
use crate::field::{Automorphism, FieldElement, FieldKind};
use crate::gauss;
use crate::ground::{GroundSet, LabelSet};
use crate::matrix::LabeledMatrix;
use crate::setsystem::SetSystem;

/// Cap on how many vectors a subspace may be asked to enumerate.
pub const VECTOR_ENUMERATION_BUDGET: u64 = 1 << 20;

/// A linear subspace of vectors indexed by a ground set.
///
/// The basis is kept in reduced row echelon form under the ambient label
/// order, which is unique per subspace, so equality of values is equality of
/// subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: GroundSet,
    kind: FieldKind,
    // Invariant: rows are a reduced echelon basis; no zero rows.
    basis: Vec<Vec<u8>>,
}

impl Subspace {
    /// The span of the given vectors, coordinates in ambient ground order.
    pub fn span(
        ambient: GroundSet,
        kind: FieldKind,
        vectors: Vec<Vec<FieldElement>>,
    ) -> Result<Subspace, Error> {
        let n = ambient.len();
        let mut rows = Vec::with_capacity(vectors.len());
        for v in &vectors {
            if v.len() != n {
                return Err(Error::Shape(format!(
                    "expected vectors of length {n}, found {}",
                    v.len()
                )));
            }
            let mut row = Vec::with_capacity(n);
            for e in v {
                if e.kind() != kind {
                    return Err(Error::FieldMismatch {
                        expected: kind,
                        found: e.kind(),
                    });
                }
                row.push(e.value());
            }
            rows.push(row);
        }
        Ok(Subspace::from_raw_rows(ambient, kind, rows))
    }

    pub(crate) fn from_raw_rows(
        ambient: GroundSet,
        kind: FieldKind,
        mut rows: Vec<Vec<u8>>,
    ) -> Subspace {
        gauss::rref(kind, &mut rows, ambient.len());
        Subspace {
            ambient,
            kind,
            basis: rows,
        }
    }

    pub fn zero(ambient: GroundSet, kind: FieldKind) -> Subspace {
        Subspace {
            ambient,
            kind,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: GroundSet, kind: FieldKind) -> Subspace {
        let n = ambient.len();
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![0u8; n];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            ambient,
            kind,
            basis,
        }
    }

    /// The right kernel {v : A v = 0}, living on the column ground set.
    pub fn kernel(a: &LabeledMatrix) -> Subspace {
        let rows: Vec<Vec<u8>> = (0..a.nrows())
            .map(|i| (0..a.ncols()).map(|j| a.raw_at(i, j)).collect())
            .collect();
        let basis = gauss::kernel_basis(a.kind(), &rows, a.ncols());
        Subspace::from_raw_rows(a.col_ground().clone(), a.kind(), basis)
    }

    pub fn ambient(&self) -> &GroundSet {
        &self.ambient
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// The canonical basis, one vector per row. Row labels are synthetic
    /// (`r0`, `r1`, ...); columns follow the ambient ground set.
    pub fn basis_matrix(&self) -> LabeledMatrix {
        let labels: Vec<String> = (0..self.dim()).map(|i| format!("r{i}")).collect();
        let rows = GroundSet::new(labels).expect("synthetic labels are valid");
        let data: Vec<u8> = self.basis.iter().flatten().copied().collect();
        LabeledMatrix::from_raw(rows, self.ambient.clone(), self.kind, data)
    }

    /// Membership, decided by reducing against the canonical basis.
    pub fn contains(&self, vector: &[FieldElement]) -> Result<bool, Error> {
        let n = self.ambient.len();
        if vector.len() != n {
            return Err(Error::Shape(format!(
                "expected a vector of length {n}, found {}",
                vector.len()
            )));
        }
        let mut v = Vec::with_capacity(n);
        for e in vector {
            if e.kind() != self.kind {
                return Err(Error::FieldMismatch {
                    expected: self.kind,
                    found: e.kind(),
                });
            }
            v.push(e.value());
        }
        Ok(self.reduces_to_zero(&v))
    }

    fn reduces_to_zero(&self, vector: &[u8]) -> bool {
        let kind = self.kind;
        let mut v = vector.to_vec();
        for row in &self.basis {
            let lead = row
                .iter()
                .position(|&e| e != 0)
                .expect("basis rows are nonzero");
            let factor = v[lead];
            if factor == 0 {
                continue;
            }
            // Pivots are 1, so subtracting factor * row clears v[lead].
            for (ve, re) in v.iter_mut().zip(row) {
                *ve = kind.sub_raw(*ve, kind.mul_raw(factor, *re));
            }
        }
        v.iter().all(|&e| e == 0)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), Error> {
        if !self.ambient.same_order(&other.ambient) {
            return Err(Error::GroundMismatch);
        }
        if self.kind != other.kind {
            return Err(Error::FieldMismatch {
                expected: self.kind,
                found: other.kind,
            });
        }
        Ok(())
    }

    /// The smallest subspace containing both operands.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_compatible(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Subspace::from_raw_rows(
            self.ambient.clone(),
            self.kind,
            rows,
        ))
    }

    /// The orthogonal complement under the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        let basis = gauss::kernel_basis(self.kind, &self.basis, self.ambient.len());
        Subspace::from_raw_rows(self.ambient.clone(), self.kind, basis)
    }

    /// Intersection, computed through complements: the complement of the sum
    /// of the complements.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_compatible(other)?;
        let sum = self
            .orthogonal_complement()
            .sum(&other.orthogonal_complement())?;
        Ok(sum.orthogonal_complement())
    }

    /// The entrywise image under a field automorphism. The map is semilinear,
    /// so the image is again a subspace.
    pub fn apply_automorphism(&self, alpha: Automorphism) -> Result<Subspace, Error> {
        if alpha.kind() != self.kind {
            return Err(Error::FieldMismatch {
                expected: self.kind,
                found: alpha.kind(),
            });
        }
        let rows = self
            .basis
            .iter()
            .map(|r| r.iter().map(|&e| alpha.apply_raw(e)).collect())
            .collect();
        Ok(Subspace::from_raw_rows(
            self.ambient.clone(),
            self.kind,
            rows,
        ))
    }

    pub(crate) fn raw_vectors(&self) -> Result<Vec<Vec<u8>>, Error> {
        let q = self.kind.order() as u128;
        let count = q.pow(self.dim() as u32);
        if count > VECTOR_ENUMERATION_BUDGET as u128 {
            return Err(Error::EnumerationBudget(
                count,
                VECTOR_ENUMERATION_BUDGET as u128,
            ));
        }
        let n = self.ambient.len();
        let mut out = Vec::with_capacity(count as usize);
        let mut coeffs = vec![0u8; self.dim()];
        loop {
            let mut v = vec![0u8; n];
            for (c, row) in coeffs.iter().zip(&self.basis) {
                if *c == 0 {
                    continue;
                }
                for (ve, re) in v.iter_mut().zip(row) {
                    *ve = self.kind.add_raw(*ve, self.kind.mul_raw(*c, *re));
                }
            }
            out.push(v);
            // Odometer over coefficient tuples.
            let mut i = 0;
            loop {
                if i == coeffs.len() {
                    return Ok(out);
                }
                coeffs[i] += 1;
                if coeffs[i] < self.kind.order() {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    /// Every vector of the subspace, q^dim of them, subject to the
    /// enumeration budget.
    pub fn vectors(&self) -> Result<Vec<Vec<FieldElement>>, Error> {
        let raw = self.raw_vectors()?;
        Ok(raw
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .map(|e| FieldElement::new(self.kind, e).expect("stored encodings are valid"))
                    .collect()
            })
            .collect())
    }
}

/// The matroid of a subspace: circuits are the inclusion-minimal nonempty
/// supports of its vectors, bases the maximal circuit-free sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceMatroid {
    circuits: SetSystem,
    bases: SetSystem,
}

impl SubspaceMatroid {
    pub fn circuits(&self) -> &SetSystem {
        &self.circuits
    }

    pub fn bases(&self) -> &SetSystem {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.bases
            .masks()
            .first()
            .map_or(0, |m| m.count_ones() as usize)
    }
}

/// Extracts the support matroid of a subspace by full vector enumeration.
pub fn matroid_from_subspace(l: &Subspace) -> Result<SubspaceMatroid, Error> {
    let n = l.ambient().len();
    let vectors = l.raw_vectors()?;
    let mut supports: Vec<u32> = vectors
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .fold(0u32, |m, (i, &e)| if e != 0 { m | 1 << i } else { m })
        })
        .filter(|&m| m != 0)
        .collect();
    supports.sort_unstable();
    supports.dedup();
    let circuits: Vec<u32> = supports
        .iter()
        .copied()
        .filter(|&s| !supports.iter().any(|&t| t != s && t & !s == 0))
        .collect();
    // Independent = contains no circuit; mark every superset of a circuit.
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut dependent = vec![false; 1usize << n];
    for &c in &circuits {
        let rest = full & !c;
        let mut extra = rest;
        loop {
            dependent[(c | extra) as usize] = true;
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & rest;
        }
    }
    let rank = (0..=full)
        .filter(|&m| !dependent[m as usize])
        .map(|m| m.count_ones())
        .max()
        .unwrap_or(0);
    let bases = (0..=full).filter(|&m| m.count_ones() == rank && !dependent[m as usize]);
    Ok(SubspaceMatroid {
        circuits: SetSystem::from_masks(l.ambient().clone(), circuits),
        bases: SetSystem::from_masks(l.ambient().clone(), bases),
    })
}

/// Bases of the column matroid of `b`: the column subsets of size rank(b)
/// whose columns are linearly independent.
pub fn column_matroid_bases(b: &LabeledMatrix) -> SetSystem {
    let kind = b.kind();
    let n = b.ncols();
    let rows: Vec<Vec<u8>> = (0..b.nrows())
        .map(|i| (0..n).map(|j| b.raw_at(i, j)).collect())
        .collect();
    let rank = {
        let mut r = rows.clone();
        gauss::rref(kind, &mut r, n).len()
    };
    let mut bases = Vec::new();
    for set in b.col_ground().subsets() {
        if set.len() != rank {
            continue;
        }
        let mut sub: Vec<Vec<u8>> = rows
            .iter()
            .map(|r| set.indices().map(|j| r[j]).collect())
            .collect();
        if gauss::rref(kind, &mut sub, rank).len() == rank {
            bases.push(set.mask());
        }
    }
    SetSystem::from_masks(b.col_ground().clone(), bases)
}

/// A full-row-rank matrix in the block form with an identity on the basis
/// columns, rows relabeled by those columns.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardRepresentation {
    matrix: LabeledMatrix,
    basis: LabelSet,
}

impl StandardRepresentation {
    pub fn matrix(&self) -> &LabeledMatrix {
        &self.matrix
    }

    /// The column set carrying the identity block.
    pub fn basis(&self) -> &LabelSet {
        &self.basis
    }

    /// The block on the non-basis columns.
    pub fn complement_block(&self) -> LabeledMatrix {
        self.matrix.submatrix(
            &self.matrix.row_ground().full_subset(),
            &self.basis.complement(),
        )
    }
}

/// Row-reduces a full-row-rank matrix so that the lexicographically first
/// independent column set (in ground order) carries an identity block.
pub fn standardize(braw: &LabeledMatrix) -> Result<StandardRepresentation, Error> {
    let kind = braw.kind();
    let n = braw.ncols();
    let mut rows: Vec<Vec<u8>> = (0..braw.nrows())
        .map(|i| (0..n).map(|j| braw.raw_at(i, j)).collect())
        .collect();
    let pivots = gauss::rref(kind, &mut rows, n);
    if pivots.len() != braw.nrows() {
        return Err(Error::RankDeficient);
    }
    // Echelon pivots are the greedy leftmost independent columns, which is
    // exactly the lexicographically first basis.
    let mask = pivots.iter().fold(0u32, |m, &p| m | 1 << p);
    let basis = braw.col_ground().subset_from_mask(mask);
    let row_ground = braw.col_ground().restrict(&basis);
    let data: Vec<u8> = rows.into_iter().flatten().collect();
    let matrix = LabeledMatrix::from_raw(row_ground, braw.col_ground().clone(), kind, data);
    Ok(StandardRepresentation { matrix, basis })
}

/// The square matrix with zero diagonal blocks induced by a standard
/// representation: S sits in the (basis, complement) block and the alpha
/// image of -S transposed in the opposite one. The result is
/// alpha-symmetric for every involutive alpha.
pub fn build_r_matrix(
    b: &StandardRepresentation,
    alpha: Automorphism,
) -> Result<LabeledMatrix, Error> {
    let kind = b.matrix().kind();
    if alpha.kind() != kind {
        return Err(Error::FieldMismatch {
            expected: kind,
            found: alpha.kind(),
        });
    }
    let ambient = b.matrix().col_ground().clone();
    let n = ambient.len();
    let mut data = vec![0u8; n * n];
    for (i, xi) in b.basis().indices().enumerate() {
        // Row i of the standard matrix is labeled by the i-th basis column.
        for vj in b.basis().complement().indices() {
            let s = b.matrix().raw_at(i, vj);
            data[xi * n + vj] = s;
            data[vj * n + xi] = alpha.apply_raw(kind.neg_raw(s));
        }
    }
    Ok(LabeledMatrix::from_raw(
        ambient.clone(),
        ambient,
        kind,
        data,
    ))
}

/// Checks the bridge from matroids to delta-matroids: the nonsingular
/// principal minors of the zero-diagonal matrix of a standard representation
/// are exactly the matroid's bases twisted by the chosen basis. Both sides
/// are computed independently.
pub fn twist_matroid_check(b: &StandardRepresentation) -> Result<bool, Error> {
    let r = build_r_matrix(b, Automorphism::identity(b.matrix().kind()))?;
    let left = matrix_delta_matroid(&r)?;
    let right = column_matroid_bases(b.matrix()).twist(b.basis());
    Ok(left == right)
}

/// The intersection of a subspace with the inverting image of its orthogonal
/// complement. Its dimension is the bicycle dimension.
pub fn bicycle_space(l: &Subspace) -> Subspace {
    let alpha = Automorphism::inverting(l.kind());
    let twisted = l
        .orthogonal_complement()
        .apply_automorphism(alpha)
        .expect("inverting map matches the field");
    l.intersect(&twisted).expect("same ambient space")
}

fn check_full_row_rank(braw: &LabeledMatrix) -> Result<(), Error> {
    // rank + kernel dimension = column count, so full row rank is a kernel
    // dimension check.
    if Subspace::kernel(braw).dim() + braw.nrows() != braw.ncols() {
        return Err(Error::RankDeficient);
    }
    Ok(())
}

/// The matroid of the bicycle space of ker(braw), as a basis system.
pub fn bicycle_matroid(braw: &LabeledMatrix) -> Result<SetSystem, Error> {
    if braw.kind() != FieldKind::Gf4 {
        return Err(Error::UnsupportedField {
            kind: braw.kind(),
            what: "the bicycle matroid construction",
        });
    }
    check_full_row_rank(braw)?;
    let m = matroid_from_subspace(&bicycle_space(&Subspace::kernel(braw)))?;
    Ok(m.bases)
}

/// Basis count and bicycle dimension of a full-row-rank matrix, together
/// with the parity law that connects them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityReport {
    pub bases: u64,
    pub bicycle_dimension: usize,
}

impl ParityReport {
    pub fn odd(&self) -> bool {
        self.bases % 2 == 1
    }

    /// The number of bases is odd exactly when the bicycle dimension is zero.
    pub fn consistent(&self) -> bool {
        self.odd() == (self.bicycle_dimension == 0)
    }
}

impl fmt::Display for ParityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bases={} ({}), bd={}, {}",
            self.bases,
            if self.odd() { "odd" } else { "even" },
            self.bicycle_dimension,
            if self.consistent() {
                "consistent"
            } else {
                "INCONSISTENT"
            }
        )
    }
}

/// Counts bases by column-subset determinants and compares the parity with
/// the bicycle dimension of the kernel.
pub fn bases_parity_check(braw: &LabeledMatrix) -> Result<ParityReport, Error> {
    if braw.kind() == FieldKind::Gf3 {
        return Err(Error::UnsupportedField {
            kind: braw.kind(),
            what: "the bases-parity law",
        });
    }
    check_full_row_rank(braw)?;
    let kind = braw.kind();
    let r = braw.nrows();
    let mut bases = 0u64;
    for set in braw.col_ground().subsets() {
        if set.len() != r {
            continue;
        }
        let mut sub = Vec::with_capacity(r * r);
        for i in 0..r {
            for j in set.indices() {
                sub.push(braw.raw_at(i, j));
            }
        }
        if gauss::det(kind, r, sub) != 0 {
            bases += 1;
        }
    }
    let bd = bicycle_space(&Subspace::kernel(braw)).dim();
    Ok(ParityReport {
        bases,
        bicycle_dimension: bd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldKind::{Gf2, Gf3, Gf4};
    use crate::setsystem::FlipOp;
    use crate::text;

    fn ground(labels: &str) -> GroundSet {
        GroundSet::new(labels.split_whitespace().map(str::to_string)).unwrap()
    }

    fn mat(src: &str) -> LabeledMatrix {
        text::parse_matrix(src).unwrap()
    }

    fn fe(kind: FieldKind, values: &[u8]) -> Vec<FieldElement> {
        values
            .iter()
            .map(|&v| FieldElement::new(kind, v).unwrap())
            .collect()
    }

    fn span_of(g: &GroundSet, kind: FieldKind, rows: &[&[u8]]) -> Subspace {
        Subspace::span(g.clone(), kind, rows.iter().map(|r| fe(kind, r)).collect()).unwrap()
    }

    fn system(g: &GroundSet, subsets: &[&[&str]]) -> SetSystem {
        SetSystem::new(
            g.clone(),
            subsets.iter().map(|s| g.subset(s.iter().copied()).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn kernel_of_identity_is_zero_and_kernel_of_no_rows_is_everything() {
        let g = ground("a b c");
        let ker = Subspace::kernel(&LabeledMatrix::identity(g.clone(), Gf3));
        assert_eq!(ker.dim(), 0);
        assert!(ker.is_zero());
        assert_eq!(ker, Subspace::zero(g.clone(), Gf3));

        let empty_rows = GroundSet::new(Vec::<String>::new()).unwrap();
        let ker = Subspace::kernel(&LabeledMatrix::zeros(empty_rows, g.clone(), Gf4));
        assert_eq!(ker.dim(), 3);
        assert_eq!(ker, Subspace::full(g, Gf4));
    }

    #[test]
    fn kernel_of_the_all_ones_row_is_the_diagonal_line() {
        let ker = Subspace::kernel(&mat("rmatrix GF4 1 2\nr0\na b\n1 1\n"));
        assert_eq!(ker.dim(), 1);
        let g = ker.ambient().clone();
        assert_eq!(ker, span_of(&g, Gf4, &[&[1, 1]]));
        assert!(ker.contains(&fe(Gf4, &[2, 2])).unwrap());
        assert!(!ker.contains(&fe(Gf4, &[1, 2])).unwrap());
    }

    #[test]
    fn canonical_bases_decide_equality() {
        let g = ground("a b");
        assert_eq!(span_of(&g, Gf4, &[&[2, 2]]), span_of(&g, Gf4, &[&[1, 1]]));
        assert_ne!(span_of(&g, Gf4, &[&[1, 2]]), span_of(&g, Gf4, &[&[1, 1]]));
        // Redundant spanning vectors collapse to the same basis.
        assert_eq!(
            span_of(&g, Gf3, &[&[1, 2], &[2, 1], &[0, 0]]),
            span_of(&g, Gf3, &[&[1, 2]])
        );
    }

    #[test]
    fn complement_dimension_law_and_involution() {
        let a = mat("rmatrix GF3 2 4\nr0 r1\na b c d\n1 2 0 1\n0 1 1 2\n");
        let l = Subspace::kernel(&a);
        let perp = l.orthogonal_complement();
        assert_eq!(l.dim() + perp.dim(), 4);
        assert_eq!(perp.orthogonal_complement(), l);

        let g = ground("a b c");
        assert_eq!(
            Subspace::zero(g.clone(), Gf2).orthogonal_complement(),
            Subspace::full(g.clone(), Gf2)
        );
        assert_eq!(
            Subspace::full(g.clone(), Gf2).orthogonal_complement(),
            Subspace::zero(g, Gf2)
        );
    }

    #[test]
    fn complement_of_a_standard_kernel_has_the_transposed_standard_form() {
        // With B = [I | S] the complement of ker(B) is ker of [-S^T | I].
        let b3 = mat("rmatrix GF3 2 4\nr0 r1\na b c d\n1 0 2 1\n0 1 1 1\n");
        let t3 = mat("rmatrix GF3 2 4\nr0 r1\na b c d\n1 2 1 0\n2 2 0 1\n");
        assert_eq!(
            Subspace::kernel(&b3).orthogonal_complement(),
            Subspace::kernel(&t3)
        );

        let b4 = mat("rmatrix GF4 2 4\nr0 r1\na b c d\n1 0 w 1\n0 1 w2 w\n");
        let t4 = mat("rmatrix GF4 2 4\nr0 r1\na b c d\nw w2 1 0\n1 w 0 1\n");
        assert_eq!(
            Subspace::kernel(&b4).orthogonal_complement(),
            Subspace::kernel(&t4)
        );
    }

    #[test]
    fn intersection_of_distinct_lines_is_zero() {
        let g = ground("a b");
        let diag = span_of(&g, Gf4, &[&[1, 1]]);
        let other = span_of(&g, Gf4, &[&[1, 2]]);
        assert_eq!(
            diag.intersect(&other).unwrap(),
            Subspace::zero(g.clone(), Gf4)
        );
        assert_eq!(diag.intersect(&diag).unwrap(), diag);
        assert_eq!(
            diag.intersect(&Subspace::zero(g.clone(), Gf4)).unwrap(),
            Subspace::zero(g, Gf4)
        );
    }

    #[test]
    fn intersection_rejects_mismatched_operands() {
        let g = ground("a b");
        let h = ground("x y");
        let l = span_of(&g, Gf4, &[&[1, 1]]);
        assert_eq!(
            l.intersect(&Subspace::zero(h, Gf4)),
            Err(Error::GroundMismatch)
        );
        assert_eq!(
            l.intersect(&Subspace::zero(g, Gf2)),
            Err(Error::FieldMismatch {
                expected: Gf4,
                found: Gf2
            })
        );
    }

    #[test]
    fn automorphism_image_inverts_entries_and_is_involutive() {
        let g = ground("a b");
        let l = span_of(&g, Gf4, &[&[1, 2]]);
        let inv = Automorphism::inversion(Gf4).unwrap();
        let image = l.apply_automorphism(inv).unwrap();
        assert_eq!(image, span_of(&g, Gf4, &[&[1, 3]]));
        assert_eq!(image.apply_automorphism(inv).unwrap(), l);
        assert_eq!(
            l.apply_automorphism(Automorphism::identity(Gf4)).unwrap(),
            l
        );
        assert_eq!(
            l.apply_automorphism(Automorphism::identity(Gf2)),
            Err(Error::FieldMismatch {
                expected: Gf4,
                found: Gf2
            })
        );
    }

    #[test]
    fn vector_enumeration_counts_and_budget() {
        let g = ground("a b");
        let l = span_of(&g, Gf4, &[&[1, 1]]);
        let vectors = l.vectors().unwrap();
        assert_eq!(vectors.len(), 4);
        for v in &vectors {
            assert!(l.contains(v).unwrap());
        }

        let wide = ground("a b c d e f g h i j k l");
        let all = Subspace::full(wide, Gf4);
        assert_eq!(
            all.vectors(),
            Err(Error::EnumerationBudget(1 << 24, 1 << 20))
        );
    }

    #[test]
    fn support_matroid_of_the_two_point_line() {
        let ker = Subspace::kernel(&mat("rmatrix GF4 1 2\nr0\na b\n1 1\n"));
        let m = matroid_from_subspace(&ker).unwrap();
        let g = ker.ambient().clone();
        assert_eq!(*m.circuits(), system(&g, &[&["a", "b"]]));
        assert_eq!(*m.bases(), system(&g, &[&["a"], &["b"]]));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn support_matroid_of_the_zero_space_is_free() {
        let g = ground("a b c");
        let m = matroid_from_subspace(&Subspace::zero(g.clone(), Gf2)).unwrap();
        assert_eq!(*m.circuits(), SetSystem::empty_family(g.clone()));
        assert_eq!(*m.bases(), system(&g, &[&["a", "b", "c"]]));
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn kernel_matroid_agrees_with_column_determinants() {
        // Two routes to the matroid of a matrix: minimal supports of the
        // kernel versus direct column-independence enumeration.
        for src in [
            "rmatrix GF4 2 4\nr0 r1\na b c d\n1 0 w 1\n0 1 w2 w\n",
            "rmatrix GF3 2 4\nr0 r1\na b c d\n1 2 0 1\n0 1 1 2\n",
            "rmatrix GF2 2 3\nr0 r1\na b c\n1 1 0\n0 1 1\n",
        ] {
            let b = mat(src);
            let m = matroid_from_subspace(&Subspace::kernel(&b)).unwrap();
            assert_eq!(*m.bases(), column_matroid_bases(&b), "{src}");
        }
    }

    #[test]
    fn column_matroid_ignores_redundant_rows() {
        let tall = mat("rmatrix GF2 2 2\nr0 r1\na b\n1 1\n1 1\n");
        let flat = mat("rmatrix GF2 1 2\nr0\na b\n1 1\n");
        assert_eq!(column_matroid_bases(&tall), column_matroid_bases(&flat));
    }

    #[test]
    fn standardize_scales_a_single_row() {
        let std = standardize(&mat("rmatrix GF4 1 2\nr0\na b\nw w\n")).unwrap();
        assert_eq!(std.basis().labels().collect::<Vec<_>>(), vec!["a"]);
        assert_eq!(std.matrix().entry("a", "a").unwrap().value(), 1);
        assert_eq!(std.matrix().entry("a", "b").unwrap().value(), 1);
    }

    #[test]
    fn standardize_keeps_standard_input_and_picks_lex_first_basis() {
        let std =
            standardize(&mat("rmatrix GF4 2 4\nr0 r1\na b c d\n1 0 w 1\n0 1 w2 w\n")).unwrap();
        // Re-standardizing a standard representation changes nothing.
        assert_eq!(standardize(std.matrix()).unwrap(), std);
        assert_eq!(std.basis().labels().collect::<Vec<_>>(), vec!["a", "b"]);

        // A zero first column pushes the basis to the right.
        let shifted = standardize(&mat("rmatrix GF2 2 3\nr0 r1\na b c\n0 1 1\n0 0 1\n")).unwrap();
        assert_eq!(shifted.basis().labels().collect::<Vec<_>>(), vec!["b", "c"]);

        assert_eq!(
            standardize(&mat("rmatrix GF2 2 2\nr0 r1\na b\n1 1\n1 1\n")),
            Err(Error::RankDeficient)
        );
    }

    #[test]
    fn standardize_preserves_the_kernel() {
        let b = mat("rmatrix GF4 2 4\nr0 r1\na b c d\nw 1 w2 0\nw2 w 1 1\n");
        let std = standardize(&b).unwrap();
        assert_eq!(Subspace::kernel(std.matrix()), Subspace::kernel(&b));
        // The identity block really sits on the basis columns.
        for (i, x) in std.basis().labels().enumerate() {
            for (j, y) in std.basis().labels().enumerate() {
                let expect = u8::from(i == j);
                assert_eq!(std.matrix().entry(x, y).unwrap().value(), expect);
            }
        }
    }

    #[test]
    fn r_matrix_of_the_two_point_line_swaps_coordinates() {
        let std = standardize(&mat("rmatrix GF4 1 2\nr0\na b\n1 1\n")).unwrap();
        let inv = Automorphism::inversion(Gf4).unwrap();
        let r = build_r_matrix(&std, inv).unwrap();
        assert_eq!(r, mat("matrix GF4 2\na b\n0 1\n1 0\n"));
        assert!(r.is_alpha_symmetric(inv).unwrap());
    }

    #[test]
    fn r_matrix_without_remainder_block_is_zero() {
        let std = standardize(&mat("rmatrix GF3 2 2\nr0 r1\na b\n1 0\n0 1\n")).unwrap();
        let r = build_r_matrix(&std, Automorphism::identity(Gf3)).unwrap();
        assert_eq!(r, mat("matrix GF3 2\na b\n0 0\n0 0\n"));
    }

    #[test]
    fn r_matrix_is_skew_over_gf3_and_rejects_foreign_automorphisms() {
        let std = standardize(&mat("rmatrix GF3 1 2\nr0\na b\n1 2\n")).unwrap();
        let id = Automorphism::identity(Gf3);
        let r = build_r_matrix(&std, id).unwrap();
        assert_eq!(r, mat("matrix GF3 2\na b\n0 2\n1 0\n"));
        assert!(r.is_alpha_symmetric(id).unwrap());
        assert_eq!(
            build_r_matrix(&std, Automorphism::identity(Gf4)),
            Err(Error::FieldMismatch {
                expected: Gf3,
                found: Gf4
            })
        );
    }

    #[test]
    fn nonsingular_minors_of_r_do_not_depend_on_the_automorphism() {
        for src in [
            "rmatrix GF4 1 2\nr0\na b\n1 1\n",
            "rmatrix GF4 2 4\nr0 r1\na b c d\n1 0 w 1\n0 1 w2 w\n",
        ] {
            let std = standardize(&mat(src)).unwrap();
            let with_id = build_r_matrix(&std, Automorphism::identity(Gf4)).unwrap();
            let with_inv = build_r_matrix(&std, Automorphism::inversion(Gf4).unwrap()).unwrap();
            assert_eq!(
                matrix_delta_matroid(&with_id).unwrap(),
                matrix_delta_matroid(&with_inv).unwrap(),
                "{src}"
            );
        }
    }

    #[test]
    fn twist_matroid_check_on_the_two_point_line() {
        let std = standardize(&mat("rmatrix GF4 1 2\nr0\na b\n1 1\n")).unwrap();
        // Both sides frozen by hand: minors {{}, {a,b}}, bases {{a},{b}}
        // twisted by {a}.
        let r = build_r_matrix(&std, Automorphism::identity(Gf4)).unwrap();
        let g = r.ground().clone();
        let minors = matrix_delta_matroid(&r).unwrap();
        assert_eq!(minors, system(&g, &[&[], &["a", "b"]]));
        let bases = column_matroid_bases(std.matrix());
        assert_eq!(bases, system(&g, &[&["a"], &["b"]]));
        assert_eq!(bases.twist(std.basis()), minors);
        assert!(twist_matroid_check(&std).unwrap());
    }

    #[test]
    fn twist_matroid_check_on_a_free_matroid() {
        let std = standardize(&mat("rmatrix GF2 2 2\nr0 r1\na b\n1 0\n0 1\n")).unwrap();
        assert!(twist_matroid_check(&std).unwrap());
    }

    #[test]
    fn bicycle_space_fixed_points() {
        let g = ground("a b");
        assert!(bicycle_space(&Subspace::zero(g.clone(), Gf4)).is_zero());

        let diag = Subspace::kernel(&mat("rmatrix GF4 1 2\nr0\na b\n1 1\n"));
        let bc = bicycle_space(&diag);
        assert_eq!(bc, diag);
        assert_eq!(bc.dim(), 1);

        let point = Subspace::kernel(&mat("rmatrix GF4 1 1\nr0\na\n1\n"));
        assert!(bicycle_space(&point).is_zero());
    }

    #[test]
    fn bicycle_matroid_matches_the_loop_complement_formula() {
        // Left side by kernel enumeration, right side by flips on the bases.
        for src in [
            "rmatrix GF4 1 2\nr0\na b\n1 1\n",
            "rmatrix GF4 1 1\nr0\na\n1\n",
            "rmatrix GF4 2 4\nr0 r1\na b c d\n1 0 w 1\n0 1 w2 w\n",
        ] {
            let b = mat(src);
            let left = bicycle_matroid(&b).unwrap();
            let bases = column_matroid_bases(&b);
            let right = bases
                .apply_bulk(FlipOp::LoopComplement, &b.col_ground().full_subset())
                .max_sets();
            assert_eq!(left, right, "{src}");
        }
    }

    #[test]
    fn bicycle_matroid_of_the_two_point_line_is_itself() {
        let b = mat("rmatrix GF4 1 2\nr0\na b\n1 1\n");
        let g = b.col_ground().clone();
        assert_eq!(bicycle_matroid(&b).unwrap(), system(&g, &[&["a"], &["b"]]));
    }

    #[test]
    fn bicycle_matroid_rejects_other_fields_and_rank_deficiency() {
        assert_eq!(
            bicycle_matroid(&mat("rmatrix GF2 1 2\nr0\na b\n1 1\n")),
            Err(Error::UnsupportedField {
                kind: Gf2,
                what: "the bicycle matroid construction"
            })
        );
        assert_eq!(
            bicycle_matroid(&mat("rmatrix GF4 2 2\nr0 r1\na b\n1 1\n1 1\n")),
            Err(Error::RankDeficient)
        );
    }

    #[test]
    fn parity_report_for_the_two_point_line() {
        let report = bases_parity_check(&mat("rmatrix GF4 1 2\nr0\na b\n1 1\n")).unwrap();
        assert_eq!(report.bases, 2);
        assert!(!report.odd());
        assert_eq!(report.bicycle_dimension, 1);
        assert!(report.consistent());
        assert_eq!(report.to_string(), "bases=2 (even), bd=1, consistent");
    }

    #[test]
    fn parity_report_for_a_single_point() {
        let report = bases_parity_check(&mat("rmatrix GF4 1 1\nr0\na\n1\n")).unwrap();
        assert_eq!(report.bases, 1);
        assert!(report.odd());
        assert_eq!(report.bicycle_dimension, 0);
        assert!(report.consistent());
        assert_eq!(report.to_string(), "bases=1 (odd), bd=0, consistent");
    }

    #[test]
    fn parity_check_is_for_characteristic_two_fields_only() {
        assert_eq!(
            bases_parity_check(&mat("rmatrix GF3 1 2\nr0\na b\n1 2\n")),
            Err(Error::UnsupportedField {
                kind: Gf3,
                what: "the bases-parity law"
            })
        );
        let binary = bases_parity_check(&mat("rmatrix GF2 2 3\nr0 r1\na b c\n1 1 0\n0 1 1\n"));
        assert!(binary.unwrap().consistent());
    }
}
