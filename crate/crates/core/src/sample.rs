//! Seeded generators for test data: matrices with prescribed symmetries,
//! full-rank rectangles, subspaces, flip words and set systems.

use rand::Rng;

use crate::field::{Automorphism, FieldKind};
use crate::ground::GroundSet;
use crate::matrix::LabeledMatrix;
use crate::setsystem::{FlipOp, FlipStep, FlipWord, SetSystem};
use crate::subspace::Subspace;

/// The first `n` single-letter labels, `a` through `p`.
pub fn alpha_ground(n: usize) -> GroundSet {
    assert!(n <= 16, "label alphabet covers 16 elements");
    let labels = "abcdefghijklmnop".chars().take(n).map(|c| c.to_string());
    GroundSet::new(labels).expect("letter labels are valid")
}

fn raw_element(rng: &mut impl Rng, kind: FieldKind) -> u8 {
    rng.gen_range(0..kind.order())
}

/// Uniformly random square matrix on the given ground set.
pub fn random_matrix(rng: &mut impl Rng, ground: &GroundSet, kind: FieldKind) -> LabeledMatrix {
    random_rect(rng, ground, ground, kind)
}

/// Uniformly random rectangular matrix.
pub fn random_rect(
    rng: &mut impl Rng,
    rows: &GroundSet,
    cols: &GroundSet,
    kind: FieldKind,
) -> LabeledMatrix {
    let data = (0..rows.len() * cols.len())
        .map(|_| raw_element(rng, kind))
        .collect();
    LabeledMatrix::from_raw(rows.clone(), cols.clone(), kind, data)
}

/// Random matrix equal to the alpha image of its negated transpose: entries
/// below the diagonal are forced, diagonal entries are sampled from the
/// fixed points of x -> alpha(-x).
pub fn random_alpha_symmetric(
    rng: &mut impl Rng,
    ground: &GroundSet,
    alpha: Automorphism,
) -> LabeledMatrix {
    let kind = alpha.kind();
    let fixed: Vec<u8> = (0..kind.order())
        .filter(|&v| alpha.apply_raw(kind.neg_raw(v)) == v)
        .collect();
    let n = ground.len();
    let mut data = vec![0u8; n * n];
    for i in 0..n {
        data[i * n + i] = fixed[rng.gen_range(0..fixed.len())];
        for j in i + 1..n {
            let v = raw_element(rng, kind);
            data[i * n + j] = v;
            data[j * n + i] = alpha.apply_raw(kind.neg_raw(v));
        }
    }
    LabeledMatrix::from_raw(ground.clone(), ground.clone(), kind, data)
}

/// Rejection-samples an invertible square matrix.
pub fn random_invertible(rng: &mut impl Rng, ground: &GroundSet, kind: FieldKind) -> LabeledMatrix {
    loop {
        let a = random_matrix(rng, ground, kind);
        if !a.det().expect("square by construction").is_zero() {
            return a;
        }
    }
}

/// Rejection-samples a matrix of full row rank.
pub fn random_full_row_rank(
    rng: &mut impl Rng,
    rows: &GroundSet,
    cols: &GroundSet,
    kind: FieldKind,
) -> LabeledMatrix {
    assert!(rows.len() <= cols.len(), "row count exceeds column count");
    loop {
        let b = random_rect(rng, rows, cols, kind);
        // rank + kernel dimension = column count.
        if Subspace::kernel(&b).dim() + b.nrows() == b.ncols() {
            return b;
        }
    }
}

/// Random subspace: the span of k uniform vectors, k uniform in 0..=n.
pub fn random_subspace(rng: &mut impl Rng, ground: &GroundSet, kind: FieldKind) -> Subspace {
    let n = ground.len();
    let k = rng.gen_range(0..=n);
    let rows = (0..k)
        .map(|_| (0..n).map(|_| raw_element(rng, kind)).collect())
        .collect();
    Subspace::from_raw_rows(ground.clone(), kind, rows)
}

/// Random flip word of exactly `len` uniformly chosen steps.
pub fn random_word(rng: &mut impl Rng, ground: &GroundSet, len: usize) -> FlipWord {
    assert!(!ground.is_empty(), "words need at least one element");
    let ops = [FlipOp::Twist, FlipOp::LoopComplement, FlipOp::DualPivot];
    let steps = (0..len)
        .map(|_| {
            let op = ops[rng.gen_range(0..ops.len())];
            let label = ground.label(rng.gen_range(0..ground.len()));
            FlipStep::new(op, label)
        })
        .collect();
    FlipWord::new(steps)
}

/// Random proper set system: every subset joins with probability 1/2, and a
/// random member is forced in when that leaves the family empty.
pub fn random_set_system(rng: &mut impl Rng, ground: &GroundSet) -> SetSystem {
    let total = 1u64 << ground.len();
    let mut members: Vec<u32> = (0..total as u32).filter(|_| rng.gen_bool(0.5)).collect();
    if members.is_empty() {
        members.push(rng.gen_range(0..total) as u32);
    }
    SetSystem::from_masks(ground.clone(), members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldKind::{Gf2, Gf3, Gf4};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn alpha_ground_takes_letters_in_order() {
        assert_eq!(alpha_ground(3).labels(), ["a", "b", "c"]);
        assert_eq!(alpha_ground(0).len(), 0);
        assert_eq!(alpha_ground(16).label(15), "p");
    }

    #[test]
    fn generators_are_deterministic_for_a_fixed_seed() {
        let g = alpha_ground(4);
        let a = random_matrix(&mut rng(7), &g, Gf4);
        let b = random_matrix(&mut rng(7), &g, Gf4);
        assert_eq!(a, b);
        let w1 = random_word(&mut rng(9), &g, 6);
        let w2 = random_word(&mut rng(9), &g, 6);
        assert_eq!(w1.to_string(), w2.to_string());
    }

    #[test]
    fn symmetric_samples_satisfy_their_symmetry() {
        let g = alpha_ground(5);
        let combos = [
            Automorphism::identity(Gf2),
            Automorphism::identity(Gf3),
            Automorphism::identity(Gf4),
            Automorphism::inversion(Gf4).unwrap(),
        ];
        let mut r = rng(21);
        for alpha in combos {
            for _ in 0..20 {
                let a = random_alpha_symmetric(&mut r, &g, alpha);
                assert!(a.is_alpha_symmetric(alpha).unwrap(), "{alpha:?}");
            }
        }
    }

    #[test]
    fn rank_constrained_samples_have_the_rank() {
        let mut r = rng(3);
        let rows = alpha_ground(3);
        let cols = alpha_ground(6);
        for _ in 0..10 {
            let b = random_full_row_rank(&mut r, &rows, &cols, Gf4);
            assert_eq!(Subspace::kernel(&b).dim(), 3);
            let a = random_invertible(&mut r, &rows, Gf3);
            assert!(!a.det().unwrap().is_zero());
        }
    }

    #[test]
    fn set_systems_are_proper_and_words_have_requested_length() {
        let g = alpha_ground(3);
        let mut r = rng(11);
        for _ in 0..50 {
            assert!(random_set_system(&mut r, &g).is_proper());
        }
        assert_eq!(random_word(&mut r, &g, 8).len(), 8);
        let l = random_subspace(&mut r, &g, Gf4);
        assert!(l.dim() <= 3);
    }
}
