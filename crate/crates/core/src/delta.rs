//! Delta-matroid recognition, matrix representations and flip-orbit search.
//!
//! A proper set system M is a delta-matroid when for all members X, Y and
//! every u in X delta Y, either X delta {u} is a member or some v in
//! X delta Y with v != u makes X delta {u, v} one. Nonsingular principal
//! submatrices of an alpha-symmetric matrix always form a delta-matroid;
//! `vf_transport` pushes such a representation along an arbitrary flip word,
//! and `is_vf_safe` decides whether a system's entire flip orbit stays
//! inside the delta-matroid world.

use std::collections::{HashSet, VecDeque};

use crate::error::Error;
use crate::field::{Automorphism, FieldKind};
use crate::ground::LabelSet;
use crate::matrix::LabeledMatrix;
use crate::setsystem::{normalize_word, FlipOp, FlipStep, FlipWord, SetSystem};

/// Default node limit for [`is_vf_safe`] orbit exploration.
pub const DEFAULT_ORBIT_BUDGET: usize = 2_000_000;

/// A concrete failure of the symmetric exchange axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub x: LabelSet,
    pub y: LabelSet,
    pub u: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaMatroidCheck {
    DeltaMatroid,
    /// The empty family is rejected outright; there is no witness triple.
    Improper,
    Violation(ExchangeViolation),
}

impl DeltaMatroidCheck {
    pub fn holds(&self) -> bool {
        matches!(self, DeltaMatroidCheck::DeltaMatroid)
    }
}

/// Decides the symmetric exchange axiom by brute force over member pairs.
/// The witness, when one exists, is the first violation in ascending mask
/// order (members ordered as stored, u by ground index), so it is stable
/// across runs.
pub fn is_delta_matroid(m: &SetSystem) -> DeltaMatroidCheck {
    if !m.is_proper() {
        return DeltaMatroidCheck::Improper;
    }
    let ground = m.ground();
    let mut in_family = vec![false; 1usize << ground.len()];
    for &mask in m.masks() {
        in_family[mask as usize] = true;
    }
    for &x in m.masks() {
        for &y in m.masks() {
            let diff = x ^ y;
            let mut ubits = diff;
            while ubits != 0 {
                let ub = ubits & ubits.wrapping_neg();
                ubits ^= ub;
                if in_family[(x ^ ub) as usize] {
                    continue;
                }
                let mut rescued = false;
                let mut vbits = diff & !ub;
                while vbits != 0 {
                    let vb = vbits & vbits.wrapping_neg();
                    vbits ^= vb;
                    if in_family[(x ^ ub ^ vb) as usize] {
                        rescued = true;
                        break;
                    }
                }
                if !rescued {
                    return DeltaMatroidCheck::Violation(ExchangeViolation {
                        x: ground.subset_from_mask(x),
                        y: ground.subset_from_mask(y),
                        u: ground.label(ub.trailing_zeros() as usize).to_string(),
                    });
                }
            }
        }
    }
    DeltaMatroidCheck::DeltaMatroid
}

/// Matroid basis systems are exactly the equicardinal delta-matroids.
pub fn is_matroid_basis_system(m: &SetSystem) -> bool {
    m.is_equicardinal() && is_delta_matroid(m).holds()
}

/// The set system {X : A[X] nonsingular} of a square matrix. The empty set
/// is always a member (the 0 x 0 determinant is 1).
pub fn matrix_delta_matroid(a: &LabeledMatrix) -> Result<SetSystem, Error> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let ground = a.ground().clone();
    let mut masks = Vec::new();
    for i in 0..1u32 << ground.len() {
        let mask = i ^ (i >> 1);
        if a.det_principal_mask(mask) != 0 {
            masks.push(mask);
        }
    }
    Ok(SetSystem::from_masks(ground, masks))
}

/// A twisted matrix representation (A, alpha, X): it stands for the system
/// {Z : A[Z] nonsingular} * X, which is a delta-matroid whenever A is
/// alpha-symmetric (checked at construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    matrix: LabeledMatrix,
    alpha: Automorphism,
    twist: LabelSet,
}

impl Representation {
    pub fn new(
        matrix: LabeledMatrix,
        alpha: Automorphism,
        twist: LabelSet,
    ) -> Result<Representation, Error> {
        if !matrix.is_alpha_symmetric(alpha)? {
            return Err(Error::NotAlphaSymmetric);
        }
        if !twist.ground().same_order(matrix.ground()) {
            return Err(Error::GroundMismatch);
        }
        Ok(Representation {
            matrix,
            alpha,
            twist,
        })
    }

    pub fn matrix(&self) -> &LabeledMatrix {
        &self.matrix
    }

    pub fn alpha(&self) -> Automorphism {
        self.alpha
    }

    pub fn twist(&self) -> &LabelSet {
        &self.twist
    }

    /// The represented delta-matroid {Z : A[Z] nonsingular} * X.
    pub fn delta_matroid(&self) -> SetSystem {
        matrix_delta_matroid(&self.matrix)
            .expect("representation matrices are square")
            .twist(&self.twist)
    }
}

/// Carries a representation along a word of flips: the result represents
/// `rep.delta_matroid().apply_word(word)`.
///
/// Supported only where pivoting is guaranteed to stay inside the
/// representation class: GF(4) with the inverting automorphism and GF(2)
/// with the identity. The new twist is the smallest member (by bitmask) of
/// the transported system; the word `*X . word . *W` then collapses to
/// +Z1 *Z2 +Z3 and the new matrix is ((A + Z1) * Z2) + Z3.
pub fn vf_transport(rep: &Representation, word: &FlipWord) -> Result<Representation, Error> {
    let kind = rep.matrix().kind();
    let supported = matches!(
        (kind, rep.alpha().is_identity()),
        (FieldKind::Gf4, false) | (FieldKind::Gf2, true)
    );
    if !supported {
        return Err(Error::UnsupportedRepresentation {
            kind,
            alpha: rep.alpha().name(),
        });
    }
    let target = rep.delta_matroid().apply_word(word)?;
    let ground = rep.matrix().ground().clone();
    let w_mask = target
        .masks()
        .first()
        .copied()
        .ok_or_else(|| Error::Invariant("transported system has no members".to_string()))?;
    let new_twist = ground.subset_from_mask(w_mask);

    let mut phi = FlipWord::empty();
    for label in rep.twist().labels() {
        phi.push(FlipStep::new(FlipOp::Twist, label));
    }
    phi = phi.then(word);
    for label in new_twist.labels() {
        phi.push(FlipStep::new(FlipOp::Twist, label));
    }
    let nf = normalize_word(&phi, &ground)?;

    let bumped = rep.matrix().add_identity_on(nf.z1())?;
    let pivoted = bumped.ppt(nf.z2()).map_err(|e| match e {
        Error::SingularPivot => Error::Invariant("normal-form pivot block is singular".to_string()),
        other => other,
    })?;
    let result = pivoted.add_identity_on(nf.z3())?;
    Representation::new(result, rep.alpha(), new_twist).map_err(|e| match e {
        Error::NotAlphaSymmetric => {
            Error::Invariant("transported matrix lost alpha-symmetry".to_string())
        }
        other => other,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VfSafety {
    /// The whole orbit was explored and every member is a delta-matroid.
    Safe { explored: usize },
    /// Replaying `witness` on the starting system produces a system with
    /// the recorded exchange violation.
    Unsafe {
        witness: FlipWord,
        violation: ExchangeViolation,
    },
    /// The node budget ran out before the orbit was exhausted.
    Exhausted { explored: usize },
}

/// Breadth-first search of the orbit of `m` under all single-element twists
/// and loop complementations (dual pivots are compositions of those, so
/// they add nothing to the orbit). Deterministic: generators are tried in
/// ground order, twist before loop complementation.
pub fn is_vf_safe(m: &SetSystem, budget: usize) -> Result<VfSafety, Error> {
    if !m.is_proper() {
        return Err(Error::ImproperSetSystem);
    }
    if let DeltaMatroidCheck::Violation(violation) = is_delta_matroid(m) {
        return Ok(VfSafety::Unsafe {
            witness: FlipWord::empty(),
            violation,
        });
    }
    let ground = m.ground().clone();

    // Parent pointers reconstruct the generating word for a witness.
    struct Node {
        system: SetSystem,
        parent: usize,
        step: Option<FlipStep>,
    }
    let path_to = |nodes: &[Node], mut idx: usize, last: FlipStep| -> FlipWord {
        let mut steps = vec![last];
        while let Some(step) = &nodes[idx].step {
            steps.push(step.clone());
            idx = nodes[idx].parent;
        }
        steps.reverse();
        FlipWord::new(steps)
    };

    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    visited.insert(m.masks().to_vec());
    let mut nodes = vec![Node {
        system: m.clone(),
        parent: 0,
        step: None,
    }];
    let mut queue = VecDeque::from([0usize]);
    let mut explored = 1usize;

    while let Some(idx) = queue.pop_front() {
        for u in 0..ground.len() {
            for op in [FlipOp::Twist, FlipOp::LoopComplement] {
                let next = match op {
                    FlipOp::Twist => nodes[idx].system.twist_mask(1 << u),
                    _ => nodes[idx].system.loop_complement_index(u),
                };
                if !visited.insert(next.masks().to_vec()) {
                    continue;
                }
                if explored >= budget {
                    return Ok(VfSafety::Exhausted { explored });
                }
                explored += 1;
                let step = FlipStep::new(op, ground.label(u));
                match is_delta_matroid(&next) {
                    DeltaMatroidCheck::Violation(violation) => {
                        return Ok(VfSafety::Unsafe {
                            witness: path_to(&nodes, idx, step),
                            violation,
                        });
                    }
                    DeltaMatroidCheck::Improper => {
                        unreachable!("flips of a proper system stay proper")
                    }
                    DeltaMatroidCheck::DeltaMatroid => {
                        nodes.push(Node {
                            system: next,
                            parent: idx,
                            step: Some(step),
                        });
                        queue.push_back(nodes.len() - 1);
                    }
                }
            }
        }
    }
    Ok(VfSafety::Safe { explored })
}
