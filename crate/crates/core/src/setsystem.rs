//! Set systems over a ground set and the three vertex flips.
//!
//! For a set system M = (V, E) and u in V:
//!
//! * twist (`*X`):             E delta X = { Y delta X : Y in E }
//! * loop complementation (`+u`): E delta { Y + u : Y in E, u not in Y }
//! * dual pivot (`du`):        +u *u +u, equally *u +u *u
//!
//! On a fixed element these three generate a copy of the symmetric group
//! S_3, and flips on distinct elements commute, so every word in the flips
//! collapses to the normal form +Z1 *Z2 +Z3 with Z1 subseteq Z2. The family
//! is stored as a sorted vector of bitmasks; all flips rebuild it, keeping
//! every `SetSystem` canonical by construction.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::ground::{GroundSet, LabelSet};

#[derive(Debug, Clone)]
pub struct SetSystem {
    ground: GroundSet,
    members: Vec<u32>, // sorted, deduplicated
}

impl SetSystem {
    pub fn new<I>(ground: GroundSet, subsets: I) -> Result<SetSystem, Error>
    where
        I: IntoIterator<Item = LabelSet>,
    {
        let mut members = BTreeSet::new();
        for s in subsets {
            if !s.ground().same_order(&ground) {
                return Err(Error::GroundMismatch);
            }
            members.insert(s.mask());
        }
        Ok(SetSystem {
            ground,
            members: members.into_iter().collect(),
        })
    }

    /// The improper system with no member sets.
    pub fn empty_family(ground: GroundSet) -> SetSystem {
        SetSystem {
            ground,
            members: Vec::new(),
        }
    }

    pub(crate) fn from_masks(ground: GroundSet, masks: impl IntoIterator<Item = u32>) -> SetSystem {
        let full = ground.full_mask();
        let set: BTreeSet<u32> = masks
            .into_iter()
            .inspect(|m| debug_assert_eq!(m & !full, 0))
            .collect();
        SetSystem {
            ground,
            members: set.into_iter().collect(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Number of member sets.
    pub fn family_len(&self) -> usize {
        self.members.len()
    }

    /// A proper set system has at least one member set.
    pub fn is_proper(&self) -> bool {
        !self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = LabelSet> + '_ {
        self.members
            .iter()
            .map(|&m| self.ground.subset_from_mask(m))
    }

    pub(crate) fn masks(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, set: &LabelSet) -> bool {
        assert!(
            set.ground().same_order(&self.ground),
            "membership test across different ground sets"
        );
        self.contains_mask(set.mask())
    }

    pub(crate) fn contains_mask(&self, mask: u32) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    /// All members are the same size; vacuously true for improper systems.
    pub fn is_equicardinal(&self) -> bool {
        let mut sizes = self.members.iter().map(|m| m.count_ones());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    fn with_masks(&self, masks: impl IntoIterator<Item = u32>) -> SetSystem {
        SetSystem::from_masks(self.ground.clone(), masks)
    }

    /// Twist M*X.
    pub fn twist(&self, x: &LabelSet) -> SetSystem {
        assert!(
            x.ground().same_order(&self.ground),
            "twist by a foreign label set"
        );
        self.twist_mask(x.mask())
    }

    pub(crate) fn twist_mask(&self, x: u32) -> SetSystem {
        self.with_masks(self.members.iter().map(|&m| m ^ x))
    }

    /// Loop complementation M+u on a single element.
    pub fn loop_complement(&self, label: &str) -> Result<SetSystem, Error> {
        let i = self
            .ground
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel {
                label: label.to_string(),
            })?;
        Ok(self.loop_complement_index(i))
    }

    pub(crate) fn loop_complement_index(&self, i: usize) -> SetSystem {
        let bit = 1u32 << i;
        let mut family: BTreeSet<u32> = self.members.iter().copied().collect();
        for &m in &self.members {
            if m & bit == 0 {
                let lifted = m | bit;
                if !family.remove(&lifted) {
                    family.insert(lifted);
                }
            }
        }
        self.with_masks(family)
    }

    /// Dual pivot M(du) = M+u*u+u on a single element.
    pub fn dual_pivot(&self, label: &str) -> Result<SetSystem, Error> {
        let i = self
            .ground
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel {
                label: label.to_string(),
            })?;
        Ok(self.dual_pivot_index(i))
    }

    pub(crate) fn dual_pivot_index(&self, i: usize) -> SetSystem {
        self.loop_complement_index(i)
            .twist_mask(1 << i)
            .loop_complement_index(i)
    }

    /// Applies `op` once per element of `x`. Flips on distinct elements
    /// commute, so the fold order is immaterial.
    pub fn apply_bulk(&self, op: FlipOp, x: &LabelSet) -> SetSystem {
        assert!(
            x.ground().same_order(&self.ground),
            "bulk flip by a foreign label set"
        );
        match op {
            FlipOp::Twist => self.twist_mask(x.mask()),
            FlipOp::LoopComplement => x
                .indices()
                .fold(self.clone(), |m, i| m.loop_complement_index(i)),
            FlipOp::DualPivot => x.indices().fold(self.clone(), |m, i| m.dual_pivot_index(i)),
        }
    }

    pub fn apply_step(&self, step: &FlipStep) -> Result<SetSystem, Error> {
        let i = self
            .ground
            .index_of(&step.label)
            .ok_or_else(|| Error::UnknownLabel {
                label: step.label.clone(),
            })?;
        Ok(match step.op {
            FlipOp::Twist => self.twist_mask(1 << i),
            FlipOp::LoopComplement => self.loop_complement_index(i),
            FlipOp::DualPivot => self.dual_pivot_index(i),
        })
    }

    pub fn apply_word(&self, word: &FlipWord) -> Result<SetSystem, Error> {
        word.steps()
            .iter()
            .try_fold(self.clone(), |m, step| m.apply_step(step))
    }

    /// The inclusion-maximal member sets.
    pub fn max_sets(&self) -> SetSystem {
        let maximal: Vec<u32> = self
            .members
            .iter()
            .copied()
            .filter(|&m| {
                !self
                    .members
                    .iter()
                    .any(|&other| other != m && m & !other == 0)
            })
            .collect();
        self.with_masks(maximal)
    }
}

/// Label-aware equality, mirroring matrix equality: the ground sets must
/// carry the same labels and the families must agree under relabelling.
impl PartialEq for SetSystem {
    fn eq(&self, other: &Self) -> bool {
        if !self.ground.same_labels(&other.ground) {
            return false;
        }
        if self.ground.same_order(&other.ground) {
            return self.members == other.members;
        }
        let map: Vec<u32> = self
            .ground
            .labels()
            .iter()
            .map(|l| 1u32 << other.ground.index_of(l).expect("same labels"))
            .collect();
        let mut remapped: Vec<u32> = self
            .members
            .iter()
            .map(|&m| {
                (0..self.ground.len())
                    .filter(|i| m & (1 << i) != 0)
                    .map(|i| map[i])
                    .sum()
            })
            .collect();
        remapped.sort_unstable();
        remapped == other.members
    }
}

impl Eq for SetSystem {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlipOp {
    Twist,
    LoopComplement,
    DualPivot,
}

impl FlipOp {
    pub fn token_prefix(self) -> char {
        match self {
            FlipOp::Twist => '*',
            FlipOp::LoopComplement => '+',
            FlipOp::DualPivot => 'd',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipStep {
    pub op: FlipOp,
    pub label: String,
}

impl FlipStep {
    pub fn new(op: FlipOp, label: impl Into<String>) -> FlipStep {
        FlipStep {
            op,
            label: label.into(),
        }
    }
}

impl fmt::Display for FlipStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.op.token_prefix(), self.label)
    }
}

/// A sequence of flips, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FlipWord {
    steps: Vec<FlipStep>,
}

impl FlipWord {
    pub fn new(steps: Vec<FlipStep>) -> FlipWord {
        FlipWord { steps }
    }

    pub fn empty() -> FlipWord {
        FlipWord { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[FlipStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: FlipStep) {
        self.steps.push(step);
    }

    /// Concatenation: `self` then `other`.
    pub fn then(&self, other: &FlipWord) -> FlipWord {
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        FlipWord { steps }
    }

    /// The labels appearing in the word, in order of first occurrence.
    pub fn labels(&self) -> Vec<&str> {
        let mut seen = Vec::new();
        for step in &self.steps {
            if !seen.contains(&step.label.as_str()) {
                seen.push(step.label.as_str());
            }
        }
        seen
    }
}

impl fmt::Display for FlipWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

/// Per-element state: the six elements of S_3, written as reduced words in
/// the generators L (= +u) and T (= *u), composed left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tag {
    Id,
    L,
    T,
    Lt,
    Tl,
    Ltl,
}

impl Tag {
    fn then_l(self) -> Tag {
        match self {
            Tag::Id => Tag::L,
            Tag::L => Tag::Id,
            Tag::T => Tag::Tl,
            Tag::Lt => Tag::Ltl,
            Tag::Tl => Tag::T,
            Tag::Ltl => Tag::Lt,
        }
    }

    fn then_t(self) -> Tag {
        match self {
            Tag::Id => Tag::T,
            Tag::L => Tag::Lt,
            Tag::T => Tag::Id,
            Tag::Lt => Tag::L,
            Tag::Tl => Tag::Ltl, // TLT = LTL
            Tag::Ltl => Tag::Tl, // LTLT = TL
        }
    }

    fn then(self, op: FlipOp) -> Tag {
        match op {
            FlipOp::Twist => self.then_t(),
            FlipOp::LoopComplement => self.then_l(),
            FlipOp::DualPivot => self.then_l().then_t().then_l(),
        }
    }

    /// Membership of the element in (Z1, Z2, Z3) of the normal form
    /// +Z1 *Z2 +Z3. Each tag has exactly one spelling with Z1 inside Z2.
    fn normal_bits(self) -> (bool, bool, bool) {
        match self {
            Tag::Id => (false, false, false),
            Tag::L => (false, false, true),
            Tag::T => (false, true, false),
            Tag::Lt => (true, true, false),
            Tag::Tl => (false, true, true),
            Tag::Ltl => (true, true, true),
        }
    }
}

/// The collapsed form +Z1 *Z2 +Z3 of a flip word, with Z1 subseteq Z2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipNormalForm {
    z1: LabelSet,
    z2: LabelSet,
    z3: LabelSet,
}

impl FlipNormalForm {
    pub fn z1(&self) -> &LabelSet {
        &self.z1
    }

    pub fn z2(&self) -> &LabelSet {
        &self.z2
    }

    pub fn z3(&self) -> &LabelSet {
        &self.z3
    }

    pub fn apply(&self, m: &SetSystem) -> SetSystem {
        m.apply_bulk(FlipOp::LoopComplement, &self.z1)
            .apply_bulk(FlipOp::Twist, &self.z2)
            .apply_bulk(FlipOp::LoopComplement, &self.z3)
    }
}

/// Collapses `word` over `ground` to its normal form by tracking, for each
/// element independently, the S_3 element the word induces.
pub fn normalize_word(word: &FlipWord, ground: &GroundSet) -> Result<FlipNormalForm, Error> {
    let mut tags = vec![Tag::Id; ground.len()];
    for step in word.steps() {
        let i = ground
            .index_of(&step.label)
            .ok_or_else(|| Error::UnknownLabel {
                label: step.label.clone(),
            })?;
        tags[i] = tags[i].then(step.op);
    }
    let (mut z1, mut z2, mut z3) = (0u32, 0u32, 0u32);
    for (i, tag) in tags.iter().enumerate() {
        let (b1, b2, b3) = tag.normal_bits();
        z1 |= (b1 as u32) << i;
        z2 |= (b2 as u32) << i;
        z3 |= (b3 as u32) << i;
    }
    Ok(FlipNormalForm {
        z1: ground.subset_from_mask(z1),
        z2: ground.subset_from_mask(z2),
        z3: ground.subset_from_mask(z3),
    })
}
