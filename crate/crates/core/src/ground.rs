//! Labelled ground sets and their subsets.
//!
//! A `GroundSet` is an ordered list of distinct labels; the order is fixed at
//! construction and used only for serialization and for tie-breaking, never
//! for semantics. Subsets are bitmasks relative to that order, which keeps
//! symmetric differences and membership tests cheap at the supported scale
//! (at most [`MAX_GROUND`] elements).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;

pub const MAX_GROUND: usize = 16;

#[derive(Debug)]
struct Inner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Clone)]
pub struct GroundSet {
    inner: Arc<Inner>,
}

pub(crate) fn validate_label(label: &str) -> Result<(), Error> {
    let invalid = |reason| Error::InvalidLabel {
        label: label.to_string(),
        reason,
    };
    if label.is_empty() {
        return Err(invalid("labels must be nonempty"));
    }
    if label == "-" {
        return Err(invalid("`-` denotes the empty set"));
    }
    if label.chars().any(|c| c.is_whitespace()) {
        return Err(invalid("labels cannot contain whitespace"));
    }
    if label.contains(',') {
        return Err(invalid("labels cannot contain commas"));
    }
    Ok(())
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<GroundSet, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                max: MAX_GROUND,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            validate_label(label)?;
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(GroundSet {
            inner: Arc::new(Inner { labels, index }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.index.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.inner.index.contains_key(label)
    }

    /// True when both ground sets list the same labels in the same order.
    pub fn same_order(&self, other: &GroundSet) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }

    /// True when both ground sets carry the same labels, order ignored.
    pub fn same_labels(&self, other: &GroundSet) -> bool {
        self.len() == other.len() && self.inner.labels.iter().all(|l| other.contains(l))
    }

    pub(crate) fn full_mask(&self) -> u32 {
        if self.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.len()) - 1
        }
    }

    pub fn empty_subset(&self) -> LabelSet {
        LabelSet {
            ground: self.clone(),
            mask: 0,
        }
    }

    pub fn full_subset(&self) -> LabelSet {
        LabelSet {
            ground: self.clone(),
            mask: self.full_mask(),
        }
    }

    pub fn singleton(&self, label: &str) -> Result<LabelSet, Error> {
        self.subset([label])
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<LabelSet, Error>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = 0u32;
        for label in labels {
            let label = label.as_ref();
            match self.index_of(label) {
                Some(i) => mask |= 1 << i,
                None => {
                    return Err(Error::UnknownLabel {
                        label: label.to_string(),
                    })
                }
            }
        }
        Ok(LabelSet {
            ground: self.clone(),
            mask,
        })
    }

    pub(crate) fn subset_from_mask(&self, mask: u32) -> LabelSet {
        debug_assert_eq!(mask & !self.full_mask(), 0);
        LabelSet {
            ground: self.clone(),
            mask,
        }
    }

    /// The sub-ground set consisting of `set`'s members, in this set's order.
    pub fn restrict(&self, set: &LabelSet) -> GroundSet {
        assert!(
            self.same_order(set.ground()),
            "subset of a foreign ground set"
        );
        GroundSet::new(set.indices().map(|i| self.label(i).to_string()))
            .expect("a subset of a valid ground set is valid")
    }

    /// All subsets, in Gray-code order: consecutive masks differ in one bit.
    pub fn subsets(&self) -> impl Iterator<Item = LabelSet> + '_ {
        (0u32..1u32 << self.len()).map(move |i| self.subset_from_mask(i ^ (i >> 1)))
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_order(other)
    }
}

impl Eq for GroundSet {}

/// A subset of a ground set, stored as a bitmask over the ground order.
#[derive(Clone)]
pub struct LabelSet {
    ground: GroundSet,
    mask: u32,
}

impl LabelSet {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, label: &str) -> bool {
        match self.ground.index_of(label) {
            Some(i) => self.mask & (1 << i) != 0,
            None => false,
        }
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.mask & (1 << i) != 0
    }

    /// Ground indices of the members, ascending.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..self.ground.len()).filter(move |i| mask & (1 << i) != 0)
    }

    /// Member labels in ground order.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.indices().map(|i| self.ground.label(i))
    }

    fn check_ground(&self, other: &LabelSet) {
        assert!(
            self.ground.same_order(&other.ground),
            "set operation across different ground sets"
        );
    }

    pub fn union(&self, other: &LabelSet) -> LabelSet {
        self.check_ground(other);
        self.with_mask(self.mask | other.mask)
    }

    pub fn intersection(&self, other: &LabelSet) -> LabelSet {
        self.check_ground(other);
        self.with_mask(self.mask & other.mask)
    }

    pub fn difference(&self, other: &LabelSet) -> LabelSet {
        self.check_ground(other);
        self.with_mask(self.mask & !other.mask)
    }

    pub fn symmetric_difference(&self, other: &LabelSet) -> LabelSet {
        self.check_ground(other);
        self.with_mask(self.mask ^ other.mask)
    }

    pub fn complement(&self) -> LabelSet {
        self.with_mask(self.mask ^ self.ground.full_mask())
    }

    pub fn is_subset_of(&self, other: &LabelSet) -> bool {
        self.check_ground(other);
        self.mask & !other.mask == 0
    }

    fn with_mask(&self, mask: u32) -> LabelSet {
        LabelSet {
            ground: self.ground.clone(),
            mask,
        }
    }
}

impl PartialEq for LabelSet {
    fn eq(&self, other: &Self) -> bool {
        self.ground.same_order(&other.ground) && self.mask == other.mask
    }
}

impl Eq for LabelSet {}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, label) in self.labels().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}
