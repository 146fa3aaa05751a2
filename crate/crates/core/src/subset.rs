//! Subsets of a finite group as membership bitsets over element indices.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::GroupError;

/// A set of element indices of a group of a fixed order.
///
/// The order is carried alongside the bits so that operations mixing subsets
/// of different groups can be rejected. Ordering is lexicographic on the
/// ascending element sequence, which is the canonical order used for atom
/// and subgroup listings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupSubset {
    order: usize,
    bits: FixedBitSet,
}

impl GroupSubset {
    pub fn empty(order: usize) -> Self {
        Self {
            order,
            bits: FixedBitSet::with_capacity(order),
        }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        Self { order, bits }
    }

    pub fn singleton(order: usize, element: usize) -> Result<Self, GroupError> {
        Self::from_elements(order, [element])
    }

    pub fn from_elements<I>(order: usize, elements: I) -> Result<Self, GroupError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(order);
        for e in elements {
            if e >= order {
                return Err(GroupError::ElementOutOfRange { element: e, order });
            }
            set.bits.insert(e);
        }
        Ok(set)
    }

    /// Parses the subset literal format: space-separated element indices.
    pub fn parse_literal(order: usize, text: &str) -> Result<Self, GroupError> {
        let mut elements = Vec::new();
        for token in text.split_whitespace() {
            let e: usize = token.parse().map_err(|_| GroupError::Parse {
                line: 1,
                message: format!("invalid element index `{token}`"),
            })?;
            elements.push(e);
        }
        Self::from_elements(order, elements)
    }

    /// Renders the subset literal format.
    pub fn to_literal(&self) -> String {
        let parts: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        parts.join(" ")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.order && self.bits.contains(element)
    }

    /// Panics if `element` is not an element index of the group.
    pub fn insert(&mut self, element: usize) {
        assert!(element < self.order, "element {element} out of range");
        self.bits.insert(element);
    }

    pub fn remove(&mut self, element: usize) {
        if element < self.order {
            self.bits.set(element, false);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_element(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { order: self.order, bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self { order: self.order, bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Self { order: self.order, bits }
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self { order: self.order, bits }
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }
}

impl Ord for GroupSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for GroupSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_literal())
    }
}
