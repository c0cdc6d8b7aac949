//! Finite outcome spaces and events over them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// A finite set of distinct labelled outcomes.
///
/// The listing order is storage order only; it fixes bit positions for
/// [`EventSet`] and the tie-breaking used by deterministic scans, but it
/// carries no semantic preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeSpace {
    labels: Arc<Vec<String>>,
    index: Arc<HashMap<String, usize>>,
}

impl OutcomeSpace {
    pub fn new<I, S>(labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptySpace);
        }
        if labels.len() > 128 {
            return Err(Error::SpaceTooLarge(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(OutcomeSpace {
            labels: Arc::new(labels),
            index: Arc::new(index),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, Error> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_owned()))
    }

    /// The event containing every outcome.
    pub fn full_event(&self) -> EventSet {
        EventSet {
            bits: full_mask(self.len()),
            universe: self.len(),
        }
    }

    /// The empty event.
    pub fn empty_event(&self) -> EventSet {
        EventSet {
            bits: 0,
            universe: self.len(),
        }
    }

    /// Builds an event from element labels.
    pub fn event<'a, I>(&self, labels: I) -> Result<EventSet, Error>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut bits = 0u128;
        for label in labels {
            bits |= 1 << self.index_of(label)?;
        }
        Ok(EventSet {
            bits,
            universe: self.len(),
        })
    }

    /// Builds an event from a raw bitmask over storage order.
    pub fn event_from_bits(&self, bits: u128) -> EventSet {
        debug_assert_eq!(bits & !full_mask(self.len()), 0);
        EventSet {
            bits: bits & full_mask(self.len()),
            universe: self.len(),
        }
    }

    /// Builds an event from element indices.
    pub fn event_from_indices(&self, indices: &[usize]) -> EventSet {
        let mut bits = 0u128;
        for &i in indices {
            debug_assert!(i < self.len());
            bits |= 1 << i;
        }
        EventSet {
            bits,
            universe: self.len(),
        }
    }

    /// All `2^n` events in increasing bitmask order.
    pub fn all_events(&self) -> impl Iterator<Item = EventSet> + '_ {
        let n = self.len();
        (0u128..(1u128 << n)).map(move |bits| EventSet { bits, universe: n })
    }

    /// Renders an event as `{a,b,c}` in storage order.
    pub fn format_event(&self, event: EventSet) -> String {
        let labels: Vec<&str> = event.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", labels.join(","))
    }
}

fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// A subset of an [`OutcomeSpace`], stored as a bitset over storage order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EventSet {
    bits: u128,
    universe: usize,
}

impl EventSet {
    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.universe)
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.bits & (1 << index) != 0
    }

    pub fn complement(&self) -> EventSet {
        EventSet {
            bits: !self.bits & full_mask(self.universe),
            universe: self.universe,
        }
    }

    pub fn union(&self, other: EventSet) -> EventSet {
        debug_assert_eq!(self.universe, other.universe);
        EventSet {
            bits: self.bits | other.bits,
            universe: self.universe,
        }
    }

    pub fn intersection(&self, other: EventSet) -> EventSet {
        debug_assert_eq!(self.universe, other.universe);
        EventSet {
            bits: self.bits & other.bits,
            universe: self.universe,
        }
    }

    pub fn difference(&self, other: EventSet) -> EventSet {
        debug_assert_eq!(self.universe, other.universe);
        EventSet {
            bits: self.bits & !other.bits,
            universe: self.universe,
        }
    }

    pub fn is_subset(&self, other: EventSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.bits & !other.bits == 0
    }

    /// Indices of the member outcomes, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.universe).filter(move |i| bits & (1 << i) != 0)
    }
}

impl fmt::Debug for EventSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EventSet({:#b}/{})", self.bits, self.universe)
    }
}
