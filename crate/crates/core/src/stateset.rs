use std::fmt;

use fixedbitset::FixedBitSet;

use crate::model::StateId;

/// A subset of the states of one model.
///
/// The universe size is fixed at creation; set operations between sets of
/// different universes panic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    bits: FixedBitSet,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = StateId>) -> Self {
        let mut set = Self::empty(universe);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn from_fn(universe: usize, mut pred: impl FnMut(StateId) -> bool) -> Self {
        let mut set = Self::empty(universe);
        for i in 0..universe {
            if pred(StateId(i)) {
                set.bits.insert(i);
            }
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, id: StateId) -> bool {
        self.bits.contains(id.0)
    }

    pub fn insert(&mut self, id: StateId) {
        self.bits.insert(id.0);
    }

    pub fn remove(&mut self, id: StateId) {
        self.bits.set(id.0, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.check_universe(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        StateSet { bits }
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        StateSet { bits }
    }

    pub fn difference(&self, other: &StateSet) -> StateSet {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        StateSet { bits }
    }

    pub fn complement(&self) -> StateSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        StateSet { bits }
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.bits.ones().map(StateId)
    }

    fn check_universe(&self, other: &StateSet) {
        assert_eq!(
            self.universe(),
            other.universe(),
            "state sets over different models"
        );
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|s| s.0)).finish()
    }
}
