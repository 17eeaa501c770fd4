//! Finite quotient of an ultimately periodic stream and Kleene iteration
//! on the powerset of its states.
//!
//! State `i` of the quotient stands for the suffix at position `i`; the
//! suffixes at positions `≥ prefix_len` repeat with period `cycle_len`, so
//! `prefix_len + cycle_len` states cover every suffix. A stream predicate
//! restricted to the quotient is a [`StateSet`], and inductive (coinductive)
//! predicates are least (greatest) fixpoints of monotone set operators.

use thiserror::Error;

use crate::stream::{Color, Position, UpStream};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixpointError {
    #[error("operator is not monotone: iteration {iteration} left the Kleene chain")]
    NonMonotone { iteration: usize },
}

/// Anything with a finite number of states indexed `0..state_count`.
pub trait StateSpace {
    fn state_count(&self) -> usize;
}

impl StateSpace for usize {
    fn state_count(&self) -> usize {
        *self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StateSet {
    members: Vec<bool>,
}

impl StateSet {
    pub fn empty(size: usize) -> Self {
        StateSet {
            members: vec![false; size],
        }
    }

    pub fn full(size: usize) -> Self {
        StateSet {
            members: vec![true; size],
        }
    }

    pub fn from_fn(size: usize, f: impl FnMut(usize) -> bool) -> Self {
        StateSet {
            members: (0..size).map(f).collect(),
        }
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, state: usize) -> bool {
        self.members.get(state).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, state: usize) {
        self.members[state] = true;
    }

    pub fn count(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn complement(&self) -> StateSet {
        StateSet {
            members: self.members.iter().map(|&b| !b).collect(),
        }
    }

    fn zip_with(&self, other: &StateSet, f: impl Fn(bool, bool) -> bool) -> StateSet {
        assert_eq!(self.universe(), other.universe(), "state sets over different universes");
        StateSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

/// The finite lasso of suffixes of an [`UpStream`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    prefix_len: usize,
    colors: Vec<Color>,
}

impl Quotient {
    pub fn new(s: &UpStream) -> Self {
        let colors = s.prefix().iter().chain(s.cycle()).copied().collect();
        Quotient {
            prefix_len: s.prefix_len(),
            colors,
        }
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    pub fn cycle_len(&self) -> usize {
        self.colors.len() - self.prefix_len
    }

    pub fn step(&self, state: usize) -> usize {
        if state + 1 < self.colors.len() {
            state + 1
        } else {
            self.prefix_len
        }
    }

    pub fn color_of(&self, state: usize) -> Color {
        self.colors[state]
    }

    pub fn state_of_position(&self, n: Position) -> usize {
        if n < self.prefix_len {
            n
        } else {
            self.prefix_len + (n - self.prefix_len) % self.cycle_len()
        }
    }

    pub fn with_color(&self, color: Color) -> StateSet {
        StateSet::from_fn(self.state_count(), |i| self.colors[i] == color)
    }

    /// `{ i : step(i) ∈ set }`
    pub fn preimage(&self, set: &StateSet) -> StateSet {
        StateSet::from_fn(self.state_count(), |i| set.contains(self.step(i)))
    }
}

impl StateSpace for Quotient {
    fn state_count(&self) -> usize {
        self.colors.len()
    }
}

pub fn build_quotient(s: &UpStream) -> Quotient {
    Quotient::new(s)
}

/// Result of a Kleene iteration together with its trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kleene {
    pub set: StateSet,
    /// Number of strict steps taken before the chain stabilised.
    pub iterations: usize,
    /// For each state, the index of the first approximant that decided it:
    /// the first approximant containing it (least fixpoint) or the first
    /// one excluding it (greatest fixpoint). `None` if never decided.
    pub stages: Vec<Option<usize>>,
}

/// Least fixpoint of `op`, iterated upward from the empty set.
pub fn lfp<S, F>(space: &S, op: F) -> Result<StateSet, FixpointError>
where
    S: StateSpace + ?Sized,
    F: Fn(&StateSet) -> StateSet,
{
    lfp_traced(space, op).map(|k| k.set)
}

/// Greatest fixpoint of `op`, iterated downward from the full set.
pub fn gfp<S, F>(space: &S, op: F) -> Result<StateSet, FixpointError>
where
    S: StateSpace + ?Sized,
    F: Fn(&StateSet) -> StateSet,
{
    gfp_traced(space, op).map(|k| k.set)
}

pub fn lfp_traced<S, F>(space: &S, op: F) -> Result<Kleene, FixpointError>
where
    S: StateSpace + ?Sized,
    F: Fn(&StateSet) -> StateSet,
{
    iterate(StateSet::empty(space.state_count()), op, true)
}

pub fn gfp_traced<S, F>(space: &S, op: F) -> Result<Kleene, FixpointError>
where
    S: StateSpace + ?Sized,
    F: Fn(&StateSet) -> StateSet,
{
    iterate(StateSet::full(space.state_count()), op, false)
}

fn iterate<F>(start: StateSet, op: F, ascending: bool) -> Result<Kleene, FixpointError>
where
    F: Fn(&StateSet) -> StateSet,
{
    let size = start.universe();
    let mut stages = vec![None; size];
    let mut current = start;
    let mut iterations = 0;
    loop {
        let next = op(&current);
        assert_eq!(next.universe(), size, "operator changed the state universe");
        let on_chain = if ascending {
            current.is_subset(&next)
        } else {
            next.is_subset(&current)
        };
        if !on_chain {
            return Err(FixpointError::NonMonotone {
                iteration: iterations + 1,
            });
        }
        if next == current {
            return Ok(Kleene {
                set: current,
                iterations,
                stages,
            });
        }
        iterations += 1;
        for (state, stage) in stages.iter_mut().enumerate() {
            if stage.is_none() && next.contains(state) == ascending {
                *stage = Some(iterations);
            }
        }
        current = next;
    }
}
