//! The succession relation induced by a stream: `n ≻ m` iff `m` is one past
//! the first red position at or after `n`.
//!
//! The relation is deterministic and strictly increasing, so every position
//! has a unique maximal chain. On an ultimately periodic stream that chain is
//! either finite or eventually periodic, which makes accessibility, strong
//! normalization and antifoundedness decidable.
//!
//! The same code serves the relation induced by a decidable set of naturals,
//! via the set's characteristic stream.

use std::collections::HashMap;

use crate::fixpoint::{lfp_traced, Quotient, StateSet, StateSpace};
use crate::stream::{Position, UpStream};

/// An infinite, eventually periodic, strictly increasing sequence.
///
/// The sequence is `head`, followed forever by the block `head[loop_start..]`
/// shifted by successive multiples of `period`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Periodic {
    pub head: Vec<Position>,
    pub loop_start: usize,
    pub period: usize,
}

impl Periodic {
    pub fn iter(&self) -> impl Iterator<Item = Position> + '_ {
        let block = &self.head[self.loop_start..];
        self.head.iter().copied().chain(
            (1..).flat_map(move |k| block.iter().map(move |&x| x + k * self.period)),
        )
    }

    fn map(&self, f: impl Fn(Position) -> Position) -> Periodic {
        Periodic {
            head: self.head.iter().map(|&x| f(x)).collect(),
            loop_start: self.loop_start,
            period: self.period,
        }
    }
}

/// The maximal `≻`-chain from a position, excluding the start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainResult {
    Finite(Vec<Position>),
    InfinitePeriodic(Periodic),
}

impl ChainResult {
    pub fn is_finite(&self) -> bool {
        matches!(self, ChainResult::Finite(_))
    }

    /// Number of steps, when finite.
    pub fn len(&self) -> Option<usize> {
        match self {
            ChainResult::Finite(steps) => Some(steps.len()),
            ChainResult::InfinitePeriodic(_) => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ChainResult::Finite(steps) if steps.is_empty())
    }

    /// The first `limit` positions of the chain (fewer if it is shorter).
    pub fn take(&self, limit: usize) -> Vec<Position> {
        match self {
            ChainResult::Finite(steps) => steps.iter().copied().take(limit).collect(),
            ChainResult::InfinitePeriodic(p) => p.iter().take(limit).collect(),
        }
    }

    pub(crate) fn map(&self, f: impl Fn(Position) -> Position) -> ChainResult {
        match self {
            ChainResult::Finite(steps) => ChainResult::Finite(steps.iter().map(|&x| f(x)).collect()),
            ChainResult::InfinitePeriodic(p) => ChainResult::InfinitePeriodic(p.map(f)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AccResult {
    Accessible { rank: usize },
    NotAccessible,
}

impl AccResult {
    pub fn is_accessible(self) -> bool {
        matches!(self, AccResult::Accessible { .. })
    }

    pub fn rank(self) -> Option<usize> {
        match self {
            AccResult::Accessible { rank } => Some(rank),
            AccResult::NotAccessible => None,
        }
    }
}

/// `≻_s` for a fixed stream `s` (red marks membership).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccRelation {
    source: UpStream,
}

impl SuccRelation {
    pub fn new(source: &UpStream) -> Self {
        SuccRelation {
            source: source.canonicalize(),
        }
    }

    pub fn source(&self) -> &UpStream {
        &self.source
    }

    /// The unique `m` with `n ≻ m`, if any.
    pub fn successor(&self, n: Position) -> Option<Position> {
        let s = &self.source;
        let limit = n.max(s.prefix_len()) + s.cycle_len();
        (n..limit).find(|&l| s.at(l).is_red()).map(|l| l + 1)
    }

    pub fn relates(&self, n: Position, m: Position) -> bool {
        self.successor(n) == Some(m)
    }

    /// Follows successors until the chain ends or, once inside the cycle
    /// region, a residue modulo the cycle length repeats.
    pub fn chain_from(&self, n: Position) -> ChainResult {
        let p = self.source.prefix_len();
        let c = self.source.cycle_len();
        let mut steps: Vec<Position> = Vec::new();
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let mut current = n;
        while let Some(m) = self.successor(current) {
            if m >= p {
                let residue = (m - p) % c;
                if let Some(&i) = seen.get(&residue) {
                    let period = m - steps[i];
                    return ChainResult::InfinitePeriodic(Periodic {
                        head: steps,
                        loop_start: i,
                        period,
                    });
                }
                seen.insert(residue, steps.len());
            }
            steps.push(m);
            current = m;
        }
        ChainResult::Finite(steps)
    }

    /// Accessibility as the least fixpoint of `X ↦ { n : ∀m. n ≻ m ⇒ m ∈ X }`
    /// on the quotient; the rank is the Kleene stage at which `n` enters,
    /// counted from 0.
    pub fn accessible(&self, n: Position) -> AccResult {
        let q = Quotient::new(&self.source);
        let succ_state: Vec<Option<usize>> = (0..q.state_count())
            .map(|i| self.successor(i).map(|m| q.state_of_position(m)))
            .collect();
        let acc = lfp_traced(&q, |x| {
            StateSet::from_fn(q.state_count(), |i| match succ_state[i] {
                None => true,
                Some(j) => x.contains(j),
            })
        })
        .expect("accessibility operator is monotone");
        match acc.stages[q.state_of_position(n)] {
            Some(stage) => AccResult::Accessible { rank: stage - 1 },
            None => AccResult::NotAccessible,
        }
    }

    pub fn strongly_normalizing(&self, n: Position) -> bool {
        self.chain_from(n).is_finite()
    }

    pub fn antifounded(&self, n: Position) -> bool {
        !self.chain_from(n).is_finite()
    }

    /// `k`-fold iterated successor; `k = 0` is the reflexive case.
    pub fn transitive_closure_step(&self, n: Position, k: usize) -> Option<Position> {
        (0..k).try_fold(n, |current, _| self.successor(current))
    }

    /// Edge dump for positions `0..limit`: `(n, Some(m))` for `n ≻ m`,
    /// `(n, None)` for terminal `n`.
    pub fn edges(&self, limit: usize) -> Vec<(Position, Option<Position>)> {
        (0..limit).map(|n| (n, self.successor(n))).collect()
    }
}

pub fn successor(s: &UpStream, n: Position) -> Option<Position> {
    SuccRelation::new(s).successor(n)
}

pub fn chain_from(s: &UpStream, n: Position) -> ChainResult {
    SuccRelation::new(s).chain_from(n)
}

pub fn accessible(s: &UpStream, n: Position) -> AccResult {
    SuccRelation::new(s).accessible(n)
}

pub fn strongly_normalizing(s: &UpStream, n: Position) -> bool {
    SuccRelation::new(s).strongly_normalizing(n)
}

pub fn antifounded(s: &UpStream, n: Position) -> bool {
    SuccRelation::new(s).antifounded(n)
}

pub fn transitive_closure_step(s: &UpStream, n: Position, k: usize) -> Option<Position> {
    SuccRelation::new(s).transitive_closure_step(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::parse_stream;
    use crate::temporal::{decide, PredicateId};

    fn up(s: &str) -> UpStream {
        parse_stream(s).unwrap()
    }

    #[test]
    fn successor_examples() {
        assert_eq!(successor(&up("(R)"), 0), Some(1));
        assert_eq!(successor(&up("BRB(B)"), 0), Some(2));
        assert_eq!(successor(&up("BRB(B)"), 2), None);
        assert_eq!(successor(&up("BB(BBR)"), 0), Some(5));
        assert_eq!(successor(&up("BB(BBR)"), 5), Some(8));
    }

    #[test]
    fn chain_examples() {
        assert_eq!(chain_from(&up("BRB(B)"), 0), ChainResult::Finite(vec![2]));
        assert_eq!(chain_from(&up("(B)"), 0), ChainResult::Finite(vec![]));
        let chain = chain_from(&up("(RB)"), 0);
        assert_eq!(
            chain,
            ChainResult::InfinitePeriodic(Periodic {
                head: vec![1],
                loop_start: 0,
                period: 2
            })
        );
        assert_eq!(chain.take(4), [1, 3, 5, 7]);
    }

    #[test]
    fn chain_with_transient_head() {
        // 0 ≻ 1 ≻ 2 inside the prefix, then every third position
        let chain = chain_from(&up("RR(BBR)"), 0);
        assert_eq!(chain.take(5), [1, 2, 5, 8, 11]);
        let ChainResult::InfinitePeriodic(p) = chain else {
            panic!("expected an infinite chain");
        };
        assert_eq!(p.period, 3);
    }

    #[test]
    fn accessible_examples() {
        assert_eq!(accessible(&up("BRB(B)"), 0), AccResult::Accessible { rank: 1 });
        assert_eq!(accessible(&up("(B)"), 7), AccResult::Accessible { rank: 0 });
        assert_eq!(accessible(&up("(RB)"), 0), AccResult::NotAccessible);
        assert_eq!(accessible(&up("RBRR(B)"), 1), AccResult::Accessible { rank: 2 });
    }

    #[test]
    fn normalization_examples() {
        assert!(strongly_normalizing(&up("BRB(B)"), 0));
        assert!(!strongly_normalizing(&up("(RB)"), 0));
        assert!(strongly_normalizing(&up("(B)"), 0));
        assert!(antifounded(&up("(RB)"), 0));
        assert!(!antifounded(&up("BRB(B)"), 0));
        assert!(antifounded(&up("(R)"), 5));
    }

    #[test]
    fn transitive_closure_examples() {
        assert_eq!(transitive_closure_step(&up("BRB(B)"), 0, 1), Some(2));
        assert_eq!(transitive_closure_step(&up("BRB(B)"), 0, 2), None);
        assert_eq!(transitive_closure_step(&up("(R)"), 0, 3), Some(3));
    }

    #[test]
    fn on_characterization_by_succession() {
        for lit in ["BRB(B)", "(RB)", "RR(B)", "B(BBR)", "(B)", "BR(BRR)"] {
            let s = up(lit);
            let rel = SuccRelation::new(&s);
            for base in [PredicateId::GBlue, PredicateId::MuW] {
                for n in 0..8 {
                    let via_fixpoint = decide(&PredicateId::on(base.clone()), &s.suffix(n));
                    let via_relation = match rel.successor(n) {
                        None => true,
                        Some(m) => decide(&base, &s.suffix(m)),
                    };
                    assert_eq!(via_fixpoint, via_relation, "{lit} at {n} for {base}");
                }
            }
        }
    }
}
