//! The six "finitely red" notions, each decided by its own procedure, and
//! the set-finiteness notions for decidable sets of naturals.
//!
//! On ultimately periodic streams the six notions coincide: a stream is
//! finitely red in any of the six senses iff its canonical cycle is all blue.
//! [`classify`] nevertheless computes every notion independently so the
//! agreement is an observable fact rather than a copy.

use serde::{Serialize, Serializer};

use crate::constructions::red_positions;
use crate::fixpoint::{Quotient, StateSpace};
use crate::stream::{Position, UpStream};
use crate::succession::SuccRelation;
use crate::temporal::{self, minimal_bound, PredicateId};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NotionVerdict {
    pub holds: bool,
    pub witness: Option<usize>,
}

impl NotionVerdict {
    fn with_witness(witness: Option<usize>) -> Self {
        NotionVerdict {
            holds: witness.is_some(),
            witness,
        }
    }

    fn bare(holds: bool) -> Self {
        NotionVerdict {
            holds,
            witness: None,
        }
    }
}

/// Verdicts for the six notions, strongest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Witness: least `n` such that the suffix at `n` is all blue.
    pub eventually_all_blue: NotionVerdict,
    /// Witness: least `n` with `atmost_n`.
    pub boundedly_red: NotionVerdict,
    /// Witness: accessibility rank of 0.
    pub almost_always_blue: NotionVerdict,
    /// Witness: length of the maximal chain from 0.
    pub streamless_reds: NotionVerdict,
    pub not_not_fg_blue: NotionVerdict,
    pub not_gf_red: NotionVerdict,
}

impl Classification {
    pub fn verdicts(&self) -> [(&'static str, NotionVerdict); 6] {
        [
            ("eventually_all_blue", self.eventually_all_blue),
            ("boundedly_red", self.boundedly_red),
            ("almost_always_blue", self.almost_always_blue),
            ("streamless_reds", self.streamless_reds),
            ("not_not_fg_blue", self.not_not_fg_blue),
            ("not_gf_red", self.not_gf_red),
        ]
    }

    /// The common verdict, if all six agree.
    pub fn collapsed(&self) -> Option<bool> {
        let verdicts = self.verdicts();
        let first = verdicts[0].1.holds;
        verdicts
            .iter()
            .all(|(_, v)| v.holds == first)
            .then_some(first)
    }
}

pub fn classify(s: &UpStream) -> Classification {
    let q = Quotient::new(s);
    let rel = SuccRelation::new(s);

    let g_blue = temporal::g_blue(&q);
    let eventually_all_blue = (0..q.state_count()).find(|&n| g_blue.contains(q.state_of_position(n)));
    let eventually_all_blue = NotionVerdict::with_witness(
        eventually_all_blue.filter(|_| temporal::finally(&q, &g_blue).contains(0)),
    );

    let boundedly_red = NotionVerdict::with_witness(minimal_bound(s));

    let almost_always_blue = if temporal::mu_w(&q).contains(0) {
        NotionVerdict::with_witness(rel.accessible(0).rank())
    } else {
        NotionVerdict::bare(false)
    };

    let streamless_reds = NotionVerdict::with_witness(rel.chain_from(0).len());

    let g_not_g_blue = temporal::globally(&q, &g_blue.complement());
    let not_not_fg_blue = NotionVerdict::bare(!g_not_g_blue.contains(0));

    let not_gf_red = NotionVerdict::bare(!temporal::state_set(&PredicateId::GFRed, &q).contains(0));

    Classification {
        eventually_all_blue,
        boundedly_red,
        almost_always_blue,
        streamless_reds,
        not_not_fg_blue,
        not_gf_red,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RedCount {
    Finite(usize),
    Infinite,
}

impl Serialize for RedCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            RedCount::Finite(n) => serializer.serialize_u64(*n as u64),
            RedCount::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

/// The machine-readable classification document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub schema: u32,
    pub stream: UpStream,
    pub notions: Classification,
    pub red_count: RedCount,
}

impl ClassificationReport {
    pub fn new(s: &UpStream) -> Self {
        let s = s.canonicalize();
        ClassificationReport {
            schema: SCHEMA_VERSION,
            notions: classify(&s),
            red_count: s.red_count().map_or(RedCount::Infinite, RedCount::Finite),
            stream: s,
        }
    }
}

/// A decidable set of naturals, given by its characteristic stream (red at
/// `n` iff `n` is a member).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecSet {
    characteristic: UpStream,
}

impl DecSet {
    pub fn new(characteristic: UpStream) -> Self {
        DecSet {
            characteristic: characteristic.canonicalize(),
        }
    }

    /// `Reds(s)`
    pub fn reds_of(s: &UpStream) -> Self {
        Self::new(s.clone())
    }

    pub fn from_finite(members: &[Position]) -> Self {
        let len = members.iter().max().map_or(0, |&m| m + 1);
        let mut prefix = vec![crate::Color::Blue; len];
        for &m in members {
            prefix[m] = crate::Color::Red;
        }
        DecSet {
            characteristic: UpStream::then_blue(prefix),
        }
    }

    pub fn contains(&self, n: Position) -> bool {
        self.characteristic.at(n).is_red()
    }

    pub fn characteristic(&self) -> &UpStream {
        &self.characteristic
    }

    /// Members in increasing order, when finite.
    pub fn elements(&self) -> Option<Vec<Position>> {
        reds_enumerate(&self.characteristic)
    }
}

/// The increasing list of all red positions, present iff it is finite.
pub fn reds_enumerate(s: &UpStream) -> Option<Vec<Position>> {
    if !s.cycle_all_blue() {
        return None;
    }
    Some(
        s.prefix()
            .iter()
            .enumerate()
            .filter_map(|(n, c)| c.is_red().then_some(n))
            .collect(),
    )
}

/// Every duplicate-free list over `a` is shorter than `n`.
pub fn bounded_size(a: &DecSet, n: usize) -> bool {
    match a.elements() {
        Some(xs) => xs.len() < n,
        None => false,
    }
}

/// Depth of the removal derivation, computed as the accessibility rank of 0
/// for the set's succession relation. Absent iff `a` is infinite.
pub fn noetherian_rank(a: &DecSet) -> Option<usize> {
    SuccRelation::new(a.characteristic()).accessible(0).rank()
}

/// Every duplicate-free colist over `a` is finite.
pub fn streamless(a: &DecSet) -> bool {
    SuccRelation::new(a.characteristic()).strongly_normalizing(0)
}

/// Every strictly increasing index sequence eventually hits a blue position.
///
/// The enumeration of red positions is the only candidate counterexample:
/// it avoids blue forever exactly when it is infinite.
pub fn almost_full_blues(s: &UpStream) -> bool {
    red_positions(s).is_finite()
}
