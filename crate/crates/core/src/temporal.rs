//! Temporal modalities and the finitely-red predicates built from them.
//!
//! On [`UpStream`]s every predicate is decided exactly by evaluating it to a
//! [`StateSet`] on the stream's [`Quotient`] and testing state 0. Inductive
//! definitions are least fixpoints, coinductive ones greatest fixpoints:
//!
//! | predicate | definition on the quotient |
//! |-----------|----------------------------|
//! | `F red`   | `μY. red ∪ pre(Y)` |
//! | `G blue`  | `νY. blue ∩ pre(Y)` |
//! | `F (G blue)` | `μY. Gblue ∪ pre(Y)` |
//! | `G (F red)`  | `νY. Fred ∩ pre(Y)` |
//! | `on X`    | `νY. (blue ∩ pre(Y)) ∪ (red ∩ pre(X))` (weak until) |
//! | `pop X`   | `μY. (blue ∩ pre(Y)) ∪ (red ∩ pre(X))` (strong until) |
//! | `μW`      | `μX. on X` |
//! | `νU`      | `νX. pop X` |
//! | `atmost_n` | greatest fixpoint on states × levels `1..=n` |
//! | `F^n`     | `F^0 = ∅`, `F^(k+1) = on F^k` |
//!
//! Black-box streams only admit the search-based fragment, see
//! [`check_black_box`].

use std::fmt;

use thiserror::Error;

use crate::fixpoint::{gfp, lfp, Quotient, StateSet, StateSpace};
use crate::stream::{Color, FunStream, UpStream};

const MONOTONE: &str = "shipped operators are monotone";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PredicateId {
    FRed,
    GBlue,
    FGBlue,
    GFRed,
    MuW,
    NuU,
    /// Fewer than `n` reds. `AtMost(0)` is everywhere false.
    AtMost(usize),
    /// `n`-fold weak-until iterate starting from false.
    FIter(usize),
    OnApplied(Box<PredicateId>),
    PopApplied(Box<PredicateId>),
}

impl PredicateId {
    pub fn on(base: PredicateId) -> Self {
        PredicateId::OnApplied(Box::new(base))
    }

    pub fn pop(base: PredicateId) -> Self {
        PredicateId::PopApplied(Box::new(base))
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredicateId::FRed => f.write_str("F red"),
            PredicateId::GBlue => f.write_str("G blue"),
            PredicateId::FGBlue => f.write_str("F (G blue)"),
            PredicateId::GFRed => f.write_str("G (F red)"),
            PredicateId::MuW => f.write_str("muW"),
            PredicateId::NuU => f.write_str("nuU"),
            PredicateId::AtMost(n) => write!(f, "atmost_{n}"),
            PredicateId::FIter(n) => write!(f, "F^{n}"),
            PredicateId::OnApplied(base) => write!(f, "on ({base})"),
            PredicateId::PopApplied(base) => write!(f, "pop ({base})"),
        }
    }
}

/// Outcome of a fuel-bounded check on a black-box stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict3 {
    Holds,
    Fails,
    Unknown { fuel_spent: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemporalError {
    #[error("`{0}` is not semi-decidable on black-box streams; only `F red` and `G blue` are")]
    UnsupportedPredicate(PredicateId),
}

pub fn f_red(q: &Quotient) -> StateSet {
    let red = q.with_color(Color::Red);
    lfp(q, |y| red.union(&q.preimage(y))).expect(MONOTONE)
}

pub fn g_blue(q: &Quotient) -> StateSet {
    let blue = q.with_color(Color::Blue);
    gfp(q, |y| blue.intersection(&q.preimage(y))).expect(MONOTONE)
}

/// `F X` for an already evaluated `X`.
pub fn finally(q: &Quotient, x: &StateSet) -> StateSet {
    lfp(q, |y| x.union(&q.preimage(y))).expect(MONOTONE)
}

/// `G X` for an already evaluated `X`.
pub fn globally(q: &Quotient, x: &StateSet) -> StateSet {
    gfp(q, |y| x.intersection(&q.preimage(y))).expect(MONOTONE)
}

fn until_step(q: &Quotient, x: &StateSet, y: &StateSet) -> StateSet {
    let blue = q.with_color(Color::Blue);
    let red = q.with_color(Color::Red);
    blue.intersection(&q.preimage(y))
        .union(&red.intersection(&q.preimage(x)))
}

/// Weak until: `on X`.
pub fn on(q: &Quotient, x: &StateSet) -> StateSet {
    gfp(q, |y| until_step(q, x, y)).expect(MONOTONE)
}

/// Strong until: `pop X`.
pub fn pop(q: &Quotient, x: &StateSet) -> StateSet {
    lfp(q, |y| until_step(q, x, y)).expect(MONOTONE)
}

/// Almost always blue: least fixpoint of the weak until.
pub fn mu_w(q: &Quotient) -> StateSet {
    lfp(q, |x| on(q, x)).expect(MONOTONE)
}

/// Infinitely often red: greatest fixpoint of the strong until.
pub fn nu_u(q: &Quotient) -> StateSet {
    gfp(q, |x| pop(q, x)).expect(MONOTONE)
}

/// States satisfying `atmost_n`, via the product of the quotient with the
/// counter levels `1..=n`.
///
/// A stream with finitely many reds has them all in its prefix, so fewer
/// than `state_count + 1` of them; levels above that add nothing and `n` is
/// clamped there.
pub fn at_most(q: &Quotient, n: usize) -> StateSet {
    let states = q.state_count();
    if n == 0 {
        return StateSet::empty(states);
    }
    let levels = n.min(states + 1);
    let index = |state: usize, level: usize| state * levels + (level - 1);
    let product_size = states * levels;
    let fix = gfp(&product_size, |y| {
        StateSet::from_fn(product_size, |idx| {
            let (state, level) = (idx / levels, idx % levels + 1);
            let next = q.step(state);
            match q.color_of(state) {
                Color::Blue => y.contains(index(next, level)),
                Color::Red => level >= 2 && y.contains(index(next, level - 1)),
            }
        })
    })
    .expect(MONOTONE);
    StateSet::from_fn(states, |state| fix.contains(index(state, levels)))
}

/// `F^n`. The iterates form an ascending chain, so iteration stops early
/// once it stabilises.
pub fn f_iter(q: &Quotient, n: usize) -> StateSet {
    let mut current = StateSet::empty(q.state_count());
    for _ in 0..n {
        let next = on(q, &current);
        if next == current {
            break;
        }
        current = next;
    }
    current
}

/// Evaluates a predicate to the set of quotient states satisfying it.
pub fn state_set(p: &PredicateId, q: &Quotient) -> StateSet {
    match p {
        PredicateId::FRed => f_red(q),
        PredicateId::GBlue => g_blue(q),
        PredicateId::FGBlue => finally(q, &g_blue(q)),
        PredicateId::GFRed => globally(q, &f_red(q)),
        PredicateId::MuW => mu_w(q),
        PredicateId::NuU => nu_u(q),
        PredicateId::AtMost(n) => at_most(q, *n),
        PredicateId::FIter(n) => f_iter(q, *n),
        PredicateId::OnApplied(base) => on(q, &state_set(base, q)),
        PredicateId::PopApplied(base) => pop(q, &state_set(base, q)),
    }
}

/// Truth of `p` on `s`.
pub fn decide(p: &PredicateId, s: &UpStream) -> bool {
    let q = Quotient::new(s);
    state_set(p, &q).contains(0)
}

/// Least `n` with `atmost_n s`, absent when `s` has infinitely many reds.
pub fn minimal_bound(s: &UpStream) -> Option<usize> {
    s.red_count().map(|reds| reds + 1)
}

/// Fuel-bounded search for a red position among `0..fuel`.
///
/// Only `F red` (confirmable) and `G blue` (refutable) are supported.
/// A search that finds nothing proves nothing, hence `Unknown`.
pub fn check_black_box(
    p: &PredicateId,
    f: &FunStream,
    fuel: usize,
) -> Result<Verdict3, TemporalError> {
    let found = match p {
        PredicateId::FRed | PredicateId::GBlue => (0..fuel).any(|n| f.get(n).is_red()),
        other => return Err(TemporalError::UnsupportedPredicate(other.clone())),
    };
    Ok(match (p, found) {
        (PredicateId::FRed, true) => Verdict3::Holds,
        (_, true) => Verdict3::Fails,
        (_, false) => Verdict3::Unknown { fuel_spent: fuel },
    })
}

/// Whether `F^n` and `atmost_n` agree on `s` for every `n ≤ n_max`.
pub fn fn_equals_atmost(s: &UpStream, n_max: usize) -> bool {
    let q = Quotient::new(s);
    (0..=n_max).all(|n| f_iter(&q, n).contains(0) == at_most(&q, n).contains(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::parse_stream;

    fn up(s: &str) -> UpStream {
        parse_stream(s).unwrap()
    }

    fn red_block(n: usize) -> UpStream {
        UpStream::then_blue(vec![Color::Red; n])
    }

    #[test]
    fn decide_examples() {
        assert!(decide(&PredicateId::FGBlue, &up("BRB(B)")));
        assert!(decide(&PredicateId::AtMost(1), &up("(B)")));
        assert!(!decide(&PredicateId::AtMost(0), &up("(B)")));
        assert!(decide(&PredicateId::GFRed, &up("(RB)")));
        assert!(!decide(&PredicateId::MuW, &up("(RB)")));
        for n in 0..6 {
            assert!(decide(&PredicateId::FIter(n + 1), &red_block(n)));
            assert!(!decide(&PredicateId::FIter(n), &red_block(n)));
        }
    }

    #[test]
    fn basic_modalities() {
        assert!(decide(&PredicateId::FRed, &up("BBR(B)")));
        assert!(!decide(&PredicateId::FRed, &up("(B)")));
        assert!(decide(&PredicateId::GBlue, &up("(B)")));
        assert!(!decide(&PredicateId::GBlue, &up("BBBR(B)")));
        assert!(decide(&PredicateId::NuU, &up("BBB(BBR)")));
        assert!(!decide(&PredicateId::NuU, &up("RRR(B)")));
        assert!(decide(&PredicateId::MuW, &up("RRR(B)")));
    }

    #[test]
    fn until_layers() {
        // on (G blue) holds when the first red is followed by all blue,
        // and vacuously when there is no red.
        let on_gb = PredicateId::on(PredicateId::GBlue);
        assert!(decide(&on_gb, &up("BR(B)")));
        assert!(decide(&on_gb, &up("(B)")));
        assert!(!decide(&on_gb, &up("BRR(B)")));
        let pop_gb = PredicateId::pop(PredicateId::GBlue);
        assert!(decide(&pop_gb, &up("BR(B)")));
        assert!(!decide(&pop_gb, &up("(B)")));
    }

    #[test]
    fn at_most_large_bounds_are_clamped_exactly() {
        let s = up("RRRR(B)");
        assert!(!decide(&PredicateId::AtMost(4), &s));
        assert!(decide(&PredicateId::AtMost(5), &s));
        assert!(decide(&PredicateId::AtMost(1_000_000), &s));
        assert!(!decide(&PredicateId::AtMost(1_000_000), &up("(RB)")));
        assert!(decide(&PredicateId::FIter(1_000_000), &s));
    }

    #[test]
    fn minimal_bound_examples() {
        assert_eq!(minimal_bound(&up("(B)")), Some(1));
        assert_eq!(minimal_bound(&up("BRB(B)")), Some(2));
        assert_eq!(minimal_bound(&up("(RB)")), None);
    }

    #[test]
    fn black_box_examples() {
        let f = up("BRB(B)").to_fun();
        assert_eq!(check_black_box(&PredicateId::FRed, &f, 2), Ok(Verdict3::Holds));
        assert_eq!(
            check_black_box(&PredicateId::FRed, &f, 1),
            Ok(Verdict3::Unknown { fuel_spent: 1 })
        );
        assert_eq!(check_black_box(&PredicateId::GBlue, &f, 2), Ok(Verdict3::Fails));
        let blue = FunStream::new(|_| Color::Blue);
        assert_eq!(
            check_black_box(&PredicateId::GBlue, &blue, 1000),
            Ok(Verdict3::Unknown { fuel_spent: 1000 })
        );
        assert_eq!(
            check_black_box(&PredicateId::FGBlue, &blue, 10),
            Err(TemporalError::UnsupportedPredicate(PredicateId::FGBlue))
        );
    }

    #[test]
    fn fn_equals_atmost_examples() {
        assert!(fn_equals_atmost(&up("(B)"), 5));
        assert!(fn_equals_atmost(&up("(RB)"), 5));
        assert!(fn_equals_atmost(&up("BRB(B)"), 5));
    }
}
