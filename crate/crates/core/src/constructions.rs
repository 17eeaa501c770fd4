//! Stream and colist transformers used to separate the finitely-red notions.
//!
//! Each transformer is a corecursive definition whose result on an
//! ultimately periodic input only depends on where the first red sits, so it
//! is computed here in closed form by case on that position.

use crate::stream::{Color, Position, UpStream};
use crate::succession::{chain_from, ChainResult, Periodic};

/// Red positions of a stream as a (possibly infinite) increasing colist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RedPositions {
    Finite(Vec<Position>),
    InfinitePeriodic(Periodic),
}

impl RedPositions {
    pub fn is_finite(&self) -> bool {
        matches!(self, RedPositions::Finite(_))
    }

    pub fn take(&self, limit: usize) -> Vec<Position> {
        match self {
            RedPositions::Finite(xs) => xs.iter().copied().take(limit).collect(),
            RedPositions::InfinitePeriodic(p) => p.iter().take(limit).collect(),
        }
    }
}

impl From<ChainResult> for RedPositions {
    fn from(chain: ChainResult) -> Self {
        match chain {
            ChainResult::Finite(xs) => RedPositions::Finite(xs),
            ChainResult::InfinitePeriodic(p) => RedPositions::InfinitePeriodic(p),
        }
    }
}

fn word(blocks: &[(Color, usize)]) -> Vec<Color> {
    blocks
        .iter()
        .flat_map(|&(c, n)| std::iter::repeat_n(c, n))
        .collect()
}

/// `f (B s) = B (f s)`, `f (R s) = R B^∞`: keeps only the first red.
pub fn first_red_truncate(s: &UpStream) -> UpStream {
    match s.first_red() {
        Some(k) => UpStream::then_blue(word(&[(Color::Blue, k), (Color::Red, 1)])),
        None => s.canonicalize(),
    }
}

/// `f (B s) = R (f s)`, `f (R s) = B^∞`: red exactly until the first red of
/// `s`, so the red count of the result is the first red position of `s`.
pub fn complement_until_red(s: &UpStream) -> UpStream {
    match s.first_red() {
        Some(k) => UpStream::then_blue(vec![Color::Red; k]),
        None => UpStream::all_red(),
    }
}

/// Blue until the first red at `n`, red on `[n, 2n]`, blue afterwards.
pub fn pad_double(s: &UpStream) -> UpStream {
    match s.first_red() {
        Some(n) => UpStream::then_blue(word(&[(Color::Blue, n), (Color::Red, n + 1)])),
        None => UpStream::all_blue(),
    }
}

/// `f n (B s) = B (f (n+1) s)`, `f n (R s) = g n` with `g n = R^n B^∞`,
/// started at `n = 0`: records the first red position of `s` as the number
/// of reds in the result.
pub fn search_tag(s: &UpStream) -> UpStream {
    match s.first_red() {
        Some(k) => UpStream::then_blue(word(&[(Color::Blue, k), (Color::Red, k)])),
        None => UpStream::all_blue(),
    }
}

/// All red positions in increasing order.
pub fn red_positions(s: &UpStream) -> RedPositions {
    let s = s.canonicalize();
    let reds_in = |range: std::ops::Range<usize>| -> Vec<Position> {
        range.filter(|&n| s.at(n).is_red()).collect()
    };
    let p = s.prefix_len();
    let mut head = reds_in(0..p);
    if s.cycle_all_blue() {
        return RedPositions::Finite(head);
    }
    let loop_start = head.len();
    head.extend(reds_in(p..p + s.cycle_len()));
    RedPositions::InfinitePeriodic(Periodic {
        head,
        loop_start,
        period: s.cycle_len(),
    })
}

/// Turns the `≻`-chain from `start` into a colist over the red positions by
/// subtracting one from every element.
pub fn chain_to_colist(s: &UpStream, start: Position) -> RedPositions {
    chain_from(s, start).map(|m| m - 1).into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::parse_stream;

    fn up(s: &str) -> UpStream {
        parse_stream(s).unwrap()
    }

    #[test]
    fn first_red_truncate_examples() {
        assert_eq!(first_red_truncate(&up("(B)")), up("(B)"));
        assert_eq!(first_red_truncate(&up("BBR(R)")), up("BBR(B)"));
        assert_eq!(first_red_truncate(&up("(R)")), up("R(B)"));
    }

    #[test]
    fn complement_until_red_examples() {
        assert_eq!(complement_until_red(&up("(B)")), up("(R)"));
        assert_eq!(complement_until_red(&up("BBR(B)")), up("RR(B)"));
        assert_eq!(complement_until_red(&up("(R)")), up("(B)"));
    }

    #[test]
    fn pad_double_examples() {
        assert_eq!(pad_double(&up("(B)")), up("(B)"));
        assert_eq!(pad_double(&up("BR(B)")), up("BRR(B)"));
        assert_eq!(pad_double(&up("R(B)")), up("R(B)"));
        assert_eq!(pad_double(&up("BB(BR)")), up("BBBRRRR(B)"));
    }

    #[test]
    fn search_tag_examples() {
        assert_eq!(search_tag(&up("(B)")), up("(B)"));
        assert_eq!(search_tag(&up("BBR(RB)")), up("BBRR(B)"));
        assert_eq!(search_tag(&up("R(BR)")), up("(B)"));
    }

    #[test]
    fn red_positions_examples() {
        assert_eq!(red_positions(&up("(B)")), RedPositions::Finite(vec![]));
        assert_eq!(red_positions(&up("RBRB(B)")), RedPositions::Finite(vec![0, 2]));
        let reds = red_positions(&up("B(RB)"));
        assert_eq!(
            reds,
            RedPositions::InfinitePeriodic(Periodic {
                head: vec![1],
                loop_start: 0,
                period: 2
            })
        );
        assert_eq!(reds.take(3), [1, 3, 5]);
        assert_eq!(red_positions(&up("RB(BRR)")).take(6), [0, 3, 4, 6, 7, 9]);
    }

    #[test]
    fn chain_to_colist_examples() {
        assert_eq!(chain_to_colist(&up("BRB(B)"), 0), RedPositions::Finite(vec![1]));
        assert_eq!(chain_to_colist(&up("(B)"), 0), RedPositions::Finite(vec![]));
        assert_eq!(chain_to_colist(&up("(RB)"), 0).take(3), [0, 2, 4]);
    }
}
