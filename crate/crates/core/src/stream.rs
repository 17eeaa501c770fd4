//! Two-color streams in their two views.
//!
//! [`UpStream`] is the exact, finitely represented view: a finite prefix
//! followed by a nonempty cycle repeated forever. Every predicate in this
//! crate is decidable on it. [`FunStream`] is the black-box view: an opaque
//! total function from positions to colors that can only be probed.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// 0-based index into a stream.
pub type Position = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn is_red(self) -> bool {
        self == Color::Red
    }

    pub fn is_blue(self) -> bool {
        self == Color::Blue
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'R' => Some(Color::Red),
            'B' => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid stream literal at offset {offset}: expected {expected}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StreamError {
    #[error("cycle must be nonempty")]
    EmptyCycle,
    /// The lookup disagrees with the claimed shape at `position` versus
    /// `position + cycle_len`.
    #[error("lookup is not periodic with the claimed shape: position {position} differs from position {position} + cycle length")]
    ShapeMismatch { position: Position },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Ultimately periodic stream `prefix (cycle)^ω`.
///
/// Values need not be canonical; [`UpStream::canonicalize`] produces the
/// unique normal form, on which bisimilarity is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpStream {
    prefix: Vec<Color>,
    cycle: Vec<Color>,
}

impl UpStream {
    pub fn new(prefix: Vec<Color>, cycle: Vec<Color>) -> Result<Self, StreamError> {
        if cycle.is_empty() {
            return Err(StreamError::EmptyCycle);
        }
        Ok(UpStream { prefix, cycle })
    }

    /// `(c)`: the constant stream.
    pub fn constant(color: Color) -> Self {
        UpStream {
            prefix: Vec::new(),
            cycle: vec![color],
        }
    }

    pub fn all_blue() -> Self {
        Self::constant(Color::Blue)
    }

    pub fn all_red() -> Self {
        Self::constant(Color::Red)
    }

    /// `prefix (B)`, the stream that is blue after a finite word.
    pub fn then_blue(prefix: Vec<Color>) -> Self {
        UpStream {
            prefix,
            cycle: vec![Color::Blue],
        }
        .canonicalize()
    }

    pub fn prefix(&self) -> &[Color] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[Color] {
        &self.cycle
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    pub fn at(&self, n: Position) -> Color {
        match self.prefix.get(n) {
            Some(&c) => c,
            None => self.cycle[(n - self.prefix.len()) % self.cycle.len()],
        }
    }

    /// The suffix starting at `n`, in canonical form.
    pub fn suffix(&self, n: Position) -> UpStream {
        let p = self.prefix.len();
        let shifted = if n <= p {
            UpStream {
                prefix: self.prefix[n..].to_vec(),
                cycle: self.cycle.clone(),
            }
        } else {
            let mut cycle = self.cycle.clone();
            let len = cycle.len();
            cycle.rotate_left((n - p) % len);
            UpStream {
                prefix: Vec::new(),
                cycle,
            }
        };
        shifted.canonicalize()
    }

    /// Primitive cycle, then absorb the prefix tail into rotations of it.
    pub fn canonicalize(&self) -> UpStream {
        let mut cycle = primitive_root(&self.cycle).to_vec();
        let mut prefix = self.prefix.clone();
        while let (Some(&last_p), Some(&last_c)) = (prefix.last(), cycle.last()) {
            if last_p != last_c {
                break;
            }
            prefix.pop();
            cycle.rotate_right(1);
        }
        UpStream { prefix, cycle }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    pub fn bisimilar(&self, other: &UpStream) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Least position at which the two streams differ, if any.
    pub fn first_difference(&self, other: &UpStream) -> Option<Position> {
        let window = self.prefix_len()
            + other.prefix_len()
            + lcm(self.cycle_len(), other.cycle_len());
        (0..window).find(|&n| self.at(n) != other.at(n))
    }

    pub fn first_red(&self) -> Option<Position> {
        let p = self.prefix.len();
        self.prefix
            .iter()
            .position(|c| c.is_red())
            .or_else(|| self.cycle.iter().position(|c| c.is_red()).map(|k| p + k))
    }

    pub fn cycle_all_blue(&self) -> bool {
        self.cycle.iter().all(|c| c.is_blue())
    }

    /// Number of red positions, or `None` when there are infinitely many.
    pub fn red_count(&self) -> Option<usize> {
        if self.cycle_all_blue() {
            Some(self.prefix.iter().filter(|c| c.is_red()).count())
        } else {
            None
        }
    }

    pub fn to_fun(&self) -> FunStream {
        s2f(self)
    }
}

fn primitive_root(word: &[Color]) -> &[Color] {
    let n = word.len();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (d..n).all(|i| word[i] == word[i - d]))
        .map(|d| &word[..d])
        .unwrap_or(word)
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

impl fmt::Display for UpStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.prefix {
            write!(f, "{c}")?;
        }
        f.write_str("(")?;
        for c in &self.cycle {
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for UpStream {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses `PREFIX(CYCLE)` or the shorthand `PREFIX` (meaning `PREFIX(B)`).
/// The literal's shape is kept as written; see [`UpStream::canonicalize`].
pub fn parse_stream(text: &str) -> Result<UpStream, ParseError> {
    let mut prefix = Vec::new();
    let mut chars = text.char_indices();
    loop {
        match chars.next() {
            None => {
                return Ok(UpStream {
                    prefix,
                    cycle: vec![Color::Blue],
                })
            }
            Some((_, '(')) => break,
            Some((i, c)) => match Color::from_char(c) {
                Some(color) => prefix.push(color),
                None => {
                    return Err(ParseError {
                        offset: i,
                        expected: "'R', 'B' or '('",
                    })
                }
            },
        }
    }
    let mut cycle = Vec::new();
    loop {
        match chars.next() {
            None => {
                return Err(ParseError {
                    offset: text.len(),
                    expected: if cycle.is_empty() { "'R' or 'B'" } else { "'R', 'B' or ')'" },
                })
            }
            Some((i, ')')) => {
                if cycle.is_empty() {
                    return Err(ParseError {
                        offset: i,
                        expected: "'R' or 'B'",
                    });
                }
                if let Some((j, _)) = chars.next() {
                    return Err(ParseError {
                        offset: j,
                        expected: "end of input",
                    });
                }
                break;
            }
            Some((i, c)) => match Color::from_char(c) {
                Some(color) => cycle.push(color),
                None => {
                    return Err(ParseError {
                        offset: i,
                        expected: if cycle.is_empty() { "'R' or 'B'" } else { "'R', 'B' or ')'" },
                    })
                }
            },
        }
    }
    Ok(UpStream { prefix, cycle })
}

impl FromStr for UpStream {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_stream(s)
    }
}

/// Black-box stream: a total lookup from positions to colors.
///
/// The lookup must be reentrant if it is shared between threads.
#[derive(Clone)]
pub struct FunStream {
    lookup: Arc<dyn Fn(Position) -> Color + Send + Sync>,
}

impl FunStream {
    pub fn new<F>(lookup: F) -> Self
    where
        F: Fn(Position) -> Color + Send + Sync + 'static,
    {
        FunStream {
            lookup: Arc::new(lookup),
        }
    }

    pub fn get(&self, n: Position) -> Color {
        (self.lookup)(n)
    }

    /// `λm. f (n + m)`
    pub fn shift(&self, n: Position) -> FunStream {
        let inner = Arc::clone(&self.lookup);
        FunStream::new(move |m| inner(n + m))
    }
}

impl fmt::Debug for FunStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("FunStream(..)")
    }
}

pub fn s2f(s: &UpStream) -> FunStream {
    let s = s.clone();
    FunStream::new(move |n| s.at(n))
}

/// Reifies a black-box stream the caller claims is ultimately periodic with
/// the given shape. Only the window `[0, prefix_len + 2 * cycle_len)` is
/// read; the claim is checked on it.
pub fn f2s_up(
    lookup: &FunStream,
    prefix_len: usize,
    cycle_len: usize,
) -> Result<UpStream, StreamError> {
    if cycle_len == 0 {
        return Err(StreamError::EmptyCycle);
    }
    let prefix: Vec<Color> = (0..prefix_len).map(|n| lookup.get(n)).collect();
    let cycle: Vec<Color> = (prefix_len..prefix_len + cycle_len)
        .map(|n| lookup.get(n))
        .collect();
    for (i, &c) in cycle.iter().enumerate() {
        let position = prefix_len + i;
        if lookup.get(position + cycle_len) != c {
            return Err(StreamError::ShapeMismatch { position });
        }
    }
    Ok(UpStream { prefix, cycle }.canonicalize())
}
