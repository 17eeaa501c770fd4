//! Executable decision procedures for the ways an infinite two-color stream
//! can be "finitely red".
//!
//! Streams are ultimately periodic ([`UpStream`]), where every notion is
//! decidable, or black boxes ([`FunStream`]), where only search-based
//! semi-decision is possible. The modules build on each other:
//!
//! - [`stream`]: both views, indexing, suffixes, canonical form, bisimilarity.
//! - [`fixpoint`]: the finite quotient of a stream and Kleene iteration.
//! - [`temporal`]: `F`, `G`, weak and strong until, `μW`, `νU`, `atmost_n`, `F^n`.
//! - [`succession`]: the relation `≻_s`, chains, accessibility, SN, antifoundedness.
//! - [`notions`]: the six-notion classifier and set-finiteness notions.
//! - [`constructions`]: stream and colist transformers with checkable laws.
//! - [`suite`], [`family`], [`cli`]: the `finred` command and its property suite.

pub mod cli;
pub mod constructions;
pub mod family;
pub mod fixpoint;
pub mod notions;
pub mod stream;
pub mod succession;
pub mod suite;
pub mod temporal;

pub use fixpoint::{build_quotient, gfp, lfp, FixpointError, Quotient, StateSet};
pub use notions::{classify, Classification, DecSet};
pub use stream::{f2s_up, parse_stream, s2f, Color, FunStream, ParseError, Position, StreamError, UpStream};
pub use succession::{AccResult, ChainResult, SuccRelation};
pub use temporal::{check_black_box, decide, minimal_bound, PredicateId, TemporalError, Verdict3};
