//! C ABI over `finred`.
//!
//! Streams cross the boundary as opaque `FinredStream` handles created by
//! [`finred_stream_parse`] or [`finred_transform`] and released with
//! [`finred_stream_free`]. Every fallible call returns a [`FinredStatus`];
//! on failure a description is available from [`finred_last_error_message`]
//! on the same thread. Enumerations are passed as `uint32_t` and validated.
//!
//! Text results are written into caller buffers as NUL-terminated UTF-8.
//! `written` receives the length without the terminator, also when the
//! buffer is too small, so callers can size a retry.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use finred::constructions;
use finred::notions::ClassificationReport;
use finred::{decide, parse_stream, Color, PredicateId, SuccRelation, UpStream};

/// Opaque stream handle. Always holds a canonical stream.
pub struct FinredStream {
    inner: UpStream,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinredStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Utf8 = 3,
    InvalidArgument = 4,
    BufferTooSmall = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinredColor {
    Red = 0,
    Blue = 1,
}

/// Base predicates for [`finred_decide`]. `n` parametrizes `AtMost` and `FIter`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinredPredicate {
    FRed = 0,
    GBlue = 1,
    FgBlue = 2,
    GfRed = 3,
    MuW = 4,
    NuU = 5,
    AtMost = 6,
    FIter = 7,
}

/// Optional until-wrapper applied to the base predicate.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinredWrap {
    None = 0,
    On = 1,
    Pop = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinredTransform {
    FirstRedTruncate = 0,
    ComplementUntilRed = 1,
    PadDouble = 2,
    SearchTag = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: FinredStatus, message: impl Into<String>) -> FinredStatus {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
    status
}

fn succeed() -> FinredStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    FinredStatus::Ok
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(FinredStatus::NullPointer, concat!("`", stringify!($p), "` is null"));
        })+
    };
}

fn predicate_id(code: u32, wrap: u32, n: usize) -> Option<PredicateId> {
    let base = match code {
        0 => PredicateId::FRed,
        1 => PredicateId::GBlue,
        2 => PredicateId::FGBlue,
        3 => PredicateId::GFRed,
        4 => PredicateId::MuW,
        5 => PredicateId::NuU,
        6 => PredicateId::AtMost(n),
        7 => PredicateId::FIter(n),
        _ => return None,
    };
    match wrap {
        0 => Some(base),
        1 => Some(PredicateId::on(base)),
        2 => Some(PredicateId::pop(base)),
        _ => None,
    }
}

unsafe fn write_text(text: &str, buf: *mut c_char, cap: usize, written: *mut usize) -> FinredStatus {
    *written = text.len();
    if buf.is_null() || cap <= text.len() {
        return fail(
            FinredStatus::BufferTooSmall,
            format!("need {} bytes, have {cap}", text.len() + 1),
        );
    }
    ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
    *buf.add(text.len()) = 0;
    succeed()
}

fn into_handle(s: UpStream) -> *mut FinredStream {
    Box::into_raw(Box::new(FinredStream { inner: s.canonicalize() }))
}

/// Parses a stream literal such as `BRB(B)` into a new handle.
///
/// # Safety
/// `literal` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn finred_stream_parse(literal: *const c_char, out: *mut *mut FinredStream) -> FinredStatus {
    non_null!(literal, out);
    let Ok(text) = CStr::from_ptr(literal).to_str() else {
        return fail(FinredStatus::Utf8, "literal is not valid UTF-8");
    };
    match parse_stream(text) {
        Ok(s) => {
            *out = into_handle(s);
            succeed()
        }
        Err(e) => fail(FinredStatus::Parse, e.to_string()),
    }
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `stream` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn finred_stream_free(stream: *mut FinredStream) {
    if !stream.is_null() {
        drop(Box::from_raw(stream));
    }
}

/// Writes the canonical literal of the stream.
///
/// # Safety
/// `stream` must be a live handle, `buf` valid for `cap` bytes, `written` writable.
#[no_mangle]
pub unsafe extern "C" fn finred_stream_format(
    stream: *const FinredStream,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> FinredStatus {
    non_null!(stream, written);
    write_text(&(*stream).inner.to_string(), buf, cap, written)
}

/// # Safety
/// `stream` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn finred_stream_at(stream: *const FinredStream, n: usize, out: *mut u32) -> FinredStatus {
    non_null!(stream, out);
    *out = match (*stream).inner.at(n) {
        Color::Red => FinredColor::Red as u32,
        Color::Blue => FinredColor::Blue as u32,
    };
    succeed()
}

/// Decides `wrap(predicate)` at position 0. `predicate` is a
/// `FinredPredicate`, `wrap` a `FinredWrap`.
///
/// # Safety
/// `stream` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn finred_decide(
    stream: *const FinredStream,
    predicate: u32,
    wrap: u32,
    n: usize,
    out: *mut bool,
) -> FinredStatus {
    non_null!(stream, out);
    let Some(p) = predicate_id(predicate, wrap, n) else {
        return fail(
            FinredStatus::InvalidArgument,
            format!("unknown predicate {predicate} or wrap {wrap}"),
        );
    };
    *out = decide(&p, &(*stream).inner);
    succeed()
}

/// Writes the compact JSON classification document.
///
/// # Safety
/// As for [`finred_stream_format`].
#[no_mangle]
pub unsafe extern "C" fn finred_classify_json(
    stream: *const FinredStream,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> FinredStatus {
    non_null!(stream, written);
    let report = ClassificationReport::new(&(*stream).inner);
    let text = serde_json::to_string(&report).expect("report serializes");
    write_text(&text, buf, cap, written)
}

/// Applies a `FinredTransform` and returns a new handle.
///
/// # Safety
/// `stream` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn finred_transform(
    stream: *const FinredStream,
    transform: u32,
    out: *mut *mut FinredStream,
) -> FinredStatus {
    non_null!(stream, out);
    let f: fn(&UpStream) -> UpStream = match transform {
        0 => constructions::first_red_truncate,
        1 => constructions::complement_until_red,
        2 => constructions::pad_double,
        3 => constructions::search_tag,
        _ => return fail(FinredStatus::InvalidArgument, format!("unknown transform {transform}")),
    };
    *out = into_handle(f(&(*stream).inner));
    succeed()
}

/// The successor of `n`: `*has_successor` is false when `n` is terminal.
///
/// # Safety
/// `stream` must be a live handle; both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn finred_successor(
    stream: *const FinredStream,
    n: usize,
    has_successor: *mut bool,
    successor: *mut usize,
) -> FinredStatus {
    non_null!(stream, has_successor, successor);
    let next = SuccRelation::new(&(*stream).inner).successor(n);
    *has_successor = next.is_some();
    *successor = next.unwrap_or(0);
    succeed()
}

/// Accessibility of `n` and its rank (meaningful only when accessible).
///
/// # Safety
/// `stream` must be a live handle; both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn finred_accessible(
    stream: *const FinredStream,
    n: usize,
    accessible: *mut bool,
    rank: *mut usize,
) -> FinredStatus {
    non_null!(stream, accessible, rank);
    let result = SuccRelation::new(&(*stream).inner).accessible(n);
    *accessible = result.is_accessible();
    *rank = result.rank().unwrap_or(0);
    succeed()
}

/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn finred_bisimilar(
    left: *const FinredStream,
    right: *const FinredStream,
    out: *mut bool,
) -> FinredStatus {
    non_null!(left, right, out);
    *out = (*left).inner.bisimilar(&(*right).inner);
    succeed()
}

/// Message for the last failed call on this thread, or null after a
/// success. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn finred_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}
