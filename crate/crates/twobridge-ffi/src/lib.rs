//! C ABI for the twobridge library.
//!
//! Conventions:
//! - Knots are opaque handles (`TbKnot*`) created by [`tb_knot_new`] and
//!   released by [`tb_knot_free`].
//! - Every fallible call returns a `TbStatus` code; output parameters are
//!   written only on `TB_OK`.
//! - Strings returned through output parameters are NUL-terminated, UTF-8,
//!   owned by the library, and must be released with [`tb_string_free`].
//!
//! The matching header lives in `include/twobridge.h`.

use std::ffi::{c_char, c_int, CString};
use std::ptr;

use twobridge::alexander::alexander_poly;
use twobridge::classify::{classify, theorem_oracle, OracleVerdict, Status};
use twobridge::contfrac::crossing_number;
use twobridge::ors::SearchBounds;
use twobridge::poly::text::format_poly;
use twobridge::{Error, TwoBridgeKnot};

/// Status codes shared with the C header. Keep in sync with `twobridge.h`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TbStatus {
    Ok = 0,
    NullArgument = 1,
    LinkNotKnot = 2,
    NotReduced = 3,
    InvalidInput = 4,
    DomainError = 5,
}

/// Classification verdicts shared with the C header.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TbVerdict {
    Minimal = 0,
    NonMinimal = 1,
    Undecided = 2,
    OutOfTheoremScope = 3,
}

/// Opaque knot handle.
pub struct TbKnot(TwoBridgeKnot);

fn status_of(e: &Error) -> TbStatus {
    match e {
        Error::LinkNotKnot { .. } => TbStatus::LinkNotKnot,
        Error::NotReduced { .. } => TbStatus::NotReduced,
        Error::InvalidInput(_) => TbStatus::InvalidInput,
        _ => TbStatus::DomainError,
    }
}

fn export_string(s: String, out: *mut *mut c_char) -> TbStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            TbStatus::Ok
        }
        Err(_) => TbStatus::InvalidInput,
    }
}

/// Create a knot handle for b(p, q), canonicalizing (p, q) first.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_new(p: i64, q: i64, out: *mut *mut TbKnot) -> TbStatus {
    if out.is_null() {
        return TbStatus::NullArgument;
    }
    match TwoBridgeKnot::new(p, q) {
        Ok(k) => {
            *out = Box::into_raw(Box::new(TbKnot(k)));
            TbStatus::Ok
        }
        Err(e) => {
            *out = ptr::null_mut();
            status_of(&e)
        }
    }
}

/// Release a knot handle. Passing NULL is a no-op.
///
/// # Safety
/// `knot` must be NULL or a pointer returned by `tb_knot_new` that has not
/// already been freed.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_free(knot: *mut TbKnot) {
    if !knot.is_null() {
        drop(Box::from_raw(knot));
    }
}

/// Canonical p of the knot.
///
/// # Safety
/// `knot` must be a live handle from `tb_knot_new`.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_p(knot: *const TbKnot) -> i64 {
    (*knot).0.p()
}

/// Canonical q of the knot.
///
/// # Safety
/// `knot` must be a live handle from `tb_knot_new`.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_q(knot: *const TbKnot) -> i64 {
    (*knot).0.q()
}

/// 1 if the knot is trivial, else 0.
///
/// # Safety
/// `knot` must be a live handle from `tb_knot_new`.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_is_trivial(knot: *const TbKnot) -> c_int {
    (*knot).0.is_trivial() as c_int
}

/// Crossing number; fails with `TB_DOMAIN_ERROR` for the trivial knot.
///
/// # Safety
/// `knot` must be a live handle; `out` must point to writable `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_crossing_number(knot: *const TbKnot, out: *mut i64) -> TbStatus {
    if knot.is_null() || out.is_null() {
        return TbStatus::NullArgument;
    }
    match crossing_number(&(*knot).0) {
        Ok(c) => {
            *out = c;
            TbStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Alexander polynomial as text, e.g. "4t^2-7t+4". Free with `tb_string_free`.
///
/// # Safety
/// `knot` must be a live handle; `out` must point to writable `char *`.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_alexander(knot: *const TbKnot, out: *mut *mut c_char) -> TbStatus {
    if knot.is_null() || out.is_null() {
        return TbStatus::NullArgument;
    }
    let d = alexander_poly(&(*knot).0);
    export_string(format_poly(d.poly(), "t"), out)
}

/// Classify the knot with the given search bounds (pass 0, 0 for defaults).
/// Writes the verdict and, optionally, a comma-separated reason string
/// (free with `tb_string_free`; pass NULL to skip).
///
/// # Safety
/// `knot` must be a live handle; `verdict` must point to writable storage;
/// `reasons` must be NULL or point to writable `char *`.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_classify(
    knot: *const TbKnot,
    max_segments: usize,
    max_connector: i64,
    verdict: *mut TbVerdict,
    reasons: *mut *mut c_char,
) -> TbStatus {
    if knot.is_null() || verdict.is_null() {
        return TbStatus::NullArgument;
    }
    let mut bounds = SearchBounds::default();
    if max_segments > 0 {
        bounds.max_segments = max_segments;
    }
    if max_connector > 0 {
        bounds.max_connector = max_connector;
    }
    let report = classify(&(*knot).0, bounds);
    *verdict = match report.status {
        Status::Minimal => TbVerdict::Minimal,
        Status::NonMinimal => TbVerdict::NonMinimal,
        Status::Undecided => TbVerdict::Undecided,
    };
    if !reasons.is_null() {
        let joined = report
            .reasons
            .iter()
            .map(|r| r.as_str())
            .collect::<Vec<_>>()
            .join(",");
        return export_string(joined, reasons);
    }
    TbStatus::Ok
}

/// Theorem-encoded oracle verdict for the knot.
///
/// # Safety
/// `knot` must be a live handle; `verdict` must point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_oracle(knot: *const TbKnot, verdict: *mut TbVerdict) -> TbStatus {
    if knot.is_null() || verdict.is_null() {
        return TbStatus::NullArgument;
    }
    *verdict = match theorem_oracle(&(*knot).0) {
        OracleVerdict::Minimal => TbVerdict::Minimal,
        OracleVerdict::NonMinimal => TbVerdict::NonMinimal,
        OracleVerdict::OutOfTheoremScope => TbVerdict::OutOfTheoremScope,
    };
    TbStatus::Ok
}

/// Release a string returned by this library. Passing NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a pointer returned by a `tb_*` call that has not
/// already been freed.
#[no_mangle]
pub unsafe extern "C" fn tb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string (do not free).
#[no_mangle]
pub extern "C" fn tb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
