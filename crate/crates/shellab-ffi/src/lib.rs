//! C ABI for shellab: opaque handles for labeled posets and their maximal
//! chain descent orders, integer status codes, and heap strings released
//! with [`shellab_string_free`].
//!
//! Every function returns a [`ShellabStatus`] code; on failure a message is
//! kept per thread and can be fetched with [`shellab_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use shellab::descent_order::{build_mcd, is_inversion_ranked, is_polygon_complete, McdOrder};
use shellab::error::Error;
use shellab::families::fixture;
use shellab::io::{cord_doc, parse_labeled_poset, LabeledPoset};
use shellab::labeling::{is_polygon_strong, validate_labeling};

/// Status codes returned by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShellabStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed JSON input.
    ParseError = 3,
    /// The input was well-formed but rejected (bad poset, missing label, ...).
    InvalidInput = 4,
    /// Unknown fixture name.
    UnknownFixture = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

/// A poset with an EL- or CL-labeling.
pub struct ShellabLabeledPoset {
    inner: LabeledPoset,
}

/// The maximal chain descent order of a labeled poset.
pub struct ShellabCord {
    doc: String,
    dot: String,
    mcd: McdOrder,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ShellabStatus {
    set_error(e.to_string());
    match e {
        Error::Json { .. } => ShellabStatus::ParseError,
        Error::UnknownFixture(_) => ShellabStatus::UnknownFixture,
        _ => ShellabStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<(), ShellabStatus>) -> ShellabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ShellabStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            ShellabStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ShellabStatus> {
    if s.is_null() {
        set_error("null string argument".into());
        return Err(ShellabStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8".into());
        ShellabStatus::InvalidUtf8
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, ShellabStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle".into());
        ShellabStatus::NullPointer
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), ShellabStatus> {
    if out.is_null() {
        set_error("null output pointer".into());
        return Err(ShellabStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: &str) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nul removed").into_raw()
}

/// Parses a labeled poset JSON document.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
/// The handle written to `out` must be released with
/// [`shellab_labeled_poset_free`].
#[no_mangle]
pub unsafe extern "C" fn shellab_labeled_poset_from_json(
    json: *const c_char,
    out: *mut *mut ShellabLabeledPoset,
) -> ShellabStatus {
    guard(|| {
        let text = read_str(json)?;
        let inner = parse_labeled_poset(text).map_err(|e| status_of(&e))?;
        write_out(out, Box::into_raw(Box::new(ShellabLabeledPoset { inner })))
    })
}

/// Loads a built-in figure fixture by name.
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer.
/// The handle written to `out` must be released with
/// [`shellab_labeled_poset_free`].
#[no_mangle]
pub unsafe extern "C" fn shellab_fixture(name: *const c_char, out: *mut *mut ShellabLabeledPoset) -> ShellabStatus {
    guard(|| {
        let name = read_str(name)?;
        let inner = fixture(name).map_err(|e| status_of(&e))?;
        write_out(out, Box::into_raw(Box::new(ShellabLabeledPoset { inner })))
    })
}

/// Releases a labeled poset handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle returned by this library that has not been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn shellab_labeled_poset_free(p: *mut ShellabLabeledPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of elements of the poset.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shellab_labeled_poset_len(p: *const ShellabLabeledPoset, out: *mut usize) -> ShellabStatus {
    guard(|| write_out(out, deref(p)?.inner.poset.len()))
}

/// Checks the EL or CL axioms (the kind declared by the document).
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shellab_validate(p: *const ShellabLabeledPoset, out: *mut bool) -> ShellabStatus {
    guard(|| {
        let lp = &deref(p)?.inner;
        write_out(out, validate_labeling(&lp.poset, &lp.labeling, lp.kind).valid)
    })
}

/// Decides the polygon strong condition.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shellab_polygon_strong(p: *const ShellabLabeledPoset, out: *mut bool) -> ShellabStatus {
    guard(|| {
        let lp = &deref(p)?.inner;
        let r = is_polygon_strong(&lp.poset, &lp.labeling).map_err(|e| status_of(&e))?;
        write_out(out, r.strong)
    })
}

/// Builds the maximal chain descent order.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer. The handle written
/// to `out` must be released with [`shellab_cord_free`].
#[no_mangle]
pub unsafe extern "C" fn shellab_cord_build(p: *const ShellabLabeledPoset, out: *mut *mut ShellabCord) -> ShellabStatus {
    guard(|| {
        let lp = &deref(p)?.inner;
        let mcd = build_mcd(&lp.poset, &lp.labeling).map_err(|e| status_of(&e))?;
        let doc = serde_json::to_string_pretty(&cord_doc(&lp.poset, &mcd)).expect("serializable");
        let dot = mcd.to_dot();
        write_out(out, Box::into_raw(Box::new(ShellabCord { doc, dot, mcd })))
    })
}

/// Releases a Cord handle. Null is ignored.
///
/// # Safety
/// `c` must be null or a handle returned by this library that has not been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn shellab_cord_free(c: *mut ShellabCord) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of maximal chains.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shellab_cord_len(c: *const ShellabCord, out: *mut usize) -> ShellabStatus {
    guard(|| write_out(out, deref(c)?.mcd.len()))
}

/// Number of cover relations.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shellab_cord_cover_count(c: *const ShellabCord, out: *mut usize) -> ShellabStatus {
    guard(|| write_out(out, deref(c)?.mcd.covers.len()))
}

/// Whether every polygon move is a cover relation.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shellab_cord_is_polygon_complete(c: *const ShellabCord, out: *mut bool) -> ShellabStatus {
    guard(|| write_out(out, is_polygon_complete(&deref(c)?.mcd).complete))
}

/// Whether every polygon move adds exactly one inversion.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn shellab_cord_is_inversion_ranked(c: *const ShellabCord, out: *mut bool) -> ShellabStatus {
    guard(|| write_out(out, is_inversion_ranked(&deref(c)?.mcd).inversion_ranked))
}

/// JSON description of Cord (chains, moves, covers).
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer. The string written
/// to `out` must be released with [`shellab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn shellab_cord_to_json(c: *const ShellabCord, out: *mut *mut c_char) -> ShellabStatus {
    guard(|| write_out(out, into_c_string(&deref(c)?.doc)))
}

/// Hasse diagram of Cord in DOT.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer. The string written
/// to `out` must be released with [`shellab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn shellab_cord_to_dot(c: *const ShellabCord, out: *mut *mut c_char) -> ShellabStatus {
    guard(|| write_out(out, into_c_string(&deref(c)?.dot)))
}

/// Copy of the calling thread's last error message, or null when there is
/// none.
///
/// # Safety
/// The returned string must be released with [`shellab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn shellab_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn shellab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
