//! C ABI over `tridisk`.
//!
//! Every fallible function returns a [`TdStatus`]; on failure the message is
//! kept per thread and can be fetched with [`td_last_error_message`].
//! Complexes are opaque [`TdComplex`] handles released with
//! [`td_complex_free`]. Strings returned by the library are released with
//! [`td_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use tridisk::certifier::{
    certify_simply_connected, find_triangulated_disk, triangulated_fraction, CycleSample, SearchLimits,
    SearchOutcome, Verdict,
};
use tridisk::moments::janson_bound;
use tridisk::random_complex::Complex2;
use tridisk::subset_params::build_xs;
use tridisk::tri_enum::count_triangulations;
use tridisk::{Error, Face};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Io = 3,
    Parse = 4,
    Domain = 5,
    BudgetExhausted = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

/// Opaque handle to an immutable 2-complex.
pub struct TdComplex {
    inner: Complex2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> TdStatus {
    match e {
        Error::Io { .. } => TdStatus::Io,
        Error::Parse { .. } | Error::OutOfRange { .. } => TdStatus::Parse,
        Error::Domain(_) | Error::EnumerationLimit { .. } | Error::PairBudget { .. } => TdStatus::Domain,
        Error::BudgetExhausted { .. } => TdStatus::BudgetExhausted,
        Error::CertificateRejected(_) => TdStatus::Internal,
        _ => TdStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (TdStatus, String)>) -> TdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TdStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TdStatus::Internal
        }
    }
}

fn lib(e: Error) -> (TdStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TdStatus, String) {
    (TdStatus::NullPointer, format!("{what} is null"))
}

unsafe fn complex<'a>(c: *const TdComplex) -> Result<&'a Complex2, (TdStatus, String)> {
    // SAFETY: the caller passes a handle from this library or null.
    unsafe { c.as_ref() }.map(|c| &c.inner).ok_or_else(|| null("complex"))
}

unsafe fn c_path<'a>(p: *const c_char) -> Result<&'a str, (TdStatus, String)> {
    if p.is_null() {
        return Err(null("path"));
    }
    // SAFETY: non-null, NUL-terminated by contract.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| (TdStatus::InvalidArgument, "path is not UTF-8".into()))
}

/// Copies `s` plus a NUL into `buf`. Always stores the required size
/// (including the NUL) in `needed` when it is non-null.
unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), (TdStatus, String)> {
    let need = s.len() + 1;
    if !needed.is_null() {
        // SAFETY: non-null out-pointer.
        unsafe { *needed = need };
    }
    if buf.is_null() || len < need {
        return Err((TdStatus::BufferTooSmall, format!("need {need} bytes")));
    }
    // SAFETY: `buf` holds at least `need` bytes.
    unsafe {
        std::ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
        *buf.add(s.len()) = 0;
    }
    Ok(())
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), (TdStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null out-pointer.
    unsafe { *out = v };
    Ok(())
}

/// The library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn td_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy of the last error message on this thread, or null. Free with
/// `td_string_free`.
#[no_mangle]
pub extern "C" fn td_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null_mut(), |s| s.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn td_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Writes `t_k` in decimal to `buf`.
///
/// # Safety
/// `buf` must hold `len` bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn td_count_triangulations(k: usize, buf: *mut c_char, len: usize, needed: *mut usize) -> TdStatus {
    guard(|| unsafe { write_str(&count_triangulations(k).to_string(), buf, len, needed) })
}

/// Samples `Y_2(n, p)`.
///
/// # Safety
/// `out` must be a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn td_complex_sample(n: u32, p: f64, seed: u64, out: *mut *mut TdComplex) -> TdStatus {
    guard(|| {
        let inner = Complex2::sample(n, p, seed).map_err(lib)?;
        unsafe { put(out, Box::into_raw(Box::new(TdComplex { inner })), "out") }
    })
}

/// Reads a complex from a text file.
///
/// # Safety
/// `path` must be NUL-terminated; `out` a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn td_complex_read(path: *const c_char, out: *mut *mut TdComplex) -> TdStatus {
    guard(|| {
        let p = unsafe { c_path(path) }?;
        let inner = Complex2::read(p).map_err(lib)?;
        unsafe { put(out, Box::into_raw(Box::new(TdComplex { inner })), "out") }
    })
}

/// # Safety
/// `c` must be a live handle; `path` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn td_complex_write(c: *const TdComplex, path: *const c_char) -> TdStatus {
    guard(|| {
        let y = unsafe { complex(c) }?;
        let p = unsafe { c_path(path) }?;
        y.write(p).map_err(lib)
    })
}

/// # Safety
/// `c` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn td_complex_free(c: *mut TdComplex) {
    if !c.is_null() {
        // SAFETY: produced by Box::into_raw in this library.
        drop(unsafe { Box::from_raw(c) });
    }
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn td_complex_n(c: *const TdComplex) -> u32 {
    unsafe { c.as_ref() }.map_or(0, |c| c.inner.n())
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn td_complex_face_count(c: *const TdComplex) -> usize {
    unsafe { c.as_ref() }.map_or(0, |c| c.inner.face_count())
}

/// # Safety
/// `c` must be a live handle; `out` a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn td_complex_contains_face(c: *const TdComplex, a: u32, b: u32, d: u32, out: *mut bool) -> TdStatus {
    guard(|| {
        let y = unsafe { complex(c) }?;
        let f = Face::new(a, b, d).map_err(lib)?;
        unsafe { put(out, y.contains_face(&f), "out") }
    })
}

/// Looks for a disk bounding `(a, b, d)`. Sets `found` to 1 and
/// `internal_used` on success, `found` to 0 when none exists within
/// `max_internal`. Returns `TD_STATUS_BUDGET_EXHAUSTED` if the search gave
/// up.
///
/// # Safety
/// `c` must be a live handle; out-pointers valid (`internal_used` may be
/// null).
#[no_mangle]
pub unsafe extern "C" fn td_find_disk(
    c: *const TdComplex,
    a: u32,
    b: u32,
    d: u32,
    max_internal: usize,
    budget: u64,
    found: *mut i32,
    internal_used: *mut usize,
) -> TdStatus {
    guard(|| {
        let y = unsafe { complex(c) }?;
        let o = find_triangulated_disk(y, [a, b, d], SearchLimits::new(max_internal, budget)).map_err(lib)?;
        match o {
            SearchOutcome::Found(cert) => {
                unsafe { put(found, 1, "found") }?;
                if !internal_used.is_null() {
                    unsafe { *internal_used = cert.internal_used };
                }
                Ok(())
            }
            SearchOutcome::Absent(_) => unsafe { put(found, 0, "found") },
            SearchOutcome::BudgetExhausted(s) => {
                unsafe { put(found, 0, "found") }?;
                Err((TdStatus::BudgetExhausted, format!("budget exhausted after {} states", s.states)))
            }
        }
    })
}

/// Runs the certifier on every 3-cycle. `yes` is 1 only if all are
/// certified; `exhausted` counts searches that ran out of budget.
///
/// # Safety
/// `c` must be a live handle; out-pointers valid (`exhausted` may be null).
#[no_mangle]
pub unsafe extern "C" fn td_certify(
    c: *const TdComplex,
    max_internal: usize,
    budget: u64,
    yes: *mut i32,
    exhausted: *mut usize,
) -> TdStatus {
    guard(|| {
        let y = unsafe { complex(c) }?;
        let r = certify_simply_connected(y, SearchLimits::new(max_internal, budget)).map_err(lib)?;
        unsafe { put(yes, i32::from(r.verdict == Verdict::Yes), "yes") }?;
        if !exhausted.is_null() {
            unsafe { *exhausted = r.budget_exhausted };
        }
        Ok(())
    })
}

/// Fraction of `samples` random 3-cycles (all of them when `samples` is 0)
/// that bound a disk.
///
/// # Safety
/// `c` must be a live handle; `out` a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn td_triangulated_fraction(
    c: *const TdComplex,
    max_internal: usize,
    budget: u64,
    samples: usize,
    seed: u64,
    out: *mut f64,
) -> TdStatus {
    guard(|| {
        let y = unsafe { complex(c) }?;
        let sample = if samples == 0 {
            CycleSample::All
        } else {
            CycleSample::Random { count: samples, seed }
        };
        let r = triangulated_fraction(y, SearchLimits::new(max_internal, budget), &sample).map_err(lib)?;
        unsafe { put(out, r.fraction, "out") }
    })
}

/// `2Φ` of the face set given as `count` consecutive vertex triples.
///
/// # Safety
/// `faces` must hold `3 * count` values; `out` a valid out-pointer.
#[no_mangle]
pub unsafe extern "C" fn td_phi(faces: *const u32, count: usize, twice_phi: *mut i64) -> TdStatus {
    guard(|| {
        if faces.is_null() {
            return Err(null("faces"));
        }
        // SAFETY: caller guarantees 3 * count readable values.
        let raw = unsafe { std::slice::from_raw_parts(faces, 3 * count) };
        let fs = raw
            .chunks_exact(3)
            .map(|t| Face::new(t[0], t[1], t[2]))
            .collect::<Result<Vec<_>, _>>()
            .map_err(lib)?;
        let xs = build_xs(&fs).map_err(lib)?;
        unsafe { put(twice_phi, xs.phi().doubled(), "twice_phi") }
    })
}

/// `e^(-μ/2) + e^(-μ²/2Δ)` (first term only when `Δ = 0`), clamped to
/// `[0, 1]`.
#[no_mangle]
pub extern "C" fn td_janson_bound(mu: f64, delta: f64) -> f64 {
    janson_bound(mu, delta)
}
