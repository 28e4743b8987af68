//! C ABI over the `puiseux` library.
//!
//! Every fallible function returns a [`PxStatus`] and writes its result
//! through an out-pointer. On failure, [`px_last_error`] returns a message for
//! the calling thread. Objects are opaque handles released with the matching
//! `*_free` function; strings returned to C are released with
//! [`px_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use puiseux::cli::factorization_json;
use puiseux::factor_engine::{canonical_factorization, divisors_in_algebra, DivisorSet};
use puiseux::parser::{format_poly, parse_monoid, parse_poly, parse_rat};
use puiseux::{Error, PuiseuxMonoid, PuiseuxPoly};

/// Result codes. The first four match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PxStatus {
    Ok = 0,
    Domain = 1,
    Parse = 2,
    Resource = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// Opaque element of Q[Q_+].
pub struct PxPoly(PuiseuxPoly);

/// Opaque finitely generated Puiseux monoid.
pub struct PxMonoid(PuiseuxMonoid);

/// Opaque list of divisor representatives.
pub struct PxDivisorSet(DivisorSet);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(PxStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match e {
            Error::Domain(_) => PxStatus::Domain,
            Error::Parse { .. } | Error::Semantic { .. } => PxStatus::Parse,
            Error::ResourceLimit(_) => PxStatus::Resource,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PxStatus::NullPointer, format!("{what} is null"))
}

fn run(f: impl FnOnce() -> Result<(), Failure>) -> PxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PxStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            PxStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(PxStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn px_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn px_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn px_poly_parse(text: *const c_char, out: *mut *mut PxPoly) -> PxStatus {
    run(|| {
        let f = parse_poly(read_str(text, "text")?)?;
        write_out(out, Box::into_raw(Box::new(PxPoly(f))))
    })
}

/// # Safety
/// `p` is a live handle; `out` is writable. Free the string with `px_string_free`.
#[no_mangle]
pub unsafe extern "C" fn px_poly_format(p: *const PxPoly, out: *mut *mut c_char) -> PxStatus {
    run(|| {
        let p = deref(p, "poly")?;
        write_out(out, c_string(format_poly(&p.0)))
    })
}

/// # Safety
/// `p` is NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn px_poly_free(p: *mut PxPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `a`, `b` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn px_poly_mul(a: *const PxPoly, b: *const PxPoly, out: *mut *mut PxPoly) -> PxStatus {
    run(|| {
        let prod = &deref(a, "a")?.0 * &deref(b, "b")?.0;
        write_out(out, Box::into_raw(Box::new(PxPoly(prod))))
    })
}

/// # Safety
/// `a`, `b` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn px_poly_equal(a: *const PxPoly, b: *const PxPoly, out: *mut bool) -> PxStatus {
    run(|| write_out(out, deref(a, "a")?.0 == deref(b, "b")?.0))
}

/// Fails with `PX_STATUS_DOMAIN` on the zero element.
///
/// # Safety
/// `p` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn px_poly_is_symmetric_support(p: *const PxPoly, out: *mut bool) -> PxStatus {
    run(|| {
        let sym = deref(p, "poly")?.0.is_symmetric_support()?;
        write_out(out, sym)
    })
}

/// `X -> X^r` with `r` given as text such as "1/2".
///
/// # Safety
/// `p` is a live handle, `r` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn px_poly_substitute(p: *const PxPoly, r: *const c_char, out: *mut *mut PxPoly) -> PxStatus {
    run(|| {
        let p = deref(p, "poly")?;
        let r = parse_rat(read_str(r, "r")?)?;
        let g = p.0.substitute(&r)?;
        write_out(out, Box::into_raw(Box::new(PxPoly(g))))
    })
}

/// Canonical factorization as a JSON document (same shape as `factor --json`).
///
/// # Safety
/// `p` is a live handle; `out` is writable. Free the string with `px_string_free`.
#[no_mangle]
pub unsafe extern "C" fn px_poly_factor_json(p: *const PxPoly, out: *mut *mut c_char) -> PxStatus {
    run(|| {
        let p = deref(p, "poly")?;
        let cf = canonical_factorization(&p.0)?;
        write_out(out, c_string(factorization_json(&p.0, &cf)))
    })
}

/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn px_monoid_parse(text: *const c_char, out: *mut *mut PxMonoid) -> PxStatus {
    run(|| {
        let s = parse_monoid(read_str(text, "text")?)?;
        write_out(out, Box::into_raw(Box::new(PxMonoid(s))))
    })
}

/// # Safety
/// `m` is NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn px_monoid_free(m: *mut PxMonoid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Membership of a non-negative rational given as text.
///
/// # Safety
/// `m` is a live handle, `value` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn px_monoid_contains(m: *const PxMonoid, value: *const c_char, out: *mut bool) -> PxStatus {
    run(|| {
        let m = deref(m, "monoid")?;
        let v = parse_rat(read_str(value, "value")?)?;
        write_out(out, m.0.contains(&v))
    })
}

/// Non-associate divisors of `p` in Q[S]. `limit` caps the candidate
/// sub-multisets; pass 0 for the library default.
///
/// # Safety
/// `p`, `m` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn px_divisors(
    p: *const PxPoly,
    m: *const PxMonoid,
    limit: u64,
    out: *mut *mut PxDivisorSet,
) -> PxStatus {
    run(|| {
        let set = divisors_in_algebra(&deref(p, "poly")?.0, &deref(m, "monoid")?.0, effective(limit))?;
        write_out(out, Box::into_raw(Box::new(PxDivisorSet(set))))
    })
}

fn effective(limit: u64) -> u64 {
    if limit == 0 {
        puiseux::factor_engine::DEFAULT_SUBSET_LIMIT
    } else {
        limit
    }
}

/// Number of divisors in the set; 0 for NULL.
///
/// # Safety
/// `set` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn px_divisor_set_len(set: *const PxDivisorSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

/// A new handle holding a copy of the `index`-th divisor (canonical order).
///
/// # Safety
/// `set` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn px_divisor_set_get(set: *const PxDivisorSet, index: usize, out: *mut *mut PxPoly) -> PxStatus {
    run(|| {
        let set = deref(set, "set")?;
        let g = set
            .0
            .divisors
            .get(index)
            .ok_or_else(|| Failure(PxStatus::Domain, format!("index {index} out of range")))?;
        write_out(out, Box::into_raw(Box::new(PxPoly(g.clone()))))
    })
}

/// # Safety
/// `set` is NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn px_divisor_set_free(set: *mut PxDivisorSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Number of non-associate divisors of `p` in Q[S].
///
/// # Safety
/// `p`, `m` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn px_ff_divisor_count(
    p: *const PxPoly,
    m: *const PxMonoid,
    limit: u64,
    out: *mut usize,
) -> PxStatus {
    run(|| {
        let set = divisors_in_algebra(&deref(p, "poly")?.0, &deref(m, "monoid")?.0, effective(limit))?;
        write_out(out, set.len())
    })
}
