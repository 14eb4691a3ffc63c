//! C ABI for `upset-prune`.
//!
//! Modules cross the boundary as opaque `UpmModule` handles built from and
//! serialized to the JSON module format. Every fallible call returns a
//! `UpmStatus`; on failure a message is kept per thread and can be fetched
//! with [`upm_last_error`]. Strings returned by the library are owned by the
//! caller and released with [`upm_string_free`]. Distances are rational
//! strings such as `"3/2"`, or `"inf"`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use upset_prune::ci::{interleaving_distance_bruteforce, Field};
use upset_prune::distances::{
    bottleneck_distance, default_tolerance, pruning_distance, DistanceResult, Mode,
};
use upset_prune::io::{module_to_json, parse_module};
use upset_prune::{prune, random_module, Error, Module, Rational};

/// Status codes returned by every fallible function.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpmStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed JSON, rational string or UTF-8.
    Parse = 2,
    /// Well-formed input that violates a precondition.
    Validation = 3,
    /// Input too large for an exhaustive search.
    SizeCap = 4,
    /// A bug inside the library; the message has details.
    Internal = 5,
}

/// Opaque module handle.
pub struct UpmModule(Module);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(UpmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => UpmStatus::Parse,
            Error::SizeCap { .. } => UpmStatus::SizeCap,
            _ => UpmStatus::Validation,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(UpmStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> UpmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            UpmStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            UpmStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(UpmStatus::Parse, format!("{what} is not valid UTF-8")))
}

unsafe fn read_rational(p: *const c_char, what: &str) -> Result<Rational, Failure> {
    Ok(read_str(p, what)?.parse()?)
}

unsafe fn module<'a>(p: *const UpmModule, what: &str) -> Result<&'a Module, Failure> {
    p.as_ref().map(|m| &m.0).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s =
        CString::new(s).map_err(|_| Failure(UpmStatus::Internal, "string contains nul".into()))?;
    put(out, s.into_raw(), "out")
}

unsafe fn put_module(out: *mut *mut UpmModule, m: Module) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(UpmModule(m))), "out")
}

/// Last error message on this thread, or null after a successful call. The
/// pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn upm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn upm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a module handle. Null is ignored.
///
/// # Safety
/// `m` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn upm_module_free(m: *mut UpmModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Parses a JSON module file.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upm_module_from_json(
    json: *const c_char,
    out: *mut *mut UpmModule,
) -> UpmStatus {
    guard(|| {
        let m = parse_module(read_str(json, "json")?)?;
        put_module(out, m)
    })
}

/// Canonical JSON for a module. Free the result with [`upm_string_free`].
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upm_module_to_json(
    m: *const UpmModule,
    out: *mut *mut c_char,
) -> UpmStatus {
    guard(|| put_string(out, module_to_json(module(m, "module")?)))
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upm_module_summand_count(
    m: *const UpmModule,
    out: *mut usize,
) -> UpmStatus {
    guard(|| put(out, module(m, "module")?.supdim(), "out"))
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upm_module_dim(m: *const UpmModule, out: *mut usize) -> UpmStatus {
    guard(|| put(out, module(m, "module")?.dim(), "out"))
}

/// Seeded random module; identical arguments give identical modules.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upm_random_module(
    seed: u64,
    summands: usize,
    dim: usize,
    gens_per_summand: usize,
    coord_bound: u32,
    out: *mut *mut UpmModule,
) -> UpmStatus {
    guard(|| {
        put_module(
            out,
            random_module(seed, summands, dim, gens_per_summand, coord_bound)?,
        )
    })
}

/// The `alpha`-pruning of `m`; `alpha` is a rational string.
///
/// # Safety
/// `m` must be a live handle, `alpha` a nul-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn upm_prune(
    m: *const UpmModule,
    alpha: *const c_char,
    out: *mut *mut UpmModule,
) -> UpmStatus {
    guard(|| {
        let m = module(m, "module")?;
        let alpha = read_rational(alpha, "alpha")?;
        put_module(out, prune(m, &alpha)?)
    })
}

/// 1 when the two modules are isomorphic, 0 otherwise.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upm_module_isomorphic(
    a: *const UpmModule,
    b: *const UpmModule,
    out: *mut i32,
) -> UpmStatus {
    guard(|| {
        let iso = module(a, "first module")?.is_isomorphic(module(b, "second module")?)?;
        put(out, i32::from(iso), "out")
    })
}

unsafe fn put_result(
    d: &DistanceResult,
    value: *mut *mut c_char,
    is_exact: *mut i32,
) -> Result<(), Failure> {
    if !is_exact.is_null() {
        is_exact.write(i32::from(d.exact));
    }
    put_string(value, d.value.to_string())
}

/// Bottleneck distance.
///
/// # Safety
/// `a` and `b` must be live handles; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upm_bottleneck_distance(
    a: *const UpmModule,
    b: *const UpmModule,
    value: *mut *mut c_char,
) -> UpmStatus {
    guard(|| {
        let d = bottleneck_distance(module(a, "first module")?, module(b, "second module")?)?;
        put_result(&d, value, ptr::null_mut())
    })
}

/// Pruning distance. `tol` may be null for the default `1/1000000000`.
/// With `exact` nonzero the result is snapped to an exact critical value
/// when possible. `is_exact` (nullable) reports whether `value` is exact; if
/// not, `value` is the midpoint of a bracket of width at most `tol`.
///
/// # Safety
/// `a` and `b` must be live handles, `tol` null or a nul-terminated string
/// and `value` writable.
#[no_mangle]
pub unsafe extern "C" fn upm_pruning_distance(
    a: *const UpmModule,
    b: *const UpmModule,
    tol: *const c_char,
    exact: i32,
    value: *mut *mut c_char,
    is_exact: *mut i32,
) -> UpmStatus {
    guard(|| {
        let tol = if tol.is_null() {
            default_tolerance()
        } else {
            read_rational(tol, "tol")?
        };
        let mode = if exact != 0 {
            Mode::Exact
        } else {
            Mode::Bisect
        };
        let d = pruning_distance(
            module(a, "first module")?,
            module(b, "second module")?,
            &tol,
            mode,
        )?;
        put_result(&d, value, is_exact)
    })
}

/// Interleaving distance by exhaustive search over the field with
/// `field_order` elements (2 or 3). Returns `UPM_STATUS_SIZE_CAP` when a
/// module has more than `max_r` summands.
///
/// # Safety
/// `a` and `b` must be live handles; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn upm_interleaving_distance(
    a: *const UpmModule,
    b: *const UpmModule,
    field_order: u32,
    max_r: usize,
    value: *mut *mut c_char,
) -> UpmStatus {
    guard(|| {
        let field = match field_order {
            2 => Field::F2,
            3 => Field::F3,
            other => {
                return Err(Failure(
                    UpmStatus::Validation,
                    format!("unsupported field order {other}"),
                ))
            }
        };
        let d = interleaving_distance_bruteforce(
            module(a, "first module")?,
            module(b, "second module")?,
            field,
            max_r,
        )?;
        put_result(&d, value, ptr::null_mut())
    })
}
