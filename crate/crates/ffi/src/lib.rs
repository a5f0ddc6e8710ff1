//! C ABI over `lieproj`.
//!
//! Real forms and weight lists are opaque heap handles released with their
//! `_free` functions. Weights cross the boundary as comma separated rationals
//! (`"5,-1"`, `"1/2,1/2"`). Every fallible call returns an [`LpStatus`]; after a
//! failure [`lp_last_error_message`] describes it. Strings returned by this
//! library are released with [`lp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lieproj::cli::config::{bundled, RealFormConfig};
use lieproj::kstruct::{self, RealFormData};
use lieproj::{Error, WeightVector};
use num::ToPrimitive;

/// Result codes. `Ok` is zero.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ConfigError = 4,
    InvalidInput = 5,
    NotKDominant = 6,
    NotCentral = 7,
    IndexOutOfRange = 8,
    Overflow = 9,
    Internal = 10,
    Panic = 11,
}

/// A validated real form.
pub struct LpRealForm {
    inner: RealFormData,
}

/// An owned, sorted list of weights.
pub struct LpWeightList {
    items: Vec<WeightVector>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> LpStatus {
    match e {
        Error::Parse(_) => LpStatus::ParseError,
        Error::Config(_) | Error::InvalidRealForm(_) | Error::InvalidGramForm(_) | Error::UnknownCartanLabel(_) => {
            LpStatus::ConfigError
        }
        Error::NotARootSystem(_) | Error::InconsistentPositiveSystem(_) => LpStatus::ConfigError,
        Error::NotKDominantIntegral { .. } => LpStatus::NotKDominant,
        Error::NotCentral(_) => LpStatus::NotCentral,
        Error::Internal(_) => LpStatus::Internal,
        _ => LpStatus::InvalidInput,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<(), (LpStatus, String)>) -> LpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LpStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LpStatus::Panic
        }
    }
}

fn lib(e: Error) -> (LpStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (LpStatus, String) {
    (LpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (LpStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (LpStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_form<'a>(p: *const LpRealForm) -> Result<&'a RealFormData, (LpStatus, String)> {
    p.as_ref().map(|f| &f.inner).ok_or_else(|| null("real form"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("weights contain no NUL").into_raw()
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (LpStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Library version as a static NUL-terminated string. Do not free.
#[no_mangle]
pub extern "C" fn lp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Free with [`lp_string_free`].
#[no_mangle]
pub extern "C" fn lp_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(m) => into_c_string(m.replace('\0', " ")),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads a bundled real form: `sl2`, `sp4`, `u11` or `su21`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lp_realform_bundled(name: *const c_char, out: *mut *mut LpRealForm) -> LpStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let inner = bundled(name).map_err(lib)?;
        write_out(out, Box::into_raw(Box::new(LpRealForm { inner })))
    })
}

/// Builds a real form from a JSON configuration document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lp_realform_from_json(json: *const c_char, out: *mut *mut LpRealForm) -> LpStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let inner = RealFormConfig::from_json(text).and_then(|c| c.build()).map_err(lib)?;
        write_out(out, Box::into_raw(Box::new(LpRealForm { inner })))
    })
}

/// Releases a real form. Null is ignored.
///
/// # Safety
/// `rf` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lp_realform_free(rf: *mut LpRealForm) {
    if !rf.is_null() {
        drop(Box::from_raw(rf));
    }
}

/// Dimension of the weight space.
///
/// # Safety
/// `rf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lp_realform_rank(rf: *const LpRealForm, out: *mut usize) -> LpStatus {
    guard(|| {
        let rf = read_form(rf)?;
        write_out(out, rf.rank())
    })
}

unsafe fn weight_arg(rf: &RealFormData, s: *const c_char, what: &str) -> Result<WeightVector, (LpStatus, String)> {
    let v = WeightVector::parse(read_str(s, what)?).map_err(lib)?;
    if v.dim() != rf.rank() {
        return Err(lib(Error::DimensionMismatch { expected: rf.rank(), found: v.dim() }));
    }
    Ok(v)
}

unsafe fn lambda_common(
    rf: *const LpRealForm,
    mu: *const c_char,
    out: *mut *mut c_char,
    f: fn(&RealFormData, &WeightVector) -> lieproj::Result<WeightVector>,
) -> LpStatus {
    guard(|| {
        let rf = read_form(rf)?;
        let mu = weight_arg(rf, mu, "mu")?;
        let value = f(rf, &mu).map_err(lib)?;
        write_out(out, into_c_string(value.to_string()))
    })
}

/// `lambda_a(mu)` written as a string into `*out` (free with [`lp_string_free`]).
///
/// # Safety
/// `rf` must be a live handle, `mu` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lp_lambda_a(rf: *const LpRealForm, mu: *const c_char, out: *mut *mut c_char) -> LpStatus {
    lambda_common(rf, mu, out, kstruct::lambda_a)
}

/// `lambda_u(mu)` written as a string into `*out` (free with [`lp_string_free`]).
///
/// # Safety
/// `rf` must be a live handle, `mu` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lp_lambda_u(rf: *const LpRealForm, mu: *const c_char, out: *mut *mut c_char) -> LpStatus {
    lambda_common(rf, mu, out, kstruct::lambda_u)
}

/// Whether the K-type `mu` is unitarily small.
///
/// # Safety
/// `rf` must be a live handle, `mu` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lp_is_unitarily_small(rf: *const LpRealForm, mu: *const c_char, out: *mut bool) -> LpStatus {
    guard(|| {
        let rf = read_form(rf)?;
        let mu = weight_arg(rf, mu, "mu")?;
        write_out(out, kstruct::is_unitarily_small(rf, &mu).map_err(lib)?)
    })
}

/// All unitarily small K-types with central part `mu_z`.
///
/// # Safety
/// `rf` must be a live handle, `mu_z` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lp_enumerate_unitarily_small(
    rf: *const LpRealForm,
    mu_z: *const c_char,
    out: *mut *mut LpWeightList,
) -> LpStatus {
    guard(|| {
        let rf = read_form(rf)?;
        let mu_z = weight_arg(rf, mu_z, "mu_z")?;
        let items = kstruct::enumerate_unitarily_small(rf, &mu_z)
            .map_err(lib)?
            .into_iter()
            .map(kstruct::KType::into_inner)
            .collect();
        write_out(out, Box::into_raw(Box::new(LpWeightList { items })))
    })
}

/// Number of weights in the list; zero for null.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lp_weight_list_len(list: *const LpWeightList) -> usize {
    list.as_ref().map_or(0, |l| l.items.len())
}

unsafe fn list_item<'a>(list: *const LpWeightList, i: usize) -> Result<&'a WeightVector, (LpStatus, String)> {
    let l = list.as_ref().ok_or_else(|| null("list"))?;
    l.items
        .get(i)
        .ok_or_else(|| (LpStatus::IndexOutOfRange, format!("index {i} out of range for {} weights", l.items.len())))
}

/// Weight `i` as a string (free with [`lp_string_free`]).
///
/// # Safety
/// `list` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lp_weight_list_get(list: *const LpWeightList, i: usize, out: *mut *mut c_char) -> LpStatus {
    guard(|| {
        let w = list_item(list, i)?;
        write_out(out, into_c_string(w.to_string()))
    })
}

/// Coordinate `j` of weight `i` as a reduced fraction `num / den`.
///
/// # Safety
/// `list` must be a live handle and `num`, `den` writable.
#[no_mangle]
pub unsafe extern "C" fn lp_weight_list_coord(
    list: *const LpWeightList,
    i: usize,
    j: usize,
    num: *mut i64,
    den: *mut i64,
) -> LpStatus {
    guard(|| {
        let w = list_item(list, i)?;
        let q = w
            .coords()
            .get(j)
            .ok_or_else(|| (LpStatus::IndexOutOfRange, format!("coordinate {j} out of range")))?;
        let overflow = || (LpStatus::Overflow, format!("{q} does not fit in 64 bits"));
        let (n, d) = (q.numer().to_i64().ok_or_else(overflow)?, q.denom().to_i64().ok_or_else(overflow)?);
        write_out(num, n)?;
        write_out(den, d)
    })
}

/// Releases a weight list. Null is ignored.
///
/// # Safety
/// `list` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lp_weight_list_free(list: *mut LpWeightList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
