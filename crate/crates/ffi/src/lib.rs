//! C ABI over `stablerep`.
//!
//! Every function returns an [`SrStatus`]; results come back through out
//! pointers. Objects are opaque handles released by their `*_free`
//! function. After a non-`SR_STATUS_OK` return, `sr_last_error` describes the
//! failure on the calling thread.
//!
//! A `budget_limit` of 0 selects the default ambient-dimension budget.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stablerep::characters::{irreducible_character, lr_coefficient};
use stablerep::labeled::{enumerate_general, enumerate_pq, verify_rw_prop, verify_splitting_lemma, LabelAlphabet};
use stablerep::partitions::{schur_gl_dimension, specht_dimension};
use stablerep::stable::{stable_cohomology, StableCohomologyResult};
use stablerep::{Budget, Error, Partition};

/// Status code returned by every `sr_*` function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrStatus {
    Ok = 0,
    InvalidArgument = 1,
    BudgetExceeded = 2,
    VerificationFailed = 3,
    NullPointer = 4,
    Internal = 5,
}

/// Opaque integer partition.
pub struct SrPartition(Partition);

/// Opaque stable cohomology result.
pub struct SrStableResult(StableCohomologyResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> SrStatus {
    match e {
        Error::SizeBudgetExceeded { .. } => SrStatus::BudgetExceeded,
        Error::OracleDisagreement(_) => SrStatus::VerificationFailed,
        Error::NonPolynomialAction(_) | Error::NonDiagonalizableTorus => SrStatus::Internal,
        _ => SrStatus::InvalidArgument,
    }
}

fn budget(ambient: usize) -> Budget {
    if ambient == 0 {
        Budget::default()
    } else {
        Budget::with_ambient(ambient)
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), (SrStatus, String)>>(f: F) -> SrStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SrStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SrStatus::Internal
        }
    }
}

fn lib<T>(r: stablerep::Result<T>) -> Result<T, (SrStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (SrStatus, String) {
    (SrStatus::NullPointer, "null pointer argument".into())
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, (SrStatus, String)> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (SrStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the last failure on this thread, or NULL. Free with
/// `sr_string_free`.
#[no_mangle]
pub extern "C" fn sr_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map(|s| s.clone().into_raw()).unwrap_or(ptr::null_mut()))
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses "5,3,1" (or "0" for the empty partition).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_partition_parse(text: *const c_char, out: *mut *mut SrPartition) -> SrStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (SrStatus::InvalidArgument, e.to_string()))?;
        let p: Partition = lib(s.parse())?;
        write(out, Box::into_raw(Box::new(SrPartition(p))))
    })
}

/// # Safety
/// `p` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sr_partition_free(p: *mut SrPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Sum of the parts.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_partition_weight(p: *const SrPartition, out: *mut usize) -> SrStatus {
    guard(|| write(out, borrow(p)?.0.weight()))
}

/// Number of nonzero parts.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_partition_len(p: *const SrPartition, out: *mut usize) -> SrStatus {
    guard(|| write(out, borrow(p)?.0.len()))
}

/// Part `i` (0-based); 0 past the end.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_partition_part(p: *const SrPartition, i: usize, out: *mut usize) -> SrStatus {
    guard(|| write(out, borrow(p)?.0.part(i)))
}

/// Conjugate partition, as a new handle.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_partition_transpose(p: *const SrPartition, out: *mut *mut SrPartition) -> SrStatus {
    guard(|| {
        let t = borrow(p)?.0.transpose();
        write(out, Box::into_raw(Box::new(SrPartition(t))))
    })
}

/// Canonical text form. Free with `sr_string_free`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_partition_to_string(p: *const SrPartition, out: *mut *mut c_char) -> SrStatus {
    guard(|| write(out, to_c_string(borrow(p)?.0.to_string())))
}

/// `dim S^λ`.
///
/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_specht_dimension(lambda: *const SrPartition, out: *mut u64) -> SrStatus {
    guard(|| write(out, specht_dimension(&borrow(lambda)?.0)))
}

/// `dim S_λ(Q^d)`.
///
/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_schur_gl_dimension(lambda: *const SrPartition, d: usize, out: *mut u64) -> SrStatus {
    guard(|| write(out, schur_gl_dimension(&borrow(lambda)?.0, d)))
}

/// `c^λ_{μν}`.
///
/// # Safety
/// All handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_lr_coefficient(
    lambda: *const SrPartition,
    mu: *const SrPartition,
    nu: *const SrPartition,
    out: *mut u64,
) -> SrStatus {
    guard(|| write(out, lr_coefficient(&borrow(lambda)?.0, &borrow(mu)?.0, &borrow(nu)?.0)))
}

/// `χ^λ` on the class of cycle type `rho`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_character_value(
    lambda: *const SrPartition,
    rho: *const SrPartition,
    out: *mut i64,
) -> SrStatus {
    guard(|| {
        let (lambda, rho) = (&borrow(lambda)?.0, &borrow(rho)?.0);
        if lambda.weight() != rho.weight() {
            return Err((
                SrStatus::InvalidArgument,
                format!("degree mismatch: |λ| = {}, |ρ| = {}", lambda.weight(), rho.weight()),
            ));
        }
        let v = irreducible_character(lambda).get(rho).to_integer();
        let v = i64::try_from(v).map_err(|e| (SrStatus::Internal, e.to_string()))?;
        write(out, v)
    })
}

/// `|𝒫_{p,q}|`, or `|𝒫_p(Ω)|` when `general` is true.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_labeled_partition_count(
    p: usize,
    q: usize,
    general: bool,
    budget_limit: usize,
    out: *mut u64,
) -> SrStatus {
    guard(|| {
        let b = budget(budget_limit);
        let n = if general {
            lib(enumerate_general(p, &LabelAlphabet::standard(q), &b))?.len()
        } else {
            lib(enumerate_pq(p, q, &b))?.len()
        };
        write(out, n as u64)
    })
}

/// `H^degree(Aut(F_n); H^⊗p ⊗ (H^*)^⊗q)` in the stable range.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_stable_cohomology(
    p: usize,
    q: usize,
    degree: i64,
    budget_limit: usize,
    out: *mut *mut SrStableResult,
) -> SrStatus {
    guard(|| {
        let r = lib(stable_cohomology(p, q, degree, &budget(budget_limit)))?;
        write(out, Box::into_raw(Box::new(SrStableResult(r))))
    })
}

/// # Safety
/// `r` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sr_stable_result_free(r: *mut SrStableResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_stable_result_dimension(r: *const SrStableResult, out: *mut u64) -> SrStatus {
    guard(|| write(out, borrow(r)?.0.dimension))
}

/// Smallest `n` for which the result is in the stable range.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_stable_result_valid_n_bound(r: *const SrStableResult, out: *mut usize) -> SrStatus {
    guard(|| write(out, borrow(r)?.0.valid_n_bound()))
}

/// JSON form of the result. Free with `sr_string_free`.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_stable_result_to_json(r: *const SrStableResult, out: *mut *mut c_char) -> SrStatus {
    guard(|| {
        let json = serde_json::to_string(&borrow(r)?.0).map_err(|e| (SrStatus::Internal, e.to_string()))?;
        write(out, to_c_string(json))
    })
}

/// Checks that φ is an isomorphism for `dim V = d`. On a failed check the
/// status is `SR_STATUS_OK` and `*pass` is false.
///
/// # Safety
/// `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_verify_rw_prop(p: usize, q: usize, d: usize, budget_limit: usize, pass: *mut bool) -> SrStatus {
    guard(|| write(pass, lib(verify_rw_prop(p, q, d, &budget(budget_limit)))?.pass))
}

/// Classwise check of the splitting of the Hom space. Same conventions as
/// `sr_verify_rw_prop`.
///
/// # Safety
/// `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_verify_splitting(
    p: usize,
    q: usize,
    d: usize,
    budget_limit: usize,
    pass: *mut bool,
) -> SrStatus {
    guard(|| write(pass, lib(verify_splitting_lemma(p, q, d, &budget(budget_limit)))?.pass))
}
