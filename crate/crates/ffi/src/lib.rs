//! C ABI for `ptrig`.
//!
//! Every function returns a [`PtrigStatus`] and writes results through out
//! pointers. On failure a message is kept per thread and can be read with
//! [`ptrig_last_error_message`].

use ptrig::certify::{self, CertificateReport, GridSpec, Status};
use ptrig::hypergeom::{clausen_3f2, hyp2f1, EvalResult, Hyp2F1Params, Hyp3F2Params, Method};
use ptrig::ptrig::{eval, EvalMethod, FnId, PtrigInput};
use ptrig::special::{b_p, c_p, pi_p, BpRoute, PiRoute};
use ptrig::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtrigStatus {
    Ok = 0,
    Domain = 1,
    Convergence = 2,
    ToleranceNotMet = 3,
    UnknownBound = 4,
    UnknownClaim = 5,
    MixedTargets = 6,
    RouteDisagreement = 7,
    NullPointer = 8,
    InvalidUtf8 = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtrigFn {
    Arcsin = 0,
    Arccos = 1,
    Arctan = 2,
    Arcsinh = 3,
    Arctanh = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtrigMethod {
    Auto = 0,
    Series = 1,
    SeriesPfaff = 2,
    Quadrature = 3,
    ClosedForm = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtrigCertStatus {
    Holds = 0,
    Violated = 1,
    Vacuous = 2,
    Reported = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtrigResult {
    pub value: f64,
    pub abs_err: f64,
    /// The route actually used; never `Auto`.
    pub method: PtrigMethod,
    pub work: u64,
}

/// An owned certification report.
pub struct PtrigCertificate {
    report: CertificateReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PtrigStatus {
    match e {
        Error::Domain(_) => PtrigStatus::Domain,
        Error::Convergence { .. } => PtrigStatus::Convergence,
        Error::ToleranceNotMet { .. } => PtrigStatus::ToleranceNotMet,
        Error::UnknownBound(_) => PtrigStatus::UnknownBound,
        Error::UnknownClaim(_) => PtrigStatus::UnknownClaim,
        Error::MixedTargets(_) => PtrigStatus::MixedTargets,
        Error::RouteDisagreement { .. } => PtrigStatus::RouteDisagreement,
    }
}

fn fail(status: PtrigStatus, msg: impl Into<String>) -> PtrigStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, turning errors and panics into a status.
fn guard<F>(f: F) -> PtrigStatus
where
    F: FnOnce() -> Result<(), PtrigStatus> + UnwindSafe,
{
    match catch_unwind(f) {
        Ok(Ok(())) => PtrigStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(PtrigStatus::Panic, "internal panic"),
    }
}

fn lib<T>(r: ptrig::Result<T>) -> Result<T, PtrigStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), PtrigStatus> {
    if p.is_null() {
        Err(fail(PtrigStatus::NullPointer, format!("`{name}` is null")))
    } else {
        Ok(())
    }
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn str_arg<'a>(s: *const c_char, name: &str) -> Result<&'a str, PtrigStatus> {
    non_null(s, name)?;
    CStr::from_ptr(s).to_str().map_err(|_| fail(PtrigStatus::InvalidUtf8, format!("`{name}` is not UTF-8")))
}

fn method_of(m: Method) -> PtrigMethod {
    match m {
        Method::Series => PtrigMethod::Series,
        Method::SeriesPfaff => PtrigMethod::SeriesPfaff,
        Method::Quadrature => PtrigMethod::Quadrature,
        Method::ClosedForm => PtrigMethod::ClosedForm,
    }
}

fn result_of(r: EvalResult) -> PtrigResult {
    PtrigResult { value: r.value, abs_err: r.abs_err, method: method_of(r.method), work: r.work }
}

fn fn_id(f: PtrigFn) -> FnId {
    match f {
        PtrigFn::Arcsin => FnId::Arcsin,
        PtrigFn::Arccos => FnId::Arccos,
        PtrigFn::Arctan => FnId::Arctan,
        PtrigFn::Arcsinh => FnId::Arcsinh,
        PtrigFn::Arctanh => FnId::Arctanh,
    }
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ptrig_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Evaluates `func` at `(p, x)`.
///
/// # Safety
/// `out` must be null or point to writable memory for one `PtrigResult`.
#[no_mangle]
pub unsafe extern "C" fn ptrig_eval(
    func: PtrigFn,
    p: f64,
    x: f64,
    method: PtrigMethod,
    out: *mut PtrigResult,
) -> PtrigStatus {
    guard(|| {
        non_null(out, "out")?;
        let m = match method {
            PtrigMethod::Auto => EvalMethod::Auto,
            PtrigMethod::Series => EvalMethod::Series,
            PtrigMethod::Quadrature => EvalMethod::Quadrature,
            other => return Err(fail(PtrigStatus::Domain, format!("{other:?} is not a selectable method"))),
        };
        let r = lib(PtrigInput::new(fn_id(func), p, x).and_then(|i| eval(i, m)))?;
        *out = result_of(r);
        Ok(())
    })
}

/// Value and error estimate of the registered bound `id` at `(p, x)`.
///
/// # Safety
/// `id` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptrig_bound_value(id: *const c_char, p: f64, x: f64, out: *mut PtrigResult) -> PtrigStatus {
    guard(|| {
        non_null(out, "out")?;
        let id = str_arg(id, "id")?;
        let v = lib(ptrig::bounds::bound_est(id, p, x))?;
        *out = PtrigResult { value: v.value, abs_err: v.err, method: PtrigMethod::ClosedForm, work: 0 };
        Ok(())
    })
}

unsafe fn write_f64(out: *mut f64, v: ptrig::Result<f64>) -> Result<(), PtrigStatus> {
    non_null(out, "out")?;
    *out = lib(v)?;
    Ok(())
}

/// `π_p = 2π / (p sin(π/p))`, `p > 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptrig_pi_p(p: f64, out: *mut f64) -> PtrigStatus {
    guard(|| write_f64(out, pi_p(p, PiRoute::Sine)))
}

/// `b_p = arctan_p(1)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptrig_b_p(p: f64, out: *mut f64) -> PtrigStatus {
    guard(|| write_f64(out, b_p(p, BpRoute::Digamma)))
}

/// `c_p = arcsinh_p(1)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptrig_c_p(p: f64, out: *mut f64) -> PtrigStatus {
    guard(|| write_f64(out, c_p(p)))
}

/// Gauss `₂F₁(a, b; c; z)` for `z < 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptrig_hyp2f1(a: f64, b: f64, c: f64, z: f64, out: *mut PtrigResult) -> PtrigStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = result_of(lib(Hyp2F1Params::new(a, b, c).and_then(|h| hyp2f1(h, z)))?);
        Ok(())
    })
}

/// Clausen `₃F₂(a1, a2, a3; b1, b2; z)` for `z ∈ [0, 1)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptrig_hyp3f2(
    a1: f64,
    a2: f64,
    a3: f64,
    b1: f64,
    b2: f64,
    z: f64,
    out: *mut PtrigResult,
) -> PtrigStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = result_of(lib(Hyp3F2Params::new(a1, a2, a3, b1, b2).and_then(|h| clausen_3f2(h, z)))?);
        Ok(())
    })
}

/// Certifies `claim_id` on its default grids. On success `*out` owns a
/// certificate to be released with [`ptrig_certificate_free`].
///
/// # Safety
/// `claim_id` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptrig_certify(
    claim_id: *const c_char,
    seed: u64,
    samples: usize,
    dual_route: bool,
    out: *mut *mut PtrigCertificate,
) -> PtrigStatus {
    guard(|| {
        non_null(out, "out")?;
        let id = str_arg(claim_id, "claim_id")?;
        let grid = GridSpec { seed, samples, dual_route, ..GridSpec::default() };
        let report = lib(certify::certify(id, &grid))?;
        *out = Box::into_raw(Box::new(PtrigCertificate { report }));
        Ok(())
    })
}

/// # Safety
/// `cert` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ptrig_certificate_status(
    cert: *const PtrigCertificate,
    out: *mut PtrigCertStatus,
) -> PtrigStatus {
    guard(|| {
        non_null(cert, "cert")?;
        non_null(out, "out")?;
        *out = match (*cert).report.status {
            Status::Holds => PtrigCertStatus::Holds,
            Status::Violated => PtrigCertStatus::Violated,
            Status::Vacuous => PtrigCertStatus::Vacuous,
            Status::Reported => PtrigCertStatus::Reported,
        };
        Ok(())
    })
}

/// Number of evaluated points in the certificate, or 0 for null.
///
/// # Safety
/// `cert` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn ptrig_certificate_points_checked(cert: *const PtrigCertificate) -> usize {
    if cert.is_null() {
        0
    } else {
        (*cert).report.points_checked
    }
}

/// The certificate as JSON. Release with [`ptrig_string_free`].
///
/// # Safety
/// `cert` must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ptrig_certificate_to_json(
    cert: *const PtrigCertificate,
    out: *mut *mut c_char,
) -> PtrigStatus {
    guard(|| {
        non_null(cert, "cert")?;
        non_null(out, "out")?;
        let s = serde_json::to_string(&(*cert).report).map_err(|e| fail(PtrigStatus::Panic, e.to_string()))?;
        *out = CString::new(s).map_err(|e| fail(PtrigStatus::Panic, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `cert` must be null or come from [`ptrig_certify`] and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn ptrig_certificate_free(cert: *mut PtrigCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn ptrig_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
