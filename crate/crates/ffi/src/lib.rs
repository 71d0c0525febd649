//! C ABI over `isocx`.
//!
//! Handles are opaque and owned by the caller once returned; free them with the
//! matching `*_free`. Every entry point returns an [`IsocxStatus`]; on failure a
//! message is kept per thread and read with [`isocx_last_error_message`].
//! Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use isocx::algebra::FieldSpec;
use isocx::cli::{self, Format, Report, Suite, SuiteConfig};
use isocx::complex::{build_complex, cohomology, Specialization};
use isocx::fm::{ideal_membership_report, DEFAULT_MEMBERSHIP_BUDGET};
use isocx::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsocxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidConfig = 2,
    NotPrime = 3,
    SizeCap = 4,
    Budget = 5,
    OutOfRange = 6,
    Internal = 7,
    Panic = 8,
}

/// Suite bits for [`isocx_config_set_suites`].
pub const ISOCX_SUITE_MAIN: u32 = 1;
pub const ISOCX_SUITE_GAMMA: u32 = 2;
pub const ISOCX_SUITE_BAR: u32 = 4;
pub const ISOCX_SUITE_GROUPS: u32 = 8;
pub const ISOCX_SUITE_APPENDIX: u32 = 16;
pub const ISOCX_SUITE_ALL: u32 = 31;

/// Opaque suite configuration.
pub struct IsocxConfig {
    inner: SuiteConfig,
}

/// Opaque verification report.
pub struct IsocxReport {
    inner: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> IsocxStatus {
    match e {
        Error::NotPrime(_) => IsocxStatus::NotPrime,
        Error::SizeCap { .. } => IsocxStatus::SizeCap,
        Error::Budget { .. } => IsocxStatus::Budget,
        Error::Config(_) | Error::UnsupportedDegree(_) | Error::ReducibleModulus(..) => IsocxStatus::InvalidConfig,
        Error::IndexOutOfRange { .. } => IsocxStatus::OutOfRange,
        _ => IsocxStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (IsocxStatus, String)>) -> IsocxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            IsocxStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IsocxStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (IsocxStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (IsocxStatus, String) {
    (IsocxStatus::NullPointer, "null pointer argument".into())
}

/// Message for the last failed call on this thread, or NULL. Valid until the next call.
#[no_mangle]
pub extern "C" fn isocx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// A configuration with the library defaults.
#[no_mangle]
pub extern "C" fn isocx_config_new() -> *mut IsocxConfig {
    Box::into_raw(Box::new(IsocxConfig { inner: SuiteConfig::default() }))
}

/// # Safety
/// `cfg` must come from [`isocx_config_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_free(cfg: *mut IsocxConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

unsafe fn with_config(cfg: *mut IsocxConfig, f: impl FnOnce(&mut SuiteConfig)) -> IsocxStatus {
    guard(|| {
        let c = cfg.as_mut().ok_or_else(null)?;
        f(&mut c.inner);
        Ok(())
    })
}

/// # Safety
/// `cfg` must be a live handle and `primes` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_primes(cfg: *mut IsocxConfig, primes: *const u32, len: usize) -> IsocxStatus {
    if primes.is_null() && len > 0 {
        set_error("null pointer argument");
        return IsocxStatus::NullPointer;
    }
    let v = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(primes, len).to_vec() };
    with_config(cfg, |c| c.primes = v)
}

/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_suites(cfg: *mut IsocxConfig, mask: u32) -> IsocxStatus {
    let bits = [
        (ISOCX_SUITE_MAIN, Suite::Main),
        (ISOCX_SUITE_GAMMA, Suite::Gamma),
        (ISOCX_SUITE_BAR, Suite::Bar),
        (ISOCX_SUITE_GROUPS, Suite::Groups),
        (ISOCX_SUITE_APPENDIX, Suite::Appendix),
    ];
    with_config(cfg, |c| c.suites = bits.iter().filter(|b| mask & b.0 != 0).map(|b| b.1).collect())
}

/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_rmax(cfg: *mut IsocxConfig, rmax: u32) -> IsocxStatus {
    with_config(cfg, |c| c.r_max = rmax)
}

/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_trunc(cfg: *mut IsocxConfig, trunc: usize) -> IsocxStatus {
    with_config(cfg, |c| c.trunc = trunc)
}

/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_ext(cfg: *mut IsocxConfig, ext: u32) -> IsocxStatus {
    with_config(cfg, |c| c.ext = ext)
}

/// Torsion level M; 0 means M = r for each case.
///
/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_torsion(cfg: *mut IsocxConfig, m: u32) -> IsocxStatus {
    with_config(cfg, |c| c.torsion = (m != 0).then_some(m))
}

/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_mmax(cfg: *mut IsocxConfig, mmax: u64) -> IsocxStatus {
    with_config(cfg, |c| c.m_max = mmax)
}

/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_jobs(cfg: *mut IsocxConfig, jobs: usize) -> IsocxStatus {
    with_config(cfg, |c| c.jobs = jobs)
}

/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_seed(cfg: *mut IsocxConfig, seed: u64) -> IsocxStatus {
    with_config(cfg, |c| c.seed = seed)
}

/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_set_timings(cfg: *mut IsocxConfig, on: bool) -> IsocxStatus {
    with_config(cfg, |c| c.timings = on)
}

/// Checks the configuration without running anything.
///
/// # Safety
/// `cfg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn isocx_config_validate(cfg: *const IsocxConfig) -> IsocxStatus {
    guard(|| cfg.as_ref().ok_or_else(null)?.inner.validate().map_err(lib_err))
}

/// Runs the configured suites. On success `*out` receives a report handle.
///
/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn isocx_run(cfg: *const IsocxConfig, out: *mut *mut IsocxReport) -> IsocxStatus {
    guard(|| {
        let c = cfg.as_ref().ok_or_else(null)?;
        let out = out.as_mut().ok_or_else(null)?;
        let report = cli::run(&c.inner).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(IsocxReport { inner: report }));
        Ok(())
    })
}

/// # Safety
/// `report` must come from [`isocx_run`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn isocx_report_free(report: *mut IsocxReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of case records, or 0 for NULL.
///
/// # Safety
/// `report` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn isocx_report_len(report: *const IsocxReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.records.len())
}

/// # Safety
/// `report` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn isocx_report_all_pass(report: *const IsocxReport) -> bool {
    report.as_ref().is_some_and(|r| r.inner.all_pass())
}

/// # Safety
/// `report` must be a live handle and `pass` writable.
#[no_mangle]
pub unsafe extern "C" fn isocx_report_case_pass(report: *const IsocxReport, index: usize, pass: *mut bool) -> IsocxStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(null)?;
        let pass = pass.as_mut().ok_or_else(null)?;
        let rec = r.inner.records.get(index).ok_or_else(|| {
            lib_err(Error::IndexOutOfRange { index, max: r.inner.records.len().saturating_sub(1) })
        })?;
        *pass = rec.pass;
        Ok(())
    })
}

/// Serializes the report. `*out` receives a string to release with [`isocx_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn isocx_report_render(report: *const IsocxReport, csv: bool, out: *mut *mut c_char) -> IsocxStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(null)?;
        let out = out.as_mut().ok_or_else(null)?;
        let text = r.inner.render(if csv { Format::Csv } else { Format::Json }).map_err(lib_err)?;
        *out = CString::new(text).map_err(|e| (IsocxStatus::Internal, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn isocx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Ranks of H^j(K_{p^r} ⊗ F_p) at the closed point for j = 0..=r, written to
/// `ranks[0..=r]`; `len` must be at least r + 1.
///
/// # Safety
/// `ranks` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn isocx_closed_point_ranks(p: u32, r: u32, ranks: *mut usize, len: usize) -> IsocxStatus {
    guard(|| {
        if ranks.is_null() {
            return Err(null());
        }
        if len < r as usize + 1 {
            return Err(lib_err(Error::IndexOutOfRange { index: r as usize, max: len.saturating_sub(1) }));
        }
        if r > cli::MAX_RMAX {
            return Err(lib_err(Error::Config(format!("r {r} exceeds {}", cli::MAX_RMAX))));
        }
        let k = FieldSpec::prime(p).map_err(lib_err)?;
        let cx = build_complex(p, r, Specialization::ClosedPoint, k).map_err(lib_err)?;
        let h = cohomology(&cx).map_err(lib_err)?;
        let out = std::slice::from_raw_parts_mut(ranks, len);
        for (j, slot) in out.iter_mut().enumerate().take(r as usize + 1) {
            *slot = h.rank(j as i32);
        }
        Ok(())
    })
}

/// Whether F_{mn}(x,z) lies in (F_m(x,y), F_n(y,z)) over ℤ.
///
/// # Safety
/// `member` must be writable.
#[no_mangle]
pub unsafe extern "C" fn isocx_ideal_membership(m: u64, n: u64, member: *mut bool) -> IsocxStatus {
    guard(|| {
        let out = member.as_mut().ok_or_else(null)?;
        *out = ideal_membership_report(m, n, DEFAULT_MEMBERSHIP_BUDGET).map_err(lib_err)?.member;
        Ok(())
    })
}
