//! C ABI over `lehmerk`.
//!
//! Fields, verification reports and scan results are opaque handles created
//! by `lk_*_new`-style calls and released with the matching `lk_*_free`.
//! Every fallible call returns an [`LkStatus`] and writes its result through
//! an out-pointer only on `LK_STATUS_OK`. Panics never cross the boundary;
//! they surface as `LK_STATUS_PANIC`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lehmerk::{
    classify, phi_oracle, ratio_scan, run_suite, splitting_type, Error, QuadraticField,
    RationalValue, Suite, SuiteOptions, TotientEngine, VerificationReport,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotSquarefree = 3,
    UnsupportedField = 4,
    NotPrime = 5,
    DegreeOne = 6,
    NotCoprime = 7,
    BudgetExceeded = 8,
    Overflow = 9,
    UnknownSuite = 10,
    Internal = 11,
    Panic = 12,
}

impl From<&Error> for LkStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotSquarefree(_) => LkStatus::NotSquarefree,
            Error::UnsupportedField(_) => LkStatus::UnsupportedField,
            Error::NotPrime(_) => LkStatus::NotPrime,
            Error::DegreeOne => LkStatus::DegreeOne,
            Error::NotCoprime(..) => LkStatus::NotCoprime,
            Error::BudgetExceeded { .. } | Error::ModulusTooLarge(..) => LkStatus::BudgetExceeded,
            Error::Overflow(_) => LkStatus::Overflow,
            Error::UnknownSuite(_) => LkStatus::UnknownSuite,
            Error::InternalInconsistency(_) => LkStatus::Internal,
            Error::ZeroRadicand
            | Error::FieldMismatch(..)
            | Error::ModulusMismatch(..)
            | Error::ZeroModulus
            | Error::InvalidRational(_)
            | Error::InvalidArgument(_) => LkStatus::InvalidArgument,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LkSplitting {
    /// `d` is not a rational prime, or the field is `Q`.
    None = 0,
    Inert = 1,
    Split = 2,
    Ramified = 3,
}

impl From<lehmerk::SplittingType> for LkSplitting {
    fn from(s: lehmerk::SplittingType) -> Self {
        match s {
            lehmerk::SplittingType::Inert => LkSplitting::Inert,
            lehmerk::SplittingType::Split => LkSplitting::Split,
            lehmerk::SplittingType::Ramified => LkSplitting::Ramified,
        }
    }
}

/// One classification row; mirrors the CSV columns.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LkRecord {
    pub d: u64,
    pub phi: u64,
    pub phi_k: u64,
    pub splitting: LkSplitting,
    pub squarefree: bool,
    pub irreducible: bool,
    pub divides: bool,
    pub realizable: bool,
    pub normal: bool,
    pub lehmer: bool,
    pub strongly_lehmer: bool,
}

/// Opaque field handle. Safe to share across threads.
pub struct LkField {
    engine: TotientEngine,
}

/// Opaque verification report.
pub struct LkReport {
    report: VerificationReport,
    text: CString,
}

/// Opaque ratio-scan result.
pub struct LkScan {
    matches: Vec<u64>,
    hypothesis_holds: bool,
}

fn guard(f: impl FnOnce() -> Result<(), LkStatus>) -> LkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LkStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => LkStatus::Panic,
    }
}

fn lift<T>(r: lehmerk::Result<T>) -> Result<T, LkStatus> {
    r.map_err(|e| LkStatus::from(&e))
}

unsafe fn field_ref<'a>(field: *const LkField) -> Result<&'a LkField, LkStatus> {
    field.as_ref().ok_or(LkStatus::NullPointer)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), LkStatus> {
    if out.is_null() {
        return Err(LkStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

/// Static description of a status code. Never null, never freed.
#[no_mangle]
pub extern "C" fn lk_status_message(status: LkStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        LkStatus::Ok => c"ok",
        LkStatus::NullPointer => c"null pointer argument",
        LkStatus::InvalidArgument => c"invalid argument",
        LkStatus::NotSquarefree => c"not squarefree",
        LkStatus::UnsupportedField => c"field not on the class-number-one whitelist",
        LkStatus::NotPrime => c"not prime",
        LkStatus::DegreeOne => c"operation undefined over Q",
        LkStatus::NotCoprime => c"moduli not coprime",
        LkStatus::BudgetExceeded => c"input exceeds the computation budget",
        LkStatus::Overflow => c"integer overflow",
        LkStatus::UnknownSuite => c"unknown verification suite",
        LkStatus::Internal => c"internal inconsistency",
        LkStatus::Panic => c"panic inside lehmerk",
    };
    msg.as_ptr()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Create a field handle for `Q(sqrt m)`; `m = 1` gives `Q`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn lk_field_new(m: i64, out: *mut *mut LkField) -> LkStatus {
    guard(|| {
        let field = lift(QuadraticField::new(m))?;
        let handle = Box::into_raw(Box::new(LkField {
            engine: TotientEngine::new(field),
        }));
        write_out(out, handle).inspect_err(|_| drop(Box::from_raw(handle)))
    })
}

/// # Safety
/// `field` must come from [`lk_field_new`] and not be freed already. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn lk_field_free(field: *mut LkField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Radicand `m`, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lk_field_m(field: *const LkField) -> i64 {
    field.as_ref().map_or(0, |f| f.engine.field().m())
}

/// Degree over `Q` (1 or 2), or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lk_field_degree(field: *const LkField) -> u32 {
    field.as_ref().map_or(0, |f| f.engine.field().degree())
}

/// Discriminant, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lk_field_disc(field: *const LkField) -> i64 {
    field.as_ref().map_or(0, |f| f.engine.field().disc())
}

/// `phi_K(d)` by the closed form.
///
/// # Safety
/// `field` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lk_phi(field: *const LkField, d: u64, out: *mut u64) -> LkStatus {
    guard(|| {
        let f = field_ref(field)?;
        write_out(out, lift(f.engine.phi_fast(d))?)
    })
}

/// `phi_K(d)` by exhaustive enumeration, refusing `d > cap`.
///
/// # Safety
/// `field` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lk_phi_oracle(
    field: *const LkField,
    d: u64,
    cap: u64,
    out: *mut u64,
) -> LkStatus {
    guard(|| {
        let f = field_ref(field)?;
        write_out(out, lift(phi_oracle(f.engine.field(), d, cap))?)
    })
}

/// # Safety
/// `field` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lk_splitting_type(
    field: *const LkField,
    p: u64,
    out: *mut LkSplitting,
) -> LkStatus {
    guard(|| {
        let f = field_ref(field)?;
        write_out(out, lift(splitting_type(f.engine.field(), p))?.into())
    })
}

/// Classification row for `d >= 2`.
///
/// # Safety
/// `field` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lk_classify(
    field: *const LkField,
    d: u64,
    out: *mut LkRecord,
) -> LkStatus {
    guard(|| {
        let f = field_ref(field)?;
        let r = lift(classify(f.engine.field(), d))?;
        write_out(
            out,
            LkRecord {
                d: r.d,
                phi: r.phi,
                phi_k: r.phi_k,
                splitting: r.splitting.map_or(LkSplitting::None, Into::into),
                squarefree: r.squarefree,
                irreducible: r.irreducible,
                divides: r.divides,
                realizable: r.realizable,
                normal: r.normal,
                lehmer: r.lehmer,
                strongly_lehmer: r.strongly_lehmer,
            },
        )
    })
}

/// Run the named suite up to `bound` with the default oracle settings.
///
/// # Safety
/// `field` must be a live handle, `suite` a NUL-terminated string and `out`
/// valid for a pointer write. Free the report with [`lk_report_free`].
#[no_mangle]
pub unsafe extern "C" fn lk_verify(
    field: *const LkField,
    suite: *const c_char,
    bound: u64,
    threads: u32,
    out: *mut *mut LkReport,
) -> LkStatus {
    guard(|| {
        let f = field_ref(field)?;
        if suite.is_null() {
            return Err(LkStatus::NullPointer);
        }
        let name = CStr::from_ptr(suite)
            .to_str()
            .map_err(|_| LkStatus::InvalidArgument)?;
        let suite: Suite = lift(name.parse())?;
        let opts = SuiteOptions {
            threads: threads.max(1) as usize,
            ..SuiteOptions::default()
        };
        let report = lift(run_suite(suite, f.engine.field(), bound, &opts))?;
        let text = CString::new(report.to_string()).map_err(|_| LkStatus::Internal)?;
        let handle = Box::into_raw(Box::new(LkReport { report, text }));
        write_out(out, handle).inspect_err(|_| drop(Box::from_raw(handle)))
    })
}

/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn lk_report_passed(report: *const LkReport) -> bool {
    report.as_ref().is_some_and(|r| r.report.passed())
}

/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn lk_report_checked(report: *const LkReport) -> u64 {
    report.as_ref().map_or(0, |r| r.report.checked)
}

/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn lk_report_failure_count(report: *const LkReport) -> u64 {
    report
        .as_ref()
        .map_or(0, |r| r.report.failures.len() as u64)
}

/// Human-readable summary, owned by the report and valid until it is freed.
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn lk_report_text(report: *const LkReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.text.as_ptr())
}

/// # Safety
/// `report` must come from [`lk_verify`] and not be freed already. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn lk_report_free(report: *mut LkReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Squarefree multiples `d <= bound` of `w` with `(d - 1) / phi(d) = l_num / l_den`.
///
/// # Safety
/// `out` must be valid for a pointer write. Free the result with [`lk_scan_free`].
#[no_mangle]
pub unsafe extern "C" fn lk_ratio_scan(
    w: u64,
    l_num: i64,
    l_den: u64,
    bound: u64,
    out: *mut *mut LkScan,
) -> LkStatus {
    guard(|| {
        let l = lift(RationalValue::new(l_num, l_den))?;
        let scan = lift(ratio_scan(w, &l, bound, 1))?;
        let handle = Box::into_raw(Box::new(LkScan {
            matches: scan.matches,
            hypothesis_holds: scan.hypothesis_holds,
        }));
        write_out(out, handle).inspect_err(|_| drop(Box::from_raw(handle)))
    })
}

/// # Safety
/// `scan` must be null or a live scan handle.
#[no_mangle]
pub unsafe extern "C" fn lk_scan_len(scan: *const LkScan) -> usize {
    scan.as_ref().map_or(0, |s| s.matches.len())
}

/// Match at `index`, or 0 when out of range.
///
/// # Safety
/// `scan` must be null or a live scan handle.
#[no_mangle]
pub unsafe extern "C" fn lk_scan_get(scan: *const LkScan, index: usize) -> u64 {
    scan.as_ref()
        .and_then(|s| s.matches.get(index).copied())
        .unwrap_or(0)
}

/// # Safety
/// `scan` must be null or a live scan handle.
#[no_mangle]
pub unsafe extern "C" fn lk_scan_hypothesis_holds(scan: *const LkScan) -> bool {
    scan.as_ref().is_some_and(|s| s.hypothesis_holds)
}

/// # Safety
/// `scan` must come from [`lk_ratio_scan`] and not be freed already. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn lk_scan_free(scan: *mut LkScan) {
    if !scan.is_null() {
        drop(Box::from_raw(scan));
    }
}
