//! C ABI for froblab.
//!
//! Every fallible call returns a [`FroblabStatus`] and writes its result
//! through an out-pointer. Tables, bound reports and pair lists are opaque
//! handles owned by the caller and released with the matching `_free`
//! function. After a non-OK status, [`froblab_last_error_message`] describes
//! the failure on the calling thread.
//!
//! The header `include/froblab.h` is regenerated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use froblab::arith::{gcd, mod_inv};
use froblab::error::{ArithError, FrobeniusError, LabError, NfuncError};
use froblab::frobenius::{self, ResidueTable};
use froblab::lab;
use froblab::nfunc::{self, BoundReport};
use froblab::MAX_GENERATOR;

/// Result codes shared by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FroblabStatus {
    Ok = 0,
    InvalidArgument = 1,
    NotCoprime = 2,
    NotInvertible = 3,
    NotCoverable = 4,
    NullPointer = 5,
    OutOfRange = 6,
    DuplicateMultiple = 7,
    Panic = 99,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

/// Message for the most recent failure on this thread; empty if none. The
/// pointer stays valid until the next froblab call on the same thread.
#[no_mangle]
pub extern "C" fn froblab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static, NUL-terminated crate version.
#[no_mangle]
pub extern "C" fn froblab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

struct Failure(FroblabStatus, String);

impl From<ArithError> for Failure {
    fn from(e: ArithError) -> Self {
        let status = match e {
            ArithError::NotInvertible { .. } => FroblabStatus::NotInvertible,
            ArithError::Overflow => FroblabStatus::OutOfRange,
            _ => FroblabStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<FrobeniusError> for Failure {
    fn from(e: FrobeniusError) -> Self {
        let status = match e {
            FrobeniusError::NotCoprime { .. } => FroblabStatus::NotCoprime,
            _ => FroblabStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<NfuncError> for Failure {
    fn from(e: NfuncError) -> Self {
        let status = match &e {
            NfuncError::NotCoverable { .. } => FroblabStatus::NotCoverable,
            NfuncError::NotInvertible(_) => FroblabStatus::NotInvertible,
            NfuncError::DuplicateMultiple { .. } => FroblabStatus::DuplicateMultiple,
            NfuncError::InvalidArgument(_) => FroblabStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<LabError> for Failure {
    fn from(e: LabError) -> Self {
        match e {
            LabError::Frobenius(f) => f.into(),
            LabError::Nfunc(n) => n.into(),
            LabError::InvalidArgument(msg) => Failure(FroblabStatus::InvalidArgument, msg),
        }
    }
}

type FfiResult<T> = Result<T, Failure>;

/// Runs `body`, converting errors and panics into a status and writing the
/// value through `out` on success.
fn guard<T>(out: *mut T, body: impl FnOnce() -> FfiResult<T>) -> FroblabStatus {
    if out.is_null() {
        set_last_error("output pointer is null");
        return FroblabStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(value)) => {
            // SAFETY: checked non-null above; the caller guarantees it is writable.
            unsafe { out.write(value) };
            FroblabStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            FroblabStatus::Panic
        }
    }
}

fn check_range(values: &[u64]) -> FfiResult<()> {
    match values.iter().find(|&&v| v > MAX_GENERATOR) {
        Some(v) => Err(Failure(
            FroblabStatus::OutOfRange,
            format!("{v} exceeds the supported magnitude {MAX_GENERATOR}"),
        )),
        None => Ok(()),
    }
}

fn narrow(v: u128, what: &str) -> FfiResult<u64> {
    u64::try_from(v).map_err(|_| {
        Failure(
            FroblabStatus::OutOfRange,
            format!("{what} does not fit in 64 bits"),
        )
    })
}

/// # Safety
/// `ptr` must point to `len` readable values, or be null with `len == 0`.
unsafe fn slice_arg<'a>(ptr: *const u64, len: usize) -> FfiResult<&'a [u64]> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(Failure(
            FroblabStatus::NullPointer,
            "generator array is null".into(),
        ));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

#[no_mangle]
pub extern "C" fn froblab_gcd(x: u64, y: u64) -> u64 {
    gcd(x, y)
}

/// Inverse of `x` modulo `m` in `[1, m-1]`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_mod_inv(x: i64, m: u64, out: *mut u64) -> FroblabStatus {
    guard(out, || Ok(mod_inv(x, m)?))
}

/// Frobenius number of `(a, b, c)`; `-1` when a generator is 1.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_frobenius_number(
    a: u64,
    b: u64,
    c: u64,
    out: *mut i64,
) -> FroblabStatus {
    guard(out, || {
        check_range(&[a, b, c])?;
        Ok(frobenius::frobenius(a, b, c)?)
    })
}

/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_frobenius_two(a: u64, b: u64, out: *mut i64) -> FroblabStatus {
    guard(out, || {
        check_range(&[a, b])?;
        Ok(frobenius::frobenius_two(a, b)?)
    })
}

/// # Safety
/// `gens` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn froblab_is_representable(
    n: u64,
    gens: *const u64,
    len: usize,
    out: *mut bool,
) -> FroblabStatus {
    guard(out, || {
        let gens = slice_arg(gens, len)?;
        check_range(gens)?;
        Ok(frobenius::is_representable(n, gens)?)
    })
}

/// Covering function `N_a(b, c)`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_n_exact(a: u64, b: u64, c: u64, out: *mut u64) -> FroblabStatus {
    guard(out, || {
        check_range(&[a, b, c])?;
        Ok(nfunc::n_exact(a, b, c)?)
    })
}

/// `t = c·b⁻¹ mod a`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_reduce_to_unit(
    a: u64,
    b: u64,
    c: u64,
    out: *mut u64,
) -> FroblabStatus {
    guard(out, || {
        check_range(&[a, b, c])?;
        Ok(nfunc::reduce_to_unit(a, b, c)?)
    })
}

/// `N_a(1, t)`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_n_unit(a: u64, t: u64, out: *mut u64) -> FroblabStatus {
    guard(out, || {
        check_range(&[a])?;
        if a == 0 {
            return Err(Failure(
                FroblabStatus::InvalidArgument,
                "modulus must be positive".into(),
            ));
        }
        Ok(nfunc::n_unit(a, t))
    })
}

/// Largest cyclic gap between the first `q` multiples of `t` modulo `a`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_max_gap(a: u64, t: u64, q: u64, out: *mut u64) -> FroblabStatus {
    guard(out, || {
        check_range(&[a])?;
        Ok(nfunc::gap_profile(a, t, q)?.max_gap)
    })
}

// Residue tables.

/// Opaque residue table.
pub struct FroblabResidueTable {
    inner: ResidueTable,
}

/// # Safety
/// `gens` must point to `len` values; `out` must be writable. The handle
/// written to `out` must be released with [`froblab_residue_table_free`].
#[no_mangle]
pub unsafe extern "C" fn froblab_residue_table_new(
    modulus: u64,
    gens: *const u64,
    len: usize,
    out: *mut *mut FroblabResidueTable,
) -> FroblabStatus {
    guard(out, || {
        check_range(&[modulus])?;
        let gens = slice_arg(gens, len)?;
        check_range(gens)?;
        let inner = frobenius::apery_table(modulus, gens)?;
        Ok(Box::into_raw(Box::new(FroblabResidueTable { inner })))
    })
}

/// # Safety
/// `table` must come from [`froblab_residue_table_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn froblab_residue_table_free(table: *mut FroblabResidueTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// `table` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn froblab_residue_table_modulus(table: *const FroblabResidueTable) -> u64 {
    table.as_ref().map_or(0, |t| t.inner.modulus())
}

/// Least representable value congruent to `residue` modulo the table's modulus.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn froblab_residue_table_entry(
    table: *const FroblabResidueTable,
    residue: u64,
    out: *mut u64,
) -> FroblabStatus {
    guard(out, || {
        let t = table
            .as_ref()
            .ok_or_else(|| Failure(FroblabStatus::NullPointer, "table handle is null".into()))?;
        Ok(t.inner.entry(residue))
    })
}

/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn froblab_residue_table_frobenius(
    table: *const FroblabResidueTable,
    out: *mut i64,
) -> FroblabStatus {
    guard(out, || {
        let t = table
            .as_ref()
            .ok_or_else(|| Failure(FroblabStatus::NullPointer, "table handle is null".into()))?;
        Ok(t.inner.frobenius())
    })
}

// Bound reports.

/// Opaque continued-fraction bound report.
pub struct FroblabBoundReport {
    inner: BoundReport,
}

/// One convergent row; every rational is `num / den` in lowest terms.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FroblabConvergentRow {
    pub p: u64,
    pub q: u64,
    pub delta_num: u64,
    pub delta_den: u64,
    pub lower_proxy_num: u64,
    pub lower_proxy_den: u64,
    pub upper_proxy_num: u64,
    pub upper_proxy_den: u64,
    pub gap_bound_num: u64,
    pub gap_bound_den: u64,
}

/// # Safety
/// `out` must be writable. Release the handle with [`froblab_bound_report_free`].
#[no_mangle]
pub unsafe extern "C" fn froblab_bound_report_new(
    a: u64,
    b: u64,
    c: u64,
    out: *mut *mut FroblabBoundReport,
) -> FroblabStatus {
    guard(out, || {
        check_range(&[a, b, c])?;
        let inner = nfunc::cf_n_bounds(a, b, c)?;
        Ok(Box::into_raw(Box::new(FroblabBoundReport { inner })))
    })
}

/// # Safety
/// `report` must come from [`froblab_bound_report_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn froblab_bound_report_free(report: *mut FroblabBoundReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn froblab_bound_report_n(report: *const FroblabBoundReport) -> u64 {
    report.as_ref().map_or(0, |r| r.inner.n_exact)
}

/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn froblab_bound_report_t(report: *const FroblabBoundReport) -> u64 {
    report.as_ref().map_or(0, |r| r.inner.t)
}

/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn froblab_bound_report_row_count(
    report: *const FroblabBoundReport,
) -> usize {
    report.as_ref().map_or(0, |r| r.inner.per_convergent.len())
}

/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn froblab_bound_report_row(
    report: *const FroblabBoundReport,
    index: usize,
    out: *mut FroblabConvergentRow,
) -> FroblabStatus {
    guard(out, || {
        let r = report
            .as_ref()
            .ok_or_else(|| Failure(FroblabStatus::NullPointer, "report handle is null".into()))?;
        let row = r.inner.per_convergent.get(index).ok_or_else(|| {
            Failure(
                FroblabStatus::OutOfRange,
                format!("row {index} out of range"),
            )
        })?;
        Ok(FroblabConvergentRow {
            p: row.p,
            q: row.q,
            delta_num: narrow(row.delta.num(), "delta")?,
            delta_den: narrow(row.delta.den(), "delta")?,
            lower_proxy_num: narrow(row.lower_proxy.num(), "lower proxy")?,
            lower_proxy_den: narrow(row.lower_proxy.den(), "lower proxy")?,
            upper_proxy_num: narrow(row.upper_proxy.num(), "upper proxy")?,
            upper_proxy_den: narrow(row.upper_proxy.den(), "upper proxy")?,
            gap_bound_num: narrow(row.gap_bound.num(), "gap bound")?,
            gap_bound_den: narrow(row.gap_bound.den(), "gap bound")?,
        })
    })
}

// Lab.

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FroblabProp1Interval {
    pub n: u64,
    pub f: i64,
    pub paper_lower: u64,
    pub corrected_lower: i64,
    pub upper: u64,
    pub paper_lower_ok: bool,
    pub corrected_lower_ok: bool,
    pub upper_ok: bool,
}

/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_prop1_interval(
    a: u64,
    b: u64,
    c: u64,
    out: *mut FroblabProp1Interval,
) -> FroblabStatus {
    guard(out, || {
        check_range(&[a, b, c])?;
        let p = lab::prop1_interval(a, b, c)?;
        Ok(FroblabProp1Interval {
            n: p.n,
            f: p.f,
            paper_lower: p.paper_lower,
            corrected_lower: p.corrected_lower,
            upper: p.upper,
            paper_lower_ok: p.paper_lower_ok,
            corrected_lower_ok: p.corrected_lower_ok,
            upper_ok: p.upper_ok,
        })
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FroblabScanRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub f: i64,
    pub n: u64,
    /// `(abc)^{5/8}`, display only.
    pub bez_bound: f64,
    /// `f^8 > (abc)^5`, decided exactly.
    pub bez_violated: bool,
    pub prop1_paper_lower_ok: bool,
    pub prop1_upper_ok: bool,
    pub near_progression: bool,
}

/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_bez_test(
    a: u64,
    b: u64,
    c: u64,
    out: *mut FroblabScanRecord,
) -> FroblabStatus {
    guard(out, || {
        check_range(&[a, b, c])?;
        let r = lab::bez_test(a, b, c)?;
        Ok(FroblabScanRecord {
            a,
            b,
            c,
            f: r.f,
            n: r.n,
            bez_bound: r.bez_bound,
            bez_violated: r.bez_violated,
            prop1_paper_lower_ok: r.prop1_paper_lower_ok,
            prop1_upper_ok: r.prop1_upper_ok,
            near_progression: r.near_progression,
        })
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FroblabDensityResult {
    pub a: u64,
    pub delta_exp: f64,
    pub threshold: u64,
    pub pairs_tested: u64,
    pub pairs_exceeding: u64,
    pub fraction: f64,
    pub predicted_scale: f64,
    pub exhaustive: bool,
}

/// Pass `UINT64_MAX` as `sample_size` for an exhaustive scan.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_density_scan(
    a: u64,
    delta_exp: f64,
    sample_size: u64,
    seed: u64,
    out: *mut FroblabDensityResult,
) -> FroblabStatus {
    guard(out, || {
        check_range(&[a])?;
        let r = lab::density_scan(a, delta_exp, sample_size, seed)?;
        Ok(FroblabDensityResult {
            a: r.a,
            delta_exp: r.delta_exp,
            threshold: r.threshold,
            pairs_tested: r.pairs_tested,
            pairs_exceeding: r.pairs_exceeding,
            fraction: r.fraction,
            predicted_scale: r.predicted_scale,
            exhaustive: r.exhaustive,
        })
    })
}

/// Optional pair: `found` is false when the windows hold no inverse pair.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FroblabWindowPair {
    pub found: bool,
    pub b: u64,
    pub c: u64,
}

/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn froblab_window_search(
    a: u64,
    alpha: f64,
    beta: f64,
    eps: f64,
    out: *mut FroblabWindowPair,
) -> FroblabStatus {
    guard(out, || {
        check_range(&[a])?;
        Ok(match lab::window_search(a, alpha, beta, eps)? {
            Some((b, c)) => FroblabWindowPair { found: true, b, c },
            None => FroblabWindowPair::default(),
        })
    })
}

/// Opaque list of `(b, c)` pairs.
pub struct FroblabPairList {
    pairs: Vec<(u64, u64)>,
}

/// Inverse pairs `a < b < c < 2a` with `b·c ≡ 1 (mod a)`.
///
/// # Safety
/// `out` must be writable. Release the handle with [`froblab_pair_list_free`].
#[no_mangle]
pub unsafe extern "C" fn froblab_inverse_pairs(
    a: u64,
    out: *mut *mut FroblabPairList,
) -> FroblabStatus {
    guard(out, || {
        check_range(&[a])?;
        let pairs = lab::inverse_pairs(a);
        Ok(Box::into_raw(Box::new(FroblabPairList { pairs })))
    })
}

/// # Safety
/// `list` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn froblab_pair_list_len(list: *const FroblabPairList) -> usize {
    list.as_ref().map_or(0, |l| l.pairs.len())
}

/// # Safety
/// `list` must be a live handle; `b` and `c` must be writable.
#[no_mangle]
pub unsafe extern "C" fn froblab_pair_list_get(
    list: *const FroblabPairList,
    index: usize,
    b: *mut u64,
    c: *mut u64,
) -> FroblabStatus {
    if c.is_null() {
        set_last_error("output pointer is null");
        return FroblabStatus::NullPointer;
    }
    let mut second = 0u64;
    let status = guard(b, || {
        let l = list.as_ref().ok_or_else(|| {
            Failure(
                FroblabStatus::NullPointer,
                "pair list handle is null".into(),
            )
        })?;
        let &(x, y) = l.pairs.get(index).ok_or_else(|| {
            Failure(
                FroblabStatus::OutOfRange,
                format!("pair {index} out of range"),
            )
        })?;
        second = y;
        Ok(x)
    });
    if status == FroblabStatus::Ok {
        c.write(second);
    }
    status
}

/// # Safety
/// `list` must come from [`froblab_inverse_pairs`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn froblab_pair_list_free(list: *mut FroblabPairList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
