//! C interface to grpx. Objects are opaque heap handles released with the
//! matching `_free` function. Fallible calls return a `GrpxStatus`; the
//! message of the last failure on the calling thread is available from
//! `grpx_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use grpx::complexes::{complex_isomorphism, ComplexIsoOutcome, ComplexKind, ComplexOptions, SimplicialComplex};
use grpx::dsl::build_str;
use grpx::group::FiniteGroup;
use grpx::lattice::{enumerate_subgroups, SubgroupLattice};
use grpx::verify::runner::{run_corpus, RunOptions, Selection, Suite};
use grpx::Error;

/// Result codes of fallible calls.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrpxStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Construction text could not be parsed or names an unknown group.
    Parse = 2,
    /// A search or enumeration budget ran out; the answer is unknown.
    Budget = 3,
    /// Input was parsed but describes no valid group or object.
    InvalidInput = 4,
    /// A verification run reported failures.
    VerificationFailed = 5,
    /// Unexpected internal failure.
    Internal = 6,
}

/// Independence complex kinds.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrpxComplexKind {
    Independence = 0,
    Strong = 1,
}

/// Outcome of an isomorphism search.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrpxIsoResult {
    Isomorphic = 0,
    NotIsomorphic = 1,
}

pub struct GrpxGroup(Arc<FiniteGroup>);
pub struct GrpxLattice(SubgroupLattice);
pub struct GrpxComplex(SimplicialComplex);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn status_of(e: &Error) -> GrpxStatus {
    match e {
        Error::SyntaxError { .. } | Error::UnknownName(_) | Error::DimensionMismatch { .. } => GrpxStatus::Parse,
        Error::SearchBudgetExceeded { .. } | Error::FaceBudgetExceeded { .. } => GrpxStatus::Budget,
        _ => GrpxStatus::InvalidInput,
    }
}

/// Runs `f`, recording errors and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), GrpxStatus>) -> GrpxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GrpxStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            GrpxStatus::Internal
        }
    }
}

fn check<T>(r: grpx::Result<T>) -> Result<T, GrpxStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, GrpxStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(GrpxStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string is not valid UTF-8");
        GrpxStatus::InvalidInput
    })
}

unsafe fn obj<'a, T>(p: *const T) -> Result<&'a T, GrpxStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        GrpxStatus::NullArgument
    })
}

fn out<T>(p: *mut T) -> Result<&'static mut T, GrpxStatus> {
    // SAFETY: callers pass a valid, writable pointer or null
    unsafe { p.as_mut() }.ok_or_else(|| {
        set_error("null output pointer");
        GrpxStatus::NullArgument
    })
}

/// Message of the last failed call on this thread; valid until the next
/// failing call on the same thread. Never null.
#[no_mangle]
pub extern "C" fn grpx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a group from construction text such as `"C(9) x C(3)"` or a
/// corpus key.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `group_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn grpx_group_build(spec: *const c_char, group_out: *mut *mut GrpxGroup) -> GrpxStatus {
    guard(|| {
        let slot = out(group_out)?;
        *slot = ptr::null_mut();
        let g = check(build_str(text(spec)?))?.group;
        *slot = Box::into_raw(Box::new(GrpxGroup(Arc::new(g))));
        Ok(())
    })
}

/// # Safety
/// `group` must come from `grpx_group_build` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn grpx_group_free(group: *mut GrpxGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Order of the group; 0 for a null handle.
///
/// # Safety
/// `group` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grpx_group_order(group: *const GrpxGroup) -> u64 {
    group.as_ref().map_or(0, |g| g.0.order() as u64)
}

/// Order of element `x`; 0 when `x` is out of range or the handle is null.
///
/// # Safety
/// `group` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grpx_group_element_order(group: *const GrpxGroup, x: u32) -> u32 {
    match group.as_ref() {
        Some(g) if (x as usize) < g.0.order() => g.0.element_order(x),
        _ => 0,
    }
}

/// Product `a * b`; writes to `product_out`.
///
/// # Safety
/// `group` must be a live handle; `product_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn grpx_group_mul(group: *const GrpxGroup, a: u32, b: u32, product_out: *mut u32) -> GrpxStatus {
    guard(|| {
        let g = &obj(group)?.0;
        let slot = out(product_out)?;
        if a as usize >= g.order() || b as usize >= g.order() {
            set_error("element index out of range");
            return Err(GrpxStatus::InvalidInput);
        }
        *slot = g.mul(a, b);
        Ok(())
    })
}

/// Enumerates all subgroups.
///
/// # Safety
/// `group` must be a live handle; `lattice_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn grpx_lattice_new(group: *const GrpxGroup, lattice_out: *mut *mut GrpxLattice) -> GrpxStatus {
    guard(|| {
        let g = obj(group)?;
        let slot = out(lattice_out)?;
        *slot = Box::into_raw(Box::new(GrpxLattice(enumerate_subgroups(&g.0))));
        Ok(())
    })
}

/// # Safety
/// `lattice` must come from `grpx_lattice_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn grpx_lattice_free(lattice: *mut GrpxLattice) {
    if !lattice.is_null() {
        drop(Box::from_raw(lattice));
    }
}

/// Number of subgroups; 0 for a null handle.
///
/// # Safety
/// `lattice` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grpx_lattice_len(lattice: *const GrpxLattice) -> u64 {
    lattice.as_ref().map_or(0, |l| l.0.len() as u64)
}

/// Order of subgroup `i` (subgroups are sorted by order; 0 is trivial, the
/// last is the whole group); 0 when out of range.
///
/// # Safety
/// `lattice` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grpx_lattice_subgroup_order(lattice: *const GrpxLattice, i: u32) -> u64 {
    match lattice.as_ref() {
        Some(l) if (i as usize) < l.0.len() => l.0.subgroup(i).order() as u64,
        _ => 0,
    }
}

/// Minimal number of generators of subgroup `i`; `u32::MAX` when out of
/// range.
///
/// # Safety
/// `lattice` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grpx_lattice_d(lattice: *const GrpxLattice, i: u32) -> u32 {
    match lattice.as_ref() {
        Some(l) if (i as usize) < l.0.len() => l.0.d(i),
        _ => u32::MAX,
    }
}

/// Largest minimal generator count over all subgroups.
///
/// # Safety
/// `lattice` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grpx_lattice_rank(lattice: *const GrpxLattice) -> u32 {
    lattice.as_ref().map_or(0, |l| l.0.rank())
}

/// Enumerates an independence complex. `face_budget` of 0 selects the
/// default budget.
///
/// # Safety
/// `lattice` must be a live handle; `complex_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn grpx_complex_new(
    lattice: *const GrpxLattice,
    kind: GrpxComplexKind,
    face_budget: u64,
    complex_out: *mut *mut GrpxComplex,
) -> GrpxStatus {
    guard(|| {
        let l = obj(lattice)?;
        let slot = out(complex_out)?;
        *slot = ptr::null_mut();
        let kind = match kind {
            GrpxComplexKind::Independence => ComplexKind::Independence,
            GrpxComplexKind::Strong => ComplexKind::Strong,
        };
        let mut opts = ComplexOptions::default();
        if face_budget > 0 {
            opts.face_budget = face_budget;
        }
        let c = check(SimplicialComplex::build(&l.0, kind, opts))?;
        *slot = Box::into_raw(Box::new(GrpxComplex(c)));
        Ok(())
    })
}

/// # Safety
/// `complex` must come from `grpx_complex_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn grpx_complex_free(complex: *mut GrpxComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// Copies up to `cap` entries of the f-vector (faces of size 1, 2, ...)
/// into `buf` and returns its full length.
///
/// # Safety
/// `complex` must be a live handle or null; `buf` must hold `cap` values
/// (it may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn grpx_complex_f_vector(complex: *const GrpxComplex, buf: *mut u64, cap: usize) -> usize {
    let Some(c) = complex.as_ref() else {
        return 0;
    };
    let f = &c.0.f_vector().0;
    if !buf.is_null() {
        for (i, &v) in f.iter().take(cap).enumerate() {
            *buf.add(i) = v;
        }
    }
    f.len()
}

/// Searches for a vertex bijection between two complexes. `map_out`, when
/// not null, receives the image of each vertex of `a` (it must hold as many
/// entries as `a` has vertices). `budget` of 0 selects the default.
///
/// # Safety
/// Handles must be live; `result_out` must be writable; `map_out` as above.
#[no_mangle]
pub unsafe extern "C" fn grpx_complex_isomorphism(
    a: *const GrpxComplex,
    b: *const GrpxComplex,
    budget: u64,
    result_out: *mut GrpxIsoResult,
    map_out: *mut u32,
) -> GrpxStatus {
    guard(|| {
        let (a, b) = (obj(a)?, obj(b)?);
        let slot = out(result_out)?;
        let budget = if budget == 0 { grpx::DEFAULT_SEARCH_BUDGET } else { budget };
        match check(complex_isomorphism(&a.0, &b.0, budget))? {
            ComplexIsoOutcome::Found(map) => {
                if !map_out.is_null() {
                    ptr::copy_nonoverlapping(map.as_ptr(), map_out, map.len());
                }
                *slot = GrpxIsoResult::Isomorphic;
            }
            ComplexIsoOutcome::Refuted(_) | ComplexIsoOutcome::Exhausted => *slot = GrpxIsoResult::NotIsomorphic,
        }
        Ok(())
    })
}

/// Runs corpus checks. `suites` is a comma-separated list or "all";
/// `group` restricts to one corpus key and may be null. Writes the number
/// of failing checks to `failures_out` and returns `VerificationFailed`
/// when it is nonzero.
///
/// # Safety
/// `suites` must be a NUL-terminated string; `group` null or NUL-terminated;
/// `failures_out` writable.
#[no_mangle]
pub unsafe extern "C" fn grpx_verify(
    suites: *const c_char,
    group: *const c_char,
    failures_out: *mut u64,
) -> GrpxStatus {
    let mut failed = false;
    let s = guard(|| {
        let slot = out(failures_out)?;
        let suites = check(Suite::parse_list(text(suites)?))?;
        let selection = if group.is_null() {
            Selection::All
        } else {
            Selection::Keys(vec![text(group)?.to_string()])
        };
        let report = check(run_corpus(&selection, &suites, RunOptions::default()))?;
        *slot = report.failures().count() as u64;
        failed = *slot > 0;
        Ok(())
    });
    if s == GrpxStatus::Ok && failed {
        set_error("verification reported failures");
        return GrpxStatus::VerificationFailed;
    }
    s
}
