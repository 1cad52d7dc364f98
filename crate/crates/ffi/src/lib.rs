//! C ABI over `extset`.
//!
//! Conventions: every fallible call returns an [`ExtsetStatus`] and writes
//! its result through an out-pointer. On failure `extset_last_error` gives a
//! message for the calling thread. Families are opaque handles released
//! with `extset_family_free`; strings returned by the library are released
//! with `extset_string_free`. Elements are 1-indexed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use extset::constructions;
use extset::exact::{self, ClaimId, ParamPoint};
use extset::invariants;
use extset::search::{self, SearchProblem};
use extset::{Error, Family, KSet};

/// Status codes. Values 2 to 5 line up with the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtsetStatus {
    Ok = 0,
    /// A witness failed re-validation, or an internal invariant broke.
    Internal = 1,
    InvalidArgument = 2,
    Parse = 3,
    BudgetExceeded = 4,
    ClaimFailed = 5,
    NullPointer = 6,
    Panic = 7,
}

/// Opaque family of k-subsets of `[n]`.
pub struct ExtsetFamily(Family);

/// Claim parameters; a value `<= 0` means "not given".
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct ExtsetParams {
    pub n: i64,
    pub k: i64,
    pub s: i64,
    pub t: i64,
    pub u: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ExtsetStatus {
    match e {
        Error::Parse { .. } => ExtsetStatus::Parse,
        Error::BudgetExceeded(_) => ExtsetStatus::BudgetExceeded,
        Error::NeverHolds(_) => ExtsetStatus::ClaimFailed,
        Error::Unsound(_) => ExtsetStatus::Internal,
        _ => ExtsetStatus::InvalidArgument,
    }
}

enum Fail {
    Lib(Error),
    Null(&'static str),
    Arg(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f`, turning errors and panics into a status plus message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> ExtsetStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ExtsetStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(&format!("null pointer: {what}"));
            ExtsetStatus::NullPointer
        }
        Ok(Err(Fail::Arg(msg))) => {
            set_error(&msg);
            ExtsetStatus::InvalidArgument
        }
        Err(_) => {
            set_error("panic inside extset");
            ExtsetStatus::Panic
        }
    }
}

unsafe fn out<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null(what))
}

unsafe fn family<'a>(p: *const ExtsetFamily) -> Result<&'a Family, Fail> {
    p.as_ref().map(|f| &f.0).ok_or(Fail::Null("family"))
}

unsafe fn string<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Arg(format!("{what} is not valid UTF-8")))
}

fn give_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail::Arg("string contains NUL".into()))
}

fn give_family(f: Family) -> *mut ExtsetFamily {
    Box::into_raw(Box::new(ExtsetFamily(f)))
}

fn usize_of(v: u32) -> usize {
    v as usize
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread; never NULL.
#[no_mangle]
pub extern "C" fn extset_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn extset_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Empty family over `[n]` of `k`-sets.
///
/// # Safety
/// `out_family` must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_family_new(n: u32, k: u32, out_family: *mut *mut ExtsetFamily) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_family, "out_family")?;
        *slot = give_family(Family::new(usize_of(n), usize_of(k))?);
        Ok(())
    })
}

/// Releases a family. NULL is ignored.
///
/// # Safety
/// `f` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn extset_family_free(f: *mut ExtsetFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Adds the set `{elements[0], ..., elements[len-1]}`. `inserted` (may be
/// NULL) reports whether it was new.
///
/// # Safety
/// `elements` must point to `len` readable values; `f` must be live.
#[no_mangle]
pub unsafe extern "C" fn extset_family_insert(
    f: *mut ExtsetFamily,
    elements: *const u32,
    len: usize,
    inserted: *mut bool,
) -> ExtsetStatus {
    guard(|| {
        let fam = f.as_mut().ok_or(Fail::Null("family"))?;
        if elements.is_null() && len > 0 {
            return Err(Fail::Null("elements"));
        }
        let elems: Vec<usize> = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(elements, len).iter().map(|&e| e as usize).collect()
        };
        let set = KSet::from_elements(&elems, fam.0.n())?;
        let added = fam.0.insert(set)?;
        if let Some(slot) = inserted.as_mut() {
            *slot = added;
        }
        Ok(())
    })
}

/// Number of members.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_family_len(f: *const ExtsetFamily, out_len: *mut usize) -> ExtsetStatus {
    guard(|| {
        *out(out_len, "out_len")? = family(f)?.len();
        Ok(())
    })
}

/// Parses the text format (`n k` header, one set per line).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out_family` valid.
#[no_mangle]
pub unsafe extern "C" fn extset_family_parse(text: *const c_char, out_family: *mut *mut ExtsetFamily) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_family, "out_family")?;
        let parsed = extset::io::parse_family(string(text, "text")?)?;
        *slot = give_family(parsed.family);
        Ok(())
    })
}

/// `{"n":..,"k":..,"sets":[[..],..]}`; free with `extset_string_free`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_family_to_json(f: *const ExtsetFamily, out_json: *mut *mut c_char) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_json, "out_json")?;
        *slot = give_string(extset::io::to_json(family(f)?))?;
        Ok(())
    })
}

/// All k-sets containing `center`.
///
/// # Safety
/// `out_family` must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_star(n: u32, k: u32, center: u32, out_family: *mut *mut ExtsetFamily) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_family, "out_family")?;
        *slot = give_family(constructions::star(usize_of(n), usize_of(k), usize_of(center))?);
        Ok(())
    })
}

/// The Hilton-Milner type family `H_u`.
///
/// # Safety
/// `out_family` must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_hilton_milner(n: u32, k: u32, u: u32, out_family: *mut *mut ExtsetFamily) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_family, "out_family")?;
        *slot = give_family(constructions::hilton_milner(usize_of(n), usize_of(k), usize_of(u))?);
        Ok(())
    })
}

/// k-sets meeting `[s]`.
///
/// # Safety
/// `out_family` must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_a0(n: u32, k: u32, s: u32, out_family: *mut *mut ExtsetFamily) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_family, "out_family")?;
        *slot = give_family(constructions::a0(usize_of(n), usize_of(k), usize_of(s))?);
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_is_intersecting(f: *const ExtsetFamily, out_flag: *mut bool) -> ExtsetStatus {
    guard(|| {
        *out(out_flag, "out_flag")? = invariants::is_intersecting(family(f)?);
        Ok(())
    })
}

/// Largest and smallest element degree.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_degrees(f: *const ExtsetFamily, out_max: *mut u64, out_min: *mut u64) -> ExtsetStatus {
    guard(|| {
        let p = invariants::degree_profile(family(f)?);
        *out(out_max, "out_max")? = p.max as u64;
        *out(out_min, "out_min")? = p.min as u64;
        Ok(())
    })
}

/// Minimum over t-subsets T of `[n]` of the number of members containing T.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_min_t_degree(f: *const ExtsetFamily, t: u32, out_value: *mut u64) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_value, "out_value")?;
        *slot = invariants::min_t_degree(family(f)?, usize_of(t))?.min as u64;
        Ok(())
    })
}

/// Members avoiding a maximum-degree element.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_diversity(f: *const ExtsetFamily, out_value: *mut u64) -> ExtsetStatus {
    guard(|| {
        *out(out_value, "out_value")? = invariants::diversity(family(f)?).0 as u64;
        Ok(())
    })
}

/// Matching number `nu` and covering number `tau`. `tau` needs a nonempty
/// family.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_matching_covering(
    f: *const ExtsetFamily,
    out_nu: *mut u64,
    out_tau: *mut u64,
) -> ExtsetStatus {
    guard(|| {
        let fam = family(f)?;
        let nu = out(out_nu, "out_nu")?;
        let tau = out(out_tau, "out_tau")?;
        *tau = invariants::covering_number(fam)? as u64;
        *nu = invariants::matching_number(fam) as u64;
        Ok(())
    })
}

/// Isomorphism-invariant form as lowercase hex (n <= 16).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_canonical_form(f: *const ExtsetFamily, out_hex: *mut *mut c_char) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_hex, "out_hex")?;
        *slot = give_string(search::canonical_form(family(f)?)?.to_hex())?;
        Ok(())
    })
}

/// `C(n, k)` as a decimal string (0 outside `0 <= k <= n`).
///
/// # Safety
/// `out_decimal` must be valid.
#[no_mangle]
pub unsafe extern "C" fn extset_binom(n: i64, k: i64, out_decimal: *mut *mut c_char) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_decimal, "out_decimal")?;
        *slot = give_string(exact::binom(n, k).to_string())?;
        Ok(())
    })
}

/// Evaluates a named claim (full name or short alias such as `EQ25`).
/// Missing parameters give `EXTSET_STATUS_INVALID_ARGUMENT`.
///
/// # Safety
/// `claim` must be a NUL-terminated string; `params` and `out_holds` valid.
#[no_mangle]
pub unsafe extern "C" fn extset_check_claim(
    claim: *const c_char,
    params: *const ExtsetParams,
    out_holds: *mut bool,
) -> ExtsetStatus {
    guard(|| {
        let id: ClaimId = string(claim, "claim")?.parse()?;
        let p = params.as_ref().ok_or(Fail::Null("params"))?;
        let opt = |v: i64| (v > 0).then_some(v);
        let point = ParamPoint {
            n: opt(p.n),
            k: opt(p.k),
            s: opt(p.s),
            t: opt(p.t),
            u: opt(p.u),
        };
        let slot = out(out_holds, "out_holds")?;
        *slot = exact::evaluate(id, &point)?.holds;
        Ok(())
    })
}

/// Solves a search problem given as JSON and returns the result as JSON.
/// A search that runs out of nodes still returns `EXTSET_STATUS_OK` with
/// `"status": "timeout"`.
///
/// # Safety
/// `problem_json` must be a NUL-terminated string; `out_json` valid.
#[no_mangle]
pub unsafe extern "C" fn extset_search_json(
    problem_json: *const c_char,
    threads: u32,
    out_json: *mut *mut c_char,
) -> ExtsetStatus {
    guard(|| {
        let slot = out(out_json, "out_json")?;
        let problem: SearchProblem =
            serde_json::from_str(string(problem_json, "problem_json")?).map_err(|e| Error::Parse {
                line: e.line(),
                message: e.to_string(),
            })?;
        let result = search::solve(&problem, usize_of(threads).max(1))?;
        *slot = give_string(serde_json::to_string(&result).map_err(|e| Fail::Arg(e.to_string()))?)?;
        Ok(())
    })
}
