//! C interface to `schroder-maj`.
//!
//! Polynomials cross the boundary as opaque `SmPoly` handles. Every function
//! returns an `SmStatus`; on failure `sm_last_error()` describes the problem
//! for the calling thread. Strings handed out by the library must be released
//! with `sm_string_free`, handles with `sm_poly_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use schroder_maj::bijections;
use schroder_maj::formulas::{self, FormulaResult, OrderCase};
use schroder_maj::paths::{maj_gf_schroeder_enum, StepOrder};
use schroder_maj::qseries::qbinom;
use schroder_maj::tableaux::{stat_gf, Family, SkewShape, Statistic, Tableau};
use schroder_maj::{Error, LaurentPoly};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    InvalidShape = 4,
    NotInFamily = 5,
    NonExactDivision = 6,
    Overflow = 7,
    Panic = 8,
}

/// Opaque exact Laurent polynomial in q.
pub struct SmPoly(LaurentPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(SmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match e {
            Error::NonExactDivision { .. } | Error::DivisionByZero => SmStatus::NonExactDivision,
            Error::InvalidShape(_) | Error::CellOutOfShape { .. } | Error::InvalidPartition { .. } => {
                SmStatus::InvalidShape
            }
            Error::NotInFamily(_) | Error::InvalidHole { .. } => SmStatus::NotInFamily,
            Error::Parse(_) => SmStatus::Parse,
            _ => SmStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: SmStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SmStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SmStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(SmStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(SmStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(SmStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn poly_ref<'a>(p: *const SmPoly) -> Result<&'a LaurentPoly, Failure> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| fail(SmStatus::NullPointer, "polynomial handle is null"))
}

unsafe fn give_poly(out: *mut *mut SmPoly, p: LaurentPoly) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(SmStatus::NullPointer, "output pointer is null"));
    }
    out.write(Box::into_raw(Box::new(SmPoly(p))));
    Ok(())
}

unsafe fn give_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| fail(SmStatus::Parse, "string has an interior nul"))?;
    if out.is_null() {
        return Err(fail(SmStatus::NullPointer, "output pointer is null"));
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn give_formula(out: *mut *mut SmPoly, family_empty: *mut bool, r: FormulaResult) -> Result<(), Failure> {
    if !family_empty.is_null() {
        family_empty.write(r.family_empty);
    }
    give_poly(out, r.poly)
}

unsafe fn parse_order(order: *const c_char) -> Result<StepOrder, Failure> {
    if order.is_null() {
        return Ok(StepOrder::E_D_N);
    }
    Ok(read_str(order, "order")?.parse()?)
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn sm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `p` must be null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sm_poly_free(p: *mut SmPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses text such as `"1 + 2*q + q^2"` or `"q^-1 - 3"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_poly_parse(text: *const c_char, out: *mut *mut SmPoly) -> SmStatus {
    guard(|| give_poly(out, read_str(text, "text")?.parse()?))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_poly_to_string(p: *const SmPoly, out: *mut *mut c_char) -> SmStatus {
    guard(|| give_string(out, poly_ref(p)?.to_string()))
}

/// Lowest and highest exponents with a nonzero coefficient. Fails with
/// `INVALID_ARGUMENT` on the zero polynomial.
///
/// # Safety
/// `p` must be a live handle; `lo` and `hi` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_poly_degree_range(p: *const SmPoly, lo: *mut i64, hi: *mut i64) -> SmStatus {
    guard(|| {
        let p = poly_ref(p)?;
        let top = p.max_exp().ok_or_else(|| fail(SmStatus::InvalidArgument, "zero polynomial"))?;
        write(lo, p.min_exp())?;
        write(hi, top)
    })
}

/// Coefficient of `q^exp`; `OVERFLOW` if it does not fit in 64 bits.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_poly_coeff(p: *const SmPoly, exp: i64, out: *mut i64) -> SmStatus {
    guard(|| {
        let c = poly_ref(p)?.coeff(exp);
        let c = i64::try_from(&c).map_err(|_| fail(SmStatus::Overflow, format!("coefficient {c} exceeds 64 bits")))?;
        write(out, c)
    })
}

/// Value at q = 1 as a decimal string (it may exceed 64 bits).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_poly_eval_at_one(p: *const SmPoly, out: *mut *mut c_char) -> SmStatus {
    guard(|| give_string(out, poly_ref(p)?.eval_at_one().to_string()))
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_poly_equal(a: *const SmPoly, b: *const SmPoly, out: *mut bool) -> SmStatus {
    guard(|| write(out, poly_ref(a)? == poly_ref(b)?))
}

/// Gaussian binomial [n choose k]; zero outside 0 <= k <= n.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_qbinom(n: i64, k: i64, out: *mut *mut SmPoly) -> SmStatus {
    guard(|| give_poly(out, qbinom(n, k)))
}

/// Sum of q^maj over Schröder paths from (r,0) to (n,m) with k diagonal
/// steps, by enumeration. `order` is a step order such as `"E>D>N"`; null
/// means `"E>D>N"`.
///
/// # Safety
/// `order` must be null or a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_schroeder_maj_enum(
    r: u32,
    n: u32,
    m: u32,
    k: u32,
    order: *const c_char,
    out: *mut *mut SmPoly,
) -> SmStatus {
    guard(|| give_poly(out, maj_gf_schroeder_enum(r, n, m, k, parse_order(order)?)))
}

/// Closed form for the same generating function. `family_empty` may be null.
///
/// # Safety
/// `order` must be null or a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_schroeder_maj_closed(
    r: u32,
    n: u32,
    m: u32,
    k: u32,
    order: *const c_char,
    out: *mut *mut SmPoly,
    family_empty: *mut bool,
) -> SmStatus {
    guard(|| {
        let case = OrderCase::of(parse_order(order)?);
        give_formula(out, family_empty, formulas::schroeder_maj_closed(r, n, m, k, case))
    })
}

/// Closed form over row-increasing tableaux of shape (n,m)/(r) with k
/// repeated values; `amaj` selects the ascent statistic.
///
/// # Safety
/// `out` must be writable; `family_empty` may be null.
#[no_mangle]
pub unsafe extern "C" fn sm_rinc_closed(
    r: u32,
    n: u32,
    m: u32,
    k: u32,
    amaj: bool,
    out: *mut *mut SmPoly,
    family_empty: *mut bool,
) -> SmStatus {
    guard(|| {
        let res = if amaj { formulas::rinc_amaj_closed(r, n, m, k) } else { formulas::rinc_maj_closed(r, n, m, k) };
        give_formula(out, family_empty, res)
    })
}

/// Closed form over increasing tableaux of shape (n,m)/(r).
///
/// # Safety
/// `out` must be writable; `family_empty` may be null.
#[no_mangle]
pub unsafe extern "C" fn sm_inc_maj_closed(
    r: u32,
    n: u32,
    m: u32,
    k: u32,
    out: *mut *mut SmPoly,
    family_empty: *mut bool,
) -> SmStatus {
    guard(|| give_formula(out, family_empty, formulas::inc_maj_closed(r, n, m, k)?))
}

/// Maj polynomial of standard tableaux of a skew shape such as `"4,3/1"`,
/// from the determinant formula.
///
/// # Safety
/// `shape` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_skew_syt_closed(shape: *const c_char, out: *mut *mut SmPoly) -> SmStatus {
    guard(|| {
        let sh: SkewShape = read_str(shape, "shape")?.parse()?;
        let n = sh.outer.len() as u32;
        give_poly(out, formulas::chen_stanley_skew_gf(&sh.outer, &sh.inner, n)?.poly)
    })
}

/// Generating function of a tableau family by enumeration. `family` is
/// `"rinc"`, `"inc"` or `"syt"`; `stat` is `"maj"` or `"amaj"`. Cost grows
/// exponentially with the number of cells.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_tableau_stat_enum(
    family: *const c_char,
    shape: *const c_char,
    k: u32,
    stat: *const c_char,
    out: *mut *mut SmPoly,
) -> SmStatus {
    guard(|| {
        let family: Family = read_str(family, "family")?.parse()?;
        let sh: SkewShape = read_str(shape, "shape")?.parse()?;
        let stat: Statistic = read_str(stat, "stat")?.parse()?;
        give_poly(out, stat_gf(family, &sh, k, stat))
    })
}

/// Applies a bijection to a tableau written as rows separated by `/` with
/// `.` for inner cells. `map` is `phi` (the image is a path word), `chi`,
/// `rho`, `g` or `rinc_to_syt`.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sm_bijection_apply(
    map: *const c_char,
    tableau: *const c_char,
    out: *mut *mut c_char,
) -> SmStatus {
    guard(|| {
        let t: Tableau = read_str(tableau, "tableau")?.parse()?;
        let image = match read_str(map, "map")? {
            "phi" => bijections::phi(&t)?.word(),
            "chi" => bijections::chi(&t)?.to_string(),
            "rho" => bijections::rho(&t)?.to_string(),
            "g" => bijections::g(&t)?.to_string(),
            "rinc_to_syt" => bijections::rinc_to_syt(&t)?.to_string(),
            other => return Err(fail(SmStatus::InvalidArgument, format!("unknown map {other:?}"))),
        };
        give_string(out, image)
    })
}
