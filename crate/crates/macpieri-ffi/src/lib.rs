//! C ABI over the engine. Every function returns an integer status code;
//! results come back through out-pointers as opaque handles or owned C
//! strings. The message of the last failure on the calling thread is
//! available from [`macpieri_last_error`].

#![allow(clippy::missing_safety_doc)]

use macpieri::arith::{RatFunc, Rational};
use macpieri::inverse_pieri::{c_coeff, expand_full, product_index, CArgs, CFlavor, FullExpansion, Side};
use macpieri::partitions::{IntSeq, ThetaVector};
use macpieri::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

pub const MACPIERI_OK: i32 = 0;
pub const MACPIERI_ERR_NULL: i32 = 1;
pub const MACPIERI_ERR_PARSE: i32 = 2;
pub const MACPIERI_ERR_PARAMETER: i32 = 3;
pub const MACPIERI_ERR_DIVISION_BY_ZERO: i32 = 4;
pub const MACPIERI_ERR_POLE: i32 = 5;
pub const MACPIERI_ERR_DEGREE: i32 = 6;
pub const MACPIERI_ERR_CONSISTENCY: i32 = 7;
pub const MACPIERI_ERR_RANGE: i32 = 8;
pub const MACPIERI_ERR_PANIC: i32 = 9;

/// Which expansion to compute.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub enum MacpieriSide {
    /// `Q_λ` in products of `g_k`.
    QG = 0,
    /// `P_λ` in products of `e_k`.
    PE = 1,
    /// Hall–Littlewood `P_λ` in `e_k`.
    HallLittlewood = 2,
    /// Monomial `m_λ` in `e_k`.
    Monomial = 3,
    /// Jack `Q_λ` in Jack `g_k`.
    JackQ = 4,
    /// Jack `P_λ` in `e_k`.
    JackP = 5,
    /// Schur `s_λ` in `h_k`.
    SchurH = 6,
    /// Schur `s_λ` in `e_k`.
    SchurE = 7,
}

impl From<MacpieriSide> for Side {
    fn from(s: MacpieriSide) -> Side {
        match s {
            MacpieriSide::QG => Side::QG,
            MacpieriSide::PE => Side::PE,
            MacpieriSide::HallLittlewood => Side::Hl,
            MacpieriSide::Monomial => Side::Mono,
            MacpieriSide::JackQ => Side::JackQ,
            MacpieriSide::JackP => Side::JackP,
            MacpieriSide::SchurH => Side::SchurH,
            MacpieriSide::SchurE => Side::SchurE,
        }
    }
}

/// Coefficient flavor for [`macpieri_coefficient`].
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub enum MacpieriFlavor {
    Qt = 0,
    Tq = 1,
}

/// Opaque full expansion.
pub struct MacpieriExpansion {
    inner: FullExpansion,
    /// Terms with a valid product index, in stable order.
    rows: Vec<(Vec<i64>, RatFunc)>,
}

/// Opaque rational function in `q, t` (or `α`).
pub struct MacpieriRatFunc(RatFunc);

thread_local! {
    static LAST: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST.with(|l| *l.borrow_mut() = Some(c));
}

fn code_of(e: &Error) -> i32 {
    match e {
        Error::DivisionByZero => MACPIERI_ERR_DIVISION_BY_ZERO,
        Error::Pole(_) => MACPIERI_ERR_POLE,
        Error::Parameter(_) => MACPIERI_ERR_PARAMETER,
        Error::Degree { .. } => MACPIERI_ERR_DEGREE,
        Error::Consistency(_) => MACPIERI_ERR_CONSISTENCY,
        Error::Parse(_) => MACPIERI_ERR_PARSE,
    }
}

struct Fail(i32, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(code_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MACPIERI_OK,
        Ok(Err(Fail(code, msg))) => {
            set_last(msg);
            code
        }
        Err(_) => {
            set_last("internal panic".into());
            MACPIERI_ERR_PANIC
        }
    }
}

fn null() -> Fail {
    Fail(MACPIERI_ERR_NULL, "null pointer argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(MACPIERI_ERR_PARSE, "string is not UTF-8".into()))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior NUL").into_raw()
}

/// Message of the last failure on this thread, or NULL. Owned by the
/// library; valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn macpieri_last_error() -> *const c_char {
    LAST.with(|l| l.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn macpieri_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Full expansion of the partition `parts[0..len]` (weakly decreasing).
#[no_mangle]
pub unsafe extern "C" fn macpieri_expand(
    parts: *const i64,
    len: usize,
    side: MacpieriSide,
    out: *mut *mut MacpieriExpansion,
) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let seq = IntSeq(slice_arg(parts, len)?.to_vec());
        let lam = seq.to_partition().ok_or_else(|| Fail(MACPIERI_ERR_PARAMETER, format!("{seq} is not a partition")))?;
        let inner = expand_full(&lam, side.into(), false)?;
        let rows = inner
            .sorted_terms()
            .into_iter()
            .filter_map(|t| product_index(&t.index).map(|p| (p.parts().iter().map(|&x| x as i64).collect(), t.coeff.clone())))
            .collect();
        put(out, Box::into_raw(Box::new(MacpieriExpansion { inner, rows })))
    })
}

/// Number of terms.
#[no_mangle]
pub unsafe extern "C" fn macpieri_expansion_len(e: *const MacpieriExpansion, out: *mut usize) -> i32 {
    guard(|| {
        let e = e.as_ref().ok_or_else(null)?;
        put(out, e.rows.len())
    })
}

/// Product index of term `i`. Writes up to `cap` parts into `buf` and the
/// full length into `len`; a short buffer is not an error (query with cap 0).
#[no_mangle]
pub unsafe extern "C" fn macpieri_expansion_index(
    e: *const MacpieriExpansion,
    i: usize,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> i32 {
    guard(|| {
        let e = e.as_ref().ok_or_else(null)?;
        let (idx, _) = e.rows.get(i).ok_or_else(|| Fail(MACPIERI_ERR_RANGE, format!("term {i} out of range")))?;
        if cap > 0 {
            if buf.is_null() {
                return Err(null());
            }
            for (k, &x) in idx.iter().take(cap).enumerate() {
                buf.add(k).write(x);
            }
        }
        put(len, idx.len())
    })
}

/// Coefficient of term `i` as a new handle.
#[no_mangle]
pub unsafe extern "C" fn macpieri_expansion_coeff(e: *const MacpieriExpansion, i: usize, out: *mut *mut MacpieriRatFunc) -> i32 {
    guard(|| {
        let e = e.as_ref().ok_or_else(null)?;
        let (_, c) = e.rows.get(i).ok_or_else(|| Fail(MACPIERI_ERR_RANGE, format!("term {i} out of range")))?;
        if out.is_null() {
            return Err(null());
        }
        put(out, Box::into_raw(Box::new(MacpieriRatFunc(c.clone()))))
    })
}

/// The expansion as JSON; free with [`macpieri_string_free`].
#[no_mangle]
pub unsafe extern "C" fn macpieri_expansion_json(e: *const MacpieriExpansion, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let e = e.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        put(out, owned_string(e.inner.to_json().to_string()))
    })
}

#[no_mangle]
pub unsafe extern "C" fn macpieri_expansion_free(e: *mut MacpieriExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Parses an expression such as `(t-1)/(1-q)` or `q^2*t`.
#[no_mangle]
pub unsafe extern "C" fn macpieri_ratfunc_parse(s: *const c_char, out: *mut *mut MacpieriRatFunc) -> i32 {
    guard(|| {
        let s = str_arg(s)?;
        if out.is_null() {
            return Err(null());
        }
        let r: RatFunc = s.parse()?;
        put(out, Box::into_raw(Box::new(MacpieriRatFunc(r))))
    })
}

/// Canonical text form; free with [`macpieri_string_free`].
#[no_mangle]
pub unsafe extern "C" fn macpieri_ratfunc_to_string(r: *const MacpieriRatFunc, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let r = r.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        put(out, owned_string(r.0.to_string()))
    })
}

/// Value at rational `q`, `t` given as text (`"3/4"`), returned as text.
#[no_mangle]
pub unsafe extern "C" fn macpieri_ratfunc_eval(
    r: *const MacpieriRatFunc,
    q: *const c_char,
    t: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let r = r.as_ref().ok_or_else(null)?;
        let parse = |s: &str| s.trim().parse::<Rational>().map_err(|_| Fail(MACPIERI_ERR_PARSE, format!("not a rational: {s:?}")));
        let (q, t) = (parse(str_arg(q)?)?, parse(str_arg(t)?)?);
        if out.is_null() {
            return Err(null());
        }
        put(out, owned_string(r.0.eval(&q, &t)?.to_string()))
    })
}

/// Equality of reduced forms; writes 1 or 0.
#[no_mangle]
pub unsafe extern "C" fn macpieri_ratfunc_equal(a: *const MacpieriRatFunc, b: *const MacpieriRatFunc, out: *mut i32) -> i32 {
    guard(|| {
        let (a, b) = (a.as_ref().ok_or_else(null)?, b.as_ref().ok_or_else(null)?);
        put(out, i32::from(a.0 == b.0))
    })
}

#[no_mangle]
pub unsafe extern "C" fn macpieri_ratfunc_free(r: *mut MacpieriRatFunc) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Inverse Pieri coefficient `C_θ(u_1, …, u_n)` with `n = len`.
#[no_mangle]
pub unsafe extern "C" fn macpieri_coefficient(
    flavor: MacpieriFlavor,
    theta: *const u32,
    u: *const *const MacpieriRatFunc,
    len: usize,
    out: *mut *mut MacpieriRatFunc,
) -> i32 {
    guard(|| {
        let theta = ThetaVector(slice_arg(theta, len)?.iter().map(|&x| x as usize).collect());
        let mut args = Vec::with_capacity(len);
        for &p in slice_arg(u, len)? {
            args.push(p.as_ref().ok_or_else(null)?.0.clone());
        }
        let f = match flavor {
            MacpieriFlavor::Qt => CFlavor::Qt,
            MacpieriFlavor::Tq => CFlavor::Tq,
        };
        if out.is_null() {
            return Err(null());
        }
        let c = c_coeff(f, &theta, &CArgs::U(args))?;
        put(out, Box::into_raw(Box::new(MacpieriRatFunc(c))))
    })
}

/// Runs a verification suite (`inversions`, `pieri`, `main`,
/// `specializations`, `hook`); writes the violation count.
#[no_mangle]
pub unsafe extern "C" fn macpieri_verify(suite: *const c_char, max_weight: u32, seed: u64, violations: *mut usize) -> i32 {
    guard(|| {
        let name = str_arg(suite)?;
        let rep = macpieri::verify::by_name(name, max_weight as usize, seed)
            .ok_or_else(|| Fail(MACPIERI_ERR_PARAMETER, format!("unknown suite {name:?}")))?;
        put(violations, rep.violations.len())
    })
}
