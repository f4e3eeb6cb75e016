use macpieri_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn text(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { macpieri_string_free(p) };
    s
}

fn parse(s: &str) -> *mut MacpieriRatFunc {
    let c = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { macpieri_ratfunc_parse(c.as_ptr(), &mut out) }, MACPIERI_OK);
    out
}

#[test]
fn expansion_round_trip() {
    let lam = [3i64, 1];
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { macpieri_expand(lam.as_ptr(), 2, MacpieriSide::QG, &mut e) }, MACPIERI_OK);
    let mut n = 0;
    assert_eq!(unsafe { macpieri_expansion_len(e, &mut n) }, MACPIERI_OK);
    assert_eq!(n, 2);
    // length query with a zero-capacity buffer
    let mut len = 0;
    assert_eq!(unsafe { macpieri_expansion_index(e, 0, ptr::null_mut(), 0, &mut len) }, MACPIERI_OK);
    let mut buf = vec![0i64; len];
    assert_eq!(unsafe { macpieri_expansion_index(e, 0, buf.as_mut_ptr(), len, &mut len) }, MACPIERI_OK);
    assert_eq!(buf, vec![3, 1]);
    assert_eq!(unsafe { macpieri_expansion_index(e, 9, ptr::null_mut(), 0, &mut len) }, MACPIERI_ERR_RANGE);
    let mut js = ptr::null_mut();
    assert_eq!(unsafe { macpieri_expansion_json(e, &mut js) }, MACPIERI_OK);
    let v: serde_json::Value = serde_json::from_str(&text(js)).unwrap();
    assert_eq!(v["side"], "Q-g");
    unsafe { macpieri_expansion_free(e) };
}

#[test]
fn column_in_elementary() {
    let lam = [1i64, 1, 1];
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { macpieri_expand(lam.as_ptr(), 3, MacpieriSide::PE, &mut e) }, MACPIERI_OK);
    let mut n = 0;
    unsafe { macpieri_expansion_len(e, &mut n) };
    assert_eq!(n, 1);
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { macpieri_expansion_coeff(e, 0, &mut c) }, MACPIERI_OK);
    let one = parse("1");
    let mut eq = 0;
    unsafe { macpieri_ratfunc_equal(c, one, &mut eq) };
    assert_eq!(eq, 1);
    unsafe {
        macpieri_ratfunc_free(c);
        macpieri_ratfunc_free(one);
        macpieri_expansion_free(e);
    }
}

#[test]
fn one_part_coefficient() {
    // C_1(u) at u = q: (t−1)/(1−q) · (1−q³)/(1−q²t)
    let u = parse("q");
    let theta = [1u32];
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { macpieri_coefficient(MacpieriFlavor::Qt, theta.as_ptr(), &(u as *const _), 1, &mut c) }, MACPIERI_OK);
    let want = parse("(t-1)/(1-q) * (1-q^3)/(1-q^2*t)");
    let mut eq = 0;
    unsafe { macpieri_ratfunc_equal(c, want, &mut eq) };
    assert_eq!(eq, 1);
    let (q, t) = (CString::new("2").unwrap(), CString::new("1/3").unwrap());
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { macpieri_ratfunc_eval(c, q.as_ptr(), t.as_ptr(), &mut s) }, MACPIERI_OK);
    // (−2/3)/(−1) · (−7)/(1−4/3) = 2/3 · 21 = 14
    assert_eq!(text(s), "14");
    unsafe {
        macpieri_ratfunc_free(u);
        macpieri_ratfunc_free(c);
        macpieri_ratfunc_free(want);
    }
}

#[test]
fn error_codes() {
    let bad = [1i64, 2];
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { macpieri_expand(bad.as_ptr(), 2, MacpieriSide::QG, &mut e) }, MACPIERI_ERR_PARAMETER);
    let msg = unsafe { CStr::from_ptr(macpieri_last_error()) }.to_str().unwrap();
    assert!(msg.contains("not a partition"), "{msg}");
    assert_eq!(unsafe { macpieri_expand(bad.as_ptr(), 2, MacpieriSide::QG, ptr::null_mut()) }, MACPIERI_ERR_NULL);
    assert_eq!(unsafe { macpieri_expand(ptr::null(), 2, MacpieriSide::QG, &mut e) }, MACPIERI_ERR_NULL);
    let garbage = CString::new("q^^").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { macpieri_ratfunc_parse(garbage.as_ptr(), &mut r) }, MACPIERI_ERR_PARSE);
    let f = parse("1/(1-q)");
    let (one, half) = (CString::new("1").unwrap(), CString::new("1/2").unwrap());
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { macpieri_ratfunc_eval(f, one.as_ptr(), half.as_ptr(), &mut s) }, MACPIERI_ERR_POLE);
    unsafe { macpieri_ratfunc_free(f) };
    let name = CString::new("nope").unwrap();
    let mut v = 0;
    assert_eq!(unsafe { macpieri_verify(name.as_ptr(), 3, 1, &mut v) }, MACPIERI_ERR_PARAMETER);
}

#[test]
fn verify_through_the_abi() {
    let name = CString::new("hook").unwrap();
    let mut v = 99;
    assert_eq!(unsafe { macpieri_verify(name.as_ptr(), 4, 1, &mut v) }, MACPIERI_OK);
    assert_eq!(v, 0);
}
