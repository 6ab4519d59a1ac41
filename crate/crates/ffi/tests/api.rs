use std::ffi::{c_char, CStr, CString};
use std::ptr;

use schroder_maj_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    sm_string_free(s);
    out
}

unsafe fn render(p: *const SmPoly) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(sm_poly_to_string(p, &mut s), SmStatus::Ok);
    take_string(s)
}

unsafe fn last_error() -> String {
    CStr::from_ptr(sm_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn qbinom_and_accessors() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(sm_qbinom(4, 2, &mut p), SmStatus::Ok);
        assert_eq!(render(p), "1 + q + 2*q^2 + q^3 + q^4");
        let (mut lo, mut hi, mut c2) = (0, 0, 0);
        assert_eq!(sm_poly_degree_range(p, &mut lo, &mut hi), SmStatus::Ok);
        assert_eq!((lo, hi), (0, 4));
        assert_eq!(sm_poly_coeff(p, 2, &mut c2), SmStatus::Ok);
        assert_eq!(c2, 2);
        let mut at_one = ptr::null_mut();
        assert_eq!(sm_poly_eval_at_one(p, &mut at_one), SmStatus::Ok);
        assert_eq!(take_string(at_one), "6");
        let mut parsed = ptr::null_mut();
        assert_eq!(sm_poly_parse(c("q^4 + q^3 + 2*q^2 + q + 1").as_ptr(), &mut parsed), SmStatus::Ok);
        let mut eq = false;
        assert_eq!(sm_poly_equal(p, parsed, &mut eq), SmStatus::Ok);
        assert!(eq);
        sm_poly_free(p);
        sm_poly_free(parsed);
    }
}

#[test]
fn enumeration_matches_closed_forms() {
    unsafe {
        for order in ["E>D>N", "E<D<N"] {
            let (mut e, mut f, mut empty) = (ptr::null_mut(), ptr::null_mut(), true);
            let o = c(order);
            assert_eq!(sm_schroeder_maj_enum(1, 5, 4, 2, o.as_ptr(), &mut e), SmStatus::Ok);
            assert_eq!(sm_schroeder_maj_closed(1, 5, 4, 2, o.as_ptr(), &mut f, &mut empty), SmStatus::Ok);
            assert!(!empty);
            assert_eq!(render(e), render(f));
            sm_poly_free(e);
            sm_poly_free(f);
        }
        let (mut e, mut f) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(
            sm_tableau_stat_enum(c("inc").as_ptr(), c("5,4/2").as_ptr(), 2, c("maj").as_ptr(), &mut e),
            SmStatus::Ok
        );
        assert_eq!(sm_inc_maj_closed(2, 5, 4, 2, &mut f, ptr::null_mut()), SmStatus::Ok);
        assert_eq!(render(e), render(f));
        sm_poly_free(e);
        sm_poly_free(f);

        let (mut e, mut f) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(
            sm_tableau_stat_enum(c("rinc").as_ptr(), c("4,3/1").as_ptr(), 2, c("amaj").as_ptr(), &mut e),
            SmStatus::Ok
        );
        assert_eq!(sm_rinc_closed(1, 4, 3, 2, true, &mut f, ptr::null_mut()), SmStatus::Ok);
        assert_eq!(render(e), render(f));
        sm_poly_free(e);
        sm_poly_free(f);

        let (mut e, mut f) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(
            sm_tableau_stat_enum(c("syt").as_ptr(), c("3,3,1/2").as_ptr(), 0, c("maj").as_ptr(), &mut e),
            SmStatus::Ok
        );
        assert_eq!(sm_skew_syt_closed(c("3,3,1/2").as_ptr(), &mut f), SmStatus::Ok);
        assert_eq!(render(e), render(f));
        sm_poly_free(e);
        sm_poly_free(f);
    }
}

#[test]
fn bijections_by_name() {
    unsafe {
        let cases = [
            ("phi", ". 2 3 4 / 1 2 3", "NDDE"),
            ("chi", ". . 1 2 5 / 2 3 4 5", ". . 1 / 2 4 5 / 3"),
            ("rho", "1 2 4 5 6 / 2 3 4 6", "1 2 4 5 6 / 2 3 6"),
            ("g", ". 1 4 5 / . 3 7 / 2 / 6", "1 3 4 5 / 2 7 / 6"),
        ];
        for (map, input, expected) in cases {
            let mut out = ptr::null_mut();
            assert_eq!(sm_bijection_apply(c(map).as_ptr(), c(input).as_ptr(), &mut out), SmStatus::Ok, "{map}");
            assert_eq!(take_string(out), expected);
        }
        let mut out = ptr::null_mut();
        assert_eq!(sm_bijection_apply(c("rinc_to_syt").as_ptr(), c("1 2 / 1").as_ptr(), &mut out), SmStatus::Ok);
        sm_string_free(out);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(sm_poly_parse(c("q^^2").as_ptr(), &mut p), SmStatus::Parse);
        assert!(!last_error().is_empty());
        assert!(p.is_null());

        assert_eq!(sm_qbinom(3, 1, ptr::null_mut()), SmStatus::NullPointer);
        assert_eq!(sm_poly_to_string(ptr::null(), &mut ptr::null_mut()), SmStatus::NullPointer);

        let mut out = ptr::null_mut();
        let status = sm_bijection_apply(c("rho").as_ptr(), c("2 1 / 3 4").as_ptr(), &mut out);
        assert_eq!(status, SmStatus::NotInFamily);
        assert!(last_error().contains("not in family"), "{}", last_error());
        assert_eq!(sm_bijection_apply(c("tau").as_ptr(), c("1").as_ptr(), &mut out), SmStatus::InvalidArgument);
        assert_eq!(sm_skew_syt_closed(c("2,3").as_ptr(), &mut p), SmStatus::InvalidShape);

        let mut z = ptr::null_mut();
        assert_eq!(sm_qbinom(2, 5, &mut z), SmStatus::Ok);
        assert!(sm_last_error().is_null());
        let (mut lo, mut hi) = (0, 0);
        assert_eq!(sm_poly_degree_range(z, &mut lo, &mut hi), SmStatus::InvalidArgument);
        sm_poly_free(z);

        let mut big = ptr::null_mut();
        assert_eq!(sm_poly_parse(c("100000000000000000000*q").as_ptr(), &mut big), SmStatus::Ok);
        let mut coeff = 0;
        assert_eq!(sm_poly_coeff(big, 1, &mut coeff), SmStatus::Overflow);
        sm_poly_free(big);
    }
}
