//! Exercises the C ABI surface through the exported unsafe functions, the
//! same way a C caller would.

use std::ffi::{c_char, CStr};
use std::ptr;

use twobridge_ffi::*;

unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    tb_string_free(p);
    s
}

#[test]
fn knot_lifecycle_and_invariants() {
    unsafe {
        let mut k: *mut TbKnot = ptr::null_mut();
        assert_eq!(tb_knot_new(15, 11, &mut k), TbStatus::Ok);
        assert_eq!(tb_knot_p(k), 15);
        assert_eq!(tb_knot_q(k), 4); // canonical representative of 11
        assert_eq!(tb_knot_is_trivial(k), 0);

        let mut cr = 0i64;
        assert_eq!(tb_knot_crossing_number(k, &mut cr), TbStatus::Ok);
        assert_eq!(cr, 7);

        let mut alex: *mut c_char = ptr::null_mut();
        assert_eq!(tb_knot_alexander(k, &mut alex), TbStatus::Ok);
        assert_eq!(take_string(alex), "4t^2-7t+4");

        tb_knot_free(k);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut k: *mut TbKnot = ptr::null_mut();
        assert_eq!(tb_knot_new(4, 1, &mut k), TbStatus::LinkNotKnot);
        assert!(k.is_null());
        assert_eq!(tb_knot_new(9, 3, &mut k), TbStatus::NotReduced);
        assert_eq!(tb_knot_new(-3, 1, &mut k), TbStatus::InvalidInput);
        assert_eq!(tb_knot_new(3, 1, ptr::null_mut()), TbStatus::NullArgument);

        // trivial knot: crossing number is a domain error
        assert_eq!(tb_knot_new(1, 0, &mut k), TbStatus::Ok);
        let mut cr = 0i64;
        assert_eq!(tb_knot_crossing_number(k, &mut cr), TbStatus::DomainError);
        tb_knot_free(k);

        tb_knot_free(ptr::null_mut()); // no-op
        tb_string_free(ptr::null_mut()); // no-op
    }
}

#[test]
fn classify_and_oracle() {
    unsafe {
        let mut k: *mut TbKnot = ptr::null_mut();
        assert_eq!(tb_knot_new(33, 5, &mut k), TbStatus::Ok);
        let mut verdict = TbVerdict::Undecided;
        let mut reasons: *mut c_char = ptr::null_mut();
        assert_eq!(
            tb_knot_classify(k, 0, 0, &mut verdict, &mut reasons),
            TbStatus::Ok
        );
        assert_eq!(verdict, TbVerdict::NonMinimal);
        assert_eq!(take_string(reasons), "OrsWitness");

        assert_eq!(tb_knot_oracle(k, &mut verdict), TbStatus::Ok);
        assert_eq!(verdict, TbVerdict::NonMinimal);
        tb_knot_free(k);

        assert_eq!(tb_knot_new(7, 3, &mut k), TbStatus::Ok);
        assert_eq!(tb_knot_classify(k, 0, 0, &mut verdict, ptr::null_mut()), TbStatus::Ok);
        assert_eq!(verdict, TbVerdict::Minimal);
        tb_knot_free(k);
    }
}

#[test]
fn version_string() {
    unsafe {
        let v = CStr::from_ptr(tb_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}
