use std::ffi::{CStr, CString};
use std::ptr;

use lehmerk_ffi::*;

fn gauss() -> *mut LkField {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { lk_field_new(-1, &mut f) }, LkStatus::Ok);
    f
}

#[test]
fn field_lifecycle() {
    let f = gauss();
    unsafe {
        assert_eq!(lk_field_m(f), -1);
        assert_eq!(lk_field_degree(f), 2);
        assert_eq!(lk_field_disc(f), -4);
        lk_field_free(f);
        lk_field_free(ptr::null_mut());
        assert_eq!(lk_field_m(ptr::null()), 0);
    }
}

#[test]
fn field_errors_map_to_codes() {
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(lk_field_new(12, &mut f), LkStatus::NotSquarefree);
        assert_eq!(lk_field_new(-5, &mut f), LkStatus::UnsupportedField);
        assert_eq!(lk_field_new(0, &mut f), LkStatus::InvalidArgument);
        assert_eq!(lk_field_new(-1, ptr::null_mut()), LkStatus::NullPointer);
    }
    assert!(f.is_null());
}

#[test]
fn totients() {
    let f = gauss();
    let mut v = 0u64;
    unsafe {
        for (d, want) in [(2, 2), (3, 8), (5, 16), (7, 48), (15, 128), (21, 384)] {
            assert_eq!(lk_phi(f, d, &mut v), LkStatus::Ok);
            assert_eq!(v, want);
            assert_eq!(lk_phi_oracle(f, d, 1000, &mut v), LkStatus::Ok);
            assert_eq!(v, want);
        }
        assert_eq!(lk_phi(f, 0, &mut v), LkStatus::InvalidArgument);
        assert_eq!(
            lk_phi_oracle(f, 2000, 1000, &mut v),
            LkStatus::BudgetExceeded
        );
        assert_eq!(lk_phi(ptr::null(), 3, &mut v), LkStatus::NullPointer);
        assert_eq!(lk_phi(f, 3, ptr::null_mut()), LkStatus::NullPointer);
        lk_field_free(f);
    }
}

#[test]
fn splitting_and_classify() {
    let f = gauss();
    let mut s = LkSplitting::None;
    let mut rec = std::mem::MaybeUninit::<LkRecord>::uninit();
    unsafe {
        assert_eq!(lk_splitting_type(f, 5, &mut s), LkStatus::Ok);
        assert_eq!(s, LkSplitting::Split);
        assert_eq!(lk_splitting_type(f, 2, &mut s), LkStatus::Ok);
        assert_eq!(s, LkSplitting::Ramified);
        assert_eq!(lk_splitting_type(f, 15, &mut s), LkStatus::NotPrime);

        assert_eq!(lk_classify(f, 7, rec.as_mut_ptr()), LkStatus::Ok);
        let r = rec.assume_init();
        assert_eq!((r.phi, r.phi_k, r.splitting), (6, 48, LkSplitting::Inert));
        assert!(
            r.irreducible && r.divides && r.realizable && r.normal && r.lehmer && r.strongly_lehmer
        );

        assert_eq!(
            lk_classify(f, 1, rec.as_mut_ptr()),
            LkStatus::InvalidArgument
        );
        lk_field_free(f);

        let mut q = ptr::null_mut();
        assert_eq!(lk_field_new(1, &mut q), LkStatus::Ok);
        assert_eq!(lk_splitting_type(q, 5, &mut s), LkStatus::DegreeOne);
        lk_field_free(q);
    }
}

#[test]
fn verify_reports() {
    let f = gauss();
    let suite = CString::new("embedding").unwrap();
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(
            lk_verify(f, suite.as_ptr(), 1000, 2, &mut report),
            LkStatus::Ok
        );
        assert!(lk_report_passed(report));
        assert_eq!(lk_report_checked(report), 1000);
        assert_eq!(lk_report_failure_count(report), 0);
        let text = CStr::from_ptr(lk_report_text(report)).to_str().unwrap();
        assert!(text.starts_with("suite embedding: field=-1 bound=1000"));
        lk_report_free(report);

        let bogus = CString::new("nope").unwrap();
        assert_eq!(
            lk_verify(f, bogus.as_ptr(), 10, 1, &mut report),
            LkStatus::UnknownSuite
        );
        assert_eq!(
            lk_verify(f, ptr::null(), 10, 1, &mut report),
            LkStatus::NullPointer
        );
        lk_field_free(f);
    }
}

#[test]
fn ratio_scans() {
    let mut scan = ptr::null_mut();
    unsafe {
        assert_eq!(lk_ratio_scan(3, 1, 1, 1_000_000, &mut scan), LkStatus::Ok);
        assert_eq!(lk_scan_len(scan), 1);
        assert_eq!(lk_scan_get(scan, 0), 3);
        assert_eq!(lk_scan_get(scan, 1), 0);
        assert!(lk_scan_hypothesis_holds(scan));
        lk_scan_free(scan);

        assert_eq!(lk_ratio_scan(3, 2, 1, 10_000, &mut scan), LkStatus::Ok);
        assert_eq!(lk_scan_len(scan), 0);
        assert!(!lk_scan_hypothesis_holds(scan));
        lk_scan_free(scan);

        assert_eq!(
            lk_ratio_scan(12, 1, 1, 100, &mut scan),
            LkStatus::NotSquarefree
        );
        assert_eq!(
            lk_ratio_scan(3, 1, 0, 100, &mut scan),
            LkStatus::InvalidArgument
        );
    }
}

#[test]
fn status_messages_are_static() {
    for s in [LkStatus::Ok, LkStatus::Panic, LkStatus::BudgetExceeded] {
        let msg = unsafe { CStr::from_ptr(lk_status_message(s)) };
        assert!(!msg.to_bytes().is_empty());
    }
    let v = unsafe { CStr::from_ptr(lk_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
