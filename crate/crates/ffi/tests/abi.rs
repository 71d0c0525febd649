use std::ffi::{c_char, CStr};
use std::ptr;

use isocx_ffi::*;

fn last_error() -> String {
    let p = isocx_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn closed_point_ranks() {
    let mut ranks = [usize::MAX; 4];
    for (p, expected) in [(2u32, [0, 0, 2, 0]), (3, [0, 0, 3, 0])] {
        let st = unsafe { isocx_closed_point_ranks(p, 2, ranks.as_mut_ptr(), ranks.len()) };
        assert_eq!(st, IsocxStatus::Ok);
        assert_eq!(ranks[..3], expected[..3]);
    }
    let st = unsafe { isocx_closed_point_ranks(2, 3, ranks.as_mut_ptr(), 2) };
    assert_eq!(st, IsocxStatus::OutOfRange);
    let st = unsafe { isocx_closed_point_ranks(6, 1, ranks.as_mut_ptr(), 4) };
    assert_eq!(st, IsocxStatus::NotPrime);
    assert!(last_error().contains("not a prime"));
    let st = unsafe { isocx_closed_point_ranks(2, 1, ptr::null_mut(), 4) };
    assert_eq!(st, IsocxStatus::NullPointer);
}

#[test]
fn membership() {
    let mut member = false;
    assert_eq!(unsafe { isocx_ideal_membership(2, 2, &mut member) }, IsocxStatus::Ok);
    assert!(member);
    assert_eq!(unsafe { isocx_ideal_membership(0, 2, &mut member) }, IsocxStatus::InvalidConfig);
    assert_eq!(unsafe { isocx_ideal_membership(2, 2, ptr::null_mut()) }, IsocxStatus::NullPointer);
}

#[test]
fn config_validation() {
    let cfg = isocx_config_new();
    unsafe {
        assert_eq!(isocx_config_validate(cfg), IsocxStatus::Ok);
        let bad = [2u32, 9];
        assert_eq!(isocx_config_set_primes(cfg, bad.as_ptr(), bad.len()), IsocxStatus::Ok);
        assert_eq!(isocx_config_validate(cfg), IsocxStatus::NotPrime);
        let good = [2u32];
        isocx_config_set_primes(cfg, good.as_ptr(), 1);
        isocx_config_set_trunc(cfg, 3);
        assert_eq!(isocx_config_validate(cfg), IsocxStatus::InvalidConfig);
        isocx_config_set_trunc(cfg, 16);
        isocx_config_set_rmax(cfg, 6);
        assert_eq!(isocx_config_validate(cfg), IsocxStatus::InvalidConfig);
        isocx_config_set_rmax(cfg, 3);
        isocx_config_set_torsion(cfg, 2);
        assert_eq!(isocx_config_validate(cfg), IsocxStatus::InvalidConfig);
        isocx_config_set_torsion(cfg, 0);
        assert_eq!(isocx_config_validate(cfg), IsocxStatus::Ok);
        assert_eq!(isocx_config_validate(ptr::null()), IsocxStatus::NullPointer);
        isocx_config_free(cfg);
        isocx_config_free(ptr::null_mut());
    }
}

#[test]
fn run_and_render() {
    let cfg = isocx_config_new();
    unsafe {
        let primes = [2u32];
        isocx_config_set_primes(cfg, primes.as_ptr(), 1);
        isocx_config_set_suites(cfg, ISOCX_SUITE_MAIN | ISOCX_SUITE_GROUPS);
        isocx_config_set_rmax(cfg, 2);
        isocx_config_set_ext(cfg, 1);
        isocx_config_set_jobs(cfg, 2);
        let mut report = ptr::null_mut();
        assert_eq!(isocx_run(cfg, &mut report), IsocxStatus::Ok);
        assert!(!report.is_null());
        let n = isocx_report_len(report);
        assert!(n > 10);
        assert!(isocx_report_all_pass(report));
        let mut pass = false;
        assert_eq!(isocx_report_case_pass(report, 0, &mut pass), IsocxStatus::Ok);
        assert!(pass);
        assert_eq!(isocx_report_case_pass(report, n, &mut pass), IsocxStatus::OutOfRange);

        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(isocx_report_render(report, false, &mut text), IsocxStatus::Ok);
        let json = CStr::from_ptr(text).to_str().unwrap().to_owned();
        isocx_string_free(text);
        assert!(json.starts_with('['));
        assert!(json.contains("\"suite\": \"groups\""));
        assert_eq!(isocx_report_render(report, true, &mut text), IsocxStatus::Ok);
        let csv = CStr::from_ptr(text).to_str().unwrap().to_owned();
        isocx_string_free(text);
        assert_eq!(csv.lines().count(), n + 1);

        isocx_report_free(report);
        isocx_config_free(cfg);
        assert_eq!(isocx_report_len(ptr::null()), 0);
        assert!(!isocx_report_all_pass(ptr::null()));
    }
}

#[test]
fn header_declares_entry_points() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/isocx.h")).unwrap();
    for name in [
        "isocx_config_new",
        "isocx_config_free",
        "isocx_run",
        "isocx_report_render",
        "isocx_string_free",
        "isocx_closed_point_ranks",
        "isocx_ideal_membership",
        "isocx_last_error_message",
        "ISOCX_STATUS_NOT_PRIME",
        "typedef struct IsocxConfig IsocxConfig",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
