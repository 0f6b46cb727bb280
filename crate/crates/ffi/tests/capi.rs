use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use froblab_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(froblab_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn scalar_calls_match_the_library() {
    let mut f = 0i64;
    assert_eq!(
        unsafe { froblab_frobenius_number(5, 7, 8, &mut f) },
        FroblabStatus::Ok
    );
    assert_eq!(f, 11);
    assert_eq!(
        unsafe { froblab_frobenius_number(6, 10, 15, &mut f) },
        FroblabStatus::Ok
    );
    assert_eq!(f, 29);
    assert_eq!(
        unsafe { froblab_frobenius_two(5, 7, &mut f) },
        FroblabStatus::Ok
    );
    assert_eq!(f, 23);

    let mut n = 0u64;
    assert_eq!(
        unsafe { froblab_n_exact(5, 7, 8, &mut n) },
        FroblabStatus::Ok
    );
    assert_eq!(n, froblab::nfunc::n_exact(5, 7, 8).unwrap());
    let mut t = 0u64;
    assert_eq!(
        unsafe { froblab_reduce_to_unit(5, 7, 8, &mut t) },
        FroblabStatus::Ok
    );
    assert_eq!((7 * t) % 5, 8 % 5);
    let mut nu = 0u64;
    assert_eq!(unsafe { froblab_n_unit(5, t, &mut nu) }, FroblabStatus::Ok);
    assert_eq!(nu, n);

    let mut inv = 0u64;
    assert_eq!(
        unsafe { froblab_mod_inv(3, 7, &mut inv) },
        FroblabStatus::Ok
    );
    assert_eq!(inv, 5);
    assert_eq!(froblab_gcd(84, 36), 12);

    let gens = [5u64, 7, 8];
    let mut rep = true;
    assert_eq!(
        unsafe { froblab_is_representable(11, gens.as_ptr(), 3, &mut rep) },
        FroblabStatus::Ok
    );
    assert!(!rep);
    assert_eq!(
        unsafe { froblab_is_representable(12, gens.as_ptr(), 3, &mut rep) },
        FroblabStatus::Ok
    );
    assert!(rep);
}

#[test]
fn errors_map_to_status_codes() {
    let mut f = 0i64;
    assert_eq!(
        unsafe { froblab_frobenius_number(4, 6, 8, &mut f) },
        FroblabStatus::NotCoprime
    );
    assert!(last_error().contains('2'), "{}", last_error());
    assert_eq!(
        unsafe { froblab_frobenius_number(0, 6, 7, &mut f) },
        FroblabStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { froblab_frobenius_number(5, 7, 8, ptr::null_mut()) },
        FroblabStatus::NullPointer
    );
    assert_eq!(
        unsafe { froblab_frobenius_number(5, 7, 3_000_001, &mut f) },
        FroblabStatus::OutOfRange
    );

    let mut inv = 0u64;
    assert_eq!(
        unsafe { froblab_mod_inv(4, 8, &mut inv) },
        FroblabStatus::NotInvertible
    );
    let mut n = 0u64;
    assert_eq!(
        unsafe { froblab_n_exact(6, 2, 4, &mut n) },
        FroblabStatus::NotCoverable
    );
    let mut gap = 0u64;
    assert_eq!(
        unsafe { froblab_max_gap(6, 2, 4, &mut gap) },
        FroblabStatus::DuplicateMultiple
    );

    let mut rep = false;
    assert_eq!(
        unsafe { froblab_is_representable(3, ptr::null(), 2, &mut rep) },
        FroblabStatus::NullPointer
    );
    assert_eq!(
        unsafe { froblab_is_representable(3, ptr::null(), 0, &mut rep) },
        FroblabStatus::InvalidArgument
    );
}

#[test]
fn residue_table_handle() {
    let gens = [7u64, 8];
    let mut table = ptr::null_mut();
    assert_eq!(
        unsafe { froblab_residue_table_new(5, gens.as_ptr(), 2, &mut table) },
        FroblabStatus::Ok
    );
    assert!(!table.is_null());
    unsafe {
        assert_eq!(froblab_residue_table_modulus(table), 5);
        let mut f = 0i64;
        assert_eq!(
            froblab_residue_table_frobenius(table, &mut f),
            FroblabStatus::Ok
        );
        assert_eq!(f, 11);
        let expected = froblab::frobenius::apery_table(5, &gens).unwrap();
        for r in 0..5 {
            let mut e = 0u64;
            assert_eq!(
                froblab_residue_table_entry(table, r, &mut e),
                FroblabStatus::Ok
            );
            assert_eq!(e, expected.entry(r));
        }
        froblab_residue_table_free(table);
        froblab_residue_table_free(ptr::null_mut());
        assert_eq!(froblab_residue_table_modulus(ptr::null()), 0);
        let mut e = 0u64;
        assert_eq!(
            froblab_residue_table_entry(ptr::null(), 0, &mut e),
            FroblabStatus::NullPointer
        );
    }
}

#[test]
fn bound_report_handle() {
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { froblab_bound_report_new(1000, 1001, 1999, &mut report) },
        FroblabStatus::Ok
    );
    let expected = froblab::nfunc::cf_n_bounds(1000, 1001, 1999).unwrap();
    unsafe {
        assert_eq!(froblab_bound_report_n(report), expected.n_exact);
        assert_eq!(froblab_bound_report_t(report), expected.t);
        let rows = froblab_bound_report_row_count(report);
        assert_eq!(rows, expected.per_convergent.len());
        for (i, want) in expected.per_convergent.iter().enumerate() {
            let mut row = FroblabConvergentRow::default();
            assert_eq!(
                froblab_bound_report_row(report, i, &mut row),
                FroblabStatus::Ok
            );
            assert_eq!((row.p, row.q), (want.p, want.q));
            assert_eq!(row.delta_num as u128, want.delta.num());
            assert_eq!(row.delta_den as u128, want.delta.den());
            assert_eq!(row.gap_bound_num as u128, want.gap_bound.num());
            assert_eq!(row.gap_bound_den as u128, want.gap_bound.den());
            // δ ≤ 1/q² for every convergent.
            assert!((row.delta_num as u128) * (row.q as u128).pow(2) <= row.delta_den as u128);
        }
        let mut row = FroblabConvergentRow::default();
        assert_eq!(
            froblab_bound_report_row(report, rows, &mut row),
            FroblabStatus::OutOfRange
        );
        froblab_bound_report_free(report);
    }
}

#[test]
fn lab_structs() {
    let mut p = FroblabProp1Interval::default();
    assert_eq!(
        unsafe { froblab_prop1_interval(3, 4, 5, &mut p) },
        FroblabStatus::Ok
    );
    assert_eq!(p.f, 2);
    assert!(!p.paper_lower_ok);
    assert!(p.corrected_lower_ok && p.upper_ok);

    let mut r = FroblabScanRecord::default();
    assert_eq!(
        unsafe { froblab_bez_test(1057, 1080, 1103, &mut r) },
        FroblabStatus::Ok
    );
    assert_eq!(r.f, 581_327);
    assert!(r.bez_violated && r.near_progression);
    assert!((r.f as f64) > r.bez_bound);

    let mut d = FroblabDensityResult::default();
    assert_eq!(
        unsafe { froblab_density_scan(64, 0.25, u64::MAX, 0, &mut d) },
        FroblabStatus::Ok
    );
    assert!(d.exhaustive);
    assert_eq!(d.pairs_tested, froblab::lab::admissible_pairs(64));
    assert_eq!(
        unsafe { froblab_density_scan(64, 0.75, 10, 0, &mut d) },
        FroblabStatus::InvalidArgument
    );

    let mut w = FroblabWindowPair::default();
    assert_eq!(
        unsafe { froblab_window_search(1000, 0.1, 0.8, 0.05, &mut w) },
        FroblabStatus::Ok
    );
    let want = froblab::lab::window_search(1000, 0.1, 0.8, 0.05).unwrap();
    assert_eq!(w.found, want.is_some());
    if let Some((b, c)) = want {
        assert_eq!((w.b, w.c), (b, c));
        assert_eq!((b * c) % 1000, 1);
    }
}

#[test]
fn pair_list_handle() {
    let mut list = ptr::null_mut();
    assert_eq!(
        unsafe { froblab_inverse_pairs(1000, &mut list) },
        FroblabStatus::Ok
    );
    let want = froblab::lab::inverse_pairs(1000);
    unsafe {
        assert_eq!(froblab_pair_list_len(list), want.len());
        for (i, &(b, c)) in want.iter().enumerate() {
            let (mut x, mut y) = (0u64, 0u64);
            assert_eq!(
                froblab_pair_list_get(list, i, &mut x, &mut y),
                FroblabStatus::Ok
            );
            assert_eq!((x, y), (b, c));
        }
        let (mut x, mut y) = (0u64, 0u64);
        assert_eq!(
            froblab_pair_list_get(list, want.len(), &mut x, &mut y),
            FroblabStatus::OutOfRange
        );
        assert_eq!(
            froblab_pair_list_get(list, 0, &mut x, ptr::null_mut()),
            FroblabStatus::NullPointer
        );
        froblab_pair_list_free(list);
    }
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(froblab_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn header() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/froblab.h");
    std::fs::read_to_string(path).expect("header is generated by the build script")
}

#[test]
fn header_declares_the_surface() {
    let h = header();
    for name in [
        "froblab_frobenius_number",
        "froblab_frobenius_two",
        "froblab_is_representable",
        "froblab_n_exact",
        "froblab_reduce_to_unit",
        "froblab_n_unit",
        "froblab_max_gap",
        "froblab_mod_inv",
        "froblab_gcd",
        "froblab_residue_table_new",
        "froblab_residue_table_free",
        "froblab_bound_report_new",
        "froblab_bound_report_row",
        "froblab_bound_report_free",
        "froblab_prop1_interval",
        "froblab_bez_test",
        "froblab_density_scan",
        "froblab_window_search",
        "froblab_inverse_pairs",
        "froblab_pair_list_free",
        "froblab_last_error_message",
        "froblab_version",
        "typedef struct FroblabResidueTable FroblabResidueTable;",
        "typedef struct FroblabBoundReport FroblabBoundReport;",
        "typedef struct FroblabPairList FroblabPairList;",
        "FROBLAB_STATUS_OK = 0",
        "FROBLAB_STATUS_NOT_COPRIME = 2",
        "FROBLAB_STATUS_PANIC = 99",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}

/// Directory holding the libraries built alongside this test binary.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

fn find_cc() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok().map(|_| cc)
}

#[test]
fn c_program_links_against_the_static_library() {
    let Some(cc) = find_cc() else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let lib = artifact_dir().join("libfroblab_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "smoke exited with {:?}", out.status);
    let line = String::from_utf8(out.stdout).unwrap();
    let pairs = froblab::lab::inverse_pairs(1000).len();
    let n = froblab::nfunc::n_exact(5, 7, 8).unwrap();
    assert_eq!(line.trim(), format!("29 {n} 11 0 {pairs} err"));
}
