use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use spinrep_ffi::*;

#[test]
fn group_handles() {
    unsafe {
        let name = CString::new("G81").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(spinrep_group_new(name.as_ptr(), &mut g), SpinrepStatus::Ok);
        let (mut order, mut classes) = (0, 0);
        assert_eq!(spinrep_group_order(g, &mut order), SpinrepStatus::Ok);
        assert_eq!(
            spinrep_group_class_count(g, &mut classes),
            SpinrepStatus::Ok
        );
        assert_eq!(order, 81);
        assert!(classes > 0);
        spinrep_group_free(g);

        let bad = CString::new("G80").unwrap();
        assert_eq!(
            spinrep_group_new(bad.as_ptr(), &mut g),
            SpinrepStatus::UnknownGroup
        );
        let not_utf8 = [0xffu8, 0];
        assert_eq!(
            spinrep_group_new(not_utf8.as_ptr().cast(), &mut g),
            SpinrepStatus::InvalidUtf8
        );
    }
}

#[test]
fn chartable_matches_the_library() {
    let lib = spinrep::spinrep::spin_character_table().unwrap();
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(spinrep_chartable_new(&mut t), SpinrepStatus::Ok);
        let (mut rows, mut cols) = (0, 0);
        assert_eq!(
            spinrep_chartable_shape(t, &mut rows, &mut cols),
            SpinrepStatus::Ok
        );
        assert_eq!((rows, cols), (35, 35));
        for (i, row) in lib.rows.iter().enumerate() {
            let (mut name, mut eps, mut mu, mut dim) = (ptr::null(), 0, 0, 0);
            assert_eq!(
                spinrep_chartable_row(t, i, &mut name, &mut eps, &mut mu, &mut dim),
                SpinrepStatus::Ok
            );
            assert_eq!(CStr::from_ptr(name).to_str().unwrap(), row.name);
            assert_eq!(
                (eps, mu, dim),
                (row.spin_type.eps, row.spin_type.mu, row.dim)
            );
            for (j, want) in row.character.values().iter().enumerate() {
                let mut v = ptr::null_mut();
                assert_eq!(spinrep_chartable_value(t, i, j, &mut v), SpinrepStatus::Ok);
                assert_eq!(CStr::from_ptr(v).to_str().unwrap(), want.to_string());
                spinrep_string_free(v);
            }
        }
        let (mut rep, mut size) = (ptr::null(), 0);
        assert_eq!(
            spinrep_chartable_class(t, 0, &mut rep, &mut size),
            SpinrepStatus::Ok
        );
        assert_eq!((CStr::from_ptr(rep).to_str().unwrap(), size), ("1", 1));
        assert_eq!(
            spinrep_chartable_class(t, 35, &mut rep, &mut size),
            SpinrepStatus::OutOfRange
        );
        spinrep_chartable_free(t);
    }
}

#[test]
fn verify_through_the_abi() {
    unsafe {
        let (mut passed, mut failed) = (0, 0);
        let name = CString::new("characters").unwrap();
        assert_eq!(
            spinrep_verify(name.as_ptr(), &mut passed, &mut failed),
            SpinrepStatus::Ok
        );
        assert_eq!((passed, failed), (1, 0));
        let name = CString::new("nope").unwrap();
        assert_eq!(
            spinrep_verify(name.as_ptr(), &mut passed, &mut failed),
            SpinrepStatus::UnknownCheck
        );
        let msg = CStr::from_ptr(spinrep_status_message(SpinrepStatus::UnknownCheck));
        assert_eq!(msg.to_str().unwrap(), "unknown check name");
    }
}

/// Compiles tests/c/smoke.c against the generated header and the static
/// library next to this test binary.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libspinrep_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let out = tempfile::tempdir().unwrap();
    let bin = out.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&bin).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8(run.stdout).unwrap(), "ok\n");
}
