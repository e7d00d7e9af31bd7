use std::ffi::{CStr, CString};
use std::ptr;

use tridisk_ffi::*;

fn last_error() -> String {
    let p = td_last_error_message();
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { td_string_free(p) };
    s
}

#[test]
fn tutte_count_into_buffer() {
    let mut buf = [0 as std::ffi::c_char; 16];
    let mut needed = 0usize;
    let st = unsafe { td_count_triangulations(6, buf.as_mut_ptr(), buf.len(), &mut needed) };
    assert_eq!(st, TdStatus::Ok);
    assert_eq!(needed, 8);
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(), "1821600");

    let st = unsafe { td_count_triangulations(6, buf.as_mut_ptr(), 3, &mut needed) };
    assert_eq!(st, TdStatus::BufferTooSmall);
    assert_eq!(needed, 8);
}

#[test]
fn complex_lifecycle() {
    let mut y: *mut TdComplex = ptr::null_mut();
    assert_eq!(unsafe { td_complex_sample(9, 1.0, 3, &mut y) }, TdStatus::Ok);
    assert_eq!(unsafe { td_complex_n(y) }, 9);
    assert_eq!(unsafe { td_complex_face_count(y) }, 84);

    let mut has = false;
    assert_eq!(unsafe { td_complex_contains_face(y, 9, 1, 4, &mut has) }, TdStatus::Ok);
    assert!(has);

    let dir = tempfile::tempdir().unwrap();
    let path = CString::new(dir.path().join("y.txt").to_str().unwrap()).unwrap();
    assert_eq!(unsafe { td_complex_write(y, path.as_ptr()) }, TdStatus::Ok);
    let mut z: *mut TdComplex = ptr::null_mut();
    assert_eq!(unsafe { td_complex_read(path.as_ptr(), &mut z) }, TdStatus::Ok);
    assert_eq!(unsafe { td_complex_face_count(z) }, 84);

    let (mut found, mut k) = (-1, 99usize);
    let st = unsafe { td_find_disk(z, 1, 2, 3, 0, 1000, &mut found, &mut k) };
    assert_eq!((st, found, k), (TdStatus::Ok, 1, 0));

    let (mut yes, mut ex) = (0, 7usize);
    assert_eq!(unsafe { td_certify(y, 0, 1000, &mut yes, &mut ex) }, TdStatus::Ok);
    assert_eq!((yes, ex), (1, 0));

    let mut frac = -1.0;
    assert_eq!(unsafe { td_triangulated_fraction(y, 0, 1000, 5, 1, &mut frac) }, TdStatus::Ok);
    assert_eq!(frac, 1.0);

    unsafe {
        td_complex_free(y);
        td_complex_free(z);
        td_complex_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_reported() {
    let mut y: *mut TdComplex = ptr::null_mut();
    assert_eq!(unsafe { td_complex_sample(9, 2.0, 3, &mut y) }, TdStatus::InvalidArgument);
    assert!(y.is_null());
    assert!(last_error().contains("probability"));

    let missing = CString::new("/nonexistent/dir/y.txt").unwrap();
    assert_eq!(unsafe { td_complex_read(missing.as_ptr(), &mut y) }, TdStatus::Io);

    let mut found = 0;
    let st = unsafe { td_find_disk(ptr::null(), 1, 2, 3, 0, 10, &mut found, ptr::null_mut()) };
    assert_eq!(st, TdStatus::NullPointer);
}

#[test]
fn budget_exhaustion_is_distinct() {
    let mut y: *mut TdComplex = ptr::null_mut();
    assert_eq!(unsafe { td_complex_sample(14, 0.5, 1, &mut y) }, TdStatus::Ok);
    let mut found = 0;
    let st = unsafe { td_find_disk(y, 1, 2, 3, 5, 1, &mut found, ptr::null_mut()) };
    assert_ne!(st, TdStatus::Ok);
    unsafe { td_complex_free(y) };
}

#[test]
fn phi_and_janson() {
    let faces = [1u32, 2, 4, 1, 3, 4];
    let mut twice = 99i64;
    assert_eq!(unsafe { td_phi(faces.as_ptr(), 2, &mut twice) }, TdStatus::Ok);
    assert_eq!(twice, 0);
    assert_eq!(unsafe { td_phi(faces.as_ptr(), 0, &mut twice) }, TdStatus::InvalidArgument);
    let b = td_janson_bound(2.0, 1.0);
    assert!((b - ((-1f64).exp() + (-2f64).exp())).abs() < 1e-15);
    assert_eq!(td_janson_bound(0.0, 0.0), 1.0);
    let v = unsafe { CStr::from_ptr(td_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/tridisk.h");
    let Ok(out) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c", header])
        .output()
    else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
