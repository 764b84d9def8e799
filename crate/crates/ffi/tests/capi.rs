use std::ffi::{CStr, CString};
use std::ptr;

use sl3c_geometry_ffi::*;

fn last_error() -> String {
    let p = sl3c_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn algebra_handles() {
    unsafe {
        let mut s8 = ptr::null_mut();
        assert_eq!(sl3c_algebra_symmetric_space(&mut s8), Sl3cStatus::Ok);
        assert!(sl3c_last_error_message().is_null());
        let mut dim = 0usize;
        assert_eq!(sl3c_algebra_dim(s8, &mut dim), Sl3cStatus::Ok);
        assert_eq!(dim, 8);

        let mut einstein = false;
        let mut constant = 0.0;
        assert_eq!(
            sl3c_algebra_einstein(s8, 1e-10, &mut einstein, &mut constant),
            Sl3cStatus::Ok
        );
        assert!(einstein);
        assert!((constant + 3.0).abs() < 1e-10);

        let x = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        let mut r = 0.0;
        assert_eq!(
            sl3c_algebra_ricci(s8, x.as_ptr(), 8, &mut r),
            Sl3cStatus::Ok
        );
        assert!((r + 3.0).abs() < 1e-12);

        assert_eq!(
            sl3c_algebra_ricci(s8, x.as_ptr(), 7, &mut r),
            Sl3cStatus::DimensionMismatch
        );
        assert!(last_error().contains("dimension mismatch"));

        let mut k = 0.0;
        assert_eq!(
            sl3c_algebra_sectional(s8, x.as_ptr(), x.as_ptr(), 8, &mut k),
            Sl3cStatus::DegeneratePlane
        );
        sl3c_algebra_free(s8);
    }
}

#[test]
fn algebra_from_json() {
    let text = CString::new(
        std::fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../core/data/s7_alpha0.json"
        ))
        .unwrap(),
    )
    .unwrap();
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(
            sl3c_algebra_from_json(text.as_ptr(), &mut alg),
            Sl3cStatus::Ok
        );
        let mut h = 0.0;
        assert_eq!(sl3c_algebra_cheeger(alg, &mut h), Sl3cStatus::Ok);
        assert!((h - 4.0).abs() < 1e-12);
        sl3c_algebra_free(alg);

        let jacobi = CString::new(
            r#"{"dim": 3, "structure": [[0, 1, 2, 1.0], [1, 2, 0, 1.0], [0, 2, 0, 1.0]], "gram": [[1,0,0],[0,1,0],[0,0,1]]}"#,
        )
        .unwrap();
        let mut bad = ptr::null_mut();
        assert_eq!(
            sl3c_algebra_from_json(jacobi.as_ptr(), &mut bad),
            Sl3cStatus::InvalidAlgebra
        );
        assert!(bad.is_null());
        assert!(last_error().contains("Jacobi identity violated"));

        let garbage = CString::new("not json").unwrap();
        assert_eq!(
            sl3c_algebra_from_json(garbage.as_ptr(), &mut bad),
            Sl3cStatus::InvalidAlgebra
        );
        assert!(last_error().contains("parse error"));
    }
}

#[test]
fn hypersurface_handles() {
    unsafe {
        let mut hs = ptr::null_mut();
        assert_eq!(sl3c_hypersurface_new(0.0, &mut hs), Sl3cStatus::Ok);
        let mut m = 1.0;
        assert_eq!(sl3c_hypersurface_mean_curvature(hs, &mut m), Sl3cStatus::Ok);
        assert!(m.abs() < 1e-14);

        let mut spec = [0.0; SL3C_TANGENT_DIM];
        assert_eq!(
            sl3c_hypersurface_shape_spectrum(hs, spec.as_mut_ptr()),
            Sl3cStatus::Ok
        );
        assert!(spec.windows(2).all(|w| w[0] >= w[1]));

        let x = [0.5, 0.5, 0.0, 0.5, 0.0, 0.0, 0.5];
        let (mut gauss, mut closed) = (0.0, 0.0);
        assert_eq!(
            sl3c_hypersurface_ricci_gauss(hs, x.as_ptr(), &mut gauss),
            Sl3cStatus::Ok
        );
        assert_eq!(
            sl3c_ricci_closed(0.0, x.as_ptr(), &mut closed),
            Sl3cStatus::Ok
        );
        assert!((gauss - closed).abs() < 1e-12);
        assert!((gauss + 3.0).abs() < 1e-12);

        let y = [2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        assert_eq!(
            sl3c_ricci_closed(0.0, y.as_ptr(), &mut closed),
            Sl3cStatus::NotUnit
        );

        let (u, w) = (
            [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
        );
        let mut k = 0.0;
        assert_eq!(
            sl3c_hypersurface_gauss_sectional(hs, u.as_ptr(), w.as_ptr(), &mut k),
            Sl3cStatus::Ok
        );
        assert!(k < 0.0);
        sl3c_hypersurface_free(hs);

        assert_eq!(
            sl3c_hypersurface_new(-0.1, &mut hs),
            Sl3cStatus::AngleOutOfRange
        );
        assert!(last_error().contains("outside"));
    }
}

#[test]
fn classify_report() {
    unsafe {
        let mut report = std::mem::zeroed::<Sl3cReport>();
        assert_eq!(sl3c_classify_default(0.0, &mut report), Sl3cStatus::Ok);
        assert_eq!(report.regime, Sl3cRegime::NegativeRicci);
        assert!(report.is_minimal && report.is_einstein && !report.is_horosphere_range);
        assert!((report.cheeger - 4.0).abs() < 1e-12);
        assert!(report.cross_pipeline_residual <= 1e-10);

        assert_eq!(
            sl3c_classify(std::f64::consts::FRAC_PI_2, 10, 3, &mut report),
            Sl3cStatus::Ok
        );
        assert_eq!(report.regime, Sl3cRegime::MixedRicci);
        assert!((report.mean_curvature + 4.0).abs() < 1e-12);
    }
}

#[test]
fn null_pointers_are_reported() {
    unsafe {
        assert_eq!(
            sl3c_algebra_symmetric_space(ptr::null_mut()),
            Sl3cStatus::NullPointer
        );
        assert!(last_error().contains("null"));
        let mut h = 0.0;
        assert_eq!(
            sl3c_algebra_cheeger(ptr::null(), &mut h),
            Sl3cStatus::NullPointer
        );
        assert_eq!(
            sl3c_hypersurface_mean_curvature(ptr::null(), &mut h),
            Sl3cStatus::NullPointer
        );
        assert_eq!(
            sl3c_algebra_from_json(ptr::null(), &mut ptr::null_mut()),
            Sl3cStatus::NullPointer
        );
        assert_eq!(
            sl3c_classify(0.0, 1, 1, ptr::null_mut()),
            Sl3cStatus::NullPointer
        );
        let mut hs = ptr::null_mut();
        assert_eq!(sl3c_hypersurface_new(0.3, &mut hs), Sl3cStatus::Ok);
        assert_eq!(
            sl3c_hypersurface_ricci_gauss(hs, ptr::null(), &mut h),
            Sl3cStatus::NullPointer
        );
        sl3c_hypersurface_free(hs);
        sl3c_algebra_free(ptr::null_mut());
        sl3c_hypersurface_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_per_thread() {
    unsafe {
        let mut hs = ptr::null_mut();
        assert_eq!(
            sl3c_hypersurface_new(9.0, &mut hs),
            Sl3cStatus::AngleOutOfRange
        );
    }
    std::thread::spawn(|| assert!(sl3c_last_error_message().is_null()))
        .join()
        .unwrap();
    assert!(!sl3c_last_error_message().is_null());
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/sl3c_geometry.h"
    ))
    .unwrap();
    for symbol in [
        "typedef struct Sl3cAlgebra Sl3cAlgebra;",
        "typedef struct Sl3cHypersurface Sl3cHypersurface;",
        "SL3C_STATUS_OK = 0",
        "sl3c_algebra_from_json",
        "sl3c_algebra_free",
        "sl3c_hypersurface_shape_spectrum",
        "sl3c_classify",
        "sl3c_last_error_message",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
}
