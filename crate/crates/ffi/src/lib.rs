//! C ABI over `sl3c-geometry`.
//!
//! Algebras and hypersurfaces are opaque handles created by `*_new`/`*_from_*`
//! functions and released with the matching `*_free`. Every function returns
//! an [`Sl3cStatus`]; results go through out-pointers. On failure the message
//! is available from [`sl3c_last_error_message`] on the same thread.
//! Panics are caught at the boundary and reported as `SL3C_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sl3c_geometry::engine::AlgebraDocument;
use sl3c_geometry::hypersurface::{
    build_ambient_algebra, build_hypersurface_algebra, classify_with, ricci_closed,
    DEFAULT_SAMPLES, DEFAULT_SEED,
};
use sl3c_geometry::{
    CoefficientVector, CurvatureReport, GeometryError, HypersurfaceModel, MetricLieAlgebra, Regime,
    TangentVector,
};

/// Number of coordinates of a hypersurface tangent vector.
pub const SL3C_TANGENT_DIM: usize = 7;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sl3cStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidAlgebra = 3,
    DimensionMismatch = 4,
    DegeneratePlane = 5,
    AngleOutOfRange = 6,
    NotUnit = 7,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sl3cRegime {
    NegativeRicci = 0,
    RicciNullDirection = 1,
    MixedRicci = 2,
}

impl From<Regime> for Sl3cRegime {
    fn from(r: Regime) -> Self {
        match r {
            Regime::NegativeRicci => Sl3cRegime::NegativeRicci,
            Regime::RicciNullDirection => Sl3cRegime::RicciNullDirection,
            Regime::MixedRicci => Sl3cRegime::MixedRicci,
        }
    }
}

/// Flat copy of a curvature report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl3cReport {
    pub alpha: f64,
    pub mean_curvature: f64,
    pub cheeger: f64,
    pub shape_eigenvalues: [f64; 7],
    pub ricci_min: f64,
    pub ricci_max: f64,
    pub k_sigma: f64,
    pub regime: Sl3cRegime,
    pub is_minimal: bool,
    pub is_einstein: bool,
    pub is_horosphere_range: bool,
    pub cross_pipeline_residual: f64,
}

impl From<CurvatureReport> for Sl3cReport {
    fn from(r: CurvatureReport) -> Self {
        Self {
            alpha: r.alpha,
            mean_curvature: r.mean_curvature,
            cheeger: r.cheeger,
            shape_eigenvalues: r.shape_eigenvalues,
            ricci_min: r.ricci_min,
            ricci_max: r.ricci_max,
            k_sigma: r.k_sigma,
            regime: r.regime.into(),
            is_minimal: r.is_minimal,
            is_einstein: r.is_einstein,
            is_horosphere_range: r.is_horosphere_range,
            cross_pipeline_residual: r.cross_pipeline_residual,
        }
    }
}

/// Opaque metric Lie algebra.
pub struct Sl3cAlgebra {
    inner: MetricLieAlgebra,
}

/// Opaque hypersurface `S_H` at a fixed angle.
pub struct Sl3cHypersurface {
    inner: HypersurfaceModel,
}

struct Failure {
    status: Sl3cStatus,
    message: String,
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        let status = match e {
            GeometryError::DimensionMismatch { .. } => Sl3cStatus::DimensionMismatch,
            GeometryError::DegeneratePlane(_) => Sl3cStatus::DegeneratePlane,
            GeometryError::AngleOutOfRange(_) => Sl3cStatus::AngleOutOfRange,
            GeometryError::NotUnit(_) => Sl3cStatus::NotUnit,
            GeometryError::NotSubalgebra { .. }
            | GeometryError::LinearlyDependentBasis(_)
            | GeometryError::SingularGram(_)
            | GeometryError::AsymmetricGram(_)
            | GeometryError::NotAntisymmetric { .. }
            | GeometryError::JacobiViolated(_)
            | GeometryError::InvalidAlgebra(_) => Sl3cStatus::InvalidAlgebra,
            _ => Sl3cStatus::InvalidArgument,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn null(what: &str) -> Failure {
    Failure {
        status: Sl3cStatus::NullPointer,
        message: format!("{what} is null"),
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> Sl3cStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            Sl3cStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(&failure.message);
            failure.status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_last_error(&format!("panic: {msg}"));
            Sl3cStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_slice<'a>(ptr: *const f64, len: usize, what: &str) -> Result<&'a [f64], Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

unsafe fn algebra<'a>(handle: *const Sl3cAlgebra) -> Result<&'a MetricLieAlgebra, Failure> {
    handle
        .as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| null("algebra handle"))
}

unsafe fn hypersurface<'a>(
    handle: *const Sl3cHypersurface,
) -> Result<&'a HypersurfaceModel, Failure> {
    handle
        .as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| null("hypersurface handle"))
}

unsafe fn tangent(ptr: *const f64, what: &str) -> Result<TangentVector, Failure> {
    let s = read_slice(ptr, SL3C_TANGENT_DIM, what)?;
    let mut c = [0.0; SL3C_TANGENT_DIM];
    c.copy_from_slice(s);
    Ok(TangentVector::from_coords(&c))
}

fn boxed_algebra(out: *mut *mut Sl3cAlgebra, alg: MetricLieAlgebra) -> Result<(), Failure> {
    unsafe {
        write(
            out,
            Box::into_raw(Box::new(Sl3cAlgebra { inner: alg })),
            "out",
        )
    }
}

/// Message of the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sl3c_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an algebra from its JSON description.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_algebra_from_json(
    json: *const c_char,
    out: *mut *mut Sl3cAlgebra,
) -> Sl3cStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| Failure {
            status: Sl3cStatus::InvalidArgument,
            message: format!("json is not UTF-8: {e}"),
        })?;
        let alg = AlgebraDocument::from_json(text)?.into_algebra()?;
        boxed_algebra(out, alg)
    })
}

/// The 7-dimensional algebra of the hypersurface at angle `alpha`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_algebra_hypersurface(
    alpha: f64,
    out: *mut *mut Sl3cAlgebra,
) -> Sl3cStatus {
    guard(|| boxed_algebra(out, build_hypersurface_algebra(alpha)?))
}

/// The 8-dimensional algebra of the symmetric space.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_algebra_symmetric_space(out: *mut *mut Sl3cAlgebra) -> Sl3cStatus {
    guard(|| boxed_algebra(out, build_ambient_algebra()?))
}

/// Releases an algebra. Null is ignored.
///
/// # Safety
/// `handle` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sl3c_algebra_free(handle: *mut Sl3cAlgebra) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// # Safety
/// `handle` must be a live algebra; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_algebra_dim(
    handle: *const Sl3cAlgebra,
    out: *mut usize,
) -> Sl3cStatus {
    guard(|| write(out, algebra(handle)?.dim(), "out"))
}

/// # Safety
/// `handle` must be a live algebra; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_algebra_cheeger(
    handle: *const Sl3cAlgebra,
    out: *mut f64,
) -> Sl3cStatus {
    guard(|| write(out, algebra(handle)?.cheeger(), "out"))
}

/// Ricci curvature `Ric(X)`; `x` holds `len` coefficients.
///
/// # Safety
/// `x` must point to `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_algebra_ricci(
    handle: *const Sl3cAlgebra,
    x: *const f64,
    len: usize,
    out: *mut f64,
) -> Sl3cStatus {
    guard(|| {
        let alg = algebra(handle)?;
        let x = CoefficientVector::new(read_slice(x, len, "x")?.to_vec());
        write(out, alg.ricci(&x)?, "out")
    })
}

/// Sectional curvature of the plane spanned by `x` and `y`, each `len` long.
///
/// # Safety
/// `x` and `y` must point to `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_algebra_sectional(
    handle: *const Sl3cAlgebra,
    x: *const f64,
    y: *const f64,
    len: usize,
    out: *mut f64,
) -> Sl3cStatus {
    guard(|| {
        let alg = algebra(handle)?;
        let x = CoefficientVector::new(read_slice(x, len, "x")?.to_vec());
        let y = CoefficientVector::new(read_slice(y, len, "y")?.to_vec());
        write(out, alg.sectional(&x, &y)?, "out")
    })
}

/// Whether the Ricci eigenvalues agree within `tol`, and their mean.
///
/// # Safety
/// `handle` must be a live algebra; both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_algebra_einstein(
    handle: *const Sl3cAlgebra,
    tol: f64,
    is_einstein: *mut bool,
    constant: *mut f64,
) -> Sl3cStatus {
    guard(|| {
        let alg = algebra(handle)?;
        if tol.is_nan() || tol <= 0.0 {
            return Err(GeometryError::InvalidArgument("tol must be positive".into()).into());
        }
        let (ok, mean) = alg.einstein_check(tol);
        write(is_einstein, ok, "is_einstein")?;
        write(constant, mean, "constant")
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_hypersurface_new(
    alpha: f64,
    out: *mut *mut Sl3cHypersurface,
) -> Sl3cStatus {
    guard(|| {
        let model = HypersurfaceModel::new(alpha)?;
        write(
            out,
            Box::into_raw(Box::new(Sl3cHypersurface { inner: model })),
            "out",
        )
    })
}

/// Releases a hypersurface. Null is ignored.
///
/// # Safety
/// `handle` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sl3c_hypersurface_free(handle: *mut Sl3cHypersurface) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// # Safety
/// `handle` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_hypersurface_mean_curvature(
    handle: *const Sl3cHypersurface,
    out: *mut f64,
) -> Sl3cStatus {
    guard(|| write(out, hypersurface(handle)?.mean_curvature(), "out"))
}

/// Eigenvalues of the shape operator, descending, into `out[0..7]`.
///
/// # Safety
/// `out` must have room for 7 doubles.
#[no_mangle]
pub unsafe extern "C" fn sl3c_hypersurface_shape_spectrum(
    handle: *const Sl3cHypersurface,
    out: *mut f64,
) -> Sl3cStatus {
    guard(|| {
        let spec = hypersurface(handle)?.shape_spectrum();
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(spec.as_ptr(), out, spec.len());
        Ok(())
    })
}

/// Ricci curvature from the Gauss equation; `x` holds 7 coordinates
/// `(Re a, Im a, Re b, Im b, Re c, Im c, t)`.
///
/// # Safety
/// `x` must point to 7 doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_hypersurface_ricci_gauss(
    handle: *const Sl3cHypersurface,
    x: *const f64,
    out: *mut f64,
) -> Sl3cStatus {
    guard(|| {
        let model = hypersurface(handle)?;
        write(out, model.ricci_gauss(&tangent(x, "x")?), "out")
    })
}

/// Sectional curvature from the Gauss equation.
///
/// # Safety
/// `x` and `y` must point to 7 doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_hypersurface_gauss_sectional(
    handle: *const Sl3cHypersurface,
    x: *const f64,
    y: *const f64,
    out: *mut f64,
) -> Sl3cStatus {
    guard(|| {
        let model = hypersurface(handle)?;
        write(
            out,
            model.gauss_sectional(&tangent(x, "x")?, &tangent(y, "y")?)?,
            "out",
        )
    })
}

/// Closed-form Ricci curvature of a unit vector `x` (7 coordinates).
///
/// # Safety
/// `x` must point to 7 doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_ricci_closed(alpha: f64, x: *const f64, out: *mut f64) -> Sl3cStatus {
    guard(|| write(out, ricci_closed(alpha, &tangent(x, "x")?)?, "out"))
}

/// Full report at angle `alpha`; `samples` random unit vectors seeded by
/// `seed` feed the cross-pipeline residual.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_classify(
    alpha: f64,
    samples: usize,
    seed: u64,
    out: *mut Sl3cReport,
) -> Sl3cStatus {
    guard(|| write(out, classify_with(alpha, samples, seed)?.into(), "out"))
}

/// [`sl3c_classify`] with 1000 samples and seed 42.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl3c_classify_default(alpha: f64, out: *mut Sl3cReport) -> Sl3cStatus {
    sl3c_classify(alpha, DEFAULT_SAMPLES, DEFAULT_SEED, out)
}
