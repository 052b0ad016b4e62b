//! C ABI over `minkasym`.
//!
//! Polygons and gauges are opaque heap handles created by `ma_*_new` and
//! released by the matching `ma_*_free`. Every fallible call returns an
//! [`MaStatus`]; on failure the message is kept per thread and can be read
//! with [`ma_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use minkasym::complete;
use minkasym::families::{self, FamilySpec};
use minkasym::gauges;
use minkasym::geom::{ConvexPolygon, GaugeBody, Vec2};
use minkasym::symm;
use minkasym::GeomError;

/// Result codes. `MA_STATUS_OK` is zero; everything else is an error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaStatus {
    Ok = 0,
    NullPointer = 1,
    DegenerateInput = 2,
    EmptyIntersection = 3,
    SingularMatrix = 4,
    AsymmetricGauge = 5,
    OriginNotInterior = 6,
    NotSymmetric = 7,
    LpFailure = 8,
    NoTriple = 9,
    UnclassifiedPoint = 10,
    Domain = 11,
    InconsistentCharacterization = 12,
    Parse = 13,
    Io = 14,
    BufferTooSmall = 15,
    Panic = 16,
}

/// Convex polygon handle.
pub struct MaPolygon(ConvexPolygon);

/// Gauge body handle; always centrally symmetric.
pub struct MaGauge(GaugeBody);

/// Radii, diameter, width and completeness flags of a body in a gauge.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct MaReport {
    pub inradius: f64,
    pub circumradius: f64,
    pub diameter: f64,
    pub width: f64,
    pub asymmetry: f64,
    pub dw_ratio: f64,
    pub pseudo_complete: bool,
    pub complete: bool,
    pub constant_width: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn status_of(e: &GeomError) -> MaStatus {
    match e {
        GeomError::DegenerateInput => MaStatus::DegenerateInput,
        GeomError::EmptyIntersection => MaStatus::EmptyIntersection,
        GeomError::SingularMatrix(_) => MaStatus::SingularMatrix,
        GeomError::AsymmetricGauge => MaStatus::AsymmetricGauge,
        GeomError::OriginNotInterior => MaStatus::OriginNotInterior,
        GeomError::NotSymmetric => MaStatus::NotSymmetric,
        GeomError::LpFailure(_) => MaStatus::LpFailure,
        GeomError::NoTriple => MaStatus::NoTriple,
        GeomError::UnclassifiedPoint { .. } => MaStatus::UnclassifiedPoint,
        GeomError::Domain(_) => MaStatus::Domain,
        GeomError::InconsistentCharacterization(_) => MaStatus::InconsistentCharacterization,
        GeomError::Parse(_) => MaStatus::Parse,
        GeomError::Io(_) => MaStatus::Io,
    }
}

fn fail(status: MaStatus, msg: String) -> MaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

fn guard(f: impl FnOnce() -> Result<(), MaStatus>) -> MaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MaStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(MaStatus::Panic, "internal panic".into()),
    }
}

fn check<T>(r: minkasym::Result<T>) -> Result<T, MaStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn null(what: &str) -> MaStatus {
    fail(MaStatus::NullPointer, format!("{what} is null"))
}

unsafe fn points(xy: *const f64, n: usize) -> Result<Vec<Vec2>, MaStatus> {
    if xy.is_null() {
        return Err(null("xy"));
    }
    let flat = std::slice::from_raw_parts(xy, 2 * n);
    Ok(flat.chunks_exact(2).map(|c| Vec2::new(c[0], c[1])).collect())
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, MaStatus> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(MaStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn polygon<'a>(p: *const MaPolygon) -> Result<&'a ConvexPolygon, MaStatus> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null("polygon"))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), MaStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

/// Static, NUL-terminated name of a status code.
#[no_mangle]
pub extern "C" fn ma_status_name(status: MaStatus) -> *const c_char {
    let s: &'static CStr = match status {
        MaStatus::Ok => c"ok",
        MaStatus::NullPointer => c"null pointer",
        MaStatus::DegenerateInput => c"degenerate input",
        MaStatus::EmptyIntersection => c"empty intersection",
        MaStatus::SingularMatrix => c"singular matrix",
        MaStatus::AsymmetricGauge => c"asymmetric gauge",
        MaStatus::OriginNotInterior => c"origin not interior",
        MaStatus::NotSymmetric => c"not symmetric",
        MaStatus::LpFailure => c"linear program failure",
        MaStatus::NoTriple => c"no well-spread triple",
        MaStatus::UnclassifiedPoint => c"unclassified touching point",
        MaStatus::Domain => c"parameter outside domain",
        MaStatus::InconsistentCharacterization => c"inconsistent characterization",
        MaStatus::Parse => c"parse error",
        MaStatus::Io => c"i/o error",
        MaStatus::BufferTooSmall => c"buffer too small",
        MaStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`). Returns the full message length without the NUL.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn ma_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Convex hull of `n` points given as interleaved `x, y` pairs.
///
/// # Safety
/// `xy` must point to `2 * n` doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ma_polygon_new(xy: *const f64, n: usize, out: *mut *mut MaPolygon) -> MaStatus {
    guard(|| {
        let k = check(ConvexPolygon::new(&points(xy, n)?))?;
        write(out, Box::into_raw(Box::new(MaPolygon(k))))
    })
}

/// Member of a named family; `params` is `"key=value;key=value"` or null.
///
/// # Safety
/// `name` and `params` must be null or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ma_polygon_family(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut MaPolygon,
) -> MaStatus {
    guard(|| {
        let name = text(name, "name")?;
        let kv: Vec<String> = if params.is_null() {
            Vec::new()
        } else {
            text(params, "params")?
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect()
        };
        let k = check(FamilySpec::parse(name, &kv).and_then(|s| s.build()))?;
        write(out, Box::into_raw(Box::new(MaPolygon(k))))
    })
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ma_polygon_free(p: *mut MaPolygon) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ma_polygon_vertex_count(p: *const MaPolygon) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Writes counter-clockwise vertices as `x, y` pairs into `xy`, which holds
/// `cap` points.
///
/// # Safety
/// `p` must be a live handle and `xy` valid for `2 * cap` doubles.
#[no_mangle]
pub unsafe extern "C" fn ma_polygon_vertices(p: *const MaPolygon, xy: *mut f64, cap: usize) -> MaStatus {
    guard(|| {
        let k = polygon(p)?;
        if xy.is_null() {
            return Err(null("xy"));
        }
        if cap < k.len() {
            return Err(fail(
                MaStatus::BufferTooSmall,
                format!("need room for {} vertices, got {cap}", k.len()),
            ));
        }
        let out = std::slice::from_raw_parts_mut(xy, 2 * k.len());
        for (slot, v) in out.chunks_exact_mut(2).zip(k.vertices()) {
            slot[0] = v.x;
            slot[1] = v.y;
        }
        Ok(())
    })
}

/// Minkowski asymmetry and the Minkowski center.
///
/// # Safety
/// `p` must be a live handle; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn ma_asymmetry(p: *const MaPolygon, s: *mut f64, cx: *mut f64, cy: *mut f64) -> MaStatus {
    guard(|| {
        let a = check(gauges::minkowski_asymmetry(polygon(p)?))?;
        write(s, a.s)?;
        write(cx, a.center.x)?;
        write(cy, a.center.y)
    })
}

/// Symmetrization ratios of the body translated to its Minkowski center.
///
/// # Safety
/// `p` must be a live handle; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn ma_alpha_tau(p: *const MaPolygon, alpha: *mut f64, tau: *mut f64) -> MaStatus {
    guard(|| {
        let k = check(gauges::minkowski_centered(polygon(p)?))?.0;
        let (a, t) = check(symm::alpha_tau(&k))?;
        write(alpha, a)?;
        write(tau, t)
    })
}

/// Boundary crossings of the centred body with its negative; -1 when the
/// boundaries overlap along a segment.
///
/// # Safety
/// `p` must be a live handle; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ma_crossings(p: *const MaPolygon, count: *mut i64) -> MaStatus {
    guard(|| {
        let k = check(gauges::minkowski_centered(polygon(p)?))?.0;
        write(count, symm::crossing_count(&k).encoded_count())
    })
}

/// Symmetric gauge from `n` points (`x, y` pairs). Fails unless the hull is
/// symmetric about the origin.
///
/// # Safety
/// `xy` must point to `2 * n` doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ma_gauge_new(xy: *const f64, n: usize, out: *mut *mut MaGauge) -> MaStatus {
    guard(|| {
        let k = check(ConvexPolygon::new(&points(xy, n)?))?;
        let g = check(GaugeBody::detect(k))?;
        check(g.require_symmetric())?;
        write(out, Box::into_raw(Box::new(MaGauge(g))))
    })
}

/// Regular `m`-gon approximation of the Euclidean disk.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ma_gauge_disk(m: usize, out: *mut *mut MaGauge) -> MaStatus {
    guard(|| {
        let g = check(families::disk_model(m))?;
        write(out, Box::into_raw(Box::new(MaGauge(g))))
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ma_gauge_free(g: *mut MaGauge) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Radii, diameter, width and completeness of `p` in gauge `g`. A
/// non-positive `tol` selects the default completeness tolerance.
///
/// # Safety
/// `p` and `g` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ma_report(
    p: *const MaPolygon,
    g: *const MaGauge,
    tol: f64,
    out: *mut MaReport,
) -> MaStatus {
    guard(|| {
        let k = polygon(p)?;
        let c = g.as_ref().map(|g| &g.0).ok_or_else(|| null("gauge"))?;
        let tol = if tol > 0.0 { tol } else { minkasym::tol::COMPLETENESS_TOL };
        let r = check(complete::report(k, c, tol))?;
        write(
            out,
            MaReport {
                inradius: r.inradius,
                circumradius: r.circumradius,
                diameter: r.diameter,
                width: r.width,
                asymmetry: r.asymmetry,
                dw_ratio: r.dw_ratio,
                pseudo_complete: r.pseudo_complete,
                complete: r.complete,
                constant_width: r.constant_width,
            },
        )
    })
}
