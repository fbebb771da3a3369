//! C ABI over the `unilinear` workbench.
//!
//! Every function returns a [`UlStatus`]; results travel through out-pointers.
//! Algebras are opaque handles owned by the caller and released with
//! [`ul_algebra_free`]. Strings returned by the library are released with
//! [`ul_string_free`]. After a non-OK status, [`ul_last_error`] describes the
//! failure until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use unilinear::analyze::{enumerate_mx, is_discriminator, url_flags};
use unilinear::cli::{parse_frl, render_frl, FrlError};
use unilinear::construct::{make_cyclic_url, make_mg, make_rab, Orient, ZKind, ZeroMonoid};
use unilinear::finalg::{check_residuated_lattice, FinRL};
use unilinear::varieties::GroupSig;

/// Status codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed algebra file or signature text.
    Syntax = 3,
    /// The file is well formed but breaks a residuated-lattice law.
    Semantic = 4,
    /// An element index outside the carrier.
    OutOfRange = 5,
    /// A construction or analysis precondition failed.
    Failed = 6,
    Panic = 7,
}

/// Opaque algebra handle.
pub struct UlAlgebra(FinRL);

/// Mirrors the unilinearity flags of an algebra.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct UlFlags {
    pub is_unilinear: bool,
    pub is_linear: bool,
    pub top_central: bool,
    pub top_unital: bool,
    pub rigorously_compact: bool,
    pub compact: bool,
    pub height: usize,
    pub width: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let msg = CString::new(msg.to_string().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: UlStatus, msg: impl ToString) -> UlStatus {
    set_error(msg);
    status
}

/// Runs `f`, mapping panics to [`UlStatus::Panic`].
fn guard(f: impl FnOnce() -> UlStatus) -> UlStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(UlStatus::Panic, "internal panic"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, UlStatus> {
    if s.is_null() {
        return Err(fail(UlStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(UlStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn algebra<'a>(a: *const UlAlgebra) -> Result<&'a FinRL, UlStatus> {
    a.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(UlStatus::NullPointer, "null algebra"))
}

unsafe fn put<T>(out: *mut T, v: T) -> UlStatus {
    if out.is_null() {
        return fail(UlStatus::NullPointer, "null out-pointer");
    }
    out.write(v);
    UlStatus::Ok
}

unsafe fn put_algebra(out: *mut *mut UlAlgebra, a: FinRL) -> UlStatus {
    put(out, Box::into_raw(Box::new(UlAlgebra(a))))
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the most recent failure on this thread. Valid until the next call.
#[no_mangle]
pub extern "C" fn ul_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses an algebra file (text or JSON) and checks every law.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_algebra_parse(
    src: *const c_char,
    out: *mut *mut UlAlgebra,
) -> UlStatus {
    guard(|| {
        let s = tri!(text(src));
        match parse_frl(s) {
            Ok(a) => put_algebra(out, a),
            Err(e @ FrlError::Syntax { .. }) => fail(UlStatus::Syntax, e),
            Err(e @ FrlError::Semantic { .. }) => fail(UlStatus::Semantic, e),
        }
    })
}

/// Renders an algebra in the text format.
///
/// # Safety
/// `a` must be a live handle; `out` receives a string owned by the caller.
#[no_mangle]
pub unsafe extern "C" fn ul_algebra_render(a: *const UlAlgebra, out: *mut *mut c_char) -> UlStatus {
    guard(|| {
        let a = tri!(algebra(a));
        let s = CString::new(render_frl(a)).expect("rendering has no nul bytes");
        put(out, s.into_raw())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn ul_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `a` must come from this library or be null, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ul_algebra_free(a: *mut UlAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_algebra_size(a: *const UlAlgebra, out: *mut usize) -> UlStatus {
    guard(|| put(out, tri!(algebra(a)).size()))
}

/// Which binary operation [`ul_algebra_op`] evaluates.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UlOp {
    Meet = 0,
    Join = 1,
    Mul = 2,
    /// `x\y`
    Ldiv = 3,
    /// `x/y`
    Rdiv = 4,
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_algebra_op(
    a: *const UlAlgebra,
    op: UlOp,
    x: usize,
    y: usize,
    out: *mut usize,
) -> UlStatus {
    guard(|| {
        let a = tri!(algebra(a));
        if x >= a.size() || y >= a.size() {
            return fail(
                UlStatus::OutOfRange,
                format!("({x}, {y}) outside a carrier of {}", a.size()),
            );
        }
        let v = match op {
            UlOp::Meet => a.meet(x, y),
            UlOp::Join => a.join(x, y),
            UlOp::Mul => a.mul(x, y),
            UlOp::Ldiv => a.ldiv(x, y),
            UlOp::Rdiv => a.rdiv(x, y),
        };
        put(out, v)
    })
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_algebra_leq(
    a: *const UlAlgebra,
    x: usize,
    y: usize,
    out: *mut bool,
) -> UlStatus {
    guard(|| {
        let a = tri!(algebra(a));
        if x >= a.size() || y >= a.size() {
            return fail(
                UlStatus::OutOfRange,
                format!("({x}, {y}) outside a carrier of {}", a.size()),
            );
        }
        put(out, a.leq(x, y))
    })
}

/// Whether every residuated-lattice law holds.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_algebra_check(a: *const UlAlgebra, out: *mut bool) -> UlStatus {
    guard(|| put(out, check_residuated_lattice(tri!(algebra(a))).passed()))
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_algebra_flags(a: *const UlAlgebra, out: *mut UlFlags) -> UlStatus {
    guard(|| {
        let f = url_flags(tri!(algebra(a)));
        put(
            out,
            UlFlags {
                is_unilinear: f.is_unilinear,
                is_linear: f.is_linear,
                top_central: f.top_central,
                top_unital: f.top_unital,
                rigorously_compact: f.rigorously_compact,
                compact: f.compact,
                height: f.height,
                width: f.width,
            },
        )
    })
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_algebra_is_discriminator(
    a: *const UlAlgebra,
    out: *mut bool,
) -> UlStatus {
    guard(|| match is_discriminator(tri!(algebra(a))) {
        Ok(v) => put(out, v),
        Err(e) => fail(UlStatus::Failed, e),
    })
}

unsafe fn factors<'a>(ptr: *const u64, len: usize) -> Result<&'a [u64], UlStatus> {
    match (ptr.is_null(), len) {
        (_, 0) => Ok(&[]),
        (true, _) => Err(fail(UlStatus::NullPointer, "null factor array")),
        (false, n) => Ok(std::slice::from_raw_parts(ptr, n)),
    }
}

/// `M_G` for the abelian group with the given invariant factors.
///
/// # Safety
/// `factors_ptr` must point to `len` values (or be null with `len` 0).
#[no_mangle]
pub unsafe extern "C" fn ul_make_mg(
    factors_ptr: *const u64,
    len: usize,
    out: *mut *mut UlAlgebra,
) -> UlStatus {
    guard(|| match make_mg(tri!(factors(factors_ptr, len))) {
        Ok(a) => put_algebra(out, a),
        Err(e) => fail(UlStatus::Failed, e),
    })
}

/// `R_{A,B}` with `A = G ∪ {⊤}` and the zero-semigroup kind `0..=3`.
///
/// # Safety
/// As for [`ul_make_mg`].
#[no_mangle]
pub unsafe extern "C" fn ul_make_rab(
    factors_ptr: *const u64,
    len: usize,
    kind: u8,
    out: *mut *mut UlAlgebra,
) -> UlStatus {
    guard(|| {
        let fs = tri!(factors(factors_ptr, len));
        let Some(kind) = ZKind::from_tag(kind) else {
            return fail(UlStatus::OutOfRange, format!("kind {kind} is not in 0..=3"));
        };
        let a = if fs.is_empty() {
            ZeroMonoid::trivial()
        } else {
            match ZeroMonoid::abelian_with_zero(fs) {
                Ok(a) => a,
                Err(e) => return fail(UlStatus::Failed, e),
            }
        };
        match make_rab(&a, kind) {
            Ok(r) => put_algebra(out, r),
            Err(e) => fail(UlStatus::Failed, e),
        }
    })
}

/// Cyclic-monoid URL; `down` selects the dual middle order.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_make_cyclic(
    r: usize,
    s: usize,
    down: bool,
    out: *mut *mut UlAlgebra,
) -> UlStatus {
    guard(|| {
        let orient = if down { Orient::Down } else { Orient::Up };
        match make_cyclic_url(r, s, orient) {
            Ok(a) => put_algebra(out, a),
            Err(e) => fail(UlStatus::Failed, e),
        }
    })
}

/// Number of residuated lattices on `M_X`, `|X| = x_size`, up to isomorphism.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_enumerate_count(x_size: usize, out: *mut usize) -> UlStatus {
    guard(|| match enumerate_mx(x_size, None) {
        Ok(v) => put(out, v.len()),
        Err(e) => fail(UlStatus::Failed, e),
    })
}

unsafe fn sig(s: *const c_char) -> Result<GroupSig, UlStatus> {
    text(s)?.parse().map_err(|e| fail(UlStatus::Syntax, e))
}

/// Largest exponent in a signature such as `(1; p2:[2,1])`.
///
/// # Safety
/// `s` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_sig_exp(s: *const c_char, out: *mut u32) -> UlStatus {
    guard(|| put(out, tri!(sig(s)).exp()))
}

/// Whether the first group embeds in the second.
///
/// # Safety
/// Both strings must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_sig_leq(
    a: *const c_char,
    b: *const c_char,
    out: *mut bool,
) -> UlStatus {
    guard(|| {
        let a = tri!(sig(a));
        let b = tri!(sig(b));
        put(out, a.leq(&b))
    })
}

/// Join of two signatures, as text owned by the caller.
///
/// # Safety
/// Both strings must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ul_sig_join(
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> UlStatus {
    guard(|| {
        let a = tri!(sig(a));
        let b = tri!(sig(b));
        let s = CString::new(a.join(&b).to_string()).expect("no nul bytes");
        put(out, s.into_raw())
    })
}
