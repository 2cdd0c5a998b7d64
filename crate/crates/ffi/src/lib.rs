//! C ABI over the `bcells` engine.
//!
//! Every fallible function returns a [`BcStatus`]; on failure a message is
//! available from [`bc_last_error`] on the same thread. Partitions are
//! returned as opaque [`BcPartition`] handles that the caller releases with
//! [`bc_partition_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bcells::group::{element_at, group_order, index_of, MAX_RANK};
use bcells::kl::kl_basis_with_limit;
use bcells::vogan::{vogan_classes_from, xi_orbits_from, OrderPolicy, XiMaps};
use bcells::{Error, GroupPartition, SignedPerm, WeightFunction};

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidRank = 2,
    InvalidInput = 3,
    Parse = 4,
    Domain = 5,
    Budget = 6,
    Regime = 7,
    BufferTooSmall = 8,
    Internal = 9,
}

impl From<&Error> for BcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidRank(..) => BcStatus::InvalidRank,
            Error::InvalidLetter { .. } | Error::InvalidInput(_) => BcStatus::InvalidInput,
            Error::Parse(_) => BcStatus::Parse,
            Error::Domain(_) => BcStatus::Domain,
            Error::Budget(_) => BcStatus::Budget,
            Error::Regime(_) => BcStatus::Regime,
            _ => BcStatus::Internal,
        }
    }
}

/// A partition of `W_n` indexed by canonical enumeration order.
pub struct BcPartition(GroupPartition);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: BcStatus, msg: impl Into<String>) -> BcStatus {
    set_error(msg);
    status
}

/// Runs `f`, recording errors and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), BcStatus>) -> BcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            BcStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => fail(BcStatus::Internal, "panic inside bcells"),
    }
}

fn lift<T>(r: bcells::Result<T>) -> Result<T, BcStatus> {
    r.map_err(|e| fail(BcStatus::from(&e), e.to_string()))
}

fn weight(a: u32, b: u32) -> Result<WeightFunction, BcStatus> {
    lift(WeightFunction::new(a, b))
}

fn emit(out: *mut *mut BcPartition, p: GroupPartition) -> Result<(), BcStatus> {
    // SAFETY: checked non-null by the caller of `emit`.
    unsafe { *out = Box::into_raw(Box::new(BcPartition(p))) };
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), BcStatus> {
    if out.is_null() {
        Err(fail(BcStatus::NullPointer, "output pointer is null"))
    } else {
        Ok(())
    }
}

fn partition<'a>(p: *const BcPartition) -> Result<&'a GroupPartition, BcStatus> {
    // SAFETY: the handle came from this library and has not been freed.
    unsafe { p.as_ref() }.map(|p| &p.0).ok_or_else(|| fail(BcStatus::NullPointer, "partition handle is null"))
}

/// Vogan classes of `W_n` for weights `L(t) = b`, `L(s_i) = a`; requires `b > (n-2)a`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_vogan_classes(n: u32, a: u32, b: u32, out: *mut *mut BcPartition) -> BcStatus {
    guard(|| {
        check_out(out)?;
        let maps = lift(XiMaps::new(n as usize, weight(a, b)?, OrderPolicy::default()))?;
        emit(out, lift(vogan_classes_from(&maps))?.final_classes)
    })
}

/// Right orbits of the group generated by the two cellular maps.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_xi_orbits(n: u32, a: u32, b: u32, out: *mut *mut BcPartition) -> BcStatus {
    guard(|| {
        check_out(out)?;
        let maps = lift(XiMaps::new(n as usize, weight(a, b)?, OrderPolicy::default()))?;
        emit(out, lift(xi_orbits_from(&maps))?.right)
    })
}

/// Left cells from the Kazhdan-Lusztig basis; `max_rank` caps the work (at most 5).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_left_cells(n: u32, a: u32, b: u32, max_rank: u32, out: *mut *mut BcPartition) -> BcStatus {
    guard(|| {
        check_out(out)?;
        let table = lift(kl_basis_with_limit(n as usize, weight(a, b)?, max_rank as usize))?;
        emit(out, table.left_cells())
    })
}

/// # Safety
/// `p` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn bc_partition_len(p: *const BcPartition) -> usize {
    partition(p).map_or(0, GroupPartition::len)
}

/// # Safety
/// `p` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn bc_partition_num_classes(p: *const BcPartition) -> usize {
    partition(p).map_or(0, GroupPartition::num_classes)
}

/// # Safety
/// `p` must be null or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_partition_class_of(p: *const BcPartition, index: usize, out: *mut u32) -> BcStatus {
    guard(|| {
        check_out(out)?;
        let p = partition(p)?;
        if index >= p.len() {
            return Err(fail(BcStatus::InvalidInput, format!("index {index} out of range")));
        }
        // SAFETY: non-null, checked above.
        unsafe { *out = p.class_of(index) };
        Ok(())
    })
}

/// Copies all class labels into `buf`, which must hold `bc_partition_len` entries.
///
/// # Safety
/// `p` must be null or a live handle; `buf` must be valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn bc_partition_labels(p: *const BcPartition, buf: *mut u32, cap: usize) -> BcStatus {
    guard(|| {
        check_out(buf)?;
        let labels = partition(p)?.labels();
        if cap < labels.len() {
            return Err(fail(BcStatus::BufferTooSmall, format!("need {} entries", labels.len())));
        }
        // SAFETY: `buf` holds at least `cap ≥ labels.len()` entries.
        unsafe { ptr::copy_nonoverlapping(labels.as_ptr(), buf, labels.len()) };
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bc_partition_free(p: *mut BcPartition) {
    if !p.is_null() {
        // SAFETY: produced by `Box::into_raw` in `emit`, freed once.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Canonical index of the element with window `window[0..n]`.
///
/// # Safety
/// `window` must be valid for `n` reads and `out` for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_element_index(window: *const i8, n: usize, out: *mut usize) -> BcStatus {
    guard(|| {
        check_out(out)?;
        if window.is_null() && n > 0 {
            return Err(fail(BcStatus::NullPointer, "window is null"));
        }
        // SAFETY: the caller passes `n` readable entries.
        let slice = if n == 0 { &[][..] } else { unsafe { std::slice::from_raw_parts(window, n) } };
        let w = lift(SignedPerm::from_window(slice))?;
        // SAFETY: non-null, checked above.
        unsafe { *out = index_of(&w) };
        Ok(())
    })
}

/// Writes the window of the element at `index` into `buf[0..n]`.
///
/// # Safety
/// `buf` must be valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn bc_element_window(n: u32, index: usize, buf: *mut i8, cap: usize) -> BcStatus {
    guard(|| {
        let n = n as usize;
        if n > MAX_RANK {
            return Err(fail(BcStatus::InvalidRank, format!("rank {n} exceeds {MAX_RANK}")));
        }
        if index >= group_order(n) {
            return Err(fail(BcStatus::InvalidInput, format!("index {index} out of range")));
        }
        if cap < n {
            return Err(fail(BcStatus::BufferTooSmall, format!("need {n} entries")));
        }
        if n > 0 {
            check_out(buf)?;
            let w = element_at(n, index);
            // SAFETY: `buf` holds at least `cap ≥ n` entries.
            unsafe { ptr::copy_nonoverlapping(w.window().as_ptr(), buf, n) };
        }
        Ok(())
    })
}

/// Message for the last failure on this thread; empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn bc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn bc_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}
