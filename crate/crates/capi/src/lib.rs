//! C ABI over the bqsym library.
//!
//! Elements and tensors are opaque heap handles; every function returns a
//! [`BqsymStatus`] and writes results through out-pointers. Strings returned
//! by the library are NUL-terminated, owned by the caller, and must be
//! released with [`bqsym_string_free`]. A human-readable description of the
//! most recent error on the current thread is available via
//! [`bqsym_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use bqsym::expr::{self, Style};
use bqsym::json;
use bqsym::oracle::verify::{reports_pass, reports_to_json, verify_up_to, Fault};
use bqsym::peak;
use bqsym::qsym::{QSymElement, TensorElement};
use bqsym::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BqsymStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The expression or index failed to parse.
    ParseError = 3,
    /// The operation rejected its input (degree mismatch, x0-content in a
    /// type A operation, invalid peak set, ...).
    DomainError = 4,
    /// A verification sweep reported a failing identity.
    VerifyFailed = 5,
}

/// Coproduct selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BqsymCoproduct {
    TypeA = 0,
    TypeB = 1,
    Chow = 2,
}

/// Antipode selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BqsymAntipode {
    TypeA = 0,
    TypeB = 1,
    Recursive = 2,
}

/// Peak-function flavor selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BqsymFlavor {
    TypeA = 0,
    TypeB = 1,
}

/// Opaque handle to an element.
pub struct BqsymElement(QSymElement);

/// Opaque handle to a tensor (a coproduct value).
pub struct BqsymTensor(TensorElement);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn record_error(message: &str) {
    let sanitized = CString::new(message.replace('\0', " ")).expect("NUL stripped");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = sanitized);
}

fn status_of(error: &Error) -> BqsymStatus {
    record_error(&error.to_string());
    match error {
        Error::Parse { .. } => BqsymStatus::ParseError,
        _ => BqsymStatus::DomainError,
    }
}

/// Description of the most recent error on this thread. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn bqsym_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn read_str<'a>(pointer: *const c_char) -> Result<&'a str, BqsymStatus> {
    if pointer.is_null() {
        record_error("NULL string argument");
        return Err(BqsymStatus::NullArgument);
    }
    CStr::from_ptr(pointer).to_str().map_err(|_| {
        record_error("string argument is not valid UTF-8");
        BqsymStatus::InvalidUtf8
    })
}

fn give_element(out: *mut *mut BqsymElement, element: QSymElement) -> BqsymStatus {
    if out.is_null() {
        record_error("NULL out-pointer");
        return BqsymStatus::NullArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(BqsymElement(element))) };
    BqsymStatus::Ok
}

fn give_string(out: *mut *mut c_char, text: String) -> BqsymStatus {
    if out.is_null() {
        record_error("NULL out-pointer");
        return BqsymStatus::NullArgument;
    }
    let owned = CString::new(text.replace('\0', " ")).expect("NUL stripped");
    unsafe { *out = owned.into_raw() };
    BqsymStatus::Ok
}

unsafe fn borrow<'a>(handle: *const BqsymElement) -> Result<&'a QSymElement, BqsymStatus> {
    if handle.is_null() {
        record_error("NULL element handle");
        return Err(BqsymStatus::NullArgument);
    }
    Ok(&(*handle).0)
}

/// Parse an element expression such as `"3*M[2,1] - F[0,1,1]"`.
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be a valid
/// location to store the new handle. The handle must be released with
/// [`bqsym_element_free`].
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_parse(
    text: *const c_char,
    out: *mut *mut BqsymElement,
) -> BqsymStatus {
    let source = match read_str(text) {
        Ok(source) => source,
        Err(status) => return status,
    };
    match expr::parse_element(source) {
        Ok(element) => give_element(out, element),
        Err(error) => status_of(&error),
    }
}

/// Release an element handle. NULL is ignored.
///
/// # Safety
/// `handle` must have been returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_free(handle: *mut BqsymElement) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Release a tensor handle. NULL is ignored.
///
/// # Safety
/// `handle` must have been returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bqsym_tensor_free(handle: *mut BqsymTensor) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `text` must have been returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bqsym_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

macro_rules! binary_element_op {
    ($(#[$doc:meta])* $name:ident, $method:ident) => {
        $(#[$doc])*
        ///
        /// # Safety
        /// `left` and `right` must be live element handles and `out` a valid
        /// location for the result handle.
        #[no_mangle]
        pub unsafe extern "C" fn $name(
            left: *const BqsymElement,
            right: *const BqsymElement,
            out: *mut *mut BqsymElement,
        ) -> BqsymStatus {
            let (left, right) = match (borrow(left), borrow(right)) {
                (Ok(l), Ok(r)) => (l, r),
                (Err(status), _) | (_, Err(status)) => return status,
            };
            give_element(out, left.$method(right))
        }
    };
}

binary_element_op!(
    /// Sum of two elements.
    bqsym_element_add,
    add
);
binary_element_op!(
    /// Product via the monomial-basis quasi-shuffle.
    bqsym_element_multiply,
    multiply
);
binary_element_op!(
    /// Product via the fundamental-basis shuffle enumeration.
    bqsym_element_multiply_f,
    multiply_f
);

/// Rewrite in the monomial basis.
///
/// # Safety
/// `element` must be a live handle and `out` a valid result location.
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_to_monomial(
    element: *const BqsymElement,
    out: *mut *mut BqsymElement,
) -> BqsymStatus {
    match borrow(element) {
        Ok(element) => give_element(out, element.to_monomial()),
        Err(status) => status,
    }
}

/// Rewrite in the fundamental basis.
///
/// # Safety
/// `element` must be a live handle and `out` a valid result location.
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_to_fundamental(
    element: *const BqsymElement,
    out: *mut *mut BqsymElement,
) -> BqsymStatus {
    match borrow(element) {
        Ok(element) => give_element(out, element.to_fundamental()),
        Err(status) => status,
    }
}

/// Apply an antipode.
///
/// # Safety
/// `element` must be a live handle and `out` a valid result location.
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_antipode(
    element: *const BqsymElement,
    variant: BqsymAntipode,
    out: *mut *mut BqsymElement,
) -> BqsymStatus {
    let element = match borrow(element) {
        Ok(element) => element,
        Err(status) => return status,
    };
    let image = match variant {
        BqsymAntipode::TypeA => match element.antipode_a() {
            Ok(image) => image,
            Err(error) => return status_of(&error),
        },
        BqsymAntipode::TypeB => element.antipode_b(),
        BqsymAntipode::Recursive => element.antipode_recursive(),
    };
    give_element(out, image)
}

/// Apply the theta projection onto the peak span (type B flavor accepts
/// everything; type A requires a first-part-0 element).
///
/// # Safety
/// `element` must be a live handle and `out` a valid result location.
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_theta(
    element: *const BqsymElement,
    flavor: BqsymFlavor,
    out: *mut *mut BqsymElement,
) -> BqsymStatus {
    let element = match borrow(element) {
        Ok(element) => element,
        Err(status) => return status,
    };
    let image = match flavor {
        BqsymFlavor::TypeA => match peak::theta(element) {
            Ok(image) => image,
            Err(error) => return status_of(&error),
        },
        BqsymFlavor::TypeB => peak::theta_b(element),
    };
    give_element(out, image)
}

/// Apply a coproduct, producing a tensor handle.
///
/// # Safety
/// `element` must be a live handle and `out` a valid location for the tensor
/// handle, to be released with [`bqsym_tensor_free`].
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_coproduct(
    element: *const BqsymElement,
    variant: BqsymCoproduct,
    out: *mut *mut BqsymTensor,
) -> BqsymStatus {
    let element = match borrow(element) {
        Ok(element) => element,
        Err(status) => return status,
    };
    let tensor = match variant {
        BqsymCoproduct::TypeA => match element.coproduct_a() {
            Ok(tensor) => tensor,
            Err(error) => return status_of(&error),
        },
        BqsymCoproduct::TypeB => element.coproduct_b(),
        BqsymCoproduct::Chow => element.coproduct_chow(),
    };
    if out.is_null() {
        record_error("NULL out-pointer");
        return BqsymStatus::NullArgument;
    }
    *out = Box::into_raw(Box::new(BqsymTensor(tensor)));
    BqsymStatus::Ok
}

/// Expand the peak function of an index given as an array of parts.
///
/// # Safety
/// `parts` must point to `len` readable `uint32_t`s (or be NULL when `len`
/// is 0); `out` must be a valid result location.
#[no_mangle]
pub unsafe extern "C" fn bqsym_k_function(
    parts: *const u32,
    len: usize,
    flavor: BqsymFlavor,
    out: *mut *mut BqsymElement,
) -> BqsymStatus {
    let parts: Vec<u32> = if len == 0 {
        Vec::new()
    } else {
        if parts.is_null() {
            record_error("NULL parts pointer with nonzero length");
            return BqsymStatus::NullArgument;
        }
        std::slice::from_raw_parts(parts, len).to_vec()
    };
    let index = match bqsym::PseudoComposition::try_new(parts) {
        Ok(index) => index,
        Err(error) => return status_of(&error),
    };
    let expansion = match flavor {
        BqsymFlavor::TypeA => match index.as_type_a() {
            Some(composition) => peak::k_function_a(&composition),
            None => {
                return status_of(&Error::NotTypeA {
                    index: index.to_string(),
                })
            }
        },
        BqsymFlavor::TypeB => peak::k_function_b(&index),
    };
    give_element(out, expansion)
}

/// Semantic equality (both sides compared in the monomial basis). Writes 1
/// or 0 through `out`.
///
/// # Safety
/// `left` and `right` must be live handles and `out` a valid `int` location.
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_equals(
    left: *const BqsymElement,
    right: *const BqsymElement,
    out: *mut i32,
) -> BqsymStatus {
    let (left, right) = match (borrow(left), borrow(right)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    if out.is_null() {
        record_error("NULL out-pointer");
        return BqsymStatus::NullArgument;
    }
    *out = i32::from(left == right);
    BqsymStatus::Ok
}

/// The constant term, as a decimal string.
///
/// # Safety
/// `element` must be a live handle; `out` receives a string to be released
/// with [`bqsym_string_free`].
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_counit(
    element: *const BqsymElement,
    out: *mut *mut c_char,
) -> BqsymStatus {
    match borrow(element) {
        Ok(element) => give_string(out, element.counit().to_string()),
        Err(status) => status,
    }
}

/// Render an element as text (`as_json` = 0) or canonical JSON
/// (`as_json` != 0).
///
/// # Safety
/// `element` must be a live handle; `out` receives a string to be released
/// with [`bqsym_string_free`].
#[no_mangle]
pub unsafe extern "C" fn bqsym_element_format(
    element: *const BqsymElement,
    as_json: i32,
    out: *mut *mut c_char,
) -> BqsymStatus {
    let element = match borrow(element) {
        Ok(element) => element,
        Err(status) => return status,
    };
    let text = if as_json != 0 {
        json::element_to_string(element)
    } else {
        expr::format_element(element, Style::default())
    };
    give_string(out, text)
}

/// Render a tensor as text or canonical JSON.
///
/// # Safety
/// `tensor` must be a live handle; `out` receives a string to be released
/// with [`bqsym_string_free`].
#[no_mangle]
pub unsafe extern "C" fn bqsym_tensor_format(
    tensor: *const BqsymTensor,
    as_json: i32,
    out: *mut *mut c_char,
) -> BqsymStatus {
    if tensor.is_null() {
        record_error("NULL tensor handle");
        return BqsymStatus::NullArgument;
    }
    let tensor = &(*tensor).0;
    let text = if as_json != 0 {
        json::tensor_to_string(tensor)
    } else {
        expr::format_tensor(tensor, Style::default())
    };
    give_string(out, text)
}

/// Run every identity sweep for degrees `0..=max_degree` and write the JSON
/// report. Returns `Ok` when every check passes and `VerifyFailed`
/// otherwise; the report is written in both cases.
///
/// # Safety
/// `report_out` may be NULL (the report is then discarded); otherwise it
/// receives a string to be released with [`bqsym_string_free`].
#[no_mangle]
pub unsafe extern "C" fn bqsym_verify(
    max_degree: u32,
    report_out: *mut *mut c_char,
) -> BqsymStatus {
    let reports = verify_up_to(max_degree, Fault::None);
    let passed = reports_pass(&reports);
    if !report_out.is_null() {
        let owned = CString::new(reports_to_json(&reports)).expect("JSON has no NUL");
        *report_out = owned.into_raw();
    }
    if passed {
        BqsymStatus::Ok
    } else {
        record_error("verification reported failing checks");
        BqsymStatus::VerifyFailed
    }
}
