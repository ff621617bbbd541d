//! C ABI over `tml-core`.
//!
//! Every fallible call returns a [`TmlStatus`]; on anything but
//! `TML_STATUS_OK` the message is available from [`tml_last_error`] on the same
//! thread until the next call. Handles are opaque and owned by the caller,
//! who releases them with the matching `_free` function. Strings returned
//! through `char **` out-parameters are released with [`tml_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tml_core::algebra::{apply_op, Connective, TruthValue};
use tml_core::nd::{self, NdError, ProofTree};
use tml_core::semantics::{self, SemanticsError, Valuation};
use tml_core::syntax::{parse, translate, Formula, Signature};
use tml_core::tableau::{self, RuleSet, TableauError, Verdict};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TmlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    OutOfSignature = 5,
    TooManyVariables = 6,
    ProofRejected = 7,
    FormatError = 8,
    Internal = 9,
    Panic = 10,
}

/// The four truth values in the order `0 < n < b < 1` of enumeration.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TmlValue {
    Zero = 0,
    N = 1,
    B = 2,
    One = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TmlConnective {
    Bot = 0,
    Top = 1,
    Neg = 2,
    Box = 3,
    Dia = 4,
    And = 5,
    Or = 6,
    Succ = 7,
}

/// Rule set for tableaux; also names the target language of translation.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TmlSystem {
    Succ = 0,
    Full = 1,
}

/// An immutable parsed formula.
pub struct TmlFormula(Formula);

/// The outcome of a tableau decision.
pub struct TmlVerdict(Verdict);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(message).expect("NULs removed")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

type Failure = (TmlStatus, String);

fn fail<T>(status: TmlStatus, message: impl Into<String>) -> Result<T, Failure> {
    Err((status, message.into()))
}

/// Runs `body`, records any error and converts panics into `TML_PANIC`.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> TmlStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TmlStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside tml");
            TmlStatus::Panic
        }
    }
}

fn semantics_failure(e: SemanticsError) -> Failure {
    let status = match e {
        SemanticsError::TooManyVariables { .. } => TmlStatus::TooManyVariables,
        SemanticsError::Unbound(_) => TmlStatus::InvalidArgument,
    };
    (status, e.to_string())
}

fn tableau_failure(e: TableauError) -> Failure {
    let status = match &e {
        TableauError::OutOfSignature { .. } => TmlStatus::OutOfSignature,
        TableauError::NotDerivedPair(..) => TmlStatus::InvalidArgument,
        TableauError::Semantics(SemanticsError::TooManyVariables { .. }) => {
            TmlStatus::TooManyVariables
        }
        _ => TmlStatus::Internal,
    };
    (status, e.to_string())
}

fn nd_failure(e: NdError) -> Failure {
    let status = match &e {
        NdError::Check(_) => TmlStatus::ProofRejected,
        NdError::Format(_) => TmlStatus::FormatError,
        NdError::NotACut(_) | NdError::Stuck(_) => TmlStatus::Internal,
    };
    (status, e.to_string())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return fail(TmlStatus::NullPointer, "null string argument");
    }
    CStr::from_ptr(s).to_str().map_err(|e| {
        (
            TmlStatus::InvalidUtf8,
            format!("argument is not UTF-8: {e}"),
        )
    })
}

unsafe fn formula_ref<'a>(f: *const TmlFormula) -> Result<&'a Formula, Failure> {
    f.as_ref()
        .map(|f| &f.0)
        .ok_or((TmlStatus::NullPointer, "null formula handle".to_string()))
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or((TmlStatus::NullPointer, "null output pointer".to_string()))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("NULs removed")
        .into_raw()
}

impl From<TruthValue> for TmlValue {
    fn from(v: TruthValue) -> Self {
        match v {
            TruthValue::Zero => TmlValue::Zero,
            TruthValue::N => TmlValue::N,
            TruthValue::B => TmlValue::B,
            TruthValue::One => TmlValue::One,
        }
    }
}

impl From<TmlValue> for TruthValue {
    fn from(v: TmlValue) -> Self {
        match v {
            TmlValue::Zero => TruthValue::Zero,
            TmlValue::N => TruthValue::N,
            TmlValue::B => TruthValue::B,
            TmlValue::One => TruthValue::One,
        }
    }
}

impl From<TmlConnective> for Connective {
    fn from(c: TmlConnective) -> Self {
        match c {
            TmlConnective::Bot => Connective::Bot,
            TmlConnective::Top => Connective::Top,
            TmlConnective::Neg => Connective::Neg,
            TmlConnective::Box => Connective::Box,
            TmlConnective::Dia => Connective::Dia,
            TmlConnective::And => Connective::And,
            TmlConnective::Or => Connective::Or,
            TmlConnective::Succ => Connective::Succ,
        }
    }
}

impl From<TmlSystem> for RuleSet {
    fn from(s: TmlSystem) -> Self {
        match s {
            TmlSystem::Succ => RuleSet::Succ,
            TmlSystem::Full => RuleSet::Full,
        }
    }
}

/// Message of the last failed call on this thread, or NULL. Valid until
/// the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn tml_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tml_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tml_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `input` into a new formula handle stored in `*out`.
///
/// # Safety
/// `input` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tml_parse(input: *const c_char, out: *mut *mut TmlFormula) -> TmlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let f = parse(text(input)?).map_err(|e| (TmlStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(TmlFormula(f)));
        Ok(())
    })
}

/// Releases a formula handle. NULL is ignored.
///
/// # Safety
/// `f` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tml_formula_free(f: *mut TmlFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Canonical text of a formula, or NULL for a NULL handle.
///
/// # Safety
/// `f` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn tml_formula_render(f: *const TmlFormula) -> *mut c_char {
    match f.as_ref() {
        Some(f) => owned_string(f.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Translates into the language of `to`, storing a new handle in `*out`.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tml_translate(
    f: *const TmlFormula,
    to: TmlSystem,
    out: *mut *mut TmlFormula,
) -> TmlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let sig = match to {
            TmlSystem::Succ => Signature::Contrapositive,
            TmlSystem::Full => Signature::Full,
        };
        *out = Box::into_raw(Box::new(TmlFormula(translate(formula_ref(f)?, sig))));
        Ok(())
    })
}

/// Applies a connective to `n_args` values. `args` may be NULL when the
/// arity is 0.
///
/// # Safety
/// `args` must point to `n_args` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tml_apply_op(
    conn: TmlConnective,
    args: *const TmlValue,
    n_args: usize,
    out: *mut TmlValue,
) -> TmlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let args: Vec<TruthValue> = if n_args == 0 {
            Vec::new()
        } else if args.is_null() {
            return fail(TmlStatus::NullPointer, "null argument array");
        } else {
            std::slice::from_raw_parts(args, n_args)
                .iter()
                .map(|&v| v.into())
                .collect()
        };
        let v = apply_op(conn.into(), &args)
            .map_err(|e| (TmlStatus::InvalidArgument, e.to_string()))?;
        *out = v.into();
        Ok(())
    })
}

/// Evaluates under `assignment`, written `p=n,q=b`.
///
/// # Safety
/// `f` must be a live handle; `assignment` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tml_eval(
    f: *const TmlFormula,
    assignment: *const c_char,
    out: *mut TmlValue,
) -> TmlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let f = formula_ref(f)?;
        let mut h = Valuation::new();
        for part in text(assignment)?
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let Some((var, value)) = part.split_once('=') else {
                return fail(
                    TmlStatus::InvalidArgument,
                    format!("'{part}' is not of the form var=value"),
                );
            };
            let value: TruthValue = value
                .trim()
                .parse()
                .map_err(|e| (TmlStatus::InvalidArgument, format!("{e}")))?;
            h.set(var.trim(), value);
        }
        *out = semantics::eval(f, &h).map_err(semantics_failure)?.into();
        Ok(())
    })
}

/// Exhaustive validity: `*out` is true iff every valuation gives 1.
/// When `countermodel` is non-NULL it receives the first failing
/// valuation as text, or NULL if valid.
///
/// # Safety
/// `f` must be a live handle; `out` writable; `countermodel` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn tml_valid(
    f: *const TmlFormula,
    out: *mut bool,
    countermodel: *mut *mut c_char,
) -> TmlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        if let Some(cm) = countermodel.as_mut() {
            *cm = ptr::null_mut();
        }
        let found = semantics::countermodel(formula_ref(f)?).map_err(semantics_failure)?;
        *out = found.is_none();
        if let (Some(cm), Some(h)) = (countermodel.as_mut(), found) {
            *cm = owned_string(h.to_string());
        }
        Ok(())
    })
}

/// Decides validity by tableaux, or consequence from `n_premises`
/// premises when that is nonzero, storing a verdict handle in `*out`.
///
/// # Safety
/// `f` must be a live handle; `premises` must point to `n_premises` live
/// handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tml_prove(
    f: *const TmlFormula,
    premises: *const *const TmlFormula,
    n_premises: usize,
    system: TmlSystem,
    out: *mut *mut TmlVerdict,
) -> TmlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let conclusion = formula_ref(f)?;
        let ps: Vec<Formula> = if n_premises == 0 {
            Vec::new()
        } else if premises.is_null() {
            return fail(TmlStatus::NullPointer, "null premise array");
        } else {
            std::slice::from_raw_parts(premises, n_premises)
                .iter()
                .map(|&p| formula_ref(p).cloned())
                .collect::<Result<_, _>>()?
        };
        let verdict = if ps.is_empty() {
            tableau::decide(conclusion, system.into())
        } else {
            tableau::decide_consequence(&ps, conclusion, system.into())
        }
        .map_err(tableau_failure)?;
        *out = Box::into_raw(Box::new(TmlVerdict(verdict)));
        Ok(())
    })
}

/// Releases a verdict handle. NULL is ignored.
///
/// # Safety
/// `v` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tml_verdict_free(v: *mut TmlVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// True iff every branch closed. False for NULL.
///
/// # Safety
/// `v` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn tml_verdict_is_proved(v: *const TmlVerdict) -> bool {
    v.as_ref().is_some_and(|v| v.0.is_proved())
}

/// Countermodel read off the open branch as `{p: n}`, or NULL if proved.
///
/// # Safety
/// `v` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn tml_verdict_countermodel(v: *const TmlVerdict) -> *mut c_char {
    match v.as_ref().and_then(|v| v.0.countermodel()) {
        Some(h) => owned_string(h.to_string()),
        None => ptr::null_mut(),
    }
}

/// Value of `var` in the countermodel. Variables the model leaves
/// unconstrained read as 0.
///
/// # Safety
/// `v` must be a live handle; `var` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tml_verdict_value(
    v: *const TmlVerdict,
    var: *const c_char,
    out: *mut TmlValue,
) -> TmlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let v = v
            .as_ref()
            .ok_or((TmlStatus::NullPointer, "null verdict handle".to_string()))?;
        let Some(model) = v.0.countermodel() else {
            return fail(
                TmlStatus::InvalidArgument,
                "a proved verdict has no countermodel",
            );
        };
        *out = model.get(text(var)?).unwrap_or(TruthValue::Zero).into();
        Ok(())
    })
}

fn read_proof(json: &str) -> Result<ProofTree, Failure> {
    ProofTree::from_json_str(json).map_err(|e| nd_failure(e.into()))
}

/// Checks a proof in JSON form. On success `*judgement` receives
/// `Γ |- φ` with the open assumptions sorted.
///
/// # Safety
/// `json` must be NUL-terminated; `judgement` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn tml_nd_check(
    json: *const c_char,
    judgement: *mut *mut c_char,
) -> TmlStatus {
    guard(|| {
        if let Some(j) = judgement.as_mut() {
            *j = ptr::null_mut();
        }
        let proof = read_proof(text(json)?)?;
        let j = nd::check(&proof).map_err(|e| nd_failure(e.into()))?;
        if let Some(out) = judgement.as_mut() {
            let open: Vec<String> = j.open_assumptions.iter().map(|f| f.to_string()).collect();
            *out = owned_string(format!("{} |- {}", open.join(", "), j.conclusion));
        }
        Ok(())
    })
}

/// Normalizes a proof in JSON form; `*out` receives the normal proof as
/// JSON.
///
/// # Safety
/// `json` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tml_nd_normalize(json: *const c_char, out: *mut *mut c_char) -> TmlStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let proof = read_proof(text(json)?)?;
        let normal = nd::normalize(&proof).map_err(nd_failure)?;
        *out = owned_string(normal.to_json().to_string());
        Ok(())
    })
}
