use std::ffi::{c_char, CStr, CString};
use std::ptr;

use tml_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    tml_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let e = tml_last_error();
    assert!(!e.is_null());
    CStr::from_ptr(e).to_str().unwrap().to_string()
}

unsafe fn formula(text: &str) -> *mut TmlFormula {
    let mut f = ptr::null_mut();
    assert_eq!(tml_parse(c(text).as_ptr(), &mut f), TmlStatus::Ok);
    f
}

#[test]
fn parse_render_free() {
    unsafe {
        let f = formula("[] ( p&q ) > ~r");
        assert_eq!(take(tml_formula_render(f)), "[](p & q) > ~r");
        tml_formula_free(f);
        tml_formula_free(ptr::null_mut());
        assert!(tml_formula_render(ptr::null()).is_null());
    }
}

#[test]
fn parse_errors_set_the_message() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(tml_parse(c("p &").as_ptr(), &mut f), TmlStatus::ParseError);
        assert!(f.is_null());
        assert!(last_error().contains("position 4"));
        assert_eq!(tml_parse(ptr::null(), &mut f), TmlStatus::NullPointer);
        assert_eq!(
            tml_parse(c("p").as_ptr(), ptr::null_mut()),
            TmlStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            tml_parse(bad.as_ptr().cast(), &mut f),
            TmlStatus::InvalidUtf8
        );
        let g = formula("p");
        assert!(tml_last_error().is_null());
        tml_formula_free(g);
    }
}

#[test]
fn operations() {
    unsafe {
        let mut v = TmlValue::Zero;
        let args = [TmlValue::N, TmlValue::B];
        assert_eq!(
            tml_apply_op(TmlConnective::And, args.as_ptr(), 2, &mut v),
            TmlStatus::Ok
        );
        assert_eq!(v, TmlValue::Zero);
        assert_eq!(
            tml_apply_op(TmlConnective::Or, args.as_ptr(), 2, &mut v),
            TmlStatus::Ok
        );
        assert_eq!(v, TmlValue::One);
        assert_eq!(
            tml_apply_op(TmlConnective::Top, ptr::null(), 0, &mut v),
            TmlStatus::Ok
        );
        assert_eq!(v, TmlValue::One);
        assert_eq!(
            tml_apply_op(TmlConnective::Neg, args.as_ptr(), 2, &mut v),
            TmlStatus::InvalidArgument
        );
    }
}

#[test]
fn evaluation_and_validity() {
    unsafe {
        let f = formula("[]<>p");
        let mut v = TmlValue::Zero;
        assert_eq!(tml_eval(f, c("p=n").as_ptr(), &mut v), TmlStatus::Ok);
        assert_eq!(v, TmlValue::One);
        assert_eq!(
            tml_eval(f, c("").as_ptr(), &mut v),
            TmlStatus::InvalidArgument
        );
        assert_eq!(
            tml_eval(f, c("p=x").as_ptr(), &mut v),
            TmlStatus::InvalidArgument
        );

        let mut ok = true;
        let mut cm = ptr::null_mut();
        let g = formula("p | ~p");
        assert_eq!(tml_valid(g, &mut ok, &mut cm), TmlStatus::Ok);
        assert!(!ok);
        assert_eq!(take(cm), "{p: n}");
        let h = formula("p | ~[]p");
        assert_eq!(tml_valid(h, &mut ok, &mut cm), TmlStatus::Ok);
        assert!(ok && cm.is_null());
        assert_eq!(tml_valid(h, &mut ok, ptr::null_mut()), TmlStatus::Ok);
        for x in [f, g, h] {
            tml_formula_free(x);
        }
    }
}

#[test]
fn too_many_variables() {
    unsafe {
        let vars: Vec<String> = (0..13).map(|i| format!("x{i}")).collect();
        let f = formula(&vars.join(" | "));
        let mut ok = false;
        assert_eq!(
            tml_valid(f, &mut ok, ptr::null_mut()),
            TmlStatus::TooManyVariables
        );
        tml_formula_free(f);
    }
}

#[test]
fn tableau_verdicts() {
    unsafe {
        let f = formula("[]<>p > <>[]p");
        let mut v = ptr::null_mut();
        assert_eq!(
            tml_prove(f, ptr::null(), 0, TmlSystem::Succ, &mut v),
            TmlStatus::Ok
        );
        assert!(!tml_verdict_is_proved(v));
        tml_verdict_free(v);
        assert_eq!(
            tml_prove(f, ptr::null(), 0, TmlSystem::Full, &mut v),
            TmlStatus::Ok
        );
        assert!(!tml_verdict_is_proved(v));
        let model = take(tml_verdict_countermodel(v));
        let mut val = TmlValue::Zero;
        assert_eq!(
            tml_verdict_value(v, c("p").as_ptr(), &mut val),
            TmlStatus::Ok
        );
        assert!(model.contains(&format!("p: {}", ["0", "n", "b", "1"][val as usize])));
        tml_verdict_free(v);

        let premise = formula("p & q");
        let concl = formula("q");
        let ps = [premise as *const TmlFormula];
        assert_eq!(
            tml_prove(concl, ps.as_ptr(), 1, TmlSystem::Succ, &mut v),
            TmlStatus::Ok
        );
        assert!(tml_verdict_is_proved(v));
        assert!(tml_verdict_countermodel(v).is_null());
        assert_eq!(
            tml_verdict_value(v, c("p").as_ptr(), &mut val),
            TmlStatus::InvalidArgument
        );
        tml_verdict_free(v);
        for x in [f, premise, concl] {
            tml_formula_free(x);
        }
    }
}

#[test]
fn translation() {
    unsafe {
        let f = formula("p & q");
        let mut g = ptr::null_mut();
        assert_eq!(tml_translate(f, TmlSystem::Succ, &mut g), TmlStatus::Ok);
        let text = take(tml_formula_render(g));
        assert!(!text.contains('&'), "{text}");
        tml_formula_free(g);
        tml_formula_free(f);
    }
}

#[test]
fn natural_deduction() {
    let detour = r#"{"rule": "AndE1", "conclusion": "p", "premises": [
        {"rule": "AndI", "conclusion": "p & q", "premises": [
            {"rule": "Assume", "formula": "p"}, {"rule": "Assume", "formula": "q"}]}]}"#;
    unsafe {
        let mut j = ptr::null_mut();
        assert_eq!(tml_nd_check(c(detour).as_ptr(), &mut j), TmlStatus::Ok);
        assert_eq!(take(j), "p, q |- p");
        let mut out = ptr::null_mut();
        assert_eq!(
            tml_nd_normalize(c(detour).as_ptr(), &mut out),
            TmlStatus::Ok
        );
        let normal: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(
            normal,
            serde_json::json!({"rule": "Assume", "formula": "p"})
        );

        let wrong = r#"{"rule": "AndE1", "conclusion": "q", "premises": [{"rule": "Assume", "formula": "p & r"}]}"#;
        assert_eq!(
            tml_nd_check(c(wrong).as_ptr(), &mut j),
            TmlStatus::ProofRejected
        );
        assert!(j.is_null());
        assert_eq!(
            tml_nd_check(c("{").as_ptr(), ptr::null_mut()),
            TmlStatus::FormatError
        );
        assert!(last_error().contains("invalid JSON"));
    }
}

#[test]
fn version() {
    let v = unsafe { CStr::from_ptr(tml_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
