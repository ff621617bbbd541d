//! Named equational laws of the algebra, checked by exhaustive evaluation.

use super::{check_identity, IdentityCheck, TruthValue};
use crate::semantics::{self, Valuation};
use crate::syntax::{parse, Formula};

#[derive(Clone, Debug)]
pub enum LawKind {
    /// `lhs ≈ rhs` for every valuation.
    Identity { lhs: Formula, rhs: Formula },
    /// Whenever `premise` evaluates to 1, so does `conclusion`.
    Quasi {
        premise: Formula,
        conclusion: Formula,
    },
}

#[derive(Clone, Debug)]
pub struct Law {
    pub group: &'static str,
    pub name: &'static str,
    pub kind: LawKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawOutcome {
    Holds { assignments: usize },
    Fails(Valuation),
}

impl Law {
    fn identity(group: &'static str, name: &'static str, lhs: &str, rhs: &str) -> Law {
        Law {
            group,
            name,
            kind: LawKind::Identity {
                lhs: parse(lhs).expect("law lhs"),
                rhs: parse(rhs).expect("law rhs"),
            },
        }
    }

    pub fn check(&self) -> LawOutcome {
        match &self.kind {
            LawKind::Identity { lhs, rhs } => {
                let mut vars = lhs.vars();
                rhs.collect_vars(&mut vars);
                match check_identity(lhs, rhs) {
                    IdentityCheck::Holds => LawOutcome::Holds {
                        assignments: 4usize.pow(vars.len() as u32),
                    },
                    IdentityCheck::Fails(h) => LawOutcome::Fails(h),
                }
            }
            LawKind::Quasi {
                premise,
                conclusion,
            } => {
                let mut vars = premise.vars();
                conclusion.collect_vars(&mut vars);
                let mut count = 0;
                for h in semantics::valuations(&vars) {
                    count += 1;
                    let p = semantics::eval(premise, &h).expect("covered");
                    let c = semantics::eval(conclusion, &h).expect("covered");
                    if p == TruthValue::One && c != TruthValue::One {
                        return LawOutcome::Fails(h);
                    }
                }
                LawOutcome::Holds { assignments: count }
            }
        }
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            LawKind::Identity { lhs, rhs } => format!("{lhs}  =  {rhs}"),
            LawKind::Quasi {
                premise,
                conclusion,
            } => {
                format!("{premise} = 1  implies  {conclusion} = 1")
            }
        }
    }
}

/// The TMA axioms, De Morgan laws, the fourteen basic identities, the
/// definability of every operation from `≻` and `⊥`, the `≻` axioms C1-C8
/// and the agreement of the two readings of `◇`.
pub fn law_suite() -> Vec<Law> {
    let mut laws = vec![
        Law::identity("tma", "box-neg", "[]a & ~a", "bot"),
        Law::identity("tma", "negbox-and", "~[]a & a", "~a & a"),
        Law::identity("de-morgan", "involution", "~~a", "a"),
        Law::identity("de-morgan", "neg-or", "~(a | b)", "~a & ~b"),
        Law::identity("de-morgan", "neg-and", "~(a & b)", "~a | ~b"),
    ];
    let basic = [
        ("i", "~[]a | a", "top"),
        ("ii", "[][]a", "[]a"),
        ("iii", "[]a | ~a", "a | ~a"),
        ("iv", "[](a & b)", "[]a & []b"),
        ("v", "[]a | ~[]a", "top"),
        ("vi", "[](a | []b)", "[]a | []b"),
        ("vii", "[]a & ~[]a", "bot"),
        ("viii", "[]~[]a", "~[]a"),
        // printed as `□a ∧ a ≈ a`, which fails at a = n
        ("ix", "[]a & a", "[]a"),
        ("x", "a & []~a", "bot"),
        ("xi", "[]top", "top"),
        ("xii", "[]([]a & []b)", "[]a & []b"),
        ("xiii", "[]bot", "bot"),
        ("xiv", "[]([]a | []b)", "[]a | []b"),
    ];
    laws.extend(
        basic
            .into_iter()
            .map(|(name, l, r)| Law::identity("basic", name, l, r)),
    );
    let defcon = [
        ("i", "top", "bot > bot"),
        ("ii", "~x", "x > bot"),
        ("iii", "x | y", "(x > y) > y"),
        ("iv", "x & y", "~(~x | ~y)"),
        ("v", "[]x", "~(x > ~x)"),
    ];
    laws.extend(
        defcon
            .into_iter()
            .map(|(name, l, r)| Law::identity("definability", name, l, r)),
    );
    laws.extend([
        Law::identity("succ", "C1", "top > x", "x"),
        Law::identity("succ", "C2", "x > top", "top"),
        Law::identity("succ", "C3", "(x > y) > y", "(y > x) > x"),
        Law {
            group: "succ",
            name: "C4",
            kind: LawKind::Quasi {
                premise: parse("x > y > z").unwrap(),
                conclusion: parse("y > x > z").unwrap(),
            },
        },
        Law::identity("succ", "C5", "((x > x > y) > x) > x", "top"),
        Law::identity("succ", "C6", "bot > x", "top"),
        Law::identity("succ", "C7", "x > bot", "~x"),
        Law::identity("succ", "C8", "(x & y > z) > (x > z) | (y > z)", "top"),
        Law::identity("diamond", "two-readings", "~[]~x", "~x > x"),
        Law::identity("diamond", "primitive", "<>x", "~[]~x"),
    ]);
    laws
}
