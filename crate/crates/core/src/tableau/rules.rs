use super::{RuleSet, Sign, SignedFormula, TableauError};
use crate::syntax::Formula;

use Sign::{F, T};

/// Result of looking up the rule for one signed formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// Signed variables, signed negated variables and inert constants.
    Literal,
    /// A constant that no valuation satisfies; the branch closes.
    Closes,
    /// The alternatives of the matching rule, left to right.
    Alternatives {
        rule: &'static str,
        alternatives: Vec<Vec<SignedFormula>>,
    },
}

fn t(f: &Formula) -> SignedFormula {
    SignedFormula::new(T, f.clone())
}

fn f(f: &Formula) -> SignedFormula {
    SignedFormula::new(F, f.clone())
}

fn nt(x: &Formula) -> SignedFormula {
    SignedFormula::new(T, Formula::neg(x.clone()))
}

fn nf(x: &Formula) -> SignedFormula {
    SignedFormula::new(F, Formula::neg(x.clone()))
}

fn alts(rule: &'static str, alternatives: Vec<Vec<SignedFormula>>) -> Expansion {
    Expansion::Alternatives { rule, alternatives }
}

fn constant(sf: &SignedFormula) -> Option<Expansion> {
    // value 0: ⊥ and ¬⊤; value 1: ⊤ and ¬⊥
    let zero = match &sf.formula {
        Formula::Bot => true,
        Formula::Top => false,
        Formula::Neg(a) => match &**a {
            Formula::Bot => false,
            Formula::Top => true,
            _ => return None,
        },
        _ => return None,
    };
    Some(if zero == (sf.sign == T) {
        Expansion::Closes
    } else {
        Expansion::Literal
    })
}

/// The rule of `rules` whose premise is `sf`.
pub fn expand(sf: &SignedFormula, rules: RuleSet) -> Result<Expansion, TableauError> {
    if let Some(e) = constant(sf) {
        return Ok(e);
    }
    if sf.formula.is_literal() {
        return Ok(Expansion::Literal);
    }
    let out = match rules {
        RuleSet::Succ => expand_succ(sf),
        RuleSet::Full => expand_full(sf),
    };
    out.ok_or_else(|| TableauError::OutOfSignature {
        formula: sf.clone(),
        rules,
    })
}

fn expand_succ(sf: &SignedFormula) -> Option<Expansion> {
    Some(match (&sf.formula, sf.sign) {
        (Formula::Succ(a, b), T) => alts(
            "T(α≻β)",
            vec![
                vec![t(b)],
                vec![nt(a), f(b), nt(b)],
                vec![f(a), f(b), nf(b)],
            ],
        ),
        (Formula::Succ(a, b), F) => alts(
            "F(α≻β)",
            vec![vec![t(a), f(b), nf(b)], vec![nf(a), f(b), nt(b)]],
        ),
        (Formula::Neg(inner), sign) => match (&**inner, sign) {
            (Formula::Succ(a, b), T) => alts(
                "T(¬(α≻β))",
                vec![vec![t(a), f(b), nt(b)], vec![nf(a), t(b), nt(b)]],
            ),
            (Formula::Succ(a, b), F) => alts(
                "F(¬(α≻β))",
                vec![
                    vec![nf(b)],
                    vec![nt(a), t(b), nt(b)],
                    vec![f(a), f(b), nt(b)],
                ],
            ),
            (Formula::Neg(a), T) => alts("T(¬¬α)", vec![vec![t(a)]]),
            (Formula::Neg(a), F) => alts("F(¬¬α)", vec![vec![f(a)]]),
            _ => return None,
        },
        _ => return None,
    })
}

fn expand_full(sf: &SignedFormula) -> Option<Expansion> {
    Some(match (&sf.formula, sf.sign) {
        (Formula::Or(a, b), T) => alts("T(α∨β)", vec![vec![t(a)], vec![t(b)]]),
        (Formula::Or(a, b), F) => alts("F(α∨β)", vec![vec![f(a), f(b)]]),
        (Formula::And(a, b), T) => alts("T(α∧β)", vec![vec![t(a), t(b)]]),
        (Formula::And(a, b), F) => alts("F(α∧β)", vec![vec![f(a)], vec![f(b)]]),
        (Formula::Box(a), T) => alts("T(□α)", vec![vec![t(a), nf(a)]]),
        (Formula::Box(a), F) => alts("F(□α)", vec![vec![f(a)], vec![nt(a)]]),
        (Formula::Neg(inner), sign) => match (&**inner, sign) {
            (Formula::Or(a, b), T) => alts("T(¬(α∨β))", vec![vec![nt(a), nt(b)]]),
            (Formula::Or(a, b), F) => alts("F(¬(α∨β))", vec![vec![nf(a)], vec![nf(b)]]),
            (Formula::And(a, b), T) => alts("T(¬(α∧β))", vec![vec![nt(a)], vec![nt(b)]]),
            (Formula::And(a, b), F) => alts("F(¬(α∧β))", vec![vec![nf(a), nf(b)]]),
            (Formula::Neg(a), T) => alts("T(¬¬α)", vec![vec![t(a)]]),
            (Formula::Neg(a), F) => alts("F(¬¬α)", vec![vec![f(a)]]),
            (Formula::Box(_), T) => alts("T(¬□α)", vec![vec![f(inner)]]),
            (Formula::Box(_), F) => alts("F(¬□α)", vec![vec![t(inner)]]),
            _ => return None,
        },
        _ => return None,
    })
}

/// The partner a derived rule pairs `sf` with: `α≻β` and `¬(α≻β)` under
/// either sign.
pub(super) fn derived_partners(sf: &SignedFormula) -> Option<[SignedFormula; 2]> {
    let plain = match &sf.formula {
        Formula::Succ(..) => sf.formula.clone(),
        Formula::Neg(inner) if matches!(**inner, Formula::Succ(..)) => (**inner).clone(),
        _ => return None,
    };
    let negated = Formula::neg(plain.clone());
    let other = |g: &Formula| {
        if *g == sf.formula {
            None
        } else {
            Some(g.clone())
        }
    };
    let target = other(&plain).or_else(|| other(&negated))?;
    Some([T, F].map(|s| SignedFormula::new(s, target.clone())))
}

/// The rule for a pair `{σ(α≻β), τ(¬(α≻β))}` in either order, replacing
/// the two separate expansions on the same branch.
pub fn expand_derived(x: &SignedFormula, y: &SignedFormula) -> Result<Expansion, TableauError> {
    let mismatch = || TableauError::NotDerivedPair(x.clone(), y.clone());
    let (plain, negated) = match (&x.formula, &y.formula) {
        (Formula::Succ(..), Formula::Neg(inner)) if **inner == x.formula => (x, y),
        (Formula::Neg(inner), Formula::Succ(..)) if **inner == y.formula => (y, x),
        _ => return Err(mismatch()),
    };
    let Formula::Succ(a, b) = &plain.formula else {
        return Err(mismatch());
    };
    Ok(match (plain.sign, negated.sign) {
        (T, T) => alts(
            "T(α≻β), T(¬(α≻β))",
            vec![vec![nf(a), t(b), nt(b)], vec![t(a), nt(a), f(b), nt(b)]],
        ),
        (F, F) => alts(
            "F(α≻β), F(¬(α≻β))",
            vec![vec![t(a), f(b), nf(b)], vec![f(a), nf(a), f(b), nt(b)]],
        ),
        (T, F) => alts(
            "T(α≻β), F(¬(α≻β))",
            vec![
                vec![f(a), nt(a)],
                vec![f(a), nf(a), f(b), nf(b)],
                vec![t(a), nt(a), t(b), nt(b)],
                vec![t(b), nf(b)],
            ],
        ),
        (F, T) => alts("F(α≻β), T(¬(α≻β))", vec![vec![t(a), nf(a), f(b), nt(b)]]),
    })
}
