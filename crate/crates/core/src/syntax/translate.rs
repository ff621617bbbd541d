use std::sync::Arc;

use super::{Formula, Signature};

/// Rewrites `f` into `target`.
///
/// Towards [`Signature::Full`], `α ≻ β` becomes
/// `(¬□α ∨ β) ∧ (¬□¬β ∨ ¬α) ∧ (¬□(¬α ∨ β) ∨ (□¬α ∨ β))` and `◇α` becomes
/// `¬□¬α`. Towards [`Signature::Contrapositive`], `⊤ = ⊥ ≻ ⊥`,
/// `α ∨ β = (α ≻ β) ≻ β`, `α ∧ β = ¬(¬α ∨ ¬β)`, `□α = ¬(α ≻ ¬α)` and
/// `◇α = ¬α ≻ α`. `¬` and `⊥` are shared by both signatures; `⊤` is kept
/// as is towards `Full`.
pub fn translate(f: &Formula, target: Signature) -> Formula {
    match target {
        Signature::Full => to_full(f),
        Signature::Contrapositive => to_contrapositive(f),
    }
}

fn to_full(f: &Formula) -> Formula {
    match f {
        Formula::Bot | Formula::Top | Formula::Var(_) => f.clone(),
        Formula::Neg(a) => Formula::neg(to_full(a)),
        Formula::Box(a) => Formula::square(to_full(a)),
        Formula::Dia(a) => Formula::neg(Formula::square(Formula::neg(to_full(a)))),
        Formula::And(a, b) => Formula::and(to_full(a), to_full(b)),
        Formula::Or(a, b) => Formula::or(to_full(a), to_full(b)),
        Formula::Succ(a, b) => {
            let x = to_full(a);
            let y = to_full(b);
            let not_x = Formula::neg(x.clone());
            // x → y = ¬□x ∨ y
            let arrow =
                |lhs: Formula, rhs: Formula| Formula::or(Formula::neg(Formula::square(lhs)), rhs);
            Formula::and(
                Formula::and(
                    arrow(x.clone(), y.clone()),
                    arrow(Formula::neg(y.clone()), not_x.clone()),
                ),
                arrow(
                    Formula::or(not_x.clone(), y.clone()),
                    Formula::or(Formula::square(not_x), y),
                ),
            )
        }
    }
}

fn succ_or(x: Formula, y: Formula) -> Formula {
    let y = Arc::new(y);
    Formula::Succ(Arc::new(Formula::Succ(Arc::new(x), y.clone())), y)
}

fn to_contrapositive(f: &Formula) -> Formula {
    match f {
        Formula::Bot | Formula::Var(_) => f.clone(),
        Formula::Top => Formula::succ(Formula::Bot, Formula::Bot),
        Formula::Neg(a) => Formula::neg(to_contrapositive(a)),
        Formula::Succ(a, b) => Formula::succ(to_contrapositive(a), to_contrapositive(b)),
        Formula::Or(a, b) => succ_or(to_contrapositive(a), to_contrapositive(b)),
        Formula::And(a, b) => Formula::neg(succ_or(
            Formula::neg(to_contrapositive(a)),
            Formula::neg(to_contrapositive(b)),
        )),
        Formula::Box(a) => {
            let x = to_contrapositive(a);
            Formula::neg(Formula::succ(x.clone(), Formula::neg(x)))
        }
        Formula::Dia(a) => {
            let x = to_contrapositive(a);
            Formula::succ(Formula::neg(x.clone()), x)
        }
    }
}
