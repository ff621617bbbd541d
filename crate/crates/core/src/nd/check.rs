use std::collections::{BTreeSet, HashMap, HashSet};

use super::{show_path, Discharge, Path, ProofTree, Rule};
use crate::syntax::Formula;

/// What a checked proof establishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Judgement {
    pub open_assumptions: BTreeSet<Formula>,
    pub conclusion: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("schema error at {}: {message}", show_path(.at))]
    Schema { at: Path, message: String },
    #[error("discharge error at {}: {message}", show_path(.at))]
    Discharge { at: Path, message: String },
}

fn in_language(f: &Formula) -> bool {
    match f {
        Formula::Top | Formula::Dia(_) | Formula::Succ(..) => false,
        _ => f.children().iter().all(|c| in_language(c)),
    }
}

fn neg(f: &Formula) -> Formula {
    Formula::neg(f.clone())
}

/// Matches one rule application against its schema.
fn schema(rule: Rule, cs: &[&Formula], concl: &Formula, ds: &[Discharge]) -> Result<(), String> {
    if cs.len() != rule.arity() {
        return Err(format!(
            "{rule} takes {} premises, got {}",
            rule.arity(),
            cs.len()
        ));
    }
    let want_ds = rule.discharge_scopes().len();
    if ds.len() != want_ds {
        return Err(format!(
            "{rule} discharges {want_ds} assumption classes, got {}",
            ds.len()
        ));
    }
    let fail = |what: &str| Err(format!("{rule}: {what}"));
    let neg_inner = |f: &Formula| match f {
        Formula::Neg(a) => Some((**a).clone()),
        _ => None,
    };
    match rule {
        Rule::AndI => {
            if *concl != Formula::and(cs[0].clone(), cs[1].clone()) {
                return fail("conclusion must be the conjunction of the premises");
            }
        }
        Rule::AndE1 | Rule::AndE2 => match cs[0] {
            Formula::And(a, b) if **(if rule == Rule::AndE1 { a } else { b }) == *concl => {}
            _ => {
                return fail(
                    "major premise must be a conjunction with the conclusion as its conjunct",
                )
            }
        },
        Rule::NegAndI1 | Rule::NegAndI2 => match neg_inner(concl).as_ref() {
            Some(Formula::And(a, b))
                if *cs[0] == neg(if rule == Rule::NegAndI1 { a } else { b }) => {}
            _ => {
                return fail(
                    "conclusion must be ¬(φ∧ψ) with the premise negating the chosen conjunct",
                )
            }
        },
        Rule::NegAndE => match neg_inner(cs[0]).as_ref() {
            Some(Formula::And(a, b)) => {
                if cs[1] != concl || cs[2] != concl {
                    return fail("minor premises must repeat the conclusion");
                }
                if ds[0].formula != neg(a) || ds[1].formula != neg(b) {
                    return fail("discharged classes must be ¬φ and ¬ψ");
                }
            }
            _ => return fail("major premise must be ¬(φ∧ψ)"),
        },
        Rule::OrI1 | Rule::OrI2 => match concl {
            Formula::Or(a, b) if **(if rule == Rule::OrI1 { a } else { b }) == *cs[0] => {}
            _ => {
                return fail(
                    "conclusion must be a disjunction with the premise as the chosen disjunct",
                )
            }
        },
        Rule::OrE => match cs[0] {
            Formula::Or(a, b) => {
                if cs[1] != concl || cs[2] != concl {
                    return fail("minor premises must repeat the conclusion");
                }
                if ds[0].formula != **a || ds[1].formula != **b {
                    return fail("discharged classes must be φ and ψ");
                }
            }
            _ => return fail("major premise must be a disjunction"),
        },
        Rule::NegOrI => match neg_inner(concl).as_ref() {
            Some(Formula::Or(a, b)) if *cs[0] == neg(a) && *cs[1] == neg(b) => {}
            _ => return fail("premises ¬φ, ¬ψ must give ¬(φ∨ψ)"),
        },
        Rule::NegOrE1 | Rule::NegOrE2 => {
            match neg_inner(cs[0]).as_ref() {
                Some(Formula::Or(a, b))
                    if *concl == neg(if rule == Rule::NegOrE1 { a } else { b }) => {}
                _ => return fail(
                    "major premise must be ¬(φ∨ψ) with the conclusion negating the chosen disjunct",
                ),
            }
        }
        Rule::NegNegI => {
            if *concl != neg(&neg(cs[0])) {
                return fail("conclusion must be ¬¬ of the premise");
            }
        }
        Rule::NegNegE => {
            if *cs[0] != neg(&neg(concl)) {
                return fail("premise must be ¬¬ of the conclusion");
            }
        }
        Rule::BoxI => match concl {
            Formula::Box(a) => {
                if **a != *cs[0] || *cs[1] != Formula::Bot {
                    return fail("premises must be φ and ⊥ for conclusion □φ");
                }
                if ds[0].formula != neg(a) {
                    return fail("discharged class must be ¬φ");
                }
            }
            _ => return fail("conclusion must be □φ"),
        },
        Rule::BoxE => {
            if *cs[0] != Formula::square(concl.clone()) {
                return fail("premise must be □ of the conclusion");
            }
        }
        Rule::NegBoxI => match neg_inner(concl).as_ref() {
            Some(Formula::Box(a)) if *cs[0] == neg(a) => {}
            _ => return fail("premise ¬φ must give ¬□φ"),
        },
        Rule::NegBoxE => match neg_inner(cs[0]).as_ref() {
            Some(Formula::Box(a)) if **a == *cs[1] && *concl == neg(a) => {}
            _ => return fail("premises ¬□φ and φ must give ¬φ"),
        },
        Rule::BotI => match cs[0] {
            Formula::And(x, y) => match (&**x, &**y) {
                (Formula::Neg(a), Formula::Box(b)) if a == b && *concl == Formula::Bot => {}
                _ => return fail("premise must be ¬φ∧□φ and the conclusion ⊥"),
            },
            _ => return fail("premise must be ¬φ∧□φ"),
        },
        Rule::BotE => {
            if *cs[0] != Formula::Bot {
                return fail("premise must be ⊥");
            }
        }
    }
    Ok(())
}

fn discharge_markers(t: &ProofTree) -> Result<HashSet<String>, CheckError> {
    let mut seen = HashSet::new();
    for (path, node) in t.nodes() {
        if let ProofTree::Rule { discharges, .. } = node {
            for d in discharges {
                if !seen.insert(d.marker.clone()) {
                    return Err(CheckError::Discharge {
                        at: path,
                        message: format!(
                            "marker {} is discharged by more than one rule application",
                            d.marker
                        ),
                    });
                }
            }
        }
    }
    Ok(seen)
}

struct Checker {
    discharged_somewhere: HashSet<String>,
    open: BTreeSet<Formula>,
}

impl Checker {
    fn walk(
        &mut self,
        t: &ProofTree,
        path: &mut Path,
        scope: &mut HashMap<String, Formula>,
    ) -> Result<(), CheckError> {
        let schema_err = |path: &Path, message: String| CheckError::Schema {
            at: path.clone(),
            message,
        };
        let check_lang = |path: &Path, f: &Formula| {
            if in_language(f) {
                Ok(())
            } else {
                Err(schema_err(
                    path,
                    format!("{f} is outside the language {{¬, ∧, ∨, □, ⊥}}"),
                ))
            }
        };
        match t {
            ProofTree::Assume { formula, marker } => {
                check_lang(path, formula)?;
                match marker {
                    Some(m) if scope.contains_key(m) => {
                        if scope[m] != *formula {
                            return Err(CheckError::Discharge {
                                at: path.clone(),
                                message: format!(
                                    "assumption {formula} carries marker {m}, which discharges {}",
                                    scope[m]
                                ),
                            });
                        }
                    }
                    Some(m) if self.discharged_somewhere.contains(m) => {
                        return Err(CheckError::Discharge {
                            at: path.clone(),
                            message: format!(
                                "marker {m} is used outside the scope of the rule discharging it"
                            ),
                        });
                    }
                    _ => {
                        self.open.insert(formula.clone());
                    }
                }
                Ok(())
            }
            ProofTree::Ma { formula } => {
                check_lang(path, formula)?;
                match formula {
                    Formula::Or(a, b) if **b == Formula::neg(Formula::square((**a).clone())) => {
                        Ok(())
                    }
                    _ => Err(schema_err(
                        path,
                        format!("MA instance must be φ ∨ ¬□φ, got {formula}"),
                    )),
                }
            }
            ProofTree::Rule {
                rule,
                conclusion,
                premises,
                discharges,
            } => {
                check_lang(path, conclusion)?;
                for d in discharges {
                    check_lang(path, &d.formula)?;
                }
                let cs: Vec<&Formula> = premises.iter().map(|p| p.conclusion()).collect();
                schema(*rule, &cs, conclusion, discharges).map_err(|m| schema_err(path, m))?;
                let scopes = rule.discharge_scopes();
                for (i, p) in premises.iter().enumerate() {
                    let local: Vec<&Discharge> = discharges
                        .iter()
                        .zip(scopes)
                        .filter(|(_, s)| **s == i)
                        .map(|(d, _)| d)
                        .collect();
                    for d in &local {
                        scope.insert(d.marker.clone(), d.formula.clone());
                    }
                    path.push(i);
                    let r = self.walk(p, path, scope);
                    path.pop();
                    for d in &local {
                        scope.remove(&d.marker);
                    }
                    r?;
                }
                Ok(())
            }
        }
    }
}

/// Validates every node against its schema and the discharge discipline.
///
/// Discharge markers are unique across the tree. An assumption whose
/// marker is discharged somewhere must sit in that rule's scoped premise;
/// assumptions with other markers, or none, stay open. Empty assumption
/// classes are allowed.
pub fn check(p: &ProofTree) -> Result<Judgement, CheckError> {
    let mut c = Checker {
        discharged_somewhere: discharge_markers(p)?,
        open: BTreeSet::new(),
    };
    c.walk(p, &mut Vec::new(), &mut HashMap::new())?;
    Ok(Judgement {
        open_assumptions: c.open,
        conclusion: p.conclusion().clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nd::Discharge;
    use crate::syntax::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn leaves() {
        let j = check(&ProofTree::marked(f("p"), "u")).unwrap();
        assert_eq!(j.open_assumptions, BTreeSet::from([f("p")]));
        assert_eq!(j.conclusion, f("p"));
        let j = check(&ProofTree::ma(f("p"))).unwrap();
        assert!(j.open_assumptions.is_empty());
        assert_eq!(j.conclusion, f("p | ~[]p"));
        assert!(check(&ProofTree::Ma {
            formula: f("p | ~p")
        })
        .is_err());
    }

    #[test]
    fn box_elim_needs_box() {
        let bad = ProofTree::rule(Rule::BoxE, f("p"), vec![ProofTree::marked(f("q"), "u")]);
        assert!(matches!(check(&bad), Err(CheckError::Schema { .. })));
    }

    fn or_elim(minor2: ProofTree) -> ProofTree {
        ProofTree::discharging(
            Rule::OrE,
            f("p | q"),
            vec![
                ProofTree::assume(f("p | q")),
                ProofTree::rule(Rule::OrI1, f("p | q"), vec![ProofTree::marked(f("p"), "u")]),
                minor2,
            ],
            vec![Discharge::new("u", f("p")), Discharge::new("v", f("q"))],
        )
    }

    #[test]
    fn discharge_discipline() {
        let good = or_elim(ProofTree::rule(
            Rule::OrI2,
            f("p | q"),
            vec![ProofTree::marked(f("q"), "v")],
        ));
        let j = check(&good).unwrap();
        assert_eq!(j.open_assumptions, BTreeSet::from([f("p | q")]));

        // u used in the wrong minor premise
        let bad = or_elim(ProofTree::rule(
            Rule::OrI1,
            f("p | q"),
            vec![ProofTree::marked(f("p"), "u")],
        ));
        assert!(matches!(check(&bad), Err(CheckError::Discharge { .. })));

        // vacuous class for v
        let vacuous = or_elim(ProofTree::assume(f("p | q")));
        assert!(check(&vacuous).is_ok());

        // wrong formula under a discharged marker
        let bad = or_elim(ProofTree::rule(
            Rule::OrI1,
            f("p | q"),
            vec![ProofTree::marked(f("p"), "v")],
        ));
        assert!(matches!(check(&bad), Err(CheckError::Discharge { .. })));

        // marker reuse
        let twice = ProofTree::rule(Rule::AndI, f("(p | q) & (p | q)"), vec![good.clone(), good]);
        assert!(matches!(check(&twice), Err(CheckError::Discharge { .. })));
    }

    #[test]
    fn outside_language() {
        let t = ProofTree::assume(f("p > q"));
        assert!(matches!(check(&t), Err(CheckError::Schema { .. })));
        assert!(check(&ProofTree::assume(f("<>p"))).is_err());
        assert!(check(&ProofTree::assume(f("<>p")).desugared()).is_ok());
    }

    #[test]
    fn arity_and_discharge_counts() {
        let t = ProofTree::rule(Rule::AndI, f("p & p"), vec![ProofTree::assume(f("p"))]);
        assert!(check(&t).is_err());
        let t = ProofTree::rule(
            Rule::BoxI,
            f("[]p"),
            vec![ProofTree::assume(f("p")), ProofTree::assume(f("bot"))],
        );
        assert!(check(&t).is_err());
    }
}
