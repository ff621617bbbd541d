use std::collections::{HashMap, HashSet};
use std::fmt;

use super::{analyze, check, show_path, Discharge, Measure, NdError, Path, ProofTree, Rule};
use crate::syntax::Formula;

/// Marker supply avoiding every marker already in a tree.
struct Fresh {
    used: HashSet<String>,
    next: usize,
}

impl Fresh {
    fn for_tree(t: &ProofTree) -> Self {
        let mut used = HashSet::new();
        for (_, node) in t.nodes() {
            match node {
                ProofTree::Assume {
                    marker: Some(m), ..
                } => {
                    used.insert(m.clone());
                }
                ProofTree::Rule { discharges, .. } => {
                    used.extend(discharges.iter().map(|d| d.marker.clone()))
                }
                _ => {}
            }
        }
        Fresh { used, next: 0 }
    }

    fn marker(&mut self) -> String {
        loop {
            self.next += 1;
            let m = format!("m{}", self.next);
            if self.used.insert(m.clone()) {
                return m;
            }
        }
    }
}

/// Copy of `t` with every marker discharged inside it renamed fresh.
fn rename_copy(t: &ProofTree, fresh: &mut Fresh) -> ProofTree {
    fn go(t: &ProofTree, map: &mut HashMap<String, String>, fresh: &mut Fresh) -> ProofTree {
        match t {
            ProofTree::Assume { formula, marker } => ProofTree::Assume {
                formula: formula.clone(),
                marker: marker
                    .as_ref()
                    .map(|m| map.get(m).cloned().unwrap_or_else(|| m.clone())),
            },
            ProofTree::Ma { .. } => t.clone(),
            ProofTree::Rule {
                rule,
                conclusion,
                premises,
                discharges,
            } => {
                let discharges: Vec<Discharge> = discharges
                    .iter()
                    .map(|d| {
                        let m = fresh.marker();
                        map.insert(d.marker.clone(), m.clone());
                        Discharge {
                            marker: m,
                            formula: d.formula.clone(),
                        }
                    })
                    .collect();
                ProofTree::Rule {
                    rule: *rule,
                    conclusion: conclusion.clone(),
                    premises: premises.iter().map(|p| go(p, map, fresh)).collect(),
                    discharges,
                }
            }
        }
    }
    go(t, &mut HashMap::new(), fresh)
}

/// Replaces each assumption marked `marker` in `t` by a fresh copy of `d`.
fn substitute(t: &ProofTree, marker: &str, d: &ProofTree, fresh: &mut Fresh) -> ProofTree {
    match t {
        ProofTree::Assume {
            marker: Some(m), ..
        } if m == marker => rename_copy(d, fresh),
        ProofTree::Assume { .. } | ProofTree::Ma { .. } => t.clone(),
        ProofTree::Rule {
            rule,
            conclusion,
            premises,
            discharges,
        } => ProofTree::Rule {
            rule: *rule,
            conclusion: conclusion.clone(),
            premises: premises
                .iter()
                .map(|p| substitute(p, marker, d, fresh))
                .collect(),
            discharges: discharges.clone(),
        },
    }
}

fn uses_marker(t: &ProofTree, marker: &str) -> bool {
    match t {
        ProofTree::Assume {
            marker: Some(m), ..
        } => m == marker,
        _ => t.premises().iter().any(|p| uses_marker(p, marker)),
    }
}

/// Literals allowed as `⊥E` conclusions: `p`, `¬p`, `¬⊥`.
fn atomic_target(f: &Formula) -> bool {
    f.is_literal() || *f == Formula::neg(Formula::Bot)
}

/// Derivation of `goal` from `d : ⊥` using `⊥E` only at literals.
fn bot_to(d: ProofTree, goal: &Formula, fresh: &mut Fresh) -> ProofTree {
    let neg = |f: &Formula| Formula::neg(f.clone());
    let r = ProofTree::rule;
    match goal {
        Formula::Bot => d,
        g if atomic_target(g) => r(Rule::BotE, g.clone(), vec![d]),
        Formula::And(a, b) => {
            let d2 = rename_copy(&d, fresh);
            r(
                Rule::AndI,
                goal.clone(),
                vec![bot_to(d, a, fresh), bot_to(d2, b, fresh)],
            )
        }
        Formula::Or(a, _) => r(Rule::OrI1, goal.clone(), vec![bot_to(d, a, fresh)]),
        Formula::Box(a) => {
            let d2 = rename_copy(&d, fresh);
            let u = fresh.marker();
            ProofTree::discharging(
                Rule::BoxI,
                goal.clone(),
                vec![bot_to(d, a, fresh), d2],
                vec![Discharge::new(&u, neg(a))],
            )
        }
        Formula::Neg(inner) => match &**inner {
            Formula::And(a, _) => r(
                Rule::NegAndI1,
                goal.clone(),
                vec![bot_to(d, &neg(a), fresh)],
            ),
            Formula::Or(a, b) => {
                let d2 = rename_copy(&d, fresh);
                r(
                    Rule::NegOrI,
                    goal.clone(),
                    vec![bot_to(d, &neg(a), fresh), bot_to(d2, &neg(b), fresh)],
                )
            }
            Formula::Neg(a) => r(Rule::NegNegI, goal.clone(), vec![bot_to(d, a, fresh)]),
            Formula::Box(a) => r(Rule::NegBoxI, goal.clone(), vec![bot_to(d, &neg(a), fresh)]),
            _ => r(Rule::BotE, goal.clone(), vec![d]),
        },
        _ => r(Rule::BotE, goal.clone(), vec![d]),
    }
}

fn atomize(t: &ProofTree, fresh: &mut Fresh) -> ProofTree {
    match t {
        ProofTree::Rule {
            rule,
            conclusion,
            premises,
            discharges,
        } => {
            let premises: Vec<ProofTree> = premises.iter().map(|p| atomize(p, fresh)).collect();
            if *rule == Rule::BotE && !atomic_target(conclusion) {
                let d = premises.into_iter().next().expect("⊥E has one premise");
                return bot_to(d, conclusion, fresh);
            }
            ProofTree::Rule {
                rule: *rule,
                conclusion: conclusion.clone(),
                premises,
                discharges: discharges.clone(),
            }
        }
        _ => t.clone(),
    }
}

/// Rewrites every `⊥E` so that it concludes a variable, a negated
/// variable or `¬⊥`. The judgement is unchanged.
pub fn atomize_bot(p: &ProofTree) -> Result<ProofTree, NdError> {
    check(p)?;
    Ok(atomize(p, &mut Fresh::for_tree(p)))
}

/// The transformation applied at a cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conversion {
    And,
    Or,
    NegAnd,
    NegOr,
    NegNeg,
    Box,
    NegBox,
    /// The elimination moved into both minor premises of a del-rule.
    Permutation,
    /// A del-rule with an empty class in a minor premise replaced by
    /// that minor premise.
    Redundancy,
}

impl fmt::Display for Conversion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conversion::And => "∧-conversion",
            Conversion::Or => "∨-conversion",
            Conversion::NegAnd => "¬∧-conversion",
            Conversion::NegOr => "¬∨-conversion",
            Conversion::NegNeg => "¬¬-conversion",
            Conversion::Box => "□-conversion",
            Conversion::NegBox => "¬□-conversion",
            Conversion::Permutation => "permutation",
            Conversion::Redundancy => "redundant del-rule removal",
        })
    }
}

/// Replacement for the elimination `e` whose major premise `m` was just
/// introduced.
fn detour(e: &ProofTree, m: &ProofTree, fresh: &mut Fresh) -> Option<(ProofTree, Conversion)> {
    let (
        ProofTree::Rule {
            rule: er,
            premises: ep,
            discharges: ed,
            ..
        },
        ProofTree::Rule {
            rule: mr,
            premises: mp,
            ..
        },
    ) = (e, m)
    else {
        return None;
    };
    let take = |i: usize| mp[i].clone();
    Some(match (mr, er) {
        (Rule::AndI, Rule::AndE1) => (take(0), Conversion::And),
        (Rule::AndI, Rule::AndE2) => (take(1), Conversion::And),
        (Rule::OrI1, Rule::OrE) => (
            substitute(&ep[1], &ed[0].marker, &mp[0], fresh),
            Conversion::Or,
        ),
        (Rule::OrI2, Rule::OrE) => (
            substitute(&ep[2], &ed[1].marker, &mp[0], fresh),
            Conversion::Or,
        ),
        (Rule::NegAndI1, Rule::NegAndE) => (
            substitute(&ep[1], &ed[0].marker, &mp[0], fresh),
            Conversion::NegAnd,
        ),
        (Rule::NegAndI2, Rule::NegAndE) => (
            substitute(&ep[2], &ed[1].marker, &mp[0], fresh),
            Conversion::NegAnd,
        ),
        (Rule::NegOrI, Rule::NegOrE1) => (take(0), Conversion::NegOr),
        (Rule::NegOrI, Rule::NegOrE2) => (take(1), Conversion::NegOr),
        (Rule::NegNegI, Rule::NegNegE) => (take(0), Conversion::NegNeg),
        (Rule::BoxI, Rule::BoxE) => (take(0), Conversion::Box),
        (Rule::NegBoxI, Rule::NegBoxE) => (take(0), Conversion::NegBox),
        _ => return None,
    })
}

/// `e` with its major premise replaced.
fn with_major(e: &ProofTree, major: ProofTree) -> ProofTree {
    e.replaced_at(&[0], major)
        .expect("eliminations have a major premise")
}

/// Removes a redundant del-rule `m` or permutes `e` into its minors.
fn through_del(e: &ProofTree, m: &ProofTree, fresh: &mut Fresh) -> (ProofTree, Conversion) {
    let ProofTree::Rule {
        rule,
        premises,
        discharges,
        ..
    } = m
    else {
        unreachable!("del-rule conclusions are rule nodes")
    };
    for k in 0..2 {
        if !uses_marker(&premises[k + 1], &discharges[k].marker) {
            return (
                with_major(e, premises[k + 1].clone()),
                Conversion::Redundancy,
            );
        }
    }
    let first = with_major(e, premises[1].clone());
    let placeholder = ProofTree::assume(e.premises()[0].conclusion().clone());
    let second = with_major(
        &rename_copy(&with_major(e, placeholder), fresh),
        premises[2].clone(),
    );
    let permuted = ProofTree::Rule {
        rule: *rule,
        conclusion: e.conclusion().clone(),
        premises: vec![premises[0].clone(), first, second],
        discharges: discharges.clone(),
    };
    (permuted, Conversion::Permutation)
}

/// Applies the conversion for the cut whose segments end at `cut`.
pub fn convert_at(p: &ProofTree, cut: &[usize]) -> Result<(ProofTree, Conversion), NdError> {
    let report = analyze(p)?;
    if !report.cuts.iter().any(|c| c.end == cut) {
        return Err(NdError::NotACut(cut.to_vec()));
    }
    let parent_path = &cut[..cut.len() - 1];
    let e = p.at(parent_path).expect("cut end has a parent");
    let m = p.at(cut).expect("cut end exists");
    let mut fresh = Fresh::for_tree(p);
    let (replacement, kind) = if m.rule_tag().is_some_and(|r| r.is_del()) {
        through_del(e, m, &mut fresh)
    } else {
        detour(e, m, &mut fresh).ok_or_else(|| NdError::NotACut(cut.to_vec()))?
    };
    let out = p
        .replaced_at(parent_path, replacement)
        .expect("parent path exists");
    Ok((out, kind))
}

/// One normalization step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub conversion: Conversion,
    pub at: Path,
    pub before: Measure,
    pub after: Measure,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: {} -> {}",
            self.conversion,
            show_path(&self.at),
            self.before,
            self.after
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub proof: ProofTree,
    /// Whether `⊥E` atomization changed the input.
    pub atomized: bool,
    pub steps: Vec<Step>,
}

/// Atomizes `⊥E`, then converts the rightmost top critical cut until none
/// remain. Every step strictly lowers the measure; when the preferred cut
/// would not, the other critical cuts are tried right to left, top ones
/// first.
pub fn normalize_traced(p: &ProofTree) -> Result<Normalization, NdError> {
    let start = atomize_bot(p)?;
    let atomized = start != *p;
    let mut proof = start;
    let mut steps = Vec::new();
    loop {
        let report = analyze(&proof)?;
        if report.critical.is_empty() {
            return Ok(Normalization {
                proof,
                atomized,
                steps,
            });
        }
        let before = report.measure();
        let mut order: Vec<Path> = Vec::new();
        if let Some(c) = report.rightmost_top_critical() {
            order.push(c.end.clone());
        }
        let mut tops: Vec<Path> = report
            .top_critical()
            .iter()
            .map(|c| c.end.clone())
            .collect();
        tops.sort_by(|a, b| b.cmp(a));
        let mut rest: Vec<Path> = report
            .critical
            .iter()
            .map(|&i| report.cuts[i].end.clone())
            .collect();
        rest.sort_by(|a, b| b.cmp(a));
        for c in tops.into_iter().chain(rest) {
            if !order.contains(&c) {
                order.push(c);
            }
        }
        let mut advanced = false;
        for at in order {
            let (next, conversion) = convert_at(&proof, &at)?;
            let after = analyze(&next)?.measure();
            if after < before {
                steps.push(Step {
                    conversion,
                    at,
                    before,
                    after,
                });
                proof = next;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Err(NdError::Stuck(before));
        }
    }
}

pub fn normalize(p: &ProofTree) -> Result<ProofTree, NdError> {
    Ok(normalize_traced(p)?.proof)
}
