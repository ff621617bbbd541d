//! Random natural-deduction proofs, built goal-first so that every
//! generated tree passes the checker.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::Rng;
use tml_core::nd::{Conversion, Discharge, ProofTree, Rule};
use tml_core::syntax::Formula;

fn neg(f: &Formula) -> Formula {
    Formula::neg(f.clone())
}

/// Random formula over `{¬, ∧, ∨, □, ⊥}` and `vars`.
pub fn random_nd_formula(rng: &mut StdRng, vars: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.35) {
        return if rng.gen_bool(0.1) {
            Formula::Bot
        } else {
            Formula::var(vars[rng.gen_range(0..vars.len())])
        };
    }
    let sub = |rng: &mut StdRng| random_nd_formula(rng, vars, depth - 1);
    match rng.gen_range(0..4) {
        0 => Formula::neg(sub(rng)),
        1 => Formula::square(sub(rng)),
        2 => Formula::and(sub(rng), sub(rng)),
        _ => Formula::or(sub(rng), sub(rng)),
    }
}

pub struct Generator {
    pub rng: StdRng,
    pub vars: Vec<&'static str>,
    next_marker: usize,
}

impl Generator {
    pub fn new(rng: StdRng, vars: &[&'static str]) -> Self {
        Generator {
            rng,
            vars: vars.to_vec(),
            next_marker: 0,
        }
    }

    fn marker(&mut self) -> String {
        self.next_marker += 1;
        format!("h{}", self.next_marker)
    }

    fn formula(&mut self, depth: usize) -> Formula {
        let vars = self.vars.clone();
        random_nd_formula(&mut self.rng, &vars, depth)
    }

    /// Leaf for `goal`: a discharged hypothesis when one is in scope,
    /// otherwise an open assumption.
    fn leaf(&mut self, goal: &Formula, scope: &[(Formula, String)]) -> ProofTree {
        let hyps: Vec<&String> = scope
            .iter()
            .filter(|(f, _)| f == goal)
            .map(|(_, m)| m)
            .collect();
        if !hyps.is_empty() && self.rng.gen_bool(0.8) {
            let m = hyps[self.rng.gen_range(0..hyps.len())].clone();
            return ProofTree::marked(goal.clone(), &m);
        }
        if let Formula::Or(a, b) = goal {
            if **b == neg(&Formula::square((**a).clone())) && self.rng.gen_bool(0.7) {
                return ProofTree::ma((**a).clone());
            }
        }
        ProofTree::assume(goal.clone())
    }

    /// A checked proof of `goal` whose open assumptions are arbitrary.
    pub fn prove(
        &mut self,
        goal: &Formula,
        depth: usize,
        scope: &[(Formula, String)],
    ) -> ProofTree {
        if depth == 0 || self.rng.gen_bool(0.25) {
            return self.leaf(goal, scope);
        }
        let d = depth - 1;
        let r = ProofTree::rule;
        let mut options: Vec<u8> = vec![0, 1, 2, 3, 4, 5];
        match goal {
            Formula::And(..) => options.extend([10, 10]),
            Formula::Or(..) => options.extend([11, 11]),
            Formula::Box(..) => options.extend([12, 12]),
            Formula::Bot => options.extend([13, 13]),
            Formula::Neg(inner) => {
                options.extend([6, 7]);
                match &**inner {
                    Formula::And(..) => options.extend([14, 14]),
                    Formula::Or(..) => options.extend([15, 15]),
                    Formula::Neg(..) => options.extend([16, 16]),
                    Formula::Box(..) => options.extend([17, 17]),
                    _ => {}
                }
            }
            Formula::Var(_) => options.push(7),
            _ => {}
        }
        let choice = options[self.rng.gen_range(0..options.len())];
        match choice {
            0 => {
                let x = self.formula(1);
                let major = Formula::and(goal.clone(), x);
                r(
                    Rule::AndE1,
                    goal.clone(),
                    vec![self.prove(&major, d, scope)],
                )
            }
            1 => {
                let x = self.formula(1);
                let major = Formula::and(x, goal.clone());
                r(
                    Rule::AndE2,
                    goal.clone(),
                    vec![self.prove(&major, d, scope)],
                )
            }
            2 => {
                let (x, y) = (self.formula(1), self.formula(1));
                let major = self.prove(&Formula::or(x.clone(), y.clone()), d, scope);
                self.del(Rule::OrE, goal, major, x, y, d, scope)
            }
            3 => {
                let (x, y) = (self.formula(1), self.formula(1));
                let major = self.prove(&neg(&Formula::and(x.clone(), y.clone())), d, scope);
                self.del(Rule::NegAndE, goal, major, neg(&x), neg(&y), d, scope)
            }
            4 => r(
                Rule::NegNegE,
                goal.clone(),
                vec![self.prove(&neg(&neg(goal)), d, scope)],
            ),
            5 => r(
                Rule::BoxE,
                goal.clone(),
                vec![self.prove(&Formula::square(goal.clone()), d, scope)],
            ),
            6 => {
                let Formula::Neg(a) = goal else {
                    unreachable!()
                };
                let x = self.formula(1);
                let (rule, major) = if self.rng.gen_bool(0.5) {
                    (Rule::NegOrE1, neg(&Formula::or((**a).clone(), x)))
                } else {
                    (Rule::NegOrE2, neg(&Formula::or(x, (**a).clone())))
                };
                r(rule, goal.clone(), vec![self.prove(&major, d, scope)])
            }
            7 => {
                // ¬□φ, φ ⊢ ¬φ for goal ¬φ; ⊥ ⊢ goal otherwise
                if let Formula::Neg(a) = goal {
                    if self.rng.gen_bool(0.5) {
                        return r(
                            Rule::NegBoxE,
                            goal.clone(),
                            vec![
                                self.prove(&neg(&Formula::square((**a).clone())), d, scope),
                                self.prove(a, d, scope),
                            ],
                        );
                    }
                }
                r(
                    Rule::BotE,
                    goal.clone(),
                    vec![self.prove(&Formula::Bot, d, scope)],
                )
            }
            10 => {
                let Formula::And(a, b) = goal else {
                    unreachable!()
                };
                r(
                    Rule::AndI,
                    goal.clone(),
                    vec![self.prove(a, d, scope), self.prove(b, d, scope)],
                )
            }
            11 => {
                let Formula::Or(a, b) = goal else {
                    unreachable!()
                };
                if self.rng.gen_bool(0.5) {
                    r(Rule::OrI1, goal.clone(), vec![self.prove(a, d, scope)])
                } else {
                    r(Rule::OrI2, goal.clone(), vec![self.prove(b, d, scope)])
                }
            }
            12 => {
                let Formula::Box(a) = goal else {
                    unreachable!()
                };
                let body = self.prove(a, d, scope);
                self.box_intro(a, body, d, scope)
            }
            13 => {
                let x = self.formula(1);
                let pair = Formula::and(neg(&x), Formula::square(x));
                r(Rule::BotI, Formula::Bot, vec![self.prove(&pair, d, scope)])
            }
            14 => {
                let Formula::Neg(inner) = goal else {
                    unreachable!()
                };
                let Formula::And(a, b) = &**inner else {
                    unreachable!()
                };
                if self.rng.gen_bool(0.5) {
                    r(
                        Rule::NegAndI1,
                        goal.clone(),
                        vec![self.prove(&neg(a), d, scope)],
                    )
                } else {
                    r(
                        Rule::NegAndI2,
                        goal.clone(),
                        vec![self.prove(&neg(b), d, scope)],
                    )
                }
            }
            15 => {
                let Formula::Neg(inner) = goal else {
                    unreachable!()
                };
                let Formula::Or(a, b) = &**inner else {
                    unreachable!()
                };
                r(
                    Rule::NegOrI,
                    goal.clone(),
                    vec![self.prove(&neg(a), d, scope), self.prove(&neg(b), d, scope)],
                )
            }
            16 => {
                let Formula::Neg(inner) = goal else {
                    unreachable!()
                };
                let Formula::Neg(a) = &**inner else {
                    unreachable!()
                };
                r(Rule::NegNegI, goal.clone(), vec![self.prove(a, d, scope)])
            }
            17 => {
                let Formula::Neg(inner) = goal else {
                    unreachable!()
                };
                let Formula::Box(a) = &**inner else {
                    unreachable!()
                };
                r(
                    Rule::NegBoxI,
                    goal.clone(),
                    vec![self.prove(&neg(a), d, scope)],
                )
            }
            _ => self.leaf(goal, scope),
        }
    }

    /// `∨E` or `¬∧E` on `major` with classes `x`, `y`, both minors proving `goal`.
    #[allow(clippy::too_many_arguments)]
    fn del(
        &mut self,
        rule: Rule,
        goal: &Formula,
        major: ProofTree,
        x: Formula,
        y: Formula,
        d: usize,
        scope: &[(Formula, String)],
    ) -> ProofTree {
        let (u, v) = (self.marker(), self.marker());
        let mut left = scope.to_vec();
        left.push((x.clone(), u.clone()));
        let mut right = scope.to_vec();
        right.push((y.clone(), v.clone()));
        let minors = vec![self.prove(goal, d, &left), self.prove(goal, d, &right)];
        ProofTree::discharging(
            rule,
            goal.clone(),
            std::iter::once(major).chain(minors).collect(),
            vec![Discharge::new(&u, x), Discharge::new(&v, y)],
        )
    }

    /// `□I` from a proof of `a` and a refutation of `¬a`.
    fn box_intro(
        &mut self,
        a: &Formula,
        body: ProofTree,
        d: usize,
        scope: &[(Formula, String)],
    ) -> ProofTree {
        let u = self.marker();
        let mut inner = scope.to_vec();
        inner.push((neg(a), u.clone()));
        let refutation = self.refute(a, &u, d, &inner);
        ProofTree::discharging(
            Rule::BoxI,
            Formula::square(a.clone()),
            vec![body, refutation],
            vec![Discharge::new(&u, neg(a))],
        )
    }

    /// A derivation of `⊥`, often through `¬a ∧ □a` using hypothesis `u`.
    fn refute(&mut self, a: &Formula, u: &str, d: usize, scope: &[(Formula, String)]) -> ProofTree {
        if self.rng.gen_bool(0.5) {
            let pair = Formula::and(neg(a), Formula::square(a.clone()));
            let boxed = self.prove(&Formula::square(a.clone()), d, scope);
            ProofTree::rule(
                Rule::BotI,
                Formula::Bot,
                vec![ProofTree::rule(
                    Rule::AndI,
                    pair,
                    vec![ProofTree::marked(neg(a), u), boxed],
                )],
            )
        } else {
            self.prove(&Formula::Bot, d, scope)
        }
    }

    /// Copy of `t` with the markers it discharges renamed apart.
    pub fn rename(&mut self, t: &ProofTree) -> ProofTree {
        fn go(t: &ProofTree, map: &mut HashMap<String, String>, g: &mut Generator) -> ProofTree {
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
                            let fresh = g.marker();
                            map.insert(d.marker.clone(), fresh.clone());
                            Discharge::new(&fresh, d.formula.clone())
                        })
                        .collect();
                    ProofTree::Rule {
                        rule: *rule,
                        conclusion: conclusion.clone(),
                        premises: premises.iter().map(|p| go(p, map, g)).collect(),
                        discharges,
                    }
                }
            }
        }
        go(t, &mut HashMap::new(), self)
    }

    /// Wraps `body : φ` in a detour whose conversion is `kind`. Kinds
    /// `NegOr` and `NegBox` need `φ` to be a negation.
    pub fn detour(&mut self, kind: Conversion, body: ProofTree) -> Option<ProofTree> {
        let phi = body.conclusion().clone();
        let r = ProofTree::rule;
        let d = 2;
        Some(match kind {
            Conversion::And => {
                let x = self.formula(1);
                let side = self.prove(&x, d, &[]);
                if self.rng.gen_bool(0.5) {
                    r(
                        Rule::AndE1,
                        phi.clone(),
                        vec![r(Rule::AndI, Formula::and(phi, x), vec![body, side])],
                    )
                } else {
                    r(
                        Rule::AndE2,
                        phi.clone(),
                        vec![r(Rule::AndI, Formula::and(x, phi), vec![side, body])],
                    )
                }
            }
            Conversion::Or => {
                let x = self.formula(1);
                let (u, v) = (self.marker(), self.marker());
                let other = self.prove(&phi, d, &[(x.clone(), v.clone())]);
                ProofTree::discharging(
                    Rule::OrE,
                    phi.clone(),
                    vec![
                        r(Rule::OrI1, Formula::or(phi.clone(), x.clone()), vec![body]),
                        ProofTree::marked(phi.clone(), &u),
                        other,
                    ],
                    vec![Discharge::new(&u, phi), Discharge::new(&v, x)],
                )
            }
            Conversion::NegAnd => {
                let (x, y) = (self.formula(1), self.formula(1));
                let (u, v) = (self.marker(), self.marker());
                let nx = self.prove(&neg(&x), d, &[]);
                let left = self.prove(&phi, d, &[(neg(&x), u.clone())]);
                ProofTree::discharging(
                    Rule::NegAndE,
                    phi.clone(),
                    vec![
                        r(
                            Rule::NegAndI1,
                            neg(&Formula::and(x.clone(), y.clone())),
                            vec![nx],
                        ),
                        left,
                        body,
                    ],
                    vec![Discharge::new(&u, neg(&x)), Discharge::new(&v, neg(&y))],
                )
            }
            Conversion::NegOr => {
                let Formula::Neg(a) = &phi else { return None };
                let x = self.formula(1);
                let side = self.prove(&neg(&x), d, &[]);
                r(
                    Rule::NegOrE1,
                    phi.clone(),
                    vec![r(
                        Rule::NegOrI,
                        neg(&Formula::or((**a).clone(), x)),
                        vec![body, side],
                    )],
                )
            }
            Conversion::NegNeg => r(
                Rule::NegNegE,
                phi.clone(),
                vec![r(Rule::NegNegI, neg(&neg(&phi)), vec![body])],
            ),
            Conversion::Box => {
                let boxed = self.box_intro(&phi, body, d, &[]);
                r(Rule::BoxE, phi, vec![boxed])
            }
            Conversion::NegBox => {
                let Formula::Neg(a) = &phi else { return None };
                let minor = self.prove(a, d, &[]);
                r(
                    Rule::NegBoxE,
                    phi.clone(),
                    vec![
                        r(
                            Rule::NegBoxI,
                            neg(&Formula::square((**a).clone())),
                            vec![body],
                        ),
                        minor,
                    ],
                )
            }
            Conversion::Permutation | Conversion::Redundancy => {
                // ∧E₁ applied to ∨E whose minors both introduce φ ∧ (x ∨ y)
                let (x, y) = (self.formula(1), self.formula(1));
                let (u, v) = (self.marker(), self.marker());
                let disj = Formula::or(x.clone(), y.clone());
                let seg = Formula::and(phi.clone(), disj.clone());
                let major = self.prove(&disj, d, &[]);
                let copy = self.rename(&body);
                let left_side = if kind == Conversion::Permutation {
                    r(
                        Rule::OrI1,
                        disj.clone(),
                        vec![ProofTree::marked(x.clone(), &u)],
                    )
                } else {
                    self.prove(&disj, d, &[])
                };
                let right_side = r(
                    Rule::OrI2,
                    disj.clone(),
                    vec![ProofTree::marked(y.clone(), &v)],
                );
                let del = ProofTree::discharging(
                    Rule::OrE,
                    seg.clone(),
                    vec![
                        major,
                        r(Rule::AndI, seg.clone(), vec![body, left_side]),
                        r(Rule::AndI, seg, vec![copy, right_side]),
                    ],
                    vec![Discharge::new(&u, x), Discharge::new(&v, y)],
                );
                r(Rule::AndE1, phi, vec![del])
            }
        })
    }
}

pub const CONVERSIONS: [Conversion; 9] = [
    Conversion::And,
    Conversion::Or,
    Conversion::NegAnd,
    Conversion::NegOr,
    Conversion::NegNeg,
    Conversion::Box,
    Conversion::NegBox,
    Conversion::Permutation,
    Conversion::Redundancy,
];

/// Proof with a detour of `kind` injected at a random node of a base proof.
pub fn injected(g: &mut Generator, kind: Conversion) -> ProofTree {
    loop {
        let vars = g.vars.clone();
        let goal = random_nd_formula(&mut g.rng, &vars, 2);
        let base = g.prove(&goal, 3, &[]);
        let sites: Vec<_> = base
            .nodes()
            .into_iter()
            .filter(|(_, n)| {
                !matches!(kind, Conversion::NegOr | Conversion::NegBox)
                    || matches!(n.conclusion(), Formula::Neg(_))
            })
            .map(|(path, n)| (path, n.clone()))
            .collect();
        if sites.is_empty() {
            continue;
        }
        let (path, node) = sites[g.rng.gen_range(0..sites.len())].clone();
        let Some(wrapped) = g.detour(kind, node) else {
            continue;
        };
        return base.replaced_at(&path, wrapped).expect("site exists");
    }
}
