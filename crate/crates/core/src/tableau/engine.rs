use std::collections::VecDeque;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::rules::{derived_partners, expand, expand_derived, Expansion};
use super::{
    Branch, BranchStatus, Closure, Node, RuleSet, Sign, SignedFormula, Tableau, TableauError,
};
use crate::syntax::Formula;

/// Which pending signed formula a branch expands next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExpansionOrder {
    /// Oldest first.
    #[default]
    Fifo,
    /// Uniformly random among the pending ones, from the given seed.
    Shuffled(u64),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub order: ExpansionOrder,
    /// Expand `σ(α≻β)` together with a pending `τ(¬(α≻β))` by the
    /// combined rule. Only meaningful for [`RuleSet::Succ`].
    pub derived_rules: bool,
}

/// Builds the completed tableau for `roots`.
pub fn complete(roots: &[SignedFormula], rules: RuleSet) -> Result<Tableau, TableauError> {
    complete_with(roots, rules, &Options::default())
}

pub fn complete_with(
    roots: &[SignedFormula],
    rules: RuleSet,
    options: &Options,
) -> Result<Tableau, TableauError> {
    match search(roots, rules, options, false)? {
        Outcome::Closed(t) => Ok(t),
        Outcome::Open(_) => unreachable!("a full search returns the whole tableau"),
    }
}

pub(super) enum Outcome {
    /// The whole tableau. Closed unless the search ran to completion.
    Closed(Tableau),
    /// The first open branch found, which is the leftmost.
    Open(Branch),
}

/// Depth-first, left to right. With `stop_at_open` the search ends at the
/// first completed open branch.
pub(super) fn search(
    roots: &[SignedFormula],
    rules: RuleSet,
    options: &Options,
    stop_at_open: bool,
) -> Result<Outcome, TableauError> {
    if let Some(bad) = roots.iter().find(|r| !rules.admits(&r.formula)) {
        return Err(TableauError::OutOfSignature {
            formula: bad.clone(),
            rules,
        });
    }
    let mut work = Work::default();
    for r in roots {
        work.add(r.clone());
    }
    let mut s = Search {
        rules,
        derived: options.derived_rules && rules == RuleSet::Succ,
        rng: match options.order {
            ExpansionOrder::Fifo => None,
            ExpansionOrder::Shuffled(seed) => Some(StdRng::seed_from_u64(seed)),
        },
        stop_at_open,
        found_open: false,
        branches: Vec::new(),
    };
    let tree = s.grow(work)?;
    if s.found_open {
        return Ok(Outcome::Open(
            s.branches.pop().expect("open branch recorded"),
        ));
    }
    Ok(Outcome::Closed(Tableau {
        rules,
        roots: roots.to_vec(),
        tree,
        branches: s.branches,
    }))
}

/// State of one branch under construction.
#[derive(Clone, Default)]
struct Work {
    items: Vec<SignedFormula>,
    done: Vec<bool>,
    pending: VecDeque<usize>,
    closed: Option<Closure>,
}

fn constant_value(f: &Formula) -> Option<bool> {
    match f {
        Formula::Bot => Some(false),
        Formula::Top => Some(true),
        Formula::Neg(a) => match **a {
            Formula::Bot => Some(true),
            Formula::Top => Some(false),
            _ => None,
        },
        _ => None,
    }
}

impl Work {
    fn add(&mut self, sf: SignedFormula) {
        if self.items.contains(&sf) {
            return;
        }
        if self.closed.is_none() {
            if let Some(value) = constant_value(&sf.formula) {
                if value != (sf.sign == Sign::T) {
                    self.closed = Some(Closure::Constant(sf.clone()));
                }
            } else if self.items.iter().any(|x| x.formula == sf.formula) {
                self.closed = Some(Closure::Clash(sf.formula.clone()));
            }
        }
        let inert = sf.formula.is_literal() || constant_value(&sf.formula).is_some();
        if !inert {
            self.pending.push_back(self.items.len());
        }
        self.done.push(inert);
        self.items.push(sf);
    }

    fn into_branch(self, status: BranchStatus) -> Branch {
        Branch {
            formulas: self.items,
            status,
        }
    }
}

struct Search {
    rules: RuleSet,
    derived: bool,
    rng: Option<StdRng>,
    stop_at_open: bool,
    found_open: bool,
    branches: Vec<Branch>,
}

impl Search {
    fn next(&mut self, w: &mut Work) -> Option<usize> {
        loop {
            let i = match &mut self.rng {
                None => w.pending.pop_front()?,
                Some(rng) if !w.pending.is_empty() => {
                    let k = rng.gen_range(0..w.pending.len());
                    w.pending.remove(k)?
                }
                Some(_) => return None,
            };
            if !w.done[i] {
                return Some(i);
            }
        }
    }

    fn leaf(&mut self, w: Work, status: BranchStatus) -> Node {
        self.branches.push(w.into_branch(status));
        Node::Leaf(self.branches.len() - 1)
    }

    fn grow(&mut self, mut w: Work) -> Result<Node, TableauError> {
        loop {
            if let Some(c) = w.closed.take() {
                return Ok(self.leaf(w, BranchStatus::Closed(c)));
            }
            let Some(i) = self.next(&mut w) else {
                self.found_open |= self.stop_at_open;
                return Ok(self.leaf(w, BranchStatus::Open));
            };
            w.done[i] = true;
            let sf = w.items[i].clone();
            let mut premises = vec![sf.clone()];
            let mut expansion = None;
            if self.derived {
                if let Some(partners) = derived_partners(&sf) {
                    let j = w
                        .items
                        .iter()
                        .enumerate()
                        .position(|(j, x)| !w.done[j] && partners.contains(x));
                    if let Some(j) = j {
                        w.done[j] = true;
                        premises.push(w.items[j].clone());
                        expansion = Some(expand_derived(&sf, &w.items[j])?);
                    }
                }
            }
            let expansion = match expansion {
                Some(e) => e,
                None => expand(&sf, self.rules)?,
            };
            let Expansion::Alternatives { rule, alternatives } = expansion else {
                continue;
            };
            let n = alternatives.len();
            let mut children = Vec::with_capacity(n);
            for (k, alt) in alternatives.into_iter().enumerate() {
                let mut child = if k + 1 == n {
                    std::mem::take(&mut w)
                } else {
                    w.clone()
                };
                for x in &alt {
                    child.add(x.clone());
                }
                let node = self.grow(child)?;
                children.push((alt, node));
                if self.found_open {
                    break;
                }
            }
            return Ok(Node::Expand {
                premises,
                rule,
                children,
            });
        }
    }
}
