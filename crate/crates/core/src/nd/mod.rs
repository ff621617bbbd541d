//! Natural deduction for the ≻-free language: proof trees, a checker,
//! cut analysis and normalization.
//!
//! Formulas inside proofs use `¬`, `∧`, `∨`, `□`, `⊥` only. The JSON reader
//! rewrites `◇α` to `¬□¬α` and `⊤` to `¬⊥`; `≻` is rejected.
//!
//! The major premise of every elimination rule is premise 0. Discharging
//! rules list their discharges in schema order:
//!
//! | rule  | premises             | discharges (premise scoped)      |
//! |-------|----------------------|----------------------------------|
//! | `∨E`  | `φ∨ψ`, `χ`, `χ`      | `φ` (1), `ψ` (2)                 |
//! | `¬∧E` | `¬(φ∧ψ)`, `χ`, `χ`   | `¬φ` (1), `¬ψ` (2)               |
//! | `□I`  | `φ`, `⊥`             | `¬φ` (1)                         |

mod builtins;
mod check;
mod cuts;
mod json;
mod reduce;

use std::fmt;
use std::str::FromStr;

pub use builtins::builtin_examples;
pub use check::{check, CheckError, Judgement};
pub use cuts::{analyze, is_normal, Cut, CutReport, Measure, Segment};
pub use json::FormatError;
pub use reduce::{
    atomize_bot, convert_at, normalize, normalize_traced, Conversion, Normalization, Step,
};

use crate::syntax::Formula;

/// Position of a node: premise indices from the root.
pub type Path = Vec<usize>;

pub(crate) fn show_path(p: &[usize]) -> String {
    if p.is_empty() {
        "root".into()
    } else {
        p.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    AndI,
    AndE1,
    AndE2,
    NegAndI1,
    NegAndI2,
    NegAndE,
    OrI1,
    OrI2,
    OrE,
    NegOrI,
    NegOrE1,
    NegOrE2,
    NegNegI,
    NegNegE,
    BoxI,
    BoxE,
    NegBoxI,
    NegBoxE,
    BotI,
    BotE,
}

impl Rule {
    pub const ALL: [Rule; 20] = [
        Rule::AndI,
        Rule::AndE1,
        Rule::AndE2,
        Rule::NegAndI1,
        Rule::NegAndI2,
        Rule::NegAndE,
        Rule::OrI1,
        Rule::OrI2,
        Rule::OrE,
        Rule::NegOrI,
        Rule::NegOrE1,
        Rule::NegOrE2,
        Rule::NegNegI,
        Rule::NegNegE,
        Rule::BoxI,
        Rule::BoxE,
        Rule::NegBoxI,
        Rule::NegBoxE,
        Rule::BotI,
        Rule::BotE,
    ];

    /// Tag used in the JSON format.
    pub fn name(self) -> &'static str {
        match self {
            Rule::AndI => "AndI",
            Rule::AndE1 => "AndE1",
            Rule::AndE2 => "AndE2",
            Rule::NegAndI1 => "NegAndI1",
            Rule::NegAndI2 => "NegAndI2",
            Rule::NegAndE => "NegAndE",
            Rule::OrI1 => "OrI1",
            Rule::OrI2 => "OrI2",
            Rule::OrE => "OrE",
            Rule::NegOrI => "NegOrI",
            Rule::NegOrE1 => "NegOrE1",
            Rule::NegOrE2 => "NegOrE2",
            Rule::NegNegI => "NegNegI",
            Rule::NegNegE => "NegNegE",
            Rule::BoxI => "BoxI",
            Rule::BoxE => "BoxE",
            Rule::NegBoxI => "NegBoxI",
            Rule::NegBoxE => "NegBoxE",
            Rule::BotI => "BotI",
            Rule::BotE => "BotE",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rule::AndI => "∧I",
            Rule::AndE1 => "∧E₁",
            Rule::AndE2 => "∧E₂",
            Rule::NegAndI1 => "¬∧I₁",
            Rule::NegAndI2 => "¬∧I₂",
            Rule::NegAndE => "¬∧E",
            Rule::OrI1 => "∨I₁",
            Rule::OrI2 => "∨I₂",
            Rule::OrE => "∨E",
            Rule::NegOrI => "¬∨I",
            Rule::NegOrE1 => "¬∨E₁",
            Rule::NegOrE2 => "¬∨E₂",
            Rule::NegNegI => "¬¬I",
            Rule::NegNegE => "¬¬E",
            Rule::BoxI => "□I",
            Rule::BoxE => "□E",
            Rule::NegBoxI => "¬□I",
            Rule::NegBoxE => "¬□E",
            Rule::BotI => "⊥I",
            Rule::BotE => "⊥E",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Rule::AndI | Rule::NegOrI | Rule::BoxI | Rule::NegBoxE => 2,
            Rule::NegAndE | Rule::OrE => 3,
            _ => 1,
        }
    }

    /// Disjunction-elimination-like: the minor premises repeat the
    /// conclusion.
    pub fn is_del(self) -> bool {
        matches!(self, Rule::OrE | Rule::NegAndE)
    }

    pub fn is_intro(self) -> bool {
        matches!(
            self,
            Rule::AndI
                | Rule::NegAndI1
                | Rule::NegAndI2
                | Rule::OrI1
                | Rule::OrI2
                | Rule::NegOrI
                | Rule::NegNegI
                | Rule::BoxI
                | Rule::NegBoxI
                | Rule::BotI
        )
    }

    /// Eliminations whose major premise can end a cut. `⊥E` is excluded:
    /// its major premise `⊥` has no introduction to undo.
    pub fn is_elim(self) -> bool {
        !self.is_intro() && self != Rule::BotE
    }

    /// For each discharge slot, the premise it scopes over.
    pub fn discharge_scopes(self) -> &'static [usize] {
        match self {
            Rule::OrE | Rule::NegAndE => &[1, 2],
            Rule::BoxI => &[1],
            _ => &[],
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown rule '{s}'"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Discharge {
    pub marker: String,
    pub formula: Formula,
}

impl Discharge {
    pub fn new(marker: &str, formula: Formula) -> Self {
        Discharge {
            marker: marker.into(),
            formula,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProofTree {
    /// An assumption, discharged by the ancestor that names its marker.
    Assume {
        formula: Formula,
        marker: Option<String>,
    },
    /// Instance `φ ∨ ¬□φ` of the modal axiom.
    Ma { formula: Formula },
    Rule {
        rule: Rule,
        conclusion: Formula,
        premises: Vec<ProofTree>,
        discharges: Vec<Discharge>,
    },
}

impl ProofTree {
    pub fn assume(formula: Formula) -> Self {
        ProofTree::Assume {
            formula,
            marker: None,
        }
    }

    pub fn marked(formula: Formula, marker: &str) -> Self {
        ProofTree::Assume {
            formula,
            marker: Some(marker.into()),
        }
    }

    /// `φ ∨ ¬□φ`.
    pub fn ma(phi: Formula) -> Self {
        ProofTree::Ma {
            formula: Formula::or(phi.clone(), Formula::neg(Formula::square(phi))),
        }
    }

    pub fn rule(rule: Rule, conclusion: Formula, premises: Vec<ProofTree>) -> Self {
        ProofTree::Rule {
            rule,
            conclusion,
            premises,
            discharges: Vec::new(),
        }
    }

    pub fn discharging(
        rule: Rule,
        conclusion: Formula,
        premises: Vec<ProofTree>,
        discharges: Vec<Discharge>,
    ) -> Self {
        ProofTree::Rule {
            rule,
            conclusion,
            premises,
            discharges,
        }
    }

    pub fn conclusion(&self) -> &Formula {
        match self {
            ProofTree::Assume { formula, .. } | ProofTree::Ma { formula } => formula,
            ProofTree::Rule { conclusion, .. } => conclusion,
        }
    }

    pub fn premises(&self) -> &[ProofTree] {
        match self {
            ProofTree::Rule { premises, .. } => premises,
            _ => &[],
        }
    }

    pub fn rule_tag(&self) -> Option<Rule> {
        match self {
            ProofTree::Rule { rule, .. } => Some(*rule),
            _ => None,
        }
    }

    pub fn size(&self) -> usize {
        1 + self.premises().iter().map(|p| p.size()).sum::<usize>()
    }

    pub fn at(&self, path: &[usize]) -> Option<&ProofTree> {
        match path.split_first() {
            None => Some(self),
            Some((i, rest)) => self.premises().get(*i)?.at(rest),
        }
    }

    /// Copy with the subtree at `path` replaced; `None` if there is no
    /// such node.
    pub fn replaced_at(&self, path: &[usize], with: ProofTree) -> Option<ProofTree> {
        let Some((i, rest)) = path.split_first() else {
            return Some(with);
        };
        let ProofTree::Rule {
            rule,
            conclusion,
            premises,
            discharges,
        } = self
        else {
            return None;
        };
        let mut premises = premises.clone();
        let slot = premises.get_mut(*i)?;
        *slot = slot.replaced_at(rest, with)?;
        Some(ProofTree::Rule {
            rule: *rule,
            conclusion: conclusion.clone(),
            premises,
            discharges: discharges.clone(),
        })
    }

    /// Every node with its path, preorder.
    pub fn nodes(&self) -> Vec<(Path, &ProofTree)> {
        fn go<'a>(t: &'a ProofTree, path: &mut Path, out: &mut Vec<(Path, &'a ProofTree)>) {
            out.push((path.clone(), t));
            for (i, p) in t.premises().iter().enumerate() {
                path.push(i);
                go(p, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Rewrites `◇α` to `¬□¬α` and `⊤` to `¬⊥` throughout.
    pub fn desugared(&self) -> ProofTree {
        match self {
            ProofTree::Assume { formula, marker } => ProofTree::Assume {
                formula: desugar(formula),
                marker: marker.clone(),
            },
            ProofTree::Ma { formula } => ProofTree::Ma {
                formula: desugar(formula),
            },
            ProofTree::Rule {
                rule,
                conclusion,
                premises,
                discharges,
            } => ProofTree::Rule {
                rule: *rule,
                conclusion: desugar(conclusion),
                premises: premises.iter().map(|p| p.desugared()).collect(),
                discharges: discharges
                    .iter()
                    .map(|d| Discharge {
                        marker: d.marker.clone(),
                        formula: desugar(&d.formula),
                    })
                    .collect(),
            },
        }
    }
}

/// `◇α` to `¬□¬α`, `⊤` to `¬⊥`; `≻` is left in place for the checker to
/// reject.
pub fn desugar(f: &Formula) -> Formula {
    match f {
        Formula::Top => Formula::neg(Formula::Bot),
        Formula::Bot | Formula::Var(_) => f.clone(),
        Formula::Neg(a) => Formula::neg(desugar(a)),
        Formula::Box(a) => Formula::square(desugar(a)),
        Formula::Dia(a) => Formula::neg(Formula::square(Formula::neg(desugar(a)))),
        Formula::And(a, b) => Formula::and(desugar(a), desugar(b)),
        Formula::Or(a, b) => Formula::or(desugar(a), desugar(b)),
        Formula::Succ(a, b) => Formula::succ(desugar(a), desugar(b)),
    }
}

fn write_tree(t: &ProofTree, indent: usize, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    let pad = " ".repeat(indent);
    match t {
        ProofTree::Assume { formula, marker } => match marker {
            Some(m) => writeln!(out, "{pad}[{formula}]^{m}"),
            None => writeln!(out, "{pad}{formula}"),
        },
        ProofTree::Ma { formula } => writeln!(out, "{pad}MA  {formula}"),
        ProofTree::Rule {
            rule,
            conclusion,
            premises,
            discharges,
        } => {
            write!(out, "{pad}{rule}  {conclusion}")?;
            if !discharges.is_empty() {
                let ds: Vec<String> = discharges
                    .iter()
                    .map(|d| format!("{}: {}", d.marker, d.formula))
                    .collect();
                write!(out, "  discharging {}", ds.join(", "))?;
            }
            writeln!(out)?;
            for p in premises {
                write_tree(p, indent + 2, out)?;
            }
            Ok(())
        }
    }
}

/// Conclusion first, premises indented below it.
impl fmt::Display for ProofTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tree(self, 0, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NdError {
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error("no cut ends at {}", show_path(.0))]
    NotACut(Path),
    #[error("internal invariant violated: no conversion decreases the measure {0}")]
    Stuck(Measure),
    #[error(transparent)]
    Format(#[from] FormatError),
}
