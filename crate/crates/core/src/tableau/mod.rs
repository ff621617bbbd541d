//! Signed tableaux. [`RuleSet::Succ`] works over `{⊥, ⊤, ¬, ≻}`;
//! [`RuleSet::Full`] over `{⊥, ⊤, ¬, ∧, ∨, □}`.
//!
//! `T(α)` asserts a value in `{1, b}` and `F(α)` a value in `{0, n}`. A
//! branch closes when it holds `T(α)` and `F(α)`, or a constant signed
//! against its value. `α` is valid iff the tableau for `F(α)` closes.

mod engine;
mod print;
mod rules;

use std::fmt;
use std::str::FromStr;

pub use engine::{complete, complete_with, ExpansionOrder, Options};
pub use print::render_tableau;
pub use rules::{expand, expand_derived, Expansion};

use crate::algebra::TruthValue;
use crate::semantics::{self, SemanticsError, Valuation};
use crate::syntax::{parse, translate, Formula, ParseError, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    T,
    F,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::T => Sign::F,
            Sign::F => Sign::T,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedFormula {
    pub sign: Sign,
    pub formula: Formula,
}

impl SignedFormula {
    pub fn new(sign: Sign, formula: Formula) -> Self {
        SignedFormula { sign, formula }
    }

    pub fn t(formula: Formula) -> Self {
        Self::new(Sign::T, formula)
    }

    pub fn f(formula: Formula) -> Self {
        Self::new(Sign::F, formula)
    }

    pub fn complement(&self) -> SignedFormula {
        Self::new(self.sign.flip(), self.formula.clone())
    }
}

impl fmt::Display for SignedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::T => 'T',
            Sign::F => 'F',
        };
        write!(f, "{s}({})", self.formula)
    }
}

/// Parses `T(<formula>)` or `F(<formula>)`.
impl FromStr for SignedFormula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        let sign = match t.chars().next() {
            Some('T') => Sign::T,
            Some('F') => Sign::F,
            _ => {
                return Err(ParseError {
                    position: 1,
                    expected: vec!["'T('", "'F('"],
                    found: t
                        .chars()
                        .next()
                        .map_or("end of input".into(), |c| format!("'{c}'")),
                })
            }
        };
        let inner = t[1..]
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| ParseError {
                position: 2,
                expected: vec!["'(' ... ')'"],
                found: format!("'{}'", &t[1..]),
            })?;
        Ok(Self::new(sign, parse(inner)?))
    }
}

/// The two calculi.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleSet {
    /// Six rules over `¬` and `≻`.
    Succ,
    /// Fourteen rules over `¬`, `∧`, `∨`, `□`.
    Full,
}

impl RuleSet {
    pub fn name(self) -> &'static str {
        match self {
            RuleSet::Succ => "succ",
            RuleSet::Full => "full",
        }
    }

    /// Rewrites `f` into the language of the rule set.
    pub fn preprocess(self, f: &Formula) -> Formula {
        match self {
            RuleSet::Succ => translate(f, Signature::Contrapositive),
            RuleSet::Full => translate(f, Signature::Full),
        }
    }

    pub fn admits(self, f: &Formula) -> bool {
        match self {
            RuleSet::Succ => f.in_signature(Signature::Contrapositive),
            RuleSet::Full => {
                f.in_signature(Signature::Full)
                    && !f.subformulas().iter().any(|g| matches!(g, Formula::Dia(_)))
            }
        }
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "succ" => Ok(RuleSet::Succ),
            "full" => Ok(RuleSet::Full),
            other => Err(format!(
                "unknown rule set '{other}', expected 'succ' or 'full'"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("{formula} is outside the language of the {rules} rules")]
    OutOfSignature {
        formula: SignedFormula,
        rules: RuleSet,
    },
    #[error("{0} and {1} do not form a derived-rule premise pair")]
    NotDerivedPair(SignedFormula, SignedFormula),
    #[error("model extraction requires an open branch")]
    ClosedBranch,
    #[error(
        "internal invariant violated: no value for {var} satisfies the literals of an open branch"
    )]
    EmptyConstraint { var: String },
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// How a closed branch closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Closure {
    /// Both `T(α)` and `F(α)` occur.
    Clash(Formula),
    /// A constant signed against its value.
    Constant(SignedFormula),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchStatus {
    Open,
    Closed(Closure),
}

/// A completed branch: its signed formulas in order of arrival.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub formulas: Vec<SignedFormula>,
    pub status: BranchStatus,
}

impl Branch {
    pub fn is_open(&self) -> bool {
        self.status == BranchStatus::Open
    }
}

/// One rule application: the premise(s) and, per alternative, the signed
/// formulas added and the subtree below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    /// Index into [`Tableau::branches`].
    Leaf(usize),
    Expand {
        premises: Vec<SignedFormula>,
        rule: &'static str,
        children: Vec<(Vec<SignedFormula>, Node)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub rules: RuleSet,
    pub roots: Vec<SignedFormula>,
    pub tree: Node,
    /// Leaf branches, left to right.
    pub branches: Vec<Branch>,
}

impl Tableau {
    pub fn is_closed(&self) -> bool {
        self.branches.iter().all(|b| !b.is_open())
    }

    pub fn leftmost_open(&self) -> Option<&Branch> {
        self.branches.iter().find(|b| b.is_open())
    }
}

pub fn is_closed(t: &Tableau) -> bool {
    t.is_closed()
}

/// `T(α)` holds iff `h(α) ∈ {1, b}`; `F(α)` iff `h(α) ∈ {0, n}`.
pub fn satisfies(h: &Valuation, sf: &SignedFormula) -> Result<bool, SemanticsError> {
    let designated = semantics::eval(&sf.formula, h)?.is_designated();
    Ok(designated == (sf.sign == Sign::T))
}

fn allowed(sf: &SignedFormula) -> Option<(&str, u8)> {
    // bit i stands for TruthValue::ALL[i]: 0, n, b, 1
    const DESIGNATED: u8 = 0b1100;
    const NEGATION_DESIGNATED: u8 = 0b0101;
    let (var, mask) = match &sf.formula {
        Formula::Var(p) => (p, DESIGNATED),
        Formula::Neg(a) => match &**a {
            Formula::Var(p) => (p, NEGATION_DESIGNATED),
            _ => return None,
        },
        _ => return None,
    };
    Some((
        var,
        if sf.sign == Sign::T {
            mask
        } else {
            !mask & 0b1111
        },
    ))
}

/// Reads a valuation off an open branch: each variable takes the least
/// value allowed by its signed literals, or 0 if it has none.
pub fn extract_model(branch: &Branch) -> Result<Valuation, TableauError> {
    if !branch.is_open() {
        return Err(TableauError::ClosedBranch);
    }
    let mut vars = std::collections::BTreeMap::new();
    for sf in &branch.formulas {
        for v in sf.formula.vars() {
            vars.entry(v).or_insert(0b1111u8);
        }
    }
    for sf in &branch.formulas {
        if let Some((p, mask)) = allowed(sf) {
            *vars.get_mut(p).expect("collected above") &= mask;
        }
    }
    vars.into_iter()
        .map(|(p, mask)| {
            (0..4)
                .find(|i| mask & (1 << i) != 0)
                .map(|i| (p.clone(), TruthValue::ALL[i]))
                .ok_or_else(|| TableauError::EmptyConstraint { var: p.to_string() })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The tableau for `F(α)` closed.
    Proved(Tableau),
    /// Countermodel read off the leftmost open branch.
    Refuted { model: Valuation, branch: Branch },
}

impl Verdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved(_))
    }

    pub fn countermodel(&self) -> Option<&Valuation> {
        match self {
            Verdict::Proved(_) => None,
            Verdict::Refuted { model, .. } => Some(model),
        }
    }
}

/// Decides validity of `f` after rewriting it into the language of `rules`.
pub fn decide(f: &Formula, rules: RuleSet) -> Result<Verdict, TableauError> {
    decide_with(f, rules, &Options::default())
}

pub fn decide_with(
    f: &Formula,
    rules: RuleSet,
    options: &Options,
) -> Result<Verdict, TableauError> {
    let root = SignedFormula::f(rules.preprocess(f));
    match engine::search(&[root], rules, options, true)? {
        engine::Outcome::Closed(t) => Ok(Verdict::Proved(t)),
        engine::Outcome::Open(branch) => {
            let model = extract_model(&branch)?;
            Ok(Verdict::Refuted { model, branch })
        }
    }
}

/// Decides `(⋀ premises) ≻ conclusion`, or the conclusion alone when there
/// are no premises.
pub fn decide_consequence(
    premises: &[Formula],
    conclusion: &Formula,
    rules: RuleSet,
) -> Result<Verdict, TableauError> {
    match Formula::conjunction(premises.iter().cloned()) {
        None => decide(conclusion, rules),
        Some(meet) => decide(&Formula::succ(meet, conclusion.clone()), rules),
    }
}
