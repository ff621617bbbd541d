//! Formulas of tetravalent modal logic, their surface syntax and the
//! rewritings between the two signatures.

mod measure;
mod parse;
mod render;
mod translate;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use measure::{complexity, degree, MeasureError};
pub use parse::{parse, ParseError};
pub use translate::translate;

/// A formula over `{⊥, ⊤, var, ¬, □, ◇, ∧, ∨, ≻}`.
///
/// Children are reference counted, so cloning a formula or taking a
/// subformula is cheap. Structural equality is the identity used for
/// tableau closure and deduplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Bot,
    Top,
    Var(Arc<str>),
    Neg(Arc<Formula>),
    Box(Arc<Formula>),
    Dia(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Succ(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    /// Panics if `name` is not a valid identifier; use [`parse`] for
    /// untrusted input.
    pub fn var(name: &str) -> Formula {
        assert!(is_identifier(name), "invalid variable name {name:?}");
        Formula::Var(Arc::from(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Formula {
        Formula::Neg(Arc::new(f))
    }

    pub fn square(f: Formula) -> Formula {
        Formula::Box(Arc::new(f))
    }

    pub fn diamond(f: Formula) -> Formula {
        Formula::Dia(Arc::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Arc::new(a), Arc::new(b))
    }

    pub fn succ(a: Formula, b: Formula) -> Formula {
        Formula::Succ(Arc::new(a), Arc::new(b))
    }

    /// Left-nested conjunction of `fs`; `None` when empty.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(fs: I) -> Option<Formula> {
        fs.into_iter().reduce(Formula::and)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Bot | Formula::Top | Formula::Var(_))
    }

    /// A variable or a negated variable.
    pub fn is_literal(&self) -> bool {
        match self {
            Formula::Var(_) => true,
            Formula::Neg(inner) => matches!(**inner, Formula::Var(_)),
            _ => false,
        }
    }

    /// Immediate subformulas, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Bot | Formula::Top | Formula::Var(_) => vec![],
            Formula::Neg(a) | Formula::Box(a) | Formula::Dia(a) => vec![a],
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Succ(a, b) => vec![a, b],
        }
    }

    /// Number of connective occurrences, constants excluded.
    pub fn connectives(&self) -> usize {
        match self {
            Formula::Bot | Formula::Top | Formula::Var(_) => 0,
            _ => {
                1 + self
                    .children()
                    .iter()
                    .map(|c| c.connectives())
                    .sum::<usize>()
            }
        }
    }

    pub fn depth(&self) -> usize {
        self.children()
            .iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            Formula::Var(name) => {
                out.insert(name.clone());
            }
            _ => {
                for c in self.children() {
                    c.collect_vars(out);
                }
            }
        }
    }

    /// All subformula occurrences, preorder, including `self`.
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = vec![self];
        for c in self.children() {
            out.extend(c.subformulas());
        }
        out
    }

    pub fn in_signature(&self, sig: Signature) -> bool {
        let own = !matches!(
            (self, sig),
            (
                Formula::And(..) | Formula::Or(..) | Formula::Box(_) | Formula::Dia(_),
                Signature::Contrapositive,
            ) | (Formula::Succ(..), Signature::Full)
        );
        own && self.children().iter().all(|c| c.in_signature(sig))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::render(self))
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Canonical minimal-parenthesis text of `f`.
pub fn render(f: &Formula) -> String {
    render::render(f)
}

/// The two connective sets formulas are translated between.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Signature {
    /// `{⊥, ⊤, var, ¬, ∧, ∨, □, ◇}`
    Full,
    /// `{⊥, ⊤, var, ¬, ≻}`
    Contrapositive,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Signature::Full => "full",
            Signature::Contrapositive => "succ",
        })
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "bot"
        && s != "top"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_membership() {
        let f = parse("~(p > bot)").unwrap();
        assert!(f.in_signature(Signature::Contrapositive));
        assert!(!f.in_signature(Signature::Full));
        let g = parse("[]p | <>q & top").unwrap();
        assert!(g.in_signature(Signature::Full));
        assert!(!g.in_signature(Signature::Contrapositive));
        assert!(Formula::Top.in_signature(Signature::Full));
        assert!(Formula::Top.in_signature(Signature::Contrapositive));
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("p"));
        assert!(is_identifier("x_1A"));
        assert!(!is_identifier("P"));
        assert!(!is_identifier("1p"));
        assert!(!is_identifier(""));
        assert!(!is_identifier("bot"));
    }

    #[test]
    fn literals_and_vars() {
        let f = parse("~p & (q | ~p)").unwrap();
        assert_eq!(
            f.vars().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            vec!["p", "q"]
        );
        assert!(parse("~p").unwrap().is_literal());
        assert!(!parse("~~p").unwrap().is_literal());
        assert_eq!(f.connectives(), 4);
        assert_eq!(f.depth(), 3);
    }
}
