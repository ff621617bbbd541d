//! Brute-force semantics over the four-element algebra: evaluation,
//! validity, degree-preserving consequence and countermodels.
//!
//! Valuations are enumerated with variables in alphabetical order, the
//! first variable most significant, each running through `0 < n < b < 1`.
//! Witnesses are always the first hit in that order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::algebra::TruthValue;
use crate::syntax::Formula;

/// Largest variable count the exhaustive checks accept (4^12 valuations).
pub const MAX_VARS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SemanticsError {
    #[error("no value bound for variable {0}")]
    Unbound(String),
    #[error("{count} variables exceed the exhaustive-check limit of {limit}")]
    TooManyVariables { count: usize, limit: usize },
}

/// A finite assignment of truth values to variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation(BTreeMap<Arc<str>, TruthValue>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: &str, value: TruthValue) -> Self {
        self.set(var, value);
        self
    }

    pub fn set(&mut self, var: &str, value: TruthValue) {
        self.0.insert(Arc::from(var), value);
    }

    pub fn get(&self, var: &str) -> Option<TruthValue> {
        self.0.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, TruthValue)> {
        self.0.iter().map(|(k, v)| (&**k, *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(Arc<str>, TruthValue)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (Arc<str>, TruthValue)>>(iter: I) -> Self {
        Valuation(iter.into_iter().collect())
    }
}

impl<'a> FromIterator<(&'a str, TruthValue)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (&'a str, TruthValue)>>(iter: I) -> Self {
        Valuation(iter.into_iter().map(|(k, v)| (Arc::from(k), v)).collect())
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {v}")?;
        }
        f.write_str("}")
    }
}

impl serde::Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(&**k, v.symbol())?;
        }
        map.end()
    }
}

/// Every valuation of `vars`, in enumeration order.
pub fn valuations(vars: &BTreeSet<Arc<str>>) -> Valuations {
    valuations_over(vars.iter().cloned().collect())
}

/// Every valuation of `vars`, the first listed variable most significant.
pub fn valuations_over(vars: Vec<Arc<str>>) -> Valuations {
    Valuations {
        digits: vec![0; vars.len()],
        vars,
        done: false,
    }
}

pub struct Valuations {
    vars: Vec<Arc<str>>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for Valuations {
    type Item = Valuation;

    fn next(&mut self) -> Option<Valuation> {
        if self.done {
            return None;
        }
        let out = self
            .vars
            .iter()
            .zip(&self.digits)
            .map(|(v, &d)| (v.clone(), TruthValue::ALL[d]))
            .collect();
        // odometer, last variable fastest
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < 4 {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(out)
    }
}

pub fn eval(f: &Formula, h: &Valuation) -> Result<TruthValue, SemanticsError> {
    Ok(match f {
        Formula::Bot => TruthValue::Zero,
        Formula::Top => TruthValue::One,
        Formula::Var(name) => h
            .get(name)
            .ok_or_else(|| SemanticsError::Unbound(name.to_string()))?,
        Formula::Neg(a) => eval(a, h)?.neg(),
        Formula::Box(a) => eval(a, h)?.square(),
        Formula::Dia(a) => eval(a, h)?.diamond(),
        Formula::And(a, b) => eval(a, h)?.meet(eval(b, h)?),
        Formula::Or(a, b) => eval(a, h)?.join(eval(b, h)?),
        Formula::Succ(a, b) => eval(a, h)?.succ(eval(b, h)?),
    })
}

fn joint_vars<'a, I: IntoIterator<Item = &'a Formula>>(
    fs: I,
) -> Result<BTreeSet<Arc<str>>, SemanticsError> {
    let mut vars = BTreeSet::new();
    for f in fs {
        f.collect_vars(&mut vars);
    }
    if vars.len() > MAX_VARS {
        return Err(SemanticsError::TooManyVariables {
            count: vars.len(),
            limit: MAX_VARS,
        });
    }
    Ok(vars)
}

/// First valuation sending `f` somewhere other than 1.
pub fn countermodel(f: &Formula) -> Result<Option<Valuation>, SemanticsError> {
    let vars = joint_vars([f])?;
    for h in valuations(&vars) {
        if eval(f, &h)? != TruthValue::One {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// `f` evaluates to 1 under every valuation.
pub fn valid(f: &Formula) -> Result<bool, SemanticsError> {
    Ok(countermodel(f)?.is_none())
}

/// First valuation where the meet of the premises is not below the
/// conclusion.
pub fn consequence_witness(
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<Option<Valuation>, SemanticsError> {
    let vars = joint_vars(premises.iter().chain([conclusion]))?;
    for h in valuations(&vars) {
        let mut meet = TruthValue::One;
        for p in premises {
            meet = meet.meet(eval(p, &h)?);
        }
        if !meet.leq(eval(conclusion, &h)?) {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Degree-preserving consequence: under every valuation the meet of the
/// premise values (1 for no premises) is below the conclusion value.
pub fn consequence(premises: &[Formula], conclusion: &Formula) -> Result<bool, SemanticsError> {
    Ok(consequence_witness(premises, conclusion)?.is_none())
}

/// Consequence of the matrix with designated set `{b, 1}`: whenever every
/// premise is designated, so is the conclusion.
pub fn matrix_consequence(
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<bool, SemanticsError> {
    let vars = joint_vars(premises.iter().chain([conclusion]))?;
    for h in valuations(&vars) {
        let mut all = true;
        for p in premises {
            all &= eval(p, &h)?.is_designated();
        }
        if all && !eval(conclusion, &h)?.is_designated() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Swaps `n` and `b` pointwise.
pub fn conjugate(h: &Valuation) -> Valuation {
    Valuation(
        h.0.iter()
            .map(|(k, v)| (k.clone(), v.conjugate()))
            .collect(),
    )
}
