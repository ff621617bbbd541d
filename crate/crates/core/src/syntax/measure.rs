use super::{Formula, Signature};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MeasureError {
    #[error("complexity is only defined for the ≻-free language, got {0}")]
    ContainsSucc(Formula),
    #[error("degree is only defined for the {{¬, ≻}} language, got {0}")]
    NotContrapositive(Formula),
}

/// Complexity used by the normalization argument: variables and constants
/// 0, binary connectives +1, `¬` +1, `□` +2. `◇α` counts as `¬□¬α`.
pub fn complexity(f: &Formula) -> Result<usize, MeasureError> {
    Ok(match f {
        Formula::Bot | Formula::Top | Formula::Var(_) => 0,
        Formula::Neg(a) => complexity(a)? + 1,
        Formula::Box(a) => complexity(a)? + 2,
        Formula::Dia(a) => complexity(a)? + 4,
        Formula::And(a, b) | Formula::Or(a, b) => complexity(a)? + complexity(b)? + 1,
        Formula::Succ(..) => return Err(MeasureError::ContainsSucc(f.clone())),
    })
}

/// Degree used for tableau termination: atoms 1, `¬` +1, `≻` sums plus 1.
pub fn degree(f: &Formula) -> Result<usize, MeasureError> {
    if !f.in_signature(Signature::Contrapositive) {
        return Err(MeasureError::NotContrapositive(f.clone()));
    }
    fn go(f: &Formula) -> usize {
        match f {
            Formula::Neg(a) => go(a) + 1,
            Formula::Succ(a, b) => go(a) + go(b) + 1,
            _ => 1,
        }
    }
    Ok(go(f))
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    fn c(s: &str) -> usize {
        complexity(&parse(s).unwrap()).unwrap()
    }

    fn d(s: &str) -> usize {
        degree(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn complexity_values() {
        assert_eq!(c("p"), 0);
        assert_eq!(c("[]p"), 2);
        assert_eq!(c("~(p & q)"), 2);
        assert_eq!(c("bot"), 0);
        assert_eq!(c("<>p"), c("~[]~p"));
        assert_eq!(c("[](p | ~[]p)"), 6);
    }

    #[test]
    fn degree_values() {
        assert_eq!(d("p"), 1);
        assert_eq!(d("~p"), 2);
        assert_eq!(d("p > q"), 3);
        assert_eq!(d("bot > top"), 3);
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            complexity(&parse("p > q").unwrap()),
            Err(MeasureError::ContainsSucc(_))
        ));
        assert!(matches!(
            degree(&parse("[]p").unwrap()),
            Err(MeasureError::NotContrapositive(_))
        ));
    }
}
