use serde_json::{json, Map, Value};

use super::{desugar, show_path, Discharge, Path, ProofTree, Rule};
use crate::syntax::{parse, Formula};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("proof format error at {}: {message}", show_path(.at))]
pub struct FormatError {
    pub at: Path,
    pub message: String,
}

impl ProofTree {
    /// `{"rule", "conclusion", "premises", "discharges"}` for rule nodes;
    /// `{"rule": "Assume", "formula", "marker"?}` and
    /// `{"rule": "MA", "formula"}` for leaves.
    pub fn to_json(&self) -> Value {
        match self {
            ProofTree::Assume { formula, marker } => {
                let mut m = Map::new();
                m.insert("rule".into(), json!("Assume"));
                m.insert("formula".into(), json!(formula.to_string()));
                if let Some(mk) = marker {
                    m.insert("marker".into(), json!(mk));
                }
                Value::Object(m)
            }
            ProofTree::Ma { formula } => json!({"rule": "MA", "formula": formula.to_string()}),
            ProofTree::Rule {
                rule,
                conclusion,
                premises,
                discharges,
            } => json!({
                "rule": rule.name(),
                "conclusion": conclusion.to_string(),
                "premises": premises.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
                "discharges": discharges
                    .iter()
                    .map(|d| json!({"marker": d.marker, "formula": d.formula.to_string()}))
                    .collect::<Vec<_>>(),
            }),
        }
    }

    /// Reads the JSON form; formulas are desugared on the way in.
    pub fn from_json(v: &Value) -> Result<ProofTree, FormatError> {
        read(v, &mut Vec::new())
    }

    pub fn from_json_str(text: &str) -> Result<ProofTree, FormatError> {
        let v: Value = serde_json::from_str(text).map_err(|e| FormatError {
            at: Vec::new(),
            message: format!("invalid JSON: {e}"),
        })?;
        Self::from_json(&v)
    }
}

fn read(v: &Value, path: &mut Path) -> Result<ProofTree, FormatError> {
    let err = |path: &Path, message: String| FormatError {
        at: path.clone(),
        message,
    };
    let obj = v
        .as_object()
        .ok_or_else(|| err(path, "expected a JSON object".into()))?;
    let allowed: &[&str] = match obj.get("rule").and_then(Value::as_str) {
        Some("Assume") => &["rule", "formula", "marker"],
        Some("MA") => &["rule", "formula"],
        Some(_) => &["rule", "conclusion", "premises", "discharges"],
        None => return Err(err(path, "missing string field \"rule\"".into())),
    };
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(err(path, format!("unexpected field \"{k}\"")));
    }
    let text = |key: &str| -> Result<&str, FormatError> {
        obj.get(key)
            .and_then(Value::as_str)
            .ok_or_else(|| err(path, format!("missing string field \"{key}\"")))
    };
    let formula = |s: &str| -> Result<Formula, FormatError> {
        parse(s)
            .map(|f| desugar(&f))
            .map_err(|e| err(path, format!("in formula \"{s}\": {e}")))
    };
    let tag = text("rule")?;
    match tag {
        "Assume" => {
            let marker = match obj.get("marker") {
                None | Some(Value::Null) => None,
                Some(Value::String(m)) => Some(m.clone()),
                Some(_) => return Err(err(path, "\"marker\" must be a string".into())),
            };
            Ok(ProofTree::Assume {
                formula: formula(text("formula")?)?,
                marker,
            })
        }
        "MA" => Ok(ProofTree::Ma {
            formula: formula(text("formula")?)?,
        }),
        other => {
            let rule: Rule = other.parse().map_err(|e: String| err(path, e))?;
            let conclusion = formula(text("conclusion")?)?;
            let raw_premises = match obj.get("premises") {
                Some(Value::Array(a)) => a.as_slice(),
                _ => return Err(err(path, "missing array field \"premises\"".into())),
            };
            let discharges = match obj.get("discharges") {
                None => Vec::new(),
                Some(Value::Array(a)) => a
                    .iter()
                    .map(|d| {
                        let marker = d.get("marker").and_then(Value::as_str);
                        let f = d.get("formula").and_then(Value::as_str);
                        match (marker, f) {
                            (Some(m), Some(f)) => Ok(Discharge {
                                marker: m.into(),
                                formula: formula(f)?,
                            }),
                            _ => Err(err(
                                path,
                                "discharges need \"marker\" and \"formula\" strings".into(),
                            )),
                        }
                    })
                    .collect::<Result<_, _>>()?,
                Some(_) => return Err(err(path, "\"discharges\" must be an array".into())),
            };
            let mut premises = Vec::with_capacity(raw_premises.len());
            for (i, p) in raw_premises.iter().enumerate() {
                path.push(i);
                let r = read(p, path);
                path.pop();
                premises.push(r?);
            }
            Ok(ProofTree::Rule {
                rule,
                conclusion,
                premises,
                discharges,
            })
        }
    }
}
