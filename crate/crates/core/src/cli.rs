//! The `tml` command line.
//!
//! Exit codes: 0 success, valid or proved; 1 invalid, refuted or rejected;
//! 2 usage, parse or input error; 3 internal invariant violation.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{apply_op, law_suite, render_table, Connective, LawOutcome, TruthValue};
use crate::nd::{self, NdError, ProofTree};
use crate::semantics::{self, SemanticsError, Valuation};
use crate::syntax::{parse, translate, Formula, Signature};
use crate::tableau::{
    self, complete_with, render_tableau, Options, RuleSet, SignedFormula, TableauError, Verdict,
};

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "tml",
    version,
    about = "Tetravalent modal logic: evaluation, tableaux and natural deduction"
)]
struct Cli {
    /// Emit a JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum System {
    /// Six rules over ¬ and ≻
    Succ,
    /// Fourteen rules over ¬, ∧, ∨, □
    Full,
}

impl From<System> for RuleSet {
    fn from(s: System) -> RuleSet {
        match s {
            System::Succ => RuleSet::Succ,
            System::Full => RuleSet::Full,
        }
    }
}

impl From<System> for Signature {
    fn from(s: System) -> Signature {
        match s {
            System::Succ => Signature::Contrapositive,
            System::Full => Signature::Full,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a formula and print it in canonical form
    Parse { formula: String },
    /// Print the operation table of a connective (~ [] <> & | > bot top)
    Table { connective: String },
    /// Evaluate a formula under an assignment, or tabulate it
    Eval {
        formula: String,
        /// Variable order for the table, e.g. p,q
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        /// Assignment such as p=n,q=b
        #[arg(long)]
        assign: Option<String>,
    },
    /// Decide validity by exhaustive evaluation
    Valid { formula: String },
    /// Decide degree-preserving consequence by exhaustive evaluation
    Consequence {
        premises: Vec<String>,
        #[arg(long)]
        to: String,
    },
    /// Print the first valuation not sending the formula to 1
    Countermodel { formula: String },
    /// Decide validity, or consequence with --from, by signed tableaux
    Prove {
        formula: String,
        #[arg(long, value_enum, default_value = "succ")]
        system: System,
        /// Premise; repeatable
        #[arg(long = "from")]
        from: Vec<String>,
        /// Print the completed tableau
        #[arg(long)]
        emit_tableau: bool,
        /// Use the combined rules for σ(α≻β), τ(¬(α≻β)) pairs
        #[arg(long)]
        derived_rules: bool,
    },
    /// Rewrite a formula into the language of a rule set
    Translate {
        formula: String,
        #[arg(long, value_enum)]
        to: System,
    },
    /// Check a natural-deduction proof given as JSON
    NdCheck { file: String },
    /// Normalize a natural-deduction proof given as JSON
    NdNormalize {
        file: String,
        /// List each conversion with the measure before and after
        #[arg(long)]
        trace: bool,
    },
    /// Check the built-in suite of algebraic laws
    Identities,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Internal(_) => "internal",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<SemanticsError> for Failure {
    fn from(e: SemanticsError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<TableauError> for Failure {
    fn from(e: TableauError) -> Self {
        match e {
            TableauError::EmptyConstraint { .. } | TableauError::ClosedBranch => {
                Failure::Internal(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<NdError> for Failure {
    fn from(e: NdError) -> Self {
        match e {
            NdError::Stuck(_) | NdError::NotACut(_) => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Report {
    code: i32,
    text: String,
    json: Value,
}

fn read_arg(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn formula(arg: &str) -> Result<Formula, Failure> {
    parse(&read_arg(arg)?).map_err(|e| Failure::Usage(e.to_string()))
}

fn valuation_json(h: &Valuation) -> Value {
    serde_json::to_value(h).expect("valuations serialize")
}

fn opt_valuation_json(h: Option<&Valuation>) -> Value {
    h.map_or(Value::Null, valuation_json)
}

fn parse_assignment(text: &str) -> Result<Valuation, Failure> {
    let mut h = Valuation::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (var, value) = part.split_once('=').ok_or_else(|| {
            Failure::Usage(format!("assignment '{part}' is not of the form var=value"))
        })?;
        let value: TruthValue = value
            .trim()
            .parse()
            .map_err(|e| Failure::Usage(format!("{e}")))?;
        h.set(var.trim(), value);
    }
    Ok(h)
}

fn cmd_parse(arg: &str) -> Result<Report, Failure> {
    let f = formula(arg)?;
    let signatures: Vec<&str> = [Signature::Full, Signature::Contrapositive]
        .into_iter()
        .filter(|s| f.in_signature(*s))
        .map(|s| match s {
            Signature::Full => "full",
            Signature::Contrapositive => "succ",
        })
        .collect();
    Ok(Report {
        code: 0,
        text: format!("{f}\n"),
        json: json!({
            "formula": f.to_string(),
            "connectives": f.connectives(),
            "depth": f.depth(),
            "variables": f.vars().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "signatures": signatures,
        }),
    })
}

fn cmd_table(arg: &str) -> Result<Report, Failure> {
    let conn: Connective = arg.parse().map_err(Failure::Usage)?;
    let cells = match conn.arity() {
        0 => json!(apply_op(conn, &[]).expect("arity").symbol()),
        1 => json!(TruthValue::ALL
            .iter()
            .map(|&x| apply_op(conn, &[x]).expect("arity").symbol())
            .collect::<Vec<_>>()),
        _ => json!(TruthValue::ALL
            .iter()
            .map(|&x| TruthValue::ALL
                .iter()
                .map(|&y| apply_op(conn, &[x, y]).expect("arity").symbol())
                .collect::<Vec<_>>())
            .collect::<Vec<_>>()),
    };
    Ok(Report {
        code: 0,
        text: render_table(conn),
        json: json!({
            "connective": conn.symbol(),
            "arity": conn.arity(),
            "values": TruthValue::ALL.iter().map(|v| v.symbol()).collect::<Vec<_>>(),
            "table": cells,
        }),
    })
}

fn cmd_eval(arg: &str, vars: &[String], assign: Option<&str>) -> Result<Report, Failure> {
    let f = formula(arg)?;
    if let Some(text) = assign {
        let h = parse_assignment(text)?;
        let v = semantics::eval(&f, &h)?;
        return Ok(Report {
            code: 0,
            text: format!("{v}\n"),
            json: json!({"formula": f.to_string(), "valuation": valuation_json(&h), "value": v.symbol()}),
        });
    }
    let mut order: Vec<Arc<str>> = vars.iter().map(|v| Arc::from(v.trim())).collect();
    for v in f.vars() {
        if !order.contains(&v) {
            order.push(v);
        }
    }
    if order.len() > semantics::MAX_VARS {
        return Err(SemanticsError::TooManyVariables {
            count: order.len(),
            limit: semantics::MAX_VARS,
        }
        .into());
    }
    let mut text = String::new();
    for v in &order {
        text.push_str(&format!("{v} "));
    }
    text.push_str(&format!("| {f}\n"));
    let mut rows = Vec::new();
    for h in semantics::valuations_over(order.clone()) {
        let value = semantics::eval(&f, &h)?;
        for v in &order {
            let x = h.get(v).expect("enumerated");
            text.push_str(&format!("{x:<width$} ", width = v.chars().count()));
        }
        text.push_str(&format!("| {value}\n"));
        rows.push(json!({"valuation": valuation_json(&h), "value": value.symbol()}));
    }
    Ok(Report {
        code: 0,
        text,
        json: json!({
            "formula": f.to_string(),
            "variables": order.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "rows": rows,
        }),
    })
}

fn cmd_valid(arg: &str) -> Result<Report, Failure> {
    let f = formula(arg)?;
    let cm = semantics::countermodel(&f)?;
    Ok(match cm {
        None => Report {
            code: 0,
            text: "VALID\n".into(),
            json: json!({"formula": f.to_string(), "verdict": "valid", "countermodel": null}),
        },
        Some(h) => {
            let value = semantics::eval(&f, &h)?;
            Report {
                code: 1,
                text: format!("INVALID\ncountermodel: {h}\nvalue: {value}\n"),
                json: json!({
                    "formula": f.to_string(),
                    "verdict": "invalid",
                    "countermodel": valuation_json(&h),
                    "value": value.symbol(),
                }),
            }
        }
    })
}

fn cmd_countermodel(arg: &str) -> Result<Report, Failure> {
    let f = formula(arg)?;
    let cm = semantics::countermodel(&f)?;
    let text = match &cm {
        None => "none: the formula is valid\n".to_string(),
        Some(h) => format!("{h}\n"),
    };
    Ok(Report {
        code: if cm.is_some() { 1 } else { 0 },
        text,
        json: json!({"formula": f.to_string(), "countermodel": opt_valuation_json(cm.as_ref())}),
    })
}

fn cmd_consequence(premises: &[String], to: &str) -> Result<Report, Failure> {
    let ps: Vec<Formula> = premises
        .iter()
        .map(|p| formula(p))
        .collect::<Result<_, _>>()?;
    let c = formula(to)?;
    let witness = semantics::consequence_witness(&ps, &c)?;
    let text = match &witness {
        None => "HOLDS\n".to_string(),
        Some(h) => format!("FAILS\nwitness: {h}\n"),
    };
    Ok(Report {
        code: if witness.is_some() { 1 } else { 0 },
        text,
        json: json!({
            "premises": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "conclusion": c.to_string(),
            "verdict": if witness.is_none() { "holds" } else { "fails" },
            "countermodel": opt_valuation_json(witness.as_ref()),
        }),
    })
}

fn cmd_prove(
    arg: &str,
    system: System,
    from: &[String],
    emit: bool,
    derived: bool,
) -> Result<Report, Failure> {
    let rules = RuleSet::from(system);
    let conclusion = formula(arg)?;
    let premises: Vec<Formula> = from.iter().map(|p| formula(p)).collect::<Result<_, _>>()?;
    let goal = match Formula::conjunction(premises.iter().cloned()) {
        None => conclusion.clone(),
        Some(meet) => Formula::succ(meet, conclusion.clone()),
    };
    let options = Options {
        derived_rules: derived,
        ..Options::default()
    };
    let verdict = tableau::decide_with(&goal, rules, &options)?;
    let mut text = String::new();
    let mut out = json!({
        "system": rules.name(),
        "formula": goal.to_string(),
        "root": SignedFormula::f(rules.preprocess(&goal)).to_string(),
    });
    match &verdict {
        Verdict::Proved(t) => {
            text.push_str(&format!(
                "PROVED ({} branches, all closed)\n",
                t.branches.len()
            ));
            out["verdict"] = json!("proved");
            out["countermodel"] = Value::Null;
        }
        Verdict::Refuted { model, branch } => {
            text.push_str(&format!("REFUTED\ncountermodel: {model}\n"));
            let b: Vec<String> = branch.formulas.iter().map(|s| s.to_string()).collect();
            text.push_str(&format!("open branch: {}\n", b.join(", ")));
            out["verdict"] = json!("refuted");
            out["countermodel"] = valuation_json(model);
            out["branch"] = json!(b);
        }
    }
    if emit {
        let t = complete_with(
            &[SignedFormula::f(rules.preprocess(&goal))],
            rules,
            &options,
        )?;
        let rendered = render_tableau(&t);
        text.push_str(&rendered);
        out["tableau"] = json!(rendered);
    }
    Ok(Report {
        code: if verdict.is_proved() { 0 } else { 1 },
        text,
        json: out,
    })
}

fn cmd_translate(arg: &str, to: System) -> Result<Report, Failure> {
    let f = formula(arg)?;
    let g = translate(&f, to.into());
    Ok(Report {
        code: 0,
        text: format!("{g}\n"),
        json: json!({"formula": f.to_string(), "target": RuleSet::from(to).name(), "translation": g.to_string()}),
    })
}

fn load_proof(path: &str) -> Result<ProofTree, Failure> {
    let path = path.strip_prefix('@').unwrap_or(path);
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    ProofTree::from_json_str(&text).map_err(|e| Failure::Usage(e.to_string()))
}

fn judgement_text(j: &nd::Judgement) -> String {
    let open: Vec<String> = j.open_assumptions.iter().map(|f| f.to_string()).collect();
    format!("{} |- {}", open.join(", "), j.conclusion)
}

fn judgement_json(j: &nd::Judgement) -> Value {
    json!({
        "open_assumptions": j.open_assumptions.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "conclusion": j.conclusion.to_string(),
    })
}

fn cmd_nd_check(path: &str) -> Result<Report, Failure> {
    let proof = load_proof(path)?;
    match nd::check(&proof) {
        Err(e) => Ok(Report {
            code: 1,
            text: format!("REJECTED\n{e}\n"),
            json: json!({"verdict": "rejected", "error": e.to_string()}),
        }),
        Ok(j) => {
            let report = nd::analyze(&proof)?;
            let m = report.measure();
            Ok(Report {
                code: 0,
                text: format!(
                    "OK\n{}\ncuts: {}, cutrank: {}, normal: {}\n",
                    judgement_text(&j),
                    report.cuts.len(),
                    report.cutrank,
                    report.critical.is_empty()
                ),
                json: json!({
                    "verdict": "ok",
                    "judgement": judgement_json(&j),
                    "cuts": report.cuts.len(),
                    "cutrank": m.cutrank,
                    "critical_length": m.length,
                    "normal": report.critical.is_empty(),
                }),
            })
        }
    }
}

fn cmd_nd_normalize(path: &str, trace: bool) -> Result<Report, Failure> {
    let proof = load_proof(path)?;
    if let Err(e) = nd::check(&proof) {
        return Ok(Report {
            code: 1,
            text: format!("REJECTED\n{e}\n"),
            json: json!({"verdict": "rejected", "error": e.to_string()}),
        });
    }
    let n = nd::normalize_traced(&proof)?;
    let j = nd::check(&n.proof)
        .map_err(|e| Failure::Internal(format!("normalized proof rejected: {e}")))?;
    let mut text = String::new();
    if trace {
        if n.atomized {
            text.push_str("atomized ⊥E conclusions\n");
        }
        for s in &n.steps {
            text.push_str(&format!("{s}\n"));
        }
    }
    text.push_str(&format!("{}\n{}", judgement_text(&j), n.proof));
    let steps: Vec<Value> = n
        .steps
        .iter()
        .map(|s| {
            json!({
                "conversion": s.conversion.to_string(),
                "at": s.at,
                "before": [s.before.cutrank, s.before.length],
                "after": [s.after.cutrank, s.after.length],
            })
        })
        .collect();
    Ok(Report {
        code: 0,
        text,
        json: json!({
            "judgement": judgement_json(&j),
            "atomized": n.atomized,
            "steps": steps,
            "proof": n.proof.to_json(),
        }),
    })
}

fn cmd_identities() -> Result<Report, Failure> {
    let mut text = String::new();
    let mut laws = Vec::new();
    let mut failed = 0;
    for law in law_suite() {
        let outcome = law.check();
        let (mark, witness) = match &outcome {
            LawOutcome::Holds { .. } => ("ok  ", None),
            LawOutcome::Fails(h) => {
                failed += 1;
                ("FAIL", Some(h.clone()))
            }
        };
        text.push_str(&format!(
            "{mark} {}/{}: {}",
            law.group,
            law.name,
            law.describe()
        ));
        if let Some(h) = &witness {
            text.push_str(&format!("  at {h}"));
        }
        text.push('\n');
        laws.push(json!({
            "group": law.group,
            "name": law.name,
            "law": law.describe(),
            "holds": witness.is_none(),
            "witness": opt_valuation_json(witness.as_ref()),
        }));
    }
    text.push_str(&format!("{} laws, {} failed\n", laws.len(), failed));
    Ok(Report {
        code: if failed == 0 { 0 } else { 1 },
        text,
        json: json!({"laws": laws, "failed": failed}),
    })
}

fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Parse { formula } => cmd_parse(formula),
        Command::Table { connective } => cmd_table(connective),
        Command::Eval {
            formula,
            vars,
            assign,
        } => cmd_eval(formula, vars, assign.as_deref()),
        Command::Valid { formula } => cmd_valid(formula),
        Command::Consequence { premises, to } => cmd_consequence(premises, to),
        Command::Countermodel { formula } => cmd_countermodel(formula),
        Command::Prove {
            formula,
            system,
            from,
            emit_tableau,
            derived_rules,
        } => cmd_prove(formula, *system, from, *emit_tableau, *derived_rules),
        Command::Translate { formula, to } => cmd_translate(formula, *to),
        Command::NdCheck { file } => cmd_nd_check(file),
        Command::NdNormalize { file, trace } => cmd_nd_normalize(file, *trace),
        Command::Identities => cmd_identities(),
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to
/// `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = dispatch(&cli.command);
    let written = match &result {
        Ok(report) if cli.json => {
            let mut v = json!({"schema": SCHEMA});
            if let (Value::Object(dst), Value::Object(src)) = (&mut v, &report.json) {
                dst.extend(src.clone());
            }
            writeln!(out, "{v}")
        }
        Ok(report) => write!(out, "{}", report.text),
        Err(f) => {
            if cli.json {
                let v =
                    json!({"schema": SCHEMA, "error": {"kind": f.kind(), "message": f.message()}});
                let _ = writeln!(out, "{v}");
            }
            writeln!(err, "error: {}", f.message())
        }
    };
    if written.is_err() {
        return 3;
    }
    match result {
        Ok(r) => r.code,
        Err(f) => f.code(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("tml").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn valid_modal_axiom() {
        let (code, out, _) = run_str(&["valid", "p | ~[]p"]);
        assert_eq!((code, out.as_str()), (0, "VALID\n"));
    }

    #[test]
    fn refuted_with_countermodel() {
        let (code, out, _) = run_str(&["prove", "--system", "full", "[]<>p > <>[]p"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("REFUTED\ncountermodel: {p: n}\n"), "{out}");
    }

    #[test]
    fn parse_error_exit_two() {
        let (code, _, err) = run_str(&["parse", "p &"]);
        assert_eq!(code, 2);
        assert!(err.contains("position 4"), "{err}");
    }

    #[test]
    fn json_output() {
        let (code, out, _) = run_str(&["--json", "valid", "p | ~p"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["verdict"], "invalid");
        assert_eq!(v["countermodel"], json!({"p": "n"}));
    }

    #[test]
    fn unknown_flags_rejected() {
        assert_eq!(run_str(&["valid", "--bogus", "p"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn eval_modes() {
        let (code, out, _) = run_str(&["eval", "[]<>p", "--assign", "p=n"]);
        assert_eq!((code, out.as_str()), (0, "1\n"));
        let (_, out, _) = run_str(&["eval", "p & q", "--vars", "q,p"]);
        assert_eq!(out.lines().next(), Some("q p | p & q"));
        assert_eq!(out.lines().count(), 17);
        assert_eq!(run_str(&["eval", "p & q", "--assign", "p=1"]).0, 2);
        assert_eq!(run_str(&["eval", "p", "--assign", "p=7"]).0, 2);
    }

    #[test]
    fn identities_pass() {
        let (code, out, _) = run_str(&["identities"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("0 failed\n"));
    }
}
