use std::fmt::Write;

use super::{extract_model, BranchStatus, Closure, Node, Sign, SignedFormula, Tableau};

fn list(sfs: &[SignedFormula]) -> String {
    sfs.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn write_node(t: &Tableau, node: &Node, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match node {
        Node::Leaf(i) => {
            let b = &t.branches[*i];
            match &b.status {
                BranchStatus::Open => match extract_model(b) {
                    Ok(h) => writeln!(out, "{pad}open, model {h}"),
                    Err(e) => writeln!(out, "{pad}open, {e}"),
                },
                BranchStatus::Closed(Closure::Clash(f)) => {
                    let pair = [
                        SignedFormula::new(Sign::T, f.clone()),
                        SignedFormula::new(Sign::F, f.clone()),
                    ];
                    writeln!(out, "{pad}closed: {}", list(&pair))
                }
                BranchStatus::Closed(Closure::Constant(sf)) => writeln!(out, "{pad}closed: {sf}"),
            }
            .expect("writing to a String");
        }
        Node::Expand {
            premises,
            rule,
            children,
        } => {
            writeln!(out, "{pad}[{rule}] {}", list(premises)).expect("writing to a String");
            for (k, (added, child)) in children.iter().enumerate() {
                writeln!(out, "{pad}  {}. {}", k + 1, list(added)).expect("writing to a String");
                write_node(t, child, indent + 5, out);
            }
        }
    }
}

/// Indented text: each rule application shows its rule name and premises,
/// then every alternative numbered with the signed formulas it adds.
pub fn render_tableau(t: &Tableau) -> String {
    let mut out = format!("tableau ({} rules) for {}\n", t.rules, list(&t.roots));
    write_node(t, &t.tree, 0, &mut out);
    out
}
