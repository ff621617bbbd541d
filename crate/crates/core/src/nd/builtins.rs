use super::{Discharge, ProofTree, Rule};
use crate::syntax::{parse, Formula};

fn f(s: &str) -> Formula {
    parse(s).expect("builtin formulas parse")
}

fn r(rule: Rule, conclusion: &str, premises: Vec<ProofTree>) -> ProofTree {
    ProofTree::rule(rule, f(conclusion), premises)
}

fn a(s: &str) -> ProofTree {
    ProofTree::assume(f(s))
}

fn u(s: &str, marker: &str) -> ProofTree {
    ProofTree::marked(f(s), marker)
}

fn d(marker: &str, s: &str) -> Discharge {
    Discharge::new(marker, f(s))
}

/// `⊢ □(p ∨ ¬□p)`.
fn lem_i() -> ProofTree {
    let hyp = || u("~(p | ~[]p)", "u");
    let refute = r(
        Rule::BotI,
        "bot",
        vec![r(
            Rule::AndI,
            "~p & []p",
            vec![
                r(Rule::NegOrE1, "~p", vec![hyp()]),
                r(
                    Rule::NegNegE,
                    "[]p",
                    vec![r(Rule::NegOrE2, "~~[]p", vec![hyp()])],
                ),
            ],
        )],
    );
    ProofTree::discharging(
        Rule::BoxI,
        f("[](p | ~[]p)"),
        vec![ProofTree::ma(f("p")), refute],
        vec![d("u", "~(p | ~[]p)")],
    )
}

/// `¬p ∧ p ⊢ ¬□p ∧ p`.
fn lem_ii_fwd() -> ProofTree {
    let hyp = || a("~p & p");
    r(
        Rule::AndI,
        "~[]p & p",
        vec![
            r(
                Rule::NegBoxI,
                "~[]p",
                vec![r(Rule::AndE1, "~p", vec![hyp()])],
            ),
            r(Rule::AndE2, "p", vec![hyp()]),
        ],
    )
}

/// `¬□p ∧ p ⊢ ¬p ∧ p`.
fn lem_ii_bwd() -> ProofTree {
    let hyp = || a("~[]p & p");
    r(
        Rule::AndI,
        "~p & p",
        vec![
            r(
                Rule::NegBoxE,
                "~p",
                vec![
                    r(Rule::AndE1, "~[]p", vec![hyp()]),
                    r(Rule::AndE2, "p", vec![hyp()]),
                ],
            ),
            r(Rule::AndE2, "p", vec![hyp()]),
        ],
    )
}

/// `□(p ∧ q) ⊢ □p ∧ □q`.
fn lem_ix_fwd() -> ProofTree {
    let hyp = || a("[](p & q)");
    let component = |x: &str, e: Rule, i: Rule, marker: &str| {
        let refute = r(
            Rule::BotI,
            "bot",
            vec![r(
                Rule::AndI,
                "~(p & q) & [](p & q)",
                vec![r(i, "~(p & q)", vec![u(&format!("~{x}"), marker)]), hyp()],
            )],
        );
        ProofTree::discharging(
            Rule::BoxI,
            f(&format!("[]{x}")),
            vec![r(e, x, vec![r(Rule::BoxE, "p & q", vec![hyp()])]), refute],
            vec![d(marker, &format!("~{x}"))],
        )
    };
    r(
        Rule::AndI,
        "[]p & []q",
        vec![
            component("p", Rule::AndE1, Rule::NegAndI1, "u"),
            component("q", Rule::AndE2, Rule::NegAndI2, "v"),
        ],
    )
}

/// `□p ∧ □q ⊢ □(p ∧ q)`.
fn lem_ix_bwd() -> ProofTree {
    let hyp = || a("[]p & []q");
    let refute = |x: &str, e: Rule, marker: &str| {
        r(
            Rule::BotI,
            "bot",
            vec![r(
                Rule::AndI,
                &format!("~{x} & []{x}"),
                vec![
                    u(&format!("~{x}"), marker),
                    r(e, &format!("[]{x}"), vec![hyp()]),
                ],
            )],
        )
    };
    let both = r(
        Rule::AndI,
        "p & q",
        vec![
            r(Rule::BoxE, "p", vec![r(Rule::AndE1, "[]p", vec![hyp()])]),
            r(Rule::BoxE, "q", vec![r(Rule::AndE2, "[]q", vec![hyp()])]),
        ],
    );
    let cases = ProofTree::discharging(
        Rule::NegAndE,
        f("bot"),
        vec![
            u("~(p & q)", "w"),
            refute("p", Rule::AndE1, "u"),
            refute("q", Rule::AndE2, "v"),
        ],
        vec![d("u", "~p"), d("v", "~q")],
    );
    ProofTree::discharging(
        Rule::BoxI,
        f("[](p & q)"),
        vec![both, cases],
        vec![d("w", "~(p & q)")],
    )
}

/// `¬□p ⊢ □¬□p`.
fn lem_xi_bwd() -> ProofTree {
    let boxed = || r(Rule::NegNegE, "[]p", vec![u("~~[]p", "u")]);
    let refute = r(
        Rule::BotI,
        "bot",
        vec![r(
            Rule::AndI,
            "~p & []p",
            vec![
                r(
                    Rule::NegBoxE,
                    "~p",
                    vec![a("~[]p"), r(Rule::BoxE, "p", vec![boxed()])],
                ),
                boxed(),
            ],
        )],
    );
    ProofTree::discharging(
        Rule::BoxI,
        f("[]~[]p"),
        vec![a("~[]p"), refute],
        vec![d("u", "~~[]p")],
    )
}

/// The six worked derivations, with `p`, `q` for the schematic letters.
pub fn builtin_examples() -> Vec<(&'static str, ProofTree)> {
    vec![
        ("lem-i", lem_i()),
        ("lem-ii-fwd", lem_ii_fwd()),
        ("lem-ii-bwd", lem_ii_bwd()),
        ("lem-ix-fwd", lem_ix_fwd()),
        ("lem-ix-bwd", lem_ix_bwd()),
        ("lem-xi-bwd", lem_xi_bwd()),
    ]
}
