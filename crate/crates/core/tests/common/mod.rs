#![allow(dead_code)]

pub mod proofs;

use rand::rngs::StdRng;
use rand::Rng;
use tml_core::syntax::{degree, Formula};

pub fn atoms(names: &[&str]) -> Vec<Formula> {
    names.iter().map(|n| Formula::var(n)).collect()
}

/// Every formula over `{¬, ≻}` built from `p`, `q`, `⊥`, `⊤` with degree at
/// most `max_degree`.
pub fn succ_corpus(max_degree: usize) -> Vec<Formula> {
    let mut by_degree: Vec<Vec<Formula>> = vec![Vec::new(); max_degree + 1];
    by_degree[1] = vec![
        Formula::var("p"),
        Formula::var("q"),
        Formula::Bot,
        Formula::Top,
    ];
    for d in 2..=max_degree {
        let mut level: Vec<Formula> = by_degree[d - 1].iter().cloned().map(Formula::neg).collect();
        for left in 1..d - 1 {
            let right = d - 1 - left;
            for a in &by_degree[left] {
                for b in &by_degree[right] {
                    level.push(Formula::succ(a.clone(), b.clone()));
                }
            }
        }
        by_degree[d] = level;
    }
    let all: Vec<Formula> = by_degree.into_iter().flatten().collect();
    debug_assert!(all.iter().all(|f| degree(f).unwrap() <= max_degree));
    all
}

/// Calls `visit` on every formula over `{¬, □, ◇, ∧, ∨}` built from `p` and
/// `q` with at most `max_connectives` connectives. The last level is
/// streamed rather than stored.
pub fn for_each_full(max_connectives: usize, mut visit: impl FnMut(&Formula)) {
    let mut levels: Vec<Vec<Formula>> = vec![atoms(&["p", "q"])];
    for f in &levels[0] {
        visit(f);
    }
    for n in 1..=max_connectives {
        let last = n == max_connectives;
        let mut level = Vec::new();
        let mut emit = |f: Formula, level: &mut Vec<Formula>| {
            visit(&f);
            if !last {
                level.push(f);
            }
        };
        for a in &levels[n - 1] {
            emit(Formula::neg(a.clone()), &mut level);
            emit(Formula::square(a.clone()), &mut level);
            emit(Formula::diamond(a.clone()), &mut level);
        }
        for left in 0..n {
            let right = n - 1 - left;
            for a in &levels[left] {
                for b in &levels[right] {
                    emit(Formula::and(a.clone(), b.clone()), &mut level);
                    emit(Formula::or(a.clone(), b.clone()), &mut level);
                }
            }
        }
        levels.push(level);
    }
}

fn pick_var(rng: &mut StdRng, vars: &[&str]) -> Formula {
    Formula::var(vars[rng.gen_range(0..vars.len())])
}

/// Random formula over `{¬, ≻, ⊥, ⊤}` with nesting depth at most `depth`.
pub fn random_succ(rng: &mut StdRng, vars: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => Formula::Bot,
            1 => Formula::Top,
            _ => pick_var(rng, vars),
        };
    }
    if rng.gen_bool(0.35) {
        Formula::neg(random_succ(rng, vars, depth - 1))
    } else {
        Formula::succ(
            random_succ(rng, vars, depth - 1),
            random_succ(rng, vars, depth - 1),
        )
    }
}

/// Random formula over `{¬, □, ◇, ∧, ∨, ⊥, ⊤}`.
pub fn random_full(rng: &mut StdRng, vars: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => Formula::Bot,
            1 => Formula::Top,
            _ => pick_var(rng, vars),
        };
    }
    let sub = |rng: &mut StdRng| random_full(rng, vars, depth - 1);
    match rng.gen_range(0..5) {
        0 => Formula::neg(sub(rng)),
        1 => Formula::square(sub(rng)),
        2 => Formula::diamond(sub(rng)),
        3 => Formula::and(sub(rng), sub(rng)),
        _ => Formula::or(sub(rng), sub(rng)),
    }
}

/// Random formula over every connective.
pub fn random_any(rng: &mut StdRng, vars: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => Formula::Bot,
            1 => Formula::Top,
            _ => pick_var(rng, vars),
        };
    }
    let sub = |rng: &mut StdRng| random_any(rng, vars, depth - 1);
    match rng.gen_range(0..6) {
        0 => Formula::neg(sub(rng)),
        1 => Formula::square(sub(rng)),
        2 => Formula::diamond(sub(rng)),
        3 => Formula::and(sub(rng), sub(rng)),
        4 => Formula::or(sub(rng), sub(rng)),
        _ => Formula::succ(sub(rng), sub(rng)),
    }
}

/// Proptest strategy for formulas over every connective with nesting depth
/// at most `depth`.
pub fn arb_formula(
    vars: &'static [&'static str],
    depth: u32,
) -> proptest::prelude::BoxedStrategy<Formula> {
    use proptest::prelude::*;
    let leaf = prop_oneof![
        Just(Formula::Bot),
        Just(Formula::Top),
        proptest::sample::select(vars).prop_map(Formula::var),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            inner.clone().prop_map(Formula::square),
            inner.clone().prop_map(Formula::diamond),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::succ(a, b)),
        ]
    })
    .boxed()
}
