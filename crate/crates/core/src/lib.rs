//! Tetravalent modal logic over the four-element algebra `{0, n, b, 1}`.
//!
//! [`syntax`] parses and prints formulas, [`algebra`] holds the operation
//! tables, [`semantics`] is the brute-force oracle, [`tableau`] decides
//! validity by signed tableaux and [`nd`] checks and normalizes
//! natural-deduction proofs.

pub mod algebra;
pub mod cli;
pub mod nd;
pub mod semantics;
pub mod syntax;
pub mod tableau;
