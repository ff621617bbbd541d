//! The four-element tetravalent modal algebra on `{0, n, b, 1}`.
//!
//! The lattice order is the diamond `0 ≤ n, b ≤ 1` with `n` and `b`
//! incomparable. `¬` swaps `0` and `1` and fixes `n` and `b`; `□` sends
//! everything but `1` to `0`.

mod laws;

use std::fmt;
use std::str::FromStr;

use crate::semantics::{self, Valuation};
use crate::syntax::Formula;

pub use laws::{law_suite, Law, LawKind, LawOutcome};

/// An element of the algebra. The derived `Ord` is the enumeration order
/// `0 < n < b < 1` used to pick witnesses, not the lattice order; see
/// [`TruthValue::leq`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    Zero,
    N,
    B,
    One,
}

use TruthValue::{One, Zero, B, N};

// Rows are the left operand, columns the right one, both in `ALL` order.
const SUCC_TABLE: [[TruthValue; 4]; 4] = [
    [One, One, One, One],
    [N, One, B, One],
    [B, N, One, One],
    [Zero, N, B, One],
];

impl TruthValue {
    pub const ALL: [TruthValue; 4] = [Zero, N, B, One];

    fn index(self) -> usize {
        self as usize
    }

    pub fn leq(self, other: TruthValue) -> bool {
        self == other || self == Zero || other == One
    }

    pub fn meet(self, other: TruthValue) -> TruthValue {
        if self.leq(other) {
            self
        } else if other.leq(self) {
            other
        } else {
            Zero
        }
    }

    pub fn join(self, other: TruthValue) -> TruthValue {
        if self.leq(other) {
            other
        } else if other.leq(self) {
            self
        } else {
            One
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> TruthValue {
        match self {
            Zero => One,
            One => Zero,
            v => v,
        }
    }

    pub fn square(self) -> TruthValue {
        if self == One {
            One
        } else {
            Zero
        }
    }

    pub fn diamond(self) -> TruthValue {
        self.neg().square().neg()
    }

    /// Contrapositive implication, read off the stored table.
    pub fn succ(self, other: TruthValue) -> TruthValue {
        SUCC_TABLE[self.index()][other.index()]
    }

    /// Membership in the designated filter `{b, 1}`.
    pub fn is_designated(self) -> bool {
        matches!(self, B | One)
    }

    /// The automorphism swapping `n` and `b`.
    pub fn conjugate(self) -> TruthValue {
        match self {
            N => B,
            B => N,
            v => v,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Zero => "0",
            N => "n",
            B => "b",
            One => "1",
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown truth value {0:?} (expected one of 0, n, b, 1)")]
pub struct UnknownValue(pub String);

impl FromStr for TruthValue {
    type Err = UnknownValue;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "0" => Ok(Zero),
            "n" => Ok(N),
            "b" => Ok(B),
            "1" => Ok(One),
            other => Err(UnknownValue(other.to_string())),
        }
    }
}

/// Operation symbols of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connective {
    Bot,
    Top,
    Neg,
    Box,
    Dia,
    And,
    Or,
    Succ,
}

impl Connective {
    pub const ALL: [Connective; 8] = [
        Connective::Bot,
        Connective::Top,
        Connective::Neg,
        Connective::Box,
        Connective::Dia,
        Connective::And,
        Connective::Or,
        Connective::Succ,
    ];

    pub fn arity(self) -> usize {
        match self {
            Connective::Bot | Connective::Top => 0,
            Connective::Neg | Connective::Box | Connective::Dia => 1,
            Connective::And | Connective::Or | Connective::Succ => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Bot => "bot",
            Connective::Top => "top",
            Connective::Neg => "~",
            Connective::Box => "[]",
            Connective::Dia => "<>",
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Succ => ">",
        }
    }
}

impl FromStr for Connective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "bot" | "⊥" => Connective::Bot,
            "top" | "⊤" => Connective::Top,
            "~" | "neg" | "¬" => Connective::Neg,
            "[]" | "box" | "□" => Connective::Box,
            "<>" | "dia" | "◇" => Connective::Dia,
            "&" | "and" | "∧" => Connective::And,
            "|" | "or" | "∨" => Connective::Or,
            ">" | "succ" | "≻" => Connective::Succ,
            other => return Err(format!("unknown connective {other:?}")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{connective:?} takes {expected} argument(s), got {got}")]
pub struct ArityError {
    pub connective: Connective,
    pub expected: usize,
    pub got: usize,
}

pub fn apply_op(conn: Connective, args: &[TruthValue]) -> Result<TruthValue, ArityError> {
    if args.len() != conn.arity() {
        return Err(ArityError {
            connective: conn,
            expected: conn.arity(),
            got: args.len(),
        });
    }
    Ok(match conn {
        Connective::Bot => Zero,
        Connective::Top => One,
        Connective::Neg => args[0].neg(),
        Connective::Box => args[0].square(),
        Connective::Dia => args[0].diamond(),
        Connective::And => args[0].meet(args[1]),
        Connective::Or => args[0].join(args[1]),
        Connective::Succ => args[0].succ(args[1]),
    })
}

pub fn leq(a: TruthValue, b: TruthValue) -> bool {
    a.leq(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityCheck {
    Holds,
    /// First valuation, in enumeration order, separating the two sides.
    Fails(Valuation),
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityCheck::Holds)
    }
}

/// Decides `lhs ≈ rhs` by running through every valuation of their joint
/// variables.
pub fn check_identity(lhs: &Formula, rhs: &Formula) -> IdentityCheck {
    let mut vars = lhs.vars();
    rhs.collect_vars(&mut vars);
    for h in semantics::valuations(&vars) {
        let l = semantics::eval(lhs, &h).expect("valuation covers lhs");
        let r = semantics::eval(rhs, &h).expect("valuation covers rhs");
        if l != r {
            return IdentityCheck::Fails(h);
        }
    }
    IdentityCheck::Holds
}

/// Operation table laid out as a grid, rows indexed by the first argument.
pub fn render_table(conn: Connective) -> String {
    let mut out = String::new();
    match conn.arity() {
        0 => out.push_str(&format!(
            "{} = {}\n",
            conn.symbol(),
            apply_op(conn, &[]).unwrap()
        )),
        1 => {
            out.push_str(&format!("{:>3} |", "x"));
            for v in TruthValue::ALL {
                out.push_str(&format!(" {v}"));
            }
            out.push_str(&format!("\n----+{}\n", "-".repeat(8)));
            out.push_str(&format!("{:>3}x|", conn.symbol()));
            for v in TruthValue::ALL {
                out.push_str(&format!(" {}", apply_op(conn, &[v]).unwrap()));
            }
            out.push('\n');
        }
        _ => {
            out.push_str(&format!("{:>3} |", conn.symbol()));
            for v in TruthValue::ALL {
                out.push_str(&format!(" {v}"));
            }
            out.push_str(&format!("\n----+{}\n", "-".repeat(8)));
            for x in TruthValue::ALL {
                out.push_str(&format!("{x:>3} |"));
                for y in TruthValue::ALL {
                    out.push_str(&format!(" {}", apply_op(conn, &[x, y]).unwrap()));
                }
                out.push('\n');
            }
        }
    }
    out
}
