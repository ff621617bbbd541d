use std::fmt;
use std::sync::Arc;

use super::Formula;

/// Malformed formula text. `position` is the 1-based character index of
/// the offending token (one past the last character at end of input).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: expected {}, found {}",
            self.position,
            self.expected.join(" or "),
            self.found
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Not,
    Square,
    Diamond,
    And,
    Or,
    Succ,
    LParen,
    RParen,
    Bot,
    Top,
    Ident(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Not => "'~'".into(),
            Tok::Square => "'[]'".into(),
            Tok::Diamond => "'<>'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Succ => "'>'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Bot => "'bot'".into(),
            Tok::Top => "'top'".into(),
            Tok::Ident(name) => format!("identifier '{name}'"),
            Tok::Eof => "end of input".into(),
        }
    }
}

const UNARY_START: &[&str] = &["'~'", "'[]'", "'<>'", "'bot'", "'top'", "identifier", "'('"];

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let two = |next: char, tok: Tok, expected: &'static str| {
            if chars.get(i + 1) == Some(&next) {
                Ok(tok)
            } else {
                Err(ParseError {
                    position: pos + 1,
                    expected: vec![expected],
                    found: chars
                        .get(i + 1)
                        .map(|c| format!("'{c}'"))
                        .unwrap_or_else(|| "end of input".into()),
                })
            }
        };
        let (tok, len) = match c {
            '~' => (Tok::Not, 1),
            '&' => (Tok::And, 1),
            '|' => (Tok::Or, 1),
            '>' => (Tok::Succ, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '[' => (two(']', Tok::Square, "']'")?, 2),
            '<' => (two('>', Tok::Diamond, "'>'")?, 2),
            c if c.is_ascii_lowercase() => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                let tok = match word.as_str() {
                    "bot" => Tok::Bot,
                    "top" => Tok::Top,
                    _ => Tok::Ident(word),
                };
                (tok, j - i)
            }
            other => {
                return Err(ParseError {
                    position: pos,
                    expected: UNARY_START.to_vec(),
                    found: format!("'{other}'"),
                })
            }
        };
        out.push((tok, pos));
        i += len;
    }
    out.push((Tok::Eof, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let (tok, position) = &self.toks[self.at];
        ParseError {
            position: *position,
            expected: expected.to_vec(),
            found: tok.describe(),
        }
    }

    fn succ(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Succ {
            self.bump();
            let rhs = self.succ()?;
            return Ok(Formula::Succ(Arc::new(lhs), Arc::new(rhs)));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::Or(Arc::new(lhs), Arc::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::And(Arc::new(lhs), Arc::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::Neg(Arc::new(self.unary()?)))
            }
            Tok::Square => {
                self.bump();
                Ok(Formula::Box(Arc::new(self.unary()?)))
            }
            Tok::Diamond => {
                self.bump();
                Ok(Formula::Dia(Arc::new(self.unary()?)))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Var(Arc::from(name.as_str())))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.succ()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["'&'", "'|'", "'>'", "')'"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(UNARY_START)),
        }
    }
}

/// Parses the ASCII surface syntax: `~` ¬, `[]` □, `<>` ◇, `&` ∧, `|` ∨,
/// `>` ≻, `bot`, `top`. Unary operators bind tightest, then `&`, `|`, `>`;
/// `&` and `|` associate left, `>` associates right.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = p.succ()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["'&'", "'|'", "'>'", "end of input"]));
    }
    Ok(f)
}
