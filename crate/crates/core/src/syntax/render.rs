use super::Formula;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Succ(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        _ => 4,
    }
}

fn write_at(f: &Formula, min: u8, out: &mut String) {
    let wrap = precedence(f) < min;
    if wrap {
        out.push('(');
    }
    match f {
        Formula::Bot => out.push_str("bot"),
        Formula::Top => out.push_str("top"),
        Formula::Var(name) => out.push_str(name),
        Formula::Neg(a) => {
            out.push('~');
            write_at(a, 4, out);
        }
        Formula::Box(a) => {
            out.push_str("[]");
            write_at(a, 4, out);
        }
        Formula::Dia(a) => {
            out.push_str("<>");
            write_at(a, 4, out);
        }
        // left-associative: the right operand must bind tighter
        Formula::And(a, b) => {
            write_at(a, 3, out);
            out.push_str(" & ");
            write_at(b, 4, out);
        }
        Formula::Or(a, b) => {
            write_at(a, 2, out);
            out.push_str(" | ");
            write_at(b, 3, out);
        }
        // right-associative
        Formula::Succ(a, b) => {
            write_at(a, 2, out);
            out.push_str(" > ");
            write_at(b, 1, out);
        }
    }
    if wrap {
        out.push(')');
    }
}

pub(super) fn render(f: &Formula) -> String {
    let mut out = String::new();
    write_at(f, 1, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn canonical_examples() {
        let p = Formula::var("p");
        let q = Formula::var("q");
        let r = Formula::var("r");
        assert_eq!(render(&Formula::neg(Formula::square(p.clone()))), "~[]p");
        assert_eq!(
            render(&Formula::or(
                p.clone(),
                Formula::neg(Formula::square(p.clone()))
            )),
            "p | ~[]p"
        );
        assert_eq!(
            render(&Formula::succ(
                Formula::and(p.clone(), q.clone()),
                r.clone()
            )),
            "p & q > r"
        );
    }

    #[test]
    fn parentheses_only_where_needed() {
        for (src, want) in [
            ("(p > q) > r", "(p > q) > r"),
            ("p > (q > r)", "p > q > r"),
            ("p | (q | r)", "p | (q | r)"),
            ("(p | q) | r", "p | q | r"),
            ("(p & q) | r", "p & q | r"),
            ("p & (q | r)", "p & (q | r)"),
            ("~(p & q)", "~(p & q)"),
            ("[]<>~ p", "[]<>~p"),
            ("((bot))", "bot"),
        ] {
            assert_eq!(render(&parse(src).unwrap()), want, "{src}");
        }
    }
}
