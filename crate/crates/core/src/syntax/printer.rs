use super::{Formula, Index};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    /// Print `~A`, `true` and `A <-> B` instead of their expansions.
    pub resugar: bool,
}

impl Default for Style {
    fn default() -> Self {
        Style { resugar: true }
    }
}

/// Minimal-parenthesis concrete syntax, with resugaring.
pub fn format(f: &Formula) -> String {
    format_with(f, Style::default())
}

pub fn format_with(f: &Formula, style: Style) -> String {
    let mut out = String::new();
    write(f, 0, style, &mut out);
    out
}

const IMP: u8 = 0;
const OR: u8 = 1;
const AND: u8 = 2;
const UNARY: u8 = 3;
const ATOM: u8 = 4;

enum Shape<'a> {
    Leaf(String),
    Prefix(&'static str, &'a Formula),
    Infix(&'a Formula, &'static str, &'a Formula, u8),
}

fn shape(f: &Formula, style: Style) -> Shape<'_> {
    if style.resugar {
        if f.is_verum() {
            return Shape::Leaf("true".into());
        }
        if let Some(body) = f.negated() {
            return Shape::Prefix("~", body);
        }
        if let Some((l, r)) = f.as_iff() {
            return Shape::Infix(l, "<->", r, IMP);
        }
    }
    match f {
        Formula::Falsum => Shape::Leaf("false".into()),
        Formula::Atom(n) => Shape::Leaf(n.clone()),
        Formula::TruthOf(n) => Shape::Leaf(format!("T({n})")),
        Formula::TruthAt(Index::Level(k), n) => Shape::Leaf(format!("T{k}({n})")),
        Formula::TruthAt(Index::Unknown, n) => Shape::Leaf(format!("T?({n})")),
        Formula::Box(b) => Shape::Prefix("box ", b),
        Formula::And(l, r) => Shape::Infix(l, "&", r, AND),
        Formula::Or(l, r) => Shape::Infix(l, "|", r, OR),
        Formula::Imp(l, r) => Shape::Infix(l, "->", r, IMP),
    }
}

fn write(f: &Formula, min: u8, style: Style, out: &mut String) {
    let (level, body): (u8, Box<dyn FnOnce(&mut String)>) = match shape(f, style) {
        Shape::Leaf(s) => (ATOM, Box::new(move |o: &mut String| o.push_str(&s))),
        Shape::Prefix(op, arg) => (
            UNARY,
            Box::new(move |o: &mut String| {
                o.push_str(op);
                write(arg, UNARY, style, o);
            }),
        ),
        Shape::Infix(l, op, r, level) => {
            // `&` and `|` nest to the left, `->` and `<->` to the right
            let (lmin, rmin) = if level == IMP { (OR, IMP) } else { (level, level + 1) };
            (
                level,
                Box::new(move |o: &mut String| {
                    write(l, lmin, style, o);
                    o.push(' ');
                    o.push_str(op);
                    o.push(' ');
                    write(r, rmin, style, o);
                }),
            )
        }
    };
    if level < min {
        out.push('(');
        body(out);
        out.push(')');
    } else {
        body(out);
    }
}
