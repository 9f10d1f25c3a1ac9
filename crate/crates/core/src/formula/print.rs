use alloc::string::String;

use super::Formula;

// Binding strength; higher binds tighter.
const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

/// Pretty printer for the ASCII syntax accepted by [`super::parse`].
///
/// By default `◇*`/`□*` are printed expanded. With `resugar` set, the
/// patterns `φ | <>φ` and `φ & []φ` are printed as `<*>φ` and `[*]φ`;
/// both forms parse back to the same tree.
#[derive(Debug, Clone, Copy, Default)]
pub struct Printer {
    pub resugar: bool,
}

impl Printer {
    pub fn print(&self, f: &Formula) -> String {
        let mut out = String::new();
        self.write(f, 0, &mut out);
        out
    }

    fn star<'a>(&self, f: &'a Formula) -> Option<(&'static str, &'a Formula)> {
        if !self.resugar {
            return None;
        }
        match f {
            Formula::Or(a, b) => match &**b {
                Formula::Dia(c) if a == c => Some(("<*>", a)),
                _ => None,
            },
            Formula::And(a, b) => match &**b {
                Formula::Box(c) if a == c => Some(("[*]", a)),
                _ => None,
            },
            _ => None,
        }
    }

    fn level(&self, f: &Formula) -> u8 {
        if self.star(f).is_some() {
            return UNARY;
        }
        match f {
            Formula::Var(_) | Formula::Top | Formula::Bot => UNARY + 1,
            Formula::Not(_) | Formula::Dia(_) | Formula::Box(_) => UNARY,
            Formula::And(..) => AND,
            Formula::Or(..) => OR,
            Formula::Imp(..) => IMP,
        }
    }

    fn write(&self, f: &Formula, min: u8, out: &mut String) {
        let parens = self.level(f) < min;
        if parens {
            out.push('(');
        }
        if let Some((op, body)) = self.star(f) {
            out.push_str(op);
            self.write(body, UNARY, out);
        } else {
            match f {
                Formula::Var(v) => out.push_str(v),
                Formula::Top => out.push('T'),
                Formula::Bot => out.push('F'),
                Formula::Not(a) => {
                    out.push('~');
                    self.write(a, UNARY, out);
                }
                Formula::Dia(a) => {
                    out.push_str("<>");
                    self.write(a, UNARY, out);
                }
                Formula::Box(a) => {
                    out.push_str("[]");
                    self.write(a, UNARY, out);
                }
                // & and | are left-associative: the right operand must bind
                // strictly tighter.
                Formula::And(a, b) => {
                    self.write(a, AND, out);
                    out.push_str(" & ");
                    self.write(b, AND + 1, out);
                }
                Formula::Or(a, b) => {
                    self.write(a, OR, out);
                    out.push_str(" | ");
                    self.write(b, OR + 1, out);
                }
                Formula::Imp(a, b) => {
                    self.write(a, IMP + 1, out);
                    out.push_str(" -> ");
                    self.write(b, IMP, out);
                }
            }
        }
        if parens {
            out.push(')');
        }
    }
}

/// Prints with parentheses only where the grammar needs them.
pub fn print(f: &Formula) -> String {
    Printer::default().print(f)
}
