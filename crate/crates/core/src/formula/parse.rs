use alloc::string::String;
use core::fmt;

use super::Formula;

/// Syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken { found: String, expected: &'static str },
    TrailingInput(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Empty => f.write_str("empty formula"),
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character {c:?} at offset {}", self.pos)
            }
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "unexpected end of input at offset {}", self.pos)
            }
            ParseErrorKind::UnexpectedToken { found, expected } => write!(
                f,
                "expected {expected} at offset {}, found `{found}`",
                self.pos
            ),
            ParseErrorKind::TrailingInput(rest) => {
                write!(f, "unexpected `{rest}` at offset {}", self.pos)
            }
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok<'a> {
    Var(&'a str),
    Top,
    Bot,
    Not,
    Dia,
    Box,
    DiaStar,
    BoxStar,
    And,
    Or,
    Imp,
    LParen,
    RParen,
}

impl Tok<'_> {
    fn text(&self) -> &str {
        match self {
            Tok::Var(v) => v,
            Tok::Top => "T",
            Tok::Bot => "F",
            Tok::Not => "~",
            Tok::Dia => "<>",
            Tok::Box => "[]",
            Tok::DiaStar => "<*>",
            Tok::BoxStar => "[*]",
            Tok::And => "&",
            Tok::Or => "|",
            Tok::Imp => "->",
            Tok::LParen => "(",
            Tok::RParen => ")",
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Next token and its start offset, or `None` at end of input.
    fn next(&mut self) -> Result<Option<(usize, Tok<'a>)>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok(None);
        };
        const FIXED: [(&str, Tok<'static>); 11] = [
            ("<*>", Tok::DiaStar),
            ("[*]", Tok::BoxStar),
            ("<>", Tok::Dia),
            ("[]", Tok::Box),
            ("->", Tok::Imp),
            ("~", Tok::Not),
            ("&", Tok::And),
            ("|", Tok::Or),
            ("(", Tok::LParen),
            (")", Tok::RParen),
            ("T", Tok::Top),
        ];
        for (lit, tok) in FIXED {
            if rest.starts_with(lit) {
                self.pos += lit.len();
                return Ok(Some((start, tok)));
            }
        }
        if c == 'F' {
            self.pos += 1;
            return Ok(Some((start, Tok::Bot)));
        }
        if c.is_ascii_lowercase() {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            self.pos += len;
            return Ok(Some((start, Tok::Var(&rest[..len]))));
        }
        Err(ParseError {
            pos: start,
            kind: ParseErrorKind::UnexpectedChar(c),
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: Option<Option<(usize, Tok<'a>)>>,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Result<Option<&(usize, Tok<'a>)>, ParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next()?);
        }
        Ok(self.peeked.as_ref().unwrap().as_ref())
    }

    fn bump(&mut self) -> Result<Option<(usize, Tok<'a>)>, ParseError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lexer.next(),
        }
    }

    fn eat(&mut self, tok: &Tok<'_>) -> Result<bool, ParseError> {
        if matches!(self.peek()?, Some((_, t)) if t == tok) {
            self.bump()?;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Imp)? {
            let rhs = self.implication()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        while self.eat(&Tok::Or)? {
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::And)? {
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let end = self.lexer.src.len();
        let Some((pos, tok)) = self.bump()? else {
            return Err(ParseError {
                pos: end,
                kind: ParseErrorKind::UnexpectedEnd,
            });
        };
        Ok(match tok {
            Tok::Not => Formula::not(self.unary()?),
            Tok::Dia => Formula::dia(self.unary()?),
            Tok::Box => Formula::boxed(self.unary()?),
            Tok::DiaStar => Formula::dia_star(self.unary()?),
            Tok::BoxStar => Formula::box_star(self.unary()?),
            Tok::Top => Formula::Top,
            Tok::Bot => Formula::Bot,
            Tok::Var(v) => Formula::var(v),
            Tok::LParen => {
                let inner = self.implication()?;
                match self.bump()? {
                    Some((_, Tok::RParen)) => inner,
                    Some((pos, t)) => {
                        return Err(ParseError {
                            pos,
                            kind: ParseErrorKind::UnexpectedToken {
                                found: t.text().into(),
                                expected: "`)`",
                            },
                        })
                    }
                    None => {
                        return Err(ParseError {
                            pos: end,
                            kind: ParseErrorKind::UnexpectedEnd,
                        })
                    }
                }
            }
            t => {
                return Err(ParseError {
                    pos,
                    kind: ParseErrorKind::UnexpectedToken {
                        found: t.text().into(),
                        expected: "a formula",
                    },
                })
            }
        })
    }
}

/// Parses the ASCII concrete syntax.
///
/// Unary operators (`~ <> [] <*> [*]`) bind tightest, then `&`, then `|`,
/// then `->`, which associates to the right. `&` and `|` associate to the
/// left.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError {
            pos: 0,
            kind: ParseErrorKind::Empty,
        });
    }
    let mut parser = Parser {
        lexer: Lexer { src: text, pos: 0 },
        peeked: None,
    };
    let f = parser.implication()?;
    if let Some((pos, _)) = parser.bump()? {
        return Err(ParseError {
            pos,
            kind: ParseErrorKind::TrailingInput(text[pos..].trim_end().into()),
        });
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Formula {
        Formula::var(name)
    }

    #[test]
    fn implication_of_modalities() {
        assert_eq!(
            parse("<>p -> []q").unwrap(),
            Formula::imp(Formula::dia(v("p")), Formula::boxed(v("q")))
        );
    }

    #[test]
    fn precedence_not_and_or() {
        assert_eq!(
            parse("~p & q | r").unwrap(),
            Formula::or(Formula::and(Formula::not(v("p")), v("q")), v("r"))
        );
    }

    #[test]
    fn dia_star_expands() {
        assert_eq!(
            parse("<*>p").unwrap(),
            Formula::or(v("p"), Formula::dia(v("p")))
        );
        assert_eq!(
            parse("[*]p").unwrap(),
            Formula::and(v("p"), Formula::boxed(v("p")))
        );
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse("p -> q -> r").unwrap(),
            Formula::imp(v("p"), Formula::imp(v("q"), v("r")))
        );
        assert_eq!(
            parse("p & q & r").unwrap(),
            Formula::and(Formula::and(v("p"), v("q")), v("r"))
        );
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(parse("  <>  p->[]q ").unwrap(), parse("<>p -> []q").unwrap());
        assert_eq!(parse("T|F").unwrap(), Formula::or(Formula::Top, Formula::Bot));
    }

    #[test]
    fn identifiers() {
        assert_eq!(parse("p_0Ab").unwrap(), v("p_0Ab"));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("").unwrap_err().kind, ParseErrorKind::Empty);
        assert_eq!(parse("   ").unwrap_err().kind, ParseErrorKind::Empty);
        let e = parse("p & ").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(e.pos, 4);
        let e = parse("p $ q").unwrap_err();
        assert_eq!(e, ParseError { pos: 2, kind: ParseErrorKind::UnexpectedChar('$') });
        let e = parse("(p | q").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        let e = parse("p q").unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(matches!(e.kind, ParseErrorKind::TrailingInput(_)));
        let e = parse("-> p").unwrap_err();
        assert_eq!(e.pos, 0);
        assert!(parse("P").is_err());
    }
}
