//! Modal formulas over `⊤, ⊥, ¬, ∧, ∨, →, ◇, □`.
//!
//! `◇*φ` and `□*φ` are not node kinds: [`Formula::dia_star`] and
//! [`Formula::box_star`] build `φ ∨ ◇φ` and `φ ∧ □φ`, so every evaluator
//! deals with nine cases only.

mod parse;
mod print;
mod schemes;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;

pub use parse::{parse, ParseError, ParseErrorKind};
pub use print::{print, Printer};
pub use schemes::{fresh_vars, named_axiom, scheme_c, scheme_d, scheme_p, AXIOM_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Var(String),
    Top,
    Bot,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Dia(Box<Formula>),
    Box(Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn dia(f: Formula) -> Formula {
        Formula::Dia(Box::new(f))
    }

    pub fn boxed(f: Formula) -> Formula {
        Formula::Box(Box::new(f))
    }

    /// `φ ∨ ◇φ`
    pub fn dia_star(f: Formula) -> Formula {
        Formula::or(f.clone(), Formula::dia(f))
    }

    /// `φ ∧ □φ`
    pub fn box_star(f: Formula) -> Formula {
        Formula::and(f.clone(), Formula::boxed(f))
    }

    /// Right-nested conjunction; `⊤` for an empty list.
    pub fn conj<I>(items: I) -> Formula
    where
        I: IntoIterator<Item = Formula>,
        I::IntoIter: DoubleEndedIterator,
    {
        let mut it = items.into_iter().rev();
        match it.next() {
            None => Formula::Top,
            Some(last) => it.fold(last, |acc, f| Formula::and(f, acc)),
        }
    }

    /// The variables occurring in the formula.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                if !out.contains(v) {
                    out.insert(v.clone());
                }
            }
            Formula::Top | Formula::Bot => {}
            Formula::Not(a) | Formula::Dia(a) | Formula::Box(a) => a.collect_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Top | Formula::Bot => 1,
            Formula::Not(a) | Formula::Dia(a) | Formula::Box(a) => 1 + a.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Height of the syntax tree; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Top | Formula::Bot => 0,
            Formula::Not(a) | Formula::Dia(a) | Formula::Box(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Number of `◇` nodes.
    pub fn dia_count(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Top | Formula::Bot => 0,
            Formula::Dia(a) => 1 + a.dia_count(),
            Formula::Not(a) | Formula::Box(a) => a.dia_count(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.dia_count() + b.dia_count()
            }
        }
    }
}

impl core::fmt::Display for Formula {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&print(self))
    }
}

impl core::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }

    #[test]
    fn vars_of_simple_formulas() {
        let f = Formula::and(Formula::dia(p()), Formula::dia(Formula::not(p())));
        assert_eq!(f.vars().into_iter().collect::<alloc::vec::Vec<_>>(), ["p"]);
        assert!(Formula::Top.vars().is_empty());
    }

    #[test]
    fn star_sugar_expands() {
        assert_eq!(Formula::dia_star(p()), Formula::or(p(), Formula::dia(p())));
        assert_eq!(Formula::box_star(p()), Formula::and(p(), Formula::boxed(p())));
    }

    #[test]
    fn conj_is_right_nested() {
        let q = Formula::var("q");
        let r = Formula::var("r");
        assert_eq!(
            Formula::conj([p(), q.clone(), r.clone()]),
            Formula::and(p(), Formula::and(q, r))
        );
        assert_eq!(Formula::conj([]), Formula::Top);
    }
}
