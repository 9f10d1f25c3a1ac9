//! Exhaustive validity checking, 64 valuations at a time.
//!
//! Every semantics in this crate evaluates `◇` as "some neighbour satisfies
//! the argument" for a fixed per-point neighbour set: successors in a frame,
//! the punctured minimal neighbourhood `U_x − {x}` for the derived-set
//! semantics, `U_x` itself for the closure semantics. Validity therefore
//! reduces to one engine over a neighbour table.
//!
//! Valuations over the sorted variables `v_0 < v_1 < ..` of a formula on
//! `n` points are indexed by integers: bit `k·n + x` of the index says
//! whether `x ∈ V(v_k)`. A block is 64 consecutive indices; inside a block
//! the truth of a subformula at point `x` is one `u64`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Formula, PointSet, Result, Valuation};

/// Default cap on `|vars(φ)| · n` for exhaustive checks.
pub const DEFAULT_BIT_BUDGET: usize = 24;

/// A falsifying valuation together with a point where the formula fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub valuation: Valuation,
    pub point: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(Countermodel),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn countermodel(&self) -> Option<&Countermodel> {
        match self {
            Validity::Valid => None,
            Validity::Invalid(c) => Some(c),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Var(usize),
    Top,
    Bot,
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Imp(usize, usize),
    Dia(usize),
    Box(usize),
}

/// A formula flattened into post-order with shared subterms merged.
#[derive(Debug, Clone)]
pub struct Program {
    ops: Vec<Op>,
    vars: Vec<String>,
}

impl Program {
    pub fn compile(f: &Formula) -> Program {
        let vars: Vec<String> = f.vars().into_iter().collect();
        let mut prog = Program {
            ops: Vec::new(),
            vars,
        };
        let mut seen = BTreeMap::new();
        prog.push(f, &mut seen);
        prog
    }

    fn push<'f>(&mut self, f: &'f Formula, seen: &mut BTreeMap<&'f Formula, usize>) -> usize {
        if let Some(&i) = seen.get(f) {
            return i;
        }
        let op = match f {
            Formula::Var(v) => Op::Var(self.vars.binary_search(v).expect("collected var")),
            Formula::Top => Op::Top,
            Formula::Bot => Op::Bot,
            Formula::Not(a) => Op::Not(self.push(a, seen)),
            Formula::Dia(a) => Op::Dia(self.push(a, seen)),
            Formula::Box(a) => Op::Box(self.push(a, seen)),
            Formula::And(a, b) => {
                let (a, b) = (self.push(a, seen), self.push(b, seen));
                Op::And(a, b)
            }
            Formula::Or(a, b) => {
                let (a, b) = (self.push(a, seen), self.push(b, seen));
                Op::Or(a, b)
            }
            Formula::Imp(a, b) => {
                let (a, b) = (self.push(a, seen), self.push(b, seen));
                Op::Imp(a, b)
            }
        };
        self.ops.push(op);
        let i = self.ops.len() - 1;
        seen.insert(f, i);
        i
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Decodes a valuation index on an `n`-point carrier.
    pub fn valuation(&self, n: usize, index: u64) -> Valuation {
        let mask = PointSet::full(n).bits();
        self.vars
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let bits = if k * n >= 64 { 0 } else { (index >> (k * n)) & mask };
                (v.clone(), PointSet::from_bits(bits))
            })
            .collect()
    }
}

// Word whose bit j is bit b of j, for b < 6.
const LOW_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Checks validity of `f` over the neighbour table `nbrs`, enumerating all
/// valuations of `vars(f)`. The reported countermodel is the one with the
/// smallest valuation index, and within it the smallest failing point.
pub fn validity(nbrs: &[PointSet], f: &Formula, budget: usize) -> Result<Validity> {
    let prog = Program::compile(f);
    validity_of(nbrs, &prog, budget)
}

pub fn validity_of(nbrs: &[PointSet], prog: &Program, budget: usize) -> Result<Validity> {
    let n = nbrs.len();
    let bits = prog.vars.len() * n;
    if bits > budget || bits > 63 {
        return Err(Error::BudgetExceeded { bits, budget });
    }
    if n == 0 {
        return Ok(Validity::Valid);
    }
    let (blocks, valid_mask) = if bits >= 6 {
        (1u64 << (bits - 6), u64::MAX)
    } else {
        (1u64, (1u64 << (1u32 << bits)) - 1)
    };
    let len = prog.ops.len();
    let mut words = vec![0u64; len * n];
    let root = len - 1;
    for block in 0..blocks {
        for (i, op) in prog.ops.iter().enumerate() {
            let (done, rest) = words.split_at_mut(i * n);
            let out = &mut rest[..n];
            let arg = |j: usize| &done[j * n..j * n + n];
            match *op {
                Op::Var(k) => {
                    for (x, w) in out.iter_mut().enumerate() {
                        let b = k * n + x;
                        *w = if b < 6 {
                            LOW_PATTERNS[b]
                        } else if block >> (b - 6) & 1 == 1 {
                            u64::MAX
                        } else {
                            0
                        };
                    }
                }
                Op::Top => out.fill(u64::MAX),
                Op::Bot => out.fill(0),
                Op::Not(a) => {
                    for (w, &s) in out.iter_mut().zip(arg(a)) {
                        *w = !s;
                    }
                }
                Op::And(a, b) => {
                    for ((w, &s), &t) in out.iter_mut().zip(arg(a)).zip(arg(b)) {
                        *w = s & t;
                    }
                }
                Op::Or(a, b) => {
                    for ((w, &s), &t) in out.iter_mut().zip(arg(a)).zip(arg(b)) {
                        *w = s | t;
                    }
                }
                Op::Imp(a, b) => {
                    for ((w, &s), &t) in out.iter_mut().zip(arg(a)).zip(arg(b)) {
                        *w = !s | t;
                    }
                }
                Op::Dia(a) => {
                    let a = arg(a);
                    for (w, nb) in out.iter_mut().zip(nbrs) {
                        *w = nb.iter().fold(0, |acc, y| acc | a[y]);
                    }
                }
                Op::Box(a) => {
                    let a = arg(a);
                    for (w, nb) in out.iter_mut().zip(nbrs) {
                        *w = nb.iter().fold(u64::MAX, |acc, y| acc & a[y]);
                    }
                }
            }
        }
        let top = &words[root * n..root * n + n];
        let mut best: Option<(u32, usize)> = None;
        for (x, &w) in top.iter().enumerate() {
            let fails = !w & valid_mask;
            if fails != 0 {
                let j = fails.trailing_zeros();
                if best.map_or(true, |(bj, _)| j < bj) {
                    best = Some((j, x));
                }
            }
        }
        if let Some((j, point)) = best {
            let index = block * 64 + u64::from(j);
            return Ok(Validity::Invalid(Countermodel {
                valuation: prog.valuation(n, index),
                point,
            }));
        }
    }
    Ok(Validity::Valid)
}

/// Truth set of `f` under `val` over the neighbour table, evaluated on
/// point sets directly.
pub fn truth_set(nbrs: &[PointSet], val: &Valuation, f: &Formula) -> Result<PointSet> {
    let n = nbrs.len();
    let all = PointSet::full(n);
    Ok(match f {
        Formula::Var(v) => val.get(v)? & all,
        Formula::Top => all,
        Formula::Bot => PointSet::EMPTY,
        Formula::Not(a) => all - truth_set(nbrs, val, a)?,
        Formula::And(a, b) => truth_set(nbrs, val, a)? & truth_set(nbrs, val, b)?,
        Formula::Or(a, b) => truth_set(nbrs, val, a)? | truth_set(nbrs, val, b)?,
        Formula::Imp(a, b) => (all - truth_set(nbrs, val, a)?) | truth_set(nbrs, val, b)?,
        Formula::Dia(a) => {
            let s = truth_set(nbrs, val, a)?;
            (0..n).filter(|&x| nbrs[x].intersects(s)).collect()
        }
        Formula::Box(a) => {
            let s = truth_set(nbrs, val, a)?;
            (0..n).filter(|&x| nbrs[x].is_subset(s)).collect()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn naive(nbrs: &[PointSet], f: &Formula) -> Validity {
        let prog = Program::compile(f);
        let n = nbrs.len();
        let bits = prog.vars().len() * n;
        for idx in 0..1u64 << bits {
            let val = prog.valuation(n, idx);
            let t = truth_set(nbrs, &val, f).unwrap();
            if let Some(point) = (PointSet::full(n) - t).first() {
                return Validity::Invalid(Countermodel { valuation: val, point });
            }
        }
        Validity::Valid
    }

    #[test]
    fn valuation_decoding() {
        let prog = Program::compile(&parse("p & q").unwrap());
        let v = prog.valuation(3, 0b101_011);
        assert_eq!(v.get("p").unwrap(), [0, 1].into_iter().collect());
        assert_eq!(v.get("q").unwrap(), [0, 2].into_iter().collect());
    }

    #[test]
    fn engine_matches_per_valuation_evaluation() {
        let chain: [PointSet; 3] = [
            [1, 2].into_iter().collect(),
            [2].into_iter().collect(),
            PointSet::EMPTY,
        ];
        let loop2: [PointSet; 2] = [PointSet::full(2), PointSet::full(2)];
        for text in [
            "[]([]p -> p) -> []p",
            "<><>p -> <>p",
            "p -> <>p",
            "[]p -> p",
            "<>p & <>q -> <>(p & <>q) | <>(q & <>p) | <>(p & q)",
            "T",
            "F",
            "p | ~p",
            "[]F | <>[]F",
            "[]<>p -> <>[]p",
        ] {
            let f = parse(text).unwrap();
            for nbrs in [&chain[..], &loop2[..]] {
                let fast = validity(nbrs, &f, 24).unwrap();
                assert_eq!(fast, naive(nbrs, &f), "{text}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = parse("p & q & r").unwrap();
        let nbrs = [PointSet::EMPTY; 9];
        assert_eq!(
            validity(&nbrs, &f, 24).unwrap_err(),
            Error::BudgetExceeded { bits: 27, budget: 24 }
        );
        assert!(validity(&nbrs, &f, 27).is_ok());
    }
}
