use alloc::format;
use alloc::vec::Vec;

use super::{parse, Formula};
use crate::{Error, Result};

fn check_arity(n: usize, args: &[Formula]) -> Result<()> {
    if args.len() == n + 1 {
        Ok(())
    } else {
        Err(Error::Arity {
            expected: n + 1,
            got: args.len(),
        })
    }
}

/// `p0, .., pn`
pub fn fresh_vars(n: usize) -> Vec<Formula> {
    (0..=n).map(|i| Formula::var(format!("p{i}"))).collect()
}

/// The path formula `◇(φ1 ∧ ◇(φ2 ∧ ⋯ ∧ ◇(φn ∧ ◇φ0)⋯))`; `◇φ0` when `n = 0`.
pub fn scheme_p(n: usize, args: &[Formula]) -> Result<Formula> {
    check_arity(n, args)?;
    let mut acc = Formula::dia(args[0].clone());
    for phi in args[1..].iter().rev() {
        acc = Formula::dia(Formula::and(phi.clone(), acc));
    }
    Ok(acc)
}

/// Pairwise disjointness `⋀_{i<j≤n} ¬(φi ∧ φj)`, conjuncts in
/// lexicographic `(i, j)` order and nested to the right; `⊤` when `n = 0`.
pub fn scheme_d(n: usize, args: &[Formula]) -> Result<Formula> {
    check_arity(n, args)?;
    let mut conjuncts = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            conjuncts.push(Formula::not(Formula::and(args[i].clone(), args[j].clone())));
        }
    }
    Ok(Formula::conj(conjuncts))
}

/// `□*D_n → (◇φ0 → ◇(φ0 ∧ ¬P_n))`, valid in a finite transitive frame
/// exactly when every non-degenerate cluster has at most `n` points.
pub fn scheme_c(n: usize, args: &[Formula]) -> Result<Formula> {
    check_arity(n, args)?;
    let disjoint = scheme_d(n, args)?;
    let path = scheme_p(n, args)?;
    let phi0 = args[0].clone();
    Ok(Formula::imp(
        Formula::box_star(disjoint),
        Formula::imp(
            Formula::dia(phi0.clone()),
            Formula::dia(Formula::and(phi0, Formula::not(path))),
        ),
    ))
}

/// Names accepted by [`named_axiom`].
pub const AXIOM_NAMES: [&str; 10] = ["K", "4", "T", "D", "E", "Loeb", "Grz", "M", "M_dia", "M_star"];

/// A named axiom with its schematic letters instantiated as `p` and `q`.
///
/// `M` is `□◇p → ◇□p`; `M_dia` is `◇(□p ∨ □¬p)` and `M_star` is
/// `◇*(□*p ∨ □*¬p)`.
pub fn named_axiom(name: &str) -> Result<Formula> {
    let text = match name {
        "K" => "[](p -> q) -> []p -> []q",
        "4" => "<><>p -> <>p",
        "T" => "[]p -> p",
        "D" => "<>T",
        "E" => "[]F | <>[]F",
        "Loeb" | "Löb" | "GL" => "[]([]p -> p) -> []p",
        "Grz" => "[]([](p -> []p) -> p) -> []p",
        "M" => "[]<>p -> <>[]p",
        "M_dia" => "<>([]p | []~p)",
        "M_star" => "<*>([*]p | [*]~p)",
        _ => return Err(Error::UnknownAxiom(name.into())),
    };
    Ok(parse(text).expect("built-in axiom text parses"))
}
