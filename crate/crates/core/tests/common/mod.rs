#![allow(dead_code)]

use modtop_core::{Formula, PointSet, Valuation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random formula of depth at most `depth` over the first `vars`
/// letters of `p, q, r, s`.
pub fn formula(rng: &mut ChaCha8Rng, depth: usize, vars: usize) -> Formula {
    const NAMES: [&str; 4] = ["p", "q", "r", "s"];
    if depth == 0 || rng.random_ratio(1, 4) {
        return match rng.random_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bot,
            _ => Formula::var(NAMES[rng.random_range(0..vars)]),
        };
    }
    let sub = |rng: &mut ChaCha8Rng| formula(rng, depth - 1, vars);
    match rng.random_range(0..6) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        3 => Formula::imp(sub(rng), sub(rng)),
        4 => Formula::dia(sub(rng)),
        _ => Formula::boxed(sub(rng)),
    }
}

pub fn valuation(rng: &mut ChaCha8Rng, f: &Formula, n: usize) -> Valuation {
    f.vars()
        .into_iter()
        .map(|v| (v, PointSet::from_bits(rng.random::<u64>()) & PointSet::full(n)))
        .collect()
}
