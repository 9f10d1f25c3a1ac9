//! Seeded random formulas.

use modtop_core::Formula;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of generated formulas.
#[derive(Debug, Clone, Copy)]
pub struct FormulaGen {
    pub max_depth: usize,
    /// Variables are drawn from `p0 .. p{vars-1}`.
    pub vars: usize,
}

impl FormulaGen {
    pub fn sample(&self, rng: &mut SeededRng) -> Formula {
        self.node(rng, self.max_depth)
    }

    fn node(&self, rng: &mut SeededRng, depth: usize) -> Formula {
        if depth == 0 || rng.random_ratio(1, 5) {
            return match rng.random_range(0..12) {
                0 => Formula::Top,
                1 => Formula::Bot,
                _ => Formula::var(format!("p{}", rng.random_range(0..self.vars.max(1)))),
            };
        }
        let d = depth - 1;
        // `φ | <>φ` and `φ & []φ` sit two levels above `φ`
        let kinds = if depth >= 2 { 8 } else { 6 };
        match rng.random_range(0..kinds) {
            0 => Formula::not(self.node(rng, d)),
            1 => Formula::and(self.node(rng, d), self.node(rng, d)),
            2 => Formula::or(self.node(rng, d), self.node(rng, d)),
            3 => Formula::imp(self.node(rng, d), self.node(rng, d)),
            4 => Formula::dia(self.node(rng, d)),
            5 => Formula::boxed(self.node(rng, d)),
            6 => Formula::dia_star(self.node(rng, depth - 2)),
            _ => Formula::box_star(self.node(rng, depth - 2)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let g = FormulaGen { max_depth: 8, vars: 3 };
        let mut r = seeded(1);
        let a: Vec<Formula> = (0..50).map(|_| g.sample(&mut r)).collect();
        let mut r = seeded(1);
        for f in &a {
            assert_eq!(*f, g.sample(&mut r));
            assert!(f.depth() <= 8);
            assert!(f.vars().len() <= 3);
        }
    }
}
