use super::TopSpace;
use crate::PointSet;

/// Separation and density properties of a finite space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_td: bool,
    pub is_t1: bool,
    pub is_scattered: bool,
    pub is_crowded: bool,
    pub is_densely_discrete: bool,
    pub is_door: bool,
    pub isolated_points: PointSet,
}

impl TopSpace {
    pub fn classify(&self) -> Classification {
        let is_td = self.is_td();
        debug_assert_eq!(is_td, self.is_td_by_closure());
        Classification {
            is_td,
            is_t1: self.is_t1(),
            is_scattered: self.is_scattered(),
            is_crowded: self.is_crowded(),
            is_densely_discrete: self.is_densely_discrete(),
            is_door: self.is_door(),
            isolated_points: self.isolated_points(),
        }
    }

    /// Every `de{x}` is closed, tested as `de de{x} ⊆ de{x}`.
    pub fn is_td(&self) -> bool {
        (0..self.len()).all(|x| {
            let d = self.derived(PointSet::singleton(x));
            self.derived(d).is_subset(d)
        })
    }

    /// The other characterisation: `x ∉ cl de{x}` for every `x`.
    pub fn is_td_by_closure(&self) -> bool {
        (0..self.len()).all(|x| !self.closure(self.derived(PointSet::singleton(x))).contains(x))
    }

    /// `de{x} = ∅` for all `x`, i.e. every singleton is closed.
    pub fn is_t1(&self) -> bool {
        (0..self.len()).all(|x| self.derived(PointSet::singleton(x)).is_empty())
    }

    /// Distinct points have distinct minimal neighbourhoods.
    pub fn is_t0(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x + 1..n).all(|y| self.min_nbhd(x) != self.min_nbhd(y)))
    }

    /// Every point is a limit point of the space.
    pub fn is_crowded(&self) -> bool {
        self.isolated_points().is_empty()
    }

    /// Every nonempty subspace has an isolated point. Computed by peeling
    /// off isolated points until nothing is left or a crowded kernel
    /// remains.
    pub fn is_scattered(&self) -> bool {
        let mut rest = self.points();
        while !rest.is_empty() {
            let isolated: PointSet = rest
                .iter()
                .filter(|&x| (self.min_nbhd(x) & rest).len() == 1)
                .collect();
            if isolated.is_empty() {
                return false;
            }
            rest -= isolated;
        }
        true
    }

    /// The isolated points are dense.
    pub fn is_densely_discrete(&self) -> bool {
        self.closure(self.isolated_points()) == self.points()
    }

    /// Every subset is open or closed.
    ///
    /// A subset `S` is neither exactly when it contains some `x` with a
    /// point `a ∈ U_x − S` and misses some `y` with a point `b ∈ U_y ∩ S`.
    /// So a non-door witness exists iff there are `x ≠ y`,
    /// `a ∈ U_x − {x}` and `b ∈ U_y − {y}` with `a ≠ b`; then `{x, b}` is
    /// neither open nor closed.
    pub fn is_door(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            for a in self.min_nbhd(x).without(x) {
                for y in (0..n).filter(|&y| y != x) {
                    if !self.min_nbhd(y).without(y).without(a).is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_scattered(s: &TopSpace) -> bool {
        s.points()
            .subsets()
            .filter(|t| !t.is_empty())
            .all(|t| t.iter().any(|x| (s.min_nbhd(x) & t).len() == 1))
    }

    fn brute_door(s: &TopSpace) -> bool {
        s.points().subsets().all(|t| s.is_open(t) || s.is_closed(t))
    }

    #[test]
    fn indiscrete_pair() {
        let c = TopSpace::indiscrete(2).classify();
        assert!(c.is_crowded);
        assert!(!c.is_td && !c.is_t1 && !c.is_scattered && !c.is_densely_discrete);
        // {0} is neither open nor closed
        assert!(!c.is_door);
        assert_eq!(c.isolated_points, PointSet::EMPTY);
    }

    #[test]
    fn discrete_spaces() {
        for n in 1..=5 {
            let c = TopSpace::discrete(n).classify();
            assert!(c.is_td && c.is_t1 && c.is_scattered && c.is_densely_discrete && c.is_door);
            assert!(!c.is_crowded);
            assert_eq!(c.isolated_points, PointSet::full(n));
        }
    }

    #[test]
    fn sierpinski() {
        let c = TopSpace::sierpinski().classify();
        assert!(c.is_td && !c.is_t1);
        assert!(c.is_scattered && !c.is_crowded && c.is_densely_discrete);
    }

    #[test]
    fn fast_predicates_match_definitions() {
        for n in 1..=4 {
            for s in crate::topo::spaces_of_size(n) {
                assert_eq!(s.is_scattered(), brute_scattered(&s), "{s:?}");
                assert_eq!(s.is_scattered(), s.is_t0(), "{s:?}");
                assert_eq!(s.is_door(), brute_door(&s), "{s:?}");
                assert_eq!(s.is_td(), s.is_td_by_closure(), "{s:?}");
            }
        }
    }
}
