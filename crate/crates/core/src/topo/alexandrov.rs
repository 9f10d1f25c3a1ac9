use alloc::vec::Vec;

use super::TopSpace;
use crate::kripke::{frames_of_size, Frame, FrameConstraints};

impl TopSpace {
    /// The Alexandrov space `W_R`: opens are the `R`-up-sets. `U_w` is the
    /// set of points reachable from `w` in zero or more steps, which is
    /// `R*(w)` when `R` is transitive.
    pub fn alexandrov(frame: &Frame) -> TopSpace {
        let reach = frame.reflexive_closure().transitive_closure();
        TopSpace::from_nbhd_unchecked(reach.successors().to_vec())
    }

    /// The specialization preorder: `x ≤ y` iff `x ∈ cl{y}`, i.e.
    /// `y ∈ U_x`.
    pub fn specialization_frame(&self) -> Frame {
        Frame::from_successors(self.min_nbhds().to_vec()).expect("neighbourhoods lie in the carrier")
    }
}

/// Every topology on `n` labelled points.
///
/// Finite topologies on a fixed carrier correspond one-to-one to
/// preorders on it (specialization one way, Alexandrov the other), so this
/// enumerates the reflexive transitive relations.
pub fn spaces_of_size(n: usize) -> Vec<TopSpace> {
    frames_of_size(n, &FrameConstraints::preorders())
        .iter()
        .map(TopSpace::alexandrov)
        .collect()
}

/// Every topology on 1 to `max_n` labelled points, smallest first.
pub fn all_spaces_up_to(max_n: usize) -> Vec<TopSpace> {
    (1..=max_n).flat_map(spaces_of_size).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PointSet;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn chain_gives_sierpinski() {
        let sp = TopSpace::alexandrov(&Frame::strict_chain(2));
        assert_eq!(sp.opens(), [PointSet::EMPTY, set(&[1]), set(&[0, 1])]);
        assert_eq!(sp, TopSpace::sierpinski());
    }

    #[test]
    fn cluster_gives_indiscrete() {
        assert_eq!(TopSpace::alexandrov(&Frame::universal(2)), TopSpace::indiscrete(2));
    }

    #[test]
    fn opens_are_up_sets() {
        let f = Frame::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let sp = TopSpace::alexandrov(&f);
        for s in sp.points().subsets() {
            let up = f.edges().all(|(a, b)| !s.contains(a) || s.contains(b));
            assert_eq!(sp.is_open(s), up, "{s}");
        }
    }

    #[test]
    fn preorder_round_trip() {
        for n in 1..=4 {
            for f in frames_of_size(n, &FrameConstraints::preorders()) {
                assert_eq!(TopSpace::alexandrov(&f).specialization_frame(), f);
            }
        }
    }

    #[test]
    fn basis_is_reflexive_successors_for_transitive_frames() {
        for n in 1..=3 {
            for f in frames_of_size(n, &FrameConstraints::transitive()) {
                let sp = TopSpace::alexandrov(&f);
                for w in 0..n {
                    assert_eq!(sp.min_nbhd(w), f.reflexive_successors(w));
                }
            }
        }
    }
}
