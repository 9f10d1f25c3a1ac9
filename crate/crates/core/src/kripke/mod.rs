//! Finite Kripke frames and relational models.

mod cluster;
mod enumerate;
mod morphism;

use alloc::vec::Vec;

use crate::check::{self, Validity, DEFAULT_BIT_BUDGET};
use crate::{Error, Formula, PointSet, Result, Valuation, MAX_POINTS};

pub use cluster::{ClusterDecomposition, ClusterKind};
pub use enumerate::{
    canonical_code, canonical_form, enumerate_frames, frames_of_size, permutations,
    FinalClusters, FrameConstraints, FrameIter,
};
pub use morphism::{check_bounded_morphism, BoundedMorphismViolation};

/// A finite frame on points `0..n`; `x R y` iff `y ∈ succ[x]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frame {
    succ: Vec<PointSet>,
}

impl Frame {
    /// Frame from successor sets. Every successor must be a valid point.
    pub fn from_successors(succ: Vec<PointSet>) -> Result<Frame> {
        let n = succ.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let all = PointSet::full(n);
        for s in &succ {
            if let Some(point) = (*s - all).first() {
                return Err(Error::PointOutOfRange { point, len: n });
            }
        }
        Ok(Frame { succ })
    }

    /// Frame from an edge list; duplicate edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Frame>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let mut succ = alloc::vec![PointSet::EMPTY; n];
        for (a, b) in edges {
            for p in [a, b] {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, len: n });
                }
            }
            if succ[a].contains(b) {
                return Err(Error::DuplicateEdge(a, b));
            }
            succ[a].insert(b);
        }
        Ok(Frame { succ })
    }

    /// `n` points, no edges.
    pub fn empty(n: usize) -> Frame {
        Frame {
            succ: alloc::vec![PointSet::EMPTY; n],
        }
    }

    /// A single non-degenerate cluster of `m` points.
    pub fn universal(m: usize) -> Frame {
        Frame {
            succ: alloc::vec![PointSet::full(m); m],
        }
    }

    /// The strict order `0 < 1 < .. < n-1` (irreflexive and transitive).
    pub fn strict_chain(n: usize) -> Frame {
        Frame {
            succ: (0..n)
                .map(|x| PointSet::full(n) - PointSet::full(x + 1))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn points(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn succ(&self, x: usize) -> PointSet {
        self.succ[x]
    }

    pub fn successors(&self) -> &[PointSet] {
        &self.succ
    }

    pub fn relates(&self, x: usize, y: usize) -> bool {
        self.succ[x].contains(y)
    }

    pub fn is_reflexive_at(&self, x: usize) -> bool {
        self.succ[x].contains(x)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(x, s)| s.iter().map(move |y| (x, y)))
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(|s| s.len()).sum()
    }

    /// `R⁻¹ S = {x : R(x) ∩ S ≠ ∅}`.
    pub fn pre_image(&self, s: PointSet) -> PointSet {
        (0..self.len()).filter(|&x| self.succ[x].intersects(s)).collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.succ
            .iter()
            .all(|&s| s.iter().all(|y| self.succ[y].is_subset(s)))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|x| self.is_reflexive_at(x))
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.len()).all(|x| !self.is_reflexive_at(x))
    }

    pub fn transitive_closure(&self) -> Frame {
        let mut succ = self.succ.clone();
        // Warshall: after round k, paths through intermediates <= k are in.
        for k in 0..self.len() {
            let through = succ[k];
            for s in succ.iter_mut() {
                if s.contains(k) {
                    *s |= through;
                }
            }
        }
        Frame { succ }
    }

    /// `R* = R ∪ {(w, w)}`.
    pub fn reflexive_closure(&self) -> Frame {
        Frame {
            succ: self
                .succ
                .iter()
                .enumerate()
                .map(|(x, &s)| s.with(x))
                .collect(),
        }
    }

    /// `R*(x) = {x} ∪ R(x)`.
    pub fn reflexive_successors(&self, x: usize) -> PointSet {
        self.succ[x].with(x)
    }

    /// Truth set of `f` in the model `(self, val)`.
    pub fn eval(&self, val: &Valuation, f: &Formula) -> Result<PointSet> {
        check::truth_set(&self.succ, val, f)
    }

    /// Frame validity with the default bit budget.
    pub fn validity(&self, f: &Formula) -> Result<Validity> {
        self.validity_with_budget(f, DEFAULT_BIT_BUDGET)
    }

    /// Frame validity by exhaustive search over the valuations of
    /// `vars(f)`; fails if `|vars(f)| · n` exceeds `budget`.
    pub fn validity_with_budget(&self, f: &Formula, budget: usize) -> Result<Validity> {
        check::validity(&self.succ, f, budget)
    }

    pub fn validates(&self, f: &Formula) -> Result<bool> {
        Ok(self.validity(f)?.is_valid())
    }

    /// Cluster decomposition; the frame must be transitive.
    pub fn clusters(&self) -> Result<ClusterDecomposition> {
        ClusterDecomposition::new(self)
    }

    /// Size of the largest non-degenerate cluster, 0 if there is none.
    /// Defined for transitive frames only.
    pub fn circumference(&self) -> Result<usize> {
        Ok(self.clusters()?.circumference())
    }

    /// The frame relabelled by the permutation `perm`: `perm[x]` is the new
    /// name of `x`.
    pub fn relabel(&self, perm: &[usize]) -> Frame {
        let mut succ = alloc::vec![PointSet::EMPTY; self.len()];
        for (x, s) in self.succ.iter().enumerate() {
            succ[perm[x]] = s.map(perm);
        }
        Frame { succ }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{named_axiom, parse};

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn eval_on_small_frames() {
        let refl = Frame::universal(1);
        let val = Valuation::new().with("p", PointSet::EMPTY);
        assert_eq!(refl.eval(&val, &parse("<>p").unwrap()).unwrap(), PointSet::EMPTY);
        assert_eq!(refl.eval(&val, &parse("[]p").unwrap()).unwrap(), PointSet::EMPTY);

        let irr = Frame::empty(1);
        assert_eq!(irr.eval(&val, &parse("[]F").unwrap()).unwrap(), set(&[0]));

        let chain = Frame::strict_chain(2);
        let val = Valuation::new().with("p", set(&[1]));
        assert_eq!(chain.eval(&val, &parse("<>p").unwrap()).unwrap(), set(&[0]));
    }

    #[test]
    fn unbound_variable() {
        let f = Frame::universal(2);
        assert_eq!(
            f.eval(&Valuation::new(), &parse("<>q").unwrap()).unwrap_err(),
            Error::UnboundVariable("q".into())
        );
    }

    #[test]
    fn validity_examples() {
        let four = named_axiom("4").unwrap();
        for n in 1..=3 {
            for fr in frames_of_size(n, &FrameConstraints::transitive()) {
                assert!(fr.validates(&four).unwrap());
            }
        }
        let loeb = named_axiom("Loeb").unwrap();
        match Frame::universal(1).validity(&loeb).unwrap() {
            Validity::Invalid(c) => {
                assert_eq!(c.valuation.get("p").unwrap(), PointSet::EMPTY);
                assert_eq!(c.point, 0);
            }
            Validity::Valid => panic!("Löb holds on a reflexive point"),
        }
        assert!(Frame::strict_chain(2).validates(&loeb).unwrap());
    }

    #[test]
    fn four_fails_on_some_intransitive_frame() {
        let f = Frame::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!f.validates(&named_axiom("4").unwrap()).unwrap());
    }

    #[test]
    fn closures() {
        let f = Frame::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!f.is_transitive());
        let t = f.transitive_closure();
        assert_eq!(t, Frame::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        assert!(t.is_transitive());
        assert_eq!(t.transitive_closure(), t);

        let irr = Frame::strict_chain(4);
        let r = irr.reflexive_closure();
        assert_eq!(r.edge_count(), irr.edge_count() + 4);
        assert_eq!(r.reflexive_closure(), r);
    }

    #[test]
    fn edge_list_validation() {
        assert_eq!(
            Frame::from_edges(2, [(0, 1), (0, 1)]).unwrap_err(),
            Error::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Frame::from_edges(2, [(0, 2)]).unwrap_err(),
            Error::PointOutOfRange { point: 2, len: 2 }
        );
        assert!(Frame::from_successors(alloc::vec![set(&[3])]).is_err());
    }

    #[test]
    fn relabel_is_isomorphism() {
        let f = Frame::from_edges(3, [(0, 1), (1, 1)]).unwrap();
        let g = f.relabel(&[2, 0, 1]);
        assert_eq!(g, Frame::from_edges(3, [(2, 0), (0, 0)]).unwrap());
    }
}
