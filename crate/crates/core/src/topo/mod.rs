//! Finite topological spaces.
//!
//! A finite space is determined by the minimal open neighbourhood `U_x` of
//! each point (the intersection of all opens containing `x`). Every
//! operator here is computed from that table: `x ∈ cl S` iff `U_x` meets
//! `S`, `x ∈ int S` iff `U_x ⊆ S`, and `x ∈ de S` iff `U_x − {x}` meets `S`.

mod alexandrov;
mod classify;
mod resolve;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::{Error, PointSet, Result, MAX_POINTS};

pub use alexandrov::{all_spaces_up_to, spaces_of_size};
pub use classify::Classification;
pub use resolve::ResolvableWitness;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TopSpace {
    nbhd: Vec<PointSet>,
}

impl TopSpace {
    /// Builds a space on `n` points from a family of subsets.
    ///
    /// With `complete`, the family is a subbasis: it is closed under
    /// unions and intersections and `∅`, `X` are added. Without it the
    /// family must already be a topology.
    pub fn new(n: usize, family: &[PointSet], complete: bool) -> Result<TopSpace> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let all = PointSet::full(n);
        for s in family {
            if let Some(point) = (*s - all).first() {
                return Err(Error::PointOutOfRange { point, len: n });
            }
        }
        if !complete {
            let opens: BTreeSet<PointSet> = family.iter().copied().collect();
            if !opens.contains(&PointSet::EMPTY) {
                return Err(Error::InvalidTopology("missing the empty set".into()));
            }
            if !opens.contains(&all) {
                return Err(Error::InvalidTopology("missing the whole space".into()));
            }
            for &a in &opens {
                for &b in &opens {
                    if !opens.contains(&(a | b)) {
                        return Err(Error::InvalidTopology(format!(
                            "union of {a} and {b} is not open"
                        )));
                    }
                    if !opens.contains(&(a & b)) {
                        return Err(Error::InvalidTopology(format!(
                            "intersection of {a} and {b} is not open"
                        )));
                    }
                }
            }
        }
        let nbhd = (0..n)
            .map(|x| {
                family
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(all, |acc, &s| acc & s)
            })
            .collect();
        Ok(TopSpace { nbhd })
    }

    /// Space from its minimal-neighbourhood table. Requires `x ∈ U_x` and
    /// `U_y ⊆ U_x` whenever `y ∈ U_x`.
    pub fn from_min_neighbourhoods(nbhd: Vec<PointSet>) -> Result<TopSpace> {
        let n = nbhd.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let all = PointSet::full(n);
        for (x, &u) in nbhd.iter().enumerate() {
            if let Some(point) = (u - all).first() {
                return Err(Error::PointOutOfRange { point, len: n });
            }
            if !u.contains(x) {
                return Err(Error::InvalidTopology(format!("U_{x} does not contain {x}")));
            }
            for y in u {
                if !nbhd[y].is_subset(u) {
                    return Err(Error::InvalidTopology(format!("U_{y} is not inside U_{x}")));
                }
            }
        }
        Ok(TopSpace { nbhd })
    }

    pub(crate) fn from_nbhd_unchecked(nbhd: Vec<PointSet>) -> TopSpace {
        TopSpace { nbhd }
    }

    pub fn discrete(n: usize) -> TopSpace {
        TopSpace {
            nbhd: (0..n).map(PointSet::singleton).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> TopSpace {
        TopSpace {
            nbhd: alloc::vec![PointSet::full(n); n],
        }
    }

    /// Two points, `{1}` open and `{0}` not.
    pub fn sierpinski() -> TopSpace {
        TopSpace {
            nbhd: alloc::vec![PointSet::full(2), PointSet::singleton(1)],
        }
    }

    pub fn len(&self) -> usize {
        self.nbhd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nbhd.is_empty()
    }

    pub fn points(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// Minimal open neighbourhood `U_x`.
    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    pub fn min_nbhds(&self) -> &[PointSet] {
        &self.nbhd
    }

    /// `U_x − {x}` for every point.
    pub fn punctured_nbhds(&self) -> Vec<PointSet> {
        self.nbhd
            .iter()
            .enumerate()
            .map(|(x, u)| u.without(x))
            .collect()
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.nbhd[x].is_subset(s))
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(self.points() - s)
    }

    /// All open sets, in increasing bit order.
    pub fn opens(&self) -> Vec<PointSet> {
        let mut seen = BTreeSet::new();
        seen.insert(PointSet::EMPTY);
        let mut frontier = alloc::vec![PointSet::EMPTY];
        while let Some(o) = frontier.pop() {
            for &u in &self.nbhd {
                let v = o | u;
                if seen.insert(v) {
                    frontier.push(v);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        (0..self.len()).filter(|&x| self.nbhd[x].intersects(s)).collect()
    }

    pub fn interior(&self, s: PointSet) -> PointSet {
        (0..self.len()).filter(|&x| self.nbhd[x].is_subset(s)).collect()
    }

    /// The derived set: points every punctured neighbourhood of which
    /// meets `s`.
    pub fn derived(&self, s: PointSet) -> PointSet {
        (0..self.len())
            .filter(|&x| self.nbhd[x].without(x).intersects(s))
            .collect()
    }

    pub fn is_dense(&self, s: PointSet) -> bool {
        self.nbhd.iter().all(|u| u.intersects(s))
    }

    /// `s ⊆ de s`: no point of `s` is isolated in the subspace `s`.
    pub fn is_crowded_set(&self, s: PointSet) -> bool {
        s.is_subset(self.derived(s))
    }

    /// Points `x` with `{x}` open.
    pub fn isolated_points(&self) -> PointSet {
        (0..self.len()).filter(|&x| self.nbhd[x].len() == 1).collect()
    }

    /// The subspace on `s` together with the map from new to old labels
    /// (new point `i` is old point `labels[i]`).
    pub fn subspace(&self, s: PointSet) -> Result<(TopSpace, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptySubspace);
        }
        if let Some(point) = (s - self.points()).first() {
            return Err(Error::PointOutOfRange { point, len: self.len() });
        }
        let labels: Vec<usize> = s.iter().collect();
        let mut new_of_old = alloc::vec![usize::MAX; self.len()];
        for (i, &x) in labels.iter().enumerate() {
            new_of_old[x] = i;
        }
        let nbhd = labels
            .iter()
            .map(|&x| (self.nbhd[x] & s).iter().map(|y| new_of_old[y]).collect())
            .collect();
        Ok((TopSpace { nbhd }, labels))
    }

    /// Relabels points: `perm[x]` is the new name of `x`.
    pub fn relabel(&self, perm: &[usize]) -> TopSpace {
        let mut nbhd = alloc::vec![PointSet::EMPTY; self.len()];
        for (x, u) in self.nbhd.iter().enumerate() {
            nbhd[perm[x]] = u.map(perm);
        }
        TopSpace { nbhd }
    }

    /// A homeomorphism onto `other` if one exists (`h[x]` is the image of
    /// `x`). Backtracking; intended for small spaces.
    pub fn homeomorphism(&self, other: &TopSpace) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let sig = |s: &TopSpace, x: usize| {
            let up = s.nbhd[x].len();
            let down = (0..s.len()).filter(|&y| s.nbhd[y].contains(x)).count();
            (up, down)
        };
        let mut a: Vec<_> = (0..n).map(|x| sig(self, x)).collect();
        let mut b: Vec<_> = (0..n).map(|x| sig(other, x)).collect();
        let (sa, sb) = (a.clone(), b.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let mut map = alloc::vec![usize::MAX; n];
        let mut used = PointSet::EMPTY;
        fn go(
            x: usize,
            s: &TopSpace,
            t: &TopSpace,
            sa: &[(usize, usize)],
            sb: &[(usize, usize)],
            map: &mut Vec<usize>,
            used: &mut PointSet,
        ) -> bool {
            let n = s.len();
            if x == n {
                return true;
            }
            for y in 0..n {
                if used.contains(y) || sa[x] != sb[y] {
                    continue;
                }
                // relations with already mapped points must match
                let ok = (0..x).all(|z| {
                    s.nbhd[x].contains(z) == t.nbhd[y].contains(map[z])
                        && s.nbhd[z].contains(x) == t.nbhd[map[z]].contains(y)
                });
                if !ok {
                    continue;
                }
                map[x] = y;
                used.insert(y);
                if go(x + 1, s, t, sa, sb, map, used) {
                    return true;
                }
                used.remove(y);
            }
            map[x] = usize::MAX;
            false
        }
        if go(0, self, other, &sa, &sb, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }
}
