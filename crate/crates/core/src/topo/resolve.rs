use alloc::vec;
use alloc::vec::Vec;

use super::TopSpace;
use crate::PointSet;

/// A subspace together with pairwise disjoint nonempty subsets that are
/// each dense in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvableWitness {
    pub subspace: PointSet,
    pub cells: Vec<PointSet>,
}

impl TopSpace {
    /// `k` pairwise disjoint nonempty dense subsets of the whole space, if
    /// they exist.
    pub fn k_resolution(&self, k: usize) -> Option<Vec<PointSet>> {
        self.k_resolution_within(self.points(), k)
    }

    pub fn is_k_resolvable(&self, k: usize) -> bool {
        self.k_resolution(k).is_some()
    }

    /// `k` pairwise disjoint nonempty subsets of `s`, each dense in the
    /// subspace `s`.
    ///
    /// A subset `D ⊆ s` is dense in `s` iff it meets `U_x ∩ s` for every
    /// `x ∈ s`, and it is enough to meet the inclusion-minimal ones. The
    /// search labels the points of `s` with a cell number or "unused",
    /// and cuts a branch as soon as some minimal neighbourhood is fully
    /// labelled without meeting every cell.
    pub fn k_resolution_within(&self, s: PointSet, k: usize) -> Option<Vec<PointSet>> {
        if s.is_empty() || k == 0 {
            return None;
        }
        let mut traces: Vec<PointSet> = s.iter().map(|x| self.min_nbhd(x) & s).collect();
        traces.sort_unstable_by_key(|t| t.len());
        traces.dedup();
        let mut minimal: Vec<PointSet> = Vec::new();
        for t in traces {
            if !minimal.iter().any(|m| m.is_subset(t)) {
                minimal.push(t);
            }
        }
        if minimal.iter().any(|m| m.len() < k) {
            return None;
        }
        if k == 1 {
            return Some(vec![s]);
        }
        let points: Vec<usize> = s.iter().collect();
        // members whose largest point is points[i] are checked at step i
        let mut due: Vec<Vec<PointSet>> = vec![Vec::new(); points.len()];
        for m in minimal {
            let last = 63 - m.bits().leading_zeros() as usize;
            let i = points.iter().position(|&p| p == last).expect("member inside s");
            due[i].push(m);
        }
        let mut cells = vec![PointSet::EMPTY; k];
        if label(0, &points, &due, &mut cells, 0) {
            Some(cells)
        } else {
            None
        }
    }

    /// `k`-HI: no nonempty subspace is `k`-resolvable.
    pub fn is_hereditarily_irresolvable(&self, k: usize) -> bool {
        self.resolvable_subspace(k).is_none()
    }

    /// A nonempty `k`-resolvable subspace, with its dense cells.
    pub fn resolvable_subspace(&self, k: usize) -> Option<ResolvableWitness> {
        self.points()
            .subsets()
            .filter(|s| s.len() >= k)
            .find_map(|s| {
                self.k_resolution_within(s, k)
                    .map(|cells| ResolvableWitness { subspace: s, cells })
            })
    }

    /// OI: no nonempty open subspace is 2-resolvable.
    pub fn is_openly_irresolvable(&self) -> bool {
        self.resolvable_open_subspace().is_none()
    }

    pub fn resolvable_open_subspace(&self) -> Option<ResolvableWitness> {
        self.opens().into_iter().filter(|o| !o.is_empty()).find_map(|o| {
            self.k_resolution_within(o, 2)
                .map(|cells| ResolvableWitness { subspace: o, cells })
        })
    }
}

fn label(
    i: usize,
    points: &[usize],
    due: &[Vec<PointSet>],
    cells: &mut [PointSet],
    used: usize,
) -> bool {
    if i == points.len() {
        return true;
    }
    let p = points[i];
    let k = cells.len();
    // 0 = leave unused; cells are interchangeable so open at most one new one
    for choice in 0..=(used + 1).min(k) {
        if choice > 0 {
            cells[choice - 1].insert(p);
        }
        let ok = due[i]
            .iter()
            .all(|m| cells.iter().all(|c| c.intersects(*m)));
        if ok && label(i + 1, points, due, cells, used.max(choice)) {
            return true;
        }
        if choice > 0 {
            cells[choice - 1].remove(p);
        }
    }
    false
}
