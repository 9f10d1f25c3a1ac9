//! Replacing the clusters of a finite transitive frame by spaces.
//!
//! Each cluster `C` gets a space `X_C` partitioned into cells `X_w`, one
//! per member `w`. The disjoint union is topologised so that a set `O` is
//! open iff every trace `O ∩ X_C` is open in `X_C` and, whenever that trace
//! is nonempty, `O` contains every `X_C'` with `C` strictly below `C'`.
//! The minimal neighbourhood of a point of `X_C` is therefore its local
//! `U_x` together with all those `X_C'`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::dsem::DMorphism;
use crate::kripke::ClusterDecomposition;
use crate::{Error, Frame, PointSet, Result, TopSpace};

/// The space standing in for one cluster. `cells[i]` is `X_w` for the
/// `i`-th smallest member `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterSpace {
    pub members: PointSet,
    pub space: TopSpace,
    pub cells: Vec<PointSet>,
}

impl ClusterSpace {
    /// The cell of member `w`, if `w` belongs to this cluster.
    pub fn cell(&self, w: usize) -> Option<PointSet> {
        self.members.iter().position(|m| m == w).map(|i| self.cells[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClusterAssignment {
    pub clusters: Vec<ClusterSpace>,
}

/// Where a glued point came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    /// Index into the frame's cluster decomposition.
    pub cluster: usize,
    /// The frame point whose cell contains it.
    pub member: usize,
    /// Its label inside the cluster space.
    pub local: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedSpace {
    pub space: TopSpace,
    /// `map[x]` is the frame point `w` with `x ∈ X_w`.
    pub map: Vec<usize>,
    pub provenance: Vec<Provenance>,
    /// Glued label of local point 0 of each cluster space, indexed like the
    /// cluster decomposition.
    pub offsets: Vec<usize>,
    sizes: Vec<usize>,
}

impl GluedSpace {
    /// `X_C` as a set of glued points.
    pub fn cluster_points(&self, c: usize) -> PointSet {
        (self.offsets[c]..self.offsets[c] + self.sizes[c]).collect()
    }

    /// The map onto the frame, as a d-morphism candidate.
    pub fn d_morphism<'a>(&'a self, frame: &'a Frame) -> Result<DMorphism<'a>> {
        DMorphism::new(&self.map, &self.space, frame)
    }
}

/// Indiscrete cluster spaces with cells of `cell_size` points for the
/// non-degenerate clusters, single points for the degenerate ones. Cells
/// of at least two points in an indiscrete space are dense and crowded.
pub fn default_assignment(frame: &Frame, cell_size: usize) -> Result<ClusterAssignment> {
    let d = frame.clusters()?;
    let clusters = (0..d.len())
        .map(|c| {
            let members = d.members(c);
            if d.kind(c).is_degenerate() {
                ClusterSpace {
                    members,
                    space: TopSpace::discrete(1),
                    cells: vec![PointSet::singleton(0)],
                }
            } else {
                let k = members.len();
                ClusterSpace {
                    members,
                    space: TopSpace::indiscrete(k * cell_size),
                    cells: (0..k)
                        .map(|i| (i * cell_size..(i + 1) * cell_size).collect())
                        .collect(),
                }
            }
        })
        .collect();
    Ok(ClusterAssignment { clusters })
}

/// Glues after checking every invariant: the cells partition each
/// cluster space, degenerate clusters get one-point spaces, and the cells
/// of a non-degenerate cluster are dense and crowded.
pub fn glue(frame: &Frame, assignment: &ClusterAssignment) -> Result<GluedSpace> {
    glue_inner(frame, assignment, None, true)
}

/// Glues after checking only that the cells partition each cluster space
/// and that degenerate clusters get one-point spaces. The topology does
/// not depend on density or crowdedness of the cells.
pub fn glue_topology(frame: &Frame, assignment: &ClusterAssignment) -> Result<GluedSpace> {
    glue_inner(frame, assignment, None, false)
}

/// As [`glue_topology`], laying the cluster spaces out in `order` (a
/// permutation of cluster indices) instead of cluster order.
pub fn glue_topology_in_order(
    frame: &Frame,
    assignment: &ClusterAssignment,
    order: &[usize],
) -> Result<GluedSpace> {
    glue_inner(frame, assignment, Some(order), false)
}

fn invalid(cluster: usize, reason: String) -> Error {
    Error::InvalidAssignment { cluster, reason }
}

/// For each decomposition cluster, the index of its assignment entry.
fn match_clusters(d: &ClusterDecomposition, a: &ClusterAssignment, full: bool) -> Result<Vec<usize>> {
    let mut slot = vec![usize::MAX; d.len()];
    for (i, cs) in a.clusters.iter().enumerate() {
        let c = d
            .clusters()
            .iter()
            .position(|&m| m == cs.members)
            .ok_or_else(|| invalid(i, format!("{} is not a cluster of the frame", cs.members)))?;
        if slot[c] != usize::MAX {
            return Err(invalid(i, format!("cluster {} assigned twice", cs.members)));
        }
        slot[c] = i;
        check_cluster(i, cs, d.kind(c).is_degenerate(), full)?;
    }
    if let Some(c) = slot.iter().position(|&s| s == usize::MAX) {
        return Err(invalid(a.clusters.len(), format!("cluster {} has no space", d.members(c))));
    }
    Ok(slot)
}

fn check_cluster(i: usize, cs: &ClusterSpace, degenerate: bool, full: bool) -> Result<()> {
    let members: Vec<usize> = cs.members.iter().collect();
    if cs.cells.len() != members.len() {
        return Err(invalid(
            i,
            format!("{} cells for {} members", cs.cells.len(), members.len()),
        ));
    }
    if degenerate && cs.space.len() != 1 {
        return Err(invalid(i, "degenerate cluster needs a one-point space".into()));
    }
    let mut seen = PointSet::EMPTY;
    for (&w, &cell) in members.iter().zip(&cs.cells) {
        if cell.is_empty() {
            return Err(invalid(i, format!("cell of {w} is empty")));
        }
        if !cell.is_subset(cs.space.points()) {
            return Err(invalid(i, format!("cell of {w} leaves the space")));
        }
        if seen.intersects(cell) {
            return Err(invalid(i, format!("cell of {w} overlaps another cell")));
        }
        seen |= cell;
        if full && !degenerate {
            if !cs.space.is_dense(cell) {
                return Err(invalid(i, format!("cell of {w} is not dense")));
            }
            if !cs.space.is_crowded_set(cell) {
                return Err(invalid(i, format!("cell of {w} is not crowded")));
            }
        }
    }
    if seen != cs.space.points() {
        return Err(invalid(i, "cells do not cover the space".into()));
    }
    Ok(())
}

fn glue_inner(
    frame: &Frame,
    a: &ClusterAssignment,
    order: Option<&[usize]>,
    full: bool,
) -> Result<GluedSpace> {
    let d = frame.clusters()?;
    let slot = match_clusters(&d, a, full)?;
    let k = d.len();
    let order: Vec<usize> = match order {
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != (0..k).collect::<Vec<_>>() {
                return Err(Error::InvalidMap(format!("{o:?} is not a permutation of the clusters")));
            }
            o.to_vec()
        }
        None => (0..k).collect(),
    };
    let sizes: Vec<usize> = (0..k).map(|c| a.clusters[slot[c]].space.len()).collect();
    let total: usize = sizes.iter().sum();
    if total > crate::MAX_POINTS {
        return Err(Error::TooManyPoints(total));
    }
    let mut offsets = vec![0; k];
    let mut next = 0;
    for &c in &order {
        offsets[c] = next;
        next += sizes[c];
    }
    let block = |c: usize| -> PointSet { (offsets[c]..offsets[c] + sizes[c]).collect() };
    let above: Vec<PointSet> = (0..k)
        .map(|c| {
            d.strict_successors(c)
                .iter()
                .fold(PointSet::EMPTY, |acc, c2| acc | block(c2))
        })
        .collect();
    let mut nbhd = vec![PointSet::EMPTY; total];
    let mut map = vec![0; total];
    let mut provenance = vec![Provenance { cluster: 0, member: 0, local: 0 }; total];
    for c in 0..k {
        let cs = &a.clusters[slot[c]];
        let shift: Vec<usize> = (0..sizes[c]).map(|x| x + offsets[c]).collect();
        for (w, &cell) in cs.members.iter().zip(&cs.cells) {
            for local in cell {
                let g = offsets[c] + local;
                map[g] = w;
                provenance[g] = Provenance { cluster: c, member: w, local };
                nbhd[g] = cs.space.min_nbhd(local).map(&shift) | above[c];
            }
        }
    }
    Ok(GluedSpace {
        space: TopSpace::from_nbhd_unchecked(nbhd),
        map,
        provenance,
        offsets,
        sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kripke::{frames_of_size, FrameConstraints};

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().copied().collect()
    }

    /// Opens of the glued space straight from the definition.
    fn opens_by_definition(frame: &Frame, a: &ClusterAssignment, g: &GluedSpace) -> Vec<PointSet> {
        let d = frame.clusters().unwrap();
        g.space
            .points()
            .subsets()
            .filter(|&o| {
                (0..d.len()).all(|c| {
                    let cs = a.clusters.iter().find(|cs| cs.members == d.members(c)).unwrap();
                    let block = g.cluster_points(c);
                    let local: PointSet = (o & block).iter().map(|x| x - g.offsets[c]).collect();
                    cs.space.is_open(local)
                        && (local.is_empty()
                            || d.strict_successors(c).iter().all(|c2| g.cluster_points(c2).is_subset(o)))
                })
            })
            .collect()
    }

    #[test]
    fn single_degenerate_cluster() {
        let f = Frame::empty(1);
        let g = glue(&f, &default_assignment(&f, 2).unwrap()).unwrap();
        assert_eq!(g.space, TopSpace::discrete(1));
        assert_eq!(g.map, [0]);
    }

    #[test]
    fn universal_pair_gives_indiscrete_four() {
        let f = Frame::universal(2);
        let a = default_assignment(&f, 2).unwrap();
        assert_eq!(a.clusters[0].cells, [set(&[0, 1]), set(&[2, 3])]);
        let g = glue(&f, &a).unwrap();
        assert_eq!(g.space, TopSpace::indiscrete(4));
        for w in 0..2 {
            let fibre = g.d_morphism(&f).unwrap().fibre(w);
            assert!(g.space.is_dense(fibre) && g.space.is_crowded_set(fibre));
        }
    }

    #[test]
    fn irreflexive_chain_gives_sierpinski() {
        let f = Frame::strict_chain(2);
        let g = glue(&f, &default_assignment(&f, 2).unwrap()).unwrap();
        assert_eq!(g.space.opens(), [PointSet::EMPTY, set(&[1]), set(&[0, 1])]);
    }

    #[test]
    fn default_assignment_shapes() {
        let f = Frame::universal(1);
        let a = default_assignment(&f, 2).unwrap();
        assert_eq!(a.clusters[0].space, TopSpace::indiscrete(2));
        assert_eq!(a.clusters[0].cells, [set(&[0, 1])]);
        let a = default_assignment(&Frame::universal(3), 2).unwrap();
        assert_eq!(a.clusters[0].space.len(), 6);
        assert!(a.clusters[0].cells.iter().all(|c| c.len() == 2));
        let a = default_assignment(&Frame::strict_chain(3), 2).unwrap();
        assert!(a.clusters.iter().all(|cs| cs.space.len() == 1));
    }

    #[test]
    fn validation_names_the_failure() {
        let f = Frame::universal(2);
        let mut a = default_assignment(&f, 2).unwrap();
        a.clusters[0].cells = vec![set(&[0]), set(&[1, 2, 3])];
        let err = glue(&f, &a).unwrap_err();
        assert!(matches!(&err, Error::InvalidAssignment { reason, .. } if reason.contains("crowded")));
        assert!(glue_topology(&f, &a).is_ok());
        a.clusters[0].cells = vec![set(&[0, 1]), set(&[1, 2, 3])];
        assert!(matches!(glue_topology(&f, &a), Err(Error::InvalidAssignment { .. })));
        a.clusters[0].cells = vec![set(&[0, 1]), set(&[2])];
        assert!(matches!(glue_topology(&f, &a), Err(Error::InvalidAssignment { .. })));
        a.clusters.clear();
        assert!(glue(&f, &a).is_err());
        let cyc = Frame::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(glue(&cyc, &a), Err(Error::NotTransitive));
    }

    #[test]
    fn neighbourhoods_match_open_set_definition() {
        for n in 1..=3 {
            for f in frames_of_size(n, &FrameConstraints::transitive()) {
                let a = default_assignment(&f, 2).unwrap();
                let g = glue(&f, &a).unwrap();
                if g.space.len() > 10 {
                    continue;
                }
                assert_eq!(g.space.opens(), opens_by_definition(&f, &a, &g), "{f:?}");
                for c in 0..f.clusters().unwrap().len() {
                    let cs = a.clusters.iter().find(|cs| cs.members == f.clusters().unwrap().members(c)).unwrap();
                    let (sub, _) = g.space.subspace(g.cluster_points(c)).unwrap();
                    assert_eq!(sub, cs.space);
                }
            }
        }
    }

    #[test]
    fn layout_order_does_not_matter() {
        for f in frames_of_size(3, &FrameConstraints::transitive()) {
            let a = default_assignment(&f, 2).unwrap();
            let k = f.clusters().unwrap().len();
            let reversed: Vec<usize> = (0..k).rev().collect();
            let g1 = glue_topology(&f, &a).unwrap();
            let g2 = glue_topology_in_order(&f, &a, &reversed).unwrap();
            assert!(g1.space.homeomorphism(&g2.space).is_some());
            // matching points by provenance is itself a homeomorphism
            let phi: Vec<usize> = g1
                .provenance
                .iter()
                .map(|p| g2.provenance.iter().position(|q| q == p).unwrap())
                .collect();
            assert_eq!(g1.space.relabel(&phi), g2.space);
            for (x, &y) in phi.iter().enumerate() {
                assert_eq!(g1.map[x], g2.map[y]);
            }
        }
    }

    #[test]
    fn glued_map_is_d_morphism() {
        for n in 1..=3 {
            for f in frames_of_size(n, &FrameConstraints::transitive()) {
                let g = glue(&f, &default_assignment(&f, 2).unwrap()).unwrap();
                let dm = g.d_morphism(&f).unwrap();
                assert_eq!(dm.check(), Ok(()), "{f:?}");
                assert!(dm.is_surjective());
            }
        }
    }
}
