use alloc::vec::Vec;

use super::Frame;
use crate::{Error, PointSet, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClusterKind {
    /// A single irreflexive point.
    Degenerate,
    /// A single reflexive point.
    Simple,
    /// A non-degenerate cluster with two or more points.
    Proper,
}

impl ClusterKind {
    pub fn is_degenerate(self) -> bool {
        self == ClusterKind::Degenerate
    }
}

/// Partition of a transitive frame into clusters, ordered by least member.
///
/// `strict_order[c]` is the set of cluster indices `d` with `c R↑ d`, that
/// is `c R d` and not `d R c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterDecomposition {
    clusters: Vec<PointSet>,
    kinds: Vec<ClusterKind>,
    strict_order: Vec<PointSet>,
    of_point: Vec<usize>,
}

impl ClusterDecomposition {
    pub fn new(frame: &Frame) -> Result<Self> {
        if !frame.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let n = frame.len();
        let mut of_point = alloc::vec![usize::MAX; n];
        let mut clusters = Vec::new();
        let mut kinds = Vec::new();
        for x in 0..n {
            if of_point[x] != usize::MAX {
                continue;
            }
            // C_x = {x} ∪ {y : x R y R x}
            let members = frame
                .succ(x)
                .iter()
                .filter(|&y| frame.relates(y, x))
                .collect::<PointSet>()
                .with(x);
            let kind = if !frame.is_reflexive_at(x) {
                ClusterKind::Degenerate
            } else if members.len() == 1 {
                ClusterKind::Simple
            } else {
                ClusterKind::Proper
            };
            for y in members {
                of_point[y] = clusters.len();
            }
            clusters.push(members);
            kinds.push(kind);
        }
        let strict_order = clusters
            .iter()
            .enumerate()
            .map(|(c, members)| {
                let rep = members.first().expect("clusters are nonempty");
                frame
                    .succ(rep)
                    .iter()
                    .map(|y| of_point[y])
                    .filter(|&d| d != c)
                    .collect()
            })
            .collect();
        Ok(ClusterDecomposition {
            clusters,
            kinds,
            strict_order,
            of_point,
        })
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn members(&self, c: usize) -> PointSet {
        self.clusters[c]
    }

    pub fn clusters(&self) -> &[PointSet] {
        &self.clusters
    }

    pub fn kind(&self, c: usize) -> ClusterKind {
        self.kinds[c]
    }

    pub fn kinds(&self) -> &[ClusterKind] {
        &self.kinds
    }

    /// Cluster index of point `x`.
    pub fn cluster_of(&self, x: usize) -> usize {
        self.of_point[x]
    }

    /// Clusters strictly above `c`.
    pub fn strict_successors(&self, c: usize) -> PointSet {
        self.strict_order[c]
    }

    pub fn strictly_below(&self, c: usize, d: usize) -> bool {
        self.strict_order[c].contains(d)
    }

    pub fn is_final(&self, c: usize) -> bool {
        self.strict_order[c].is_empty()
    }

    pub fn final_clusters(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&c| self.is_final(c))
    }

    /// Size of the largest non-degenerate cluster, 0 when all are
    /// degenerate.
    pub fn circumference(&self) -> usize {
        self.clusters
            .iter()
            .zip(&self.kinds)
            .filter(|(_, k)| !k.is_degenerate())
            .map(|(c, _)| c.len())
            .max()
            .unwrap_or(0)
    }
}
