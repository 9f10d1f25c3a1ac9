use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{ClusterKind, Frame};
use crate::PointSet;

/// Restriction on the kind of every final cluster.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FinalClusters {
    AllDegenerate,
    AllNondegenerate,
    AllSimple,
}

/// Filters for [`enumerate_frames`]. A circumference or final-cluster
/// constraint only makes sense for transitive frames and implies
/// `transitive`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrameConstraints {
    pub transitive: bool,
    pub reflexive: bool,
    pub circumference_at_most: Option<usize>,
    pub final_clusters: Option<FinalClusters>,
    /// Keep one frame per isomorphism class: the one whose adjacency
    /// matrix is lexicographically least.
    pub iso_dedup: bool,
}

impl FrameConstraints {
    pub fn transitive() -> Self {
        FrameConstraints {
            transitive: true,
            ..Default::default()
        }
    }

    /// Reflexive transitive frames (finite quasi-orders).
    pub fn preorders() -> Self {
        FrameConstraints {
            transitive: true,
            reflexive: true,
            ..Default::default()
        }
    }

    pub fn circumference_at_most(mut self, n: usize) -> Self {
        self.circumference_at_most = Some(n);
        self.transitive = true;
        self
    }

    pub fn final_clusters(mut self, kind: FinalClusters) -> Self {
        self.final_clusters = Some(kind);
        self.transitive = true;
        self
    }

    pub fn dedup(mut self) -> Self {
        self.iso_dedup = true;
        self
    }

    fn needs_transitive(&self) -> bool {
        self.transitive || self.circumference_at_most.is_some() || self.final_clusters.is_some()
    }

    pub fn accepts(&self, frame: &Frame) -> bool {
        if self.reflexive && !frame.is_reflexive() {
            return false;
        }
        if !self.needs_transitive() {
            return true;
        }
        let Ok(d) = frame.clusters() else {
            return false;
        };
        if let Some(max) = self.circumference_at_most {
            if d.circumference() > max {
                return false;
            }
        }
        if let Some(kind) = self.final_clusters {
            let ok = d.final_clusters().all(|c| match kind {
                FinalClusters::AllDegenerate => d.kind(c) == ClusterKind::Degenerate,
                FinalClusters::AllNondegenerate => d.kind(c) != ClusterKind::Degenerate,
                FinalClusters::AllSimple => d.kind(c) == ClusterKind::Simple,
            });
            if !ok {
                return false;
            }
        }
        true
    }
}

/// All frames with exactly `n` points meeting the constraints, in
/// increasing order of their row-major adjacency code (or of canonical
/// code when deduplicating).
pub fn frames_of_size(n: usize, constraints: &FrameConstraints) -> Vec<Frame> {
    assert!(n * n <= 64, "frame enumeration supports at most 8 points");
    let mut out = Vec::new();
    let mut gen = Generator {
        n,
        rows: vec![0u64; n],
        reflexive: constraints.reflexive,
        transitive: constraints.needs_transitive(),
    };
    gen.run(0, &mut |rows| {
        let frame = Frame {
            succ: rows.iter().map(|&r| PointSet::from_bits(r)).collect(),
        };
        if constraints.accepts(&frame) {
            out.push(frame);
        }
    });
    if constraints.iso_dedup {
        let perms = permutations(n);
        let codes: BTreeSet<u64> = out.iter().map(|f| canonical_code_with(f, &perms)).collect();
        out = codes.into_iter().map(|c| decode(n, c)).collect();
    } else {
        out.sort_by_key(adjacency_code);
    }
    out
}

/// Depth-first assignment of adjacency cells in row-major order, pruning
/// as soon as a fully decided triple violates transitivity.
struct Generator {
    n: usize,
    rows: Vec<u64>,
    reflexive: bool,
    transitive: bool,
}

impl Generator {
    fn decided(&self, k: usize, a: usize, b: usize) -> bool {
        a * self.n + b <= k
    }

    fn rel(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    fn consistent(&self, k: usize) -> bool {
        if !self.transitive {
            return true;
        }
        let (i, j) = (k / self.n, k % self.n);
        let n = self.n;
        if self.rel(i, j) {
            for c in 0..n {
                if self.decided(k, j, c)
                    && self.decided(k, i, c)
                    && self.rel(j, c)
                    && !self.rel(i, c)
                {
                    return false;
                }
            }
            for a in 0..n {
                if self.decided(k, a, i)
                    && self.decided(k, a, j)
                    && self.rel(a, i)
                    && !self.rel(a, j)
                {
                    return false;
                }
            }
        } else {
            for b in 0..n {
                if self.decided(k, i, b) && self.decided(k, b, j) && self.rel(i, b) && self.rel(b, j)
                {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize, emit: &mut dyn FnMut(&[u64])) {
        let n = self.n;
        if k == n * n {
            emit(&self.rows);
            return;
        }
        let (i, j) = (k / n, k % n);
        let choices: &[bool] = if self.reflexive && i == j { &[true] } else { &[false, true] };
        for &bit in choices {
            if bit {
                self.rows[i] |= 1 << j;
            } else {
                self.rows[i] &= !(1 << j);
            }
            if self.consistent(k) {
                self.run(k + 1, emit);
            }
        }
        self.rows[i] &= !(1 << j);
    }
}

/// Lazily enumerates frames of sizes `1..=max_n`.
pub struct FrameIter {
    constraints: FrameConstraints,
    max_n: usize,
    next_size: usize,
    current: alloc::vec::IntoIter<Frame>,
}

impl Iterator for FrameIter {
    type Item = Frame;

    fn next(&mut self) -> Option<Frame> {
        loop {
            if let Some(f) = self.current.next() {
                return Some(f);
            }
            if self.next_size > self.max_n {
                return None;
            }
            self.current = frames_of_size(self.next_size, &self.constraints).into_iter();
            self.next_size += 1;
        }
    }
}

/// Frames with 1 to `max_n` points meeting the constraints, smallest
/// first.
pub fn enumerate_frames(max_n: usize, constraints: FrameConstraints) -> FrameIter {
    FrameIter {
        constraints,
        max_n,
        next_size: 1,
        current: Vec::new().into_iter(),
    }
}

/// Row-major adjacency bits with cell `(0, 0)` most significant.
fn adjacency_code(frame: &Frame) -> u64 {
    let n = frame.len();
    let mut code = 0u64;
    for x in 0..n {
        for y in 0..n {
            code = code << 1 | u64::from(frame.relates(x, y));
        }
    }
    code
}

fn decode(n: usize, code: u64) -> Frame {
    let mut succ = vec![PointSet::EMPTY; n];
    for (x, row) in succ.iter_mut().enumerate() {
        for y in 0..n {
            let bit = n * n - 1 - (x * n + y);
            if code >> bit & 1 == 1 {
                row.insert(y);
            }
        }
    }
    Frame { succ }
}

fn canonical_code_with(frame: &Frame, perms: &[Vec<usize>]) -> u64 {
    let n = frame.len();
    let mut best = u64::MAX;
    'perm: for p in perms {
        // p[i] is the old point placed at position i
        let mut code = 0u64;
        for i in 0..n {
            let row = frame.succ(p[i]);
            for &pj in p.iter() {
                code = code << 1 | u64::from(row.contains(pj));
            }
            // prefix already larger than the best complete code
            if best != u64::MAX && code > best >> ((n - 1 - i) * n) {
                continue 'perm;
            }
        }
        best = best.min(code);
    }
    best
}

/// Lexicographically least adjacency code over all relabellings.
pub fn canonical_code(frame: &Frame) -> u64 {
    canonical_code_with(frame, &permutations(frame.len()))
}

/// The isomorphic copy of `frame` with the least adjacency code.
pub fn canonical_form(frame: &Frame) -> Frame {
    decode(frame.len(), canonical_code(frame))
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}
