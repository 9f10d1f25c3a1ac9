use core::fmt;

use super::Frame;

/// Why a map fails to be a bounded morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundedMorphismViolation {
    /// The map has the wrong length or leaves the target.
    NotTotal,
    /// `x R y` but not `f(x) R' f(y)`.
    Forth { x: usize, y: usize },
    /// `f(x) R' v` but no `y` with `x R y` and `f(y) = v`.
    Back { x: usize, v: usize },
}

impl fmt::Display for BoundedMorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotTotal => f.write_str("map is not total on the source"),
            Self::Forth { x, y } => write!(f, "forth fails: {x} R {y} but images unrelated"),
            Self::Back { x, v } => write!(f, "back fails at {x}: image sees {v}, no preimage"),
        }
    }
}

/// Checks the forth and back conditions for `map: source → target`.
pub fn check_bounded_morphism(
    map: &[usize],
    source: &Frame,
    target: &Frame,
) -> Result<(), BoundedMorphismViolation> {
    if map.len() != source.len() || map.iter().any(|&v| v >= target.len()) {
        return Err(BoundedMorphismViolation::NotTotal);
    }
    for (x, y) in source.edges() {
        if !target.relates(map[x], map[y]) {
            return Err(BoundedMorphismViolation::Forth { x, y });
        }
    }
    for x in 0..source.len() {
        let reached = source.succ(x).map(map);
        if let Some(v) = (target.succ(map[x]) - reached).first() {
            return Err(BoundedMorphismViolation::Back { x, v });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn modular_map_between_clusters() {
        let map: Vec<usize> = (0..6).map(|x| x % 3).collect();
        assert_eq!(
            check_bounded_morphism(&map, &Frame::universal(6), &Frame::universal(3)),
            Ok(())
        );
    }

    #[test]
    fn identity() {
        let f = Frame::from_edges(3, [(0, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(check_bounded_morphism(&[0, 1, 2], &f, &f), Ok(()));
    }

    #[test]
    fn constant_map_breaks_forth() {
        assert_eq!(
            check_bounded_morphism(&[0, 0], &Frame::strict_chain(2), &Frame::empty(1)),
            Err(BoundedMorphismViolation::Forth { x: 0, y: 1 })
        );
    }

    #[test]
    fn back_condition() {
        // single irreflexive point onto a reflexive one: forth holds vacuously
        assert_eq!(
            check_bounded_morphism(&[0], &Frame::empty(1), &Frame::universal(1)),
            Err(BoundedMorphismViolation::Back { x: 0, v: 0 })
        );
        assert_eq!(
            check_bounded_morphism(&[5], &Frame::empty(1), &Frame::universal(1)),
            Err(BoundedMorphismViolation::NotTotal)
        );
    }
}
