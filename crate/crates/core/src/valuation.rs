use alloc::collections::BTreeMap;
use alloc::string::String;

use crate::{Error, PointSet, Result};

/// Assignment of point sets to propositional variables, shared by
/// relational and topological models.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Valuation {
    sets: BTreeMap<String, PointSet>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: impl Into<String>, set: PointSet) -> Self {
        self.set(var, set);
        self
    }

    pub fn set(&mut self, var: impl Into<String>, set: PointSet) {
        self.sets.insert(var.into(), set);
    }

    pub fn get(&self, var: &str) -> Result<PointSet> {
        self.sets
            .get(var)
            .copied()
            .ok_or_else(|| Error::UnboundVariable(var.into()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, PointSet)> + '_ {
        self.sets.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Checks every assigned set lies inside a carrier of `n` points.
    pub fn check_carrier(&self, n: usize) -> Result<()> {
        for (_, s) in self.iter() {
            if !s.is_subset(PointSet::full(n)) {
                let point = (s - PointSet::full(n)).first().unwrap_or(n);
                return Err(Error::PointOutOfRange { point, len: n });
            }
        }
        Ok(())
    }

    /// Relabels points: the new valuation holds `f(x)` wherever this one
    /// holds `x`.
    pub fn map_points(&self, f: &[usize]) -> Valuation {
        Valuation {
            sets: self.sets.iter().map(|(k, v)| (k.clone(), v.map(f))).collect(),
        }
    }

    /// Pulls back along `f`: `x` is in the new set iff `f(x)` is in the old.
    pub fn pull_back(&self, f: &[usize]) -> Valuation {
        Valuation {
            sets: self
                .sets
                .iter()
                .map(|(k, v)| {
                    let s = f
                        .iter()
                        .enumerate()
                        .filter(|&(_, &fx)| v.contains(fx))
                        .map(|(x, _)| x)
                        .collect();
                    (k.clone(), s)
                })
                .collect(),
        }
    }
}

impl<S: Into<String>> FromIterator<(S, PointSet)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (S, PointSet)>>(iter: I) -> Self {
        Valuation {
            sets: iter.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }
}
