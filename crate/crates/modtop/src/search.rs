//! Bounded countermodel search. Running out of candidates proves nothing
//! about theoremhood: it only means no countermodel exists up to the size
//! searched.

use std::fmt;

use modtop_core::kripke::{frames_of_size, FrameConstraints};
use modtop_core::topo::spaces_of_size;
use modtop_core::{Formula, Semantics};
use serde::Serialize;

use crate::error::{Result, ToolError};
use crate::json::WitnessJson;

/// Largest carrier the search enumerates.
pub const MAX_SEARCH_SIZE: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Relational semantics over enumerated frames.
    Frame,
    /// Derived-set semantics over enumerated topologies.
    SpaceD,
    /// Closure semantics over enumerated topologies.
    SpaceC,
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub formula: Formula,
    pub max_size: usize,
    /// In the space modes these filter the specialization preorder.
    pub constraints: FrameConstraints,
    pub mode: SearchMode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum SearchOutcome {
    Found { size: usize, checked: usize, witness: WitnessJson },
    Exhausted { max_size: usize, checked: usize },
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::Found { size, checked, witness } => {
                write!(f, "countermodel on {size} points after {checked} candidates: ")?;
                f.write_str(&serde_json::to_string(witness).map_err(|_| fmt::Error)?)
            }
            SearchOutcome::Exhausted { max_size, checked } => {
                write!(f, "no countermodel up to {max_size} points ({checked} candidates)")
            }
        }
    }
}

/// Tries sizes `1..=max_size` in order and, within a size, candidates in
/// increasing adjacency code, so the first hit is the smallest.
pub fn countermodel_search(spec: &SearchSpec) -> Result<SearchOutcome> {
    if spec.max_size > MAX_SEARCH_SIZE {
        return Err(ToolError::Cap {
            what: "search size",
            cap: MAX_SEARCH_SIZE,
            got: spec.max_size,
        });
    }
    let mut checked = 0;
    for n in 1..=spec.max_size {
        match spec.mode {
            SearchMode::Frame => {
                for frame in frames_of_size(n, &spec.constraints) {
                    checked += 1;
                    if let Some(c) = frame.validity(&spec.formula)?.countermodel() {
                        let witness = WitnessJson::frame(&frame, c);
                        return Ok(SearchOutcome::Found { size: n, checked, witness });
                    }
                }
            }
            SearchMode::SpaceD | SearchMode::SpaceC => {
                let sem = if spec.mode == SearchMode::SpaceD { Semantics::D } else { Semantics::C };
                for space in spaces_of_size(n) {
                    if !spec.constraints.accepts(&space.specialization_frame()) {
                        continue;
                    }
                    checked += 1;
                    if let Some(c) = space.validity(&spec.formula, sem)?.countermodel() {
                        let witness = WitnessJson::space(&space, sem, c);
                        return Ok(SearchOutcome::Found { size: n, checked, witness });
                    }
                }
            }
        }
    }
    Ok(SearchOutcome::Exhausted { max_size: spec.max_size, checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::json::FrameJson;
    use modtop_core::formula::{fresh_vars, named_axiom, scheme_c};

    fn spec(f: Formula, max_size: usize, c: FrameConstraints) -> SearchSpec {
        SearchSpec { formula: f, max_size, constraints: c, mode: SearchMode::Frame }
    }

    #[test]
    fn loeb_fails_on_reflexive_point() {
        let s = spec(named_axiom("Loeb").unwrap(), 1, FrameConstraints::default().circumference_at_most(1));
        match countermodel_search(&s).unwrap() {
            SearchOutcome::Found { witness: WitnessJson::Frame { frame, .. }, .. } => {
                assert_eq!(frame, FrameJson { points: 1, edges: vec![[0, 0]] });
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_scheme_exhausts_within_its_class() {
        let c1 = scheme_c(1, &fresh_vars(1)).unwrap();
        let s = spec(c1.clone(), 4, FrameConstraints::default().circumference_at_most(1));
        let out = countermodel_search(&s).unwrap();
        assert!(matches!(out, SearchOutcome::Exhausted { max_size: 4, .. }));
        assert!(out.to_string().starts_with("no countermodel up to 4"));
        let s = spec(c1.clone(), 2, FrameConstraints::transitive());
        match countermodel_search(&s).unwrap() {
            SearchOutcome::Found { size: 2, witness, .. } => {
                let WitnessJson::Frame { ref frame, .. } = witness else { panic!() };
                assert_eq!(frame.to_frame().unwrap(), modtop_core::Frame::universal(2));
                assert!(witness.refutes(&c1).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn space_modes_and_caps() {
        let four = named_axiom("4").unwrap();
        let mut s = spec(four.clone(), 3, FrameConstraints::default());
        s.mode = SearchMode::SpaceD;
        let out = countermodel_search(&s).unwrap();
        let SearchOutcome::Found { size: 2, witness, .. } = out else { panic!("{out:?}") };
        assert!(witness.refutes(&four).unwrap());
        s.mode = SearchMode::SpaceC;
        assert!(matches!(countermodel_search(&s).unwrap(), SearchOutcome::Exhausted { .. }));
        s.max_size = 6;
        assert!(matches!(countermodel_search(&s), Err(ToolError::Cap { .. })));
    }
}
