//! File formats. Points are 0-based.
//!
//! Frame: `{"points": N, "edges": [[i, j], ...]}`.
//! Space: `{"points": N, "opens": [[...], ...], "complete": bool}`; with
//! `complete` the family is closed under unions and intersections,
//! otherwise it must already be a topology.
//! Assignment: `{"clusters": [{"members": [...], "space": <space>,
//! "cells": {"w": [...]}}]}`.

use std::collections::BTreeMap;

use modtop_core::check::Countermodel;
use modtop_core::glue::{ClusterAssignment, ClusterSpace};
use modtop_core::{Frame, PointSet, Semantics, TopSpace, Valuation};
use serde::{Deserialize, Serialize};

use crate::error::{Result, ToolError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameJson {
    pub points: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
    #[serde(default)]
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusterJson {
    pub members: Vec<usize>,
    pub space: SpaceJson,
    pub cells: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentJson {
    pub clusters: Vec<ClusterJson>,
}

/// A falsifying model, replayable through the matching evaluator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum WitnessJson {
    Frame {
        frame: FrameJson,
        valuation: BTreeMap<String, Vec<usize>>,
        point: usize,
    },
    Space {
        space: SpaceJson,
        semantics: String,
        valuation: BTreeMap<String, Vec<usize>>,
        point: usize,
    },
}

fn set(xs: &[usize]) -> PointSet {
    xs.iter().copied().collect()
}

fn list(s: PointSet) -> Vec<usize> {
    s.iter().collect()
}

impl FrameJson {
    pub fn to_frame(&self) -> Result<Frame> {
        Ok(Frame::from_edges(self.points, self.edges.iter().map(|&[a, b]| (a, b)))?)
    }
}

impl From<&Frame> for FrameJson {
    fn from(f: &Frame) -> Self {
        FrameJson {
            points: f.len(),
            edges: f.edges().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl SpaceJson {
    pub fn to_space(&self) -> Result<TopSpace> {
        let family: Vec<PointSet> = self.opens.iter().map(|o| set(o)).collect();
        Ok(TopSpace::new(self.points, &family, self.complete)?)
    }
}

impl From<&TopSpace> for SpaceJson {
    fn from(s: &TopSpace) -> Self {
        SpaceJson {
            points: s.len(),
            opens: s.opens().into_iter().map(list).collect(),
            complete: false,
        }
    }
}

impl AssignmentJson {
    pub fn to_assignment(&self) -> Result<ClusterAssignment> {
        let clusters = self
            .clusters
            .iter()
            .map(|c| {
                let members = set(&c.members);
                let mut cells = Vec::with_capacity(members.len());
                for w in members {
                    let cell = c.cells.get(&w.to_string()).ok_or_else(|| {
                        ToolError::Usage(format!("cluster {members}: no cell for member {w}"))
                    })?;
                    cells.push(set(cell));
                }
                if c.cells.len() != members.len() {
                    return Err(ToolError::Usage(format!(
                        "cluster {members}: cells given for points outside the cluster"
                    )));
                }
                Ok(ClusterSpace {
                    members,
                    space: c.space.to_space()?,
                    cells,
                })
            })
            .collect::<Result<_>>()?;
        Ok(ClusterAssignment { clusters })
    }
}

impl From<&ClusterAssignment> for AssignmentJson {
    fn from(a: &ClusterAssignment) -> Self {
        AssignmentJson {
            clusters: a
                .clusters
                .iter()
                .map(|c| ClusterJson {
                    members: list(c.members),
                    space: SpaceJson::from(&c.space),
                    cells: c
                        .members
                        .iter()
                        .zip(&c.cells)
                        .map(|(w, &cell)| (w.to_string(), list(cell)))
                        .collect(),
                })
                .collect(),
        }
    }
}

pub fn valuation_json(v: &Valuation) -> BTreeMap<String, Vec<usize>> {
    v.iter().map(|(k, s)| (k.to_string(), list(s))).collect()
}

pub fn valuation_from_json(v: &BTreeMap<String, Vec<usize>>) -> Valuation {
    v.iter().map(|(k, s)| (k.clone(), set(s))).collect()
}

impl WitnessJson {
    pub fn frame(frame: &Frame, c: &Countermodel) -> Self {
        WitnessJson::Frame {
            frame: frame.into(),
            valuation: valuation_json(&c.valuation),
            point: c.point,
        }
    }

    pub fn space(space: &TopSpace, sem: Semantics, c: &Countermodel) -> Self {
        WitnessJson::Space {
            space: space.into(),
            semantics: sem.to_string(),
            valuation: valuation_json(&c.valuation),
            point: c.point,
        }
    }

    /// Re-evaluates the formula in the witness model; true when it indeed
    /// fails at the recorded point.
    pub fn refutes(&self, f: &modtop_core::Formula) -> Result<bool> {
        match self {
            WitnessJson::Frame { frame, valuation, point } => {
                let frame = frame.to_frame()?;
                Ok(!frame.eval(&valuation_from_json(valuation), f)?.contains(*point))
            }
            WitnessJson::Space { space, semantics, valuation, point } => {
                let sem = parse_semantics(semantics)?;
                let model = modtop_core::TopoModel::new(space.to_space()?, valuation_from_json(valuation))?;
                Ok(!model.eval(f, sem)?.contains(*point))
            }
        }
    }
}

pub fn parse_semantics(s: &str) -> Result<Semantics> {
    match s {
        "d" | "D" => Ok(Semantics::D),
        "c" | "C" => Ok(Semantics::C),
        _ => Err(ToolError::Usage(format!("unknown semantics `{s}`, expected d or c"))),
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| ToolError::Io {
        path: path.to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_round_trip() {
        let f: FrameJson = serde_json::from_str(r#"{"points": 3, "edges": [[0,1],[0,2],[1,2]]}"#).unwrap();
        let frame = f.to_frame().unwrap();
        assert!(frame.is_transitive());
        assert_eq!(FrameJson::from(&frame), f);
        let dup: FrameJson = serde_json::from_str(r#"{"points": 2, "edges": [[0,1],[0,1]]}"#).unwrap();
        assert!(dup.to_frame().is_err());
    }

    #[test]
    fn space_formats() {
        let sierp: SpaceJson = serde_json::from_str(r#"{"points": 2, "opens": [[], [1], [0,1]]}"#).unwrap();
        assert_eq!(sierp.to_space().unwrap(), TopSpace::sierpinski());
        let bad: SpaceJson = serde_json::from_str(r#"{"points": 2, "opens": [[0], [1]]}"#).unwrap();
        assert!(bad.to_space().is_err());
        let gen: SpaceJson =
            serde_json::from_str(r#"{"points": 2, "opens": [[0], [1]], "complete": true}"#).unwrap();
        assert_eq!(gen.to_space().unwrap(), TopSpace::discrete(2));
        assert_eq!(SpaceJson::from(&TopSpace::sierpinski()).to_space().unwrap(), TopSpace::sierpinski());
    }

    #[test]
    fn assignment_round_trip() {
        let frame = Frame::universal(2);
        let a = modtop_core::glue::default_assignment(&frame, 2).unwrap();
        let j = AssignmentJson::from(&a);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains(r#""cells":{"0":[0,1],"1":[2,3]}"#));
        let back: AssignmentJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_assignment().unwrap(), a);
    }
}
