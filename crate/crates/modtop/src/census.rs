//! One row per finite space: classification flags and the d- and
//! C-validity of the named axioms.

use modtop_core::formula::named_axiom;
use modtop_core::topo::all_spaces_up_to;
use modtop_core::TopSpace;
use serde::Serialize;

use crate::error::{Result, ToolError};
use crate::json::SpaceJson;

/// Labelled spaces on 5 points already number 6942.
pub const MAX_CENSUS_SIZE: usize = 4;

pub const AXIOMS: &[&str] = &["4", "D", "E", "Loeb", "Grz", "M", "M_star"];

#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
    pub td: bool,
    pub t1: bool,
    pub scattered: bool,
    pub crowded: bool,
    pub densely_discrete: bool,
    pub openly_irresolvable: bool,
    pub hi2: bool,
    pub hi3: bool,
    /// `(axiom, d-valid, C-valid)` in `AXIOMS` order.
    pub axioms: Vec<(String, bool, bool)>,
}

fn row(sp: &TopSpace, axioms: &[(String, modtop_core::Formula)]) -> Result<CensusRow> {
    let c = sp.classify();
    let mut out = Vec::new();
    for (name, f) in axioms {
        out.push((name.clone(), sp.d_valid(f)?, sp.c_valid(f)?));
    }
    Ok(CensusRow {
        points: sp.len(),
        opens: SpaceJson::from(sp).opens,
        td: c.is_td,
        t1: c.is_t1,
        scattered: c.is_scattered,
        crowded: c.is_crowded,
        densely_discrete: c.is_densely_discrete,
        openly_irresolvable: sp.is_openly_irresolvable(),
        hi2: sp.is_hereditarily_irresolvable(2),
        hi3: sp.is_hereditarily_irresolvable(3),
        axioms: out,
    })
}

pub fn census(max_size: usize) -> Result<Vec<CensusRow>> {
    if max_size > MAX_CENSUS_SIZE {
        return Err(ToolError::Cap { what: "census size", cap: MAX_CENSUS_SIZE, got: max_size });
    }
    let axioms = AXIOMS
        .iter()
        .map(|a| Ok((a.to_string(), named_axiom(a)?)))
        .collect::<Result<Vec<_>>>()?;
    all_spaces_up_to(max_size).iter().map(|sp| row(sp, &axioms)).collect()
}

pub fn write_csv<W: std::io::Write>(rows: &[CensusRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = [
        "points", "opens", "td", "t1", "scattered", "crowded", "densely_discrete", "oi", "hi2", "hi3",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for a in AXIOMS {
        header.push(format!("{a}_d"));
        header.push(format!("{a}_c"));
    }
    w.write_record(&header)?;
    for r in rows {
        let opens = serde_json::to_string(&r.opens)?;
        let mut rec = vec![r.points.to_string(), opens];
        for b in [r.td, r.t1, r.scattered, r.crowded, r.densely_discrete, r.openly_irresolvable, r.hi2, r.hi3] {
            rec.push(b.to_string());
        }
        for (_, d, c) in &r.axioms {
            rec.push(d.to_string());
            rec.push(c.to_string());
        }
        w.write_record(&rec)?;
    }
    w.flush().map_err(|e| ToolError::Io { path: "<stdout>".into(), source: e })?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_counts_and_cap() {
        let rows = census(3).unwrap();
        assert_eq!(rows.len(), 1 + 4 + 29);
        for r in &rows {
            let four = &r.axioms[0];
            assert_eq!(four.1, r.td);
            assert!(four.2, "4 is C-valid everywhere");
        }
        assert!(matches!(census(5), Err(ToolError::Cap { .. })));
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), rows.len() + 1);
    }
}
