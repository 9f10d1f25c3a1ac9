//! Property suites over exhaustive or seeded families of frames and
//! spaces.
//!
//! A report counts the instances examined and, separately, how many of
//! them satisfied the property's hypothesis. A property whose hypothesis
//! never fires is reported VACUOUS rather than PASS.

use std::fmt;

use modtop_core::formula::{fresh_vars, named_axiom, parse, print, scheme_c};
use modtop_core::glue::{default_assignment, glue, glue_topology, ClusterAssignment, ClusterSpace};
use modtop_core::kripke::{enumerate_frames, frames_of_size, FrameConstraints};
use modtop_core::topo::all_spaces_up_to;
use modtop_core::{Formula, Frame, PointSet, Semantics, TopSpace, Transfer};
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Result, ToolError};
use crate::gen::{seeded, FormulaGen, SeededRng};
use crate::json::{FrameJson, SpaceJson, WitnessJson};
use crate::search::{countermodel_search, SearchMode, SearchOutcome, SearchSpec};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "UPPERCASE", tag = "verdict")]
pub enum Verdict {
    Pass,
    Fail { detail: String, witness: Value },
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub id: String,
    pub property: String,
    pub instances: usize,
    /// Instances on which the hypothesis held.
    pub coverage: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.verdict, Verdict::Fail { .. })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match &self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail { .. } => "FAIL",
            Verdict::Vacuous => "VACUOUS",
        };
        write!(
            f,
            "{verdict} {}: {} [instances {}, coverage {}, seed {}]",
            self.id, self.property, self.instances, self.coverage, self.seed
        )?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        if let Verdict::Fail { detail, witness } = &self.verdict {
            write!(f, "\n  {detail}\n  witness: {witness}")?;
        }
        Ok(())
    }
}

/// Accumulates one property's instances; keeps the first failure.
struct Tally {
    id: &'static str,
    property: String,
    instances: usize,
    coverage: usize,
    failure: Option<(String, Value)>,
    seed: u64,
    note: Option<String>,
}

impl Tally {
    fn new(id: &'static str, property: impl Into<String>, seed: u64) -> Self {
        Tally {
            id,
            property: property.into(),
            instances: 0,
            coverage: 0,
            failure: None,
            seed,
            note: None,
        }
    }

    /// Records one instance. `witness` is only built on failure.
    fn record(&mut self, hypothesis: bool, ok: bool, witness: impl FnOnce() -> (String, Value)) {
        self.instances += 1;
        if hypothesis {
            self.coverage += 1;
        }
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn finish(self) -> Report {
        let verdict = match self.failure {
            Some((detail, witness)) => Verdict::Fail { detail, witness },
            None if self.coverage == 0 => Verdict::Vacuous,
            None => Verdict::Pass,
        };
        Report {
            id: self.id.to_string(),
            property: self.property,
            instances: self.instances,
            coverage: self.coverage,
            verdict,
            seed: self.seed,
            note: self.note,
        }
    }
}

type Runner = fn(usize, u64) -> Result<Vec<Report>>;

pub struct SuiteInfo {
    pub id: &'static str,
    pub description: &'static str,
    pub default_size: usize,
    pub max_size: usize,
    run: Runner,
}

pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        id: "cycle-scheme",
        description: "transitive frames: the cycle scheme C_n holds iff circumference <= n",
        default_size: 4,
        max_size: 4,
        run: cycle_scheme,
    },
    SuiteInfo {
        id: "grz-singletons",
        description: "transitive frames: Grz holds iff every cluster is a singleton",
        default_size: 4,
        max_size: 4,
        run: grz_singletons,
    },
    SuiteInfo {
        id: "serial-c1-m",
        description: "transitive frames validating D and C_1 validate M",
        default_size: 4,
        max_size: 4,
        run: serial_c1_m,
    },
    SuiteInfo {
        id: "search-oracle",
        description: "frame-mode countermodel search agrees with frame validity",
        default_size: 3,
        max_size: 4,
        run: search_oracle,
    },
    SuiteInfo {
        id: "alexandrov-hi",
        description: "preorders: circumference <= n iff the Alexandrov space is (n+1)-HI",
        default_size: 5,
        max_size: 5,
        run: alexandrov_hi,
    },
    SuiteInfo {
        id: "td-four",
        description: "spaces: 4 is d-valid iff T_D; both T_D tests agree",
        default_size: 4,
        max_size: 5,
        run: td_four,
    },
    SuiteInfo {
        id: "crowded-serial",
        description: "spaces: D is d-valid iff crowded",
        default_size: 4,
        max_size: 5,
        run: crowded_serial,
    },
    SuiteInfo {
        id: "densely-discrete-e",
        description: "spaces: E is d-valid iff densely discrete iff the isolated-point identity holds",
        default_size: 4,
        max_size: 5,
        run: densely_discrete_e,
    },
    SuiteInfo {
        id: "cycle-hi",
        description: "spaces: C_n d-valid iff C_n C-valid iff (n+1)-HI, n = 1, 2",
        default_size: 4,
        max_size: 4,
        run: cycle_hi,
    },
    SuiteInfo {
        id: "open-irresolvable",
        description: "spaces: OI iff <*>([*]p | [*]~p) is d-valid",
        default_size: 4,
        max_size: 5,
        run: open_irresolvable,
    },
    SuiteInfo {
        id: "loeb-scattered",
        description: "spaces: Loeb is d-valid iff scattered",
        default_size: 4,
        max_size: 5,
        run: loeb_scattered,
    },
    SuiteInfo {
        id: "crowded-oi-m",
        description: "crowded OI spaces d-validate M; the converse fails on the indiscrete pair",
        default_size: 5,
        max_size: 5,
        run: crowded_oi_m,
    },
    SuiteInfo {
        id: "crowded-td",
        description: "crowded T_D spaces: interior identities, and T_D with M forces crowded OI",
        default_size: 5,
        max_size: 5,
        run: crowded_td,
    },
    SuiteInfo {
        id: "indiscrete-pair",
        description: "the indiscrete two-point space has exactly the expected flags",
        default_size: 2,
        max_size: 2,
        run: indiscrete_pair,
    },
    SuiteInfo {
        id: "glue-dmorphism",
        description: "glued spaces map onto their frames by d-morphisms that transfer validity",
        default_size: 4,
        max_size: 4,
        run: glue_dmorphism,
    },
    SuiteInfo {
        id: "glue-td",
        description: "gluing T_D cluster spaces gives a T_D space",
        default_size: 3,
        max_size: 4,
        run: glue_td,
    },
    SuiteInfo {
        id: "glue-hi",
        description: "gluing n-HI cluster spaces gives an n-HI space, n = 2, 3",
        default_size: 3,
        max_size: 3,
        run: glue_hi,
    },
    SuiteInfo {
        id: "glue-shape",
        description: "glued spaces: strict cluster edges break T_1; final clusters decide crowded / densely discrete",
        default_size: 4,
        max_size: 4,
        run: glue_shape,
    },
    SuiteInfo {
        id: "round-trip",
        description: "parse(print(f)) = f on seeded random formulas of depth <= 8",
        default_size: 8,
        max_size: 12,
        run: round_trip,
    },
];

pub fn suite(id: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.id == id)
}

/// Runs one suite, or every suite for `"all"`. `size` overrides the
/// suite's default size cap.
pub fn run_suite(id: &str, size: Option<usize>, seed: u64) -> Result<Vec<Report>> {
    if id == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(run_one(s, size.map(|n| n.min(s.max_size)), seed)?);
        }
        return Ok(out);
    }
    let s = suite(id).ok_or_else(|| {
        let ids: Vec<&str> = SUITES.iter().map(|s| s.id).collect();
        ToolError::Usage(format!("unknown suite `{id}`; known: all, {}", ids.join(", ")))
    })?;
    run_one(s, size, seed)
}

fn run_one(s: &SuiteInfo, size: Option<usize>, seed: u64) -> Result<Vec<Report>> {
    let n = size.unwrap_or(s.default_size);
    if n > s.max_size {
        return Err(ToolError::Cap { what: "suite size", cap: s.max_size, got: n });
    }
    (s.run)(n, seed)
}

fn frame_value(f: &Frame) -> Value {
    json!({ "frame": FrameJson::from(f) })
}

fn space_value(s: &TopSpace) -> Value {
    json!({ "space": SpaceJson::from(s) })
}

/// The space, plus a countermodel to `f` when it has one.
fn space_witness(s: &TopSpace, f: &Formula, sem: Semantics) -> Result<Value> {
    Ok(match s.validity(f, sem)?.countermodel() {
        Some(c) => serde_json::to_value(WitnessJson::space(s, sem, c))?,
        None => space_value(s),
    })
}

fn frame_witness(fr: &Frame, f: &Formula) -> Result<Value> {
    Ok(match fr.validity(f)?.countermodel() {
        Some(c) => serde_json::to_value(WitnessJson::frame(fr, c))?,
        None => frame_value(fr),
    })
}

fn transitive_frames(max: usize) -> Vec<Frame> {
    enumerate_frames(max, FrameConstraints::transitive()).collect()
}

fn cycle_scheme(max: usize, seed: u64) -> Result<Vec<Report>> {
    let frames = transitive_frames(max);
    let mut t = Tally::new(
        "cycle-scheme",
        format!("C_n valid iff circumference <= n, transitive frames <= {max} points, n = 0..3"),
        seed,
    );
    for n in 0..=3 {
        let c = scheme_c(n, &fresh_vars(n))?;
        for f in &frames {
            let circ = f.circumference()?;
            let valid = f.validates(&c)?;
            let mut witness = Ok(Value::Null);
            t.record(circ <= n, valid == (circ <= n), || {
                witness = frame_witness(f, &c);
                (format!("n = {n}, circumference {circ}, valid {valid}"), Value::Null)
            });
            if let Some((_, w)) = t.failure.as_mut() {
                if w.is_null() {
                    *w = witness?;
                }
            }
        }
    }
    Ok(vec![t.finish()])
}

fn grz_singletons(max: usize, seed: u64) -> Result<Vec<Report>> {
    let grz = named_axiom("Grz")?;
    let mut t = Tally::new("grz-singletons", format!("Grz valid iff all clusters are singletons, <= {max} points"), seed);
    for f in transitive_frames(max) {
        let singletons = f.clusters()?.clusters().iter().all(|c| c.len() == 1);
        let valid = f.validates(&grz)?;
        let w = frame_witness(&f, &grz)?;
        t.record(singletons, valid == singletons, || (format!("singletons {singletons}, valid {valid}"), w));
    }
    Ok(vec![t.finish()])
}

fn serial_c1_m(max: usize, seed: u64) -> Result<Vec<Report>> {
    let d = named_axiom("D")?;
    let c1 = scheme_c(1, &fresh_vars(1))?;
    let m = named_axiom("M")?;
    let mut t = Tally::new("serial-c1-m", format!("D and C_1 valid implies M valid, <= {max} points"), seed);
    for f in transitive_frames(max) {
        let hyp = f.validates(&d)? && f.validates(&c1)?;
        let ok = !hyp || f.validates(&m)?;
        let w = if ok { Value::Null } else { frame_witness(&f, &m)? };
        t.record(hyp, ok, || ("M fails".into(), w));
    }
    Ok(vec![t.finish()])
}

fn search_oracle(max: usize, seed: u64) -> Result<Vec<Report>> {
    let mut rng = seeded(seed);
    let gen = FormulaGen { max_depth: 4, vars: 2 };
    let mut t = Tally::new(
        "search-oracle",
        format!("search finds a countermodel iff some transitive frame <= {max} points refutes"),
        seed,
    );
    let frames = transitive_frames(max);
    for _ in 0..40 {
        let f = gen.sample(&mut rng);
        let refuted = frames.iter().try_fold(false, |acc, fr| -> Result<bool> {
            Ok(acc || !fr.validates(&f)?)
        })?;
        let spec = SearchSpec {
            formula: f.clone(),
            max_size: max,
            constraints: FrameConstraints::transitive(),
            mode: SearchMode::Frame,
        };
        let out = countermodel_search(&spec)?;
        let (found, replay) = match &out {
            SearchOutcome::Found { witness, .. } => (true, witness.refutes(&f)?),
            SearchOutcome::Exhausted { .. } => (false, true),
        };
        t.record(refuted, found == refuted && replay, || {
            (format!("{f}: search says {out}, oracle refuted {refuted}"), Value::Null)
        });
    }
    Ok(vec![t.finish()])
}

fn alexandrov_hi(max: usize, seed: u64) -> Result<Vec<Report>> {
    let mut t = Tally::new(
        "alexandrov-hi",
        format!("circumference <= n iff W_R is (n+1)-HI, preorders <= {max} points, n = 1..3"),
        seed,
    );
    for k in 1..=max {
        for f in frames_of_size(k, &FrameConstraints::preorders()) {
            let sp = TopSpace::alexandrov(&f);
            let circ = f.circumference()?;
            for n in 1..=3 {
                let hi = sp.is_hereditarily_irresolvable(n + 1);
                t.record(circ <= n, hi == (circ <= n), || {
                    let witness = match sp.resolvable_subspace(n + 1) {
                        Some(r) => json!({
                            "frame": FrameJson::from(&f),
                            "subspace": r.subspace.iter().collect::<Vec<_>>(),
                            "cells": r.cells.iter().map(|c| c.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
                        }),
                        None => frame_value(&f),
                    };
                    (format!("n = {n}, circumference {circ}, HI {hi}"), witness)
                });
            }
        }
    }
    Ok(vec![t.finish()])
}

/// Checks `lhs(space) == d-valid(f)` over all spaces up to `max` points.
fn space_iff(
    id: &'static str,
    property: String,
    max: usize,
    seed: u64,
    f: &Formula,
    lhs: impl Fn(&TopSpace) -> bool,
) -> Result<Tally> {
    let mut t = Tally::new(id, property, seed);
    for sp in all_spaces_up_to(max) {
        let holds = lhs(&sp);
        let valid = sp.d_valid(f)?;
        let w = if holds == valid { Value::Null } else { space_witness(&sp, f, Semantics::D)? };
        t.record(holds, holds == valid, || (format!("predicate {holds}, d-valid {valid}"), w));
    }
    Ok(t)
}

fn td_four(max: usize, seed: u64) -> Result<Vec<Report>> {
    let four = named_axiom("4")?;
    let mut reports = Vec::new();
    let labelled: Vec<usize> = (1..=max).map(|n| modtop_core::topo::spaces_of_size(n).len()).collect();
    let mut count = Tally::new("td-four", format!("labelled topology counts for 1..={max} points"), seed);
    let known = [1, 4, 29, 355, 6942];
    count.record(true, labelled[..] == known[..max], || {
        (format!("counts {labelled:?}"), Value::Null)
    });
    reports.push(count.note(format!("{labelled:?}")).finish());
    let t = space_iff("td-four", format!("4 d-valid iff T_D, spaces <= {max} points"), max, seed, &four, |s| {
        s.is_td()
    })?;
    reports.push(t.finish());
    let mut both = Tally::new("td-four", format!("de de{{x}} within de{{x}} iff x outside cl de{{x}}, <= {max} points"), seed);
    for sp in all_spaces_up_to(max) {
        let (a, b) = (sp.is_td(), sp.is_td_by_closure());
        both.record(a, a == b, || (format!("closed-derived {a}, closure test {b}"), space_value(&sp)));
    }
    reports.push(both.finish());
    Ok(reports)
}

fn crowded_serial(max: usize, seed: u64) -> Result<Vec<Report>> {
    let d = named_axiom("D")?;
    let t = space_iff("crowded-serial", format!("D d-valid iff crowded, <= {max} points"), max, seed, &d, |s| {
        s.is_crowded()
    })?;
    Ok(vec![t.finish()])
}

fn densely_discrete_e(max: usize, seed: u64) -> Result<Vec<Report>> {
    let e = named_axiom("E")?;
    let t = space_iff(
        "densely-discrete-e",
        format!("E d-valid iff densely discrete, <= {max} points"),
        max,
        seed,
        &e,
        |s| s.is_densely_discrete(),
    )?;
    let mut id = Tally::new(
        "densely-discrete-e",
        format!("(X - de X) | de(X - de X) = X iff densely discrete, <= {max} points"),
        seed,
    );
    for sp in all_spaces_up_to(max) {
        let iso = sp.points() - sp.derived(sp.points());
        let eq = (iso | sp.derived(iso)) == sp.points();
        let dd = sp.is_densely_discrete();
        id.record(dd, eq == dd, || (format!("identity {eq}, densely discrete {dd}"), space_value(&sp)));
    }
    Ok(vec![t.finish(), id.finish()])
}

fn cycle_hi(max: usize, seed: u64) -> Result<Vec<Report>> {
    let mut t = Tally::new(
        "cycle-hi",
        format!("C_n d-valid iff C-valid iff (n+1)-HI, spaces <= {max} points, n = 1, 2"),
        seed,
    );
    let spaces = all_spaces_up_to(max);
    for n in 1..=2 {
        let c = scheme_c(n, &fresh_vars(n))?;
        for sp in &spaces {
            let d = sp.d_valid(&c)?;
            let cv = sp.c_valid(&c)?;
            let hi = sp.is_hereditarily_irresolvable(n + 1);
            let ok = d == cv && cv == hi;
            let w = if ok { Value::Null } else { space_witness(sp, &c, Semantics::D)? };
            t.record(hi, ok, || (format!("n = {n}: d {d}, C {cv}, HI {hi}"), w));
        }
    }
    Ok(vec![t.finish()])
}

fn open_irresolvable(max: usize, seed: u64) -> Result<Vec<Report>> {
    let f = named_axiom("M_star")?;
    let t = space_iff(
        "open-irresolvable",
        format!("OI iff <*>([*]p | [*]~p) d-valid, <= {max} points"),
        max,
        seed,
        &f,
        |s| s.is_openly_irresolvable(),
    )?;
    Ok(vec![t.finish()])
}

fn loeb_scattered(max: usize, seed: u64) -> Result<Vec<Report>> {
    let loeb = named_axiom("Loeb")?;
    let t = space_iff(
        "loeb-scattered",
        format!("Loeb d-valid iff scattered, <= {max} points"),
        max,
        seed,
        &loeb,
        |s| s.is_scattered(),
    )?;
    Ok(vec![t.finish()])
}

fn crowded_oi_m(max: usize, seed: u64) -> Result<Vec<Report>> {
    let m = named_axiom("M")?;
    let mut t = Tally::new("crowded-oi-m", format!("crowded and OI implies M d-valid, <= {max} points"), seed);
    for sp in all_spaces_up_to(max) {
        let hyp = sp.is_crowded() && sp.is_openly_irresolvable();
        let ok = !hyp || sp.d_valid(&m)?;
        let w = if ok { Value::Null } else { space_witness(&sp, &m, Semantics::D)? };
        t.record(hyp, ok, || ("M fails".into(), w));
    }
    let t = t.note("no nonempty finite crowded space is OI: a minimal open set is indiscrete with at least two points");
    let pair = TopSpace::indiscrete(2);
    let mut conv = Tally::new("crowded-oi-m", "converse fails: indiscrete pair d-validates M but is not OI", seed);
    let ok = pair.d_valid(&m)? && !pair.is_openly_irresolvable();
    conv.record(true, ok, || ("indiscrete pair".into(), space_value(&pair)));
    Ok(vec![t.finish(), conv.finish()])
}

fn crowded_td(max: usize, seed: u64) -> Result<Vec<Report>> {
    let spaces = all_spaces_up_to(max);
    let mut ident = Tally::new(
        "crowded-td",
        format!("crowded T_D: punctured refinements, open dense parts derived, int cl S = int de S, <= {max} points"),
        seed,
    );
    let left = named_axiom("M_star")?;
    let right = named_axiom("M_dia")?;
    let both_ways = Formula::and(Formula::imp(left.clone(), right.clone()), Formula::imp(right, left));
    for sp in &spaces {
        let hyp = sp.is_crowded() && sp.is_td();
        let ok = !hyp
            || (sp.has_punctured_open_refinements()
                && sp.open_dense_parts_are_derived()
                && sp.int_closure_eq_int_derived()
                && sp.d_valid(&both_ways)?);
        t_record(&mut ident, hyp, ok, sp);
    }
    let ident = ident.note("a finite T_D space is T_0, hence scattered, hence has an isolated point");
    let m = named_axiom("M")?;
    let mut sound = Tally::new("crowded-td", format!("T_D and M d-valid implies crowded and OI, <= {max} points"), seed);
    for sp in &spaces {
        let hyp = sp.is_td() && sp.d_valid(&m)?;
        let ok = !hyp || (sp.is_crowded() && sp.is_openly_irresolvable());
        t_record(&mut sound, hyp, ok, sp);
    }
    let sound = sound.note("M fails at any isolated point, and finite T_D spaces have one");
    Ok(vec![ident.finish(), sound.finish()])
}

fn t_record(t: &mut Tally, hyp: bool, ok: bool, sp: &TopSpace) {
    t.record(hyp, ok, || ("conclusion fails".into(), space_value(sp)));
}

fn indiscrete_pair(_: usize, seed: u64) -> Result<Vec<Report>> {
    let sp = TopSpace::indiscrete(2);
    let flags = json!({
        "crowded": sp.is_crowded(),
        "m_d_valid": sp.d_valid(&named_axiom("M")?)?,
        "oi": sp.is_openly_irresolvable(),
        "td": sp.is_td(),
        "resolvable_2": sp.is_k_resolvable(2),
        "hi_3": sp.is_hereditarily_irresolvable(3),
    });
    let expected = json!({
        "crowded": true,
        "m_d_valid": true,
        "oi": false,
        "td": false,
        "resolvable_2": true,
        "hi_3": true,
    });
    let mut t = Tally::new("indiscrete-pair", "crowded, M d-valid, not OI, not T_D, 2-resolvable, 3-HI", seed);
    t.record(true, flags == expected, || (format!("flags {flags}"), space_value(&sp)));
    Ok(vec![t.finish()])
}

fn glue_dmorphism(max: usize, seed: u64) -> Result<Vec<Report>> {
    let mut rng = seeded(seed);
    let gen = FormulaGen { max_depth: 4, vars: 2 };
    let mut morph = Tally::new(
        "glue-dmorphism",
        format!("glued map is a surjective d-morphism, transitive frames <= {max} points, cells of 2"),
        seed,
    );
    let mut transfer = Tally::new(
        "glue-dmorphism",
        format!("d-valid on the glued space implies valid on the frame, 50 formulas per frame <= {max} points"),
        seed,
    );
    let mut truth = Tally::new("glue-dmorphism", "d-truth sets are preimages of frame truth sets", seed);
    for frame in transitive_frames(max) {
        let g = glue(&frame, &default_assignment(&frame, 2)?)?;
        let dm = g.d_morphism(&frame)?;
        let ok = dm.check().is_ok() && dm.is_surjective();
        morph.record(true, ok, || {
            let why = match dm.check() {
                Err(v) => v.to_string(),
                Ok(()) => "not surjective".into(),
            };
            (why, json!({ "frame": FrameJson::from(&frame), "space": SpaceJson::from(&g.space), "map": g.map }))
        });
        if !ok {
            continue;
        }
        for _ in 0..50 {
            let f = gen.sample(&mut rng);
            match dm.validity_transfer(&f)? {
                Transfer::Consistent { space_valid, .. } => transfer.record(space_valid, true, || unreachable!()),
                Transfer::Violation { frame_countermodel } => transfer.record(true, false, || {
                    (
                        format!("{f} d-valid on the glued space but not on the frame"),
                        serde_json::to_value(WitnessJson::frame(&frame, &frame_countermodel)).unwrap_or(Value::Null),
                    )
                }),
            }
            let val: modtop_core::Valuation = f
                .vars()
                .into_iter()
                .map(|v| (v, PointSet::from_bits(rng.random::<u64>()) & frame.points()))
                .collect();
            let same = dm.preserves_truth(&val, &f)?;
            truth.record(true, same, || {
                (format!("{f} under {val:?}"), json!({ "frame": FrameJson::from(&frame), "space": SpaceJson::from(&g.space), "map": g.map }))
            });
        }
    }
    Ok(vec![morph.finish(), transfer.finish(), truth.finish()])
}

fn glue_td(max: usize, seed: u64) -> Result<Vec<Report>> {
    let mut rng = seeded(seed);
    let td: Vec<TopSpace> = all_spaces_up_to(3).into_iter().filter(TopSpace::is_td).collect();
    let mut t = Tally::new(
        "glue-td",
        format!("T_D cluster spaces glue to T_D, transitive frames <= {max} points with singleton clusters"),
        seed,
    );
    for frame in transitive_frames(max) {
        let d = frame.clusters()?;
        if d.clusters().iter().any(|c| c.len() > 1) {
            continue;
        }
        for _ in 0..5 {
            let clusters = (0..d.len())
                .map(|c| {
                    let space = if d.kind(c).is_degenerate() {
                        TopSpace::discrete(1)
                    } else {
                        td[rng.random_range(0..td.len())].clone()
                    };
                    let cells = vec![space.points()];
                    ClusterSpace { members: d.members(c), space, cells }
                })
                .collect();
            let g = glue_topology(&frame, &ClusterAssignment { clusters })?;
            t.record(true, g.space.is_td(), || {
                ("glued space not T_D".into(), json!({ "frame": FrameJson::from(&frame), "space": SpaceJson::from(&g.space) }))
            });
        }
    }
    let t = t.note("one cell per cluster; only the glued topology is under test");
    Ok(vec![t.finish()])
}

/// A random partition of `space` into `k` nonempty cells, if it has at
/// least `k` points.
fn random_cells(rng: &mut SeededRng, space: &TopSpace, k: usize) -> Option<Vec<PointSet>> {
    if space.len() < k {
        return None;
    }
    loop {
        let mut cells = vec![PointSet::EMPTY; k];
        for x in 0..space.len() {
            cells[rng.random_range(0..k)].insert(x);
        }
        if cells.iter().all(|c| !c.is_empty()) {
            return Some(cells);
        }
    }
}

/// Seeded instances of gluing `n`-HI cluster spaces over transitive
/// frames with up to `max` points.
pub fn glue_hi_instances(max: usize, n: usize, count: usize, seed: u64) -> Result<Report> {
    let mut rng = seeded(seed);
    let frames = transitive_frames(max);
    let pool: Vec<TopSpace> = all_spaces_up_to(4)
        .into_iter()
        .filter(|s| s.is_hereditarily_irresolvable(n))
        .collect();
    let mut t = Tally::new(
        "glue-hi",
        format!("{count} seeded gluings of {n}-HI cluster spaces (<= 4 points) over frames <= {max} points are {n}-HI"),
        seed,
    );
    let (mut fully_valid, mut nondegenerate) = (0, 0);
    while t.instances < count {
        let frame = &frames[rng.random_range(0..frames.len())];
        let d = frame.clusters()?;
        let mut clusters = Vec::new();
        for c in 0..d.len() {
            let members = d.members(c);
            let (space, cells) = if d.kind(c).is_degenerate() {
                (TopSpace::discrete(1), vec![PointSet::singleton(0)])
            } else {
                let k = members.len();
                loop {
                    let s = &pool[rng.random_range(0..pool.len())];
                    if let Some(cells) = random_cells(&mut rng, s, k) {
                        break (s.clone(), cells);
                    }
                }
            };
            clusters.push(ClusterSpace { members, space, cells });
        }
        let a = ClusterAssignment { clusters };
        let hyp = a.clusters.iter().all(|c| c.space.is_hereditarily_irresolvable(n));
        if (0..d.len()).any(|c| !d.kind(c).is_degenerate()) {
            nondegenerate += 1;
        }
        if glue(frame, &a).is_ok() {
            fully_valid += 1;
        }
        let g = glue_topology(frame, &a)?;
        let hi = g.space.is_hereditarily_irresolvable(n);
        t.record(hyp, !hyp || hi, || {
            let r = g.space.resolvable_subspace(n);
            (
                format!("glued space has a {n}-resolvable subspace {:?}", r.map(|r| r.subspace)),
                json!({ "frame": FrameJson::from(frame), "space": SpaceJson::from(&g.space) }),
            )
        });
    }
    let t = t.note(format!(
        "{nondegenerate} with a non-degenerate cluster, {fully_valid} also pass the dense crowded cell check"
    ));
    Ok(t.finish())
}

fn glue_hi(max: usize, seed: u64) -> Result<Vec<Report>> {
    Ok(vec![
        glue_hi_instances(max, 2, 200, seed)?,
        glue_hi_instances(max, 3, 200, seed)?,
    ])
}

fn glue_shape(max: usize, seed: u64) -> Result<Vec<Report>> {
    let mut t1 = Tally::new("glue-shape", format!("a strict cluster edge leaves some singleton non-closed, <= {max} points"), seed);
    let mut crowded = Tally::new("glue-shape", "non-degenerate final clusters give a crowded glued space", seed);
    let mut dd = Tally::new("glue-shape", "degenerate final clusters give a densely discrete glued space", seed);
    for frame in transitive_frames(max) {
        let g = glue(&frame, &default_assignment(&frame, 2)?)?;
        let d = frame.clusters()?;
        let w = || json!({ "frame": FrameJson::from(&frame), "space": SpaceJson::from(&g.space) });
        let edge = (0..d.len()).any(|c| !d.strict_successors(c).is_empty());
        t1.record(edge, !edge || !g.space.is_t1(), || ("glued space is T_1".into(), w()));
        let nondeg = d.final_clusters().all(|c| !d.kind(c).is_degenerate());
        crowded.record(nondeg, !nondeg || g.space.is_crowded(), || ("not crowded".into(), w()));
        let deg = d.final_clusters().all(|c| d.kind(c).is_degenerate());
        dd.record(deg, !deg || g.space.is_densely_discrete(), || ("not densely discrete".into(), w()));
    }
    Ok(vec![t1.finish(), crowded.finish(), dd.finish()])
}

/// `count` seeded formulas of depth at most `depth`.
pub fn round_trip_instances(depth: usize, count: usize, seed: u64) -> Report {
    let mut rng = seeded(seed);
    let gen = FormulaGen { max_depth: depth, vars: 4 };
    let mut t = Tally::new("round-trip", format!("parse(print(f)) = f, {count} formulas of depth <= {depth}"), seed);
    for _ in 0..count {
        let f = gen.sample(&mut rng);
        let text = print(&f);
        let back = parse(&text);
        t.record(f.depth() <= depth, back.as_ref() == Ok(&f), || {
            (format!("{text} parsed as {back:?}"), Value::String(text.clone()))
        });
    }
    t.finish()
}

fn round_trip(depth: usize, seed: u64) -> Result<Vec<Report>> {
    Ok(vec![round_trip_instances(depth, 10_000, seed)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn false_property_fails_with_a_replayable_witness() {
        // the one-point space is T_D but refutes D
        let serial = named_axiom("D").unwrap();
        let t = space_iff("wrong", "D d-valid iff T_D".into(), 3, 0, &serial, |s| s.is_td()).unwrap();
        let r = t.finish();
        let Verdict::Fail { witness, .. } = &r.verdict else { panic!("{r}") };
        let w: WitnessJson = serde_json::from_value(witness.clone()).unwrap();
        assert!(w.refutes(&serial).unwrap());
        assert!(r.to_string().starts_with("FAIL wrong"));
    }

    #[test]
    fn vacuous_is_not_pass() {
        let mut t = Tally::new("v", "nothing fires", 0);
        t.record(false, true, || unreachable!());
        assert_eq!(t.finish().verdict, Verdict::Vacuous);
    }
}
