use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use modtop::census::{census, write_csv};
use modtop::error::{Result, ToolError};
use modtop::json::{parse_semantics, read_json, AssignmentJson, FrameJson, SpaceJson, WitnessJson};
use modtop::resolve::resolve_formula;
use modtop::search::{countermodel_search, SearchMode, SearchOutcome, SearchSpec};
use modtop::suite::{run_suite, Verdict, SUITES};
use modtop_core::glue::{default_assignment, glue};
use modtop_core::kripke::{FinalClusters, FrameConstraints};
use modtop_core::{Frame, TopSpace};
use serde_json::json;

/// Finite Kripke frames, finite topological spaces and their modal logics.
///
/// Exit status: 0 valid / pass, 1 refuted / fail, 2 bad input, 3 size or
/// budget cap exceeded.
#[derive(Parser)]
#[command(name = "modtop", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Work with a frame given as JSON `{"points", "edges"}`.
    Frame {
        #[command(subcommand)]
        action: FrameAction,
    },
    /// Work with a space given as JSON `{"points", "opens", "complete"?}`.
    Space {
        #[command(subcommand)]
        action: SpaceAction,
    },
    /// Glue cluster spaces over a transitive frame.
    Glue {
        #[arg(long)]
        file: String,
        /// `default:<k>` for k-point indiscrete cluster spaces, or a JSON file.
        #[arg(long, default_value = "default:2")]
        assignment: String,
    },
    /// Search enumerated frames or spaces for a countermodel.
    Countermodel {
        #[arg(long)]
        formula: String,
        #[arg(long, value_enum, default_value_t = Mode::Frame)]
        mode: Mode,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Only consider transitive frames (in space modes: always true).
        #[arg(long)]
        transitive: bool,
        #[arg(long)]
        reflexive: bool,
        #[arg(long)]
        circumference: Option<usize>,
        #[arg(long, value_enum)]
        final_clusters: Option<Final>,
    },
    /// Flags and axiom validity for every labelled space up to a size.
    Census {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
    /// Property suites.
    Suite {
        #[command(subcommand)]
        action: SuiteAction,
    },
}

#[derive(Subcommand)]
enum FrameAction {
    /// Is the formula valid on the frame?
    Check {
        #[arg(long)]
        file: String,
        #[arg(long)]
        formula: String,
    },
    /// Cluster structure and circumference.
    Classify {
        #[arg(long)]
        file: String,
    },
    /// Parse and validate the frame file.
    Validate {
        #[arg(long)]
        file: String,
    },
}

#[derive(Subcommand)]
enum SpaceAction {
    Check {
        #[arg(long)]
        file: String,
        #[arg(long)]
        formula: String,
        #[arg(long, default_value = "d")]
        semantics: String,
    },
    Classify {
        #[arg(long)]
        file: String,
    },
    Validate {
        #[arg(long)]
        file: String,
    },
}

#[derive(Subcommand)]
enum SuiteAction {
    List,
    Run {
        /// A suite id, or `all`.
        id: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Frame,
    D,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum Final {
    Degenerate,
    Nondegenerate,
    Simple,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn out(text: impl std::fmt::Display) {
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.cmd {
        Cmd::Frame { action } => frame_cmd(action, cli.json),
        Cmd::Space { action } => space_cmd(action, cli.json),
        Cmd::Glue { file, assignment } => glue_cmd(file, assignment, cli.json),
        Cmd::Countermodel { formula, mode, max_size, transitive, reflexive, circumference, final_clusters } => {
            let mut constraints = FrameConstraints {
                transitive: *transitive,
                reflexive: *reflexive,
                ..Default::default()
            };
            if let Some(n) = circumference {
                constraints = constraints.circumference_at_most(*n);
            }
            if let Some(k) = final_clusters {
                constraints = constraints.final_clusters(match k {
                    Final::Degenerate => FinalClusters::AllDegenerate,
                    Final::Nondegenerate => FinalClusters::AllNondegenerate,
                    Final::Simple => FinalClusters::AllSimple,
                });
            }
            let spec = SearchSpec {
                formula: resolve_formula(formula)?,
                max_size: *max_size,
                constraints,
                mode: match mode {
                    Mode::Frame => SearchMode::Frame,
                    Mode::D => SearchMode::SpaceD,
                    Mode::C => SearchMode::SpaceC,
                },
            };
            let outcome = countermodel_search(&spec)?;
            if cli.json {
                out(serde_json::to_string_pretty(&outcome)?);
            } else {
                out(&outcome);
            }
            Ok(matches!(outcome, SearchOutcome::Found { .. }) as u8)
        }
        Cmd::Census { max_size } => {
            let rows = census(*max_size)?;
            if cli.json {
                out(serde_json::to_string_pretty(&rows)?);
            } else {
                write_csv(&rows, std::io::stdout().lock())?;
            }
            Ok(0)
        }
        Cmd::Suite { action } => suite_cmd(action, cli.json),
    }
}

fn load_frame(file: &str) -> Result<Frame> {
    read_json::<FrameJson>(file)?.to_frame()
}

fn load_space(file: &str) -> Result<TopSpace> {
    read_json::<SpaceJson>(file)?.to_space()
}

fn frame_cmd(action: &FrameAction, as_json: bool) -> Result<u8> {
    match action {
        FrameAction::Check { file, formula } => {
            let frame = load_frame(file)?;
            let f = resolve_formula(formula)?;
            let v = frame.validity(&f)?;
            let witness = v.countermodel().map(|c| WitnessJson::frame(&frame, c));
            report_validity(&f.to_string(), witness, as_json)
        }
        FrameAction::Classify { file } => {
            let frame = load_frame(file)?;
            let mut info = json!({
                "points": frame.len(),
                "transitive": frame.is_transitive(),
                "reflexive": frame.is_reflexive(),
                "irreflexive": frame.is_irreflexive(),
            });
            if frame.is_transitive() {
                let d = frame.clusters()?;
                let clusters: Vec<_> = (0..d.len())
                    .map(|c| {
                        json!({
                            "members": d.members(c).iter().collect::<Vec<_>>(),
                            "kind": format!("{:?}", d.kind(c)).to_lowercase(),
                            "final": d.is_final(c),
                        })
                    })
                    .collect();
                info["clusters"] = json!(clusters);
                info["circumference"] = json!(d.circumference());
            }
            print_info(&info, as_json)?;
            Ok(0)
        }
        FrameAction::Validate { file } => {
            let frame = load_frame(file)?;
            out(format!("ok: {} points, {} edges", frame.len(), frame.edge_count()));
            Ok(0)
        }
    }
}

fn space_cmd(action: &SpaceAction, as_json: bool) -> Result<u8> {
    match action {
        SpaceAction::Check { file, formula, semantics } => {
            let space = load_space(file)?;
            let sem = parse_semantics(semantics)?;
            let f = resolve_formula(formula)?;
            let v = space.validity(&f, sem)?;
            let witness = v.countermodel().map(|c| WitnessJson::space(&space, sem, c));
            report_validity(&format!("{f} ({sem}-semantics)"), witness, as_json)
        }
        SpaceAction::Classify { file } => {
            let space = load_space(file)?;
            let c = space.classify();
            let info = json!({
                "points": space.len(),
                "td": c.is_td,
                "t1": c.is_t1,
                "scattered": c.is_scattered,
                "crowded": c.is_crowded,
                "densely_discrete": c.is_densely_discrete,
                "door": c.is_door,
                "isolated_points": c.isolated_points.iter().collect::<Vec<_>>(),
                "openly_irresolvable": space.is_openly_irresolvable(),
                "hereditarily_irresolvable_2": space.is_hereditarily_irresolvable(2),
                "hereditarily_irresolvable_3": space.is_hereditarily_irresolvable(3),
            });
            print_info(&info, as_json)?;
            Ok(0)
        }
        SpaceAction::Validate { file } => {
            let space = load_space(file)?;
            out(format!("ok: {} points, {} open sets", space.len(), space.opens().len()));
            Ok(0)
        }
    }
}

fn report_validity(what: &str, witness: Option<WitnessJson>, as_json: bool) -> Result<u8> {
    match witness {
        None => {
            if as_json {
                out(json!({ "valid": true }));
            } else {
                out(format!("valid: {what}"));
            }
            Ok(0)
        }
        Some(w) => {
            if as_json {
                out(serde_json::to_string_pretty(&json!({ "valid": false, "witness": w }))?);
            } else {
                out(format!("refuted: {what}\n{}", serde_json::to_string(&w)?));
            }
            Ok(1)
        }
    }
}

fn print_info(info: &serde_json::Value, as_json: bool) -> Result<()> {
    if as_json {
        out(serde_json::to_string_pretty(info)?);
    } else if let Some(map) = info.as_object() {
        for (k, v) in map {
            out(format!("{k}: {v}"));
        }
    }
    Ok(())
}

fn glue_cmd(file: &str, assignment: &str, as_json: bool) -> Result<u8> {
    let frame = load_frame(file)?;
    let a = match assignment.strip_prefix("default:") {
        Some(k) => {
            let k: usize = k
                .parse()
                .map_err(|_| ToolError::Usage(format!("bad cell size in `{assignment}`")))?;
            default_assignment(&frame, k)?
        }
        None => read_json::<AssignmentJson>(assignment)?.to_assignment()?,
    };
    let g = glue(&frame, &a)?;
    let dm = g.d_morphism(&frame)?;
    let check = dm.check();
    let info = json!({
        "space": SpaceJson::from(&g.space),
        "map": g.map,
        "d_morphism": check.is_ok(),
    });
    if as_json {
        out(serde_json::to_string_pretty(&info)?);
    } else {
        out(format!("{} points", g.space.len()));
        out(format!("map: {:?}", g.map));
        out(format!("opens: {}", serde_json::to_string(&info["space"]["opens"])?));
        match &check {
            Ok(()) => out("d-morphism onto the frame"),
            Err(v) => out(format!("not a d-morphism: {v}")),
        }
    }
    Ok(check.is_err() as u8)
}

fn suite_cmd(action: &SuiteAction, as_json: bool) -> Result<u8> {
    match action {
        SuiteAction::List => {
            for s in SUITES {
                out(format!("{:<20} {} (size {}, max {})", s.id, s.description, s.default_size, s.max_size));
            }
            Ok(0)
        }
        SuiteAction::Run { id, max_size, seed } => {
            let reports = run_suite(id, *max_size, *seed)?;
            if as_json {
                out(serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    out(r);
                }
            }
            let failed = reports.iter().any(|r| matches!(r.verdict, Verdict::Fail { .. }));
            Ok(failed as u8)
        }
    }
}
