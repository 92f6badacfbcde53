//! The `hypca` command. Artifacts go to standard output when no `-o` is
//! given; every diagnostic goes to standard error.
//!
//! Exit codes: 0 success, 1 domain failure (rule conflict, trace mismatch,
//! missing rule, non-embeddable scenario), 2 usage or I/O error.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hypca_circuits::{catalog_scenario, parse_scenario, CircuitError, Scenario};
use hypca_engine::{embed_region, trace_diff, EngineError, Trace};
use hypca_genrules::{emit_rules, generate, generate_table, shipped_p13, Family, GenError};
use hypca_render::{layout_ball, render_svg, RenderOptions, Style};
use hypca_rulecore::{parse_rules, RuleError, RuleTable};
use hypca_tiling::{build_ball, neighbors, CellCoord, Neighbor};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "hypca", version, about = "Two-state automaton on the hyperbolic tilings {p,3}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    All,
    Tracks,
    Crossing,
    Fixed,
    Flipflop,
    Memory,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a rule file for syntax errors and rotation conflicts.
    Validate { rules: PathBuf },
    /// Write the generated rule table for p >= 17.
    Generate {
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value = "all")]
        family: FamilyArg,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Run a catalog scenario or a scenario file and write its trace.
    Run {
        #[arg(long)]
        scenario: String,
        #[arg(long, env = "HYPCA_RULES")]
        rules: Option<PathBuf>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Compare two trace files.
    TraceDiff { a: PathBuf, b: PathBuf },
    /// List the neighbours of a cell, father first, counterclockwise.
    Neighbors {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        cell: String,
    },
    /// Draw a ball, optionally with a scenario's idle configuration.
    Render {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        scenario: Option<String>,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }
}

impl From<RuleError> for Failure {
    fn from(e: RuleError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::UnknownCell(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<GenError> for Failure {
    fn from(e: GenError) -> Self {
        match e {
            GenError::UnsupportedP(_) | GenError::WrongP { .. } => Failure::Usage(e.to_string()),
            GenError::Rule(r) => r.into(),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<CircuitError> for Failure {
    fn from(e: CircuitError) -> Self {
        match e {
            CircuitError::Engine(e) => e.into(),
            CircuitError::Gen(e) => e.into(),
            CircuitError::UnsupportedP(_) | CircuitError::UnknownScenario(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
        }
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("cannot write output: {e}"))),
    }
}

fn read_trace(path: &Path) -> Result<Trace, Failure> {
    Trace::from_csv(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Built-in catalog names first, then scenario files.
fn load_scenario(spec: &str) -> Result<Scenario, Failure> {
    match catalog_scenario(spec, 13) {
        Ok(s) => return Ok(s),
        Err(CircuitError::UnknownScenario(_)) => {}
        Err(e) => return Err(e.into()),
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Failure::Usage(format!("{spec:?} is neither a catalog scenario nor a file")));
    }
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
    Ok(parse_scenario(name, &read(path)?)?)
}

fn builtin_rules(p: usize) -> Result<RuleTable, Failure> {
    if p == 13 {
        Ok(shipped_p13())
    } else {
        Ok(generate_table(p, &Family::ALL)?)
    }
}

fn families(f: FamilyArg) -> Vec<Family> {
    match f {
        FamilyArg::All => Family::ALL.to_vec(),
        FamilyArg::Tracks => vec![Family::Tracks],
        FamilyArg::Crossing => vec![Family::Crossing],
        FamilyArg::Fixed => vec![Family::Fixed],
        FamilyArg::Flipflop => vec![Family::FlipFlop],
        FamilyArg::Memory => vec![Family::Memory],
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Validate { rules } => {
            let table = parse_rules(&read(&rules)?)?;
            let _ = writeln!(err, "{}: p={}, {} rules, no conflicts", rules.display(), table.p(), table.len());
        }
        Command::Generate { p, family, output } => {
            let rules = generate(p, &families(family))?;
            emit(output.as_deref(), &emit_rules(p, &rules), out)?;
        }
        Command::Run { scenario, rules, steps, trace, expect } => {
            let mut s = load_scenario(&scenario)?;
            if let Some(n) = steps {
                s.steps = n;
            }
            let table = match rules {
                Some(path) => parse_rules(&read(&path)?)?,
                None => builtin_rules(s.p())?,
            };
            if table.p() != s.p() {
                return Err(Failure::Usage(format!(
                    "rules are for p={}, scenario {} for p={}",
                    table.p(),
                    s.name,
                    s.p()
                )));
            }
            let actual = s.run(&table)?;
            emit(trace.as_deref(), &actual.to_csv(), out)?;
            if let Some(path) = expect {
                let expected = read_trace(&path)?;
                let diff = trace_diff(&actual, &expected)?;
                if !diff.is_empty() {
                    for d in &diff {
                        let _ = writeln!(err, "{d}");
                    }
                    return Err(Failure::Domain(format!(
                        "{} differs from {} in {} places",
                        s.name,
                        path.display(),
                        diff.len()
                    )));
                }
            }
        }
        Command::TraceDiff { a, b } => {
            let diff = trace_diff(&read_trace(&a)?, &read_trace(&b)?).map_err(|e| Failure::Domain(e.to_string()))?;
            for d in &diff {
                let _ = writeln!(out, "{d}");
            }
            if !diff.is_empty() {
                return Err(Failure::Domain(format!("{} differences", diff.len())));
            }
        }
        Command::Neighbors { p, cell } => {
            let c = CellCoord::parse(&cell, p).map_err(|e| Failure::Usage(e.to_string()))?;
            let list = neighbors(&c, p, c.ring() + 1).map_err(|e| Failure::Usage(e.to_string()))?;
            let labels: Vec<String> = list
                .iter()
                .map(|n| match n {
                    Neighbor::Cell(c) => c.label(p),
                    Neighbor::Boundary => "-".to_string(),
                })
                .collect();
            let _ = writeln!(out, "{}", labels.join(" "));
        }
        Command::Render { p, radius, scenario, output } => {
            let ball = build_ball(p, radius).map_err(|e| Failure::Usage(e.to_string()))?;
            let layout = layout_ball(&ball, Style::Circles).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut states = BTreeMap::new();
            let mut options =
                RenderOptions { title: Some(format!("{{{p},3}}, radius {radius}")), ..Default::default() };
            if let Some(spec) = scenario {
                let s = load_scenario(&spec)?;
                let s = if s.p() == p { s } else { s.lift(p)? };
                let embedding = embed_region(&s.template.region()?, &ball)?;
                for (coord, state) in &embedding.config {
                    if let Some(id) = ball.id_of(coord) {
                        states.insert(id, *state);
                    }
                }
                let watched: BTreeSet<&String> = s.watch.iter().collect();
                options.highlight = embedding
                    .names
                    .iter()
                    .filter(|(n, _)| watched.contains(n))
                    .filter_map(|(_, c)| ball.id_of(c))
                    .collect();
                options.title = Some(format!("{} on {{{p},3}}", s.name));
            }
            emit(output.as_deref(), &render_svg(&layout, &states, &options), out)?;
        }
    }
    Ok(())
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.code()
        }
    }
}
