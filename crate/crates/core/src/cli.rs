//! Command-line surface. Every command returns its full output as a
//! string so runs are reproducible and testable without a process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::coloring::{
    colorings_closed, colorings_long, colorings_tangle_boundary_mono, Coloring, InvariantQuery,
};
use crate::diagram::{parse_diagram_any, Diagram, TangleDiagram};
use crate::error::{Error, Result};
use crate::longitude::formal_sum;
use crate::obstruction::{
    chirality_test, connected_sum_commutativity, long_form, nonclassical_by_basepoints,
    tangle_embedding_obstruction, Verdict,
};
use crate::quandle::{verify_axioms, FiniteQuandle};

#[derive(Debug, Parser)]
#[command(name = "knot-quandles", version, about = "Quandle coloring invariants of knot diagrams")]
pub struct Cli {
    /// Worker threads for coloring enumeration (output does not depend on it).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the quandle axioms exhaustively.
    VerifyQuandle {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        json: bool,
    },
    /// Count (and with --json, list) colorings with a fixed basepoint color.
    Colorings {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        basepoint: String,
        /// Required for tangles: all four boundary arcs get the basepoint color.
        #[arg(long)]
        boundary_mono: bool,
        #[arg(long)]
        json: bool,
    },
    /// The formal sum of colored longitudes applied to an element.
    Invariant {
        #[arg(long)]
        diagram: PathBuf,
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Compare the invariant of a knot with that of its mirror image.
    Chirality {
        #[arg(long)]
        diagram: PathBuf,
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Test whether a tangle is obstructed from embedding in a knot.
    TangleObstruction {
        #[arg(long)]
        tangle: PathBuf,
        #[arg(long)]
        knot: PathBuf,
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Compare the invariant across all breakings of a closed diagram.
    Nonclassical {
        #[arg(long)]
        diagram: PathBuf,
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Compare K1 # K2 with K2 # K1.
    ConnectedSum {
        /// Two long (or closed, broken at arc 1) diagrams.
        #[arg(long, num_args = 2, required = true)]
        diagram: Vec<PathBuf>,
        #[command(flatten)]
        query: QueryArgs,
    },
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    /// `conjclass:<group>:<elt>`, `conjgroup:<group>`, `dihedral:<n>`, `trivial:<n>` or `file:<path>`.
    #[arg(long)]
    pub quandle: String,
    /// Color of the initial arc.
    #[arg(long)]
    pub basepoint: String,
    /// Element the longitudes act on.
    #[arg(long)]
    pub act_on: String,
    #[arg(long)]
    pub json: bool,
}

impl QueryArgs {
    fn resolve(&self) -> Result<(FiniteQuandle, InvariantQuery)> {
        let q = FiniteQuandle::from_spec(&self.quandle)?;
        let query = InvariantQuery::parse(&q, &self.basepoint, &self.act_on)?;
        Ok((q, query))
    }
}

fn read_diagram(path: &Path) -> Result<Diagram> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidDiagram(format!("{}: {e}", path.display())))?;
    parse_diagram_any(&text)
}

fn read_tangle(path: &Path) -> Result<TangleDiagram> {
    match read_diagram(path)? {
        Diagram::Tangle(t) => Ok(t),
        other => Err(Error::InvalidDiagram(format!(
            "{}: expected a tangle, got a {} diagram",
            path.display(),
            other.kind()
        ))),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn verdict_output(v: &Verdict, q: &FiniteQuandle, as_json: bool) -> String {
    if as_json {
        pretty(&v.to_json(q))
    } else {
        v.render(q)
    }
}

pub fn run(cli: &Cli) -> Result<String> {
    match cli.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidQuandle(e.to_string()))?
            .install(|| run_command(&cli.command)),
        None => run_command(&cli.command),
    }
}

fn run_command(command: &Command) -> Result<String> {
    match command {
        Command::VerifyQuandle { quandle, json } => {
            let q = FiniteQuandle::from_spec(quandle)?;
            let report = verify_axioms(&q);
            let status = if report.holds() { "pass" } else { "fail" };
            if *json {
                return Ok(pretty(&json!({
                    "status": status,
                    "size": report.size,
                    "report": report,
                })));
            }
            let show = |v: Option<String>| v.unwrap_or_else(|| "ok".to_string());
            Ok([
                format!("{status}: {} elements", q.len()),
                format!("idempotence: {}", show(report.idempotence.map(|i| q.label(i).to_string()))),
                format!(
                    "right invertibility: {}",
                    show(report.right_invertibility.map(|(i, j)| format!("{}, {}", q.label(i), q.label(j))))
                ),
                format!(
                    "self-distributivity: {}",
                    show(report.distributivity.map(|(i, j, k)| {
                        format!("{}, {}, {}", q.label(i), q.label(j), q.label(k))
                    }))
                ),
            ]
            .join("\n"))
        }
        Command::Colorings {
            diagram,
            quandle,
            basepoint,
            boundary_mono,
            json,
        } => {
            let q = FiniteQuandle::from_spec(quandle)?;
            let base = q.element(basepoint)?;
            let colorings: Vec<Coloring> = match (read_diagram(diagram)?, boundary_mono) {
                (Diagram::Long(d), _) => colorings_long(&d, &q, base),
                (Diagram::Closed(c), _) => colorings_closed(&c, &q, base),
                (Diagram::Tangle(t), true) => colorings_tangle_boundary_mono(&t, &q, base),
                (Diagram::Tangle(_), false) => {
                    return Err(Error::InvalidDiagram(
                        "tangle colorings need --boundary-mono".into(),
                    ))
                }
            };
            if *json {
                let list: Vec<Value> = colorings.iter().map(|z| json!(z.labels(&q))).collect();
                Ok(pretty(&json!({ "count": colorings.len(), "colorings": list })))
            } else {
                Ok(format!("colorings: {}", colorings.len()))
            }
        }
        Command::Invariant { diagram, query } => {
            let (q, qu) = query.resolve()?;
            let d = long_form(&read_diagram(diagram)?)?;
            let sum = formal_sum(&d, &q, &qu);
            if query.json {
                Ok(pretty(&json!({
                    "colorings": sum.mass(),
                    "sum": sum.to_json(&q),
                    "query": { "basepoint": q.label(qu.basepoint), "act_on": q.label(qu.probe) },
                })))
            } else {
                Ok(sum.render(&q))
            }
        }
        Command::Chirality { diagram, query } => {
            let (q, qu) = query.resolve()?;
            let d = long_form(&read_diagram(diagram)?)?;
            Ok(verdict_output(&chirality_test(&d, &q, &qu), &q, query.json))
        }
        Command::TangleObstruction {
            tangle,
            knot,
            query,
        } => {
            let (q, qu) = query.resolve()?;
            let t = read_tangle(tangle)?;
            let k = long_form(&read_diagram(knot)?)?;
            Ok(verdict_output(&tangle_embedding_obstruction(&t, &k, &q, &qu), &q, query.json))
        }
        Command::Nonclassical { diagram, query } => {
            let (q, qu) = query.resolve()?;
            let c = match read_diagram(diagram)? {
                Diagram::Closed(c) => c,
                other => {
                    return Err(Error::InvalidDiagram(format!(
                        "expected a closed diagram, got a {} diagram",
                        other.kind()
                    )))
                }
            };
            Ok(verdict_output(&nonclassical_by_basepoints(&c, &q, &qu), &q, query.json))
        }
        Command::ConnectedSum { diagram, query } => {
            let (q, qu) = query.resolve()?;
            let k1 = long_form(&read_diagram(&diagram[0])?)?;
            let k2 = long_form(&read_diagram(&diagram[1])?)?;
            Ok(verdict_output(&connected_sum_commutativity(&k1, &k2, &q, &qu), &q, query.json))
        }
    }
}
