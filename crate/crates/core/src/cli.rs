//! Command-line front end.
//!
//! Output is assembled in memory and written once, so a failing run never
//! leaves a partial file behind. Errors print a single `pmtopo: error: …`
//! line on stderr and exit with status 1 (2 for usage errors).

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::complex::{perfect_matching_complex, Complex, DEFAULT_FACE_CAP};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::graph::GraphView;
use crate::hexgraph::HexGraph;
use crate::homology::{boundary_matrices, compute_homology, Strategy};
use crate::morse::{morse_summary, sequential_pairing};
use crate::partitions::matchings_with_partitions;
use crate::verify::{self, TheoremReport};

#[derive(Debug, Parser)]
#[command(name = "pmtopo", version, about = "Perfect matching complexes of honeycomb graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Maximum number of faces a complex may have.
    #[arg(long = "seed-cap", global = true, env = "PMTOPO_FACE_CAP")]
    pub seed_cap: Option<usize>,
    /// Report timings on stderr.
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Dims {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Line,
    #[value(name = "1x2xn")]
    OneTwoN,
    #[value(name = "1xmxn")]
    OneMN,
    #[value(name = "2x2x2")]
    TwoTwoTwo,
    Baselines,
    Lemmas,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the honeycomb graph H_{k×m×n}.
    Graph(Dims),
    /// List perfect matchings with their plane partitions.
    Matchings(Dims),
    /// Run a sequence of element pairings on the perfect matching complex.
    Morse {
        #[command(flatten)]
        dims: Dims,
        /// Comma-separated edge labels, e.g. `x,y` or `alpha,beta,c_1_0`.
        #[arg(long, value_delimiter = ',', required = true)]
        sequence: Vec<String>,
    },
    /// Reduced integer homology of the perfect matching complex.
    Homology {
        #[command(flatten)]
        dims: Dims,
        /// Print the boundary matrix of this dimension as triplets instead.
        #[arg(long)]
        boundary: Option<usize>,
        /// Also compare every rank against a prime-field rank.
        #[arg(long)]
        prime_check: bool,
    },
    /// Run a theorem check and print its report.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Rendered output and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

fn cap(cli: &Cli) -> usize {
    cli.seed_cap.unwrap_or(DEFAULT_FACE_CAP)
}

fn graph(d: Dims) -> Result<HexGraph> {
    let conv = |v: u64| usize::try_from(v).map_err(|_| Error::InvalidDimensions(format!("{v} too large")));
    HexGraph::new(conv(d.k)?, conv(d.m)?, conv(d.n)?)
}

fn unsupported(cmd: &str, f: Format) -> Error {
    Error::OutOfRange(format!("format {} not supported by {cmd}", format!("{f:?}").to_lowercase()))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serialises");
    s.push('\n');
    s
}

fn labels(g: &HexGraph, f: Face) -> Vec<String> {
    f.iter().map(|e| g.label_name(e)).collect()
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let started = Instant::now();
    let out = match &cli.command {
        Command::Graph(d) => cmd_graph(cli, *d)?,
        Command::Matchings(d) => cmd_matchings(cli, *d)?,
        Command::Morse { dims, sequence } => cmd_morse(cli, *dims, sequence)?,
        Command::Homology { dims, boundary, prime_check } => cmd_homology(cli, *dims, *boundary, *prime_check)?,
        Command::Verify { theorem, m, n } => cmd_verify(cli, *theorem, *m, *n)?,
    };
    if cli.verbose {
        eprintln!("pmtopo: finished in {:.3}s", started.elapsed().as_secs_f64());
    }
    Ok(out)
}

fn cmd_graph(cli: &Cli, d: Dims) -> Result<Outcome> {
    let g = graph(d)?;
    let text = match cli.format {
        Format::Json => pretty(&g.to_json()),
        Format::Dot => g.to_dot(),
        Format::Csv => {
            let mut s = String::from("edge,label,u,v\n");
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let _ = writeln!(s, "{e},{},{u},{v}", g.label_name(e));
            }
            s
        }
        Format::Text => {
            let mut s = format!("{}: {} vertices, {} edges\n", g.name(), g.vertex_count(), g.edge_count());
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let _ = writeln!(s, "{e} {} {u}-{v}", g.label_name(e));
            }
            s
        }
    };
    Ok(Outcome { text, success: true })
}

fn cmd_matchings(cli: &Cli, d: Dims) -> Result<Outcome> {
    let g = graph(d)?;
    let all = matchings_with_partitions(&g)?;
    let text = match cli.format {
        Format::Json => {
            let entries: Vec<_> = all
                .iter()
                .map(|(p, mt)| {
                    let edges = mt.edges();
                    let names: Vec<String> = edges.iter().map(|&e| g.label_name(e)).collect();
                    json!({ "partition": p.entries(), "edges": edges, "labels": names })
                })
                .collect();
            pretty(&json!({ "graph": g.name(), "count": all.len(), "matchings": entries }))
        }
        Format::Csv => format!("k,m,n,count\n{},{},{},{}\n", d.k, d.m, d.n, all.len()),
        Format::Text => {
            let mut s = format!("{}: {} perfect matchings\n", g.name(), all.len());
            for (p, mt) in &all {
                let names: Vec<String> = mt.edges().iter().map(|&e| g.label_name(e)).collect();
                let _ = writeln!(s, "{}  {}", p.compact(), names.join(" "));
            }
            s
        }
        f => return Err(unsupported("matchings", f)),
    };
    Ok(Outcome { text, success: true })
}

fn cmd_morse(cli: &Cli, d: Dims, sequence: &[String]) -> Result<Outcome> {
    let g = graph(d)?;
    let mut seen = BTreeSet::new();
    let mut xs = Vec::with_capacity(sequence.len());
    for label in sequence {
        let e = g.parse_label(label.trim())?;
        if !seen.insert(e) {
            return Err(Error::DuplicatePairingVertex(label.trim().to_string()));
        }
        xs.push(e);
    }
    let c = perfect_matching_complex(&g, cap(cli))?;
    let c = c.simplicial()?;
    let p = sequential_pairing(c, &xs)?;
    let summary = if p.acyclic { Some(morse_summary(&p)?) } else { None };
    let text = match cli.format {
        Format::Json => {
            let critical: Vec<_> = p.critical.iter().map(|&f| json!({ "dim": f.dim(), "face": labels(&g, f) })).collect();
            pretty(&json!({
                "sequence": xs.iter().map(|&e| g.label_name(e)).collect::<Vec<_>>(),
                "pairs": p.pair_count(),
                "critical": critical,
                "acyclic": p.acyclic,
                "summary": summary.as_ref().map(|s| s.description.clone()),
            }))
        }
        Format::Text => {
            let mut s = format!("{} pairs, {} critical, acyclic {}\n", p.pair_count(), p.critical.len(), p.acyclic);
            for &f in &p.critical {
                let _ = writeln!(s, "dim {}: {{{}}}", f.dim(), labels(&g, f).join(", "));
            }
            if let Some(sm) = &summary {
                let _ = writeln!(s, "{sm}");
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("dim,face\n");
            for &f in &p.critical {
                let _ = writeln!(s, "{},{}", f.dim(), labels(&g, f).join(" "));
            }
            s
        }
        f => return Err(unsupported("morse", f)),
    };
    Ok(Outcome { text, success: p.acyclic })
}

fn cmd_homology(cli: &Cli, d: Dims, boundary: Option<usize>, prime_check: bool) -> Result<Outcome> {
    let g = graph(d)?;
    let c = perfect_matching_complex(&g, cap(cli))?;
    if let Some(dim) = boundary {
        let data = boundary_matrices(c.simplicial()?);
        let m = data
            .boundaries
            .get(dim + 1)
            .ok_or_else(|| Error::OutOfRange(format!("no boundary map in dimension {dim}")))?;
        return Ok(Outcome { text: m.to_triplets(), success: true });
    }
    let (profile, checked) = match &c {
        Complex::Void => (crate::homology::reduced_homology(&c)?, true),
        Complex::Simplicial(s) => {
            let h = compute_homology(s, Strategy::Reduce, prime_check)?;
            (h.profile, h.prime_check)
        }
    };
    let text = match cli.format {
        Format::Json => {
            let mut s = profile.to_json_string();
            s.push('\n');
            s
        }
        Format::Text => format!("{profile}\n"),
        Format::Csv => {
            let mut s = String::from("dim,betti_reduced\n");
            for (dim, b) in &profile.betti {
                let _ = writeln!(s, "{dim},{b}");
            }
            s
        }
        f => return Err(unsupported("homology", f)),
    };
    if !checked {
        return Err(Error::Internal("prime-field rank check disagrees with the integer ranks".into()));
    }
    Ok(Outcome { text, success: true })
}

fn cmd_verify(cli: &Cli, theorem: Theorem, m: Option<usize>, n: Option<usize>) -> Result<Outcome> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Error::OutOfRange(format!("--{name} is required for this theorem")));
    let reports: Vec<TheoremReport> = match theorem {
        Theorem::Line => vec![verify::verify_line(need(n, "n")?)?],
        Theorem::OneTwoN => vec![verify::verify_1x2xn(need(n, "n")?)?],
        Theorem::OneMN => vec![verify::verify_1xmxn_with_cap(m.unwrap_or(3), n.unwrap_or(3), cap(cli))?],
        Theorem::TwoTwoTwo => vec![verify::verify_2x2x2()?],
        Theorem::Baselines => vec![verify::verify_baselines()?],
        Theorem::Lemmas => vec![verify::verify_lemmas()?],
        Theorem::All => {
            let mut v = vec![verify::verify_lemmas()?, verify::verify_baselines()?];
            for n in 2..=6 {
                v.push(verify::verify_line(n)?);
            }
            for n in 2..=5 {
                v.push(verify::verify_1x2xn(n)?);
            }
            v.push(verify::verify_1xmxn_with_cap(3, 3, cap(cli))?);
            v.push(verify::verify_2x2x2()?);
            v
        }
    };
    if cli.verbose {
        for r in &reports {
            for (label, secs) in &r.timings {
                eprintln!("pmtopo: {} {label} {secs:.3}s", r.theorem);
            }
        }
    }
    let success = reports.iter().all(TheoremReport::passed);
    let text = match cli.format {
        Format::Json => {
            let mut s = if reports.len() == 1 {
                reports[0].to_json_string()
            } else {
                serde_json::to_string_pretty(&reports).expect("reports serialise")
            };
            s.push('\n');
            s
        }
        Format::Text => reports.iter().map(ToString::to_string).collect(),
        f => return Err(unsupported("verify", f)),
    };
    Ok(Outcome { text, success })
}

/// Parses arguments, runs the command and writes its output. Returns the
/// process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("pmtopo: usage: {}", first.trim_start_matches("error: "));
            return 2;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    use std::io::Write;
                    let mut so = std::io::stdout().lock();
                    so.write_all(out.text.as_bytes()).and_then(|_| so.flush()).map_err(|e| format!("cannot write output: {e}"))
                }
            };
            if let Err(msg) = written {
                eprintln!("pmtopo: error: {msg}");
                return 1;
            }
            if out.success {
                0
            } else {
                eprintln!("pmtopo: error: check failed");
                1
            }
        }
        Err(e) => {
            eprintln!("pmtopo: error: {e}");
            1
        }
    }
}
