use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use embhom::formats::{barcode_csv, parse_distance_csv, parse_point_cloud, parse_values};
use embhom::mayer_vietoris::ExactnessReport;
use embhom::persistence::filtration_diagrams;
use embhom::rational::{parse_rational, to_decimal_string, to_fraction_string};
use embhom::{
    connectivity_index, correlation_index, differentiation_index, embedded_homology, is_acyclic, metric_filtration,
    mv_condition, parse_hypergraph, report, sup_homology, verify_long_exact, CoefficientRing, DistanceMatrix, Hypergraph,
    IndexReport, SamplingOptions,
};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "embhom", version, about = "Exact embedded homology of hypergraphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Coeff {
    Z,
    Q,
    Zp,
}

#[derive(Args)]
struct Coefficients {
    /// Coefficient ring (default z, or q where a field is required).
    #[arg(long, value_enum)]
    coeff: Option<Coeff>,
    /// The prime for `--coeff zp`.
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Args)]
struct Sampling {
    /// Number of random reassignments when enumeration is too large.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Seed for the sampling generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the associated simplicial complex as a .hg document.
    Closure {
        /// Hypergraph in .hg format, or - for stdin.
        input: PathBuf,
    },
    /// Embedded homology (of the infimum chain complex).
    Homology {
        /// Hypergraph in .hg format, or - for stdin.
        input: PathBuf,
        #[command(flatten)]
        coeff: Coefficients,
    },
    /// Homology of the supremum chain complex.
    Suphomology {
        /// Hypergraph in .hg format, or - for stdin.
        input: PathBuf,
        #[command(flatten)]
        coeff: Coefficients,
    },
    /// Decide acyclicity by vertex and hyperedge deletion.
    Acyclic {
        /// Hypergraph in .hg format, or - for stdin.
        input: PathBuf,
        /// Include the reduction steps.
        #[arg(long)]
        trace: bool,
    },
    /// Verify the Mayer-Vietoris long exact sequence of two hypergraphs.
    Mv {
        /// First hypergraph (.hg), or - for stdin.
        first: PathBuf,
        /// Second hypergraph (.hg), or - for stdin.
        second: PathBuf,
        #[command(flatten)]
        coeff: Coefficients,
    },
    /// Barcodes of the metric filtration.
    Persist {
        /// Hypergraph in .hg format, or - for stdin.
        input: PathBuf,
        /// Point cloud: lines `token x1 … xd`.
        #[arg(long, conflicts_with = "distmat", required_unless_present = "distmat")]
        points: Option<PathBuf>,
        /// Distance matrix CSV with tokens in the header row and column.
        #[arg(long)]
        distmat: Option<PathBuf>,
        /// Comma-separated increasing radii.
        #[arg(long, value_delimiter = ',', conflicts_with = "auto_radii", required_unless_present = "auto_radii")]
        radii: Vec<String>,
        /// Use every critical distance plus ε.
        #[arg(long)]
        auto_radii: bool,
        /// ε for `--auto-radii` (default: a thousandth of the smallest gap).
        #[arg(long)]
        epsilon: Option<String>,
        #[command(flatten)]
        coeff: Coefficients,
    },
    /// Connectivity index.
    Conn {
        /// Hypergraph in .hg format, or - for stdin.
        input: PathBuf,
    },
    /// Differentiation index of a vertex function.
    Diff {
        /// Hypergraph in .hg format, or - for stdin.
        input: PathBuf,
        /// Vertex values in [0, 1]: lines `token value`.
        #[arg(long)]
        vals: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Correlation index of two vertex functions.
    Corr {
        /// Hypergraph in .hg format, or - for stdin.
        input: PathBuf,
        /// Vertex values in [0, 1]: lines `token value`.
        #[arg(long)]
        vals: PathBuf,
        /// Second vertex function, same format as --vals.
        #[arg(long)]
        vals2: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Dimension and hyperedge counts per degree.
    Info {
        /// Hypergraph in .hg format, or - for stdin.
        input: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<embhom::Error> for Failure {
    fn from(e: embhom::Error) -> Self {
        Failure {
            code: if e.is_internal() { 1 } else { 2 },
            message: e.to_string(),
        }
    }
}

fn user_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Reads files, allowing `-` (stdin) once per invocation.
#[derive(Default)]
struct Inputs {
    stdin_used: bool,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        if path == Path::new("-") {
            if std::mem::replace(&mut self.stdin_used, true) {
                return Err(user_error("stdin (`-`) can be used for only one input"));
            }
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| user_error(format!("stdin: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(path).map_err(|e| user_error(format!("{}: {e}", path.display())))
    }

    fn hypergraph(&mut self, path: &Path) -> Result<Hypergraph, Failure> {
        let text = self.read(path)?;
        parse_hypergraph(&text).map_err(|e| user_error(format!("{}: {e}", path.display())))
    }
}

fn ring(c: &Coefficients, default: Coeff) -> Result<CoefficientRing, Failure> {
    match (c.coeff.unwrap_or(default), c.p) {
        (Coeff::Z, None) => Ok(CoefficientRing::Integers),
        (Coeff::Q, None) => Ok(CoefficientRing::Rationals),
        (Coeff::Zp, Some(p)) => Ok(CoefficientRing::prime(p)?),
        (Coeff::Zp, None) => Err(user_error("--coeff zp needs --p")),
        (_, Some(_)) => Err(user_error("--p is only valid with --coeff zp")),
    }
}

fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Text => "text",
    };
    user_error(format!("`{command}` has no {name} output"))
}

fn homology_output(ring: CoefficientRing, groups: &[embhom::HomologyGroup], format: Format) -> String {
    match format {
        Format::Json => json(&report::homology(ring, groups)),
        Format::Text => groups.iter().map(|g| format!("H_{} = {g}\n", g.degree)).collect(),
        Format::Csv => {
            let mut s = String::from("degree,rank,torsion\n");
            for g in groups {
                let torsion: Vec<String> = g.torsion.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "{},{},{}", g.degree, g.free_rank, torsion.join(" "));
            }
            s
        }
    }
}

fn exactness_text(r: &ExactnessReport) -> String {
    let mut s = String::new();
    for p in &r.positions {
        let _ = writeln!(
            s,
            "degree {} {:?}: dim {} ker {} im {} {}",
            p.degree,
            p.spot,
            p.dimension,
            p.ker_rank,
            p.im_rank,
            if p.exact { "exact" } else { "NOT exact" }
        );
    }
    let _ = writeln!(s, "{}", if r.all_exact() { "exact" } else { "not exact" });
    s
}

fn index_output(r: &IndexReport, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(json(&report::index(r))),
        Format::Text => Ok(format!(
            "{:?} = {} ({})\n",
            r.kind,
            to_fraction_string(&r.value),
            to_decimal_string(&r.value)
        )),
        Format::Csv => {
            let mut s = String::from("term,exact,decimal\n");
            for (i, t) in r.terms.iter().enumerate() {
                let _ = writeln!(s, "{i},{},{}", to_fraction_string(t), to_decimal_string(t));
            }
            if let Some(t) = &r.tail {
                let _ = writeln!(s, "tail,{},{}", to_fraction_string(t), to_decimal_string(t));
            }
            Ok(s)
        }
    }
}

fn parse_radii(raw: &[String]) -> Result<Vec<embhom::BigRational>, Failure> {
    raw.iter()
        .map(|s| parse_rational(s).ok_or_else(|| user_error(format!("radius `{s}` is not a number"))))
        .collect()
}

fn run(cli: Cli) -> Result<String, Failure> {
    let mut inputs = Inputs::default();
    let format = cli.format;
    match cli.command {
        Command::Closure { input } => {
            let h = inputs.hypergraph(&input)?;
            let k = h.associated_complex().into_hypergraph();
            match format {
                Format::Text => Ok(k.to_hg_string()),
                Format::Json => {
                    let edges: Vec<Vec<&str>> = k.edges().map(|e| e.vertices().iter().map(|v| v.token()).collect()).collect();
                    Ok(json(&serde_json::json!({ "edges": edges })))
                }
                Format::Csv => Err(unsupported(format, "closure")),
            }
        }
        Command::Homology { input, coeff } => {
            let ring = ring(&coeff, Coeff::Z)?;
            let h = inputs.hypergraph(&input)?;
            Ok(homology_output(ring, &embedded_homology(&h, ring), format))
        }
        Command::Suphomology { input, coeff } => {
            let ring = ring(&coeff, Coeff::Z)?;
            let h = inputs.hypergraph(&input)?;
            Ok(homology_output(ring, &sup_homology(&h, ring), format))
        }
        Command::Acyclic { input, trace } => {
            let h = inputs.hypergraph(&input)?;
            let (acyclic, steps) = is_acyclic(&h);
            let verdict = if acyclic { "acyclic" } else { "not acyclic" };
            match format {
                Format::Json => {
                    let mut v = serde_json::json!({ "acyclic": acyclic, "verdict": verdict });
                    if trace {
                        v["trace"] = report::trace(&steps);
                    }
                    Ok(json(&v))
                }
                Format::Text => {
                    let mut s = format!("{verdict}\n");
                    if trace {
                        for st in &steps.steps {
                            let _ = writeln!(s, "{} {:?} from {:?}", st.op, st.removed, st.from_edge);
                        }
                    }
                    Ok(s)
                }
                Format::Csv => Err(unsupported(format, "acyclic")),
            }
        }
        Command::Mv { first, second, coeff } => {
            let field = ring(&coeff, Coeff::Q)?.field()?;
            let h = inputs.hypergraph(&first)?;
            let g = inputs.hypergraph(&second)?;
            if !mv_condition(&h, &g) {
                return Err(user_error("hypothesis violated: some σ ∈ h, τ ∈ g have σ ∩ τ outside h ∩ g"));
            }
            let r = verify_long_exact(&h, &g, field)?;
            let out = match format {
                Format::Json => json(&report::exactness(&r)),
                Format::Text => exactness_text(&r),
                Format::Csv => return Err(unsupported(format, "mv")),
            };
            if r.all_exact() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure {
                    code: 1,
                    message: "sequence is not exact".into(),
                })
            }
        }
        Command::Persist {
            input,
            points,
            distmat,
            radii,
            auto_radii,
            epsilon,
            coeff,
        } => {
            let field = ring(&coeff, Coeff::Q)?.field()?;
            let h = inputs.hypergraph(&input)?;
            let dist: DistanceMatrix = match (points, distmat) {
                (Some(p), _) => parse_point_cloud(&inputs.read(&p)?)?,
                (_, Some(d)) => parse_distance_csv(&inputs.read(&d)?)?,
                (None, None) => return Err(user_error("one of --points or --distmat is required")),
            };
            let radii = if auto_radii {
                let eps = epsilon
                    .map(|e| parse_rational(&e).ok_or_else(|| user_error(format!("ε `{e}` is not a number"))))
                    .transpose()?;
                dist.critical_radii(eps)
            } else {
                parse_radii(&radii)?
            };
            let f = metric_filtration(&h, &dist, &radii)?;
            let diagrams = filtration_diagrams(&f, field)?;
            match format {
                Format::Json => Ok(json(&report::diagrams(&diagrams))),
                Format::Csv => Ok(barcode_csv(&diagrams)),
                Format::Text => {
                    let mut s = String::new();
                    for d in &diagrams {
                        for iv in &d.intervals {
                            let death = iv.death.as_ref().map_or_else(|| "inf".into(), to_fraction_string);
                            let _ = writeln!(
                                s,
                                "H_{} [{}, {}) x{}",
                                d.degree,
                                to_fraction_string(&iv.birth),
                                death,
                                iv.multiplicity
                            );
                        }
                    }
                    Ok(s)
                }
            }
        }
        Command::Conn { input } => {
            let h = inputs.hypergraph(&input)?;
            index_output(&connectivity_index(&h)?, format)
        }
        Command::Diff { input, vals, sampling } => {
            let h = inputs.hypergraph(&input)?;
            let phi = parse_values(&inputs.read(&vals)?)?;
            let opts = SamplingOptions {
                samples: sampling.samples,
                seed: sampling.seed,
                ..SamplingOptions::default()
            };
            index_output(&differentiation_index(&h, &phi, opts)?, format)
        }
        Command::Corr {
            input,
            vals,
            vals2,
            sampling,
        } => {
            let h = inputs.hypergraph(&input)?;
            let phi = parse_values(&inputs.read(&vals)?)?;
            let psi = parse_values(&inputs.read(&vals2)?)?;
            let opts = SamplingOptions {
                samples: sampling.samples,
                seed: sampling.seed,
                ..SamplingOptions::default()
            };
            index_output(&correlation_index(&h, &phi, &psi, opts)?, format)
        }
        Command::Info { input } => {
            let h = inputs.hypergraph(&input)?;
            match format {
                Format::Json => Ok(json(&report::info(&h))),
                Format::Text => {
                    let dim = h.dimension().map_or_else(|| "-1".to_string(), |d| d.to_string());
                    let mut s = format!("vertices {}\nedges {}\ndimension {dim}\n", h.universe().len(), h.edge_count());
                    for (n, c) in h.edge_counts().iter().enumerate() {
                        let _ = writeln!(s, "{n}-hyperedges {c}");
                    }
                    Ok(s)
                }
                Format::Csv => {
                    let mut s = String::from("degree,count\n");
                    for (n, c) in h.edge_counts().iter().enumerate() {
                        let _ = writeln!(s, "{n},{c}");
                    }
                    Ok(s)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
