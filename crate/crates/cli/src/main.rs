//! `oddcol`: generate torus triangulations, colour and verify them, compute
//! odd chromatic numbers and run the discharging audit.
//!
//! Exit codes: 0 success, 1 verification or construction failure, 2 bad
//! input or parameters, 3 IO failure, 4 search budget exhausted.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use oddcolour::construct::{construct, Case, Construction};
use oddcolour::discharge::{charge_text, discharge, Site};
use oddcolour::io::{parse_colouring, parse_graph, write_colouring, write_graph};
use oddcolour::solver::{chi_odd, find_odd_colouring, SolverConfig};
use oddcolour::verify::{self, Violation};
use oddcolour::{
    generate, is_simple, ConstructError, DischargeError, EmbeddedGraph, EmbeddingError, SolverError, TorusParams,
};

#[derive(Parser)]
#[command(name = "oddcol", version, about = "Odd colourings of torus triangulations and other embedded graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Torus {
    /// Number of columns.
    #[arg(long)]
    m: usize,
    /// Number of rows.
    #[arg(long)]
    n: usize,
    /// Shift applied when the last column wraps to the first.
    #[arg(long)]
    t: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graph file of T(m,n,t).
    Gen {
        #[command(flatten)]
        torus: Torus,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify a nice colouring of T(m,n,t).
    Colour {
        #[command(flatten)]
        torus: Torus,
        /// Colouring file path; printed after the report when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a colouring against a graph.
    Verify {
        graph: PathBuf,
        colouring: PathBuf,
        /// Also require a colour seen exactly once around every vertex.
        #[arg(long)]
        conflict_free: bool,
    },
    /// Compute the odd chromatic number by exact search.
    ChiOdd {
        graph: PathBuf,
        #[arg(long, default_value_t = 9)]
        max_k: usize,
        /// Maximum number of colour assignments per bound.
        #[arg(long)]
        budget: Option<u64>,
        /// Try bounds one at a time (`--deterministic false` runs them in parallel).
        #[arg(long, default_value_t = true, num_args = 0..=1, default_missing_value = "true", action = clap::ArgAction::Set)]
        deterministic: bool,
        /// Write an optimal colouring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the discharging rules and audit the result.
    Discharge {
        graph: PathBuf,
        /// List every individual transfer.
        #[arg(long)]
        transfers: bool,
    },
    /// Print counts, degrees and the Euler characteristic of a graph.
    Info { graph: PathBuf },
    /// Construct and verify every simple T(m,n,t) in a box.
    Sweep {
        #[arg(long, default_value_t = 10)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

enum Failure {
    Check(String),
    Input(String),
    Io(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Io(_) => 3,
            Failure::Budget(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Input(m) | Failure::Io(m) | Failure::Budget(m) => m,
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<EmbeddedGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn torus(t: &Torus) -> Result<TorusParams, Failure> {
    TorusParams::new(t.m, t.n, t.t).map_err(|e| Failure::Input(e.to_string()))
}

fn cmd_gen(t: &Torus, out: Option<&Path>) -> Outcome {
    let g = generate(&torus(t)?).map_err(|e| Failure::Input(e.to_string()))?;
    emit(out, &write_graph(&g))
}

/// The colouring drawn as a grid, top row first, columns left to right.
fn grid(p: &TorusParams, c: &oddcolour::Colouring) -> String {
    let mut s = String::new();
    for j in (1..=p.n).rev() {
        let _ = write!(s, "#  j={j:<3}|");
        for i in 1..=p.m {
            let _ = write!(s, " {}", c.colour(p.index(i, j)));
        }
        s.push('\n');
    }
    s
}

fn describe(case: &Case) -> String {
    match case {
        Case::Grid { m_mod, n_mod } => format!("m >= 3, m = {m_mod} and n = {n_mod} (mod 3)"),
        Case::TwoColumns => "m = 2".into(),
        Case::OneColumn { canonical_t, partition } => {
            format!("m = 1, shift {canonical_t}, {} intervals, classes {:?}", partition.r, partition.classes)
        }
    }
}

fn cmd_colour(t: &Torus, out: Option<&Path>) -> Outcome {
    let p = torus(t)?;
    let Construction { case, colouring, recoloured, .. } = construct(&p).map_err(|e| match e {
        ConstructError::Torus(e) => Failure::Input(e.to_string()),
        e => Failure::Check(e.to_string()),
    })?;
    let g = generate(&p).expect("construction succeeded, so the graph is simple");
    let mut report = format!("# {p}: {}\n", describe(&case));
    for r in &recoloured {
        let _ = writeln!(
            report,
            "# recoloured vertex {} ({},{}): {} -> {}",
            p.index(r.at.0, r.at.1) + 1,
            r.at.0,
            r.at.1,
            r.from,
            r.to
        );
    }
    report.push_str(&grid(&p, &colouring));
    let verdict = verify::nice_violation(&g, &colouring).expect("colouring is total");
    let _ = writeln!(report, "# nice: {}, {} colours", yes_no(verdict.is_none()), colouring.colour_count());
    print!("{report}");
    emit(out, &write_colouring(&colouring))?;
    match verdict {
        None => Ok(()),
        Some(v) => Err(Failure::Check(format!("colouring is not nice: {v}"))),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_verify(graph: &Path, colouring: &Path, conflict_free: bool) -> Outcome {
    let g = load_graph(graph)?;
    let c = parse_colouring(&read(colouring)?, g.vertex_count())
        .map_err(|e| Failure::Input(format!("{}: {e}", colouring.display())))?;
    let report = verify::report(&g, &c).expect("parser checked totality");
    let mut checks: Vec<(&str, Option<Violation>)> =
        vec![("proper", report.proper), ("odd", report.odd), ("nice", report.nice)];
    if conflict_free {
        checks.push(("conflict-free", report.conflict_free));
    }
    let mut first = None;
    for (name, violation) in &checks {
        match violation {
            None => println!("{name}: yes"),
            Some(v) => {
                println!("{name}: no ({v})");
                first.get_or_insert(format!("{name} check failed: {v}"));
            }
        }
    }
    println!("colours used: {}", report.colour_count);
    first.map_or(Ok(()), |m| Err(Failure::Check(m)))
}

fn solver_failure(e: SolverError) -> Failure {
    match e {
        SolverError::ResourceLimit { .. } => Failure::Budget(format!("budget exceeded: {e}")),
        e => Failure::Input(e.to_string()),
    }
}

fn cmd_chi_odd(graph: &Path, max_k: usize, budget: Option<u64>, deterministic: bool, out: Option<&Path>) -> Outcome {
    let g = load_graph(graph)?;
    let config = SolverConfig { node_budget: budget, deterministic };
    match chi_odd(&g, max_k, &config).map_err(solver_failure)? {
        Some(k) => {
            println!("chi_odd = {k}");
            if let Some(path) = out {
                let c = find_odd_colouring(&g, k, &config).map_err(solver_failure)?.expect("bound k succeeded");
                emit(Some(path), &write_colouring(&c))?;
            }
        }
        None => println!("none <= {max_k}"),
    }
    Ok(())
}

fn site(s: Site) -> String {
    match s {
        Site::Vertex(v) => format!("vertex {}", v + 1),
        Site::Face(f) => format!("face {}", f + 1),
    }
}

fn cmd_discharge(graph: &Path, transfers: bool) -> Outcome {
    let g = load_graph(graph)?;
    let (_, after, audit) = discharge(&g).map_err(|e| match e {
        DischargeError::Embedding(EmbeddingError::Disconnected) => Failure::Input(format!("{}: {e}", graph.display())),
        e => Failure::Check(e.to_string()),
    })?;
    println!("total before: {}", charge_text(&audit.total_before));
    println!("total after: {}", charge_text(&audit.total_after));
    println!("conserved: {}", yes_no(audit.conserved));
    let list = |items: &[(usize, oddcolour::discharge::Charge)], label: &str| {
        let body: Vec<String> = items.iter().map(|(x, c)| format!("{label} {} ({})", x + 1, charge_text(c))).collect();
        if body.is_empty() {
            "none".to_string()
        } else {
            body.join(", ")
        }
    };
    println!("negative faces: {}", list(&audit.negative_faces, "face"));
    println!("negative 6+-vertices: {}", list(&audit.negative_large_vertices, "vertex"));
    println!("5-vertices with charge <= 0: {}", list(&audit.nonpositive_five_vertices, "vertex"));
    if transfers {
        println!("transfers: {}", after.transfers.len());
        for t in &after.transfers {
            println!("  {} {} -> vertex {}: {}", t.rule, site(t.from), t.to + 1, charge_text(&t.amount));
        }
    }
    if audit.conserved {
        Ok(())
    } else {
        Err(Failure::Check("charge was not conserved".into()))
    }
}

fn cmd_info(graph: &Path) -> Outcome {
    let g = load_graph(graph)?;
    let (v, e, f) = (g.vertex_count(), g.edge_count(), g.trace_faces().len());
    println!("V={v} E={e} F={f}");
    let histogram: Vec<String> =
        g.degree_histogram().iter().enumerate().filter(|(_, &k)| k > 0).map(|(d, k)| format!("{d}:{k}")).collect();
    println!("degrees: {}", histogram.join(" "));
    match g.euler_characteristic() {
        Ok(chi) => println!("euler characteristic: {chi}"),
        Err(_) => println!("euler characteristic: undefined (disconnected)"),
    }
    let tri = g.is_6regular_triangulation().unwrap_or(false);
    println!("6-regular triangulation: {tri}");
    println!("E <= 3V: {}", e <= 3 * v);
    Ok(())
}

fn cmd_sweep(max_m: usize, min_n: usize, max_n: usize) -> Outcome {
    let mut ok = 0;
    let mut failures = Vec::new();
    for p in TorusParams::all_up_to(max_m, min_n, max_n).filter(is_simple) {
        match construct(&p) {
            Ok(_) => ok += 1,
            Err(e) => failures.push(e.to_string()),
        }
    }
    println!("nice: {ok}, failed: {}", failures.len());
    for f in &failures {
        println!("  {f}");
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} constructions failed", failures.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Gen { torus, out } => cmd_gen(torus, out.as_deref()),
        Command::Colour { torus, out } => cmd_colour(torus, out.as_deref()),
        Command::Verify { graph, colouring, conflict_free } => cmd_verify(graph, colouring, *conflict_free),
        Command::ChiOdd { graph, max_k, budget, deterministic, out } => {
            cmd_chi_odd(graph, *max_k, *budget, *deterministic, out.as_deref())
        }
        Command::Discharge { graph, transfers } => cmd_discharge(graph, *transfers),
        Command::Info { graph } => cmd_info(graph),
        Command::Sweep { max_m, min_n, max_n } => cmd_sweep(*max_m, *min_n, *max_n),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("oddcol: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
