//! Command-line front end: polynomial computation, exact comparison,
//! optimality search with JSON/CSV reports, theorem-scale verification
//! suites, and an exploratory counterexample hunt.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use kindep::constructions::{Built, ConstructionSpec, Family};
use kindep::graph::{graph6_decode, graph6_encode, parse_edge_list, Graph};
use kindep::indpoly::independence_polynomial;
use kindep::kindpoly::k_independence_polynomial;
use kindep::poly::{dominance, DominanceVerdict};
use kindep::search::{
    explore_least, find_optimum, validate_report, verify_theorem, ClassSpec, Objective,
    OptimalityReport, SearchOptions, TheoremTag, VerifyParams, DEFAULT_BUDGET,
    VERDICT_BUDGET_EXCEEDED,
};
use kindep::IntPolynomial;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

/// Exit code for a search that could not be decided within the budget.
const EXIT_BUDGET_EXCEEDED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "kindep",
    version,
    about = "Exact independence polynomial toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute I_k of the input graph(s)
    Poly(PolyArgs),
    /// Compare two graphs' polynomials exactly on [0, inf)
    Compare(CompareArgs),
    /// Decide uniform optimality over all graphs with given order and size
    Search(SearchArgs),
    /// Run a theorem-scale verification suite
    Verify(VerifyArgs),
    /// Hunt for an optimally-least counterexample at k = 2 (evidence only)
    Explore(ExploreArgs),
}

/// Graph input sources; exactly one per invocation (graph6 strings may
/// repeat to pass several graphs where a command accepts them).
#[derive(Args)]
struct InputArgs {
    /// Construction family tag (lex, turan, thm2, thm3-ls, thm3-fs, thm4,
    /// thm5-pair, thm6-pair)
    #[arg(long)]
    construction: Option<String>,
    /// Inline graph6 string (repeatable)
    #[arg(long, action = clap::ArgAction::Append)]
    graph6: Vec<String>,
    /// File in "n m\nu v\n..." edge-list format
    #[arg(long)]
    edgelist_file: Option<PathBuf>,
    /// File with one graph6 string per line
    #[arg(long)]
    graph6_file: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Clique parameter of the construction; defaults to the polynomial's
    /// --k for families that take one
    #[arg(long = "ck")]
    ck: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
}

impl InputArgs {
    fn load(&self, default_k: Option<usize>) -> Result<Vec<Graph>> {
        let mut sources = 0;
        sources += usize::from(self.construction.is_some());
        sources += usize::from(!self.graph6.is_empty());
        sources += usize::from(self.edgelist_file.is_some());
        sources += usize::from(self.graph6_file.is_some());
        if sources != 1 {
            bail!("exactly one input source required (--construction, --graph6, --edgelist-file, or --graph6-file)");
        }
        if let Some(tag) = &self.construction {
            let family: Family = tag.parse()?;
            let spec = ConstructionSpec {
                family,
                n: self.n,
                m: self.m,
                k: self.ck.or(default_k),
                l: self.l,
                a: self.a,
                b: self.b,
            };
            return Ok(match spec.build()? {
                Built::Single(g) => vec![g],
                Built::Pair(g, h) => vec![g, h],
            });
        }
        if !self.graph6.is_empty() {
            return self
                .graph6
                .iter()
                .map(|s| graph6_decode(s).context("invalid --graph6 input"))
                .collect();
        }
        if let Some(path) = &self.edgelist_file {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            return Ok(vec![parse_edge_list(&text)?]);
        }
        let path = self.graph6_file.as_ref().unwrap();
        let text =
            fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| graph6_decode(l.trim()).with_context(|| format!("line {}", i + 1)))
            .collect()
    }
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Polynomial parameter: count K_k-free subsets (2 = independent sets)
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Output format: text or json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// greatest or least
    #[arg(long)]
    objective: String,
    /// Keep one representative per isomorphism class
    #[arg(long, default_value_t = false)]
    dedup: bool,
    /// Worker threads (1 = fully sequential)
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Cap on labeled graphs enumerated
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Directory for report.json and summary.csv
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Emit real wall-clock times (output is then not byte-reproducible)
    #[arg(long, default_value_t = false)]
    timing: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem tag: thm1..thm6 or lemma4
    theorem: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Random instances for the lemma4 suite
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Largest base order for the lemma4 suite
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Seed for the lemma4 suite
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct ExploreArgs {
    /// Largest order to scan
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value = "text")]
    format: String,
}

fn poly_of(g: &Graph, k: usize) -> Result<IntPolynomial> {
    if k == 2 {
        Ok(independence_polynomial(g))
    } else {
        Ok(k_independence_polynomial(g, k)?)
    }
}

fn cmd_poly(args: &PolyArgs) -> Result<()> {
    let graphs = args.input.load(Some(args.k))?;
    let mut json_items = Vec::new();
    for g in &graphs {
        let p = poly_of(g, args.k)?;
        let degree = p.degree().unwrap_or(0);
        match args.format.as_str() {
            "text" => {
                println!("graph6: {}", graph6_encode(g));
                println!("I_{}(G, x) = {}", args.k, p);
                println!("degree = {degree}");
            }
            "json" => {
                json_items.push(serde_json::json!({
                    "graph6": graph6_encode(g),
                    "k": args.k,
                    "coefficients": p.to_decimal_strings(),
                    "degree": degree,
                }));
            }
            other => bail!("unknown format {other:?} (expected text or json)"),
        }
    }
    if args.format == "json" {
        println!("{}", serde_json::to_string_pretty(&json_items)?);
    }
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> Result<()> {
    let graphs = args.input.load(Some(args.k))?;
    if graphs.len() != 2 {
        bail!("compare needs exactly two graphs, got {}", graphs.len());
    }
    let (g, h) = (&graphs[0], &graphs[1]);
    if (g.order(), g.size()) != (h.order(), h.size()) {
        eprintln!(
            "warning: graphs have different (n, m): ({}, {}) vs ({}, {})",
            g.order(),
            g.size(),
            h.order(),
            h.size()
        );
    }
    let pg = poly_of(g, args.k)?;
    let ph = poly_of(h, args.k)?;
    let verdict = dominance(&pg, &ph);
    match args.format.as_str() {
        "text" => {
            println!("first:  {} -> {}", graph6_encode(g), pg);
            println!("second: {} -> {}", graph6_encode(h), ph);
            println!("verdict: {}", verdict.tag());
            if let DominanceVerdict::Crosses { neg_at, pos_at } = &verdict {
                println!(
                    "first - second < 0 at x = {}/{}",
                    neg_at.numer(),
                    neg_at.denom()
                );
                println!(
                    "first - second > 0 at x = {}/{}",
                    pos_at.numer(),
                    pos_at.denom()
                );
            }
        }
        "json" => {
            let mut obj = serde_json::json!({
                "first": { "graph6": graph6_encode(g), "polynomial": pg.to_decimal_strings() },
                "second": { "graph6": graph6_encode(h), "polynomial": ph.to_decimal_strings() },
                "verdict": verdict.tag(),
            });
            if let DominanceVerdict::Crosses { neg_at, pos_at } = &verdict {
                obj["neg_at"] = format!("{}/{}", neg_at.numer(), neg_at.denom()).into();
                obj["pos_at"] = format!("{}/{}", pos_at.numer(), pos_at.denom()).into();
            }
            println!("{}", serde_json::to_string_pretty(&obj)?);
        }
        other => bail!("unknown format {other:?} (expected text or json)"),
    }
    Ok(())
}

fn summary_csv(report: &OptimalityReport) -> String {
    let spec = &report.spec;
    let objective = match spec.objective {
        Objective::Greatest => "GREATEST",
        Objective::Least => "LEAST",
    };
    let witness = report
        .witness
        .as_ref()
        .map(|w| w.graph6.clone())
        .unwrap_or_default();
    let mut out = String::from("n,m,k,objective,verdict,witness,wall_ms\n");
    let _ = writeln!(
        out,
        "{},{},{},{},{},{},{}",
        spec.n, spec.m, spec.k, objective, report.verdict, witness, report.statistics.wall_ms
    );
    out
}

fn cmd_search(args: &SearchArgs) -> Result<i32> {
    let objective: Objective = args.objective.parse()?;
    let spec = ClassSpec {
        n: args.n,
        m: args.m,
        k: args.k,
        objective,
    };
    let opts = SearchOptions {
        dedup: args.dedup,
        jobs: args.jobs,
        budget: args.budget,
    };
    let mut report = find_optimum(spec, &opts)?;
    if !args.timing {
        report.statistics.wall_ms = 0;
    }
    validate_report(&report).map_err(|e| anyhow::anyhow!("report failed re-validation: {e}"))?;
    fs::create_dir_all(&args.out)
        .with_context(|| format!("cannot create {}", args.out.display()))?;
    let json_path = args.out.join("report.json");
    let csv_path = args.out.join("summary.csv");
    fs::write(&json_path, serde_json::to_string_pretty(&report)? + "\n")?;
    fs::write(&csv_path, summary_csv(&report))?;
    println!("verdict: {}", report.verdict);
    if let Some(w) = &report.witness {
        println!("witness: {}", w.graph6);
    }
    if let Some(r) = &report.refutation {
        println!("refutation: {} vs {}", r.first.graph6, r.second.graph6);
    }
    println!("wrote {} and {}", json_path.display(), csv_path.display());
    Ok(if report.verdict == VERDICT_BUDGET_EXCEEDED {
        EXIT_BUDGET_EXCEEDED
    } else {
        0
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let tag: TheoremTag = args.theorem.parse()?;
    let params = VerifyParams {
        n: args.n,
        m: args.m,
        k: args.k,
        l: args.l,
        trials: args.trials,
        max_n: args.max_n,
        seed: args.seed,
    };
    let opts = SearchOptions {
        dedup: false,
        jobs: args.jobs,
        budget: args.budget,
    };
    let report = verify_theorem(tag, &params, &opts)?;
    for check in &report.checks {
        println!(
            "[{}] {}",
            if check.pass { "PASS" } else { "FAIL" },
            check.detail
        );
    }
    println!(
        "{}: {}",
        report.theorem,
        if report.pass { "PASS" } else { "FAIL" }
    );
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_explore(args: &ExploreArgs) -> Result<()> {
    let opts = SearchOptions {
        dedup: false,
        jobs: args.jobs,
        budget: args.budget,
    };
    let report = explore_least(args.max_n, &opts)?;
    match args.format.as_str() {
        "json" => println!("{}", serde_json::to_string_pretty(&report)?),
        "text" => {
            println!("classes checked: {}", report.classes_checked.len());
            match &report.counterexample {
                Some(r) => println!(
                    "counterexample at n={} m={}: {}",
                    r.spec.n, r.spec.m, r.verdict
                ),
                None => println!("no counterexample found"),
            }
            println!("{}", report.note);
        }
        other => bail!("unknown format {other:?} (expected text or json)"),
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Poly(args) => cmd_poly(args).map(|()| 0),
        Command::Compare(args) => cmd_compare(args).map(|()| 0),
        Command::Search(args) => cmd_search(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Explore(args) => cmd_explore(args).map(|()| 0),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
