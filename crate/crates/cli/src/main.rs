mod cert;

/// `println!` that reports a closed stdout as an error instead of panicking.
macro_rules! outln {
    ($($arg:tt)*) => {
        writeln!(io::stdout(), $($arg)*)?
    };
}

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use polwalk::bounds::{appendix_bounds, audit, b, bound_br, homotopic_bound, lower_bound};
use polwalk::constructions::{
    asymptotic_family, genus_optimal, homotopic_optimal, ks_polarization, lower_bound_graph, standard_monograph,
};
use polwalk::ops::{
    add_parallel_edge, blow_up_elementary, connected_sum, contract_edge, double_edge, subdivide, surgery,
};
use polwalk::search::{brute_force_max_vr, random_polarized, SearchBudget};
use polwalk::{find_complete_walk, fmt_q, format, reduce_to_condition_c, trace_walks, Dart, PolarizedGraph};
use serde::{Deserialize, Serialize};

use cert::{certify, Certificate};

#[derive(Parser)]
#[command(name = "polwalk", version, about = "Left walks on polarized graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts, genus, valences and walk lengths.
    Info {
        graph: String,
        /// Print the full certificate as JSON instead.
        #[arg(long)]
        json: bool,
    },
    /// Lists every left walk.
    Walks { graph: String },
    /// Exit 0 when a complete walk exists, 1 otherwise.
    CheckComplete { graph: String },
    /// Removes length-1 and length-2 walks.
    Reduce {
        graph: String,
        #[command(flatten)]
        out: Output,
    },
    /// Valence bounds for genus g.
    Bounds {
        g: u64,
        /// Largest S in the homotopic cap table.
        #[arg(long, default_value_t = 10)]
        max_s: u64,
    },
    /// Builds one of the explicit families.
    Construct {
        #[command(subcommand)]
        family: Kind,
        #[command(flatten)]
        out: Output,
    },
    /// Applies a surgery.
    Op {
        #[command(subcommand)]
        op: Op,
        #[command(flatten)]
        out: Output,
    },
    /// Recomputes every field of a certificate.
    Verify { certificate: String },
    /// Brute-force oracles and random instances.
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
}

#[derive(Args)]
struct Output {
    /// Where to write the graph (`-` is stdout).
    #[arg(short, long, default_value = "-", global = true)]
    output: String,
    /// Also write a JSON certificate here.
    #[arg(long, global = true)]
    cert: Option<PathBuf>,
}

#[derive(Subcommand, Clone, Debug)]
enum Kind {
    /// Standard optimal monograph with 3g loops.
    Monograph { g: usize },
    /// Homotopic graph with S vertices saturating the edge cap.
    Homotopic { s: usize, g: usize },
    /// Star-blown monograph with V = 12g/(3g+1).
    Star { g: usize },
    /// Ordinary optimum for g in 1..=5.
    Optimal { g: usize },
    /// K_S for S = 9 or prime S = 7 mod 12.
    Ks { s: usize },
    /// Recursive connected-sum family.
    Family { g: u64 },
}

#[derive(Subcommand)]
enum Op {
    Contract { graph: String, edge: usize },
    Blowup { graph: String, vertex: usize, start: usize, len: usize },
    Surgery { graph: String, vertex: usize, e_in: String, f_out: String },
    Subdivide { graph: String, edge: usize },
    /// Parallel edge along consecutive complete-walk darts.
    Parallel { graph: String, #[arg(required = true)] chain: Vec<String> },
    Double { graph: String, dart: String },
    Sum { left: String, v1: usize, right: String, v2: usize },
}

#[derive(Subcommand)]
enum SearchMode {
    /// Largest reduced valence with a complete walk at genus g.
    MaxVr {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        max_s: usize,
        #[arg(long)]
        max_a: usize,
        #[arg(long, default_value_t = 10_000_000)]
        limit: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON file of earlier results keyed by genus and budget.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// A random connected polarized graph.
    Random {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

fn read_text(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Reads polgraph text, or the graph embedded in a certificate.
fn read_graph(path: &str) -> anyhow::Result<PolarizedGraph> {
    let text = read_text(path)?;
    if text.trim_start().starts_with('{') {
        let c: Certificate = serde_json::from_str(&text).with_context(|| format!("parsing certificate {path}"))?;
        Ok(c.graph()?)
    } else {
        Ok(format::parse(&text).with_context(|| format!("parsing {path}"))?)
    }
}

fn write_text(path: &str, text: &str) -> anyhow::Result<()> {
    if path == "-" {
        io::stdout().write_all(text.as_bytes())?;
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("writing {path}"))
    }
}

fn emit(g: &PolarizedGraph, out: &Output, recipe: Option<serde_json::Value>) -> anyhow::Result<()> {
    write_text(&out.output, &format::serialize(g))?;
    if let Some(path) = &out.cert {
        let c = certify(g, recipe)?;
        fs::write(path, serde_json::to_string_pretty(&c)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn dart(s: &str) -> anyhow::Result<Dart> {
    Ok(s.parse::<Dart>()?)
}

fn family_args(f: &Kind) -> Vec<String> {
    match f {
        Kind::Monograph { g } => vec!["monograph".into(), g.to_string()],
        Kind::Homotopic { s, g } => vec!["homotopic".into(), s.to_string(), g.to_string()],
        Kind::Star { g } => vec!["star".into(), g.to_string()],
        Kind::Optimal { g } => vec!["optimal".into(), g.to_string()],
        Kind::Ks { s } => vec!["ks".into(), s.to_string()],
        Kind::Family { g } => vec!["family".into(), g.to_string()],
    }
}

fn build_family(f: &Kind) -> anyhow::Result<(PolarizedGraph, serde_json::Value)> {
    let mut recipe = serde_json::json!({ "construct": family_args(f) });
    let g = match *f {
        Kind::Monograph { g } => standard_monograph(g)?,
        Kind::Homotopic { s, g } => homotopic_optimal(s, g)?,
        Kind::Star { g } => lower_bound_graph(g)?,
        Kind::Optimal { g } => genus_optimal(g)?,
        Kind::Ks { s } => ks_polarization(s)?,
        Kind::Family { g } => {
            let (graph, tree) = asymptotic_family(g)?;
            recipe["tree"] = serde_json::to_value(&tree)?;
            graph
        }
    };
    Ok((g, recipe))
}

fn info(path: &str, json: bool) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let c = certify(&g, None)?;
    if json {
        outln!("{}", serde_json::to_string_pretty(&c)?);
        return Ok(0);
    }
    let s = &c.stats;
    outln!(
        "S={} A={} A_r={} F={} chi={} gamma={} V={} V_r={}",
        s.s, s.a, s.a_r, s.f, s.chi, s.gamma, s.v, s.v_r
    );
    let lengths: Vec<String> = c.walk_lengths.iter().map(|l| l.to_string()).collect();
    outln!("walk lengths: {}", lengths.join(" "));
    outln!(
        "ordinary={} condition_c={} complete_walk={}",
        s.ordinary, s.condition_c, s.complete_walk
    );
    for (k, v) in &c.audit {
        outln!("{k}: {v}");
    }
    Ok(0)
}

fn walks(path: &str) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let w = trace_walks(&g)?;
    for (i, walk) in w.walks.iter().enumerate() {
        let darts: Vec<String> = walk.darts.iter().map(|d| d.to_string()).collect();
        let mark = if w.complete_index == Some(i) { " complete" } else { "" };
        outln!("walk {i} length {}{mark}: {}", walk.len(), darts.join(" "));
    }
    Ok(0)
}

fn check_complete(path: &str) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    g.require_connected()?;
    let r = find_complete_walk(&g);
    match r.walk {
        Some(walk) => {
            outln!("complete walk of length {} ({} steps)", walk.len(), r.steps);
            let it: Vec<String> = walk.itinerary(&g).iter().map(|v| v.to_string()).collect();
            outln!("itinerary: {}", it.join(" "));
            Ok(0)
        }
        None => {
            outln!("no complete walk ({} steps)", r.steps);
            Ok(1)
        }
    }
}

fn bounds(g: u64, max_s: u64) -> anyhow::Result<u8> {
    if g == 0 {
        bail!("genus must be positive");
    }
    let br = bound_br(g);
    outln!("b({g}) = {:.6}", b(g));
    let terms: Vec<String> = br.terms.iter().map(fmt_q).collect();
    outln!("b_r({g}) = {} from terms {}", fmt_q(&br.value), terms.join(" "));
    outln!("lower bound 12g/(3g+1) = {}", fmt_q(&lower_bound(g)));
    let ab = appendix_bounds(g);
    outln!("appendix: b = {} c = {} c2 = {}", ab.b, ab.c, ab.c2);
    outln!("homotopic caps:");
    outln!("  S  A_max  V_max");
    for s in 1..=max_s {
        let (edges, v) = homotopic_bound(s, g);
        outln!("{s:>3}  {edges:>5}  {}", fmt_q(&v));
    }
    Ok(0)
}

fn op(op: &Op, out: &Output) -> anyhow::Result<u8> {
    let g = match op {
        Op::Contract { graph, edge } => contract_edge(&read_graph(graph)?, *edge)?.graph,
        Op::Blowup { graph, vertex, start, len } => blow_up_elementary(&read_graph(graph)?, *vertex, *start, *len)?.graph,
        Op::Surgery { graph, vertex, e_in, f_out } => {
            surgery(&read_graph(graph)?, *vertex, dart(e_in)?, dart(f_out)?)?.graph
        }
        Op::Subdivide { graph, edge } => subdivide(&read_graph(graph)?, *edge)?.graph,
        Op::Parallel { graph, chain } => {
            let chain = chain.iter().map(|d| dart(d)).collect::<anyhow::Result<Vec<_>>>()?;
            add_parallel_edge(&read_graph(graph)?, &chain)?.graph
        }
        Op::Double { graph, dart: d } => double_edge(&read_graph(graph)?, dart(d)?)?.graph,
        Op::Sum { left, v1, right, v2 } => {
            if left == "-" && right == "-" {
                bail!("only one summand can come from stdin");
            }
            connected_sum(&read_graph(left)?, *v1, &read_graph(right)?, *v2)?.graph
        }
    };
    emit(&g, out, None)?;
    Ok(0)
}

fn verify(path: &str) -> anyhow::Result<u8> {
    let text = read_text(path)?;
    let c: Certificate = serde_json::from_str(&text).with_context(|| format!("parsing certificate {path}"))?;
    let mut bad: Vec<String> = c.mismatches()?.into_iter().map(String::from).collect();
    if let Some(args) = c.recipe.as_ref().and_then(|r| r.get("construct")) {
        let args: Vec<String> = serde_json::from_value(args.clone()).context("recipe arguments")?;
        let cli = Cli::try_parse_from(
            ["polwalk".to_string(), "construct".to_string()].into_iter().chain(args),
        )
        .map_err(|e| anyhow!("recipe arguments: {e}"))?;
        let Command::Construct { family, .. } = cli.command else { unreachable!("parsed as construct") };
        let (g, recipe) = build_family(&family)?;
        if format::serialize(&g).lines().map(str::to_string).collect::<Vec<_>>() != c.polgraph {
            bad.push("recipe graph".into());
        }
        if Some(&recipe) != c.recipe.as_ref() {
            bad.push("recipe".into());
        }
    }
    if bad.is_empty() {
        outln!("certificate verified");
        Ok(0)
    } else {
        outln!("mismatch: {}", bad.join(", "));
        Ok(1)
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct CachedMaxVr {
    best: Option<String>,
    witness: Option<Vec<String>>,
    complete: bool,
    nodes: u64,
    multigraphs: usize,
}

fn max_vr(g: u64, budget: SearchBudget, cache: Option<&Path>) -> anyhow::Result<u8> {
    let key = format!("g={g} max_s={} max_a={} limit={} seed={}", budget.max_s, budget.max_a, budget.node_limit, budget.seed);
    let mut table: std::collections::BTreeMap<String, CachedMaxVr> = match cache {
        Some(p) if p.exists() => serde_json::from_str(&fs::read_to_string(p)?).context("reading search cache")?,
        _ => Default::default(),
    };
    let hit = table.get(&key).cloned();
    let r = match hit {
        Some(r) => r,
        None => {
            let r = brute_force_max_vr(g, &budget)?;
            let r = CachedMaxVr {
                best: r.best.as_ref().map(|(q, _)| fmt_q(q)),
                witness: r.best.as_ref().map(|(_, w)| format::serialize(w).lines().map(str::to_string).collect()),
                complete: r.complete,
                nodes: r.nodes,
                multigraphs: r.multigraphs,
            };
            if let Some(p) = cache {
                table.insert(key, r.clone());
                fs::write(p, serde_json::to_string_pretty(&table)? + "\n")?;
            }
            r
        }
    };
    let bound = bound_br(g.max(1)).value;
    outln!(
        "max V_r = {} ({}; {} polarizations over {} multigraphs)",
        r.best.as_deref().unwrap_or("none"),
        if r.complete { "exhaustive" } else { "lower bound, node limit hit" },
        r.nodes,
        r.multigraphs
    );
    if g >= 1 {
        outln!("b_r({g}) = {}", fmt_q(&bound));
    }
    if let Some(w) = &r.witness {
        outln!("{}", w.join("\n"));
    }
    Ok(0)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Info { graph, json } => info(&graph, json),
        Command::Walks { graph } => walks(&graph),
        Command::CheckComplete { graph } => check_complete(&graph),
        Command::Reduce { graph, out } => {
            let g = reduce_to_condition_c(&read_graph(&graph)?)?;
            emit(&g, &out, None)?;
            Ok(0)
        }
        Command::Bounds { g, max_s } => bounds(g, max_s),
        Command::Construct { family, out } => {
            let (g, recipe) = build_family(&family)?;
            emit(&g, &out, Some(recipe))?;
            Ok(0)
        }
        Command::Op { op: o, out } => op(&o, &out),
        Command::Verify { certificate } => verify(&certificate),
        Command::Search { mode } => match mode {
            SearchMode::MaxVr { genus, max_s, max_a, limit, seed, cache } => {
                max_vr(genus, SearchBudget { max_s, max_a, node_limit: limit, seed }, cache.as_deref())
            }
            SearchMode::Random { s, a, seed, out } => {
                let g = random_polarized(s, a, seed)?;
                let st = g.stats()?;
                emit(&g, &out, None)?;
                eprintln!("audit ok: {}", audit(&st).all_ok());
                Ok(0)
            }
        },
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("POLWALK_THREADS") {
        let n: usize = v.parse().map_err(|_| anyhow!("POLWALK_THREADS must be a positive integer"))?;
        if n == 0 {
            bail!("POLWALK_THREADS must be a positive integer");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok(code) => ExitCode::from(code),
        // A reader that stops early, like `head`, is not an error.
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
