//! Command-line front end: constructions, invariants, theorem values,
//! exact searches, sweeps and lemma checks, with machine-readable output.
//!
//! Exit codes: 0 success, 2 validation failure, 3 internal error, 4 lemma
//! check failure.

use clap::{Parser, Subcommand, ValueEnum};
use extremal_lab::cache::ResultCache;
use extremal_lab::construct::{
    build_construction, construction_id, evaluate_theorem, Family, FamilyOutcome,
};
use extremal_lab::lemma::{drivers, LemmaId, LemmaReport};
use extremal_lab::params::{derive_params, FamilyParams};
use extremal_lab::search::{extremal_search, sweep, SearchOptions, SweepGrid};
use extremal_lab::{block_cut_decompose, circumference, count_cliques, matching_number, Error};
use std::io::BufRead;
use std::process::ExitCode;

const CSV_DOC: &str = "CSV column orders (fixed):
  construct:  id,graph6,order,edges
  invariants: index,graph6,order,edges,nu,circumference,blocks,k<r>...
  theorem:    n,k,s,r,family,status,count,max
  search:     n,k,s,r,value,witness,nodes_explored,maximal_graphs_seen,wall_time,theorem_gap,below_construction_threshold
  sweep:      n,k,s,r,value,theorem_value,theorem_gap,matching_turan,below_construction_threshold,cache_hit
  check-lemma: lemma,seed,instance,result,witness";

#[derive(Parser)]
#[command(
    name = "extremal-lab",
    about = "Clique-count extremal workbench: constructions, invariants, exact searches, lemma checks",
    after_long_help = CSV_DOC,
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Result cache path (JSON lines). Falls back to EXTREMAL_LAB_CACHE,
    /// then to no cache.
    #[arg(long, global = true)]
    cache: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DedupMode {
    Auto,
    On,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Build a construction family and print it as graph6.
    Construct {
        /// One of g1..g6, star.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
    },
    /// Exact invariants of graph6 inputs (file via --input, else stdin).
    Invariants {
        /// Input file of newline-separated graph6 values; "-" or absent
        /// reads stdin.
        #[arg(long)]
        input: Option<String>,
        /// Clique sizes to count, comma separated.
        #[arg(long, default_value = "2,3", value_delimiter = ',')]
        r: Vec<usize>,
    },
    /// Evaluate the theorem-predicted value at one parameter tuple.
    Theorem {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
    },
    /// Exact extremal value by exhaustive pruned search (small n).
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
        /// Worker threads for the subtask phase.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Isomorph rejection (auto: on for n >= 8).
        #[arg(long, value_enum, default_value_t = DedupMode::Auto)]
        dedup: DedupMode,
        /// Order cap override (hard cap 12).
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Search a parameter grid, reusing and extending the result cache.
    Sweep {
        /// Inclusive range, e.g. "7..9" or a single value.
        #[arg(long)]
        n: String,
        #[arg(long)]
        k: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        r: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = DedupMode::Auto)]
        dedup: DedupMode,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Run a lemma checker and stream its report lines.
    #[command(name = "check-lemma")]
    CheckLemma {
        /// One of: dirac-kopylov, binom, near-perfect, star, contraction,
        /// stability.
        #[arg(long)]
        lemma: String,
        /// Number of seeded trials (randomized checkers).
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Base seed; trial i uses seed + i. Echoed in every line.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest instance order for randomized checkers.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Exhaustive sweep limit for the binom checker.
        #[arg(long, default_value_t = 12)]
        limit: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Io(_) | Error::Integrity(_) | Error::Overflow(_) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    let cache_path = cli
        .cache
        .clone()
        .or_else(|| std::env::var("EXTREMAL_LAB_CACHE").ok());
    match cli.command {
        Command::Construct { family, n, k, s } => {
            let family = parse_family(&family)?;
            let params = derive_params(n, k, s, 2)?;
            let g = build_construction(family, &params)?;
            let id = construction_id(family, &params);
            let g6 = extremal_lab::graph6::encode(&g);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "id": id,
                        "graph6": g6,
                        "order": g.order(),
                        "edges": g.edge_count(),
                    })
                ),
                Format::Csv => {
                    println!("id,graph6,order,edges");
                    println!("{id},{g6},{},{}", g.order(), g.edge_count());
                }
                Format::Table => {
                    println!("{id} {g6}");
                    println!("edges={}", g.edge_count());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { input, r } => {
            let lines = read_graph_lines(input.as_deref())?;
            if format == Format::Csv {
                let rcols: Vec<String> = r.iter().map(|x| format!("k{x}")).collect();
                println!(
                    "index,graph6,order,edges,nu,circumference,blocks,{}",
                    rcols.join(",")
                );
            }
            for (index, line) in lines.iter().enumerate() {
                let g = extremal_lab::graph6::decode(line)?;
                let mut cliques = Vec::new();
                for &rr in &r {
                    cliques.push((rr, count_cliques(&g, rr)?));
                }
                let nu = matching_number(&g);
                let circ = circumference(&g)?;
                let blocks = if g.order() >= 2 && g.is_connected() {
                    block_cut_decompose(&g)?.blocks.len()
                } else {
                    0
                };
                match format {
                    Format::Json => {
                        let cl: serde_json::Map<String, serde_json::Value> = cliques
                            .iter()
                            .map(|(rr, c)| (rr.to_string(), serde_json::json!(c)))
                            .collect();
                        println!(
                            "{}",
                            serde_json::json!({
                                "index": index,
                                "graph6": line,
                                "order": g.order(),
                                "edges": g.edge_count(),
                                "cliques": cl,
                                "nu": nu,
                                "circumference": circ,
                                "blocks": blocks,
                            })
                        );
                    }
                    Format::Csv => {
                        let counts: Vec<String> =
                            cliques.iter().map(|(_, c)| c.to_string()).collect();
                        println!(
                            "{index},{line},{},{},{nu},{circ},{blocks},{}",
                            g.order(),
                            g.edge_count(),
                            counts.join(",")
                        );
                    }
                    Format::Table => {
                        let counts: Vec<String> = cliques
                            .iter()
                            .map(|(rr, c)| format!("N(K{rr})={c}"))
                            .collect();
                        println!(
                            "{line}: order={} edges={} {} nu={nu} circumference={circ} blocks={blocks}",
                            g.order(),
                            g.edge_count(),
                            counts.join(" ")
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Theorem { n, k, s, r } => {
            let params = derive_params(n, k, s, r)?;
            let ev = evaluate_theorem(&params)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&ev).expect("serializable")),
                Format::Csv => {
                    println!("n,k,s,r,family,status,count,max");
                    let max = ev.value.map_or(String::new(), |v| v.to_string());
                    for f in &ev.families {
                        let (status, count) = match &f.outcome {
                            FamilyOutcome::Value(v) => ("value".to_string(), v.to_string()),
                            FamilyOutcome::BelowThreshold { min_n } => {
                                (format!("below_threshold(min_n={min_n})"), String::new())
                            }
                            FamilyOutcome::Undefined { .. } => {
                                ("undefined".to_string(), String::new())
                            }
                        };
                        println!("{n},{k},{s},{r},{},{status},{count},{max}", f.family);
                    }
                }
                Format::Table => {
                    println!("branch: {}", ev.branch);
                    for f in &ev.families {
                        match &f.outcome {
                            FamilyOutcome::Value(v) => println!("  {}: {v}", f.id),
                            FamilyOutcome::BelowThreshold { min_n } => println!(
                                "  {}: below construction threshold (min n = {min_n})",
                                f.id
                            ),
                            FamilyOutcome::Undefined { reason } => {
                                println!("  {}: undefined ({reason})", f.id)
                            }
                        }
                    }
                    match ev.value {
                        Some(v) => println!("value={v}"),
                        None => println!("value=none (no applicable family at n={n})"),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search {
            n,
            k,
            s,
            r,
            jobs,
            dedup,
            max_n,
        } => {
            let params = FamilyParams::for_search(n, k, s, r);
            let options = SearchOptions {
                canonical_dedup: dedup_flag(dedup),
                jobs,
                max_n,
                ..SearchOptions::default()
            };
            let rec = extremal_search(&params, &options)?;
            if let Some(path) = cache_path {
                let mut cache = ResultCache::open(&path)?;
                report_warnings(&cache);
                if cache.get(&rec.key()).is_none() {
                    cache.insert(rec.clone())?;
                }
            }
            print_records(format, std::slice::from_ref(&rec));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            n,
            k,
            s,
            r,
            jobs,
            dedup,
            max_n,
        } => {
            let grid = SweepGrid {
                n: parse_range(&n)?,
                k: parse_range(&k)?,
                s: parse_range(&s)?,
                r: parse_range(&r)?,
            };
            let options = SearchOptions {
                canonical_dedup: dedup_flag(dedup),
                jobs,
                max_n,
                ..SearchOptions::default()
            };
            let mut cache = match cache_path {
                Some(path) => {
                    let c = ResultCache::open(&path)?;
                    report_warnings(&c);
                    Some(c)
                }
                None => None,
            };
            let outcome = sweep(&grid, &options, cache.as_mut())?;
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&outcome).expect("serializable"))
                }
                Format::Csv => {
                    println!("n,k,s,r,value,theorem_value,theorem_gap,matching_turan,below_construction_threshold,cache_hit");
                    for row in &outcome.rows {
                        println!(
                            "{},{},{},{},{},{},{},{},{},{}",
                            row.n,
                            row.k,
                            row.s,
                            row.r,
                            row.value,
                            opt(row.theorem_value),
                            opt(row.theorem_gap),
                            opt(row.matching_turan),
                            row.below_construction_threshold,
                            row.cache_hit
                        );
                    }
                }
                Format::Table => {
                    println!(
                        "{:>3} {:>3} {:>3} {:>3} {:>8} {:>8} {:>5} {:>9} {:>6} {:>5}",
                        "n",
                        "k",
                        "s",
                        "r",
                        "value",
                        "theorem",
                        "gap",
                        "turan-1.1",
                        "below",
                        "cache"
                    );
                    for row in &outcome.rows {
                        println!(
                            "{:>3} {:>3} {:>3} {:>3} {:>8} {:>8} {:>5} {:>9} {:>6} {:>5}",
                            row.n,
                            row.k,
                            row.s,
                            row.r,
                            row.value,
                            opt(row.theorem_value),
                            opt(row.theorem_gap),
                            opt(row.matching_turan),
                            row.below_construction_threshold,
                            row.cache_hit
                        );
                    }
                    println!(
                        "cache_hits={} computed={} (theorem equality is expected only for sufficiently large n; the tool asserts gap >= 0, never equality)",
                        outcome.cache_hits, outcome.computed
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckLemma {
            lemma,
            trials,
            seed,
            max_n,
            limit,
        } => {
            let id = LemmaId::parse(&lemma).ok_or_else(|| {
                Error::Precondition(format!(
                    "unknown --lemma {lemma}; expected dirac-kopylov|binom|near-perfect|star|contraction|stability"
                ))
            })?;
            if format == Format::Csv {
                println!("lemma,seed,instance,result,witness");
            } else if format == Format::Table {
                println!("seed={seed} trials={trials}");
            }
            let mut all_pass = true;
            let mut emit = |rep: &LemmaReport| {
                all_pass &= rep.pass;
                match format {
                    Format::Json => {
                        println!("{}", serde_json::to_string(rep).expect("serializable"))
                    }
                    Format::Csv => println!(
                        "{},{},{},{},{}",
                        rep.lemma.name(),
                        rep.seed,
                        rep.instance,
                        if rep.pass { "pass" } else { "fail" },
                        rep.witness.replace(',', ";")
                    ),
                    Format::Table => println!("{rep}"),
                }
            };
            match id {
                LemmaId::Binom => {
                    for rep in drivers::binom_sweep(limit) {
                        emit(&rep);
                    }
                }
                _ => {
                    for i in 0..trials {
                        let trial_seed = seed.wrapping_add(i);
                        let rep = match id {
                            LemmaId::DiracKopylov => {
                                drivers::degree_bound_trial(trial_seed, max_n)?
                            }
                            LemmaId::NearPerfect => {
                                drivers::near_perfect_trial(trial_seed, 6, max_n)?
                            }
                            LemmaId::Star => drivers::star_trial(trial_seed, 6, max_n)?,
                            LemmaId::Contraction => drivers::contraction_trial(trial_seed, max_n)?,
                            LemmaId::Stability => drivers::stability_trial(trial_seed)?,
                            LemmaId::Binom => unreachable!(),
                        };
                        emit(&rep);
                    }
                }
            }
            if all_pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(4))
            }
        }
    }
}

fn dedup_flag(mode: DedupMode) -> Option<bool> {
    match mode {
        DedupMode::Auto => None,
        DedupMode::On => Some(true),
        DedupMode::Off => Some(false),
    }
}

fn parse_family(text: &str) -> Result<Family, Error> {
    Family::parse(text).ok_or_else(|| {
        Error::Precondition(format!(
            "unknown --family {text}; expected one of g1..g6, star"
        ))
    })
}

/// Inclusive range syntax: either "7..9" or a single "7".
fn parse_range(text: &str) -> Result<(usize, usize), Error> {
    let bad = |t: &str| Error::Precondition(format!("bad range `{t}`; expected N or LO..HI"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad(text))?;
        let hi: usize = hi.trim().parse().map_err(|_| bad(text))?;
        if lo > hi {
            return Err(bad(text));
        }
        Ok((lo, hi))
    } else {
        let v: usize = text.trim().parse().map_err(|_| bad(text))?;
        Ok((v, v))
    }
}

fn read_graph_lines(input: Option<&str>) -> Result<Vec<String>, Error> {
    let text = match input {
        Some(path) if path != "-" => std::fs::read_to_string(path)?,
        _ => {
            let mut buf = String::new();
            for line in std::io::stdin().lock().lines() {
                buf.push_str(&line?);
                buf.push('\n');
            }
            buf
        }
    };
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

fn report_warnings(cache: &ResultCache) {
    for w in &cache.warnings {
        eprintln!("cache warning: {w}");
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn print_records(format: Format, records: &[extremal_lab::SearchRecord]) {
    match format {
        Format::Json => {
            for rec in records {
                println!("{}", serde_json::to_string(rec).expect("serializable"));
            }
        }
        Format::Csv => {
            println!("n,k,s,r,value,witness,nodes_explored,maximal_graphs_seen,wall_time,theorem_gap,below_construction_threshold");
            for rec in records {
                println!(
                    "{},{},{},{},{},{},{},{},{:.6},{},{}",
                    rec.params.n,
                    rec.params.k,
                    rec.params.s,
                    rec.params.r,
                    rec.value,
                    rec.witness,
                    rec.nodes_explored,
                    rec.maximal_graphs_seen,
                    rec.wall_time,
                    opt(rec.theorem_gap),
                    rec.below_construction_threshold
                );
            }
        }
        Format::Table => {
            for rec in records {
                println!(
                    "n={} k={} s={} r={}: value={} witness={} nodes={} maximal={} time={:.3}s gap={}{}",
                    rec.params.n,
                    rec.params.k,
                    rec.params.s,
                    rec.params.r,
                    rec.value,
                    rec.witness,
                    rec.nodes_explored,
                    rec.maximal_graphs_seen,
                    rec.wall_time,
                    opt(rec.theorem_gap),
                    if rec.below_construction_threshold {
                        " (below construction threshold)"
                    } else {
                        ""
                    }
                );
            }
        }
    }
}
