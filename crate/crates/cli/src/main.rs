//! `cupstack`: generate graphs, decide and plan cup stacking, verify plans.
//!
//! Exit codes: 0 yes/accept, 1 no/reject, 2 usage or I/O error,
//! 3 inconclusive (search budget ran out).

mod solve;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cupstack::cube::{self, ChainDecomposition};
use cupstack::families::{self, FamilySpec, LabelFile};
use cupstack::graph::{to_dot, to_text};
use cupstack::matching::gallai_edmonds;
use cupstack::oracle::{self, Budget, Outcome};
use cupstack::{parse_graph, verify_plan, Graph, Hypercube, Plan, Verdict};

use solve::{solve, Method};

#[derive(Parser, Debug)]
#[command(name = "cupstack", version, about = "Cup stacking on graphs")]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family graph and its `.labels.json` sidecar.
    Gen {
        family: String,
        params: Vec<usize>,
        /// Graph file to write; the sidecar goes next to it. Stdout if absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print Graphviz instead of the graph file format.
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether the all-ones configuration stacks onto a target.
    Decide(SolveArgs),
    /// Like `decide`, but emit a plan.
    Plan {
        #[command(flatten)]
        args: SolveArgs,
        /// Plan file to write. Stdout if absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replay a plan on a graph.
    Verify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        plan: PathBuf,
    },
    /// Exhaustive search, for one target or all of them.
    Oracle {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short = 'r', long)]
        target: Option<usize>,
        #[arg(long, env = "CUPSTACK_BUDGET", default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Gallai-Edmonds decomposition.
    Ge {
        #[arg(short, long)]
        graph: PathBuf,
        /// Decompose the graph with this vertex deleted.
        #[arg(long)]
        without: Option<usize>,
    },
    /// Symmetric chain decomposition of the subsets of `[n]`.
    Scd {
        #[arg(short)]
        n: u32,
    },
    /// Revolving-door cycle through the `k`-subsets of `[m]`.
    Gray {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        k: u32,
    },
    /// Plan for the hypercube onto the all-zeros vertex.
    Cube {
        #[arg(short)]
        d: u32,
        /// Replay the assembled plan.
        #[arg(long)]
        verify: bool,
        /// Allow d = 19 and 20.
        #[arg(long)]
        extended: bool,
        /// Plan file to write. Without it the plan is part of the summary.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct SolveArgs {
    #[arg(short, long)]
    graph: PathBuf,
    #[arg(short = 'r', long)]
    target: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, env = "CUPSTACK_BUDGET", default_value_t = oracle::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    Ecc2,
    Family,
}

/// Result of a subcommand: JSON to print and the exit code.
struct Report {
    body: Value,
    code: u8,
}

fn verdict_code(ok: Option<bool>) -> u8 {
    match ok {
        Some(true) => 0,
        Some(false) => 1,
        None => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Report { body, code }) => {
            if !body.is_null() {
                println!("{}", render(&body, cli.pretty));
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).unwrap()
    } else {
        serde_json::to_string(v).unwrap()
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

pub(crate) fn sidecar_path(graph: &Path) -> PathBuf {
    graph.with_extension("labels.json")
}

fn read_sidecar(graph: &Path) -> Result<Option<LabelFile>> {
    let path = sidecar_path(graph);
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let file = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Some(file))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn check_target(g: &Graph, r: usize) -> Result<()> {
    if r >= g.n() {
        bail!("target {r} out of range for {} vertices", g.n());
    }
    Ok(())
}

fn run(command: Command) -> Result<Report> {
    match command {
        Command::Gen { family, params, output, dot } => {
            let spec = FamilySpec::parse(&family, &params)?;
            let fam = families::generate(&spec)?;
            let text = if dot { to_dot(&fam.graph, &fam.labels) } else { to_text(&fam.graph) };
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    if !dot {
                        let side = LabelFile { spec, labels: fam.labels };
                        write(&sidecar_path(&path), &serde_json::to_string(&side)?)?;
                    }
                    let body = json!({"family": family, "n": fam.graph.n(), "edges": fam.graph.edge_count()});
                    Ok(Report { body, code: 0 })
                }
                None => {
                    print!("{text}");
                    Ok(Report { body: Value::Null, code: 0 })
                }
            }
        }
        Command::Decide(args) => {
            let (sol, _) = solve_args(&args, false)?;
            Ok(Report { code: verdict_code(sol.stackable), body: sol.to_json(false) })
        }
        Command::Plan { args, output } => {
            let (sol, _) = solve_args(&args, true)?;
            let code = verdict_code(sol.stackable);
            let body = match (&sol.plan, output) {
                (Some(plan), Some(path)) => {
                    write(&path, &plan.to_json())?;
                    sol.to_json(false)
                }
                (Some(plan), None) => serde_json::to_value(plan)?,
                (None, _) => sol.to_json(false),
            };
            Ok(Report { body, code })
        }
        Command::Verify { graph, plan } => {
            let g = read_graph(&graph)?;
            let text = fs::read_to_string(&plan).with_context(|| format!("reading {}", plan.display()))?;
            let plan = Plan::from_json(&text).with_context(|| format!("malformed plan {}", plan.display()))?;
            Ok(verdict_report(&verify_plan(&g, &plan)))
        }
        Command::Oracle { graph, target, budget } => {
            let g = read_graph(&graph)?;
            let outcomes: Vec<(usize, Outcome)> = match target {
                Some(r) => {
                    check_target(&g, r)?;
                    let c = cupstack::Configuration::ones(g.n());
                    vec![(r, oracle::decide(&g, &c, r, Budget(budget)))]
                }
                None => oracle::stackable(&g, Budget(budget)).into_iter().enumerate().collect(),
            };
            let decisions: Vec<Option<bool>> = outcomes.iter().map(|(_, o)| o.decision()).collect();
            let results: Vec<Value> = outcomes
                .iter()
                .map(|(r, o)| match o {
                    Outcome::Inconclusive { explored } => json!({"target": r, "stackable": null, "explored": explored}),
                    o => json!({"target": r, "stackable": o.decision()}),
                })
                .collect();
            let overall = if decisions.contains(&Some(false)) {
                Some(false)
            } else if decisions.contains(&None) {
                None
            } else {
                Some(true)
            };
            Ok(Report { body: json!({"stackable": overall, "targets": results}), code: verdict_code(overall) })
        }
        Command::Ge { graph, without } => {
            let g = read_graph(&graph)?;
            let body = match without {
                None => serde_json::to_value(gallai_edmonds(&g))?,
                Some(r) => {
                    check_target(&g, r)?;
                    let keep: Vec<usize> = (0..g.n()).filter(|&v| v != r).collect();
                    let mut ge = gallai_edmonds(&g.induced(&keep));
                    let host = |v: &mut usize| *v = keep[*v];
                    ge.inessential.iter_mut().flatten().for_each(host);
                    ge.a.iter_mut().for_each(host);
                    ge.z.iter_mut().for_each(host);
                    serde_json::to_value(ge)?
                }
            };
            Ok(Report { body, code: 0 })
        }
        Command::Scd { n } => {
            if n > 20 {
                bail!("n = {n} is too large to dump");
            }
            let ChainDecomposition { chains, .. } = cube::scd(n);
            let chains: Vec<Vec<Vec<u32>>> =
                chains.iter().map(|c| c.iter().map(|&s| cube::scd::elements(s)).collect()).collect();
            Ok(Report { body: json!({"n": n, "chains": chains}), code: 0 })
        }
        Command::Gray { m, k } => {
            let cycle = cube::revolving_door(m, k)?;
            let subsets: Vec<Vec<u32>> = cycle.iter().map(|&s| cube::scd::elements(s)).collect();
            Ok(Report { body: json!({"m": m, "k": k, "cycle": subsets}), code: 0 })
        }
        Command::Cube { d, verify, extended, output } => cube_command(d, verify, extended, output),
    }
}

fn solve_args(args: &SolveArgs, want_plan: bool) -> Result<(solve::Solution, Graph)> {
    let g = read_graph(&args.graph)?;
    check_target(&g, args.target)?;
    let sidecar = read_sidecar(&args.graph)?;
    let method = match args.method {
        MethodArg::Auto => Method::Auto,
        MethodArg::Oracle => Method::Oracle,
        MethodArg::Ecc2 => Method::Ecc2,
        MethodArg::Family => Method::Family,
    };
    let sol = solve(&g, sidecar.as_ref(), args.target, method, Budget(args.budget), want_plan)?;
    Ok((sol, g))
}

fn verdict_report(v: &Verdict) -> Report {
    match v {
        Verdict::Accept => Report { body: json!({"verdict": "accept"}), code: 0 },
        Verdict::Reject(r) => Report {
            body: json!({"verdict": "reject", "step": r.step, "reason": r.reason.to_string()}),
            code: 1,
        },
    }
}

fn cube_command(d: u32, verify: bool, extended: bool, output: Option<PathBuf>) -> Result<Report> {
    if d > 18 && !extended {
        bail!("d = {d} needs --extended");
    }
    let cp = cube::plan_cube(d)?;
    let mut summary = json!({
        "d": d,
        "moves": cp.plan.moves.len(),
        "complete": cp.complete(),
        "unassigned": cp.unassigned,
        "phases": cp.phases(),
    });
    let mut code = if cp.complete() { 0 } else { 1 };
    if verify {
        let v = verify_plan(&Hypercube::new(d), &cp.plan);
        let verdict = verdict_report(&v);
        summary["verdict"] = verdict.body;
        code = code.max(verdict.code);
    }
    match output {
        Some(path) => write(&path, &cp.plan.to_json())?,
        None => summary["plan"] = serde_json::to_value(&cp.plan)?,
    }
    Ok(Report { body: summary, code })
}
