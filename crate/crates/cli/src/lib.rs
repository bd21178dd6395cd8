//! Argument parsing and command execution for the `nsg` binary.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use nsg_core::{
    export_tree, feasible, instance_closure, one_solution, oracle_solve, solve, AbMonoid, Error,
    OracleOptions, ProblemInstance, SolutionSet, TreeOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Smallest (a,b)-monoid containing X
    Closure,
    /// Decide whether the problem has a solution
    Feasible,
    /// Print one solution
    One,
    /// Print every solution
    Solve,
    /// Write the variety tree as DOT
    Tree,
    /// Print every solution using the brute-force oracle
    OracleSolve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Engine {
    #[default]
    Tree,
    Oracle,
}

#[derive(Debug, Parser)]
#[command(
    name = "nsg",
    version,
    about = "Solve P_r(a,b,X,g) via numerical semigroup trees"
)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    // `::std::vec::Vec` makes clap treat each list as one value
    /// Comma-separated multipliers a_i
    #[arg(long, value_parser = parse_list, default_value = "")]
    a: ::std::vec::Vec<u64>,
    /// Comma-separated offsets b_i
    #[arg(long, value_parser = parse_list, default_value = "")]
    b: ::std::vec::Vec<u64>,
    /// Comma-separated forbidden elements
    #[arg(long = "X", value_parser = parse_list, default_value = "")]
    x: ::std::vec::Vec<u64>,
    /// Required cardinality
    #[arg(long)]
    g: Option<u64>,
    #[arg(long, default_value_t = 0)]
    r: u64,
    /// Depth of the exported tree
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long = "max-nodes")]
    max_nodes: Option<usize>,
    #[arg(long, value_enum, default_value_t = Engine::Tree)]
    engine: Engine,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for tree expansion (0 = all cores)
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

/// Validated command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub instance: ProblemInstance,
    pub depth: Option<usize>,
    pub max_nodes: Option<usize>,
    pub output_path: Option<PathBuf>,
    pub engine: Engine,
    pub threads: usize,
}

#[derive(Debug)]
pub enum CliError {
    /// Rejected by clap, including `--help` and `--version` requests.
    Clap(clap::Error),
    Usage(String),
}

fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<u64>() {
            Ok(0) | Err(_) => Err(format!("`{t}` is not a positive integer")),
            Ok(v) => Ok(v),
        })
        .collect()
}

pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(CliError::Clap)?;
    let g = match (args.command, args.g) {
        (Command::Closure | Command::Tree, g) => g.unwrap_or(0),
        (_, Some(g)) => g,
        (_, None) => return Err(CliError::Usage("--g is required for this command".into())),
    };
    if args.command == Command::Tree && args.depth.is_none() {
        return Err(CliError::Usage("--depth is required for `tree`".into()));
    }
    let instance = ProblemInstance::new(args.a, args.b, args.x, g, args.r)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(CliConfig {
        command: args.command,
        instance,
        depth: args.depth,
        max_nodes: args.max_nodes,
        output_path: args.out,
        engine: args.engine,
        threads: args.threads,
    })
}

fn angle(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("<{}>", inner.join(","))
}

fn line(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    inner.join(",")
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Infeasible => EXIT_INFEASIBLE,
        Error::ResourceLimit { .. } | Error::Overflow | Error::ScaleTooLarge { .. } => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

fn print_solutions(set: &SolutionSet, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<()> {
    for s in &set.solutions {
        writeln!(out, "{}", line(s))?;
    }
    writeln!(err, "# solutions={} nodes={}", set.len(), set.node_count)
}

fn execute(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let inst = &config.instance;
    let tree_options = TreeOptions {
        max_nodes: config
            .max_nodes
            .unwrap_or(nsg_core::tree::DEFAULT_MAX_NODES),
        threads: config.threads,
    };
    let io = |e: io::Error| Error::InvalidInstance(format!("write failed: {e}"));
    match config.command {
        Command::Closure => {
            match instance_closure(inst)? {
                AbMonoid::Trivial => {
                    writeln!(out, "d=0 M=<>").map_err(io)?;
                    writeln!(out, "expanded=<>").map_err(io)?;
                }
                AbMonoid::Generated(rep) => {
                    writeln!(out, "d={} M={}", rep.d(), rep.base()).map_err(io)?;
                    writeln!(out, "expanded={}", angle(&rep.generators()?)).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Feasible => {
            let f = feasible(inst)?;
            let count = f.gap_count.map_or("inf".to_string(), |c| c.to_string());
            let verdict = if f.feasible { "yes" } else { "no" };
            writeln!(out, "{verdict} gaps={count}").map_err(io)?;
            Ok(if f.feasible { EXIT_OK } else { EXIT_INFEASIBLE })
        }
        Command::One => {
            let c = one_solution(inst)?;
            writeln!(out, "{}", line(&c)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Solve | Command::OracleSolve => {
            let set = if config.command == Command::OracleSolve || config.engine == Engine::Oracle {
                oracle_solve(inst, &OracleOptions::default())?
            } else {
                solve(inst, &tree_options)?
            };
            print_solutions(&set, out, err).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Tree => {
            let depth = config.depth.unwrap_or(0);
            let dot = export_tree(inst, depth, &tree_options)?;
            out.write_all(dot.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs a validated configuration and returns the process exit code.
/// Standard output goes to `--out` when given.
pub fn run(config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut file;
    let out: &mut dyn Write = match &config.output_path {
        Some(path) => match File::create(path) {
            Ok(f) => {
                file = BufWriter::new(f);
                &mut file
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot create {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => stdout,
    };
    let code = match execute(config, out, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    };
    if out.flush().is_err() {
        return EXIT_USAGE;
    }
    code
}
