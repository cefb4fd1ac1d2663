//! The `superbranch` command line.
//!
//! Exit status: 0 on success, 1 on usage or domain errors, 2 when a
//! verification suite reports a failing check.

use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use superbranch::branching::{induce, restrict, shell_coefficient, shell_set, tensor_expand_arc};
use superbranch::bratteli::{level_name, BratteliDiagram, DiagramFile, Path};
use superbranch::oracle::{verify, Suite};
use superbranch::tableaux::{path_to_tableau, semistrict_expansions, ShellTableau};
use superbranch::{parse_partition, CharCombination, Error, Exec, Laurent, QMonomial, SetPartition};

pub const CACHE_ENV: &str = "SUPERBRANCH_CACHE";

#[derive(Parser, Debug)]
#[command(name = "superbranch", version, about = "Supercharacter branching rules, Bratteli diagrams and shell tableaux")]
struct Cli {
    /// Run sequentially instead of on the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Restrict chi^lambda from U_n to U_{n-1}.
    Restrict(Branch),
    /// Induce chi^mu (a partition of [n-1]) up to U_n.
    Induce(Branch),
    /// Expand chi^lambda times the modified arc character chi^{i -x l} over its shell set.
    Tensor(Tensor),
    /// List the shell set of lambda at an anchor arc, with coefficients.
    Shells(Shells),
    /// Build the Bratteli diagram through level k.
    Bratteli(Bratteli),
    /// List the paths to a vertex.
    Paths(Paths),
    /// List the shell tableaux of a shape.
    Tableaux(Tableaux),
    /// Check the closed formulas against group sums.
    Verify(Verify),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    /// Evaluate coefficients at this q (with t = q - 1).
    #[arg(long)]
    q: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct Branch {
    #[arg(long)]
    n: usize,
    /// Arcs like "1-4,2-6"; empty for the trivial character.
    #[arg(long, allow_hyphen_values = true)]
    partition: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct Tensor {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    partition: String,
    /// The single arc, "i-l".
    #[arg(long)]
    arc: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct Shells {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    partition: String,
    /// Anchor arc "i-l".
    #[arg(long)]
    anchor: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct Cache {
    /// Cache directory; defaults to $SUPERBRANCH_CACHE when set.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Bratteli {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Write a Graphviz rendering here.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write the diagram file here.
    #[arg(long)]
    json: Option<PathBuf>,
    #[command(flatten)]
    cache: Cache,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct Paths {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, allow_hyphen_values = true)]
    shape: String,
    /// Print each path's weight.
    #[arg(long)]
    weights: bool,
    #[command(flatten)]
    cache: Cache,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct Tableaux {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, allow_hyphen_values = true)]
    shape: String,
    /// List semi-strict tableaux instead (requires --q 2).
    #[arg(long)]
    semi_strict: bool,
    #[command(flatten)]
    cache: Cache,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct Verify {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    q: u64,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

enum Failure {
    Domain(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let mut buf = Vec::new();
    let result = dispatch(cli.command, exec, &mut buf);
    let _ = out.write_all(&buf);
    match result {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Verification) => 2,
    }
}

fn dispatch(cmd: Command, exec: Exec, out: &mut Vec<u8>) -> Outcome {
    match cmd {
        Command::Restrict(b) => {
            let lambda = parse_partition(&b.partition, b.n)?;
            let c = restrict(&lambda)?;
            emit_combination(out, &b.out, json!({"n": b.n, "partition": lambda.to_string()}), &c)
        }
        Command::Induce(b) => {
            if b.n < 2 {
                return Err(Error::GroundTooSmall(b.n).into());
            }
            let mu = parse_partition(&b.partition, b.n - 1)?;
            let c = induce(&mu, b.n)?;
            emit_combination(out, &b.out, json!({"n": b.n, "partition": mu.to_string()}), &c)
        }
        Command::Tensor(t) => {
            let lambda = parse_partition(&t.partition, t.n)?;
            let (i, l) = parse_arc(&t.arc)?;
            let c = tensor_expand_arc(&lambda, i, l)?;
            emit_combination(out, &t.out, json!({"n": t.n, "partition": lambda.to_string(), "arc": format!("{i}-{l}")}), &c)
        }
        Command::Shells(s) => {
            let lambda = parse_partition(&s.partition, s.n)?;
            let (i, l) = parse_arc(&s.anchor)?;
            let mut c = CharCombination::new(s.n);
            for mu in shell_set(&lambda, i, l)? {
                let coeff = shell_coefficient(&lambda, i, l, &mu)?;
                c.insert(mu, coeff)?;
            }
            emit_combination(out, &s.out, json!({"n": s.n, "partition": lambda.to_string(), "anchor": format!("{i}-{l}")}), &c)
        }
        Command::Bratteli(b) => run_bratteli(b, exec, out),
        Command::Paths(p) => run_paths(p, exec, out),
        Command::Tableaux(t) => run_tableaux(t, exec, out),
        Command::Verify(v) => run_verify(v, exec, out),
    }
}

fn parse_arc(text: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::MalformedToken(text.to_string());
    let (a, b) = text.trim().split_once('-').ok_or_else(bad)?;
    let i: usize = a.trim().parse().map_err(|_| bad())?;
    let l: usize = b.trim().parse().map_err(|_| bad())?;
    Ok((i, l))
}

fn show_partition(sp: &SetPartition) -> String {
    if sp.is_empty() {
        "∅".into()
    } else {
        format!("{{{sp}}}")
    }
}

fn show_monomial(c: &QMonomial, q: Option<u64>) -> String {
    match q {
        Some(q) => c.eval(q).to_string(),
        None => c.to_string(),
    }
}

fn show_laurent(c: &Laurent, q: Option<u64>) -> String {
    match q {
        Some(q) => c.eval(q).to_string(),
        None => c.to_string(),
    }
}

fn writeln_out(out: &mut Vec<u8>, line: &str) {
    out.extend_from_slice(line.as_bytes());
    out.push(b'\n');
}

fn emit_json(out: &mut Vec<u8>, v: &impl Serialize) -> Outcome {
    let text = serde_json::to_string_pretty(v).map_err(|e| Failure::Domain(e.to_string()))?;
    writeln_out(out, &text);
    Ok(())
}

fn emit_combination(out: &mut Vec<u8>, o: &Output, mut head: serde_json::Value, c: &CharCombination) -> Outcome {
    match o.format {
        Format::Text => {
            for (sp, coeff) in c.iter() {
                writeln_out(out, &format!("{}\t{}", show_partition(sp), show_monomial(coeff, o.q)));
            }
            Ok(())
        }
        Format::Json => {
            let terms: Vec<_> = c
                .iter()
                .map(|(sp, coeff)| json!({"partition": sp.to_string(), "coeff": show_monomial(coeff, o.q)}))
                .collect();
            head["terms"] = terms.into();
            emit_json(out, &head)
        }
    }
}

fn cache_dir(c: &Cache) -> Option<PathBuf> {
    c.cache_dir.clone().or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

pub fn cache_file_name(n: usize, k: usize) -> String {
    format!("bratteli-n{n}-k{k}.json")
}

fn load_diagram(n: usize, k: usize, cache: &Cache, exec: Exec) -> Result<BratteliDiagram, Failure> {
    let Some(dir) = cache_dir(cache) else {
        return Ok(BratteliDiagram::build(n, k, exec)?);
    };
    let file = dir.join(cache_file_name(n, k));
    if let Ok(text) = fs::read_to_string(&file) {
        let parsed: DiagramFile = serde_json::from_str(&text)
            .map_err(|e| Failure::Domain(format!("unreadable cache file {}: {e}", file.display())))?;
        let d = BratteliDiagram::from_file(&parsed)?;
        if d.n() == n && d.k() == k {
            return Ok(d);
        }
    }
    let d = BratteliDiagram::build(n, k, exec)?;
    fs::create_dir_all(&dir).map_err(|e| Failure::Domain(format!("cannot create {}: {e}", dir.display())))?;
    write_file(&file, &(serde_json::to_string(&d.to_file()).expect("serializable") + "\n"))?;
    Ok(d)
}

fn write_file(path: &FsPath, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))
}

fn run_bratteli(b: Bratteli, exec: Exec, out: &mut Vec<u8>) -> Outcome {
    let d = load_diagram(b.n, b.k, &b.cache, exec)?;
    if let Some(path) = &b.dot {
        write_file(path, &d.export_dot())?;
    }
    if let Some(path) = &b.json {
        write_file(path, &(serde_json::to_string_pretty(&d.to_file()).expect("serializable") + "\n"))?;
    }
    match b.out.format {
        Format::Text => {
            writeln_out(out, &format!("n={} k={} vertices={} edges={}", d.n(), d.k(), d.vertex_count(), d.edge_count()));
            for h in 0..d.level_count() {
                let mults = d.level_multiplicities(h);
                let row: Vec<String> = d
                    .level(h)
                    .iter()
                    .zip(&mults)
                    .map(|(sp, m)| format!("{} [{}]", show_partition(sp), show_laurent(m, b.out.q)))
                    .collect();
                writeln_out(out, &format!("level {}: {}", level_name(h), row.join(", ")));
            }
            Ok(())
        }
        Format::Json => {
            let levels: Vec<_> = (0..d.level_count())
                .map(|h| {
                    let mults = d.level_multiplicities(h);
                    let vs: Vec<_> = d
                        .level(h)
                        .iter()
                        .zip(&mults)
                        .map(|(sp, m)| json!({"partition": sp.to_string(), "multiplicity": show_laurent(m, b.out.q)}))
                        .collect();
                    json!({"level": level_name(h), "vertices": vs})
                })
                .collect();
            emit_json(out, &json!({"n": d.n(), "k": d.k(), "edges": d.edge_count(), "levels": levels}))
        }
    }
}

fn show_path(p: &Path) -> String {
    let parts: Vec<String> = p.steps().iter().map(show_partition).collect();
    format!("({})", parts.join(", "))
}

fn collect_paths(d: &BratteliDiagram, shape: &str, k: usize) -> Result<Vec<Path>, Failure> {
    let lambda = parse_partition(shape, d.n())?;
    Ok(d.paths_to(&lambda, k)?.collect())
}

fn run_paths(p: Paths, exec: Exec, out: &mut Vec<u8>) -> Outcome {
    let d = load_diagram(p.n, p.k, &p.cache, exec)?;
    let paths = collect_paths(&d, &p.shape, p.k)?;
    let lambda = parse_partition(&p.shape, p.n)?;
    let mult = d.multiplicity(&lambda, p.k);
    match p.out.format {
        Format::Text => {
            for path in &paths {
                if p.weights {
                    let w = d.path_weight(path)?;
                    writeln_out(out, &format!("{}\t{}", show_path(path), show_monomial(&w, p.out.q)));
                } else {
                    writeln_out(out, &show_path(path));
                }
            }
            writeln_out(out, &format!("paths={} multiplicity={}", paths.len(), show_laurent(&mult, p.out.q)));
            Ok(())
        }
        Format::Json => {
            let mut rows = Vec::new();
            for path in &paths {
                let steps: Vec<String> = path.steps().iter().map(|s| s.to_string()).collect();
                let mut row = json!({"steps": steps});
                if p.weights {
                    row["weight"] = show_monomial(&d.path_weight(path)?, p.out.q).into();
                }
                rows.push(row);
            }
            emit_json(out, &json!({"n": p.n, "k": p.k, "shape": lambda.to_string(), "multiplicity": show_laurent(&mult, p.out.q), "paths": rows}))
        }
    }
}

fn run_tableaux(t: Tableaux, exec: Exec, out: &mut Vec<u8>) -> Outcome {
    if t.semi_strict && t.out.q != Some(2) {
        return Err(Failure::Domain("--semi-strict counts tableaux at q = 2; pass --q 2".into()));
    }
    let d = load_diagram(t.n, t.k, &t.cache, exec)?;
    let paths = collect_paths(&d, &t.shape, t.k)?;
    let per_path: Vec<Result<Vec<ShellTableau>, Error>> = exec.map(&paths, |p| {
        if t.semi_strict {
            semistrict_expansions(p)
        } else {
            path_to_tableau(p).map(|x| vec![x])
        }
    });
    let mut all = Vec::new();
    for r in per_path {
        all.extend(r?);
    }
    match t.out.format {
        Format::Text => {
            for x in &all {
                writeln_out(out, &x.to_string());
            }
            writeln_out(out, &format!("count={}", all.len()));
            Ok(())
        }
        Format::Json => {
            let list: Vec<_> = all.iter().map(ShellTableau::shells).collect();
            emit_json(out, &list)
        }
    }
}

fn run_verify(v: Verify, exec: Exec, out: &mut Vec<u8>) -> Outcome {
    let suite: Suite = v.suite.parse().map_err(Failure::Domain)?;
    let report = verify(suite, v.n, v.q, exec)?;
    if let Some(path) = &v.report {
        write_file(path, &(serde_json::to_string_pretty(&report).expect("serializable") + "\n"))?;
    }
    match v.format {
        Format::Json => emit_json(out, &report)?,
        Format::Text => {
            for c in report.failures() {
                writeln_out(out, &format!("FAIL {} {}: expected {} got {}", c.suite, c.check, c.expected, c.actual));
            }
            let passed = report.checks.iter().filter(|c| c.pass).count();
            let status = if report.pass { "PASS" } else { "FAIL" };
            writeln_out(
                out,
                &format!("{status} suite={} n={} q={} checks={passed}/{}", report.suite, report.n, report.q, report.checks.len()),
            );
        }
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
