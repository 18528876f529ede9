mod input;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperlattice::enumerate::hasse::{build_hasse_by_corner_sums, build_hasse_latin};
use hyperlattice::verify::{run_all, run_criterion, VerifyOptions, CRITERIA};
use hyperlattice::*;
use serde_json::{json, Value};

use input::{read_operand, symbol_grid, Format, Operand};

#[derive(Parser, Debug)]
#[command(name = "hyperlattice", version, about = "Latin squares, alternating sign hypermatrices and the corner-sum lattice")]
struct Cli {
    /// Emit JSON on stdout, and JSON errors on stderr.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel enumeration; 0 picks automatically.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Input format; inferred from the file extension or the text when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert an operand to another representation.
    Convert {
        input: String,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Run every validity predicate on an operand.
    Check { input: String },
    /// Compare two operands in the Bruhat order and give a T-block witness.
    Compare { a: String, b: String },
    /// Greatest lower bound in the corner-sum lattice.
    Meet { a: String, b: String },
    /// Least upper bound in the corner-sum lattice.
    Join { a: String, b: String },
    /// The minimum and maximum of the corner-sum lattice of order n.
    Extremes { n: usize },
    /// Weight and rank of an operand.
    Rank { input: String },
    /// List every object of a kind and order as JSON lines.
    Enumerate {
        #[arg(long)]
        kind: ElementKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Hasse graph of an enumerated poset.
    Hasse {
        #[arg(long)]
        kind: ElementKind,
        #[arg(long)]
        n: usize,
        /// Write DOT here; DOT goes to stdout when neither output is given.
        #[arg(long)]
        dot: Option<String>,
        /// Write the JSON adjacency form here.
        #[arg(long = "json-out")]
        json_out: Option<String>,
    },
    /// Report on whether the corner-sum lattice is the completion of the Latin squares.
    DmWitness { n: usize },
    /// Run the acceptance checks up to order n.
    VerifyAll {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Include the order-5 ASHM count.
        #[arg(long)]
        long: bool,
        /// Run one criterion only.
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Latin,
    Hypermatrix,
    CornerSum,
    Triangle,
    Grid,
    Json,
}

enum Failure {
    Usage(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::OrderTooSmall { .. } | Error::OrderTooLarge(_) => Failure::Usage(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<ExitCode, Failure>;

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("values serialize"));
        } else {
            print!("{}", text());
        }
    }
}

fn grid(a: &Hypermatrix) -> String {
    format!("{}\n", grid_notation(a))
}

fn tagged_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("values serialize")
}

fn operand_value(op: &Operand) -> Value {
    match op {
        Operand::Latin(l) => tagged_value(l),
        Operand::Hyper(a) => tagged_value(a),
        Operand::CornerSum(c) => tagged_value(c),
        Operand::Matrix(m) => tagged_value(m),
        Operand::Triangle(t) => tagged_value(t),
    }
}

fn describe_block(t: &TBlock3D) -> String {
    format!("{}T(i {}..{}, j {}..{}, k {}..{})", if t.sign > 0 { "+" } else { "-" }, t.i.0, t.i.1, t.j.0, t.j.1, t.k.0, t.k.1)
}

fn convert(out: &Out, op: &Operand, to: Target) -> Outcome {
    let (value, text) = match to {
        Target::Latin => {
            let l = match op {
                Operand::Latin(l) => l.clone(),
                other => LatinSquare::from_hypermatrix(&other.hypermatrix()?)?,
            };
            (tagged_value(&l), format!("{l}"))
        }
        Target::Hypermatrix => {
            let a = op.hypermatrix()?;
            let v = tagged_value(&a);
            let t = format!("{v}\n");
            (v, t)
        }
        Target::CornerSum => {
            let c = op.corner_sum()?;
            let v = tagged_value(&c);
            let t = format!("{v}\n");
            (v, t)
        }
        Target::Triangle => {
            let t = match op {
                Operand::Triangle(t) => t.clone(),
                other => to_triangle(&other.hypermatrix()?)?,
            };
            (tagged_value(&t), t.render())
        }
        Target::Grid => {
            let a = op.hypermatrix()?;
            let rows = grid_notation(&a).to_string_rows();
            (json!({ "kind": "grid", "n": a.order(), "rows": rows }), grid(&a))
        }
        Target::Json => {
            let v = operand_value(op);
            let t = format!("{v}\n");
            (v, t)
        }
    };
    out.emit(value, || text);
    Ok(ExitCode::SUCCESS)
}

fn check(out: &Out, source: &str, format: Option<Format>) -> Outcome {
    let mut report = serde_json::Map::new();
    let mut ok = true;
    let mut text = String::new();
    if matches!(format, None | Some(Format::Latin)) {
        if let Some(g) = symbol_grid(source) {
            let violation = latin_violation(&g);
            ok &= violation.is_none();
            let _ = writeln!(text, "latin: {}", violation.as_ref().map_or("yes".to_string(), |v| format!("no, {v}")));
            report.insert("kind".into(), json!("latin"));
            report.insert("latin".into(), json!(violation.is_none()));
            report.insert("latin_violation".into(), tagged_value(&violation));
            if violation.is_some() {
                report.insert("valid".into(), json!(false));
                out.emit(Value::Object(report), || text);
                return Ok(ExitCode::from(1));
            }
        }
    }
    let op = read_operand(source, format)?;
    report.insert("kind".into(), json!(op.kind()));
    let mut flag = |name: &str, value: bool, text: &mut String| {
        report.insert(name.into(), json!(value));
        let _ = writeln!(text, "{}: {}", name.replace('_', " "), if value { "yes" } else { "no" });
    };
    match &op {
        Operand::Matrix(m) => {
            flag("asm", is_asm(m), &mut text);
            flag("permutation_matrix", is_permutation_matrix(m), &mut text);
            ok &= is_asm(m);
        }
        Operand::Triangle(t) => {
            let v = t.violation();
            flag("monotone_hypertriangle", v.is_none(), &mut text);
            flag("interlacing", check_interlacing(t), &mut text);
            if let Some(v) = &v {
                let _ = writeln!(text, "violation: {v}");
                report.insert("triangle_violation".into(), tagged_value(v));
            }
            ok &= v.is_none();
        }
        _ => {
            let a = op.hypermatrix()?;
            let in_preimage = is_in_xi_preimage(&a);
            flag("permutation_hypermatrix", is_permutation_hypermatrix(&a), &mut text);
            flag("ashm", is_ashm(&a), &mut text);
            flag("pashm", is_pashm(&a), &mut text);
            flag("corner_sum_preimage", in_preimage, &mut text);
            flag("partial_sum_bounds", check_partial_sum_bounds(&a), &mut text);
            if let Some(v) = corner_sum_violation(&xi(&a)) {
                let _ = writeln!(text, "corner-sum violation: {v}");
                report.insert("corner_sum_violation".into(), json!(v));
            }
            ok &= in_preimage;
        }
    }
    report.insert("valid".into(), json!(ok));
    out.emit(Value::Object(report), || text);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn compare(out: &Out, a: &Operand, b: &Operand) -> Outcome {
    let (ha, hb) = (a.hypermatrix()?, b.hypermatrix()?);
    let (ab, ba) = (bruhat_leq(&ha, &hb)?, bruhat_leq(&hb, &ha)?);
    let verdict = match (ab, ba) {
        (true, true) => "A = B",
        (true, false) => "A ≼_B B",
        (false, true) => "B ≼_B A",
        (false, false) => "A and B are incomparable",
    };
    let witness = match (ab, ba) {
        (true, false) => Some(greedy_tblock_witness(&ha, &hb)?),
        (false, true) => Some(greedy_tblock_witness(&hb, &ha)?),
        _ => None,
    };
    let merged = witness.as_ref().map(|w| merge_tblocks(&w.steps));
    let value = json!({
        "verdict": verdict,
        "a_leq_b": ab,
        "b_leq_a": ba,
        "witness": witness,
        "merged_witness": merged,
    });
    out.emit(value, || {
        let mut s = format!("{verdict}\n");
        if let (Some(w), Some(m)) = (&witness, &merged) {
            let _ = writeln!(s, "witness: {} contiguous T-blocks, {} after merging", w.steps.len(), m.len());
            for t in m {
                let _ = writeln!(s, "  {}", describe_block(t));
            }
        }
        s
    });
    Ok(ExitCode::SUCCESS)
}

fn bound(out: &Out, a: &Operand, b: &Operand, is_meet: bool) -> Outcome {
    let (ca, cb) = (a.corner_sum()?, b.corner_sum()?);
    let c = if is_meet { meet(&ca, &cb)? } else { join(&ca, &cb)? };
    let h = c.to_hypermatrix();
    out.emit(json!({ "result": tagged_value(&c), "hypermatrix": tagged_value(&h) }), || grid(&h));
    Ok(ExitCode::SUCCESS)
}

fn extremes(out: &Out, n: usize) -> Outcome {
    if n == 0 || n > MAX_ORDER {
        return Err(Failure::Usage(format!("order must lie in 1..={MAX_ORDER}")));
    }
    let (lo, hi) = (minimum_element(n), maximum_element(n));
    out.emit(
        json!({ "minimum": tagged_value(&lo), "maximum": tagged_value(&hi), "lattice_rank": lattice_rank(n) }),
        || format!("minimum\n{}maximum\n{}rank {}\n", grid(&lo.to_hypermatrix()), grid(&hi.to_hypermatrix()), lattice_rank(n)),
    );
    Ok(ExitCode::SUCCESS)
}

fn rank(op: &Operand) -> Outcome {
    let profile = rank_profile(&op.hypermatrix()?)?;
    println!("{}", serde_json::to_string(&profile).expect("profiles serialize"));
    Ok(ExitCode::SUCCESS)
}

fn print_lines<T: serde::Serialize>(items: &[T]) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut lock = std::io::BufWriter::new(stdout.lock());
    for x in items {
        let _ = writeln!(lock, "{}", serde_json::to_string(x).expect("elements serialize"));
    }
}

fn enumerate(out: &Out, kind: ElementKind, n: usize, count_only: bool) -> Outcome {
    let opts = EnumOptions { limits: Limits::from_env()?, count_only };
    let count = match kind {
        ElementKind::Latin => emit_elements(enumerate_latin(n, &opts)?),
        ElementKind::Asm => emit_elements(enumerate_asms(n, &opts)?),
        ElementKind::Ashm => emit_elements(enumerate_ashm(n, &opts)?),
        ElementKind::Pashm => emit_elements(enumerate_pashm(n, &opts)?),
        ElementKind::CornerSum => emit_elements(enumerate_corner_sum(n, &opts)?),
        ElementKind::Triangle => emit_elements(enumerate_monotone_hypertriangles(n, &opts)?),
    };
    if count_only {
        out.emit(json!({ "kind": kind, "n": n, "count": count }), || format!("{count}\n"));
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_elements<T: serde::Serialize>(r: EnumerationResult<T>) -> u64 {
    if let Some(items) = &r.elements {
        print_lines(items);
    }
    r.count
}

fn hasse(kind: ElementKind, n: usize, dot: Option<String>, json_out: Option<String>) -> Outcome {
    let opts = EnumOptions::with_limits(Limits::from_env()?);
    let graph = match kind {
        ElementKind::Latin => build_hasse_latin(&enumerate_latin(n, &opts)?.into_elements()),
        ElementKind::CornerSum => build_hasse_lattice(&enumerate_corner_sum(n, &opts)?.into_elements()),
        ElementKind::Ashm => build_hasse_by_corner_sums(kind, enumerate_ashm(n, &opts)?.into_elements()),
        ElementKind::Pashm => build_hasse_by_corner_sums(kind, enumerate_pashm(n, &opts)?.into_elements()),
        ElementKind::Triangle => {
            let nodes = enumerate_monotone_hypertriangles(n, &opts)?
                .into_elements()
                .iter()
                .map(from_triangle)
                .collect::<Result<Vec<_>>>()?;
            build_hasse_by_corner_sums(kind, nodes)
        }
        ElementKind::Asm => return Err(Failure::Usage("hasse supports latin, ashm, pashm, corner-sum and triangle".into())),
    };
    let write = |path: &str, body: String| std::fs::write(path, body).map_err(|e| Failure::Invalid(format!("cannot write {path}: {e}")));
    if let Some(path) = &dot {
        write(path, graph.to_dot())?;
    }
    if let Some(path) = &json_out {
        write(path, serde_json::to_string_pretty(&graph.to_json()).expect("graphs serialize"))?;
    }
    if dot.is_none() && json_out.is_none() {
        print!("{}", graph.to_dot());
    }
    let check = is_lattice(&graph);
    eprintln!("{} nodes, {} edges, lattice: {}", graph.node_count(), graph.edge_count(), if check.is_lattice { "yes" } else { "no" });
    Ok(ExitCode::SUCCESS)
}

fn dm_witness(out: &Out, n: usize) -> Outcome {
    let report = dm_witness_report(n)?;
    let confirmed = report.confirmed();
    out.emit(tagged_value(&report), || {
        let summary = match &report {
            DmReport::CompletionHolds { report, .. } => format!(
                "order {n}: the completion of the Latin squares has {} elements and is isomorphic to the corner-sum lattice: {}\n",
                report.cuts, report.holds
            ),
            DmReport::NotCompletion { report, .. } => format!(
                "order {n}: U_{n} covers only the minimum: {}; its preimage has entry {} at {:?}, so it is not a Latin square\n",
                report.covers_only_minimum, report.non_latin_entry.value, report.non_latin_entry.position
            ),
        };
        summary
    });
    Ok(if confirmed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn verify_all(out: &Out, n: usize, long: bool, criterion: Option<u8>) -> Outcome {
    let opts = VerifyOptions { max_n: n, long, ..VerifyOptions::default() };
    let reports = match criterion {
        Some(id) => vec![run_criterion(id, &opts).ok_or_else(|| Failure::Usage(format!("criteria are numbered 1..={CRITERIA}")))?],
        None => run_all(&opts),
    };
    let passed = reports.iter().all(|r| r.passed());
    out.emit(json!({ "passed": passed, "criteria": reports }), || {
        let mut s = String::new();
        for r in &reports {
            let _ = writeln!(s, "{}", r.summary_line());
            for f in r.failures() {
                let _ = writeln!(s, "    {}: {:?}", f.label, f.status);
            }
        }
        s
    });
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Outcome {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot configure threads: {e}")))?;
    }
    let out = Out { json: cli.json };
    let read = |s: &str| read_operand(s, cli.format);
    match cli.command {
        Command::Convert { input, to } => convert(&out, &read(&input)?, to),
        Command::Check { input } => check(&out, &input, cli.format),
        Command::Compare { a, b } => compare(&out, &read(&a)?, &read(&b)?),
        Command::Meet { a, b } => bound(&out, &read(&a)?, &read(&b)?, true),
        Command::Join { a, b } => bound(&out, &read(&a)?, &read(&b)?, false),
        Command::Extremes { n } => extremes(&out, n),
        Command::Rank { input } => rank(&read(&input)?),
        Command::Enumerate { kind, n, count_only } => enumerate(&out, kind, n, count_only),
        Command::Hasse { kind, n, dot, json_out } => hasse(kind, n, dot, json_out),
        Command::DmWitness { n } => dm_witness(&out, n),
        Command::VerifyAll { n, long, criterion } => verify_all(&out, n, long, criterion),
    }
}

fn report_error(json: bool, kind: &str, message: &str) {
    if json {
        eprintln!("{}", json!({ "error": { "kind": kind, "message": message } }));
    } else {
        eprintln!("error: {message}");
    }
}

fn main() -> ExitCode {
    let wants_json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            if wants_json {
                report_error(true, "usage", e.to_string().trim());
                return ExitCode::from(2);
            }
            e.exit()
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            report_error(json, "usage", &m);
            ExitCode::from(2)
        }
        Err(Failure::Invalid(m)) => {
            report_error(json, "validation", &m);
            ExitCode::from(1)
        }
    }
}
