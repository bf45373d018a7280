use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mrook_core::board::{
    is_m_increasing, is_m_restricted, is_singleton, level_counts, minimal_bounding_n, zones,
};
use mrook_core::catalan::{
    board_stats, class_dinv_brute_force, class_dinv_generating_function, phi_construction, qt_catalan,
    qt_catalan_bounce, term_table, BoundedBoard,
};
use mrook_core::equivalence::{
    count_singleton_class, count_weight_class, enumerate_class, m_increasing_representative,
    m_restricted_representative, m_restricted_singleton_representative, relation_vector, Relation,
};
use mrook_core::factorization::{verify_mft, verify_mwft, verify_pqmft, FactorizationReport, PqMode};
use mrook_core::hitnumbers::{hit_numbers, m_level_hit_numbers, positivity_scan, pq_hit_numbers};
use mrook_core::partitions::boards_in_rectangle;
use mrook_core::suites::{run_suites, Sweep, SUITES};
use mrook_core::FerrersBoard;
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] mrook_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact m-level rook theory on Ferrers boards.
#[derive(Debug, Parser)]
#[command(name = "mrook", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BoardArgs {
    /// Column heights, e.g. 1,3,3
    #[arg(long, allow_hyphen_values = true)]
    board: String,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Theorem {
    Mft,
    Mwft,
    Pqmft,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Canon {
    Level,
    Weight,
    RestrictedSingleton,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassOp {
    Size,
    List,
    Qgen,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RelationArg {
    Level,
    Weight,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CatalanOp {
    Stats,
    Phi,
    Poly,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum HitOp {
    Classic,
    Mlevel,
    Pq,
    Scan,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Zones, shape flags, r-vector and f-vector of a board.
    Analyze(BoardArgs),
    /// Checks a factorization identity against brute-force counts.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        board: BoardArgs,
        /// Comma-separated x values for the numeric p,q check.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "symbolic")]
        x_values: Option<Vec<i64>>,
        /// Formal p,q check (the default for pqmft).
        #[arg(long)]
        symbolic: bool,
    },
    /// Canonical representative of the board's class.
    Canon {
        #[arg(value_enum)]
        kind: Canon,
        #[command(flatten)]
        board: BoardArgs,
    },
    /// Class sizes, members and dinv generating function.
    Class {
        #[arg(value_enum)]
        op: ClassOp,
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, value_enum, default_value_t = RelationArg::Weight)]
        relation: RelationArg,
        /// Number of columns of the bounding triangle for qgen.
        #[arg(long)]
        n: Option<usize>,
        /// Cross-check against exhaustive enumeration.
        #[arg(long)]
        check: bool,
    },
    /// Statistics, bounce bijection and q,t-Catalan polynomial.
    Catalan {
        #[arg(value_enum)]
        op: CatalanOp,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        board: Option<String>,
        /// Cross-check the polynomial against its bounce form.
        #[arg(long)]
        check: bool,
    },
    /// Hit numbers and the positivity scan.
    Hit {
        #[arg(value_enum)]
        op: HitOp,
        #[arg(long, allow_hyphen_values = true)]
        board: Option<String>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        /// Specialize p = 1.
        #[arg(long)]
        p1: bool,
        /// Scan only singleton boards.
        #[arg(long)]
        singleton: bool,
        /// Write scan records as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Runs invariant suites over exhaustive sweeps.
    Sweep {
        #[arg(long, default_value_t = 10)]
        max_cells: u32,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        m_max: u32,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        hit_max: usize,
        #[arg(long, default_value_t = 7)]
        pq_max_cells: u32,
        #[arg(long, default_value_t = 6)]
        pq_hit_max: usize,
        /// Comma-separated suite names, or all.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
    },
}

struct Output {
    command: String,
    board: Option<String>,
    fields: Map<String, Value>,
    /// Emitted in JSON only.
    details: Map<String, Value>,
    ok: bool,
}

impl Output {
    fn new(command: impl Into<String>, board: Option<&str>) -> Self {
        Output { command: command.into(), board: board.map(str::to_string), fields: Map::new(), details: Map::new(), ok: true }
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_string(), value.into());
    }

    fn detail(&mut self, key: &str, value: Value) {
        self.details.insert(key.to_string(), value);
    }

    fn emit(self, format: Format, out: &mut impl Write) -> CliResult<()> {
        match format {
            Format::Json => {
                let mut doc = Map::new();
                doc.insert("command".into(), Value::String(self.command));
                if let Some(b) = self.board {
                    doc.insert("board".into(), Value::String(b));
                }
                doc.insert("ok".into(), Value::Bool(self.ok));
                let mut result = self.fields;
                result.extend(self.details);
                doc.insert("result".into(), Value::Object(result));
                writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(doc))?)?;
            }
            Format::Text => {
                match &self.board {
                    Some(b) => writeln!(out, "# {} board={b}", self.command)?,
                    None => writeln!(out, "# {}", self.command)?,
                }
                for (key, value) in &self.fields {
                    match value {
                        Value::Object(inner) => {
                            writeln!(out, "{key}:")?;
                            for (k, v) in inner {
                                writeln!(out, "  {k}: {}", render(v))?;
                            }
                        }
                        _ => writeln!(out, "{key}: {}", render(value))?,
                    }
                }
            }
        }
        Ok(())
    }
}

fn render(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|v| v.is_string() && v.as_str().is_some_and(|s| s.is_empty() || s.contains(','))) && !items.is_empty() => {
            items.iter().map(|v| format!("({})", render(v))).collect::<Vec<_>>().join(" ")
        }
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            items.iter().map(render).collect::<Vec<_>>().join(",")
        }
        Value::Null | Value::Bool(_) | Value::Number(_) => value.to_string(),
        other => other.to_string(),
    }
}

fn strings<T: ToString>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|x| Value::String(x.to_string())).collect())
}

fn parse_board(text: &str) -> CliResult<FerrersBoard> {
    Ok(text.parse::<FerrersBoard>()?)
}

fn relation(arg: RelationArg) -> Relation {
    match arg {
        RelationArg::Level => Relation::Level,
        RelationArg::Weight => Relation::Weight,
    }
}

fn run(cli: Cli, out: &mut impl Write) -> CliResult<bool> {
    let output = match cli.command {
        Command::Analyze(args) => analyze(&args)?,
        Command::Verify { theorem, board, x_values, symbolic: _ } => verify(theorem, &board, x_values)?,
        Command::Canon { kind, board } => canon(kind, &board)?,
        Command::Class { op, board, relation, n, check } => class(op, &board, relation, n, check)?,
        Command::Catalan { op, n, m, board, check } => catalan(op, n, m, board.as_deref(), check)?,
        Command::Hit { op, board, n, m, p1, singleton, csv } => {
            if csv && matches!(op, HitOp::Scan) {
                scan_csv(n, m, p1, singleton, out)?;
                return Ok(true);
            }
            hit(op, board.as_deref(), n, m, p1, singleton)?
        }
        Command::Sweep { max_cells, m_max, n_max, hit_max, pq_max_cells, pq_hit_max, suite } => {
            sweep(Sweep { max_cells, pq_max_cells, m_max, n_max, hit_max, pq_hit_max }, &suite)?
        }
    };
    let ok = output.ok;
    output.emit(cli.format, out)?;
    Ok(ok)
}

fn analyze(args: &BoardArgs) -> CliResult<Output> {
    let b = parse_board(&args.board)?;
    let m = args.m;
    let mut o = Output::new("analyze", Some(&args.board));
    o.set("m", m);
    let z: Vec<Value> = zones(&b, m)
        .iter()
        .map(|z| json!({ "start": z.start, "end": z.end, "floor": z.floor_value, "remainder": z.remainder }))
        .collect();
    o.set(
        "zones",
        z.iter()
            .map(|z| format!("[{},{}]:{}", z["start"], z["end"], z["remainder"]))
            .collect::<Vec<_>>()
            .join(" "),
    );
    o.detail("zone_details", Value::Array(z));
    o.set("singleton", is_singleton(&b, m));
    o.set("m_increasing", is_m_increasing(&b, m));
    o.set("m_restricted", is_m_restricted(&b, m));
    o.set("level_counts", level_counts(&b, m));
    o.set("cells", b.cell_count());
    o.set("minimal_n", minimal_bounding_n(&b, m));
    o.set("r_vector", strings(&relation_vector(&b, m, Relation::Level)));
    o.set("f_vector", strings(&relation_vector(&b, m, Relation::Weight)));
    Ok(o)
}

fn verify(theorem: Theorem, args: &BoardArgs, x_values: Option<Vec<i64>>) -> CliResult<Output> {
    let b = parse_board(&args.board)?;
    let report: FactorizationReport = match theorem {
        Theorem::Mft => verify_mft(&b, args.m)?,
        Theorem::Mwft => verify_mwft(&b, args.m)?,
        Theorem::Pqmft => match &x_values {
            Some(xs) => verify_pqmft(&b, args.m, PqMode::Numeric(xs))?,
            None => verify_pqmft(&b, args.m, PqMode::Symbolic)?,
        },
    };
    let name = match theorem {
        Theorem::Mft => "verify mft",
        Theorem::Mwft => "verify mwft",
        Theorem::Pqmft => "verify pqmft",
    };
    let mut o = Output::new(name, Some(&args.board));
    o.ok = report.matches;
    o.set("m", args.m);
    o.set("match", report.matches);
    o.set("factors", report.factors.iter().map(|f| format!("({f})")).collect::<String>());
    o.detail("report", serde_json::to_value(&report)?);
    Ok(o)
}

fn canon(kind: Canon, args: &BoardArgs) -> CliResult<Output> {
    let b = parse_board(&args.board)?;
    let (name, rep) = match kind {
        Canon::Level => ("canon level", m_increasing_representative(&b, args.m)?),
        Canon::Weight => ("canon weight", m_restricted_representative(&b, args.m)?),
        Canon::RestrictedSingleton => {
            ("canon restricted-singleton", m_restricted_singleton_representative(&b, args.m)?)
        }
    };
    let mut o = Output::new(name, Some(&args.board));
    o.set("m", args.m);
    o.set("representative", rep.to_string());
    Ok(o)
}

fn class(op: ClassOp, args: &BoardArgs, rel: RelationArg, n: Option<usize>, check: bool) -> CliResult<Output> {
    let b = parse_board(&args.board)?;
    let m = args.m;
    let rel = relation(rel);
    let rel_name = match rel {
        Relation::Level => "level",
        Relation::Weight => "weight",
    };
    let mut o;
    match op {
        ClassOp::Size => {
            o = Output::new("class size", Some(&args.board));
            let formula = match rel {
                Relation::Level => count_singleton_class(&b, m)?,
                Relation::Weight => count_weight_class(&b, m)?,
            };
            o.set("size", formula.to_string());
            if check {
                let members = enumerate_class(&b.trim(), m, rel);
                let brute = match rel {
                    Relation::Level => members.iter().filter(|c| is_singleton(c, m)).count(),
                    Relation::Weight => members.len(),
                };
                o.set("enumerated", brute);
                o.ok = formula == brute.into();
                o.set("match", o.ok);
            }
        }
        ClassOp::List => {
            o = Output::new("class list", Some(&args.board));
            let members = enumerate_class(&b.trim(), m, rel);
            o.set("count", members.len());
            o.set("members", strings(&members));
        }
        ClassOp::Qgen => {
            if rel != Relation::Weight {
                return Err(CliError::Usage("qgen is defined for the weight relation".into()));
            }
            o = Output::new("class qgen", Some(&args.board));
            let n = n.unwrap_or_else(|| minimal_bounding_n(&b, m));
            let poly = class_dinv_generating_function(&b, n, m)?;
            o.set("n", n);
            o.set("generating_function", poly.to_string());
            if check {
                let brute = class_dinv_brute_force(&b, n, m)?;
                o.set("enumerated", brute.to_string());
                o.ok = brute == poly;
                o.set("match", o.ok);
            }
        }
    }
    o.set("m", m);
    o.set("relation", rel_name);
    Ok(o)
}

fn catalan(op: CatalanOp, n: usize, m: u32, board: Option<&str>, check: bool) -> CliResult<Output> {
    let bounded = |text: Option<&str>| -> CliResult<BoundedBoard> {
        let text = text.ok_or_else(|| CliError::Usage("--board is required".into()))?;
        Ok(BoundedBoard::new(&parse_board(text)?, n, m)?)
    };
    let mut o;
    match op {
        CatalanOp::Stats => {
            let bb = bounded(board)?;
            o = Output::new("catalan stats", board);
            let stats = board_stats(&bb)?;
            o.set("omega", stats.omega.clone());
            o.set("area", stats.area);
            o.set("dinv", stats.dinv);
            o.set("bounce", stats.bounce);
            o.set("bounce_composition", stats.bounce_path.composition());
        }
        CatalanOp::Phi => {
            let bb = bounded(board)?;
            o = Output::new("catalan phi", board);
            let c = phi_construction(&bb)?;
            o.set("image", c.image.board().to_string());
            o.set(
                "rectangles",
                c.rectangles.iter().map(|r| r.steps.clone()).collect::<Vec<_>>().join(" "),
            );
            o.detail("construction", serde_json::to_value(&c)?);
        }
        CatalanOp::Poly => {
            o = Output::new("catalan poly", board);
            let poly = qt_catalan(n, m);
            o.set("polynomial", poly.to_string());
            o.set("at_one", poly.eval_at_ones().to_string());
            let table: Vec<Value> = term_table(&poly)
                .into_iter()
                .map(|(a, b, c)| json!({ "q": a, "t": b, "coefficient": c.to_string() }))
                .collect();
            o.detail("terms", Value::Array(table));
            if check {
                o.ok = qt_catalan_bounce(n, m)? == poly;
                o.set("match", o.ok);
            }
        }
    }
    o.set("n", n);
    o.set("m", m);
    Ok(o)
}

fn scan_boards(n: usize, m: u32, singleton: bool) -> Vec<FerrersBoard> {
    boards_in_rectangle(n, n as u32 * m).into_iter().filter(|b| !singleton || is_singleton(b, m)).collect()
}

fn hit(op: HitOp, board: Option<&str>, n: usize, m: u32, p1: bool, singleton: bool) -> CliResult<Output> {
    let need = |text: Option<&str>| -> CliResult<FerrersBoard> {
        parse_board(text.ok_or_else(|| CliError::Usage("--board is required".into()))?)
    };
    let mut o;
    match op {
        HitOp::Classic => {
            let h = hit_numbers(&need(board)?, n)?;
            o = Output::new("hit classic", board);
            o.set("hits", strings(&h.entries));
            o.set("total", h.total().to_string());
        }
        HitOp::Mlevel => {
            let h = m_level_hit_numbers(&need(board)?, n, m)?;
            o = Output::new("hit mlevel", board);
            o.set("hits", strings(&h.entries));
            o.set("total", h.total().to_string());
        }
        HitOp::Pq => {
            let h = pq_hit_numbers(&need(board)?, n, m)?;
            o = Output::new("hit pq", board);
            let entries = h
                .entries
                .iter()
                .map(|e| if p1 { e.specialize_to_one("p") } else { Ok(e.clone()) })
                .collect::<Result<Vec<_>, _>>()?;
            let mut map = Map::new();
            for (k, e) in entries.iter().enumerate() {
                map.insert(format!("h_{k}"), Value::String(e.to_string()));
            }
            o.set("nonnegative", entries.iter().all(|e| !e.has_negative_coefficient()));
            o.set("hits", Value::Object(map));
        }
        HitOp::Scan => {
            let records = positivity_scan(&scan_boards(n, m, singleton), n, m, p1)?;
            o = Output::new("hit scan", board);
            let negative: Vec<_> = records.iter().filter(|r| r.negative_found).collect();
            o.set("boards", records.len());
            o.set("negative", negative.len());
            o.set(
                "witnesses",
                Value::Array(
                    negative
                        .iter()
                        .map(|r| {
                            json!({
                                "board": r.board.to_string(),
                                "k": r.witness_k,
                                "monomial": r.witness_monomial,
                            })
                        })
                        .collect(),
                ),
            );
        }
    }
    o.set("n", n);
    o.set("m", m);
    o.set("p1", p1);
    Ok(o)
}

fn scan_csv(n: usize, m: u32, p1: bool, singleton: bool, out: &mut impl Write) -> CliResult<()> {
    let records = positivity_scan(&scan_boards(n, m, singleton), n, m, p1)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["board", "n", "m", "negative_found", "witness_k", "witness_monomial"])?;
    for r in records {
        w.write_record([
            r.board.to_string(),
            r.n.to_string(),
            r.m.to_string(),
            r.negative_found.to_string(),
            r.witness_k.map(|k| k.to_string()).unwrap_or_default(),
            r.witness_monomial.unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn sweep(bounds: Sweep, names: &[String]) -> CliResult<Output> {
    for name in names {
        if name != "all" && !SUITES.contains(&name.as_str()) {
            return Err(CliError::Usage(format!("unknown suite {name:?}; known: all, {}", SUITES.join(", "))));
        }
    }
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let reports = run_suites(&names, &bounds)?;
    let mut o = Output::new("sweep", None);
    o.set("bounds", serde_json::to_value(bounds)?);
    let mut summary = Map::new();
    let mut failed = 0;
    for r in &reports {
        if !r.passed() {
            failed += 1;
        }
        let line = format!("{} checked, {} failures", r.checked, r.failures.len());
        summary.insert(r.name.clone(), Value::String(line));
    }
    o.ok = failed == 0;
    o.set("suites", Value::Object(summary));
    o.set("failed_suites", failed);
    let failures: Vec<Value> = reports
        .iter()
        .flat_map(|r| r.failures.iter().take(20).map(move |f| Value::String(format!("{}: {f}", r.name))))
        .collect();
    o.set("failures", Value::Array(failures));
    o.set("status", if failed == 0 { "PASS" } else { "FAIL" });
    Ok(o)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
