//! Command-line front end. [`run`] parses arguments, dispatches and writes
//! the result; exit codes are 0 for success, 1 for a computed negative
//! result (infeasible, mismatch) and 2 for usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::iproduct;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::bounds::{
    class_number_limit, class_number_lower, ihara_bassa, ihara_gs, mu0, torsion_limit_upper, Decomposition, TorsionCase,
};
use crate::exactmath::ratio::{format_rational, parse_rational};
use crate::exactmath::{
    count_effective_divisors, partition_count_at_most, to_decimal, LogBase, Rational, DEFAULT_DIGITS,
};
use crate::feasibility::{
    asymptotic_check, check_many, check_thm41, check_thm42, generate_table1, AsymptoticOptions, CellStatus, CurveData,
    FeasibilityReport, NumeratorMode, SharingParams, Thm41Options,
};
use crate::scheme::{
    plan_scheme, reconstruct_product, recover_secret, share, star_product, verify_disconnected, verify_reconstruction,
    SchemeError, SchemeParams, DEFAULT_SEED,
};
use crate::towers::{beta_empirical, TowerProfile};

const DECIMAL_PLACES: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "arithss", version, about = "Feasibility checks for arithmetic secret sharing schemes")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class-number, torsion and Ihara bounds.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Number of effective divisors of degree n.
    An {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        n: u64,
    },
    /// Sufficiency checks on explicit curve data.
    #[command(subcommand)]
    Feasible(FeasibleCmd),
    /// Share counts along the example tower, compared with the printed values.
    Table1,
    #[command(subcommand)]
    /// Per-level genus and place bounds of a tower profile.
    Tower(TowerCmd),
    #[command(subcommand)]
    /// Asymptotic feasibility along a tower.
    Asym(AsymCmd),
    /// Genus-0 schemes.
    #[command(subcommand)]
    Scheme(SchemeCmd),
}

#[derive(Debug, Subcommand)]
pub enum BoundsCmd {
    /// Asymptotic r-torsion bound, base-q log units.
    Torsion {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: u64,
    },
    /// Lower bound on the class number of a genus-g curve.
    ClassNumber {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: u64,
    },
    #[command(subcommand)]
    /// Ihara-limit lower bounds from explicit towers.
    Ihara(IharaCmd),
}

#[derive(Debug, Subcommand)]
pub enum IharaCmd {
    /// Square q = l^2: l - 1.
    Gs {
        #[arg(long)]
        q: u64,
    },
    /// q = p^n, n = 2m + 1: 2(p^(m+1) - 1)/(p + 1 + eps).
    Bassa {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Args)]
pub struct FeasibleArgs {
    #[arg(long)]
    pub curve: PathBuf,
    /// Comma-separated lists expand to every combination.
    #[arg(long, value_delimiter = ',', required = true)]
    pub d: Vec<u64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub t: Vec<u64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub k: Vec<u64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<u64>,
    /// Worker threads for multiple cells; 0 picks a default.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Numerator {
    Ceil,
    SqrtDown,
    ObservedB1,
}

#[derive(Debug, Subcommand)]
pub enum FeasibleCmd {
    Thm41 {
        #[command(flatten)]
        args: FeasibleArgs,
        #[arg(long, value_enum, default_value_t = Numerator::Ceil)]
        numerator: Numerator,
    },
    Thm42 {
        #[command(flatten)]
        args: FeasibleArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum TowerCmd {
    /// Genus, B_1 lower bounds and limits per level.
    Info {
        /// JSON file, or one of `example2`, `gs:<ell>`, `bassa:<p>:<n>`.
        #[arg(long)]
        profile: String,
        #[arg(long, default_value_t = 4)]
        levels: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LogChoice {
    Natural,
    Q,
}

#[derive(Debug, Subcommand)]
pub enum AsymCmd {
    /// Torsion and place-count conditions for one parameter choice.
    Check {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        d: u64,
        /// Rational, e.g. `1/2`.
        #[arg(long)]
        mu: String,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = LogChoice::Natural)]
        log: LogChoice,
    },
}

#[derive(Debug, Args)]
pub struct SchemeArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Larger degree cap `T`; re-validated.
    #[arg(long)]
    pub degree_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum SchemeCmd {
    /// Canonical parameters: field, points and degree cap.
    Plan(SchemeArgs),
    /// Share, multiply and reconstruct once.
    Demo {
        #[command(flatten)]
        args: SchemeArgs,
        /// Secret as canonical element indices; random when omitted.
        #[arg(long, value_delimiter = ',')]
        secret: Option<Vec<u64>>,
    },
    /// Check t-disconnection and (n - t)-reconstruction.
    Verify {
        #[command(flatten)]
        args: SchemeArgs,
        /// Check 200 sampled reconstruction sets instead of all of them.
        #[arg(long)]
        sampled: bool,
    },
}

/// `bounds torsion` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionOutput {
    pub q: u64,
    pub r: u64,
    pub case: TorsionCase,
    /// Exact bound, or the upper end rounded up.
    pub bound: String,
    pub exact: bool,
    pub bound_decimal: String,
    pub decomposition: Decomposition,
}

/// `tower info` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerInfo {
    pub profile: TowerProfile,
    pub mu0: String,
    pub class_number_limit: String,
    pub ihara_lower: Option<String>,
    pub levels: Vec<TowerLevel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerLevel {
    pub level: u32,
    pub genus: Option<String>,
    pub b1_lower: Option<String>,
    pub beta1: Option<String>,
}

/// `scheme verify` output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub disconnected: bool,
    pub reconstructing: bool,
}

struct Output {
    json: Value,
    /// Header and rows for csv/text; derived from `json` when absent.
    table: Option<(Vec<String>, Vec<Vec<String>>)>,
    code: i32,
}

impl Output {
    fn ok(json: Value) -> Self {
        Self { json, table: None, code: 0 }
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

type CliResult = Result<Output, String>;

/// Runs the tool on `args` (program name first), writing results to `out`
/// and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(output) => {
            let text = render(&output, cli.format);
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            output.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Bounds(cmd) => bounds(cmd),
        Command::An { curve, n } => effective_divisors(&curve, n),
        Command::Feasible(cmd) => feasible(cmd),
        Command::Table1 => table1(),
        Command::Tower(TowerCmd::Info { profile, levels }) => tower_info(&profile, levels),
        Command::Asym(AsymCmd::Check { profile, d, mu, level, n, k, log }) => {
            let profile = load_profile(&profile)?;
            let mu = parse_rational(&mu)?;
            let base = match log {
                LogChoice::Natural => LogBase::Natural,
                LogChoice::Q => LogBase::Int(profile.q),
            };
            let options = AsymptoticOptions { base, ..Default::default() };
            let report = asymptotic_check(&profile, d, &mu, level, n, k, options).map_err(|e| e.to_string())?;
            let code = if report.is_feasible() { 0 } else { 1 };
            Ok(Output::ok(report_json(&report)).with_code(code))
        }
        Command::Scheme(cmd) => scheme(cmd),
    }
}

fn rational_pair(key: &str, r: &Rational, obj: &mut Map<String, Value>) {
    obj.insert(key.into(), Value::String(format_rational(r)));
    obj.insert(format!("{key}_decimal"), Value::String(to_decimal(r, DECIMAL_PLACES)));
}

fn bounds(cmd: BoundsCmd) -> CliResult {
    match cmd {
        BoundsCmd::Torsion { q, r } => {
            let res = torsion_limit_upper(q, r).map_err(|e| e.to_string())?;
            let upper = res.upper();
            let (bound, exact) = match res.exact() {
                Some(b) => (b.clone(), true),
                None => (upper.value().clone(), false),
            };
            let out = TorsionOutput {
                q,
                r,
                case: res.case,
                bound: format_rational(&bound),
                exact,
                bound_decimal: to_decimal(&bound, DECIMAL_PLACES),
                decomposition: res.decomposition,
            };
            Ok(Output::ok(to_value(&out)))
        }
        BoundsCmd::ClassNumber { q, g } => {
            crate::exactmath::prime_power(q).ok_or(format!("{q} is not a prime power"))?;
            let mut obj = Map::new();
            obj.insert("q".into(), q.into());
            obj.insert("g".into(), g.into());
            rational_pair("h_lower", &class_number_lower(q, g), &mut obj);
            Ok(Output::ok(Value::Object(obj)))
        }
        BoundsCmd::Ihara(IharaCmd::Gs { q }) => {
            let a = ihara_gs(q).map_err(|e| e.to_string())?;
            Ok(Output::ok(json!({"q": q, "ihara": a.to_string()})))
        }
        BoundsCmd::Ihara(IharaCmd::Bassa { p, n }) => {
            let a = ihara_bassa(p, n).map_err(|e| e.to_string())?;
            let mut obj = Map::new();
            obj.insert("p".into(), p.into());
            obj.insert("n".into(), n.into());
            rational_pair("ihara_lower", &a, &mut obj);
            Ok(Output::ok(Value::Object(obj)))
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_curve(path: &Path) -> Result<CurveData, String> {
    CurveData::from_json(&read_file(path)?).map_err(|e| e.to_string())
}

fn load_profile(spec: &str) -> Result<TowerProfile, String> {
    let path = Path::new(spec);
    if path.exists() {
        TowerProfile::from_json(&read_file(path)?).map_err(|e| e.to_string())
    } else {
        TowerProfile::builtin(spec).map_err(|e| e.to_string())
    }
}

fn effective_divisors(curve: &Path, n: u64) -> CliResult {
    let curve = load_curve(curve)?;
    let delta = curve.delta_set();
    let a_n = count_effective_divisors(&curve.places, n);
    let u_n = partition_count_at_most(n, delta.len() as u64);
    Ok(Output::ok(json!({
        "q": curve.q,
        "g": curve.g,
        "n": n,
        "A_n": a_n.to_string(),
        "U_n_size": u_n.to_string(),
        "delta": delta.len(),
        "warnings": curve.missing_degrees().iter().map(|i| format!("B_{i} absent, treated as 0")).collect::<Vec<_>>(),
    })))
}

fn report_json(report: &FeasibilityReport) -> Value {
    let mut v = to_value(report);
    if let Value::Object(obj) = &mut v {
        for (key, value) in [("h", &report.h), ("lhs", &report.lhs), ("rhs", &report.rhs)] {
            if let Some(r) = value {
                obj.insert(format!("{key}_decimal"), Value::String(to_decimal(r, DECIMAL_PLACES)));
            }
        }
    }
    v
}

fn feasible(cmd: FeasibleCmd) -> CliResult {
    let (args, thm41) = match cmd {
        FeasibleCmd::Thm41 { args, numerator } => {
            let numerator = match numerator {
                Numerator::Ceil => NumeratorMode::HasseWeilCeil,
                Numerator::SqrtDown => NumeratorMode::HasseWeilDirected(DEFAULT_DIGITS),
                Numerator::ObservedB1 => NumeratorMode::ObservedB1,
            };
            (args, Some(Thm41Options { numerator }))
        }
        FeasibleCmd::Thm42 { args } => (args, None),
    };
    let curve = load_curve(&args.curve)?;
    let cells: Vec<SharingParams> =
        iproduct!(&args.d, &args.t, &args.k, &args.n).map(|(&d, &t, &k, &n)| SharingParams::new(d, t, k, n)).collect();
    let results = check_many(&cells, args.jobs, |cell| match thm41 {
        Some(options) => check_thm41(&curve, cell, options),
        None => check_thm42(&curve, cell),
    });
    let reports = results.into_iter().collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    let code = if reports.iter().all(FeasibilityReport::is_feasible) { 0 } else { 1 };
    let header = ["d", "t", "k", "n", "s", "r2", "verdict"].map(String::from).to_vec();
    let rows = cells
        .iter()
        .zip(&reports)
        .map(|(c, r)| {
            let opt = |v: Option<i64>| v.map_or(String::new(), |x| x.to_string());
            vec![
                c.d.to_string(),
                c.t.to_string(),
                c.k.to_string(),
                c.n.to_string(),
                opt(r.s),
                opt(r.r2),
                r.verdict.to_string(),
            ]
        })
        .collect();
    let json = match reports.as_slice() {
        [single] => report_json(single),
        many => Value::Array(many.iter().map(report_json).collect()),
    };
    Ok(Output { json, table: Some((header, rows)), code })
}

fn table1() -> CliResult {
    let table = generate_table1();
    let header = ["d", "n_1", "n_2", "n_3", "n_4", "status"].map(String::from).to_vec();
    let rows = (2..=5u64)
        .map(|d| {
            let cells: Vec<_> = (1..=4).filter_map(|i| table.cell(d, i)).collect();
            let mut row = vec![d.to_string()];
            row.extend(cells.iter().map(|c| c.n.to_string()));
            let matched = cells.iter().all(|c| c.status == CellStatus::Match);
            row.push(if matched { "Match" } else { "Mismatch" }.to_string());
            row
        })
        .collect();
    let code = if table.mismatches().is_empty() { 0 } else { 1 };
    Ok(Output { json: to_value(&table), table: Some((header, rows)), code })
}

fn tower_info(spec: &str, levels: u32) -> CliResult {
    let profile = load_profile(spec)?;
    let inputs = profile.asymptotic_inputs();
    let h = class_number_limit(&inputs, LogBase::Natural, DEFAULT_DIGITS);
    let levels = (1..=levels)
        .map(|level| TowerLevel {
            level,
            genus: profile.genus_at(level).ok().map(|g| g.to_string()),
            b1_lower: profile.b_lower(1, level).ok().map(|b| b.to_string()),
            beta1: beta_empirical(&profile, 1, level).ok().map(|b| format_rational(&b)),
        })
        .collect();
    let info = TowerInfo {
        mu0: format_rational(&mu0(&inputs)),
        class_number_limit: h.to_string(),
        ihara_lower: profile.ihara_lower().map(|a| format_rational(&a)),
        levels,
        profile,
    };
    let header = ["level", "genus", "b1_lower", "beta1"].map(String::from).to_vec();
    let rows = info
        .levels
        .iter()
        .map(|l| {
            let s = |v: &Option<String>| v.clone().unwrap_or_default();
            vec![l.level.to_string(), s(&l.genus), s(&l.b1_lower), s(&l.beta1)]
        })
        .collect();
    Ok(Output { json: to_value(&info), table: Some((header, rows)), code: 0 })
}

fn plan(args: &SchemeArgs) -> Result<Result<SchemeParams, SchemeError>, String> {
    let planned = plan_scheme(args.q, args.n, args.t, args.d, args.k)
        .and_then(|p| match args.degree_cap {
            Some(cap) => p.with_degree_cap(cap),
            None => Ok(p),
        })
        .map(|p| p.with_seed(args.seed));
    match planned {
        Err(SchemeError::Infeasible(_)) | Ok(_) => Ok(planned),
        Err(e) => Err(e.to_string()),
    }
}

fn infeasible(e: SchemeError) -> Output {
    Output::ok(json!({"feasible": false, "reason": e.to_string()})).with_code(1)
}

fn scheme(cmd: SchemeCmd) -> CliResult {
    match cmd {
        SchemeCmd::Plan(args) => Ok(match plan(&args)? {
            Ok(params) => Output::ok(to_value(&params)),
            Err(e) => infeasible(e),
        }),
        SchemeCmd::Verify { args, sampled } => Ok(match plan(&args)? {
            Ok(params) => {
                let out = VerifyOutput {
                    disconnected: verify_disconnected(&params),
                    reconstructing: verify_reconstruction(&params, !sampled),
                };
                let code = if out.disconnected && out.reconstructing { 0 } else { 1 };
                Output::ok(to_value(&out)).with_code(code)
            }
            Err(e) => infeasible(e),
        }),
        SchemeCmd::Demo { args, secret } => {
            let params = match plan(&args)? {
                Ok(p) => p,
                Err(e) => return Ok(infeasible(e)),
            };
            demo(&params, secret)
        }
    }
}

fn demo(params: &SchemeParams, secret: Option<Vec<u64>>) -> CliResult {
    let field = &params.field;
    let mut rng = params.rng();
    let secret = match secret {
        Some(idx) => idx
            .iter()
            .map(|&i| (i < field.order()).then(|| field.element_at(i)).ok_or(format!("no element {i}")))
            .collect::<Result<Vec<_>, _>>()?,
        None => (0..params.k).map(|_| field.random(&mut rng)).collect(),
    };
    let err = |e: SchemeError| e.to_string();
    let bundles =
        (0..params.d).map(|_| share(params, &secret, &mut rng)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let opened: Vec<_> = bundles[0].shares.iter().cloned().enumerate().collect();
    let recovered = recover_secret(params, &opened[..=params.degree_cap]).map_err(err)?;
    let product = star_product(&bundles).map_err(err)?;
    let honest = params.n - params.t;
    let product_opened: Vec<_> = product.shares.iter().cloned().enumerate().skip(params.t).collect();
    debug_assert_eq!(product_opened.len(), honest);
    let reconstructed = reconstruct_product(params, &product_opened).map_err(err)?;
    let ok = recovered == secret && reconstructed == product.secret;
    let json = json!({
        "params": params,
        "secret": secret,
        "shares": bundles[0].shares,
        "recovered": recovered,
        "product_shares": product.shares,
        "product_secret": product.secret,
        "reconstructed_product": reconstructed,
        "ok": ok,
    });
    Ok(Output::ok(json).with_code(if ok { 0 } else { 1 }))
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize to JSON")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string().replace(',', ";"),
    }
}

fn derived_table(json: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let objects: Vec<&Map<String, Value>> = match json {
        Value::Array(items) => items.iter().filter_map(Value::as_object).collect(),
        Value::Object(obj) => vec![obj],
        _ => Vec::new(),
    };
    let header: Vec<String> = objects.first().map(|o| o.keys().cloned().collect()).unwrap_or_default();
    let rows =
        objects.iter().map(|o| header.iter().map(|k| o.get(k).map(scalar).unwrap_or_default()).collect()).collect();
    (header, rows)
}

fn render(output: &Output, format: Format) -> String {
    if format == Format::Json {
        let mut s = serde_json::to_string_pretty(&output.json).expect("JSON value renders");
        s.push('\n');
        return s;
    }
    let (header, rows) = output.table.clone().unwrap_or_else(|| derived_table(&output.json));
    let mut s = String::new();
    if format == Format::Csv {
        for line in std::iter::once(&header).chain(&rows) {
            s.push_str(&line.join(","));
            s.push('\n');
        }
        return s;
    }
    if output.table.is_none() && rows.len() == 1 {
        for (k, v) in header.iter().zip(&rows[0]) {
            s.push_str(&format!("{k}: {v}\n"));
        }
        return s;
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| std::iter::once(&header).chain(&rows).map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    for line in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = line.iter().zip(&widths).map(|(v, w)| format!("{v:>w$}")).collect();
        s.push_str(cells.join("  ").trim_end());
        s.push('\n');
    }
    s
}
