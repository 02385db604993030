//! The `jones-slopes` command line.
//!
//! Exit codes: 0 success, 1 a false verdict under `verify --strict`, 2 usage or
//! input error, 3 an engine cap was exceeded.
//!
//! Machine output (`--format json|csv`) is deterministic. Provenance with wall
//! time goes to standard error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::bracket::{BracketError, Caps, Engine, DEFAULT_STATESUM_CAP, DEFAULT_WIDTH_CAP};
use crate::catalog::{builtin, CatalogEntry, CatalogError};
use crate::jones::{colored_jones_range, CableCost, JonesConfig, JonesError};
use crate::laurent::LaurentPoly;
use crate::pd::{parse_pd, Diagram, DiagramJson, PdError};
use crate::slopes::{
    characterize, fit_quasi_quadratic, slopes, verify_degree_bounds, BoundReport, CharacterizationReport, Outcome,
    PipelineConfig, QuasiQuadratic, SlopeData, SlopeError, VERDICT_NAMES,
};
use crate::state::{adequacy, surface_summary, Side, StateError, StateSummary, SurfaceSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE_VERDICT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

const DEFAULT_NMAX: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "jones-slopes", version, about = "Colored Jones polynomials, Jones slopes and adequacy of knot diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// State summary, state surfaces and crossing data of a diagram.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Colored Jones polynomials J(n) and their degrees for n = 1..nmax.
    Jones {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        compute: ComputeArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Adequacy flags, state circle counts and Turaev genus of a diagram.
    Adequacy {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Degree sequence, quasi-quadratic fit, slope sets and degree bounds.
    Slopes {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        compute: ComputeArgs,
        #[command(flatten)]
        fit: FitArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Every characterization predicate with its substituted numbers.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        compute: ComputeArgs,
        #[command(flatten)]
        fit: FitArgs,
        /// Exit with status 1 if any verdict is false.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the built-in catalog, or show one entry.
    Catalog {
        /// Entry to show.
        #[arg(long)]
        knot: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Catalog label, or `label/variant`.
    #[arg(long)]
    pub knot: Option<String>,
    /// PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".
    #[arg(long)]
    pub pd: Option<String>,
    /// JSON diagram, JSON array of diagrams, or PD text.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Largest color n [default: the catalog entry's n_max, else 4].
    #[arg(short = 'n', long = "nmax")]
    pub nmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    pub engine: EngineArg,
    #[arg(long, default_value_t = DEFAULT_STATESUM_CAP)]
    pub statesum_cap: usize,
    #[arg(long, default_value_t = DEFAULT_WIDTH_CAP)]
    pub width_cap: usize,
}

impl ComputeArgs {
    fn jones(&self) -> JonesConfig {
        JonesConfig {
            engine: self.engine.into(),
            caps: Caps { statesum: self.statesum_cap, width: self.width_cap },
        }
    }
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long, default_value_t = 1)]
    pub period: usize,
    #[arg(long, default_value_t = 1)]
    pub fit_start: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Statesum,
    Sweep,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Statesum => Engine::Statesum,
            EngineArg::Sweep => Engine::Sweep,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{cap} exceeded: {source}")]
    Cap { cap: &'static str, source: BracketError },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_USAGE,
            CliError::Cap { .. } => EXIT_CAP,
        }
    }
}

impl From<BracketError> for CliError {
    fn from(e: BracketError) -> Self {
        CliError::Cap { cap: e.cap_name(), source: e }
    }
}

impl From<JonesError> for CliError {
    fn from(e: JonesError) -> Self {
        match e {
            JonesError::Bracket(b) => b.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SlopeError> for CliError {
    fn from(e: SlopeError) -> Self {
        match e {
            SlopeError::Jones(j) => j.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

macro_rules! input_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        }
    )*};
}
input_error!(PdError, StateError, CatalogError);

/// A diagram to analyze and the catalog entry it came from, if any.
struct Input {
    diagram: Diagram,
    n_max: Option<usize>,
}

fn load_inputs(args: &InputArgs) -> Result<Vec<Input>, CliError> {
    if let Some(name) = &args.knot {
        let catalog = builtin();
        let diagram = catalog.diagram(name)?.clone();
        let label = name.split('/').next().unwrap_or(name);
        let n_max = catalog.get(label).ok().map(|e| e.n_max);
        return Ok(vec![Input { diagram, n_max }]);
    }
    if let Some(pd) = &args.pd {
        return Ok(vec![Input { diagram: parse_pd(pd)?.with_label("pd"), n_max: None }]);
    }
    let path = args.file.as_ref().expect("clap enforces one input");
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let diagrams = parse_file(&text, &stem)?;
    Ok(diagrams.into_iter().map(|diagram| Input { diagram, n_max: None }).collect())
}

/// A JSON diagram, a JSON array of diagrams, or PD text.
pub fn parse_file(text: &str, stem: &str) -> Result<Vec<Diagram>, CliError> {
    let trimmed = text.trim_start();
    let records: Vec<DiagramJson> = if trimmed.starts_with('[') {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("batch file: {e}")))?
    } else if trimmed.starts_with('{') {
        vec![serde_json::from_str(text).map_err(|e| CliError::Input(format!("diagram file: {e}")))?]
    } else {
        return Ok(vec![parse_pd(text)?.with_label(stem)]);
    };
    let many = records.len() > 1;
    records
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let d = Diagram::from_json(r)?;
            Ok(match (r.label.is_empty(), many) {
                (false, _) => d,
                (true, false) => d.with_label(stem),
                (true, true) => d.with_label(format!("{stem}[{i}]")),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub label: String,
    pub pd: String,
    pub crossings: usize,
    pub components: usize,
    pub c_plus: usize,
    pub c_minus: usize,
    pub writhe: Option<i64>,
    pub alternating: bool,
    pub summary: StateSummary,
    /// `[S_A, S_B]`; knots only.
    pub surfaces: Option<[SurfaceSummary; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JonesRow {
    pub n: usize,
    pub four_d_minus: i64,
    pub four_d_plus: i64,
    pub polynomial: LaurentPoly,
    pub t: String,
    pub cables: Vec<CableCost>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JonesReport {
    pub label: String,
    pub writhe: i64,
    pub values: Vec<JonesRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AdequacyReport {
    pub label: String,
    pub crossings: usize,
    pub summary: StateSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct SlopesReport {
    pub label: String,
    pub jones: JonesReport,
    pub fit: QuasiQuadratic,
    pub slopes: SlopeData,
    pub bounds: BoundReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogRow {
    pub label: String,
    pub crossings: usize,
    pub alternating: bool,
    pub n_max: usize,
    pub description: String,
    pub variants: Vec<String>,
    pub pd: String,
}

impl CatalogRow {
    fn new(e: &CatalogEntry) -> Self {
        CatalogRow {
            label: e.label.clone(),
            crossings: e.minimal_diagram.crossing_count(),
            alternating: e.alternating,
            n_max: e.n_max,
            description: e.description.clone(),
            variants: e.variant_diagrams.iter().map(|v| v.name.clone()).collect(),
            pd: e.minimal_diagram.to_pd_string(),
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    engine: Option<Engine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    caps: Option<Caps>,
    reports: &'a [T],
}

pub fn analyze_report(d: &Diagram) -> Result<AnalyzeReport, CliError> {
    let (c_plus, c_minus) = d.crossing_counts();
    let surfaces = if d.is_knot() {
        Some([surface_summary(d, Side::A)?, surface_summary(d, Side::B)?])
    } else {
        None
    };
    Ok(AnalyzeReport {
        label: d.label().to_string(),
        pd: d.to_pd_string(),
        crossings: d.crossing_count(),
        components: d.components(),
        c_plus,
        c_minus,
        writhe: d.writhe().ok(),
        alternating: d.is_alternating(),
        summary: adequacy(d)?,
        surfaces,
    })
}

pub fn jones_report(d: &Diagram, n_max: usize, config: JonesConfig) -> Result<JonesReport, CliError> {
    let values = colored_jones_range(d, n_max, config)?;
    let values = values
        .into_iter()
        .map(|j| {
            let (lo, hi) = j.value.t_degrees().map_err(|e| CliError::Input(e.to_string()))?;
            Ok(JonesRow { n: j.n, four_d_minus: lo, four_d_plus: hi, t: j.value.to_t_string(), polynomial: j.value, cables: j.cables })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(JonesReport { label: d.label().to_string(), writhe: d.writhe()?, values })
}

pub fn slopes_report(d: &Diagram, n_max: usize, config: JonesConfig, period: usize, fit_start: usize) -> Result<SlopesReport, CliError> {
    let jones = jones_report(d, n_max, config)?;
    let seq = crate::jones::DegreeSequence {
        label: jones.label.clone(),
        entries: jones
            .values
            .iter()
            .map(|r| crate::jones::DegreeEntry { n: r.n, four_d_minus: r.four_d_minus, four_d_plus: r.four_d_plus })
            .collect(),
    };
    let fit = fit_quasi_quadratic(&seq, period, fit_start)?;
    let data = slopes(&fit);
    let bounds = verify_degree_bounds(d, &seq, period)?;
    Ok(SlopesReport { label: jones.label.clone(), jones, fit, slopes: data, bounds })
}

/// Runs the command line; `out` gets the report, `err` diagnostics and provenance.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let started = Instant::now();
    let result = execute(&cli.command, out);
    let elapsed = started.elapsed();
    match result {
        Ok((code, provenance)) => {
            let _ = writeln!(
                err,
                "# jones-slopes {} {provenance} wall={:.3}s",
                env!("CARGO_PKG_VERSION"),
                elapsed.as_secs_f64()
            );
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn n_max_for(input: &Input, compute: &ComputeArgs) -> usize {
    compute.nmax.or(input.n_max).unwrap_or(DEFAULT_NMAX)
}

fn caps_text(compute: &ComputeArgs) -> String {
    format!(
        "engine={} statesum-cap={} width-cap={}",
        engine_name(compute.engine.into()),
        compute.statesum_cap,
        compute.width_cap
    )
}

fn engine_name(e: Engine) -> &'static str {
    match e {
        Engine::Auto => "auto",
        Engine::Statesum => "statesum",
        Engine::Sweep => "sweep",
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::Input(format!("writing output: {e}")))
}

fn json<T: Serialize>(command: &'static str, compute: Option<&ComputeArgs>, reports: &[T]) -> String {
    let env = Envelope {
        tool: "jones-slopes",
        version: env!("CARGO_PKG_VERSION"),
        command,
        engine: compute.map(|c| c.engine.into()),
        caps: compute.map(|c| c.jones().caps),
        reports,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
    s.push('\n');
    s
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<(i32, String), CliError> {
    match command {
        Command::Analyze { input, format } => {
            let inputs = load_inputs(input)?;
            let reports: Vec<_> = inputs.iter().map(|i| analyze_report(&i.diagram)).collect::<Result<_, _>>()?;
            let text = match format {
                Format::Json => json("analyze", None, &reports),
                Format::Csv => csv_analyze(&reports),
                Format::Text => reports.iter().map(text_analyze).collect::<Vec<_>>().join("\n"),
            };
            emit(out, &text)?;
            Ok((EXIT_OK, "command=analyze".into()))
        }
        Command::Adequacy { input, format } => {
            let inputs = load_inputs(input)?;
            let reports: Vec<_> = inputs
                .iter()
                .map(|i| {
                    Ok(AdequacyReport {
                        label: i.diagram.label().to_string(),
                        crossings: i.diagram.crossing_count(),
                        summary: adequacy(&i.diagram)?,
                    })
                })
                .collect::<Result<_, CliError>>()?;
            let text = match format {
                Format::Json => json("adequacy", None, &reports),
                Format::Csv => csv_adequacy(&reports),
                Format::Text => reports.iter().map(text_adequacy).collect::<Vec<_>>().join("\n"),
            };
            emit(out, &text)?;
            Ok((EXIT_OK, "command=adequacy".into()))
        }
        Command::Jones { input, compute, format } => {
            let inputs = load_inputs(input)?;
            let config = compute.jones();
            let reports: Vec<_> = inputs
                .par_iter()
                .map(|i| jones_report(&i.diagram, n_max_for(i, compute), config))
                .collect::<Result<_, _>>()?;
            let text = match format {
                Format::Json => json("jones", Some(compute), &reports),
                Format::Csv => csv_jones(&reports),
                Format::Text => reports.iter().map(text_jones).collect::<Vec<_>>().join("\n"),
            };
            emit(out, &text)?;
            Ok((EXIT_OK, format!("command=jones {}", caps_text(compute))))
        }
        Command::Slopes { input, compute, fit, format } => {
            let inputs = load_inputs(input)?;
            let config = compute.jones();
            let reports: Vec<_> = inputs
                .par_iter()
                .map(|i| slopes_report(&i.diagram, n_max_for(i, compute), config, fit.period, fit.fit_start))
                .collect::<Result<_, _>>()?;
            let text = match format {
                Format::Json => json("slopes", Some(compute), &reports),
                Format::Csv => csv_slopes(&reports),
                Format::Text => reports.iter().map(text_slopes).collect::<Vec<_>>().join("\n"),
            };
            emit(out, &text)?;
            Ok((EXIT_OK, format!("command=slopes {}", caps_text(compute))))
        }
        Command::Verify { input, compute, fit, strict, format } => {
            let inputs = load_inputs(input)?;
            let reports: Vec<CharacterizationReport> = inputs
                .par_iter()
                .map(|i| {
                    let config = PipelineConfig {
                        n_max: n_max_for(i, compute),
                        period: fit.period,
                        fit_start: fit.fit_start,
                        jones: compute.jones(),
                    };
                    characterize(&i.diagram, config)
                })
                .collect::<Result<_, _>>()?;
            let text = match format {
                Format::Json => json("verify", Some(compute), &reports),
                Format::Csv => csv_verify(&reports),
                Format::Text => reports.iter().map(text_verify).collect::<Vec<_>>().join("\n"),
            };
            emit(out, &text)?;
            let any_false = reports
                .iter()
                .any(|r| r.verdicts.values().any(|v| v.outcome == Outcome::False));
            let code = if *strict && any_false { EXIT_FALSE_VERDICT } else { EXIT_OK };
            Ok((code, format!("command=verify {}", caps_text(compute))))
        }
        Command::Catalog { knot, format } => {
            let catalog = builtin();
            let rows: Vec<CatalogRow> = match knot {
                Some(label) => vec![CatalogRow::new(catalog.get(label)?)],
                None => catalog.entries().iter().map(CatalogRow::new).collect(),
            };
            let text = match format {
                Format::Json => json("catalog", None, &rows),
                Format::Csv => csv_catalog(&rows),
                Format::Text => text_catalog(&rows, knot.is_some()),
            };
            emit(out, &text)?;
            Ok((EXIT_OK, "command=catalog".into()))
        }
    }
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn list(xs: &[usize]) -> String {
    if xs.is_empty() {
        "-".into()
    } else {
        xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn cables_text(cables: &[CableCost]) -> String {
    if cables.is_empty() {
        return "-".into();
    }
    cables
        .iter()
        .map(|c| {
            let cost = match c.engine {
                Engine::Sweep => format!("width {}", c.states_or_width),
                _ => format!("{} states", c.states_or_width),
            };
            format!("m={} c={} {} ({cost})", c.m, c.crossings, engine_name(c.engine))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Left-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut s = String::new();
    let mut line = |cells: Vec<&str>| {
        let last = cells.len() - 1;
        for (i, cell) in cells.iter().enumerate() {
            if i == last {
                s.push_str(cell);
            } else {
                let pad = widths[i] - cell.chars().count();
                s.push_str(cell);
                s.push_str(&" ".repeat(pad + 2));
            }
        }
        s.push('\n');
    };
    line(headers.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    s
}

fn summary_rows(s: &StateSummary) -> Vec<Vec<String>> {
    vec![
        vec!["A".into(), s.v_A.to_string(), yes(s.a_adequate), list(&s.loops_A)],
        vec!["B".into(), s.v_B.to_string(), yes(s.b_adequate), list(&s.loops_B)],
    ]
}

const SUMMARY_HEADERS: [&str; 4] = ["state", "circles", "adequate", "1-edge loops (crossings)"];

fn text_analyze(r: &AnalyzeReport) -> String {
    let mut s = String::new();
    let writhe = r.writhe.map_or("-".into(), |w| w.to_string());
    let _ = writeln!(s, "diagram {}", r.label);
    let _ = writeln!(s, "pd {}", if r.pd.is_empty() { "(none)" } else { &r.pd });
    s += &table(
        &["crossings", "components", "c+", "c-", "writhe", "alternating", "g_T(D)"],
        &[vec![
            r.crossings.to_string(),
            r.components.to_string(),
            r.c_plus.to_string(),
            r.c_minus.to_string(),
            writhe,
            yes(r.alternating),
            r.summary.g_T_diagram.to_string(),
        ]],
    );
    s.push('\n');
    s += &table(&SUMMARY_HEADERS, &summary_rows(&r.summary));
    s.push('\n');
    match &r.surfaces {
        Some(surfaces) => {
            let rows: Vec<Vec<String>> = surfaces
                .iter()
                .map(|x| {
                    let name = if x.side == Side::A { "S_A" } else { "S_B" };
                    vec![name.into(), x.euler.to_string(), x.boundary_components.to_string(), x.slope.to_string()]
                })
                .collect();
            s += &table(&["surface", "euler", "boundary", "slope"], &rows);
        }
        None => s += "state surfaces: knots only\n",
    }
    s
}

fn text_adequacy(r: &AdequacyReport) -> String {
    let mut s = format!(
        "diagram {}  crossings {}  adequate {}  g_T(D) {}\n",
        r.label,
        r.crossings,
        yes(r.summary.adequate()),
        r.summary.g_T_diagram
    );
    s += &table(&SUMMARY_HEADERS, &summary_rows(&r.summary));
    s
}

fn text_jones(r: &JonesReport) -> String {
    let mut s = format!("diagram {}  writhe {}\n", r.label, r.writhe);
    let rows: Vec<Vec<String>> = r
        .values
        .iter()
        .map(|v| {
            vec![
                v.n.to_string(),
                v.four_d_minus.to_string(),
                v.four_d_plus.to_string(),
                cables_text(&v.cables),
                v.t.clone(),
            ]
        })
        .collect();
    s += &table(&["n", "4d-", "4d+", "cables", "J(n)"], &rows);
    s
}

fn text_slopes(r: &SlopesReport) -> String {
    let mut s = text_jones(&r.jones);
    let _ = writeln!(s, "\nfit  period {}  fit start {}  fit ok {}", r.fit.period, r.fit.fit_start, yes(r.fit.fit_ok));
    let rows: Vec<Vec<String>> = r
        .fit
        .residues
        .iter()
        .map(|f| {
            vec![
                f.residue.to_string(),
                format!("{} {} {}", f.support[0], f.support[1], f.support[2]),
                f.plus.a.to_string(),
                f.plus.b.to_string(),
                f.plus.c.to_string(),
                f.minus.a.to_string(),
                f.minus.b.to_string(),
                f.minus.c.to_string(),
            ]
        })
        .collect();
    s += &table(&["residue", "support", "a", "b", "c", "a*", "b*", "c*"], &rows);
    if r.fit.residuals.is_empty() {
        s += "residuals: no held-out points\n";
    } else {
        let rows: Vec<Vec<String>> = r
            .fit
            .residuals
            .iter()
            .map(|x| vec![x.n.to_string(), x.plus.to_string(), x.minus.to_string()])
            .collect();
        s += &table(&["held-out n", "residual 4d+", "residual 4d-"], &rows);
    }
    let set = |xs: &std::collections::BTreeSet<crate::slopes::Rat>| {
        format!("{{{}}}", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
    };
    let _ = writeln!(
        s,
        "\njs {}  js* {}  jx {}  jx* {}",
        set(&r.slopes.js),
        set(&r.slopes.js_star),
        set(&r.slopes.jx),
        set(&r.slopes.jx_star)
    );
    s.push('\n');
    s += &text_bounds(&r.bounds);
    s
}

fn opt(x: Option<i64>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

fn text_bounds(b: &BoundReport) -> String {
    let mut s = format!(
        "degree bounds  c+ {}  c- {}  v_A {}  v_B {}  A-adequate {}  B-adequate {}\n",
        b.c_plus,
        b.c_minus,
        b.v_a,
        b.v_b,
        yes(b.a_adequate),
        yes(b.b_adequate)
    );
    let rel = |holds: bool, equal: bool| match (holds, equal) {
        (_, true) => "=",
        (true, false) => "strict",
        (false, _) => "VIOLATED",
    };
    let rows: Vec<Vec<String>> = b
        .rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.lower.to_string(),
                r.four_d_minus.to_string(),
                rel(r.lower_holds, r.lower_equal).into(),
                r.four_d_plus.to_string(),
                r.upper.to_string(),
                rel(r.upper_holds, r.upper_equal).into(),
                opt(r.lee_lower_residual),
                opt(r.lee_upper_residual),
            ]
        })
        .collect();
    s += &table(&["n", "lower", "4d-", "lower rel", "4d+", "upper", "upper rel", "e(n)", "e*(n)"], &rows);
    let holds = |x: Option<bool>| x.map_or("-".to_string(), yes);
    let _ = writeln!(
        s,
        "refined bounds (period {}): lower {}  upper {}",
        b.lee_period,
        holds(b.lee_lower_holds),
        holds(b.lee_upper_holds)
    );
    s
}

fn text_verify(r: &CharacterizationReport) -> String {
    let mut s = format!("diagram {}  c {}  g_T {}\n", r.label, r.c, r.g_t);
    let _ = writeln!(s, "note: {}", r.note);
    s.push('\n');
    s += &table(&SUMMARY_HEADERS, &summary_rows(&r.summary));
    let rows: Vec<Vec<String>> = r
        .surfaces
        .iter()
        .map(|x| {
            let name = if x.side == Side::A { "S_A" } else { "S_B" };
            vec![name.into(), x.euler.to_string(), x.boundary_components.to_string(), x.slope.to_string()]
        })
        .collect();
    s.push('\n');
    s += &table(&["surface", "euler", "boundary", "slope"], &rows);
    s.push('\n');
    let rows: Vec<Vec<String>> = r
        .degrees
        .entries
        .iter()
        .map(|e| vec![e.n.to_string(), e.four_d_minus.to_string(), e.four_d_plus.to_string()])
        .collect();
    s += &table(&["n", "4d-", "4d+"], &rows);
    let fit_rows: Vec<Vec<String>> = r
        .fit
        .residues
        .iter()
        .map(|f| {
            vec![
                f.residue.to_string(),
                f.plus.a.to_string(),
                f.plus.b.to_string(),
                f.plus.c.to_string(),
                f.minus.a.to_string(),
                f.minus.b.to_string(),
                f.minus.c.to_string(),
            ]
        })
        .collect();
    let _ = writeln!(s, "\nfit  period {}  fit start {}  fit ok {}", r.fit.period, r.fit.fit_start, yes(r.fit.fit_ok));
    s += &table(&["residue", "a", "b", "c", "a*", "b*", "c*"], &fit_rows);
    let set = |xs: &std::collections::BTreeSet<crate::slopes::Rat>| {
        format!("{{{}}}", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
    };
    let _ = writeln!(
        s,
        "js {}  js* {}  jx {}  jx* {}\n",
        set(&r.slopes.js),
        set(&r.slopes.js_star),
        set(&r.slopes.jx),
        set(&r.slopes.jx_star)
    );
    s += &text_bounds(&r.bounds);
    s.push('\n');
    let rows: Vec<Vec<String>> = VERDICT_NAMES
        .iter()
        .filter_map(|name| r.verdicts.get(*name).map(|v| (name, v)))
        .map(|(name, v)| {
            vec![
                name.to_string(),
                v.outcome.to_string(),
                v.equations.join("; "),
                v.witnesses.iter().map(|(k, x)| format!("{k}={x}")).collect::<Vec<_>>().join(" "),
            ]
        })
        .collect();
    s += &table(&["verdict", "outcome", "equations", "witnesses"], &rows);
    s
}

fn text_catalog(rows: &[CatalogRow], detail: bool) -> String {
    let mut s = if detail {
        rows.iter().map(|r| format!("pd {}\n", if r.pd.is_empty() { "(none)" } else { &r.pd })).collect()
    } else {
        String::new()
    };
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.label.clone(),
                r.crossings.to_string(),
                yes(r.alternating),
                r.n_max.to_string(),
                r.variants.join(" "),
                r.description.clone(),
            ]
        })
        .collect();
    s += &table(&["label", "crossings", "alternating", "n_max", "variants", "description"], &body);
    s
}

fn csv_string(headers: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn bits(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

/// Column order of `analyze --format csv`.
pub const ANALYZE_COLUMNS: [&str; 19] = [
    "label", "crossings", "components", "c_plus", "c_minus", "writhe", "alternating", "v_A", "v_B", "a_adequate",
    "b_adequate", "g_T_diagram", "loops_A", "loops_B", "euler_A", "boundary_A", "slope_A", "euler_B", "slope_B",
];

fn csv_analyze(reports: &[AnalyzeReport]) -> String {
    let rows = reports
        .iter()
        .map(|r| {
            let (ea, ba, sa, eb, sb) = match &r.surfaces {
                Some([a, b]) => (
                    a.euler.to_string(),
                    a.boundary_components.to_string(),
                    a.slope.to_string(),
                    b.euler.to_string(),
                    b.slope.to_string(),
                ),
                None => Default::default(),
            };
            vec![
                r.label.clone(),
                r.crossings.to_string(),
                r.components.to_string(),
                r.c_plus.to_string(),
                r.c_minus.to_string(),
                r.writhe.map(|w| w.to_string()).unwrap_or_default(),
                r.alternating.to_string(),
                r.summary.v_A.to_string(),
                r.summary.v_B.to_string(),
                r.summary.a_adequate.to_string(),
                r.summary.b_adequate.to_string(),
                r.summary.g_T_diagram.to_string(),
                bits(&r.summary.loops_A),
                bits(&r.summary.loops_B),
                ea,
                ba,
                sa,
                eb,
                sb,
            ]
        })
        .collect();
    csv_string(&ANALYZE_COLUMNS, rows)
}

/// Column order of `adequacy --format csv`.
pub const ADEQUACY_COLUMNS: [&str; 9] =
    ["label", "crossings", "v_A", "v_B", "a_adequate", "b_adequate", "g_T_diagram", "loops_A", "loops_B"];

fn csv_adequacy(reports: &[AdequacyReport]) -> String {
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.label.clone(),
                r.crossings.to_string(),
                r.summary.v_A.to_string(),
                r.summary.v_B.to_string(),
                r.summary.a_adequate.to_string(),
                r.summary.b_adequate.to_string(),
                r.summary.g_T_diagram.to_string(),
                bits(&r.summary.loops_A),
                bits(&r.summary.loops_B),
            ]
        })
        .collect();
    csv_string(&ADEQUACY_COLUMNS, rows)
}

/// Column order of `jones --format csv`; `polynomial` is in powers of `t`.
pub const JONES_COLUMNS: [&str; 6] = ["label", "n", "four_d_minus", "four_d_plus", "engines", "polynomial"];

fn csv_jones(reports: &[JonesReport]) -> String {
    let rows = reports
        .iter()
        .flat_map(|r| {
            r.values.iter().map(move |v| {
                vec![
                    r.label.clone(),
                    v.n.to_string(),
                    v.four_d_minus.to_string(),
                    v.four_d_plus.to_string(),
                    v.cables
                        .iter()
                        .map(|c| format!("{}:{}:{}", c.m, engine_name(c.engine), c.states_or_width))
                        .collect::<Vec<_>>()
                        .join(";"),
                    v.t.clone(),
                ]
            })
        })
        .collect();
    csv_string(&JONES_COLUMNS, rows)
}

/// Column order of `slopes --format csv`: one row per residue class.
pub const SLOPES_COLUMNS: [&str; 12] =
    ["label", "period", "fit_start", "residue", "a", "b", "c", "a_star", "b_star", "c_star", "fit_ok", "bounds_consistent"];

fn csv_slopes(reports: &[SlopesReport]) -> String {
    let rows = reports
        .iter()
        .flat_map(|r| {
            r.fit.residues.iter().map(move |f| {
                vec![
                    r.label.clone(),
                    r.fit.period.to_string(),
                    r.fit.fit_start.to_string(),
                    f.residue.to_string(),
                    f.plus.a.to_string(),
                    f.plus.b.to_string(),
                    f.plus.c.to_string(),
                    f.minus.a.to_string(),
                    f.minus.b.to_string(),
                    f.minus.c.to_string(),
                    r.fit.fit_ok.to_string(),
                    r.bounds.consistent().to_string(),
                ]
            })
        })
        .collect();
    csv_string(&SLOPES_COLUMNS, rows)
}

/// Column order of `verify --format csv`: one row per verdict.
pub const VERIFY_COLUMNS: [&str; 6] = ["label", "c", "g_T", "verdict", "outcome", "witnesses"];

fn csv_verify(reports: &[CharacterizationReport]) -> String {
    let rows = reports
        .iter()
        .flat_map(|r| {
            VERDICT_NAMES.iter().filter_map(move |name| {
                let v = r.verdicts.get(*name)?;
                Some(vec![
                    r.label.clone(),
                    r.c.to_string(),
                    r.g_t.to_string(),
                    name.to_string(),
                    v.outcome.to_string(),
                    v.witnesses.iter().map(|(k, x)| format!("{k}={x}")).collect::<Vec<_>>().join(";"),
                ])
            })
        })
        .collect();
    csv_string(&VERIFY_COLUMNS, rows)
}

/// Column order of `catalog --format csv`.
pub const CATALOG_COLUMNS: [&str; 7] = ["label", "crossings", "alternating", "n_max", "variants", "description", "pd"];

fn csv_catalog(rows: &[CatalogRow]) -> String {
    let body = rows
        .iter()
        .map(|r| {
            vec![
                r.label.clone(),
                r.crossings.to_string(),
                r.alternating.to_string(),
                r.n_max.to_string(),
                r.variants.join(";"),
                r.description.clone(),
                r.pd.clone(),
            ]
        })
        .collect();
    csv_string(&CATALOG_COLUMNS, body)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("jones-slopes").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn table_alignment() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["jones"]).0, EXIT_USAGE);
        assert_eq!(call(&["jones", "--knot", "3_1", "--pd", "X(1,2,2,1)"]).0, EXIT_USAGE);
        assert_eq!(call(&["jones", "--knot", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["adequacy", "--pd", "X(1,2,3"]).0, EXIT_USAGE);
    }

    #[test]
    fn cap_violation_exit_three() {
        let (code, _, err) = call(&["jones", "--knot", "3_1", "-n", "4", "--width-cap", "4"]);
        assert_eq!(code, EXIT_CAP);
        assert!(err.contains("width-cap"), "{err}");
        let (code, _, err) = call(&["jones", "--knot", "3_1", "-n", "3", "--engine", "statesum", "--statesum-cap", "5"]);
        assert_eq!(code, EXIT_CAP);
        assert!(err.contains("statesum-cap"), "{err}");
    }

    #[test]
    fn parse_file_forms() {
        let one = parse_file(r#"{"label":"t","pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]}"#, "f").unwrap();
        assert_eq!(one[0].label(), "t");
        let many = parse_file(r#"[{"pd":[]},{"pd":[[1,2,2,1]]}]"#, "f").unwrap();
        assert_eq!((many[0].label(), many[1].label()), ("f[0]", "f[1]"));
        assert_eq!(many[0].components(), 0);
        let text = parse_file("X(1,2,2,1)", "k").unwrap();
        assert_eq!(text[0].label(), "k");
        assert!(parse_file("[{]", "f").is_err());
    }
}
