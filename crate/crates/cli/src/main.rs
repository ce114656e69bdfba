//! Command-line front end for the photon-number QFI catalog.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use photon_qfi::dist::{
    make_pmf, moments_by_summation, moments_closed_form, DistError, DistributionSpec,
    FamilyTemplate, MomentResult, MomentStatus, TruncationConfig,
};
use photon_qfi::optimize::{
    fit_scaling_exponent, logarithmic_critical_mu, maximize_variance, OptimizeError,
    VarianceProblem,
};
use photon_qfi::qfi::{bhatia_davis_bound, popoviciu_bound, qfi_from_moments, qfi_squeezed};
use photon_qfi_cli::report::{self, Format, RecordStatus, SweepRecord};
use photon_qfi_cli::spec_arg::{self, ParamMap, ParamValue};

#[derive(Parser)]
#[command(
    name = "photon-qfi",
    version,
    about = "Photon-number statistics and quantum Fisher information for single-mode phase estimation",
    after_help = "Exit codes: 0 success, 2 argument error, 3 non-convergence, 4 divergence."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Measurement repetitions entering the precision bound.
    #[arg(long, global = true, default_value_t = 1, value_name = "COUNT")]
    nu: u64,

    /// Tail tolerance for adaptive summation.
    #[arg(long, global = true, default_value_t = 1e-14, value_name = "EPS")]
    tail_epsilon: f64,

    /// Term budget for adaptive summation.
    #[arg(long, global = true, default_value_t = 10_000_000, value_name = "COUNT")]
    max_terms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate moments, QFI, and the precision bound for one distribution.
    Eval(EvalArgs),
    /// Compare QFI across two or more distributions.
    Compare(CompareArgs),
    /// Maximize photon-number variance at fixed mean on a bounded support.
    Optimize(OptimizeArgs),
    /// Fit the QFI scaling exponent over a mean-photon-number range.
    Scaling(ScalingArgs),
    /// Tabulate the zero-based two-point QFI against the squeezed-vacuum
    /// benchmark at fixed mean.
    Figure1(Figure1Args),
    /// Locate the logarithmic distribution's variance crossover point.
    #[command(name = "critical-mu")]
    CriticalMu(CriticalMuArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Family: geometric, negative-binomial, logarithmic, borel, zeta,
    /// coherent, squeezed, mandm, ssw, ss, dowling, small-peak.
    #[arg(long)]
    family: String,
    /// Distribution parameter mu.
    #[arg(long)]
    mu: Option<f64>,
    /// Negative-binomial shape or Dowling smooth-cutoff scale.
    #[arg(long)]
    eta: Option<f64>,
    /// Zeta exponent.
    #[arg(long)]
    s: Option<f64>,
    /// Squeezing magnitude.
    #[arg(long)]
    r: Option<f64>,
    /// Mean photon number (coherent, squeezed, mandm fixed-mean weight).
    #[arg(long)]
    n: Option<f64>,
    /// Superposition weight (mandm high component, small-peak inner mass).
    #[arg(long)]
    a: Option<f64>,
    /// Low photon number of a two-point state.
    #[arg(long)]
    m: Option<u64>,
    /// High photon number / window cutoff (integer).
    #[arg(long = "M")]
    cap: Option<u64>,
    /// Inverse-square shift z.
    #[arg(long)]
    z: Option<f64>,
    /// Inner distribution for small-peak, in spec syntax (e.g. borel:mu=0.5).
    #[arg(long, value_name = "SPEC")]
    inner: Option<String>,
}

#[derive(Args)]
struct CompareArgs {
    /// Distribution in spec syntax, e.g. squeezed:n=7.46; repeat two or
    /// more times. Ratios are taken against the first.
    #[arg(long = "spec", value_name = "SPEC", required = true, num_args = 1)]
    specs: Vec<String>,
}

#[derive(Args)]
struct OptimizeArgs {
    /// Low photon number m.
    #[arg(long, default_value_t = 0)]
    m: u64,
    /// High photon number M.
    #[arg(long = "M")]
    cap: u64,
    /// Mean photon number to hold fixed.
    #[arg(long = "n-fixed")]
    n_fixed: f64,
}

#[derive(Args)]
struct ScalingArgs {
    /// Family: geometric, negative-binomial, logarithmic, borel, zeta,
    /// squeezed, coherent.
    #[arg(long)]
    family: String,
    /// Negative-binomial shape (required for that family).
    #[arg(long)]
    eta: Option<f64>,
    /// Smallest mean photon number in the sweep.
    #[arg(long = "n-min")]
    n_min: f64,
    /// Largest mean photon number in the sweep.
    #[arg(long = "n-max")]
    n_max: f64,
    /// Log-spaced sweep points.
    #[arg(long, default_value_t = 12)]
    points: usize,
}

#[derive(Args)]
struct Figure1Args {
    /// Mean photon number to hold fixed.
    #[arg(long)]
    n: f64,
    /// Largest cutoff M in the sweep.
    #[arg(long = "m-max")]
    m_max: u64,
}

#[derive(Args)]
struct CriticalMuArgs {
    /// Root-bracketing tolerance.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

enum CliError {
    Usage(String),
    NotConverged(String),
    Divergent(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::NotConverged(_) => 3,
            CliError::Divergent(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(msg)
            | CliError::NotConverged(msg)
            | CliError::Divergent(msg)
            | CliError::Io(msg) => msg,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("photon-qfi: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

struct OutputCtx {
    format: OutputFormat,
    output: Option<PathBuf>,
    argv: Vec<String>,
    nu: u64,
    tail_epsilon: f64,
    max_terms: u64,
}

impl OutputCtx {
    fn truncation(&self) -> TruncationConfig {
        TruncationConfig {
            tail_epsilon: self.tail_epsilon,
            max_terms: self.max_terms,
            ..TruncationConfig::default()
        }
    }

    fn meta_comment(&self) -> String {
        format!(
            "# photon-qfi {}\n# args: {}\n# tail-epsilon: {:e}\n",
            env!("CARGO_PKG_VERSION"),
            self.argv.join(" "),
            self.tail_epsilon
        )
    }

    fn meta_human(&self) -> String {
        format!(
            "photon-qfi {}\nargs: {}\ntail-epsilon: {:e}\n",
            env!("CARGO_PKG_VERSION"),
            self.argv.join(" "),
            self.tail_epsilon
        )
    }

    fn meta_json(&self) -> serde_json::Value {
        serde_json::json!({
            "version": env!("CARGO_PKG_VERSION"),
            "argv": self.argv,
            "tail_epsilon": self.tail_epsilon,
        })
    }

    /// Sweep records: CSV bytes are the metadata preamble followed verbatim
    /// by `report::serialize`; JSON embeds those exact bytes under
    /// `records`.
    fn emit_records(&self, records: &[SweepRecord], notes: &[String]) -> Result<(), CliError> {
        match self.format {
            OutputFormat::Csv => {
                let mut bytes = self.meta_comment().into_bytes();
                bytes.extend(serialized(records, Format::Csv)?);
                self.write(&bytes)
            }
            OutputFormat::Json => {
                let mut bytes = b"{\"meta\":".to_vec();
                bytes.extend(serde_json::to_vec(&self.meta_json()).expect("meta serializes"));
                bytes.extend_from_slice(b",\"records\":");
                bytes.extend(serialized(records, Format::Json)?);
                bytes.extend_from_slice(b"}");
                self.write(&bytes)
            }
            OutputFormat::Human => {
                let mut text = self.meta_human();
                text.push('\n');
                for note in notes {
                    text.push_str(note);
                    text.push('\n');
                }
                if !notes.is_empty() {
                    text.push('\n');
                }
                text.push_str(&human_record_table(records));
                self.write(text.as_bytes())
            }
        }
    }

    /// Non-record payloads: a small CSV table, a JSON object, human lines.
    fn emit_table(
        &self,
        csv_header: &str,
        csv_rows: &[String],
        json_key: &str,
        json_value: serde_json::Value,
        human_lines: &[String],
    ) -> Result<(), CliError> {
        match self.format {
            OutputFormat::Csv => {
                let mut text = self.meta_comment();
                text.push_str(csv_header);
                text.push('\n');
                for row in csv_rows {
                    text.push_str(row);
                    text.push('\n');
                }
                self.write(text.as_bytes())
            }
            OutputFormat::Json => {
                let payload = serde_json::json!({
                    "meta": self.meta_json(),
                    json_key: json_value,
                });
                self.write(&serde_json::to_vec(&payload).expect("payload serializes"))
            }
            OutputFormat::Human => {
                let mut text = self.meta_human();
                text.push('\n');
                for line in human_lines {
                    text.push_str(line);
                    text.push('\n');
                }
                self.write(text.as_bytes())
            }
        }
    }

    fn write(&self, bytes: &[u8]) -> Result<(), CliError> {
        match &self.output {
            Some(path) => std::fs::write(path, bytes)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
            None => std::io::stdout()
                .write_all(bytes)
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
        }
    }
}

fn serialized(records: &[SweepRecord], format: Format) -> Result<Vec<u8>, CliError> {
    report::serialize(records, format).map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.nu == 0 {
        return Err(CliError::Usage("--nu must be at least 1".into()));
    }
    if cli.tail_epsilon.is_nan() || cli.tail_epsilon <= 0.0 || !cli.tail_epsilon.is_finite() {
        return Err(CliError::Usage("--tail-epsilon must be positive".into()));
    }
    if cli.max_terms == 0 {
        return Err(CliError::Usage("--max-terms must be at least 1".into()));
    }
    let ctx = OutputCtx {
        format: cli.format,
        output: cli.output,
        argv: std::env::args().collect(),
        nu: cli.nu,
        tail_epsilon: cli.tail_epsilon,
        max_terms: cli.max_terms,
    };
    match cli.command {
        Command::Eval(args) => cmd_eval(&ctx, args),
        Command::Compare(args) => cmd_compare(&ctx, args),
        Command::Optimize(args) => cmd_optimize(&ctx, args),
        Command::Scaling(args) => cmd_scaling(&ctx, args),
        Command::Figure1(args) => cmd_figure1(&ctx, args),
        Command::CriticalMu(args) => cmd_critical_mu(&ctx, args),
    }
}

/// Closed form when the family has one, summation oracle otherwise.
fn evaluate_moments(
    spec: &DistributionSpec,
    truncation: &TruncationConfig,
) -> Result<MomentResult, CliError> {
    let moments = match moments_closed_form(spec) {
        Ok(moments) => moments,
        Err(DistError::Unsupported { .. }) => {
            let pmf = make_pmf(spec.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
            moments_by_summation(&pmf, truncation)
        }
        Err(err) => return Err(CliError::Usage(err.to_string())),
    };
    if moments.status == MomentStatus::NotConverged {
        return Err(CliError::NotConverged(format!(
            "moments did not converge within {} terms",
            moments.terms_used
        )));
    }
    Ok(moments)
}

fn record_for_spec(
    spec: &DistributionSpec,
    moments: &MomentResult,
    nu: u64,
) -> Result<SweepRecord, CliError> {
    let report = qfi_from_moments(moments, nu).map_err(|e| CliError::Usage(e.to_string()))?;
    let weight = match spec {
        DistributionSpec::MAndM { weight, .. } => Some(*weight),
        _ => None,
    };
    Ok(SweepRecord {
        param: spec_arg::primary_parameter(spec),
        mean: report.mean,
        variance: report.variance,
        qfi: report.qfi,
        delta_phi: report.delta_phi,
        weight,
        status: RecordStatus::from(moments.status),
    })
}

fn cmd_eval(ctx: &OutputCtx, args: EvalArgs) -> Result<(), CliError> {
    let mut params = ParamMap::new();
    let scalars = [
        ("mu", args.mu),
        ("eta", args.eta),
        ("s", args.s),
        ("r", args.r),
        ("n", args.n),
        ("a", args.a),
        ("z", args.z),
        ("m", args.m.map(|v| v as f64)),
        ("M", args.cap.map(|v| v as f64)),
    ];
    for (key, value) in scalars {
        if let Some(value) = value {
            params.insert(key, ParamValue::Number(value));
        }
    }
    if let Some(inner) = &args.inner {
        let inner = spec_arg::parse_spec(inner).map_err(CliError::Usage)?;
        params.insert("inner", ParamValue::Nested(inner));
    }
    let spec = spec_arg::build_spec(&args.family, &params).map_err(CliError::Usage)?;
    let moments = evaluate_moments(&spec, &ctx.truncation())?;
    let record = record_for_spec(&spec, &moments, ctx.nu)?;

    let mut notes = vec![format!("family: {}", spec.family_name())];
    if record.status == RecordStatus::Diverges {
        notes.push("variance diverges: QFI is unbounded and no finite precision bound exists".into());
    }
    ctx.emit_records(std::slice::from_ref(&record), &notes)
}

fn cmd_compare(ctx: &OutputCtx, args: CompareArgs) -> Result<(), CliError> {
    if args.specs.len() < 2 {
        return Err(CliError::Usage(
            "compare needs at least two --spec arguments".into(),
        ));
    }
    let truncation = ctx.truncation();
    let mut rows = Vec::new();
    for text in &args.specs {
        let spec = spec_arg::parse_spec(text).map_err(CliError::Usage)?;
        let moments = evaluate_moments(&spec, &truncation)?;
        let report = qfi_from_moments(&moments, ctx.nu).map_err(|e| CliError::Usage(e.to_string()))?;
        rows.push((text.clone(), report));
    }
    let base_qfi = rows[0].1.qfi;

    let csv_rows: Vec<String> = rows
        .iter()
        .map(|(label, report)| {
            format!(
                "\"{label}\",{},{},{},{},{}",
                csv_float(report.mean),
                csv_float(report.variance),
                csv_float(report.qfi),
                report.delta_phi.map(csv_float).unwrap_or_default(),
                csv_float(report.qfi / base_qfi),
            )
        })
        .collect();
    let json_rows: Vec<serde_json::Value> = rows
        .iter()
        .map(|(label, report)| {
            serde_json::json!({
                "spec": label,
                "mean": json_float(report.mean),
                "variance": json_float(report.variance),
                "qfi": json_float(report.qfi),
                "delta_phi": report.delta_phi.map(json_float),
                "ratio": json_float(report.qfi / base_qfi),
            })
        })
        .collect();
    let mut human = vec![format!(
        "{:<34} {:>12} {:>14} {:>14} {:>12} {:>10}",
        "spec", "mean", "variance", "qfi", "delta_phi", "ratio"
    )];
    for (label, report) in &rows {
        human.push(format!(
            "{:<34} {:>12} {:>14} {:>14} {:>12} {:>10}",
            label,
            human_float(report.mean),
            human_float(report.variance),
            human_float(report.qfi),
            report.delta_phi.map(human_float).unwrap_or_else(|| "-".into()),
            human_float(report.qfi / base_qfi),
        ));
    }
    ctx.emit_table(
        "spec,mean,variance,qfi,delta_phi,ratio",
        &csv_rows,
        "rows",
        serde_json::Value::Array(json_rows),
        &human,
    )
}

fn cmd_optimize(ctx: &OutputCtx, args: OptimizeArgs) -> Result<(), CliError> {
    let problem = VarianceProblem::new(args.m, args.cap, args.n_fixed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let optimum = maximize_variance(&problem);
    let bd = bhatia_davis_bound(args.m, args.cap, args.n_fixed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let pop = popoviciu_bound(args.m, args.cap);

    let csv_rows: Vec<String> = optimum
        .support
        .iter()
        .zip(&optimum.weights)
        .map(|(n, w)| format!("{n},{}", csv_float(*w)))
        .collect();
    let json_value = serde_json::json!({
        "support": optimum.support,
        "weights": optimum.weights,
        "variance": optimum.variance,
        "qfi": 4.0 * optimum.variance,
        "bhatia_davis": bd,
        "popoviciu": pop,
        "bound_gap": optimum.bound_gap,
    });
    let human = vec![
        format!("problem:       maximize Var(n) on [{}, {}] with mean {}", args.m, args.cap, args.n_fixed),
        format!(
            "support:       {}",
            optimum
                .support
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
        format!(
            "weights:       {}",
            optimum
                .weights
                .iter()
                .map(|w| human_float(*w))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        format!("variance:      {}", human_float(optimum.variance)),
        format!("qfi:           {}", human_float(4.0 * optimum.variance)),
        format!("bhatia-davis:  {}", human_float(bd)),
        format!("popoviciu:     {}", human_float(pop)),
        format!("bound-gap:     {:e}", optimum.bound_gap),
    ];
    ctx.emit_table("n,weight", &csv_rows, "optimum", json_value, &human)
}

fn scaling_template(family: &str, eta: Option<f64>) -> Result<FamilyTemplate, CliError> {
    match family {
        "geometric" => Ok(FamilyTemplate::Geometric),
        "negative-binomial" | "nb" => {
            let shape = eta.ok_or_else(|| {
                CliError::Usage("negative-binomial scaling requires --eta".into())
            })?;
            Ok(FamilyTemplate::NegativeBinomial { shape })
        }
        "logarithmic" => Ok(FamilyTemplate::Logarithmic),
        "borel" => Ok(FamilyTemplate::Borel),
        "zeta" => Ok(FamilyTemplate::Zeta),
        "squeezed" | "squeezed-vacuum" => Ok(FamilyTemplate::SqueezedVacuum),
        "coherent" => Ok(FamilyTemplate::Coherent),
        other => Err(CliError::Usage(format!(
            "unknown scaling family `{other}`"
        ))),
    }
}

fn cmd_scaling(ctx: &OutputCtx, args: ScalingArgs) -> Result<(), CliError> {
    let template = scaling_template(&args.family, args.eta)?;
    let params = template
        .params_for_mean_range(args.n_min, args.n_max, args.points)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let fit = match fit_scaling_exponent(&template, &params) {
        Ok(fit) => fit,
        Err(err @ OptimizeError::DivergentMember { .. }) => {
            return Err(CliError::Divergent(err.to_string()))
        }
        Err(err) => return Err(CliError::Usage(err.to_string())),
    };
    let delta_phi_exponent = -fit.exponent / 2.0;

    let csv_row = format!(
        "{},{},{},{},{},{},{},{}",
        template.family_name(),
        csv_float(fit.exponent),
        csv_float(fit.intercept),
        csv_float(fit.r_squared),
        csv_float(fit.mean_range.0),
        csv_float(fit.mean_range.1),
        fit.points,
        csv_float(delta_phi_exponent),
    );
    let json_value = serde_json::json!({
        "family": template.family_name(),
        "parameter": template.parameter_name(),
        "exponent": fit.exponent,
        "intercept": fit.intercept,
        "r_squared": fit.r_squared,
        "n_min": fit.mean_range.0,
        "n_max": fit.mean_range.1,
        "points": fit.points,
        "delta_phi_exponent": delta_phi_exponent,
    });
    let human = vec![
        format!("family:              {}", template.family_name()),
        format!("swept parameter:     {}", template.parameter_name()),
        format!("points:              {}", fit.points),
        format!(
            "mean range:          {} .. {}",
            human_float(fit.mean_range.0),
            human_float(fit.mean_range.1)
        ),
        format!("qfi exponent:        {}", human_float(fit.exponent)),
        format!("intercept (ln H):    {}", human_float(fit.intercept)),
        format!("r-squared:           {:.8}", fit.r_squared),
        format!("delta-phi exponent:  {}", human_float(delta_phi_exponent)),
    ];
    ctx.emit_table(
        "family,exponent,intercept,r_squared,n_min,n_max,points,delta_phi_exponent",
        &[csv_row],
        "fit",
        json_value,
        &human,
    )
}

fn cmd_figure1(ctx: &OutputCtx, args: Figure1Args) -> Result<(), CliError> {
    let records = report::figure1_dataset(args.n, args.m_max, ctx.nu)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let reference = qfi_squeezed(args.n);
    let crossover = records
        .iter()
        .find(|record| record.qfi >= reference)
        .map(|record| record.param);
    let mut notes = vec![format!(
        "squeezed-vacuum reference at mean {}: qfi {}",
        args.n,
        human_float(reference)
    )];
    match crossover {
        Some(cutoff) => notes.push(format!(
            "two-point state overtakes the squeezed reference at M = {cutoff}"
        )),
        None => notes.push("two-point state stays below the squeezed reference in this range".into()),
    }
    ctx.emit_records(&records, &notes)
}

fn cmd_critical_mu(ctx: &OutputCtx, args: CriticalMuArgs) -> Result<(), CliError> {
    if args.tol.is_nan() || args.tol <= 0.0 || !args.tol.is_finite() {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let root = logarithmic_critical_mu(args.tol);
    let residual = 2.0 * root + (1.0 - root).ln();
    let csv_row = format!("{},{}", csv_float(root), csv_float(residual));
    let json_value = serde_json::json!({
        "mu_c": root,
        "residual": residual,
        "tol": args.tol,
    });
    let human = vec![
        format!("critical mu:  {root:.12}"),
        format!("residual:     {residual:e}"),
        "below the root the logarithmic variance stays under the mean squared; above it the excess grows without bound".into(),
    ];
    ctx.emit_table("mu_c,residual", &[csv_row], "critical_mu", json_value, &human)
}

fn human_record_table(records: &[SweepRecord]) -> String {
    let mut out = format!(
        "{:>14} {:>14} {:>14} {:>14} {:>14} {:>14} {:>14}\n",
        "param", "mean", "variance", "qfi", "delta_phi", "weight_a", "status"
    );
    for record in records {
        out.push_str(&format!(
            "{:>14} {:>14} {:>14} {:>14} {:>14} {:>14} {:>14}\n",
            human_float(record.param),
            human_float(record.mean),
            human_float(record.variance),
            human_float(record.qfi),
            record.delta_phi.map(human_float).unwrap_or_else(|| "-".into()),
            record.weight.map(human_float).unwrap_or_else(|| "-".into()),
            record.status.as_str(),
        ));
    }
    out
}

fn human_float(value: f64) -> String {
    if value.is_nan() {
        return "nan".into();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if value == 0.0 {
        return "0".into();
    }
    let magnitude = value.abs();
    if !(1e-4..1e7).contains(&magnitude) {
        format!("{value:.6e}")
    } else {
        let text = format!("{value:.6}");
        let trimmed = text.trim_end_matches('0').trim_end_matches('.');
        trimmed.to_string()
    }
}

fn csv_float(value: f64) -> String {
    if value.is_nan() {
        "nan".into()
    } else if value.is_infinite() {
        if value > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{value:.16e}")
    }
}

fn json_float(value: f64) -> serde_json::Value {
    match serde_json::Number::from_f64(value) {
        Some(number) => serde_json::Value::Number(number),
        None => serde_json::Value::String(csv_float(value)),
    }
}
