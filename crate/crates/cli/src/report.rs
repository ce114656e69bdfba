//! Parameter sweeps and their CSV/JSON serialization.
//!
//! A sweep evaluates one distribution family over a list of parameter values
//! and emits one [`SweepRecord`] per value. Records are the unit of file
//! output; the CSV layout (`param,mean,variance,qfi,delta_phi,weight_a,status`
//! header, 17-significant-digit floats, `inf` for divergent entries, LF line
//! endings, `.` decimal separator) is fixed so golden files stay bit-exact
//! across platforms and locales. Failing sweep points become records with
//! status `invalid` instead of aborting the sweep.

use std::fmt;

use photon_qfi::dist::{
    make_pmf, moments_by_summation, moments_closed_form, DistError, FamilyTemplate, MomentResult,
    MomentStatus, TruncationConfig,
};
use photon_qfi::qfi::{crlb, qfi_mandm_fixed_mean};

/// Convergence status carried by a sweep record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecordStatus {
    /// Exact closed form or fully summed finite support.
    Exact,
    /// Adaptive summation converged.
    Converged,
    /// Divergent variance; `qfi` is infinite.
    Diverges,
    /// Term budget exhausted without a verdict.
    NotConverged,
    /// The sweep point failed validation; numeric fields are NaN.
    Invalid,
}

impl RecordStatus {
    /// Stable lowercase token used in CSV and JSON output.
    pub fn as_str(self) -> &'static str {
        match self {
            RecordStatus::Exact => "exact",
            RecordStatus::Converged => "converged",
            RecordStatus::Diverges => "diverges",
            RecordStatus::NotConverged => "not_converged",
            RecordStatus::Invalid => "invalid",
        }
    }

    fn parse(token: &str) -> Result<Self, ReportError> {
        match token {
            "exact" => Ok(RecordStatus::Exact),
            "converged" => Ok(RecordStatus::Converged),
            "diverges" => Ok(RecordStatus::Diverges),
            "not_converged" => Ok(RecordStatus::NotConverged),
            "invalid" => Ok(RecordStatus::Invalid),
            other => Err(ReportError::Parse(format!("unknown status `{other}`"))),
        }
    }
}

impl From<MomentStatus> for RecordStatus {
    fn from(status: MomentStatus) -> Self {
        match status {
            MomentStatus::Exact => RecordStatus::Exact,
            MomentStatus::Converged { .. } => RecordStatus::Converged,
            MomentStatus::Diverges => RecordStatus::Diverges,
            MomentStatus::NotConverged => RecordStatus::NotConverged,
        }
    }
}

/// One row of a parameter sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    /// Swept parameter value.
    pub param: f64,
    /// Mean photon number at this point.
    pub mean: f64,
    /// Photon-number variance (infinite when divergent).
    pub variance: f64,
    /// QFI = 4·variance when finite.
    pub qfi: f64,
    /// Cramér–Rao phase error for the sweep's repetition count; absent when
    /// the QFI is infinite, zero, or untrusted.
    pub delta_phi: Option<f64>,
    /// Two-point weight a = (N−m)/(M−m); present only for fixed-mean sweeps.
    pub weight: Option<f64>,
    /// Convergence status of this point.
    pub status: RecordStatus,
}

/// What a sweep iterates over.
#[derive(Clone, Debug, PartialEq)]
pub enum SweepTemplate {
    /// A single-parameter family; values are that parameter.
    Family(FamilyTemplate),
    /// Two-point states at fixed low end and mean; values are the cutoff M.
    MandMFixedMean {
        /// Fixed low photon number m.
        low: u64,
        /// Mean photon number held constant across the sweep.
        mean: f64,
    },
}

/// A validated sweep request.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    /// Family or fixed-mean template.
    pub template: SweepTemplate,
    /// Swept values; must be non-empty and strictly increasing.
    pub values: Vec<f64>,
    /// Measurement repetitions for the Δφ column.
    pub repetitions: u64,
    /// Truncation policy for points that need the summation oracle.
    pub truncation: TruncationConfig,
}

/// Errors from sweep construction and serialization.
#[derive(Clone, Debug, PartialEq)]
pub enum ReportError {
    /// Serialization requires at least one record.
    EmptySweep,
    /// Sweep values must be strictly increasing.
    NonMonotonicValues,
    /// A scalar argument violated its documented range.
    InvalidParameter(String),
    /// A finite record failed the qfi = 4·variance consistency recheck.
    InconsistentRecord {
        /// Index of the offending record.
        index: usize,
    },
    /// Byte stream did not match the expected format.
    Parse(String),
}

impl fmt::Display for ReportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportError::EmptySweep => write!(f, "sweep holds no records"),
            ReportError::NonMonotonicValues => {
                write!(f, "sweep values must be strictly increasing")
            }
            ReportError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            ReportError::InconsistentRecord { index } => {
                write!(f, "record {index} violates qfi = 4*variance")
            }
            ReportError::Parse(what) => write!(f, "parse error: {what}"),
        }
    }
}

impl std::error::Error for ReportError {}

/// Runs a sweep, one record per value; per-point failures become records
/// with status `invalid` rather than aborting the sweep.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>, ReportError> {
    if spec.values.is_empty() {
        return Err(ReportError::EmptySweep);
    }
    if spec.values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ReportError::NonMonotonicValues);
    }
    if spec.repetitions == 0 {
        return Err(ReportError::InvalidParameter(
            "repetitions must be at least 1".into(),
        ));
    }
    if let SweepTemplate::MandMFixedMean { low, mean } = &spec.template {
        if !mean.is_finite() || *mean < *low as f64 {
            return Err(ReportError::InvalidParameter(
                "fixed mean must be finite and at least the low photon number".into(),
            ));
        }
    }
    Ok(spec
        .values
        .iter()
        .map(|&value| sweep_point(spec, value))
        .collect())
}

fn sweep_point(spec: &SweepSpec, value: f64) -> SweepRecord {
    match &spec.template {
        SweepTemplate::Family(template) => match family_moments(template, value, &spec.truncation)
        {
            Ok(moments) => record_from_moments(value, &moments, None, spec.repetitions),
            Err(_) => invalid_record(value),
        },
        SweepTemplate::MandMFixedMean { low, mean } => {
            if value.fract() != 0.0 || value < 0.0 {
                return invalid_record(value);
            }
            let cutoff = value as u64;
            match qfi_mandm_fixed_mean(*low, cutoff, *mean) {
                Ok(qfi) => SweepRecord {
                    param: value,
                    mean: *mean,
                    variance: qfi / 4.0,
                    qfi,
                    delta_phi: crlb(qfi, spec.repetitions).ok(),
                    weight: Some((mean - *low as f64) / (cutoff - low) as f64),
                    status: RecordStatus::Exact,
                },
                Err(_) => invalid_record(value),
            }
        }
    }
}

fn family_moments(
    template: &FamilyTemplate,
    value: f64,
    truncation: &TruncationConfig,
) -> Result<MomentResult, DistError> {
    let spec = template.instantiate(value)?;
    match moments_closed_form(&spec) {
        Ok(moments) => Ok(moments),
        Err(DistError::Unsupported { .. }) => {
            let pmf = make_pmf(spec)?;
            Ok(moments_by_summation(&pmf, truncation))
        }
        Err(err) => Err(err),
    }
}

fn record_from_moments(
    param: f64,
    moments: &MomentResult,
    weight: Option<f64>,
    repetitions: u64,
) -> SweepRecord {
    let status = RecordStatus::from(moments.status);
    let (variance, qfi) = match status {
        RecordStatus::Exact | RecordStatus::Converged => {
            (moments.variance, 4.0 * moments.variance)
        }
        RecordStatus::Diverges => (f64::INFINITY, f64::INFINITY),
        _ => (f64::NAN, f64::NAN),
    };
    let delta_phi = match status {
        RecordStatus::Exact | RecordStatus::Converged => crlb(qfi, repetitions).ok(),
        _ => None,
    };
    SweepRecord {
        param,
        mean: moments.mean,
        variance,
        qfi,
        delta_phi,
        weight,
        status,
    }
}

fn invalid_record(param: f64) -> SweepRecord {
    SweepRecord {
        param,
        mean: f64::NAN,
        variance: f64::NAN,
        qfi: f64::NAN,
        delta_phi: None,
        weight: None,
        status: RecordStatus::Invalid,
    }
}

/// Tabulates the zero-based two-point QFI against its cutoff at fixed mean:
/// one record per M from ⌈mean⌉+1 to `max_cutoff`, each carrying the weight
/// a = mean/M. The squeezed-vacuum reference at the same mean is
/// `qfi_squeezed(mean)`, constant across the sweep.
pub fn figure1_dataset(
    mean: f64,
    max_cutoff: u64,
    repetitions: u64,
) -> Result<Vec<SweepRecord>, ReportError> {
    if !mean.is_finite() || mean <= 0.0 {
        return Err(ReportError::InvalidParameter(
            "mean photon number must be positive".into(),
        ));
    }
    let start = mean.ceil() as u64 + 1;
    if max_cutoff < start {
        return Err(ReportError::InvalidParameter(format!(
            "max cutoff must be at least {start} for mean {mean}"
        )));
    }
    let spec = SweepSpec {
        template: SweepTemplate::MandMFixedMean { low: 0, mean },
        values: (start..=max_cutoff).map(|m| m as f64).collect(),
        repetitions,
        truncation: TruncationConfig::default(),
    };
    run_sweep(&spec)
}

/// Output encodings for sweep records.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// Fixed-header CSV with LF endings.
    Csv,
    /// Flat JSON array of record objects.
    Json,
}

/// Fixed CSV header row.
pub const CSV_HEADER: &str = "param,mean,variance,qfi,delta_phi,weight_a,status";

/// Serializes records; floats carry 17 significant digits so every finite
/// field round-trips bit-exactly, infinities render as the literal `inf`.
///
/// As a defense-in-depth check, every finite record is re-verified to
/// satisfy qfi = 4·variance before any bytes are produced.
pub fn serialize(records: &[SweepRecord], format: Format) -> Result<Vec<u8>, ReportError> {
    if records.is_empty() {
        return Err(ReportError::EmptySweep);
    }
    for (index, record) in records.iter().enumerate() {
        if matches!(record.status, RecordStatus::Exact | RecordStatus::Converged)
            && (record.qfi - 4.0 * record.variance).abs() > 1e-12 * record.qfi.abs().max(1.0)
        {
            return Err(ReportError::InconsistentRecord { index });
        }
    }
    match format {
        Format::Csv => {
            let mut out = String::with_capacity(64 * (records.len() + 1));
            out.push_str(CSV_HEADER);
            out.push('\n');
            for record in records {
                out.push_str(&format_float(record.param));
                out.push(',');
                out.push_str(&format_float(record.mean));
                out.push(',');
                out.push_str(&format_float(record.variance));
                out.push(',');
                out.push_str(&format_float(record.qfi));
                out.push(',');
                if let Some(delta_phi) = record.delta_phi {
                    out.push_str(&format_float(delta_phi));
                }
                out.push(',');
                if let Some(weight) = record.weight {
                    out.push_str(&format_float(weight));
                }
                out.push(',');
                out.push_str(record.status.as_str());
                out.push('\n');
            }
            Ok(out.into_bytes())
        }
        Format::Json => {
            let array: Vec<serde_json::Value> = records
                .iter()
                .map(|record| {
                    let mut object = serde_json::Map::new();
                    object.insert("param".into(), json_number(record.param));
                    object.insert("mean".into(), json_number(record.mean));
                    object.insert("variance".into(), json_number(record.variance));
                    object.insert("qfi".into(), json_number(record.qfi));
                    if let Some(delta_phi) = record.delta_phi {
                        object.insert("delta_phi".into(), json_number(delta_phi));
                    }
                    if let Some(weight) = record.weight {
                        object.insert("weight_a".into(), json_number(weight));
                    }
                    object.insert("status".into(), record.status.as_str().into());
                    serde_json::Value::Object(object)
                })
                .collect();
            serde_json::to_vec(&array).map_err(|e| ReportError::Parse(e.to_string()))
        }
    }
}

/// Parses bytes produced by [`serialize`]; finite fields round-trip exactly.
pub fn parse(bytes: &[u8], format: Format) -> Result<Vec<SweepRecord>, ReportError> {
    match format {
        Format::Csv => {
            let text = std::str::from_utf8(bytes)
                .map_err(|_| ReportError::Parse("CSV is not UTF-8".into()))?;
            let mut lines = text.lines();
            match lines.next() {
                Some(header) if header == CSV_HEADER => {}
                other => {
                    return Err(ReportError::Parse(format!(
                        "bad CSV header: {other:?}"
                    )))
                }
            }
            lines
                .map(|line| {
                    let fields: Vec<&str> = line.split(',').collect();
                    if fields.len() != 7 {
                        return Err(ReportError::Parse(format!(
                            "expected 7 fields, got {} in `{line}`",
                            fields.len()
                        )));
                    }
                    Ok(SweepRecord {
                        param: parse_float(fields[0])?,
                        mean: parse_float(fields[1])?,
                        variance: parse_float(fields[2])?,
                        qfi: parse_float(fields[3])?,
                        delta_phi: parse_optional_float(fields[4])?,
                        weight: parse_optional_float(fields[5])?,
                        status: RecordStatus::parse(fields[6])?,
                    })
                })
                .collect()
        }
        Format::Json => {
            let value: serde_json::Value = serde_json::from_slice(bytes)
                .map_err(|e| ReportError::Parse(e.to_string()))?;
            let array = value
                .as_array()
                .ok_or_else(|| ReportError::Parse("expected a JSON array".into()))?;
            array
                .iter()
                .map(|entry| {
                    let object = entry
                        .as_object()
                        .ok_or_else(|| ReportError::Parse("expected record objects".into()))?;
                    let required = |key: &str| {
                        object
                            .get(key)
                            .ok_or_else(|| ReportError::Parse(format!("missing key `{key}`")))
                            .and_then(number_from_json)
                    };
                    Ok(SweepRecord {
                        param: required("param")?,
                        mean: required("mean")?,
                        variance: required("variance")?,
                        qfi: required("qfi")?,
                        delta_phi: object
                            .get("delta_phi")
                            .map(number_from_json)
                            .transpose()?,
                        weight: object.get("weight_a").map(number_from_json).transpose()?,
                        status: RecordStatus::parse(
                            object
                                .get("status")
                                .and_then(|v| v.as_str())
                                .ok_or_else(|| ReportError::Parse("missing status".into()))?,
                        )?,
                    })
                })
                .collect()
        }
    }
}

/// 17 significant digits: exact f64 round-trips with a locale-free layout.
fn format_float(value: f64) -> String {
    if value.is_nan() {
        "nan".into()
    } else if value.is_infinite() {
        if value > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{value:.16e}")
    }
}

fn parse_float(field: &str) -> Result<f64, ReportError> {
    match field {
        "inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        "nan" => Ok(f64::NAN),
        other => other
            .parse()
            .map_err(|_| ReportError::Parse(format!("bad float `{other}`"))),
    }
}

fn parse_optional_float(field: &str) -> Result<Option<f64>, ReportError> {
    if field.is_empty() {
        Ok(None)
    } else {
        parse_float(field).map(Some)
    }
}

/// Finite values stay JSON numbers; non-finite ones become the strings JSON
/// cannot express as numbers, mirroring the CSV convention.
fn json_number(value: f64) -> serde_json::Value {
    match serde_json::Number::from_f64(value) {
        Some(number) => serde_json::Value::Number(number),
        None => serde_json::Value::String(format_float(value)),
    }
}

fn number_from_json(value: &serde_json::Value) -> Result<f64, ReportError> {
    match value {
        serde_json::Value::Number(number) => number
            .as_f64()
            .ok_or_else(|| ReportError::Parse("non-f64 number".into())),
        serde_json::Value::String(token) => parse_float(token),
        other => Err(ReportError::Parse(format!("expected a number, got {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use photon_qfi::qfi::qfi_squeezed;

    fn geometric_sweep(values: Vec<f64>) -> SweepSpec {
        SweepSpec {
            template: SweepTemplate::Family(FamilyTemplate::Geometric),
            values,
            repetitions: 1,
            truncation: TruncationConfig::default(),
        }
    }

    #[test]
    fn single_record_layout() {
        let records = vec![SweepRecord {
            param: 0.5,
            mean: 1.0,
            variance: 2.0,
            qfi: 8.0,
            delta_phi: Some(0.125),
            weight: None,
            status: RecordStatus::Exact,
        }];
        let bytes = serialize(&records, Format::Csv).unwrap();
        let text = String::from_utf8(bytes).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        assert_eq!(
            lines.next().unwrap(),
            "5.0000000000000000e-1,1.0000000000000000e0,2.0000000000000000e0,8.0000000000000000e0,1.2500000000000000e-1,,exact"
        );
        assert!(lines.next().is_none());
    }

    #[test]
    fn divergent_record_renders_inf_and_empty_delta_phi() {
        let records = vec![SweepRecord {
            param: 2.5,
            mean: 1.9472580728338527,
            variance: f64::INFINITY,
            qfi: f64::INFINITY,
            delta_phi: None,
            weight: None,
            status: RecordStatus::Diverges,
        }];
        let text = String::from_utf8(serialize(&records, Format::Csv).unwrap()).unwrap();
        let row = text.lines().nth(1).unwrap();
        assert!(row.contains(",inf,inf,,"), "row: {row}");
        assert!(row.ends_with(",diverges"));

        let json = serialize(&records, Format::Json).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&json).unwrap();
        assert_eq!(value[0]["qfi"], serde_json::json!("inf"));
        assert!(value[0].get("delta_phi").is_none());
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(serialize(&[], Format::Csv).unwrap_err(), ReportError::EmptySweep);
    }

    #[test]
    fn inconsistent_record_is_rejected() {
        let records = vec![SweepRecord {
            param: 0.5,
            mean: 1.0,
            variance: 2.0,
            qfi: 9.0,
            delta_phi: None,
            weight: None,
            status: RecordStatus::Exact,
        }];
        assert!(matches!(
            serialize(&records, Format::Csv),
            Err(ReportError::InconsistentRecord { index: 0 })
        ));
    }

    #[test]
    fn sweep_validation() {
        assert_eq!(
            run_sweep(&geometric_sweep(vec![])).unwrap_err(),
            ReportError::EmptySweep
        );
        assert_eq!(
            run_sweep(&geometric_sweep(vec![0.5, 0.4])).unwrap_err(),
            ReportError::NonMonotonicValues
        );
    }

    #[test]
    fn failing_points_become_invalid_records() {
        // 1.5 is out of range for the geometric family; the sweep continues.
        let records = run_sweep(&geometric_sweep(vec![0.5, 1.5])).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].status, RecordStatus::Exact);
        assert_eq!(records[1].status, RecordStatus::Invalid);
        assert!(records[1].mean.is_nan());
    }

    #[test]
    fn borel_sweep_hits_closed_form_values() {
        let spec = SweepSpec {
            template: SweepTemplate::Family(FamilyTemplate::Borel),
            values: vec![0.9, 0.99, 0.999],
            repetitions: 1,
            truncation: TruncationConfig::default(),
        };
        let records = run_sweep(&spec).unwrap();
        // Means 10, 100, 1000; H = 4N²(N−1).
        let expected = [(10.0, 3600.0), (100.0, 3.96e6), (1000.0, 3.996e9)];
        for (record, (mean, qfi)) in records.iter().zip(expected) {
            assert!((record.mean - mean).abs() < 1e-9 * mean);
            assert!((record.qfi - qfi).abs() < 1e-9 * qfi);
        }
    }

    #[test]
    fn figure1_shape_and_crossover() {
        let records = figure1_dataset(7.46, 100, 1).unwrap();
        assert_eq!(records.len(), 100 - 9 + 1);
        assert_eq!(records[0].param, 9.0);
        let reference = qfi_squeezed(7.46);
        // Strictly increasing QFI, strictly decreasing weight.
        for pair in records.windows(2) {
            assert!(pair[1].qfi > pair[0].qfi);
            assert!(pair[1].weight.unwrap() < pair[0].weight.unwrap());
        }
        // Crossing between M = 24 and M = 25.
        let at = |m: f64| records.iter().find(|r| r.param == m).unwrap();
        assert!(at(24.0).qfi < reference);
        assert!(at(25.0).qfi > reference);
        assert!((at(25.0).qfi - 523.3936).abs() < 1e-9);
        assert!((at(25.0).weight.unwrap() - 0.2984).abs() < 1e-12);
    }

    #[test]
    fn figure1_single_record_edge() {
        let records = figure1_dataset(1.0, 2, 1).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].qfi, 4.0);
        assert!(figure1_dataset(1.0, 1, 1).is_err());
        assert!(figure1_dataset(-1.0, 10, 1).is_err());
    }

    #[test]
    fn zeta_sweep_point_diverges() {
        let spec = SweepSpec {
            template: SweepTemplate::Family(FamilyTemplate::Zeta),
            values: vec![2.5, 4.0],
            repetitions: 1,
            truncation: TruncationConfig::default(),
        };
        let records = run_sweep(&spec).unwrap();
        assert_eq!(records[0].status, RecordStatus::Diverges);
        assert!(records[0].qfi.is_infinite());
        assert_eq!(records[0].delta_phi, None);
        assert_eq!(records[1].status, RecordStatus::Exact);
    }

    #[test]
    fn window_families_fall_back_to_summation() {
        let spec = SweepSpec {
            template: SweepTemplate::MandMFixedMean { low: 0, mean: 7.46 },
            values: vec![8.0, 25.0],
            repetitions: 4,
            truncation: TruncationConfig::default(),
        };
        let records = run_sweep(&spec).unwrap();
        assert_eq!(records[1].qfi, 523.3936);
        // Δφ = 1/sqrt(4·H).
        let expected = 1.0 / (4.0f64 * 523.3936).sqrt();
        assert!((records[1].delta_phi.unwrap() - expected).abs() < 1e-15);
    }
}
