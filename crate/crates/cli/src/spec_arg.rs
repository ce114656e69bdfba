//! Compact textual grammar for distribution specs.
//!
//! `family:key=value,...`, e.g. `geometric:mu=0.5`, `mandm:m=0,M=25,n=7.46`,
//! `small-peak:a=0.3,inner=(borel:mu=0.5)`. The same key set backs the
//! `eval` command's long flags, so both entry points accept identical
//! parameterizations.

use std::collections::BTreeMap;

use photon_qfi::dist::DistributionSpec;

/// A parsed parameter: a scalar or a nested spec (small-peak inner).
#[derive(Clone, Debug)]
pub enum ParamValue {
    /// Scalar parameter.
    Number(f64),
    /// Nested distribution (parenthesized in the textual form).
    Nested(DistributionSpec),
}

/// Key → value map collected from flags or a spec string.
pub type ParamMap = BTreeMap<&'static str, ParamValue>;

/// Parses `family` or `family:key=value,...` into a validated spec.
pub fn parse_spec(text: &str) -> Result<DistributionSpec, String> {
    let text = text.trim();
    let (family, rest) = match text.split_once(':') {
        Some((family, rest)) => (family.trim(), rest),
        None => (text, ""),
    };
    let mut params = ParamMap::new();
    for assignment in split_top_level(rest) {
        let assignment = assignment.trim();
        if assignment.is_empty() {
            continue;
        }
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{assignment}`"))?;
        let key = canonical_key(key.trim())
            .ok_or_else(|| format!("unknown parameter `{}`", key.trim()))?;
        let value = value.trim();
        let value = if let Some(inner) = value.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| format!("unbalanced parentheses in `{value}`"))?;
            ParamValue::Nested(parse_spec(inner)?)
        } else {
            ParamValue::Number(
                value
                    .parse()
                    .map_err(|_| format!("bad number `{value}` for `{key}`"))?,
            )
        };
        if params.insert(key, value).is_some() {
            return Err(format!("duplicate parameter `{key}`"));
        }
    }
    build_spec(family, &params)
}

/// Splits on commas that sit outside parentheses.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (index, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&text[start..index]);
                start = index + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn canonical_key(key: &str) -> Option<&'static str> {
    Some(match key {
        "mu" => "mu",
        "eta" => "eta",
        "s" => "s",
        "r" => "r",
        "n" => "n",
        "a" => "a",
        "m" => "m",
        "M" => "M",
        "z" => "z",
        "inner" => "inner",
        _ => return None,
    })
}

/// Assembles a spec for `family` from collected parameters; every family
/// checks for missing and extraneous keys before validating ranges.
pub fn build_spec(family: &str, params: &ParamMap) -> Result<DistributionSpec, String> {
    let number = |key: &str| -> Result<f64, String> {
        match params.get(key) {
            Some(ParamValue::Number(value)) => Ok(*value),
            Some(ParamValue::Nested(_)) => Err(format!("`{key}` must be a number")),
            None => Err(format!("{family} requires `{key}`")),
        }
    };
    let photon_count = |key: &str| -> Result<u64, String> {
        let value = number(key)?;
        if value.fract() != 0.0 || value < 0.0 || value > u64::MAX as f64 {
            return Err(format!("`{key}` must be a non-negative integer"));
        }
        Ok(value as u64)
    };
    let expect_keys = |allowed: &[&str]| -> Result<(), String> {
        for key in params.keys() {
            if !allowed.contains(key) {
                return Err(format!("{family} does not take `{key}`"));
            }
        }
        Ok(())
    };

    let spec = match family {
        "geometric" => {
            expect_keys(&["mu"])?;
            DistributionSpec::Geometric { mu: number("mu")? }
        }
        "negative-binomial" | "nb" => {
            expect_keys(&["mu", "eta"])?;
            DistributionSpec::NegativeBinomial {
                mu: number("mu")?,
                shape: number("eta")?,
            }
        }
        "logarithmic" => {
            expect_keys(&["mu"])?;
            DistributionSpec::Logarithmic { mu: number("mu")? }
        }
        "borel" => {
            expect_keys(&["mu"])?;
            DistributionSpec::Borel { mu: number("mu")? }
        }
        "zeta" => {
            expect_keys(&["s"])?;
            DistributionSpec::Zeta { exponent: number("s")? }
        }
        "coherent" => {
            expect_keys(&["n"])?;
            DistributionSpec::Coherent { mean: number("n")? }
        }
        "squeezed" | "squeezed-vacuum" => {
            expect_keys(&["r", "n"])?;
            let squeezing = match (params.get("r"), params.get("n")) {
                (Some(ParamValue::Number(r)), None) => *r,
                (None, Some(ParamValue::Number(mean))) => {
                    if *mean < 0.0 {
                        return Err("squeezed `n` must be non-negative".into());
                    }
                    mean.sqrt().asinh()
                }
                (Some(_), Some(_)) => {
                    return Err("squeezed takes `r` or `n`, not both".into());
                }
                _ => return Err("squeezed requires `r` or `n`".into()),
            };
            DistributionSpec::SqueezedVacuum { squeezing }
        }
        "mandm" | "m&M" => {
            expect_keys(&["m", "M", "a", "n"])?;
            let low = photon_count("m")?;
            let high = photon_count("M")?;
            let weight = match (params.get("a"), params.get("n")) {
                (Some(ParamValue::Number(a)), None) => *a,
                (None, Some(ParamValue::Number(mean))) => {
                    if high <= low || *mean < low as f64 || *mean > high as f64 {
                        return Err("mandm `n` must lie within [m, M]".into());
                    }
                    (mean - low as f64) / (high - low) as f64
                }
                (Some(_), Some(_)) => return Err("mandm takes `a` or `n`, not both".into()),
                _ => return Err("mandm requires `a` or `n`".into()),
            };
            DistributionSpec::MAndM { low, high, weight }
        }
        "ssw" => {
            expect_keys(&["M"])?;
            DistributionSpec::Ssw { cutoff: photon_count("M")? }
        }
        "ss" => {
            expect_keys(&["M", "z"])?;
            DistributionSpec::Ss {
                cutoff: photon_count("M")?,
                offset: number("z")?,
            }
        }
        "dowling" => {
            expect_keys(&["z", "eta"])?;
            DistributionSpec::Dowling {
                offset: number("z")?,
                cutoff_scale: number("eta")?,
            }
        }
        "small-peak" => {
            expect_keys(&["a", "inner"])?;
            let inner = match params.get("inner") {
                Some(ParamValue::Nested(spec)) => spec.clone(),
                _ => return Err("small-peak requires `inner=(family:...)`".into()),
            };
            DistributionSpec::SmallPeak {
                weight: number("a")?,
                inner: Box::new(inner),
            }
        }
        other => {
            return Err(format!(
                "unknown family `{other}`; expected one of geometric, negative-binomial, \
                 logarithmic, borel, zeta, coherent, squeezed, mandm, ssw, ss, dowling, small-peak"
            ))
        }
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

/// The family's leading scalar, used as a record's `param` column.
pub fn primary_parameter(spec: &DistributionSpec) -> f64 {
    match spec {
        DistributionSpec::Geometric { mu }
        | DistributionSpec::NegativeBinomial { mu, .. }
        | DistributionSpec::Logarithmic { mu }
        | DistributionSpec::Borel { mu } => *mu,
        DistributionSpec::Zeta { exponent } => *exponent,
        DistributionSpec::Coherent { mean } => *mean,
        DistributionSpec::SqueezedVacuum { squeezing } => *squeezing,
        DistributionSpec::MAndM { high, .. }
        | DistributionSpec::Ssw { cutoff: high }
        | DistributionSpec::Ss { cutoff: high, .. } => *high as f64,
        DistributionSpec::Dowling { cutoff_scale, .. } => *cutoff_scale,
        DistributionSpec::SmallPeak { weight, .. } => *weight,
    }
}
