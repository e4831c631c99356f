//! Ingestion of digitized experimental traces and model comparison.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::profile::IntensityProfile;

/// Digitized detector counts over screen coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentalTrace {
    s: Vec<f64>,
    counts: Vec<f64>,
    /// Fixed offset added to the trace abscissae before comparison (m).
    pub shift: Option<f64>,
    /// Constant background subtracted from the counts.
    pub background: Option<f64>,
}

impl ExperimentalTrace {
    pub fn new(s: Vec<f64>, counts: Vec<f64>) -> Result<Self> {
        if s.is_empty() || s.len() != counts.len() {
            return Err(Error::invalid(
                "trace",
                format!("need equal nonzero lengths, got {} and {}", s.len(), counts.len()),
            ));
        }
        if !s.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::invalid("trace.s", "abscissae must strictly increase"));
        }
        if let Some((i, v)) = counts
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
        {
            return Err(Error::invalid(
                "trace.counts",
                format!("sample {i} is {v}; counts must be finite and >= 0"),
            ));
        }
        Ok(Self {
            s,
            counts,
            shift: None,
            background: None,
        })
    }

    pub fn s(&self) -> &[f64] {
        &self.s
    }

    pub fn counts(&self) -> &[f64] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Parse the `s_m,counts` CSV format (UTF-8, LF, `.` decimals).
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next().map(str::trim_end) {
            Some("s_m,counts") => {}
            other => {
                return Err(Error::invalid(
                    "trace.csv",
                    format!("expected header `s_m,counts`, got {other:?}"),
                ))
            }
        }
        let mut s = Vec::new();
        let mut counts = Vec::new();
        for (lineno, line) in lines.enumerate() {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split(',');
            let (sv, cv) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(Error::invalid(
                        "trace.csv",
                        format!("line {}: expected two comma-separated fields", lineno + 2),
                    ))
                }
            };
            let parse = |name: &str, v: &str| -> Result<f64> {
                v.trim().parse::<f64>().map_err(|_| {
                    Error::invalid(
                        "trace.csv",
                        format!("line {}: cannot parse {name} value `{v}`", lineno + 2),
                    )
                })
            };
            s.push(parse("s_m", sv)?);
            counts.push(parse("counts", cv)?);
        }
        Self::new(s, counts)
    }

    /// Serialize to the `s_m,counts` CSV format.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("s_m,counts\n");
        for (s, c) in self.s.iter().zip(&self.counts) {
            out.push_str(&format!("{s},{c}\n"));
        }
        out
    }
}

/// Residual diagnostics of a model-versus-trace comparison.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    /// Multiplier applied to the model (closed-form least squares).
    pub scale: f64,
    /// Shift (m) subtracted from the trace abscissae to align with the model.
    pub shift: f64,
    /// Sum of squared residuals over the overlap.
    pub sse: f64,
    /// Per-point residuals `counts - scale * model` over the overlap.
    pub residuals: Vec<f64>,
    /// Number of trace points that fell inside the model's range.
    pub points: usize,
}

/// Compare a computed profile against an experimental trace.
///
/// The model is linearly interpolated onto the (shifted) trace
/// abscissae. `fit_scale` solves the closed-form least-squares scale
/// `sum(exp * model) / sum(model^2)`; `fit_shift` grid-searches the
/// shift over one tenth of the model's span on either side of the
/// trace's own `shift` field, at the model's grid resolution.
pub fn compare_to_experiment(
    profile: &IntensityProfile,
    trace: &ExperimentalTrace,
    fit_scale: bool,
    fit_shift: bool,
) -> Result<ComparisonReport> {
    let base_shift = trace.shift.unwrap_or(0.0);
    let background = trace.background.unwrap_or(0.0);
    let counts: Vec<f64> = trace.counts.iter().map(|c| c - background).collect();

    let candidates: Vec<f64> = if fit_shift {
        let span = profile.s().last().unwrap() - profile.s()[0];
        let step = if profile.len() > 1 {
            span / (profile.len() - 1) as f64
        } else {
            span.max(f64::MIN_POSITIVE)
        };
        let half_window = ((0.1 * span / step).round() as i64).max(1);
        (-half_window..=half_window)
            .map(|j| base_shift + j as f64 * step)
            .collect()
    } else {
        vec![base_shift]
    };

    let mut best: Option<ComparisonReport> = None;
    for shift in candidates {
        let Some(report) = align(profile, &trace.s, &counts, shift, fit_scale) else {
            continue;
        };
        let better = match &best {
            None => true,
            Some(prev) => report.sse < prev.sse,
        };
        if better {
            best = Some(report);
        }
    }
    best.ok_or(Error::EmptyOverlap { shift: base_shift })
}

fn align(
    profile: &IntensityProfile,
    trace_s: &[f64],
    counts: &[f64],
    shift: f64,
    fit_scale: bool,
) -> Option<ComparisonReport> {
    let s0 = profile.s()[0];
    let s1 = *profile.s().last().unwrap();
    let mut model = Vec::new();
    let mut observed = Vec::new();
    for (s, c) in trace_s.iter().zip(counts) {
        let x = s - shift;
        if x < s0 || x > s1 {
            continue;
        }
        model.push(interp(profile.s(), profile.intensity(), x));
        observed.push(*c);
    }
    if model.is_empty() {
        return None;
    }
    let scale = if fit_scale {
        let num: f64 = observed.iter().zip(&model).map(|(o, m)| o * m).sum();
        let den: f64 = model.iter().map(|m| m * m).sum();
        if den == 0.0 {
            1.0
        } else {
            num / den
        }
    } else {
        1.0
    };
    let residuals: Vec<f64> = observed
        .iter()
        .zip(&model)
        .map(|(o, m)| o - scale * m)
        .collect();
    let sse = residuals.iter().map(|r| r * r).sum();
    Some(ComparisonReport {
        scale,
        shift,
        sse,
        points: residuals.len(),
        residuals,
    })
}

/// Linear interpolation on a strictly increasing grid; `x` must lie
/// inside the grid's range.
fn interp(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    match xs.binary_search_by(|v| v.total_cmp(&x)) {
        Ok(i) => ys[i],
        Err(i) => {
            if i == 0 {
                ys[0]
            } else if i >= xs.len() {
                ys[xs.len() - 1]
            } else {
                let t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
                ys[i - 1] + t * (ys[i] - ys[i - 1])
            }
        }
    }
}
