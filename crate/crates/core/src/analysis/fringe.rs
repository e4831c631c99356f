//! Fringe visibility from sampled intensity profiles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::profile::IntensityProfile;

/// Which side of the central maximum supplied the reported minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinSide {
    Left,
    Right,
}

/// Central-fringe contrast report.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FringeReport {
    /// Central (global) maximum intensity.
    pub i_max: f64,
    /// Lower of the two local minima adjacent to it.
    pub i_min: f64,
    /// `(i_max - i_min) / (i_max + i_min)`.
    pub visibility: f64,
    /// Screen coordinate of the maximum.
    pub s_max: f64,
    /// Screen coordinate of the reported minimum.
    pub s_min_loc: f64,
    /// Side the minimum was taken from.
    pub min_side: MinSide,
    /// Whether locations/values were parabolically refined.
    pub refined: bool,
}

/// The visibility formula on raw extremum intensities.
pub fn fringe_visibility(i_max: f64, i_min: f64) -> f64 {
    (i_max - i_min) / (i_max + i_min)
}

/// Fringe report on sampled points only (no interpolation).
pub fn visibility(profile: &IntensityProfile) -> Result<FringeReport> {
    visibility_refined(profile, false)
}

/// Fringe report with optional parabolic refinement of the extremum
/// locations and values (three-point vertex fit).
pub fn visibility_refined(profile: &IntensityProfile, parabolic: bool) -> Result<FringeReport> {
    if profile.len() < 5 {
        return Err(Error::invalid(
            "profile",
            format!("need at least 5 samples for fringe analysis, got {}", profile.len()),
        ));
    }
    let v = profile.intensity();
    let s = profile.s();

    let (maxima, minima) = local_extrema(v);
    if maxima.is_empty() {
        return Err(Error::NoFringe(
            "profile has no interior local maximum".to_string(),
        ));
    }
    // central maximum: the highest local maximum, leftmost on ties
    let center = *maxima
        .iter()
        .max_by(|&&i, &&j| v[i].total_cmp(&v[j]).then(j.cmp(&i)))
        .expect("nonempty");

    let left_min = minima.iter().copied().filter(|&i| i < center).next_back();
    let right_min = minima.iter().copied().find(|&i| i > center);
    let (min_idx, min_side) = match (left_min, right_min) {
        (Some(li), Some(ri)) => {
            // take the lower of the two adjacent minima; ties go left
            if v[li] <= v[ri] {
                (li, MinSide::Left)
            } else {
                (ri, MinSide::Right)
            }
        }
        (Some(li), None) => (li, MinSide::Left),
        (None, Some(ri)) => (ri, MinSide::Right),
        (None, None) => {
            return Err(Error::NoFringe(
                "no local minimum adjacent to the central maximum".to_string(),
            ))
        }
    };

    let (s_max, i_max) = refine(s, v, center, parabolic);
    let (s_min_loc, i_min) = refine(s, v, min_idx, parabolic);
    // parabolic refinement of a minimum can only lower it; clamp at 0
    let i_min = i_min.max(0.0);

    Ok(FringeReport {
        i_max,
        i_min,
        visibility: fringe_visibility(i_max, i_min),
        s_max,
        s_min_loc,
        min_side,
        refined: parabolic,
    })
}

/// Interior local maxima and minima by neighbor comparison; plateaus
/// count once, at their leftmost sample.
fn local_extrema(v: &[f64]) -> (Vec<usize>, Vec<usize>) {
    let mut maxima = Vec::new();
    let mut minima = Vec::new();
    let n = v.len();
    let mut run_start = 0;
    while run_start < n {
        let mut run_end = run_start;
        while run_end + 1 < n && v[run_end + 1] == v[run_start] {
            run_end += 1;
        }
        if run_start > 0 && run_end + 1 < n {
            let before = v[run_start - 1];
            let here = v[run_start];
            let after = v[run_end + 1];
            if before < here && after < here {
                maxima.push(run_start);
            } else if before > here && after > here {
                minima.push(run_start);
            }
        }
        run_start = run_end + 1;
    }
    (maxima, minima)
}

fn refine(s: &[f64], v: &[f64], idx: usize, parabolic: bool) -> (f64, f64) {
    if !parabolic || idx == 0 || idx + 1 >= v.len() {
        return (s[idx], v[idx]);
    }
    let (y0, y1, y2) = (v[idx - 1], v[idx], v[idx + 1]);
    let denom = y0 - 2.0 * y1 + y2;
    if denom == 0.0 {
        return (s[idx], v[idx]);
    }
    // vertex of the parabola through three equally spaced samples
    let offset = 0.5 * (y0 - y2) / denom;
    let h = 0.5 * (s[idx + 1] - s[idx - 1]);
    let value = y1 - 0.25 * (y0 - y2) * offset;
    (s[idx] + offset * h, value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beam::BeamParams;
    use crate::geometry::SlitGeometry;
    use crate::modes::Truncation;
    use crate::profile::{ProfileKind, ProfileMeta};
    use crate::scan::DetectorScan;
    use std::f64::consts::PI;

    fn synthetic(values: Vec<f64>) -> IntensityProfile {
        let n = values.len() as u32;
        let meta = ProfileMeta {
            kind: ProfileKind::Single,
            beam: BeamParams::from_energy(1.67e-27, 3.3e-23, 1.0).unwrap(),
            geometry: SlitGeometry::single(90e-6, 5e-3, 3e-5).unwrap(),
            scan: DetectorScan::new(5.0, 0.0, 0.0, (n - 1) as f64, n).unwrap(),
            coherence: None,
            truncation: Truncation::new(1, 1, 0.1).unwrap(),
        };
        let s: Vec<f64> = (0..values.len()).map(|i| i as f64).collect();
        IntensityProfile::new(s, values, meta).unwrap()
    }

    #[test]
    fn experimental_extrema_give_point_fifty_nine() {
        let nu = fringe_visibility(4076.0, 1050.0);
        assert!((nu - 0.5903).abs() < 0.0005, "nu = {nu}");
    }

    #[test]
    fn constant_profile_has_no_fringe() {
        let p = synthetic(vec![3.0; 12]);
        assert!(matches!(visibility(&p), Err(Error::NoFringe(_))));
    }

    #[test]
    fn monotone_profile_has_no_fringe() {
        let p = synthetic((0..10).map(|i| i as f64).collect());
        assert!(matches!(visibility(&p), Err(Error::NoFringe(_))));
    }

    #[test]
    fn cosine_fringe_has_unit_visibility() {
        let n = 4001;
        let period = 800.0;
        let values: Vec<f64> = (0..n)
            .map(|i| 1.0 + (2.0 * PI * i as f64 / period).cos())
            .collect();
        let p = synthetic(values);
        let report = visibility(&p).unwrap();
        assert!((report.visibility - 1.0).abs() < 1e-6, "nu = {}", report.visibility);
        assert!(report.i_min >= 0.0);
    }

    #[test]
    fn picks_the_lower_adjacent_minimum() {
        // asymmetric fringe: left minimum 1.0, right minimum 0.5
        let p = synthetic(vec![5.0, 1.0, 6.0, 10.0, 7.0, 0.5, 4.0, 3.9, 3.8]);
        let report = visibility(&p).unwrap();
        assert_eq!(report.i_max, 10.0);
        assert_eq!(report.i_min, 0.5);
        assert_eq!(report.min_side, MinSide::Right);
        assert_eq!(report.s_min_loc, 5.0);
    }

    #[test]
    fn plateau_counts_once_leftmost() {
        let p = synthetic(vec![0.0, 1.0, 4.0, 4.0, 4.0, 1.0, 0.5, 1.5, 0.0]);
        let report = visibility(&p).unwrap();
        assert_eq!(report.s_max, 2.0);
        assert_eq!(report.i_max, 4.0);
    }

    #[test]
    fn parabolic_refinement_moves_toward_true_vertex() {
        // central samples follow 10 - (x - 4.25)^2, so the true vertex
        // sits between grid points at x = 4.25
        let parabola = |x: f64| 10.0 - (x - 4.25).powi(2);
        let values = vec![
            3.0,
            0.5,
            parabola(2.0),
            parabola(3.0),
            parabola(4.0),
            parabola(5.0),
            parabola(6.0),
            0.5,
            3.0,
        ];
        let p = synthetic(values);
        let plain = visibility(&p).unwrap();
        let refined = visibility_refined(&p, true).unwrap();
        assert_eq!(plain.s_max, 4.0);
        assert!(!plain.refined);
        assert!((refined.s_max - 4.25).abs() < 1e-12);
        assert!((refined.i_max - 10.0).abs() < 1e-12);
        assert!(refined.refined);
    }
}
