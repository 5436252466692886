use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{classify_run, RunRecord};
use crate::error::Error;

/// Linear-interpolation percentile of an ascending slice, `q ∈ [0, 1]`.
pub fn percentile(sorted: &[f64], q: f64) -> f64 {
    assert!(!sorted.is_empty());
    let pos = q.clamp(0.0, 1.0) * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Band {
    pub median: Vec<f64>,
    pub low: Vec<f64>,
    pub high: Vec<f64>,
}

impl Band {
    pub fn width_at(&self, t: usize) -> f64 {
        self.high[t] - self.low[t]
    }
}

/// Pointwise median and `[lo_q, hi_q]` percentiles of equal-length traces.
pub fn band(traces: &[&[f64]], lo_q: f64, hi_q: f64) -> Result<Band, Error> {
    let len = traces.iter().map(|t| t.len()).min().ok_or_else(|| Error::EmptyGroup("band".into()))?;
    let mut out = Band { median: Vec::with_capacity(len), low: Vec::with_capacity(len), high: Vec::with_capacity(len) };
    let mut col = Vec::with_capacity(traces.len());
    for t in 0..len {
        col.clear();
        col.extend(traces.iter().map(|tr| tr[t]));
        col.sort_by(f64::total_cmp);
        out.median.push(percentile(&col, 0.5));
        out.low.push(percentile(&col, lo_q));
        out.high.push(percentile(&col, hi_q));
    }
    Ok(out)
}

pub const BAND_LOW: f64 = 0.04;
pub const BAND_HIGH: f64 = 0.96;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub target: f64,
    pub count: usize,
    pub f_value: Band,
    pub angles_i: Vec<Band>,
    pub angles_j: Vec<Band>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSummary {
    pub groups: Vec<GroupSummary>,
    /// Runs matching no target, failed runs included.
    pub unassigned_count: usize,
    pub failed_count: usize,
}

impl EnsembleSummary {
    pub fn group(&self, target: f64) -> Option<&GroupSummary> {
        self.groups.iter().find(|g| g.target == target)
    }
}

/// Groups usable records by nearest target and summarizes each group with
/// its median trace and the 4th/96th percentile band.
pub fn median_band(records: &[RunRecord], targets: &[f64], tolerance: f64) -> Result<EnsembleSummary, Error> {
    let groups = group_records(records, targets, tolerance);
    let failed = records.iter().filter(|r| r.is_failed()).count();
    let unassigned = records.len() - groups.values().map(|g| g.len()).sum::<usize>();
    let mut out = Vec::new();
    for (k, members) in groups {
        let f: Vec<&[f64]> = members.iter().map(|r| r.f_values.as_slice()).collect();
        let n_angles = members[0].angles_i.first().map(|a| a.len()).unwrap_or(0);
        let angle_bands = |pick: &dyn Fn(&RunRecord) -> &Vec<Vec<f64>>| -> Result<Vec<Band>, Error> {
            (0..n_angles)
                .map(|m| {
                    let traces: Vec<Vec<f64>> = members.iter().map(|r| pick(r).iter().map(|a| a[m]).collect()).collect();
                    band(&traces.iter().map(|t| t.as_slice()).collect::<Vec<_>>(), BAND_LOW, BAND_HIGH)
                })
                .collect()
        };
        out.push(GroupSummary {
            target: targets[k],
            count: members.len(),
            f_value: band(&f, BAND_LOW, BAND_HIGH)?,
            angles_i: angle_bands(&|r| &r.angles_i)?,
            angles_j: angle_bands(&|r| &r.angles_j)?,
        });
    }
    Ok(EnsembleSummary { groups: out, unassigned_count: unassigned, failed_count: failed })
}

fn target_index(targets: &[f64], t: f64) -> usize {
    targets.iter().position(|x| *x == t).expect("classified target comes from the list")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorTrace {
    pub target: f64,
    pub count: usize,
    pub median: Vec<f64>,
    pub p25: Vec<f64>,
    pub p75: Vec<f64>,
}

pub const ERROR_FLOOR: f64 = 1e-16;

/// Absolute error traces per target group, clamped below at 1e-16.
pub fn error_traces(records: &[RunRecord], targets: &[f64], tolerance: f64) -> Result<Vec<ErrorTrace>, Error> {
    let summary_groups = group_records(records, targets, tolerance);
    let mut out = Vec::new();
    for (k, members) in summary_groups {
        let target = targets[k];
        let errs: Vec<Vec<f64>> = members.iter().map(|r| r.f_values.iter().map(|v| (v - target).abs().max(ERROR_FLOOR)).collect()).collect();
        let b = band(&errs.iter().map(|e| e.as_slice()).collect::<Vec<_>>(), 0.25, 0.75)?;
        out.push(ErrorTrace { target, count: members.len(), median: b.median, p25: b.low, p75: b.high });
    }
    Ok(out)
}

fn group_records<'a>(records: &'a [RunRecord], targets: &[f64], tolerance: f64) -> BTreeMap<usize, Vec<&'a RunRecord>> {
    let mut groups: BTreeMap<usize, Vec<&RunRecord>> = BTreeMap::new();
    for r in records.iter().filter(|r| !r.is_failed()) {
        if let Some(t) = r.final_value().and_then(|v| classify_run(v, targets, tolerance)) {
            groups.entry(target_index(targets, t)).or_default().push(r);
        }
    }
    groups
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Heatmap {
    pub bin_width: f64,
    pub lo: f64,
    pub n_bins: usize,
    /// `counts[t][b]`: runs whose value at iteration `t` falls in bin `b`.
    pub counts: Vec<Vec<u32>>,
    /// Values outside the binned range, per iteration.
    pub dropped: Vec<u32>,
}

impl Heatmap {
    pub fn bin_of(&self, value: f64) -> Option<usize> {
        let k = ((value - self.lo) / self.bin_width).floor();
        (k >= 0.0 && (k as usize) < self.n_bins).then_some(k as usize)
    }

    pub fn bin_edges(&self, b: usize) -> (f64, f64) {
        let lo = self.lo + b as f64 * self.bin_width;
        (lo, lo + self.bin_width)
    }

    pub fn bin_center(&self, b: usize) -> f64 {
        self.lo + (b as f64 + 0.5) * self.bin_width
    }

    /// Bins at iteration `t` ordered by decreasing count (ties by bin index).
    pub fn ranked(&self, t: usize) -> Vec<(usize, u32)> {
        let mut v: Vec<(usize, u32)> = self.counts[t].iter().copied().enumerate().filter(|(_, c)| *c > 0).collect();
        v.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        v
    }
}

/// Counts trace values per iteration in bins of `bin_width`.
///
/// Without an explicit range the bins are centered on integer multiples of
/// `bin_width` and cover every finite value present.
pub fn heatmap(records: &[RunRecord], bin_width: f64, range: Option<(f64, f64)>, n_points: usize) -> Result<Heatmap, Error> {
    if !(bin_width > 0.0) {
        return Err(Error::InvalidConfig("bin width must be positive".into()));
    }
    let usable: Vec<&RunRecord> = records.iter().filter(|r| !r.is_failed()).collect();
    let (lo, hi) = match range {
        Some((a, b)) if b > a => (a, b),
        Some(_) => return Err(Error::InvalidConfig("heatmap range must be increasing".into())),
        None => {
            let vals = usable.iter().flat_map(|r| r.f_values.iter().copied()).filter(|v| v.is_finite());
            let (mn, mx) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
            if mn.is_finite() {
                ((mn / bin_width).round() * bin_width - bin_width / 2.0, (mx / bin_width).round() * bin_width + bin_width / 2.0)
            } else {
                (-bin_width / 2.0, bin_width / 2.0)
            }
        }
    };
    let n_bins = ((hi - lo) / bin_width).round().max(1.0) as usize;
    let mut hm = Heatmap { bin_width, lo, n_bins, counts: vec![vec![0; n_bins]; n_points], dropped: vec![0; n_points] };
    for r in usable {
        for (t, v) in r.f_values.iter().enumerate().take(n_points) {
            match hm.bin_of(*v) {
                Some(b) => hm.counts[t][b] += 1,
                None => hm.dropped[t] += 1,
            }
        }
    }
    Ok(hm)
}
