//! Density metrics: generalized (power) means of induced degree sequences.
//!
//! For a node set `S`, `M_p(S)` is the p-th power mean of the induced degrees
//! `d_v(S)`; `p = -inf` gives the minimum degree, `p = +inf` the maximum,
//! `p = 0` the geometric mean, `p = 1` half of average-degree density. For
//! finite `p > 0` the surrogate `f_p(S) = sum d_v(S)^p / |S|` has the same
//! maximizers as `M_p` and is what the search algorithms track.

use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{induced_degrees, induced_edge_count, Graph, NodeSet};

/// Exponent of the power mean, including the two infinite limits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PValue {
    NegInf,
    Finite(f64),
    PosInf,
}

/// Finite `|p|` at or beyond this threshold is treated as the corresponding
/// infinity by [`p_density`]: the power mean is numerically indistinguishable
/// from min/max there for any realistic degree range.
pub const P_INFINITY_THRESHOLD: f64 = 50.0;

impl PValue {
    /// A finite exponent; rejects NaN and infinite inputs.
    pub fn finite(p: f64) -> Result<PValue> {
        if p.is_nan() || p.is_infinite() {
            return Err(Error::InvalidP {
                p: p.to_string(),
                reason: "finite value required".to_string(),
            });
        }
        Ok(PValue::Finite(p))
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            PValue::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Collapse large finite exponents to the infinity they approximate.
    pub fn clamped(self, threshold: f64) -> PValue {
        match self {
            PValue::Finite(v) if v >= threshold => PValue::PosInf,
            PValue::Finite(v) if v <= -threshold => PValue::NegInf,
            other => other,
        }
    }
}

impl fmt::Display for PValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PValue::NegInf => write!(f, "-inf"),
            PValue::PosInf => write!(f, "inf"),
            PValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for PValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<PValue> {
        let v: f64 = s.trim().parse().map_err(|_| Error::InvalidP {
            p: s.to_string(),
            reason: "not a number".to_string(),
        })?;
        if v.is_nan() {
            return Err(Error::InvalidP {
                p: s.to_string(),
                reason: "NaN is not a valid exponent".to_string(),
            });
        }
        Ok(if v == f64::INFINITY {
            PValue::PosInf
        } else if v == f64::NEG_INFINITY {
            PValue::NegInf
        } else {
            PValue::Finite(v)
        })
    }
}

impl Serialize for PValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PValue::Finite(v) => serializer.serialize_f64(*v),
            PValue::PosInf => serializer.serialize_str("inf"),
            PValue::NegInf => serializer.serialize_str("-inf"),
        }
    }
}

/// Parse a comma- or whitespace-separated list of exponents.
pub fn parse_p_list(text: &str) -> Result<Vec<PValue>> {
    let mut out = Vec::new();
    for tok in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        out.push(tok.parse()?);
    }
    if out.is_empty() {
        return Err(Error::InvalidConfig("empty p list".to_string()));
    }
    Ok(out)
}

/// Power mean of `values` with exponent `p`.
///
/// Values must be nonnegative and finite; for `p <= 0` (including `-inf`)
/// they must be strictly positive, otherwise the mean is undefined.
/// Computation is normalized by the extreme value so large `|p|` cannot
/// overflow for bounded inputs.
pub fn generalized_mean(values: &[f64], p: PValue) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptySet);
    }
    for &x in values {
        if x.is_nan() || x < 0.0 || x.is_infinite() {
            return Err(Error::InvalidValue(format!(
                "power mean requires finite nonnegative values, got {x}"
            )));
        }
    }
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(0.0f64, f64::max);
    let needs_positive = match p {
        PValue::NegInf => true,
        PValue::Finite(v) => v <= 0.0,
        PValue::PosInf => false,
    };
    if needs_positive && min <= 0.0 {
        return Err(Error::Undefined {
            what: "power mean",
            reason: format!("p = {p} requires strictly positive values"),
        });
    }
    let inv_len = 1.0 / values.len() as f64;
    Ok(match p {
        PValue::NegInf => min,
        PValue::PosInf => max,
        PValue::Finite(0.0) => {
            let log_mean: f64 = values.iter().map(|&x| x.ln()).sum::<f64>() * inv_len;
            log_mean.exp()
        }
        PValue::Finite(v) if v > 0.0 => {
            if max == 0.0 {
                0.0
            } else {
                let s: f64 = values.iter().map(|&x| (x / max).powf(v)).sum();
                max * (s * inv_len).powf(1.0 / v)
            }
        }
        PValue::Finite(v) => {
            let s: f64 = values.iter().map(|&x| (x / min).powf(v)).sum();
            min * (s * inv_len).powf(1.0 / v)
        }
    })
}

fn check_set(g: &Graph, s: &NodeSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if s.universe() != g.n() {
        return Err(Error::InvalidSet(format!(
            "set universe {} does not match graph size {}",
            s.universe(),
            g.n()
        )));
    }
    Ok(())
}

/// Degree-power objective `f_p(S) = sum_{v in S} d_v(S)^p / |S|`.
///
/// Only defined for finite `p > 0`, where it shares maximizers with `M_p`.
pub fn fp_value(g: &Graph, s: &NodeSet, p: f64) -> Result<f64> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::InvalidP {
            p: p.to_string(),
            reason: "f_p requires finite p > 0".to_string(),
        });
    }
    check_set(g, s)?;
    let deg = induced_degrees(g, s);
    let sum: f64 = s.iter().map(|v| (deg[v as usize] as f64).powf(p)).sum();
    Ok(sum / s.len() as f64)
}

/// p-mean density `M_p(S)`: the power mean of the induced degree sequence.
/// Finite `|p| >= P_INFINITY_THRESHOLD` is evaluated as the matching limit.
pub fn p_density(g: &Graph, s: &NodeSet, p: PValue) -> Result<f64> {
    check_set(g, s)?;
    let deg = induced_degrees(g, s);
    let values: Vec<f64> = s.iter().map(|v| deg[v as usize] as f64).collect();
    generalized_mean(&values, p.clamped(P_INFINITY_THRESHOLD))
}

/// Peeling objective drop `Delta_j(S)`: the decrease of `sum_{v} d_v(S)^p`
/// caused by removing `j` from `S`. Runs in `O(d_j)` given induced degrees
/// for `S` (indexed by dense node id, as from [`induced_degrees`]).
pub fn delta_j(g: &Graph, s: &NodeSet, degrees: &[u32], j: u32, p: f64) -> Result<f64> {
    if !p.is_finite() {
        return Err(Error::InvalidP {
            p: p.to_string(),
            reason: "delta requires finite p".to_string(),
        });
    }
    check_set(g, s)?;
    if degrees.len() != g.n() as usize {
        return Err(Error::InvalidSet(
            "degree slice length does not match graph size".to_string(),
        ));
    }
    if !s.contains(j) {
        return Err(Error::NodeNotInSet { node: j });
    }
    let mut acc = (degrees[j as usize] as f64).powf(p);
    for &u in g.neighbors(j) {
        if s.contains(u) {
            let d = degrees[u as usize] as f64;
            acc += d.powf(p) - (d - 1.0).powf(p);
        }
    }
    Ok(acc)
}

/// Summary statistics of one node set at one exponent.
#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub size: u64,
    /// `|E_S| / C(|S|, 2)`; zero for singletons by convention.
    pub edge_density: f64,
    pub avg_degree: f64,
    /// `f_p(S)` for the requested finite `p`; absent at the infinite limits.
    pub avg_pth_power_degree: Option<f64>,
    pub m_p: f64,
    pub max_degree: u32,
    pub min_degree: u32,
}

/// Compute a [`DensityReport`] for `S` at exponent `p`.
pub fn density_report(g: &Graph, s: &NodeSet, p: PValue) -> Result<DensityReport> {
    check_set(g, s)?;
    let size = s.len() as u64;
    let edges = induced_edge_count(g, s);
    let deg = induced_degrees(g, s);
    let max_degree = s.iter().map(|v| deg[v as usize]).max().unwrap_or(0);
    let min_degree = s.iter().map(|v| deg[v as usize]).min().unwrap_or(0);
    let pairs = size * (size - 1) / 2;
    let edge_density = if pairs == 0 {
        0.0
    } else {
        edges as f64 / pairs as f64
    };
    let avg_degree = 2.0 * edges as f64 / size as f64;
    let avg_pth_power_degree = match p {
        PValue::Finite(v) if v > 0.0 => Some(fp_value(g, s, v)?),
        PValue::Finite(v) => {
            if min_degree >= 1 {
                let sum: f64 = s.iter().map(|u| (deg[u as usize] as f64).powf(v)).sum();
                Some(sum / size as f64)
            } else {
                None
            }
        }
        _ => None,
    };
    let m_p = p_density(g, s, p)?;
    Ok(DensityReport {
        size,
        edge_density,
        avg_degree,
        avg_pth_power_degree,
        m_p,
        max_degree,
        min_degree,
    })
}
