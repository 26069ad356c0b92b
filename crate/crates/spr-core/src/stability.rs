//! Weights, slopes, and stability of indecomposable peak spaces.
//!
//! The canonical weight of an indecomposable is computed on its corner
//! support: on that induced subposet, theta = 1 C^-1 - C^-1 1 (column sums
//! minus row sums of the incidence inverse), extended by zero to the whole
//! poset. Stability of U under a weight theta asks theta(U) = 0 and
//! theta(W) < 0 for every proper subobject W; the slope variant compares
//! mu = theta/kappa with exact rational arithmetic, assuming kappa positive
//! on every object involved. The two routes are linked by the hat weight
//! kappa(U) theta - theta(U) kappa, which turns slope comparisons into sign
//! checks.

use crate::linalg::Rat;
use crate::poset::{bilinear_form, Poset};
use crate::repr::{proper_subobjects, Indecomposable};
use num::BigInt;
use std::collections::BTreeSet;
use thiserror::Error;

/// Integer weight per point, in poset insertion order.
pub type Weight = Vec<i64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StabilityError {
    #[error("kappa value {value} is not positive on the object supported on {support:?}")]
    KappaNotPositive { support: Vec<String>, value: i64 },
    #[error("object is not semistable; destabilized by the subobject on {support:?}")]
    NotSemistable { support: Vec<String> },
}

/// The canonical weight of an indecomposable: the incidence weight of its
/// corner subposet, extended by zero.
pub fn theta_of(p: &Poset, u: &Indecomposable) -> Weight {
    let corner = u.fence.point_set();
    let (sub, back) = p.induced(&corner);
    let n = sub.len();
    let mut theta = vec![0i64; p.len()];
    let ones = vec![1i64; n];
    for x in 0..n {
        let mut e = vec![0i64; n];
        e[x] = 1;
        let w = bilinear_form(&sub, &ones, &e);
        let k = bilinear_form(&sub, &e, &ones);
        let v: BigInt = w - k;
        theta[back[x]] = i64::try_from(&v).expect("weight fits in i64");
    }
    theta
}

/// Zero-extension of a weight on an induced subposet back to the poset.
pub fn lift_weight(p: &Poset, sub_points: &[usize], w: &[i64]) -> Weight {
    assert_eq!(sub_points.len(), w.len());
    let mut out = vec![0i64; p.len()];
    for (i, &pt) in sub_points.iter().enumerate() {
        out[pt] = w[i];
    }
    out
}

/// theta(d) as an exact machine integer.
pub fn weight_value(theta: &[i64], dims: &[i64]) -> i64 {
    assert_eq!(theta.len(), dims.len());
    theta.iter().zip(dims).map(|(t, d)| t * d).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    Semistable,
    Unstable,
}

/// A subobject whose weight value witnesses the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub support: BTreeSet<usize>,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub verdict: Verdict,
    /// theta(U) over the full object.
    pub total: i64,
    /// For a non-stable verdict, the subobjects with nonnegative weight;
    /// where theta(U) is nonzero, the full object itself.
    pub witnesses: Vec<Witness>,
}

/// Weight-route stability: theta(U) = 0 and theta negative on every proper
/// subobject.
pub fn is_theta_stable(p: &Poset, u: &Indecomposable, theta: &[i64]) -> StabilityReport {
    let total = weight_value(theta, &u.dimv);
    if total != 0 {
        return StabilityReport {
            verdict: Verdict::Unstable,
            total,
            witnesses: vec![Witness {
                support: u.support.clone(),
                value: total,
            }],
        };
    }
    let mut zeros = Vec::new();
    let mut positives = Vec::new();
    for sub in proper_subobjects(p, u) {
        let v = weight_value(theta, &sub.dimv);
        if v > 0 {
            positives.push(Witness {
                support: sub.support,
                value: v,
            });
        } else if v == 0 {
            zeros.push(Witness {
                support: sub.support,
                value: 0,
            });
        }
    }
    if !positives.is_empty() {
        StabilityReport {
            verdict: Verdict::Unstable,
            total,
            witnesses: positives,
        }
    } else if !zeros.is_empty() {
        StabilityReport {
            verdict: Verdict::Semistable,
            total,
            witnesses: zeros,
        }
    } else {
        StabilityReport {
            verdict: Verdict::Stable,
            total,
            witnesses: Vec::new(),
        }
    }
}

/// Exact slope theta(d)/kappa(d); requires kappa(d) > 0.
pub fn slope(
    p: &Poset,
    theta: &[i64],
    kappa: &[i64],
    dims: &[i64],
    support: &BTreeSet<usize>,
) -> Result<Rat, StabilityError> {
    let k = weight_value(kappa, dims);
    if k <= 0 {
        return Err(StabilityError::KappaNotPositive {
            support: p.labels_of(support),
            value: k,
        });
    }
    Ok(Rat::new(weight_value(theta, dims).into(), k.into()))
}

/// The hat weight kappa(U) theta - theta(U) kappa, which vanishes on U and
/// orders subobjects exactly like the slope.
pub fn hat_weight(theta: &[i64], kappa: &[i64], u_dims: &[i64]) -> Weight {
    let t = weight_value(theta, u_dims);
    let k = weight_value(kappa, u_dims);
    theta
        .iter()
        .zip(kappa)
        .map(|(th, ka)| k * th - t * ka)
        .collect()
}

/// Slope-route stability: every proper subobject has strictly smaller
/// slope.
pub fn is_mu_stable(
    p: &Poset,
    u: &Indecomposable,
    theta: &[i64],
    kappa: &[i64],
) -> Result<StabilityReport, StabilityError> {
    let mu_total = slope(p, theta, kappa, &u.dimv, &u.support)?;
    let mut zeros = Vec::new();
    let mut positives = Vec::new();
    for sub in proper_subobjects(p, u) {
        let mu_sub = slope(p, theta, kappa, &sub.dimv, &sub.support)?;
        let value = weight_value(&hat_weight(theta, kappa, &u.dimv), &sub.dimv);
        match mu_sub.cmp(&mu_total) {
            std::cmp::Ordering::Greater => positives.push(Witness {
                support: sub.support,
                value,
            }),
            std::cmp::Ordering::Equal => zeros.push(Witness {
                support: sub.support,
                value,
            }),
            std::cmp::Ordering::Less => {}
        }
    }
    let total = weight_value(theta, &u.dimv);
    Ok(if !positives.is_empty() {
        StabilityReport {
            verdict: Verdict::Unstable,
            total,
            witnesses: positives,
        }
    } else if !zeros.is_empty() {
        StabilityReport {
            verdict: Verdict::Semistable,
            total,
            witnesses: zeros,
        }
    } else {
        StabilityReport {
            verdict: Verdict::Stable,
            total,
            witnesses: Vec::new(),
        }
    })
}

/// Extends a stabilizing weight across one added point.
///
/// `p_tilde` is the poset with the new point already present, `theta` a
/// weight over `p_tilde` whose entry at `new_point` is ignored, and
/// `v_dims` the dimension vector of the extended object. A maximal new
/// point keeps the weight and charges the new point zero; otherwise every
/// old entry is scaled by one more than the new dimension times the peak
/// dimension, the peaks are shifted down by the new dimension, and the new
/// point receives the total peak dimension.
pub fn extend_positive(p_tilde: &Poset, new_point: usize, theta: &[i64], v_dims: &[i64]) -> Weight {
    assert_eq!(theta.len(), p_tilde.len());
    assert_eq!(v_dims.len(), p_tilde.len());
    let mut out = theta.to_vec();
    if p_tilde.is_maximal(new_point) {
        out[new_point] = 0;
        return out;
    }
    let peak_total: i64 = p_tilde.maximals().iter().map(|&z| v_dims[z]).sum();
    let d_new = v_dims[new_point];
    let scale = d_new * peak_total + 1;
    for x in 0..p_tilde.len() {
        if x == new_point {
            continue;
        }
        out[x] = scale * theta[x];
        if p_tilde.is_maximal(x) {
            out[x] -= d_new;
        }
    }
    out[new_point] = peak_total;
    out
}

/// A filtration by peak subsets: the chain of subobjects picked out by an
/// increasing chain of peak sets, with layer dimension vectors and exact
/// layer slopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub peak_chain: Vec<BTreeSet<usize>>,
    pub layer_dims: Vec<Vec<i64>>,
    pub layer_slopes: Vec<Rat>,
}

fn dims_of_peak_set(p: &Poset, u: &Indecomposable, peaks: &BTreeSet<usize>) -> Vec<i64> {
    let support_peaks: BTreeSet<usize> = p
        .maximals()
        .into_iter()
        .filter(|z| u.support.contains(z))
        .collect();
    if *peaks == support_peaks {
        return u.dimv.clone();
    }
    let rest: BTreeSet<usize> = support_peaks
        .iter()
        .copied()
        .filter(|z| !peaks.contains(z))
        .collect();
    let below = p.down_closure(peaks);
    let below_rest = p.down_closure(&rest);
    (0..p.len())
        .map(|x| {
            if below.contains(&x) && !below_rest.contains(&x) && u.support.contains(&x) {
                u.dimv[x]
            } else {
                0
            }
        })
        .collect()
}

fn subsets_between(all: &[usize], lower: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let free: Vec<usize> = all.iter().copied().filter(|z| !lower.contains(z)).collect();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << free.len()) {
        let mut s = lower.clone();
        for (i, &z) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(z);
            }
        }
        out.push(s);
    }
    out.sort();
    out
}

/// Harder-Narasimhan filtration by greedy maximal layer slope; ties are
/// broken toward the layer with larger kappa value, then the smaller peak
/// set. Layer slopes strictly decrease.
pub fn hn_filtration(
    p: &Poset,
    u: &Indecomposable,
    theta: &[i64],
    kappa: &[i64],
) -> Result<Filtration, StabilityError> {
    let support_peaks: Vec<usize> = p
        .maximals()
        .into_iter()
        .filter(|z| u.support.contains(z))
        .collect();
    let full: BTreeSet<usize> = support_peaks.iter().copied().collect();
    let mut chain = Vec::new();
    let mut layer_dims = Vec::new();
    let mut layer_slopes: Vec<Rat> = Vec::new();
    let mut prev: BTreeSet<usize> = BTreeSet::new();
    let mut prev_dims = vec![0i64; p.len()];
    while prev != full {
        let mut best: Option<(Rat, i64, BTreeSet<usize>, Vec<i64>)> = None;
        for cand in subsets_between(&support_peaks, &prev) {
            let dims = dims_of_peak_set(p, u, &cand);
            let layer: Vec<i64> = dims.iter().zip(&prev_dims).map(|(a, b)| a - b).collect();
            let support: BTreeSet<usize> = (0..p.len()).filter(|&x| layer[x] != 0).collect();
            let mu = slope(p, theta, kappa, &layer, &support)?;
            let k = weight_value(kappa, &layer);
            let better = match &best {
                None => true,
                Some((bmu, bk, bset, _)) => {
                    (mu.clone(), k, std::cmp::Reverse(cand.clone()))
                        > (bmu.clone(), *bk, std::cmp::Reverse(bset.clone()))
                }
            };
            if better {
                best = Some((mu, k, cand, dims));
            }
        }
        let (mu, _, set, dims) = best.expect("a candidate always exists");
        if let Some(last) = layer_slopes.last() {
            debug_assert!(mu < *last, "layer slopes must strictly decrease");
        }
        let layer: Vec<i64> = dims.iter().zip(&prev_dims).map(|(a, b)| a - b).collect();
        chain.push(set.clone());
        layer_dims.push(layer);
        layer_slopes.push(mu);
        prev = set;
        prev_dims = dims;
    }
    Ok(Filtration {
        peak_chain: chain,
        layer_dims,
        layer_slopes,
    })
}

/// Jordan-Hoelder filtration of a semistable object: a maximal chain with
/// every layer of the same slope, built by repeatedly taking the smallest
/// equal-slope enlargement. Errors when the object is not semistable.
pub fn jh_filtration(
    p: &Poset,
    u: &Indecomposable,
    theta: &[i64],
    kappa: &[i64],
) -> Result<Filtration, StabilityError> {
    let report = is_mu_stable(p, u, theta, kappa)?;
    if report.verdict == Verdict::Unstable {
        let support = report
            .witnesses
            .first()
            .map(|w| p.labels_of(&w.support))
            .unwrap_or_default();
        return Err(StabilityError::NotSemistable { support });
    }
    let mu_total = slope(p, theta, kappa, &u.dimv, &u.support)?;
    let support_peaks: Vec<usize> = p
        .maximals()
        .into_iter()
        .filter(|z| u.support.contains(z))
        .collect();
    let full: BTreeSet<usize> = support_peaks.iter().copied().collect();
    let mut chain = Vec::new();
    let mut layer_dims = Vec::new();
    let mut layer_slopes = Vec::new();
    let mut prev: BTreeSet<usize> = BTreeSet::new();
    let mut prev_dims = vec![0i64; p.len()];
    while prev != full {
        let mut candidates = subsets_between(&support_peaks, &prev);
        candidates.sort_by_key(|s| (s.len(), s.clone()));
        let chosen = candidates
            .into_iter()
            .find(|cand| {
                let dims = dims_of_peak_set(p, u, cand);
                let support: BTreeSet<usize> = (0..p.len()).filter(|&x| dims[x] != 0).collect();
                slope(p, theta, kappa, &dims, &support)
                    .map(|mu| mu == mu_total)
                    .unwrap_or(false)
            })
            .expect("the full peak set always matches the total slope");
        let dims = dims_of_peak_set(p, u, &chosen);
        let layer: Vec<i64> = dims.iter().zip(&prev_dims).map(|(a, b)| a - b).collect();
        chain.push(chosen.clone());
        layer_dims.push(layer);
        layer_slopes.push(mu_total.clone());
        prev = chosen;
        prev_dims = dims;
    }
    Ok(Filtration {
        peak_chain: chain,
        layer_dims,
        layer_slopes,
    })
}
