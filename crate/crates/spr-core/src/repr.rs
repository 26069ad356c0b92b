//! Peak spaces over a poset and their indecomposable classification.
//!
//! A peak space over a poset P lives in the ambient sum of one block per
//! maximal point: U_x is a subspace of that sum, the block of a maximal z is
//! U_z itself, U_x projects to zero on every block not above x, and the
//! projection of U_x onto the blocks above y lands in U_y whenever x <= y.
//!
//! Indecomposables correspond to the sincere fence subposets of P: subsets
//! whose induced order has its maxima among the maxima of P, height at most
//! one, and a comparability graph that is a simple path. Each fence carries
//! one sincere representation (every non-peak point spans the diagonal of
//! its peaks), and lifting that representation along the closure of the
//! fence produces the indecomposable peak space with that fence as its
//! corner support.

use crate::linalg::{rat, Rat, RatMat, Subspace};
use crate::poset::Poset;
use num::Zero;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PeakSpaceError {
    #[error("space count {got} does not match point count {want}")]
    SpaceCountMismatch { got: usize, want: usize },
    #[error("peak block of {point} is not the full ambient block")]
    PeakBlockMismatch { point: String },
    #[error("space at {point} meets a block not above it")]
    SupportEscapes { point: String },
    #[error("projection of the space at {lower} above {upper} leaves the space at {upper}")]
    ProjectionEscapes { lower: String, upper: String },
    #[error("admissible subspace at {point} has the wrong ambient dimension")]
    BadAdmissibleBlock { point: String },
}

/// A peak space with explicit subspaces over exact rationals.
#[derive(Clone, Debug)]
pub struct ExplicitPeakSpace {
    poset: Poset,
    /// Maximal points in insertion order; parallel to `peak_dims`.
    peaks: Vec<usize>,
    peak_dims: Vec<usize>,
    /// Ambient coordinate ranges per peak, in `peaks` order.
    offsets: Vec<usize>,
    ambient: usize,
    /// Per point, a subspace of the ambient sum; insertion order.
    spaces: Vec<Subspace>,
}

impl ExplicitPeakSpace {
    /// Builds a peak space after verifying all three axioms.
    pub fn new(
        poset: Poset,
        peak_dims: Vec<usize>,
        spaces: Vec<Subspace>,
    ) -> Result<ExplicitPeakSpace, PeakSpaceError> {
        let peaks = poset.maximals();
        assert_eq!(
            peak_dims.len(),
            peaks.len(),
            "one dimension per maximal point"
        );
        if spaces.len() != poset.len() {
            return Err(PeakSpaceError::SpaceCountMismatch {
                got: spaces.len(),
                want: poset.len(),
            });
        }
        let mut offsets = Vec::with_capacity(peaks.len());
        let mut ambient = 0;
        for &d in &peak_dims {
            offsets.push(ambient);
            ambient += d;
        }
        let u = ExplicitPeakSpace {
            poset,
            peaks,
            peak_dims,
            offsets,
            ambient,
            spaces,
        };
        u.check_axioms()?;
        Ok(u)
    }

    fn check_axioms(&self) -> Result<(), PeakSpaceError> {
        let p = &self.poset;
        for (pi, &z) in self.peaks.iter().enumerate() {
            let mut block = vec![false; self.ambient];
            for c in self.block_range(pi) {
                block[c] = true;
            }
            let full_block = Subspace::full(self.ambient).project_zeroing(&block);
            if self.spaces[z] != full_block {
                return Err(PeakSpaceError::PeakBlockMismatch {
                    point: p.label(z).to_string(),
                });
            }
        }
        for x in 0..p.len() {
            if !self.spaces[x].supported_on(&self.mask_above(x)) {
                return Err(PeakSpaceError::SupportEscapes {
                    point: p.label(x).to_string(),
                });
            }
            for y in 0..p.len() {
                if !p.lt(x, y) {
                    continue;
                }
                let projected = self.spaces[x].project_zeroing(&self.mask_above(y));
                if !self.spaces[y].contains(&projected) {
                    return Err(PeakSpaceError::ProjectionEscapes {
                        lower: p.label(x).to_string(),
                        upper: p.label(y).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn peak_dims(&self) -> &[usize] {
        &self.peak_dims
    }

    pub fn space(&self, point: usize) -> &Subspace {
        &self.spaces[point]
    }

    fn block_range(&self, peak_index: usize) -> std::ops::Range<usize> {
        self.offsets[peak_index]..self.offsets[peak_index] + self.peak_dims[peak_index]
    }

    /// Coordinate mask of the blocks belonging to peaks above x.
    fn mask_above(&self, x: usize) -> Vec<bool> {
        let mut mask = vec![false; self.ambient];
        for (pi, &z) in self.peaks.iter().enumerate() {
            if self.poset.leq(x, z) {
                for c in self.block_range(pi) {
                    mask[c] = true;
                }
            }
        }
        mask
    }

    /// Projection of a subspace onto the blocks above x.
    pub fn project_above(&self, x: usize, space: &Subspace) -> Subspace {
        space.project_zeroing(&self.mask_above(x))
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.spaces.iter().map(|s| s.dim() as i64).collect()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.poset.len())
            .filter(|&x| self.spaces[x].dim() > 0)
            .collect()
    }

    /// Corner dimension vector: at a maximal point the plain dimension, and
    /// elsewhere the dimension of U_x over the sum of projections from
    /// strictly below.
    pub fn corner_dims(&self) -> Vec<i64> {
        let p = &self.poset;
        (0..p.len())
            .map(|x| {
                if p.is_maximal(x) {
                    return self.spaces[x].dim() as i64;
                }
                let mut from_below = Subspace::zero(self.ambient);
                for y in 0..p.len() {
                    if p.lt(y, x) {
                        from_below = from_below.sum(&self.project_above(x, &self.spaces[y]));
                    }
                }
                debug_assert!(self.spaces[x].contains(&from_below));
                (self.spaces[x].dim() - from_below.dim()) as i64
            })
            .collect()
    }

    /// Corner support: the points with nonzero corner dimension.
    pub fn corner_support(&self) -> BTreeSet<usize> {
        self.corner_dims()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(x, _)| x)
            .collect()
    }

    /// Subobject cut out by an admissible subspace, one block per maximal
    /// point of the poset. The result is re-coordinatized over the chosen
    /// blocks and is itself a verified peak space.
    pub fn restrict(&self, blocks: &[Subspace]) -> Result<ExplicitPeakSpace, PeakSpaceError> {
        assert_eq!(
            blocks.len(),
            self.peaks.len(),
            "one block per maximal point"
        );
        for (pi, block) in blocks.iter().enumerate() {
            if block.ambient() != self.peak_dims[pi] {
                return Err(PeakSpaceError::BadAdmissibleBlock {
                    point: self.poset.label(self.peaks[pi]).to_string(),
                });
            }
        }
        // Basis of K inside the old ambient, grouped by block.
        let mut basis_rows: Vec<Vec<Rat>> = Vec::new();
        let mut new_dims = Vec::with_capacity(blocks.len());
        for (pi, block) in blocks.iter().enumerate() {
            new_dims.push(block.dim());
            for row in block.basis_rows() {
                let mut v = vec![Rat::zero(); self.ambient];
                for (j, val) in row.into_iter().enumerate() {
                    v[self.offsets[pi] + j] = val;
                }
                basis_rows.push(v);
            }
        }
        let k_space = Subspace::span(self.ambient, &basis_rows);
        let new_ambient = basis_rows.len();
        debug_assert_eq!(k_space.dim(), new_ambient);
        // Coordinates of a vector of K with respect to the chosen basis.
        let basis_t = {
            let mut m = RatMat::zero(self.ambient, new_ambient);
            for (r, row) in basis_rows.iter().enumerate() {
                for (d, val) in row.iter().enumerate() {
                    *m.at_mut(d, r) = val.clone();
                }
            }
            m
        };
        let spaces: Vec<Subspace> = self
            .spaces
            .iter()
            .map(|s| {
                let cap = s.intersect(&k_space);
                let vectors: Vec<Vec<Rat>> = cap
                    .basis_rows()
                    .iter()
                    .map(|v| basis_t.solve(v).expect("intersection lies in K"))
                    .collect();
                Subspace::span(new_ambient, &vectors)
            })
            .collect();
        ExplicitPeakSpace::new(self.poset.clone(), new_dims, spaces)
    }

    /// Structured text dump: per-point basis rows as exact fractions.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for x in 0..self.poset.len() {
            let s = &self.spaces[x];
            out.push_str(&format!("point {}: dim {}\n", self.poset.label(x), s.dim()));
            for row in s.basis_rows() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                out.push_str(&format!("  [{}]\n", cells.join(", ")));
            }
        }
        out
    }
}

/// Dimension drop per point from a peak space to a restricted subobject.
pub fn quotient_dims(u: &ExplicitPeakSpace, sub: &ExplicitPeakSpace) -> Vec<i64> {
    u.dim_vector()
        .iter()
        .zip(sub.dim_vector())
        .map(|(a, b)| a - b)
        .collect()
}

/// Shape of a fence: classified by whether the ends of its path are peaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FenceKind {
    /// Path starts and ends at peaks: r peaks over r-1 low points.
    PeaksAtBothEnds,
    /// One peak end and one low end: r peaks over r low points.
    PeakAtOneEnd,
    /// Both ends low: r peaks over r+1 low points.
    LowsAtBothEnds,
}

/// A sincere fence subposet in path order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fence {
    /// Points along the comparability path. Peaks and low points alternate;
    /// the walk starts at a peak end when there is one.
    pub path: Vec<usize>,
    pub kind: FenceKind,
    /// Number of peaks.
    pub r: usize,
}

impl Fence {
    pub fn point_set(&self) -> BTreeSet<usize> {
        self.path.iter().copied().collect()
    }
}

/// Tests the three fence conditions on a subset and extracts the path.
pub fn fence_of_subset(p: &Poset, set: &BTreeSet<usize>) -> Option<Fence> {
    if set.is_empty() || !p.is_peak_subset(set) || p.max_chain_len(set) > 2 {
        return None;
    }
    let pts: Vec<usize> = set.iter().copied().collect();
    let n = pts.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = 0;
    for i in 0..n {
        for j in i + 1..n {
            if p.comparable(pts[i], pts[j]) {
                adj[i].push(j);
                adj[j].push(i);
                edges += 1;
            }
        }
    }
    // A simple path: tree with maximum degree two.
    if edges != n - 1 || adj.iter().any(|a| a.len() > 2) {
        return None;
    }
    let mut seen = vec![false; n];
    let mut reach = vec![0usize];
    seen[0] = true;
    while let Some(v) = reach.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reach.push(w);
            }
        }
    }
    if !seen.iter().all(|&s| s) {
        return None;
    }
    let is_peak = |i: usize| !pts.iter().any(|&t| p.lt(pts[i], t) && set.contains(&t));
    let ends: Vec<usize> = (0..n).filter(|&i| adj[i].len() <= 1).collect();
    let start = match n {
        1 => 0,
        _ => {
            let (a, b) = (ends[0], ends[1]);
            match (is_peak(a), is_peak(b)) {
                (true, false) => a,
                (false, true) => b,
                _ => {
                    if pts[a] < pts[b] {
                        a
                    } else {
                        b
                    }
                }
            }
        }
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    while order.len() < n {
        let cur = *order.last().unwrap();
        let next = *adj[cur].iter().find(|&&w| w != prev).unwrap();
        prev = cur;
        order.push(next);
    }
    let peaks = (0..n).filter(|&i| is_peak(i)).count();
    let first_peak = is_peak(order[0]);
    let last_peak = is_peak(*order.last().unwrap());
    let kind = match (first_peak, last_peak) {
        (true, true) => FenceKind::PeaksAtBothEnds,
        (false, false) => FenceKind::LowsAtBothEnds,
        _ => FenceKind::PeakAtOneEnd,
    };
    Some(Fence {
        path: order.into_iter().map(|i| pts[i]).collect(),
        kind,
        r: peaks,
    })
}

/// All sincere fence subposets, sorted by size then point set.
pub fn sincere_subposets(p: &Poset) -> Vec<Fence> {
    let n = p.len();
    assert!(n <= 63, "subset scan bound");
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let set: BTreeSet<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if let Some(f) = fence_of_subset(p, &set) {
            out.push(f);
        }
    }
    out.sort_by_key(|a| (a.path.len(), a.point_set()));
    out
}

/// The sincere representation of a fence, over the induced subposet: one
/// line per peak, and each low point spanning the diagonal of its peaks.
pub fn sincere_rep(p: &Poset, fence: &Fence) -> ExplicitPeakSpace {
    let (sub, _back) = p.induced(&fence.point_set());
    let peaks = sub.maximals();
    let ambient = peaks.len();
    let spaces: Vec<Subspace> = (0..sub.len())
        .map(|x| {
            let mut v = vec![Rat::zero(); ambient];
            for (pi, &z) in peaks.iter().enumerate() {
                if sub.leq(x, z) {
                    v[pi] = rat(1);
                }
            }
            Subspace::span(ambient, &[v])
        })
        .collect();
    ExplicitPeakSpace::new(sub, vec![1; ambient], spaces).expect("sincere rep is a peak space")
}

/// Lifts a representation of a fence to the whole poset: peaks keep their
/// blocks, points outside the closure of the peaks get zero, and every
/// other point receives the sum of projections from the fence points below
/// it.
pub fn lift_rep(p: &Poset, fence: &Fence, rep: &ExplicitPeakSpace) -> ExplicitPeakSpace {
    let fence_set = fence.point_set();
    let (sub, back) = p.induced(&fence_set);
    assert_eq!(
        rep.poset(),
        &sub,
        "representation must live on the induced fence poset"
    );
    let sub_peaks = sub.maximals();
    let p_peaks = p.maximals();
    // Peak blocks of the lift: the fence peaks keep their dimensions, other
    // maximal points of p get zero blocks.
    let peak_dims: Vec<usize> = p_peaks
        .iter()
        .map(|&z| {
            sub_peaks
                .iter()
                .position(|&sz| back[sz] == z)
                .map_or(0, |pi| rep.peak_dims()[pi])
        })
        .collect();
    let mut offsets = Vec::with_capacity(p_peaks.len());
    let mut ambient = 0;
    for &d in &peak_dims {
        offsets.push(ambient);
        ambient += d;
    }
    // Transport a fence-ambient vector into the lift ambient.
    let transport = |v: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); ambient];
        for (pi, &sz) in sub_peaks.iter().enumerate() {
            let z = back[sz];
            let zi = p_peaks.iter().position(|&m| m == z).unwrap();
            let src = rep.peak_dims().iter().take(pi).sum::<usize>();
            for d in 0..rep.peak_dims()[pi] {
                out[offsets[zi] + d] = v[src + d].clone();
            }
        }
        out
    };
    let closure = p.down_closure(
        &p_peaks
            .iter()
            .copied()
            .filter(|&z| peak_dims[p_peaks.iter().position(|&m| m == z).unwrap()] > 0)
            .collect(),
    );
    let mask_above = |x: usize| -> Vec<bool> {
        let mut mask = vec![false; ambient];
        for (zi, &z) in p_peaks.iter().enumerate() {
            if p.leq(x, z) {
                for cell in &mut mask[offsets[zi]..offsets[zi] + peak_dims[zi]] {
                    *cell = true;
                }
            }
        }
        mask
    };
    let spaces: Vec<Subspace> = (0..p.len())
        .map(|x| {
            if !closure.contains(&x) {
                return Subspace::zero(ambient);
            }
            let mut acc = Subspace::zero(ambient);
            for (yi, &y) in back.iter().enumerate() {
                if !p.leq(y, x) {
                    continue;
                }
                let moved: Vec<Vec<Rat>> = rep
                    .space(yi)
                    .basis_rows()
                    .iter()
                    .map(|r| transport(r))
                    .collect();
                let lifted = Subspace::span(ambient, &moved).project_zeroing(&mask_above(x));
                acc = acc.sum(&lifted);
            }
            acc
        })
        .collect();
    ExplicitPeakSpace::new(p.clone(), peak_dims, spaces).expect("lift satisfies the peak axioms")
}

/// An indecomposable peak space in combinatorial form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indecomposable {
    pub fence: Fence,
    pub support: BTreeSet<usize>,
    pub dimv: Vec<i64>,
}

/// All indecomposables of a type A poset, one per sincere fence subposet,
/// each obtained by lifting the fence's sincere representation.
pub fn enumerate_indecomposables(p: &Poset) -> Vec<Indecomposable> {
    sincere_subposets(p)
        .into_iter()
        .map(|fence| {
            let rep = sincere_rep(p, &fence);
            let lifted = lift_rep(p, &fence, &rep);
            debug_assert_eq!(lifted.corner_support(), fence.point_set());
            Indecomposable {
                support: lifted.support(),
                dimv: lifted.dim_vector(),
                fence,
            }
        })
        .collect()
}

/// The explicit lift of an indecomposable.
pub fn explicit_indecomposable(p: &Poset, ind: &Indecomposable) -> ExplicitPeakSpace {
    let rep = sincere_rep(p, &ind.fence);
    lift_rep(p, &ind.fence, &rep)
}

/// A proper subobject described combinatorially by its set of peaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subobject {
    /// The chosen peaks I: a nonempty proper subset of the support peaks.
    pub peaks: BTreeSet<usize>,
    pub support: BTreeSet<usize>,
    pub dimv: Vec<i64>,
}

/// Proper subobjects of an indecomposable, one per nonempty proper subset I
/// of its support peaks: the subobject supported on the points below I but
/// not below its complement.
pub fn proper_subobjects(p: &Poset, u: &Indecomposable) -> Vec<Subobject> {
    let support_peaks: Vec<usize> = p
        .maximals()
        .into_iter()
        .filter(|z| u.support.contains(z))
        .collect();
    let k = support_peaks.len();
    let mut out = Vec::new();
    for mask in 1u64..((1u64 << k) - 1) {
        let chosen: BTreeSet<usize> = support_peaks
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &z)| z)
            .collect();
        let rest: BTreeSet<usize> = support_peaks
            .iter()
            .copied()
            .filter(|z| !chosen.contains(z))
            .collect();
        let below_chosen = p.down_closure(&chosen);
        let below_rest = p.down_closure(&rest);
        let support: BTreeSet<usize> = below_chosen
            .difference(&below_rest)
            .copied()
            .filter(|x| u.support.contains(x))
            .collect();
        let dimv: Vec<i64> = (0..p.len())
            .map(|x| if support.contains(&x) { u.dimv[x] } else { 0 })
            .collect();
        out.push(Subobject {
            peaks: chosen,
            support,
            dimv,
        });
    }
    out.sort_by(|a, b| a.peaks.cmp(&b.peaks));
    out
}

/// Explicit admissible blocks selecting the full block at each peak of I
/// and zero elsewhere.
pub fn admissible_blocks_for(u: &ExplicitPeakSpace, peaks: &BTreeSet<usize>) -> Vec<Subspace> {
    u.poset()
        .maximals()
        .iter()
        .zip(u.peak_dims())
        .map(|(&z, &d)| {
            if peaks.contains(&z) {
                Subspace::full(d)
            } else {
                Subspace::zero(d)
            }
        })
        .collect()
}
