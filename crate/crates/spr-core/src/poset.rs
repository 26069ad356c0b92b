//! Finite posets, incidence matrices, and the quivers that generate them.
//!
//! A poset is stored as the reflexive-transitive closure of its cover
//! relations over points kept in insertion order. The incidence matrix C of
//! a poset has c[x][t] = 1 iff x is below-or-equal t; under any linear
//! extension it is unitriangular, so its inverse is an integer matrix and is
//! computed exactly by back-substitution. The bilinear form b(a, b) = a C^-1
//! b^T drives every weight construction downstream.
//!
//! A poset is of type A when it is connected and contains no peak subposet
//! isomorphic to one of four obstructions: three incomparable points under
//! one peak, a two-chain under two peaks, one point under three peaks, or a
//! crown (a chordless cycle in the peak incidence graph). Such posets are
//! exactly the ones arising from an A_n quiver together with a valid set of
//! alien arrows, via the path order of the extended quiver.

use crate::linalg::{int, Int, IntMat};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("cycle through {}", witness.join(" < "))]
    CycleDetected { witness: Vec<String> },
    #[error("unknown point label {label}")]
    UnknownLabel { label: String },
    #[error("duplicate point label {label}")]
    DuplicatePoint { label: String },
}

/// Finite poset with labelled points in insertion order.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    /// Reflexive-transitive closure: leq[x][t] iff x <= t.
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds a poset from labelled points and cover pairs `(a, b)` meaning
    /// b covers a. Relations beyond covers are accepted too; the closure is
    /// taken either way.
    pub fn new(points: &[&str], covers: &[(&str, &str)]) -> Result<Poset, PosetError> {
        let mut labels = Vec::new();
        let mut index = BTreeMap::new();
        for &p in points {
            if index.insert(p.to_string(), labels.len()).is_some() {
                return Err(PosetError::DuplicatePoint {
                    label: p.to_string(),
                });
            }
            labels.push(p.to_string());
        }
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        let look = |l: &str| -> Result<usize, PosetError> {
            index.get(l).copied().ok_or(PosetError::UnknownLabel {
                label: l.to_string(),
            })
        };
        let mut edges = vec![Vec::new(); n];
        for &(a, b) in covers {
            let (a, b) = (look(a)?, look(b)?);
            edges[a].push(b);
        }
        // Warshall closure, then a cycle check: a <= b <= a with a != b is a cycle.
        for (a, row) in edges.iter().enumerate() {
            for &b in row {
                leq[a][b] = true;
            }
        }
        for k in 0..n {
            let through_k = leq[k].clone();
            for row in leq.iter_mut() {
                if row[k] {
                    for (j, &reach) in through_k.iter().enumerate() {
                        if reach {
                            row[j] = true;
                        }
                    }
                }
            }
        }
        for (a, row) in leq.iter().enumerate() {
            for (b, &ab) in row.iter().enumerate() {
                if a != b && ab && leq[b][a] {
                    let witness = Self::cycle_witness(&edges, a);
                    return Err(PosetError::CycleDetected {
                        witness: witness.into_iter().map(|i| labels[i].clone()).collect(),
                    });
                }
            }
        }
        Ok(Poset { labels, index, leq })
    }

    fn cycle_witness(edges: &[Vec<usize>], start: usize) -> Vec<usize> {
        // DFS from a point known to lie on a cycle; the first return to the
        // stack closes it.
        let mut stack = vec![start];
        let mut on_stack = vec![false; edges.len()];
        on_stack[start] = true;
        fn dfs(
            edges: &[Vec<usize>],
            v: usize,
            stack: &mut Vec<usize>,
            on_stack: &mut [bool],
        ) -> Option<usize> {
            for &w in &edges[v] {
                if on_stack[w] {
                    return Some(w);
                }
                stack.push(w);
                on_stack[w] = true;
                if let Some(hit) = dfs(edges, w, stack, on_stack) {
                    return Some(hit);
                }
                stack.pop();
                on_stack[w] = false;
            }
            None
        }
        if let Some(hit) = dfs(edges, start, &mut stack, &mut on_stack) {
            let from = stack.iter().position(|&v| v == hit).unwrap();
            let mut cycle = stack[from..].to_vec();
            cycle.push(hit);
            cycle
        } else {
            vec![start]
        }
    }

    /// Points labelled "1".."n" with integer cover pairs.
    pub fn from_covers_numeric(n: usize, covers: &[(usize, usize)]) -> Poset {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let cover_strings: Vec<(String, String)> = covers
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let cover_refs: Vec<(&str, &str)> = cover_strings
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Poset::new(&refs, &cover_refs).expect("numeric poset is well formed")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    pub fn is_maximal(&self, a: usize) -> bool {
        (0..self.len()).all(|b| !self.lt(a, b))
    }

    pub fn is_minimal(&self, a: usize) -> bool {
        (0..self.len()).all(|b| !self.lt(b, a))
    }

    pub fn maximals(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.is_maximal(a)).collect()
    }

    pub fn minimals(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.is_minimal(a)).collect()
    }

    /// Cover pairs (a, b) of the transitive reduction, b covering a.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.lt(a, b) && !(0..self.len()).any(|m| self.lt(a, m) && self.lt(m, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn up_set(&self, a: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&b| self.leq(a, b)).collect()
    }

    pub fn down_set(&self, a: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&b| self.leq(b, a)).collect()
    }

    pub fn down_closure(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.len())
            .filter(|&b| set.iter().any(|&a| self.leq(b, a)))
            .collect()
    }

    /// Linear extension listing minimal points first; ties broken by
    /// insertion order, so the result is deterministic.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .find(|&a| !placed[a] && (0..n).all(|b| placed[b] || !self.lt(b, a)))
                .expect("poset is acyclic");
            placed[next] = true;
            out.push(next);
        }
        out
    }

    /// Induced subposet on `points`; the result keeps insertion order and the
    /// returned map sends new indices to old ones.
    pub fn induced(&self, points: &BTreeSet<usize>) -> (Poset, Vec<usize>) {
        let old: Vec<usize> = (0..self.len()).filter(|i| points.contains(i)).collect();
        let labels: Vec<String> = old.iter().map(|&i| self.labels[i].clone()).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            index.insert(l.clone(), i);
        }
        let m = old.len();
        let mut leq = vec![vec![false; m]; m];
        for i in 0..m {
            for j in 0..m {
                leq[i][j] = self.leq(old[i], old[j]);
            }
        }
        (Poset { labels, index, leq }, old)
    }

    /// Connectivity of the comparability graph.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (w, seen_w) in seen.iter_mut().enumerate() {
                if !*seen_w && v != w && self.comparable(v, w) {
                    *seen_w = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Length of the longest chain within `set` (number of points).
    pub fn max_chain_len(&self, set: &BTreeSet<usize>) -> usize {
        let pts: Vec<usize> = set.iter().copied().collect();
        let mut best = vec![1usize; pts.len()];
        // Process in a linear-extension-compatible order: below before above.
        let mut order: Vec<usize> = (0..pts.len()).collect();
        order.sort_by_key(|&i| self.down_set(pts[i]).len());
        let mut overall = 0;
        for &i in &order {
            for &j in &order {
                if self.lt(pts[j], pts[i]) {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
            overall = overall.max(best[i]);
        }
        overall
    }

    /// True when every maximal point of the induced subposet on `set` is
    /// also maximal in the whole poset.
    pub fn is_peak_subset(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&a| {
            let max_in_set = !set.iter().any(|&b| self.lt(a, b));
            !max_in_set || self.is_maximal(a)
        })
    }

    pub fn labels_of(&self, set: &BTreeSet<usize>) -> Vec<String> {
        set.iter().map(|&i| self.labels[i].clone()).collect()
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        write!(f, "Poset[{}; {}]", self.labels.join(","), covers.join(" "))
    }
}

/// Incidence matrix of a poset in an explicit point order, with its exact
/// integer inverse.
pub struct Incidence {
    /// Point indices in matrix order.
    pub order: Vec<usize>,
    /// c[a][b] = 1 iff order[a] <= order[b].
    pub matrix: IntMat,
    pub inverse: IntMat,
}

/// Incidence matrix in the canonical minimal-first linear extension order.
pub fn incidence_matrix(p: &Poset) -> Incidence {
    incidence_matrix_ordered(p, &p.linear_extension())
}

/// Incidence matrix in a caller-chosen order covering every point once.
///
/// The inverse is computed on the linear-extension conjugate, where the
/// matrix is upper-unitriangular, and permuted back.
pub fn incidence_matrix_ordered(p: &Poset, order: &[usize]) -> Incidence {
    let n = p.len();
    assert_eq!(order.len(), n, "order must cover every point");
    let ext = p.linear_extension();
    let mut tri = IntMat::zero(n, n);
    for a in 0..n {
        for b in 0..n {
            if p.leq(ext[a], ext[b]) {
                *tri.at_mut(a, b) = int(1);
            }
        }
    }
    let tri_inv = tri.invert_upper_unitriangular();
    let mut pos_in_ext = vec![0usize; n];
    for (pos, &pt) in ext.iter().enumerate() {
        pos_in_ext[pt] = pos;
    }
    let mut matrix = IntMat::zero(n, n);
    let mut inverse = IntMat::zero(n, n);
    for a in 0..n {
        for b in 0..n {
            if p.leq(order[a], order[b]) {
                *matrix.at_mut(a, b) = int(1);
            }
            *inverse.at_mut(a, b) = tri_inv
                .at(pos_in_ext[order[a]], pos_in_ext[order[b]])
                .clone();
        }
    }
    Incidence {
        order: order.to_vec(),
        matrix,
        inverse,
    }
}

/// Exact bilinear form b(a, b) = a C^-1 b^T with vectors indexed by point
/// insertion order.
pub fn bilinear_form(p: &Poset, a: &[i64], b: &[i64]) -> Int {
    assert_eq!(a.len(), p.len());
    assert_eq!(b.len(), p.len());
    let inc = incidence_matrix(p);
    let ra: Vec<i64> = inc.order.iter().map(|&i| a[i]).collect();
    let rb: Vec<i64> = inc.order.iter().map(|&i| b[i]).collect();
    inc.inverse.apply_bilinear(&ra, &rb)
}

/// Row vector 1 C^-1 in point insertion order: the left radical weight.
pub fn weight_w(p: &Poset) -> Vec<i64> {
    let inc = incidence_matrix(p);
    let mut out = vec![0i64; p.len()];
    for (col, &pt) in inc.order.iter().enumerate() {
        let mut acc = Int::from(0);
        for row in 0..p.len() {
            acc += inc.inverse.at(row, col);
        }
        out[pt] = i64::try_from(&acc).expect("weight fits in i64");
    }
    out
}

/// Column vector C^-1 1 in point insertion order: the right radical weight.
pub fn weight_kappa(p: &Poset) -> Vec<i64> {
    let inc = incidence_matrix(p);
    let mut out = vec![0i64; p.len()];
    for (row, &pt) in inc.order.iter().enumerate() {
        let mut acc = Int::from(0);
        for col in 0..p.len() {
            acc += inc.inverse.at(row, col);
        }
        out[pt] = i64::try_from(&acc).expect("weight fits in i64");
    }
    out
}

/// One of the four obstructions excluded by type A, with point labels as
/// witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeAViolation {
    NotConnected,
    /// Three pairwise-incomparable points under one maximal point.
    ThreeUnderOnePeak {
        peak: String,
        points: [String; 3],
    },
    /// A two-chain lying under two distinct maximal points.
    ChainUnderTwoPeaks {
        chain: [String; 2],
        peaks: [String; 2],
    },
    /// One point under three distinct maximal points.
    OneUnderThreePeaks {
        point: String,
        peaks: [String; 3],
    },
    /// Crown: a chordless cycle x1 z1 x2 z2 ... in the peak incidence graph
    /// with pairwise-incomparable lower points.
    Crown {
        cycle: Vec<String>,
    },
}

/// Decides whether the poset is of type A; on failure returns the first
/// obstruction found, scanned in a deterministic order.
pub fn is_type_a(p: &Poset) -> Result<(), TypeAViolation> {
    if !p.is_connected() {
        return Err(TypeAViolation::NotConnected);
    }
    let n = p.len();
    let maximals = p.maximals();
    let lab = |i: usize| p.label(i).to_string();
    // Three incomparable points under one peak.
    for &z in &maximals {
        let below: Vec<usize> = (0..n).filter(|&x| p.lt(x, z)).collect();
        for (ia, &a) in below.iter().enumerate() {
            for (ib, &b) in below.iter().enumerate().skip(ia + 1) {
                if p.comparable(a, b) {
                    continue;
                }
                for &c in below.iter().skip(ib + 1) {
                    if !p.comparable(a, c) && !p.comparable(b, c) {
                        return Err(TypeAViolation::ThreeUnderOnePeak {
                            peak: lab(z),
                            points: [lab(a), lab(b), lab(c)],
                        });
                    }
                }
            }
        }
    }
    // A two-chain under two peaks.
    for w in 0..n {
        for m in 0..n {
            if !p.lt(w, m) || p.is_maximal(m) {
                continue;
            }
            let over: Vec<usize> = maximals.iter().copied().filter(|&z| p.lt(m, z)).collect();
            if over.len() >= 2 {
                return Err(TypeAViolation::ChainUnderTwoPeaks {
                    chain: [lab(w), lab(m)],
                    peaks: [lab(over[0]), lab(over[1])],
                });
            }
        }
    }
    // One point under three peaks.
    for b in 0..n {
        let over: Vec<usize> = maximals.iter().copied().filter(|&z| p.lt(b, z)).collect();
        if over.len() >= 3 {
            return Err(TypeAViolation::OneUnderThreePeaks {
                point: lab(b),
                peaks: [lab(over[0]), lab(over[1]), lab(over[2])],
            });
        }
    }
    if let Some(cycle) = find_crown(p) {
        return Err(TypeAViolation::Crown {
            cycle: cycle.into_iter().map(lab).collect(),
        });
    }
    Ok(())
}

/// Searches for a crown: lower points x1..xk (pairwise incomparable, not
/// maximal) and peaks z1..zk with x_i below exactly z_i and z_{i+1} among
/// the chosen peaks, cyclically, k >= 2.
fn find_crown(p: &Poset) -> Option<Vec<usize>> {
    let maximals = p.maximals();
    let lowers: Vec<usize> = (0..p.len()).filter(|&x| !p.is_maximal(x)).collect();
    // DFS over alternating paths x1 z1 x2 z2 ...; a chordless cycle closes
    // back at x1 through a peak unused inside the path.
    fn extend(
        p: &Poset,
        maximals: &[usize],
        lowers: &[usize],
        path_x: &mut Vec<usize>,
        path_z: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let last_x = *path_x.last().unwrap();
        for &z in maximals {
            if path_z.contains(&z) || !p.lt(last_x, z) {
                continue;
            }
            // Chordless: no interior x of the path lies below z.
            let chord =
                path_x.len() >= 2 && path_x[1..path_x.len() - 1].iter().any(|&x| p.lt(x, z));
            if chord {
                continue;
            }
            // Once at least one peak is on the path, x1 below z closes a
            // cycle of length >= 4; at the first peak it is just the edge.
            if !path_z.is_empty() && p.lt(path_x[0], z) {
                let mut cycle = Vec::new();
                for i in 0..path_x.len() {
                    cycle.push(path_x[i]);
                    cycle.push(if i + 1 < path_x.len() { path_z[i] } else { z });
                }
                return Some(cycle);
            }
            path_z.push(z);
            for &x in lowers {
                if path_x.contains(&x) || !p.lt(x, z) {
                    continue;
                }
                if path_x.iter().any(|&y| p.comparable(x, y)) {
                    continue;
                }
                // Chordless on the x side: x may be below only this z among
                // the peaks already on the path.
                if path_z[..path_z.len() - 1].iter().any(|&zz| p.lt(x, zz)) {
                    continue;
                }
                path_x.push(x);
                if let Some(c) = extend(p, maximals, lowers, path_x, path_z) {
                    return Some(c);
                }
                path_x.pop();
            }
            path_z.pop();
        }
        None
    }
    for &x0 in &lowers {
        let mut path_x = vec![x0];
        let mut path_z = Vec::new();
        if let Some(c) = extend(p, &maximals, &lowers, &mut path_x, &mut path_z) {
            return Some(c);
        }
    }
    None
}

/// An A_n quiver: vertices 1..n on a line, one arrow between each pair of
/// neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverA {
    n: usize,
    /// right[i] iff the arrow between i+1 and i+2 points right.
    right: Vec<bool>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("arrow {a}->{b} does not join neighbors")]
    NotNeighbors { a: usize, b: usize },
    #[error("edge between {a} and {a_plus_1} given more than once", a_plus_1 = a + 1)]
    DuplicateEdge { a: usize },
    #[error("edge between {a} and {a_plus_1} missing", a_plus_1 = a + 1)]
    MissingEdge { a: usize },
    #[error("quiver needs at least 2 vertices, got {n}")]
    TooSmall { n: usize },
}

impl QuiverA {
    pub fn new(n: usize, right: Vec<bool>) -> QuiverA {
        assert_eq!(right.len(), n.saturating_sub(1));
        assert!(n >= 2, "need at least 2 vertices");
        QuiverA { n, right }
    }

    /// From explicit neighbor arrows; every neighbor pair must appear once.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<QuiverA, QuiverError> {
        if n < 2 {
            return Err(QuiverError::TooSmall { n });
        }
        let mut right = vec![None; n - 1];
        for &(a, b) in arrows {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(QuiverError::VertexOutOfRange { v, n });
                }
            }
            let (lo, dir) = if b == a + 1 {
                (a, true)
            } else if a == b + 1 {
                (b, false)
            } else {
                return Err(QuiverError::NotNeighbors { a, b });
            };
            if right[lo - 1].is_some() {
                return Err(QuiverError::DuplicateEdge { a: lo });
            }
            right[lo - 1] = Some(dir);
        }
        if let Some(missing) = right.iter().position(Option::is_none) {
            return Err(QuiverError::MissingEdge { a: missing + 1 });
        }
        Ok(QuiverA {
            n,
            right: right.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// True iff the arrow between i and i+1 points right (i -> i+1).
    pub fn points_right(&self, i: usize) -> bool {
        self.right[i - 1]
    }

    /// Directed neighbor arrows as (source, target).
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        (1..self.n)
            .map(|i| {
                if self.points_right(i) {
                    (i, i + 1)
                } else {
                    (i + 1, i)
                }
            })
            .collect()
    }

    /// Interior vertices i with i -> i+1.
    pub fn upper(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.points_right(i)).collect()
    }

    /// Interior vertices i with i+1 -> i.
    pub fn lower(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| !self.points_right(i)).collect()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        let from_left = v > 1 && self.points_right(v - 1);
        let from_right = v < self.n && !self.points_right(v);
        let to_left = v > 1 && !self.points_right(v - 1);
        let to_right = v < self.n && self.points_right(v);
        (from_left || from_right) && !to_left && !to_right
    }

    pub fn is_source(&self, v: usize) -> bool {
        let to_left = v > 1 && !self.points_right(v - 1);
        let to_right = v < self.n && self.points_right(v);
        let from_left = v > 1 && self.points_right(v - 1);
        let from_right = v < self.n && !self.points_right(v);
        (to_left || to_right) && !from_left && !from_right
    }

    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.is_sink(v)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.is_source(v)).collect()
    }

    /// Vertices with a directed path to the sink z: the interval of support
    /// of the injective at z.
    pub fn sink_basin(&self, z: usize) -> (usize, usize) {
        debug_assert!(self.is_sink(z));
        let mut lo = z;
        while lo > 1 && self.points_right(lo - 1) {
            lo -= 1;
        }
        let mut hi = z;
        while hi < self.n && !self.points_right(hi) {
            hi += 1;
        }
        (lo, hi)
    }
}

/// An A_n quiver together with extra (alien) arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedQuiver {
    pub quiver: QuiverA,
    pub aliens: Vec<(usize, usize)>,
}

/// Per-arrow diagnostics from alien-set validation; a valid set produces
/// none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlienViolation {
    /// Endpoints of the arrow fit in no single sink basin.
    OutsideSinkBasin { arrow: (usize, usize) },
    /// The target is a source of the underlying quiver other than an end
    /// vertex.
    TargetInteriorSource { arrow: (usize, usize) },
    /// The arrow is not the unique directed path between its endpoints in
    /// the extended quiver.
    PathNotUnique { arrow: (usize, usize) },
    /// The extended quiver has a directed cycle.
    CycleCreated { witness: Vec<usize> },
}

/// Validates an alien set against its quiver, reporting every violated
/// condition rather than just the first.
pub fn validate_alien_set(q: &QuiverA, aliens: &[(usize, usize)]) -> Vec<AlienViolation> {
    let mut out = Vec::new();
    let n = q.vertex_count();
    let basins: Vec<(usize, usize)> = q.sinks().iter().map(|&z| q.sink_basin(z)).collect();
    for &(s, t) in aliens {
        let inside = basins
            .iter()
            .any(|&(lo, hi)| lo <= s && s <= hi && lo <= t && t <= hi);
        if s < 1 || s > n || t < 1 || t > n || s == t || !inside {
            out.push(AlienViolation::OutsideSinkBasin { arrow: (s, t) });
        }
        if t >= 1 && t <= n && q.is_source(t) && t != 1 && t != n {
            out.push(AlienViolation::TargetInteriorSource { arrow: (s, t) });
        }
    }
    // Adjacency of the extended quiver, for path uniqueness and acyclicity.
    let mut adj = vec![Vec::new(); n + 1];
    for (a, b) in q.arrows() {
        adj[a].push(b);
    }
    for &(s, t) in aliens {
        if (1..=n).contains(&s) && (1..=n).contains(&t) {
            adj[s].push(t);
        }
    }
    if let Some(cycle) = directed_cycle(&adj, n) {
        out.push(AlienViolation::CycleCreated { witness: cycle });
    }
    for &(s, t) in aliens {
        if !(1..=n).contains(&s) || !(1..=n).contains(&t) || s == t {
            continue;
        }
        if count_simple_paths(&adj, s, t, 2) != 1 {
            out.push(AlienViolation::PathNotUnique { arrow: (s, t) });
        }
    }
    out
}

fn directed_cycle(adj: &[Vec<usize>], n: usize) -> Option<Vec<usize>> {
    let mut state = vec![0u8; n + 1]; // 0 unseen, 1 on stack, 2 done
    let mut stack = Vec::new();
    fn dfs(
        adj: &[Vec<usize>],
        v: usize,
        state: &mut [u8],
        stack: &mut Vec<usize>,
    ) -> Option<usize> {
        state[v] = 1;
        stack.push(v);
        for &w in &adj[v] {
            if state[w] == 1 {
                return Some(w);
            }
            if state[w] == 0 {
                if let Some(hit) = dfs(adj, w, state, stack) {
                    return Some(hit);
                }
            }
        }
        state[v] = 2;
        stack.pop();
        None
    }
    for v in 1..=n {
        if state[v] == 0 {
            if let Some(hit) = dfs(adj, v, &mut state, &mut stack) {
                let from = stack.iter().position(|&x| x == hit).unwrap();
                let mut cycle = stack[from..].to_vec();
                cycle.push(hit);
                return Some(cycle);
            }
        }
    }
    None
}

/// Counts simple directed paths from s to t, giving up at `cap`.
fn count_simple_paths(adj: &[Vec<usize>], s: usize, t: usize, cap: usize) -> usize {
    fn dfs(
        adj: &[Vec<usize>],
        v: usize,
        t: usize,
        visited: &mut Vec<bool>,
        count: &mut usize,
        cap: usize,
    ) {
        if *count >= cap {
            return;
        }
        if v == t {
            *count += 1;
            return;
        }
        visited[v] = true;
        for &w in &adj[v] {
            if !visited[w] {
                dfs(adj, w, t, visited, count, cap);
            }
        }
        visited[v] = false;
    }
    let mut visited = vec![false; adj.len()];
    let mut count = 0;
    dfs(adj, s, t, &mut visited, &mut count, cap);
    count
}

/// The path order of an extended quiver: x <= y iff the extended quiver has
/// a directed path from x to y. Points are labelled "1".."n" in vertex
/// order; maximal points are exactly the sinks.
pub fn poset_of_quiver(eq: &ExtendedQuiver) -> Poset {
    let violations = validate_alien_set(&eq.quiver, &eq.aliens);
    assert!(violations.is_empty(), "invalid alien set: {violations:?}");
    let n = eq.quiver.vertex_count();
    let mut covers: Vec<(usize, usize)> = eq.quiver.arrows();
    covers.extend(eq.aliens.iter().copied());
    let poset = Poset::from_covers_numeric(n, &covers);
    debug_assert!(is_type_a(&poset).is_ok(), "path order must be of type A");
    poset
}
