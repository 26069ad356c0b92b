//! The convex polygon model attached to an A_n quiver with alien arrows.
//!
//! A quiver on vertices 1..n gets a convex polygon on vertices 0..n: the
//! interior vertex i sits on top when the arrow between i and i+1 points
//! right and on the bottom otherwise, and 0 and n are the two poles. The
//! boundary is walked clockwise (0, top ascending, n, bottom descending);
//! R is the next-vertex map along that walk. Segments between polygon
//! vertices correspond to interval modules via gamma(i, j) -> M(i+1, j),
//! and pivoting one endpoint backwards along the boundary realizes the
//! irreducible maps of the interval category.
//!
//! Socle-projective intervals are carved out in stages: bi-fans over the
//! suitable unit segments form the overline class, principal chains remove
//! the underline class, and each alien arrow freezes the segments whose
//! interval contains the alien's source and its mid sink but not its
//! target. What remains (the starred non-frozen segments) is in bijection
//! with the indecomposable peak spaces of the path order poset, and the
//! backward pivots through non-selected segments recover the arrows of the
//! Auslander-Reiten quiver.
//!
//! Two exact central charges certify stability geometrically: the general
//! convex charge reads off polygon coordinate differences (reflected across
//! the diagonal), and the sincere-shape charge pairs the fence weights with
//! a margin m. All angle comparisons are integer cross products.

use crate::poset::{validate_alien_set, AlienViolation, ExtendedQuiver, Poset, QuiverA};
use crate::repr::{proper_subobjects, FenceKind, Indecomposable};
use crate::stability::Verdict;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("segment {0:?} is not a selected segment")]
    NotSpSegment(Segment),
    #[error("alien arrow set is invalid: {violations:?}")]
    InvalidAlien { violations: Vec<AlienViolation> },
    #[error("charge ({re}, {im}) lies on a boundary angle")]
    BoundaryAngle { re: i64, im: i64 },
}

/// A chord or boundary edge of the polygon, endpoints in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Segment {
    pub a: usize,
    pub b: usize,
}

impl Segment {
    pub fn new(a: usize, b: usize) -> Segment {
        assert!(a < b, "segment endpoints must increase");
        Segment { a, b }
    }

    /// The interval of the quiver represented by this segment.
    pub fn interval(&self) -> (usize, usize) {
        (self.a + 1, self.b)
    }

    pub fn label(&self) -> String {
        format!("\u{03b3}({},{})", self.a, self.b)
    }
}

/// The convex polygon of a quiver: boundary cycle, rotation map, and exact
/// integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    n: usize,
    upper: Vec<usize>,
    lower: Vec<usize>,
    cycle: Vec<usize>,
    /// Position of each vertex in the boundary cycle.
    cycle_pos: Vec<usize>,
    coords: Vec<(i64, i64)>,
}

/// Builds the polygon of a quiver: vertex k at (k, k(n+1-k)) on top,
/// mirrored below, poles at (0, 0) and (n, 0).
pub fn build_polygon(q: &QuiverA) -> Polygon {
    let n = q.vertex_count();
    let upper = q.upper();
    let lower = q.lower();
    let mut cycle = vec![0usize];
    cycle.extend(upper.iter().copied());
    cycle.push(n);
    cycle.extend(lower.iter().rev().copied());
    let mut cycle_pos = vec![0usize; n + 1];
    for (pos, &v) in cycle.iter().enumerate() {
        cycle_pos[v] = pos;
    }
    let h = |k: usize| (k as i64) * (n as i64 + 1 - k as i64);
    let mut coords = vec![(0i64, 0i64); n + 1];
    coords[n] = (n as i64, 0);
    for &k in &upper {
        coords[k] = (k as i64, h(k));
    }
    for &k in &lower {
        coords[k] = (k as i64, -h(k));
    }
    Polygon {
        n,
        upper,
        lower,
        cycle,
        cycle_pos,
        coords,
    }
}

impl Polygon {
    /// Number of quiver vertices; polygon vertices run 0..=n.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn coords(&self, v: usize) -> (i64, i64) {
        self.coords[v]
    }

    pub fn is_upper(&self, v: usize) -> bool {
        self.upper.contains(&v)
    }

    pub fn is_lower(&self, v: usize) -> bool {
        self.lower.contains(&v)
    }

    /// Next vertex clockwise along the boundary.
    pub fn rot(&self, v: usize) -> usize {
        self.cycle[(self.cycle_pos[v] + 1) % self.cycle.len()]
    }

    /// Previous vertex clockwise along the boundary.
    pub fn rot_inv(&self, v: usize) -> usize {
        let pos = self.cycle_pos[v];
        self.cycle[(pos + self.cycle.len() - 1) % self.cycle.len()]
    }

    /// Every segment between distinct polygon vertices.
    pub fn all_segments(&self) -> Vec<Segment> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..=self.n {
                out.push(Segment::new(a, b));
            }
        }
        out
    }
}

/// The two backward pivots of a segment, dropping the ones that would
/// collapse it.
pub fn pivots(poly: &Polygon, s: Segment) -> Vec<Segment> {
    let mut out = Vec::new();
    let rb = poly.rot_inv(s.b);
    if s.a < rb {
        out.push(Segment::new(s.a, rb));
    }
    let ra = poly.rot_inv(s.a);
    if ra < s.b {
        out.push(Segment::new(ra, s.b));
    }
    out
}

/// Rotation applied to both endpoints; undefined when the boundary walk
/// reverses their order.
pub fn translate(poly: &Polygon, s: Segment) -> Option<Segment> {
    let (ra, rb) = (poly.rot(s.a), poly.rot(s.b));
    (ra < rb).then(|| Segment::new(ra, rb))
}

/// The translation quiver on all segments, arrows given by pivots.
#[derive(Debug, Clone)]
pub struct TranslationQuiver {
    pub nodes: Vec<Segment>,
    pub arrows: Vec<(Segment, Segment)>,
}

pub fn translation_quiver(poly: &Polygon) -> TranslationQuiver {
    let nodes = poly.all_segments();
    let mut arrows = Vec::new();
    for &s in &nodes {
        for t in pivots(poly, s) {
            arrows.push((s, t));
        }
    }
    TranslationQuiver { nodes, arrows }
}

/// Unit boundary-adjacent segments whose endpoints alternate between the
/// top class (with the left pole) and the bottom class (with the right
/// pole).
pub fn suitable_segments(poly: &Polygon) -> BTreeSet<Segment> {
    let n = poly.n;
    let top = |v: usize| v == 0 || poly.is_upper(v);
    let bottom = |v: usize| v == n || poly.is_lower(v);
    (0..n)
        .filter(|&i| (top(i) && bottom(i + 1)) || (bottom(i) && top(i + 1)))
        .map(|i| Segment::new(i, i + 1))
        .collect()
}

/// The bi-fan of a segment: left endpoints are the backward orbit values
/// below a, right endpoints the backward orbit values above b, paired in
/// all combinations.
pub fn bi_fan(poly: &Polygon, s: Segment) -> BTreeSet<Segment> {
    let mut left = BTreeSet::from([s.a]);
    let mut v = poly.rot_inv(s.a);
    while v != s.a {
        if v < s.a {
            left.insert(v);
        }
        v = poly.rot_inv(v);
    }
    let mut right = BTreeSet::from([s.b]);
    let mut v = poly.rot_inv(s.b);
    while v != s.b {
        if v > s.b {
            right.insert(v);
        }
        v = poly.rot_inv(v);
    }
    left.iter()
        .flat_map(|&a| right.iter().map(move |&b| Segment::new(a, b)))
        .collect()
}

/// Union of the bi-fans over the suitable segments ending in the bottom
/// class.
pub fn overline_segments(poly: &Polygon) -> BTreeSet<Segment> {
    let n = poly.n;
    let mut out = BTreeSet::new();
    for s in suitable_segments(poly) {
        if s.b == n || poly.is_lower(s.b) {
            out.extend(bi_fan(poly, s));
        }
    }
    out
}

fn consecutive_runs(set: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for &v in set {
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == v => run.push(v),
            _ => runs.push(vec![v]),
        }
    }
    runs
}

/// Segments removed by principal chains: runs of length at least two in
/// the bottom class (with the right pole) contribute every segment
/// starting strictly before the run's maximum, and runs in the top class
/// away from vertex one contribute every segment ending strictly after the
/// run's minimum.
pub fn underline_segments(poly: &Polygon) -> BTreeSet<Segment> {
    let n = poly.n;
    let mut out = BTreeSet::new();
    let bottom: BTreeSet<usize> = poly.lower.iter().copied().chain([n]).collect();
    for run in consecutive_runs(&bottom) {
        if run.len() < 2 {
            continue;
        }
        let mx = *run.last().unwrap();
        for &s in run.iter().filter(|&&s| s != mx) {
            for m in s + 1..=n {
                out.insert(Segment::new(s, m));
            }
        }
    }
    let top: BTreeSet<usize> = poly.upper.iter().copied().collect();
    for run in consecutive_runs(&top) {
        if run.len() < 2 || run[0] < 2 {
            continue;
        }
        let mn = run[0];
        for &v in run.iter().filter(|&&v| v != mn) {
            for s in 0..v {
                out.insert(Segment::new(s, v));
            }
        }
    }
    out
}

/// Starred segments: overline minus underline.
pub fn star_segments(poly: &Polygon) -> BTreeSet<Segment> {
    let over = overline_segments(poly);
    let under = underline_segments(poly);
    over.difference(&under).copied().collect()
}

/// Segments frozen by one alien arrow: those whose interval contains the
/// arrow's source and the sink between its endpoints but not its target.
pub fn frozen_segments(
    poly: &Polygon,
    q: &QuiverA,
    alien: (usize, usize),
) -> Result<BTreeSet<Segment>, GeometryError> {
    let violations = validate_alien_set(q, &[alien]);
    if !violations.is_empty() {
        return Err(GeometryError::InvalidAlien { violations });
    }
    let (src, tgt) = alien;
    let (lo, hi) = (src.min(tgt), src.max(tgt));
    let mid_sink = q
        .sinks()
        .into_iter()
        .find(|&z| lo < z && z < hi)
        .expect("a valid alien straddles exactly one sink");
    let contains = |s: Segment, v: usize| s.a < v && v <= s.b;
    Ok(poly
        .all_segments()
        .into_iter()
        .filter(|&s| contains(s, mid_sink) && contains(s, src) && !contains(s, tgt))
        .collect())
}

/// Selected segments of an extended quiver: starred segments not frozen by
/// any alien arrow.
pub fn sp_segments(
    poly: &Polygon,
    eq: &ExtendedQuiver,
) -> Result<BTreeSet<Segment>, GeometryError> {
    let violations = validate_alien_set(&eq.quiver, &eq.aliens);
    if !violations.is_empty() {
        return Err(GeometryError::InvalidAlien { violations });
    }
    let mut out = star_segments(poly);
    for &alien in &eq.aliens {
        let frozen = frozen_segments(poly, &eq.quiver, alien)?;
        out.retain(|s| !frozen.contains(s));
    }
    Ok(out)
}

/// Every segment class of one extended quiver in one place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentClasses {
    pub suitable: BTreeSet<Segment>,
    pub overline: BTreeSet<Segment>,
    pub underline: BTreeSet<Segment>,
    pub star: BTreeSet<Segment>,
    /// Union of the frozen sets over all alien arrows.
    pub frozen: BTreeSet<Segment>,
    pub sp: BTreeSet<Segment>,
}

pub fn classify_segments(
    poly: &Polygon,
    eq: &ExtendedQuiver,
) -> Result<SegmentClasses, GeometryError> {
    let violations = validate_alien_set(&eq.quiver, &eq.aliens);
    if !violations.is_empty() {
        return Err(GeometryError::InvalidAlien { violations });
    }
    let mut frozen = BTreeSet::new();
    for &alien in &eq.aliens {
        frozen.extend(frozen_segments(poly, &eq.quiver, alien)?);
    }
    Ok(SegmentClasses {
        suitable: suitable_segments(poly),
        overline: overline_segments(poly),
        underline: underline_segments(poly),
        star: star_segments(poly),
        frozen,
        sp: sp_segments(poly, eq)?,
    })
}

/// The support of the peak space attached to a selected segment: the poset
/// points indexed by its interval.
pub fn omega_support(sp: &BTreeSet<Segment>, s: Segment) -> Result<BTreeSet<usize>, GeometryError> {
    if !sp.contains(&s) {
        return Err(GeometryError::NotSpSegment(s));
    }
    // Poset points are zero-indexed, quiver vertices one-indexed.
    Ok((s.a..s.b).collect())
}

/// The Auslander-Reiten quiver on the selected segments: from each one,
/// walk one endpoint backwards through unselected segments and record an
/// arrow on the first selected segment reached.
#[derive(Debug, Clone)]
pub struct ArQuiver {
    pub nodes: Vec<Segment>,
    pub arrows: Vec<(Segment, Segment)>,
}

fn sp_walk(poly: &Polygon, sp: &BTreeSet<Segment>, s: Segment, move_left: bool) -> Option<Segment> {
    let start = if move_left { s.a } else { s.b };
    let mut cur = poly.rot_inv(start);
    while cur != start {
        let (a, b) = if move_left { (cur, s.b) } else { (s.a, cur) };
        if a >= b {
            return None;
        }
        let cand = Segment::new(a, b);
        if sp.contains(&cand) {
            return Some(cand);
        }
        cur = poly.rot_inv(cur);
    }
    None
}

pub fn ar_quiver(poly: &Polygon, sp: &BTreeSet<Segment>) -> ArQuiver {
    let nodes: Vec<Segment> = sp.iter().copied().collect();
    let mut arrows = Vec::new();
    for &s in &nodes {
        for move_left in [false, true] {
            if let Some(t) = sp_walk(poly, sp, s, move_left) {
                arrows.push((s, t));
            }
        }
    }
    ArQuiver { nodes, arrows }
}

/// True when every sink of the interval quiver is a sink of the whole
/// quiver; such interval modules have projective socle.
pub fn interval_socle_projective(q: &QuiverA, a: usize, b: usize) -> bool {
    debug_assert!(1 <= a && a <= b && b <= q.vertex_count());
    let upper: BTreeSet<usize> = q.upper().into_iter().collect();
    let lower: BTreeSet<usize> = q.lower().into_iter().collect();
    for l in a..=b {
        let out_right = upper.contains(&l) && l < b;
        let out_left = l >= 2 && lower.contains(&(l - 1)) && l > a;
        if out_right || out_left {
            continue; // not a sink of the interval
        }
        let global = !upper.contains(&l) && !(l >= 2 && lower.contains(&(l - 1)));
        if !global {
            return false;
        }
    }
    true
}

/// Exact central charge of a dimension vector from polygon coordinates,
/// reflected across the diagonal: the real part sums vertical steps, the
/// imaginary part horizontal ones.
pub fn charge_general(poly: &Polygon, dims: &[i64]) -> (i64, i64) {
    assert_eq!(dims.len(), poly.n);
    let mut re = 0i64;
    let mut im = 0i64;
    for (k, &d) in dims.iter().enumerate() {
        if d == 0 {
            continue;
        }
        let (x1, y1) = poly.coords(k + 1);
        let (x0, y0) = poly.coords(k);
        re += d * (y1 - y0);
        im += d * (x1 - x0);
    }
    (re, im)
}

fn cross(u: (i64, i64), v: (i64, i64)) -> i128 {
    u.0 as i128 * v.1 as i128 - u.1 as i128 * v.0 as i128
}

/// Stability report from an angle comparison route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleReport {
    pub verdict: Verdict,
    /// Supports of subobjects whose angle fails to exceed the object's.
    pub witnesses: Vec<BTreeSet<usize>>,
}

/// Angle stability under the general convex charge: stable when every
/// proper subobject has a strictly larger argument.
pub fn angle_stability_general(poly: &Polygon, p: &Poset, u: &Indecomposable) -> AngleReport {
    assert_eq!(p.len(), poly.n, "poset points must match quiver vertices");
    let z_total = charge_general(poly, &u.dimv);
    let mut equal = Vec::new();
    let mut smaller = Vec::new();
    for sub in proper_subobjects(p, u) {
        let z_sub = charge_general(poly, &sub.dimv);
        match cross(z_total, z_sub).signum() {
            1 => {}
            0 => equal.push(sub.support),
            _ => smaller.push(sub.support),
        }
    }
    finish_report(equal, smaller)
}

fn finish_report(equal: Vec<BTreeSet<usize>>, smaller: Vec<BTreeSet<usize>>) -> AngleReport {
    if !smaller.is_empty() {
        AngleReport {
            verdict: Verdict::Unstable,
            witnesses: smaller,
        }
    } else if !equal.is_empty() {
        AngleReport {
            verdict: Verdict::Semistable,
            witnesses: equal,
        }
    } else {
        AngleReport {
            verdict: Verdict::Stable,
            witnesses: Vec::new(),
        }
    }
}

/// Abstract fence poset of a given shape: points "1", "2", ... along the
/// path, peaks and low points alternating.
pub fn shape_poset(kind: FenceKind, r: usize) -> (Poset, Vec<bool>) {
    assert!(r >= 1);
    let flags: Vec<bool> = match kind {
        FenceKind::PeaksAtBothEnds => (0..2 * r - 1).map(|i| i % 2 == 0).collect(),
        FenceKind::PeakAtOneEnd => (0..2 * r).map(|i| i % 2 == 0).collect(),
        FenceKind::LowsAtBothEnds => (0..2 * r + 1).map(|i| i % 2 == 1).collect(),
    };
    let mut covers = Vec::new();
    for (i, &peak) in flags.iter().enumerate().take(flags.len() - 1) {
        if peak {
            covers.push((i + 2, i + 1)); // low i+1 below peak i
        } else {
            covers.push((i + 1, i + 2));
        }
    }
    (Poset::from_covers_numeric(flags.len(), &covers), flags)
}

/// Incidence weights of a fence-shaped poset in path order, with the
/// closed form: the left weight is one on low points and one minus the
/// number of covered low points on peaks; the right weight mirrors this.
pub fn sincere_weights(kind: FenceKind, r: usize) -> (Vec<i64>, Vec<i64>) {
    let (p, _) = shape_poset(kind, r);
    (crate::poset::weight_w(&p), crate::poset::weight_kappa(&p))
}

/// Incidence weights of an arbitrary poset that is itself a fence; errors
/// otherwise.
pub fn fence_weights(p: &Poset) -> Result<(Vec<i64>, Vec<i64>), FenceWeightError> {
    let all: BTreeSet<usize> = (0..p.len()).collect();
    match crate::repr::fence_of_subset(p, &all) {
        Some(_) => Ok((crate::poset::weight_w(p), crate::poset::weight_kappa(p))),
        None => Err(FenceWeightError::NotSincere),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FenceWeightError {
    #[error("poset is not a sincere fence")]
    NotSincere,
}

/// Exact margin-m charge of a dimension vector over a fence poset: the
/// weights shifted by m and paired with the dimensions.
pub fn charge_sincere(w: &[i64], kappa: &[i64], m: i64, dims: &[i64]) -> (i64, i64) {
    assert_eq!(w.len(), dims.len());
    assert_eq!(kappa.len(), dims.len());
    let re = w.iter().zip(dims).map(|(a, d)| (a + m) * d).sum();
    let im = kappa.iter().zip(dims).map(|(a, d)| (a + m) * d).sum();
    (re, im)
}

/// Angle stability under the margin-m sincere charge. A charge on the
/// coordinate axes is reported as a boundary angle; margins of two or more
/// keep every charge strictly interior.
pub fn angle_stability_sincere(
    p: &Poset,
    u: &Indecomposable,
    m: i64,
) -> Result<AngleReport, GeometryError> {
    let (w, kappa) = fence_weights(p).expect("sincere charge needs a fence poset");
    let z_total = interior_charge(&w, &kappa, m, &u.dimv)?;
    let mut equal = Vec::new();
    let mut smaller = Vec::new();
    for sub in proper_subobjects(p, u) {
        let z_sub = interior_charge(&w, &kappa, m, &sub.dimv)?;
        match cross(z_total, z_sub).signum() {
            1 => {}
            0 => equal.push(sub.support),
            _ => smaller.push(sub.support),
        }
    }
    Ok(finish_report(equal, smaller))
}

fn interior_charge(
    w: &[i64],
    kappa: &[i64],
    m: i64,
    dims: &[i64],
) -> Result<(i64, i64), GeometryError> {
    let (re, im) = charge_sincere(w, kappa, m, dims);
    if re == 0 || im == 0 {
        return Err(GeometryError::BoundaryAngle { re, im });
    }
    Ok((re, im))
}

/// Vertices of the margin-m polygon of a fence shape: prefix sums of the
/// shifted weights along the path, starting at the origin.
pub fn build_polygon_prime(kind: FenceKind, r: usize, m: i64) -> Vec<(i64, i64)> {
    let (w, kappa) = sincere_weights(kind, r);
    let mut out = vec![(0i64, 0i64)];
    for i in 0..w.len() {
        let (x, y) = *out.last().unwrap();
        out.push((x + w[i] + m, y + kappa[i] + m));
    }
    out
}
