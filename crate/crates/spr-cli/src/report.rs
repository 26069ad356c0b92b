//! Verb implementations: each builds a deterministic text report.
//!
//! Every listing is sorted, so identical inputs and flags produce byte
//! identical output. Validation failures become errors with witnesses; the
//! driver routes them to stderr with exit code 1.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use spr_core::{
    angle_stability_general, angle_stability_sincere, ar_quiver, ar_quiver_dot, build_polygon,
    charge_general, charge_sincere, classes_listing, classify_segments, connected_posets,
    enumerate_indecomposables, fence_weights, is_theta_stable, is_type_a, polygon_svg,
    poset_of_quiver, proper_subobjects, theta_of, valid_extended_quivers, GeometryError,
    Indecomposable, Poset, Verdict, Witness,
};

use crate::input::Input;
use crate::{describe_type_a, CliError, Method};

pub fn validate(input: &Input) -> Result<String, CliError> {
    match input {
        Input::Poset(p) => {
            is_type_a(p).map_err(|v| {
                CliError::validation(format!("poset is not of type A: {}", describe_type_a(&v)))
            })?;
            let maximals: BTreeSet<usize> = p.maximals().into_iter().collect();
            Ok(format!(
                "poset: {} points\ntype A: yes\nmaximals: {}\n",
                p.len(),
                set_str(p, &maximals)
            ))
        }
        Input::Quiver(eq) => {
            let p = poset_of_quiver(eq);
            is_type_a(&p).map_err(|v| {
                CliError::validation(format!(
                    "induced poset is not of type A: {}",
                    describe_type_a(&v)
                ))
            })?;
            let maximals: BTreeSet<usize> = p.maximals().into_iter().collect();
            Ok(format!(
                "quiver: {} vertices, {} aliens\nalien set: valid\ninduced poset: type A, maximals {}\n",
                eq.quiver.vertex_count(),
                eq.aliens.len(),
                set_str(&p, &maximals)
            ))
        }
    }
}

pub fn indecomposables(input: &Input) -> Result<String, CliError> {
    let p = poset_of_input(input)?;
    let objects = enumerate_indecomposables(&p);
    let mut out = String::new();
    for u in &objects {
        writeln!(
            out,
            "support={} dimv={}",
            set_str(&p, &u.support),
            tuple_str(&u.dimv)
        )
        .unwrap();
    }
    writeln!(out, "total: {}", objects.len()).unwrap();
    Ok(out)
}

pub fn subspaces(input: &Input, support_csv: &str) -> Result<String, CliError> {
    let p = poset_of_input(input)?;
    let mut support = BTreeSet::new();
    for label in support_csv.split(',') {
        let label = label.trim();
        let idx = p
            .index_of(label)
            .ok_or_else(|| CliError::usage(format!("unknown point label `{label}`")))?;
        support.insert(idx);
    }
    let objects = enumerate_indecomposables(&p);
    let u = objects
        .iter()
        .find(|u| u.support == support)
        .ok_or_else(|| {
            CliError::validation(format!(
                "no indecomposable supported on {}",
                set_str(&p, &support)
            ))
        })?;
    let subs = proper_subobjects(&p, u);
    let mut out = String::new();
    for s in &subs {
        writeln!(
            out,
            "support={} dimv={}",
            set_str(&p, &s.support),
            tuple_str(&s.dimv)
        )
        .unwrap();
    }
    writeln!(out, "total: {}", subs.len()).unwrap();
    Ok(out)
}

pub struct StabilityFlags {
    pub method: Method,
    pub m: Option<i64>,
    pub theta: Option<Vec<i64>>,
    pub kappa: Option<Vec<i64>>,
}

pub fn stability(input: &Input, flags: &StabilityFlags) -> Result<String, CliError> {
    match flags.method {
        Method::Bilinear => {
            if flags.m.is_some() {
                return Err(CliError::usage("--m applies only to the geometric method"));
            }
            bilinear_stability(input, flags.theta.as_deref(), flags.kappa.as_deref())
        }
        Method::Geometric => {
            if flags.theta.is_some() || flags.kappa.is_some() {
                return Err(CliError::usage(
                    "--theta and --kappa apply only to the bilinear method",
                ));
            }
            match flags.m {
                None => general_geometric_stability(input),
                Some(m) => sincere_geometric_stability(input, m),
            }
        }
    }
}

fn bilinear_stability(
    input: &Input,
    theta: Option<&[i64]>,
    kappa: Option<&[i64]>,
) -> Result<String, CliError> {
    let p = poset_of_input(input)?;
    for (name, vals) in [("--theta", theta), ("--kappa", kappa)] {
        if let Some(v) = vals {
            if v.len() != p.len() {
                return Err(CliError::usage(format!(
                    "{name} needs {} entries, got {}",
                    p.len(),
                    v.len()
                )));
            }
        }
    }
    let mut out = String::new();
    let mut tally = Tally::default();
    for u in enumerate_indecomposables(&p) {
        let th: Vec<i64> = match theta {
            Some(t) => t.to_vec(),
            None => theta_of(&p, &u),
        };
        let (verdict, witnesses) = match kappa {
            None => {
                let r = is_theta_stable(&p, &u, &th);
                (
                    verdict_str(r.verdict).to_string(),
                    witness_str(&p, &r.witnesses),
                )
            }
            Some(k) => match spr_core::is_mu_stable(&p, &u, &th, k) {
                Ok(r) => (
                    verdict_str(r.verdict).to_string(),
                    witness_str(&p, &r.witnesses),
                ),
                Err(e) => (format!("error({e})"), "[]".to_string()),
            },
        };
        tally.add(&verdict);
        writeln!(
            out,
            "support={} dimv={} weight={} verdict={} witnesses={}",
            set_str(&p, &u.support),
            tuple_str(&u.dimv),
            tuple_str(&th),
            verdict,
            witnesses
        )
        .unwrap();
    }
    out.push_str(&tally.line());
    Ok(out)
}

fn general_geometric_stability(input: &Input) -> Result<String, CliError> {
    let Input::Quiver(eq) = input else {
        return Err(CliError::validation(
            "the general geometric route needs a quiver file; pass --m for fence posets",
        ));
    };
    let poly = build_polygon(&eq.quiver);
    let p = poset_of_quiver(eq);
    let mut out = String::new();
    let mut tally = Tally::default();
    for u in enumerate_indecomposables(&p) {
        let (re, im) = charge_general(&poly, &u.dimv);
        let r = angle_stability_general(&poly, &p, &u);
        let verdict = verdict_str(r.verdict);
        tally.add(verdict);
        writeln!(
            out,
            "support={} dimv={} weight=({re},{im}) verdict={} witnesses={}",
            set_str(&p, &u.support),
            tuple_str(&u.dimv),
            verdict,
            support_list_str(&p, &r.witnesses)
        )
        .unwrap();
    }
    out.push_str(&tally.line());
    Ok(out)
}

fn sincere_geometric_stability(input: &Input, m: i64) -> Result<String, CliError> {
    if m < 1 {
        return Err(CliError::usage("--m must be at least 1"));
    }
    let p = poset_of_input(input)?;
    let (w, kappa) =
        fence_weights(&p).map_err(|e| CliError::validation(format!("sincere route: {e}")))?;
    let mut out = String::new();
    let mut tally = Tally::default();
    for u in enumerate_indecomposables(&p) {
        let (re, im) = charge_sincere(&w, &kappa, m, &u.dimv);
        let (verdict, witnesses) = match angle_stability_sincere(&p, &u, m) {
            Ok(r) => (
                verdict_str(r.verdict).to_string(),
                support_list_str(&p, &r.witnesses),
            ),
            Err(GeometryError::BoundaryAngle { .. }) => {
                ("boundary-angle".to_string(), "[]".to_string())
            }
            Err(e) => return Err(CliError::validation(e.to_string())),
        };
        tally.add(&verdict);
        writeln!(
            out,
            "support={} dimv={} weight=({re},{im}) verdict={} witnesses={}",
            set_str(&p, &u.support),
            tuple_str(&u.dimv),
            verdict,
            witnesses
        )
        .unwrap();
    }
    out.push_str(&tally.line());
    Ok(out)
}

pub fn polygon(input: &Input, svg: bool) -> Result<String, CliError> {
    let Input::Quiver(eq) = input else {
        return Err(CliError::validation(
            "the polygon model needs a quiver file",
        ));
    };
    let poly = build_polygon(&eq.quiver);
    let classes = classify_segments(&poly, eq).map_err(|e| CliError::validation(e.to_string()))?;
    Ok(if svg {
        polygon_svg(&poly, &classes)
    } else {
        classes_listing(&poly, &classes)
    })
}

pub fn ar_quiver_report(input: &Input, dot: bool) -> Result<String, CliError> {
    let Input::Quiver(eq) = input else {
        return Err(CliError::validation("the AR quiver needs a quiver file"));
    };
    let poly = build_polygon(&eq.quiver);
    let classes = classify_segments(&poly, eq).map_err(|e| CliError::validation(e.to_string()))?;
    let arq = ar_quiver(&poly, &classes.sp);
    if dot {
        return Ok(ar_quiver_dot(&poly, &arq));
    }
    let mut out = String::new();
    let names: Vec<String> = arq.nodes.iter().map(|s| s.label()).collect();
    writeln!(out, "nodes: {}", names.join(" ")).unwrap();
    for (src, dst) in &arq.arrows {
        writeln!(out, "{} -> {}", src.label(), dst.label()).unwrap();
    }
    writeln!(
        out,
        "total: {} nodes, {} arrows",
        arq.nodes.len(),
        arq.arrows.len()
    )
    .unwrap();
    Ok(out)
}

pub fn verify(max_points: usize, jobs: usize) -> Result<String, CliError> {
    if max_points == 0 {
        return Err(CliError::usage("--max-points must be at least 1"));
    }
    if max_points > 8 {
        return Err(CliError::usage("--max-points is capped at 8"));
    }
    if jobs == 0 {
        return Err(CliError::usage("--jobs must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::validation(format!("worker pool: {e}")))?;

    let posets = connected_posets(max_points);
    let theta_rows: Vec<(usize, bool, usize, Vec<String>)> = pool.install(|| {
        posets
            .par_iter()
            .map(|p| {
                if is_type_a(p).is_err() {
                    return (p.len(), false, 0, Vec::new());
                }
                let mut failures = Vec::new();
                let objects = enumerate_indecomposables(p);
                for u in &objects {
                    let th = theta_of(p, u);
                    let r = is_theta_stable(p, u, &th);
                    if r.verdict != Verdict::Stable {
                        failures.push(sweep_failure(p, u, verdict_str(r.verdict)));
                    }
                }
                (p.len(), true, objects.len(), failures)
            })
            .collect()
    });

    let quivers: Vec<_> = (2..=max_points).flat_map(valid_extended_quivers).collect();
    let angle_rows: Vec<(usize, usize, Vec<String>)> = pool.install(|| {
        quivers
            .par_iter()
            .map(|eq| {
                let poly = build_polygon(&eq.quiver);
                let p = poset_of_quiver(eq);
                let mut failures = Vec::new();
                let objects = enumerate_indecomposables(&p);
                for u in &objects {
                    let r = angle_stability_general(&poly, &p, u);
                    if r.verdict != Verdict::Stable {
                        failures.push(sweep_failure(&p, u, verdict_str(r.verdict)));
                    }
                }
                (eq.quiver.vertex_count(), objects.len(), failures)
            })
            .collect()
    });

    let mut out = String::new();
    let mut all_failures = Vec::new();
    out.push_str("theta sweep\n");
    for size in 1..=max_points {
        let rows: Vec<_> = theta_rows.iter().filter(|r| r.0 == size).collect();
        let type_a = rows.iter().filter(|r| r.1).count();
        let objects: usize = rows.iter().map(|r| r.2).sum();
        let fails: usize = rows.iter().map(|r| r.3.len()).sum();
        writeln!(
            out,
            "  points={size}: posets={} typeA={type_a} objects={objects} failures={fails}",
            rows.len()
        )
        .unwrap();
        all_failures.extend(rows.iter().flat_map(|r| r.3.iter().cloned()));
    }
    out.push_str("angle sweep\n");
    for size in 2..=max_points {
        let rows: Vec<_> = angle_rows.iter().filter(|r| r.0 == size).collect();
        let objects: usize = rows.iter().map(|r| r.1).sum();
        let fails: usize = rows.iter().map(|r| r.2.len()).sum();
        writeln!(
            out,
            "  vertices={size}: quivers={} objects={objects} failures={fails}",
            rows.len()
        )
        .unwrap();
        all_failures.extend(rows.iter().flat_map(|r| r.2.iter().cloned()));
    }
    if all_failures.is_empty() {
        out.push_str("result: pass\n");
        Ok(out)
    } else {
        all_failures.sort();
        for f in &all_failures {
            writeln!(out, "failure: {f}").unwrap();
        }
        out.push_str("result: fail\n");
        Err(CliError::validation(out))
    }
}

fn sweep_failure(p: &Poset, u: &Indecomposable, verdict: &str) -> String {
    let covers: Vec<String> = p
        .covers()
        .iter()
        .map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b)))
        .collect();
    format!(
        "poset[{}] support={} verdict={verdict}",
        covers.join(","),
        set_str(p, &u.support)
    )
}

fn poset_of_input(input: &Input) -> Result<Poset, CliError> {
    let p = match input {
        Input::Poset(p) => p.clone(),
        Input::Quiver(eq) => poset_of_quiver(eq),
    };
    is_type_a(&p).map_err(|v| {
        CliError::validation(format!("poset is not of type A: {}", describe_type_a(&v)))
    })?;
    Ok(p)
}

#[derive(Default)]
struct Tally {
    total: usize,
    stable: usize,
    other: usize,
}

impl Tally {
    fn add(&mut self, verdict: &str) {
        self.total += 1;
        if verdict == "stable" {
            self.stable += 1;
        } else {
            self.other += 1;
        }
    }

    fn line(&self) -> String {
        format!(
            "total: {} objects, {} stable, {} other\n",
            self.total, self.stable, self.other
        )
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Stable => "stable",
        Verdict::Semistable => "semistable",
        Verdict::Unstable => "unstable",
    }
}

fn set_str(p: &Poset, set: &BTreeSet<usize>) -> String {
    let labels: Vec<&str> = set.iter().map(|&i| p.label(i)).collect();
    format!("{{{}}}", labels.join(","))
}

fn tuple_str(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn witness_str(p: &Poset, witnesses: &[Witness]) -> String {
    let parts: Vec<String> = witnesses
        .iter()
        .map(|w| format!("{}={}", set_str(p, &w.support), w.value))
        .collect();
    format!("[{}]", parts.join(", "))
}

fn support_list_str(p: &Poset, supports: &[BTreeSet<usize>]) -> String {
    let parts: Vec<String> = supports.iter().map(|s| set_str(p, s)).collect();
    format!("[{}]", parts.join(", "))
}
