//! Text input files: posets and extended quivers.
//!
//! A poset file lists `point <label>` lines followed by `cover <a> <b>`
//! lines read as "b covers a". A quiver file opens with `quiver <n>`, then
//! `arrow <i> <j>` lines with |i-j| = 1, then `alien <s> <t>` lines.
//! `#` starts a comment; blank lines are skipped. The first directive picks
//! the format.

use std::collections::BTreeSet;

use spr_core::{validate_alien_set, ExtendedQuiver, Poset, PosetError, QuiverA};

use crate::{describe_alien, CliError};

pub enum Input {
    Poset(Poset),
    Quiver(ExtendedQuiver),
}

pub fn parse_input(text: &str) -> Result<Input, CliError> {
    let mut lines: Vec<(usize, Vec<&str>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if !tokens.is_empty() {
            lines.push((idx + 1, tokens));
        }
    }
    match lines.first() {
        None => Err(CliError::parse(1, "empty input")),
        Some((_, t)) if t[0] == "point" => parse_poset(&lines).map(Input::Poset),
        Some((_, t)) if t[0] == "quiver" => parse_quiver(&lines).map(Input::Quiver),
        Some((no, t)) => Err(CliError::parse(
            *no,
            format!("expected `point` or `quiver`, found `{}`", t[0]),
        )),
    }
}

fn parse_poset(lines: &[(usize, Vec<&str>)]) -> Result<Poset, CliError> {
    let mut points: Vec<&str> = Vec::new();
    let mut known: BTreeSet<&str> = BTreeSet::new();
    let mut covers: Vec<(&str, &str)> = Vec::new();
    for (no, tokens) in lines {
        match tokens[0] {
            "point" => {
                if !covers.is_empty() {
                    return Err(CliError::parse(*no, "point line after cover lines"));
                }
                if tokens.len() != 2 {
                    return Err(CliError::parse(*no, "point takes exactly one label"));
                }
                if !known.insert(tokens[1]) {
                    return Err(CliError::parse(
                        *no,
                        format!("duplicate point {}", tokens[1]),
                    ));
                }
                points.push(tokens[1]);
            }
            "cover" => {
                if tokens.len() != 3 {
                    return Err(CliError::parse(*no, "cover takes exactly two labels"));
                }
                for label in &tokens[1..] {
                    if !known.contains(label) {
                        return Err(CliError::parse(*no, format!("unknown point {label}")));
                    }
                }
                covers.push((tokens[1], tokens[2]));
            }
            other => return Err(CliError::parse(*no, format!("unknown directive `{other}`"))),
        }
    }
    Poset::new(&points, &covers).map_err(|e| match e {
        PosetError::CycleDetected { .. } => CliError::validation(e.to_string()),
        other => CliError::validation(other.to_string()),
    })
}

fn parse_quiver(lines: &[(usize, Vec<&str>)]) -> Result<ExtendedQuiver, CliError> {
    let (head_no, head) = &lines[0];
    if head.len() != 2 {
        return Err(CliError::parse(
            *head_no,
            "quiver takes exactly one vertex count",
        ));
    }
    let n = parse_number(head[1], *head_no)?;
    if n < 2 {
        return Err(CliError::parse(
            *head_no,
            "a quiver needs at least 2 vertices",
        ));
    }
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    let mut aliens: Vec<(usize, usize)> = Vec::new();
    for (no, tokens) in &lines[1..] {
        match tokens[0] {
            "quiver" => return Err(CliError::parse(*no, "repeated quiver line")),
            "arrow" => {
                if !aliens.is_empty() {
                    return Err(CliError::parse(*no, "arrow line after alien lines"));
                }
                let (i, j) = parse_pair(tokens, *no, n)?;
                if i.abs_diff(j) != 1 {
                    return Err(CliError::parse(
                        *no,
                        format!("arrow {i} {j} does not join neighbors"),
                    ));
                }
                arrows.push((i, j));
            }
            "alien" => {
                let (s, t) = parse_pair(tokens, *no, n)?;
                if s == t {
                    return Err(CliError::parse(*no, format!("alien {s} {t} is a loop")));
                }
                aliens.push((s, t));
            }
            other => return Err(CliError::parse(*no, format!("unknown directive `{other}`"))),
        }
    }
    let quiver =
        QuiverA::from_arrows(n, &arrows).map_err(|e| CliError::parse(*head_no, e.to_string()))?;
    let violations = validate_alien_set(&quiver, &aliens);
    if !violations.is_empty() {
        let text: Vec<String> = violations.iter().map(describe_alien).collect();
        return Err(CliError::validation(format!(
            "alien set invalid: {}",
            text.join("; ")
        )));
    }
    Ok(ExtendedQuiver { quiver, aliens })
}

fn parse_pair(tokens: &[&str], no: usize, n: usize) -> Result<(usize, usize), CliError> {
    if tokens.len() != 3 {
        return Err(CliError::parse(
            no,
            format!("{} takes exactly two vertices", tokens[0]),
        ));
    }
    let a = parse_number(tokens[1], no)?;
    let b = parse_number(tokens[2], no)?;
    for v in [a, b] {
        if v < 1 || v > n {
            return Err(CliError::parse(
                no,
                format!("vertex {v} out of range 1..={n}"),
            ));
        }
    }
    Ok((a, b))
}

fn parse_number(token: &str, no: usize) -> Result<usize, CliError> {
    token
        .parse()
        .map_err(|_| CliError::parse(no, format!("expected a number, found `{token}`")))
}
