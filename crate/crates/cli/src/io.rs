//! File formats: edge lists, rectangular cell lists, prescribed values, and
//! full metrics. All indices are 1-based; `#` starts a comment; blank lines
//! are skipped. Every diagnostic names the file and line.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use trailrank::linalg::Rational;
use trailrank::trees::all_pairs;

use crate::CliError;

/// Prescribed rational values keyed by normalized pair.
pub type ValueList = Vec<((usize, usize), Rational)>;

fn input(msg: String) -> CliError {
    CliError::Input(msg)
}

fn read_lines(path: &Path) -> Result<Vec<(usize, String)>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| input(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if !line.is_empty() {
            out.push((idx + 1, line.to_string()));
        }
    }
    Ok(out)
}

fn parse_index(
    path: &Path,
    lineno: usize,
    token: &str,
    what: &str,
    max: usize,
) -> Result<usize, CliError> {
    let v: usize = token.parse().map_err(|_| {
        input(format!(
            "{}:{lineno}: expected a positive integer {what}, got `{token}`",
            path.display()
        ))
    })?;
    if v < 1 || v > max {
        return Err(input(format!(
            "{}:{lineno}: {what} {v} out of range 1..={max}",
            path.display()
        )));
    }
    Ok(v)
}

/// One `i j` pair per line over vertex set `[n]`, rejecting loops and
/// duplicates (orientation-insensitive).
pub fn parse_edge_file(path: &Path, n: usize) -> Result<Vec<(usize, usize)>, CliError> {
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (lineno, line) in read_lines(path)? {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(input(format!(
                "{}:{lineno}: expected `i j`, got {} tokens",
                path.display(),
                tokens.len()
            )));
        }
        let i = parse_index(path, lineno, tokens[0], "vertex", n)?;
        let j = parse_index(path, lineno, tokens[1], "vertex", n)?;
        if i == j {
            return Err(input(format!(
                "{}:{lineno}: loop edge ({i}, {j}) is not allowed",
                path.display()
            )));
        }
        let key = (i.min(j), i.max(j));
        if !seen.insert(key) {
            return Err(input(format!(
                "{}:{lineno}: duplicate edge ({}, {})",
                path.display(),
                key.0,
                key.1
            )));
        }
        edges.push(key);
    }
    Ok(edges)
}

/// One `i j` cell per line with row `i` in `[m]` and column `j` in `[n]`.
pub fn parse_cell_file(path: &Path, m: usize, n: usize) -> Result<Vec<(usize, usize)>, CliError> {
    let mut cells = Vec::new();
    let mut seen = BTreeSet::new();
    for (lineno, line) in read_lines(path)? {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(input(format!(
                "{}:{lineno}: expected `i j`, got {} tokens",
                path.display(),
                tokens.len()
            )));
        }
        let i = parse_index(path, lineno, tokens[0], "row index", m)?;
        let j = parse_index(path, lineno, tokens[1], "column index", n)?;
        if !seen.insert((i, j)) {
            return Err(input(format!(
                "{}:{lineno}: duplicate cell ({i}, {j})",
                path.display()
            )));
        }
        cells.push((i, j));
    }
    Ok(cells)
}

fn parse_rational(path: &Path, lineno: usize, token: &str) -> Result<Rational, CliError> {
    token.parse().map_err(|_| {
        input(format!(
            "{}:{lineno}: expected a rational `p` or `p/q`, got `{token}`",
            path.display()
        ))
    })
}

/// One `i j p/q` line per prescribed value on pairs of `[n]`.
pub fn parse_values_file(path: &Path, n: usize) -> Result<ValueList, CliError> {
    let mut values = Vec::new();
    let mut seen = BTreeSet::new();
    for (lineno, line) in read_lines(path)? {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(input(format!(
                "{}:{lineno}: expected `i j p/q`, got {} tokens",
                path.display(),
                tokens.len()
            )));
        }
        let i = parse_index(path, lineno, tokens[0], "leaf", n)?;
        let j = parse_index(path, lineno, tokens[1], "leaf", n)?;
        if i == j {
            return Err(input(format!(
                "{}:{lineno}: pair ({i}, {j}) has equal endpoints",
                path.display()
            )));
        }
        let key = (i.min(j), i.max(j));
        if !seen.insert(key) {
            return Err(input(format!(
                "{}:{lineno}: duplicate pair ({}, {})",
                path.display(),
                key.0,
                key.1
            )));
        }
        let v = parse_rational(path, lineno, tokens[2])?;
        values.push((key, v));
    }
    Ok(values)
}

/// Header line `n`, then `i j p/q` for every one of the C(n, 2) pairs.
pub fn parse_metric_file(path: &Path) -> Result<(usize, ValueList), CliError> {
    let lines = read_lines(path)?;
    let Some(&(header_lineno, ref header)) = lines.first() else {
        return Err(input(format!("{}: empty metric file", path.display())));
    };
    let n: usize = header.parse().map_err(|_| {
        input(format!(
            "{}:{header_lineno}: expected header `n`, got `{header}`",
            path.display()
        ))
    })?;
    if n < 3 {
        return Err(input(format!(
            "{}:{header_lineno}: a metric needs at least 3 points, got n = {n}",
            path.display()
        )));
    }
    let mut values = Vec::new();
    let mut seen = BTreeSet::new();
    for (lineno, line) in &lines[1..] {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(input(format!(
                "{}:{lineno}: expected `i j p/q`, got {} tokens",
                path.display(),
                tokens.len()
            )));
        }
        let i = parse_index(path, *lineno, tokens[0], "point", n)?;
        let j = parse_index(path, *lineno, tokens[1], "point", n)?;
        if i == j {
            return Err(input(format!(
                "{}:{lineno}: pair ({i}, {j}) has equal endpoints",
                path.display()
            )));
        }
        let key = (i.min(j), i.max(j));
        if !seen.insert(key) {
            return Err(input(format!(
                "{}:{lineno}: duplicate pair ({}, {})",
                path.display(),
                key.0,
                key.1
            )));
        }
        values.push((key, parse_rational(path, *lineno, tokens[2])?));
    }
    if let Some(missing) = all_pairs(n).into_iter().find(|p| !seen.contains(p)) {
        return Err(input(format!(
            "{}: missing entry for pair ({}, {})",
            path.display(),
            missing.0,
            missing.1
        )));
    }
    Ok((n, values))
}

/// Comma-separated permutation, e.g. `--order 2,1,3`.
pub fn parse_order(arg: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let mut order = Vec::new();
    for token in arg.split(',') {
        let token = token.trim();
        let v: usize = token.parse().map_err(|_| {
            input(format!("--order: expected a vertex label, got `{token}`"))
        })?;
        order.push(v);
    }
    if order.len() != n {
        return Err(input(format!(
            "--order lists {} vertices but n = {n}",
            order.len()
        )));
    }
    Ok(order)
}
