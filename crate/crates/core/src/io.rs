//! Group file formats.
//!
//! Generator files: first line is the degree, every further nonempty line is
//! one generator in zero-based cycle notation such as `(0 1)(2 3)`.
//! Cayley-table files: first line is `n`, then `n` rows of `n`
//! whitespace-separated indices. In both formats lines starting with `#` are
//! comments.

use std::fs;
use std::path::Path;

use crate::group::Permutation;
use crate::{Error, Group, Limits, Result};

/// Parsed generator file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(path: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        line,
        message: message.into(),
    }
}

fn parse_header(path: &str, lines: &mut dyn Iterator<Item = (usize, &str)>) -> Result<usize> {
    let (line, text) = lines.next().ok_or_else(|| parse_err(path, 1, "empty file"))?;
    text.parse()
        .map_err(|_| parse_err(path, line, format!("expected a size, found {text:?}")))
}

/// Parses one permutation in cycle notation, e.g. `(0 1 2)(3 4)`; `()` is the identity.
pub fn parse_cycles(degree: usize, text: &str) -> std::result::Result<Permutation, String> {
    let mut perm: Permutation = (0..degree).collect();
    let mut moved = vec![false; degree];
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err("empty generator".into());
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected '(' at {rest:?}"))?;
        let close = body.find(')').ok_or("unbalanced cycle: missing ')'")?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err("unbalanced cycle: nested '('".into());
        }
        let points = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| format!("bad point {s:?}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        for (k, &x) in points.iter().enumerate() {
            if x >= degree {
                return Err(format!("point {x} out of range 0..{degree}"));
            }
            if std::mem::replace(&mut moved[x], true) {
                return Err(format!("point {x} appears in more than one cycle position"));
            }
            perm[x] = points[(k + 1) % points.len()];
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(perm)
}

pub fn parse_generator_file(path: &str, text: &str) -> Result<GeneratorFile> {
    let mut lines = content_lines(text);
    let degree = parse_header(path, &mut lines)?;
    let generators = lines
        .map(|(line, l)| parse_cycles(degree, l).map_err(|m| parse_err(path, line, m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorFile { degree, generators })
}

pub fn parse_cayley_file(path: &str, text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = content_lines(text);
    let n = parse_header(path, &mut lines)?;
    let mut rows = Vec::with_capacity(n);
    for (line, l) in lines {
        let row = l
            .split_whitespace()
            .map(|s| s.parse::<usize>().map_err(|_| parse_err(path, line, format!("bad entry {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_err(path, line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_err(path, 1, format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(rows)
}

/// Reads a generator file or a Cayley-table file and builds the group.
///
/// The format is chosen by content: any body line containing `(` means
/// generators, numeric rows mean a table, and a header alone means the
/// trivial permutation group. The label is `user:<file name>`.
pub fn load_group_file(path: &Path, limits: &Limits) -> Result<Group> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let shown = path.display().to_string();
    let name = path
        .file_name()
        .map_or_else(|| shown.clone(), |n| n.to_string_lossy().into_owned());
    let body_is_table = {
        let mut lines = content_lines(&text).skip(1).peekable();
        lines.peek().is_some() && lines.all(|(_, l)| !l.contains('('))
    };
    let group = if body_is_table {
        Group::from_cayley_table(&parse_cayley_file(&shown, &text)?, limits)?
    } else {
        let gens = parse_generator_file(&shown, &text)?;
        Group::from_permutation_generators(gens.degree, &gens.generators, limits)?
    };
    Ok(group.with_label(format!("user:{name}")))
}
