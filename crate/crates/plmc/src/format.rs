//! Line-oriented text formats for graphs and cuts.
//!
//! ```text
//! # plmc-graph n=4
//! 0 1 1
//! 1 2 3
//! 3 3 1
//! ```
//!
//! Each edge line is `u v mult` with 0-based ids and `u ≤ v`; `u = v` is a
//! self-loop. A cut file is `# plmc-cut n=<int>` followed by one line of `n`
//! characters from `{0, 1}`.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use plmc_core::{Cut, Multigraph};

const GRAPH_TAG: &str = "plmc-graph";
const CUT_TAG: &str = "plmc-cut";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: duplicate edge {u} {v} (first given on line {first})")]
    Duplicate {
        line: usize,
        first: usize,
        u: usize,
        v: usize,
    },
    #[error(transparent)]
    Graph(#[from] plmc_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Lines with their 1-based numbers, blank lines dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    tag: &str,
) -> Result<usize, FormatError> {
    let (no, line) = lines
        .next()
        .ok_or_else(|| parse_err(1, format!("missing `# {tag} n=<int>` header")))?;
    let rest = line
        .strip_prefix('#')
        .map(str::trim_start)
        .and_then(|l| l.strip_prefix(tag))
        .ok_or_else(|| parse_err(no, format!("expected `# {tag} n=<int>`, found `{line}`")))?;
    let n = rest
        .trim()
        .strip_prefix("n=")
        .ok_or_else(|| parse_err(no, "header lacks `n=<int>`"))?;
    n.parse()
        .map_err(|_| parse_err(no, format!("bad vertex count `{n}`")))
}

/// Parses a graph file. With `strict`, a vertex pair listed twice is an
/// error; otherwise multiplicities of repeated pairs add up.
pub fn parse_graph(text: &str, strict: bool) -> Result<Multigraph, FormatError> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, GRAPH_TAG)?;
    let mut edges = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    for (no, line) in lines {
        if line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(parse_err(no, format!("expected `u v mult`, found `{line}`")));
        }
        let num = |s: &str, what: &str| -> Result<u64, FormatError> {
            s.parse()
                .map_err(|_| parse_err(no, format!("{what} `{s}` is not a non-negative integer")))
        };
        let u = num(fields[0], "vertex")? as usize;
        let v = num(fields[1], "vertex")? as usize;
        let mult = num(fields[2], "multiplicity")?;
        if u >= n || v >= n {
            return Err(parse_err(no, format!("vertex out of range for n={n}")));
        }
        if mult == 0 {
            return Err(parse_err(no, "multiplicity must be positive"));
        }
        if u > v && strict {
            return Err(parse_err(no, format!("edge `{u} {v}` is not in u <= v order")));
        }
        let key = (u.min(v), u.max(v));
        if let Some(&first) = seen.get(&key) {
            if strict {
                return Err(FormatError::Duplicate {
                    line: no,
                    first,
                    u: key.0,
                    v: key.1,
                });
            }
        } else {
            seen.insert(key, no);
        }
        edges.push((key.0, key.1, mult));
    }
    Ok(Multigraph::from_edges(n, edges)?)
}

pub fn render_graph(g: &Multigraph) -> String {
    let mut out = format!("# {GRAPH_TAG} n={}\n", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.mult));
    }
    out
}

pub fn parse_cut(text: &str) -> Result<Cut, FormatError> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, CUT_TAG)?;
    let (no, bits) = match lines.next() {
        Some(l) => l,
        None if n == 0 => return Ok(Cut::new(0)),
        None => return Err(parse_err(2, "missing side line")),
    };
    if bits.len() != n {
        return Err(parse_err(no, format!("expected {n} sides, found {}", bits.len())));
    }
    let sides = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(parse_err(no, format!("side `{other}` is not 0 or 1"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_err(extra, "unexpected content after the side line"));
    }
    Ok(Cut::from_sides(sides))
}

pub fn render_cut(c: &Cut) -> String {
    format!("# {CUT_TAG} n={}\n{}\n", c.len(), c.to_bit_string())
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), FormatError> {
    fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_graph(path: &Path, strict: bool) -> Result<Multigraph, FormatError> {
    parse_graph(&read(path)?, strict)
}

pub fn write_graph(path: &Path, g: &Multigraph) -> Result<(), FormatError> {
    write_text(path, &render_graph(g))
}

pub fn read_cut(path: &Path) -> Result<Cut, FormatError> {
    parse_cut(&read(path)?)
}

pub fn write_cut(path: &Path, c: &Cut) -> Result<(), FormatError> {
    write_text(path, &render_cut(c))
}
