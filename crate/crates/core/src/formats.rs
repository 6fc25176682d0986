//! Line-oriented text formats for graphs, geometries, sets, groups and caps.
//!
//! Every format ignores blank lines and `#` comments and writes LF endings.
//! Writers produce the canonical form, so `write(parse(write(x))) == write(x)`.
//!
//! ```text
//! graph     n=<N>, then one "u v" edge per line with u < v, sorted
//! geometry  points=<N> lines=<M> s=<s> t=<t> mu=<mu|gq|raw>, then one line per line
//! set       one set per line, sorted indices, optional "| sign=<pos|neg> h1=<> h2=<>"
//! group     one generator per line: n space-separated images
//! cap       n=<n> q=<q> k=<k>, then k rows of n+1 field element indices
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactmath::Elem;
use crate::geometry::{Cap, GeometryKind, IncidenceGeometry, ProjectivePoint};
use crate::graphcore::{Graph, Permutation, VertexSet};
use crate::intrigue::{IntrigueCertificate, Sign};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn header<'a>(line: usize, text: &'a str, keys: &[&str]) -> Result<BTreeMap<&'a str, &'a str>> {
    let mut map = BTreeMap::new();
    for tok in text.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| parse_err(line, format!("expected key=value, got '{tok}'")))?;
        if !keys.contains(&k) {
            return Err(parse_err(line, format!("unknown header key '{k}'")));
        }
        if map.insert(k, v).is_some() {
            return Err(parse_err(line, format!("repeated header key '{k}'")));
        }
    }
    for k in keys {
        if !map.contains_key(k) {
            return Err(parse_err(line, format!("missing header key '{k}'")));
        }
    }
    Ok(map)
}

fn number<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| parse_err(line, format!("'{tok}' is not a valid number")))
}

fn numbers<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>> {
    text.split_whitespace().map(|t| number(line, t)).collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_graph(text: &str, label: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, h) = lines.next().ok_or_else(|| parse_err(0, "empty graph file"))?;
    let n: usize = number(hl, header(hl, h, &["n"])?["n"])?;
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let e: Vec<usize> = numbers(ln, l)?;
        match e[..] {
            [u, v] if u < v && v < n => edges.push((u, v)),
            _ => return Err(parse_err(ln, format!("bad edge '{l}' for n={n}"))),
        }
    }
    Graph::from_edges(n, label, edges)
}

pub fn write_geometry(geo: &IncidenceGeometry) -> String {
    let mu = match geo.kind() {
        GeometryKind::Gq => "gq".to_string(),
        GeometryKind::Pq { mu } => mu.to_string(),
        GeometryKind::Raw => "raw".to_string(),
    };
    let mut out = format!(
        "points={} lines={} s={} t={} mu={mu}\n",
        geo.point_count(),
        geo.lines().len(),
        geo.s(),
        geo.t()
    );
    for l in geo.lines() {
        writeln!(out, "{}", join(l)).unwrap();
    }
    out
}

/// Parses and verifies the axioms named by the `mu` field.
pub fn parse_geometry(text: &str, name: &str) -> Result<IncidenceGeometry> {
    let mut lines = content_lines(text);
    let (hl, h) = lines.next().ok_or_else(|| parse_err(0, "empty geometry file"))?;
    let map = header(hl, h, &["points", "lines", "s", "t", "mu"])?;
    let points: usize = number(hl, map["points"])?;
    let count: usize = number(hl, map["lines"])?;
    let s: usize = number(hl, map["s"])?;
    let t: usize = number(hl, map["t"])?;
    let kind = match map["mu"] {
        "gq" => GeometryKind::Gq,
        "raw" => GeometryKind::Raw,
        m => GeometryKind::Pq { mu: number(hl, m)? },
    };
    let body: Vec<Vec<usize>> = lines.map(|(ln, l)| numbers(ln, l)).collect::<Result<_>>()?;
    if body.len() != count {
        return Err(parse_err(hl, format!("header says {count} lines, found {}", body.len())));
    }
    IncidenceGeometry::new(name, points, body, s, t, kind)
}

/// One line of a set file.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SetRecord {
    pub indices: Vec<usize>,
    pub annotation: Option<(Sign, usize, usize)>,
}

impl SetRecord {
    pub fn new(set: &VertexSet, cert: Option<&IntrigueCertificate>) -> Self {
        SetRecord { indices: set.indices(), annotation: cert.map(|c| (c.sign, c.h1, c.h2)) }
    }

    pub fn to_vertex_set(&self, n: usize) -> Result<VertexSet> {
        if let Some(&bad) = self.indices.iter().find(|&&i| i >= n) {
            return Err(Error::Precondition(format!("index {bad} out of range for {n} vertices")));
        }
        Ok(VertexSet::from_bits(crate::bitset::BitSet::from_indices(n, self.indices.iter().copied()), ""))
    }
}

/// Writes records sorted lexicographically by their indices.
pub fn write_sets(records: &[SetRecord]) -> String {
    let mut sorted = records.to_vec();
    sorted.sort();
    let mut out = String::new();
    for r in &sorted {
        out.push_str(&join(&r.indices));
        if let Some((sign, h1, h2)) = r.annotation {
            write!(out, " | sign={} h1={h1} h2={h2}", sign.short()).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_sets(text: &str) -> Result<Vec<SetRecord>> {
    content_lines(text)
        .map(|(ln, l)| {
            let (body, ann) = match l.split_once('|') {
                Some((b, a)) => (b, Some(a)),
                None => (l, None),
            };
            let indices: Vec<usize> = numbers(ln, body)?;
            if indices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(parse_err(ln, "set indices must be strictly increasing"));
            }
            let annotation = match ann {
                None => None,
                Some(a) => {
                    let m = header(ln, a, &["sign", "h1", "h2"])?;
                    let sign: Sign = m["sign"].parse().map_err(|_| parse_err(ln, "sign must be pos or neg"))?;
                    Some((sign, number(ln, m["h1"])?, number(ln, m["h2"])?))
                }
            };
            Ok(SetRecord { indices, annotation })
        })
        .collect()
}

pub fn write_group(gens: &[Permutation]) -> String {
    gens.iter().map(|g| format!("{}\n", join(g.image()))).collect()
}

pub fn parse_group(text: &str) -> Result<Vec<Permutation>> {
    let gens: Vec<Permutation> = content_lines(text)
        .map(|(ln, l)| Permutation::new(numbers(ln, l)?).map_err(|e| parse_err(ln, e.to_string())))
        .collect::<Result<_>>()?;
    if gens.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err(parse_err(0, "generators act on different numbers of points"));
    }
    Ok(gens)
}

pub fn write_cap(cap: &Cap) -> String {
    let mut out = format!("n={} q={} k={}\n", cap.dimension(), cap.q(), cap.len());
    for p in cap.points() {
        writeln!(out, "{}", join(&p.coords)).unwrap();
    }
    out
}

/// Parses and validates a cap (no three points collinear).
pub fn parse_cap(text: &str) -> Result<Cap> {
    let mut lines = content_lines(text);
    let (hl, h) = lines.next().ok_or_else(|| parse_err(0, "empty cap file"))?;
    let map = header(hl, h, &["n", "q", "k"])?;
    let n: usize = number(hl, map["n"])?;
    let q: u32 = number(hl, map["q"])?;
    let k: usize = number(hl, map["k"])?;
    let mut points = Vec::with_capacity(k);
    for (ln, l) in lines {
        let coords: Vec<Elem> = numbers(ln, l)?;
        if coords.len() != n + 1 || coords.iter().any(|&c| c as u32 >= q) {
            return Err(parse_err(ln, format!("row '{l}' is not a point of PG({n},{q})")));
        }
        points.push(ProjectivePoint { coords });
    }
    if points.len() != k {
        return Err(parse_err(hl, format!("header says k={k}, found {} rows", points.len())));
    }
    Cap::new(n, q, points)
}
