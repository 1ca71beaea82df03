//! Plain-text formats for filtered hypergraphs, morphisms and evolution logs.
//!
//! Hypergraph file, one record per line:
//!
//! ```text
//! # comment
//! vertices: a b c        (optional; fixes the vertex order)
//! 0.5 : a b              (weight, then the vertices of one hyperedge)
//! : c                    (missing weight means 0)
//! ```
//!
//! Without a `vertices:` line the order of first appearance is the vertex
//! order. Morphism files hold `v -> w` lines. An evolution log is a directory
//! of `<timestamp>.hg` hypergraph files.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::hypercore::{
    FilteredHypergraph, Hyperedge, Hypergraph, HypergraphError, HypergraphMorphism,
};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl IoError {
    pub fn is_parse(&self) -> bool {
        matches!(self, IoError::Parse { .. })
    }
}

fn parse_err(source_name: &str, line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        source_name: source_name.to_string(),
        line,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.contains([':', '#']) && s != "->" && !s.chars().any(char::is_whitespace)
}

/// Parses a hypergraph file; `source_name` is used in error messages.
pub fn parse_hypergraph(text: &str, source_name: &str) -> Result<FilteredHypergraph, IoError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut declared = false;
    let mut records: Vec<(usize, Vec<usize>, f64)> = Vec::new();
    let mut seen_record = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if declared || seen_record {
                return Err(parse_err(
                    source_name,
                    line_no,
                    "the vertex declaration must come first and only once",
                ));
            }
            declared = true;
            for name in rest.split_whitespace() {
                if !valid_label(name) {
                    return Err(parse_err(source_name, line_no, format!("invalid vertex label `{name}`")));
                }
                if index.insert(name.to_string(), vertices.len()).is_some() {
                    return Err(parse_err(source_name, line_no, format!("duplicate vertex `{name}`")));
                }
                vertices.push(name.to_string());
            }
            continue;
        }
        seen_record = true;
        let (weight, names) = match line.split_once(':') {
            Some((w, rest)) => {
                let w = w.trim();
                let weight = if w.is_empty() {
                    0.0
                } else {
                    w.parse::<f64>()
                        .map_err(|_| parse_err(source_name, line_no, format!("invalid weight `{w}`")))?
                };
                if !weight.is_finite() {
                    return Err(parse_err(source_name, line_no, format!("weight `{w}` is not finite")));
                }
                (weight, rest)
            }
            None => (0.0, line),
        };
        let mut edge = Vec::new();
        for name in names.split_whitespace() {
            if !valid_label(name) {
                return Err(parse_err(source_name, line_no, format!("invalid vertex label `{name}`")));
            }
            let v = match index.get(name) {
                Some(&v) => v,
                None if declared => {
                    return Err(parse_err(source_name, line_no, format!("undeclared vertex `{name}`")));
                }
                None => {
                    index.insert(name.to_string(), vertices.len());
                    vertices.push(name.to_string());
                    vertices.len() - 1
                }
            };
            edge.push(v);
        }
        if edge.is_empty() {
            return Err(parse_err(source_name, line_no, "hyperedge has no vertices"));
        }
        records.push((line_no, edge, weight));
    }

    let mut weights = BTreeMap::new();
    let mut edges = Vec::with_capacity(records.len());
    for (line_no, edge, weight) in records {
        let e = Hyperedge::new(edge).expect("nonempty");
        if weights.insert(e.clone(), weight).is_some() {
            return Err(parse_err(
                source_name,
                line_no,
                format!("duplicate hyperedge {}", format_edge(&vertices, &e)),
            ));
        }
        edges.push(e);
    }
    let base = Hypergraph::new(vertices, edges).map_err(|e| IoError::Invalid(e.to_string()))?;
    FilteredHypergraph::new(base, weights).map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn read_hypergraph(path: &Path) -> Result<FilteredHypergraph, IoError> {
    parse_hypergraph(&read(path)?, &path.display().to_string())
}

fn format_edge(vertices: &[String], e: &Hyperedge) -> String {
    let names: Vec<&str> = e.vertices().iter().map(|&v| vertices[v].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

/// Vertex labels of a hyperedge, space separated.
pub fn edge_labels(h: &Hypergraph, e: &Hyperedge) -> String {
    let names: Vec<&str> = e.vertices().iter().map(|&v| h.vertices()[v].as_str()).collect();
    names.join(" ")
}

/// Canonical text: the vertex declaration, then hyperedges in lexicographic order.
pub fn emit_hypergraph(f: &FilteredHypergraph) -> String {
    let mut out = String::new();
    let h = f.base();
    if !h.vertices().is_empty() {
        let _ = writeln!(out, "vertices: {}", h.vertices().join(" "));
    }
    for (e, w) in f.weights() {
        let _ = writeln!(out, "{} : {}", format_real(*w), edge_labels(h, e));
    }
    out
}

/// Shortest round-tripping decimal, with `inf` for `+∞`.
pub fn format_real(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".to_string()
    } else if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{x}")
    }
}

/// Parses `v -> w` lines into a vertex map from `domain` to `codomain`.
pub fn parse_morphism(
    text: &str,
    source_name: &str,
    domain: &Hypergraph,
    codomain: &Hypergraph,
) -> Result<HypergraphMorphism, IoError> {
    let mut map: Vec<Option<usize>> = vec![None; domain.vertices().len()];
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let (a, b) = line
            .split_once("->")
            .ok_or_else(|| parse_err(source_name, line_no, "expected `vertex -> vertex`"))?;
        let (a, b) = (a.trim(), b.trim());
        if !valid_label(a) || !valid_label(b) {
            return Err(parse_err(source_name, line_no, "expected `vertex -> vertex`"));
        }
        let v = domain
            .vertex_index(a)
            .ok_or_else(|| IoError::Invalid(format!("{source_name}:{line_no}: `{a}` is not a domain vertex")))?;
        let w = codomain
            .vertex_index(b)
            .ok_or_else(|| IoError::Invalid(format!("{source_name}:{line_no}: `{b}` is not a codomain vertex")))?;
        if map[v].replace(w).is_some_and(|old| old != w) {
            return Err(IoError::Invalid(format!(
                "{source_name}:{line_no}: vertex `{a}` is mapped twice"
            )));
        }
    }
    let vertex_map = map
        .iter()
        .enumerate()
        .map(|(v, w)| {
            w.ok_or_else(|| {
                IoError::Invalid(format!(
                    "{source_name}: vertex `{}` has no image",
                    domain.vertices()[v]
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    HypergraphMorphism::new(domain.clone(), codomain.clone(), vertex_map)
        .map_err(|e| IoError::Invalid(format!("{source_name}: {e}")))
}

pub fn read_morphism(path: &Path, domain: &Hypergraph, codomain: &Hypergraph) -> Result<HypergraphMorphism, IoError> {
    parse_morphism(&read(path)?, &path.display().to_string(), domain, codomain)
}

pub fn emit_morphism(phi: &HypergraphMorphism) -> String {
    let mut out = String::new();
    for (v, &w) in phi.vertex_map().iter().enumerate() {
        let _ = writeln!(
            out,
            "{} -> {}",
            phi.domain().vertices()[v],
            phi.codomain().vertices()[w]
        );
    }
    out
}

/// Time-ordered snapshots of a growing hypergraph.
#[derive(Clone, Debug)]
pub struct EvolutionLog {
    snapshots: Vec<(String, FilteredHypergraph)>,
}

impl EvolutionLog {
    /// Orders snapshots by timestamp (numerically when every timestamp is a
    /// number) and checks that vertices and hyperedges are never removed.
    pub fn new(mut snapshots: Vec<(String, FilteredHypergraph)>) -> Result<Self, IoError> {
        let numeric: Option<Vec<f64>> = snapshots.iter().map(|(t, _)| t.parse::<f64>().ok()).collect();
        match numeric {
            Some(_) => snapshots.sort_by(|a, b| {
                let (x, y) = (a.0.parse::<f64>().unwrap(), b.0.parse::<f64>().unwrap());
                x.total_cmp(&y).then_with(|| a.0.cmp(&b.0))
            }),
            None => snapshots.sort_by(|a, b| a.0.cmp(&b.0)),
        }
        let log = EvolutionLog { snapshots };
        for k in 0..log.snapshots.len().saturating_sub(1) {
            log.inclusion(k)?;
        }
        Ok(log)
    }

    pub fn read_dir(dir: &Path) -> Result<Self, IoError> {
        let entries = fs::read_dir(dir).map_err(|source| IoError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        let mut snapshots = Vec::new();
        for entry in entries {
            let path = entry
                .map_err(|source| IoError::Io {
                    path: dir.to_path_buf(),
                    source,
                })?
                .path();
            if path.extension().and_then(|e| e.to_str()) != Some("hg") {
                continue;
            }
            let stamp = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or_default()
                .to_string();
            snapshots.push((stamp, read_hypergraph(&path)?));
        }
        Self::new(snapshots)
    }

    pub fn snapshots(&self) -> &[(String, FilteredHypergraph)] {
        &self.snapshots
    }

    pub fn len(&self) -> usize {
        self.snapshots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snapshots.is_empty()
    }

    /// The vertex-identity inclusion of snapshot `k` into snapshot `k + 1`.
    pub fn inclusion(&self, k: usize) -> Result<HypergraphMorphism, IoError> {
        let (t0, a) = &self.snapshots[k];
        let (t1, b) = &self.snapshots[k + 1];
        let (ha, hb) = (a.base(), b.base());
        let vertex_map = ha
            .vertices()
            .iter()
            .map(|v| {
                hb.vertex_index(v).ok_or_else(|| {
                    IoError::Invalid(format!("vertex `{v}` of snapshot {t0} is missing from snapshot {t1}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        HypergraphMorphism::new(ha.clone(), hb.clone(), vertex_map).map_err(|e| match e {
            crate::hypercore::MorphismViolation::ImageNotHyperedge { hyperedge, .. } => IoError::Invalid(format!(
                "hyperedge {} of snapshot {t0} is missing from snapshot {t1}",
                format_edge(ha.vertices(), &hyperedge)
            )),
            other => IoError::Invalid(other.to_string()),
        })
    }
}

impl From<HypergraphError> for IoError {
    fn from(e: HypergraphError) -> Self {
        IoError::Invalid(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_weights_comments_and_defaults() {
        let text = "# triangle\n1.5 : a b\n: b c  # no weight\nc a\n";
        let f = parse_hypergraph(text, "t").unwrap();
        assert_eq!(f.base().vertices(), &["a", "b", "c"]);
        assert_eq!(f.critical_values(), vec![0.0, 1.5]);
        assert_eq!(f.base().len(), 3);
    }

    #[test]
    fn declared_order_wins() {
        let f = parse_hypergraph("vertices: z y\n2 : y z\n", "t").unwrap();
        assert_eq!(f.base().vertices(), &["z", "y"]);
        let err = parse_hypergraph("vertices: z\n1 : q\n", "t").unwrap_err();
        assert!(err.is_parse());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_hypergraph("1 : a\nx : b\n", "f.hg").unwrap_err();
        assert_eq!(err.to_string(), "f.hg:2: invalid weight `x`");
        let err = parse_hypergraph("1 : a b\n2 : b a\n", "f.hg").unwrap_err();
        assert!(err.to_string().starts_with("f.hg:2: duplicate hyperedge"));
        assert!(parse_hypergraph("1 :\n", "f").unwrap_err().is_parse());
    }

    #[test]
    fn round_trip() {
        let text = "vertices: p q r\n0.25 : p q\n-1 : r\n3 : p q r\n";
        let f = parse_hypergraph(text, "t").unwrap();
        let again = parse_hypergraph(&emit_hypergraph(&f), "t").unwrap();
        assert_eq!(again, f);
        assert_eq!(emit_hypergraph(&again), emit_hypergraph(&f));
    }

    #[test]
    fn empty_file() {
        let f = parse_hypergraph("# nothing\n", "t").unwrap();
        assert!(f.base().is_empty());
        assert!(f.critical_values().is_empty());
    }

    #[test]
    fn morphism_parsing() {
        let a = parse_hypergraph("0 : x y\n", "a").unwrap();
        let b = parse_hypergraph("0 : u\n", "b").unwrap();
        let phi = parse_morphism("x -> u\ny -> u\n", "m", a.base(), b.base()).unwrap();
        assert_eq!(phi.vertex_map(), &[0, 0]);
        assert!(parse_morphism("x -> u\n", "m", a.base(), b.base()).is_err());
        assert!(parse_morphism("x => u\n", "m", a.base(), b.base()).unwrap_err().is_parse());
        let round = parse_morphism(&emit_morphism(&phi), "m", a.base(), b.base()).unwrap();
        assert_eq!(round, phi);
    }

    #[test]
    fn evolution_order_and_monotonicity() {
        let s1 = parse_hypergraph("0 : u\n", "a").unwrap();
        let s2 = parse_hypergraph("0 : u\n0 : u v\n", "b").unwrap();
        let log = EvolutionLog::new(vec![("10".into(), s2.clone()), ("9".into(), s1.clone())]).unwrap();
        assert_eq!(log.snapshots()[0].0, "9");
        assert!(EvolutionLog::new(vec![("1".into(), s2), ("2".into(), s1)]).is_err());
    }
}
