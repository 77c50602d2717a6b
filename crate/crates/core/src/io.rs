//! Digraph text format and JSON report documents.
//!
//! ```text
//! # comment
//! 3 3
//! label 0 u1
//! label 1 u2
//! label 2 u3
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The first non-comment line is the header `n m`. Arc lines are `tail head`
//! with 0-indexed endpoints. Label lines are optional, but if any is present
//! every vertex needs exactly one.

use serde::{Serialize, Serializer};

use crate::boundary::BoundaryReport;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::product::{FactorAnalysis, FactoredReport, Provenance, SetProvenance};
use crate::verify::cost::{CostLedger, WallTiming};
use crate::verify::generate::RNG_ALGORITHM;
use crate::verify::suite::{PropertyOutcome, SuiteConfig};
use crate::{VertexId, VertexSet};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut arcs: Vec<(VertexId, VertexId)> = Vec::new();
    let mut arc_lines: Vec<usize> = Vec::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut toks = content.split_whitespace();
        let first = toks.next().expect("non-empty line");
        let Some((n, m, _)) = header else {
            let second = toks
                .next()
                .ok_or_else(|| parse_err(line, "header must be `n m`"))?;
            if toks.next().is_some() {
                return Err(parse_err(line, "header must be `n m`"));
            }
            let n = parse_usize(first, line, "vertex count")?;
            let m = parse_usize(second, line, "arc count")?;
            if n == 0 {
                return Err(parse_err(line, "vertex count must be at least 1"));
            }
            header = Some((n, m, line));
            labels = vec![None; n];
            continue;
        };
        if first == "label" {
            let v = toks
                .next()
                .ok_or_else(|| parse_err(line, "label line must be `label v name`"))?;
            let v = parse_usize(v, line, "vertex")?;
            if v >= n {
                return Err(parse_err(
                    line,
                    format!("vertex {v} out of range for {n} vertices"),
                ));
            }
            let name = content["label".len()..].trim_start();
            let name = name[name.find(char::is_whitespace).unwrap_or(name.len())..].trim();
            if name.is_empty() {
                return Err(parse_err(line, "label line must be `label v name`"));
            }
            if labels[v].replace(name.to_string()).is_some() {
                return Err(parse_err(line, format!("vertex {v} labelled twice")));
            }
            continue;
        }
        let head = toks
            .next()
            .ok_or_else(|| parse_err(line, "arc line must be `tail head`"))?;
        if toks.next().is_some() {
            return Err(parse_err(line, "arc line must be `tail head`"));
        }
        let tail = parse_usize(first, line, "tail")?;
        let head = parse_usize(head, line, "head")?;
        for v in [tail, head] {
            if v >= n {
                return Err(parse_err(
                    line,
                    format!("endpoint {v} out of range for {n} vertices"),
                ));
            }
        }
        if arcs.len() == m {
            return Err(parse_err(
                line,
                format!("more arc lines than the {m} declared"),
            ));
        }
        arcs.push((tail, head));
        arc_lines.push(line);
    }

    let Some((n, m, header_line)) = header else {
        return Err(parse_err(last_line.max(1), "missing header `n m`"));
    };
    if arcs.len() != m {
        return Err(parse_err(
            last_line,
            format!(
                "arc-count mismatch at end of file: header declares {m}, found {}",
                arcs.len()
            ),
        ));
    }
    let g = Digraph::build(n, arcs.iter().copied()).map_err(|e| {
        let bad = match e {
            Error::SelfLoop(v) => arcs.iter().position(|&(t, h)| t == v && h == v),
            Error::DuplicateArc { tail, head } => arcs.iter().rposition(|&a| a == (tail, head)),
            _ => None,
        };
        let line = bad.map_or(header_line, |i| arc_lines[i]);
        parse_err(line, e.to_string())
    })?;
    if labels.iter().all(Option::is_none) {
        return Ok(g);
    }
    if let Some(v) = labels.iter().position(Option::is_none) {
        return Err(parse_err(
            last_line,
            format!("vertex {v} has no label while others do"),
        ));
    }
    g.with_labels(labels.into_iter().map(Option::unwrap).collect())
        .map_err(|e| parse_err(last_line, e.to_string()))
}

/// Inverse of [`parse_digraph`]: header, labels, then arcs in sorted order.
pub fn emit_digraph(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.arc_count());
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            out.push_str(&format!("label {v} {l}\n"));
        }
    }
    for &(t, h) in g.arcs() {
        out.push_str(&format!("{t} {h}\n"));
    }
    out
}

#[derive(Serialize)]
struct DigraphDoc<'a> {
    n: usize,
    arcs: &'a [(VertexId, VertexId)],
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<&'a [String]>,
}

impl<'a> From<&'a Digraph> for DigraphDoc<'a> {
    fn from(g: &'a Digraph) -> Self {
        DigraphDoc {
            n: g.vertex_count(),
            arcs: g.arcs(),
            labels: g.labels(),
        }
    }
}

pub fn serialize_digraph<S: Serializer>(g: &Digraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    DigraphDoc::from(g).serialize(s)
}

pub fn serialize_digraphs<S: Serializer>(
    gs: &[Digraph],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(gs.iter().map(DigraphDoc::from))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub n: usize,
    pub diameter: u32,
    pub ecc: Vec<u32>,
    pub boundary: VertexSet,
    pub eccentric: VertexSet,
    pub contour: VertexSet,
    pub periphery: VertexSet,
    pub tse: bool,
    pub provenance: SetProvenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cost: Option<CostLedger>,
}

impl ReportDocument {
    pub fn direct(r: &BoundaryReport) -> Self {
        let d = Provenance::Direct;
        Self::build(
            r,
            SetProvenance {
                boundary: d,
                eccentric: d,
                contour: d,
                periphery: d,
            },
            None,
        )
    }

    pub fn factored(f: &FactoredReport) -> Self {
        Self::build(&f.report, f.provenance, Some(f.cost.clone()))
    }

    fn build(r: &BoundaryReport, provenance: SetProvenance, cost: Option<CostLedger>) -> Self {
        ReportDocument {
            n: r.vertex_count(),
            diameter: r.diameter,
            ecc: r.ecc.clone(),
            boundary: r.boundary.clone(),
            eccentric: r.eccentric.clone(),
            contour: r.contour.clone(),
            periphery: r.periphery.clone(),
            tse: r.tse,
            provenance,
            cost,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorDocument {
    pub analysis: FactorAnalysis,
    pub product: ReportDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductDocument {
    pub factor_sizes: Vec<usize>,
    pub vertices: usize,
    pub arcs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub written_to: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyDocument {
    pub rng: &'static str,
    pub seed: u64,
    pub trials: usize,
    pub max_n: usize,
    pub passed: bool,
    pub properties: Vec<PropertyOutcome>,
}

impl VerifyDocument {
    pub fn new(cfg: SuiteConfig, properties: Vec<PropertyOutcome>) -> Self {
        VerifyDocument {
            rng: RNG_ALGORITHM,
            seed: cfg.seed,
            trials: cfg.trials,
            max_n: cfg.max_n,
            passed: properties.iter().all(PropertyOutcome::passed),
            properties,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchDocument {
    pub ledger: CostLedger,
    /// Absent when the explicit product exceeds the vertex budget.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall: Option<WallTiming>,
}

/// Pretty JSON with a trailing newline. Struct fields keep declaration order.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::full_report;
    use crate::digraph::fixtures::*;

    fn line_of(r: Result<Digraph>) -> usize {
        match r {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_c3_and_single_vertex() {
        assert_eq!(parse_digraph("3 3\n0 1\n1 2\n2 0\n").unwrap(), c3());
        let g = parse_digraph("# comment\n1 0\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of(parse_digraph("3 2\n0 1\n")), 2);
        let e = parse_digraph("3 2\n0 1\n").unwrap_err().to_string();
        assert!(e.contains("end of file"), "{e}");
        assert_eq!(line_of(parse_digraph("# x\n3\n")), 2);
        assert_eq!(line_of(parse_digraph("3 a\n")), 1);
        assert_eq!(line_of(parse_digraph("3 2\n0 1\n\n1 7\n")), 4);
        assert_eq!(line_of(parse_digraph("3 1\n0 1\n1 2\n")), 3);
        assert_eq!(line_of(parse_digraph("3 2\n0 1\n0 1\n")), 3);
        assert_eq!(line_of(parse_digraph("3 1\n1 1\n")), 2);
        assert_eq!(line_of(parse_digraph("0 0\n")), 1);
        assert_eq!(line_of(parse_digraph("# only\n")), 1);
        assert_eq!(line_of(parse_digraph("2 1\nlabel 0 a\n0 1\n")), 3);
    }

    #[test]
    fn labels_round_trip() {
        let text = "3 3\nlabel 0 u1\nlabel 1 u 2\nlabel 2 u3\n0 1\n1 2\n2 0\n";
        let g = parse_digraph(text).unwrap();
        assert_eq!(g.labels().unwrap()[1], "u 2");
        assert_eq!(emit_digraph(&g), text);
    }

    #[test]
    fn fixtures_round_trip() {
        for (name, g) in all() {
            assert_eq!(parse_digraph(&emit_digraph(&g)).unwrap(), g, "{name}");
        }
    }

    #[test]
    fn report_key_order_is_stable() {
        let doc = ReportDocument::direct(&full_report(&theta5()).unwrap());
        let json = to_json(&doc);
        let keys = [
            "\"n\"",
            "\"diameter\"",
            "\"ecc\"",
            "\"boundary\"",
            "\"eccentric\"",
            "\"contour\"",
            "\"periphery\"",
            "\"tse\"",
            "\"provenance\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(!json.contains("\"cost\""));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["periphery"], serde_json::json!([0, 1, 3, 4]));
        assert_eq!(value["provenance"]["boundary"], "direct");
    }
}
