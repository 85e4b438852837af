//! Edge-list text format and DOT export.
//!
//! Edge lists are whitespace-separated label pairs, one edge per line, with
//! `#` starting a comment. A line with a single label declares an isolated
//! vertex. Serialization is canonical: vertices appear in sorted label
//! order, each edge once with its smaller label first, lines sorted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut intern = |tok: &str| -> usize {
            *index.entry(tok.to_string()).or_insert_with(|| {
                labels.push(tok.to_string());
                labels.len() - 1
            })
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [single] => {
                intern(single);
            }
            [a, b] => {
                if a == b {
                    return Err(Error::EdgeListParse {
                        line,
                        reason: format!("self-loop `{a} {b}`"),
                    });
                }
                let (u, v) = (intern(a), intern(b));
                let key = (u.min(v), u.max(v));
                if seen.insert(key, line).is_some() {
                    return Err(Error::EdgeListParse {
                        line,
                        reason: format!("duplicate edge `{a} {b}`"),
                    });
                }
                edges.push(key);
            }
            _ => {
                return Err(Error::EdgeListParse {
                    line,
                    reason: format!("expected 1 or 2 labels, found {}", tokens.len()),
                })
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::EdgeListParse {
            line: text.lines().count().max(1),
            reason: "no vertices declared".into(),
        });
    }
    Graph::from_edges(labels, &edges)
}

/// Canonical edge-list text for `g`.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut lines: Vec<String> = Vec::new();
    for (u, v) in g.edges() {
        let (a, b) = order_labels(g.label(u), g.label(v));
        lines.push(format!("{a} {b}"));
    }
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            lines.push(g.label(v).to_string());
        }
    }
    lines.sort();
    let mut out = String::new();
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}

/// Undirected DOT output with labels rendered verbatim (quoted).
pub fn to_dot(g: &Graph) -> String {
    let mut lines: Vec<String> = Vec::new();
    for (u, v) in g.edges() {
        let (a, b) = order_labels(g.label(u), g.label(v));
        lines.push(format!("  \"{a}\" -- \"{b}\";"));
    }
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            lines.push(format!("  \"{}\";", g.label(v)));
        }
    }
    lines.sort();
    let mut out = String::from("graph G {\n");
    for l in lines {
        let _ = writeln!(out, "{l}");
    }
    out.push_str("}\n");
    out
}

fn order_labels<'a>(a: &'a str, b: &'a str) -> (&'a str, &'a str) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_path_on_three() {
        let g = parse_edge_list("a b\nb c").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert!(g.are_adjacent(
            g.vertex_by_label("a").unwrap(),
            g.vertex_by_label("b").unwrap()
        ));
    }

    #[test]
    fn serialize_is_canonical_round_trip() {
        let messy = "b c # one edge\n\na b\nlonely\n";
        let g = parse_edge_list(messy).unwrap();
        let canon = serialize_edge_list(&g);
        assert_eq!(canon, "a b\nb c\nlonely\n");
        let again = parse_edge_list(&canon).unwrap();
        assert_eq!(serialize_edge_list(&again), canon);
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        match parse_edge_list("a b\na b c") {
            Err(Error::EdgeListParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_edge_list("a b\n\nx x") {
            Err(Error::EdgeListParse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_edge_list("a b\na b") {
            Err(Error::EdgeListParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn dot_for_single_edge() {
        let g = crate::graph::build(&crate::graph::FamilySpec::Complete(2)).unwrap();
        let dot = to_dot(&g);
        assert_eq!(dot.matches("--").count(), 1);
        assert!(dot.contains("\"v1\" -- \"v2\";"));
    }
}
