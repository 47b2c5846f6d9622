use std::collections::BTreeSet;

use outerlink_core::Graph;

/// Largest vertex count a single-byte graph6 header can carry. The core
/// graph type stops at 32 vertices, so the multi-byte size forms are
/// never needed.
pub const GRAPH6_MAX_VERTICES: usize = 62;

/// A graph together with display names for its vertices, in id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    /// Wraps a bare graph with decimal labels matching the vertex ids.
    pub fn numbered(graph: Graph) -> LabeledGraph {
        let labels = (0..graph.vertex_count()).map(|v| v.to_string()).collect();
        LabeledGraph { graph, labels }
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("{0}")]
    General(String),
}

fn at(line: usize, reason: impl Into<String>) -> InputError {
    InputError::Line {
        line,
        reason: reason.into(),
    }
}

/// Parses either supported format. A single significant line shaped like
/// a complete graph6 string is read as graph6; everything else is read
/// as an edge list. graph6 wins the (rare) overlap, so an isolated
/// vertex whose label parses as graph6 needs an explicit companion line.
pub fn parse_graph(text: &str) -> Result<LabeledGraph, InputError> {
    let significant: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap().trim();
            (!line.is_empty()).then_some((i + 1, line))
        })
        .collect();
    if let [(lineno, line)] = significant[..] {
        if graph6_shaped(line) {
            return parse_graph6_line(line, lineno);
        }
    }
    parse_edge_list(text)
}

/// Edge-list format: one `u v` edge per line, a bare token declares an
/// isolated (or merely early) vertex, `#` starts a comment. Labels are
/// assigned ids in order of first appearance.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, InputError> {
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut intern = |token: &str, lineno: usize| -> Result<usize, InputError> {
        if let Some(id) = labels.iter().position(|l| l == token) {
            return Ok(id);
        }
        if labels.len() >= 32 {
            return Err(at(
                lineno,
                format!("vertex `{token}` exceeds the 32-vertex limit"),
            ));
        }
        labels.push(token.to_string());
        Ok(labels.len() - 1)
    };

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap();
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            [] => {}
            [one] => {
                intern(one, lineno)?;
            }
            [a, b] => {
                if a == b {
                    return Err(at(lineno, format!("self-loop `{a} {b}`")));
                }
                let u = intern(a, lineno)?;
                let v = intern(b, lineno)?;
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(at(lineno, format!("duplicate edge `{a} {b}`")));
                }
                edges.push((u, v));
            }
            _ => {
                return Err(at(
                    lineno,
                    format!("expected one or two tokens, got {}", tokens.len()),
                ));
            }
        }
    }

    let graph = Graph::from_edges(labels.len(), &edges)
        .map_err(|e| InputError::General(e.to_string()))?;
    Ok(LabeledGraph { graph, labels })
}

/// Serializes to the edge-list format so that re-parsing reproduces the
/// same ids: every vertex is declared by a bare line first, then the
/// edges follow in sorted order.
pub fn to_edge_list(lg: &LabeledGraph) -> String {
    let mut out = String::new();
    for label in &lg.labels {
        out.push_str(label);
        out.push('\n');
    }
    for e in lg.graph.edges() {
        out.push_str(&format!("{} {}\n", lg.label(e.u()), lg.label(e.v())));
    }
    out
}

fn graph6_shaped(line: &str) -> bool {
    let bytes = line.as_bytes();
    let Some(&head) = bytes.first() else {
        return false;
    };
    if !(63..=125).contains(&head) || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return false;
    }
    let n = (head - 63) as usize;
    bytes.len() == 1 + (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn parse_graph6_line(line: &str, lineno: usize) -> Result<LabeledGraph, InputError> {
    let bytes = line.as_bytes();
    let head = bytes[0];
    if head == b'~' {
        return Err(at(lineno, "multi-byte graph6 vertex counts are not supported"));
    }
    let n = (head - 63) as usize;
    let mut bits = Vec::with_capacity(6 * (bytes.len() - 1));
    for &b in &bytes[1..] {
        let value = b - 63;
        for shift in (0..6).rev() {
            bits.push(value >> shift & 1 == 1);
        }
    }
    let wanted = n * n.saturating_sub(1) / 2;
    if bits[wanted..].iter().any(|&b| b) {
        return Err(at(lineno, "graph6 padding bits must be zero"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    let graph = Graph::from_edges(n, &edges)
        .map_err(|e| at(lineno, format!("graph6 decodes to an invalid graph: {e}")))?;
    Ok(LabeledGraph::numbered(graph))
}

/// Standard graph6 line for a graph: header byte 63+n, then the upper
/// triangle of the adjacency matrix read column by column, six bits per
/// byte, most significant first.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= GRAPH6_MAX_VERTICES, "graph6 header is a single byte");
    let mut bits = Vec::with_capacity(n * n / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (idx, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - idx);
            }
        }
        out.push((63 + value) as char);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use outerlink_core::{enumerate_graphs, standard_graph, standard_labels};

    fn named(s: &str) -> Graph {
        standard_graph(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn bipartite_edge_list_example() {
        let lg = parse_graph("a 1\na 2\nb 1\nb 2\nc 1\nc 2").unwrap();
        assert_eq!(lg.labels, ["a", "1", "2", "b", "c"]);
        let expected: Vec<(usize, usize)> =
            vec![(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)];
        assert_eq!(lg.graph, Graph::from_edges(5, &expected).unwrap());
        assert!(outerlink_core::canon::isomorphic(&lg.graph, &named("K32")).unwrap());
    }

    #[test]
    fn graph6_k5_line() {
        let lg = parse_graph("D~{").unwrap();
        assert_eq!(lg.graph, named("K5"));
        assert_eq!(lg.labels, ["0", "1", "2", "3", "4"]);
        assert_eq!(to_graph6(&named("K5")), "D~{");
    }

    #[test]
    fn line_numbered_errors() {
        assert_eq!(
            parse_graph("a a"),
            Err(at(1, "self-loop `a a`"))
        );
        assert_eq!(
            parse_graph("a b\nb a"),
            Err(at(2, "duplicate edge `b a`"))
        );
        assert_eq!(
            parse_graph("a b c"),
            Err(at(1, "expected one or two tokens, got 3"))
        );
    }

    #[test]
    fn comments_blanks_and_isolated_vertices() {
        let lg = parse_graph("# header\n\nx\na b # trailing\n").unwrap();
        assert_eq!(lg.labels, ["x", "a", "b"]);
        assert_eq!(lg.graph.edge_count(), 1);
        assert!(lg.graph.has_edge(1, 2));
    }

    #[test]
    fn edge_list_roundtrip_preserves_ids() {
        let texts = ["a 1\na 2\nb 1\nb 2\nc 1\nc 2", "x\na b\nc a\n", "solo"];
        for text in texts {
            let lg = parse_graph(text).unwrap();
            let rendered = to_edge_list(&lg);
            assert_eq!(parse_graph(&rendered).unwrap(), lg, "{text}");
        }
    }

    #[test]
    fn graph6_roundtrip_over_all_five_vertex_graphs() {
        for g in enumerate_graphs(5).unwrap() {
            let line = to_graph6(&g);
            assert_eq!(parse_graph(&line).unwrap().graph, g, "{line}");
        }
        let empty = Graph::new(0).unwrap();
        assert_eq!(to_graph6(&empty), "?");
        assert_eq!(parse_graph("?").unwrap().graph, empty);
    }

    #[test]
    fn graph6_padding_must_be_clean() {
        // n = 3 uses three bits; `~` sets all six, so the padding is dirty.
        assert!(matches!(
            parse_graph("B~"),
            Err(InputError::Line { line: 1, .. })
        ));
    }

    #[test]
    fn ambiguous_single_token_prefers_graph6() {
        // `?` is the 0-vertex graph6 line, not a vertex named `?`.
        assert_eq!(parse_graph("?").unwrap().graph.vertex_count(), 0);
        // A second line forces the edge-list reading.
        let lg = parse_graph("?\nz").unwrap();
        assert_eq!(lg.labels, ["?", "z"]);
    }

    #[test]
    fn standard_label_sets_match_graph_sizes() {
        for name in ["K5", "K32", "K33", "K331", "C6", "P4", "Petersen"] {
            let g = named(name);
            let labels = standard_labels(name.parse().unwrap());
            assert_eq!(labels.len(), g.vertex_count(), "{name}");
        }
    }
}
