use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Adjacency rows are u32 bitmasks, which caps the vertex count.
pub const MAX_VERTICES: usize = 32;

/// Unordered pair of distinct vertices, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Panics on a self-loop; loops are never valid in this crate.
    pub fn new(a: usize, b: usize) -> Edge {
        assert!(a != b, "self-loop at vertex {a}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn other(&self, w: usize) -> usize {
        debug_assert!(self.contains(w));
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn disjoint(&self, other: &Edge) -> bool {
        !self.contains(other.u) && !self.contains(other.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n`. Immutable once built;
/// every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::SizeBound {
                operation: "graph construction",
                bound: MAX_VERTICES,
                actual: n,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges in lexicographic order of (smaller endpoint, larger endpoint).
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] >> (u + 1) << (u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push(Edge::new(u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && a != b && self.adj[a] & (1 << b) != 0
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (0..self.n).filter(move |w| mask & (1 << w) != 0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.saturating_sub(1)) / 2
    }

    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(a, b)?;
        Ok(g)
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        if !self.contains_edge(e) {
            return Err(Error::MissingEdge { u: e.u, v: e.v });
        }
        let mut g = self.clone();
        g.adj[e.u] &= !(1 << e.v);
        g.adj[e.v] &= !(1 << e.u);
        Ok(g)
    }

    /// Contracts `e`, merging the larger endpoint into the smaller one.
    /// Parallel edges collapse and the loop at the merged vertex is dropped,
    /// so the result is simple again. Vertices above the removed endpoint
    /// shift down by one.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph> {
        if !self.contains_edge(e) {
            return Err(Error::MissingEdge { u: e.u, v: e.v });
        }
        let (u, v) = e.endpoints();
        let relabel = |w: usize| {
            let w = if w == v { u } else { w };
            if w > v {
                w - 1
            } else {
                w
            }
        };
        let mut g = Graph::new(self.n - 1)?;
        for edge in self.edges() {
            let (a, b) = (relabel(edge.u), relabel(edge.v));
            if a != b {
                g.insert_edge(a, b)?;
            }
        }
        Ok(g)
    }

    /// Splits `v` into an edge v'-v''. The original id keeps the `left`
    /// neighbors, the new vertex (id `n`) takes the `right` neighbors.
    pub fn expand_vertex(&self, v: usize, part: &NeighborPartition) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut seen = 0u32;
        for &w in part.left().iter().chain(part.right()) {
            self.check_vertex(w)?;
            if !self.has_edge(v, w) {
                return Err(Error::InvalidPartition {
                    vertex: v,
                    reason: format!("{w} is not a neighbor of {v}"),
                });
            }
            if seen & (1 << w) != 0 {
                return Err(Error::InvalidPartition {
                    vertex: v,
                    reason: format!("{w} appears on both sides"),
                });
            }
            seen |= 1 << w;
        }
        if seen != self.adj[v] {
            return Err(Error::InvalidPartition {
                vertex: v,
                reason: "sides do not cover the whole neighborhood".into(),
            });
        }
        let fresh = self.n;
        let mut g = Graph::new(self.n + 1)?;
        for edge in self.edges() {
            if !edge.contains(v) {
                g.insert_edge(edge.u, edge.v)?;
            }
        }
        for &w in part.left() {
            g.insert_edge(v, w)?;
        }
        for &w in part.right() {
            g.insert_edge(fresh, w)?;
        }
        g.insert_edge(v, fresh)?;
        Ok(g)
    }

    /// All expansions of `v`, one per unordered partition of its
    /// neighborhood: 2^(deg-1) graphs for positive degree. The smallest
    /// neighbor is pinned to the left side to quotient out the swap.
    pub fn enumerate_expansions(&self, v: usize) -> Result<Vec<Graph>> {
        self.check_vertex(v)?;
        let nb: Vec<usize> = self.neighbors(v).collect();
        if nb.is_empty() {
            let part = NeighborPartition::new(vec![], vec![]);
            return Ok(vec![self.expand_vertex(v, &part)?]);
        }
        let free = nb.len() - 1;
        let mut out = Vec::with_capacity(1 << free);
        for mask in 0u32..(1 << free) {
            let mut left = vec![nb[0]];
            let mut right = Vec::new();
            for (i, &w) in nb[1..].iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(w);
                } else {
                    right.push(w);
                }
            }
            let part = NeighborPartition::new(left, right);
            out.push(self.expand_vertex(v, &part)?);
        }
        Ok(out)
    }

    /// Adds a fresh vertex (id `n`) adjacent to every existing vertex.
    pub fn join_apex(&self) -> Graph {
        let mut g = Graph::new(self.n + 1).expect("join_apex exceeds the vertex cap");
        g.adj[..self.n].copy_from_slice(&self.adj);
        let apex = self.n;
        for v in 0..self.n {
            g.adj[v] |= 1 << apex;
            g.adj[apex] |= 1 << v;
        }
        g
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u32;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if seen.count_ones() as usize != self.n {
            return Err(Error::InvalidGraph("permutation repeats a vertex".into()));
        }
        let mut g = Graph::new(self.n)?;
        for edge in self.edges() {
            g.insert_edge(perm[edge.u], perm[edge.v])?;
        }
        Ok(g)
    }

    /// Subgraph induced on `verts`; local ids follow slice positions.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new(verts.len()).expect("induced subgraph exceeds the vertex cap");
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.insert_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut comp = 1u32 << s;
            loop {
                let mut grown = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    grown |= self.adj[v];
                    m &= m - 1;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push((0..self.n).filter(|v| comp & (1 << v) != 0).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn has_hamiltonian_cycle(&self) -> bool {
        if self.n < 3 {
            return false;
        }
        fn extend(g: &Graph, path: &mut Vec<usize>, used: u32) -> bool {
            let last = *path.last().unwrap();
            if path.len() == g.n {
                return g.has_edge(last, path[0]);
            }
            for w in g.neighbors(last) {
                if used & (1 << w) == 0 {
                    path.push(w);
                    if extend(g, path, used | (1 << w)) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        extend(self, &mut vec![0], 1)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Two-sided split of a vertex neighborhood, used by `expand_vertex`.
/// Either side may be empty; validation happens at expansion time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborPartition {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl NeighborPartition {
    pub fn new(mut left: Vec<usize>, mut right: Vec<usize>) -> NeighborPartition {
        left.sort_unstable();
        right.sort_unstable();
        NeighborPartition { left, right }
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }
}

/// Built-in graph families. `K32`, `K33`, and `K331` parse to the complete
/// multipartite graphs of those part sizes, not to large complete graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphName {
    Complete(usize),
    CompleteBipartite(usize, usize),
    K331,
    Cycle(usize),
    Path(usize),
    Petersen,
}

impl FromStr for GraphName {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphName> {
        let unknown = || Error::UnknownGraphName(s.to_string());
        match s {
            "K32" | "K3,2" => return Ok(GraphName::CompleteBipartite(3, 2)),
            "K33" | "K3,3" => return Ok(GraphName::CompleteBipartite(3, 3)),
            "K331" | "K3,3,1" => return Ok(GraphName::K331),
            "Petersen" | "petersen" => return Ok(GraphName::Petersen),
            _ => {}
        }
        let (head, rest) = s.split_at(s.len().min(1));
        let name = match head {
            "K" => {
                if let Some((a, b)) = rest.split_once(',') {
                    let a = a.parse().map_err(|_| unknown())?;
                    let b = b.parse().map_err(|_| unknown())?;
                    GraphName::CompleteBipartite(a, b)
                } else {
                    GraphName::Complete(rest.parse().map_err(|_| unknown())?)
                }
            }
            "C" => GraphName::Cycle(rest.parse().map_err(|_| unknown())?),
            "P" => GraphName::Path(rest.parse().map_err(|_| unknown())?),
            _ => return Err(unknown()),
        };
        standard_graph(name)?;
        Ok(name)
    }
}

pub fn standard_graph(name: GraphName) -> Result<Graph> {
    match name {
        GraphName::Complete(k) => {
            if k == 0 {
                return Err(Error::InvalidGraph("complete graph needs k >= 1".into()));
            }
            let mut edges = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    edges.push((i, j));
                }
            }
            Graph::from_edges(k, &edges)
        }
        GraphName::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(Error::InvalidGraph(
                    "complete bipartite graph needs both parts nonempty".into(),
                ));
            }
            let mut edges = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    edges.push((i, a + j));
                }
            }
            Graph::from_edges(a + b, &edges)
        }
        GraphName::K331 => Ok(standard_graph(GraphName::CompleteBipartite(3, 3))?.join_apex()),
        GraphName::Cycle(k) => {
            if k < 3 {
                return Err(Error::InvalidGraph("cycle needs k >= 3".into()));
            }
            let mut edges: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
            edges.push((k - 1, 0));
            Graph::from_edges(k, &edges)
        }
        GraphName::Path(k) => {
            if k == 0 {
                return Err(Error::InvalidGraph("path needs k >= 1".into()));
            }
            let edges: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
            Graph::from_edges(k, &edges)
        }
        GraphName::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edges(10, &edges)
        }
    }
}

/// Display labels matching the construction order of `standard_graph`.
pub fn standard_labels(name: GraphName) -> Vec<String> {
    let letters = |k: usize| (0..k).map(|i| ((b'a' + i as u8) as char).to_string());
    let numbers = |k: usize| (1..=k).map(|i| i.to_string());
    match name {
        GraphName::Complete(5) => letters(5).collect(),
        GraphName::Complete(k) => numbers(k).collect(),
        GraphName::CompleteBipartite(a, b) if a <= 26 => {
            letters(a).chain(numbers(b)).collect()
        }
        GraphName::CompleteBipartite(a, b) => (0..a)
            .map(|i| format!("a{}", i + 1))
            .chain((0..b).map(|j| format!("b{}", j + 1)))
            .collect(),
        GraphName::K331 => letters(3)
            .chain(numbers(3))
            .chain(std::iter::once("v".to_string()))
            .collect(),
        GraphName::Cycle(k) | GraphName::Path(k) => numbers(k).collect(),
        GraphName::Petersen => numbers(10).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(s: &str) -> Graph {
        standard_graph(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn standard_sizes() {
        for (name, n, m) in [
            ("K4", 4, 6),
            ("K32", 5, 6),
            ("K5", 5, 10),
            ("K33", 6, 9),
            ("K6", 6, 15),
            ("K331", 7, 15),
            ("Petersen", 10, 15),
            ("C5", 5, 5),
            ("P4", 4, 3),
            ("K1", 1, 0),
        ] {
            let g = named(name);
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m), "{name}");
        }
    }

    #[test]
    fn k32_edge_set() {
        let g = named("K32");
        let expect: Vec<Edge> = [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]
            .into_iter()
            .map(|(a, b)| Edge::new(a, b))
            .collect();
        assert_eq!(g.edges(), expect);
    }

    #[test]
    fn standard_label_tables() {
        assert_eq!(
            standard_labels("K32".parse().unwrap()),
            ["a", "b", "c", "1", "2"]
        );
        assert_eq!(
            standard_labels("K331".parse().unwrap()),
            ["a", "b", "c", "1", "2", "3", "v"]
        );
        assert_eq!(standard_labels("K5".parse().unwrap()), ["a", "b", "c", "d", "e"]);
        assert_eq!(standard_labels("K4".parse().unwrap()), ["1", "2", "3", "4"]);
    }

    #[test]
    fn name_parsing() {
        assert_eq!("K4".parse::<GraphName>().unwrap(), GraphName::Complete(4));
        assert_eq!(
            "K32".parse::<GraphName>().unwrap(),
            GraphName::CompleteBipartite(3, 2)
        );
        assert_eq!(
            "K2,4".parse::<GraphName>().unwrap(),
            GraphName::CompleteBipartite(2, 4)
        );
        assert_eq!("K331".parse::<GraphName>().unwrap(), GraphName::K331);
        assert_eq!("C6".parse::<GraphName>().unwrap(), GraphName::Cycle(6));
        assert_eq!("petersen".parse::<GraphName>().unwrap(), GraphName::Petersen);
        for bad in ["", "C2", "K0", "Q5", "Kx", "C-1"] {
            assert!(bad.parse::<GraphName>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn delete_and_missing() {
        let g = named("K4");
        let h = g.delete_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert!(!h.has_edge(0, 1));
        assert_eq!(
            h.delete_edge(Edge::new(0, 1)),
            Err(Error::MissingEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn contraction_simplifies() {
        let c4 = named("C4");
        let t = c4.contract_edge(Edge::new(0, 1)).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (3, 3));
        assert!(t.is_complete());

        // Parallel edges from the shared triangle neighbors collapse.
        let k5 = named("K5");
        let k4 = k5.contract_edge(Edge::new(2, 3)).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        assert!(k4.is_complete());
    }

    #[test]
    fn expansion_counts_and_shape() {
        let k4 = named("K4");
        for v in k4.vertices() {
            assert_eq!(k4.enumerate_expansions(v).unwrap().len(), 4);
        }
        let part = NeighborPartition::new(vec![1], vec![2, 3]);
        let g = k4.expand_vertex(0, &part).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 7));
        assert_eq!(g.degree(0), 2); // left side plus the new edge
        assert_eq!(g.degree(4), 3);
        assert!(g.has_edge(0, 4));

        let k32 = named("K32");
        assert_eq!(k32.enumerate_expansions(0).unwrap().len(), 2);
        assert_eq!(k32.enumerate_expansions(3).unwrap().len(), 4);
    }

    #[test]
    fn expansion_rejects_bad_partitions() {
        let k4 = named("K4");
        let missing = NeighborPartition::new(vec![1], vec![2]);
        assert!(k4.expand_vertex(0, &missing).is_err());
        let doubled = NeighborPartition::new(vec![1, 2], vec![2, 3]);
        assert!(k4.expand_vertex(0, &doubled).is_err());
        let stranger = NeighborPartition::new(vec![1, 2, 3], vec![0]);
        assert!(k4.expand_vertex(0, &stranger).is_err());
    }

    #[test]
    fn apex_join() {
        let empty = Graph::new(0).unwrap();
        let k1 = empty.join_apex();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));

        let k6 = named("K5").join_apex();
        assert!(k6.is_complete());
        assert_eq!(k6.vertex_count(), 6);

        let wheel = named("C5").join_apex();
        assert_eq!((wheel.vertex_count(), wheel.edge_count()), (6, 10));
        assert_eq!(wheel.degree(5), 5);
    }

    #[test]
    fn permutation_roundtrip() {
        let g = named("K32");
        let perm = [4, 2, 0, 1, 3];
        let mut inverse = [0; 5];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let h = g.permuted(&perm).unwrap();
        assert_eq!(h.permuted(&inverse).unwrap(), g);
        assert!(g.permuted(&[0, 0, 1, 2, 3]).is_err());
        assert!(g.permuted(&[0, 1, 2]).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert!(!g.is_connected());
        assert!(named("P4").is_connected());
    }

    #[test]
    fn hamiltonicity() {
        assert!(named("C5").has_hamiltonian_cycle());
        assert!(named("K4").has_hamiltonian_cycle());
        assert!(named("K33").has_hamiltonian_cycle());
        assert!(!named("P4").has_hamiltonian_cycle());
        assert!(!named("K32").has_hamiltonian_cycle());
        assert!(!named("K2").has_hamiltonian_cycle());
    }
}
