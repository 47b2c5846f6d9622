use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::isomorphic;
use crate::cycles::{cycle_edges, is_simple_cycle, simple_cycles};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, GraphName};
use crate::s1link::CyclicOrder;

/// The two-page search tries every cyclic order, so cap the sweep.
pub const MAX_TWO_PAGE_VERTICES: usize = 9;

/// One transversal crossing between two disjoint chords; `over` is the
/// edge on top.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub over: Edge,
    pub under: Edge,
}

impl Crossing {
    pub fn involves(&self, e: Edge) -> bool {
        self.over == e || self.under == e
    }

    pub fn pair(&self) -> (Edge, Edge) {
        (self.over.min(self.under), self.over.max(self.under))
    }
}

/// Combinatorial diagram of a graph drawn in a disk: vertices on the
/// boundary circle in a fixed cyclic order, edges as chords, plus an
/// over/under flag and a per-edge traversal sequence for every crossing.
/// Crossing ids are indices into the crossing list.
#[derive(Clone, Debug, PartialEq)]
pub struct OuterDiagram {
    graph: Graph,
    order: CyclicOrder,
    crossings: Vec<Crossing>,
    traversals: BTreeMap<Edge, Vec<usize>>,
}

impl OuterDiagram {
    /// Assembles a diagram from raw parts without checking anything;
    /// `validate_diagram` reports whatever is wrong.
    pub fn from_parts(
        graph: Graph,
        order: CyclicOrder,
        crossings: Vec<Crossing>,
        traversals: BTreeMap<Edge, Vec<usize>>,
    ) -> OuterDiagram {
        OuterDiagram {
            graph,
            order,
            crossings,
            traversals,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn boundary_order(&self) -> &CyclicOrder {
        &self.order
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Crossing ids met along `e`, walking from its smaller endpoint.
    pub fn traversal(&self, e: Edge) -> Option<&[usize]> {
        self.traversals.get(&e).map(Vec::as_slice)
    }

    /// Renders the diagram as text: the boundary order, the edge list,
    /// and one `X` line per crossing in id order.
    pub fn to_text(&self) -> String {
        let mut out = String::from("order");
        for &v in self.order.as_slice() {
            out.push_str(&format!(" {v}"));
        }
        out.push_str("\nedges");
        for e in self.graph.edges() {
            out.push_str(&format!(" {e}"));
        }
        out.push('\n');
        for (id, c) in self.crossings.iter().enumerate() {
            out.push_str(&format!("X {id} over={} under={}\n", c.over, c.under));
        }
        out
    }

    /// Parses the `to_text` format. The listed crossings must be exactly
    /// the chord pairs that interleave in the given order (ids are
    /// remapped canonically); traversal sequences are recomputed from the
    /// chord geometry rather than trusted.
    pub fn from_text(text: &str) -> Result<OuterDiagram> {
        let parse_fail = |line: usize, reason: String| Error::DiagramParse { line, reason };
        let mut order: Option<(usize, Vec<usize>)> = None;
        let mut edges: Option<(usize, Vec<(usize, usize)>)> = None;
        let mut listed: BTreeMap<(Edge, Edge), (usize, Edge)> = BTreeMap::new();
        let mut ids = BTreeSet::new();

        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            match tokens.next().unwrap() {
                "order" => {
                    if order.is_some() {
                        return Err(parse_fail(lineno, "repeated order line".into()));
                    }
                    let mut seq = Vec::new();
                    for t in tokens {
                        seq.push(t.parse::<usize>().map_err(|_| {
                            parse_fail(lineno, format!("bad vertex `{t}`"))
                        })?);
                    }
                    order = Some((lineno, seq));
                }
                "edges" => {
                    if order.is_none() {
                        return Err(parse_fail(lineno, "edges listed before the order".into()));
                    }
                    if edges.is_some() {
                        return Err(parse_fail(lineno, "repeated edges line".into()));
                    }
                    let mut list = Vec::new();
                    for t in tokens {
                        list.push(parse_edge_token(t, lineno)?);
                    }
                    edges = Some((lineno, list));
                }
                "X" => {
                    let (Some((_, order_seq)), Some(_)) = (&order, &edges) else {
                        return Err(parse_fail(
                            lineno,
                            "crossing listed before order and edges".into(),
                        ));
                    };
                    let n = order_seq.len();
                    let id_token = tokens
                        .next()
                        .ok_or_else(|| parse_fail(lineno, "missing crossing id".into()))?;
                    let id: usize = id_token
                        .parse()
                        .map_err(|_| parse_fail(lineno, format!("bad crossing id `{id_token}`")))?;
                    if !ids.insert(id) {
                        return Err(parse_fail(lineno, format!("repeated crossing id {id}")));
                    }
                    let over = parse_flagged_edge(tokens.next(), "over", n, lineno)?;
                    let under = parse_flagged_edge(tokens.next(), "under", n, lineno)?;
                    if !over.disjoint(&under) {
                        return Err(parse_fail(
                            lineno,
                            format!("crossing edges {over} and {under} share an endpoint"),
                        ));
                    }
                    let key = (over.min(under), over.max(under));
                    if listed.insert(key, (lineno, over)).is_some() {
                        return Err(parse_fail(
                            lineno,
                            format!("crossing {}/{} listed twice", key.0, key.1),
                        ));
                    }
                }
                other => {
                    return Err(parse_fail(lineno, format!("unknown directive `{other}`")));
                }
            }
        }

        let (order_line, seq) = order.ok_or(Error::InvalidDiagram("missing order line".into()))?;
        let n = seq.len();
        let order = CyclicOrder::new(seq)
            .map_err(|e| parse_fail(order_line, e.to_string()))?;
        let (edges_line, list) = edges.ok_or(Error::InvalidDiagram("missing edges line".into()))?;
        let mut graph = Graph::new(n).map_err(|e| parse_fail(edges_line, e.to_string()))?;
        for (u, v) in list {
            if graph.has_edge(u, v) {
                return Err(parse_fail(edges_line, format!("duplicate edge {u}-{v}")));
            }
            graph = graph
                .with_edge(u, v)
                .map_err(|e| parse_fail(edges_line, e.to_string()))?;
        }

        let expected = convex_crossing_pairs(&graph, &order);
        for (pair, &(lineno, _)) in &listed {
            if !expected.contains(pair) {
                return Err(parse_fail(
                    lineno,
                    format!("edges {} and {} do not cross in this order", pair.0, pair.1),
                ));
            }
        }
        for pair in &expected {
            if !listed.contains_key(pair) {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {}/{} forced by the order is not listed",
                    pair.0, pair.1
                )));
            }
        }
        let rule = OverRule::Explicit(
            listed.iter().map(|(&pair, &(_, over))| (pair, over)).collect(),
        );
        convex_diagram(&graph, &order, &rule)
    }
}

fn parse_edge_token(t: &str, lineno: usize) -> Result<(usize, usize)> {
    let bad = || Error::DiagramParse {
        line: lineno,
        reason: format!("bad edge `{t}`"),
    };
    let (a, b) = t.split_once('-').ok_or_else(bad)?;
    let u = a.parse().map_err(|_| bad())?;
    let v = b.parse().map_err(|_| bad())?;
    if u == v {
        return Err(Error::DiagramParse {
            line: lineno,
            reason: format!("self-loop `{t}`"),
        });
    }
    Ok((u, v))
}

fn parse_flagged_edge(token: Option<&str>, flag: &str, n: usize, lineno: usize) -> Result<Edge> {
    let token = token.ok_or_else(|| Error::DiagramParse {
        line: lineno,
        reason: format!("missing {flag}= field"),
    })?;
    let value = token.strip_prefix(&format!("{flag}=")).ok_or_else(|| {
        Error::DiagramParse {
            line: lineno,
            reason: format!("expected {flag}=, got `{token}`"),
        }
    })?;
    let (u, v) = parse_edge_token(value, lineno)?;
    if u >= n || v >= n {
        return Err(Error::DiagramParse {
            line: lineno,
            reason: format!("edge `{value}` leaves the vertex range"),
        });
    }
    Ok(Edge::new(u, v))
}

/// How to pick the top strand at each crossing of a fresh convex diagram.
#[derive(Clone, Debug)]
pub enum OverRule {
    /// The lexicographically smaller edge of the pair goes over.
    LexicographicOver,
    /// Seeded coin flip per crossing, in crossing id order.
    Random(u64),
    /// Explicit over-edge per chord pair (keyed by sorted pair); pairs
    /// missing from the map fall back to the lexicographic rule.
    Explicit(BTreeMap<(Edge, Edge), Edge>),
}

fn interleaves(pos: &[usize], e: Edge, f: Edge) -> bool {
    let (a, b) = (pos[e.u()], pos[e.v()]);
    let (lo, hi) = (a.min(b), a.max(b));
    let inside = |p: usize| lo < p && p < hi;
    inside(pos[f.u()]) != inside(pos[f.v()])
}

/// Chord pairs that cross, in lexicographic order of (first, second) edge.
fn convex_crossing_pairs(g: &Graph, o: &CyclicOrder) -> Vec<(Edge, Edge)> {
    let mut pos = vec![0; g.vertex_count()];
    for v in g.vertices() {
        pos[v] = o.position(v).unwrap();
    }
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if e.disjoint(&f) && interleaves(&pos, e, f) {
                out.push((e, f));
            }
        }
    }
    out
}

/// Exact crossing abscissa in the parabola model: vertex at position p
/// sits at (p, p^2), so every chord is a straight segment and crossing
/// chords meet at x = (ab - cd) / ((a+b) - (c+d)). Denominators are kept
/// positive so comparison is a cross-multiplication.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Ratio {
    num: i64,
    den: i64,
}

impl Ratio {
    fn new(num: i64, den: i64) -> Ratio {
        debug_assert!(den != 0, "crossing chords are never parallel");
        if den < 0 {
            Ratio { num: -num, den: -den }
        } else {
            Ratio { num, den }
        }
    }

    fn neg(self) -> Ratio {
        Ratio {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> std::cmp::Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn crossing_abscissa(pos: &[usize], e: Edge, f: Edge) -> Ratio {
    let (a, b) = (pos[e.u()] as i64, pos[e.v()] as i64);
    let (c, d) = (pos[f.u()] as i64, pos[f.v()] as i64);
    Ratio::new(a * b - c * d, (a + b) - (c + d))
}

/// Builds the convex diagram of `g` for a boundary order: crossings are
/// exactly the interleaving chord pairs, flags follow `rule`, and each
/// edge's traversal lists its crossings by exact position along the chord.
pub fn convex_diagram(g: &Graph, o: &CyclicOrder, rule: &OverRule) -> Result<OuterDiagram> {
    if o.len() != g.vertex_count() {
        return Err(Error::InvalidOrder(format!(
            "order covers {} vertices, graph has {}",
            o.len(),
            g.vertex_count()
        )));
    }
    let mut pos = vec![0; g.vertex_count()];
    for v in g.vertices() {
        pos[v] = o.position(v).unwrap();
    }
    let pairs = convex_crossing_pairs(g, o);
    let mut rng = match rule {
        OverRule::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut crossings = Vec::with_capacity(pairs.len());
    for &(e, f) in &pairs {
        let over_first = match rule {
            OverRule::LexicographicOver => true,
            OverRule::Random(_) => rng.as_mut().unwrap().random_bool(0.5),
            OverRule::Explicit(map) => match map.get(&(e, f)) {
                None => true,
                Some(&edge) if edge == e => true,
                Some(&edge) if edge == f => false,
                Some(&edge) => {
                    return Err(Error::InvalidDiagram(format!(
                        "explicit over edge {edge} is not part of crossing {e}/{f}"
                    )))
                }
            },
        };
        let (over, under) = if over_first { (e, f) } else { (f, e) };
        crossings.push(Crossing { over, under });
    }

    let mut traversals: BTreeMap<Edge, Vec<usize>> =
        g.edges().into_iter().map(|e| (e, Vec::new())).collect();
    for e in g.edges() {
        let forward = pos[e.u()] < pos[e.v()];
        let mut incident: Vec<(Ratio, Edge, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| a == e || b == e)
            .map(|(id, &(a, b))| {
                let partner = if a == e { b } else { a };
                let x = crossing_abscissa(&pos, e, partner);
                (if forward { x } else { x.neg() }, partner, id)
            })
            .collect();
        incident.sort_unstable_by(|l, r| l.0.cmp(&r.0).then(l.1.cmp(&r.1)));
        traversals.insert(e, incident.into_iter().map(|(_, _, id)| id).collect());
    }

    Ok(OuterDiagram {
        graph: g.clone(),
        order: o.clone(),
        crossings,
        traversals,
    })
}

/// Structural audit of a diagram; each violation is described in plain
/// text and an empty list means the diagram is well formed.
pub fn validate_diagram(d: &OuterDiagram) -> Vec<String> {
    let mut violations = Vec::new();
    if d.order.len() != d.graph.vertex_count() {
        violations.push(format!(
            "order covers {} vertices, graph has {}",
            d.order.len(),
            d.graph.vertex_count()
        ));
    }
    let edges: BTreeSet<Edge> = d.graph.edges().into_iter().collect();
    let mut seen_pairs = BTreeSet::new();
    for (id, c) in d.crossings.iter().enumerate() {
        if !edges.contains(&c.over) {
            violations.push(format!("crossing {id}: over edge {} is not in the graph", c.over));
        }
        if !edges.contains(&c.under) {
            violations.push(format!(
                "crossing {id}: under edge {} is not in the graph",
                c.under
            ));
        }
        if c.over == c.under {
            violations.push(format!("crossing {id}: edge {} crosses itself", c.over));
        } else if !c.over.disjoint(&c.under) {
            violations.push(format!(
                "crossing {id}: edges {} and {} share an endpoint",
                c.over, c.under
            ));
        }
        if !seen_pairs.insert(c.pair()) {
            violations.push(format!(
                "crossing {id}: pair {}/{} appears more than once",
                c.pair().0,
                c.pair().1
            ));
        }
    }
    let keys: BTreeSet<Edge> = d.traversals.keys().copied().collect();
    if keys != edges {
        violations.push("traversal keys do not match the edge set".into());
    }
    for (e, seq) in &d.traversals {
        for &id in seq {
            if id >= d.crossings.len() {
                violations.push(format!("traversal of {e} mentions unknown crossing {id}"));
            } else if !d.crossings[id].involves(*e) {
                violations.push(format!(
                    "traversal of {e} mentions crossing {id}, which does not touch it"
                ));
            }
        }
    }
    for (id, c) in d.crossings.iter().enumerate() {
        for e in [c.over, c.under] {
            let count = d
                .traversals
                .get(&e)
                .map_or(0, |seq| seq.iter().filter(|&&x| x == id).count());
            if count != 1 {
                violations.push(format!(
                    "crossing {id} appears {count} times on edge {e}, expected once"
                ));
            }
        }
    }
    violations
}

/// Candidate cycle/edge link inside one diagram.
#[derive(Clone, PartialEq, Eq)]
pub struct CycleEdgeLink {
    cycle: Vec<usize>,
    edge: Edge,
}

impl CycleEdgeLink {
    pub fn new(cycle: Vec<usize>, edge: Edge) -> CycleEdgeLink {
        CycleEdgeLink { cycle, edge }
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn edge(&self) -> Edge {
        self.edge
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if !is_simple_cycle(g, &self.cycle) {
            return Err(Error::InvalidLink(format!(
                "{:?} is not a simple cycle of the graph",
                self.cycle
            )));
        }
        if !g.contains_edge(self.edge) {
            return Err(Error::InvalidLink(format!(
                "edge {} is not in the graph",
                self.edge
            )));
        }
        if self.cycle.iter().any(|&v| self.edge.contains(v)) {
            return Err(Error::InvalidLink(format!(
                "edge {} touches the cycle {:?}",
                self.edge, self.cycle
            )));
        }
        Ok(())
    }
}

impl fmt::Display for CycleEdgeLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.cycle, self.edge)
    }
}

impl fmt::Debug for CycleEdgeLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleEdgeLink{self}")
    }
}

/// Mod-2 linking number of a cycle and a disjoint edge: crossings where
/// the edge passes over an edge of the cycle, mod 2. For a valid link the
/// under-side count has the same parity, because the chord meets the
/// closed cycle an even number of times in total.
pub fn lk2_cycle_edge(d: &OuterDiagram, link: &CycleEdgeLink) -> Result<u8> {
    link.validate(&d.graph)?;
    let on_cycle: BTreeSet<Edge> = cycle_edges(&link.cycle).into_iter().collect();
    let count = d
        .crossings
        .iter()
        .filter(|c| c.over == link.edge && on_cycle.contains(&c.under))
        .count();
    Ok((count % 2) as u8)
}

fn disjoint_cycle_edge_links(g: &Graph) -> Vec<CycleEdgeLink> {
    let mut out = Vec::new();
    for cycle in simple_cycles(g) {
        let mut mask = 0u32;
        for &v in &cycle {
            mask |= 1 << v;
        }
        for e in g.edges() {
            if mask >> e.u() & 1 == 0 && mask >> e.v() & 1 == 0 {
                out.push(CycleEdgeLink::new(cycle.clone(), e));
            }
        }
    }
    out
}

/// Sum of lk2 over every (simple cycle, vertex-disjoint edge) pair, mod 2.
pub fn link_parity_sum(d: &OuterDiagram) -> u8 {
    let mut sum = 0;
    for link in disjoint_cycle_edge_links(&d.graph) {
        sum ^= lk2_cycle_edge(d, &link).unwrap();
    }
    sum
}

/// First non-split cycle/edge link, scanning cycles lexicographically and
/// edges in sorted order.
pub fn find_nonsplit_outer_link(d: &OuterDiagram) -> Option<CycleEdgeLink> {
    disjoint_cycle_edge_links(&d.graph)
        .into_iter()
        .find(|link| lk2_cycle_edge(d, link).unwrap() == 1)
}

/// Swaps over and under at one crossing; everything else is untouched.
pub fn crossing_change(d: &OuterDiagram, id: usize) -> Result<OuterDiagram> {
    if id >= d.crossings.len() {
        return Err(Error::UnknownCrossing(id));
    }
    let mut out = d.clone();
    let c = out.crossings[id];
    out.crossings[id] = Crossing {
        over: c.under,
        under: c.over,
    };
    Ok(out)
}

/// A disk diagram together with an apex vertex joined to every boundary
/// vertex by an edge routed outside the disk, hence crossing nothing.
/// This realizes the join of the base graph with one extra vertex as a
/// spatial graph whose only crossings are the base diagram's.
#[derive(Clone, Debug, PartialEq)]
pub struct SpatialDiagram {
    base: OuterDiagram,
    graph: Graph,
    apex: usize,
}

impl SpatialDiagram {
    pub fn base(&self) -> &OuterDiagram {
        &self.base
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn apex(&self) -> usize {
        self.apex
    }
}

pub fn apex_extension(d: &OuterDiagram) -> SpatialDiagram {
    let graph = d.graph.join_apex();
    SpatialDiagram {
        base: d.clone(),
        apex: d.graph.vertex_count(),
        graph,
    }
}

/// Mod-2 linking number of two vertex-disjoint cycles of a spatial
/// diagram: crossings of the first over the second, mod 2. Both counting
/// directions are computed and must agree mod 2; a mismatch means the
/// crossing data cannot come from a drawing of two closed curves.
pub fn lk2_cycle_cycle(s: &SpatialDiagram, c1: &[usize], c2: &[usize]) -> Result<u8> {
    for c in [c1, c2] {
        if !is_simple_cycle(&s.graph, c) {
            return Err(Error::InvalidLink(format!(
                "{c:?} is not a simple cycle of the spatial graph"
            )));
        }
    }
    if c1.iter().any(|v| c2.contains(v)) {
        return Err(Error::InvalidLink(format!(
            "cycles {c1:?} and {c2:?} share a vertex"
        )));
    }
    let e1: BTreeSet<Edge> = cycle_edges(c1).into_iter().collect();
    let e2: BTreeSet<Edge> = cycle_edges(c2).into_iter().collect();
    let mut first_over = 0u32;
    let mut second_over = 0u32;
    for c in &s.base.crossings {
        if e1.contains(&c.over) && e2.contains(&c.under) {
            first_over += 1;
        }
        if e2.contains(&c.over) && e1.contains(&c.under) {
            second_over += 1;
        }
    }
    if first_over % 2 != second_over % 2 {
        return Err(Error::AsymmetricCrossings);
    }
    Ok((first_over % 2) as u8)
}

/// Conway–Gordon style invariant of the spatial graph. For K6 this sums
/// lk2 over the 10 unordered partitions into two triangles; for K3,3,1 it
/// sums over every unordered pair of vertex-disjoint cycles. Any apex
/// extension of a K5 or K3,3 diagram evaluates to 1.
pub fn cg_sum(s: &SpatialDiagram) -> Result<u8> {
    let k6 = crate::graph::standard_graph(GraphName::Complete(6)).unwrap();
    let k331 = crate::graph::standard_graph(GraphName::K331).unwrap();
    if isomorphic(&s.graph, &k6)? {
        let mut sum = 0;
        for i in 1..6 {
            for j in i + 1..6 {
                let t1 = vec![0, i, j];
                let t2: Vec<usize> = (1..6).filter(|v| *v != i && *v != j).collect();
                sum ^= lk2_cycle_cycle(s, &t1, &t2)?;
            }
        }
        Ok(sum)
    } else if isomorphic(&s.graph, &k331)? {
        let cycles = simple_cycles(&s.graph);
        let masks: Vec<u32> = cycles
            .iter()
            .map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        let mut sum = 0;
        for i in 0..cycles.len() {
            for j in i + 1..cycles.len() {
                if masks[i] & masks[j] == 0 {
                    sum ^= lk2_cycle_cycle(s, &cycles[i], &cycles[j])?;
                }
            }
        }
        Ok(sum)
    } else {
        Err(Error::UnsupportedGraph {
            operation: "cg_sum",
            expected: "a spatial K6 or K3,3,1",
        })
    }
}

/// Searches every cyclic order for a two-page assignment: chords that
/// interleave must land on different pages, so the pages exist exactly
/// when the interleaving-conflict graph is bipartite. Page-one edges are
/// drawn over page-two edges, which makes every cycle/edge link vanish;
/// the result is checked before it is returned. `None` is honest but
/// partial: no diagram was found within the vertex bound.
pub fn two_page_linkless_diagram(g: &Graph) -> Option<OuterDiagram> {
    let n = g.vertex_count();
    if n > MAX_TWO_PAGE_VERTICES {
        return None;
    }
    if n < 3 {
        let d = convex_diagram(g, &CyclicOrder::identity(n), &OverRule::LexicographicOver)
            .expect("identity order always fits");
        return Some(d);
    }
    let edges = g.edges();
    for order in crate::s1link::enumerate_cyclic_orders(g).expect("bounds already checked") {
        let pairs = convex_crossing_pairs(g, &order);
        let index: BTreeMap<Edge, usize> = edges.iter().copied().zip(0..).collect();
        let mut conflicts = vec![Vec::new(); edges.len()];
        for &(e, f) in &pairs {
            conflicts[index[&e]].push(index[&f]);
            conflicts[index[&f]].push(index[&e]);
        }
        let mut page = vec![usize::MAX; edges.len()];
        let mut bipartite = true;
        'color: for start in 0..edges.len() {
            if page[start] != usize::MAX {
                continue;
            }
            page[start] = 0;
            let mut queue = vec![start];
            while let Some(i) = queue.pop() {
                for &j in &conflicts[i] {
                    if page[j] == usize::MAX {
                        page[j] = 1 - page[i];
                        queue.push(j);
                    } else if page[j] == page[i] {
                        bipartite = false;
                        break 'color;
                    }
                }
            }
        }
        if !bipartite {
            continue;
        }
        let map: BTreeMap<(Edge, Edge), Edge> = pairs
            .iter()
            .map(|&(e, f)| {
                let over = if page[index[&e]] == 0 { e } else { f };
                ((e, f), over)
            })
            .collect();
        let d = convex_diagram(g, &order, &OverRule::Explicit(map))
            .expect("order and graph are consistent");
        assert!(
            find_nonsplit_outer_link(&d).is_none(),
            "a two-page diagram must have no non-split link"
        );
        return Some(d);
    }
    None
}
