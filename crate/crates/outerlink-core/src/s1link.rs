use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Brute force visits (n-1)!/2 cyclic orders, so cap the vertex count.
pub const MAX_BRUTEFORCE_VERTICES: usize = 10;

/// Placement of vertices 0..n on a circle, up to rotation and reflection.
/// The stored sequence is the dihedral representative: the smallest vertex
/// comes first and its successor is smaller than its predecessor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicOrder {
    seq: Vec<usize>,
}

impl CyclicOrder {
    pub fn new(seq: Vec<usize>) -> Result<CyclicOrder> {
        let n = seq.len();
        let mut seen = vec![false; n];
        for &v in &seq {
            if v >= n {
                return Err(Error::InvalidOrder(format!(
                    "entry {v} does not fit an order of {n} vertices"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidOrder(format!("vertex {v} repeats")));
            }
            seen[v] = true;
        }
        Ok(CyclicOrder {
            seq: normalize(seq),
        })
    }

    pub fn identity(n: usize) -> CyclicOrder {
        CyclicOrder {
            seq: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.seq.iter().position(|&w| w == v)
    }
}

fn normalize(mut seq: Vec<usize>) -> Vec<usize> {
    if seq.len() < 2 {
        return seq;
    }
    let start = seq.iter().position_min().unwrap();
    seq.rotate_left(start);
    if seq.len() >= 3 && seq[1] > seq[seq.len() - 1] {
        seq[1..].reverse();
    }
    seq
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.seq.iter().join(","))
    }
}

impl fmt::Debug for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicOrder{self}")
    }
}

/// Candidate non-split link: two edges with four distinct endpoints,
/// ordered so that `first < second` lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgePairLink {
    first: Edge,
    second: Edge,
}

impl EdgePairLink {
    pub fn new(a: Edge, b: Edge) -> Result<EdgePairLink> {
        if !a.disjoint(&b) {
            return Err(Error::InvalidLink(format!(
                "edges {a} and {b} share an endpoint"
            )));
        }
        Ok(EdgePairLink {
            first: a.min(b),
            second: a.max(b),
        })
    }

    pub fn first(&self) -> Edge {
        self.first
    }

    pub fn second(&self) -> Edge {
        self.second
    }
}

impl fmt::Display for EdgePairLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl fmt::Debug for EdgePairLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgePairLink{self}")
    }
}

/// Mod-2 linking number of two disjoint chords read off a raw vertex
/// sequence: 1 exactly when the endpoints of one edge separate the
/// endpoints of the other around the circle. Works on any duplicate-free
/// sequence that contains all four endpoints.
pub fn lk2_on_sequence(seq: &[usize], link: &EdgePairLink) -> Result<u8> {
    let pos = |v: usize| {
        seq.iter().position(|&w| w == v).ok_or_else(|| {
            Error::InvalidLink(format!("endpoint {v} is missing from the order"))
        })
    };
    let (a, b) = link.first.endpoints();
    let (c, d) = link.second.endpoints();
    let (pa, pb) = (pos(a)?, pos(b)?);
    let (lo, hi) = (pa.min(pb), pa.max(pb));
    let inside = |p: usize| lo < p && p < hi;
    Ok(u8::from(inside(pos(c)?) != inside(pos(d)?)))
}

pub fn lk2_s1(o: &CyclicOrder, link: &EdgePairLink) -> Result<u8> {
    lk2_on_sequence(o.as_slice(), link)
}

fn check_cover(o: &CyclicOrder, g: &Graph) -> Result<()> {
    if o.len() != g.vertex_count() {
        return Err(Error::InvalidOrder(format!(
            "order covers {} vertices, graph has {}",
            o.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

fn disjoint_pairs(g: &Graph) -> Vec<EdgePairLink> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if a.disjoint(&b) {
                out.push(EdgePairLink { first: a, second: b });
            }
        }
    }
    out
}

/// Sum of lk2 over all disjoint edge pairs of `g`, mod 2.
pub fn parity_sum(o: &CyclicOrder, g: &Graph) -> Result<u8> {
    check_cover(o, g)?;
    let mut sum = 0;
    for link in disjoint_pairs(g) {
        sum ^= lk2_s1(o, &link)?;
    }
    Ok(sum)
}

/// First linked pair in lexicographic order of (first edge, second edge).
pub fn find_nonsplit_link(o: &CyclicOrder, g: &Graph) -> Result<Option<EdgePairLink>> {
    check_cover(o, g)?;
    for link in disjoint_pairs(g) {
        if lk2_s1(o, &link)? == 1 {
            return Ok(Some(link));
        }
    }
    Ok(None)
}

/// Per-order census: every disjoint edge pair with its linking number,
/// the first linked pair if any, and the mod-2 total.
#[derive(Clone, Debug)]
pub struct S1LinkReport {
    pub pair_links: Vec<(EdgePairLink, u8)>,
    pub witness: Option<EdgePairLink>,
    pub parity: u8,
}

impl S1LinkReport {
    pub fn analyze(o: &CyclicOrder, g: &Graph) -> Result<S1LinkReport> {
        check_cover(o, g)?;
        let mut pair_links = Vec::new();
        let mut witness = None;
        let mut parity = 0;
        for link in disjoint_pairs(g) {
            let lk = lk2_s1(o, &link)?;
            if lk == 1 && witness.is_none() {
                witness = Some(link);
            }
            parity ^= lk;
            pair_links.push((link, lk));
        }
        Ok(S1LinkReport {
            pair_links,
            witness,
            parity,
        })
    }
}

/// All cyclic orders of the vertices of `g` up to rotation and reflection:
/// (n-1)!/2 of them, in lexicographic order of their representatives.
pub fn enumerate_cyclic_orders(g: &Graph) -> Result<Vec<CyclicOrder>> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::InvalidOrder(format!(
            "cyclic orders need at least 3 vertices, graph has {n}"
        )));
    }
    if n > MAX_BRUTEFORCE_VERTICES {
        return Err(Error::SizeBound {
            operation: "enumerate_cyclic_orders",
            bound: MAX_BRUTEFORCE_VERTICES,
            actual: n,
        });
    }
    let mut out = Vec::new();
    for rest in (1..n).permutations(n - 1) {
        // Fixing 0 first kills rotations; demanding successor < predecessor
        // kills reflections.
        if rest[0] > rest[n - 2] {
            continue;
        }
        let mut seq = Vec::with_capacity(n);
        seq.push(0);
        seq.extend(rest);
        out.push(CyclicOrder { seq });
    }
    Ok(out)
}

/// Outcome of the exhaustive decision: either every order carries a link,
/// or some order is exhibited with none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum S1Decision {
    Linked,
    LinklessOrder(CyclicOrder),
}

impl S1Decision {
    pub fn is_linked(&self) -> bool {
        matches!(self, S1Decision::Linked)
    }

    pub fn linkless_order(&self) -> Option<&CyclicOrder> {
        match self {
            S1Decision::Linked => None,
            S1Decision::LinklessOrder(o) => Some(o),
        }
    }
}

/// Checks every cyclic order. The first order with no non-split link (in
/// enumeration order) becomes the witness; graphs too small to hold two
/// disjoint edges are trivially unlinked.
pub fn is_intrinsically_s1_linked_bruteforce(g: &Graph) -> Result<S1Decision> {
    let n = g.vertex_count();
    if n > MAX_BRUTEFORCE_VERTICES {
        return Err(Error::SizeBound {
            operation: "is_intrinsically_s1_linked_bruteforce",
            bound: MAX_BRUTEFORCE_VERTICES,
            actual: n,
        });
    }
    if n < 4 {
        return Ok(S1Decision::LinklessOrder(CyclicOrder::identity(n)));
    }
    for o in enumerate_cyclic_orders(g)? {
        if find_nonsplit_link(&o, g)?.is_none() {
            return Ok(S1Decision::LinklessOrder(o));
        }
    }
    Ok(S1Decision::Linked)
}

/// Boundary order of an outerplanar graph, read off the rotation at an
/// apex joined to every vertex. Whiskers from the boundary circle reach
/// their vertices in rotation order inside the disk, so two disjoint edges
/// interleaving on the circle would have to cross in the planar drawing;
/// no non-split link survives.
pub fn linkless_order_from_outerplanar(g: &Graph) -> Result<CyclicOrder> {
    let res = crate::planar::is_outerplanar(g);
    let order = res.boundary_order.ok_or(Error::NotOuterplanar)?;
    debug_assert!(
        find_nonsplit_link(&order, g).unwrap().is_none(),
        "boundary order of an outerplanar graph carried a link"
    );
    Ok(order)
}
