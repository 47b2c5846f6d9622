use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphName};

pub const MAX_MINOR_HOST: usize = 12;
pub const MAX_MINOR_PATTERN: usize = 6;

/// One connected branch set per pattern vertex, disjoint in the host, with
/// a host edge between every pair of sets whose pattern vertices are
/// adjacent. Contracting each set recovers the pattern (plus extras).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    branch_sets: Vec<Vec<usize>>,
}

impl MinorWitness {
    pub fn branch_sets(&self) -> &[Vec<usize>] {
        &self.branch_sets
    }

    /// Re-checks the witness against the definition, independently of how
    /// the search found it.
    pub fn validate(&self, g: &Graph, h: &Graph) -> Result<()> {
        let fail = |reason: String| Err(Error::InvalidGraph(format!("bad minor witness: {reason}")));
        if self.branch_sets.len() != h.vertex_count() {
            return fail(format!(
                "{} branch sets for a pattern on {} vertices",
                self.branch_sets.len(),
                h.vertex_count()
            ));
        }
        let mut used = 0u32;
        let mut masks = Vec::with_capacity(self.branch_sets.len());
        for set in &self.branch_sets {
            if set.is_empty() {
                return fail("empty branch set".into());
            }
            let mut mask = 0u32;
            for &v in set {
                if v >= g.vertex_count() {
                    return fail(format!("vertex {v} outside the host"));
                }
                mask |= 1 << v;
            }
            if mask & used != 0 {
                return fail("branch sets overlap".into());
            }
            used |= mask;
            if !mask_connected(g, mask) {
                return fail(format!("branch set {set:?} is not connected"));
            }
            masks.push(mask);
        }
        for e in h.edges() {
            let reach = neighborhood(g, masks[e.u()]);
            if reach & masks[e.v()] == 0 {
                return fail(format!("no host edge realizes pattern edge {e}"));
            }
        }
        Ok(())
    }
}

fn neighborhood(g: &Graph, mask: u32) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        out |= g.neighbor_mask(v);
        m &= m - 1;
    }
    out
}

fn mask_connected(g: &Graph, mask: u32) -> bool {
    if mask == 0 {
        return false;
    }
    let mut comp = mask & mask.wrapping_neg();
    loop {
        let grown = comp | neighborhood(g, comp) & mask;
        if grown == comp {
            return comp == mask;
        }
        comp = grown;
    }
}

/// Backtracking branch-set assignment. Pattern vertices are placed in
/// descending-degree order; candidates for each are the connected subsets
/// of the unused host vertices, smallest first, that leave room for the
/// rest and touch every earlier set they must be adjacent to. The witness
/// is revalidated before it is returned.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorWitness>> {
    if g.vertex_count() > MAX_MINOR_HOST {
        return Err(Error::SizeBound {
            operation: "has_minor host",
            bound: MAX_MINOR_HOST,
            actual: g.vertex_count(),
        });
    }
    if h.vertex_count() > MAX_MINOR_PATTERN {
        return Err(Error::SizeBound {
            operation: "has_minor pattern",
            bound: MAX_MINOR_PATTERN,
            actual: h.vertex_count(),
        });
    }
    let hn = h.vertex_count();
    if hn == 0 {
        return Ok(Some(MinorWitness { branch_sets: vec![] }));
    }
    if g.vertex_count() < hn || g.edge_count() < h.edge_count() {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..hn).collect();
    order.sort_by_key(|&v| (Reverse(h.degree(v)), v));

    fn place(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        chosen: &mut Vec<u32>,
        free: u32,
    ) -> Option<Vec<u32>> {
        let i = chosen.len();
        if i == order.len() {
            return Some(chosen.clone());
        }
        let hv = order[i];
        let later = (order.len() - i - 1) as u32;
        let mut required = Vec::new();
        for (j, &mask) in chosen.iter().enumerate() {
            if h.has_edge(order[j], hv) {
                required.push(neighborhood(g, mask));
            }
        }
        let mut candidates = Vec::new();
        let mut s = free;
        while s != 0 {
            if free.count_ones() - s.count_ones() >= later
                && required.iter().all(|&r| r & s != 0)
                && mask_connected(g, s)
            {
                candidates.push(s);
            }
            s = (s - 1) & free;
        }
        candidates.sort_unstable_by_key(|&m| (m.count_ones(), m));
        for s in candidates {
            chosen.push(s);
            if let Some(found) = place(g, h, order, chosen, free & !s) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    let all = (1u32 << g.vertex_count()) - 1;
    let Some(masks) = place(g, h, &order, &mut Vec::new(), all) else {
        return Ok(None);
    };
    let mut branch_sets = vec![Vec::new(); hn];
    for (i, &mask) in masks.iter().enumerate() {
        branch_sets[order[i]] = (0..g.vertex_count()).filter(|v| mask >> v & 1 != 0).collect();
    }
    let witness = MinorWitness { branch_sets };
    witness.validate(g, h)?;
    Ok(Some(witness))
}

/// The four minors whose absence characterizes outerplanarity (K4, K3,2)
/// and planarity (K5, K3,3).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionKind {
    K4,
    K32,
    K5,
    K33,
}

impl ObstructionKind {
    pub fn graph(self) -> Graph {
        let name = match self {
            ObstructionKind::K4 => GraphName::Complete(4),
            ObstructionKind::K32 => GraphName::CompleteBipartite(3, 2),
            ObstructionKind::K5 => GraphName::Complete(5),
            ObstructionKind::K33 => GraphName::CompleteBipartite(3, 3),
        };
        crate::graph::standard_graph(name).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            ObstructionKind::K4 => "K4",
            ObstructionKind::K32 => "K32",
            ObstructionKind::K5 => "K5",
            ObstructionKind::K33 => "K33",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub witness: MinorWitness,
}

/// First obstruction from `kinds` present in `g` as a minor.
pub fn find_obstruction(g: &Graph, kinds: &[ObstructionKind]) -> Result<Option<Obstruction>> {
    for &kind in kinds {
        if let Some(witness) = has_minor(g, &kind.graph())? {
            return Ok(Some(Obstruction { kind, witness }));
        }
    }
    Ok(None)
}
