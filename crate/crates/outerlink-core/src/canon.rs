use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonicalization tries vertex orders, so the bound keeps the worst case
/// (regular graphs, where degrees give no pruning) affordable.
pub const MAX_CANONICAL_VERTICES: usize = 10;

/// Largest n for which `enumerate_graphs` sweeps all 2^(n(n-1)/2) edge sets.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// Complete isomorphism invariant: the lexicographically least upper-triangle
/// bit string over all vertex orders with non-increasing degrees. Bits run
/// column by column, (0,1), (0,2), (1,2), (0,3), ..., most significant first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalLabel {
    n: u8,
    code: u64,
}

impl CanonicalLabel {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// The canonical representative of the class: decoding the code bits.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut g = Graph::new(n).unwrap();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (total - 1 - idx) & 1 != 0 {
                    g = g.with_edge(i, j).unwrap();
                }
                idx += 1;
            }
        }
        g
    }
}

/// Minimizes the adjacency code over the orders that list degrees in
/// non-increasing order. Isomorphisms preserve degrees, so they permute
/// these orders among themselves and isomorphic graphs reach the same set
/// of codes; conversely, equal codes mean both graphs decode to the same
/// representative. The restricted minimum is therefore a complete
/// invariant, even though it is not the minimum over all n! orders.
pub fn canonical_form(g: &Graph) -> Result<CanonicalLabel> {
    let n = g.vertex_count();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::SizeBound {
            operation: "canonical_form",
            bound: MAX_CANONICAL_VERTICES,
            actual: n,
        });
    }
    let total = n * n.saturating_sub(1) / 2;
    if n < 2 {
        return Ok(CanonicalLabel { n: n as u8, code: 0 });
    }

    let mut target: Vec<usize> = g.degrees();
    target.sort_unstable_by(|a, b| b.cmp(a));

    struct Search<'a> {
        g: &'a Graph,
        target: Vec<usize>,
        total: u32,
        placed: Vec<usize>,
        best: Option<u64>,
    }

    impl Search<'_> {
        fn run(&mut self, used: u32, partial: u64) {
            let k = self.placed.len();
            let n = self.g.vertex_count();
            if k == n {
                if self.best.map_or(true, |b| partial < b) {
                    self.best = Some(partial);
                }
                return;
            }
            for v in 0..n {
                if used & (1 << v) != 0 || self.g.degree(v) != self.target[k] {
                    continue;
                }
                let mut col = 0u64;
                for &p in &self.placed {
                    col = col << 1 | u64::from(self.g.has_edge(p, v));
                }
                let next = partial << k | col;
                let bits = (k * (k + 1) / 2) as u32;
                if let Some(best) = self.best {
                    if next > best >> (self.total - bits) {
                        continue;
                    }
                }
                self.placed.push(v);
                self.run(used | 1 << v, next);
                self.placed.pop();
            }
        }
    }

    let mut search = Search {
        g,
        target,
        total: total as u32,
        placed: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0);
    Ok(CanonicalLabel {
        n: n as u8,
        code: search.best.unwrap(),
    })
}

pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// One representative per isomorphism class on exactly `n` vertices,
/// sorted by canonical code. Each representative is itself canonical.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_VERTICES {
        return Err(Error::SizeBound {
            operation: "enumerate_graphs",
            bound: MAX_ENUMERATION_VERTICES,
            actual: n,
        });
    }
    let total = n * (n - 1) / 2;
    let mut pairs = Vec::with_capacity(total);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut codes = BTreeSet::new();
    for mask in 0u64..1 << total {
        let mut degree = [0usize; MAX_ENUMERATION_VERTICES];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 != 0 {
                degree[i] += 1;
                degree[j] += 1;
            }
        }
        // Every class has a labeling with non-increasing degrees, so the
        // rest of the masks are redundant for class discovery.
        if degree[..n].windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let mut g = Graph::new(n)?;
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 != 0 {
                g = g.with_edge(i, j)?;
            }
        }
        codes.insert(canonical_form(&g)?);
    }
    Ok(codes.iter().map(CanonicalLabel::to_graph).collect())
}
