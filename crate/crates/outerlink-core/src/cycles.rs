use crate::graph::{Edge, Graph};

/// Whether `cycle` walks a simple cycle of `g`: at least 3 distinct
/// vertices with every consecutive pair (wrapping) an edge.
pub fn is_simple_cycle(g: &Graph, cycle: &[usize]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let mut seen = 0u32;
    for &v in cycle {
        if v >= g.vertex_count() || seen >> v & 1 != 0 {
            return false;
        }
        seen |= 1 << v;
    }
    cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .all(|(&a, &b)| g.has_edge(a, b))
}

/// The edges a cycle walks, in traversal order.
pub fn cycle_edges(cycle: &[usize]) -> Vec<Edge> {
    cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .map(|(&a, &b)| Edge::new(a, b))
        .collect()
}

/// Every simple cycle of `g` exactly once, written from its smallest
/// vertex with the smaller neighbor second, sorted lexicographically.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn dfs(g: &Graph, root: usize, path: &mut Vec<usize>, used: u32, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if w == root {
                if path.len() >= 3 && path[1] < last {
                    out.push(path.clone());
                }
            } else if w > root && used >> w & 1 == 0 {
                path.push(w);
                dfs(g, root, path, used | 1 << w, out);
                path.pop();
            }
        }
    }

    let mut out = Vec::new();
    for root in g.vertices() {
        dfs(g, root, &mut vec![root], 1 << root, &mut out);
    }
    out.sort();
    out
}
