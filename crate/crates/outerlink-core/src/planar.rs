use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::minor::{find_obstruction, Obstruction, ObstructionKind, MAX_MINOR_HOST};
use crate::s1link::CyclicOrder;

/// Cyclic neighbor order at every vertex. Rotations at cut vertices keep
/// each block's neighbors in one contiguous run, so the rotation at an
/// apex vertex can be read directly as a circular order of the rest.
#[derive(Clone, Debug)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn rotation_at(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    /// Confirms the rotation lists the right neighbors and that tracing
    /// faces satisfies Euler's formula in every component. Returns the
    /// face count, summed over components (each counts its own outer face).
    pub fn validate(&self, g: &Graph) -> Result<usize> {
        let n = g.vertex_count();
        let planarity_failure =
            |reason: String| Err(Error::InvalidGraph(format!("rotation system: {reason}")));
        if self.rot.len() != n {
            return planarity_failure(format!("{} lists for {n} vertices", self.rot.len()));
        }
        for v in 0..n {
            let mut listed: Vec<usize> = self.rot[v].clone();
            listed.sort_unstable();
            listed.dedup();
            let neighbors: Vec<usize> = g.neighbors(v).collect();
            if listed != neighbors || self.rot[v].len() != neighbors.len() {
                return planarity_failure(format!("list at {v} does not match its neighborhood"));
            }
        }
        let mut total = 0;
        for comp in g.components() {
            if comp.len() == 1 {
                total += 1;
                continue;
            }
            let mut seen: HashSet<(usize, usize)> = HashSet::new();
            let mut faces = 0;
            let mut edge_count = 0;
            for &u in &comp {
                for v in g.neighbors(u) {
                    edge_count += 1;
                    if seen.contains(&(u, v)) {
                        continue;
                    }
                    faces += 1;
                    let (mut a, mut b) = (u, v);
                    loop {
                        seen.insert((a, b));
                        let pos = self.rot[b].iter().position(|&w| w == a).unwrap();
                        let next = self.rot[b][(pos + 1) % self.rot[b].len()];
                        (a, b) = (b, next);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                }
            }
            let edge_count = edge_count / 2;
            if comp.len() + faces != edge_count + 2 {
                return planarity_failure(format!(
                    "component {comp:?} traces {faces} faces on {edge_count} edges, violating Euler"
                ));
            }
            total += faces;
        }
        Ok(total)
    }
}

#[derive(Clone, Debug)]
pub struct PlanarityResult {
    pub planar: bool,
    pub rotation: Option<RotationSystem>,
    pub face_count: Option<usize>,
    pub obstruction: Option<Obstruction>,
}

#[derive(Clone, Debug)]
pub struct OuterplanarityResult {
    pub outerplanar: bool,
    pub boundary_order: Option<CyclicOrder>,
    pub obstruction: Option<Obstruction>,
}

/// Decides planarity by embedding every biconnected block with Demoucron's
/// incremental path addition and splicing the block rotations together at
/// cut vertices. A successful embedding is always re-validated against
/// Euler's formula; failure hands back a K5 or K3,3 minor witness when the
/// graph is small enough for the minor search.
pub fn is_planar(g: &Graph) -> PlanarityResult {
    match build_rotation(g) {
        Some(rot) => {
            let rotation = RotationSystem { rot };
            let faces = rotation
                .validate(g)
                .expect("embedding produced an invalid rotation system");
            PlanarityResult {
                planar: true,
                rotation: Some(rotation),
                face_count: Some(faces),
                obstruction: None,
            }
        }
        None => {
            let obstruction = if g.vertex_count() <= MAX_MINOR_HOST {
                let found = find_obstruction(g, &[ObstructionKind::K5, ObstructionKind::K33])
                    .expect("host size already checked");
                Some(found.expect("a non-planar graph must contain a K5 or K3,3 minor"))
            } else {
                None
            };
            PlanarityResult {
                planar: false,
                rotation: None,
                face_count: None,
                obstruction,
            }
        }
    }
}

/// Outerplanarity via the apex construction: g is outerplanar exactly when
/// g joined with one universal vertex stays planar, and in that case the
/// rotation at the apex reads off a boundary order for g. On failure the
/// obstruction is a K4 or K3,2 minor of g itself.
pub fn is_outerplanar(g: &Graph) -> OuterplanarityResult {
    let apexed = g.join_apex();
    let apex = g.vertex_count();
    let pr = is_planar(&apexed);
    if pr.planar {
        let rotation = pr.rotation.unwrap();
        let order = CyclicOrder::new(rotation.rotation_at(apex).to_vec())
            .expect("apex rotation lists each vertex once");
        OuterplanarityResult {
            outerplanar: true,
            boundary_order: Some(order),
            obstruction: None,
        }
    } else {
        let obstruction = if g.vertex_count() <= MAX_MINOR_HOST {
            let found = find_obstruction(g, &[ObstructionKind::K4, ObstructionKind::K32])
                .expect("host size already checked");
            Some(found.expect("a non-outerplanar graph must contain a K4 or K3,2 minor"))
        } else {
            None
        };
        OuterplanarityResult {
            outerplanar: false,
            boundary_order: None,
            obstruction,
        }
    }
}

fn build_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for block in blocks(g) {
        if block.len() == 1 {
            let e = block[0];
            rot[e.u()].push(e.v());
            rot[e.v()].push(e.u());
            continue;
        }
        let mut verts: Vec<usize> = block
            .iter()
            .flat_map(|e| [e.u(), e.v()])
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let local = g.induced(&verts);
        debug_assert_eq!(local.edge_count(), block.len());
        let faces = demoucron(&local)?;
        for (lv, run) in rotation_from_faces(&local, &faces).into_iter().enumerate() {
            rot[verts[lv]].extend(run.into_iter().map(|lw| verts[lw]));
        }
    }
    Some(rot)
}

/// Biconnected blocks as edge lists, via the lowpoint edge stack.
fn blocks(g: &Graph) -> Vec<Vec<Edge>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<u32>,
        low: Vec<u32>,
        time: u32,
        stack: Vec<Edge>,
        out: Vec<Vec<Edge>>,
    }

    fn dfs(st: &mut State, u: usize, parent: usize) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        let neighbors: Vec<usize> = st.g.neighbors(u).collect();
        for w in neighbors {
            if st.disc[w] == 0 {
                st.stack.push(Edge::new(u, w));
                dfs(st, w, u);
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let closing = Edge::new(u, w);
                    let mut block = Vec::new();
                    loop {
                        let e = st.stack.pop().unwrap();
                        block.push(e);
                        if e == closing {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            } else if w != parent && st.disc[w] < st.disc[u] {
                st.stack.push(Edge::new(u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }

    let mut st = State {
        g,
        disc: vec![0; g.vertex_count()],
        low: vec![0; g.vertex_count()],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in g.vertices() {
        if st.disc[v] == 0 {
            dfs(&mut st, v, usize::MAX);
        }
    }
    st.out
}

/// Some cycle of a graph with minimum degree 2: walk to the smallest
/// neighbor other than the previous vertex until a repeat closes it.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let mut pos = vec![usize::MAX; g.vertex_count()];
    let mut path = vec![0];
    pos[0] = 0;
    let mut prev = usize::MAX;
    loop {
        let cur = *path.last().unwrap();
        let next = g
            .neighbors(cur)
            .find(|&w| w != prev)
            .expect("every vertex of a biconnected block has degree >= 2");
        if pos[next] != usize::MAX {
            return path[pos[next]..].to_vec();
        }
        pos[next] = path.len();
        path.push(next);
        prev = cur;
    }
}

enum Bridge {
    Chord(Edge),
    Fragment { comp: u32, attachments: Vec<usize> },
}

impl Bridge {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Bridge::Chord(e) => vec![e.u(), e.v()],
            Bridge::Fragment { attachments, .. } => attachments.clone(),
        }
    }
}

/// Demoucron's planarity algorithm on a biconnected graph: start from any
/// cycle, then repeatedly route a path of some unembedded bridge through a
/// face containing all of that bridge's attachments, preferring bridges
/// that have only one admissible face. Returns the face cycles, or None
/// when some bridge has nowhere to go.
fn demoucron(bg: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = bg.vertex_count();
    let edges = bg.edges();
    let edge_index: BTreeMap<Edge, usize> = edges.iter().copied().zip(0..).collect();
    let mut embedded = vec![false; edges.len()];
    let mut in_h = 0u32;

    let cycle = find_cycle(bg);
    for (i, &v) in cycle.iter().enumerate() {
        in_h |= 1 << v;
        let e = Edge::new(v, cycle[(i + 1) % cycle.len()]);
        embedded[edge_index[&e]] = true;
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded.iter().any(|&b| !b) {
        let mut bridges = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            if !embedded[i] && in_h >> e.u() & 1 != 0 && in_h >> e.v() & 1 != 0 {
                bridges.push(Bridge::Chord(*e));
            }
        }
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut unassigned = !in_h & all;
        while unassigned != 0 {
            let seed = 1u32 << unassigned.trailing_zeros();
            let mut comp = seed;
            loop {
                let mut grown = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    grown |= bg.neighbor_mask(v) & !in_h;
                    m &= m - 1;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            unassigned &= !comp;
            let mut attachments = Vec::new();
            for h in 0..n {
                if in_h >> h & 1 != 0 && bg.neighbor_mask(h) & comp != 0 {
                    attachments.push(h);
                }
            }
            bridges.push(Bridge::Fragment { comp, attachments });
        }

        let admissible: Vec<Vec<usize>> = bridges
            .iter()
            .map(|b| {
                let att = b.attachments();
                faces
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| att.iter().all(|a| f.contains(a)))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        if admissible.iter().any(Vec::is_empty) {
            return None;
        }
        let pick = admissible
            .iter()
            .position(|fs| fs.len() == 1)
            .unwrap_or(0);
        let face_idx = admissible[pick][0];

        let path = match &bridges[pick] {
            Bridge::Chord(e) => vec![e.u(), e.v()],
            Bridge::Fragment { comp, attachments } => {
                bridge_path(bg, *comp, attachments)
            }
        };
        for pair in path.windows(2) {
            embedded[edge_index[&Edge::new(pair[0], pair[1])]] = true;
        }
        for &v in &path[1..path.len() - 1] {
            in_h |= 1 << v;
        }
        split_face(&mut faces, face_idx, &path);
    }
    Some(faces)
}

/// Shortest path from the smallest attachment through the fragment's
/// interior to any other attachment.
fn bridge_path(bg: &Graph, comp: u32, attachments: &[usize]) -> Vec<usize> {
    let a = attachments[0];
    let n = bg.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue: Vec<usize> = Vec::new();
    for w in bg.neighbors(a) {
        if comp >> w & 1 != 0 && parent[w] == usize::MAX {
            parent[w] = a;
            queue.push(w);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for w in bg.neighbors(x) {
            if comp >> w & 1 != 0 {
                if parent[w] == usize::MAX {
                    parent[w] = x;
                    queue.push(w);
                }
            } else if w != a && attachments.contains(&w) {
                let mut path = vec![w, x];
                let mut cur = x;
                while cur != a {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
        }
    }
    unreachable!("a fragment of a biconnected block reaches two attachments");
}

/// Replaces face `idx` by the two faces obtained by routing `path` (whose
/// endpoints lie on the face) across it. Directions are arranged so every
/// directed edge still lies in exactly one face.
fn split_face(faces: &mut Vec<Vec<usize>>, idx: usize, path: &[usize]) {
    let f = faces[idx].clone();
    let len = f.len();
    let a = path[0];
    let b = path[path.len() - 1];
    let ia = f.iter().position(|&x| x == a).unwrap();
    let ib = f.iter().position(|&x| x == b).unwrap();
    let arc = |from: usize, to: usize| {
        let mut out = vec![f[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % len;
            out.push(f[i]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = arc(ia, ib);
    f1.extend(interior.iter().rev());
    let mut f2 = arc(ib, ia);
    f2.extend(interior.iter());
    faces[idx] = f1;
    faces.push(f2);
}

/// Rotation lists of a block from its face cycles: each face triple
/// p -> v -> q contributes "q follows p" at v, and walking those
/// successions from the smallest neighbor writes out the cyclic order.
fn rotation_from_faces(local: &Graph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = local.vertex_count();
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for f in faces {
        let len = f.len();
        for i in 0..len {
            let p = f[(i + len - 1) % len];
            let v = f[i];
            let q = f[(i + 1) % len];
            succ[v].insert(p, q);
        }
    }
    (0..n)
        .map(|v| {
            let &start = succ[v].keys().next().expect("block vertices have neighbors");
            let mut run = vec![start];
            let mut cur = succ[v][&start];
            while cur != start {
                run.push(cur);
                cur = succ[v][&cur];
            }
            debug_assert_eq!(run.len(), local.degree(v));
            run
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::standard_graph;

    fn named(s: &str) -> Graph {
        standard_graph(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn planar_face_counts() {
        for (name, faces) in [("K4", 4), ("C5", 2), ("P4", 1), ("K2", 1)] {
            let pr = is_planar(&named(name));
            assert!(pr.planar, "{name}");
            assert_eq!(pr.face_count, Some(faces), "{name}");
        }
        let wheel = named("C5").join_apex();
        assert_eq!(is_planar(&wheel).face_count, Some(6));
    }

    #[test]
    fn near_obstructions_are_planar() {
        let k5e = named("K5").delete_edge(Edge::new(0, 1)).unwrap();
        let pr = is_planar(&k5e);
        assert!(pr.planar);
        assert_eq!(pr.face_count, Some(6));

        let k33e = named("K33").delete_edge(Edge::new(0, 3)).unwrap();
        assert!(is_planar(&k33e).planar);
    }

    #[test]
    fn nonplanar_with_witnesses() {
        let k5 = named("K5");
        let pr = is_planar(&k5);
        assert!(!pr.planar);
        let ob = pr.obstruction.unwrap();
        assert_eq!(ob.kind, ObstructionKind::K5);
        assert_eq!(
            ob.witness.branch_sets(),
            [[0], [1], [2], [3], [4]]
        );

        let pr33 = is_planar(&named("K33"));
        let ob33 = pr33.obstruction.unwrap();
        assert_eq!(ob33.kind, ObstructionKind::K33);
        ob33.witness.validate(&named("K33"), &ObstructionKind::K33.graph()).unwrap();

        for name in ["K6", "K331", "Petersen"] {
            let g = named(name);
            let pr = is_planar(&g);
            assert!(!pr.planar, "{name}");
            let ob = pr.obstruction.unwrap();
            ob.witness.validate(&g, &ob.kind.graph()).unwrap();
        }
    }

    #[test]
    fn obstruction_omitted_beyond_minor_bound() {
        // K5 plus isolated vertices: still non-planar, too big to search.
        let mut g = Graph::new(13).unwrap();
        for i in 0..5 {
            for j in i + 1..5 {
                g = g.with_edge(i, j).unwrap();
            }
        }
        let pr = is_planar(&g);
        assert!(!pr.planar);
        assert!(pr.obstruction.is_none());
    }

    #[test]
    fn disconnected_graphs() {
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let pr = is_planar(&two_triangles);
        assert!(pr.planar);
        assert_eq!(pr.face_count, Some(4));
        assert!(is_planar(&Graph::new(0).unwrap()).planar);
    }

    #[test]
    fn cut_vertex_rotation_is_contiguous() {
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let pr = is_planar(&bowtie);
        assert!(pr.planar);
        let rot = pr.rotation.unwrap();
        let at0 = rot.rotation_at(0);
        assert_eq!(at0.len(), 4);
        // The first triangle's neighbors {1,2} must sit next to each other.
        let p1 = at0.iter().position(|&w| w == 1).unwrap();
        let p2 = at0.iter().position(|&w| w == 2).unwrap();
        let gap = (p1 as i32 - p2 as i32).rem_euclid(4);
        assert!(gap == 1 || gap == 3, "rotation {at0:?} splits a block");
    }

    #[test]
    fn validate_rejects_twisted_rotations() {
        // K4 with a rotation that swaps one list out of a planar scheme:
        // the count of neighbors still matches, Euler does not.
        let k4 = named("K4");
        let pr = is_planar(&k4);
        let good = pr.rotation.unwrap();
        let mut rot: Vec<Vec<usize>> = good.rotations().to_vec();
        rot[0].swap(0, 1);
        let twisted = RotationSystem { rot };
        assert!(twisted.validate(&k4).is_err());
    }

    #[test]
    fn outerplanar_basics() {
        let c5 = named("C5");
        let res = is_outerplanar(&c5);
        assert!(res.outerplanar);
        assert_eq!(res.boundary_order.unwrap().as_slice(), [0, 1, 2, 3, 4]);

        let diamond = named("K4").delete_edge(Edge::new(0, 1)).unwrap();
        assert!(is_outerplanar(&diamond).outerplanar);

        let fan = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (0, 3), (0, 4)])
            .unwrap();
        assert!(is_outerplanar(&fan).outerplanar);

        assert!(is_outerplanar(&Graph::new(2).unwrap()).outerplanar);
    }

    #[test]
    fn outerplanar_obstructions() {
        let res4 = is_outerplanar(&named("K4"));
        assert!(!res4.outerplanar);
        assert_eq!(res4.obstruction.as_ref().unwrap().kind, ObstructionKind::K4);

        let res32 = is_outerplanar(&named("K32"));
        assert!(!res32.outerplanar);
        let ob = res32.obstruction.unwrap();
        assert_eq!(ob.kind, ObstructionKind::K32);
        ob.witness.validate(&named("K32"), &ObstructionKind::K32.graph()).unwrap();

        assert_eq!(
            is_outerplanar(&named("K33")).obstruction.unwrap().kind,
            ObstructionKind::K4
        );
    }

    #[test]
    fn boundary_orders_cover_disconnected_graphs() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        let res = is_outerplanar(&g);
        assert!(res.outerplanar);
        assert_eq!(res.boundary_order.unwrap().len(), 5);
    }
}
