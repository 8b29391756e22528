//! Planarity testing with embedding extraction, plus the two cycle-relative
//! tools the rest of the crate leans on: exterior-of-cycle drawability and
//! interlacement graphs of pieces.
//!
//! The planarity test is the face-insertion method (Demoucron–Malgrange–
//! Pertuiset): embed an initial cycle of each biconnected component, then
//! repeatedly route a path of some bridge through a face that contains all
//! of the bridge's attachments. A bridge with no admissible face certifies
//! non-planarity. Instances here are small, so the quadratic behavior is
//! irrelevant; what matters is determinism and that the successful runs
//! hand back a rotation system.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::Error;
use crate::graph::{Graph, Vertex};

// ---------------------------------------------------------------------------
// Rotation systems
// ---------------------------------------------------------------------------

/// A combinatorial embedding: the cyclic order of neighbors around each
/// vertex. Faces are the orbits of the walk that, arriving at `v` from `u`,
/// leaves toward the successor of `u` in the rotation at `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarEmbedding {
    rotation: Vec<Vec<Vertex>>,
}

impl PlanarEmbedding {
    pub fn rotation(&self) -> &[Vec<Vertex>] {
        &self.rotation
    }

    pub fn neighbors_cyclic(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v as usize]
    }

    /// Successor of `u` in the cyclic order at `v`.
    fn next_at(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rotation[v as usize];
        let i = rot.iter().position(|&x| x == u).expect("dart exists");
        rot[(i + 1) % rot.len()]
    }

    /// Face boundary walks, each a closed vertex sequence, traced from the
    /// lexicographically smallest unvisited dart.
    pub fn faces(&self) -> Vec<Vec<Vertex>> {
        let mut darts = BTreeSet::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for &w in rot {
                darts.insert((v as Vertex, w));
            }
        }
        let mut out = Vec::new();
        while let Some(&start) = darts.iter().next() {
            let mut walk = Vec::new();
            let mut dart = start;
            loop {
                darts.remove(&dart);
                walk.push(dart.0);
                let next = (dart.1, self.next_at(dart.1, dart.0));
                if next == start {
                    break;
                }
                dart = next;
            }
            out.push(walk);
        }
        out
    }

    pub fn face_count(&self, g: &Graph) -> usize {
        let faces = self.faces();
        // components with no edges contribute one face each
        let isolated = g.vertices().filter(|&v| g.degree(v) == 0).count();
        faces.len() + isolated
    }

    /// Euler check, per connected component: n - m + f = 2.
    pub fn euler_valid(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.n() {
            return false;
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v as Vertex) {
                return false;
            }
        }
        let comps = g.components();
        let mut comp_of = vec![0usize; g.n()];
        for (i, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v as usize] = i;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for face in self.faces() {
            face_count[comp_of[face[0] as usize]] += 1;
        }
        for (i, comp) in comps.iter().enumerate() {
            let n_c = comp.len() as i64;
            let m_c = comp
                .iter()
                .map(|&v| g.degree(v))
                .sum::<usize>() as i64
                / 2;
            let f_c = if m_c == 0 { 1 } else { face_count[i] as i64 };
            if n_c - m_c + f_c != 2 {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "rotation": self.rotation })
    }
}

// ---------------------------------------------------------------------------
// DMP embedding per biconnected component
// ---------------------------------------------------------------------------

#[derive(Debug)]
struct Bridge {
    attachments: Vec<Vertex>,
    interior: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

/// Embeds one 2-connected edge set (given as edges). Returns the oriented
/// face cycles on success.
fn embed_bcc(edges: &[(Vertex, Vertex)]) -> Option<Vec<Vec<Vertex>>> {
    debug_assert!(edges.len() >= 3);
    let mut verts: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let adj = |v: Vertex| -> Vec<Vertex> {
        let mut out: Vec<Vertex> = edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    };

    // initial cycle by DFS from the smallest vertex
    let cycle = {
        let start = verts[0];
        let mut parent: std::collections::BTreeMap<Vertex, Vertex> = Default::default();
        let mut stack = vec![start];
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut found: Option<(Vertex, Vertex)> = None;
        'dfs: while let Some(v) = stack.pop() {
            for w in adj(v) {
                if !seen.contains(&w) {
                    seen.insert(w);
                    parent.insert(w, v);
                    stack.push(w);
                } else if parent.get(&v) != Some(&w) {
                    found = Some((v, w));
                    break 'dfs;
                }
            }
        }
        let (v, w) = found?; // acyclic 2-connected edge set of size >= 3 cannot happen
        // walk v up to w via parents
        let mut path = vec![v];
        let mut x = v;
        while x != w {
            x = *parent.get(&x)?;
            path.push(x);
        }
        path
    };

    let mut embedded_edges: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let norm = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
    for i in 0..cycle.len() {
        embedded_edges.insert(norm(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut embedded_verts: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let mut faces: Vec<Vec<Vertex>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    let total_edges: BTreeSet<(Vertex, Vertex)> =
        edges.iter().map(|&(a, b)| norm(a, b)).collect();

    while embedded_edges.len() < total_edges.len() {
        // bridges relative to the embedded subgraph
        let mut bridges: Vec<Bridge> = Vec::new();
        // chords
        for &(a, b) in &total_edges {
            if !embedded_edges.contains(&(a, b))
                && embedded_verts.contains(&a)
                && embedded_verts.contains(&b)
            {
                bridges.push(Bridge {
                    attachments: vec![a, b],
                    interior: vec![],
                    edges: vec![(a, b)],
                });
            }
        }
        // components of the unembedded vertices
        let mut unseen: BTreeSet<Vertex> = verts
            .iter()
            .copied()
            .filter(|v| !embedded_verts.contains(v))
            .collect();
        while let Some(&s) = unseen.iter().next() {
            let mut comp = vec![s];
            unseen.remove(&s);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in adj(v) {
                    if unseen.contains(&w) {
                        unseen.remove(&w);
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            let compset: BTreeSet<Vertex> = comp.iter().copied().collect();
            let mut attach = BTreeSet::new();
            let mut bedges = Vec::new();
            for &(a, b) in &total_edges {
                let ina = compset.contains(&a);
                let inb = compset.contains(&b);
                if ina && inb {
                    bedges.push((a, b));
                } else if ina || inb {
                    let h = if ina { b } else { a };
                    if embedded_verts.contains(&h) {
                        attach.insert(h);
                        bedges.push((a, b));
                    }
                }
            }
            bridges.push(Bridge {
                attachments: attach.into_iter().collect(),
                interior: comp,
                edges: bedges,
            });
        }

        // admissible faces per bridge
        let admissible: Vec<Vec<usize>> = bridges
            .iter()
            .map(|br| {
                faces
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| br.attachments.iter().all(|a| f.contains(a)))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        if admissible.iter().any(|a| a.is_empty()) {
            return None;
        }
        let chosen = admissible
            .iter()
            .position(|a| a.len() == 1)
            .unwrap_or(0);
        let face_idx = admissible[chosen][0];
        let bridge = &bridges[chosen];

        // path through the bridge between two distinct attachments
        let path: Vec<Vertex> = if bridge.interior.is_empty() {
            vec![bridge.attachments[0], bridge.attachments[1]]
        } else {
            let a = bridge.attachments[0];
            let interior: BTreeSet<Vertex> = bridge.interior.iter().copied().collect();
            let mut parent: std::collections::BTreeMap<Vertex, Vertex> = Default::default();
            let mut queue = VecDeque::from([a]);
            let mut seen = BTreeSet::from([a]);
            let mut target = None;
            'bfs: while let Some(v) = queue.pop_front() {
                let nbrs: Vec<Vertex> = bridge
                    .edges
                    .iter()
                    .filter_map(|&(x, y)| {
                        if x == v {
                            Some(y)
                        } else if y == v {
                            Some(x)
                        } else {
                            None
                        }
                    })
                    .collect();
                for w in nbrs {
                    if seen.contains(&w) {
                        continue;
                    }
                    seen.insert(w);
                    parent.insert(w, v);
                    if interior.contains(&w) {
                        queue.push_back(w);
                    } else if w != a {
                        target = Some(w);
                        break 'bfs;
                    }
                }
            }
            let t = target?;
            let mut p = vec![t];
            let mut x = t;
            while x != a {
                x = parent[&x];
                p.push(x);
            }
            p.reverse();
            p
        };

        // split the face along the path
        let a = path[0];
        let b = *path.last().unwrap();
        let face = faces[face_idx].clone();
        let ia = face.iter().position(|&x| x == a).unwrap();
        let rotated: Vec<Vertex> = face[ia..].iter().chain(face[..ia].iter()).copied().collect();
        let p = rotated.iter().position(|&x| x == b).unwrap();
        let interior_fwd: Vec<Vertex> = path[1..path.len() - 1].to_vec();
        let mut face1: Vec<Vertex> = rotated[..p].to_vec();
        face1.push(b);
        face1.extend(interior_fwd.iter().rev());
        let mut face2: Vec<Vertex> = rotated[p..].to_vec();
        face2.push(a);
        face2.extend(interior_fwd.iter());
        faces[face_idx] = face1;
        faces.push(face2);

        for w in &path {
            embedded_verts.insert(*w);
        }
        for pair in path.windows(2) {
            embedded_edges.insert(norm(pair[0], pair[1]));
        }
    }
    Some(faces)
}

/// Rotation orders implied by a consistently oriented face set of a
/// 2-connected plane graph.
fn rotation_from_faces(faces: &[Vec<Vertex>], n: usize) -> Option<Vec<Vec<Vertex>>> {
    let mut succ: Vec<std::collections::BTreeMap<Vertex, Vertex>> = vec![Default::default(); n];
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let u = face[i];
            let v = face[(i + 1) % k];
            let w = face[(i + 2) % k];
            // in the rotation at v, w follows u
            if succ[v as usize].insert(u, w).is_some() {
                return None;
            }
        }
    }
    let mut rotation = vec![Vec::new(); n];
    for v in 0..n {
        if succ[v].is_empty() {
            continue;
        }
        let start = *succ[v].keys().next().unwrap();
        let mut order = vec![start];
        let mut x = succ[v][&start];
        while x != start {
            order.push(x);
            x = *succ[v].get(&x)?;
        }
        if order.len() != succ[v].len() {
            return None;
        }
        rotation[v] = order;
    }
    Some(rotation)
}

// ---------------------------------------------------------------------------
// Biconnected components
// ---------------------------------------------------------------------------

/// Edge sets of the biconnected components (classic lowpoint algorithm,
/// iterative). Bridges of the graph appear as single-edge components.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut comps: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
    let mut estack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut timer = 0usize;

    for root in 0..n as Vertex {
        if disc[root as usize] != usize::MAX {
            continue;
        }
        // frame: (vertex, parent, neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, Vertex::MAX, 0)];
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            let nbrs = g.neighbors(v);
            if *idx < nbrs.len() {
                let w = nbrs[*idx];
                *idx += 1;
                if disc[w as usize] == usize::MAX {
                    estack.push((v, w));
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w as usize] < disc[v as usize] {
                    estack.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p as usize] = low[p as usize].min(low[v as usize]);
                    if low[v as usize] >= disc[p as usize] {
                        // p is a cut vertex (or root): pop the component
                        let mut comp = Vec::new();
                        while let Some(&(a, b)) = estack.last() {
                            if disc[a as usize] >= disc[v as usize]
                                || (a == p && b == v)
                            {
                                comp.push((a.min(b), a.max(b)));
                                estack.pop();
                                if a == p && b == v {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        if !comp.is_empty() {
                            comp.sort_unstable();
                            comp.dedup();
                            comps.push(comp);
                        }
                    }
                }
            }
        }
    }
    comps
}

// ---------------------------------------------------------------------------
// Public planarity API
// ---------------------------------------------------------------------------

fn embed_internal(g: &Graph) -> Option<PlanarEmbedding> {
    let n = g.n();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for comp in biconnected_components(g) {
        if comp.len() == 1 {
            let (a, b) = comp[0];
            rotation[a as usize].push(b);
            rotation[b as usize].push(a);
            continue;
        }
        let faces = embed_bcc(&comp)?;
        let local = rotation_from_faces(&faces, n)?;
        for v in 0..n {
            rotation[v].extend(local[v].iter());
        }
    }
    let emb = PlanarEmbedding { rotation };
    debug_assert!(emb.euler_valid(g));
    Some(emb)
}

/// True exactly when the graph is planar.
pub fn is_planar(g: &Graph) -> bool {
    // a graph needs at least 9 edges to be non-planar (K3,3)
    if g.edge_count() < 9 {
        return true;
    }
    embed_internal(g).is_some()
}

/// A rotation system witnessing planarity, or an error carrying a
/// best-effort Kuratowski subdivision for non-planar input.
pub fn planar_embedding(g: &Graph) -> Result<PlanarEmbedding, Error> {
    match embed_internal(g) {
        Some(emb) => Ok(emb),
        None => Err(Error::NonPlanar { kuratowski: Some(kuratowski_witness(g)) }),
    }
}

/// Kind of a Kuratowski obstruction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside the host graph, as an edge list.
#[derive(Clone, Debug, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub edges: Vec<(Vertex, Vertex)>,
    pub branch_vertices: Vec<Vertex>,
}

/// Edge-minimal non-planar subgraph of a non-planar graph; by Kuratowski's
/// theorem this is a subdivision of K5 or K3,3.
pub fn kuratowski_witness(g: &Graph) -> KuratowskiWitness {
    assert!(!is_planar(g), "witness requested for planar graph");
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        let h = Graph::new(g.n(), trial.iter().copied()).expect("subgraph");
        if !is_planar(&h) {
            edges.remove(i);
        } else {
            i += 1;
        }
    }
    let h = Graph::new(g.n(), edges.iter().copied()).expect("subgraph");
    let mut branch: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    branch.sort_unstable();
    let kind = if branch.iter().all(|&v| h.degree(v) == 4) && branch.len() == 5 {
        KuratowskiKind::K5
    } else {
        debug_assert_eq!(branch.len(), 6);
        KuratowskiKind::K33
    };
    KuratowskiWitness { kind, edges, branch_vertices: branch }
}

// ---------------------------------------------------------------------------
// Cycle-relative tools
// ---------------------------------------------------------------------------

/// Checks that `c` is a simple cycle of `g` (length >= 3, consecutive
/// vertices adjacent, all distinct).
pub fn check_cycle(g: &Graph, c: &[Vertex]) -> Result<(), Error> {
    if c.len() < 3 {
        return Err(Error::NotACycle(format!("length {} < 3", c.len())));
    }
    let mut sorted = c.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != c.len() {
        return Err(Error::NotACycle("repeated vertex".into()));
    }
    if let Some(&v) = c.iter().find(|&&v| v as usize >= g.n()) {
        return Err(Error::NotACycle(format!("vertex {v} out of range")));
    }
    for i in 0..c.len() {
        let (u, v) = (c[i], c[(i + 1) % c.len()]);
        if !g.has_edge(u, v) {
            return Err(Error::NotACycle(format!("missing edge ({u}, {v})")));
        }
    }
    Ok(())
}

/// Can the graph be drawn with the spanning cycle `c` bounding a face and
/// every non-cycle edge strictly outside it? Implemented by planarity of
/// the graph augmented with an apex joined to every cycle vertex: the apex
/// can sit inside the face bounded by `c` exactly when that face can be
/// kept empty.
pub fn cycle_exterior_planar(g: &Graph, c: &[Vertex]) -> Result<bool, Error> {
    check_cycle(g, c)?;
    if c.len() != g.n() {
        return Err(Error::NotSpanningCycle);
    }
    let apex = g.n() as Vertex;
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(c.iter().map(|&v| (v, apex)));
    let aug = Graph::new(g.n() + 1, edges)?;
    Ok(is_planar(&aug))
}

/// One piece (bridge) of a graph relative to a cycle.
#[derive(Clone, Debug, Serialize)]
pub struct Piece {
    /// Vertices of the piece outside the cycle (empty for a chord).
    pub vertices: Vec<Vertex>,
    /// Cycle vertices the piece attaches to, in cycle order.
    pub attachments: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

/// Pieces of a graph relative to a cycle, with an edge between two pieces
/// whenever their attachments interleave around the cycle (strictly
/// alternate, or share three or more attachment vertices).
#[derive(Clone, Debug, Serialize)]
pub struct InterlacementGraph {
    pub pieces: Vec<Piece>,
    pub edges: Vec<(usize, usize)>,
}

impl InterlacementGraph {
    pub fn is_bipartite(&self) -> bool {
        let n = self.pieces.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut color = vec![-1i8; n];
        for s in 0..n {
            if color[s] != -1 {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if color[w] == -1 {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn attachments_interleave(pos_a: &[usize], pos_b: &[usize]) -> bool {
    let shared = pos_a.iter().filter(|p| pos_b.contains(p)).count();
    if shared >= 3 {
        return true;
    }
    // strict alternation a b a' b' in cyclic order, all four distinct
    let between = |x: usize, y: usize, t: usize| -> bool {
        // t strictly inside the cyclic arc from x to y
        if x < y {
            t > x && t < y
        } else {
            t > x || t < y
        }
    };
    for &a1 in pos_a {
        for &a2 in pos_a {
            if a1 == a2 {
                continue;
            }
            let b_in_1 = pos_b
                .iter()
                .any(|&b| b != a1 && b != a2 && between(a1, a2, b));
            let b_in_2 = pos_b
                .iter()
                .any(|&b| b != a1 && b != a2 && between(a2, a1, b));
            if b_in_1 && b_in_2 {
                return true;
            }
        }
    }
    false
}

/// Pieces of `g` with respect to the cycle `c`, and their interlacement.
pub fn interlacement_graph(g: &Graph, c: &[Vertex]) -> Result<InterlacementGraph, Error> {
    check_cycle(g, c)?;
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in c.iter().enumerate() {
        pos[v as usize] = i;
    }
    let on_cycle = |v: Vertex| pos[v as usize] != usize::MAX;
    let cyc_edge = |u: Vertex, v: Vertex| {
        let (a, b) = (pos[u as usize], pos[v as usize]);
        a != usize::MAX && b != usize::MAX && ((a + 1) % c.len() == b || (b + 1) % c.len() == a)
    };

    let mut pieces: Vec<Piece> = Vec::new();
    // chords
    for &(u, v) in g.edges() {
        if on_cycle(u) && on_cycle(v) && !cyc_edge(u, v) {
            let mut att = vec![u, v];
            att.sort_by_key(|&x| pos[x as usize]);
            pieces.push(Piece { vertices: vec![], attachments: att, edges: vec![(u, v)] });
        }
    }
    // components off the cycle
    let mut seen = vec![false; g.n()];
    for s in g.vertices() {
        if on_cycle(s) || seen[s as usize] {
            continue;
        }
        let mut comp = vec![s];
        seen[s as usize] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !on_cycle(w) && !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        let inset: BTreeSet<Vertex> = comp.iter().copied().collect();
        let mut att = BTreeSet::new();
        let mut pedges = Vec::new();
        for &(u, v) in g.edges() {
            let iu = inset.contains(&u);
            let iv = inset.contains(&v);
            if iu && iv {
                pedges.push((u, v));
            } else if iu || iv {
                let h = if iu { v } else { u };
                if on_cycle(h) {
                    att.insert(h);
                    pedges.push((u, v));
                }
            }
        }
        let mut att: Vec<Vertex> = att.into_iter().collect();
        att.sort_by_key(|&x| pos[x as usize]);
        pieces.push(Piece { vertices: comp, attachments: att, edges: pedges });
    }
    pieces.sort_by(|a, b| (&a.attachments, &a.vertices).cmp(&(&b.attachments, &b.vertices)));

    let mut iedges = Vec::new();
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            let pa: Vec<usize> = pieces[i]
                .attachments
                .iter()
                .map(|&v| pos[v as usize])
                .collect();
            let pb: Vec<usize> = pieces[j]
                .attachments
                .iter()
                .map(|&v| pos[v as usize])
                .collect();
            if attachments_interleave(&pa, &pb) {
                iedges.push((i, j));
            }
        }
    }
    Ok(InterlacementGraph { pieces, edges: iedges })
}

/// Density certificate of non-planarity: a connected graph with girth at
/// least `g` satisfies m/n <= g/(g-2), so m/n beyond that bound rules out
/// planarity before any embedding work.
pub fn euler_girth_reject(n: usize, m: usize, girth: u32) -> bool {
    assert!(n >= 3 && girth >= 3);
    // m/n > g/(g-2)  <=>  m (g-2) > n g
    (m as u128) * (girth as u128 - 2) > (n as u128) * (girth as u128)
}
