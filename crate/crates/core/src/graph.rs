//! Simple undirected labeled graphs and the structural queries used
//! throughout the crate.
//!
//! Vertices are dense integer indices `0..n`. Labels are a sidecar map and
//! never influence any algorithm. Graphs are immutable after construction,
//! so everything here is a pure function.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::Error;

pub type Vertex = u32;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph {
    /// Builds a simple graph on vertices `0..n`. Edges are normalized to
    /// `u < v`, sorted, and checked for loops, duplicates, and range.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, Error> {
        let mut norm: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a as usize >= n || b as usize >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for n = {n}"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj, labels: BTreeMap::new() })
    }

    pub fn with_labels(
        mut self,
        labels: impl IntoIterator<Item = (Vertex, String)>,
    ) -> Result<Self, Error> {
        for (v, name) in labels {
            if v as usize >= self.n {
                return Err(Error::InvalidGraph(format!("label on missing vertex {v}")));
            }
            self.labels.insert(v, name);
        }
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.n as Vertex
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    /// Vertices carrying the given label.
    pub fn labeled(&self, name: &str) -> Vec<Vertex> {
        self.labels
            .iter()
            .filter(|(_, l)| l.as_str() == name)
            .map(|(&v, _)| v)
            .collect()
    }

    /// An edge is cubic when both of its endpoints have degree three.
    pub fn is_cubic_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.degree(u) == 3 && self.degree(v) == 3
    }

    pub fn cubic_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| self.is_cubic_edge(u, v))
            .collect()
    }

    /// True when every edge has at least one endpoint of degree two.
    pub fn every_edge_has_degree_two_endpoint(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.degree(u) == 2 || self.degree(v) == 2)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        let mut out = Vec::new();
        seen[start as usize] = true;
        while let Some(v) = stack.pop() {
            out.push(v);
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n as Vertex {
            if !seen[s as usize] {
                let comp = self.component_of(s);
                for &v in &comp {
                    seen[v as usize] = true;
                }
                comps.push(comp);
            }
        }
        comps
    }

    /// Deletes a vertex; the remaining vertices are renumbered downward.
    pub fn delete_vertex(&self, v: Vertex) -> Graph {
        let remap = |x: Vertex| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (remap(a), remap(b)));
        let mut g = Graph::new(self.n - 1, edges).expect("deletion preserves validity");
        g.labels = self
            .labels
            .iter()
            .filter(|(&x, _)| x != v)
            .map(|(&x, l)| (remap(x), l.clone()))
            .collect();
        g
    }

    /// Contracts the edge (u, v), merging into the smaller endpoint and
    /// collapsing any parallel edges that result.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, Error> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let remap = |x: Vertex| {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (remap(a), remap(b)))
            .filter(|&(a, b)| a != b);
        let mut g = Graph::new(self.n - 1, edges).expect("contraction preserves validity");
        g.labels = self
            .labels
            .iter()
            .filter(|(&x, _)| x != gone)
            .map(|(&x, l)| (remap(x), l.clone()))
            .collect();
        Ok(g)
    }
}

/// A set of edges tied to a particular graph; every member must be an edge
/// of that graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeSet {
    edges: Vec<(Vertex, Vertex)>,
}

impl EdgeSet {
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, Error> {
        let mut norm: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in edges {
            let e = (a.min(b), a.max(b));
            if !g.has_edge(e.0, e.1) {
                return Err(Error::NotAnEdge(a, b));
            }
            norm.push(e);
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(EdgeSet { edges: norm })
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }
}

/// A matching of a specific graph: pairwise non-adjacent edges. `cubic`
/// records whether every member edge has two degree-3 endpoints there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
    cubic: bool,
}

impl Matching {
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, Error> {
        let set = EdgeSet::new(g, edges)?;
        let edges = set.edges;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    return Err(Error::NotAMatching(a, b, c, d));
                }
            }
        }
        let cubic = edges.iter().all(|&(u, v)| g.is_cubic_edge(u, v));
        Ok(Matching { edges, cubic })
    }

    pub fn empty() -> Self {
        Matching { edges: Vec::new(), cubic: true }
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_cubic(&self) -> bool {
        self.cubic
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }
}

/// Contracts every edge of the matching at once. Each matched pair merges
/// into a single vertex named after the smaller endpoint, parallel edges
/// collapse, and vertices are renumbered densely. A matching on a simple
/// graph can never produce a self-loop.
pub fn contract_matching(g: &Graph, m: &Matching) -> Result<Graph, Error> {
    // Re-validate against this graph; the Matching may have been built
    // elsewhere.
    let m = Matching::new(g, m.edges().iter().copied())?;
    let mut rep: Vec<Vertex> = (0..g.n() as Vertex).collect();
    for &(u, v) in m.edges() {
        rep[v as usize] = u;
        rep[u as usize] = u;
    }
    let mut survivors: Vec<Vertex> = (0..g.n() as Vertex)
        .filter(|&v| rep[v as usize] == v)
        .collect();
    survivors.sort_unstable();
    let mut newid = vec![Vertex::MAX; g.n()];
    for (i, &v) in survivors.iter().enumerate() {
        newid[v as usize] = i as Vertex;
    }
    let remap = |x: Vertex| newid[rep[x as usize] as usize];
    let edges = g
        .edges()
        .iter()
        .map(|&(a, b)| (remap(a), remap(b)))
        .filter(|&(a, b)| a != b);
    let mut out = Graph::new(g.n() - m.len(), edges).expect("contraction preserves validity");
    out.labels = g
        .labels
        .iter()
        .filter(|(&x, _)| rep[x as usize] == x)
        .map(|(&x, l)| (remap(x), l.clone()))
        .collect();
    Ok(out)
}

/// Maps a vertex of `g` to its vertex in `contract_matching(g, m)`.
pub fn contraction_map(g: &Graph, m: &Matching) -> Vec<Vertex> {
    let mut rep: Vec<Vertex> = (0..g.n() as Vertex).collect();
    for &(u, v) in m.edges() {
        rep[v as usize] = u;
    }
    let survivors: Vec<Vertex> = (0..g.n() as Vertex)
        .filter(|&v| rep[v as usize] == v)
        .collect();
    let mut newid = vec![Vertex::MAX; g.n()];
    for (i, &v) in survivors.iter().enumerate() {
        newid[v as usize] = i as Vertex;
    }
    (0..g.n()).map(|x| newid[rep[x] as usize]).collect()
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<u32> {
    let mut best: Option<u32> = None;
    for s in 0..g.n() as Vertex {
        // BFS from s; a non-tree edge closes a cycle through the root of
        // length at most dist(x) + dist(y) + 1.
        let mut dist = vec![u32::MAX; g.n()];
        let mut parent = vec![Vertex::MAX; g.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[s as usize] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y as usize] == u32::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    parent[y as usize] = x;
                    queue.push_back(y);
                } else if parent[x as usize] != y {
                    let len = dist[x as usize] + dist[y as usize] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Exact edge density m/n.
pub fn density(g: &Graph) -> Result<Ratio<u64>, Error> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(Ratio::new(g.edge_count() as u64, g.n() as u64))
}

/// Replaces every edge with a path through `k` fresh internal vertices.
/// `k = 0` is the identity. Internal vertices of edge `i` (in sorted edge
/// order) are `n + i*k .. n + (i+1)*k` and carry no labels.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    if k == 0 {
        return g.clone();
    }
    let n = g.n() + g.edge_count() * k;
    let mut edges = Vec::with_capacity(g.edge_count() * (k + 1));
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let base = (g.n() + i * k) as Vertex;
        let mut prev = u;
        for j in 0..k as Vertex {
            edges.push((prev, base + j));
            prev = base + j;
        }
        edges.push((prev, v));
    }
    let mut out = Graph::new(n, edges).expect("subdivision preserves validity");
    out.labels = g.labels.clone();
    out
}

/// Tag for a one-step induced minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MinorOp {
    DeleteVertex(Vertex),
    ContractEdge(Vertex, Vertex),
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorOp::DeleteVertex(v) => write!(f, "delete vertex {v}"),
            MinorOp::ContractEdge(u, v) => write!(f, "contract edge ({u}, {v})"),
        }
    }
}

/// All graphs reachable by one vertex deletion or one edge contraction,
/// tagged with the producing operation. Exactly |V| + |E| entries.
pub fn one_step_minors(g: &Graph) -> Vec<(MinorOp, Graph)> {
    let mut out = Vec::with_capacity(g.n() + g.edge_count());
    for v in 0..g.n() as Vertex {
        out.push((MinorOp::DeleteVertex(v), g.delete_vertex(v)));
    }
    for &(u, v) in g.edges() {
        out.push((
            MinorOp::ContractEdge(u, v),
            g.contract_edge(u, v).expect("edge exists"),
        ));
    }
    out
}

/// K3 as a (not necessarily induced) subgraph.
pub fn has_triangle(g: &Graph) -> bool {
    for &(u, v) in g.edges() {
        // sorted adjacency lists: intersect
        let (mut i, mut j) = (0, 0);
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
    }
    false
}

/// K2,3 as a subgraph: two vertices with three common neighbors.
pub fn has_k23_subgraph(g: &Graph) -> bool {
    for u in 0..g.n() as Vertex {
        for v in u + 1..g.n() as Vertex {
            let (a, b) = (g.neighbors(u), g.neighbors(v));
            let (mut i, mut j, mut common) = (0, 0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        common += 1;
                        if common >= 3 {
                            return true;
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    false
}

/// Isomorphism by backtracking with degree-profile pruning. Adequate for
/// desk-scale graphs (tens of vertices), which is all this crate needs.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let n = g1.n();
    if n == 0 {
        return true;
    }
    let profile = |g: &Graph, v: Vertex| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let p1: Vec<_> = (0..n as Vertex).map(|v| profile(g1, v)).collect();
    let p2: Vec<_> = (0..n as Vertex).map(|v| profile(g2, v)).collect();
    {
        let mut s1 = p1.clone();
        let mut s2 = p2.clone();
        s1.sort();
        s2.sort();
        if s1 != s2 {
            return false;
        }
    }
    // map vertices of g1 in order of decreasing constraint
    let mut order: Vec<Vertex> = (0..n as Vertex).collect();
    order.sort_by(|&a, &b| p1[b as usize].cmp(&p1[a as usize]));
    let mut image = vec![Vertex::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        g1: &Graph,
        g2: &Graph,
        order: &[Vertex],
        k: usize,
        image: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
        p1: &[(usize, Vec<usize>)],
        p2: &[(usize, Vec<usize>)],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        'cand: for w in 0..g2.n() as Vertex {
            if used[w as usize] || p1[v as usize] != p2[w as usize] {
                continue;
            }
            for &u in g1.neighbors(v) {
                let iu = image[u as usize];
                if iu != Vertex::MAX && !g2.has_edge(iu, w) {
                    continue 'cand;
                }
            }
            // also reject if w is adjacent to an image of a non-neighbor
            for prior in &order[..k] {
                let ip = image[*prior as usize];
                if g2.has_edge(ip, w) && !g1.has_edge(*prior, v) {
                    continue 'cand;
                }
            }
            image[v as usize] = w;
            used[w as usize] = true;
            if extend(g1, g2, order, k + 1, image, used, p1, p2) {
                return true;
            }
            image[v as usize] = Vertex::MAX;
            used[w as usize] = false;
        }
        false
    }

    extend(g1, g2, &order, 0, &mut image, &mut used, &p1, &p2)
}

// ---------------------------------------------------------------------------
// Edge-list text format. First non-comment line "n m"; then m lines "u v";
// then optional "label v name" lines. '#' starts a comment line.
// ---------------------------------------------------------------------------

pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut labels: Vec<(Vertex, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if header.is_none() {
            if parts.len() != 2 {
                return Err(Error::Parse { line: lineno, msg: "expected header \"n m\"".into() });
            }
            let n = parts[0].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad vertex count {:?}", parts[0]),
            })?;
            let m = parts[1].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad edge count {:?}", parts[1]),
            })?;
            header = Some((n, m));
        } else if parts[0] == "label" {
            if parts.len() < 3 {
                return Err(Error::Parse { line: lineno, msg: "expected \"label v name\"".into() });
            }
            let v = parts[1].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad vertex {:?}", parts[1]),
            })?;
            labels.push((v, parts[2..].join(" ")));
        } else {
            if parts.len() != 2 {
                return Err(Error::Parse { line: lineno, msg: "expected edge \"u v\"".into() });
            }
            let u = parts[0].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad vertex {:?}", parts[0]),
            })?;
            let v = parts[1].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad vertex {:?}", parts[1]),
            })?;
            edges.push((u, v));
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)?.with_labels(labels)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    for (v, l) in g.labels() {
        out.push_str(&format!("label {v} {l}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n as Vertex).map(|i| (i, (i + 1) % n as Vertex))).unwrap()
    }

    pub fn complete(k: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..k as Vertex {
            for j in i + 1..k as Vertex {
                e.push((i, j));
            }
        }
        Graph::new(k, e).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..a as Vertex {
            for j in 0..b as Vertex {
                e.push((i, a as Vertex + j));
            }
        }
        Graph::new(a + b, e).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n as Vertex - 1).map(|i| (i, i + 1))).unwrap()
    }

    // independent cycle oracle: enumerate all simple cycles by DFS
    fn girth_oracle(g: &Graph) -> Option<u32> {
        let mut best: Option<u32> = None;
        fn dfs(
            g: &Graph,
            start: Vertex,
            v: Vertex,
            visited: &mut Vec<Vertex>,
            best: &mut Option<u32>,
        ) {
            for &w in g.neighbors(v) {
                if w == start && visited.len() >= 3 {
                    let len = visited.len() as u32;
                    if best.map_or(true, |b| len < b) {
                        *best = Some(len);
                    }
                } else if w > start && !visited.contains(&w) {
                    visited.push(w);
                    dfs(g, start, w, visited, best);
                    visited.pop();
                }
            }
        }
        for s in 0..g.n() as Vertex {
            let mut visited = vec![s];
            dfs(g, s, s, &mut visited, &mut best);
        }
        best
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::new(3, vec![(0, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 3)]).is_err());
        assert!(Graph::new(3, vec![(2, 0), (0, 2)]).is_ok()); // dedup
    }

    #[test]
    fn contract_empty_matching_is_identity() {
        let g = complete(5).with_labels(vec![(0, "x".to_string())]).unwrap();
        let h = contract_matching(&g, &Matching::empty()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn contraction_reduces_vertex_count_by_matching_size() {
        let g = cycle(10);
        let m = Matching::new(&g, vec![(0, 1), (4, 5), (7, 8)]).unwrap();
        let h = contract_matching(&g, &m).unwrap();
        assert_eq!(h.n(), 7);
        assert_eq!(h.edge_count(), 7); // C10 / 3 disjoint edges = C7
    }

    #[test]
    fn matching_validation() {
        let g = cycle(5);
        assert!(Matching::new(&g, vec![(0, 1), (1, 2)]).is_err());
        assert!(Matching::new(&g, vec![(0, 2)]).is_err()); // not an edge
        let m = Matching::new(&g, vec![(0, 1), (2, 3)]).unwrap();
        assert!(!m.is_cubic() || g.max_degree() == 3);
    }

    #[test]
    fn cubic_flag() {
        let k4 = complete(4);
        let m = Matching::new(&k4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(m.is_cubic());
        let p = path(4);
        let m2 = Matching::new(&p, vec![(1, 2)]).unwrap();
        assert!(!m2.is_cubic());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&subdivide(&complete_bipartite(3, 3), 1)), Some(8));
        assert_eq!(girth(&path(6)), None);
        assert_eq!(girth(&cycle(7)), Some(7));
        assert_eq!(girth(&complete(4)), Some(3));
    }

    #[test]
    fn girth_matches_cycle_enumeration_oracle() {
        // every graph on 5 vertices
        let pairs: Vec<(Vertex, Vertex)> =
            (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(5, edges).unwrap();
            assert_eq!(girth(&g), girth_oracle(&g), "mask {mask}");
        }
    }

    #[test]
    fn density_exact() {
        let c10 = cycle(10);
        assert_eq!(density(&c10).unwrap(), Ratio::new(1, 1));
        // 1-subdivision of any cubic graph has density 6/5
        let g = subdivide(&complete(4), 1);
        assert_eq!(density(&g).unwrap(), Ratio::new(6, 5));
        assert!(density(&Graph::new(0, vec![]).unwrap()).is_err());
    }

    #[test]
    fn subdivision_counts() {
        let s = subdivide(&complete_bipartite(3, 3), 1);
        assert_eq!((s.n(), s.edge_count()), (15, 18));
        let s5 = subdivide(&complete(5), 1);
        assert_eq!((s5.n(), s5.edge_count()), (15, 20));
        let g = complete(4);
        assert_eq!(subdivide(&g, 0), g);
    }

    #[test]
    fn subdivision_doubles_girth() {
        for g in [cycle(5), complete(4), complete_bipartite(3, 3), complete(5)] {
            let got = girth(&subdivide(&g, 1));
            assert_eq!(got, girth(&g).map(|x| 2 * x));
        }
    }

    #[test]
    fn one_step_minor_counts() {
        let k1 = Graph::new(1, vec![]).unwrap();
        let minors = one_step_minors(&k1);
        assert_eq!(minors.len(), 1);
        assert_eq!(minors[0].1.n(), 0);

        let s = subdivide(&complete_bipartite(3, 3), 1);
        assert_eq!(one_step_minors(&s).len(), 15 + 18);
    }

    #[test]
    fn triangle_and_k23() {
        assert!(!has_triangle(&complete_bipartite(3, 3)));
        assert!(has_k23_subgraph(&complete_bipartite(3, 3)));
        assert!(has_triangle(&complete(4)));
        // K4: no two vertices have 3 common neighbors
        assert!(!has_k23_subgraph(&complete(4)));
        assert!(has_k23_subgraph(&complete(5)));
    }

    #[test]
    fn k23_brute_force_oracle_on_k4() {
        // brute force over all 2+3 vertex selections
        let g = complete(4);
        let n = g.n() as Vertex;
        let mut found = false;
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                for x in 0..n {
                    for y in x + 1..n {
                        for z in y + 1..n {
                            if [x, y, z].contains(&a) || [x, y, z].contains(&b) {
                                continue;
                            }
                            if [x, y, z]
                                .iter()
                                .all(|&t| g.has_edge(a, t) && g.has_edge(b, t))
                            {
                                found = true;
                            }
                        }
                    }
                }
            }
        }
        assert!(!found);
        assert_eq!(has_k23_subgraph(&g), found);
    }

    #[test]
    fn isomorphism_basics() {
        let c5 = cycle(5);
        let relabeled = Graph::new(5, vec![(2, 4), (4, 1), (1, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_isomorphic(&c5, &relabeled));
        assert!(!is_isomorphic(&c5, &complete(5)));
        assert!(!is_isomorphic(&complete(4), &complete_bipartite(2, 2)));
        // same degree sequence, different graphs: C6 vs 2xC3
        let two_triangles =
            Graph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&cycle(6), &two_triangles));
    }

    #[test]
    fn isomorphism_is_equivalence_on_samples() {
        let gs = [cycle(6), complete(4), complete_bipartite(2, 3), path(5)];
        for g in &gs {
            assert!(is_isomorphic(g, g));
        }
        for a in &gs {
            for b in &gs {
                assert_eq!(is_isomorphic(a, b), is_isomorphic(b, a));
            }
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(4)
            .with_labels(vec![(0, "red".to_string()), (2, "blue".to_string())])
            .unwrap();
        let text = write_edge_list(&g);
        let h = parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
        assert!(parse_edge_list("2 1\n0 1\n0 1\n").is_err()); // count mismatch after dedup? no: duplicate edges
        assert!(parse_edge_list("# comment\n1 0\n").is_ok());
        assert!(parse_edge_list("abc").is_err());
    }

    #[test]
    fn contract_one_cycle_edge_of_cycle_graph() {
        let g = cycle(6);
        let h = g.contract_edge(0, 1).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(girth(&h), Some(5));
    }
}
