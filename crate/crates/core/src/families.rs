//! Generators for the named graphs and graph families used throughout:
//! necklaces and their apexed versions, LCF graphs [5,-5]^n with their
//! non-path matchings and face cycles, and the assorted named graphs
//! (Petersen, Heawood, SM10, KT3, ladders, antiprisms, completes).

use crate::error::Error;
use crate::graph::{Graph, Matching, Vertex};

/// LCF description: a Hamiltonian cycle on `jumps.len() * repeats` vertices
/// plus one chord per vertex, vertex k jumping by `jumps[k % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcfSpec {
    pub jumps: Vec<i64>,
    pub repeats: usize,
}

impl LcfSpec {
    pub fn new(jumps: Vec<i64>, repeats: usize) -> Self {
        LcfSpec { jumps, repeats }
    }

    pub fn vertex_count(&self) -> usize {
        self.jumps.len() * self.repeats
    }

    fn is_five_minus_five(&self) -> bool {
        self.jumps == [5, -5]
    }
}

/// Number of links in a necklace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NecklaceSpec {
    pub links: usize,
}

// ---------------------------------------------------------------------------
// Necklaces
// ---------------------------------------------------------------------------

/// Vertex layout for necklace(i): terminals 0..=i, then per link j (1-based)
/// red_j = i+2j-1 and blue_j = i+2j, then the pendant: center, two arm
/// vertices, the jewel's arm vertex, and the jewel last.
pub struct NecklaceLayout {
    pub links: usize,
}

impl NecklaceLayout {
    pub fn terminal(&self, j: usize) -> Vertex {
        debug_assert!(j <= self.links);
        j as Vertex
    }
    pub fn red(&self, j: usize) -> Vertex {
        debug_assert!(1 <= j && j <= self.links);
        (self.links + 2 * j - 1) as Vertex
    }
    pub fn blue(&self, j: usize) -> Vertex {
        (self.links + 2 * j) as Vertex
    }
    pub fn center(&self) -> Vertex {
        (3 * self.links + 1) as Vertex
    }
    pub fn arm_to_last_terminal(&self) -> Vertex {
        (3 * self.links + 2) as Vertex
    }
    pub fn arm_to_first_terminal(&self) -> Vertex {
        (3 * self.links + 3) as Vertex
    }
    pub fn jewel_arm(&self) -> Vertex {
        (3 * self.links + 4) as Vertex
    }
    pub fn jewel(&self) -> Vertex {
        (3 * self.links + 5) as Vertex
    }
    pub fn red_apex(&self) -> Vertex {
        (3 * self.links + 6) as Vertex
    }
    pub fn blue_apex(&self) -> Vertex {
        (3 * self.links + 7) as Vertex
    }
}

/// The necklace N_i: a cycle of i links (4-cycles through two white
/// terminals, one red and one blue vertex) closed by the pendant, a
/// 1-subdivided claw whose free leaf is the jewel. 3i + 6 vertices.
pub fn necklace(i: usize) -> Result<Graph, Error> {
    if i < 1 {
        return Err(Error::BadFamilyParams("necklace needs at least one link".into()));
    }
    let l = NecklaceLayout { links: i };
    let mut edges = Vec::new();
    for j in 1..=i {
        let (t0, t1) = (l.terminal(j - 1), l.terminal(j));
        edges.push((t0, l.red(j)));
        edges.push((l.red(j), t1));
        edges.push((t0, l.blue(j)));
        edges.push((l.blue(j), t1));
    }
    // pendant between the last terminal and terminal 0
    edges.push((l.terminal(i), l.arm_to_last_terminal()));
    edges.push((l.arm_to_last_terminal(), l.center()));
    edges.push((l.center(), l.arm_to_first_terminal()));
    edges.push((l.arm_to_first_terminal(), l.terminal(0)));
    edges.push((l.center(), l.jewel_arm()));
    edges.push((l.jewel_arm(), l.jewel()));

    let mut labels: Vec<(Vertex, String)> = Vec::new();
    for j in 0..=i {
        labels.push((l.terminal(j), "white".into()));
    }
    for j in 1..=i {
        labels.push((l.red(j), "red".into()));
        labels.push((l.blue(j), "blue".into()));
    }
    for v in [l.center(), l.arm_to_last_terminal(), l.arm_to_first_terminal(), l.jewel_arm()] {
        labels.push((v, "white".into()));
    }
    labels.push((l.jewel(), "jewel".into()));
    Graph::new(3 * i + 6, edges)?.with_labels(labels)
}

/// N̂_i: the necklace plus a red apex adjacent to every red vertex and the
/// jewel, and a blue apex adjacent to every blue vertex and the jewel.
/// 3i + 8 vertices, 6i + 8 edges.
pub fn necklace_hat(i: usize) -> Result<Graph, Error> {
    let base = necklace(i)?;
    let l = NecklaceLayout { links: i };
    let (ra, ba) = (l.red_apex(), l.blue_apex());
    let mut edges: Vec<(Vertex, Vertex)> = base.edges().to_vec();
    for j in 1..=i {
        edges.push((l.red(j), ra));
        edges.push((l.blue(j), ba));
    }
    edges.push((l.jewel(), ra));
    edges.push((l.jewel(), ba));
    let mut labels: Vec<(Vertex, String)> =
        base.labels().iter().map(|(&v, s)| (v, s.clone())).collect();
    labels.push((ra, "red-apex".into()));
    labels.push((ba, "blue-apex".into()));
    Graph::new(3 * i + 8, edges)?.with_labels(labels)
}

// ---------------------------------------------------------------------------
// LCF graphs
// ---------------------------------------------------------------------------

pub fn lcf(spec: &LcfSpec) -> Result<Graph, Error> {
    let n = spec.vertex_count();
    if spec.jumps.is_empty() || spec.repeats == 0 || n < 3 {
        return Err(Error::BadFamilyParams("LCF graph needs at least 3 vertices".into()));
    }
    let len = spec.jumps.len();
    let mut edges: Vec<(Vertex, Vertex)> = (0..n)
        .map(|k| (k as Vertex, ((k + 1) % n) as Vertex))
        .collect();
    for k in 0..n {
        let jump = spec.jumps[k % len];
        let target = (k as i64 + jump).rem_euclid(n as i64) as usize;
        let d = (target as i64 - k as i64).rem_euclid(n as i64);
        if d == 0 || d == 1 || d == n as i64 - 1 {
            return Err(Error::LcfInvalid(jump, k as Vertex));
        }
        edges.push((k as Vertex, target as Vertex));
    }
    Graph::new(n, edges)
}

fn check_five_minus_five(spec: &LcfSpec) -> Result<(), Error> {
    if !spec.is_five_minus_five() || spec.repeats < 7 {
        return Err(Error::BadFamilyParams(
            "expected the family [5,-5]^n with n >= 7".into(),
        ));
    }
    Ok(())
}

/// The non-path edges of [5,-5]^n: the Hamiltonian-cycle edges running from
/// a forward five-chord endpoint (even) to a backward one (odd). They form
/// a perfect matching.
pub fn lcf_nonpath_matching(spec: &LcfSpec) -> Result<Matching, Error> {
    check_five_minus_five(spec)?;
    let g = lcf(spec)?;
    let n = spec.repeats;
    Matching::new(&g, (0..n).map(|t| (2 * t as Vertex, (2 * t + 1) as Vertex)))
}

/// The face 6-cycles of [5,-5]^n, following steps +1,+1,+5,-1,-1,-5 from
/// each even start. Every edge of the graph lies on at least one of them,
/// and each cycle uses exactly four path edges.
pub fn lcf_face_cycles(spec: &LcfSpec) -> Result<Vec<Vec<Vertex>>, Error> {
    check_five_minus_five(spec)?;
    let n2 = spec.vertex_count() as i64;
    let mut out = Vec::new();
    for start in (0..n2).step_by(2) {
        let mut cyc = Vec::with_capacity(6);
        let mut v = start;
        for step in [1i64, 1, 5, -1, -1, -5] {
            cyc.push(v.rem_euclid(n2) as Vertex);
            v += step;
        }
        debug_assert_eq!(v.rem_euclid(n2), start);
        out.push(cyc);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Named graphs
// ---------------------------------------------------------------------------

pub fn petersen() -> Graph {
    let mut e: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 0..5u32 {
        e.push((i, (i + 1) % 5)); // outer cycle
        e.push((i, i + 5)); // spokes
        e.push((i + 5, (i + 2) % 5 + 5)); // pentagram
    }
    Graph::new(10, e).expect("petersen")
}

pub fn heawood() -> Graph {
    lcf(&LcfSpec::new(vec![5, -5], 7)).expect("heawood")
}

pub fn complete(k: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..k as Vertex {
        for j in i + 1..k as Vertex {
            e.push((i, j));
        }
    }
    Graph::new(k, e).expect("complete")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..a as Vertex {
        for j in 0..b as Vertex {
            e.push((i, a as Vertex + j));
        }
    }
    Graph::new(a + b, e).expect("complete bipartite")
}

/// Möbius ladder on 2k vertices: a 2k-cycle plus the k diameters.
pub fn moebius_ladder(k: usize) -> Result<Graph, Error> {
    if k < 2 {
        return Err(Error::BadFamilyParams("moebius ladder needs k >= 2".into()));
    }
    let n = 2 * k;
    let edges = (0..n)
        .map(|i| (i as Vertex, ((i + 1) % n) as Vertex))
        .chain((0..k).map(|i| (i as Vertex, (i + k) as Vertex)));
    Graph::new(n, edges)
}

/// SM10: the 10-vertex Möbius ladder with every rung subdivided once; a
/// 10-cycle of degree-3 vertices plus five two-edge paths joining opposite
/// cycle vertices. 15 vertices, 20 edges.
pub fn sm10() -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
    for j in 0..5u32 {
        let mid = 10 + j;
        edges.push((j, mid));
        edges.push((j + 5, mid));
    }
    Graph::new(15, edges).expect("sm10")
}

/// KT3: the 1-subdivision of K3,3 plus one edge between two subdivision
/// vertices sharing a branch vertex, forming the triangle. Branch vertices
/// are 0..3 (one side) and 3..6; subdivision vertex of (i, 3+j) is
/// 6 + 3i + j; the chord joins 6 and 7. 15 vertices, 19 edges.
pub fn kt3() -> Graph {
    let mut edges = Vec::new();
    for i in 0..3u32 {
        for j in 0..3u32 {
            let s = 6 + 3 * i + j;
            edges.push((i, s));
            edges.push((3 + j, s));
        }
    }
    edges.push((6, 7));
    let labels = vec![
        (0, "red".to_string()),
        (6, "red".to_string()),
        (7, "red".to_string()),
        (3, "blue".to_string()),
        (4, "blue".to_string()),
        (8, "yellow".to_string()),
    ];
    Graph::new(15, edges)
        .and_then(|g| g.with_labels(labels))
        .expect("kt3")
}

/// Antiprism on 2k vertices (k >= 3): two k-cycles joined by a zigzag;
/// isomorphic to the circulant C_{2k}(1, 2).
pub fn antiprism(k: usize) -> Result<Graph, Error> {
    if k < 3 {
        return Err(Error::BadFamilyParams("antiprism needs k >= 3".into()));
    }
    let kk = k as Vertex;
    let edges = (0..kk)
        .flat_map(move |i| {
            [
                (i, (i + 1) % kk),
                (kk + i, kk + (i + 1) % kk),
                (i, kk + i),
                (i, kk + (i + 1) % kk),
            ]
        });
    Graph::new(2 * k, edges)
}

/// Family registry for the CLI and tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Petersen,
    Heawood,
    Sm10,
    Kt3,
    MoebiusLadder(usize),
    Antiprism(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

pub fn family_names() -> &'static [&'static str] {
    &[
        "petersen",
        "heawood",
        "sm10",
        "kt3",
        "moebius_ladder",
        "antiprism",
        "complete",
        "complete_bipartite",
    ]
}

pub fn named(family: &Family) -> Result<Graph, Error> {
    match family {
        Family::Petersen => Ok(petersen()),
        Family::Heawood => Ok(heawood()),
        Family::Sm10 => Ok(sm10()),
        Family::Kt3 => Ok(kt3()),
        Family::MoebiusLadder(k) => moebius_ladder(*k),
        Family::Antiprism(k) => antiprism(*k),
        Family::Complete(k) => Ok(complete(*k)),
        Family::CompleteBipartite(a, b) => Ok(complete_bipartite(*a, *b)),
    }
}

/// Parses a family from name and numeric parameters, as the CLI passes
/// them.
pub fn parse_family(name: &str, params: &[usize]) -> Result<Family, Error> {
    let want = |k: usize| -> Result<(), Error> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::BadFamilyParams(format!(
                "{name} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "petersen" => want(0).map(|_| Family::Petersen),
        "heawood" => want(0).map(|_| Family::Heawood),
        "sm10" => want(0).map(|_| Family::Sm10),
        "kt3" => want(0).map(|_| Family::Kt3),
        "moebius_ladder" => want(1).map(|_| Family::MoebiusLadder(params[0])),
        "antiprism" => want(1).map(|_| Family::Antiprism(params[0])),
        "complete" => want(1).map(|_| Family::Complete(params[0])),
        "complete_bipartite" => want(2).map(|_| Family::CompleteBipartite(params[0], params[1])),
        _ => Err(Error::UnknownFamily(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        contract_matching, density, girth, has_k23_subgraph, has_triangle, is_isomorphic,
        subdivide,
    };
    use crate::planarity::is_planar;
    use num_rational::Ratio;

    #[test]
    fn necklace_counts() {
        let n14 = necklace(14).unwrap();
        assert_eq!(n14.n(), 48);
        let n1 = necklace(1).unwrap();
        assert_eq!(n1.n(), 9);
        assert_eq!(n1.edge_count(), 10);
        assert!(necklace(0).is_err());
        for i in 1..=6 {
            assert_eq!(girth(&necklace(i).unwrap()), Some(4), "links are 4-cycles");
        }
    }

    #[test]
    fn necklace_hat_counts_and_degrees() {
        let g = necklace_hat(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (17, 26));
        let l = NecklaceLayout { links: 3 };
        assert_eq!(g.degree(l.red_apex()), 4); // i + 1
        assert_eq!(g.degree(l.blue_apex()), 4);
        assert_eq!(g.degree(l.jewel()), 3);
        for i in 1..=6 {
            let g = necklace_hat(i).unwrap();
            assert_eq!(g.edge_count(), 6 * i + 8);
            let l = NecklaceLayout { links: i };
            assert_eq!(g.degree(l.red_apex()), i + 1);
            assert_eq!(g.degree(l.blue_apex()), i + 1);
        }
    }

    #[test]
    fn necklace_hat_is_triangle_free_k23_free_near_planar() {
        for i in 1..=5 {
            let g = necklace_hat(i).unwrap();
            assert!(!has_triangle(&g), "i = {i}");
            assert!(!has_k23_subgraph(&g), "i = {i}");
            assert!(!is_planar(&g), "hat necklaces are non-planar, i = {i}");
            let l = NecklaceLayout { links: i };
            let missing = (l.jewel().min(l.blue_apex()), l.jewel().max(l.blue_apex()));
            let reduced = Graph::new(
                g.n(),
                g.edges().iter().copied().filter(|&e| e != missing),
            )
            .unwrap();
            assert!(is_planar(&reduced), "near-planar, i = {i}");
        }
    }

    // the necklace has exactly one red-white cycle and one blue-white cycle
    #[test]
    fn necklace_monochrome_cycles_are_unique() {
        for i in 1..=4 {
            let g = necklace(i).unwrap();
            for keep in ["red", "blue"] {
                let mut verts: Vec<Vertex> = g
                    .vertices()
                    .filter(|&v| matches!(g.label(v), Some(l) if l == keep || l == "white"))
                    .collect();
                verts.sort_unstable();
                let idx = |v: Vertex| verts.binary_search(&v).unwrap() as Vertex;
                let sub = Graph::new(
                    verts.len(),
                    g.edges()
                        .iter()
                        .filter(|&&(u, v)| verts.binary_search(&u).is_ok() && verts.binary_search(&v).is_ok())
                        .map(|&(u, v)| (idx(u), idx(v))),
                )
                .unwrap();
                // connected with m = n would be one independent cycle; the
                // jewel arm dangles, so count via m - n + components = 1 - leaves... // simply: cycle space dimension is m - n + c
                let c = sub.components().len();
                assert_eq!(sub.edge_count() as i64 - sub.n() as i64 + c as i64, 0, "one cycle for {keep}, i={i}");
            }
        }
    }

    #[test]
    fn lcf_heawood_and_moebius_kantor() {
        let h = heawood();
        assert_eq!((h.n(), h.edge_count()), (14, 21));
        assert_eq!(girth(&h), Some(6));
        assert!(h.vertices().all(|v| h.degree(v) == 3));

        let mk = lcf(&LcfSpec::new(vec![5, -5], 8)).unwrap();
        assert_eq!((mk.n(), mk.edge_count()), (16, 24));
        assert_eq!(girth(&mk), Some(6));

        for n in 7..=10 {
            let g = lcf(&LcfSpec::new(vec![5, -5], n)).unwrap();
            assert_eq!(girth(&g), Some(6), "n = {n}");
            assert_eq!(g.n(), 2 * n);
            assert!(g.vertices().all(|v| g.degree(v) == 3));
        }
    }

    #[test]
    fn lcf_rejects_degenerate_jumps() {
        assert!(lcf(&LcfSpec::new(vec![1, -1], 4)).is_err());
        assert!(lcf(&LcfSpec::new(vec![4], 4)).is_err()); // jump 0 mod 4
    }

    #[test]
    fn nonpath_matching_contracts_to_antiprism_for_even_n() {
        for n in [8usize, 10] {
            let spec = LcfSpec::new(vec![5, -5], n);
            let g = lcf(&spec).unwrap();
            let m = lcf_nonpath_matching(&spec).unwrap();
            assert_eq!(m.len(), n);
            assert!(m.is_cubic());
            let h = contract_matching(&g, &m).unwrap();
            assert!(is_planar(&h), "n = {n}");
            assert!(is_isomorphic(&h, &antiprism(n / 2).unwrap()), "n = {n}");
        }
        // n = 7: the matching exists but the contraction is non-planar
        let spec = LcfSpec::new(vec![5, -5], 7);
        let g = lcf(&spec).unwrap();
        let m = lcf_nonpath_matching(&spec).unwrap();
        let h = contract_matching(&g, &m).unwrap();
        assert!(!is_planar(&h));
    }

    #[test]
    fn face_cycles_cover_all_edges_with_four_path_edges_each() {
        for n in [7usize, 10] {
            let spec = LcfSpec::new(vec![5, -5], n);
            let g = lcf(&spec).unwrap();
            let cycles = lcf_face_cycles(&spec).unwrap();
            assert_eq!(cycles.len(), n);
            let nonpath: std::collections::BTreeSet<(Vertex, Vertex)> = lcf_nonpath_matching(&spec)
                .unwrap()
                .edges()
                .iter()
                .copied()
                .collect();
            let mut covered = std::collections::BTreeSet::new();
            for cyc in &cycles {
                assert_eq!(cyc.len(), 6);
                let mut path_edges = 0;
                for i in 0..6 {
                    let (a, b) = (cyc[i], cyc[(i + 1) % 6]);
                    assert!(g.has_edge(a, b), "face cycle edge missing");
                    let e = (a.min(b), a.max(b));
                    covered.insert(e);
                    if !nonpath.contains(&e) {
                        path_edges += 1;
                    }
                }
                assert_eq!(path_edges, 4, "n = {n}");
            }
            assert_eq!(covered.len(), g.edge_count(), "every edge on a face cycle");
        }
    }

    // every vertex deletion leaves the fore and aft neighborhoods joined by
    // three vertex-disjoint paths
    #[test]
    fn lcf_local_three_connectivity() {
        for n in [7usize, 8] {
            let spec = LcfSpec::new(vec![5, -5], n);
            let g = lcf(&spec).unwrap();
            let n2 = 2 * n as i64;
            for v in 0..g.n() as Vertex {
                let h = g.delete_vertex(v);
                let remap = |x: i64| -> Vertex {
                    let x = x.rem_euclid(n2) as Vertex;
                    if x > v {
                        x - 1
                    } else {
                        x
                    }
                };
                let chord = if v % 2 == 0 { 5 } else { -5 };
                let ahead = [remap(v as i64 + 1), remap(v as i64 + chord)];
                let behind = [remap(v as i64 - 1), remap(v as i64 - chord)];
                assert!(
                    vertex_disjoint_path_count(&h, &ahead, &behind) >= 3,
                    "n = {n}, v = {v}"
                );
            }
        }
    }

    // max vertex-disjoint path count between two terminal sets, by
    // augmenting paths on the vertex-split graph
    fn vertex_disjoint_path_count(g: &Graph, a: &[Vertex], b: &[Vertex]) -> usize {
        let n = g.n();
        // node 2v = in, 2v+1 = out; source/sink virtual
        let mut cap = std::collections::BTreeMap::new();
        for v in 0..n {
            let c = if a.contains(&(v as Vertex)) || b.contains(&(v as Vertex)) {
                2
            } else {
                1
            };
            cap.insert((2 * v, 2 * v + 1), c);
        }
        for &(u, v) in g.edges() {
            cap.insert((2 * u as usize + 1, 2 * v as usize), 1);
            cap.insert((2 * v as usize + 1, 2 * u as usize), 1);
        }
        let source = 2 * n;
        let sink = 2 * n + 1;
        for &x in a {
            cap.insert((source, 2 * x as usize), 1);
        }
        for &x in b {
            cap.insert((2 * x as usize + 1, sink), 1);
        }
        let mut flow = 0usize;
        loop {
            // BFS augment
            let mut prev: std::collections::BTreeMap<usize, usize> = Default::default();
            let mut queue = std::collections::VecDeque::from([source]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    reached = true;
                    break;
                }
                let nexts: Vec<usize> = cap
                    .iter()
                    .filter(|(&(from, _), &c)| from == x && c > 0)
                    .map(|(&(_, to), _)| to)
                    .collect();
                for y in nexts {
                    if y != source && !prev.contains_key(&y) {
                        prev.insert(y, x);
                        queue.push_back(y);
                    }
                }
            }
            if !reached {
                return flow;
            }
            let mut y = sink;
            while y != source {
                let x = prev[&y];
                *cap.get_mut(&(x, y)).unwrap() -= 1;
                *cap.entry((y, x)).or_insert(0) += 1;
                y = x;
            }
            flow += 1;
        }
    }

    #[test]
    fn sm10_shape() {
        let g = sm10();
        assert_eq!((g.n(), g.edge_count()), (15, 20));
        assert_eq!(girth(&g), Some(6));
        assert_eq!(density(&g).unwrap(), Ratio::new(4, 3));
        assert!(g.is_subcubic());
        let d3 = g.vertices().filter(|&v| g.degree(v) == 3).count();
        let d2 = g.vertices().filter(|&v| g.degree(v) == 2).count();
        assert_eq!((d3, d2), (10, 5));
        // only the ten cycle edges are cubic
        assert_eq!(g.cubic_edges().len(), 10);
        // un-subdividing the rungs recovers the Möbius ladder
        let m = Matching::new(&g, (0..5).map(|j| (j, 10 + j))).unwrap();
        let contracted = contract_matching(&g, &m).unwrap();
        assert!(is_isomorphic(&contracted, &moebius_ladder(5).unwrap()));
    }

    #[test]
    fn kt3_shape() {
        let g = kt3();
        assert_eq!((g.n(), g.edge_count()), (15, 19));
        assert_eq!(girth(&g), Some(3));
        assert!(g.is_subcubic());
        assert!(has_triangle(&g));
        assert_eq!(g.cubic_edges().len(), 5);
    }

    // every admissible chord placement produces the same graph up to
    // isomorphism
    #[test]
    fn kt3_chord_choice_is_unique_up_to_isomorphism() {
        let base = subdivide(&complete_bipartite(3, 3), 1);
        // subdivision vertex of edge list position: edges of K33 sorted are
        // (0,3),(0,4),(0,5),(1,3),... midpoint ids 6..15 in that order
        let mid = |i: Vertex, j: Vertex| -> Vertex {
            // position in sorted edge list of K33
            6 + 3 * i + (j - 3)
        };
        let reference = kt3();
        let mut count = 0;
        for a in 0..3u32 {
            for j1 in 3..6u32 {
                for j2 in j1 + 1..6 {
                    // chord between midpoints of (a, j1) and (a, j2)
                    let mut edges: Vec<(Vertex, Vertex)> = base.edges().to_vec();
                    edges.push((mid(a, j1), mid(a, j2)));
                    let g = Graph::new(15, edges).unwrap();
                    assert!(is_isomorphic(&g, &reference));
                    count += 1;
                }
            }
        }
        // and the symmetric choices through the other side
        for b in 3..6u32 {
            for i1 in 0..3u32 {
                for i2 in i1 + 1..3 {
                    let mut edges: Vec<(Vertex, Vertex)> = base.edges().to_vec();
                    edges.push((mid(i1, b), mid(i2, b)));
                    let g = Graph::new(15, edges).unwrap();
                    assert!(is_isomorphic(&g, &reference));
                    count += 1;
                }
            }
        }
        assert_eq!(count, 18);
    }

    #[test]
    fn antiprism_shape() {
        let a4 = antiprism(4).unwrap();
        assert_eq!((a4.n(), a4.edge_count()), (8, 16));
        assert!(is_planar(&a4));
        assert!(antiprism(2).is_err());
    }

    #[test]
    fn heawood_equals_lcf_by_construction() {
        assert!(is_isomorphic(&heawood(), &lcf(&LcfSpec::new(vec![5, -5], 7)).unwrap()));
    }

    #[test]
    fn family_parsing() {
        assert_eq!(parse_family("petersen", &[]).unwrap(), Family::Petersen);
        assert_eq!(
            parse_family("antiprism", &[5]).unwrap(),
            Family::Antiprism(5)
        );
        assert!(parse_family("petersen", &[3]).is_err());
        assert!(parse_family("nope", &[]).is_err());
        for name in family_names() {
            // every registered name parses with some parameter count
            let ok = (0..3).any(|k| parse_family(name, &vec![3; k]).is_ok());
            assert!(ok, "{name}");
        }
    }
}
