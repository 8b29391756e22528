//! Straight-line planar drawings with exact rational coordinates.
//!
//! The input graph is augmented to a maximal planar graph: connect the
//! components, then kill every cut vertex by joining neighbors in different
//! blocks (planarity-safe), then drop an apex into every face of length
//! above three. A simple maximal planar graph on four or more vertices is
//! 3-connected, so the barycentric (Tutte) embedding with one face pinned
//! as a convex outer triangle is a valid plane drawing. Solving the system
//! over the rationals and clearing denominators gives integer coordinates,
//! which keeps all downstream intersection tests exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::exact::{q, Pt, Q};
use crate::error::Error;
use crate::graph::{Graph, Vertex};
use crate::planarity::{biconnected_components, is_planar, planar_embedding};

/// Positions for the vertices of a planar graph: integer coordinates (as
/// rationals), no two vertices coincident, edges crossing-free.
pub fn straight_line_drawing(h: &Graph) -> Result<Vec<Pt>, Error> {
    match h.n() {
        0 => return Ok(vec![]),
        1 => return Ok(vec![Pt::new(q(0), q(0))]),
        2 => return Ok(vec![Pt::new(q(0), q(0)), Pt::new(q(8), q(0))]),
        _ => {}
    }
    if !is_planar(h) {
        return Err(planar_embedding(h).unwrap_err());
    }

    let mut edges: Vec<(Vertex, Vertex)> = h.edges().to_vec();
    let n0 = h.n();

    // connect components
    let mut work = Graph::new(n0, edges.iter().copied())?;
    let comps = work.components();
    for pair in comps.windows(2) {
        edges.push((pair[0][0], pair[1][0]));
    }
    work = Graph::new(n0, edges.iter().copied())?;

    // biconnect: for every cut vertex, tie together neighbors from two
    // different blocks; this never breaks planarity
    loop {
        let blocks = biconnected_components(&work);
        let mut in_blocks = vec![0usize; n0];
        for block in &blocks {
            let mut verts: Vec<Vertex> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
            verts.sort_unstable();
            verts.dedup();
            for v in verts {
                in_blocks[v as usize] += 1;
            }
        }
        let Some(cut) = (0..n0).find(|&v| in_blocks[v] > 1) else {
            break;
        };
        let v = cut as Vertex;
        // two neighbors in different components of work - v
        let reduced = work.delete_vertex(v);
        let remap = |x: Vertex| if x > v { x - 1 } else { x };
        let comps = reduced.components();
        let comp_of = |x: Vertex| -> usize {
            comps
                .iter()
                .position(|c| c.binary_search(&remap(x)).is_ok())
                .unwrap()
        };
        let nbrs = work.neighbors(v);
        let a = nbrs[0];
        let b = *nbrs
            .iter()
            .find(|&&w| comp_of(w) != comp_of(a))
            .expect("cut vertex has neighbors in two components");
        edges.push((a, b));
        work = Graph::new(n0, edges.iter().copied())?;
        debug_assert!(is_planar(&work));
    }

    // triangulate: an apex inside every long face
    let emb = planar_embedding(&work)?;
    let mut n = n0;
    for face in emb.faces() {
        if face.len() > 3 {
            let apex = n as Vertex;
            n += 1;
            for &v in &face {
                edges.push((apex, v));
            }
        }
    }
    let full = Graph::new(n, edges.iter().copied())?;
    debug_assert!(is_planar(&full));
    debug_assert_eq!(full.edge_count(), 3 * n - 6);

    let emb = planar_embedding(&full)?;
    let outer = emb.faces().into_iter().next().expect("faces exist");
    debug_assert_eq!(outer.len(), 3);

    let pos = tutte_positions(&full, &outer);

    // clear denominators over the original vertices
    let mut lcm = BigInt::one();
    for p in pos.iter().take(n0) {
        lcm = num_integer::lcm(lcm.clone(), p.x.denom().clone());
        lcm = num_integer::lcm(lcm.clone(), p.y.denom().clone());
    }
    let scale = Q::from_integer(lcm);
    Ok(pos.into_iter().take(n0).map(|p| p.scale(&scale)).collect())
}

/// Barycentric coordinates with the given triangle pinned.
fn tutte_positions(g: &Graph, outer: &[Vertex]) -> Vec<Pt> {
    let n = g.n();
    let corners = [
        Pt::new(q(0), q(0)),
        Pt::new(q(1 << 12), q(0)),
        Pt::new(q(1 << 11), q(1 << 12)),
    ];
    let mut fixed: Vec<Option<Pt>> = vec![None; n];
    for (i, &v) in outer.iter().enumerate() {
        fixed[v as usize] = Some(corners[i].clone());
    }
    let interior: Vec<usize> = (0..n).filter(|&v| fixed[v].is_none()).collect();
    let index: std::collections::BTreeMap<usize, usize> =
        interior.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let k = interior.len();
    if k == 0 {
        return fixed.into_iter().map(Option::unwrap).collect();
    }

    // rows: deg(v) x_v - sum_{u interior} x_u = sum_{u fixed} pos_u
    let mut mat: Vec<Vec<Q>> = vec![vec![Q::zero(); k + 2]; k];
    for (row, &v) in interior.iter().enumerate() {
        mat[row][row] = q(g.degree(v as Vertex) as i64);
        for &u in g.neighbors(v as Vertex) {
            match &fixed[u as usize] {
                Some(p) => {
                    let (bx, by) = (p.x.clone(), p.y.clone());
                    mat[row][k] += bx;
                    mat[row][k + 1] += by;
                }
                None => {
                    let col = index[&(u as usize)];
                    mat[row][col] -= Q::one();
                }
            }
        }
    }

    // Gaussian elimination, exact
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !mat[r][col].is_zero())
            .expect("Laplacian minor is nonsingular");
        mat.swap(col, pivot);
        let inv = mat[col][col].clone();
        for c in col..k + 2 {
            mat[col][c] = &mat[col][c] / &inv;
        }
        for r in 0..k {
            if r != col && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..k + 2 {
                    let delta = &mat[col][c] * &f;
                    mat[r][c] = &mat[r][c] - delta;
                }
            }
        }
    }

    let mut out = vec![Pt::new(Q::zero(), Q::zero()); n];
    for (v, p) in fixed.iter().enumerate() {
        if let Some(p) = p {
            out[v] = p.clone();
        }
    }
    for (row, &v) in interior.iter().enumerate() {
        out[v] = Pt::new(mat[row][k].clone(), mat[row][k + 1].clone());
    }
    out
}

/// Exactness check used by tests: no two positions equal, no edge through
/// a third vertex, no two edges properly crossing.
#[cfg(test)]
pub fn drawing_is_plane(g: &Graph, pos: &[Pt]) -> bool {
    use super::exact::{seg_intersect, SegMeet};
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            if pos[i] == pos[j] {
                return false;
            }
        }
    }
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in edges.iter().skip(i + 1) {
            let shared = a == c || a == d || b == c || b == d;
            let meet = seg_intersect(
                &pos[a as usize],
                &pos[b as usize],
                &pos[c as usize],
                &pos[d as usize],
            );
            match meet {
                SegMeet::None => {}
                SegMeet::Overlap => return false,
                SegMeet::Point(p) => {
                    if !shared {
                        return false;
                    }
                    // must be exactly the shared endpoint
                    let sv = if a == c || a == d { a } else { b };
                    if p != pos[sv as usize] {
                        return false;
                    }
                }
            }
        }
    }
    true
}
