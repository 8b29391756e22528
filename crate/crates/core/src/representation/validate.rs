//! Exact validation of string representations: properness (Jordan arcs,
//! at most two strings through any point, every intersection a crossing or
//! an endpoint contact) and equality of the realized intersection graph
//! with the target graph.

use std::collections::{BTreeMap, BTreeSet};

use super::exact::{angle_cmp, on_segment, seg_intersect, Pt, Q, SegMeet};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub ok: bool,
    /// First violated properness or adjacency rule, if any.
    pub violation: Option<String>,
    /// Pairs of strings with at least one proper crossing.
    pub crossing_pairs: Vec<(usize, usize)>,
    /// Pairs with at least one endpoint contact.
    pub contact_pairs: Vec<(usize, usize)>,
    /// Every crossing point, per pair.
    pub crossings: Vec<((usize, usize), Pt)>,
    /// Every contact point, per pair.
    pub contacts: Vec<((usize, usize), Pt)>,
    pub missing_adjacencies: Vec<(Vertex, Vertex)>,
    pub extra_adjacencies: Vec<(Vertex, Vertex)>,
}

impl ValidationReport {
    fn fail(msg: String) -> Self {
        ValidationReport {
            ok: false,
            violation: Some(msg),
            crossing_pairs: vec![],
            contact_pairs: vec![],
            crossings: vec![],
            contacts: vec![],
            missing_adjacencies: vec![],
            extra_adjacencies: vec![],
        }
    }
}

struct BBox {
    lo: Pt,
    hi: Pt,
}

impl BBox {
    fn of(points: &[Pt]) -> BBox {
        let mut lo = points[0].clone();
        let mut hi = points[0].clone();
        for p in points {
            if p.x < lo.x {
                lo.x = p.x.clone();
            }
            if p.y < lo.y {
                lo.y = p.y.clone();
            }
            if p.x > hi.x {
                hi.x = p.x.clone();
            }
            if p.y > hi.y {
                hi.y = p.y.clone();
            }
        }
        BBox { lo, hi }
    }

    fn disjoint(&self, other: &BBox) -> bool {
        self.hi.x < other.lo.x
            || other.hi.x < self.lo.x
            || self.hi.y < other.lo.y
            || other.hi.y < self.lo.y
    }
}

/// Local direction vectors of the polyline at a point lying on it: one for
/// an endpoint, two for a bend or a segment interior.
fn branches_at(poly: &[Pt], p: &Pt) -> Vec<Pt> {
    if poly.len() == 1 {
        return vec![];
    }
    for (k, q) in poly.iter().enumerate() {
        if q == p {
            let mut out = Vec::new();
            if k > 0 {
                out.push(poly[k - 1].sub(p));
            }
            if k + 1 < poly.len() {
                out.push(poly[k + 1].sub(p));
            }
            return out;
        }
    }
    for k in 0..poly.len() - 1 {
        if on_segment(&poly[k], &poly[k + 1], p) {
            return vec![poly[k].sub(p), poly[k + 1].sub(p)];
        }
    }
    panic!("point not on polyline");
}

fn is_endpoint(poly: &[Pt], p: &Pt) -> bool {
    poly.first() == Some(p) || poly.last() == Some(p)
}

/// At a point interior to both strings: a crossing has the four local
/// branches alternating around the point; anything else is a forbidden
/// tangential touch.
fn is_transversal_crossing(a: &[Pt], b: &[Pt]) -> Option<bool> {
    let mut dirs: Vec<(Pt, u8)> = a
        .iter()
        .map(|d| (d.clone(), 0u8))
        .chain(b.iter().map(|d| (d.clone(), 1u8)))
        .collect();
    if dirs.len() != 4 {
        return None;
    }
    // coincident directions from different strings would mean overlap
    for i in 0..4 {
        for j in i + 1..4 {
            if dirs[i].1 != dirs[j].1 {
                let c = dirs[i].0.cross(&dirs[j].0);
                if c == Q::from_integer(0.into()) && dirs[i].0.dot(&dirs[j].0) > Q::from_integer(0.into()) {
                    return None;
                }
            }
        }
    }
    dirs.sort_by(|x, y| angle_cmp(&x.0, &y.0));
    let pattern: Vec<u8> = dirs.iter().map(|d| d.1).collect();
    Some(pattern == [0, 1, 0, 1] || pattern == [1, 0, 1, 0])
}

pub fn validate_against(strings: &[Vec<Pt>], g: &Graph) -> ValidationReport {
    if strings.len() != g.n() {
        return ValidationReport::fail(format!(
            "string count {} does not match vertex count {}",
            strings.len(),
            g.n()
        ));
    }
    for (i, s) in strings.iter().enumerate() {
        if s.is_empty() {
            return ValidationReport::fail(format!("string {i} is empty"));
        }
        for w in s.windows(2) {
            if w[0] == w[1] {
                return ValidationReport::fail(format!("string {i} has a zero-length segment"));
            }
        }
        // self-simplicity
        for a in 0..s.len().saturating_sub(1) {
            for b in a + 1..s.len() - 1 {
                let meet = seg_intersect(&s[a], &s[a + 1], &s[b], &s[b + 1]);
                match meet {
                    SegMeet::None => {}
                    SegMeet::Overlap => {
                        return ValidationReport::fail(format!("string {i} overlaps itself"))
                    }
                    SegMeet::Point(p) => {
                        if b == a + 1 && p == s[b] {
                            continue; // shared bend
                        }
                        return ValidationReport::fail(format!("string {i} intersects itself"));
                    }
                }
            }
        }
    }

    let boxes: Vec<BBox> = strings.iter().map(|s| BBox::of(s)).collect();
    let mut pair_points: BTreeMap<(usize, usize), BTreeSet<Pt>> = BTreeMap::new();
    for i in 0..strings.len() {
        for j in i + 1..strings.len() {
            if boxes[i].disjoint(&boxes[j]) {
                continue;
            }
            let (si, sj) = (&strings[i], &strings[j]);
            let segs = |s: &[Pt]| -> Vec<(Pt, Pt)> {
                if s.len() == 1 {
                    vec![(s[0].clone(), s[0].clone())]
                } else {
                    s.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
                }
            };
            for (a1, a2) in segs(si) {
                for (b1, b2) in segs(sj) {
                    match seg_intersect(&a1, &a2, &b1, &b2) {
                        SegMeet::None => {}
                        SegMeet::Overlap => {
                            return ValidationReport::fail(format!(
                                "strings {i} and {j} overlap in a segment"
                            ))
                        }
                        SegMeet::Point(p) => {
                            pair_points.entry((i, j)).or_default().insert(p);
                        }
                    }
                }
            }
        }
    }

    // at most two strings through any point
    let mut at_point: BTreeMap<Pt, BTreeSet<usize>> = BTreeMap::new();
    for (&(i, j), pts) in &pair_points {
        for p in pts {
            let entry = at_point.entry(p.clone()).or_default();
            entry.insert(i);
            entry.insert(j);
            if entry.len() >= 3 {
                return ValidationReport::fail(format!(
                    "three strings meet at ({}, {})",
                    p.x, p.y
                ));
            }
        }
    }

    let mut crossings = Vec::new();
    let mut contacts = Vec::new();
    for (&(i, j), pts) in &pair_points {
        for p in pts {
            let ei = is_endpoint(&strings[i], p);
            let ej = is_endpoint(&strings[j], p);
            if ei || ej {
                contacts.push(((i, j), p.clone()));
                continue;
            }
            let bi = branches_at(&strings[i], p);
            let bj = branches_at(&strings[j], p);
            match is_transversal_crossing(&bi, &bj) {
                Some(true) => crossings.push(((i, j), p.clone())),
                Some(false) => {
                    return ValidationReport::fail(format!(
                        "strings {i} and {j} touch tangentially at ({}, {})",
                        p.x, p.y
                    ))
                }
                None => {
                    return ValidationReport::fail(format!(
                        "strings {i} and {j} meet degenerately at ({}, {})",
                        p.x, p.y
                    ))
                }
            }
        }
    }

    let crossing_pairs: Vec<(usize, usize)> = {
        let set: BTreeSet<(usize, usize)> = crossings.iter().map(|c| c.0).collect();
        set.into_iter().collect()
    };
    let contact_pairs: Vec<(usize, usize)> = {
        let set: BTreeSet<(usize, usize)> = contacts.iter().map(|c| c.0).collect();
        set.into_iter().collect()
    };

    let mut missing = Vec::new();
    let mut extra = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let touches = pair_points.contains_key(&(u, v));
            let adjacent = g.has_edge(u as Vertex, v as Vertex);
            if adjacent && !touches {
                missing.push((u as Vertex, v as Vertex));
            }
            if !adjacent && touches {
                extra.push((u as Vertex, v as Vertex));
            }
        }
    }
    let violation = if let Some(&(u, v)) = missing.first() {
        Some(format!("missing adjacency ({u}, {v})"))
    } else if let Some(&(u, v)) = extra.first() {
        Some(format!("extra adjacency ({u}, {v})"))
    } else {
        None
    };
    ValidationReport {
        ok: violation.is_none(),
        violation,
        crossing_pairs,
        contact_pairs,
        crossings,
        contacts,
        missing_adjacencies: missing,
        extra_adjacencies: extra,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::exact::q;

    fn pt(x: i64, y: i64) -> Pt {
        Pt::new(q(x), q(y))
    }

    fn k2() -> Graph {
        Graph::new(2, vec![(0, 1)]).unwrap()
    }

    #[test]
    fn contact_and_crossing_classification() {
        // endpoint contact
        let rep = vec![
            vec![pt(0, 0), pt(2, 0)],
            vec![pt(1, 0), pt(1, 3)], // endpoint (1,0) on the first string
        ];
        let r = validate_against(&rep, &k2());
        assert!(r.ok, "{:?}", r.violation);
        assert_eq!(r.contact_pairs, vec![(0, 1)]);
        assert!(r.crossing_pairs.is_empty());

        // proper crossing
        let rep = vec![
            vec![pt(0, 0), pt(2, 2)],
            vec![pt(0, 2), pt(2, 0)],
        ];
        let r = validate_against(&rep, &k2());
        assert!(r.ok);
        assert_eq!(r.crossing_pairs, vec![(0, 1)]);

        // crossing at a bend of one string
        let rep = vec![
            vec![pt(0, 0), pt(1, 1), pt(2, 0)],
            vec![pt(1, -1), pt(1, 3)],
        ];
        let r = validate_against(&rep, &k2());
        assert!(r.ok);
        assert_eq!(r.crossing_pairs, vec![(0, 1)]);
    }

    #[test]
    fn tangential_touch_is_rejected() {
        let rep = vec![
            vec![pt(0, 0), pt(1, 1), pt(2, 0)], // peak at (1,1)
            vec![pt(0, 2), pt(1, 1), pt(2, 2)], // valley at (1,1), same point
        ];
        let r = validate_against(&rep, &k2());
        assert!(!r.ok);
        assert!(r.violation.unwrap().contains("tangentially"));
    }

    #[test]
    fn overlap_and_self_intersection_rejected() {
        let rep = vec![vec![pt(0, 0), pt(4, 0)], vec![pt(1, 0), pt(3, 0)]];
        assert!(!validate_against(&rep, &k2()).ok);

        let rep = vec![
            vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(1, -1)], // crosses itself
            vec![pt(10, 10), pt(11, 10)],
        ];
        let r = validate_against(&rep, &Graph::new(2, vec![]).unwrap());
        assert!(!r.ok);
        assert!(r.violation.unwrap().contains("itself"));
    }

    #[test]
    fn triple_point_rejected() {
        let g = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let rep = vec![
            vec![pt(-1, 0), pt(1, 0)],
            vec![pt(0, -1), pt(0, 1)],
            vec![pt(-1, -1), pt(1, 1)],
        ];
        let r = validate_against(&rep, &g);
        assert!(!r.ok);
        assert!(r.violation.unwrap().contains("three strings"));
    }

    #[test]
    fn adjacency_mismatch_diagnostics() {
        // two strings touching but not adjacent in g
        let g = Graph::new(2, vec![]).unwrap();
        let rep = vec![vec![pt(0, 0), pt(2, 0)], vec![pt(1, 0), pt(1, 2)]];
        let r = validate_against(&rep, &g);
        assert!(!r.ok);
        assert!(r.violation.as_ref().unwrap().contains("extra adjacency"));

        // adjacent but never touching
        let rep = vec![vec![pt(0, 0), pt(1, 0)], vec![pt(0, 5), pt(1, 5)]];
        let r = validate_against(&rep, &k2());
        assert!(!r.ok);
        assert!(r.violation.unwrap().contains("missing adjacency"));
    }

    #[test]
    fn point_string_contact() {
        let g = k2();
        let rep = vec![vec![pt(1, 0)], vec![pt(0, 0), pt(2, 0)]];
        let r = validate_against(&rep, &g);
        assert!(r.ok, "{:?}", r.violation);
        assert_eq!(r.contact_pairs, vec![(0, 1)]);
    }
}
