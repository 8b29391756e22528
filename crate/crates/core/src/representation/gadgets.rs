//! Construction of the string polylines from a drawing of the contracted
//! graph.
//!
//! Each vertex of the contraction owns a private site around its drawn
//! position, with one corridor per incident edge ending in a pad chord
//! just short of the edge midpoint. The two pad chords of an edge face
//! each other across a handshake zone; the string on the anchoring side
//! ends there with a prong whose endpoint lies on the opposite pad, which
//! realizes the adjacency as an endpoint contact. An unmatched vertex is
//! one string visiting its corridors in rotation order through mid-gap
//! waypoints; the two strings of a contracted pair share the site and
//! cross exactly once on interior link pieces. A corridor used by both
//! halves of a pair splits into two lateral lanes.
//!
//! All offsets derive from exact rational clearances. The caller validates
//! the finished configuration exactly and retries with perturbed slot
//! fractions if any properness rule fails.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use super::exact::{angle_cmp, ccw_between, q, qr, Pt, Q};
use crate::error::Error;
use crate::graph::{Graph, Matching, Vertex};

pub(super) struct Params {
    pub attempt: i64,
}

impl Params {
    fn ring_num(&self) -> i64 {
        71 + self.attempt
    }
    fn att_num(&self) -> i64 {
        62 - self.attempt
    }
}

type SId = usize;

// ---------------------------------------------------------------------------
// Geometry scaffolding
// ---------------------------------------------------------------------------

struct Tip {
    other: Vertex,
    dir: Pt,
    /// (g-edge index, resident string) pairs through this side.
    entries: Vec<(usize, SId)>,
}

struct Site {
    pos: Pt,
    rho: Q,
    w_abs: Q,
    tips: Vec<Tip>,
}

fn u_linf(d: &Pt) -> Pt {
    let n = d.linf();
    Pt::new(&d.x / &n, &d.y / &n)
}

struct TipFrame {
    origin: Pt,
    d: Pt,
    perp: Pt,
    /// mouth parameter (edge leaves the site square here)
    t_x: Q,
    /// pad chord parameter
    t_pad: Q,
    /// lateral half-width in frame units
    w: Q,
}

impl TipFrame {
    fn new(site: &Site, tip: &Tip) -> TipFrame {
        TipFrame {
            origin: site.pos.clone(),
            perp: tip.dir.rot90(),
            t_x: &site.rho / tip.dir.linf(),
            t_pad: qr(7, 16),
            w: &site.w_abs / tip.dir.l1(),
            d: tip.dir.clone(),
        }
    }

    fn at(&self, t: &Q, s: &Q) -> Pt {
        self.origin.add(&self.d.scale(t)).add(&self.perp.scale(s))
    }
}

/// Mid-gap waypoint between two tip directions, at ring radius.
fn gap_waypoint(site: &Site, a: usize, b: usize, params: &Params) -> Pt {
    let da = &site.tips[a].dir;
    let db = &site.tips[b].dir;
    let mut dir = u_linf(da).add(&u_linf(db));
    if dir.is_zero() {
        dir = da.rot90();
    }
    if !ccw_between(da, &dir, db) {
        dir = dir.scale(&q(-1));
        if !ccw_between(da, &dir, db) {
            // fall back to a perpendicular of one boundary ray
            dir = da.rot90();
            if !ccw_between(da, &dir, db) {
                dir = dir.scale(&q(-1));
            }
        }
    }
    let r = &site.rho * qr(params.ring_num(), 64);
    site.pos.add(&u_linf(&dir).scale(&r))
}

// ---------------------------------------------------------------------------
// Planning data
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Debug)]
enum PairMode {
    /// Four sole corridors alternating owner: both halves carry an interior
    /// chord between their two corridors; the chords cross.
    Chords,
    /// Anything else: each half's walk ends with a dive into the interior;
    /// the dives cross.
    Stubs,
}

#[derive(Clone, Debug, PartialEq)]
enum EndBit {
    Free,
    Prong(usize), // g-edge index
    Link,
}

#[derive(Clone, Debug)]
struct VisitPlan {
    tip: usize,
    /// load carried at the start side of this visit (walk's S if first)
    start: Option<EndBit>,
    /// load at the finish side (walk's E if last)
    end: Option<EndBit>,
    /// lane sign for shared corridors (0 = full width)
    lane: i64,
}

struct StringPlan {
    site: usize,
    eps: i64,
    visits: Vec<VisitPlan>,
    /// interior link, with its walk-side attachment
    link: Option<LinkAttach>,
}

#[derive(Clone, Debug, PartialEq)]
enum LinkAttach {
    /// dive from the end of the last visit (full corridor)
    InwardFromEnd,
    /// dive down the channel of the last visit's lane
    ChannelFromEnd,
    /// chord mode: between the two visits
    BetweenVisits,
    /// no corridor at all: a free interior dash
    Dash,
}

// ---------------------------------------------------------------------------
// Entry
// ---------------------------------------------------------------------------

pub(super) fn build_strings(
    g: &Graph,
    m: &Matching,
    h: &Graph,
    vmap: &[Vertex],
    pos: &[Pt],
    params: &Params,
) -> Result<Vec<Vec<Pt>>, Error> {
    let fail = |msg: String| Error::RepresentationFailed(msg);

    // ---- sites ------------------------------------------------------------
    let mut sites: Vec<Site> = Vec::with_capacity(h.n());
    for z in 0..h.n() {
        let p = &pos[z];
        let mut tips: Vec<Tip> = h
            .neighbors(z as Vertex)
            .iter()
            .map(|&other| Tip {
                other,
                dir: pos[other as usize].sub(p),
                entries: Vec::new(),
            })
            .collect();
        tips.sort_by(|a, b| angle_cmp(&a.dir, &b.dir));
        sites.push(Site { pos: p.clone(), rho: Q::zero(), w_abs: Q::zero(), tips });
    }
    let gedges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| vmap[a as usize] != vmap[b as usize])
        .collect();
    for (ei, &(a, b)) in gedges.iter().enumerate() {
        for (s, o) in [(a, b), (b, a)] {
            let z = vmap[s as usize] as usize;
            let zo = vmap[o as usize];
            sites[z]
                .tips
                .iter_mut()
                .find(|t| t.other == zo)
                .expect("tip")
                .entries
                .push((ei, s as SId));
        }
    }
    for site in &mut sites {
        for tip in &mut site.tips {
            tip.entries.sort_unstable();
            let strs: BTreeSet<SId> = tip.entries.iter().map(|&(_, s)| s).collect();
            if tip.entries.len() > 2 || strs.len() > 2 {
                return Err(fail("corridor carries more than two adjacencies".into()));
            }
        }
    }

    // ---- clearances --------------------------------------------------------
    let mut dmin = q(1);
    for z in 0..h.n() {
        for &(a, b) in h.edges() {
            if a as usize == z || b as usize == z {
                continue;
            }
            let d2 = super::exact::point_seg_dist_sq(&pos[z], &pos[a as usize], &pos[b as usize]);
            dmin = dmin.min(super::exact::sqrt_lower_bound(&d2));
        }
    }
    for z in 0..h.n() {
        let min_len = sites[z]
            .tips
            .iter()
            .map(|t| t.dir.linf())
            .min()
            .unwrap_or_else(|| q(4));
        sites[z].rho = (&dmin / q(4)).min(min_len / q(4));
    }
    for z in 0..h.n() {
        let mut w = (&dmin / q(8)).min(&sites[z].rho / q(4));
        let site = &sites[z];
        for i in 0..site.tips.len() {
            for j in 0..site.tips.len() {
                if i == j {
                    continue;
                }
                let xi = site.pos.add(&u_linf(&site.tips[i].dir).scale(&site.rho));
                let mid_i = site.pos.add(&site.tips[i].dir.scale(&qr(1, 2)));
                let mid_j = site.pos.add(&site.tips[j].dir.scale(&qr(1, 2)));
                let d2 = super::exact::seg_seg_dist_sq(&xi, &mid_i, &site.pos, &mid_j);
                if d2.is_zero() {
                    return Err(fail("collinear incident edges in the drawing".into()));
                }
                w = w.min(super::exact::sqrt_lower_bound(&d2) / q(4));
            }
        }
        sites[z].w_abs = w;
    }

    // ---- string tip lists ---------------------------------------------------
    let string_tips = |s: SId| -> Vec<usize> {
        let z = vmap[s] as usize;
        sites[z]
            .tips
            .iter()
            .enumerate()
            .filter(|(_, t)| t.entries.iter().any(|&(_, st)| st == s))
            .map(|(i, _)| i)
            .collect()
    };
    let tip_is_shared = |z: usize, ti: usize| -> bool {
        let strs: BTreeSet<SId> = sites[z].tips[ti].entries.iter().map(|&(_, s)| s).collect();
        strs.len() == 2
    };

    // ---- pair modes ----------------------------------------------------------
    let mut pair_mode: BTreeMap<SId, PairMode> = BTreeMap::new();
    for &(a, b) in m.edges() {
        let (a, b) = (a as SId, b as SId);
        let z = vmap[a] as usize;
        let ta = string_tips(a);
        let tb = string_tips(b);
        let has_shared = ta.iter().any(|&t| tb.contains(&t));
        let mode = if !has_shared && ta.len() == 2 && tb.len() == 2 && sites[z].tips.len() == 4 {
            let owners: Vec<SId> = sites[z].tips.iter().map(|t| t.entries[0].1).collect();
            if owners[0] == owners[2] && owners[1] == owners[3] && owners[0] != owners[1] {
                PairMode::Chords
            } else {
                PairMode::Stubs
            }
        } else {
            PairMode::Stubs
        };
        pair_mode.insert(a, mode);
        pair_mode.insert(b, mode);
    }

    // ---- anchoring ------------------------------------------------------------
    // group G-edges by h-edge; all prongs of a handshake zone must travel
    // the same direction
    let mut groups: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
    for (ei, &(a, b)) in gedges.iter().enumerate() {
        let (za, zb) = (vmap[a as usize], vmap[b as usize]);
        groups.entry((za.min(zb), za.max(zb))).or_default().push(ei);
    }
    let group_list: Vec<((Vertex, Vertex), Vec<usize>)> =
        groups.into_iter().collect();

    // slot capacity per string and which tips may carry a prong
    struct SlotInfo {
        capacity: usize,
        /// tips allowed to carry an anchor, with per-tip limits
        allowed: BTreeMap<usize, usize>,
    }
    let mut slots: BTreeMap<SId, SlotInfo> = BTreeMap::new();
    for s in 0..g.n() {
        let tips = string_tips(s);
        let z = vmap[s] as usize;
        let matched = m.covers(s as Vertex);
        let info = if !matched {
            // both endpoints available; at most one per terminal slot, and
            // the anchored tips must admit a start/end placement, which for
            // at most three corridors is any pair
            let mut allowed = BTreeMap::new();
            for &t in &tips {
                let own_edges = sites[z].tips[t]
                    .entries
                    .iter()
                    .filter(|&&(_, st)| st == s)
                    .count();
                allowed.insert(t, own_edges.min(2));
            }
            SlotInfo { capacity: 2, allowed }
        } else {
            match pair_mode[&s] {
                PairMode::Chords => {
                    let mut allowed = BTreeMap::new();
                    for &t in &tips {
                        allowed.insert(t, 1);
                    }
                    SlotInfo { capacity: 2, allowed }
                }
                PairMode::Stubs => {
                    // the E endpoint dives into the link; S may prong, and
                    // it must sit on a tip that can open the walk: any sole
                    // tip, or a shared tip when every tip is shared
                    let shared: Vec<usize> = tips
                        .iter()
                        .copied()
                        .filter(|&t| tip_is_shared(z, t))
                        .collect();
                    let all_shared = shared.len() == tips.len();
                    let mut allowed = BTreeMap::new();
                    for &t in &tips {
                        let ok = !tip_is_shared(z, t) || all_shared;
                        if ok {
                            allowed.insert(t, 1);
                        }
                    }
                    SlotInfo { capacity: 1, allowed }
                }
            }
        };
        slots.insert(s, info);
    }

    // backtracking over group directions
    struct AnchorState {
        used_cap: BTreeMap<SId, usize>,
        used_tip: BTreeMap<(SId, usize), usize>,
        anchor_of: Vec<Option<u8>>, // per g-edge: 0 anchored by .0 side
    }
    let side_of = |ei: usize, who: u8| -> (SId, usize) {
        let (a, b) = gedges[ei];
        let s = if who == 0 { a } else { b };
        let o = if who == 0 { b } else { a };
        let z = vmap[s as usize] as usize;
        let ti = sites[z]
            .tips
            .iter()
            .position(|t| t.other == vmap[o as usize])
            .unwrap();
        (s as SId, ti)
    };
    fn try_assign(
        k: usize,
        group_list: &[((Vertex, Vertex), Vec<usize>)],
        st: &mut AnchorState,
        slots: &BTreeMap<SId, SlotInfo>,
        side_of: &dyn Fn(usize, u8) -> (SId, usize),
        gedges: &[(Vertex, Vertex)],
        vmap: &[Vertex],
    ) -> bool {
        if k == group_list.len() {
            return true;
        }
        let (hkey, members) = &group_list[k];
        'dir: for dirbit in 0..2u8 {
            // direction: anchored side is the one mapping to hkey.0 for
            // dirbit 0, to hkey.1 for dirbit 1
            let mut touched: Vec<(SId, usize)> = Vec::new();
            let mut ok = true;
            for &ei in members {
                let (a, _b) = gedges[ei];
                let a_side = vmap[a as usize];
                let who = if (a_side == hkey.0) == (dirbit == 0) { 0u8 } else { 1u8 };
                let (s, ti) = side_of(ei, who);
                let cap = st.used_cap.entry(s).or_insert(0);
                let slot = slots.get(&s).unwrap();
                let tip_used = st.used_tip.entry((s, ti)).or_insert(0);
                let tip_allow = slot.allowed.get(&ti).copied().unwrap_or(0);
                if *cap < slot.capacity && *tip_used < tip_allow {
                    *cap += 1;
                    *tip_used += 1;
                    st.anchor_of[ei] = Some(who);
                    touched.push((s, ti));
                } else {
                    ok = false;
                }
                if !ok {
                    // roll back this group's partial work
                    for (j, &ej) in members.iter().enumerate() {
                        if j >= touched.len() {
                            break;
                        }
                        let (s2, t2) = touched[j];
                        *st.used_cap.get_mut(&s2).unwrap() -= 1;
                        *st.used_tip.get_mut(&(s2, t2)).unwrap() -= 1;
                        st.anchor_of[ej] = None;
                    }
                    continue 'dir;
                }
            }
            if try_assign(k + 1, group_list, st, slots, side_of, gedges, vmap) {
                return true;
            }
            for (j, &ej) in members.iter().enumerate() {
                let (s2, t2) = touched[j];
                *st.used_cap.get_mut(&s2).unwrap() -= 1;
                *st.used_tip.get_mut(&(s2, t2)).unwrap() -= 1;
                st.anchor_of[ej] = None;
            }
        }
        false
    }
    let mut anchor_state = AnchorState {
        used_cap: BTreeMap::new(),
        used_tip: BTreeMap::new(),
        anchor_of: vec![None; gedges.len()],
    };
    if !try_assign(
        0,
        &group_list,
        &mut anchor_state,
        &slots,
        &|ei, who| side_of(ei, who),
        &gedges,
        vmap,
    ) {
        return Err(fail("no feasible endpoint anchoring".into()));
    }
    let anchor_of = anchor_state.anchor_of;

    // anchored g-edges per (string, tip)
    let mut anchored_at: BTreeMap<(SId, usize), Vec<usize>> = BTreeMap::new();
    for (ei, who) in anchor_of.iter().enumerate() {
        let (s, ti) = side_of(ei, who.unwrap());
        anchored_at.entry((s, ti)).or_default().push(ei);
    }

    // ---- walk plans -------------------------------------------------------
    let mut plans: Vec<StringPlan> = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        let z = vmap[s] as usize;
        let tips = string_tips(s);
        let matched = m.covers(s as Vertex);
        let partner = m.partner(s as Vertex).map(|p| p as SId);
        let shared: Vec<usize> = tips
            .iter()
            .copied()
            .filter(|&t| tip_is_shared(z, t))
            .collect();
        let eps: i64 = match partner {
            Some(p) if !shared.is_empty() && s > p => -1,
            _ => 1,
        };

        if tips.is_empty() {
            let link = if matched { Some(LinkAttach::Dash) } else { None };
            plans.push(StringPlan { site: z, eps, visits: vec![], link });
            continue;
        }

        // choose the visit order: anchored tips must land on terminals,
        // shared tips must come last (and second-to-last if two)
        let anchored_tips: Vec<usize> = tips
            .iter()
            .copied()
            .filter(|&t| anchored_at.contains_key(&(s, t)))
            .collect();
        let c = tips.len();
        let rot = |start: usize, rev: bool| -> Vec<usize> {
            let pos0 = tips.iter().position(|&t| t == start).unwrap();
            let mut order: Vec<usize> = (0..c).map(|i| tips[(pos0 + i) % c]).collect();
            if rev {
                order[1..].reverse();
            }
            order
        };
        // candidate orders: every rotation, both directions
        let mut chosen: Option<Vec<usize>> = None;
        'outer: for &st in &tips {
            for rev in [false, true] {
                let order = rot(st, rev);
                // direction must match eps: reversed order corresponds to a
                // clockwise walk
                let dir_ok = if c <= 2 {
                    true
                } else {
                    (eps == 1) != rev
                };
                if !dir_ok {
                    continue;
                }
                // shared tips at the tail
                let tail_ok = shared
                    .iter()
                    .all(|&sh| order.iter().rev().take(shared.len()).any(|&t| t == sh));
                if !tail_ok {
                    continue;
                }
                // anchors on usable slots: first tip carries S, last carries
                // E (unless E is a link); doubly anchored tips need both
                let mut ok = true;
                for &t in &anchored_tips {
                    let n_anch = anchored_at[&(s, t)].len();
                    let first = order[0] == t;
                    let last = *order.last().unwrap() == t;
                    let e_free = !(matched && pair_mode[&s] == PairMode::Stubs);
                    let slots_here = usize::from(first) + usize::from(last && e_free);
                    if slots_here < n_anch {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    chosen = Some(order);
                    break 'outer;
                }
            }
        }
        let order =
            chosen.ok_or_else(|| fail(format!("no visit order for string {s}")))?;

        let mut visits: Vec<VisitPlan> = Vec::new();
        for (k, &t) in order.iter().enumerate() {
            let lane = if tip_is_shared(z, t) {
                let mut strs: Vec<SId> =
                    sites[z].tips[t].entries.iter().map(|&(_, x)| x).collect();
                strs.sort_unstable();
                strs.dedup();
                // terminal side decides the lane: start-visits sit on the
                // departure gap, end-visits on the arrival gap
                let is_first = k == 0;
                let base = if is_first { eps } else { -eps };
                if s == strs[0] {
                    base
                } else {
                    -base
                }
            } else {
                0
            };
            visits.push(VisitPlan { tip: t, start: None, end: None, lane });
        }
        // lay anchors into terminal slots
        let last_idx = visits.len() - 1;
        for &t in &anchored_tips {
            for &ei in &anchored_at[&(s, t)] {
                let vfirst = visits[0].tip == t && visits[0].start.is_none();
                if vfirst {
                    visits[0].start = Some(EndBit::Prong(ei));
                } else if visits[last_idx].tip == t && visits[last_idx].end.is_none() {
                    visits[last_idx].end = Some(EndBit::Prong(ei));
                } else {
                    return Err(fail(format!("anchor placement failed for string {s}")));
                }
            }
        }
        if visits[0].start.is_none() {
            visits[0].start = Some(EndBit::Free);
        }

        let link = if matched {
            match pair_mode[&s] {
                PairMode::Chords => Some(LinkAttach::BetweenVisits),
                PairMode::Stubs => {
                    if visits[last_idx].end.is_some() {
                        return Err(fail("link endpoint collides with an anchor".into()));
                    }
                    visits[last_idx].end = Some(EndBit::Link);
                    if tip_is_shared(z, visits[last_idx].tip) {
                        Some(LinkAttach::ChannelFromEnd)
                    } else {
                        Some(LinkAttach::InwardFromEnd)
                    }
                }
            }
        } else {
            None
        };
        if visits[last_idx].end.is_none() {
            visits[last_idx].end = Some(EndBit::Free);
        }

        plans.push(StringPlan { site: z, eps, visits, link });
    }

    // ---- pads ---------------------------------------------------------------
    // pad chord endpoints per (string, tip); behind them the prong targets
    let mut pads: BTreeMap<(SId, usize), (Pt, Pt)> = BTreeMap::new();
    for (s, plan) in plans.iter().enumerate() {
        let site = &sites[plan.site];
        for v in &plan.visits {
            let tipf = TipFrame::new(site, &site.tips[v.tip]);
            let (lo, hi) = lane_span(&tipf, v.lane);
            pads.insert((s, v.tip), (tipf.at(&tipf.t_pad, &lo), tipf.at(&tipf.t_pad, &hi)));
        }
    }

    // target points: group prongs by the pad they land on, keep the lateral
    // order of their corners
    let mut prong_target: BTreeMap<usize, Pt> = BTreeMap::new();
    {
        struct Req {
            ei: usize,
            corner: Pt,
        }
        let mut by_pad: BTreeMap<(SId, usize), Vec<Req>> = BTreeMap::new();
        for (ei, who) in anchor_of.iter().enumerate() {
            let who = who.unwrap();
            let (s_a, t_a) = side_of(ei, who);
            let (s_p, t_p) = side_of(ei, 1 - who);
            if !pads.contains_key(&(s_p, t_p)) {
                return Err(fail("prong targets a missing pad".into()));
            }
            let plan = &plans[s_a];
            let site = &sites[plan.site];
            let v = plan
                .visits
                .iter()
                .enumerate()
                .find(|(_, v)| v.tip == t_a)
                .map(|(k, v)| (k, v.clone()))
                .ok_or_else(|| fail("anchored tip is not visited".into()))?;
            let (k, vp) = v;
            let tipf = TipFrame::new(site, &site.tips[t_a]);
            let is_start = k == 0 && vp.start == Some(EndBit::Prong(ei));
            let side = prong_corner_side(&vp, plan.eps, is_start);
            let corner = tipf.at(&tipf.t_pad, &side_lat(&tipf, vp.lane, side));
            by_pad.entry((s_p, t_p)).or_default().push(Req { ei, corner });
        }
        for ((s_p, t_p), mut reqs) in by_pad {
            let (a, b) = pads[&(s_p, t_p)].clone();
            // order corners and targets along the pad direction
            let dirp = b.sub(&a);
            reqs.sort_by(|x, y| dirp.dot(&x.corner.sub(&a)).cmp(&dirp.dot(&y.corner.sub(&a))));
            let k = reqs.len();
            for (i, r) in reqs.iter().enumerate() {
                let theta = qr((i + 1) as i64, (k + 1) as i64);
                prong_target.insert(r.ei, a.lerp(&b, &theta));
            }
        }
    }

    // ---- emission ------------------------------------------------------------
    let mut strings: Vec<Vec<Pt>> = vec![Vec::new(); g.n()];
    let mut order: Vec<SId> = Vec::new();
    {
        let mut seen = vec![false; g.n()];
        for s in 0..g.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            order.push(s);
            if let Some(p) = m.partner(s as Vertex) {
                seen[p as usize] = true;
                order.push(p as usize);
            }
        }
    }
    let mut link_of: BTreeMap<SId, (Pt, Pt)> = BTreeMap::new();

    for &s in &order {
        let plan = &plans[s];
        let site = &sites[plan.site];
        let mut pts: Vec<Pt> = Vec::new();

        if plan.visits.is_empty() {
            match plan.link {
                None => {
                    strings[s] = vec![site.pos.clone()];
                }
                Some(LinkAttach::Dash) => {
                    let a = site.pos.add(&Pt::new(&site.rho / q(2), -&site.rho / q(3)));
                    let b = site.pos.add(&Pt::new(-&site.rho / q(2), &site.rho / q(3)));
                    strings[s] = emit_link(s, m, &a, &b, &site.rho, &mut link_of);
                }
                _ => return Err(fail("bad link attachment".into())),
            }
            continue;
        }

        let count = plan.visits.len();
        let mut pending_link: Option<(Pt, Pt)> = None;
        for (k, v) in plan.visits.iter().enumerate() {
            let tip = &site.tips[v.tip];
            let tipf = TipFrame::new(site, tip);
            let (in_lat, out_lat) = visit_laterals(&tipf, v, plan.eps);
            let dtp = &tipf.t_pad / q(64);

            // arrival
            if k > 0 {
                if plan.link == Some(LinkAttach::BetweenVisits) && k == 1 {
                    // chord mode: arrive from the interior
                    let att = inward_attach(&tipf, params, plan.eps == 1);
                    let va = pending_link.take().expect("link endpoints set");
                    let path = emit_link(s, m, &va.0, &att, &site.rho, &mut link_of);
                    pts.extend(path);
                    let _ = va.1;
                    pts.push(tipf.at(&tipf.t_pad, &in_lat));
                } else {
                    let prev = plan.visits[k - 1].tip;
                    let (lo, hi) = if plan.eps == 1 { (prev, v.tip) } else { (v.tip, prev) };
                    pts.push(gap_waypoint(site, lo, hi, params));
                    pts.push(tipf.at(&tipf.t_pad, &in_lat));
                }
            } else {
                // start bit
                match v.start.as_ref().unwrap_or(&EndBit::Free) {
                    EndBit::Prong(ei) => pts.push(prong_target[ei].clone()),
                    EndBit::Free => pts.push(tipf.at(&(&tipf.t_pad + &dtp), &in_lat)),
                    EndBit::Link => return Err(fail("link cannot start a walk".into())),
                }
                pts.push(tipf.at(&tipf.t_pad, &in_lat));
            }

            // the pad chord
            pts.push(tipf.at(&tipf.t_pad, &out_lat));

            // departure or end
            if k < count - 1 {
                if plan.link == Some(LinkAttach::BetweenVisits) && k == 0 {
                    let att = inward_attach(&tipf, params, plan.eps == 1);
                    pts.push(att.clone());
                    pending_link = Some((att, site.pos.clone()));
                } else {
                    // waypoint emitted on arrival of the next visit
                }
            } else {
                match v.end.as_ref().unwrap_or(&EndBit::Free) {
                    EndBit::Prong(ei) => pts.push(prong_target[ei].clone()),
                    EndBit::Free => pts.push(tipf.at(&(&tipf.t_pad + &dtp), &out_lat)),
                    EndBit::Link => {
                        let (a, b) = match plan.link {
                            Some(LinkAttach::InwardFromEnd) => {
                                let att = inward_attach(&tipf, params, plan.eps == 1);
                                let deep = site
                                    .pos
                                    .add(&site.pos.sub(&att).scale(&qr(1, 3)));
                                (att, deep)
                            }
                            Some(LinkAttach::ChannelFromEnd) => {
                                let att = channel_attach(&tipf, v.lane, params);
                                let deep = site
                                    .pos
                                    .add(&site.pos.sub(&att).scale(&qr(1, 3)));
                                (att, deep)
                            }
                            _ => return Err(fail("bad link attachment".into())),
                        };
                        let path = emit_link(s, m, &a, &b, &site.rho, &mut link_of);
                        pts.extend(path);
                    }
                }
            }
        }
        strings[s] = pts;
    }

    Ok(strings)
}

// lane span in frame lateral units: full corridor for lane 0, the outer or
// inner band otherwise
fn lane_span(tipf: &TipFrame, lane: i64) -> (Q, Q) {
    let w = &tipf.w;
    let gch = w / q(3);
    match lane {
        0 => (-w.clone(), w.clone()),
        -1 => (-w.clone(), -gch),
        _ => (gch, w.clone()),
    }
}

// arrival-side and departure-side laterals of a visit
fn visit_laterals(tipf: &TipFrame, v: &VisitPlan, eps: i64) -> (Q, Q) {
    let (lo, hi) = lane_span(tipf, v.lane);
    if v.lane == 0 {
        if eps == 1 {
            (lo, hi)
        } else {
            (hi, lo)
        }
    } else {
        // lanes: enter at the outer corner, finish at the inner one
        if v.lane < 0 {
            (lo, hi)
        } else {
            (hi, lo)
        }
    }
}

// which lateral the prong leaves from
fn prong_corner_side(v: &VisitPlan, eps: i64, is_start: bool) -> i64 {
    if v.lane != 0 {
        return v.lane;
    }
    if is_start {
        -eps
    } else {
        eps
    }
}

fn side_lat(tipf: &TipFrame, lane: i64, side: i64) -> Q {
    let (lo, hi) = lane_span(tipf, lane);
    if lane == 0 {
        if side < 0 {
            lo
        } else {
            hi
        }
    } else if lane < 0 {
        lo
    } else {
        hi
    }
}

fn inward_attach(tipf: &TipFrame, params: &Params, _ccw: bool) -> Pt {
    tipf.at(&(&tipf.t_x * qr(params.att_num(), 64)), &Q::zero())
}

fn channel_attach(tipf: &TipFrame, lane: i64, params: &Params) -> Pt {
    let gch = &tipf.w / q(6);
    let lat = if lane < 0 { -gch } else { gch };
    tipf.at(&(&tipf.t_x * qr(params.att_num(), 64)), &lat)
}

/// Emits the interior link from `a` to `b`. The first half of a pair gets
/// the straight segment; the partner routes through guard points so the
/// two links cross exactly once.
fn emit_link(
    s: SId,
    m: &Matching,
    a: &Pt,
    b: &Pt,
    scale: &Q,
    link_of: &mut BTreeMap<SId, (Pt, Pt)>,
) -> Vec<Pt> {
    let partner = m.partner(s as Vertex).map(|p| p as SId);
    if let Some(p) = partner {
        if let Some((va, vb)) = link_of.get(&p).cloned() {
            return route_crossing_once(&va, &vb, a, b, scale);
        }
    }
    link_of.insert(s, (a.clone(), b.clone()));
    vec![a.clone(), b.clone()]
}

/// A polyline from `from` to `to` crossing the open segment (va, vb)
/// exactly once.
fn route_crossing_once(va: &Pt, vb: &Pt, from: &Pt, to: &Pt, scale: &Q) -> Vec<Pt> {
    let dir = vb.sub(va);
    let side = |p: &Pt| -> i8 {
        let c = dir.cross(&p.sub(va));
        if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        }
    };
    let mid = va.lerp(vb, &qr(1, 2));
    let perp = dir.rot90();
    let pl = perp.l1();
    let step = scale / (q(12) * pl.max(q(1)));
    let k_pos = mid.add(&perp.scale(&step));
    let k_neg = mid.sub(&perp.scale(&step));
    let (sf, st) = (side(from), side(to));
    if sf != 0 && st != 0 && sf != st {
        let k1 = if sf > 0 { k_pos.clone() } else { k_neg.clone() };
        let k2 = if st > 0 { k_pos } else { k_neg };
        vec![from.clone(), k1, k2, to.clone()]
    } else {
        // both endpoints on one side of the line: cross at the middle and
        // come back around the far end of the segment
        let s0 = if sf != 0 { sf } else { 1 };
        let k1 = if s0 > 0 { k_pos.clone() } else { k_neg.clone() };
        let k2 = if s0 > 0 { k_neg } else { k_pos };
        let beyond = vb.add(&dir.scale(&qr(1, 4)));
        let back = beyond.add(&perp.scale(&(step * q(s0 as i64))));
        vec![from.clone(), k1, k2, beyond, back, to.clone()]
    }
}
