//! Exact recognition of subcubic string graphs by planarizing-matching
//! search.
//!
//! A graph with a matching whose contraction is planar is a string graph,
//! and a subcubic string graph always has such a matching consisting of
//! cubic edges only. Recognition therefore searches matchings: for subcubic
//! input over cubic edges exhaustively (exact in both directions), for
//! anything else over all matchings (sufficient only). A second exact rule
//! applies when every edge has a degree-two endpoint: then string-ness
//! coincides with planarity outright.

use serde::Serialize;

use crate::error::Error;
use crate::graph::{contract_matching, girth, Graph, Matching, Vertex};
use crate::planarity::{euler_girth_reject, is_planar};
use crate::DEFAULT_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    String,
    NonString,
    Unknown,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::String => "string",
            Status::NonString => "non-string",
            Status::Unknown => "unknown",
        }
    }
}

/// Which rule justified a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    /// The graph itself is planar; the empty matching certifies it.
    Planar,
    /// Every edge has a degree-two endpoint, so string-ness equals
    /// planarity; here the graph was non-planar.
    DegreeTwoEndpoints,
    /// A planarizing matching was found.
    MatchingContraction,
    /// Subcubic input, every cubic matching examined, none planarizes.
    CubicExhaustion,
    /// Non-subcubic input, every matching examined, none planarizes;
    /// nothing can be concluded.
    AllMatchingsExhausted,
}

impl Rule {
    pub fn as_str(&self) -> &'static str {
        match self {
            Rule::Planar => "planar",
            Rule::DegreeTwoEndpoints => "d2-planar",
            Rule::MatchingContraction => "matching-contraction",
            Rule::CubicExhaustion => "cubic-exhaustion",
            Rule::AllMatchingsExhausted => "all-matchings-exhausted",
        }
    }
}

/// Record of an exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Exhaustion {
    pub matchings_examined: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Matching>,
    pub exhaustion: Option<Exhaustion>,
    pub rule: Rule,
}

impl Verdict {
    /// Certificate form: {status, witness_edges, matchings_examined, rule}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "status": self.status.as_str(),
            "witness_edges": self.witness.as_ref().map(|m| m.edges().to_vec()),
            "matchings_examined": self.exhaustion.map(|e| e.matchings_examined),
            "rule": self.rule.as_str(),
        })
    }
}

/// Streams every matching over the given edge pool, smallest first and in
/// lexicographic index order within each size. The empty matching comes
/// first.
pub struct MatchingIter<'a> {
    g: &'a Graph,
    pool: Vec<(Vertex, Vertex)>,
    size: usize,
    buffer: std::collections::VecDeque<Vec<usize>>,
    done: bool,
}

impl<'a> MatchingIter<'a> {
    fn new(g: &'a Graph, pool: Vec<(Vertex, Vertex)>) -> Self {
        MatchingIter {
            g,
            pool,
            size: 0,
            buffer: std::collections::VecDeque::from([Vec::new()]),
            done: false,
        }
    }

    fn fill_next_size(&mut self) {
        self.size += 1;
        if self.size > self.pool.len() {
            self.done = true;
            return;
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        let pool = &self.pool;
        let k = self.size;
        fn rec(
            pool: &[(Vertex, Vertex)],
            k: usize,
            start: usize,
            cur: &mut Vec<usize>,
            used: &mut Vec<Vertex>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..pool.len() {
                let (a, b) = pool[i];
                if used.contains(&a) || used.contains(&b) {
                    continue;
                }
                cur.push(i);
                used.push(a);
                used.push(b);
                rec(pool, k, i + 1, cur, used, out);
                used.pop();
                used.pop();
                cur.pop();
            }
        }
        let mut cur = Vec::new();
        let mut used = Vec::new();
        rec(pool, k, 0, &mut cur, &mut used, &mut out);
        if out.is_empty() {
            self.done = true;
        } else {
            self.buffer.extend(out);
        }
    }
}

impl<'a> Iterator for MatchingIter<'a> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        loop {
            if let Some(indices) = self.buffer.pop_front() {
                let edges: Vec<_> = indices.iter().map(|&i| self.pool[i]).collect();
                return Some(Matching::new(self.g, edges).expect("pool edges form a matching"));
            }
            if self.done {
                return None;
            }
            self.fill_next_size();
        }
    }
}

/// Every matching made of cubic edges, including the empty one, each
/// exactly once, in deterministic order (by size, then lexicographically).
pub fn enumerate_cubic_matchings(g: &Graph) -> MatchingIter<'_> {
    MatchingIter::new(g, g.cubic_edges())
}

/// Every matching of the graph, same ordering contract.
pub fn enumerate_all_matchings(g: &Graph) -> MatchingIter<'_> {
    MatchingIter::new(g, g.edges().to_vec())
}

struct SearchOutcome {
    found: Option<Matching>,
    examined: u64,
}

fn search(g: &Graph, cubic_only: bool, budget: u64) -> Result<SearchOutcome, Error> {
    // A contraction of a matching halves cycles at worst, so girth(G/M) is
    // at least ceil(girth(G)/2); that feeds the density rejection below.
    let girth_bound = girth(g).map(|gi| (gi.div_ceil(2)).max(3)).unwrap_or(3);
    let iter = if cubic_only {
        enumerate_cubic_matchings(g)
    } else {
        enumerate_all_matchings(g)
    };
    let mut examined = 0u64;
    for m in iter {
        examined += 1;
        if examined > budget {
            return Err(Error::BudgetExhausted { examined, context: None });
        }
        let h = contract_matching(g, &m)?;
        if h.n() >= 3 && euler_girth_reject(h.n(), h.edge_count(), girth_bound) {
            continue; // examined but rejected without a planarity test
        }
        if is_planar(&h) {
            return Ok(SearchOutcome { found: Some(m), examined });
        }
    }
    Ok(SearchOutcome { found: None, examined })
}

/// Searches for a matching (cubic-only if requested) whose contraction is
/// planar. Returns the first hit in the deterministic search order: for a
/// planar graph that is the empty matching. `None` means the whole family
/// was exhausted.
pub fn find_planarizing_matching(
    g: &Graph,
    cubic_only: bool,
    budget: u64,
) -> Result<Option<Matching>, Error> {
    Ok(search(g, cubic_only, budget)?.found)
}

/// The sufficiency direction alone, for graphs of any degree: some
/// planarizing matching, if one exists among all matchings.
pub fn recognize_sufficient(g: &Graph, budget: u64) -> Result<Option<Matching>, Error> {
    find_planarizing_matching(g, false, budget)
}

/// Full recognition with certificates, using the default budget.
pub fn recognize(g: &Graph) -> Result<Verdict, Error> {
    recognize_with_budget(g, DEFAULT_BUDGET)
}

pub fn recognize_with_budget(g: &Graph, budget: u64) -> Result<Verdict, Error> {
    if is_planar(g) {
        return Ok(Verdict {
            status: Status::String,
            witness: Some(Matching::empty()),
            exhaustion: None,
            rule: Rule::Planar,
        });
    }
    // Non-planar from here on.
    if g.every_edge_has_degree_two_endpoint() {
        // String-ness equals planarity for such graphs, whatever the
        // maximum degree; this settles 1-subdivisions of K5 and the like.
        return Ok(Verdict {
            status: Status::NonString,
            witness: None,
            exhaustion: None,
            rule: Rule::DegreeTwoEndpoints,
        });
    }
    if g.is_subcubic() {
        let out = search(g, true, budget)?;
        let exhaustion = Some(Exhaustion { matchings_examined: out.examined });
        return Ok(match out.found {
            Some(m) => Verdict {
                status: Status::String,
                witness: Some(m),
                exhaustion,
                rule: Rule::MatchingContraction,
            },
            None => Verdict {
                status: Status::NonString,
                witness: None,
                exhaustion,
                rule: Rule::CubicExhaustion,
            },
        });
    }
    let out = search(g, false, budget)?;
    let exhaustion = Some(Exhaustion { matchings_examined: out.examined });
    Ok(match out.found {
        Some(m) => Verdict {
            status: Status::String,
            witness: Some(m),
            exhaustion,
            rule: Rule::MatchingContraction,
        },
        None => Verdict {
            status: Status::Unknown,
            witness: None,
            exhaustion,
            rule: Rule::AllMatchingsExhausted,
        },
    })
}
