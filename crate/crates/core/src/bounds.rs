//! Common edges under vertex bijections, exact/bounded maximization, and
//! the flip-distance arithmetic built on top of both.
//!
//! The flip lower bound always consumes the *proved upper bound* on the
//! maximum common-edge count, so it stays sound when the search runs out of
//! budget and returns an inexact window.

use crate::kernel::{Triangulation, Vertex};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("triangulations have {left} and {right} vertices; sizes must match")]
    SizeMismatch { left: usize, right: usize },
    #[error("mapping has {len} entries for {n} vertices")]
    BadMappingLength { len: usize, n: usize },
    #[error("mapping image {0} is repeated or out of range")]
    BadMappingImage(Vertex),
    #[error("n must be at least {min}, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("exhaustive mode supports at most {max} vertices, got {got}")]
    TooLargeForExact { max: usize, got: usize },
    #[error("invalid path cover: {0}")]
    InvalidCover(String),
    #[error("cover has {paths} paths but only {max} fit on the target path")]
    TooManyPaths { paths: usize, max: usize },
}

/// Row-major adjacency bitset.
pub(crate) struct AdjBits {
    words: usize,
    bits: Vec<u64>,
}

impl AdjBits {
    pub(crate) fn new(t: &Triangulation) -> Self {
        let n = t.n();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for v in 0..n {
            for &w in t.rotation(v as Vertex) {
                bits[v * words + (w as usize) / 64] |= 1 << (w % 64);
            }
        }
        AdjBits { words, bits }
    }

    #[inline]
    pub(crate) fn adjacent(&self, u: Vertex, w: Vertex) -> bool {
        self.bits[u as usize * self.words + (w as usize) / 64] & (1 << (w % 64)) != 0
    }
}

fn check_bijection(forward: &[Vertex], n: usize) -> Result<(), BoundsError> {
    if forward.len() != n {
        return Err(BoundsError::BadMappingLength { len: forward.len(), n });
    }
    let mut seen = vec![false; n];
    for &w in forward {
        if w as usize >= n || seen[w as usize] {
            return Err(BoundsError::BadMappingImage(w));
        }
        seen[w as usize] = true;
    }
    Ok(())
}

/// Counts edges `{u,v}` of `g1` with `{forward[u],forward[v]}` an edge of
/// `g2`. `forward` must be a bijection `V(g1) -> V(g2)`.
pub fn common_edges(
    g1: &Triangulation,
    g2: &Triangulation,
    forward: &[Vertex],
) -> Result<u32, BoundsError> {
    if g1.n() != g2.n() {
        return Err(BoundsError::SizeMismatch { left: g1.n(), right: g2.n() });
    }
    check_bijection(forward, g1.n())?;
    let adj2 = AdjBits::new(g2);
    Ok(common_edges_counted(g1, &adj2, forward))
}

fn common_edges_counted(g1: &Triangulation, adj2: &AdjBits, forward: &[Vertex]) -> u32 {
    let mut count = 0;
    for u in 0..g1.n() {
        let fu = forward[u];
        for &v in g1.rotation(u as Vertex) {
            if (u as Vertex) < v && adj2.adjacent(fu, forward[v as usize]) {
                count += 1;
            }
        }
    }
    count
}

/// A bijection between the vertex sets of two equal-size triangulations,
/// with its common-edge count cached at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexBijection {
    forward: Vec<Vertex>,
    common: u32,
}

impl VertexBijection {
    pub fn new(
        g1: &Triangulation,
        g2: &Triangulation,
        forward: Vec<Vertex>,
    ) -> Result<Self, BoundsError> {
        let common = common_edges(g1, g2, &forward)?;
        Ok(VertexBijection { forward, common })
    }

    pub fn forward(&self) -> &[Vertex] {
        &self.forward
    }

    pub fn map(&self, v: Vertex) -> Vertex {
        self.forward[v as usize]
    }

    pub fn common(&self) -> u32 {
        self.common
    }

    /// Witness text: a `c=<count>` header, then one `i -> γ(i)` line per vertex.
    pub fn to_witness_text(&self) -> String {
        let mut out = format!("c={}\n", self.common);
        for (i, &w) in self.forward.iter().enumerate() {
            out.push_str(&format!("{} -> {}\n", i, w));
        }
        out
    }
}

/// Node/time caps for [`max_common_edges`]. An exhausted budget never makes
/// the result wrong, only inexact.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes: Some(max_nodes), max_millis: None }
    }
}

/// Outcome of the common-edge maximization: a witness giving `lower`, a
/// proved `upper`, and whether the search closed the gap.
#[derive(Clone, Debug)]
pub struct MaxCommonResult {
    pub lower: u32,
    pub upper: u32,
    pub exact: bool,
    pub witness: VertexBijection,
    pub nodes_explored: u64,
}

struct Searcher<'a> {
    g1: &'a Triangulation,
    adj2: AdjBits,
    n: usize,
    order: Vec<Vertex>,
    deg2: Vec<u32>,
    forward: Vec<u32>, // g1 -> g2, UNSET when free
    used2: Vec<bool>,
    assigned_nbrs: Vec<u32>, // per g1 vertex, how many neighbors are assigned
    best: u32,
    best_forward: Vec<Vertex>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    aborted: bool,
    abandoned_upper: u32,
}

const UNSET: u32 = u32::MAX;

impl<'a> Searcher<'a> {
    /// Admissible bound on edges still collectible: each future common edge
    /// has an unassigned endpoint. Edges to the assigned side count once per
    /// unassigned endpoint; edges between two unassigned vertices are
    /// counted at both ends, so that sum is halved. Both are capped by the
    /// largest degree still available in g2.
    fn future_bound(&self) -> u32 {
        let mut d2max = 0u32;
        for w in 0..self.n {
            if !self.used2[w] && self.deg2[w] > d2max {
                d2max = self.deg2[w];
            }
        }
        let mut cross = 0u32;
        let mut open = 0u32;
        for u in 0..self.n {
            if self.forward[u] != UNSET {
                continue;
            }
            let deg = self.g1.rotation(u as Vertex).len() as u32;
            let a = self.assigned_nbrs[u];
            cross += a.min(d2max);
            open += (deg - a).min(d2max);
        }
        cross + open / 2
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.max_nodes {
            return true;
        }
        if let Some(deadline) = self.deadline {
            // Clock checks are amortized; node counts alone keep repeat runs
            // deterministic when no time cap is set.
            if self.nodes % 1024 == 0 && Instant::now() >= deadline {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, depth: usize, current: u32) {
        self.nodes += 1;
        let entry_bound = current + self.future_bound();
        if self.aborted || entry_bound <= self.best {
            if self.aborted {
                self.abandoned_upper = self.abandoned_upper.max(entry_bound);
            }
            return;
        }
        if self.out_of_budget() {
            self.aborted = true;
            self.abandoned_upper = self.abandoned_upper.max(entry_bound);
            return;
        }
        if depth == self.n {
            // entry_bound == current here; strictly better than best.
            self.best = current;
            self.best_forward = self.forward.clone();
            return;
        }
        let u = self.order[depth] as usize;
        for w in 0..self.n {
            if self.used2[w] {
                continue;
            }
            let mut gain = 0u32;
            for &x in self.g1.rotation(u as Vertex) {
                let fx = self.forward[x as usize];
                if fx != UNSET && self.adj2.adjacent(w as Vertex, fx) {
                    gain += 1;
                }
            }
            self.forward[u] = w as u32;
            self.used2[w] = true;
            for &x in self.g1.rotation(u as Vertex) {
                self.assigned_nbrs[x as usize] += 1;
            }
            self.dfs(depth + 1, current + gain);
            for &x in self.g1.rotation(u as Vertex) {
                self.assigned_nbrs[x as usize] -= 1;
            }
            self.forward[u] = UNSET;
            self.used2[w] = false;
            if self.aborted {
                self.abandoned_upper = self.abandoned_upper.max(entry_bound);
                return;
            }
        }
    }
}

/// Deterministic warm start: degree-greedy seed improved by first-improvement
/// pair swaps until a local optimum (or a pass cap) is reached.
fn local_search(g1: &Triangulation, g2: &Triangulation) -> Vec<Vertex> {
    let n = g1.n();
    let adj2 = AdjBits::new(g2);
    let by_degree = |t: &Triangulation| {
        let mut vs: Vec<Vertex> = (0..n as Vertex).collect();
        vs.sort_by_key(|&v| (std::cmp::Reverse(t.rotation(v).len()), v));
        vs
    };
    let o1 = by_degree(g1);
    let o2 = by_degree(g2);
    let mut forward = vec![0; n];
    for (a, b) in o1.iter().zip(o2.iter()) {
        forward[*a as usize] = *b;
    }

    let incident = |forward: &[Vertex], v: usize| -> i64 {
        let mut c = 0;
        for &x in g1.rotation(v as Vertex) {
            if adj2.adjacent(forward[v], forward[x as usize]) {
                c += 1;
            }
        }
        c
    };
    for _pass in 0..8 {
        let mut improved = false;
        for i in 0..n {
            for j in i + 1..n {
                let shared = if g1.has_edge(i as Vertex, j as Vertex)
                    && adj2.adjacent(forward[i], forward[j])
                {
                    1
                } else {
                    0
                };
                let before = incident(&forward, i) + incident(&forward, j) - shared;
                forward.swap(i, j);
                let shared_after = if g1.has_edge(i as Vertex, j as Vertex)
                    && adj2.adjacent(forward[i], forward[j])
                {
                    1
                } else {
                    0
                };
                let after = incident(&forward, i) + incident(&forward, j) - shared_after;
                if after > before {
                    improved = true;
                } else {
                    forward.swap(i, j);
                }
            }
        }
        if !improved {
            break;
        }
    }
    forward
}

/// Maximizes the common-edge count over all bijections by branch and bound
/// over partial assignments (g1 vertices in decreasing-degree order). The
/// result is exact when the search finishes within budget; otherwise `lower`
/// carries the best witness found and `upper` the best proved bound.
pub fn max_common_edges(
    g1: &Triangulation,
    g2: &Triangulation,
    budget: SearchBudget,
) -> Result<MaxCommonResult, BoundsError> {
    let n = g1.n();
    if n != g2.n() {
        return Err(BoundsError::SizeMismatch { left: n, right: g2.n() });
    }
    let warm = local_search(g1, g2);
    let adj2 = AdjBits::new(g2);
    let warm_value = common_edges_counted(g1, &adj2, &warm);

    let mut order: Vec<Vertex> = (0..n as Vertex).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g1.rotation(v).len()), v));
    let deg2: Vec<u32> = (0..n as Vertex).map(|v| g2.rotation(v).len() as u32).collect();

    let mut searcher = Searcher {
        g1,
        adj2,
        n,
        order,
        deg2,
        forward: vec![UNSET; n],
        used2: vec![false; n],
        assigned_nbrs: vec![0; n],
        best: warm_value,
        best_forward: warm.clone(),
        nodes: 0,
        max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
        deadline: budget.max_millis.map(|ms| Instant::now() + std::time::Duration::from_millis(ms)),
        aborted: false,
        abandoned_upper: 0,
    };
    searcher.dfs(0, 0);

    let exact = !searcher.aborted;
    let lower = searcher.best;
    let upper = if exact { lower } else { searcher.abandoned_upper.max(lower) };
    let witness = VertexBijection::new(g1, g2, searcher.best_forward)?;
    debug_assert_eq!(witness.common(), lower);
    Ok(MaxCommonResult { lower, upper, exact, witness, nodes_explored: searcher.nodes })
}

/// Flip lower bound from a common-edge window: transforming `g1` into `g2`
/// takes at least `3n - 6 - upper` flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlipLowerBound {
    pub flips: u32,
    pub exact: bool,
}

pub fn lemma1_bound(
    g1: &Triangulation,
    g2: &Triangulation,
    mc: &MaxCommonResult,
) -> Result<FlipLowerBound, BoundsError> {
    let n = g1.n();
    if n != g2.n() {
        return Err(BoundsError::SizeMismatch { left: n, right: g2.n() });
    }
    let all = (3 * n - 6) as u32;
    debug_assert!(mc.upper <= all);
    Ok(FlipLowerBound { flips: all.saturating_sub(mc.upper), exact: mc.exact })
}

/// The closed-form flip-distance lower bound between the two extremal
/// constructions, in both its exact and relaxed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremBound {
    pub n: u64,
    /// `3n - 6 - (2*floor(n/3) + 28)`
    pub flip_lower_bound: i64,
    /// Numerator of the relaxed form `(7n - 102) / 3`.
    pub relaxed_numerator: i64,
}

impl TheoremBound {
    pub const RELAXED_DENOMINATOR: i64 = 3;

    /// The exact form dominates the relaxed form for every n.
    pub fn holds(&self) -> bool {
        3 * self.flip_lower_bound >= self.relaxed_numerator
    }

    /// The relaxed bound as an integer when `7n - 102` is divisible by 3.
    pub fn relaxed_integer(&self) -> Option<i64> {
        (self.relaxed_numerator % 3 == 0).then_some(self.relaxed_numerator / 3)
    }
}

pub fn theorem_bound(n: u64) -> Result<TheoremBound, BoundsError> {
    if n < 3 {
        return Err(BoundsError::TooSmall { min: 3, got: n as usize });
    }
    let ni = n as i64;
    Ok(TheoremBound {
        n,
        flip_lower_bound: 3 * ni - 6 - (2 * (ni / 3) + 28),
        relaxed_numerator: 7 * ni - 102,
    })
}
