//! Flip-graph enumeration for small vertex counts.
//!
//! Nodes are canonical codes of triangulations; edges join codes one valid
//! flip apart. Enumeration runs a breadth-first search seeded at the
//! double-apex triangulation, deduplicating by canonical code. The finished
//! catalog stores nodes sorted by code, so identical inputs serialize to
//! identical bytes no matter the traversal interleaving or worker count.

use crate::canon::{canonical_code, CanonicalCode, MirrorMode};
use crate::constructions::{build_g2, ConstructionError};
use crate::kernel::Triangulation;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("n must be at least 4, got {0}")]
    TooSmall(usize),
    #[error("node limit {limit} exceeded: {nodes} nodes and {edges} edges found so far")]
    ResourceLimit { limit: usize, nodes: usize, edges: usize },
    #[error("triangulation has {got} vertices, catalog holds n={expected}")]
    WrongSize { got: usize, expected: usize },
    #[error("canonical code not present in the catalog")]
    NodeNotFound,
    #[error("catalog is disconnected: node {0} unreachable")]
    Disconnected(usize),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    pub mirror: MirrorMode,
    /// Worker threads for frontier expansion; results are identical for any
    /// value. 1 disables the thread pool.
    pub workers: usize,
    /// Abort with [`EngineError::ResourceLimit`] when more nodes appear.
    pub node_limit: Option<usize>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { mirror: MirrorMode::On, workers: 1, node_limit: None }
    }
}

/// The enumerated flip graph for one vertex count: canonical codes with
/// dense ids (sorted by code) and symmetric adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipGraphCatalog {
    n: usize,
    mirror: MirrorMode,
    codes: Vec<CanonicalCode>,
    adjacency: Vec<Vec<u32>>,
    seed_index: usize,
}

impl FlipGraphCatalog {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mirror_mode(&self) -> MirrorMode {
        self.mirror
    }

    pub fn node_count(&self) -> usize {
        self.codes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn codes(&self) -> &[CanonicalCode] {
        &self.codes
    }

    pub fn code(&self, id: usize) -> &CanonicalCode {
        &self.codes[id]
    }

    pub fn neighbors(&self, id: usize) -> &[u32] {
        &self.adjacency[id]
    }

    /// Index of the enumeration seed (the double-apex triangulation).
    pub fn seed_index(&self) -> usize {
        self.seed_index
    }

    pub fn find(&self, code: &CanonicalCode) -> Option<usize> {
        self.codes.binary_search(code).ok()
    }

    pub(crate) fn from_parts(
        n: usize,
        mirror: MirrorMode,
        codes: Vec<CanonicalCode>,
        adjacency: Vec<Vec<u32>>,
        seed_index: usize,
    ) -> Self {
        FlipGraphCatalog { n, mirror, codes, adjacency, seed_index }
    }

    fn node_of(&self, t: &Triangulation) -> Result<usize, EngineError> {
        if t.n() != self.n {
            return Err(EngineError::WrongSize { got: t.n(), expected: self.n });
        }
        self.find(&canonical_code(t, self.mirror)).ok_or(EngineError::NodeNotFound)
    }

    fn bfs_from(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.node_count()];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[v] + 1;
                    queue.push_back(w as usize);
                }
            }
        }
        dist
    }

    /// Exact flip distance between the isomorphism classes of `t1` and `t2`.
    pub fn distance(&self, t1: &Triangulation, t2: &Triangulation) -> Result<u32, EngineError> {
        self.distance_ids(self.node_of(t1)?, self.node_of(t2)?)
    }

    pub fn distance_ids(&self, a: usize, b: usize) -> Result<u32, EngineError> {
        if a >= self.node_count() || b >= self.node_count() {
            return Err(EngineError::NodeNotFound);
        }
        let dist = self.bfs_from(a);
        if dist[b] == u32::MAX {
            return Err(EngineError::Disconnected(b));
        }
        Ok(dist[b])
    }

    /// Exact diameter by all-sources BFS, with one antipodal witness pair
    /// (the lexicographically smallest ids among maximizers).
    pub fn diameter(&self) -> Result<(u32, (usize, usize)), EngineError> {
        let mut best = (0u32, (0usize, 0usize));
        for src in 0..self.node_count() {
            let dist = self.bfs_from(src);
            for (dst, &d) in dist.iter().enumerate() {
                if d == u32::MAX {
                    return Err(EngineError::Disconnected(dst));
                }
                if d > best.0 {
                    best = (d, (src, dst));
                }
            }
        }
        Ok(best)
    }

    /// All-pairs distances; row `i` is BFS from node `i`.
    pub fn all_distances(&self) -> Result<Vec<Vec<u32>>, EngineError> {
        (0..self.node_count())
            .map(|src| {
                let dist = self.bfs_from(src);
                if let Some(dst) = dist.iter().position(|&d| d == u32::MAX) {
                    return Err(EngineError::Disconnected(dst));
                }
                Ok(dist)
            })
            .collect()
    }
}

/// All valid flips of `t`, canonicalized.
fn expand(t: &Triangulation, mirror: MirrorMode) -> Vec<(CanonicalCode, Triangulation)> {
    let mut out = Vec::new();
    for (a, b) in t.edges() {
        if let Ok(next) = t.flip(a, b) {
            let code = canonical_code(&next, mirror);
            out.push((code, next));
        }
    }
    out
}

/// Enumerates the component of the flip graph reachable from the double-apex
/// seed. For every n where an independent count is known this is the whole
/// flip graph; the catalog itself only claims reachability.
pub fn enumerate(n: usize, opts: EnumerateOptions) -> Result<FlipGraphCatalog, EngineError> {
    enumerate_with_representatives(n, opts).map(|(cat, _)| cat)
}

/// Like [`enumerate`], also returning one concrete triangulation per node,
/// aligned with the catalog's node ids.
pub fn enumerate_with_representatives(
    n: usize,
    opts: EnumerateOptions,
) -> Result<(FlipGraphCatalog, Vec<Triangulation>), EngineError> {
    if n < 4 {
        return Err(EngineError::TooSmall(n));
    }
    let seed = build_g2(n)?.tri;
    let seed_code = canonical_code(&seed, opts.mirror);

    let mut ids: std::collections::HashMap<CanonicalCode, u32> = std::collections::HashMap::new();
    let mut adjacency: Vec<std::collections::BTreeSet<u32>> = Vec::new();
    let mut representatives: Vec<Triangulation> = vec![seed.clone()];
    ids.insert(seed_code.clone(), 0);
    adjacency.push(std::collections::BTreeSet::new());
    let mut frontier: Vec<(u32, Triangulation)> = vec![(0, seed)];

    let pool = if opts.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .expect("thread pool"),
        )
    } else {
        None
    };

    while !frontier.is_empty() {
        // Expansion is pure; ordered collection keeps the merge, and with it
        // the discovered set, identical for every worker count.
        let expanded: Vec<(u32, Vec<(CanonicalCode, Triangulation)>)> = match &pool {
            Some(pool) => pool.install(|| {
                frontier
                    .par_iter()
                    .map(|(id, t)| (*id, expand(t, opts.mirror)))
                    .collect()
            }),
            None => frontier.iter().map(|(id, t)| (*id, expand(t, opts.mirror))).collect(),
        };
        let mut next_frontier = Vec::new();
        for (src, flips) in expanded {
            for (code, tri) in flips {
                let id = match ids.get(&code) {
                    Some(&id) => id,
                    None => {
                        let id = adjacency.len() as u32;
                        if let Some(limit) = opts.node_limit {
                            if adjacency.len() >= limit {
                                let edges =
                                    adjacency.iter().map(|a| a.len()).sum::<usize>() / 2;
                                return Err(EngineError::ResourceLimit {
                                    limit,
                                    nodes: adjacency.len(),
                                    edges,
                                });
                            }
                        }
                        ids.insert(code, id);
                        adjacency.push(std::collections::BTreeSet::new());
                        representatives.push(tri.clone());
                        next_frontier.push((id, tri));
                        id
                    }
                };
                if id != src {
                    adjacency[src as usize].insert(id);
                    adjacency[id as usize].insert(src);
                }
            }
        }
        frontier = next_frontier;
    }

    // Canonical re-sort: ids become code ranks.
    let mut codes: Vec<(CanonicalCode, u32)> = ids.into_iter().collect();
    codes.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut rank_of = vec![0u32; codes.len()];
    for (rank, (_, old)) in codes.iter().enumerate() {
        rank_of[*old as usize] = rank as u32;
    }
    let seed_index = rank_of[0] as usize;
    let mut sorted_adj = vec![Vec::new(); codes.len()];
    let mut reps_by_rank: Vec<Option<Triangulation>> = vec![None; codes.len()];
    for (rank, (_, old)) in codes.iter().enumerate() {
        let mut row: Vec<u32> =
            adjacency[*old as usize].iter().map(|&x| rank_of[x as usize]).collect();
        row.sort_unstable();
        sorted_adj[rank] = row;
        reps_by_rank[rank] = Some(representatives[*old as usize].clone());
    }
    let representatives: Vec<Triangulation> =
        reps_by_rank.into_iter().map(|r| r.unwrap()).collect();
    let codes = codes.into_iter().map(|(c, _)| c).collect();
    Ok((
        FlipGraphCatalog::from_parts(n, opts.mirror, codes, sorted_adj, seed_index),
        representatives,
    ))
}
