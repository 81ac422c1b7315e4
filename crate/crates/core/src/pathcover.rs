//! Vertex-disjoint path covers and their mapping onto the double-apex
//! triangulation.
//!
//! A cover with `p` paths concatenates onto the spine of the double apex so
//! that every within-path edge survives: the concatenation fills the path
//! `0..n-2` in order and parks the final two vertices on the apexes, which
//! are adjacent to everything. That yields `n - p` common edges, comfortably
//! above the `n - p - 2` guarantee callers rely on.

use crate::bounds::{BoundsError, VertexBijection};
use crate::constructions::DoubleApex;
use crate::kernel::{Triangulation, Vertex};

/// Vertex-disjoint simple paths covering the whole vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCover {
    paths: Vec<Vec<Vertex>>,
}

impl PathCover {
    pub fn new(paths: Vec<Vec<Vertex>>, t: &Triangulation) -> Result<Self, BoundsError> {
        let cover = PathCover { paths };
        cover.validate(t)?;
        Ok(cover)
    }

    pub fn paths(&self) -> &[Vec<Vertex>] {
        &self.paths
    }

    pub fn num_paths(&self) -> usize {
        self.paths.len()
    }

    pub fn validate(&self, t: &Triangulation) -> Result<(), BoundsError> {
        let n = t.n();
        let mut seen = vec![false; n];
        let mut covered = 0usize;
        for path in &self.paths {
            if path.is_empty() {
                return Err(BoundsError::InvalidCover("empty path".into()));
            }
            for &v in path {
                if v as usize >= n {
                    return Err(BoundsError::InvalidCover(format!("vertex {v} out of range")));
                }
                if seen[v as usize] {
                    return Err(BoundsError::InvalidCover(format!("vertex {v} appears twice")));
                }
                seen[v as usize] = true;
                covered += 1;
            }
            for pair in path.windows(2) {
                if !t.has_edge(pair[0], pair[1]) {
                    return Err(BoundsError::InvalidCover(format!(
                        "({},{}) is not an edge",
                        pair[0], pair[1]
                    )));
                }
            }
        }
        if covered != n {
            return Err(BoundsError::InvalidCover(format!("{covered} of {n} vertices covered")));
        }
        Ok(())
    }
}

/// Greedy cover: grow a path from the smallest uncovered vertex at both ends
/// (always toward the smallest unvisited neighbor), then repeatedly join
/// paths whose endpoints are adjacent.
pub fn path_cover(t: &Triangulation) -> PathCover {
    let n = t.n();
    let mut visited = vec![false; n];
    let mut paths: Vec<Vec<Vertex>> = Vec::new();
    let smallest_unvisited = |v: Vertex, visited: &[bool]| -> Option<Vertex> {
        t.rotation(v).iter().copied().filter(|&w| !visited[w as usize]).min()
    };
    for start in 0..n as Vertex {
        if visited[start as usize] {
            continue;
        }
        visited[start as usize] = true;
        let mut path = vec![start];
        while let Some(w) = smallest_unvisited(*path.last().unwrap(), &visited) {
            visited[w as usize] = true;
            path.push(w);
        }
        while let Some(w) = smallest_unvisited(path[0], &visited) {
            visited[w as usize] = true;
            path.insert(0, w);
        }
        paths.push(path);
    }

    // Merge passes: connect endpoint pairs until nothing joins.
    loop {
        let mut merged = false;
        'scan: for i in 0..paths.len() {
            for j in i + 1..paths.len() {
                let (ih, it) = (paths[i][0], *paths[i].last().unwrap());
                let (jh, jt) = (paths[j][0], *paths[j].last().unwrap());
                let tail = if t.has_edge(it, jh) {
                    let tail = paths.swap_remove(j);
                    Some(tail)
                } else if t.has_edge(it, jt) {
                    let mut tail = paths.swap_remove(j);
                    tail.reverse();
                    Some(tail)
                } else if t.has_edge(ih, jh) {
                    let tail = paths.swap_remove(j);
                    paths[i].reverse();
                    Some(tail)
                } else if t.has_edge(ih, jt) {
                    let mut tail = paths.swap_remove(j);
                    tail.reverse();
                    paths[i].reverse();
                    Some(tail)
                } else {
                    None
                };
                if let Some(tail) = tail {
                    paths[i].extend(tail);
                    merged = true;
                    break 'scan;
                }
            }
        }
        if !merged {
            break;
        }
    }
    let cover = PathCover { paths };
    debug_assert!(cover.validate(t).is_ok());
    cover
}

/// Exact minimum number of paths in any cover, by subset dynamic
/// programming. Supported up to 11 vertices.
pub fn min_path_cover_exact(t: &Triangulation) -> Result<usize, BoundsError> {
    const MAX: usize = 11;
    let n = t.n();
    if n > MAX {
        return Err(BoundsError::TooLargeForExact { max: MAX, got: n });
    }
    let adj: Vec<u16> = (0..n as Vertex)
        .map(|v| t.rotation(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect();
    let full = (1usize << n) - 1;
    // endpoints[s]: vertices at which a single path covering s can end.
    let mut endpoints = vec![0u16; 1 << n];
    for v in 0..n {
        endpoints[1 << v] = 1 << v;
    }
    for s in 1..=full {
        let ends = endpoints[s];
        if ends == 0 {
            continue;
        }
        for v in 0..n {
            if ends & (1 << v) == 0 {
                continue;
            }
            let frontier = adj[v] & !(s as u16);
            let mut rest = frontier;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                endpoints[s | 1 << w] |= 1 << w;
            }
        }
    }
    let mut best = vec![u8::MAX; 1 << n];
    best[0] = 0;
    for s in 1..=full {
        let low = s.trailing_zeros();
        // Enumerate submasks of s that contain the lowest vertex and are
        // coverable by one path.
        let mut sub = s;
        loop {
            if sub & (1 << low) != 0 && endpoints[sub] != 0 && best[s & !sub] != u8::MAX {
                best[s] = best[s].min(best[s & !sub] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & s;
        }
    }
    Ok(best[full] as usize)
}

/// Concatenates the cover's paths along the spine of the double apex: the
/// first `n-2` vertices in concatenation order land on path positions
/// `0..n-2`, the last two on the apexes. Guarantees at least `n - p - 2`
/// common edges (this layout actually achieves `n - p`).
pub fn path_cover_mapping(
    h: &Triangulation,
    cover: &PathCover,
    g2: &DoubleApex,
) -> Result<VertexBijection, BoundsError> {
    let n = h.n();
    if n != g2.tri.n() {
        return Err(BoundsError::SizeMismatch { left: n, right: g2.tri.n() });
    }
    cover.validate(h)?;
    if cover.num_paths() > n - 2 {
        return Err(BoundsError::TooManyPaths { paths: cover.num_paths(), max: n - 2 });
    }
    let mut forward = vec![0 as Vertex; n];
    let mut pos = 0usize;
    for path in cover.paths() {
        for &v in path {
            forward[v as usize] = match pos {
                p if p == n - 2 => g2.apex_a,
                p if p == n - 1 => g2.apex_b,
                p => p as Vertex,
            };
            pos += 1;
        }
    }
    let bijection = VertexBijection::new(h, &g2.tri, forward)?;
    debug_assert!(bijection.common() as usize >= n - cover.num_paths());
    Ok(bijection)
}
