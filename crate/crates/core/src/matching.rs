//! Maximum cardinality matching (Edmonds' blossom contraction) and the
//! bijection that pairs two triangulations' matchings edge for edge.

use crate::bounds::{BoundsError, VertexBijection};
use crate::kernel::{Triangulation, Vertex};
use std::collections::VecDeque;

const NONE: u32 = u32::MAX;

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_valid_for(&self, t: &Triangulation) -> bool {
        let mut seen = vec![false; t.n()];
        self.edges.iter().all(|&(u, v)| {
            let fresh = !seen[u as usize] && !seen[v as usize];
            seen[u as usize] = true;
            seen[v as usize] = true;
            fresh && t.has_edge(u, v)
        })
    }
}

struct BlossomState<'a> {
    adj: Vec<&'a [Vertex]>,
    mate: Vec<u32>,
    parent: Vec<u32>,
    base: Vec<u32>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl<'a> BlossomState<'a> {
    fn lca(&self, mut a: u32, mut b: u32) -> u32 {
        let mut on_path = vec![false; self.adj.len()];
        loop {
            a = self.base[a as usize];
            on_path[a as usize] = true;
            if self.mate[a as usize] == NONE {
                break;
            }
            a = self.parent[self.mate[a as usize] as usize];
        }
        loop {
            b = self.base[b as usize];
            if on_path[b as usize] {
                return b;
            }
            b = self.parent[self.mate[b as usize] as usize];
        }
    }

    fn mark_path(&mut self, mut v: u32, b: u32, mut child: u32) {
        while self.base[v as usize] != b {
            self.blossom[self.base[v as usize] as usize] = true;
            self.blossom[self.base[self.mate[v as usize] as usize] as usize] = true;
            self.parent[v as usize] = child;
            child = self.mate[v as usize];
            v = self.parent[self.mate[v as usize] as usize];
        }
    }

    /// BFS from `root` over the alternating forest, contracting blossoms as
    /// they appear; returns an unmatched vertex when an augmenting path is
    /// found.
    fn find_path(&mut self, root: u32) -> u32 {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i as u32;
        }
        self.used[root as usize] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v as usize].len() {
                let to = self.adj[v as usize][i];
                if self.base[v as usize] == self.base[to as usize]
                    || self.mate[v as usize] == to
                {
                    continue;
                }
                if to == root
                    || (self.mate[to as usize] != NONE
                        && self.parent[self.mate[to as usize] as usize] != NONE)
                {
                    // Odd cycle: contract the blossom to its base.
                    let cur_base = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for u in 0..n as u32 {
                        if self.blossom[self.base[u as usize] as usize] {
                            self.base[u as usize] = cur_base;
                            if !self.used[u as usize] {
                                self.used[u as usize] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to as usize] == NONE {
                    self.parent[to as usize] = v;
                    if self.mate[to as usize] == NONE {
                        return to;
                    }
                    let m = self.mate[to as usize];
                    self.used[m as usize] = true;
                    queue.push_back(m);
                }
            }
        }
        NONE
    }

    fn augment(&mut self, mut v: u32) {
        while v != NONE {
            let pv = self.parent[v as usize];
            let next = self.mate[pv as usize];
            self.mate[v as usize] = pv;
            self.mate[pv as usize] = v;
            v = next;
        }
    }
}

/// Exact maximum matching. O(V^3) worst case, which is comfortable at the
/// sizes the bounds machinery works with.
pub fn max_matching(t: &Triangulation) -> Matching {
    let n = t.n();
    let mut state = BlossomState {
        adj: (0..n as Vertex).map(|v| t.rotation(v)).collect(),
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n as u32).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
    };
    // Greedy seed keeps the number of augmenting searches small.
    for v in 0..n {
        if state.mate[v] == NONE {
            if let Some(&w) = t.rotation(v as Vertex).iter().find(|&&w| state.mate[w as usize] == NONE)
            {
                state.mate[v] = w;
                state.mate[w as usize] = v as u32;
            }
        }
    }
    for v in 0..n as u32 {
        if state.mate[v as usize] == NONE {
            let end = state.find_path(v);
            if end != NONE {
                state.augment(end);
            }
        }
    }
    let mut edges = Vec::new();
    for v in 0..n as u32 {
        let w = state.mate[v as usize];
        if w != NONE && v < w {
            edges.push((v, w));
        }
    }
    let matching = Matching { edges };
    debug_assert!(matching.is_valid_for(t));
    matching
}

/// Pairs the two maximum matchings edge for edge (`k = min(|M1|, |M2|)`
/// pairs) and fills the rest in ascending order; the result shares at least
/// `k` edges.
pub fn matching_mapping(
    g1: &Triangulation,
    g2: &Triangulation,
) -> Result<VertexBijection, BoundsError> {
    let n = g1.n();
    if n != g2.n() {
        return Err(BoundsError::SizeMismatch { left: n, right: g2.n() });
    }
    let m1 = max_matching(g1);
    let m2 = max_matching(g2);
    let k = m1.size().min(m2.size());
    let mut forward = vec![NONE; n];
    let mut taken = vec![false; n];
    for ((u1, v1), (u2, v2)) in m1.edges().iter().zip(m2.edges()).take(k) {
        forward[*u1 as usize] = *u2;
        forward[*v1 as usize] = *v2;
        taken[*u2 as usize] = true;
        taken[*v2 as usize] = true;
    }
    let mut free2 = (0..n as Vertex).filter(|&w| !taken[w as usize]);
    for slot in forward.iter_mut() {
        if *slot == NONE {
            *slot = free2.next().expect("counts match");
        }
    }
    let bijection = VertexBijection::new(g1, g2, forward)?;
    debug_assert!(bijection.common() as usize >= k);
    Ok(bijection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_g2, host_max_deg6, insert_in_face};

    #[test]
    fn octahedron_has_perfect_matching() {
        let t = host_max_deg6(6).unwrap();
        let m = max_matching(&t);
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_for(&t));
    }

    #[test]
    fn k4_matching() {
        let m = max_matching(&host_max_deg6(4).unwrap());
        assert_eq!(m.size(), 2);
    }

    #[test]
    fn double_apex_matchings() {
        for n in [5, 6, 9, 14] {
            let t = build_g2(n).unwrap().tri;
            let m = max_matching(&t);
            assert!(m.is_valid_for(&t));
            assert_eq!(m.size(), n / 2, "n={n}");
        }
    }

    #[test]
    fn mapping_shares_min_matching() {
        let g1 = host_max_deg6(6).unwrap();
        let g2 = {
            let k4 = host_max_deg6(4).unwrap();
            let t5 = insert_in_face(&k4, k4.faces()[0]).unwrap();
            insert_in_face(&t5, t5.faces()[0]).unwrap()
        };
        let k = max_matching(&g1).size().min(max_matching(&g2).size());
        let gamma = matching_mapping(&g1, &g2).unwrap();
        assert!(gamma.common() as usize >= k);
    }

    #[test]
    fn self_mapping_shares_own_matching() {
        let t = build_g2(8).unwrap().tri;
        let gamma = matching_mapping(&t, &t).unwrap();
        assert!(gamma.common() as usize >= max_matching(&t).size());
    }
}
