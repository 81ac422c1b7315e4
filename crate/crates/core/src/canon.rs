//! Canonical codes: labeling-independent keys for embedded triangulations.
//!
//! A candidate code is produced by a breadth-first relabeling rooted at a
//! directed edge `(u,v)`: `u` gets label 1, `v` label 2; vertices are then
//! processed in label order, each enumerating its rotation starting from its
//! earliest-labeled neighbor and handing fresh labels to unlabeled neighbors.
//! The candidate is the concatenation of every vertex's neighbor labels (in
//! label order, separated by a 0 sentinel). The canonical code is the
//! lexicographic minimum over all rooted candidates, also ranging over the
//! mirrored embedding when reflections are identified.

use crate::kernel::{Triangulation, Vertex};

/// Whether mirror images (reversed rotations) are identified.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MirrorMode {
    /// Orientation-preserving isomorphism only.
    Off,
    /// Reflections quotiented out.
    On,
}

impl MirrorMode {
    pub fn as_str(self) -> &'static str {
        match self {
            MirrorMode::Off => "off",
            MirrorMode::On => "on",
        }
    }
}

impl std::fmt::Display for MirrorMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The canonical key of a triangulation. Codes computed with the same
/// [`MirrorMode`] are equal exactly when the triangulations are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    mirror: MirrorMode,
    code: Vec<u32>,
}

impl CanonicalCode {
    pub fn mirror_mode(&self) -> MirrorMode {
        self.mirror
    }

    pub fn digits(&self) -> &[u32] {
        &self.code
    }

    /// Space-separated base-10 digits on one line.
    pub fn to_line(&self) -> String {
        let mut out = String::with_capacity(self.code.len() * 3);
        for (i, d) in self.code.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&d.to_string());
        }
        out
    }

    pub fn from_parts(mirror: MirrorMode, code: Vec<u32>) -> Self {
        CanonicalCode { mirror, code }
    }
}

/// One BFS relabeling pass. `reversed` walks every rotation backwards,
/// which encodes the mirrored embedding without materializing it.
fn candidate(t: &Triangulation, root_tail: Vertex, root_head: Vertex, reversed: bool) -> Vec<u32> {
    let n = t.n();
    let mut label = vec![0u32; n];
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    label[root_tail as usize] = 1;
    label[root_head as usize] = 2;
    order.push(root_tail);
    order.push(root_head);
    let mut next_label = 3u32;
    // Each vertex contributes its degree plus one separator.
    let mut code = Vec::with_capacity(7 * n - 12);
    let mut idx = 0;
    while idx < order.len() {
        let w = order[idx];
        let rot = t.rotation(w);
        let deg = rot.len();
        // Earliest-labeled neighbor; for the root tail this is the root head.
        let mut anchor_pos = 0;
        let mut anchor_label = u32::MAX;
        for (i, &x) in rot.iter().enumerate() {
            let l = label[x as usize];
            if l != 0 && l < anchor_label {
                anchor_label = l;
                anchor_pos = i;
            }
        }
        debug_assert_ne!(anchor_label, u32::MAX);
        for step in 0..deg {
            let i = if reversed {
                (anchor_pos + deg - step) % deg
            } else {
                (anchor_pos + step) % deg
            };
            let x = rot[i];
            if label[x as usize] == 0 {
                label[x as usize] = next_label;
                next_label += 1;
                order.push(x);
            }
            code.push(label[x as usize]);
        }
        code.push(0);
        idx += 1;
    }
    code
}

fn min_over_starts(t: &Triangulation, reversed: bool, best: &mut Option<Vec<u32>>) {
    // A candidate starts with vertex 1's neighbor list [2, 3, ..., deg+1, 0];
    // with the 0 sentinel ordered below every label, lower-degree roots always
    // compare smaller, so only minimum-degree tails can win.
    let min_deg = (0..t.n() as Vertex).map(|v| t.rotation(v).len()).min().unwrap();
    for v in 0..t.n() as Vertex {
        if t.rotation(v).len() != min_deg {
            continue;
        }
        for &w in t.rotation(v) {
            let cand = candidate(t, v, w, reversed);
            if best.as_ref().is_none_or(|b| cand < *b) {
                *best = Some(cand);
            }
        }
    }
}

/// Computes the canonical code of `t`.
pub fn canonical_code(t: &Triangulation, mirror: MirrorMode) -> CanonicalCode {
    let mut best: Option<Vec<u32>> = None;
    min_over_starts(t, false, &mut best);
    if mirror == MirrorMode::On {
        min_over_starts(t, true, &mut best);
    }
    CanonicalCode { mirror, code: best.unwrap() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_g2, host_max_deg6};

    /// Reference version: minimum over every directed edge, no degree pruning.
    fn canonical_code_exhaustive(t: &Triangulation, mirror: MirrorMode) -> CanonicalCode {
        let mut best: Option<Vec<u32>> = None;
        let reversals: &[bool] = if mirror == MirrorMode::On { &[false, true] } else { &[false] };
        for &rev in reversals {
            for v in 0..t.n() as Vertex {
                for &w in t.rotation(v) {
                    let cand = candidate(t, v, w, rev);
                    if best.as_ref().is_none_or(|b| cand < *b) {
                        best = Some(cand);
                    }
                }
            }
        }
        CanonicalCode { mirror, code: best.unwrap() }
    }

    fn octahedron() -> Triangulation {
        host_max_deg6(6).unwrap()
    }

    /// The stacked 6-vertex triangulation: K4 with two face splits. Every
    /// double split lands in the same isomorphism class since the octahedron
    /// is the only 6-vertex class without a degree-3 vertex.
    fn stacked6() -> Triangulation {
        let k4 = crate::format::parse("n 4\n0 : 1 2 3\n1 : 2 0 3\n2 : 1 3 0\n3 : 1 0 2\n").unwrap();
        let t5 = crate::constructions::insert_in_face(&k4, k4.faces()[0]).unwrap();
        crate::constructions::insert_in_face(&t5, t5.faces()[0]).unwrap()
    }

    #[test]
    fn pruned_matches_exhaustive_over_all_starts() {
        for t in [octahedron(), stacked6(), build_g2(7).unwrap().tri] {
            for mode in [MirrorMode::Off, MirrorMode::On] {
                assert_eq!(canonical_code(&t, mode), canonical_code_exhaustive(&t, mode));
            }
        }
    }

    #[test]
    fn relabeling_invariance() {
        let t = octahedron();
        let perm: Vec<Vertex> = vec![3, 5, 0, 2, 4, 1];
        let r = t.relabeled(&perm).unwrap();
        for mode in [MirrorMode::Off, MirrorMode::On] {
            assert_eq!(canonical_code(&t, mode), canonical_code(&r, mode));
        }
    }

    #[test]
    fn octahedron_differs_from_stacked() {
        for mode in [MirrorMode::Off, MirrorMode::On] {
            assert_ne!(canonical_code(&octahedron(), mode), canonical_code(&stacked6(), mode));
        }
    }

    #[test]
    fn mirror_identified_when_on() {
        let t = build_g2(9).unwrap().tri;
        let m = t.mirrored();
        assert_eq!(canonical_code(&t, MirrorMode::On), canonical_code(&m, MirrorMode::On));
    }

    #[test]
    fn code_length_is_7n_minus_12() {
        let t = octahedron();
        let code = canonical_code(&t, MirrorMode::On);
        assert_eq!(code.digits().len(), 7 * 6 - 12);
    }

    #[test]
    fn code_line_roundtrips_digits() {
        let code = canonical_code(&octahedron(), MirrorMode::On);
        let line = code.to_line();
        let digits: Vec<u32> = line.split(' ').map(|d| d.parse().unwrap()).collect();
        assert_eq!(digits, code.digits());
    }
}
