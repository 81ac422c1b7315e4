//! Rotation-system representation of combinatorial triangulations.
//!
//! A triangulation is stored as the clockwise cyclic neighbor order of every
//! vertex. All faces of a valid triangulation are triangles, so the edge and
//! face counts are forced by Euler's formula: `|E| = 3n - 6` and `F = 2n - 4`.

use thiserror::Error;

/// Vertex id. Vertices of an `n`-vertex triangulation are `0..n`.
pub type Vertex = u32;

/// A directed edge, used as a handle into the face structure.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedEdge {
    pub tail: Vertex,
    pub head: Vertex,
}

impl DirectedEdge {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        DirectedEdge { tail, head }
    }

    pub fn reversed(self) -> Self {
        DirectedEdge { tail: self.head, head: self.tail }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("vertex count {0} is below the minimum of 4")]
    TooFewVertices(usize),
    #[error("vertex {0} has no neighbors")]
    EmptyRotation(Vertex),
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(Vertex),
    #[error("vertex {v} lists neighbor {w} more than once")]
    DuplicateNeighbor { v: Vertex, w: Vertex },
    #[error("neighbor {w} of vertex {v} is not a vertex id")]
    NeighborOutOfRange { v: Vertex, w: Vertex },
    #[error("vertex {v} lists {w} but {w} does not list {v}")]
    AsymmetricAdjacency { v: Vertex, w: Vertex },
    #[error("{got} edges present, a triangulation on {n} vertices has {expected}")]
    WrongEdgeCount { n: usize, got: usize, expected: usize },
    #[error("face through directed edge ({tail},{head}) has length {len}, expected 3")]
    NonTriangularFace { tail: Vertex, head: Vertex, len: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("unknown vertex id {0}")]
    UnknownVertex(Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlipError {
    #[error("({a},{b}) is not an edge")]
    NotAnEdge { a: Vertex, b: Vertex },
    #[error("flip of ({a},{b}) is invalid: both incident faces share the third vertex {c}")]
    DegenerateQuad { a: Vertex, b: Vertex, c: Vertex },
    #[error("flip of ({a},{b}) is invalid: diagonal ({c},{d}) is already an edge")]
    DiagonalExists { a: Vertex, b: Vertex, c: Vertex, d: Vertex },
}

/// Failure while applying a flip sequence; `index` is the offending position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("flip {index} failed: {source}")]
pub struct SequenceError {
    pub index: usize,
    #[source]
    pub source: FlipError,
}

/// An ordered list of edge flips. Validity of each flip is only decided when
/// the sequence is applied, since every flip changes the edge set.
pub type FlipSequence = Vec<(Vertex, Vertex)>;

/// An embedded simple maximal planar graph: for every vertex, the clockwise
/// cyclic order of its neighbors. Immutable after construction; `flip`
/// returns a new value.
///
/// Each rotation is stored rotated so its smallest neighbor comes first,
/// which makes `==` and `Hash` agree with cyclic equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    rotation: Vec<Vec<Vertex>>,
}

impl std::fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Triangulation(n={})", self.n())?;
        for (v, rot) in self.rotation.iter().enumerate() {
            write!(f, " {}:{:?}", v, rot)?;
        }
        Ok(())
    }
}

fn normalize_rotation(rot: &mut Vec<Vertex>) {
    if let Some(pos) = rot.iter().enumerate().min_by_key(|(_, &w)| w).map(|(i, _)| i) {
        rot.rotate_left(pos);
    }
}

/// Sorted (neighbor, rotation position) index, one row per vertex. Lets the
/// validator look up rotation positions in O(log deg) even at high degree.
struct PositionIndex {
    rows: Vec<Vec<(Vertex, u32)>>,
}

impl PositionIndex {
    fn build(rotation: &[Vec<Vertex>]) -> Self {
        let rows = rotation
            .iter()
            .map(|rot| {
                let mut row: Vec<(Vertex, u32)> =
                    rot.iter().enumerate().map(|(i, &w)| (w, i as u32)).collect();
                row.sort_unstable();
                row
            })
            .collect();
        PositionIndex { rows }
    }

    fn position(&self, v: Vertex, w: Vertex) -> Option<u32> {
        let row = &self.rows[v as usize];
        row.binary_search_by_key(&w, |&(x, _)| x).ok().map(|i| row[i].1)
    }
}

impl Triangulation {
    /// Builds and fully validates a triangulation from raw rotations.
    pub fn from_rotations(mut rotation: Vec<Vec<Vertex>>) -> Result<Self, ValidationError> {
        let n = rotation.len();
        if n < 4 {
            return Err(ValidationError::TooFewVertices(n));
        }
        let mut stamp = vec![u32::MAX; n];
        for (v, rot) in rotation.iter().enumerate() {
            let v = v as Vertex;
            if rot.is_empty() {
                return Err(ValidationError::EmptyRotation(v));
            }
            for &w in rot {
                if w as usize >= n {
                    return Err(ValidationError::NeighborOutOfRange { v, w });
                }
                if w == v {
                    return Err(ValidationError::SelfLoop(v));
                }
                if stamp[w as usize] == v {
                    return Err(ValidationError::DuplicateNeighbor { v, w });
                }
                stamp[w as usize] = v;
            }
        }
        for rot in rotation.iter_mut() {
            normalize_rotation(rot);
        }
        let index = PositionIndex::build(&rotation);
        for (v, rot) in rotation.iter().enumerate() {
            let v = v as Vertex;
            for &w in rot {
                if index.position(w, v).is_none() {
                    return Err(ValidationError::AsymmetricAdjacency { v, w });
                }
            }
        }
        let degree_sum: usize = rotation.iter().map(|r| r.len()).sum();
        let expected = 3 * n - 6;
        if degree_sum != 2 * expected {
            return Err(ValidationError::WrongEdgeCount { n, got: degree_sum / 2, expected });
        }
        let t = Triangulation { rotation };
        t.trace_faces_indexed(&index)?;
        t.check_connected()?;
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    /// Clockwise neighbor order of `v`, smallest neighbor first.
    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, ValidationError> {
        self.rotation
            .get(v as usize)
            .map(|r| r.len())
            .ok_or(ValidationError::UnknownVertex(v))
    }

    pub fn max_degree(&self) -> usize {
        self.rotation.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// All undirected edges as ordered pairs `(min, max)`, ascending.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(3 * self.n() - 6);
        for (v, rot) in self.rotation.iter().enumerate() {
            let v = v as Vertex;
            for &w in rot {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        (a as usize) < self.n() && self.rotation[a as usize].contains(&b)
    }

    fn position_of(&self, v: Vertex, w: Vertex) -> Option<usize> {
        self.rotation[v as usize].iter().position(|&x| x == w)
    }

    /// The neighbor that immediately follows `w` in the clockwise rotation
    /// of `v`. `None` when `w` is not a neighbor of `v`. O(deg v).
    pub fn successor(&self, v: Vertex, w: Vertex) -> Option<Vertex> {
        let rot = &self.rotation[v as usize];
        let i = self.position_of(v, w)?;
        Some(rot[(i + 1) % rot.len()])
    }

    /// The next directed edge along the face of `e`: from `(u,v)` continue
    /// with `(v,w)` where `w` follows `u` in the clockwise rotation of `v`.
    pub fn face_next(&self, e: DirectedEdge) -> Option<DirectedEdge> {
        let w = self.successor(e.head, e.tail)?;
        Some(DirectedEdge::new(e.head, w))
    }

    fn trace_faces_indexed(&self, index: &PositionIndex) -> Result<Vec<[Vertex; 3]>, ValidationError> {
        let n = self.n();
        // used[v][i] marks the directed edge (v, rotation[v][i]).
        let mut used: Vec<Vec<bool>> =
            self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::with_capacity(2 * n - 4);
        for v in 0..n {
            for i in 0..self.rotation[v].len() {
                if used[v][i] {
                    continue;
                }
                let start = DirectedEdge::new(v as Vertex, self.rotation[v][i]);
                let mut cycle = Vec::with_capacity(3);
                let mut e = start;
                loop {
                    let pos = index.position(e.tail, e.head).unwrap() as usize;
                    used[e.tail as usize][pos] = true;
                    cycle.push(e.tail);
                    if cycle.len() > 3 {
                        return Err(ValidationError::NonTriangularFace {
                            tail: start.tail,
                            head: start.head,
                            len: cycle.len(),
                        });
                    }
                    // next directed edge along the face
                    let hpos = index.position(e.head, e.tail).unwrap() as usize;
                    let hrot = &self.rotation[e.head as usize];
                    let w = hrot[(hpos + 1) % hrot.len()];
                    e = DirectedEdge::new(e.head, w);
                    if e == start {
                        break;
                    }
                }
                if cycle.len() != 3 {
                    return Err(ValidationError::NonTriangularFace {
                        tail: start.tail,
                        head: start.head,
                        len: cycle.len(),
                    });
                }
                faces.push([cycle[0], cycle[1], cycle[2]]);
            }
        }
        Ok(faces)
    }

    fn check_connected(&self) -> Result<(), ValidationError> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.rotation[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        if count == n {
            Ok(())
        } else {
            Err(ValidationError::Disconnected)
        }
    }

    /// Traces every face once. Each face is an oriented triangle; every
    /// directed edge lies on exactly one of them.
    pub fn faces(&self) -> Vec<[Vertex; 3]> {
        let index = PositionIndex::build(&self.rotation);
        // Invariants were checked on construction.
        self.trace_faces_indexed(&index).expect("valid triangulation")
    }

    /// Flips the edge `{a,b}`: removes it and inserts the diagonal `{c,d}`
    /// between the third vertices of its two incident faces. Returns a new
    /// triangulation; the input is untouched. Fails when `{a,b}` is not an
    /// edge or when the result would not be simple.
    pub fn flip(&self, a: Vertex, b: Vertex) -> Result<Triangulation, FlipError> {
        if (a as usize) >= self.n() || !self.has_edge(a, b) {
            return Err(FlipError::NotAnEdge { a, b });
        }
        // Face of (a,b) is (a,b,c); face of (b,a) is (b,a,d).
        let c = self.successor(b, a).unwrap();
        let d = self.successor(a, b).unwrap();
        if c == d {
            return Err(FlipError::DegenerateQuad { a, b, c });
        }
        if self.has_edge(c, d) {
            return Err(FlipError::DiagonalExists { a, b, c, d });
        }
        let mut rotation = self.rotation.clone();
        let ia = self.position_of(a, b).unwrap();
        rotation[a as usize].remove(ia);
        let ib = self.position_of(b, a).unwrap();
        rotation[b as usize].remove(ib);
        // In rotation(c) the pair b,a is consecutive; d goes between them.
        let ic = self.position_of(c, b).unwrap();
        rotation[c as usize].insert(ic + 1, d);
        // In rotation(d) the pair a,b is consecutive; c goes between them.
        let id = self.position_of(d, a).unwrap();
        rotation[d as usize].insert(id + 1, c);
        for &v in &[a, b, c, d] {
            normalize_rotation(&mut rotation[v as usize]);
        }
        let t = Triangulation { rotation };
        debug_assert!(t.validate().is_ok());
        Ok(t)
    }

    /// Applies the flips of `sequence` in order, failing with the position
    /// of the first invalid flip. The vertex set never changes.
    pub fn apply_sequence(&self, sequence: &[(Vertex, Vertex)]) -> Result<Triangulation, SequenceError> {
        let mut t = self.clone();
        for (index, &(a, b)) in sequence.iter().enumerate() {
            t = t.flip(a, b).map_err(|source| SequenceError { index, source })?;
        }
        Ok(t)
    }

    /// The same embedding with all rotations reversed.
    pub fn mirrored(&self) -> Triangulation {
        let mut rotation: Vec<Vec<Vertex>> = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        for rot in rotation.iter_mut() {
            normalize_rotation(rot);
        }
        Triangulation { rotation }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabeled(&self, perm: &[Vertex]) -> Result<Triangulation, ValidationError> {
        let n = self.n();
        if perm.len() != n {
            return Err(ValidationError::UnknownVertex(perm.len() as Vertex));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p as usize >= n || seen[p as usize] {
                return Err(ValidationError::UnknownVertex(p));
            }
            seen[p as usize] = true;
        }
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            let mut rot: Vec<Vertex> =
                self.rotation[v].iter().map(|&w| perm[w as usize]).collect();
            normalize_rotation(&mut rot);
            rotation[perm[v] as usize] = rot;
        }
        Ok(Triangulation { rotation })
    }

    /// Full re-validation of all invariants. Construction already validates,
    /// so this is only interesting for tests and audits.
    pub fn validate(&self) -> Result<(), ValidationError> {
        Triangulation::from_rotations(self.rotation.clone()).map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Triangulation {
        Triangulation::from_rotations(vec![
            vec![1, 2, 3],
            vec![2, 0, 3],
            vec![1, 3, 0],
            vec![1, 0, 2],
        ])
        .unwrap()
    }

    fn octahedron() -> Triangulation {
        crate::constructions::host_max_deg6(6).unwrap()
    }

    #[test]
    fn k4_counts() {
        let t = k4();
        assert_eq!(t.n(), 4);
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.faces().len(), 4);
        assert_eq!(t.max_degree(), 3);
        for v in 0..4 {
            assert_eq!(t.degree(v).unwrap(), 3);
        }
    }

    #[test]
    fn octahedron_counts() {
        let t = octahedron();
        assert_eq!(t.n(), 6);
        assert_eq!(t.edge_count(), 12);
        assert_eq!(t.faces().len(), 8);
        for v in 0..6 {
            assert_eq!(t.degree(v).unwrap(), 4, "octahedron is 4-regular");
        }
    }

    #[test]
    fn unknown_vertex_errors() {
        let t = k4();
        assert_eq!(t.degree(7), Err(ValidationError::UnknownVertex(7)));
    }

    #[test]
    fn rejects_n3() {
        let err = Triangulation::from_rotations(vec![vec![1, 2], vec![2, 0], vec![0, 1]]);
        assert_eq!(err.unwrap_err(), ValidationError::TooFewVertices(3));
    }

    #[test]
    fn rejects_self_loop() {
        let mut rots = vec![vec![1, 2, 3], vec![2, 0, 3], vec![1, 3, 0], vec![1, 0, 2]];
        rots[0] = vec![0, 2, 3];
        assert!(matches!(
            Triangulation::from_rotations(rots),
            Err(ValidationError::SelfLoop(0))
        ));
    }

    #[test]
    fn rejects_duplicate_neighbor() {
        let rots = vec![vec![1, 2, 1], vec![2, 0, 3], vec![1, 3, 0], vec![1, 0, 2]];
        assert!(matches!(
            Triangulation::from_rotations(rots),
            Err(ValidationError::DuplicateNeighbor { v: 0, w: 1 })
        ));
    }

    #[test]
    fn rejects_asymmetric() {
        // 0 lists 3 but 3 does not list 0.
        let rots = vec![vec![1, 2, 3], vec![2, 0, 3], vec![1, 3, 0], vec![1, 2]];
        assert!(matches!(
            Triangulation::from_rotations(rots),
            Err(ValidationError::AsymmetricAdjacency { v: 0, w: 3 })
        ));
    }

    #[test]
    fn rejects_wrong_edge_count() {
        // Two bipyramids sharing no vertices would fail symmetry first; a
        // 4-cycle keeps symmetry but has 4 edges instead of 6.
        let rots = vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]];
        assert!(matches!(
            Triangulation::from_rotations(rots),
            Err(ValidationError::WrongEdgeCount { n: 4, got: 4, expected: 6 })
        ));
    }

    #[test]
    fn k4_is_flip_rigid() {
        let t = k4();
        for (a, b) in t.edges() {
            match t.flip(a, b) {
                Err(FlipError::DiagonalExists { .. }) => {}
                other => panic!("expected DiagonalExists, got {:?}", other.err()),
            }
        }
    }

    #[test]
    fn flip_not_an_edge() {
        let t = octahedron();
        let missing = (0..6)
            .flat_map(|a| (0..6).map(move |b| (a, b)))
            .find(|&(a, b)| a != b && !t.has_edge(a, b))
            .unwrap();
        assert!(matches!(
            t.flip(missing.0, missing.1),
            Err(FlipError::NotAnEdge { .. })
        ));
    }

    #[test]
    fn octahedron_flips_are_valid() {
        let t = octahedron();
        let mut flipped_any = false;
        for (a, b) in t.edges() {
            if let Ok(f) = t.flip(a, b) {
                flipped_any = true;
                f.validate().unwrap();
                assert_eq!(f.edge_count(), 12);
                assert_eq!(f.faces().len(), 8);
            }
        }
        assert!(flipped_any, "octahedron must have a valid flip");
    }

    #[test]
    fn flip_involution_restores_labels() {
        let t = octahedron();
        for (a, b) in t.edges() {
            let Ok(f) = t.flip(a, b) else { continue };
            let new_edge = f
                .edges()
                .into_iter()
                .find(|&(u, v)| !t.has_edge(u, v))
                .unwrap();
            let back = f.flip(new_edge.0, new_edge.1).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn flip_changes_exactly_one_edge() {
        let t = octahedron();
        for (a, b) in t.edges() {
            let Ok(f) = t.flip(a, b) else { continue };
            let e1: std::collections::BTreeSet<_> = t.edges().into_iter().collect();
            let e2: std::collections::BTreeSet<_> = f.edges().into_iter().collect();
            assert_eq!(e1.symmetric_difference(&e2).count(), 2);
        }
    }

    #[test]
    fn apply_sequence_identity_and_involution() {
        let t = octahedron();
        assert_eq!(t.apply_sequence(&[]).unwrap(), t);
        let (a, b) = t
            .edges()
            .into_iter()
            .find(|&(a, b)| t.flip(a, b).is_ok())
            .unwrap();
        let f = t.flip(a, b).unwrap();
        let (c, d) = f
            .edges()
            .into_iter()
            .find(|&(u, v)| !t.has_edge(u, v))
            .unwrap();
        assert_eq!(t.apply_sequence(&[(a, b), (c, d)]).unwrap(), t);
    }

    #[test]
    fn apply_sequence_reports_index() {
        let t = k4();
        let err = t.apply_sequence(&[(0, 1)]).unwrap_err();
        assert_eq!(err.index, 0);
    }

    #[test]
    fn degree_sum_matches_edges() {
        let t = octahedron();
        let sum: usize = (0..6).map(|v| t.degree(v).unwrap()).sum();
        assert_eq!(sum, 2 * (3 * 6 - 6));
    }
}
