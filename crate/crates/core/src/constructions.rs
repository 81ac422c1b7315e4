//! Deterministic generators for the extremal triangulations used by the
//! flip-distance bounds: a max-degree-6 host family covering every size,
//! the colored triangulation `G1` obtained by splitting (almost) all host
//! faces, and the double-apex triangulation `G2`.

use crate::kernel::{Triangulation, ValidationError, Vertex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("n must be at least {min}, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("face list is not a coherent sphere triangulation at vertex {0}")]
    IncoherentFaces(Vertex),
    #[error("({a},{b},{c}) is not an oriented face")]
    NotAFace { a: Vertex, b: Vertex, c: Vertex },
    #[error("color list has {colors} entries for {n} vertices")]
    ColorLengthMismatch { colors: usize, n: usize },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// Per-vertex tag of [`ColoredTriangulation`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Color {
    Blue,
    Red,
}

/// A triangulation whose vertices carry the host/inserted coloring of the
/// `G1` construction. The constructor only checks shapes; the structural
/// facts (red independence, red degree 3, ...) are the business of
/// [`check_lemma2_structure`], so adversarial colorings can be built and
/// fed to the checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTriangulation {
    tri: Triangulation,
    colors: Vec<Color>,
}

impl ColoredTriangulation {
    pub fn new(tri: Triangulation, colors: Vec<Color>) -> Result<Self, ConstructionError> {
        if colors.len() != tri.n() {
            return Err(ConstructionError::ColorLengthMismatch { colors: colors.len(), n: tri.n() });
        }
        Ok(ColoredTriangulation { tri, colors })
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.tri
    }

    pub fn into_triangulation(self) -> Triangulation {
        self.tri
    }

    pub fn n(&self) -> usize {
        self.tri.n()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v as usize]
    }

    pub fn blue_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == Color::Blue).count()
    }
}

/// Builds the triangulation whose faces are exactly `faces`, each given as a
/// directed boundary triangle; the orientations must be coherent (every
/// directed edge appears in exactly one face).
pub(crate) fn from_oriented_faces(
    n: usize,
    faces: &[[Vertex; 3]],
) -> Result<Triangulation, ConstructionError> {
    // Consecutive boundary edges (u,v),(v,w) pin the rotation successor of
    // u at v to w.
    let mut succ: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
    for &[a, b, c] in faces {
        succ[b as usize].push((a, c));
        succ[c as usize].push((b, a));
        succ[a as usize].push((c, b));
    }
    let mut rotation = Vec::with_capacity(n);
    for (v, pairs) in succ.iter().enumerate() {
        let v = v as Vertex;
        let deg = pairs.len();
        if deg == 0 {
            return Err(ConstructionError::IncoherentFaces(v));
        }
        let lookup = |key: Vertex| pairs.iter().find(|&&(k, _)| k == key).map(|&(_, out)| out);
        let first = pairs[0].0;
        let mut rot = Vec::with_capacity(deg);
        let mut cur = first;
        for _ in 0..deg {
            rot.push(cur);
            cur = lookup(cur).ok_or(ConstructionError::IncoherentFaces(v))?;
            if cur == first && rot.len() < deg {
                return Err(ConstructionError::IncoherentFaces(v));
            }
        }
        if cur != first {
            return Err(ConstructionError::IncoherentFaces(v));
        }
        rotation.push(rot);
    }
    Ok(Triangulation::from_rotations(rotation)?)
}

/// Splits the oriented face `(a,b,c)` of `t` by a new vertex (id `n`)
/// adjacent to the three corners. Any cyclic rotation of the face boundary
/// is accepted.
pub fn insert_in_face(t: &Triangulation, face: [Vertex; 3]) -> Result<Triangulation, ConstructionError> {
    let [a, b, c] = face;
    let is_face = t.successor(b, a) == Some(c)
        && t.successor(c, b) == Some(a)
        && t.successor(a, c) == Some(b);
    if !is_face {
        return Err(ConstructionError::NotAFace { a, b, c });
    }
    let n = t.n();
    let x = n as Vertex;
    let mut rotation: Vec<Vec<Vertex>> = (0..n as Vertex).map(|v| t.rotation(v).to_vec()).collect();
    // rot(a): x lands between c and b; likewise around the face.
    for &(v, after) in &[(a, c), (b, a), (c, b)] {
        let pos = rotation[v as usize].iter().position(|&w| w == after).unwrap();
        rotation[v as usize].insert(pos + 1, x);
    }
    rotation.push(vec![b, a, c]);
    Ok(Triangulation::from_rotations(rotation)?)
}

// ---------------------------------------------------------------------------
// Host family: triangulations of maximum degree <= 6 for every m >= 4.
// ---------------------------------------------------------------------------

/// End cap of the hexagonal barrel, named by how the hexagonal hole is
/// closed. The variants add 0, 1, 2 and 3 vertices respectively.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CapKind {
    AlternatingDiagonals,
    Apex,
    InteriorEdge,
    InteriorTriangle,
}

impl CapKind {
    pub fn extra_vertices(self) -> usize {
        match self {
            CapKind::AlternatingDiagonals => 0,
            CapKind::Apex => 1,
            CapKind::InteriorEdge => 2,
            CapKind::InteriorTriangle => 3,
        }
    }

    fn for_extra(extra: usize) -> CapKind {
        match extra {
            0 => CapKind::AlternatingDiagonals,
            1 => CapKind::Apex,
            2 => CapKind::InteriorEdge,
            3 => CapKind::InteriorTriangle,
            _ => unreachable!("cap adds at most 3 vertices"),
        }
    }
}

/// Fixed catalog for 4 <= m <= 11, ordered by vertex count.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CatalogHost {
    Tetrahedron,
    TriangularBipyramid,
    Octahedron,
    PentagonalBipyramid,
    TriangulatedSquareAntiprism,
    TriaugmentedTriangularPrism,
    GyroelongatedSquareBipyramid,
    AugmentedGyroelongatedSquareBipyramid,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum HostScheme {
    Catalog(CatalogHost),
    Barrel { rings: usize, bottom: CapKind, top: CapKind },
}

/// How [`host_max_deg6`] realizes a given vertex count.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct HostSpec {
    pub m: usize,
    pub scheme: HostScheme,
}

pub fn host_spec(m: usize) -> Result<HostSpec, ConstructionError> {
    if m < 4 {
        return Err(ConstructionError::TooSmall { min: 4, got: m });
    }
    let scheme = match m {
        4 => HostScheme::Catalog(CatalogHost::Tetrahedron),
        5 => HostScheme::Catalog(CatalogHost::TriangularBipyramid),
        6 => HostScheme::Catalog(CatalogHost::Octahedron),
        7 => HostScheme::Catalog(CatalogHost::PentagonalBipyramid),
        8 => HostScheme::Catalog(CatalogHost::TriangulatedSquareAntiprism),
        9 => HostScheme::Catalog(CatalogHost::TriaugmentedTriangularPrism),
        10 => HostScheme::Catalog(CatalogHost::GyroelongatedSquareBipyramid),
        11 => HostScheme::Catalog(CatalogHost::AugmentedGyroelongatedSquareBipyramid),
        _ => {
            let rings = m / 6;
            let extra = m % 6;
            let bottom_extra = extra.min(3);
            HostScheme::Barrel {
                rings,
                bottom: CapKind::for_extra(bottom_extra),
                top: CapKind::for_extra(extra - bottom_extra),
            }
        }
    };
    Ok(HostSpec { m, scheme })
}

fn tetrahedron_faces() -> Vec<[Vertex; 3]> {
    vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]
}

/// Bipyramid over a k-cycle: equator `0..k`, top apex `k`, bottom apex `k+1`.
fn bipyramid_faces(k: usize) -> Vec<[Vertex; 3]> {
    let top = k as Vertex;
    let bottom = k as Vertex + 1;
    let mut faces = Vec::with_capacity(2 * k);
    for i in 0..k {
        let a = i as Vertex;
        let b = ((i + 1) % k) as Vertex;
        faces.push([a, b, top]);
        faces.push([b, a, bottom]);
    }
    faces
}

/// Antiprism band between two same-length rings: `lower[i]` is adjacent to
/// `upper[i]` and `upper[i-1]`.
fn band_faces(lower: &[Vertex], upper: &[Vertex]) -> Vec<[Vertex; 3]> {
    let k = lower.len();
    let mut faces = Vec::with_capacity(2 * k);
    for i in 0..k {
        let li = lower[i];
        let lj = lower[(i + 1) % k];
        let ui = upper[i];
        let uj = upper[(i + 1) % k];
        faces.push([li, lj, ui]);
        faces.push([lj, uj, ui]);
    }
    faces
}

/// Closes the hole bounded by `cycle` (directed so the cap faces keep the
/// global orientation). `extras` supplies the ids of the new interior
/// vertices; the cap kind follows from how many there are.
fn cap_faces(cycle: &[Vertex], extras: &[Vertex]) -> Vec<[Vertex; 3]> {
    let h = cycle;
    let k = h.len();
    match (k, extras) {
        (4, []) => vec![[h[0], h[1], h[2]], [h[2], h[3], h[0]]],
        (4, &[x]) => (0..4).map(|i| [h[i], h[(i + 1) % 4], x]).collect(),
        (6, []) => vec![
            [h[0], h[1], h[2]],
            [h[2], h[3], h[4]],
            [h[4], h[5], h[0]],
            [h[0], h[2], h[4]],
        ],
        (6, &[x]) => (0..6).map(|i| [h[i], h[(i + 1) % 6], x]).collect(),
        (6, &[x, y]) => vec![
            [h[0], h[1], x],
            [h[1], h[2], x],
            [h[2], h[3], x],
            [h[3], h[4], y],
            [h[4], h[5], y],
            [h[5], h[0], y],
            [x, h[3], y],
            [y, h[0], x],
        ],
        (6, &[x, y, z]) => vec![
            [h[0], h[1], x],
            [h[1], h[2], x],
            [h[2], h[3], y],
            [h[3], h[4], y],
            [h[4], h[5], z],
            [h[5], h[0], z],
            [x, h[2], y],
            [y, h[4], z],
            [z, h[0], x],
            [x, y, z],
        ],
        _ => unreachable!("unsupported cap"),
    }
}

/// Triangular prism with a pyramid on each square side (a 9-vertex
/// deltahedron): rings `0,1,2` and `3,4,5`, side apexes `6,7,8`.
fn triaugmented_prism_faces() -> Vec<[Vertex; 3]> {
    let l = [0u32, 1, 2];
    let u = [3u32, 4, 5];
    let mut faces = vec![[l[2], l[1], l[0]], [u[0], u[1], u[2]]];
    for i in 0..3 {
        let j = (i + 1) % 3;
        let s = 6 + i as Vertex;
        faces.push([l[i], l[j], s]);
        faces.push([l[j], u[j], s]);
        faces.push([u[j], u[i], s]);
        faces.push([u[i], l[i], s]);
    }
    faces
}

/// Square antiprism `0..8` with optional apexes; `apexes` are the ids of the
/// bottom and top apex when present.
fn square_antiprism_faces(apexes: Option<(Vertex, Vertex)>) -> Vec<[Vertex; 3]> {
    let lower = [0u32, 1, 2, 3];
    let upper = [4u32, 5, 6, 7];
    let mut faces = band_faces(&lower, &upper);
    let rev: Vec<Vertex> = lower.iter().rev().copied().collect();
    match apexes {
        None => {
            faces.extend(cap_faces(&rev, &[]));
            faces.extend(cap_faces(&upper, &[]));
        }
        Some((bottom, top)) => {
            faces.extend(cap_faces(&rev, &[bottom]));
            faces.extend(cap_faces(&upper, &[top]));
        }
    }
    faces
}

fn barrel_faces(rings: usize, bottom_extra: usize, top_extra: usize) -> Vec<[Vertex; 3]> {
    let ring: Vec<Vec<Vertex>> = (0..rings)
        .map(|j| (0..6).map(|i| (6 * j + i) as Vertex).collect())
        .collect();
    let mut faces = Vec::new();
    for j in 0..rings - 1 {
        faces.extend(band_faces(&ring[j], &ring[j + 1]));
    }
    let base = (6 * rings) as Vertex;
    let bottom_ids: Vec<Vertex> = (0..bottom_extra as Vertex).map(|i| base + i).collect();
    let top_ids: Vec<Vertex> =
        (0..top_extra as Vertex).map(|i| base + bottom_extra as Vertex + i).collect();
    let bottom_cycle: Vec<Vertex> = ring[0].iter().rev().copied().collect();
    faces.extend(cap_faces(&bottom_cycle, &bottom_ids));
    faces.extend(cap_faces(&ring[rings - 1], &top_ids));
    faces
}

/// A triangulation with `m` vertices and maximum degree at most six.
///
/// Sizes 4..=11 come from a fixed catalog; larger sizes are hexagonal
/// barrels of stacked antiprism rings closed by two end caps, with the ring
/// count and cap kinds chosen so the vertex counts add up to `m`.
pub fn host_max_deg6(m: usize) -> Result<Triangulation, ConstructionError> {
    let spec = host_spec(m)?;
    let tri = match spec.scheme {
        HostScheme::Catalog(which) => match which {
            CatalogHost::Tetrahedron => from_oriented_faces(4, &tetrahedron_faces())?,
            CatalogHost::TriangularBipyramid => from_oriented_faces(5, &bipyramid_faces(3))?,
            CatalogHost::Octahedron => from_oriented_faces(6, &bipyramid_faces(4))?,
            CatalogHost::PentagonalBipyramid => from_oriented_faces(7, &bipyramid_faces(5))?,
            CatalogHost::TriangulatedSquareAntiprism => {
                from_oriented_faces(8, &square_antiprism_faces(None))?
            }
            CatalogHost::TriaugmentedTriangularPrism => {
                from_oriented_faces(9, &triaugmented_prism_faces())?
            }
            CatalogHost::GyroelongatedSquareBipyramid => {
                from_oriented_faces(10, &square_antiprism_faces(Some((8, 9))))?
            }
            CatalogHost::AugmentedGyroelongatedSquareBipyramid => {
                let base = from_oriented_faces(10, &square_antiprism_faces(Some((8, 9))))?;
                let mut faces = base.faces();
                faces.sort_by_key(|f| sorted_triple(f));
                let face = faces
                    .into_iter()
                    .find(|&[a, b, c]| {
                        [a, b, c].iter().all(|&v| base.degree(v).unwrap() <= 5)
                    })
                    .expect("some face has low-degree corners");
                insert_in_face(&base, face)?
            }
        },
        HostScheme::Barrel { rings, bottom, top } => {
            let faces = barrel_faces(rings, bottom.extra_vertices(), top.extra_vertices());
            from_oriented_faces(m, &faces)?
        }
    };
    debug_assert_eq!(tri.n(), m);
    debug_assert!(tri.max_degree() <= 6);
    Ok(tri)
}

fn sorted_triple(f: &[Vertex; 3]) -> [Vertex; 3] {
    let mut t = *f;
    t.sort_unstable();
    t
}

// ---------------------------------------------------------------------------
// G1: host plus a degree-3 red vertex in (almost) every host face.
// ---------------------------------------------------------------------------

/// Builds the colored triangulation on `n >= 6` vertices: host
/// `H = host_max_deg6(floor(n/3) + 2)` with a red vertex inserted into every
/// face except the `(2 - (n+1) mod 3) mod 3` faces with lexicographically
/// smallest corner triples. Blue host vertices keep ids `0..m`; red vertices
/// follow.
pub fn build_g1(n: usize) -> Result<ColoredTriangulation, ConstructionError> {
    if n < 6 {
        return Err(ConstructionError::TooSmall { min: 6, got: n });
    }
    let m = n / 3 + 2;
    let host = host_max_deg6(m)?;
    let mut faces = host.faces();
    faces.sort_by_key(sorted_triple);
    debug_assert_eq!(faces.len(), 2 * (n / 3));
    let skip = match n % 3 {
        2 => 0,
        1 => 1,
        _ => 2,
    };
    let mut out_faces: Vec<[Vertex; 3]> = faces[..skip].to_vec();
    let mut next = m as Vertex;
    for &[a, b, c] in &faces[skip..] {
        let x = next;
        next += 1;
        out_faces.push([a, b, x]);
        out_faces.push([b, c, x]);
        out_faces.push([c, a, x]);
    }
    debug_assert_eq!(next as usize, n);
    let tri = from_oriented_faces(n, &out_faces)?;
    let colors = (0..n).map(|v| if v < m { Color::Blue } else { Color::Red }).collect();
    ColoredTriangulation::new(tri, colors)
}

// ---------------------------------------------------------------------------
// G2: a path with two apexes adjacent to everything.
// ---------------------------------------------------------------------------

/// The double-apex triangulation: path vertices `0..n-2` in order, apexes
/// `n-2` and `n-1` adjacent to every path vertex and to each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleApex {
    pub tri: Triangulation,
    pub apex_a: Vertex,
    pub apex_b: Vertex,
}

impl DoubleApex {
    /// Path vertices in path order.
    pub fn path(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..(self.tri.n() as Vertex - 2)
    }
}

pub fn build_g2(n: usize) -> Result<DoubleApex, ConstructionError> {
    if n < 4 {
        return Err(ConstructionError::TooSmall { min: 4, got: n });
    }
    let k = (n - 3) as Vertex; // last path vertex id
    let a = (n - 2) as Vertex;
    let b = (n - 1) as Vertex;
    let mut rotation: Vec<Vec<Vertex>> = Vec::with_capacity(n);
    for i in 0..=k {
        let rot = if i == 0 {
            vec![a, 1, b]
        } else if i == k {
            vec![a, b, i - 1]
        } else {
            vec![a, i + 1, b, i - 1]
        };
        rotation.push(rot);
    }
    rotation.push(std::iter::once(b).chain((0..=k).rev()).collect()); // a
    rotation.push(std::iter::once(a).chain(0..=k).collect()); // b
    let tri = Triangulation::from_rotations(rotation)?;
    Ok(DoubleApex { tri, apex_a: a, apex_b: b })
}

// ---------------------------------------------------------------------------
// Structural checks behind the common-edge bound.
// ---------------------------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureViolation {
    #[error("vertex {v} has degree {degree}, above the limit of 12")]
    DegreeTooHigh { v: Vertex, degree: usize },
    #[error("vertex {v} has {count} blue neighbors, above the limit of 6")]
    TooManyBlueNeighbors { v: Vertex, count: usize },
    #[error("vertex {v} has {count} red neighbors, above the limit of 6")]
    TooManyRedNeighbors { v: Vertex, count: usize },
    #[error("red vertex {v} has degree {degree}, expected 3")]
    RedDegreeNotThree { v: Vertex, degree: usize },
    #[error("red vertices {u} and {v} are adjacent")]
    RedRedEdge { u: Vertex, v: Vertex },
    #[error("{got} blue vertices, expected {expected}")]
    BlueCountMismatch { got: usize, expected: usize },
}

/// Everything the common-edge bound needs from `G1`, with the implied
/// numbers: any vertex image can share at most 12 edges with an apex, and at
/// most `2*floor(n/3) + 4` path edges can touch a blue image, so at most
/// `2*floor(n/3) + 28` edges survive any bijection onto the double apex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Report {
    pub n: usize,
    pub blue_count: usize,
    pub max_degree: usize,
    pub max_blue_neighbors: usize,
    pub max_red_neighbors: usize,
    /// `2*floor(n/3) + 4`
    pub path_edge_bound: usize,
    /// `12 + 12 + path_edge_bound = 2*floor(n/3) + 28`
    pub common_edge_bound: usize,
}

pub fn check_lemma2_structure(g1: &ColoredTriangulation) -> Result<Lemma2Report, StructureViolation> {
    let tri = g1.triangulation();
    let n = tri.n();
    let mut max_degree = 0;
    let mut max_blue = 0;
    let mut max_red = 0;
    for v in 0..n as Vertex {
        let rot = tri.rotation(v);
        let degree = rot.len();
        if degree > 12 {
            return Err(StructureViolation::DegreeTooHigh { v, degree });
        }
        let blue = rot.iter().filter(|&&w| g1.color(w) == Color::Blue).count();
        let red = degree - blue;
        if blue > 6 {
            return Err(StructureViolation::TooManyBlueNeighbors { v, count: blue });
        }
        if red > 6 {
            return Err(StructureViolation::TooManyRedNeighbors { v, count: red });
        }
        if g1.color(v) == Color::Red {
            if degree != 3 {
                return Err(StructureViolation::RedDegreeNotThree { v, degree });
            }
            if let Some(&w) = rot.iter().find(|&&w| g1.color(w) == Color::Red) {
                return Err(StructureViolation::RedRedEdge { u: v, v: w });
            }
        }
        max_degree = max_degree.max(degree);
        max_blue = max_blue.max(blue);
        max_red = max_red.max(red);
    }
    let expected_blue = n / 3 + 2;
    let blue_count = g1.blue_count();
    if blue_count != expected_blue {
        return Err(StructureViolation::BlueCountMismatch { got: blue_count, expected: expected_blue });
    }
    let path_edge_bound = 2 * (n / 3) + 4;
    Ok(Lemma2Report {
        n,
        blue_count,
        max_degree,
        max_blue_neighbors: max_blue,
        max_red_neighbors: max_red,
        path_edge_bound,
        common_edge_bound: 24 + path_edge_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_code, MirrorMode};

    #[test]
    fn catalog_hosts_are_valid_and_low_degree() {
        for m in 4..=11 {
            let t = host_max_deg6(m).unwrap();
            assert_eq!(t.n(), m, "m={m}");
            assert!(t.max_degree() <= 6, "m={m}");
            t.validate().unwrap();
        }
    }

    #[test]
    fn host_m4_is_tetrahedron_and_m6_is_octahedron() {
        assert_eq!(host_max_deg6(4).unwrap().max_degree(), 3);
        let octa = host_max_deg6(6).unwrap();
        assert!(octa.rotation(0).len() == 4 && octa.max_degree() == 4);
    }

    #[test]
    fn barrel_hosts_sweep() {
        for m in 12..=80 {
            let t = host_max_deg6(m).unwrap();
            assert_eq!(t.n(), m, "m={m}");
            assert!(t.max_degree() <= 6, "m={m}");
        }
    }

    #[test]
    fn host_m14_uses_two_rings() {
        let spec = host_spec(14).unwrap();
        assert_eq!(
            spec.scheme,
            HostScheme::Barrel { rings: 2, bottom: CapKind::InteriorEdge, top: CapKind::AlternatingDiagonals }
        );
        let t = host_max_deg6(14).unwrap();
        assert!(t.max_degree() <= 6);
        t.validate().unwrap();
    }

    #[test]
    fn host_rejects_m3() {
        assert!(matches!(host_max_deg6(3), Err(ConstructionError::TooSmall { min: 4, got: 3 })));
    }

    #[test]
    fn g1_counts_by_residue() {
        // n = 6: host K4 (4 faces), skip 2, giving 2 red vertices.
        let g = build_g1(6).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.blue_count(), 4);
        // n = 7: skip 1.
        assert_eq!(build_g1(7).unwrap().blue_count(), 4);
        // n = 14: host octahedron, red vertex in all 8 faces.
        let g14 = build_g1(14).unwrap();
        assert_eq!(g14.blue_count(), 6);
        assert_eq!(g14.n(), 14);
    }

    #[test]
    fn g1_rejects_small_n() {
        assert!(matches!(build_g1(5), Err(ConstructionError::TooSmall { min: 6, got: 5 })));
    }

    #[test]
    fn g1_passes_structure_checks() {
        for n in [6, 7, 8, 14, 20, 99, 100, 101] {
            let g = build_g1(n).unwrap();
            let report = check_lemma2_structure(&g).unwrap();
            assert_eq!(report.common_edge_bound, 2 * (n / 3) + 28, "n={n}");
            assert_eq!(report.blue_count, n / 3 + 2);
        }
    }

    #[test]
    fn red_red_edge_is_caught() {
        let g2 = build_g2(6).unwrap();
        // Path vertices 0 and 1 are adjacent; color them red.
        let colors = vec![Color::Red, Color::Red, Color::Blue, Color::Blue, Color::Blue, Color::Blue];
        let bad = ColoredTriangulation::new(g2.tri, colors).unwrap();
        assert!(matches!(
            check_lemma2_structure(&bad),
            Err(StructureViolation::RedRedEdge { u: 0, v: 1 })
        ));
    }

    #[test]
    fn g2_small_cases() {
        let g4 = build_g2(4).unwrap();
        assert_eq!(g4.tri.n(), 4);
        assert_eq!(g4.tri.edge_count(), 6);
        // The 5-vertex triangulation is unique: G2(5) is the bipyramid.
        let g5 = build_g2(5).unwrap();
        let bipyramid = host_max_deg6(5).unwrap();
        assert_eq!(
            canonical_code(&g5.tri, MirrorMode::On),
            canonical_code(&bipyramid, MirrorMode::On)
        );
    }

    #[test]
    fn g2_rejects_n3() {
        assert!(build_g2(3).is_err());
    }

    #[test]
    fn g2_degrees() {
        let g = build_g2(1000).unwrap();
        let t = &g.tri;
        assert_eq!(t.degree(g.apex_a).unwrap(), 999);
        assert_eq!(t.degree(g.apex_b).unwrap(), 999);
        assert_eq!(t.degree(0).unwrap(), 3);
        assert_eq!(t.degree(997).unwrap(), 3);
        for v in 1..997 {
            assert_eq!(t.degree(v).unwrap(), 4);
        }
    }

    #[test]
    fn g2_code_is_labeling_independent() {
        let g = build_g2(12).unwrap();
        let perm: Vec<Vertex> = vec![7, 3, 0, 11, 9, 1, 2, 10, 4, 8, 5, 6];
        let relabeled = g.tri.relabeled(&perm).unwrap();
        assert_eq!(
            canonical_code(&g.tri, MirrorMode::On),
            canonical_code(&relabeled, MirrorMode::On)
        );
    }

    #[test]
    fn insert_in_face_rejects_non_face() {
        let k4 = host_max_deg6(4).unwrap();
        // (0,1,2) in some orientation is a face; its reverse is not.
        let faces = k4.faces();
        let [a, b, c] = faces[0];
        assert!(insert_in_face(&k4, [a, c, b]).is_err());
        let bigger = insert_in_face(&k4, [a, b, c]).unwrap();
        assert_eq!(bigger.n(), 5);
        assert_eq!(bigger.degree(4).unwrap(), 3);
    }
}
