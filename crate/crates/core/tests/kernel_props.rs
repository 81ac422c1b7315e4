//! Property tests over randomized triangulations.

mod common;

use proptest::prelude::*;
use triflip::bounds::common_edges;
use triflip::{canonical_code, format, MirrorMode};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Any successful flip keeps every kernel invariant and flips back to
    /// the identical labeled triangulation.
    #[test]
    fn flips_preserve_invariants(n in 5usize..=12, walk in 0usize..12, seed in any::<u64>()) {
        let mut rng = common::seeded(seed);
        let t = common::random_triangulation(n, walk, &mut rng);
        for (a, b) in t.edges() {
            if let Ok(f) = t.flip(a, b) {
                prop_assert_eq!(f.edge_count(), 3 * n - 6);
                prop_assert_eq!(f.faces().len(), 2 * n - 4);
                prop_assert!(f.validate().is_ok());
                let (u, v) = f
                    .edges()
                    .into_iter()
                    .find(|&(u, v)| !t.has_edge(u, v))
                    .expect("flip adds one edge");
                prop_assert_eq!(f.flip(u, v).unwrap(), t.clone());
            }
        }
    }

    /// Writing and reparsing is the identity.
    #[test]
    fn format_roundtrip(n in 4usize..=20, walk in 0usize..10, seed in any::<u64>()) {
        let mut rng = common::seeded(seed);
        let t = common::random_triangulation(n, walk, &mut rng);
        let text = format::write(&t);
        prop_assert_eq!(format::parse(&text).unwrap(), t);
    }

    /// Canonical codes ignore vertex labels.
    #[test]
    fn canonical_code_relabeling(n in 4usize..=10, walk in 0usize..10, seed in any::<u64>()) {
        let mut rng = common::seeded(seed);
        let t = common::random_triangulation(n, walk, &mut rng);
        let perm = common::random_perm(n, &mut rng);
        let r = t.relabeled(&perm).unwrap();
        prop_assert_eq!(canonical_code(&t, MirrorMode::On), canonical_code(&r, MirrorMode::On));
        prop_assert_eq!(canonical_code(&t, MirrorMode::Off), canonical_code(&r, MirrorMode::Off));
    }

    /// Identity mapping between identical triangulations shares all edges;
    /// shuffling shares at most that.
    #[test]
    fn common_edges_bounds(n in 4usize..=10, seed in any::<u64>()) {
        let mut rng = common::seeded(seed);
        let t = common::random_triangulation(n, 6, &mut rng);
        let identity: Vec<u32> = (0..n as u32).collect();
        prop_assert_eq!(common_edges(&t, &t, &identity).unwrap() as usize, 3 * n - 6);
        let perm = common::random_perm(n, &mut rng);
        let c = common_edges(&t, &t, &perm).unwrap() as usize;
        prop_assert!(c <= 3 * n - 6);
    }
}
