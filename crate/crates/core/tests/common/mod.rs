//! Independent oracles shared by the integration suites. Everything here
//! counts or checks by brute force, staying off the implementation paths it
//! is used to judge.

#![allow(dead_code)]

use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use triflip::constructions::{build_g2, host_max_deg6, insert_in_face};
use triflip::kernel::{Triangulation, Vertex};
use triflip::MirrorMode;

/// Every labeled rotation system on `n` vertices obtainable from K4 by
/// interleaving face splits and flips. Flip connectivity makes each
/// isomorphism class show up at least once.
pub fn labeled_closure(n: usize) -> HashSet<Triangulation> {
    let mut level: HashSet<Triangulation> = HashSet::new();
    level.insert(host_max_deg6(4).unwrap());
    flip_close(&mut level);
    for _size in 5..=n {
        let mut next = HashSet::new();
        for t in &level {
            for face in t.faces() {
                next.insert(insert_in_face(t, face).unwrap());
            }
        }
        flip_close(&mut next);
        level = next;
    }
    level
}

fn flip_close(set: &mut HashSet<Triangulation>) {
    let mut queue: Vec<Triangulation> = set.iter().cloned().collect();
    while let Some(t) = queue.pop() {
        for (a, b) in t.edges() {
            if let Ok(f) = t.flip(a, b) {
                if set.insert(f.clone()) {
                    queue.push(f);
                }
            }
        }
    }
}

fn all_perms(n: usize) -> impl Iterator<Item = Vec<Vertex>> {
    (0..n as Vertex).permutations(n)
}

/// Counts isomorphism classes among `labeled` by sweeping each unseen
/// element's full relabeling orbit (plus mirrors when identified).
pub fn count_classes(labeled: &HashSet<Triangulation>, mirror: MirrorMode) -> usize {
    let mut seen: HashSet<Triangulation> = HashSet::new();
    let mut classes = 0;
    for t in labeled {
        if seen.contains(t) {
            continue;
        }
        classes += 1;
        let m = t.mirrored();
        for perm in all_perms(t.n()) {
            seen.insert(t.relabeled(&perm).unwrap());
            if mirror == MirrorMode::On {
                seen.insert(m.relabeled(&perm).unwrap());
            }
        }
    }
    classes
}

/// Isomorphism by exhaustive bijection search with rotation alignment:
/// relabeling normalizes rotations, so equality after relabeling is exactly
/// cyclic-order alignment.
pub fn iso_bruteforce(t1: &Triangulation, t2: &Triangulation, mirror: MirrorMode) -> bool {
    if t1.n() != t2.n() {
        return false;
    }
    let m1 = t1.mirrored();
    for perm in all_perms(t1.n()) {
        if &t1.relabeled(&perm).unwrap() == t2 {
            return true;
        }
        if mirror == MirrorMode::On && &m1.relabeled(&perm).unwrap() == t2 {
            return true;
        }
    }
    false
}

/// Exhaustive max-common-edges over all n! bijections, counting through a
/// plain edge-set intersection.
pub fn max_common_exhaustive(g1: &Triangulation, g2: &Triangulation) -> u32 {
    assert_eq!(g1.n(), g2.n());
    let e2: HashSet<(Vertex, Vertex)> = g2.edges().into_iter().collect();
    let edges1 = g1.edges();
    let mut best = 0;
    for perm in all_perms(g1.n()) {
        let count = edges1
            .iter()
            .filter(|&&(u, v)| {
                let (a, b) = (perm[u as usize], perm[v as usize]);
                e2.contains(&(a.min(b), a.max(b)))
            })
            .count() as u32;
        best = best.max(count);
    }
    best
}

/// Exhaustive maximum matching by branching on the first unmatched vertex.
pub fn max_matching_exhaustive(t: &Triangulation) -> usize {
    fn rec(t: &Triangulation, from: usize, matched: &mut [bool]) -> usize {
        let n = t.n();
        let mut v = from;
        while v < n && matched[v] {
            v += 1;
        }
        if v >= n {
            return 0;
        }
        matched[v] = true;
        // Leave v unmatched.
        let mut best = {
            matched[v] = false;
            let r = rec(t, v + 1, matched);
            matched[v] = true;
            r
        };
        for &w in t.rotation(v as Vertex) {
            if !matched[w as usize] {
                matched[w as usize] = true;
                best = best.max(1 + rec(t, v + 1, matched));
                matched[w as usize] = false;
            }
        }
        matched[v] = false;
        best
    }
    rec(t, 0, &mut vec![false; t.n()])
}

/// Seeded random walk in the flip graph starting from the double apex.
pub fn random_triangulation(n: usize, flips: usize, rng: &mut ChaCha8Rng) -> Triangulation {
    let mut t = build_g2(n).unwrap().tri;
    let mut done = 0;
    let mut attempts = 0;
    while done < flips && attempts < 30 * flips.max(1) {
        attempts += 1;
        let edges = t.edges();
        let (a, b) = edges[rng.random_range(0..edges.len())];
        if let Ok(next) = t.flip(a, b) {
            t = next;
            done += 1;
        }
    }
    t
}

pub fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n as Vertex).collect();
    p.shuffle(rng);
    p
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The 6-vertex stacked triangulation (the class that is not the octahedron).
pub fn stacked6() -> Triangulation {
    let k4 = host_max_deg6(4).unwrap();
    let t5 = insert_in_face(&k4, k4.faces()[0]).unwrap();
    insert_in_face(&t5, t5.faces()[0]).unwrap()
}
