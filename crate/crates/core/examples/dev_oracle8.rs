// One-off: oracle count at n=8 (dev evidence for the 14-vs-12 resolution).
use std::collections::HashSet;
use triflip::constructions::{host_max_deg6, insert_in_face};
use triflip::kernel::Triangulation;

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

fn main() {
    let mut level: HashSet<Triangulation> = HashSet::new();
    level.insert(host_max_deg6(4).unwrap());
    flip_close(&mut level);
    for size in 5..=8 {
        let mut next = HashSet::new();
        for t in &level {
            for face in t.faces() {
                next.insert(insert_in_face(t, face).unwrap());
            }
        }
        flip_close(&mut next);
        level = next;
        println!("labeled objects at n={size}: {}", level.len());
    }
    // class count via canonical codes is NOT independent; use orbit dedup
    // with relabelings + mirror (same as tests/common).
    use triflip::kernel::Vertex;
    fn perms(n: usize) -> Vec<Vec<Vertex>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in out {
                for v in 0..n as Vertex {
                    if !p.contains(&v) {
                        let mut q = p.clone();
                        q.push(v);
                        if q.len() == n { next.push(q); } else { next.push(q); }
                    }
                }
            }
            out = next.into_iter().filter(|p| true).collect();
        }
        out.into_iter().filter(|p| p.len() == n).collect()
    }
    let all_perms = perms(8);
    println!("perms: {}", all_perms.len());
    let mut seen: HashSet<Triangulation> = HashSet::new();
    let mut classes = 0;
    for t in &level {
        if seen.contains(t) { continue; }
        classes += 1;
        let m = t.mirrored();
        for p in &all_perms {
            seen.insert(t.relabeled(p).unwrap());
            seen.insert(m.relabeled(p).unwrap());
        }
    }
    println!("classes at n=8 (mirror on): {classes}");
}
