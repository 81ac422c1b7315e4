//! Dev-time golden value extraction (run once, freeze values into tests).

use triflip::bounds::{max_common_edges, SearchBudget};
use triflip::constructions::{build_g1, build_g2, host_max_deg6, insert_in_face};
use triflip::flipgraph::{enumerate, EnumerateOptions};
use triflip::MirrorMode;

fn main() {
    for mirror in [MirrorMode::On, MirrorMode::Off] {
        print!("counts mirror={mirror}: ");
        for n in 4..=11 {
            let t0 = std::time::Instant::now();
            let cat = enumerate(n, EnumerateOptions { mirror, ..Default::default() }).unwrap();
            print!("{}({} e, {:?}) ", cat.node_count(), cat.edge_count(), t0.elapsed());
        }
        println!();
    }
    print!("diameters mirror=on: ");
    for n in 4..=11 {
        let cat = enumerate(n, EnumerateOptions::default()).unwrap();
        let (d, (a, b)) = cat.diameter().unwrap();
        print!("n={n}:{d}(w {a},{b}) ");
    }
    println!();

    // v6: octahedron vs stacked
    let octa = host_max_deg6(6).unwrap();
    let stacked = {
        let k4 = host_max_deg6(4).unwrap();
        let t5 = insert_in_face(&k4, k4.faces()[0]).unwrap();
        insert_in_face(&t5, t5.faces()[0]).unwrap()
    };
    let v6 = max_common_edges(&octa, &stacked, SearchBudget::unlimited()).unwrap();
    println!("v6 = {} (exact {})", v6.lower, v6.exact);

    // v9: G1(9) vs G2(9)
    let g1 = build_g1(9).unwrap().into_triangulation();
    let g2 = build_g2(9).unwrap().tri;
    let v9 = max_common_edges(&g1, &g2, SearchBudget::unlimited()).unwrap();
    println!("v9 = {} (exact {}, nodes {})", v9.lower, v9.exact, v9.nodes_explored);

    // distance(G1(n), G2(n)) for n ≤ 10 plus lemma1 values
    for n in 6..=10 {
        let cat = enumerate(n, EnumerateOptions::default()).unwrap();
        let g1 = build_g1(n).unwrap().into_triangulation();
        let g2 = build_g2(n).unwrap().tri;
        let d = cat.distance(&g1, &g2).unwrap();
        let mc = max_common_edges(&g1, &g2, SearchBudget::unlimited()).unwrap();
        let lb = (3 * n - 6) as u32 - mc.upper;
        println!("n={n}: dist(G1,G2)={d} maxc={} lemma1={lb}", mc.lower);
    }
}
