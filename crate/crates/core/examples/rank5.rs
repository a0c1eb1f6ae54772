//! The rank-5 diophantine system with [c^4] = [cdc] = 1.
//!
//! cargo run --release --example rank5

use fvlab::caps::Caps;
use fvlab::rank5::{bench_rank5, brute_oracle_rank5, decide_rank5, Rank5Instance};

fn main() {
    for (a, b, d2) in [(1, 1, 1), (2, 2, 3), (3, 3, 9), (1, 1, 2), (5, 7, 34), (12, 12, 143)] {
        let inst = Rank5Instance::from_u64s(a, b, d2);
        let out = decide_rank5(&inst).unwrap();
        let oracle = brute_oracle_rank5(&inst, &Caps::default()).unwrap();
        println!("A={a} B={b} D2={d2}: {}  oracle feasible = {oracle}", out.to_json());
    }

    println!("{:>4} {:>8} {:>9} {:>12} {:>10} {:>7}", "N", "mean N", "feasible", "nodes", "seconds", "growth");
    for r in bench_rank5(&[8, 16, 24, 32], 50, 1) {
        println!(
            "{:>4} {:>8.1} {:>9} {:>12} {:>10.6} {:>7}",
            r.n,
            r.mean_bit_size,
            format!("{}/{}", r.feasible, r.instances),
            r.total_nodes,
            r.seconds,
            r.growth.map(|g| format!("{g:.2}")).unwrap_or_else(|| "-".into())
        );
    }
}
