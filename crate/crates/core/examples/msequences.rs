//! Macaulay representations, pseudo-powers and how far the orthant is from
//! the set of M-sequences.
//!
//! cargo run --example msequences

use fvlab::experiment::{default_density_grid, experiment_density};
use fvlab::macaulay::{approximate_point, is_m_sequence, macaulay_rep, OrthantPoint};
use fvlab::vectors::GVector;
use num_bigint::BigInt;

fn main() {
    for (a, i) in [(5, 2), (100, 3), (2024, 4)] {
        let rep = macaulay_rep(&BigInt::from(a), i).unwrap();
        println!("{a} = {rep}   {a}^<{i}> = {}", rep.pseudo_power());
    }

    for g in [vec![3, 6, 10], vec![3, 7, 1], vec![4, 10, 21, 36]] {
        let gv = GVector::from_i64s(&g).unwrap();
        match is_m_sequence(&gv) {
            Ok(()) => println!("{gv} is an M-sequence"),
            Err(v) => println!("{gv} is not: {v}"),
        }
    }

    let x = OrthantPoint::from_u64s(&[0, 0, 1000]).unwrap();
    let m = approximate_point(&x);
    println!("least M-sequence above {:?}: {m}", x.coords());

    for k in 2..=4 {
        let t = experiment_density(k, &default_density_grid());
        let last = t.rows.last().unwrap();
        println!(
            "k = {k}: distance at a = {} is {}, fitted exponent {:.4} (expected {:.4})",
            last.a,
            last.distance,
            t.fitted_slope.unwrap(),
            (k - 1) as f64 / k as f64
        );
    }
}
