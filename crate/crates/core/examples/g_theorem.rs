//! Deciding whether an f-vector belongs to a simplicial polytope.
//!
//! cargo run --example g_theorem

use fvlab::macaulay::OrthantPoint;
use fvlab::simplicial::{
    classify_boundary, connected_sum_g, decide_simplicial_f, decide_simplicial_json,
    ray_density_witness,
};
use fvlab::vectors::{g_to_h, h_to_f, FVector, GVector};
use serde_json::json;

fn f_of(g: &[i64], d: usize) -> FVector {
    h_to_f(&g_to_h(&GVector::from_i64s(g).unwrap(), d).unwrap()).unwrap()
}

fn main() {
    let cases = [
        ("4-simplex", FVector::simplex(4)),
        ("cyclic polytope C_4(7)", f_of(&[2, 1], 4)),
        ("g = (2, 4) breaks Macaulay", f_of(&[2, 4], 4)),
        ("not Dehn-Sommerville", FVector::from_u64s(&[6, 13, 8]).unwrap()),
    ];
    for (name, f) in &cases {
        println!("{name:28} f = {f:24} -> {}", decide_simplicial_f(f).to_json());
    }

    // raw JSON input: negative and fractional entries become verdicts
    for raw in [json!([5, -10, 10, 5]), json!([5, 10.5, 10, 5])] {
        let entries = raw.as_array().unwrap();
        println!("{raw} -> {}", decide_simplicial_json(entries).unwrap().to_json());
    }

    // g-vectors add under connected sum
    let g1 = GVector::from_i64s(&[2, 1]).unwrap();
    let g2 = GVector::from_i64s(&[1, 0]).unwrap();
    let sum = connected_sum_g(&g1, &g2).unwrap();
    println!("g({g1}) # g({g2}) = {sum}");

    for g in [[0, 0], [3, 0], [3, 2]] {
        let g = GVector::from_i64s(&g).unwrap();
        println!("{g} is {:?}", classify_boundary(&g).unwrap());
    }

    // M-sequences come arbitrarily close to every ray of the orthant
    let x = OrthantPoint::from_u64s(&[1, 3]).unwrap();
    for eps in [0.1, 0.01, 0.001] {
        let (w, theta) = ray_density_witness(&x, eps, 1 << 50).unwrap();
        println!("eps = {eps}: {w} at angle {theta:.2e}");
    }
}
