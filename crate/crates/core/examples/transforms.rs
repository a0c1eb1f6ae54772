//! f-, h- and g-vectors of a few simplicial polytopes.
//!
//! cargo run --example transforms

use fvlab::vectors::{f_to_h, fatness, g_to_h, h_to_f, h_to_g, FVector, GVector};

fn main() {
    // boundary of the 4-simplex
    let simplex = FVector::simplex(4);
    let h = f_to_h(&simplex);
    println!("simplex      f = {simplex}  h = {h}  g = {}", h_to_g(&h));

    // boundary of the 4-dimensional cross-polytope: f_i = 2^i C(4, i)
    let cross = FVector::from_u64s(&[8, 24, 32, 16]).unwrap();
    let h = f_to_h(&cross);
    println!("cross        f = {cross}  h = {h}  g = {}", h_to_g(&h));

    // a stacked polytope has g = (n - d - 1, 0, ...): build one from its g
    let g = GVector::from_i64s(&[3, 0]).unwrap();
    let h = g_to_h(&g, 4).unwrap();
    let f = h_to_f(&h).unwrap();
    println!("stacked      g = {g}  h = {h}  f = {f}");

    for (name, f) in [("simplex", &simplex), ("cross", &cross), ("stacked", &f)] {
        let q = fatness(f).unwrap();
        println!("fatness({name}) = {q}");
    }

    // the transforms are exact on arbitrarily large entries
    let big = FVector::new(
        ["123456789012345678901234567890", "1", "2", "3"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect(),
    )
    .unwrap();
    assert_eq!(h_to_f(&f_to_h(&big)).unwrap(), big);
    println!("round trip of {big}: ok");
}
