//! The cd-index pipeline, Stanley's spheres and the cone of cd-indices.
//!
//! cargo run --example cd_index

use fvlab::cd::{
    ab_index, ab_to_cd, cd_to_flag, cd_words, cone_coordinates, cone_words, flag_to_ab,
    stanley_sphere,
};
use fvlab::experiment::experiment_convergence;
use fvlab::poset::GradedPoset;

fn main() {
    let q = GradedPoset::polygon(7).unwrap();
    let gamma = flag_to_ab(&q.flag_vector());
    let psi = ab_index(&gamma);
    let phi = ab_to_cd(&psi).unwrap();
    println!("heptagon: Γ = {gamma}\n          Ψ = {psi}\n          Φ = {phi}");
    assert_eq!(cd_to_flag(&phi).unwrap(), q.flag_vector());

    for d in 0..=6 {
        println!("degree {d}: {} words {:?}", cd_words(d).len(), cd_words(d));
    }

    println!("cone coordinates on {:?}", cone_words(4));
    for w in ["cccc", "ccd", "cdc", "dcc", "dd"] {
        let (phi, poset) = stanley_sphere(w, 6).unwrap();
        let x = cone_coordinates(&phi).unwrap();
        println!(
            "P_({w},6): {} elements, Φ = {phi}, coordinates {:?}",
            poset.len(),
            x.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>()
        );
    }

    let words: Vec<String> = ["ccd", "cdc", "dcc", "dd"].map(String::from).to_vec();
    for r in experiment_convergence(&words, &[8, 16, 32, 64]).unwrap() {
        println!(
            "{:4} m = {:2}: cone distance {:.4}, full-vector distance {:.4}",
            r.word, r.m, r.cone_distance, r.full_distance
        );
    }
}
