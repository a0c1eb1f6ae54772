//! Graded posets, chain counts, Eulerian and Gorenstein* tests.
//!
//! cargo run --example poset_homology

use fvlab::caps::Caps;
use fvlab::poset::complex::{betti, HomologyField};
use fvlab::poset::{is_gorenstein_star, GorensteinCheck, GradedPoset};

fn main() {
    let caps = Caps::default();
    let posets = [
        ("B_3 (triangle)", GradedPoset::boolean_lattice(3).unwrap()),
        ("hexagon", GradedPoset::polygon(6).unwrap()),
        ("dihedral 2-sphere", GradedPoset::dihedral_sphere(3).unwrap()),
        ("B_2 * hexagon", GradedPoset::boolean_lattice(2).unwrap().join(&GradedPoset::polygon(6).unwrap())),
        ("path with 3 edges", GradedPoset::path(3).unwrap()),
    ];
    for (name, p) in &posets {
        let flag = p.flag_vector();
        let complex = p.order_complex();
        let b = betti(&complex, HomologyField::Rational);
        let g = match is_gorenstein_star(p, &caps).unwrap() {
            GorensteinCheck::Passed => "Gorenstein*".to_string(),
            GorensteinCheck::Failed { face, .. } => format!("fails at face {face:?}"),
        };
        println!(
            "{name:18} rank {}  flag {}  eulerian {}  reduced betti {b:?}  {g}",
            p.rank(),
            serde_json::to_string(&flag).unwrap(),
            p.is_eulerian(),
        );
    }
}
