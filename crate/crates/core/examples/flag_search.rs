//! Searching for a Gorenstein* poset with a prescribed flag vector.
//!
//! cargo run --release --example flag_search

use fvlab::caps::Caps;
use fvlab::poset::gorenstein::{decide_flag_gorenstein_with, FlagSearchOptions};
use fvlab::poset::{FlagDecision, FlagVector};

fn main() {
    let caps = Caps::default();
    let cases = [
        ("triangle", FlagVector::from_u64s(2, &[1, 3, 3, 6]).unwrap()),
        ("triangle, f_12 = 7", FlagVector::from_u64s(2, &[1, 3, 3, 7]).unwrap()),
        ("square", FlagVector::from_u64s(2, &[1, 4, 4, 8]).unwrap()),
        ("two vertices, three edges", FlagVector::from_u64s(2, &[1, 2, 3, 6]).unwrap()),
        ("dihedral 2-sphere", FlagVector::from_u64s(3, &[1, 2, 2, 4, 2, 4, 4, 8]).unwrap()),
    ];
    for (name, v) in &cases {
        for prune in [true, false] {
            let opts = FlagSearchOptions { prune_eulerian: prune };
            let d = decide_flag_gorenstein_with(v, &caps, opts).unwrap();
            let verdict = match &d {
                FlagDecision::Realizable { witness, .. } => format!("realized by {} elements", witness.len()),
                FlagDecision::NotRealizable { .. } => "not realizable".to_string(),
            };
            println!("{name:26} prune={prune:5} {verdict:24} candidates {}", d.candidates());
        }
    }
}
