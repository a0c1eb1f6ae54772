//! Exact tools for face-vector questions about spheres and polytopes:
//! f/h/g transforms, Macaulay representations and M-sequences, the
//! simplicial g-theorem decider, graded posets with flag vectors and
//! Gorenstein* recognition, the cd-index, and the rank-5 realizability
//! decider.

pub mod caps;
pub mod cd;
pub mod cli;
pub mod decimal;
pub mod experiment;
pub mod macaulay;
pub mod poset;
pub mod rank5;
pub mod simplicial;
pub mod vectors;
