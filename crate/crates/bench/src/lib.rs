//! Fixtures shared by the benchmark targets.

use rx3_core::families::{generate, FamilySpec};
use rx3_core::graph::Graph;

pub fn three_sun() -> Graph {
    generate(&FamilySpec::ThreeSun).unwrap()
}

pub fn k5_minus_e() -> Graph {
    generate(&FamilySpec::K5MinusE).unwrap()
}

pub fn k33() -> Graph {
    generate(&FamilySpec::CompleteBipartite { s: 3, t: 3 }).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    generate(&FamilySpec::Cycle { n }).unwrap()
}

pub fn chained(r: usize, b: usize) -> Graph {
    generate(&FamilySpec::Figure1 { r, b }).unwrap()
}

pub fn random(n: usize, delta: usize, seed: u64) -> Graph {
    generate(&FamilySpec::RandomMinDegree { n, delta, seed }).unwrap()
}
