//! Fixtures shared by the benchmarks: polytopes with their realizations and
//! Gram matrices, computed once outside the timed loops.

use rapoly_core::{
    antiprism, gram, realize_ideal_right_angled, twisted_antiprism, CombinatorialPolytope,
    GramMatrix, Realization, SolverConfig,
};

pub struct Fixture {
    pub name: String,
    pub polytope: CombinatorialPolytope,
    pub realization: Realization,
    pub gram: GramMatrix,
}

impl Fixture {
    pub fn new(name: String, polytope: CombinatorialPolytope) -> Self {
        let realization =
            realize_ideal_right_angled(&polytope, &SolverConfig::default()).expect("realizable");
        let gram = gram(&polytope, &realization).expect("gram");
        Fixture {
            name,
            polytope,
            realization,
            gram,
        }
    }
}

/// Antiprisms `A_n` for the given sizes followed by the twists `A_{6,4}`
/// and `A_{8,5}`.
pub fn fixtures(sizes: &[usize]) -> Vec<Fixture> {
    let mut out: Vec<Fixture> = sizes
        .iter()
        .map(|&n| Fixture::new(format!("A_{n}"), antiprism(n).expect("antiprism")))
        .collect();
    for (n, k) in [(6, 4), (8, 5)] {
        out.push(Fixture::new(
            format!("A_{n}_{k}"),
            twisted_antiprism(n, k).expect("twist"),
        ));
    }
    out
}
