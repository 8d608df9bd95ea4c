//! Benchmark workloads shared by the criterion benches.

use sigbasis::corpus::{cyclic, example_ideal, katsura};
use sigbasis::{
    buchberger_basis, incremental_basis, BaselineOptions, EngineOptions, PolyRing, Polynomial,
    PrimeField,
};

/// A named input system over GF(32003).
pub struct Workload {
    pub name: &'static str,
    pub ring: PolyRing<PrimeField>,
    pub gens: Vec<Polynomial<u32>>,
}

/// The example ideal, cyclic-4 and katsura-4, all over GF(32003).
pub fn workloads() -> Vec<Workload> {
    let (q, gens) = example_ideal();
    let ring = PolyRing::new(PrimeField::default(), q.order().clone(), q.vars().to_vec())
        .expect("valid ring");
    let gens = gens
        .iter()
        .map(|g| ring.parse(&q.format(g)).expect("integral coefficients"))
        .collect();
    let (cr, cg) = cyclic(PrimeField::default(), 4);
    let (kr, kg) = katsura(PrimeField::default(), 4);
    vec![
        Workload {
            name: "example",
            ring,
            gens,
        },
        Workload {
            name: "cyclic4",
            ring: cr,
            gens: cg,
        },
        Workload {
            name: "katsura4",
            ring: kr,
            gens: kg,
        },
    ]
}

/// Size of the reduced basis computed by the signature engine.
pub fn run_f5(w: &Workload) -> usize {
    incremental_basis(&w.ring, &w.gens, &EngineOptions::default())
        .expect("engine succeeds")
        .state
        .stats
        .reduced_size
}

/// Size of the reduced basis computed by the baseline engine.
pub fn run_gm(w: &Workload) -> usize {
    buchberger_basis(&w.ring, &w.gens, &BaselineOptions::default())
        .expect("engine succeeds")
        .stats
        .reduced_size
}
