//! Input systems: seeded random ideals and a few standard benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, PrimeField, Rationals};
use crate::monomial::{Monomial, OrderKind};
use crate::poly::{PolyRing, Polynomial};

/// Shape of a random ideal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomSpec {
    pub polys: usize,
    pub degree: u32,
    pub nvars: usize,
    /// Fraction of the monomials of degree `<= degree` that receive a
    /// coefficient; `1.0` is dense.
    pub density: f64,
}

impl RandomSpec {
    pub fn dense(polys: usize, degree: u32, nvars: usize) -> Self {
        Self {
            polys,
            degree,
            nvars,
            density: 1.0,
        }
    }
}

/// Variable names `x1, ..., xn`.
pub fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// All exponent vectors in `n` variables of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A random ideal over `ring`'s prime field. Every generator is nonzero.
pub fn random_ideal(
    ring: &PolyRing<PrimeField>,
    spec: &RandomSpec,
    rng: &mut impl Rng,
) -> Vec<Polynomial<u32>> {
    let p = ring.field().modulus();
    let monos = monomials_up_to(ring.nvars(), spec.degree);
    let count = ((monos.len() as f64 * spec.density).ceil() as usize).clamp(1, monos.len());
    let mut out = Vec::with_capacity(spec.polys);
    while out.len() < spec.polys {
        let chosen: Vec<&Monomial> = monos.choose_multiple(rng, count).collect();
        let terms = chosen
            .into_iter()
            .map(|m| (m.clone(), rng.gen_range(1..p)))
            .collect();
        let g = ring.from_terms(terms);
        if !g.is_zero() && g.head_monomial().is_some_and(|h| !h.is_one()) {
            out.push(g);
        }
    }
    out
}

/// The ring `GF(p)[x1..xn]` with degrevlex.
pub fn prime_ring(nvars: usize, p: u32) -> PolyRing<PrimeField> {
    let names = var_names(nvars);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    PolyRing::with_vars(
        PrimeField::new(p).expect("a supported prime"),
        OrderKind::DegRevLex,
        &refs,
    )
    .expect("valid variable list")
}

/// Seeded random ideal with the dense sampling used by the command line.
pub fn seeded_random_ideal(
    spec: &RandomSpec,
    seed: u64,
) -> (PolyRing<PrimeField>, Vec<Polynomial<u32>>) {
    let ring = prime_ring(spec.nvars, crate::field::DEFAULT_PRIME);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = random_ideal(&ring, spec, &mut rng);
    (ring, gens)
}

/// A reproducible list of random ideals in three variables over GF(32003),
/// each with 1 to 4 generators of degree at most 4. Densities vary so that
/// both dense and sparse systems appear.
pub fn random_corpus(seed: u64, count: usize) -> Vec<(RandomSpec, Vec<Polynomial<u32>>)> {
    let ring = prime_ring(3, crate::field::DEFAULT_PRIME);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let spec = RandomSpec {
                polys: rng.gen_range(1..=4),
                degree: rng.gen_range(1..=4),
                nvars: 3,
                density: *[1.0, 0.5, 0.25, 0.1].choose(&mut rng).unwrap(),
            };
            let gens = random_ideal(&ring, &spec, &mut rng);
            (spec, gens)
        })
        .collect()
}

fn ring_for<F: Field>(field: F, names: &[String]) -> PolyRing<F> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    PolyRing::with_vars(field, OrderKind::DegRevLex, &refs).expect("valid variable list")
}

/// Cyclic-n in variables `x0..x{n-1}`.
pub fn cyclic<F: Field>(field: F, n: usize) -> (PolyRing<F>, Vec<Polynomial<F::Elem>>) {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let ring = ring_for(field, &names);
    let f = ring.field().clone();
    let mut gens = Vec::with_capacity(n);
    for len in 1..n {
        let terms = (0..n)
            .map(|start| {
                let mut e = vec![0u32; n];
                for k in 0..len {
                    e[(start + k) % n] += 1;
                }
                (Monomial::new(e), f.one())
            })
            .collect();
        gens.push(ring.from_terms(terms));
    }
    let all = Monomial::new(vec![1; n]);
    gens.push(ring.from_terms(vec![(all, f.one()), (Monomial::one(n), f.from_i64(-1))]));
    (ring, gens)
}

/// Katsura-n in variables `x0..xn`.
pub fn katsura<F: Field>(field: F, n: usize) -> (PolyRing<F>, Vec<Polynomial<F::Elem>>) {
    let names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    let ring = ring_for(field, &names);
    let f = ring.field().clone();
    let nv = n + 1;
    let var = |i: usize| Monomial::var(nv, i, 1);
    let mut gens = Vec::with_capacity(nv);
    // sum_{i=-n..n} x_|i| x_|l-i| - x_l for l = 0..n-1
    for l in 0..n as i64 {
        let mut terms = Vec::new();
        for i in -(n as i64)..=(n as i64) {
            let a = i.unsigned_abs() as usize;
            let b = (l - i).unsigned_abs() as usize;
            if b <= n {
                terms.push((var(a).mul(&var(b)), f.one()));
            }
        }
        terms.push((var(l as usize), f.from_i64(-1)));
        gens.push(ring.from_terms(terms));
    }
    let mut lin = vec![(var(0), f.one()), (Monomial::one(nv), f.from_i64(-1))];
    for i in 1..=n {
        lin.push((var(i), f.from_i64(2)));
    }
    gens.push(ring.from_terms(lin));
    (ring, gens)
}

/// The three-generator example in `x, y, z, t` over the rationals.
pub fn example_ideal() -> (
    PolyRing<Rationals>,
    Vec<Polynomial<num_rational::BigRational>>,
) {
    let ring = PolyRing::with_vars(Rationals, OrderKind::DegRevLex, &["x", "y", "z", "t"])
        .expect("valid variable list");
    let gens = ["y*z^3 - x^2*t^2", "x*z^2 - y^2*t", "x^2*y - z^2*t"]
        .iter()
        .map(|s| ring.parse(s).expect("valid generator"))
        .collect();
    (ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_count() {
        // C(n + d, d)
        assert_eq!(monomials_up_to(3, 4).len(), 35);
        assert_eq!(monomials_up_to(2, 0).len(), 1);
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = random_corpus(7, 20);
        let b = random_corpus(7, 20);
        assert_eq!(a, b);
        assert_ne!(a, random_corpus(8, 20));
        for (spec, gens) in &a {
            assert_eq!(gens.len(), spec.polys);
            assert!(gens.iter().all(|g| g.max_degree() <= spec.degree));
        }
    }

    #[test]
    fn dense_sampling_fills_every_monomial() {
        let (_, gens) = seeded_random_ideal(&RandomSpec::dense(2, 3, 3), 1);
        assert!(gens.iter().all(|g| g.len() == 20));
    }

    #[test]
    fn cyclic_four() {
        let (r, gens) = cyclic(PrimeField::default(), 4);
        assert_eq!(r.format(&gens[0]), "x0 + x1 + x2 + x3");
        assert_eq!(gens[1].len(), 4);
        assert_eq!(gens[2].len(), 4);
        assert_eq!(r.format(&gens[3]), "x0*x1*x2*x3 - 1");
    }

    #[test]
    fn katsura_four() {
        let (r, gens) = katsura(PrimeField::default(), 4);
        assert_eq!(gens.len(), 5);
        assert_eq!(r.format(&gens[4]), "x0 + 2*x1 + 2*x2 + 2*x3 + 2*x4 - 1");
        // l = 0: x0^2 + 2 x1^2 + ... + 2 x4^2 - x0
        assert_eq!(
            r.format(&gens[0]),
            "x0^2 + 2*x1^2 + 2*x2^2 + 2*x3^2 + 2*x4^2 - x0"
        );
    }
}
