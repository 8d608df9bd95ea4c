//! Buchberger's algorithm with the Gebauer–Möller pair update.
//!
//! This engine uses nothing but polynomial arithmetic. It is the reference
//! the signature engine is compared with.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{PolyRing, Polynomial};
use crate::stats::Stats;

#[derive(Clone, Debug)]
pub struct BaselineOptions {
    /// Apply the product and chain criteria. Without them every pair is
    /// reduced and no element is ever dropped.
    pub criteria: bool,
    pub max_pairs: usize,
}

impl Default for BaselineOptions {
    fn default() -> Self {
        Self {
            criteria: true,
            max_pairs: 10_000_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BaselineRun<E> {
    /// The Gröbner basis as maintained by the pair update.
    pub basis: Vec<Polynomial<E>>,
    pub stats: Stats,
}

impl<E: Clone> BaselineRun<E> {
    pub fn reduced_basis<F: Field<Elem = E>>(&self, ring: &PolyRing<F>) -> Vec<Polynomial<E>> {
        ring.interreduce(&self.basis)
    }
}

struct State<'a, F: Field> {
    ring: &'a PolyRing<F>,
    opts: &'a BaselineOptions,
    polys: Vec<Polynomial<F::Elem>>,
    active: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    stats: Stats,
}

/// Computes a Gröbner basis of `gens`.
pub fn buchberger_basis<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    opts: &BaselineOptions,
) -> Result<BaselineRun<F::Elem>> {
    if gens.is_empty() {
        return Err(Error::Domain("no generators".into()));
    }
    let mut st = State {
        ring,
        opts,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        stats: Stats::new("gm"),
    };
    for (i, g) in gens.iter().enumerate() {
        ring.check_poly(g)?;
        if g.is_zero() {
            return Err(Error::Domain(format!("generator {} is zero", i + 1)));
        }
        st.insert(ring.monic(g));
    }
    let mut processed = 0usize;
    while let Some((a, b)) = st.select() {
        processed += 1;
        if processed > opts.max_pairs {
            return Err(Error::Limit(format!("more than {} pairs", opts.max_pairs)));
        }
        st.stats.pairs_processed += 1;
        let s = ring.spol(&st.polys[a], &st.polys[b])?.s;
        let reducers: Vec<Polynomial<F::Elem>> =
            st.active.iter().map(|&k| st.polys[k].clone()).collect();
        let (h, steps) = normal_form_counted(ring, &s, &reducers);
        st.stats.reduction_steps += steps;
        if h.is_zero() {
            st.stats.reductions_to_zero += 1;
        } else {
            st.insert(ring.monic(&h));
        }
    }
    let basis: Vec<_> = st.active.iter().map(|&k| st.polys[k].clone()).collect();
    st.stats.basis_size = basis.len();
    st.stats.reduced_size = ring.interreduce(&basis).len();
    Ok(BaselineRun {
        basis,
        stats: st.stats,
    })
}

fn normal_form_counted<F: Field>(
    ring: &PolyRing<F>,
    p: &Polynomial<F::Elem>,
    reducers: &[Polynomial<F::Elem>],
) -> (Polynomial<F::Elem>, usize) {
    let f = ring.field();
    let mut rest = p.clone();
    let mut done = Vec::new();
    let mut steps = 0;
    while let Some((hm, hc)) = rest.terms().first().cloned() {
        let hit = reducers.iter().find_map(|g| {
            let gh = g.head_monomial()?;
            gh.quotient_of(&hm).map(|u| (g, u))
        });
        match hit {
            Some((g, u)) => {
                let c = f.neg(&f.div(&hc, g.head_coeff().unwrap()));
                rest = ring.add_scaled(&rest, &c, &u, g);
                steps += 1;
            }
            None => {
                done.push((hm.clone(), hc.clone()));
                rest = rest.tail();
            }
        }
    }
    (ring.from_terms(done), steps)
}

impl<F: Field> State<'_, F> {
    fn head(&self, k: usize) -> &crate::monomial::Monomial {
        self.polys[k].head_monomial().unwrap()
    }

    fn lcm(&self, a: usize, b: usize) -> crate::monomial::Monomial {
        self.head(a).lcm(self.head(b))
    }

    /// Normal selection strategy: smallest lcm, ties by position.
    fn select(&mut self) -> Option<(usize, usize)> {
        let ring = self.ring;
        let best = (0..self.pairs.len()).min_by(|&x, &y| {
            let (a, b) = self.pairs[x];
            let (c, d) = self.pairs[y];
            ring.cmp(&self.lcm(a, b), &self.lcm(c, d))
                .then_with(|| (a, b).cmp(&(c, d)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn insert(&mut self, h: Polynomial<F::Elem>) {
        let hk = self.polys.len();
        self.polys.push(h);
        if !self.opts.criteria {
            self.stats.pairs_created += self.active.len();
            self.pairs.extend(self.active.iter().map(|&g| (g, hk)));
            self.active.push(hk);
            return;
        }
        self.stats.pairs_created += self.active.len();
        let mut c: VecDeque<usize> = self.active.iter().copied().collect();
        let mut d: Vec<usize> = Vec::new();
        while let Some(g1) = c.pop_front() {
            let l1 = self.lcm(hk, g1);
            let keep = self.head(hk).is_coprime(self.head(g1))
                || !c
                    .iter()
                    .chain(d.iter())
                    .any(|&g2| self.lcm(hk, g2).divides(&l1));
            if keep {
                d.push(g1);
            } else {
                self.stats.rejected_chain += 1;
            }
        }
        let mut e = Vec::new();
        for g in d {
            if self.head(hk).is_coprime(self.head(g)) {
                self.stats.rejected_product += 1;
            } else {
                e.push((g, hk));
            }
        }
        let old = std::mem::take(&mut self.pairs);
        for (g1, g2) in old {
            let l = self.lcm(g1, g2);
            if self.head(hk).divides(&l) && self.lcm(g1, hk) != l && self.lcm(g2, hk) != l {
                self.stats.rejected_chain += 1;
            } else {
                self.pairs.push((g1, g2));
            }
        }
        self.pairs.extend(e);
        let hh = self.head(hk).clone();
        self.active
            .retain(|&g| !hh.divides(self.polys[g].head_monomial().unwrap()));
        self.active.push(hk);
    }
}

/// Whether two Gröbner bases generate the same ideal, by comparing their
/// reduced forms.
pub fn ideal_equal<F: Field>(
    ring: &PolyRing<F>,
    a: &[Polynomial<F::Elem>],
    b: &[Polynomial<F::Elem>],
) -> bool {
    ring.interreduce(a) == ring.interreduce(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::monomial::OrderKind;

    fn golden() -> (
        PolyRing<Rationals>,
        Vec<Polynomial<num_rational::BigRational>>,
    ) {
        let r =
            PolyRing::with_vars(Rationals, OrderKind::DegRevLex, &["x", "y", "z", "t"]).unwrap();
        let gens = ["y*z^3 - x^2*t^2", "x*z^2 - y^2*t", "x^2*y - z^2*t"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        (r, gens)
    }

    #[test]
    fn criteria_do_not_change_the_result() {
        let (r, gens) = golden();
        let with = buchberger_basis(&r, &gens, &BaselineOptions::default()).unwrap();
        let without = buchberger_basis(
            &r,
            &gens,
            &BaselineOptions {
                criteria: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(with.reduced_basis(&r), without.reduced_basis(&r));
        assert!(with.stats.pairs_processed < without.stats.pairs_processed);
        assert!(with.stats.rejected_chain + with.stats.rejected_product > 0);
    }

    #[test]
    fn every_spol_reduces_to_zero() {
        let (r, gens) = golden();
        let run = buchberger_basis(&r, &gens, &BaselineOptions::default()).unwrap();
        for a in &run.basis {
            for b in &run.basis {
                let s = r.spol(a, b).unwrap().s;
                assert!(r.normal_form(&s, &run.basis).is_zero());
            }
        }
        for g in &gens {
            assert!(r.normal_form(g, &run.basis).is_zero());
        }
    }

    #[test]
    fn unit_ideal() {
        let r =
            PolyRing::with_vars(PrimeField::default(), OrderKind::DegRevLex, &["x", "y"]).unwrap();
        let gens = vec![r.parse("x*y - 1").unwrap(), r.parse("x").unwrap()];
        let run = buchberger_basis(&r, &gens, &BaselineOptions::default()).unwrap();
        assert_eq!(run.reduced_basis(&r), vec![r.parse("1").unwrap()]);
    }

    #[test]
    fn rejects_zero_generators() {
        let (r, _) = golden();
        let gens = vec![r.parse("x").unwrap(), Polynomial::zero()];
        assert!(matches!(
            buchberger_basis(&r, &gens, &BaselineOptions::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn ideal_equality_is_order_insensitive() {
        let (r, gens) = golden();
        let run = buchberger_basis(&r, &gens, &BaselineOptions::default()).unwrap();
        let mut rev = run.basis.clone();
        rev.reverse();
        assert!(ideal_equal(&r, &run.basis, &rev));
        assert!(!ideal_equal(&r, &run.basis, &gens[..1]));
    }
}
