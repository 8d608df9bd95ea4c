//! Sparse multivariate polynomials and the ring context that operates on them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, OrderKind};

/// Terms in strictly descending order under the ring's monomial order.
/// No zero coefficients, no repeated monomials; zero is the empty sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Head term `HT(p)`.
    pub fn head_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Head coefficient `HC(p)`.
    pub fn head_coeff(&self) -> Option<&E> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree of the head term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.head_monomial().map_or(0, Monomial::degree)
    }

    /// Largest total degree over all terms.
    pub fn max_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }
}

impl<E: Clone> Polynomial<E> {
    /// `LOT(p)`, the polynomial without its head term.
    pub fn tail(&self) -> Self {
        Self {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }
}

/// Multipliers and result of an S-polynomial computation.
#[derive(Clone, Debug, PartialEq)]
pub struct SPoly<E> {
    pub u1: Monomial,
    pub u2: Monomial,
    pub s: Polynomial<E>,
}

/// Ring context: variables, order and coefficient field.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    order: MonomialOrder,
    vars: Vec<String>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, order: MonomialOrder, vars: Vec<String>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::Domain("a ring needs at least one variable".into()));
        }
        if order.nvars() != vars.len() {
            return Err(Error::Structural(format!(
                "order on {} variables for {} variable names",
                order.nvars(),
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Domain(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Self { field, order, vars })
    }

    /// Ring over `names` with the natural precedence.
    pub fn with_vars(field: F, kind: OrderKind, names: &[&str]) -> Result<Self> {
        Self::new(
            field,
            MonomialOrder::new(kind, names.len()),
            names.iter().map(|s| s.to_string()).collect(),
        )
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F::Elem> {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<F::Elem> {
        self.term(m, self.field.one())
    }

    pub fn neg(&self, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, p: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
                .collect(),
        }
    }

    /// `c * m * p`.
    pub fn mul_term(
        &self,
        p: &Polynomial<F::Elem>,
        m: &Monomial,
        c: &F::Elem,
    ) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|(pm, a)| (pm.mul(m), self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn add(&self, p: &Polynomial<F::Elem>, q: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.add_scaled(p, &self.field.one(), &Monomial::one(self.nvars()), q)
    }

    pub fn sub(&self, p: &Polynomial<F::Elem>, q: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.add_scaled(
            p,
            &self.field.neg(&self.field.one()),
            &Monomial::one(self.nvars()),
            q,
        )
    }

    /// `p + c * m * q` by a single merge pass.
    pub fn add_scaled(
        &self,
        p: &Polynomial<F::Elem>,
        c: &F::Elem,
        m: &Monomial,
        q: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) || q.is_zero() {
            return p.clone();
        }
        let f = &self.field;
        let mut out = Vec::with_capacity(p.len() + q.len());
        let mut a = p.terms.iter().peekable();
        let mut b = q
            .terms
            .iter()
            .map(|(qm, qc)| (qm.mul(m), f.mul(qc, c)))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((am, _)), Some((bm, _))) => self.cmp(am, bm),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (am, ac) = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let s = f.add(ac, &bc);
                    if !f.is_zero(&s) {
                        out.push((am.clone(), s));
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn mul(&self, p: &Polynomial<F::Elem>, q: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let mut acc = Polynomial::zero();
        for (m, c) in &q.terms {
            acc = self.add_scaled(&acc, c, m, p);
        }
        acc
    }

    /// Scales to head coefficient 1; zero stays zero.
    pub fn monic(&self, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match p.head_coeff() {
            None => Polynomial::zero(),
            Some(hc) if self.field.is_one(hc) => p.clone(),
            Some(hc) => self.scale(p, &self.field.inv(hc)),
        }
    }

    /// `Spol(p1, p2) = HC(p2) u1 p1 - HC(p1) u2 p2` with
    /// `u_k = lcm(HT(p1), HT(p2)) / HT(p_k)`.
    pub fn spol(
        &self,
        p1: &Polynomial<F::Elem>,
        p2: &Polynomial<F::Elem>,
    ) -> Result<SPoly<F::Elem>> {
        let (Some((h1, c1)), Some((h2, c2))) = (p1.terms.first(), p2.terms.first()) else {
            return Err(Error::Domain("S-polynomial of the zero polynomial".into()));
        };
        let lcm = h1.lcm(h2);
        let u1 = h1.quotient_of(&lcm).expect("head divides lcm");
        let u2 = h2.quotient_of(&lcm).expect("head divides lcm");
        let left = self.mul_term(p1, &u1, c2);
        let s = self.add_scaled(&left, &self.field.neg(c1), &u2, p2);
        Ok(SPoly { u1, u2, s })
    }

    /// Head-reduces `p` by `reducers` until its head term is divisible by no
    /// reducer head; the first eligible reducer in slice order is used at
    /// each step. The result is made monic.
    pub fn top_reduce(
        &self,
        p: &Polynomial<F::Elem>,
        reducers: &[Polynomial<F::Elem>],
    ) -> Polynomial<F::Elem> {
        let mut p = p.clone();
        while let Some((hm, hc)) = p.terms.first() {
            let Some((g, u)) = reducers.iter().find_map(|g| {
                let gh = g.head_monomial()?;
                gh.quotient_of(hm).map(|u| (g, u))
            }) else {
                break;
            };
            let c = self.field.neg(&self.field.div(hc, g.head_coeff().unwrap()));
            p = self.add_scaled(&p, &c, &u, g);
        }
        self.monic(&p)
    }

    /// Full normal form: every term of the result is irreducible by
    /// `reducers`. Not normalized.
    pub fn normal_form(
        &self,
        p: &Polynomial<F::Elem>,
        reducers: &[Polynomial<F::Elem>],
    ) -> Polynomial<F::Elem> {
        let mut rest = p.clone();
        let mut done: Vec<(Monomial, F::Elem)> = Vec::new();
        while let Some((hm, hc)) = rest.terms.first() {
            let hit = reducers.iter().find_map(|g| {
                let gh = g.head_monomial()?;
                gh.quotient_of(hm).map(|u| (g, u))
            });
            match hit {
                Some((g, u)) => {
                    let c = self.field.neg(&self.field.div(hc, g.head_coeff().unwrap()));
                    rest = self.add_scaled(&rest, &c, &u, g);
                }
                None => {
                    let head = rest.terms.remove(0);
                    done.push(head);
                }
            }
        }
        Polynomial { terms: done }
    }

    /// Auto-reduces `g`: repeatedly replaces an element whose head is
    /// divisible by another head with its normal form, then reduces tails.
    /// The result is monic and sorted ascending by head term. For a Gröbner
    /// basis this is the reduced Gröbner basis of its ideal.
    pub fn interreduce(&self, g: &[Polynomial<F::Elem>]) -> Vec<Polynomial<F::Elem>> {
        let mut polys: Vec<Polynomial<F::Elem>> = g
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| self.monic(p))
            .collect();
        loop {
            let hit = (0..polys.len()).find(|&i| {
                let hi = polys[i].head_monomial().unwrap();
                polys.iter().enumerate().any(|(j, q)| {
                    let hj = q.head_monomial().unwrap();
                    j != i && hj.divides(hi) && (hj != hi || j < i)
                })
            });
            let Some(i) = hit else { break };
            let p = polys.swap_remove(i);
            let r = self.normal_form(&p, &polys);
            if !r.is_zero() {
                polys.push(self.monic(&r));
            }
        }
        let mut out = Vec::with_capacity(polys.len());
        for i in 0..polys.len() {
            let others: Vec<_> = polys
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            let head = polys[i].terms[0].clone();
            let tail = self.normal_form(&polys[i].tail(), &others);
            let mut terms = vec![head];
            terms.extend(tail.terms);
            out.push(Polynomial { terms });
        }
        out.sort_by(|a, b| self.cmp(a.head_monomial().unwrap(), b.head_monomial().unwrap()));
        out
    }

    pub fn display<'a>(&'a self, p: &'a Polynomial<F::Elem>) -> PolyDisplay<'a, F> {
        PolyDisplay {
            ring: self,
            poly: p,
        }
    }

    pub fn format(&self, p: &Polynomial<F::Elem>) -> String {
        self.display(p).to_string()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.display(&self.vars).to_string()
    }

    /// Verifies the storage invariants of `p`.
    pub(crate) fn check_poly(&self, p: &Polynomial<F::Elem>) -> Result<()> {
        for w in p.terms.windows(2) {
            if self.cmp(&w[0].0, &w[1].0) != Ordering::Greater {
                return Err(Error::Structural("terms not strictly descending".into()));
            }
        }
        for (m, c) in &p.terms {
            if m.nvars() != self.nvars() {
                return Err(Error::Structural("exponent vector length".into()));
            }
            if self.field.is_zero(c) {
                return Err(Error::Structural("stored zero coefficient".into()));
            }
        }
        Ok(())
    }
}

pub struct PolyDisplay<'a, F: Field> {
    ring: &'a PolyRing<F>,
    poly: &'a Polynomial<F::Elem>,
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::{One, Signed};
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let (n, d) = self.ring.field.to_ratio(c);
            let neg = n.is_negative();
            let n = n.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = n.is_one() && d.is_one();
            if m.is_one() {
                if d.is_one() {
                    write!(f, "{n}")?;
                } else {
                    write!(f, "{n}/{d}")?;
                }
            } else if unit {
                write!(f, "{}", m.display(&self.ring.vars))?;
            } else if d.is_one() {
                write!(f, "{n}*{}", m.display(&self.ring.vars))?;
            } else {
                write!(f, "{n}/{d}*{}", m.display(&self.ring.vars))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ring() -> PolyRing<Rationals> {
        PolyRing::with_vars(Rationals, OrderKind::DegRevLex, &["x", "y", "z", "t"]).unwrap()
    }

    fn p(r: &PolyRing<Rationals>, s: &str) -> Polynomial<num_rational::BigRational> {
        r.parse(s).unwrap()
    }

    #[test]
    fn spol_examples() {
        let r = ring();
        let f1 = p(&r, "y*z^3 - x^2*t^2");
        let f2 = p(&r, "x*z^2 - y^2*t");
        let f3 = p(&r, "x^2*y - z^2*t");
        let s12 = r.spol(&f1, &f2).unwrap();
        assert_eq!(r.format_monomial(&s12.u1), "x");
        assert_eq!(r.format_monomial(&s12.u2), "y*z");
        assert_eq!(s12.s, p(&r, "y^3*z*t - x^3*t^2"));
        let s13 = r.spol(&f1, &f3).unwrap();
        assert_eq!(r.format_monomial(&s13.u1), "x^2");
        assert_eq!(r.format_monomial(&s13.u2), "z^3");
        assert_eq!(s13.s, p(&r, "z^5*t - x^4*t^2"));
        assert!(r.spol(&f1, &f1).unwrap().s.is_zero());
        assert!(r.spol(&f1, &Polynomial::zero()).is_err());
    }

    #[test]
    fn top_reduce_examples() {
        let r = ring();
        let f1 = p(&r, "y*z^3 - x^2*t^2");
        let f2 = p(&r, "x*z^2 - y^2*t");
        let f3 = p(&r, "x^2*y - z^2*t");
        let multiple = r.mul(&p(&r, "x^2*t^2"), &f2);
        assert!(r.top_reduce(&multiple, std::slice::from_ref(&f2)).is_zero());
        assert!(r
            .top_reduce(&Polynomial::zero(), std::slice::from_ref(&f2))
            .is_zero());
        let s = p(&r, "y^3*z*t - x^3*t^2");
        assert_eq!(r.top_reduce(&s, &[f2, f3, f1]), s);
    }

    #[test]
    fn top_reduce_normalizes() {
        let r = ring();
        let g = p(&r, "x");
        let q = p(&r, "3*x*y^2 + 2*z^2");
        assert_eq!(r.top_reduce(&q, &[g]), p(&r, "z^2"));
    }

    #[test]
    fn interreduce_examples() {
        let r = ring();
        let out = r.interreduce(&[p(&r, "x"), p(&r, "x + y")]);
        assert_eq!(out, vec![p(&r, "y"), p(&r, "x")]);
        let sq = r.interreduce(&[p(&r, "2*x^2")]);
        assert_eq!(sq, vec![p(&r, "x^2")]);
    }

    #[test]
    fn display_roundtrip_shape() {
        let r = ring();
        let q = p(&r, "-1/2*x^2*y + 3*z - 1");
        assert_eq!(r.format(&q), "-1/2*x^2*y + 3*z - 1");
        let gf =
            PolyRing::with_vars(PrimeField::default(), OrderKind::DegRevLex, &["x", "y"]).unwrap();
        let q = gf.parse("x - y").unwrap();
        assert_eq!(gf.format(&q), "x - y");
    }

    #[test]
    fn from_terms_merges_and_sorts() {
        let r = ring();
        let x = Monomial::var(4, 0, 1);
        let y = Monomial::var(4, 1, 1);
        let q = r.from_terms(vec![
            (y.clone(), r.field().from_i64(1)),
            (x.clone(), r.field().from_i64(2)),
            (y, r.field().from_i64(-1)),
        ]);
        assert_eq!(q.len(), 1);
        assert_eq!(q.head_monomial(), Some(&x));
        r.check_poly(&q).unwrap();
    }
}
