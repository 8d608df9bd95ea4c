//! Module vectors over basis positions, syzygies and rejection certificates.
//!
//! A [`ModuleVector`] maps basis positions (1-based) to polynomial
//! coefficients. Evaluating it against a basis gives `Σ a_ℓ p_ℓ`. Its
//! maximal module term is the `≺_F`-largest `HT(a_ℓ) Sig(r_ℓ)` over the
//! entries, taken without looking for cancellation between entries.
//!
//! [`certify_rejection`] turns a criterion hit recorded by the engine into
//! an explicit syzygy whose module terms stay below the rejected component,
//! which is the reason the rejected S-polynomial may be skipped.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::f5::{BasisState, Rejection, RejectionKind, RuleTarget};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::signature::{sig_compare, LabeledPoly, Signature, Witness};

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleVector<E> {
    entries: BTreeMap<usize, Polynomial<E>>,
}

impl<E> Default for ModuleVector<E> {
    fn default() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }
}

impl<E: Clone> ModuleVector<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `e_pos`.
    pub fn unit<F: Field<Elem = E>>(ring: &PolyRing<F>, pos: usize) -> Self {
        Self::single(pos, ring.constant(ring.field().one()))
    }

    pub fn single(pos: usize, a: Polynomial<E>) -> Self {
        let mut v = Self::zero();
        v.set(pos, a);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, pos: usize) -> Option<&Polynomial<E>> {
        self.entries.get(&pos)
    }

    /// Sets the coefficient at `pos`, removing the entry when `a` is zero.
    pub fn set(&mut self, pos: usize, a: Polynomial<E>) {
        if a.is_zero() {
            self.entries.remove(&pos);
        } else {
            self.entries.insert(pos, a);
        }
    }

    /// Nonzero entries in ascending position order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Polynomial<E>)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn positions(&self) -> Vec<usize> {
        self.entries.keys().copied().collect()
    }

    pub fn max_position(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// Keeps only the entries at `positions`.
    pub fn restrict(&self, positions: &[usize]) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| positions.contains(k))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term<F: Field<Elem = E>>(&self, ring: &PolyRing<F>, m: &Monomial, c: &E) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.entries {
            out.set(*k, ring.mul_term(a, m, c));
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, ring: &PolyRing<F>, c: &E) -> Self {
        self.mul_term(ring, &Monomial::one(ring.nvars()), c)
    }

    /// `self + c * m * other`.
    pub fn add_scaled<F: Field<Elem = E>>(
        &self,
        ring: &PolyRing<F>,
        c: &E,
        m: &Monomial,
        other: &Self,
    ) -> Self {
        let mut out = self.clone();
        for (k, b) in &other.entries {
            let a = out.entries.remove(k).unwrap_or_else(Polynomial::zero);
            out.set(*k, ring.add_scaled(&a, c, m, b));
        }
        out
    }

    /// `self + c * m * a * e_pos` for a polynomial `a`.
    pub fn add_entry_scaled<F: Field<Elem = E>>(
        &mut self,
        ring: &PolyRing<F>,
        pos: usize,
        c: &E,
        m: &Monomial,
        a: &Polynomial<E>,
    ) {
        let cur = self.entries.remove(&pos).unwrap_or_else(Polynomial::zero);
        self.set(pos, ring.add_scaled(&cur, c, m, a));
    }

    pub fn add<F: Field<Elem = E>>(&self, ring: &PolyRing<F>, other: &Self) -> Self {
        self.add_scaled(
            ring,
            &ring.field().one(),
            &Monomial::one(ring.nvars()),
            other,
        )
    }

    pub fn sub<F: Field<Elem = E>>(&self, ring: &PolyRing<F>, other: &Self) -> Self {
        let minus_one = ring.field().neg(&ring.field().one());
        self.add_scaled(ring, &minus_one, &Monomial::one(ring.nvars()), other)
    }

    /// `Σ a_ℓ polys[ℓ - 1]`.
    pub fn evaluate_with<F: Field<Elem = E>>(
        &self,
        ring: &PolyRing<F>,
        polys: &[Polynomial<E>],
    ) -> Result<Polynomial<E>> {
        let mut acc = Polynomial::zero();
        for (k, a) in &self.entries {
            let p = position(polys, *k)?;
            acc = ring.add(&acc, &ring.mul(a, p));
        }
        Ok(acc)
    }

    /// Module term `HT(a_pos) Sig(r_pos)` of one entry.
    pub fn entry_term(&self, pos: usize, sigs: &[Signature]) -> Result<Option<Signature>> {
        let Some(a) = self.entries.get(&pos) else {
            return Ok(None);
        };
        let s = position(sigs, pos)?;
        Ok(Some(s.mul(a.head_monomial().expect("entries are nonzero"))))
    }

    /// Maximal module term over the entries; `None` for the zero vector.
    pub fn mht_with<F: Field<Elem = E>>(
        &self,
        ring: &PolyRing<F>,
        sigs: &[Signature],
    ) -> Result<Option<Signature>> {
        let mut best: Option<Signature> = None;
        for k in self.entries.keys() {
            let t = self.entry_term(*k, sigs)?.unwrap();
            if best
                .as_ref()
                .is_none_or(|b| sig_compare(&t, b, ring.order()) == Ordering::Greater)
            {
                best = Some(t);
            }
        }
        Ok(best)
    }

    pub fn display<'a, F: Field<Elem = E>>(
        &'a self,
        ring: &'a PolyRing<F>,
    ) -> VectorDisplay<'a, F> {
        VectorDisplay { v: self, ring }
    }
}

fn position<T>(items: &[T], pos: usize) -> Result<&T> {
    pos.checked_sub(1)
        .and_then(|i| items.get(i))
        .ok_or_else(|| {
            Error::Structural(format!(
                "position {pos} outside a basis of {} elements",
                items.len()
            ))
        })
}

/// Renders `(y^2*t)*e1 + (-x^2*t^2)*e2`.
pub struct VectorDisplay<'a, F: Field> {
    v: &'a ModuleVector<F::Elem>,
    ring: &'a PolyRing<F>,
}

impl<F: Field> fmt::Display for VectorDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, a)) in self.v.entries().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*e{k}", self.ring.display(a))?;
        }
        Ok(())
    }
}

fn sigs_of<E>(elements: &[LabeledPoly<E>]) -> Vec<Signature> {
    elements.iter().map(|r| r.sig.clone()).collect()
}

fn polys_of<E: Clone>(elements: &[LabeledPoly<E>]) -> Vec<Polynomial<E>> {
    elements.iter().map(|r| r.poly.clone()).collect()
}

/// `Σ a_ℓ p_ℓ` over the polynomials of `elements`.
pub fn evaluate<F: Field>(
    ring: &PolyRing<F>,
    v: &ModuleVector<F::Elem>,
    elements: &[LabeledPoly<F::Elem>],
) -> Result<Polynomial<F::Elem>> {
    let mut acc = Polynomial::zero();
    for (k, a) in v.entries() {
        let r = position(elements, k)?;
        acc = ring.add(&acc, &ring.mul(a, &r.poly));
    }
    Ok(acc)
}

/// Maximal module term of `v` against the signatures of `elements`.
pub fn mht<F: Field>(
    ring: &PolyRing<F>,
    v: &ModuleVector<F::Elem>,
    elements: &[LabeledPoly<F::Elem>],
) -> Result<Option<Signature>> {
    v.mht_with(ring, &sigs_of(elements))
}

/// The principal syzygy `p_a e_b - p_b e_a`; zero when `a == b`.
pub fn principal_syzygy<F: Field>(
    ring: &PolyRing<F>,
    a: usize,
    b: usize,
    elements: &[LabeledPoly<F::Elem>],
) -> Result<ModuleVector<F::Elem>> {
    let pa = &position(elements, a)?.poly;
    let pb = &position(elements, b)?.poly;
    if a == b {
        return Ok(ModuleVector::zero());
    }
    let mut v = ModuleVector::single(b, pa.clone());
    v.set(a, ring.neg(pb));
    Ok(v)
}

/// A claimed representation `target = Σ λ_j p_j` for a bound `t`.
#[derive(Clone, Debug)]
pub struct TRepresentation<E> {
    pub target: LabeledPoly<E>,
    pub t: Monomial,
    pub combination: ModuleVector<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TRepViolation {
    /// The combination does not evaluate to the target polynomial.
    Evaluation,
    /// `HT(λ_j p_j)` is not below `t` at this position.
    HeadTerm { position: usize },
    /// `HT(λ_j) Sig(r_j)` exceeds the target signature at this position.
    Signature { position: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TRepVerdict {
    Valid,
    Violation(TRepViolation),
}

/// Checks a t-representation against the basis `elements`.
pub fn check_t_representation<F: Field>(
    ring: &PolyRing<F>,
    rep: &TRepresentation<F::Elem>,
    elements: &[LabeledPoly<F::Elem>],
) -> Result<TRepVerdict> {
    if evaluate(ring, &rep.combination, elements)? != rep.target.poly {
        return Ok(TRepVerdict::Violation(TRepViolation::Evaluation));
    }
    for (k, a) in rep.combination.entries() {
        let r = position(elements, k)?;
        let lam = a.head_monomial().expect("entries are nonzero");
        let ht = lam.mul(
            r.poly
                .head_monomial()
                .ok_or_else(|| Error::Domain(format!("basis element {k} is zero")))?,
        );
        if ring.cmp(&ht, &rep.t) != Ordering::Less {
            return Ok(TRepVerdict::Violation(TRepViolation::HeadTerm {
                position: k,
            }));
        }
        let s = r.sig.mul(lam);
        if sig_compare(&s, &rep.target.sig, ring.order()) == Ordering::Greater {
            return Ok(TRepVerdict::Violation(TRepViolation::Signature {
                position: k,
            }));
        }
    }
    Ok(TRepVerdict::Valid)
}

/// An explicit syzygy justifying one criterion hit.
#[derive(Clone, Debug)]
pub struct Certificate<E> {
    pub pair: (usize, usize),
    /// Basis position of the rejected component `u * r_a`.
    pub position: usize,
    pub multiplier: Monomial,
    /// `u * Sig(r_a)`.
    pub bound: Signature,
    /// Position of the criterion's witness element, if it is a basis element.
    pub critical: Option<usize>,
    pub lambda: Monomial,
    /// The syzygy as built from the two element syzygies.
    pub syzygy: ModuleVector<E>,
    /// The syzygy after rewriting offending entries through their witnesses.
    pub expanded: ModuleVector<E>,
    pub expansions: usize,
}

impl<E: Clone> Certificate<E> {
    pub fn render<F: Field<Elem = E>>(&self, ring: &PolyRing<F>) -> String {
        let names = ring.vars();
        let crit = self
            .critical
            .map_or_else(|| "zero".to_string(), |c| c.to_string());
        format!(
            "CERT pair=({},{}) comp={} u={} bound={} via={} lambda={}\n  syzygy: {}\n  expanded ({} steps): {}",
            self.pair.0,
            self.pair.1,
            self.position,
            self.multiplier.display(names),
            self.bound.display(names),
            crit,
            self.lambda.display(names),
            self.syzygy.display(ring),
            self.expansions,
            self.expanded.display(ring),
        )
    }
}

fn witness<E: Clone>(state: &BasisState<E>, pos: usize) -> Result<&Witness<E>> {
    state
        .element(pos)?
        .witness
        .as_ref()
        .ok_or_else(|| Error::Precondition("run the engine in certificate mode".into()))
}

/// The element syzygy `w_n - e_n`; zero for input generators.
fn element_syzygy<F: Field>(
    ring: &PolyRing<F>,
    state: &BasisState<F::Elem>,
    pos: usize,
) -> Result<(ModuleVector<F::Elem>, F::Elem)> {
    let w = witness(state, pos)?;
    if pos <= state.num_inputs() {
        return Ok((ModuleVector::zero(), w.lead.clone()));
    }
    Ok((
        w.vector.sub(ring, &ModuleVector::unit(ring, pos)),
        w.lead.clone(),
    ))
}

struct Attempt<'a, F: Field> {
    ring: &'a PolyRing<F>,
    state: &'a BasisState<F::Elem>,
    sigs: &'a [Signature],
    a: usize,
    u: &'a Monomial,
    bound: &'a Signature,
    critical: Option<usize>,
    lambda: &'a Monomial,
    s_crit: &'a ModuleVector<F::Elem>,
    lead_crit: &'a F::Elem,
}

type Attempted<E> = (ModuleVector<E>, ModuleVector<E>, usize);

impl<F: Field> Attempt<'_, F> {
    fn allowed(&self, pos: usize) -> bool {
        pos == self.a || Some(pos) == self.critical
    }

    fn run(&self, s_a: &ModuleVector<F::Elem>, lead_a: &F::Elem) -> Result<Attempted<F::Elem>> {
        let (ring, bound) = (self.ring, self.bound);
        let f = ring.field();
        let ord = ring.order();
        let names = ring.vars();
        let m = self.state.num_inputs();
        let elements = self.state.elements();
        let sigs = self.sigs;

        let c = if s_a.is_zero() {
            f.one()
        } else {
            f.div(lead_a, self.lead_crit)
        };
        let left = self.s_crit.mul_term(ring, self.lambda, &c);
        let right = s_a.mul_term(ring, self.u, &f.one());

        if left.mht_with(ring, sigs)?.as_ref() != Some(bound) {
            return Err(Error::CertificateInvalid(format!(
                "maximal term of the witness syzygy is not {}",
                bound.display(names)
            )));
        }
        if !right.is_zero() && right.mht_with(ring, sigs)?.as_ref() != Some(bound) {
            return Err(Error::CertificateInvalid(format!(
                "maximal term of the element syzygy is not {}",
                bound.display(names)
            )));
        }

        let syzygy = left.sub(ring, &right);
        if !evaluate(ring, &syzygy, elements)?.is_zero() {
            return Err(Error::CertificateInvalid(
                "the combination does not evaluate to zero".into(),
            ));
        }

        let mut expanded = syzygy.clone();
        let mut expansions = 0;
        loop {
            let mut offending = None;
            for pos in expanded.positions().into_iter().rev() {
                if pos <= m || self.allowed(pos) {
                    continue;
                }
                let t = expanded.entry_term(pos, sigs)?.unwrap();
                if sig_compare(&t, bound, ord) != Ordering::Less {
                    offending = Some(pos);
                    break;
                }
            }
            let Some(pos) = offending else { break };
            let coef = expanded.get(pos).unwrap().clone();
            let w = witness(self.state, pos)?;
            expanded.set(pos, Polynomial::zero());
            for (k, b) in w.vector.entries() {
                expanded.add_entry_scaled(
                    ring,
                    k,
                    &f.one(),
                    &Monomial::one(ring.nvars()),
                    &ring.mul(&coef, b),
                );
            }
            expansions += 1;
        }

        for pos in expanded.positions() {
            let t = expanded.entry_term(pos, sigs)?.unwrap();
            let ok = match sig_compare(&t, bound, ord) {
                Ordering::Less => true,
                Ordering::Equal => self.allowed(pos),
                Ordering::Greater => false,
            };
            if !ok {
                return Err(Error::CertificateInvalid(format!(
                    "entry at position {pos} has module term {} not below {}",
                    t.display(names),
                    bound.display(names)
                )));
            }
        }
        // The relation must still express u times the flagged element.
        if expanded.entry_term(self.a, sigs)?.as_ref() != Some(bound) {
            return Err(Error::CertificateInvalid(format!(
                "no entry at position {} reaches {}",
                self.a,
                bound.display(names)
            )));
        }
        Ok((syzygy, expanded, expansions))
    }
}

/// Builds and checks the syzygy behind a recorded rejection.
///
/// The certificate is `c λ s_crit - u s_a` where `s_a` is the syzygy of the
/// rejected component's element and `s_crit` is the principal syzygy (first
/// criterion) or the syzygy of the rewriting element. The scalar `c` makes
/// the two maximal module terms cancel. Offending entries at non-input
/// positions are rewritten through their witnesses until every entry sits
/// strictly below `u Sig(r_a)`; the entries at `a` and at the witness
/// position may reach it.
pub fn certify_rejection<F: Field>(
    ring: &PolyRing<F>,
    rejection: &Rejection,
    state: &BasisState<F::Elem>,
) -> Result<Certificate<F::Elem>> {
    let names = ring.vars();
    let (a, u) = rejection.pair.component(rejection.side);
    let ra = state.element(a)?;
    let bound = ra.sig.mul(u);
    let m = state.num_inputs();
    let (s_a, lead_a) = element_syzygy(ring, state, a)?;
    let elements = state.elements();

    let (s_crit, lead_crit, critical, lambda) = match &rejection.kind {
        RejectionKind::F5 {
            witness, lambda, ..
        } => {
            let k = ra.sig.index();
            let s = principal_syzygy(ring, *witness, k, elements)?;
            let hc = state.element(*witness)?.poly.head_coeff().unwrap().clone();
            (s, hc, Some(*witness), lambda.clone())
        }
        RejectionKind::Rewrite { rule, lambda } => {
            let rule_sig = &state.rule(*rule)?.sig;
            if rule_sig.mul(lambda) != bound {
                return Err(Error::CertificateInvalid(format!(
                    "{} * {} differs from {}",
                    lambda.display(names),
                    rule_sig.display(names),
                    bound.display(names)
                )));
            }
            match state.rule(*rule)?.target {
                RuleTarget::Element(pos) => {
                    let (s, lead) = element_syzygy(ring, state, pos)?;
                    let s = if pos <= m { ModuleVector::zero() } else { s };
                    (s, lead, Some(pos), lambda.clone())
                }
                RuleTarget::Syzygy(z) => {
                    let w = state.zeros()[z].witness.as_ref().ok_or_else(|| {
                        Error::Precondition("run the engine in certificate mode".into())
                    })?;
                    (w.vector.clone(), w.lead.clone(), None, lambda.clone())
                }
                RuleTarget::Pending => {
                    return Err(Error::Precondition("rule still pending".into()))
                }
            }
        }
        RejectionKind::Collision => {
            return Err(Error::Precondition(
                "signature collisions carry no certificate".into(),
            ))
        }
    };

    if s_crit.is_zero() {
        return Err(Error::CertificateInvalid(
            "the rewriting element is an input generator".into(),
        ));
    }
    // The element's own relation may enter in full or not at all; the worked
    // rewrite cases need both forms, so try the full one first.
    let sigs = sigs_of(elements);
    let ctx = Attempt {
        ring,
        state,
        sigs: &sigs,
        a,
        u,
        bound: &bound,
        critical,
        lambda: &lambda,
        s_crit: &s_crit,
        lead_crit: &lead_crit,
    };
    let mut result = ctx.run(&s_a, &lead_a);
    if result.is_err() && !s_a.is_zero() {
        if let ok @ Ok(_) = ctx.run(&ModuleVector::zero(), &lead_a) {
            result = ok;
        }
    }
    let (syzygy, expanded, expansions) = result?;

    Ok(Certificate {
        pair: (rejection.pair.i, rejection.pair.j),
        position: a,
        multiplier: u.clone(),
        bound,
        critical,
        lambda,
        syzygy,
        expanded,
        expansions,
    })
}

/// Rebuilds the polynomials of `elements` for [`ModuleVector::evaluate_with`].
pub fn basis_polys<E: Clone>(elements: &[LabeledPoly<E>]) -> Vec<Polynomial<E>> {
    polys_of(elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::OrderKind;

    fn ring() -> PolyRing<Rationals> {
        PolyRing::with_vars(Rationals, OrderKind::DegRevLex, &["x", "y", "z", "t"]).unwrap()
    }

    fn mono(r: &PolyRing<Rationals>, s: &str) -> Monomial {
        r.parse(s).unwrap().head_monomial().unwrap().clone()
    }

    fn elements(r: &PolyRing<Rationals>) -> Vec<LabeledPoly<num_rational::BigRational>> {
        let lp = |g: &str, i: usize, p: &str| {
            LabeledPoly::new(Signature::new(mono(r, g), i), r.parse(p).unwrap())
        };
        vec![
            lp("1", 1, "y*z^3 - x^2*t^2"),
            lp("1", 2, "x*z^2 - y^2*t"),
            lp("1", 3, "x^2*y - z^2*t"),
            lp("x*y", 2, "x*y^3*t - z^4*t"),
            lp("x*y*z^2", 2, "z^6*t - y^5*t^2"),
            lp("x", 1, "y^3*z*t - x^3*t^2"),
        ]
    }

    #[test]
    fn principal_syzygies_evaluate_to_zero() {
        let r = ring();
        let el = elements(&r);
        for a in 1..=el.len() {
            for b in 1..=el.len() {
                let s = principal_syzygy(&r, a, b, &el).unwrap();
                assert!(evaluate(&r, &s, &el).unwrap().is_zero());
                assert_eq!(s.is_zero(), a == b);
            }
        }
    }

    #[test]
    fn evaluate_rejects_unknown_positions() {
        let r = ring();
        let el = elements(&r);
        let v = ModuleVector::unit(&r, 9);
        assert!(matches!(evaluate(&r, &v, &el), Err(Error::Structural(_))));
        assert!(matches!(
            evaluate(&r, &ModuleVector::unit(&r, 0), &el),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn maximal_term_ignores_cancellation() {
        let r = ring();
        let el = elements(&r);
        let s = principal_syzygy(&r, 6, 1, &el).unwrap();
        // p6 e1 - p1 e6: terms y^3 z t e1 and y z^3 x e1
        let t = mht(&r, &s, &el).unwrap().unwrap();
        assert_eq!(t.display(r.vars()).to_string(), "x*y*z^3*e1");
    }

    fn rep(
        r: &PolyRing<Rationals>,
        combination: ModuleVector<num_rational::BigRational>,
    ) -> TRepresentation<num_rational::BigRational> {
        TRepresentation {
            target: LabeledPoly::new(
                Signature::new(mono(r, "x^2"), 1),
                r.parse("z^5*t - x^4*t^2").unwrap(),
            ),
            t: mono(r, "x^2*y*z^3"),
            combination,
        }
    }

    #[test]
    fn t_representation_of_spol_one_three() {
        let r = ring();
        let el = elements(&r);
        // Spol(p1, p3) = x p6 - z p4
        let mut v = ModuleVector::single(6, r.parse("x").unwrap());
        v.set(4, r.parse("-z").unwrap());
        assert_eq!(
            check_t_representation(&r, &rep(&r, v), &el).unwrap(),
            TRepVerdict::Valid
        );
    }

    #[test]
    fn t_representation_violations() {
        let r = ring();
        let el = elements(&r);
        // the defining combination reaches the lcm itself
        let mut v = ModuleVector::single(1, r.parse("x^2").unwrap());
        v.set(3, r.parse("-z^3").unwrap());
        assert_eq!(
            check_t_representation(&r, &rep(&r, v), &el).unwrap(),
            TRepVerdict::Violation(TRepViolation::HeadTerm { position: 1 })
        );
        let v = ModuleVector::single(6, r.parse("x").unwrap());
        assert_eq!(
            check_t_representation(&r, &rep(&r, v), &el).unwrap(),
            TRepVerdict::Violation(TRepViolation::Evaluation)
        );
        let zero = TRepresentation {
            target: LabeledPoly::new(Signature::unit(1, 4), Polynomial::zero()),
            t: Monomial::one(4),
            combination: ModuleVector::zero(),
        };
        assert_eq!(
            check_t_representation(&r, &zero, &el).unwrap(),
            TRepVerdict::Valid
        );
    }

    #[test]
    fn vector_arithmetic() {
        let r = ring();
        let f = r.field();
        let a = ModuleVector::single(1, r.parse("x + y").unwrap());
        let b = ModuleVector::single(1, r.parse("x").unwrap());
        let d = a.sub(&r, &b);
        assert_eq!(d.get(1), Some(&r.parse("y").unwrap()));
        assert!(d.sub(&r, &d).is_zero());
        let s = b.mul_term(&r, &mono(&r, "z"), &f.from_i64(2));
        assert_eq!(s.get(1), Some(&r.parse("2*x*z").unwrap()));
        assert_eq!(s.display(&r).to_string(), "(2*x*z)*e1");
    }
}
