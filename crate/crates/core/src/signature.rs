//! Module terms, signatures and labeled polynomials.
//!
//! A signature `t * e_i` records that a polynomial is `t * f_i` plus terms
//! that are smaller in the module order `≺_F`. That order compares the
//! generator index first, with a *larger* index being smaller, and falls
//! back to the term order on `t` within one index.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::syzygy::ModuleVector;

/// A coefficient-free module term `gamma * e_index`, `index >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    gamma: Monomial,
    index: usize,
}

impl Signature {
    pub fn new(gamma: Monomial, index: usize) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        Self { gamma, index }
    }

    /// `1 * e_index`.
    pub fn unit(index: usize, nvars: usize) -> Self {
        Self::new(Monomial::one(nvars), index)
    }

    /// The term `Γ` of the signature.
    pub fn gamma(&self) -> &Monomial {
        &self.gamma
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn mul(&self, u: &Monomial) -> Signature {
        Signature {
            gamma: self.gamma.mul(u),
            index: self.index,
        }
    }

    pub fn cmp_with(&self, other: &Signature, ord: &MonomialOrder) -> Ordering {
        sig_compare(self, other, ord)
    }

    /// Renders `x*z^2*e1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> SignatureDisplay<'a> {
        SignatureDisplay { sig: self, names }
    }
}

pub struct SignatureDisplay<'a> {
    sig: &'a Signature,
    names: &'a [String],
}

impl fmt::Display for SignatureDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}*e{}",
            self.sig.gamma.display(self.names),
            self.sig.index
        )
    }
}

/// The module order `≺_F`.
pub fn sig_compare(a: &Signature, b: &Signature, ord: &MonomialOrder) -> Ordering {
    if a.index != b.index {
        return b.index.cmp(&a.index);
    }
    ord.cmp(&a.gamma, &b.gamma)
}

pub fn sig_mul(u: &Monomial, s: &Signature) -> Signature {
    s.mul(u)
}

/// A module representative of a labeled polynomial, kept in certificate
/// mode. `vector` evaluates to the polynomial; `lead` is the coefficient of
/// the signature term once the vector is expanded over the input generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<E> {
    pub vector: ModuleVector<E>,
    pub lead: E,
}

/// A polynomial together with its signature.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledPoly<E> {
    pub sig: Signature,
    pub poly: Polynomial<E>,
    pub witness: Option<Witness<E>>,
}

impl<E> LabeledPoly<E> {
    pub fn new(sig: Signature, poly: Polynomial<E>) -> Self {
        Self {
            sig,
            poly,
            witness: None,
        }
    }

    pub fn index(&self) -> usize {
        self.sig.index
    }
}

/// Data of a labeled S-polynomial once its components are ordered so that
/// `u2 * sig2 ≺_F u1 * sig1`.
#[derive(Clone, Debug)]
pub struct SPolParts<E> {
    /// Whether the arguments were swapped to establish the component order.
    pub swapped: bool,
    pub u1: Monomial,
    pub u2: Monomial,
    /// `HC(p2)`, the factor applied to `u1 * p1`.
    pub c1: E,
    /// `HC(p1)`, the factor applied to `u2 * p2`.
    pub c2: E,
    pub sig: Signature,
    pub poly: Polynomial<E>,
}

/// Computes `Spol(r1, r2)` with its signature `u1 * Sig(r1)`, swapping the
/// arguments when `u1 * Sig(r1) ≺_F u2 * Sig(r2)`. Equal module terms are
/// rejected as a signature collision.
pub fn spol_parts<F: Field>(
    ring: &PolyRing<F>,
    sig1: &Signature,
    p1: &Polynomial<F::Elem>,
    sig2: &Signature,
    p2: &Polynomial<F::Elem>,
) -> Result<SPolParts<F::Elem>> {
    let (Some(h1), Some(h2)) = (p1.head_monomial(), p2.head_monomial()) else {
        return Err(Error::Domain("S-polynomial of the zero polynomial".into()));
    };
    let lcm = h1.lcm(h2);
    let u1 = h1.quotient_of(&lcm).expect("head divides lcm");
    let u2 = h2.quotient_of(&lcm).expect("head divides lcm");
    let s1 = sig1.mul(&u1);
    let s2 = sig2.mul(&u2);
    match sig_compare(&s1, &s2, ring.order()) {
        Ordering::Equal => Err(Error::SignatureCollision(format!(
            "{} = {}",
            s1.display(ring.vars()),
            s2.display(ring.vars())
        ))),
        Ordering::Greater => Ok(assemble(ring, false, u1, p1, u2, p2, s1)),
        Ordering::Less => Ok(assemble(ring, true, u2, p2, u1, p1, s2)),
    }
}

fn assemble<F: Field>(
    ring: &PolyRing<F>,
    swapped: bool,
    u1: Monomial,
    p1: &Polynomial<F::Elem>,
    u2: Monomial,
    p2: &Polynomial<F::Elem>,
    sig: Signature,
) -> SPolParts<F::Elem> {
    let f = ring.field();
    let c1 = p2.head_coeff().unwrap().clone();
    let c2 = p1.head_coeff().unwrap().clone();
    let left = ring.mul_term(p1, &u1, &c1);
    let poly = ring.add_scaled(&left, &f.neg(&c2), &u2, p2);
    SPolParts {
        swapped,
        u1,
        u2,
        c1,
        c2,
        sig,
        poly,
    }
}

/// The labeled S-polynomial `(u1 Sig(r1), Spol(p1, p2))`.
///
/// When both inputs carry witnesses the result carries
/// `HC(p2) u1 w1 - HC(p1) u2 w2`.
pub fn spol_labeled<F: Field>(
    ring: &PolyRing<F>,
    r1: &LabeledPoly<F::Elem>,
    r2: &LabeledPoly<F::Elem>,
) -> Result<LabeledPoly<F::Elem>> {
    let parts = spol_parts(ring, &r1.sig, &r1.poly, &r2.sig, &r2.poly)?;
    let (a, b) = if parts.swapped { (r2, r1) } else { (r1, r2) };
    let witness = match (&a.witness, &b.witness) {
        (Some(wa), Some(wb)) => {
            let f = ring.field();
            let left = wa.vector.mul_term(ring, &parts.u1, &parts.c1);
            let vector = left.add_scaled(ring, &f.neg(&parts.c2), &parts.u2, &wb.vector);
            Some(Witness {
                vector,
                lead: f.mul(&parts.c1, &wa.lead),
            })
        }
        _ => None,
    };
    Ok(LabeledPoly {
        sig: parts.sig,
        poly: parts.poly,
        witness,
    })
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

    #[test]
    fn larger_index_is_smaller() {
        let r = ring();
        let a = Signature::new(mono(&r, "x^5"), 2);
        let b = Signature::unit(1, 4);
        assert_eq!(sig_compare(&a, &b, r.order()), Ordering::Less);
        let y = Signature::new(mono(&r, "y"), 1);
        let x = Signature::new(mono(&r, "x"), 1);
        assert_eq!(sig_compare(&y, &x, r.order()), Ordering::Less);
        assert_eq!(sig_compare(&a, &a, r.order()), Ordering::Equal);
    }

    #[test]
    fn multiplication() {
        let r = ring();
        let s6 = Signature::new(mono(&r, "x"), 1);
        let m = sig_mul(&mono(&r, "z^2"), &s6);
        assert_eq!(m.display(r.vars()).to_string(), "x*z^2*e1");
        assert_eq!(sig_mul(&Monomial::one(4), &s6), s6);
        let e1 = Signature::unit(1, 4);
        assert_eq!(
            sig_mul(&mono(&r, "x^2"), &e1).display(r.vars()).to_string(),
            "x^2*e1"
        );
        assert_eq!(e1.display(r.vars()).to_string(), "1*e1");
    }

    #[test]
    fn labeled_spol_of_first_generators() {
        let r = ring();
        let r1 = LabeledPoly::new(Signature::unit(1, 4), r.parse("y*z^3 - x^2*t^2").unwrap());
        let r2 = LabeledPoly::new(Signature::unit(2, 4), r.parse("x*z^2 - y^2*t").unwrap());
        let s = spol_labeled(&r, &r1, &r2).unwrap();
        assert_eq!(s.sig.display(r.vars()).to_string(), "x*e1");
        assert_eq!(s.poly, r.parse("y^3*z*t - x^3*t^2").unwrap());
        // argument order does not matter up to sign
        let t = spol_labeled(&r, &r2, &r1).unwrap();
        assert_eq!(t.sig, s.sig);
        assert_eq!(t.poly, s.poly);
    }

    #[test]
    fn labeled_spol_with_multipliers() {
        // r6 = (x e1, y^3 z t - x^3 t^2) against r1 = (e1, f1): z^2 r6 - y^2 t r1
        let r = ring();
        let r6 = LabeledPoly::new(
            Signature::new(mono(&r, "x"), 1),
            r.parse("y^3*z*t - x^3*t^2").unwrap(),
        );
        let r1 = LabeledPoly::new(Signature::unit(1, 4), r.parse("y*z^3 - x^2*t^2").unwrap());
        let parts = spol_parts(&r, &r6.sig, &r6.poly, &r1.sig, &r1.poly).unwrap();
        assert!(!parts.swapped);
        assert_eq!(r.format_monomial(&parts.u1), "z^2");
        assert_eq!(r.format_monomial(&parts.u2), "y^2*t");
        assert_eq!(parts.sig.display(r.vars()).to_string(), "x*z^2*e1");
    }

    #[test]
    fn self_spol_collides() {
        let r = ring();
        let r1 = LabeledPoly::new(Signature::unit(1, 4), r.parse("y*z^3 - x^2*t^2").unwrap());
        assert!(matches!(
            spol_labeled(&r, &r1, &r1),
            Err(Error::SignatureCollision(_))
        ));
        // the polynomial part itself vanishes
        assert!(r.spol(&r1.poly, &r1.poly).unwrap().s.is_zero());
    }

    #[test]
    fn witness_combination() {
        let r = ring();
        let f = r.field();
        let mut r1 = LabeledPoly::new(Signature::unit(1, 4), r.parse("y*z^3 - x^2*t^2").unwrap());
        let mut r2 = LabeledPoly::new(Signature::unit(2, 4), r.parse("x*z^2 - y^2*t").unwrap());
        r1.witness = Some(Witness {
            vector: ModuleVector::unit(&r, 1),
            lead: f.one(),
        });
        r2.witness = Some(Witness {
            vector: ModuleVector::unit(&r, 2),
            lead: f.one(),
        });
        let s = spol_labeled(&r, &r1, &r2).unwrap();
        let w = s.witness.unwrap();
        let polys = vec![r1.poly.clone(), r2.poly.clone()];
        assert_eq!(w.vector.evaluate_with(&r, &polys).unwrap(), s.poly);
        assert_eq!(w.vector.get(1), Some(&r.parse("x").unwrap()));
        assert_eq!(w.vector.get(2), Some(&r.parse("-y*z").unwrap()));
    }
}
