//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Inline storage covers the usual variable counts without allocating.
type Exps = SmallVec<[u32; 8]>;

/// A power product `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
///
/// The total degree is cached; the vector length is the ring's variable
/// count and never changes after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Self {
            exps: Exps::from_vec(exps),
            degree,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            exps: smallvec![0; nvars],
            degree: 0,
        }
    }

    /// The monomial `x_var^pow`.
    pub fn var(nvars: usize, var: usize, pow: u32) -> Self {
        let mut exps: Exps = smallvec![0; nvars];
        exps[var] = pow;
        Self { exps, degree: pow }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: other.degree - self.degree,
        })
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Checked lcm; fails on length mismatch.
pub fn lcm_term(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    check_len(a, b)?;
    Ok(a.lcm(b))
}

fn check_len(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::Structural(format!(
            "exponent vectors of length {} and {}",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(())
}

/// Renders `x^2*y`, or `1` for the unit monomial.
pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Degree reverse lexicographic.
    DegRevLex,
    Lex,
}

/// A term order together with a variable precedence.
///
/// `precedence[r]` is the variable of rank `r`; rank 0 is the largest
/// variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Order with the natural precedence `x_0 > x_1 > ... > x_{n-1}`.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        Self {
            kind,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(OrderKind::DegRevLex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    /// Fails unless `precedence` is a permutation of `0..n`.
    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; precedence.len()];
        for &v in &precedence {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Structural(format!(
                    "variable precedence {precedence:?} is not a permutation"
                )));
            }
        }
        Ok(Self { kind, precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    /// Compares two exponent vectors of matching length.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self.kind {
            OrderKind::DegRevLex => a.degree.cmp(&b.degree).then_with(|| {
                for &v in self.precedence.iter().rev() {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
            OrderKind::Lex => {
                for &v in &self.precedence {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Like [`MonomialOrder::cmp`] but reports a length mismatch.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        check_len(a, b)?;
        if a.nvars() != self.nvars() {
            return Err(Error::Structural(format!(
                "order on {} variables applied to exponent vectors of length {}",
                self.nvars(),
                a.nvars()
            )));
        }
        Ok(self.cmp(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // exponent order: x, y, z, t
    fn m(e: [u32; 4]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        let ord = MonomialOrder::degrevlex(4);
        // y z^3 vs x^2 t^2
        assert_eq!(
            ord.cmp(&m([0, 1, 3, 0]), &m([2, 0, 0, 2])),
            Ordering::Greater
        );
        // x^2 y vs z^2 t
        assert_eq!(
            ord.cmp(&m([2, 1, 0, 0]), &m([0, 0, 2, 1])),
            Ordering::Greater
        );
        let a = m([1, 2, 0, 1]);
        assert_eq!(ord.cmp(&a, &a), Ordering::Equal);
    }

    #[test]
    fn lex_prefers_first_variable() {
        let ord = MonomialOrder::lex(4);
        assert_eq!(
            ord.cmp(&m([1, 0, 0, 0]), &m([0, 5, 5, 5])),
            Ordering::Greater
        );
    }

    #[test]
    fn precedence_permutation() {
        let ord = MonomialOrder::with_precedence(OrderKind::Lex, vec![3, 2, 1, 0]).unwrap();
        assert_eq!(ord.cmp(&m([1, 0, 0, 0]), &m([0, 0, 0, 1])), Ordering::Less);
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, vec![0, 0]).is_err());
    }

    #[test]
    fn compare_length_mismatch() {
        let ord = MonomialOrder::degrevlex(2);
        let a = Monomial::new(vec![1, 0]);
        let b = Monomial::new(vec![1, 0, 0]);
        assert!(matches!(ord.compare(&a, &b), Err(Error::Structural(_))));
        assert!(lcm_term(&a, &b).is_err());
    }

    #[test]
    fn lcm_examples() {
        // lcm(y z^3, x z^2) = x y z^3
        assert_eq!(m([0, 1, 3, 0]).lcm(&m([1, 0, 2, 0])), m([1, 1, 3, 0]));
        let a = m([2, 0, 1, 3]);
        assert_eq!(a.lcm(&Monomial::one(4)), a);
        assert_eq!(a.lcm(&a), a);
    }

    #[test]
    fn division() {
        let a = m([1, 0, 2, 0]);
        let b = m([2, 1, 2, 0]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(m([1, 1, 0, 0])));
        assert_eq!(b.quotient_of(&a), None);
    }

    #[test]
    fn display() {
        let names: Vec<String> = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
        assert_eq!(m([1, 0, 2, 0]).display(&names).to_string(), "x*z^2");
        assert_eq!(Monomial::one(4).display(&names).to_string(), "1");
    }
}
