//! Incremental signature-based Gröbner basis computation.
//!
//! Generators are added from the last to the first. While generator `k` is
//! being added, the basis holds every element whose signature index is at
//! least `k`; elements are never removed and keep their basis position.
//! Positions `1..=m` hold the (monic) input generators with `Sig = e_i`.
//!
//! Two criteria discard critical pairs. The first one rejects a component
//! `u r_k` when some element of larger index has a head term dividing
//! `u Γ(Sig(r_k))`. The rewrite criterion keeps, for each index, the list of
//! rules in creation order; the newest rule whose term divides the
//! component's module term decides, and the component survives only if that
//! rule is the one created together with `r_k`.

mod engine;
mod trace;

use std::cmp::Ordering;

pub use engine::{incremental_basis, top_reduction_signed, F5Run, ReduceStep, TopReduction};
pub use trace::Event;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::signature::{sig_compare, LabeledPoly, Signature};
use crate::stats::Stats;

/// Which component of a critical pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// The component with the larger module term.
    I,
    J,
}

/// A critical pair `(u_i r_i, u_j r_j)` with `u_j Sig(r_j) ≺_F u_i Sig(r_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub u_i: Monomial,
    pub u_j: Monomial,
    pub lcm: Monomial,
    /// `u_i Sig(r_i)`, the signature of the S-polynomial.
    pub sig: Signature,
}

impl CriticalPair {
    pub fn degree(&self) -> u32 {
        self.lcm.degree()
    }

    /// `(position, multiplier)` of one component.
    pub fn component(&self, side: Side) -> (usize, &Monomial) {
        match side {
            Side::I => (self.i, &self.u_i),
            Side::J => (self.j, &self.u_j),
        }
    }
}

/// What a rewrite rule stands for once its polynomial is reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleTarget {
    /// Still waiting for reduction.
    Pending,
    /// Became the basis element at this position.
    Element(usize),
    /// Reduced to zero; index into [`BasisState::zeros`].
    Syzygy(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub sig: Signature,
    pub target: RuleTarget,
}

/// A labeled polynomial that reduced to zero.
#[derive(Clone, Debug)]
pub struct ZeroReduction<E> {
    pub sig: Signature,
    pub rule: usize,
    pub witness: Option<crate::signature::Witness<E>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectionKind {
    /// The component's module term is divisible by `HT(p_witness)` for an
    /// element of larger index; `lambda * HT(p_witness) = u Γ`.
    F5 {
        witness: usize,
        lambda: Monomial,
        /// Further elements that would have served as witness, for either side.
        others: Vec<(Side, usize)>,
    },
    /// A newer rule with `lambda * Γ(rule) = u Γ`.
    Rewrite { rule: usize, lambda: Monomial },
    /// Both components have the same module term.
    Collision,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    /// When the pair was formed.
    Creation,
    /// When the pair was taken from the queue.
    Selection,
}

/// A critical pair discarded by a criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub pair: CriticalPair,
    pub side: Side,
    pub kind: RejectionKind,
    pub stage: Stage,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairOrder {
    /// Process all pairs of minimal lcm degree, each batch in signature order.
    #[default]
    Degree,
    /// Process one pair of minimal signature at a time.
    Signature,
}

#[derive(Clone, Debug)]
pub struct EngineOptions {
    pub pair_order: PairOrder,
    /// Track module witnesses so rejections can be certified.
    pub certify: bool,
    /// Record trace events.
    pub trace: bool,
    /// Evaluate the improved criterion next to the first one on every pair.
    pub shadow_improved: bool,
    pub max_elements: usize,
    pub max_reductions: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        Self {
            pair_order: PairOrder::Degree,
            certify: false,
            trace: false,
            shadow_improved: false,
            max_elements: 20_000,
            max_reductions: 50_000_000,
        }
    }
}

/// Basis elements, rewrite rules and counters of a run.
#[derive(Clone, Debug)]
pub struct BasisState<E> {
    order: MonomialOrder,
    elements: Vec<LabeledPoly<E>>,
    element_rule: Vec<usize>,
    rules: Vec<RewriteRule>,
    rules_by_index: Vec<Vec<usize>>,
    by_index: Vec<Vec<usize>>,
    zeros: Vec<ZeroReduction<E>>,
    inputs: usize,
    current: usize,
    pub stats: Stats,
}

impl<E: Clone> BasisState<E> {
    pub(crate) fn new(order: MonomialOrder, inputs: usize) -> Self {
        Self {
            order,
            elements: Vec::new(),
            element_rule: Vec::new(),
            rules: Vec::new(),
            rules_by_index: vec![Vec::new(); inputs + 1],
            by_index: vec![Vec::new(); inputs + 1],
            zeros: Vec::new(),
            inputs,
            current: inputs + 1,
            stats: Stats::new("f5"),
        }
    }

    /// Elements by position; position `n` is `elements()[n - 1]`.
    pub fn elements(&self) -> &[LabeledPoly<E>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, pos: usize) -> Result<&LabeledPoly<E>> {
        pos.checked_sub(1)
            .and_then(|i| self.elements.get(i))
            .ok_or_else(|| Error::Structural(format!("no basis element at position {pos}")))
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs
    }

    /// Index of the generator currently being added.
    pub fn current_index(&self) -> usize {
        self.current
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule(&self, id: usize) -> Result<&RewriteRule> {
        self.rules
            .get(id)
            .ok_or_else(|| Error::Structural(format!("no rewrite rule {id}")))
    }

    /// Rule created together with the element at `pos`.
    pub fn element_rule(&self, pos: usize) -> usize {
        self.element_rule[pos - 1]
    }

    pub fn zeros(&self) -> &[ZeroReduction<E>] {
        &self.zeros
    }

    /// Positions of the elements with signature index `k`, in creation order.
    pub fn positions_of_index(&self, k: usize) -> &[usize] {
        &self.by_index[k]
    }

    /// Positions taking part in the current increment, ascending.
    pub fn active(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.elements.len()).filter(move |p| self.elements[p - 1].sig.index() >= self.current)
    }

    pub fn is_active(&self, pos: usize) -> bool {
        self.elements
            .get(pos.wrapping_sub(1))
            .is_some_and(|r| r.sig.index() >= self.current)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Module term `u Γ(Sig(r_pos))` of a component.
    pub fn component_term(&self, pos: usize, u: &Monomial) -> Signature {
        self.elements[pos - 1].sig.mul(u)
    }

    /// All elements of larger index whose head term divides `u Γ(Sig(r_pos))`,
    /// in position order.
    pub fn normalization_witnesses(&self, pos: usize, u: &Monomial) -> Vec<usize>
    where
        E: Clone,
    {
        let s = self.component_term(pos, u);
        let mut out = Vec::new();
        for k in s.index() + 1..self.by_index.len() {
            for &p in &self.by_index[k] {
                if let Some(h) = self.elements[p - 1].poly.head_monomial() {
                    if h.divides(s.gamma()) {
                        out.push(p);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// First element that makes `u r_pos` fail the first criterion.
    pub fn f5_witness(&self, pos: usize, u: &Monomial) -> Option<usize> {
        self.normalization_witnesses(pos, u).into_iter().next()
    }

    pub fn is_normalized(&self, pos: usize, u: &Monomial) -> bool {
        self.f5_witness(pos, u).is_none()
    }

    /// The rule that rewrites `u r_pos`, if any.
    pub fn rewriter(&self, pos: usize, u: &Monomial) -> Option<usize> {
        let own = self.element_rule[pos - 1];
        let s = self.component_term(pos, u);
        for &id in self.rules_by_index[s.index()].iter().rev() {
            if id == own {
                return None;
            }
            if self.rules[id].sig.gamma().divides(s.gamma()) {
                return Some(id);
            }
        }
        None
    }

    pub fn is_rewritable(&self, pos: usize, u: &Monomial) -> bool {
        self.rewriter(pos, u).is_some()
    }

    /// Checks both criteria on both components, the larger side first.
    pub fn check_pair(&self, pair: &CriticalPair) -> Option<(Side, RejectionKind)> {
        let wi = self.normalization_witnesses(pair.i, &pair.u_i);
        let wj = self.normalization_witnesses(pair.j, &pair.u_j);
        let mut all: Vec<(Side, usize)> = wi
            .iter()
            .map(|p| (Side::I, *p))
            .chain(wj.iter().map(|p| (Side::J, *p)))
            .collect();
        if !all.is_empty() {
            let (side, witness) = all.remove(0);
            let (pos, u) = pair.component(side);
            let term = self.component_term(pos, u);
            let head = self.elements[witness - 1].poly.head_monomial().unwrap();
            let lambda = head
                .quotient_of(term.gamma())
                .expect("witness head divides");
            return Some((
                side,
                RejectionKind::F5 {
                    witness,
                    lambda,
                    others: all,
                },
            ));
        }
        for side in [Side::I, Side::J] {
            let (pos, u) = pair.component(side);
            if let Some(rule) = self.rewriter(pos, u) {
                let term = self.component_term(pos, u);
                let lambda = self.rules[rule]
                    .sig
                    .gamma()
                    .quotient_of(term.gamma())
                    .expect("rule divides");
                return Some((side, RejectionKind::Rewrite { rule, lambda }));
            }
        }
        None
    }

    pub(crate) fn add_rule(&mut self, sig: Signature, target: RuleTarget) -> usize {
        let id = self.rules.len();
        self.rules_by_index[sig.index()].push(id);
        self.rules.push(RewriteRule { sig, target });
        id
    }

    pub(crate) fn push_element(&mut self, lp: LabeledPoly<E>, rule: usize) -> usize {
        let pos = self.elements.len() + 1;
        self.by_index[lp.sig.index()].push(pos);
        self.elements.push(lp);
        self.element_rule.push(rule);
        self.rules[rule].target = RuleTarget::Element(pos);
        pos
    }

    pub(crate) fn push_zero(&mut self, zero: ZeroReduction<E>) -> usize {
        let id = self.zeros.len();
        self.rules[zero.rule].target = RuleTarget::Syzygy(id);
        self.zeros.push(zero);
        id
    }

    pub(crate) fn set_current(&mut self, k: usize) {
        self.current = k;
    }

    pub(crate) fn sig_cmp(&self, a: &Signature, b: &Signature) -> Ordering {
        sig_compare(a, b, &self.order)
    }
}
