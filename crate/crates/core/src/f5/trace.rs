use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::PolyRing;
use crate::signature::Signature;

use super::{CriticalPair, F5Run, RejectionKind, RuleTarget, Side, Stage};

/// One step of a run, rendered by [`F5Run::trace_lines`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Event {
    /// Generator `k` joins the computation.
    Index {
        k: usize,
    },
    Pair {
        pair: CriticalPair,
    },
    /// Index into [`F5Run::rejections`].
    Reject {
        rejection: usize,
    },
    Reduce {
        sig: Signature,
        by: usize,
        multiplier: Monomial,
    },
    Split {
        sig: Signature,
        by: usize,
        multiplier: Monomial,
        new_sig: Signature,
    },
    Zero {
        sig: Signature,
    },
    New {
        pos: usize,
        sig: Signature,
        head: Monomial,
    },
    /// A polynomial was reduced after one with a larger signature.
    OutOfOrder {
        sig: Signature,
        previous: Signature,
    },
}

impl<E: Clone> F5Run<E> {
    /// One line per event. Rule references print the position the rule
    /// ended up pointing to, or `zero<n>` for a zero reduction.
    pub fn trace_lines<F: Field<Elem = E>>(&self, ring: &PolyRing<F>) -> Vec<String> {
        let v = ring.vars();
        let mut out = Vec::with_capacity(self.events.len());
        for ev in &self.events {
            match ev {
                Event::Index { k } => out.push(format!("INDEX k={k}")),
                Event::Pair { pair } => out.push(format!(
                    "PAIR d={} sig={} ({},{})",
                    pair.degree(),
                    pair.sig.display(v),
                    pair.i,
                    pair.j
                )),
                Event::Reject { rejection } => {
                    let rej = &self.rejections[*rejection];
                    let p = &rej.pair;
                    let (pos, u) = p.component(rej.side);
                    let term = self.state.elements()[pos - 1].sig.mul(u);
                    let stage = match rej.stage {
                        Stage::Creation => "creation",
                        Stage::Selection => "selection",
                    };
                    let tail = format!("u={} sig={} at={stage}", u.display(v), term.display(v));
                    match &rej.kind {
                        RejectionKind::F5 {
                            witness, others, ..
                        } => {
                            out.push(format!(
                                "REJECT f5crit pair=({},{}) comp={pos} witness={witness} {tail}",
                                p.i, p.j
                            ));
                            for (side, w) in others {
                                let c = match side {
                                    Side::I => p.i,
                                    Side::J => p.j,
                                };
                                out.push(format!(
                                    "WITNESS f5crit pair=({},{}) comp={c} witness={w}",
                                    p.i, p.j
                                ));
                            }
                        }
                        RejectionKind::Rewrite { rule, .. } => {
                            let target = match self.state.rules()[*rule].target {
                                RuleTarget::Element(n) => n.to_string(),
                                RuleTarget::Syzygy(z) => format!("zero{z}"),
                                RuleTarget::Pending => "pending".to_string(),
                            };
                            out.push(format!(
                                "REJECT rewrite pair=({},{}) comp={pos} rule={target} {tail}",
                                p.i, p.j
                            ));
                        }
                        RejectionKind::Collision => out.push(format!(
                            "REJECT collision pair=({},{}) sig={}",
                            p.i,
                            p.j,
                            p.sig.display(v)
                        )),
                    }
                }
                Event::Reduce {
                    sig,
                    by,
                    multiplier,
                } => out.push(format!(
                    "REDUCE sig={} by={by} u={}",
                    sig.display(v),
                    multiplier.display(v)
                )),
                Event::Split {
                    sig,
                    by,
                    multiplier,
                    new_sig,
                } => out.push(format!(
                    "SPLIT sig={} by={by} u={} new={}",
                    sig.display(v),
                    multiplier.display(v),
                    new_sig.display(v)
                )),
                Event::Zero { sig } => out.push(format!("ZERO sig={}", sig.display(v))),
                Event::New { pos, sig, head } => out.push(format!(
                    "NEW pos={pos} sig={} ht={}",
                    sig.display(v),
                    head.display(v)
                )),
                Event::OutOfOrder { sig, previous } => out.push(format!(
                    "ORDER sig={} after={}",
                    sig.display(v),
                    previous.display(v)
                )),
            }
        }
        out
    }
}
