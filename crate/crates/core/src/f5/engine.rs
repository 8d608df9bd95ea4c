use crate::error::{Error, Result};
use crate::falsifier;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::signature::{spol_parts, LabeledPoly, Signature, Witness};
use crate::syzygy::{self, ModuleVector};

use super::{
    BasisState, CriticalPair, EngineOptions, Event, PairOrder, Rejection, RejectionKind,
    RuleTarget, Side, Stage, ZeroReduction,
};

/// One head reduction `p -= c u p_by`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReduceStep {
    pub by: usize,
    pub multiplier: Monomial,
}

#[derive(Clone, Debug)]
pub enum TopReduction<E> {
    /// No eligible reducer is left; the polynomial is not yet monic.
    Reduced(LabeledPoly<E>),
    /// The only eligible reducer `multiplier * r_by` has the larger signature.
    /// `new` is the labeled polynomial `multiplier * r_by - c * current`.
    Split {
        current: LabeledPoly<E>,
        new: LabeledPoly<E>,
        by: usize,
        multiplier: Monomial,
    },
    Zero(LabeledPoly<E>),
}

/// Result of [`incremental_basis`].
#[derive(Clone, Debug)]
pub struct F5Run<E> {
    pub state: BasisState<E>,
    /// Trace events, recorded when [`EngineOptions::trace`] is set.
    pub events: Vec<Event>,
    pub rejections: Vec<Rejection>,
    /// Every critical pair formed, in creation order.
    pub pairs: Vec<CriticalPair>,
}

impl<E: Clone> F5Run<E> {
    /// Polynomials of all basis elements, by position.
    pub fn basis(&self) -> Vec<Polynomial<E>> {
        self.state
            .elements()
            .iter()
            .map(|r| r.poly.clone())
            .collect()
    }

    pub fn reduced_basis<F: Field<Elem = E>>(&self, ring: &PolyRing<F>) -> Vec<Polynomial<E>> {
        ring.interreduce(&self.basis())
    }
}

/// Head-reduces `r` by the active basis elements while respecting
/// signatures.
///
/// A reducer `u r_red` is eligible when `u HT(p_red) = HT(p)`, its module
/// term differs from `Sig(r)`, and it passes both criteria. Reducers with a
/// smaller module term are preferred; if only larger ones remain the first of
/// them produces a [`TopReduction::Split`].
pub fn top_reduction_signed<F: Field>(
    ring: &PolyRing<F>,
    state: &BasisState<F::Elem>,
    r: LabeledPoly<F::Elem>,
) -> (TopReduction<F::Elem>, Vec<ReduceStep>) {
    let f = ring.field();
    let one = Monomial::one(ring.nvars());
    let mut r = r;
    let mut steps = Vec::new();
    loop {
        let Some(hm) = r.poly.head_monomial().cloned() else {
            return (TopReduction::Zero(r), steps);
        };
        let mut smaller = None;
        let mut larger = None;
        for pos in state.active() {
            let red = &state.elements()[pos - 1];
            let Some(u) = red.poly.head_monomial().and_then(|h| h.quotient_of(&hm)) else {
                continue;
            };
            let s = red.sig.mul(&u);
            let ord = state.sig_cmp(&s, &r.sig);
            if ord == std::cmp::Ordering::Equal {
                continue;
            }
            if ord == std::cmp::Ordering::Greater && larger.is_some() {
                continue;
            }
            if !state.is_normalized(pos, &u) || state.is_rewritable(pos, &u) {
                continue;
            }
            if ord == std::cmp::Ordering::Less {
                smaller = Some((pos, u));
                break;
            }
            larger = Some((pos, u));
        }
        if let Some((pos, u)) = smaller {
            let red = &state.elements()[pos - 1];
            let c = f.neg(&f.div(r.poly.head_coeff().unwrap(), red.poly.head_coeff().unwrap()));
            r.poly = ring.add_scaled(&r.poly, &c, &u, &red.poly);
            if let Some(w) = r.witness.as_mut() {
                w.vector
                    .add_entry_scaled(ring, pos, &c, &u, &ring.constant(f.one()));
            }
            steps.push(ReduceStep {
                by: pos,
                multiplier: u,
            });
            continue;
        }
        if let Some((pos, u)) = larger {
            let red = &state.elements()[pos - 1];
            let c = f.neg(&f.div(red.poly.head_coeff().unwrap(), r.poly.head_coeff().unwrap()));
            let poly = ring.add_scaled(&ring.mul_term(&red.poly, &u, &f.one()), &c, &one, &r.poly);
            let witness = match (&red.witness, &r.witness) {
                (Some(wr), Some(w)) => {
                    let base = ModuleVector::single(pos, ring.monomial(u.clone()));
                    Some(Witness {
                        vector: base.add_scaled(ring, &c, &one, &w.vector),
                        lead: wr.lead.clone(),
                    })
                }
                _ => None,
            };
            let new = LabeledPoly {
                sig: red.sig.mul(&u),
                poly,
                witness,
            };
            return (
                TopReduction::Split {
                    current: r,
                    new,
                    by: pos,
                    multiplier: u,
                },
                steps,
            );
        }
        return (TopReduction::Reduced(r), steps);
    }
}

struct Pending<E> {
    lp: LabeledPoly<E>,
    rule: usize,
}

struct Engine<'a, F: Field> {
    ring: &'a PolyRing<F>,
    opts: &'a EngineOptions,
    state: BasisState<F::Elem>,
    queue: Vec<CriticalPair>,
    events: Vec<Event>,
    rejections: Vec<Rejection>,
    pairs: Vec<CriticalPair>,
    last_sig: Option<Signature>,
    reductions: usize,
}

/// Computes a Gröbner basis of `gens` incrementally with signatures.
///
/// Generator `gens[i - 1]` gets signature `e_i` and basis position `i`.
pub fn incremental_basis<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    opts: &EngineOptions,
) -> Result<F5Run<F::Elem>> {
    if gens.is_empty() {
        return Err(Error::Domain("no generators".into()));
    }
    for (i, g) in gens.iter().enumerate() {
        ring.check_poly(g)?;
        if g.is_zero() {
            return Err(Error::Domain(format!("generator {} is zero", i + 1)));
        }
    }
    let m = gens.len();
    let mut e = Engine {
        ring,
        opts,
        state: BasisState::new(ring.order().clone(), m),
        queue: Vec::new(),
        events: Vec::new(),
        rejections: Vec::new(),
        pairs: Vec::new(),
        last_sig: None,
        reductions: 0,
    };
    let f = ring.field();
    for (i, g) in gens.iter().enumerate() {
        let pos = i + 1;
        let sig = Signature::unit(pos, ring.nvars());
        let rule = e.state.add_rule(sig.clone(), RuleTarget::Pending);
        let witness = opts.certify.then(|| Witness {
            vector: ModuleVector::unit(ring, pos),
            lead: f.one(),
        });
        e.state.push_element(
            LabeledPoly {
                sig,
                poly: ring.monic(g),
                witness,
            },
            rule,
        );
    }
    for k in (1..=m).rev() {
        e.state.set_current(k);
        e.last_sig = None;
        if opts.trace {
            e.events.push(Event::Index { k });
            let r = &e.state.elements()[k - 1];
            e.events.push(Event::New {
                pos: k,
                sig: r.sig.clone(),
                head: r.poly.head_monomial().unwrap().clone(),
            });
        }
        let others: Vec<usize> = e.state.active().filter(|p| *p != k).collect();
        for q in others {
            e.make_pair(k, q);
        }
        e.process()?;
    }
    let reduced = ring.interreduce(
        &e.state
            .elements()
            .iter()
            .map(|r| r.poly.clone())
            .collect::<Vec<_>>(),
    );
    e.state.stats.basis_size = e.state.len();
    e.state.stats.reduced_size = reduced.len();
    Ok(F5Run {
        state: e.state,
        events: e.events,
        rejections: e.rejections,
        pairs: e.pairs,
    })
}

impl<F: Field> Engine<'_, F> {
    fn make_pair(&mut self, a: usize, b: usize) {
        let ra = &self.state.elements()[a - 1];
        let rb = &self.state.elements()[b - 1];
        let ha = ra.poly.head_monomial().unwrap();
        let hb = rb.poly.head_monomial().unwrap();
        let lcm = ha.lcm(hb);
        let ua = ha.quotient_of(&lcm).unwrap();
        let ub = hb.quotient_of(&lcm).unwrap();
        let sa = ra.sig.mul(&ua);
        let sb = rb.sig.mul(&ub);
        let ord = self.state.sig_cmp(&sa, &sb);
        let pair = if ord == std::cmp::Ordering::Less {
            CriticalPair {
                i: b,
                j: a,
                u_i: ub,
                u_j: ua,
                lcm,
                sig: sb,
            }
        } else {
            CriticalPair {
                i: a,
                j: b,
                u_i: ua,
                u_j: ub,
                lcm,
                sig: sa,
            }
        };
        self.state.stats.pairs_created += 1;
        self.pairs.push(pair.clone());
        if self.opts.trace {
            self.events.push(Event::Pair { pair: pair.clone() });
        }
        if ord == std::cmp::Ordering::Equal {
            self.reject(pair, Side::I, RejectionKind::Collision, Stage::Creation);
            return;
        }
        if self.opts.shadow_improved {
            let outcome = falsifier::shadow_check(&self.state, &pair);
            self.state.stats.part_b_firings += outcome.part_b_firings;
            if outcome.disagreement {
                self.state.stats.shadow_disagreements += 1;
            }
        }
        match self.state.check_pair(&pair) {
            Some((side, kind)) => self.reject(pair, side, kind, Stage::Creation),
            None => self.queue.push(pair),
        }
    }

    fn reject(&mut self, pair: CriticalPair, side: Side, kind: RejectionKind, stage: Stage) {
        match kind {
            RejectionKind::F5 { .. } => self.state.stats.rejected_f5 += 1,
            RejectionKind::Rewrite { .. } => self.state.stats.rejected_rewrite += 1,
            RejectionKind::Collision => self.state.stats.rejected_collision += 1,
        }
        if self.opts.trace {
            self.events.push(Event::Reject {
                rejection: self.rejections.len(),
            });
        }
        self.rejections.push(Rejection {
            pair,
            side,
            kind,
            stage,
        });
    }

    fn next_batch(&mut self) -> Vec<CriticalPair> {
        let order = self.state.order().clone();
        let key = |a: &CriticalPair, b: &CriticalPair| {
            crate::signature::sig_compare(&a.sig, &b.sig, &order)
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
        };
        match self.opts.pair_order {
            PairOrder::Degree => {
                let d = self.queue.iter().map(CriticalPair::degree).min().unwrap();
                let (mut batch, rest): (Vec<_>, Vec<_>) =
                    self.queue.drain(..).partition(|p| p.degree() == d);
                self.queue = rest;
                batch.sort_by(key);
                batch
            }
            PairOrder::Signature => {
                let best = (0..self.queue.len())
                    .min_by(|&x, &y| key(&self.queue[x], &self.queue[y]))
                    .unwrap();
                vec![self.queue.swap_remove(best)]
            }
        }
    }

    fn process(&mut self) -> Result<()> {
        while !self.queue.is_empty() {
            let batch = self.next_batch();
            let mut todo = Vec::new();
            for pair in batch {
                self.state.stats.pairs_processed += 1;
                if let Some((side, kind)) = self.state.check_pair(&pair) {
                    self.reject(pair, side, kind, Stage::Selection);
                    continue;
                }
                let lp = self.spol(&pair);
                let rule = self.state.add_rule(lp.sig.clone(), RuleTarget::Pending);
                todo.push(Pending { lp, rule });
            }
            self.reduce_all(todo)?;
        }
        Ok(())
    }

    fn spol(&self, pair: &CriticalPair) -> LabeledPoly<F::Elem> {
        let ring = self.ring;
        let f = ring.field();
        let ri = &self.state.elements()[pair.i - 1];
        let rj = &self.state.elements()[pair.j - 1];
        let parts = spol_parts(ring, &ri.sig, &ri.poly, &rj.sig, &rj.poly)
            .expect("pairs are formed from nonzero elements with distinct module terms");
        debug_assert!(!parts.swapped);
        let witness = ri.witness.as_ref().map(|wi| {
            let mut v = ModuleVector::single(pair.i, ring.term(parts.u1.clone(), parts.c1.clone()));
            v.add_entry_scaled(
                ring,
                pair.j,
                &f.neg(&parts.c2),
                &parts.u2,
                &ring.constant(f.one()),
            );
            Witness {
                vector: v,
                lead: f.mul(&parts.c1, &wi.lead),
            }
        });
        LabeledPoly {
            sig: parts.sig,
            poly: parts.poly,
            witness,
        }
    }

    fn reduce_all(&mut self, mut todo: Vec<Pending<F::Elem>>) -> Result<()> {
        let ring = self.ring;
        while !todo.is_empty() {
            let idx = (0..todo.len())
                .min_by(|&a, &b| {
                    self.state
                        .sig_cmp(&todo[a].lp.sig, &todo[b].lp.sig)
                        .then_with(|| todo[a].rule.cmp(&todo[b].rule))
                })
                .unwrap();
            let item = todo.swap_remove(idx);
            self.note_order(&item.lp.sig);
            let sig = item.lp.sig.clone();
            let (outcome, steps) = top_reduction_signed(ring, &self.state, item.lp);
            self.reductions += steps.len().max(1);
            self.state.stats.reduction_steps += steps.len();
            if self.reductions > self.opts.max_reductions {
                return Err(Error::Limit(format!(
                    "more than {} reduction steps",
                    self.opts.max_reductions
                )));
            }
            if self.opts.trace {
                for s in steps {
                    self.events.push(Event::Reduce {
                        sig: sig.clone(),
                        by: s.by,
                        multiplier: s.multiplier,
                    });
                }
            }
            match outcome {
                TopReduction::Reduced(lp) => {
                    let lp = self.normalize(lp);
                    self.check_admissible(&lp);
                    let pos = self.state.push_element(lp, item.rule);
                    if self.state.len() > self.opts.max_elements {
                        return Err(Error::Limit(format!(
                            "more than {} basis elements",
                            self.opts.max_elements
                        )));
                    }
                    let r = &self.state.elements()[pos - 1];
                    if self.opts.trace {
                        self.events.push(Event::New {
                            pos,
                            sig: r.sig.clone(),
                            head: r.poly.head_monomial().unwrap().clone(),
                        });
                    }
                    let others: Vec<usize> = self.state.active().filter(|p| *p != pos).collect();
                    for q in others {
                        self.make_pair(pos, q);
                    }
                }
                TopReduction::Zero(lp) => {
                    self.check_admissible(&lp);
                    self.state.stats.reductions_to_zero += 1;
                    if self.opts.trace {
                        self.events.push(Event::Zero {
                            sig: lp.sig.clone(),
                        });
                    }
                    self.state.push_zero(ZeroReduction {
                        sig: lp.sig,
                        rule: item.rule,
                        witness: lp.witness,
                    });
                }
                TopReduction::Split {
                    current,
                    new,
                    by,
                    multiplier,
                } => {
                    self.check_admissible(&current);
                    self.check_admissible(&new);
                    self.state.stats.splits += 1;
                    if self.opts.trace {
                        self.events.push(Event::Split {
                            sig: current.sig.clone(),
                            by,
                            multiplier,
                            new_sig: new.sig.clone(),
                        });
                    }
                    let rule = self.state.add_rule(new.sig.clone(), RuleTarget::Pending);
                    todo.push(Pending {
                        lp: current,
                        rule: item.rule,
                    });
                    todo.push(Pending { lp: new, rule });
                }
            }
        }
        Ok(())
    }

    fn normalize(&self, mut lp: LabeledPoly<F::Elem>) -> LabeledPoly<F::Elem> {
        let f = self.ring.field();
        let hc = lp.poly.head_coeff().unwrap().clone();
        if f.is_one(&hc) {
            return lp;
        }
        let inv = f.inv(&hc);
        lp.poly = self.ring.scale(&lp.poly, &inv);
        if let Some(w) = lp.witness.as_mut() {
            w.vector = w.vector.scale(self.ring, &inv);
            w.lead = f.mul(&w.lead, &inv);
        }
        lp
    }

    fn note_order(&mut self, sig: &Signature) {
        if let Some(prev) = &self.last_sig {
            if self.state.sig_cmp(sig, prev) == std::cmp::Ordering::Less {
                self.state.stats.out_of_order += 1;
                if self.opts.trace {
                    self.events.push(Event::OutOfOrder {
                        sig: sig.clone(),
                        previous: prev.clone(),
                    });
                }
            }
        }
        self.last_sig = Some(sig.clone());
    }

    /// In certificate mode, checks that the witness evaluates to the
    /// polynomial and that its maximal module term is the signature.
    fn check_admissible(&mut self, lp: &LabeledPoly<F::Elem>) {
        let Some(w) = &lp.witness else { return };
        let elements = self.state.elements();
        let value = syzygy::evaluate(self.ring, &w.vector, elements);
        let top = syzygy::mht(self.ring, &w.vector, elements);
        let ok = matches!(value, Ok(ref v) if *v == lp.poly)
            && matches!(top, Ok(Some(ref t)) if *t == lp.sig);
        if !ok {
            self.state.stats.admissibility_violations += 1;
        }
    }
}
