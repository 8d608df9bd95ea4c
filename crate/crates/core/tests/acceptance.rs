//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! if any criterion fails.

use std::cmp::{Ordering, Reverse};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigbasis::corpus::{cyclic, example_ideal, katsura, prime_ring, random_corpus};
use sigbasis::{
    buchberger_basis, certify_rejection, evaluate, ideal_equal, incremental_basis, mht, scan_run,
    sig_compare, BaselineOptions, EngineOptions, F5Run, Field, LabeledPoly, ModuleVector, Monomial,
    MonomialOrder, PolyRing, Polynomial, PrimeField, Rationals, RejectionKind, Signature,
    DEFAULT_PRIME,
};

const CORPUS_SEED: u64 = 2024;
const CORPUS_SIZE: usize = 120;
const GOLDEN_TIME_LIMIT: Duration = Duration::from_secs(1);
const SIGNATURE_TRIPLES: usize = 10_000;
const MODULE_VECTORS: usize = 1_000;

type Q = BigRational;
type Verdict = Result<String, String>;

const REFERENCE: [&str; 8] = [
    "x*z^2 - y^2*t",
    "x^2*y - z^2*t",
    "y*z^3 - x^2*t^2",
    "y^3*z*t - x^3*t^2",
    "x*y^3*t - z^4*t",
    "z^5*t - x^4*t^2",
    "y^5*t^2 - x^4*z*t^2",
    "x^5*t^2 - z^2*t^5",
];

fn golden_run(certify: bool) -> (PolyRing<Rationals>, F5Run<Q>) {
    let (ring, gens) = example_ideal();
    let opts = EngineOptions {
        certify,
        trace: true,
        shadow_improved: true,
        ..Default::default()
    };
    let run = incremental_basis(&ring, &gens, &opts).expect("engine run");
    (ring, run)
}

fn golden_basis() -> Verdict {
    let (ring, gens) = example_ideal();
    let mut want: Vec<Polynomial<Q>> = REFERENCE.iter().map(|s| ring.parse(s).unwrap()).collect();
    want.sort_by(|a, b| ring.cmp(a.head_monomial().unwrap(), b.head_monomial().unwrap()));

    let start = Instant::now();
    let f5 = incremental_basis(&ring, &gens, &EngineOptions::default())
        .map_err(|e| e.to_string())?
        .reduced_basis(&ring);
    let f5_time = start.elapsed();
    let start = Instant::now();
    let gm = buchberger_basis(&ring, &gens, &BaselineOptions::default())
        .map_err(|e| e.to_string())?
        .reduced_basis(&ring);
    let gm_time = start.elapsed();

    if f5 != want {
        return Err("signature engine basis differs from the reference".into());
    }
    if gm != want {
        return Err("Gebauer-Moeller basis differs from the reference".into());
    }
    if f5_time >= GOLDEN_TIME_LIMIT || gm_time >= GOLDEN_TIME_LIMIT {
        return Err(format!("too slow: f5 {f5_time:?}, gm {gm_time:?}"));
    }
    Ok(format!("8 elements, f5 {f5_time:?}, gm {gm_time:?}"))
}

/// Reads `(kind, u, sig)` back from the rendered criterion trace.
fn traced_rejections(lines: &[String]) -> Vec<(String, String, String)> {
    lines
        .iter()
        .filter(|l| l.starts_with("REJECT "))
        .map(|l| {
            let kind = l.split_whitespace().nth(1).unwrap().to_string();
            let field = |key: &str| {
                l.split_whitespace()
                    .find_map(|w| w.strip_prefix(key))
                    .unwrap_or_default()
                    .to_string()
            };
            (kind, field("u="), field("sig="))
        })
        .collect()
}

fn criterion_hits() -> Verdict {
    let (ring, run) = golden_run(false);
    let seen = traced_rejections(&run.trace_lines(&ring));
    let wanted = [
        ("rewrite", "x^2", "x^2*e1"),
        ("rewrite", "x*z", "x^2*z*e1"),
        ("rewrite", "x", "x^3*z*e1"),
        ("f5crit", "z^2", "x*z^2*e1"),
        ("f5crit", "y^3", "x^2*y^3*e1"),
        ("f5crit", "y", "x^2*y*e1"),
    ];
    let missing: Vec<String> = wanted
        .iter()
        .filter(|(k, u, s)| !seen.contains(&(k.to_string(), u.to_string(), s.to_string())))
        .map(|(k, u, s)| format!("{k} u={u} sig={s}"))
        .collect();
    if missing.is_empty() {
        Ok(format!("6 of 6 present among {} rejections", seen.len()))
    } else {
        Err(format!("missing {}", missing.join("; ")))
    }
}

/// Per-instance results of the corpus sweep.
#[derive(Default)]
struct CorpusReport {
    instances: usize,
    mismatches: Vec<String>,
    rejections: usize,
    unsound: Vec<String>,
    part_b: usize,
    disagreements: usize,
    scan_failures: Vec<String>,
    pairs_checked: usize,
}

fn sweep_one<F: Field>(
    report: &mut CorpusReport,
    name: &str,
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
) {
    report.instances += 1;
    let opts = EngineOptions {
        shadow_improved: true,
        ..Default::default()
    };
    let f5 = match incremental_basis(ring, gens, &opts) {
        Ok(run) => run,
        Err(e) => {
            report.mismatches.push(format!("{name}: {e}"));
            return;
        }
    };
    let gm = match buchberger_basis(ring, gens, &BaselineOptions::default()) {
        Ok(run) => run,
        Err(e) => {
            report.mismatches.push(format!("{name}: {e}"));
            return;
        }
    };
    if !ideal_equal(ring, &f5.basis(), &gm.basis) {
        report.mismatches.push(name.to_string());
    }

    // The reduced form of the final basis generates the same ideal and is
    // still a Groebner basis, so reducing against it decides the same thing.
    let reducers = f5.reduced_basis(ring);
    for rej in &f5.rejections {
        if matches!(rej.kind, RejectionKind::Collision) {
            continue;
        }
        report.rejections += 1;
        let p = &f5.state.element(rej.pair.i).unwrap().poly;
        let q = &f5.state.element(rej.pair.j).unwrap().poly;
        let s = ring.spol(p, q).unwrap().s;
        if !ring.top_reduce(&s, &reducers).is_zero() {
            report
                .unsound
                .push(format!("{name} ({},{})", rej.pair.i, rej.pair.j));
        }
    }

    let st = &f5.state.stats;
    report.part_b += st.part_b_firings;
    report.disagreements += st.shadow_disagreements;
    report.pairs_checked += st.pairs_created;
    let scan = scan_run(&f5.state);
    report.part_b += scan.part_b_candidates;
    if !scan.passed() {
        report.scan_failures.push(name.to_string());
    }
}

fn corpus_sweep() -> CorpusReport {
    let mut report = CorpusReport::default();
    let ring = prime_ring(3, DEFAULT_PRIME);
    for (n, (_, gens)) in random_corpus(CORPUS_SEED, CORPUS_SIZE).iter().enumerate() {
        sweep_one(&mut report, &format!("random #{n}"), &ring, gens);
    }
    let (ring, gens) = cyclic(PrimeField::default(), 4);
    sweep_one(&mut report, "cyclic-4", &ring, &gens);
    let (ring, gens) = katsura(PrimeField::default(), 4);
    sweep_one(&mut report, "katsura-4", &ring, &gens);

    // The golden ideal takes part in the lemma scan.
    let (_, run) = golden_run(false);
    report.part_b += run.state.stats.part_b_firings;
    report.disagreements += run.state.stats.shadow_disagreements;
    report.pairs_checked += run.state.stats.pairs_created;
    let scan = scan_run(&run.state);
    report.part_b += scan.part_b_candidates;
    if !scan.passed() {
        report.scan_failures.push("golden".into());
    }
    report
}

fn oracle_equivalence(r: &CorpusReport) -> Verdict {
    if r.mismatches.is_empty() {
        Ok(format!("{} instances agree", r.instances))
    } else {
        Err(format!(
            "{} mismatches: {}",
            r.mismatches.len(),
            r.mismatches.join(", ")
        ))
    }
}

fn rejection_soundness(r: &CorpusReport) -> Verdict {
    if r.unsound.is_empty() {
        Ok(format!("{} rejected pairs reduce to zero", r.rejections))
    } else {
        Err(format!(
            "{} unsound: {}",
            r.unsound.len(),
            r.unsound.join(", ")
        ))
    }
}

fn lemma_scan(r: &CorpusReport) -> Verdict {
    if r.part_b == 0 && r.disagreements == 0 && r.scan_failures.is_empty() {
        Ok(format!(
            "0 part(b) firings, 0 disagreements over {} pairs",
            r.pairs_checked
        ))
    } else {
        Err(format!(
            "{} part(b) firings, {} disagreements, scan failures: {}",
            r.part_b,
            r.disagreements,
            r.scan_failures.join(", ")
        ))
    }
}

fn vector(ring: &PolyRing<Rationals>, entries: &[(usize, &str)]) -> ModuleVector<Q> {
    let mut v = ModuleVector::zero();
    for (pos, p) in entries {
        v.set(*pos, ring.parse(p).unwrap());
    }
    v
}

fn proportional(ring: &PolyRing<Rationals>, a: &ModuleVector<Q>, b: &ModuleVector<Q>) -> bool {
    let Some((pos, bp)) = b.entries().next() else {
        return a.is_zero();
    };
    let Some(ap) = a.get(pos) else { return false };
    let kappa = ring
        .field()
        .div(ap.head_coeff().unwrap(), bp.head_coeff().unwrap());
    a == &b.scale(ring, &kappa)
}

fn certificate_suite() -> Verdict {
    let (ring, run) = golden_run(true);
    let el = run.state.elements();
    let mut certs = Vec::new();
    for rej in &run.rejections {
        let pair = (rej.pair.i, rej.pair.j);
        let cert =
            certify_rejection(&ring, rej, &run.state).map_err(|e| format!("pair {pair:?}: {e}"))?;
        if !evaluate(&ring, &cert.syzygy, el)
            .map_err(|e| e.to_string())?
            .is_zero()
        {
            return Err(format!(
                "pair {pair:?}: certificate does not evaluate to zero"
            ));
        }
        certs.push((pair, cert.syzygy));
    }
    let find = |pair| {
        certs
            .iter()
            .find(|(p, _)| *p == pair)
            .map(|(_, v)| v)
            .ok_or_else(|| format!("pair {pair:?} has no certificate"))
    };

    // -Spol(p6, p1) - x^2 t^2 p2 = 0
    let first = vector(&ring, &[(6, "-z^2"), (1, "y^2*t"), (2, "-x^2*t^2")]);
    if !proportional(&ring, find((6, 1))?, &first) {
        return Err("certificate of (6,1) is not the expected relation".into());
    }
    // -Spol(p8, p4) + z p9 = 0, p9 as built before normalization.
    let p9 = ring.parse("-x^5*t^2 + y^2*z^3*t^2").unwrap();
    let ratio = ring
        .field()
        .div(p9.head_coeff().unwrap(), el[8].poly.head_coeff().unwrap());
    let mut second = vector(&ring, &[(2, "z^4*t"), (5, "-x"), (8, "-x")]);
    second.set(9, ring.scale(&ring.parse("z").unwrap(), &ratio));
    if !evaluate(&ring, &second, el)
        .map_err(|e| e.to_string())?
        .is_zero()
    {
        return Err("reference relation for (8,4) does not evaluate to zero".into());
    }
    if !proportional(&ring, find((8, 4))?, &second) {
        return Err("certificate of (8,4) is not the expected relation".into());
    }
    Ok(format!(
        "{} certificates valid, both relations reproduced",
        certs.len()
    ))
}

fn random_signature(rng: &mut impl Rng, nvars: usize) -> Signature {
    let exps = (0..nvars).map(|_| rng.gen_range(0..4)).collect();
    Signature::new(Monomial::new(exps), rng.gen_range(1..4))
}

fn order_key(s: &Signature) -> (Reverse<usize>, u32, Vec<Reverse<u32>>) {
    let e = s.gamma().exps();
    (
        Reverse(s.index()),
        e.iter().sum(),
        e.iter().rev().map(|&a| Reverse(a)).collect(),
    )
}

fn signature_order_laws(rng: &mut impl Rng) -> Result<(), String> {
    let nvars = 4;
    let ord = MonomialOrder::degrevlex(nvars);
    for n in 0..SIGNATURE_TRIPLES {
        let [a, b, c] = [(); 3].map(|_| random_signature(rng, nvars));
        let t = random_signature(rng, nvars).gamma().clone();
        let ab = sig_compare(&a, &b, &ord);
        let bc = sig_compare(&b, &c, &ord);
        let ac = sig_compare(&a, &c, &ord);
        let total = ab == order_key(&a).cmp(&order_key(&b))
            && (ab == Ordering::Equal) == (a == b)
            && sig_compare(&b, &a, &ord) == ab.reverse();
        let transitive =
            !(ab != Ordering::Greater && bc != Ordering::Greater) || ac != Ordering::Greater;
        let compatible = sig_compare(&a.mul(&t), &b.mul(&t), &ord) == ab;
        if !(total && transitive && compatible) {
            return Err(format!("signature triple {n} violates the order laws"));
        }
    }
    Ok(())
}

fn evaluation_linearity(rng: &mut impl Rng) -> Result<(), String> {
    let ring = prime_ring(3, 101);
    let el: Vec<LabeledPoly<u32>> = ["x1^2 + 3*x2 - 1", "x1*x2*x3 - x3^2", "x2^3 + 5*x1*x3 + 7"]
        .iter()
        .enumerate()
        .map(|(n, s)| LabeledPoly::new(Signature::unit(n + 1, 3), ring.parse(s).unwrap()))
        .collect();
    let random_poly = |rng: &mut ChaCha8Rng| {
        let terms = (0..rng.gen_range(0..5))
            .map(|_| {
                let e = (0..3).map(|_| rng.gen_range(0..3)).collect();
                (Monomial::new(e), rng.gen_range(0..101))
            })
            .collect();
        ring.from_terms(terms)
    };
    let mut local = ChaCha8Rng::seed_from_u64(rng.gen());
    let random_vector = |rng: &mut ChaCha8Rng| {
        let mut v = ModuleVector::zero();
        for pos in 1..=3 {
            v.set(pos, random_poly(rng));
        }
        v
    };
    for n in 0..MODULE_VECTORS {
        let v = random_vector(&mut local);
        let w = random_vector(&mut local);
        let (a, b) = (local.gen_range(0..101u32), local.gen_range(0..101u32));
        let one = Monomial::one(3);
        let combo = v.scale(&ring, &a).add(&ring, &w.mul_term(&ring, &one, &b));
        let lhs = evaluate(&ring, &combo, &el).map_err(|e| e.to_string())?;
        let ev = evaluate(&ring, &v, &el).map_err(|e| e.to_string())?;
        let ew = evaluate(&ring, &w, &el).map_err(|e| e.to_string())?;
        let rhs = ring.add(&ring.scale(&ev, &a), &ring.scale(&ew, &b));
        let mut direct = Polynomial::zero();
        for (pos, coef) in v.entries() {
            direct = ring.add(&direct, &ring.mul(coef, &el[pos - 1].poly));
        }
        if lhs != rhs || ev != direct {
            return Err(format!("module vector {n} breaks linearity"));
        }
    }
    Ok(())
}

fn admissibility_on_golden() -> Result<(), String> {
    let (ring, run) = golden_run(true);
    if run.state.stats.admissibility_violations != 0 {
        return Err(format!(
            "{} in-loop admissibility violations",
            run.state.stats.admissibility_violations
        ));
    }
    let el = run.state.elements();
    for (n, e) in el.iter().enumerate() {
        let w = e.witness.as_ref().ok_or("missing witness")?;
        let value = evaluate(&ring, &w.vector, el).map_err(|e| e.to_string())?;
        let top = mht(&ring, &w.vector, el).map_err(|e| e.to_string())?;
        if value != e.poly || top.as_ref() != Some(&e.sig) {
            return Err(format!("element {} has an inadmissible witness", n + 1));
        }
    }
    Ok(())
}

fn property_suites() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    signature_order_laws(&mut rng)?;
    evaluation_linearity(&mut rng)?;
    admissibility_on_golden()?;
    Ok(format!(
        "{SIGNATURE_TRIPLES} signature triples, {MODULE_VECTORS} module vector pairs, golden witnesses"
    ))
}

fn main() {
    let mut failed = 0;
    let mut report = |name: &str, verdict: Verdict| match verdict {
        Ok(detail) => println!("PASS {name}: {detail}"),
        Err(detail) => {
            failed += 1;
            println!("FAIL {name}: {detail}");
        }
    };
    report("golden basis", golden_basis());
    report("criterion hits", criterion_hits());
    let corpus = corpus_sweep();
    report("oracle equivalence", oracle_equivalence(&corpus));
    report("certificate suite", certificate_suite());
    report("rejection soundness", rejection_soundness(&corpus));
    report("improved criterion scan", lemma_scan(&corpus));
    report("property suites", property_suites());
    if failed > 0 {
        std::process::exit(1);
    }
}
