//! `sigbasis`: compute a Gröbner basis of an ideal file or a seeded random
//! ideal with the signature engine, the Buchberger engine or both.
//!
//! Standard output carries the bases and the optional stats, certificate
//! and scan blocks; the criterion trace goes to standard error.
//!
//! Exit status: 0 success, 1 parse error (file or arguments), 2 engine
//! error, 3 the engines disagree, 4 a certificate failed.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use sigbasis::corpus::{seeded_random_ideal, RandomSpec};
use sigbasis::{
    buchberger_basis, certify_rejection, ideal_equal, incremental_basis, parse_ideal, scan_run,
    BaselineOptions, EngineOptions, Error, Field, FieldSpec, PairOrder, PolyRing, Polynomial,
    PrimeField, Rationals, RejectionKind,
};

const EXIT_PARSE: u8 = 1;
const EXIT_ENGINE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_CERTIFICATE: u8 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    F5,
    Gm,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PairOrderArg {
    /// All pairs of the smallest degree at once.
    Degree,
    /// One pair of the smallest signature at a time.
    Signature,
}

#[derive(Debug, Parser)]
#[command(
    name = "sigbasis",
    version,
    about = "Groebner bases with signature criteria"
)]
struct Args {
    /// Ideal file, or `-` for standard input.
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    file: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Engine::F5)]
    engine: Engine,

    #[arg(long, value_enum, default_value_t = PairOrderArg::Degree)]
    pair_order: PairOrderArg,

    /// Write every pair, rejection and reduction to standard error.
    #[arg(long)]
    trace_criteria: bool,

    /// Track witnesses and check a certificate for every rejected pair.
    #[arg(long)]
    certify: bool,

    /// Print engine counters as `key: value` lines.
    #[arg(long)]
    stats: bool,

    /// Check every basis element against the same-index normalization test.
    #[arg(long)]
    improved_scan: bool,

    /// Random ideal of K polynomials of degree at most D in N variables over
    /// GF(32003), all monomials present.
    #[arg(long, value_name = "K,D,N", value_parser = parse_random)]
    random: Option<RandomSpec>,

    /// Seed of the random ideal.
    #[arg(long, default_value_t = 0, requires = "random")]
    seed: u64,

    /// Print the random ideal in the file format and stop.
    #[arg(long, requires = "random")]
    emit_ideal: bool,
}

fn parse_random(s: &str) -> Result<RandomSpec, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [k, d, n] = parts.as_slice() else {
        return Err("expected K,D,N".into());
    };
    let k: usize = k
        .parse()
        .map_err(|_| format!("invalid polynomial count `{k}`"))?;
    let d: u32 = d.parse().map_err(|_| format!("invalid degree `{d}`"))?;
    let n: usize = n
        .parse()
        .map_err(|_| format!("invalid variable count `{n}`"))?;
    if k == 0 || d == 0 || n == 0 {
        return Err("K, D and N must be positive".into());
    }
    Ok(RandomSpec::dense(k, d, n))
}

/// Everything printed on standard output, plus the exit status.
struct Outcome {
    out: String,
    code: u8,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match (&args.file, &args.random) {
        (_, Some(spec)) => {
            let (ring, gens) = seeded_random_ideal(spec, args.seed);
            if args.emit_ideal {
                Ok(Outcome {
                    out: ideal_text(&ring, &gens, spec, args.seed),
                    code: 0,
                })
            } else {
                run(&ring, &gens, &args)
            }
        }
        (Some(path), None) => from_file(path, &args),
        (None, None) => unreachable!("clap requires a file or --random"),
    };
    match outcome {
        Ok(o) => {
            print!("{}", o.out);
            ExitCode::from(o.code)
        }
        Err((code, message)) => {
            eprintln!("sigbasis: {message}");
            ExitCode::from(code)
        }
    }
}

type Failure = (u8, String);

fn from_file(path: &PathBuf, args: &Args) -> Result<Outcome, Failure> {
    let name = path.display().to_string();
    let mut text = String::new();
    let read = if name == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| (EXIT_PARSE, format!("{name}: {e}")))?;
    let located = |e: Error| match e {
        Error::Parse {
            line,
            column,
            message,
        } => (EXIT_PARSE, format!("{name}:{line}:{column}: {message}")),
        other => (EXIT_PARSE, format!("{name}: {other}")),
    };
    let spec = parse_ideal(&text).map_err(located)?;
    match spec.field {
        FieldSpec::Rationals => {
            let ring = spec.ring(Rationals).map_err(located)?;
            let gens = spec.generators_in(&ring).map_err(located)?;
            run(&ring, &gens, args)
        }
        FieldSpec::Prime(p) => {
            let field = PrimeField::new(p).map_err(located)?;
            let ring = spec.ring(field).map_err(located)?;
            let gens = spec.generators_in(&ring).map_err(located)?;
            run(&ring, &gens, args)
        }
    }
}

fn ideal_text<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    spec: &RandomSpec,
    seed: u64,
) -> String {
    let mut s = format!(
        "# random ideal: {} polynomials, degree <= {}, seed {}\nvars: {}\norder: drl\nfield: {}\n",
        spec.polys,
        spec.degree,
        seed,
        ring.vars().join(", "),
        ring.field().describe(),
    );
    for g in gens {
        let _ = writeln!(s, "{}", ring.format(g));
    }
    s
}

fn engine_error(e: Error) -> Failure {
    (EXIT_ENGINE, e.to_string())
}

fn write_basis<F: Field>(
    out: &mut String,
    ring: &PolyRing<F>,
    engine: &str,
    basis: &[Polynomial<F::Elem>],
) {
    let _ = writeln!(out, "# {engine}: {} elements", basis.len());
    for p in basis {
        let _ = writeln!(out, "{}", ring.format(p));
    }
}

fn run<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    args: &Args,
) -> Result<Outcome, Failure> {
    let mut out = String::new();
    let mut code = 0;
    let mut f5_basis = None;
    let mut gm_basis = None;

    if args.engine != Engine::Gm {
        let opts = EngineOptions {
            pair_order: match args.pair_order {
                PairOrderArg::Degree => PairOrder::Degree,
                PairOrderArg::Signature => PairOrder::Signature,
            },
            certify: args.certify,
            trace: args.trace_criteria,
            shadow_improved: true,
            ..Default::default()
        };
        let run = incremental_basis(ring, gens, &opts).map_err(engine_error)?;
        if args.trace_criteria {
            for line in run.trace_lines(ring) {
                eprintln!("{line}");
            }
        }
        let basis = run.reduced_basis(ring);
        write_basis(&mut out, ring, "f5", &basis);
        f5_basis = Some(run.basis());

        let scan = args.improved_scan.then(|| scan_run(&run.state));
        if args.stats {
            let _ = writeln!(out, "# stats f5");
            let _ = write!(out, "{}", run.state.stats);
        }
        if args.certify {
            let _ = writeln!(out, "# certificates");
            let mut failed = 0;
            for rej in &run.rejections {
                if matches!(rej.kind, RejectionKind::Collision) {
                    let _ = writeln!(out, "SKIP pair=({},{}) collision", rej.pair.i, rej.pair.j);
                    continue;
                }
                match certify_rejection(ring, rej, &run.state) {
                    Ok(cert) => {
                        let _ = writeln!(out, "{}", cert.render(ring));
                    }
                    Err(e) => {
                        failed += 1;
                        let _ = writeln!(out, "FAIL pair=({},{}) {e}", rej.pair.i, rej.pair.j);
                    }
                }
            }
            let _ = writeln!(out, "certificates failed: {failed}");
            if failed > 0 {
                code = EXIT_CERTIFICATE;
            }
        }
        if let Some(scan) = scan {
            let _ = writeln!(out, "# improved-criterion scan");
            for row in &scan.rows {
                let _ = writeln!(
                    out,
                    "r{} {}: {:?}",
                    row.position,
                    if row.input { "input" } else { "built" },
                    row.relation
                );
            }
            let firings = scan.part_b_candidates + run.state.stats.part_b_firings;
            let _ = writeln!(out, "improved-criterion part(b) firings: {firings}");
            if !scan.passed() || run.state.stats.shadow_disagreements > 0 {
                eprintln!("sigbasis: the same-index test fired; the run is inconsistent");
                code = EXIT_ENGINE;
            }
        }
    }

    if args.engine != Engine::F5 {
        let run =
            buchberger_basis(ring, gens, &BaselineOptions::default()).map_err(engine_error)?;
        let basis = run.reduced_basis(ring);
        write_basis(&mut out, ring, "gm", &basis);
        if args.stats {
            let _ = writeln!(out, "# stats gm");
            let _ = write!(out, "{}", run.stats);
        }
        gm_basis = Some(run.basis);
    }

    if let (Some(a), Some(b)) = (&f5_basis, &gm_basis) {
        let same = ideal_equal(ring, a, b);
        let _ = writeln!(out, "# engines agree: {same}");
        if !same && code == 0 {
            code = EXIT_MISMATCH;
        }
    }
    Ok(Outcome { out, code })
}
