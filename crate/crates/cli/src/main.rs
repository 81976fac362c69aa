//! Command-line front end: ingestion, computation, verification, and
//! diagram emission.
//!
//! Exit codes: 0 on success or a clean verification, 1 on a verification
//! failure (witnesses printed), 2 on usage errors (unreadable files,
//! malformed rationals, infeasible regions).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use comsal::com::Com;
use comsal::corpus::{generate, CorpusParams};
use comsal::geom::Arrangement;
use comsal::homology::betti;
use comsal::oracle::intersection_poset;
use comsal::salvetti::{salvetti_complex, salvetti_poset};
use comsal::zcover::verify_nerve;

#[derive(Parser)]
#[command(name = "comsal", version, about = "Covector systems of hyperplane arrangements, their Salvetti complexes, and verification against classical oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ArrangementArg {
    /// Arrangement file (JSON: dim, hyperplanes, optional region)
    #[arg(long)]
    arrangement: PathBuf,
}

#[derive(Args)]
struct CorpusArgs {
    /// Seed for the random corpus; fully determines the run
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of instances
    #[arg(long, default_value_t = 25)]
    count: usize,
    /// Maximum ambient dimension per instance
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Maximum number of hyperplanes per instance
    #[arg(long, default_value_t = 5)]
    hyperplanes: usize,
    /// Bound on coefficient numerators and denominators
    #[arg(long, default_value_t = 3)]
    coeff_bound: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the covectors of an arrangement, one sign string per line
    Covectors(ArrangementArg),
    /// Check the covector axioms on a file of newline-separated sign strings
    CheckCom {
        /// Covector file, one sign string per line
        #[arg(long)]
        com: PathBuf,
    },
    /// List the topes (maximal covectors) of an arrangement
    Topes(ArrangementArg),
    /// Emit the Salvetti poset (elements and covering relations)
    Salvetti {
        #[command(flatten)]
        arrangement: ArrangementArg,
        /// Emit the Hasse diagram as DOT instead of text
        #[arg(long)]
        dot: bool,
    },
    /// Emit the face poset's covering relations
    Hasse {
        #[command(flatten)]
        arrangement: ArrangementArg,
        /// Emit the Hasse diagram as DOT instead of text
        #[arg(long)]
        dot: bool,
    },
    /// Betti numbers and torsion of the Salvetti complex, as CSV
    Homology(ArrangementArg),
    /// Verify the nerve hypothesis and the cover lemmas on one arrangement
    VerifyNerve(ArrangementArg),
    /// Compare Salvetti homology with the intersection-poset prediction (K = V only)
    VerifyOs(ArrangementArg),
    /// Run every verification over a seeded random corpus
    VerifyAll(CorpusArgs),
    /// Remove constant coordinates and merge duplicate ones
    Semisimplify {
        /// Covector file, one sign string per line
        #[arg(long)]
        com: PathBuf,
    },
}

fn read_arrangement(path: &PathBuf) -> Result<Arrangement> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    Arrangement::from_json(&text).with_context(|| format!("in {}", path.display()))
}

fn read_com(path: &PathBuf) -> Result<Com> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    Com::parse(&text).with_context(|| format!("in {}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}

const PASS: ExitCode = ExitCode::SUCCESS;
const FAIL: ExitCode = ExitCode::FAILURE;

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Covectors(arg) => {
            let (com, _) = read_arrangement(&arg.arrangement)?.enumerate_covectors()?;
            print!("{}", com.to_text());
            Ok(PASS)
        }
        Command::CheckCom { com } => {
            let com = read_com(&com)?;
            let report = com.check();
            println!("covectors: {}", com.len());
            match &report.fs_witness {
                None => println!("fs: ok"),
                Some((x, y)) => println!("fs: FAIL witness (X={x}, Y={y})"),
            }
            match &report.se_witness {
                None => println!("se: ok"),
                Some((x, y, e)) => println!("se: FAIL witness (X={x}, Y={y}, e={e})"),
            }
            if report.ok() {
                println!(
                    "oriented matroid: {}",
                    if com.is_oriented_matroid() { "yes" } else { "no" }
                );
            }
            Ok(if report.ok() { PASS } else { FAIL })
        }
        Command::Topes(arg) => {
            let (com, _) = read_arrangement(&arg.arrangement)?.enumerate_covectors()?;
            for tope in com.topes() {
                println!("{tope}");
            }
            Ok(PASS)
        }
        Command::Salvetti { arrangement, dot } => {
            let (com, _) = read_arrangement(&arrangement.arrangement)?.enumerate_covectors()?;
            let sal = salvetti_poset(&com)?;
            if dot {
                print!("{}", sal.hasse_dot("salvetti"));
            } else {
                println!("elements: {}", sal.len());
                for element in sal.elements() {
                    println!("{element}");
                }
                let hasse = sal.hasse();
                println!("covers: {}", hasse.len());
                for (i, j) in hasse {
                    println!("{} < {}", sal.element(i), sal.element(j));
                }
            }
            Ok(PASS)
        }
        Command::Hasse { arrangement, dot } => {
            let (com, _) = read_arrangement(&arrangement.arrangement)?.enumerate_covectors()?;
            let poset = com.face_poset();
            if dot {
                print!("{}", poset.hasse_dot("faces"));
            } else {
                println!("elements: {}", poset.len());
                let hasse = poset.hasse();
                println!("covers: {}", hasse.len());
                for (i, j) in hasse {
                    println!("{} < {}", poset.element(i), poset.element(j));
                }
            }
            Ok(PASS)
        }
        Command::Homology(arg) => {
            let (com, _) = read_arrangement(&arg.arrangement)?.enumerate_covectors()?;
            let profile = betti(&salvetti_complex(&com)?);
            println!("degree,betti,torsion");
            for (degree, b) in profile.betti.iter().enumerate() {
                let torsion = profile.torsion[degree]
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                println!("{degree},{b},{torsion}");
            }
            Ok(PASS)
        }
        Command::VerifyNerve(arg) => {
            let report = verify_nerve(&read_arrangement(&arg.arrangement)?)?;
            println!("{report}");
            Ok(if report.ok() { PASS } else { FAIL })
        }
        Command::VerifyOs(arg) => {
            let arrangement = read_arrangement(&arg.arrangement)?;
            let poset = intersection_poset(&arrangement)?;
            let poincare = poset.poincare_polynomial();
            let (com, _) = arrangement.enumerate_covectors()?;
            let profile = betti(&salvetti_complex(&com)?);
            let betti_vec = profile.betti_padded(poincare.len());
            let join = |v: &[i64]| {
                v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            };
            println!("salvetti betti: {}", join(&betti_vec.iter().map(|&b| b as i64).collect::<Vec<_>>()));
            println!("poincare:       {}", join(&poincare));
            let torsion_free = !profile.has_torsion();
            println!("torsion-free: {}", if torsion_free { "yes" } else { "no" });
            let agree = torsion_free
                && betti_vec.iter().map(|&b| b as i64).collect::<Vec<_>>() == poincare
                && profile.betti.len() <= poincare.len();
            println!("agreement: {}", if agree { "ok" } else { "FAIL" });
            Ok(if agree { PASS } else { FAIL })
        }
        Command::VerifyAll(args) => {
            let params = CorpusParams {
                seed: args.seed,
                count: args.count,
                dim: args.dim,
                hyperplanes: args.hyperplanes,
                coeff_bound: args.coeff_bound.max(1),
            };
            let corpus = generate(&params)?;
            let mut all_ok = true;
            for (index, arrangement) in corpus.iter().enumerate() {
                match verify_instance(arrangement) {
                    Ok(summary) => println!("instance {index}: ok ({summary})"),
                    Err(reason) => {
                        all_ok = false;
                        println!("instance {index}: FAIL {reason}");
                    }
                }
            }
            Ok(if all_ok { PASS } else { FAIL })
        }
        Command::Semisimplify { com } => {
            let com = read_com(&com)?;
            let reduced = com.semisimplify();
            print!("{}", reduced.com.to_text());
            for (e, image) in reduced.assignment.iter().enumerate() {
                match image {
                    Some(j) => println!("coordinate {e} -> {j}"),
                    None => println!("coordinate {e} dropped (constant)"),
                }
            }
            Ok(PASS)
        }
    }
}

/// Every check the suite composes, on one instance. Returns a summary line
/// or the first failure.
fn verify_instance(arrangement: &Arrangement) -> std::result::Result<String, String> {
    let fail = |msg: String| -> std::result::Result<String, String> { Err(msg) };

    let (com, _) = arrangement
        .enumerate_covectors()
        .map_err(|e| format!("enumeration: {e}"))?;
    let report = com.check();
    if !report.ok() {
        return fail(format!("axioms: {}", report.describe()));
    }

    let face_complex = com.face_poset().order_complex();
    let face_profile = betti(&face_complex);
    let acyclic = face_profile.betti[0] == 1
        && face_profile.betti[1..].iter().all(|&b| b == 0)
        && !face_profile.has_torsion();
    if !acyclic {
        return fail(format!("covector order complex not acyclic: {:?}", face_profile.betti));
    }

    let sal = salvetti_poset(&com).map_err(|e| format!("salvetti: {e}"))?;
    let sal_profile = betti(&sal.order_complex());

    // Reduction invariance: semisimplification preserves Salvetti homology
    // and the face poset up to the recorded bijection.
    let reduced = com.semisimplify();
    let reduced_profile =
        betti(&salvetti_complex(&reduced.com).map_err(|e| format!("salvetti: {e}"))?);
    if sal_profile != reduced_profile {
        return fail("semisimplification changed salvetti homology".to_string());
    }
    let p = com.face_poset();
    let q = reduced.com.face_poset();
    let map: Vec<usize> = p
        .elements()
        .iter()
        .map(|x| {
            let image = reduced.map_covector(x);
            q.elements().iter().position(|y| *y == image).expect("bijection")
        })
        .collect();
    if !comsal::poset::verify_order_iso(&map, &p, &q).map_err(|e| e.to_string())? {
        return fail("semisimplification is not a face-poset isomorphism".to_string());
    }

    // Order convention guard: the opposite poset has the same order complex.
    if sal.order_complex().labeled_simplices()
        != sal.opposite().order_complex().labeled_simplices()
    {
        return fail("opposite salvetti poset changed the order complex".to_string());
    }

    let nerve = verify_nerve(arrangement).map_err(|e| format!("nerve: {e}"))?;
    if !nerve.ok() {
        return fail(format!("nerve: {nerve}"));
    }

    // Classical oracles on the same hyperplanes with the region forgotten.
    let full = arrangement.forget_region();
    let (com_v, _) = full.enumerate_covectors().map_err(|e| format!("enumeration: {e}"))?;
    let poset = intersection_poset(&full).map_err(|e| format!("oracle: {e}"))?;
    let poincare = poset.poincare_polynomial();
    let profile =
        betti(&salvetti_complex(&com_v).map_err(|e| format!("salvetti: {e}"))?);
    if profile.has_torsion() {
        return fail("salvetti homology has torsion".to_string());
    }
    let betti_vec: Vec<i64> =
        profile.betti_padded(poincare.len()).iter().map(|&b| b as i64).collect();
    if betti_vec != poincare || profile.betti.len() > poincare.len() {
        return fail(format!("betti {betti_vec:?} != poincare {poincare:?}"));
    }
    if com_v.topes().len() as i64 != poset.region_count() {
        return fail(format!(
            "tope count {} != chamber count {}",
            com_v.topes().len(),
            poset.region_count()
        ));
    }

    Ok(format!(
        "d={}, |E|={}, |L|={}, |Sal|={}, z={}",
        arrangement.dim(),
        arrangement.ground_size(),
        com.len(),
        sal.len(),
        nerve.z_count
    ))
}
