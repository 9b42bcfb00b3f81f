use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use deltaflip::text::{
    parse_matrix, parse_set_system, parse_subset, parse_word, print_matrix, print_set_system,
    print_subset,
};
use deltaflip::{
    bases_parity_check, bicycle_matroid, bicycle_space, build_r_matrix, column_matroid_bases,
    is_delta_matroid, is_vf_safe, normalize_word, standardize, verify, vf_transport, Automorphism,
    DeltaMatroidCheck, Error, FieldKind, FlipOp, GroundSet, LabeledMatrix, Representation,
    SetSystem, Subspace, VfSafety, DEFAULT_ORBIT_BUDGET,
};

/// Exact pivot, flip and bicycle calculator over GF(2), GF(3) and GF(4).
///
/// Machine-readable results go to stdout (or `--output`), one-line summaries
/// to stderr. Exit status: 0 success or property true, 1 property false,
/// 2 usage or format error, 3 budget exhausted.
#[derive(Parser)]
#[command(name = "deltaflip", version)]
struct Cli {
    /// Write the machine-readable result to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Principal pivot transform A*X of a square matrix.
    Ppt {
        /// Square matrix file.
        matrix: PathBuf,
        /// Pivot labels, comma-separated (`-` for the empty set).
        subset: String,
    },
    /// Apply a word of flips to a set system, left to right.
    Flip {
        /// Set system file.
        system: PathBuf,
        /// Whitespace-separated tokens `*x`, `+x`, `dx`.
        word: String,
    },
    /// Collapse a word to its normal form +Z1 *Z2 +Z3 (with Z1 inside Z2).
    Normalize {
        /// Whitespace-separated tokens `*x`, `+x`, `dx`.
        word: String,
    },
    /// Decide the symmetric exchange axiom, printing any witness triple.
    DmCheck {
        /// Set system file.
        system: PathBuf,
    },
    /// Search the whole flip orbit of a system for a non-delta-matroid.
    Vfsafe {
        /// Set system file.
        system: PathBuf,
        /// Largest number of distinct systems to explore.
        #[arg(long, default_value_t = DEFAULT_ORBIT_BUDGET)]
        budget: usize,
    },
    /// Zero-diagonal matrix R of a full-row-rank matrix's standard form.
    Represent {
        /// Full-row-rank matrix file.
        matrix: PathBuf,
        /// Automorphism applied to the lower block.
        #[arg(long, default_value = "id", value_parser = ["id", "inv"])]
        alpha: String,
    },
    /// Carry a twisted matrix representation along a word of flips.
    Transport {
        /// Square matrix file; GF4 matrices must be inv-symmetric, GF2
        /// matrices symmetric.
        matrix: PathBuf,
        /// Twist labels, comma-separated (`-` for the empty set).
        subset: String,
        /// Whitespace-separated tokens `*x`, `+x`, `dx`.
        word: String,
    },
    /// Bicycle space of ker B and both routes to the bicycle matroid.
    Bicycle {
        /// Full-row-rank GF4 matrix file.
        matrix: PathBuf,
    },
    /// Parity of the basis count against the bicycle dimension.
    Parity {
        /// Full-row-rank GF2 or GF4 matrix file.
        matrix: PathBuf,
    },
    /// Run every property suite with seeded randomness.
    Verify {
        /// Seed for the suite generators.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Machine payload, human summary and exit status of one subcommand.
struct Outcome {
    payload: String,
    summary: String,
    status: u8,
}

type Failure = (u8, String);

fn fail(e: Error) -> Failure {
    let status = match e {
        Error::SingularPivot | Error::ImproperSetSystem => 1,
        Error::EnumerationBudget(..) => 3,
        _ => 2,
    };
    (status, e.to_string())
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| (2, format!("cannot read {}: {e}", path.display())))
}

fn any_matrix(path: &PathBuf) -> Result<LabeledMatrix, Failure> {
    parse_matrix(&read_input(path)?).map_err(fail)
}

fn square_matrix(path: &PathBuf) -> Result<LabeledMatrix, Failure> {
    let m = any_matrix(path)?;
    if !m.is_square() {
        return Err(fail(Error::NotSquare));
    }
    Ok(m)
}

fn set_system(path: &PathBuf) -> Result<SetSystem, Failure> {
    parse_set_system(&read_input(path)?).map_err(fail)
}

fn automorphism(kind: FieldKind, name: &str) -> Result<Automorphism, Failure> {
    match name {
        "id" => Ok(Automorphism::identity(kind)),
        _ => Automorphism::inversion(kind).map_err(fail),
    }
}

fn violation_line(v: &deltaflip::ExchangeViolation) -> String {
    format!(
        "violation X={} Y={} u={}",
        print_subset(&v.x),
        print_subset(&v.y),
        v.u
    )
}

fn run(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Ppt { matrix, subset } => {
            let a = square_matrix(matrix)?;
            let x = parse_subset(a.ground(), subset).map_err(fail)?;
            let pivoted = a.ppt(&x).map_err(fail)?;
            Ok(Outcome {
                payload: print_matrix(&pivoted),
                summary: format!("pivoted on {}", print_subset(&x)),
                status: 0,
            })
        }
        Command::Flip { system, word } => {
            let m = set_system(system)?;
            let word = parse_word(word).map_err(fail)?;
            let flipped = m.apply_word(&word).map_err(fail)?;
            Ok(Outcome {
                payload: print_set_system(&flipped),
                summary: format!(
                    "applied {} flips: {} members -> {}",
                    word.len(),
                    m.family_len(),
                    flipped.family_len()
                ),
                status: 0,
            })
        }
        Command::Normalize { word } => {
            let word = parse_word(word).map_err(fail)?;
            let ground = GroundSet::new(word.labels()).map_err(fail)?;
            let nf = normalize_word(&word, &ground).map_err(fail)?;
            Ok(Outcome {
                payload: format!(
                    "Z1={} Z2={} Z3={}\n",
                    print_subset(nf.z1()),
                    print_subset(nf.z2()),
                    print_subset(nf.z3())
                ),
                summary: format!("collapsed {} steps", word.len()),
                status: 0,
            })
        }
        Command::DmCheck { system } => {
            let m = set_system(system)?;
            Ok(match is_delta_matroid(&m) {
                DeltaMatroidCheck::DeltaMatroid => Outcome {
                    payload: "delta-matroid\n".to_string(),
                    summary: "symmetric exchange holds".to_string(),
                    status: 0,
                },
                DeltaMatroidCheck::Improper => Outcome {
                    payload: "improper\n".to_string(),
                    summary: "the family is empty".to_string(),
                    status: 1,
                },
                DeltaMatroidCheck::Violation(v) => Outcome {
                    payload: format!("{}\n", violation_line(&v)),
                    summary: "symmetric exchange fails".to_string(),
                    status: 1,
                },
            })
        }
        Command::Vfsafe { system, budget } => {
            let m = set_system(system)?;
            Ok(match is_vf_safe(&m, *budget).map_err(fail)? {
                VfSafety::Safe { explored } => Outcome {
                    payload: format!("safe\nexplored={explored}\n"),
                    summary: format!("all {explored} reachable systems are delta-matroids"),
                    status: 0,
                },
                VfSafety::Unsafe { witness, violation } => Outcome {
                    payload: format!(
                        "unsafe\nwitness={witness}\n{}\n",
                        violation_line(&violation)
                    ),
                    summary: format!(
                        "replaying {} flips breaks symmetric exchange",
                        witness.len()
                    ),
                    status: 1,
                },
                VfSafety::Exhausted { explored } => Outcome {
                    payload: format!("exhausted\nexplored={explored}\n"),
                    summary: format!("no violation among the first {explored} systems"),
                    status: 3,
                },
            })
        }
        Command::Represent { matrix, alpha } => {
            let b = any_matrix(matrix)?;
            let alpha = automorphism(b.kind(), alpha)?;
            let standard = standardize(&b).map_err(fail)?;
            let r = build_r_matrix(&standard, alpha).map_err(fail)?;
            Ok(Outcome {
                payload: format!(
                    "{}twist={}\n",
                    print_matrix(&r),
                    print_subset(standard.basis())
                ),
                summary: format!(
                    "pivot basis {}; twist the minor system by it to recover the matroid",
                    print_subset(standard.basis())
                ),
                status: 0,
            })
        }
        Command::Transport {
            matrix,
            subset,
            word,
        } => {
            let a = square_matrix(matrix)?;
            let x = parse_subset(a.ground(), subset).map_err(fail)?;
            let alpha = Automorphism::inverting(a.kind());
            let rep = Representation::new(a, alpha, x).map_err(fail)?;
            let word = parse_word(word).map_err(fail)?;
            let carried = vf_transport(&rep, &word).map_err(fail)?;
            Ok(Outcome {
                payload: format!(
                    "{}twist={}\n",
                    print_matrix(carried.matrix()),
                    print_subset(carried.twist())
                ),
                summary: format!("new twist W={}", print_subset(carried.twist())),
                status: 0,
            })
        }
        Command::Bicycle { matrix } => {
            let b = any_matrix(matrix)?;
            let supports = bicycle_matroid(&b).map_err(fail)?;
            let space = bicycle_space(&Subspace::kernel(&b));
            let bases = column_matroid_bases(&b);
            let everything = bases.ground().full_subset();
            let complemented = bases
                .apply_bulk(FlipOp::LoopComplement, &everything)
                .max_sets();
            let equal = supports == complemented;
            let mut payload = print_matrix(&space.basis_matrix());
            payload.push_str(&format!("bd={}\n", space.dim()));
            payload.push_str(&print_set_system(&supports));
            payload.push_str(&print_set_system(&complemented));
            payload.push_str(if equal { "EQUAL\n" } else { "UNEQUAL\n" });
            Ok(Outcome {
                payload,
                summary: format!(
                    "bicycle dimension {}; minimal supports {} the loop-complemented maxima",
                    space.dim(),
                    if equal { "match" } else { "MISMATCH" }
                ),
                status: u8::from(!equal),
            })
        }
        Command::Parity { matrix } => {
            let b = any_matrix(matrix)?;
            let report = bases_parity_check(&b).map_err(fail)?;
            Ok(Outcome {
                payload: format!("{report}\n"),
                summary: String::new(),
                status: u8::from(!report.consistent()),
            })
        }
        Command::Verify { seed } => {
            let reports = verify::run_all(*seed);
            let mut payload = String::new();
            let mut passed = 0usize;
            for report in &reports {
                payload.push_str(&format!("{report}\n"));
                passed += usize::from(report.passed());
            }
            let total = reports.len();
            Ok(Outcome {
                payload,
                summary: format!("{passed}/{total} suites passed (seed {seed})"),
                status: u8::from(passed != total),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(outcome) => outcome,
        Err((status, message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(status);
        }
    };
    if let Some(path) = &cli.output {
        if let Err(e) = fs::write(path, &outcome.payload) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{}", outcome.payload);
    }
    if !outcome.summary.is_empty() {
        eprintln!("{}", outcome.summary);
    }
    ExitCode::from(outcome.status)
}
