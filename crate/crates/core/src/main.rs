//! Command-line front end for the `lpres` library.
//!
//! Exit codes: 0 success (or verification passed), 1 verification failure,
//! 2 malformed input, 3 precondition violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lpres::oracles::abelian::AbelianOracle;
use lpres::oracles::{dyadic, grig};
use lpres::presfmt::{
    parse_certs, parse_document, parse_lpres, parse_map, parse_presentation, print_derived,
    print_document, print_expansion, print_presentation,
};
use lpres::{
    derive_lpres, expand, fixtures, freegroup, hnn_embed, verify_lpres, DedupMode, Error,
    Generator,
};

#[derive(Parser)]
#[command(
    name = "lpres",
    version,
    about = "Work with finite endomorphic presentations of groups",
    long_about = "Parse, expand, derive, and verify finite endomorphic \
presentations (L-presentations) of groups.\n\nExit codes: 0 success, \
1 verification failure, 2 malformed input, 3 precondition violation."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    /// Drop words equal as free-group elements.
    Exact,
    /// Also drop cyclic rotations of kept words and of their inverses.
    Cyclic,
}

impl From<DedupArg> for DedupMode {
    fn from(d: DedupArg) -> DedupMode {
        match d {
            DedupArg::Exact => DedupMode::Exact,
            DedupArg::Cyclic => DedupMode::Cyclic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    /// Word problem of the Grigorchuk group via its binary-tree action.
    Grigorchuk,
    /// Exact affine maps over dyadic rationals for the commuting
    /// Baumslag-Solitar pair on generators a, b, t, u.
    Dyadic,
    /// Necessary condition only: exponent vectors against the saturated
    /// relator lattice of the presentation itself.
    Abelian,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    /// Free abelian group of rank two; the smallest derivation input.
    Z2,
    /// The Grigorchuk group's endomorphic presentation.
    Lysenok,
    /// Two commuting Baumslag-Solitar groups and a hand-written kernel
    /// presentation to compare against.
    Remark3,
}

impl DemoName {
    fn as_str(self) -> &'static str {
        match self {
            DemoName::Z2 => "z2",
            DemoName::Lysenok => "lysenok",
            DemoName::Remark3 => "remark3",
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a document and reprint it in canonical form.
    Parse { file: PathBuf },

    /// List the relators of an L-presentation up to a composition depth.
    Expand {
        file: PathBuf,
        /// Longest endomorphism composition to apply to the seeds.
        #[arg(long)]
        depth: usize,
        /// How to discard duplicate relators.
        #[arg(long, value_enum, default_value = "exact")]
        dedup: DedupArg,
        /// Write the expansion here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Derive an ascending L-presentation for the kernel of the degree map.
    Derive {
        /// A `[group]` file with a degree map.
        file: PathBuf,
        /// The generator of degree 1 (or -1) to rewrite along.
        #[arg(long)]
        t: String,
        /// A `[certs]` file bounding conjugation to a generator window.
        #[arg(long)]
        certs: Option<PathBuf>,
        /// Insist on this window bound (must match the certificate file).
        #[arg(long = "N")]
        n: Option<i64>,
        /// Write the L-presentation here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Expand an L-presentation and check every relator against an oracle.
    Verify {
        file: PathBuf,
        /// Longest endomorphism composition to apply to the seeds.
        #[arg(long)]
        depth: usize,
        /// Ground-truth engine to evaluate relators with.
        #[arg(long, value_enum)]
        oracle: OracleArg,
        /// A `[map]` file translating relators into the oracle's alphabet
        /// before evaluation.
        #[arg(long)]
        pullback: Option<PathBuf>,
        /// Evaluate relators on this many threads (default sequential).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },

    /// Embed an ascending L-presentation into a finitely presented group,
    /// one stable letter per endomorphism.
    Hnn {
        file: PathBuf,
        /// Write the `[group]` file here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Write a named example's input files into the working directory and
    /// print a suggested command sequence.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Print to standard output, or write to `out` when given.
fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Parse { file } => {
            let doc = parse_document(&read(&file)?)?;
            print!("{}", print_document(&doc));
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Expand {
            file,
            depth,
            dedup,
            out,
        } => {
            let lp = parse_lpres(&read(&file)?)?;
            let report = expand(&lp, depth, dedup.into());
            emit(out.as_deref(), &print_expansion(&report))?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Derive {
            file,
            t,
            certs,
            n,
            out,
        } => {
            let p = parse_presentation(&read(&file)?)?;
            let certs_path = certs.ok_or(Error::CertsRequired)?;
            let certs = parse_certs(&read(&certs_path)?)?;
            if !freegroup::is_valid_name(&t) {
                return Err(Error::UnknownGenerator(t));
            }
            let derived = derive_lpres(&p, &Generator::plain(t), &certs, n)?;
            emit(out.as_deref(), &print_derived(&derived))?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Verify {
            file,
            depth,
            oracle,
            pullback,
            jobs,
        } => {
            let lp = parse_lpres(&read(&file)?)?;
            let map = match &pullback {
                Some(path) => Some(parse_map(&read(path)?)?),
                None => None,
            };
            let report = match oracle {
                OracleArg::Grigorchuk => {
                    verify_lpres(&lp, depth, grig::check, map.as_ref(), jobs)?
                }
                OracleArg::Dyadic => {
                    let images = dyadic::bs12sq_images();
                    verify_lpres(&lp, depth, |w| dyadic::check(w, &images), map.as_ref(), jobs)?
                }
                OracleArg::Abelian => {
                    if map.is_some() {
                        return Err(Error::PullbackUnsupported("abelian".into()));
                    }
                    let oracle = AbelianOracle::for_presentation(&lp)?;
                    verify_lpres(&lp, depth, |w| oracle.check(w), None, jobs)?
                }
            };
            print!("{}", report.render());
            Ok(if report.verified() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Cmd::Hnn { file, out } => {
            let lp = parse_lpres(&read(&file)?)?;
            let p = hnn_embed(&lp)?;
            emit(out.as_deref(), &print_presentation(&p))?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Demo { name } => {
            let files = fixtures::demo_files(name.as_str())
                .expect("every DemoName value has fixture files");
            for (file, content) in &files {
                fs::write(file, content).map_err(|source| Error::Io {
                    path: (*file).to_string(),
                    source,
                })?;
                println!("wrote {file}");
            }
            println!();
            println!("try:");
            for line in suggested_commands(name) {
                println!("  {line}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn suggested_commands(name: DemoName) -> Vec<&'static str> {
    match name {
        DemoName::Z2 => vec![
            "lpres derive z2.pres --t t --certs z2.certs --out z2-derived.lpres",
            "lpres expand z2-derived.lpres --depth 2",
        ],
        DemoName::Lysenok => vec![
            "lpres expand lysenok.lpres --depth 3",
            "lpres verify lysenok.lpres --oracle grigorchuk --depth 6",
        ],
        DemoName::Remark3 => vec![
            "lpres derive remark3.pres --t t --certs remark3.certs --out remark3-derived.lpres",
            "lpres verify remark3-derived.lpres --oracle dyadic --pullback remark3.map --depth 5",
            "lpres verify remark3.lpres --oracle dyadic --pullback remark3-hand.map --depth 8",
            "lpres hnn remark3.lpres",
        ],
    }
}
