//! The `tlat` command-line front end.
//!
//! Exit statuses: 0 success, 1 a verification suite failed, 2 usage error,
//! 3 invalid input.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bits::IndexSet;
use crate::constructions::{
    build_maximal_presentation, build_uniform_presentation, ideals_of_poset,
    validate_input_lattice,
};
use crate::error::Error;
use crate::extlattice::{
    extend, intersection_lattice, lattice_la, lattice_ta, sigma, SubsetLattice,
};
use crate::io;
use crate::presentations::{
    is_maximal, is_minimal, maximalize, minimal_presentations_below, presentation_rank,
};
use crate::system::SetSystem;
use crate::verify::{self, VerdictReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "tlat",
    version,
    about = "Lattices of single-element extensions of transversal matroid presentations",
    after_help = "File arguments may be `-` for standard input."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The lattice L_A of closed index sets of a presentation
    Lattice {
        file: String,
        /// Print a DOT Hasse diagram instead of JSON
        #[arg(long)]
        dot: bool,
    },
    /// The closure σ_A(I) of an index set
    Sigma {
        file: String,
        /// Comma-separated 1-based indices, e.g. `1,3`
        #[arg(long, value_parser = parse_index_list)]
        set: IndexList,
    },
    /// The presentation A^I of the extension adding `x` to the sets in I
    Extend {
        file: String,
        #[arg(long, value_parser = parse_index_list)]
        set: IndexList,
    },
    /// The unique maximal presentation above a presentation
    Maximalize { file: String },
    /// The minimal presentations below a presentation
    Minimal {
        file: String,
        /// Comma-separated labels whose supports must be kept
        #[arg(long)]
        keep: Option<String>,
    },
    /// Matroid rank, rank in the order on presentations, and extremality
    Rank { file: String },
    /// The support of each element
    Supports { file: String },
    /// The extensions M[A^I] for I in L_A, as basis families
    TLattice {
        file: String,
        #[arg(long)]
        dot: bool,
    },
    /// The extensions common to two presentations of one matroid
    Intersect {
        left: String,
        right: String,
        #[arg(long)]
        dot: bool,
    },
    /// Join- and meet-irreducibles of a lattice file, or of L_A for a
    /// presentation file
    Irreducibles { file: String },
    /// A maximal presentation realising a lattice
    ConstructMaximal { file: String },
    /// A presentation of U_{r,n} realising a lattice
    ConstructUniform {
        file: String,
        #[arg(long)]
        n: usize,
    },
    /// The lattice of order ideals of a poset
    Ideals {
        file: String,
        #[arg(long)]
        dot: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        r: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the reports as JSON
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Charmin,
    Threequarters,
    Intersection,
    Classification,
    Roundtrip,
    All,
}

/// The value of `--set`: 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IndexList(Vec<usize>);

fn parse_index_list(text: &str) -> Result<IndexList, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("`{s}` is not a positive index")),
            Ok(k) => Ok(k),
        })
        .collect::<Result<_, _>>()
        .map(IndexList)
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Context<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Context<'_> {
    fn read(&mut self, path: &str) -> std::result::Result<String, Failure> {
        let mut text = String::new();
        let result = if path == "-" {
            self.stdin.read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        result.map_err(|e| Failure::Input(format!("{path}: {e}")))?;
        Ok(text)
    }

    fn presentation(&mut self, path: &str) -> std::result::Result<SetSystem, Failure> {
        let text = self.read(path)?;
        io::parse_presentation(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }

    fn lattice(&mut self, path: &str) -> std::result::Result<SubsetLattice, Failure> {
        let text = self.read(path)?;
        let family = io::parse_lattice(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
        SubsetLattice::new(family.r, family.sets).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }

    fn emit(&mut self, text: &str) -> Outcome {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("writing output: {e}")))?;
        Ok(EXIT_OK)
    }
}

fn index_set(IndexList(indices): &IndexList, r: usize) -> std::result::Result<IndexSet, Failure> {
    if let Some(&bad) = indices.iter().find(|&&k| k > r) {
        return Err(Error::IndexOutOfRange { index: bad, r }.into());
    }
    Ok(IndexSet::from_one_based(indices.iter().copied()))
}

fn pretty(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

fn one_based(sets: &[IndexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_one_based()).collect()
}

#[derive(Serialize)]
struct SigmaDoc {
    set: Vec<usize>,
    closure: Vec<usize>,
}

#[derive(Serialize)]
struct RankDoc {
    rank: usize,
    presentation_rank: usize,
    minimal: bool,
    maximal: bool,
}

#[derive(Serialize)]
struct SupportDoc<'a> {
    element: &'a str,
    support: Vec<usize>,
}

#[derive(Serialize)]
struct ExtensionDoc {
    set: Vec<usize>,
    ground: Vec<String>,
    bases: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct TLatticeDoc {
    r: usize,
    extensions: Vec<ExtensionDoc>,
}

#[derive(Serialize)]
struct IntersectDoc {
    r: usize,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    pairs: Vec<[Vec<usize>; 2]>,
}

#[derive(Serialize)]
struct IrreduciblesDoc {
    r: usize,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
}

fn check_suite_r(suite: Suite, r: usize) -> std::result::Result<(), Failure> {
    let (lo, hi) = match suite {
        Suite::Charmin => (1, 4),
        Suite::Threequarters => (1, verify::MAX_BOUND_R),
        Suite::Intersection | Suite::All => (2, verify::MAX_BOUND_R),
        Suite::Classification => (1, verify::MAX_CENSUS_R),
        Suite::Roundtrip => (1, 6),
    };
    if r < lo || r > hi {
        return Err(Failure::Usage(format!("--r must lie in {lo}..={hi} for this suite, got {r}")));
    }
    Ok(())
}

fn run_verify(ctx: &mut Context<'_>, suite: Suite, r: usize, trials: usize, seed: u64, json: bool) -> Outcome {
    check_suite_r(suite, r)?;
    let reports: Vec<VerdictReport> = match suite {
        Suite::Charmin => vec![verify::check_charmin(r, trials, seed)],
        Suite::Threequarters => vec![verify::check_threequarters(r, trials, seed)],
        Suite::Intersection => vec![verify::check_intersection_bound(r, trials, seed)],
        Suite::Classification => vec![verify::check_classification(r)],
        Suite::Roundtrip => vec![verify::check_roundtrip(r, trials, seed)],
        Suite::All => verify::run_all(r, trials, seed),
    };
    for report in &reports {
        let _ = writeln!(ctx.err, "{}: {:.2?}", report.suite, report.elapsed);
    }
    let text = if json {
        if reports.len() == 1 {
            reports[0].to_json()
        } else {
            pretty(&reports)
        }
    } else {
        reports.iter().map(VerdictReport::to_text).collect()
    };
    ctx.emit(&text)?;
    Ok(if reports.iter().all(VerdictReport::passed) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn run(ctx: &mut Context<'_>, command: Command) -> Outcome {
    match command {
        Command::Lattice { file, dot } => {
            let l = lattice_la(&ctx.presentation(&file)?)?;
            ctx.emit(&if dot { l.to_dot() } else { l.to_json() })
        }
        Command::Sigma { file, set } => {
            let a = ctx.presentation(&file)?;
            let i = index_set(&set, a.len())?;
            let doc = SigmaDoc {
                set: i.to_one_based(),
                closure: sigma(&a, i).to_one_based(),
            };
            ctx.emit(&pretty(&doc))
        }
        Command::Extend { file, set } => {
            let a = ctx.presentation(&file)?;
            let i = index_set(&set, a.len())?;
            ctx.emit(&io::presentation_to_json(&extend(&a, i)?))
        }
        Command::Maximalize { file } => {
            let a = ctx.presentation(&file)?;
            presentation_rank(&a)?;
            ctx.emit(&io::presentation_to_json(&maximalize(&a)))
        }
        Command::Minimal { file, keep } => {
            let a = ctx.presentation(&file)?;
            let keep = match keep {
                Some(list) => a.ground().set_of(list.split(',').map(str::trim).filter(|s| !s.is_empty()))?,
                None => crate::bits::ElemSet::EMPTY,
            };
            let docs: Vec<serde_json::Value> = minimal_presentations_below(&a, keep)?
                .iter()
                .map(|c| serde_json::from_str(&io::presentation_to_json(c)).expect("own output parses"))
                .collect();
            ctx.emit(&pretty(&docs))
        }
        Command::Rank { file } => {
            let a = ctx.presentation(&file)?;
            let doc = RankDoc {
                rank: crate::matching::rank(&a, a.ground().full()),
                presentation_rank: presentation_rank(&a)?,
                minimal: is_minimal(&a)?,
                maximal: is_maximal(&a),
            };
            ctx.emit(&pretty(&doc))
        }
        Command::Supports { file } => {
            let a = ctx.presentation(&file)?;
            let supports = a.element_supports();
            let docs: Vec<SupportDoc<'_>> = a
                .ground()
                .names()
                .iter()
                .zip(&supports)
                .map(|(name, s)| SupportDoc {
                    element: name,
                    support: s.to_one_based(),
                })
                .collect();
            let text = pretty(&docs);
            ctx.emit(&text)
        }
        Command::TLattice { file, dot } => {
            let a = ctx.presentation(&file)?;
            if dot {
                return ctx.emit(&lattice_la(&a)?.to_dot());
            }
            let extensions = lattice_ta(&a)?
                .into_iter()
                .map(|rec| {
                    let g = rec.extension.ground();
                    ExtensionDoc {
                        set: rec.set.to_one_based(),
                        ground: g.names().to_vec(),
                        bases: rec
                            .extension
                            .bases()
                            .iter()
                            .map(|&b| g.labels_of(b).into_iter().map(String::from).collect())
                            .collect(),
                    }
                })
                .collect();
            ctx.emit(&pretty(&TLatticeDoc { r: a.len(), extensions }))
        }
        Command::Intersect { left, right, dot } => {
            let a = ctx.presentation(&left)?;
            let b = ctx.presentation(&right)?;
            let both = intersection_lattice(&a, &b)?;
            if dot {
                return ctx.emit(&both.left.to_dot());
            }
            let doc = IntersectDoc {
                r: a.len(),
                left: one_based(both.left.members()),
                right: one_based(both.right.members()),
                pairs: both.pairs.iter().map(|(i, j)| [i.to_one_based(), j.to_one_based()]).collect(),
            };
            ctx.emit(&pretty(&doc))
        }
        Command::Irreducibles { file } => {
            let text = ctx.read(&file)?;
            let l = match io::parse_lattice(&text) {
                Ok(family) => SubsetLattice::new(family.r, family.sets)?,
                Err(_) => lattice_la(
                    &io::parse_presentation(&text)
                        .map_err(|e| Failure::Input(format!("{file}: neither a lattice nor a presentation: {e}")))?,
                )?,
            };
            let irr = l.irreducibles();
            let doc = IrreduciblesDoc {
                r: l.r(),
                join: one_based(&irr.join),
                meet: one_based(&irr.meet),
            };
            ctx.emit(&pretty(&doc))
        }
        Command::ConstructMaximal { file } => {
            let l = ctx.lattice(&file)?;
            let input = validate_input_lattice(l.r(), l.members().iter().copied())?;
            ctx.emit(&io::presentation_to_json(&build_maximal_presentation(&input)?))
        }
        Command::ConstructUniform { file, n } => {
            let l = ctx.lattice(&file)?;
            let input = validate_input_lattice(l.r(), l.members().iter().copied())?;
            ctx.emit(&io::presentation_to_json(&build_uniform_presentation(&input, n)?))
        }
        Command::Ideals { file, dot } => {
            let text = ctx.read(&file)?;
            let poset = io::parse_poset(&text).map_err(|e| Failure::Input(format!("{file}: {e}")))?;
            let l = ideals_of_poset(&poset)?.into_lattice();
            ctx.emit(&if dot { l.to_dot() } else { l.to_json() })
        }
        Command::Verify {
            suite,
            r,
            trials,
            seed,
            json,
        } => run_verify(ctx, suite, r, trials, seed, json),
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn dispatch<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let mut ctx = Context { stdin, out, err };
    match run(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(ctx.err, "tlat: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(ctx.err, "tlat: {msg}");
            EXIT_INVALID_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tlat").chain(args.iter().copied());
        let code = dispatch(argv, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const FIG1_LOWER: &str =
        r#"{"ground":["a","b","c","d","e","f","g","h","i"],"sets":[["a","b","c"],["a","b","c","d","e","f"],["d","e","f","g","h","i"],["g","h","i"]]}"#;

    #[test]
    fn index_lists() {
        assert_eq!(parse_index_list("1, 3").unwrap(), IndexList(vec![1, 3]));
        assert_eq!(parse_index_list("").unwrap(), IndexList(vec![]));
        assert!(parse_index_list("0").is_err());
        assert!(parse_index_list("x").is_err());
    }

    #[test]
    fn lattice_from_stdin() {
        let (code, out, _) = call(&["lattice", "-"], FIG1_LOWER);
        assert_eq!(code, 0);
        let family = io::parse_lattice(&out).unwrap();
        assert_eq!(family.sets.len(), 9);
    }

    #[test]
    fn sigma_and_range_errors() {
        let (code, out, _) = call(&["sigma", "-", "--set", "1"], FIG1_LOWER);
        assert_eq!(code, 0);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["set"], serde_json::json!([1]));
        let (code, _, err) = call(&["sigma", "-", "--set", "5"], FIG1_LOWER);
        assert_eq!(code, EXIT_INVALID_INPUT);
        assert!(err.contains("outside"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[], "").0, EXIT_USAGE);
        assert_eq!(call(&["lattice"], "").0, EXIT_USAGE);
        assert_eq!(call(&["sigma", "-", "--set", "a"], FIG1_LOWER).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "classification", "--r", "5"], "").0, EXIT_USAGE);
        let (code, out, _) = call(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("construct-uniform"));
    }

    #[test]
    fn invalid_input() {
        assert_eq!(call(&["lattice", "-"], "{").0, EXIT_INVALID_INPUT);
        assert_eq!(call(&["lattice", "/nonexistent/file.json"], "").0, EXIT_INVALID_INPUT);
        let deficient = r#"{"ground":["a"],"sets":[["a"],["a"]]}"#;
        assert_eq!(call(&["lattice", "-"], deficient).0, EXIT_INVALID_INPUT);
    }

    #[test]
    fn verify_exit_status() {
        let (code, out, err) = call(&["verify", "classification", "--r", "3"], "");
        assert_eq!(code, 0);
        assert!(out.starts_with("classification: PASS"));
        assert!(err.starts_with("classification: "));
    }
}
