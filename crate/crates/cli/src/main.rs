use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use swinglat::congruence::{congruence_lattice, prime_congruence};
use swinglat::constructions::{generate_corpus, CorpusEntry, CorpusSpec, ManifestEntry, Tag};
use swinglat::export::to_dot;
use swinglat::projectivity::search::StepGraph;
use swinglat::verify::{render_table, run_suite, verify_lattice, Lemma, Status, Summary, VerificationReport};
use swinglat::{Error, Lattice};

const MANIFEST: &str = "manifest.json";

#[derive(Parser)]
#[command(name = "swinglat")]
#[command(about = "Congruence spreading in finite lattices: swings, switches and their lemma checks")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Generate a corpus of lattice files and a manifest
    Gen {
        /// Output directory
        #[arg(short, long)]
        out: PathBuf,

        /// Grid C_m x C_n as MxN; repeatable. Without it the default corpus is built
        #[arg(long, value_parser = parse_grid)]
        grid: Vec<(usize, usize)>,

        /// Chain length; repeatable (only with --grid)
        #[arg(long)]
        chain: Vec<usize>,

        /// Fork insertions per grid [default: 2 without --grid, 0 with it]
        #[arg(long)]
        forks: Option<usize>,

        /// Eye insertions per SPS member [default: 3 without --grid, 0 with it]
        #[arg(long)]
        eyes: Option<usize>,

        /// Random fork sequences per grid
        #[arg(long, default_value_t = 2)]
        variants: usize,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[arg(long, default_value_t = 40)]
        max_elements: usize,

        #[arg(long, default_value_t = 200)]
        max_lattices: usize,

        /// Append the non-planar and M4 controls (always on without --grid)
        #[arg(long)]
        controls: bool,
    },

    /// Print the congruence generated by a prime interval, or all congruences
    Con {
        file: PathBuf,

        /// Prime interval as lo,hi
        #[arg(long, value_parser = parse_pair, conflicts_with = "all", required_unless_present = "all")]
        prime: Option<(usize, usize)>,

        /// The whole congruence lattice with its join-irreducibles
        #[arg(long)]
        all: bool,
    },

    /// Find a witness sequence between two prime intervals
    Seq {
        file: PathBuf,

        #[arg(long, value_parser = parse_pair)]
        from: (usize, usize),

        #[arg(long, value_parser = parse_pair)]
        to: (usize, usize),

        #[arg(long, value_enum)]
        kind: SeqKind,
    },

    /// Run lemma checks on a manifest or a single lattice file
    Verify {
        /// A manifest written by `gen`, or a lattice file
        path: PathBuf,

        #[arg(long, value_enum, default_value = "all")]
        lemma: LemmaArg,

        /// Also write the reports as JSON
        #[arg(long)]
        report: Option<PathBuf>,
    },

    /// Write a Hasse diagram in DOT format
    Export {
        file: PathBuf,

        #[arg(long)]
        dot: PathBuf,

        /// Color edges by the principal congruence of their prime interval
        #[arg(long)]
        color_by_congruence: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqKind {
    Sps,
    Psc,
    Gsl,
    Pp,
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaArg {
    Swing,
    Gsl,
    Tab,
    Sml,
    Simp,
    CoveringSwing,
    Eye,
    Pp,
    Reduction,
    Strip,
    Soundness,
    All,
}

impl LemmaArg {
    fn lemmas(self) -> Vec<Lemma> {
        let one = match self {
            LemmaArg::All => return Lemma::ALL.to_vec(),
            LemmaArg::Swing => Lemma::Swing,
            LemmaArg::Gsl => Lemma::Gsl,
            LemmaArg::Tab => Lemma::Tab,
            LemmaArg::Sml => Lemma::Sml,
            LemmaArg::Simp => Lemma::Simp,
            LemmaArg::CoveringSwing => Lemma::CoveringSwing,
            LemmaArg::Eye => Lemma::Eye,
            LemmaArg::Pp => Lemma::Pp,
            LemmaArg::Reduction => Lemma::Reduction,
            LemmaArg::Strip => Lemma::Strip,
            LemmaArg::Soundness => Lemma::Soundness,
        };
        vec![one]
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected lo,hi, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected MxN, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (m, n) = (num(a)?, num(b)?);
    if m == 0 || n == 0 {
        return Err(format!("grid sides must be positive, got {m}x{n}"));
    }
    Ok((m, n))
}

/// A failed command and the exit code it maps to.
enum Failure {
    /// Code 2: unreadable or malformed input.
    Usage(String),
    /// Code 3: well-formed input outside a command's hypotheses.
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PreconditionViolated(_)
            | Error::NotAPrimeInterval(_)
            | Error::NotATab(_)
            | Error::NotAFourCell(_)
            | Error::CellMismatch { .. }
            | Error::SizeLimit(_) => Failure::Precondition(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn load_lattice(path: &Path) -> Result<Lattice, Failure> {
    Lattice::from_json(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cmd_gen(spec: &CorpusSpec, out: &Path) -> Result<ExitCode, Failure> {
    let corpus = generate_corpus(spec).map_err(|e| Failure::Usage(e.to_string()))?;
    fs::create_dir_all(out).map_err(|e| io_failure(out, e))?;
    let mut manifest = Vec::with_capacity(corpus.len());
    for entry in &corpus {
        let m = entry.manifest_entry();
        let path = out.join(&m.file);
        write(&path, &format!("{}\n", entry.lattice.to_json()))?;
        // every emitted file must load back to the same lattice
        if load_lattice(&path)? != entry.lattice {
            return Err(Failure::Usage(format!("{} did not round-trip", path.display())));
        }
        manifest.push(m);
    }
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write(&out.join(MANIFEST), &format!("{json}\n"))?;
    println!("wrote {} lattices and {MANIFEST} to {}", corpus.len(), out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_con(l: &Lattice, prime: Option<(usize, usize)>) -> Result<ExitCode, Failure> {
    match prime {
        Some((a, b)) => {
            let p = l.prime(a, b)?;
            println!("{}", prime_congruence(l, p).to_json());
        }
        None => {
            let cl = congruence_lattice(l)?;
            let members: Vec<_> = cl.members.iter().map(|c| c.blocks()).collect();
            let out = json!({
                "congruences": members,
                "join_irreducibles": cl.join_irreducibles,
            });
            println!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_seq(l: &Lattice, from: (usize, usize), to: (usize, usize), kind: SeqKind) -> Result<ExitCode, Failure> {
    let p = l.prime(from.0, from.1)?;
    let q = l.prime(to.0, to.1)?;
    let g = StepGraph::new(l);
    let (s, t) = (g.index(p).expect("prime"), g.index(q).expect("prime"));
    let found = match kind {
        SeqKind::Sps => g.sps_sequence(s, t).map(|w| w.to_json()),
        SeqKind::Psc => g.psc_sequence(s, t).map(|w| w.to_json()),
        SeqKind::Pp => g.pp_sequence(s, t).map(|w| w.to_json()),
        SeqKind::Gsl => g
            .gsl_witness(s, t)
            .map(|w| serde_json::to_string(&w).expect("witness serializes")),
    };
    match found {
        Some(json) => {
            println!("{json}");
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("none");
            Ok(ExitCode::from(1))
        }
    }
}

fn load_manifest(path: &Path) -> Result<Vec<CorpusEntry>, Failure> {
    let entries: Vec<ManifestEntry> =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    entries
        .iter()
        .map(|m| Ok(CorpusEntry::from_manifest(m, load_lattice(&dir.join(&m.file))?)))
        .collect()
}

fn cmd_verify(path: &Path, lemma: LemmaArg, report: Option<&Path>) -> Result<ExitCode, Failure> {
    let text = read(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let lemmas = lemma.lemmas();
    let reports: Vec<VerificationReport> = if value.is_array() {
        run_suite(&load_manifest(path)?, &lemmas)
    } else {
        let l = load_lattice(path)?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("lattice");
        if matches!(lemma, LemmaArg::All) {
            let entry = CorpusEntry {
                name: name.to_string(),
                tag: Tag::classify(&l),
                lattice: l,
                eye: None,
            };
            run_suite(std::slice::from_ref(&entry), &lemmas)
        } else {
            lemmas.iter().flat_map(|&lm| verify_lattice(&l, name, lm)).collect()
        }
    };
    print!("{}", render_table(&reports));
    let s = Summary::of(&reports);
    println!(
        "{} reports: {} passed, {} failed, {} skipped, {} precondition violations; {} witnesses re-validated",
        s.reports, s.passed, s.failed, s.skipped, s.precondition_violated, s.witnesses_checked
    );
    if let Some(out) = report {
        let json = serde_json::to_string_pretty(&reports).expect("reports serialize");
        write(out, &format!("{json}\n"))?;
    }
    let code = if s.failed > 0 {
        1
    } else if reports.iter().any(|r| r.status == Status::PreconditionViolated) {
        3
    } else {
        0
    };
    Ok(ExitCode::from(code))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Commands::Gen {
            out,
            grid,
            chain,
            forks,
            eyes,
            variants,
            seed,
            max_elements,
            max_lattices,
            controls,
        } => {
            let defaults = CorpusSpec::default();
            let explicit = !grid.is_empty();
            let spec = CorpusSpec {
                grids: if explicit { grid } else { defaults.grids },
                chains: if explicit { chain } else { defaults.chains },
                forks: forks.unwrap_or(if explicit { 0 } else { defaults.forks }),
                eyes: eyes.unwrap_or(if explicit { 0 } else { defaults.eyes }),
                variants,
                seed,
                max_elements,
                max_lattices,
                controls: controls || !explicit,
            };
            cmd_gen(&spec, &out)
        }
        Commands::Con { file, prime, all: _ } => cmd_con(&load_lattice(&file)?, prime),
        Commands::Seq { file, from, to, kind } => cmd_seq(&load_lattice(&file)?, from, to, kind),
        Commands::Verify { path, lemma, report } => cmd_verify(&path, lemma, report.as_deref()),
        Commands::Export {
            file,
            dot,
            color_by_congruence,
        } => {
            let l = load_lattice(&file)?;
            write(&dot, &to_dot(&l, color_by_congruence))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
