//! Command-line front end: define or load rings and groups, query single
//! properties, run the theorem suites, and emit group rings as ring files.
//!
//! Exit codes are the machine contract: 0 means the property holds or every
//! agreement check passed, 1 means a property failed or some agreement
//! broke, 2 means an error (unknown selector, parse failure, cap exceeded).

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use finring::corpus::{
    builtin_group, builtin_group_labels, builtin_ring, builtin_ring_labels,
    default_corpus_ring_labels, Corpus, RingCorpus, DEFAULT_SEED,
};
use finring::error::{Caps, Error};
use finring::group::FiniteGroup;
use finring::group_ring::group_ring;
use finring::harness::{
    run_corpus, theorem_ids, RunConfig, TheoremReport,
};
use finring::module::Side;
use finring::properties::{
    annihilator_conditions, cf_ring, fp_cogenerator, if_ring, kasch, qf, regular, self_injective,
    semiregular, semisimple, socle_essential, wqf, PropertyVerdict,
};
use finring::report::{render_json, render_table};
use finring::ring::FiniteRing;
use finring::textio::{parse_group, parse_ring, serialize_ring};

#[derive(Parser)]
#[command(
    name = "finring",
    about = "Exact computational algebra over finite rings: property checks and theorem verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct CapsArgs {
    /// Largest ring size any construction may produce.
    #[arg(long, default_value_t = 256, env = "FINRING_MAX_RING")]
    max_ring: usize,
    /// Largest realized module size / enumeration budget.
    #[arg(long, default_value_t = 4096, env = "FINRING_MAX_MODULE")]
    max_module: usize,
    /// Free-module rank bound for embedding searches.
    #[arg(long, default_value_t = 3, env = "FINRING_KMAX")]
    kmax: usize,
}

impl CapsArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_ring: self.max_ring,
            max_module: self.max_module,
            kmax: self.kmax,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List built-in rings, groups, properties and theorem ids.
    List {
        /// Only show entries containing this substring.
        filter: Option<String>,
    },
    /// Check a single ring property; exit 0 when it holds, 1 when it fails.
    Check {
        /// Property id (see `finring list`).
        property: String,
        /// Built-in ring label or path to a ring file.
        ring: String,
        #[arg(long, value_enum, default_value_t = Format::Table, env = "FINRING_FORMAT")]
        format: Format,
        /// Seed for the module-corpus generation of corpus-bounded checks.
        #[arg(long, default_value_t = DEFAULT_SEED, env = "FINRING_SEED")]
        seed: u64,
        #[command(flatten)]
        caps: CapsArgs,
    },
    /// Run a theorem suite; exit 0 iff every agreement holds.
    Verify {
        /// Theorem id or `all`.
        theorem: String,
        /// Use the default built-in corpus.
        #[arg(long, conflicts_with_all = ["ring", "group"])]
        corpus: Option<String>,
        /// Restrict to a single ring (built-in label or file path).
        #[arg(long)]
        ring: Option<String>,
        /// Group selector for the group-ring theorems.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table, env = "FINRING_FORMAT")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_SEED, env = "FINRING_SEED")]
        seed: u64,
        /// Worker threads for independent (ring, theorem) tasks.
        #[arg(long, default_value_t = 1, env = "FINRING_JOBS")]
        jobs: usize,
        #[command(flatten)]
        caps: CapsArgs,
    },
    /// Construct a group ring and write it in the ring file format.
    Groupring {
        /// Base ring (built-in label or file path).
        ring: String,
        /// Group (built-in label or file path).
        group: String,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        caps: CapsArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::List { filter } => {
            cmd_list(filter.as_deref());
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            property,
            ring,
            format,
            seed,
            caps,
        } => cmd_check(&property, &ring, format, seed, &caps.caps()),
        Command::Verify {
            theorem,
            corpus,
            ring,
            group,
            format,
            seed,
            jobs,
            caps,
        } => cmd_verify(
            &theorem,
            corpus.as_deref(),
            ring.as_deref(),
            group.as_deref(),
            format,
            seed,
            jobs,
            &caps.caps(),
        ),
        Command::Groupring {
            ring,
            group,
            out,
            caps,
        } => cmd_groupring(&ring, &group, &out, &caps.caps()),
    }
}


/// Writes to stdout, ignoring broken pipes (e.g. when piped into `head`).
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

const PROPERTY_IDS: &[&str] = &[
    "annihilator-a",
    "annihilator-b",
    "cf-left",
    "cf-right",
    "fp-cogenerator-left",
    "fp-cogenerator-right",
    "if-left",
    "if-right",
    "kasch-left",
    "kasch-right",
    "qf",
    "regular",
    "self-injective-left",
    "self-injective-right",
    "semiregular",
    "semisimple",
    "socle-essential-left",
    "socle-essential-right",
    "wqf",
];

fn cmd_list(filter: Option<&str>) {
    let keep = |s: &str| filter.map_or(true, |f| s.contains(f));
    let mut out = String::new();
    out.push_str("rings:\n");
    for l in builtin_ring_labels() {
        if keep(l) {
            out.push_str(&format!("  {l}\n"));
        }
    }
    out.push_str("groups:\n");
    for l in builtin_group_labels() {
        if keep(l) {
            out.push_str(&format!("  {l}\n"));
        }
    }
    out.push_str("properties:\n");
    for l in PROPERTY_IDS {
        if keep(l) {
            out.push_str(&format!("  {l}\n"));
        }
    }
    out.push_str("theorems:\n");
    for l in theorem_ids() {
        if keep(l) {
            out.push_str(&format!("  {l}\n"));
        }
    }
    out.push_str("corpora:\n");
    if keep("default") {
        out.push_str(&format!(
            "  default ({} rings: {})\n",
            default_corpus_ring_labels().len(),
            default_corpus_ring_labels().join(", ")
        ));
    }
    emit(&out);
}

fn resolve_ring(selector: &str, caps: &Caps) -> Result<Arc<FiniteRing>, Error> {
    if let Some(ring) = builtin_ring(selector, caps)? {
        return Ok(ring);
    }
    let path = Path::new(selector);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("cannot read {}: {e}", path.display()),
        })?;
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| selector.to_string());
        let ring = parse_ring(&text, label)?;
        if ring.size() > caps.max_ring {
            return Err(Error::SizeOverflow {
                what: "ring file",
                needed: ring.size() as u128,
                cap: caps.max_ring,
            });
        }
        return Ok(Arc::new(ring));
    }
    Err(Error::Parse {
        line: 0,
        msg: format!("unknown ring `{selector}` (not a built-in label or readable file)"),
    })
}

fn resolve_group(selector: &str) -> Result<Arc<FiniteGroup>, Error> {
    if let Some(group) = builtin_group(selector) {
        return Ok(group);
    }
    let path = Path::new(selector);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("cannot read {}: {e}", path.display()),
        })?;
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| selector.to_string());
        return Ok(Arc::new(parse_group(&text, label)?));
    }
    Err(Error::Parse {
        line: 0,
        msg: format!("unknown group `{selector}` (not a built-in label or readable file)"),
    })
}

fn verdict_json(v: &PropertyVerdict, ring: &str) -> String {
    let witness = match &v.witness {
        Some(w) => format!("\"{}\"", w.replace('\\', "\\\\").replace('"', "\\\"")),
        None => "null".to_string(),
    };
    format!(
        "{{\"corpus_bounded\": {}, \"property\": \"{}\", \"ring\": \"{}\", \"side\": \"{}\", \"value\": {}, \"witness\": {}}}\n",
        v.corpus_bounded, v.property, ring, v.side, v.value, witness
    )
}

fn cmd_check(
    property: &str,
    ring_sel: &str,
    format: Format,
    seed: u64,
    caps: &Caps,
) -> Result<ExitCode, Error> {
    let ring = resolve_ring(ring_sel, caps)?;
    let verdict = match property {
        "self-injective-left" => self_injective(&ring, Side::Left, caps)?,
        "self-injective-right" => self_injective(&ring, Side::Right, caps)?,
        "kasch-left" => kasch(&ring, Side::Left, caps)?,
        "kasch-right" => kasch(&ring, Side::Right, caps)?,
        "semisimple" => semisimple(&ring),
        "regular" => regular(&ring),
        "semiregular" => semiregular(&ring),
        "annihilator-a" => annihilator_conditions(&ring, caps)?.0,
        "annihilator-b" => annihilator_conditions(&ring, caps)?.1,
        "cf-left" => cf_ring(&ring, Side::Left, caps.kmax, caps)?,
        "cf-right" => cf_ring(&ring, Side::Right, caps.kmax, caps)?,
        "if-left" | "if-right" => {
            let side = if property == "if-left" {
                Side::Left
            } else {
                Side::Right
            };
            let rc = RingCorpus::build(&ring, caps, seed)?;
            if_ring(&ring, side, &rc.side(side).modules, caps.kmax, caps)?
        }
        "fp-cogenerator-left" | "fp-cogenerator-right" => {
            let side = if property == "fp-cogenerator-left" {
                Side::Left
            } else {
                Side::Right
            };
            let rc = RingCorpus::build(&ring, caps, seed)?;
            let reg = Arc::new(finring::module::regular_module(&ring, side, caps)?);
            let verdicts = fp_cogenerator(&reg, &rc.side(side).modules, caps)?;
            let agree = verdicts.all_agree();
            let mut v = verdicts.kernels_trivial;
            if !agree {
                v.witness = Some("cogenerator conditions disagree (library bug)".into());
            }
            v.property = "fp-cogenerator";
            v
        }
        "qf" => qf(&ring, caps)?,
        "wqf" => wqf(&ring, caps)?,
        "socle-essential-left" => socle_essential(&ring, Side::Left, caps)?,
        "socle-essential-right" => socle_essential(&ring, Side::Right, caps)?,
        other => {
            return Err(Error::Parse {
                line: 0,
                msg: format!("unknown property `{other}` (see `finring list`)"),
            })
        }
    };
    match format {
        Format::Table => emit(&format!("{}: {}\n", ring.label(), verdict)),
        Format::Json => emit(&verdict_json(&verdict, ring.label())),
    }
    Ok(if verdict.value {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    theorem: &str,
    corpus_sel: Option<&str>,
    ring_sel: Option<&str>,
    group_sel: Option<&str>,
    format: Format,
    seed: u64,
    jobs: usize,
    caps: &Caps,
) -> Result<ExitCode, Error> {
    if theorem != "all" && !theorem_ids().contains(&theorem) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("unknown theorem `{theorem}` (see `finring list`)"),
        });
    }
    if let Some(name) = corpus_sel {
        if name != "default" {
            return Err(Error::Parse {
                line: 0,
                msg: format!("unknown corpus `{name}` (only `default` is built in)"),
            });
        }
    }
    let corpus = match ring_sel {
        Some(sel) => {
            let ring = resolve_ring(sel, caps)?;
            let mut corpus = Corpus::for_ring(ring, caps, seed)?;
            if let Some(gsel) = group_sel {
                let group = resolve_group(gsel)?;
                let base = Arc::clone(&corpus.rings[0].ring);
                corpus.group_ring_pairs = vec![(base, group)];
            }
            corpus
        }
        None => Corpus::default_corpus(caps, seed)?,
    };
    let config = RunConfig {
        theorems: if theorem == "all" {
            Vec::new()
        } else {
            vec![theorem.to_string()]
        },
        jobs,
    };
    let reports: Vec<TheoremReport> = run_corpus(&corpus, &config)?;
    match format {
        Format::Table => emit(&render_table(&reports)),
        Format::Json => emit(&render_json(&reports, caps, seed)),
    }
    Ok(if reports.iter().all(|r| r.agreement) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_groupring(
    ring_sel: &str,
    group_sel: &str,
    out: &Path,
    caps: &Caps,
) -> Result<ExitCode, Error> {
    let base = resolve_ring(ring_sel, caps)?;
    let group = resolve_group(group_sel)?;
    let rg = group_ring(&base, &group, caps)?;
    let text = serialize_ring(&rg);
    std::fs::write(out, text).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot write {}: {e}", out.display()),
    })?;
    emit(&format!(
        "wrote {} ({} elements) to {}\n",
        rg.label(),
        rg.size(),
        out.display()
    ));
    Ok(ExitCode::SUCCESS)
}
