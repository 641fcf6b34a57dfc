//! `fitset`: subgroup lattices, Fitting-set radicals and injectors, and the
//! corpus verification suites.
//!
//! Exit codes: 0 all checks passed (or nothing to check), 1 at least one
//! verification failure, 2 usage or input-parsing problem.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use fitset_core::fitting::{self, FittingSet};
use fitset_core::group::{Group, DEFAULT_ORDER_CAP};
use fitset_core::injectors::{self, InjectorResult, TheoremBInjectors};
use fitset_core::lattice::SubgroupLattice;
use fitset_core::primes::is_prime;

use fitset_cli::corpus::{self, CorpusEntry, KNOWN_SUITES};
use fitset_cli::report::{self, EntryReport, Report};
use fitset_cli::suites;

#[derive(Parser)]
#[command(name = "fitset", version, about = "Fitting sets on finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the subgroup lattice of a group document.
    Lattice {
        /// Group JSON file ({"name", "degree", "generators"}).
        group: PathBuf,
    },
    /// Print the radical of a Fitting set on a group.
    Radical {
        /// Group JSON file.
        group: PathBuf,
        /// Fitting-set spec JSON file.
        #[arg(long)]
        set: PathBuf,
    },
    /// Compute the injectors of a Fitting set.
    Injectors {
        /// Group JSON file.
        group: PathBuf,
        /// Fitting-set spec JSON file.
        #[arg(long)]
        set: PathBuf,
        /// brute: exhaustive search; theorem-b: constructive route,
        /// requires an "slr" spec.
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Primes, e.g. "2,3". With --method theorem-b this must match the
        /// spec's pi.
        #[arg(long)]
        pi: Option<String>,
    },
    /// Run verification suites over a corpus and emit a report.
    Verify {
        /// Corpus directory (*.json); the bundled corpus when omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated suite filter; all declared suites when omitted.
        #[arg(long)]
        suite: Option<String>,
        /// Write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Rendering for standard output.
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Worker threads for per-group parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    #[value(name = "theorem-b")]
    TheoremB,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

fn parse_pi_list(s: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let p: u64 = part
            .trim()
            .parse()
            .map_err(|_| anyhow!("--pi: \"{part}\" is not an integer"))?;
        if !is_prime(p) {
            bail!("--pi: {p} is not prime");
        }
        out.push(p);
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        bail!("--pi: empty prime list");
    }
    Ok(out)
}

/// Order cap: FITSET_CAP when set, the library default otherwise.
fn order_cap() -> Result<usize> {
    match std::env::var("FITSET_CAP") {
        Ok(s) => {
            let cap: usize = s
                .trim()
                .parse()
                .map_err(|_| anyhow!("FITSET_CAP must be a positive integer, got \"{s}\""))?;
            if cap == 0 {
                bail!("FITSET_CAP must be positive");
            }
            Ok(cap)
        }
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORDER_CAP),
        Err(e) => Err(anyhow!("FITSET_CAP: {e}")),
    }
}

fn load_group(path: &Path, cap: usize) -> Result<Arc<Group>> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Group::parse(&text, cap).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_set(lat: &SubgroupLattice, path: &Path) -> Result<(serde_json::Value, FittingSet)> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| anyhow!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))?;
    let set = fitting::from_spec_json(lat, &value)
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok((value, set))
}

fn cmd_lattice(out: &mut dyn Write, path: &Path) -> Result<i32> {
    let g = load_group(path, order_cap()?)?;
    let lat = g.lattice()?;
    writeln!(
        out,
        "{}: order {}, degree {}, {} subgroups in {} conjugacy classes",
        g.name(),
        g.order(),
        g.degree(),
        lat.len(),
        lat.classes().len()
    )?;
    writeln!(out, "{:>4} {:>6} {:>6} {:>7} {:>9} mask", "#", "order", "class", "normal", "subnormal")?;
    for i in 0..lat.len() {
        writeln!(
            out,
            "{:>4} {:>6} {:>6} {:>7} {:>9} {}",
            i,
            lat.order(i),
            lat.class_of(i),
            if lat.is_normal_in_g(i) { "yes" } else { "-" },
            if lat.is_subnormal_in_g(i) { "yes" } else { "-" },
            lat.mask(i).hex()
        )?;
    }
    Ok(0)
}

fn cmd_radical(out: &mut dyn Write, group: &Path, set: &Path) -> Result<i32> {
    let g = load_group(group, order_cap()?)?;
    let lat = g.lattice()?;
    let (_, f) = load_set(&lat, set)?;
    let rad = f.group_radical_index();
    writeln!(
        out,
        "set {} on {}: {} members of {} subgroups",
        f.provenance(),
        g.name(),
        f.member_count(),
        lat.len()
    )?;
    writeln!(
        out,
        "radical: subgroup #{rad}, order {}, mask {}",
        lat.order(rad),
        lat.mask(rad).hex()
    )?;
    if lat.order(rad) <= 24 {
        for i in lat.mask(rad).iter() {
            writeln!(out, "  {}", g.element(i).cycle_string())?;
        }
    }
    Ok(0)
}

fn print_injectors(
    out: &mut dyn Write,
    g: &Group,
    lat: &SubgroupLattice,
    res: &InjectorResult,
) -> Result<()> {
    writeln!(
        out,
        "{} injectors in {} conjugacy class(es) [{}]",
        res.len(),
        res.conjugacy_class_count(),
        res.method()
    )?;
    for (slot, &i) in res.injector_indices().iter().enumerate() {
        writeln!(
            out,
            "injector #{i}: order {}, index {} in {}, mask {}",
            lat.order(i),
            res.indices_in_group()[slot],
            g.name(),
            lat.mask(i).hex()
        )?;
    }
    if let Some(pairs) = res.decompositions() {
        for &(hall, inj) in pairs {
            writeln!(
                out,
                "  injector #{inj} = Hall-complement #{hall} (order {}) * radical",
                lat.order(hall)
            )?;
        }
    }
    Ok(())
}

fn cmd_injectors(
    out: &mut dyn Write,
    group: &Path,
    set: &Path,
    method: MethodArg,
    pi: Option<&str>,
) -> Result<i32> {
    let pi = pi.map(parse_pi_list).transpose()?;
    let g = load_group(group, order_cap()?)?;
    let lat = g.lattice()?;
    let (value, f) = load_set(&lat, set)?;
    match method {
        MethodArg::Brute => {
            let res = injectors::injectors_brute(&f)?;
            print_injectors(out, &g, &lat, &res)?;
            Ok(0)
        }
        MethodArg::TheoremB => {
            if value.get("kind").and_then(serde_json::Value::as_str) != Some("slr") {
                bail!("--method theorem-b needs an \"slr\" Fitting-set spec");
            }
            let hf = fitting::hfunction_from_spec_json(&lat, &value)
                .map_err(|e| anyhow!("{}: {e}", set.display()))?;
            if let Some(pi) = &pi {
                let spec: Vec<u64> = hf.pi().iter().collect();
                if spec != *pi {
                    bail!(
                        "--pi {:?} disagrees with the spec's pi {:?}",
                        pi,
                        spec
                    );
                }
            }
            match injectors::injectors_theorem_b(&hf)? {
                TheoremBInjectors::Computed(res) => {
                    print_injectors(out, &g, &lat, &res)?;
                    Ok(0)
                }
                TheoremBInjectors::HypothesesUnmet { reasons } => {
                    writeln!(out, "hypotheses unmet; nothing computed")?;
                    for r in &reasons {
                        writeln!(out, "  {r}")?;
                    }
                    Ok(0)
                }
            }
        }
    }
}

fn cmd_verify(
    out: &mut dyn Write,
    dir: Option<&Path>,
    suite: Option<&str>,
    report_path: Option<&Path>,
    format: FormatArg,
    jobs: Option<usize>,
) -> Result<i32> {
    let started = Instant::now();
    let cap = order_cap()?;
    let entries = match dir {
        Some(d) => corpus::load_corpus(d, cap)?,
        None => corpus::load_default_corpus(cap)?,
    };
    let filter: Option<Vec<String>> = match suite {
        Some(s) => {
            let names: Vec<String> = s.split(',').map(|x| x.trim().to_string()).collect();
            for n in &names {
                if !KNOWN_SUITES.contains(&n.as_str()) {
                    bail!("unknown suite \"{n}\"; known: {}", KNOWN_SUITES.join(", "));
                }
            }
            Some(names)
        }
        None => None,
    };
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| anyhow!("building the thread pool: {e}"))?;
    }

    let digest = report::corpus_digest(&entries);
    let entry_reports: Result<Vec<EntryReport>> = entries
        .par_iter()
        .map(|entry| run_entry(entry, filter.as_deref()))
        .collect();
    let report = Report::new(entry_reports?, digest, started.elapsed().as_millis());

    if let Some(path) = report_path {
        fs::write(path, report.to_json())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    match format {
        FormatArg::Json => out.write_all(report.to_json().as_bytes())?,
        FormatArg::Text => out.write_all(report.to_text().as_bytes())?,
    }
    Ok(report.exit_code())
}

fn run_entry(entry: &CorpusEntry, filter: Option<&[String]>) -> Result<EntryReport> {
    let ctx = suites::prepare(entry)?;
    let mut results = Vec::new();
    for decl in &entry.doc.suites {
        let name = decl.canonical_name();
        if let Some(names) = filter {
            if !names.iter().any(|n| *n == name) {
                continue;
            }
        }
        results.push(suites::run_suite(&ctx, decl));
    }
    Ok(EntryReport {
        group: entry.group.name().to_string(),
        file: entry.file.clone(),
        order: entry.group.order(),
        suites: results,
        set_errors: ctx.set_skips.clone(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let outcome = match &cli.cmd {
        Cmd::Lattice { group } => cmd_lattice(&mut out, group),
        Cmd::Radical { group, set } => cmd_radical(&mut out, group, set),
        Cmd::Injectors {
            group,
            set,
            method,
            pi,
        } => cmd_injectors(&mut out, group, set, *method, pi.as_deref()),
        Cmd::Verify {
            corpus,
            suite,
            report,
            format,
            jobs,
        } => cmd_verify(
            &mut out,
            corpus.as_deref(),
            suite.as_deref(),
            report.as_deref(),
            *format,
            *jobs,
        ),
    };
    let outcome = outcome.and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match outcome {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            if e.downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
            {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
