//! `subgraph` command-line front end.
//!
//! Exit codes: 0 on success, 1 on an operational error, 2 when observed
//! regularity disagrees with the prediction or a structural check fails.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use subgraph_core::document::{AnalysisDocument, CensusRecord};
use subgraph_core::harness::{
    census_entry, counting_cases, default_corpus, verify_counting_identity, Analysis, CensusEntry, CensusOutcome,
    CensusVerdict, ClaimStatus,
};
use subgraph_core::lattice::export_dot;
use subgraph_core::{GroupSpec, Limits, DEFAULT_MAX_ORDER, DEFAULT_MAX_SUBGROUPS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "subgraph", version, about = "Subgroup graphs of small finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one group, enumerate its subgroups and report on its subgroup graph.
    ///
    /// SPEC is a product of atoms joined by `x`: Cn (cyclic), Dn (dihedral of
    /// order 2n), Sn, An, Q8, or @PATH for a generator or Cayley-table file.
    Analyze {
        spec: String,
        /// Write the lattice as a Graphviz digraph.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Write the analysis document as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        #[arg(long, env = "SUBGRAPH_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBGROUPS)]
        max_subgroups: usize,
    },
    /// Check regularity against the cyclic-of-square-free-order prediction over a corpus.
    Census {
        /// Largest group order analyzed; also bounds the built-in corpus.
        #[arg(long, default_value_t = 100)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBGROUPS)]
        max_subgroups: usize,
        /// Extra group specs, one per line; `#` starts a comment.
        #[arg(long, value_name = "FILE")]
        corpus: Option<PathBuf>,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write one JSON object per group.
        #[arg(long, value_name = "PATH")]
        jsonl: Option<PathBuf>,
        /// Where DOT and JSON dumps of mismatching groups go.
        #[arg(long, value_name = "DIR", default_value = "mismatch-dumps")]
        dump_dir: PathBuf,
    },
    /// Run the claim checks on one group.
    Claims {
        spec: String,
        #[arg(long, env = "SUBGRAPH_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_SUBGROUPS)]
        max_subgroups: usize,
    },
}

/// Runs a parsed command line, writing normal output to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Analyze {
            spec,
            dot,
            json,
            max_order,
            max_subgroups,
        } => cmd_analyze(
            &spec,
            dot.as_deref(),
            json.as_deref(),
            &Limits {
                max_order,
                max_subgroups,
            },
            out,
        ),
        Command::Census {
            max_order,
            max_subgroups,
            corpus,
            jobs,
            jsonl,
            dump_dir,
        } => cmd_census(
            &CensusOptions {
                limits: Limits {
                    max_order,
                    max_subgroups,
                },
                corpus,
                jobs,
                jsonl,
                dump_dir,
            },
            out,
            err,
        ),
        Command::Claims {
            spec,
            max_order,
            max_subgroups,
        } => cmd_claims(
            &spec,
            &Limits {
                max_order,
                max_subgroups,
            },
            out,
        ),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error + Send + Sync>>;

fn analyze_spec(spec: &str, limits: &Limits) -> subgraph_core::Result<Analysis> {
    let group = GroupSpec::parse(spec)?.build(limits)?;
    Analysis::run(group, limits)
}

pub fn cmd_analyze(spec: &str, dot: Option<&Path>, json: Option<&Path>, limits: &Limits, out: &mut dyn Write) -> CmdResult {
    let a = analyze_spec(spec, limits)?;
    let r = &a.report;
    writeln!(out, "group: {}", a.group.label())?;
    writeln!(out, "order: {}", a.group.order())?;
    writeln!(out, "subgroups: {}", a.lattice.len())?;
    writeln!(out, "cover edges: {}", a.lattice.edge_count())?;
    writeln!(out, "degree sequence: {:?}", r.degree_sequence)?;
    let alpha: Vec<String> = r.alpha.by_prime.iter().map(|(p, n)| format!("{p}:{n}")).collect();
    writeln!(out, "alpha: [{}] total {}", alpha.join(" "), r.alpha.total)?;
    if let Some((i, j)) = r.witness {
        let deltas = a.lattice.deltas();
        writeln!(
            out,
            "witness: vertex {i} (order {}, degree {}) vs vertex {j} (order {}, degree {})",
            a.lattice.vertex(i).order(),
            deltas[i],
            a.lattice.vertex(j).order(),
            deltas[j]
        )?;
    }
    writeln!(out, "regular: {}, predicted: {}", r.is_regular, a.predicted)?;
    if let Some(path) = dot {
        fs::write(path, export_dot(&a.lattice)).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(path) = json {
        AnalysisDocument::from_analysis(&a).write_json(path)?;
    }
    Ok(if a.matches() { EXIT_OK } else { EXIT_MISMATCH })
}

pub fn cmd_claims(spec: &str, limits: &Limits, out: &mut dyn Write) -> CmdResult {
    let a = analyze_spec(spec, limits)?;
    let report = a.claims();
    writeln!(out, "group: {}", report.label)?;
    writeln!(out, "regular: {}, predicted: {}", a.observed(), a.predicted)?;
    for (id, status) in &report.claims {
        let id = serde_json::to_string(id)?;
        match status {
            ClaimStatus::Holds => writeln!(out, "{}: holds", id.trim_matches('"'))?,
            ClaimStatus::NotApplicable => writeln!(out, "{}: not-applicable", id.trim_matches('"'))?,
            ClaimStatus::Fails(w) => writeln!(
                out,
                "{}: FAILS ({}; elements {:?}; vertices {:?})",
                id.trim_matches('"'),
                w.detail,
                w.elements,
                w.subgroups
            )?,
        }
    }
    Ok(if a.matches() && !report.has_failures() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub limits: Limits,
    pub corpus: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub jsonl: Option<PathBuf>,
    pub dump_dir: PathBuf,
}

/// One line of the extra corpus: a parsed spec or the text that failed to parse.
enum CorpusItem {
    Spec(GroupSpec),
    Invalid(String, String),
}

fn read_corpus(path: &Path) -> Result<Vec<CorpusItem>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| match GroupSpec::parse(l) {
            Ok(s) => CorpusItem::Spec(s),
            Err(e) => CorpusItem::Invalid(l.to_string(), e.to_string()),
        })
        .collect())
}

/// Runs the census on `jobs` workers; the result order follows the corpus.
pub fn census(corpus: &[GroupSpec], limits: &Limits, jobs: Option<usize>) -> Result<CensusVerdict, rayon::ThreadPoolBuildError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = jobs {
        builder = builder.num_threads(k.max(1));
    }
    let pool = builder.build()?;
    let (entries, counting) = pool.install(|| {
        let entries: Vec<CensusEntry> = corpus.par_iter().map(|s| census_entry(s, limits)).collect();
        let counting = counting_cases(limits.max_order)
            .into_par_iter()
            .filter_map(|(p, d)| verify_counting_identity(p, d, limits).ok())
            .collect();
        (entries, counting)
    });
    let description = format!("{} groups, max order {}", corpus.len(), limits.max_order);
    Ok(CensusVerdict::from_entries(description, entries, counting))
}

/// 2 for a mismatch or failed check, else 1 for any error record, else 0.
pub fn census_exit_code(v: &CensusVerdict) -> i32 {
    if !v.mismatches.is_empty() || !v.check_failures.is_empty() || v.counting_failures() > 0 {
        EXIT_MISMATCH
    } else if v.errors() > 0 {
        EXIT_ERROR
    } else {
        EXIT_OK
    }
}

fn dump_name(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

/// Writes `<label>.dot` and `<label>.json` for every mismatching group.
pub fn dump_mismatches(v: &CensusVerdict, limits: &Limits, dir: &Path) -> Result<Vec<PathBuf>, Box<dyn std::error::Error + Send + Sync>> {
    let mut written = Vec::new();
    if v.mismatches.is_empty() {
        return Ok(written);
    }
    fs::create_dir_all(dir)?;
    for label in &v.mismatches {
        let a = analyze_spec(label, limits)?;
        let base = dir.join(dump_name(label));
        let dot = base.with_extension("dot");
        fs::write(&dot, export_dot(&a.lattice))?;
        let json = base.with_extension("json");
        AnalysisDocument::from_analysis(&a).write_json(&json)?;
        written.extend([dot, json]);
    }
    Ok(written)
}

pub fn write_jsonl(v: &CensusVerdict, path: &Path) -> subgraph_core::Result<()> {
    let mut text = String::new();
    for e in &v.entries {
        text.push_str(&CensusRecord::from(e).to_line()?);
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| subgraph_core::Error::Io {
        path: path.to_path_buf(),
        source: e,
    })
}

pub fn cmd_census(opts: &CensusOptions, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut corpus = default_corpus(opts.limits.max_order);
    let mut invalid = Vec::new();
    if let Some(path) = &opts.corpus {
        for item in read_corpus(path)? {
            match item {
                CorpusItem::Spec(s) => corpus.push(s),
                CorpusItem::Invalid(text, e) => invalid.push((text, e)),
            }
        }
    }
    let mut verdict = census(&corpus, &opts.limits, opts.jobs)?;
    for (text, e) in invalid {
        verdict.entries.push(CensusEntry {
            label: text,
            order: None,
            outcome: CensusOutcome::Error(e),
        });
    }

    writeln!(out, "{:<24} {:>5} {:>9} {:>8} {:>9} {:>7}", "group", "order", "subgroups", "regular", "predicted", "checks")?;
    for e in &verdict.entries {
        let order = e.order.map_or_else(|| "-".to_string(), |o| o.to_string());
        match &e.outcome {
            CensusOutcome::Analyzed(r) => writeln!(
                out,
                "{:<24} {:>5} {:>9} {:>8} {:>9} {:>7}",
                e.label,
                order,
                r.n_subgroups,
                r.observed,
                r.predicted,
                if r.has_check_failures() { "FAIL" } else { "ok" }
            )?,
            CensusOutcome::Skipped(reason) => writeln!(out, "{:<24} {:>5} skipped: {reason}", e.label, order)?,
            CensusOutcome::Error(reason) => writeln!(out, "{:<24} {:>5} error: {reason}", e.label, order)?,
        }
    }
    for c in &verdict.counting {
        writeln!(
            out,
            "counting (C{})^{}: maximal {} minimal {} expected {} {}",
            c.p,
            c.d,
            c.maximal,
            c.minimal,
            c.expected,
            if c.holds() { "ok" } else { "FAIL" }
        )?;
    }
    writeln!(
        out,
        "analyzed {} groups ({} skipped, {} errors): {} mismatches, {} check failures, {} counting failures",
        verdict.analyzed().count(),
        verdict.skipped(),
        verdict.errors(),
        verdict.mismatches.len(),
        verdict.check_failures.len(),
        verdict.counting_failures()
    )?;

    if let Some(path) = &opts.jsonl {
        write_jsonl(&verdict, path)?;
    }
    if !verdict.mismatches.is_empty() {
        writeln!(err, "theorem mismatch for: {}", verdict.mismatches.join(", "))?;
        for path in dump_mismatches(&verdict, &opts.limits, &opts.dump_dir)? {
            writeln!(err, "wrote {}", path.display())?;
        }
    }
    Ok(census_exit_code(&verdict))
}
