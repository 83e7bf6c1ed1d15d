//! Shared command implementations for the `derange`, `subdirect` and
//! `lincover` binaries.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Subcommand};
use derange_core::derangement::{classify_case, find_derangement, pndr, DerangementSearch};
use derange_core::io::read_group;
use derange_core::pipeline::{
    emit_report, enumerate_transitive, obtain_corpus, verify_degree, ReportFormat,
};
use derange_core::subdirect::{goursat_enumerate, subdirect_derangement, Factor};
use derange_core::{Caps, PermGroup};
use lincover::{
    check_cover, good_count_formula, min_cover_search, tight_cover_construct, CoverInstance,
    FieldSpec, EXHAUSTION_CAP, SEARCH_BUDGET,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_PARTIAL: u8 = 3;

/// What a command prints on stdout, and the process exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn json(value: &Value, code: u8) -> Self {
        let mut text = serde_json::to_string_pretty(value).unwrap();
        text.push('\n');
        Self { text, code }
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    if let Some(core) = e.downcast_ref::<derange_core::Error>() {
        if core.is_resource_limit() {
            return EXIT_PARTIAL;
        }
    }
    if let Some(lin) = e.downcast_ref::<lincover::Error>() {
        if matches!(
            lin,
            lincover::Error::CapExceeded { .. } | lincover::Error::BudgetExhausted(_)
        ) {
            return EXIT_PARTIAL;
        }
    }
    EXIT_INPUT
}

/// Prints the output or the error and turns it into an exit code.
pub fn finish(result: anyhow::Result<Output>) -> ExitCode {
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// `DERANGE_SEED` wins over the command-line value.
pub fn effective_seed(cli: u64) -> anyhow::Result<u64> {
    match std::env::var("DERANGE_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("DERANGE_SEED={s:?} is not an unsigned integer")),
        Err(_) => Ok(cli),
    }
}

fn load(path: &Path) -> anyhow::Result<(String, PermGroup)> {
    let named = read_group(path)?;
    let name = named.name.unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    Ok((name, named.group))
}

fn all_points(g: &PermGroup) -> Vec<usize> {
    (0..g.degree()).collect()
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub degree: usize,
    /// Directory of group files; defaults to the builtin enumeration or the
    /// bundled fixtures.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest group order for class-based counting.
    #[arg(long)]
    pub max_order: Option<BigUint>,
    /// Write the JSON report here and print a summary table instead.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

pub fn verify(args: &VerifyArgs) -> anyhow::Result<Output> {
    let seed = effective_seed(args.seed)?;
    let mut caps = Caps::default();
    if let Some(b) = &args.max_order {
        caps = caps.with_max_order(b.clone());
    }
    let corpus = obtain_corpus(args.degree, args.corpus.as_deref())?;
    for w in &corpus.warnings {
        eprintln!("warning: {w}");
    }
    let report = verify_degree(corpus, &caps, seed);
    let code = report.verdict().exit_code() as u8;
    let text = match &args.json {
        Some(path) => {
            std::fs::write(path, emit_report(&report, ReportFormat::Json))
                .with_context(|| format!("writing {}", path.display()))?;
            emit_report(&report, ReportFormat::Table)
        }
        None => emit_report(&report, ReportFormat::Json),
    };
    Ok(Output { text, code })
}

pub fn enumerate(degree: usize, out: &Path) -> anyhow::Result<Output> {
    let corpus = enumerate_transitive(degree)?;
    std::fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let mut names = Vec::new();
    for e in &corpus.entries {
        derange_core::io::write_group(
            &out.join(format!("{}.json", e.name)),
            Some(&e.name),
            &e.group,
        )?;
        names.push(e.name.clone());
    }
    Ok(Output::json(
        &json!({"degree": degree.to_string(), "count": names.len().to_string(), "groups": names}),
        EXIT_OK,
    ))
}

pub fn pndr_command(path: &Path, seed: u64) -> anyhow::Result<Output> {
    let seed = effective_seed(seed)?;
    let (name, group) = load(path)?;
    let value = pndr(&group, &all_points(&group), &Caps::default(), seed)?;
    Ok(Output::json(
        &json!({
            "group": name,
            "order": group.order().to_string(),
            "pndr": serde_json::to_value(&value)?,
        }),
        EXIT_OK,
    ))
}

pub fn derangement_command(path: &Path, seed: u64) -> anyhow::Result<Output> {
    let seed = effective_seed(seed)?;
    let (name, group) = load(path)?;
    let search = find_derangement(&group, &all_points(&group), seed, &Caps::default())?;
    let (value, code) = match search {
        DerangementSearch::Found { witness, method } => (
            json!({"group": name, "derangement": witness.to_vec(), "method": method}),
            EXIT_OK,
        ),
        DerangementSearch::NoneExists { method } => (
            json!({"group": name, "derangement": null, "method": method}),
            EXIT_OK,
        ),
        DerangementSearch::Inconclusive { samples, reason } => (
            json!({"group": name, "derangement": null, "method": null, "samples": samples.to_string(), "reason": reason}),
            EXIT_PARTIAL,
        ),
    };
    Ok(Output::json(&value, code))
}

pub fn classify(n: u64) -> anyhow::Result<Output> {
    let label = classify_case(n)?;
    Ok(Output::json(
        &json!({"n": n.to_string(), "case": label.to_string()}),
        EXIT_OK,
    ))
}

#[derive(Args, Debug)]
pub struct SubdirectArgs {
    #[arg(long)]
    pub g1: PathBuf,
    #[arg(long)]
    pub g2: PathBuf,
    /// Only list the subdirect products (the default).
    #[arg(long, conflicts_with = "check_derangements")]
    pub list: bool,
    /// Look for a derangement in every subdirect product.
    #[arg(long)]
    pub check_derangements: bool,
    /// List every subdirect product instead of one per conjugacy class.
    #[arg(long)]
    pub no_dedup: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn subdirect(args: &SubdirectArgs) -> anyhow::Result<Output> {
    let seed = effective_seed(args.seed)?;
    let caps = Caps::default();
    let (_, g1) = load(&args.g1)?;
    let (_, g2) = load(&args.g2)?;
    let f1 = Factor::new(g1, &caps, seed)?;
    let f2 = Factor::new(g2, &caps, seed.wrapping_add(1))?;
    let descriptors = goursat_enumerate(&f1, &f2, &caps, !args.no_dedup)?;
    let mut rows = Vec::with_capacity(descriptors.len());
    let mut missing = false;
    for d in &descriptors {
        let derangement = if args.check_derangements {
            match subdirect_derangement(d, &caps)? {
                Some(w) => json!(w.to_vec()),
                None => {
                    missing = true;
                    Value::Null
                }
            }
        } else {
            Value::Null
        };
        rows.push(json!({
            "n1_order": d.n1().order().to_string(),
            "n2_order": d.n2().order().to_string(),
            "quotient_order": d.quotient_order().to_string(),
            "subgroup_order": d.subgroup_order().to_string(),
            "derangement": derangement,
        }));
    }
    let code = if missing {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    };
    Ok(Output::json(&Value::Array(rows), code))
}

#[derive(Subcommand, Debug)]
pub enum LincoverCommand {
    /// Closed-form count of all-nonzero vectors on a hyperplane.
    Formula {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Smallest covering set of hyperplanes with trivial intersection.
    Search {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = SEARCH_BUDGET)]
        budget: u64,
    },
    /// The explicit cover of size d + q - 1.
    Tight {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
    },
}

fn cover_json(field: &FieldSpec, c: &CoverInstance) -> anyhow::Result<Value> {
    let check = check_cover(field, c, EXHAUSTION_CAP)?;
    Ok(json!({
        "q": c.q.to_string(),
        "d": c.d.to_string(),
        "size": c.len().to_string(),
        "hyperplanes": c.hyperplanes.iter().map(|h| h.canonical(field).normal).collect::<Vec<_>>(),
        "covers_all": check.covers_all,
        "trivial_intersection": check.trivial_intersection,
        "bound_ok": check.bound_ok,
    }))
}

pub fn lincover(cmd: &LincoverCommand) -> anyhow::Result<Output> {
    let value = match *cmd {
        LincoverCommand::Formula { q, d, k } => {
            let count = good_count_formula(q, d, k)?;
            json!({"q": q.to_string(), "d": d.to_string(), "k": k.to_string(), "count": count.to_string()})
        }
        LincoverCommand::Search { q, d, budget } => {
            let field = FieldSpec::new(q)?;
            match min_cover_search(&field, d, budget, EXHAUSTION_CAP)? {
                Some(m) => {
                    let mut v = cover_json(&field, &m.witness)?;
                    v["visited"] = json!(m.visited.to_string());
                    v
                }
                None => {
                    json!({"q": q.to_string(), "d": d.to_string(), "size": null, "hyperplanes": null})
                }
            }
        }
        LincoverCommand::Tight { q, d } => {
            let field = FieldSpec::new(q)?;
            cover_json(&field, &tight_cover_construct(&field, d, EXHAUSTION_CAP)?)?
        }
    };
    Ok(Output::json(&value, EXIT_OK))
}

/// Rejects arguments that clap cannot express.
pub fn check_degree(degree: usize) -> anyhow::Result<()> {
    if degree < 2 {
        bail!("degree must be at least 2, got {degree}");
    }
    Ok(())
}
