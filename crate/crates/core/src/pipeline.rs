//! End-to-end verification for one degree `n`: collect the transitive
//! imprimitive groups of degree `n`, prune pairs whose non-derangement
//! proportions sum to less than 1, enumerate the subdirect products of the
//! remaining pairs and exhibit a derangement in each.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::blocks::is_primitive;
use crate::caps::Caps;
use crate::derangement::{
    find_derangement, is_derangement, pndr, pndr_pair_bound, DerangementSearch, PndrValue,
};
use crate::error::{Error, Result};
use crate::group::{ElementIndex, PermGroup};
use crate::io::read_group;
use crate::perm::Permutation;
use crate::subdirect::{
    goursat_enumerate, subdirect_derangement, subdirect_group, Factor, SubdirectDescriptor,
};

/// Largest degree for which the corpus is rebuilt from scratch.
pub const BUILTIN_MAX_DEGREE: usize = 7;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub group: PermGroup,
    pub transitive: bool,
    pub primitive: Option<bool>,
    pub pndr: Option<PndrValue>,
}

#[derive(Clone, Debug)]
pub struct GroupCorpus {
    pub degree: usize,
    pub entries: Vec<CorpusEntry>,
    /// `builtin-enumeration` or `fixtures:<path>`.
    pub source: String,
    pub warnings: Vec<String>,
}

impl GroupCorpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Conjugacy invariants used to avoid most explicit conjugacy tests.
#[derive(Clone, PartialEq, Eq)]
struct SubgroupKey {
    order: u64,
    orbit_lengths: Vec<usize>,
    cycle_types: Vec<(Vec<usize>, usize)>,
}

fn subgroup_key(group: &PermGroup) -> SubgroupKey {
    let mut orbit_lengths: Vec<usize> = group.orbits().iter().map(Vec::len).collect();
    orbit_lengths.sort_unstable();
    let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for g in group.elements(u64::MAX).unwrap() {
        *counts.entry(g.cycle_type()).or_default() += 1;
    }
    SubgroupKey {
        order: group.order_u64().unwrap(),
        orbit_lengths,
        cycle_types: counts.into_iter().collect(),
    }
}

/// Is there `σ` in `ambient` with `a^σ = b`?
fn conjugate_in(ambient: &[Permutation], a: &PermGroup, b: &PermGroup) -> bool {
    ambient.iter().any(|s| {
        a.generators()
            .iter()
            .all(|g| b.contains(&g.conjugate_by(s)))
    })
}

/// Every subgroup of `Sym(n)` up to conjugacy, grown breadth-first from the
/// trivial group. From each `H` only one element per orbit of
/// `N(H)`-conjugation combined with left multiplication by `H` is adjoined,
/// since those moves send `<H, g>` to a conjugate.
pub fn subgroups_up_to_conjugacy(n: usize) -> Vec<PermGroup> {
    let sym = PermGroup::symmetric(n);
    let all: Vec<Permutation> = sym.elements(u64::MAX).unwrap().collect();
    let index = ElementIndex::new(sym.chain()).unwrap();
    let rank = |g: &Permutation| index.rank(g).unwrap() as usize;
    let mut found: Vec<(SubgroupKey, PermGroup)> = Vec::new();
    let trivial = PermGroup::trivial(n);
    found.push((subgroup_key(&trivial), trivial));
    let mut i = 0;
    while i < found.len() {
        let h = found[i].1.clone();
        let mut normalizer = h.clone();
        for s in &all {
            if !normalizer.contains(s)
                && h.generators()
                    .iter()
                    .all(|g| h.contains(&g.conjugate_by(s)))
            {
                normalizer = normalizer.closure(std::slice::from_ref(s));
            }
        }
        let mut covered = vec![false; all.len()];
        for g in &all {
            if covered[rank(g)] {
                continue;
            }
            covered[rank(g)] = true;
            let mut queue = vec![g.clone()];
            while let Some(x) = queue.pop() {
                let moves = normalizer
                    .generators()
                    .iter()
                    .map(|s| x.conjugate_by(s))
                    .chain(h.generators().iter().map(|t| t * &x));
                for y in moves {
                    let r = rank(&y);
                    if !covered[r] {
                        covered[r] = true;
                        queue.push(y);
                    }
                }
            }
            if h.contains(g) {
                continue;
            }
            let k = h.closure(std::slice::from_ref(g));
            let key = subgroup_key(&k);
            let known = found
                .iter()
                .any(|(key2, k2)| *key2 == key && conjugate_in(&all, &k, k2));
            if !known {
                found.push((key, k));
            }
        }
        i += 1;
    }
    found.into_iter().map(|(_, g)| g).collect()
}

/// The transitive groups of degree `n ≤ 7` up to conjugacy, sorted by
/// order and then primitivity.
pub fn enumerate_transitive(n: usize) -> Result<GroupCorpus> {
    if n == 0 || n > BUILTIN_MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "builtin enumeration covers degrees 1..={BUILTIN_MAX_DEGREE}; use a fixture corpus for degree {n}"
        )));
    }
    let mut groups: Vec<(u64, bool, PermGroup)> = subgroups_up_to_conjugacy(n)
        .into_iter()
        .filter(PermGroup::is_transitive)
        .map(|g| {
            let prim = is_primitive(&g, &(0..n).collect::<Vec<_>>()).unwrap();
            (g.order_u64().unwrap(), prim, g)
        })
        .collect();
    groups.sort_by_key(|(o, p, _)| (*o, *p));
    let entries = groups
        .into_iter()
        .enumerate()
        .map(|(i, (_, prim, group))| CorpusEntry {
            name: format!("d{n}-{:02}", i + 1),
            group,
            transitive: true,
            primitive: Some(prim),
            pndr: None,
        })
        .collect();
    Ok(GroupCorpus {
        degree: n,
        entries,
        source: "builtin-enumeration".into(),
        warnings: Vec::new(),
    })
}

/// Default fixture directory shipped with the crate.
pub fn fixture_dir(n: usize) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("degree-{n:02}"))
}

/// Reads every `*.json` group file in `dir`, in file-name order, checking
/// degree and transitivity.
pub fn load_corpus(dir: &Path, n: usize) -> Result<GroupCorpus> {
    let read_dir = fs::read_dir(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut files: Vec<PathBuf> = Vec::new();
    for entry in read_dir {
        let entry = entry.map_err(|source| Error::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        let path = entry.path();
        if path.extension().is_some_and(|e| e == "json") {
            files.push(path);
        }
    }
    files.sort();
    let mut entries = Vec::new();
    for path in &files {
        let named = read_group(path)?;
        let label = path.display().to_string();
        if named.group.degree() != n {
            return Err(Error::CorpusDegree {
                path: label,
                expected: n,
                found: named.group.degree(),
            });
        }
        if !named.group.is_transitive() {
            return Err(Error::NonTransitiveEntry {
                path: label,
                degree: n,
            });
        }
        let name = named
            .name
            .unwrap_or_else(|| path.file_stem().unwrap().to_string_lossy().into_owned());
        entries.push(CorpusEntry {
            name,
            group: named.group,
            transitive: true,
            primitive: None,
            pndr: None,
        });
    }
    let mut warnings = Vec::new();
    if entries.is_empty() {
        warnings.push(format!("no group files in {}", dir.display()));
    }
    Ok(GroupCorpus {
        degree: n,
        entries,
        source: format!("fixtures:{}", dir.display()),
        warnings,
    })
}

/// Builtin enumeration for small degrees, the given or shipped fixture
/// directory otherwise.
pub fn obtain_corpus(n: usize, dir: Option<&Path>) -> Result<GroupCorpus> {
    match dir {
        Some(d) => load_corpus(d, n),
        None if n <= BUILTIN_MAX_DEGREE => enumerate_transitive(n),
        None => {
            let d = fixture_dir(n);
            if !d.is_dir() {
                return Err(Error::InvalidArgument(format!(
                    "no fixture corpus for degree {n} (looked in {})",
                    d.display()
                )));
            }
            load_corpus(&d, n)
        }
    }
}

/// Sets the primitivity flag everywhere and keeps the imprimitive entries.
pub fn imprimitive_filter(mut corpus: GroupCorpus) -> GroupCorpus {
    let points: Vec<usize> = (0..corpus.degree).collect();
    for e in &mut corpus.entries {
        e.primitive = Some(is_primitive(&e.group, &points).unwrap());
    }
    corpus.entries.retain(|e| e.primitive == Some(false));
    corpus
}

/// An unordered pair `(i, j)` with `i <= j` and its pruning bound.
#[derive(Clone, Debug)]
pub struct PairPlan {
    pub i: usize,
    pub j: usize,
    pub bound: Option<BigRational>,
}

impl PairPlan {
    /// Pruned when the bound is known and below 1.
    pub fn pruned(&self) -> bool {
        self.bound.as_ref().is_some_and(|b| *b < BigRational::one())
    }
}

pub fn plan_pairs(corpus: &GroupCorpus) -> Vec<PairPlan> {
    let mut out = Vec::new();
    for i in 0..corpus.len() {
        for j in i..corpus.len() {
            let bound = match (&corpus.entries[i].pndr, &corpus.entries[j].pndr) {
                (Some(a), Some(b)) => Some(pndr_pair_bound(a, b)),
                _ => None,
            };
            out.push(PairPlan { i, j, bound });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapHit {
    pub item: String,
    pub reason: String,
}

/// A subdirect product and its derangement (or the lack of one).
#[derive(Clone, Debug)]
pub struct SubdirectRecord {
    pub pair: (String, String),
    pub n1_order: BigUint,
    pub n2_order: BigUint,
    pub quotient_order: usize,
    pub subgroup_order: BigUint,
    pub derangement: Option<Permutation>,
    pub generators: Vec<Permutation>,
}

#[derive(Clone, Debug)]
pub struct GroupRecord {
    pub name: String,
    pub order: BigUint,
    pub pndr: Option<PndrValue>,
    pub derangement: Option<Permutation>,
    pub method: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Counterexample,
    Partial,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Counterexample => "counterexample",
            Verdict::Partial => "partial",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Counterexample => 1,
            Verdict::Partial => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub degree: usize,
    pub source: String,
    pub corpus_size: usize,
    pub imprimitive_count: usize,
    pub pairs_total: usize,
    pub pairs_pruned: usize,
    pub pairs_checked: usize,
    pub subdirect_products_checked: usize,
    pub groups: Vec<GroupRecord>,
    pub counterexamples: Vec<SubdirectRecord>,
    pub witnesses: Vec<SubdirectRecord>,
    pub caps_hit: Vec<CapHit>,
    pub seed: u64,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn verdict(&self) -> Verdict {
        if !self.counterexamples.is_empty() {
            Verdict::Counterexample
        } else if !self.caps_hit.is_empty() {
            Verdict::Partial
        } else {
            Verdict::Verified
        }
    }
}

/// Fills in the non-derangement proportion of every entry, recording
/// entries that exceed the caps.
pub fn compute_pndrs(corpus: &mut GroupCorpus, caps: &Caps, seed: u64) -> Vec<CapHit> {
    let points: Vec<usize> = (0..corpus.degree).collect();
    let results: Vec<Result<PndrValue>> = corpus
        .entries
        .par_iter()
        .enumerate()
        .map(|(i, e)| pndr(&e.group, &points, caps, seed.wrapping_add(i as u64)))
        .collect();
    let mut hits = Vec::new();
    for (e, r) in corpus.entries.iter_mut().zip(results) {
        match r {
            Ok(v) => e.pndr = Some(v),
            Err(err) => hits.push(CapHit {
                item: format!("pndr {}", e.name),
                reason: err.to_string(),
            }),
        }
    }
    hits
}

struct PairOutcome {
    products: usize,
    witnesses: Vec<SubdirectRecord>,
    counterexamples: Vec<SubdirectRecord>,
    caps_hit: Vec<CapHit>,
}

fn record(
    pair: &(String, String),
    desc: &SubdirectDescriptor,
    derangement: Option<Permutation>,
) -> SubdirectRecord {
    SubdirectRecord {
        pair: pair.clone(),
        n1_order: desc.n1().order(),
        n2_order: desc.n2().order(),
        quotient_order: desc.quotient_order(),
        subgroup_order: desc.subgroup_order(),
        derangement,
        generators: Vec::new(),
    }
}

fn check_pair(f1: &Factor, f2: &Factor, pair: (String, String), caps: &Caps) -> PairOutcome {
    let mut out = PairOutcome {
        products: 0,
        witnesses: Vec::new(),
        counterexamples: Vec::new(),
        caps_hit: Vec::new(),
    };
    let item = format!("pair {} x {}", pair.0, pair.1);
    let descriptors = match goursat_enumerate(f1, f2, caps, true) {
        Ok(d) => d,
        Err(e) => {
            out.caps_hit.push(CapHit {
                item,
                reason: e.to_string(),
            });
            return out;
        }
    };
    for desc in &descriptors {
        out.products += 1;
        match subdirect_derangement(desc, caps) {
            Ok(Some(w)) => out.witnesses.push(record(&pair, desc, Some(w))),
            Ok(None) => {
                // Re-check by a full element scan before reporting.
                let group = subdirect_group(desc);
                let points: Vec<usize> = (0..group.degree()).collect();
                let scan = group
                    .elements(caps.enumeration)
                    .map(|mut it| it.find(|g| is_derangement(g, &points)));
                match scan {
                    Ok(Some(w)) => out.witnesses.push(record(&pair, desc, Some(w))),
                    _ => {
                        let mut r = record(&pair, desc, None);
                        r.generators = group.generators().to_vec();
                        out.counterexamples.push(r);
                    }
                }
            }
            Err(e) => out.caps_hit.push(CapHit {
                item: format!("{item} (quotient order {})", desc.quotient_order()),
                reason: e.to_string(),
            }),
        }
    }
    out
}

/// Runs the full check for one degree.
pub fn verify_degree(corpus: GroupCorpus, caps: &Caps, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let degree = corpus.degree;
    let source = corpus.source.clone();
    let corpus_size = corpus.len();
    let mut corpus = imprimitive_filter(corpus);
    let mut caps_hit = compute_pndrs(&mut corpus, caps, seed);
    let points: Vec<usize> = (0..degree).collect();

    let groups: Vec<GroupRecord> = corpus
        .entries
        .par_iter()
        .enumerate()
        .map(|(i, e)| {
            let search = find_derangement(&e.group, &points, seed.wrapping_add(i as u64), caps);
            let (derangement, method) = match search {
                Ok(DerangementSearch::Found { witness, method }) => {
                    (Some(witness), Some(method.to_string()))
                }
                _ => (None, None),
            };
            GroupRecord {
                name: e.name.clone(),
                order: e.group.order(),
                pndr: e.pndr.clone(),
                derangement,
                method,
            }
        })
        .collect();

    let plans = plan_pairs(&corpus);
    let kept: Vec<&PairPlan> = plans.iter().filter(|p| !p.pruned()).collect();
    let factors: Vec<OnceLock<std::result::Result<Arc<Factor>, String>>> =
        corpus.entries.iter().map(|_| OnceLock::new()).collect();
    let factor = |i: usize| -> std::result::Result<Arc<Factor>, String> {
        factors[i]
            .get_or_init(|| {
                Factor::new(
                    corpus.entries[i].group.clone(),
                    caps,
                    seed.wrapping_add(i as u64),
                )
                .map(Arc::new)
                .map_err(|e| e.to_string())
            })
            .clone()
    };
    let outcomes: Vec<PairOutcome> = kept
        .par_iter()
        .map(|plan| {
            let pair = (
                corpus.entries[plan.i].name.clone(),
                corpus.entries[plan.j].name.clone(),
            );
            match (factor(plan.i), factor(plan.j)) {
                (Ok(f1), Ok(f2)) => check_pair(&f1, &f2, pair, caps),
                (Err(e), _) | (_, Err(e)) => PairOutcome {
                    products: 0,
                    witnesses: Vec::new(),
                    counterexamples: Vec::new(),
                    caps_hit: vec![CapHit {
                        item: format!("pair {} x {}", pair.0, pair.1),
                        reason: e,
                    }],
                },
            }
        })
        .collect();

    let mut report = VerificationReport {
        degree,
        source,
        corpus_size,
        imprimitive_count: corpus.len(),
        pairs_total: plans.len(),
        pairs_pruned: plans.len() - kept.len(),
        pairs_checked: kept.len(),
        subdirect_products_checked: 0,
        groups,
        counterexamples: Vec::new(),
        witnesses: Vec::new(),
        caps_hit: Vec::new(),
        seed,
        wall_time: Duration::ZERO,
    };
    for o in outcomes {
        report.subdirect_products_checked += o.products;
        report.witnesses.extend(o.witnesses);
        report.counterexamples.extend(o.counterexamples);
        caps_hit.extend(o.caps_hit);
    }
    report.caps_hit = caps_hit;
    report.wall_time = started.elapsed();
    report
}

fn perm_json(p: &Option<Permutation>) -> Value {
    match p {
        Some(p) => json!(p.to_vec()),
        None => Value::Null,
    }
}

fn subdirect_json(r: &SubdirectRecord) -> Value {
    let mut v = json!({
        "pair": [r.pair.0, r.pair.1],
        "n1_order": r.n1_order.to_string(),
        "n2_order": r.n2_order.to_string(),
        "quotient_order": r.quotient_order.to_string(),
        "subgroup_order": r.subgroup_order.to_string(),
        "derangement": perm_json(&r.derangement),
    });
    if !r.generators.is_empty() {
        v["generators"] = json!(r
            .generators
            .iter()
            .map(Permutation::to_vec)
            .collect::<Vec<_>>());
    }
    v
}

/// JSON form of the report. Keys are sorted and counts are decimal
/// strings; the wall-clock time is left out so that equal inputs give
/// equal bytes.
pub fn report_json(r: &VerificationReport) -> Value {
    json!({
        "degree": r.degree.to_string(),
        "source": r.source,
        "corpus_size": r.corpus_size.to_string(),
        "imprimitive_count": r.imprimitive_count.to_string(),
        "pairs_total": r.pairs_total.to_string(),
        "pairs_pruned": r.pairs_pruned.to_string(),
        "pairs_checked": r.pairs_checked.to_string(),
        "subdirect_products_checked": r.subdirect_products_checked.to_string(),
        "groups": r.groups.iter().map(|g| json!({
            "group": g.name,
            "order": g.order.to_string(),
            "pndr": g.pndr.as_ref().map(|p| serde_json::to_value(p).unwrap()).unwrap_or(Value::Null),
            "derangement": perm_json(&g.derangement),
            "method": g.method,
        })).collect::<Vec<_>>(),
        "counterexamples": r.counterexamples.iter().map(subdirect_json).collect::<Vec<_>>(),
        "witnesses": r.witnesses.iter().map(subdirect_json).collect::<Vec<_>>(),
        "caps_hit": r.caps_hit.iter().map(|c| json!({"item": c.item, "reason": c.reason})).collect::<Vec<_>>(),
        "seed": r.seed.to_string(),
        "verdict": r.verdict().as_str(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Table,
}

pub fn emit_report(r: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(r)).unwrap();
            s.push('\n');
            s
        }
        ReportFormat::Table => {
            let mut s = String::new();
            let rows = [
                ("degree", r.degree.to_string()),
                ("source", r.source.clone()),
                ("corpus size", r.corpus_size.to_string()),
                ("imprimitive", r.imprimitive_count.to_string()),
                ("pairs total", r.pairs_total.to_string()),
                ("pairs pruned", r.pairs_pruned.to_string()),
                ("pairs checked", r.pairs_checked.to_string()),
                (
                    "subdirect products",
                    r.subdirect_products_checked.to_string(),
                ),
                ("counterexamples", r.counterexamples.len().to_string()),
                ("caps hit", r.caps_hit.len().to_string()),
                ("seed", r.seed.to_string()),
                ("wall time", format!("{:.2?}", r.wall_time)),
                ("verdict", r.verdict().as_str().to_string()),
            ];
            for (k, v) in rows {
                let _ = writeln!(s, "{k:<20} {v}");
            }
            for c in &r.caps_hit {
                let _ = writeln!(s, "  cap: {}: {}", c.item, c.reason);
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_classes_of_small_symmetric_groups() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| subgroups_up_to_conjugacy(n).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 19]);
    }

    #[test]
    fn builtin_counts() {
        let counts: Vec<usize> = (2..=5)
            .map(|n| enumerate_transitive(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 5]);
        assert!(enumerate_transitive(8).is_err());
    }

    #[test]
    fn imprimitive_filter_examples() {
        let c = enumerate_transitive(4).unwrap();
        let imp = imprimitive_filter(c);
        // C4, V4 and D8 are imprimitive; A4 and S4 are primitive
        assert_eq!(imp.len(), 3);
        let prime = imprimitive_filter(enumerate_transitive(5).unwrap());
        assert!(prime.is_empty());
    }

    #[test]
    fn pairs_with_repetition() {
        let mut c = imprimitive_filter(enumerate_transitive(4).unwrap());
        compute_pndrs(&mut c, &Caps::default(), 0);
        let plans = plan_pairs(&c);
        assert_eq!(plans.len(), 6);
    }
}
