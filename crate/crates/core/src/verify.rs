//! Audit engine: compare every applicable closed form against direct
//! computation on explicitly constructed `S_k(G)` / `R_k(G)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactNumber;
use crate::formulas::{evaluate_formula, evaluate_unrestricted, Block, FormulaContext, FormulaId};
use crate::graph::{generate, Family, Graph};
use crate::indices::{compute_all, IndexKind, IndexVector};
use crate::transforms::Transform;

/// One predicted-vs-actual comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub formula: FormulaId,
    pub graph: String,
    pub n: u64,
    pub m: u64,
    pub k: u32,
    pub predicted: ExactNumber,
    pub actual: ExactNumber,
    #[serde(rename = "match")]
    pub matched: bool,
    /// `actual - predicted`.
    pub residual: ExactNumber,
    /// False for records evaluated below the formula's `k_min` on request.
    pub in_domain: bool,
}

impl VerificationRecord {
    fn new(
        formula: FormulaId,
        graph: &str,
        base: &IndexVector,
        k: u32,
        predicted: ExactNumber,
        actual: ExactNumber,
    ) -> VerificationRecord {
        let residual = &actual - &predicted;
        VerificationRecord {
            formula,
            graph: graph.to_string(),
            n: base.n,
            m: base.m,
            k,
            matched: residual.is_zero(),
            predicted,
            actual,
            residual,
            in_domain: k >= formula.k_min(),
        }
    }
}

/// A (formula, graph, k) triple or a whole graph that could not be checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub formula: Option<FormulaId>,
    pub graph: String,
    pub k: Option<u32>,
    pub reason: String,
}

/// Base graph plus the index vectors of its derived graphs, built lazily.
pub struct DerivedCache<'g> {
    graph: &'g Graph,
    base: IndexVector,
    levels: HashMap<(Transform, usize), IndexVector>,
}

impl<'g> DerivedCache<'g> {
    pub fn new(graph: &'g Graph) -> DerivedCache<'g> {
        DerivedCache {
            graph,
            base: compute_all(graph),
            levels: HashMap::new(),
        }
    }

    pub fn base(&self) -> &IndexVector {
        &self.base
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// Indices of `transform(G, k)`, computed directly on the built graph.
    pub fn level(&mut self, transform: Transform, k: usize) -> &IndexVector {
        if k == 0 {
            return &self.base;
        }
        let graph = self.graph;
        self.levels
            .entry((transform, k))
            .or_insert_with(|| compute_all(&transform.apply(graph, k)))
    }

    /// Builds the evaluation context `id` needs at level `k`.
    pub fn context(&mut self, id: FormulaId, k: u32) -> Result<FormulaContext> {
        let mut ctx = FormulaContext::from_base(self.base.clone(), k);
        if id.is_recurrence() && k >= 1 {
            let prev = self.level(id.transform(), k as usize - 1).clone();
            ctx = ctx.with_prev(prev);
        }
        if id.is_regular() {
            let r = self
                .graph
                .regular_degree()
                .ok_or_else(|| Error::MissingRegularDegree(id.to_string()))?;
            ctx = ctx.with_r(r as u64);
        }
        Ok(ctx)
    }
}

fn skip(id: FormulaId, graph: &str, k: u32, reason: impl Into<String>) -> Skip {
    Skip {
        formula: Some(id),
        graph: graph.to_string(),
        k: Some(k),
        reason: reason.into(),
    }
}

/// Checks one formula on one graph at one `k`.
///
/// Precondition failures (k below `k_min`, disconnected input, non-regular
/// input for a regular corollary) come back as a [`Skip`].
pub fn verify_formula(
    id: FormulaId,
    graph: &Graph,
    descriptor: &str,
    k: u32,
) -> std::result::Result<VerificationRecord, Skip> {
    verify_cached(&mut DerivedCache::new(graph), id, descriptor, k, false)
}

/// As [`verify_formula`], reusing derived graphs across calls. With
/// `allow_below_kmin`, out-of-domain values are evaluated and flagged.
pub fn verify_cached(
    cache: &mut DerivedCache<'_>,
    id: FormulaId,
    descriptor: &str,
    k: u32,
    allow_below_kmin: bool,
) -> std::result::Result<VerificationRecord, Skip> {
    if k < id.k_min() && !allow_below_kmin {
        return Err(skip(
            id,
            descriptor,
            k,
            format!("k = {k} is below k_min = {}", id.k_min()),
        ));
    }
    if !cache.graph().is_connected() {
        return Err(skip(id, descriptor, k, "graph is not connected"));
    }
    if id.is_regular() && cache.graph().regular_degree().is_none() {
        return Err(skip(id, descriptor, k, "graph is not regular"));
    }
    let ctx = cache
        .context(id, k)
        .map_err(|e| skip(id, descriptor, k, e.to_string()))?;
    let predicted = if allow_below_kmin {
        evaluate_unrestricted(id, &ctx)
    } else {
        evaluate_formula(id, &ctx)
    }
    .map_err(|e| skip(id, descriptor, k, e.to_string()))?;
    let actual = cache.level(id.transform(), k as usize).get(id.kind).clone();
    Ok(VerificationRecord::new(
        id,
        descriptor,
        cache.base(),
        k,
        predicted,
        actual,
    ))
}

/// What to audit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSpec {
    pub families: Vec<Family>,
    pub kmax: u32,
    pub seed: u64,
    pub formulas: Vec<FormulaId>,
    /// Also evaluate `k < k_min`; such records never count in summaries.
    #[serde(default)]
    pub include_below_kmin: bool,
}

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_KMAX: u32 = 4;
/// Resampling budget for disconnected random instances.
pub const MAX_CONNECT_ATTEMPTS: u64 = 64;

impl SuiteSpec {
    /// Paths, cycles, cliques, stars, `K_{2,3}`, one random 3-regular graph
    /// and one connected G(8, 1/2), with every formula and `k <= 4`.
    pub fn default_with_seed(seed: u64) -> SuiteSpec {
        SuiteSpec {
            families: default_families(seed),
            kmax: DEFAULT_KMAX,
            seed,
            formulas: FormulaId::all().collect(),
            include_below_kmin: false,
        }
    }

    pub fn single(family: Family, kmax: u32, formulas: Vec<FormulaId>) -> SuiteSpec {
        SuiteSpec {
            families: vec![family],
            kmax,
            seed: DEFAULT_SEED,
            formulas,
            include_below_kmin: false,
        }
    }
}

impl Default for SuiteSpec {
    fn default() -> Self {
        SuiteSpec::default_with_seed(DEFAULT_SEED)
    }
}

pub fn default_families(seed: u64) -> Vec<Family> {
    let mut out = Vec::new();
    out.extend((2..=8).map(|a| Family::Path { a }));
    out.extend((3..=8).map(|a| Family::Cycle { a }));
    out.extend((2..=6).map(|a| Family::Complete { a }));
    out.extend((2..=6).map(|a| Family::Star { a }));
    out.push(Family::CompleteBipartite { a: 2, b: 3 });
    out.push(Family::RandomRegular { n: 8, r: 3, seed });
    out.push(Family::ErdosRenyi { n: 8, p: 0.5, seed });
    out
}

/// A concrete suite member.
#[derive(Clone, Debug)]
pub struct SuiteGraph {
    pub family: Family,
    pub descriptor: String,
    pub graph: Graph,
}

/// Generates the suite graphs, resampling disconnected random instances.
///
/// A disconnected random instance is retried with seeds `seed + 1, ...`; the
/// descriptor names the seed that was finally used.
pub fn build_suite_graphs(families: &[Family]) -> Result<(Vec<SuiteGraph>, Vec<Skip>)> {
    let mut graphs = Vec::new();
    let mut skipped = Vec::new();
    for family in families {
        let mut chosen = None;
        let attempts = if family.is_random() {
            MAX_CONNECT_ATTEMPTS
        } else {
            1
        };
        for attempt in 0..attempts {
            let candidate = reseed(family, attempt);
            let graph = generate(&candidate)?;
            if graph.is_connected() {
                chosen = Some((candidate, graph));
                break;
            }
        }
        match chosen {
            Some((family, graph)) => graphs.push(SuiteGraph {
                descriptor: family.to_string(),
                family,
                graph,
            }),
            None => skipped.push(Skip {
                formula: None,
                graph: family.to_string(),
                k: None,
                reason: format!("disconnected after {attempts} attempt(s)"),
            }),
        }
    }
    Ok((graphs, skipped))
}

fn reseed(family: &Family, attempt: u64) -> Family {
    match family {
        Family::RandomRegular { n, r, seed } => Family::RandomRegular {
            n: *n,
            r: *r,
            seed: seed.wrapping_add(attempt),
        },
        Family::ErdosRenyi { n, p, seed } => Family::ErdosRenyi {
            n: *n,
            p: *p,
            seed: seed.wrapping_add(attempt),
        },
        other => other.clone(),
    }
}

/// Suite parameters as recorded in the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteDescription {
    pub families: Vec<String>,
    pub kmax: u32,
    pub seed: u64,
    pub formulas: Vec<FormulaId>,
    pub include_below_kmin: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaSummary {
    pub formula: FormulaId,
    pub passes: usize,
    pub fails: usize,
    pub smallest_counterexample: Option<VerificationRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub suite: SuiteDescription,
    pub records: Vec<VerificationRecord>,
    pub summary: Vec<FormulaSummary>,
    pub skipped: Vec<Skip>,
}

impl AuditReport {
    /// In-domain mismatches across the whole report.
    pub fn mismatch_count(&self) -> usize {
        self.summary.iter().map(|s| s.fails).sum()
    }

    pub fn all_matched(&self) -> bool {
        self.mismatch_count() == 0
    }

    pub fn summary_for(&self, id: FormulaId) -> Option<&FormulaSummary> {
        self.summary.iter().find(|s| s.formula == id)
    }

    pub fn records_for(&self, id: FormulaId) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(move |r| r.formula == id)
    }
}

/// Runs every applicable (formula, graph, k) triple of `suite`.
///
/// Records are ordered by formula (catalog order), then suite graph, then k.
pub fn run_audit(suite: &SuiteSpec) -> Result<AuditReport> {
    if suite.formulas.is_empty() {
        return Err(Error::EmptySuite("no formulas selected".into()));
    }
    if suite.families.is_empty() {
        return Err(Error::EmptySuite("no graph families selected".into()));
    }
    let mut formulas = suite.formulas.clone();
    formulas.sort();
    formulas.dedup();

    let (graphs, mut skipped) = build_suite_graphs(&suite.families)?;
    let mut caches: Vec<DerivedCache<'_>> =
        graphs.iter().map(|g| DerivedCache::new(&g.graph)).collect();

    let mut records = Vec::new();
    for &id in &formulas {
        for (sg, cache) in graphs.iter().zip(caches.iter_mut()) {
            if id.is_regular() && sg.graph.regular_degree().is_none() {
                continue;
            }
            let first_k = if suite.include_below_kmin {
                if id.is_recurrence() {
                    1
                } else {
                    0
                }
            } else {
                id.k_min()
            };
            for k in first_k..=suite.kmax {
                match verify_cached(cache, id, &sg.descriptor, k, suite.include_below_kmin) {
                    Ok(record) => records.push(record),
                    Err(s) => skipped.push(s),
                }
            }
        }
    }

    let summary = formulas.iter().map(|&id| summarize(id, &records)).collect();

    Ok(AuditReport {
        suite: SuiteDescription {
            families: graphs.iter().map(|g| g.descriptor.clone()).collect(),
            kmax: suite.kmax,
            seed: suite.seed,
            formulas,
            include_below_kmin: suite.include_below_kmin,
        },
        records,
        summary,
        skipped,
    })
}

fn summarize(id: FormulaId, records: &[VerificationRecord]) -> FormulaSummary {
    let in_domain = records.iter().filter(|r| r.formula == id && r.in_domain);
    let (mut passes, mut fails) = (0, 0);
    for r in in_domain {
        if r.matched {
            passes += 1;
        } else {
            fails += 1;
        }
    }
    FormulaSummary {
        formula: id,
        passes,
        fails,
        smallest_counterexample: smallest_in(records, id).cloned(),
    }
}

fn smallest_in(records: &[VerificationRecord], id: FormulaId) -> Option<&VerificationRecord> {
    // records are already in suite order, and min_by_key keeps the first minimum
    records
        .iter()
        .filter(|r| r.formula == id && r.in_domain && !r.matched)
        .min_by_key(|r| (r.n, r.k))
}

/// The in-domain failing record of `id` minimizing `(n, k)`, ties broken by
/// suite order; `None` if `id` passed everywhere.
pub fn smallest_counterexample(
    report: &AuditReport,
    id: FormulaId,
) -> Result<Option<&VerificationRecord>> {
    if !report.suite.formulas.contains(&id) {
        return Err(Error::UnknownFormula(format!(
            "{id} is not part of this report"
        )));
    }
    Ok(smallest_in(&report.records, id))
}

/// A known discrepancy and, where one follows from the degree laws, the
/// corrected right-hand side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub formula: FormulaId,
    pub note: &'static str,
    pub corrected: Option<&'static str>,
}

pub fn errata() -> Vec<Erratum> {
    use IndexKind::*;
    let e = |block, kind, note, corrected| Erratum {
        formula: FormulaId::new(block, kind),
        note,
        corrected,
    };
    vec![
        e(
            Block::SemiTotalTheorem,
            PI2,
            "product over vertices of d^d is PI2(G), not PI1(G); wrong whenever PI1(G) != PI2(G)",
            Some("4^(km) (k+1)^(2m(k+1)) PI2(G)^(k+1)"),
        ),
        e(
            Block::SemiTotalTheorem,
            SDD,
            "each original vertex has k*d(v) new neighbours, not d(v); exact only at k = 1",
            Some("SDD(G) + (1/2)k(k+1)M1(G) + 2kn/(k+1)"),
        ),
        e(
            Block::SubdivisionRecurrence,
            M2,
            "needs T2.2 at k-1, which fails at k-1 = 0; holds for k >= 2",
            None,
        ),
        e(
            Block::SubdivisionRecurrence,
            HM,
            "needs T2.6 at k-1, which fails at k-1 = 0; holds for k >= 2",
            None,
        ),
        e(
            Block::SubdivisionRecurrence,
            SDD,
            "needs T2.7 at k-1, which fails at k-1 = 0; holds for k >= 2",
            None,
        ),
        e(
            Block::SemiTotalRecurrence,
            PI2,
            "inconsistent with the Pi2 law for R_k",
            Some("4^m (k+1)^(2m(k+1)) k^(-2mk) PI2(G) PI2(R_{k-1}(G))"),
        ),
        e(
            Block::SemiTotalRecurrence,
            HM,
            "coefficient of HM(G) is (k+1)^2 - k^2 = 2k+1",
            Some("HM(R_{k-1}(G)) + (2k+1)HM(G) + k(3k+1)F(G) + 8kM1(G) + 8m"),
        ),
        e(
            Block::SemiTotalRecurrence,
            SDD,
            "inherits the T2.14 error",
            Some("SDD(R_{k-1}(G)) + kM1(G) + 2n/(k(k+1))"),
        ),
        e(
            Block::SemiTotalRegular,
            F,
            "(k+1) should be cubed",
            Some("nr^3(k+1)^3 + 4nkr"),
        ),
        e(
            Block::SemiTotalRegular,
            PI1,
            "PI1 of an r-regular graph is r^(2n)",
            Some("2^(knr) r^(2n) (k+1)^(2n)"),
        ),
        e(
            Block::SemiTotalRegular,
            HM,
            "HM(G) = 2nr^3 for r-regular G; printed term 4nr^2 agrees only at r = 2",
            Some("2nr^3(k+1)^2 + nr^3 k(k+1)^2 + 4nr^2 k(k+1) + 4nrk"),
        ),
        e(
            Block::SemiTotalRegular,
            SDD,
            "inherits the T2.14 error and drops SDD(G) = nr",
            Some("nr + (1/2)k(k+1)nr^2 + 2kn/(k+1)"),
        ),
    ]
}

/// Evaluates the corrected right-hand side of an erratum, if there is one.
pub fn corrected_prediction(id: FormulaId, ctx: &FormulaContext) -> Option<Result<ExactNumber>> {
    use IndexKind::*;
    let n = ctx.n;
    let m = ctx.m;
    let k = ctx.k as u64;
    let num = ExactNumber::from;
    let half = ExactNumber::ratio(1, 2).unwrap();
    let pow = |b: u64, e: i64| num(b).pow(e);
    let eval = || -> Result<Option<ExactNumber>> {
        let base = ctx.base.as_ref();
        let need_base = || base.ok_or_else(|| Error::MissingBase(id.to_string()));
        let need_prev = || {
            ctx.prev
                .as_ref()
                .ok_or_else(|| Error::MissingPrevious(id.to_string()))
        };
        let need_r = || {
            ctx.r
                .ok_or_else(|| Error::MissingRegularDegree(id.to_string()))
        };
        Ok(Some(match (id.block, id.kind) {
            (Block::SemiTotalTheorem, PI2) => {
                let g = need_base()?;
                pow(4, (k * m) as i64)?
                    * pow(k + 1, (2 * m * (k + 1)) as i64)?
                    * g.pi2.pow(k as i64 + 1)?
            }
            (Block::SemiTotalTheorem, SDD) => {
                let g = need_base()?;
                &g.sdd
                    + &(half.clone() * num(k * (k + 1)) * &g.m1)
                    + ExactNumber::ratio(2 * k * n, k + 1)?
            }
            (Block::SemiTotalRecurrence, PI2) => {
                let (g, prev) = (need_base()?, need_prev()?);
                pow(4, m as i64)?
                    * pow(k + 1, (2 * m * (k + 1)) as i64)?
                    * pow(k, -((2 * m * k) as i64))?
                    * &g.pi2
                    * &prev.pi2
            }
            (Block::SemiTotalRecurrence, HM) => {
                let (g, prev) = (need_base()?, need_prev()?);
                &prev.hm
                    + &(num(2 * k + 1) * &g.hm)
                    + num(k * (3 * k + 1)) * &g.f
                    + num(8 * k) * &g.m1
                    + num(8 * m)
            }
            (Block::SemiTotalRecurrence, SDD) => {
                let (g, prev) = (need_base()?, need_prev()?);
                &prev.sdd + &(num(k) * &g.m1) + ExactNumber::ratio(2 * n, k * (k + 1))?
            }
            (Block::SemiTotalRegular, F) => {
                let r = need_r()?;
                num(n * r * r * r * (k + 1) * (k + 1) * (k + 1)) + num(4 * n * k * r)
            }
            (Block::SemiTotalRegular, PI1) => {
                let r = need_r()?;
                pow(2, (k * n * r) as i64)? * pow(r, 2 * n as i64)? * pow(k + 1, 2 * n as i64)?
            }
            (Block::SemiTotalRegular, HM) => {
                let r = need_r()?;
                let k1 = k + 1;
                num(2 * n * r * r * r * k1 * k1)
                    + num(n * r * r * r * k * k1 * k1)
                    + num(4 * n * r * r * k * k1)
                    + num(4 * n * r * k)
            }
            (Block::SemiTotalRegular, SDD) => {
                let r = need_r()?;
                num(n * r)
                    + half.clone() * num(k * (k + 1) * n * r * r)
                    + ExactNumber::ratio(2 * k * n, k + 1)?
            }
            _ => return Ok(None),
        }))
    };
    eval().transpose()
}
