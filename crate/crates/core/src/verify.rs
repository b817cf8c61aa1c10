//! Exhaustive certification of the bounds over every labeled graph of a given order and size.
//!
//! The graphs of a cell `(n, m)` are the `m`-combinations of the `C(n,2)`
//! vertex pairs, taken in lex order of combinations over the pairs in lex
//! order. Rank 0 is therefore `L(n, m)` itself. Parallel runs split the rank
//! space into contiguous intervals and merge per-interval summaries, which is
//! associative and commutative, so certificates do not depend on the job count.

use std::ops::Range;

use rayon::prelude::*;

use crate::arith::{binom, binom_u128, Count};
use crate::bounds::{alpha_upper, ir_upper_lex};
use crate::enumerate::{independence_profile, small_profile, SMALL_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lexgraph::{build_lex_graph, lex_pairs};
use crate::sds::check_edge_count;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest number of graphs a single cell may enumerate.
    pub budget: u64,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }
}

/// `C(C(n,2), m)`, the number of labeled graphs in the cell.
pub fn graph_count(n: usize, m: u64) -> Result<Count> {
    let pairs = check_edge_count(n as u64, m, 0)?;
    Ok(binom(pairs, m))
}

fn budgeted_count(n: usize, m: u64, budget: u64) -> Result<u64> {
    let required = graph_count(n, m)?;
    match u64::try_from(&required) {
        Ok(count) if count <= budget => Ok(count),
        _ => Err(Error::BudgetExceeded { required, budget }),
    }
}

fn slot_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The combination of rank `rank` in lex order among `m`-subsets of `0..slots`.
fn unrank_combination(slots: usize, m: usize, mut rank: u64) -> Vec<usize> {
    let mut combo = Vec::with_capacity(m);
    let mut next = 0;
    for i in 0..m {
        loop {
            // rank stays below C(slots, m), which bounds every term here
            let with_next = binom_u128((slots - next - 1) as u64, (m - i - 1) as u64)
                .expect("sub-binomial of an in-budget count");
            if (rank as u128) < with_next {
                break;
            }
            rank -= with_next as u64;
            next += 1;
        }
        combo.push(next);
        next += 1;
    }
    combo
}

fn advance_combination(combo: &mut [usize], slots: usize) -> bool {
    let m = combo.len();
    for i in (0..m).rev() {
        if combo[i] < slots - m + i {
            combo[i] += 1;
            for j in i + 1..m {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `visit` with each pair-slot combination whose rank lies in `ranks`.
fn visit_ranks<F: FnMut(&[usize])>(n: usize, m: u64, ranks: Range<u64>, mut visit: F) {
    if ranks.is_empty() {
        return;
    }
    let slots = slot_count(n);
    let mut combo = unrank_combination(slots, m as usize, ranks.start);
    for _ in ranks {
        visit(&combo);
        advance_combination(&mut combo, slots);
    }
}

fn pair_table(n: usize) -> Vec<(usize, usize)> {
    lex_pairs(n).map(|(i, j)| (i - 1, j - 1)).collect()
}

/// Visits every labeled simple graph on `1..=n` with exactly `m` edges once,
/// in a fixed order, and returns how many were visited.
pub fn for_each_graph<F: FnMut(&Graph)>(n: usize, m: u64, budget: u64, mut visitor: F) -> Result<u64> {
    let total = budgeted_count(n, m, budget)?;
    let pairs = pair_table(n);
    let mut g = Graph::empty(n);
    visit_ranks(n, m, 0..total, |combo| {
        g.clear();
        for &slot in combo {
            let (a, b) = pairs[slot];
            g.set_pair(a, b);
        }
        visitor(&g);
    });
    Ok(total)
}

/// The graph at a given rank in the visiting order of [`for_each_graph`].
pub fn graph_at_rank(n: usize, m: u64, rank: u64) -> Result<Graph> {
    let total = graph_count(n, m)?;
    if Count::from(rank) >= total {
        return Err(Error::BudgetExceeded {
            required: Count::from(rank) + 1u32,
            budget: u64::try_from(&total).unwrap_or(u64::MAX),
        });
    }
    let pairs = pair_table(n);
    let combo = unrank_combination(pairs.len(), m as usize, rank);
    let mut g = Graph::empty(n);
    for slot in combo {
        g.set_pair(pairs[slot].0, pairs[slot].1);
    }
    Ok(g)
}

/// Largest value seen, how many graphs reach it, and the lowest rank that does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Extremum {
    value: u128,
    attainers: u64,
    first_rank: u64,
}

impl Extremum {
    const NONE: Extremum = Extremum {
        value: 0,
        attainers: 0,
        first_rank: u64::MAX,
    };

    fn observe(&mut self, value: u128, rank: u64) {
        if value > self.value || self.attainers == 0 {
            *self = Extremum {
                value,
                attainers: 1,
                first_rank: rank,
            };
        } else if value == self.value {
            self.attainers += 1;
            self.first_rank = self.first_rank.min(rank);
        }
    }

    fn merge(self, other: Extremum) -> Extremum {
        if other.attainers == 0 {
            return self;
        }
        if self.attainers == 0 {
            return other;
        }
        match self.value.cmp(&other.value) {
            std::cmp::Ordering::Greater => self,
            std::cmp::Ordering::Less => other,
            std::cmp::Ordering::Equal => Extremum {
                value: self.value,
                attainers: self.attainers + other.attainers,
                first_rank: self.first_rank.min(other.first_rank),
            },
        }
    }
}

/// Per-cell maxima of alpha, of every `i_r`, and of the total count.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CellSurvey {
    graphs: u64,
    alpha: Extremum,
    sizes: Vec<Extremum>,
    total: Extremum,
}

impl CellSurvey {
    fn empty(n: usize) -> Self {
        CellSurvey {
            graphs: 0,
            alpha: Extremum::NONE,
            sizes: vec![Extremum::NONE; n + 1],
            total: Extremum::NONE,
        }
    }

    fn merge(mut self, other: CellSurvey) -> CellSurvey {
        self.graphs += other.graphs;
        self.alpha = self.alpha.merge(other.alpha);
        for (a, b) in self.sizes.iter_mut().zip(other.sizes) {
            *a = a.merge(b);
        }
        self.total = self.total.merge(other.total);
        self
    }
}

fn survey_ranks(n: usize, m: u64, ranks: Range<u64>, pairs: &[(usize, usize)]) -> CellSurvey {
    let mut survey = CellSurvey::empty(n);
    let mut rank = ranks.start;
    let mut rows = [0u64; SMALL_ORDER];
    let mut counts = [0u128; SMALL_ORDER + 1];
    visit_ranks(n, m, ranks, |combo| {
        rows[..n].fill(0);
        for &slot in combo {
            let (a, b) = pairs[slot];
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        counts[..=n].fill(0);
        small_profile(&rows[..n], &mut counts[..=n]);

        let alpha = counts[..=n].iter().rposition(|&c| c > 0).unwrap_or(0);
        survey.alpha.observe(alpha as u128, rank);
        for (r, ext) in survey.sizes.iter_mut().enumerate() {
            ext.observe(counts[r], rank);
        }
        survey.total.observe(counts[..=n].iter().sum(), rank);
        survey.graphs += 1;
        rank += 1;
    });
    survey
}

fn with_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return work();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

fn survey_cell(n: usize, m: u64, config: &VerifyConfig) -> Result<CellSurvey> {
    if n > SMALL_ORDER {
        return Err(Error::OrderTooLarge {
            n: n as u64,
            max: SMALL_ORDER as u64,
        });
    }
    let total = budgeted_count(n, m, config.budget)?;
    let pairs = pair_table(n);
    if config.jobs <= 1 {
        return Ok(survey_ranks(n, m, 0..total, &pairs));
    }
    let chunk = (total / (config.jobs as u64 * 8)).max(4096);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    Ok(starts
        .par_iter()
        .map(|&start| survey_ranks(n, m, start..(start + chunk).min(total), &pairs))
        .reduce(|| CellSurvey::empty(n), CellSurvey::merge))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertificateKind {
    /// Independence number against `alpha_u`.
    Alpha,
    /// `i_r` against the lex-form bound.
    IndependentSets { r: u64 },
    /// Total number of independent sets against that of `L(n, m)`.
    TotalIndependentSets,
}

impl CertificateKind {
    pub fn name(&self) -> &'static str {
        match self {
            CertificateKind::Alpha => "alpha",
            CertificateKind::IndependentSets { .. } => "i_r",
            CertificateKind::TotalIndependentSets => "total",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessCertificate {
    pub kind: CertificateKind,
    pub n: u64,
    pub m: u64,
    pub bound: Count,
    pub max_observed: Count,
    /// The statistic evaluated on `L(n, m)`.
    pub lex_value: Count,
    pub attained_by_lex: bool,
    /// Graphs reaching `max_observed`.
    pub extremal_graph_count: u64,
    pub graphs_checked: u64,
    /// Edges of the lowest-rank graph exceeding the bound, if any.
    pub counterexample: Option<Vec<(usize, usize)>>,
}

impl SharpnessCertificate {
    pub fn r(&self) -> Option<u64> {
        match self.kind {
            CertificateKind::IndependentSets { r } => Some(r),
            _ => None,
        }
    }

    pub fn valid(&self) -> bool {
        self.max_observed <= self.bound
    }

    pub fn sharp(&self) -> bool {
        self.max_observed == self.bound
    }

    pub fn passed(&self) -> bool {
        self.valid() && self.sharp() && self.attained_by_lex && self.lex_value == self.bound
    }
}

fn certify(
    kind: CertificateKind,
    n: usize,
    m: u64,
    bound: Count,
    lex_value: Count,
    ext: Extremum,
    graphs: u64,
) -> Result<SharpnessCertificate> {
    let max_observed = Count::from(ext.value);
    let counterexample = if max_observed > bound {
        Some(graph_at_rank(n, m, ext.first_rank)?.edges().collect())
    } else {
        None
    };
    Ok(SharpnessCertificate {
        kind,
        n: n as u64,
        m,
        attained_by_lex: lex_value == max_observed,
        bound,
        max_observed,
        lex_value,
        extremal_graph_count: ext.attainers,
        graphs_checked: graphs,
        counterexample,
    })
}

fn certificates_for(
    n: usize,
    m: u64,
    kinds: &[CertificateKind],
    config: &VerifyConfig,
) -> Result<Vec<SharpnessCertificate>> {
    let survey = with_pool(config.jobs, || survey_cell(n, m, config))?;
    let lex = independence_profile(&build_lex_graph(n, m)?);
    kinds
        .iter()
        .map(|&kind| {
            let (bound, lex_value, ext) = match kind {
                CertificateKind::Alpha => (
                    Count::from(alpha_upper(n as u64, m)?),
                    Count::from(lex.independence_number()),
                    survey.alpha,
                ),
                CertificateKind::IndependentSets { r } => {
                    if r > n as u64 {
                        return Err(Error::SizeExceedsOrder { r, n: n as u64 });
                    }
                    (ir_upper_lex(n as u64, m, r)?, lex.get(r as usize), survey.sizes[r as usize])
                }
                CertificateKind::TotalIndependentSets => (lex.total(), lex.total(), survey.total),
            };
            certify(kind, n, m, bound, lex_value, ext, survey.graphs)
        })
        .collect()
}

/// Maximum independence number over the cell against `alpha_u(n, m)`.
pub fn verify_alpha_sharp(n: usize, m: u64, config: &VerifyConfig) -> Result<SharpnessCertificate> {
    Ok(certificates_for(n, m, &[CertificateKind::Alpha], config)?.remove(0))
}

/// Maximum `i_r` over the cell against the lex-form bound, `2 <= r <= n`.
pub fn verify_ir_sharp(n: usize, m: u64, r: u64, config: &VerifyConfig) -> Result<SharpnessCertificate> {
    if r < 2 {
        return Err(Error::SizeOutOfRange { r, min: 2 });
    }
    Ok(certificates_for(n, m, &[CertificateKind::IndependentSets { r }], config)?.remove(0))
}

/// Whether `L(n, m)` has the most independent sets in total over the cell.
pub fn verify_total_count_extremality(
    n: usize,
    m: u64,
    config: &VerifyConfig,
) -> Result<SharpnessCertificate> {
    Ok(certificates_for(n, m, &[CertificateKind::TotalIndependentSets], config)?.remove(0))
}

/// Every certificate for one cell from a single enumeration: alpha, `i_r` for
/// `2 <= r <= min(r_max, n)`, then the total count.
pub fn verify_cell(
    n: usize,
    m: u64,
    r_max: u64,
    config: &VerifyConfig,
) -> Result<Vec<SharpnessCertificate>> {
    let mut kinds = vec![CertificateKind::Alpha];
    kinds.extend((2..=r_max.min(n as u64)).map(|r| CertificateKind::IndependentSets { r }));
    kinds.push(CertificateKind::TotalIndependentSets);
    certificates_for(n, m, &kinds, config)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellOutcome {
    Certified {
        n: u64,
        m: u64,
        certificates: Vec<SharpnessCertificate>,
    },
    Refused {
        n: u64,
        m: u64,
        reason: Error,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RangeSummary {
    pub cells_checked: u64,
    pub cells_refused: u64,
    pub certificates: u64,
    pub failures: u64,
    pub graphs_checked: u64,
}

impl RangeSummary {
    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }

    pub fn complete(&self) -> bool {
        self.cells_refused == 0
    }
}

/// Runs [`verify_cell`] for every `n` in `1..=n_max` and every `m`, in order,
/// reporting each cell to `on_cell`. Cells beyond the budget are refused, not failed.
pub fn verify_range<F: FnMut(&CellOutcome)>(
    n_max: u64,
    r_max: u64,
    config: &VerifyConfig,
    mut on_cell: F,
) -> Result<RangeSummary> {
    let mut summary = RangeSummary::default();
    for n in 1..=n_max {
        let pairs = check_edge_count(n, 0, 0)?;
        for m in 0..=pairs {
            let outcome = match verify_cell(n as usize, m, r_max, config) {
                Ok(certificates) => {
                    summary.cells_checked += 1;
                    summary.certificates += certificates.len() as u64;
                    summary.failures += certificates.iter().filter(|c| !c.passed()).count() as u64;
                    summary.graphs_checked += certificates[0].graphs_checked;
                    CellOutcome::Certified { n, m, certificates }
                }
                Err(reason @ (Error::BudgetExceeded { .. } | Error::OrderTooLarge { .. })) => {
                    summary.cells_refused += 1;
                    CellOutcome::Refused { n, m, reason }
                }
                Err(e) => return Err(e),
            };
            on_cell(&outcome);
        }
    }
    Ok(summary)
}
