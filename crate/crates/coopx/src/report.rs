//! Gap and approximation reporting: run schedulers, bounds, and (optionally)
//! the brute-force oracle on an instance, cross-check every relation that
//! must hold between them, and render the result as JSON, human text, or a
//! sweep CSV row.
//!
//! A report is a self-auditing document: the `checks` list records each
//! invariant verified (schedules complete, bounds below schedule lengths,
//! oracle sandwich, ratio at least one) and `all_checks_passed` is the single
//! bit a pipeline gates on. All comparisons use exact rationals; decimals are
//! rendering only.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::bounds::{lower_bounds, LowerBoundReport};
use crate::domset::EXACT_SIZE_LIMIT;
use crate::error::{Error, Result};
use crate::generators::counterexample_parts;
use crate::gf::PrimeField;
use crate::graph::Graph;
use crate::instance::{Instance, Tag};
use crate::lp::{build_cover_program, solve_lp, CoverVariant};
use crate::rational::{decimal6, rat, rat_int, JsonRational, Rat};
use crate::scheduler::{
    baseline_schedule, clique_coded_schedule, counterexample_schedule, refined_schedule, Schedule,
    SetGrade,
};
use crate::simulator::{brute_force_nc, verify_complete, OracleLimits, OracleMode};

/// The schedulers a report can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    BaselineGreedy,
    BaselineExact,
    RefinedGreedy,
    RefinedExact,
    CliqueCoded,
    Counterexample,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::BaselineGreedy,
        Algorithm::BaselineExact,
        Algorithm::RefinedGreedy,
        Algorithm::RefinedExact,
        Algorithm::CliqueCoded,
        Algorithm::Counterexample,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Algorithm::BaselineGreedy => "baseline_greedy",
            Algorithm::BaselineExact => "baseline_exact",
            Algorithm::RefinedGreedy => "refined_greedy",
            Algorithm::RefinedExact => "refined_exact",
            Algorithm::CliqueCoded => "clique_coded",
            Algorithm::Counterexample => "counterexample",
        }
    }

    pub fn parse(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.label() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Algorithm::ALL.iter().map(|a| a.label()).collect();
                Error::InvalidParameter(format!(
                    "unknown algorithm {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Knobs for [`instance_report`].
#[derive(Debug, Clone, Default)]
pub struct ReportOptions {
    /// Exactly these algorithms, or `None` to auto-select: greedy schedulers
    /// always, exact ones on small graphs, the special constructions when
    /// they apply.
    pub algorithms: Option<Vec<Algorithm>>,
    pub with_oracle: bool,
    /// Override one or both of the oracle's per-mode default size caps.
    pub oracle_limit_n: Option<usize>,
    pub oracle_limit_k: Option<usize>,
    /// Replay field for the constructed schedules (default 2). The
    /// constructions only use 0/1 coefficients, so any prime works.
    pub q: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceSummary {
    pub n: usize,
    pub k: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub disjoint: bool,
    pub d_max: usize,
    pub d_bar: JsonRational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag: Option<Tag>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelayReport {
    pub dominating_size: usize,
    pub connected_size: usize,
    pub connect_ratio: JsonRational,
    /// The connected/plain ratio crossed 4/3 — worth a second look, since no
    /// instance in this corpus has shown the gap above that line.
    pub exceeds_four_thirds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScheduleReport {
    pub algorithm: String,
    pub length: usize,
    pub complete: bool,
    /// True when every round broadcasts a single plain packet.
    pub unit_broadcasts_only: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relay: Option<RelayReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundJson {
    pub label: String,
    pub applicable: bool,
    pub value: JsonRational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerBoundsJson {
    pub entries: Vec<BoundJson>,
    pub best: JsonRational,
    pub best_label: String,
    pub best_rounds: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncoded_rounds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coded_rounds: Option<usize>,
    /// Why a requested oracle did not run (size limits).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub m: usize,
    pub k: usize,
    /// Closed-cover optimum of the disjoint union of the small cliques.
    pub small_part_ds_f: JsonRational,
    /// Closed-cover optimum of the big clique on its own.
    pub big_part_ds_f: JsonRational,
    pub parts_total: JsonRational,
    pub whole_ds_f: JsonRational,
    /// What the regular-graphs-only average bound would claim here.
    pub regular_bound_would_be: JsonRational,
    /// The claim exceeds an achieved schedule length — applying the bound to
    /// this irregular graph would be unsound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular_bound_exceeds_best_schedule: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub format: String,
    pub kind: String,
    pub instance: InstanceSummary,
    pub lower_bounds: LowerBoundsJson,
    pub schedules: Vec<ScheduleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    /// Best schedule length over best lower bound; exact, with decimals for
    /// reading. Absent when the best bound is zero or nothing was scheduled.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<JsonRational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleReport>,
    pub checks: Vec<Check>,
    pub all_checks_passed: bool,
}

impl Report {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn schedule(&self, algorithm: &str) -> Option<&ScheduleReport> {
        self.schedules.iter().find(|s| s.algorithm == algorithm)
    }
}

const FOUR_THIRDS_NUM: i64 = 4;
const FOUR_THIRDS_DEN: i64 = 3;

fn bounds_to_json(report: &LowerBoundReport) -> Result<LowerBoundsJson> {
    Ok(LowerBoundsJson {
        entries: report
            .entries
            .iter()
            .map(|e| {
                Ok(BoundJson {
                    label: e.label.to_string(),
                    applicable: e.applicable,
                    value: JsonRational::from_rat(&e.value)?,
                    note: e.note.clone(),
                })
            })
            .collect::<Result<_>>()?,
        best: JsonRational::from_rat(&report.best)?,
        best_label: report.best_label.to_string(),
        best_rounds: report.best_rounds,
    })
}

fn is_unit_only(schedule: &Schedule) -> bool {
    schedule.rounds.iter().all(|b| {
        b.coeffs.iter().filter(|&&c| c != 0).count() == 1 && b.coeffs.iter().all(|&c| c <= 1)
    })
}

/// Auto-selection: greedy schedulers always; exact ones when the exact
/// searches are tractable; the special constructions when they apply.
fn auto_algorithms(inst: &Instance) -> Vec<Algorithm> {
    let mut algos = vec![Algorithm::BaselineGreedy, Algorithm::RefinedGreedy];
    if inst.n() <= EXACT_SIZE_LIMIT {
        algos.push(Algorithm::BaselineExact);
        algos.push(Algorithm::RefinedExact);
    }
    match clique_coded_schedule(inst) {
        Ok(_) => algos.push(Algorithm::CliqueCoded),
        Err(Error::NotAClique { .. }) | Err(Error::TooManyMissing { .. }) => {}
        Err(_) => {}
    }
    if matches!(inst.tag(), Some(Tag::Counterexample { .. })) {
        algos.push(Algorithm::Counterexample);
    }
    algos
}

fn run_algorithm(inst: &Instance, algo: Algorithm) -> Result<(Schedule, Option<RelayReport>)> {
    match algo {
        Algorithm::BaselineGreedy | Algorithm::BaselineExact => {
            let grade = if algo == Algorithm::BaselineGreedy {
                SetGrade::Greedy
            } else {
                SetGrade::Exact
            };
            let out = baseline_schedule(inst, grade)?;
            let relay = RelayReport {
                dominating_size: out.dominating.len(),
                connected_size: out.connected.len(),
                connect_ratio: JsonRational::from_rat(&out.connect_ratio)?,
                exceeds_four_thirds: out.connect_ratio > rat(FOUR_THIRDS_NUM, FOUR_THIRDS_DEN),
            };
            Ok((out.schedule, Some(relay)))
        }
        Algorithm::RefinedGreedy | Algorithm::RefinedExact => {
            let grade = if algo == Algorithm::RefinedGreedy {
                SetGrade::Greedy
            } else {
                SetGrade::Exact
            };
            Ok((refined_schedule(inst, grade)?.schedule, None))
        }
        Algorithm::CliqueCoded => Ok((clique_coded_schedule(inst)?, None)),
        Algorithm::Counterexample => Ok((counterexample_schedule(inst)?, None)),
    }
}

/// Run the requested pipeline on one instance and assemble the report.
pub fn instance_report(inst: &Instance, opts: &ReportOptions) -> Result<Report> {
    let stats = inst.graph().degree_stats();
    let summary = InstanceSummary {
        n: inst.n(),
        k: inst.k(),
        edge_count: inst.graph().edges().len(),
        min_degree: stats.min,
        max_degree: stats.max,
        regular: stats.is_regular,
        disjoint: inst.is_disjoint(),
        d_max: inst.d_max(),
        d_bar: JsonRational::from_rat(&inst.d_bar())?,
        tag: inst.tag(),
    };

    let bounds = lower_bounds(inst)?;

    let q = opts.q.unwrap_or(crate::scheduler::DEFAULT_FIELD);
    PrimeField::new(q)?;
    let algorithms = match &opts.algorithms {
        Some(list) => list.clone(),
        None => auto_algorithms(inst),
    };
    let mut schedules: Vec<(Schedule, ScheduleReport)> = Vec::new();
    for algo in algorithms {
        if schedules.iter().any(|(_, r)| r.algorithm == algo.label()) {
            continue;
        }
        let (mut schedule, relay) = run_algorithm(inst, algo)?;
        schedule.q = q;
        let complete = verify_complete(inst, &schedule)?.complete;
        let entry = ScheduleReport {
            algorithm: algo.label().to_string(),
            length: schedule.len(),
            complete,
            unit_broadcasts_only: is_unit_only(&schedule),
            relay,
        };
        schedules.push((schedule, entry));
    }

    let oracle = if opts.with_oracle {
        let mut report = OracleReport {
            uncoded_rounds: None,
            coded_rounds: None,
            error: None,
        };
        let mut refusals = Vec::new();
        for mode in [OracleMode::Uncoded, OracleMode::Coded] {
            let defaults = mode.default_limits();
            let limits = OracleLimits {
                max_n: opts.oracle_limit_n.unwrap_or(defaults.max_n),
                max_k: opts.oracle_limit_k.unwrap_or(defaults.max_k),
            };
            match brute_force_nc(inst, mode, Some(limits)) {
                Ok((rounds, _)) => match mode {
                    OracleMode::Uncoded => report.uncoded_rounds = Some(rounds),
                    OracleMode::Coded => report.coded_rounds = Some(rounds),
                },
                Err(e @ Error::SizeLimit { .. }) => refusals.push(e.to_string()),
                Err(e) => return Err(e),
            }
        }
        if !refusals.is_empty() {
            report.error = Some(refusals.join("; "));
        }
        Some(report)
    } else {
        None
    };

    let best_complete_length = schedules
        .iter()
        .filter(|(_, r)| r.complete)
        .map(|(_, r)| r.length)
        .min();
    let ratio = match (best_complete_length, bounds.best > Rat::zero()) {
        (Some(len), true) => {
            let r = rat_int(len as i64) / &bounds.best;
            Some(JsonRational::from_rat(&r)?)
        }
        _ => None,
    };

    let counterexample = if let Some(Tag::Counterexample { m, k }) = inst.tag() {
        let (small, big) = counterexample_parts(m, k)?;
        let small_ds_f = solve_lp(&build_cover_program(&small, CoverVariant::DsF)?)?.value;
        let big_ds_f = solve_lp(&build_cover_program(&big, CoverVariant::DsF)?)?.value;
        let whole_ds_f = solve_lp(&build_cover_program(inst.graph(), CoverVariant::DsF)?)?.value;
        let would_be = (rat_int(k as i64) - inst.d_bar()) * &whole_ds_f;
        let exceeds = best_complete_length.map(|len| would_be > rat_int(len as i64));
        Some(CounterexampleReport {
            m,
            k,
            small_part_ds_f: JsonRational::from_rat(&small_ds_f)?,
            big_part_ds_f: JsonRational::from_rat(&big_ds_f)?,
            parts_total: JsonRational::from_rat(&(&small_ds_f + &big_ds_f))?,
            whole_ds_f: JsonRational::from_rat(&whole_ds_f)?,
            regular_bound_would_be: JsonRational::from_rat(&would_be)?,
            regular_bound_exceeds_best_schedule: exceeds,
        })
    } else {
        None
    };

    let checks = run_checks(
        &bounds,
        &schedules,
        oracle.as_ref(),
        &ratio,
        &counterexample,
    );
    let all_checks_passed = checks.iter().all(|c| c.passed);

    Ok(Report {
        format: crate::io::FORMAT.to_string(),
        kind: "report".to_string(),
        instance: summary,
        lower_bounds: bounds_to_json(&bounds)?,
        schedules: schedules.into_iter().map(|(_, r)| r).collect(),
        oracle,
        ratio,
        counterexample,
        checks,
        all_checks_passed,
    })
}

fn run_checks(
    bounds: &LowerBoundReport,
    schedules: &[(Schedule, ScheduleReport)],
    oracle: Option<&OracleReport>,
    ratio: &Option<JsonRational>,
    counterexample: &Option<CounterexampleReport>,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: Option<String>| {
        checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        })
    };

    if !schedules.is_empty() {
        let incomplete: Vec<&str> = schedules
            .iter()
            .filter(|(_, r)| !r.complete)
            .map(|(_, r)| r.algorithm.as_str())
            .collect();
        push(
            "schedules_complete",
            incomplete.is_empty(),
            (!incomplete.is_empty()).then(|| format!("incomplete: {}", incomplete.join(", "))),
        );

        let mut bad = Vec::new();
        for entry in bounds.entries.iter().filter(|e| e.applicable) {
            for (_, r) in schedules.iter().filter(|(_, r)| r.complete) {
                if entry.value > rat_int(r.length as i64) {
                    bad.push(format!(
                        "{} = {} > {} ({})",
                        entry.label,
                        decimal6(&entry.value),
                        r.length,
                        r.algorithm
                    ));
                }
            }
        }
        push(
            "bounds_below_schedule_lengths",
            bad.is_empty(),
            (!bad.is_empty()).then(|| bad.join("; ")),
        );
    }

    if let Some(o) = oracle {
        let mut bad = Vec::new();
        if let (Some(c), Some(u)) = (o.coded_rounds, o.uncoded_rounds) {
            if c > u {
                bad.push(format!("coded {c} > uncoded {u}"));
            }
        }
        if let Some(c) = o.coded_rounds {
            if bounds.best > rat_int(c as i64) {
                bad.push(format!(
                    "best bound {} > coded optimum {c}",
                    decimal6(&bounds.best)
                ));
            }
            for (_, r) in schedules.iter().filter(|(_, r)| r.complete) {
                if c > r.length {
                    bad.push(format!(
                        "coded optimum {c} > {} ({})",
                        r.length, r.algorithm
                    ));
                }
            }
        } else if let Some(u) = o.uncoded_rounds {
            if bounds.best > rat_int(u as i64) {
                bad.push(format!(
                    "best bound {} > uncoded optimum {u}",
                    decimal6(&bounds.best)
                ));
            }
        }
        if let Some(u) = o.uncoded_rounds {
            for (_, r) in schedules
                .iter()
                .filter(|(_, r)| r.complete && r.unit_broadcasts_only)
            {
                if u > r.length {
                    bad.push(format!(
                        "uncoded optimum {u} > {} ({})",
                        r.length, r.algorithm
                    ));
                }
            }
        }
        if o.uncoded_rounds.is_some() || o.coded_rounds.is_some() {
            push(
                "oracle_sandwich",
                bad.is_empty(),
                (!bad.is_empty()).then(|| bad.join("; ")),
            );
        }
    }

    if let Some(r) = ratio {
        let value = r.to_rat();
        push(
            "ratio_at_least_one",
            value >= rat_int(1),
            (value < rat_int(1)).then(|| format!("ratio = {}", r.decimal)),
        );
    }

    if let Some(ce) = counterexample {
        let small = ce.small_part_ds_f.to_rat();
        let big = ce.big_part_ds_f.to_rat();
        let ok = small == rat_int(ce.m as i64) && big == rat_int(1);
        push(
            "counterexample_parts_match",
            ok,
            (!ok).then(|| {
                format!(
                    "small part {} (want {}), big part {} (want 1)",
                    ce.small_part_ds_f.decimal, ce.m, ce.big_part_ds_f.decimal
                )
            }),
        );
    }

    checks
}

/// Human-readable rendering of a report.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    let i = &report.instance;
    out.push_str(&format!(
        "instance: n={} k={} edges={} degrees {}..{}{} d_max={} d_bar={} ({}) disjoint={}\n",
        i.n,
        i.k,
        i.edge_count,
        i.min_degree,
        i.max_degree,
        if i.regular { " (regular)" } else { "" },
        i.d_max,
        fraction(&i.d_bar),
        i.d_bar.decimal,
        yes_no(i.disjoint),
    ));
    if let Some(tag) = &i.tag {
        out.push_str(&format!("tag: {}\n", tag_label(tag)));
    }

    out.push_str("lower bounds on rounds:\n");
    for e in &report.lower_bounds.entries {
        if e.applicable {
            out.push_str(&format!(
                "  {:<34} {} ({})\n",
                e.label,
                fraction(&e.value),
                e.value.decimal
            ));
        } else {
            out.push_str(&format!(
                "  {:<34} not applicable: {}\n",
                e.label,
                e.note.as_deref().unwrap_or("hypothesis fails")
            ));
        }
    }
    out.push_str(&format!(
        "  best: {} = {} ({}), so at least {} round(s)\n",
        report.lower_bounds.best_label,
        fraction(&report.lower_bounds.best),
        report.lower_bounds.best.decimal,
        report.lower_bounds.best_rounds
    ));

    if report.schedules.is_empty() {
        out.push_str("schedules: none requested\n");
    } else {
        out.push_str("schedules:\n");
        for s in &report.schedules {
            let mut line = format!(
                "  {:<18} length {:<4} {}",
                s.algorithm,
                s.length,
                if s.complete { "complete" } else { "INCOMPLETE" }
            );
            if let Some(relay) = &s.relay {
                line.push_str(&format!(
                    "  relay {} -> {} (ratio {}{})",
                    relay.dominating_size,
                    relay.connected_size,
                    relay.connect_ratio.decimal,
                    if relay.exceeds_four_thirds {
                        ", exceeds 4/3"
                    } else {
                        ""
                    }
                ));
            }
            line.push('\n');
            out.push_str(&line);
        }
    }

    if let Some(o) = &report.oracle {
        let fmt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        out.push_str(&format!(
            "oracle optima: uncoded {} coded {}\n",
            fmt(o.uncoded_rounds),
            fmt(o.coded_rounds)
        ));
        if let Some(e) = &o.error {
            out.push_str(&format!("oracle note: {e}\n"));
        }
    }

    if let Some(r) = &report.ratio {
        out.push_str(&format!(
            "approximation ratio (best schedule / best bound): {} ({})\n",
            fraction(r),
            r.decimal
        ));
    }

    if let Some(ce) = &report.counterexample {
        out.push_str(&format!(
            "construction parts: small cliques ds_f {} + big clique ds_f {} = {} (whole graph {})\n",
            ce.small_part_ds_f.decimal,
            ce.big_part_ds_f.decimal,
            ce.parts_total.decimal,
            ce.whole_ds_f.decimal
        ));
        out.push_str(&format!(
            "regular-only average bound would claim {} rounds{}\n",
            ce.regular_bound_would_be.decimal,
            match ce.regular_bound_exceeds_best_schedule {
                Some(true) => " — EXCEEDS an achieved schedule; the regularity hypothesis matters",
                Some(false) => " (not violated here)",
                None => "",
            }
        ));
    }

    out.push_str("checks:\n");
    for c in &report.checks {
        out.push_str(&format!(
            "  [{}] {}{}\n",
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.detail
                .as_deref()
                .map(|d| format!(" — {d}"))
                .unwrap_or_default()
        ));
    }
    out.push_str(&format!(
        "result: {}\n",
        if report.all_checks_passed {
            "all checks passed"
        } else {
            "CHECKS FAILED"
        }
    ));
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn fraction(r: &JsonRational) -> String {
    if r.den == 1 {
        r.num.to_string()
    } else {
        format!("{}/{}", r.num, r.den)
    }
}

fn tag_label(tag: &Tag) -> String {
    match tag {
        Tag::Counterexample { m, k } => format!("counterexample(m={m}, k={k})"),
        Tag::Hardness { base_n, k } => format!("hardness(base_n={base_n}, k={k})"),
    }
}

/// Report for a graph without holdings: covering optima and dominating-set
/// sizes, greedy and (when tractable) exact.
#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub format: String,
    pub kind: String,
    pub n: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub ds_f: JsonRational,
    /// Absent when some vertex has no neighbor (open covers infeasible).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ds_plus_f: Option<JsonRational>,
    pub greedy_ds: usize,
    pub greedy_cds: usize,
    pub connect_ratio: JsonRational,
    pub exceeds_four_thirds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_ds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_cds: Option<usize>,
}

impl GraphReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}

pub fn graph_report(g: &Graph) -> Result<GraphReport> {
    use crate::domset::{connect_set, exact_set, greedy_dominating_set, SetKind};

    let stats = g.degree_stats();
    let ds_f = solve_lp(&build_cover_program(g, CoverVariant::DsF)?)?.value;
    let ds_plus_f = match build_cover_program(g, CoverVariant::DsPlusF) {
        Ok(p) => Some(JsonRational::from_rat(&solve_lp(&p)?.value)?),
        Err(Error::InfeasibleCover { .. }) => None,
        Err(e) => return Err(e),
    };
    let greedy = greedy_dominating_set(g)?.members;
    let connected: BTreeSet<usize> = if g.is_connected() {
        connect_set(g, &greedy)?
    } else {
        greedy.clone()
    };
    let connect_ratio = rat(connected.len() as i64, greedy.len() as i64);
    let (exact_ds, exact_cds) = if g.n() <= EXACT_SIZE_LIMIT {
        let ds = exact_set(g, SetKind::Ds)?.size();
        let cds = if g.is_connected() {
            Some(exact_set(g, SetKind::Cds)?.size())
        } else {
            None
        };
        (Some(ds), cds)
    } else {
        (None, None)
    };

    Ok(GraphReport {
        format: crate::io::FORMAT.to_string(),
        kind: "graph_report".to_string(),
        n: g.n(),
        edge_count: g.edges().len(),
        min_degree: stats.min,
        max_degree: stats.max,
        regular: stats.is_regular,
        ds_f: JsonRational::from_rat(&ds_f)?,
        ds_plus_f,
        greedy_ds: greedy.len(),
        greedy_cds: connected.len(),
        connect_ratio: JsonRational::from_rat(&connect_ratio)?,
        exceeds_four_thirds: connect_ratio > rat(FOUR_THIRDS_NUM, FOUR_THIRDS_DEN),
        exact_ds,
        exact_cds,
    })
}

pub fn render_graph_human(report: &GraphReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "graph: n={} edges={} degrees {}..{}{}\n",
        report.n,
        report.edge_count,
        report.min_degree,
        report.max_degree,
        if report.regular { " (regular)" } else { "" },
    ));
    out.push_str(&format!(
        "fractional covers: closed {} ({})",
        fraction(&report.ds_f),
        report.ds_f.decimal
    ));
    match &report.ds_plus_f {
        Some(v) => out.push_str(&format!(", open {} ({})\n", fraction(v), v.decimal)),
        None => out.push_str(", open infeasible (isolated vertex)\n"),
    }
    out.push_str(&format!(
        "greedy dominating {} -> connected {} (ratio {}{})\n",
        report.greedy_ds,
        report.greedy_cds,
        report.connect_ratio.decimal,
        if report.exceeds_four_thirds {
            ", exceeds 4/3"
        } else {
            ""
        }
    ));
    if let (Some(ds), Some(cds)) = (report.exact_ds, report.exact_cds) {
        out.push_str(&format!(
            "exact minimums: dominating {ds}, connected {cds}\n"
        ));
    } else if let Some(ds) = report.exact_ds {
        out.push_str(&format!(
            "exact minimums: dominating {ds}, connected n/a (graph disconnected)\n"
        ));
    }
    out
}

/// Header for the instance sweep CSV. Lengths are blank when an algorithm
/// was not run; oracle columns are blank when the oracle did not run.
pub fn sweep_header() -> String {
    let algo_cols: Vec<String> = Algorithm::ALL
        .iter()
        .map(|a| format!("len_{}", a.label()))
        .collect();
    format!(
        "family,params,n,k,edges,regular,disjoint,best_bound,best_bound_label,{},oracle_uncoded,oracle_coded,ratio,all_checks_passed",
        algo_cols.join(",")
    )
}

/// One CSV row per report; `family` and `params` identify the instance.
pub fn sweep_row(family: &str, params: &str, report: &Report) -> String {
    let mut cells: Vec<String> = vec![
        family.to_string(),
        params.to_string(),
        report.instance.n.to_string(),
        report.instance.k.to_string(),
        report.instance.edge_count.to_string(),
        yes_no(report.instance.regular).to_string(),
        yes_no(report.instance.disjoint).to_string(),
        report.lower_bounds.best.decimal.clone(),
        report.lower_bounds.best_label.clone(),
    ];
    for algo in Algorithm::ALL {
        cells.push(
            report
                .schedule(algo.label())
                .map(|s| s.length.to_string())
                .unwrap_or_default(),
        );
    }
    let oracle = report.oracle.as_ref();
    cells.push(
        oracle
            .and_then(|o| o.uncoded_rounds)
            .map(|v| v.to_string())
            .unwrap_or_default(),
    );
    cells.push(
        oracle
            .and_then(|o| o.coded_rounds)
            .map(|v| v.to_string())
            .unwrap_or_default(),
    );
    cells.push(
        report
            .ratio
            .as_ref()
            .map(|r| r.decimal.clone())
            .unwrap_or_default(),
    );
    cells.push(yes_no(report.all_checks_passed).to_string());
    cells.join(",")
}

pub fn graph_sweep_header() -> String {
    "name,n,edges,min_degree,max_degree,regular,ds_f,ds_plus_f,greedy_ds,greedy_cds,connect_ratio,exceeds_four_thirds,exact_ds,exact_cds".to_string()
}

pub fn graph_sweep_row(name: &str, report: &GraphReport) -> String {
    let opt_usize = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    [
        name.to_string(),
        report.n.to_string(),
        report.edge_count.to_string(),
        report.min_degree.to_string(),
        report.max_degree.to_string(),
        yes_no(report.regular).to_string(),
        report.ds_f.decimal.clone(),
        report
            .ds_plus_f
            .as_ref()
            .map(|v| v.decimal.clone())
            .unwrap_or_default(),
        report.greedy_ds.to_string(),
        report.greedy_cds.to_string(),
        report.connect_ratio.decimal.clone(),
        yes_no(report.exceeds_four_thirds).to_string(),
        opt_usize(report.exact_ds),
        opt_usize(report.exact_cds),
    ]
    .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{counterexample_instance, named_graph};

    #[test]
    fn counterexample_report_records_parts_and_passes_checks() {
        let inst = counterexample_instance(2, 2).unwrap();
        let opts = ReportOptions {
            with_oracle: false,
            ..Default::default()
        };
        let report = instance_report(&inst, &opts).unwrap();
        assert!(report.all_checks_passed, "{:#?}", report.checks);

        let ce = report.counterexample.as_ref().unwrap();
        assert_eq!(ce.small_part_ds_f.to_rat(), rat_int(2));
        assert_eq!(ce.big_part_ds_f.to_rat(), rat_int(1));
        assert_eq!(ce.parts_total.to_rat(), rat_int(3));
        let s = report.schedule("counterexample").unwrap();
        assert_eq!(s.length, 6);
        assert!(s.complete);
        assert!(!s.unit_broadcasts_only);
    }

    #[test]
    fn oracle_report_on_a_tiny_instance() {
        let g = named_graph("path(3)").unwrap();
        let inst = Instance::new(
            g,
            1,
            vec![[0].into_iter().collect(), BTreeSet::new(), BTreeSet::new()],
        )
        .unwrap();
        let opts = ReportOptions {
            with_oracle: true,
            ..Default::default()
        };
        let report = instance_report(&inst, &opts).unwrap();
        let o = report.oracle.as_ref().unwrap();
        assert_eq!(o.uncoded_rounds, Some(2));
        assert_eq!(o.coded_rounds, Some(2));
        assert!(o.error.is_none());
        // baseline achieves 2 as well, so the ratio is 2 / best bound
        let s = report.schedule("baseline_greedy").unwrap();
        assert_eq!(s.length, 2);
        assert!(report.all_checks_passed, "{:#?}", report.checks);
    }

    #[test]
    fn oversized_oracle_requests_set_the_flag_but_keep_the_report() {
        let inst = counterexample_instance(2, 2).unwrap();
        let opts = ReportOptions {
            with_oracle: true,
            ..Default::default()
        };
        let report = instance_report(&inst, &opts).unwrap();
        let o = report.oracle.as_ref().unwrap();
        assert!(o.uncoded_rounds.is_some(), "n = 8 fits the uncoded cap");
        assert!(o.coded_rounds.is_none(), "n = 8 exceeds the coded cap");
        assert!(o.error.is_some());
        assert!(report.all_checks_passed, "{:#?}", report.checks);
    }

    #[test]
    fn explicit_algorithm_lists_are_respected() {
        let inst = counterexample_instance(1, 2).unwrap();
        let opts = ReportOptions {
            algorithms: Some(vec![Algorithm::Counterexample]),
            ..Default::default()
        };
        let report = instance_report(&inst, &opts).unwrap();
        assert_eq!(report.schedules.len(), 1);
        assert_eq!(report.schedules[0].algorithm, "counterexample");

        assert!(Algorithm::parse("refined_exact").is_ok());
        assert!(Algorithm::parse("does_not_exist").is_err());
    }

    #[test]
    fn graph_reports_cover_the_catalog() {
        let g = named_graph("k23_plus_edge").unwrap();
        let r = graph_report(&g).unwrap();
        // the extra edge makes vertex 0 adjacent to everything, so the closed
        // cover collapses to 1 while the open cover stays at 3/2
        assert_eq!(r.ds_f.to_rat(), rat_int(1));
        assert_eq!(r.ds_plus_f.as_ref().unwrap().to_rat(), rat(3, 2));
        assert_eq!(r.exact_ds, Some(1));

        let k1 = named_graph("complete(1)").unwrap();
        let r = graph_report(&k1).unwrap();
        assert!(r.ds_plus_f.is_none());
    }

    #[test]
    fn sweep_rows_are_aligned_with_the_header() {
        let inst = counterexample_instance(1, 2).unwrap();
        let report = instance_report(&inst, &ReportOptions::default()).unwrap();
        let header = sweep_header();
        let row = sweep_row("counterexample", "m=1;k=2", &report);
        assert_eq!(
            header.split(',').count(),
            row.split(',').count(),
            "header: {header}\nrow: {row}"
        );
    }
}
