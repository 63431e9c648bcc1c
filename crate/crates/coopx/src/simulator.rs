//! Exact schedule simulation and brute-force optimum search.
//!
//! The simulator replays a schedule against an instance, tracking for every
//! vertex the subspace of packet combinations it can decode. A broadcast is
//! legal only if its coefficient vector lies in the sender's current span —
//! senders cannot transmit what they cannot reconstruct — and it lands in the
//! span of every graph neighbor. The per-round rank table is the audit trail.
//!
//! The brute-force search finds the true optimum round count for small
//! instances by iterative-deepening depth-first search over knowledge states.
//! Moves are canonical (lowest sender first, then lowest payload), so the
//! returned witness is the lexicographically first schedule of minimum
//! length. Two move models exist: plain single-packet broadcasts, and binary
//! coded broadcasts drawing from the sender's whole span. Both searches skip
//! broadcasts that teach no neighbor anything, prune with admissible
//! deficiency heuristics, and memoize failed states across deepenings.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gf::{PrimeField, SpanBasis};
use crate::instance::Instance;
use crate::scheduler::{Broadcast, Schedule, SetGrade};

/// Per-vertex decoding subspaces at one moment of a run.
#[derive(Debug, Clone)]
pub struct KnowledgeState {
    bases: Vec<SpanBasis>,
}

impl KnowledgeState {
    /// Spans at time zero: every vertex knows exactly its held packets.
    pub fn initial(inst: &Instance, q: u32) -> Result<Self> {
        let field = PrimeField::new(q)?;
        let k = inst.k();
        let bases = (0..inst.n())
            .map(|v| {
                let mut basis = SpanBasis::empty(field, k);
                for &p in inst.holding(v) {
                    let mut unit = vec![0; k];
                    unit[p] = 1;
                    basis.insert(&unit);
                }
                basis
            })
            .collect();
        Ok(KnowledgeState { bases })
    }

    pub fn basis(&self, v: usize) -> &SpanBasis {
        &self.bases[v]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.rank()).collect()
    }

    pub fn all_complete(&self) -> bool {
        self.bases.iter().all(|b| b.is_full())
    }
}

/// One line of the simulation audit trail. Row zero is the initial state and
/// has no sender.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub round: usize,
    pub sender: Option<usize>,
    pub ranks: Vec<usize>,
}

/// Replay a schedule, validating every round, and return the rank table.
///
/// Round `r` (1-based) fails with [`Error::BadBroadcast`] if the sender or
/// coefficient vector is malformed, and with [`Error::UndecodablePayload`] if
/// the sender cannot construct the payload from what it knows at that point.
pub fn simulate(inst: &Instance, schedule: &Schedule) -> Result<Vec<TraceRow>> {
    let n = inst.n();
    let k = inst.k();
    let mut state = KnowledgeState::initial(inst, schedule.q)?;
    let mut trace = vec![TraceRow {
        round: 0,
        sender: None,
        ranks: state.ranks(),
    }];

    for (idx, b) in schedule.rounds.iter().enumerate() {
        let round = idx + 1;
        if b.sender >= n {
            return Err(Error::BadBroadcast {
                round,
                reason: format!("sender {} out of range for {n} vertices", b.sender),
            });
        }
        if b.coeffs.len() != k {
            return Err(Error::BadBroadcast {
                round,
                reason: format!("expected {k} coefficients, got {}", b.coeffs.len()),
            });
        }
        if let Some(c) = b.coeffs.iter().find(|&&c| c >= schedule.q) {
            return Err(Error::BadBroadcast {
                round,
                reason: format!("coefficient {c} outside field of size {}", schedule.q),
            });
        }
        if !state.bases[b.sender].contains(&b.coeffs) {
            return Err(Error::UndecodablePayload {
                round,
                sender: b.sender,
            });
        }
        for &u in inst.graph().neighbors(b.sender)? {
            state.bases[u].insert(&b.coeffs);
        }
        trace.push(TraceRow {
            round,
            sender: Some(b.sender),
            ranks: state.ranks(),
        });
    }
    Ok(trace)
}

/// Outcome of checking a schedule for completeness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionCheck {
    /// Every vertex can decode every packet afterwards.
    pub complete: bool,
    /// Per-vertex count of missing span dimensions after the run.
    pub deficiencies: Vec<usize>,
}

/// Replay a schedule and report whether it completes the exchange.
pub fn verify_complete(inst: &Instance, schedule: &Schedule) -> Result<CompletionCheck> {
    let trace = simulate(inst, schedule)?;
    let last = trace.last().expect("trace always has the initial row");
    let k = inst.k();
    let deficiencies: Vec<usize> = last.ranks.iter().map(|&r| k - r).collect();
    Ok(CompletionCheck {
        complete: deficiencies.iter().all(|&d| d == 0),
        deficiencies,
    })
}

/// Which broadcasts the brute-force search may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Senders broadcast single packets they can decode.
    Uncoded,
    /// Senders broadcast any binary combination in their span.
    Coded,
}

impl OracleMode {
    pub fn label(&self) -> &'static str {
        match self {
            OracleMode::Uncoded => "uncoded",
            OracleMode::Coded => "coded",
        }
    }

    /// Search-size guardrails this mode accepts by default. Coded state
    /// spaces grow much faster, hence the tighter caps.
    pub fn default_limits(&self) -> OracleLimits {
        match self {
            OracleMode::Uncoded => OracleLimits { max_n: 8, max_k: 4 },
            OracleMode::Coded => OracleLimits { max_n: 5, max_k: 3 },
        }
    }
}

/// Hard caps on the instance size the brute-force search will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n: usize,
    pub max_k: usize,
}

/// Exact minimum number of rounds, plus the lexicographically first witness
/// schedule of that length.
///
/// Pass `None` for the mode's default limits. The search is exhaustive, so
/// the caps matter; raising them is the caller's informed decision.
pub fn brute_force_nc(
    inst: &Instance,
    mode: OracleMode,
    limits: Option<OracleLimits>,
) -> Result<(usize, Schedule)> {
    let limits = limits.unwrap_or_else(|| mode.default_limits());
    let what = format!("{} optimum search", mode.label());
    if inst.n() > limits.max_n {
        return Err(Error::SizeLimit {
            what: format!("{what} (vertices)"),
            n: inst.n(),
            limit: limits.max_n,
        });
    }
    if inst.k() > limits.max_k {
        return Err(Error::SizeLimit {
            what: format!("{what} (packets)"),
            n: inst.k(),
            limit: limits.max_k,
        });
    }

    // any constructive schedule caps the deepening
    let upper = crate::scheduler::baseline_schedule(inst, SetGrade::Greedy)?
        .schedule
        .rounds;

    let mut search = Search::new(inst, mode)?;
    let moves = search.run(upper.len())?;
    let mut schedule = Schedule::new(2, format!("brute_force_{}", mode.label()));
    schedule.rounds = moves;
    Ok((schedule.len(), schedule))
}

/// Per-vertex decodable span over GF(2), rows kept in reduced echelon form
/// as packet bitmasks. A `u16` row is plenty: searches cap `k` well below 16.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct BitBasis {
    rows: Vec<u16>,
}

impl BitBasis {
    fn new() -> Self {
        BitBasis { rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: u16) -> u16 {
        for &row in &self.rows {
            let lead = 1u16 << (15 - row.leading_zeros());
            if v & lead != 0 {
                v ^= row;
            }
        }
        v
    }

    fn contains(&self, v: u16) -> bool {
        self.reduce(v) == 0
    }

    /// Insert a vector; true if the rank grew. Rows stay fully reduced and
    /// ordered by leading bit, so equal spans have equal row lists.
    fn insert(&mut self, v: u16) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let lead = 1u16 << (15 - v.leading_zeros());
        for row in &mut self.rows {
            if *row & lead != 0 {
                *row ^= v;
            }
        }
        let pos = self.rows.partition_point(|&row| row > v);
        self.rows.insert(pos, v);
        true
    }

    /// All nonzero span members, ascending numerically.
    fn span_members(&self) -> Vec<u16> {
        let mut out = Vec::with_capacity((1 << self.rows.len()) - 1);
        for combo in 1u32..(1 << self.rows.len()) {
            let mut v = 0u16;
            for (i, &row) in self.rows.iter().enumerate() {
                if combo & (1 << i) != 0 {
                    v ^= row;
                }
            }
            out.push(v);
        }
        out.sort_unstable();
        out
    }
}

struct Search<'a> {
    inst: &'a Instance,
    mode: OracleMode,
    k: usize,
    max_degree: usize,
    bases: Vec<BitBasis>,
    /// For every failed state, the largest remaining budget that failed.
    memo: HashMap<Vec<u16>, usize>,
    stack: Vec<(usize, u16)>,
    witness: Option<Vec<(usize, u16)>>,
}

impl<'a> Search<'a> {
    fn new(inst: &'a Instance, mode: OracleMode) -> Result<Self> {
        let bases = (0..inst.n())
            .map(|v| {
                let mut b = BitBasis::new();
                for &p in inst.holding(v) {
                    b.insert(1 << p);
                }
                b
            })
            .collect();
        Ok(Search {
            inst,
            mode,
            k: inst.k(),
            max_degree: inst.graph().degree_stats().max,
            bases,
            memo: HashMap::new(),
            stack: Vec::new(),
            witness: None,
        })
    }

    fn run(&mut self, upper: usize) -> Result<Vec<Broadcast>> {
        for budget in self.heuristic()..=upper {
            if self.dfs(budget) {
                let witness = self.witness.take().expect("dfs success records a witness");
                return Ok(witness
                    .into_iter()
                    .map(|(sender, mask)| Broadcast {
                        sender,
                        coeffs: (0..self.k).map(|p| u32::from(mask >> p & 1)).collect(),
                    })
                    .collect());
            }
        }
        // the cap came from a verified schedule, so the loop must succeed
        Err(Error::SolverInternal(
            "optimum search exhausted its verified upper bound".into(),
        ))
    }

    /// Admissible lower bound on the rounds still needed: no vertex can gain
    /// more than one dimension per round, and no round adds more than
    /// `max_degree` dimensions across all vertices. Plain broadcasts also
    /// need one round per packet that anybody still misses.
    fn heuristic(&self) -> usize {
        let deficits: Vec<usize> = self.bases.iter().map(|b| self.k - b.rank()).collect();
        let worst = deficits.iter().copied().max().unwrap_or(0);
        let total: usize = deficits.iter().sum();
        let spread = if self.max_degree == 0 {
            0
        } else {
            total.div_ceil(self.max_degree)
        };
        let mut h = worst.max(spread);
        if self.mode == OracleMode::Uncoded {
            let full = (1u16 << self.k) - 1;
            let missed = (0..self.k)
                .filter(|&p| {
                    self.bases
                        .iter()
                        .any(|b| b.rows.iter().fold(0, |m, &r| m | r) & full & (1 << p) == 0)
                })
                .count();
            // a basis over unit-vector insertions keeps rows as units, so the
            // OR of rows is exactly the known-packet mask
            h = h.max(missed);
        }
        h
    }

    fn key(&self) -> Vec<u16> {
        let mut key = Vec::with_capacity(self.inst.n() * self.k);
        for b in &self.bases {
            for i in 0..self.k {
                key.push(b.rows.get(i).copied().unwrap_or(0));
            }
        }
        key
    }

    fn dfs(&mut self, remaining: usize) -> bool {
        if self.bases.iter().all(|b| b.rank() == self.k) {
            self.witness = Some(self.stack.clone());
            return true;
        }
        if self.heuristic() > remaining {
            return false;
        }
        let key = self.key();
        if let Some(&failed) = self.memo.get(&key) {
            if remaining <= failed {
                return false;
            }
        }

        for sender in 0..self.inst.n() {
            let payloads: Vec<u16> = match self.mode {
                OracleMode::Uncoded => {
                    let known = self.bases[sender].rows.iter().fold(0u16, |m, &r| m | r);
                    (0..self.k)
                        .map(|p| 1u16 << p)
                        .filter(|&u| known & u != 0)
                        .collect()
                }
                OracleMode::Coded => self.bases[sender].span_members(),
            };
            let neighbors = self
                .inst
                .graph()
                .neighbors(sender)
                .expect("sender index is valid")
                .to_vec();
            for payload in payloads {
                let gainers: Vec<usize> = neighbors
                    .iter()
                    .copied()
                    .filter(|&u| !self.bases[u].contains(payload))
                    .collect();
                if gainers.is_empty() {
                    continue;
                }
                let saved: Vec<(usize, BitBasis)> = gainers
                    .iter()
                    .map(|&u| (u, self.bases[u].clone()))
                    .collect();
                for &u in &gainers {
                    self.bases[u].insert(payload);
                }
                self.stack.push((sender, payload));
                if self.dfs(remaining - 1) {
                    return true;
                }
                self.stack.pop();
                for (u, basis) in saved {
                    self.bases[u] = basis;
                }
            }
        }

        let entry = self.memo.entry(key).or_insert(0);
        *entry = (*entry).max(remaining);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named_graph;
    use crate::scheduler::{baseline_schedule, clique_coded_schedule, refined_schedule};
    use std::collections::BTreeSet;

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    fn path3_disjoint() -> Instance {
        let g = named_graph("path(3)").unwrap();
        Instance::new(g, 2, vec![set(&[0]), BTreeSet::new(), set(&[1])]).unwrap()
    }

    #[test]
    fn simulation_tracks_ranks_per_round() {
        let inst = path3_disjoint();
        let mut schedule = Schedule::new(2, "test");
        schedule.rounds = vec![
            Broadcast::unit(0, 0, 2),
            Broadcast::unit(2, 1, 2),
            Broadcast::all_ones(1, 2),
        ];
        let trace = simulate(&inst, &schedule).unwrap();
        assert_eq!(trace[0].ranks, vec![1, 0, 1]);
        assert_eq!(trace[1].ranks, vec![1, 1, 1]);
        assert_eq!(trace[2].ranks, vec![1, 2, 1]);
        // the middle sum teaches each endpoint its missing packet
        assert_eq!(trace[3].ranks, vec![2, 2, 2]);
        assert!(verify_complete(&inst, &schedule).unwrap().complete);
    }

    #[test]
    fn senders_cannot_broadcast_outside_their_span() {
        let inst = path3_disjoint();
        let mut schedule = Schedule::new(2, "test");
        schedule.rounds = vec![Broadcast::unit(0, 1, 2)];
        assert!(matches!(
            simulate(&inst, &schedule),
            Err(Error::UndecodablePayload {
                round: 1,
                sender: 0
            })
        ));
    }

    #[test]
    fn malformed_broadcasts_are_rejected() {
        let inst = path3_disjoint();
        let mut schedule = Schedule::new(2, "test");
        schedule.rounds = vec![Broadcast {
            sender: 0,
            coeffs: vec![2, 0],
        }];
        assert!(matches!(
            simulate(&inst, &schedule),
            Err(Error::BadBroadcast { round: 1, .. })
        ));

        let mut schedule = Schedule::new(2, "test");
        schedule.rounds = vec![Broadcast::unit(9, 0, 2)];
        assert!(matches!(
            simulate(&inst, &schedule),
            Err(Error::BadBroadcast { round: 1, .. })
        ));
    }

    #[test]
    fn coded_optimum_of_the_disjoint_path_is_three() {
        let inst = path3_disjoint();
        let (nc, witness) = brute_force_nc(&inst, OracleMode::Coded, None).unwrap();
        assert_eq!(nc, 3);
        assert!(verify_complete(&inst, &witness).unwrap().complete);

        // plain broadcasts need a fourth round: the middle vertex must send
        // both packets separately
        let (nc, witness) = brute_force_nc(&inst, OracleMode::Uncoded, None).unwrap();
        assert_eq!(nc, 4);
        assert!(verify_complete(&inst, &witness).unwrap().complete);
    }

    #[test]
    fn oracle_matches_clique_coded_on_the_missing_one_triangle() {
        let g = named_graph("complete(3)").unwrap();
        let holdings = vec![set(&[1, 2]), set(&[0, 2]), set(&[0, 1])];
        let inst = Instance::new(g, 3, holdings).unwrap();
        let (nc, _) = brute_force_nc(&inst, OracleMode::Coded, None).unwrap();
        assert_eq!(nc, 2);
        let plan = clique_coded_schedule(&inst).unwrap();
        assert_eq!(plan.len(), 2);
        assert!(verify_complete(&inst, &plan).unwrap().complete);
    }

    #[test]
    fn constructed_schedules_replay_cleanly() {
        let g = named_graph("cycle(5)").unwrap();
        let holdings = vec![
            set(&[0, 1]),
            set(&[1]),
            BTreeSet::new(),
            set(&[0]),
            set(&[1]),
        ];
        let inst = Instance::new(g, 2, holdings).unwrap();
        for grade in [SetGrade::Greedy, SetGrade::Exact] {
            let b = baseline_schedule(&inst, grade).unwrap();
            assert!(verify_complete(&inst, &b.schedule).unwrap().complete);
            let r = refined_schedule(&inst, grade).unwrap();
            assert!(verify_complete(&inst, &r.schedule).unwrap().complete);
            assert!(r.schedule.len() <= b.schedule.len());
        }
    }

    #[test]
    fn witnesses_are_lexicographically_first() {
        let g = named_graph("complete(2)").unwrap();
        let inst = Instance::new(g, 1, vec![set(&[0]), BTreeSet::new()]).unwrap();
        let (nc, witness) = brute_force_nc(&inst, OracleMode::Uncoded, None).unwrap();
        assert_eq!(nc, 1);
        assert_eq!(witness.rounds, vec![Broadcast::unit(0, 0, 1)]);
    }

    #[test]
    fn oracle_refuses_oversized_instances() {
        let g = named_graph("cycle(6)").unwrap();
        let holdings = (0..6).map(|_| set(&[0])).collect();
        let inst = Instance::new(g, 1, holdings).unwrap();
        assert!(matches!(
            brute_force_nc(&inst, OracleMode::Coded, None),
            Err(Error::SizeLimit { .. })
        ));
        // explicit limits override the default caps
        let (nc, _) = brute_force_nc(
            &inst,
            OracleMode::Coded,
            Some(OracleLimits { max_n: 6, max_k: 3 }),
        )
        .unwrap();
        assert_eq!(nc, 0);
    }
}
