//! Deterministic broadcast schedulers.
//!
//! A schedule is a sequence of rounds; in each round one vertex broadcasts a
//! linear combination (over a prime field) of the packets it can decode at
//! that moment, heard by its graph neighbors. Two general-purpose relay
//! schedulers and two special-case constructions live here:
//!
//! - [`baseline_schedule`]: one connected dominating relay set reused for
//!   every packet. Per packet: a holder seeds the relay, then the relay
//!   floods the packet in breadth-first order. Costs at most `|relay| + 1`
//!   rounds per packet.
//! - [`refined_schedule`]: a per-packet relay set computed on the graph with
//!   that packet's holders completed into a clique. Packets everyone holds
//!   cost nothing, and holders inside the relay make the seed round
//!   unnecessary.
//! - [`clique_coded_schedule`]: on a complete graph where each vertex misses
//!   at most one packet, at most two coded broadcasts finish the job — and
//!   two are necessary as soon as two packets are missed and nobody holds
//!   everything, because a single round leaves its own sender short.
//! - [`counterexample_schedule`]: the tailored plan for the bridged-cliques
//!   family, finishing in `2m + k` rounds: two coded rounds per small clique
//!   plus `k` plain rounds from the hub.
//!
//! All schedulers break ties toward lower vertex ids and lower packet
//! indices, so identical inputs produce identical schedules.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::domset::{
    connect_set, exact_set, exact_vbar_self, greedy_dominating_set, vbar_self_dominating_set,
    SetKind,
};
use crate::error::{Error, Result};
use crate::instance::{Instance, Tag};
use crate::lp::{build_cover_program, solve_lp, CoverVariant};
use crate::rational::{rat, Rat};

/// Field modulus used by the constructive schedulers. Binary coefficients
/// suffice: the only coded payload any of them sends is an all-ones sum,
/// which every receiver one packet short can peel.
pub const DEFAULT_FIELD: u32 = 2;

/// One broadcast: `sender` transmits `Σ coeffs[p] · packet_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Broadcast {
    pub sender: usize,
    pub coeffs: Vec<u32>,
}

impl Broadcast {
    /// A plain (uncoded) broadcast of one packet.
    pub fn unit(sender: usize, packet: usize, k: usize) -> Self {
        let mut coeffs = vec![0; k];
        coeffs[packet] = 1;
        Broadcast { sender, coeffs }
    }

    /// The sum of all packets.
    pub fn all_ones(sender: usize, k: usize) -> Self {
        Broadcast {
            sender,
            coeffs: vec![1; k],
        }
    }

    /// Readable payload, e.g. `p0 + 2*p2`.
    pub fn render(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(p, &c)| {
                if c == 1 {
                    format!("p{p}")
                } else {
                    format!("{c}*p{p}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// An ordered broadcast plan over the field `GF(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub q: u32,
    pub rounds: Vec<Broadcast>,
    /// Free-form note naming the algorithm that produced the plan.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl Schedule {
    pub fn new(q: u32, provenance: impl Into<String>) -> Self {
        Schedule {
            q,
            rounds: Vec::new(),
            provenance: Some(provenance.into()),
        }
    }

    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }
}

/// Whether relay sets come from the greedy pipeline or exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetGrade {
    Greedy,
    Exact,
}

impl SetGrade {
    pub fn label(&self) -> &'static str {
        match self {
            SetGrade::Greedy => "greedy",
            SetGrade::Exact => "exact",
        }
    }
}

/// Everything the baseline scheduler computed along the way.
#[derive(Debug, Clone)]
pub struct BaselineOutcome {
    pub schedule: Schedule,
    /// Fractional closed-cover optimum of the graph, for quality reporting.
    pub fractional_ds: Rat,
    /// The dominating set before connection.
    pub dominating: BTreeSet<usize>,
    /// The connected relay actually used.
    pub connected: BTreeSet<usize>,
    /// `|connected| / |dominating|` — how much connecting cost.
    pub connect_ratio: Rat,
}

/// Baseline: fix one connected dominating relay `R`, then for each packet
/// seed it into `R` and flood.
///
/// Per packet `i`, the seed `s_i` is the lowest holder inside `R` if any,
/// otherwise the lowest holder overall (costing one extra round to hand the
/// packet to the relay). The relay then broadcasts the packet in
/// breadth-first order from the seed's attachment point, so every sender has
/// already heard the packet from its parent. Total length is at most
/// `k · (|R| + 1)`.
pub fn baseline_schedule(inst: &Instance, grade: SetGrade) -> Result<BaselineOutcome> {
    let g = inst.graph();
    let k = inst.k();
    let fractional_ds = solve_lp(&build_cover_program(g, CoverVariant::DsF)?)?.value;
    let (dominating, connected) = match grade {
        SetGrade::Greedy => {
            let d = greedy_dominating_set(g)?.members;
            let c = connect_set(g, &d)?;
            (d, c)
        }
        SetGrade::Exact => (
            exact_set(g, SetKind::Ds)?.members,
            exact_set(g, SetKind::Cds)?.members,
        ),
    };
    let connect_ratio = rat(connected.len() as i64, dominating.len() as i64);

    let mut schedule = Schedule::new(DEFAULT_FIELD, format!("baseline_{}", grade.label()));
    for packet in 0..k {
        let holders = inst.holders(packet);
        let seed = holders
            .iter()
            .copied()
            .find(|v| connected.contains(v))
            .unwrap_or(holders[0]);
        let root = if connected.contains(&seed) {
            seed
        } else {
            schedule.rounds.push(Broadcast::unit(seed, packet, k));
            *g.neighbors(seed)?
                .iter()
                .find(|v| connected.contains(v))
                .expect("a dominating relay touches every vertex's neighborhood")
        };
        for v in g.bfs_order(root, &connected)? {
            schedule.rounds.push(Broadcast::unit(v, packet, k));
        }
    }

    Ok(BaselineOutcome {
        schedule,
        fractional_ds,
        dominating,
        connected,
        connect_ratio,
    })
}

/// What the refined scheduler decided for one packet.
#[derive(Debug, Clone)]
pub struct RefinedPacketPlan {
    pub packet: usize,
    /// Everyone already holds it; no rounds spent.
    pub universal: bool,
    pub relay: BTreeSet<usize>,
}

/// The refined schedule plus its per-packet relay decisions.
#[derive(Debug, Clone)]
pub struct RefinedOutcome {
    pub schedule: Schedule,
    pub packets: Vec<RefinedPacketPlan>,
}

/// Refined: an independent relay per packet, computed on the graph where the
/// packet's holders form a clique.
///
/// The relay dominates that augmented graph and is connected there, and it
/// contains a holder; those three facts force every piece the relay induces
/// in the real graph to contain a holder. Each piece therefore floods the
/// packet from its own lowest holder, in breadth-first order, and every
/// vertex outside the relay has a real-graph neighbor in it. Packets that
/// everyone holds are skipped outright.
pub fn refined_schedule(inst: &Instance, grade: SetGrade) -> Result<RefinedOutcome> {
    let g = inst.graph();
    let k = inst.k();
    let mut schedule = Schedule::new(DEFAULT_FIELD, format!("refined_{}", grade.label()));
    let mut packets = Vec::with_capacity(k);

    for packet in 0..k {
        if inst.packet_is_universal(packet) {
            packets.push(RefinedPacketPlan {
                packet,
                universal: true,
                relay: BTreeSet::new(),
            });
            continue;
        }
        let holders: BTreeSet<usize> = inst.holders(packet).into_iter().collect();
        let relay = match grade {
            SetGrade::Greedy => vbar_self_dominating_set(g, &holders)?.members,
            SetGrade::Exact => exact_vbar_self(g, &holders)?.members,
        };
        for piece in g.connected_components(&relay)? {
            let start = piece
                .iter()
                .copied()
                .find(|v| holders.contains(v))
                .ok_or_else(|| {
                    Error::SolverInternal(format!(
                        "relay piece {piece:?} for packet {packet} has no holder"
                    ))
                })?;
            let piece_set: BTreeSet<usize> = piece.into_iter().collect();
            for v in g.bfs_order(start, &piece_set)? {
                schedule.rounds.push(Broadcast::unit(v, packet, k));
            }
        }
        packets.push(RefinedPacketPlan {
            packet,
            universal: false,
            relay,
        });
    }

    Ok(RefinedOutcome { schedule, packets })
}

/// Coded plan for a complete graph where each vertex misses at most one
/// packet.
///
/// Let `M` be the packets missed by anyone. Nothing missed means nothing to
/// do. If some vertex holds everything, it announces the sum of the missed
/// packets and every receiver — one packet short at most — peels off what it
/// knows: one round. Otherwise two rounds: vertex 0 sends plainly the lowest
/// missed packet `j` that it holds (it misses at most one, and at least two
/// are missed, so `j` exists), after which the lowest vertex missing `j` is
/// complete and broadcasts the all-ones sum for everyone else.
pub fn clique_coded_schedule(inst: &Instance) -> Result<Schedule> {
    let g = inst.graph();
    let n = inst.n();
    let k = inst.k();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.contains_edge(u, v) {
                return Err(Error::NotAClique { u, v });
            }
        }
    }
    for v in 0..n {
        let missing = k - inst.d(v);
        if missing > 1 {
            return Err(Error::TooManyMissing { vertex: v, missing });
        }
    }

    let missed: BTreeSet<usize> = (0..k).filter(|&p| !inst.packet_is_universal(p)).collect();
    let mut schedule = Schedule::new(DEFAULT_FIELD, "clique_coded");
    if missed.is_empty() {
        return Ok(schedule);
    }

    if let Some(full) = (0..n).find(|&v| inst.d(v) == k) {
        let mut coeffs = vec![0; k];
        for &p in &missed {
            coeffs[p] = 1;
        }
        schedule.rounds.push(Broadcast {
            sender: full,
            coeffs,
        });
        return Ok(schedule);
    }

    if missed.len() == 1 {
        let p = *missed.first().expect("nonempty");
        let sender = inst.holders(p)[0];
        schedule.rounds.push(Broadcast::unit(sender, p, k));
        return Ok(schedule);
    }

    let j = *missed
        .iter()
        .find(|&&p| inst.holds(0, p))
        .expect("vertex 0 misses at most one of two or more missed packets");
    schedule.rounds.push(Broadcast::unit(0, j, k));
    let w = (0..n)
        .find(|&v| !inst.holds(v, j))
        .expect("a missed packet has a vertex missing it");
    schedule.rounds.push(Broadcast::all_ones(w, k));
    Ok(schedule)
}

/// Tailored plan for the bridged-cliques family, `2m + k` rounds.
///
/// Each small clique is an instance of the two-round coded trick: its lowest
/// vertex misses packet 0 and so sends packet 1 plainly, then its second
/// vertex (now complete) sends the all-ones sum, finishing the whole clique.
/// The hub holds everything and finishes its own clique by sending each
/// packet plainly; the other big-clique members started empty, so nothing
/// shorter would do from their side of the bridges.
///
/// Requires the instance to carry the matching construction tag, because the
/// plan hard-codes the family's layout.
pub fn counterexample_schedule(inst: &Instance) -> Result<Schedule> {
    let Some(Tag::Counterexample { m, k }) = inst.tag() else {
        return Err(Error::UntaggedInstance);
    };
    // tags travel through files, so trust but verify the layout
    let expected = crate::generators::counterexample_instance(m, k)?;
    if inst.graph().edges() != expected.graph().edges() || inst.holdings() != expected.holdings() {
        return Err(Error::InvalidParameter(
            "instance does not match its construction tag".into(),
        ));
    }
    let mut schedule = Schedule::new(DEFAULT_FIELD, "counterexample");
    for clique in 0..m {
        let base = clique * k;
        schedule.rounds.push(Broadcast::unit(base, 1, k));
        schedule.rounds.push(Broadcast::all_ones(base + 1, k));
    }
    let hub = m * k;
    for packet in 0..k {
        schedule.rounds.push(Broadcast::unit(hub, packet, k));
    }
    Ok(schedule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{counterexample_instance, named_graph};
    use crate::rational::rat_int;

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn baseline_on_a_path_seeds_then_floods() {
        // single packet held by an endpoint; the relay is the middle vertex
        let g = named_graph("path(3)").unwrap();
        let inst = Instance::new(g, 1, vec![set(&[0]), BTreeSet::new(), BTreeSet::new()]).unwrap();
        let out = baseline_schedule(&inst, SetGrade::Greedy).unwrap();
        assert_eq!(out.dominating, set(&[1]));
        assert_eq!(out.connected, set(&[1]));
        assert_eq!(out.connect_ratio, rat_int(1));
        assert_eq!(out.fractional_ds, rat_int(1));
        assert_eq!(
            out.schedule.rounds,
            vec![Broadcast::unit(0, 0, 1), Broadcast::unit(1, 0, 1)]
        );
    }

    #[test]
    fn baseline_length_is_bounded_per_packet() {
        let inst = counterexample_instance(2, 3).unwrap();
        for grade in [SetGrade::Greedy, SetGrade::Exact] {
            let out = baseline_schedule(&inst, grade).unwrap();
            assert!(out.schedule.len() <= inst.k() * (out.connected.len() + 1));
        }
    }

    #[test]
    fn refined_skips_universal_packets() {
        // packet 0 is universal; packet 1 lives only on the middle vertex
        let g = named_graph("path(3)").unwrap();
        let inst = Instance::new(g, 2, vec![set(&[0]), set(&[0, 1]), set(&[0])]).unwrap();
        let out = refined_schedule(&inst, SetGrade::Greedy).unwrap();
        assert!(out.packets[0].universal);
        assert_eq!(out.packets[1].relay, set(&[1]));
        assert_eq!(out.schedule.rounds, vec![Broadcast::unit(1, 1, 2)]);
    }

    #[test]
    fn refined_exact_matches_greedy_relay_here() {
        let g = named_graph("cycle(6)").unwrap();
        let holdings = vec![
            set(&[0]),
            BTreeSet::new(),
            BTreeSet::new(),
            set(&[0]),
            BTreeSet::new(),
            BTreeSet::new(),
        ];
        let inst = Instance::new(g, 1, holdings).unwrap();
        let greedy = refined_schedule(&inst, SetGrade::Greedy).unwrap();
        let exact = refined_schedule(&inst, SetGrade::Exact).unwrap();
        assert!(exact.schedule.len() <= greedy.schedule.len());
    }

    #[test]
    fn clique_coded_needs_two_rounds_without_a_full_vertex() {
        // complete(3), k = 3, vertex i misses packet i
        let g = named_graph("complete(3)").unwrap();
        let holdings = vec![set(&[1, 2]), set(&[0, 2]), set(&[0, 1])];
        let inst = Instance::new(g, 3, holdings).unwrap();
        let s = clique_coded_schedule(&inst).unwrap();
        assert_eq!(
            s.rounds,
            vec![Broadcast::unit(0, 1, 3), Broadcast::all_ones(1, 3)]
        );
    }

    #[test]
    fn clique_coded_single_round_cases() {
        let g = named_graph("complete(3)").unwrap();
        // one missed packet: its lowest holder announces it
        let inst =
            Instance::new(g.clone(), 2, vec![set(&[0, 1]), set(&[0]), set(&[0, 1])]).unwrap();
        let s = clique_coded_schedule(&inst).unwrap();
        assert_eq!(s.rounds, vec![Broadcast::unit(0, 1, 2)]);

        // two missed packets but a full vertex: one summed broadcast
        let inst = Instance::new(g.clone(), 2, vec![set(&[0, 1]), set(&[0]), set(&[1])]).unwrap();
        let s = clique_coded_schedule(&inst).unwrap();
        assert_eq!(
            s.rounds,
            vec![Broadcast {
                sender: 0,
                coeffs: vec![1, 1]
            }]
        );

        // nothing missed: empty plan
        let inst = Instance::new(g, 2, vec![set(&[0, 1]); 3]).unwrap();
        assert!(clique_coded_schedule(&inst).unwrap().is_empty());
    }

    #[test]
    fn clique_coded_validates_its_preconditions() {
        let p3 = named_graph("path(3)").unwrap();
        let inst = Instance::new(p3, 1, vec![set(&[0]), set(&[0]), set(&[0])]).unwrap();
        assert!(matches!(
            clique_coded_schedule(&inst),
            Err(Error::NotAClique { u: 0, v: 2 })
        ));

        let k3 = named_graph("complete(3)").unwrap();
        let inst = Instance::new(k3, 2, vec![set(&[0, 1]), BTreeSet::new(), set(&[0, 1])]).unwrap();
        assert!(matches!(
            clique_coded_schedule(&inst),
            Err(Error::TooManyMissing {
                vertex: 1,
                missing: 2
            })
        ));
    }

    #[test]
    fn counterexample_plan_has_expected_length_and_rounds() {
        let inst = counterexample_instance(1, 2).unwrap();
        let s = counterexample_schedule(&inst).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(
            s.rounds,
            vec![
                Broadcast::unit(0, 1, 2),
                Broadcast::all_ones(1, 2),
                Broadcast::unit(2, 0, 2),
                Broadcast::unit(2, 1, 2),
            ]
        );

        for (m, k) in [(2usize, 2usize), (3, 2), (2, 3), (1, 4)] {
            let inst = counterexample_instance(m, k).unwrap();
            let s = counterexample_schedule(&inst).unwrap();
            assert_eq!(s.len(), 2 * m + k, "m = {m}, k = {k}");
        }
    }

    #[test]
    fn counterexample_plan_requires_the_tag() {
        let g = named_graph("complete(2)").unwrap();
        let inst = Instance::new(g, 1, vec![set(&[0]), set(&[0])]).unwrap();
        assert!(matches!(
            counterexample_schedule(&inst),
            Err(Error::UntaggedInstance)
        ));
    }
}
