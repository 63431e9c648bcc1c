//! Dominating-set machinery: greedy multicover, path connection, exact
//! minimum sets, and the clique-augmented relay sets used by the refined
//! scheduler.
//!
//! These are the integral counterparts of the covering programs in [`crate::lp`]:
//! variables are 0/1 (a vertex is picked or not), so demands above a vertex's
//! neighborhood size are infeasible rather than scaled. Everything is
//! deterministic — greedy ties break toward the lowest vertex id, exact
//! searches return the lexicographically first set of minimum size, and path
//! connection grows from the component containing the lowest member.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::NeighborhoodKind;
use crate::rational::{rat, Rat};

/// What a computed vertex set claims to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    /// Every vertex has a member in its closed neighborhood.
    Ds,
    /// Every vertex has a member among its (open) neighbors.
    DsPlus,
    /// Dominating and connected.
    Cds,
    /// Open-dominating and connected.
    CdsPlus,
    /// Every vertex has at least `k` members in the chosen neighborhood.
    KDs { k: usize, kind: NeighborhoodKind },
    /// Relay set for one packet: dominates and is connected in the graph
    /// with the holder set turned into a clique, and contains a holder.
    VbarSelf,
}

impl SetKind {
    pub fn label(&self) -> String {
        match self {
            SetKind::Ds => "ds".into(),
            SetKind::DsPlus => "ds_plus".into(),
            SetKind::Cds => "cds".into(),
            SetKind::CdsPlus => "cds_plus".into(),
            SetKind::KDs {
                k,
                kind: NeighborhoodKind::Closed,
            } => format!("k_ds(k={k})"),
            SetKind::KDs {
                k,
                kind: NeighborhoodKind::Open,
            } => format!("k_ds_plus(k={k})"),
            SetKind::VbarSelf => "vbar_self".into(),
        }
    }
}

/// A vertex set together with what it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatingSet {
    pub members: BTreeSet<usize>,
    pub kind: SetKind,
}

impl DominatingSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Exact searches refuse graphs larger than this.
pub const EXACT_SIZE_LIMIT: usize = 20;

fn neighborhood(g: &Graph, v: usize, kind: NeighborhoodKind) -> Result<Vec<usize>> {
    match kind {
        NeighborhoodKind::Open => Ok(g.neighbors(v)?.to_vec()),
        NeighborhoodKind::Closed => g.closed_neighbors(v),
    }
}

/// `H_t = 1 + 1/2 + … + 1/t`, the greedy covering guarantee factor: the
/// greedy set returned below has size at most `H_t` times the fractional
/// covering optimum, where `t` is the largest neighborhood size.
pub fn harmonic(t: usize) -> Rat {
    (1..=t).map(|i| rat(1, i as i64)).sum()
}

/// Greedy 0/1 multicover of vertex neighborhoods: repeatedly pick the unpicked
/// vertex whose neighborhood contains the most vertices with unmet demand
/// (ties toward the lowest id) until every vertex `v` has at least
/// `demands[v]` picked vertices in its neighborhood.
///
/// Errors with [`Error::InfeasibleDemand`] when some vertex's neighborhood is
/// smaller than its demand — no 0/1 selection can ever cover it.
pub fn greedy_cover(g: &Graph, kind: NeighborhoodKind, demands: &[usize]) -> Result<DominatingSet> {
    let n = g.n();
    if demands.len() != n {
        return Err(Error::InvalidParameter(format!(
            "expected {n} demands, got {}",
            demands.len()
        )));
    }
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|v| neighborhood(g, v, kind))
        .collect::<Result<_>>()?;
    for v in 0..n {
        if rows[v].len() < demands[v] {
            return Err(Error::InfeasibleDemand { vertex: v });
        }
    }

    let mut residual = demands.to_vec();
    let mut picked = vec![false; n];
    let mut members = BTreeSet::new();
    // reach[u] = vertices whose neighborhood contains u
    let mut reach = vec![Vec::new(); n];
    for (v, row) in rows.iter().enumerate() {
        for &u in row {
            reach[u].push(v);
        }
    }
    while residual.iter().any(|&r| r > 0) {
        let (best, benefit) = (0..n)
            .filter(|&u| !picked[u])
            .map(|u| (u, reach[u].iter().filter(|&&v| residual[v] > 0).count()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("unmet demand implies an unpicked helpful vertex");
        debug_assert!(benefit > 0);
        picked[best] = true;
        members.insert(best);
        for &v in &reach[best] {
            residual[v] = residual[v].saturating_sub(1);
        }
    }

    let kind = match kind {
        NeighborhoodKind::Closed => SetKind::Ds,
        NeighborhoodKind::Open => SetKind::DsPlus,
    };
    Ok(DominatingSet { members, kind })
}

/// Convenience: greedy dominating set (closed neighborhoods, demand one).
pub fn greedy_dominating_set(g: &Graph) -> Result<DominatingSet> {
    greedy_cover(g, NeighborhoodKind::Closed, &vec![1; g.n()])
}

/// Check a 0/1 cover; returns the first vertex with unmet demand as an error.
pub fn verify_cover(
    g: &Graph,
    members: &BTreeSet<usize>,
    kind: NeighborhoodKind,
    demands: &[usize],
) -> Result<()> {
    if demands.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "expected {} demands, got {}",
            g.n(),
            demands.len()
        )));
    }
    for (v, &want) in demands.iter().enumerate() {
        let have = neighborhood(g, v, kind)?
            .iter()
            .filter(|u| members.contains(u))
            .count();
        if have < want {
            return Err(Error::NotDominating { vertex: v });
        }
    }
    Ok(())
}

/// Connect a vertex set by adding shortest paths between its pieces.
///
/// While the induced pieces are disconnected, grow from the piece holding the
/// lowest member: a breadth-first search from all its vertices finds the
/// nearest vertex of another piece (first reached wins, which resolves ties
/// deterministically), and the interior of that path joins the set. For a
/// dominating set any two pieces sit within distance three, so each merge
/// adds at most two vertices and the result has at most `3|D| - 2` members.
pub fn connect_set(g: &Graph, set: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    let mut members = set.clone();
    if members.is_empty() {
        return Ok(members);
    }
    loop {
        let comps = g.connected_components(&members)?;
        if comps.len() <= 1 {
            return Ok(members);
        }
        let home: BTreeSet<usize> = comps[0].iter().copied().collect();

        // multi-source BFS from the home piece across the whole graph
        let mut parent = vec![usize::MAX; g.n()];
        let mut seen = vec![false; g.n()];
        let mut queue = std::collections::VecDeque::new();
        for &v in &comps[0] {
            seen[v] = true;
            queue.push_back(v);
        }
        let mut target = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v)? {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = v;
                    if members.contains(&u) && !home.contains(&u) {
                        target = Some(u);
                        break 'bfs;
                    }
                    queue.push_back(u);
                }
            }
        }
        let Some(mut v) = target else {
            return Err(Error::DisconnectedGraph);
        };
        while parent[v] != usize::MAX {
            members.insert(v);
            v = parent[v];
        }
    }
}

/// Exact minimum set of the requested kind: iterate sizes upward and, within
/// a size, member lists in lexicographic order; the first feasible set wins.
pub fn exact_set(g: &Graph, kind: SetKind) -> Result<DominatingSet> {
    let n = g.n();
    if n > EXACT_SIZE_LIMIT {
        return Err(Error::SizeLimit {
            what: "exact set search".into(),
            n,
            limit: EXACT_SIZE_LIMIT,
        });
    }
    let (nb, demand, connected) = match kind {
        SetKind::Ds => (NeighborhoodKind::Closed, 1, false),
        SetKind::DsPlus => (NeighborhoodKind::Open, 1, false),
        SetKind::Cds => (NeighborhoodKind::Closed, 1, true),
        SetKind::CdsPlus => (NeighborhoodKind::Open, 1, true),
        SetKind::KDs { k, kind } => (kind, k, false),
        SetKind::VbarSelf => {
            return Err(Error::InvalidParameter(
                "relay sets need a holder set; use exact_vbar_self".into(),
            ))
        }
    };
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|v| neighborhood(g, v, nb))
        .collect::<Result<_>>()?;
    if let Some(v) = (0..n).find(|&v| rows[v].len() < demand) {
        return Err(Error::NoFeasibleSet(format!(
            "vertex {v} has only {} candidates for demand {demand}",
            rows[v].len()
        )));
    }
    let adj_masks = adjacency_masks(g)?;
    let row_masks: Vec<u32> = rows
        .iter()
        .map(|row| row.iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();

    for size in 1..=n {
        let mut found = None;
        for_each_subset(n, size, &mut |mask| {
            if found.is_some() {
                return;
            }
            let ok = if demand == 1 {
                row_masks.iter().all(|&r| r & mask != 0)
            } else {
                row_masks
                    .iter()
                    .all(|&r| (r & mask).count_ones() as usize >= demand)
            };
            if ok && (!connected || mask_connected(mask, &adj_masks)) {
                found = Some(mask);
            }
        });
        if let Some(mask) = found {
            let members = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            return Ok(DominatingSet { members, kind });
        }
    }
    Err(Error::NoFeasibleSet(format!(
        "no {} exists in this graph",
        kind.label()
    )))
}

fn adjacency_masks(g: &Graph) -> Result<Vec<u32>> {
    (0..g.n())
        .map(|v| Ok(g.neighbors(v)?.iter().fold(0u32, |m, &u| m | (1 << u))))
        .collect()
}

/// Is the induced subgraph on `mask` connected? (Empty counts as connected.)
fn mask_connected(mask: u32, adj_masks: &[u32]) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut reached = 1u32 << start;
    loop {
        let mut next = reached;
        let mut bits = reached;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj_masks[v] & mask;
        }
        if next == reached {
            return reached == mask;
        }
        reached = next;
    }
}

/// Visit all `size`-subsets of `0..n` as bitmasks, in lexicographic order of
/// their ascending member lists.
fn for_each_subset(n: usize, size: usize, f: &mut impl FnMut(u32)) {
    fn rec(n: usize, next: usize, left: usize, mask: u32, f: &mut impl FnMut(u32)) {
        if left == 0 {
            f(mask);
            return;
        }
        // still enough vertices remaining to fill the subset
        for v in next..=(n - left) {
            rec(n, v + 1, left - 1, mask | (1 << v), f);
        }
    }
    if size <= n {
        rec(n, 0, size, 0, f);
    }
}

/// Greedy relay set for one packet. In the graph where the holder set
/// `holders` is completed into a clique, compute a greedy dominating set,
/// connect it there, and make sure it touches a holder (adding the lowest
/// holder if not — it attaches through a real edge, because its dominator in
/// a holder-free set cannot be a clique neighbor).
///
/// The result dominates and is connected in the augmented graph and contains
/// a holder, which together guarantee that every piece it induces in the
/// *real* graph contains a holder — exactly what a relay schedule needs.
pub fn vbar_self_dominating_set(g: &Graph, holders: &BTreeSet<usize>) -> Result<DominatingSet> {
    let first_holder = *holders
        .first()
        .ok_or_else(|| Error::InvalidParameter("holder set is empty".into()))?;
    let gp = g.union_with_clique(holders)?;
    let greedy = greedy_cover(&gp, NeighborhoodKind::Closed, &vec![1; g.n()])?;
    let mut members = connect_set(&gp, &greedy.members)?;
    if members.is_disjoint(holders) {
        members.insert(first_holder);
    }
    Ok(DominatingSet {
        members,
        kind: SetKind::VbarSelf,
    })
}

/// Exact minimum relay set: smallest set that dominates the clique-augmented
/// graph, is connected there, and contains a holder.
pub fn exact_vbar_self(g: &Graph, holders: &BTreeSet<usize>) -> Result<DominatingSet> {
    let n = g.n();
    if n > EXACT_SIZE_LIMIT {
        return Err(Error::SizeLimit {
            what: "exact relay set search".into(),
            n,
            limit: EXACT_SIZE_LIMIT,
        });
    }
    if holders.is_empty() {
        return Err(Error::InvalidParameter("holder set is empty".into()));
    }
    let gp = g.union_with_clique(holders)?;
    let adj_masks = adjacency_masks(&gp)?;
    let row_masks: Vec<u32> = (0..n)
        .map(|v| {
            Ok(gp
                .closed_neighbors(v)?
                .iter()
                .fold(0u32, |m, &u| m | (1 << u)))
        })
        .collect::<Result<Vec<u32>>>()?;
    let holder_mask = holders.iter().fold(0u32, |m, &v| m | (1 << v));

    for size in 1..=n {
        let mut found = None;
        for_each_subset(n, size, &mut |mask| {
            if found.is_some() || mask & holder_mask == 0 {
                return;
            }
            if row_masks.iter().all(|&r| r & mask != 0) && mask_connected(mask, &adj_masks) {
                found = Some(mask);
            }
        });
        if let Some(mask) = found {
            let members = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            return Ok(DominatingSet {
                members,
                kind: SetKind::VbarSelf,
            });
        }
    }
    Err(Error::NoFeasibleSet("no relay set exists".into()))
}

/// Do the members induce a connected subgraph? (Used by tests and reports.)
pub fn is_connected_within(g: &Graph, members: &BTreeSet<usize>) -> Result<bool> {
    Ok(g.connected_components(members)?.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named_graph;
    use crate::rational::rat_int;

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn greedy_on_small_shapes() {
        let c6 = named_graph("cycle(6)").unwrap();
        assert_eq!(greedy_dominating_set(&c6).unwrap().members, set(&[0, 3]));

        let star = named_graph("star(6)").unwrap();
        assert_eq!(greedy_dominating_set(&star).unwrap().members, set(&[0]));

        let p3 = named_graph("path(3)").unwrap();
        assert_eq!(greedy_dominating_set(&p3).unwrap().members, set(&[1]));
    }

    #[test]
    fn greedy_demand_two_open_cover() {
        let g = named_graph("k23_plus_edge").unwrap();
        let d = greedy_cover(&g, NeighborhoodKind::Open, &[2; 5]).unwrap();
        assert_eq!(d.members, set(&[0, 1, 2]));
        verify_cover(&g, &d.members, NeighborhoodKind::Open, &[2; 5]).unwrap();
    }

    #[test]
    fn infeasible_demands_are_rejected_upfront() {
        let g = named_graph("path(3)").unwrap();
        // endpoint 0 has a single neighbor, so open demand two is impossible
        assert!(matches!(
            greedy_cover(&g, NeighborhoodKind::Open, &[2; 3]),
            Err(Error::InfeasibleDemand { vertex: 0 })
        ));
    }

    #[test]
    fn connecting_a_path_cover_fills_the_gap() {
        let p6 = named_graph("path(6)").unwrap();
        let connected = connect_set(&p6, &set(&[1, 4])).unwrap();
        assert_eq!(connected, set(&[1, 2, 3, 4]));
    }

    #[test]
    fn connect_bound_holds_for_greedy_dominating_sets() {
        for name in ["path(9)", "cycle(9)", "k23_plus_edge", "star(5)"] {
            let g = named_graph(name).unwrap();
            let d = greedy_dominating_set(&g).unwrap();
            let c = connect_set(&g, &d.members).unwrap();
            assert!(is_connected_within(&g, &c).unwrap(), "{name}");
            assert!(c.len() <= 3 * d.members.len() - 2, "{name}");
            assert!(c.is_superset(&d.members), "{name}");
        }
    }

    #[test]
    fn exact_minimum_sets_on_frozen_shapes() {
        let c6 = named_graph("cycle(6)").unwrap();
        assert_eq!(exact_set(&c6, SetKind::Ds).unwrap().members, set(&[0, 3]));

        let p6 = named_graph("path(6)").unwrap();
        assert_eq!(exact_set(&p6, SetKind::Cds).unwrap().size(), 4);

        let g = named_graph("k23_plus_edge").unwrap();
        assert_eq!(
            exact_set(&g, SetKind::DsPlus).unwrap().members,
            set(&[0, 1])
        );
        let k2 = exact_set(
            &g,
            SetKind::KDs {
                k: 2,
                kind: NeighborhoodKind::Open,
            },
        )
        .unwrap();
        assert_eq!(k2.members, set(&[0, 1, 2]));
    }

    #[test]
    fn exact_open_sets_can_be_infeasible() {
        let k1 = named_graph("complete(1)").unwrap();
        assert!(matches!(
            exact_set(&k1, SetKind::DsPlus),
            Err(Error::NoFeasibleSet(_))
        ));
        assert_eq!(exact_set(&k1, SetKind::Ds).unwrap().members, set(&[0]));
    }

    #[test]
    fn relay_sets_touch_their_holders() {
        let p3 = named_graph("path(3)").unwrap();
        let d = vbar_self_dominating_set(&p3, &set(&[0])).unwrap();
        assert_eq!(d.members, set(&[0, 1]));

        // exact version can be smaller: {0} does not dominate vertex 2, but
        // {1} has no holder, so the exact answer is also two vertices
        let e = exact_vbar_self(&p3, &set(&[0])).unwrap();
        assert_eq!(e.members, set(&[0, 1]));

        // when holders already form a dominating clique the relay collapses
        let star = named_graph("star(5)").unwrap();
        let d = vbar_self_dominating_set(&star, &set(&[0])).unwrap();
        assert_eq!(d.members, set(&[0]));
    }

    #[test]
    fn relay_pieces_in_the_real_graph_contain_holders() {
        // cycle(6) with holders on opposite vertices: the clique edge makes
        // {0, 3} connected in the augmented graph, and both pieces of the
        // real graph hold the packet
        let c6 = named_graph("cycle(6)").unwrap();
        let holders = set(&[0, 3]);
        let d = vbar_self_dominating_set(&c6, &holders).unwrap();
        for comp in c6.connected_components(&d.members).unwrap() {
            assert!(
                comp.iter().any(|v| holders.contains(v)),
                "piece {comp:?} has no holder"
            );
        }
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(1), rat_int(1));
        assert_eq!(harmonic(3), rat(11, 6));
    }
}
