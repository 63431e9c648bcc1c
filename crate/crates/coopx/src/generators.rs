//! Instance and graph generators: a small named catalog, two structured
//! families used throughout the test corpus, seeded random instances, and an
//! isomorphism-free enumeration of small connected graphs.
//!
//! Everything here is deterministic: the structured families have fixed
//! vertex numbering, and the random generators consume a caller-seeded RNG in
//! a fixed iteration order.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, Tag};

/// Names accepted by [`named_graph`].
pub const CATALOG: &str = "k23_plus_edge, path(n), cycle(n), star(n), complete(n)";

/// Build a catalog graph from its name, e.g. `"cycle(6)"` or
/// `"k23_plus_edge"`.
///
/// Vertex numbering is part of the contract:
/// - `k23_plus_edge`: vertices 0,1 form the doubled side (joined by the extra
///   edge), vertices 2,3,4 the other side; 5 vertices, 7 edges.
/// - `path(n)`: `0-1-...-(n-1)`.
/// - `cycle(n)`: `path(n)` plus the closing edge `(0, n-1)`; requires `n >= 3`.
/// - `star(n)`: center 0, leaves `1..n`.
/// - `complete(n)`: all pairs.
pub fn named_graph(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownGraphName {
        name: name.to_string(),
        catalog: CATALOG,
    };
    if name == "k23_plus_edge" {
        let mut edges = vec![(0, 1)];
        for a in [0usize, 1] {
            for b in [2usize, 3, 4] {
                edges.push((a, b));
            }
        }
        return Graph::new(5, &edges);
    }
    let (family, rest) = name.split_once('(').ok_or_else(unknown)?;
    let param = rest.strip_suffix(')').ok_or_else(unknown)?;
    let n: usize = param.trim().parse().map_err(|_| unknown())?;
    match family {
        "path" => {
            if n == 0 {
                return Err(Error::InvalidParameter("path(n) requires n >= 1".into()));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)
        }
        "cycle" => {
            if n < 3 {
                return Err(Error::InvalidParameter("cycle(n) requires n >= 3".into()));
            }
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((0, n - 1));
            Graph::new(n, &edges)
        }
        "star" => {
            if n == 0 {
                return Err(Error::InvalidParameter("star(n) requires n >= 1".into()));
            }
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Graph::new(n, &edges)
        }
        "complete" => {
            if n == 0 {
                return Err(Error::InvalidParameter(
                    "complete(n) requires n >= 1".into(),
                ));
            }
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            Graph::new(n, &edges)
        }
        _ => Err(unknown()),
    }
}

/// The hub-and-copies construction over a connected base graph.
///
/// Layout for a base on `n` vertices and `k` packets (`n*k + 1` vertices,
/// `k*|E| + k` edges):
/// - vertex 0 is the hub and holds nothing;
/// - copy `i` (for packet `i`) occupies `1 + i*n ..= (i+1)*n`, with base
///   vertex `j` at `1 + i*n + j`;
/// - the designated vertex of copy `i` (image of base vertex 0) is adjacent
///   to the hub and holds every packet; the rest of copy `i` hold every
///   packet except `i`.
pub fn hardness_instance(base: &Graph, k: usize) -> Result<Instance> {
    if k == 0 {
        return Err(Error::ZeroPackets);
    }
    if !base.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let n = base.n();
    let total = n * k + 1;
    let mut edges = Vec::with_capacity(k * base.edges().len() + k);
    let mut holdings: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); total];
    let all: BTreeSet<usize> = (0..k).collect();
    for i in 0..k {
        let offset = 1 + i * n;
        for &(a, b) in base.edges() {
            edges.push((offset + a, offset + b));
        }
        edges.push((0, offset));
        holdings[offset] = all.clone();
        for j in 1..n {
            let mut h = all.clone();
            h.remove(&i);
            holdings[offset + j] = h;
        }
    }
    let graph = Graph::new(total, &edges)?;
    Ok(Instance::new(graph, k, holdings)?.with_tag(Tag::Hardness { base_n: n, k }))
}

/// The two-part gap construction: `m` cliques of size `k` in which vertex
/// `j*k + i` misses exactly packet `i`, plus one clique of size `m*k` whose
/// lowest vertex (the hub, id `m*k`) holds everything while the rest hold
/// nothing.
///
/// The parts as described are mutually disconnected, so one bridge edge is
/// added from the hub to vertex `j*k` of every small clique; this keeps the
/// instance connected without disturbing any holdings. Requires `m >= 1`,
/// `k >= 2`.
pub fn counterexample_instance(m: usize, k: usize) -> Result<Instance> {
    let (small, big) = counterexample_parts(m, k)?;
    let n_small = m * k;
    let total = 2 * n_small;
    let hub = n_small;
    let mut edges: Vec<(usize, usize)> = small.edges().to_vec();
    for &(a, b) in big.edges() {
        edges.push((a + n_small, b + n_small));
    }
    for j in 0..m {
        edges.push((hub, j * k));
    }
    let mut holdings: Vec<BTreeSet<usize>> = Vec::with_capacity(total);
    let all: BTreeSet<usize> = (0..k).collect();
    for j in 0..m {
        for i in 0..k {
            let mut h = all.clone();
            h.remove(&i);
            holdings.push(h);
            debug_assert_eq!(holdings.len() - 1, j * k + i);
        }
    }
    holdings.push(all.clone()); // hub
    for _ in 1..n_small {
        holdings.push(BTreeSet::new());
    }
    let graph = Graph::new(total, &edges)?;
    Ok(Instance::new(graph, k, holdings)?.with_tag(Tag::Counterexample { m, k }))
}

/// The two parts of the gap construction before bridging: the disjoint union
/// of the `m` small cliques (on `m*k` vertices) and the large clique (on
/// `m*k` vertices). Useful for part-wise covering bounds.
pub fn counterexample_parts(m: usize, k: usize) -> Result<(Graph, Graph)> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "counterexample requires m >= 1".into(),
        ));
    }
    if k < 2 {
        return Err(Error::InvalidParameter(
            "counterexample requires k >= 2".into(),
        ));
    }
    let n_small = m * k;
    let mut small_edges = Vec::new();
    for j in 0..m {
        for a in 0..k {
            for b in a + 1..k {
                small_edges.push((j * k + a, j * k + b));
            }
        }
    }
    let small = Graph::new(n_small, &small_edges)?;
    let mut big_edges = Vec::new();
    for a in 0..n_small {
        for b in a + 1..n_small {
            big_edges.push((a, b));
        }
    }
    let big = Graph::new(n_small, &big_edges)?;
    Ok((small, big))
}

/// Seeded Erdős–Rényi-style graph, patched to be connected: after sampling
/// each pair with probability `p`, bridge the first two remaining components
/// (random endpoints) until one component is left.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    let mut graph = Graph::new(n, &edges)?;
    let all: BTreeSet<usize> = (0..n).collect();
    loop {
        let comps = graph.connected_components(&all)?;
        if comps.len() <= 1 {
            return Ok(graph);
        }
        let a = &comps[0];
        let b = &comps[1];
        let u = a[rng.gen_range(0..a.len())];
        let v = b[rng.gen_range(0..b.len())];
        edges.push((u, v));
        graph = Graph::new(n, &edges)?;
    }
}

/// Seeded random instance: every packet is first assigned one uniformly
/// chosen owner (guaranteeing the union invariant), then each remaining
/// (vertex, packet) pair is added with probability `holding_p`.
pub fn random_instance<R: Rng>(
    n: usize,
    k: usize,
    p: f64,
    holding_p: f64,
    rng: &mut R,
) -> Result<Instance> {
    if !(0.0..=1.0).contains(&holding_p) {
        return Err(Error::InvalidParameter(format!(
            "holding probability {holding_p} outside [0, 1]"
        )));
    }
    let graph = random_connected_graph(n, p, rng)?;
    let mut holdings: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for packet in 0..k {
        let owner = rng.gen_range(0..n);
        holdings[owner].insert(packet);
    }
    for held in holdings.iter_mut() {
        for packet in 0..k {
            if !held.contains(&packet) && rng.gen_bool(holding_p) {
                held.insert(packet);
            }
        }
    }
    Instance::new(graph, k, holdings)
}

/// Seeded random instance with pairwise-disjoint holdings: every packet is
/// held by exactly one uniformly chosen owner.
pub fn random_disjoint_instance<R: Rng>(
    n: usize,
    k: usize,
    p: f64,
    rng: &mut R,
) -> Result<Instance> {
    let graph = random_connected_graph(n, p, rng)?;
    let mut holdings: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for packet in 0..k {
        let owner = rng.gen_range(0..n);
        holdings[owner].insert(packet);
    }
    Instance::new(graph, k, holdings)
}

/// All connected graphs on `n <= 6` vertices, one representative per
/// isomorphism class, in a canonical deterministic order.
///
/// A graph is encoded as the bitmask of its edge set over the pairs
/// `(i, j), i < j` in lexicographic order; the canonical form is the minimum
/// mask over all vertex permutations. Representatives are returned in
/// ascending canonical-mask order.
pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    const LIMIT: usize = 6;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > LIMIT {
        return Err(Error::SizeLimit {
            what: "connected-graph enumeration".into(),
            n,
            limit: LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let pair_index = |a: usize, b: usize| -> usize {
        let (i, j) = (a.min(b), a.max(b));
        // offset of row i plus position within the row
        i * n - i * (i + 1) / 2 + (j - i - 1)
    };
    let perms = permutations(n);
    let mut canonical: BTreeSet<u32> = BTreeSet::new();
    for mask in 0u32..1u32 << pairs.len() {
        if !mask_connected(mask, n, &pairs) {
            continue;
        }
        let mut best = u32::MAX;
        for perm in &perms {
            let mut remapped = 0u32;
            for (idx, &(a, b)) in pairs.iter().enumerate() {
                if mask & (1 << idx) != 0 {
                    remapped |= 1 << pair_index(perm[a], perm[b]);
                }
            }
            best = best.min(remapped);
        }
        canonical.insert(best);
    }
    canonical
        .into_iter()
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(idx, _)| mask & (1 << idx) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges)
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            if k.is_multiple_of(2) {
                current.swap(i, k - 1);
            } else {
                current.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out
}

fn mask_connected(mask: u32, n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut adj = vec![0u32; n];
    for (idx, &(a, b)) in pairs.iter().enumerate() {
        if mask & (1 << idx) != 0 {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen.count_ones() as usize == n
}
