//! Exchange instances: a connected graph plus per-vertex packet holdings.
//!
//! Packets are `0..k`. Every packet must be held by at least one vertex
//! (otherwise no schedule can complete), and the graph must be connected
//! (otherwise some vertex can never hear a missing packet).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{rat_int, Rat};

/// Provenance marker for generated families whose schedulers rely on the
/// concrete construction layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tag {
    /// `m` small cliques of size `k` plus one clique of size `m*k`, bridged.
    Counterexample { m: usize, k: usize },
    /// `k` copies of a base graph on `base_n` vertices plus a hub.
    Hardness { base_n: usize, k: usize },
}

/// A cooperative-exchange instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    k: usize,
    holdings: Vec<BTreeSet<usize>>,
    tag: Option<Tag>,
}

impl Instance {
    /// Validate and build an instance.
    pub fn new(graph: Graph, k: usize, holdings: Vec<BTreeSet<usize>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroPackets);
        }
        if holdings.len() != graph.n() {
            return Err(Error::HoldingsLengthMismatch {
                expected: graph.n(),
                got: holdings.len(),
            });
        }
        let mut covered = vec![false; k];
        for (v, set) in holdings.iter().enumerate() {
            for &p in set {
                if p >= k {
                    return Err(Error::PacketOutOfRange { v, packet: p, k });
                }
                covered[p] = true;
            }
        }
        if let Some(p) = covered.iter().position(|c| !c) {
            return Err(Error::MissingPacket { packet: p });
        }
        if !graph.is_connected() {
            return Err(Error::DisconnectedInstance);
        }
        Ok(Instance {
            graph,
            k,
            holdings,
            tag: None,
        })
    }

    pub fn with_tag(mut self, tag: Tag) -> Self {
        self.tag = Some(tag);
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tag(&self) -> Option<Tag> {
        self.tag
    }

    pub fn holdings(&self) -> &[BTreeSet<usize>] {
        &self.holdings
    }

    pub fn holding(&self, v: usize) -> &BTreeSet<usize> {
        &self.holdings[v]
    }

    pub fn holds(&self, v: usize, packet: usize) -> bool {
        self.holdings[v].contains(&packet)
    }

    /// `d_v`: number of packets vertex `v` starts with.
    pub fn d(&self, v: usize) -> usize {
        self.holdings[v].len()
    }

    /// `d = max_v d_v`.
    pub fn d_max(&self) -> usize {
        self.holdings.iter().map(|h| h.len()).max().unwrap_or(0)
    }

    /// Average holding size as an exact rational.
    pub fn d_bar(&self) -> Rat {
        let total: usize = self.holdings.iter().map(|h| h.len()).sum();
        rat_int(total as i64) / rat_int(self.n() as i64)
    }

    /// True when holdings are pairwise disjoint (each packet has one owner).
    pub fn is_disjoint(&self) -> bool {
        let total: usize = self.holdings.iter().map(|h| h.len()).sum();
        total == self.k
    }

    /// Vertices that hold `packet`, ascending. Non-empty by the union
    /// invariant.
    pub fn holders(&self, packet: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.holdings[v].contains(&packet))
            .collect()
    }

    /// True when every vertex holds `packet`.
    pub fn packet_is_universal(&self, packet: usize) -> bool {
        self.holdings.iter().all(|h| h.contains(&packet))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn sets(xs: &[&[usize]]) -> Vec<BTreeSet<usize>> {
        xs.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn validation_catches_all_defects() {
        assert!(matches!(
            Instance::new(path3(), 0, sets(&[&[], &[], &[]])),
            Err(Error::ZeroPackets)
        ));
        assert!(matches!(
            Instance::new(path3(), 1, sets(&[&[0], &[]])),
            Err(Error::HoldingsLengthMismatch {
                expected: 3,
                got: 2
            })
        ));
        assert!(matches!(
            Instance::new(path3(), 1, sets(&[&[1], &[], &[]])),
            Err(Error::PacketOutOfRange {
                v: 0,
                packet: 1,
                k: 1
            })
        ));
        assert!(matches!(
            Instance::new(path3(), 2, sets(&[&[0], &[0], &[]])),
            Err(Error::MissingPacket { packet: 1 })
        ));
        let disconnected = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            Instance::new(disconnected, 1, sets(&[&[0], &[], &[]])),
            Err(Error::DisconnectedInstance)
        ));
    }

    #[test]
    fn statistics() {
        let inst = Instance::new(path3(), 2, sets(&[&[0, 1], &[0], &[]])).unwrap();
        assert_eq!(inst.d(0), 2);
        assert_eq!(inst.d_max(), 2);
        assert_eq!(inst.d_bar(), crate::rational::rat(3, 3));
        assert!(!inst.is_disjoint());
        assert_eq!(inst.holders(0), vec![0, 1]);
        assert_eq!(inst.holders(1), vec![0]);
        assert!(!inst.packet_is_universal(0));

        let disjoint = Instance::new(path3(), 2, sets(&[&[0], &[1], &[]])).unwrap();
        assert!(disjoint.is_disjoint());
    }
}
