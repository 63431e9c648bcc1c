//! Fractional covering programs over vertex neighborhoods.
//!
//! Five program families share one shape — `min Σ c_v` subject to
//! `Σ_{u ∈ Nb(v)} c_u >= b_v` with box constraints on `c` — differing only in
//! the neighborhood convention (closed `N[v]` vs open `N(v)`) and the demand
//! vector:
//!
//! | program                       | neighborhood | demand            |
//! |-------------------------------|--------------|-------------------|
//! | `ds_f`                        | closed       | 1                 |
//! | `ds_plus_f`                   | open         | 1                 |
//! | `k_ds_f(k)`                   | closed       | k                 |
//! | `k_ds_plus_f(k)`              | open         | k                 |
//! | augmented (from an instance)  | open         | max(0, k - d_v)   |
//!
//! The per-variable upper bound is `cap = max(1, max_v b_v)`: demand-1
//! programs get the classical `c_v <= 1` box, and scaled programs scale the
//! box with the demand. This is what makes the exact identity
//! `k_ds_plus_f(k) = k · ds_plus_f` hold (a unit-box `k`-demand program is
//! generally infeasible — a vertex of open degree < k could never be
//! covered), and transmission-count solutions with entries up to the maximum
//! demand stay feasible for the augmented program, which is what its use as
//! a round lower bound requires.
//!
//! Integral variants (`c_v ∈ {0,1}`) are a different object — see the
//! dominating-set module — and do *not* scale: the box stays at 1 there.

mod simplex;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::Instance;
use crate::rational::{rat_int, Rat};

/// Closed neighborhoods count the vertex itself; open ones do not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NeighborhoodKind {
    Open,
    Closed,
}

/// The four graph-only covering variants. The fifth (augmented) program
/// depends on holdings; build it with [`build_augmented_program`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverVariant {
    DsF,
    DsPlusF,
    KDsF(usize),
    KDsPlusF(usize),
}

impl CoverVariant {
    pub fn label(&self) -> String {
        match self {
            CoverVariant::DsF => "ds_f".into(),
            CoverVariant::DsPlusF => "ds_plus_f".into(),
            CoverVariant::KDsF(k) => format!("k_ds_f(k={k})"),
            CoverVariant::KDsPlusF(k) => format!("k_ds_plus_f(k={k})"),
        }
    }
}

/// A concrete covering LP: one coverage row per vertex plus the shared box.
#[derive(Debug, Clone)]
pub struct CoverProgram {
    label: String,
    kind: NeighborhoodKind,
    rows: Vec<Vec<usize>>,
    demands: Vec<Rat>,
    cap: Rat,
}

impl CoverProgram {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> NeighborhoodKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn demands(&self) -> &[Rat] {
        &self.demands
    }

    /// Shared variable upper bound `max(1, max demand)`.
    pub fn cap(&self) -> &Rat {
        &self.cap
    }

    /// The coverage row of vertex `v` (its neighborhood, ascending).
    pub fn row(&self, v: usize) -> &[usize] {
        &self.rows[v]
    }

    fn from_parts(
        label: String,
        kind: NeighborhoodKind,
        rows: Vec<Vec<usize>>,
        demands: Vec<Rat>,
    ) -> Result<Self> {
        let cap = demands
            .iter()
            .max()
            .cloned()
            .unwrap_or_else(Rat::zero)
            .max(Rat::one());
        for (v, row) in rows.iter().enumerate() {
            if row.is_empty() && demands[v] > Rat::zero() {
                return Err(Error::InfeasibleCover { vertex: v });
            }
        }
        Ok(CoverProgram {
            label,
            kind,
            rows,
            demands,
            cap,
        })
    }
}

/// Build one of the graph-only covering programs.
pub fn build_cover_program(g: &Graph, variant: CoverVariant) -> Result<CoverProgram> {
    let (kind, demand) = match variant {
        CoverVariant::DsF => (NeighborhoodKind::Closed, 1usize),
        CoverVariant::DsPlusF => (NeighborhoodKind::Open, 1),
        CoverVariant::KDsF(k) => (NeighborhoodKind::Closed, k),
        CoverVariant::KDsPlusF(k) => (NeighborhoodKind::Open, k),
    };
    if demand == 0 {
        return Err(Error::InvalidParameter(
            "covering variants require k >= 1".into(),
        ));
    }
    let rows = neighborhood_rows(g, kind)?;
    let demands = vec![rat_int(demand as i64); g.n()];
    CoverProgram::from_parts(variant.label(), kind, rows, demands)
}

/// Build the holdings-aware program: open neighborhoods with per-vertex
/// demand `max(0, k - d_v)` (a vertex that already holds everything asks for
/// nothing).
pub fn build_augmented_program(inst: &Instance) -> Result<CoverProgram> {
    let rows = neighborhood_rows(inst.graph(), NeighborhoodKind::Open)?;
    let k = inst.k();
    let demands: Vec<Rat> = (0..inst.n())
        .map(|v| rat_int(k.saturating_sub(inst.d(v)) as i64))
        .collect();
    CoverProgram::from_parts(
        format!("augmented_k_ds_plus_f(k={k})"),
        NeighborhoodKind::Open,
        rows,
        demands,
    )
}

fn neighborhood_rows(g: &Graph, kind: NeighborhoodKind) -> Result<Vec<Vec<usize>>> {
    (0..g.n())
        .map(|v| match kind {
            NeighborhoodKind::Open => Ok(g.neighbors(v)?.to_vec()),
            NeighborhoodKind::Closed => g.closed_neighbors(v),
        })
        .collect()
}

/// Feasible dual solution certifying the optimum: `max b·y - cap·Σw` with
/// `Σ_{i: v ∈ Nb(i)} y_i - w_v <= 1` and `y, w >= 0`.
#[derive(Debug, Clone)]
pub struct DualCertificate {
    pub y: Vec<Rat>,
    pub w: Vec<Rat>,
    pub value: Rat,
}

/// Exact optimum of a covering program.
#[derive(Debug, Clone)]
pub struct FractionalCover {
    pub values: Vec<Rat>,
    pub value: Rat,
    pub dual: DualCertificate,
}

impl FractionalCover {
    /// Re-check this solution against its program from scratch: box and
    /// coverage feasibility, dual feasibility, and exact strong duality.
    pub fn verify(&self, program: &CoverProgram) -> Result<()> {
        let n = program.n();
        let fail = |msg: String| Err(Error::SolverInternal(msg));
        if self.values.len() != n || self.dual.y.len() != n || self.dual.w.len() != n {
            return fail("solution shape mismatch".into());
        }
        for (v, c) in self.values.iter().enumerate() {
            if c < &Rat::zero() || c > program.cap() {
                return fail(format!("c[{v}] outside box"));
            }
        }
        for v in 0..n {
            let covered: Rat = program.row(v).iter().map(|&u| &self.values[u]).sum();
            if covered < program.demands()[v] {
                return fail(format!("coverage constraint at {v} violated"));
            }
        }
        let mut col = vec![Rat::zero(); n];
        for v in 0..n {
            if self.dual.y[v] < Rat::zero() || self.dual.w[v] < Rat::zero() {
                return fail(format!("dual sign at {v}"));
            }
            for &u in program.row(v) {
                col[u] += &self.dual.y[v];
            }
        }
        for (v, c) in col.iter().enumerate() {
            if c - &self.dual.w[v] > Rat::one() {
                return fail(format!("dual constraint at {v}"));
            }
        }
        let dual_value: Rat = program
            .demands()
            .iter()
            .zip(&self.dual.y)
            .map(|(b, y)| b * y)
            .sum::<Rat>()
            - program.cap() * self.dual.w.iter().sum::<Rat>();
        if dual_value != self.value || self.dual.value != self.value {
            return fail("certificate value mismatch".into());
        }
        let primal: Rat = self.values.iter().sum();
        if primal != self.value {
            return fail("objective mismatch".into());
        }
        Ok(())
    }
}

/// Solve a covering program exactly. Deterministic: identical programs yield
/// identical vertices and certificates.
pub fn solve_lp(program: &CoverProgram) -> Result<FractionalCover> {
    let sol = simplex::solve_cover(program.n(), &program.rows, &program.demands, &program.cap)?;
    let cover = FractionalCover {
        values: sol.x,
        value: sol.value.clone(),
        dual: DualCertificate {
            y: sol.y,
            w: sol.w,
            value: sol.value,
        },
    };
    cover.verify(program)?;
    Ok(cover)
}
