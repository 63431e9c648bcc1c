//! Exact primal simplex for box-constrained covering programs.
//!
//! Solves `min Σ x_v` subject to `Σ_{u ∈ row_i} x_u >= b_i`, `0 <= x <= cap`
//! in exact `BigInt` rational arithmetic. The formulation `A x - s = b` (one
//! surplus per row) admits a trivial starting basis: put every `x` at its
//! upper bound and make the surpluses basic, so no phase-1 is needed for
//! feasible programs (callers pre-check that positive demand implies a
//! non-empty row).
//!
//! Variables are handled with the bounded-variable rule: a non-basic variable
//! sits at either bound, and an entering variable may simply flip bounds when
//! its own bound is the tightest ratio limit. Pivoting uses the most-negative
//! rule with lowest-index ties and falls back to Bland's rule permanently
//! after a run of degenerate pivots, preserving the termination guarantee
//! while staying fast in the common case. All tie-breaks are index-based, so
//! the solver is fully deterministic.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rat};

/// Exact optimum plus the matching dual certificate.
///
/// The dual of the program is `max b·y - cap·Σw` subject to
/// `Σ_{i: v ∈ row_i} y_i - w_v <= 1`, `y, w >= 0`; `solve_cover` returns a
/// feasible `(y, w)` whose value equals the primal optimum (verified before
/// returning).
pub(crate) struct CoverSolution {
    pub x: Vec<Rat>,
    pub value: Rat,
    pub y: Vec<Rat>,
    pub w: Vec<Rat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Basic,
    Lower,
    Upper,
}

pub(crate) fn solve_cover(
    n: usize,
    rows: &[Vec<usize>],
    b: &[Rat],
    cap: &Rat,
) -> Result<CoverSolution> {
    let m = rows.len();
    assert_eq!(b.len(), m);
    for (i, row) in rows.iter().enumerate() {
        if row.is_empty() && b[i].is_positive() {
            return Err(Error::InfeasibleCover { vertex: i });
        }
        debug_assert!(b[i] <= (cap * rat_int(row.len() as i64)) || row.is_empty());
    }

    let ncols = n + m;
    // tableau starts as B^{-1}·[A | -I] with B = -I, i.e. [-A | I]
    let mut tab: Vec<Vec<Rat>> = vec![vec![Rat::zero(); ncols]; m];
    for (i, row) in rows.iter().enumerate() {
        for &v in row {
            tab[i][v] = -Rat::one();
        }
        tab[i][n + i] = Rat::one();
    }
    let mut basis: Vec<usize> = (n..ncols).collect();
    let mut status: Vec<Status> = vec![Status::Upper; n];
    status.extend(std::iter::repeat_n(Status::Basic, m));
    // s_i = cap·|row_i| - b_i >= 0: the all-at-cap point is feasible
    let mut xb: Vec<Rat> = (0..m)
        .map(|i| cap * rat_int(rows[i].len() as i64) - &b[i])
        .collect();

    let mut bland = false;
    let mut stall = 0usize;
    let stall_limit = 2 * (n + m) + 16;
    let max_iter = 1_000 + 64 * (n + 1) * (m + 1);

    for _iter in 0..max_iter {
        let cb_rows: Vec<usize> = (0..m).filter(|&i| basis[i] < n).collect();
        let reduced = |j: usize| -> Rat {
            let mut z = if j < n { Rat::one() } else { Rat::zero() };
            for &i in &cb_rows {
                z -= &tab[i][j];
            }
            z
        };

        // entering column
        let mut enter: Option<(usize, Rat)> = None;
        for (j, &st) in status.iter().enumerate() {
            let improving = match st {
                Status::Basic => continue,
                Status::Lower => {
                    let z = reduced(j);
                    if z.is_negative() {
                        Some(z)
                    } else {
                        None
                    }
                }
                Status::Upper => {
                    let z = reduced(j);
                    if z.is_positive() {
                        Some(z)
                    } else {
                        None
                    }
                }
            };
            let Some(z) = improving else { continue };
            if bland {
                enter = Some((j, z));
                break;
            }
            match &enter {
                Some((_, best)) if z.abs() <= best.abs() => {}
                _ => enter = Some((j, z)),
            }
        }
        let Some((enter_col, _)) = enter else {
            // optimal
            return extract(n, m, rows, b, cap, &tab, &basis, &status, &xb);
        };

        // ratio test; sigma_pos: entering moves up from its lower bound
        let sigma_pos = status[enter_col] == Status::Lower;
        // the entering variable's own opposite bound (x variables only;
        // surpluses are unbounded above and only ever enter from below)
        let mut best_t: Option<Rat> = (enter_col < n).then(|| cap.clone());
        let mut leave: Option<usize> = None;
        for i in 0..m {
            let d = &tab[i][enter_col];
            if d.is_zero() {
                continue;
            }
            let shrinking = if sigma_pos {
                d.is_positive()
            } else {
                d.is_negative()
            };
            let t_i = if shrinking {
                &xb[i] / d.abs()
            } else if basis[i] < n {
                (cap - &xb[i]) / d.abs()
            } else {
                continue; // surplus growing: no limit
            };
            let replace = match (&best_t, leave) {
                (None, _) => true,
                (Some(t), None) => t_i < *t, // never displace the flip on a tie
                (Some(t), Some(r)) => t_i < *t || (t_i == *t && basis[i] < basis[r]),
            };
            if replace {
                best_t = Some(t_i);
                leave = Some(i);
            }
        }
        let Some(t) = best_t else {
            return Err(Error::SolverInternal(
                "covering objective cannot be unbounded".into(),
            ));
        };

        match leave {
            None => {
                // bound flip: t == cap > 0, strict objective progress
                for i in 0..m {
                    let step = &t * &tab[i][enter_col];
                    if sigma_pos {
                        xb[i] -= step;
                    } else {
                        xb[i] += step;
                    }
                }
                status[enter_col] = if sigma_pos {
                    Status::Upper
                } else {
                    Status::Lower
                };
                stall = 0;
            }
            Some(r) => {
                let enter_val = if sigma_pos { t.clone() } else { cap - &t };
                for i in 0..m {
                    if i == r {
                        continue;
                    }
                    let step = &t * &tab[i][enter_col];
                    if sigma_pos {
                        xb[i] -= step;
                    } else {
                        xb[i] += step;
                    }
                }
                let d_r_positive = tab[r][enter_col].is_positive();
                let leaving_hits_lower = sigma_pos == d_r_positive;
                status[basis[r]] = if leaving_hits_lower {
                    Status::Lower
                } else {
                    Status::Upper
                };

                let piv = tab[r][enter_col].clone();
                for c in tab[r].iter_mut() {
                    if !c.is_zero() {
                        *c = &*c / &piv;
                    }
                }
                let pivot_row = tab[r].clone();
                for (i, row) in tab.iter_mut().enumerate() {
                    if i == r || row[enter_col].is_zero() {
                        continue;
                    }
                    let factor = row[enter_col].clone();
                    for (c, p) in pivot_row.iter().enumerate() {
                        if !p.is_zero() {
                            let delta = &factor * p;
                            row[c] -= delta;
                        }
                    }
                }
                basis[r] = enter_col;
                status[enter_col] = Status::Basic;
                xb[r] = enter_val;

                if t.is_zero() {
                    stall += 1;
                    if stall > stall_limit {
                        bland = true;
                    }
                } else {
                    stall = 0;
                }
            }
        }
    }
    Err(Error::SolverInternal(format!(
        "pivot limit exceeded on a {m}x{n} program"
    )))
}

/// Read the optimum off the final tableau and verify primal feasibility,
/// dual feasibility, and strong duality exactly.
#[allow(clippy::too_many_arguments)]
fn extract(
    n: usize,
    m: usize,
    rows: &[Vec<usize>],
    b: &[Rat],
    cap: &Rat,
    tab: &[Vec<Rat>],
    basis: &[usize],
    status: &[Status],
    xb: &[Rat],
) -> Result<CoverSolution> {
    let mut row_of = vec![usize::MAX; n + m];
    for (i, &j) in basis.iter().enumerate() {
        row_of[j] = i;
    }
    let mut x = vec![Rat::zero(); n];
    for (j, xj) in x.iter_mut().enumerate() {
        *xj = match status[j] {
            Status::Basic => xb[row_of[j]].clone(),
            Status::Lower => Rat::zero(),
            Status::Upper => cap.clone(),
        };
    }
    let value: Rat = x.iter().sum();

    let cb_rows: Vec<usize> = (0..m).filter(|&i| basis[i] < n).collect();
    let mut y = vec![Rat::zero(); m];
    for (i2, yi) in y.iter_mut().enumerate() {
        let mut acc = Rat::zero();
        for &i in &cb_rows {
            acc += &tab[i][n + i2];
        }
        *yi = -acc;
    }
    let mut w = vec![Rat::zero(); n];
    for (j, wj) in w.iter_mut().enumerate() {
        let mut z = Rat::one();
        for &i in &cb_rows {
            z -= &tab[i][j];
        }
        if z.is_negative() {
            *wj = -z;
        }
    }

    // exact certification; any failure here is a solver bug
    for (j, xj) in x.iter().enumerate() {
        if xj.is_negative() || xj > cap {
            return Err(Error::SolverInternal(format!("x[{j}] outside its box")));
        }
    }
    for (i, row) in rows.iter().enumerate() {
        let covered: Rat = row.iter().map(|&v| &x[v]).sum();
        if covered < b[i] {
            return Err(Error::SolverInternal(format!("row {i} left uncovered")));
        }
    }
    for (i, yi) in y.iter().enumerate() {
        if yi.is_negative() {
            return Err(Error::SolverInternal(format!("dual y[{i}] negative")));
        }
    }
    let mut col_sums = vec![Rat::zero(); n];
    for (i, row) in rows.iter().enumerate() {
        for &v in row {
            col_sums[v] += &y[i];
        }
    }
    for j in 0..n {
        if &col_sums[j] - &w[j] > Rat::one() {
            return Err(Error::SolverInternal(format!(
                "dual constraint {j} violated"
            )));
        }
    }
    let dual_value: Rat =
        b.iter().zip(&y).map(|(bi, yi)| bi * yi).sum::<Rat>() - cap * w.iter().sum::<Rat>();
    if dual_value != value {
        return Err(Error::SolverInternal(format!(
            "duality gap: primal {value} vs dual {dual_value}"
        )));
    }
    Ok(CoverSolution { x, value, y, w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn solve(n: usize, rows: &[Vec<usize>], b: &[Rat], cap: Rat) -> CoverSolution {
        solve_cover(n, rows, b, &cap).unwrap()
    }

    #[test]
    fn square_cycle_fractional_cover() {
        // C_4 closed neighborhoods: optimum is (1/3, 1/3, 1/3, 1/3) -> 4/3
        let rows = vec![
            vec![0usize, 1, 3],
            vec![0, 1, 2],
            vec![1, 2, 3],
            vec![0, 2, 3],
        ];
        let b = vec![Rat::one(); 4];
        let sol = solve(4, &rows, &b, Rat::one());
        assert_eq!(sol.value, rat(4, 3));
    }

    #[test]
    fn upper_bounds_bind() {
        // single row covering both variables, demand 2, cap 1 -> x = (1, 1)
        let rows = vec![vec![0usize, 1], vec![0, 1]];
        let b = vec![rat_int(2), rat_int(2)];
        let sol = solve(2, &rows, &b, Rat::one());
        assert_eq!(sol.value, rat_int(2));
        assert_eq!(sol.x, vec![Rat::one(), Rat::one()]);
    }

    #[test]
    fn zero_demand_is_free() {
        let rows = vec![vec![0usize], vec![0, 1]];
        let b = vec![Rat::zero(), Rat::zero()];
        let sol = solve(2, &rows, &b, Rat::one());
        assert!(sol.value.is_zero());
    }

    #[test]
    fn empty_row_with_demand_is_infeasible() {
        let rows = vec![vec![], vec![0usize, 1]];
        let b = vec![Rat::one(), Rat::one()];
        assert!(matches!(
            solve_cover(2, &rows, &b, &Rat::one()),
            Err(Error::InfeasibleCover { vertex: 0 })
        ));
    }

    #[test]
    fn disjoint_rows_force_additivity() {
        // two separate K_2 cliques: each needs total 1 -> optimum 2
        let rows = vec![vec![0usize, 1], vec![0, 1], vec![2, 3], vec![2, 3]];
        let b = vec![Rat::one(); 4];
        let sol = solve(4, &rows, &b, Rat::one());
        assert_eq!(sol.value, rat_int(2));
    }
}
