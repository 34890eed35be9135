//! Dense two-phase primal simplex with Bland's rule.
//!
//! Solves `maximize ⟨c, x⟩ subject to ⟨a_i, x⟩ <= b_i` over free variables
//! `x ∈ ℝⁿ`. Problems here are tiny (a few dozen rows), so the tableau is
//! stored densely and every pivot touches every entry.

use super::Vector;
use crate::error::{GeomError, Result};

const PIVOT_EPS: f64 = 1e-11;
const COST_EPS: f64 = 1e-11;
const MAX_PIVOTS: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgramResult {
    pub status: LpStatus,
    /// Optimal point, present iff `status == Optimal`.
    pub point: Option<Vector>,
    /// Optimal objective value, present iff `status == Optimal`.
    pub objective: Option<f64>,
}

impl LinearProgramResult {
    fn without_point(status: LpStatus) -> Self {
        Self {
            status,
            point: None,
            objective: None,
        }
    }
}

struct Tableau {
    /// Row-major, `cols + 1` entries per row; the last entry is the rhs.
    a: Vec<f64>,
    rows: usize,
    cols: usize,
    basis: Vec<usize>,
    /// Reduced costs followed by minus the objective value.
    cost: Vec<f64>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.cols + 1
    }

    fn at(&self, r: usize, c: usize) -> f64 {
        self.a[r * self.width() + c]
    }

    fn rhs(&self, r: usize) -> f64 {
        self.at(r, self.cols)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let w = self.width();
        let p = self.at(row, col);
        for c in 0..w {
            self.a[row * w + c] /= p;
        }
        let pivot_row: Vec<f64> = self.a[row * w..(row + 1) * w].to_vec();
        for r in 0..self.rows {
            if r == row {
                continue;
            }
            let f = self.a[r * w + col];
            if f != 0.0 {
                for c in 0..w {
                    self.a[r * w + c] -= f * pivot_row[c];
                }
                self.a[r * w + col] = 0.0;
            }
        }
        let f = self.cost[col];
        if f != 0.0 {
            for c in 0..w {
                self.cost[c] -= f * pivot_row[c];
            }
            self.cost[col] = 0.0;
        }
        self.basis[row] = col;
    }

    /// Loads objective coefficients and prices out the current basis.
    fn set_objective(&mut self, c: &[f64]) {
        let w = self.width();
        self.cost = c.to_vec();
        self.cost.push(0.0);
        for r in 0..self.rows {
            let cb = self.cost[self.basis[r]];
            if cb != 0.0 {
                for k in 0..w {
                    self.cost[k] -= cb * self.a[r * w + k];
                }
            }
        }
    }

    /// Runs Bland-rule pivots until optimal or unbounded. Columns with
    /// `allowed[j] == false` never enter.
    fn optimize(&mut self, allowed: &[bool], pivots: &mut usize) -> Result<bool> {
        loop {
            let Some(col) = (0..self.cols).find(|&j| allowed[j] && self.cost[j] > COST_EPS) else {
                return Ok(true);
            };
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.rows {
                let arc = self.at(r, col);
                if arc > PIVOT_EPS {
                    let ratio = self.rhs(r).max(0.0) / arc;
                    leave = match leave {
                        None => Some((r, ratio)),
                        Some((br, bratio)) => {
                            let tie = (ratio - bratio).abs() <= 1e-12 * (1.0 + bratio.abs());
                            if ratio < bratio && !tie
                                || tie && self.basis[r] < self.basis[br]
                            {
                                Some((r, ratio))
                            } else {
                                Some((br, bratio))
                            }
                        }
                    };
                }
            }
            let Some((row, _)) = leave else {
                return Ok(false);
            };
            self.pivot(row, col);
            *pivots += 1;
            if *pivots > MAX_PIVOTS {
                return Err(GeomError::Numeric("simplex pivot limit exceeded".into()));
            }
        }
    }
}

/// Maximizes `⟨objective, x⟩` subject to `⟨normal_i, x⟩ <= offset_i`.
///
/// Pivoting follows Bland's rule (lowest-index entering column, lowest-index
/// basic variable among tied ratios), so identical inputs always follow the
/// same pivot sequence and return bitwise-identical results.
pub fn solve_lp(objective: &Vector, constraints: &[(Vector, f64)]) -> Result<LinearProgramResult> {
    let n = objective.len();
    if n == 0 {
        return Err(GeomError::InvalidInput("empty objective".into()));
    }
    if constraints.is_empty() {
        return Err(GeomError::InvalidInput("no constraints".into()));
    }
    for (a, b) in constraints {
        if a.len() != n {
            return Err(GeomError::DimensionMismatch {
                expected: n,
                found: a.len(),
            });
        }
        if !b.is_finite() || a.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::InvalidInput("non-finite constraint".into()));
        }
    }

    // Scale rows to unit max-norm; drop constraints with a zero normal.
    let mut rows: Vec<(Vec<f64>, f64)> = Vec::with_capacity(constraints.len());
    for (a, b) in constraints {
        let s = a.amax();
        if s == 0.0 {
            if *b < -1e-12 {
                return Ok(LinearProgramResult::without_point(LpStatus::Infeasible));
            }
            continue;
        }
        rows.push((a.iter().map(|v| v / s).collect(), b / s));
    }
    if rows.is_empty() {
        return Ok(LinearProgramResult::without_point(LpStatus::Unbounded));
    }

    // Columns: x⁺ (n), x⁻ (n), slacks (m), artificials (one per negative rhs).
    let m = rows.len();
    let n_art = rows.iter().filter(|(_, b)| *b < 0.0).count();
    let cols = 2 * n + m + n_art;
    let w = cols + 1;
    let mut t = Tableau {
        a: vec![0.0; m * w],
        rows: m,
        cols,
        basis: vec![0; m],
        cost: Vec::new(),
    };
    let mut art = 2 * n + m;
    for (r, (a, b)) in rows.iter().enumerate() {
        let sign = if *b < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t.a[r * w + j] = sign * a[j];
            t.a[r * w + n + j] = -sign * a[j];
        }
        t.a[r * w + 2 * n + r] = sign;
        t.a[r * w + cols] = sign * b;
        if *b < 0.0 {
            t.a[r * w + art] = 1.0;
            t.basis[r] = art;
            art += 1;
        } else {
            t.basis[r] = 2 * n + r;
        }
    }

    let mut pivots = 0;
    let is_art = |j: usize| j >= 2 * n + m;

    if n_art > 0 {
        let mut c1 = vec![0.0; cols];
        for c in c1.iter_mut().skip(2 * n + m) {
            *c = -1.0;
        }
        t.set_objective(&c1);
        let all = vec![true; cols];
        t.optimize(&all, &mut pivots)?;
        let infeasibility = t.cost[cols]; // = Σ artificials at the phase-one optimum
        let rhs_scale = 1.0 + rows.iter().map(|(_, b)| b.abs()).fold(0.0, f64::max);
        if infeasibility > 1e-9 * rhs_scale {
            return Ok(LinearProgramResult::without_point(LpStatus::Infeasible));
        }
        // Drive zero-level artificials out of the basis.
        let mut r = 0;
        while r < t.rows {
            if is_art(t.basis[r]) {
                let entering = (0..2 * n + m).find(|&j| t.at(r, j).abs() > 1e-9);
                match entering {
                    Some(j) => {
                        t.pivot(r, j);
                        r += 1;
                    }
                    None => {
                        // Redundant row.
                        t.a.drain(r * w..(r + 1) * w);
                        t.basis.remove(r);
                        t.rows -= 1;
                    }
                }
            } else {
                r += 1;
            }
        }
    }

    let mut c2 = vec![0.0; cols];
    for j in 0..n {
        c2[j] = objective[j];
        c2[n + j] = -objective[j];
    }
    t.set_objective(&c2);
    let allowed: Vec<bool> = (0..cols).map(|j| !is_art(j)).collect();
    if !t.optimize(&allowed, &mut pivots)? {
        return Ok(LinearProgramResult::without_point(LpStatus::Unbounded));
    }

    let mut x = Vector::zeros(n);
    for r in 0..t.rows {
        let j = t.basis[r];
        let v = t.rhs(r);
        if j < n {
            x[j] += v;
        } else if j < 2 * n {
            x[j - n] -= v;
        }
    }
    for (a, b) in constraints {
        let lhs = a.dot(&x);
        if lhs > b + 1e-7 * (1.0 + b.abs() + a.norm() * x.amax()) {
            return Err(GeomError::Numeric(format!(
                "simplex optimum violates a constraint by {:.3e}",
                lhs - b
            )));
        }
    }
    Ok(LinearProgramResult {
        status: LpStatus::Optimal,
        objective: Some(objective.dot(&x)),
        point: Some(x),
    })
}
