use crate::sets::{classical_avg_membership, Correlations, Thresholds};

use super::OracleReport;

/// Deterministic strategies `(E₁, E₂, H₁, H₂)`: both inputs may send the
/// ground state when they answer alike; otherwise one of them pays a unit of
/// `H` to be distinguishable.
pub const ATOMS: [[f64; 4]; 6] = [
    [1.0, 1.0, 0.0, 0.0],
    [-1.0, -1.0, 0.0, 0.0],
    [1.0, -1.0, 1.0, 0.0],
    [1.0, -1.0, 0.0, 1.0],
    [-1.0, 1.0, 1.0, 0.0],
    [-1.0, 1.0, 0.0, 1.0],
];

const FEAS_TOL: f64 = 1e-9;
const ROWS: usize = 5;
const COLS: usize = 8;

/// Mixture of [`ATOMS`] reproducing a point within the budget.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClassicalDecomposition {
    pub weights: [f64; 6],
    /// Average `(H₁, H₂)` of the mixture.
    pub cost: (f64, f64),
}

/// Solve the mixing problem over [`ATOMS`] by enumerating basic solutions
/// of `Σq = 1, Σq·E = e, Σq·H + s = ω` with `q, s ≥ 0`. Returns the
/// cheapest decomposition, or `None` when the point is not classical.
pub fn classical_decomposition(e: Correlations, w: Thresholds) -> Option<ClassicalDecomposition> {
    let mut a = [[0.0; COLS]; ROWS];
    for (j, atom) in ATOMS.iter().enumerate() {
        a[0][j] = 1.0;
        a[1][j] = atom[0];
        a[2][j] = atom[1];
        a[3][j] = atom[2];
        a[4][j] = atom[3];
    }
    a[3][6] = 1.0;
    a[4][7] = 1.0;
    let b = [1.0, e.e1(), e.e2(), w.omega1(), w.omega2()];

    let mut best: Option<([f64; COLS], f64)> = None;
    for mask in 0u32..(1 << COLS) {
        if mask.count_ones() as usize != ROWS {
            continue;
        }
        let cols: [usize; ROWS] = {
            let mut it = (0..COLS).filter(|j| mask & (1 << j) != 0);
            core::array::from_fn(|_| it.next().unwrap_or(0))
        };
        let mut m = [[0.0; ROWS]; ROWS];
        for r in 0..ROWS {
            for (k, &c) in cols.iter().enumerate() {
                m[r][k] = a[r][c];
            }
        }
        let Some(sol) = solve(m, b) else { continue };
        if sol.iter().any(|&v| v < -FEAS_TOL) {
            continue;
        }
        let mut x = [0.0; COLS];
        for (k, &c) in cols.iter().enumerate() {
            x[c] = sol[k].max(0.0);
        }
        let cost: f64 = (0..6).map(|j| x[j] * (ATOMS[j][2] + ATOMS[j][3])).sum();
        if best.map_or(true, |(_, c)| cost < c - 1e-15) {
            best = Some((x, cost));
        }
    }
    best.map(|(x, _)| {
        let weights: [f64; 6] = core::array::from_fn(|j| x[j]);
        let cost = (
            (0..6).map(|j| weights[j] * ATOMS[j][2]).sum(),
            (0..6).map(|j| weights[j] * ATOMS[j][3]).sum(),
        );
        ClassicalDecomposition { weights, cost }
    })
}

/// Gaussian elimination with partial pivoting; `None` for singular systems.
fn solve(mut m: [[f64; ROWS]; ROWS], mut b: [f64; ROWS]) -> Option<[f64; ROWS]> {
    for col in 0..ROWS {
        let pivot = (col..ROWS).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[pivot][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..ROWS {
            let f = m[r][col] / m[col][col];
            let pivot_row = m[col];
            for (dst, src) in m[r].iter_mut().zip(pivot_row).skip(col) {
                *dst -= f * src;
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = [0.0; ROWS];
    for r in (0..ROWS).rev() {
        let tail: f64 = (r + 1..ROWS).map(|k| m[r][k] * x[k]).sum();
        x[r] = (b[r] - tail) / m[r][r];
    }
    Some(x)
}

/// Compare [`classical_decomposition`] with the closed-form membership on a
/// `grid × grid` lattice of the square. `observed` counts disagreements.
pub fn classical_agreement(w: Thresholds, grid: usize) -> OracleReport {
    let grid = grid.max(2);
    let coord = |k: usize| -1.0 + 2.0 * k as f64 / (grid - 1) as f64;
    let mut disagreements = 0u64;
    for i in 0..grid {
        for j in 0..grid {
            let e = Correlations::clamped(coord(i), coord(j));
            let lp = classical_decomposition(e, w).is_some();
            if lp != classical_avg_membership(e, w).member {
                disagreements += 1;
            }
        }
    }
    let n = (grid * grid) as u64;
    OracleReport::new(
        "classical-decomposition",
        n,
        None,
        -(disagreements as f64),
        0.0,
    )
    .with_observed(disagreements as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn w(a: f64, b: f64) -> Thresholds {
        Thresholds::new(a, b).unwrap()
    }

    #[test]
    fn explicit_decomposition_of_hexagon_vertex() {
        let d =
            classical_decomposition(Correlations::new(1.0, 0.4).unwrap(), w(0.15, 0.15)).unwrap();
        let expect = [0.7, 0.0, 0.15, 0.15, 0.0, 0.0];
        for (g, e) in d.weights.iter().zip(expect) {
            assert_abs_diff_eq!(*g, e, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(d.cost.0, 0.15, epsilon = 1e-12);
        assert_abs_diff_eq!(d.cost.1, 0.15, epsilon = 1e-12);
    }

    #[test]
    fn anticorrelation_beyond_budget_is_infeasible() {
        assert!(
            classical_decomposition(Correlations::new(0.4, -0.4).unwrap(), w(0.15, 0.15)).is_none()
        );
    }

    #[test]
    fn diagonal_costs_nothing() {
        for c in [-1.0, -0.3, 0.0, 0.8, 1.0] {
            let d = classical_decomposition(Correlations::new(c, c).unwrap(), w(0.0, 0.0)).unwrap();
            assert_eq!(d.cost, (0.0, 0.0));
        }
    }
}
