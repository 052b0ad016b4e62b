//! Linear programs in three unknowns: `min c.x` subject to `a_i.x <= b_i`.
//!
//! The solver is a dual simplex on the constraint rows, started from an
//! artificial box `|x_k| <= BOX`. Rows are kept exactly as given, so the
//! optimal basis doubles as a certificate: its multipliers `y >= 0` satisfy
//! `sum y_i a_i = -c`.

use crate::error::{GeomError, Result};

pub type Row = ([f64; 3], f64);

const BOX: f64 = 1e6;
const MAX_DEGENERATE: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: [f64; 3],
    pub value: f64,
    /// Rows with a positive multiplier in the optimal basis, as (row index, multiplier).
    pub duals: Vec<(usize, f64)>,
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Solves `m x = r` by Gaussian elimination with partial pivoting.
pub(crate) fn solve3(m: [[f64; 3]; 3], r: [f64; 3]) -> Option<[f64; 3]> {
    let mut a = [
        [m[0][0], m[0][1], m[0][2], r[0]],
        [m[1][0], m[1][1], m[1][2], r[1]],
        [m[2][0], m[2][1], m[2][2], r[2]],
    ];
    let scale = m
        .iter()
        .flatten()
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
        .max(1e-300);
    for col in 0..3 {
        let piv = (col..3)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap_or(col);
        if a[piv][col].abs() <= 1e-13 * scale {
            return None;
        }
        a.swap(col, piv);
        for row in col + 1..3 {
            let f = a[row][col] / a[col][col];
            let pivot = a[col];
            for (dst, src) in a[row][col..].iter_mut().zip(&pivot[col..]) {
                *dst -= f * src;
            }
        }
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        let mut s = a[i][3];
        for k in i + 1..3 {
            s -= a[i][k] * x[k];
        }
        x[i] = s / a[i][i];
    }
    Some(x)
}

fn transpose(m: [[f64; 3]; 3]) -> [[f64; 3]; 3] {
    [
        [m[0][0], m[1][0], m[2][0]],
        [m[0][1], m[1][1], m[2][1]],
        [m[0][2], m[1][2], m[2][2]],
    ]
}

enum Outcome {
    Optimal { x: [f64; 3], basis: [usize; 3], y: [f64; 3] },
    Infeasible,
}

fn box_rows() -> Vec<Row> {
    let mut out = Vec::with_capacity(6);
    for k in 0..3 {
        let mut e = [0.0; 3];
        e[k] = 1.0;
        out.push((e, BOX));
        e[k] = -1.0;
        out.push((e, BOX));
    }
    out
}

fn dual_simplex(rows: &[Row], c: [f64; 3]) -> Result<Outcome> {
    let m = rows.len();
    let all: Vec<Row> = rows.iter().copied().chain(box_rows()).collect();
    let norms: Vec<f64> = all.iter().map(|(a, _)| dot(a, a).sqrt().max(1e-300)).collect();
    let mut basis = [0usize; 3];
    for k in 0..3 {
        basis[k] = m + 2 * k + usize::from(c[k] > 0.0);
    }
    let max_iter = 100 * (m + 10);
    let mut degenerate = 0usize;
    for _ in 0..max_iter {
        let ab = [all[basis[0]].0, all[basis[1]].0, all[basis[2]].0];
        let bb = [all[basis[0]].1, all[basis[1]].1, all[basis[2]].1];
        let x = solve3(ab, bb).ok_or_else(|| GeomError::LpFailure("singular basis".into()))?;
        let y = solve3(transpose(ab), [-c[0], -c[1], -c[2]])
            .ok_or_else(|| GeomError::LpFailure("singular basis".into()))?;
        let xnorm = x.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
        let bland = degenerate >= MAX_DEGENERATE;
        let mut enter: Option<(usize, f64)> = None;
        for (j, (a, b)) in all.iter().enumerate() {
            if basis.contains(&j) {
                continue;
            }
            let viol = (dot(a, &x) - b) / norms[j];
            if viol > 1e-12 * xnorm.max(b.abs() / norms[j]) {
                match enter {
                    None => enter = Some((j, viol)),
                    Some((_, v)) if !bland && viol > v => enter = Some((j, viol)),
                    _ => {}
                }
            }
        }
        let Some((j, _)) = enter else {
            return Ok(Outcome::Optimal { x, basis, y });
        };
        let w = solve3(transpose(ab), all[j].0)
            .ok_or_else(|| GeomError::LpFailure("singular basis".into()))?;
        let wmax = w.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let mut leave: Option<(usize, f64)> = None;
        for k in 0..3 {
            if w[k] > 1e-11 * wmax.max(1.0) {
                let ratio = y[k].max(0.0) / w[k];
                let better = match leave {
                    None => true,
                    Some((kk, r)) => {
                        ratio < r - 1e-15 || (ratio <= r + 1e-15 && basis[k] < basis[kk])
                    }
                };
                if better {
                    leave = Some((k, ratio));
                }
            }
        }
        let Some((k, theta)) = leave else {
            return Ok(Outcome::Infeasible);
        };
        if theta <= 1e-15 {
            degenerate += 1;
        } else {
            degenerate = 0;
        }
        basis[k] = j;
    }
    Err(GeomError::LpFailure("iteration limit reached".into()))
}

/// `min c.x` over the rows; the feasible region must be nonempty and the optimum bounded.
pub fn minimize(rows: &[Row], c: [f64; 3]) -> Result<LpSolution> {
    match dual_simplex(rows, c)? {
        Outcome::Infeasible => Err(GeomError::LpFailure("infeasible".into())),
        Outcome::Optimal { x, basis, y } => {
            let m = rows.len();
            if basis.iter().zip(&y).any(|(&r, &yk)| r >= m && yk > 1e-12)
                || x.iter().any(|v| v.abs() >= 0.5 * BOX)
            {
                return Err(GeomError::LpFailure("unbounded".into()));
            }
            let mut duals: Vec<(usize, f64)> = basis
                .iter()
                .zip(&y)
                .filter(|(&r, &yk)| r < m && yk > 0.0)
                .map(|(&r, &yk)| (r, yk))
                .collect();
            duals.sort_by_key(|d| d.0);
            Ok(LpSolution {
                x,
                value: dot(&c, &x),
                duals,
            })
        }
    }
}

/// Lexicographic minimization: each later objective is optimized over the
/// (slightly relaxed) optimal face of the earlier ones. Multipliers and
/// `value` refer to the first objective.
pub fn minimize_lex(rows: &[Row], objectives: &[[f64; 3]]) -> Result<LpSolution> {
    let first = minimize(rows, objectives[0])?;
    let mut work: Vec<Row> = rows.to_vec();
    let mut x = first.x;
    let mut prev_obj = objectives[0];
    let mut prev_val = first.value;
    for obj in &objectives[1..] {
        work.push((prev_obj, prev_val + 1e-11 * (1.0 + prev_val.abs())));
        let sol = minimize(&work, *obj)?;
        x = sol.x;
        prev_obj = *obj;
        prev_val = sol.value;
    }
    Ok(LpSolution {
        x,
        value: first.value,
        duals: first.duals,
    })
}

/// Whether the rows admit a common point.
pub fn feasible(rows: &[Row]) -> Result<bool> {
    Ok(matches!(dual_simplex(rows, [0.0; 3])?, Outcome::Optimal { .. }))
}

/// Largest normalized violation of the rows at `x`.
pub fn max_violation(rows: &[Row], x: [f64; 3]) -> f64 {
    rows.iter()
        .map(|(a, b)| (dot(a, &x) - b) / dot(a, a).sqrt().max(1e-300))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Reference solver: tries every basis of three rows; O(m^4). Ties in the
/// objective are broken by the lexicographically smallest `x`.
pub fn minimize_by_enumeration(rows: &[Row], c: [f64; 3]) -> Result<LpSolution> {
    let m = rows.len();
    let mut best: Option<(f64, [f64; 3], [usize; 3])> = None;
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let ab = [rows[i].0, rows[j].0, rows[k].0];
                let Some(x) = solve3(ab, [rows[i].1, rows[j].1, rows[k].1]) else {
                    continue;
                };
                if max_violation(rows, x) > 1e-9 {
                    continue;
                }
                let v = dot(&c, &x);
                let better = match &best {
                    None => true,
                    Some((bv, bx, _)) => {
                        v < bv - 1e-12
                            || (v <= bv + 1e-12
                                && bx.iter().zip(&x).find(|(a, b)| (*a - *b).abs() > 1e-12).is_some_and(|(a, b)| b < a))
                    }
                };
                if better {
                    best = Some((v, x, [i, j, k]));
                }
            }
        }
    }
    let (value, x, basis) = best.ok_or_else(|| GeomError::LpFailure("no feasible vertex".into()))?;
    let ab = [rows[basis[0]].0, rows[basis[1]].0, rows[basis[2]].0];
    let y = solve3(transpose(ab), [-c[0], -c[1], -c[2]]).unwrap_or([0.0; 3]);
    Ok(LpSolution {
        x,
        value,
        duals: basis
            .iter()
            .zip(&y)
            .filter(|(_, &yk)| yk > 0.0)
            .map(|(&r, &yk)| (r, yk))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unit_cube_corner() {
        let mut rows = Vec::new();
        for k in 0..3 {
            let mut e = [0.0; 3];
            e[k] = 1.0;
            rows.push((e, 1.0));
            e[k] = -1.0;
            rows.push((e, 2.0));
        }
        let sol = minimize(&rows, [1.0, -1.0, 2.0]).unwrap();
        assert_eq!(sol.x, [-2.0, 1.0, -2.0]);
        assert_eq!(sol.value, -7.0);
        let mut g = [1.0, -1.0, 2.0];
        for (r, y) in &sol.duals {
            for (gk, rk) in g.iter_mut().zip(rows[*r].0) {
                *gk += y * rk;
            }
        }
        assert!(g.iter().all(|v| v.abs() < 1e-14));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let rows = vec![([1.0, 0.0, 0.0], -1.0), ([-1.0, 0.0, 0.0], -1.0)];
        assert!(!feasible(&rows).unwrap());
        assert!(minimize(&rows, [1.0, 0.0, 0.0]).is_err());
        let rows = vec![([1.0, 0.0, 0.0], 1.0)];
        assert!(matches!(minimize(&rows, [1.0, 0.0, 0.0]), Err(GeomError::LpFailure(_))));
    }

    #[test]
    fn lexicographic_tie_break() {
        // min z over the box [0,1]^2 x [0,1] with z >= 0: whole face optimal.
        let rows = vec![
            ([1.0, 0.0, 0.0], 1.0),
            ([-1.0, 0.0, 0.0], 0.0),
            ([0.0, 1.0, 0.0], 1.0),
            ([0.0, -1.0, 0.0], 0.0),
            ([0.0, 0.0, 1.0], 1.0),
            ([0.0, 0.0, -1.0], 0.0),
        ];
        let sol = minimize_lex(&rows, &[[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]).unwrap();
        assert!(sol.x.iter().all(|v| v.abs() < 1e-9));
    }

    #[test]
    fn agrees_with_enumeration_on_random_polytopes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let m = rng.random_range(4..24);
            let rows: Vec<Row> = (0..m)
                .map(|_| {
                    let a = [
                        rng.random_range(-1.0..1.0),
                        rng.random_range(-1.0..1.0),
                        rng.random_range(-1.0..1.0),
                    ];
                    (a, rng.random_range(0.1..1.0))
                })
                .chain((0..3).flat_map(|k| {
                    let mut e = [0.0; 3];
                    e[k] = 1.0;
                    let mut f = [0.0; 3];
                    f[k] = -1.0;
                    [(e, 5.0), (f, 5.0)]
                }))
                .collect();
            let c = [
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            ];
            let a = minimize(&rows, c).unwrap();
            let b = minimize_by_enumeration(&rows, c).unwrap();
            assert!((a.value - b.value).abs() < 1e-9, "{} vs {}", a.value, b.value);
            assert!(max_violation(&rows, a.x) < 1e-9);
        }
    }
}
