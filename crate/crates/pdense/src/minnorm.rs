//! Wolfe's minimum-norm-point algorithm over a polytope given by a linear
//! optimization oracle.
//!
//! The caller supplies `oracle(w)`, which must return a vertex of the
//! polytope minimizing the inner product with `w`. For submodular function
//! minimization the polytope is the base polytope and the oracle is the
//! greedy algorithm over a sort of `w`; the set minimizing the function is
//! then read off the sign pattern of the returned point.

/// Outcome of one min-norm-point run.
#[derive(Clone, Debug)]
pub struct MinNormResult {
    /// Point of (approximately) minimum Euclidean norm in the polytope.
    pub x: Vec<f64>,
    /// Oracle calls performed.
    pub iterations: usize,
    /// Final optimality gap `<x, x - q>` where `q` is the last oracle
    /// vertex; nonpositive-ish at a true minimum.
    pub gap: f64,
    pub converged: bool,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Minimize `||sum_i beta_i v_i||` subject to `sum_i beta_i = 1` (signs
/// free) by solving the KKT system `[G 1; 1^T 0] [beta; mu] = [0; 1]` with
/// partial-pivot elimination; a tiny ridge is added on near-singularity.
fn affine_minimizer(vertices: &[Vec<f64>]) -> Vec<f64> {
    let k = vertices.len();
    if k == 1 {
        return vec![1.0];
    }
    let mut gram = vec![vec![0.0f64; k]; k];
    let mut scale: f64 = 0.0;
    for i in 0..k {
        for j in i..k {
            let g = dot(&vertices[i], &vertices[j]);
            gram[i][j] = g;
            gram[j][i] = g;
            scale = scale.max(g.abs());
        }
    }
    for ridge in [0.0, scale.max(1.0) * 1e-12, scale.max(1.0) * 1e-9] {
        if let Some(beta) = solve_kkt(&gram, ridge) {
            return beta;
        }
    }
    // All pivots collapsed: the vertices are numerically identical; any
    // simplex point is as good as any other.
    let mut beta = vec![0.0; k];
    beta[0] = 1.0;
    beta
}

fn solve_kkt(gram: &[Vec<f64>], ridge: f64) -> Option<Vec<f64>> {
    let k = gram.len();
    let m = k + 1;
    // Augmented [G + ridge*I, 1 | 0] with the simplex row [1^T, 0 | 1].
    let mut a = vec![vec![0.0f64; m + 1]; m];
    for i in 0..k {
        for j in 0..k {
            a[i][j] = gram[i][j];
        }
        a[i][i] += ridge;
        a[i][k] = 1.0;
        a[k][i] = 1.0;
    }
    a[k][m] = 1.0;
    for col in 0..m {
        let pivot = (col..m).max_by(|&r1, &r2| {
            a[r1][col]
                .abs()
                .partial_cmp(&a[r2][col].abs())
                .expect("pivot magnitudes are never NaN")
        })?;
        if a[pivot][col].abs() < 1e-13 {
            return None;
        }
        a.swap(col, pivot);
        for row in 0..m {
            if row == col {
                continue;
            }
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            let (pivot_row, work_row) = if row < col {
                let (head, tail) = a.split_at_mut(col);
                (&*tail[0], &mut head[row])
            } else {
                let (head, tail) = a.split_at_mut(row);
                (&*head[col], &mut tail[0])
            };
            for (w, p) in work_row[col..=m].iter_mut().zip(&pivot_row[col..=m]) {
                *w -= factor * p;
            }
        }
    }
    let beta: Vec<f64> = (0..k).map(|i| a[i][m] / a[i][i]).collect();
    if beta.iter().any(|b| !b.is_finite()) {
        return None;
    }
    Some(beta)
}

/// Run Wolfe's algorithm. Terminates when `<x, x - q> <= tol * max(1, <x,x>)`
/// plus a rounding-noise allowance proportional to the computed inner
/// products, for the freshly returned oracle vertex `q`, or when `max_iter`
/// oracle calls have been spent. A stalled run (the oracle repeats a vertex
/// of the active set without meeting the tolerance) restarts once from that
/// vertex before giving up.
pub fn min_norm_point(
    n: usize,
    mut oracle: impl FnMut(&[f64]) -> Vec<f64>,
    tol: f64,
    max_iter: usize,
) -> MinNormResult {
    let q0 = oracle(&vec![0.0; n]);
    let mut vertex_scale = dot(&q0, &q0);
    let mut vertices: Vec<Vec<f64>> = vec![q0.clone()];
    let mut lambda: Vec<f64> = vec![1.0];
    let mut x = q0;
    let mut iterations = 1usize;
    let mut gap = f64::INFINITY;
    let mut restarted = false;

    while iterations < max_iter.max(2) {
        let q = oracle(&x);
        iterations += 1;
        vertex_scale = vertex_scale.max(dot(&q, &q));
        let xx = dot(&x, &x);
        gap = xx - dot(&x, &q);
        // x comes out of the Gram/KKT solve, so its absolute error scales
        // with the largest vertex norm, not with ||x|| itself; the gap
        // cannot be resolved below that rounding floor even when the true
        // minimum-norm point is near zero.
        let noise = 16.0 * f64::EPSILON * vertex_scale;
        if gap <= tol * xx.max(1.0) + noise {
            return MinNormResult {
                x,
                iterations,
                gap,
                converged: true,
            };
        }
        if vertices.iter().any(|v| v == &q) {
            // No new direction yet the gap is open: numerically stalled.
            if restarted {
                break;
            }
            restarted = true;
            x = q.clone();
            vertices = vec![q];
            lambda = vec![1.0];
            continue;
        }
        vertices.push(q);
        lambda.push(0.0);

        // Minor cycles: move to the affine minimizer of the active set,
        // dropping vertices whose coefficient would cross zero.
        loop {
            let beta = affine_minimizer(&vertices);
            if beta.iter().all(|&b| b > -1e-12) {
                lambda = beta.iter().map(|&b| b.max(0.0)).collect();
                let total: f64 = lambda.iter().sum();
                for l in &mut lambda {
                    *l /= total;
                }
                break;
            }
            let mut theta = 1.0f64;
            for (&l, &b) in lambda.iter().zip(&beta) {
                if b < 1e-12 && l > b {
                    theta = theta.min(l / (l - b));
                }
            }
            for (l, &b) in lambda.iter_mut().zip(&beta) {
                *l = (1.0 - theta) * *l + theta * b;
            }
            let mut keep = Vec::with_capacity(vertices.len());
            for (i, &l) in lambda.iter().enumerate() {
                keep.push(l > 1e-12 || (i == 0 && lambda.iter().all(|&v| v <= 1e-12)));
            }
            let mut idx = 0;
            vertices.retain(|_| {
                let k = keep[idx];
                idx += 1;
                k
            });
            let mut idx = 0;
            lambda.retain(|_| {
                let k = keep[idx];
                idx += 1;
                k
            });
            let total: f64 = lambda.iter().sum();
            for l in &mut lambda {
                *l /= total;
            }
        }
        x.fill(0.0);
        for (v, &l) in vertices.iter().zip(&lambda) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += l * vi;
            }
        }
    }
    MinNormResult {
        x,
        iterations,
        gap,
        converged: false,
    }
}
