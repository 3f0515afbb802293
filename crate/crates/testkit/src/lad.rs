//! Exhaustive vertex-enumeration solver for small constrained least-absolute-
//! deviation fits:
//!
//! ```text
//!   minimize   (1/T) sum_i |a_i . theta - f_i|
//!   subject to c . theta = mu
//!              theta_j >= 0          for j < quad_count
//!              |theta_j| <= box      for all j
//! ```
//!
//! Every optimum of this piecewise-linear program is attained at a point where
//! `p` independent constraints are active (the equality plus `p - 1` chosen
//! from residual kinks and bounds), so enumerating all such active sets and
//! keeping the best feasible solution is exact. Only usable for tiny T and p.

/// Returns `(objective, theta)` or `None` when no feasible vertex exists
/// (cannot happen for |mu| <= box, which always admits theta = mu * e_last).
pub fn lad_vertex_oracle(
    rows: &[Vec<f64>],
    values: &[f64],
    mean_row: &[f64],
    mu: f64,
    box_bound: f64,
    quad_count: usize,
) -> Option<(f64, Vec<f64>)> {
    let t = rows.len();
    assert_eq!(t, values.len());
    let p = mean_row.len();
    assert!(rows.iter().all(|r| r.len() == p));
    assert!(quad_count <= p);

    // Candidate hyperplanes: (coefficients, rhs)
    let mut cands: Vec<(Vec<f64>, f64)> = Vec::new();
    for (r, &v) in rows.iter().zip(values) {
        cands.push((r.clone(), v));
    }
    for j in 0..p {
        let mut e = vec![0.0; p];
        e[j] = 1.0;
        if j < quad_count {
            cands.push((e.clone(), 0.0));
        } else {
            cands.push((e.clone(), -box_bound));
        }
        cands.push((e, box_bound));
    }

    let mut best: Option<(f64, Vec<f64>)> = None;
    let k = p - 1;
    let mut combo: Vec<usize> = (0..k).collect();
    if k > cands.len() {
        return None;
    }
    loop {
        if let Some(theta) = solve_active_set(&cands, &combo, mean_row, mu, p) {
            if feasible(&theta, box_bound, quad_count) {
                let obj = objective(rows, values, &theta);
                match &best {
                    Some((b, _)) if *b <= obj => {}
                    _ => best = Some((obj, theta)),
                }
            }
        }
        // next combination in lexicographic order
        if k == 0 {
            break;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if combo[i] != i + cands.len() - k {
                break;
            }
            if i == 0 {
                return best;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
    best
}

fn solve_active_set(
    cands: &[(Vec<f64>, f64)],
    combo: &[usize],
    mean_row: &[f64],
    mu: f64,
    p: usize,
) -> Option<Vec<f64>> {
    let mut m = vec![vec![0.0; p + 1]; p];
    m[0][..p].copy_from_slice(mean_row);
    m[0][p] = mu;
    for (r, &ci) in combo.iter().enumerate() {
        let (coef, rhs) = &cands[ci];
        m[r + 1][..p].copy_from_slice(coef);
        m[r + 1][p] = *rhs;
    }
    gauss_solve(m, p)
}

fn gauss_solve(mut m: Vec<Vec<f64>>, p: usize) -> Option<Vec<f64>> {
    for col in 0..p {
        let (pivot_row, pivot_abs) = (col..p)
            .map(|r| (r, m[r][col].abs()))
            .fold((col, -1.0), |acc, it| if it.1 > acc.1 { it } else { acc });
        if pivot_abs < 1e-10 {
            return None;
        }
        m.swap(col, pivot_row);
        for r in 0..p {
            if r != col {
                let factor = m[r][col] / m[col][col];
                for c in col..=p {
                    let sub = factor * m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some((0..p).map(|r| m[r][p] / m[r][r]).collect())
}

fn feasible(theta: &[f64], box_bound: f64, quad_count: usize) -> bool {
    let tol = 1e-7 * (1.0 + box_bound.abs());
    theta.iter().enumerate().all(|(j, &v)| {
        v.abs() <= box_bound + tol && (j >= quad_count || v >= -1e-7)
    })
}

fn objective(rows: &[Vec<f64>], values: &[f64], theta: &[f64]) -> f64 {
    let t = rows.len() as f64;
    rows.iter()
        .zip(values)
        .map(|(r, &v)| {
            let pred: f64 = r.iter().zip(theta).map(|(a, th)| a * th).sum();
            (pred - v).abs()
        })
        .sum::<f64>()
        / t
}
