//! Small deterministic optimization kit: golden-section line search and a
//! dense BFGS with Armijo backtracking. Shared by the numerical translation
//! bound, the laminate catalog search and the envelope oracle refinement.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section minimization of `f` on `[a, b]` to interval width `tol`.
/// Returns `(x_min, f_min)` including the endpoints as candidates.
pub fn golden_min<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let mut best = (x1, f1);
    if f2 < best.1 {
        best = (x2, f2);
    }
    let fa = f(lo);
    if fa < best.1 {
        best = (lo, fa);
    }
    let fb = f(hi);
    if fb < best.1 {
        best = (hi, fb);
    }
    best
}

/// Golden-section maximization on `[a, b]`.
pub fn golden_max<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (x, neg) = golden_min(|t| -f(t), a, b, tol);
    (x, -neg)
}

/// Result of a BFGS run.
#[derive(Debug, Clone)]
pub struct BfgsResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub grad_norm: f64,
    pub iterations: usize,
}

/// Dense BFGS minimization with Armijo backtracking.
///
/// `fg` evaluates the objective and writes the gradient into its second
/// argument. Terminates when the gradient norm or the step length falls
/// below `tol`, or after `max_iter` iterations.
pub fn bfgs<F>(mut fg: F, x0: &[f64], tol: f64, max_iter: usize) -> BfgsResult
where
    F: FnMut(&[f64], &mut [f64]) -> f64,
{
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut g = vec![0.0; n];
    let mut f = fg(&x, &mut g);

    // Inverse Hessian approximation, dense row-major.
    let mut h = vec![0.0; n * n];
    for i in 0..n {
        h[i * n + i] = 1.0;
    }

    let mut dir = vec![0.0; n];
    let mut x_new = vec![0.0; n];
    let mut g_new = vec![0.0; n];
    let mut iterations = 0;

    for it in 0..max_iter {
        iterations = it;
        let gnorm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        if gnorm <= tol {
            break;
        }
        // dir = -H g
        for i in 0..n {
            let mut s = 0.0;
            for j in 0..n {
                s += h[i * n + j] * g[j];
            }
            dir[i] = -s;
        }
        let mut slope: f64 = dir.iter().zip(&g).map(|(d, gi)| d * gi).sum();
        if slope >= 0.0 {
            // Reset to steepest descent if curvature information went bad.
            for i in 0..n {
                for j in 0..n {
                    h[i * n + j] = if i == j { 1.0 } else { 0.0 };
                }
                dir[i] = -g[i];
            }
            slope = -g.iter().map(|v| v * v).sum::<f64>();
        }

        // Armijo backtracking.
        let mut step = 1.0;
        let mut f_new;
        let mut accepted = false;
        for _ in 0..60 {
            for i in 0..n {
                x_new[i] = x[i] + step * dir[i];
            }
            f_new = fg(&x_new, &mut g_new);
            if f_new <= f + 1e-4 * step * slope {
                accepted = true;
                // BFGS update.
                let mut sy = 0.0;
                for i in 0..n {
                    sy += (x_new[i] - x[i]) * (g_new[i] - g[i]);
                }
                if sy > 1e-14 {
                    let rho = 1.0 / sy;
                    // H <- (I - rho s yᵀ) H (I - rho y sᵀ) + rho s sᵀ
                    let s: Vec<f64> = (0..n).map(|i| x_new[i] - x[i]).collect();
                    let y: Vec<f64> = (0..n).map(|i| g_new[i] - g[i]).collect();
                    let mut hy = vec![0.0; n];
                    for i in 0..n {
                        let mut acc = 0.0;
                        for j in 0..n {
                            acc += h[i * n + j] * y[j];
                        }
                        hy[i] = acc;
                    }
                    let yhy: f64 = y.iter().zip(&hy).map(|(a, b)| a * b).sum();
                    for i in 0..n {
                        for j in 0..n {
                            h[i * n + j] += rho * rho * yhy * s[i] * s[j]
                                - rho * (hy[i] * s[j] + s[i] * hy[j])
                                + rho * s[i] * s[j];
                        }
                    }
                }
                let step_norm = step * dir.iter().map(|v| v * v).sum::<f64>().sqrt();
                x.copy_from_slice(&x_new);
                g.copy_from_slice(&g_new);
                f = f_new;
                if step_norm <= tol {
                    iterations = it + 1;
                    return BfgsResult {
                        x,
                        value: f,
                        grad_norm: g.iter().map(|v| v * v).sum::<f64>().sqrt(),
                        iterations,
                    };
                }
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    let grad_norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
    BfgsResult {
        x,
        value: f,
        grad_norm,
        iterations,
    }
}
