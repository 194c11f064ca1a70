//! Slope fitting, correlation with significance, scatter binning, and lag-1
//! directional regression tallies over distance series.

use crate::{Error, Result};

/// Per-pair convergence slopes in the two embedded spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopePair {
    pub pair: (String, String),
    pub beta_social: f64,
    pub beta_semantic: f64,
}

/// Least-squares line fit of `y` against `t`.
///
/// Returns (slope, intercept, p) where p is the two-sided significance of
/// the slope under a t-statistic with n−2 degrees of freedom. A constant `y`
/// reports slope 0 with the sentinel p = 1; a constant `t` is an error.
pub fn ols_slope(t: &[f64], y: &[f64]) -> Result<(f64, f64, f64)> {
    check_series(t, y)?;
    let n = t.len();
    let ybar = mean(y);
    if y.iter().all(|v| *v == y[0]) {
        return Ok((0.0, ybar, 1.0));
    }
    let tbar = mean(t);
    let sxx: f64 = t.iter().map(|v| (v - tbar) * (v - tbar)).sum();
    if sxx == 0.0 {
        return Err(Error::data("slope of a constant time axis".to_string()));
    }
    let sxy: f64 = t.iter().zip(y).map(|(a, b)| (a - tbar) * (b - ybar)).sum();
    let slope = sxy / sxx;
    let intercept = ybar - slope * tbar;
    let rss: f64 = t
        .iter()
        .zip(y)
        .map(|(a, b)| {
            let r = b - intercept - slope * a;
            r * r
        })
        .sum();
    let df = n - 2;
    let se = (rss / df as f64 / sxx).sqrt();
    let p = if se == 0.0 {
        0.0
    } else {
        student_two_sided_p(slope / se, df)
    };
    Ok((slope, intercept, p))
}

/// Sample Pearson correlation and its two-sided significance.
///
/// p comes from t = r·√((n−2)/(1−r²)) with n−2 degrees of freedom; a
/// correlation at either bound reports p = 0 directly.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<(f64, f64)> {
    check_series(x, y)?;
    if x.iter().all(|v| *v == x[0]) || y.iter().all(|v| *v == y[0]) {
        return Err(Error::data("correlation of a constant series".to_string()));
    }
    let n = x.len();
    let xbar = mean(x);
    let ybar = mean(y);
    let sxx: f64 = x.iter().map(|v| (v - xbar) * (v - xbar)).sum();
    let syy: f64 = y.iter().map(|v| (v - ybar) * (v - ybar)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - xbar) * (b - ybar)).sum();
    let r = (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0);
    let one_minus_r2 = (1.0 - r) * (1.0 + r);
    let p = if one_minus_r2 <= 1e-15 {
        0.0
    } else {
        let t = r * ((n - 2) as f64 / one_minus_r2).sqrt();
        student_two_sided_p(t, n - 2)
    };
    Ok((r, p))
}

fn check_series(x: &[f64], y: &[f64]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::data(format!(
            "series lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 3 {
        return Err(Error::data(format!(
            "need at least 3 points, got {}",
            x.len()
        )));
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::data("series values must be finite".to_string()));
    }
    Ok(())
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Equal-width binning of a scatter: (bin center, mean y, count) per
/// non-empty bin, ascending. All-equal `x` collapses to one degenerate bin.
pub fn bin_means(x: &[f64], y: &[f64], nbins: usize) -> Result<Vec<(f64, f64, usize)>> {
    if nbins == 0 {
        return Err(Error::data("need at least one bin".to_string()));
    }
    if x.is_empty() {
        return Err(Error::data("binning an empty scatter".to_string()));
    }
    if x.len() != y.len() {
        return Err(Error::data(format!(
            "series lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::data("series values must be finite".to_string()));
    }
    let lo = x.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if lo == hi {
        return Ok(vec![(lo, mean(y), y.len())]);
    }
    let width = (hi - lo) / nbins as f64;
    let mut sums = vec![0.0f64; nbins];
    let mut counts = vec![0usize; nbins];
    for (a, b) in x.iter().zip(y) {
        let idx = (((a - lo) / width) as usize).min(nbins - 1);
        sums[idx] += b;
        counts[idx] += 1;
    }
    Ok((0..nbins)
        .filter(|&i| counts[i] > 0)
        .map(|i| (lo + (i as f64 + 0.5) * width, sums[i] / counts[i] as f64, counts[i]))
        .collect())
}

/// Outcome of running the lag-1 directional regression over many pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct GrangerTally {
    pub direction: String,
    /// Pairs actually fitted.
    pub n_regressions: usize,
    /// Fitted pairs with a positive lag coefficient significant at `alpha`.
    pub positive_significant: usize,
    /// Fitted pairs significant at `alpha` regardless of sign.
    pub significant: usize,
    pub alpha: f64,
    /// Pairs skipped: too short for the regression or numerically singular.
    pub excluded: usize,
}

impl GrangerTally {
    pub fn pct_positive_significant(&self) -> f64 {
        100.0 * self.positive_significant as f64 / self.n_regressions as f64
    }

    /// Share of significant fits whose coefficient is positive; None when
    /// nothing reached significance.
    pub fn pct_positive_among_significant(&self) -> Option<f64> {
        if self.significant == 0 {
            None
        } else {
            Some(100.0 * self.positive_significant as f64 / self.significant as f64)
        }
    }
}

/// For each (x, y) pair, fit y_t = a + g·y_{t−1} + b·x_{t−1} by least
/// squares and count fits where b > 0 with two-sided p < `alpha`.
///
/// `include_ar` drops the y_{t−1} term for sensitivity runs. Pairs too short
/// for the regression (or singular, e.g. constant series) are excluded and
/// counted; erroring out only happens when no pair at all can be fitted.
pub fn granger_tally(
    direction: &str,
    pairs: &[(Vec<f64>, Vec<f64>)],
    alpha: f64,
    include_ar: bool,
) -> Result<GrangerTally> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::data(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let mut fitted = 0;
    let mut positive_significant = 0;
    let mut significant = 0;
    let mut excluded = 0;
    for (x, y) in pairs {
        match fit_lag(x, y, include_ar) {
            Some((beta, p)) => {
                fitted += 1;
                if p < alpha {
                    significant += 1;
                    if beta > 0.0 {
                        positive_significant += 1;
                    }
                }
            }
            None => excluded += 1,
        }
    }
    if fitted == 0 {
        return Err(Error::data(format!(
            "no pair could be fitted for direction {direction}"
        )));
    }
    Ok(GrangerTally {
        direction: direction.to_string(),
        n_regressions: fitted,
        positive_significant,
        significant,
        alpha,
        excluded,
    })
}

fn fit_lag(x: &[f64], y: &[f64], include_ar: bool) -> Option<(f64, f64)> {
    let t_len = y.len();
    if x.len() != t_len {
        return None;
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return None;
    }
    let p = if include_ar { 3 } else { 2 };
    // Rows are t = 1..T, so the residual needs T−1−p ≥ 1 degrees of freedom.
    if t_len < p + 2 {
        return None;
    }
    let n = t_len - 1;
    let mut xtx = vec![vec![0.0f64; p]; p];
    let mut xty = vec![0.0f64; p];
    let predictors = |t: usize| -> Vec<f64> {
        if include_ar {
            vec![1.0, y[t - 1], x[t - 1]]
        } else {
            vec![1.0, x[t - 1]]
        }
    };
    #[allow(clippy::needless_range_loop)]
    for t in 1..t_len {
        let row = predictors(t);
        for i in 0..p {
            for j in 0..p {
                xtx[i][j] += row[i] * row[j];
            }
            xty[i] += row[i] * y[t];
        }
    }
    let mut unit = vec![0.0; p];
    unit[p - 1] = 1.0;
    let sol = gauss_solve(xtx, vec![xty, unit])?;
    let coef = &sol[0];
    let inv_last = sol[1][p - 1];
    let rss: f64 = (1..t_len)
        .map(|t| {
            let fit: f64 = predictors(t).iter().zip(coef).map(|(a, b)| a * b).sum();
            let r = y[t] - fit;
            r * r
        })
        .sum();
    let df = n - p;
    let beta = coef[p - 1];
    let var_beta = rss / df as f64 * inv_last;
    if !beta.is_finite() || !var_beta.is_finite() {
        return None;
    }
    let se = var_beta.max(0.0).sqrt();
    let pv = if se == 0.0 {
        if beta != 0.0 {
            0.0
        } else {
            1.0
        }
    } else {
        student_two_sided_p(beta / se, df)
    };
    Some((beta, pv))
}

/// Solve A·x = b for several right-hand sides by Gaussian elimination with
/// partial pivoting. None marks a singular system.
fn gauss_solve(mut a: Vec<Vec<f64>>, mut rhs: Vec<Vec<f64>>) -> Option<Vec<Vec<f64>>> {
    let n = a.len();
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(1e-30);
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap()
        })?;
        if a[pivot][col].abs() < 1e-12 * scale {
            return None;
        }
        a.swap(col, pivot);
        for r in rhs.iter_mut() {
            r.swap(col, pivot);
        }
        for row in (col + 1)..n {
            let f = a[row][col] / a[col][col];
            #[allow(clippy::needless_range_loop)]
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            for r in rhs.iter_mut() {
                r[row] -= f * r[col];
            }
        }
    }
    let mut out = Vec::with_capacity(rhs.len());
    for r in rhs {
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut acc = r[i];
            for k in (i + 1)..n {
                acc -= a[i][k] * x[k];
            }
            x[i] = acc / a[i][i];
        }
        out.push(x);
    }
    Some(out)
}

/// Two-sided tail probability of Student's t with `df` degrees of freedom,
/// via the regularized incomplete beta function.
fn student_two_sided_p(t: f64, df: usize) -> f64 {
    let v = df as f64;
    reg_inc_beta(0.5 * v, 0.5, v / (v + t * t))
}

fn reg_inc_beta(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_cont_frac(a, b, x) / a
    } else {
        1.0 - front * beta_cont_frac(b, a, 1.0 - x) / b
    }
}

/// Continued fraction for the incomplete beta (modified Lentz iteration).
fn beta_cont_frac(a: f64, b: f64, x: f64) -> f64 {
    const FPMIN: f64 = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < FPMIN {
        d = FPMIN;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=300 {
        let mf = m as f64;
        let m2 = 2.0 * mf;
        let aa = mf * (b - mf) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + mf) * (qab + mf) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 3e-16 {
            break;
        }
    }
    h
}

#[allow(clippy::excessive_precision)]
fn ln_gamma(x: f64) -> f64 {
    const COEFFS: [f64; 8] = [
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    let z = x - 1.0;
    let mut acc = 0.99999999999980993;
    for (i, &c) in COEFFS.iter().enumerate() {
        acc += c / (z + (i + 1) as f64);
    }
    let t = z + 7.5;
    0.5 * (std::f64::consts::TAU).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}
