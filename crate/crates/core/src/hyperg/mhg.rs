//! Multivariate hypergeometric series at `x * I_m` via a box-addition
//! recurrence over partitions.
//!
//! The series is summed level by level (level k = partitions of k). Each
//! partition's coefficient is obtained from its canonical parent (one box
//! removed from the last row) through an O(parts) update ratio, so no Gamma
//! evaluations occur in the hot loop. Level sums are stored in signed-log
//! form; the running plain-space scale is rebased whenever terms drift
//! toward overflow or underflow.

use std::collections::HashMap;

use crate::constants::LogValue;

use crate::{Error, Real, Result};

/// Parameter block of a `pFq` series of matrix argument.
#[derive(Debug, Clone)]
pub struct MhgParams<T> {
    /// Upper parameters `a_1 .. a_p`.
    pub upper: Vec<T>,
    /// Lower parameters `b_1 .. b_q`.
    pub lower: Vec<T>,
    /// Superscript parameter, fed literally into the Jack machinery.
    pub gamma: T,
}

impl<T: Real> MhgParams<T> {
    pub fn new(upper: Vec<T>, lower: Vec<T>, gamma: T) -> Self {
        MhgParams { upper, lower, gamma }
    }
}

/// Truncated-series result with its truncation diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct SeriesValue<T> {
    /// The partial sum.
    pub value: T,
    /// Highest level (total degree) included.
    pub degree_used: usize,
    /// Heuristic upper bound on the absolute truncation error (geometric
    /// bound on the level sums). Zero when the series terminated.
    pub tail_estimate: T,
    /// True when the series is an exact polynomial that has been summed
    /// completely.
    pub terminated: bool,
}

/// Per-level coefficient sums of a series: entry `k` is
/// `sum over partitions of k (at most m parts) of the x-free coefficient`,
/// so the series value at `x * I_m` is `sum_k sums[k] x^k`.
#[derive(Debug, Clone)]
pub struct LevelSums<T> {
    pub sums: Vec<LogValue<T>>,
    /// True when some level vanished identically, making the series an exact
    /// polynomial (every later level is zero too).
    pub terminated: bool,
}

impl<T: Real> LevelSums<T> {
    /// Degree of the polynomial when terminated: the last nonzero level.
    pub fn terminating_degree(&self) -> Option<usize> {
        if !self.terminated {
            return None;
        }
        Some(self.sums.iter().rposition(|s| !s.is_zero()).unwrap_or(0))
    }
}

/// Cell product entering the Jack normalization ratio.
fn cell_factor<T: Real>(two_over_gamma: T, leg: T, arm: T) -> T {
    (leg + two_over_gamma * (T::one() + arm)) * (leg + T::one() + two_over_gamma * arm)
}

/// Computes the per-level coefficient sums through degree `max_degree`.
///
/// Only partitions with a nonzero coefficient are carried: a vanished upper
/// Pochhammer vanishes for every extension too, so zero subtrees are never
/// visited. A level with no live partitions terminates the series (it is an
/// exact polynomial).
pub fn level_sums<T: Real>(
    params: &MhgParams<T>,
    m: u32,
    max_degree: usize,
) -> Result<LevelSums<T>> {
    let gamma = params.gamma;
    let half = gamma / T::of(2.0);
    let two_over = T::of(2.0) / gamma;
    let m_half = T::of_usize(m as usize) * half;

    let mut sums: Vec<LogValue<T>> = vec![LogValue::one()];
    if m == 0 {
        return Ok(LevelSums { sums, terminated: true });
    }

    // Live terms of the current level in plain space; the true value of an
    // entry is `value * exp(scale_ln)`.
    let mut current: HashMap<Vec<u32>, T> = HashMap::new();
    current.insert(Vec::new(), T::one());
    let mut scale_ln = T::zero();

    for _k in 1..=max_degree {
        // Candidate children of the live set, deterministically ordered
        // (reverse-lexicographic, matching the partition iterator).
        let mut candidates: Vec<Vec<u32>> = Vec::with_capacity(current.len() * 2);
        for parent in current.keys() {
            for row in 0..=parent.len() {
                let addable = if row == parent.len() {
                    (row as u32) < m
                } else {
                    row == 0 || parent[row - 1] > parent[row]
                };
                if !addable {
                    continue;
                }
                let mut child = parent.clone();
                if row == parent.len() {
                    child.push(1);
                } else {
                    child[row] += 1;
                }
                candidates.push(child);
            }
        }
        candidates.sort_unstable_by(|a, b| b.cmp(a));
        candidates.dedup();

        let mut next: HashMap<Vec<u32>, T> = HashMap::with_capacity(candidates.len());
        let mut level_total = T::zero();
        let mut max_abs = T::zero();
        for child in candidates {
            let row = child.len() - 1;
            let col = child[row] - 1; // 0-based column of the added box
            let mut parent = child.clone();
            if col == 0 {
                parent.pop();
            } else {
                parent[row] = col;
            }
            // A pruned (zero) canonical parent forces a zero child.
            let Some(&parent_value) = current.get(&parent) else { continue };

            let row_t = T::of_usize(row);
            let col_t = T::of_usize(col as usize);
            let shift = col_t - half * row_t;

            let mut numerator = T::one();
            for &a in &params.upper {
                numerator = numerator * (a + shift);
            }
            let mut denominator = T::one();
            let mut lower_vanished = false;
            for &b in &params.lower {
                let factor = b + shift;
                if factor == T::zero() {
                    lower_vanished = true;
                } else {
                    denominator = denominator * factor;
                }
            }
            if lower_vanished {
                if numerator == T::zero() {
                    // Matching upper zero: the term does not exist.
                    continue;
                }
                return Err(Error::IllConditioned(format!(
                    "lower-parameter Pochhammer vanishes at box (row {row}, col {col}) \
                     without a matching upper zero"
                )));
            }
            if numerator == T::zero() {
                continue;
            }

            // Jack-normalization update. Cells left of the new box gain one
            // arm each and telescope; cells above it gain one leg each.
            let mut j_ratio = two_over * (col_t + T::one()) * (T::one() + two_over * col_t);
            for i in 0..row {
                let leg = T::of_usize(row - 1 - i);
                let arm = T::of_usize((child[i] - 1 - col) as usize);
                j_ratio = j_ratio * cell_factor(two_over, leg + T::one(), arm)
                    / cell_factor(two_over, leg, arm);
            }

            let ratio = numerator / denominator * two_over * two_over * (m_half + shift) / j_ratio;
            let value = parent_value * ratio;
            if value == T::zero() {
                continue;
            }
            level_total = level_total + value;
            if value.abs() > max_abs {
                max_abs = value.abs();
            }
            next.insert(child, value);
        }

        if next.is_empty() {
            // Zeros propagate to every child, so the series is a polynomial.
            return Ok(LevelSums { sums, terminated: true });
        }

        sums.push(if level_total == T::zero() {
            LogValue::zero()
        } else {
            LogValue::from_parts(
                if level_total > T::zero() { 1 } else { -1 },
                level_total.abs().ln() + scale_ln,
            )
        });

        if max_abs > T::of(1e180) || max_abs < T::of(1e-180) {
            let shift_ln = max_abs.ln();
            let factor = (-shift_ln).exp();
            for v in next.values_mut() {
                *v = *v * factor;
            }
            scale_ln = scale_ln + shift_ln;
        }
        current = next;
    }

    Ok(LevelSums { sums, terminated: false })
}

/// Outcome of summing precomputed level sums at a concrete argument.
#[derive(Debug, Clone, Copy)]
pub struct LogSeriesValue<T> {
    pub value: LogValue<T>,
    pub degree_used: usize,
    /// Relative tail estimate (fraction of `value`).
    pub tail_relative: T,
    pub terminated: bool,
}

/// Sums `sum_k sums[k] x^k` with the two-level stopping rule.
///
/// Stops at level D once `|L_D| + |L_{D-1}| < rel_tol |partial|`; the tail
/// estimate is the geometric bound `|L_D| r / (1 - r)` with `r` the measured
/// last level ratio.
pub fn eval_series_log<T: Real>(
    sums: &LevelSums<T>,
    x: T,
    rel_tol: T,
) -> Result<LogSeriesValue<T>> {
    if x == T::zero() {
        return Ok(LogSeriesValue {
            value: LogValue::one(),
            degree_used: 0,
            tail_relative: T::zero(),
            terminated: true,
        });
    }
    let ln_x = x.abs().ln();
    let x_negative = x < T::zero();
    let count = sums.sums.len();

    // Signed-log term per level.
    let mut ln_terms: Vec<T> = Vec::with_capacity(count);
    let mut signs: Vec<i8> = Vec::with_capacity(count);
    let mut shift = T::neg_infinity();
    for (k, s) in sums.sums.iter().enumerate() {
        let ln_t = if s.is_zero() { T::neg_infinity() } else { s.log_abs + T::of_usize(k) * ln_x };
        let sign = if x_negative && k % 2 == 1 { -s.sign } else { s.sign };
        if ln_t > shift {
            shift = ln_t;
        }
        ln_terms.push(ln_t);
        signs.push(sign);
    }
    if !shift.is_finite() {
        // All levels zero beyond the leading 1.
        return Ok(LogSeriesValue {
            value: LogValue::one(),
            degree_used: 0,
            tail_relative: T::zero(),
            terminated: sums.terminated,
        });
    }

    let mut partial = T::zero();
    let mut previous_mag = T::infinity();
    for k in 0..count {
        let magnitude = (ln_terms[k] - shift).exp();
        partial = partial + T::of(f64::from(signs[k])) * magnitude;
        let stop = k > 0
            && k + 1 < count
            && magnitude + previous_mag < rel_tol * partial.abs()
            && ln_terms[k] < ln_terms[k - 1];
        if stop || k + 1 == count {
            let degree_used = k;
            let terminated = sums.terminated && k + 1 == count;
            let tail_relative = if terminated {
                T::zero()
            } else {
                let ratio = if previous_mag > T::zero() && previous_mag.is_finite() {
                    magnitude / previous_mag
                } else {
                    T::one()
                };
                if ratio < T::one() {
                    magnitude * ratio / (T::one() - ratio) / partial.abs().max(T::of(1e-300))
                } else {
                    T::infinity()
                }
            };
            if !terminated && !(tail_relative <= rel_tol) && k + 1 == count {
                return Err(Error::NonConvergence {
                    degree: degree_used,
                    tail_estimate: (tail_relative.to_f64().unwrap_or(f64::NAN))
                        * (shift.to_f64().unwrap_or(0.0).exp() * partial.to_f64().unwrap_or(1.0))
                            .abs(),
                    value: (shift.exp() * partial).to_f64().unwrap_or(f64::NAN),
                });
            }
            let value = if partial == T::zero() {
                LogValue::zero()
            } else {
                LogValue::from_parts(
                    if partial > T::zero() { 1 } else { -1 },
                    partial.abs().ln() + shift,
                )
            };
            return Ok(LogSeriesValue { value, degree_used, tail_relative, terminated });
        }
        if magnitude > T::zero() {
            previous_mag = magnitude;
        }
    }
    unreachable!("loop returns at the final level");
}

/// Plain-value wrapper around [`eval_series_log`].
pub fn eval_series<T: Real>(sums: &LevelSums<T>, x: T, rel_tol: T) -> Result<SeriesValue<T>> {
    let log = eval_series_log(sums, x, rel_tol)?;
    let value = log.value.value();
    Ok(SeriesValue {
        value,
        degree_used: log.degree_used,
        tail_estimate: log.tail_relative * value.abs(),
        terminated: log.terminated,
    })
}

/// Evaluates `pFq^gamma(upper; lower; x * I_m)` with truncation control.
///
/// `m = 0` returns exactly 1. Convergence requires `|x| < 1` when `p = q+1`
/// and the series does not terminate; outside that domain the evaluation
/// reports `NonConvergence`.
pub fn mhg<T: Real>(
    params: &MhgParams<T>,
    x: T,
    m: u32,
    max_degree: usize,
    rel_tol: T,
) -> Result<SeriesValue<T>> {
    let sums = level_sums(params, m, max_degree)?;
    if !sums.terminated
        && params.upper.len() == params.lower.len() + 1
        && x.abs() >= T::one()
    {
        return Err(Error::NonConvergence {
            degree: max_degree,
            tail_estimate: f64::INFINITY,
            value: f64::NAN,
        });
    }
    eval_series(&sums, x, rel_tol)
}

/// Closed Gamma-product value of a *terminating* `2F1` of matrix argument at
/// the all-ones argument `I_n`:
/// `prod_{j=0}^{n-1} G(c - (g/2) j) G(c-a-b - (g/2) j) / (G(c-a - (g/2) j) G(c-b - (g/2) j))`.
pub fn mhg_at_one_2f1<T: Real>(a: T, b: T, c: T, gamma: T, n: u32) -> Result<T> {
    let half = gamma / T::of(2.0);
    let mut product = LogValue::one();
    for j in 0..n {
        let jt = T::of_usize(j as usize);
        let args = [c - half * jt, c - a - b - half * jt, c - a - half * jt, c - b - half * jt];
        for (idx, &arg) in args.iter().enumerate() {
            if arg <= T::zero() && arg == arg.floor() {
                return Err(Error::domain(format!(
                    "Gamma pole at {arg} in the all-ones product (factor {idx}, j = {j})"
                )));
            }
        }
        product = product * crate::constants::ln_gamma_signed(args[0])?
            * crate::constants::ln_gamma_signed(args[1])?
            / crate::constants::ln_gamma_signed(args[2])?
            / crate::constants::ln_gamma_signed(args[3])?;
    }
    Ok(product.value())
}
