//! Classical one-variable hypergeometric functions: Gauss 2F1 with its
//! connection formula, the confluent 1F1 and 0F1, and Tricomi's U.

use crate::constants::{ln_gamma_signed, recip_gamma, LogValue};
use crate::quad::exp_sinh;
use crate::{Error, Real, Result};

const MAX_TERMS: usize = 200_000;

/// True when `x` is a non-positive integer.
fn is_non_positive_integer<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.floor()
}

/// Degree at which an upper parameter truncates the series, if any.
fn truncation_degree<T: Real>(a: T, b: T) -> Option<usize> {
    let degree_of = |p: T| -> Option<usize> {
        if is_non_positive_integer(p) {
            Some((-p).to_usize().unwrap_or(usize::MAX))
        } else {
            None
        }
    };
    match (degree_of(a), degree_of(b)) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) => Some(x),
        (None, Some(y)) => Some(y),
        (None, None) => None,
    }
}

/// Direct power series for `2F1(a, b; c; z)`.
fn gauss_series<T: Real>(a: T, b: T, c: T, z: T) -> Result<T> {
    let cap = truncation_degree(a, b);
    if cap.is_none() && is_non_positive_integer(c) {
        return Err(Error::domain(format!(
            "2F1 lower parameter c = {c} is a non-positive integer"
        )));
    }
    let mut term = T::one();
    let mut sum = T::one();
    let mut small = 0;
    for n in 0..MAX_TERMS {
        if let Some(cap) = cap {
            if n >= cap {
                return Ok(sum);
            }
        }
        let nf = T::of_usize(n);
        term = term * (a + nf) * (b + nf) / ((c + nf) * (nf + T::one())) * z;
        sum += term;
        if term.abs() <= T::epsilon() * sum.abs() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        degree: MAX_TERMS,
        tail_estimate: term.abs().to_f64().unwrap_or(f64::NAN),
        value: sum.to_f64().unwrap_or(f64::NAN),
    })
}

/// Gauss hypergeometric `2F1(a, b; c; z)` for `z` in `[0, 1)` (negative `z`
/// is accepted when the direct series converges there).
///
/// Sums directly for `z <= 0.875` and goes through the connection formula in
/// `1 - z` beyond, falling back to the direct series in the logarithmic
/// case. The crossover sits high because the transformed series carries the
/// lower parameter `a + b - c + 1`, which is negative for the laws here and
/// cancels catastrophically unless `1 - z` is genuinely small.
pub fn gauss_2f1<T: Real>(a: T, b: T, c: T, z: T) -> Result<T> {
    if truncation_degree(a, b).is_some() {
        return gauss_series(a, b, c, z);
    }
    if z >= T::one() {
        return Err(Error::domain(format!("2F1 series argument must satisfy z < 1, got {z}")));
    }
    if z <= T::of(0.875) {
        return gauss_series(a, b, c, z);
    }
    match connection_2f1(a, b, c, z) {
        Ok(value) => Ok(value),
        Err(Error::LogarithmicCase(_)) => gauss_series(a, b, c, z),
        Err(e) => Err(e),
    }
}

/// Connection formula in `1 - z`:
/// `2F1(a,b;c;z) = A 2F1(a,b;a+b-c+1;1-z) + (1-z)^{c-a-b} B 2F1(c-a,c-b;c-a-b+1;1-z)`
/// with Gamma-ratio prefactors `A`, `B`.
///
/// Fails with `LogarithmicCase` when `c - a - b` is an integer. At `z = 1`
/// with `c - a - b > 0` it reduces to the Gauss summation value.
pub fn connection_2f1<T: Real>(a: T, b: T, c: T, z: T) -> Result<T> {
    let s = c - a - b;
    if s == s.floor() {
        return Err(Error::LogarithmicCase(s.to_f64().unwrap_or(f64::NAN)));
    }
    if z == T::one() {
        if s > T::zero() {
            return gauss_2f1_at_one(a, b, c);
        }
        return Err(Error::domain(format!(
            "2F1 diverges at z = 1 when c - a - b = {s} <= 0"
        )));
    }
    let w = T::one() - z;
    let first = ln_gamma_signed(c)? * ln_gamma_signed(s)?
        / ln_gamma_signed(c - a)?
        / ln_gamma_signed(c - b)?;
    let second = ln_gamma_signed(c)? * ln_gamma_signed(-s)? * recip_gamma(a) * recip_gamma(b);
    let f1 = gauss_series(a, b, a + b - c + T::one(), w)?;
    let f2 = gauss_series(c - a, c - b, s + T::one(), w)?;
    Ok(first.value() * f1 + second.mul_pow(w, s).value() * f2)
}

/// Gauss summation: `2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b))`,
/// valid for `c - a - b > 0`.
pub fn gauss_2f1_at_one<T: Real>(a: T, b: T, c: T) -> Result<T> {
    let s = c - a - b;
    if !(s > T::zero()) {
        return Err(Error::domain(format!(
            "Gauss summation needs c - a - b > 0, got {s}"
        )));
    }
    let value = ln_gamma_signed(c)? * ln_gamma_signed(s)?
        / ln_gamma_signed(c - a)?
        / ln_gamma_signed(c - b)?;
    Ok(value.value())
}

/// Largest argument magnitude accepted by the confluent series before the
/// evaluation reports `NonConvergence` (plain-space terms overflow there).
const CONFLUENT_ARG_CAP: f64 = 700.0;

/// Kummer confluent `1F1(a; b; z)` by direct summation.
pub fn kummer_1f1<T: Real>(a: T, b: T, z: T) -> Result<T> {
    if is_non_positive_integer(b) && truncation_degree(a, a).map_or(true, |d| d > (-b).to_usize().unwrap_or(0)) {
        return Err(Error::domain(format!(
            "1F1 lower parameter b = {b} is a non-positive integer"
        )));
    }
    if z.abs() > T::of(CONFLUENT_ARG_CAP) {
        return Err(Error::NonConvergence {
            degree: 0,
            tail_estimate: f64::INFINITY,
            value: f64::NAN,
        });
    }
    let cap = truncation_degree(a, a);
    let mut term = T::one();
    let mut sum = T::one();
    let mut small = 0;
    for n in 0..MAX_TERMS {
        if let Some(cap) = cap {
            if n >= cap {
                return Ok(sum);
            }
        }
        let nf = T::of_usize(n);
        term = term * (a + nf) / ((b + nf) * (nf + T::one())) * z;
        sum += term;
        if term.abs() <= T::epsilon() * sum.abs() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    unreachable!("1F1 series converges within the term budget for |z| <= cap")
}

/// Confluent limit `0F1(; c; z)` by direct summation.
pub fn of1<T: Real>(c: T, z: T) -> Result<T> {
    if is_non_positive_integer(c) {
        return Err(Error::domain(format!(
            "0F1 lower parameter c = {c} is a non-positive integer"
        )));
    }
    if z.abs() > T::of(CONFLUENT_ARG_CAP * CONFLUENT_ARG_CAP) {
        return Err(Error::NonConvergence {
            degree: 0,
            tail_estimate: f64::INFINITY,
            value: f64::NAN,
        });
    }
    let mut term = T::one();
    let mut sum = T::one();
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf = T::of_usize(n);
        term = term / ((c + nf) * (nf + T::one())) * z;
        sum += term;
        if term.abs() <= T::epsilon() * sum.abs() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    unreachable!("0F1 series converges within the term budget")
}

/// Tricomi confluent function `U(a, b, z)` for `z > 0` and non-integer `b`.
///
/// For `a > 0` the Laplace integral representation
/// `U = (1/G(a)) int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt`
/// is used (uniformly accurate in `z`); otherwise the two-1F1 combination,
/// which also serves as the internal consistency oracle at moderate `z`.
pub fn tricomi_u<T: Real>(a: T, b: T, z: T) -> Result<T> {
    if !(z > T::zero()) {
        return Err(Error::domain(format!("Tricomi U requires z > 0, got {z}")));
    }
    if b == b.floor() {
        return Err(Error::domain(format!(
            "Tricomi U at integer b = {b} is the logarithmic case, out of scope"
        )));
    }
    if a == T::zero() {
        return Ok(T::one());
    }
    if a > T::zero() {
        let ln_norm = crate::constants::ln_gamma(a);
        let integral = exp_sinh(
            |t: T| {
                let ln_val =
                    -z * t + (a - T::one()) * t.ln() + (b - a - T::one()) * (T::one() + t).ln();
                (ln_val - ln_norm).exp()
            },
            T::of(1e-13),
        )?;
        return Ok(integral);
    }
    tricomi_u_combination(a, b, z)
}

/// The two-1F1 combination defining `U` (13.1.3-style), usable as an oracle
/// at moderate `z` where the cancellation stays benign.
pub fn tricomi_u_combination<T: Real>(a: T, b: T, z: T) -> Result<T> {
    let pi = T::PI();
    let sin_pi_b = (pi * (b - (b / T::of(2.0)).floor() * T::of(2.0))).sin();
    let first = kummer_1f1(a, b, z)?
        * (ln_gamma_signed(T::one() + a - b)? * ln_gamma_signed(b)?).recip().value();
    let second = kummer_1f1(T::one() + a - b, T::of(2.0) - b, z)?
        * (recip_gamma(a) * recip_gamma(T::of(2.0) - b)).value()
        * z.powf(T::one() - b);
    Ok(pi / sin_pi_b * (first - second))
}
