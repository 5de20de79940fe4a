//! Numerical integration: double-exponential rules for endpoint
//! singularities and a Gauss-Kronrod panel for smooth interior pieces.

use crate::{Error, Real, Result};

/// Tanh-sinh (double-exponential) quadrature on a finite interval.
///
/// The transform `x = tanh((pi/2) sinh t)` pushes nodes exponentially close
/// to the endpoints, so integrable endpoint singularities such as
/// `x^(p-1)` with small positive `p` converge at the usual double-exponential
/// rate. The integrand receives the node and both endpoint distances,
/// `f(x, x - a, b - x)`, with the distances computed cancellation-free.
pub fn tanh_sinh<T, F>(f: F, a: T, b: T, rel_tol: T) -> Result<T>
where
    T: Real,
    F: Fn(T, T, T) -> T,
{
    if a == b {
        return Ok(T::zero());
    }
    let half = (b - a) / T::of(2.0);
    let mid = (a + b) / T::of(2.0);
    let pi_half = T::FRAC_PI_2();
    let width = b - a;

    let eval = |t: T| -> T {
        let w = pi_half * t.sinh();
        // 1 - |tanh(w)| = 2 e^{-2|w|} / (1 + e^{-2|w|}), so the distance to
        // the nearer endpoint stays accurate deep into the corner.
        let e = (-T::of(2.0) * w.abs()).exp();
        let near = T::of(2.0) * e / (T::one() + e) * half;
        let u = w.tanh();
        let x = mid + half * u;
        let (da, db) = if w >= T::zero() { (width - near, near) } else { (near, width - near) };
        let cosh_w = w.cosh();
        let weight = pi_half * t.cosh() / (cosh_w * cosh_w);
        let v = f(x, da, db) * weight;
        if v.is_finite() {
            v
        } else {
            T::zero()
        }
    };

    let t_cap = T::of(6.56); // beyond this the node weight underflows f64
    let mut h = T::one();
    let mut previous = T::nan();
    let mut last_gap = T::infinity();
    for level in 0..13 {
        let mut sum = eval(T::zero());
        for side in [T::one(), -T::one()] {
            let mut k: u64 = 1;
            let mut negligible = 0;
            loop {
                let t = side * h * T::of(k as f64);
                if t.abs() > t_cap {
                    break;
                }
                let contribution = eval(t);
                sum = sum + contribution;
                if contribution.abs() <= T::of(1e-18) * sum.abs().max(T::of(1e-300)) {
                    negligible += 1;
                    if negligible >= 4 {
                        break;
                    }
                } else {
                    negligible = 0;
                }
                k += 1;
            }
        }
        let integral = sum * h * half;
        if level > 0 {
            last_gap = (integral - previous).abs();
            if last_gap <= rel_tol * integral.abs().max(T::of(1e-300)) {
                return Ok(integral);
            }
        }
        previous = integral;
        h = h / T::of(2.0);
    }
    Err(Error::QuadratureFailure {
        achieved: (last_gap / previous.abs().max(T::of(1e-300))).to_f64().unwrap_or(f64::NAN),
        requested: rel_tol.to_f64().unwrap_or(f64::NAN),
    })
}

/// Exp-sinh (double-exponential) quadrature on `(0, inf)` for integrands with
/// an integrable singularity at 0 and at-least-exponential decay at infinity.
pub fn exp_sinh<T, F>(f: F, rel_tol: T) -> Result<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    let pi_half = T::FRAC_PI_2();
    let eval = |t: T| -> T {
        let x = (pi_half * t.sinh()).exp();
        let weight = pi_half * t.cosh() * x;
        let v = f(x) * weight;
        if v.is_finite() {
            v
        } else {
            T::zero()
        }
    };

    let t_cap = T::of(5.1);
    let mut h = T::one();
    let mut previous = T::nan();
    let mut last_gap = T::infinity();
    for level in 0..13 {
        let mut sum = eval(T::zero());
        for side in [T::one(), -T::one()] {
            let mut k: u64 = 1;
            let mut negligible = 0;
            loop {
                let t = side * h * T::of(k as f64);
                if t.abs() > t_cap {
                    break;
                }
                let contribution = eval(t);
                sum = sum + contribution;
                if contribution.abs() <= T::of(1e-18) * sum.abs().max(T::of(1e-300)) {
                    negligible += 1;
                    if negligible >= 4 {
                        break;
                    }
                } else {
                    negligible = 0;
                }
                k += 1;
            }
        }
        let integral = sum * h;
        if level > 0 {
            last_gap = (integral - previous).abs();
            if last_gap <= rel_tol * integral.abs().max(T::of(1e-300)) {
                return Ok(integral);
            }
        }
        previous = integral;
        h = h / T::of(2.0);
    }
    Err(Error::QuadratureFailure {
        achieved: (last_gap / previous.abs().max(T::of(1e-300))).to_f64().unwrap_or(f64::NAN),
        requested: rel_tol.to_f64().unwrap_or(f64::NAN),
    })
}

// 15-point Kronrod rule with the embedded 7-point Gauss rule.
const KRONROD_NODES: [f64; 8] = [
    0.0,
    0.207_784_955_007_898_27,
    0.405_845_151_377_397_17,
    0.586_087_235_467_691_13,
    0.741_531_185_599_394_44,
    0.864_864_423_359_769_07,
    0.949_107_912_342_758_5,
    0.991_455_371_120_812_64,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.209_482_141_084_727_83,
    0.204_432_940_075_298_9,
    0.190_350_578_064_785_41,
    0.169_004_726_639_267_9,
    0.140_653_259_715_525_92,
    0.104_790_010_322_250_18,
    0.063_092_092_629_978_55,
    0.022_935_322_010_529_225,
];
const GAUSS_WEIGHTS: [f64; 4] = [
    0.417_959_183_673_469_4,
    0.381_830_050_505_118_94,
    0.279_705_391_489_276_7,
    0.129_484_966_168_869_69,
];

/// One Gauss7/Kronrod15 panel: the Kronrod value and the Gauss/Kronrod
/// difference as error estimate.
pub fn gauss_kronrod_panel<T, F>(f: &F, a: T, b: T) -> (T, T)
where
    T: Real,
    F: Fn(T) -> T,
{
    let half = (b - a) / T::of(2.0);
    let mid = (a + b) / T::of(2.0);
    let mut kronrod = T::zero();
    let mut gauss = T::zero();
    for (i, (&node, &kw)) in KRONROD_NODES.iter().zip(&KRONROD_WEIGHTS).enumerate() {
        let n = T::of(node);
        let value =
            if i == 0 { f(mid) } else { f(mid + half * n) + f(mid - half * n) };
        kronrod = kronrod + T::of(kw) * value;
        if i % 2 == 0 {
            gauss = gauss + T::of(GAUSS_WEIGHTS[i / 2]) * value;
        }
    }
    (kronrod * half, (kronrod - gauss).abs() * half)
}

/// Adaptive Gauss-Kronrod for smooth integrands on a finite interval.
pub fn adaptive_gk<T, F>(f: &F, a: T, b: T, rel_tol: T) -> Result<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    struct Walker<'a, T, F> {
        f: &'a F,
        unresolved: T,
        _t: std::marker::PhantomData<T>,
    }
    impl<T: Real, F: Fn(T) -> T> Walker<'_, T, F> {
        fn go(&mut self, a: T, b: T, tol: T, depth: usize) -> T {
            let (value, err) = gauss_kronrod_panel(self.f, a, b);
            if err <= tol || depth >= 22 {
                if err > tol {
                    self.unresolved = self.unresolved + err;
                }
                return value;
            }
            let mid = (a + b) / T::of(2.0);
            let half_tol = tol / T::of(2.0);
            self.go(a, mid, half_tol, depth + 1) + self.go(mid, b, half_tol, depth + 1)
        }
    }
    let (estimate, _) = gauss_kronrod_panel(f, a, b);
    let tol = rel_tol * estimate.abs().max(T::of(1e-300));
    let mut walker = Walker { f, unresolved: T::zero(), _t: std::marker::PhantomData };
    let value = walker.go(a, b, tol, 0);
    let budget = rel_tol * value.abs().max(T::of(1e-300)) * T::of(100.0);
    if walker.unresolved > budget {
        return Err(Error::QuadratureFailure {
            achieved: walker.unresolved.to_f64().unwrap_or(f64::NAN),
            requested: rel_tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(value)
}
