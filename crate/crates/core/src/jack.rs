//! Jack polynomials in `C` normalization at scalar-identity arguments, the
//! only arguments the eigenvalue laws need.

use crate::partitions::{gen_pochhammer, j_kappa, Partition};
use crate::Real;

/// `C_kappa(I_m) = (2/beta)^{2k} k! (m beta/2)_kappa / j_kappa`.
///
/// Returns 0 when `kappa` has more parts than `m` (the Pochhammer factor
/// vanishes), otherwise a positive value.
pub fn jack_at_identity<T: Real>(kappa: &Partition, beta: T, m: u32) -> T {
    if kappa.parts().len() > m as usize {
        return T::zero();
    }
    let k = kappa.weight();
    let two_over = T::of(2.0) / beta;
    let mut factorial = T::one();
    for j in 2..=k {
        factorial = factorial * T::of_usize(j as usize);
    }
    let pochhammer = gen_pochhammer(T::of_usize(m as usize) * beta / T::of(2.0), kappa, beta);
    two_over.powi(2 * k as i32) * factorial * pochhammer / j_kappa(kappa, beta)
}

/// `C_kappa(x I_m) = x^{|kappa|} C_kappa(I_m)` by homogeneity, with exact
/// sign tracking for negative `x`.
pub fn jack_at_scaled_identity<T: Real>(kappa: &Partition, beta: T, m: u32, x: T) -> T {
    let k = kappa.weight();
    if k == 0 {
        return T::one();
    }
    x.powi(k as i32) * jack_at_identity(kappa, beta, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions;
    use approx::assert_relative_eq;

    #[test]
    fn degree_one_is_dimension() {
        for &beta in &[0.5f64, 1.0, 2.0, 3.25] {
            for m in 0..6u32 {
                assert_relative_eq!(
                    jack_at_identity(&Partition::new(vec![1]), beta, m),
                    m as f64,
                    max_relative = 1e-13
                );
            }
        }
    }

    #[test]
    fn row_two_at_beta_two_dimension_two() {
        // Complement of C_{[1,1]}(I_2) = 1 inside sum_{k=2} C = 4.
        assert_relative_eq!(
            jack_at_identity(&Partition::new(vec![2]), 2.0, 2),
            3.0,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            jack_at_identity(&Partition::new(vec![1, 1]), 2.0, 2),
            1.0,
            max_relative = 1e-13
        );
    }

    #[test]
    fn more_parts_than_variables_vanishes() {
        assert_eq!(jack_at_identity(&Partition::new(vec![1, 1, 1]), 1.3, 2), 0.0);
        assert_eq!(jack_at_identity(&Partition::new(vec![2, 1]), 0.7, 0), 0.0);
    }

    #[test]
    fn power_sum_identity() {
        // sum over partitions of k of C_kappa(I_m) = m^k, tolerance 1e-12.
        for &beta in &[0.5f64, 1.0, 1.75, 2.0, 4.0] {
            for m in 1..=6u32 {
                for k in 0..=10u32 {
                    let total: f64 = partitions(k, None)
                        .map(|kappa| jack_at_identity(&kappa, beta, m))
                        .sum();
                    let expected = (m as f64).powi(k as i32);
                    assert_relative_eq!(total, expected, max_relative = 1e-12);
                }
            }
        }
    }

    #[test]
    fn values_are_non_negative() {
        for &beta in &[0.5f64, 1.0, 2.0, 4.0] {
            for m in 0..=5u32 {
                for k in 0..=8u32 {
                    for kappa in partitions(k, None) {
                        assert!(jack_at_identity(&kappa, beta, m) >= 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn scaled_identity_homogeneity() {
        let kappa = Partition::new(vec![2, 1]);
        let beta = 1.75;
        assert_relative_eq!(
            jack_at_scaled_identity(&kappa, beta, 4, 1.0),
            jack_at_identity(&kappa, beta, 4)
        );
        assert_eq!(jack_at_scaled_identity(&kappa, beta, 4, 0.0), 0.0);
        assert_relative_eq!(jack_at_scaled_identity(&Partition::empty(), beta, 4, 0.0), 1.0);
        // Degree-1 homogeneity with a negative argument.
        let y = 0.83;
        assert_relative_eq!(
            jack_at_scaled_identity(&Partition::new(vec![1]), beta, 5, -y),
            -y * 5.0,
            max_relative = 1e-13
        );
        // Odd total degree keeps the sign.
        assert!(jack_at_scaled_identity(&kappa, beta, 4, -0.5) < 0.0);
    }
}
