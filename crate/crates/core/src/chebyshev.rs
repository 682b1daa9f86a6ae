//! Chebyshev polynomials of the second kind on the complex plane.
//!
//! `eval` is the production evaluator (three-term forward recursion) and is
//! the only route used by the heat-kernel series. `eval_trig` is an
//! independent closed form valid on the open interval (-1, 1), kept as a
//! cross-check oracle. `growth_bound` is a certified majorant used to bound
//! series tails.

use num_complex::Complex64;

use crate::{Error, Result};

/// Evaluates U_n(z) by the forward recursion
/// U_0 = 1, U_1 = 2z, U_{n+1} = 2z U_n - U_{n-1}.
pub fn eval(n: usize, z: Complex64) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let two_z = 2.0 * z;
    let mut prev = Complex64::new(1.0, 0.0);
    let mut curr = two_z;
    for _ in 1..n {
        let next = two_z * curr - prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Evaluates U_n(x) = sin((n+1) arccos x) / sin(arccos x) for real |x| < 1.
///
/// This closed form is independent of the recursion in [`eval`] and serves as
/// its oracle on the open interval. Outside |x| < 1 the formula degenerates,
/// so such inputs are rejected.
pub fn eval_trig(n: usize, x: f64) -> Result<f64> {
    if !(x.abs() < 1.0) {
        return Err(Error::TrigDomain(x));
    }
    let theta = x.acos();
    Ok((((n + 1) as f64) * theta).sin() / theta.sin())
}

/// Certified growth majorant: |U_n(z)| <= (3 max(1, |z|))^n for all complex z.
pub fn growth_bound(n: usize, z: Complex64) -> f64 {
    (3.0 * z.norm().max(1.0)).powi(n as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const SEED: u64 = 0x00c4_eb2e_5515_77aa;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn low_degree_values() {
        assert_eq!(eval(0, c(0.7, -0.2)), c(1.0, 0.0));
        assert_eq!(eval(1, c(0.7, -0.2)), c(1.4, -0.4));
        // U_2(x) = 4x^2 - 1 at x = 0.3.
        let u2 = eval(2, c(0.3, 0.0));
        assert!((u2 - c(-0.64, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn endpoint_laws() {
        for n in 0..=60 {
            let at_one = eval(n, c(1.0, 0.0));
            let at_minus_one = eval(n, c(-1.0, 0.0));
            let expected = (n + 1) as f64;
            assert!((at_one.re - expected).abs() <= 1e-12 * expected);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((at_minus_one.re - sign * expected).abs() <= 1e-12 * expected);
            assert_eq!(at_one.im, 0.0);
            assert_eq!(at_minus_one.im, 0.0);
        }
        assert!((eval(5, c(1.0, 0.0)).re - 6.0).abs() < 1e-12);
        assert!((eval(3, c(-1.0, 0.0)).re + 4.0).abs() < 1e-12);
    }

    #[test]
    fn trig_form_matches_recursion() {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..300 {
            let x: f64 = rng.random_range(-0.999..0.999);
            let n = rng.random_range(0..=40usize);
            let direct = eval(n, c(x, 0.0)).re;
            let trig = eval_trig(n, x).unwrap();
            assert!(
                (direct - trig).abs() <= 1e-10 * (1.0 + direct.abs()),
                "n={n} x={x} direct={direct} trig={trig}"
            );
        }
        assert!((eval_trig(4, 0.0).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn trig_form_rejects_closed_endpoints() {
        assert!(matches!(eval_trig(3, 1.0), Err(Error::TrigDomain(_))));
        assert!(matches!(eval_trig(3, -1.0), Err(Error::TrigDomain(_))));
        assert!(matches!(eval_trig(3, 1.7), Err(Error::TrigDomain(_))));
    }

    #[test]
    fn growth_bound_examples() {
        assert!((growth_bound(3, c(0.0, 2.0)) - 216.0).abs() < 1e-9);
        assert!((growth_bound(7, c(0.1, 0.0)) - 2187.0).abs() < 1e-9);
    }

    #[test]
    fn growth_bound_holds_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
        for _ in 0..500 {
            let z = c(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
            let n = rng.random_range(0..=60usize);
            assert!(eval(n, z).norm() <= growth_bound(n, z) * (1.0 + 1e-12));
        }
    }

    proptest! {
        // Parity: U_n(-z) = (-1)^n U_n(z). The recursion preserves this
        // exactly in floating point, so the comparison is strict.
        #[test]
        fn parity(re in -3.0f64..3.0, im in -3.0f64..3.0, n in 0usize..40) {
            let z = c(re, im);
            let pos = eval(n, z);
            let neg = eval(n, -z);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert_eq!(neg, sign * pos);
        }
    }
}
