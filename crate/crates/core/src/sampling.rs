//! Deterministic sampling built on a seeded counter-based generator.
//!
//! Every sweep derives its generator from a base seed and a fixed stream
//! offset, so adding or reordering identities never perturbs the samples of
//! the others and identical configurations reproduce byte-identical reports.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Returns the generator for sub-stream `stream` of the given seed.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform complex number with real and imaginary part in [-half_width, half_width].
pub fn complex_in_box(rng: &mut ChaCha8Rng, half_width: f64) -> Complex64 {
    let re = rng.random_range(-half_width..=half_width);
    let im = rng.random_range(-half_width..=half_width);
    Complex64::new(re, im)
}

/// Uniform real number in [-half_width, half_width].
pub fn real_in_box(rng: &mut ChaCha8Rng, half_width: f64) -> f64 {
    rng.random_range(-half_width..=half_width)
}

/// Uniform sign times uniform magnitude in [lo, hi]; avoids values near zero.
pub fn signed_away_from_zero(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let mag = rng.random_range(lo..=hi);
    if rng.random_bool(0.5) {
        mag
    } else {
        -mag
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substreams_are_reproducible_and_distinct() {
        let mut a1 = substream(7, 3);
        let mut a2 = substream(7, 3);
        let mut b = substream(7, 4);
        let xs1: Vec<f64> = (0..8).map(|_| a1.random_range(0.0..1.0)).collect();
        let xs2: Vec<f64> = (0..8).map(|_| a2.random_range(0.0..1.0)).collect();
        let ys: Vec<f64> = (0..8).map(|_| b.random_range(0.0..1.0)).collect();
        assert_eq!(xs1, xs2);
        assert_ne!(xs1, ys);
    }

    #[test]
    fn signed_draw_respects_magnitude_window() {
        let mut rng = substream(1, 0);
        for _ in 0..200 {
            let x = signed_away_from_zero(&mut rng, 0.4, 1.4);
            assert!(x.abs() >= 0.4 && x.abs() <= 1.4);
        }
    }
}
