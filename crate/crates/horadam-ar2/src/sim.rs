//! Stochastic simulation of the AR(2) model by two independent generators:
//! the defining recursion driven by a noise stream, and the truncated moving
//! average applied to the same stream. For stationary parameters the two
//! agree pointwise within a certified bound, which is the stochastic face of
//! the coefficient identity psi_u = A_u.

use crate::ar2::Ar2Params;
use crate::error::{Error, Result};
use crate::linear::{AcfSource, AcfTable, ImpulseResponse};
use crate::noise::{white_noise, NoiseSpec};
use serde::Serialize;

/// Which generator produced a sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Generator {
    RecursiveAr,
    TruncatedMa,
}

/// A simulated path together with everything needed to regenerate it.
///
/// `burn_in` is the number of leading filter outputs dropped before `values`
/// begins: the initialization transient for the recursive generator, the
/// incomplete convolution windows for the truncated moving average.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimeSeriesSample {
    pub params: Ar2Params,
    pub values: Vec<f64>,
    pub noise: NoiseSpec,
    pub burn_in: usize,
    pub generator: Generator,
}

/// Runs the AR(2) recursion y_t = phi1 y_{t-1} + phi2 y_{t-2} + eps_t with
/// zero pre-history, one output per input. Driving it with a unit impulse
/// reproduces the Horadam sequence exactly, arithmetic operation for
/// arithmetic operation.
pub fn ar2_filter(params: Ar2Params, eps: &[f64]) -> Vec<f64> {
    let (phi1, phi2) = (params.phi1(), params.phi2());
    let mut y = Vec::with_capacity(eps.len());
    let mut prev1 = 0.0f64;
    let mut prev2 = 0.0f64;
    for &e in eps {
        let next = phi1 * prev1 + phi2 * prev2 + e;
        y.push(next);
        prev2 = prev1;
        prev1 = next;
    }
    y
}

/// Zero-padded moving average y_t = sum_{u=0}^{min(t,U)} psi_u eps_{t-u},
/// one output per input; outputs before index U use incomplete windows.
pub fn ma_filter(psi: &[f64], eps: &[f64]) -> Vec<f64> {
    let mut y = Vec::with_capacity(eps.len());
    for t in 0..eps.len() {
        let mut acc = 0.0;
        for u in 0..=t.min(psi.len() - 1) {
            acc += psi[u] * eps[t - u];
        }
        y.push(acc);
    }
    y
}

/// Simulates by the defining recursion, dropping the first `burn_in` outputs.
/// Works for any parameters, stationary or not; the caller chooses whether a
/// divergent path is meaningful.
pub fn simulate_recursive(
    params: Ar2Params,
    noise: NoiseSpec,
    burn_in: usize,
) -> Result<TimeSeriesSample> {
    if burn_in >= noise.length() {
        return Err(Error::invalid(format!(
            "burn-in {burn_in} must be smaller than the noise length {}",
            noise.length()
        )));
    }
    let eps = white_noise(&noise);
    let values = ar2_filter(params, &eps)[burn_in..].to_vec();
    Ok(TimeSeriesSample {
        params,
        values,
        noise,
        burn_in,
        generator: Generator::RecursiveAr,
    })
}

/// Simulates by the truncated moving average, keeping only outputs with a
/// full window (the first `ir.order()` are dropped). The impulse response
/// must belong to the same parameters.
pub fn simulate_ma(
    params: Ar2Params,
    noise: NoiseSpec,
    ir: &ImpulseResponse,
) -> Result<TimeSeriesSample> {
    if ir.params != params {
        return Err(Error::mismatch(format!(
            "impulse response was built for (phi1, phi2, sigma) = ({}, {}, {}), not ({}, {}, {})",
            ir.params.phi1(),
            ir.params.phi2(),
            ir.params.sigma(),
            params.phi1(),
            params.phi2(),
            params.sigma()
        )));
    }
    let order = ir.order();
    if order >= noise.length() {
        return Err(Error::invalid(format!(
            "truncation order {order} must be smaller than the noise length {}",
            noise.length()
        )));
    }
    let eps = white_noise(&noise);
    let values = ma_filter(&ir.psi, &eps)[order..].to_vec();
    Ok(TimeSeriesSample {
        params,
        values,
        noise,
        burn_in: order,
        generator: Generator::TruncatedMa,
    })
}

/// Biased (1/n) sample autocovariances of a mean-subtracted path:
/// gamma_hat(h) = (1/n) sum_{t=h}^{n-1} (y_t - ybar)(y_{t-h} - ybar).
/// The 1/n normalization keeps the estimate positive semidefinite, so
/// |gamma_hat(h)| <= gamma_hat(0). Requires length > maxlag + 1.
pub fn empirical_acf(sample: &TimeSeriesSample, maxlag: usize) -> Result<AcfTable> {
    let n = sample.values.len();
    if n <= maxlag + 1 {
        return Err(Error::invalid(format!(
            "sample length {n} must exceed maxlag + 1 = {}",
            maxlag + 1
        )));
    }
    let y = &sample.values;
    let mean = y.iter().sum::<f64>() / n as f64;
    let mut gamma = Vec::with_capacity(maxlag + 1);
    for h in 0..=maxlag {
        let mut acc = 0.0;
        for t in h..n {
            acc += (y[t] - mean) * (y[t - h] - mean);
        }
        gamma.push(acc / n as f64);
    }
    Ok(AcfTable {
        params: sample.params,
        gamma,
        source: AcfSource::Empirical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::horadam::horadam_recursive;
    use crate::linear::{
        acf_yule_walker, impulse_response, l1_tail_bound, truncation_order, PsiMethod,
    };
    use crate::noise::GENERATOR_VERSION;

    fn p(phi1: f64, phi2: f64) -> Ar2Params {
        Ar2Params::new(phi1, phi2, 1.0).unwrap()
    }

    fn impulse(n: usize) -> Vec<f64> {
        let mut e = vec![0.0; n];
        e[0] = 1.0;
        e
    }

    #[test]
    fn zero_coefficients_pass_noise_through() {
        let eps = white_noise(&NoiseSpec::new(5, 200, 1.0).unwrap());
        let y = ar2_filter(p(0.0, 0.0), &eps);
        for t in 0..eps.len() {
            assert!(y[t] == eps[t], "t={t}");
        }
    }

    #[test]
    fn impulse_through_the_filter_reproduces_the_horadam_sequence() {
        // The simulator and the coefficient recursion share one arithmetic
        // expression, so the match is exact, not approximate.
        for &(phi1, phi2) in &[
            (0.5, 0.3),
            (0.8, -0.16),
            (0.0, -0.28),
            (1.5, 0.6),
            (-1.2, 0.3),
        ] {
            let params = p(phi1, phi2);
            let y = ar2_filter(params, &impulse(51));
            let a = horadam_recursive(params.horadam(), 50);
            for u in 0..=50 {
                assert!(
                    y[u] == a.values[u],
                    "({phi1}, {phi2}) u={u}: {} vs {}",
                    y[u],
                    a.values[u]
                );
            }
        }
    }

    #[test]
    fn identity_kernel_passes_noise_through() {
        let eps = white_noise(&NoiseSpec::new(9, 100, 2.0).unwrap());
        let y = ma_filter(&[1.0], &eps);
        for t in 0..eps.len() {
            assert!(y[t] == eps[t], "t={t}");
        }
    }

    #[test]
    fn ma_filter_impulse_recovers_the_kernel() {
        let psi = impulse_response(p(0.5, 0.3), 40, PsiMethod::Recursion)
            .unwrap()
            .psi;
        let y = ma_filter(&psi, &impulse(60));
        for u in 0..=40 {
            assert!(y[u] == psi[u], "u={u}");
        }
        for t in 41..60 {
            assert!(y[t] == 0.0, "t={t} past the kernel support");
        }
    }

    #[test]
    fn recursive_and_truncated_ma_paths_agree_within_the_certified_bound() {
        let params = p(0.5, 0.3);
        let n = 2000;
        let noise = NoiseSpec::new(7, n, 1.0).unwrap();
        let order = truncation_order(params, 1e-12).unwrap();
        let ir = impulse_response(params, order, PsiMethod::Recursion).unwrap();

        let rec = simulate_recursive(params, noise, 0).unwrap();
        let ma = simulate_ma(params, noise, &ir).unwrap();
        let eps = white_noise(&noise);
        let max_eps = eps.iter().fold(0.0f64, |m, e| m.max(e.abs()));
        let bound = l1_tail_bound(params, order).unwrap() * max_eps;

        assert_eq!(ma.values.len(), n - order);
        for t in order..n {
            let diff = (rec.values[t] - ma.values[t - order]).abs();
            assert!(diff <= bound, "t={t}: diff {diff:e} > bound {bound:e}");
        }
    }

    #[test]
    fn after_the_burn_in_the_path_forgets_its_initialization() {
        // Start the recursion at two different points of the same noise
        // stream; beyond the burn-in the paths coincide within the l1 tail
        // bound, which is exactly the transient the burn-in exists to drop.
        let params = p(0.5, 0.3);
        let eps = white_noise(&NoiseSpec::new(13, 1500, 1.0).unwrap());
        let max_eps = eps.iter().fold(0.0f64, |m, e| m.max(e.abs()));
        let k = 137;
        let full = ar2_filter(params, &eps);
        let late = ar2_filter(params, &eps[k..]);
        let burn = truncation_order(params, 1e-12).unwrap();
        for j in burn..burn + 50 {
            let diff = (full[k + j] - late[j]).abs();
            let bound = l1_tail_bound(params, j).unwrap() * max_eps;
            assert!(diff <= bound, "j={j}: {diff:e} > {bound:e}");
        }
    }

    #[test]
    fn simulate_recursive_validates_and_slices() {
        let params = p(0.5, 0.3);
        let noise = NoiseSpec::new(1, 100, 1.0).unwrap();
        let s = simulate_recursive(params, noise, 10).unwrap();
        assert_eq!(s.values.len(), 90);
        assert_eq!(s.burn_in, 10);
        assert_eq!(s.generator, Generator::RecursiveAr);
        let full = ar2_filter(params, &white_noise(&noise));
        assert_eq!(s.values[..], full[10..]);
        assert!(simulate_recursive(params, noise, 100).is_err());
    }

    #[test]
    fn simulate_ma_validates_inputs() {
        let params = p(0.5, 0.3);
        let noise = NoiseSpec::new(1, 100, 1.0).unwrap();
        let ir = impulse_response(params, 20, PsiMethod::Recursion).unwrap();
        let s = simulate_ma(params, noise, &ir).unwrap();
        assert_eq!(s.values.len(), 80);
        assert_eq!(s.burn_in, 20);
        assert_eq!(s.generator, Generator::TruncatedMa);

        let other = p(0.4, 0.3);
        assert!(matches!(
            simulate_ma(other, noise, &ir),
            Err(Error::Mismatch(_))
        ));
        let long = impulse_response(params, 100, PsiMethod::Recursion).unwrap();
        assert!(simulate_ma(params, noise, &long).is_err());
    }

    #[test]
    fn empirical_acf_of_a_constant_path_is_zero() {
        let sample = TimeSeriesSample {
            params: p(0.5, 0.3),
            values: vec![4.25; 100],
            noise: NoiseSpec::new(0, 100, 1.0).unwrap(),
            burn_in: 0,
            generator: Generator::RecursiveAr,
        };
        let acf = empirical_acf(&sample, 5).unwrap();
        assert_eq!(acf.gamma, vec![0.0; 6]);
        assert_eq!(acf.source, AcfSource::Empirical);
    }

    #[test]
    fn empirical_acf_of_white_noise() {
        let sigma = 1.5;
        let params = Ar2Params::new(0.0, 0.0, sigma).unwrap();
        let noise = NoiseSpec::new(3, 100_000, sigma).unwrap();
        let sample = simulate_recursive(params, noise, 0).unwrap();
        let acf = empirical_acf(&sample, 5).unwrap();
        let s2 = sigma * sigma;
        assert!(
            (acf.gamma[0] - s2).abs() <= 0.02 * s2,
            "gamma(0) = {}",
            acf.gamma[0]
        );
        for h in 1..=5 {
            assert!(
                acf.gamma[h].abs() <= 0.02 * s2,
                "gamma({h}) = {} should be near zero",
                acf.gamma[h]
            );
        }
    }

    #[test]
    fn empirical_acf_tracks_yule_walker_for_a_stationary_model() {
        let params = p(0.5, 0.3);
        let burn = truncation_order(params, 1e-12).unwrap();
        let noise = NoiseSpec::new(11, 100_000 + burn, 1.0).unwrap();
        let sample = simulate_recursive(params, noise, burn).unwrap();
        let acf = empirical_acf(&sample, 20).unwrap();
        let yw = acf_yule_walker(params, 20).unwrap();
        for h in 0..=5 {
            assert!(
                (acf.gamma[h] - yw.gamma[h]).abs() <= 0.05 * yw.gamma[0],
                "gamma({h}): empirical {} vs exact {}",
                acf.gamma[h],
                yw.gamma[h]
            );
        }
        // The 1/n normalization keeps the estimate positive semidefinite.
        for h in 1..=20 {
            assert!(acf.gamma[h].abs() <= acf.gamma[0] * (1.0 + 1e-12));
        }
    }

    #[test]
    fn empirical_acf_requires_enough_data() {
        let noise = NoiseSpec::new(0, 10, 1.0).unwrap();
        let sample = simulate_recursive(p(0.0, 0.0), noise, 0).unwrap();
        assert!(empirical_acf(&sample, 9).is_err());
        assert!(empirical_acf(&sample, 8).is_ok());
    }

    #[test]
    fn generator_version_is_pinned() {
        // Samples are only reproducible against the recorded pipeline id.
        assert_eq!(GENERATOR_VERSION, "splitmix64-as241-v1");
    }
}
