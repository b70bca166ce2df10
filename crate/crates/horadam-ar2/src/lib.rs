//! Horadam sequences and the linear-process solution of the AR(2) model.
//!
//! The autoregressive recursion Y_t = phi1 Y_{t-1} + phi2 Y_{t-2} + eps_t has
//! the moving-average representation Y_t = sum_u psi_u eps_{t-u}, and the
//! coefficients psi_u satisfy the same recursion as the model itself: they
//! form the Horadam sequence A_0 = 1, A_1 = phi1,
//! A_u = phi1 A_{u-1} + phi2 A_{u-2}. This crate computes those coefficients
//! by four independent routes (recursion, binomial closed form, power-series
//! reciprocation, and root-based formulas), cross-checks them, and validates
//! the representation stochastically with reproducible simulation and
//! autocovariance analysis.
//!
//! ```
//! use horadam_ar2::{acf_yule_walker, impulse_response, truncation_order};
//! use horadam_ar2::{Ar2Params, PsiMethod};
//!
//! let params = Ar2Params::new(0.5, 0.3, 1.0)?;
//! let order = truncation_order(params, 1e-12)?;
//! let ir = impulse_response(params, order, PsiMethod::Recursion)?;
//! assert_eq!(ir.psi[0], 1.0);
//!
//! // gamma(0) from the truncated sum matches the Yule-Walker closed form
//! // within the certified tail bound plus summation rounding.
//! let exact = acf_yule_walker(params, 0)?.gamma[0];
//! let summed: f64 = ir.psi.iter().map(|p| p * p).sum();
//! assert!((exact - summed).abs() <= ir.tail_bound.unwrap() + 1e-12);
//! # Ok::<(), horadam_ar2::Error>(())
//! ```
//!
//! The special case phi1 = phi2 = 1 embeds the Fibonacci numbers
//! (A_u = F_{u+1}), which the integer mode reproduces exactly:
//!
//! ```
//! use horadam_ar2::horadam_recursive_exact;
//!
//! let fib = horadam_recursive_exact(1, 1, 10)?;
//! assert_eq!(fib, vec![1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]);
//! # Ok::<(), horadam_ar2::Error>(())
//! ```

#![allow(clippy::needless_range_loop)] // index u (or lag h) is the subscript under test

pub mod ar2;
pub mod cli;
pub mod error;
pub mod horadam;
pub mod linear;
pub mod noise;
pub mod output;
pub mod sim;
pub mod verify;

#[cfg(test)]
mod testutil;

pub use ar2::{
    box_condition, characteristic_roots, is_stationary, psi_cauchy_product, psi_partial_fractions,
    spectral_radius, Ar2Params, CharacteristicRoots, RootKind, Stationarity, UNIT_ROOT_TOL,
};
pub use error::{Error, Result};
pub use horadam::{
    binomial, horadam_closed_form, horadam_polynomial, horadam_polynomial_eval,
    horadam_power_series, horadam_recursive, horadam_recursive_exact, series_reciprocal,
    HoradamParams, HoradamPolynomial, HoradamSequence, SequenceMethod,
};
pub use linear::{
    acf_from_ma, acf_yule_walker, impulse_response, l1_tail_bound, l2_diagnostic, l2_tail_bound,
    psi_sequence, truncation_order, AcfSource, AcfTable, ImpulseResponse, PsiMethod, ACF_TAIL_GATE,
    MAX_ORDER, TRUNCATION_CAP,
};
pub use noise::{
    normal_quantile, standard_normal, white_noise, NoiseDistribution, NoiseSpec, GENERATOR_VERSION,
};
pub use sim::{
    ar2_filter, empirical_acf, ma_filter, simulate_ma, simulate_recursive, Generator,
    TimeSeriesSample,
};
pub use verify::{run_all, stationary_grid, CheckRecord, VerifyOptions};
