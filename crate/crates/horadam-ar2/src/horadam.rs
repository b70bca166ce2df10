//! Horadam numbers and Horadam polynomials.
//!
//! The Horadam sequence used throughout this crate is
//!
//! ```text
//! A_0 = 1,  A_1 = phi1,  A_u = phi1 * A_{u-1} + phi2 * A_{u-2}
//! ```
//!
//! with the explicit form
//!
//! ```text
//! A_u = sum_{k=0}^{floor(u/2)} C(u-k, k) * phi2^k * phi1^(u-2k)
//! ```
//!
//! and generating function 1 / (1 - phi1*t - phi2*t^2). The same numbers are the
//! impulse-response (moving-average) coefficients of the AR(2) model with
//! coefficients (phi1, phi2); `phi1 = phi2 = 1` embeds the Fibonacci numbers
//! (A_u = F_{u+1}).
//!
//! Three independent computation routes are provided (recursion, explicit closed
//! form, power-series reciprocation) plus the polynomial family A_u(x) with
//! A_u(x) = phi1*x*A_{u-1}(x) + phi2*A_{u-2}(x); they are cross-checked in the
//! test suite and by the `verify` module.

use crate::error::{Error, Result};
use serde::Serialize;

/// Coefficient pair (phi1, phi2) of the recurrence. Values must be finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HoradamParams {
    phi1: f64,
    phi2: f64,
}

impl HoradamParams {
    pub fn new(phi1: f64, phi2: f64) -> Result<Self> {
        if !phi1.is_finite() || !phi2.is_finite() {
            return Err(Error::invalid(format!(
                "recurrence coefficients must be finite, got phi1={phi1}, phi2={phi2}"
            )));
        }
        Ok(HoradamParams { phi1, phi2 })
    }

    pub fn phi1(&self) -> f64 {
        self.phi1
    }

    pub fn phi2(&self) -> f64 {
        self.phi2
    }
}

/// Which route produced a [`HoradamSequence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SequenceMethod {
    Recursion,
    ClosedForm,
    PowerSeries,
}

/// A computed prefix A_0..A_n of the Horadam sequence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HoradamSequence {
    pub params: HoradamParams,
    pub values: Vec<f64>,
    pub method: SequenceMethod,
}

/// Dense coefficient form of the Horadam polynomial A_u(x);
/// `coeffs[j]` is the coefficient of x^j, length `degree + 1`.
///
/// Only coefficients with j of the same parity as the degree are nonzero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HoradamPolynomial {
    pub degree: usize,
    pub coeffs: Vec<f64>,
}

/// Exact binomial coefficient C(n, k) as a 128-bit integer.
///
/// Returns 0 when k > n. Fails with [`Error::Overflow`] if an intermediate
/// product exceeds the u128 range (the running product is kept fully reduced,
/// so this is only slightly conservative).
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // acc * (n - k + i) / i is exact at every step: after dividing,
        // acc equals C(n - k + i, i).
        acc = acc
            .checked_mul((n - k + i) as u128)
            .ok_or_else(|| Error::Overflow(format!("binomial({n}, {k})")))?
            / i as u128;
    }
    Ok(acc)
}

/// A_0..A_n by the defining recursion.
pub fn horadam_recursive(params: HoradamParams, n: usize) -> HoradamSequence {
    let (phi1, phi2) = (params.phi1, params.phi2);
    let mut values = Vec::with_capacity(n + 1);
    values.push(1.0);
    if n >= 1 {
        values.push(phi1);
    }
    for u in 2..=n {
        let next = phi1 * values[u - 1] + phi2 * values[u - 2];
        values.push(next);
    }
    HoradamSequence {
        params,
        values,
        method: SequenceMethod::Recursion,
    }
}

/// A_n for integer coefficients, computed exactly in 128-bit arithmetic.
///
/// Fails with [`Error::Overflow`] instead of wrapping. With phi1 = phi2 = 1
/// this yields the Fibonacci numbers F_{u+1} exactly.
pub fn horadam_recursive_exact(phi1: i128, phi2: i128, n: usize) -> Result<Vec<i128>> {
    let mut values = Vec::with_capacity(n + 1);
    values.push(1i128);
    if n >= 1 {
        values.push(phi1);
    }
    for u in 2..=n {
        let next = phi1
            .checked_mul(values[u - 1])
            .and_then(|a| {
                phi2.checked_mul(values[u - 2])
                    .and_then(|b| a.checked_add(b))
            })
            .ok_or_else(|| Error::Overflow(format!("exact Horadam number A_{u}")))?;
        values.push(next);
    }
    Ok(values)
}

/// A_u by the explicit sum C(u-k, k) * phi2^k * phi1^(u-2k).
///
/// This distributed form is well defined at phi1 = 0, where only the k = u/2
/// term survives for even u. Terms are accumulated from k = floor(u/2) down to
/// k = 0 (smallest binomial factors first). For phi2 < 0 the terms alternate in
/// sign and the sum is ill-conditioned once the same-magnitude sum
/// A_u(|phi1|, |phi2|) is large; the rounding error scales with that quantity,
/// not with the result.
pub fn horadam_closed_form(params: HoradamParams, u: usize) -> Result<f64> {
    let (phi1, phi2) = (params.phi1, params.phi2);
    let mut sum = 0.0;
    for k in (0..=u / 2).rev() {
        let b = binomial((u - k) as u64, k as u64)? as f64;
        sum += b * phi2.powi(k as i32) * phi1.powi((u - 2 * k) as i32);
    }
    Ok(sum)
}

/// Coefficients b_0..b_n of the formal power-series reciprocal of `denom`,
/// i.e. the series b with (b * denom) = 1 + 0*t + 0*t^2 + ...
///
/// `denom[0]` must be nonzero.
pub fn series_reciprocal(denom: &[f64], n: usize) -> Result<Vec<f64>> {
    let d0 = *denom
        .first()
        .ok_or_else(|| Error::invalid("series reciprocal of an empty denominator"))?;
    if d0 == 0.0 || !denom.iter().all(|d| d.is_finite()) {
        return Err(Error::invalid(
            "series reciprocal requires finite coefficients and a nonzero constant term",
        ));
    }
    let mut b = Vec::with_capacity(n + 1);
    b.push(1.0 / d0);
    for u in 1..=n {
        // Coefficient of t^u in b*denom must vanish:
        // d0*b_u + sum_{j>=1} denom_j * b_{u-j} = 0.
        let mut s = 0.0;
        for j in 1..denom.len().min(u + 1) {
            s += denom[j] * b[u - j];
        }
        b.push(-s / d0);
    }
    Ok(b)
}

/// A_0..A_n via power-series reciprocation of 1 - phi1*t - phi2*t^2.
///
/// An independent code path from [`horadam_recursive`]; the two agree to the
/// last bit because the reciprocation recurrence reduces to the same floating
/// point operations when the constant term is 1.
pub fn horadam_power_series(params: HoradamParams, n: usize) -> Result<HoradamSequence> {
    let values = series_reciprocal(&[1.0, -params.phi1, -params.phi2], n)?;
    Ok(HoradamSequence {
        params,
        values,
        method: SequenceMethod::PowerSeries,
    })
}

/// The Horadam polynomial A_u(x) in dense coefficient form:
/// coefficient of x^(u-2k) is C(u-k, k) * phi2^k * phi1^(u-2k).
pub fn horadam_polynomial(params: HoradamParams, u: usize) -> Result<HoradamPolynomial> {
    let (phi1, phi2) = (params.phi1, params.phi2);
    let mut coeffs = vec![0.0; u + 1];
    for k in 0..=u / 2 {
        let b = binomial((u - k) as u64, k as u64)? as f64;
        coeffs[u - 2 * k] = b * phi2.powi(k as i32) * phi1.powi((u - 2 * k) as i32);
    }
    Ok(HoradamPolynomial { degree: u, coeffs })
}

/// Evaluate a polynomial in dense coefficient form by Horner's rule.
pub fn horadam_polynomial_eval(poly: &HoradamPolynomial, x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in poly.coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::assert_close;

    /// Additive Pascal-triangle oracle, independent of the multiplicative route.
    fn pascal_triangle(rows: usize) -> Vec<Vec<u128>> {
        let mut t: Vec<Vec<u128>> = vec![vec![1]];
        for n in 1..=rows {
            let prev = &t[n - 1];
            let mut row = vec![1u128; n + 1];
            for k in 1..n {
                row[k] = prev[k - 1] + prev[k];
            }
            t.push(row);
        }
        t
    }

    /// Additive Fibonacci oracle: F_1, F_2, ... = 1, 1, 2, 3, ...
    fn fibonacci_oracle(n: usize) -> Vec<i128> {
        let mut f = vec![1i128, 1];
        for i in 2..n {
            let next = f[i - 1] + f[i - 2];
            f.push(next);
        }
        f.truncate(n);
        f
    }

    fn p(phi1: f64, phi2: f64) -> HoradamParams {
        HoradamParams::new(phi1, phi2).unwrap()
    }

    #[test]
    fn binomial_matches_pascal_triangle_up_to_60() {
        let t = pascal_triangle(60);
        for n in 0..=60u64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    t[n as usize][k as usize],
                    "C({n}, {k}) disagrees with the additive oracle"
                );
            }
        }
    }

    #[test]
    fn binomial_known_values() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(7, 0).unwrap(), 1);
        assert_eq!(binomial(60, 30).unwrap(), 118_264_581_564_861_424);
        assert_eq!(binomial(3, 5).unwrap(), 0, "k > n must give 0");
    }

    #[test]
    fn binomial_overflow_is_an_error_not_a_wrap() {
        assert!(matches!(binomial(200, 100), Err(Error::Overflow(_))));
    }

    #[test]
    fn recursion_hand_checked_prefix() {
        // By hand: 1, 0.5, 0.5*0.5+0.3 = 0.55, 0.5*0.55+0.3*0.5 = 0.425,
        // 0.5*0.425+0.3*0.55 = 0.3775.
        let seq = horadam_recursive(p(0.5, 0.3), 4);
        let expected = [1.0, 0.5, 0.55, 0.425, 0.3775];
        assert_eq!(seq.values.len(), 5);
        for (u, (&got, &want)) in seq.values.iter().zip(&expected).enumerate() {
            assert_close(got, want, 1e-15, &format!("A_{u}"));
        }
        assert_eq!(seq.method, SequenceMethod::Recursion);
    }

    #[test]
    fn recursion_n_zero_returns_single_one() {
        assert_eq!(horadam_recursive(p(0.9, -0.2), 0).values, vec![1.0]);
    }

    #[test]
    fn recursion_embeds_fibonacci_exactly_in_floats() {
        let seq = horadam_recursive(p(1.0, 1.0), 70);
        let f = fibonacci_oracle(71);
        for u in 0..=70 {
            // All values stay below 2^53, so the float recursion is exact.
            assert_eq!(seq.values[u], f[u] as f64, "A_{u} != F_{}", u + 1);
        }
        assert_eq!(seq.values[6], 13.0);
    }

    #[test]
    fn exact_mode_matches_additive_fibonacci_oracle_to_70() {
        let values = horadam_recursive_exact(1, 1, 70).unwrap();
        let f = fibonacci_oracle(71);
        assert_eq!(values, f);
        assert_eq!(values[70], 308_061_521_170_129);
    }

    #[test]
    fn exact_mode_overflow_is_reported() {
        // A_u for (10, 10) grows like 10.9^u and must overflow i128 well before u = 200.
        assert!(matches!(
            horadam_recursive_exact(10, 10, 200),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn closed_form_known_values() {
        assert_close(
            horadam_closed_form(p(0.5, 0.3), 2).unwrap(),
            0.55,
            1e-15,
            "A_2(0.5, 0.3)",
        );
        // phi1 = 0: only the k = u/2 term survives.
        assert_close(
            horadam_closed_form(p(0.0, 0.3), 4).unwrap(),
            0.09,
            1e-16,
            "A_4(0, 0.3)",
        );
        assert_eq!(horadam_closed_form(p(0.0, 0.3), 5).unwrap(), 0.0);
        // u = 0 is the empty product regardless of parameters.
        assert_eq!(horadam_closed_form(p(-1.7, 0.9), 0).unwrap(), 1.0);
    }

    #[test]
    fn closed_form_phi2_zero_is_pure_power() {
        for u in 0..=40 {
            assert_eq!(
                horadam_closed_form(p(0.7, 0.0), u).unwrap(),
                0.7f64.powi(u as i32),
                "A_{u}(0.7, 0) must be the single k=0 term"
            );
        }
    }

    #[test]
    fn power_series_known_prefixes() {
        let s = horadam_power_series(p(0.5, 0.3), 2).unwrap();
        assert_close(s.values[2], 0.55, 1e-15, "power series A_2");
        assert_eq!(
            horadam_power_series(p(1.0, 1.0), 4).unwrap().values,
            vec![1.0, 1.0, 2.0, 3.0, 5.0]
        );
        assert_eq!(
            horadam_power_series(p(0.0, 1.0), 5).unwrap().values,
            vec![1.0, 0.0, 1.0, 0.0, 1.0, 0.0]
        );
    }

    #[test]
    fn power_series_is_bit_identical_to_recursion() {
        for &(phi1, phi2) in &[(0.5, 0.3), (-1.3, 0.42), (0.0, -0.97), (1.9, -0.95)] {
            let a = horadam_recursive(p(phi1, phi2), 60).values;
            let b = horadam_power_series(p(phi1, phi2), 60).unwrap().values;
            assert_eq!(a, b, "({phi1}, {phi2})");
        }
    }

    #[test]
    fn series_reciprocal_generic_cases() {
        // 1/(1 - t) = 1 + t + t^2 + ...
        assert_eq!(series_reciprocal(&[1.0, -1.0], 4).unwrap(), vec![1.0; 5]);
        // Constant denominator.
        assert_eq!(
            series_reciprocal(&[2.0], 3).unwrap(),
            vec![0.5, 0.0, 0.0, 0.0]
        );
        // Zero constant term is not invertible.
        assert!(series_reciprocal(&[0.0, 1.0], 3).is_err());
        assert!(series_reciprocal(&[], 3).is_err());
    }

    #[test]
    fn series_reciprocal_product_is_one() {
        let denom = [1.25, -0.6, 0.31, 0.07, -0.005];
        let b = series_reciprocal(&denom, 30).unwrap();
        for u in 0..=30 {
            let mut conv = 0.0;
            for j in 0..denom.len().min(u + 1) {
                conv += denom[j] * b[u - j];
            }
            let want = if u == 0 { 1.0 } else { 0.0 };
            assert!(
                (conv - want).abs() <= 1e-13,
                "coefficient of t^{u} in b*denom is {conv}, want {want}"
            );
        }
    }

    /// Polynomial oracle: build A_u(x) coefficient vectors straight from the
    /// polynomial recursion A_u = phi1*x*A_{u-1} + phi2*A_{u-2}.
    fn polynomial_recursion_oracle(params: HoradamParams, u: usize) -> Vec<f64> {
        let mut polys: Vec<Vec<f64>> = vec![vec![1.0], vec![0.0, params.phi1()]];
        for m in 2..=u {
            let mut next = vec![0.0; m + 1];
            for (j, &c) in polys[m - 1].iter().enumerate() {
                next[j + 1] += params.phi1() * c;
            }
            for (j, &c) in polys[m - 2].iter().enumerate() {
                next[j] += params.phi2() * c;
            }
            polys.push(next);
        }
        polys.swap_remove(u.min(polys.len() - 1))
    }

    #[test]
    fn polynomial_known_coefficients() {
        assert_eq!(
            horadam_polynomial(p(0.9, -0.4), 0).unwrap().coeffs,
            vec![1.0]
        );
        assert_eq!(
            horadam_polynomial(p(0.9, -0.4), 1).unwrap().coeffs,
            vec![0.0, 0.9]
        );
        // A_2(x) = phi2 + phi1^2 x^2.
        let poly = horadam_polynomial(p(0.5, 0.3), 2).unwrap();
        assert_eq!(poly.coeffs, vec![0.3, 0.0, 0.25]);
        assert_eq!(poly.degree, 2);
    }

    #[test]
    fn polynomial_matches_recursion_oracle() {
        for &(phi1, phi2) in &[
            (0.5, 0.3),
            (1.0, 1.0),
            (-0.8, 0.6),
            (0.0, -0.5),
            (1.4, -0.49),
        ] {
            for u in 0..=15 {
                let got = horadam_polynomial(p(phi1, phi2), u).unwrap().coeffs;
                let want = polynomial_recursion_oracle(p(phi1, phi2), u);
                assert_eq!(got.len(), want.len());
                for j in 0..got.len() {
                    assert_close(
                        got[j],
                        want[j],
                        1e-12,
                        &format!("coeff of x^{j} in A_{u}({phi1}, {phi2})"),
                    );
                }
            }
        }
    }

    #[test]
    fn polynomial_parity_and_leading_coefficient() {
        for &(phi1, phi2) in &[(0.5, 0.3), (-1.2, 0.7), (0.3, -0.9)] {
            for u in 0..=15 {
                let poly = horadam_polynomial(p(phi1, phi2), u).unwrap();
                for j in 0..=u {
                    if (u - j) % 2 == 1 {
                        assert_eq!(poly.coeffs[j], 0.0, "parity violation at x^{j} in A_{u}");
                    }
                }
                assert_eq!(
                    poly.coeffs[u],
                    phi1.powi(u as i32),
                    "leading coefficient of A_{u}"
                );
            }
        }
    }

    #[test]
    fn polynomial_eval_known_values() {
        // A_1(x) = phi1 * x.
        let a1 = horadam_polynomial(p(0.5, 0.3), 1).unwrap();
        assert_eq!(horadam_polynomial_eval(&a1, 2.0), 1.0);
        // A_2(0) = phi2.
        let a2 = horadam_polynomial(p(0.5, 0.3), 2).unwrap();
        assert_eq!(horadam_polynomial_eval(&a2, 0.0), 0.3);
    }

    #[test]
    fn polynomial_at_one_recovers_horadam_numbers() {
        for &(phi1, phi2) in &[(0.5, 0.3), (1.0, 1.0), (-0.7, 0.2), (0.0, 0.9)] {
            for u in 0..=20 {
                let poly = horadam_polynomial(p(phi1, phi2), u).unwrap();
                let at_one = horadam_polynomial_eval(&poly, 1.0);
                let closed = horadam_closed_form(p(phi1, phi2), u).unwrap();
                assert_close(at_one, closed, 1e-12, &format!("A_{u}(1) vs closed form"));
            }
        }
    }

    #[test]
    fn phi1_zero_degenerates_to_phi2_powers() {
        let params = p(0.0, -0.77);
        let rec = horadam_recursive(params, 40).values;
        for m in 0..=20usize {
            let want = (-0.77f64).powi(m as i32);
            assert_close(
                rec[2 * m],
                want,
                1e-13,
                &format!("A_{} by recursion", 2 * m),
            );
            assert_eq!(rec.get(2 * m + 1).copied().unwrap_or(0.0), 0.0);
            let closed = horadam_closed_form(params, 2 * m).unwrap();
            assert_close(closed, want, 1e-13, &format!("A_{} closed form", 2 * m));
            if m >= 1 {
                assert_eq!(horadam_closed_form(params, 2 * m - 1).unwrap(), 0.0);
            }
        }
    }

    /// Recursion, power series and closed form on a coefficient grid over
    /// [-0.9, 0.9]^2. The first two routes agree at full precision everywhere.
    /// The closed form is compared against a tolerance that also accounts for
    /// its conditioning: its rounding error scales with the same-sign sum
    /// A_u(|phi1|, |phi2|), which for phi2 < 0 can dwarf the result itself.
    #[test]
    fn three_way_agreement_on_coefficient_grid() {
        let axis: Vec<f64> = (0..7).map(|i| -0.9 + 0.3 * i as f64).collect();
        for &phi1 in &axis {
            for &phi2 in &axis {
                let params = p(phi1, phi2);
                let rec = horadam_recursive(params, 50).values;
                let ps = horadam_power_series(params, 50).unwrap().values;
                let abs_rec = horadam_recursive(p(phi1.abs(), phi2.abs()), 50).values;
                for u in 0..=50 {
                    assert_close(
                        ps[u],
                        rec[u],
                        1e-10,
                        &format!("power series A_{u} at ({phi1}, {phi2})"),
                    );
                    let closed = horadam_closed_form(params, u).unwrap();
                    // 64 eps * A_u(|phi1|, |phi2|) bounds the cancellation error;
                    // away from cancellation the spec-level tolerances govern.
                    let conditioning = 64.0 * f64::EPSILON * abs_rec[u];
                    let tol = (1e-10 * rec[u].abs()).max(1e-12).max(conditioning);
                    assert!(
                        (closed - rec[u]).abs() <= tol,
                        "closed form A_{u} at ({phi1}, {phi2}): {closed} vs {} (tol {tol:e})",
                        rec[u]
                    );
                }
            }
        }
    }

    #[test]
    fn non_finite_params_are_rejected() {
        assert!(HoradamParams::new(f64::NAN, 0.0).is_err());
        assert!(HoradamParams::new(0.0, f64::INFINITY).is_err());
    }
}
