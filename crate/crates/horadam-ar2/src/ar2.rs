//! AR(2) model parameters, characteristic roots, stationarity, and the two
//! root-based routes to the impulse-response coefficients.
//!
//! The model is Y_t = phi1*Y_{t-1} + phi2*Y_{t-2} + eps_t, i.e.
//! (1 - phi1*L - phi2*L^2) Y_t = eps_t. Factoring the lag polynomial as
//! (1 - c1*L)(1 - c2*L) makes c1, c2 the roots of x^2 - phi1*x - phi2 = 0,
//! so c1 + c2 = phi1 and c1*c2 = -phi2. The process has a square-summable
//! linear-process representation iff max(|c1|, |c2|) < 1.
//!
//! The coefficient box |phi1| < 2, |phi2| < 1 is necessary but not sufficient
//! for stationarity; (1.5, 0.6) sits inside the box with a root at about 1.83.

use crate::error::{Error, Result};
use crate::horadam::HoradamParams;
use num_complex::Complex64;
use serde::Serialize;

/// AR(2) parameters. phi1, phi2 finite; sigma (noise standard deviation) positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ar2Params {
    phi1: f64,
    phi2: f64,
    sigma: f64,
}

impl Ar2Params {
    pub fn new(phi1: f64, phi2: f64, sigma: f64) -> Result<Self> {
        if !phi1.is_finite() || !phi2.is_finite() {
            return Err(Error::invalid(format!(
                "AR coefficients must be finite, got phi1={phi1}, phi2={phi2}"
            )));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::invalid(format!(
                "noise standard deviation must be positive and finite, got sigma={sigma}"
            )));
        }
        Ok(Ar2Params { phi1, phi2, sigma })
    }

    pub fn phi1(&self) -> f64 {
        self.phi1
    }

    pub fn phi2(&self) -> f64 {
        self.phi2
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// The recurrence coefficients of the matching Horadam sequence.
    pub fn horadam(&self) -> HoradamParams {
        HoradamParams::new(self.phi1, self.phi2).expect("validated at construction")
    }
}

/// Classification of the characteristic root pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootKind {
    DistinctReal,
    RepeatedReal,
    ComplexConjugate,
}

/// Roots of x^2 - phi1*x - phi2 = 0, ordered so that |c1| >= |c2|
/// (ties broken by larger real part; for a conjugate pair c1 carries the
/// positive imaginary part and c2 is its conjugate).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicRoots {
    pub c1: Complex64,
    pub c2: Complex64,
    pub kind: RootKind,
}

/// Stationarity verdict with the margin 1 - max(|c1|, |c2|);
/// the margin is negative (or zero at a unit root) when non-stationary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Stationarity {
    pub stationary: bool,
    pub margin: f64,
}

/// Discriminants within 1e-12 * max(1, phi1^2) of zero are treated as a
/// repeated root; below that scale the root separation is pure noise.
const REPEATED_DISC_TOL: f64 = 1e-12;

/// Relative root separation below which the partial-fraction formula switches
/// to the repeated-root limit to avoid a 0/0 evaluation.
const NEAR_REPEATED_SEP: f64 = 1e-8;

pub fn characteristic_roots(params: Ar2Params) -> CharacteristicRoots {
    let (phi1, phi2) = (params.phi1, params.phi2);
    let disc = phi1 * phi1 + 4.0 * phi2;
    if disc.abs() <= REPEATED_DISC_TOL * (phi1 * phi1).max(1.0) {
        let c = Complex64::new(phi1 / 2.0, 0.0);
        return CharacteristicRoots {
            c1: c,
            c2: c,
            kind: RootKind::RepeatedReal,
        };
    }
    if disc > 0.0 {
        // Stable form: take the root where phi1 and sqrt(disc) add, then
        // recover the other from the product c1*c2 = -phi2. The first root is
        // always the one of larger magnitude; when |c1| = |c2| (phi1 = 0) it is
        // the positive one, satisfying the larger-real-part tie-break.
        let s = disc.sqrt();
        let r1 = if phi1 >= 0.0 {
            (phi1 + s) / 2.0
        } else {
            (phi1 - s) / 2.0
        };
        let r2 = if phi2 == 0.0 { 0.0 } else { -phi2 / r1 };
        CharacteristicRoots {
            c1: Complex64::new(r1, 0.0),
            c2: Complex64::new(r2, 0.0),
            kind: RootKind::DistinctReal,
        }
    } else {
        let c1 = Complex64::new(phi1 / 2.0, (-disc).sqrt() / 2.0);
        CharacteristicRoots {
            c1,
            c2: c1.conj(),
            kind: RootKind::ComplexConjugate,
        }
    }
}

/// Largest root modulus.
pub fn spectral_radius(roots: &CharacteristicRoots) -> f64 {
    roots.c1.norm().max(roots.c2.norm())
}

/// Margins below this are indistinguishable from a unit root at double
/// precision (an analytic unit root lands within ~1e-16 of 1 after rounding),
/// so they are classified as non-stationary.
pub const UNIT_ROOT_TOL: f64 = 1e-12;

pub fn is_stationary(params: Ar2Params) -> Stationarity {
    let rho = spectral_radius(&characteristic_roots(params));
    let margin = 1.0 - rho;
    Stationarity {
        stationary: margin > UNIT_ROOT_TOL,
        margin,
    }
}

/// The coefficient box |phi1| < 2 and |phi2| < 1: necessary for stationarity,
/// not sufficient.
pub fn box_condition(params: Ar2Params) -> bool {
    params.phi1.abs() < 2.0 && params.phi2.abs() < 1.0
}

/// psi_u via partial fractions: (c1^(u+1) - c2^(u+1)) / (c1 - c2) for distinct
/// roots, (u+1) * c^u for a repeated root. Root pairs closer than
/// 1e-8 * max(|c1|, |c2|) fall back to the repeated-root formula at the mean
/// root. The result of the complex evaluation is real up to rounding residue;
/// the real part is returned.
pub fn psi_partial_fractions(roots: &CharacteristicRoots, u: usize) -> f64 {
    let exp = u as u32;
    let z = match roots.kind {
        RootKind::RepeatedReal => (u as f64 + 1.0) * roots.c1.powu(exp),
        _ => {
            let sep = roots.c1 - roots.c2;
            if sep.norm() < NEAR_REPEATED_SEP * roots.c1.norm().max(roots.c2.norm()) {
                let m = (roots.c1 + roots.c2) / 2.0;
                (u as f64 + 1.0) * m.powu(exp)
            } else {
                (roots.c1.powu(exp + 1) - roots.c2.powu(exp + 1)) / sep
            }
        }
    };
    debug_assert!(
        z.im.abs()
            <= 1e-10
                * z.re
                    .abs()
                    .max((u as f64 + 1.0) * spectral_radius(roots).powi(u as i32))
                    .max(f64::MIN_POSITIVE),
        "imaginary residue {} out of scale at u={u}",
        z.im
    );
    z.re
}

/// psi_u as the Cauchy product of the geometric expansions of 1/(1-c1*L) and
/// 1/(1-c2*L): sum_{k=0}^{u} c1^k * c2^(u-k), evaluated by Horner regrouping
/// in complex arithmetic. Real part returned (residue at rounding level).
pub fn psi_cauchy_product(roots: &CharacteristicRoots, u: usize) -> f64 {
    let mut s = Complex64::new(1.0, 0.0);
    let mut c2_pow = Complex64::new(1.0, 0.0);
    for _ in 1..=u {
        c2_pow *= roots.c2;
        s = roots.c1 * s + c2_pow;
    }
    debug_assert!(
        s.im.abs()
            <= 1e-10
                * s.re
                    .abs()
                    .max((u as f64 + 1.0) * spectral_radius(roots).powi(u as i32))
                    .max(f64::MIN_POSITIVE),
        "imaginary residue {} out of scale at u={u}",
        s.im
    );
    s.re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::horadam::horadam_recursive;
    use crate::testutil::assert_close;

    fn p(phi1: f64, phi2: f64) -> Ar2Params {
        Ar2Params::new(phi1, phi2, 1.0).unwrap()
    }

    fn grid() -> Vec<Ar2Params> {
        let mut v = Vec::new();
        for i in 0..9 {
            for j in 0..9 {
                let phi1 = -1.8 + 0.45 * i as f64;
                let phi2 = -0.9 + 0.225 * j as f64;
                v.push(p(phi1, phi2));
            }
        }
        v
    }

    #[test]
    fn roots_match_quadratic_formula_oracle() {
        let r = characteristic_roots(p(0.5, 0.3));
        let s = 1.45f64.sqrt();
        assert_eq!(r.kind, RootKind::DistinctReal);
        assert_close(r.c1.re, (0.5 + s) / 2.0, 1e-15, "c1");
        assert_close(r.c2.re, (0.5 - s) / 2.0, 1e-15, "c2");
        assert_eq!(r.c1.im, 0.0);
        assert_eq!(r.c2.im, 0.0);
        assert_close(r.c1.re, 0.852079728939614, 1e-12, "c1 frozen");
        assert_close(r.c2.re, -0.352079728939614, 1e-12, "c2 frozen");
    }

    #[test]
    fn repeated_root_detected_exactly_and_by_threshold() {
        let r = characteristic_roots(p(1.0, -0.25));
        assert_eq!(r.kind, RootKind::RepeatedReal);
        assert_eq!(r.c1, r.c2);
        assert_eq!(r.c1.re, 0.5);

        // Just inside the discriminant tolerance: still repeated.
        let inside = characteristic_roots(p(1.0, -0.25 + 1e-15));
        assert_eq!(inside.kind, RootKind::RepeatedReal);
        // Clearly outside: distinct.
        let outside = characteristic_roots(p(1.0, -0.25 + 1e-11));
        assert_eq!(outside.kind, RootKind::DistinctReal);
    }

    #[test]
    fn complex_pair_for_negative_discriminant() {
        let r = characteristic_roots(p(1.0, -0.5));
        assert_eq!(r.kind, RootKind::ComplexConjugate);
        assert_eq!(r.c1, Complex64::new(0.5, 0.5));
        assert_eq!(r.c2, Complex64::new(0.5, -0.5));
        assert_close(r.c1.norm(), 0.5f64.sqrt(), 1e-15, "|c1|");
    }

    #[test]
    fn degenerate_zero_coefficients() {
        let both = characteristic_roots(p(0.0, 0.0));
        assert_eq!(both.kind, RootKind::RepeatedReal);
        assert_eq!(both.c1.re, 0.0);

        let r = characteristic_roots(p(0.8, 0.0));
        assert_eq!(r.kind, RootKind::DistinctReal);
        assert_eq!(r.c1.re, 0.8);
        assert_eq!(r.c2.re, 0.0);
    }

    #[test]
    fn root_sum_product_and_ordering_on_grid() {
        for params in grid() {
            let r = characteristic_roots(params);
            let sum = r.c1 + r.c2;
            let prod = r.c1 * r.c2;
            assert!(
                (sum.re - params.phi1()).abs() <= 1e-12 && sum.im.abs() <= 1e-12,
                "c1+c2 != phi1 at ({}, {})",
                params.phi1(),
                params.phi2()
            );
            assert!(
                (prod.re + params.phi2()).abs() <= 1e-12 && prod.im.abs() <= 1e-12,
                "c1*c2 != -phi2 at ({}, {})",
                params.phi1(),
                params.phi2()
            );
            assert!(r.c1.norm() >= r.c2.norm() - 1e-15, "ordering violated");
        }
    }

    #[test]
    fn stationarity_known_cases() {
        let s = is_stationary(p(0.5, 0.3));
        assert!(s.stationary);
        assert_close(s.margin, 0.147920271060385, 1e-12, "margin(0.5, 0.3)");

        let ns = is_stationary(p(1.5, 0.6));
        assert!(!ns.stationary);
        assert!(
            ns.margin < -0.8,
            "root near 1.83 expected, margin {}",
            ns.margin
        );

        assert!(is_stationary(p(1.0, -0.25)).stationary);
        assert!(is_stationary(p(0.0, 0.0)).stationary);
    }

    #[test]
    fn unit_root_is_not_stationary() {
        // x^2 - 0.3x - 0.7 has a root at exactly 1.
        let s = is_stationary(p(0.3, 0.7));
        assert!(!s.stationary);
        assert!(s.margin.abs() <= 1e-12);
    }

    #[test]
    fn box_condition_cases_and_gap_witnesses() {
        assert!(box_condition(p(0.5, 0.3)));
        assert!(!box_condition(p(2.1, 0.3)));
        assert!(!box_condition(p(0.5, -1.0)));

        // Inside the box yet non-stationary: the box is not sufficient.
        for &(phi1, phi2) in &[(1.5, 0.6), (1.99, -0.99), (0.5, 0.9)] {
            let params = p(phi1, phi2);
            assert!(
                box_condition(params),
                "({phi1}, {phi2}) should be in the box"
            );
            assert!(
                !is_stationary(params).stationary,
                "({phi1}, {phi2}) should be non-stationary"
            );
        }
    }

    #[test]
    fn stationary_implies_box_on_grid() {
        for params in grid() {
            if is_stationary(params).stationary {
                assert!(
                    box_condition(params),
                    "stationary point ({}, {}) outside the box",
                    params.phi1(),
                    params.phi2()
                );
            }
        }
    }

    #[test]
    fn partial_fractions_known_values() {
        let r = characteristic_roots(p(0.5, 0.3));
        assert_eq!(psi_partial_fractions(&r, 0), 1.0);
        assert_close(psi_partial_fractions(&r, 2), 0.55, 1e-14, "psi_2");

        let rep = characteristic_roots(p(1.0, -0.25));
        assert_eq!(psi_partial_fractions(&rep, 3), 0.5, "(u+1) c^u = 4 * 0.125");

        let cx = characteristic_roots(p(1.0, -0.5));
        assert_close(psi_partial_fractions(&cx, 4), -0.25, 1e-15, "complex psi_4");
    }

    #[test]
    fn cauchy_product_known_values() {
        let r = characteristic_roots(p(0.5, 0.3));
        assert_eq!(psi_cauchy_product(&r, 0), 1.0);
        assert_close(psi_cauchy_product(&r, 1), 0.5, 1e-15, "psi_1 = c1 + c2");

        let cx = characteristic_roots(p(1.0, -0.5));
        assert!(psi_cauchy_product(&cx, 3).abs() <= 1e-15, "psi_3 vanishes");
    }

    #[test]
    fn near_repeated_pair_switches_to_limit_formula() {
        // Hand-built almost-coincident pair; the generic formula would divide
        // by 1e-9 and lose half the significand.
        let roots = CharacteristicRoots {
            c1: Complex64::new(0.5 + 1e-9, 0.0),
            c2: Complex64::new(0.5, 0.0),
            kind: RootKind::DistinctReal,
        };
        for u in 0..=30 {
            let got = psi_partial_fractions(&roots, u);
            let want = (u as f64 + 1.0) * (0.5 + 5e-10f64).powi(u as i32);
            assert_close(got, want, 1e-9, &format!("near-repeated psi_{u}"));
        }
    }

    #[test]
    fn root_routes_match_recursion_on_grid() {
        for params in grid() {
            let r = characteristic_roots(params);
            let rec = horadam_recursive(params.horadam(), 50).values;
            for u in 0..=50 {
                let scale = rec[u].abs().max(1e-6);
                let pf = psi_partial_fractions(&r, u);
                let cp = psi_cauchy_product(&r, u);
                assert!(
                    (pf - rec[u]).abs() <= 1e-9 * scale,
                    "partial fractions psi_{u} at ({}, {}): {pf} vs {}",
                    params.phi1(),
                    params.phi2(),
                    rec[u]
                );
                assert!(
                    (cp - rec[u]).abs() <= 1e-9 * scale,
                    "cauchy psi_{u} at ({}, {}): {cp} vs {}",
                    params.phi1(),
                    params.phi2(),
                    rec[u]
                );
            }
        }
    }

    #[test]
    fn zero_roots_power_at_zero() {
        // Both roots zero: psi_0 = 1, psi_u = 0 for u >= 1.
        let r = characteristic_roots(p(0.0, 0.0));
        assert_eq!(psi_partial_fractions(&r, 0), 1.0);
        assert_eq!(psi_partial_fractions(&r, 5), 0.0);
        assert_eq!(psi_cauchy_product(&r, 0), 1.0);
        assert_eq!(psi_cauchy_product(&r, 5), 0.0);
    }

    #[test]
    fn params_validation() {
        assert!(Ar2Params::new(0.5, 0.3, 0.0).is_err());
        assert!(Ar2Params::new(0.5, 0.3, -1.0).is_err());
        assert!(Ar2Params::new(f64::NAN, 0.3, 1.0).is_err());
        assert!(Ar2Params::new(0.5, 0.3, f64::NAN).is_err());
    }
}
