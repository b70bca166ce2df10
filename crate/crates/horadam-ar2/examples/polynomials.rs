//! Horadam polynomials in dense coefficient form. At (1, 1) the nonzero
//! coefficients are the shallow-diagonal binomials of Pascal's triangle,
//! and evaluating at x = 1 recovers the sequence itself.
//!
//!     cargo run --example polynomials

use horadam_ar2::{
    horadam_closed_form, horadam_polynomial, horadam_polynomial_eval, horadam_recursive,
    HoradamParams,
};

fn main() {
    let unit = HoradamParams::new(1.0, 1.0).unwrap();
    println!("coefficient rows at (1, 1); entry j is the weight of x^j:");
    for u in 0..=6 {
        let poly = horadam_polynomial(unit, u).unwrap();
        println!("  A_{u}(x): {:?}", poly.coeffs);
    }

    let seq = horadam_recursive(unit, 10);
    let consistent = (0..=10).all(|u| {
        let poly = horadam_polynomial(unit, u).unwrap();
        horadam_polynomial_eval(&poly, 1.0) == seq.values[u]
    });
    println!("A_u(1) equals the recursion at (1, 1): {consistent}");

    // For general parameters the evaluation at 1 is the distributed closed
    // form, the same sum the ClosedForm coefficient route uses.
    let params = HoradamParams::new(0.5, 0.3).unwrap();
    println!("\nA_u(1) at (0.5, 0.3) against the closed form:");
    for u in [3usize, 8, 15] {
        let poly = horadam_polynomial(params, u).unwrap();
        let via_poly = horadam_polynomial_eval(&poly, 1.0);
        let via_closed = horadam_closed_form(params, u).unwrap();
        println!("  u = {u}: {via_poly:.16} vs {via_closed:.16}");
    }
}
