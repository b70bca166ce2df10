//! Compute the linear-process coefficients of a stationary AR(2) model by
//! all four routes and show that they agree.
//!
//!     cargo run --example coefficients

#![allow(clippy::needless_range_loop)] // index u (or lag h) is the subscript under test

use horadam_ar2::{impulse_response, psi_sequence, truncation_order, Ar2Params, PsiMethod};

fn main() {
    let params = Ar2Params::new(0.5, 0.3, 1.0).unwrap();
    let routes = [
        PsiMethod::Recursion,
        PsiMethod::ClosedForm,
        PsiMethod::PartialFractions,
        PsiMethod::CauchyProduct,
    ];
    let columns: Vec<Vec<f64>> = routes
        .iter()
        .map(|&m| psi_sequence(params, 12, m).unwrap())
        .collect();

    println!("psi_u for (phi1, phi2) = (0.5, 0.3), four routes:");
    println!(
        "{:>3} {:>22} {:>22} {:>22} {:>22}",
        "u", "recursion", "closed form", "partial fractions", "cauchy product"
    );
    for u in 0..=12 {
        println!(
            "{:>3} {:>22.16} {:>22.16} {:>22.16} {:>22.16}",
            u, columns[0][u], columns[1][u], columns[2][u], columns[3][u]
        );
    }

    let mut worst = 0.0f64;
    for u in 0..=12 {
        for c in &columns[1..] {
            worst = worst.max((c[u] - columns[0][u]).abs() / columns[0][u].abs().max(1.0));
        }
    }
    println!("\nlargest relative disagreement: {worst:.3e}");

    // How many coefficients a 1e-12 mean-square truncation error needs, and
    // the certified bound on what the cut discards.
    let order = truncation_order(params, 1e-12).unwrap();
    let ir = impulse_response(params, order, PsiMethod::Recursion).unwrap();
    println!("truncation order for tol 1e-12: {order}");
    println!(
        "certified l2 tail bound at that order: {:.3e}",
        ir.tail_bound.unwrap()
    );
}
