//! The Fibonacci embedding: with phi1 = phi2 = 1 the Horadam sequence is
//! A_u = F_(u+1), and with phi2 = phi1^2 the coefficients factor as
//! psi_u = F_(u+1) * phi1^u.
//!
//!     cargo run --example fibonacci

#![allow(clippy::needless_range_loop)] // index u (or lag h) is the subscript under test

use horadam_ar2::{horadam_recursive, horadam_recursive_exact, HoradamParams};

fn main() {
    let exact = horadam_recursive_exact(1, 1, 20).unwrap();
    println!("A_u at (1, 1), exact 128-bit integers:");
    println!("{:?}", &exact[..12]);
    println!("A_20 = {}", exact[20]);

    // The f64 recursion reproduces them bit for bit while they fit 53 bits.
    let float = horadam_recursive(HoradamParams::new(1.0, 1.0).unwrap(), 20);
    let all_equal = (0..=20).all(|u| float.values[u] == exact[u] as f64);
    println!("float recursion identical: {all_equal}");

    // Corollary: a one-parameter AR(2) family with Fibonacci structure.
    let phi1 = 0.6f64;
    let params = HoradamParams::new(phi1, phi1 * phi1).unwrap();
    let seq = horadam_recursive(params, 15);
    println!("\npsi_u at (0.6, 0.36) against F_(u+1) * 0.6^u:");
    let mut worst = 0.0f64;
    for u in 0..=15 {
        let reference = exact[u] as f64 * phi1.powi(u as i32);
        worst = worst.max((seq.values[u] - reference).abs() / reference);
        if u <= 6 {
            println!(
                "  u = {u}: {:.12}  (reference {:.12})",
                seq.values[u], reference
            );
        }
    }
    println!("largest relative error through u = 15: {worst:.3e}");
}
