//! The coefficients as a formal power series: 1 / (1 - phi1 z - phi2 z^2)
//! expanded by long division reproduces the recursion exactly, because both
//! perform the same arithmetic.
//!
//!     cargo run --example power_series

use horadam_ar2::{horadam_power_series, horadam_recursive, series_reciprocal, HoradamParams};

fn main() {
    let params = HoradamParams::new(0.5, 0.3).unwrap();
    let series = horadam_power_series(params, 40).unwrap();
    let recursion = horadam_recursive(params, 40);

    let identical = series.values == recursion.values;
    println!("power-series expansion == recursion (bitwise): {identical}");
    println!("first coefficients: {:?}", &series.values[..8]);

    // series_reciprocal works for any polynomial with a nonzero constant
    // term; here is 1 / (1 - z)^2 whose coefficients are u + 1.
    let reciprocal = series_reciprocal(&[1.0, -2.0, 1.0], 8).unwrap();
    println!("\n1 / (1 - z)^2 expands to {reciprocal:?}");
}
