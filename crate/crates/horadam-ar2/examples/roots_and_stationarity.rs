//! Classify characteristic roots and compare the stationarity region with
//! the parameter box |phi1| < 2, |phi2| < 1.
//!
//!     cargo run --example roots_and_stationarity

use horadam_ar2::{box_condition, characteristic_roots, is_stationary, Ar2Params};

fn main() {
    let cases = [
        (0.5, 0.3),    // distinct real roots
        (0.8, -0.16),  // repeated root at 0.4
        (0.4, -0.5),   // complex conjugate pair
        (1.5, 0.6),    // inside the box, yet explosive
        (1.99, -0.99), // inside the box, on the unit circle
    ];

    println!(
        "{:>6} {:>6}  {:<18} {:>8} {:>12} {:>6} {:>6}",
        "phi1", "phi2", "root kind", "radius", "margin", "box", "stat"
    );
    for (phi1, phi2) in cases {
        let params = Ar2Params::new(phi1, phi2, 1.0).unwrap();
        let roots = characteristic_roots(params);
        let st = is_stationary(params);
        println!(
            "{:>6} {:>6}  {:<18} {:>8.4} {:>12.4e} {:>6} {:>6}",
            phi1,
            phi2,
            format!("{:?}", roots.kind),
            horadam_ar2::spectral_radius(&roots),
            st.margin,
            box_condition(params),
            st.stationary,
        );
        println!(
            "{:>14} c1 = {:.6} + {:.6}i, c2 = {:.6} + {:.6}i",
            "", roots.c1.re, roots.c1.im, roots.c2.re, roots.c2.im
        );
    }

    println!("\nEvery stationary pair lies in the box, but not conversely:");
    println!("the last two rows satisfy the box and still fail stationarity.");
}
