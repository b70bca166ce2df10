//! Autocovariances two ways: the truncated MA sum against the Yule-Walker
//! recursion.
//!
//!     cargo run --example acf

use horadam_ar2::{
    acf_from_ma, acf_yule_walker, impulse_response, truncation_order, Ar2Params, PsiMethod,
};

fn main() {
    let params = Ar2Params::new(0.5, 0.3, 1.0).unwrap();
    let maxlag = 10;

    let order = truncation_order(params, 1e-12).unwrap() + maxlag;
    let ir = impulse_response(params, order, PsiMethod::Recursion).unwrap();
    let ma = acf_from_ma(&ir, maxlag).unwrap();
    let yw = acf_yule_walker(params, maxlag).unwrap();

    println!("gamma(h) for (phi1, phi2, sigma) = (0.5, 0.3, 1), order {order}:");
    println!(
        "{:>3} {:>22} {:>22} {:>12}",
        "h", "MA sum", "Yule-Walker", "rel diff"
    );
    for h in 0..=maxlag {
        let rel = (ma.gamma[h] - yw.gamma[h]).abs() / yw.gamma[h].abs();
        println!(
            "{:>3} {:>22.16} {:>22.16} {:>12.3e}",
            h, ma.gamma[h], yw.gamma[h], rel
        );
    }

    // gamma(0) has a closed form on the stationary region.
    let (phi1, phi2, s2) = (0.5f64, 0.3f64, 1.0f64);
    let gamma0 = s2 * (1.0 - phi2) / ((1.0 + phi2) * ((1.0 - phi2) * (1.0 - phi2) - phi1 * phi1));
    println!("\nclosed-form gamma(0) = {gamma0:.16}");
}
