//! Degree through maximal minors and the Eisenbud–Goto comparison.

use toric_reg::classify::classify;
use toric_reg::cm_reg::{degree, eg_check, eg_inequality_suite, reg, RegOptions};
use toric_reg::generate::{generate, ex1sing, Family, GenParams};

fn main() -> toric_reg::Result<()> {
    let p = GenParams { d: 3, degree: 4, e: 2, extra: 3, seed: 1 };
    for a in [ex1sing(), generate(Family::OneSingular, &p)?] {
        let deg = degree(&a)?;
        let r = reg(&a, &RegOptions::default())?;
        let eg = eg_check(r.reg, &deg, Some(classify(&a)?.verdict), a.dim())?;
        println!(
            "θ = {}, deg = {}, codim = {}: reg {} ≤ {} is {} (slack {})",
            deg.theta, deg.degree, deg.codim, eg.reg, eg.bound, eg.holds, eg.slack
        );
    }
    for (d, big_d, e) in [(3, 3, 1), (3, 3, 3), (4, 6, 2), (6, 10, 5)] {
        println!("{:?}", eg_inequality_suite(d, big_d, e)?);
    }
    Ok(())
}
