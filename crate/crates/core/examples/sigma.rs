//! Hole set and sumsets regularity, with the closed-form bounds.

use toric_reg::classify::classify;
use toric_reg::generate::{generate, ex1sing, ex1sing2, Family, GenParams};
use toric_reg::sumset_reg::{normal_frame, sigma, stabilization_holds, verify_sigma_bounds};
use toric_reg::{GeneratorSet, SumsetTower};

fn show(name: &str, a: &GeneratorSet) -> toric_reg::Result<()> {
    let r = classify(a)?;
    let mut tower = SumsetTower::new(normal_frame(a, &r)?);
    let s = sigma(&mut tower, &r)?;
    let b = verify_sigma_bounds(&s);
    println!(
        "{name}: {:?}, ℋ = {:?}, σ = {} in [{}, {}], window {:?}, stabilizes {}",
        r.verdict,
        s.holes,
        s.sigma,
        s.lower,
        s.upper,
        s.window_verified,
        stabilization_holds(&mut tower, &s)?
    );
    if !b.upper_holds {
        println!("  σ exceeds the closed-form upper bound by {}", -b.slack_upper);
    }
    Ok(())
}

fn main() -> toric_reg::Result<()> {
    show("ex1sing", &ex1sing())?;
    show("ex1sing2", &ex1sing2())?;
    for (d, degree) in [(2, 3), (3, 4)] {
        let p = GenParams { d, degree, ..Default::default() };
        show(&format!("minimal-smooth d={d} D={degree}"), &generate(Family::MinimalSmooth, &p)?)?;
        show(&format!("veronese d={d} D={degree}"), &generate(Family::Veronese, &p)?)?;
    }
    let p = GenParams { d: 2, degree: 3, e: 3, ..Default::default() };
    show("one-singular d=2 D=3 e=3", &generate(Family::OneSingular, &p)?)?;
    Ok(())
}
