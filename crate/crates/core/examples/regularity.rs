//! Castelnuovo–Mumford regularity from the complexes `T_y`.

use toric_reg::cm_reg::{reg, RegOptions};
use toric_reg::generate::{ex1sing, ex1sing2};
use toric_reg::homology::{build_t, reduced_homology, Field};
use toric_reg::{LatticeVector, SumsetTower};

fn main() -> toric_reg::Result<()> {
    for a in [ex1sing(), ex1sing2()] {
        let r = reg(&a, &RegOptions::default())?;
        println!(
            "reg = {} (σ = {:?}) at y = {:?}, i = {}, swept to |y| = {} via {:?}",
            r.reg, r.sigma, r.witness_y, r.witness_i, r.cutoff_norm, r.method
        );
    }

    // the hollow triangle behind reg = 3 for the second set
    let a = ex1sing2();
    let mut tower = SumsetTower::new(a);
    tower.ensure(5)?;
    let y = LatticeVector::new(vec![6, 9, 15])?;
    let t = build_t(&tower, &y)?;
    println!("T_y faces {:?}", t.face_masks());
    let h = reduced_homology(&t, Field::Rationals);
    println!("nonzero β̃ in degrees {:?}, value {}", h.nonzero_degrees(), 30 / 6 - 2);
    Ok(())
}
