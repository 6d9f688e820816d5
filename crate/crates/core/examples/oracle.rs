//! The brute-force oracles next to the fast routines.

use std::collections::BTreeSet;

use toric_reg::generate::ex1sing2;
use toric_reg::homology::{reduced_homology, FaceComplex, Field};
use toric_reg::oracle::{homology_recheck, naive_member_homogenized, naive_sumset};
use toric_reg::{LatticeVector, SumsetTower};

fn main() -> toric_reg::Result<()> {
    let a = ex1sing2();
    let mut tower = SumsetTower::new(a.clone());
    for s in 0..=3 {
        let fast: BTreeSet<LatticeVector> = tower.sumset(s)?.points().collect();
        let slow = naive_sumset(a.points(), s)?;
        println!("s = {s}: {} points, agree {}", fast.len(), fast == slow);
    }
    for y in [[0, 3, 9], [6, 3, 9], [6, 9, 15]] {
        let y = LatticeVector::new(y.to_vec())?;
        println!(
            "{y:?} ∈ S_A: {} / {}",
            tower.semigroup_member(&y)?,
            naive_member_homogenized(a.points(), a.degree(), &y)?
        );
    }
    let sphere = FaceComplex::simplex_boundary(4);
    println!(
        "2-sphere: {:?} / {:?}",
        reduced_homology(&sphere, Field::F32003).nonzero_degrees(),
        homology_recheck(&sphere.face_masks(), 4, 32003)
    );
    Ok(())
}
