//! Iterated sumsets of a planar set and its Hilbert function.

use toric_reg::lattice::hilbert_function;
use toric_reg::{GeneratorSet, SumsetTower};

fn main() -> toric_reg::Result<()> {
    let a = GeneratorSet::new(
        2,
        vec![vec![0, 0], vec![4, 0], vec![0, 4], vec![3, 1], vec![1, 3], vec![2, 0], vec![0, 2]],
    )?;
    println!("D = {}, e = {}", a.degree(), a.norm_divisor());
    let mut tower = SumsetTower::new(a);
    for s in 0..=3 {
        let level = tower.sumset(s)?;
        let missing: Vec<_> = level.missing().collect();
        println!(
            "{s}A: {} of {} points in {}, missing {missing:?}",
            level.cardinality(),
            level.slice().size(),
            level.slice()
        );
    }
    println!("Hilbert function: {:?}", hilbert_function(&mut tower, 8)?);
    Ok(())
}
