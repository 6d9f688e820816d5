//! Colex ranking of the lattice points of `Δ_{s,e}`.

use toric_reg::SimplexSlice;

fn main() -> toric_reg::Result<()> {
    let slice = SimplexSlice::new(2, 4, 1, 2);
    println!("{slice} has {} points", slice.size());
    for p in slice.iter() {
        let r = slice.rank(&p)?;
        assert_eq!(slice.unrank(r)?, p);
        println!("  {r:>2}  {p:?}");
    }
    let big = SimplexSlice::size_estimate(5, 10, 20, 1);
    println!("Δ_20 in ℕ^5 with D = 10 would hold {big} points");
    Ok(())
}
