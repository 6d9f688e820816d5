//! Affine charts, minimal generators and the smooth / one-singular verdict.

use toric_reg::classify::{charts, classify, is_chart_smooth, lambda_min, minimal_generators};
use toric_reg::generate::{eight_point_set, veronese_points};
use toric_reg::GeneratorSet;

fn main() -> toric_reg::Result<()> {
    let a = eight_point_set();
    for chart in charts(&a) {
        println!(
            "chart {}: {:?}\n  minimal {:?}, smooth {}",
            chart.index,
            chart.generators,
            minimal_generators(&chart.generators),
            is_chart_smooth(&chart)
        );
    }
    println!("λ(1, 2) = {:?}", lambda_min(&a, 1, 2));
    let r = classify(&a)?;
    println!("verdict {:?}, e = {:?}, vertex {:?}", r.verdict, r.e, r.singular_vertex);

    let v = GeneratorSet::new(3, veronese_points(3, 3).into_iter().collect())?;
    println!("Veronese d = 3, D = 3: {:?}", classify(&v)?.verdict);

    // a one-singular set with e = D reduces to a smooth set one dimension down
    let b = GeneratorSet::new(
        3,
        vec![
            vec![0, 0, 0], vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2],
            vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1],
        ],
    )?;
    let r = classify(&b)?;
    println!("e = D example: {:?}, e = {:?}, reduced {:?}", r.verdict, r.e, r.reduced.map(|x| x.points().to_vec()));
    Ok(())
}
