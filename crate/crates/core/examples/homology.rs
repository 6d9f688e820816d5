//! Reduced homology of small complexes over ℚ and prime fields.

use toric_reg::homology::{reduced_homology, FaceComplex, Field};

fn main() -> toric_reg::Result<()> {
    // two disjoint edges
    let two_edges = FaceComplex::from_faces(4, &[0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b1100])?;
    let cases = [
        ("{∅}", FaceComplex::void(3)),
        ("hollow triangle", FaceComplex::simplex_boundary(3)),
        ("tetrahedron", FaceComplex::simplex(4)),
        ("2-sphere", FaceComplex::simplex_boundary(4)),
        ("two edges", two_edges),
    ];
    for (name, c) in cases {
        for f in [Field::Rationals, Field::F2, Field::F32003] {
            let h = reduced_homology(&c, f);
            println!("{name:>16} over {f:<6}: nonzero {:?}, χ̃ = {}", h.nonzero_degrees(), c.reduced_euler_characteristic());
        }
    }
    Ok(())
}
