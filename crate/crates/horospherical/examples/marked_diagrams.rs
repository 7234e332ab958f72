//! Marked diagrams and the projective-space test: a diagram with marked
//! roots decomposes when every mark is an admissible end of its own A- or
//! C-type component, and the shape of the Picard-number-one embedding
//! follows.
//!
//! Run with `cargo run --example marked_diagrams`.

use horospherical::classify::{picard_one_shape, projective_space_decomposition, MarkedDiagram};
use horospherical::dynkin::{full_diagram, subdiagram};
use horospherical::{Result, Series, SimpleType};

fn main() -> Result<()> {
    // Two marks in separate components: the embedding is a projective space.
    let diagram = subdiagram(SimpleType::new(Series::B, 3)?, &[2])?;
    let md = MarkedDiagram::new(diagram, vec![1, 3], 1)?;
    match projective_space_decomposition(&md)? {
        Some(dec) => {
            println!("B3 minus a2, marks {{a1, a3}}: decomposes");
            for (mark, component) in &dec.assigned {
                println!(
                    "  a{mark} is an admissible end of a {} component",
                    component.classified_type
                );
            }
        }
        None => println!("B3 minus a2, marks {{a1, a3}}: no decomposition"),
    }
    println!("  shape: {}\n", picard_one_shape(&md)?);

    // Two marks in one connected component: the decomposition fails and the
    // verdict depends on the specialness of the pair.
    for (series, rank, marks) in [
        (Series::A, 4, vec![1, 4]),
        (Series::B, 3, vec![1, 2]),
        (Series::G, 2, vec![1, 2]),
    ] {
        let diagram = full_diagram(SimpleType::new(series, rank)?)?;
        let md = MarkedDiagram::new(diagram, marks.clone(), 1)?;
        println!(
            "{}{rank} marked {marks:?}: decomposition {}, shape {}",
            series.letter(),
            if projective_space_decomposition(&md)?.is_some() {
                "exists"
            } else {
                "fails"
            },
            picard_one_shape(&md)?
        );
    }

    // One mark and rank one: a single color never obstructs.
    let diagram = full_diagram(SimpleType::new(Series::E, 6)?)?;
    let md = MarkedDiagram::new(diagram, vec![2], 1)?;
    println!("\nE6 marked {{a2}}: shape {}", picard_one_shape(&md)?);

    // Rank two with three marks spread over three components.
    let diagram = subdiagram(SimpleType::new(Series::A, 5)?, &[2, 4])?;
    let md = MarkedDiagram::new(diagram, vec![1, 3, 5], 2)?;
    println!(
        "A5 minus {{a2, a4}} marked {{a1, a3, a5}}: shape {}",
        picard_one_shape(&md)?
    );
    Ok(())
}
