//! Induced subdiagrams and their classification: deleting vertices from a
//! simple diagram, naming the connected components, and testing which
//! vertices are admissible ends.
//!
//! Run with `cargo run --example dynkin_subdiagrams`.

use horospherical::dynkin::{admissible_end, diagram_automorphisms, subdiagram};
use horospherical::{Result, Series, SimpleType};

fn main() -> Result<()> {
    for (series, rank, removed) in [
        (Series::B, 3, vec![3]),
        (Series::B, 3, vec![1]),
        (Series::F, 4, vec![2]),
        (Series::D, 4, vec![2]),
        (Series::E, 7, vec![4]),
        (Series::C, 6, vec![2]),
    ] {
        let stype = SimpleType::new(series, rank)?;
        let diagram = subdiagram(stype, &removed)?;
        println!("{stype} minus {removed:?}:");
        for component in diagram.components()? {
            let admissible: Vec<String> = component
                .vertices()
                .iter()
                .filter(|&&v| admissible_end(&component, v))
                .map(|v| format!("a{v}"))
                .collect();
            println!(
                "  component {:?} of type {}; admissible ends: {}",
                component.vertices(),
                component.classified_type,
                if admissible.is_empty() {
                    "none".to_string()
                } else {
                    admissible.join(", ")
                }
            );
        }
    }

    println!("\ndiagram automorphism groups:");
    for (series, rank) in [
        (Series::A, 4),
        (Series::D, 4),
        (Series::D, 6),
        (Series::E, 6),
        (Series::G, 2),
    ] {
        let stype = SimpleType::new(series, rank)?;
        let autos = diagram_automorphisms(stype);
        println!("  {stype}: {} automorphisms {:?}", autos.len(), autos);
    }
    Ok(())
}
