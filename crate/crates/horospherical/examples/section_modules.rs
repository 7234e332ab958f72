//! Normal-bundle sections of the two closed orbits, by the antidominance
//! criterion: the fiber's lowest weight is reflected through the parabolic
//! longest word, and sections exist exactly when it lands antidominant.
//!
//! For every two-orbit family one side is rigid (zero sections) and the
//! other carries an irreducible module — the unipotent part of the full
//! automorphism group.
//!
//! Run with `cargo run --example section_modules`.

use horospherical::{
    fiber_lowest_weight, normal_sections, HoroPair, OrbitSide, Result, Series, SimpleType,
};

fn main() -> Result<()> {
    let pairs = [
        (
            "family 3",
            HoroPair::new(SimpleType::new(Series::B, 4)?, 3, 4)?,
        ),
        (
            "family 4",
            HoroPair::new(SimpleType::new(Series::B, 3)?, 1, 3)?,
        ),
        (
            "family 5",
            HoroPair::new(SimpleType::new(Series::C, 3)?, 1, 2)?,
        ),
        (
            "family 7",
            HoroPair::new(SimpleType::new(Series::F, 4)?, 2, 3)?,
        ),
        (
            "family 8",
            HoroPair::new(SimpleType::new(Series::G, 2)?, 2, 1)?,
        ),
    ];
    for (label, pair) in pairs {
        println!("{label}: {pair}");
        for side in OrbitSide::BOTH {
            let lowest = fiber_lowest_weight(&pair, side)?;
            let sections = normal_sections(&pair, side)?;
            println!(
                "  side {side}: lowest weight {lowest}{}  ->  H0 = {sections}",
                if lowest.is_antidominant() {
                    " (antidominant)"
                } else {
                    ""
                }
            );
        }
        println!();
    }
    Ok(())
}
