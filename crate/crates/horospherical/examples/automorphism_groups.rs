//! Connected automorphism groups of the two-orbit varieties: a reductive
//! part, a one-dimensional torus, and a unipotent part given by the
//! nonvanishing normal-section module. Dimensions come out of
//! dim G + 1 + dim V.
//!
//! Run with `cargo run --example automorphism_groups`.

use horospherical::{enumerate_special, homogeneity, Result};

fn main() -> Result<()> {
    println!("two-orbit varieties at rank <= 8 and their automorphism groups:\n");
    for record in enumerate_special(8)? {
        let verdict = homogeneity(&record.pair)?;
        let Some(aut) = verdict.aut else {
            continue;
        };
        println!(
            "{:<14} orbits {}  dim Aut0 = {:>3}  Aut0 = {}",
            record.pair.to_string(),
            verdict.orbit_count,
            aut.dim,
            aut.description
        );
    }
    Ok(())
}
