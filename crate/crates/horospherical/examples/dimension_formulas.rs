//! Dimension identities of the four named families, each checked against
//! the root-counting formula dim = 1 + #(R+ \ R_I+).
//!
//! Run with `cargo run --example dimension_formulas`.

use horospherical::{dimension, HoroPair, Result, Series, SimpleType};

fn main() -> Result<()> {
    println!("family 1, quadrics Q^2m from (A_m, a1, a_m):");
    for m in 2..=8 {
        let pair = HoroPair::new(SimpleType::new(Series::A, m)?, 1, m)?;
        println!(
            "  m = {m}: dim = {} (closed form 2m = {})",
            dimension(&pair)?,
            2 * m
        );
    }

    println!("\nfamily 2, Grassmannians Gr(i+1, m+2) from (A_m, a_i, a_i+1):");
    for (m, i) in [(4, 1), (4, 2), (6, 3), (8, 4)] {
        let pair = HoroPair::new(SimpleType::new(Series::A, m)?, i, i + 1)?;
        println!(
            "  m = {m}, i = {i}: dim = {} (closed form (i+1)(m+1-i) = {})",
            dimension(&pair)?,
            (i + 1) * (m + 1 - i)
        );
    }

    println!("\nfamily 5, odd symplectic Grassmannians Gr(i+1, 2m+1) from (C_m, a_i, a_i+1):");
    for (m, i) in [(2, 1), (3, 1), (3, 2), (5, 2), (8, 4)] {
        let pair = HoroPair::new(SimpleType::new(Series::C, m)?, i, i + 1)?;
        println!(
            "  m = {m}, i = {i}: dim = {} (closed form (i+1)(2m-i) - i(i+1)/2 = {})",
            dimension(&pair)?,
            (i + 1) * (2 * m - i) - i * (i + 1) / 2
        );
    }

    println!("\nfamily 6, spinor varieties from (D_m, a_m-1, a_m):");
    for m in 4..=8 {
        let pair = HoroPair::new(SimpleType::new(Series::D, m)?, m - 1, m)?;
        println!(
            "  m = {m}: dim = {} (closed form m(m+1)/2 = {})",
            dimension(&pair)?,
            m * (m + 1) / 2
        );
    }
    Ok(())
}
