//! The full classification: every special pair of rank ≤ 8, its family
//! labels, dimension and homogeneity verdict.
//!
//! Run with `cargo run --example classification`.

use horospherical::{enumerate_special, homogeneity, Result};

fn main() -> Result<()> {
    let records = enumerate_special(8)?;
    println!("special pairs at rank <= 8: {}\n", records.len());
    let mut homogeneous = 0;
    for record in &records {
        let fams: Vec<String> = record.families.iter().map(|f| f.to_string()).collect();
        let verdict = homogeneity(&record.pair)?;
        if verdict.homogeneous {
            homogeneous += 1;
        }
        println!(
            "{:<14} dim {:>3}  families {}  {}",
            record.pair.to_string(),
            record.dimension,
            fams.join("; "),
            match (&verdict.model, &verdict.aut) {
                (Some(model), _) => model.clone(),
                (None, Some(aut)) => format!("Aut0 = {}", aut.description),
                (None, None) => String::new(),
            }
        );
    }
    println!(
        "\n{homogeneous} homogeneous, {} two-orbit varieties",
        records.len() - homogeneous
    );
    Ok(())
}
