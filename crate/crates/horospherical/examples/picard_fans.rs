//! The four complete colored fans of a rank-one pair and their Picard
//! numbers: exactly one embedding reaches ρ = 1, always the two-color one.
//!
//! Run with `cargo run --example picard_fans`.

use horospherical::{
    color_images, embeddings, picard_number, HoroPair, Result, Series, SimpleType,
};

fn main() -> Result<()> {
    let stype = SimpleType::new(Series::C, 3)?;
    let pair = HoroPair::new(stype, 1, 2)?;

    let (alpha_image, beta_image) = color_images(&pair)?;
    println!("pair {pair}");
    println!("lattice generator: {}", pair.lattice_generator());
    println!("color images in N = Z: alpha -> {alpha_image:+}, beta -> {beta_image:+}\n");

    for fan in embeddings(&pair) {
        let pd = picard_number(&fan);
        println!(
            "fan with colors {:<13} rays {:?}  r = {}  rho = {}",
            fan.to_string(),
            horospherical::EmbeddingFan::RAYS,
            pd.r,
            pd.rho
        );
    }
    println!("\nrho = r + #(S \\ I) - #colors = 3 - #colors; only the two-color fan is smooth with rho = 1");
    Ok(())
}
