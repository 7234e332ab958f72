//! Exact root-system arithmetic: positive roots, reflections, parabolic
//! longest words, coroots and representation dimensions.
//!
//! Run with `cargo run --example root_arithmetic`.

use horospherical::{Result, RootSystem, RootVector, Series, SimpleType, Weight};

fn main() -> Result<()> {
    for (series, rank) in [(Series::A, 2), (Series::B, 3), (Series::G, 2)] {
        let stype = SimpleType::new(series, rank)?;
        let rs = RootSystem::new(stype)?;
        println!("{stype}: {} positive roots", rs.positive_roots().len());
        for root in rs.positive_roots() {
            println!("  {root}");
        }
    }

    // Simple reflections act on the weight lattice through the Cartan matrix.
    let a2 = RootSystem::new_checked(Series::A, 2)?;
    let omega1 = Weight::fundamental(2, 1);
    println!("\nA2: s1(w1) = {}", a2.reflect(&omega1, 1)?);

    // The longest word of a parabolic subgroup, found by greedy descent.
    let b3 = RootSystem::new_checked(Series::B, 3)?;
    let word = b3.longest_word(&[1, 2])?;
    println!(
        "B3, I = {{a1, a2}}: longest word has {} letters: {:?}",
        word.len(),
        word.letters
    );

    // In type B_m the longest word of S minus the short end sends the short
    // coroot to 2(a1v + ... + a_{m-1}v) + a_mv.
    let m = 5;
    let bm = RootSystem::new_checked(Series::B, m)?;
    let subset: Vec<usize> = (1..m).collect();
    let w0 = bm.longest_word(&subset)?;
    let beta = RootVector::simple(m, m);
    let image = bm.apply_word_to_root(&w0, &beta)?;
    println!(
        "B{m}: w0^beta({beta}) = {image}, coroot coordinates {:?}",
        bm.coroot(&image)?
    );

    // Weyl dimension formula, exact rational arithmetic underneath.
    println!();
    for (series, rank, vertex) in [
        (Series::G, 2, 1),
        (Series::B, 3, 3),
        (Series::F, 4, 4),
        (Series::C, 4, 1),
        (Series::E, 8, 8),
    ] {
        let rs = RootSystem::new_checked(series, rank)?;
        let w = Weight::fundamental(rank, vertex);
        println!("dim V(w{vertex}) for {} = {}", rs.stype(), rs.weyl_dim(&w)?);
    }
    Ok(())
}
