//! Shared helpers for the integration suites: a Freudenthal
//! weight-multiplicity oracle for representation dimensions, independent of
//! the Weyl product formula, and the hand-expanded family templates the
//! classification must reproduce.

use std::collections::{BTreeMap, BTreeSet};

use horospherical::root_system::{RootSystem, Series, SimpleType, Weight};

/// Smallest positive integer symmetrizer of the Cartan matrix, derived from
/// the matrix itself: d[i]·C[i][j] = d[j]·C[j][i].
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs().max(1)
    };
    // Rational d as num/den, propagated over the (connected) diagram.
    let mut num = vec![0i64; n];
    let mut den = vec![1i64; n];
    num[0] = 1;
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && num[j] == 0 {
                // d_j = d_i * C[i][j] / C[j][i]
                let mut top = num[i] * cartan[i][j];
                let mut bottom = den[i] * cartan[j][i];
                if bottom < 0 {
                    top = -top;
                    bottom = -bottom;
                }
                let g = gcd(top, bottom);
                num[j] = top / g;
                den[j] = bottom / g;
                queue.push(j);
            }
        }
    }
    let lcm = den.iter().fold(1i64, |acc, &d| acc / gcd(acc, d) * d);
    let mut out: Vec<i64> = num.iter().zip(&den).map(|(&p, &q)| p * (lcm / q)).collect();
    let g = out.iter().fold(0i64, |acc, &x| gcd(acc, x));
    for x in &mut out {
        *x /= g;
    }
    assert!(out.iter().all(|&x| x > 0), "symmetrizer failed");
    out
}

/// Dimension of the irreducible module of highest weight λ, summed from
/// Freudenthal's multiplicity recursion over the full weight diagram.
///
/// The diagram is explored top down: every weight below λ is reachable from
/// a higher weight by subtracting one simple root, so breadth-first levels
/// by depth in the root lattice see each multiplicity after all the higher
/// ones it depends on. All arithmetic stays in integers: for ν = λ − Σc_iα_i,
/// the denominator |λ+ρ|² − |ν+ρ|² equals Σ_i c_i·d_i·⟨λ+ν+2ρ, α̌_i⟩.
pub fn freudenthal_dim(rs: &RootSystem, lambda: &Weight) -> u128 {
    assert!(lambda.is_dominant());
    let n = rs.rank();
    let cartan = rs.cartan();
    let d = symmetrizer(cartan);
    // Weight coordinates of a depth vector: λ − C·c.
    let weight_of = |c: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|j| lambda.coords[j] - (0..n).map(|i| cartan[j][i] * c[i]).sum::<i64>())
            .collect()
    };
    // Scaled product (μ, γ) for μ in weight coordinates, γ in root coordinates.
    let dot = |mu: &[i64], gamma: &[i64]| -> i128 {
        (0..n).map(|j| (gamma[j] * d[j] * mu[j]) as i128).sum()
    };
    let roots: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|r| r.coords.clone())
        .collect();

    let mut mult: BTreeMap<Vec<i64>, i128> = BTreeMap::new();
    mult.insert(vec![0; n], 1);
    let mut level: Vec<Vec<i64>> = vec![vec![0; n]];
    let mut total: u128 = 1;

    while !level.is_empty() {
        let mut candidates: BTreeSet<Vec<i64>> = BTreeSet::new();
        for c in &level {
            for i in 0..n {
                let mut down = c.clone();
                down[i] += 1;
                candidates.insert(down);
            }
        }
        let mut next = Vec::new();
        for c in candidates {
            let nu = weight_of(&c);
            // Denominator (λ+ρ, λ+ρ) − (ν+ρ, ν+ρ) = (λ+ν+2ρ, λ−ν).
            let shifted: Vec<i64> = (0..n).map(|j| lambda.coords[j] + nu[j] + 2).collect();
            let denom: i128 = (0..n).map(|i| (c[i] * d[i] * shifted[i]) as i128).sum();
            if denom <= 0 {
                continue;
            }
            // Numerator: 2 Σ_γ Σ_k m(ν+kγ)·(ν+kγ, γ).
            let mut numer: i128 = 0;
            for g in &roots {
                let mut k = 1i64;
                loop {
                    let up: Option<Vec<i64>> = c
                        .iter()
                        .zip(g)
                        .map(|(ci, gi)| {
                            let x = ci - k * gi;
                            (x >= 0).then_some(x)
                        })
                        .collect();
                    let Some(up) = up else { break };
                    if let Some(&m_up) = mult.get(&up) {
                        if m_up > 0 {
                            let mu = weight_of(&up);
                            numer += m_up * dot(&mu, g);
                        }
                    }
                    k += 1;
                }
            }
            if numer == 0 {
                continue;
            }
            let twice = 2 * numer;
            assert_eq!(twice % denom, 0, "non-integral multiplicity");
            let m = twice / denom;
            assert!(m > 0);
            mult.insert(c.clone(), m);
            total += m as u128;
            next.push(c);
        }
        level = next;
    }
    total
}

/// The eight family templates instantiated at ranks ≤ `max_rank`, expanded
/// by hand and reduced to orbit representatives under diagram automorphisms,
/// as (series, rank, lo, hi) keys with their family id sets.
#[allow(dead_code)] // each test target uses its own slice of this module
pub fn expected_classification(
    max_rank: usize,
) -> BTreeMap<(Series, usize, usize, usize), BTreeSet<u8>> {
    let mut out: BTreeMap<(Series, usize, usize, usize), BTreeSet<u8>> = BTreeMap::new();
    let mut add = |series, rank, a: usize, b: usize, id: u8| {
        out.entry((series, rank, a.min(b), a.max(b)))
            .or_default()
            .insert(id);
    };
    for m in 2..=max_rank {
        // Family 1: (A_m, α_1, α_m).
        add(Series::A, m, 1, m, 1);
        // Family 2: (A_m, α_i, α_{i+1}); the diagram flip maps the i-th
        // instance to the (m−i)-th, so representatives keep i ≤ m−i.
        for i in 1..m {
            if i <= m - i {
                add(Series::A, m, i, i + 1, 2);
            }
        }
        // Family 3: (B_m, α_{m−1}, α_m).
        add(Series::B, m, m - 1, m, 3);
        // Family 5: (C_m, α_i, α_{i+1}); the rank-two instance lands on the
        // B2 record because B2 ≅ C2.
        for i in 1..m {
            if m >= 3 {
                add(Series::C, m, i, i + 1, 5);
            } else {
                add(Series::B, 2, 1, 2, 5);
            }
        }
        // Family 6: (D_m, α_{m−1}, α_m).
        if m >= 4 {
            add(Series::D, m, m - 1, m, 6);
        }
    }
    // Family 4: (B_3, α_1, α_3).
    if max_rank >= 3 {
        add(Series::B, 3, 1, 3, 4);
    }
    // Family 7: (F_4, α_2, α_3).
    if max_rank >= 4 {
        add(Series::F, 4, 2, 3, 7);
    }
    // Family 8: (G_2, α_2, α_1).
    if max_rank >= 2 {
        add(Series::G, 2, 1, 2, 8);
    }
    out
}

pub fn root_system(series: Series, rank: usize) -> RootSystem {
    RootSystem::new(SimpleType::new(series, rank).unwrap()).unwrap()
}
