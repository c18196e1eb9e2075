#![allow(dead_code)]

use std::collections::BTreeMap;

use su2_centralizer::Spin;

/// Number of weight vectors of each weight (as twice the weight) in
/// `[2j1] ⊗ [2j2] ⊗ [2j3]`, by direct enumeration of the product basis.
pub fn weight_counts(spins: [Spin; 3]) -> BTreeMap<i64, usize> {
    let weights = |s: Spin| -> Vec<i64> {
        let t = s.twice() as i64;
        (0..=t).map(|k| t - 2 * k).collect()
    };
    let mut counts = BTreeMap::new();
    for a in weights(spins[0]) {
        for b in weights(spins[1]) {
            for c in weights(spins[2]) {
                *counts.entry(a + b + c).or_insert(0) += 1;
            }
        }
    }
    counts
}

/// Multiplicity of each irreducible `[2ℓ]` in the triple product, read off
/// the weight multiplicities: `d_ℓ = n(ℓ) − n(ℓ + 1)`.
pub fn cg_multiplicities(spins: [Spin; 3]) -> BTreeMap<u32, usize> {
    let n = weight_counts(spins);
    let count = |w: i64| n.get(&w).copied().unwrap_or(0);
    n.keys()
        .filter(|&&w| w >= 0)
        .filter_map(|&w| {
            let d = count(w) - count(w + 2);
            (d > 0).then_some((w as u32, d))
        })
        .collect()
}

/// `Σ d_ℓ²` from the oracle multiplicities.
pub fn oracle_dim(spins: [Spin; 3]) -> usize {
    cg_multiplicities(spins).values().map(|d| d * d).sum()
}

pub fn s(twice: u32) -> Spin {
    Spin::from_twice(twice)
}

/// Every ordered triple of twice-spins in `0..=max_twice`.
pub fn triples(max_twice: u32) -> Vec<[Spin; 3]> {
    let mut out = Vec::new();
    for a in 0..=max_twice {
        for b in 0..=max_twice {
            for c in 0..=max_twice {
                out.push([s(a), s(b), s(c)]);
            }
        }
    }
    out
}

/// Unordered triples (as nondecreasing twice-spins) in `0..=max_twice`.
pub fn unordered_triples(max_twice: u32) -> Vec<[Spin; 3]> {
    triples(max_twice).into_iter().filter(|t| t[0] <= t[1] && t[1] <= t[2]).collect()
}
