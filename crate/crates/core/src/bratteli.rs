//! Clebsch–Gordan bookkeeping for three-fold tensor products: Bratteli
//! diagrams, the coupling sets `J` and `M`, and the centralizer dimension.

use serde::Serialize;

use crate::exact::{serde_rational, Rational};
use crate::su2rep::Spin;

/// `[2ja] ⊗ [2jb] = ⊕ [2j]` for `j = |ja − jb|, ..., ja + jb`, ascending.
pub fn tensor_decompose(ja: Spin, jb: Spin) -> Vec<Spin> {
    let (a, b) = (ja.twice(), jb.twice());
    let lo = a.abs_diff(b);
    (lo..=a + b).step_by(2).map(Spin::from_twice).collect()
}

/// Three-row Bratteli diagram for `[2j1] ⊂ [2j1]⊗[2j2] ⊂ [2j1]⊗[2j2]⊗[2j3]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BratteliData {
    pub top: Spin,
    pub middle: Vec<Spin>,
    /// Bottom-row spins (ascending) with multiplicities `d_ℓ`.
    pub bottom: Vec<(Spin, usize)>,
    /// `(middle index, bottom index)` pairs.
    pub edges: Vec<(usize, usize)>,
}

impl BratteliData {
    pub fn multiplicity(&self, l: Spin) -> usize {
        self.bottom.iter().find(|(s, _)| *s == l).map_or(0, |(_, d)| *d)
    }

    /// `Σ d_ℓ²`.
    pub fn centralizer_dim(&self) -> usize {
        self.bottom.iter().map(|(_, d)| d * d).sum()
    }

    /// Values `ℓ(ℓ+1) − k(k+1)` over all second-to-third-row edges,
    /// deduplicated and sorted.
    pub fn edge_values(&self) -> Vec<Rational> {
        let mut vals: Vec<Rational> =
            self.edges.iter().map(|&(k, l)| self.bottom[l].0.casimir() - self.middle[k].casimir()).collect();
        vals.sort();
        vals.dedup();
        vals
    }
}

pub fn build_bratteli(j1: Spin, j2: Spin, j3: Spin) -> BratteliData {
    let middle = tensor_decompose(j1, j2);
    let mut bottom_spins: Vec<Spin> = middle.iter().flat_map(|&k| tensor_decompose(k, j3)).collect();
    bottom_spins.sort();
    bottom_spins.dedup();
    let mut edges = Vec::new();
    for (ki, &k) in middle.iter().enumerate() {
        for l in tensor_decompose(k, j3) {
            let li = bottom_spins.binary_search(&l).expect("bottom row holds every reachable spin");
            edges.push((ki, li));
        }
    }
    let bottom =
        bottom_spins.iter().enumerate().map(|(li, &l)| (l, edges.iter().filter(|e| e.1 == li).count())).collect();
    BratteliData { top: j1, middle, bottom, edges }
}

/// Coupling sets of a spin triple. `M` sets are deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CouplingSets {
    pub j12: Vec<Spin>,
    pub j13: Vec<Spin>,
    pub j23: Vec<Spin>,
    pub j123: Vec<Spin>,
    #[serde(with = "serde_rational::vec")]
    pub m123: Vec<Rational>,
    #[serde(with = "serde_rational::vec")]
    pub m231: Vec<Rational>,
    #[serde(with = "serde_rational::vec")]
    pub m132: Vec<Rational>,
}

pub fn coupling_sets(j1: Spin, j2: Spin, j3: Spin) -> CouplingSets {
    let b123 = build_bratteli(j1, j2, j3);
    CouplingSets {
        j12: tensor_decompose(j1, j2),
        j13: tensor_decompose(j1, j3),
        j23: tensor_decompose(j2, j3),
        j123: b123.bottom.iter().map(|(s, _)| *s).collect(),
        m123: b123.edge_values(),
        m231: build_bratteli(j2, j3, j1).edge_values(),
        m132: build_bratteli(j1, j3, j2).edge_values(),
    }
}

/// Dimension of `End_sl2([2j1]⊗[2j2]⊗[2j3])`, i.e. `Σ d_j²`.
pub fn centralizer_dim(j1: Spin, j2: Spin, j3: Spin) -> usize {
    build_bratteli(j1, j2, j3).centralizer_dim()
}
