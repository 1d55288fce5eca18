//! Combinatorics of quantum Bruhat graphs, quantum alcove paths and quantum
//! Lakshmibai–Seshadri (QLS) paths for small finite root systems.
//!
//! The crate computes two families of graded characters by unrelated
//! enumerations and provides the weight/degree preserving bijection
//! `Ξ_w : QB(w; t(w₀λ)) → QLS(λ)` between the underlying path sets:
//!
//! - [`cartan`]: root data, the Weyl group, parabolic cosets, reflection orders.
//! - [`qbg`]: (parabolic) quantum Bruhat graphs, shortest paths, weights,
//!   label-increasing paths and tilted Bruhat minima.
//! - [`affine`]: extended affine Weyl group elements and the inversion table of
//!   the translation `t(w₀λ)`.
//! - [`qbpaths`]: quantum alcove paths and the character `C_w`.
//! - [`qls`]: QLS paths, degree statistics, `gch^w`, `gch_w` and the Lusztig
//!   involution.
//! - [`bijection`]: `Ξ_w` and its inverse.
//! - [`charpoly`]: graded characters `Σ c q^k e^μ`.

pub mod affine;
pub mod bijection;
pub mod cartan;
pub mod charpoly;
pub mod error;
pub mod qbg;
pub mod qbpaths;
pub mod qls;
pub mod rational;

pub use error::{Error, Result};

/// Resource bounds for the exhaustive enumerations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest rank accepted by [`cartan::CartanDatum::build`]; `G2` is always accepted.
    pub max_rank: usize,
    /// Largest Weyl group order that will be enumerated.
    pub max_weyl_order: usize,
    /// Largest `L = ℓ(t(w₀λ))` accepted for path enumeration.
    pub max_alcove_length: usize,
    /// Largest `L` for which the full power set `B(w; t(w₀λ))` is streamed.
    pub max_power_set_length: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_rank: 4,
            max_weyl_order: 1152,
            max_alcove_length: 64,
            max_power_set_length: 20,
        }
    }
}
