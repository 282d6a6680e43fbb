//! Exact computations for finite-dimensional Leibniz algebras over ℚ.
//!
//! Algebras, representations and cochains are stored as dense tables of
//! structure constants. Every identity is verified on basis tuples with exact
//! rational arithmetic, so a check either holds or produces a concrete
//! counterexample.
//!
//! Module map:
//! - [`linalg`]: rationals, vectors, matrices, row reduction.
//! - [`leibniz`]: Leibniz algebras, representations, Nijenhuis operators,
//!   twisted semidirect products.
//! - [`cochain`], [`cohomology`]: Loday–Pirashvili cochains, the coboundary,
//!   cohomology dimensions.
//! - [`twisted_rb`]: twisted relative Rota-Baxter operators, their induced
//!   structures and cohomology.
//! - [`deformation`]: linear and truncated formal deformations, equivalences,
//!   Nijenhuis elements.
//! - [`ns_leibniz`]: NS-Leibniz algebras.
//! - [`generate`]: seeded random instances.
//! - [`format`]: JSON file formats.

pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod format;
pub mod generate;
pub mod leibniz;
pub mod linalg;
pub mod ns_leibniz;
pub mod report;
pub mod twisted_rb;

pub use cochain::{Bicochain, Cochain};
pub use cohomology::{CohomologyConfig, CohomologyReport, Degree0Convention};
pub use error::{Error, Result};
pub use leibniz::{LeibnizAlgebra, LinearMap, Representation};
pub use linalg::{int, ratio, Matrix, Rational, Vector};
pub use ns_leibniz::NsLeibnizAlgebra;
pub use report::{CheckReport, Failure};
pub use twisted_rb::{TrbMorphism, TwistedRbData};

/// All index tuples of `[0, dims[0]) × … × [0, dims[k-1])` in lexicographic
/// order. The empty product yields one empty tuple.
pub fn index_product(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let empty = dims.contains(&0);
    let mut next = (!empty).then(|| vec![0usize; dims.len()]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for pos in (0..dims.len()).rev() {
            succ[pos] += 1;
            if succ[pos] < dims[pos] {
                next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(current)
    })
}

/// All `n`-tuples over `[0, dim)`, lexicographic.
pub fn tuples(n: usize, dim: usize) -> impl Iterator<Item = Vec<usize>> {
    let dims = vec![dim; n];
    index_product(&dims).collect::<Vec<_>>().into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_enumerate_lexicographically() {
        let all: Vec<_> = index_product(&[2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(index_product(&[]).count(), 1);
        assert_eq!(index_product(&[3, 0]).count(), 0);
        assert_eq!(tuples(0, 0).count(), 1);
        assert_eq!(tuples(3, 2).count(), 8);
    }
}
