//! Castelnuovo–Mumford regularity of symbolic powers of cover ideals.
//!
//! The engine in [`regularity`] computes `reg(J(G)^(t))` from the homology of
//! cover complexes of `t`-admissible subhypergraphs. [`oracle`] recomputes the
//! same numbers from graded Betti numbers over the lcm lattice, independently.

pub mod error;
pub mod families;
pub mod field;
pub mod hypergraph;
pub mod ideal;
pub mod oracle;
pub mod polyhedron;
pub mod reduction;
pub mod regularity;
pub mod simplicial;

mod linalg;

pub use error::{Error, Result};
pub use field::Field;
pub use hypergraph::{CycleStructure, Hypergraph, Vertex};
pub use ideal::{ExponentVector, MonomialIdeal};
pub use simplicial::{HomologyProfile, SimplicialComplex};

/// Iterates over the indices of the set bits of `mask`, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
