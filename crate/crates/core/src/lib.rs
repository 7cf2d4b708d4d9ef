//! Exact spectral computations on small bipartite tricyclic graphs: family
//! constructors, characteristic polynomials, the b-coefficient quasi-order,
//! certified energies, enumeration, and a claim-checking harness.

pub mod canon;
pub mod charpoly;
pub mod energy;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod poly;
pub mod quadrature;
pub mod quasiorder;
pub mod sturm;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CycleSet, Graph};
