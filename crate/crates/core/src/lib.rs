//! Skew spectra and skew energy of oriented graphs.
//!
//! An orientation of a simple graph turns each edge into an arc; the skew-adjacency
//! matrix `S` has `+1` where an arc points and `-1` opposite, so it is real
//! antisymmetric and its spectrum is purely imaginary. The skew energy is the sum
//! of the eigenvalue magnitudes. This crate computes the even coefficients of
//! `det(xI - S)` through three independent engines (subgraph expansion, the
//! unicyclic matching formula, and an exact division-free determinant route),
//! evaluates the energy both from the spectrum and from a Coulson-type integral,
//! and exhaustively enumerates oriented unicyclic graphs at desk scale to locate
//! the extremal orientations.
//!
//! The combinatorial lane works in exact 64-bit integers with checked arithmetic;
//! the numerical lane is generic over the floating-point scalar (see [`num::Float`]),
//! with [`Real`] as the concrete default.

pub mod canon;
pub mod charpoly;
pub mod energy;
pub mod extremal;
pub mod graph;
pub mod linalg;
pub mod num;
pub mod orient;
pub mod quad;

/// Exact integer scalar for matching counts and polynomial coefficients.
///
/// Desk-scale inputs (n <= 16) keep every intermediate far below `i64::MAX`;
/// all arithmetic on these is checked and fails loudly on overflow.
pub type Coeff = i64;

/// Default floating-point scalar for spectra, energies and quadrature.
pub type Real = f64;

/// Spectrum magnitudes at the default scalar.
pub type Spectrum = energy::SpectrumMagnitudes<Real>;

/// Two-route energy report at the default scalar.
pub type Report = energy::EnergyReport<Real>;

pub use charpoly::{
    coeffs_combinatorial, coeffs_exact, coeffs_unicyclic, family_coeffs, verify_pendant_recurrence,
    FamilyPolynomial, SkewCoeffs,
};
pub use energy::{
    energy_coulson, energy_report, energy_spectral, quartic_energy, quasi_compare, spectrum,
    EnergyReport, OrderRelation, SpectrumMagnitudes,
};
pub use extremal::{
    enumerate_unicyclic, search_extremal, verify_claims, Claim, Objective, SearchRecord,
    VerificationReport,
};
pub use graph::{
    enumerate_evenly_linear, girth, is_unicyclic, make_family, matching_counts, Edge, FamilyKind,
    Graph, LinearSubgraph, MatchingCounts,
};
pub use orient::{
    cycle_parity, orient_unicyclic, switch, switching_equivalent, unique_cycle, CycleParity,
    OrientationSign, OrientedGraph, SkewMatrix,
};
