//! Reduction of the correspondence to the unipotent case.

pub mod centralizer;
pub mod full;
pub mod labels;
pub mod orbit;
pub mod transport;

pub use centralizer::{
    centralizer_decomposition, classify_orbit, match_semisimple, CentralizerDecomposition, CentralizerFactor,
    FactorKind,
};
pub use full::{omega_full, series_members, FullContext, FullDecomposition, Pairing};
pub use labels::{xi, xi_inverse, CentralizerLabel, FactorLabel, LusztigCoordinates};
pub use orbit::{orbit_closure, Eigenvalue, EigenvalueOrbit, SemisimpleDescriptor};
pub use transport::{
    parse_gl_part, transport_series, transport_support, weyl_of_cuspidal_pair, CuspidalDatum, CuspidalPair,
    CuspidalSupport, GlCuspidal, WeylDescriptor,
};
