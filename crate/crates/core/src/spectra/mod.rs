//! Exact characteristic polynomials, floating eigenvalues and main angles.

mod angles;
mod charpoly;
mod eigen;
mod poly;

pub use angles::{
    complement_candidate_quartic, complement_char_poly_via_angles, has_duplicate_open_neighborhood,
    main_angles, ComplementAngleParams, MainAngle, MainAngles,
};
pub use charpoly::{
    are_cospectral, char_poly, closed_walk_count, closed_walks_per_vertex, friendship_char_poly,
};
pub use eigen::{
    count_eigs_below, eigen_decomposition, eigenvalues, friendship_spectrum, interlaces,
    interlaces_with, jacobi_eigen, second_largest, Spectrum, TAU_EIG, TAU_FIXTURE, TAU_GROUP,
};
pub use poly::{CharPoly, RealPoly};
