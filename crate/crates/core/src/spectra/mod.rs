//! Root isolation, eigensolvers, spectra and spectral measures.

pub mod eigen;
pub mod measure;
pub mod roots;
pub mod spectrum;

pub use eigen::eig_symmetric;
pub use measure::{spectral_measure, PointMass, SpectralMeasure};
pub use roots::{descartes_bound, positive_root_count, real_roots_unit_interval, zhukovsky, RealRoot};
pub use spectrum::{
    discrete_spectrum, jost_roots, sun_spectrum, two_sided_spectrum, wronskian_roots, Band, Eigenvalue,
    JostRoots, Multiplicity, Provenance, Spectrum,
};
