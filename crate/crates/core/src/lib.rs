//! Degree-sequence upper bounds on the spectral radius of connected graphs,
//! together with the machinery to check them: an independent eigenvalue
//! oracle, exhaustive enumeration of small graphs, exact classification of the
//! tight cases, and a replay of the diagonal-scaling argument behind the bound.

pub mod bounds;
pub mod equality;
pub mod graph;
pub mod harness;
pub mod replay;
pub mod scalar;
pub mod spectral;

pub use bounds::{BoundReport, BoundsError, PhiMinimum, PhiSequence};
pub use equality::{CertificateKind, EqualityCertificate, EqualityError};
pub use graph::{DegreeSequence, Graph, GraphError};
pub use replay::{ReplayError, ScalingCertificate};
pub use scalar::Scalar;
pub use spectral::{Method, SpectralError, SpectralResult};

pub type PhiSequence64 = PhiSequence<f64>;
pub type BoundReport64 = BoundReport<f64>;
pub type SpectralResult64 = SpectralResult<f64>;
pub type ScalingCertificate64 = ScalingCertificate<f64>;

pub type PhiSequence32 = PhiSequence<f32>;
pub type SpectralResult32 = SpectralResult<f32>;
