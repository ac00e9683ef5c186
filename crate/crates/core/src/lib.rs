//! Statistical analysis of RIS-assisted massive MIMO aggregated channels.
//!
//! A base station with `M` antennas serves single-antenna users both through a
//! direct link and through a reconfigurable intelligent surface (RIS) with `N`
//! passive phase-shift elements. The aggregated channel of user `k` is
//! `z_k = u_k + H Φ g_k`, and its statistics under spatially correlated
//! Rayleigh fading determine three fundamental system properties:
//!
//! * **favorable propagation** — how close distinct users' channels are to
//!   orthogonal, measured by `Var{z_k^H z_l} / (E{‖z_k‖²} E{‖z_l‖²})`;
//! * **channel hardening** — how tightly `‖z_k‖²` concentrates around its
//!   mean, measured by `Var{‖z_k‖²} / (E{‖z_k‖²})²`;
//! * **rank deficiency** — the eigenvalue profile of the aggregated channel
//!   covariance `E{z_k z_k^H}`.
//!
//! The crate provides closed-form evaluations of all three for arbitrary
//! finite `M` and `N` ([`metrics`]), seeded Monte Carlo estimators that serve
//! as independent oracles ([`montecarlo`]), the channel sampler itself
//! ([`channel`]), the covariance model constructors ([`covariance`]), and
//! scenario construction plus sweep drivers ([`experiments`]).
//!
//! With the `parallel` feature (default) the Monte Carlo batches run on a
//! rayon pool; results are bit-identical to the sequential fallback because
//! every batch owns a counter-derived RNG stream and partial sums are merged
//! in fixed batch order.

pub mod channel;
pub mod covariance;
mod error;
pub mod experiments;
pub mod metrics;
pub mod montecarlo;
pub mod rng;

pub use error::{Error, Result};

/// Dense complex matrix used throughout the crate.
pub type CMatrix = nalgebra::DMatrix<num_complex::Complex<f64>>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<num_complex::Complex<f64>>;
/// Complex scalar.
pub type C64 = num_complex::Complex<f64>;
