//! Hyperspectral image super-resolution toolkit.
//!
//! The pipeline restores the spatial resolution of an `L x H x W` reflectance
//! cube in two stages. A supervised coarse stage runs a small convolutional
//! network band by band: each band is grouped with its four spectral
//! neighbours, the groups are fused spatially and spectrally, and the result
//! is upsampled with sub-pixel convolutions. An unsupervised fine stage then
//! refines the whole cube at once with a back-projection step whose residual
//! is damped by the mean spectral angle between the two coarse estimates.
//!
//! Supporting machinery: a portable cube file format with patch extraction
//! and augmentation ([`cube`]), separable resampling kernels and the LR/HR
//! degradation pipeline ([`resample`]), a minimal reverse-mode autodiff
//! engine with ADAM ([`autodiff`]), PSNR/SSIM/SAM evaluation ([`metrics`]),
//! and a synthetic scene generator for desk-scale experiments ([`synth`]).

pub mod autodiff;
pub mod backprojection;
pub mod bands;
pub mod coarse;
pub mod cube;
pub mod error;
pub mod metrics;
pub mod resample;
pub mod rng;
pub mod synth;

pub use cube::HsiCube;
pub use error::{Error, Result};
