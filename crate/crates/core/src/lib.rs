//! Simulation and inversion of the 2-D stochastic Helmholtz source problem
//! from multi-frequency phaseless data.
//!
//! The pipeline has three stages:
//! 1. [`forward`] — Monte Carlo simulation of the radiated field and its
//!    reference-augmented variants, producing phaseless statistics.
//! 2. [`phase_retrieval`] — recovery of the mean and variance of the field on
//!    the measurement circle from those statistics via reference point
//!    sources.
//! 3. [`bayes`] — reconstruction of the source mean and variance from the
//!    retrieval-layer data by pCN sampling over discretized Fredholm
//!    operators assembled in [`fredholm`].

pub mod bayes;
pub mod config;
pub mod driver;
pub mod io;
pub mod verify;
pub mod closed_loop;
pub mod forward;
pub mod fredholm;
pub mod phase_retrieval;
pub mod geometry;
pub mod grid;
pub mod rng;
pub mod sources;
pub mod specfun;
