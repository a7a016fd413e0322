//! Bier spheres of simple games.
//!
//! A simple game on the ground set `[n] = {1, …, n}` is the same data as a
//! simplicial complex `K ⊆ 2^[n]`: the faces of `K` are the losing coalitions.
//! This crate builds the Bier sphere `Bier(K)` (the deleted join of `K` with
//! its Alexander dual), decides whether the game is weighted or roughly
//! weighted by exact rational linear programming over wall-crossing inequality
//! systems, and constructs explicit convex polytopes whose boundary complexes
//! realize the Bier spheres of non-threshold games.
//!
//! All geometric and feasibility decisions are made in exact rational
//! arithmetic; floating point appears only as a search heuristic whose
//! candidate solutions are rationalized and re-verified exactly.

pub mod bier;
mod canon;
pub mod classify;
pub mod complex;
pub mod error;
pub mod geom;
pub mod io;
pub mod linfeas;
pub mod rational;
pub mod realize;
pub mod survey;

pub use bier::{BierFacet, BierSphere, BierVertex, OrientedFacets, Ridge, RidgeKind};
pub use classify::{GameClass, KSubmodularFunction, Mode, WeightCertificate};
pub use complex::{ComplexReport, Mask, SimplicialComplex};
pub use error::Error;
pub use geom::{FaceLattice, FanLocation, FanRays, PointConfiguration, PointLabel};
pub use linfeas::{FeasibilityResult, LinearSystem, Rel};
pub use rational::Rational;
pub use realize::{RealizeOptions, RealizeOutcome, ThresholdSeed, VariationProblem, VariationSystem};
pub use survey::{SurveyOptions, SurveyReport};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
