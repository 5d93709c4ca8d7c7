//! Exact-arithmetic nonsymmetric Jack superpolynomials on hook tableaux.
//!
//! The crate works with polynomials in `N` commuting variables `x_i` and
//! `N` anti-commuting variables `θ_i`, with coefficients in the field
//! `Q(κ)` of rational functions in one formal parameter.  It constructs
//! the orthogonal tableau basis of the anti-commuting part, the
//! simultaneous eigenfunctions of the Cherednik–Dunkl operators, the
//! supersymmetric and antisymmetric combinations living in orbit modules,
//! and the closed-form norms, Hilbert series and Calogero–Sutherland
//! spectra attached to them.  All computation is exact: every reported
//! identity is a structural equality of canonical forms.
//!
//! Crate layout mirrors the algebra:
//!
//! - [`kappa`]: the coefficient field `Q(κ)`;
//! - [`fermion`]: the anti-commuting variable algebra and its `S_N` action;
//! - [`tableaux`]: hook labels, content vectors, the orthogonal `T` basis;
//! - [`superpoly`]: full superpolynomials and the Dunkl-type operators;
//! - [`jack`]: the Yang–Baxter-graph construction of eigenfunctions;
//! - [`norms`]: the bilinear form oracle and every closed-form norm;
//! - [`supersym`]: orbit modules, symmetrization, antisymmetrization;
//! - [`series`]: Gaussian binomials and Poincaré–Hilbert series;
//! - [`spectra`]: Calogero–Sutherland eigenvalues on the circle;
//! - [`suite`]: the self-test battery run by `jack selftest` and CI.
//!
//! With the default `parallel` feature, independent node builds and orbit
//! assemblies are distributed with rayon; disabling the feature yields a
//! bit-identical sequential build.

pub mod batch;
pub mod error;
pub mod fermion;
pub mod jack;
pub mod json;
pub mod kappa;
pub mod norms;
pub mod perm;
pub mod series;
pub mod spectra;
pub mod superpoly;
pub mod supersym;
pub mod suite;
pub mod tableaux;

pub use error::{Error, Result};
pub use fermion::{FermionPoly, Subset};
pub use jack::{JackCache, SpectralVector};
pub use kappa::{KField, RatPoly};
pub use perm::Perm;
pub use superpoly::{Composition, SuperPoly};
pub use tableaux::{Family, HookLabel};
