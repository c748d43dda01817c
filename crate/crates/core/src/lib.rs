//! Exact generalized minors `Δ(k; i)` on the double Bruhat cells `G^{u,e}` of
//! `Sp(2r, C)`, for words `i` that are left factors of `(1, 2, …, r)^r`.
//!
//! Three independent routes compute the same Laurent polynomial:
//! [`closed_form::minor_closed`] (tableau sum), [`paths::minor_by_paths`]
//! (weighted lattice paths) and [`minors_oracle::minor_l_oracle`] (matrix
//! coefficients in wedge powers of the vector representation).

pub mod cli;
pub mod closed_form;
pub mod cluster;
pub mod factorization;
pub mod laurent;
pub mod minors_oracle;
pub mod paths;
pub mod rep;
pub mod weyl_word;

pub use closed_form::{minor_closed, Tableau};
pub use cluster::ExchangeMatrix;
pub use laurent::{LaurentPoly, Monomial, VarIndex};
pub use minors_oracle::{frozen_minor, minor_g, minor_l_dp, minor_l_oracle, MinorResult, TorusExponents};
pub use paths::{minor_by_paths, Path, PathVertex};
pub use rep::{RepOperator, WedgeVector};
pub use weyl_word::{CWord, JIndex};
