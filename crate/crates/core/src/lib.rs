//! Exact-arithmetic toolkit for elliptic curve descent via 2-isogeny,
//! division-polynomial torsion analysis over small number fields, and the
//! modular curves X₁(m,n) of elliptic type.
//!
//! Everything is computed over ℚ or over explicit number fields ℚ[x]/(g) of
//! degree at most 4, with `num-bigint`/`num-rational` as the arithmetic
//! substrate. No floating point is used anywhere.
//!
//! Module map:
//! - [`arith`] — square classes, Legendre symbols, primes, totients.
//! - [`poly`] — dense univariate polynomials over a coefficient field.
//! - [`modp`] — polynomial factorization over 𝔽_p and Hensel lifting.
//! - [`factor`] — bounded extraction of rational irreducible factors.
//! - [`numfield`] — number fields ℚ[x]/(g), square roots, root finding.
//! - [`ecurve`] — Weierstrass curves, group law, division polynomials, torsion.
//! - [`descent`] — homogeneous spaces, local solvability, Selmer groups,
//!   rank-zero certificates.
//! - [`modcurves`] — the catalog of elliptic X₁(m,n), universal families,
//!   exceptional-pair searches and evidence reports.

pub mod arith;
pub mod descent;
pub mod ecurve;
pub mod factor;
pub mod field;
pub mod modcurves;
pub mod modp;
pub mod numfield;
pub mod poly;
pub mod report;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for polynomials with rational coefficients.
pub type RatPoly = poly::Poly<BigRational>;
