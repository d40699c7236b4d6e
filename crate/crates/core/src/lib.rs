//! Exact verification kernel for elementary Chevalley groups over
//! commutative rings, Steinberg symbols, truncated polynomial algebras,
//! central extensions and derivation spaces of finitely presented algebras.

pub mod chevalley;
pub mod cli;
pub mod derivations;
pub mod extensions;
pub mod kernel;
pub mod rings;
pub mod rootsys;
pub mod steinberg;
