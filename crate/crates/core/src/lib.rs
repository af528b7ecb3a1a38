//! Exact rewriting engine for finitely presented Hopf algebras over group
//! algebras of free abelian groups, built around the liftings of the
//! Jordan plane and the Jordanian enveloping algebra of `sl(2)`.

pub mod cli;
pub mod families;
pub mod groupdata;
pub mod hopfcheck;
pub mod linalg;
pub mod ncpoly;
pub mod rewrite;
pub mod scalar;
