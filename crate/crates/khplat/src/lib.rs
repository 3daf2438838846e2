//! Reduced Khovanov homology of 2-bridge links.
//!
//! A link is given as the plat closure of a 4-strand braid. The braid moves a
//! figure-eight curve around the marked pair of punctures, the curve is read
//! off as a twisted complex of projective modules over the affine A_{n-1}
//! path algebra, and homology is the cohomology of its hom complex into the
//! simple module of the marked pair. An independent Kauffman bracket state sum
//! checks the Euler characteristic.

pub mod algebra;
pub mod checks;
pub mod cli;
pub mod compiler;
pub mod complexes;
pub mod corpus;
pub mod curve;
pub mod invariants;
pub mod laurent;
pub mod oracle;
pub mod plat;
