//! Exact Dehn-twist calculus for the genus-2 mapping class group, positive
//! factorizations and their moves, and geography certificates for genus-2
//! Lefschetz fibrations.

pub mod analysis;
pub mod artifact;
pub mod factorization;
pub mod freegroup;
pub mod mcg;
