//! Supercharacters of the unipotent upper-triangular groups `U_n(F_q)`
//! indexed by set partitions: branching rules between `U_n` and `U_{n-1}`,
//! the weighted Bratteli diagram they generate, shell tableaux counting its
//! paths, and a brute-force group oracle over small prime fields.

pub mod branching;
pub mod bratteli;
pub mod coeff;
pub mod error;
pub mod exec;
pub mod setpartition;
pub mod oracle;
pub mod supercharacter;
pub mod tableaux;

pub use coeff::{CharCombination, Laurent, QMonomial, QPolynomial};
pub use error::{Error, Result};
pub use exec::Exec;
pub use setpartition::{parse_partition, Arc, SetPartition};
