//! Exact computation of skein-theoretic link invariants.
//!
//! The crate evaluates the Conway polynomial, the HOMFLY polynomial and the
//! two-variable series `P(L)(h, u)` on combinatorial diagrams of oriented
//! links, resolves singular diagrams through the three-term rule
//! `X. -> X+ - X- - h X0`, extracts the higher invariants `nabla_{l,m}`,
//! and checks the structural identities that tie all of these together
//! (skein relations, the Kronecker grid on the `G` family, the vanishing
//! eight-term combination, chord-diagram quotient ranks).
//!
//! All arithmetic is exact: big integers, big rationals, and power series
//! truncated at an explicit order in `u`.

pub mod algebra;
pub mod chord;
pub mod diagram;
pub mod higher;
pub mod series;
pub mod skein;
pub mod verify;
