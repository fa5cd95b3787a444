//! Exact braid-group computation and transverse-link invariants.
//!
//! - [`braid`]: braid words, band generators, reductions and Markov moves
//! - [`free_group`]: the word problem through the Artin action
//! - [`invariants`]: self-linking, closure statistics, HOMFLY-PT
//! - [`bounds`]: Bennequin, Morton–Franks–Williams and geography checks
//! - [`quasipositivity`]: quasi-positive and band factorization search
//! - [`markov`]: transverse Markov-move path search
//! - [`contact`]: self-linking from foliations, torus multicurves and
//!   dividing-set torsion bookkeeping

pub mod bounds;
pub mod braid;
pub mod contact;
pub mod error;
pub mod free_group;
pub mod invariants;
pub mod markov;
pub mod poly;
pub mod quasipositivity;

pub use braid::{BandGenerator, BraidWord, Permutation};
pub use error::{Error, Result};
pub use free_group::braid_words_equal;
pub use invariants::{closure_stats, homfly, self_linking, ClosureStats, HomflyPolynomial};
pub use poly::LaurentPoly;
