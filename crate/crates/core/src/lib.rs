//! Large monochromatic double and triple stars in edge-coloured complete graphs.
//!
//! * [`colouring`]: edge colourings of `K_n`, the text format, per-colour views.
//! * [`structure`]: locality, monochromatic components, diameters.
//! * [`bounds`]: registry of known lower bounds, as exact rationals.
//! * [`stars`]: exact maximum double and triple stars.
//! * [`bipartite`]: the bipartite double-star lemmas and the cross graph.
//! * [`prover`]: certified triple stars meeting `n/(r-1)` and `rn/(r²-r+1)`.
//! * [`generators`]: affine/projective plane colourings, random and constant ones.
//! * [`oracle`]: brute-force finders and exhaustive enumeration.
//! * [`explorer`]: simulated annealing over colourings.
//! * [`analysis`]: the report behind `monostar analyze`.

pub mod analysis;
pub mod bipartite;
pub mod bitset;
pub mod bounds;
pub mod colouring;
pub mod explorer;
pub mod generators;
pub mod oracle;
pub mod prover;
pub mod rational;
pub mod stars;
pub mod structure;

pub use colouring::{parse_colouring, Colour, ColourClassView, EdgeColouring};
pub use prover::{prove_global, prove_local, verify_certificate, TripleStarCertificate};
pub use rational::Rational;
