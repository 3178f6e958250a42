//! Exact computations on monomial ideals through their Newton polyhedra:
//! facet systems, multiplier ideals, log canonical thresholds, and
//! integral closures, with an independent linear-programming oracle for
//! cross-checking. All arithmetic is arbitrary-precision rational.
//!
//! ```
//! use newtide::{lct, multiplier_ideal, parse_ideal, parse_rat};
//!
//! let ideal = parse_ideal("x^8, y^6", None).unwrap();
//! let j = multiplier_ideal(&ideal, &parse_rat("1").unwrap()).unwrap();
//! assert_eq!(j.to_string(), "x^6, x^5*y, x^4*y^2, x^2*y^3, x*y^4, y^5");
//! assert_eq!(newtide::rat_to_string(&lct(&ideal).unwrap().threshold.finite().unwrap()), "7/24");
//! ```

pub mod error;
pub mod exponent;
pub mod ideal;
pub mod multiplier;
pub mod oracle;
pub mod parse;
pub mod polyhedron;
pub mod rat;
pub mod threshold;

pub use error::{Error, Result};
pub use exponent::{lattice_box, Exponent, RatVec};
pub use ideal::MonomialIdeal;
pub use multiplier::{floor_ideal, integral_closure, multiplier_box, multiplier_ideal};
pub use oracle::{brute_multiplier, lp_classify, verify_ideal, LpVerdict, VerifyReport};
pub use parse::{monomial_to_string, parse_ideal};
pub use polyhedron::{Facet, NewtonPolyhedron, PointClass};
pub use rat::{parse_rat, rat_from_u64, rat_to_json, rat_to_string, Rat};
pub use threshold::{
    extremal_sequence, lct, lct_diagonal, threshold_search, witness_subideal, LctResult,
    SearchRecord, Threshold,
};
