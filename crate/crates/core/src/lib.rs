//! Exact computation of permanental polynomials per(xI - A(G)) for
//! bipartite graphs.
//!
//! Evaluating a permanent is #P-hard in general, but for bipartite graphs
//! that contain no even subdivision of K_2,3 the permanental polynomial
//! equals det(xI - A(G^e)) for an orientation G^e in which every cycle is
//! oddly oriented. This crate provides the whole pipeline:
//!
//! * recognition: such graphs are exactly the graphs whose 2-connected
//!   blocks are planar 1-cycle resonant, decided by a bridge test on the
//!   outer cycle of a plane embedding ([`resonance`]);
//! * construction: a face-parity orientation per block makes every cycle
//!   oddly oriented ([`orient`]);
//! * evaluation: exact integer characteristic polynomials by fraction-free
//!   determinants and interpolation ([`matrix`]), an independent
//!   subpermanent oracle, the biadjacency form det(x^2 I + B^T B) and
//!   closed forms for two parametric families ([`permpoly`]);
//! * brute-force oracles (cycle enumeration, matching counts, theta
//!   searches) that cross-check everything at desk scale.
//!
//! ```
//! use permpoly_core::{gen_g1, perm_poly_fast, perm_poly_oracle, closed_form_g1};
//!
//! // Three internally disjoint length-3 paths between two hubs.
//! let g = gen_g1(3);
//! let pi = perm_poly_fast(&g).unwrap();
//! assert_eq!(pi, closed_form_g1(3));
//! assert_eq!(pi, perm_poly_oracle(&g).unwrap());
//! // The constant term is the number of perfect matchings, squared.
//! assert_eq!(pi.coeff(0), 9.into());
//! ```

pub mod bigpoly;
pub mod cycles;
pub mod error;
pub mod generators;
pub mod graph;
pub mod json;
pub mod matching;
pub mod matrix;
pub mod orient;
pub mod permpoly;
pub mod planar;
pub mod resonance;

pub use bigpoly::IntPolynomial;
pub use cycles::{enumerate_cycles, enumerate_cycles_with_bound, Cycle, DEFAULT_CYCLE_BOUND};
pub use error::{Error, Result};
pub use generators::{
    gen_complete_bipartite, gen_cube, gen_cycle, gen_g1, gen_g2, gen_hex_branched, gen_hex_chain,
    gen_path, gen_theta, FamilySpec, Turn,
};
pub use graph::{
    bipartition, blocks, build_graph, components, BlockDecomposition, Coloring, Graph,
};
pub use json::{graph_from_json, graph_to_json, orientation_from_json, orientation_to_json};
pub use matching::{count_matchings_on_mask, count_perfect_matchings, is_nice_cycle};
pub use matrix::{charpoly, permanent, skew_biadjacency, IntMatrix, PERMANENT_BOUND};
pub use orient::{
    is_oddly_oriented, orient_block, orient_embedded, orient_graph, verify_all_cycles_odd,
    verify_all_cycles_odd_with_bound, verify_pfaffian, verify_pfaffian_with_bound, Orientation,
};
pub use permpoly::{
    borowiecki_transfer, borowiecki_transfer_with_bound, closed_form_g1, closed_form_g2,
    dn_matrix, perm_poly_biadjacency, perm_poly_fast, perm_poly_oracle, structured_det_dn,
    PERM_POLY_ORACLE_BOUND,
};
pub use planar::{
    embed_planar, is_outerplanar_bipartite, is_planar, validate_embedding, DirectedEdge,
    KuratowskiKind, KuratowskiWitness, RotationEmbedding,
};
pub use resonance::{
    contains_no_even_k23, cycle_bridges, ear_decomposition, is_block_1cr, oracle_1cr,
    oracle_1cr_with_bound, oracle_even_theta, oracle_even_theta_with_bound,
    oracle_k23_subdivision_with_bound, BlockCheck, BlockReport, BlockWitness, Bridge,
    EarDecomposition, ResonanceReport, ThetaWitness, Violation, DEFAULT_EVEN_THETA_BOUND,
};
