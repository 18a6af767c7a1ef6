//! Semisimple elements: classification, canonical constructions, Sylow cyclicity.

pub mod classify;
pub mod construct;
pub mod ext;
pub mod sylow;

pub use classify::{
    charpoly_irreducible, classify, o_mod_center, p_part, spectrum_frobenius_orbit, CenterOrder,
    SemisimpleClassification, Spectrum, Tag,
};
pub use construct::{build_canonical_irreducible, build_torus_element, witt_transport, Side};
pub use sylow::{
    order_polynomial, pcyclic_m, sylow_cyclic, sylow_cyclic_bruteforce, OrderPoly, PCyclicMatch,
};
