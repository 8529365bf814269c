//! Kashiwara crystals of level-`l` Fock spaces in affine type A.
//!
//! Multipartitions carry a multicharge `s` and a level `e`. The crate
//! provides the crystal operators `f_i` / `e_i`, generation of the crystal
//! component of the empty multipartition (the Uglov multipartitions), the
//! action of the extended affine symmetric group on charges, the crystal
//! isomorphisms `Ψ` between orbit-equivalent charges, Hu's map and the
//! embedding `ι_k`.
//!
//! ```
//! use fock_crystal::{psi, Multicharge, Multipartition};
//!
//! let from = Multicharge::parse("0,0,1", 2)?;
//! let to = Multicharge::parse("2,0,3", 2)?;
//! let lam: Multipartition = "2|2|-".parse()?;
//! assert_eq!(psi(&lam, &from, &to)?.to_string(), "2|1|1");
//! # Ok::<(), fock_crystal::Error>(())
//! ```
//!
//! The `book/` directory at the repository root walks through the
//! combinatorics chapter by chapter; its code blocks run as doc-tests of
//! this crate.

pub mod charges;
pub mod crystal;
pub mod error;
pub mod graph;
pub mod iso;
pub mod maps;
pub mod multipartition;

pub use charges::{
    act_sigma, act_tau, act_tau_inverse, act_y, act_y_inverse, is_flotw, is_fundamental,
    is_very_dominant, same_orbit, to_fundamental, Generator, GeneratorWord,
};
pub use crystal::{
    e_op, f_op, good_addable, good_removable, hw_reduce, is_uglov, precedes, reduce_word,
    signature_word, Letter, ReducedWord, SignatureWord, Tag,
};
pub use error::{Error, Result};
pub use graph::{crystal_graph, uglov_set, Arrow, CrystalGraph};
pub use iso::{extract_path, psi, replay, tau_shortcut};
pub use maps::{
    divided_charge, hu_map, hu_map_conjugation, hu_map_replay, iota, iota_conjugation, iota_replay,
    iota_source_charge, is_divided_bipartition, is_in_iota_image, r_value, rotation_orbit_size,
    split_count, CanonicalCharge,
};
pub use multipartition::{
    addable_nodes, content, is_e_regular, removable_nodes, residue, Multicharge, Multipartition,
    Node, Partition,
};

// The book's code blocks, compiled and run by `cargo test --doc`. One
// module per chapter so a failure points at its chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/multipartitions.md")]
    mod multipartitions {}
    #[doc = include_str!("../../../book/src/crystals.md")]
    mod crystals {}
    #[doc = include_str!("../../../book/src/charges.md")]
    mod charges {}
    #[doc = include_str!("../../../book/src/isomorphisms.md")]
    mod isomorphisms {}
    #[doc = include_str!("../../../book/src/maps.md")]
    mod maps {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
