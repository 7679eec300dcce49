//! Graphs, weights, orientations, posets, linear extensions, flats, and
//! free-tree generation.
//!
//! All types are immutable after construction; enumeration operations return
//! materialized sequences and are freely shareable across workers.

mod flats;
mod graph;
mod orientation;
mod poset;
mod trees;

pub use flats::{flats, mobius_flats, Flat};
pub use graph::{Graph, WeightVector};
pub use orientation::{acyclic_orientations, Orientation};
pub use poset::{for_each_linear_extension, linear_extensions, poset_of, LinearExtension, Poset};
pub use trees::{
    generate_trees, generate_trees_with_forms, tree_canonical_form, tree_canonical_graph,
};
