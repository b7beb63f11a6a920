//! Generators for the poset families and the figure fixtures.

pub mod boolean;
pub mod distributive;
pub mod fixtures;
pub mod partition;
pub mod permutation;
pub mod trees;
pub mod young;

pub use boolean::boolean_lattice;
pub use distributive::{distributive_lattice, lin_labels, naturally_labeled_posets, order_ideals};
pub use fixtures::{fixture, FIXTURE_NAMES};
pub use partition::{max_min_el, minimal_labeling, partition_lattice, SetPartition};
pub use permutation::{generalized_quotient, length_additive_complement, weak_order, Permutation};
pub use trees::{chain_to_tree, enumerate_forests, enumerate_trees, tree_label, tree_poset, tree_to_chain, DecreasingTree, Forest};
pub use young::{
    left_order, row_tableau, row_word, standard_tableaux, tableau_swap_poset, young_interval, StandardTableau,
    YoungInterval, YoungShape,
};
