//! Permutations, partitions, standard tableaux, and the purely combinatorial
//! closed forms (hook scalars, mixed hook ratios, insertion shapes).

pub mod hooks;
pub mod partition;
pub mod permutation;
pub mod tableau;

pub use hooks::{
    adjacent_in_young_subgroup, hook_scalar, hook_scalar_negative_form, hook_scalar_positive_form,
    insert_columns, insert_rows, insertion_tableau, mixed_hook_ratio, skew_cancellation_check,
    young_subgroup_elements, Arrangement,
};
pub use partition::Partition;
pub use permutation::{tau_permutation, Permutation};
pub use tableau::StandardTableau;
