//! Exact character theory for finite permutation groups, with a certification
//! pipeline that decides splitness questions for reflection-group centralizers
//! by purely rational arithmetic.

pub mod arith;
pub mod chain;
pub mod charop;
pub mod classes;
pub mod counting;
pub mod cyclo;
pub mod error;
pub mod group;
pub mod partitions;
pub mod perm;
pub mod pipeline;
pub mod quaternion;
pub mod subconj;
pub mod sylow;
pub mod symcheck;
pub mod table;
pub mod weyl;

pub use chain::StabilizerChain;
pub use charop::{
    induce, inner_product, integral_multiplicities, multiplicities, rational_fs_positive, restrict,
    tensor, wreath_irreducible_dims, WreathSpec,
};
pub use classes::{
    center, centralizer_of, centralizer_of_subgroup, transporter, ClassData, ConjClassInfo,
    ElementIndex, DEFAULT_BUDGET,
};
pub use counting::{binary_partition_count, bound_check, log2_enclosure, CountBounds, Enclosure};
pub use cyclo::Cyclotomic;
pub use error::{Error, Result};
pub use group::{two_part, PermGroup};
pub use partitions::{conjugate, hook_length_degree, partition_count, partitions};
pub use perm::{Permutation, Point};
pub use pipeline::{
    brute_force_centralizer_classes, centralizers_of_elem_ab_2, certify_split, run_suite,
    run_suite_on, CentralizerSet, CharCertificate, SplitReport, SuiteMember, SuiteReport, Timings,
    UncertifiedReason,
};
pub use quaternion::{
    construct_quaternion, hilbert_symbol, quaternion_invariants, ramified_places, Place,
    PlaceInvariant, QuaternionPair,
};
pub use subconj::{dedupe, fingerprint, is_conjugate_subgroups, Fingerprint};
pub use sylow::{sylow2, sylow2_symmetric};
pub use symcheck::{
    cycle_types, mn_character, mn_value, one_in_each_row, parity_matrix, ParityMatrix,
};
pub use table::{character_table, class_fusion, CharTable};
pub use weyl::{
    coxeter_group, even_signed_permutation_group, root_system, signed_permutation_group,
    CoxeterType, RootSystem, Q5,
};
