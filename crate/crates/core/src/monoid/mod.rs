//! The transformation monoid `Z_n^Z_n` under the action of `S_n × S_n`.

pub mod classes;
pub mod function;
pub mod partition;

pub use classes::{
    canonical_representative, enumerate_classes, fiber_partition, orbit, stabilizer_order,
    stabilizer_order_brute_force, ClassRecord, Sign, SignPattern,
};
pub use function::{
    all_functions, all_permutations, factorial, lex_fun, lex_pair, lex_perm, monoid_size,
    unrank_fun, unrank_perm, FunctionTable,
};
pub use partition::{hardy_ramanujan_estimate, partition_count, partitions, Partition};
