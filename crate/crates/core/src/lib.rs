//! The exotic Robinson-Schensted correspondence for the type C Weyl group.
//!
//! Signed permutations of size `n` are in bijection with pairs of standard
//! bitableaux of a common bipartition shape of `n`. [`insertion`] and
//! [`reverse_bumping`] are the two directions; [`second_decrement`]
//! predicts each reverse-bumping move from the shape alone.

pub mod bitableau;
pub mod cli;
pub mod correspondence;
pub mod golden;
pub mod partitions;
pub mod signed_perm;
pub mod transition;
pub mod verify;

pub use bitableau::{
    standard_bitableaux, Bitableau, Cell, CombinedPosition, RowId, Side, StandardBitableau,
    TableauError,
};
pub use correspondence::{
    bump_once, insertion, insertion_traced, reverse_bumping, reverse_bumping_traced, BumpOutcome,
    BumpStep, CorrespondencePair, InsertStep,
};
pub use partitions::{
    count_bitableaux, enumerate_bipartitions, Bipartition, IndexSets, Partition, PartitionError,
};
pub use signed_perm::{
    enumerate_signed_permutations, Letter, Permutation2n, SignedPermutation, WordError,
};
pub use transition::{second_decrement, ClassificationError, FirstRemoval, TransitionOutcome};
