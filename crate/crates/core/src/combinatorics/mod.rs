//! Partitions, dominance order and q-series primitives.

mod partition;
mod qseries;

pub use partition::{
    dominance_leq, enumerate_below, enumerate_contained, partitions_up_to, Partition,
};
pub use qseries::{
    q_binomial, q_binomial_or_zero, q_factorial, q_integer, q_multinomial, q_pochhammer,
    verify_q_factorial_identity,
};
