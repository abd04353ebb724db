//! Partitions, digit expansions and the weight combinatorics behind the
//! counting arguments.

mod extended;
mod partition;
mod weights;

pub use extended::{is_prime, mixed_digits, padic_digits, ExtNat, MixedCharacteristic, Regime};
pub use partition::{factorial, partitions, partitions_with_max_rows, standard_tableaux, Partition, Tableau};
pub use weights::{c_matrix, kappa_partition, rho_vector, steinberg_partition, steinberg_parts, KappaWeights};
