//! Symbolic powers, orders of vanishing along primes, Hilbert series and
//! multiplicities.

mod assoc;
mod hilbert;
mod prime;

pub use assoc::{associativity_check, local_length_at_monomial_prime};
pub use hilbert::{affine_degree, hilbert_data, hilbert_series, multiplicity_graded, HilbertData};
pub use prime::{PrimeKind, PrimeWitness, SymbolicPower, DEFAULT_ORDER_CAP};
