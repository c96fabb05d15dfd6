//! Exact complex linear algebra for two-qubit states, local unitaries,
//! local channels, and computational-basis measurement.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to use from concurrent contexts. The
//! pseudo-random source for Haar sampling is always an explicit argument.

mod channel;
mod entangler;
pub(crate) mod linalg;
mod state;
mod unitary;

pub use channel::LocalChannel;
pub use entangler::EntanglingGate;
pub use state::{TwoQubitDensity, TwoQubitState};
pub use unitary::LocalUnitary;

/// Which player's qubit an operation acts on. Player 1 owns the first index
/// of the basis labels |b1 b2>.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Seat {
    Player1,
    Player2,
}

impl Seat {
    pub fn other(self) -> Self {
        match self {
            Seat::Player1 => Seat::Player2,
            Seat::Player2 => Seat::Player1,
        }
    }
}
