use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A ring or group table fails one of the structure axioms.
    /// The witness holds the (up to three) element indices involved.
    #[error("axiom `{axiom}` violated at ({}, {}, {})", witness.0, witness.1, witness.2)]
    AxiomViolation {
        axiom: &'static str,
        witness: (usize, usize, usize),
    },

    #[error("base ring must be commutative")]
    NonCommutativeBase,

    #[error("ring was not constructed as a group ring")]
    NotAGroupRing,

    /// An exhaustive construction or scan would exceed the configured cap.
    #[error("{what}: size {needed} exceeds cap {cap}")]
    SizeOverflow {
        what: &'static str,
        needed: u128,
        cap: usize,
    },

    #[error("operands belong to different parent structures")]
    ParentMismatch,

    #[error("component maps are not jointly injective")]
    NotJointlyInjective,

    #[error("map does not respect the base ring action")]
    ActionMismatch,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An error annotated with the ring/theorem it occurred in.
    #[error("{context}: {source}")]
    WithContext {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size limits for exhaustive constructions.
///
/// Everything in this crate is exact; the caps are what keeps "exact" also
/// meaning "finishes".  Rings are capped by element count, realized modules
/// (and enumeration budgets derived from them) by `max_module`, and
/// free-embedding searches by `kmax`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_ring: usize,
    pub max_module: usize,
    pub kmax: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_ring: 256,
            max_module: 4096,
            kmax: 3,
        }
    }
}

impl Caps {
    pub(crate) fn check_ring(&self, needed: u128, what: &'static str) -> Result<usize> {
        if needed > self.max_ring as u128 {
            Err(Error::SizeOverflow {
                what,
                needed,
                cap: self.max_ring,
            })
        } else {
            Ok(needed as usize)
        }
    }

    pub(crate) fn check_module(&self, needed: u128, what: &'static str) -> Result<usize> {
        if needed > self.max_module as u128 {
            Err(Error::SizeOverflow {
                what,
                needed,
                cap: self.max_module,
            })
        } else {
            Ok(needed as usize)
        }
    }
}
