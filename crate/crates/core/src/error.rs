use thiserror::Error;

/// Errors shared by every module of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The extension degree is outside the supported table.
    #[error("unsupported extension degree m = {m}: {reason} (supported: odd m with {min} <= m <= {max})")]
    UnsupportedDegree {
        m: u32,
        reason: &'static str,
        min: u32,
        max: u32,
    },

    /// The built-in reduction polynomial failed its irreducibility self-check.
    #[error("reduction polynomial {modulus:#x} for m = {m} is reducible")]
    ReducibleModulus { m: u32, modulus: u64 },

    /// Zero raised to an exponent that is negative or required a modular inverse.
    #[error("0 cannot be raised to exponent {exponent} (negative or fractional-origin)")]
    ZeroToNonPositivePower { exponent: i128 },

    /// A map was evaluated at 0 but carries exponents defined only on the multiplicative group.
    #[error("map `{map}` is defined on nonzero field elements only")]
    ZeroNotInDomain { map: String },

    /// An exact-mode exponent division left a remainder at this m.
    #[error("exponent of `{map}` does not evaluate at m = {m}: {num} is not divisible by {divisor}")]
    ExponentNotExact {
        map: String,
        m: u32,
        num: i128,
        divisor: i64,
    },

    /// A modular-mode exponent division has a divisor not coprime to 2^m - 1.
    #[error("exponent divisor {divisor} is not invertible modulo 2^{m} - 1")]
    DivisorNotInvertible { m: u32, divisor: i64 },

    /// A power-of-two exponent node evaluated to a negative or half-integer power.
    #[error("exponent of `{map}` has an invalid power-of-two node at m = {m}: 2^({num}/{den})")]
    InvalidPowerOfTwo {
        map: String,
        m: u32,
        num: i64,
        den: i64,
    },

    /// Unknown catalog identifier.
    #[error("unknown catalog id `{id}`")]
    UnknownCatalogId { id: String },

    /// A multiplicative-group set operation received a set containing 0.
    #[error("operation `{operation}` requires a subset of the multiplicative group, but 0 is present")]
    ZeroInMultiplicativeSet { operation: &'static str },

    /// Power image with an exponent not coprime to the group order.
    #[error("exponent {exponent} is not coprime to 2^{m} - 1; the power image may collapse")]
    NonCoprimePowerImage { m: u32, exponent: u64 },

    /// Dillon-Dobbertin parameter outside the theorem's hypotheses.
    #[error("Dillon-Dobbertin parameter k = {k} invalid for m = {m}: {reason}")]
    DillonDobbertinParameter { k: u32, m: u32, reason: &'static str },

    /// The support-to-code construction hypothesis 2 n_f + walsh(w) != 0 failed.
    #[error("code construction hypothesis violated: 2*n_f + walsh(w) = 0 at w = {w:#x}")]
    CodeHypothesis { w: u64 },

    /// The power-moment system has no nonnegative integer solution.
    #[error("power moments are inconsistent with a binary linear code: {detail}")]
    InconsistentMoments { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
