use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Validation failures carry enough context to be printed as a one-line
/// diagnostic; none of them are recoverable mid-computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A residue cardinality outside the meaningful range (q <= 1).
    #[error("invalid residue cardinality: {0}")]
    InvalidCardinality(u64),

    /// A residue cardinality that has at least two prime divisors.
    #[error("q is not a prime power: {0}")]
    NotPrimePower(u64),

    /// Trial-division factoring would take too long for this input.
    #[error("residue cardinality {0} exceeds the trial-division bound (2^40)")]
    CardinalityTooLarge(u64),

    /// Ramification index sharing a factor with the residue characteristic.
    #[error("gcd(e,p) != 1: e = {e} is wildly ramified over residue characteristic p = {p}")]
    WildRamification { e: u64, p: u64 },

    /// Reduction modulo zero has no meaning anywhere in this crate.
    #[error("zero modulus")]
    ZeroModulus,

    /// Ramification/residue parameters outside their domain.
    #[error("invalid tame shape: {0}")]
    InvalidShape(&'static str),

    /// The l-adic valuation of zero is not a natural number.
    #[error("l-adic valuation of zero is undefined")]
    ZeroValuation,

    /// Parameters that do not define an action of Z/n on Z/m.
    #[error("invalid cyclic action (m = {m}, n = {n}, a = {a}): {reason}")]
    InvalidAction { m: String, n: u64, a: String, reason: &'static str },

    /// A would-be cohomology-class representative outside ker(a - 1).
    #[error("{x} is not fixed by the action (a - 1 does not annihilate it mod {m})")]
    NotCocycle { x: String, m: String },

    /// Parameters that do not define a metacyclic group presentation.
    #[error("invalid metacyclic presentation (m = {m}, n = {n}, a = {a}, s = {s}): {reason}")]
    InvalidPresentation { m: u64, n: u64, a: u64, s: u64, reason: &'static str },

    /// An exhaustive computation whose stated size rail was exceeded.
    #[error("enumeration bound exceeded: {what} ({size} > {bound})")]
    EnumerationBound { what: &'static str, size: u64, bound: u64 },

    /// Brute-force cocycle enumeration beyond the m^(n^2) feasibility bound.
    #[error("cocycle oracle infeasible: m^(n^2) = {size} exceeds {bound}")]
    OracleTooLarge { size: String, bound: u64 },

    /// A line index outside 0..g_f.
    #[error("line index {x} out of range (g_f = {g_f})")]
    LineOutOfRange { x: u64, g_f: u64 },

    /// An operation defined only for Frobenius-stable lines.
    #[error("line {x} is not Frobenius-stable")]
    NotStable { x: u64 },

    /// An operation defined only when e divides q^f - 1.
    #[error("e = {e} does not divide q^f - 1 (gcd is {g_f})")]
    OutsideSplitRegime { e: u64, g_f: u64 },

    /// An operation defined only for galoisian extension classes.
    #[error("extension class with orbit representative {x} is not galoisian")]
    NotGaloisian { x: u64 },

    /// Base change to a level the current level does not divide.
    #[error("base change level {target} is not a multiple of f = {f}")]
    BadBaseChangeLevel { f: u64, target: u64 },

    /// Kummer-theoretic subgroups exist only when f = 1 and e | q - 1.
    #[error("Kummer regime violated: requires e | q - 1 (e = {e}, q = {q})")]
    OutsideKummerRegime { e: u64, q: u64 },

    /// A prime parameter that is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The auxiliary prime l must differ from the residue characteristic.
    #[error("l = {0} equals the residue characteristic")]
    ResidualPrime(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
