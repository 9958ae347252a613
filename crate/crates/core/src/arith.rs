//! Exact integer primitives: gcd, additive orders, linear congruences and
//! prime-power recognition.
//!
//! Everything downstream reduces to these few operations, so they are kept
//! unbounded (`BigUint`) and total: any input outside a function's domain is
//! an `Error`, never a wrapped or truncated value.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Unbounded non-negative integer, the common currency of this crate.
pub type Nat = BigUint;

/// Greatest common divisor, with the usual conventions
/// `gcd(x, 0) = gcd(0, x) = x` and `gcd(0, 0) = 0`.
#[must_use]
pub fn gcd(a: &Nat, b: &Nat) -> Nat {
    a.gcd(b)
}

/// Order of `x` in the additive group Z/m, i.e. `m / gcd(x mod m, m)`.
///
/// The identity has order 1; a zero modulus is an error.
///
/// ```
/// use num_bigint::BigUint;
/// let ord = tameram::arith::additive_order(&BigUint::from(2u32), &BigUint::from(4u32));
/// assert_eq!(ord.unwrap(), BigUint::from(2u32));
/// ```
pub fn additive_order(x: &Nat, m: &Nat) -> Result<Nat> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(m / gcd(&(x % m), m))
}

/// `u64` shortcut for [`additive_order`] where the modulus is already small.
pub(crate) fn additive_order_u64(x: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    m / (x % m).gcd(&m)
}

/// Full solution set of `a*x = b (mod modulus)`: every solution is
/// `base + k*step` for `k >= 0`, and `base` is the least non-negative one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSolutions {
    pub base: Nat,
    pub step: Nat,
}

/// Solves the linear congruence `a*x = b (mod modulus)`.
///
/// Returns `None` when `gcd(a, modulus)` does not divide `b` (no solution),
/// and an error only for a zero modulus.
pub fn solve_linear_congruence(a: &Nat, b: &Nat, modulus: &Nat) -> Result<Option<CongruenceSolutions>> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let a = a % modulus;
    let b = b % modulus;
    let g = gcd(&a, modulus);
    if !(&b % &g).is_zero() {
        return Ok(None);
    }
    let step = modulus / &g;
    // Bezout coefficient u with u*a + v*modulus = g gives x = u*(b/g) mod step.
    let ext = BigInt::from(a.clone()).extended_gcd(&BigInt::from(modulus.clone()));
    let quotient = BigInt::from(&b / &g);
    let step_signed = BigInt::from(step.clone());
    let base = (ext.x * quotient).mod_floor(&step_signed);
    let base = base.to_biguint().expect("mod_floor of a positive modulus is non-negative");
    debug_assert!((&a * &base) % modulus == b);
    Ok(Some(CongruenceSolutions { base, step }))
}

/// Partial sum of the geometric series, reduced: `(1 + a + ... + a^(n-1)) mod m`.
///
/// Runs in `O(log n)` multiplications, so `n` may be any `u64`.
pub fn geometric_sum_mod(a: &Nat, n: u64, m: &Nat) -> Result<Nat> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if m.is_one() {
        return Ok(Nat::zero());
    }
    Ok(geometric_sum_rec(&(a % m), n, m))
}

fn geometric_sum_rec(a: &Nat, n: u64, m: &Nat) -> Nat {
    if n == 0 {
        Nat::zero()
    } else if n % 2 == 1 {
        (a * geometric_sum_rec(a, n - 1, m) + 1u32) % m
    } else {
        let half = geometric_sum_rec(a, n / 2, m);
        half * (a.modpow(&Nat::from(n / 2), m) + 1u32) % m
    }
}

/// `base^exp mod m` on machine words, with 128-bit intermediates.
pub(crate) fn pow_mod_u64(base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut acc: u128 = 1;
    let mut b: u128 = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `x*y mod m` on machine words, safe for the full `u64` range.
pub(crate) fn mul_mod_u64(x: u64, y: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    (x as u128 * y as u128 % m as u128) as u64
}

/// A cardinality `q = p^r` together with its factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    q: u64,
    p: u64,
    r: u32,
}

impl PrimePower {
    /// Recognizes `q` as a prime power or reports why it is not one.
    pub fn new(q: u64) -> Result<Self> {
        factor_prime_power(q)?.ok_or(Error::NotPrimePower(q))
    }

    /// The cardinality itself.
    #[must_use]
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The prime below the power.
    #[must_use]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The exponent, with `q = p^r` exactly.
    #[must_use]
    pub fn r(&self) -> u32 {
        self.r
    }
}

/// Largest cardinality accepted by [`factor_prime_power`]; trial division up
/// to `sqrt(2^40) = 2^20` keeps the check instantaneous.
pub const FACTOR_BOUND: u64 = 1 << 40;

/// Writes `q = p^r` if possible; `Ok(None)` means `q` has two distinct prime
/// divisors.
///
/// ```
/// use tameram::arith::factor_prime_power;
/// let pp = factor_prime_power(27).unwrap().unwrap();
/// assert_eq!((pp.p(), pp.r()), (3, 3));
/// assert!(factor_prime_power(12).unwrap().is_none());
/// ```
pub fn factor_prime_power(q: u64) -> Result<Option<PrimePower>> {
    if q <= 1 {
        return Err(Error::InvalidCardinality(q));
    }
    if q > FACTOR_BOUND {
        return Err(Error::CardinalityTooLarge(q));
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut r = 0u32;
    while rest % p == 0 {
        rest /= p;
        r += 1;
    }
    Ok((rest == 1).then_some(PrimePower { q, p, r }))
}

fn smallest_prime_factor(q: u64) -> u64 {
    if q % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= q {
        if q % d == 0 {
            return d;
        }
        d += 2;
    }
    q
}

/// Converts to `u64`, failing loudly instead of truncating.
pub(crate) fn to_u64(x: &Nat, what: &'static str) -> Result<u64> {
    x.to_u64().ok_or(Error::EnumerationBound { what, size: u64::MAX, bound: u64::MAX })
}
