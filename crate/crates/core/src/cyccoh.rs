//! Cohomology of a cyclic group acting on a cyclic group, in additive
//! notation.
//!
//! A generator of Z/n acts on Z/m as multiplication by a unit `a` with
//! `a^n = 1 (mod m)`. Writing `S = 1 + a + ... + a^(n-1) mod m` for the norm
//! sum, both cohomology groups in the inhomogeneous complex
//!
//! ```text
//! H1 = ker(S) / im(a - 1),     H2 = ker(a - 1) / im(S)
//! ```
//!
//! have order `gcd(m, S) * gcd(m, a - 1) / m`. Classes of `H2` are stored by
//! their least non-negative coset representative, which makes equality,
//! order and inflation purely arithmetic. A brute-force 2-cocycle counter is
//! included as an independent oracle for the closed formula.

use std::collections::HashSet;

use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{self, Nat};
use crate::error::{Error, Result};

/// Action of Z/n on Z/m: the chosen generator acts as multiplication by `a`.
///
/// Invariants held by construction: `m >= 1`, `n >= 1`, `1 <= a <= m`,
/// `gcd(a, m) = 1` and `a^n = 1 (mod m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicAction {
    m: Nat,
    n: u64,
    a: Nat,
}

impl CyclicAction {
    pub fn new(m: Nat, n: u64, a: Nat) -> Result<Self> {
        let invalid = |reason| Error::InvalidAction { m: m.to_string(), n, a: a.to_string(), reason };
        if m.is_zero() {
            return Err(invalid("m must be positive"));
        }
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        if a.is_zero() || a > m {
            return Err(invalid("a must lie in 1..=m"));
        }
        if !arith::gcd(&a, &m).is_one() {
            return Err(invalid("a must be a unit mod m"));
        }
        if a.modpow(&Nat::from(n), &m) != Nat::one() % &m {
            return Err(invalid("a^n must be 1 mod m"));
        }
        Ok(Self { m, n, a })
    }

    /// Convenience constructor from machine words.
    pub fn from_u64(m: u64, n: u64, a: u64) -> Result<Self> {
        Self::new(Nat::from(m), n, Nat::from(a))
    }

    /// Order of the module Z/m.
    #[must_use]
    pub fn m(&self) -> &Nat {
        &self.m
    }

    /// Order of the acting group Z/n.
    #[must_use]
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The unit through which the generator acts.
    #[must_use]
    pub fn a(&self) -> &Nat {
        &self.a
    }

    /// Norm sum `S = (1 + a + ... + a^(n-1)) mod m`; the norm map is
    /// multiplication by this value.
    #[must_use]
    pub fn norm_sum(&self) -> Nat {
        arith::geometric_sum_mod(&self.a, self.n, &self.m).expect("m >= 1 by construction")
    }

    /// Generator of the image of the norm map inside Z/m, namely
    /// `gcd(S, m)`; `gcd(0, m) = m` makes the degenerate norm-zero case
    /// fall out without special-casing (the image is then `{0}`).
    #[must_use]
    pub fn norm_image_generator(&self) -> Nat {
        arith::gcd(&self.norm_sum(), &self.m)
    }

    /// Whether `x` is fixed by the action, i.e. `(a - 1) * x = 0 (mod m)`.
    #[must_use]
    pub fn is_fixed(&self, x: &Nat) -> bool {
        ((&self.a - 1u32) * x % &self.m).is_zero()
    }

    /// `|H1| = gcd(m, S) * gcd(m, a - 1) / m`.
    #[must_use]
    pub fn h1_order(&self) -> Nat {
        let fixed = arith::gcd(&self.m, &(&self.a - 1u32));
        arith::gcd(&self.m, &self.norm_sum()) * fixed / &self.m
    }

    /// `|H2|`, equal to `|H1|` (the Herbrand quotient of a finite module
    /// is 1).
    #[must_use]
    pub fn h2_order(&self) -> Nat {
        self.h1_order()
    }

    /// The class of a fixed element `x` in `H2 = ker(a - 1) / im(S)`.
    ///
    /// `x` is reduced mod m and must be fixed by the action; the stored
    /// representative is the least non-negative element of `x + im(S)`.
    pub fn class_of(&self, x: &Nat) -> Result<H2Class> {
        let x = x % &self.m;
        if !self.is_fixed(&x) {
            return Err(Error::NotCocycle { x: x.to_string(), m: self.m.to_string() });
        }
        let rep = x % self.norm_image_generator();
        Ok(H2Class { action: self.clone(), rep })
    }

    /// Counts `H2` by enumerating every 2-cocycle table `G x G -> Z/m` and
    /// dividing by the number of distinct 2-coboundaries.
    ///
    /// Feasible only while `m^(n^2) <= 10^7`; this is an oracle for
    /// [`h2_order`](Self::h2_order), deliberately sharing no arithmetic
    /// with it.
    pub fn h2_order_bruteforce(&self) -> Result<u64> {
        if self.m.is_one() {
            return Ok(1);
        }
        let cells = self.n.checked_mul(self.n);
        let size = match (self.m.to_u64(), cells) {
            (Some(m), Some(c)) if m <= COCYCLE_BOUND => u32::try_from(c).ok().and_then(|c| m.checked_pow(c)),
            _ => None,
        };
        if !matches!(size, Some(s) if s <= COCYCLE_BOUND) {
            let shown = cells
                .map(|c| format!("{}^{}", self.m, c))
                .unwrap_or_else(|| format!("{}^({}^2)", self.m, self.n));
            return Err(Error::OracleTooLarge { size: shown, bound: COCYCLE_BOUND });
        }
        let m = self.m.to_u64().expect("bounded above");
        let a = arith::to_u64(&self.a, "cocycle oracle unit").expect("a <= m");
        let n = self.n as usize;
        let a_pows: Vec<u64> = (0..n as u64).map(|j| arith::pow_mod_u64(a, j, m)).collect();

        let cocycles = count_cocycles(m, n, &a_pows);
        let coboundaries = count_coboundaries(m, n, &a_pows);
        assert_eq!(cocycles % coboundaries, 0, "coboundaries form a subgroup of cocycles");
        Ok(cocycles / coboundaries)
    }
}

/// Upper bound on `m^(n^2)` for the brute-force cocycle count.
pub const COCYCLE_BOUND: u64 = 10_000_000;

fn is_cocycle(table: &[u64], m: u64, n: usize, a_pows: &[u64]) -> bool {
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                let lhs = table[g * n + h] + table[(g + h) % n * n + k];
                let rhs = a_pows[g] * table[h * n + k] % m + table[g * n + (h + k) % n];
                if lhs % m != rhs % m {
                    return false;
                }
            }
        }
    }
    true
}

fn count_cocycles(m: u64, n: usize, a_pows: &[u64]) -> u64 {
    let mut table = vec![0u64; n * n];
    let mut count = 0;
    loop {
        if is_cocycle(&table, m, n, a_pows) {
            count += 1;
        }
        if !advance(&mut table, m) {
            return count;
        }
    }
}

fn count_coboundaries(m: u64, n: usize, a_pows: &[u64]) -> u64 {
    let mut chain = vec![0u64; n];
    let mut seen = HashSet::new();
    loop {
        // The differential of a 1-cochain c is (g, h) -> c(g) + g.c(h) - c(g+h).
        let mut encoded: u64 = 0;
        for g in 0..n {
            for h in 0..n {
                let value = (chain[g] + a_pows[g] * chain[h] % m + m - chain[(g + h) % n]) % m;
                encoded = encoded * m + value;
            }
        }
        seen.insert(encoded);
        if !advance(&mut chain, m) {
            return seen.len() as u64;
        }
    }
}

/// Steps a base-m odometer; false once it wraps back to all zeros.
fn advance(digits: &mut [u64], m: u64) -> bool {
    for d in digits {
        *d += 1;
        if *d < m {
            return true;
        }
        *d = 0;
    }
    false
}

/// An element of `H2 = ker(a - 1) / im(S)`, stored by canonical
/// representative.
///
/// Two classes are equal exactly when they have the same action and the
/// same representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Class {
    action: CyclicAction,
    rep: Nat,
}

impl H2Class {
    #[must_use]
    pub fn action(&self) -> &CyclicAction {
        &self.action
    }

    /// Least non-negative representative of the coset.
    #[must_use]
    pub fn rep(&self) -> &Nat {
        &self.rep
    }

    #[must_use]
    pub fn is_trivial(&self) -> bool {
        self.rep.is_zero()
    }

    /// Order in `H2`: the least `t >= 1` with `t * rep` in `im(S)`, i.e.
    /// the additive order of `rep` modulo the norm-image generator.
    #[must_use]
    pub fn order(&self) -> Nat {
        let image = self.action.norm_image_generator();
        arith::additive_order(&self.rep, &image).expect("norm image generator is positive")
    }

    /// Inflation along the degree-`cmult` quotient Z/(cmult n) -> Z/n:
    /// the representative is multiplied by `cmult` and re-canonicalized
    /// for the extended action.
    ///
    /// The multipliers whose inflation is trivial are exactly the positive
    /// multiples of a least one, and inflating by the additive order of
    /// `rep` mod m always trivialises. Inflating by the class order need
    /// not: the norm image of the extended action can shrink, so a class
    /// that dies in its own `H2` may survive inflation (see the unit
    /// tests for the smallest instance).
    pub fn inflate(&self, cmult: u64) -> Result<H2Class> {
        let n = self.action.n.checked_mul(cmult).ok_or(Error::EnumerationBound {
            what: "inflated action order",
            size: u64::MAX,
            bound: u64::MAX,
        })?;
        let extended = CyclicAction::new(self.action.m.clone(), n, self.action.a.clone())?;
        extended.class_of(&(&self.rep * cmult))
    }
}
