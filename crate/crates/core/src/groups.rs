//! Concrete metacyclic groups given by the presentation
//!
//! ```text
//! < t, u | t^m = 1,  u^n = t^s,  u t u^-1 = t^a >
//! ```
//!
//! with `a` a unit mod m, `a^n = 1 (mod m)` and `(a - 1) s = 0 (mod m)`.
//! Every element has the normal form `t^i u^j` with `0 <= i < m`,
//! `0 <= j < n`, so the group has order `m * n` and multiplication is a
//! closed formula. On top of that sit full-enumeration structure reports
//! (orders, center, involutions, a recognized name) and a brute-force
//! isomorphism test, both guarded by desk-scale size rails.

use std::fmt;

use num_integer::Integer;

use crate::arith::{self, factor_prime_power};
use crate::error::{Error, Result};

/// Largest group order accepted by [`MetacyclicPresentation::structure_report`].
pub const ENUMERATION_BOUND: u64 = 10_000;

/// Largest group order accepted by [`MetacyclicPresentation::is_isomorphic`].
pub const ISOMORPHISM_BOUND: u64 = 512;

/// A finite metacyclic group in the four-parameter presentation above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MetacyclicPresentation {
    m: u64,
    n: u64,
    a: u64,
    s: u64,
}

/// Group element `t^i u^j` in normal form (`i < m`, `j < n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub i: u64,
    pub j: u64,
}

impl MetacyclicPresentation {
    pub fn new(m: u64, n: u64, a: u64, s: u64) -> Result<Self> {
        let invalid = |reason| Error::InvalidPresentation { m, n, a, s, reason };
        if m == 0 || n == 0 {
            return Err(invalid("m and n must be positive"));
        }
        if m.checked_mul(n).is_none() {
            return Err(invalid("group order m*n exceeds u64"));
        }
        if a == 0 || a > m {
            return Err(invalid("a must lie in 1..=m"));
        }
        if a.gcd(&m) != 1 {
            return Err(invalid("a must be a unit mod m"));
        }
        if arith::pow_mod_u64(a, n, m) != 1 % m {
            return Err(invalid("a^n must be 1 mod m"));
        }
        if s >= m {
            return Err(invalid("s must lie in 0..m"));
        }
        if arith::mul_mod_u64((a - 1) % m, s, m) != 0 {
            return Err(invalid("(a - 1) * s must be 0 mod m"));
        }
        Ok(Self { m, n, a, s })
    }

    #[must_use]
    pub fn m(&self) -> u64 {
        self.m
    }

    #[must_use]
    pub fn n(&self) -> u64 {
        self.n
    }

    #[must_use]
    pub fn a(&self) -> u64 {
        self.a
    }

    #[must_use]
    pub fn s(&self) -> u64 {
        self.s
    }

    #[must_use]
    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    #[must_use]
    pub fn identity(&self) -> GroupElement {
        GroupElement { i: 0, j: 0 }
    }

    /// All `m * n` normal forms, in lexicographic `(i, j)` order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.m).flat_map(move |i| (0..self.n).map(move |j| GroupElement { i, j }))
    }

    /// Product in normal form:
    /// `(t^i1 u^j1)(t^i2 u^j2) = t^(i1 + a^j1 i2 + s*carry) u^((j1+j2) mod n)`
    /// where `carry` accounts for `u^n = t^s`.
    #[must_use]
    pub fn multiply(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let (i1, j1) = (x.i % self.m, x.j % self.n);
        let (i2, j2) = (y.i % self.m, y.j % self.n);
        let carry = (j1 + j2) / self.n;
        let twist = arith::pow_mod_u64(self.a, j1, self.m);
        let i = ((i1 as u128 + twist as u128 * i2 as u128 + self.s as u128 * carry as u128)
            % self.m as u128) as u64;
        GroupElement { i, j: (j1 + j2) % self.n }
    }

    /// `x^k` by binary exponentiation.
    #[must_use]
    pub fn power(&self, x: GroupElement, mut k: u64) -> GroupElement {
        let mut acc = self.identity();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            k >>= 1;
        }
        acc
    }

    /// Order of `x`, by repeated multiplication (it divides `m * n`).
    #[must_use]
    pub fn element_order(&self, x: GroupElement) -> u64 {
        let identity = self.identity();
        let x = self.multiply(identity, x);
        let mut acc = x;
        let mut order = 1;
        while acc != identity {
            acc = self.multiply(acc, x);
            order += 1;
        }
        order
    }

    /// Commutativity criterion: the group is abelian iff `a = 1 (mod m)`.
    #[must_use]
    pub fn is_abelian(&self) -> bool {
        self.a % self.m == 1 % self.m
    }

    /// Cyclicity criterion: abelian and `gcd(s, gcd(m, n)) = 1`.
    #[must_use]
    pub fn is_cyclic(&self) -> bool {
        self.is_abelian() && self.s.gcd(&self.m.gcd(&self.n)) == 1
    }

    /// Full-enumeration invariants plus a recognized name; refuses groups
    /// with more than [`ENUMERATION_BOUND`] elements.
    pub fn structure_report(&self) -> Result<StructureReport> {
        let order = self.order();
        if order > ENUMERATION_BOUND {
            return Err(Error::EnumerationBound {
                what: "group enumeration",
                size: order,
                bound: ENUMERATION_BOUND,
            });
        }
        let identity = self.identity();
        let tau = GroupElement { i: 1 % self.m, j: 0 };
        let sigma = GroupElement { i: 0, j: 1 % self.n };
        let mut exponent = 1u64;
        let mut involution_count = 0u64;
        let mut center_order = 0u64;
        for x in self.elements() {
            exponent = exponent.lcm(&self.element_order(x));
            if x != identity && self.multiply(x, x) == identity {
                involution_count += 1;
            }
            if self.multiply(x, tau) == self.multiply(tau, x) && self.multiply(x, sigma) == self.multiply(sigma, x) {
                center_order += 1;
            }
        }
        let name = self.recognize(exponent, involution_count);
        Ok(StructureReport {
            order,
            is_abelian: self.is_abelian(),
            is_cyclic: self.is_cyclic(),
            exponent,
            center_order,
            involution_count,
            name,
        })
    }

    fn recognize(&self, exponent: u64, involution_count: u64) -> GroupName {
        if self.is_cyclic() {
            return GroupName::Cyclic;
        }
        if self.is_abelian() {
            // Smith normal form of the relation matrix [[m, 0], [-s, n]].
            let d1 = self.s.gcd(&self.m.gcd(&self.n));
            let d2 = self.order() / d1;
            debug_assert_eq!(d2 % d1, 0);
            return GroupName::Abelian { d1, d2 };
        }
        if self.order() == 8 {
            return match involution_count {
                5 => GroupName::Dihedral8,
                1 => GroupName::Quaternion8,
                _ => unreachable!("a nonabelian group of order 8 has 5 or 1 involutions"),
            };
        }
        if let Ok(Some(pp)) = factor_prime_power(self.order()) {
            if pp.r() == 3 && exponent == pp.p() * pp.p() {
                return GroupName::TwistedCube { l: pp.p() };
            }
        }
        GroupName::MetacyclicGeneric
    }

    /// Whether the two presented groups are isomorphic, by exhausting
    /// candidate generator images; refuses groups larger than
    /// [`ISOMORPHISM_BOUND`].
    ///
    /// A pair `(t', u')` in the other group defines a homomorphism exactly
    /// when it satisfies the three relations; since the orders are equal
    /// it is an isomorphism exactly when `t'` and `u'` generate.
    pub fn is_isomorphic(&self, other: &MetacyclicPresentation) -> Result<bool> {
        for group in [self, other] {
            if group.order() > ISOMORPHISM_BOUND {
                return Err(Error::EnumerationBound {
                    what: "isomorphism search",
                    size: group.order(),
                    bound: ISOMORPHISM_BOUND,
                });
            }
        }
        if self.order() != other.order() {
            return Ok(false);
        }
        let candidates: Vec<GroupElement> = other.elements().collect();
        for &t in &candidates {
            if other.power(t, self.m) != other.identity() {
                continue;
            }
            let t_s = other.power(t, self.s);
            let t_a = other.power(t, self.a);
            for &u in &candidates {
                if other.power(u, self.n) != t_s {
                    continue;
                }
                if other.multiply(u, t) != other.multiply(t_a, u) {
                    continue;
                }
                if other.generates(t, u) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Whether `{t, u}` generates the whole group (closure from the
    /// identity under right multiplication).
    fn generates(&self, t: GroupElement, u: GroupElement) -> bool {
        let order = self.order() as usize;
        let index = |x: GroupElement| (x.i * self.n + x.j) as usize;
        let mut seen = vec![false; order];
        let mut stack = vec![self.identity()];
        seen[index(self.identity())] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for gen in [t, u] {
                let y = self.multiply(x, gen);
                if !seen[index(y)] {
                    seen[index(y)] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == order
    }
}

/// Enumerated invariants of a presented group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub order: u64,
    pub is_abelian: bool,
    pub is_cyclic: bool,
    /// Least common multiple of all element orders.
    pub exponent: u64,
    pub center_order: u64,
    /// Number of elements of order exactly 2.
    pub involution_count: u64,
    pub name: GroupName,
}

/// Recognized isomorphism types; everything else reports as generic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupName {
    Cyclic,
    /// `Z/d1 x Z/d2` with `d1 | d2`.
    Abelian { d1: u64, d2: u64 },
    Dihedral8,
    Quaternion8,
    /// The nonabelian group of order `l^3` and exponent `l^2`.
    TwistedCube { l: u64 },
    MetacyclicGeneric,
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic => write!(f, "cyclic"),
            GroupName::Abelian { d1, d2 } => write!(f, "abelian({d1}|{d2})"),
            GroupName::Dihedral8 => write!(f, "dihedral-8"),
            GroupName::Quaternion8 => write!(f, "quaternion-8"),
            GroupName::TwistedCube { .. } => write!(f, "twisted-l²⋊l"),
            GroupName::MetacyclicGeneric => write!(f, "metacyclic-generic"),
        }
    }
}
