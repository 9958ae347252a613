//! Tamely ramified extensions of a local field with residue cardinality q,
//! classified exactly.
//!
//! Everything is reduced to residue arithmetic. An extension with
//! ramification index `e` and residual degree `f` (with `gcd(e, p) = 1`)
//! corresponds to a "ramified line" in the Kummer quotient of the degree-f
//! unramified extension, and lines are parametrised by `x mod g_f` where
//! `g_f = gcd(q^f - 1, e)`. The Frobenius acts on parameters as
//! multiplication by q; its orbits are the isomorphism classes over the
//! base field. A line is stable exactly when `(q - 1) x = 0 (mod g_f)`,
//! and a stable singleton with `e | q^f - 1` is galoisian, with metacyclic
//! Galois group `<t, s | t^e = 1, s^f = t^s, s t s^-1 = t^q>` whose
//! parameter `s` is a cohomology class computed two independent ways
//! ([`LineParam::class_via_quotient`] and [`LineParam::class_via_norm`]).
//!
//! Generators and uniformisers are never represented: all outputs are
//! canonical residues, so nothing in the API can depend on a choice.

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{self, Nat, PrimePower};
use crate::cyccoh::{CyclicAction, H2Class};
use crate::error::{Error, Result};
use crate::groups::{GroupName, MetacyclicPresentation};

/// Largest number of lines [`TameShape::lines`] / [`TameShape::orbits`]
/// will enumerate.
pub const LINE_ENUMERATION_BOUND: u64 = 10_000_000;

/// Largest residual degree for which `q^f - 1` is materialised as a big
/// integer (norm-side constructions only; the modular ops have no such
/// limit).
pub const NORM_LEVEL_BOUND: u64 = 1 << 16;

/// Largest `e` for which Kummer subgroups are enumerated.
pub const KUMMER_BOUND: u64 = 100;

/// A local field, represented entirely by its residue cardinality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalField {
    q: PrimePower,
}

impl LocalField {
    pub fn new(q: u64) -> Result<Self> {
        Ok(Self { q: PrimePower::new(q)? })
    }

    #[must_use]
    pub fn from_prime_power(q: PrimePower) -> Self {
        Self { q }
    }

    /// Residue cardinality `q = p^r`.
    #[must_use]
    pub fn q(&self) -> u64 {
        self.q.q()
    }

    /// Residue characteristic.
    #[must_use]
    pub fn p(&self) -> u64 {
        self.q.p()
    }

    #[must_use]
    pub fn prime_power(&self) -> PrimePower {
        self.q
    }
}

/// A pair (e, f) of tame invariants over a [`LocalField`]: ramification
/// index `e` with `gcd(e, p) = 1` and residual degree `f >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TameShape {
    field: LocalField,
    e: u64,
    f: u64,
}

impl TameShape {
    pub fn new(field: LocalField, e: u64, f: u64) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidShape("ramification index e must be positive"));
        }
        if f == 0 {
            return Err(Error::InvalidShape("residual degree f must be positive"));
        }
        if e % field.p() == 0 {
            return Err(Error::WildRamification { e, p: field.p() });
        }
        Ok(Self { field, e, f })
    }

    #[must_use]
    pub fn field(&self) -> LocalField {
        self.field
    }

    #[must_use]
    pub fn e(&self) -> u64 {
        self.e
    }

    #[must_use]
    pub fn f(&self) -> u64 {
        self.f
    }

    /// `g = gcd(q - 1, e)`: the number of Frobenius-stable lines, and the
    /// number of lines at level 1.
    #[must_use]
    pub fn g(&self) -> u64 {
        (self.field.q() - 1).gcd(&self.e)
    }

    /// `g_f = gcd(q^f - 1, e)`: the number of ramified lines at level f.
    ///
    /// Computed modulo e, so arbitrarily large f costs only a modular
    /// exponentiation.
    #[must_use]
    pub fn g_f(&self) -> u64 {
        let e = self.e;
        let pow = arith::pow_mod_u64(self.field.q() % e, self.f, e);
        ((pow + e - 1) % e).gcd(&e)
    }

    /// Order `q^f - 1` of the multiplicative group of the level-f residue
    /// field, as an exact integer.
    pub fn unit_order(&self) -> Result<Nat> {
        if self.f > NORM_LEVEL_BOUND {
            return Err(Error::EnumerationBound {
                what: "residual degree for norm-scale arithmetic",
                size: self.f,
                bound: NORM_LEVEL_BOUND,
            });
        }
        Ok(Nat::from(self.field.q()).pow(self.f as u32) - 1u32)
    }

    /// The norm scalar `S = 1 + q + ... + q^(f-1)` reduced mod `q^f - 1`;
    /// the norm map of the level-f residue extension is raising to this
    /// exponent.
    pub fn norm_scalar(&self) -> Result<Nat> {
        let modulus = self.unit_order()?;
        if modulus.is_zero() {
            return Ok(Nat::zero());
        }
        arith::geometric_sum_mod(&Nat::from(self.field.q()), self.f, &modulus)
    }

    /// The action of the level-f Frobenius on line parameters: Z/f acting
    /// on Z/g_f as multiplication by `q mod g_f`.
    #[must_use]
    pub fn quotient_action(&self) -> CyclicAction {
        let m = self.g_f();
        let a = if m == 1 { 1 } else { self.field.q() % m };
        CyclicAction::from_u64(m, self.f, a).expect("g_f divides q^f - 1, so q acts with period f")
    }

    /// All `g_f` ramified lines at level f, in parameter order.
    pub fn lines(&self) -> Result<Vec<LineParam>> {
        let g_f = self.checked_g_f()?;
        Ok((0..g_f).map(|x| LineParam { shape: *self, x }).collect())
    }

    /// The Frobenius orbits of all lines, sorted by canonical (minimal)
    /// representative; each orbit is one isomorphism class over the base
    /// field.
    pub fn orbits(&self) -> Result<Vec<ExtensionClass>> {
        let g_f = self.checked_g_f()?;
        let mut seen = vec![false; g_f as usize];
        let mut classes = Vec::new();
        for x in 0..g_f {
            if seen[x as usize] {
                continue;
            }
            let orbit = orbit_of(self, x);
            for &y in &orbit {
                seen[y as usize] = true;
            }
            classes.push(ExtensionClass { shape: *self, orbit });
        }
        Ok(classes)
    }

    /// The line with parameter `x`, checked against `0 <= x < g_f`.
    pub fn line(&self, x: u64) -> Result<LineParam> {
        let g_f = self.g_f();
        if x >= g_f {
            return Err(Error::LineOutOfRange { x, g_f });
        }
        Ok(LineParam { shape: *self, x })
    }

    fn checked_g_f(&self) -> Result<u64> {
        let g_f = self.g_f();
        if g_f > LINE_ENUMERATION_BOUND {
            return Err(Error::EnumerationBound {
                what: "ramified line enumeration",
                size: g_f,
                bound: LINE_ENUMERATION_BOUND,
            });
        }
        Ok(g_f)
    }
}

fn orbit_of(shape: &TameShape, x: u64) -> Vec<u64> {
    let mut orbit = vec![x];
    let mut y = LineParam { shape: *shape, x }.frobenius().x;
    while y != x {
        orbit.push(y);
        y = LineParam { shape: *shape, x: y }.frobenius().x;
    }
    orbit.sort_unstable();
    orbit
}

/// A ramified line at level f, named by its parameter `x mod g_f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineParam {
    shape: TameShape,
    x: u64,
}

impl LineParam {
    pub fn new(shape: TameShape, x: u64) -> Result<Self> {
        shape.line(x)
    }

    #[must_use]
    pub fn shape(&self) -> TameShape {
        self.shape
    }

    #[must_use]
    pub fn x(&self) -> u64 {
        self.x
    }

    /// The image of this line under the Frobenius: `q * x mod g_f`.
    #[must_use]
    pub fn frobenius(&self) -> LineParam {
        let g_f = self.shape.g_f();
        let x = arith::mul_mod_u64(self.shape.field.q() % g_f, self.x, g_f);
        LineParam { shape: self.shape, x }
    }

    /// Whether the line is Frobenius-stable: `(q - 1) x = 0 (mod g_f)`.
    /// Exactly `g` of the `g_f` lines are stable, and stability is the
    /// same as being a Frobenius fixed point.
    #[must_use]
    pub fn is_stable(&self) -> bool {
        let g_f = self.shape.g_f();
        arith::mul_mod_u64((self.shape.field.q() - 1) % g_f, self.x, g_f) == 0
    }

    /// The cohomology class of a stable line in `H2` of the Frobenius
    /// action on Z/g_f, with representative `x` itself.
    pub fn class_via_quotient(&self) -> Result<H2Class> {
        if !self.is_stable() {
            return Err(Error::NotStable { x: self.x });
        }
        self.shape.quotient_action().class_of(&Nat::from(self.x))
    }

    /// The same cohomology class computed through the norm construction,
    /// available in the regime `e | q^f - 1` (where `g_f = e`).
    ///
    /// Solves `e * alpha = (q - 1) x (mod q^f - 1)` — solvable exactly
    /// because the line is stable — applies the norm scalar, and divides
    /// the resulting root-of-unity exponent back down to Z/e. The result
    /// must not depend on which congruence solution is taken; this is
    /// asserted on every call by recomputing with a second solution.
    pub fn class_via_norm(&self) -> Result<H2Class> {
        if !self.is_stable() {
            return Err(Error::NotStable { x: self.x });
        }
        let e = self.shape.e;
        let g_f = self.shape.g_f();
        if g_f != e {
            return Err(Error::OutsideSplitRegime { e, g_f });
        }
        let modulus = self.shape.unit_order()?;
        if modulus.is_zero() || e == 1 {
            // q = 2, f = 1 forces e = 1; the module is trivial either way.
            return self.shape.quotient_action().class_of(&Nat::zero());
        }
        let scalar = self.shape.norm_scalar()?;
        let rhs = Nat::from(self.shape.field.q() - 1) * self.x % &modulus;
        let solutions = arith::solve_linear_congruence(&Nat::from(e), &rhs, &modulus)?
            .expect("stability makes e*alpha = (q-1)x solvable mod q^f - 1");
        let scale = &modulus / e;
        let action = self.shape.quotient_action();
        let class_from = |alpha: Nat| -> Result<H2Class> {
            let zeta_exp = alpha * &scalar % &modulus;
            assert!(
                (&zeta_exp % &scale).is_zero(),
                "norm of a solution lands in the e-torsion subgroup"
            );
            action.class_of(&(zeta_exp / &scale))
        };
        let class = class_from(solutions.base.clone())?;
        if solutions.step < modulus {
            let second = class_from(solutions.base + solutions.step)?;
            assert_eq!(class, second, "class is independent of the congruence solution");
        }
        Ok(class)
    }

    /// The additive order of `(q - 1) x` in Z/g_f.
    ///
    /// Every level `c * f` at which the line becomes stable has `c` a
    /// multiple of this degree (base-change multipliers are congruent to
    /// `c` mod g_f), and in the regime `e | q^f - 1` it is exactly the
    /// least stabilising `c`. Outside that regime the least stabiliser
    /// can be a proper multiple, because the line count g_{cf} can grow
    /// with the level (see the closure tests for the smallest case).
    #[must_use]
    pub fn closure_degree(&self) -> u64 {
        let g_f = self.shape.g_f();
        let moved = arith::mul_mod_u64((self.shape.field.q() - 1) % g_f, self.x, g_f);
        arith::additive_order_u64(moved, g_f)
    }

    /// The order of [`class_via_quotient`](Self::class_via_quotient) in
    /// its cohomology group, for stable lines in the regime
    /// `e | q^f - 1`.
    ///
    /// This is the classical splitting invariant of the associated group
    /// extension: inflating the class by it kills the class whenever
    /// `split_degree * x = 0 (mod e)`, which holds in every example
    /// worked in the sources this library reproduces. In general the
    /// least trivialising inflation multiplier can be strictly larger
    /// (see the cyclic-cohomology module's tests for the smallest case).
    pub fn split_degree(&self) -> Result<u64> {
        let e = self.shape.e;
        let g_f = self.shape.g_f();
        if g_f != e {
            return Err(Error::OutsideSplitRegime { e, g_f });
        }
        let class = self.class_via_quotient()?;
        arith::to_u64(&class.order(), "split degree")
    }

    /// The image of this line at a higher level `f_target` (a multiple of
    /// f): the parameter is multiplied by `(q^f_target - 1)/(q^f - 1)`
    /// modulo the level-`f_target` line count.
    pub fn base_change(&self, f_target: u64) -> Result<LineParam> {
        let f = self.shape.f;
        if f_target == 0 || f_target % f != 0 {
            return Err(Error::BadBaseChangeLevel { f, target: f_target });
        }
        let target = TameShape::new(self.shape.field, self.shape.e, f_target)?;
        let g_target = target.g_f();
        // (q^{f'} - 1)/(q^f - 1) = 1 + q^f + ... + q^{f(f'/f - 1)}, reduced.
        let qf = arith::pow_mod_u64(self.shape.field.q() % g_target, f, g_target);
        let multiplier =
            arith::geometric_sum_mod(&Nat::from(qf), f_target / f, &Nat::from(g_target))?;
        let multiplier = arith::to_u64(&multiplier, "base-change multiplier")?;
        let x = arith::mul_mod_u64(self.x % g_target, multiplier, g_target);
        Ok(LineParam { shape: target, x })
    }
}

/// A Frobenius orbit of ramified lines: one isomorphism class of tame
/// extensions over the base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionClass {
    shape: TameShape,
    orbit: Vec<u64>,
}

impl ExtensionClass {
    /// The full orbit of the given line.
    #[must_use]
    pub fn of_line(line: &LineParam) -> ExtensionClass {
        ExtensionClass { shape: line.shape, orbit: orbit_of(&line.shape, line.x) }
    }

    #[must_use]
    pub fn shape(&self) -> TameShape {
        self.shape
    }

    /// Sorted orbit of line parameters.
    #[must_use]
    pub fn orbit(&self) -> &[u64] {
        &self.orbit
    }

    /// Canonical representative: the minimal parameter in the orbit.
    #[must_use]
    pub fn rep(&self) -> u64 {
        self.orbit[0]
    }

    #[must_use]
    pub fn size(&self) -> u64 {
        self.orbit.len() as u64
    }

    #[must_use]
    pub fn representative_line(&self) -> LineParam {
        LineParam { shape: self.shape, x: self.rep() }
    }

    /// Galoisian over the base field: a singleton orbit (equivalently, a
    /// stable line) in the regime `e | q^f - 1`.
    #[must_use]
    pub fn is_galoisian(&self) -> bool {
        self.orbit.len() == 1 && self.shape.g_f() == self.shape.e
    }

    /// Abelian over the base field: `e | q - 1` (then every class with
    /// this shape is abelian).
    #[must_use]
    pub fn is_abelian(&self) -> bool {
        self.shape.g() == self.shape.e
    }

    /// The Galois group of a galoisian class, as the metacyclic
    /// presentation `(m, n, a, s) = (e, f, q mod e, class rep)` with `s`
    /// computed by the norm construction.
    pub fn galois_group(&self) -> Result<MetacyclicPresentation> {
        if !self.is_galoisian() {
            return Err(Error::NotGaloisian { x: self.rep() });
        }
        let class = self.representative_line().class_via_norm()?;
        let s = arith::to_u64(class.rep(), "metacyclic parameter s")?;
        let e = self.shape.e;
        let a = if e == 1 { 1 } else { self.shape.field.q() % e };
        MetacyclicPresentation::new(e, self.shape.f, a, s)
    }

    /// Whether a galoisian class is cyclic: abelian with `s` prime to
    /// `gcd(e, f)`.
    pub fn is_cyclic_class(&self) -> Result<bool> {
        Ok(self.galois_group()?.is_cyclic())
    }
}

/// `|Aut(L|K)| = gcd(q - 1, e)` for a totally ramified tame extension of
/// index `e`.
pub fn totally_ramified_aut_order(field: LocalField, e: u64) -> Result<u64> {
    if e % field.p() == 0 {
        return Err(Error::WildRamification { e, p: field.p() });
    }
    Ok((field.q() - 1).gcd(&e))
}

/// A subgroup of the Kummer quotient of the base field in the split model
/// `(Z/e) x (Z/e)`: first coordinate the unit part, second the valuation
/// part. Defined in the regime `f = 1`, `e | q - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerSubgroup {
    shape: TameShape,
    generators: Vec<(u64, u64)>,
}

impl KummerSubgroup {
    pub fn new(shape: TameShape, generators: Vec<(u64, u64)>) -> Result<Self> {
        if shape.f != 1 || shape.g() != shape.e {
            return Err(Error::OutsideKummerRegime { e: shape.e, q: shape.field.q() });
        }
        if shape.e > KUMMER_BOUND {
            return Err(Error::EnumerationBound {
                what: "Kummer subgroup enumeration",
                size: shape.e,
                bound: KUMMER_BOUND,
            });
        }
        let e = shape.e;
        let generators = generators.into_iter().map(|(u, v)| (u % e, v % e)).collect();
        Ok(Self { shape, generators })
    }

    #[must_use]
    pub fn shape(&self) -> TameShape {
        self.shape
    }

    #[must_use]
    pub fn generators(&self) -> &[(u64, u64)] {
        &self.generators
    }

    /// Every element of the subgroup, in lexicographic order.
    #[must_use]
    pub fn elements(&self) -> Vec<(u64, u64)> {
        let e = self.shape.e;
        let mut seen = vec![false; (e * e) as usize];
        seen[0] = true;
        let mut stack = vec![(0u64, 0u64)];
        while let Some((u, v)) = stack.pop() {
            for &(gu, gv) in &self.generators {
                let next = ((u + gu) % e, (v + gv) % e);
                let index = (next.0 * e + next.1) as usize;
                if !seen[index] {
                    seen[index] = true;
                    stack.push(next);
                }
            }
        }
        (0..e * e).filter(|&i| seen[i as usize]).map(|i| (i / e, i % e)).collect()
    }

    #[must_use]
    pub fn order(&self) -> u64 {
        self.elements().len() as u64
    }

    /// The intersection with the unit part `(Z/e) x {0}`, which generates
    /// the maximal unramified subextension; returned with a single
    /// canonical generator `(d, 0)`.
    #[must_use]
    pub fn unramified_part(&self) -> KummerSubgroup {
        let e = self.shape.e;
        let mut d = 0u64;
        for (u, v) in self.elements() {
            if v == 0 {
                d = d.gcd(&u);
            }
        }
        let d = d.gcd(&e) % e;
        KummerSubgroup { shape: self.shape, generators: vec![(d, 0)] }
    }
}

/// Per-orbit classification record, shaped for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub rep: u64,
    pub size: u64,
    pub stable: bool,
    pub galoisian: bool,
    pub group: Option<String>,
    pub s: Option<u64>,
    pub closure_degree: u64,
    pub split_degree: Option<u64>,
}

/// Full classification of one shape: counts plus one record per orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub q: u64,
    pub e: u64,
    pub f: u64,
    pub g: u64,
    pub g_f: u64,
    pub orbits: Vec<OrbitReport>,
}

impl ClassifyReport {
    pub fn new(shape: &TameShape) -> Result<Self> {
        let mut orbits = Vec::new();
        for class in shape.orbits()? {
            let line = class.representative_line();
            let galoisian = class.is_galoisian();
            let (group, s, split_degree) = if galoisian {
                let presentation = class.galois_group()?;
                (
                    Some(group_name(&presentation)?.to_string()),
                    Some(presentation.s()),
                    Some(line.split_degree()?),
                )
            } else {
                (None, None, None)
            };
            orbits.push(OrbitReport {
                rep: class.rep(),
                size: class.size(),
                stable: line.is_stable(),
                galoisian,
                group,
                s,
                closure_degree: line.closure_degree(),
                split_degree,
            });
        }
        Ok(ClassifyReport {
            q: shape.field.q(),
            e: shape.e,
            f: shape.f,
            g: shape.g(),
            g_f: shape.g_f(),
            orbits,
        })
    }

    #[must_use]
    pub fn orbit_count(&self) -> u64 {
        self.orbits.len() as u64
    }

    #[must_use]
    pub fn galoisian_count(&self) -> u64 {
        self.orbits.iter().filter(|o| o.galoisian).count() as u64
    }

    /// Whether every class of this shape is abelian (`e | q - 1`).
    #[must_use]
    pub fn abelian(&self) -> bool {
        self.g == self.e
    }
}

/// Recognized name of a presented group, falling back to formula-only
/// recognition (cyclic / abelian invariant factors / generic) when the
/// group is too large to enumerate.
pub fn group_name(presentation: &MetacyclicPresentation) -> Result<GroupName> {
    match presentation.structure_report() {
        Ok(report) => Ok(report.name),
        Err(Error::EnumerationBound { .. }) => Ok(if presentation.is_cyclic() {
            GroupName::Cyclic
        } else if presentation.is_abelian() {
            let d1 = presentation.s().gcd(&presentation.m().gcd(&presentation.n()));
            GroupName::Abelian { d1, d2: presentation.order() / d1 }
        } else {
            GroupName::MetacyclicGeneric
        }),
        Err(other) => Err(other),
    }
}
