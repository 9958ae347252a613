//! Complete classification of galoisian extensions of degree l^3 for a
//! prime l different from the residue characteristic.
//!
//! Nonabelian galoisian degree-l^3 extensions exist exactly when the
//! l-adic valuation of q - 1 is 1, and then only with invariants
//! (e, f) = (l^2, l). In that shape there are l of them: for l = 2 the
//! dihedral and quaternion groups of order 8, for odd l always the
//! nonabelian group of order l^3 and exponent l^2. For l = 2 the two
//! non-galoisian lines merge under base change; the report carries that
//! closure-and-splitting story as explicit levels.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{self, Nat, PrimePower};
use crate::error::{Error, Result};
use crate::tame::{group_name, ExtensionClass, LocalField, TameShape};

/// Largest power of `l` dividing `x`; `x` must be nonzero and `l` prime.
pub fn l_adic_valuation(x: &Nat, l: u64) -> Result<u64> {
    require_prime(l)?;
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let divisor = Nat::from(l);
    let mut rest = x.clone();
    let mut valuation = 0;
    while (&rest % &divisor).is_zero() {
        rest /= &divisor;
        valuation += 1;
    }
    Ok(valuation)
}

fn require_prime(l: u64) -> Result<()> {
    match PrimePower::new(l) {
        Ok(pp) if pp.r() == 1 => Ok(()),
        _ => Err(Error::NotPrime(l)),
    }
}

/// One galoisian degree-l^3 extension in the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L3Extension {
    pub x: u64,
    pub group: String,
    pub order: u64,
    pub split_degree: u64,
}

/// The l = 2 closure story: the two non-galoisian lines, where they merge
/// under base change, and where the merged class finally splits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L3Narrative {
    pub non_galoisian_orbit: Vec<u64>,
    pub closure_degree: u64,
    pub closure_level: u64,
    pub merged_line: u64,
    pub merged_class_order: u64,
    pub split_level: u64,
}

/// Orbit counts for one abelian degree-l^3 shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianShapeCount {
    pub e: u64,
    pub f: u64,
    pub line_count: u64,
    pub orbit_count: u64,
    pub galoisian_count: u64,
}

/// The full degree-l^3 classification for one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L3Report {
    pub q: u64,
    pub l: u64,
    pub v_l_q_minus_1: u64,
    /// Whether nonabelian galoisian degree-l^3 extensions exist at all.
    pub feasible: bool,
    /// The only possible nonabelian shape, `(l^2, l)`, when feasible.
    pub e: Option<u64>,
    pub f: Option<u64>,
    pub line_count: u64,
    pub orbit_count: u64,
    pub galoisian_count: u64,
    pub extensions: Vec<L3Extension>,
    pub narrative: Option<L3Narrative>,
    pub abelian_shapes: Option<Vec<AbelianShapeCount>>,
}

/// Classifies the galoisian extensions of degree l^3 of the field; with
/// `include_abelian`, also counts the abelian shapes (1, l^3), (l, l^2)
/// and (l^3, 1).
pub fn classify_l3(field: LocalField, l: u64, include_abelian: bool) -> Result<L3Report> {
    require_prime(l)?;
    if l == field.p() {
        return Err(Error::ResidualPrime(l));
    }
    let valuation = l_adic_valuation(&Nat::from(field.q() - 1), l)?;
    let feasible = valuation == 1;
    let mut report = L3Report {
        q: field.q(),
        l,
        v_l_q_minus_1: valuation,
        feasible,
        e: None,
        f: None,
        line_count: 0,
        orbit_count: 0,
        galoisian_count: 0,
        extensions: Vec::new(),
        narrative: None,
        abelian_shapes: None,
    };
    if include_abelian {
        report.abelian_shapes = Some(abelian_shape_counts(field, l)?);
    }
    if !feasible {
        return Ok(report);
    }

    let shape = TameShape::new(field, l * l, l)?;
    report.e = Some(l * l);
    report.f = Some(l);
    report.line_count = shape.g_f();
    let orbits = shape.orbits()?;
    report.orbit_count = orbits.len() as u64;
    for class in &orbits {
        if !class.is_galoisian() {
            continue;
        }
        let presentation = class.galois_group()?;
        report.extensions.push(L3Extension {
            x: class.rep(),
            group: group_name(&presentation)?.to_string(),
            order: presentation.order(),
            split_degree: class.representative_line().split_degree()?,
        });
    }
    report.galoisian_count = report.extensions.len() as u64;
    if l == 2 {
        report.narrative = Some(narrative(&shape, &orbits)?);
    }
    Ok(report)
}

fn narrative(shape: &TameShape, orbits: &[ExtensionClass]) -> Result<L3Narrative> {
    let wandering = orbits
        .iter()
        .find(|class| class.size() > 1)
        .expect("the feasible l = 2 shape always has the merged pair of lines");
    let line = wandering.representative_line();
    let closure_degree = line.closure_degree();
    let closure_level = closure_degree * shape.f();
    let merged = line.base_change(closure_level)?;
    let merged_class_order =
        arith::to_u64(&merged.class_via_quotient()?.order(), "merged class order")?;
    Ok(L3Narrative {
        non_galoisian_orbit: wandering.orbit().to_vec(),
        closure_degree,
        closure_level,
        merged_line: merged.x(),
        merged_class_order,
        split_level: merged_class_order * closure_level,
    })
}

fn abelian_shape_counts(field: LocalField, l: u64) -> Result<Vec<AbelianShapeCount>> {
    let cube = l * l * l;
    let mut out = Vec::new();
    for (e, f) in [(1, cube), (l, l * l), (cube, 1)] {
        let shape = TameShape::new(field, e, f)?;
        let orbits = shape.orbits()?;
        out.push(AbelianShapeCount {
            e,
            f,
            line_count: shape.g_f(),
            orbit_count: orbits.len() as u64,
            galoisian_count: orbits.iter().filter(|c| c.is_galoisian()).count() as u64,
        });
    }
    Ok(out)
}
