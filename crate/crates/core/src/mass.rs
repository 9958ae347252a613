//! The mass formula for tame totally ramified extensions, in its
//! subfield-count form, with exact rational arithmetic throughout.
//!
//! For a tame index `e` there are `g = gcd(q - 1, e)` isomorphism classes
//! of totally ramified extensions, each with automorphism group of order
//! `g`, each represented by `e/g` subfields of a fixed separable closure,
//! and each with discriminant excess 0 — so the subfield-count sum is
//! exactly `e` and the per-class automorphism-weighted sum is exactly 1.
//! Both sums are actually summed class by class here, not read off the
//! closed forms, so the reports double as a check of those identities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tame::LocalField;

/// Exact mass data for one tame totally ramified degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MassReport {
    pub field: LocalField,
    /// The degree `e` being massed.
    pub degree: u64,
    /// Number of isomorphism classes: `g = gcd(q - 1, e)`.
    pub class_count: u64,
    /// `|Aut(L|K)| = g`, the same for every class.
    pub aut_order: u64,
    /// Subfields of a fixed separable closure per class: `e / g`.
    pub subfields_per_class: u64,
    /// Sum over classes of (subfield count) * q^(-discriminant excess).
    pub subfield_count_sum: BigRational,
    /// Sum over classes of q^(-discriminant excess) / |Aut|.
    pub per_class_weighted_sum: BigRational,
}

/// Computes the tame mass report for degree `e` by summation over the
/// classes (every tame class has discriminant excess 0, so each weight is
/// `q^0 = 1`).
pub fn tame_mass(field: LocalField, e: u64) -> Result<MassReport> {
    if e == 0 {
        return Err(Error::InvalidShape("ramification index e must be positive"));
    }
    if e % field.p() == 0 {
        return Err(Error::WildRamification { e, p: field.p() });
    }
    let g = (field.q() - 1).gcd(&e);
    let subfields_per_class = e / g;
    let aut = BigRational::from_integer(BigInt::from(g));
    let per_class_subfields = BigRational::from_integer(BigInt::from(subfields_per_class));

    let mut subfield_count_sum = BigRational::zero();
    let mut per_class_weighted_sum = BigRational::zero();
    for _class in 0..g {
        let weight = discriminant_weight(field.q(), 0);
        subfield_count_sum += &per_class_subfields * &weight;
        per_class_weighted_sum += weight / &aut;
    }
    Ok(MassReport {
        field,
        degree: e,
        class_count: g,
        aut_order: g,
        subfields_per_class,
        subfield_count_sum,
        per_class_weighted_sum,
    })
}

/// `q^(-excess)` as an exact rational.
fn discriminant_weight(q: u64, excess: u32) -> BigRational {
    let power = BigInt::from(q).pow(excess);
    BigRational::new(BigInt::one(), power)
}

/// The degree-`e*p` mass obtained from the tame degree-`e` subfield count
/// and a caller-supplied wild degree-`p` inner mass: discriminant
/// excesses add along towers, so the double sum collapses to
/// `e * wild_mass_axiom`. The wild inner value is an input, never
/// computed here.
pub fn tame_wild_reduction(
    field: LocalField,
    e: u64,
    wild_mass_axiom: &BigRational,
) -> Result<BigRational> {
    let tame = tame_mass(field, e)?;
    Ok(tame.subfield_count_sum * wild_mass_axiom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> LocalField {
        LocalField::new(q).unwrap()
    }

    fn rat(n: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn subfield_count_examples() {
        let report = tame_mass(field(5), 6).unwrap();
        assert_eq!(report.subfield_count_sum, rat(6));
        assert_eq!(report.per_class_weighted_sum, rat(1));
        assert_eq!((report.class_count, report.aut_order, report.subfields_per_class), (2, 2, 3));

        assert_eq!(tame_mass(field(3), 1).unwrap().subfield_count_sum, rat(1));

        let report = tame_mass(field(7), 12).unwrap();
        assert_eq!(report.subfield_count_sum, rat(12));
        assert_eq!((report.class_count, report.subfields_per_class), (6, 2));
    }

    #[test]
    fn structural_identities_over_a_grid() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49] {
            let k = field(q);
            for e in 1..=48 {
                if e % k.p() == 0 {
                    assert!(matches!(tame_mass(k, e), Err(Error::WildRamification { .. })));
                    continue;
                }
                let report = tame_mass(k, e).unwrap();
                assert_eq!(report.subfield_count_sum, rat(e), "q={q} e={e}");
                assert_eq!(report.per_class_weighted_sum, rat(1), "q={q} e={e}");
                assert_eq!(report.subfields_per_class * report.aut_order, e);
                assert_eq!(
                    report.subfield_count_sum,
                    rat(report.class_count * report.subfields_per_class)
                );
            }
        }
    }

    #[test]
    fn class_count_matches_level_one_orbits() {
        use crate::tame::TameShape;
        for q in [3u64, 4, 5, 7, 9, 25] {
            let k = field(q);
            for e in 1..=30 {
                if e % k.p() == 0 {
                    continue;
                }
                let orbits = TameShape::new(k, e, 1).unwrap().orbits().unwrap();
                assert_eq!(tame_mass(k, e).unwrap().class_count, orbits.len() as u64);
            }
        }
    }

    #[test]
    fn wild_reduction_examples() {
        assert_eq!(tame_wild_reduction(field(3), 4, &rat(3)).unwrap(), rat(12));
        assert_eq!(tame_wild_reduction(field(3), 1, &rat(3)).unwrap(), rat(3));
        assert_eq!(tame_wild_reduction(field(5), 2, &rat(5)).unwrap(), rat(10));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(tame_wild_reduction(field(5), 4, &half).unwrap(), rat(2));
        assert!(matches!(
            tame_wild_reduction(field(3), 6, &rat(3)),
            Err(Error::WildRamification { .. })
        ));
    }

    #[test]
    fn rejects_degenerate_degree() {
        assert!(matches!(tame_mass(field(3), 0), Err(Error::InvalidShape(_))));
    }
}
