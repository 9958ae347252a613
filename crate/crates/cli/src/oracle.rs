//! Brute-force cross-check suites: the two class definitions over a shape
//! grid, cocycle-table H^2 counts against the closed form, and full group
//! enumeration against the structure predicates. Any disagreement aborts
//! with an oracle-mismatch error; cases beyond the library's enumeration
//! rails are skipped, never silently trusted.

use tameram::cyccoh::COCYCLE_BOUND;
use tameram::groups::ENUMERATION_BOUND;
use tameram::{CyclicAction, LocalField, MetacyclicPresentation, Nat, TameShape};

use crate::CliError;

pub struct OracleBounds {
    pub q_max: u64,
    pub e_max: u64,
    pub f_max: u64,
    pub cocycle_max: u64,
    pub group_max: u64,
}

pub fn run_all(bounds: &OracleBounds) -> Result<(), CliError> {
    let checked = class_equivalence(bounds.q_max, bounds.e_max, bounds.f_max)?;
    println!(
        "oracle: class equivalence grid (q <= {}, e <= {}, f <= {}) ... ok ({checked} stable lines)",
        bounds.q_max, bounds.e_max, bounds.f_max
    );
    let checked = cocycle_tables(bounds.cocycle_max)?;
    println!("oracle: cocycle tables (m, n <= {}) ... ok ({checked} actions)", bounds.cocycle_max);
    let checked = group_structures(bounds.group_max)?;
    println!(
        "oracle: group structure enumeration (m, n <= {}) ... ok ({checked} presentations)",
        bounds.group_max
    );
    println!("all oracle suites passed");
    Ok(())
}

/// Every stable line in the regime `e | q^f - 1` must get the same class,
/// rep and order, from the quotient description and from the norm
/// computation at the level of units.
fn class_equivalence(q_max: u64, e_max: u64, f_max: u64) -> Result<u64, CliError> {
    let mut checked = 0u64;
    for q in 2..=q_max {
        let field = match LocalField::new(q) {
            Ok(field) => field,
            Err(tameram::Error::NotPrimePower(_)) => continue,
            Err(err) => return Err(err.into()),
        };
        for e in 1..=e_max {
            if e % field.p() == 0 {
                continue;
            }
            for f in 1..=f_max {
                let shape = TameShape::new(field, e, f)?;
                if shape.g_f() != shape.e() {
                    continue;
                }
                for line in shape.lines()? {
                    if !line.is_stable() {
                        continue;
                    }
                    let quotient = line.class_via_quotient()?;
                    let norm = line.class_via_norm()?;
                    if quotient.rep() != norm.rep() || quotient.order() != norm.order() {
                        return Err(CliError::OracleMismatch(format!(
                            "class definitions disagree at q={q} e={e} f={f} x={}: \
                             quotient rep {} order {}, norm rep {} order {}",
                            line.x(),
                            quotient.rep(),
                            quotient.order(),
                            norm.rep(),
                            norm.order()
                        )));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// The H^2 closed form must match the count of cocycle tables modulo
/// coboundaries for every action small enough to enumerate.
fn cocycle_tables(max: u64) -> Result<u64, CliError> {
    let mut checked = 0u64;
    for m in 1..=max {
        for n in 1..=max {
            if !cocycle_feasible(m, n) {
                continue;
            }
            for a in 1..=m {
                let Ok(action) = CyclicAction::from_u64(m, n, a) else { continue };
                let closed_form = action.h2_order();
                let table_count = action.h2_order_bruteforce()?;
                if closed_form != Nat::from(table_count) {
                    return Err(CliError::OracleMismatch(format!(
                        "h2 counts disagree for (m, n, a) = ({m}, {n}, {a}): \
                         formula {closed_form}, tables {table_count}"
                    )));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Whether `m^(n^2)` tables fit under the brute-force ceiling.
fn cocycle_feasible(m: u64, n: u64) -> bool {
    if m == 1 {
        return true;
    }
    n.checked_mul(n)
        .and_then(|cells| u32::try_from(cells).ok())
        .and_then(|cells| m.checked_pow(cells))
        .is_some_and(|size| size <= COCYCLE_BOUND)
}

/// The cyclicity and commutativity formulas must match what element
/// enumeration says: some element of full order, and all pairs commuting.
fn group_structures(max: u64) -> Result<u64, CliError> {
    let mut checked = 0u64;
    for m in 1..=max {
        for n in 1..=max {
            if m.saturating_mul(n) > ENUMERATION_BOUND {
                continue;
            }
            for a in 1..=m {
                for s in 0..m {
                    let Ok(group) = MetacyclicPresentation::new(m, n, a, s) else { continue };
                    let report = group.structure_report()?;
                    let elements: Vec<_> = group.elements().collect();
                    let max_order = elements
                        .iter()
                        .map(|&x| group.element_order(x))
                        .max()
                        .expect("groups are nonempty");
                    if report.is_cyclic != (max_order == group.order()) {
                        return Err(CliError::OracleMismatch(format!(
                            "cyclicity disagrees for (m, n, a, s) = ({m}, {n}, {a}, {s}): \
                             formula {}, largest element order {max_order} in a group of order {}",
                            report.is_cyclic,
                            group.order()
                        )));
                    }
                    let commutes = elements.iter().all(|&x| {
                        elements.iter().all(|&y| group.multiply(x, y) == group.multiply(y, x))
                    });
                    if report.is_abelian != commutes {
                        return Err(CliError::OracleMismatch(format!(
                            "commutativity disagrees for (m, n, a, s) = ({m}, {n}, {a}, {s}): \
                             formula {}, enumerated {commutes}",
                            report.is_abelian
                        )));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}
