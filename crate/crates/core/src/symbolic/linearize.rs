use std::collections::BTreeSet;

use itertools::Itertools;

use super::expr::{Expr, Name};
use super::multi::MultiElement;
use crate::error::{Error, Result};

/// Replaces the `d` occurrences of `var` in every term by `var1 … vard` in
/// all `d!` orders: the multilinear part of `e(var1 + … + vard)`.
///
/// A variable of multiplicity one is only renamed.
pub fn linearize(e: &MultiElement, var: &str) -> Result<MultiElement> {
    let mut degree = None;
    for (term, _) in e.terms() {
        let d = term.occurrences(var);
        match degree {
            None => degree = Some(d),
            Some(prev) if prev != d => return Err(Error::NonHomogeneous { var: var.to_string() }),
            Some(_) => {}
        }
    }
    let d = match degree {
        Some(d) if d > 0 => d,
        _ => return Err(Error::AbsentVariable(var.to_string())),
    };
    let fresh: Vec<Name> = (1..=d).map(|i| format!("{var}{i}")).collect();
    let existing = e.generators();
    if let Some(clash) = fresh.iter().find(|n| existing.contains(n)) {
        return Err(Error::NameCollision(clash.clone()));
    }

    let mut out = MultiElement::zero();
    for (term, c) in e.terms() {
        for order in (0..d).permutations(d) {
            let mut seen = 0;
            let renamed = term.map(&mut |n: &Name| {
                if n == var {
                    seen += 1;
                    fresh[order[seen - 1]].clone()
                } else {
                    n.clone()
                }
            });
            out.add_term(renamed, c.clone());
        }
    }
    Ok(out)
}

/// Linearizes every variable that occurs more than once, in name order.
pub fn linearize_completely(e: &MultiElement) -> Result<MultiElement> {
    let repeated: BTreeSet<Name> = e
        .terms()
        .flat_map(|(t, _)| {
            t.leaves()
                .into_iter()
                .filter(|n| t.occurrences(n) > 1)
                .cloned()
                .collect::<Vec<_>>()
        })
        .collect();
    repeated.iter().try_fold(e.clone(), |acc, v| linearize(&acc, v))
}

/// Convenience for single expressions.
pub fn linearize_expr(e: &Expr, var: &str) -> Result<MultiElement> {
    linearize(&MultiElement::from_expr(e.clone()), var)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;

    fn m(s: &str) -> MultiElement {
        MultiElement::from_expr(s.parse().unwrap())
    }

    #[test]
    fn nested_example() {
        let once = linearize(&m("x0(xy)(xy)"), "x").unwrap();
        assert_eq!(once.to_string(), "x0(x1y)(x2y) + x0(x2y)(x1y)");
        let twice = linearize(&once, "y").unwrap();
        assert_eq!(
            twice.to_string(),
            "x0(x1y1)(x2y2) + x0(x1y2)(x2y1) + x0(x2y1)(x1y2) + x0(x2y2)(x1y1)"
        );
        assert_eq!(linearize_completely(&m("x0(xy)(xy)")).unwrap(), twice);
    }

    #[test]
    fn multiplicity_one_renames() {
        let out = linearize(&m("xyz"), "y").unwrap();
        assert_eq!(out.to_string(), "xy1z");
    }

    #[test]
    fn resubstitution_gives_factorial_multiple() {
        let e = m("x0(xy)(xy)");
        let lin = linearize(&e, "x").unwrap();
        let back = BTreeMap::from([("x1".to_string(), "x".to_string()), ("x2".to_string(), "x".to_string())]);
        assert_eq!(lin.rename(&back), e.scale(&BigRational::from_integer(BigInt::from(2))));
    }

    #[test]
    fn errors() {
        assert_eq!(linearize(&m("xy"), "z"), Err(Error::AbsentVariable("z".into())));
        assert_eq!(linearize(&m("xx1"), "x"), Err(Error::NameCollision("x1".into())));
        let mixed = m("xxy") + m("xy");
        assert_eq!(linearize(&mixed, "x"), Err(Error::NonHomogeneous { var: "x".into() }));
    }
}
