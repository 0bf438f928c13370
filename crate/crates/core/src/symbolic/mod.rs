//! Free expressions over named generators: bracketed words, alternating
//! templates, the generator-element catalog, linearization, evaluation on the
//! generating algebra and exact-rank independence checks.

pub mod catalog;
pub mod certificate;
mod evaluate;
mod expr;
mod linearize;
mod multi;
pub mod rank;
mod template;

pub use catalog::{generator_element, shape, CatalogId, Family, ShapeParams};
pub use certificate::{
    evaluation_matrix, independence_certificate, search_substitutions, substitution_pool, Certificate,
};
pub use evaluate::{evaluate, Substitution};
pub use expr::{Expr, Name};
pub use linearize::{linearize, linearize_completely, linearize_expr};
pub use multi::MultiElement;
pub use template::{
    expand_alternations, signed_permutations, standard_polynomial, AlternatingTemplate, Block, Slot,
    DECORATIONS,
};

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use num_rational::BigRational;
    use proptest::prelude::*;

    use super::*;
    use crate::algebra::random::ElementSampler;

    fn names(k: usize) -> Vec<Name> {
        (1..=k).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn st_template_equals_standard_polynomial() {
        for n in 1..=5 {
            let t: AlternatingTemplate = format!("~St{n}").parse().unwrap();
            assert_eq!(t.expand(), standard_polynomial(&names(n)).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn transposition_negates() {
        for n in 2..=4 {
            let t: AlternatingTemplate = format!("x1 ~St{n} X1").parse().unwrap();
            let base = t.expand();
            for i in 0..n {
                for j in i + 1..n {
                    let mut swapped = t.sets().clone();
                    swapped.get_mut(&'~').unwrap().swap(i, j);
                    let e = expand_alternations(&t.skeleton().unwrap(), &swapped).unwrap();
                    assert_eq!(e, -base.clone(), "n = {n}, ({i} {j})");
                }
            }
        }
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-20i64..=20, 1i64..=20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn evaluate_is_linear(alpha in small_rational(), beta in small_rational(), seed in any::<u64>()) {
            let e = generator_element("h11(1)".parse().unwrap(), &"m=1,k=2".parse().unwrap()).unwrap().expand();
            let f = generator_element("h11(2)".parse().unwrap(), &"m=1,k=2".parse().unwrap()).unwrap().expand();
            let sampler = ElementSampler::new(3, 10);
            let s: Substitution = (0..2u64)
                .map(|i| (format!("x{}", i + 1), sampler.sample_seeded(seed.wrapping_add(i))))
                .collect::<BTreeMap<_, _>>()
                .into_iter()
                .collect();
            let combined = e.scale(&alpha) + f.scale(&beta);
            let lhs = evaluate(&combined, &s).unwrap();
            let rhs = evaluate(&e, &s).unwrap().scale(&alpha) + evaluate(&f, &s).unwrap().scale(&beta);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
