//! The generating algebra: the Heisenberg algebra `⟨a, b, c | ba = −ab = c⟩`
//! plus the polynomial ring `ℚ[t]` as a right module (`fa = f′`, `fb = tf`,
//! `fc = f`), with product `(x + f)(y + g) = xy + fy`.

mod element;
mod polynomial;
pub mod random;

pub use element::{left_normed_product, leibniz_defect, right_power, LeibnizElement};
pub use polynomial::RationalPolynomial;

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::random::ElementSampler;
    use super::*;

    fn element() -> impl Strategy<Value = LeibnizElement> {
        any::<u64>().prop_map(|seed| ElementSampler::new(6, 100).sample_seeded(seed))
    }

    fn basis() -> Vec<LeibnizElement> {
        vec![
            LeibnizElement::a(),
            LeibnizElement::b(),
            LeibnizElement::c(),
            LeibnizElement::t_pow(0),
            LeibnizElement::t_pow(1),
            LeibnizElement::t_pow(2),
        ]
    }

    #[test]
    fn defect_vanishes_on_basis_triples() {
        let basis = basis();
        let mut checked = 0;
        for u in &basis {
            for v in &basis {
                for w in &basis {
                    assert!(leibniz_defect(u, v, w).is_zero(), "{u}, {v}, {w}");
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 216);
    }

    #[test]
    fn lie_part_is_nilpotent_of_class_two() {
        let sampler = ElementSampler::new(0, 50);
        let mut rng = super::random::rng(7);
        for _ in 0..200 {
            let xs: Vec<_> = (0..3)
                .map(|_| {
                    let mut x = sampler.sample(&mut rng);
                    x.poly = RationalPolynomial::zero();
                    x
                })
                .collect();
            assert!(left_normed_product(&xs).unwrap().is_zero());
        }
    }

    #[test]
    fn powers_of_a_and_b() {
        let f: LeibnizElement = "[1 + 3t^2 - t^5]".parse().unwrap();
        assert_eq!(right_power(&f, &LeibnizElement::b(), 4).poly.degree(), Some(9));
        let second = right_power(&f, &LeibnizElement::a(), 2);
        assert_eq!(second.poly, f.poly.derivative().derivative());
        assert!(right_power(&f, &LeibnizElement::a(), 6).is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn multiply_is_bilinear(x in element(), x2 in element(), y in element(), y2 in element()) {
            prop_assert_eq!(
                (x.clone() + x2.clone()).multiply(&y),
                x.multiply(&y) + x2.multiply(&y)
            );
            prop_assert_eq!(
                x.multiply(&(y.clone() + y2.clone())),
                x.multiply(&y) + x.multiply(&y2)
            );
        }

        #[test]
        fn defect_vanishes(u in element(), v in element(), w in element()) {
            prop_assert!(leibniz_defect(&u, &v, &w).is_zero());
        }

        #[test]
        fn right_polynomial_part_is_ignored(x in element(), y in element(), g in element()) {
            let mut shifted = y.clone();
            shifted.poly += &g.poly;
            prop_assert_eq!(x.multiply(&y), x.multiply(&shifted));
        }

        #[test]
        fn text_round_trip(x in element()) {
            let back: LeibnizElement = x.to_string().parse().unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
