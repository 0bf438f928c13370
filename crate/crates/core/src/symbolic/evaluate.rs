use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::expr::{Expr, Name};
use super::multi::MultiElement;
use crate::algebra::LeibnizElement;
use crate::error::{Error, Result};

/// An assignment of generators to elements of the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Substitution {
    assignment: BTreeMap<Name, LeibnizElement>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: impl Into<Name>, value: LeibnizElement) -> Self {
        self.assignment.insert(name.into(), value);
        self
    }

    pub fn insert(&mut self, name: impl Into<Name>, value: LeibnizElement) {
        self.assignment.insert(name.into(), value);
    }

    pub fn get(&self, name: &str) -> Result<&LeibnizElement> {
        self.assignment
            .get(name)
            .ok_or_else(|| Error::Unassigned(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, &LeibnizElement)> {
        self.assignment.iter()
    }
}

impl FromIterator<(Name, LeibnizElement)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (Name, LeibnizElement)>>(iter: I) -> Self {
        Substitution {
            assignment: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Substitution {
    /// `x1=a; x2=b + [t]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, v)) in self.assignment.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{n}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for Substitution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Substitution::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| Error::parse(part, "expected `name=element`"))?;
            let name = name.trim();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Err(Error::parse(name, "expected a generator name"));
            }
            out.insert(name, value.parse()?);
        }
        Ok(out)
    }
}

fn evaluate_tree(e: &Expr, s: &Substitution) -> Result<LeibnizElement> {
    match e {
        Expr::Leaf(n) => s.get(n).cloned(),
        Expr::Mul(a, b) => {
            let left = evaluate_tree(a, s)?;
            Ok(left.multiply(&evaluate_tree(b, s)?))
        }
    }
}

/// Evaluates every term in the algebra and sums with coefficients.
///
/// Integral inputs go through checked machine arithmetic first; any overflow
/// or fractional value falls back to exact rationals, so the result is exact
/// either way.
pub fn evaluate(e: &MultiElement, s: &Substitution) -> Result<LeibnizElement> {
    if let Some(v) = small::evaluate(e, s)? {
        return Ok(v);
    }
    evaluate_exact(e, s)
}

/// [`evaluate`] without the machine-integer path.
pub fn evaluate_exact(e: &MultiElement, s: &Substitution) -> Result<LeibnizElement> {
    let mut total = LeibnizElement::zero();
    // prefix[i] is the value of the first i + 1 letters of `prev`
    let mut prev: Vec<&Name> = Vec::new();
    let mut prefix: Vec<LeibnizElement> = Vec::new();
    for (expr, c) in e.terms() {
        let value = match expr.as_word() {
            Some(word) => {
                let shared = prev.iter().zip(&word).take_while(|(a, b)| a == b).count();
                prefix.truncate(shared);
                for (i, name) in word.iter().enumerate().skip(shared) {
                    let x = s.get(name)?;
                    let next = match i {
                        0 => x.clone(),
                        _ => prefix[i - 1].multiply(x),
                    };
                    prefix.push(next);
                }
                prev = word;
                prefix.last().expect("words are nonempty").clone()
            }
            None => evaluate_tree(expr, s)?,
        };
        if !value.is_zero() {
            total += &value.scale(c);
        }
    }
    Ok(total)
}

/// The same product on elements with `i128` coefficients and dense
/// polynomials. Every operation is checked; `None` means "use rationals".
mod small {
    use std::collections::BTreeMap;

    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::ToPrimitive;

    use super::{Expr, MultiElement, Name, Substitution};
    use crate::algebra::{LeibnizElement, RationalPolynomial};
    use crate::error::Result;

    #[derive(Clone, Default)]
    struct Small {
        alpha: i128,
        beta: i128,
        gamma: i128,
        poly: Vec<i128>,
    }

    fn int(q: &BigRational) -> Option<i128> {
        if q.is_integer() {
            q.numer().to_i128()
        } else {
            None
        }
    }

    impl Small {
        fn from(x: &LeibnizElement) -> Option<Small> {
            let len = x.poly.degree().map_or(0, |d| d as usize + 1);
            let mut poly = vec![0; len];
            for (d, c) in x.poly.terms() {
                poly[d as usize] = int(c)?;
            }
            Some(Small {
                alpha: int(&x.alpha)?,
                beta: int(&x.beta)?,
                gamma: int(&x.gamma)?,
                poly,
            })
        }

        fn into_element(self) -> LeibnizElement {
            let q = |v: i128| BigRational::from_integer(BigInt::from(v));
            LeibnizElement {
                alpha: q(self.alpha),
                beta: q(self.beta),
                gamma: q(self.gamma),
                poly: RationalPolynomial::from_terms(
                    self.poly.iter().enumerate().map(|(d, &c)| (d as u32, q(c))),
                ),
            }
        }

        /// `f·self = αf′ + βtf + γf`.
        fn act_on(&self, f: &[i128]) -> Option<Vec<i128>> {
            let mut out = vec![0i128; f.len() + 1];
            for (d, &c) in f.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                if d > 0 {
                    let v = self.alpha.checked_mul(c)?.checked_mul(d as i128)?;
                    out[d - 1] = out[d - 1].checked_add(v)?;
                }
                out[d + 1] = out[d + 1].checked_add(self.beta.checked_mul(c)?)?;
                out[d] = out[d].checked_add(self.gamma.checked_mul(c)?)?;
            }
            while out.last() == Some(&0) {
                out.pop();
            }
            Some(out)
        }

        fn multiply(&self, rhs: &Small) -> Option<Small> {
            let gamma = self.beta.checked_mul(rhs.alpha)?.checked_sub(self.alpha.checked_mul(rhs.beta)?)?;
            Some(Small {
                alpha: 0,
                beta: 0,
                gamma,
                poly: rhs.act_on(&self.poly)?,
            })
        }

        fn add_scaled(&mut self, x: &Small, c: i128) -> Option<()> {
            self.alpha = self.alpha.checked_add(x.alpha.checked_mul(c)?)?;
            self.beta = self.beta.checked_add(x.beta.checked_mul(c)?)?;
            self.gamma = self.gamma.checked_add(x.gamma.checked_mul(c)?)?;
            if self.poly.len() < x.poly.len() {
                self.poly.resize(x.poly.len(), 0);
            }
            for (a, &b) in self.poly.iter_mut().zip(&x.poly) {
                *a = a.checked_add(b.checked_mul(c)?)?;
            }
            Some(())
        }

        fn is_zero(&self) -> bool {
            self.alpha == 0 && self.beta == 0 && self.gamma == 0 && self.poly.iter().all(|&c| c == 0)
        }
    }

    fn tree(e: &Expr, values: &BTreeMap<&Name, Small>) -> Option<Small> {
        match e {
            Expr::Leaf(n) => values.get(n).cloned(),
            Expr::Mul(a, b) => tree(a, values)?.multiply(&tree(b, values)?),
        }
    }

    pub(super) fn evaluate(e: &MultiElement, s: &Substitution) -> Result<Option<LeibnizElement>> {
        let mut values = BTreeMap::new();
        for name in e.generators() {
            match Small::from(s.get(name)?) {
                Some(v) => values.insert(name, v),
                None => return Ok(None),
            };
        }
        Ok(run(e, &values).map(Small::into_element))
    }

    fn run(e: &MultiElement, values: &BTreeMap<&Name, Small>) -> Option<Small> {
        let mut total = Small::default();
        let mut prev: Vec<&Name> = Vec::new();
        let mut prefix: Vec<Small> = Vec::new();
        for (expr, c) in e.terms() {
            let c = int(c)?;
            let value = match expr.as_word() {
                Some(word) => {
                    let shared = prev.iter().zip(&word).take_while(|(a, b)| a == b).count();
                    prefix.truncate(shared);
                    for (i, name) in word.iter().enumerate().skip(shared) {
                        let x = &values[name];
                        let next = match i {
                            0 => x.clone(),
                            // a zero prefix stays zero
                            _ if prefix[i - 1].is_zero() => Small::default(),
                            _ => prefix[i - 1].multiply(x)?,
                        };
                        prefix.push(next);
                    }
                    prev = word;
                    total.add_scaled(prefix.last()?, c)?;
                    continue;
                }
                None => tree(expr, values)?,
            };
            total.add_scaled(&value, c)?;
        }
        Some(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::template::standard_polynomial;

    fn el(s: &str) -> LeibnizElement {
        s.parse().unwrap()
    }

    #[test]
    fn standard_polynomial_on_a_b() {
        let st2 = standard_polynomial(&["x1".into(), "x2".into()]).unwrap();
        let s: Substitution = "x1=a; x2=b".parse().unwrap();
        assert_eq!(evaluate(&st2, &s).unwrap(), el("-2c"));
    }

    #[test]
    fn nested_tree_evaluation() {
        let e = MultiElement::from_expr("x(yz)".parse().unwrap());
        let s: Substitution = "x=[t^2]; y=b; z=a".parse().unwrap();
        // x·(ba) = x·c = t²
        assert_eq!(evaluate(&e, &s).unwrap(), el("[t^2]"));
    }

    #[test]
    fn unassigned_generator_is_an_error() {
        let e = MultiElement::from_expr("x1x2".parse().unwrap());
        let s: Substitution = "x1=a".parse().unwrap();
        assert_eq!(evaluate(&e, &s), Err(Error::Unassigned("x2".into())));
    }

    #[test]
    fn prefix_cache_matches_direct_evaluation() {
        let st3 = standard_polynomial(&["x1".into(), "x2".into(), "x3".into()]).unwrap();
        let s: Substitution = "x1=a + [t^3]; x2=b - [1]; x3=(1/2)c + [t]".parse().unwrap();
        let direct = st3
            .terms()
            .map(|(e, c)| evaluate_tree(e, &s).unwrap().scale(c))
            .fold(LeibnizElement::zero(), |acc, v| acc + v);
        assert_eq!(evaluate(&st3, &s).unwrap(), direct);
    }

    #[test]
    fn machine_path_matches_rationals() {
        use crate::algebra::random::{rng, ElementSampler};
        let st3 = standard_polynomial(&["x1".into(), "x2".into(), "x3".into()]).unwrap();
        let e = st3.clone() + MultiElement::from_expr("x1(x2x3)".parse().unwrap());
        let sampler = ElementSampler::new(4, 9);
        let mut r = rng(3);
        for _ in 0..50 {
            let s: Substitution = (1..=3).map(|i| (format!("x{i}"), sampler.sample_integral(&mut r))).collect();
            assert_eq!(small::evaluate(&e, &s).unwrap(), Some(evaluate_exact(&e, &s).unwrap()));
        }
        // fractional input takes the exact path
        let s: Substitution = "x1=(1/2)a; x2=b; x3=c".parse().unwrap();
        assert_eq!(small::evaluate(&st3, &s).unwrap(), None);
    }

    #[test]
    fn overflow_falls_back() {
        let big = format!("{}", i128::MAX / 2);
        let s: Substitution = format!("x1=[{big}t^2]; x2={big}a; x3={big}a").parse().unwrap();
        let e = MultiElement::from_expr("x1x2x3".parse().unwrap());
        assert_eq!(small::evaluate(&e, &s).unwrap(), None);
        assert!(!evaluate(&e, &s).unwrap().is_zero());
    }

    #[test]
    fn substitution_text_round_trip() {
        let s: Substitution = "x1=a; x2=b + [t]".parse().unwrap();
        assert_eq!(s.to_string(), "x1=a; x2=b + [t]");
        assert!("x1".parse::<Substitution>().is_err());
        assert!("x 1=a".parse::<Substitution>().is_err());
    }
}
