use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::expr::{Expr, Name};

/// A rational linear combination of bracketed words. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiElement {
    terms: BTreeMap<Expr, BigRational>,
}

impl MultiElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_expr(e: Expr) -> Self {
        let mut m = Self::zero();
        m.add_term(e, BigRational::one());
        m
    }

    pub fn add_term(&mut self, e: Expr, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Expr) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in canonical (sorted) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Expr, &BigRational)> {
        self.terms.iter()
    }

    pub fn generators(&self) -> BTreeSet<&Name> {
        self.terms.keys().flat_map(|e| e.leaves()).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiElement {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Substitutes generator names; merging terms may cancel.
    pub fn rename(&self, map: &BTreeMap<Name, Name>) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let renamed = e.map(&mut |n: &Name| map.get(n).cloned().unwrap_or_else(|| n.clone()));
            out.add_term(renamed, c.clone());
        }
        out
    }
}

impl FromIterator<(Expr, BigRational)> for MultiElement {
    fn from_iter<I: IntoIterator<Item = (Expr, BigRational)>>(iter: I) -> Self {
        let mut m = MultiElement::zero();
        for (e, c) in iter {
            m.add_term(e, c);
        }
        m
    }
}

impl Add for MultiElement {
    type Output = MultiElement;

    fn add(mut self, rhs: MultiElement) -> MultiElement {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for MultiElement {
    type Output = MultiElement;

    fn neg(self) -> MultiElement {
        MultiElement {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for MultiElement {
    type Output = MultiElement;

    fn sub(self, rhs: MultiElement) -> MultiElement {
        self + (-rhs)
    }
}

impl fmt::Display for MultiElement {
    /// `x1x2 - x2x1`, `2*x1x2`, `(1/2)*x1`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = c.abs();
            if !c.is_one() {
                if c.is_integer() {
                    write!(f, "{}*", c.numer())?;
                } else {
                    write!(f, "({}/{})*", c.numer(), c.denom())?;
                }
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Expr {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation_keeps_normal_form() {
        let mut m = MultiElement::from_expr(e("x1x2"));
        m.add_term(e("x2x1"), -BigRational::one());
        assert_eq!(m.to_string(), "x1x2 - x2x1");
        m.add_term(e("x1x2"), -BigRational::one());
        assert_eq!(m.len(), 1);
        assert_eq!(m.to_string(), "-x2x1");
        let z = m.clone() - m;
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn rename_merges_terms() {
        let m = MultiElement::from_expr(e("x1y")) + MultiElement::from_expr(e("x2y"));
        let map = BTreeMap::from([("x1".to_string(), "x".to_string()), ("x2".to_string(), "x".to_string())]);
        let r = m.rename(&map);
        assert_eq!(r.to_string(), "2*xy");
    }
}
