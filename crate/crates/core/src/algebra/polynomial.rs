use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse polynomial in `t` with rational coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: BTreeMap<u32, BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·t^degree`
    pub fn monomial(c: BigRational, degree: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, c);
        p
    }

    /// `t^degree`
    pub fn t_pow(degree: u32) -> Self {
        Self::monomial(BigRational::one(), degree)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, BigRational)>,
    {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> BigRational {
        self.coeffs.get(&degree).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigRational)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn add_term(&mut self, degree: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(degree) {
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

    pub fn derivative(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&d, _)| d > 0)
                .map(|(&d, c)| (d - 1, c * BigInt::from(d)))
                .collect(),
        }
    }

    /// `t·f`
    pub fn shift(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d + 1, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&d, v)| (d, v * c)).collect(),
        }
    }
}

impl AddAssign<&RationalPolynomial> for RationalPolynomial {
    fn add_assign(&mut self, rhs: &RationalPolynomial) {
        for (&d, c) in &rhs.coeffs {
            self.add_term(d, c.clone());
        }
    }
}

impl SubAssign<&RationalPolynomial> for RationalPolynomial {
    fn sub_assign(&mut self, rhs: &RationalPolynomial) {
        for (&d, c) in &rhs.coeffs {
            self.add_term(d, -c.clone());
        }
    }
}

impl Add for RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(mut self, rhs: RationalPolynomial) -> RationalPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(mut self, rhs: RationalPolynomial) -> RationalPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        Self {
            coeffs: self.coeffs.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl Mul<&BigRational> for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &BigRational) -> RationalPolynomial {
        self.scale(rhs)
    }
}

/// Writes `|c|` as a coefficient prefix: nothing for 1 (unless `bare`), `2`, `(3/2)`.
pub(crate) fn write_magnitude(f: &mut fmt::Formatter<'_>, c: &BigRational, bare: bool) -> fmt::Result {
    let c = c.abs();
    if c.is_one() && !bare {
        Ok(())
    } else if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "({}/{})", c.numer(), c.denom())
    }
}

impl fmt::Display for RationalPolynomial {
    /// Increasing degree: `1 + 2t^3`, `-(1/2)t`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&d, c)) in self.coeffs.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_magnitude(f, c, d == 0)?;
            match d {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn zero_is_normalized() {
        let mut p = RationalPolynomial::t_pow(3);
        p.add_term(3, q(-1, 1));
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p, RationalPolynomial::zero());
    }

    #[test]
    fn derivative_and_shift() {
        let p = RationalPolynomial::from_terms([(0, q(1, 1)), (3, q(2, 1))]);
        assert_eq!(
            p.derivative(),
            RationalPolynomial::monomial(q(6, 1), 2)
        );
        assert_eq!(p.shift().degree(), Some(4));
        assert!(RationalPolynomial::one().derivative().is_zero());
    }

    #[test]
    fn display() {
        let p = RationalPolynomial::from_terms([(0, q(1, 1)), (3, q(2, 1))]);
        assert_eq!(p.to_string(), "1 + 2t^3");
        let p = RationalPolynomial::from_terms([(1, q(-1, 2)), (2, q(-1, 1))]);
        assert_eq!(p.to_string(), "-(1/2)t - t^2");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
    }
}
