use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::polynomial::{write_magnitude, RationalPolynomial};
use crate::error::{Error, Result};

/// `αa + βb + γc + f(t)`: an element of the Heisenberg algebra extended by its
/// polynomial module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LeibnizElement {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
    pub poly: RationalPolynomial,
}

impl LeibnizElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn lie(alpha: BigRational, beta: BigRational, gamma: BigRational) -> Self {
        LeibnizElement {
            alpha,
            beta,
            gamma,
            poly: RationalPolynomial::zero(),
        }
    }

    pub fn a() -> Self {
        Self::lie(BigRational::one(), BigRational::zero(), BigRational::zero())
    }

    pub fn b() -> Self {
        Self::lie(BigRational::zero(), BigRational::one(), BigRational::zero())
    }

    pub fn c() -> Self {
        Self::lie(BigRational::zero(), BigRational::zero(), BigRational::one())
    }

    pub fn poly(poly: RationalPolynomial) -> Self {
        LeibnizElement {
            poly,
            ..Self::zero()
        }
    }

    /// `t^k` as an element.
    pub fn t_pow(k: u32) -> Self {
        Self::poly(RationalPolynomial::t_pow(k))
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero() && self.poly.is_zero()
    }

    pub fn has_lie_part(&self) -> bool {
        !(self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero())
    }

    /// Right action of this element's Lie part on a polynomial:
    /// `f·a = f′`, `f·b = t·f`, `f·c = f`.
    pub fn act_on(&self, f: &RationalPolynomial) -> RationalPolynomial {
        let mut out = f.derivative().scale(&self.alpha);
        out += &f.shift().scale(&self.beta);
        out += &f.scale(&self.gamma);
        out
    }

    /// The product `(x + f)(y + g) = xy + f·y`; `g` never contributes.
    pub fn multiply(&self, rhs: &LeibnizElement) -> LeibnizElement {
        // ba = -ab = c
        let gamma = &self.beta * &rhs.alpha - &self.alpha * &rhs.beta;
        LeibnizElement {
            alpha: BigRational::zero(),
            beta: BigRational::zero(),
            gamma,
            poly: rhs.act_on(&self.poly),
        }
    }

    pub fn scale(&self, c: &BigRational) -> LeibnizElement {
        LeibnizElement {
            alpha: &self.alpha * c,
            beta: &self.beta * c,
            gamma: &self.gamma * c,
            poly: self.poly.scale(c),
        }
    }

    /// Flattened coordinates `(α, β, γ, f₀, …, f_max_degree)`.
    pub fn coordinates(&self, max_degree: u32) -> Vec<BigRational> {
        let mut out = vec![self.alpha.clone(), self.beta.clone(), self.gamma.clone()];
        out.extend((0..=max_degree).map(|d| self.poly.coeff(d)));
        out
    }
}

/// `(((x₁x₂)x₃)…x_n)`; `None` for an empty sequence.
pub fn left_normed_product<'a, I>(xs: I) -> Option<LeibnizElement>
where
    I: IntoIterator<Item = &'a LeibnizElement>,
{
    let mut it = xs.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, y| acc.multiply(y)))
}

/// `x·Y^m`: right multiplication by `y`, `m` times.
pub fn right_power(x: &LeibnizElement, y: &LeibnizElement, m: u32) -> LeibnizElement {
    (0..m).fold(x.clone(), |acc, _| acc.multiply(y))
}

/// `(uv)w − (uw)v − u(vw)`, identically zero in a Leibniz algebra.
pub fn leibniz_defect(u: &LeibnizElement, v: &LeibnizElement, w: &LeibnizElement) -> LeibnizElement {
    u.multiply(v).multiply(w) - u.multiply(w).multiply(v) - u.multiply(&v.multiply(w))
}

impl AddAssign<&LeibnizElement> for LeibnizElement {
    fn add_assign(&mut self, rhs: &LeibnizElement) {
        self.alpha += &rhs.alpha;
        self.beta += &rhs.beta;
        self.gamma += &rhs.gamma;
        self.poly += &rhs.poly;
    }
}

impl Add for LeibnizElement {
    type Output = LeibnizElement;

    fn add(mut self, rhs: LeibnizElement) -> LeibnizElement {
        self += &rhs;
        self
    }
}

impl Neg for LeibnizElement {
    type Output = LeibnizElement;

    fn neg(self) -> LeibnizElement {
        LeibnizElement {
            alpha: -self.alpha,
            beta: -self.beta,
            gamma: -self.gamma,
            poly: -self.poly,
        }
    }
}

impl Sub for LeibnizElement {
    type Output = LeibnizElement;

    fn sub(self, rhs: LeibnizElement) -> LeibnizElement {
        self + (-rhs)
    }
}

impl Mul for &LeibnizElement {
    type Output = LeibnizElement;

    fn mul(self, rhs: &LeibnizElement) -> LeibnizElement {
        self.multiply(rhs)
    }
}

impl fmt::Display for LeibnizElement {
    /// `2a - b + (3/2)c + [1 + 2t^3]`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (c, name) in [(&self.alpha, 'a'), (&self.beta, 'b'), (&self.gamma, 'c')] {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            write_magnitude(f, c, false)?;
            write!(f, "{name}")?;
            first = false;
        }
        if !self.poly.is_zero() {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "[{}]", self.poly)?;
        }
        Ok(())
    }
}

struct Cursor<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Cursor<'s> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn rest(&self) -> String {
        let rest = &self.src[self.pos..];
        if rest.is_empty() {
            "<end of input>".to_string()
        } else {
            rest.chars().take(12).collect()
        }
    }

    fn error(&self, reason: &str) -> Error {
        Error::parse(self.rest(), reason)
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.src[start..self.pos].parse().expect("digits"))
    }

    /// `7`, `(3/2)`, `(-3/2)`, `(5)`; `None` when no coefficient is present.
    fn coefficient(&mut self) -> Result<Option<BigRational>> {
        self.skip_ws();
        if let Some(n) = self.integer() {
            return Ok(Some(BigRational::from_integer(n)));
        }
        if !self.eat('(') {
            return Ok(None);
        }
        let negative = self.eat('-');
        let numer = self.integer().ok_or_else(|| self.error("expected numerator"))?;
        let denom = if self.eat('/') {
            self.integer().ok_or_else(|| self.error("expected denominator"))?
        } else {
            BigInt::one()
        };
        if denom.is_zero() {
            return Err(self.error("zero denominator"));
        }
        if !self.eat(')') {
            return Err(self.error("expected `)`"));
        }
        let q = BigRational::new(numer, denom);
        Ok(Some(if negative { -q } else { q }))
    }

    /// Adds one signed term into `out`. Inside brackets only polynomial atoms are allowed.
    fn term(&mut self, sign: BigRational, out: &mut LeibnizElement, in_poly: bool) -> Result<()> {
        let coeff = self.coefficient()?;
        let has_coeff = coeff.is_some();
        let c = sign * coeff.unwrap_or_else(BigRational::one);
        self.skip_ws();
        match self.peek() {
            Some(name @ ('a' | 'b' | 'c')) if !in_poly => {
                self.pos += 1;
                let slot = match name {
                    'a' => &mut out.alpha,
                    'b' => &mut out.beta,
                    _ => &mut out.gamma,
                };
                *slot += c;
            }
            Some('t') => {
                self.pos += 1;
                let degree = if self.eat('^') {
                    self.integer()
                        .and_then(|d| u32::try_from(d).ok())
                        .ok_or_else(|| self.error("expected exponent"))?
                } else {
                    1
                };
                out.poly.add_term(degree, c);
            }
            Some('[') if !in_poly => {
                self.pos += 1;
                let mut inner = LeibnizElement::zero();
                self.sum(&mut inner, true)?;
                if !self.eat(']') {
                    return Err(self.error("expected `]`"));
                }
                out.poly += &inner.poly.scale(&c);
            }
            _ if has_coeff => out.poly.add_term(0, c),
            _ => return Err(self.error("expected a, b, c, t, a number or `[`")),
        }
        Ok(())
    }

    fn sum(&mut self, out: &mut LeibnizElement, in_poly: bool) -> Result<()> {
        let mut sign = if self.eat('-') {
            -BigRational::one()
        } else {
            self.eat('+');
            BigRational::one()
        };
        loop {
            self.term(sign, out, in_poly)?;
            sign = if self.eat('+') {
                BigRational::one()
            } else if self.eat('-') {
                -BigRational::one()
            } else {
                return Ok(());
            };
        }
    }
}

impl FromStr for LeibnizElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor { src: s, pos: 0 };
        let mut out = LeibnizElement::zero();
        cur.sum(&mut out, false)?;
        cur.skip_ws();
        if cur.pos != s.len() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> LeibnizElement {
        s.parse().unwrap()
    }

    #[test]
    fn heisenberg_products() {
        let (a, b, c) = (LeibnizElement::a(), LeibnizElement::b(), LeibnizElement::c());
        assert_eq!(b.multiply(&a), c);
        assert_eq!(a.multiply(&b), -c.clone());
        assert!(a.multiply(&a).is_zero());
        assert!(c.multiply(&a).is_zero());
    }

    #[test]
    fn module_action() {
        let t = LeibnizElement::t_pow(1);
        assert_eq!(t.multiply(&LeibnizElement::a()), LeibnizElement::t_pow(0));
        assert_eq!(t.multiply(&LeibnizElement::b()), LeibnizElement::t_pow(2));
        assert_eq!(t.multiply(&LeibnizElement::c()), t);
        // the right factor's polynomial part never contributes
        assert!(LeibnizElement::a().multiply(&t).is_zero());
    }

    #[test]
    fn left_normed_examples() {
        let (a, b, c) = (LeibnizElement::a(), LeibnizElement::b(), LeibnizElement::c());
        assert!(left_normed_product([&a, &b, &c]).unwrap().is_zero());
        assert_eq!(left_normed_product([&b]).unwrap(), b);
        let t2 = LeibnizElement::t_pow(2);
        assert_eq!(left_normed_product([&t2, &a, &a]).unwrap(), el("[2]"));
        assert_eq!(left_normed_product(std::iter::empty()), None);
    }

    #[test]
    fn right_power_examples() {
        let a = LeibnizElement::a();
        assert_eq!(right_power(&LeibnizElement::t_pow(3), &a, 3), el("[6]"));
        assert_eq!(right_power(&el("a - [t]"), &el("c"), 0), el("a - [t]"));
        assert_eq!(right_power(&LeibnizElement::t_pow(0), &LeibnizElement::b(), 2), LeibnizElement::t_pow(2));
    }

    #[test]
    fn defect_examples() {
        let (a, b, c) = (LeibnizElement::a(), LeibnizElement::b(), LeibnizElement::c());
        assert!(leibniz_defect(&a, &b, &c).is_zero());
        assert!(leibniz_defect(&LeibnizElement::t_pow(2), &a, &b).is_zero());
        assert!(leibniz_defect(&LeibnizElement::zero(), &b, &c).is_zero());
    }

    #[test]
    fn text_format() {
        let x = el("2a - b + (3/2)c + [1 + 2t^3]");
        assert_eq!(x.alpha, BigRational::from_integer(2.into()));
        assert_eq!(x.beta, -BigRational::one());
        assert_eq!(x.poly.coeff(3), BigRational::from_integer(2.into()));
        assert_eq!(x.to_string(), "2a - b + (3/2)c + [1 + 2t^3]");
        assert_eq!(el("-a + [-(1/2)t]").to_string(), "-a + [-(1/2)t]");
        assert_eq!(el("b+t").to_string(), "b + [t]");
        assert_eq!(el("[t^2]").to_string(), "[t^2]");
        assert_eq!(el("0"), LeibnizElement::zero());
        assert_eq!(LeibnizElement::zero().to_string(), "0");
    }

    #[test]
    fn text_format_errors_name_the_token() {
        match "2a + q".parse::<LeibnizElement>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "q"),
            other => panic!("{other:?}"),
        }
        assert!("[a]".parse::<LeibnizElement>().is_err());
        assert!("(1/0)a".parse::<LeibnizElement>().is_err());
        assert!("a b".parse::<LeibnizElement>().is_err());
    }
}
