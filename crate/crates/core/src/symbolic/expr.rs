use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Name = String;

/// A bracketed word. Leaves are generator names for plain expressions and
/// labelled slots for alternating templates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Expr<L = Name> {
    Leaf(L),
    Mul(Box<Expr<L>>, Box<Expr<L>>),
}

impl<L> Expr<L> {
    pub fn leaf(l: L) -> Self {
        Expr::Leaf(l)
    }

    pub fn mul(left: Expr<L>, right: Expr<L>) -> Self {
        Expr::Mul(Box::new(left), Box::new(right))
    }

    /// Left-normed word `(((l₁l₂)l₃)…l_n)`; `None` when empty.
    pub fn word<I: IntoIterator<Item = L>>(leaves: I) -> Option<Self> {
        let mut it = leaves.into_iter();
        let first = Expr::Leaf(it.next()?);
        Some(it.fold(first, |acc, l| Expr::mul(acc, Expr::Leaf(l))))
    }

    /// Every right child is a leaf.
    pub fn is_left_normed(&self) -> bool {
        match self {
            Expr::Leaf(_) => true,
            Expr::Mul(l, r) => matches!(**r, Expr::Leaf(_)) && l.is_left_normed(),
        }
    }

    /// The leaves of a left-normed word in order; `None` for other trees.
    pub fn as_word(&self) -> Option<Vec<&L>> {
        let mut out = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                Expr::Leaf(l) => {
                    out.push(l);
                    out.reverse();
                    return Some(out);
                }
                Expr::Mul(left, right) => match &**right {
                    Expr::Leaf(l) => {
                        out.push(l);
                        cur = left;
                    }
                    Expr::Mul(..) => return None,
                },
            }
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a L>) {
        match self {
            Expr::Leaf(l) => out.push(l),
            Expr::Mul(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Expr::Leaf(_) => 1,
            Expr::Mul(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn map<M, F>(&self, f: &mut F) -> Expr<M>
    where
        F: FnMut(&L) -> M,
    {
        match self {
            Expr::Leaf(l) => Expr::Leaf(f(l)),
            Expr::Mul(a, b) => {
                let left = a.map(f);
                Expr::mul(left, b.map(f))
            }
        }
    }

    pub fn try_map<M, F>(&self, f: &mut F) -> Result<Expr<M>>
    where
        F: FnMut(&L) -> Result<M>,
    {
        Ok(match self {
            Expr::Leaf(l) => Expr::Leaf(f(l)?),
            Expr::Mul(a, b) => {
                let left = a.try_map(f)?;
                Expr::mul(left, b.try_map(f)?)
            }
        })
    }
}

impl Expr<Name> {
    pub fn generator(name: impl Into<Name>) -> Self {
        Expr::Leaf(name.into())
    }

    /// How many times `name` occurs.
    pub fn occurrences(&self, name: &str) -> usize {
        self.leaves().into_iter().filter(|l| l.as_str() == name).count()
    }
}

impl<L: fmt::Display> fmt::Display for Expr<L> {
    /// Left-normed brackets are omitted: `x0(x1y)(x2y)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Leaf(l) => write!(f, "{l}"),
            Expr::Mul(a, b) => {
                write!(f, "{a}")?;
                match &**b {
                    Expr::Leaf(l) => write!(f, "{l}"),
                    inner => write!(f, "({inner})"),
                }
            }
        }
    }
}

impl FromStr for Expr<Name> {
    type Err = Error;

    /// Names are a lowercase letter followed by digits; juxtaposition is a
    /// left-normed product and parentheses group: `x0(xy)(xy)`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let e = parse_product(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::parse(chars[pos..].iter().collect::<String>(), "unexpected input"));
        }
        Ok(e)
    }
}

fn parse_product(chars: &[char], pos: &mut usize) -> Result<Expr<Name>> {
    let mut acc: Option<Expr<Name>> = None;
    while *pos < chars.len() && chars[*pos] != ')' {
        let factor = match chars[*pos] {
            '(' => {
                *pos += 1;
                let inner = parse_product(chars, pos)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::parse("(", "unbalanced parenthesis"));
                }
                *pos += 1;
                inner
            }
            c if c.is_ascii_lowercase() => {
                let start = *pos;
                *pos += 1;
                while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                    *pos += 1;
                }
                Expr::Leaf(chars[start..*pos].iter().collect())
            }
            c => return Err(Error::parse(c.to_string(), "expected a generator name or `(`")),
        };
        acc = Some(match acc {
            None => factor,
            Some(prev) => Expr::mul(prev, factor),
        });
    }
    acc.ok_or_else(|| Error::parse(chars[*pos..].iter().collect::<String>(), "empty product"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_nested() {
        let e: Expr = "x0(xy)(xy)".parse().unwrap();
        assert_eq!(e.to_string(), "x0(xy)(xy)");
        assert!(!e.is_left_normed());
        assert_eq!(e.occurrences("x"), 2);
        assert_eq!(e.degree(), 5);
    }

    #[test]
    fn left_normed_words() {
        let w = Expr::word(["x1", "x2", "x3"].map(String::from)).unwrap();
        assert!(w.is_left_normed());
        assert_eq!(w.to_string(), "x1x2x3");
        assert_eq!(w, "x1x2x3".parse().unwrap());
        let names: Vec<&str> = w.as_word().unwrap().into_iter().map(String::as_str).collect();
        assert_eq!(names, ["x1", "x2", "x3"]);
        assert!(Expr::<Name>::word(std::iter::empty()).is_none());
    }

    #[test]
    fn rejects_garbage() {
        assert!("x1(x2".parse::<Expr>().is_err());
        assert!("x1+x2".parse::<Expr>().is_err());
        assert!("".parse::<Expr>().is_err());
    }
}
