//! Generator elements of the irreducible summands, one family per diagram shape.
//!
//! Decorations: `~` tilde, `-` bar, `^` hat, `=` double tilde. `X1^e` is right
//! multiplication by `x1`, `e` times.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::evaluate::Substitution;
use super::template::AlternatingTemplate;
use crate::algebra::{LeibnizElement, RationalPolynomial};
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    F1,
    F2,
    F3,
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    H9,
    H10,
    H11,
    H12,
    H13,
    H14,
}

use Family::*;

impl Family {
    pub const ALL: [Family; 17] = [F1, F2, F3, H1, H2, H3, H4, H5, H6, H7, H8, H9, H10, H11, H12, H13, H14];

    pub fn name(self) -> &'static str {
        match self {
            F1 => "f1",
            F2 => "f2",
            F3 => "f3",
            H1 => "h1",
            H2 => "h2",
            H3 => "h3",
            H4 => "h4",
            H5 => "h5",
            H6 => "h6",
            H7 => "h7",
            H8 => "h8",
            H9 => "h9",
            H10 => "h10",
            H11 => "h11",
            H12 => "h12",
            H13 => "h13",
            H14 => "h14",
        }
    }

    /// Number of superscripted members; 0 when the family is a single element.
    pub fn members(self) -> u8 {
        match self {
            F1 | F2 | F3 | H8 | H9 | H10 => 0,
            H1 | H2 | H3 | H11 | H12 | H13 => 2,
            H4 | H5 | H6 | H14 => 3,
            H7 => 4,
        }
    }

    /// Shape parameters with their least admissible values.
    pub fn parameters(self) -> &'static [(char, u32)] {
        match self {
            F1 | F2 | F3 => &[('m', 1), ('k', 1), ('l', 1)],
            H1 => &[('m', 0)],
            H2 | H3 | H9 | H10 => &[('m', 1)],
            H4 | H5 | H6 | H11 | H12 | H13 => &[('m', 1), ('k', 1)],
            H7 | H14 => &[('m', 1), ('k', 1), ('p', 1)],
            H8 => &[('n', 1)],
        }
    }

    /// Rows of the diagram.
    fn shape(self, v: &Values) -> Vec<i64> {
        let Values { m, k, p, l, n } = *v;
        match self {
            F1 | F2 | F3 => vec![m + k + l, m + k, m],
            H1 => vec![m + 1, 1, 1, 1],
            H2 => vec![m + 1, m + 1, 1, 1],
            H3 => vec![m + 1, m + 1, m + 1, 1],
            H4 => vec![m + k + 1, k + 1, 1, 1],
            H5 => vec![m + k + 1, k + 1, k + 1, 1],
            H6 => vec![m + k + 1, m + k + 1, k + 1, 1],
            H7 => vec![m + k + p + 1, k + p + 1, p + 1, 1],
            H8 => vec![n],
            H9 => vec![m, m],
            H10 => vec![m, m, m],
            H11 => vec![m + k, k],
            H12 => vec![m + k, k, k],
            H13 => vec![m + k, m + k, k],
            H14 => vec![m + k + p, k + p, p],
        }
    }
}

/// A catalog key: a family plus the superscript, e.g. `h11(2)` or `h8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CatalogId {
    pub family: Family,
    pub index: Option<u8>,
}

impl CatalogId {
    pub fn new(family: Family, index: Option<u8>) -> Result<Self> {
        let id = CatalogId { family, index };
        let ok = match (family.members(), index) {
            (0, None) => true,
            (k, Some(i)) => i >= 1 && i <= k,
            _ => false,
        };
        if ok {
            Ok(id)
        } else {
            Err(Error::UnknownElement(id.to_string()))
        }
    }

    /// Every catalog key in family order.
    pub fn all() -> Vec<CatalogId> {
        Family::ALL.iter().flat_map(|&f| Self::of_family(f)).collect()
    }

    pub fn of_family(family: Family) -> Vec<CatalogId> {
        match family.members() {
            0 => vec![CatalogId { family, index: None }],
            k => (1..=k).map(|i| CatalogId { family, index: Some(i) }).collect(),
        }
    }

    /// Elements that survive on the generating algebra: first members and the
    /// one-corner families.
    pub fn is_witness(self) -> bool {
        matches!(self.family, H8 | H9 | H10) || self.index == Some(1)
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        match self.index {
            Some(i) => write!(f, "({i})"),
            None => Ok(()),
        }
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    /// `h11(2)`, `h11^(2)`, `h8`, `f1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, index) = match s.split_once('(') {
            None => (s, None),
            Some((head, rest)) => {
                let digits = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::parse(s, "expected `)`"))?;
                let i = digits
                    .parse::<u8>()
                    .map_err(|_| Error::parse(digits, "expected a superscript number"))?;
                (head.strip_suffix('^').unwrap_or(head), Some(i))
            }
        };
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == head.to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownElement(s.to_string()))?;
        CatalogId::new(family, index)
    }
}

/// Named shape parameters, written `m=1,k=2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShapeParams(BTreeMap<char, u32>);

impl ShapeParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: char, value: u32) -> Self {
        self.0.insert(name, value);
        self
    }

    pub fn get(&self, name: char) -> Option<u32> {
        self.0.get(&name).copied()
    }

    /// Every assignment of `values` to the family's parameters that is admissible.
    pub fn grid(family: Family, values: &[u32]) -> Vec<ShapeParams> {
        let mut out = vec![ShapeParams::new()];
        for &(name, least) in family.parameters() {
            out = out
                .into_iter()
                .flat_map(|p| {
                    values
                        .iter()
                        .filter(move |&&v| v >= least)
                        .map(move |&v| p.clone().with(name, v))
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for ShapeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for ShapeParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = ShapeParams::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::parse(part, "expected `name=value`"))?;
            let mut name = k.trim().chars();
            let key = match (name.next(), name.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => c,
                _ => return Err(Error::parse(k, "expected a one-letter parameter name")),
            };
            let value = v
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::parse(v, "expected a non-negative integer"))?;
            if out.0.insert(key, value).is_some() {
                return Err(Error::parse(part, "parameter given twice"));
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Values {
    m: i64,
    k: i64,
    p: i64,
    l: i64,
    n: i64,
}

fn values(id: CatalogId, params: &ShapeParams) -> Result<Values> {
    let bad = |reason: String| Error::BadParams { id: id.to_string(), reason };
    let wanted = id.family.parameters();
    if let Some(extra) = params.0.keys().find(|c| !wanted.iter().any(|(w, _)| w == *c)) {
        return Err(bad(format!("unexpected parameter `{extra}`")));
    }
    let mut v = Values::default();
    for &(name, least) in wanted {
        let x = params.get(name).ok_or_else(|| bad(format!("missing parameter `{name}`")))?;
        if x < least {
            return Err(bad(format!("`{name}` must be at least {least}")));
        }
        let slot = match name {
            'm' => &mut v.m,
            'k' => &mut v.k,
            'p' => &mut v.p,
            'l' => &mut v.l,
            _ => &mut v.n,
        };
        *slot = i64::from(x);
    }
    Ok(v)
}

/// The diagram `λ` the element belongs to.
pub fn shape(id: CatalogId, params: &ShapeParams) -> Result<Partition> {
    let v = values(id, params)?;
    let rows = id.family.shape(&v).into_iter().map(|r| r as u32).collect();
    Partition::new(rows)
}

/// Collects template tokens, rejecting negative exponents.
struct Builder {
    id: CatalogId,
    tokens: Vec<String>,
    error: Option<Error>,
}

impl Builder {
    fn new(id: CatalogId) -> Self {
        Builder { id, tokens: Vec::new(), error: None }
    }

    fn lit(mut self, tokens: &str) -> Self {
        self.tokens.extend(tokens.split_whitespace().map(String::from));
        self
    }

    fn exp(&mut self, e: i64, label: &str) -> u32 {
        if e < 0 && self.error.is_none() {
            self.error = Some(Error::BadParams {
                id: self.id.to_string(),
                reason: format!("exponent {label} is negative"),
            });
        }
        e.max(0) as u32
    }

    fn st(mut self, set: char, size: usize, e: i64, label: &str) -> Self {
        let e = self.exp(e, label);
        self.tokens.push(format!("{set}St{size}^{e}"));
        self
    }

    fn x1(mut self, e: i64, label: &str) -> Self {
        let e = self.exp(e, label);
        self.tokens.push(format!("X1^{e}"));
        self
    }

    fn build(self) -> Result<AlternatingTemplate> {
        match self.error {
            Some(e) => Err(e),
            None => self.tokens.join(" ").parse(),
        }
    }
}

const X4: &str = "~x1 ~x2 ~x3 ~x4";

/// The template of a catalog element; its expansion is the element itself.
pub fn generator_element(id: CatalogId, params: &ShapeParams) -> Result<AlternatingTemplate> {
    let Values { m, k, p, l, n } = values(id, params)?;
    let b = Builder::new(id);
    let b = match (id.family, id.index.unwrap_or(0)) {
        (F1, _) => b.lit("-x1 -x2 -x3").st('~', 3, m - 1, "m-1").st('^', 2, k, "k").x1(l, "l"),
        (F2, _) => b.lit("-x1 -x2").st('~', 3, m, "m").st('^', 2, k - 1, "k-1").x1(l, "l"),
        (F3, _) => b.lit("x1").st('-', 3, m, "m").st('~', 2, k, "k").x1(l - 1, "l-1"),

        (H1, 1) => b.lit(X4).x1(m, "m"),
        (H1, _) => b.lit("x1").st('~', 4, 1, "1").x1(m - 1, "m-1"),
        (H2, 1) => b.lit(X4).st('-', 2, m, "m"),
        (H2, _) => b.lit("~x1 ~x2").st('-', 4, 1, "1").st('^', 2, m - 1, "m-1"),
        (H3, 1) => b.lit(X4).st('-', 3, m, "m"),
        (H3, _) => b.lit("~x1 ~x2 ~x3").st('-', 4, 1, "1").st('^', 3, m - 1, "m-1"),

        (H4, 1) => b.lit(X4).st('-', 2, k, "k").x1(m, "m"),
        (H4, 2) => b.lit("~x1 ~x2").st('-', 4, 1, "1").st('^', 2, k - 1, "k-1").x1(m, "m"),
        (H4, _) => b.lit("x1").st('~', 4, 1, "1").st('-', 2, k, "k").x1(m - 1, "m-1"),
        (H5, 1) => b.lit(X4).st('-', 3, k, "k").x1(m, "m"),
        (H5, 2) => b.lit("~x1 ~x2 ~x3").st('-', 4, 1, "1").st('^', 3, k - 1, "k-1").x1(m, "m"),
        (H5, _) => b.lit("x1").st('~', 4, 1, "1").st('-', 3, k, "k").x1(m - 1, "m-1"),
        (H6, 1) => b.lit(X4).st('-', 3, k, "k").st('^', 2, m, "m"),
        (H6, 2) => b
            .lit("~x1 ~x2 ~x3")
            .st('-', 4, 1, "1")
            .st('^', 3, k - 1, "k-1")
            .st('=', 2, m, "m"),
        (H6, _) => b.lit("~x1 ~x2").st('-', 4, 1, "1").st('^', 3, k, "k").st('=', 2, m - 1, "m-1"),

        (H7, 1) => b.lit(X4).st('-', 3, p, "p").st('^', 2, k, "k").x1(m, "m"),
        (H7, 2) => b
            .lit("~x1 ~x2 ~x3")
            .st('-', 4, 1, "1")
            .st('^', 3, p - 1, "p-1")
            .st('=', 2, k, "k")
            .x1(m, "m"),
        (H7, 3) => b
            .lit("~x1 ~x2")
            .st('-', 4, 1, "1")
            .st('^', 3, p, "p")
            .st('=', 2, k - 1, "k-1")
            .x1(m, "m"),
        // the total degree forces m-1 here
        (H7, _) => b
            .lit("x1")
            .st('~', 4, 1, "1")
            .st('-', 3, p, "p")
            .st('^', 2, k, "k")
            .x1(m - 1, "m-1"),

        (H8, _) => b.lit("x1").x1(n - 1, "n-1"),
        (H9, _) => b.lit("~x1 ~x2").st('-', 2, m - 1, "m-1"),
        (H10, _) => b.lit("~x1 ~x2 ~x3").st('-', 3, m - 1, "m-1"),

        (H11, 1) => b.lit("~x1 ~x2").st('-', 2, k - 1, "k-1").x1(m, "m"),
        (H11, _) => b.lit("x1").st('~', 2, k, "k").x1(m - 1, "m-1"),
        (H12, 1) => b.lit("~x1 ~x2 ~x3").st('-', 3, k - 1, "k-1").x1(m, "m"),
        (H12, _) => b.lit("x1").st('~', 3, k, "k").x1(m - 1, "m-1"),
        (H13, 1) => b.lit("~x1 ~x2 ~x3").st('-', 3, k - 1, "k-1").st('^', 2, m, "m"),
        // the two leading letters form their own set
        (H13, _) => b.lit("^x1 ^x2").st('~', 3, k, "k").st('-', 2, m - 1, "m-1"),
        (H14, 1) => b.lit("~x1 ~x2 ~x3").st('-', 3, p - 1, "p-1").st('^', 2, k, "k").x1(m, "m"),
        (H14, 2) => b.lit("~x1 ~x2").st('-', 3, p, "p").st('^', 2, k - 1, "k-1").x1(m, "m"),
        (H14, _) => b.lit("x1").st('~', 3, p, "p").st('-', 2, k, "k").x1(m - 1, "m-1"),
    };
    b.build()
}

/// The value substituted for `f`: `t^n` with `n` the element's degree. A lower
/// power is killed by the `n − 1` derivations a word can apply.
pub fn witness_polynomial(degree: usize) -> RationalPolynomial {
    RationalPolynomial::t_pow(degree as u32)
}

/// The substitution showing a witness element is nonzero: `f` is added to the
/// generator whose letter must act on a polynomial.
pub fn witness_substitution(id: CatalogId, f: &RationalPolynomial) -> Option<Substitution> {
    if !id.is_witness() {
        return None;
    }
    let fe = LeibnizElement::poly(f.clone());
    let basis = [LeibnizElement::a(), LeibnizElement::b(), LeibnizElement::c(), fe.clone()];
    // which generator receives `+ f`, and how many letters get basis values
    let (bumped, letters) = match id.family {
        H1 | H2 | H3 | H4 | H5 | H6 | H7 => (None, 4),
        H8 | H9 | H10 => (Some(0), 3),
        H11 => (Some(1), 2),
        H12 | H13 | H14 => (Some(2), 3),
        F1 | F2 | F3 => return None,
    };
    let mut s = Substitution::new();
    for (i, x) in basis.iter().take(letters).enumerate() {
        let v = if bumped == Some(i) { x.clone() + fe.clone() } else { x.clone() };
        s.insert(format!("x{}", i + 1), v);
    }
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(s: &str) -> ShapeParams {
        s.parse().unwrap()
    }

    fn id(s: &str) -> CatalogId {
        s.parse().unwrap()
    }

    #[test]
    fn multidegree_matches_shape() {
        for cid in CatalogId::all() {
            for p in ShapeParams::grid(cid.family, &[0, 1, 2, 3]) {
                let Ok(t) = generator_element(cid, &p) else {
                    continue;
                };
                let lambda = shape(cid, &p).unwrap();
                let md = t.multidegree().unwrap_or_else(|| panic!("{cid} {p} is not homogeneous"));
                let rows: Vec<u32> = (1..=lambda.rows())
                    .map(|i| md.get(&format!("x{i}")).copied().unwrap_or(0) as u32)
                    .collect();
                assert_eq!(rows, lambda.parts(), "{cid} {p}: {t}");
                assert_eq!(md.len(), lambda.rows(), "{cid} {p}");
                assert_eq!(t.degree() as u64, lambda.n());
            }
        }
    }

    #[test]
    fn examples() {
        let t = generator_element(id("h8"), &params("n=5")).unwrap();
        assert_eq!(t.to_string(), "x1 X1^4");
        assert_eq!(t.expand().len(), 1);

        let t = generator_element(id("h11(2)"), &params("m=1,k=1")).unwrap();
        assert_eq!(t.to_string(), "x1 ~St2");
        assert_eq!(t.expand().to_string(), "x1x1x2 - x1x2x1");

        let t = generator_element(id("h14(3)"), &params("p=1,k=1,m=1")).unwrap();
        assert_eq!(t.to_string(), "x1 ~St3 -St2");
    }

    #[test]
    fn bad_params() {
        assert!(matches!(
            generator_element(id("h1(2)"), &params("m=0")),
            Err(Error::BadParams { .. })
        ));
        assert!(generator_element(id("h1(1)"), &params("m=0")).is_ok());
        assert!(generator_element(id("h11(1)"), &params("m=1")).is_err());
        assert!(generator_element(id("h11(1)"), &params("m=1,k=1,p=1")).is_err());
        assert!(generator_element(id("h9"), &params("m=0")).is_err());
    }

    #[test]
    fn ids_parse_and_print() {
        assert_eq!(id("h11^(2)"), id("h11(2)"));
        assert_eq!(id("h11(2)").to_string(), "h11(2)");
        assert_eq!(id("F1").to_string(), "f1");
        assert!("h11".parse::<CatalogId>().is_err());
        assert!("h8(1)".parse::<CatalogId>().is_err());
        assert!("h7(5)".parse::<CatalogId>().is_err());
        assert!("h15".parse::<CatalogId>().is_err());
        assert_eq!(CatalogId::all().len(), 3 + 2 * 6 + 3 * 4 + 4 + 3);
    }

    #[test]
    fn params_parse() {
        assert_eq!(params("m=1, k=2").to_string(), "k=2,m=1");
        assert!("m".parse::<ShapeParams>().is_err());
        assert!("mm=1".parse::<ShapeParams>().is_err());
        assert!("m=-1".parse::<ShapeParams>().is_err());
        assert!("m=1,m=2".parse::<ShapeParams>().is_err());
    }
}
