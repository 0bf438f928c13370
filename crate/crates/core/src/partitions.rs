//! Partitions and Young-diagram queries.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts. The empty
//! list is the unique partition of 0. Text form is comma separated (`"3,2,1"`),
//! with the empty string standing for the empty partition.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
    n: u64,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} contains a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        let n = parts.iter().map(|&p| u64::from(p)).sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of cells.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of corner cells, i.e. the number of distinct part values.
    pub fn corner_cells(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(1 + self.parts.windows(2).filter(|w| w[0] != w[1]).count())
    }

    /// Height of column `j` (1-based): `#{i : λ_i ≥ j}`.
    pub fn column_height(&self, j: u32) -> usize {
        // parts are sorted, so the rows with λ_i ≥ j form a prefix
        self.parts.partition_point(|&p| p >= j)
    }

    pub fn remove_first_column(&self) -> Partition {
        let parts = self
            .parts
            .iter()
            .filter(|&&p| p >= 2)
            .map(|&p| p - 1)
            .collect();
        Self::from_parts_unchecked(parts)
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<u64> {
        let mut hooks = Vec::with_capacity(self.n as usize);
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                let arm = u64::from(len - j);
                let leg = (self.column_height(j) - i - 1) as u64;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Dimension of the irreducible S_n-module of this shape, `n! / Π hooks`.
    pub fn hook_dimension(&self) -> BigUint {
        let numerator: BigUint = (1..=self.n).map(BigUint::from).product();
        let denominator: BigUint = self.hook_lengths().into_iter().map(BigUint::from).product();
        numerator / denominator
    }

    pub fn classify(&self) -> ShapeClass {
        ShapeClass::of(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<u32>() {
                    Ok(0) => Err(Error::parse(tok, "parts must be positive")),
                    Ok(v) => Ok(v),
                    Err(_) => Err(Error::parse(tok, "expected a positive integer part")),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Calls `visit` on every partition of `n` with at most `max_rows` parts, in
/// lexicographically decreasing order. The slice is only valid for the call.
pub fn for_each_partition<F>(n: u32, max_rows: Option<usize>, mut visit: F)
where
    F: FnMut(&[u32]),
{
    let rows = max_rows.unwrap_or(n as usize);
    let mut buf = Vec::with_capacity(rows.min(n as usize));
    if n == 0 {
        visit(&buf);
        return;
    }
    descend(n, n, rows, &mut buf, &mut visit);
}

fn descend<F>(remaining: u32, max_part: u32, rows_left: usize, buf: &mut Vec<u32>, visit: &mut F)
where
    F: FnMut(&[u32]),
{
    if remaining == 0 {
        visit(buf);
        return;
    }
    if rows_left == 0 {
        return;
    }
    // smallest first part that still lets the remaining rows absorb the rest
    let rows = rows_left.min(remaining as usize) as u32;
    let lowest = remaining.div_ceil(rows);
    let highest = remaining.min(max_part);
    for part in (lowest..=highest).rev() {
        buf.push(part);
        descend(remaining - part, part, rows_left - 1, buf, visit);
        buf.pop();
    }
}

/// All partitions of `n` (at most `max_rows` parts when given), lexicographically decreasing.
pub fn enumerate_partitions(n: u32, max_rows: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, max_rows, |parts| {
        out.push(Partition::from_parts_unchecked(parts.to_vec()))
    });
    out
}

/// The shape families that carry a nonzero multiplicity, with their witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(tag = "tag")]
pub enum ShapeClass {
    /// `(n)`
    Row { n: u32 },
    /// `(p, p)`
    TwoEqual { p: u32 },
    /// `(p, p, p)`
    ThreeEqual { p: u32 },
    /// `(p+q+r+1, p+q+1, p+1, 1)`, `p, q, r ≥ 0`
    FourRowTailOne { p: u32, q: u32, r: u32 },
    /// `(p+q, p)`, `q ≥ 1`
    TwoRowsDistinct { p: u32, q: u32 },
    /// `(p+q, p, p)`, `q ≥ 1`
    Hook3Bottom { p: u32, q: u32 },
    /// `(p+q, p+q, p)`, `q ≥ 1`
    Hook3Top { p: u32, q: u32 },
    /// `(p+q+r, p+q, p)`, `q, r ≥ 1`
    ThreeDistinct { p: u32, q: u32, r: u32 },
    Null,
}

impl ShapeClass {
    pub fn of(lambda: &Partition) -> ShapeClass {
        use ShapeClass::*;
        match *lambda.parts() {
            [n] => Row { n },
            [a, b] if a == b => TwoEqual { p: a },
            [a, b] => TwoRowsDistinct { p: b, q: a - b },
            [a, b, c] if a == b && b == c => ThreeEqual { p: a },
            [a, b, c] if b == c => Hook3Bottom { p: b, q: a - b },
            [a, b, c] if a == b => Hook3Top { p: c, q: b - c },
            [a, b, c] => ThreeDistinct {
                p: c,
                q: b - c,
                r: a - b,
            },
            [a, b, c, 1] => FourRowTailOne {
                p: c - 1,
                q: b - c,
                r: a - b,
            },
            _ => Null,
        }
    }

    /// Rebuilds the partition from the witnesses; `None` for `Null`.
    pub fn reassemble(&self) -> Option<Partition> {
        use ShapeClass::*;
        let parts = match *self {
            Row { n } => vec![n],
            TwoEqual { p } => vec![p, p],
            ThreeEqual { p } => vec![p, p, p],
            FourRowTailOne { p, q, r } => vec![p + q + r + 1, p + q + 1, p + 1, 1],
            TwoRowsDistinct { p, q } => vec![p + q, p],
            Hook3Bottom { p, q } => vec![p + q, p, p],
            Hook3Top { p, q } => vec![p + q, p + q, p],
            ThreeDistinct { p, q, r } => vec![p + q + r, p + q, p],
            Null => return None,
        };
        Some(Partition::from_parts_unchecked(parts))
    }

    pub fn name(&self) -> &'static str {
        use ShapeClass::*;
        match self {
            Row { .. } => "Row",
            TwoEqual { .. } => "TwoEqual",
            ThreeEqual { .. } => "ThreeEqual",
            FourRowTailOne { .. } => "FourRowTailOne",
            TwoRowsDistinct { .. } => "TwoRowsDistinct",
            Hook3Bottom { .. } => "Hook3Bottom",
            Hook3Top { .. } => "Hook3Top",
            ThreeDistinct { .. } => "ThreeDistinct",
            Null => "Null",
        }
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ShapeClass::*;
        match *self {
            Row { n } => write!(f, "Row(n={n})"),
            TwoEqual { p } | ThreeEqual { p } => write!(f, "{}(p={p})", self.name()),
            TwoRowsDistinct { p, q } | Hook3Bottom { p, q } | Hook3Top { p, q } => {
                write!(f, "{}(p={p},q={q})", self.name())
            }
            FourRowTailOne { p, q, r } | ThreeDistinct { p, q, r } => {
                write!(f, "{}(p={p},q={q},r={r})", self.name())
            }
            Null => f.write_str("Null"),
        }
    }
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerates_small_cases_in_decreasing_order() {
        let four: Vec<String> = enumerate_partitions(4, None).iter().map(|l| l.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);

        let zero = enumerate_partitions(0, None);
        assert_eq!(zero, vec![Partition::empty()]);

        let six: Vec<String> = enumerate_partitions(6, Some(3)).iter().map(|l| l.to_string()).collect();
        assert_eq!(six, ["6", "5,1", "4,2", "4,1,1", "3,3", "3,2,1", "2,2,2"]);
    }

    #[test]
    fn corner_cells_examples() {
        assert_eq!(p("7").corner_cells().unwrap(), 1);
        assert_eq!(p("3,2,1").corner_cells().unwrap(), 3);
        assert_eq!(Partition::empty().corner_cells(), Err(Error::EmptyPartition));
    }

    #[test]
    fn column_heights() {
        assert_eq!(p("3,2,1").column_height(1), 3);
        assert_eq!(p("2,2,1,1").column_height(2), 2);
        assert_eq!(p("5,1,1,1").column_height(2), 1);
        assert_eq!(p("5,1,1,1").column_height(6), 0);
    }

    #[test]
    fn first_column_removal() {
        assert_eq!(p("3,2,1").remove_first_column(), p("2,1"));
        assert_eq!(p("1,1,1,1").remove_first_column(), Partition::empty());
        assert_eq!(p("5,1,1,1").remove_first_column(), p("4"));
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p("9").hook_dimension(), BigUint::from(1u32));
        assert_eq!(p("1,1,1").hook_dimension(), BigUint::from(1u32));
        assert_eq!(p("2,1").hook_dimension(), BigUint::from(2u32));
        assert_eq!(p("3,2").hook_dimension(), BigUint::from(5u32));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(p("4,2").classify(), ShapeClass::TwoRowsDistinct { p: 2, q: 2 });
        assert_eq!(p("2,2,2").classify(), ShapeClass::ThreeEqual { p: 2 });
        assert_eq!(p("3,3,2,2").classify(), ShapeClass::Null);
        assert_eq!(p("2,1,1,1").classify(), ShapeClass::FourRowTailOne { p: 0, q: 0, r: 1 });
        assert_eq!(p("1,1,1,1,1").classify(), ShapeClass::Null);
        assert_eq!(p("1").classify(), ShapeClass::Row { n: 1 });
    }

    #[test]
    fn rejects_malformed_text() {
        assert!(matches!("3,x,1".parse::<Partition>(), Err(Error::Parse { token, .. }) if token == "x"));
        assert!(matches!("1,2".parse::<Partition>(), Err(Error::InvalidPartition(_))));
        assert!(matches!("2,0".parse::<Partition>(), Err(Error::Parse { .. })));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }
}
