//! Numeric invariants of the variety: multiplicities, colength and its
//! row-count pieces, the asymptotic deviation, and the codimension.
//!
//! Every closed form comes paired with a brute-force side that sums over
//! enumerated partitions. Partitions with five or more rows are never
//! enumerated by the brute sums: both multiplicity rules assign them 0.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{for_each_partition, Partition, ShapeClass};

/// Rows beyond which every multiplicity vanishes.
pub const MAX_ADMISSIBLE_ROWS: usize = 4;

/// `δ(n)`: 1 iff `n ≡ 1 (mod 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Delta(u8);

impl Delta {
    pub fn of(n: u64) -> Delta {
        Delta(u8::from(n % 3 == 1))
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

/// Multiplicity from the shape classification.
pub fn multiplicity(lambda: &Partition) -> u32 {
    use ShapeClass::*;
    match lambda.classify() {
        Row { .. } | TwoEqual { .. } | ThreeEqual { .. } | FourRowTailOne { .. } => 1,
        TwoRowsDistinct { .. } | Hook3Bottom { .. } | Hook3Top { .. } => 2,
        ThreeDistinct { .. } => 3,
        Null => 0,
    }
}

/// Multiplicity from the corner-cell rule: corners for at most three rows,
/// 1 for four rows ending in a single cell, 0 otherwise.
pub fn multiplicity_via_corners(lambda: &Partition) -> u32 {
    match lambda.rows() {
        0 => 0,
        1..=3 => lambda.corner_cells().map_or(0, |c| c as u32),
        4 if lambda.part(3) == 1 => 1,
        _ => 0,
    }
}

fn multiplicity_of_parts(parts: &[u32]) -> u32 {
    // hot path of the brute sums; same rule as `multiplicity`
    match *parts {
        [_] => 1,
        [a, b] => 1 + u32::from(a != b),
        [a, b, c] => 1 + u32::from(a != b) + u32::from(b != c),
        [_, _, _, 1] => 1,
        _ => 0,
    }
}

fn require(what: &'static str, n: u64, min: u64, requirement: &'static str) -> Result<()> {
    if n < min {
        Err(Error::Domain {
            what,
            value: n,
            requirement,
        })
    } else {
        Ok(())
    }
}

fn small(n: u64) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::Domain {
        what: "enumeration",
        value: n,
        requirement: "n < 2^32",
    })
}

/// `(n² + n + δ) / 3`.
pub fn colength_exact(n: u64) -> BigInt {
    let delta = BigInt::from(Delta::of(n).value());
    let n = BigInt::from(n);
    (&n * &n + &n + delta) / 3
}

fn split6(n: u64) -> (BigInt, u64) {
    (BigInt::from(n / 6), n % 6)
}

fn quadratic(m: &BigInt, a: i64, b: i64, c: i64) -> BigInt {
    BigInt::from(a) * m * m + BigInt::from(b) * m + BigInt::from(c)
}

/// Colength from the mod-6 case table, `n = 6m + r`.
pub fn colength_cases(n: u64) -> BigInt {
    let (m, r) = split6(n);
    match r {
        0 => quadratic(&m, 12, 2, 0),
        1 => quadratic(&m, 12, 6, 1),
        2 => quadratic(&m, 12, 10, 2),
        3 => quadratic(&m, 12, 14, 4),
        4 => quadratic(&m, 12, 18, 7),
        _ => quadratic(&m, 12, 22, 10),
    }
}

/// `Σ_{λ⊢n} m_λ` by enumeration.
pub fn colength_bruteforce(n: u64) -> Result<BigInt> {
    let n = small(n)?;
    let mut total = 0u64;
    for_each_partition(n, Some(MAX_ADMISSIBLE_ROWS), |parts| {
        total += u64::from(multiplicity_of_parts(parts))
    });
    Ok(BigInt::from(total))
}

/// A closed-form value next to its enumeration counterpart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paired {
    pub formula: BigInt,
    pub brute: BigInt,
}

impl Paired {
    pub fn agrees(&self) -> bool {
        self.formula == self.brute
    }
}

fn count_rows<P>(n: u32, max_rows: usize, mut pred: P) -> (u64, u64)
where
    P: FnMut(&[u32]) -> bool,
{
    let (mut count, mut mult) = (0u64, 0u64);
    for_each_partition(n, Some(max_rows), |parts| {
        if pred(parts) {
            count += 1;
            mult += u64::from(multiplicity_of_parts(parts));
        }
    });
    (count, mult)
}

/// `a(n) = ⌊n/2⌋ + 1`, the number of partitions with at most two rows.
pub fn a_formula(n: u64) -> BigInt {
    BigInt::from(n / 2 + 1)
}

pub fn a_count(n: u64) -> Result<Paired> {
    let (count, _) = count_rows(small(n)?, 2, |_| true);
    Ok(Paired {
        formula: a_formula(n),
        brute: count.into(),
    })
}

/// Number of partitions with exactly three rows, from the mod-6 table.
pub fn b_formula(n: u64) -> BigInt {
    let (m, r) = split6(n);
    match r {
        0 => quadratic(&m, 3, 0, 0),
        1 => quadratic(&m, 3, 1, 0),
        2 => quadratic(&m, 3, 2, 0),
        3 => quadratic(&m, 3, 3, 1),
        4 => quadratic(&m, 3, 4, 1),
        _ => quadratic(&m, 3, 5, 2),
    }
}

pub fn b_count(n: u64) -> Result<Paired> {
    let (count, _) = count_rows(small(n)?, 3, |p| p.len() == 3);
    Ok(Paired {
        formula: b_formula(n),
        brute: count.into(),
    })
}

/// `b(n) = a(n−3) + b(n−3)` evaluated on the closed forms.
pub fn b_by_recurrence(n: u64) -> Result<BigInt> {
    require("b recurrence", n, 3, "n >= 3")?;
    Ok(a_formula(n - 3) + b_formula(n - 3))
}

/// Number of four-row partitions with `λ₄ = 1`, from the mod-6 table.
pub fn c_formula(n: u64) -> Result<BigInt> {
    require("c(n)", n, 4, "n >= 4")?;
    let (m, r) = split6(n);
    Ok(match r {
        0 => quadratic(&m, 3, -1, 0),
        1 => quadratic(&m, 3, 0, 0),
        2 => quadratic(&m, 3, 1, 0),
        3 => quadratic(&m, 3, 2, 0),
        4 => quadratic(&m, 3, 3, 1),
        _ => quadratic(&m, 3, 4, 1),
    })
}

/// `c(n)` as `a(n−4) + b(n−4)`: removing the first column leaves at most three rows.
pub fn c_by_first_column(n: u64) -> Result<BigInt> {
    require("c(n)", n, 4, "n >= 4")?;
    Ok(a_formula(n - 4) + b_formula(n - 4))
}

pub fn c_count(n: u64) -> Result<Paired> {
    let formula = c_formula(n)?;
    let (count, _) = count_rows(small(n)?, 4, |p| p.len() == 4 && p[3] == 1);
    Ok(Paired {
        formula,
        brute: count.into(),
    })
}

/// `l_n^(2) = n`: multiplicities summed over partitions with at most two rows.
pub fn l2(n: u64) -> Result<Paired> {
    let (_, mult) = count_rows(small(n)?, 2, |_| true);
    Ok(Paired {
        formula: BigInt::from(n),
        brute: mult.into(),
    })
}

/// Commonly quoted `6m+4` coefficients for the three-row sum; off by one against enumeration.
pub const L3_PRINTED_6M_PLUS_4: (i64, i64, i64) = (9, 9, 3);

/// Multiplicities summed over partitions with exactly three rows, mod-6 table.
pub fn l3_formula(n: u64) -> BigInt {
    let (m, r) = split6(n);
    match r {
        0 => quadratic(&m, 9, -3, 0),
        1 => quadratic(&m, 9, 0, 0),
        2 => quadratic(&m, 9, 3, 0),
        3 => quadratic(&m, 9, 6, 1),
        4 => quadratic(&m, 9, 9, 2),
        _ => quadratic(&m, 9, 12, 4),
    }
}

pub fn l3(n: u64) -> Result<Paired> {
    let (_, mult) = count_rows(small(n)?, 3, |p| p.len() == 3);
    Ok(Paired {
        formula: l3_formula(n),
        brute: mult.into(),
    })
}

/// `l_n − n²/3`, exactly.
pub fn asymptotic_deviation(n: u64) -> BigRational {
    let sq = BigInt::from(n) * BigInt::from(n);
    BigRational::from_integer(colength_exact(n)) - BigRational::new(sq, BigInt::from(3))
}

/// `c_n = Σ m_λ d_λ` with the classification multiplicity.
pub fn codimension(n: u64) -> Result<BigUint> {
    codimension_with(n, multiplicity)
}

/// `Σ m_λ d_λ` for an arbitrary multiplicity rule.
pub fn codimension_with<F>(n: u64, rule: F) -> Result<BigUint>
where
    F: Fn(&Partition) -> u32,
{
    let n = small(n)?;
    let mut total = BigUint::zero();
    for_each_partition(n, Some(MAX_ADMISSIBLE_ROWS), |parts| {
        let lambda = Partition::new(parts.to_vec()).expect("enumeration yields partitions");
        let m = rule(&lambda);
        if m > 0 {
            total += lambda.hook_dimension() * m;
        }
    });
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quantity {
    #[serde(rename = "m_lambda")]
    Multiplicity,
    #[serde(rename = "l_n")]
    Colength,
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "l2")]
    L2,
    #[serde(rename = "l3")]
    L3,
    #[serde(rename = "c_n")]
    Codimension,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::Multiplicity,
        Quantity::Colength,
        Quantity::A,
        Quantity::B,
        Quantity::C,
        Quantity::L2,
        Quantity::L3,
        Quantity::Codimension,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Quantity::Multiplicity => "m_lambda",
            Quantity::Colength => "l_n",
            Quantity::A => "a",
            Quantity::B => "b",
            Quantity::C => "c",
            Quantity::L2 => "l2",
            Quantity::L3 => "l3",
            Quantity::Codimension => "c_n",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.label() == s)
            .ok_or_else(|| Error::parse(s, "expected one of m_lambda, l_n, a, b, c, l2, l3, c_n"))
    }
}

/// One formula-versus-enumeration record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub quantity: Quantity,
    /// Degree, or the partition text for multiplicities.
    pub input: String,
    pub formula_value: BigInt,
    pub brute_value: BigInt,
    pub agrees: bool,
}

impl InvariantReport {
    pub fn new(quantity: Quantity, input: impl Into<String>, pair: Paired) -> Self {
        let agrees = pair.agrees();
        InvariantReport {
            quantity,
            input: input.into(),
            formula_value: pair.formula,
            brute_value: pair.brute,
            agrees,
        }
    }

    /// Report for quantity `q` at degree `n`. Multiplicity is per-partition; use
    /// [`InvariantReport::for_partition`] for it.
    pub fn for_degree(q: Quantity, n: u64) -> Result<Self> {
        let pair = match q {
            Quantity::Multiplicity => {
                return Err(Error::parse("m_lambda", "multiplicity takes a partition, not a degree"))
            }
            Quantity::Colength => {
                require("l_n", n, 1, "n >= 1")?;
                Paired {
                    formula: colength_exact(n),
                    brute: colength_bruteforce(n)?,
                }
            }
            Quantity::A => a_count(n)?,
            Quantity::B => b_count(n)?,
            Quantity::C => c_count(n)?,
            Quantity::L2 => {
                require("l2", n, 1, "n >= 1")?;
                l2(n)?
            }
            Quantity::L3 => {
                require("l3", n, 1, "n >= 1")?;
                l3(n)?
            }
            Quantity::Codimension => {
                require("c_n", n, 1, "n >= 1")?;
                Paired {
                    formula: codimension(n)?.into(),
                    brute: codimension_with(n, multiplicity_via_corners)?.into(),
                }
            }
        };
        Ok(InvariantReport::new(q, n.to_string(), pair))
    }

    pub fn for_partition(lambda: &Partition) -> Self {
        let pair = Paired {
            formula: multiplicity(lambda).into(),
            brute: multiplicity_via_corners(lambda).into(),
        };
        InvariantReport::new(Quantity::Multiplicity, lambda.to_string(), pair)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn delta_tracks_residue_one() {
        let values: Vec<u8> = (0..7).map(|n| Delta::of(n).value()).collect();
        assert_eq!(values, [0, 1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&p("7")), 1);
        assert_eq!(multiplicity(&p("3,2,1")), 3);
        assert_eq!(multiplicity(&p("2,1,1,1")), 1);
        assert_eq!(multiplicity(&p("3,3,2,2")), 0);
        assert_eq!(multiplicity(&Partition::empty()), 0);
    }

    #[test]
    fn corner_rule_examples() {
        assert_eq!(multiplicity_via_corners(&p("4,2")), 2);
        assert_eq!(multiplicity_via_corners(&p("2,2,1,1")), 1);
        assert_eq!(multiplicity_via_corners(&p("1,1,1,1,1")), 0);
    }

    #[test]
    fn colength_examples() {
        assert_eq!(colength_exact(6), int(14));
        assert_eq!(colength_exact(1), int(1));
        assert_eq!(colength_exact(4), int(7));
        assert_eq!(colength_cases(6), int(14));
        assert_eq!(colength_cases(7), int(19));
        assert_eq!(colength_cases(11), int(44));
        assert_eq!(colength_bruteforce(3).unwrap(), int(4));
        assert_eq!(colength_bruteforce(5).unwrap(), int(10));
        assert_eq!(colength_bruteforce(6).unwrap(), int(14));
    }

    #[test]
    fn row_count_examples() {
        let a4 = a_count(4).unwrap();
        assert_eq!((a4.formula.clone(), a4.brute.clone()), (int(3), int(3)));
        assert_eq!(a_count(5).unwrap().formula, int(3));
        assert_eq!(a_count(0).unwrap(), Paired { formula: int(1), brute: int(1) });

        assert_eq!(b_count(6).unwrap(), Paired { formula: int(3), brute: int(3) });
        assert_eq!(b_count(3).unwrap().formula, int(1));
        assert_eq!(b_count(9).unwrap(), Paired { formula: int(7), brute: int(7) });
        assert_eq!(b_count(0).unwrap(), Paired { formula: int(0), brute: int(0) });

        assert_eq!(c_count(8).unwrap(), Paired { formula: int(4), brute: int(4) });
        assert_eq!(c_count(4).unwrap(), Paired { formula: int(1), brute: int(1) });
        assert_eq!(c_count(5).unwrap(), Paired { formula: int(1), brute: int(1) });
        assert!(matches!(c_count(3), Err(Error::Domain { .. })));
    }

    #[test]
    fn multiplicity_sums_by_rows() {
        assert_eq!(l2(5).unwrap(), Paired { formula: int(5), brute: int(5) });
        assert_eq!(l3(6).unwrap(), Paired { formula: int(6), brute: int(6) });
        assert_eq!(l3(3).unwrap(), Paired { formula: int(1), brute: int(1) });
        assert_eq!(l3(2).unwrap(), Paired { formula: int(0), brute: int(0) });
    }

    #[test]
    fn printed_three_row_entry_is_off_by_one() {
        // n = 4 and n = 10 (m = 0, 1): enumeration gives 2 and 20
        let (a, b, c) = L3_PRINTED_6M_PLUS_4;
        for (n, brute) in [(4u64, 2i64), (10, 20)] {
            let m = int((n / 6) as i64);
            assert_eq!(l3(n).unwrap().brute, int(brute));
            assert_eq!(quadratic(&m, a, b, c), int(brute + 1));
            assert_eq!(l3_formula(n), int(brute));
        }
    }

    #[test]
    fn deviation_examples() {
        assert_eq!(asymptotic_deviation(6), BigRational::from_integer(int(2)));
        assert_eq!(asymptotic_deviation(4), BigRational::new(int(5), int(3)));
        assert_eq!(asymptotic_deviation(1), BigRational::new(int(2), int(3)));
    }

    #[test]
    fn codimension_examples() {
        assert_eq!(codimension(1).unwrap(), BigUint::from(1u32));
        assert_eq!(codimension(2).unwrap(), BigUint::from(2u32));
        assert_eq!(codimension(3).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn fast_multiplicity_matches_classification() {
        for n in 0..=16 {
            for_each_partition(n, None, |parts| {
                let lambda = Partition::new(parts.to_vec()).unwrap();
                assert_eq!(multiplicity_of_parts(parts), multiplicity(&lambda), "{lambda}");
            });
        }
    }

    #[test]
    fn report_labels_round_trip() {
        for q in Quantity::ALL {
            assert_eq!(q.label().parse::<Quantity>().unwrap(), q);
        }
        let r = InvariantReport::for_degree(Quantity::Colength, 6).unwrap();
        assert!(r.agrees);
        assert_eq!(r.formula_value, int(14));
    }
}
