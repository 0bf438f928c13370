//! Alternating templates: left-normed words whose decorated positions are
//! skew-symmetrized, one permutation per decoration.
//!
//! Text form, tokens separated by whitespace:
//!
//! | token        | meaning                                                     |
//! |--------------|-------------------------------------------------------------|
//! | `x3`         | the generator `x3`                                          |
//! | `X1^4`       | right multiplication by `x1`, four times (`X1` = once)      |
//! | `~x2`        | slot 2 of the set decorated `~`                             |
//! | `-St3^2`     | two copies of slots 1..3 of the set decorated `-`           |
//!
//! Decorations are single characters from [`DECORATIONS`]; each one names one
//! alternating set over `x1..xk`, `k` being the largest slot it uses. All
//! slots of a set are permuted together, so `-St2^2` expands to
//! `x1x2x1x2 − x2x1x2x1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::One;

use super::expr::{Expr, Name};
use super::multi::MultiElement;
use crate::error::{Error, Result};

/// Characters accepted as set decorations: tilde, bar, hat, double tilde, and two spares.
pub const DECORATIONS: [char; 6] = ['~', '-', '^', '=', '*', '!'];

/// A skeleton leaf: a fixed generator or slot `index` (0-based) of a set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Fixed(Name),
    Alt { set: char, index: usize },
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Fixed(n) => f.write_str(n),
            Slot::Alt { set, index } => write!(f, "{set}x{}", index + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Block {
    /// A single fixed generator, written `x1`.
    Generator(Name),
    /// `x_i` repeated, written `X1^e`.
    Power { name: Name, exp: u32 },
    /// One slot of a set, written `~x2`.
    Slot { set: char, index: usize },
    /// `St_size` over the set, repeated `power` times.
    Standard { set: char, size: usize, power: u32 },
}

impl Block {
    fn slots(&self) -> Vec<Slot> {
        match self {
            Block::Generator(n) => vec![Slot::Fixed(n.clone())],
            Block::Power { name, exp } => vec![Slot::Fixed(name.clone()); *exp as usize],
            Block::Slot { set, index } => vec![Slot::Alt { set: *set, index: *index }],
            Block::Standard { set, size, power } => (0..*power)
                .flat_map(|_| (0..*size).map(|index| Slot::Alt { set: *set, index }))
                .collect(),
        }
    }

    fn is_empty(&self) -> bool {
        match self {
            Block::Power { exp, .. } => *exp == 0,
            Block::Standard { size, power, .. } => *size == 0 || *power == 0,
            _ => false,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Generator(n) => f.write_str(n),
            Block::Power { name, exp } => {
                let upper = name.replacen('x', "X", 1);
                if *exp == 1 {
                    f.write_str(&upper)
                } else {
                    write!(f, "{upper}^{exp}")
                }
            }
            Block::Slot { set, index } => write!(f, "{set}x{}", index + 1),
            Block::Standard { set, size, power } => {
                if *power == 1 {
                    write!(f, "{set}St{size}")
                } else {
                    write!(f, "{set}St{size}^{power}")
                }
            }
        }
    }
}

/// A word pattern plus the alternating sets its decorated slots draw from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingTemplate {
    blocks: Vec<Block>,
    sets: BTreeMap<char, Vec<Name>>,
}

fn standard_names(k: usize) -> Vec<Name> {
    (1..=k).map(|i| format!("x{i}")).collect()
}

impl AlternatingTemplate {
    /// Builds a template whose sets are `x1..xk` for each decoration used.
    /// Empty blocks (zero powers) are dropped.
    pub fn from_blocks(blocks: Vec<Block>) -> Result<Self> {
        let blocks: Vec<Block> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        let mut sizes: BTreeMap<char, usize> = BTreeMap::new();
        for b in &blocks {
            let (set, need) = match b {
                Block::Slot { set, index } => (*set, index + 1),
                Block::Standard { set, size, .. } => (*set, *size),
                _ => continue,
            };
            let e = sizes.entry(set).or_insert(0);
            *e = (*e).max(need);
        }
        let sets = sizes.into_iter().map(|(s, k)| (s, standard_names(k))).collect();
        Self::new(blocks, sets)
    }

    /// Builds a template with explicit set contents.
    pub fn new(blocks: Vec<Block>, sets: BTreeMap<char, Vec<Name>>) -> Result<Self> {
        for names in sets.values() {
            if let Some(dup) = names.iter().duplicates().next() {
                return Err(Error::DuplicateName(dup.clone()));
            }
        }
        let t = AlternatingTemplate { blocks, sets };
        for slot in t.slots() {
            if let Slot::Alt { set, index } = slot {
                let names = t.sets.get(&set).ok_or(Error::UnknownSet(set))?;
                if index >= names.len() {
                    return Err(Error::parse(
                        format!("{set}x{}", index + 1),
                        format!("set `{set}` has only {} names", names.len()),
                    ));
                }
            }
        }
        Ok(t)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn sets(&self) -> &BTreeMap<char, Vec<Name>> {
        &self.sets
    }

    pub fn slots(&self) -> Vec<Slot> {
        self.blocks.iter().flat_map(Block::slots).collect()
    }

    pub fn degree(&self) -> usize {
        self.slots().len()
    }

    /// The left-normed skeleton; `None` for an empty template.
    pub fn skeleton(&self) -> Option<Expr<Slot>> {
        Expr::word(self.slots())
    }

    /// Occurrence count of each generator, if every expanded term has the same counts.
    pub fn multidegree(&self) -> Option<BTreeMap<Name, usize>> {
        let slots = self.slots();
        let mut counts: BTreeMap<Name, usize> = BTreeMap::new();
        let mut per_set: BTreeMap<char, BTreeMap<usize, usize>> = BTreeMap::new();
        for s in &slots {
            match s {
                Slot::Fixed(n) => *counts.entry(n.clone()).or_default() += 1,
                Slot::Alt { set, index } => {
                    *per_set.entry(*set).or_default().entry(*index).or_default() += 1
                }
            }
        }
        for (set, names) in &self.sets {
            let by_index = per_set.get(set).cloned().unwrap_or_default();
            let uses: Vec<usize> = (0..names.len()).map(|i| by_index.get(&i).copied().unwrap_or(0)).collect();
            // a permutation moves counts between names unless they are all equal
            if !uses.iter().all_equal() {
                return None;
            }
            for (name, k) in names.iter().zip(uses) {
                *counts.entry(name.clone()).or_default() += k;
            }
        }
        counts.retain(|_, k| *k > 0);
        Some(counts)
    }

    /// Expands every set's alternation; see [`expand_alternations`].
    pub fn expand(&self) -> MultiElement {
        match self.skeleton() {
            Some(skeleton) => expand_alternations(&skeleton, &self.sets)
                .expect("sets validated at construction"),
            None => MultiElement::zero(),
        }
    }
}

impl fmt::Display for AlternatingTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.blocks.iter().join(" "))
    }
}

fn parse_index(tok: &str, digits: &str) -> Result<usize> {
    match digits.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i),
        _ => Err(Error::parse(tok, "expected a positive index")),
    }
}

fn split_power<'t>(tok: &str, body: &'t str) -> Result<(&'t str, u32)> {
    match body.split_once('^') {
        None => Ok((body, 1)),
        Some((head, exp)) => exp
            .parse::<u32>()
            .map(|e| (head, e))
            .map_err(|_| Error::parse(tok, "expected a non-negative exponent")),
    }
}

fn parse_block(tok: &str) -> Result<Block> {
    let mut chars = tok.chars();
    let first = chars.next().ok_or_else(|| Error::parse(tok, "empty token"))?;
    if DECORATIONS.contains(&first) {
        let body = chars.as_str();
        if let Some(rest) = body.strip_prefix("St") {
            let (size, power) = split_power(tok, rest)?;
            return Ok(Block::Standard {
                set: first,
                size: parse_index(tok, size)?,
                power,
            });
        }
        if let Some(idx) = body.strip_prefix('x') {
            return Ok(Block::Slot {
                set: first,
                index: parse_index(tok, idx)? - 1,
            });
        }
        return Err(Error::parse(tok, "expected `St<k>` or `x<i>` after a decoration"));
    }
    match first {
        'x' => Ok(Block::Generator(format!("x{}", parse_index(tok, chars.as_str())?))),
        'X' => {
            let (idx, exp) = split_power(tok, chars.as_str())?;
            Ok(Block::Power {
                name: format!("x{}", parse_index(tok, idx)?),
                exp,
            })
        }
        _ => Err(Error::parse(tok, "unknown token")),
    }
}

impl FromStr for AlternatingTemplate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s.split_whitespace().map(parse_block).collect::<Result<Vec<_>>>()?;
        AlternatingTemplate::from_blocks(blocks)
    }
}

/// All permutations of `0..k` with their signs.
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    (0..k)
        .permutations(k)
        .map(|p| {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            (p, inversions % 2 == 1)
        })
        .collect()
}

/// `Σ Π sign(σ_s) · skeleton[slot (s, i) ↦ names_s[σ_s(i)]]` over independent
/// permutations `σ_s` of every set `s`. A declared set without slots still
/// contributes its (vanishing, for two or more names) sign sum.
pub fn expand_alternations(
    skeleton: &Expr<Slot>,
    sets: &BTreeMap<char, Vec<Name>>,
) -> Result<MultiElement> {
    for names in sets.values() {
        if let Some(dup) = names.iter().duplicates().next() {
            return Err(Error::DuplicateName(dup.clone()));
        }
    }
    for leaf in skeleton.leaves() {
        if let Slot::Alt { set, index } = leaf {
            let names = sets.get(set).ok_or(Error::UnknownSet(*set))?;
            if *index >= names.len() {
                return Err(Error::parse(leaf.to_string(), "slot index outside its set"));
            }
        }
    }
    let keys: Vec<char> = sets.keys().copied().collect();
    if keys.is_empty() {
        let word = skeleton.map(&mut |s: &Slot| match s {
            Slot::Fixed(n) => n.clone(),
            Slot::Alt { .. } => unreachable!("slots validated against sets"),
        });
        return Ok(MultiElement::from_expr(word));
    }
    let perms: Vec<Vec<(Vec<usize>, bool)>> =
        keys.iter().map(|k| signed_permutations(sets[k].len())).collect();
    let mut out = MultiElement::zero();
    for choice in perms.iter().map(|v| v.iter()).multi_cartesian_product() {
        let negative = choice.iter().filter(|(_, odd)| *odd).count() % 2 == 1;
        let term = skeleton.map(&mut |slot: &Slot| match slot {
            Slot::Fixed(n) => n.clone(),
            Slot::Alt { set, index } => {
                let k = keys.iter().position(|c| c == set).expect("validated");
                sets[set][choice[k].0[*index]].clone()
            }
        });
        let c = if negative { -BigRational::one() } else { BigRational::one() };
        out.add_term(term, c);
    }
    Ok(out)
}

/// `St_n(names) = Σ_{q∈S_n} (−1)^q x_{q(1)}…x_{q(n)}`, left-normed.
pub fn standard_polynomial(names: &[Name]) -> Result<MultiElement> {
    if names.is_empty() {
        return Err(Error::Domain {
            what: "standard polynomial",
            value: 0,
            requirement: "n >= 1",
        });
    }
    if let Some(dup) = names.iter().duplicates().next() {
        return Err(Error::DuplicateName(dup.clone()));
    }
    Ok(signed_permutations(names.len())
        .into_iter()
        .map(|(p, odd)| {
            let word = Expr::word(p.iter().map(|&i| names[i].clone())).expect("nonempty");
            (word, if odd { -BigRational::one() } else { BigRational::one() })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(k: usize) -> Vec<Name> {
        standard_names(k)
    }

    #[test]
    fn two_element_alternation() {
        let t: AlternatingTemplate = "~x1 ~x2".parse().unwrap();
        assert_eq!(t.expand().to_string(), "x1x2 - x2x1");
        assert_eq!(t.expand(), standard_polynomial(&names(2)).unwrap());
    }

    #[test]
    fn singleton_set_is_identity() {
        let t: AlternatingTemplate = "x2 ~x1 X2".parse().unwrap();
        assert_eq!(t.expand().to_string(), "x2x1x2");
    }

    #[test]
    fn two_independent_sets() {
        let skeleton = Expr::word([
            Slot::Alt { set: '-', index: 0 },
            Slot::Alt { set: '-', index: 1 },
            Slot::Alt { set: '~', index: 0 },
            Slot::Alt { set: '~', index: 1 },
        ])
        .unwrap();
        let sets = BTreeMap::from([
            ('-', vec!["x1".to_string(), "x2".to_string()]),
            ('~', vec!["y1".to_string(), "y2".to_string()]),
        ]);
        let m = expand_alternations(&skeleton, &sets).unwrap();
        assert_eq!(m.to_string(), "x1x2y1y2 - x1x2y2y1 - x2x1y1y2 + x2x1y2y1");
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let skeleton = Expr::word([Slot::Alt { set: '~', index: 0 }]).unwrap();
        let sets = BTreeMap::from([('~', vec!["x1".to_string(), "x1".to_string()])]);
        assert_eq!(
            expand_alternations(&skeleton, &sets),
            Err(Error::DuplicateName("x1".into()))
        );
        assert!(standard_polynomial(&["y".to_string(), "y".to_string()]).is_err());
        assert!(AlternatingTemplate::new(vec![], sets).is_err());
    }

    #[test]
    fn standard_polynomial_shapes() {
        let s1 = standard_polynomial(&names(1)).unwrap();
        assert_eq!(s1.to_string(), "x1");
        let s3 = standard_polynomial(&names(3)).unwrap();
        assert_eq!(s3.len(), 6);
        let id: Expr = "x1x2x3".parse().unwrap();
        assert_eq!(s3.coeff(&id), BigRational::one());
        assert_eq!(s3.coeff(&"x2x1x3".parse().unwrap()), -BigRational::one());
    }

    #[test]
    fn shared_permutation_across_copies() {
        let t: AlternatingTemplate = "x1 -St2^2".parse().unwrap();
        assert_eq!(t.expand().to_string(), "x1x1x2x1x2 - x1x2x1x2x1");
    }

    #[test]
    fn text_round_trip() {
        for s in ["x1 ~St3^2 ^St2 X1^3", "~x1 ~x2 ~x3 ~x4 -St2^2 X1", "x1 X1^4", "^x1 ^x2 ~St3 -St2^3"] {
            let t: AlternatingTemplate = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        let t: AlternatingTemplate = "x1 ~St2 X1^0".parse().unwrap();
        assert_eq!(t.to_string(), "x1 ~St2");
    }

    #[test]
    fn multidegree_detects_uneven_sets() {
        let even: AlternatingTemplate = "x1 ~St3^2 ^St2 X1^3".parse().unwrap();
        let md = even.multidegree().unwrap();
        assert_eq!(md["x1"], 7);
        assert_eq!(md["x2"], 3);
        assert_eq!(md["x3"], 2);
        let uneven: AlternatingTemplate = "~x1 ~x2 ~St3".parse().unwrap();
        assert_eq!(uneven.multidegree(), None);
    }

    #[test]
    fn parse_errors_name_the_token() {
        match "x1 ~Sx3".parse::<AlternatingTemplate>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "~Sx3"),
            other => panic!("{other:?}"),
        }
        assert!("x0".parse::<AlternatingTemplate>().is_err());
        assert!("X1^q".parse::<AlternatingTemplate>().is_err());
    }
}
