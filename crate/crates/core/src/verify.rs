//! Checks shared by the command line and the test suites. Each function
//! returns plain records; callers decide how to print them.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::random::{rng, ElementSampler};
use crate::algebra::{leibniz_defect, LeibnizElement, RationalPolynomial};
use crate::error::Result;
use crate::invariants::{self, Delta, Paired};
use crate::partitions::{for_each_partition, Partition};
use crate::symbolic::catalog::{witness_polynomial, witness_substitution};
use crate::symbolic::{
    evaluate, generator_element, independence_certificate, search_substitutions, substitution_pool,
    CatalogId, Certificate, Family, MultiElement, Name, ShapeParams, Substitution,
};

/// One named check and, on failure, what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, failure: Option<String>, ok: impl Into<String>) -> Check {
        Check {
            label: label.into(),
            passed: failure.is_none(),
            detail: failure.unwrap_or_else(|| ok.into()),
        }
    }
}

fn paired(name: &str, n: u64, p: &Paired) -> Option<String> {
    (!p.agrees()).then(|| format!("{name}({n}): formula {} vs enumeration {}", p.formula, p.brute))
}

/// Multiplicity formula against the corner rule over every `λ ⊢ n`.
pub fn multiplicity_sweep(n: u32) -> Check {
    let mut count = 0u64;
    let mut failure = None;
    for_each_partition(n, None, |parts| {
        count += 1;
        if failure.is_some() {
            return;
        }
        let lambda = Partition::new(parts.to_vec()).expect("enumeration yields partitions");
        let (f, c) = (invariants::multiplicity(&lambda), invariants::multiplicity_via_corners(&lambda));
        if f != c {
            failure = Some(format!("λ = ({lambda}): formula {f}, corner rule {c}"));
        }
    });
    Check::new(format!("n={n}"), failure, format!("{count} partitions agree"))
}

/// `l_n − n²/3 = (n + δ)/3`, so `0 < l_n − n²/3 ≤ (n + 1)/3`.
pub fn deviation(n: u64) -> Check {
    let dev = invariants::asymptotic_deviation(n);
    let expected = BigRational::new(BigInt::from(n) + Delta::of(n).value(), BigInt::from(3));
    let bound = BigRational::new(BigInt::from(n + 1), BigInt::from(3));
    let zero = BigRational::from_integer(BigInt::from(0));
    let failure = if dev != expected {
        Some(format!("deviation {dev} differs from (n+δ)/3 = {expected}"))
    } else if dev <= zero || dev > bound {
        Some(format!("deviation {dev} outside (0, {bound}]"))
    } else {
        None
    };
    Check::new(format!("n={n}"), failure, format!("deviation {dev}"))
}

/// Colength three ways plus the row-count tables at `n`.
pub fn colength_tables(n: u64) -> Result<Check> {
    let exact = invariants::colength_exact(n);
    let cases = invariants::colength_cases(n);
    let brute = invariants::colength_bruteforce(n)?;
    let mut failure = (exact != cases || exact != brute)
        .then(|| format!("l_{n}: closed form {exact}, case table {cases}, enumeration {brute}"));
    let mut pairs = vec![
        ("a", invariants::a_count(n)?),
        ("b", invariants::b_count(n)?),
        ("l2", invariants::l2(n)?),
        ("l3", invariants::l3(n)?),
    ];
    if n >= 4 {
        pairs.push(("c", invariants::c_count(n)?));
        let first_column = invariants::c_by_first_column(n)?;
        pairs.push((
            "c=a(n-4)+b(n-4)",
            Paired {
                formula: invariants::c_formula(n)?,
                brute: first_column,
            },
        ));
    }
    if n >= 3 {
        pairs.push((
            "b=a(n-3)+b(n-3)",
            Paired {
                formula: invariants::b_formula(n),
                brute: invariants::b_by_recurrence(n)?,
            },
        ));
    }
    for (name, p) in &pairs {
        failure = failure.or_else(|| paired(name, n, p));
    }
    Ok(Check::new(format!("n={n}"), failure, format!("l_n={exact}")))
}

/// The six basis-like elements `a, b, c, 1, t, t²`.
pub fn leibniz_basis() -> Vec<LeibnizElement> {
    vec![
        LeibnizElement::a(),
        LeibnizElement::b(),
        LeibnizElement::c(),
        LeibnizElement::t_pow(0),
        LeibnizElement::t_pow(1),
        LeibnizElement::t_pow(2),
    ]
}

/// The Leibniz identity on all triples from `elements`.
pub fn leibniz_triples(elements: &[LeibnizElement]) -> Check {
    let mut count = 0;
    let mut failure = None;
    for ((u, v), w) in elements.iter().cartesian_product(elements).cartesian_product(elements) {
        count += 1;
        let d = leibniz_defect(u, v, w);
        if failure.is_none() && !d.is_zero() {
            failure = Some(format!("({u}, {v}, {w}) has defect {d}"));
        }
    }
    Check::new("basis triples", failure, format!("{count} triples"))
}

/// The Leibniz identity on `count` random triples.
pub fn leibniz_random(count: usize, seed: u64, sampler: ElementSampler) -> Check {
    let mut r = rng(seed);
    let mut failure = None;
    for _ in 0..count {
        let (u, v, w) = (sampler.sample(&mut r), sampler.sample(&mut r), sampler.sample(&mut r));
        let d = leibniz_defect(&u, &v, &w);
        if !d.is_zero() {
            failure = Some(format!("({u}, {v}, {w}) has defect {d}"));
            break;
        }
    }
    Check::new(format!("random triples seed={seed}"), failure, format!("{count} triples"))
}

/// A catalog element with its expansion.
#[derive(Debug, Clone)]
pub struct Instance {
    pub id: CatalogId,
    pub params: ShapeParams,
    pub element: MultiElement,
    pub degree: usize,
}

impl Instance {
    pub fn new(id: CatalogId, params: &ShapeParams) -> Result<Instance> {
        let t = generator_element(id, params)?;
        Ok(Instance {
            id,
            params: params.clone(),
            degree: t.degree(),
            element: t.expand(),
        })
    }

    pub fn label(&self) -> String {
        format!("{} {}", self.id, self.params)
    }

    pub fn generators(&self) -> Vec<Name> {
        self.element.generators().into_iter().cloned().collect()
    }
}

/// Every admissible instance of `family` with parameters drawn from `values`.
pub fn instances(family: Family, values: &[u32]) -> Vec<Instance> {
    ShapeParams::grid(family, values)
        .iter()
        .flat_map(|p| CatalogId::of_family(family).into_iter().map(move |id| Instance::new(id, p)))
        .filter_map(Result::ok)
        .collect()
}

/// A witness element is nonzero on its substitution, with `f` given by `poly`.
pub fn witness_nonzero(inst: &Instance, poly: &RationalPolynomial) -> Result<Check> {
    let s = witness_substitution(inst.id, poly).expect("caller passes witness elements");
    let v = evaluate(&inst.element, &s)?;
    let failure = v.is_zero().then(|| format!("vanishes at {s}"));
    Ok(Check::new(inst.label(), failure, format!("value {v}")))
}

/// Like [`witness_nonzero`], but when the standard substitution vanishes,
/// looks for any nonzero value over the pool `{a, b, c, a+f, b+f, c+f, f}`.
/// A fallback is flagged in the detail, which then starts with `fallback`.
pub fn witness_check(inst: &Instance, poly: &RationalPolynomial) -> Result<Check> {
    let first = witness_nonzero(inst, poly)?;
    if first.passed {
        return Ok(first);
    }
    let pool = substitution_pool(poly);
    let gens = inst.generators();
    for choice in (0..gens.len()).map(|_| 0..pool.len()).multi_cartesian_product() {
        let s: Substitution = gens.iter().cloned().zip(choice.iter().map(|&i| pool[i].clone())).collect();
        let v = evaluate(&inst.element, &s)?;
        if !v.is_zero() {
            let detail = format!("fallback: standard substitution vanishes; value {v} at {s}");
            return Ok(Check::new(inst.label(), None, detail));
        }
    }
    Ok(first)
}

/// Value choices for the vanishing checks: injective maps into `{a, b, c, t}`
/// followed by `random` seeded substitutions.
pub fn vanishing_substitutions(generators: &[Name], random: usize, seed: u64) -> Vec<Substitution> {
    let basis = [
        LeibnizElement::a(),
        LeibnizElement::b(),
        LeibnizElement::c(),
        LeibnizElement::t_pow(1),
    ];
    let mut out: Vec<Substitution> = basis
        .iter()
        .permutations(generators.len())
        .map(|vals| generators.iter().cloned().zip(vals.into_iter().cloned()).collect())
        .collect();
    // integer values lose nothing: the elements are multihomogeneous, so
    // clearing denominators only rescales the value
    let sampler = ElementSampler::new(3, 9);
    let mut r = rng(seed);
    out.extend(
        (0..random).map(|_| generators.iter().map(|g| (g.clone(), sampler.sample_integral(&mut r))).collect()),
    );
    out
}

/// The element is zero on every substitution in `subs`.
pub fn vanishes(inst: &Instance, subs: &[Substitution]) -> Result<Check> {
    for s in subs {
        let v = evaluate(&inst.element, s)?;
        if !v.is_zero() {
            return Ok(Check::new(inst.label(), Some(format!("value {v} at {s}")), ""));
        }
    }
    Ok(Check::new(inst.label(), None, format!("zero on {} substitutions", subs.len())))
}

/// Which catalog elements the witness suite covers.
pub fn witness_families() -> impl Iterator<Item = Family> {
    Family::ALL.into_iter().filter(|f| !matches!(f, Family::F1 | Family::F2 | Family::F3))
}

/// Nonzero witnesses with `f = t^deg` (see [`witness_check`]) and the
/// vanishing of the later members of the four-row families.
pub fn witness_suite(values: &[u32], random: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for family in witness_families() {
        for inst in instances(family, values) {
            if inst.id.is_witness() {
                out.push(witness_check(&inst, &witness_polynomial(inst.degree))?);
            } else if family <= Family::H7 {
                let subs = vanishing_substitutions(&inst.generators(), random, seed);
                out.push(vanishes(&inst, &subs)?);
            }
        }
    }
    Ok(out)
}

/// Certificate for all members of `family` at `params`, with substitutions found
/// by [`search_substitutions`] over the pool built from `f = t^deg`.
pub fn family_certificate(family: Family, params: &ShapeParams) -> Result<Certificate> {
    let members: Vec<Instance> = CatalogId::of_family(family)
        .into_iter()
        .map(|id| Instance::new(id, params))
        .collect::<Result<_>>()?;
    let degree = members.iter().map(|m| m.degree).max().unwrap_or(0);
    let generators: Vec<Name> = members
        .iter()
        .flat_map(Instance::generators)
        .sorted()
        .dedup()
        .collect();
    let elements: Vec<MultiElement> = members.iter().map(|m| m.element.clone()).collect();
    let pool = substitution_pool(&witness_polynomial(degree));
    let subs = search_substitutions(&elements, &generators, &pool)?;
    let labels: Vec<String> = members.iter().map(Instance::label).collect();
    independence_certificate(&labels, &elements, &subs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for n in 1..=10 {
            assert!(multiplicity_sweep(n).passed);
            assert!(deviation(n.into()).passed);
            assert!(colength_tables(n.into()).unwrap().passed);
        }
        assert!(leibniz_triples(&leibniz_basis()).passed);
    }

    #[test]
    fn vanishing_substitutions_are_injective_first() {
        let gens: Vec<Name> = vec!["x1".into(), "x2".into()];
        let subs = vanishing_substitutions(&gens, 3, 7);
        assert_eq!(subs.len(), 12 + 3);
        assert_eq!(subs[0].to_string(), "x1=a; x2=b");
    }

    #[test]
    fn h8_witness() {
        let inst = Instance::new("h8".parse().unwrap(), &"n=3".parse().unwrap()).unwrap();
        // ((a + t³)(a + t³))(a + t³) = (t³)″ = 6t
        let c = witness_nonzero(&inst, &witness_polynomial(3)).unwrap();
        assert!(c.passed);
        assert_eq!(c.detail, "value [6t]");
        assert!(!witness_nonzero(&inst, &RationalPolynomial::t_pow(1)).unwrap().passed);
    }
}
