//! Linear independence of elements of the relatively free algebra, certified
//! by evaluating on the generating algebra: if the value vectors of some
//! substitutions have full rank, no nontrivial combination can be an identity.

use itertools::Itertools;
use num_rational::BigRational;
use serde::Serialize;

use super::evaluate::{evaluate, Substitution};
use super::expr::Name;
use super::multi::MultiElement;
use super::rank::{bareiss_rank, null_vector, rational_rank};
use crate::algebra::{LeibnizElement, RationalPolynomial};
use crate::error::Result;

fn values(elements: &[MultiElement], subs: &[Substitution]) -> Result<Vec<Vec<LeibnizElement>>> {
    subs.iter()
        .map(|s| elements.iter().map(|e| evaluate(e, s)).collect())
        .collect()
}

fn flatten(values: &[Vec<LeibnizElement>], columns: usize) -> Vec<Vec<BigRational>> {
    let max_degree = values
        .iter()
        .flatten()
        .filter_map(|v| v.poly.degree())
        .max()
        .unwrap_or(0);
    let mut rows = Vec::new();
    for per_sub in values {
        let coords: Vec<Vec<BigRational>> = per_sub.iter().map(|v| v.coordinates(max_degree)).collect();
        for i in 0..3 + max_degree as usize + 1 {
            rows.push((0..columns).map(|j| coords[j][i].clone()).collect());
        }
    }
    rows
}

/// One row per (substitution, coordinate) and one column per element.
/// Coordinates are `α, β, γ, f₀ … f_D` with `D` the largest degree in the batch.
pub fn evaluation_matrix(elements: &[MultiElement], subs: &[Substitution]) -> Result<Vec<Vec<BigRational>>> {
    Ok(flatten(&values(elements, subs)?, elements.len()))
}

/// The outcome of an independence check. `independent == true` is a proof;
/// `false` only means these substitutions do not separate the elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub elements: Vec<String>,
    pub substitutions: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub rank: usize,
    pub independent: bool,
    /// A column combination the matrix cannot rule out, when not independent.
    pub null_vector: Option<Vec<String>>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn strings<'a, I: IntoIterator<Item = &'a BigRational>>(row: I) -> Vec<String> {
    row.into_iter().map(ToString::to_string).collect()
}

/// Exact rank of the evaluation matrix, by Bareiss elimination and checked
/// against rational elimination.
pub fn independence_certificate(
    labels: &[String],
    elements: &[MultiElement],
    subs: &[Substitution],
) -> Result<Certificate> {
    let matrix = evaluation_matrix(elements, subs)?;
    let rank = bareiss_rank(&matrix);
    assert_eq!(rank, rational_rank(&matrix), "elimination methods disagree");
    let independent = rank == elements.len();
    let null = (!independent)
        .then(|| null_vector(&matrix, elements.len()))
        .flatten()
        .map(|v| strings(&v));
    Ok(Certificate {
        elements: labels.to_vec(),
        substitutions: subs.iter().map(ToString::to_string).collect(),
        matrix: matrix.iter().map(|r| strings(r)).collect(),
        rank,
        independent,
        null_vector: null,
    })
}

/// `{a, b, c, a+f, b+f, c+f, f}` in that order.
pub fn substitution_pool(f: &RationalPolynomial) -> Vec<LeibnizElement> {
    let fe = LeibnizElement::poly(f.clone());
    let lie = [LeibnizElement::a(), LeibnizElement::b(), LeibnizElement::c()];
    let mut pool: Vec<LeibnizElement> = lie.to_vec();
    pool.extend(lie.iter().map(|x| x.clone() + fe.clone()));
    pool.push(fe);
    pool
}

/// Greedy search: walks every assignment of pool values to `generators` in
/// lexicographic order, keeping a substitution whenever it raises the rank,
/// and stops at full rank. Deterministic for fixed inputs.
pub fn search_substitutions(
    elements: &[MultiElement],
    generators: &[Name],
    pool: &[LeibnizElement],
) -> Result<Vec<Substitution>> {
    let mut chosen: Vec<Substitution> = Vec::new();
    let mut chosen_values: Vec<Vec<LeibnizElement>> = Vec::new();
    let mut rank = 0;
    if elements.is_empty() {
        return Ok(chosen);
    }
    for choice in (0..generators.len()).map(|_| 0..pool.len()).multi_cartesian_product() {
        let s: Substitution = generators
            .iter()
            .zip(&choice)
            .map(|(g, &i)| (g.clone(), pool[i].clone()))
            .collect();
        let row: Vec<LeibnizElement> = elements.iter().map(|e| evaluate(e, &s)).collect::<Result<_>>()?;
        if row.iter().all(LeibnizElement::is_zero) {
            continue;
        }
        chosen_values.push(row);
        let r = bareiss_rank(&flatten(&chosen_values, elements.len()));
        if r > rank {
            rank = r;
            chosen.push(s);
            if rank == elements.len() {
                break;
            }
        } else {
            chosen_values.pop();
        }
    }
    Ok(chosen)
}
