use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{operators, q_bracket, CasimirDef, LinOp, RelationDef, Representation};
use crate::error::{Error, Result};
use crate::numerics::{rational_string, ser_rational_map, solve_exact, LaurentPoly, LinearSolution, Rational};

/// Measured versus expected structure constants for one relation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationReport {
    pub relation_id: String,
    pub representation: String,
    #[serde(serialize_with = "ser_rational_map")]
    pub params: BTreeMap<String, Rational>,
    pub max_degree: i64,
    #[serde(serialize_with = "ser_rational_map")]
    pub measured_constants: BTreeMap<String, Rational>,
    #[serde(serialize_with = "ser_rational_map")]
    pub quoted_constants: BTreeMap<String, Rational>,
    /// True iff the residual vanishes on every monomial with the expected
    /// constants substituted.
    pub exact_match: bool,
    /// Monomial degrees whose residual under the expected constants is nonzero.
    pub residual_degrees: Vec<i64>,
}

/// Measures the constants of `relation_id` on `x^0 .. x^max_degree`.
pub fn check_relation(rep: &Representation, relation_id: &str, max_degree: i64) -> Result<RelationReport> {
    check_relation_def(rep, rep.relation(relation_id)?, max_degree)
}

/// Every declared relation of `rep`.
pub fn check_all(rep: &Representation, max_degree: i64) -> Result<Vec<RelationReport>> {
    rep.relations.iter().map(|rel| check_relation_def(rep, rel, max_degree)).collect()
}

/// As [`check_relation`] for a relation that need not be registered on `rep`.
pub fn check_relation_def(rep: &Representation, rel: &RelationDef, max_degree: i64) -> Result<RelationReport> {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut row_degree = Vec::new();
    let mut residual_degrees = Vec::new();
    for n in 0..=max_degree {
        let image = rel.lhs.on_monomial(n);
        let basis: Vec<LaurentPoly<Rational>> = rel.basis.iter().map(|t| t.op.on_monomial(n)).collect();
        let expected = rel
            .basis
            .iter()
            .zip(&basis)
            .fold(LaurentPoly::zero(), |acc, (t, b)| acc + b.scale(&t.expected));
        if expected != image {
            residual_degrees.push(n);
        }
        let degrees = basis
            .iter()
            .chain(std::iter::once(&image))
            .flat_map(|p| p.terms().map(|(d, _)| d).collect::<Vec<_>>());
        let mut seen: Vec<i64> = degrees.collect();
        seen.sort_unstable();
        seen.dedup();
        for d in seen {
            rows.push(basis.iter().map(|b| b.coeff(d)).collect());
            rhs.push(image.coeff(d));
            row_degree.push(n);
        }
    }
    let measured = match solve_exact(&rows, &rhs, rel.basis.len()) {
        LinearSolution::Solved { values, .. } => values,
        LinearSolution::Inconsistent { row } => {
            return Err(Error::SpanFailure { relation: rel.id.clone(), degree: row_degree[row] })
        }
    };
    Ok(RelationReport {
        relation_id: rel.id.clone(),
        representation: rep.name.clone(),
        params: rep.params.clone(),
        max_degree,
        measured_constants: rel.basis.iter().map(|t| t.constant.clone()).zip(measured).collect(),
        quoted_constants: rel.basis.iter().map(|t| (t.constant.clone(), t.expected.clone())).collect(),
        exact_match: residual_degrees.is_empty(),
        residual_degrees,
    })
}

/// Scalar value of the representation's Casimir.
pub fn casimir_value(rep: &Representation, max_degree: i64) -> Result<Rational> {
    let def = rep
        .casimirs
        .first()
        .ok_or_else(|| Error::Parameter(format!("representation {} has no registered Casimir", rep.name)))?;
    casimir_value_of(def, max_degree)
}

/// Requires the image of every `x^n`, `n <= max_degree`, to be `c x^n` for
/// one constant `c`, and returns `c`.
pub fn casimir_value_of(def: &CasimirDef, max_degree: i64) -> Result<Rational> {
    let mut value: Option<Rational> = None;
    for n in 0..=max_degree {
        let image = def.op.on_monomial(n);
        let c = image.coeff(n);
        if image != LaurentPoly::monomial(c.clone(), n) || value.as_ref().is_some_and(|v| *v != c) {
            return Err(Error::NotCentral { degree: n });
        }
        value = Some(c);
    }
    value.ok_or_else(|| Error::Parameter("max_degree must be nonnegative".into()))
}

/// The three degenerate DAHA identities on `x^0 .. x^max_degree`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DahaReport {
    pub k: String,
    pub max_degree: i64,
    pub reflection_negates_z: bool,
    pub reflection_negates_d: bool,
    pub commutator: bool,
}

impl DahaReport {
    pub fn passed(&self) -> bool {
        self.reflection_negates_z && self.reflection_negates_d && self.commutator
    }
}

pub fn daha_check(k: &Rational, max_degree: i64) -> DahaReport {
    let (d, z, s) = super::rep_daha(k);
    let two_k = k + k;
    DahaReport {
        k: rational_string(k),
        max_degree,
        reflection_negates_z: (s.clone() * z.clone() * s.clone() + z.clone()).vanishes_to(max_degree),
        reflection_negates_d: (s.clone() * d.clone() * s.clone() + d.clone()).vanishes_to(max_degree),
        commutator: q_bracket(&d, &z, Rational::from_integer(1.into()))
            .agrees_with(&(LinOp::identity() + s.scale(two_k)), max_degree),
    }
}

/// Relation between the q-Laguerre and second q-Bessel operators.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntertwiningReport {
    #[serde(serialize_with = "ser_rational_map")]
    pub params: BTreeMap<String, Rational>,
    pub max_degree: i64,
    pub seed: u64,
    /// `dilate(1/q) . (L_{a,q} + a) = Y_{a,q,2} + a` on all monomials and on
    /// a seeded random degree-10 polynomial.
    pub holds: bool,
    /// First monomial degree where `(L_{a,q} + a) . dilate(1/q)` differs.
    pub other_order_fails_at: Option<i64>,
}

/// Seed used when the caller has no preference.
pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn intertwining_check(q: &Rational, a: &Rational, max_degree: i64, seed: u64) -> IntertwiningReport {
    let dil = LinOp::dilate(Rational::from_integer(1.into()) / q);
    let shifted = operators::q_laguerre(a, q) + LinOp::constant(a.clone());
    let target = operators::q_bessel2(a, q) + LinOp::constant(a.clone());
    let lhs = dil.clone() * shifted.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = LaurentPoly::from_terms(
        (0..=10).map(|d| (d, Rational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=20).into()))),
    );
    let holds = lhs.agrees_with(&target, max_degree) && lhs.apply(&random) == target.apply(&random);
    let other = shifted * dil;
    let other_order_fails_at = (0..=max_degree).find(|&n| other.on_monomial(n) != target.on_monomial(n));
    IntertwiningReport {
        params: [("q".to_string(), q.clone()), ("a".to_string(), a.clone())].into_iter().collect(),
        max_degree,
        seed,
        holds,
        other_order_fails_at,
    }
}

/// Whether `op` maps `x^0 .. x^max_degree` to ordinary polynomials.
pub fn preserves_polynomials(op: &LinOp<Rational>, max_degree: i64) -> bool {
    (0..=max_degree).all(|n| op.on_monomial(n).is_proper())
}

impl RelationReport {
    /// Measured constant by name; zero if absent.
    pub fn measured(&self, name: &str) -> Rational {
        self.measured_constants.get(name).cloned().unwrap_or_else(Rational::zero)
    }
}
