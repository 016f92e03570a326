use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::{anticommutator, operators, q_bracket, LinOp};
use crate::error::{Error, Result};
use crate::numerics::{LaurentPoly, Rational};

type Op = LinOp<Rational>;

/// One basis operator in a relation's right-hand side, with the constant
/// the source formula attaches to it.
#[derive(Debug, Clone)]
pub struct BasisTerm {
    pub constant: String,
    pub label: String,
    pub op: Op,
    pub expected: Rational,
}

/// A relation `lhs = sum_i c_i B_i`.
#[derive(Debug, Clone)]
pub struct RelationDef {
    pub id: String,
    pub lhs: Op,
    pub basis: Vec<BasisTerm>,
}

/// A Casimir polynomial in the generators and its expected scalar value.
#[derive(Debug, Clone)]
pub struct CasimirDef {
    pub id: String,
    pub op: Op,
    pub expected: Rational,
}

/// Concrete realization of an Askey-Wilson type algebra on polynomials.
#[derive(Debug, Clone)]
pub struct Representation {
    pub name: String,
    pub params: BTreeMap<String, Rational>,
    pub x: Op,
    pub y: Op,
    pub z: Op,
    pub relations: Vec<RelationDef>,
    /// The first entry is the one `casimir_value` evaluates.
    pub casimirs: Vec<CasimirDef>,
}

impl Representation {
    pub fn relation(&self, id: &str) -> Result<&RelationDef> {
        self.relations.iter().find(|r| r.id == id).ok_or_else(|| {
            Error::Parameter(format!("representation {} has no relation {id:?}", self.name))
        })
    }

    pub fn relation_ids(&self) -> Vec<&str> {
        self.relations.iter().map(|r| r.id.as_str()).collect()
    }
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn term(constant: &str, label: &str, op: &Op, expected: Rational) -> BasisTerm {
    BasisTerm { constant: constant.into(), label: label.into(), op: op.clone(), expected }
}

fn relation(id: &str, lhs: Op, basis: Vec<BasisTerm>) -> RelationDef {
    RelationDef { id: id.into(), lhs, basis }
}

fn params(pairs: &[(&str, &Rational)]) -> BTreeMap<String, Rational> {
    pairs.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect()
}

fn check_q(q: &Rational) -> Result<()> {
    if q.is_zero() || q.abs().is_one() {
        return Err(Error::Parameter(format!("q must avoid 0 and +-1, got {q}")));
    }
    Ok(())
}

/// `XZ - qZX = 0`, measured against the `Y`, `I` basis.
fn xz_relation(x: &Op, y: &Op, z: &Op, q: &Rational) -> RelationDef {
    relation(
        "XZ-qZX",
        q_bracket(x, z, q.clone()),
        vec![term("mu1", "Y", y, r(0)), term("omega1", "I", &LinOp::identity(), r(0))],
    )
}

/// Little q-Jacobi realization with `r = sqrt(ab)` supplied as a rational.
pub fn rep_little_q_jacobi(q: &Rational, a: &Rational, b: &Rational, root: &Rational) -> Result<Representation> {
    check_q(q)?;
    if root.is_zero() || root.clone() * root.clone() != a.clone() * b.clone() {
        return Err(Error::Parameter(format!("r = {root} is not a nonzero square root of ab = {}", a * b)));
    }
    let one = Rational::one();
    let mu = -(one.clone() / ((one.clone() - q * q) * root));
    let x = LinOp::x();
    let y = (operators::little_q_jacobi(a, b, q) + LinOp::constant(&one + q * a * b)).scale(mu);
    let z = LinOp::mult_by(LaurentPoly::from_terms([(0, one.clone()), (1, -one.clone())]))
        .compose(&LinOp::dilate(one.clone() / q))
        .scale(one.clone() / (q * root));
    let omega2 = -(&one + b) / ((&one + q) * b);
    let omega3 = -(&one + a) / ((&one + q) * root);
    let id = LinOp::identity();
    let relations = vec![
        relation(
            "YX-qXY",
            q_bracket(&y, &x, q.clone()),
            vec![term("mu3", "Z", &z, r(1)), term("omega3", "I", &id, omega3.clone())],
        ),
        relation(
            "ZY-qYZ",
            q_bracket(&z, &y, q.clone()),
            vec![term("mu2", "X", &x, r(1)), term("omega2", "I", &id, omega2.clone())],
        ),
        xz_relation(&x, &y, &z, q),
    ];
    let q2 = q * q;
    let casimir = (y.clone() * x.clone() * z.clone()).scale(&q2 - &one)
        + (x.clone() * x.clone()).scale(q2)
        + z.clone() * z.clone()
        + (x.scale(omega2 * q) + z.scale(omega3)).scale(q + &one);
    Ok(Representation {
        name: "little_q_jacobi".into(),
        params: params(&[("q", q), ("a", a), ("b", b), ("r", root)]),
        x,
        y,
        z,
        relations,
        casimirs: vec![CasimirDef { id: "Q".into(), op: casimir, expected: -(one / b) }],
    })
}

/// (-1)-Jacobi realization `Y = Y_{alpha,beta,-1} - (alpha+beta+1)/2`,
/// `X = x`, `Z f = (x - 1) f(-x)`.
///
/// The anticommutators come out as `{X,Y} = Z - alpha` and
/// `{Y,Z} = X + beta`; the expected constants below are the commonly quoted
/// `Z + alpha` and `Y + beta`, so those two relations report a mismatch.
/// `X^2 + Z^2` is the identity; `Y^2 + Z^2` is kept as a second, non-central
/// entry.
pub fn rep_minus1_jacobi(alpha: &Rational, beta: &Rational) -> Result<Representation> {
    let one = Rational::one();
    let half = Rational::new(1.into(), 2.into());
    let x = LinOp::x();
    let y = operators::minus1_jacobi(alpha, beta) - LinOp::constant((alpha + beta + &one) * &half);
    let z = LinOp::mult_by(LaurentPoly::from_terms([(1, one.clone()), (0, -one.clone())])) * LinOp::reflect();
    let id = LinOp::identity();
    let relations = vec![
        relation(
            "{X,Y}",
            anticommutator(&x, &y),
            vec![term("mu3", "Z", &z, r(1)), term("omega3", "I", &id, alpha.clone())],
        ),
        relation(
            "{X,Z}",
            anticommutator(&x, &z),
            vec![term("mu1", "Y", &y, r(0)), term("omega1", "I", &id, r(0))],
        ),
        relation(
            "{Y,Z}",
            anticommutator(&y, &z),
            vec![
                term("mu2", "X", &x, r(0)),
                term("nu", "Y", &y, r(1)),
                term("omega2", "I", &id, beta.clone()),
            ],
        ),
    ];
    let casimirs = vec![
        CasimirDef { id: "X^2+Z^2".into(), op: x.clone() * x.clone() + z.clone() * z.clone(), expected: r(1) },
        CasimirDef { id: "Y^2+Z^2".into(), op: y.clone() * y.clone() + z.clone() * z.clone(), expected: r(1) },
    ];
    Ok(Representation {
        name: "minus1_jacobi".into(),
        params: params(&[("alpha", alpha), ("beta", beta)]),
        x,
        y,
        z,
        relations,
        casimirs,
    })
}

/// Third q-Bessel realization `Y = Y_{a,q}/(1 - q^2)`, `X = x`,
/// `Z f = q^{-1} f(x/q)`; the n -> oo rescaled limit of the little q-Jacobi
/// realization.
pub fn rep_qbessel3(q: &Rational, a: &Rational) -> Result<Representation> {
    check_q(q)?;
    let one = Rational::one();
    let x = LinOp::x();
    let y = operators::q_bessel3(a, q).scale(one.clone() / (&one - q * q));
    let z = LinOp::dilate(one.clone() / q).scale(one.clone() / q);
    let omega3 = -(&one + a) / (&one + q);
    let id = LinOp::identity();
    let relations = vec![
        relation(
            "YX-qXY",
            q_bracket(&y, &x, q.clone()),
            vec![term("mu3", "Z", &z, r(1)), term("omega3", "I", &id, omega3)],
        ),
        relation(
            "ZY-qYZ",
            q_bracket(&z, &y, q.clone()),
            vec![term("mu2", "X", &x, r(0)), term("omega2", "I", &id, r(0))],
        ),
        xz_relation(&x, &y, &z, q),
    ];
    let casimir = (y.clone() * x.clone() * z.clone()).scale(q * q - &one) + z.clone() * z.clone()
        - z.scale(&one + a);
    Ok(Representation {
        name: "q_bessel3".into(),
        params: params(&[("q", q), ("a", a)]),
        x,
        y,
        z,
        relations,
        casimirs: vec![CasimirDef { id: "Q".into(), op: casimir, expected: -a.clone() }],
    })
}

/// Dunkl-type realization `Y = Y_alpha`, `X = x`, `Z = reflect`.
///
/// The anticommutator `{X,Y}` measures as `+Z + 2 alpha + 1`; the expected
/// constants carry the often-quoted `-Z - 2 alpha - 1`.
pub fn rep_dunkl(alpha: &Rational) -> Result<Representation> {
    let x = LinOp::x();
    let y = operators::reflected_dunkl(alpha);
    let z = LinOp::reflect();
    let id = LinOp::identity();
    let relations = vec![
        relation(
            "{X,Y}",
            anticommutator(&x, &y),
            vec![term("mu3", "Z", &z, r(-1)), term("omega3", "I", &id, -(alpha * r(2)) - r(1))],
        ),
        relation(
            "{X,Z}",
            anticommutator(&x, &z),
            vec![term("mu1", "Y", &y, r(0)), term("omega1", "I", &id, r(0))],
        ),
        relation(
            "{Y,Z}",
            anticommutator(&y, &z),
            vec![term("mu2", "X", &x, r(0)), term("omega2", "I", &id, r(0))],
        ),
    ];
    Ok(Representation {
        name: "dunkl".into(),
        params: params(&[("alpha", alpha)]),
        casimirs: vec![CasimirDef { id: "Z^2".into(), op: z.clone() * z.clone(), expected: r(1) }],
        x,
        y,
        z,
        relations,
    })
}

/// q-Laguerre realization `Y = q/(q^2 - 1) (L_{a,q} + a)`, `X = x`,
/// `Z f = -f(x/q)`.
pub fn rep_qlaguerre(q: &Rational, a: &Rational) -> Result<Representation> {
    check_q(q)?;
    let one = Rational::one();
    let x = LinOp::x();
    let y = (operators::q_laguerre(a, q) + LinOp::constant(a.clone())).scale(q / (q * q - &one));
    let z = -LinOp::dilate(one.clone() / q);
    let omega2 = a * q / (&one + q);
    let omega3 = q * (&one + a) / (&one + q);
    let id = LinOp::identity();
    let relations = vec![
        relation(
            "YX-qXY",
            q_bracket(&y, &x, q.clone()),
            vec![term("mu3", "Z", &z, r(1)), term("omega3", "I", &id, omega3.clone())],
        ),
        relation(
            "ZY-qYZ",
            q_bracket(&z, &y, q.clone()),
            vec![term("mu2", "X", &x, r(0)), term("omega2", "I", &id, omega2.clone())],
        ),
        xz_relation(&x, &y, &z, q),
    ];
    let casimir = (y.clone() * x.clone() * z.clone()).scale(q * q - &one)
        + z.clone() * z.clone()
        + (x.scale(omega2 * q) + z.scale(omega3)).scale(q + &one);
    Ok(Representation {
        name: "q_laguerre".into(),
        params: params(&[("q", q), ("a", a)]),
        x,
        y,
        z,
        relations,
        casimirs: vec![CasimirDef { id: "Q".into(), op: casimir, expected: -(a * q * q) }],
    })
}

/// Second q-Bessel realization `Y = q/(q^2 - 1) (Y_{a,q,2} + a)`, `X = x`,
/// `Z f = -f(x/q)`.
///
/// The first relation holds in the order `XY - q^2 YX`; there the measured
/// `Z` coefficient is `-q^2 (1+a)/(1+q)` against the expected
/// `-q (1+a)/(1+q)`. See [`qbessel2_yx_relation`] for the other order.
pub fn rep_qbessel2(q: &Rational, a: &Rational) -> Result<Representation> {
    check_q(q)?;
    let one = Rational::one();
    let x = LinOp::x();
    let y = (operators::q_bessel2(a, q) + LinOp::constant(a.clone())).scale(q / (q * q - &one));
    let z = -LinOp::dilate(one.clone() / q);
    let id = LinOp::identity();
    let relations = vec![
        relation(
            "XY-q^2YX",
            q_bracket(&x, &y, q * q),
            qbessel2_first_basis(q, a, &x, &z),
        ),
        relation(
            "ZY-qYZ",
            q_bracket(&z, &y, q.clone()),
            vec![term("mu4", "Z", &z, -(a * q) / (&one + q)), term("omega2", "I", &id, r(0))],
        ),
        xz_relation(&x, &y, &z, q),
    ];
    Ok(Representation {
        name: "q_bessel2".into(),
        params: params(&[("q", q), ("a", a)]),
        x,
        y,
        z,
        relations,
        casimirs: Vec::new(),
    })
}

fn qbessel2_first_basis(q: &Rational, a: &Rational, x: &Op, z: &Op) -> Vec<BasisTerm> {
    let one = Rational::one();
    vec![
        term("mu1", "Z", z, -(q * (&one + a)) / (&one + q)),
        term("mu2", "X", x, -(a * q)),
        term("mu3", "I", &LinOp::identity(), -(a * q * q)),
    ]
}

/// `YX - q^2 XY` against `{Z, X, I}` for the second q-Bessel realization.
/// Its image leaves that span, so checking it yields a span failure.
pub fn qbessel2_yx_relation(rep: &Representation) -> Result<RelationDef> {
    let q = rep.params.get("q").ok_or_else(|| Error::Parameter("missing q".into()))?;
    let a = rep.params.get("a").ok_or_else(|| Error::Parameter("missing a".into()))?;
    Ok(relation(
        "YX-q^2XY",
        q_bracket(&rep.y, &rep.x, q * q),
        qbessel2_first_basis(q, a, &rep.x, &rep.z),
    ))
}

/// Degenerate DAHA generators `(D, Z, s)`: the Dunkl operator with
/// `alpha = k - 1/2`, multiplication by `x`, and the reflection.
pub fn rep_daha(k: &Rational) -> (Op, Op, Op) {
    let alpha = k - Rational::new(1.into(), 2.into());
    (operators::dunkl(&alpha), LinOp::x(), LinOp::reflect())
}
