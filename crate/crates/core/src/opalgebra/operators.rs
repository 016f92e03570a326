//! The difference and differential-difference operators acting on the
//! polynomial families. Every constructor is generic over the coefficient
//! field so the same operators run over rationals and complex rationals.

use crate::numerics::{LaurentPoly, Scalar};

use super::LinOp;

fn half<T: Scalar>() -> T {
    T::one() / (T::one() + T::one())
}

fn mult<T: Scalar>(terms: Vec<(i64, T)>) -> LinOp<T> {
    LinOp::mult_by(LaurentPoly::from_terms(terms))
}

/// `f(cx) - f(x)`.
fn dilate_diff<T: Scalar>(c: T) -> LinOp<T> {
    LinOp::dilate(c) - LinOp::identity()
}

/// `(f(x) - f(-x)) / x`.
fn reflection_quotient<T: Scalar>() -> LinOp<T> {
    LinOp::x_pow(-1) * (LinOp::identity() - LinOp::reflect())
}

/// Little q-Jacobi operator
/// `a(bq - 1/x)(f(qx) - f(x)) + (1 - 1/x)(f(x/q) - f(x))`.
pub fn little_q_jacobi<T: Scalar>(a: &T, b: &T, q: &T) -> LinOp<T> {
    let qinv = T::one() / q.clone();
    mult(vec![(0, a.clone() * b.clone() * q.clone()), (-1, -a.clone())]) * dilate_diff(q.clone())
        + mult(vec![(0, T::one()), (-1, -T::one())]) * dilate_diff(qinv)
}

/// q-Laguerre operator
/// `a(1 + 1/x) f(qx) - (1/x + a(1 + 1/x)) f(x) + (1/x) f(x/q)`.
pub fn q_laguerre<T: Scalar>(a: &T, q: &T) -> LinOp<T> {
    let qinv = T::one() / q.clone();
    mult(vec![(0, a.clone()), (-1, a.clone())]) * LinOp::dilate(q.clone())
        - mult(vec![(0, a.clone()), (-1, T::one() + a.clone())])
        + LinOp::x_pow(-1) * LinOp::dilate(qinv)
}

/// Third q-Bessel operator `(a/x)(f(qx) - f(x)) + (1/x)(f(x/q) - f(x))`.
pub fn q_bessel3<T: Scalar>(a: &T, q: &T) -> LinOp<T> {
    let qinv = T::one() / q.clone();
    (LinOp::x_pow(-1) * dilate_diff(q.clone())).scale(a.clone()) + LinOp::x_pow(-1) * dilate_diff(qinv)
}

/// Second q-Bessel operator
/// `(aq/x) f(x) - q(a + 1)/x f(x/q) + (q/x) f(x/q^2)`.
pub fn q_bessel2<T: Scalar>(a: &T, q: &T) -> LinOp<T> {
    let qinv = T::one() / q.clone();
    let inner = LinOp::constant(a.clone())
        - LinOp::dilate(qinv.clone()).scale(a.clone() + T::one())
        + LinOp::dilate(qinv.clone() * qinv);
    (LinOp::x_pow(-1) * inner).scale(q.clone())
}

/// (-1)-Jacobi operator
/// `(x - 1) f'(-x) + (alpha + beta + 1 - alpha/x)(f(x) - f(-x))/2`,
/// whose eigenfunctions are the little (-1)-Jacobi polynomials.
pub fn minus1_jacobi<T: Scalar>(alpha: &T, beta: &T) -> LinOp<T> {
    minus1_jacobi_with_constant(alpha, alpha.clone() + beta.clone() + T::one())
}

/// Variant with constant `alpha + beta` in place of `alpha + beta + 1`.
/// Its odd-degree diagonal is off by one and the polynomials are not
/// eigenfunctions; kept for comparison.
pub fn minus1_jacobi_shifted<T: Scalar>(alpha: &T, beta: &T) -> LinOp<T> {
    minus1_jacobi_with_constant(alpha, alpha.clone() + beta.clone())
}

fn minus1_jacobi_with_constant<T: Scalar>(alpha: &T, constant: T) -> LinOp<T> {
    let h = half::<T>();
    mult(vec![(1, T::one()), (0, -T::one())]) * LinOp::reflect() * LinOp::derivative()
        + mult(vec![(0, constant * h.clone()), (-1, -alpha.clone() * h)])
            * (LinOp::identity() - LinOp::reflect())
}

/// Dunkl operator `f'(x) + (alpha + 1/2)(f(x) - f(-x))/x`.
pub fn dunkl<T: Scalar>(alpha: &T) -> LinOp<T> {
    LinOp::derivative() + reflection_quotient().scale(alpha.clone() + half())
}

/// `f'(-x) + (alpha + 1/2)(f(x) - f(-x))/x`, the q -> -1 limit of the third
/// q-Bessel operator. Equals `reflect . dunkl(alpha)`.
pub fn reflected_dunkl<T: Scalar>(alpha: &T) -> LinOp<T> {
    LinOp::reflect() * LinOp::derivative() + reflection_quotient().scale(alpha.clone() + half())
}
