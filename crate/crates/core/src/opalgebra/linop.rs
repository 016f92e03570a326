use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::numerics::{LaurentPoly, Scalar};

/// Linear operator on Laurent polynomials, built from multiplication,
/// dilation `f(x) -> f(cx)`, reflection `f(x) -> f(-x)` and the derivative.
///
/// Products compose right to left: `(a * b).apply(f) == a.apply(&b.apply(f))`.
#[derive(Clone)]
pub struct LinOp<T>(Arc<Node<T>>);

enum Node<T> {
    Identity,
    Mult(LaurentPoly<T>),
    Dilate(T),
    Reflect,
    Derivative,
    Scale(T, LinOp<T>),
    Sum(Vec<LinOp<T>>),
    Compose(LinOp<T>, LinOp<T>),
}

impl<T: Scalar> LinOp<T> {
    fn node(n: Node<T>) -> Self {
        Self(Arc::new(n))
    }

    pub fn identity() -> Self {
        Self::node(Node::Identity)
    }

    pub fn zero() -> Self {
        Self::node(Node::Sum(Vec::new()))
    }

    pub fn mult_by(p: LaurentPoly<T>) -> Self {
        Self::node(Node::Mult(p))
    }

    /// Multiplication by `x`.
    pub fn x() -> Self {
        Self::mult_by(LaurentPoly::x())
    }

    /// Multiplication by `x^k`.
    pub fn x_pow(k: i64) -> Self {
        Self::mult_by(LaurentPoly::monomial(T::one(), k))
    }

    pub fn constant(c: T) -> Self {
        Self::identity().scale(c)
    }

    pub fn dilate(c: T) -> Self {
        Self::node(Node::Dilate(c))
    }

    pub fn reflect() -> Self {
        Self::node(Node::Reflect)
    }

    pub fn derivative() -> Self {
        Self::node(Node::Derivative)
    }

    pub fn scale(&self, c: T) -> Self {
        Self::node(Node::Scale(c, self.clone()))
    }

    pub fn sum<I: IntoIterator<Item = LinOp<T>>>(ops: I) -> Self {
        Self::node(Node::Sum(ops.into_iter().collect()))
    }

    /// `self` after `inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        Self::node(Node::Compose(self.clone(), inner.clone()))
    }

    /// `self^n` under composition.
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| self.compose(&acc))
    }

    pub fn apply(&self, f: &LaurentPoly<T>) -> LaurentPoly<T> {
        match &*self.0 {
            Node::Identity => f.clone(),
            Node::Mult(p) => p * f,
            Node::Dilate(c) => f.dilate(c),
            Node::Reflect => f.reflect(),
            Node::Derivative => f.derivative(),
            Node::Scale(c, op) => op.apply(f).scale(c),
            Node::Sum(ops) => ops.iter().fold(LaurentPoly::zero(), |acc, op| acc + op.apply(f)),
            Node::Compose(outer, inner) => outer.apply(&inner.apply(f)),
        }
    }

    /// Image of `x^n`.
    pub fn on_monomial(&self, n: i64) -> LaurentPoly<T> {
        self.apply(&LaurentPoly::monomial(T::one(), n))
    }

    /// Whether the two operators agree on `x^0 .. x^max_degree`.
    pub fn agrees_with(&self, other: &Self, max_degree: i64) -> bool {
        (0..=max_degree).all(|n| self.on_monomial(n) == other.on_monomial(n))
    }

    /// Whether the operator annihilates `x^0 .. x^max_degree`.
    pub fn vanishes_to(&self, max_degree: i64) -> bool {
        (0..=max_degree).all(|n| self.on_monomial(n).is_zero())
    }
}

/// `A B - c B A`; `c = 1` is the commutator, `c = -1` the anticommutator.
pub fn q_bracket<T: Scalar>(a: &LinOp<T>, b: &LinOp<T>, c: T) -> LinOp<T> {
    a.compose(b) - b.compose(a).scale(c)
}

/// Anticommutator `A B + B A`.
pub fn anticommutator<T: Scalar>(a: &LinOp<T>, b: &LinOp<T>) -> LinOp<T> {
    q_bracket(a, b, -T::one())
}

impl<T: Scalar> Add for LinOp<T> {
    type Output = LinOp<T>;
    fn add(self, rhs: Self) -> Self {
        LinOp::sum([self, rhs])
    }
}

impl<T: Scalar> Sub for LinOp<T> {
    type Output = LinOp<T>;
    fn sub(self, rhs: Self) -> Self {
        LinOp::sum([self, -rhs])
    }
}

impl<T: Scalar> Neg for LinOp<T> {
    type Output = LinOp<T>;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

impl<T: Scalar> Mul for LinOp<T> {
    type Output = LinOp<T>;
    fn mul(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
}

impl<T: Scalar> fmt::Debug for LinOp<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Identity => write!(f, "I"),
            Node::Mult(p) => write!(f, "mult({p:?})"),
            Node::Dilate(c) => write!(f, "dilate({c:?})"),
            Node::Reflect => write!(f, "reflect"),
            Node::Derivative => write!(f, "d/dx"),
            Node::Scale(c, op) => write!(f, "{c:?}*({op:?})"),
            Node::Sum(ops) => {
                write!(f, "(")?;
                for (i, op) in ops.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{op:?}")?;
                }
                write!(f, ")")
            }
            Node::Compose(a, b) => write!(f, "{a:?}.{b:?}"),
        }
    }
}
