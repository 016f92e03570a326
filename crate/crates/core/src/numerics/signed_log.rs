use std::ops::Mul;

/// A real number stored as `sign * exp(log_abs)`.
///
/// Products and integer powers are exact in the exponent, and
/// [`SignedLog::one_minus`] evaluates `1 - v` with `expm1`, so parameters
/// like `q = -e^eps` or `a = q^alpha` with `q -> 1` lose no accuracy in
/// q-Pochhammer factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    negative: bool,
    log_abs: f64,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog { negative: false, log_abs: f64::NEG_INFINITY };
    pub const ONE: SignedLog = SignedLog { negative: false, log_abs: 0.0 };

    /// `e^log`.
    pub fn exp(log: f64) -> Self {
        Self { negative: false, log_abs: log }
    }

    /// `-e^log`.
    pub fn neg_exp(log: f64) -> Self {
        Self { negative: true, log_abs: log }
    }

    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            Self { negative: v < 0.0, log_abs: v.abs().ln() }
        }
    }

    pub fn value(self) -> f64 {
        let m = self.log_abs.exp();
        if self.negative {
            -m
        } else {
            m
        }
    }

    pub fn abs_value(self) -> f64 {
        self.log_abs.exp()
    }

    pub fn log_abs(self) -> f64 {
        self.log_abs
    }

    pub fn is_negative(self) -> bool {
        self.negative
    }

    pub fn is_zero(self) -> bool {
        self.log_abs == f64::NEG_INFINITY
    }

    pub fn powi(self, n: i64) -> Self {
        if self.is_zero() {
            return if n == 0 { Self::ONE } else { Self::ZERO };
        }
        Self { negative: self.negative && n % 2 != 0, log_abs: self.log_abs * n as f64 }
    }

    pub fn inv(self) -> Self {
        Self { negative: self.negative, log_abs: -self.log_abs }
    }

    pub fn neg(self) -> Self {
        Self { negative: !self.negative, log_abs: self.log_abs }
    }

    /// `1 - self`, accurate when `self` is close to 1.
    pub fn one_minus(self) -> f64 {
        if self.is_zero() {
            1.0
        } else if self.negative {
            1.0 + self.log_abs.exp()
        } else {
            -self.log_abs.exp_m1()
        }
    }

    /// `self * q^k`.
    pub fn times_pow(self, q: SignedLog, k: i64) -> Self {
        self * q.powi(k)
    }
}

impl Mul for SignedLog {
    type Output = SignedLog;
    fn mul(self, rhs: SignedLog) -> SignedLog {
        if self.is_zero() || rhs.is_zero() {
            return SignedLog::ZERO;
        }
        SignedLog { negative: self.negative != rhs.negative, log_abs: self.log_abs + rhs.log_abs }
    }
}

impl From<f64> for SignedLog {
    fn from(v: f64) -> Self {
        SignedLog::from_f64(v)
    }
}
