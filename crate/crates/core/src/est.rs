//! Values carried with a running absolute error bound.
//!
//! Every operation adds the first-order propagated error of its operands
//! plus one rounding of the result. Closed-form bounds are built from these
//! so their error budgets come out of the same arithmetic as their values.

use crate::hypergeom::EvalResult;
use std::ops::{Add, Div, Mul, Neg, Sub};

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Est {
    pub value: f64,
    pub err: f64,
}

fn round(value: f64, err: f64) -> Est {
    Est { value, err: err + EPS * value.abs() }
}

impl Est {
    pub fn exact(value: f64) -> Self {
        Est { value, err: 0.0 }
    }

    pub fn new(value: f64, err: f64) -> Self {
        Est { value, err: err.abs() }
    }

    /// Relative error bound; infinite when the value is zero.
    pub fn rel(&self) -> f64 {
        self.err / self.value.abs()
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite() && self.err.is_finite()
    }

    /// `x^p` for exact `x > 0` and `p`.
    pub fn pow_exact(x: f64, p: f64) -> Self {
        let t = p * x.ln();
        let v = t.exp();
        Est { value: v, err: (2.0 + t.abs()) * EPS * v }
    }

    /// `1 - x^p` for exact `x ∈ (0, 1)` and `p`, without cancellation.
    pub fn one_minus_pow_exact(x: f64, p: f64) -> Self {
        let t = p * x.ln();
        let v = -t.exp_m1();
        Est { value: v, err: 2.0 * EPS * (v.abs() + t.abs() * t.exp()) }
    }

    pub fn ln(self) -> Self {
        let a = self.value.abs();
        round(self.value.ln(), self.err / (a - self.err).max(f64::MIN_POSITIVE))
    }

    pub fn ln_1p(self) -> Self {
        let a = 1.0 + self.value;
        round(self.value.ln_1p(), self.err / (a - self.err).max(f64::MIN_POSITIVE))
    }

    pub fn exp(self) -> Self {
        let v = self.value.exp();
        round(v, v * self.err.exp_m1())
    }

    /// `self^c` for a positive base and exact exponent.
    pub fn powf(self, c: f64) -> Self {
        let v = self.value.powf(c);
        let rel_in = self.err / (self.value.abs() - self.err).max(f64::MIN_POSITIVE);
        let rel_out = (c.abs() * rel_in.ln_1p()).exp_m1();
        round(v, v.abs() * rel_out + (1.0 + (c * self.value.ln()).abs()) * EPS * v.abs())
    }

    /// Adds the first-order effect of rounding in the argument `z` of a
    /// function that is at most mildly sensitive to it.
    pub fn pad(self, z: Est) -> Self {
        Est::new(self.value, self.err + 4.0 * z.err * self.value.abs())
    }

    pub fn sqrt(self) -> Self {
        self.powf(0.5)
    }
}

impl From<EvalResult> for Est {
    fn from(r: EvalResult) -> Self {
        Est { value: r.value, err: r.abs_err }
    }
}

impl From<f64> for Est {
    fn from(v: f64) -> Self {
        Est::exact(v)
    }
}

impl Neg for Est {
    type Output = Est;
    fn neg(self) -> Est {
        Est { value: -self.value, err: self.err }
    }
}

impl Add for Est {
    type Output = Est;
    fn add(self, o: Est) -> Est {
        round(self.value + o.value, self.err + o.err)
    }
}

impl Sub for Est {
    type Output = Est;
    fn sub(self, o: Est) -> Est {
        round(self.value - o.value, self.err + o.err)
    }
}

impl Mul for Est {
    type Output = Est;
    fn mul(self, o: Est) -> Est {
        let err = self.err * o.value.abs() + o.err * self.value.abs() + self.err * o.err;
        round(self.value * o.value, err)
    }
}

impl Div for Est {
    type Output = Est;
    fn div(self, o: Est) -> Est {
        let v = self.value / o.value;
        let denom = (o.value.abs() - o.err).max(f64::MIN_POSITIVE);
        round(v, (self.err + v.abs() * o.err) / denom)
    }
}

macro_rules! scalar_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<f64> for Est {
            type Output = Est;
            fn $f(self, o: f64) -> Est {
                $tr::$f(self, Est::exact(o))
            }
        }
        impl $tr<Est> for f64 {
            type Output = Est;
            fn $f(self, o: Est) -> Est {
                $tr::$f(Est::exact(self), o)
            }
        }
    )*};
}

scalar_ops!(Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic_stays_tight() {
        let a = Est::exact(0.1) + 0.2;
        assert!((a.value - 0.3).abs() <= a.err + 1e-17);
        assert!(a.err < 1e-16);
    }

    #[test]
    fn errors_propagate() {
        let a = Est::new(2.0, 1e-10);
        let b = Est::new(4.0, 1e-10);
        assert!((a * b).err >= 6e-10 - 1e-20);
        assert!((a / b).err >= 1e-10 / 4.0);
        assert!(a.ln().err >= 0.5e-10);
        assert!((a.powf(3.0).err - 12e-10).abs() < 1e-12);
    }

    #[test]
    fn one_minus_pow_is_accurate() {
        let e = Est::one_minus_pow_exact(1e-3, 2.0);
        assert!((e.value - (1.0 - 1e-6)).abs() < 1e-16);
        let e = Est::one_minus_pow_exact(0.999_999, 2.0);
        assert!(((e.value - 1.999_999e-6) / e.value).abs() < 1e-9);
        assert!(e.rel() < 1e-9);
    }
}
