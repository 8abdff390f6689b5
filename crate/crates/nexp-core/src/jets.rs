//! Truncated univariate Taylor arithmetic and the smooth bump functions
//! built on it.
//!
//! A [`Jet`] stores Taylor coefficients `c[k] = f^(k)(t0)/k!` up to order
//! [`JET_ORDER`]. Arithmetic propagates them exactly (up to rounding), so
//! the bump plateaus used by the perturbation constructions have closed-form
//! derivatives of every order we need instead of finite-difference
//! approximations.

use crate::float::FloatExt;

/// Highest Taylor order carried by a [`Jet`] (coefficients `0..=JET_ORDER`).
pub const JET_ORDER: usize = 6;
const N: usize = JET_ORDER + 1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub c: [f64; N],
}

impl Jet {
    pub fn constant(v: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = v;
        Jet { c }
    }

    /// The identity function expanded at `t0`.
    pub fn variable(t0: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = t0;
        c[1] = 1.0;
        Jet { c }
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// k-th derivative value (coefficient times k!).
    pub fn deriv(&self, k: usize) -> f64 {
        let mut fact = 1.0;
        for i in 2..=k {
            fact *= i as f64;
        }
        self.c[k] * fact
    }

    pub fn add(&self, o: &Jet) -> Jet {
        let mut c = [0.0; N];
        for k in 0..N {
            c[k] = self.c[k] + o.c[k];
        }
        Jet { c }
    }

    pub fn sub(&self, o: &Jet) -> Jet {
        let mut c = [0.0; N];
        for k in 0..N {
            c[k] = self.c[k] - o.c[k];
        }
        Jet { c }
    }

    pub fn neg(&self) -> Jet {
        let mut c = [0.0; N];
        for k in 0..N {
            c[k] = -self.c[k];
        }
        Jet { c }
    }

    pub fn scale(&self, s: f64) -> Jet {
        let mut c = [0.0; N];
        for k in 0..N {
            c[k] = self.c[k] * s;
        }
        Jet { c }
    }

    pub fn mul(&self, o: &Jet) -> Jet {
        let mut c = [0.0; N];
        for k in 0..N {
            let mut acc = 0.0;
            for j in 0..=k {
                acc += self.c[j] * o.c[k - j];
            }
            c[k] = acc;
        }
        Jet { c }
    }

    /// Reciprocal; the constant term must be nonzero.
    pub fn recip(&self) -> Jet {
        let mut c = [0.0; N];
        c[0] = 1.0 / self.c[0];
        for k in 1..N {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += self.c[j] * c[k - j];
            }
            c[k] = -acc / self.c[0];
        }
        Jet { c }
    }

    pub fn div(&self, o: &Jet) -> Jet {
        self.mul(&o.recip())
    }

    pub fn exp(&self) -> Jet {
        let mut c = [0.0; N];
        c[0] = self.c[0].exp_();
        for k in 1..N {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += (j as f64) * self.c[j] * c[k - j];
            }
            c[k] = acc / k as f64;
        }
        Jet { c }
    }

    pub fn ln(&self) -> Jet {
        // g = ln f  =>  f' = f g'  =>  k f_k = sum_{j=1..k} j g_j f_{k-j}
        let mut c = [0.0; N];
        c[0] = self.c[0].ln_();
        for k in 1..N {
            let mut acc = (k as f64) * self.c[k];
            for j in 1..k {
                acc -= (j as f64) * c[j] * self.c[k - j];
            }
            c[k] = acc / (k as f64 * self.c[0]);
        }
        Jet { c }
    }

    pub fn sqrt(&self) -> Jet {
        let mut c = [0.0; N];
        c[0] = self.c[0].sqrt_();
        for k in 1..N {
            let mut acc = self.c[k];
            for j in 1..k {
                acc -= c[j] * c[k - j];
            }
            c[k] = acc / (2.0 * c[0]);
        }
        Jet { c }
    }

    /// Integer power by repeated multiplication.
    pub fn powi(&self, n: u32) -> Jet {
        let mut out = Jet::constant(1.0);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

/// `exp(-1/t)` for `t > 0`, identically `0` for `t <= 0`.
///
/// The seed of every C^inf plateau in this crate.
fn exp_neg_inv(t: &Jet) -> Jet {
    if t.value() <= 0.0 {
        Jet::constant(0.0)
    } else {
        t.recip().neg().exp()
    }
}

/// Smooth step falling from 1 to 0 as `u` runs over `[0, 1]`.
///
/// `fall(u) = B(1-u) / (B(u) + B(1-u))` with `B(t) = exp(-1/t)`; equal to 1
/// for `u <= 0` and 0 for `u >= 1`, strictly decreasing in between.
pub fn fall_step(u: &Jet) -> Jet {
    if u.value() <= 0.0 {
        return Jet::constant(1.0);
    }
    if u.value() >= 1.0 {
        return Jet::constant(0.0);
    }
    let one_minus = Jet::constant(1.0).sub(u);
    let b1 = exp_neg_inv(&one_minus);
    let b0 = exp_neg_inv(u);
    b1.div(&b0.add(&b1))
}

/// Smooth step rising from 0 to 1 as `u` runs over `[0, 1]`.
pub fn rise_step(u: &Jet) -> Jet {
    Jet::constant(1.0).sub(&fall_step(u))
}

/// Plateau bump: 1 on `[0, a]`, 0 on `[b, inf)`, smooth and strictly
/// decreasing on `(a, b)`. Exactly the rho of the local scaling
/// perturbation with `a = s/2`, `b = s`.
pub fn plateau_bump(t: f64, a: f64, b: f64) -> Jet {
    debug_assert!(a < b);
    if t <= a {
        return Jet::constant(1.0);
    }
    if t >= b {
        return Jet::constant(0.0);
    }
    let u = Jet::variable(t).sub(&Jet::constant(a)).scale(1.0 / (b - a));
    fall_step(&u)
}

/// Septic smoothstep: 0 at `t<=0`, 1 at `t>=1`, C^3 at the joins.
fn septic_step(t: &Jet) -> Jet {
    if t.value() <= 0.0 {
        return Jet::constant(0.0);
    }
    if t.value() >= 1.0 {
        return Jet::constant(1.0);
    }
    // 35 t^4 - 84 t^5 + 70 t^6 - 20 t^7
    let t4 = t.powi(4);
    let t5 = t4.mul(t);
    let t6 = t5.mul(t);
    let t7 = t6.mul(t);
    t4.scale(35.0)
        .add(&t5.scale(-84.0))
        .add(&t6.scale(70.0))
        .add(&t7.scale(-20.0))
}

/// Corner-smoothed unit ramp: 0 at `u<=0`, 1 at `u>=1`, with derivative a
/// trapezoid profile so the peak slope is `1/(1-corner)` instead of the
/// ~2x overshoot of a plain smoothstep.
///
/// The derivative rises as a septic step over `[0, corner]`, stays flat,
/// and falls back over `[1-corner, 1]`; the ramp itself is the normalized
/// integral, evaluated in closed form piecewise. C^4 overall.
pub fn trapezoid_ramp(u: f64, corner: f64) -> Jet {
    debug_assert!(corner > 0.0 && corner < 0.5);
    if u <= 0.0 {
        return Jet::constant(0.0);
    }
    if u >= 1.0 {
        return Jet::constant(1.0);
    }
    let total = 1.0 - corner; // integral of the trapezoid weight
    // Antiderivative of the septic step on [0,1]: S(t) = 7t^5 - 14t^6 + 10t^7 - 2.5t^8.
    let anti = |t: &Jet| -> Jet {
        let t5 = t.powi(5);
        let t6 = t5.mul(t);
        let t7 = t6.mul(t);
        let t8 = t7.mul(t);
        t5.scale(7.0)
            .add(&t6.scale(-14.0))
            .add(&t7.scale(10.0))
            .add(&t8.scale(-2.5))
    };
    let uj = Jet::variable(u);
    let val = if u <= corner {
        // integral of step(s/corner) ds = corner * S(u/corner)
        anti(&uj.scale(1.0 / corner)).scale(corner)
    } else if u <= 1.0 - corner {
        // corner * S(1) + (u - corner); S(1) = 1/2
        uj.sub(&Jet::constant(corner)).add(&Jet::constant(corner / 2.0))
    } else {
        // everything up to 1-corner, plus the falling corner piece:
        // integral of (1 - step((s-1+corner)/corner)) over [1-corner, u].
        let t = uj
            .sub(&Jet::constant(1.0 - corner))
            .scale(1.0 / corner);
        let fallen = t.scale(corner).sub(&anti(&t).scale(corner));
        Jet::constant(1.0 - corner - corner / 2.0).add(&fallen)
    };
    val.scale(1.0 / total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn arithmetic_matches_known_series() {
        // f(t) = exp(t^2) at t0 = 0.3; compare against finite differences.
        let t = Jet::variable(0.3);
        let f = t.mul(&t).exp();
        let g = |x: f64| (x * x).exp();
        let h = 1e-5;
        let fd1 = (g(0.3 + h) - g(0.3 - h)) / (2.0 * h);
        let fd2 = (g(0.3 + h) - 2.0 * g(0.3) + g(0.3 - h)) / (h * h);
        assert_close(f.deriv(0), g(0.3), 1e-14);
        assert_close(f.deriv(1), fd1, 1e-8);
        assert_close(f.deriv(2), fd2, 1e-5);
    }

    #[test]
    fn reciprocal_and_sqrt() {
        let t = Jet::variable(2.0);
        let r = t.recip();
        assert_close(r.value(), 0.5, 1e-15);
        assert_close(r.deriv(1), -0.25, 1e-15);
        assert_close(r.deriv(2), 0.25, 1e-15);
        let s = t.sqrt();
        assert_close(s.value(), 2f64.sqrt(), 1e-15);
        assert_close(s.deriv(1), 0.5 / 2f64.sqrt(), 1e-15);
    }

    #[test]
    fn plateau_values_and_smoothness() {
        assert_eq!(plateau_bump(0.2, 0.5, 1.0).value(), 1.0);
        assert_eq!(plateau_bump(0.5, 0.5, 1.0).value(), 1.0);
        assert_eq!(plateau_bump(1.0, 0.5, 1.0).value(), 0.0);
        assert_eq!(plateau_bump(1.7, 0.5, 1.0).value(), 0.0);
        let mid = plateau_bump(0.75, 0.5, 1.0);
        assert!(mid.value() > 0.0 && mid.value() < 1.0);
        assert!(mid.deriv(1) < 0.0);
        // Derivative agrees with central differences.
        let h = 1e-6;
        let fd = (plateau_bump(0.75 + h, 0.5, 1.0).value()
            - plateau_bump(0.75 - h, 0.5, 1.0).value())
            / (2.0 * h);
        assert_close(mid.deriv(1), fd, 1e-6);
    }

    #[test]
    fn ramp_monotone_with_bounded_slope() {
        let corner = 0.15;
        let mut prev = 0.0;
        let mut max_slope: f64 = 0.0;
        for i in 1..=200 {
            let u = i as f64 / 200.0;
            let j = trapezoid_ramp(u, corner);
            assert!(j.value() >= prev - 1e-12);
            prev = j.value();
            max_slope = max_slope.max(j.deriv(1));
        }
        assert_close(trapezoid_ramp(1.0, corner).value(), 1.0, 1e-12);
        // Peak slope stays near 1/(1-corner).
        assert!(max_slope < 1.0 / (1.0 - corner) + 0.08, "{max_slope}");
    }
}
