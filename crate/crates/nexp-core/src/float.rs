//! Float helpers that work with or without `std`.
//!
//! With `std` enabled the inherent `f64` methods are used; without it the
//! `libm` implementations are. Code in this crate calls these through the
//! [`FloatExt`] trait so the two builds stay in sync.

#[cfg(feature = "std")]
pub trait FloatExt {
    fn abs_(self) -> Self;
    fn sqrt_(self) -> Self;
    fn exp_(self) -> Self;
    fn ln_(self) -> Self;
    fn floor_(self) -> Self;
    fn hypot_(self, other: Self) -> Self;
    fn sin_cos_(self) -> (Self, Self)
    where
        Self: Sized;
    fn atan2_(self, other: Self) -> Self;
    fn powi_(self, n: i32) -> Self;
    fn powf_(self, e: Self) -> Self;
}

#[cfg(feature = "std")]
impl FloatExt for f64 {
    #[inline]
    fn abs_(self) -> f64 {
        self.abs()
    }
    #[inline]
    fn sqrt_(self) -> f64 {
        self.sqrt()
    }
    #[inline]
    fn exp_(self) -> f64 {
        self.exp()
    }
    #[inline]
    fn ln_(self) -> f64 {
        self.ln()
    }
    #[inline]
    fn floor_(self) -> f64 {
        self.floor()
    }
    #[inline]
    fn hypot_(self, other: f64) -> f64 {
        self.hypot(other)
    }
    #[inline]
    fn sin_cos_(self) -> (f64, f64) {
        self.sin_cos()
    }
    #[inline]
    fn atan2_(self, other: f64) -> f64 {
        self.atan2(other)
    }
    #[inline]
    fn powi_(self, n: i32) -> f64 {
        self.powi(n)
    }
    #[inline]
    fn powf_(self, e: f64) -> f64 {
        self.powf(e)
    }
}

#[cfg(not(feature = "std"))]
pub trait FloatExt {
    fn abs_(self) -> Self;
    fn sqrt_(self) -> Self;
    fn exp_(self) -> Self;
    fn ln_(self) -> Self;
    fn floor_(self) -> Self;
    fn hypot_(self, other: Self) -> Self;
    fn sin_cos_(self) -> (Self, Self)
    where
        Self: Sized;
    fn atan2_(self, other: Self) -> Self;
    fn powi_(self, n: i32) -> Self;
    fn powf_(self, e: Self) -> Self;
}

#[cfg(not(feature = "std"))]
impl FloatExt for f64 {
    #[inline]
    fn abs_(self) -> f64 {
        libm::fabs(self)
    }
    #[inline]
    fn sqrt_(self) -> f64 {
        libm::sqrt(self)
    }
    #[inline]
    fn exp_(self) -> f64 {
        libm::exp(self)
    }
    #[inline]
    fn ln_(self) -> f64 {
        libm::log(self)
    }
    #[inline]
    fn floor_(self) -> f64 {
        libm::floor(self)
    }
    #[inline]
    fn hypot_(self, other: f64) -> f64 {
        libm::hypot(self, other)
    }
    #[inline]
    fn sin_cos_(self) -> (f64, f64) {
        (libm::sin(self), libm::cos(self))
    }
    #[inline]
    fn atan2_(self, other: f64) -> f64 {
        libm::atan2(self, other)
    }
    #[inline]
    fn powi_(self, n: i32) -> f64 {
        libm::pow(self, n as f64)
    }
    #[inline]
    fn powf_(self, e: f64) -> f64 {
        libm::pow(self, e)
    }
}

/// 2-vector helpers used throughout the crate.
#[inline]
pub fn norm2(v: [f64; 2]) -> f64 {
    v[0].hypot_(v[1])
}

#[inline]
pub fn dot(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

#[inline]
pub fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
pub fn add(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] + b[0], a[1] + b[1]]
}

#[inline]
pub fn scale(a: [f64; 2], s: f64) -> [f64; 2] {
    [a[0] * s, a[1] * s]
}

/// 2x2 matrix in row-major order.
pub type Mat2 = [[f64; 2]; 2];

#[inline]
pub fn mat_vec(m: Mat2, v: [f64; 2]) -> [f64; 2] {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

#[inline]
pub fn mat_mul(a: Mat2, b: Mat2) -> Mat2 {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

#[inline]
pub fn mat_det(m: Mat2) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

#[inline]
pub fn mat_inv(m: Mat2) -> Mat2 {
    let d = mat_det(m);
    [
        [m[1][1] / d, -m[0][1] / d],
        [-m[1][0] / d, m[0][0] / d],
    ]
}

/// Eigenvalues of a 2x2 real matrix as (re, im) pairs.
///
/// Real spectra come back sorted by decreasing modulus.
pub fn eigenvalues2(m: Mat2) -> [(f64, f64); 2] {
    let tr = m[0][0] + m[1][1];
    let det = mat_det(m);
    let disc = tr * tr / 4.0 - det;
    if disc >= 0.0 {
        let s = disc.sqrt_();
        let a = tr / 2.0 + s;
        let b = tr / 2.0 - s;
        if a.abs_() >= b.abs_() {
            [(a, 0.0), (b, 0.0)]
        } else {
            [(b, 0.0), (a, 0.0)]
        }
    } else {
        let im = (-disc).sqrt_();
        [(tr / 2.0, im), (tr / 2.0, -im)]
    }
}
