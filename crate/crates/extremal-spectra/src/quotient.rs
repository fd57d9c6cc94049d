//! Closed-form quartics from equitable partitions of the family
//! complements, plus the transmission and audit formulas.
//!
//! Both families partition into four classes whose complements are
//! equitable, so the nonzero part of each complement spectrum is carried
//! by a 4x4 quotient matrix. The characteristic polynomials are even
//! quartics with integer coefficients:
//!
//! * B complement, classes (S, T minus v, cut, v):
//!   `f(lambda) = lambda^4 - (kappa + s*t) lambda^2 + kappa*s*(t-1)`
//! * BB complement under the join variant, classes
//!   (side one minus U, U, side two minus W, W):
//!   `g(lambda) = lambda^4 + (kappa^2 - n1*n2) lambda^2
//!    + kappa^2 (n1 - kappa)(n2 - kappa)`
//!
//! Everything here is exact integer arithmetic until a square root is
//! unavoidable.

use serde::Serialize;

use crate::constructions::{BParams, BbParams};
use crate::error::{Error, Result};

/// A monic even quartic `lambda^4 + c2 lambda^2 + c0` with exact integer
/// coefficients and a label recording which family instance produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quartic {
    pub c2: i64,
    pub c0: i64,
    pub label: String,
}

impl Quartic {
    pub fn new(c2: i64, c0: i64, label: impl Into<String>) -> Self {
        Quartic {
            c2,
            c0,
            label: label.into(),
        }
    }

    /// Evaluates the quartic at a float point.
    pub fn eval(&self, x: f64) -> f64 {
        let x2 = x * x;
        x2 * x2 + self.c2 as f64 * x2 + self.c0 as f64
    }

    /// Evaluates the quartic at an integer point without rounding.
    pub fn eval_exact(&self, x: i128) -> i128 {
        x * x * x * x + self.c2 as i128 * x * x + self.c0 as i128
    }

    /// The discriminant of the underlying quadratic in lambda^2.
    pub fn discriminant(&self) -> i128 {
        self.c2 as i128 * self.c2 as i128 - 4 * self.c0 as i128
    }

    /// The two squared-root values `y1 >= y2 >= 0` with
    /// `lambda^2 in {y1, y2}`. Computed as `y1 = (-c2 + sqrt(disc)) / 2`
    /// and `y2 = -c2 - y1`, which avoids cancellation for the family
    /// quartics where `c2 <= 0`.
    fn squared_roots(&self) -> Result<(f64, f64)> {
        let disc = self.discriminant();
        if disc < 0 {
            return Err(Error::NegativeDiscriminant {
                disc: disc as f64,
                label: self.label.clone(),
            });
        }
        let root = (disc as f64).sqrt();
        let y1 = (-(self.c2 as f64) + root) / 2.0;
        let y1 = if y1 < 0.0 && y1 > -1e-9 { 0.0 } else { y1 };
        if y1 < 0.0 {
            return Err(Error::InvalidParams(format!(
                "quartic {} has no real roots",
                self.label
            )));
        }
        let y2 = -(self.c2 as f64) - y1;
        let y2 = if y2 < 0.0 && y2 > -1e-9 { 0.0 } else { y2 };
        if y2 < 0.0 {
            return Err(Error::InvalidParams(format!(
                "quartic {} has a complex conjugate root pair",
                self.label
            )));
        }
        Ok((y1, y2))
    }

    /// The largest and smallest real roots `(sqrt(y1), -sqrt(y1))`.
    /// A negative discriminant is reported as an error, never panicked.
    pub fn extreme_roots(&self) -> Result<(f64, f64)> {
        let (y1, _) = self.squared_roots()?;
        let r = y1.sqrt();
        Ok((r, -r))
    }

    /// All four real roots in descending order.
    pub fn all_roots(&self) -> Result<Vec<f64>> {
        let (y1, y2) = self.squared_roots()?;
        let a = y1.sqrt();
        let b = y2.sqrt();
        Ok(vec![a, b, -b, -a])
    }
}

/// The quartic carrying the nonzero complement spectrum of `B(s,t,kappa)`.
pub fn f_poly(s: usize, t: usize, kappa: usize) -> Quartic {
    let (s, t, k) = (s as i64, t as i64, kappa as i64);
    Quartic::new(
        -(k + s * t),
        k * s * (t - 1),
        format!("f[s={},t={},kappa={}]", s, t, k),
    )
}

/// The quartic carrying the nonzero complement spectrum of
/// `BB(n1,n2;kappa)` under the join variant.
pub fn g_poly(n1: usize, n2: usize, kappa: usize) -> Quartic {
    let (a, b, k) = (n1 as i64, n2 as i64, kappa as i64);
    Quartic::new(
        k * k - a * b,
        k * k * (a - k) * (b - k),
        format!("g[n1={},n2={},kappa={}]", a, b, k),
    )
}

/// The 4x4 quotient matrix of the equitable partition
/// (S, T minus v, cut, v) of the `B(s,t,kappa)` complement.
pub fn quotient_matrix_b(p: &BParams) -> [[i64; 4]; 4] {
    let (s, t, k) = (p.s as i64, p.t as i64, p.kappa as i64);
    [
        [0, t - 1, 0, 1],
        [s, 0, 0, 0],
        [0, 0, 0, 1],
        [s, 0, k, 0],
    ]
}

/// The 4x4 quotient matrix of the equitable partition
/// (side one minus U, U, side two minus W, W) of the `BB(n1,n2;kappa)`
/// complement under the join variant.
pub fn quotient_matrix_bb(p: &BbParams) -> [[i64; 4]; 4] {
    let (n1, n2, k) = (p.n1 as i64, p.n2 as i64, p.kappa as i64);
    [
        [0, 0, n2 - k, k],
        [0, 0, n2 - k, 0],
        [n1 - k, k, 0, 0],
        [n1 - k, 0, 0, 0],
    ]
}

fn det3(m: [[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Evaluates `det(x*I - M)` exactly for a 4x4 integer matrix. Five
/// sample points pin a monic quartic, so this is enough to confirm the
/// closed-form characteristic polynomials without symbolic algebra.
pub fn char_poly_at(m: &[[i64; 4]; 4], x: i128) -> i128 {
    let mut a = [[0i128; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            a[i][j] = if i == j { x } else { 0 } - m[i][j] as i128;
        }
    }
    let minor = |skip: usize| {
        let mut b = [[0i128; 3]; 3];
        let cols: Vec<usize> = (0..4).filter(|&j| j != skip).collect();
        for r in 1..4 {
            for (ci, &c) in cols.iter().enumerate() {
                b[r - 1][ci] = a[r][c];
            }
        }
        b
    };
    let mut det = 0i128;
    for j in 0..4 {
        let term = a[0][j] * det3(minor(j));
        det += if j % 2 == 0 { term } else { -term };
    }
    det
}

/// `f[s,t] - f[s-1,t+1]` at fixed kappa, as the pair `(a, b)` meaning
/// `a*lambda^2 + b`. Exact: `a = s - t - 1`, `b = -kappa*(s - t)`.
pub fn f_difference(s: usize, t: usize, kappa: usize) -> Result<(i64, i64)> {
    if s < 2 {
        return Err(Error::InvalidParams(
            "s >= 2 required for the f difference".into(),
        ));
    }
    let (s, t, k) = (s as i64, t as i64, kappa as i64);
    Ok((s - t - 1, -k * (s - t)))
}

/// The positive root of the f difference,
/// `theta = sqrt(kappa * (s - t) / (s - t - 1))`, defined whenever
/// `s != t + 1` makes the difference a genuine quadratic.
pub fn theta(s: usize, t: usize, kappa: usize) -> Result<f64> {
    if s == t + 1 {
        return Err(Error::InvalidParams(
            "s != t + 1 required for theta".into(),
        ));
    }
    let (s, t, k) = (s as f64, t as f64, kappa as f64);
    Ok((k * (s - t) / (s - t - 1.0)).sqrt())
}

/// `g[n1,n2] - g[n1-1,n2+1]` at fixed kappa, as the pair `(a, b)`
/// meaning `a*lambda^2 + b`. Exact: the difference factors as
/// `(n1 - n2 - 1) * (lambda^2 - kappa^2)`.
pub fn g_difference(n1: usize, n2: usize, kappa: usize) -> Result<(i64, i64)> {
    if n1 <= n2 + 1 {
        return Err(Error::InvalidParams(
            "n1 > n2 + 1 required for the g difference".into(),
        ));
    }
    let (a, b, k) = (n1 as i64, n2 as i64, kappa as i64);
    Ok((a - b - 1, -(a - b - 1) * k * k))
}

/// The negative root `-kappa` of the g difference.
pub fn alpha(kappa: usize) -> f64 {
    -(kappa as f64)
}

/// Closed-form transmission of the `B(s,t,kappa)` complement:
/// `kappa^2 + (2s + 3t - 3) kappa + s^2 + t^2 + s*t - s - t`,
/// summed over unordered pairs. The complement is always connected.
pub fn sigma_formula_b(s: usize, t: usize, kappa: usize) -> u64 {
    let (s, t, k) = (s as u64, t as u64, kappa as u64);
    k * k + (2 * s + 3 * t - 3) * k + s * s + t * t + s * t - s - t
}

/// Closed-form transmission of the `BB(n1,n2;kappa)` complement under
/// the join geometry:
/// `n1^2 + n2^2 + n1*n2 - n1 - n2 + 2 kappa^2`, summed over unordered
/// pairs. Assumes the complement is connected, which needs `n2 > kappa`;
/// at `n2 = kappa` the complement strands U and transmission is
/// undefined. The matching geometry has a different distance profile,
/// so this formula does not apply to it unless `kappa = 1`.
pub fn sigma_formula_bb(n1: usize, n2: usize, kappa: usize) -> u64 {
    let (a, b, k) = (n1 as u64, n2 as u64, kappa as u64);
    a * a + b * b + a * b - a - b + 2 * k * k
}

/// Audit quantity `2*sigma(B complement) - n*sqrt(kappa)`, written out
/// the long way. Positive for every valid parameter choice, which the
/// audit suite confirms numerically rather than assumes.
pub fn h_b(s: usize, t: usize, kappa: usize) -> f64 {
    let (sf, tf, kf) = (s as f64, t as f64, kappa as f64);
    let rk = kf.sqrt();
    2.0 * kf * kf + 2.0 * (2.0 * sf + 3.0 * tf - 3.0) * kf
        + 2.0 * sf * sf
        + 2.0 * tf * tf
        + 2.0 * sf * tf
        - 2.0 * sf
        - 2.0 * tf
        - sf * rk
        - tf * rk
        - kf * rk
}

/// Audit quantity `2*sigma(BB complement) - n*kappa` for the join
/// geometry, written out the long way.
pub fn h_bb(n1: usize, n2: usize, kappa: usize) -> f64 {
    let (a, b, k) = (n1 as f64, n2 as f64, kappa as f64);
    2.0 * a * a + 2.0 * b * b + 2.0 * a * b - 2.0 * (a + b) + 4.0 * k * k - (a + b) * k
}
