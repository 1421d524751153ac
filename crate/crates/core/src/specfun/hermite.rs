//! Hermite polynomials Hₙ and the weight-normalized Hermite functions φₙ.
//!
//! Raw Hₙ(x) overflows double precision near n ≈ 35 at large arguments, so
//! raw mode is guarded by [`RAW_ORDER_MAX`]. All density work uses the
//! weight-normalized form
//!
//! ```text
//! φₙ(x) = e^{−x²/2} Hₙ(x) / √(2ⁿ n! √π),   ∫ φₙ² dx = 1,
//! ```
//!
//! whose recurrence
//! φ_{n+1} = x √(2/(n+1)) φₙ − √(n/(n+1)) φ_{n−1}
//! keeps every intermediate bounded; it is stable for n into the hundreds
//! and |x| well past the classical turning point √(2n+1).

use alloc::vec::Vec;

use num_traits::Float;

use crate::error::{Error, Result};

/// Overflow guard for raw-mode evaluation.
pub const RAW_ORDER_MAX: u32 = 40;

/// How a Hermite evaluation is scaled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HermiteMode {
    /// The polynomial Hₙ(x) itself; guarded by [`RAW_ORDER_MAX`].
    Raw,
    /// The normalized Hermite function φₙ(x); stable at high order.
    WeightNormalized,
}

/// Evaluates Hₙ(x) (raw) or φₙ(x) (weight-normalized).
pub fn hermite(n: u32, x: f64, mode: HermiteMode) -> Result<f64> {
    match mode {
        HermiteMode::Raw => {
            if n > RAW_ORDER_MAX {
                return Err(Error::OrderTooLarge {
                    n,
                    max: RAW_ORDER_MAX,
                });
            }
            Ok(hermite_raw(n, x))
        }
        HermiteMode::WeightNormalized => Ok(hermite_weighted(n, x)),
    }
}

fn hermite_raw(n: u32, x: f64) -> f64 {
    // H₀ = 1, H₁ = 2x, H_{k+1} = 2x H_k − 2k H_{k−1}
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The normalized Hermite function φₙ(x) = e^{−x²/2} Hₙ(x) / √(2ⁿ n! √π).
pub fn hermite_weighted(n: u32, x: f64) -> f64 {
    // φ₀ = π^{−1/4} e^{−x²/2}
    let mut prev = core::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    if n == 0 {
        return prev;
    }
    let mut cur = x * 2.0f64.sqrt() * prev;
    for k in 1..n {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Derivative of the normalized Hermite function:
/// φₙ′(x) = √(2n) φ_{n−1}(x) − x φₙ(x).
pub fn hermite_weighted_derivative(n: u32, x: f64) -> f64 {
    if n == 0 {
        return -x * hermite_weighted(0, x);
    }
    (2.0 * n as f64).sqrt() * hermite_weighted(n - 1, x) - x * hermite_weighted(n, x)
}

/// Hₙ(0): zero for odd n, (−1)^{n/2} n!/(n/2)! for even n.
///
/// Returned in f64, so very large even orders saturate to ±∞; the
/// closed-form moment expressions that need large orders work in log
/// space instead of calling this.
pub fn hermite_at_zero(n: u32) -> f64 {
    if n % 2 == 1 {
        return 0.0;
    }
    let m = n / 2;
    // n!/(n/2)! = (m+1)(m+2)…(2m)
    let mut acc = 1.0f64;
    for j in (m + 1)..=(2 * m) {
        acc *= j as f64;
    }
    if m % 2 == 0 {
        acc
    } else {
        -acc
    }
}

/// ∫₀^∞ x e^{−x²} [Hₙ(x)]² dx by the closed forms
/// (2m + ½)[H_{2m}(0)]² for n = 2m and 2(2m+1)²[H_{2m}(0)]² for n = 2m+1.
pub fn hermite_squared_first_moment(n: u32) -> f64 {
    let m = n / 2;
    let h0 = hermite_at_zero(2 * m);
    let h0sq = h0 * h0;
    if n % 2 == 0 {
        (2.0 * m as f64 + 0.5) * h0sq
    } else {
        let odd = 2.0 * m as f64 + 1.0;
        2.0 * odd * odd * h0sq
    }
}

/// Evaluator for a fixed maximum order and mode.
///
/// `eval_all` runs the recurrence once and hands back every order up to
/// `max_order`, which is what the orthogonality checks want.
#[derive(Debug, Clone, Copy)]
pub struct HermiteTable {
    max_order: u32,
    mode: HermiteMode,
}

impl HermiteTable {
    pub fn new(max_order: u32, mode: HermiteMode) -> Result<Self> {
        if mode == HermiteMode::Raw && max_order > RAW_ORDER_MAX {
            return Err(Error::OrderTooLarge {
                n: max_order,
                max: RAW_ORDER_MAX,
            });
        }
        Ok(Self { max_order, mode })
    }

    pub fn max_order(&self) -> u32 {
        self.max_order
    }

    pub fn mode(&self) -> HermiteMode {
        self.mode
    }

    pub fn eval(&self, n: u32, x: f64) -> Result<f64> {
        if n > self.max_order {
            return Err(Error::OrderTooLarge {
                n,
                max: self.max_order,
            });
        }
        hermite(n, x, self.mode)
    }

    /// All orders 0..=max_order at `x`, from a single recurrence pass.
    pub fn eval_all(&self, x: f64) -> Vec<f64> {
        let len = self.max_order as usize + 1;
        let mut out = Vec::with_capacity(len);
        let first = match self.mode {
            HermiteMode::Raw => 1.0,
            HermiteMode::WeightNormalized => {
                core::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp()
            }
        };
        out.push(first);
        if self.max_order == 0 {
            return out;
        }
        let second = match self.mode {
            HermiteMode::Raw => 2.0 * x,
            HermiteMode::WeightNormalized => x * 2.0f64.sqrt() * first,
        };
        out.push(second);
        for k in 1..self.max_order {
            let kf = k as f64;
            let next = match self.mode {
                HermiteMode::Raw => 2.0 * x * out[k as usize] - 2.0 * kf * out[k as usize - 1],
                HermiteMode::WeightNormalized => {
                    x * (2.0 / (kf + 1.0)).sqrt() * out[k as usize]
                        - (kf / (kf + 1.0)).sqrt() * out[k as usize - 1]
                }
            };
            out.push(next);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn raw_low_orders() {
        // H₀ ≡ 1 anywhere
        assert_eq!(hermite(0, 7.3, HermiteMode::Raw).unwrap(), 1.0);
        // H₂(0) = −2
        assert_eq!(hermite(2, 0.0, HermiteMode::Raw).unwrap(), -2.0);
        // H₃(x) = 8x³ − 12x at x = 0.5 gives −5
        assert!((hermite(3, 0.5, HermiteMode::Raw).unwrap() + 5.0).abs() < 1e-12);
    }

    #[test]
    fn raw_recurrence_matches_explicit_polynomials() {
        for &x in &[-2.5, -0.3, 0.0, 0.7, 1.9] {
            let h4 = 16.0 * x.powi(4) - 48.0 * x * x + 12.0;
            assert!((hermite_raw(4, x) - h4).abs() < 1e-10 * (1.0 + h4.abs()));
            let h5 = 32.0 * x.powi(5) - 160.0 * x.powi(3) + 120.0 * x;
            assert!((hermite_raw(5, x) - h5).abs() < 1e-10 * (1.0 + h5.abs()));
        }
    }

    #[test]
    fn raw_overflow_guard() {
        assert!(matches!(
            hermite(41, 1.0, HermiteMode::Raw),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(hermite(40, 1.0, HermiteMode::Raw).is_ok());
    }

    #[test]
    fn weighted_matches_raw_scaling_at_low_order() {
        for n in 0..=12u32 {
            let norm = (2f64.powi(n as i32) * gamma_fact(n) * PI.sqrt()).sqrt();
            for &x in &[-2.0, -0.4, 0.1, 1.3, 3.0] {
                let expect = (-0.5 * x * x).exp() * hermite_raw(n, x) / norm;
                let got = hermite_weighted(n, x);
                assert!(
                    (got - expect).abs() < 1e-12 * (1.0 + expect.abs()),
                    "n={n} x={x}: {got} vs {expect}"
                );
            }
        }
    }

    fn gamma_fact(n: u32) -> f64 {
        (1..=n as u64).map(|k| k as f64).product::<f64>().max(1.0)
    }

    #[test]
    fn weighted_derivative_matches_central_difference() {
        let h = 1e-6;
        for n in [0u32, 1, 3, 8, 15] {
            for &x in &[-1.7, 0.0, 0.9, 2.4] {
                let fd = (hermite_weighted(n, x + h) - hermite_weighted(n, x - h)) / (2.0 * h);
                let an = hermite_weighted_derivative(n, x);
                assert!((fd - an).abs() < 1e-7, "n={n} x={x}: {fd} vs {an}");
            }
        }
    }

    #[test]
    fn at_zero_values() {
        assert_eq!(hermite_at_zero(0), 1.0);
        assert_eq!(hermite_at_zero(1), 0.0);
        // n=4: +4!/2! = 12
        assert_eq!(hermite_at_zero(4), 12.0);
        // n=2: −2!/1! = −2
        assert_eq!(hermite_at_zero(2), -2.0);
        for n in 0..=RAW_ORDER_MAX {
            let direct = hermite_raw(n, 0.0);
            assert!(
                (hermite_at_zero(n) - direct).abs() < 1e-9 * (1.0 + direct.abs()),
                "mismatch at n={n}"
            );
        }
    }

    #[test]
    fn weighted_high_order_remains_finite() {
        // Stability sweep: no overflow or NaN up to n=500 out to 3×√(2n+1).
        for &n in &[100u32, 300, 500] {
            let reach = 3.0 * (2.0 * n as f64 + 1.0).sqrt();
            let mut saw_nonzero = false;
            for i in 0..=60 {
                let x = -reach + i as f64 * reach / 30.0;
                let v = hermite_weighted(n, x);
                assert!(v.is_finite(), "n={n} x={x} not finite");
                assert!(v.abs() < 1.0, "n={n} x={x}: |φ| = {} not bounded", v.abs());
                if v != 0.0 {
                    saw_nonzero = true;
                }
            }
            assert!(saw_nonzero);
        }
    }

    #[test]
    fn first_moment_closed_forms() {
        // n=0: ∫ x e^{−x²} = 1/2
        assert!((hermite_squared_first_moment(0) - 0.5).abs() < 1e-15);
        // n=1: 2(1)²·1 = 2
        assert!((hermite_squared_first_moment(1) - 2.0).abs() < 1e-15);
        // n=2: 2.5·[H₂(0)]² = 10
        assert!((hermite_squared_first_moment(2) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn table_eval_all_consistent() {
        let table = HermiteTable::new(15, HermiteMode::WeightNormalized).unwrap();
        let row = table.eval_all(0.83);
        assert_eq!(row.len(), 16);
        for (n, &v) in row.iter().enumerate() {
            assert!((v - hermite_weighted(n as u32, 0.83)).abs() < 1e-14);
        }
        assert!(matches!(
            HermiteTable::new(60, HermiteMode::Raw),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(table.eval(16, 0.0).is_err());
    }
}
