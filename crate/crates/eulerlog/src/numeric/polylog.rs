//! Arbitrary-precision polylogarithms on the real interval [-1, 1], the
//! inverse tangent integral, and Dirichlet beta values.
//!
//! Arguments near 1 are passed as (x, 1-x) pairs so endpoint quantities stay
//! fully accurate; the unit-neighbourhood evaluation uses the zeta-based
//! expansion of Li_n(e^mu) for |mu| < 2pi, everything else the defining
//! series.

use once_cell::sync::Lazy;
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};
use std::collections::HashMap;
use std::sync::RwLock;

use super::mpf::f;

/// A point of (0,1) carried together with its distance to 1.
#[derive(Debug, Clone)]
pub struct Dual {
    pub x: Float,
    pub omx: Float,
}

impl Dual {
    pub fn new(x: Float, omx: Float) -> Dual {
        Dual { x, omx }
    }

    pub fn from_x(prec: u32, x: &Float) -> Dual {
        Dual {
            x: x.clone(),
            omx: Float::with_val(prec, 1 - x.clone()),
        }
    }

    /// accurate log(x) even for x near 1
    pub fn ln_x(&self) -> Float {
        if self.x.to_f64() > 0.8 {
            (-self.omx.clone()).ln_1p()
        } else {
            self.x.clone().ln()
        }
    }

    /// log(1 - x)
    pub fn ln_omx(&self) -> Float {
        if self.omx.to_f64() > 0.8 {
            (-self.x.clone()).ln_1p()
        } else {
            self.omx.clone().ln()
        }
    }

    /// square: (x^2, 1 - x^2)
    pub fn square(&self, prec: u32) -> Dual {
        let x2 = Float::with_val(prec, &self.x * &self.x);
        let omx2 = Float::with_val(prec, &self.omx * Float::with_val(prec, 1 + self.x.clone()));
        Dual { x: x2, omx: omx2 }
    }
}

// ---------------------------------------------------------------------------
// Bernoulli numbers (exact) and zeta floats, cached
// ---------------------------------------------------------------------------

static BERNOULLI: Lazy<RwLock<Vec<Rational>>> = Lazy::new(|| RwLock::new(Vec::new()));

/// B_k, signed, B_1 = -1/2 convention.
pub fn bernoulli(k: usize) -> Rational {
    {
        let tab = BERNOULLI.read().unwrap();
        if k < tab.len() {
            return tab[k].clone();
        }
    }
    let mut tab = BERNOULLI.write().unwrap();
    while tab.len() <= k {
        let m = tab.len();
        if m == 0 {
            tab.push(Rational::from(1));
            continue;
        }
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        let mut acc = Rational::new();
        let mut binom = Integer::from(1); // C(m+1, 0)
        for (j, bj) in tab.iter().enumerate().take(m) {
            acc += Rational::from(bj) * Rational::from(&binom);
            let num = Integer::from(m as u32 + 1 - j as u32);
            binom = binom * num / Integer::from(j as u32 + 1);
        }
        acc /= -Rational::from(m as u32 + 1);
        tab.push(acc);
    }
    tab[k].clone()
}

static ZETA_CACHE: Lazy<RwLock<HashMap<(u32, u32), Float>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// zeta(n) for n >= 2 at the given precision, cached.
pub fn zeta_f(prec: u32, n: u32) -> Float {
    debug_assert!(n >= 2);
    {
        let tab = ZETA_CACHE.read().unwrap();
        if let Some(v) = tab.get(&(prec, n)) {
            return v.clone();
        }
    }
    let v = Float::with_val(prec, n).zeta();
    ZETA_CACHE.write().unwrap().insert((prec, n), v.clone());
    v
}

/// zeta at an integer argument that may be <= 1 is only used inside the
/// unit-neighbourhood expansion; negative arguments are rational.
fn zeta_int(prec: u32, n: i64) -> Float {
    if n >= 2 {
        zeta_f(prec, n as u32)
    } else if n == 0 {
        Float::with_val(prec, Rational::from((-1, 2)))
    } else {
        // zeta(-j) = -B_{j+1}/(j+1)
        let j = (-n) as usize;
        let q = -bernoulli(j + 1) / Rational::from(j as u32 + 1);
        Float::with_val(prec, q)
    }
}

// ---------------------------------------------------------------------------
// real polylog
// ---------------------------------------------------------------------------

/// Li_n(x) for x in [0, 1/2 + eps] by the defining series.
fn li_series(prec: u32, n: u32, x: &Float) -> Float {
    let mut sum = Float::new(prec);
    let mut xp = x.clone();
    let tiny = Float::with_val(prec, Float::u_exp(1, -(prec as i32) - 8));
    let mut k = 1u64;
    loop {
        let term = Float::with_val(prec, &xp / Float::with_val(prec, k).pow(n));
        sum += &term;
        if term.clone().abs() < tiny.clone() * sum.clone().abs().max(&f(prec, 1)) {
            break;
        }
        xp *= x;
        k += 1;
        if k > 4 * prec as u64 {
            break;
        }
    }
    sum
}

/// Li_n(1 - eps) for small-to-moderate eps via the expansion
/// Li_n(e^mu) = sum_{m != n-1} zeta(n-m) mu^m / m!
///            + mu^(n-1)/(n-1)! (H_{n-1} - ln(-mu)),  |mu| < 2 pi.
fn li_near_one(prec: u32, n: u32, omx: &Float) -> Float {
    if omx.is_zero() {
        return zeta_f(prec, n);
    }
    // mu = ln(1-eps) = ln_1p(-eps) < 0
    let mu = (-omx.clone()).ln_1p();
    let ln_neg_mu = (-mu.clone()).ln();
    let mut sum = Float::new(prec);
    let mut mu_pow = Float::with_val(prec, 1); // mu^m / m!
    let tiny = Float::with_val(prec, Float::u_exp(1, -(prec as i32) - 8));
    let mut m: i64 = 0;
    loop {
        if m == n as i64 - 1 {
            // special term
            let mut h = Float::new(prec);
            for j in 1..n {
                h += Float::with_val(prec, Rational::from((1, j)));
            }
            let term = Float::with_val(prec, &mu_pow * Float::with_val(prec, &h - &ln_neg_mu));
            sum += term;
        } else {
            let z = zeta_int(prec, n as i64 - m);
            if !z.is_zero() {
                let term = Float::with_val(prec, &mu_pow * &z);
                sum += &term;
                if m as u32 > n && term.clone().abs() < tiny {
                    break;
                }
            }
        }
        m += 1;
        mu_pow *= &mu;
        mu_pow /= Float::with_val(prec, m);
        if m > 4 * prec as i64 {
            break;
        }
    }
    sum
}

/// Li_n at a positive argument given as a dual point.
pub fn li_pos(prec: u32, n: u32, d: &Dual) -> Float {
    if d.x.is_zero() {
        return Float::new(prec);
    }
    if d.x.to_f64() <= 0.5 {
        li_series(prec, n, &d.x)
    } else {
        li_near_one(prec, n, &d.omx)
    }
}

/// Li_n(-y) for y in [0,1] via Li_n(-y) = 2^(1-n) Li_n(y^2) - Li_n(y).
pub fn li_neg(prec: u32, n: u32, d: &Dual) -> Float {
    if d.x.to_f64() <= 0.5 {
        li_series(prec, n, &(-d.x.clone()))
    } else {
        let sq = d.square(prec);
        let a = li_pos(prec, n, &sq);
        let b = li_pos(prec, n, d);
        let scale = Float::with_val(prec, Float::i_exp(1, 1 - n as i32));
        a * scale - b
    }
}

/// Li_n(-x^2) for x in [0,1].
pub fn li_neg_square(prec: u32, n: u32, d: &Dual) -> Float {
    let sq = d.square(prec);
    li_neg(prec, n, &sq)
}

/// Inverse tangent integral Ti_n(x) = Im Li_n(i x) for x in [0,1].
pub fn ti(prec: u32, n: u32, d: &Dual) -> Float {
    let x = &d.x;
    if x.is_zero() {
        return Float::new(prec);
    }
    if x.to_f64() <= 0.5 {
        // sum (-1)^k x^(2k+1)/(2k+1)^n
        let x2 = Float::with_val(prec, x * x);
        let mut sum = Float::new(prec);
        let mut xp = x.clone();
        let tiny = Float::with_val(prec, Float::u_exp(1, -(prec as i32) - 8));
        let mut k = 0u64;
        loop {
            let term = Float::with_val(prec, &xp / Float::with_val(prec, 2 * k + 1).pow(n));
            if k % 2 == 0 {
                sum += &term;
            } else {
                sum -= &term;
            }
            if term.clone().abs() < tiny {
                break;
            }
            xp *= &x2;
            k += 1;
        }
        sum
    } else {
        // Im Li_n(e^mu), mu = ln x + i pi/2, |mu| <= ~1.66 < 2 pi
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let mu = Complex::with_val(prec, (d.ln_x(), pi.clone() / 2));
        li_exp_complex(prec, n, &mu).imag().clone()
    }
}

/// Li_n(e^mu) for complex mu with |mu| < 2 pi via the zeta expansion.
pub fn li_exp_complex(prec: u32, n: u32, mu: &Complex) -> Complex {
    let mut sum = Complex::new(prec);
    let mut mu_pow = Complex::with_val(prec, (1, 0));
    let tiny = Float::with_val(prec, Float::u_exp(1, -(prec as i32) - 8));
    let mut m: i64 = 0;
    loop {
        if m == n as i64 - 1 {
            let mut h = Float::new(prec);
            for j in 1..n {
                h += Float::with_val(prec, Rational::from((1, j)));
            }
            let neg_mu: Complex = -mu.clone();
            let ln_neg_mu = neg_mu.ln();
            let term = mu_pow.clone() * (Complex::with_val(prec, (h, 0)) - ln_neg_mu);
            sum += term;
        } else {
            let z = zeta_int(prec, n as i64 - m);
            if !z.is_zero() {
                let term = mu_pow.clone() * &z;
                let mag = term.clone().abs().real().clone();
                sum += term;
                if m as u32 > n + 4 && mag < tiny {
                    break;
                }
            }
        }
        m += 1;
        mu_pow *= mu;
        mu_pow /= Float::with_val(prec, m);
        if m > 6 * prec as i64 {
            break;
        }
    }
    sum
}

/// Li_n(z) for complex |z| <= 0.75 by the defining series.
pub fn li_complex_series(prec: u32, n: u32, z: &Complex) -> Complex {
    let mut sum = Complex::new(prec);
    let mut zp = z.clone();
    let tiny = Float::with_val(prec, Float::u_exp(1, -(prec as i32) - 8));
    let mut k = 1u64;
    loop {
        let term = zp.clone() / Float::with_val(prec, k).pow(n);
        let mag = term.clone().abs().real().clone();
        sum += term;
        if mag < tiny {
            break;
        }
        zp *= z;
        k += 1;
        if k > 16 * prec as u64 {
            break;
        }
    }
    sum
}

/// Dirichlet beta(s) for integer s >= 2 by accelerated alternating summation
/// (Cohen-Rodriguez Villegas-Zagier).
pub fn dirichlet_beta(prec: u32, s: u32) -> Float {
    let digits = (prec as f64 / std::f64::consts::LOG2_10) as u32 + 4;
    let n = (131 * digits / 100 + 6) as i64;
    // d = (3+sqrt(8))^n ; d = (d + 1/d)/2
    let sqrt8 = Float::with_val(prec, 8).sqrt();
    let base = Float::with_val(prec, 3 + sqrt8);
    let dpow = base.pow(Float::with_val(prec, n));
    let d = Float::with_val(prec, &dpow + Float::with_val(prec, 1) / &dpow) / 2;
    let mut b = Float::with_val(prec, -1);
    let mut c = Float::with_val(prec, -&d);
    let mut sum = Float::new(prec);
    for k in 0..n {
        c = Float::with_val(prec, &b - &c);
        // a_k = 1/(2k+1)^s
        let ak = Float::with_val(prec, 1) / Float::with_val(prec, 2 * k + 1).pow(s);
        sum += Float::with_val(prec, &c * &ak);
        // b = (k+n)(k-n)b / ((k+1/2)(k+1))
        let num = Float::with_val(prec, (k + n) * (k - n));
        let den = Float::with_val(prec, 2 * k + 1) * Float::with_val(prec, k + 1) / 2;
        b = b * num / den;
    }
    sum / d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::mpf::{bits_for, pow10_neg};

    fn close(a: &Float, b: &Float, digits: i64) -> bool {
        let prec = a.prec();
        let diff = Float::with_val(prec, a - b).abs();
        diff < pow10_neg(prec, digits)
    }

    #[test]
    fn li2_half_matches_closed_form() {
        let prec = bits_for(60);
        let half = Dual::new(
            Float::with_val(prec, Rational::from((1, 2))),
            Float::with_val(prec, Rational::from((1, 2))),
        );
        let got = li_pos(prec, 2, &half);
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let l2 = Float::with_val(prec, rug::float::Constant::Log2);
        let want = pi.clone() * &pi / 12 - l2.clone() * &l2 / 2;
        assert!(close(&got, &want, 58));
    }

    #[test]
    fn li2_near_one_matches_reflection() {
        // Li_2(1-eps) + Li_2(eps) = pi^2/6 - ln(eps) ln(1-eps)
        let prec = bits_for(60);
        let eps = Float::with_val(prec, Rational::from((1, 1000)));
        let omx = eps.clone();
        let x = Float::with_val(prec, 1 - eps.clone());
        let big = li_pos(prec, 2, &Dual::new(x.clone(), omx.clone()));
        let small = li_series(prec, 2, &eps);
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let rhs = pi.clone() * &pi / 6
            - eps.clone().ln() * Float::with_val(prec, (-eps.clone()).ln_1p());
        let lhs = big + small;
        assert!(close(&lhs, &rhs, 58));
    }

    #[test]
    fn li_at_one_is_zeta() {
        let prec = bits_for(50);
        let one = Dual::new(Float::with_val(prec, 1), Float::new(prec));
        for n in [2u32, 3, 4, 5] {
            let got = li_pos(prec, n, &one);
            assert!(close(&got, &zeta_f(prec, n), 48), "Li_{}(1)", n);
        }
    }

    #[test]
    fn li_neg_at_one_is_minus_eta() {
        let prec = bits_for(50);
        let one = Dual::new(Float::with_val(prec, 1), Float::new(prec));
        let got = li_neg(prec, 2, &one);
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let want: Float = -(pi.clone() * &pi / 12u32);
        assert!(close(&got, &want, 48));
    }

    #[test]
    fn ti2_at_one_is_catalan() {
        let prec = bits_for(50);
        let one = Dual::new(Float::with_val(prec, 1), Float::new(prec));
        let got = ti(prec, 2, &one);
        let cat = Float::with_val(prec, rug::float::Constant::Catalan);
        assert!(close(&got, &cat, 48));
    }

    #[test]
    fn ti_series_and_expansion_agree() {
        let prec = bits_for(50);
        for num in [45u32, 55, 70, 95] {
            let x = Float::with_val(prec, Rational::from((num, 100)));
            let d = Dual::from_x(prec, &x);
            // series route (valid a bit beyond 1/2 for testing)
            let x2 = Float::with_val(prec, &x * &x);
            let mut sum = Float::new(prec);
            let mut xp = x.clone();
            for k in 0..2000u32 {
                let t = Float::with_val(prec, &xp / Float::with_val(prec, 2 * k + 1).pow(2u32));
                if k % 2 == 0 {
                    sum += &t;
                } else {
                    sum -= &t;
                }
                xp *= &x2;
            }
            let got = ti(prec, 2, &d);
            assert!(close(&got, &sum, 45), "x = 0.{}", num);
        }
    }

    #[test]
    fn beta2_is_catalan() {
        let prec = bits_for(60);
        let got = dirichlet_beta(prec, 2);
        let cat = Float::with_val(prec, rug::float::Constant::Catalan);
        assert!(close(&got, &cat, 58));
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), Rational::from(1));
        assert_eq!(bernoulli(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli(2), Rational::from((1, 6)));
        assert_eq!(bernoulli(4), Rational::from((-1, 30)));
        assert_eq!(bernoulli(12), Rational::from((-691, 2730)));
        assert_eq!(bernoulli(3), Rational::from(0));
    }
}
