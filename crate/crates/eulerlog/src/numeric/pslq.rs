//! Integer-relation detection (PSLQ) over arbitrary-precision floats.
//!
//! The implementation follows the classic two-level-free formulation: given
//! reals x_1..x_n it searches integers q_1..q_n, not all zero, with
//! sum q_i x_i ~ 0, giving up when the norm bound shows no relation exists
//! within the coefficient-height budget at the working precision.

use rug::ops::Pow;
use rug::{Float, Integer};

pub struct PslqOptions {
    pub max_coeff: Integer,
    pub max_iter: usize,
}

impl Default for PslqOptions {
    fn default() -> Self {
        PslqOptions {
            max_coeff: Integer::from(1_000_000u64),
            max_iter: 2000,
        }
    }
}

fn nint(x: &Float) -> Float {
    x.clone().round()
}

/// Returns integer coefficients of a detected relation, or None.
pub fn pslq(xs: &[Float], prec: u32, opt: &PslqOptions) -> Option<Vec<Integer>> {
    let n = xs.len();
    if n < 2 {
        return None;
    }
    let fnew = |v: i64| Float::with_val(prec, v);
    // tolerance: leave ~10% of the precision as detection headroom
    let tol = Float::with_val(prec, 2).pow(-(prec as i64 * 3 / 4) as i32);
    let teps = Float::with_val(prec, 2).pow(-(prec as i64 - 24) as i32);

    // gamma = sqrt(4/3) + slack
    let gamma = Float::with_val(prec, 2) / Float::with_val(prec, 3).sqrt();

    let mut a = vec![vec![Float::new(prec); n]; n];
    let mut b = vec![vec![Float::new(prec); n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = fnew(1);
    }
    for (i, row) in b.iter_mut().enumerate() {
        row[i] = fnew(1);
    }
    // s_k = sqrt(sum_{j>=k} x_j^2)
    let mut s = vec![Float::new(prec); n];
    {
        let mut acc = Float::new(prec);
        for k in (0..n).rev() {
            acc += Float::with_val(prec, &xs[k] * &xs[k]);
            s[k] = acc.clone().sqrt();
        }
    }
    let t = s[0].clone();
    if t.is_zero() {
        return None;
    }
    let mut y: Vec<Float> = xs.iter().map(|x| Float::with_val(prec, x / &t)).collect();
    for v in s.iter_mut() {
        *v = Float::with_val(prec, &*v / &t);
    }
    // H matrix (n x n-1)
    let mut h = vec![vec![Float::new(prec); n - 1]; n];
    for i in 0..n {
        for j in 0..n - 1 {
            h[i][j] = if i < j {
                Float::new(prec)
            } else if i == j {
                Float::with_val(prec, &s[j + 1] / &s[j])
            } else {
                let num = Float::with_val(prec, &y[i] * &y[j]);
                -num / Float::with_val(prec, &s[j] * &s[j + 1])
            };
        }
    }
    // initial reduction
    for i in 1..n {
        for j in (0..i.min(n - 1)).rev() {
            if h[j][j].is_zero() {
                continue;
            }
            let q = nint(&Float::with_val(prec, &h[i][j] / &h[j][j]));
            if q.is_zero() {
                continue;
            }
            let yj = Float::with_val(prec, &q * &y[i]);
            y[j] += yj;
            for k in 0..=j {
                let d = Float::with_val(prec, &q * &h[j][k]);
                h[i][k] -= d;
            }
            for k in 0..n {
                let d = Float::with_val(prec, &q * &a[j][k]);
                a[i][k] -= d;
                let d2 = Float::with_val(prec, &q * &b[k][i]);
                b[k][j] += d2;
            }
        }
    }

    for _iter in 0..opt.max_iter {
        // check for a relation already
        let mut best: Option<usize> = None;
        let mut best_val = Float::with_val(prec, 1);
        for (i, yi) in y.iter().enumerate() {
            let a = yi.clone().abs();
            if a < best_val {
                best_val = a;
                best = Some(i);
            }
        }
        if let Some(i) = best {
            if best_val < tol {
                let coeffs: Vec<Integer> = (0..n)
                    .map(|k| {
                        b[k][i]
                            .clone()
                            .round()
                            .to_integer()
                            .unwrap_or_else(|| Integer::from(0))
                    })
                    .collect();
                if coeffs.iter().any(|c| *c != 0)
                    && coeffs.iter().all(|c| c.clone().abs() <= opt.max_coeff)
                {
                    return Some(coeffs);
                }
                return None;
            }
        }
        // norm bound: 1/max|h_jj| bounds the norm of any relation
        let mut maxh = Float::new(prec);
        for (j, row) in h.iter().enumerate().take(n - 1) {
            let v = row[j].clone().abs();
            if v > maxh {
                maxh = v;
            }
        }
        if !maxh.is_zero() {
            let bound = Float::with_val(prec, 1) / &maxh;
            let budget = Float::with_val(prec, &opt.max_coeff) * Float::with_val(prec, n as f64);
            if bound > budget {
                return None;
            }
        }
        // pick m maximizing gamma^i |h_ii|
        let mut m = 0usize;
        let mut mval = Float::with_val(prec, -1);
        let mut g = Float::with_val(prec, 1);
        for i in 0..n - 1 {
            let v = Float::with_val(prec, &g * &h[i][i]).abs();
            if v > mval {
                mval = v;
                m = i;
            }
            g *= &gamma;
        }
        y.swap(m, m + 1);
        a.swap(m, m + 1);
        h.swap(m, m + 1);
        for row in b.iter_mut() {
            row.swap(m, m + 1);
        }
        // corner fix
        if m < n - 2 {
            let t0 = Float::with_val(
                prec,
                Float::with_val(prec, &h[m][m] * &h[m][m])
                    + Float::with_val(prec, &h[m][m + 1] * &h[m][m + 1]),
            )
            .sqrt();
            if t0.is_zero() {
                return None;
            }
            let t1 = Float::with_val(prec, &h[m][m] / &t0);
            let t2 = Float::with_val(prec, &h[m][m + 1] / &t0);
            for i in m..n {
                let h1 = h[i][m].clone();
                let h2 = h[i][m + 1].clone();
                h[i][m] = Float::with_val(prec, &t1 * &h1) + Float::with_val(prec, &t2 * &h2);
                h[i][m + 1] = Float::with_val(prec, &t1 * &h2) - Float::with_val(prec, &t2 * &h1);
            }
        }
        // reduce
        for i in (m + 1).max(1)..n {
            for j in (0..=(i - 1).min(m + 1)).rev() {
                if j >= n - 1 || h[j][j].is_zero() {
                    continue;
                }
                let q = nint(&Float::with_val(prec, &h[i][j] / &h[j][j]));
                if q.is_zero() {
                    continue;
                }
                let yj = Float::with_val(prec, &q * &y[i]);
                y[j] += yj;
                for k in 0..=j {
                    let d = Float::with_val(prec, &q * &h[j][k]);
                    h[i][k] -= d;
                }
                for k in 0..n {
                    let d = Float::with_val(prec, &q * &a[j][k]);
                    a[i][k] -= d;
                    let d2 = Float::with_val(prec, &q * &b[k][i]);
                    b[k][j] += d2;
                }
            }
        }
        // precision exhaustion guard
        let mut amax = Float::new(prec);
        for row in &a {
            for v in row {
                let x = v.clone().abs();
                if x > amax {
                    amax = x;
                }
            }
        }
        if amax > Float::with_val(prec, 1) / &teps {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::mpf::bits_for;

    #[test]
    fn finds_simple_relation() {
        let prec = bits_for(50);
        // x = 3/7 pi - 2/7 e... use ln2 and ln4 = 2 ln2
        let l2 = Float::with_val(prec, rug::float::Constant::Log2);
        let l4 = Float::with_val(prec, 4).ln();
        let xs = vec![l4, l2];
        let r = pslq(&xs, prec, &PslqOptions::default()).expect("relation");
        // expect (1, -2) up to sign
        let a = r[0].clone();
        let b = r[1].clone();
        assert_eq!(b, Integer::from(-2) * &a, "{:?}", r);
    }

    #[test]
    fn rejects_unrelated() {
        let prec = bits_for(45);
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let l2 = Float::with_val(prec, rug::float::Constant::Log2);
        let e = Float::with_val(prec, 1).exp();
        let xs = vec![pi, l2, e];
        let r = pslq(
            &xs,
            prec,
            &PslqOptions {
                max_coeff: Integer::from(100_000u64),
                max_iter: 600,
            },
        );
        assert!(r.is_none());
    }

    #[test]
    fn recovers_rational_combination() {
        let prec = bits_for(60);
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let l2 = Float::with_val(prec, rug::float::Constant::Log2);
        let z3 = Float::with_val(prec, 3).zeta();
        // v = -1/12 pi^2 l2-ish combo: use 7/16 z3 - 3/8 pi - 5/24 l2
        let v = Float::with_val(prec, &z3 * Float::with_val(prec, 7)) / 16
            - Float::with_val(prec, &pi * Float::with_val(prec, 3)) / 8
            - Float::with_val(prec, &l2 * Float::with_val(prec, 5)) / 24;
        let xs = vec![v, z3, pi, l2];
        let r = pslq(&xs, prec, &PslqOptions::default()).expect("relation");
        // normalize so r[0] = 48
        let scale = Integer::from(48) / r[0].clone();
        let coeffs: Vec<Integer> = r.iter().map(|c| (c * &scale).into()).collect();
        assert_eq!(
            coeffs,
            vec![
                Integer::from(48),
                Integer::from(-21),
                Integer::from(18),
                Integer::from(10)
            ]
        );
    }
}
