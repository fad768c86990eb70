//! Tanh-sinh quadrature on (0,1) with node caching and level doubling.
//!
//! Nodes are produced as (x, 1-x) pairs computed directly from exp(-2u) so
//! that endpoint-singular integrands (powers of log(1-x), log(x)) can be
//! evaluated without cancellation arbitrarily close to the endpoints.

use once_cell::sync::Lazy;
use rug::Float;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::mpf::{bits_for, pow10_neg};
use super::polylog::Dual;

/// One abscissa: the dual point and the weight dx/dt (step factor excluded).
#[derive(Debug, Clone)]
pub struct Node {
    pub point: Dual,
    pub weight: Float,
}

/// The nodes introduced at a given level (odd multiples of h = 2^-level; at
/// level 0 all integer abscissas including t = 0).
#[derive(Debug)]
pub struct LevelNodes {
    pub nodes: Vec<Node>,
}

static NODE_CACHE: Lazy<RwLock<HashMap<(u32, u32), Arc<LevelNodes>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// t range: weights decay like exp(-pi/2 e^t), so sinh(t_max) must reach
/// roughly ln(10) * (digits + guard) * 2 / pi.
fn t_max(digits: u32) -> f64 {
    let target = (digits as f64 + 30.0) * std::f64::consts::LN_10;
    (2.0 * target / std::f64::consts::PI).asinh() + 0.05
}

fn make_node(prec: u32, t: &Float) -> Node {
    // u = (pi/2) sinh t; x = 1/(1+e^{-2u}), 1-x = 1/(1+e^{2u})
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    let u = Float::with_val(prec, t.clone().sinh() * &pi) / 2;
    let e2u = Float::with_val(prec, 2 * u).exp();
    let x = Float::with_val(prec, 1) / Float::with_val(prec, 1 + Float::with_val(prec, 1) / &e2u);
    let omx = Float::with_val(prec, 1) / Float::with_val(prec, 1 + e2u);
    // dx/dt = (pi/2) cosh t * sech^2(u)/... = 2 x (1-x) (pi/2) cosh t
    let w = Float::with_val(prec, &x * &omx) * pi * t.clone().cosh();
    Node {
        point: Dual { x, omx },
        weight: w,
    }
}

/// Nodes introduced at `level` for the given decimal-digit target, cached.
pub fn level_nodes(digits: u32, level: u32) -> Arc<LevelNodes> {
    let key = (digits, level);
    {
        let cache = NODE_CACHE.read().unwrap();
        if let Some(v) = cache.get(&key) {
            return v.clone();
        }
    }
    let prec = bits_for(digits);
    let tmax = t_max(digits);
    let h = 0.5f64.powi(level as i32);
    let mut nodes = Vec::new();
    if level == 0 {
        let kmax = (tmax / h).ceil() as i64;
        for k in -kmax..=kmax {
            let t = Float::with_val(prec, k);
            nodes.push(make_node(prec, &t));
        }
    } else {
        let kmax = (tmax / h).ceil() as i64;
        let mut k = 1i64;
        while k <= kmax {
            for sign in [1i64, -1] {
                let t = Float::with_val(prec, sign * k) * Float::with_val(prec, h);
                nodes.push(make_node(prec, &t));
            }
            k += 2;
        }
    }
    let arc = Arc::new(LevelNodes { nodes });
    NODE_CACHE.write().unwrap().insert(key, arc.clone());
    arc
}

#[derive(Debug, Clone)]
pub struct QuadResult {
    pub value: Float,
    /// heuristic error estimate
    pub error: Float,
    pub levels: u32,
}

pub const MAX_LEVEL: u32 = 11;

/// Integrate f over (0,1). The integrand receives the node's dual point and
/// must be finite at every interior point.
pub fn integrate<F>(digits: u32, f: F) -> QuadResult
where
    F: Fn(&Dual) -> Float + Sync,
{
    integrate_with_grids(digits, |level| {
        let nodes = level_nodes(digits, level);
        nodes.nodes.iter().map(|n| f(&n.point)).collect()
    })
}

/// Integrate with a caller-supplied per-level evaluation (used to share
/// cached factor grids between integrands).
pub fn integrate_with_grids<G>(digits: u32, eval_level: G) -> QuadResult
where
    G: Fn(u32) -> Vec<Float>,
{
    let prec = bits_for(digits);
    let tol = pow10_neg(prec, digits as i64 + 3);
    let mut sum = Float::new(prec); // running sum of f(t_k) w_k over all nodes so far
    let mut prev_value: Option<Float> = None;
    let mut prev_diff: Option<Float> = None;
    let mut best = Float::new(prec);
    let mut best_err = Float::with_val(prec, 1);
    for level in 0..=MAX_LEVEL {
        let nodes = level_nodes(digits, level);
        let values = eval_level(level);
        debug_assert_eq!(values.len(), nodes.nodes.len());
        for (node, v) in nodes.nodes.iter().zip(values.iter()) {
            sum += Float::with_val(prec, v * &node.weight);
        }
        let h = Float::with_val(prec, 0.5f64.powi(level as i32));
        let value = Float::with_val(prec, &sum * &h);
        if let Some(pv) = &prev_value {
            let diff = Float::with_val(prec, &value - pv).abs();
            let err = match &prev_diff {
                Some(pd) if !pd.is_zero() && !diff.is_zero() => {
                    // geometric convergence model: err ~ diff^2 / prev_diff
                    let e = Float::with_val(prec, &diff * &diff) / pd.clone();
                    e.min(&diff)
                }
                _ => diff.clone(),
            };
            best = value.clone();
            best_err = err.clone();
            if err < tol && level >= 4 {
                return QuadResult {
                    value,
                    error: err,
                    levels: level,
                };
            }
            prev_diff = Some(diff);
        }
        prev_value = Some(value);
    }
    QuadResult {
        value: best,
        error: best_err,
        levels: MAX_LEVEL,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    #[test]
    fn integrates_log_kernel() {
        // int_0^1 log(x)/(1-x) dx = -pi^2/6
        let digits = 45;
        let prec = bits_for(digits);
        let r = integrate(digits, |d| {
            let prec = d.x.prec();
            Float::with_val(prec, d.ln_x() / &d.omx)
        });
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let want = -(pi.clone() * &pi) / 6;
        let diff = Float::with_val(prec, &r.value - &want).abs();
        assert!(diff < pow10_neg(prec, 43), "diff = {:?}", diff.to_f64());
    }

    #[test]
    fn integrates_endpoint_log_powers() {
        // int_0^1 log^2(1-x) dx = 2
        let digits = 45;
        let prec = bits_for(digits);
        let r = integrate(digits, |d| {
            let l = d.ln_omx();
            Float::with_val(d.x.prec(), &l * &l)
        });
        let want = Float::with_val(prec, 2);
        let diff = Float::with_val(prec, &r.value - &want).abs();
        assert!(diff < pow10_neg(prec, 43));
    }

    #[test]
    fn integrates_smooth_powers() {
        // int x^3 = 1/4
        let digits = 40;
        let prec = bits_for(digits);
        let r = integrate(digits, |d| d.x.clone().pow(3u32));
        let want = Float::with_val(prec, 0.25);
        let diff = Float::with_val(prec, &r.value - &want).abs();
        assert!(diff < pow10_neg(prec, 38));
    }
}
