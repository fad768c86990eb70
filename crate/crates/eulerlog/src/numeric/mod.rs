//! Arbitrary-precision numerical evaluation of every index family plus
//! integer-relation detection: the universal verifier for the symbolic side.

pub mod mpf;
pub mod polylog;
pub mod pslq;
pub mod quad;
pub mod series;

use once_cell::sync::Lazy;
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};
use thiserror::Error;

use crate::constants::{Atom, BasisVector, Monomial};
use crate::index::{AuxKind, Index, QpliIndex};
use mpf::{bits_for, err_digits, pow10_neg};
use polylog::{li_complex_series, li_neg, li_neg_square, li_pos, ti, zeta_f, Dual};

/// Arbitrary-precision value with the number of decimal digits guaranteed
/// correct by the producing routine's error estimate.
#[derive(Debug, Clone)]
pub struct NumericValue {
    pub value: Float,
    pub err_digits: u32,
}

impl NumericValue {
    pub fn exact(value: Float) -> NumericValue {
        NumericValue {
            value,
            err_digits: u32::MAX,
        }
    }
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("index does not converge: {0}")]
    NonConvergent(String),
    #[error("precision exhausted for {0}")]
    PrecisionExhausted(String),
    #[error("no numeric route for {0}")]
    Unsupported(String),
}

// ---------------------------------------------------------------------------
// atoms and vectors
// ---------------------------------------------------------------------------

static ATOM_CACHE: Lazy<RwLock<HashMap<(Atom, u32), Float>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn half_complex(prec: u32) -> Complex {
    Complex::with_val(
        prec,
        (
            Float::with_val(prec, Rational::from((1, 2))),
            Float::with_val(prec, Rational::from((1, 2))),
        ),
    )
}

/// Value of one atom to at least `digits` correct decimal digits.
pub fn eval_atom(atom: Atom, digits: u32) -> NumericValue {
    let key = (atom, digits);
    {
        let cache = ATOM_CACHE.read().unwrap();
        if let Some(v) = cache.get(&key) {
            return NumericValue {
                value: v.clone(),
                err_digits: digits + mpf::GUARD_DIGITS / 2,
            };
        }
    }
    let prec = bits_for(digits);
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    let l2 = Float::with_val(prec, rug::float::Constant::Log2);
    let v = match atom {
        Atom::Pi => pi,
        Atom::Log2 => l2,
        Atom::Catalan => Float::with_val(prec, rug::float::Constant::Catalan),
        Atom::EulerGamma => Float::with_val(prec, rug::float::Constant::Euler),
        Atom::Zeta(n) => zeta_f(prec, n),
        Atom::LiHalf(n) => {
            let half = Dual::new(
                Float::with_val(prec, Rational::from((1, 2))),
                Float::with_val(prec, Rational::from((1, 2))),
            );
            li_pos(prec, n, &half)
        }
        Atom::ImLi3 => {
            // Im Li3(1+i) = 7 pi^3/128 + 3 pi log^2 2/32 - Im Li3((1+i)/2)
            let inner = li_complex_series(prec, 3, &half_complex(prec));
            let t1 = pi.clone().pow(3u32) * Float::with_val(prec, 7) / 128;
            let t2 = Float::with_val(prec, &pi * Float::with_val(prec, &l2 * &l2))
                * Float::with_val(prec, 3)
                / 32;
            t1 + t2 - inner.imag()
        }
        Atom::ImLi4 => {
            // Im Li4(1+i) = Im Li4((1+i)/2) + pi log^3 2/64 + 7 pi^3 log2/256
            let inner = li_complex_series(prec, 4, &half_complex(prec));
            let t1 = Float::with_val(prec, &pi * l2.clone().pow(3u32)) / 64;
            let t2 = pi.clone().pow(3u32) * &l2 * Float::with_val(prec, 7) / 256;
            inner.imag().clone() + t1 + t2
        }
        Atom::PsiDiff3 => polylog::dirichlet_beta(prec, 4) * 1536u32,
    };
    ATOM_CACHE.write().unwrap().insert(key, v.clone());
    NumericValue {
        value: v,
        err_digits: digits + mpf::GUARD_DIGITS / 2,
    }
}

pub fn eval_monomial(m: &Monomial, digits: u32) -> Float {
    let prec = bits_for(digits);
    let mut out = Float::with_val(prec, 1);
    for (a, e) in &m.0 {
        out *= eval_atom(*a, digits).value.pow(*e);
    }
    out
}

/// Exact-coefficient linear combination of monomial values.
pub fn eval_vector(v: &BasisVector, digits: u32) -> NumericValue {
    let prec = bits_for(digits);
    let mut out = Float::new(prec);
    for (m, q) in &v.0 {
        out += eval_monomial(m, digits) * Float::with_val(prec, q);
    }
    NumericValue {
        value: out,
        err_digits: digits + mpf::GUARD_DIGITS / 2,
    }
}

// ---------------------------------------------------------------------------
// quadrature of the integral families
// ---------------------------------------------------------------------------

/// Polylog-argument codes shared by the PLI and QPLI families; 1..=6 are the
/// L(n,k) codes, 7 = Li_n(-x^2), 8 = Ti_n(x).
fn poly_factor(prec: u32, n: u32, code: u8, d: &Dual) -> Float {
    match code {
        1 => li_pos(prec, n, d),
        2 => li_neg(prec, n, d),
        3 => {
            let arg = Dual {
                x: Float::with_val(prec, &d.omx / 2u32),
                omx: Float::with_val(prec, 1 + &d.x) / 2u32,
            };
            li_pos(prec, n, &arg)
        }
        4 => {
            let arg = Dual {
                x: Float::with_val(prec, 1 + &d.x) / 2u32,
                omx: Float::with_val(prec, &d.omx / 2u32),
            };
            li_pos(prec, n, &arg)
        }
        5 | 6 => {
            let onepx = Float::with_val(prec, 1 + &d.x);
            let arg = Dual {
                x: Float::with_val(prec, &d.omx / &onepx),
                omx: Float::with_val(prec, 2 * d.x.clone()) / &onepx,
            };
            if code == 5 {
                li_pos(prec, n, &arg)
            } else {
                li_neg(prec, n, &arg)
            }
        }
        7 => li_neg_square(prec, n, d),
        8 => ti(prec, n, d),
        _ => unreachable!("bad polylog code"),
    }
}

type GridKey = (u32, u8, u32, u32); // (n, code, level, digits)
static GRID_CACHE: Lazy<RwLock<HashMap<GridKey, Arc<Vec<Float>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn poly_grid(digits: u32, level: u32, n: u32, code: u8) -> Arc<Vec<Float>> {
    let key = (n, code, level, digits);
    {
        let cache = GRID_CACHE.read().unwrap();
        if let Some(g) = cache.get(&key) {
            return g.clone();
        }
    }
    let prec = bits_for(digits);
    let nodes = quad::level_nodes(digits, level);
    let grid: Vec<Float> = nodes
        .nodes
        .iter()
        .map(|node| poly_factor(prec, n, code, &node.point))
        .collect();
    let arc = Arc::new(grid);
    GRID_CACHE.write().unwrap().insert(key, arc.clone());
    arc
}

/// kernel grids: ln(1-x), ln x, ln(1+x), ln(1+x^2), atan x
static KERNEL_CACHE: Lazy<RwLock<HashMap<(u8, u32, u32), Arc<Vec<Float>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn kernel_grid(digits: u32, level: u32, which: u8) -> Arc<Vec<Float>> {
    let key = (which, level, digits);
    {
        let cache = KERNEL_CACHE.read().unwrap();
        if let Some(g) = cache.get(&key) {
            return g.clone();
        }
    }
    let prec = bits_for(digits);
    let nodes = quad::level_nodes(digits, level);
    let grid: Vec<Float> = nodes
        .nodes
        .iter()
        .map(|node| {
            let d = &node.point;
            match which {
                0 => d.ln_omx(),
                1 => d.ln_x(),
                2 => d.x.clone().ln_1p(),
                3 => Float::with_val(prec, &d.x * &d.x).ln_1p(),
                4 => d.x.clone().atan(),
                _ => unreachable!(),
            }
        })
        .collect();
    let arc = Arc::new(grid);
    KERNEL_CACHE.write().unwrap().insert(key, arc.clone());
    arc
}

struct IntegrandSpec {
    /// exponents of ln(1-x), ln x, ln(1+x), ln(1+x^2), atan x
    kernel_pows: [u32; 5],
    /// (n, code) polylog factors
    polylogs: Vec<(u32, u8)>,
    /// denominator: 0 -> 1-x, 1 -> x, 2 -> 1+x, 3 -> 1+x^2, 4 -> (1+x^2)/x
    denom: u8,
}

fn integrand_spec(idx: &Index) -> Option<IntegrandSpec> {
    Some(match idx {
        Index::Li(i) => IntegrandSpec {
            kernel_pows: [i.a[0], i.a[1], i.a[2], 0, 0],
            polylogs: vec![],
            denom: i.p,
        },
        Index::Pli(i) => IntegrandSpec {
            kernel_pows: [i.a[0], i.a[1], i.a[2], 0, 0],
            polylogs: i.polylogs.iter().map(|&(n, k)| (n as u32, k)).collect(),
            denom: i.p,
        },
        Index::Qli(i) => IntegrandSpec {
            kernel_pows: i.a,
            polylogs: vec![],
            denom: i.p - 1,
        },
        Index::Qpli(q) => match *q {
            QpliIndex::W3 { arg, p } => IntegrandSpec {
                kernel_pows: [0; 5],
                polylogs: vec![(2, arg)],
                denom: p - 1,
            },
            QpliIndex::W4Poly { arg, p } => IntegrandSpec {
                kernel_pows: [0; 5],
                polylogs: vec![(3, arg)],
                denom: p - 1,
            },
            QpliIndex::W4Mixed { arg, log, p } => {
                let mut kp = [0u32; 5];
                kp[(log - 1) as usize] = 1;
                IntegrandSpec {
                    kernel_pows: kp,
                    polylogs: vec![(2, arg)],
                    denom: p - 1,
                }
            }
        },
        _ => return None,
    })
}

/// Tanh-sinh evaluation of an integral-family index.
pub fn quad_eval(idx: &Index, digits: u32) -> Result<NumericValue, EvalError> {
    if !idx.is_convergent() {
        return Err(EvalError::NonConvergent(idx.to_string()));
    }
    let spec = integrand_spec(idx).ok_or_else(|| EvalError::Unsupported(idx.to_string()))?;
    let prec = bits_for(digits);
    let result = quad::integrate_with_grids(digits, |level| {
        let nodes = quad::level_nodes(digits, level);
        let mut values: Vec<Float> = nodes
            .nodes
            .iter()
            .map(|_| Float::with_val(prec, 1))
            .collect();
        for (which, &e) in spec.kernel_pows.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let grid = kernel_grid(digits, level, which as u8);
            for (v, g) in values.iter_mut().zip(grid.iter()) {
                *v *= g.clone().pow(e);
            }
        }
        for &(n, code) in &spec.polylogs {
            let grid = poly_grid(digits, level, n, code);
            for (v, g) in values.iter_mut().zip(grid.iter()) {
                *v *= g;
            }
        }
        for (v, node) in values.iter_mut().zip(nodes.nodes.iter()) {
            let d = &node.point;
            match spec.denom {
                0 => *v /= &d.omx,
                1 => *v /= &d.x,
                2 => *v /= Float::with_val(prec, 1 + &d.x),
                3 => *v /= Float::with_val(prec, 1 + Float::with_val(prec, &d.x * &d.x)),
                4 => {
                    *v *= &d.x;
                    *v /= Float::with_val(prec, 1 + Float::with_val(prec, &d.x * &d.x));
                }
                _ => unreachable!(),
            }
        }
        values
    });
    let ed = err_digits(&result.error);
    if ed < digits {
        return Err(EvalError::PrecisionExhausted(idx.to_string()));
    }
    Ok(NumericValue {
        value: result.value,
        err_digits: ed.min(digits + mpf::GUARD_DIGITS / 2),
    })
}

// ---------------------------------------------------------------------------
// sums
// ---------------------------------------------------------------------------

fn sum_spec(idx: &Index) -> Option<series::SumSpec> {
    use series::{HFactor, SumSpec, SumWeight};
    Some(match idx {
        Index::Es(e) => SumSpec {
            factors: e
                .plain
                .iter()
                .map(|&k| HFactor::H(k))
                .chain(e.tilde.iter().map(|&k| HFactor::HTilde(k)))
                .collect(),
            outer_neg: e.outer_neg,
            p: e.p,
            shifted: false,
            weight: SumWeight::None,
        },
        Index::Qes(q) => SumSpec {
            factors: q
                .terms
                .iter()
                .map(|&(m, k)| match m {
                    1 => HFactor::H(k),
                    2 => HFactor::HTilde(k),
                    _ => HFactor::H2(k),
                })
                .collect(),
            outer_neg: q.outer_neg,
            p: q.p,
            shifted: q.shifted,
            weight: SumWeight::None,
        },
        Index::Aux(a) => SumSpec {
            factors: a.a.iter().map(|&k| HFactor::H(k)).collect(),
            outer_neg: false,
            p: a.p,
            shifted: false,
            weight: match a.kind {
                AuxKind::Ges => SumWeight::Geometric,
                AuxKind::Bes => SumWeight::Binom,
                AuxKind::Ibes => SumWeight::InvBinom,
                AuxKind::Qbes { .. } => SumWeight::BinomSq,
                AuxKind::Iqbes => SumWeight::InvBinomSq,
            },
        },
        _ => return None,
    })
}

/// Series evaluation of a sum-family index.
pub fn sum_eval(idx: &Index, digits: u32) -> Result<NumericValue, EvalError> {
    if !idx.is_convergent() {
        return Err(EvalError::NonConvergent(idx.to_string()));
    }
    let spec = sum_spec(idx).ok_or_else(|| EvalError::Unsupported(idx.to_string()))?;
    let r = series::sum_eval_spec(&spec, digits);
    let mut value = r.value;
    if let Index::Aux(a) = idx {
        if matches!(a.kind, AuxKind::Qbes { pi_scaled: true }) {
            let prec = value.prec();
            value *= Float::with_val(prec, rug::float::Constant::Pi);
        }
    }
    let ed = err_digits(&r.error);
    if ed < digits {
        return Err(EvalError::PrecisionExhausted(idx.to_string()));
    }
    Ok(NumericValue {
        value,
        err_digits: ed.min(digits + mpf::GUARD_DIGITS / 2),
    })
}

/// Scattered named constants (corpus extras).
pub fn extra_eval(name: &str, digits: u32) -> Result<NumericValue, EvalError> {
    let prec = bits_for(digits);
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    match name {
        // Re Li4((1+i)/2)
        "reli4b" => {
            let v = li_complex_series(prec, 4, &half_complex(prec));
            Ok(NumericValue {
                value: v.real().clone(),
                err_digits: digits + mpf::GUARD_DIGITS / 2,
            })
        }
        // Re Li4(1+i) via inversion from Li4((1-i)/2) = conj Li4((1+i)/2)
        "reli4a" => {
            let b = li_complex_series(prec, 4, &half_complex(prec));
            // L = ln(-(1+i)) = ln sqrt2 - 3 pi i/4
            let l = Complex::with_val(
                prec,
                (
                    Float::with_val(prec, rug::float::Constant::Log2) / 2,
                    -Float::with_val(prec, 3 * pi.clone()) / 4,
                ),
            );
            let l2c = l.clone() * &l;
            let l4c = l2c.clone() * &l2c;
            let pi4 = pi.clone().pow(4u32);
            let re = -Float::with_val(prec, 7 * pi4) / 360
                - Float::with_val(prec, &pi * &pi) * l2c.real() / 12
                - l4c.real().clone() / 24
                - b.real();
            Ok(NumericValue {
                value: re,
                err_digits: digits + mpf::GUARD_DIGITS / 2,
            })
        }
        _ => Err(EvalError::Unsupported(format!("CONST({name})"))),
    }
}

/// Evaluate any index numerically, dispatching on the family.
pub fn eval_index(idx: &Index, digits: u32) -> Result<NumericValue, EvalError> {
    match idx {
        Index::Li(_) | Index::Pli(_) | Index::Qli(_) | Index::Qpli(_) => quad_eval(idx, digits),
        Index::Es(_) | Index::Qes(_) | Index::Aux(_) => sum_eval(idx, digits),
        Index::Extra(name) => extra_eval(name, digits),
    }
}

// ---------------------------------------------------------------------------
// detection
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct DetectionResult {
    pub coeffs: Vec<(Monomial, Rational)>,
    pub residual: Float,
    pub confirmed_at_digits: u32,
}

/// Lattice-based recognition of `v` as a rational combination of the given
/// monomials. Returns None when no relation exists within the height bound.
pub fn detect_relation(
    v: &NumericValue,
    monomials: &[Monomial],
    digits: u32,
) -> Option<DetectionResult> {
    let prec = bits_for(digits);
    let mut xs = Vec::with_capacity(monomials.len() + 1);
    xs.push(Float::with_val(prec, &v.value));
    for m in monomials {
        xs.push(eval_monomial(m, digits));
    }
    let ints = pslq::pslq(&xs, prec, &pslq::PslqOptions::default())?;
    if ints[0] == 0 {
        return None;
    }
    // re-verify at higher precision on the monomial side
    let hi = digits + 20;
    let hprec = bits_for(hi);
    let mut resid = Float::with_val(hprec, &v.value) * Float::with_val(hprec, &ints[0]);
    for (m, q) in monomials.iter().zip(ints.iter().skip(1)) {
        resid += eval_monomial(m, hi) * Float::with_val(hprec, q);
    }
    let resid = resid.abs() / Float::with_val(hprec, &ints[0]).abs();
    let confirmed = err_digits(&resid);
    // the spec-level invariant: residual below 10^-(digits-5)
    if resid > pow10_neg(hprec, v.err_digits.min(digits) as i64 - 5) {
        return None;
    }
    let q0 = ints[0].clone();
    let coeffs = monomials
        .iter()
        .zip(ints.iter().skip(1))
        .filter(|(_, q)| **q != 0)
        .map(|(m, q)| {
            (
                m.clone(),
                -Rational::from((q.clone(), q0.clone())),
            )
        })
        .collect();
    Some(DetectionResult {
        coeffs,
        residual: resid,
        confirmed_at_digits: confirmed,
    })
}

/// Height bound used by detection, exposed for tests.
pub fn detection_height_bound() -> Integer {
    pslq::PslqOptions::default().max_coeff
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{fibonacci_basis, li_half, rat};

    fn close_digits(a: &Float, b: &Float, digits: i64) -> bool {
        let prec = a.prec();
        Float::with_val(prec, a - b).abs() < pow10_neg(prec, digits)
    }

    #[test]
    fn atoms_satisfy_connection_identities() {
        let digits = 60;
        let prec = bits_for(digits);
        // Li2(1/2) = pi^2/12 - log^2 2/2
        let got = eval_vector(&li_half(2), digits).value;
        let pi = eval_atom(Atom::Pi, digits).value;
        let l2 = eval_atom(Atom::Log2, digits).value;
        let want = pi.clone() * &pi / 12 - l2.clone() * &l2 / 2;
        assert!(close_digits(&got, &want, digits as i64 - 2));
        // log2 reference digits (independently computed reference value)
        let reference = Float::with_val(
            prec,
            Float::parse("0.69314718055994530941723212145817656807550013436026").unwrap(),
        );
        let l2v = eval_atom(Atom::Log2, 50).value;
        let diff = Float::with_val(prec, &l2v - &reference).abs();
        assert!(diff < pow10_neg(prec, 50));
    }

    #[test]
    fn prop9_values_cross_check() {
        // Re Li4(1+i) = -5 Li4(1/2)/16 + 97 pi^4/9216 - 5 log^4 2/384
        //              + pi^2 log^2 2/48
        let digits = 55;
        let got = extra_eval("reli4a", digits).unwrap().value;
        let mut v = BasisVector::zero();
        v.add_term(Monomial::atom(Atom::LiHalf(4)), rat(-5, 16));
        v.add_term(Monomial::power(Atom::Pi, 4), rat(97, 9216));
        v.add_term(Monomial::power(Atom::Log2, 4), rat(-5, 384));
        v.add_term(
            Monomial::power(Atom::Pi, 2).mul(&Monomial::power(Atom::Log2, 2)),
            rat(1, 48),
        );
        let want = eval_vector(&v, digits).value;
        assert!(close_digits(&got, &want, digits as i64 - 3));
    }

    #[test]
    fn li_weight2_values() {
        // LI(0,1,0;0) = -pi^2/6
        let digits = 45;
        let idx = Index::parse("LI(0,1,0;0)").unwrap();
        let got = quad_eval(&idx, digits).unwrap().value;
        let pi = eval_atom(Atom::Pi, digits).value;
        let want = -(pi.clone() * &pi) / 6;
        assert!(close_digits(&got, &want, 43));
        // LI(1,0,1;2) = zeta3/8 + log^3 2/3 - pi^2 log2/12
        let idx = Index::parse("LI(1,0,1;2)").unwrap();
        let got = quad_eval(&idx, digits).unwrap().value;
        let z3 = eval_atom(Atom::Zeta(3), digits).value;
        let l2 = eval_atom(Atom::Log2, digits).value;
        let want = z3 / 8 + l2.clone().pow(3u32) / 3 - pi.clone() * &pi * &l2 / 12;
        assert!(close_digits(&got, &want, 43));
    }

    #[test]
    fn qli_weight2_values() {
        let digits = 45;
        // QLI(4;2) = int log(1+x^2)/x = pi^2/24
        let idx = Index::parse("QLI(4;2)").unwrap();
        let got = quad_eval(&idx, digits).unwrap().value;
        let pi = eval_atom(Atom::Pi, digits).value;
        assert!(close_digits(&got, &(pi.clone() * &pi / 24), 43));
        // QLI(5;2) = int atan(x)/x = catalan
        let idx = Index::parse("QLI(5;2)").unwrap();
        let got = quad_eval(&idx, digits).unwrap().value;
        let c = eval_atom(Atom::Catalan, digits).value;
        assert!(close_digits(&got, &c, 43));
    }

    #[test]
    fn pli_weight3_value() {
        // PLI(000;21;1) = int Li2(x)/x = zeta(3)
        let digits = 45;
        let idx = Index::parse("PLI(000;21;1)").unwrap();
        let got = quad_eval(&idx, digits).unwrap().value;
        let z3 = eval_atom(Atom::Zeta(3), digits).value;
        assert!(close_digits(&got, &z3, 43));
    }

    #[test]
    fn sum_matches_quad_cross_representation() {
        // ES(1;2) = 2 zeta(3) = 2 * PLI(000;21;1)
        let digits = 40;
        let es = Index::parse("ES(1;2)").unwrap();
        let sv = sum_eval(&es, digits).unwrap().value;
        let pli = Index::parse("PLI(000;21;1)").unwrap();
        let qv = quad_eval(&pli, digits).unwrap().value;
        let prec = sv.prec();
        let qv2 = Float::with_val(prec, 2 * qv);
        assert!(close_digits(&sv, &qv2, 38));
    }

    #[test]
    fn detect_li_1_0_1_2() {
        let digits = 60;
        let idx = Index::parse("LI(1,0,1;2)").unwrap();
        let v = quad_eval(&idx, digits).unwrap();
        let basis = fibonacci_basis(3);
        let det = detect_relation(&v, &basis, digits).expect("detection");
        let want: Vec<Rational> = vec![rat(-1, 12), rat(1, 3), rat(1, 8)];
        let got: Vec<Rational> = basis
            .iter()
            .map(|m| {
                det.coeffs
                    .iter()
                    .find(|(mm, _)| mm == m)
                    .map(|(_, q)| q.clone())
                    .unwrap_or_else(|| Rational::new())
            })
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn detect_rejects_random() {
        let digits = 50;
        let prec = bits_for(digits);
        let _ = prec;
        // e is not in the span of A_3
        let v = NumericValue {
            value: Float::with_val(prec, 1).exp(),
            err_digits: digits,
        };
        assert!(detect_relation(&v, &fibonacci_basis(3), digits).is_none());
    }
}
