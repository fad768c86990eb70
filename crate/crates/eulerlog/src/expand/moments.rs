//! Moment integrals int_0^1 x^(J-1) log^m(x) log^n(1-x) dx expressed in
//! harmonic terms of J, plus the alternating moment of log(1+x).

use rug::Rational;

use crate::constants::{rat, zeta, BasisVector};

/// A harmonic factor of the composite index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum HF {
    /// H^(k)
    Plain(u32),
    /// tilde H^(k)
    Tilde(u32),
}

/// coef * prod factors(J) * (-1)^((J-1) alt) / J^q
#[derive(Debug, Clone)]
pub struct MomentTerm {
    pub coef: BasisVector,
    pub factors: Vec<HF>,
    pub alt: bool,
    pub q: u32,
}

fn t(c: BasisVector, factors: Vec<HF>, q: u32) -> MomentTerm {
    MomentTerm {
        coef: c,
        factors,
        alt: false,
        q,
    }
}

fn r(n: i64, d: i64) -> BasisVector {
    BasisVector::from_rational(rat(n, d))
}

fn h(k: u32) -> HF {
    HF::Plain(k)
}

/// int_0^1 x^(J-1) log^m(x) log^n(1-x) dx for the supported patterns
/// (m + n <= 4). None when the pattern is outside the implemented family.
pub fn moment_log_pattern(m: u32, n: u32) -> Option<Vec<MomentTerm>> {
    let one = BasisVector::from_int(1);
    Some(match (m, n) {
        (k, 0) => {
            // (-1)^k k!/J^(k+1)
            let mut c = Rational::from(1);
            for i in 2..=k {
                c *= Rational::from(i);
            }
            if k % 2 == 1 {
                c = -c;
            }
            vec![t(BasisVector::from_rational(c), vec![], k + 1)]
        }
        (0, 1) => vec![t(r(-1, 1), vec![h(1)], 1)],
        (0, 2) => vec![
            t(one.clone(), vec![h(1), h(1)], 1),
            t(one.clone(), vec![h(2)], 1),
        ],
        (0, 3) => vec![
            t(r(-1, 1), vec![h(1), h(1), h(1)], 1),
            t(r(-3, 1), vec![h(1), h(2)], 1),
            t(r(-2, 1), vec![h(3)], 1),
        ],
        (0, 4) => vec![
            t(one.clone(), vec![h(1), h(1), h(1), h(1)], 1),
            t(r(6, 1), vec![h(1), h(1), h(2)], 1),
            t(r(3, 1), vec![h(2), h(2)], 1),
            t(r(8, 1), vec![h(1), h(3)], 1),
            t(r(6, 1), vec![h(4)], 1),
        ],
        (1, 1) => vec![
            t(one.clone(), vec![h(1)], 2),
            t(one.clone(), vec![h(2)], 1),
            t(zeta(2).neg(), vec![], 1),
        ],
        (2, 1) => vec![
            t(r(-2, 1), vec![h(1)], 3),
            t(r(-2, 1), vec![h(2)], 2),
            t(r(-2, 1), vec![h(3)], 1),
            t(zeta(2).scale(&rat(2, 1)), vec![], 2),
            t(zeta(3).scale(&rat(2, 1)), vec![], 1),
        ],
        (1, 2) => vec![
            t(r(-2, 1), vec![h(1), h(2)], 1),
            t(r(-1, 1), vec![h(1), h(1)], 2),
            t(zeta(2).scale(&rat(2, 1)), vec![h(1)], 1),
            t(r(-1, 1), vec![h(2)], 2),
            t(r(-2, 1), vec![h(3)], 1),
            t(zeta(3).scale(&rat(2, 1)), vec![], 1),
        ],
        (1, 3) => vec![
            t(r(3, 1), vec![h(1), h(2)], 2),
            t(r(3, 1), vec![h(1), h(1), h(2)], 1),
            t(r(6, 1), vec![h(1), h(3)], 1),
            t(one.clone(), vec![h(1), h(1), h(1)], 2),
            t(zeta(3).scale(&rat(-6, 1)), vec![h(1)], 1),
            t(zeta(2).scale(&rat(-3, 1)), vec![h(1), h(1)], 1),
            t(r(2, 1), vec![h(3)], 2),
            t(r(3, 1), vec![h(2), h(2)], 1),
            t(r(6, 1), vec![h(4)], 1),
            t(zeta(2).scale(&rat(-3, 1)), vec![h(2)], 1),
            t(zeta(4).scale(&rat(-6, 1)), vec![], 1),
        ],
        (2, 2) => vec![
            t(r(4, 1), vec![h(1), h(2)], 2),
            t(r(4, 1), vec![h(1), h(3)], 1),
            t(r(2, 1), vec![h(1), h(1)], 3),
            t(zeta(2).scale(&rat(-4, 1)), vec![h(1)], 2),
            t(zeta(3).scale(&rat(-4, 1)), vec![h(1)], 1),
            t(r(2, 1), vec![h(2)], 3),
            t(r(4, 1), vec![h(3)], 2),
            t(r(2, 1), vec![h(2), h(2)], 1),
            t(r(6, 1), vec![h(4)], 1),
            t(zeta(2).scale(&rat(-4, 1)), vec![h(2)], 1),
            t(zeta(3).scale(&rat(-4, 1)), vec![], 2),
            t(zeta(4).scale(&rat(-1, 1)), vec![], 1),
        ],
        (3, 1) => vec![
            t(r(6, 1), vec![h(1)], 4),
            t(r(6, 1), vec![h(2)], 3),
            t(r(6, 1), vec![h(3)], 2),
            t(r(6, 1), vec![h(4)], 1),
            t(zeta(2).scale(&rat(-6, 1)), vec![], 3),
            t(zeta(3).scale(&rat(-6, 1)), vec![], 2),
            t(zeta(4).scale(&rat(-6, 1)), vec![], 1),
        ],
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::mpf::{bits_for, pow10_neg};
    use crate::numeric::{eval_vector, quad};
    use rug::ops::Pow;
    use rug::Float;

    /// evaluate a moment-term list at a concrete J
    fn eval_terms(terms: &[MomentTerm], j: u64, digits: u32) -> Float {
        let prec = bits_for(digits);
        let mut hs = std::collections::BTreeMap::new();
        for kk in 1..=4u32 {
            let mut acc = Float::new(prec);
            let mut alt = Float::new(prec);
            for i in 1..=j {
                acc += Float::with_val(prec, 1) / Float::with_val(prec, i).pow(kk);
                let term = Float::with_val(prec, 1) / Float::with_val(prec, i).pow(kk);
                if i % 2 == 1 {
                    alt += term;
                } else {
                    alt -= term;
                }
            }
            hs.insert(HF::Plain(kk), acc);
            hs.insert(HF::Tilde(kk), alt);
        }
        let mut out = Float::new(prec);
        for t in terms {
            let mut v = eval_vector(&t.coef, digits).value;
            for f in &t.factors {
                v *= &hs[f];
            }
            v /= Float::with_val(prec, j).pow(t.q);
            if t.alt && j % 2 == 0 {
                v = -v;
            }
            out += v;
        }
        out
    }

    #[test]
    fn moments_match_quadrature() {
        let digits = 35;
        let prec = bits_for(digits);
        for (m, n) in [
            (0u32, 1u32),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 0),
            (2, 0),
            (1, 1),
            (2, 1),
            (1, 2),
            (1, 3),
            (2, 2),
            (3, 1),
        ] {
            let terms = moment_log_pattern(m, n).unwrap();
            for j in [1u64, 2, 5] {
                let want = eval_terms(&terms, j, digits);
                let got = quad::integrate(digits, |d| {
                    let p = d.x.prec();
                    let mut v = d.x.clone().pow(Float::with_val(p, j as i64 - 1));
                    if m > 0 {
                        v *= d.ln_x().pow(m);
                    }
                    if n > 0 {
                        v *= d.ln_omx().pow(n);
                    }
                    v
                });
                let diff = Float::with_val(prec, &got.value - &want).abs();
                assert!(
                    diff < pow10_neg(prec, digits as i64 - 5),
                    "moment ({m},{n}) at J={j}: got {} want {}",
                    got.value.to_f64(),
                    want.to_f64()
                );
            }
        }
    }
}
