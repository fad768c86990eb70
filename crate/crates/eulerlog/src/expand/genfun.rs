//! Harmonic generating functions and polylog identities as evaluable closed
//! forms, with truncated-series oracles.
//!
//! Closed forms are stored as s-expressions over {x, pi, zeta(3), rationals,
//! log, Li_n} and evaluated in complex arithmetic with principal branches;
//! the identity tests compare the real part against a truncated series at
//! rational sample points.

use rug::{Complex, Float, Rational};

use crate::numeric::mpf::bits_for;
use crate::numeric::polylog::{li_complex_series, li_exp_complex, zeta_f};
use crate::numeric::NumericValue;

mod data {
    include!("genfun_data.rs");
}
pub use data::GENFUN_FORMULAS;

/// Polylog identity set: (name, lhs, rhs, sample points). All identities are
/// tested at every listed point to the working tolerance.
pub const POLYLOG_IDENTITIES: &[(&str, &str, &str, &[(i64, i64)])] = &[
    (
        "square_li2",
        "(+ (li 2 (neg x)) (li 2 x))",
        "(* 1/2 (li 2 (pow x 2)))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "square_li3",
        "(+ (li 3 (neg x)) (li 3 x))",
        "(* 1/4 (li 3 (pow x 2)))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "square_li4",
        "(+ (li 4 (neg x)) (li 4 x))",
        "(* 1/8 (li 4 (pow x 2)))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "euler_refl_li2",
        "(+ (li 2 (+ 1 (neg x))) (li 2 x))",
        "(+ (/ (pow pi 2) 6) (neg (* (log x) (log (+ 1 (neg x))))))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "landen_li2",
        "(+ (li 2 (/ x (+ x (neg 1)))) (li 2 x))",
        "(* -1/2 (pow (log (+ 1 (neg x))) 2))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "inversion_li2",
        "(+ (li 2 (neg (/ 1 x))) (li 2 (neg x)))",
        "(+ (neg (/ (pow pi 2) 6)) (* -1/2 (pow (log x) 2)))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "half_refl_li2",
        "(+ (li 2 (/ (+ 1 (neg x)) 2)) (li 2 (/ (+ 1 x) 2)))",
        "(+ (* (log 2) (log (+ 1 x))) (* (log 2) (log (+ 1 (neg x)))) (neg (* (log (+ 1 (neg x))) (log (+ 1 x)))) (/ (pow pi 2) 6) (neg (pow (log 2) 2)))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "half_landen_li2",
        "(+ (li 2 (/ (+ 1 (neg x)) 2)) (li 2 (/ (+ x (neg 1)) (+ x 1))))",
        "(+ (* -1/2 (pow (log (+ 1 x)) 2)) (* (log 2) (log (+ 1 x))) (* -1/2 (pow (log 2) 2)))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "inversion_li3",
        "(+ (li 3 (neg x)) (neg (li 3 (neg (/ 1 x)))))",
        "(+ (* -1/6 (pow (log x) 3)) (* -1/6 (pow pi 2) (log x)))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "landen_li3",
        "(+ (li 3 (/ x (+ x (neg 1)))) (li 3 (+ 1 (neg x))) (li 3 x))",
        "(+ (* 1/6 (pow (log (+ 1 (neg x))) 3)) (* -1/2 (log x) (pow (log (+ 1 (neg x))) 2)) (* 1/6 (pow pi 2) (log (+ 1 (neg x)))) (zeta 3))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
    (
        "half_landen_li3",
        "(+ (li 3 (/ (+ 1 (neg x)) 2)) (li 3 (/ (+ 1 x) 2)) (li 3 (/ (+ x (neg 1)) (+ x 1))))",
        "(+ (* 1/6 (pow (log (+ 1 x)) 3)) (* -1/2 (pow (log 2) 2) (log (+ 1 (neg x)))) (* -1/2 (pow (log (+ 1 x)) 2) (log (+ 1 (neg x)))) (* (+ (/ (pow pi 2) 6) (* -1/2 (pow (log 2) 2))) (log (+ 1 x))) (* (log 2) (log (+ 1 (neg x))) (log (+ 1 x))) (zeta 3) (* 1/3 (pow (log 2) 3)) (* -1/6 (pow pi 2) (log 2)))",
        &[(1, 3), (1, 2), (9, 10)],
    ),
];

// ---------------------------------------------------------------------------
// s-expression parsing and evaluation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum Sexpr {
    Num(Rational),
    X,
    Pi,
    Zeta(u32),
    Add(Vec<Sexpr>),
    Mul(Vec<Sexpr>),
    Div(Box<Sexpr>, Box<Sexpr>),
    Neg(Box<Sexpr>),
    Pow(Box<Sexpr>, i32),
    Log(Box<Sexpr>),
    Li(u32, Box<Sexpr>),
}

pub fn parse_sexpr(s: &str) -> Sexpr {
    let mut toks = Vec::new();
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | ')' => {
                if !cur.is_empty() {
                    toks.push(std::mem::take(&mut cur));
                }
                toks.push(c.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    toks.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        toks.push(cur);
    }
    let (e, rest) = parse_tokens(&toks);
    assert!(rest.is_empty(), "trailing tokens in s-expression");
    e
}

fn parse_tokens(toks: &[String]) -> (Sexpr, &[String]) {
    let (head, rest) = toks.split_first().expect("empty s-expression");
    if head != "(" {
        return (atom(head), rest);
    }
    let (op, mut rest) = rest.split_first().expect("empty list");
    let mut args = Vec::new();
    while rest.first().map(|t| t.as_str()) != Some(")") {
        let (e, r) = parse_tokens(rest);
        args.push(e);
        rest = r;
    }
    let rest = &rest[1..];
    let e = match op.as_str() {
        "+" => Sexpr::Add(args),
        "*" => Sexpr::Mul(args),
        "/" => {
            assert_eq!(args.len(), 2);
            let b = args.pop().unwrap();
            let a = args.pop().unwrap();
            Sexpr::Div(Box::new(a), Box::new(b))
        }
        "neg" => {
            assert_eq!(args.len(), 1);
            Sexpr::Neg(Box::new(args.pop().unwrap()))
        }
        "pow" => {
            assert_eq!(args.len(), 2);
            let k = match args.pop().unwrap() {
                Sexpr::Num(q) => q.numer().to_i32().unwrap(),
                _ => panic!("pow exponent must be a number"),
            };
            Sexpr::Pow(Box::new(args.pop().unwrap()), k)
        }
        "log" => {
            assert_eq!(args.len(), 1);
            Sexpr::Log(Box::new(args.pop().unwrap()))
        }
        "li" => {
            assert_eq!(args.len(), 2);
            let arg = args.pop().unwrap();
            let n = match args.pop().unwrap() {
                Sexpr::Num(q) => q.numer().to_u32().unwrap(),
                _ => panic!("li order must be a number"),
            };
            Sexpr::Li(n, Box::new(arg))
        }
        "zeta" => {
            assert_eq!(args.len(), 1);
            match args.pop().unwrap() {
                Sexpr::Num(q) => Sexpr::Zeta(q.numer().to_u32().unwrap()),
                _ => panic!("zeta argument must be a number"),
            }
        }
        _ => panic!("unknown operator {op}"),
    };
    (e, rest)
}

fn atom(t: &str) -> Sexpr {
    match t {
        "x" => Sexpr::X,
        "pi" => Sexpr::Pi,
        _ => {
            let q: Rational = t.parse().expect("bad numeric atom");
            Sexpr::Num(q)
        }
    }
}

/// Complex polylog at any point the formulas reach: defining series inside
/// |z| <= 5/8, logarithmic expansion elsewhere (valid while |ln z| < 2 pi).
pub fn li_complex(prec: u32, n: u32, z: &Complex) -> Option<Complex> {
    let mag = z.clone().abs().real().to_f64();
    if mag == 0.0 {
        return Some(Complex::new(prec));
    }
    if mag <= 0.625 {
        return Some(li_complex_series(prec, n, z));
    }
    let mu = z.clone().ln();
    let mu_mag = mu.clone().abs().real().to_f64();
    if mu_mag < 6.0 {
        return Some(li_exp_complex(prec, n, &mu));
    }
    None
}

/// Evaluate an s-expression at real rational x in complex arithmetic.
pub fn eval_sexpr(e: &Sexpr, x: &Rational, prec: u32) -> Option<Complex> {
    let c = |f: Float| Complex::with_val(prec, (f, Float::new(prec)));
    Some(match e {
        Sexpr::Num(q) => c(Float::with_val(prec, q)),
        Sexpr::X => c(Float::with_val(prec, x)),
        Sexpr::Pi => c(Float::with_val(prec, rug::float::Constant::Pi)),
        Sexpr::Zeta(n) => c(zeta_f(prec, *n)),
        Sexpr::Add(args) => {
            let mut acc = Complex::new(prec);
            for a in args {
                acc += eval_sexpr(a, x, prec)?;
            }
            acc
        }
        Sexpr::Mul(args) => {
            let mut acc = Complex::with_val(prec, (1, 0));
            for a in args {
                acc *= eval_sexpr(a, x, prec)?;
            }
            acc
        }
        Sexpr::Div(a, b) => {
            let d = eval_sexpr(b, x, prec)?;
            if d.clone().abs().real().is_zero() {
                return None;
            }
            eval_sexpr(a, x, prec)? / d
        }
        Sexpr::Neg(a) => -eval_sexpr(a, x, prec)?,
        Sexpr::Pow(a, k) => {
            let b = eval_sexpr(a, x, prec)?;
            let mut acc = Complex::with_val(prec, (1, 0));
            for _ in 0..k.unsigned_abs() {
                acc *= &b;
            }
            if *k < 0 {
                acc = acc.recip();
            }
            acc
        }
        Sexpr::Log(a) => {
            let v = eval_sexpr(a, x, prec)?;
            if v.clone().abs().real().is_zero() {
                return None;
            }
            v.ln()
        }
        Sexpr::Li(n, a) => {
            let v = eval_sexpr(a, x, prec)?;
            li_complex(prec, *n, &v)?
        }
    })
}

// ---------------------------------------------------------------------------
// series oracles
// ---------------------------------------------------------------------------

/// parse a generating-function id "gf(1,-1;2)" into (plain, tilde, p)
pub fn parse_gf_id(id: &str) -> Option<(Vec<u32>, Vec<u32>, u32)> {
    let inner = id.strip_prefix("gf(")?.strip_suffix(')')?;
    let (facs, p) = inner.split_once(';')?;
    let mut plain = Vec::new();
    let mut tilde = Vec::new();
    for t in facs.split(',') {
        let v: i64 = t.parse().ok()?;
        if v < 0 {
            tilde.push((-v) as u32);
        } else {
            plain.push(v as u32);
        }
    }
    Some((plain, tilde, p.parse().ok()?))
}

/// truncated sum of the generating function's defining series with running
/// harmonic numbers
pub fn series_oracle(id: &str, x: &Rational, digits: u32, terms: u32) -> Option<Float> {
    use rug::ops::Pow;
    let (plain, tilde, p) = parse_gf_id(id)?;
    let prec = bits_for(digits);
    let xf = Float::with_val(prec, x);
    let mut h = std::collections::BTreeMap::<u32, Float>::new();
    let mut ht = std::collections::BTreeMap::<u32, Float>::new();
    for &k in &plain {
        h.insert(k, Float::new(prec));
    }
    for &k in &tilde {
        ht.insert(k, Float::new(prec));
    }
    let mut xp = Float::with_val(prec, 1);
    let mut sum = Float::new(prec);
    for n in 1..=terms {
        xp *= &xf;
        for (k, v) in h.iter_mut() {
            *v += Float::with_val(prec, 1) / Float::with_val(prec, n).pow(*k);
        }
        for (k, v) in ht.iter_mut() {
            let t = Float::with_val(prec, 1) / Float::with_val(prec, n).pow(*k);
            if n % 2 == 1 {
                *v += t;
            } else {
                *v -= t;
            }
        }
        let mut term = xp.clone();
        for k in &plain {
            term *= &h[k];
        }
        for k in &tilde {
            term *= &ht[k];
        }
        if p > 0 {
            term /= Float::with_val(prec, n).pow(p);
        }
        sum += term;
    }
    Some(sum)
}

/// Evaluate the closed-form side of a generating function at a rational
/// point (its real part, in the principal-branch sense).
pub fn genfun_eval(id: &str, x: &Rational, digits: u32) -> Option<NumericValue> {
    let (_, formula, _) = GENFUN_FORMULAS.iter().find(|(k, _, _)| *k == id)?;
    let prec = bits_for(digits);
    let e = parse_sexpr(formula);
    let v = eval_sexpr(&e, x, prec)?;
    Some(NumericValue {
        value: v.real().clone(),
        err_digits: digits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::mpf::pow10_neg;

    #[test]
    fn all_generating_functions_match_series() {
        let digits = 30;
        let prec = bits_for(digits);
        for (id, _, points) in GENFUN_FORMULAS {
            assert!(points.len() >= 3, "{id}: need >= 3 sample points");
            for &(num, den) in points.iter() {
                let x = Rational::from((num, den));
                let closed = genfun_eval(id, &x, digits).expect(id).value;
                let series = series_oracle(id, &x, digits, 1400).unwrap();
                let diff = Float::with_val(prec, &closed - &series).abs();
                assert!(
                    diff < pow10_neg(prec, 25),
                    "{id} at {num}/{den}: closed {} series {} diff {:.3e}",
                    closed.to_f64(),
                    series.to_f64(),
                    diff.to_f64()
                );
            }
        }
    }

    #[test]
    fn genfun_vanishes_at_zero() {
        let v = genfun_eval("gf(1;1)", &Rational::new(), 30).unwrap();
        assert!(v.value.clone().abs() < pow10_neg(v.value.prec(), 25));
    }

    #[test]
    fn all_polylog_identities_hold() {
        let digits = 30;
        let prec = bits_for(digits);
        for (name, lhs, rhs, points) in POLYLOG_IDENTITIES {
            assert!(points.len() >= 3);
            let le = parse_sexpr(lhs);
            let re = parse_sexpr(rhs);
            for &(num, den) in points.iter() {
                let x = Rational::from((num, den));
                let lv = eval_sexpr(&le, &x, prec).expect(name);
                let rv = eval_sexpr(&re, &x, prec).expect(name);
                let diff = (lv - rv).abs().real().clone();
                assert!(
                    diff < pow10_neg(prec, 25),
                    "{name} at {num}/{den}: diff {:.3e}",
                    diff.to_f64()
                );
            }
        }
    }

    #[test]
    fn elementary_series_forms() {
        let digits = 30;
        let prec = bits_for(digits);
        let tol = pow10_neg(prec, 25);
        let points = [
            Rational::from((1, 3)),
            Rational::from((-1, 2)),
            Rational::from((7, 10)),
        ];
        type Cn = Box<dyn Fn(u32, &[Float], &[Float]) -> Float>;
        let cases: Vec<(&str, Cn)> = vec![
            (
                "(/ x (+ 1 (neg x)))",
                Box::new(|_n, _h, _ht| Float::with_val(128, 1)),
            ),
            (
                "(neg (log (+ 1 (neg x))))",
                Box::new(|n, _h, _ht| Float::with_val(128, Rational::from((1u32, n)))),
            ),
            (
                "(neg (/ (log (+ 1 (neg x))) (+ 1 (neg x))))",
                Box::new(|_n, h, _ht| h[1].clone()),
            ),
            (
                "(/ (log (+ 1 x)) (+ 1 (neg x)))",
                Box::new(|_n, _h, ht| ht[1].clone()),
            ),
            (
                "(pow (log (+ 1 (neg x))) 2)",
                Box::new(|n, h, _ht| {
                    (h[1].clone() / n
                        - Float::with_val(128, Rational::from((1u32, n * n))))
                        * 2u32
                }),
            ),
            (
                "(/ (li 2 x) (+ 1 (neg x)))",
                Box::new(|_n, h, _ht| h[2].clone()),
            ),
            (
                "(neg (/ (li 3 (neg x)) (+ 1 (neg x))))",
                Box::new(|_n, _h, ht| ht[3].clone()),
            ),
        ];
        for (formula, cn) in &cases {
            let e = parse_sexpr(formula);
            for x in &points {
                let closed = eval_sexpr(&e, x, prec).unwrap().real().clone();
                let xf = Float::with_val(prec, x);
                let mut xp = Float::with_val(prec, 1);
                let mut h = vec![Float::new(prec); 4];
                let mut ht = vec![Float::new(prec); 4];
                let mut sum = Float::new(prec);
                for n in 1..=1400u32 {
                    use rug::ops::Pow;
                    xp *= &xf;
                    for k in 1..=3usize {
                        let t = Float::with_val(prec, 1)
                            / Float::with_val(prec, n).pow(k as u32);
                        h[k] += &t;
                        if n % 2 == 1 {
                            ht[k] += t;
                        } else {
                            ht[k] -= t;
                        }
                    }
                    sum += cn(n, &h, &ht) * &xp;
                }
                let diff = Float::with_val(prec, &closed - &sum).abs();
                assert!(diff < tol, "{formula} at {x}: diff {:.3e}", diff.to_f64());
            }
        }
        // even-index identity:
        // log(1-x)log(1+x) = -sum (tildeH_{2n}/n + 1/(2n^2)) x^(2n)
        for x in &points {
            let e = parse_sexpr("(* (log (+ 1 (neg x))) (log (+ 1 x)))");
            let closed = eval_sexpr(&e, x, prec).unwrap().real().clone();
            let xf = Float::with_val(prec, x);
            let x2 = Float::with_val(prec, &xf * &xf);
            let mut x2p = Float::with_val(prec, 1);
            let mut ht = Float::new(prec);
            let mut sum = Float::new(prec);
            for n in 1..=700u32 {
                x2p *= &x2;
                ht += Float::with_val(prec, Rational::from((1u32, 2 * n - 1)));
                ht -= Float::with_val(prec, Rational::from((1u32, 2 * n)));
                let term = (ht.clone() / n
                    + Float::with_val(prec, Rational::from((1u32, 2 * n * n))))
                    * &x2p;
                sum -= term;
            }
            let diff = Float::with_val(prec, &closed - &sum).abs();
            assert!(diff < tol, "even-index identity at {x}");
        }
    }
}
