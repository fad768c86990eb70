//! Reduction of non-alternating quadratic Euler sums to ordinary alternating
//! Euler sums: write H_n = 2^{k-1}(H_{2n} - tilde H_{2n}) componentwise, view
//! the summand as a function of the even index, and extract the even part.

use rug::Rational;
use std::collections::BTreeMap;

use crate::constants::{eta, rat, zeta, BasisVector};
use crate::index::{EsIndex, Index, QesIndex};
use crate::linalg::Relation;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QesError {
    #[error("{0} is not a non-alternating quadratic Euler sum")]
    NotNonAlternating(String),
}

/// symbolic sum over m >= 1 of coef * (+-1)^(m-1) * prod factors(m) / m^p,
/// with factors H^(k)_m (plain) and tilde H^(k)_m (tilde)
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Shape {
    alt: bool,
    plain: Vec<u32>,
    tilde: Vec<u32>,
    p: u32,
}

type Expr = BTreeMap<Shape, Rational>;

fn add_term(e: &mut Expr, s: Shape, c: Rational) {
    if c == 0 {
        return;
    }
    let entry = e.entry(s).or_insert_with(Rational::new);
    *entry += c;
    if *entry == 0 {
        e.retain(|_, v| *v != 0);
    }
}

/// the even-index harmonic product of one QES as a list of
/// (coefficient, plain exponents, tilde exponents) evaluated at M = 2n
fn even_index_factors(q: &QesIndex) -> Vec<(Rational, Vec<u32>, Vec<u32>)> {
    // start with the constant 1
    let mut items: Vec<(Rational, Vec<u32>, Vec<u32>)> = vec![(rat(1, 1), vec![], vec![])];
    for &(m, k) in &q.terms {
        let mut next = Vec::new();
        for (c, plain, tilde) in &items {
            match m {
                3 => {
                    // H_{2n}^(k) stays
                    let mut p2 = plain.clone();
                    p2.push(k);
                    next.push((c.clone(), p2, tilde.clone()));
                }
                1 => {
                    // H_n^(k) = 2^(k-1)(H_{2n}^(k) - tilde H_{2n}^(k))
                    let scale = Rational::from(Rational::from(1) << (k - 1));
                    let mut p2 = plain.clone();
                    p2.push(k);
                    next.push((c.clone() * &scale, p2, tilde.clone()));
                    let mut t2 = tilde.clone();
                    t2.push(k);
                    next.push((-c.clone() * &scale, plain.clone(), t2));
                }
                _ => unreachable!("alternating factor in non-alternating sum"),
            }
        }
        items = next;
    }
    items
}

/// Decompose a non-alternating QES into ordinary Euler sums plus a rational
/// zeta/eta-valued residue. The output pairs use canonical ES indices.
pub fn qes_nonalt_decompose(
    q: &QesIndex,
) -> Result<(Vec<(Rational, EsIndex)>, BasisVector), QesError> {
    let idx = Index::Qes(q.clone());
    let nonalt = !q.outer_neg && q.terms.iter().all(|&(m, _)| m != 2);
    if !nonalt || q.terms.is_empty() {
        return Err(QesError::NotNonAlternating(idx.to_string()));
    }
    // Sum_n prod/den = Sum_{M even} g(M), with
    // g(M) = factors(M) * 2^p / M^p          (denominator n^p)
    // g(M) = factors(M) / (M+1)^p            (denominator (2n+1)^p)
    // and Sum_{M even >= 2} g = (Sum_M g - Sum_M (-1)^(M-1) g)/2.
    let mut expr: Expr = Expr::new();
    for (c, plain, tilde) in even_index_factors(q) {
        let scale = if q.shifted {
            c
        } else {
            c * Rational::from(Rational::from(1) << q.p)
        };
        for alt in [false, true] {
            let half = rat(1, 2) * &scale * if alt { rat(-1, 1) } else { rat(1, 1) };
            let mut plain = plain.clone();
            let mut tilde = tilde.clone();
            plain.sort_unstable();
            tilde.sort_unstable();
            add_term(
                &mut expr,
                Shape {
                    alt,
                    plain,
                    tilde,
                    p: q.p,
                },
                half,
            );
        }
    }
    // For the shifted denominator, terms are f(M)/(M+1)^p: reindex M' = M+1:
    // shift every harmonic factor down by one.
    let expr = if q.shifted {
        let mut out = Expr::new();
        for (s, c) in expr {
            // Sum_{M>=1} (+-1)^(M-1) f(M)/(M+1)^p
            //  = Sum_{M'>=2} (+-1)^(M') f(M'-1)/M'^p ... sign: (-1)^(M-1) =
            //    (-1)^(M'-2) = (-1)^(M'), i.e. for the alternating branch the
            //    sign flips relative to (M'-1)-convention:
            //    (+-1)^(M-1) = (+-1)^(M'-1) * (+-1)^(-1) -> alternating branch
            //    picks up a factor -1.
            let sign = if s.alt { -c.clone() } else { c.clone() };
            // expand f(M'-1): H^(k)_{M'-1} = H^(k)_{M'} - M'^-k and
            // tilde H^(k)_{M'-1} = tilde H^(k)_{M'} - (-1)^(M'-1) M'^-k
            expand_shifted(&mut out, &s, sign);
        }
        out
    } else {
        expr
    };
    // collect: genuine ES terms and pure values; for the shifted case the
    // reindexed sum starts at M' = 2, so subtract the M' = 1 term.
    let mut es_terms: Vec<(Rational, EsIndex)> = Vec::new();
    let mut residue = BasisVector::zero();
    for (s, c) in &expr {
        if s.plain.is_empty() && s.tilde.is_empty() {
            let v = if s.alt { eta(s.p) } else { zeta(s.p) };
            residue = residue.add(&v.scale(c));
        } else {
            es_terms.push((
                c.clone(),
                EsIndex {
                    plain: s.plain.clone(),
                    tilde: s.tilde.clone(),
                    outer_neg: s.alt,
                    p: s.p,
                },
            ));
        }
    }
    if q.shifted {
        // subtract the M' = 1 terms: every harmonic factor at 1 is
        // H^(k)_1 = tilde H^(k)_1 = 1, so the term value is just the
        // coefficient with sign (+1)^(M'-1) = 1
        for (s, c) in &expr {
            // at M' = 1 all factors are 1 and 1/M'^p = 1
            let _ = s;
            residue = residue.sub(&BasisVector::from_rational(c.clone()));
        }
    }
    es_terms.sort_by(|a, b| a.1.cmp(&b.1));
    Ok((es_terms, residue))
}

fn expand_shifted(out: &mut Expr, s: &Shape, c: Rational) {
    // recursively expand the factor list at M-1 into factors at M
    fn rec(
        out: &mut Expr,
        alt: bool,
        p: u32,
        plain_left: &[u32],
        tilde_left: &[u32],
        plain_acc: Vec<u32>,
        tilde_acc: Vec<u32>,
        extra_p: u32,
        parity_flips: u32,
        coef: Rational,
    ) {
        if let Some((&k, rest)) = plain_left.split_first() {
            // H_{M-1} = H_M - M^-k
            rec(
                out,
                alt,
                p,
                rest,
                tilde_left,
                {
                    let mut v = plain_acc.clone();
                    v.push(k);
                    v
                },
                tilde_acc.clone(),
                extra_p,
                parity_flips,
                coef.clone(),
            );
            rec(
                out,
                alt,
                p,
                rest,
                tilde_left,
                plain_acc,
                tilde_acc,
                extra_p + k,
                parity_flips,
                -coef,
            );
            return;
        }
        if let Some((&k, rest)) = tilde_left.split_first() {
            // tilde H_{M-1} = tilde H_M - (-1)^(M-1) M^-k
            rec(
                out,
                alt,
                p,
                &[],
                rest,
                plain_acc.clone(),
                {
                    let mut v = tilde_acc.clone();
                    v.push(k);
                    v
                },
                extra_p,
                parity_flips,
                coef.clone(),
            );
            rec(
                out,
                alt,
                p,
                &[],
                rest,
                plain_acc,
                tilde_acc,
                extra_p + k,
                parity_flips + 1,
                -coef,
            );
            return;
        }
        let mut plain = plain_acc;
        let mut tilde = tilde_acc;
        plain.sort_unstable();
        tilde.sort_unstable();
        let final_alt = alt ^ (parity_flips % 2 == 1);
        add_term(
            out,
            Shape {
                alt: final_alt,
                plain,
                tilde,
                p: p + extra_p,
            },
            coef,
        );
    }
    rec(
        out,
        s.alt,
        s.p,
        &s.plain,
        &s.tilde,
        vec![],
        vec![],
        0,
        0,
        c,
    );
}

/// Relations equating each non-alternating QES to its ES decomposition, with
/// the ES values taken from `solved` (typically the verified corpus); QESs
/// whose ES dependencies are unavailable are skipped.
pub fn qes_nonalt_relations(
    w: u32,
    es_values: &crate::forge::SolvedTable,
) -> Vec<Relation> {
    let mut out = Vec::new();
    for idx in crate::index::enumerate_nonalt_qes(w) {
        let q = match &idx {
            Index::Qes(q) => q,
            _ => continue,
        };
        if let Ok((terms, residue)) = qes_nonalt_decompose(q) {
            let mut rhs = residue;
            let mut ok = true;
            for (c, e) in &terms {
                let eidx = Index::Es(e.clone());
                match es_values.get(&eidx) {
                    Some(v) => rhs = rhs.add(&v.scale(c)),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let mut r = Relation::new(format!("qes.nonalt {}", idx));
                r.add_lhs(idx, Rational::from(1));
                r.add_rhs(&rhs);
                out.push(r);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qes(s: &str) -> QesIndex {
        match Index::parse(s).unwrap() {
            Index::Qes(q) => q,
            _ => panic!(),
        }
    }

    #[test]
    fn rejects_alternating_and_empty() {
        assert!(qes_nonalt_decompose(&qes("QES(31;-11)")).is_err());
        assert!(qes_nonalt_decompose(&qes("QES(21,31;21)")).is_err());
    }

    #[test]
    fn worked_example_decomposition_is_weight_homogeneous() {
        let (terms, residue) = qes_nonalt_decompose(&qes("QES(11,31,31;22)")).unwrap();
        assert!(!terms.is_empty());
        for (_, e) in &terms {
            let idx = Index::Es(e.clone());
            assert_eq!(idx.weight(), 5, "{idx}");
            assert!(idx.is_convergent(), "{idx}");
        }
        assert!(residue.homogeneous_weight().is_none() || residue.homogeneous_weight() == Some(5));
    }

    #[test]
    fn decomposition_matches_direct_summation() {
        // QES(31;21) = sum H_2n/n^2: decompose and evaluate both ways
        use crate::numeric::{eval_vector, sum_eval};
        let digits = 30;
        for s in ["QES(31;21)", "QES(31;22)", "QES(11,31;21)", "QES(32;22)"] {
            let q = qes(s);
            let (terms, residue) = qes_nonalt_decompose(&q).unwrap();
            let mut total = eval_vector(&residue, digits).value;
            for (c, e) in &terms {
                let v = sum_eval(&Index::Es(e.clone()), digits).unwrap().value;
                let prec = total.prec();
                total += rug::Float::with_val(prec, &v * rug::Float::with_val(prec, c));
            }
            let direct = sum_eval(&Index::parse(s).unwrap(), digits).unwrap().value;
            let prec = total.prec();
            let diff = rug::Float::with_val(prec, &total - &direct).abs();
            assert!(
                diff < crate::numeric::mpf::pow10_neg(prec, digits as i64 - 3),
                "{s}: decomposition {} direct {}",
                total.to_f64(),
                direct.to_f64()
            );
        }
    }
}
