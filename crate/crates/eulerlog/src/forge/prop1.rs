//! Direct closed-form formulas for log integrals: each instance yields a
//! single-unknown relation.

use rug::Rational;

use crate::constants::{li_half, rat, zeta, Atom, BasisVector, Monomial};
use crate::index::{Index, LiIndex};
use crate::linalg::Relation;

fn li(a0: u32, a1: u32, a2: u32, p: u8) -> Index {
    Index::Li(LiIndex { a: [a0, a1, a2], p })
}

fn fact(n: u32) -> Rational {
    let mut f = Rational::from(1);
    for k in 2..=n {
        f *= Rational::from(k);
    }
    f
}

fn sign(n: u32) -> Rational {
    if n % 2 == 0 {
        Rational::from(1)
    } else {
        Rational::from(-1)
    }
}

fn log2_pow(e: u32) -> BasisVector {
    BasisVector::monomial(Monomial::power(Atom::Log2, e))
}

/// 1 - 2^(-e) as a rational
fn one_minus_pow2(e: i64) -> Rational {
    let mut q = Rational::from(1);
    let mut p = Rational::from(1);
    if e >= 0 {
        p /= Rational::from(1) << e as u32;
    } else {
        p *= Rational::from(1) << (-e) as u32;
    }
    q -= p;
    q
}

fn single(idx: Index, value: BasisVector, tag: String) -> Relation {
    let mut r = Relation::new(tag);
    r.add_lhs(idx, Rational::from(1));
    r.add_rhs(&value);
    r
}

/// All closed forms with weight <= wmax from the general formula family.
pub fn prop1_closed_forms(wmax: u32) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut push = |idx: Index, v: BasisVector, tag: String| {
        if idx.weight() <= wmax && idx.is_convergent() {
            out.push(single(idx, v, tag));
        }
    };

    for n in 0..wmax {
        // (2) LI(0,0,n;2) = log^{n+1}(2)/(n+1)
        push(
            li(0, 0, n, 2),
            log2_pow(n + 1).scale(&rat(1, (n + 1) as i64)),
            format!("prop1.2 n={n}"),
        );
        if n >= 1 {
            // (3) LI(0,n,0;0) = LI(n,0,0;1) = (-1)^n n! zeta(n+1)
            let v = zeta(n + 1).scale(&(sign(n) * fact(n)));
            push(li(0, n, 0, 0), v.clone(), format!("prop1.3a n={n}"));
            push(li(n, 0, 0, 1), v, format!("prop1.3b n={n}"));
            // (4) LI(0,n,0;2) = (1-2^-n)(-1)^n n! zeta(n+1)
            let v = zeta(n + 1).scale(&(one_minus_pow2(n as i64) * sign(n) * fact(n)));
            push(li(0, n, 0, 2), v, format!("prop1.4 n={n}"));
            // (5) LI(n,0,0;2) = (-1)^n n! Li_{n+1}(1/2)
            let v = li_half(n + 1).scale(&(sign(n) * fact(n)));
            push(li(n, 0, 0, 2), v, format!("prop1.5 n={n}"));
            // (8) LI(0,0,n;1)
            let mut v = BasisVector::zero();
            for k in 0..n {
                let c = -fact(n) / fact(k);
                v = v.add(&li_half(n + 1 - k).mul(&log2_pow(k)).scale(&c));
            }
            v = v.add(&zeta(n + 1).scale(&fact(n)));
            v = v.add(&log2_pow(n + 1).scale(&rat(-(n as i64), (n + 1) as i64)));
            push(li(0, 0, n, 1), v, format!("prop1.8 n={n}"));
        }
        // (6) LI(1,n,0;1) = LI(n,1,0;0) = (-1)^{n-1} n! zeta(n+2)
        let v = zeta(n + 2).scale(&(-sign(n) * fact(n)));
        push(li(1, n, 0, 1), v.clone(), format!("prop1.6a n={n}"));
        push(li(n, 1, 0, 0), v, format!("prop1.6b n={n}"));
        // (7) LI(0,n,1;1) = (1-2^{-(n+1)})(-1)^n n! zeta(n+2)
        let v = zeta(n + 2).scale(&(one_minus_pow2(n as i64 + 1) * sign(n) * fact(n)));
        push(li(0, n, 1, 1), v, format!("prop1.7 n={n}"));
        // (9) LI(0,1,n;2)
        let mut v = BasisVector::zero();
        for k in 0..=n {
            let c = fact(n) / fact(k);
            v = v.add(&li_half(n + 2 - k).mul(&log2_pow(k)).scale(&c));
        }
        v = v.sub(&zeta(n + 2).scale(&fact(n)));
        v = v.add(&log2_pow(n + 2).scale(&rat(1, (n + 2) as i64)));
        push(li(0, 1, n, 2), v, format!("prop1.9 n={n}"));
        // (10) LI(1,0,n;2)
        let mut v = BasisVector::zero();
        for k in 2..=(n + 2) {
            let c = fact(n) * -sign(k) / fact(n + 2 - k);
            v = v.add(&zeta(k).mul(&log2_pow(n + 2 - k)).scale(&c));
        }
        v = v.add(&li_half(n + 2).scale(&(sign(n) * fact(n))));
        v = v.add(&log2_pow(n + 2).scale(&rat(1, (n + 1) as i64)));
        push(li(1, 0, n, 2), v, format!("prop1.10 n={n}"));
        if n >= 1 {
            // (11) LI(1,n,0;0) = LI(n,1,0;1)
            let mut inner = zeta(n + 2).scale(&rat((n + 1) as i64, 1));
            for k in 2..=n {
                inner = inner.sub(&zeta(k).mul(&zeta(n + 2 - k)));
            }
            let v = inner.scale(&(-sign(n) * fact(n) / Rational::from(2)));
            push(li(1, n, 0, 0), v.clone(), format!("prop1.11a n={n}"));
            push(li(n, 1, 0, 1), v, format!("prop1.11b n={n}"));
            // (12) LI(0,n,1;0)
            let mut v = BasisVector::zero();
            for k in 2..=n {
                let c = one_minus_pow2(k as i64 - 1) * one_minus_pow2(n as i64 + 1 - k as i64);
                v = v.add(&zeta(k).mul(&zeta(n + 2 - k)).scale(&c));
            }
            v = v.scale(&(sign(n) / Rational::from(2) * fact(n)));
            let mut tail = zeta(n + 2).scale(&rat((n + 1) as i64, 2));
            tail = tail.sub(
                &zeta(n + 1)
                    .mul(&log2_pow(1))
                    .scale(&(Rational::from(2) * one_minus_pow2(n as i64 + 1))),
            );
            v = v.sub(&tail.scale(&(sign(n) * fact(n))));
            push(li(0, n, 1, 0), v, format!("prop1.12 n={n}"));
        }
        // (15) LI(2,n,0;1) = (-1)^n n! ((n+2) zeta(n+3) - sum_{k=2}^{n+1} zeta(k) zeta(n+3-k))
        let mut inner = zeta(n + 3).scale(&rat((n + 2) as i64, 1));
        for k in 2..=(n + 1) {
            inner = inner.sub(&zeta(k).mul(&zeta(n + 3 - k)));
        }
        push(
            li(2, n, 0, 1),
            inner.scale(&(sign(n) * fact(n))),
            format!("prop1.15 n={n}"),
        );
        // (16) LI(0,2n,2;1)
        {
            let two_n = 2 * n;
            let mut v = BasisVector::zero();
            for k in 1..=n {
                let c = one_minus_pow2(2 * k as i64 - 1);
                v = v.add(&zeta(2 * k).mul(&zeta(two_n + 3 - 2 * k)).scale(&c));
            }
            v = v.scale(&(Rational::from(2) * fact(two_n)));
            let mut tail = zeta(two_n + 3)
                .scale(&(one_minus_pow2(two_n as i64 + 2) * Rational::from(n)));
            tail = tail.sub(&zeta(two_n + 3).scale(&{
                let mut q = Rational::from(1);
                q /= Rational::from(1) << (two_n + 3);
                q
            }));
            v = v.sub(&tail.scale(&(Rational::from(2) * fact(two_n))));
            push(li(0, two_n, 2, 1), v, format!("prop1.16 n={n}"));
        }
        // (17) LI(1,2n,1;1)
        {
            let two_n = 2 * n;
            let mut v = BasisVector::zero();
            for k in 1..=n {
                let c = one_minus_pow2(2 * k as i64 - 2 * n as i64 - 2);
                v = v.add(&zeta(2 * k).mul(&zeta(two_n + 3 - 2 * k)).scale(&c));
            }
            let mut half_pow = Rational::from(1);
            half_pow /= Rational::from(1) << (two_n + 1);
            v = v.scale(&(-half_pow * fact(two_n)));
            let mut c = Rational::from((2 * two_n as i64 + 6, 1));
            c /= Rational::from(1) << (two_n + 4);
            c -= 1;
            v = v.add(&zeta(two_n + 3).scale(&(c * fact(two_n))));
            push(li(1, two_n, 1, 1), v, format!("prop1.17 n={n}"));
        }
    }
    // (13) LI(0,2n-1,1;2), (14) LI(1,2n-1,0;2) for n >= 1
    for n in 1..=(wmax / 2) {
        let m = 2 * n - 1; // the log(x) exponent
        // (13)
        let mut v = BasisVector::zero();
        for k in 1..n {
            let c = one_minus_pow2(2 * k as i64 - 1);
            v = v.add(&zeta(2 * k).mul(&zeta(2 * n + 1 - 2 * k)).scale(&c));
        }
        v = v.scale(&-fact(m));
        let mut inner = {
            let mut q = Rational::from(1);
            q /= Rational::from(1) << (2 * n + 1);
            zeta(2 * n + 1).scale(&q)
        };
        inner = inner.sub(
            &zeta(2 * n + 1).scale(&(one_minus_pow2(2 * n as i64) * Rational::from(n as i64 - 1))),
        );
        v = v.sub(&inner.scale(&fact(m)));
        let idx13 = li(0, m, 1, 2);
        if idx13.weight() <= wmax {
            out.push(single(idx13, v, format!("prop1.13 n={n}")));
        }
        // (14)
        let mut v = BasisVector::zero();
        for k in 1..n {
            let c = one_minus_pow2(2 * n as i64 - 2 * k as i64);
            v = v.add(&zeta(2 * k).mul(&zeta(2 * n + 1 - 2 * k)).scale(&c));
        }
        v = v.scale(&-fact(m));
        let mut c = one_minus_pow2(2 * n as i64) * Rational::from(n + 1);
        {
            let mut q = Rational::from(1);
            q /= Rational::from(1) << (2 * n + 1);
            c += q;
        }
        let mut tail = zeta(2 * n + 1).scale(&c);
        tail = tail.sub(
            &zeta(2 * n)
                .mul(&log2_pow(1))
                .scale(&(Rational::from(2) * one_minus_pow2(2 * n as i64))),
        );
        v = v.add(&tail.scale(&fact(m)));
        let idx14 = li(1, m, 0, 2);
        if idx14.weight() <= wmax {
            out.push(single(idx14, v, format!("prop1.14 n={n}")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_weight2_completely() {
        let rels = prop1_closed_forms(2);
        let mut solved: Vec<String> = rels
            .iter()
            .filter(|r| r.lhs.keys().next().unwrap().weight() == 2)
            .map(|r| r.lhs.keys().next().unwrap().to_string())
            .collect();
        solved.sort();
        solved.dedup();
        assert_eq!(solved.len(), 6, "{solved:?}");
    }

    #[test]
    fn sample_values_match_expectations() {
        let rels = prop1_closed_forms(4);
        let find = |s: &str| {
            let idx = Index::parse(s).unwrap();
            rels.iter()
                .find(|r| r.lhs.contains_key(&idx))
                .unwrap_or_else(|| panic!("no relation for {s}"))
                .rhs
                .clone()
        };
        // LI(0,2,0;0) = 2 zeta(3)
        assert_eq!(find("LI(0,2,0;0)"), zeta(3).scale(&rat(2, 1)));
        // LI(0,0,3;2) = log^4(2)/4
        assert_eq!(find("LI(0,0,3;2)"), log2_pow(4).scale(&rat(1, 4)));
        // LI(2,0,0;2) = 2 Li_3(1/2) full-simplified
        let mut want = zeta(3).scale(&rat(7, 4));
        want.add_term(Monomial::power(Atom::Log2, 3), rat(1, 3));
        want.add_term(
            Monomial::power(Atom::Pi, 2).mul(&Monomial::atom(Atom::Log2)),
            rat(-1, 6),
        );
        assert_eq!(find("LI(2,0,0;2)"), want);
    }
}
