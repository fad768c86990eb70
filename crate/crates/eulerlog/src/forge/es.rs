//! Euler-sum relation generators: inclusion-exclusion decompositions of
//! zeta/eta products, Cauchy-product partial fractions, the log-power
//! (Stirling-polynomial) identities, and the classical linear/non-linear
//! reductions.

use rug::Rational;

use crate::constants::{eta, rat, zeta, BasisVector};
use crate::index::{EsIndex, Index};
use crate::linalg::Relation;

fn binom(n: u32, k: u32) -> Rational {
    let mut b = Rational::from(1);
    for t in 0..k {
        b = b * Rational::from(n - t) / Rational::from(t + 1);
    }
    b
}

/// Symbolic term c * sum_n (+-1)^(n-1) [prod H/Htilde factors](n) / n^p.
#[derive(Debug, Clone)]
struct Term {
    coef: Rational,
    alt: bool,
    plain: Vec<u32>,
    tilde: Vec<u32>,
    p: u32,
}

impl Term {
    fn index(&self) -> Index {
        let mut idx = Index::Es(EsIndex {
            plain: self.plain.clone(),
            tilde: self.tilde.clone(),
            outer_neg: self.alt,
            p: self.p,
        });
        idx.canonicalize();
        idx
    }

    fn is_value(&self) -> bool {
        self.plain.is_empty() && self.tilde.is_empty()
    }

    /// value when factor-free: zeta or eta
    fn value(&self) -> Option<BasisVector> {
        if !self.is_value() {
            return None;
        }
        Some(if self.alt {
            eta(self.p).scale(&self.coef)
        } else {
            if self.p < 2 {
                return None; // divergent
            }
            zeta(self.p).scale(&self.coef)
        })
    }
}

/// Build a relation `sum of terms = rhs_value`: genuine Euler sums go to the
/// lhs, factor-free terms are folded into the rhs. Returns None when any
/// constituent diverges.
fn relation_from_terms(
    provenance: String,
    terms: Vec<Term>,
    mut rhs: BasisVector,
) -> Option<Relation> {
    let mut r = Relation::new(provenance);
    for t in terms {
        if t.is_value() {
            rhs = rhs.sub(&t.value()?);
        } else {
            let idx = t.index();
            if !idx.is_convergent() {
                return None;
            }
            r.add_lhs(idx, t.coef.clone());
        }
    }
    r.add_rhs(&rhs);
    Some(r)
}

// ---------------------------------------------------------------------------
// inclusion-exclusion (symmetric) relations
// ---------------------------------------------------------------------------

/// Decompose a product of r zeta/eta series by conditioning on the set of
/// positions attaining the maximal summation index:
/// prod_i Z_i = sum_{U nonempty} (-1)^(|U|+1) ES(factors outside U; merged U).
pub fn es_symmetric_relations_weight(w: u32) -> Vec<Relation> {
    let mut out = Vec::new();
    // sorted multisets of (exponent, alternating) with sum of exponents = w
    fn series_multisets(w: u32, r: u32, min: (u32, bool)) -> Vec<Vec<(u32, bool)>> {
        if r == 0 {
            return if w == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for a in min.0..=w {
            for alt in [false, true] {
                if a == min.0 && !alt && min.1 {
                    continue; // keep (a, false) < (a, true) ordering
                }
                if a * r > w || w < a {
                    continue;
                }
                if w >= a {
                    for mut rest in series_multisets(w - a, r - 1, (a, alt)) {
                        let mut v = vec![(a, alt)];
                        v.append(&mut rest);
                        out.push(v);
                    }
                }
            }
        }
        out
    }
    for r in 2..=5u32 {
        for series in series_multisets(w, r, (1, false)) {
            if series.len() != r as usize {
                continue;
            }
            // skip divergent zeta(1) members
            if series.iter().any(|&(a, alt)| a == 1 && !alt) {
                continue;
            }
            // lhs product value
            let mut lhs_val = BasisVector::from_int(1);
            for &(a, alt) in &series {
                lhs_val = lhs_val.mul(&if alt { eta(a) } else { zeta(a) });
            }
            // subsets
            let n = series.len();
            let mut terms: Vec<Term> = Vec::new();
            for mask in 1u32..(1 << n) {
                let mut p = 0u32;
                let mut alts_in = 0u32;
                let mut plain = Vec::new();
                let mut tilde = Vec::new();
                for (i, &(a, alt)) in series.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        p += a;
                        alts_in += alt as u32;
                    } else if alt {
                        tilde.push(a);
                    } else {
                        plain.push(a);
                    }
                }
                let sign = if mask.count_ones() % 2 == 1 {
                    rat(1, 1)
                } else {
                    rat(-1, 1)
                };
                plain.sort_unstable();
                tilde.sort_unstable();
                terms.push(Term {
                    coef: sign,
                    alt: alts_in % 2 == 1,
                    plain,
                    tilde,
                    p,
                });
            }
            let tag = format!(
                "es.sym {:?}",
                series
                    .iter()
                    .map(|&(a, alt)| if alt { -(a as i64) } else { a as i64 })
                    .collect::<Vec<_>>()
            );
            if let Some(r) = relation_from_terms(tag, terms, lhs_val) {
                if !r.is_trivial() {
                    out.push(r);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// partial-fraction (Cauchy product) relations
// ---------------------------------------------------------------------------

/// Cauchy product of two zeta/eta series with the symmetric partial-fraction
/// split of 1/(k^b (n-k)^a).
pub fn es_partial_fraction_relations_weight(w: u32) -> Vec<Relation> {
    let mut out = Vec::new();
    for a in 1..w {
        let b = w - a;
        if a > b {
            continue;
        }
        for s1 in [false, true] {
            for s2 in [false, true] {
                if a == b && s1 && !s2 {
                    continue; // unordered pair
                }
                // s = true means the alternating series eta
                if (a == 1 && !s1) || (b == 1 && !s2) {
                    continue; // zeta(1)
                }
                let lhs_val = (if s1 { eta(a) } else { zeta(a) })
                    .mul(&if s2 { eta(b) } else { zeta(b) });
                let sigma_neg = s1 ^ s2; // sign weight on the inner index
                let mut terms: Vec<Term> = Vec::new();
                // group 1: outer sign s1^n, inner fractions 1/k^i, i = 1..=b
                // group 2: outer sign (s1 sigma)^n = s2^n, i = 1..=a
                for (group, top, other, souter) in
                    [(1u8, b, a, s1), (2u8, a, b, s2)]
                {
                    for i in 1..=top {
                        let c = binom(w - i - 1, other - 1);
                        // sum_n souter^n P^sigma_{n-1}(i) / n^(w-i)
                        // souter^n = souter * souter^(n-1)
                        let coef = if souter { -c.clone() } else { c.clone() };
                        // actually souter^n = (+1)^n if souter=false -> coef c
                        // if souter=true: (-1)^n = -(-1)^(n-1)
                        let outer_alt = souter;
                        // P_{n-1} = P_n - sigma^(n-1)/n^i
                        let mut plain = Vec::new();
                        let mut tilde = Vec::new();
                        if sigma_neg {
                            tilde.push(i);
                        } else {
                            plain.push(i);
                        }
                        terms.push(Term {
                            coef: coef.clone(),
                            alt: outer_alt,
                            plain,
                            tilde,
                            p: w - i,
                        });
                        // correction term: -sigma^(n-1) souter^n / n^w
                        let corr_alt = outer_alt ^ sigma_neg;
                        terms.push(Term {
                            coef: -coef,
                            alt: corr_alt,
                            plain: vec![],
                            tilde: vec![],
                            p: w,
                        });
                        let _ = group;
                    }
                }
                let tag = format!(
                    "es.pfrac ({}{};{}{})",
                    if s1 { "-" } else { "" },
                    a,
                    if s2 { "-" } else { "" },
                    b
                );
                if let Some(r) = relation_from_terms(tag, terms, lhs_val) {
                    if !r.is_trivial() {
                        out.push(r);
                    }
                }
            }
        }
    }
    // log-power (Stirling polynomial) identities at x = -1: the multi-series
    // generalization with all exponents 1
    if (2..=5).contains(&w) {
        if let Some(r) = log_power_relation(w) {
            out.push(r);
        }
    }
    out
}

/// polynomial in harmonic symbols: list of (coef, plain multiset, extra
/// inverse power j) meaning coef * prod H^(i)_n * n^-j
type HPoly = Vec<(Rational, Vec<u32>, u32)>;

/// (-1)^(r-1) log^r 2 = sum_n (-1)^(n-1) [x^n](-log(1-x))^r with
/// [x^n] = (r/n) * Bell_(r-1)(H_{n-1} power sums).
fn log_power_relation(r: u32) -> Option<Relation> {
    // Bell polynomials in the power sums H^(i)_{n-1}
    let bell: HPoly = match r {
        2 => vec![(rat(2, 1), vec![1], 0)],
        3 => vec![(rat(3, 1), vec![1, 1], 0), (rat(-3, 1), vec![2], 0)],
        4 => vec![
            (rat(4, 1), vec![1, 1, 1], 0),
            (rat(-12, 1), vec![1, 2], 0),
            (rat(8, 1), vec![3], 0),
        ],
        5 => vec![
            (rat(5, 1), vec![1, 1, 1, 1], 0),
            (rat(-30, 1), vec![1, 1, 2], 0),
            (rat(15, 1), vec![2, 2], 0),
            (rat(40, 1), vec![1, 3], 0),
            (rat(-30, 1), vec![4], 0),
        ],
        _ => return None,
    };
    // shift H^(i)_{n-1} = H^(i)_n - n^-i
    let mut shifted: HPoly = Vec::new();
    for (c, factors, j) in bell {
        // expand product over subsets of the factor list
        let m = factors.len();
        for mask in 0u32..(1 << m) {
            let mut plain = Vec::new();
            let mut jj = j;
            let mut sign = Rational::from(1);
            for (t, &i) in factors.iter().enumerate() {
                if mask & (1 << t) != 0 {
                    jj += i;
                    sign = -sign;
                } else {
                    plain.push(i);
                }
            }
            plain.sort_unstable();
            shifted.push((c.clone() * sign, plain, jj));
        }
    }
    // terms: sum_n (-1)^(n-1) coef * prod H / n^(1+jj)
    let mut terms = Vec::new();
    for (c, plain, jj) in shifted {
        terms.push(Term {
            coef: c,
            alt: true,
            plain,
            tilde: vec![],
            p: 1 + jj,
        });
    }
    // lhs value: (-1)^(r-1) log^r 2
    let mut lhs = BasisVector::monomial(crate::constants::Monomial::power(
        crate::constants::Atom::Log2,
        r,
    ));
    if r % 2 == 0 {
        lhs = lhs.neg();
    }
    relation_from_terms(format!("es.logpow r={r}"), terms, lhs)
}

// ---------------------------------------------------------------------------
// classical reductions
// ---------------------------------------------------------------------------

/// Closed forms for the classical reducible families; None when the index is
/// outside them.
pub fn euler_reductions(e: &EsIndex) -> Option<BasisVector> {
    let idx = Index::Es(e.clone());
    if !idx.is_convergent() {
        return None;
    }
    match (e.plain.as_slice(), e.tilde.as_slice(), e.outer_neg, e.p) {
        // Euler's formula: sum H_n/n^q
        ([1], [], false, q) if q >= 2 => {
            let mut v = zeta(q + 1).scale(&((Rational::from(2) + q) / Rational::from(2)));
            for j in 1..=(q.saturating_sub(2)) {
                v = v.sub(&zeta(j + 1).mul(&zeta(q - j)).scale(&rat(1, 2)));
            }
            Some(v)
        }
        // alternating linear sums with an H_n factor
        ([1], [], true, 1) => {
            // pi^2/12 - log^2 2/2
            let mut v = zeta(2).scale(&rat(1, 2));
            v.add_term(
                crate::constants::Monomial::power(crate::constants::Atom::Log2, 2),
                rat(-1, 2),
            );
            Some(v)
        }
        ([1], [], true, 3) => {
            // 11 pi^4/360 - 2 Li4(1/2) - 7 zeta3 log2/4 + pi^2 log^2 2/12 - log^4 2/12
            use crate::constants::{Atom, Monomial};
            let mut v = BasisVector::zero();
            v.add_term(Monomial::power(Atom::Pi, 4), rat(11, 360));
            v.add_term(Monomial::atom(Atom::LiHalf(4)), rat(-2, 1));
            v.add_term(
                Monomial::atom(Atom::Zeta(3)).mul(&Monomial::atom(Atom::Log2)),
                rat(-7, 4),
            );
            v.add_term(
                Monomial::power(Atom::Pi, 2).mul(&Monomial::power(Atom::Log2, 2)),
                rat(1, 12),
            );
            v.add_term(Monomial::power(Atom::Log2, 4), rat(-1, 12));
            Some(v)
        }
        ([1], [], true, q) if q % 2 == 0 => {
            // sum (-1)^(n-1) H_n/n^(2m):
            // (2m+1)/2 eta(2m+1) - zeta(2m+1)/2 - sum_{j<m} eta(2j) zeta(2m+1-2j)
            let m = q / 2;
            let mut v = eta(q + 1).scale(&rat((q + 1) as i64, 2));
            v = v.sub(&zeta(q + 1).scale(&rat(1, 2)));
            for j in 1..m {
                v = v.sub(&eta(2 * j).mul(&zeta(q + 1 - 2 * j)));
            }
            Some(v)
        }
        // symmetric: sum H^(p)_n/n^p
        ([a], [], false, q) if *a == q => {
            Some(zeta(q).mul(&zeta(q)).add(&zeta(2 * q)).scale(&rat(1, 2)))
        }
        // linear sums of odd weight (classical symmetric formula)
        ([a], [], false, q) if (*a + q) % 2 == 1 && *a >= 2 => {
            let p = *a;
            let w = p + q;
            let mut c0 = Rational::from(1);
            let sgn = if p % 2 == 0 {
                Rational::from(1)
            } else {
                Rational::from(-1)
            };
            c0 -= sgn.clone() * binom(w - 1, p);
            c0 -= sgn.clone() * binom(w - 1, q);
            let mut v = zeta(w).scale(&(c0 / Rational::from(2)));
            if p % 2 == 1 {
                v = v.add(&zeta(p).mul(&zeta(q)));
            }
            for k in 1..=(q / 2) {
                let c = sgn.clone() * binom(w - 2 * k - 1, p - 1);
                if w > 2 * k + 1 {
                    v = v.add(&zeta(2 * k).mul(&zeta(w - 2 * k)).scale(&c));
                }
            }
            for k in 1..=(p / 2) {
                let c = sgn.clone() * binom(w - 2 * k - 1, q - 1);
                if w > 2 * k + 1 {
                    v = v.add(&zeta(2 * k).mul(&zeta(w - 2 * k)).scale(&c));
                }
            }
            Some(v)
        }
        // classical alternating linear values with p = 1
        ([a], [], true, 1) if (2..=4).contains(a) => Some(alt_linear_plain(*a)),
        ([], [a], true, 1) if (2..=4).contains(a) => Some(alt_linear_tilde(*a)),
        // switch identities moving a tilde-1 factor to a linear sum
        ([], [1], false, q) if (2..=4).contains(&q) => {
            // log2 zeta(q) + eta(q+1) - ES(q;-1)
            let v = eta(1).mul(&zeta(q)).add(&eta(q + 1));
            Some(v.sub(&alt_linear_plain(q)))
        }
        ([], [1], true, q) if (2..=4).contains(&q) => {
            // log2 eta(q) + zeta(q+1) - ES(-q;-1)
            let v = eta(1).mul(&eta(q)).add(&zeta(q + 1));
            Some(v.sub(&alt_linear_tilde(q)))
        }
        // quadratic non-linear classics
        ([1, 1], [], false, 2) => Some(zeta(4).scale(&rat(17, 4))),
        ([1, 1], [], false, 3) => {
            Some(zeta(5).scale(&rat(7, 2)).sub(&zeta(2).mul(&zeta(3))))
        }
        ([1], [1], true, 1) => {
            use crate::constants::{Atom, Monomial};
            let mut v = BasisVector::zero();
            v.add_term(
                Monomial::power(Atom::Pi, 2).mul(&Monomial::atom(Atom::Log2)),
                rat(1, 6),
            );
            v.add_term(Monomial::power(Atom::Log2, 3), rat(-1, 3));
            v.add_term(Monomial::atom(Atom::Zeta(3)), rat(1, 4));
            Some(v)
        }
        _ => None,
    }
}

/// sum (-1)^(n-1) H^(a)_n / n for a = 2, 3, 4 (classical values)
fn alt_linear_plain(a: u32) -> BasisVector {
    use crate::constants::{Atom, Monomial};
    let mut v = BasisVector::zero();
    match a {
        2 => {
            v.add_term(Monomial::atom(Atom::Zeta(3)), rat(1, 1));
            v.add_term(
                Monomial::power(Atom::Pi, 2).mul(&Monomial::atom(Atom::Log2)),
                rat(-1, 12),
            );
        }
        3 => {
            v.add_term(Monomial::power(Atom::Pi, 4), rat(19, 1440));
            v.add_term(
                Monomial::atom(Atom::Zeta(3)).mul(&Monomial::atom(Atom::Log2)),
                rat(-3, 4),
            );
        }
        4 => {
            v.add_term(
                Monomial::power(Atom::Pi, 4).mul(&Monomial::atom(Atom::Log2)),
                rat(-7, 720),
            );
            v.add_term(
                Monomial::power(Atom::Pi, 2).mul(&Monomial::atom(Atom::Zeta(3))),
                rat(-1, 16),
            );
            v.add_term(Monomial::atom(Atom::Zeta(5)), rat(2, 1));
        }
        _ => unreachable!(),
    }
    v
}

/// sum (-1)^(n-1) tilde-H^(a)_n / n for a = 2, 3, 4 (classical values)
fn alt_linear_tilde(a: u32) -> BasisVector {
    use crate::constants::{Atom, Monomial};
    let mut v = BasisVector::zero();
    match a {
        2 => {
            v.add_term(
                Monomial::power(Atom::Pi, 2).mul(&Monomial::atom(Atom::Log2)),
                rat(-1, 6),
            );
            v.add_term(Monomial::atom(Atom::Zeta(3)), rat(13, 8));
        }
        3 => {
            v.add_term(Monomial::power(Atom::Pi, 4), rat(-1, 180));
            v.add_term(
                Monomial::power(Atom::Pi, 2).mul(&Monomial::power(Atom::Log2, 2)),
                rat(-1, 12),
            );
            v.add_term(Monomial::power(Atom::Log2, 4), rat(1, 12));
            v.add_term(
                Monomial::atom(Atom::Zeta(3)).mul(&Monomial::atom(Atom::Log2)),
                rat(3, 4),
            );
            v.add_term(Monomial::atom(Atom::LiHalf(4)), rat(2, 1));
        }
        4 => {
            v.add_term(
                Monomial::power(Atom::Pi, 4).mul(&Monomial::atom(Atom::Log2)),
                rat(-1, 90),
            );
            v.add_term(
                Monomial::power(Atom::Pi, 2).mul(&Monomial::atom(Atom::Zeta(3))),
                rat(-1, 8),
            );
            v.add_term(Monomial::atom(Atom::Zeta(5)), rat(91, 32));
        }
        _ => unreachable!(),
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Corpus;

    fn es(s: &str) -> EsIndex {
        match Index::parse(s).unwrap() {
            Index::Es(e) => e,
            _ => panic!(),
        }
    }

    #[test]
    fn euler_reduction_values_match_corpus() {
        let corpus = Corpus::load_builtin().unwrap();
        let covered = [
            "ES(1;2)", "ES(1;3)", "ES(1;4)", "ES(1;-1)", "ES(1;-2)", "ES(1;-3)",
            "ES(1;-4)", "ES(2;2)", "ES(2;3)", "ES(3;2)", "ES(2;-1)", "ES(3;-1)",
            "ES(4;-1)", "ES(-2;-1)", "ES(-3;-1)", "ES(-4;-1)", "ES(-1;2)",
            "ES(-1;3)", "ES(-1;4)", "ES(-1;-2)", "ES(-1;-3)", "ES(-1;-4)",
            "ES(1,1;2)", "ES(1,1;3)", "ES(1,-1;-1)",
        ];
        for s in covered {
            let e = es(s);
            let got = euler_reductions(&e).unwrap_or_else(|| panic!("{s} not covered"));
            let idx = Index::Es(e);
            let want = &corpus.get(&idx).expect("corpus row").rhs;
            assert_eq!(&got, want, "mismatch for {s}");
        }
        // ES(1;-2) = 5 zeta(3)/8 explicitly
        let v = euler_reductions(&es("ES(1;-2)")).unwrap();
        assert_eq!(v, zeta(3).scale(&rat(5, 8)));
        // outside covered families
        assert!(euler_reductions(&es("ES(2,-3,-3;-4)")).is_none());
    }

    #[test]
    fn symmetric_gives_es22() {
        // 2 ES(2;2) = zeta(2)^2 + zeta(4)
        let rels = es_symmetric_relations_weight(4);
        let idx = Index::parse("ES(2,2;0)"); // not a valid index; search by provenance
        let _ = idx;
        let r = rels
            .iter()
            .find(|r| r.provenance == "es.sym [2, 2]")
            .expect("sym [2,2]");
        assert_eq!(r.lhs.len(), 1);
        let (i, c) = r.lhs.iter().next().unwrap();
        assert_eq!(i.to_string(), "ES(2;2)");
        assert_eq!(*c, Rational::from(2));
        // rhs = zeta(2)^2 + zeta(4) = pi^4/36 + pi^4/90 = 7 pi^4/180... times
        // 1/2 after solving; the raw rhs here:
        assert_eq!(r.rhs, zeta(2).mul(&zeta(2)).add(&zeta(4)));
    }

    #[test]
    fn log_power_quintuple_matches_prop6_proof_shape() {
        // log^5 2 = 5ES(-1,-1,-1,-1;-1) - 10ES(-1,-1,-1;2) + 10ES(-1,-1;-3)
        //           - 5ES(-1;4) + eta(5)  [from the symmetric generator]
        let rels = es_symmetric_relations_weight(5);
        let r = rels
            .iter()
            .find(|r| r.provenance == "es.sym [-1, -1, -1, -1, -1]")
            .expect("alt quintuple");
        let get = |s: &str| {
            r.lhs
                .get(&Index::parse(s).unwrap())
                .cloned()
                .unwrap_or_default()
        };
        assert_eq!(get("ES(-1,-1,-1,-1;-1)"), Rational::from(5));
        assert_eq!(get("ES(-1,-1,-1;2)"), Rational::from(-10));
        assert_eq!(get("ES(-1,-1;-3)"), Rational::from(10));
        assert_eq!(get("ES(-1;4)"), Rational::from(-5));
    }
}
