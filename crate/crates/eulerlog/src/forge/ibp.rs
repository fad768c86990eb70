//! Integration-by-parts relations: differentiate a product of log kernels and
//! integrate over (0,1).

use rug::Rational;

use crate::constants::{Atom, BasisVector, Monomial};
use crate::index::{Index, LiIndex, PliIndex, PolyTag};
use crate::linalg::Relation;

fn li(a: [u32; 3], p: u8) -> Index {
    Index::Li(LiIndex { a, p })
}

/// LI relations from d/dx of log(1-x)^a0 log(x)^a1 log(1+x)^a2 with
/// a0+a1+a2 = w. Boundary terms are log-power products or zero; source
/// exponent patterns whose boundary diverges are skipped.
pub fn ibp_li_relations(w: u32) -> Vec<Relation> {
    let mut out = Vec::new();
    if w < 2 {
        return out;
    }
    for a0 in 0..=(w) {
        for a1 in 0..=(w - a0) {
            let a2 = w - a0 - a1;
            // boundary at 1: zero when a1 >= 1; log2^a2 when a0 = a1 = 0;
            // divergent when a0 >= 1 and a1 = 0
            // boundary at 0: zero unless a0 = a2 = 0 (then divergent for a1 > 0)
            if a0 >= 1 && a1 == 0 {
                continue;
            }
            if a0 == 0 && a2 == 0 {
                continue; // pure log(x)^a1 diverges at 0 (or is constant)
            }
            let mut r = Relation::new(format!("ibp.li F=({a0},{a1},{a2})"));
            if a0 >= 1 {
                r.add_lhs(li([a0 - 1, a1, a2], 0), Rational::from(-(a0 as i64)));
            }
            if a1 >= 1 {
                r.add_lhs(li([a0, a1 - 1, a2], 1), Rational::from(a1));
            }
            if a2 >= 1 {
                r.add_lhs(li([a0, a1, a2 - 1], 2), Rational::from(a2));
            }
            if a0 == 0 && a1 == 0 {
                // F(1) = log2^a2
                r.add_rhs(&BasisVector::monomial(Monomial::power(Atom::Log2, a2)));
            }
            if r.lhs.keys().all(|i| i.is_convergent()) {
                out.push(r);
            }
        }
    }
    out
}

/// PLI integration by parts: F = prod l(m;x)^a(m) * prod L(n,k;x)^b with the
/// polylog factors restricted to k in {1, 2} (arguments x and -x), whose
/// derivatives stay inside the family:
///   d/dx Li_n(x)  = Li_{n-1}(x)/x   (n >= 3), Li_2'(x) = -log(1-x)/x
///   d/dx Li_n(-x) = Li_{n-1}(-x)/x  (n >= 3), Li_2'(-x) = -log(1+x)/x
pub fn ibp_pli_relations(w: u32) -> Vec<Relation> {
    let mut out = Vec::new();
    if w < 4 {
        return out;
    }
    // enumerate F = a-exponents + one polylog factor (n, k), k in {1,2};
    // total degree a0+a1+a2+n = w
    for n in 2..=(w - 1) {
        for k in [1u8, 2u8] {
            let rest = w - n;
            for a0 in 0..=rest {
                for a1 in 0..=(rest - a0) {
                    let a2 = rest - a0 - a1;
                    // boundary terms: at x=1 the polylog is finite
                    // (zeta or -eta); F(1) = 0 iff a1 >= 1, diverges if
                    // a0 >= 1 & a1 = 0, else finite log2^a2 * Li_n(+-1).
                    // at x=0 polylog vanishes, F(0) = 0 always (n >= 2).
                    if a0 >= 1 && a1 == 0 {
                        continue;
                    }
                    let tag = (n as u8, k);
                    let mut r = Relation::new(format!(
                        "ibp.pli F=({a0},{a1},{a2})x{}{}",
                        n, k
                    ));
                    let poly = vec![tag];
                    // log-kernel derivatives
                    if a0 >= 1 {
                        r.add_lhs(
                            pli([a0 - 1, a1, a2], poly.clone(), 0),
                            Rational::from(-(a0 as i64)),
                        );
                    }
                    if a1 >= 1 {
                        r.add_lhs(
                            pli([a0, a1 - 1, a2], poly.clone(), 1),
                            Rational::from(a1),
                        );
                    }
                    if a2 >= 1 {
                        r.add_lhs(
                            pli([a0, a1, a2 - 1], poly.clone(), 2),
                            Rational::from(a2),
                        );
                    }
                    // polylog derivative
                    if n >= 3 {
                        r.add_lhs(
                            pli([a0, a1, a2], vec![(n as u8 - 1, k)], 1),
                            Rational::from(1),
                        );
                    } else {
                        // d/dx Li_2(x) = -log(1-x)/x, d/dx Li_2(-x) = -log(1+x)/x
                        let idx = match k {
                            1 => li([a0 + 1, a1, a2], 1),
                            _ => li([a0, a1, a2 + 1], 1),
                        };
                        r.add_lhs(idx, Rational::from(-1));
                    }
                    // boundary at 1 when a0 = a1 = 0
                    if a0 == 0 && a1 == 0 {
                        let polyval = match k {
                            1 => crate::constants::zeta(n),
                            _ => crate::constants::eta(n).neg(),
                        };
                        let b = polyval
                            .mul(&BasisVector::monomial(Monomial::power(Atom::Log2, a2)));
                        r.add_rhs(&b);
                    }
                    if r.lhs.keys().all(|i| i.is_convergent()) {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

fn pli(a: [u32; 3], polylogs: Vec<PolyTag>, p: u8) -> Index {
    let mut idx = Index::Pli(PliIndex { a, polylogs, p });
    idx.canonicalize();
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log3_onepx_gives_single_relation() {
        // F = log^3(1+x): 3 LI(0,0,2;2) = log^3 2
        let rels = ibp_li_relations(3);
        let r = rels
            .iter()
            .find(|r| r.provenance.contains("F=(0,0,3)"))
            .unwrap();
        assert_eq!(r.lhs.len(), 1);
        let (idx, c) = r.lhs.iter().next().unwrap();
        assert_eq!(idx.to_string(), "LI(0,0,2;2)");
        assert_eq!(*c, Rational::from(3));
        assert_eq!(
            r.rhs,
            BasisVector::monomial(Monomial::power(Atom::Log2, 3))
        );
    }

    #[test]
    fn all_terms_convergent() {
        for w in 2..=5 {
            for r in ibp_li_relations(w) {
                for idx in r.lhs.keys() {
                    assert!(idx.is_convergent(), "{idx} in {}", r.provenance);
                    assert_eq!(idx.weight(), w);
                }
            }
        }
    }
}
