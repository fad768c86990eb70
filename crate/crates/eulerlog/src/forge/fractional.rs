//! Relations from the involution x -> (1-x)/(1+x), which permutes the log
//! kernels up to log(2) shifts and maps the measure into the same family.

use rug::Rational;
use std::collections::BTreeMap;

use crate::constants::{Atom, BasisVector, Monomial};
use crate::forge::SolvedTable;
use crate::index::{Index, LiIndex};
use crate::linalg::Relation;

/// term of the expanded image: log2^j * l0^b0 l1^b1 l2^b2 with coefficient
type Expansion = BTreeMap<(u32, [u32; 3]), Rational>;

fn mul_image(e: &Expansion, image: &[(i64, u32, [u32; 3])]) -> Expansion {
    // image: list of (coefficient, log2 power, kernel powers)
    let mut out = Expansion::new();
    for ((j, b), c) in e {
        for (ic, ij, ib) in image {
            let key = (
                j + ij,
                [b[0] + ib[0], b[1] + ib[1], b[2] + ib[2]],
            );
            let add = Rational::from(c * Rational::from(*ic));
            let cur = out.entry(key).or_insert_with(Rational::new);
            *cur += add;
            if *cur == 0 {
                out.remove(&key);
            }
        }
    }
    out
}

/// Images of the kernels under x -> (1-x)/(1+x):
///   log(1-x) -> log2 + log x - log(1+x)
///   log(x)   -> log(1-x) - log(1+x)
///   log(1+x) -> log2 - log(1+x)
fn kernel_image(m: usize) -> Vec<(i64, u32, [u32; 3])> {
    match m {
        0 => vec![(1, 1, [0, 0, 0]), (1, 0, [0, 1, 0]), (-1, 0, [0, 0, 1])],
        1 => vec![(1, 0, [1, 0, 0]), (-1, 0, [0, 0, 1])],
        _ => vec![(1, 1, [0, 0, 0]), (-1, 0, [0, 0, 1])],
    }
}

/// Fractional-transformation relations among weight-w log integrals. For
/// p = 0 the transformed measure needs the split 1/(x(1+x)) = 1/x - 1/(1+x).
/// Lower-weight values (terms carrying log2 powers) are taken from `solved`;
/// source integrals whose lower-weight dependencies are unsolved are skipped.
pub fn fractional_li_relations(w: u32, solved: &SolvedTable) -> Vec<Relation> {
    let mut out = Vec::new();
    if w < 2 {
        return out;
    }
    let s = w - 1;
    for a0 in 0..=s {
        for a1 in 0..=(s - a0) {
            let a2 = s - a0 - a1;
            for p in [0u8, 2u8] {
                let src = Index::Li(LiIndex {
                    a: [a0, a1, a2],
                    p,
                });
                if !src.is_convergent() {
                    continue;
                }
                // expand prod images
                let mut e = Expansion::new();
                e.insert((0, [0, 0, 0]), Rational::from(1));
                for (m, &cnt) in [a0, a1, a2].iter().enumerate() {
                    let img = kernel_image(m);
                    for _ in 0..cnt {
                        e = mul_image(&e, &img);
                    }
                }
                // denominators after transformation
                let denoms: &[(i64, u8)] = if p == 0 {
                    &[(1, 1), (-1, 2)]
                } else {
                    &[(1, 2)]
                };
                let mut r = Relation::new(format!("frac.li ({a0},{a1},{a2};{p})"));
                r.add_lhs(src, Rational::from(-1));
                let mut ok = true;
                'terms: for ((j, b), c) in &e {
                    for &(dc, dp) in denoms {
                        let idx = Index::Li(LiIndex { a: *b, p: dp });
                        let coef = Rational::from(c * Rational::from(dc));
                        if *j == 0 {
                            if !idx.is_convergent() {
                                // cannot happen by the kernel-image structure
                                ok = false;
                                break 'terms;
                            }
                            r.add_lhs(idx, coef);
                        } else {
                            // lower-weight value times log2^j moves to the rhs
                            match solved.get(&idx) {
                                Some(v) => {
                                    let m = Monomial::power(Atom::Log2, *j);
                                    r.add_rhs(&v.mul_monomial(&m, &coef).neg());
                                }
                                None => {
                                    ok = false;
                                    break 'terms;
                                }
                            }
                        }
                    }
                }
                if ok && !r.is_trivial() {
                    out.push(r);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forge::SolvedTable;

    #[test]
    fn tautology_for_empty_exponents() {
        // F = 1/(1+x): transformed back to itself -> trivial relation dropped
        let solved = SolvedTable::new();
        let rels = fractional_li_relations(1, &solved);
        assert!(rels.is_empty(), "{:?}", rels.len());
    }

    #[test]
    fn weight2_relations_close_under_known_weight1() {
        let mut solved = SolvedTable::new();
        solved.insert(
            Index::parse("LI(0,0,0;2)").unwrap(),
            BasisVector::atom(Atom::Log2),
        );
        let rels = fractional_li_relations(2, &solved);
        assert!(!rels.is_empty());
        for r in &rels {
            assert_eq!(r.lhs_weight(), Some(2), "{}", r.provenance);
        }
    }
}
