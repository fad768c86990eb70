//! The constant algebra: polylogarithmic atoms, monomials over them, exact
//! rational vectors, and the weight-graded generating bases.
//!
//! Everything is kept full-simplified: zeta at even arguments is expressed
//! through powers of pi and Li_n(1/2) with n < 4 is rewritten into the basis,
//! so e.g. `zeta(2)` produces the monomial pi^2 with coefficient 1/6.

use rug::Rational;
use std::collections::BTreeMap;
use std::fmt;

/// One transcendental atom. `EulerGamma` is an internal scratch atom for the
/// gamma-function series machinery and must never survive into a final value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Pi,
    Log2,
    Catalan,
    /// zeta(n) for odd n >= 3
    Zeta(u32),
    /// Li_n(1/2) for n >= 4
    LiHalf(u32),
    /// Im Li_3(1+i)
    ImLi3,
    /// Im Li_4(1+i)
    ImLi4,
    /// psi^(3)(1/4) - psi^(3)(3/4) = 1536 beta(4)
    PsiDiff3,
    EulerGamma,
}

impl Atom {
    pub fn weight(&self) -> u32 {
        match self {
            Atom::Pi | Atom::Log2 => 1,
            Atom::Catalan => 2,
            Atom::Zeta(n) | Atom::LiHalf(n) => *n,
            Atom::ImLi3 => 3,
            Atom::ImLi4 | Atom::PsiDiff3 => 4,
            Atom::EulerGamma => 1,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Atom::Pi => "pi".into(),
            Atom::Log2 => "log2".into(),
            Atom::Catalan => "catalan".into(),
            Atom::Zeta(n) => format!("zeta{}", n),
            Atom::LiHalf(n) => format!("li{}half", n),
            Atom::ImLi3 => "imli3".into(),
            Atom::ImLi4 => "imli4".into(),
            Atom::PsiDiff3 => "psi3diff".into(),
            Atom::EulerGamma => "eulergamma".into(),
        }
    }

    pub fn parse(s: &str) -> Option<Atom> {
        Some(match s {
            "pi" => Atom::Pi,
            "log2" => Atom::Log2,
            "catalan" => Atom::Catalan,
            "imli3" => Atom::ImLi3,
            "imli4" => Atom::ImLi4,
            "psi3diff" => Atom::PsiDiff3,
            "eulergamma" => Atom::EulerGamma,
            _ => {
                if let Some(n) = s.strip_prefix("zeta") {
                    let n: u32 = n.parse().ok()?;
                    if n < 3 || n % 2 == 0 {
                        return None;
                    }
                    Atom::Zeta(n)
                } else if let Some(rest) = s.strip_prefix("li") {
                    let n: u32 = rest.strip_suffix("half")?.parse().ok()?;
                    if n < 4 {
                        return None;
                    }
                    Atom::LiHalf(n)
                } else {
                    return None;
                }
            }
        })
    }
}

/// Product of atoms with positive integer exponents; the empty product is the
/// rational unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub BTreeMap<Atom, u32>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn atom(a: Atom) -> Monomial {
        Monomial::power(a, 1)
    }

    pub fn power(a: Atom, e: u32) -> Monomial {
        let mut m = BTreeMap::new();
        if e > 0 {
            m.insert(a, e);
        }
        Monomial(m)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(a, e)| a.weight() * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (a, e) in &other.0 {
            *m.entry(*a).or_insert(0) += e;
        }
        Monomial(m)
    }

    pub fn contains_gamma(&self) -> bool {
        self.0.contains_key(&Atom::EulerGamma)
    }

    pub fn parse(s: &str) -> Option<Monomial> {
        if s == "1" {
            return Some(Monomial::one());
        }
        let mut m = BTreeMap::new();
        for piece in s.split('*') {
            let (name, exp) = match piece.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().ok()?),
                None => (piece, 1),
            };
            let atom = Atom::parse(name)?;
            if exp == 0 {
                return None;
            }
            *m.entry(atom).or_insert(0) += exp;
        }
        Some(Monomial(m))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(a, e)| {
                if *e == 1 {
                    a.name()
                } else {
                    format!("{}^{}", a.name(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A finite rational combination of monomials: the exact value of a closed
/// form. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BasisVector(pub BTreeMap<Monomial, Rational>);

impl BasisVector {
    pub fn zero() -> BasisVector {
        BasisVector::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_rational(q: Rational) -> BasisVector {
        let mut v = BasisVector::zero();
        v.add_term(Monomial::one(), q);
        v
    }

    pub fn from_int(n: i64) -> BasisVector {
        BasisVector::from_rational(Rational::from(n))
    }

    pub fn monomial(m: Monomial) -> BasisVector {
        let mut v = BasisVector::zero();
        v.add_term(m, Rational::from(1));
        v
    }

    pub fn atom(a: Atom) -> BasisVector {
        BasisVector::monomial(Monomial::atom(a))
    }

    pub fn add_term(&mut self, m: Monomial, q: Rational) {
        if q == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(m) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &BasisVector) -> BasisVector {
        let mut out = self.clone();
        for (m, q) in &other.0 {
            out.add_term(m.clone(), q.clone());
        }
        out
    }

    pub fn sub(&self, other: &BasisVector) -> BasisVector {
        let mut out = self.clone();
        for (m, q) in &other.0 {
            out.add_term(m.clone(), -q.clone());
        }
        out
    }

    pub fn neg(&self) -> BasisVector {
        let mut out = BasisVector::zero();
        for (m, q) in &self.0 {
            out.add_term(m.clone(), -q.clone());
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> BasisVector {
        let mut out = BasisVector::zero();
        if *q == 0 {
            return out;
        }
        for (m, c) in &self.0 {
            out.add_term(m.clone(), (c * q).into());
        }
        out
    }

    pub fn mul(&self, other: &BasisVector) -> BasisVector {
        let mut out = BasisVector::zero();
        for (m1, q1) in &self.0 {
            for (m2, q2) in &other.0 {
                out.add_term(m1.mul(m2), (q1 * q2).into());
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, q: &Rational) -> BasisVector {
        let mut out = BasisVector::zero();
        for (m1, q1) in &self.0 {
            out.add_term(m1.mul(m), (q1 * q).into());
        }
        out
    }

    pub fn contains_gamma(&self) -> bool {
        self.0.keys().any(|m| m.contains_gamma())
    }

    /// Weight when all monomials share one, otherwise `None`. Rational terms
    /// have weight 0, so a vector with both a rational and a transcendental
    /// part is inhomogeneous.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.0.keys().map(|m| m.weight());
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, q) in &self.0 {
            let neg = *q < 0;
            let mag = q.clone().abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.0.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag == 1 {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// zeta(n) as a basis vector, full-simplified: even arguments become pi
/// powers via Bernoulli numbers.
pub fn zeta(n: u32) -> BasisVector {
    assert!(n >= 2, "zeta argument must be >= 2");
    if n % 2 == 1 {
        BasisVector::atom(Atom::Zeta(n))
    } else {
        // zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^{2n} / (2 (2n)!)
        let b = bernoulli(n);
        let mut c = Rational::from(1);
        for k in 1..=n {
            c *= Rational::from((2, k));
        }
        c /= 2;
        c *= &b;
        if (n / 2) % 2 == 0 {
            c = -c;
        }
        BasisVector::monomial(Monomial::power(Atom::Pi, n)).scale(&c)
    }
}

/// eta(n) = (1 - 2^(1-n)) zeta(n); eta(1) = log 2.
pub fn eta(n: u32) -> BasisVector {
    if n == 1 {
        return BasisVector::atom(Atom::Log2);
    }
    let factor = Rational::from(1) - Rational::from((1u32, 1u32 << (n - 1)));
    zeta(n).scale(&factor)
}

/// Li_n(1/2) full-simplified: n = 1, 2, 3 rewritten into the basis, n >= 4 an
/// atom of its own.
pub fn li_half(n: u32) -> BasisVector {
    match n {
        1 => BasisVector::atom(Atom::Log2),
        2 => {
            // pi^2/12 - log^2(2)/2
            let mut v = zeta(2).scale(&rat(1, 2));
            v.add_term(Monomial::power(Atom::Log2, 2), rat(-1, 2));
            v
        }
        3 => {
            // 7 zeta(3)/8 + log^3(2)/6 - pi^2 log(2)/12
            let mut v = BasisVector::atom(Atom::Zeta(3)).scale(&rat(7, 8));
            v.add_term(Monomial::power(Atom::Log2, 3), rat(1, 6));
            v.add_term(
                Monomial::power(Atom::Pi, 2).mul(&Monomial::atom(Atom::Log2)),
                rat(-1, 12),
            );
            v
        }
        _ => BasisVector::atom(Atom::LiHalf(n)),
    }
}

/// Positive Bernoulli-number magnitude |B_{2n}| is not enough here; this is
/// the signed B_{2n} as a rational (B_2 = 1/6, B_4 = -1/30, ...).
fn bernoulli(two_n: u32) -> Rational {
    let m = two_n as usize;
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        b.push(Rational::from((1u32, j as u32 + 1)));
        for i in (1..=j).rev() {
            let diff = Rational::from(&b[i - 1] - &b[i]);
            b[i - 1] = diff * Rational::from(i as u32);
        }
    }
    b[0].clone()
}

/// The Fibonacci basis A_W, in the printed order of the source tables.
pub fn fibonacci_basis(w: u32) -> Vec<Monomial> {
    let pi = |e| Monomial::power(Atom::Pi, e);
    let l2 = |e| Monomial::power(Atom::Log2, e);
    let z3 = Monomial::atom(Atom::Zeta(3));
    let z5 = Monomial::atom(Atom::Zeta(5));
    let li4 = Monomial::atom(Atom::LiHalf(4));
    let li5 = Monomial::atom(Atom::LiHalf(5));
    match w {
        1 => vec![l2(1)],
        2 => vec![pi(2), l2(2)],
        3 => vec![pi(2).mul(&l2(1)), l2(3), z3],
        4 => vec![pi(4), pi(2).mul(&l2(2)), l2(4), z3.mul(&l2(1)), li4],
        5 => vec![
            pi(4).mul(&l2(1)),
            pi(2).mul(&l2(3)),
            l2(5),
            pi(2).mul(&z3),
            z3.mul(&l2(2)),
            z5,
            li4.mul(&l2(1)),
            li5,
        ],
        _ => panic!("fibonacci_basis defined for 1..=5"),
    }
}

/// The extended basis B_W = A_W plus the quadratic constants; |B_W| = 2^W.
pub fn extended_basis(w: u32) -> Vec<Monomial> {
    let pi = |e| Monomial::power(Atom::Pi, e);
    let l2 = |e| Monomial::power(Atom::Log2, e);
    let c = Monomial::atom(Atom::Catalan);
    let p3 = Monomial::atom(Atom::ImLi3);
    let p4 = Monomial::atom(Atom::ImLi4);
    let psi = Monomial::atom(Atom::PsiDiff3);
    let z3 = Monomial::atom(Atom::Zeta(3));
    let mut v = fibonacci_basis(w);
    match w {
        2 => {
            v.push(c.clone());
            v.push(pi(1).mul(&l2(1)));
        }
        3 => {
            v.extend([
                c.mul(&l2(1)),
                pi(1).mul(&c),
                pi(1).mul(&l2(2)),
                pi(3),
                p3,
            ]);
        }
        4 => {
            v.extend([
                c.mul(&c),
                pi(1).mul(&c).mul(&l2(1)),
                c.mul(&l2(2)),
                pi(2).mul(&c),
                pi(1).mul(&l2(3)),
                pi(3).mul(&l2(1)),
                l2(1).mul(&p3),
                pi(1).mul(&z3),
                pi(1).mul(&p3),
                p4,
                psi,
            ]);
        }
        _ => panic!("extended_basis defined for 2..=4"),
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(
            (1..=5)
                .map(|w| fibonacci_basis(w).len())
                .collect::<Vec<_>>(),
            vec![1, 2, 3, 5, 8]
        );
        for w in 2..=4 {
            let b = extended_basis(w);
            assert_eq!(b.len(), 1 << w);
            let a = fibonacci_basis(w);
            for m in &a {
                assert!(b.contains(m), "A_{} not inside B_{}", w, w);
            }
            for m in &b {
                assert_eq!(m.weight(), w);
            }
        }
    }

    #[test]
    fn zeta_even_becomes_pi_powers() {
        assert_eq!(
            zeta(2),
            BasisVector::monomial(Monomial::power(Atom::Pi, 2)).scale(&rat(1, 6))
        );
        assert_eq!(
            zeta(4),
            BasisVector::monomial(Monomial::power(Atom::Pi, 4)).scale(&rat(1, 90))
        );
        assert_eq!(
            zeta(6),
            BasisVector::monomial(Monomial::power(Atom::Pi, 6)).scale(&rat(1, 945))
        );
        assert_eq!(zeta(3), BasisVector::atom(Atom::Zeta(3)));
    }

    #[test]
    fn eta_values() {
        assert_eq!(eta(1), BasisVector::atom(Atom::Log2));
        assert_eq!(eta(2), zeta(2).scale(&rat(1, 2)));
        assert_eq!(eta(3), zeta(3).scale(&rat(3, 4)));
    }

    #[test]
    fn monomial_weight_is_additive() {
        let m1 = Monomial::power(Atom::Pi, 2).mul(&Monomial::atom(Atom::Log2));
        let m2 = Monomial::atom(Atom::Zeta(3));
        assert_eq!(m1.weight() + m2.weight(), m1.mul(&m2).weight());
        assert_eq!(m1.mul(&m2).weight(), 6);
    }

    #[test]
    fn monomial_text_round_trips() {
        for w in 1..=5 {
            for m in fibonacci_basis(w) {
                assert_eq!(Monomial::parse(&m.to_string()).unwrap(), m);
            }
        }
        for w in 2..=4 {
            for m in extended_basis(w) {
                assert_eq!(Monomial::parse(&m.to_string()).unwrap(), m);
            }
        }
        assert_eq!(Monomial::parse("1").unwrap(), Monomial::one());
    }

    #[test]
    fn vector_arithmetic() {
        let v = li_half(2);
        let w = v.add(&v).sub(&v);
        assert_eq!(w, v);
        assert!(v.scale(&rat(0, 1)).is_zero());
        assert_eq!(v.homogeneous_weight(), Some(2));
        let mixed = v.add(&BasisVector::from_int(1));
        assert_eq!(mixed.homogeneous_weight(), None);
    }
}
