//! Relations from mixed partial derivatives of the Euler Beta function,
//! computed through truncated series of log Gamma(1+x) and log Gamma(1/2+x)
//! with zeta-number coefficients. The Euler-Mascheroni scratch atom must
//! cancel in every emitted right-hand side.

use rug::Rational;

use crate::constants::{li_half, rat, zeta, Atom, BasisVector, Monomial};
use crate::index::{Index, LiIndex};
use crate::linalg::Relation;

/// Truncated bivariate series with exact constant-algebra coefficients.
#[derive(Debug, Clone)]
pub struct Series2 {
    trunc: u32,
    /// coefficient of alpha^i beta^j for i + j <= trunc
    c: std::collections::BTreeMap<(u32, u32), BasisVector>,
}

impl Series2 {
    pub fn zero(trunc: u32) -> Series2 {
        Series2 {
            trunc,
            c: Default::default(),
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BasisVector {
        self.c.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, i: u32, j: u32, v: BasisVector) {
        if i + j > self.trunc || v.is_zero() {
            return;
        }
        let e = self.c.entry((i, j)).or_default();
        *e = e.add(&v);
        if e.is_zero() {
            self.c.remove(&(i, j));
        }
    }

    pub fn add(&self, o: &Series2) -> Series2 {
        let mut out = self.clone();
        for ((i, j), v) in &o.c {
            out.add_term(*i, *j, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Series2 {
        let mut out = Series2::zero(self.trunc);
        for ((i, j), v) in &self.c {
            out.add_term(*i, *j, v.neg());
        }
        out
    }

    pub fn mul(&self, o: &Series2) -> Series2 {
        let mut out = Series2::zero(self.trunc);
        for ((i1, j1), v1) in &self.c {
            for ((i2, j2), v2) in &o.c {
                if i1 + i2 + j1 + j2 > self.trunc {
                    continue;
                }
                out.add_term(i1 + i2, j1 + j2, v1.mul(v2));
            }
        }
        out
    }

    /// exp of a series without constant term
    pub fn exp(&self) -> Series2 {
        debug_assert!(self.coeff(0, 0).is_zero());
        let mut out = Series2::zero(self.trunc);
        out.add_term(0, 0, BasisVector::from_int(1));
        let mut pow = out.clone();
        let mut kfact = Rational::from(1);
        for k in 1..=self.trunc {
            pow = pow.mul(self);
            kfact *= Rational::from(k);
            let inv = Rational::from(1) / kfact.clone();
            for ((i, j), v) in &pow.c {
                out.add_term(*i, *j, v.scale(&inv));
            }
        }
        out
    }
}

/// coefficients of log Gamma(1+x): [0, -gamma, zeta(2)/2, -zeta(3)/3, ...]
fn lgamma1_coeffs(trunc: u32) -> Vec<BasisVector> {
    let mut c = vec![BasisVector::zero(); (trunc + 1) as usize];
    if trunc >= 1 {
        c[1] = BasisVector::atom(Atom::EulerGamma).neg();
    }
    for k in 2..=trunc {
        let mut v = zeta(k).scale(&rat(1, k as i64));
        if k % 2 == 1 {
            v = v.neg();
        }
        c[k as usize] = v;
    }
    c
}

/// coefficients of log(Gamma(1/2+x)/Gamma(1/2))
fn lgamma_half_coeffs(trunc: u32) -> Vec<BasisVector> {
    let mut c = vec![BasisVector::zero(); (trunc + 1) as usize];
    if trunc >= 1 {
        let mut v = BasisVector::atom(Atom::EulerGamma).neg();
        v.add_term(Monomial::atom(Atom::Log2), rat(-2, 1));
        c[1] = v;
    }
    for k in 2..=trunc {
        let factor = Rational::from(Rational::from(1) << k) - 1u32;
        let mut v = zeta(k).scale(&(factor / Rational::from(k)));
        if k % 2 == 1 {
            v = v.neg();
        }
        c[k as usize] = v;
    }
    c
}

/// lift a univariate series to f(alpha), f(beta) or f(alpha+beta)
fn lift(coeffs: &[BasisVector], trunc: u32, which: u8) -> Series2 {
    let mut out = Series2::zero(trunc);
    for (k, v) in coeffs.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        match which {
            0 => out.add_term(k as u32, 0, v.clone()),
            1 => out.add_term(0, k as u32, v.clone()),
            _ => {
                // (alpha+beta)^k expansion
                let mut binom = Rational::from(1);
                for j in 0..=k as u32 {
                    out.add_term(j, k as u32 - j, v.scale(&binom));
                    binom = binom * Rational::from(k as u32 - j) / Rational::from(j + 1);
                }
            }
        }
    }
    out
}

/// W(alpha,beta) with Gamma(1+a)Gamma(1+b)/Gamma(1+a+b) = W; the series
/// behind the (0,1) and (1,0) Beta limits.
pub fn series_w(trunc: u32) -> Series2 {
    let l = lgamma1_coeffs(trunc);
    let logw = lift(&l, trunc, 0)
        .add(&lift(&l, trunc, 1))
        .add(&lift(&l, trunc, 2).neg());
    // gamma must have cancelled already at the log level
    for v in logw.c.values() {
        assert!(!v.contains_gamma(), "gamma residue in log W");
    }
    logw.exp()
}

/// V(alpha,beta) = U(alpha) Gamma(1+beta) / U(alpha+beta) with
/// U(x) = Gamma(1/2+x)/Gamma(1/2); behind the (1/2,0) limits.
pub fn series_v(trunc: u32) -> Series2 {
    let lh = lgamma_half_coeffs(trunc);
    let l1 = lgamma1_coeffs(trunc);
    let logv = lift(&lh, trunc, 0)
        .add(&lift(&l1, trunc, 1))
        .add(&lift(&lh, trunc, 2).neg());
    for v in logv.c.values() {
        assert!(!v.contains_gamma(), "gamma residue in log V");
    }
    logv.exp()
}

fn fact(n: u32) -> Rational {
    let mut f = Rational::from(1);
    for k in 2..=n {
        f *= Rational::from(k);
    }
    f
}

fn binom(n: u32, k: u32) -> Rational {
    let mut b = Rational::from(1);
    for t in 0..k {
        b = b * Rational::from(n - t) / Rational::from(t + 1);
    }
    b
}

fn pow2_inv(e: u32) -> Rational {
    Rational::from(1) / Rational::from(Rational::from(1) << e)
}

fn li(a0: u32, a1: u32, a2: u32, p: u8) -> Index {
    Index::Li(LiIndex { a: [a0, a1, a2], p })
}

/// derivative limit at (0,1) / (1,0): m alpha-derivatives, n beta-derivatives
fn w_limit(w: &Series2, m: u32, n: u32) -> BasisVector {
    // m! n! [alpha^{m+1} beta^n] W  (pole on the alpha side)
    w.coeff(m + 1, n).scale(&(fact(m) * fact(n)))
}

fn pole_beta_limit(s: &Series2, m: u32, n: u32) -> BasisVector {
    // m! n! [alpha^m beta^{n+1}] S  (pole on the beta side)
    s.coeff(m, n + 1).scale(&(fact(m) * fact(n)))
}

/// All Beta-derivative relations of weight <= wmax. Every right-hand side is
/// checked for Euler-Mascheroni cancellation (a residue would signal a series
/// bug and panics).
pub fn beta_derivative_relations(wmax: u32) -> Vec<Relation> {
    let trunc = wmax + 2;
    let w = series_w(trunc);
    let v = series_v(trunc);
    let mut out = Vec::new();
    let mut push = |r: Relation| {
        assert!(!r.rhs.contains_gamma(), "gamma residue in {}", r.provenance);
        // drop empty relations and any referencing a divergent index
        if !r.is_trivial() && r.lhs.keys().all(|i| i.is_convergent()) {
            out.push(r);
        }
    };

    for total in 1..wmax {
        // total = m + n
        for m in 0..=total {
            let n = total - m;
            let weight = total + 1;
            if weight > wmax {
                continue;
            }
            // (1) LI(n,m,0;1) = LI(m,n,0;0) = lim
            if n >= 1 {
                let val = w_limit(&w, m, n);
                let mut r = Relation::new(format!("beta.1a m={m} n={n}"));
                r.add_lhs(li(n, m, 0, 1), Rational::from(1));
                r.add_rhs(&val);
                push(r);
                let mut r = Relation::new(format!("beta.1b m={m} n={n}"));
                r.add_lhs(li(m, n, 0, 0), Rational::from(1));
                r.add_rhs(&val);
                push(r);
            }
            // (2) sum_k C(n,k) LI(k,m,n-k;1) = 2^{-(m+1)} lim
            if n >= 1 {
                let mut r = Relation::new(format!("beta.2 m={m} n={n}"));
                for k in 0..=n {
                    r.add_lhs(li(k, m, n - k, 1), binom(n, k));
                }
                r.add_rhs(&w_limit(&w, m, n).scale(&pow2_inv(m + 1)));
                push(r);
            }
            // (3) sum_k C(n,k) LI(k,m,n-k;0) = 2^{-(m+1)} (lim_(1,0) + lim_(1/2,0))
            if m >= 1 {
                let mut r = Relation::new(format!("beta.3 m={m} n={n}"));
                for k in 0..=n {
                    r.add_lhs(li(k, m, n - k, 0), binom(n, k));
                }
                let val = pole_beta_limit(&w, m, n).add(&pole_beta_limit(&v, m, n));
                r.add_rhs(&val.scale(&pow2_inv(m + 1)));
                push(r);
            }
            // (4) sum_k C(n,k) LI(k,m,n-k;2) = 2^{-(m+1)} (lim_(1/2,0) - lim_(1,0))
            {
                let mut r = Relation::new(format!("beta.4 m={m} n={n}"));
                for k in 0..=n {
                    r.add_lhs(li(k, m, n - k, 2), binom(n, k));
                }
                let val = pole_beta_limit(&v, m, n).sub(&pole_beta_limit(&w, m, n));
                r.add_rhs(&val.scale(&pow2_inv(m + 1)));
                push(r);
            }
        }
    }
    // (5) LI(0,m,1;0), weight m+2
    for m in 1..=wmax.saturating_sub(2) {
        let mut r = Relation::new(format!("beta.5 m={m}"));
        r.add_lhs(li(0, m, 1, 0), Rational::from(1));
        let c1 = pow2_inv(m + 1) - Rational::from(1);
        let val = pole_beta_limit(&w, m, 1)
            .scale(&c1)
            .add(&pole_beta_limit(&v, m, 1).scale(&pow2_inv(m + 1)));
        r.add_rhs(&val);
        push(r);
    }
    // (6) alternating-binomial row against the eta-kernel Mellin series
    {
        let g = mellin_eta_series(wmax + 1);
        for n in 1..wmax {
            // weight n + 1
            let mut r = Relation::new(format!("beta.6 n={n}"));
            for k in 0..=n {
                let mut c = binom(n, k);
                if k % 2 == 1 {
                    c = -c;
                }
                r.add_lhs(li(k, n - k, 0, 2), c);
            }
            r.add_rhs(&g[n as usize].scale(&fact(n)));
            push(r);
        }
    }
    // (8) alternating-binomial row with the explicit log-half closed form
    for n in 1..wmax {
        let mut r = Relation::new(format!("beta.8 n={n}"));
        for k in 0..=n {
            let mut c = binom(n, k);
            if k % 2 == 1 {
                c = -c;
            }
            r.add_lhs(li(0, n - k, k, 2), c);
        }
        let mut val = BasisVector::zero();
        for l in 0..=n {
            let c = fact(l) * binom(n, l);
            val = val.add(
                &li_half(l + 1)
                    .mul_monomial(&Monomial::power(Atom::Log2, n - l), &c),
            );
        }
        if n % 2 == 1 {
            val = val.neg();
        }
        r.add_rhs(&val);
        push(r);
    }
    // (9) two-sided log(1+x)/log(1+1/x) relations
    for k in 0..wmax {
        for m in 1..wmax {
            for n in 1..wmax {
                let weight = k + m + n + 1;
                if weight > wmax || m + n + k + 2 > trunc {
                    continue;
                }
                let mut r = Relation::new(format!("beta.9 k={k} m={m} n={n}"));
                for j in 0..=m {
                    let mut c = binom(m, j);
                    if (j + k) % 2 == 1 {
                        c = -c;
                    }
                    r.add_lhs(li(0, j + k, m + n - j, 1), c);
                }
                for j in 0..=n {
                    let mut c = binom(n, j);
                    if j % 2 == 1 {
                        c = -c;
                    }
                    r.add_lhs(li(0, j + k, m + n - j, 1), c);
                }
                let mut val = BasisVector::zero();
                for j in 0..=k {
                    let a_derivs = j + m;
                    let b_derivs = k - j + n;
                    let lim01 = w.coeff(a_derivs + 1, b_derivs);
                    let lim10 = w.coeff(a_derivs, b_derivs + 1);
                    let mut c = binom(k, j) * fact(a_derivs) * fact(b_derivs);
                    if j % 2 == 1 {
                        c = -c;
                    }
                    val = val.add(&lim01.add(&lim10).scale(&c));
                }
                if (m + n) % 2 == 1 {
                    val = val.neg();
                }
                r.add_rhs(&val);
                push(r);
            }
        }
    }
    out
}

/// Series of (1 - 2^(-eps))/eps * (pi eps / sin(pi eps)) around eps = 0;
/// index = derivative order of the eta-kernel Mellin transform at s = 1.
fn mellin_eta_series(trunc: u32) -> Vec<BasisVector> {
    let t = trunc as usize;
    // A(eps) = (1 - 2^-eps)/eps = sum_{k>=0} -(-log2)^{k+1}/(k+1)! eps^k
    let mut a = vec![BasisVector::zero(); t + 1];
    let mut pow = BasisVector::from_int(1);
    let mut fct = Rational::from(1);
    for k in 0..=t {
        pow = pow.mul_monomial(&Monomial::atom(Atom::Log2), &rat(-1, 1));
        fct *= Rational::from(k as u32 + 1);
        a[k] = pow.scale(&(-Rational::from(1) / fct.clone()));
    }
    // B(eps) = pi eps/sin(pi eps) = 1/(sum (-1)^r (pi eps)^{2r}/(2r+1)!)
    let mut sinc = vec![BasisVector::zero(); t + 1];
    sinc[0] = BasisVector::from_int(1);
    let mut r = 1usize;
    while 2 * r <= t {
        let mut q = Rational::from(1);
        for i in 2..=(2 * r + 1) {
            q /= Rational::from(i as u32);
        }
        if r % 2 == 1 {
            q = -q;
        }
        sinc[2 * r] = BasisVector::monomial(Monomial::power(Atom::Pi, 2 * r as u32)).scale(&q);
        r += 1;
    }
    // invert the unit series
    let mut inv = vec![BasisVector::zero(); t + 1];
    inv[0] = BasisVector::from_int(1);
    for k in 1..=t {
        let mut acc = BasisVector::zero();
        for i in 1..=k {
            acc = acc.add(&sinc[i].mul(&inv[k - i]));
        }
        inv[k] = acc.neg();
    }
    // product A * inv
    let mut g = vec![BasisVector::zero(); t + 1];
    for k in 0..=t {
        let mut acc = BasisVector::zero();
        for i in 0..=k {
            acc = acc.add(&a[i].mul(&inv[k - i]));
        }
        g[k] = acc;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop2_1_reproduces_zeta3_and_zeta2() {
        let rels = beta_derivative_relations(3);
        let find = |s: &str| {
            let idx = Index::parse(s).unwrap();
            rels.iter()
                .filter(|r| r.lhs.len() == 1 && r.lhs.contains_key(&idx))
                .map(|r| r.rhs.clone())
                .next()
                .unwrap_or_else(|| panic!("no single relation for {s}"))
        };
        // LI(1,1,0;1) = zeta(3)
        assert_eq!(find("LI(1,1,0;1)"), zeta(3));
        // LI(1,0,0;1) = -pi^2/6
        assert_eq!(find("LI(1,0,0;1)"), zeta(2).neg());
    }

    #[test]
    fn gamma_cancels_everywhere_w5() {
        // the push-closure asserts; just exercise all instances
        let rels = beta_derivative_relations(5);
        assert!(rels.len() > 50);
        for r in &rels {
            assert!(!r.rhs.contains_gamma());
        }
    }
}
