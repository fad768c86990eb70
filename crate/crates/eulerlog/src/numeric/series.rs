//! Evaluation of the Euler-sum families: direct summation of an initial
//! segment plus symbolic tails.
//!
//! Tails are handled through truncated asymptotic expansions in the summation
//! variable (powers n^(-i/2) times powers of ln n). Non-alternating pieces get
//! an Euler-Maclaurin tail, alternating pieces a Boole (Euler-polynomial)
//! tail; alternating-harmonic factors are first split into their limit value
//! plus a parity-signed smooth remainder so every piece is of one of the two
//! shapes.

use rug::ops::Pow;
use rug::{Float, Rational};
use std::collections::BTreeMap;

use super::mpf::bits_for;
use super::polylog::{bernoulli, zeta_f};

/// Truncated expansion sum c_{ij} N^(-i/2) ln^j N. Keys are (half-power i,
/// log-power j) with i >= `min_halfpow` (negative i = growing terms, needed
/// transiently for Stirling series).
#[derive(Debug, Clone)]
pub struct AsymSeries {
    pub prec: u32,
    /// inclusive truncation depth: terms with i > depth are dropped
    pub depth: i32,
    pub terms: BTreeMap<(i32, u32), Float>,
}

impl AsymSeries {
    pub fn zero(prec: u32, depth: i32) -> Self {
        AsymSeries {
            prec,
            depth,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(prec: u32, depth: i32, c: Float) -> Self {
        let mut s = Self::zero(prec, depth);
        s.add_term(0, 0, c);
        s
    }

    pub fn add_term(&mut self, i: i32, j: u32, c: Float) {
        if i > self.depth || c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry((i, j))
            .or_insert_with(|| Float::new(self.prec));
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &AsymSeries) -> AsymSeries {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn neg(&self) -> AsymSeries {
        let mut out = AsymSeries::zero(self.prec, self.depth);
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Float) -> AsymSeries {
        let mut out = AsymSeries::zero(self.prec, self.depth);
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, Float::with_val(self.prec, v * c));
        }
        out
    }

    pub fn mul(&self, other: &AsymSeries) -> AsymSeries {
        let mut out = AsymSeries::zero(self.prec, self.depth);
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                if i1 + i2 > self.depth {
                    continue;
                }
                out.add_term(i1 + i2, j1 + j2, Float::with_val(self.prec, c1 * c2));
            }
        }
        out
    }

    pub fn powu(&self, e: u32) -> AsymSeries {
        let mut out = AsymSeries::constant(self.prec, self.depth, Float::with_val(self.prec, 1));
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// d/dN: N^(-i/2) ln^j -> -(i/2) N^(-i/2-2/2) ln^j + j N^(-i/2-1) ln^(j-1)
    pub fn derivative(&self) -> AsymSeries {
        let mut out = AsymSeries::zero(self.prec, self.depth);
        for (&(i, j), c) in &self.terms {
            let half = Float::with_val(self.prec, Rational::from((-i as i64, 2)));
            out.add_term(i + 2, j, Float::with_val(self.prec, c * &half));
            if j > 0 {
                out.add_term(i + 2, j - 1, Float::with_val(self.prec, c * Float::with_val(self.prec, j)));
            }
        }
        out
    }

    /// int_N^inf of every term; `None` when a non-integrable term
    /// (exponent <= 1) with a non-negligible coefficient is present.
    pub fn integral_to_inf(&self, tol: &Float) -> Option<AsymSeries> {
        let mut out = AsymSeries::zero(self.prec, self.depth);
        for (&(i, j), c) in &self.terms {
            if i <= 2 {
                if c.clone().abs() > *tol {
                    return None;
                }
                continue;
            }
            // int_N^inf x^(-a) ln^j x dx with a = i/2 > 1:
            // recursion I(a,j) = N^(1-a) ln^j N/(a-1) + j/(a-1) I(a, j-1)
            let a_minus_1 = Float::with_val(self.prec, Rational::from((i as i64 - 2, 2)));
            let mut coef = Float::with_val(self.prec, c / &a_minus_1);
            let mut jj = j as i64;
            loop {
                out.add_term(i - 2, jj as u32, coef.clone());
                if jj == 0 {
                    break;
                }
                coef = Float::with_val(self.prec, &coef * Float::with_val(self.prec, jj))
                    / &a_minus_1;
                jj -= 1;
            }
        }
        Some(out)
    }

    pub fn eval(&self, n: &Float) -> Float {
        let prec = self.prec;
        let ln = n.clone().ln();
        let mut out = Float::new(prec);
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            if i != 0 {
                let e = Float::with_val(prec, Rational::from((-i as i64, 2)));
                t *= n.clone().pow(&e);
            }
            if j > 0 {
                t *= ln.clone().pow(j);
            }
            out += t;
        }
        out
    }

    /// substitute N -> c N for integer c >= 1
    pub fn subst_scale(&self, c: u32) -> AsymSeries {
        let prec = self.prec;
        let lnc = Float::with_val(prec, c).ln();
        let mut out = AsymSeries::zero(prec, self.depth);
        for (&(i, j), coef) in &self.terms {
            // (cN)^(-i/2) = c^(-i/2) N^(-i/2); ln(cN)^j = (ln c + ln N)^j
            let e = Float::with_val(prec, Rational::from((-i as i64, 2)));
            let cpow = Float::with_val(prec, c).pow(&e);
            let base = Float::with_val(prec, coef * &cpow);
            let mut binom = Float::with_val(prec, 1);
            for t in 0..=j {
                // C(j, t) ln(c)^(j-t) ln(N)^t
                let term = Float::with_val(prec, &base * &binom) * lnc.clone().pow(j - t);
                out.add_term(i, t, term);
                let upd = Float::with_val(prec, (j - t) as i64)
                    / Float::with_val(prec, t as i64 + 1);
                binom *= upd;
            }
        }
        out
    }

    /// substitute N -> N + a for rational a
    pub fn shift_by(&self, a: &Rational) -> AsymSeries {
        let prec = self.prec;
        let af = Float::with_val(prec, a);
        let mut out = AsymSeries::zero(prec, self.depth);
        // ln(1 + a/N) as a series
        let mut log_corr = AsymSeries::zero(prec, self.depth);
        let mut apow = af.clone();
        let mut r = 1i32;
        while 2 * r <= self.depth {
            let c = Float::with_val(prec, &apow / Float::with_val(prec, r));
            log_corr.add_term(2 * r, 0, if r % 2 == 1 { c } else { -c });
            apow *= &af;
            r += 1;
        }
        for (&(i, j), coef) in &self.terms {
            // (N+a)^(-i/2) = N^(-i/2) (1 + a/N)^(-i/2)
            let mut pow_series =
                AsymSeries::constant(prec, self.depth, Float::with_val(prec, 1));
            {
                let alpha = Rational::from((-i as i64, 2));
                let mut term = Float::with_val(prec, 1);
                let mut r = 1i32;
                let mut alpha_k = Float::with_val(prec, &alpha);
                while 2 * r <= self.depth - i.max(0) {
                    term *= Float::with_val(prec, &alpha_k * &af) / Float::with_val(prec, r);
                    pow_series.add_term(2 * r, 0, term.clone());
                    alpha_k -= 1;
                    r += 1;
                }
            }
            // (ln N + log_corr)^j
            let mut piece = AsymSeries::zero(prec, self.depth);
            let mut binom = Float::with_val(prec, 1);
            let mut corr_pow =
                AsymSeries::constant(prec, self.depth, Float::with_val(prec, 1));
            for t in 0..=j {
                // C(j,t) ln^{j-t} N * log_corr^t
                let mut contrib = corr_pow.scale(&binom);
                contrib = contrib.mul_lnpow(j - t);
                piece = piece.add(&contrib);
                if t < j {
                    let upd = Float::with_val(prec, (j - t) as i64)
                        / Float::with_val(prec, t as i64 + 1);
                    binom *= upd;
                    corr_pow = corr_pow.mul(&log_corr);
                }
            }
            let mut whole = piece.mul(&pow_series).scale(coef);
            whole = whole.shift_halfpow(i);
            out = out.add(&whole);
        }
        out
    }

    fn mul_lnpow(&self, j: u32) -> AsymSeries {
        let mut out = AsymSeries::zero(self.prec, self.depth);
        for (&(i, jj), c) in &self.terms {
            out.add_term(i, jj + j, c.clone());
        }
        out
    }

    fn shift_halfpow(&self, di: i32) -> AsymSeries {
        let mut out = AsymSeries::zero(self.prec, self.depth);
        for (&(i, j), c) in &self.terms {
            out.add_term(i + di, j, c.clone());
        }
        out
    }

    /// exp of a series whose constant part may include c0 + c1 ln N with
    /// 2*c1 an integer (so the result stays in the half-power lattice).
    pub fn exp(&self) -> AsymSeries {
        let prec = self.prec;
        let mut decay = AsymSeries::zero(prec, self.depth);
        let mut c0 = Float::new(prec);
        let mut c1 = Float::new(prec);
        for (&(i, j), c) in &self.terms {
            if i < 0 || (i == 0 && j > 1) {
                panic!("exp: unsupported growing part ({}, {})", i, j);
            }
            if i == 0 && j == 0 {
                c0 = c.clone();
            } else if i == 0 && j == 1 {
                c1 = c.clone();
            } else {
                decay.add_term(i, j, c.clone());
            }
        }
        // N^{c1}: require 2 c1 integral
        let twice = Float::with_val(prec, 2 * c1.clone());
        let rounded = twice.clone().round();
        assert!(
            Float::with_val(prec, &twice - &rounded).abs().to_f64() < 1e-12,
            "exp: ln N coefficient not half-integral"
        );
        let halfpow = -rounded.to_f64() as i32;
        let scale = c0.exp();
        // exp(decay) via Taylor
        let mut out = AsymSeries::constant(prec, self.depth, Float::with_val(prec, 1));
        let mut term = AsymSeries::constant(prec, self.depth, Float::with_val(prec, 1));
        let min_order = decay
            .terms
            .keys()
            .map(|&(i, _)| i.max(1))
            .min()
            .unwrap_or(self.depth + 1);
        let kmax = if min_order > 0 {
            (self.depth / min_order) + 1
        } else {
            1
        };
        for k in 1..=kmax {
            term = term.mul(&decay);
            term = term.scale(&(Float::with_val(prec, 1) / Float::with_val(prec, k)));
            if term.terms.is_empty() {
                break;
            }
            out = out.add(&term);
        }
        out.shift_halfpow(halfpow).scale(&scale)
    }
}

// ---------------------------------------------------------------------------
// factor expansions
// ---------------------------------------------------------------------------

/// Euler-Mascheroni constant.
pub fn euler_gamma(prec: u32) -> Float {
    // gamma = lim H_n - ln n; use MPFR's built-in constant
    Float::with_val(prec, rug::float::Constant::Euler)
}

/// H_{cN}^{(1)} = ln(cN) + gamma + 1/(2cN) - sum B_{2r}/(2r) (cN)^{-2r}
pub fn asym_h1(prec: u32, depth: i32, c: u32) -> AsymSeries {
    let mut s = AsymSeries::zero(prec, depth);
    s.add_term(0, 1, Float::with_val(prec, 1));
    s.add_term(0, 0, euler_gamma(prec));
    s.add_term(2, 0, Float::with_val(prec, Rational::from((1, 2))));
    let mut r = 1i32;
    while 4 * r <= depth {
        let b = bernoulli(2 * r as usize);
        let q = -b / Rational::from(2 * r);
        s.add_term(4 * r, 0, Float::with_val(prec, q));
        r += 1;
    }
    if c == 1 {
        s
    } else {
        s.subst_scale(c)
    }
}

/// H_{cN}^{(k)} = zeta(k) - tail_k(cN) for k >= 2.
pub fn asym_hk(prec: u32, depth: i32, k: u32, c: u32) -> AsymSeries {
    debug_assert!(k >= 2);
    let mut tail = AsymSeries::zero(prec, depth);
    // tail_k(N) = sum_{j>N} j^-k = N^{1-k}/(k-1) - N^-k/2
    //            + sum_r B_{2r}/(2r)! (k)^rise_{2r-1} N^{-k-2r+1}
    tail.add_term(
        2 * (k as i32 - 1),
        0,
        Float::with_val(prec, Rational::from((1u32, k - 1))),
    );
    tail.add_term(2 * k as i32, 0, Float::with_val(prec, Rational::from((-1, 2))));
    let mut r = 1i32;
    while 2 * (k as i32 + 2 * r - 1) <= depth {
        let mut q = bernoulli(2 * r as usize);
        // / (2r)!
        for t in 1..=(2 * r) {
            q /= Rational::from(t);
        }
        // rising factorial k (k+1) ... (k + 2r - 2)
        for t in 0..(2 * r - 1) {
            q *= Rational::from(k as i64 + t as i64);
        }
        tail.add_term(2 * (k as i32 + 2 * r - 1), 0, Float::with_val(prec, q));
        r += 1;
    }
    let tail = if c == 1 { tail } else { tail.subst_scale(c) };
    let mut s = AsymSeries::constant(prec, depth, zeta_f(prec, k));
    s = s.add(&tail.neg());
    s
}

/// Euler polynomial value E_k(0) = -2 (2^{k+1}-1) B_{k+1} / (k+1).
fn euler_poly0(k: usize) -> Rational {
    let b = bernoulli(k + 1);
    let two: Rational = Rational::from(Rational::from(2).pow((k + 1) as u32));
    -Rational::from(2) * (two - Rational::from(1)) * b / Rational::from((k + 1) as u32)
}

/// Boole tail as a series: T(params)(N) = sum_{j >= 1} (-1)^(j-1) h(N + j)
/// = (1/2) sum_k E_k(0)/k! h^(k)(N+1).
pub fn boole_tail_series(h: &AsymSeries) -> AsymSeries {
    let prec = h.prec;
    let mut acc = AsymSeries::zero(prec, h.depth);
    let mut deriv = h.clone();
    let mut k = 0usize;
    loop {
        let e = euler_poly0(k);
        if e != 0 {
            let mut q = e;
            for t in 1..=k {
                q /= Rational::from(t as u32);
            }
            q /= 2;
            acc = acc.add(&deriv.scale(&Float::with_val(prec, q)));
        }
        k += 1;
        if k as i32 > h.depth {
            break;
        }
        deriv = deriv.derivative();
        if deriv.terms.is_empty() {
            break;
        }
    }
    acc.shift_by(&Rational::from(1))
}

/// tilde-harmonic remainder t_k(N) with
/// tilde H_N^(k) = eta(k) + (-1)^(N-1) t_k(N); t_k(N) = sum (-1)^(i-1)(N+i)^-k.
pub fn asym_tilde_tail(prec: u32, depth: i32, k: u32, c: u32) -> AsymSeries {
    let mut f = AsymSeries::zero(prec, depth);
    f.add_term(2 * k as i32, 0, Float::with_val(prec, 1));
    let t = boole_tail_series(&f);
    if c == 1 {
        t.clone()
    } else {
        t.subst_scale(c)
    }
}

/// ln Gamma(c N + a) as an asymptotic series (Stirling), a rational.
pub fn asym_lngamma(prec: u32, depth: i32, c: u32, a: &Rational) -> AsymSeries {
    // start from lnGamma(z) ~ (z - 1/2) ln z - z + ln(2 pi)/2
    //            + sum_r B_{2r} / (2r (2r-1)) z^{1-2r}
    // with z = cN + a; build everything in the half-power lattice.
    let ln_c = Float::with_val(prec, c).ln();
    let af = Float::with_val(prec, a);
    // ln z = ln c + ln N + ln(1 + a/(cN))
    let mut lnz = AsymSeries::zero(prec, depth);
    lnz.add_term(0, 1, Float::with_val(prec, 1));
    lnz.add_term(0, 0, ln_c.clone());
    let ratio = Float::with_val(prec, &af / Float::with_val(prec, c));
    let mut rp = ratio.clone();
    let mut r = 1i32;
    while 2 * r <= depth {
        let term = Float::with_val(prec, &rp / Float::with_val(prec, r));
        lnz.add_term(2 * r, 0, if r % 2 == 1 { term } else { -term });
        rp *= &ratio;
        r += 1;
    }
    // z - 1/2 as a series: c N + (a - 1/2)
    let mut z_m_half = AsymSeries::zero(prec, depth);
    z_m_half.add_term(-2, 0, Float::with_val(prec, c));
    z_m_half.add_term(
        0,
        0,
        Float::with_val(prec, a.clone() - Rational::from((1, 2))),
    );
    let mut out = z_m_half.mul(&lnz);
    // - z
    out.add_term(-2, 0, Float::with_val(prec, -(c as i64)));
    out.add_term(0, 0, -af.clone());
    // + ln(2 pi)/2
    let two_pi: Float = Float::with_val(prec, rug::float::Constant::Pi) * 2u32;
    out.add_term(0, 0, two_pi.ln() / 2u32);
    // + sum_r B_{2r}/(2r(2r-1)) z^(1-2r); z^(1-2r) = (cN)^(1-2r)(1+a/cN)^(1-2r)
    let mut r = 1i32;
    while 2 * (2 * r - 1) <= depth {
        let b = bernoulli(2 * r as usize);
        let q = b / (Rational::from(2 * r) * Rational::from(2 * r - 1));
        // (1 + a/(cN))^(1-2r) series times (cN)^(1-2r)
        let alpha = Rational::from(1 - 2 * r as i64);
        let mut piece = AsymSeries::zero(prec, depth);
        let cpow = Float::with_val(prec, c).pow(Float::with_val(prec, &alpha));
        piece.add_term(2 * (2 * r - 1), 0, cpow);
        // binomial corrections
        let mut term = piece.clone();
        let mut alpha_k = Float::with_val(prec, &alpha);
        let mut t = 1i32;
        while 2 * (2 * r - 1) + 2 * t <= depth {
            let factor = Float::with_val(prec, &alpha_k * &ratio) / Float::with_val(prec, t);
            term = term.scale(&factor).shift_halfpow(2);
            piece = piece.add(&term);
            // rebuild shift: term is already shifted cumulative
            alpha_k -= 1;
            t += 1;
        }
        out = out.add(&piece.scale(&Float::with_val(prec, q)));
        r += 1;
    }
    out
}

/// binom(2N, N)/4^N as an asymptotic series.
pub fn asym_binom_ratio(prec: u32, depth: i32) -> AsymSeries {
    let one = Rational::from(1);
    let g2 = asym_lngamma(prec, depth, 2, &one);
    let g1 = asym_lngamma(prec, depth, 1, &one);
    let ln2 = Float::with_val(prec, rug::float::Constant::Log2);
    let mut lnr = g2.add(&g1.scale(&Float::with_val(prec, -2)));
    // - 2 N ln 2
    lnr.add_term(-2, 0, Float::with_val(prec, -2 * ln2));
    lnr.exp()
}

// ---------------------------------------------------------------------------
// sum specification and evaluation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HFactor {
    /// H_n^(k)
    H(u32),
    /// alternating-harmonic tilde H_n^(k)
    HTilde(u32),
    /// H_{2n}^(k)
    H2(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumWeight {
    None,
    /// 2^-n
    Geometric,
    /// binom(2n,n)/4^n
    Binom,
    /// 4^n/binom(2n,n)
    InvBinom,
    /// (binom(2n,n)/4^n)^2
    BinomSq,
    /// (4^n/binom(2n,n))^2
    InvBinomSq,
}

#[derive(Debug, Clone)]
pub struct SumSpec {
    pub factors: Vec<HFactor>,
    pub outer_neg: bool,
    pub p: u32,
    /// denominator (2n+1)^p instead of n^p
    pub shifted: bool,
    pub weight: SumWeight,
}

pub struct SumResult {
    pub value: Float,
    pub error: Float,
}

/// Evaluate the sum at the requested decimal-digit accuracy.
pub fn sum_eval_spec(spec: &SumSpec, digits: u32) -> SumResult {
    let prec = bits_for(digits + 10);
    match spec.weight {
        SumWeight::Geometric => geometric_direct(spec, prec, digits),
        _ => direct_plus_tail(spec, prec, digits),
    }
}

struct Running {
    h: BTreeMap<u32, Float>,
    htilde: BTreeMap<u32, Float>,
    h2: BTreeMap<u32, Float>,
    binom: Float,
    prec: u32,
}

impl Running {
    fn new(spec: &SumSpec, prec: u32) -> Running {
        let mut h = BTreeMap::new();
        let mut htilde = BTreeMap::new();
        let mut h2 = BTreeMap::new();
        for f in &spec.factors {
            match *f {
                HFactor::H(k) => {
                    h.insert(k, Float::new(prec));
                }
                HFactor::HTilde(k) => {
                    htilde.insert(k, Float::new(prec));
                }
                HFactor::H2(k) => {
                    h2.insert(k, Float::new(prec));
                }
            }
        }
        Running {
            h,
            htilde,
            h2,
            binom: Float::with_val(prec, 1),
            prec,
        }
    }

    fn step(&mut self, n: u64) {
        let prec = self.prec;
        for (k, v) in self.h.iter_mut() {
            *v += Float::with_val(prec, 1) / Float::with_val(prec, n).pow(*k);
        }
        for (k, v) in self.htilde.iter_mut() {
            let t = Float::with_val(prec, 1) / Float::with_val(prec, n).pow(*k);
            if n % 2 == 1 {
                *v += t;
            } else {
                *v -= t;
            }
        }
        for (k, v) in self.h2.iter_mut() {
            *v += Float::with_val(prec, 1) / Float::with_val(prec, 2 * n - 1).pow(*k);
            *v += Float::with_val(prec, 1) / Float::with_val(prec, 2 * n).pow(*k);
        }
        // binom(2n,n)/4^n from previous: ratio (2n-1)/(2n)
        self.binom *= Float::with_val(prec, 2 * n - 1);
        self.binom /= Float::with_val(prec, 2 * n);
    }

    fn term(&self, spec: &SumSpec, n: u64) -> Float {
        let prec = self.prec;
        let mut t = Float::with_val(prec, 1);
        for f in &spec.factors {
            match *f {
                HFactor::H(k) => t *= &self.h[&k],
                HFactor::HTilde(k) => t *= &self.htilde[&k],
                HFactor::H2(k) => t *= &self.h2[&k],
            }
        }
        match spec.weight {
            SumWeight::None => {}
            SumWeight::Geometric => {
                t /= Float::with_val(prec, 2).pow(Float::with_val(prec, n));
            }
            SumWeight::Binom => t *= &self.binom,
            SumWeight::InvBinom => t /= &self.binom,
            SumWeight::BinomSq => {
                t *= &self.binom;
                t *= &self.binom;
            }
            SumWeight::InvBinomSq => {
                t /= &self.binom;
                t /= &self.binom;
            }
        }
        let den = if spec.shifted { 2 * n + 1 } else { n };
        t /= Float::with_val(prec, den).pow(spec.p);
        if spec.outer_neg && n % 2 == 0 {
            t = -t;
        }
        t
    }
}

fn geometric_direct(spec: &SumSpec, prec: u32, digits: u32) -> SumResult {
    let nmax = ((digits as u64 + 30) * 10) / 3 + 40;
    let mut run = Running::new(spec, prec);
    let mut sum = Float::new(prec);
    let mut last = Float::new(prec);
    for n in 1..=nmax {
        run.step(n);
        last = run.term(spec, n);
        sum += &last;
    }
    SumResult {
        value: sum,
        error: last.abs() * 4u32,
    }
}

fn direct_plus_tail(spec: &SumSpec, prec: u32, digits: u32) -> SumResult {
    let depth: i32 = 60;
    let nn: u64 = 400 + 4 * digits as u64;
    let mut run = Running::new(spec, prec);
    let mut direct = Float::new(prec);
    for n in 1..=nn {
        run.step(n);
        direct += run.term(spec, n);
    }
    let nf = Float::with_val(prec, nn);
    let tol = super::mpf::pow10_neg(prec, digits as i64 + 8);

    // base smooth factors
    let mut base = AsymSeries::constant(prec, depth, Float::with_val(prec, 1));
    let mut tilde_ks: Vec<u32> = Vec::new();
    for f in &spec.factors {
        match *f {
            HFactor::H(1) => base = base.mul(&asym_h1(prec, depth, 1)),
            HFactor::H(k) => base = base.mul(&asym_hk(prec, depth, k, 1)),
            HFactor::H2(1) => base = base.mul(&asym_h1(prec, depth, 2)),
            HFactor::H2(k) => base = base.mul(&asym_hk(prec, depth, k, 2)),
            HFactor::HTilde(k) => tilde_ks.push(k),
        }
    }
    // weight factor
    match spec.weight {
        SumWeight::None => {}
        SumWeight::Binom => base = base.mul(&asym_binom_ratio(prec, depth)),
        SumWeight::InvBinom => {
            base = base.mul(&invert_series(&asym_binom_ratio(prec, depth)))
        }
        SumWeight::BinomSq => {
            let r = asym_binom_ratio(prec, depth);
            base = base.mul(&r).mul(&r);
        }
        SumWeight::InvBinomSq => {
            let r = invert_series(&asym_binom_ratio(prec, depth));
            base = base.mul(&r).mul(&r);
        }
        SumWeight::Geometric => unreachable!(),
    }
    // denominator
    let mut denom = AsymSeries::zero(prec, depth);
    denom.add_term(2 * spec.p as i32, 0, Float::with_val(prec, 1));
    if spec.shifted {
        // (2n+1)^-p = 2^-p (n + 1/2)^-p
        denom = denom
            .shift_by(&Rational::from((1, 2)))
            .scale(&Float::with_val(prec, Rational::from(1) / Rational::from(2).pow(spec.p)));
    }
    base = base.mul(&denom);

    // expand tilde factors into eta(k) + (-1)^(n-1) t_k(n) pieces
    let mut pieces: Vec<(bool, AsymSeries)> = vec![(spec.outer_neg, base)];
    for &k in &tilde_ks {
        let eta_k = if k == 1 {
            Float::with_val(prec, rug::float::Constant::Log2)
        } else {
            let factor = Float::with_val(prec, 1)
                - Float::with_val(prec, Rational::from(1) / Rational::from(2).pow(k - 1));
            zeta_f(prec, k) * factor
        };
        let tail = asym_tilde_tail(prec, depth, k, 1);
        let mut next = Vec::new();
        for (alt, s) in pieces {
            next.push((alt, s.scale(&eta_k)));
            next.push((!alt, s.mul(&tail)));
        }
        pieces = next;
    }

    let mut tail_total = Float::new(prec);
    let mut err = Float::new(prec);
    for (alternating, g) in pieces {
        if alternating {
            // sum_{n>N} (-1)^(n-1) g(n) = (-1)^N * B(N), B = boole series
            let b = boole_tail_series(&g);
            let mut v = b.eval(&nf);
            if nn % 2 == 1 {
                v = -v;
            }
            tail_total += v;
            err += tail_err_estimate(&b, &nf);
        } else {
            // Euler-Maclaurin: int - g/2 - sum B_2r/(2r)! g^(2r-1)
            let integral = match g.integral_to_inf(&tol) {
                Some(s) => s,
                None => {
                    // non-integrable piece: signal failure via huge error
                    return SumResult {
                        value: direct,
                        error: Float::with_val(prec, 1),
                    };
                }
            };
            let mut acc = integral;
            acc = acc.add(&g.scale(&Float::with_val(prec, Rational::from((-1, 2)))));
            let mut deriv = g.derivative();
            let mut r = 1i32;
            while 2 * r <= depth {
                let mut q = bernoulli(2 * r as usize);
                for t in 1..=(2 * r) {
                    q /= Rational::from(t);
                }
                acc = acc.add(&deriv.scale(&Float::with_val(prec, -q)));
                deriv = deriv.derivative().derivative();
                if deriv.terms.is_empty() {
                    break;
                }
                r += 1;
            }
            tail_total += acc.eval(&nf);
            err += tail_err_estimate(&acc, &nf);
        }
    }
    SumResult {
        value: direct + tail_total,
        error: err,
    }
}

/// crude error estimate: magnitude of the deepest retained order at N
fn tail_err_estimate(s: &AsymSeries, n: &Float) -> Float {
    let prec = s.prec;
    let deepest = s.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
    let mut e = Float::new(prec);
    let ln = n.clone().ln();
    for (&(i, j), c) in &s.terms {
        if i + 4 >= deepest {
            let t = c.clone().abs()
                * n.clone().pow(Float::with_val(prec, Rational::from((-i as i64, 2))))
                * ln.clone().pow(j);
            e += t;
        }
    }
    e
}

fn invert_series(s: &AsymSeries) -> AsymSeries {
    // s = c * N^a (1 + d); 1/s = (1/c) N^-a (1 - d + d^2 - ...)
    let prec = s.prec;
    let (&(i0, j0), c0) = s.terms.iter().next().expect("invert zero series");
    assert_eq!(j0, 0, "invert: leading term must be log-free");
    let mut d = AsymSeries::zero(prec, s.depth);
    for (&(i, j), c) in s.terms.iter().skip(0) {
        if (i, j) == (i0, j0) {
            continue;
        }
        d.add_term(i - i0, j, Float::with_val(prec, c / c0));
    }
    let mut out = AsymSeries::constant(prec, s.depth, Float::with_val(prec, 1));
    let mut pow = AsymSeries::constant(prec, s.depth, Float::with_val(prec, 1));
    let min_order = d.terms.keys().map(|&(i, _)| i.max(1)).min().unwrap_or(s.depth + 1);
    for k in 1..=(s.depth / min_order + 1) {
        pow = pow.mul(&d);
        if pow.terms.is_empty() {
            break;
        }
        let signed = if k % 2 == 1 { pow.neg() } else { pow.clone() };
        out = out.add(&signed);
    }
    out.shift_halfpow(-i0)
        .scale(&(Float::with_val(prec, 1) / c0))
}

/// Levin u-transform for alternating series, used as an independent
/// cross-check oracle in tests.
pub fn levin_u(terms: &[Float], prec: u32) -> Float {
    let n = terms.len();
    let mut num = vec![Float::new(prec); n];
    let mut den = vec![Float::new(prec); n];
    let mut s = Float::new(prec);
    for (i, t) in terms.iter().enumerate() {
        s += t;
        let omega = Float::with_val(prec, (i as i64 + 1) * t);
        if omega.is_zero() {
            return s;
        }
        num[i] = Float::with_val(prec, &s / &omega);
        den[i] = Float::with_val(prec, 1) / omega;
    }
    for k in 1..n {
        for i in 0..(n - k) {
            // Weniger factor with beta = 1:
            // (i+1) (i+k)^(k-1) / (i+k+1)^k
            let factor = Float::with_val(prec, i as i64 + 1)
                * Float::with_val(prec, (i + k) as i64).pow((k - 1) as u32)
                / Float::with_val(prec, (i + k) as i64 + 1).pow(k as u32);
            num[i] = Float::with_val(prec, &num[i + 1] - Float::with_val(prec, &num[i] * &factor));
            den[i] = Float::with_val(prec, &den[i + 1] - Float::with_val(prec, &den[i] * &factor));
        }
    }
    Float::with_val(prec, &num[0] / &den[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::mpf::pow10_neg;

    fn check(spec: SumSpec, want: impl Fn(u32) -> Float, digits: u32) {
        let r = sum_eval_spec(&spec, digits);
        let prec = r.value.prec();
        let w = want(prec);
        let diff = Float::with_val(prec, &r.value - &w).abs();
        assert!(
            diff < pow10_neg(prec, digits as i64),
            "value {} want {} diff {:?} err-est {:?}",
            r.value.to_f64(),
            w.to_f64(),
            diff.to_f64(),
            r.error.to_f64()
        );
    }

    #[test]
    fn es_1_2_is_2_zeta3() {
        // sum H_n / n^2 = 2 zeta(3)
        check(
            SumSpec {
                factors: vec![HFactor::H(1)],
                outer_neg: false,
                p: 2,
                shifted: false,
                weight: SumWeight::None,
            },
            |prec| zeta_f(prec, 3) * 2,
            42,
        );
    }

    #[test]
    fn es_alt_1_1() {
        // sum (-1)^(n-1) H_n / n = pi^2/12 - log^2(2)/2
        check(
            SumSpec {
                factors: vec![HFactor::H(1)],
                outer_neg: true,
                p: 1,
                shifted: false,
                weight: SumWeight::None,
            },
            |prec| {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                let l2 = Float::with_val(prec, rug::float::Constant::Log2);
                pi.clone() * &pi / 12 - l2.clone() * &l2 / 2
            },
            42,
        );
    }

    #[test]
    fn es_tilde_alt() {
        // sum (-1)^(n-1) tilde-H_n / n = pi^2/12 + log^2(2)/2
        check(
            SumSpec {
                factors: vec![HFactor::HTilde(1)],
                outer_neg: true,
                p: 1,
                shifted: false,
                weight: SumWeight::None,
            },
            |prec| {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                let l2 = Float::with_val(prec, rug::float::Constant::Log2);
                pi.clone() * &pi / 12 + l2.clone() * &l2 / 2
            },
            42,
        );
    }

    #[test]
    fn qes_h2n_alt() {
        // weight-2: sum (-1)^(n-1) H_2n / n = 5 pi^2/48 - log^2(2)/4
        check(
            SumSpec {
                factors: vec![HFactor::H2(1)],
                outer_neg: true,
                p: 1,
                shifted: false,
                weight: SumWeight::None,
            },
            |prec| {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                let l2 = Float::with_val(prec, rug::float::Constant::Log2);
                pi.clone() * &pi * Float::with_val(prec, Rational::from((5, 48)))
                    - l2.clone() * &l2 / 4
            },
            40,
        );
    }

    #[test]
    fn qes2_shifted_denominator() {
        // QES(11;-12): sum (-1)^(n-1) H_n/(2n+1) = pi log(2)/2 - catalan
        check(
            SumSpec {
                factors: vec![HFactor::H(1)],
                outer_neg: true,
                p: 1,
                shifted: true,
                weight: SumWeight::None,
            },
            |prec| {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                let l2 = Float::with_val(prec, rug::float::Constant::Log2);
                let c = Float::with_val(prec, rug::float::Constant::Catalan);
                pi * l2 / 2 - c
            },
            40,
        );
    }

    #[test]
    fn ges_geometric() {
        // GES(1;2) = sum H_n/(n^2 2^n) = zeta(3) - pi^2 log(2)/12
        check(
            SumSpec {
                factors: vec![HFactor::H(1)],
                outer_neg: false,
                p: 2,
                shifted: false,
                weight: SumWeight::Geometric,
            },
            |prec| {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                let l2 = Float::with_val(prec, rug::float::Constant::Log2);
                zeta_f(prec, 3) - pi.clone() * &pi * l2 / 12
            },
            45,
        );
    }

    #[test]
    fn bes_harmonic_free() {
        // BES(0;2) = sum binom/(4^n n^2) = pi^2/6 - 2 log^2 2
        check(
            SumSpec {
                factors: vec![],
                outer_neg: false,
                p: 2,
                shifted: false,
                weight: SumWeight::Binom,
            },
            |prec| {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                let l2 = Float::with_val(prec, rug::float::Constant::Log2);
                pi.clone() * &pi / 6 - l2.clone() * &l2 * 2
            },
            40,
        );
    }

    #[test]
    fn ibes_harmonic_free() {
        // IBES(0;2) = sum 4^n/(binom n^2) = pi^2/2
        check(
            SumSpec {
                factors: vec![],
                outer_neg: false,
                p: 2,
                shifted: false,
                weight: SumWeight::InvBinom,
            },
            |prec| {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                pi.clone() * &pi / 2
            },
            38,
        );
    }

    #[test]
    fn iqbes_value() {
        // IQBES(0;3) = 8 pi C - 14 zeta(3)
        check(
            SumSpec {
                factors: vec![],
                outer_neg: false,
                p: 3,
                shifted: false,
                weight: SumWeight::InvBinomSq,
            },
            |prec| {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                let c = Float::with_val(prec, rug::float::Constant::Catalan);
                pi * c * 8 - zeta_f(prec, 3) * 14
            },
            30,
        );
    }

    #[test]
    fn boole_convention_pins_down() {
        // sum_{n>N} (-1)^(n-1)/n for N=10 vs directly summed reference
        let prec = bits_for(40);
        let depth = 40;
        let mut g = AsymSeries::zero(prec, depth);
        g.add_term(2, 0, Float::with_val(prec, 1));
        let b = boole_tail_series(&g);
        let mut v = b.eval(&Float::with_val(prec, 10));
        // N = 10 even: (-1)^N = +1
        let mut reference = Float::new(prec);
        for n in 11..4000u32 {
            let t = Float::with_val(prec, 1) / n;
            if n % 2 == 1 {
                reference += t;
            } else {
                reference -= t;
            }
        }
        // crude alternating-tail bound makes the reference good to ~1e-7 only,
        // so average consecutive partial sums for convergence
        let mut reference2 = reference.clone();
        reference2 -= Float::with_val(prec, 1) / 4000u32;
        let reference = (reference + reference2) / 2;
        v -= &reference;
        assert!(v.abs() < Float::with_val(prec, 1e-6));
    }

    #[test]
    fn levin_u_log2() {
        let prec = bits_for(30);
        let terms: Vec<Float> = (1..60)
            .map(|n| {
                let t = Float::with_val(prec, 1) / Float::with_val(prec, n);
                if n % 2 == 1 {
                    t
                } else {
                    -t
                }
            })
            .collect();
        let got = levin_u(&terms, prec);
        let want = Float::with_val(prec, rug::float::Constant::Log2);
        let diff = Float::with_val(prec, &got - &want).abs();
        assert!(diff < pow10_neg(prec, 25));
    }
}
