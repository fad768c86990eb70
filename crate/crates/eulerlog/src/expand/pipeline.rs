//! The series-expansion reduction of eligible polylog integrals to Euler
//! sums: reflect the polylog argument into the unit interval or its half,
//! expand every non-invariant factor into its power series, convert the
//! x-integral into moments, then shrink the multiple sum by summing
//! rational-only indices (partial fractions) and by Cauchy-merging index
//! pairs whose convolution stays harmonic, until ordinary Euler sums and
//! geometric Euler sums remain.

use rug::Rational;

use crate::constants::{eta, li_half, rat, zeta, Atom, BasisVector, Monomial};
use crate::expand::moments::{moment_log_pattern, HF};
use crate::forge::SolvedTable;
use crate::index::{AuxIndex, AuxKind, EsIndex, Index, LiIndex, PliIndex};
use crate::linalg::Relation;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("{0} is outside the eligible reduction class")]
    IneligibleInput(String),
}

const MAX_DEPTH: u32 = 24;

fn binom(n: u32, k: u32) -> Rational {
    let mut b = Rational::from(1);
    for t in 0..k {
        b = b * Rational::from(n - t) / Rational::from(t + 1);
    }
    b
}

/// One summation variable: contributes sign^v (1/2)^(geo v) / v^inv
/// times the harmonic factors evaluated at v.
#[derive(Debug, Clone)]
struct VarDep {
    neg: bool,
    geo: bool,
    inv: u32,
    fac: Vec<HF>,
}

/// coef * prod_i dep_i(v_i) * prod tail(J) / J^tail_pow, J = sum v_i + shift.
#[derive(Debug, Clone)]
struct Term {
    coef: BasisVector,
    vars: Vec<VarDep>,
    tail: Vec<HF>,
    tail_pow: u32,
    shift: u32,
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Reduced {
        /// full-weight sum indices with rational coefficients
        terms: Vec<(Rational, Index)>,
        /// everything of lower weight, folded through the value table
        residue: BasisVector,
        trail: Vec<String>,
    },
    Discarded,
}

// ---------------------------------------------------------------------------
// stage A: series units and expansion
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq)]
enum Unit {
    /// log(1-x) = -sum x^v/v
    LogPlain,
    /// log(1+x) = -sum (-1)^v x^v / v
    LogAlt,
    /// log(1-x/2) = -sum x^v/(v 2^v)
    LogGeo,
    /// 1/(1-x) = sum_{v>=0} x^v
    InvPlain,
    /// 1/(1+x) = sum_{v>=0} (-1)^v x^v
    InvAlt,
    /// 1/(1-x/2) = sum_{v>=0} x^v/2^v
    InvGeo,
    /// Li_n(x), Li_n(-x), Li_n(x/2)
    LiPlain(u32),
    LiAlt(u32),
    LiGeo(u32),
}

impl Unit {
    /// (coefficient sign, starts at zero, dependence)
    fn dep(&self) -> (i32, bool, VarDep) {
        let mk = |neg, geo, inv| VarDep {
            neg,
            geo,
            inv,
            fac: vec![],
        };
        match *self {
            Unit::LogPlain => (-1, false, mk(false, false, 1)),
            Unit::LogAlt => (-1, false, mk(true, false, 1)),
            Unit::LogGeo => (-1, false, mk(false, true, 1)),
            Unit::InvPlain => (1, true, mk(false, false, 0)),
            Unit::InvAlt => (1, true, mk(true, false, 0)),
            Unit::InvGeo => (1, true, mk(false, true, 0)),
            Unit::LiPlain(n) => (1, false, mk(false, false, n)),
            Unit::LiAlt(n) => (1, false, mk(true, false, n)),
            Unit::LiGeo(n) => (1, false, mk(false, true, n)),
        }
    }
}

/// an integrand piece after the reflection/invariant choices:
/// coef * log2^log2_pow * prod units * log^inv_m(x) log^inv_n(1-x) * x^(x_shift)
#[derive(Debug, Clone)]
struct Branch {
    coef: Rational,
    log2_pow: u32,
    units: Vec<Unit>,
    inv_m: u32,
    inv_n: u32,
    x_shift: i32,
    /// exact value contributed by split-off known integrals
    constant: BasisVector,
    note: String,
}

fn expand_units(b: &Branch) -> Option<Vec<Term>> {
    let moments = moment_log_pattern(b.inv_m, b.inv_n)?;
    let mut bases: Vec<(Rational, Vec<VarDep>)> = vec![(b.coef.clone(), Vec::new())];
    for u in &b.units {
        let (sgn, start0, dep) = u.dep();
        let mut next = Vec::new();
        for (c, vars) in &bases {
            let mut c2 = c.clone();
            if sgn < 0 {
                c2 = -c2;
            }
            let mut v2 = vars.clone();
            v2.push(dep.clone());
            next.push((c2, v2));
            if start0 {
                // the v = 0 term of the series contributes the constant 1
                next.push((c.clone(), vars.clone()));
            }
        }
        bases = next;
    }
    let shift_i = b.x_shift + 1;
    if shift_i < 0 {
        return None;
    }
    let shift = shift_i as u32;
    let mut out = Vec::new();
    for (c, vars) in bases {
        if shift == 0 && vars.iter().all(|d| d.inv == 0 && d.fac.is_empty()) {
            // would integrate x^-1 against pure geometric series; the
            // eligible class never produces this
            return None;
        }
        for mt in &moments {
            let mut coef = mt.coef.scale(&c);
            let mut vars = vars.clone();
            let mut tail = mt.factors.clone();
            tail.sort();
            if mt.alt {
                // (-1)^(J-1) with J = sum v + shift
                if (shift as i32 - 1).rem_euclid(2) == 1 {
                    coef = coef.neg();
                }
                for v in vars.iter_mut() {
                    v.neg = !v.neg;
                }
            }
            out.push(Term {
                coef,
                vars,
                tail,
                tail_pow: mt.q,
                shift,
            });
        }
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// partial fractions over two poles
// ---------------------------------------------------------------------------

/// 1/(x^a (x+R)^q) = sum alpha_i/x^i + sum beta_i/(x+R)^i with the listed
/// (power i, pole-at-zero?, R exponent, rational coefficient).
fn pfrac_two_poles(a: u32, q: u32) -> Vec<(u32, bool, u32, Rational)> {
    let mut out = Vec::new();
    for i in 1..=a {
        let mut c = binom(a + q - i - 1, q - 1);
        if (a - i) % 2 == 1 {
            c = -c;
        }
        out.push((i, true, a + q - i, c));
    }
    for i in 1..=q {
        let mut c = binom(a + q - i - 1, a - 1);
        if a % 2 == 1 {
            c = -c;
        }
        out.push((i, false, a + q - i, c));
    }
    out
}

// ---------------------------------------------------------------------------
// reduction moves
// ---------------------------------------------------------------------------

/// R1: sum out a harmonic-free non-geometric variable against a rational
/// tail. The tail gains harmonic factors of the remaining composite index.
fn sum_rational_var(t: &Term, vi: usize) -> Option<Vec<Term>> {
    let dep = &t.vars[vi];
    if !dep.fac.is_empty() || dep.geo || !t.tail.is_empty() || dep.inv == 0 {
        return None;
    }
    let others: Vec<VarDep> = t
        .vars
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != vi)
        .map(|(_, d)| d.clone())
        .collect();
    if others.is_empty() && t.shift == 0 {
        return None;
    }
    if t.tail_pow == 0 {
        return None; // the variable alone would give a zeta value times a
                     // divergent leftover; outside the eligible shapes
    }
    let a = dep.inv;
    let q = t.tail_pow;
    let pieces = pfrac_two_poles(a, q);
    let mut out: Vec<Term> = Vec::new();
    let mk = |coef: BasisVector, vars: Vec<VarDep>, tail: Vec<HF>, tail_pow: u32| Term {
        coef,
        vars,
        tail,
        tail_pow,
        shift: t.shift,
    };
    if !dep.neg {
        let mut h1 = Rational::new();
        for (i, at_zero, rpow, c) in &pieces {
            if *i == 1 {
                // the 1/j and 1/(j+R) simple poles pair into H_R
                if *at_zero {
                    h1 += c.clone();
                }
                continue;
            }
            if *at_zero {
                out.push(mk(
                    t.coef.mul(&zeta(*i)).scale(c),
                    others.clone(),
                    vec![],
                    *rpow,
                ));
            } else {
                out.push(mk(
                    t.coef.mul(&zeta(*i)).scale(c),
                    others.clone(),
                    vec![],
                    *rpow,
                ));
                out.push(mk(
                    t.coef.scale(&(-c.clone())),
                    others.clone(),
                    vec![HF::Plain(*i)],
                    *rpow,
                ));
            }
        }
        if h1 != 0 {
            out.push(mk(
                t.coef.scale(&h1),
                others.clone(),
                vec![HF::Plain(1)],
                a + q - 1,
            ));
        }
    } else {
        // alternating variable: contributes (-1)^j
        for (i, at_zero, rpow, c) in &pieces {
            if *at_zero {
                // sum (-1)^j/j^i = -eta(i)
                out.push(mk(
                    t.coef.mul(&eta(*i)).scale(&(-c.clone())),
                    others.clone(),
                    vec![],
                    *rpow,
                ));
            } else {
                // sum (-1)^j/(j+R)^i = (-1)^R (tildeH^(i)_R - eta(i))
                let mut coef_h = t.coef.scale(c);
                let mut coef_e = t.coef.mul(&eta(*i)).scale(&(-c.clone()));
                if t.shift % 2 == 1 {
                    coef_h = coef_h.neg();
                    coef_e = coef_e.neg();
                }
                let flipped: Vec<VarDep> = others
                    .iter()
                    .map(|d| {
                        let mut d2 = d.clone();
                        d2.neg = !d2.neg;
                        d2
                    })
                    .collect();
                out.push(mk(coef_h, flipped.clone(), vec![HF::Tilde(*i)], *rpow));
                out.push(mk(coef_e, flipped, vec![], *rpow));
            }
        }
    }
    Some(out)
}

/// R2: Cauchy-merge two harmonic-free variables with matching geometric
/// weight. With sigma = s1 s2 the convolution over v + w = m expands into
/// harmonic partial sums P^sigma at m.
fn merge_pair(t: &Term, vi: usize, wi: usize) -> Option<Vec<Term>> {
    let (d1, d2) = (&t.vars[vi], &t.vars[wi]);
    if !d1.fac.is_empty() || !d2.fac.is_empty() || d1.geo != d2.geo {
        return None;
    }
    // with composite-index harmonics present, the final-Cauchy move only
    // applies when they sit exactly at the merged index (a final double sum
    // with no shift); otherwise mixed-argument harmonic products arise and
    // the branch is abandoned
    if !t.tail.is_empty() && !(t.vars.len() == 2 && t.shift == 0) {
        return None;
    }
    let geo = d1.geo;
    let others: Vec<VarDep> = t
        .vars
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != vi && *i != wi)
        .map(|(_, d)| d.clone())
        .collect();
    let sigma_neg = d1.neg ^ d2.neg;
    let hf = |i: u32| if sigma_neg { HF::Tilde(i) } else { HF::Plain(i) };
    let sigma_scalar = |c: BasisVector| if sigma_neg { c.neg() } else { c };
    let mut out = Vec::new();
    let mut push = |coef: BasisVector, neg: bool, inv: u32, fac: Vec<HF>| {
        let mut vars = others.clone();
        vars.push(VarDep { neg, geo, inv, fac });
        out.push(Term {
            coef,
            vars,
            tail: t.tail.clone(),
            tail_pow: t.tail_pow,
            shift: t.shift,
        });
    };
    match (d1.inv, d2.inv) {
        (0, 0) => return None, // nothing to gain
        (a, 0) | (0, a) => {
            // C(m) = sum_{v=1}^{m-1} sigma^v/v^a weighted by s_outer^m
            //      = s_outer^m sigma (P^sigma_m(a) - sigma^(m-1)/m^a)
            let s_outer = if d1.inv == 0 { d1.neg } else { d2.neg };
            push(sigma_scalar(t.coef.clone()), s_outer, 0, vec![hf(a)]);
            let corr_neg = s_outer ^ sigma_neg;
            push(t.coef.neg(), corr_neg, a, vec![]);
        }
        (a, b) => {
            // convolution over v + w = m (v, w >= 1):
            // 1/(v^a (m-v)^b) = sum_i C(a+b-i-1, b-1)/(m^(a+b-i) v^i)
            //                 + sum_i C(a+b-i-1, a-1)/(m^(a+b-i) (m-v)^i),
            // and the inner partial sums P^sigma_{m-1} = P^sigma_m - sigma^(m-1)/m^i.
            let w = a + b;
            let mut pieces: Vec<(u32, bool, Rational)> = Vec::new();
            for i in 1..=a {
                pieces.push((i, true, binom(w - i - 1, b - 1)));
            }
            for i in 1..=b {
                pieces.push((i, false, binom(w - i - 1, a - 1)));
            }
            for (i, from_first, c) in pieces {
                let s_outer = if from_first { d2.neg } else { d1.neg };
                let main = sigma_scalar(t.coef.scale(&c));
                push(main, s_outer, w - i, vec![hf(i)]);
                // correction term: sign weight s_outer^m sigma^m = (the other
                // side's sign), coefficient -c
                let corr_neg = s_outer ^ sigma_neg;
                push(t.coef.scale(&(-c.clone())), corr_neg, w, vec![]);
            }
        }
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// terminal single sums
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct SingleSum {
    coef: BasisVector,
    neg: bool,
    geo: bool,
    /// harmonic factors with argument j + shift
    fac: Vec<(HF, u32)>,
    /// denominator poles (shift, power)
    poles: Vec<(u32, u32)>,
}

/// exact H value at a small fixed argument
fn hval(f: &HF, n: u32) -> Rational {
    let (k, alt) = match f {
        HF::Plain(k) => (*k, false),
        HF::Tilde(k) => (*k, true),
    };
    let mut acc = Rational::new();
    for j in 1..=n {
        let mut term = Rational::from(1);
        for _ in 0..k {
            term /= Rational::from(j);
        }
        if alt && j % 2 == 0 {
            term = -term;
        }
        acc += term;
    }
    acc
}

/// collect the pure single sums: coef * sum_{j>=1} s^j g^j prod H(j) / j^p
fn emit_pure(
    coef: BasisVector,
    neg: bool,
    geo: bool,
    fac: &[HF],
    p: u32,
    out: &mut Vec<(BasisVector, Index)>,
) -> bool {
    let mut plain = Vec::new();
    let mut tilde = Vec::new();
    for f in fac {
        match f {
            HF::Plain(k) => plain.push(*k),
            HF::Tilde(k) => tilde.push(*k),
        }
    }
    plain.sort_unstable();
    tilde.sort_unstable();
    // s^j = s * s^(j-1)
    let coef = if neg { coef.neg() } else { coef };
    if geo {
        if neg || !tilde.is_empty() {
            return false;
        }
        if plain.is_empty() {
            if p == 0 {
                // sum 2^-j = 1
                out.push((coef, Index::Extra("__value__".into())));
            } else {
                out.push((coef.mul(&li_half(p)), Index::Extra("__value__".into())));
            }
            return true;
        }
        let idx = Index::Aux(AuxIndex {
            kind: AuxKind::Ges,
            a: plain,
            p,
        });
        out.push((coef, idx));
        return true;
    }
    if plain.is_empty() && tilde.is_empty() {
        if (!neg && p < 2) || p < 1 {
            return false;
        }
        let v = if neg { eta(p) } else { zeta(p) };
        out.push((coef.mul(&v), Index::Extra("__value__".into())));
        return true;
    }
    let idx = Index::Es(EsIndex {
        plain,
        tilde,
        outer_neg: neg,
        p,
    });
    if !idx.is_convergent() {
        return false;
    }
    out.push((coef, idx));
    true
}

fn reduce_single(
    s: SingleSum,
    depth: u32,
    out: &mut Vec<(BasisVector, Index)>,
) -> bool {
    if depth > MAX_DEPTH {
        return false;
    }
    if s.coef.is_zero() {
        return true;
    }
    // normalize poles
    let mut pole_map = std::collections::BTreeMap::<u32, u32>::new();
    for (sh, c) in &s.poles {
        if *c > 0 {
            *pole_map.entry(*sh).or_insert(0) += c;
        }
    }
    let poles: Vec<(u32, u32)> = pole_map.into_iter().collect();
    if poles.len() > 1 {
        // partial fractions over the two outermost poles (constant gap)
        let (s0, c0) = poles[0];
        let (s1, c1) = poles[1];
        let gap = s1 - s0;
        let pieces = pfrac_two_poles(c0, c1);
        // in a plain non-geometric sum the two simple-pole pieces diverge
        // individually; their coefficients cancel and the pair telescopes
        let pair_simple = !s.geo && !s.neg && poles.len() == 2;
        if pair_simple {
            let a1: Rational = pieces
                .iter()
                .filter(|(i, at_zero, _, _)| *i == 1 && *at_zero)
                .map(|(_, _, _, c)| c.clone())
                .sum();
            if a1 != 0 {
                if !s.fac.is_empty() {
                    return false; // harmonic-weighted telescoping escapes the family
                }
                // coef * a1/gap^(c0+c1-1) * sum_j (1/(j+s0) - 1/(j+s1))
                let mut scalefac = a1;
                for _ in 0..(c0 + c1 - 1) {
                    scalefac /= Rational::from(gap);
                }
                let mut tele = Rational::new();
                for t in (s0 + 1)..=s1 {
                    tele += Rational::from((1u32, t));
                }
                out.push((
                    s.coef.scale(&(scalefac * tele)),
                    Index::Extra("__value__".into()),
                ));
            }
        }
        for (i, at_zero, rpow, c) in pieces {
            if pair_simple && i == 1 {
                continue;
            }
            let mut scalefac = c;
            for _ in 0..rpow {
                scalefac /= Rational::from(gap);
            }
            let mut s2 = s.clone();
            s2.coef = s.coef.scale(&scalefac);
            s2.poles = poles[2..].to_vec();
            s2.poles.push(if at_zero { (s0, i) } else { (s1, i) });
            if !reduce_single(s2, depth + 1, out) {
                return false;
            }
        }
        return true;
    }
    let (pole_shift, pole_pow) = poles.first().copied().unwrap_or((0, 0));
    // without a pole the sum only converges in the geometric case
    if pole_pow == 0 && !s.geo {
        return false;
    }
    // move every harmonic factor to the pole shift
    if let Some(pos) = s.fac.iter().position(|&(_, d)| d != pole_shift) {
        let (f, d) = s.fac[pos];
        let k = match f {
            HF::Plain(k) | HF::Tilde(k) => k,
        };
        if d > pole_shift {
            // downshift: H_{j+d} = H_{j+d-1} + (sign) / (j+d)^k
            let mut s1 = s.clone();
            s1.fac[pos] = (f, d - 1);
            let mut s2 = s.clone();
            s2.fac.remove(pos);
            s2.poles.push((d, k));
            if let HF::Tilde(_) = f {
                // (-1)^(j+d-1): fold into the sign flag
                s2.neg = !s2.neg;
                if d % 2 == 0 {
                    s2.coef = s2.coef.neg();
                }
            }
            return reduce_single(s1, depth + 1, out) && reduce_single(s2, depth + 1, out);
        } else {
            // upshift: H_{j+d} = H_{j+d+1} - (sign) / (j+d+1)^k
            let mut s1 = s.clone();
            s1.fac[pos] = (f, d + 1);
            let mut s2 = s.clone();
            s2.fac.remove(pos);
            s2.poles.push((d + 1, k));
            s2.coef = s2.coef.neg();
            if let HF::Tilde(_) = f {
                s2.neg = !s2.neg;
                if (d + 1) % 2 == 0 {
                    s2.coef = s2.coef.neg();
                }
            }
            return reduce_single(s1, depth + 1, out) && reduce_single(s2, depth + 1, out);
        }
    }
    // everything sits at the pole shift; reindex j' = j + pole_shift
    if pole_shift == 0 {
        let fac: Vec<HF> = s.fac.iter().map(|&(f, _)| f).collect();
        return emit_pure(s.coef, s.neg, s.geo, &fac, pole_pow, out);
    }
    let sh = pole_shift;
    let mut coef = s.coef.clone();
    // s^j = s^(j') s^(-sh), 2^-j = 2^(sh) 2^-j'
    if s.neg && sh % 2 == 1 {
        coef = coef.neg();
    }
    if s.geo {
        let mut f = Rational::from(1);
        f <<= sh;
        coef = coef.scale(&f);
    }
    let fac: Vec<HF> = s.fac.iter().map(|&(f, _)| f).collect();
    // full sum from j' = 1 minus the initial segment j' = 1..sh
    for jp in 1..=sh {
        let mut v = coef.clone();
        for f in &fac {
            let h = hval(f, jp);
            if h == 0 {
                v = BasisVector::zero();
                break;
            }
            v = v.scale(&h);
        }
        if v.is_zero() {
            continue;
        }
        let mut q = Rational::from(1);
        for _ in 0..pole_pow {
            q /= Rational::from(jp);
        }
        if s.neg && jp % 2 == 1 {
            q = -q;
        }
        if s.geo {
            for _ in 0..jp {
                q /= 2;
            }
        }
        out.push((v.scale(&q).neg(), Index::Extra("__value__".into())));
    }
    emit_pure(coef, s.neg, s.geo, &fac, pole_pow, out)
}

// ---------------------------------------------------------------------------
// the reduction search
// ---------------------------------------------------------------------------

fn reduce_term(t: &Term, depth: u32, out: &mut Vec<(BasisVector, Index)>) -> bool {
    if depth > MAX_DEPTH {
        return false;
    }
    if t.coef.is_zero() {
        return true;
    }
    if t.vars.is_empty() {
        // constant index J = shift
        if t.shift == 0 {
            return t.tail_pow == 0 && t.tail.is_empty();
        }
        let mut v = t.coef.clone();
        for f in &t.tail {
            let h = hval(f, t.shift);
            v = v.scale(&h);
        }
        let mut q = Rational::from(1);
        for _ in 0..t.tail_pow {
            q /= Rational::from(t.shift);
        }
        out.push((v.scale(&q), Index::Extra("__value__".into())));
        return true;
    }
    if t.vars.len() == 1 {
        let d = &t.vars[0];
        let mut fac: Vec<(HF, u32)> = d.fac.iter().map(|&f| (f, 0)).collect();
        for f in &t.tail {
            fac.push((*f, t.shift));
        }
        let mut poles = Vec::new();
        if d.inv > 0 {
            poles.push((0, d.inv));
        }
        if t.tail_pow > 0 {
            poles.push((t.shift, t.tail_pow));
        }
        let single = SingleSum {
            coef: t.coef.clone(),
            neg: d.neg,
            geo: d.geo,
            fac,
            poles,
        };
        let mut local = Vec::new();
        if reduce_single(single, depth, &mut local) {
            out.append(&mut local);
            return true;
        }
        return false;
    }
    // R1 on each candidate variable
    for vi in 0..t.vars.len() {
        if let Some(next) = sum_rational_var(t, vi) {
            let mut local = Vec::new();
            if next.iter().all(|nt| reduce_term(nt, depth + 1, &mut local)) {
                out.append(&mut local);
                return true;
            }
        }
    }
    // R2 merges
    for vi in 0..t.vars.len() {
        for wi in (vi + 1)..t.vars.len() {
            if let Some(next) = merge_pair(t, vi, wi) {
                let mut local = Vec::new();
                if next.iter().all(|nt| reduce_term(nt, depth + 1, &mut local)) {
                    out.append(&mut local);
                    return true;
                }
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// eligibility and step-1/step-2 branching
// ---------------------------------------------------------------------------

fn branch_sets(pli: &PliIndex, values: &SolvedTable) -> Option<Vec<Vec<Branch>>> {
    if pli.polylogs.len() != 1 {
        return None;
    }
    let (n8, k) = pli.polylogs[0];
    let n = n8 as u32;
    if !(1..=3).contains(&k) {
        return None;
    }
    let [a0, a1, a2] = pli.a;
    let p = pli.p;
    let mut alts: Vec<Vec<Branch>> = Vec::new();

    // direct expansion in x-land
    let mut keep = |li_unit: Unit, alts: &mut Vec<Vec<Branch>>| {
        for inv_n in 0..=a0.min(2) {
            let mut units = vec![li_unit];
            for _ in 0..a2 {
                units.push(Unit::LogAlt);
            }
            for _ in 0..(a0 - inv_n) {
                units.push(Unit::LogPlain);
            }
            let mut x_shift = 0;
            match p {
                0 => units.push(Unit::InvPlain),
                1 => x_shift = -1,
                _ => units.push(Unit::InvAlt),
            }
            alts.push(vec![Branch {
                coef: rat(1, 1),
                log2_pow: 0,
                units,
                inv_m: a1,
                inv_n,
                x_shift,
                constant: BasisVector::zero(),
                note: format!("direct, invariant log(1-x)^{inv_n}"),
            }]);
        }
    };

    // t = 1-x land: the polylog argument becomes t or t/2; the kernels map
    // log(1-x) -> log t (invariant), log x -> log(1-t), log(1+x) ->
    // log2 + log(1-t/2); denominators 1-x -> t, x -> 1-t, 1+x -> 2(1-t/2)
    let reflected = |li_unit: Unit, outer_coef: Rational, constant: BasisVector,
                     alts: &mut Vec<Vec<Branch>>| {
        for inv_n in 0..=a1.min(2) {
            let mut branches = Vec::new();
            for j in 0..=a2 {
                let mut units = vec![li_unit];
                for _ in 0..(a1 - inv_n) {
                    units.push(Unit::LogPlain);
                }
                for _ in 0..j {
                    units.push(Unit::LogGeo);
                }
                let mut coef = outer_coef.clone() * binom(a2, j);
                let mut x_shift = 0;
                match p {
                    0 => x_shift = -1,
                    1 => units.push(Unit::InvPlain),
                    _ => {
                        coef /= 2;
                        units.push(Unit::InvGeo);
                    }
                }
                branches.push(Branch {
                    coef,
                    log2_pow: a2 - j,
                    units,
                    inv_m: a0,
                    inv_n,
                    x_shift,
                    constant: BasisVector::zero(),
                    note: format!("reflected, log2^{} piece, invariant n'={inv_n}", a2 - j),
                });
            }
            if let Some(first) = branches.first_mut() {
                first.constant = constant.clone();
            }
            alts.push(branches);
        }
    };

    match k {
        2 => keep(Unit::LiAlt(n), &mut alts),
        3 => reflected(
            Unit::LiGeo(n),
            rat(1, 1),
            BasisVector::zero(),
            &mut alts,
        ),
        1 => {
            keep(Unit::LiPlain(n), &mut alts);
            if n == 2 {
                // Li2(x) = zeta(2) - log x log(1-x) - Li2(1-x); the first two
                // pieces are known log integrals of the same weight
                let base = Index::Li(LiIndex {
                    a: [a0, a1, a2],
                    p,
                });
                let loglog = Index::Li(LiIndex {
                    a: [a0 + 1, a1 + 1, a2],
                    p,
                });
                if let (Some(vb), Some(vl)) = (values.get(&base), values.get(&loglog)) {
                    let constant = zeta(2).mul(vb).sub(vl);
                    reflected(Unit::LiPlain(2), rat(-1, 1), constant, &mut alts);
                }
            }
        }
        _ => return None,
    }
    Some(alts)
}

/// Reduce an eligible weight-5 polylog integral to Euler-sum terms. `values`
/// must contain the closed forms consumed along the way (the solved log
/// integrals; and for [`pipeline_value`], the Euler-sum corpus).
pub fn pipeline_reduce(
    pli: &PliIndex,
    values: &SolvedTable,
) -> Result<Outcome, PipelineError> {
    let idx = Index::Pli(pli.clone());
    if idx.weight() != 5 {
        return Err(PipelineError::IneligibleInput(idx.to_string()));
    }
    let alts = branch_sets(pli, values)
        .ok_or_else(|| PipelineError::IneligibleInput(idx.to_string()))?;
    'alt: for branches in alts {
        let mut collected: Vec<(BasisVector, Index)> = Vec::new();
        let mut residue = BasisVector::zero();
        let mut trail = Vec::new();
        for b in &branches {
            residue = residue.add(&b.constant);
            let terms = match expand_units(b) {
                Some(ts) => ts,
                None => continue 'alt,
            };
            trail.push(b.note.clone());
            let mut local = Vec::new();
            for t in &terms {
                if !reduce_term(t, 0, &mut local) {
                    continue 'alt;
                }
            }
            if b.log2_pow > 0 {
                let m = Monomial::power(Atom::Log2, b.log2_pow);
                for (c, _) in local.iter_mut() {
                    *c = c.mul_monomial(&m, &rat(1, 1));
                }
            }
            collected.append(&mut local);
        }
        // assemble
        let mut agg: std::collections::BTreeMap<Index, Rational> = Default::default();
        let mut folded = residue;
        let value_marker = Index::Extra("__value__".into());
        let mut ok = true;
        for (c, i) in collected {
            if i == value_marker {
                folded = folded.add(&c);
                continue;
            }
            let rational_c =
                c.0.len() == 1 && c.0.keys().next().unwrap().0.is_empty();
            if rational_c && i.weight() == 5 {
                let q = c.0.values().next().unwrap().clone();
                let e = agg.entry(i).or_insert_with(Rational::new);
                *e += q;
            } else {
                match values.get(&i) {
                    Some(v) => folded = folded.add(&c.mul(v)),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if !ok {
            continue 'alt;
        }
        let terms: Vec<(Rational, Index)> = agg
            .into_iter()
            .filter(|(_, q)| *q != 0)
            .map(|(i, q)| (q, i))
            .collect();
        return Ok(Outcome::Reduced {
            terms,
            residue: folded,
            trail,
        });
    }
    Ok(Outcome::Discarded)
}

/// Exact value of a successful reduction through the sum-value table.
pub fn pipeline_value(outcome: &Outcome, values: &SolvedTable) -> Option<BasisVector> {
    match outcome {
        Outcome::Discarded => None,
        Outcome::Reduced {
            terms, residue, ..
        } => {
            let mut v = residue.clone();
            for (q, i) in terms {
                v = v.add(&values.get(i)?.scale(q));
            }
            Some(v)
        }
    }
}

/// The reduction as a linear relation between the integral and the sums.
pub fn pipeline_relation(pli: &PliIndex, values: &SolvedTable) -> Option<Relation> {
    match pipeline_reduce(pli, values).ok()? {
        Outcome::Discarded => None,
        Outcome::Reduced {
            terms, residue, ..
        } => {
            let mut r = Relation::new(format!("pipeline {}", Index::Pli(pli.clone())));
            r.add_lhs(Index::Pli(pli.clone()), Rational::from(1));
            for (q, i) in terms {
                r.add_lhs(i, -q);
            }
            r.add_rhs(&residue);
            Some(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::mpf::bits_for;
    use rug::ops::Pow;
    use rug::Float;

    /// brute-force a Term by nested summation (coarse but unbiased)
    fn brute(t: &Term, n: u64, prec: u32) -> Float {
        // harmonic tables
        let maxarg = (n as usize) * t.vars.len().max(1) + t.shift as usize + 2;
        let mut hp: Vec<Vec<Float>> = vec![vec![Float::new(prec); maxarg + 1]; 5];
        let mut ht: Vec<Vec<Float>> = vec![vec![Float::new(prec); maxarg + 1]; 5];
        for k in 1..=4usize {
            for j in 1..=maxarg {
                let term = Float::with_val(prec, 1) / Float::with_val(prec, j as u64).pow(k as u32);
                hp[k][j] = Float::with_val(prec, &hp[k][j - 1] + &term);
                ht[k][j] = Float::with_val(prec, &ht[k][j - 1] + if j % 2 == 1 { term } else { -term });
            }
        }
        let hf = |f: &HF, arg: usize| -> Float {
            match f {
                HF::Plain(k) => hp[*k as usize][arg].clone(),
                HF::Tilde(k) => ht[*k as usize][arg].clone(),
            }
        };
        let coefv = crate::numeric::eval_vector(&t.coef, 25).value;
        let mut total = Float::new(prec);
        let nvars = t.vars.len();
        let mut idx = vec![1u64; nvars];
        loop {
            // evaluate this tuple
            let mut v = Float::with_val(prec, &coefv);
            let mut jsum = t.shift as u64;
            for (d, &val) in t.vars.iter().zip(idx.iter()) {
                jsum += val;
                if d.neg && val % 2 == 1 {
                    v = -v;
                }
                if d.geo {
                    v /= Float::with_val(prec, 2).pow(val as u32);
                }
                if d.inv > 0 {
                    v /= Float::with_val(prec, val).pow(d.inv);
                }
                for f in &d.fac {
                    v *= hf(f, val as usize);
                }
            }
            for f in &t.tail {
                v *= hf(f, jsum as usize);
            }
            if t.tail_pow > 0 {
                v /= Float::with_val(prec, jsum).pow(t.tail_pow);
            }
            total += v;
            // advance
            let mut pos = 0;
            loop {
                if pos == nvars {
                    return total;
                }
                idx[pos] += 1;
                if idx[pos] <= n {
                    break;
                }
                idx[pos] = 1;
                pos += 1;
            }
            if nvars == 0 {
                return total;
            }
        }
    }

    fn eval_reduced(pairs: &[(BasisVector, Index)], digits: u32) -> Float {
        let prec = bits_for(digits);
        let mut total = Float::new(prec);
        for (c, i) in pairs {
            let cv = crate::numeric::eval_vector(c, digits).value;
            if *i == Index::Extra("__value__".into()) {
                total += cv;
            } else {
                let sv = crate::numeric::sum_eval(i, digits).unwrap().value;
                total += Float::with_val(prec, &cv * &sv);
            }
        }
        total
    }

    fn check_term(t: &Term, tol: f64) {
        let prec = bits_for(25);
        let mut out = Vec::new();
        assert!(reduce_term(t, 0, &mut out), "reduction failed");
        let reduced = eval_reduced(&out, 25);
        let n = match t.vars.len() {
            0 | 1 => 4000,
            2 => 700,
            _ => 100,
        };
        let direct = brute(t, n, prec);
        let diff = Float::with_val(prec, &reduced - &direct).abs().to_f64();
        assert!(
            diff < tol,
            "mismatch: reduced {} direct {} (diff {diff:.3e}) for {t:?}",
            reduced.to_f64(),
            direct.to_f64()
        );
    }

    fn v(neg: bool, geo: bool, inv: u32, fac: Vec<HF>) -> VarDep {
        VarDep { neg, geo, inv, fac }
    }

    #[test]
    fn r1_two_vars_rational_tail() {
        // sum_{j,k} 1/j^2 (-1)^k / k * 1/(j+k+1)^2
        let t = Term {
            coef: BasisVector::from_int(1),
            vars: vec![v(false, false, 2, vec![]), v(true, false, 1, vec![])],
            tail: vec![],
            tail_pow: 2,
            shift: 1,
        };
        check_term(&t, 1e-4);
    }

    #[test]
    fn r1_alternating_var() {
        // sum_{j,k} (-1)^j/j * 1/k^2 / (j+k)^1... use convergent shape
        let t = Term {
            coef: BasisVector::from_int(1),
            vars: vec![v(true, false, 1, vec![]), v(false, false, 2, vec![])],
            tail: vec![],
            tail_pow: 2,
            shift: 0,
        };
        check_term(&t, 1e-4);
    }

    #[test]
    fn merge_geo_pair() {
        // sum_{v,w} x-geo merge: 1/(v 2^v) * 2^-w against tail 1/J^2
        let t = Term {
            coef: BasisVector::from_int(1),
            vars: vec![v(false, true, 1, vec![]), v(false, true, 0, vec![])],
            tail: vec![],
            tail_pow: 2,
            shift: 1,
        };
        check_term(&t, 1e-6);
    }

    #[test]
    fn merge_log_log() {
        // sum_{v,w} 1/(vw) (-1)^v / (v+w+1)^3: merge then single
        let t = Term {
            coef: BasisVector::from_int(1),
            vars: vec![v(true, false, 1, vec![]), v(false, false, 1, vec![])],
            tail: vec![],
            tail_pow: 3,
            shift: 1,
        };
        check_term(&t, 1e-4);
    }

    #[test]
    fn single_with_harmonic_tail() {
        // sum_j (-1)^j H^(2)_{j+1} / (j (j+1)^2)
        let t = Term {
            coef: BasisVector::from_int(1),
            vars: vec![v(true, false, 1, vec![])],
            tail: vec![HF::Plain(2)],
            tail_pow: 2,
            shift: 1,
        };
        check_term(&t, 1e-4);
    }

    #[test]
    fn single_geo_shifted() {
        // sum_m H_m 2^-m / (m+1)^2
        let t = Term {
            coef: BasisVector::from_int(1),
            vars: vec![v(false, true, 0, vec![HF::Plain(1)])],
            tail: vec![],
            tail_pow: 2,
            shift: 1,
        };
        check_term(&t, 1e-8);
    }

    #[test]
    fn triple_reduction_like_worked_example() {
        // sum_{j,k,l} 1/j^2 * 1/(k 2^k) * 2^-l / (j+k+l+1)^2
        let t = Term {
            coef: BasisVector::from_int(1),
            vars: vec![
                v(false, false, 2, vec![]),
                v(false, true, 1, vec![]),
                v(false, true, 0, vec![]),
            ],
            tail: vec![],
            tail_pow: 2,
            shift: 1,
        };
        check_term(&t, 1e-3);
    }
}

#[cfg(test)]
mod debug_tests {
    use super::*;

    #[test]
    fn trace_worked_example() {
        let corpus = crate::corpus::Corpus::load_builtin().unwrap();
        let mut values = SolvedTable::new();
        for e in &corpus.entries {
            values.insert(e.index.clone(), e.rhs.clone());
        }
        let idx = Index::parse("PLI(101;21;2)").unwrap();
        let pli = match &idx {
            Index::Pli(p) => p.clone(),
            _ => unreachable!(),
        };
        let alts = branch_sets(&pli, &values).unwrap();
        println!("{} alternatives", alts.len());
        for (ai, branches) in alts.iter().enumerate() {
            println!("alternative {ai}: {} branches", branches.len());
            let mut all_ok = true;
            for b in branches {
                println!("  branch: {} coef={} log2pow={} units={:?} inv=({},{}) shift={}",
                    b.note, b.coef, b.log2_pow, b.units, b.inv_m, b.inv_n, b.x_shift);
                match expand_units(b) {
                    None => {
                        println!("    EXPAND FAILED");
                        all_ok = false;
                    }
                    Some(terms) => {
                        for t in &terms {
                            let mut out = Vec::new();
                            let ok = reduce_term(t, 0, &mut out);
                            if !ok {
                                println!("    term FAILS: vars={:?} tail={:?} pow={} shift={}",
                                    t.vars, t.tail, t.tail_pow, t.shift);
                                all_ok = false;
                            }
                        }
                    }
                }
            }
            println!("  alternative {ai} ok = {all_ok}");
        }
    }
}
