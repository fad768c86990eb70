//! Index families for the integrals and sums handled by the engine.
//!
//! Every subject is identified by a small canonical index carrying exponents,
//! polylog tags and a denominator selector. The text form round-trips through
//! [`Index::parse`] / `Display` and matches the table notation used by the
//! corpus files (`LI(1,0,1;2)`, `ES(1,-1;-2)`, `QLI(355;5)`, `QES(11,31;-12)`,
//! `QPLI4(8;2;1)`, `GES(112;1)`, `piQBES(0;1)`, ...).

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum IndexParseError {
    #[error("unknown family in `{0}`")]
    UnknownFamily(String),
    #[error("malformed index `{0}`: {1}")]
    Malformed(String, &'static str),
}

/// Log-integral index: exponents of log(1-x), log(x), log(1+x) and the
/// denominator selector p with f(0)=1-x, f(1)=x, f(2)=1+x.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiIndex {
    pub a: [u32; 3],
    pub p: u8,
}

/// Polylog factor tag (n, k): the factor L(n,k;x) with
/// k=1: Li_n(x), 2: Li_n(-x), 3: Li_n((1-x)/2), 4: Li_n((1+x)/2),
/// 5: Li_n((1-x)/(1+x)), 6: Li_n((x-1)/(1+x)).
pub type PolyTag = (u8, u8);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PliIndex {
    pub a: [u32; 3],
    /// sorted lexicographically by (n, k); non-empty
    pub polylogs: Vec<PolyTag>,
    pub p: u8,
}

/// Quadratic log-integral index over kernels
/// k(1)=log(1-x), k(2)=log(x), k(3)=log(1+x), k(4)=log(1+x^2), k(5)=arctan(x)
/// and denominators g(1)=1-x, g(2)=x, g(3)=1+x, g(4)=1+x^2, g(5)=(1+x^2)/x.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QliIndex {
    pub a: [u32; 5],
    pub p: u8,
}

/// Quadratic polylog integrals. Argument codes a extend the PLI codes with
/// 7: Li_n(-x^2) and 8: Ti_n(x); b is a QLI kernel code for the mixed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QpliIndex {
    /// weight 3: L(2,a;x)/g(p;x)
    W3 { arg: u8, p: u8 },
    /// weight 4: L(3,a;x)/g(p;x)
    W4Poly { arg: u8, p: u8 },
    /// weight 4: L(2,a;x) k(b;x)/g(p;x)
    W4Mixed { arg: u8, log: u8, p: u8 },
}

/// Euler sum index: plain exponents for H_n^(k) factors, tilde exponents for
/// alternating-harmonic factors, outer sign and denominator power.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EsIndex {
    pub plain: Vec<u32>,
    pub tilde: Vec<u32>,
    pub outer_neg: bool,
    pub p: u32,
}

/// Quadratic Euler sum index. Terms are (m, k) with f_{1k}=H_n^(k),
/// f_{2k}=tilde H_n^(k), f_{3k}=H_{2n}^(k); `shifted` selects the
/// (2n+1)^p denominator variant, otherwise n^p.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QesIndex {
    pub terms: Vec<(u8, u32)>,
    pub outer_neg: bool,
    pub p: u32,
    pub shifted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AuxKind {
    /// geometric weight 2^-n
    Ges,
    /// central binomial weight binom(2n,n)/4^n
    Bes,
    /// inverse central binomial weight 4^n/binom(2n,n)
    Ibes,
    /// squared binomial weight; `pi_scaled` means the subject is pi times the sum
    Qbes { pi_scaled: bool },
    /// inverse squared binomial weight
    Iqbes,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AuxIndex {
    pub kind: AuxKind,
    /// harmonic exponents, sorted; may be empty for the harmonic-free sums
    pub a: Vec<u32>,
    pub p: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Li,
    Pli,
    Qli,
    Qpli,
    Es,
    Qes,
    Ges,
    Bes,
    Ibes,
    Qbes,
    Iqbes,
    Extra,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        Some(match s.to_ascii_uppercase().as_str() {
            "LI" => Family::Li,
            "PLI" => Family::Pli,
            "QLI" => Family::Qli,
            "QPLI" => Family::Qpli,
            "ES" => Family::Es,
            "QES" => Family::Qes,
            "GES" => Family::Ges,
            "BES" => Family::Bes,
            "IBES" => Family::Ibes,
            "QBES" => Family::Qbes,
            "IQBES" => Family::Iqbes,
            "EXTRA" => Family::Extra,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Li => "LI",
            Family::Pli => "PLI",
            Family::Qli => "QLI",
            Family::Qpli => "QPLI",
            Family::Es => "ES",
            Family::Qes => "QES",
            Family::Ges => "GES",
            Family::Bes => "BES",
            Family::Ibes => "IBES",
            Family::Qbes => "QBES",
            Family::Iqbes => "IQBES",
            Family::Extra => "EXTRA",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Index {
    Li(LiIndex),
    Pli(PliIndex),
    Qli(QliIndex),
    Qpli(QpliIndex),
    Es(EsIndex),
    Qes(QesIndex),
    Aux(AuxIndex),
    /// named scattered constants from the corpus extras file
    Extra(String),
}

impl Index {
    pub fn family(&self) -> Family {
        match self {
            Index::Li(_) => Family::Li,
            Index::Pli(_) => Family::Pli,
            Index::Qli(_) => Family::Qli,
            Index::Qpli(_) => Family::Qpli,
            Index::Es(_) => Family::Es,
            Index::Qes(_) => Family::Qes,
            Index::Aux(a) => match a.kind {
                AuxKind::Ges => Family::Ges,
                AuxKind::Bes => Family::Bes,
                AuxKind::Ibes => Family::Ibes,
                AuxKind::Qbes { .. } => Family::Qbes,
                AuxKind::Iqbes => Family::Iqbes,
            },
            Index::Extra(_) => Family::Extra,
        }
    }

    pub fn weight(&self) -> u32 {
        match self {
            Index::Li(i) => 1 + i.a.iter().sum::<u32>(),
            Index::Pli(i) => {
                1 + i.a.iter().sum::<u32>()
                    + i.polylogs.iter().map(|&(n, _)| n as u32).sum::<u32>()
            }
            Index::Qli(i) => 1 + i.a.iter().sum::<u32>(),
            Index::Qpli(QpliIndex::W3 { .. }) => 3,
            Index::Qpli(_) => 4,
            Index::Es(i) => i.plain.iter().sum::<u32>() + i.tilde.iter().sum::<u32>() + i.p,
            Index::Qes(i) => i.terms.iter().map(|&(_, k)| k).sum::<u32>() + i.p,
            Index::Aux(i) => {
                let base = i.a.iter().sum::<u32>() + i.p;
                match i.kind {
                    AuxKind::Qbes { pi_scaled: true } => base + 1,
                    _ => base,
                }
            }
            Index::Extra(_) => 4,
        }
    }

    /// True iff the defining integral/sum converges, derived from endpoint
    /// asymptotics (integrals) and term decay (sums).
    pub fn is_convergent(&self) -> bool {
        match self {
            Index::Li(i) => match i.p {
                0 => i.a[1] >= 1,
                1 => i.a[0] + i.a[2] >= 1,
                _ => true,
            },
            Index::Pli(i) => {
                // polylog factors vanishing at the endpoints
                let zero_at_1 = i.a[1] >= 1
                    || i.polylogs.iter().any(|&(_, k)| matches!(k, 3 | 5 | 6));
                let zero_at_0 = i.a[0] + i.a[2] >= 1
                    || i.polylogs.iter().any(|&(_, k)| matches!(k, 1 | 2));
                match i.p {
                    0 => zero_at_1,
                    1 => zero_at_0,
                    _ => true,
                }
            }
            Index::Qli(i) => match i.p {
                1 => i.a[1] >= 1,
                2 => i.a[0] + i.a[2] + i.a[3] + i.a[4] >= 1,
                _ => true,
            },
            Index::Qpli(q) => {
                let arg_zero_at_1 = |a: u8| matches!(a, 3 | 5 | 6);
                let arg_zero_at_0 = |a: u8| matches!(a, 1 | 2 | 7 | 8);
                match *q {
                    QpliIndex::W3 { arg, p } | QpliIndex::W4Poly { arg, p } => match p {
                        1 => arg_zero_at_1(arg),
                        2 => arg_zero_at_0(arg),
                        _ => true,
                    },
                    QpliIndex::W4Mixed { arg, log, p } => match p {
                        1 => arg_zero_at_1(arg) || log == 2,
                        2 => arg_zero_at_0(arg) || matches!(log, 1 | 3 | 4 | 5),
                        _ => true,
                    },
                }
            }
            Index::Es(i) => {
                (!i.plain.is_empty() || !i.tilde.is_empty())
                    && if i.outer_neg { i.p >= 1 } else { i.p >= 2 }
            }
            Index::Qes(i) => {
                !i.terms.is_empty() && if i.outer_neg { i.p >= 1 } else { i.p >= 2 }
            }
            Index::Aux(i) => match i.kind {
                AuxKind::Ges => !i.a.is_empty(),
                AuxKind::Bes => i.p >= 1,
                AuxKind::Ibes => i.p >= 2,
                AuxKind::Qbes { .. } => i.p >= 1,
                AuxKind::Iqbes => i.p >= 3,
            },
            Index::Extra(_) => true,
        }
    }

    /// Re-canonicalise (sort the order-free parts); used by the parser and as
    /// a property-test target.
    pub fn canonicalize(&mut self) {
        match self {
            Index::Pli(i) => i.polylogs.sort_unstable(),
            Index::Es(i) => {
                i.plain.sort_unstable();
                i.tilde.sort_unstable();
            }
            Index::Qes(i) => i.terms.sort_unstable(),
            Index::Aux(i) => i.a.sort_unstable(),
            _ => {}
        }
    }

    pub fn parse(s: &str) -> Result<Index, IndexParseError> {
        parse_index(s)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Li(i) => write!(f, "LI({},{},{};{})", i.a[0], i.a[1], i.a[2], i.p),
            Index::Pli(i) => {
                let words: Vec<String> =
                    i.polylogs.iter().map(|&(n, k)| format!("{}{}", n, k)).collect();
                write!(
                    f,
                    "PLI({}{}{};{};{})",
                    i.a[0],
                    i.a[1],
                    i.a[2],
                    words.join(","),
                    i.p
                )
            }
            Index::Qli(i) => {
                let mut digits = String::new();
                for (m, &cnt) in i.a.iter().enumerate() {
                    for _ in 0..cnt {
                        digits.push(char::from_digit(m as u32 + 1, 10).unwrap());
                    }
                }
                write!(f, "QLI({};{})", digits, i.p)
            }
            Index::Qpli(q) => match *q {
                QpliIndex::W3 { arg, p } => write!(f, "QPLI3({};{})", arg, p),
                QpliIndex::W4Poly { arg, p } => write!(f, "QPLI4({};{})", arg, p),
                QpliIndex::W4Mixed { arg, log, p } => {
                    write!(f, "QPLI4({};{};{})", arg, log, p)
                }
            },
            Index::Es(i) => {
                let mut parts: Vec<String> = i.plain.iter().map(|a| a.to_string()).collect();
                parts.extend(i.tilde.iter().map(|b| format!("-{}", b)));
                write!(
                    f,
                    "ES({};{}{})",
                    parts.join(","),
                    if i.outer_neg { "-" } else { "" },
                    i.p
                )
            }
            Index::Qes(i) => {
                let words: Vec<String> =
                    i.terms.iter().map(|&(m, k)| format!("{}{}", m, k)).collect();
                write!(
                    f,
                    "QES({};{}{}{})",
                    words.join(","),
                    if i.outer_neg { "-" } else { "" },
                    i.p,
                    if i.shifted { 2 } else { 1 }
                )
            }
            Index::Aux(i) => {
                let name = match i.kind {
                    AuxKind::Ges => "GES",
                    AuxKind::Bes => "BES",
                    AuxKind::Ibes => "IBES",
                    AuxKind::Qbes { pi_scaled: true } => "piQBES",
                    AuxKind::Qbes { pi_scaled: false } => "QBES",
                    AuxKind::Iqbes => "IQBES",
                };
                let digits: String = if i.a.is_empty() {
                    "0".to_string()
                } else {
                    i.a.iter().map(|a| a.to_string()).collect()
                };
                write!(f, "{}({};{})", name, digits, i.p)
            }
            Index::Extra(name) => write!(f, "CONST({})", name),
        }
    }
}

fn err(s: &str, why: &'static str) -> IndexParseError {
    IndexParseError::Malformed(s.to_string(), why)
}

fn parse_index(s: &str) -> Result<Index, IndexParseError> {
    let s = s.trim();
    let open = s.find('(').ok_or_else(|| err(s, "missing `(`"))?;
    if !s.ends_with(')') {
        return Err(err(s, "missing `)`"));
    }
    let head = &s[..open];
    let body = &s[open + 1..s.len() - 1];
    let parts: Vec<&str> = body.split(';').collect();
    let mut idx = match head {
        "LI" => {
            let (a, p) = li_like(s, &parts)?;
            Index::Li(LiIndex { a, p })
        }
        "PLI" => {
            if parts.len() != 3 {
                return Err(err(s, "PLI needs three `;` groups"));
            }
            let a = digit_triple(s, parts[0])?;
            let mut polylogs = Vec::new();
            for w in parts[1].split(',') {
                let w = w.trim();
                if w.len() != 2 {
                    return Err(err(s, "polylog word must be two digits"));
                }
                let n = w.as_bytes()[0] - b'0';
                let k = w.as_bytes()[1] - b'0';
                if !(2..=9).contains(&n) || !(1..=6).contains(&k) {
                    return Err(err(s, "polylog word out of range"));
                }
                polylogs.push((n, k));
            }
            let p: u8 = parts[2].parse().map_err(|_| err(s, "bad p"))?;
            if p > 2 {
                return Err(err(s, "PLI p must be 0..=2"));
            }
            Index::Pli(PliIndex { a, polylogs, p })
        }
        "QLI" => {
            if parts.len() != 2 {
                return Err(err(s, "QLI needs one `;`"));
            }
            let mut a = [0u32; 5];
            for c in parts[0].chars() {
                let d = c.to_digit(10).ok_or_else(|| err(s, "bad kernel digit"))?;
                if !(1..=5).contains(&d) {
                    return Err(err(s, "kernel digit must be 1..5"));
                }
                a[(d - 1) as usize] += 1;
            }
            if a.iter().all(|&x| x == 0) {
                return Err(err(s, "QLI needs at least one kernel"));
            }
            let p: u8 = parts[1].parse().map_err(|_| err(s, "bad p"))?;
            if !(1..=5).contains(&p) {
                return Err(err(s, "QLI p must be 1..=5"));
            }
            Index::Qli(QliIndex { a, p })
        }
        "QPLI3" | "QPLI4" => {
            let arg: u8 = parts[0].parse().map_err(|_| err(s, "bad arg"))?;
            if !(1..=8).contains(&arg) {
                return Err(err(s, "polylog arg must be 1..=8"));
            }
            let q = match (head, parts.len()) {
                ("QPLI3", 2) => QpliIndex::W3 {
                    arg,
                    p: parse_qp(s, parts[1])?,
                },
                ("QPLI4", 2) => QpliIndex::W4Poly {
                    arg,
                    p: parse_qp(s, parts[1])?,
                },
                ("QPLI4", 3) => {
                    let log: u8 = parts[1].parse().map_err(|_| err(s, "bad log code"))?;
                    if !(1..=5).contains(&log) {
                        return Err(err(s, "log code must be 1..=5"));
                    }
                    QpliIndex::W4Mixed {
                        arg,
                        log,
                        p: parse_qp(s, parts[2])?,
                    }
                }
                _ => return Err(err(s, "bad QPLI arity")),
            };
            Index::Qpli(q)
        }
        "ES" => {
            if parts.len() != 2 {
                return Err(err(s, "ES needs one `;`"));
            }
            let mut plain = Vec::new();
            let mut tilde = Vec::new();
            if !parts[0].is_empty() {
                for t in parts[0].split(',') {
                    let t = t.trim();
                    if let Some(rest) = t.strip_prefix('-') {
                        tilde.push(rest.parse().map_err(|_| err(s, "bad exponent"))?);
                    } else {
                        plain.push(t.parse().map_err(|_| err(s, "bad exponent"))?);
                    }
                }
            }
            let (outer_neg, p) = signed(s, parts[1])?;
            Index::Es(EsIndex {
                plain,
                tilde,
                outer_neg,
                p,
            })
        }
        "QES" => {
            if parts.len() != 2 {
                return Err(err(s, "QES needs one `;`"));
            }
            let mut terms = Vec::new();
            for w in parts[0].split(',') {
                let w = w.trim();
                if w.len() != 2 {
                    return Err(err(s, "QES term must be two digits"));
                }
                let m = w.as_bytes()[0] - b'0';
                let k = (w.as_bytes()[1] - b'0') as u32;
                if !(1..=3).contains(&m) || k == 0 {
                    return Err(err(s, "QES term out of range"));
                }
                terms.push((m, k));
            }
            let tail = parts[1].trim();
            let (outer_neg, digits) = match tail.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, tail),
            };
            if digits.len() != 2 {
                return Err(err(s, "QES outer part must be p then variant digit"));
            }
            let p = (digits.as_bytes()[0] - b'0') as u32;
            let v = digits.as_bytes()[1] - b'0';
            if p == 0 || !(1..=2).contains(&v) {
                return Err(err(s, "bad QES outer part"));
            }
            Index::Qes(QesIndex {
                terms,
                outer_neg,
                p,
                shifted: v == 2,
            })
        }
        "GES" | "BES" | "IBES" | "QBES" | "piQBES" | "IQBES" => {
            if parts.len() != 2 {
                return Err(err(s, "needs one `;`"));
            }
            let kind = match head {
                "GES" => AuxKind::Ges,
                "BES" => AuxKind::Bes,
                "IBES" => AuxKind::Ibes,
                "QBES" => AuxKind::Qbes { pi_scaled: false },
                "piQBES" => AuxKind::Qbes { pi_scaled: true },
                _ => AuxKind::Iqbes,
            };
            let a: Vec<u32> = if parts[0] == "0" {
                Vec::new()
            } else {
                parts[0]
                    .chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| err(s, "bad exponent digit")))
                    .collect::<Result<_, _>>()?
            };
            if a.contains(&0) {
                return Err(err(s, "zero exponent"));
            }
            let p: u32 = parts[1].parse().map_err(|_| err(s, "bad p"))?;
            Index::Aux(AuxIndex { kind, a, p })
        }
        "CONST" => Index::Extra(body.to_string()),
        _ => return Err(IndexParseError::UnknownFamily(s.to_string())),
    };
    idx.canonicalize();
    Ok(idx)
}

fn li_like(s: &str, parts: &[&str]) -> Result<([u32; 3], u8), IndexParseError> {
    if parts.len() != 2 {
        return Err(err(s, "LI needs one `;`"));
    }
    let fields: Vec<&str> = parts[0].split(',').collect();
    if fields.len() != 3 {
        return Err(err(s, "LI needs three exponents"));
    }
    let mut a = [0u32; 3];
    for (i, f) in fields.iter().enumerate() {
        a[i] = f.trim().parse().map_err(|_| err(s, "bad exponent"))?;
    }
    let p: u8 = parts[1].parse().map_err(|_| err(s, "bad p"))?;
    if p > 2 {
        return Err(err(s, "LI p must be 0..=2"));
    }
    Ok((a, p))
}

fn digit_triple(s: &str, t: &str) -> Result<[u32; 3], IndexParseError> {
    let t = t.trim();
    if t.len() != 3 || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(s, "abbreviated exponents must be three digits"));
    }
    let b = t.as_bytes();
    Ok([
        (b[0] - b'0') as u32,
        (b[1] - b'0') as u32,
        (b[2] - b'0') as u32,
    ])
}

fn parse_qp(s: &str, t: &str) -> Result<u8, IndexParseError> {
    let p: u8 = t.trim().parse().map_err(|_| err(s, "bad p"))?;
    if !(1..=5).contains(&p) {
        return Err(err(s, "QLI-family p must be 1..=5"));
    }
    Ok(p)
}

fn signed(s: &str, t: &str) -> Result<(bool, u32), IndexParseError> {
    let t = t.trim();
    match t.strip_prefix('-') {
        Some(rest) => Ok((true, rest.parse().map_err(|_| err(s, "bad p"))?)),
        None => Ok((false, t.parse().map_err(|_| err(s, "bad p"))?)),
    }
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// All weak compositions of `total` into `parts` parts.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(total: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = total;
            out.push(cur.clone());
            return;
        }
        for v in 0..=total {
            cur[pos] = v;
            rec(total - v, pos + 1, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, 0, &mut cur, &mut out);
    out
}

/// Non-decreasing multisets of positive integers summing to `total`.
fn partitions_min(total: u32, min: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if total == 0 {
        out.push(Vec::new());
        return out;
    }
    for first in min..=total {
        for mut rest in partitions_min(total - first, first) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// Enumerate all convergent canonical indices of exactly weight `w` for one of
/// the integral/sum families, excluding those subsumed by simpler families.
/// Output is sorted and duplicate-free.
pub fn enumerate(family: Family, w: u32) -> Vec<Index> {
    let mut out: Vec<Index> = match family {
        Family::Li => {
            if w < 1 {
                return Vec::new();
            }
            let mut v = Vec::new();
            for a in compositions(w - 1, 3) {
                for p in 0..=2u8 {
                    let idx = Index::Li(LiIndex {
                        a: [a[0], a[1], a[2]],
                        p,
                    });
                    if idx.is_convergent() {
                        v.push(idx);
                    }
                }
            }
            v
        }
        Family::Pli => {
            if w < 3 {
                return Vec::new();
            }
            let mut v = Vec::new();
            // split weight-1 between log exponents and polylog factors
            for poly_weight in 2..=(w - 1) {
                let log_weight = w - 1 - poly_weight;
                for ns in partitions_min(poly_weight, 2) {
                    if ns.is_empty() {
                        continue;
                    }
                    // assign a k-code 1..=6 to every n part; canonical requires
                    // sorted (n, k) pairs, so enumerate non-decreasing code
                    // sequences within equal-n runs
                    let mut tags: Vec<Vec<PolyTag>> = vec![Vec::new()];
                    for (i, &n) in ns.iter().enumerate() {
                        let mut next = Vec::new();
                        for t in &tags {
                            let kmin = if i > 0 && ns[i - 1] == n {
                                t.last().unwrap().1
                            } else {
                                1
                            };
                            for k in kmin..=6 {
                                let mut t2 = t.clone();
                                t2.push((n as u8, k));
                                next.push(t2);
                            }
                        }
                        tags = next;
                    }
                    for a in compositions(log_weight, 3) {
                        for tag in &tags {
                            for p in 0..=2u8 {
                                let idx = Index::Pli(PliIndex {
                                    a: [a[0], a[1], a[2]],
                                    polylogs: tag.clone(),
                                    p,
                                });
                                if idx.is_convergent() {
                                    v.push(idx);
                                }
                            }
                        }
                    }
                }
            }
            v
        }
        Family::Qli => {
            if w < 2 {
                return Vec::new();
            }
            let mut v = Vec::new();
            for a in compositions(w - 1, 5) {
                for p in 1..=5u8 {
                    // already contained in LIs
                    if a[3] == 0 && a[4] == 0 && p <= 3 {
                        continue;
                    }
                    let idx = Index::Qli(QliIndex {
                        a: [a[0], a[1], a[2], a[3], a[4]],
                        p,
                    });
                    if idx.is_convergent() {
                        v.push(idx);
                    }
                }
            }
            v
        }
        Family::Qpli => {
            let mut v = Vec::new();
            if w == 3 || w == 4 {
                for arg in 1..=8u8 {
                    for p in 1..=5u8 {
                        // already contained in PLIs
                        if arg <= 6 && p <= 3 {
                            continue;
                        }
                        let idx = if w == 3 {
                            Index::Qpli(QpliIndex::W3 { arg, p })
                        } else {
                            Index::Qpli(QpliIndex::W4Poly { arg, p })
                        };
                        if idx.is_convergent() {
                            v.push(idx);
                        }
                    }
                }
            }
            if w == 4 {
                for arg in 1..=8u8 {
                    for log in 1..=5u8 {
                        for p in 1..=5u8 {
                            if arg <= 6 && log <= 3 && p <= 3 {
                                continue;
                            }
                            let idx = Index::Qpli(QpliIndex::W4Mixed { arg, log, p });
                            if idx.is_convergent() {
                                v.push(idx);
                            }
                        }
                    }
                }
            }
            v
        }
        Family::Es => {
            let mut v = Vec::new();
            for p in 1..w {
                let fw = w - p;
                for plain_w in 0..=fw {
                    let tilde_w = fw - plain_w;
                    for plain in partitions_min(plain_w, 1) {
                        for tilde in partitions_min(tilde_w, 1) {
                            for outer_neg in [false, true] {
                                let idx = Index::Es(EsIndex {
                                    plain: plain.clone(),
                                    tilde: tilde.clone(),
                                    outer_neg,
                                    p,
                                });
                                if idx.is_convergent() {
                                    v.push(idx);
                                }
                            }
                        }
                    }
                }
            }
            v
        }
        Family::Qes => {
            let mut v = Vec::new();
            for p in 1..w {
                let fw = w - p;
                for ks in partitions_min(fw, 1) {
                    if ks.is_empty() {
                        continue;
                    }
                    // assign m-codes, non-decreasing within equal-k runs
                    let mut seqs: Vec<Vec<(u8, u32)>> = vec![Vec::new()];
                    for (i, &k) in ks.iter().enumerate() {
                        let mut next = Vec::new();
                        for t in &seqs {
                            let mmin = if i > 0 && ks[i - 1] == k {
                                t.last().unwrap().0
                            } else {
                                1
                            };
                            for m in mmin..=3 {
                                let mut t2 = t.clone();
                                t2.push((m, k));
                                next.push(t2);
                            }
                        }
                        seqs = next;
                    }
                    for terms in &seqs {
                        for shifted in [false, true] {
                            // QES1 without an H_{2n} factor is an ordinary ES
                            if !shifted && terms.iter().all(|&(m, _)| m != 3) {
                                continue;
                            }
                            for outer_neg in [false, true] {
                                let mut terms = terms.clone();
                                terms.sort_unstable();
                                let idx = Index::Qes(QesIndex {
                                    terms,
                                    outer_neg,
                                    p,
                                    shifted,
                                });
                                if idx.is_convergent() {
                                    v.push(idx);
                                }
                            }
                        }
                    }
                }
            }
            v
        }
        _ => Vec::new(),
    };
    out.sort();
    out.dedup();
    out
}

/// Weight-`w` non-alternating QESs (no alternating-harmonic factor and
/// positive outer sign), the subset tabled at weight 5.
pub fn enumerate_nonalt_qes(w: u32) -> Vec<Index> {
    enumerate(Family::Qes, w)
        .into_iter()
        .filter(|idx| match idx {
            Index::Qes(q) => !q.outer_neg && q.terms.iter().all(|&(m, _)| m != 2),
            _ => false,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_match_paper_examples() {
        let li = Index::parse("LI(1,2,3;0)").unwrap();
        assert_eq!(li.weight(), 7);
        // PLI(0,0,1;{(2,4)x2,(3,2)};2), written with repeated words
        let pli = Index::parse("PLI(001;24,24,32;2)").unwrap();
        assert_eq!(pli.weight(), 9);
        let es = Index::parse("ES(2,-3,-3;-4)").unwrap();
        assert_eq!(es.weight(), 12);
        assert!(matches!(&es, Index::Es(e) if e.outer_neg && e.p == 4));
        let qes = Index::parse("QES(11,12,12,32;31)").unwrap();
        assert_eq!(qes.weight(), 10);
        assert_eq!(Index::parse("LI(0,0,0;1)").unwrap().weight(), 1);
    }

    #[test]
    fn convergence_examples() {
        assert!(!Index::parse("LI(0,0,0;0)").unwrap().is_convergent());
        assert!(Index::parse("LI(0,1,0;0)").unwrap().is_convergent());
        assert!(!Index::parse("ES(1;1)").unwrap().is_convergent());
        assert!(Index::parse("ES(1;-1)").unwrap().is_convergent());
    }

    #[test]
    fn li_counts_follow_closed_form() {
        let counts: Vec<usize> = (1..=5).map(|w| enumerate(Family::Li, w).len()).collect();
        assert_eq!(counts, vec![1, 6, 14, 25, 39]);
        for w in 1..=5u32 {
            let expect = (3 * w * w + w - 2) / 2;
            assert_eq!(enumerate(Family::Li, w).len(), expect as usize);
        }
        assert_eq!(counts.iter().sum::<usize>(), 85);
    }

    #[test]
    fn es_counts() {
        let counts: Vec<usize> = (2..=5).map(|w| enumerate(Family::Es, w).len()).collect();
        assert_eq!(counts, vec![2, 9, 24, 54]);
    }

    #[test]
    fn pli_counts() {
        let counts: Vec<usize> = (3..=5).map(|w| enumerate(Family::Pli, w).len()).collect();
        assert_eq!(counts, vec![11, 55, 197]);
    }

    #[test]
    fn qli_counts() {
        let counts: Vec<usize> = (2..=4).map(|w| enumerate(Family::Qli, w).len()).collect();
        assert_eq!(counts, vec![14, 50, 129]);
    }

    #[test]
    fn qpli_counts() {
        let counts: Vec<usize> = (3..=4).map(|w| enumerate(Family::Qpli, w).len()).collect();
        assert_eq!(counts, vec![20, 152]);
    }

    #[test]
    fn qes_counts() {
        let total: usize = (2..=4).map(|w| enumerate(Family::Qes, w).len()).sum();
        assert_eq!(total, 93);
        assert_eq!(enumerate_nonalt_qes(5).len(), 28);
    }

    #[test]
    fn enumerate_is_sorted_canonical_unique() {
        for fam in [Family::Li, Family::Es, Family::Pli, Family::Qli, Family::Qes] {
            for w in 2..=4 {
                let v = enumerate(fam, w);
                let mut sorted = v.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(v, sorted);
                for idx in &v {
                    assert_eq!(idx.weight(), w);
                    assert!(idx.is_convergent());
                    let mut c = idx.clone();
                    c.canonicalize();
                    assert_eq!(&c, idx);
                    // text form round-trips
                    assert_eq!(Index::parse(&idx.to_string()).unwrap(), *idx);
                }
            }
        }
    }

    #[test]
    fn table_notation_round_trips() {
        for s in [
            "LI(1,0,1;2)",
            "ES(1,-1;-2)",
            "QLI(355;5)",
            "QLI(145;4)",
            "QPLI4(8;2;1)",
            "QPLI3(7;2)",
            "QES(11,31,31;22)",
            "QES(31;-11)",
            "GES(112;1)",
            "BES(0;3)",
            "IBES(11;2)",
            "piQBES(0;1)",
            "IQBES(1;3)",
        ] {
            let idx = Index::parse(s).unwrap();
            assert_eq!(idx.to_string(), s, "round trip failed for {s}");
        }
    }

    #[test]
    fn parser_rejects_out_of_range() {
        assert!(Index::parse("LI(1,0;2)").is_err());
        assert!(Index::parse("PLI(001;27;2)").is_err());
        assert!(Index::parse("QLI(6;2)").is_err());
        assert!(Index::parse("QES(41;21)").is_err());
        assert!(Index::parse("XX(1;2)").is_err());
    }
}
