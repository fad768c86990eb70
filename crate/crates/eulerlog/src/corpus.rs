//! Machine-readable closed-form corpus: ingestion, exact lookup and numeric
//! verification of every table entry.
//!
//! File format: UTF-8 TSV, one entry per line,
//! `family <tab> index <tab> (monomial <tab> p/q)* <tab> src=tag`.

use rug::Rational;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

use crate::constants::{BasisVector, Monomial};
use crate::index::{Family, Index};
use crate::numeric::{self, NumericValue};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub family: Family,
    pub index: Index,
    pub rhs: BasisVector,
    pub source: String,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
    #[error("family {family:?}: expected {expected} entries, found {found}")]
    CountMismatch {
        family: Family,
        expected: usize,
        found: usize,
    },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Per-family file names and the table totals they must carry.
pub const FILES: &[(&str, Family, usize)] = &[
    ("li.tsv", Family::Li, 85),
    ("es.tsv", Family::Es, 89),
    ("pli.tsv", Family::Pli, 263),
    ("qli.tsv", Family::Qli, 193),
    ("qpli.tsv", Family::Qpli, 172),
    ("qes.tsv", Family::Qes, 121),
    ("ges.tsv", Family::Ges, 39),
    ("bes.tsv", Family::Bes, 26),
    ("ibes.tsv", Family::Ibes, 14),
];

/// The extras file carries the scattered closed forms (two polylog special
/// values plus the squared-binomial sums).
pub const EXTRAS_FILE: &str = "extras.tsv";

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: rug::Integer = n.parse().ok()?;
            let d: rug::Integer = d.parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Rational::from((n, d)))
        }
        None => {
            let n: rug::Integer = s.parse().ok()?;
            Some(Rational::from(n))
        }
    }
}

pub fn parse_line(file: &str, lineno: usize, line: &str) -> Result<CorpusEntry, CorpusError> {
    let mk_err = |msg: String| CorpusError::Parse {
        file: file.to_string(),
        line: lineno,
        msg,
    };
    let cols: Vec<&str> = line.trim_end().split('\t').collect();
    if cols.len() < 3 {
        return Err(mk_err("too few columns".into()));
    }
    let family =
        Family::parse(cols[0]).ok_or_else(|| mk_err(format!("bad family `{}`", cols[0])))?;
    let index = Index::parse(cols[1]).map_err(|e| mk_err(e.to_string()))?;
    if index.family() != family {
        return Err(mk_err(format!(
            "index {} does not belong to family {}",
            index,
            family.name()
        )));
    }
    let mut rhs = BasisVector::zero();
    let mut i = 2;
    let mut source = String::new();
    while i < cols.len() {
        if let Some(tag) = cols[i].strip_prefix("src=") {
            source = tag.to_string();
            i += 1;
            continue;
        }
        if i + 1 >= cols.len() {
            return Err(mk_err("dangling monomial column".into()));
        }
        let m = Monomial::parse(cols[i])
            .ok_or_else(|| mk_err(format!("bad monomial `{}`", cols[i])))?;
        let q = parse_rational(cols[i + 1])
            .ok_or_else(|| mk_err(format!("bad rational `{}`", cols[i + 1])))?;
        rhs.add_term(m, q);
        i += 2;
    }
    Ok(CorpusEntry {
        family,
        index,
        rhs,
        source,
    })
}

pub fn serialize_entry(e: &CorpusEntry) -> String {
    let mut s = String::new();
    write!(s, "{}\t{}", e.family.name(), e.index).unwrap();
    for (m, q) in &e.rhs.0 {
        write!(s, "\t{}\t{}", m, q).unwrap();
    }
    write!(s, "\tsrc={}", e.source).unwrap();
    s
}

pub fn load_file(path: &Path, family: Family) -> Result<Vec<CorpusEntry>, CorpusError> {
    let text = std::fs::read_to_string(path)?;
    let fname = path.file_name().unwrap().to_string_lossy().to_string();
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let e = parse_line(&fname, i + 1, line)?;
        if e.family != family && family != Family::Extra {
            return Err(CorpusError::Parse {
                file: fname,
                line: i + 1,
                msg: format!("unexpected family {:?}", e.family),
            });
        }
        out.push(e);
    }
    Ok(out)
}

#[derive(Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    by_index: BTreeMap<String, usize>,
}

impl Corpus {
    /// Load every corpus file from a directory, enforcing the table totals.
    pub fn load(dir: &Path) -> Result<Corpus, CorpusError> {
        let mut entries = Vec::new();
        for &(file, family, expected) in FILES {
            let v = load_file(&dir.join(file), family)?;
            if v.len() != expected {
                return Err(CorpusError::CountMismatch {
                    family,
                    expected,
                    found: v.len(),
                });
            }
            entries.extend(v);
        }
        // extras: 2 constants + 7 QBES + 3 IQBES
        let extras = load_file(&dir.join(EXTRAS_FILE), Family::Extra)?;
        if extras.len() != 12 {
            return Err(CorpusError::CountMismatch {
                family: Family::Extra,
                expected: 12,
                found: extras.len(),
            });
        }
        entries.extend(extras);
        let mut by_index = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            by_index.insert(e.index.to_string(), i);
        }
        Ok(Corpus { entries, by_index })
    }

    /// Default location: the crate's own corpus directory.
    pub fn builtin_dir() -> std::path::PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
    }

    pub fn load_builtin() -> Result<Corpus, CorpusError> {
        Corpus::load(&Self::builtin_dir())
    }

    pub fn get(&self, idx: &Index) -> Option<&CorpusEntry> {
        self.by_index.get(&idx.to_string()).map(|&i| &self.entries[i])
    }

    pub fn family(&self, family: Family) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter().filter(move |e| e.family == family)
    }
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub index: String,
    pub source: String,
    pub pass: bool,
    pub residual: Option<f64>,
    pub detail: String,
}

/// Digits / tolerance tier for a family: quadrature families verify deep,
/// slowly-convergent sum families at the documented lower tiers.
pub fn family_tier(family: Family) -> (u32, i64) {
    match family {
        Family::Li | Family::Pli | Family::Qli | Family::Qpli => (50, 40),
        Family::Es | Family::Qes => (30, 25),
        Family::Ges => (45, 40),
        Family::Bes => (45, 40),
        Family::Ibes => (30, 20),
        Family::Qbes | Family::Iqbes => (25, 20),
        Family::Extra => (50, 40),
    }
}

/// Compare numeric(lhs) against eval_vector(rhs).
pub fn verify_entry(e: &CorpusEntry, digits: u32, tol_digits: i64) -> VerifyOutcome {
    let lhs: Result<NumericValue, _> = numeric::eval_index(&e.index, digits);
    match lhs {
        Err(err) => VerifyOutcome {
            index: e.index.to_string(),
            source: e.source.clone(),
            pass: false,
            residual: None,
            detail: format!("evaluation failed: {err}"),
        },
        Ok(lhs) => {
            let rhs = numeric::eval_vector(&e.rhs, digits);
            let prec = lhs.value.prec();
            let resid = rug::Float::with_val(prec, &lhs.value - &rhs.value).abs();
            let tol = numeric::mpf::pow10_neg(prec, tol_digits);
            let pass = resid < tol;
            VerifyOutcome {
                index: e.index.to_string(),
                source: e.source.clone(),
                pass,
                residual: Some(resid.to_f64()),
                detail: String::new(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_with_exact_counts() {
        let c = Corpus::load_builtin().expect("corpus loads");
        assert_eq!(c.entries.len(), 85 + 89 + 263 + 193 + 172 + 121 + 39 + 26 + 14 + 12);
    }

    #[test]
    fn round_trips_every_line() {
        let dir = Corpus::builtin_dir();
        for &(file, family, _) in FILES {
            let path = dir.join(file);
            let text = std::fs::read_to_string(&path).unwrap();
            let parsed = load_file(&path, family).unwrap();
            let rebuilt: Vec<String> = parsed.iter().map(serialize_entry).collect();
            let original: Vec<&str> =
                text.lines().filter(|l| !l.trim().is_empty()).collect();
            assert_eq!(rebuilt.len(), original.len());
            for (a, b) in original.iter().zip(rebuilt.iter()) {
                assert_eq!(*a, b, "round-trip mismatch in {file}");
            }
        }
    }

    #[test]
    fn rhs_is_homogeneous_and_within_declared_basis() {
        use crate::constants::{extended_basis, fibonacci_basis};
        let c = Corpus::load_builtin().unwrap();
        for e in &c.entries {
            let w = e.index.weight();
            assert_eq!(
                e.rhs.homogeneous_weight(),
                Some(w),
                "entry {} not homogeneous of weight {}",
                e.index,
                w
            );
            let allowed: Vec<Monomial> = match e.family {
                Family::Li | Family::Pli | Family::Es | Family::Ges | Family::Bes
                | Family::Ibes => fibonacci_basis(w),
                Family::Qli | Family::Qpli | Family::Qes | Family::Qbes | Family::Iqbes
                | Family::Extra => {
                    if (2..=4).contains(&w) {
                        extended_basis(w)
                    } else {
                        fibonacci_basis(w)
                    }
                }
            };
            for m in e.rhs.0.keys() {
                assert!(
                    allowed.contains(m),
                    "entry {}: monomial {} outside declared basis",
                    e.index,
                    m
                );
            }
        }
    }

    #[test]
    fn corpus_indices_are_exactly_the_enumerated_ones() {
        use crate::index::{enumerate, enumerate_nonalt_qes};
        let c = Corpus::load_builtin().unwrap();
        let check = |family: Family, weights: &[u32]| {
            let mut from_corpus: Vec<Index> = c
                .family(family)
                .map(|e| e.index.clone())
                .collect();
            from_corpus.sort();
            let mut from_enum: Vec<Index> = weights
                .iter()
                .flat_map(|&w| enumerate(family, w))
                .collect();
            if family == Family::Qes {
                from_enum.extend(enumerate_nonalt_qes(5));
            }
            from_enum.sort();
            assert_eq!(from_corpus, from_enum, "bijection fails for {:?}", family);
        };
        check(Family::Li, &[1, 2, 3, 4, 5]);
        check(Family::Es, &[2, 3, 4, 5]);
        check(Family::Pli, &[3, 4, 5]);
        check(Family::Qli, &[2, 3, 4]);
        check(Family::Qpli, &[3, 4]);
        check(Family::Qes, &[2, 3, 4]);
    }

    #[test]
    fn spot_verification_passes() {
        let c = Corpus::load_builtin().unwrap();
        // the worked example row
        let idx = Index::parse("LI(1,0,1;2)").unwrap();
        let e = c.get(&idx).unwrap();
        let out = verify_entry(e, 45, 40);
        assert!(out.pass, "{:?}", out);
        // a corrupted coefficient must fail
        let mut bad = e.clone();
        bad.rhs.add_term(Monomial::one(), rug::Rational::from((1, 7)));
        let out = verify_entry(&bad, 45, 40);
        assert!(!out.pass);
    }
}
