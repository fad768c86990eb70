//! Sparse exact linear relations over the rationals with index-valued
//! unknowns, and fraction-exact Gaussian elimination with Markowitz pivoting.

use rug::Rational;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

use crate::constants::BasisVector;
use crate::index::Index;

/// One linear relation: sum coeff * Index = rhs vector.
#[derive(Debug, Clone)]
pub struct Relation {
    pub lhs: BTreeMap<Index, Rational>,
    pub rhs: BasisVector,
    /// generator tag + parameters, for audit trails
    pub provenance: String,
}

impl Relation {
    pub fn new(provenance: impl Into<String>) -> Relation {
        Relation {
            lhs: BTreeMap::new(),
            rhs: BasisVector::zero(),
            provenance: provenance.into(),
        }
    }

    pub fn add_lhs(&mut self, idx: Index, q: Rational) {
        if q == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.lhs.entry(idx) {
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

    pub fn add_rhs(&mut self, v: &BasisVector) {
        self.rhs = self.rhs.add(v);
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs.is_empty() && self.rhs.is_zero()
    }

    /// Weight shared by all lhs indices, if any lhs exists and agrees.
    pub fn lhs_weight(&self) -> Option<u32> {
        let mut it = self.lhs.keys().map(|i| i.weight());
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

#[derive(Debug, Error)]
pub enum SystemError {
    #[error("inconsistent relation derived (0 = {rhs}) from [{provenance}]")]
    ConsistencyViolation { rhs: String, provenance: String },
    #[error("relation mixes weights {0} and {1} on the lhs ({2})")]
    MixedWeights(u32, u32, String),
}

/// A row solved for its pivot: pivot = rhs - sum rest.
#[derive(Debug, Clone)]
struct PivotRow {
    pivot: Index,
    rest: Vec<(Index, Rational)>,
    rhs: BasisVector,
    provenance: String,
}

/// Assembles relations and solves by exact elimination. Weight-stratified:
/// every relation must have a weight-homogeneous lhs.
#[derive(Debug, Default)]
pub struct System {
    rows: Vec<Relation>,
    solved: BTreeMap<Index, BasisVector>,
    pivots: Vec<PivotRow>,
}

#[derive(Debug)]
pub enum Solution<'a> {
    Solved(&'a BasisVector),
    /// unknown not in the solved span; carries a reduced row mentioning it
    /// when one exists
    Unsolved(Option<Relation>),
}

impl System {
    pub fn new() -> System {
        System::default()
    }

    pub fn add_relation(&mut self, r: Relation) -> Result<(), SystemError> {
        if r.is_trivial() {
            return Ok(());
        }
        let mut weights: Vec<u32> = r.lhs.keys().map(|i| i.weight()).collect();
        weights.sort_unstable();
        weights.dedup();
        if weights.len() > 1 {
            return Err(SystemError::MixedWeights(
                weights[0],
                weights[1],
                r.provenance.clone(),
            ));
        }
        self.rows.push(r);
        Ok(())
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Exact Gaussian elimination. Pivot selection by Markowitz count (the
    /// product of remaining row and column fills), ties broken by the lowest
    /// column in the unknown ordering. The solved map does not depend on the
    /// insertion order of equivalent relation sets.
    pub fn eliminate(&mut self) -> Result<(), SystemError> {
        let mut work: Vec<Relation> = Vec::new();
        // re-inject previous pivot rows so repeated elimination is stable
        for p in self.pivots.drain(..) {
            let mut r = Relation::new(p.provenance);
            r.add_lhs(p.pivot, Rational::from(1));
            for (i, q) in p.rest {
                r.add_lhs(i, q);
            }
            r.rhs = p.rhs;
            work.push(r);
        }
        for mut r in self.rows.drain(..) {
            // substitute already-solved unknowns
            let hit: Vec<(Index, Rational)> = r
                .lhs
                .iter()
                .filter(|(i, _)| self.solved.contains_key(*i))
                .map(|(i, q)| (i.clone(), q.clone()))
                .collect();
            for (i, q) in hit {
                let sol = self.solved[&i].clone();
                r.lhs.remove(&i);
                r.rhs = r.rhs.sub(&sol.scale(&q));
            }
            if r.lhs.is_empty() {
                if !r.rhs.is_zero() {
                    return Err(SystemError::ConsistencyViolation {
                        rhs: r.rhs.to_string(),
                        provenance: r.provenance.clone(),
                    });
                }
                continue;
            }
            work.push(r);
        }

        let mut pivot_rows: Vec<PivotRow> = Vec::new();
        loop {
            if work.is_empty() {
                break;
            }
            let mut col_count: HashMap<Index, usize> = HashMap::new();
            for r in &work {
                for idx in r.lhs.keys() {
                    *col_count.entry(idx.clone()).or_insert(0) += 1;
                }
            }
            let mut best: Option<(usize, Index, usize)> = None;
            for (ri, r) in work.iter().enumerate() {
                for idx in r.lhs.keys() {
                    let score = (r.lhs.len() - 1) * (col_count[idx] - 1);
                    let better = match &best {
                        None => true,
                        Some((_, bidx, bscore)) => {
                            score < *bscore || (score == *bscore && idx < bidx)
                        }
                    };
                    if better {
                        best = Some((ri, idx.clone(), score));
                    }
                }
            }
            let (ri, pidx, _) = match best {
                Some(b) => b,
                None => break,
            };
            let mut pivot_rel = work.swap_remove(ri);
            let pcoef = pivot_rel.lhs.remove(&pidx).unwrap();
            let inv = Rational::from(1) / pcoef;
            let rest: Vec<(Index, Rational)> = pivot_rel
                .lhs
                .iter()
                .map(|(i, q)| (i.clone(), Rational::from(q * &inv)))
                .collect();
            let prhs = pivot_rel.rhs.scale(&inv);
            for r in work.iter_mut() {
                if let Some(c) = r.lhs.remove(&pidx) {
                    for (i, q) in &rest {
                        let add = -Rational::from(q * &c);
                        r.add_lhs(i.clone(), add);
                    }
                    r.rhs = r.rhs.sub(&prhs.scale(&c));
                }
            }
            let mut next = Vec::with_capacity(work.len());
            for r in work.into_iter() {
                if r.lhs.is_empty() {
                    if !r.rhs.is_zero() {
                        return Err(SystemError::ConsistencyViolation {
                            rhs: r.rhs.to_string(),
                            provenance: r.provenance.clone(),
                        });
                    }
                } else {
                    next.push(r);
                }
            }
            work = next;
            pivot_rows.push(PivotRow {
                pivot: pidx,
                rest,
                rhs: prhs,
                provenance: pivot_rel.provenance,
            });
        }

        // back-substitution over the pivot rows: dependencies point forward
        // (a pivot row can reference only later pivots or free unknowns)
        let mut progress = true;
        while progress {
            progress = false;
            let mut remaining = Vec::new();
            for p in pivot_rows.drain(..) {
                if p.rest.iter().all(|(i, _)| self.solved.contains_key(i)) {
                    let mut value = p.rhs.clone();
                    for (i, q) in &p.rest {
                        value = value.sub(&self.solved[i].scale(q));
                    }
                    self.solved.insert(p.pivot.clone(), value);
                    progress = true;
                } else {
                    remaining.push(p);
                }
            }
            pivot_rows = remaining;
        }
        self.pivots = pivot_rows;
        Ok(())
    }

    pub fn solution(&self, idx: &Index) -> Solution<'_> {
        if let Some(v) = self.solved.get(idx) {
            return Solution::Solved(v);
        }
        for p in &self.pivots {
            if p.pivot == *idx || p.rest.iter().any(|(i, _)| i == idx) {
                let mut r = Relation::new(p.provenance.clone());
                r.add_lhs(p.pivot.clone(), Rational::from(1));
                for (i, q) in &p.rest {
                    r.add_lhs(i.clone(), q.clone());
                }
                r.rhs = p.rhs.clone();
                return Solution::Unsolved(Some(r));
            }
        }
        Solution::Unsolved(None)
    }

    pub fn solved(&self) -> &BTreeMap<Index, BasisVector> {
        &self.solved
    }

    /// Seed a known value (used by the weight-induction pipeline).
    pub fn seed_solution(&mut self, idx: Index, value: BasisVector) {
        self.solved.insert(idx, value);
    }

    /// One relation per line for golden-file diffing.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let mut first = true;
            for (i, q) in &r.lhs {
                if !first {
                    out.push_str(" + ");
                }
                out.push_str(&format!("{}*{}", q, i));
                first = false;
            }
            out.push_str(&format!(" = {}\n", r.rhs));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{li_half, rat, zeta, Atom};

    fn li(s: &str) -> Index {
        Index::parse(s).unwrap()
    }

    #[test]
    fn single_relation_solves() {
        let mut sys = System::new();
        let mut r = Relation::new("test");
        r.add_lhs(li("LI(0,1,0;0)"), rat(2, 1));
        r.add_rhs(&BasisVector::atom(Atom::Pi));
        sys.add_relation(r).unwrap();
        sys.eliminate().unwrap();
        match sys.solution(&li("LI(0,1,0;0)")) {
            Solution::Solved(v) => {
                assert_eq!(*v, BasisVector::atom(Atom::Pi).scale(&rat(1, 2)))
            }
            _ => panic!("expected solved"),
        }
    }

    #[test]
    fn contradiction_detected() {
        let mut sys = System::new();
        let mut r1 = Relation::new("a");
        r1.add_lhs(li("LI(0,1,0;0)"), rat(1, 1));
        r1.add_rhs(&zeta(3));
        let mut r2 = Relation::new("b");
        r2.add_lhs(li("LI(0,1,0;0)"), rat(1, 1));
        r2.add_rhs(&zeta(3).scale(&rat(2, 1)));
        sys.add_relation(r1).unwrap();
        sys.add_relation(r2).unwrap();
        assert!(matches!(
            sys.eliminate(),
            Err(SystemError::ConsistencyViolation { .. })
        ));
    }

    #[test]
    fn empty_relation_is_noop_and_zero_eq_nonzero_rejected() {
        let mut sys = System::new();
        sys.add_relation(Relation::new("empty")).unwrap();
        assert_eq!(sys.n_rows(), 0);
        let mut r = Relation::new("bad");
        r.add_rhs(&zeta(3));
        sys.add_relation(r).unwrap();
        assert!(sys.eliminate().is_err());
    }

    #[test]
    fn mixed_weight_rejected() {
        let mut sys = System::new();
        let mut r = Relation::new("mixed");
        r.add_lhs(li("LI(0,1,0;0)"), rat(1, 1));
        r.add_lhs(li("LI(0,2,0;0)"), rat(1, 1));
        assert!(matches!(
            sys.add_relation(r),
            Err(SystemError::MixedWeights(..))
        ));
    }

    #[test]
    fn two_by_two_and_idempotence() {
        let mut sys = System::new();
        let x = li("LI(1,0,0;2)");
        let y = li("LI(0,1,0;2)");
        let mut r1 = Relation::new("r1");
        r1.add_lhs(x.clone(), rat(1, 1));
        r1.add_lhs(y.clone(), rat(1, 1));
        r1.add_rhs(&li_half(2).scale(&rat(2, 1)));
        let mut r2 = Relation::new("r2");
        r2.add_lhs(x.clone(), rat(1, 1));
        r2.add_lhs(y.clone(), rat(-1, 1));
        sys.add_relation(r1).unwrap();
        sys.add_relation(r2).unwrap();
        sys.eliminate().unwrap();
        for idx in [&x, &y] {
            match sys.solution(idx) {
                Solution::Solved(v) => assert_eq!(*v, li_half(2)),
                _ => panic!("unsolved"),
            }
        }
        sys.eliminate().unwrap();
        match sys.solution(&x) {
            Solution::Solved(v) => assert_eq!(*v, li_half(2)),
            _ => panic!(),
        }
    }

    #[test]
    fn insertion_order_does_not_change_solutions() {
        let x = li("LI(1,0,0;2)");
        let y = li("LI(0,1,0;2)");
        let z = li("LI(0,0,1;2)");
        let mk = |perm: &[usize]| {
            let mut rels = Vec::new();
            let mut r1 = Relation::new("r1");
            r1.add_lhs(x.clone(), rat(1, 1));
            r1.add_lhs(y.clone(), rat(2, 1));
            r1.add_rhs(&zeta(2).scale(&rat(3, 1)));
            rels.push(r1);
            let mut r2 = Relation::new("r2");
            r2.add_lhs(y.clone(), rat(1, 1));
            r2.add_lhs(z.clone(), rat(-1, 1));
            r2.add_rhs(&zeta(2).scale(&rat(1, 2)));
            rels.push(r2);
            let mut r3 = Relation::new("r3");
            r3.add_lhs(x.clone(), rat(1, 1));
            r3.add_lhs(z.clone(), rat(5, 1));
            r3.add_rhs(&zeta(2).scale(&rat(7, 4)));
            rels.push(r3);
            let mut sys = System::new();
            for &i in perm {
                sys.add_relation(rels[i].clone()).unwrap();
            }
            sys.eliminate().unwrap();
            let get = |i: &Index| match sys.solution(i) {
                Solution::Solved(v) => v.clone(),
                _ => panic!("unsolved"),
            };
            (get(&x), get(&y), get(&z))
        };
        let a = mk(&[0, 1, 2]);
        let b = mk(&[2, 0, 1]);
        let c = mk(&[1, 2, 0]);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn unsolved_reported() {
        let mut sys = System::new();
        let mut r = Relation::new("under");
        r.add_lhs(li("LI(1,0,0;2)"), rat(1, 1));
        r.add_lhs(li("LI(0,1,0;2)"), rat(1, 1));
        r.add_rhs(&zeta(2));
        sys.add_relation(r).unwrap();
        sys.eliminate().unwrap();
        match sys.solution(&li("LI(1,0,0;2)")) {
            Solution::Unsolved(Some(row)) => {
                assert_eq!(row.lhs.len(), 2);
            }
            other => panic!("expected reduced row, got {:?}", other),
        }
        assert!(matches!(
            sys.solution(&li("LI(2,0,0;2)")),
            Solution::Unsolved(None)
        ));
    }
}
