//! Symbolic relation generators and the weight-induction solving pipeline.

pub mod beta;
pub mod es;
pub mod fractional;
pub mod ibp;
pub mod prop1;
pub mod qes;

use std::collections::BTreeMap;
use std::fmt;

use crate::constants::BasisVector;
use crate::index::{enumerate, Family, Index};
use crate::linalg::{Relation, Solution, System, SystemError};

/// Exact values of already-solved indices, consumed by generators that move
/// lower-weight terms to the right-hand side.
pub type SolvedTable = BTreeMap<Index, BasisVector>;

/// Generator tags selectable from the CLI / solve_family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Generator {
    Prop1,
    Ibp,
    Fractional,
    Beta,
    Symmetric,
    PartialFractions,
    Euler,
}

impl Generator {
    pub fn parse(s: &str) -> Option<Generator> {
        Some(match s {
            "prop1" | "closed" => Generator::Prop1,
            "ibp" => Generator::Ibp,
            "frac" | "fractional" => Generator::Fractional,
            "beta" => Generator::Beta,
            "symmetric" | "sym" => Generator::Symmetric,
            "pfrac" | "partial-fractions" => Generator::PartialFractions,
            "euler" => Generator::Euler,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generator::Prop1 => "prop1",
            Generator::Ibp => "ibp",
            Generator::Fractional => "fractional",
            Generator::Beta => "beta",
            Generator::Symmetric => "symmetric",
            Generator::PartialFractions => "pfrac",
            Generator::Euler => "euler",
        }
    }

    pub fn defaults_for(family: Family) -> Vec<Generator> {
        match family {
            Family::Li => vec![
                Generator::Prop1,
                Generator::Ibp,
                Generator::Fractional,
                Generator::Beta,
            ],
            Family::Es => vec![
                Generator::Symmetric,
                Generator::PartialFractions,
                Generator::Euler,
            ],
            _ => vec![],
        }
    }
}

#[derive(Debug, Clone)]
pub struct CoverageLine {
    pub weight: u32,
    pub solved: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Default)]
pub struct CoverageReport {
    pub lines: Vec<CoverageLine>,
    pub relations_used: usize,
}

impl fmt::Display for CoverageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "weight {}: solved {}/{}", l.weight, l.solved, l.total)?;
        }
        write!(f, "relations: {}", self.relations_used)
    }
}

/// Run the selected generators weight by weight and eliminate. Lower-weight
/// solutions feed the next stratum's right-hand sides.
pub fn solve_family(
    family: Family,
    wmax: u32,
    gens: &[Generator],
) -> Result<(System, CoverageReport), SystemError> {
    let mut sys = System::new();
    let mut solved = SolvedTable::new();
    let mut report = CoverageReport::default();
    let min_w = match family {
        Family::Li => 1,
        Family::Es => 2,
        _ => 1,
    };
    for w in min_w..=wmax {
        let mut rels: Vec<Relation> = Vec::new();
        match family {
            Family::Li => {
                for g in gens {
                    match g {
                        Generator::Prop1 => rels.extend(
                            prop1::prop1_closed_forms(w)
                                .into_iter()
                                .filter(|r| r.lhs_weight() == Some(w)),
                        ),
                        Generator::Ibp => rels.extend(ibp::ibp_li_relations(w)),
                        Generator::Fractional => {
                            rels.extend(fractional::fractional_li_relations(w, &solved))
                        }
                        Generator::Beta => rels.extend(
                            beta::beta_derivative_relations(w)
                                .into_iter()
                                .filter(|r| r.lhs_weight() == Some(w)),
                        ),
                        _ => {}
                    }
                }
            }
            Family::Es => {
                for g in gens {
                    match g {
                        Generator::Symmetric => {
                            rels.extend(es::es_symmetric_relations_weight(w))
                        }
                        Generator::PartialFractions => {
                            rels.extend(es::es_partial_fraction_relations_weight(w))
                        }
                        Generator::Euler => {
                            for idx in enumerate(Family::Es, w) {
                                if let Index::Es(e) = &idx {
                                    if let Some(v) = es::euler_reductions(e) {
                                        let mut r = Relation::new(format!("euler {}", idx));
                                        r.add_lhs(idx.clone(), rug::Rational::from(1));
                                        r.add_rhs(&v);
                                        rels.push(r);
                                    }
                                }
                            }
                        }
                        _ => {}
                    }
                }
            }
            _ => {}
        }
        report.relations_used += rels.len();
        for r in rels {
            sys.add_relation(r)?;
        }
        sys.eliminate()?;
        // harvest this stratum
        let all = enumerate(family, w);
        let mut nsolved = 0;
        for idx in &all {
            if let Solution::Solved(v) = sys.solution(idx) {
                solved.insert(idx.clone(), v.clone());
                nsolved += 1;
            }
        }
        report.lines.push(CoverageLine {
            weight: w,
            solved: nsolved,
            total: all.len(),
        });
    }
    Ok((sys, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn li_weight3_fully_solved_and_matches_corpus() {
        let (sys, report) = solve_family(
            Family::Li,
            3,
            &[Generator::Prop1, Generator::Ibp, Generator::Fractional],
        )
        .expect("solve");
        let total: usize = report.lines.iter().map(|l| l.total).sum();
        let nsolved: usize = report.lines.iter().map(|l| l.solved).sum();
        assert_eq!(total, 21);
        assert_eq!(nsolved, 21, "coverage report:\n{report}");
        let corpus = crate::corpus::Corpus::load_builtin().unwrap();
        for w in 1..=3 {
            for idx in enumerate(Family::Li, w) {
                match sys.solution(&idx) {
                    Solution::Solved(v) => {
                        let want = &corpus.get(&idx).unwrap().rhs;
                        assert_eq!(v, want, "mismatch at {idx}");
                    }
                    _ => panic!("{idx} unsolved"),
                }
            }
        }
    }
}
