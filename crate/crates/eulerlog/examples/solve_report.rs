// scratch: coverage + correctness of the symbolic solves
use eulerlog::corpus::Corpus;
use eulerlog::forge::{solve_family, Generator};
use eulerlog::index::{enumerate, Family};
use eulerlog::linalg::Solution;

fn main() {
    let corpus = Corpus::load_builtin().unwrap();
    for (fam, wmax, gens) in [
        (Family::Li, 5, Generator::defaults_for(Family::Li)),
        (Family::Es, 5, Generator::defaults_for(Family::Es)),
    ] {
        println!("=== {:?} up to weight {wmax} ===", fam);
        match solve_family(fam, wmax, &gens) {
            Err(e) => println!("ERROR: {e}"),
            Ok((sys, report)) => {
                println!("{report}");
                let mut mismatches = 0;
                for w in 1..=wmax {
                    for idx in enumerate(fam, w) {
                        if let Solution::Solved(v) = sys.solution(&idx) {
                            let want = &corpus.get(&idx).unwrap().rhs;
                            if v != want {
                                mismatches += 1;
                                println!("MISMATCH {idx}: got {v} want {want}");
                            }
                        }
                    }
                }
                println!("mismatched solved entries: {mismatches}");
            }
        }
    }
}
