// scratch: drive the reduction pipeline on the worked example and the two
// discard cases, verifying values numerically and against the corpus
use eulerlog::corpus::Corpus;
use eulerlog::expand::{pipeline_reduce, pipeline_value, Outcome};
use eulerlog::forge::SolvedTable;
use eulerlog::index::{Family, Index, PliIndex};

fn main() {
    let corpus = Corpus::load_builtin().unwrap();
    let mut values = SolvedTable::new();
    for e in &corpus.entries {
        values.insert(e.index.clone(), e.rhs.clone());
    }
    for name in ["PLI(101;21;2)", "PLI(101;22;2)", "PLI(200;22;2)"] {
        let idx = Index::parse(name).unwrap();
        let pli: PliIndex = match &idx {
            Index::Pli(p) => p.clone(),
            _ => unreachable!(),
        };
        match pipeline_reduce(&pli, &values) {
            Err(e) => println!("{name}: ERROR {e}"),
            Ok(Outcome::Discarded) => println!("{name}: DISCARDED"),
            Ok(out) => {
                if let Outcome::Reduced { terms, trail, .. } = &out {
                    println!("{name}: reduced to {} sum terms (trail: {})", terms.len(), trail.join(" | "));
                    for (q, i) in terms {
                        println!("   {q} * {i}");
                    }
                }
                match pipeline_value(&out, &values) {
                    None => println!("   value: lookup failed"),
                    Some(v) => {
                        let want = &corpus.get(&idx).unwrap().rhs;
                        println!("   value == corpus row: {}", &v == want);
                        if &v != want {
                            println!("   got  {v}");
                            println!("   want {want}");
                        }
                    }
                }
            }
        }
    }
    // run the whole eligible class and compare against corpus
    let mut ok = 0;
    let mut bad = 0;
    let mut disc = 0;
    for idx in eulerlog::index::enumerate(Family::Pli, 5) {
        let pli = match &idx {
            Index::Pli(p) => p.clone(),
            _ => continue,
        };
        match pipeline_reduce(&pli, &values) {
            Err(_) => {}
            Ok(Outcome::Discarded) => disc += 1,
            Ok(out) => match pipeline_value(&out, &values) {
                Some(v) => {
                    if &v == &corpus.get(&idx).unwrap().rhs {
                        ok += 1;
                    } else {
                        bad += 1;
                        println!("VALUE MISMATCH {idx}");
                    }
                }
                None => {
                    disc += 1;
                }
            },
        }
    }
    println!("eligible reductions: ok={ok} bad={bad} discarded={disc}");
}
