// scratch: full corpus verification sweep
use eulerlog::corpus::{family_tier, verify_entry, Corpus};
use rayon::prelude::*;

fn main() {
    let t0 = std::time::Instant::now();
    let c = Corpus::load_builtin().expect("load");
    let outcomes: Vec<_> = c
        .entries
        .par_iter()
        .map(|e| {
            let (digits, tol) = family_tier(e.family);
            let o = verify_entry(e, digits, tol);
            (e.family, o)
        })
        .collect();
    let mut fails = 0;
    for (fam, o) in &outcomes {
        if !o.pass {
            fails += 1;
            println!("FAIL {:?} {} [{}] residual={:?} {}", fam, o.index, o.source, o.residual, o.detail);
        }
    }
    println!("total {} fail {} elapsed {:?}", outcomes.len(), fails, t0.elapsed());
}
