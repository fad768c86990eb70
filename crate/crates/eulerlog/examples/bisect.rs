use eulerlog::forge::{solve_family, Generator};
use eulerlog::index::Family;
fn main() {
    use Generator::*;
    for (name, gens) in [
        ("prop1", vec![Prop1]),
        ("prop1+ibp", vec![Prop1, Ibp]),
        ("prop1+frac", vec![Prop1, Fractional]),
        ("prop1+beta", vec![Prop1, Beta]),
        ("ibp+beta", vec![Ibp, Beta]),
        ("ibp+frac", vec![Ibp, Fractional]),
        ("all", vec![Prop1, Ibp, Fractional, Beta]),
    ] {
        match solve_family(Family::Li, 5, &gens) {
            Err(e) => println!("{name}: ERROR {e}"),
            Ok((_, rep)) => {
                let s: usize = rep.lines.iter().map(|l| l.solved).sum();
                let t: usize = rep.lines.iter().map(|l| l.total).sum();
                println!("{name}: {s}/{t}");
            }
        }
    }
}
