// scratch: recover exact coefficients for suspect rows
use eulerlog::constants::extended_basis;
use eulerlog::index::Index;
use eulerlog::numeric::{detect_relation, eval_index};

fn main() {
    let digits = 60;
    for (name, w) in [
        ("ES(3,-1;-1)", 5u32),
        ("QES(32;-21)", 4),
        ("QES(11,31;32)", 5),
        ("QES(31,32;21)", 5),
        ("piQBES(2;1)", 4),
        ("piQBES(11;1)", 4),
    ] {
        let idx = Index::parse(name).unwrap();
        let v = eval_index(&idx, digits).expect("eval");
        let basis = if w <= 4 {
            extended_basis(w)
        } else {
            eulerlog::constants::fibonacci_basis(w)
        };
        match detect_relation(&v, &basis, digits) {
            Some(d) => {
                print!("{name} = ");
                for (m, q) in &d.coeffs {
                    print!("{q}*[{m}] ");
                }
                println!("  (residual {:.3e})", d.residual.to_f64());
            }
            None => println!("{name}: no relation found"),
        }
    }
}
