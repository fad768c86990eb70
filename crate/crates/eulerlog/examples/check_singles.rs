// numeric check of every single-unknown relation from prop1 and beta
use eulerlog::forge::{beta, prop1};
use eulerlog::numeric::{eval_vector, quad_eval, mpf};
use rug::Float;

fn main() {
    let digits = 40;
    let mut rels = prop1::prop1_closed_forms(5);
    rels.extend(beta::beta_derivative_relations(5));
    let mut bad = 0;
    for r in &rels {
        if r.lhs.len() != 1 {
            continue;
        }
        let (idx, c) = r.lhs.iter().next().unwrap();
        let v = quad_eval(idx, digits).expect("quad");
        let rhs = eval_vector(&r.rhs, digits);
        let prec = v.value.prec();
        let lhs = Float::with_val(prec, &v.value * Float::with_val(prec, c));
        let diff = Float::with_val(prec, &lhs - &rhs.value).abs();
        if diff > mpf::pow10_neg(prec, 30) {
            bad += 1;
            println!("BAD {} [{}]: diff={:.3e}", idx, r.provenance, diff.to_f64());
        }
    }
    println!("bad single relations: {bad}");
}
