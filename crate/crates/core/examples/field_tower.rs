//! Arithmetic in the tower GF(2) ⊂ GF(8) ⊂ GF(8³) and the vector view of
//! top-field elements.

use multirate_mrd::field::{Extension, FiniteField, Tower};
use multirate_mrd::text::{format_ground, format_ground_tuple, format_top};

fn main() -> multirate_mrd::Result<()> {
    let t = Tower::paper_8_3();
    let (g, top) = (t.ground(), t.top());
    println!(
        "GF({}) over GF({}), then GF({})",
        g.order(),
        t.prime().order(),
        top.order()
    );

    let a = t.alpha();
    println!(
        "a^3 + a + 1 = {}",
        format_ground(&t, g.add(g.add(g.pow(a, 3), a), g.one()))
    );

    let b = t.beta();
    let root = top.add(top.add(top.pow(b, 3), b), top.embed(a));
    println!("b^3 + b + a = {}", format_top(&t, root));

    for e in [133, 344, 417, 490, 29] {
        let x = top.from_log(e);
        println!("b^{e:<3} <-> {}", format_ground_tuple(&t, &t.top_to_vec(x)));
    }

    let x = top.from_log(100);
    println!("frobenius(b^100) = {}", format_top(&t, top.frobenius(x)));
    println!("trace(b^100) = {}", format_ground(&t, top.trace(x)));
    println!(
        "order of b^7 = {}",
        top.multiplicative_order(top.from_log(7))?
    );
    println!(
        "log_b(b^3 * b^510) = {}",
        top.discrete_log(top.mul(top.from_log(3), top.from_log(510)))?
    );
    Ok(())
}
