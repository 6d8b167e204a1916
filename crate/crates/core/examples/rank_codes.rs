//! Gabidulin codes, their parity checks and orthogonal projectors, and the
//! rank metric.

use std::sync::Arc;

use multirate_mrd::field::{find_self_complementary_normal_basis, FiniteField, Tower};
use multirate_mrd::matrix::vec_mul;
use multirate_mrd::rank::{min_rank_distance, rank_weight, CodeSpec, DEFAULT_ENUMERATION_BOUND};
use multirate_mrd::text::{format_ground_matrix, format_ground_tuple, format_top_matrix};

fn main() -> multirate_mrd::Result<()> {
    let t = Tower::paper_8_3();
    let g = t.ground();
    let basis = find_self_complementary_normal_basis(&**g)?;

    for k in 1..=3 {
        let c = CodeSpec::moore(Arc::clone(g), &basis.elements, k)?;
        let d = min_rank_distance(&c, DEFAULT_ENUMERATION_BOUND)?;
        println!("C{k}: d = {d}, LCD = {}", c.is_lcd());
        println!("  G  = {}", format_ground_matrix(&t, c.generator()));
        if c.parity_check().rows() > 0 {
            println!("  H  = {}", format_ground_matrix(&t, c.parity_check()));
        }
        println!("  Pi = {}", format_ground_matrix(&t, c.projector()?));
    }

    let c1 = CodeSpec::moore(Arc::clone(g), &basis.elements, 1)?;
    let v = vec![g.one(), g.from_log(1), g.zero()];
    let p = c1.projectors()?;
    let inside = vec_mul(&**g, &v, &p.code)?;
    let outside = vec_mul(&**g, &v, &p.dual)?;
    println!(
        "{} = {} + {}",
        format_ground_tuple(&t, &v),
        format_ground_tuple(&t, &inside),
        format_ground_tuple(&t, &outside)
    );
    println!(
        "C1 part in C1: {}, syndrome of v: {}",
        c1.contains(&inside)?,
        format_ground_tuple(&t, &c1.syndrome(&v)?)
    );

    let top = t.top();
    let mother_basis: Vec<_> = (0..3).map(|i| top.from_log(i)).collect();
    let mother = CodeSpec::moore(Arc::clone(top), &mother_basis, 1)?;
    println!("mother G = {}", format_top_matrix(&t, mother.generator()));
    let constant = vec![top.from_log(5); 3];
    println!(
        "rank of a constant vector: {}",
        rank_weight(&**top, &constant)
    );
    Ok(())
}
