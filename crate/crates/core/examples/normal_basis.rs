//! Self-complementary normal bases: the trace form tr(x y) is the identity
//! on the basis.

use std::sync::Arc;

use multirate_mrd::field::{
    find_self_complementary_normal_basis, gram_matrix, FiniteField, GroundField, PrimeField,
    DEFAULT_LOG_TABLE_BOUND,
};

fn show(label: &str, p: u32, poly: Vec<u32>) -> multirate_mrd::Result<()> {
    let f = GroundField::new(Arc::new(PrimeField::new(p)?), poly, DEFAULT_LOG_TABLE_BOUND)?;
    match find_self_complementary_normal_basis(&f) {
        Ok(basis) => {
            let logs: Vec<u64> = basis
                .elements
                .iter()
                .map(|&e| f.discrete_log(e))
                .collect::<Result<_, _>>()?;
            let gram = gram_matrix(&f, &basis.elements);
            println!("{label}: basis logs {logs:?}, gram = {:?}", gram.row_vecs());
        }
        Err(e) => println!("{label}: {e}"),
    }
    Ok(())
}

fn main() -> multirate_mrd::Result<()> {
    show("GF(8)", 2, vec![1, 1, 0, 1])?;
    show("GF(4)", 2, vec![1, 1, 1])?;
    show("GF(32)", 2, vec![1, 0, 1, 0, 0, 1])?;
    show("GF(27)", 3, vec![1, 2, 0, 1])?;
    show("GF(9)", 3, vec![2, 2, 1])?;
    Ok(())
}
