use std::collections::HashSet;
use std::sync::Arc;

use multirate_mrd::field::{
    Extension, FiniteField, GroundField, PrimeField, TopField, Tower, TowerConfig,
    DEFAULT_LOG_TABLE_BOUND,
};
use proptest::prelude::*;

fn tower() -> Tower {
    Tower::paper_8_3()
}

fn top_idx() -> impl Strategy<Value = u64> {
    0u64..512
}

proptest! {
    #[test]
    fn top_field_axioms(a in top_idx(), b in top_idx(), c in top_idx()) {
        let t = tower();
        let f: &TopField = t.top();
        let (a, b, c) = (f.element(a), f.element(b), f.element(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !f.is_zero(a) {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.from_log(f.discrete_log(a).unwrap()), a);
        }
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative(a in top_idx(), b in top_idx()) {
        let t = tower();
        let f = t.top();
        let (a, b) = (f.element(a), f.element(b));
        prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
        prop_assert_eq!(f.frobenius(a), f.pow(a, 8));
    }

    #[test]
    fn trace_is_linear_over_the_ground_field(a in top_idx(), b in top_idx(), c in 0u64..8) {
        let t = tower();
        let (f, g) = (t.top(), t.ground());
        let (a, b, c) = (f.element(a), f.element(b), g.element(c));
        let lhs = f.trace(f.add(f.mul(f.embed(c), a), b));
        prop_assert_eq!(lhs, g.add(g.mul(c, f.trace(a)), f.trace(b)));
        // the trace is fixed by the ground Frobenius, so it lands in GF(8)
        prop_assert_eq!(f.embed(f.trace(a)), f.pow(f.embed(f.trace(a)), 8));
    }

    #[test]
    fn coefficients_round_trip(a in top_idx()) {
        let t = tower();
        let f = t.top();
        let e = f.element(a);
        prop_assert_eq!(f.from_coefficients(&f.coefficients(e)).unwrap(), e);
        prop_assert_eq!(f.index_of(e), a);
    }
}

#[test]
fn vector_view_is_a_bijection() {
    let t = tower();
    let mut seen = HashSet::new();
    for i in 0..512 {
        let e = t.top().element(i);
        let v = t.top_to_vec(e);
        assert_eq!(v.len(), 3);
        assert_eq!(t.vec_to_top(&v).unwrap(), e);
        assert!(seen.insert(v));
    }
    assert_eq!(seen.len(), 512);
}

#[test]
fn generators_have_full_order() {
    let t = tower();
    assert_eq!(t.ground().multiplicative_order(t.alpha()).unwrap(), 7);
    assert_eq!(t.top().multiplicative_order(t.beta()).unwrap(), 511);
    // 511 = 7 * 73
    assert_eq!(
        t.top().multiplicative_order(t.top().from_log(73)).unwrap(),
        7
    );
    assert!(t.top().multiplicative_order(t.top().zero()).is_err());
}

#[test]
fn ground_field_embeds_as_the_fixed_field_of_frobenius() {
    let t = tower();
    let f = t.top();
    let fixed: Vec<_> = (0..512)
        .map(|i| f.element(i))
        .filter(|&e| f.frobenius(e) == e)
        .collect();
    assert_eq!(fixed.len(), 8);
    for i in 0..8 {
        assert!(fixed.contains(&f.embed(t.ground().element(i))));
    }
    // GF(8)* sits inside GF(512)* as the powers of b^73
    assert_eq!(f.embed(t.alpha()), f.from_log(73));
}

#[test]
fn non_primitive_top_poly_is_rejected() {
    // x^3 + x + 1 has a root in GF(8), so it is reducible over GF(8)
    let mut cfg = TowerConfig::paper_8_3();
    cfg.top_poly[0] = Tower::paper_8_3().ground().one();
    assert!(Tower::new(cfg).is_err());
}

#[test]
fn odd_characteristic_tower() {
    // GF(3) ⊂ GF(27) ⊂ GF(27^3)
    let p = Arc::new(PrimeField::new(3).unwrap());
    let g = GroundField::new(p, vec![1, 2, 0, 1], DEFAULT_LOG_TABLE_BOUND).unwrap();
    assert_eq!(g.order(), 27);
    let x = g.primitive_element();
    assert_eq!(g.multiplicative_order(x).unwrap(), 26);
    assert_eq!(g.add(g.add(x, x), x), g.zero());
}

#[test]
fn large_top_field_without_tables() {
    let mut cfg = TowerConfig::paper_8_3();
    cfg.log_table_bound = 16;
    let t = Tower::new(cfg).unwrap();
    assert!(!t.top().has_log_tables());
    let reference = Tower::paper_8_3();
    for e in [1u64, 26, 133, 344, 510] {
        assert_eq!(t.top().from_log(e), reference.top().from_log(e));
        assert_eq!(t.top().discrete_log(t.top().from_log(e)).unwrap(), e);
    }
}
