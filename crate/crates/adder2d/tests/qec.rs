use adder2d::blocks::Variant;
use adder2d::qec::{
    adder_reduction_ratio, counts_by_level, depth_coefficient_ratio, physical_gate_count, QecParams, Rational,
};
use adder2d::schedule::{formula_depth, CostModel};
use num_bigint::BigUint;
use proptest::prelude::*;

#[test]
fn two_level_example() {
    let p = QecParams { n_u: 100, n_e: 50, level: 2 };
    assert_eq!(physical_gate_count(p), BigUint::from(250_000u32));
}

#[test]
fn counts_by_level_example() {
    let want: Vec<BigUint> = [10u32, 70, 490, 3430].into_iter().map(BigUint::from).collect();
    assert_eq!(counts_by_level(10, 7, 3), want);
}

#[test]
fn published_coefficient_ratios() {
    let ratio = |cost: &CostModel| {
        let opt = formula_depth(16, Variant::Optimized, cost).unwrap().coefficient;
        let base = formula_depth(16, Variant::Baseline, cost).unwrap().coefficient;
        Rational::new(opt, base)
    };
    assert_eq!(ratio(&CostModel::T14S1), Rational::new(26, 35));
    assert_eq!(ratio(&CostModel::T12S1), Rational::new(23, 31));
    assert_eq!(Rational::new(92, 140), Rational::new(23, 35));
}

#[test]
fn measured_coefficient_ratios() {
    // The measured baseline coefficients are 138 and 122.
    assert_eq!(depth_coefficient_ratio(&CostModel::T14S1).unwrap(), Rational::new(104, 138));
    assert_eq!(depth_coefficient_ratio(&CostModel::T12S1).unwrap(), Rational::new(92, 122));
    assert_eq!(depth_coefficient_ratio(&CostModel::T14S1).unwrap().to_string(), "52/69");
}

#[test]
fn reduction_ratio_record() {
    let r = adder_reduction_ratio(9, &CostModel::T14S1).unwrap();
    assert_eq!((r.optimized_coefficient, r.baseline_coefficient), (104, 138));
    assert_eq!(r.depth_ratio, "52/69");
    let g = Rational::new(r.optimized_gates as i64, r.baseline_gates as i64);
    assert_eq!(r.gate_ratio, g.to_string());
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["n"], 9);
    assert!(adder_reduction_ratio(8, &CostModel::T14S1).is_err());
}

proptest! {
    #[test]
    fn each_level_multiplies_by_n_e(n_u in 0u64..1_000_000, n_e in 0u64..1_000, level in 0u32..12) {
        let lo = physical_gate_count(QecParams { n_u, n_e, level });
        let hi = physical_gate_count(QecParams { n_u, n_e, level: level + 1 });
        prop_assert_eq!(hi, lo * BigUint::from(n_e));
    }

    #[test]
    fn level_zero_is_identity(n_u in any::<u64>(), n_e in any::<u64>()) {
        prop_assert_eq!(physical_gate_count(QecParams { n_u, n_e, level: 0 }), BigUint::from(n_u));
    }
}
