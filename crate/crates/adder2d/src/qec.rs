//! Concatenated-code gate-count overhead and baseline/optimized ratios.

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::Serialize;

use crate::adder::{assemble, AdderParams};
use crate::blocks::Variant;
use crate::error::Result;
use crate::schedule::{measured_formula, CostModel};

/// Exact rational over i64.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QecParams {
    /// Logical fault-tolerant operation count.
    pub n_u: u64,
    /// Physical instructions per fault-tolerant gate, transport included.
    pub n_e: u64,
    /// Concatenation level.
    pub level: u32,
}

/// N_U * N_E^L, exactly.
pub fn physical_gate_count(p: QecParams) -> BigUint {
    BigUint::from(p.n_u) * BigUint::from(p.n_e).pow(p.level)
}

/// Physical counts for levels 0..=max_level.
pub fn counts_by_level(n_u: u64, n_e: u64, max_level: u32) -> Vec<BigUint> {
    (0..=max_level).map(|level| physical_gate_count(QecParams { n_u, n_e, level })).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionRatio {
    pub n: usize,
    pub cost_model: String,
    pub optimized_coefficient: i64,
    pub baseline_coefficient: i64,
    /// Optimized over baseline leading depth coefficient, reduced.
    pub depth_ratio: String,
    pub optimized_gates: usize,
    pub baseline_gates: usize,
    /// Optimized over baseline total block-level gate count, reduced.
    pub gate_ratio: String,
}

/// Ratio of the measured leading depth coefficients.
pub fn depth_coefficient_ratio(cost: &CostModel) -> Result<Rational> {
    let (opt, _) = measured_formula(Variant::Optimized, cost)?;
    let (base, _) = measured_formula(Variant::Baseline, cost)?;
    Ok(Rational::new(opt, base))
}

/// Depth-coefficient and gate-count ratios of the optimized over the
/// baseline adder at width n.
pub fn adder_reduction_ratio(n: usize, cost: &CostModel) -> Result<ReductionRatio> {
    let (optimized_coefficient, _) = measured_formula(Variant::Optimized, cost)?;
    let (baseline_coefficient, _) = measured_formula(Variant::Baseline, cost)?;
    let opt = assemble(AdderParams::new(n, Variant::Optimized))?;
    let base = assemble(AdderParams::new(n, Variant::Baseline))?;
    let (og, bg) = (opt.block_level.len(), base.block_level.len());
    Ok(ReductionRatio {
        n,
        cost_model: cost.to_string(),
        optimized_coefficient,
        baseline_coefficient,
        depth_ratio: Rational::new(optimized_coefficient, baseline_coefficient).to_string(),
        optimized_gates: og,
        baseline_gates: bg,
        gate_ratio: Rational::new(og as i64, bg as i64).to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_formula() {
        let c = |n_u, n_e, level| physical_gate_count(QecParams { n_u, n_e, level });
        assert_eq!(c(100, 50, 2), BigUint::from(250_000u32));
        assert_eq!(c(7, 1, 10), BigUint::from(7u32));
        assert_eq!(c(12345, 99, 0), BigUint::from(12345u32));
    }

    #[test]
    fn no_overflow() {
        let big = physical_gate_count(QecParams { n_u: u64::MAX, n_e: u64::MAX, level: 4 });
        assert_eq!(big.bits(), 320);
    }

    #[test]
    fn reduced_fraction() {
        assert_eq!(Rational::new(104, 140), Rational::new(26, 35));
    }
}
