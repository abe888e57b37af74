//! ASAP depth scheduling under a parametric cost model, and the block-sum
//! depth accounting of the two adder variants.
//!
//! Two accountings are reported. Block-sum mode sums measured block depths along
//! the critical chain of blocks, with barriers between blocks and phases:
//!
//! ```text
//! baseline   phase1 = g,p + (m-1) G,P        phase2 = (m-1) ColumnCarry
//!            phase3 = (m-1) Carry + Carry1 + SUM1
//!            clearing = phase1 + phase2 + phase3 - SUM1
//! optimized  phase1 = g,p + G,P first + (m-2) G,P
//!            phase2 = (m-1) ColumnCarry
//!            phase3 = (m-2) Carry + Carry1 + SUM
//!            clearing = phase1 + phase2 + phase3 - SUM
//! total = phase1 + phase2 + phase3 + clearing + 2 one-qubit + 1 CNOT
//! ```
//!
//! Free mode schedules the assembled circuit itself, either globally or with
//! a barrier after every stage.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::adder::{assemble, AdderCircuit, AdderParams, Stage, StageSpan};
use crate::blocks::{canonical_instance, BlockKind, Variant};
use crate::error::{Error, Result};
use crate::ir::{Circuit, Gate, GateKind};
use crate::layout::exact_sqrt;

/// Unit costs per gate class. `toffoli_block` is the cost of an unexpanded
/// Toffoli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CostModel {
    pub cnot: usize,
    pub swap: usize,
    pub one_qubit: usize,
    pub toffoli_block: usize,
}

impl CostModel {
    pub const T14S1: CostModel = CostModel { cnot: 1, swap: 1, one_qubit: 1, toffoli_block: 14 };
    pub const T14S3: CostModel = CostModel { cnot: 1, swap: 3, one_qubit: 1, toffoli_block: 14 };
    pub const T12S3: CostModel = CostModel { cnot: 1, swap: 3, one_qubit: 1, toffoli_block: 12 };
    pub const T12S1: CostModel = CostModel { cnot: 1, swap: 1, one_qubit: 1, toffoli_block: 12 };

    pub const NAMED: [(&'static str, CostModel); 4] = [
        ("t14s1", CostModel::T14S1),
        ("t14s3", CostModel::T14S3),
        ("t12s3", CostModel::T12S3),
        ("t12s1", CostModel::T12S1),
    ];

    pub fn new(cnot: usize, swap: usize, one_qubit: usize, toffoli_block: usize) -> Result<CostModel> {
        let c = CostModel { cnot, swap, one_qubit, toffoli_block };
        if [cnot, swap, one_qubit, toffoli_block].contains(&0) {
            return Err(Error::UnsupportedCostModel(c.to_string()));
        }
        Ok(c)
    }

    pub fn named(name: &str) -> Result<CostModel> {
        let key = name.to_ascii_lowercase();
        CostModel::NAMED
            .iter()
            .find(|(n, _)| *n == key)
            .map(|&(_, c)| c)
            .ok_or_else(|| Error::UnsupportedCostModel(name.to_string()))
    }

    pub fn name(&self) -> Option<&'static str> {
        CostModel::NAMED.iter().find(|(_, c)| c == self).map(|&(n, _)| n)
    }

    pub fn gate_cost(&self, kind: GateKind) -> usize {
        match kind {
            GateKind::CNOT => self.cnot,
            GateKind::SWAP => self.swap,
            GateKind::TOFFOLI => self.toffoli_block,
            GateKind::X | GateKind::H | GateKind::T | GateKind::Tdg => self.one_qubit,
        }
    }
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel::T14S1
    }
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(n) => f.write_str(n),
            None => {
                write!(f, "C={},S={},1q={},T={}", self.cnot, self.swap, self.one_qubit, self.toffoli_block)
            }
        }
    }
}

impl FromStr for CostModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CostModel::named(s)
    }
}

/// Finish time of the last gate when every gate starts as soon as all of
/// its qubits are free.
pub fn asap_depth(circuit: &Circuit, cost: &CostModel) -> usize {
    asap_gates(&circuit.gates, circuit.n_qubits, cost)
}

pub fn asap_gates(gates: &[Gate], n_qubits: usize, cost: &CostModel) -> usize {
    let mut free = vec![0usize; n_qubits];
    let mut depth = 0;
    for g in gates {
        let start = g.qubits.iter().map(|&q| free[q]).max().unwrap_or(0);
        let finish = start + cost.gate_cost(g.kind);
        for &q in &g.qubits {
            free[q] = finish;
        }
        depth = depth.max(finish);
    }
    depth
}

/// ASAP depth of each stage on its own, as if a barrier closed every stage.
pub fn staged_depths(circuit: &Circuit, spans: &[StageSpan], cost: &CostModel) -> Vec<(Stage, usize)> {
    spans
        .iter()
        .map(|s| (s.stage, asap_gates(&circuit.gates[s.start..s.end], circuit.n_qubits, cost)))
        .collect()
}

/// ASAP depth of every block of a variant at its representative placement.
pub fn block_depths(variant: Variant, cost: &CostModel) -> Result<BTreeMap<BlockKind, usize>> {
    BlockKind::ALL
        .iter()
        .filter(|k| k.exists_in(variant))
        .map(|&k| Ok((k, asap_depth(&canonical_instance(k, variant)?.circuit, cost))))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Phase {
    /// Ripple-carry column (half adder and full adders).
    Phase1Ripple,
    /// Lookahead columns (g,p and G,P chains).
    Phase1Lookahead,
    Phase2,
    Phase3,
    Clearing,
    Total,
}

impl Phase {
    pub const ALL: [Phase; 6] = [
        Phase::Phase1Ripple,
        Phase::Phase1Lookahead,
        Phase::Phase2,
        Phase::Phase3,
        Phase::Clearing,
        Phase::Total,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Phase::Phase1Ripple => "phase1-1",
            Phase::Phase1Lookahead => "phase1-2",
            Phase::Phase2 => "phase2",
            Phase::Phase3 => "phase3",
            Phase::Clearing => "clearing",
            Phase::Total => "total",
        }
    }

    /// Published (coefficient, constant) of the phase under t14s1.
    pub fn published(self, variant: Variant) -> (i64, i64) {
        match (variant, self) {
            (Variant::Baseline, Phase::Phase1Ripple) => (32, -17),
            (Variant::Baseline, Phase::Phase1Lookahead) => (34, -19),
            (Variant::Baseline, Phase::Phase2) => (18, -18),
            (Variant::Baseline, Phase::Phase3) => (18, 1),
            (Variant::Baseline, Phase::Clearing) => (70, -39),
            (Variant::Baseline, Phase::Total) => (140, -72),
            (Variant::Optimized, Phase::Phase1Ripple) => (17, -2),
            (Variant::Optimized, Phase::Phase1Lookahead) => (17, 11),
            (Variant::Optimized, Phase::Phase2) => (17, -17),
            (Variant::Optimized, Phase::Phase3) => (18, -18),
            (Variant::Optimized, Phase::Clearing) => (52, -24),
            (Variant::Optimized, Phase::Total) => (104, -46),
        }
    }
}

/// Block-sum depth of every phase for a column height m.
pub fn block_sum_phases(m: usize, variant: Variant, cost: &CostModel) -> Result<BTreeMap<Phase, i64>> {
    if m < 2 {
        return Err(Error::InvalidWidth(m * m));
    }
    let d = block_depths(variant, cost)?;
    let b = |k: BlockKind| d[&k] as i64;
    let m = m as i64;
    use BlockKind as K;
    let ripple = b(K::HalfAdder) + (m - 1) * b(K::FullAdder);
    let (lookahead, phase3, last_sum) = match variant {
        Variant::Baseline => {
            (b(K::Gp) + (m - 1) * b(K::BigGp), (m - 1) * b(K::Carry) + b(K::Carry1) + b(K::Sum1), b(K::Sum1))
        }
        Variant::Optimized => (
            b(K::Gp) + b(K::BigGpFirst) + (m - 2) * b(K::BigGp),
            (m - 2) * b(K::Carry) + b(K::Carry1) + b(K::Sum),
            b(K::Sum),
        ),
    };
    let phase1 = ripple.max(lookahead);
    let phase2 = (m - 1) * b(K::ColumnCarry);
    let clearing = phase1 + phase2 + phase3 - last_sum;
    let finalization = 2 * cost.one_qubit as i64 + cost.cnot as i64;
    let total = phase1 + phase2 + phase3 + clearing + finalization;
    Ok(BTreeMap::from([
        (Phase::Phase1Ripple, ripple),
        (Phase::Phase1Lookahead, lookahead),
        (Phase::Phase2, phase2),
        (Phase::Phase3, phase3),
        (Phase::Clearing, clearing),
        (Phase::Total, total),
    ]))
}

/// Block-sum total depth for an n-bit adder.
pub fn block_sum_total(n: usize, variant: Variant, cost: &CostModel) -> Result<i64> {
    let m = exact_sqrt(n).filter(|_| n >= 4).ok_or(Error::InvalidWidth(n))?;
    Ok(block_sum_phases(m, variant, cost)?[&Phase::Total])
}

/// Measured (coefficient, constant) of the block-sum total as a function
/// of sqrt(n). Every block term is linear in m for m >= 2.
pub fn measured_formula(variant: Variant, cost: &CostModel) -> Result<(i64, i64)> {
    let t3 = block_sum_phases(3, variant, cost)?[&Phase::Total];
    let t4 = block_sum_phases(4, variant, cost)?[&Phase::Total];
    Ok((t4 - t3, t3 - 3 * (t4 - t3)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaDepth {
    pub coefficient: i64,
    /// Only published for t14s1.
    pub constant: Option<i64>,
    pub value: Option<i64>,
}

/// Published closed-form total depth: coefficient of sqrt(n) per named cost
/// model, and the constant where one is printed.
pub fn formula_depth(n: usize, variant: Variant, cost: &CostModel) -> Result<FormulaDepth> {
    let m = exact_sqrt(n).filter(|_| n >= 4).ok_or(Error::InvalidWidth(n))? as i64;
    let name = cost.name().ok_or_else(|| Error::UnsupportedCostModel(cost.to_string()))?;
    let coefficient = match (name, variant) {
        ("t14s1", Variant::Optimized) => 104,
        ("t14s1", Variant::Baseline) => 140,
        ("t14s3", Variant::Optimized) => 144,
        ("t14s3", Variant::Baseline) => 176,
        ("t12s3", Variant::Optimized) => 132,
        ("t12s3", Variant::Baseline) => 160,
        ("t12s1", Variant::Optimized) => 92,
        ("t12s1", Variant::Baseline) => 124,
        _ => unreachable!("named models only"),
    };
    let constant = (name == "t14s1").then(|| Phase::Total.published(variant).1);
    Ok(FormulaDepth { coefficient, constant, value: constant.map(|c| coefficient * m + c) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseRow {
    pub phase: Phase,
    pub depth: i64,
    /// Published value under t14s1.
    pub published: Option<i64>,
    pub delta: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageRow {
    pub stage: Stage,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub n: usize,
    pub variant: Variant,
    pub cost_model: String,
    pub per_block: BTreeMap<BlockKind, usize>,
    /// Block-sum phase depths.
    pub per_phase: Vec<PhaseRow>,
    /// Block-sum total.
    pub total_sequential: i64,
    /// Measured coefficient and constant of the block-sum total.
    pub coefficient: i64,
    pub constant: i64,
    /// Published closed form, if defined for the cost model.
    pub formula_expected: Option<i64>,
    pub formula_coefficient: Option<i64>,
    /// Stage depths of the assembled circuit with a barrier after each stage.
    pub per_stage: Vec<StageRow>,
    pub total_staged: usize,
    /// Global ASAP depth of the assembled block-level circuit.
    pub total_asap: usize,
    /// Depth of the junk-clear stage, which the block-sum sums do not contain.
    pub junk_clear: usize,
}

impl DepthReport {
    /// The block-sum total extended by the junk clear and its inverse.
    pub fn sequential_with_clear(&self) -> i64 {
        self.total_sequential + 2 * self.junk_clear as i64
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned plain-text table.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}-bit {} adder, cost model {}", self.n, self.variant, self.cost_model);
        let _ = writeln!(s, "\n{:<14} {:>6}", "block", "depth");
        for (k, d) in &self.per_block {
            let _ = writeln!(s, "{:<14} {:>6}", k.name(), d);
        }
        let _ =
            writeln!(s, "\n{:<14} {:>8} {:>10} {:>6}", "phase (block sum)", "depth", "published", "delta");
        for r in &self.per_phase {
            let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
            let _ = writeln!(
                s,
                "{:<14} {:>8} {:>10} {:>6}",
                r.phase.name(),
                r.depth,
                opt(r.published),
                opt(r.delta)
            );
        }
        let _ = writeln!(s, "measured total {}*sqrt(n) {:+}", self.coefficient, self.constant);
        let _ = writeln!(s, "\n{:<14} {:>8}", "stage (free)", "depth");
        for r in &self.per_stage {
            let _ = writeln!(s, "{:<14} {:>8}", r.stage.name(), r.depth);
        }
        let _ = writeln!(s, "{:<14} {:>8}", "staged total", self.total_staged);
        let _ = writeln!(s, "{:<14} {:>8}", "global asap", self.total_asap);
        s
    }
}

/// Depth report of an assembled adder.
pub fn report_for(adder: &AdderCircuit, cost: &CostModel) -> Result<DepthReport> {
    let n = adder.params.n;
    let variant = adder.params.variant;
    let m = adder.layout.m;
    let phases = block_sum_phases(m, variant, cost)?;
    let t14 = *cost == CostModel::T14S1;
    let per_phase = phases
        .iter()
        .map(|(&phase, &depth)| {
            let published = t14.then(|| {
                let (c, k) = phase.published(variant);
                c * m as i64 + k
            });
            PhaseRow { phase, depth, published, delta: published.map(|p| depth - p) }
        })
        .collect();
    let (coefficient, constant) = measured_formula(variant, cost)?;
    let formula = cost.name().map(|_| formula_depth(n, variant, cost)).transpose()?;
    let staged = staged_depths(&adder.block_level, &adder.block_marks, cost);
    let junk_clear = staged.iter().find(|(s, _)| *s == Stage::JunkClear).map_or(0, |x| x.1);
    Ok(DepthReport {
        n,
        variant,
        cost_model: cost.to_string(),
        per_block: block_depths(variant, cost)?,
        per_phase,
        total_sequential: phases[&Phase::Total],
        coefficient,
        constant,
        formula_expected: formula.and_then(|f| f.value),
        formula_coefficient: formula.map(|f| f.coefficient),
        total_staged: staged.iter().map(|x| x.1).sum(),
        per_stage: staged.into_iter().map(|(stage, depth)| StageRow { stage, depth }).collect(),
        total_asap: asap_depth(&adder.block_level, cost),
        junk_clear,
    })
}

/// Assemble the block-level adder and report its depths.
pub fn check_depths(n: usize, variant: Variant, cost: &CostModel) -> Result<DepthReport> {
    let adder = assemble(AdderParams::new(n, variant))?;
    report_for(&adder, cost)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn asap_examples() {
        let c = CostModel::T14S1;
        let par = Circuit::from_gates(4, vec![Gate::cnot(0, 1), Gate::cnot(2, 3)]).unwrap();
        assert_eq!(asap_depth(&par, &c), 1);
        let ser = Circuit::from_gates(3, vec![Gate::cnot(0, 1), Gate::cnot(1, 2)]).unwrap();
        assert_eq!(asap_depth(&ser, &c), 2);
        assert_eq!(asap_depth(&Circuit::new(2), &c), 0);
    }

    #[test]
    fn named_models() {
        for (n, c) in CostModel::NAMED {
            assert_eq!(CostModel::named(n).unwrap(), c);
            assert_eq!(c.name(), Some(n));
        }
        assert!(matches!(CostModel::named("t13s2"), Err(Error::UnsupportedCostModel(_))));
        assert!(CostModel::new(1, 0, 1, 14).is_err());
    }

    #[test]
    fn formula_examples() {
        let c = CostModel::T14S1;
        assert_eq!(formula_depth(9, Variant::Baseline, &c).unwrap().value, Some(348));
        assert_eq!(formula_depth(9, Variant::Optimized, &c).unwrap().value, Some(266));
        let f = formula_depth(9, Variant::Optimized, &CostModel::T12S1).unwrap();
        assert_eq!((f.coefficient, f.value), (92, None));
        let custom = CostModel::new(1, 2, 1, 14).unwrap();
        assert!(formula_depth(9, Variant::Optimized, &custom).is_err());
    }
}
