//! Assembly of the complete n-bit adder on the grid.
//!
//! The circuit is `box . sum . pre . box^-1 . post`. The box computes every
//! carry (phases 1 to 3) and then clears the partial products P[i,j] it left
//! behind (junk clear), so that its only residue is a function of the carries.
//! `sum` writes s_i where the box left p_i. `pre` turns that cell into
//! a_i ^ !s_i, which is the p_i the box would have produced for the input
//! (a, !s); the carries of (a, !s) equal those of (a, b), so running the box
//! backwards restores every ancilla and leaves !s on the b wires. `post`
//! flips them to s.

use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::blocks::{build_block, BlockKind, Variant};
use crate::decompose::{expand_toffoli, DecompositionScheme, LinePlacement};
use crate::error::{Error, Result};
use crate::ir::{Circuit, Gate, GateKind};
use crate::layout::{build_layout, Cell, GridLayout};
use crate::sim::PackedCircuit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdderParams {
    pub n: usize,
    pub variant: Variant,
    pub scheme: DecompositionScheme,
    pub expand: bool,
}

impl AdderParams {
    /// Block-level circuit with the standard Toffoli scheme.
    pub fn new(n: usize, variant: Variant) -> AdderParams {
        AdderParams { n, variant, scheme: DecompositionScheme::Standard6Cnot, expand: false }
    }

    pub fn expanded(self, scheme: DecompositionScheme) -> AdderParams {
        AdderParams { scheme, expand: true, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Stage {
    Phase1,
    Phase2,
    Phase3,
    JunkClear,
    Sum,
    Pre,
    Uncompute,
    Post,
}

impl Stage {
    pub const ALL: [Stage; 8] = [
        Stage::Phase1,
        Stage::Phase2,
        Stage::Phase3,
        Stage::JunkClear,
        Stage::Sum,
        Stage::Pre,
        Stage::Uncompute,
        Stage::Post,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Phase1 => "phase1",
            Stage::Phase2 => "phase2",
            Stage::Phase3 => "phase3",
            Stage::JunkClear => "junk_clear",
            Stage::Sum => "sum",
            Stage::Pre => "pre",
            Stage::Uncompute => "uncompute",
            Stage::Post => "post",
        }
    }

    /// Stages forming the box that the uncompute stage reverses.
    pub fn in_box(self) -> bool {
        matches!(self, Stage::Phase1 | Stage::Phase2 | Stage::Phase3 | Stage::JunkClear)
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageSpan {
    pub stage: Stage,
    pub start: usize,
    pub end: usize,
}

/// One block instance inside the assembled block-level circuit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlacedBlock {
    pub kind: BlockKind,
    pub stage: Stage,
    pub column: usize,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IoMap {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Output wires of s_1..s_n; the same cells as `b`.
    pub s: Vec<usize>,
    pub ancilla: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct AdderCircuit {
    pub params: AdderParams,
    pub layout: GridLayout,
    /// Final circuit; expanded to Clifford+T when `params.expand`.
    pub circuit: Circuit,
    /// Stage boundaries in `circuit`.
    pub marks: Vec<StageSpan>,
    /// The block-level circuit, always present.
    pub block_level: Circuit,
    /// Stage boundaries in `block_level`.
    pub block_marks: Vec<StageSpan>,
    /// Block instances in `block_level`.
    pub blocks: Vec<PlacedBlock>,
    pub io_map: IoMap,
    packed: PackedCircuit,
}

/// Outcome of one classical run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub a: u64,
    pub b: u64,
    pub sum: u64,
    pub a_out: u64,
    pub expected: u64,
    pub ancilla_clean: bool,
}

impl Evaluation {
    pub fn ok(&self) -> bool {
        self.sum == self.expected && self.a_out == self.a && self.ancilla_clean
    }
}

/// (a + b) mod 2^n.
pub fn arithmetic_oracle(a: u64, b: u64, n: usize) -> Result<u64> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidWidth(n));
    }
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for (operand, value) in [("a", a), ("b", b)] {
        if value & !mask != 0 {
            return Err(Error::OperandRange { operand, value, bits: n });
        }
    }
    Ok(a.wrapping_add(b) & mask)
}

/// Cells of one column of the grid, by local bit index j (global bit km+j+1).
#[derive(Clone, Copy)]
struct Col<'a> {
    l: &'a GridLayout,
    k: usize,
}

impl Col<'_> {
    fn bit(&self, j: usize) -> usize {
        self.k * self.l.m + j + 1
    }
    fn a(&self, j: usize) -> usize {
        self.l.q(Cell::A(self.bit(j)))
    }
    fn b(&self, j: usize) -> usize {
        self.l.q(Cell::B(self.bit(j)))
    }
    fn g(&self, j: usize) -> usize {
        self.l.q(Cell::Gen(self.bit(j)))
    }
    fn gg(&self, j: usize) -> usize {
        self.l.q(Cell::Group(self.bit(j)))
    }
    /// Cell left of this column's bottom cell: the carry into the column.
    fn left(&self) -> usize {
        let m = self.l.m;
        if self.k == 1 {
            self.l.q(Cell::Carry(m))
        } else {
            self.l.q(Cell::Group((self.k - 1) * m + m))
        }
    }
}

struct Builder<'a> {
    l: &'a GridLayout,
    variant: Variant,
    gates: Vec<Gate>,
    blocks: Vec<PlacedBlock>,
    marks: Vec<StageSpan>,
    stage: Stage,
}

impl<'a> Builder<'a> {
    fn col(&self, k: usize) -> Col<'a> {
        Col { l: self.l, k }
    }

    fn begin(&mut self, stage: Stage) {
        self.stage = stage;
        let at = self.gates.len();
        self.marks.push(StageSpan { stage, start: at, end: at });
    }

    fn end(&mut self) {
        let at = self.gates.len();
        self.marks.last_mut().expect("stage open").end = at;
    }

    fn block(&mut self, kind: BlockKind, column: usize, wires: &[usize]) -> Result<()> {
        let inst = build_block(kind, self.variant, wires, self.l)?;
        let start = self.gates.len();
        self.gates.extend(inst.circuit.gates);
        let end = self.gates.len();
        self.blocks.push(PlacedBlock { kind, stage: self.stage, column, start, end });
        Ok(())
    }

    fn swap(&mut self, x: usize, y: usize) {
        self.gates.push(Gate::swap(x, y));
    }

    /// Toffoli conjugated by transport swaps.
    fn conj(pre: &[(usize, usize)], tof: Gate) -> Vec<Gate> {
        let mut v: Vec<Gate> = pre.iter().map(|&(x, y)| Gate::swap(x, y)).collect();
        v.push(tof);
        v.extend(pre.iter().rev().map(|&(x, y)| Gate::swap(x, y)));
        v
    }

    /// Column 0: half adder on bit 1, g,p of bits 2..m, then the carry chain
    /// c_i ^= p_i c_{i-1}. The sum of column 0 is deferred to the sum stage.
    fn ripple(&mut self) -> Result<()> {
        let l = self.l;
        let m = l.m;
        self.block(BlockKind::HalfAdder, 0, &[l.a(1), l.b(1), l.q(Cell::Carry(1))])?;
        for i in 2..=m {
            self.block(BlockKind::Gp, 0, &[l.a(i), l.b(i), l.q(Cell::Carry(i))])?;
        }
        for i in 2..=m {
            let (c, a) = (l.q(Cell::Carry(i - 1)), l.a(i));
            self.swap(c, a);
            self.gates.push(Gate::toffoli(a, l.b(i), l.q(Cell::Carry(i))));
            self.swap(c, a);
        }
        Ok(())
    }

    fn ripple_sum(&mut self) {
        let l = self.l;
        for i in 2..=l.m {
            let (c, a) = (l.q(Cell::Carry(i - 1)), l.a(i));
            self.swap(c, a);
            self.gates.push(Gate::cnot(a, l.b(i)));
            self.swap(c, a);
        }
    }

    fn gp_all(&mut self) -> Result<()> {
        for k in 1..self.l.m {
            let c = self.col(k);
            for j in 0..self.l.m {
                let kind = if j == 0 { BlockKind::GpFirst } else { BlockKind::Gp };
                self.block(kind, k, &[c.a(j), c.b(j), c.g(j)])?;
            }
        }
        Ok(())
    }

    fn phase1(&mut self) -> Result<()> {
        self.ripple()?;
        self.gp_all()?;
        let m = self.l.m;
        for k in 1..m {
            let c = self.col(k);
            match self.variant {
                Variant::Optimized => {
                    let mut w = vec![c.b(0), c.g(0), c.a(1), c.b(1), c.g(1), c.gg(1)];
                    if m >= 3 {
                        w.extend([c.a(2), c.b(2), c.g(2)]);
                    }
                    self.block(BlockKind::BigGpFirst, k, &w)?;
                    for j in 2..m {
                        let mut w = vec![c.g(j - 1), c.gg(j - 1), c.a(j), c.b(j), c.g(j), c.gg(j)];
                        if j + 1 < m {
                            w.extend([c.a(j + 1), c.b(j + 1), c.g(j + 1)]);
                        }
                        self.block(BlockKind::BigGp, k, &w)?;
                    }
                }
                Variant::Baseline => {
                    let w = [c.b(0), c.g(0), c.a(1), c.b(1), c.g(1), c.gg(1)];
                    self.block(BlockKind::BigGpFirst, k, &w)?;
                    for j in 2..m {
                        let w = [c.g(j - 1), c.gg(j - 1), c.a(j), c.b(j), c.g(j), c.gg(j)];
                        self.block(BlockKind::BigGp, k, &w)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn phase2(&mut self) -> Result<()> {
        let m = self.l.m;
        let t = m - 1;
        for k in 1..m {
            let c = self.col(k);
            match self.variant {
                Variant::Optimized => {
                    self.block(BlockKind::ColumnCarry, k, &[c.left(), c.g(t), c.gg(t), c.b(t)])?;
                }
                Variant::Baseline => {
                    self.block(BlockKind::ColumnCarry, k, &[c.g(t), c.gg(t), c.left()])?;
                    if k < m - 1 {
                        self.swap(c.left(), c.gg(t));
                    }
                }
            }
        }
        Ok(())
    }

    fn phase3(&mut self) -> Result<()> {
        let m = self.l.m;
        for k in 1..m {
            let c = self.col(k);
            match self.variant {
                Variant::Optimized => {
                    for j in (2..m).rev() {
                        let w = [c.b(j - 1), c.g(j - 1), c.gg(j - 1), c.a(j), c.b(j), c.g(j)];
                        self.block(BlockKind::Carry, k, &w)?;
                    }
                    self.block(BlockKind::Carry1, k, &[c.b(0), c.g(0), c.a(1), c.b(1), c.g(1)])?;
                }
                Variant::Baseline => {
                    for j in (2..m).rev() {
                        let w = [c.g(j - 1), c.gg(j - 1), c.a(j), c.b(j), c.g(j)];
                        self.block(BlockKind::Carry, k, &w)?;
                    }
                    self.swap(c.b(1), c.g(1));
                    self.swap(c.a(1), c.b(1));
                    self.block(BlockKind::Carry1, k, &[c.b(0), c.g(0), c.a(1)])?;
                }
            }
        }
        Ok(())
    }

    /// Steps of the junk clear for column k; each step is one Toffoli
    /// conjugated by transport swaps.
    fn junk_steps(&self, k: usize) -> Vec<Vec<Gate>> {
        let m = self.l.m;
        let c = self.col(k);
        let t = m - 1;
        let lc = c.left();
        let mut steps = Vec::new();
        match self.variant {
            Variant::Optimized => {
                let pre = if m >= 3 {
                    let first = [(lc, c.gg(t)), (c.gg(t - 1), c.a(t)), (c.g(t), c.gg(t))];
                    steps.push(Self::conj(&first, Gate::toffoli(c.a(t), c.b(t), c.g(t))));
                    for j in (2..m - 1).rev() {
                        let pre = [(c.g(j), c.gg(j)), (c.gg(j - 1), c.a(j))];
                        steps.push(Self::conj(&pre, Gate::toffoli(c.a(j), c.b(j), c.g(j))));
                    }
                    vec![(c.g(1), c.gg(1))]
                } else {
                    vec![(lc, c.gg(1)), (c.g(1), c.gg(1))]
                };
                let mut pre = pre;
                pre.extend([(c.b(0), c.g(0)), (c.g(0), c.a(1))]);
                steps.push(Self::conj(&pre, Gate::toffoli(c.a(1), c.b(1), c.g(1))));
            }
            Variant::Baseline => {
                let last = k == m - 1;
                let mut pre = Vec::new();
                if m >= 3 {
                    let mut first = vec![(c.a(t), c.b(t))];
                    if !last {
                        first.push((lc, c.gg(t)));
                    }
                    steps.push(Self::conj(&first, Gate::toffoli(c.b(t), c.g(t), c.gg(t))));
                    for j in (2..m - 1).rev() {
                        let pre = [(c.a(j), c.b(j)), (c.gg(j), c.a(j + 1))];
                        steps.push(Self::conj(&pre, Gate::toffoli(c.b(j), c.g(j), c.gg(j))));
                    }
                    pre.push((c.gg(1), c.a(2)));
                } else if !last {
                    pre.push((lc, c.gg(1)));
                }
                pre.extend([(c.g(0), c.a(1)), (c.a(1), c.b(1))]);
                steps.push(Self::conj(&pre, Gate::toffoli(c.b(1), c.g(1), c.gg(1))));
            }
        }
        steps
    }

    /// Clear the partial products left by phases 1-3. Columns are
    /// interleaved step by step, odd-parity columns first, so neighboring
    /// columns sharing a boundary cell do not serialize.
    fn junk_clear(&mut self) {
        let m = self.l.m;
        let mut cols: Vec<usize> = (1..m).collect();
        cols.sort_by_key(|&k| ((m - 1 - k) % 2, std::cmp::Reverse(k)));
        let steps: Vec<Vec<Vec<Gate>>> = cols.iter().map(|&k| self.junk_steps(k)).collect();
        let rounds = steps.iter().map(Vec::len).max().unwrap_or(0);
        for r in 0..rounds {
            for s in &steps {
                if let Some(step) = s.get(r) {
                    self.gates.extend(step.iter().cloned());
                }
            }
        }
    }

    fn sum(&mut self) -> Result<()> {
        self.ripple_sum();
        let m = self.l.m;
        for k in 1..m {
            let c = self.col(k);
            match self.variant {
                Variant::Optimized => {
                    for j in 0..m {
                        self.block(BlockKind::Sum, k, &[c.g(j), c.b(j)])?;
                    }
                }
                Variant::Baseline => {
                    self.block(BlockKind::Sum2, k, &[c.b(0), c.g(0)])?;
                    self.block(BlockKind::Sum1, k, &[c.a(1), c.b(1), c.g(1)])?;
                    for j in 2..m {
                        self.block(BlockKind::Sum, k, &[c.gg(j - 1), c.a(j), c.b(j), c.g(j)])?;
                    }
                }
            }
        }
        Ok(())
    }

    /// (a cell, s cell) per bit after the sum stage.
    fn locations(&self) -> Vec<(usize, usize)> {
        let l = self.l;
        let m = l.m;
        let mut out: Vec<(usize, usize)> = (1..=m).map(|i| (l.a(i), l.b(i))).collect();
        for k in 1..m {
            let c = self.col(k);
            for j in 0..m {
                out.push(match self.variant {
                    Variant::Optimized => (c.a(j), c.b(j)),
                    Variant::Baseline if j == 0 => (c.a(0), c.g(0)),
                    Variant::Baseline => (c.b(j), c.g(j)),
                });
            }
        }
        out
    }

    fn pre(&mut self) {
        let locs = self.locations();
        for &(_, s) in &locs {
            self.gates.push(Gate::x(s));
        }
        let mut routed = Vec::new();
        for &(a, s) in &locs {
            if self.l.adjacent(a, s) {
                self.gates.push(Gate::cnot(a, s));
            } else {
                routed.push((a, s));
            }
        }
        // The baseline leaves the first bit of each column two cells from
        // its a value; route through the b cell between them.
        for k in 1..self.l.m {
            let c = self.col(k);
            if routed.contains(&(c.a(0), c.g(0))) {
                self.swap(c.a(0), c.b(0));
                self.gates.push(Gate::cnot(c.b(0), c.g(0)));
                self.swap(c.a(0), c.b(0));
            }
        }
    }
}

fn expand_with_marks(
    block_level: &Circuit,
    marks: &[StageSpan],
    scheme: DecompositionScheme,
    layout: &GridLayout,
) -> Result<(Circuit, Vec<StageSpan>)> {
    let mut out = Circuit::with_label(block_level.n_qubits, block_level.label.clone());
    let mut index = Vec::with_capacity(block_level.len() + 1);
    for g in &block_level.gates {
        index.push(out.len());
        if g.kind == GateKind::TOFFOLI {
            let p = LinePlacement::from_gate(g, layout)?;
            out.gates.extend(expand_toffoli(scheme, p));
        } else {
            out.push(g.clone());
        }
    }
    index.push(out.len());
    let marks = marks
        .iter()
        .map(|s| StageSpan { stage: s.stage, start: index[s.start], end: index[s.end] })
        .collect();
    Ok((out, marks))
}

/// Build the adder described by `params`.
pub fn assemble(params: AdderParams) -> Result<AdderCircuit> {
    let layout = build_layout(params.n)?;
    let mut b = Builder {
        l: &layout,
        variant: params.variant,
        gates: Vec::new(),
        blocks: Vec::new(),
        marks: Vec::new(),
        stage: Stage::Phase1,
    };
    b.begin(Stage::Phase1);
    b.phase1()?;
    b.end();
    b.begin(Stage::Phase2);
    b.phase2()?;
    b.end();
    b.begin(Stage::Phase3);
    b.phase3()?;
    b.end();
    b.begin(Stage::JunkClear);
    b.junk_clear();
    b.end();
    let box_gates: Vec<Gate> = b.gates.clone();
    b.begin(Stage::Sum);
    b.sum()?;
    b.end();
    b.begin(Stage::Pre);
    b.pre();
    b.end();
    b.begin(Stage::Uncompute);
    b.gates.extend(box_gates.iter().rev().map(Gate::inverse));
    b.end();
    b.begin(Stage::Post);
    for w in layout.b_wires() {
        b.gates.push(Gate::x(w));
    }
    b.end();

    let label = format!("{}-bit {} adder", params.n, params.variant);
    let Builder { gates, blocks, marks: block_marks, .. } = b;
    let mut block_level = Circuit::from_gates(layout.n_qubits(), gates)?;
    block_level.label = label;
    let (circuit, marks) = if params.expand {
        expand_with_marks(&block_level, &block_marks, params.scheme, &layout)?
    } else {
        (block_level.clone(), block_marks.clone())
    };
    let io_map =
        IoMap { a: layout.a_wires(), b: layout.b_wires(), s: layout.b_wires(), ancilla: layout.ancillae() };
    let packed = PackedCircuit::new(&block_level)?;
    Ok(AdderCircuit { params, layout, circuit, marks, block_level, block_marks, blocks, io_map, packed })
}

impl AdderCircuit {
    /// Gate range of a stage in `circuit`.
    pub fn span(&self, stage: Stage) -> Range<usize> {
        Self::find(&self.marks, stage)
    }

    /// Gate range of a stage in `block_level`.
    pub fn block_span(&self, stage: Stage) -> Range<usize> {
        Self::find(&self.block_marks, stage)
    }

    fn find(marks: &[StageSpan], stage: Stage) -> Range<usize> {
        marks.iter().find(|s| s.stage == stage).map(|s| s.start..s.end).expect("every stage is marked")
    }

    /// Gates of one stage of the block-level circuit.
    pub fn stage_gates(&self, stage: Stage) -> &[Gate] {
        &self.block_level.gates[self.block_span(stage)]
    }

    /// The box (phases 1-3 and junk clear) of the block-level circuit.
    pub fn box_circuit(&self) -> Circuit {
        let end = self.block_span(Stage::JunkClear).end;
        Circuit {
            n_qubits: self.block_level.n_qubits,
            gates: self.block_level.gates[..end].to_vec(),
            label: "box".into(),
        }
    }

    /// Initial register with a and b written onto their wires.
    pub fn input_word(&self, a: u64, b: u64) -> u128 {
        let mut s = 0u128;
        for (i, &w) in self.io_map.a.iter().enumerate() {
            s |= u128::from(a >> i & 1) << w;
        }
        for (i, &w) in self.io_map.b.iter().enumerate() {
            s |= u128::from(b >> i & 1) << w;
        }
        s
    }

    fn read(word: u128, wires: &[usize]) -> u64 {
        wires.iter().enumerate().map(|(i, &w)| ((word >> w & 1) as u64) << i).sum()
    }

    /// Run the block-level circuit on (a, b) and compare with the oracle.
    pub fn evaluate(&self, a: u64, b: u64) -> Result<Evaluation> {
        let expected = arithmetic_oracle(a, b, self.params.n)?;
        let out = self.packed.run(self.input_word(a, b));
        let anc_mask: u128 = self.io_map.ancilla.iter().map(|&w| 1u128 << w).sum();
        Ok(Evaluation {
            a,
            b,
            sum: Self::read(out, &self.io_map.s),
            a_out: Self::read(out, &self.io_map.a),
            expected,
            ancilla_clean: out & anc_mask == 0,
        })
    }

    /// Classical value of every wire at the end of each block-level stage.
    pub fn trace_values(&self, a: u64, b: u64) -> Result<Vec<(Stage, Vec<bool>)>> {
        arithmetic_oracle(a, b, self.params.n)?;
        let nq = self.block_level.n_qubits;
        let mut state = self.input_word(a, b);
        let mut out = Vec::new();
        for span in &self.block_marks {
            let part = Circuit {
                n_qubits: nq,
                gates: self.block_level.gates[span.start..span.end].to_vec(),
                label: String::new(),
            };
            state = PackedCircuit::new(&part)?.run(state);
            out.push((span.stage, (0..nq).map(|q| state >> q & 1 == 1).collect()));
        }
        Ok(out)
    }

    pub fn io_map_json(&self) -> String {
        serde_json::to_string_pretty(&self.io_map).expect("io map serializes")
    }

    /// Block instances of one kind.
    pub fn count_blocks(&self, kind: BlockKind) -> usize {
        self.blocks.iter().filter(|b| b.kind == kind).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(arithmetic_oracle(3, 5, 4).unwrap(), 8);
        assert_eq!(arithmetic_oracle(15, 1, 4).unwrap(), 0);
        assert_eq!(arithmetic_oracle(170, 85, 9).unwrap(), 255);
        assert_eq!(arithmetic_oracle(u64::MAX, 1, 64).unwrap(), 0);
    }

    #[test]
    fn oracle_range() {
        assert!(matches!(arithmetic_oracle(16, 0, 4), Err(Error::OperandRange { operand: "a", .. })));
        assert!(matches!(arithmetic_oracle(0, 16, 4), Err(Error::OperandRange { operand: "b", .. })));
        assert!(arithmetic_oracle(0, 0, 0).is_err());
    }

    #[test]
    fn rejects_bad_width() {
        assert_eq!(assemble(AdderParams::new(8, Variant::Optimized)).unwrap_err(), Error::InvalidWidth(8));
    }

    #[test]
    fn small_adds() {
        for v in [Variant::Baseline, Variant::Optimized] {
            let ad = assemble(AdderParams::new(4, v)).unwrap();
            for (a, b) in [(0, 0), (1, 1), (15, 1), (7, 9)] {
                assert!(ad.evaluate(a, b).unwrap().ok(), "{v} {a}+{b}");
            }
        }
    }
}
