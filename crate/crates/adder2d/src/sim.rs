//! Basis-state (permutation) simulation and dense statevector simulation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ir::{Circuit, Gate, GateKind};

/// Largest register the statevector simulator accepts.
pub const STATEVECTOR_LIMIT: usize = 14;

/// Largest register the packed basis-state simulator accepts.
pub const PACKED_LIMIT: usize = 128;

/// One classical bit per qubit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisState {
    pub bits: Vec<bool>,
}

impl BasisState {
    pub fn zeros(n: usize) -> BasisState {
        BasisState { bits: vec![false; n] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Little-endian basis index (qubit 0 is the least significant bit).
    pub fn index(&self) -> usize {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| 1usize << i).sum()
    }

    pub fn from_index(n: usize, index: usize) -> BasisState {
        BasisState { bits: (0..n).map(|i| index >> i & 1 == 1).collect() }
    }

    /// Write `value` onto `wires`, least significant bit first.
    pub fn set_word(&mut self, wires: &[usize], value: u64) {
        for (i, &w) in wires.iter().enumerate() {
            self.bits[w] = value >> i & 1 == 1;
        }
    }

    pub fn word(&self, wires: &[usize]) -> u64 {
        wires.iter().enumerate().filter(|(_, &w)| self.bits[w]).map(|(i, _)| 1u64 << i).sum()
    }
}

fn apply_classical(bits: &mut [bool], g: &Gate) {
    let q = &g.qubits;
    match g.kind {
        GateKind::X => bits[q[0]] = !bits[q[0]],
        GateKind::CNOT => bits[q[1]] ^= bits[q[0]],
        GateKind::SWAP => bits.swap(q[0], q[1]),
        GateKind::TOFFOLI => bits[q[2]] ^= bits[q[0]] & bits[q[1]],
        _ => unreachable!("checked by caller"),
    }
}

fn require_classical(circuit: &Circuit) -> Result<()> {
    match circuit.gates.iter().find(|g| !g.kind.is_classical()) {
        Some(g) => Err(Error::NonClassical(g.to_string())),
        None => Ok(()),
    }
}

/// Apply a permutation-only circuit to a basis state.
pub fn run_classical(circuit: &Circuit, input: &BasisState) -> Result<BasisState> {
    require_classical(circuit)?;
    if input.len() != circuit.n_qubits {
        return Err(Error::QubitCountMismatch(circuit.n_qubits, input.len()));
    }
    let mut bits = input.bits.clone();
    for g in &circuit.gates {
        apply_classical(&mut bits, g);
    }
    Ok(BasisState { bits })
}

#[derive(Debug, Clone, Copy)]
enum Op {
    X(u128),
    Cx(u128, u32),
    Swap(u32, u32),
    Ccx(u128, u32),
}

/// A classical circuit of at most 128 qubits compiled to word operations,
/// for sweeps over many inputs.
#[derive(Debug, Clone)]
pub struct PackedCircuit {
    ops: Vec<Op>,
}

impl PackedCircuit {
    pub fn new(circuit: &Circuit) -> Result<PackedCircuit> {
        require_classical(circuit)?;
        if circuit.n_qubits > PACKED_LIMIT {
            return Err(Error::TooManyQubits { n: circuit.n_qubits, limit: PACKED_LIMIT });
        }
        let ops = circuit
            .gates
            .iter()
            .map(|g| {
                let q = &g.qubits;
                match g.kind {
                    GateKind::X => Op::X(1 << q[0]),
                    GateKind::CNOT => Op::Cx(1 << q[0], q[1] as u32),
                    GateKind::SWAP => Op::Swap(q[0] as u32, q[1] as u32),
                    GateKind::TOFFOLI => Op::Ccx(1 << q[0] | 1 << q[1], q[2] as u32),
                    _ => unreachable!(),
                }
            })
            .collect();
        Ok(PackedCircuit { ops })
    }

    pub fn run(&self, mut s: u128) -> u128 {
        for op in &self.ops {
            match *op {
                Op::X(m) => s ^= m,
                Op::Cx(c, t) => s ^= u128::from(s & c != 0) << t,
                Op::Swap(a, b) => {
                    let d = (s >> a ^ s >> b) & 1;
                    s ^= d << a | d << b;
                }
                Op::Ccx(c, t) => s ^= u128::from(s & c == c) << t,
            }
        }
        s
    }
}

/// Dense amplitudes, little-endian basis ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub n_qubits: usize,
    pub amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn basis(n_qubits: usize, index: usize) -> Result<StateVector> {
        if n_qubits > STATEVECTOR_LIMIT {
            return Err(Error::TooManyQubits { n: n_qubits, limit: STATEVECTOR_LIMIT });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n_qubits, amplitudes })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Index and probability of the largest amplitude.
    pub fn peak(&self) -> (usize, f64) {
        self.amplitudes.iter().enumerate().map(|(i, a)| (i, a.norm_sqr())).fold((0, -1.0), |best, x| {
            if x.1 > best.1 {
                x
            } else {
                best
            }
        })
    }

    pub fn apply(&mut self, g: &Gate) {
        apply_gate(&mut self.amplitudes, g);
    }
}

fn phase(k: GateKind) -> Complex64 {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    match k {
        GateKind::T => Complex64::new(r, r),
        GateKind::Tdg => Complex64::new(r, -r),
        _ => unreachable!(),
    }
}

/// Apply one gate to a dense amplitude vector in place.
pub(crate) fn apply_gate(amp: &mut [Complex64], g: &Gate) {
    let q = &g.qubits;
    let len = amp.len();
    match g.kind {
        GateKind::H => {
            let bit = 1 << q[0];
            let r = std::f64::consts::FRAC_1_SQRT_2;
            for i in (0..len).filter(|i| i & bit == 0) {
                let (a0, a1) = (amp[i], amp[i | bit]);
                amp[i] = (a0 + a1) * r;
                amp[i | bit] = (a0 - a1) * r;
            }
        }
        GateKind::T | GateKind::Tdg => {
            let bit = 1 << q[0];
            let p = phase(g.kind);
            for i in (0..len).filter(|i| i & bit != 0) {
                amp[i] *= p;
            }
        }
        GateKind::X => {
            let bit = 1 << q[0];
            for i in (0..len).filter(|i| i & bit == 0) {
                amp.swap(i, i | bit);
            }
        }
        GateKind::CNOT => {
            let (c, t) = (1 << q[0], 1 << q[1]);
            for i in (0..len).filter(|i| i & c != 0 && i & t == 0) {
                amp.swap(i, i | t);
            }
        }
        GateKind::SWAP => {
            let (a, b) = (1 << q[0], 1 << q[1]);
            for i in (0..len).filter(|i| i & a != 0 && i & b == 0) {
                amp.swap(i, i ^ a ^ b);
            }
        }
        GateKind::TOFFOLI => {
            let c = 1 << q[0] | 1 << q[1];
            let t = 1 << q[2];
            for i in (0..len).filter(|i| i & c == c && i & t == 0) {
                amp.swap(i, i | t);
            }
        }
    }
}

/// Evolve a basis state through any circuit of at most 14 qubits.
pub fn run_statevector(circuit: &Circuit, input: &BasisState) -> Result<StateVector> {
    if input.len() != circuit.n_qubits {
        return Err(Error::QubitCountMismatch(circuit.n_qubits, input.len()));
    }
    let mut sv = StateVector::basis(circuit.n_qubits, input.index())?;
    for g in &circuit.gates {
        sv.apply(g);
    }
    Ok(sv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toffoli_on_basis() {
        let c = Circuit::from_gates(3, vec![Gate::toffoli(0, 1, 2)]).unwrap();
        let out = run_classical(&c, &BasisState { bits: vec![true, true, false] }).unwrap();
        assert_eq!(out.bits, vec![true, true, true]);
    }

    #[test]
    fn swap_on_basis() {
        let c = Circuit::from_gates(2, vec![Gate::swap(0, 1)]).unwrap();
        let out = run_classical(&c, &BasisState { bits: vec![true, false] }).unwrap();
        assert_eq!(out.bits, vec![false, true]);
    }

    #[test]
    fn classical_rejects_h() {
        let c = Circuit::from_gates(1, vec![Gate::h(0)]).unwrap();
        assert!(matches!(run_classical(&c, &BasisState::zeros(1)), Err(Error::NonClassical(_))));
    }

    #[test]
    fn packed_matches_plain() {
        let c = Circuit::from_gates(
            4,
            vec![Gate::x(0), Gate::cnot(0, 1), Gate::swap(1, 3), Gate::toffoli(0, 3, 2)],
        )
        .unwrap();
        let p = PackedCircuit::new(&c).unwrap();
        for i in 0..16 {
            let plain = run_classical(&c, &BasisState::from_index(4, i)).unwrap();
            assert_eq!(p.run(i as u128) as usize, plain.index());
        }
    }

    #[test]
    fn hadamard_superposition() {
        let c = Circuit::from_gates(1, vec![Gate::h(0)]).unwrap();
        let sv = run_statevector(&c, &BasisState::zeros(1)).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        for a in &sv.amplitudes {
            assert!((a - Complex64::new(r, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn statevector_limit() {
        let c = Circuit::new(15);
        assert!(run_statevector(&c, &BasisState::zeros(15)).is_err());
    }
}
