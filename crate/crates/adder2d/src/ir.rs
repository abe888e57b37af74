//! Gates, circuits and the plain-text gate-list format.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GateKind {
    X,
    H,
    T,
    Tdg,
    CNOT,
    SWAP,
    TOFFOLI,
}

impl GateKind {
    pub const ALL: [GateKind; 7] = [
        GateKind::X,
        GateKind::H,
        GateKind::T,
        GateKind::Tdg,
        GateKind::CNOT,
        GateKind::SWAP,
        GateKind::TOFFOLI,
    ];

    pub fn arity(self) -> usize {
        match self {
            GateKind::X | GateKind::H | GateKind::T | GateKind::Tdg => 1,
            GateKind::CNOT | GateKind::SWAP => 2,
            GateKind::TOFFOLI => 3,
        }
    }

    /// Permutation gates act on basis states without creating superpositions.
    pub fn is_classical(self) -> bool {
        matches!(self, GateKind::X | GateKind::CNOT | GateKind::SWAP | GateKind::TOFFOLI)
    }

    pub fn inverse(self) -> GateKind {
        match self {
            GateKind::T => GateKind::Tdg,
            GateKind::Tdg => GateKind::T,
            k => k,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::X => "X",
            GateKind::H => "H",
            GateKind::T => "T",
            GateKind::Tdg => "Tdg",
            GateKind::CNOT => "CNOT",
            GateKind::SWAP => "SWAP",
            GateKind::TOFFOLI => "TOFFOLI",
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        GateKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown gate kind {s:?}"))
    }
}

/// A primitive gate. For CNOT and TOFFOLI the last qubit is the target.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub qubits: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, qubits: &[usize]) -> Result<Gate> {
        if qubits.len() != kind.arity() {
            return Err(Error::Arity { kind: kind.name().into(), expected: kind.arity(), got: qubits.len() });
        }
        for (i, q) in qubits.iter().enumerate() {
            if qubits[..i].contains(q) {
                return Err(Error::RepeatedQubit(kind.name().into()));
            }
        }
        Ok(Gate { kind, qubits: qubits.to_vec() })
    }

    pub fn x(q: usize) -> Gate {
        Gate { kind: GateKind::X, qubits: vec![q] }
    }

    pub fn h(q: usize) -> Gate {
        Gate { kind: GateKind::H, qubits: vec![q] }
    }

    pub fn t(q: usize) -> Gate {
        Gate { kind: GateKind::T, qubits: vec![q] }
    }

    pub fn tdg(q: usize) -> Gate {
        Gate { kind: GateKind::Tdg, qubits: vec![q] }
    }

    pub fn cnot(c: usize, t: usize) -> Gate {
        assert_ne!(c, t, "CNOT on a single qubit");
        Gate { kind: GateKind::CNOT, qubits: vec![c, t] }
    }

    pub fn swap(a: usize, b: usize) -> Gate {
        assert_ne!(a, b, "SWAP on a single qubit");
        Gate { kind: GateKind::SWAP, qubits: vec![a, b] }
    }

    pub fn toffoli(c0: usize, c1: usize, t: usize) -> Gate {
        assert!(c0 != c1 && c0 != t && c1 != t, "TOFFOLI with repeated qubits");
        Gate { kind: GateKind::TOFFOLI, qubits: vec![c0, c1, t] }
    }

    pub fn inverse(&self) -> Gate {
        Gate { kind: self.kind.inverse(), qubits: self.qubits.clone() }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        for q in &self.qubits {
            write!(f, " {q}")?;
        }
        Ok(())
    }
}

/// An ordered gate list over a fixed number of qubits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub n_qubits: usize,
    pub gates: Vec<Gate>,
    pub label: String,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Circuit {
        Circuit { n_qubits, gates: Vec::new(), label: String::new() }
    }

    pub fn with_label(n_qubits: usize, label: impl Into<String>) -> Circuit {
        Circuit { n_qubits, gates: Vec::new(), label: label.into() }
    }

    pub fn from_gates(n_qubits: usize, gates: Vec<Gate>) -> Result<Circuit> {
        let c = Circuit { n_qubits, gates, label: String::new() };
        c.validate()?;
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) {
        debug_assert!(gate.qubits.iter().all(|&q| q < self.n_qubits));
        self.gates.push(gate);
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        for g in &self.gates {
            Gate::new(g.kind, &g.qubits)?;
            if let Some(&q) = g.qubits.iter().find(|&&q| q >= self.n_qubits) {
                return Err(Error::QubitOutOfRange { index: q, n_qubits: self.n_qubits });
            }
        }
        Ok(())
    }

    pub fn count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }

    pub fn is_classical(&self) -> bool {
        self.gates.iter().all(|g| g.kind.is_classical())
    }

    /// Gates in reverse order, each replaced by its inverse.
    pub fn reverse(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            label: self.label.clone(),
        }
    }

    pub fn concat(circuits: &[Circuit]) -> Result<Circuit> {
        let Some(first) = circuits.first() else {
            return Ok(Circuit::new(0));
        };
        let mut out = Circuit::with_label(first.n_qubits, first.label.clone());
        for c in circuits {
            if c.n_qubits != out.n_qubits {
                return Err(Error::QubitCountMismatch(out.n_qubits, c.n_qubits));
            }
            out.gates.extend(c.gates.iter().cloned());
        }
        Ok(out)
    }

    /// Gate-list text, one gate per line, with a leading comment header.
    pub fn to_text(&self) -> String {
        let mut s = format!("# qubits {}\n", self.n_qubits);
        if !self.label.is_empty() {
            s.push_str(&format!("# label {}\n", self.label));
        }
        for g in &self.gates {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// Parse the gate-list format. The qubit count comes from a `# qubits N`
    /// header when present, otherwise from the largest index used.
    pub fn from_text(text: &str) -> Result<Circuit> {
        let mut declared = None;
        let mut label = String::new();
        let mut gates = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let comment = comment.trim();
                if let Some(n) = comment.strip_prefix("qubits ") {
                    let n = n
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse { line: i + 1, msg: format!("bad qubit count {n:?}") })?;
                    declared = Some(n);
                } else if let Some(l) = comment.strip_prefix("label ") {
                    label = l.to_string();
                }
                continue;
            }
            let mut parts = line.split_whitespace();
            let kind: GateKind =
                parts.next().unwrap_or_default().parse().map_err(|msg| Error::Parse { line: i + 1, msg })?;
            let qubits = parts
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| Error::Parse { line: i + 1, msg: format!("bad qubit index {p:?}") })
                })
                .collect::<Result<Vec<_>>>()?;
            gates.push(
                Gate::new(kind, &qubits).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?,
            );
        }
        let used = gates.iter().flat_map(|g| g.qubits.iter().copied()).max().map_or(0, |m| m + 1);
        let c = Circuit { n_qubits: declared.unwrap_or(used), gates, label };
        c.validate()?;
        Ok(c)
    }

    /// OpenQASM 2.0 text over a single register `q`.
    pub fn to_qasm(&self) -> String {
        let mut s = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
        s.push_str(&format!("qreg q[{}];\n", self.n_qubits));
        for g in &self.gates {
            let op = match g.kind {
                GateKind::X => "x",
                GateKind::H => "h",
                GateKind::T => "t",
                GateKind::Tdg => "tdg",
                GateKind::CNOT => "cx",
                GateKind::SWAP => "swap",
                GateKind::TOFFOLI => "ccx",
            };
            let args: Vec<String> = g.qubits.iter().map(|q| format!("q[{q}]")).collect();
            s.push_str(&format!("{op} {};\n", args.join(",")));
        }
        s
    }
}
