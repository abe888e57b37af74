//! Clifford+T expansions of the Toffoli gate and a dense unitary oracle.
//!
//! The standard and Peres-based schemes are an H-conjugated CCZ core plus two
//! SWAPs that cancel. CCZ is symmetric in its three qubits, so the core is laid
//! on the physical line (end, middle, end) and the H pair goes on whichever
//! qubit is the target.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ir::{Circuit, Gate, GateKind};
use crate::layout::GridLayout;
use crate::sim::apply_gate;

pub const UNITARY_LIMIT: usize = 12;
pub const TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DecompositionScheme {
    /// Six CNOTs, two SWAPs, depth 14.
    Standard6Cnot,
    /// Six CNOTs in depth 8; needs all three qubit pairs to interact.
    Depth8_6Cnot,
    /// Peres-based, depth 6C+2S+4.
    PeresBased,
}

impl DecompositionScheme {
    pub const ALL: [DecompositionScheme; 3] = [
        DecompositionScheme::Standard6Cnot,
        DecompositionScheme::Depth8_6Cnot,
        DecompositionScheme::PeresBased,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DecompositionScheme::Standard6Cnot => "standard",
            DecompositionScheme::Depth8_6Cnot => "depth8",
            DecompositionScheme::PeresBased => "peres",
        }
    }

    /// Whether every two-qubit gate of the expansion fits a 3-cell line.
    pub fn is_line_adjacent(self) -> bool {
        !matches!(self, DecompositionScheme::Depth8_6Cnot)
    }
}

impl fmt::Display for DecompositionScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DecompositionScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "standard" | "standard_6cnot" | "std" => Ok(DecompositionScheme::Standard6Cnot),
            "depth8" | "depth8_6cnot" => Ok(DecompositionScheme::Depth8_6Cnot),
            "peres" | "peres_based" => Ok(DecompositionScheme::PeresBased),
            _ => Err(format!("unknown scheme {s:?} (standard, depth8, peres)")),
        }
    }
}

/// Three collinear cells: `ends` flank `middle`; `controls` and `target` name
/// the logical roles, which may sit anywhere on the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinePlacement {
    pub ends: [usize; 2],
    pub middle: usize,
    pub controls: [usize; 2],
    pub target: usize,
}

impl LinePlacement {
    /// Controls a and b with target c on the line a - b - c.
    pub fn canonical(a: usize, b: usize, c: usize) -> LinePlacement {
        LinePlacement { ends: [a, c], middle: b, controls: [a, b], target: c }
    }

    /// Placement of a block-level Toffoli on its cells in `layout`.
    pub fn from_gate(g: &Gate, layout: &GridLayout) -> Result<LinePlacement> {
        let qs = [g.qubits[0], g.qubits[1], g.qubits[2]];
        let mid = layout.path_middle(qs).ok_or_else(|| Error::NotAdjacent(g.to_string()))?;
        let ends: Vec<usize> = (0..3).filter(|&i| i != mid).map(|i| qs[i]).collect();
        Ok(LinePlacement {
            ends: [ends[0], ends[1]],
            middle: qs[mid],
            controls: [qs[0], qs[1]],
            target: qs[2],
        })
    }
}

/// Gate sequence for one Toffoli under `scheme`.
pub fn expand_toffoli(scheme: DecompositionScheme, p: LinePlacement) -> Vec<Gate> {
    let (a, b, c) = (p.ends[0], p.middle, p.ends[1]);
    let t = p.target;
    use Gate as G;
    match scheme {
        DecompositionScheme::Standard6Cnot => vec![
            G::h(t),
            G::cnot(b, c),
            G::tdg(c),
            G::swap(b, c),
            G::cnot(a, b),
            G::t(b),
            G::cnot(c, b),
            G::tdg(b),
            G::cnot(a, b),
            G::swap(b, c),
            G::t(b),
            G::t(c),
            G::cnot(a, b),
            G::t(a),
            G::tdg(b),
            G::cnot(a, b),
            G::h(t),
        ],
        DecompositionScheme::PeresBased => vec![
            // H first so a middle target is phased in the X basis.
            G::h(t),
            G::t(a),
            G::t(b),
            G::cnot(c, b),
            G::swap(b, c),
            G::cnot(a, b),
            G::tdg(c),
            // T-dagger: this wire carries c here, which the Peres core
            // phases by T-dagger between its two a->c CNOTs.
            G::tdg(b),
            G::cnot(a, b),
            G::swap(b, c),
            G::cnot(a, b),
            G::t(b),
            G::t(c),
            G::cnot(c, b),
            G::tdg(b),
            G::cnot(a, b),
            G::h(t),
        ],
        DecompositionScheme::Depth8_6Cnot => {
            let [a, b] = p.controls;
            let c = p.target;
            vec![
                G::tdg(a),
                G::tdg(b),
                G::h(c),
                G::cnot(c, a),
                G::t(a),
                G::cnot(b, c),
                G::cnot(b, a),
                G::t(c),
                G::tdg(a),
                G::cnot(b, c),
                G::cnot(c, a),
                G::t(a),
                G::tdg(c),
                G::cnot(b, a),
                G::h(c),
            ]
        }
    }
}

/// Replace every TOFFOLI of a placed circuit by its expansion.
pub fn expand_circuit(
    circuit: &Circuit,
    scheme: DecompositionScheme,
    layout: &GridLayout,
) -> Result<Circuit> {
    let mut out = Circuit::with_label(circuit.n_qubits, circuit.label.clone());
    for g in &circuit.gates {
        if g.kind == GateKind::TOFFOLI {
            let p = LinePlacement::from_gate(g, layout)?;
            out.gates.extend(expand_toffoli(scheme, p));
        } else {
            out.push(g.clone());
        }
    }
    Ok(out)
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    pub dim: usize,
    pub data: Vec<Complex64>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Matrix {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Matrix { dim, data }
    }

    /// Permutation matrix with column j mapped to row `perm(j)`.
    pub fn permutation(dim: usize, perm: impl Fn(usize) -> usize) -> Matrix {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for j in 0..dim {
            data[perm(j) * dim + j] = Complex64::new(1.0, 0.0);
        }
        Matrix { dim, data }
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    /// tr(self^dagger * other)
    pub fn inner(&self, other: &Matrix) -> Complex64 {
        self.data.iter().zip(&other.data).map(|(a, b)| a.conj() * b).sum()
    }

    /// max |self - phase * other| where phase aligns the two matrices.
    pub fn phase_distance(&self, other: &Matrix) -> f64 {
        let tr = other.inner(self);
        let phase = if tr.norm() > 0.0 { tr / tr.norm() } else { Complex64::new(1.0, 0.0) };
        self.data.iter().zip(&other.data).map(|(a, b)| (a - phase * b).norm()).fold(0.0, f64::max)
    }

    /// max |U^dagger U - I|
    pub fn unitarity_error(&self) -> f64 {
        let d = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let s: Complex64 = (0..d).map(|k| self.get(k, i).conj() * self.get(k, j)).sum();
                let e = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - e).norm());
            }
        }
        worst
    }
}

/// Product of the gate matrices in circuit order, little-endian basis.
pub fn unitary_of(circuit: &Circuit) -> Result<Matrix> {
    let n = circuit.n_qubits;
    if n > UNITARY_LIMIT {
        return Err(Error::TooManyQubits { n, limit: UNITARY_LIMIT });
    }
    let dim = 1 << n;
    let mut m = Matrix { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] };
    let mut col = vec![Complex64::new(0.0, 0.0); dim];
    for j in 0..dim {
        col.iter_mut().for_each(|a| *a = Complex64::new(0.0, 0.0));
        col[j] = Complex64::new(1.0, 0.0);
        for g in &circuit.gates {
            apply_gate(&mut col, g);
        }
        for (i, a) in col.iter().enumerate() {
            m.data[i * dim + j] = *a;
        }
    }
    Ok(m)
}

/// Net wire permutation left by the SWAPs of a circuit: entry q is the wire
/// holding the value that started on q.
pub fn swap_permutation(circuit: &Circuit) -> Vec<usize> {
    let mut pos: Vec<usize> = (0..circuit.n_qubits).collect();
    for g in circuit.gates.iter().filter(|g| g.kind == GateKind::SWAP) {
        let (x, y) = (g.qubits[0], g.qubits[1]);
        for p in pos.iter_mut() {
            if *p == x {
                *p = y;
            } else if *p == y {
                *p = x;
            }
        }
    }
    pos
}

#[derive(Debug, Clone, Serialize)]
pub struct ToffoliCheck {
    pub scheme: DecompositionScheme,
    pub ok: bool,
    pub max_error: f64,
    pub cnots: usize,
    pub swaps: usize,
    pub t_count: usize,
}

/// The 8x8 Toffoli permutation with controls on qubits 0, 1 and target 2.
pub fn toffoli_matrix() -> Matrix {
    Matrix::permutation(8, |j| if j & 3 == 3 { j ^ 4 } else { j })
}

/// Compare an expansion on the line 0 - 1 - 2 with the Toffoli permutation,
/// up to global phase and the net SWAP permutation.
pub fn verify_toffoli(scheme: DecompositionScheme) -> ToffoliCheck {
    let gates = expand_toffoli(scheme, LinePlacement::canonical(0, 1, 2));
    let c = Circuit::from_gates(3, gates).expect("valid expansion");
    let u = unitary_of(&c).expect("three qubits");
    let perm = swap_permutation(&c);
    let moved = |j: usize| -> usize { (0..3).filter(|&q| j >> q & 1 == 1).map(|q| 1 << perm[q]).sum() };
    let tof = toffoli_matrix();
    let expected = Matrix::permutation(8, |j| moved(tof_index(&tof, j)));
    let max_error = u.phase_distance(&expected);
    ToffoliCheck {
        scheme,
        ok: max_error < TOLERANCE,
        max_error,
        cnots: c.count(GateKind::CNOT),
        swaps: c.count(GateKind::SWAP),
        t_count: c.count(GateKind::T) + c.count(GateKind::Tdg),
    }
}

fn tof_index(m: &Matrix, j: usize) -> usize {
    (0..m.dim).find(|&i| m.get(i, j).norm() > 0.5).expect("permutation column")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_x() {
        let u = unitary_of(&Circuit::new(1)).unwrap();
        assert_eq!(u, Matrix::identity(2));
        let x = unitary_of(&Circuit::from_gates(1, vec![Gate::x(0)]).unwrap()).unwrap();
        assert_eq!(x, Matrix::permutation(2, |j| 1 - j));
    }

    #[test]
    fn t_then_tdg_is_identity() {
        let c = Circuit::from_gates(1, vec![Gate::t(0), Gate::tdg(0)]).unwrap();
        assert!(unitary_of(&c).unwrap().phase_distance(&Matrix::identity(2)) < 1e-12);
    }

    #[test]
    fn limit_enforced() {
        assert!(unitary_of(&Circuit::new(13)).is_err());
    }

    #[test]
    fn scheme_parse() {
        for s in DecompositionScheme::ALL {
            assert_eq!(s.name().parse::<DecompositionScheme>().unwrap(), s);
        }
        assert!("foo".parse::<DecompositionScheme>().is_err());
    }
}
