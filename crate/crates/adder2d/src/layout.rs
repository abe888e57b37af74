//! Grid placement of adder wires and nearest-neighbor checks.
//!
//! For an n-bit adder with m = sqrt(n) the grid has 4m-1 rows and m columns.
//! Column 0 holds the ripple-carry bits 1..=m as (a, b, carry) triples below
//! m-1 unused cells. Column k >= 1 holds bits km+1..=km+m: the first bit as
//! (a, b, g) and every later bit as (a, b, g, G). Qubits are numbered
//! row-major over the used cells.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ir::{Circuit, Gate, GateKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WireRole {
    A(usize),
    B(usize),
    /// Ancilla numbered 1.. in column-major order over used cells.
    Ancilla(usize),
    Unused,
}

impl fmt::Display for WireRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WireRole::A(i) => write!(f, "a{i}"),
            WireRole::B(i) => write!(f, "b{i}"),
            WireRole::Ancilla(i) => write!(f, "anc{i}"),
            WireRole::Unused => f.write_str("-"),
        }
    }
}

/// What an ancilla cell is used for by the adder builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    A(usize),
    B(usize),
    /// Column-0 cell under b_i; receives the carry into bit i+1.
    Carry(usize),
    /// Third cell of bit i in columns >= 1; receives g_i.
    Gen(usize),
    /// Fourth cell of bit i in columns >= 1 (absent for the first bit of a column).
    Group(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridLayout {
    pub n: usize,
    pub m: usize,
    pub rows: usize,
    pub cols: usize,
    placement: Vec<WireRole>,
    cell_of: Vec<(usize, usize)>,
    index_of: HashMap<(usize, usize), usize>,
    named: HashMap<Cell, usize>,
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: usize) -> Option<usize> {
    let m = (n as f64).sqrt().round() as usize;
    (m * m == n).then_some(m)
}

pub fn build_layout(n: usize) -> Result<GridLayout> {
    let m = match exact_sqrt(n) {
        Some(m) if n >= 4 => m,
        _ => return Err(Error::InvalidWidth(n)),
    };
    let rows = 4 * m - 1;
    let cols = m;
    let mut cells: HashMap<(usize, usize), Cell> = HashMap::new();
    for i in 1..=m {
        let r = m - 1 + 3 * (i - 1);
        cells.insert((r, 0), Cell::A(i));
        cells.insert((r + 1, 0), Cell::B(i));
        cells.insert((r + 2, 0), Cell::Carry(i));
    }
    for k in 1..m {
        for j in 0..m {
            let bit = k * m + j + 1;
            let r = if j == 0 { 0 } else { 3 + 4 * (j - 1) };
            cells.insert((r, k), Cell::A(bit));
            cells.insert((r + 1, k), Cell::B(bit));
            cells.insert((r + 2, k), Cell::Gen(bit));
            if j > 0 {
                cells.insert((r + 3, k), Cell::Group(bit));
            }
        }
    }
    let mut ancilla_no = HashMap::new();
    for c in 0..cols {
        for r in 0..rows {
            if let Some(cell) = cells.get(&(r, c)) {
                if !matches!(cell, Cell::A(_) | Cell::B(_)) {
                    let next = ancilla_no.len() + 1;
                    ancilla_no.insert((r, c), next);
                }
            }
        }
    }
    let mut placement = vec![WireRole::Unused; rows * cols];
    let mut cell_of = Vec::new();
    let mut index_of = HashMap::new();
    let mut named = HashMap::new();
    for r in 0..rows {
        for c in 0..cols {
            let Some(&cell) = cells.get(&(r, c)) else { continue };
            placement[r * cols + c] = match cell {
                Cell::A(i) => WireRole::A(i),
                Cell::B(i) => WireRole::B(i),
                _ => WireRole::Ancilla(ancilla_no[&(r, c)]),
            };
            index_of.insert((r, c), cell_of.len());
            named.insert(cell, cell_of.len());
            cell_of.push((r, c));
        }
    }
    Ok(GridLayout { n, m, rows, cols, placement, cell_of, index_of, named })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub gate_index: usize,
    pub gate: String,
    pub reason: String,
}

#[derive(Serialize)]
struct CellJson {
    row: usize,
    col: usize,
    role: String,
}

#[derive(Serialize)]
struct LayoutJson {
    n: usize,
    rows: usize,
    cols: usize,
    cells: Vec<CellJson>,
}

impl GridLayout {
    pub fn n_qubits(&self) -> usize {
        self.cell_of.len()
    }

    pub fn role_at(&self, row: usize, col: usize) -> WireRole {
        self.placement[row * self.cols + col]
    }

    pub fn role_of(&self, q: usize) -> WireRole {
        let (r, c) = self.cell_of[q];
        self.role_at(r, c)
    }

    pub fn cell_of(&self, q: usize) -> Option<(usize, usize)> {
        self.cell_of.get(q).copied()
    }

    pub fn qubit_at(&self, row: usize, col: usize) -> Option<usize> {
        self.index_of.get(&(row, col)).copied()
    }

    /// Flat index of a role; `None` for `Unused` or a role not in the grid.
    pub fn wire_index(&self, role: WireRole) -> Option<usize> {
        match role {
            WireRole::Unused => None,
            _ => (0..self.n_qubits()).find(|&q| self.role_of(q) == role),
        }
    }

    /// Flat index of a builder cell. Panics when the cell does not exist.
    pub fn q(&self, cell: Cell) -> usize {
        *self.named.get(&cell).unwrap_or_else(|| panic!("no cell {cell:?} for n={}", self.n))
    }

    pub fn a(&self, bit: usize) -> usize {
        self.q(Cell::A(bit))
    }

    pub fn b(&self, bit: usize) -> usize {
        self.q(Cell::B(bit))
    }

    pub fn a_wires(&self) -> Vec<usize> {
        (1..=self.n).map(|i| self.a(i)).collect()
    }

    pub fn b_wires(&self) -> Vec<usize> {
        (1..=self.n).map(|i| self.b(i)).collect()
    }

    pub fn ancillae(&self) -> Vec<usize> {
        (0..self.n_qubits()).filter(|&q| matches!(self.role_of(q), WireRole::Ancilla(_))).collect()
    }

    /// Cells of one grid column, top to bottom, `Unused` included.
    pub fn column(&self, col: usize) -> Vec<WireRole> {
        (0..self.rows).map(|r| self.role_at(r, col)).collect()
    }

    pub fn is_adjacent(&self, q1: usize, q2: usize) -> Result<bool> {
        let n = self.n_qubits();
        for q in [q1, q2] {
            if q >= n {
                return Err(Error::QubitOutOfRange { index: q, n_qubits: n });
            }
        }
        Ok(self.adjacent(q1, q2))
    }

    pub(crate) fn adjacent(&self, q1: usize, q2: usize) -> bool {
        let (r1, c1) = self.cell_of[q1];
        let (r2, c2) = self.cell_of[q2];
        r1.abs_diff(r2) + c1.abs_diff(c2) == 1
    }

    /// For three cells forming a contiguous path, the middle one.
    pub fn path_middle(&self, qs: [usize; 3]) -> Option<usize> {
        (0..3).find(|&i| {
            let others: Vec<usize> = (0..3).filter(|&j| j != i).map(|j| qs[j]).collect();
            others.iter().all(|&o| self.adjacent(qs[i], o))
        })
    }

    fn gate_violation(&self, g: &Gate) -> Option<String> {
        let n = self.n_qubits();
        if let Some(q) = g.qubits.iter().find(|&&q| q >= n) {
            return Some(format!("qubit {q} outside the {n}-cell layout"));
        }
        match g.kind {
            GateKind::CNOT | GateKind::SWAP => (!self.adjacent(g.qubits[0], g.qubits[1]))
                .then(|| "two-qubit gate on non-adjacent cells".to_string()),
            GateKind::TOFFOLI => {
                let qs = [g.qubits[0], g.qubits[1], g.qubits[2]];
                self.path_middle(qs)
                    .is_none()
                    .then(|| "Toffoli cells do not form a contiguous path".to_string())
            }
            _ => None,
        }
    }

    /// All gates whose operands are not nearest neighbors.
    pub fn check_adjacency(&self, circuit: &Circuit) -> Vec<Violation> {
        circuit
            .gates
            .iter()
            .enumerate()
            .filter_map(|(i, g)| {
                self.gate_violation(g).map(|reason| Violation { gate_index: i, gate: g.to_string(), reason })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let cells = (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .map(|(row, col)| CellJson { row, col, role: self.role_at(row, col).to_string() })
            .collect();
        let doc = LayoutJson { n: self.n, rows: self.rows, cols: self.cols, cells };
        serde_json::to_string_pretty(&doc).expect("layout serializes")
    }
}

pub fn check_adjacency(circuit: &Circuit, layout: &GridLayout) -> Vec<Violation> {
    layout.check_adjacency(circuit)
}
