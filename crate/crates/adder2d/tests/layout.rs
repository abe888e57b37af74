use adder2d::ir::{Circuit, Gate};
use adder2d::layout::{build_layout, check_adjacency, Cell, WireRole};
use proptest::prelude::*;

fn column_names(n: usize, col: usize) -> Vec<String> {
    let l = build_layout(n).unwrap();
    l.column(col)
        .into_iter()
        .map(|r| match r {
            WireRole::Ancilla(_) => "anc".to_string(),
            other => other.to_string(),
        })
        .collect()
}

#[test]
fn nine_bit_first_column() {
    let want = ["-", "-", "a1", "b1", "anc", "a2", "b2", "anc", "a3", "b3", "anc"];
    assert_eq!(column_names(9, 0), want);
}

#[test]
fn nine_bit_second_and_third_columns() {
    let want2 = ["a4", "b4", "anc", "a5", "b5", "anc", "anc", "a6", "b6", "anc", "anc"];
    let want3 = ["a7", "b7", "anc", "a8", "b8", "anc", "anc", "a9", "b9", "anc", "anc"];
    assert_eq!(column_names(9, 1), want2);
    assert_eq!(column_names(9, 2), want3);
}

#[test]
fn four_bit_grid() {
    let l = build_layout(4).unwrap();
    assert_eq!((l.rows, l.cols, l.n_qubits()), (7, 2, 13));
}

#[test]
fn used_cell_counts() {
    for m in 2..=5usize {
        let n = m * m;
        let l = build_layout(n).unwrap();
        assert_eq!(l.n_qubits(), 4 * n - 2 * m + 1, "n={n}");
        assert_eq!(l.a_wires().len(), n);
        assert_eq!(l.b_wires().len(), n);
        assert_eq!(l.ancillae().len(), l.n_qubits() - 2 * n);
    }
}

#[test]
fn deterministic() {
    assert_eq!(build_layout(16).unwrap(), build_layout(16).unwrap());
}

#[test]
fn adjacency_examples() {
    let l = build_layout(9).unwrap();
    assert!(l.is_adjacent(l.a(1), l.b(1)).unwrap());
    assert!(!l.is_adjacent(l.a(1), l.a(2)).unwrap());
    let (r, c) = l.cell_of(l.b(1)).unwrap();
    let beside = l.qubit_at(r, c + 1).unwrap();
    assert!(l.is_adjacent(l.b(1), beside).unwrap());
    assert!(l.is_adjacent(l.b(1), l.n_qubits()).is_err());
}

#[test]
fn violation_examples() {
    let l = build_layout(9).unwrap();
    let empty = Circuit::new(l.n_qubits());
    assert!(check_adjacency(&empty, &l).is_empty());
    let bad = Circuit::from_gates(l.n_qubits(), vec![Gate::cnot(l.a(1), l.a(2))]).unwrap();
    assert_eq!(check_adjacency(&bad, &l).len(), 1);
}

#[test]
fn bottom_cells() {
    // The carry cell of the last ripple bit sits beside the bottom group cell
    // of column 1, and each column's bottom cell beside the next one's.
    let l = build_layout(16).unwrap();
    assert!(l.is_adjacent(l.q(Cell::Carry(4)), l.q(Cell::Group(8))).unwrap());
    assert!(l.is_adjacent(l.q(Cell::Group(8)), l.q(Cell::Group(12))).unwrap());
}

#[test]
fn layout_json_shape() {
    let l = build_layout(4).unwrap();
    let v: serde_json::Value = serde_json::from_str(&l.to_json()).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["cells"].as_array().unwrap().len(), 14);
    assert_eq!(v["cells"][0]["role"], "-");
}

proptest! {
    #[test]
    fn placement_and_index_are_inverse(m in 2usize..7) {
        let l = build_layout(m * m).unwrap();
        for q in 0..l.n_qubits() {
            let (r, c) = l.cell_of(q).unwrap();
            prop_assert_eq!(l.qubit_at(r, c), Some(q));
            prop_assert_eq!(l.wire_index(l.role_of(q)), Some(q));
        }
        for r in 0..l.rows {
            for c in 0..l.cols {
                prop_assert_eq!(l.qubit_at(r, c).is_none(), l.role_at(r, c) == WireRole::Unused);
            }
        }
    }

    #[test]
    fn non_squares_rejected(n in 0usize..400) {
        let square = (2..=20).any(|m| m * m == n);
        prop_assert_eq!(build_layout(n).is_ok(), square);
    }
}
