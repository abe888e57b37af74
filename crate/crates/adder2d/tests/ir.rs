use adder2d::ir::{Circuit, Gate, GateKind};
use adder2d::sim::{run_classical, BasisState};
use proptest::prelude::*;

const N: usize = 6;

fn gate_strategy(classical: bool) -> impl Strategy<Value = Gate> {
    let kinds: Vec<GateKind> = GateKind::ALL.into_iter().filter(|k| !classical || k.is_classical()).collect();
    (prop::sample::select(kinds), Just((0..N).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|(k, qs)| Gate::new(k, &qs[..k.arity()]).unwrap())
}

fn circuit_strategy(classical: bool) -> impl Strategy<Value = Circuit> {
    prop::collection::vec(gate_strategy(classical), 0..40)
        .prop_map(|gates| Circuit::from_gates(N, gates).unwrap())
}

#[test]
fn reverse_example() {
    let c = Circuit::from_gates(3, vec![Gate::cnot(0, 1), Gate::t(2)]).unwrap();
    assert_eq!(c.reverse().gates, vec![Gate::tdg(2), Gate::cnot(0, 1)]);
}

#[test]
fn concat_examples() {
    let c = Circuit::from_gates(2, vec![Gate::x(0), Gate::swap(0, 1)]).unwrap();
    let joined = Circuit::concat(&[Circuit::new(2), c.clone()]).unwrap();
    assert_eq!(joined.gates, c.gates);
    assert_eq!(Circuit::concat(&[c.clone(), c.clone()]).unwrap().len(), 4);
    assert!(Circuit::concat(&[c, Circuit::new(3)]).is_err());
}

#[test]
fn gate_invariants() {
    assert!(Gate::new(GateKind::CNOT, &[1, 1]).is_err());
    assert!(Gate::new(GateKind::TOFFOLI, &[0, 1]).is_err());
    assert!(Circuit::from_gates(2, vec![Gate::cnot(0, 2)]).is_err());
}

proptest! {
    #[test]
    fn reverse_is_involution(c in circuit_strategy(false)) {
        prop_assert_eq!(c.reverse().reverse(), c);
    }

    #[test]
    fn concat_is_associative(a in circuit_strategy(false), b in circuit_strategy(false), c in circuit_strategy(false)) {
        let left = Circuit::concat(&[Circuit::concat(&[a.clone(), b.clone()]).unwrap(), c.clone()]).unwrap();
        let right = Circuit::concat(&[a, Circuit::concat(&[b, c]).unwrap()]).unwrap();
        prop_assert_eq!(left.gates, right.gates);
    }

    #[test]
    fn text_round_trip(c in circuit_strategy(false)) {
        let back = Circuit::from_text(&c.to_text()).unwrap();
        prop_assert_eq!(back.gates, c.gates);
        prop_assert_eq!(back.n_qubits, c.n_qubits);
    }

    #[test]
    fn reverse_undoes_classical(c in circuit_strategy(true), x in 0usize..(1 << N)) {
        let input = BasisState::from_index(N, x);
        let mid = run_classical(&c, &input).unwrap();
        prop_assert_eq!(run_classical(&c.reverse(), &mid).unwrap(), input);
    }
}
