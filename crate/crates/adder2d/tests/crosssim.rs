use adder2d::adder::{assemble, AdderParams};
use adder2d::blocks::Variant;
use adder2d::decompose::DecompositionScheme;
use adder2d::sim::StateVector;
use rayon::prelude::*;

fn cross_check(variant: Variant, scheme: DecompositionScheme) {
    let ad = assemble(AdderParams::new(4, variant).expanded(scheme)).unwrap();
    assert_eq!(ad.layout.n_qubits(), 13);
    let worst = (0..256u64)
        .into_par_iter()
        .map(|x| {
            let (a, b) = (x & 15, x >> 4);
            let mut sv = StateVector::basis(13, ad.input_word(a, b) as usize).unwrap();
            for g in &ad.circuit.gates {
                sv.apply(g);
            }
            let (peak, p) = sv.peak();
            let e = ad.evaluate(a, b).unwrap();
            assert!(e.ok());
            let block = ad.input_word(a, e.sum) as usize;
            assert_eq!(peak, block, "{variant} {scheme} {a}+{b}");
            (sv.norm_sqr() - p).abs()
        })
        .reduce(|| 0.0, f64::max);
    assert!(worst < 1e-8, "{variant} {scheme}: off-target mass {worst}");
}

#[test]
fn optimized_standard_statevector_matches_block_level() {
    cross_check(Variant::Optimized, DecompositionScheme::Standard6Cnot);
}

#[test]
fn baseline_standard_statevector_matches_block_level() {
    cross_check(Variant::Baseline, DecompositionScheme::Standard6Cnot);
}

#[test]
fn optimized_peres_statevector_matches_block_level() {
    cross_check(Variant::Optimized, DecompositionScheme::PeresBased);
}
