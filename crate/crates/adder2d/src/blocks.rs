//! Adder building blocks as gate sequences over named ports.
//!
//! Baseline blocks follow the published block table verbatim. Optimized
//! blocks are the merged forms used in the optimized chain: a G,P block also
//! carries the prep swaps and first Toffoli of the next G,P block when the
//! three `next` ports are bound, and a Carry block hosts the prep swap of the
//! following Carry (recorded in `overlap`).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ir::{Circuit, Gate};
use crate::layout::{build_layout, Cell, GridLayout};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    Baseline,
    Optimized,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Baseline => "baseline",
            Variant::Optimized => "optimized",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "baseline" | "base" => Ok(Variant::Baseline),
            "optimized" | "opt" => Ok(Variant::Optimized),
            _ => Err(format!("unknown variant {s:?} (baseline, optimized)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BlockKind {
    HalfAdder,
    FullAdder,
    /// g,p of one bit.
    Gp,
    /// g,p of the first bit of a column.
    GpFirst,
    /// G,P step extending the group signals by one bit.
    BigGp,
    /// G,P step on the first two bits of a column.
    BigGpFirst,
    ColumnCarry,
    Carry,
    Carry1,
    Sum,
    Sum1,
    Sum2,
}

impl BlockKind {
    pub const ALL: [BlockKind; 12] = [
        BlockKind::HalfAdder,
        BlockKind::FullAdder,
        BlockKind::Gp,
        BlockKind::GpFirst,
        BlockKind::BigGp,
        BlockKind::BigGpFirst,
        BlockKind::ColumnCarry,
        BlockKind::Carry,
        BlockKind::Carry1,
        BlockKind::Sum,
        BlockKind::Sum1,
        BlockKind::Sum2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BlockKind::HalfAdder => "half_adder",
            BlockKind::FullAdder => "full_adder",
            BlockKind::Gp => "gp",
            BlockKind::GpFirst => "gp_first",
            BlockKind::BigGp => "big_gp",
            BlockKind::BigGpFirst => "big_gp_first",
            BlockKind::ColumnCarry => "column_carry",
            BlockKind::Carry => "carry",
            BlockKind::Carry1 => "carry1",
            BlockKind::Sum => "sum",
            BlockKind::Sum1 => "sum1",
            BlockKind::Sum2 => "sum2",
        }
    }

    /// Whether the variant defines this block.
    pub fn exists_in(self, variant: Variant) -> bool {
        !(variant == Variant::Optimized && matches!(self, BlockKind::Sum1 | BlockKind::Sum2))
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Port names of a block: the required ones, then the optional `next` ports
/// of the merged optimized G,P blocks.
pub fn port_names(
    kind: BlockKind,
    variant: Variant,
) -> Result<(&'static [&'static str], &'static [&'static str])> {
    use BlockKind as K;
    use Variant::*;
    const NONE: &[&str] = &[];
    const NEXT: &[&str] = &["a_next", "p_next", "g_next"];
    let ports: (&[&str], &[&str]) = match (kind, variant) {
        (K::HalfAdder, _) => (&["a", "b", "c"], NONE),
        (K::FullAdder, _) => (&["c", "a", "b", "c_next"], NONE),
        (K::Gp | K::GpFirst, _) => (&["a", "b", "g"], NONE),
        (K::BigGp | K::BigGpFirst, Baseline) => (&["P", "G", "a", "p", "g", "0"], NONE),
        (K::BigGpFirst, Optimized) => (&["p0", "g0", "a", "p", "g", "0"], NEXT),
        (K::BigGp, Optimized) => (&["P", "G", "a", "p", "g", "0"], NEXT),
        (K::ColumnCarry, Baseline) => (&["P", "G", "C"], NONE),
        (K::ColumnCarry, Optimized) => (&["C", "g", "G", "p"], NONE),
        (K::Carry, Baseline) => (&["P", "G", "a", "p", "C"], NONE),
        (K::Carry, Optimized) => (&["p_prev", "g_prev", "G", "a", "p", "C"], NONE),
        (K::Carry1, Baseline) => (&["p", "g", "c"], NONE),
        (K::Carry1, Optimized) => (&["p0", "g0", "a", "p", "g"], NONE),
        (K::Sum, Baseline) => (&["c", "P", "a", "p"], NONE),
        (K::Sum, Optimized) => (&["c", "p"], NONE),
        (K::Sum1, Baseline) => (&["c", "a", "p"], NONE),
        (K::Sum2, Baseline) => (&["c", "p"], NONE),
        (K::Sum1 | K::Sum2, Optimized) => {
            return Err(Error::UnsupportedBlock(kind.to_string(), variant.to_string()))
        }
    };
    Ok(ports)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockInstance {
    pub kind: BlockKind,
    pub variant: Variant,
    pub ports: Vec<(&'static str, usize)>,
    pub circuit: Circuit,
    /// Gates that belong to the next block and may overlap this one.
    pub overlap: Vec<usize>,
}

fn sequence(kind: BlockKind, variant: Variant, w: &[usize]) -> (Vec<Gate>, Vec<usize>) {
    use BlockKind as K;
    use Gate as G;
    use Variant::*;
    let s = G::swap;
    let t = G::toffoli;
    let c = G::cnot;
    let mut overlap = Vec::new();
    let gates = match (kind, variant) {
        (K::HalfAdder, _) | (K::Gp | K::GpFirst, _) => vec![t(w[0], w[1], w[2]), c(w[0], w[1])],
        (K::FullAdder, Baseline) => {
            let (ci, a, b, co) = (w[0], w[1], w[2], w[3]);
            vec![t(a, b, co), c(a, b), s(ci, a), t(a, b, co), c(a, b), s(ci, a)]
        }
        (K::FullAdder, Optimized) => {
            let (ci, a, b, co) = (w[0], w[1], w[2], w[3]);
            vec![s(ci, a), t(a, b, co), c(a, b), s(ci, a)]
        }
        (K::BigGp | K::BigGpFirst, Baseline) => {
            let (pp, gg, a, p, g, z) = (w[0], w[1], w[2], w[3], w[4], w[5]);
            vec![
                s(gg, a),
                s(pp, gg),
                t(a, p, g),
                s(gg, a),
                s(g, z),
                t(a, p, g),
                s(gg, a),
                s(pp, gg),
                s(gg, a),
            ]
        }
        (K::BigGpFirst, Optimized) => {
            let (p0, g0, a, p, g, z) = (w[0], w[1], w[2], w[3], w[4], w[5]);
            let next = w.get(6..9);
            let mut v = vec![s(g0, a)];
            if let Some(n) = next {
                v.push(s(n[0], n[1]));
            }
            v.extend([s(p0, g0), t(a, p, g)]);
            if let Some(n) = next {
                v.push(s(n[1], n[2]));
            }
            v.extend([s(g0, a), s(g, z), t(a, p, g)]);
            if let Some(n) = next {
                v.push(t(z, n[0], n[1]));
            }
            v
        }
        (K::BigGp, Optimized) => {
            let (pp, gg, a, p, g, z) = (w[0], w[1], w[2], w[3], w[4], w[5]);
            let next = w.get(6..9);
            let mut v = vec![s(pp, gg), s(p, g), s(a, p), s(g, z), s(gg, a)];
            if let Some(n) = next {
                v.extend([s(n[0], n[1]), s(n[1], n[2])]);
            }
            v.extend([s(pp, gg), t(a, p, g)]);
            if let Some(n) = next {
                v.push(t(z, n[0], n[1]));
            }
            v
        }
        (K::ColumnCarry, Baseline) => {
            let (pp, gg, cc) = (w[0], w[1], w[2]);
            vec![s(pp, gg), t(cc, gg, pp), s(gg, cc), s(pp, gg), s(gg, cc)]
        }
        (K::ColumnCarry, Optimized) => {
            let (cc, g, gg, p) = (w[0], w[1], w[2], w[3]);
            vec![t(cc, g, gg), s(cc, gg), s(g, gg), s(cc, gg), s(p, g)]
        }
        (K::Carry, Baseline) => {
            let (pp, gg, a, p, cc) = (w[0], w[1], w[2], w[3], w[4]);
            vec![s(pp, gg), s(p, cc), s(a, p), t(a, gg, pp), s(gg, a), s(pp, gg)]
        }
        (K::Carry, Optimized) => {
            let (pm, gm, gg, a, p, cc) = (w[0], w[1], w[2], w[3], w[4], w[5]);
            overlap.push(7);
            vec![t(a, p, gg), s(a, p), s(gg, a), s(gm, gg), s(a, p), s(gg, a), s(p, cc), s(pm, gm)]
        }
        (K::Carry1, Baseline) => {
            let (p, g, cc) = (w[0], w[1], w[2]);
            vec![s(g, cc), t(p, g, cc), s(p, g)]
        }
        (K::Carry1, Optimized) => {
            let (p0, g0, a, p, g) = (w[0], w[1], w[2], w[3], w[4]);
            vec![t(a, p, g0), s(g0, a), s(p0, g0), s(a, p), s(g0, a), s(p, g)]
        }
        (K::Sum, Baseline) => {
            let (cc, pp, a, p) = (w[0], w[1], w[2], w[3]);
            vec![s(cc, pp), s(pp, a), c(a, p), s(pp, a), s(cc, pp)]
        }
        (K::Sum1, Baseline) => {
            let (cc, a, p) = (w[0], w[1], w[2]);
            vec![s(cc, a), c(a, p), s(cc, a)]
        }
        (K::Sum, Optimized) | (K::Sum2, Baseline) => vec![c(w[0], w[1])],
        (K::Sum1 | K::Sum2, Optimized) => unreachable!("rejected by port_names"),
    };
    (gates, overlap)
}

/// Bind a block to grid wires (in `port_names` order) and emit its gates.
pub fn build_block(
    kind: BlockKind,
    variant: Variant,
    wires: &[usize],
    layout: &GridLayout,
) -> Result<BlockInstance> {
    let (req, opt) = port_names(kind, variant)?;
    if wires.len() != req.len() && wires.len() != req.len() + opt.len() {
        let expected = if opt.is_empty() {
            req.len().to_string()
        } else {
            format!("{} or {}", req.len(), req.len() + opt.len())
        };
        return Err(Error::PortCount { block: kind.to_string(), expected, got: wires.len() });
    }
    let (gates, overlap) = sequence(kind, variant, wires);
    let circuit = Circuit::from_gates(layout.n_qubits(), gates)?;
    if let Some(v) = layout.check_adjacency(&circuit).first() {
        return Err(Error::NotAdjacent(format!("{} in {kind}", v.gate)));
    }
    let names = req.iter().chain(opt.iter()).copied();
    let ports = names.zip(wires.iter().copied()).collect();
    Ok(BlockInstance { kind, variant, ports, circuit, overlap })
}

/// Port-level truth table of a block, inputs and outputs in port order.
///
/// Transport swaps move values between ports, so outputs name where each
/// result lands. For the usual inputs (ancillae zero, a/p/g already formed)
/// the outputs are the generate/propagate and carry signals:
/// g = a b, p = a ^ b, G[i,j] = g_j ^ p_j G[i,j-1], P[i,j] = P[i,j-1] p_j,
/// carry = G ^ c P, sum = p ^ c.
pub fn block_semantics(kind: BlockKind, variant: Variant, input: &[bool]) -> Result<Vec<bool>> {
    use BlockKind as K;
    use Variant::*;
    let (req, opt) = port_names(kind, variant)?;
    if input.len() != req.len() && input.len() != req.len() + opt.len() {
        return Err(Error::PortCount {
            block: kind.to_string(),
            expected: (req.len() + opt.len()).to_string(),
            got: input.len(),
        });
    }
    let x = input;
    let out = match (kind, variant) {
        (K::HalfAdder, _) | (K::Gp | K::GpFirst, _) => vec![x[0], x[0] ^ x[1], x[2] ^ (x[0] & x[1])],
        (K::FullAdder, Baseline) => {
            let (ci, a, b, co) = (x[0], x[1], x[2], x[3]);
            let carry = co ^ (a & b) ^ (ci & (a ^ b));
            vec![ci, a, a ^ b ^ ci, carry]
        }
        (K::FullAdder, Optimized) => {
            // b already holds p and c_next holds g.
            let (ci, a, p, g) = (x[0], x[1], x[2], x[3]);
            vec![ci, a, p ^ ci, g ^ (p & ci)]
        }
        (K::BigGp | K::BigGpFirst, Baseline) => {
            let (pp, gg, a, p, g, z) = (x[0], x[1], x[2], x[3], x[4], x[5]);
            vec![pp, gg, a, p, z ^ (pp & p), g ^ (gg & p)]
        }
        (K::BigGpFirst, Optimized) => {
            let (p0, g0, a, p, g, z) = (x[0], x[1], x[2], x[3], x[4], x[5]);
            let group = g ^ (g0 & p);
            let mut v = vec![a, g0, p0, p, z ^ (p0 & p), group];
            if input.len() == 9 {
                v.extend([x[7], x[8] ^ (x[7] & group), x[6]]);
            }
            v
        }
        (K::BigGp, Optimized) => {
            // p holds the group signal formed by the previous block.
            let (pp, gg, a, group, g, z) = (x[0], x[1], x[2], x[3], x[4], x[5]);
            let mut v = vec![g, gg, pp, a, z ^ (a & pp), group];
            if input.len() == 9 {
                v.extend([x[7], x[8] ^ (x[7] & group), x[6]]);
            }
            v
        }
        (K::ColumnCarry, Baseline) => {
            let (pp, gg, cc) = (x[0], x[1], x[2]);
            vec![cc, pp, gg ^ (cc & pp)]
        }
        (K::ColumnCarry, Optimized) => {
            let (cc, pp, gg, p) = (x[0], x[1], x[2], x[3]);
            vec![pp, p, gg ^ (cc & pp), cc]
        }
        (K::Carry, Baseline) => {
            let (pp, gg, a, p, cc) = (x[0], x[1], x[2], x[3], x[4]);
            vec![cc, gg ^ (cc & pp), pp, a, p]
        }
        (K::Carry, Optimized) => {
            let (pm, gm, gg, a, p, cc) = (x[0], x[1], x[2], x[3], x[4], x[5]);
            vec![p, pm, a, gm, cc, gg ^ (a & p)]
        }
        (K::Carry1, Baseline) => {
            let (p, g, cc) = (x[0], x[1], x[2]);
            vec![cc, p, g ^ (cc & p)]
        }
        (K::Carry1, Optimized) => {
            let (p0, g0, a, p, g) = (x[0], x[1], x[2], x[3], x[4]);
            vec![a, p, p0, g, g0 ^ (a & p)]
        }
        (K::Sum, Baseline) => vec![x[0], x[1], x[2], x[3] ^ x[0]],
        (K::Sum1, Baseline) => vec![x[0], x[1], x[2] ^ x[0]],
        (K::Sum, Optimized) | (K::Sum2, Baseline) => vec![x[0], x[1] ^ x[0]],
        (K::Sum1 | K::Sum2, Optimized) => unreachable!("rejected by port_names"),
    };
    Ok(out)
}

/// Wires of one representative placement of a block in `layout`, which must
/// have at least four columns so every merged form fits.
pub fn canonical_wires(kind: BlockKind, variant: Variant, layout: &GridLayout) -> Result<Vec<usize>> {
    use BlockKind as K;
    use Cell::*;
    use Variant::*;
    port_names(kind, variant)?;
    let m = layout.m;
    if m < 4 {
        return Err(Error::InvalidWidth(layout.n));
    }
    // Column 1, local bit j has global bit m + j + 1.
    let bit = |j: usize| m + j + 1;
    let a = |j| layout.q(A(bit(j)));
    let b = |j| layout.q(B(bit(j)));
    let g = |j| layout.q(Gen(bit(j)));
    let gg = |j| layout.q(Group(bit(j)));
    let last = m - 1;
    let wires = match (kind, variant) {
        (K::HalfAdder, _) => vec![layout.a(1), layout.b(1), layout.q(Carry(1))],
        (K::FullAdder, _) => {
            vec![layout.q(Carry(1)), layout.a(2), layout.b(2), layout.q(Carry(2))]
        }
        (K::GpFirst, _) => vec![a(0), b(0), g(0)],
        (K::Gp, _) => vec![a(1), b(1), g(1)],
        (K::BigGpFirst, Baseline) => vec![b(0), g(0), a(1), b(1), g(1), gg(1)],
        (K::BigGpFirst, Optimized) => vec![b(0), g(0), a(1), b(1), g(1), gg(1), a(2), b(2), g(2)],
        (K::BigGp, Baseline) => vec![g(1), gg(1), a(2), b(2), g(2), gg(2)],
        (K::BigGp, Optimized) => vec![g(1), gg(1), a(2), b(2), g(2), gg(2), a(3), b(3), g(3)],
        (K::ColumnCarry, Baseline) => vec![g(last), gg(last), layout.q(Carry(m))],
        (K::ColumnCarry, Optimized) => vec![layout.q(Carry(m)), g(last), gg(last), b(last)],
        (K::Carry, Baseline) => vec![g(1), gg(1), a(2), b(2), g(2)],
        (K::Carry, Optimized) => vec![b(1), g(1), gg(1), a(2), b(2), g(2)],
        (K::Carry1, Baseline) => vec![b(0), g(0), a(1)],
        (K::Carry1, Optimized) => vec![b(0), g(0), a(1), b(1), g(1)],
        (K::Sum, Baseline) => vec![gg(1), a(2), b(2), g(2)],
        (K::Sum, Optimized) => vec![g(1), b(1)],
        (K::Sum1, Baseline) => vec![a(1), b(1), g(1)],
        (K::Sum2, Baseline) => vec![b(0), g(0)],
        (K::Sum1 | K::Sum2, Optimized) => unreachable!("rejected by port_names"),
    };
    Ok(wires)
}

/// A block placed at its representative position in the 16-bit layout.
pub fn canonical_instance(kind: BlockKind, variant: Variant) -> Result<BlockInstance> {
    let layout = build_layout(16)?;
    let wires = canonical_wires(kind, variant, &layout)?;
    build_block(kind, variant, &wires, &layout)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn optimized_has_no_sum1_sum2() {
        for k in [BlockKind::Sum1, BlockKind::Sum2] {
            assert!(canonical_instance(k, Variant::Optimized).is_err());
            assert!(!k.exists_in(Variant::Optimized));
        }
    }

    #[test]
    fn port_count_checked() {
        let l = build_layout(16).unwrap();
        let e = build_block(BlockKind::Carry, Variant::Baseline, &[0, 1], &l);
        assert!(matches!(e, Err(Error::PortCount { .. })));
    }

    #[test]
    fn non_adjacent_wiring_rejected() {
        let l = build_layout(16).unwrap();
        let w = [l.a(1), l.b(2), l.q(Cell::Carry(2))];
        let e = build_block(BlockKind::HalfAdder, Variant::Baseline, &w, &l);
        assert!(matches!(e, Err(Error::NotAdjacent(_))));
    }

    #[test]
    fn table_port_counts() {
        let (p, _) = port_names(BlockKind::BigGp, Variant::Baseline).unwrap();
        assert_eq!(p.len(), 6);
        let (p, _) = port_names(BlockKind::Carry, Variant::Baseline).unwrap();
        assert_eq!(p.len(), 5);
    }
}
