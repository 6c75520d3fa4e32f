//! Successor-function flows on bare finite sets.
//!
//! A successor function `s` on `X` satisfies `s(a,b) = b ⟺ a = b` and
//! `s(a,b) = c ⟺ s(c,b) = a`. The step `(a,b) ↦ (b, s(a,b))` is then a
//! bijection of `X × X`; projections of its orbits to the first coordinate are
//! the flow's geodesics.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geodesic::all_geodesics;
use crate::group::GroupTable;
use crate::radon::{RadonSystem, Variant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuccessorFlow {
    size: usize,
    table: Vec<Vec<usize>>,
}

impl SuccessorFlow {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn s(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn step(&self, (a, b): (usize, usize)) -> (usize, usize) {
        (b, self.s(a, b))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// Checks both axioms exhaustively and names the first failing pair.
pub fn validate_flow(raw: &[Vec<usize>]) -> Result<SuccessorFlow> {
    let m = raw.len();
    for (a, row) in raw.iter().enumerate() {
        if row.len() != m {
            return Err(Error::NotSquare { row: a, len: row.len(), expected: m });
        }
        if let Some((b, &c)) = row.iter().enumerate().find(|(_, &c)| c >= m) {
            return Err(Error::FlowOutOfRange { a, b, value: c });
        }
    }
    for a in 0..m {
        for b in 0..m {
            if (raw[a][b] == b) != (a == b) {
                return Err(Error::FlowReflexivity { a, b });
            }
            let c = raw[a][b];
            if raw[c][b] != a {
                return Err(Error::FlowReversibility { a, b });
            }
        }
    }
    Ok(SuccessorFlow { size: m, table: raw.to_vec() })
}

/// `s(a,b) = b·a⁻¹·b`.
pub fn group_flow(g: &GroupTable) -> SuccessorFlow {
    let raw: Vec<Vec<usize>> = g
        .elements()
        .map(|a| g.elements().map(|b| g.mul(g.mul(b, g.inv(a)), b).index()).collect())
        .collect();
    validate_flow(&raw).expect("group flows satisfy the axioms")
}

/// `s(a,b) = a`: every nonconstant geodesic bounces between two points.
pub fn constant_flow(m: usize) -> SuccessorFlow {
    let raw: Vec<Vec<usize>> = (0..m).map(|a| vec![a; m]).collect();
    validate_flow(&raw).expect("the constant flow satisfies the axioms")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowOrbit {
    pub period: usize,
    pub states: Vec<(usize, usize)>,
    /// First coordinates along one period.
    pub projection: Vec<usize>,
}

impl FlowOrbit {
    pub fn is_stationary(&self) -> bool {
        self.period == 1
    }

    /// How often each point of `X` is visited in one period.
    pub fn multiplicities(&self, size: usize) -> Vec<u32> {
        let mut row = vec![0; size];
        self.projection.iter().for_each(|&x| row[x] += 1);
        row
    }

    /// The visited points without repetition, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut v = self.projection.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// The orbits of the step map, each started from its lexicographically
/// smallest state, in order of that state.
pub fn flow_orbits(flow: &SuccessorFlow) -> Vec<FlowOrbit> {
    let m = flow.size;
    let mut seen = vec![false; m * m];
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if seen[a * m + b] {
                continue;
            }
            let mut states = Vec::new();
            let mut st = (a, b);
            loop {
                seen[st.0 * m + st.1] = true;
                states.push(st);
                st = flow.step(st);
                if st == (a, b) {
                    break;
                }
            }
            let projection = states.iter().map(|s| s.0).collect();
            let orbit = FlowOrbit { period: states.len(), states, projection };
            debug_assert_eq!(orbit.is_stationary(), a == b);
            out.push(orbit);
        }
    }
    out
}

/// Every orbit read backwards is again an orbit: `s(x_{k+1}, x_k) = x_{k−1}`.
pub fn reversal_closed(flow: &SuccessorFlow) -> bool {
    flow_orbits(flow).iter().all(|o| {
        let x = &o.projection;
        let n = x.len();
        (0..n).all(|k| flow.s(x[(k + 1) % n], x[k]) == x[(k + n - 1) % n])
    })
}

/// Rows are the multiplicity vectors of the nonstationary orbits, with
/// duplicates removed (first occurrence kept).
pub fn flow_radon_system(flow: &SuccessorFlow, label: &str) -> Result<RadonSystem> {
    if flow.size < 2 {
        return Err(Error::FlowTooSmall(flow.size));
    }
    let mut seen = HashSet::new();
    let rows: Vec<Vec<u32>> = flow_orbits(flow)
        .iter()
        .filter(|o| !o.is_stationary())
        .map(|o| o.multiplicities(flow.size))
        .filter(|r| seen.insert(r.clone()))
        .collect();
    RadonSystem::from_rows(label.to_string(), flow.size, Variant::Flow, rows)
}

/// Comparison of a group flow's geodesics with the cosets of the group's
/// nontrivial cyclic subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetCorrespondence {
    pub orbits: usize,
    pub distinct_projections: usize,
    pub cosets: usize,
    /// Orbit projections and cosets agree as sets of sets.
    pub sets_match: bool,
    /// Each coset of `H` is the projection of exactly `φ(|H|)` orbits and
    /// each orbit visits its coset once per period.
    pub multiplicities_match: bool,
}

impl CosetCorrespondence {
    pub fn holds(&self) -> bool {
        self.sets_match && self.multiplicities_match
    }
}

pub fn group_flow_correspondence(g: &GroupTable) -> Result<CosetCorrespondence> {
    let flow = group_flow(g);
    let orbits: Vec<FlowOrbit> = flow_orbits(&flow).into_iter().filter(|o| !o.is_stationary()).collect();
    let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut simple = true;
    for o in &orbits {
        let support = o.support();
        simple &= support.len() == o.period;
        *counts.entry(support).or_default() += 1;
    }
    let geodesics = all_geodesics(g)?;
    let cosets: BTreeMap<Vec<usize>, usize> = geodesics
        .iter()
        .map(|s| (s.coset.iter().map(|x| x.index()).collect(), crate::arith::euler_phi(s.len())))
        .collect();
    let sets_match = counts.keys().eq(cosets.keys());
    Ok(CosetCorrespondence {
        orbits: orbits.len(),
        distinct_projections: counts.len(),
        cosets: cosets.len(),
        sets_match,
        multiplicities_match: sets_match && simple && counts.values().eq(cosets.values()),
    })
}

/// Checks `x_k = a·(a⁻¹b)^k` along the orbit of every state `(a, b)`.
pub fn orbit_formula_holds(g: &GroupTable) -> bool {
    let flow = group_flow(g);
    g.elements().all(|a| {
        g.elements().all(|b| {
            let d = g.mul(g.inv(a), b);
            let mut st = (a.index(), b.index());
            let mut expect = a;
            for _ in 0..2 * g.elt_order(d) {
                if st.0 != expect.index() {
                    return false;
                }
                expect = g.mul(expect, d);
                st = flow.step(st);
            }
            true
        })
    })
}
