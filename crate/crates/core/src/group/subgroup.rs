use std::collections::BTreeSet;

use serde::Serialize;

use super::{ElementId, GroupTable, Recipe};
use crate::error::{Error, Result};

/// A subgroup as a sorted element list. `generator` is set when the subgroup
/// is known to be cyclic, and then `elements` are exactly its powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubgroupSet {
    pub elements: Vec<ElementId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<ElementId>,
}

impl SubgroupSet {
    pub fn trivial() -> Self {
        SubgroupSet { elements: vec![ElementId::IDENTITY], generator: Some(ElementId::IDENTITY) }
    }

    /// The cyclic subgroup generated by `x`.
    pub fn cyclic(g: &GroupTable, x: ElementId) -> Self {
        let mut elements = Vec::with_capacity(g.elt_order(x));
        let mut acc = ElementId::IDENTITY;
        loop {
            elements.push(acc);
            acc = g.mul(acc, x);
            if acc == ElementId::IDENTITY {
                break;
            }
        }
        elements.sort_unstable();
        SubgroupSet { elements, generator: Some(x) }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(g: &GroupTable, gens: &[ElementId]) -> Self {
        let mut members = vec![false; g.order()];
        members[0] = true;
        let mut frontier = vec![ElementId::IDENTITY];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = g.mul(x, s);
                if !members[y.index()] {
                    members[y.index()] = true;
                    frontier.push(y);
                }
            }
        }
        let elements: Vec<ElementId> =
            members.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| ElementId::from(i)).collect();
        let generator = match gens {
            [] => Some(ElementId::IDENTITY),
            [x] => Some(*x),
            _ => None,
        };
        SubgroupSet { elements, generator }
    }

    /// Checks the subgroup axioms against `g`.
    pub fn from_elements(g: &GroupTable, elements: &[ElementId]) -> Result<Self> {
        let set: BTreeSet<ElementId> = elements.iter().copied().collect();
        if let Some(x) = set.iter().find(|x| x.index() >= g.order()) {
            return Err(Error::NotSubgroup(format!("element {x} out of range")));
        }
        if !set.contains(&ElementId::IDENTITY) {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        for &a in &set {
            if !set.contains(&g.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &set {
                if !set.contains(&g.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!("{a}*{b} not in set")));
                }
            }
        }
        let elements: Vec<ElementId> = set.into_iter().collect();
        let generator = elements.iter().copied().find(|&x| g.elt_order(x) == elements.len());
        Ok(SubgroupSet { elements, generator })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// The left coset `x·H`, sorted.
    pub fn left_coset(&self, g: &GroupTable, x: ElementId) -> Vec<ElementId> {
        let mut c: Vec<ElementId> = self.elements.iter().map(|&h| g.mul(x, h)).collect();
        c.sort_unstable();
        c
    }

    /// Returns a conjugation witness `(g, h)` with `g h g^-1 ∉ H`, if any.
    pub fn normality_witness(&self, g: &GroupTable) -> Option<(ElementId, ElementId)> {
        for x in g.elements() {
            for &h in &self.elements {
                if !self.contains(g.conj(x, h)) {
                    return Some((x, h));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, g: &GroupTable) -> bool {
        self.normality_witness(g).is_none()
    }
}

/// `G/H` on left cosets. Cosets are numbered by their minimal member, so the
/// identity coset is 0. The recipe records the projection `G -> G/H`.
pub fn quotient(g: &GroupTable, h: &SubgroupSet) -> Result<GroupTable> {
    let h = SubgroupSet::from_elements(g, &h.elements)?;
    if let Some((x, y)) = h.normality_witness(g) {
        return Err(Error::NotNormal { g: x, h: y });
    }
    let mut projection = vec![ElementId(u32::MAX); g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if projection[x.index()].0 != u32::MAX {
            continue;
        }
        let id = ElementId::from(reps.len());
        for y in h.left_coset(g, x) {
            projection[y.index()] = id;
        }
        reps.push(x);
    }
    let n = reps.len();
    let mut mul = Vec::with_capacity(n * n);
    for &a in &reps {
        for &b in &reps {
            mul.push(projection[g.mul(a, b).index()].0);
        }
    }
    GroupTable::validated(
        n,
        mul,
        Recipe::Quotient { parent: Box::new(g.recipe().clone()), projection },
    )
}

/// The subgroup `H` as a group in its own right, with ids following the
/// sorted order of `H`'s elements.
pub fn subgroup_table(g: &GroupTable, h: &SubgroupSet) -> Result<GroupTable> {
    let h = SubgroupSet::from_elements(g, &h.elements)?;
    let n = h.order();
    let local = |x: ElementId| h.elements.binary_search(&x).expect("closed") as u32;
    let mut mul = Vec::with_capacity(n * n);
    for &a in &h.elements {
        for &b in &h.elements {
            mul.push(local(g.mul(a, b)));
        }
    }
    GroupTable::validated(
        n,
        mul,
        Recipe::Subgroup { parent: Box::new(g.recipe().clone()), elements: h.elements.clone() },
    )
}

/// All distinct subgroups generated by at most two elements.
pub fn two_generated_subgroups(g: &GroupTable) -> Vec<SubgroupSet> {
    let mut seen: BTreeSet<Vec<ElementId>> = BTreeSet::new();
    let mut out = Vec::new();
    let cyclic: Vec<SubgroupSet> = g.elements().map(|x| SubgroupSet::cyclic(g, x)).collect();
    for a in g.elements() {
        for b in g.elements().skip(a.index()) {
            if cyclic[a.index()].contains(b) || cyclic[b.index()].contains(a) {
                let c = if cyclic[a.index()].order() >= cyclic[b.index()].order() { a } else { b };
                let s = cyclic[c.index()].clone();
                if seen.insert(s.elements.clone()) {
                    out.push(s);
                }
                continue;
            }
            let s = SubgroupSet::generated(g, &[a, b]);
            if seen.insert(s.elements.clone()) {
                out.push(s);
            }
        }
    }
    out.sort_by(|x, y| (x.order(), &x.elements).cmp(&(y.order(), &y.elements)));
    out
}
