//! Geodesics: homomorphisms from cyclic groups and the cosets they trace out.
//!
//! As sets, geodesics are cosets `xH` of nontrivial cyclic subgroups `H`.
//! [`prime_geodesics`] keeps the subgroups of prime order, [`maximal_geodesics`]
//! the cyclic subgroups contained in no larger cyclic subgroup.
//! [`composite_orbit`] keeps the map view, where a non-injective homomorphism
//! visits each point of its image several times.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable, SubgroupSet};

/// The homomorphism `C_n → G`, `t ↦ g^t`, determined by its generator image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Homomorphism {
    pub domain_order: usize,
    pub image_generator: ElementId,
    pub nontrivial: bool,
}

impl Homomorphism {
    /// `None` unless `image^n = e`.
    pub fn new(g: &GroupTable, n: usize, image: ElementId) -> Option<Self> {
        (n >= 1 && n.is_multiple_of(g.elt_order(image))).then_some(Homomorphism {
            domain_order: n,
            image_generator: image,
            nontrivial: image != ElementId::IDENTITY,
        })
    }

    pub fn eval(&self, g: &GroupTable, t: usize) -> ElementId {
        g.pow(self.image_generator, t)
    }

    /// The sequence `γ(0), γ(1), …, γ(n−1)`.
    pub fn path(&self, g: &GroupTable) -> Vec<ElementId> {
        let mut out = Vec::with_capacity(self.domain_order);
        let mut acc = ElementId::IDENTITY;
        for _ in 0..self.domain_order {
            out.push(acc);
            acc = g.mul(acc, self.image_generator);
        }
        out
    }

    pub fn image(&self, g: &GroupTable) -> SubgroupSet {
        SubgroupSet::cyclic(g, self.image_generator)
    }

    pub fn is_injective(&self, g: &GroupTable) -> bool {
        g.elt_order(self.image_generator) == self.domain_order
    }
}

/// Every nontrivial homomorphism `C_n → G`, by increasing generator id.
pub fn homomorphisms_cn(g: &GroupTable, n: usize) -> Vec<Homomorphism> {
    g.elements().skip(1).filter_map(|x| Homomorphism::new(g, n, x)).collect()
}

/// All nontrivial cyclic subgroups, sorted by order and then by elements.
/// Each carries the smallest generator id.
pub fn cyclic_subgroups(g: &GroupTable) -> Vec<SubgroupSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in g.elements().skip(1) {
        let h = SubgroupSet::cyclic(g, x);
        if seen.insert(h.elements.clone()) {
            out.push(h);
        }
    }
    out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    out
}

/// Cyclic subgroups of prime order.
pub fn prime_order_subgroups(g: &GroupTable) -> Vec<SubgroupSet> {
    cyclic_subgroups(g).into_iter().filter(|h| is_prime(h.order())).collect()
}

/// Cyclic subgroups not strictly contained in another cyclic subgroup.
pub fn maximal_cyclic_subgroups(g: &GroupTable) -> Vec<SubgroupSet> {
    let all = cyclic_subgroups(g);
    all.iter()
        .filter(|h| {
            let x = h.generator.expect("cyclic subgroups carry a generator");
            !all.iter().any(|k| k.order() > h.order() && k.order() % h.order() == 0 && k.contains(x))
        })
        .cloned()
        .collect()
}

/// A coset of a nontrivial cyclic subgroup, represented by its minimal element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Geodesic {
    #[serde(serialize_with = "subgroup_elements")]
    pub subgroup: Arc<SubgroupSet>,
    pub rep: ElementId,
    pub coset: Vec<ElementId>,
}

fn subgroup_elements<S: Serializer>(h: &Arc<SubgroupSet>, s: S) -> std::result::Result<S::Ok, S::Error> {
    h.elements.serialize(s)
}

impl Geodesic {
    pub fn len(&self) -> usize {
        self.coset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coset.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.coset.binary_search(&x).is_ok()
    }
}

/// The left cosets of `h`, sorted by representative.
pub fn cosets(g: &GroupTable, h: &Arc<SubgroupSet>) -> Vec<Geodesic> {
    let mut covered = vec![false; g.order()];
    let mut out = Vec::with_capacity(g.order() / h.order());
    for x in g.elements() {
        if covered[x.index()] {
            continue;
        }
        let coset = h.left_coset(g, x);
        coset.iter().for_each(|y| covered[y.index()] = true);
        out.push(Geodesic { subgroup: Arc::clone(h), rep: coset[0], coset });
    }
    out
}

fn geodesics_of(g: &GroupTable, subgroups: Vec<SubgroupSet>) -> Result<Vec<Geodesic>> {
    if g.is_trivial() {
        return Err(Error::NoGeodesics);
    }
    Ok(subgroups.into_iter().flat_map(|h| cosets(g, &Arc::new(h))).collect())
}

/// Cosets of every prime-order subgroup, grouped by subgroup.
pub fn prime_geodesics(g: &GroupTable) -> Result<Vec<Geodesic>> {
    geodesics_of(g, prime_order_subgroups(g))
}

/// Cosets of every maximal cyclic subgroup, grouped by subgroup.
pub fn maximal_geodesics(g: &GroupTable) -> Result<Vec<Geodesic>> {
    geodesics_of(g, maximal_cyclic_subgroups(g))
}

/// Cosets of every nontrivial cyclic subgroup.
pub fn all_geodesics(g: &GroupTable) -> Result<Vec<Geodesic>> {
    geodesics_of(g, cyclic_subgroups(g))
}

/// The points `x·γ(t)` for `t ∈ C_n`, sorted, with repetition. Each point of
/// the coset `x·im(γ)` appears `n / |im(γ)|` times.
pub fn composite_orbit(g: &GroupTable, hom: &Homomorphism, x: ElementId) -> Vec<ElementId> {
    let mut out: Vec<ElementId> = hom.path(g).into_iter().map(|y| g.mul(x, y)).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::abelian::product_of_cyclics;
    use crate::group::perm::{from_cycles, symmetric_element};
    use crate::group::{make_cyclic, make_dicyclic, make_symmetric};

    fn ids(v: &[u32]) -> Vec<ElementId> {
        v.iter().map(|&x| ElementId(x)).collect()
    }

    #[test]
    fn homomorphism_counts() {
        for p in [2, 3, 5] {
            let g = product_of_cyclics(&[p, p]).unwrap();
            assert_eq!(homomorphisms_cn(&g, p).len(), p * p - 1);
        }
        assert!(homomorphisms_cn(&make_cyclic(5).unwrap(), 2).is_empty());
        let c4 = make_cyclic(4).unwrap();
        let homs = homomorphisms_cn(&c4, 4);
        assert_eq!(homs.iter().map(|h| h.image_generator.0).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(!homs[1].is_injective(&c4));
    }

    #[test]
    fn prime_geodesic_counts() {
        for p in [2, 3, 5] {
            let g = product_of_cyclics(&[p, p]).unwrap();
            assert_eq!(prime_geodesics(&g).unwrap().len(), p * (p + 1));
        }
        let c6 = make_cyclic(6).unwrap();
        let geos = prime_geodesics(&c6).unwrap();
        assert_eq!(geos.len(), 5);
        assert_eq!(geos[0].subgroup.elements, ids(&[0, 3]));
        assert_eq!(geos[3].subgroup.elements, ids(&[0, 2, 4]));
        let q8 = make_dicyclic(2).unwrap();
        let geos = prime_geodesics(&q8).unwrap();
        assert_eq!(geos.len(), 4);
        assert!(geos.iter().all(|s| s.len() == 2));
        assert_eq!(prime_geodesics(&make_cyclic(1).unwrap()), Err(Error::NoGeodesics));
    }

    #[test]
    fn maximal_subgroups() {
        let c6 = make_cyclic(6).unwrap();
        let m = maximal_cyclic_subgroups(&c6);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 6);
        assert_eq!(maximal_geodesics(&c6).unwrap().len(), 1);

        let c66 = product_of_cyclics(&[6, 6]).unwrap();
        assert_eq!(maximal_cyclic_subgroups(&c66).len(), 12);
        assert_eq!(maximal_geodesics(&c66).unwrap().len(), 72);

        for p in [2, 3, 5] {
            let g = product_of_cyclics(&[p, p]).unwrap();
            assert_eq!(maximal_geodesics(&g).unwrap(), prime_geodesics(&g).unwrap());
        }

        let s5 = make_symmetric(5).unwrap();
        let t = symmetric_element(&from_cycles(5, &[&[1, 2]]));
        let u = symmetric_element(&from_cycles(5, &[&[1, 2], &[3, 4, 5]]));
        let max = maximal_cyclic_subgroups(&s5);
        let ht = SubgroupSet::cyclic(&s5, t);
        assert!(!max.iter().any(|h| h.elements == ht.elements));
        assert!(ht.is_subset_of(&SubgroupSet::cyclic(&s5, u)));
    }

    #[test]
    fn composite_orbits() {
        let c4 = make_cyclic(4).unwrap();
        let h = Homomorphism::new(&c4, 4, ElementId(2)).unwrap();
        assert_eq!(composite_orbit(&c4, &h, ElementId(0)), ids(&[0, 0, 2, 2]));
        let c6 = make_cyclic(6).unwrap();
        let h = Homomorphism::new(&c6, 6, ElementId(2)).unwrap();
        assert_eq!(composite_orbit(&c6, &h, ElementId(1)), ids(&[1, 1, 3, 3, 5, 5]));
        let h = Homomorphism::new(&c6, 6, ElementId(1)).unwrap();
        assert_eq!(composite_orbit(&c6, &h, ElementId(4)), ids(&[0, 1, 2, 3, 4, 5]));
        assert!(Homomorphism::new(&c6, 4, ElementId(1)).is_none());
    }

    #[test]
    fn json_shape() {
        let c2 = make_cyclic(2).unwrap();
        let geos = prime_geodesics(&c2).unwrap();
        let v = serde_json::to_value(&geos).unwrap();
        assert_eq!(v, serde_json::json!([{"subgroup": [0, 1], "rep": 0, "coset": [0, 1]}]));
    }
}
