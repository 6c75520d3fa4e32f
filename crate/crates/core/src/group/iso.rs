//! Brute-force isomorphism search for small groups. Candidate images of a
//! generating set are pruned by element order; each complete assignment is
//! extended along words in the generators and checked on the full table.

use super::{ElementId, GroupTable, SubgroupSet};

/// Largest order accepted by [`find_isomorphism`].
pub const ISO_MAX_ORDER: usize = 64;

/// Greedy generating set: repeatedly add the element of largest order not
/// yet in the generated subgroup.
pub fn generating_set(g: &GroupTable) -> Vec<ElementId> {
    let mut gens = Vec::new();
    let mut span = SubgroupSet::trivial();
    while span.order() < g.order() {
        let x = g
            .elements()
            .filter(|&x| !span.contains(x))
            .max_by(|&a, &b| g.elt_order(a).cmp(&g.elt_order(b)).then(b.cmp(&a)))
            .expect("span is proper");
        gens.push(x);
        span = SubgroupSet::generated(g, &gens);
    }
    gens
}

/// Walks the Cayley graph of `<gens>` from the identity, assigning
/// `x·gens[i] ↦ f(x)·images[i]`. Fails if the assignment is inconsistent or
/// (when `injective`) collides.
fn partial_map(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[ElementId],
    images: &[ElementId],
    injective: bool,
) -> Option<Vec<Option<ElementId>>> {
    let mut map: Vec<Option<ElementId>> = vec![None; g.order()];
    let mut hit = vec![false; h.order()];
    map[0] = Some(ElementId::IDENTITY);
    hit[0] = true;
    let mut frontier = vec![ElementId::IDENTITY];
    while let Some(x) = frontier.pop() {
        let fx = map[x.index()].unwrap();
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(fx, t);
            match map[y.index()] {
                Some(existing) if existing != fy => return None,
                Some(_) => {}
                None => {
                    if injective && std::mem::replace(&mut hit[fy.index()], true) {
                        return None;
                    }
                    map[y.index()] = Some(fy);
                    frontier.push(y);
                }
            }
        }
    }
    Some(map)
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism `g → h`, if one exists.
/// `gens` must generate `g`.
pub fn extend_homomorphism(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[ElementId],
    images: &[ElementId],
) -> Option<Vec<ElementId>> {
    let map: Vec<ElementId> = partial_map(g, h, gens, images, false)?.into_iter().collect::<Option<_>>()?;
    for a in g.elements() {
        for b in g.elements() {
            if map[g.mul(a, b).index()] != h.mul(map[a.index()], map[b.index()]) {
                return None;
            }
        }
    }
    Some(map)
}

/// An isomorphism `g → h` as an image table, or `None` when the groups are
/// not isomorphic or exceed [`ISO_MAX_ORDER`].
pub fn find_isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Vec<ElementId>> {
    if g.order() != h.order() || g.order() > ISO_MAX_ORDER || g.order_profile() != h.order_profile() {
        return None;
    }
    let gens = generating_set(g);
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&s| h.elements().filter(|&t| h.elt_order(t) == g.elt_order(s)).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &mut images)
}

fn search(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    images: &mut Vec<ElementId>,
) -> Option<Vec<ElementId>> {
    if images.len() == gens.len() {
        let map = extend_homomorphism(g, h, gens, images)?;
        let mut hit = vec![false; h.order()];
        for y in &map {
            if std::mem::replace(&mut hit[y.index()], true) {
                return None;
            }
        }
        return Some(map);
    }
    for &t in &candidates[images.len()] {
        images.push(t);
        let partial_ok = partial_map(g, h, &gens[..images.len()], images, true).is_some();
        if partial_ok {
            if let Some(m) = search(g, h, gens, candidates, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}

pub fn are_isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_dicyclic, make_dihedral, make_direct_product, make_semidirect};

    #[test]
    fn c2_times_c3_is_c6() {
        let c6 = make_cyclic(6).unwrap();
        let p = make_direct_product(&make_cyclic(2).unwrap(), &make_cyclic(3).unwrap()).unwrap();
        assert!(are_isomorphic(&c6, &p));
    }

    #[test]
    fn q8_is_not_d4() {
        assert!(!are_isomorphic(&make_dicyclic(2).unwrap(), &make_dihedral(4).unwrap()));
    }

    #[test]
    fn inversion_semidirect_is_dihedral() {
        let c3 = make_cyclic(3).unwrap();
        let c2 = make_cyclic(2).unwrap();
        let id: Vec<ElementId> = c3.elements().collect();
        let neg: Vec<ElementId> = (0..3u32).map(|x| ElementId((3 - x) % 3)).collect();
        let g = make_semidirect(&c3, &c2, &[id, neg]).unwrap();
        let d3 = make_dihedral(3).unwrap();
        assert_eq!(g.order_profile(), d3.order_profile());
        let map = find_isomorphism(&g, &d3).expect("isomorphic");
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(map[g.mul(a, b).index()], d3.mul(map[a.index()], map[b.index()]));
            }
        }
    }
}
