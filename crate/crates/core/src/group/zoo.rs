//! One representative of every isomorphism class of groups of order 2 to 24.
//!
//! Abelian groups come from the Kronecker enumeration; the nonabelian ones are
//! built from dihedral, dicyclic, symmetric and alternating groups, direct
//! products and a handful of semidirect products.

use super::abelian::{abelian_groups_up_to, product_of_cyclics};
use super::construct::action_from_generators;
use super::iso::extend_homomorphism;
use super::{
    make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_direct_product,
    make_semidirect, make_symmetric, ElementId, GroupTable,
};
use crate::error::{Error, Result};

/// Largest order for which [`small_groups`] is complete.
pub const ZOO_MAX_ORDER: usize = 24;

/// Number of groups of each order `0..=24` (OEIS A000001).
pub const GROUP_COUNTS: [usize; 25] =
    [0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15];

/// `C_n ⋊ C_m` where the generator of `C_m` acts by `x ↦ k·x`.
pub fn metacyclic(n: usize, m: usize, k: usize) -> Result<GroupTable> {
    let cn = make_cyclic(n)?;
    let cm = make_cyclic(m)?;
    let action: Vec<Vec<ElementId>> = (0..m)
        .map(|j| {
            let kj = (0..j).fold(1usize, |acc, _| acc * k % n);
            (0..n).map(|x| ElementId::from(x * kj % n)).collect()
        })
        .collect();
    make_semidirect(&cn, &cm, &action)
}

/// `N ⋊ C_m` where the generator of `C_m` acts by the automorphism sending
/// `n_gens[i]` to `n_images[i]`.
fn extend_by_cyclic(
    n_grp: &GroupTable,
    m: usize,
    n_gens: &[ElementId],
    n_images: &[ElementId],
) -> Result<GroupTable> {
    let alpha = extend_homomorphism(n_grp, n_grp, n_gens, n_images)
        .ok_or_else(|| Error::UnsupportedGroup("generator images do not define an automorphism".into()))?;
    let cm = make_cyclic(m)?;
    let action = action_from_generators(n_grp, &cm, &[(ElementId(1), alpha)])?;
    make_semidirect(n_grp, &cm, &action)
}

fn inversion_action(n_grp: &GroupTable, h_grp: &GroupTable, kernel: &[ElementId]) -> Vec<Vec<ElementId>> {
    let id: Vec<ElementId> = n_grp.elements().collect();
    let inv: Vec<ElementId> = n_grp.elements().map(|x| n_grp.inv(x)).collect();
    h_grp.elements().map(|h| if kernel.contains(&h) { id.clone() } else { inv.clone() }).collect()
}

fn product(a: GroupTable, b: GroupTable) -> Result<GroupTable> {
    make_direct_product(&a, &b)
}

fn nonabelian_groups() -> Result<Vec<GroupTable>> {
    let c = make_cyclic;
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push(make_dihedral(n)?);
    }
    for n in 2..=6 {
        out.push(make_dicyclic(n)?);
    }
    out.push(make_alternating(4)?);
    out.push(make_symmetric(4)?);

    // order 16
    out.push(metacyclic(8, 2, 3)?.named("SD16"));
    out.push(metacyclic(8, 2, 5)?.named("M16"));
    out.push(metacyclic(4, 4, 3)?.named("C4:C4"));
    out.push(product(c(2)?, make_dihedral(4)?)?);
    out.push(product(c(2)?, make_dicyclic(2)?)?);
    // C4 x C2 with a = id 2, b = id 1
    let c4c2 = product_of_cyclics(&[4, 2])?;
    let (a, b) = (ElementId(2), ElementId(1));
    let ab = c4c2.mul(a, b);
    let a2b = c4c2.mul(c4c2.mul(a, a), b);
    out.push(extend_by_cyclic(&c4c2, 2, &[a, b], &[ab, b])?.named("(C4xC2):C2"));
    out.push(extend_by_cyclic(&c4c2, 2, &[a, b], &[a, a2b])?.named("C4oD4"));

    // order 18
    out.push(product(c(3)?, make_dihedral(3)?)?);
    let c3c3 = product_of_cyclics(&[3, 3])?;
    let c2 = c(2)?;
    let action = inversion_action(&c3c3, &c2, &[ElementId(0)]);
    out.push(make_semidirect(&c3c3, &c2, &action)?.named("(C3xC3):C2"));

    // order 20, 21
    out.push(metacyclic(5, 4, 2)?.named("F20"));
    out.push(metacyclic(7, 3, 2)?.named("C7:C3"));

    // order 24
    out.push(metacyclic(3, 8, 2)?.named("C3:C8"));
    let q8 = make_dicyclic(2)?;
    let (i, j) = (ElementId(1), ElementId(4));
    out.push(extend_by_cyclic(&q8, 3, &[i, j], &[j, q8.mul(i, j)])?.named("SL(2,3)"));
    out.push(product(c(4)?, make_dihedral(3)?)?);
    out.push(product(c(2)?, make_dicyclic(3)?)?);
    let d4 = make_dihedral(4)?;
    let c3 = c(3)?;
    // kernel {e, r^2, s, r^2 s}
    let kernel = [ElementId(0), ElementId(2), ElementId(4), ElementId(6)];
    let action = inversion_action(&c3, &d4, &kernel);
    out.push(make_semidirect(&c3, &d4, &action)?.named("C3:D4"));
    out.push(product(c(3)?, make_dihedral(4)?)?);
    out.push(product(c(3)?, make_dicyclic(2)?)?);
    out.push(product(c(2)?, make_alternating(4)?)?);
    out.push(product(product_of_cyclics(&[2, 2])?, make_dihedral(3)?)?);
    Ok(out)
}

/// Every group of order `2..=max_order` up to isomorphism, `max_order <= 24`,
/// sorted by order and then by recipe.
pub fn small_groups(max_order: usize) -> Result<Vec<GroupTable>> {
    if max_order > ZOO_MAX_ORDER {
        return Err(Error::SizeLimit { order: max_order, cap: ZOO_MAX_ORDER });
    }
    let mut all = abelian_groups_up_to(max_order)?;
    all.extend(nonabelian_groups()?.into_iter().filter(|g| g.order() <= max_order));
    all.sort_by_cached_key(|g| (g.order(), g.recipe().to_string()));
    Ok(all)
}
