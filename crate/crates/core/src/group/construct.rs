use super::{ElementId, GroupTable, Recipe};
use crate::error::{Error, Result};

/// The cyclic group of order `n`, written additively: `a*b = (a + b) mod n`.
pub fn make_cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidOrder { what: "cyclic group", n });
    }
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        mul.extend((0..n).map(|b| ((a + b) % n) as u32));
    }
    GroupTable::validated(n, mul, Recipe::Cyclic(n))
}

/// Direct product with element id `i1 * |g2| + i2`.
pub fn make_direct_product(g1: &GroupTable, g2: &GroupTable) -> Result<GroupTable> {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    let mut mul = vec![0u32; n * n];
    for a1 in g1.elements() {
        for a2 in g2.elements() {
            let a = a1.index() * n2 + a2.index();
            for b1 in g1.elements() {
                let c1 = g1.mul(a1, b1).index() * n2;
                for b2 in g2.elements() {
                    let b = b1.index() * n2 + b2.index();
                    mul[a * n + b] = (c1 + g2.mul(a2, b2).index()) as u32;
                }
            }
        }
    }
    GroupTable::validated(
        n,
        mul,
        Recipe::Product(Box::new(g1.recipe().clone()), Box::new(g2.recipe().clone())),
    )
}

/// The dihedral group of order `2n`. Element `r^k s^m` has id `m*n + k`.
pub fn make_dihedral(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidOrder { what: "dihedral group", n });
    }
    let order = 2 * n;
    let mut mul = vec![0u32; order * order];
    for i in 0..2 {
        for a in 0..n {
            for j in 0..2 {
                for b in 0..n {
                    // r^a s^i r^b s^j = r^(a ± b) s^(i+j)
                    let k = if i == 0 { (a + b) % n } else { (a + n - b) % n };
                    let m = (i + j) % 2;
                    mul[(i * n + a) * order + j * n + b] = (m * n + k) as u32;
                }
            }
        }
    }
    GroupTable::validated(order, mul, Recipe::Dihedral(n))
}

/// The dicyclic group of order `4n`, presented by `a^(2n) = e`, `b^2 = a^n`,
/// `ab = ba^-1`. Element `a^k b^m` has id `m*2n + k`, so `a` is id 1 and `b`
/// is id `2n`.
pub fn make_dicyclic(n: usize) -> Result<GroupTable> {
    if n < 2 {
        return Err(Error::InvalidOrder { what: "dicyclic group", n });
    }
    let two_n = 2 * n;
    let order = 4 * n;
    let mut mul = vec![0u32; order * order];
    for i in 0..2 {
        for k in 0..two_n {
            for j in 0..2 {
                for l in 0..two_n {
                    // a^k b^i a^l b^j = a^(k ± l) b^(i+j), and b^2 = a^n
                    let mut e = if i == 0 { k + l } else { k + two_n - l };
                    let mut m = i + j;
                    if m == 2 {
                        e += n;
                        m = 0;
                    }
                    mul[(i * two_n + k) * order + j * two_n + l] = (m * two_n + e % two_n) as u32;
                }
            }
        }
    }
    GroupTable::validated(order, mul, Recipe::Dicyclic(n))
}

/// `N ⋊ H` where `action[h]` is the permutation of `N`'s ids given by the
/// automorphism `phi_h`. Element `(n, h)` has id `n * |H| + h`, matching
/// [`make_direct_product`] when the action is trivial.
pub fn make_semidirect(
    n_grp: &GroupTable,
    h_grp: &GroupTable,
    action: &[Vec<ElementId>],
) -> Result<GroupTable> {
    let (nn, nh) = (n_grp.order(), h_grp.order());
    if action.len() != nh {
        return Err(Error::LengthMismatch { expected: nh, got: action.len() });
    }
    for h in h_grp.elements() {
        let phi = &action[h.index()];
        let mut seen = vec![false; nn];
        if phi.len() != nn {
            return Err(Error::ActionNotPermutation { h });
        }
        for &x in phi {
            if x.index() >= nn || std::mem::replace(&mut seen[x.index()], true) {
                return Err(Error::ActionNotPermutation { h });
            }
        }
        for a in n_grp.elements() {
            for b in n_grp.elements() {
                let lhs = phi[n_grp.mul(a, b).index()];
                let rhs = n_grp.mul(phi[a.index()], phi[b.index()]);
                if lhs != rhs {
                    return Err(Error::ActionNotAutomorphism { h, a, b });
                }
            }
        }
    }
    for h1 in h_grp.elements() {
        for h2 in h_grp.elements() {
            let composed = &action[h_grp.mul(h1, h2).index()];
            let ok = n_grp
                .elements()
                .all(|x| composed[x.index()] == action[h1.index()][action[h2.index()][x.index()].index()]);
            if !ok {
                return Err(Error::ActionNotHomomorphism { h1, h2 });
            }
        }
    }
    let order = nn * nh;
    let mut mul = vec![0u32; order * order];
    for n1 in n_grp.elements() {
        for h1 in h_grp.elements() {
            let a = n1.index() * nh + h1.index();
            let phi = &action[h1.index()];
            for n2 in n_grp.elements() {
                let prod_n = n_grp.mul(n1, phi[n2.index()]).index() * nh;
                for h2 in h_grp.elements() {
                    let b = n2.index() * nh + h2.index();
                    mul[a * order + b] = (prod_n + h_grp.mul(h1, h2).index()) as u32;
                }
            }
        }
    }
    GroupTable::validated(
        order,
        mul,
        Recipe::Semidirect(Box::new(n_grp.recipe().clone()), Box::new(h_grp.recipe().clone())),
    )
}

/// Builds the action table of a homomorphism `H -> Aut(N)` from the images of
/// a generating set of `H`, by closing over words in the generators.
pub fn action_from_generators(
    n_grp: &GroupTable,
    h_grp: &GroupTable,
    gens: &[(ElementId, Vec<ElementId>)],
) -> Result<Vec<Vec<ElementId>>> {
    let identity: Vec<ElementId> = n_grp.elements().collect();
    let mut action: Vec<Option<Vec<ElementId>>> = vec![None; h_grp.order()];
    action[0] = Some(identity);
    let mut queue = vec![ElementId::IDENTITY];
    while let Some(h) = queue.pop() {
        for (g, img) in gens {
            let hg = h_grp.mul(h, *g);
            let cur = action[h.index()].as_ref().unwrap();
            let composed: Vec<ElementId> = n_grp.elements().map(|x| cur[img[x.index()].index()]).collect();
            match &action[hg.index()] {
                Some(existing) if *existing != composed => {
                    return Err(Error::ActionNotHomomorphism { h1: h, h2: *g });
                }
                Some(_) => {}
                None => {
                    action[hg.index()] = Some(composed);
                    queue.push(hg);
                }
            }
        }
    }
    action
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| Error::NotSubgroup(format!("generators miss element {i}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_abelian, is_cyclic};

    fn count_order(g: &GroupTable, k: usize) -> usize {
        g.elt_orders().filter(|&o| o == k).count()
    }

    #[test]
    fn cyclic_basics() {
        assert!(matches!(make_cyclic(0), Err(Error::InvalidOrder { .. })));
        let c1 = make_cyclic(1).unwrap();
        assert_eq!(c1.mul(ElementId(0), ElementId(0)), ElementId(0));
        let c6 = make_cyclic(6).unwrap();
        assert_eq!(c6.elt_orders().collect::<Vec<_>>(), vec![1, 6, 3, 2, 3, 6]);
        let c4 = make_cyclic(4).unwrap();
        let inv: Vec<u32> = c4.elements().map(|x| c4.inv(x).0).collect();
        assert_eq!(inv, vec![0, 3, 2, 1]);
    }

    #[test]
    fn products() {
        let c2 = make_cyclic(2).unwrap();
        let c3 = make_cyclic(3).unwrap();
        let v = make_direct_product(&c2, &c2).unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(count_order(&v, 2), 3);
        let c33 = make_direct_product(&c3, &c3).unwrap();
        assert_eq!(count_order(&c33, 3), 8);
        let c23 = make_direct_product(&c2, &c3).unwrap();
        assert_eq!(c23.elt_order(ElementId(3 + 1)), 6);
        assert!(is_cyclic(&c23));
        assert_eq!(c23.recipe().to_string(), "C2xC3");
    }

    #[test]
    fn dihedral_three() {
        let d3 = make_dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert_eq!(count_order(&d3, 2), 3);
        assert_eq!(count_order(&d3, 3), 2);
        assert!(!is_abelian(&d3));
    }

    #[test]
    fn dicyclic_presentation() {
        for n in 2..=8 {
            let g = make_dicyclic(n).unwrap();
            assert_eq!(g.order(), 4 * n);
            let a = ElementId(1);
            let b = ElementId::from(2 * n);
            assert_eq!(g.elt_order(a), 2 * n);
            assert_eq!(g.mul(b, b), g.pow(a, n));
            assert_eq!(g.mul(a, b), g.mul(b, g.inv(a)));
            // everything outside <a> has order four
            for x in g.elements().skip(2 * n) {
                assert_eq!(g.elt_order(x), 4);
            }
        }
        let q8 = make_dicyclic(2).unwrap();
        assert_eq!(count_order(&q8, 2), 1);
        assert!(matches!(make_dicyclic(1), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn semidirect_trivial_action_is_direct_product() {
        let c3 = make_cyclic(3).unwrap();
        let c4 = make_cyclic(4).unwrap();
        let id: Vec<ElementId> = c3.elements().collect();
        let sd = make_semidirect(&c3, &c4, &vec![id; 4]).unwrap();
        let dp = make_direct_product(&c3, &c4).unwrap();
        assert_eq!(sd.rows(), dp.rows());
    }

    #[test]
    fn semidirect_rejects_bad_actions() {
        let c3 = make_cyclic(3).unwrap();
        let c2 = make_cyclic(2).unwrap();
        let id: Vec<ElementId> = c3.elements().collect();
        // x -> x + 1 is a permutation but not an automorphism
        let shift: Vec<ElementId> = (0..3).map(|x| ElementId((x + 1) % 3)).collect();
        assert!(matches!(
            make_semidirect(&c3, &c2, &[id.clone(), shift]),
            Err(Error::ActionNotAutomorphism { .. })
        ));
        // inversion on C3 assigned to the identity of C2 breaks phi_e = id
        let neg: Vec<ElementId> = (0..3).map(|x| ElementId((3 - x) % 3)).collect();
        assert!(matches!(
            make_semidirect(&c3, &c2, &[neg.clone(), neg.clone()]),
            Err(Error::ActionNotHomomorphism { .. })
        ));
        let c4 = make_cyclic(4).unwrap();
        // generator of C4 acting by inversion is fine; acting by inversion on
        // the element of order 2 as well breaks the homomorphism property
        let bad = vec![id.clone(), neg.clone(), neg.clone(), neg];
        assert!(matches!(
            make_semidirect(&c3, &c4, &bad),
            Err(Error::ActionNotHomomorphism { .. })
        ));
    }

    #[test]
    fn semidirect_coordinate_permutation_has_order_p() {
        // N = C_q^p with C_p permuting coordinates; (n, h) with a_1...a_p = e
        // and h != e has order p.
        let (p, q) = (3usize, 2usize);
        let cq = make_cyclic(q).unwrap();
        let mut n_grp = cq.clone();
        for _ in 1..p {
            n_grp = make_direct_product(&n_grp, &cq).unwrap();
        }
        let h_grp = make_cyclic(p).unwrap();
        let digits = |x: usize| -> Vec<usize> {
            (0..p).rev().map(|i| (x / q.pow(i as u32)) % q).collect()
        };
        let undigits = |d: &[usize]| d.iter().fold(0, |acc, &v| acc * q + v);
        let action: Vec<Vec<ElementId>> = (0..p)
            .map(|s| {
                (0..n_grp.order())
                    .map(|x| {
                        let d = digits(x);
                        let rotated: Vec<usize> = (0..p).map(|i| d[(i + p - s) % p]).collect();
                        ElementId::from(undigits(&rotated))
                    })
                    .collect()
            })
            .collect();
        let g = make_semidirect(&n_grp, &h_grp, &action).unwrap();
        for x in 0..n_grp.order() {
            let d = digits(x);
            if d.iter().sum::<usize>() % q != 0 {
                continue;
            }
            for h in 1..p {
                assert_eq!(g.elt_order(ElementId::from(x * p + h)), p);
            }
        }
    }
}
