//! Worked examples. Derived values are recomputed here by naive methods that
//! share no code with the library paths under test; published values are
//! pinned literals.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coset_radon::flows::{constant_flow, flow_orbits, flow_radon_system, group_flow};
use coset_radon::geodesic::{
    composite_orbit, homomorphisms_cn, maximal_cyclic_subgroups, maximal_geodesics, prime_geodesics, Homomorphism,
};
use coset_radon::group::abelian::{invariant_factors, is_abelian, product_of_cyclics};
use coset_radon::group::perm::{from_cycles, symmetric_element};
use coset_radon::group::subgroup::quotient;
use coset_radon::group::{make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_symmetric};
use coset_radon::radon::{
    build_system, group_sum_from_radon, kernel_witness_cyclic, orbit_sum, random_function, reconstruct_cpxcp,
    reconstruct_cpxcp_all, Variant,
};
use coset_radon::spectral::{characters, faithful_characters, fixed_space_analysis, q8_irrep};
use coset_radon::{ElementId, GroupTable, Rational, SubgroupSet};

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn ids(v: &[u32]) -> Vec<ElementId> {
    v.iter().map(|&x| ElementId(x)).collect()
}

/// Powers of `x` by repeated multiplication.
fn naive_cyclic(g: &GroupTable, x: ElementId) -> BTreeSet<ElementId> {
    let mut out = BTreeSet::from([g.identity()]);
    let mut y = x;
    while out.insert(y) {
        y = g.mul(y, x);
    }
    out
}

/// Every left coset of every cyclic subgroup of prime order, as sets.
fn naive_prime_cosets(g: &GroupTable) -> BTreeSet<BTreeSet<ElementId>> {
    let is_prime = |n: usize| n > 1 && (2..n).all(|d| !n.is_multiple_of(d));
    let mut out = BTreeSet::new();
    for x in g.elements() {
        let h = naive_cyclic(g, x);
        if is_prime(h.len()) {
            for y in g.elements() {
                out.insert(h.iter().map(|&z| g.mul(y, z)).collect());
            }
        }
    }
    out
}

/// Rank by floating Gaussian elimination with partial pivoting.
fn float_rank(rows: &[Vec<u32>], cols: usize) -> usize {
    let mut m: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&x| f64::from(x)).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())) else { break };
        if m[p][c].abs() < 1e-9 {
            continue;
        }
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank {
                let factor = m[r][c] / m[rank][c];
                for k in c..cols {
                    m[r][k] -= factor * m[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| (1..=k).filter(|d| k % d == 0 && n.is_multiple_of(*d)).max() == Some(1)).count()
}

fn order_counts(g: &GroupTable, k: usize) -> usize {
    g.elt_orders().filter(|&o| o == k).count()
}

#[test]
fn element_orders() {
    let c6 = make_cyclic(6).unwrap();
    assert_eq!(c6.elt_orders().collect::<Vec<_>>(), vec![1, 6, 3, 2, 3, 6]);
    let c3c3 = product_of_cyclics(&[3, 3]).unwrap();
    assert_eq!((c3c3.order(), order_counts(&c3c3, 3)), (9, 8));
    let d3 = make_dihedral(3).unwrap();
    assert_eq!((d3.order(), order_counts(&d3, 2), order_counts(&d3, 3)), (6, 3, 2));
}

#[test]
fn dicyclic_and_alternating() {
    let q8 = make_dicyclic(2).unwrap();
    assert_eq!((q8.order(), order_counts(&q8, 2)), (8, 1));
    assert!(!is_abelian(&q8));
    let a4 = make_alternating(4).unwrap();
    assert_eq!(a4.order(), 12);
    // the three double transpositions and e close up into a Klein four-group
    let v4: BTreeSet<ElementId> =
        a4.elements().filter(|&x| a4.elt_order(x) <= 2).collect();
    assert_eq!(v4.len(), 4);
    assert!(v4.iter().all(|&x| v4.iter().all(|&y| v4.contains(&a4.mul(x, y)))));
}

#[test]
fn quotients() {
    let q8 = make_dicyclic(2).unwrap();
    let z = q8.elements().find(|&x| q8.elt_order(x) == 2).unwrap();
    let v = quotient(&q8, &SubgroupSet::cyclic(&q8, z)).unwrap();
    assert_eq!(v.order(), 4);
    assert!(v.elements().skip(1).all(|x| v.elt_order(x) == 2));
    let s3 = make_symmetric(3).unwrap();
    let t = symmetric_element(&from_cycles(3, &[&[1, 2]]));
    assert!(quotient(&s3, &SubgroupSet::cyclic(&s3, t)).is_err());
}

#[test]
fn invariant_factors_example() {
    assert_eq!(invariant_factors(&product_of_cyclics(&[2, 6]).unwrap()).unwrap(), vec![2, 6]);
    assert_eq!(invariant_factors(&product_of_cyclics(&[2, 3]).unwrap()).unwrap(), vec![6]);
}

#[test]
fn homomorphism_counts() {
    for p in [2usize, 3, 5] {
        let g = product_of_cyclics(&[p, p]).unwrap();
        assert_eq!(homomorphisms_cn(&g, p).len(), p * p - 1);
    }
    let c4 = make_cyclic(4).unwrap();
    let homs = homomorphisms_cn(&c4, 4);
    assert_eq!(homs.iter().map(|h| h.image_generator).collect::<Vec<_>>(), ids(&[1, 2, 3]));
    assert!(!homs[1].is_injective(&c4));
}

#[test]
fn prime_geodesics_match_naive_cosets() {
    for g in coset_radon::group::zoo::small_groups(24).unwrap() {
        let ours: BTreeSet<BTreeSet<ElementId>> =
            prime_geodesics(&g).unwrap().into_iter().map(|s| s.coset.into_iter().collect()).collect();
        assert_eq!(ours, naive_prime_cosets(&g), "{}", g.recipe());
        assert_eq!(prime_geodesics(&g).unwrap().len(), ours.len(), "{} has duplicate rows", g.recipe());
    }
    for p in [2usize, 3, 5] {
        let g = product_of_cyclics(&[p, p]).unwrap();
        assert_eq!(prime_geodesics(&g).unwrap().len(), p * (p + 1));
    }
    let q8 = make_dicyclic(2).unwrap();
    let geos = prime_geodesics(&q8).unwrap();
    assert_eq!(geos.len(), 4);
    assert!(geos.iter().all(|s| s.len() == 2));
}

#[test]
fn maximal_subgroups() {
    let c6 = make_cyclic(6).unwrap();
    assert_eq!(maximal_cyclic_subgroups(&c6).len(), 1);
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
    let bigger = symmetric_element(&from_cycles(5, &[&[1, 2], &[3, 4, 5]]));
    let small = SubgroupSet::cyclic(&s5, t);
    assert!(small.is_subset_of(&SubgroupSet::cyclic(&s5, bigger)));
    assert!(!maximal_cyclic_subgroups(&s5).contains(&small));
}

#[test]
fn composite_orbit_example() {
    let c6 = make_cyclic(6).unwrap();
    let hom = Homomorphism::new(&c6, 6, ElementId(2)).unwrap();
    assert_eq!(composite_orbit(&c6, &hom, ElementId(1)), ids(&[1, 1, 3, 3, 5, 5]));
}

#[test]
fn matrix_shapes() {
    let g = product_of_cyclics(&[3, 3]).unwrap();
    let sys = build_system(&g, Variant::Prime).unwrap();
    assert_eq!((sys.nrows(), sys.ncols()), (12, 9));
    assert!(sys.matrix.iter().all(|r| r.iter().all(|&x| x <= 1) && r.iter().sum::<u32>() == 3));
    let sys = build_system(&product_of_cyclics(&[6, 6]).unwrap(), Variant::Maximal).unwrap();
    assert_eq!((sys.nrows(), sys.ncols()), (72, 36));
}

#[test]
fn ranks_match_float_elimination() {
    for g in coset_radon::group::zoo::small_groups(24).unwrap() {
        for variant in [Variant::Prime, Variant::Maximal] {
            let sys = build_system(&g, variant).unwrap();
            assert_eq!(sys.rank(), float_rank(&sys.matrix, g.order()), "{} {variant}", g.recipe());
        }
    }
}

#[test]
fn kernel_dimensions() {
    for p in [2usize, 3, 5, 7] {
        let sys = build_system(&make_cyclic(p).unwrap(), Variant::Prime).unwrap();
        assert_eq!((sys.rank(), sys.kernel().dim()), (1, p - 1));
        let sys = build_system(&product_of_cyclics(&[p, p]).unwrap(), Variant::Prime).unwrap();
        assert_eq!((sys.rank(), sys.kernel().dim()), (p * p, 0));
    }
    for n in 2..=30 {
        let sys = build_system(&make_cyclic(n).unwrap(), Variant::Prime).unwrap();
        assert_eq!(sys.kernel().dim(), totient(n), "C{n}");
    }
    // one subgroup of order 3 with 3 cosets
    let c9 = build_system(&make_cyclic(9).unwrap(), Variant::Prime).unwrap();
    assert_eq!((c9.nrows(), c9.rank(), c9.kernel().dim()), (3, 3, 6));
    let q8 = build_system(&make_dicyclic(2).unwrap(), Variant::Prime).unwrap();
    assert_eq!(q8.kernel().dim(), 4);
}

#[test]
fn catalog_examples() {
    let inj = |g: &GroupTable| build_system(g, Variant::Prime).unwrap().rank() == g.order();
    assert!(inj(&make_dihedral(4).unwrap()));
    assert!(!inj(&make_dicyclic(3).unwrap()));
    assert!(!inj(&make_cyclic(12).unwrap()));
    assert!(inj(&make_symmetric(4).unwrap()));
}

#[test]
fn group_sum_and_reconstruction() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d3 = make_dihedral(3).unwrap();
    let sys = build_system(&d3, Variant::Prime).unwrap();
    let f = random_function(&mut rng, 6, 30);
    let direct = f.iter().fold(Rational::zero(), |a, x| a + x);
    assert_eq!(group_sum_from_radon(&sys, &sys.apply(&f).unwrap()).unwrap(), direct);

    let c2c2 = product_of_cyclics(&[2, 2]).unwrap();
    let sys = build_system(&c2c2, Variant::Prime).unwrap();
    let mut delta = vec![q(0); 4];
    delta[0] = q(1);
    assert_eq!(reconstruct_cpxcp(&c2c2, &sys, 2, &sys.apply(&delta).unwrap(), ElementId(0)).unwrap(), Rational::one());

    let c3c3 = product_of_cyclics(&[3, 3]).unwrap();
    let sys = build_system(&c3c3, Variant::Prime).unwrap();
    let f = random_function(&mut rng, 9, 30);
    assert_eq!(reconstruct_cpxcp_all(&c3c3, &sys, 3, &sys.apply(&f).unwrap()).unwrap(), f);
}

#[test]
fn cyclic_witnesses() {
    let c4 = make_cyclic(4).unwrap();
    assert_eq!(kernel_witness_cyclic(&c4).unwrap(), vec![q(1), q(0), q(-1), q(0)]);
    let c6 = make_cyclic(6).unwrap();
    let w = kernel_witness_cyclic(&c6).unwrap();
    let sys = build_system(&c6, Variant::Prime).unwrap();
    assert!(w.iter().any(|x| !x.is_zero()));
    // every one of the 5 coset sums vanishes, computed directly
    for geo in prime_geodesics(&c6).unwrap() {
        assert!(geo.coset.iter().fold(Rational::zero(), |a, x| a + &w[x.index()]).is_zero());
    }
    assert_eq!(sys.apply(&w).unwrap(), vec![q(0); 5]);
}

#[test]
fn composite_trivial_case() {
    // generator 2 in C4 has image {0,2}: each coset point is hit twice
    let c4 = make_cyclic(4).unwrap();
    let hom = Homomorphism::new(&c4, 4, ElementId(2)).unwrap();
    let f = vec![q(3), q(-1), q(5), q(2)];
    for x in 0..4u32 {
        let coset_sum = &f[x as usize] + &f[(x as usize + 2) % 4];
        assert_eq!(orbit_sum(&c4, &hom, ElementId(x), &f), q(2) * coset_sum);
    }
}

#[test]
fn characters_and_faithfulness() {
    let c2c2 = product_of_cyclics(&[2, 2]).unwrap();
    let ct = characters(&c2c2).unwrap();
    assert_eq!((ct.len(), faithful_characters(&ct).count), (4, 0));
    for n in 2..=24 {
        let ct = characters(&make_cyclic(n).unwrap()).unwrap();
        assert_eq!(faithful_characters(&ct).count, totient(n), "C{n}");
    }
    let c2c4 = product_of_cyclics(&[2, 4]).unwrap();
    assert_eq!(faithful_characters(&characters(&c2c4).unwrap()).count, 0);
}

#[test]
fn q8_fixed_points() {
    let q8 = make_dicyclic(2).unwrap();
    let a = fixed_space_analysis(&q8, &q8_irrep(&q8).unwrap()).unwrap();
    assert_eq!((a.f_span_dim, a.k_dim), (0, 2));
}

#[test]
fn flow_examples() {
    let c3 = make_cyclic(3).unwrap();
    let orbit = flow_orbits(&group_flow(&c3)).into_iter().find(|o| o.states[0] == (0, 1)).unwrap();
    assert_eq!(orbit.support(), vec![0, 1, 2]);
    let m3 = constant_flow(3);
    for o in flow_orbits(&m3) {
        assert_eq!(o.is_stationary(), o.states[0].0 == o.states[0].1);
        if !o.is_stationary() {
            assert_eq!(o.period, 2);
        }
    }
    let sys = flow_radon_system(&m3, "m3").unwrap();
    assert!(sys.matrix.iter().all(|r| r.iter().sum::<u32>() == 2));
    assert_eq!(sys.rank(), 3);
    let sys = flow_radon_system(&constant_flow(2), "m2").unwrap();
    assert_eq!(sys.matrix, vec![vec![1, 1]]);
    assert_eq!(sys.rank(), 1);
}

#[test]
fn group_flow_orbits_are_cosets_of_generated_subgroup() {
    for g in coset_radon::group::zoo::small_groups(12).unwrap() {
        let flow = group_flow(&g);
        for o in flow_orbits(&flow) {
            let (a, b) = o.states[0];
            let (a, b) = (ElementId::from(a), ElementId::from(b));
            let h = naive_cyclic(&g, g.mul(g.inv(a), b));
            let coset: Vec<usize> = h.iter().map(|&z| g.mul(a, z).index()).collect::<BTreeSet<_>>().into_iter().collect();
            assert_eq!(o.support(), coset, "{}", g.recipe());
        }
    }
}
