//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every line is printed whether or not it passes.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coset_radon::arith::{factorize, gcd, is_prime, partitions};
use coset_radon::flows::{constant_flow, flow_radon_system, group_flow, group_flow_correspondence, validate_flow};
use coset_radon::geodesic::{homomorphisms_cn, maximal_cyclic_subgroups, prime_order_subgroups};
use coset_radon::group::abelian::{abelian_groups_up_to, invariant_factors, is_cyclic, product_of_cyclics};
use coset_radon::group::zoo::small_groups;
use coset_radon::group::{make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_direct_product, make_symmetric};
use coset_radon::radon::{
    build_system, composite_consistency, kernel_witness_cyclic, kernel_witness_product, random_function,
    reconstruct_cpxcp_all, Variant,
};
use coset_radon::spectral::characters::rational_to_f64;
use coset_radon::spectral::{
    char_sum_check, char_sum_check_abelian, characters, check_projection, coefficient_kernel, faithful_characters,
    fourier_radon_check, plancherel, q8_irrep, q8_irreps,
};
use coset_radon::verify::shipped_reps;
use coset_radon::{Error, GroupTable, Rational};

/// Floating tolerance for the Fourier identities.
const FOURIER_TOL: f64 = 1e-9;
const SEED: u64 = 20_260_101;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Prime-variant injectivity; the trivial group has no geodesics at all.
fn injective(g: &GroupTable, variant: Variant) -> Result<bool, String> {
    match build_system(g, variant) {
        Ok(sys) => Ok(sys.rank() == g.order()),
        Err(Error::NoGeodesics) => Ok(false),
        Err(e) => Err(err(e)),
    }
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn abelian_classification() -> Outcome {
    let groups = abelian_groups_up_to(48).map_err(err)?;
    // number of abelian groups of order n is the product of p(e) over n = Π p^e
    let expected_count: usize =
        (2..=48).map(|n| factorize(n).iter().map(|&(_, e)| partitions(e).len()).product::<usize>()).sum();
    ensure(groups.len() == expected_count, || format!("{} groups enumerated, expected {expected_count}", groups.len()))?;
    for g in &groups {
        let noncyclic = invariant_factors(g).map_err(err)?.len() > 1;
        let inj = injective(g, Variant::Prime)?;
        ensure(inj == noncyclic, || format!("{}: injective {inj}, noncyclic {noncyclic}", g.recipe()))?;
    }
    Ok(format!("{} abelian groups of order <= 48", groups.len()))
}

fn product_theorem() -> Outcome {
    let mut pool: Vec<GroupTable> = (2..=12).map(make_cyclic).collect::<Result<_, _>>().map_err(err)?;
    pool.push(make_dihedral(3).map_err(err)?);
    pool.push(make_dihedral(4).map_err(err)?);
    pool.push(make_dicyclic(2).map_err(err)?);
    pool.push(product_of_cyclics(&[2, 2]).map_err(err)?);
    let non: Vec<bool> = pool.iter().map(|g| injective(g, Variant::Prime).map(|i| !i)).collect::<Result<_, _>>()?;
    let mut pairs = 0;
    for i in 0..pool.len() {
        for j in i..pool.len() {
            if pool[i].order() * pool[j].order() > 64 {
                continue;
            }
            let p = make_direct_product(&pool[i], &pool[j]).map_err(err)?;
            let predicted = non[i] && non[j] && gcd(pool[i].order(), pool[j].order()) == 1;
            let actual = !injective(&p, Variant::Prime)?;
            ensure(predicted == actual, || format!("{}: noninjective {actual}, predicted {predicted}", p.recipe()))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn catalog() -> Outcome {
    let mut mismatches = Vec::new();
    let mut total = 0;
    let mut check = |g: GroupTable, expected: bool| -> Result<(), String> {
        total += 1;
        let inj = injective(&g, Variant::Prime)?;
        if inj != expected {
            mismatches.push(format!("{} expected {}, computed {}", g.recipe(), verdict(expected), verdict(inj)));
        }
        Ok(())
    };
    for n in 1..=12 {
        check(make_dihedral(n).map_err(err)?, n >= 3)?;
    }
    for n in 2..=5 {
        check(make_symmetric(n).map_err(err)?, n >= 3)?;
    }
    for n in 2..=6 {
        check(make_alternating(n).map_err(err)?, n >= 4)?;
    }
    for n in 2..=8 {
        check(make_dicyclic(n).map_err(err)?, false)?;
    }
    ensure(mismatches.is_empty(), || mismatches.join("; "))?;
    Ok(format!("{total} groups"))
}

fn verdict(inj: bool) -> &'static str {
    if inj {
        "injective"
    } else {
        "noninjective"
    }
}

fn dimension_bound() -> Outcome {
    use std::cmp::Ordering;
    let mut seen = Vec::new();
    for n in (2..=15).chain([30]) {
        let g = make_dicyclic(n).map_err(err)?;
        let subgroups = prime_order_subgroups(&g);
        let lhs = subgroups.iter().fold(Rational::zero(), |acc, h| acc + Rational::new(1.into(), h.order().into()));
        let rhs = Rational::one() + Rational::new((subgroups.len() - 1).into(), g.order().into());
        let expected = match n {
            15 => Ordering::Equal,
            30 => Ordering::Greater,
            _ => Ordering::Less,
        };
        let got = lhs.cmp(&rhs);
        ensure(got == expected, || format!("Dic{n}: {lhs} vs {rhs} is {got:?}, expected {expected:?}"))?;
        seen.push(n);
    }
    Ok(format!("Dic2..Dic14 strict, Dic15 equality, Dic30 reversed ({} groups)", seen.len()))
}

fn maximal_variant() -> Outcome {
    for p in [2, 3, 5] {
        let g = product_of_cyclics(&[p, p]).map_err(err)?;
        ensure(injective(&g, Variant::Maximal)?, || format!("C{p}xC{p} not maximal-injective"))?;
    }
    for n in 2..=30 {
        let g = make_cyclic(n).map_err(err)?;
        let k = build_system(&g, Variant::Maximal).map_err(err)?.kernel();
        ensure(k.dim() == n - 1, || format!("C{n}: maximal kernel dim {}", k.dim()))?;
        let zero_avg = k.vectors.iter().all(|v| v.iter().fold(Rational::zero(), |a, x| a + x).is_zero());
        ensure(zero_avg, || format!("C{n}: kernel vector with nonzero sum"))?;
    }
    let c66 = product_of_cyclics(&[6, 6]).map_err(err)?;
    let sys = build_system(&c66, Variant::Maximal).map_err(err)?;
    let subgroups = maximal_cyclic_subgroups(&c66).len();
    ensure(subgroups == 12 && sys.nrows() == 72 && sys.rank() == 36, || {
        format!("C6xC6: {subgroups} subgroups, {} rows, rank {}", sys.nrows(), sys.rank())
    })?;
    let mut factor_cases = 0;
    for g2 in small_groups(24).map_err(err)? {
        for m in (2..).take_while(|m| m * g2.order() <= 48) {
            if gcd(m, g2.order()) != 1 {
                continue;
            }
            let g = make_direct_product(&make_cyclic(m).map_err(err)?, &g2).map_err(err)?;
            ensure(!injective(&g, Variant::Maximal)?, || format!("{} maximal-injective", g.recipe()))?;
            factor_cases += 1;
        }
    }
    Ok(format!("C6xC6 rank 36 of 72 rows; {factor_cases} coprime cyclic-factor products"))
}

fn reconstruction() -> Outcome {
    let mut rng = rng();
    for p in [2, 3, 5] {
        let g = product_of_cyclics(&[p, p]).map_err(err)?;
        let sys = build_system(&g, Variant::Prime).map_err(err)?;
        for i in 0..100 {
            let f = random_function(&mut rng, g.order(), 50);
            let back = reconstruct_cpxcp_all(&g, &sys, p, &sys.apply(&f).map_err(err)?).map_err(err)?;
            ensure(back == f, || format!("C{p}xC{p} sample {i} not recovered"))?;
        }
    }
    Ok("300 of 300 exact".into())
}

fn nonzero_annihilated(g: &GroupTable, w: &[Rational]) -> Result<bool, String> {
    let sys = build_system(g, Variant::Prime).map_err(err)?;
    Ok(w.iter().any(|x| !x.is_zero()) && sys.is_annihilated(w).map_err(err)?)
}

fn kernel_witnesses() -> Outcome {
    for n in 2..=36 {
        let g = make_cyclic(n).map_err(err)?;
        let w = kernel_witness_cyclic(&g).map_err(err)?;
        ensure(nonzero_annihilated(&g, &w)?, || format!("C{n} witness"))?;
    }
    let q8 = make_dicyclic(2).map_err(err)?;
    let q8_witness = build_system(&q8, Variant::Prime).map_err(err)?.kernel().vectors.remove(0);
    let cyclic = |n| make_cyclic(n).map_err(err);
    let pairs = [(cyclic(4)?, cyclic(3)?), (q8, cyclic(3)?), (cyclic(9)?, cyclic(4)?)];
    for (g1, g2) in pairs {
        let w1 = if is_cyclic(&g1) { kernel_witness_cyclic(&g1).map_err(err)? } else { q8_witness.clone() };
        let w2 = kernel_witness_cyclic(&g2).map_err(err)?;
        let w = kernel_witness_product(&w1, &w2, &g1, &g2).map_err(err)?;
        let p = make_direct_product(&g1, &g2).map_err(err)?;
        ensure(nonzero_annihilated(&p, &w)?, || format!("{} product witness", p.recipe()))?;
    }
    Ok("35 cyclic and 3 product witnesses".into())
}

fn spectral_crosscheck() -> Outcome {
    let groups = abelian_groups_up_to(64).map_err(err)?;
    for g in &groups {
        let faithful = faithful_characters(&characters(g).map_err(err)?).count;
        let kernel_dim = g.order() - build_system(g, Variant::Prime).map_err(err)?.rank();
        ensure(faithful == kernel_dim, || format!("{}: {faithful} faithful, kernel dim {kernel_dim}", g.recipe()))?;
    }
    let q8 = make_dicyclic(2).map_err(err)?;
    let k = coefficient_kernel(&q8, &q8_irrep(&q8).map_err(err)?).map_err(err)?;
    ensure(k.kernel_dim == 4 && k.complex_rank == 4 && k.annihilated && k.spans_kernel, || format!("Q8: {k:?}"))?;
    Ok(format!("{} abelian groups; Q8 kernel 4 spanned by coefficients", groups.len()))
}

fn fourier_identities() -> Outcome {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for factors in [&[6][..], &[2, 2], &[2, 4], &[3, 3]] {
        let g = product_of_cyclics(factors).map_err(err)?;
        let ct = characters(&g).map_err(err)?;
        for _ in 0..50 {
            let f = random_function(&mut rng, g.order(), 20);
            let fr = fourier_radon_check(&g, &f, FOURIER_TOL).map_err(err)?;
            let (lhs, rhs) = plancherel(&ct, &rational_to_f64(&f)).map_err(err)?;
            worst = worst.max(fr.max_error).max((lhs - rhs).abs());
        }
        ensure(char_sum_check_abelian(&ct), || format!("{} character sum", g.recipe()))?;
    }
    ensure(worst <= FOURIER_TOL, || format!("max error {worst:e} above {FOURIER_TOL:e}"))?;
    for g in abelian_groups_up_to(64).map_err(err)? {
        ensure(char_sum_check_abelian(&characters(&g).map_err(err)?), || format!("{} character sum", g.recipe()))?;
    }
    let q8 = make_dicyclic(2).map_err(err)?;
    char_sum_check(&q8, &q8_irreps(&q8).map_err(err)?).map_err(|x| format!("Q8 character sum fails at {x}"))?;
    let mut projections = 0;
    for (g, reps) in shipped_reps().map_err(err)? {
        for rep in &reps {
            for n in (2..=g.order()).filter(|n| g.order() % n == 0) {
                for hom in homomorphisms_cn(&g, n) {
                    let c = check_projection(&g, rep, &hom).map_err(err)?;
                    ensure(c.holds(), || format!("{} projection fails: {c:?}", g.recipe()))?;
                    projections += 1;
                }
            }
        }
    }
    Ok(format!("max error {worst:e}; {projections} exact projections"))
}

fn prime_consistency() -> Outcome {
    let mut rng = rng();
    let mut evaluations = 0;
    let groups = small_groups(24).map_err(err)?;
    for g in &groups {
        let fs: Vec<_> = (0..20).map(|_| random_function(&mut rng, g.order(), 9)).collect();
        for n in (4..=12).filter(|&n| !is_prime(n)) {
            let r = composite_consistency(g, n, &fs).map_err(err)?;
            ensure(r.passed(), || format!("{} n={n}: {} mismatches", g.recipe(), r.mismatches))?;
            evaluations += r.evaluations;
        }
    }
    Ok(format!("{} groups, {evaluations} evaluations", groups.len()))
}

fn flows() -> Outcome {
    for m in 2..=16 {
        let rank = flow_radon_system(&constant_flow(m), "constant").map_err(err)?.rank();
        ensure((rank == m) == (m >= 3), || format!("constant flow m={m}: rank {rank}"))?;
    }
    let groups = small_groups(24).map_err(err)?;
    for g in &groups {
        let c = group_flow_correspondence(g).map_err(err)?;
        ensure(c.holds(), || format!("{}: {c:?}", g.recipe()))?;
    }
    ensure(validate_flow(&[vec![0, 1], vec![0, 1]]) == Err(Error::FlowReflexivity { a: 0, b: 1 }), || {
        "reflexivity witness".into()
    })?;
    ensure(
        validate_flow(&[vec![0, 2, 0], vec![1, 1, 1], vec![2, 2, 2]]) == Err(Error::FlowReversibility { a: 0, b: 1 }),
        || "reversibility witness".into(),
    )?;
    Ok(format!("constant m=2..16; {} group flows; axiom witnesses", groups.len()))
}

fn oracle_agreement() -> Outcome {
    let mut systems = 0;
    for g in small_groups(24).map_err(err)? {
        for sys in [
            build_system(&g, Variant::Prime).map_err(err)?,
            build_system(&g, Variant::Maximal).map_err(err)?,
            flow_radon_system(&group_flow(&g), "flow").map_err(err)?,
        ] {
            let exact = sys.bareiss_rank();
            let modular = sys.modular_ranks();
            ensure(modular.iter().all(|&r| r == exact), || {
                format!("{} {}: exact {exact}, modular {modular:?}", g.recipe(), sys.variant)
            })?;
            systems += 1;
        }
    }
    Ok(format!("{systems} systems"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("abelian classification", abelian_classification),
        ("product theorem", product_theorem),
        ("catalog", catalog),
        ("dimension bound", dimension_bound),
        ("maximal variant", maximal_variant),
        ("reconstruction", reconstruction),
        ("kernel witnesses", kernel_witnesses),
        ("spectral cross-check", spectral_crosscheck),
        ("fourier identities", fourier_identities),
        ("prime consistency", prime_consistency),
        ("flows", flows),
        ("oracle agreement", oracle_agreement),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
