//! Regression suites, one per theorem. Each suite returns a [`SuiteReport`]
//! whose cases are sorted by group label; a suite passes when every case does.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{gcd, is_prime};
use crate::error::{Error, Result};
use crate::flows::{
    constant_flow, flow_radon_system, group_flow, group_flow_correspondence, orbit_formula_holds, reversal_closed,
    validate_flow,
};
use crate::geodesic::{homomorphisms_cn, maximal_cyclic_subgroups};
use crate::group::abelian::{abelian_groups_up_to, product_of_cyclics};
use crate::group::subgroup::two_generated_subgroups;
use crate::group::zoo::{small_groups, ZOO_MAX_ORDER};
use crate::group::{
    is_cyclic, make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_direct_product, make_symmetric,
    quotient, subgroup_table, GroupTable,
};
use crate::radon::{
    build_system, composite_consistency, dimension_bound_check, kernel_witness_cyclic, kernel_witness_product,
    random_function, reconstruct_cpxcp_all, RadonSystem, Variant,
};
use crate::spectral::{
    char_sum_check, char_sum_check_abelian, characters, check_projection, coefficient_kernel, dft,
    faithful_characters, fixed_space_analysis, fourier_radon_check, plancherel, q8_irrep, q8_irreps,
    MatrixRep, DEFAULT_TOLERANCE,
};
use crate::spectral::characters::rational_to_f64;
use crate::Rational;

pub const SUITES: [&str; 13] = [
    "abelian",
    "products",
    "catalog",
    "bound",
    "lemma-prime",
    "subgroup-monotone",
    "spectral-abelian",
    "maximal",
    "flows",
    "reconstruct",
    "witnesses",
    "fourier",
    "oracle",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub group: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Case {
    pub fn new(group: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        Case { group: group.into(), pass: expected == computed, expected, computed }
    }

    /// A case whose pass condition is not string equality.
    pub fn check(group: impl Into<String>, expected: impl ToString, computed: impl ToString, pass: bool) -> Self {
        Case { group: group.into(), expected: expected.to_string(), computed: computed.to_string(), pass }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: &str, mut cases: Vec<Case>) -> Self {
        cases.sort_by(|a, b| a.group.cmp(&b.group));
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary { total: cases.len(), passed, failed: cases.len() - passed };
        SuiteReport { suite: suite.to_string(), cases, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Overrides the suite's default size bound.
    pub max_order: Option<usize>,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_order: None, seed: 0x5eed }
    }
}

impl SuiteOptions {
    fn bound(&self, default: usize) -> usize {
        self.max_order.unwrap_or(default)
    }

    /// The generator every random sample is drawn from.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let cases = match name {
        "abelian" => abelian(opts.bound(48))?,
        "products" => products(opts.bound(64))?,
        "catalog" => catalog()?,
        "bound" => bound()?,
        "lemma-prime" => lemma_prime(opts.bound(ZOO_MAX_ORDER), 20, opts)?,
        "subgroup-monotone" => subgroup_monotone(opts.bound(ZOO_MAX_ORDER))?,
        "spectral-abelian" => spectral_abelian(opts.bound(64))?,
        "maximal" => maximal(opts.bound(48))?,
        "flows" => flows(opts.bound(ZOO_MAX_ORDER))?,
        "reconstruct" => reconstruct(100, opts)?,
        "witnesses" => witnesses(opts.bound(36))?,
        "fourier" => fourier(50, opts)?,
        "oracle" => oracle(opts.bound(ZOO_MAX_ORDER))?,
        _ => return Err(Error::UnknownSuite(name.to_string())),
    };
    Ok(SuiteReport::new(name, cases))
}

fn label(injective: bool) -> &'static str {
    if injective {
        "injective"
    } else {
        "noninjective"
    }
}

fn zoo(max: usize) -> Result<Vec<GroupTable>> {
    small_groups(max.min(ZOO_MAX_ORDER))
}

/// Prime-variant injectivity. The trivial group has no geodesics, so its
/// transform is the zero map on a one-dimensional space: noninjective.
pub fn prime_injective(g: &GroupTable) -> Result<bool> {
    if g.is_trivial() {
        return Ok(false);
    }
    let sys = build_system(g, Variant::Prime)?;
    Ok(sys.rank() == g.order())
}

fn variant_injective(g: &GroupTable, variant: Variant) -> Result<bool> {
    if g.is_trivial() {
        return Ok(false);
    }
    Ok(build_system(g, variant)?.rank() == g.order())
}

/// Every abelian group of order `<= max`: injective iff not cyclic.
pub fn abelian(max: usize) -> Result<Vec<Case>> {
    abelian_groups_up_to(max)?
        .iter()
        .map(|g| Ok(Case::new(g.recipe().to_string(), label(!is_cyclic(g)), label(prime_injective(g)?))))
        .collect()
}

/// The groups the product suite draws from.
pub fn product_pool() -> Result<Vec<GroupTable>> {
    let mut pool: Vec<GroupTable> = (2..=12).map(make_cyclic).collect::<Result<_>>()?;
    pool.push(make_dihedral(3)?);
    pool.push(make_dihedral(4)?);
    pool.push(make_dicyclic(2)?);
    pool.push(product_of_cyclics(&[2, 2])?);
    Ok(pool)
}

/// `G₁ × G₂` is noninjective iff both factors are and their orders are coprime.
pub fn products(max: usize) -> Result<Vec<Case>> {
    let pool = product_pool()?;
    let inj: Vec<bool> = pool.iter().map(prime_injective).collect::<Result<_>>()?;
    let mut cases = Vec::new();
    for i in 0..pool.len() {
        for j in i..pool.len() {
            let (g1, g2) = (&pool[i], &pool[j]);
            if g1.order() * g2.order() > max {
                continue;
            }
            let p = make_direct_product(g1, g2)?;
            let predicted_non = !inj[i] && !inj[j] && gcd(g1.order(), g2.order()) == 1;
            cases.push(Case::new(p.recipe().to_string(), label(!predicted_non), label(prime_injective(&p)?)));
        }
    }
    Ok(cases)
}

/// Dihedral `D_1..D_12` and symmetric `S_2..S_5` are injective iff `n >= 3`,
/// alternating `A_2..A_6` iff `n >= 4`, dicyclic `Dic_2..Dic_8` never.
pub fn catalog() -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    let mut add = |g: GroupTable, expected: bool| -> Result<()> {
        cases.push(Case::new(g.recipe().to_string(), label(expected), label(prime_injective(&g)?)));
        Ok(())
    };
    for n in 1..=12 {
        add(make_dihedral(n)?, n >= 3)?;
    }
    for n in 2..=5 {
        add(make_symmetric(n)?, n >= 3)?;
    }
    for n in 2..=6 {
        add(make_alternating(n)?, n >= 4)?;
    }
    for n in 2..=8 {
        add(make_dicyclic(n)?, false)?;
    }
    Ok(cases)
}

/// The cyclic-subgroup bound on dicyclic groups: holds for `Dic_2..Dic_14`,
/// equality at `Dic_15`, reversed at `Dic_30`. Where it holds, the rank
/// must confirm noninjectivity; `Dic_15` and `Dic_30` are noninjective anyway.
pub fn bound() -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in (2..=15).chain([30]) {
        let g = make_dicyclic(n)?;
        let b = dimension_bound_check(&g)?;
        let relation = match b.lhs.cmp(&b.rhs) {
            std::cmp::Ordering::Less => "lhs < rhs",
            std::cmp::Ordering::Equal => "lhs = rhs",
            std::cmp::Ordering::Greater => "lhs > rhs",
        };
        let expected = match n {
            15 => "lhs = rhs",
            30 => "lhs > rhs",
            _ => "lhs < rhs",
        };
        let name = g.recipe().to_string();
        cases.push(Case::check(
            format!("{name} bound"),
            expected,
            format!("{relation} ({} vs {})", b.lhs, b.rhs),
            relation == expected && b.bound_holds == (n <= 14),
        ));
        cases.push(Case::new(format!("{name} rank"), label(false), label(prime_injective(&g)?)));
    }
    Ok(cases)
}

/// Composite-length transforms agree with their prime-length predictions for
/// every composite `n <= 12` on every group of order `<= max`.
pub fn lemma_prime(max: usize, functions: usize, opts: &SuiteOptions) -> Result<Vec<Case>> {
    let mut rng = opts.rng();
    let mut cases = Vec::new();
    for g in zoo(max)? {
        let fs: Vec<_> = (0..functions).map(|_| random_function(&mut rng, g.order(), 9)).collect();
        let mut evaluations = 0;
        let mut mismatches = 0;
        for n in (4..=12).filter(|&n| !is_prime(n)) {
            let r = composite_consistency(&g, n, &fs)?;
            evaluations += r.evaluations;
            mismatches += r.mismatches;
        }
        cases.push(Case::check(
            g.recipe().to_string(),
            "0 mismatches",
            format!("{mismatches} mismatches in {evaluations} evaluations"),
            mismatches == 0,
        ));
    }
    Ok(cases)
}

/// Injectivity on a subgroup implies injectivity on the group, checked over
/// every two-generated subgroup of every group of order `<= max`.
pub fn subgroup_monotone(max: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for g in zoo(max)? {
        let g_inj = prime_injective(&g)?;
        let mut violations = 0;
        let mut checked = 0;
        for h in two_generated_subgroups(&g).iter().filter(|h| h.order() > 1 && h.order() < g.order()) {
            let sub = subgroup_table(&g, h)?;
            if prime_injective(&sub)? {
                checked += 1;
                violations += usize::from(!g_inj);
            }
        }
        cases.push(Case::check(
            g.recipe().to_string(),
            "no injective subgroup of a noninjective group",
            format!("{checked} injective subgroups, group {}", label(g_inj)),
            violations == 0,
        ));
    }
    Ok(cases)
}

/// Kernel dimension equals the number of faithful characters on every abelian
/// group of order `<= max`; on `Q8` the kernel has dimension 4 and is spanned
/// by the matrix coefficients of the two-dimensional irreducible.
pub fn spectral_abelian(max: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for g in abelian_groups_up_to(max)? {
        let ct = characters(&g)?;
        let faithful = faithful_characters(&ct).count;
        let kernel_dim = g.order() - build_system(&g, Variant::Prime)?.rank();
        cases.push(Case::new(g.recipe().to_string(), format!("kernel_dim {faithful}"), format!("kernel_dim {kernel_dim}")));
        cases.push(Case::new(format!("{} char-sum", g.recipe()), true, char_sum_check_abelian(&ct)));
    }
    let q8 = make_dicyclic(2)?;
    let k = coefficient_kernel(&q8, &q8_irrep(&q8)?)?;
    cases.push(Case::new("Dic2", "kernel_dim 4", format!("kernel_dim {}", k.kernel_dim)));
    cases.push(Case::check(
        "Dic2 coefficients",
        "4 annihilated functions spanning the kernel",
        format!(
            "{} functions, annihilated {}, complex rank {}, rational rank {}",
            k.functions, k.annihilated, k.complex_rank, k.rational_rank
        ),
        k.annihilated && k.complex_rank == 4 && k.spans_kernel,
    ));
    cases.push(Case::new("Dic2 char-sum", true, char_sum_check(&q8, &q8_irreps(&q8)?).is_ok()));
    Ok(cases)
}

/// Maximal-variant propositions.
pub fn maximal(max: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for p in [2, 3, 5] {
        let g = product_of_cyclics(&[p, p])?;
        cases.push(Case::new(format!("{} maximal", g.recipe()), label(true), label(variant_injective(&g, Variant::Maximal)?)));
    }
    // cyclic: the kernel is the zero-average functions
    for n in 2..=30 {
        let g = make_cyclic(n)?;
        let sys = build_system(&g, Variant::Maximal)?;
        let k = sys.kernel();
        let zero_avg = k.vectors.iter().all(|v| v.iter().fold(Rational::zero(), |a, x| a + x).is_zero());
        cases.push(Case::check(
            format!("{} maximal", g.recipe()),
            format!("noninjective, zero-average kernel of dim {}", n - 1),
            format!("kernel dim {}, zero-average {zero_avg}", k.dim()),
            k.dim() == n - 1 && zero_avg,
        ));
    }
    let c66 = product_of_cyclics(&[6, 6])?;
    let sys = build_system(&c66, Variant::Maximal)?;
    cases.push(Case::new(
        "C6xC6 maximal",
        "12 subgroups, 72 rows, rank 36",
        format!("{} subgroups, {} rows, rank {}", maximal_cyclic_subgroups(&c66).len(), sys.nrows(), sys.rank()),
    ));
    // C_m × G₂ with coprime orders: noninjective, with an explicit witness
    for g2 in zoo(max / 2)? {
        for m in (2..).take_while(|m| m * g2.order() <= max) {
            if gcd(m, g2.order()) != 1 {
                continue;
            }
            let g = make_direct_product(&make_cyclic(m)?, &g2)?;
            let sys = build_system(&g, Variant::Maximal)?;
            let n2 = g2.order();
            // δ₀ − δ₁ on C_m, pulled back along the first projection
            let witness: Vec<Rational> = (0..g.order())
                .map(|x| match x / n2 {
                    0 => Rational::from_integer(1.into()),
                    1 => Rational::from_integer((-1).into()),
                    _ => Rational::zero(),
                })
                .collect();
            let annihilated = sys.is_annihilated(&witness)?;
            let inj = sys.rank() == g.order();
            cases.push(Case::check(
                format!("{} maximal", g.recipe()),
                "noninjective, witness annihilated",
                format!("{}, witness annihilated {annihilated}", label(inj)),
                !inj && annihilated,
            ));
        }
    }
    // quotient: maximal-injective G, H without maximal cyclic subgroups ⇒ G/H injective
    let mut quotient_groups = zoo(ZOO_MAX_ORDER)?;
    quotient_groups.push(c66);
    for g in &quotient_groups {
        let max_inj = variant_injective(g, Variant::Maximal)?;
        cases.push(Case::check(
            format!("{} maximal vs prime", g.recipe()),
            "maximal injective implies prime injective",
            format!("maximal {}, prime {}", label(max_inj), label(prime_injective(g)?)),
            !max_inj || prime_injective(g)?,
        ));
        if !max_inj {
            continue;
        }
        let maxcyc = maximal_cyclic_subgroups(g);
        for h in two_generated_subgroups(g).iter().filter(|h| h.order() > 1 && h.order() < g.order() && h.is_normal(g)) {
            let hyp = !maxcyc.iter().any(|c| c.is_subset_of(h));
            if !hyp {
                continue;
            }
            let q = quotient(g, h)?;
            let q_inj = prime_injective(&q)?;
            cases.push(Case::new(format!("{} / {:?}", g.recipe(), h.elements.iter().map(|x| x.0).collect::<Vec<_>>()), label(true), label(q_inj)));
        }
    }
    Ok(cases)
}

/// Flow properties: constant flows, group flows, axiom witnesses, parity.
pub fn flows(max: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for m in 2..=16 {
        let sys = flow_radon_system(&constant_flow(m), &format!("const{m}"))?;
        cases.push(Case::new(format!("constant flow m={m:02}"), label(m >= 3), label(sys.rank() == m)));
    }
    for g in zoo(max)? {
        let c = group_flow_correspondence(&g)?;
        let flow = group_flow(&g);
        cases.push(Case::check(
            format!("{} group flow", g.recipe()),
            "projections = cyclic-subgroup cosets, orbit formula, reversal closure",
            format!(
                "{} projections vs {} cosets, sets {}, multiplicities {}",
                c.distinct_projections, c.cosets, c.sets_match, c.multiplicities_match
            ),
            c.holds() && orbit_formula_holds(&g) && reversal_closed(&flow),
        ));
        // A constant flow realised as a group flow needs every element to be
        // an involution, which forces even order.
        let all_involutions = g.elt_orders().skip(1).all(|k| k == 2);
        if g.order() % 2 == 1 {
            cases.push(Case::new(format!("{} parity", g.recipe()), false, all_involutions));
        }
    }
    let bad: [(&str, Vec<Vec<usize>>, Error); 2] = [
        ("reflexivity witness", vec![vec![0, 1], vec![0, 1]], Error::FlowReflexivity { a: 0, b: 1 }),
        (
            "reversibility witness",
            vec![vec![0, 2, 0], vec![1, 1, 1], vec![2, 2, 2]],
            Error::FlowReversibility { a: 0, b: 1 },
        ),
    ];
    for (name, raw, expected) in bad {
        let got = validate_flow(&raw).err();
        cases.push(Case::new(name, &expected, got.map_or("valid".to_string(), |e| e.to_string())));
    }
    Ok(cases)
}

/// The `C_p × C_p` inversion formula on random rational functions.
pub fn reconstruct(samples: usize, opts: &SuiteOptions) -> Result<Vec<Case>> {
    let mut rng = opts.rng();
    let mut cases = Vec::new();
    for p in [2, 3, 5] {
        let g = product_of_cyclics(&[p, p])?;
        let sys = build_system(&g, Variant::Prime)?;
        let mut exact = 0;
        for _ in 0..samples {
            let f = random_function(&mut rng, g.order(), 50);
            let back = reconstruct_cpxcp_all(&g, &sys, p, &sys.apply(&f)?)?;
            exact += usize::from(back == f);
        }
        cases.push(Case::new(g.recipe().to_string(), format!("{samples}/{samples} exact"), format!("{exact}/{samples} exact")));
    }
    Ok(cases)
}

fn nonzero_and_annihilated(sys: &RadonSystem, w: &[Rational]) -> Result<bool> {
    Ok(w.iter().any(|x| !x.is_zero()) && sys.is_annihilated(w)?)
}

/// Constructive kernel vectors for cyclic groups and coprime products.
pub fn witnesses(max: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in 2..=max {
        let g = make_cyclic(n)?;
        let w = kernel_witness_cyclic(&g)?;
        let ok = nonzero_and_annihilated(&build_system(&g, Variant::Prime)?, &w)?;
        cases.push(Case::new(format!("{} witness", g.recipe()), true, ok));
    }
    let pairs = [
        (make_cyclic(2)?, make_cyclic(3)?),
        (make_cyclic(4)?, make_cyclic(3)?),
        (make_dicyclic(2)?, make_cyclic(3)?),
        (make_cyclic(9)?, make_cyclic(4)?),
    ];
    for (g1, g2) in pairs {
        let w1 = factor_witness(&g1)?;
        let w2 = factor_witness(&g2)?;
        let w = kernel_witness_product(&w1, &w2, &g1, &g2)?;
        let p = make_direct_product(&g1, &g2)?;
        let ok = nonzero_and_annihilated(&build_system(&p, Variant::Prime)?, &w)?;
        cases.push(Case::new(format!("{} witness", p.recipe()), true, ok));
    }
    Ok(cases)
}

/// The cyclic witness for cyclic groups, else the first exact kernel vector.
fn factor_witness(g: &GroupTable) -> Result<Vec<Rational>> {
    if is_cyclic(g) {
        return kernel_witness_cyclic(g);
    }
    build_system(g, Variant::Prime)?.kernel().vectors.into_iter().next().ok_or(Error::ZeroWitness)
}

/// The Fourier side of the transform and Plancherel on random functions,
/// plus the exact projection lemma for every shipped representation.
pub fn fourier(samples: usize, opts: &SuiteOptions) -> Result<Vec<Case>> {
    let mut rng = opts.rng();
    let mut cases = Vec::new();
    for factors in [&[6][..], &[2, 2], &[2, 4], &[3, 3]] {
        let g = product_of_cyclics(factors)?;
        let ct = characters(&g)?;
        let mut worst_fr = 0.0f64;
        let mut worst_pl = 0.0f64;
        for _ in 0..samples {
            let f = random_function(&mut rng, g.order(), 20);
            worst_fr = worst_fr.max(fourier_radon_check(&g, &f, DEFAULT_TOLERANCE)?.max_error);
            let (lhs, rhs) = plancherel(&ct, &rational_to_f64(&f))?;
            worst_pl = worst_pl.max((lhs - rhs).abs());
        }
        let name = g.recipe().to_string();
        cases.push(Case::check(
            format!("{name} fourier-radon"),
            format!("error <= {DEFAULT_TOLERANCE:e}"),
            format!("max error {worst_fr:e}"),
            worst_fr <= DEFAULT_TOLERANCE,
        ));
        cases.push(Case::check(
            format!("{name} plancherel"),
            format!("error <= {DEFAULT_TOLERANCE:e}"),
            format!("max error {worst_pl:e}"),
            worst_pl <= DEFAULT_TOLERANCE,
        ));
        // witnesses have vanishing transform off the faithful characters
        if is_cyclic(&g) {
            let w = rational_to_f64(&kernel_witness_cyclic(&g)?);
            let ft = dft(&ct, &w)?;
            let off = (0..ct.len()).filter(|&c| !ct.is_faithful(c)).map(|c| ft[c].norm()).fold(0.0, f64::max);
            cases.push(Case::check(
                format!("{name} witness spectrum"),
                "vanishes off faithful characters",
                format!("max {off:e}"),
                off <= DEFAULT_TOLERANCE,
            ));
        }
    }
    for (g, irreps) in shipped_reps()? {
        let mut checked = 0;
        let mut failed = 0;
        for rep in irreps.iter().chain([&MatrixRep::regular(&g)]) {
            for n in (2..=g.order()).filter(|n| g.order() % n == 0) {
                for hom in homomorphisms_cn(&g, n) {
                    checked += 1;
                    failed += usize::from(!check_projection(&g, rep, &hom)?.holds());
                }
            }
        }
        cases.push(Case::check(
            format!("{} projection", g.recipe()),
            "all geodesic sums are scaled orthogonal projections",
            format!("{failed} failures in {checked}"),
            failed == 0,
        ));
        let dichotomy = irreps.iter().map(|r| fixed_space_analysis(&g, r)).collect::<Result<Vec<_>>>()?;
        cases.push(Case::new(format!("{} dichotomy", g.recipe()), true, dichotomy.iter().all(|d| d.dichotomy_ok)));
    }
    Ok(cases)
}

/// The irreducible representations shipped with the crate, with their group.
pub fn shipped_reps() -> Result<Vec<(GroupTable, Vec<MatrixRep>)>> {
    let q8 = make_dicyclic(2)?;
    let q8_reps = q8_irreps(&q8)?;
    let mut out = vec![(q8, q8_reps)];
    for n in [2, 4] {
        let g = make_cyclic(n)?;
        let ct = characters(&g)?;
        let reps = (0..ct.len()).map(|c| MatrixRep::from_character(&ct, c)).collect::<Result<_>>()?;
        out.push((g, reps));
    }
    Ok(out)
}

/// Fraction-free exact rank agrees with the rank modulo each oracle prime on
/// every prime, maximal and group-flow system of order `<= max`.
pub fn oracle(max: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for g in zoo(max)? {
        let systems = [
            build_system(&g, Variant::Prime)?,
            build_system(&g, Variant::Maximal)?,
            flow_radon_system(&group_flow(&g), &g.recipe().to_string())?,
        ];
        for sys in systems {
            let exact = sys.bareiss_rank();
            let modular = sys.modular_ranks();
            cases.push(Case::check(
                format!("{} {}", g.recipe(), sys.variant),
                format!("rank {exact} mod every prime"),
                format!("{modular:?}"),
                modular.iter().all(|&r| r == exact),
            ));
        }
    }
    Ok(cases)
}
