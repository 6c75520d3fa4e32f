//! The Radon transform as an integer matrix, with exact rank, kernel and
//! injectivity verdicts, plus the constructive results around it: the
//! `C_p × C_p` inversion formula, kernel witnesses, the cyclic-subgroup
//! dimension bound and the composite-length consistency check.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{factorize, gcd, is_prime, smallest_prime_factor};
use crate::error::{Error, Result};
use crate::geodesic::{maximal_geodesics, prime_geodesics, prime_order_subgroups, Geodesic, Homomorphism};
use crate::group::{is_abelian, is_cyclic, ElementId, GroupTable, SubgroupSet};
use crate::linalg::{bareiss_rank, independent_rows_mod_p, modular_rank, Matrix, Scalar};
use crate::{KernelBasis, Rational, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Prime,
    Maximal,
    Flow,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Prime => "prime",
            Variant::Maximal => "maximal",
            Variant::Flow => "flow",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prime" => Ok(Variant::Prime),
            "maximal" => Ok(Variant::Maximal),
            "flow" => Ok(Variant::Flow),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown variant {s:?}") }),
        }
    }
}

/// A Radon transform as a `rows × order` matrix of multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadonSystem {
    pub label: String,
    pub order: usize,
    pub variant: Variant,
    /// Row geodesics for the group variants; empty for flows.
    pub geodesics: Vec<Geodesic>,
    pub matrix: Vec<Vec<u32>>,
}

impl RadonSystem {
    /// A system with explicit rows. Every row must have `order` entries.
    pub fn from_rows(label: String, order: usize, variant: Variant, matrix: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(r) = matrix.iter().find(|r| r.len() != order) {
            return Err(Error::LengthMismatch { expected: order, got: r.len() });
        }
        Ok(RadonSystem { label, order, variant, geodesics: Vec::new(), matrix })
    }

    pub fn nrows(&self) -> usize {
        self.matrix.len()
    }

    pub fn ncols(&self) -> usize {
        self.order
    }

    /// Row sums `Σ_j M[i][j]·f[j]`, exact in any scalar type.
    pub fn apply<T: Scalar>(&self, f: &[T]) -> Result<Vec<T>> {
        if f.len() != self.order {
            return Err(Error::LengthMismatch { expected: self.order, got: f.len() });
        }
        Ok(self
            .matrix
            .iter()
            .map(|row| {
                row.iter().zip(f).fold(T::zero(), |mut acc, (&k, v)| {
                    for _ in 0..k {
                        acc = acc + v.clone();
                    }
                    acc
                })
            })
            .collect())
    }

    pub fn int_rows(&self) -> Vec<Vec<i64>> {
        self.matrix.iter().map(|r| r.iter().map(|&x| i64::from(x)).collect()).collect()
    }

    pub fn rational_matrix(&self) -> Matrix<Rational> {
        Matrix::from_fn(self.nrows(), self.order, |i, j| Rational::from_integer(BigInt::from(self.matrix[i][j])))
    }

    /// Exact rank, see [`RadonSystem::kernel`].
    pub fn rank(&self) -> usize {
        self.order - self.kernel().dim()
    }

    /// Exact rank by fraction-free elimination over all rows. Slower than
    /// [`RadonSystem::rank`] on tall systems but shares nothing with it.
    pub fn bareiss_rank(&self) -> usize {
        bareiss_rank(&self.int_rows(), self.order)
    }

    /// Rank modulo each oracle prime.
    pub fn modular_ranks(&self) -> [usize; 3] {
        modular_rank(&self.int_rows(), self.order)
    }

    /// Exact kernel basis in reduced echelon form.
    ///
    /// Rows independent modulo a prime are independent over the rationals,
    /// which bounds the rank below. The exact kernel of just those rows bounds
    /// it above once every row of the full matrix annihilates it. Only when
    /// that check fails is the whole matrix eliminated.
    pub fn kernel(&self) -> KernelBasis {
        let rows = self.int_rows();
        let chosen = independent_rows_mod_p(&rows, self.order);
        let sub = Matrix::from_fn(chosen.len(), self.order, |i, j| Rational::from_integer(rows[chosen[i]][j].into()));
        let k = sub.nullspace();
        if k.vectors.iter().all(|v| self.apply(v).is_ok_and(|r| r.iter().all(Zero::is_zero))) {
            k
        } else {
            self.rational_matrix().nullspace()
        }
    }

    pub fn is_annihilated(&self, f: &[Rational]) -> Result<bool> {
        Ok(self.apply(f)?.iter().all(Zero::is_zero))
    }

    /// CSV dump: header of element ids, one line per row.
    pub fn matrix_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = (0..self.order).map(|j| j.to_string()).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.matrix {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

fn indicator_rows(order: usize, geodesics: &[Geodesic]) -> Vec<Vec<u32>> {
    geodesics
        .iter()
        .map(|s| {
            let mut row = vec![0; order];
            s.coset.iter().for_each(|x| row[x.index()] = 1);
            row
        })
        .collect()
}

/// Assembles the prime or maximal transform of `g`.
pub fn build_system(g: &GroupTable, variant: Variant) -> Result<RadonSystem> {
    let geodesics = match variant {
        Variant::Prime => prime_geodesics(g)?,
        Variant::Maximal => maximal_geodesics(g)?,
        Variant::Flow => {
            return Err(Error::UnsupportedGroup("flow systems are built from a successor flow".into()))
        }
    };
    let matrix = indicator_rows(g.order(), &geodesics);
    Ok(RadonSystem { label: g.recipe().to_string(), order: g.order(), variant, geodesics, matrix })
}

/// How the rank behind a verdict was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    Exact,
    Modular,
    /// Modular ranks, confirmed by the exact path.
    ModularConfirmed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub group: String,
    pub variant: Variant,
    pub order: usize,
    pub rows: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub injective: bool,
    /// Only for the prime variant: noninjective groups are exactly the
    /// Frobenius complements.
    pub frobenius_complement: Option<bool>,
    pub rank_method: RankMethod,
    /// `false` when the modular and exact ranks disagreed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agreement: Option<bool>,
}

impl Verdict {
    fn from_rank(sys: &RadonSystem, rank: usize, rank_method: RankMethod, oracle_agreement: Option<bool>) -> Self {
        let kernel_dim = sys.order - rank;
        let injective = kernel_dim == 0;
        Verdict {
            group: sys.label.clone(),
            variant: sys.variant,
            order: sys.order,
            rows: sys.nrows(),
            rank,
            kernel_dim,
            injective,
            frobenius_complement: (sys.variant == Variant::Prime).then_some(!injective),
            rank_method,
            oracle_agreement,
        }
    }
}

/// Verdict for an assembled system. `Modular` uses the largest of the three
/// modular ranks; with `ModularConfirmed` the exact rank is authoritative and
/// any disagreement is recorded.
pub fn decide(sys: &RadonSystem, method: RankMethod) -> Verdict {
    match method {
        RankMethod::Exact => Verdict::from_rank(sys, sys.rank(), method, None),
        RankMethod::Modular => {
            let r = sys.modular_ranks().into_iter().max().unwrap_or(0);
            Verdict::from_rank(sys, r, method, None)
        }
        RankMethod::ModularConfirmed => {
            let modular = sys.modular_ranks();
            let exact = sys.rank();
            Verdict::from_rank(sys, exact, method, Some(modular.iter().all(|&r| r == exact)))
        }
    }
}

/// Exact injectivity verdict for the prime or maximal transform.
pub fn is_injective(g: &GroupTable, variant: Variant) -> Result<Verdict> {
    Ok(decide(&build_system(g, variant)?, RankMethod::Exact))
}

/// Recovers `Σ_x f(x)` from transform values: the cosets of the first row's
/// subgroup `H` partition `G`, so `(1/|H|)·Σ_{x∈G} R f(xH)` is the total.
pub fn group_sum_from_radon(sys: &RadonSystem, values: &[Rational]) -> Result<Rational> {
    if values.len() != sys.nrows() {
        return Err(Error::LengthMismatch { expected: sys.nrows(), got: values.len() });
    }
    let h = &sys
        .geodesics
        .first()
        .ok_or_else(|| Error::UnsupportedGroup("system has no geodesic rows".into()))?
        .subgroup;
    let mut row_of = vec![usize::MAX; sys.order];
    for (i, s) in sys.geodesics.iter().enumerate().filter(|(_, s)| Arc::ptr_eq(&s.subgroup, h)) {
        s.coset.iter().for_each(|x| row_of[x.index()] = i);
    }
    let total = row_of.iter().fold(Rational::zero(), |acc, &i| acc + &values[i]);
    Ok(total / Rational::from_integer(BigInt::from(h.order())))
}

fn rat(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Checks that `g` is `C_p × C_p` and `sys` its prime transform.
fn check_cpxcp(g: &GroupTable, sys: &RadonSystem, p: usize) -> Result<()> {
    let ok = is_prime(p)
        && g.order() == p * p
        && is_abelian(g)
        && !is_cyclic(g)
        && sys.variant == Variant::Prime
        && sys.order == g.order()
        && sys.nrows() == p * (p + 1);
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedGroup(format!("expected the prime transform of C{p}xC{p}, got {}", sys.label)))
    }
}

/// Inverts the prime transform of `C_p × C_p` at `x`:
///
/// `f(x) = (p−1)/(p²−p) · Σ_{S ∋ x} R f(S) − 1/p² · Σ_{y∈G} R f(y·H₀)`,
///
/// the first sum over the `p+1` cosets through `x`, each standing for its
/// `p−1` generating homomorphisms, and `H₀` any one subgroup of order `p`.
pub fn reconstruct_cpxcp(
    g: &GroupTable,
    sys: &RadonSystem,
    p: usize,
    values: &[Rational],
    x: ElementId,
) -> Result<Rational> {
    check_cpxcp(g, sys, p)?;
    if values.len() != sys.nrows() {
        return Err(Error::LengthMismatch { expected: sys.nrows(), got: values.len() });
    }
    let through_x = sys
        .geodesics
        .iter()
        .zip(values)
        .filter(|(s, _)| s.contains(x))
        .fold(Rational::zero(), |acc, (_, v)| acc + v);
    // Σ_y R f(yH₀) counts each coset of H₀ p times.
    let h0 = &sys.geodesics[0].subgroup;
    let over_h0 = sys
        .geodesics
        .iter()
        .zip(values)
        .filter(|(s, _)| Arc::ptr_eq(&s.subgroup, h0))
        .fold(Rational::zero(), |acc, (_, v)| acc + v)
        * rat(p);
    Ok(rat(p - 1) / rat(p * p - p) * through_x - over_h0 / rat(p * p))
}

/// [`reconstruct_cpxcp`] at every element.
pub fn reconstruct_cpxcp_all(g: &GroupTable, sys: &RadonSystem, p: usize, values: &[Rational]) -> Result<RationalVector> {
    g.elements().map(|x| reconstruct_cpxcp(g, sys, p, values, x)).collect()
}

/// A nonzero kernel vector of the prime transform of a cyclic group.
///
/// Writing `G = ∏ C_{p^k}` via the Chinese remainder theorem, each factor
/// gets `δ_0 − δ_{p^{k−1}}` (two points of its unique order-`p` subgroup) and
/// the witness is their product.
pub fn kernel_witness_cyclic(g: &GroupTable) -> Result<RationalVector> {
    if g.is_trivial() {
        return Err(Error::NoGeodesics);
    }
    let n = g.order();
    let z = g.elements().find(|&x| g.elt_order(x) == n).ok_or(Error::NotCyclic)?;
    let mut f = vec![Rational::zero(); n];
    let factors = factorize(n);
    // Each factor contributes exponent 0 (sign +) or q/p (sign −) in C_q.
    for mask in 0u32..(1 << factors.len()) {
        let mut x = ElementId::IDENTITY;
        let mut sign = 1i64;
        for (i, &(p, k)) in factors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let q = p.pow(k);
                let u = g.pow(z, n / q);
                x = g.mul(x, g.pow(u, q / p));
                sign = -sign;
            }
        }
        f[x.index()] = Rational::from_integer(BigInt::from(sign));
    }
    let sys = build_system(g, Variant::Prime)?;
    if !sys.is_annihilated(&f)? {
        return Err(Error::NotInKernel);
    }
    Ok(f)
}

/// The product witness `f(x₁, x₂) = f₁(x₁)·f₂(x₂)` on `G₁ × G₂`, using the
/// element numbering of [`crate::group::make_direct_product`]. The orders
/// must be coprime and each factor witness must lie in its own kernel.
pub fn kernel_witness_product(
    w1: &[Rational],
    w2: &[Rational],
    g1: &GroupTable,
    g2: &GroupTable,
) -> Result<RationalVector> {
    let (n1, n2) = (g1.order(), g2.order());
    if gcd(n1, n2) != 1 {
        return Err(Error::NotCoprime(n1, n2));
    }
    for (w, g) in [(w1, g1), (w2, g2)] {
        if w.iter().all(Zero::is_zero) {
            return Err(Error::ZeroWitness);
        }
        if !build_system(g, Variant::Prime)?.is_annihilated(w)? {
            return Err(Error::NotInKernel);
        }
    }
    Ok(w1.iter().flat_map(|a| w2.iter().map(move |b| a * b)).collect())
}

/// Both sides of `Σ_{H∈S} 1/|H| < 1 + (|S|−1)/|G|`, `S` the cyclic subgroups
/// of prime order. When the strict inequality holds the kernel is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub subgroups: usize,
    #[serde(serialize_with = "crate::io::ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "crate::io::ser_rational")]
    pub rhs: Rational,
    pub bound_holds: bool,
}

pub fn dimension_bound_check(g: &GroupTable) -> Result<BoundCheck> {
    if g.is_trivial() {
        return Err(Error::NoGeodesics);
    }
    let s = prime_order_subgroups(g);
    let lhs = s.iter().fold(Rational::zero(), |acc, h| acc + Rational::new(BigInt::one(), BigInt::from(h.order())));
    let rhs = Rational::one() + Rational::new(BigInt::from(s.len()) - 1, BigInt::from(g.order()));
    Ok(BoundCheck { subgroups: s.len(), bound_holds: lhs < rhs, lhs, rhs })
}

/// Outcome of [`composite_consistency`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub n: usize,
    pub homomorphisms: usize,
    pub evaluations: usize,
    pub mismatches: usize,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Locates the row of the prime transform holding `x·⟨y⟩` for `y` of prime order.
struct PrimeIndex {
    order: usize,
    /// Index of `⟨y⟩` among the row subgroups, for `y` of prime order.
    subgroup_of: Vec<usize>,
    /// `row_of[s·|G| + x]` is the row of the coset of subgroup `s` containing `x`.
    row_of: Vec<usize>,
}

impl PrimeIndex {
    fn new(sys: &RadonSystem) -> Self {
        let n = sys.order;
        let mut subgroup_of = vec![usize::MAX; n];
        let mut row_of = Vec::new();
        let mut current: Option<&Arc<SubgroupSet>> = None;
        for (i, s) in sys.geodesics.iter().enumerate() {
            if !current.is_some_and(|h| Arc::ptr_eq(h, &s.subgroup)) {
                let idx = row_of.len() / n;
                s.subgroup.elements.iter().skip(1).for_each(|y| subgroup_of[y.index()] = idx);
                row_of.resize(row_of.len() + n, usize::MAX);
                current = Some(&s.subgroup);
            }
            let base = row_of.len() - n;
            s.coset.iter().for_each(|x| row_of[base + x.index()] = i);
        }
        PrimeIndex { order: n, subgroup_of, row_of }
    }

    fn row(&self, x: ElementId, gen: ElementId) -> usize {
        self.row_of[self.subgroup_of[gen.index()] * self.order + x.index()]
    }
}

/// `R_len f(x, t ↦ gen^t)` predicted from the prime-length values by
/// splitting `len = m·k` with `m` its smallest prime factor: if `gen^k = e`
/// the orbit runs `m` times through a length-`k` one, otherwise it is the
/// average of the length-`m` transforms along the orbit.
fn predict(g: &GroupTable, idx: &PrimeIndex, values: &[Rational], x: ElementId, gen: ElementId, len: usize) -> Rational {
    if is_prime(len) {
        return values[idx.row(x, gen)].clone();
    }
    let m = smallest_prime_factor(len).expect("len is composite");
    let k = len / m;
    let gk = g.pow(gen, k);
    if gk == ElementId::IDENTITY {
        rat(m) * predict(g, idx, values, x, gen, k)
    } else {
        let mut acc = Rational::zero();
        let mut y = x;
        for _ in 0..len {
            acc += &values[idx.row(y, gk)];
            y = g.mul(y, gen);
        }
        acc / rat(m)
    }
}

/// For every nontrivial `γ: C_n → G` with `n` composite, every point `x`
/// and every supplied function, compares the direct orbit sum
/// `Σ_t f(x·γ(t))` with its prediction from prime-length transforms.
pub fn composite_consistency(g: &GroupTable, n: usize, functions: &[RationalVector]) -> Result<ConsistencyReport> {
    if n < 4 || is_prime(n) {
        return Err(Error::NotComposite(n));
    }
    let mut report = ConsistencyReport { n, ..Default::default() };
    let homs = crate::geodesic::homomorphisms_cn(g, n);
    report.homomorphisms = homs.len();
    if homs.is_empty() {
        return Ok(report);
    }
    let sys = build_system(g, Variant::Prime)?;
    let idx = PrimeIndex::new(&sys);
    for f in functions {
        let values = sys.apply(f)?;
        for hom in &homs {
            for x in g.elements() {
                let direct = orbit_sum(g, hom, x, f);
                report.evaluations += 1;
                if direct != predict(g, &idx, &values, x, hom.image_generator, n) {
                    report.mismatches += 1;
                }
            }
        }
    }
    Ok(report)
}

/// `Σ_{t∈C_n} f(x·γ(t))`.
pub fn orbit_sum(g: &GroupTable, hom: &Homomorphism, x: ElementId, f: &[Rational]) -> Rational {
    crate::geodesic::composite_orbit(g, hom, x).iter().fold(Rational::zero(), |acc, y| acc + &f[y.index()])
}

/// A random rational with numerator in `[-bound, bound]` and denominator in `[1, bound]`.
pub fn random_rational<R: rand::Rng>(rng: &mut R, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_function<R: rand::Rng>(rng: &mut R, len: usize, bound: i64) -> RationalVector {
    (0..len).map(|_| random_rational(rng, bound)).collect()
}

/// Whether `v` is a multiple of `w` (both nonzero).
pub fn is_multiple(v: &[Rational], w: &[Rational]) -> bool {
    let Some(i) = w.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let c = &v[i] / &w[i];
    !c.is_zero() && v.iter().zip(w).all(|(a, b)| *a == &c * b)
}
