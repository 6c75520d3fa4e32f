//! Matrix representations with exact Gaussian-rational entries: geodesic
//! sums, the projection property, the fixed-space dichotomy and the kernel
//! functions built from matrix coefficients.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use serde::Serialize;

use super::characters::CharacterTable;
use crate::arith::prime_divisors;
use crate::error::{Error, Result};
use crate::geodesic::{homomorphisms_cn, Homomorphism};
use crate::group::{ElementId, GroupTable};
use crate::linalg::{KernelBasis, Matrix};
use crate::radon::{build_system, Variant};
use crate::{GaussMatrix, GaussRational, Rational};

pub fn gauss(re: i64, im: i64) -> GaussRational {
    Complex::new(Rational::from_integer(BigInt::from(re)), Rational::from_integer(BigInt::from(im)))
}

/// A homomorphism `G → GL_d` given by one matrix per element.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    pub dim: usize,
    pub images: Vec<GaussMatrix>,
    pub declared_unitary: bool,
}

impl MatrixRep {
    /// Checks `ρ(e) = I`, `ρ(xy) = ρ(x)ρ(y)` for all pairs, and `MM* = I`
    /// when unitarity is declared.
    pub fn new(g: &GroupTable, dim: usize, images: Vec<GaussMatrix>, declared_unitary: bool) -> Result<Self> {
        if images.len() != g.order() {
            return Err(Error::LengthMismatch { expected: g.order(), got: images.len() });
        }
        if let Some(m) = images.iter().find(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "expected {dim}x{dim} images, found {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        let id = GaussMatrix::identity(dim);
        if images[0] != id {
            return Err(Error::RepIdentity);
        }
        for x in g.elements() {
            for y in g.elements() {
                if images[g.mul(x, y).index()] != images[x.index()].mul(&images[y.index()]) {
                    return Err(Error::RepNotHomomorphism(x, y));
                }
            }
        }
        if declared_unitary {
            if let Some(x) = g.elements().find(|x| {
                let m = &images[x.index()];
                m.mul(&m.conj_transpose()) != id
            }) {
                return Err(Error::RepNotUnitary(x));
            }
        }
        Ok(MatrixRep { dim, images, declared_unitary })
    }

    /// Extends generator images along the Cayley graph, then validates.
    pub fn from_generators(
        g: &GroupTable,
        dim: usize,
        gens: &[(ElementId, GaussMatrix)],
        declared_unitary: bool,
    ) -> Result<Self> {
        let mut images: Vec<Option<GaussMatrix>> = vec![None; g.order()];
        images[0] = Some(GaussMatrix::identity(dim));
        let mut frontier = vec![ElementId::IDENTITY];
        while let Some(x) = frontier.pop() {
            for (s, m) in gens {
                let y = g.mul(x, *s);
                if images[y.index()].is_none() {
                    images[y.index()] = Some(images[x.index()].as_ref().expect("visited").mul(m));
                    frontier.push(y);
                }
            }
        }
        let images = images
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::DimensionMismatch("generators do not generate the group".into()))?;
        Self::new(g, dim, images, declared_unitary)
    }

    pub fn trivial(g: &GroupTable) -> Self {
        MatrixRep { dim: 1, images: vec![GaussMatrix::identity(1); g.order()], declared_unitary: true }
    }

    /// Left-regular representation: `ρ(x)·e_y = e_{xy}`.
    pub fn regular(g: &GroupTable) -> Self {
        let n = g.order();
        let images = g
            .elements()
            .map(|x| {
                Matrix::from_fn(n, n, |i, j| {
                    if g.mul(x, ElementId::from(j)).index() == i {
                        gauss(1, 0)
                    } else {
                        gauss(0, 0)
                    }
                })
            })
            .collect();
        MatrixRep { dim: n, images, declared_unitary: true }
    }

    /// A character as a one-dimensional representation. Only characters with
    /// values in `{±1, ±i}` are representable exactly.
    pub fn from_character(ct: &CharacterTable, chi: usize) -> Result<Self> {
        if 4 % ct.exponent != 0 {
            return Err(Error::UnsupportedGroup(format!(
                "character values are {}th roots of unity, not Gaussian rationals",
                ct.exponent
            )));
        }
        let powers = [gauss(1, 0), gauss(0, 1), gauss(-1, 0), gauss(0, -1)];
        let images = (0..ct.order())
            .map(|x| {
                let k = ct.value_exp(chi, ElementId::from(x)) * (4 / ct.exponent);
                Matrix::from_rows(vec![vec![powers[k].clone()]])
            })
            .collect();
        Ok(MatrixRep { dim: 1, images, declared_unitary: true })
    }

    pub fn image(&self, x: ElementId) -> &GaussMatrix {
        &self.images[x.index()]
    }

    pub fn trace(&self, x: ElementId) -> GaussRational {
        self.image(x).trace()
    }
}

/// `(a, b)` for the dicyclic group of order 8 as built by
/// [`crate::group::make_dicyclic`]: `a` of order 4 and `b` outside `⟨a⟩`.
pub const Q8_A: ElementId = ElementId(1);
pub const Q8_B: ElementId = ElementId(4);

fn check_q8(g: &GroupTable) -> Result<()> {
    let ok = g.order() == 8
        && g.elt_order(Q8_A) == 4
        && g.elt_order(Q8_B) == 4
        && g.pow(Q8_B, 2) == g.pow(Q8_A, 2)
        && g.mul(Q8_A, Q8_B) == g.mul(Q8_B, g.inv(Q8_A));
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedGroup(format!("{} is not Dic2 in standard numbering", g.recipe())))
    }
}

/// The two-dimensional irreducible representation of `Q8`:
/// `a ↦ diag(i, −i)`, `b ↦ [[0, −1], [1, 0]]`.
pub fn q8_irrep(g: &GroupTable) -> Result<MatrixRep> {
    check_q8(g)?;
    let a = Matrix::from_rows(vec![vec![gauss(0, 1), gauss(0, 0)], vec![gauss(0, 0), gauss(0, -1)]]);
    let b = Matrix::from_rows(vec![vec![gauss(0, 0), gauss(-1, 0)], vec![gauss(1, 0), gauss(0, 0)]]);
    MatrixRep::from_generators(g, 2, &[(Q8_A, a), (Q8_B, b)], true)
}

/// The four linear characters of `Q8`, sending `a` and `b` to `±1`.
pub fn q8_linear_characters(g: &GroupTable) -> Result<Vec<MatrixRep>> {
    check_q8(g)?;
    let sign = |s: i64| Matrix::from_rows(vec![vec![gauss(s, 0)]]);
    [(1, 1), (1, -1), (-1, 1), (-1, -1)]
        .into_iter()
        .map(|(sa, sb)| MatrixRep::from_generators(g, 1, &[(Q8_A, sign(sa)), (Q8_B, sign(sb))], true))
        .collect()
}

/// All five irreducible representations of `Q8`.
pub fn q8_irreps(g: &GroupTable) -> Result<Vec<MatrixRep>> {
    let mut reps = q8_linear_characters(g)?;
    reps.push(q8_irrep(g)?);
    Ok(reps)
}

/// `I(ρ, γ) = Σ_{t∈C_n} ρ(γ(t))`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeodesicSumMatrix {
    pub matrix: GaussMatrix,
    pub hom: Homomorphism,
    /// `I* = I`.
    pub hermitian: bool,
    /// `I(ρ, γ⁻¹) = I(ρ, γ)`.
    pub inverse_invariant: bool,
}

pub fn geodesic_sum(g: &GroupTable, rep: &MatrixRep, hom: &Homomorphism) -> Result<GeodesicSumMatrix> {
    if rep.images.len() != g.order() {
        return Err(Error::DimensionMismatch(format!(
            "representation has {} images, group has order {}",
            rep.images.len(),
            g.order()
        )));
    }
    let sum = |gen: ElementId| {
        let path = Homomorphism { image_generator: gen, ..*hom }.path(g);
        path.iter().fold(GaussMatrix::zeros(rep.dim, rep.dim), |acc, &y| acc.add(rep.image(y)))
    };
    let matrix = sum(hom.image_generator);
    let inverse_invariant = sum(g.inv(hom.image_generator)) == matrix;
    let hermitian = matrix.conj_transpose() == matrix;
    Ok(GeodesicSumMatrix { matrix, hom: *hom, hermitian, inverse_invariant })
}

/// Nontrivial homomorphisms from cyclic groups of prime order.
pub fn prime_length_homs(g: &GroupTable) -> Vec<Homomorphism> {
    prime_divisors(g.order()).into_iter().flat_map(|p| homomorphisms_cn(g, p)).collect()
}

fn fixed_space(m: &GaussMatrix) -> KernelBasis<GaussRational> {
    m.sub(&GaussMatrix::identity(m.nrows())).nullspace()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionCheck {
    pub idempotent: bool,
    pub self_adjoint: bool,
    pub image_is_fixed_space: bool,
    pub rank: usize,
}

impl ProjectionCheck {
    pub fn holds(&self) -> bool {
        self.idempotent && self.self_adjoint && self.image_is_fixed_space
    }
}

/// Checks that `P = I(ρ,γ)/n` is the orthogonal projection onto the vectors
/// fixed by `ρ(γ(1))`.
pub fn check_projection(g: &GroupTable, rep: &MatrixRep, hom: &Homomorphism) -> Result<ProjectionCheck> {
    if !rep.declared_unitary {
        return Err(Error::RepNotDeclaredUnitary);
    }
    let i = geodesic_sum(g, rep, hom)?;
    let n = Complex::new(Rational::from_integer(BigInt::from(hom.domain_order)), Rational::zero());
    let p = i.matrix.scale(&(GaussRational::one() / n));
    let rho = rep.image(hom.image_generator);
    let fixed = fixed_space(rho);
    let rank = p.rank();
    Ok(ProjectionCheck {
        idempotent: p.mul(&p) == p,
        self_adjoint: p.conj_transpose() == p,
        // columns of P are fixed, and P has full rank on the fixed space
        image_is_fixed_space: rho.mul(&p) == p && rank == fixed.dim(),
        rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedSpaceAnalysis {
    pub dim: usize,
    /// Dimension of the span of all vectors fixed by some `ρ(x)`, `x ≠ e`.
    pub f_span_dim: usize,
    /// Dimension of `k(ρ)`, the common kernel of all prime-length `I(ρ,γ)`.
    pub k_dim: usize,
    /// Either `F = 0` and `k = V`, or `F` spans `V` and `k = 0`.
    pub dichotomy_ok: bool,
}

fn analysis(dim: usize, f_span_dim: usize, k_dim: usize) -> FixedSpaceAnalysis {
    let dichotomy_ok = (f_span_dim == 0 && k_dim == dim) || (f_span_dim == dim && k_dim == 0);
    FixedSpaceAnalysis { dim, f_span_dim, k_dim, dichotomy_ok }
}

/// For a representation the caller claims is irreducible, a failed
/// dichotomy is evidence that it is reducible.
pub fn fixed_space_analysis(g: &GroupTable, rep: &MatrixRep) -> Result<FixedSpaceAnalysis> {
    if !rep.declared_unitary {
        return Err(Error::RepNotDeclaredUnitary);
    }
    let fixed: Vec<Vec<GaussRational>> =
        g.elements().skip(1).flat_map(|x| fixed_space(rep.image(x)).vectors).collect();
    let f_span_dim = KernelBasis::from_vectors(rep.dim, fixed).dim();
    let mut stacked: Option<GaussMatrix> = None;
    for hom in prime_length_homs(g) {
        let i = geodesic_sum(g, rep, &hom)?.matrix;
        stacked = Some(match stacked {
            None => i,
            Some(s) => s.vstack(&i),
        });
    }
    let k_dim = stacked.map_or(rep.dim, |s| s.nullspace().dim());
    Ok(analysis(rep.dim, f_span_dim, k_dim))
}

/// [`fixed_space_analysis`] for a character, decided by exponent arithmetic:
/// `F ≠ 0` iff some `x ≠ e` has `χ(x) = 1`, and `I(χ,γ) = 0` iff `χ` is
/// nontrivial on `γ`'s image.
pub fn character_fixed_space(g: &GroupTable, ct: &CharacterTable, chi: usize) -> FixedSpaceAnalysis {
    let f_span_dim = usize::from(!ct.is_faithful(chi));
    let all_vanish = prime_length_homs(g).iter().all(|h| ct.value_exp(chi, h.image_generator) != 0);
    analysis(1, f_span_dim, usize::from(all_vanish))
}

/// `Σ_ρ dim(ρ)·tr ρ(x) = |G|·[x = e]`, exact. Returns the first failing element.
pub fn char_sum_check(g: &GroupTable, reps: &[MatrixRep]) -> std::result::Result<(), ElementId> {
    for x in g.elements() {
        let total = reps.iter().fold(GaussRational::zero(), |acc, r| acc + r.trace(x) * gauss(r.dim as i64, 0));
        let target = if x == ElementId::IDENTITY { gauss(g.order() as i64, 0) } else { gauss(0, 0) };
        if total != target {
            return Err(x);
        }
    }
    Ok(())
}

/// The functions `x ↦ ρ(x⁻¹)_{ij}` against the prime transform.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientKernel {
    pub functions: usize,
    /// Every function (real and imaginary parts) is annihilated exactly.
    pub annihilated: bool,
    /// Rank of the functions over the Gaussian rationals.
    pub complex_rank: usize,
    /// Rank of their real and imaginary parts over the rationals.
    pub rational_rank: usize,
    pub kernel_dim: usize,
    /// The real and imaginary parts span the rational kernel.
    pub spans_kernel: bool,
}

pub fn coefficient_kernel(g: &GroupTable, rep: &MatrixRep) -> Result<CoefficientKernel> {
    let sys = build_system(g, Variant::Prime)?;
    let kernel_dim = g.order() - sys.rank();
    let d = rep.dim;
    let funcs: Vec<Vec<GaussRational>> = (0..d * d)
        .map(|k| g.elements().map(|x| rep.image(g.inv(x))[(k / d, k % d)].clone()).collect())
        .collect();
    let parts: Vec<Vec<Rational>> = funcs
        .iter()
        .flat_map(|f| [f.iter().map(|z| z.re.clone()).collect(), f.iter().map(|z| z.im.clone()).collect()])
        .collect();
    let mut annihilated = true;
    for p in &parts {
        annihilated &= sys.is_annihilated(p)?;
    }
    let complex_rank = Matrix::from_rows(funcs).rank();
    let rational_rank = Matrix::from_rows(parts).rank();
    Ok(CoefficientKernel {
        functions: d * d,
        annihilated,
        complex_rank,
        rational_rank,
        kernel_dim,
        spans_kernel: annihilated && rational_rank == kernel_dim,
    })
}
