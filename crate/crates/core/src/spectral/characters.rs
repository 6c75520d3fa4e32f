//! Characters of finite abelian groups in exponent form, the discrete Fourier
//! transform, and the Fourier side of the Radon transform.

use num_complex::Complex;
use num_traits::{Float, FloatConst, ToPrimitive};
use serde::Serialize;

use crate::arith::{divisors, is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::geodesic::homomorphisms_cn;
use crate::group::{AbelianBasis, ElementId, GroupTable};
use crate::radon::{build_system, Variant};
use crate::Rational;

/// All characters of an abelian group. With `x` written as `Σ x_i·e_i` in the
/// invariant-factor basis, character `c` sends `x` to `ζ^{Σ c_i x_i (E/d_i)}`
/// for `ζ = e^{2πi/E}`, `E` the exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub factors: Vec<usize>,
    pub exponent: usize,
    pub characters: Vec<Vec<usize>>,
    #[serde(skip)]
    coords: Vec<Vec<usize>>,
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.coords.len()
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    /// `k` with `χ(x) = ζ^k`, `0 <= k < E`.
    pub fn value_exp(&self, chi: usize, x: ElementId) -> usize {
        let c = &self.characters[chi];
        let xs = &self.coords[x.index()];
        c.iter()
            .zip(xs)
            .zip(&self.factors)
            .map(|((&ci, &xi), &d)| ci * xi % d * (self.exponent / d))
            .sum::<usize>()
            % self.exponent
    }

    pub fn value<F: Float + FloatConst>(&self, chi: usize, x: ElementId) -> Complex<F> {
        root_of_unity(self.value_exp(chi, x), self.exponent)
    }

    /// Index of the all-zero tuple.
    pub fn trivial(&self) -> usize {
        0
    }

    pub fn is_faithful(&self, chi: usize) -> bool {
        (1..self.order()).all(|x| self.value_exp(chi, ElementId::from(x)) != 0)
    }
}

/// `e^{2πik/n}`.
pub fn root_of_unity<F: Float + FloatConst>(k: usize, n: usize) -> Complex<F> {
    let theta = F::TAU() * F::from(k % n).expect("small integer") / F::from(n).expect("small integer");
    Complex::from_polar(F::one(), theta)
}

pub fn characters(g: &GroupTable) -> Result<CharacterTable> {
    let basis = AbelianBasis::new(g)?;
    let exponent = basis.exponent();
    let characters = (0..g.order())
        .map(|mut i| {
            basis
                .factors
                .iter()
                .map(|&d| {
                    let c = i % d;
                    i /= d;
                    c
                })
                .collect()
        })
        .collect();
    Ok(CharacterTable { factors: basis.factors, exponent, characters, coords: basis.coords })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Faithful {
    pub count: usize,
    pub characters: Vec<Vec<usize>>,
}

/// Faithful characters: `χ(x) ≠ 1` for every `x ≠ e`. For abelian groups these
/// are the fixed-point-free irreducibles, so `count` is the predicted kernel
/// dimension of the prime transform.
pub fn faithful_characters(ct: &CharacterTable) -> Faithful {
    let characters: Vec<Vec<usize>> =
        (0..ct.len()).filter(|&c| ct.is_faithful(c)).map(|c| ct.characters[c].clone()).collect();
    Faithful { count: characters.len(), characters }
}

/// `f̃(χ) = Σ_x f(x)·χ(x)` for every character, in table order.
pub fn dft<F: Float + FloatConst>(ct: &CharacterTable, f: &[F]) -> Result<Vec<Complex<F>>> {
    if f.len() != ct.order() {
        return Err(Error::LengthMismatch { expected: ct.order(), got: f.len() });
    }
    Ok((0..ct.len())
        .map(|c| {
            f.iter()
                .enumerate()
                .fold(Complex::new(F::zero(), F::zero()), |acc, (x, &v)| acc + ct.value::<F>(c, ElementId::from(x)) * v)
        })
        .collect())
}

pub fn rational_to_f64(f: &[Rational]) -> Vec<f64> {
    f.iter().map(|q| q.to_f64().expect("finite rational")).collect()
}

/// Returns `(Σ|f̃|²/|G|, Σ|f|²)`.
pub fn plancherel<F: Float + FloatConst>(ct: &CharacterTable, f: &[F]) -> Result<(F, F)> {
    let ft = dft(ct, f)?;
    let n = F::from(ct.order()).expect("small integer");
    let lhs = ft.iter().fold(F::zero(), |acc, z| acc + z.norm_sqr()) / n;
    let rhs = f.iter().fold(F::zero(), |acc, &v| acc + v * v);
    Ok((lhs, rhs))
}

/// Integer coefficients of the `n`th cyclotomic polynomial, constant term first.
pub fn cyclotomic(n: usize) -> Vec<i64> {
    // X^n − 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        p = poly_div_exact(&p, &cyclotomic(d));
    }
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let (q, r) = poly_divmod(num, den);
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// Division by a monic polynomial.
fn poly_divmod(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut r = num.to_vec();
    if r.len() <= dd {
        return (vec![0], r);
    }
    let mut q = vec![0i64; r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd];
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            r[i + j] -= c * dj;
        }
    }
    r.truncate(dd);
    (q, r)
}

/// Whether `Σ_k counts[k]·ζ^k = target` exactly, with `ζ` a primitive
/// `counts.len()`-th root of unity.
pub fn cyclotomic_sum_equals(counts: &[i64], target: i64) -> bool {
    let mut p = counts.to_vec();
    p[0] -= target;
    let (_, r) = poly_divmod(&p, &cyclotomic(counts.len()));
    r.iter().all(|&c| c == 0)
}

/// `Σ_χ χ(x) = |G|·[x = e]` for the characters in `subset`, decided exactly.
/// Returns the first failing element.
pub fn char_sum_check_characters(ct: &CharacterTable, subset: &[usize]) -> std::result::Result<(), ElementId> {
    for x in (0..ct.order()).map(ElementId::from) {
        let mut counts = vec![0i64; ct.exponent];
        for &c in subset {
            counts[ct.value_exp(c, x)] += 1;
        }
        let target = if x == ElementId::IDENTITY { ct.order() as i64 } else { 0 };
        if !cyclotomic_sum_equals(&counts, target) {
            return Err(x);
        }
    }
    Ok(())
}

/// [`char_sum_check_characters`] over the full table.
pub fn char_sum_check_abelian(ct: &CharacterTable) -> bool {
    let all: Vec<usize> = (0..ct.len()).collect();
    char_sum_check_characters(ct, &all).is_ok()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FourierRadonReport {
    pub characters: usize,
    pub homomorphisms: usize,
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// For every character `χ` and every prime-length `γ`, compares
/// `Σ_x R f(x,γ)·χ(x)` with `f̃(χ)·I(χ,γ)`, `I(χ,γ) = Σ_t χ(γ(t))`.
pub fn fourier_radon_check(g: &GroupTable, f: &[Rational], tolerance: f64) -> Result<FourierRadonReport> {
    let ct = characters(g)?;
    let sys = build_system(g, Variant::Prime)?;
    let rf = rational_to_f64(&sys.apply(f)?);
    let ff = rational_to_f64(f);
    let ft = dft(&ct, &ff)?;
    let homs: Vec<_> = prime_divisors(g.order()).into_iter().flat_map(|p| homomorphisms_cn(g, p)).collect();
    let mut max_error = 0.0f64;
    for hom in &homs {
        debug_assert!(is_prime(hom.domain_order));
        let h = hom.image(g);
        // row of each x for this subgroup
        let mut row_of = vec![usize::MAX; g.order()];
        for (i, s) in sys.geodesics.iter().enumerate().filter(|(_, s)| s.subgroup.elements == h.elements) {
            s.coset.iter().for_each(|x| row_of[x.index()] = i);
        }
        for c in 0..ct.len() {
            let lhs = g
                .elements()
                .fold(Complex::new(0.0, 0.0), |acc, x| acc + ct.value::<f64>(c, x) * rf[row_of[x.index()]]);
            let i_sum = hom.path(g).iter().fold(Complex::new(0.0, 0.0), |acc, &y| acc + ct.value::<f64>(c, y));
            let rhs = ft[c] * i_sum;
            max_error = max_error.max((lhs - rhs).norm());
        }
    }
    Ok(FourierRadonReport {
        characters: ct.len(),
        homomorphisms: homs.len(),
        max_error,
        tolerance,
        passed: max_error <= tolerance,
    })
}
