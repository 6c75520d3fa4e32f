//! Prime fields `Z/pZ` for the modular rank oracle.

use std::fmt;
use std::ops::{Add, Div, Mul, Rem, Sub};

use num_traits::{Num, One, Zero};

use super::Matrix;

/// The three primes used by the rank oracle, all just below 2^31.
pub const ORACLE_PRIMES: [u64; 3] = [P0, P1, P2];
const P0: u64 = 2_147_483_647;
const P1: u64 = 2_147_483_629;
const P2: u64 = 2_147_483_587;

/// An element of `Z/PZ`. `P` must be prime for division to make sense.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Zp<const P: u64>(u64);

impl<const P: u64> Zp<P> {
    pub fn new(v: u64) -> Self {
        Zp(v % P)
    }

    pub fn from_i64(v: i64) -> Self {
        Zp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Zp::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat. Panics on zero.
    pub fn inverse(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in Z/{P}");
        self.pow(P - 2)
    }
}

impl<const P: u64> fmt::Debug for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {P})", self.0)
    }
}

impl<const P: u64> Add for Zp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Zp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Zp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Zp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Zp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Zp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Zp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

// Every nonzero element divides exactly in a field.
impl<const P: u64> Rem for Zp<P> {
    type Output = Self;
    fn rem(self, _rhs: Self) -> Self {
        Zp(0)
    }
}

impl<const P: u64> Zero for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Zp<P> {
    fn one() -> Self {
        Zp(1 % P)
    }
}

impl<const P: u64> Num for Zp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Zp::from_i64)
    }
}

fn rank_mod<const P: u64>(rows: &[Vec<i64>], cols: usize) -> usize {
    let m = Matrix::from_fn(rows.len(), cols, |i, j| Zp::<P>::from_i64(rows[i][j]));
    m.rank()
}

/// Indices of a maximal set of rows independent modulo the first oracle
/// prime, chosen greedily in row order. Rows independent modulo a prime are
/// independent over the rationals too, since some minor is nonzero mod p.
pub fn independent_rows_mod_p(rows: &[Vec<i64>], cols: usize) -> Vec<usize> {
    type F = Zp<P0>;
    // each basis row is monic at its pivot and zero at earlier pivots
    let mut basis: Vec<(usize, Vec<F>)> = Vec::new();
    let mut chosen = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if basis.len() == cols {
            break;
        }
        let mut v: Vec<F> = row.iter().map(|&x| F::from_i64(x)).collect();
        for (pivot, b) in &basis {
            let factor = v[*pivot];
            if !factor.is_zero() {
                v.iter_mut().zip(b).skip(*pivot).for_each(|(x, &y)| *x = *x - factor * y);
            }
        }
        if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[pivot].inverse();
            v.iter_mut().for_each(|x| *x = *x * inv);
            basis.push((pivot, v));
            chosen.push(i);
        }
    }
    chosen
}

/// Rank of an integer matrix modulo each of [`ORACLE_PRIMES`].
pub fn modular_rank(rows: &[Vec<i64>], cols: usize) -> [usize; 3] {
    [rank_mod::<P0>(rows, cols), rank_mod::<P1>(rows, cols), rank_mod::<P2>(rows, cols)]
}
