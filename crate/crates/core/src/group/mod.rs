//! Finite groups as validated Cayley tables.
//!
//! Every group is stored as a dense multiplication table over the element ids
//! `0..n`, with the identity always at id 0. Constructors in [`construct`] and
//! [`perm`] build the table, then hand it to the shared validator, so every
//! `GroupTable` in circulation has passed the same axiom checks.

pub mod abelian;
pub mod construct;
pub mod iso;
pub mod perm;
pub mod subgroup;
pub mod zoo;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub use abelian::{abelian_groups_up_to, invariant_factors, is_abelian, is_cyclic, AbelianBasis};
pub use construct::{
    make_cyclic, make_dicyclic, make_dihedral, make_direct_product, make_semidirect,
};
pub use perm::{make_alternating, make_symmetric};
pub use subgroup::{quotient, subgroup_table, SubgroupSet};

/// Default cap on group orders built by the factorial constructors (|S_7|).
pub const DEFAULT_MAX_ORDER: usize = 5040;

/// Associativity is checked on every triple up to this order.
pub const EXHAUSTIVE_ASSOC_MAX: usize = 256;

/// Number of random triples checked above [`EXHAUSTIVE_ASSOC_MAX`].
pub const SAMPLED_ASSOC_TRIPLES: usize = 10_000;

/// An element of a finite group, as a dense index into its Cayley table.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for ElementId {
    #[inline]
    fn from(i: usize) -> Self {
        ElementId(i as u32)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How a group was built. Used for reporting only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Product(Box<Recipe>, Box<Recipe>),
    Semidirect(Box<Recipe>, Box<Recipe>),
    Quotient { parent: Box<Recipe>, projection: Vec<ElementId> },
    Subgroup { parent: Box<Recipe>, elements: Vec<ElementId> },
    Table(String),
    Named(String),
}

impl Recipe {
    fn is_atomic(&self) -> bool {
        matches!(
            self,
            Recipe::Cyclic(_)
                | Recipe::Dihedral(_)
                | Recipe::Dicyclic(_)
                | Recipe::Symmetric(_)
                | Recipe::Alternating(_)
                | Recipe::Named(_)
        )
    }

    /// The coset projection map, when this group is a quotient.
    pub fn projection(&self) -> Option<&[ElementId]> {
        match self {
            Recipe::Quotient { projection, .. } => Some(projection),
            _ => None,
        }
    }
}

fn fmt_ids(f: &mut fmt::Formatter<'_>, ids: &[ElementId]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, x) in ids.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, r: &Recipe| -> fmt::Result {
            if r.is_atomic() || matches!(r, Recipe::Product(..)) {
                write!(f, "{r}")
            } else {
                write!(f, "({r})")
            }
        };
        match self {
            Recipe::Cyclic(n) => write!(f, "C{n}"),
            Recipe::Dihedral(n) => write!(f, "D{n}"),
            Recipe::Dicyclic(n) => write!(f, "Dic{n}"),
            Recipe::Symmetric(n) => write!(f, "S{n}"),
            Recipe::Alternating(n) => write!(f, "A{n}"),
            Recipe::Product(a, b) => {
                wrap(f, a)?;
                write!(f, "x")?;
                wrap(f, b)
            }
            Recipe::Semidirect(n, h) => {
                wrap(f, n)?;
                write!(f, ":")?;
                wrap(f, h)
            }
            Recipe::Quotient { parent, projection } => {
                wrap(f, parent)?;
                let kernel: Vec<ElementId> = projection
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.index() == 0)
                    .map(|(i, _)| ElementId::from(i))
                    .collect();
                write!(f, "/")?;
                fmt_ids(f, &kernel)
            }
            Recipe::Subgroup { parent, elements } => {
                wrap(f, parent)?;
                write!(f, "<")?;
                fmt_ids(f, elements)?;
                write!(f, ">")
            }
            Recipe::Table(src) => write!(f, "table:{src}"),
            Recipe::Named(name) => write!(f, "{name}"),
        }
    }
}

impl Serialize for Recipe {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which associativity check a table passed.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AssocCheck {
    Exhaustive,
    Sampled,
}

/// A finite group given by its Cayley table. Immutable after construction.
#[derive(Clone, Debug)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elt_order: Vec<u32>,
    recipe: Recipe,
    assoc: AssocCheck,
}

impl PartialEq for GroupTable {
    /// Tables are compared as tables; the recipe is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl GroupTable {
    /// Validates a row-major table whose identity is already at id 0.
    pub(crate) fn validated(order: usize, mul: Vec<u32>, recipe: Recipe) -> Result<Self> {
        debug_assert_eq!(mul.len(), order * order);
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::NoIdentity);
            }
        }
        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row
                .iter()
                .position(|&v| v == 0)
                .ok_or(Error::MissingInverse(x.into()))?;
            if mul[y * order + x] != 0 {
                return Err(Error::MissingInverse(x.into()));
            }
            inv[x] = y as u32;
        }
        check_latin(order, &mul, &inv)?;
        let assoc = check_associativity(order, &mul)?;
        let mut g = GroupTable { order, mul, inv, elt_order: Vec::new(), recipe, assoc };
        let mut elt_order = Vec::with_capacity(order);
        for x in 0..order {
            let mut k = 1usize;
            let mut acc = x;
            while acc != 0 {
                acc = g.mul[acc * order + x] as usize;
                k += 1;
                if k > order {
                    // An element of order > n cannot exist in a group.
                    return Err(Error::Lagrange {
                        element: x.into(),
                        element_order: k,
                        group_order: order,
                    });
                }
            }
            if !order.is_multiple_of(k) {
                return Err(Error::Lagrange { element: x.into(), element_order: k, group_order: order });
            }
            elt_order.push(k as u32);
        }
        g.elt_order = elt_order;
        Ok(g)
    }

    /// Ingests an arbitrary square table. The identity is moved to id 0 by
    /// swapping labels if necessary.
    pub fn from_cayley_table(raw: &[Vec<usize>]) -> Result<Self> {
        Self::from_cayley_table_with_source(raw, "inline")
    }

    pub fn from_cayley_table_with_source(raw: &[Vec<usize>], source: &str) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(Error::InvalidOrder { what: "Cayley table", n });
        }
        for (r, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), expected: n });
            }
            if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::EntryOutOfRange { row: r, col: c, value: v });
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| raw[e][x] == x && raw[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        let relabel = |x: usize| -> usize {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(raw[a][b]) as u32;
            }
        }
        Self::validated(n, mul, Recipe::Table(source.to_string()))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        ElementId(self.inv[a.index()])
    }

    #[inline]
    pub fn elt_order(&self, a: ElementId) -> usize {
        self.elt_order[a.index()] as usize
    }

    pub fn elt_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.elt_order.iter().map(|&k| k as usize)
    }

    pub fn pow(&self, a: ElementId, k: usize) -> ElementId {
        let k = k % self.elt_order(a);
        (0..k).fold(ElementId::IDENTITY, |acc, _| self.mul(acc, a))
    }

    pub fn conj(&self, g: ElementId, h: ElementId) -> ElementId {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.order as u32).map(ElementId)
    }

    pub fn recipe(&self) -> &Recipe {
        &self.recipe
    }

    pub fn with_recipe(mut self, recipe: Recipe) -> Self {
        self.recipe = recipe;
        self
    }

    pub fn named(self, name: &str) -> Self {
        self.with_recipe(Recipe::Named(name.to_string()))
    }

    pub fn assoc_check(&self) -> AssocCheck {
        self.assoc
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// The table as nested rows, for export.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Count of elements having each order, as (order, count) pairs sorted by order.
    pub fn order_profile(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for k in self.elt_orders() {
            *counts.entry(k).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }
}

/// A repeated entry a*b = a*c in a row means (a^-1 a) b != a^-1 (a b) for b or c.
fn check_latin(n: usize, mul: &[u32], inv: &[u32]) -> Result<()> {
    let m = |a: usize, b: usize| mul[a * n + b] as usize;
    let mut seen = vec![usize::MAX; n];
    for a in 0..n {
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        for b in 0..n {
            let v = m(a, b);
            if seen[v] != usize::MAX {
                let ai = inv[a] as usize;
                let c = if m(ai, v) != b { b } else { seen[v] };
                return Err(Error::NotAssociative { a: ai.into(), b: a.into(), c: c.into() });
            }
            seen[v] = b;
        }
    }
    for b in 0..n {
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        for a in 0..n {
            let v = m(a, b);
            if seen[v] != usize::MAX {
                let bi = inv[b] as usize;
                let c = if m(v, bi) != a { a } else { seen[v] };
                return Err(Error::NotAssociative { a: c.into(), b: b.into(), c: bi.into() });
            }
            seen[v] = a;
        }
    }
    Ok(())
}

fn check_associativity(n: usize, mul: &[u32]) -> Result<AssocCheck> {
    let m = |a: usize, b: usize| mul[a * n + b] as usize;
    let check = |a: usize, b: usize, c: usize| -> Result<()> {
        if m(m(a, b), c) != m(a, m(b, c)) {
            Err(Error::NotAssociative { a: a.into(), b: b.into(), c: c.into() })
        } else {
            Ok(())
        }
    };
    if n <= EXHAUSTIVE_ASSOC_MAX {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
        Ok(AssocCheck::Exhaustive)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a550c);
        for _ in 0..SAMPLED_ASSOC_TRIPLES {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            check(a, b, c)?;
        }
        Ok(AssocCheck::Sampled)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> Vec<Vec<usize>> {
        vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]]
    }

    #[test]
    fn trivial_table() {
        let g = GroupTable::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.elt_order(ElementId(0)), 1);
    }

    #[test]
    fn klein_table_is_abelian() {
        let g = GroupTable::from_cayley_table(&klein()).unwrap();
        assert!(is_abelian(&g));
        assert!(!is_cyclic(&g));
        assert_eq!(g.assoc_check(), AssocCheck::Exhaustive);
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // Z/3 with identity stored at label 2.
        let raw = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = GroupTable::from_cayley_table(&raw).unwrap();
        assert_eq!(g.mul(ElementId(0), ElementId(1)), ElementId(1));
        assert_eq!(g.elt_order(ElementId(1)), 3);
    }

    #[test]
    fn non_associative_latin_square_is_rejected_with_witness() {
        // An order-5 loop (latin square with identity, every element an
        // involution) that is not a group.
        let raw = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        // latin square check
        for r in &raw {
            let mut s = r.clone();
            s.sort();
            assert_eq!(s, vec![0, 1, 2, 3, 4]);
        }
        for c in 0..5 {
            let mut s: Vec<usize> = raw.iter().map(|r| r[c]).collect();
            s.sort();
            assert_eq!(s, vec![0, 1, 2, 3, 4]);
        }
        match GroupTable::from_cayley_table(&raw) {
            Err(Error::NotAssociative { a, b, c }) => {
                let m = |x: ElementId, y: ElementId| raw[x.index()][y.index()];
                assert_ne!(
                    m(ElementId::from(m(a, b)), c),
                    m(a, ElementId::from(m(b, c)))
                );
            }
            other => panic!("expected associativity error, got {other:?}"),
        }
    }

    #[test]
    fn missing_identity_and_bad_entries() {
        assert_eq!(
            GroupTable::from_cayley_table(&[vec![1, 1], vec![1, 1]]),
            Err(Error::NoIdentity)
        );
        assert!(matches!(
            GroupTable::from_cayley_table(&[vec![0, 5], vec![1, 0]]),
            Err(Error::EntryOutOfRange { .. })
        ));
        assert!(matches!(
            GroupTable::from_cayley_table(&[vec![0, 1], vec![1]]),
            Err(Error::NotSquare { .. })
        ));
        // identity present, but 1 has no inverse
        let raw = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]];
        assert_eq!(GroupTable::from_cayley_table(&raw), Err(Error::MissingInverse(ElementId(1))));
    }
}
