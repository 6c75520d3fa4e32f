//! Symmetric and alternating groups, built by closing a generating set of
//! permutations and flattening the result to a Cayley table.

use std::collections::HashSet;

use super::{GroupTable, Recipe, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};

pub type Perm = Vec<u8>;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `(p ∘ q)(i) = p(q(i))`.
pub fn compose(p: &[u8], q: &[u8]) -> Perm {
    q.iter().map(|&i| p[i as usize]).collect()
}

pub fn is_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

/// Position of `p` in the lexicographic order of all permutations of its degree.
pub fn lex_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank += smaller * factorial(n - 1 - i);
    }
    rank
}

/// Breadth-first closure of `gens` under composition.
pub fn closure(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let identity: Perm = (0..degree as u8).collect();
    let mut seen: HashSet<Perm> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = compose(&p, g);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// Flattens a closed set of permutations into a Cayley table. Elements are
/// sorted lexicographically, which puts the identity at id 0.
pub fn table_from_perms(degree: usize, mut perms: Vec<Perm>, recipe: Recipe) -> Result<GroupTable> {
    perms.sort();
    let n = perms.len();
    let mut index = vec![u32::MAX; factorial(degree)];
    for (i, p) in perms.iter().enumerate() {
        index[lex_rank(p)] = i as u32;
    }
    let mut mul = Vec::with_capacity(n * n);
    for a in &perms {
        for b in &perms {
            let c = index[lex_rank(&compose(a, b))];
            if c == u32::MAX {
                return Err(Error::NotSubgroup("permutation set is not closed".into()));
            }
            mul.push(c);
        }
    }
    GroupTable::validated(n, mul, recipe)
}

fn generators_symmetric(n: usize) -> Vec<Perm> {
    if n < 2 {
        return Vec::new();
    }
    let mut swap: Perm = (0..n as u8).collect();
    swap.swap(0, 1);
    let cycle: Perm = (0..n as u8).map(|i| (i + 1) % n as u8).collect();
    vec![swap, cycle]
}

fn generators_alternating(n: usize) -> Vec<Perm> {
    // the 3-cycles (0 1 k)
    (2..n)
        .map(|k| {
            let mut p: Perm = (0..n as u8).collect();
            p[0] = 1;
            p[1] = k as u8;
            p[k] = 0;
            p
        })
        .collect()
}

pub fn make_symmetric(n: usize) -> Result<GroupTable> {
    make_symmetric_with_cap(n, DEFAULT_MAX_ORDER)
}

pub fn make_symmetric_with_cap(n: usize, cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidOrder { what: "symmetric group", n });
    }
    let order = factorial(n);
    if order > cap {
        return Err(Error::SizeLimit { order, cap });
    }
    let perms = closure(n, &generators_symmetric(n));
    debug_assert_eq!(perms.len(), order);
    table_from_perms(n, perms, Recipe::Symmetric(n))
}

pub fn make_alternating(n: usize) -> Result<GroupTable> {
    make_alternating_with_cap(n, DEFAULT_MAX_ORDER)
}

pub fn make_alternating_with_cap(n: usize, cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidOrder { what: "alternating group", n });
    }
    let order = factorial(n).div_ceil(2);
    if order > cap {
        return Err(Error::SizeLimit { order, cap });
    }
    let perms = closure(n, &generators_alternating(n));
    debug_assert!(perms.iter().all(|p| is_even(p)));
    table_from_perms(n, perms, Recipe::Alternating(n))
}

/// Element id of a permutation in `make_symmetric(p.len())`.
pub fn symmetric_element(p: &[u8]) -> super::ElementId {
    lex_rank(p).into()
}

/// Permutation from 1-based disjoint cycles, e.g. `[[1, 2], [3, 4, 5]]`.
pub fn from_cycles(degree: usize, cycles: &[&[u8]]) -> Perm {
    let mut p: Perm = (0..degree as u8).collect();
    for c in cycles {
        for (i, &x) in c.iter().enumerate() {
            p[x as usize - 1] = c[(i + 1) % c.len()] - 1;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_abelian, ElementId};

    #[test]
    fn orders() {
        for n in 1..=5 {
            assert_eq!(make_symmetric(n).unwrap().order(), factorial(n));
            assert_eq!(make_alternating(n).unwrap().order(), factorial(n).div_ceil(2));
        }
        assert!(matches!(make_symmetric(8), Err(Error::SizeLimit { order: 40320, cap: 5040 })));
        assert!(make_symmetric_with_cap(4, 23).is_err());
    }

    #[test]
    fn lex_rank_is_a_bijection() {
        let all = closure(4, &generators_symmetric(4));
        let mut ranks: Vec<usize> = all.iter().map(|p| lex_rank(p)).collect();
        ranks.sort();
        assert_eq!(ranks, (0..24).collect::<Vec<_>>());
    }

    #[test]
    fn alternating_four_contains_klein() {
        let a4 = make_alternating(4).unwrap();
        assert_eq!(a4.elt_orders().filter(|&k| k == 2).count(), 3);
        let invols: Vec<ElementId> = a4.elements().filter(|&x| a4.elt_order(x) == 2).collect();
        // the three involutions with the identity are closed under products
        for &x in &invols {
            for &y in &invols {
                let z = a4.mul(x, y);
                assert!(z == ElementId(0) || invols.contains(&z));
            }
        }
        assert!(!is_abelian(&a4));
    }

    #[test]
    fn cycle_notation() {
        let p = from_cycles(5, &[&[1, 2], &[3, 4, 5]]);
        assert_eq!(p, vec![1, 0, 3, 4, 2]);
        let s5 = make_symmetric(5).unwrap();
        assert_eq!(s5.elt_order(symmetric_element(&p)), 6);
    }
}
