//! Abelian-group structure: commutativity, cyclicity, invariant factors and an
//! explicit cyclic decomposition.

use std::collections::HashMap;

use super::{make_cyclic, make_direct_product, quotient, ElementId, GroupTable, SubgroupSet};
use crate::arith::{factorize, partitions, prime_divisors};
use crate::error::{Error, Result};

pub fn is_abelian(g: &GroupTable) -> bool {
    g.elements().all(|a| g.elements().skip(a.index() + 1).all(|b| g.mul(a, b) == g.mul(b, a)))
}

pub fn is_cyclic(g: &GroupTable) -> bool {
    g.elt_orders().any(|k| k == g.order())
}

/// First element of maximal order (smallest id among ties).
fn max_order_element(g: &GroupTable) -> ElementId {
    g.elements()
        .max_by(|&a, &b| g.elt_order(a).cmp(&g.elt_order(b)).then(b.cmp(&a)))
        .unwrap_or(ElementId::IDENTITY)
}

/// Invariant factors `d_1 | d_2 | … | d_k` with product `|G|`, found by
/// repeatedly splitting off the cyclic subgroup of a maximal-order element.
/// The trivial group has no factors.
pub fn invariant_factors(g: &GroupTable) -> Result<Vec<usize>> {
    if !is_abelian(g) {
        return Err(Error::NotAbelian);
    }
    let mut out = Vec::new();
    let mut cur = g.clone();
    while cur.order() > 1 {
        let x = max_order_element(&cur);
        out.push(cur.elt_order(x));
        cur = quotient(&cur, &SubgroupSet::cyclic(&cur, x))?;
    }
    out.reverse();
    Ok(out)
}

/// An explicit isomorphism `C_{d_1} × … × C_{d_k} → G` for abelian `G`.
#[derive(Clone, Debug)]
pub struct AbelianBasis {
    /// Invariant factors, each dividing the next.
    pub factors: Vec<usize>,
    /// `generators[i]` has order `factors[i]`.
    pub generators: Vec<ElementId>,
    /// `coords[x]` is the exponent tuple of element `x`.
    pub coords: Vec<Vec<usize>>,
}

impl AbelianBasis {
    pub fn new(g: &GroupTable) -> Result<Self> {
        if !is_abelian(g) {
            return Err(Error::NotAbelian);
        }
        // (prime, [(generator, order)]) with orders non-increasing
        let mut sylow_bases = Vec::new();
        for p in prime_divisors(g.order()) {
            sylow_bases.push((p, primary_basis(g, p)?));
        }
        let k = sylow_bases.iter().map(|(_, b)| b.len()).max().unwrap_or(0);
        let mut factors = Vec::with_capacity(k);
        let mut generators = Vec::with_capacity(k);
        for j in 0..k {
            let mut d = 1;
            let mut gen = ElementId::IDENTITY;
            for (_, basis) in &sylow_bases {
                if let Some(&(x, q)) = basis.get(j) {
                    d *= q;
                    gen = g.mul(gen, x);
                }
            }
            factors.push(d);
            generators.push(gen);
        }
        factors.reverse();
        generators.reverse();

        let mut coords = vec![Vec::new(); g.order()];
        let mut assigned = vec![false; g.order()];
        let mut tuple = vec![0usize; k];
        loop {
            let x = tuple
                .iter()
                .zip(&generators)
                .fold(ElementId::IDENTITY, |acc, (&a, &s)| g.mul(acc, g.pow(s, a)));
            if std::mem::replace(&mut assigned[x.index()], true) {
                return Err(Error::UnsupportedGroup("cyclic decomposition is not injective".into()));
            }
            coords[x.index()] = tuple.clone();
            // odometer increment
            let mut i = 0;
            while i < k {
                tuple[i] += 1;
                if tuple[i] < factors[i] {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
        Ok(AbelianBasis { factors, generators, coords })
    }

    pub fn exponent(&self) -> usize {
        self.factors.last().copied().unwrap_or(1)
    }
}

/// Basis of the Sylow `p`-subgroup of an abelian group, as `(generator, order)`
/// pairs with non-increasing orders and the subgroup equal to their direct product.
fn primary_basis(g: &GroupTable, p: usize) -> Result<Vec<(ElementId, usize)>> {
    let is_p_power = |mut k: usize| {
        while k.is_multiple_of(p) {
            k /= p;
        }
        k == 1
    };
    let sylow: Vec<ElementId> = g.elements().filter(|&x| is_p_power(g.elt_order(x))).collect();
    let mut basis: Vec<(ElementId, usize)> = Vec::new();
    let mut span: HashMap<ElementId, Vec<usize>> = HashMap::from([(ElementId::IDENTITY, Vec::new())]);
    while span.len() < sylow.len() {
        // element of largest order modulo the current span
        let mut best: Option<(ElementId, usize, ElementId)> = None;
        for &x in &sylow {
            let mut q = 1;
            let mut y = x;
            while !span.contains_key(&y) {
                y = g.pow(y, p);
                q *= p;
            }
            if best.is_none_or(|(_, bq, _)| q > bq) {
                best = Some((x, q, y));
            }
        }
        let (x, q, h) = best.expect("sylow subgroup is nonempty");
        let mut adjusted = x;
        for (&(b, _), &s) in basis.iter().zip(&span[&h]) {
            if s % q != 0 {
                return Err(Error::UnsupportedGroup(format!(
                    "basis adjustment failed for p = {p}: {s} not divisible by {q}"
                )));
            }
            adjusted = g.mul(adjusted, g.inv(g.pow(b, s / q)));
        }
        debug_assert_eq!(g.elt_order(adjusted), q);
        basis.push((adjusted, q));
        span = span_of(g, &basis);
    }
    Ok(basis)
}

fn span_of(g: &GroupTable, basis: &[(ElementId, usize)]) -> HashMap<ElementId, Vec<usize>> {
    let mut out = HashMap::from([(ElementId::IDENTITY, Vec::new())]);
    for &(b, q) in basis {
        let mut next = HashMap::with_capacity(out.len() * q);
        for (x, c) in &out {
            let mut y = *x;
            for a in 0..q {
                let mut c2 = c.clone();
                c2.push(a);
                next.insert(y, c2);
                y = g.mul(y, b);
            }
        }
        out = next;
    }
    out
}

/// Kronecker forms of all abelian groups with `2 <= |G| <= max_order`, each as
/// a list of prime powers (primes increasing, powers non-increasing per prime).
pub fn kronecker_forms(max_order: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        let mut forms: Vec<Vec<usize>> = vec![Vec::new()];
        for (p, k) in factorize(n) {
            let mut next = Vec::new();
            for form in &forms {
                for part in partitions(k) {
                    let mut f = form.clone();
                    f.extend(part.iter().map(|&e| p.pow(e)));
                    next.push(f);
                }
            }
            forms = next;
        }
        out.extend(forms);
    }
    out
}

pub fn product_of_cyclics(orders: &[usize]) -> Result<GroupTable> {
    let mut it = orders.iter();
    let first = it.next().copied().unwrap_or(1);
    it.try_fold(make_cyclic(first)?, |acc, &n| make_direct_product(&acc, &make_cyclic(n)?))
}

/// Every abelian group of order in `2..=max_order`, one per isomorphism class.
pub fn abelian_groups_up_to(max_order: usize) -> Result<Vec<GroupTable>> {
    kronecker_forms(max_order).iter().map(|f| product_of_cyclics(f)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_dihedral;

    #[test]
    fn factors_of_small_groups() {
        assert_eq!(invariant_factors(&make_cyclic(6).unwrap()).unwrap(), vec![6]);
        assert_eq!(invariant_factors(&product_of_cyclics(&[2, 2]).unwrap()).unwrap(), vec![2, 2]);
        assert_eq!(invariant_factors(&product_of_cyclics(&[2, 6]).unwrap()).unwrap(), vec![2, 6]);
        assert_eq!(invariant_factors(&product_of_cyclics(&[4, 2, 3]).unwrap()).unwrap(), vec![2, 12]);
        assert_eq!(invariant_factors(&make_cyclic(1).unwrap()).unwrap(), Vec::<usize>::new());
        assert_eq!(invariant_factors(&make_dihedral(3).unwrap()), Err(Error::NotAbelian));
    }

    #[test]
    fn abelian_group_counts() {
        // number of abelian groups of order n for n = 2..=16
        let counts = [1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5];
        let forms = kronecker_forms(16);
        for (n, &c) in (2..=16).zip(&counts) {
            let found = forms.iter().filter(|f| f.iter().product::<usize>() == n).count();
            assert_eq!(found, c, "order {n}");
        }
    }

    #[test]
    fn basis_matches_invariant_factors() {
        for g in abelian_groups_up_to(64).unwrap() {
            let b = AbelianBasis::new(&g).unwrap();
            assert_eq!(b.factors, invariant_factors(&g).unwrap(), "{}", g.recipe());
            for w in b.factors.windows(2) {
                assert_eq!(w[1] % w[0], 0);
            }
            assert_eq!(b.factors.iter().product::<usize>(), g.order());
            // coordinates are additive
            for x in g.elements() {
                for y in g.elements() {
                    let z = g.mul(x, y);
                    for i in 0..b.factors.len() {
                        assert_eq!(
                            (b.coords[x.index()][i] + b.coords[y.index()][i]) % b.factors[i],
                            b.coords[z.index()][i]
                        );
                    }
                }
            }
        }
    }
}
