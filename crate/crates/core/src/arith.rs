//! Small integer helpers.

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Prime factorization as `(p, k)` pairs in increasing `p`.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: usize) -> Vec<usize> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn smallest_prime_factor(n: usize) -> Option<usize> {
    factorize(n).first().map(|&(p, _)| p)
}

pub fn euler_phi(n: usize) -> usize {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Integer partitions of `k` into non-increasing positive parts.
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(euler_phi(36), 12);
        assert_eq!(partitions(4).len(), 5);
        assert!(is_prime(97) && !is_prime(91) && !is_prime(1));
        assert_eq!(prime_divisors(60), vec![2, 3, 5]);
    }
}
