use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NtPack {
    pub mu: i64,
    pub phi: u64,
    pub j3: u64,
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factor(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn mobius(m: u64) -> i64 {
    assert!(m >= 1);
    let f = factor(m);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1);
    factor(m)
        .iter()
        .fold(m, |acc, &(p, _)| acc / p * (p - 1))
}

/// Jordan's totient J_3(m) = m^3 prod_{p|m} (1 - p^-3).
pub fn jordan3(m: u64) -> u64 {
    assert!(m >= 1);
    factor(m)
        .iter()
        .fold(m * m * m, |acc, &(p, _)| acc / (p * p * p) * (p * p * p - 1))
}

pub fn nt_pack(m: u64) -> NtPack {
    NtPack {
        mu: mobius(m),
        phi: euler_phi(m),
        j3: jordan3(m),
    }
}

pub fn divisors(m: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=m).filter(|k| m % k == 0).collect();
    d.sort_unstable();
    d
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(nt_pack(1), NtPack { mu: 1, phi: 1, j3: 1 });
        assert_eq!(nt_pack(4), NtPack { mu: 0, phi: 2, j3: 56 });
        // brute force: J_3(6) = #{triples mod 6 with gcd(a,b,c,6) = 1}
        let brute = (0..216u64)
            .filter(|t| {
                let (a, b, c) = (t % 6, (t / 6) % 6, t / 36);
                gcd(gcd(gcd(a, b), c), 6) == 1
            })
            .count() as u64;
        assert_eq!(nt_pack(6), NtPack { mu: 1, phi: 2, j3: brute });
        assert_eq!(brute, 182);
    }

    #[test]
    fn j3_against_oeis_prefix() {
        // A059376 starts 1, 7, 26, 56, 124, 182, 342, 448, 702, 868
        let want = [1, 7, 26, 56, 124, 182, 342, 448, 702, 868];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(jordan3(i as u64 + 1), *w);
        }
    }

    #[test]
    fn divisor_sums() {
        for m in 1..=200u64 {
            let ds = divisors(m);
            assert_eq!(ds.iter().map(|&d| jordan3(d)).sum::<u64>(), m * m * m);
            assert_eq!(ds.iter().map(|&d| euler_phi(d)).sum::<u64>(), m);
            let mu: i64 = ds.iter().map(|&d| mobius(d)).sum();
            assert_eq!(mu, if m == 1 { 1 } else { 0 });
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
