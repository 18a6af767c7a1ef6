//! Integer number theory on machine words: primality, factoring, orders.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as sorted (prime, exponent) pairs.
pub fn factor(n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    let mut m = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while m % p == 0 {
            primes.push(p);
            m /= p;
        }
    }
    let mut stack = vec![m];
    while let Some(x) = stack.pop() {
        if x == 1 {
            continue;
        }
        if is_prime(x) {
            primes.push(x);
            continue;
        }
        let d = rho(x);
        stack.push(d);
        stack.push(x / d);
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Factor an arbitrary-size integer whose prime factors all fit in u64.
pub fn factor_big(n: &BigUint) -> Result<Vec<(u64, u32)>> {
    if let Some(v) = n.to_u64() {
        return Ok(factor(v));
    }
    let mut m = n.clone();
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut p = 2u64;
    while p < 1 << 20 {
        let bp = BigUint::from(p);
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        if let Some(v) = m.to_u64() {
            for (q, e) in factor(v) {
                match out.iter_mut().find(|(r, _)| *r == q) {
                    Some(x) => x.1 += e,
                    None => out.push((q, e)),
                }
            }
            out.sort_unstable();
            return Ok(out);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    Err(Error::TooLarge(format!("cannot factor {n}")))
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    factor(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Returns (p, a) if n = p^a with a >= 1.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factor(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// Least k >= 1 with p | q^k - 1.
pub fn mult_order(q: u64, p: u64) -> Result<u64> {
    if p < 2 || q % p == 0 {
        return Err(Error::Precondition(format!("mult_order: {p} divides {q}")));
    }
    let m = p - 1;
    let mut k = m;
    for (r, _) in factor(m.max(1)) {
        while k % r == 0 && pow_mod(q, k / r, p) == 1 {
            k /= r;
        }
    }
    if m == 0 {
        k = 1;
    }
    Ok(k)
}

/// Multiplicative order of a modulo m (gcd(a,m) = 1).
pub fn order_mod(a: u64, m: u64) -> u64 {
    let mut k = 1u64;
    let mut x = a % m;
    while x != 1 % m {
        x = mul_mod(x, a, m);
        k += 1;
    }
    k
}

pub fn p_part(n: u64, p: u64) -> u64 {
    let mut r = 1;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        r *= p;
    }
    r
}

pub fn p_part_big(n: &BigUint, p: u64) -> BigUint {
    let bp = BigUint::from(p);
    let mut r = BigUint::one();
    let mut m = n.clone();
    while (&m % &bp).is_zero() {
        m /= &bp;
        r *= &bp;
    }
    r
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

/// Smallest prime r > lower with r = 1 mod m.
pub fn prime_one_mod(m: u64, lower: u64) -> u64 {
    let mut r = (lower / m + 1) * m + 1;
    while !is_prime(r) {
        r += m;
    }
    r
}

/// Sieve of smallest prime factors up to n.
pub fn spf_sieve(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_multiply_back() {
        for n in [
            1u64,
            2,
            63,
            2047,
            8191,
            600851475143,
            (1 << 61) - 1,
            1_000_000_007 * 998_244_353,
        ] {
            let f = factor(n);
            let prod: u64 = f.iter().map(|(p, e)| p.pow(*e)).product();
            assert_eq!(prod, n);
            assert!(f.iter().all(|(p, _)| is_prime(*p)));
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        let brute = (1..=9u64).filter(|j| j.gcd(&9) == 1).count() as u64;
        assert_eq!(euler_phi(9), brute);
        assert_eq!(euler_phi(8191), 8190);
    }

    #[test]
    fn mult_orders() {
        assert_eq!(mult_order(2, 3).unwrap(), 2);
        assert_eq!(mult_order(2, 7).unwrap(), 3);
        assert_eq!(mult_order(3, 5).unwrap(), 4);
        assert!(mult_order(4, 2).is_err());
        for q in 2..40u64 {
            for p in [3u64, 5, 7, 11, 13] {
                if q % p == 0 {
                    continue;
                }
                let k = (1..).find(|&k| pow_mod(q, k, p) == 1).unwrap();
                assert_eq!(mult_order(q, p).unwrap(), k);
            }
        }
    }

    #[test]
    fn dixon_prime() {
        assert_eq!(prime_one_mod(2520, 2409), 2521);
    }
}
