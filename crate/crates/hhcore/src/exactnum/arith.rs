//! Elementary arithmetic facts about q^n - 1 and p^a = r^b + 1.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::primes::{factor, factor_big, is_prime, mult_order, spf_sieve};
use super::zpoly::cyclotomic;
use crate::error::{Error, Result};

/// Primes p | q^n - 1 with mult_order(q, p) = n.
pub fn primitive_prime_divisors(q: u64, n: u64) -> Result<Vec<u64>> {
    if q < 2 || n < 1 {
        return Err(Error::Precondition("need q >= 2, n >= 1".into()));
    }
    let v = cyclotomic(n as usize).eval_i64(q as i64);
    let v = v.to_biguint().expect("cyclotomic value positive");
    let mut out: Vec<u64> = factor_big(&v)?
        .into_iter()
        .map(|(p, _)| p)
        .filter(|&p| q % p != 0 && mult_order(q, p).ok() == Some(n))
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ZgmClause {
    /// p = 2, b = 1, r Mersenne
    Mersenne,
    /// r = 2, a = 1, p Fermat
    Fermat,
    /// p^a = 9
    Nine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZgmSolution {
    pub p: u64,
    pub a: u32,
    pub r: u64,
    pub b: u32,
    pub clause: ZgmClause,
}

/// All (p, a, r, b) with p^a = r^b + 1 <= bound.
pub fn zgm_solutions(bound: u64) -> Result<Vec<ZgmSolution>> {
    if bound < 2 {
        return Err(Error::Precondition("bound must be at least 2".into()));
    }
    let spf = spf_sieve(bound as usize);
    let prime_power = |x: u64| -> Option<(u64, u32)> {
        if x < 2 {
            return None;
        }
        let p = spf[x as usize] as u64;
        let mut m = x;
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        (m == 1).then_some((p, e))
    };
    let mut out = Vec::new();
    for x in 3..=bound {
        let (Some((p, a)), Some((r, b))) = (prime_power(x), prime_power(x - 1)) else {
            continue;
        };
        let clause = if x == 9 {
            ZgmClause::Nine
        } else if p == 2 && b == 1 {
            ZgmClause::Mersenne
        } else if r == 2 && a == 1 {
            ZgmClause::Fermat
        } else {
            return Err(Error::Internal(format!("{x} = {r}^{b} + 1 fits no clause")));
        };
        out.push(ZgmSolution { p, a, r, b, clause });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivCheck {
    pub residue: u64,
    pub holds: bool,
}

/// (q^p - 1)/(q - 1) mod p^2, compared with p.
pub fn div_congruence(p: u64, q: u64) -> Result<DivCheck> {
    if !is_prime(p) || q < 2 || (q - 1) % p != 0 || (p == 2 && (q - 1) % 4 != 0) {
        return Err(Error::Precondition(format!("div_congruence({p}, {q})")));
    }
    let bq = BigUint::from(q);
    let v = (bq.pow(p as u32) - BigUint::one()) / (&bq - BigUint::one());
    let residue = (v % BigUint::from(p * p)).to_u64().unwrap();
    Ok(DivCheck {
        residue,
        holds: residue == p,
    })
}

/// Whether n is a Fermat prime 2^k + 1.
pub fn is_fermat_prime(n: u64) -> bool {
    n >= 3 && is_prime(n) && (n - 1).is_power_of_two()
}

pub fn is_mersenne_prime(n: u64) -> bool {
    is_prime(n) && (n + 1).is_power_of_two()
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::primes::pow_mod;

    #[test]
    fn ppd_examples() {
        assert!(primitive_prime_divisors(2, 6).unwrap().is_empty());
        assert_eq!(primitive_prime_divisors(2, 11).unwrap(), vec![23, 89]);
        assert!(primitive_prime_divisors(2, 1).unwrap().is_empty());
    }

    #[test]
    fn ppd_matches_brute_force() {
        for q in 2..=32u64 {
            for n in 1..=12u64 {
                let qn = (q as u128).pow(n as u32) - 1;
                let Ok(qn) = u64::try_from(qn) else { continue };
                let got = primitive_prime_divisors(q, n).unwrap();
                let want: Vec<u64> = factor(qn)
                    .into_iter()
                    .map(|(p, _)| p)
                    .filter(|&p| (1..n).all(|k| pow_mod(q, k, p) != 1))
                    .collect();
                assert_eq!(got, want, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn zgm_small() {
        let s = zgm_solutions(10).unwrap();
        let t: Vec<(u64, ZgmClause)> = s.iter().map(|z| (z.p.pow(z.a), z.clause)).collect();
        assert_eq!(
            t,
            vec![
                (3, ZgmClause::Fermat),
                (4, ZgmClause::Mersenne),
                (5, ZgmClause::Fermat),
                (8, ZgmClause::Mersenne),
                (9, ZgmClause::Nine)
            ]
        );
    }

    #[test]
    fn div_examples() {
        assert_eq!(
            div_congruence(3, 4).unwrap(),
            DivCheck {
                residue: 3,
                holds: true
            }
        );
        assert_eq!(
            div_congruence(2, 5).unwrap(),
            DivCheck {
                residue: 2,
                holds: true
            }
        );
        assert_eq!(div_congruence(5, 11).unwrap().residue, 5);
        assert!(div_congruence(2, 3).is_err());
        assert!(div_congruence(3, 5).is_err());
        for p in [3u64, 5, 7, 11] {
            for q in (p + 1..500).step_by(p as usize) {
                assert!(div_congruence(p, q).unwrap().holds);
            }
        }
    }
}
