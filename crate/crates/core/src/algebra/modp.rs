//! Arithmetic modulo a word-sized prime, for fast randomized probes.
//!
//! Only the operations the probes need are provided: reducing rationals and
//! computing ranks of small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::Scalar;

/// Deterministic primality test for `u64` by trial division up to `sqrt(n)`.
/// Fine for the moduli the CLI accepts.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse by Fermat's little theorem; `p` must be prime and `a != 0 mod p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Image of a rational in `F_p`, or `None` if `p` divides the denominator.
pub fn reduce(x: &Scalar, p: u64) -> Option<u64> {
    let den = bigint_mod(x.denom(), p);
    if den == 0 {
        return None;
    }
    Some(mul_mod(bigint_mod(x.numer(), p), inv_mod(den, p), p))
}

/// Rank of a dense row-major `rows x cols` matrix over `F_p`.
pub fn rank_mod(rows: usize, cols: usize, entries: &[u64], p: u64) -> usize {
    let mut m = entries.to_vec();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            m.swap(piv * cols + j, rank * cols + j);
        }
        let inv = inv_mod(m[rank * cols + c], p);
        for i in rank + 1..rows {
            let f = mul_mod(m[i * cols + c], inv, p);
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mul_mod(f, m[rank * cols + j], p);
                m[i * cols + j] = (m[i * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant over `F_p` of a square row-major matrix.
pub fn det_mod(n: usize, entries: &[u64], p: u64) -> u64 {
    let mut m = entries.to_vec();
    let mut det = 1 % p;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| m[i * n + c] != 0) else {
            return 0;
        };
        if piv != c {
            for j in 0..n {
                m.swap(piv * n + j, c * n + j);
            }
            det = (p - det) % p;
        }
        det = mul_mod(det, m[c * n + c], p);
        let inv = inv_mod(m[c * n + c], p);
        for i in c + 1..n {
            let f = mul_mod(m[i * n + c], inv, p);
            if f == 0 {
                continue;
            }
            for j in c..n {
                let sub = mul_mod(f, m[c * n + j], p);
                m[i * n + j] = (m[i * n + j] + p - sub) % p;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(101) && is_prime(1_000_000_007));
        assert!(!is_prime(1) && !is_prime(91) && !is_prime(0));
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce(&frac(1, 2), 7), Some(4));
        assert_eq!(reduce(&frac(-1, 1), 7), Some(6));
        assert_eq!(reduce(&frac(1, 7), 7), None);
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(rank_mod(2, 2, &[1, 2, 2, 4], 101), 1);
        assert_eq!(det_mod(2, &[1, 2, 3, 4], 101), 99);
        // singular only mod 5
        assert_eq!(det_mod(2, &[1, 2, 3, 1], 5), 0);
    }
}
