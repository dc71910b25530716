//! Rational-integer helpers: primality, factorization, the classical totient.

use num_integer::Integer;

/// A prime power `p^e` in a factorization.
pub type PrimePower = (u64, u32);

/// Largest modulus accepted anywhere in the crate. Keeps `d^2` inside `u64`
/// and every product of two such squares inside `u128`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// First twelve primes: a complete deterministic witness set below 3.3 * 10^24.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let odd = (n - 1) >> s;
    'witness: for a in MR_BASES {
        let mut x = pow_mod(a, odd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factorization by trial division, ascending primes. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<PrimePower> {
    assert!(n > 0, "factorize(0)");
    let mut out = Vec::new();
    let mut push = |n: &mut u64, p: u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(&mut n, 2);
    push(&mut n, 3);
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        push(&mut n, p);
        push(&mut n, p + 2);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_squarefree_factors(factors: &[PrimePower]) -> bool {
    factors.iter().all(|&(_, e)| e == 1)
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && is_squarefree_factors(&factorize(n))
}

/// Classical Euler totient from a factorization.
pub fn euler_phi_factors(factors: &[PrimePower]) -> u64 {
    factors
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

pub fn euler_phi(n: u64) -> u64 {
    euler_phi_factors(&factorize(n))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Smallest-prime-factor table for fast factorization over a range.
#[derive(Debug, Clone)]
pub struct Sieve {
    spf: Vec<u32>,
}

impl Sieve {
    /// Table covering `0..=limit`. `limit` must not exceed [`MAX_MODULUS`].
    pub fn new(limit: u64) -> Self {
        assert!(limit <= MAX_MODULUS);
        let len = limit as usize + 1;
        let mut spf = vec![0u32; len];
        for i in 2..len {
            if spf[i] != 0 {
                continue;
            }
            spf[i] = i as u32;
            let mut j = i.saturating_mul(i);
            while j < len {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
        Self { spf }
    }

    pub fn limit(&self) -> u64 {
        self.spf.len() as u64 - 1
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    /// Falls back to trial division above the table.
    pub fn factorize(&self, mut n: u64) -> Vec<PrimePower> {
        assert!(n > 0, "factorize(0)");
        if n > self.limit() {
            return factorize(n);
        }
        let mut out: Vec<PrimePower> = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
            n /= p;
        }
        out
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit()).filter(|&n| self.is_prime(n))
    }
}
