//! Small-integer number theory by trial division.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// True when no prime square divides `n`. `1` is square-free.
pub fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn divisor_count(n: u64) -> u64 {
    factorize(n).iter().map(|&(_, e)| u64::from(e) + 1).product()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Largest power of `p` dividing `n`, as `(p^e, e)`.
pub fn prime_part(mut n: u64, p: u64) -> (u64, u32) {
    let (mut pe, mut e) = (1, 0);
    while n > 0 && n % p == 0 {
        n /= p;
        pe *= p;
        e += 1;
    }
    (pe, e)
}

/// True when `n == p^k` for some `k >= 0`.
pub fn is_power_of(n: u64, p: u64) -> bool {
    n > 0 && prime_part(n, p).0 == n
}

/// `(p^d - 1) / (p - 1)`: the number of hyperplanes (equivalently lines) of `F_p^d`.
pub fn projective_count(p: u64, d: u32) -> u64 {
    (0..d).map(|i| p.pow(i)).sum()
}
