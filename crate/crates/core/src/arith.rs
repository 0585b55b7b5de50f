//! Small integer helpers shared by the combinatorial modules.

/// Exponent of `p` in `n`. Returns 0 for `n == 0`.
pub fn nu(mut n: u64, p: u64) -> u32 {
    debug_assert!(p >= 2);
    if n == 0 {
        return 0;
    }
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

/// Exponent of `p` in `n!` (Legendre).
pub fn nu_factorial(n: u64, p: u64) -> u32 {
    debug_assert!(p >= 2);
    let mut total = 0u64;
    let mut m = n / p;
    while m > 0 {
        total += m;
        m /= p;
    }
    total as u32
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Writes `q` as `p^f` when it is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut m = q;
    let mut f = 0;
    while m % p == 0 {
        m /= p;
        f += 1;
    }
    (m == 1).then_some((p, f))
}

/// Digits of `n` in base `p`, least significant first.
pub fn digits(mut n: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Möbius function.
pub fn mobius(mut n: u64) -> i32 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Multiplicative order of `q` modulo `p`; `None` when they share a factor.
pub fn multiplicative_order(q: u64, p: u64) -> Option<u64> {
    if gcd(q, p) != 1 {
        return None;
    }
    let q = q % p;
    let mut x = q;
    let mut k = 1;
    while x != 1 % p {
        x = x * q % p;
        k += 1;
    }
    Some(k)
}
