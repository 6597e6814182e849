//! Small integer helpers shared by every module.

use num_integer::Integer;

/// gcd of an iterator of nonnegative integers; the empty gcd is 0.
pub fn gcd_all<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    values.into_iter().fold(0, |acc, v| acc.gcd(&v))
}

/// All positive divisors of `m`, ascending. `m` must be positive.
pub fn divisors(m: u64) -> Vec<u64> {
    assert!(m > 0, "divisors of zero are not a finite list");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient by trial factorisation.
pub fn totient(m: u64) -> u64 {
    assert!(m > 0);
    let mut result = m;
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

/// gcd with the convention gcd(n, 0) = n.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
