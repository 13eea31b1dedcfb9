//! Integer number theory used by the normalizers: factorization, radicals and
//! squarefreeness over arbitrary-precision integers.
//!
//! Factorization strips small primes by trial division and splits whatever is
//! left with Miller–Rabin and Brent's variant of Pollard's rho. The primality
//! test is deterministic below 3.3·10²⁴ (first thirteen prime bases).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

const TRIAL_LIMIT: u32 = 1 << 12;
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Prime factorization of `n` as `(prime, exponent)` pairs in ascending prime
/// order. `n = 0` and `n = 1` have no factors.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    if let Ok(small) = u64::try_from(n) {
        return factorize_u64(small).into_iter().map(|(p, e)| (BigUint::from(p), e)).collect();
    }
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut p: u32 = 2;
    while p < TRIAL_LIMIT {
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((BigUint::from(p), e));
        }
        if let Ok(small) = u64::try_from(&rest) {
            for (q, e) in factorize_u64(small) {
                out.push((BigUint::from(q), e));
            }
            return out;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut big = Vec::new();
    split_into_primes(rest, &mut big);
    big.sort();
    for f in big {
        match out.last_mut() {
            Some((q, e)) if *q == f => *e += 1,
            _ => out.push((f, 1)),
        }
    }
    out
}

fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut p: u64 = 2;
    while p < TRIAL_LIMIT as u64 && p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n == 1 {
        return out;
    }
    let mut big = Vec::new();
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if m < (TRIAL_LIMIT as u64).pow(2) || is_prime_u64(m) {
            big.push(m);
            continue;
        }
        let d = pollard_brent_u64(m);
        stack.push(m / d);
        stack.push(d);
    }
    big.sort_unstable();
    for f in big {
        match out.last_mut() {
            Some((q, e)) if *q == f => *e += 1,
            _ => out.push((f, 1)),
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
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

/// Deterministic for all `u64` with these bases.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &b in MR_BASES[..12].iter() {
        let b = b as u64;
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &b in MR_BASES[..12].iter() {
        let mut x = pow_mod(b as u64, d, n);
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

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pollard_brent_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let (mut r, mut q, mut g) = (1u64, 1u64, 1u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..64.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += 64;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn split_into_primes(n: BigUint, acc: &mut Vec<BigUint>) {
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            acc.push(m);
            continue;
        }
        if let Some(r) = exact_sqrt(&m) {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        let d = pollard_brent(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
}

fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Miller–Rabin with the first thirteen prime bases.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &b in MR_BASES.iter() {
        let bb = BigUint::from(b);
        if *n == bb {
            return true;
        }
        if (n % &bb).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for &b in MR_BASES.iter() {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial divisor of the odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m: u64 = 64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

/// Product of the distinct primes dividing `k`. `radical(±1) = 1`;
/// `radical(0)` is 0 by convention.
pub fn radical(k: &BigInt) -> BigInt {
    if k.is_zero() {
        return BigInt::zero();
    }
    let mut r = BigUint::one();
    for (p, _) in factorize(k.magnitude()) {
        r *= p;
    }
    BigInt::from(r)
}

pub fn is_squarefree(k: &BigUint) -> bool {
    !k.is_zero() && factorize(k).iter().all(|(_, e)| *e == 1)
}

/// Smallest `x` in `1..n` with `x·x ≡ 0 (mod n)`, i.e. a nonzero nilpotent of
/// ℤ/nℤ, if one exists.
pub fn first_nilpotent_residue(n: u64) -> Option<u64> {
    let n128 = n as u128;
    (1..n).find(|&x| (x as u128 * x as u128).is_multiple_of(n128))
}
