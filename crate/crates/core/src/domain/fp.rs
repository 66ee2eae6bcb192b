//! Dense polynomials over the prime field `F_p`, little-endian `u64` coefficients.

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn add(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            ((x as u128 + y as u128) % p as u128) as u64
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn neg(p: u64, a: &[u64]) -> Vec<u64> {
    a.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect()
}

pub(crate) fn sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    add(p, a, &neg(p, b))
}

pub(crate) fn scale(p: u64, a: &[u64], c: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().map(|&x| mulmod(x, c, p)).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(p: u64, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = mulmod(*r.last().unwrap(), lead_inv, p);
        q[shift] = c;
        for (j, &y) in b.iter().enumerate() {
            let t = mulmod(c, y, p);
            r[shift + j] = (r[shift + j] + p - t) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-`p` digits of `index`, least significant digit first.
pub(crate) fn monic_from_index(p: u64, degree: usize, mut index: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(degree + 1);
    for _ in 0..degree {
        out.push(index % p);
        index /= p;
    }
    out.push(1);
    out
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most half the input's.
pub(crate) fn is_irreducible_brute(p: u64, a: &[u64]) -> bool {
    let deg = match a.len() {
        0 | 1 => return false,
        n => n - 1,
    };
    for d in 1..=deg / 2 {
        let count = p.saturating_pow(d as u32);
        for index in 0..count {
            let candidate = monic_from_index(p, d, index);
            if divrem(p, a, &candidate).1.is_empty() {
                return false;
            }
        }
    }
    true
}
