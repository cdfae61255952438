// Dense polynomials over GF(p), coefficients low degree first, no trailing
// zeros (the zero polynomial is empty).

pub(crate) type FpPoly = Vec<u64>;

pub(crate) fn trim(a: &mut FpPoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let len = a.len().max(b.len());
    let mut out: FpPoly = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    let p128 = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] = (acc[i + j] + x as u128 * y as u128) % p128;
        }
    }
    let mut out: FpPoly = acc.into_iter().map(|v| v as u64).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let mut quot = vec![0u64; rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let coef = mul_mod(*rem.last().unwrap(), lead_inv, p);
        quot[shift] = coef;
        for (i, &bc) in b.iter().enumerate() {
            let t = mul_mod(coef, bc, p);
            rem[shift + i] = (rem[shift + i] + p - t) % p;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn rem(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    divrem(a, b, p).1
}

pub(crate) fn mulmod(a: &FpPoly, b: &FpPoly, m: &FpPoly, p: u64) -> FpPoly {
    rem(&mul(a, b, p), m, p)
}

pub(crate) fn powmod(base: &FpPoly, mut exp: u64, m: &FpPoly, p: u64) -> FpPoly {
    let mut acc = rem(&vec![1], m, p);
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm, `None`
/// when they are not coprime.
pub(crate) fn inv_poly_mod(a: &FpPoly, m: &FpPoly, p: u64) -> Option<FpPoly> {
    let (mut r0, mut r1) = (m.clone(), rem(a, m, p));
    let (mut s0, mut s1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = inv_mod(r0[0], p);
    Some(rem(&mul(&s0, &vec![c], p), m, p))
}

/// Rabin's irreducibility test for a monic `f` of degree `m >= 1`.
pub(crate) fn is_irreducible(f: &FpPoly, p: u64) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    let x: FpPoly = vec![0, 1];
    // x^(p^j) mod f for j = 0..=m
    let mut frob = vec![rem(&x, f, p)];
    for _ in 0..m {
        let next = powmod(frob.last().unwrap(), p, f, p);
        frob.push(next);
    }
    if !sub(&frob[m], &frob[0], p).is_empty() {
        return false;
    }
    crate::exactmath::prime_divisors(m as u64).into_iter().all(|r| {
        let h = sub(&frob[m / r as usize], &x, p);
        gcd(&h, f, p).len() == 1
    })
}
