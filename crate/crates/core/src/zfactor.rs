//! Factorization of integer and rational polynomials: squarefree
//! decomposition, Cantor-Zassenhaus modulo a small prime, quadratic Hensel
//! lifting and exhaustive recombination.

use crate::error::{Error, Result};
use crate::{Int, QPoly, Rat, ZPoly};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

// ---- arithmetic mod a machine prime ----

fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = fp_mul(r, a, p);
        }
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    r
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

// ---- dense polynomials over F_p as Vec<u64>, ascending ----

type FpPoly = Vec<u64>;

fn fpp_trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fpp_deg(a: &FpPoly) -> usize {
    a.len().saturating_sub(1)
}

fn fpp_mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + fp_mul(x, y, p)) % p;
        }
    }
    fpp_trim(v)
}

fn fpp_rem(a: &FpPoly, m: &FpPoly, p: u64) -> FpPoly {
    if m.len() <= 1 {
        return vec![];
    }
    let mut r = a.clone();
    let inv = fp_inv(*m.last().unwrap(), p);
    while r.len() >= m.len() {
        let k = r.len() - m.len();
        let c = fp_mul(*r.last().unwrap(), inv, p);
        for (j, &mc) in m.iter().enumerate() {
            let t = fp_mul(c, mc, p);
            r[k + j] = (r[k + j] + p - t) % p;
        }
        r = fpp_trim(r);
    }
    r
}

fn fpp_divexact(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    // quotient of exact division
    let inv = fp_inv(*b.last().unwrap(), p);
    if b.len() == 1 {
        return fpp_trim(a.iter().map(|&c| fp_mul(c, inv, p)).collect());
    }
    let mut r = a.clone();
    let mut q = vec![0u64; a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = fp_mul(*r.last().unwrap(), inv, p);
        q[k] = c;
        for (j, &bc) in b.iter().enumerate() {
            let t = fp_mul(c, bc, p);
            r[k + j] = (r[k + j] + p - t) % p;
        }
        r = fpp_trim(r);
    }
    fpp_trim(q)
}

fn fpp_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = fpp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        return a;
    }
    let inv = fp_inv(*a.last().unwrap(), p);
    fpp_trim(a.iter().map(|&c| fp_mul(c, inv, p)).collect())
}

fn fpp_deriv(a: &FpPoly, p: u64) -> FpPoly {
    if a.len() <= 1 {
        return vec![];
    }
    fpp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| fp_mul(i as u64 % p, c, p))
            .collect(),
    )
}

fn fpp_powmod(base: &FpPoly, e: &BigUint, m: &FpPoly, p: u64) -> FpPoly {
    let mut acc = vec![1u64];
    let mut b = fpp_rem(base, m, p);
    for i in 0..e.bits() {
        if e.bit(i) {
            acc = fpp_rem(&fpp_mul(&acc, &b, p), m, p);
        }
        b = fpp_rem(&fpp_mul(&b, &b, p), m, p);
    }
    acc
}

/// Irreducible factors (monic) of a squarefree monic polynomial mod p.
fn fpp_factor_squarefree(f: &FpPoly, p: u64) -> Vec<FpPoly> {
    let mut out = vec![];
    let mut rest = f.clone();
    // distinct-degree
    let mut h = vec![0u64, 1]; // x
    let mut d = 0usize;
    let mut stages: Vec<(FpPoly, usize)> = vec![];
    while fpp_deg(&rest) > 0 {
        d += 1;
        if 2 * d > fpp_deg(&rest) {
            stages.push((rest.clone(), fpp_deg(&rest)));
            break;
        }
        h = fpp_powmod(&h, &BigUint::from(p), &rest, p);
        let mut hx = h.clone();
        // h - x
        if hx.len() < 2 {
            hx.resize(2, 0);
        }
        hx[1] = (hx[1] + p - 1) % p;
        let hx = fpp_trim(hx);
        let g = fpp_gcd(&hx, &rest, p);
        if fpp_deg(&g) > 0 {
            stages.push((g.clone(), d));
            rest = fpp_divexact(&rest, &g, p);
            h = fpp_rem(&h, &rest, p);
        }
    }
    // equal-degree splitting (Cantor-Zassenhaus), deterministic sweep
    for (prod, d) in stages {
        let mut queue = vec![prod];
        while let Some(a) = queue.pop() {
            let da = fpp_deg(&a);
            if da == d {
                out.push(a);
                continue;
            }
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let mut split = None;
            for c in 1u64..=400 {
                // deterministic pseudo-random trial polynomial of degree < 2d
                let mut t: FpPoly = (0..(2 * d).min(da))
                    .map(|i| {
                        (c.wrapping_mul(2654435761)
                            .wrapping_add((i as u64).wrapping_mul(0x9e3779b97f4a7c15))
                            .wrapping_mul(c))
                            % p
                    })
                    .collect();
                t.push(1);
                let te = fpp_powmod(&t, &e, &a, p);
                // te - 1
                let mut tm = te.clone();
                if tm.is_empty() {
                    tm = vec![p - 1];
                } else {
                    tm[0] = (tm[0] + p - 1) % p;
                }
                let tm = fpp_trim(tm);
                let g = fpp_gcd(&tm, &a, p);
                if fpp_deg(&g) > 0 && fpp_deg(&g) < da {
                    split = Some(g);
                    break;
                }
            }
            let g = split.expect("equal-degree split failed");
            queue.push(fpp_divexact(&a, &g, p));
            queue.push(g);
        }
    }
    out.sort_by_key(|f| (fpp_deg(f), f.clone()));
    out
}

// ---- Hensel lifting ----

fn zp_mod(a: &ZPoly, m: &Int) -> ZPoly {
    ZPoly::new(a.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Balanced residue in (-m/2, m/2].
fn zp_balanced(a: &ZPoly, m: &Int) -> ZPoly {
    let half = m / Int::from(2);
    ZPoly::new(
        a.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn zp_mulmod(a: &ZPoly, b: &ZPoly, m: &Int) -> ZPoly {
    zp_mod(&a.mul(b), m)
}

/// Quotient and remainder of a by monic b, coefficients mod m.
fn zp_divrem_monic(a: &ZPoly, b: &ZPoly, m: &Int) -> (ZPoly, ZPoly) {
    let (q, r) = a.divrem_by(b, |_| Int::one());
    (zp_mod(&q, m), zp_mod(&r, m))
}

/// Given f ≡ g*h mod p with s*g + t*h ≡ 1 mod p (g monic), lift to mod p^2.
/// All of g, h, s, t are updated; returns (g, h, s, t) mod m^2.
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &Int,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zp_mod(&f.sub(&g.mul(h)), &m2);
    let (q, r) = zp_divrem_monic(&zp_mulmod(s, &e, &m2), h, &m2);
    let g1 = zp_mod(&g.add(&t.mul(&e)).add(&q.mul(g)), &m2);
    let h1 = zp_mod(&h.add(&r), &m2);
    let b = zp_mod(&s.mul(&g1).add(&t.mul(&h1)).sub(&ZPoly::one()), &m2);
    let (c, d) = zp_divrem_monic(&zp_mulmod(s, &b, &m2), &h1, &m2);
    let s1 = zp_mod(&s.sub(&d), &m2);
    let t1 = zp_mod(&t.sub(&t.mul(&b)).sub(&c.mul(&g1)), &m2);
    (g1, h1, s1, t1)
}

/// Extended gcd over F_p for polynomials: returns (s, t) with s*a + t*b = 1.
fn fpp_bezout(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        // q = r0 / r1
        let q = fpp_divq(&r0, &r1, p);
        let r2 = fpp_sub(&r0, &fpp_mul(&q, &r1, p), p);
        let s2 = fpp_sub(&s0, &fpp_mul(&q, &s1, p), p);
        let t2 = fpp_sub(&t0, &fpp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let inv = fp_inv(*r0.last().unwrap(), p);
    let s = fpp_trim(s0.iter().map(|&c| fp_mul(c, inv, p)).collect());
    let t = fpp_trim(t0.iter().map(|&c| fp_mul(c, inv, p)).collect());
    (s, t)
}

fn fpp_divq(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.len() < b.len() {
        return vec![];
    }
    let mut r = a.clone();
    let inv = fp_inv(*b.last().unwrap(), p);
    let mut q = vec![0u64; a.len() - b.len() + 1];
    while !r.is_empty() && r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = fp_mul(*r.last().unwrap(), inv, p);
        q[k] = c;
        for (j, &bc) in b.iter().enumerate() {
            let t = fp_mul(c, bc, p);
            r[k + j] = (r[k + j] + p - t) % p;
        }
        r = fpp_trim(r);
    }
    fpp_trim(q)
}

fn fpp_sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut v = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        v[i] = (x + p - y) % p;
    }
    fpp_trim(v)
}

fn fpp_to_zpoly(a: &FpPoly) -> ZPoly {
    ZPoly::new(a.iter().map(|&c| Int::from(c)).collect())
}

fn zpoly_to_fpp(a: &ZPoly, p: u64) -> FpPoly {
    fpp_trim(
        a.coeffs()
            .iter()
            .map(|c| c.mod_floor(&Int::from(p)).to_u64().unwrap())
            .collect(),
    )
}

/// Lift the factorization f ≡ lc * prod(factors) (mod p) to mod p^(2^j) >= target.
/// f must be squarefree mod p; factors are monic mod p.  Returns the monic
/// lifted factors and the final modulus.
fn hensel_lift_tree(f: &ZPoly, factors: &[FpPoly], p: u64, target: &Int) -> (Vec<ZPoly>, Int) {
    let mut modulus = Int::from(p);
    if factors.len() == 1 {
        while &modulus < target {
            modulus = &modulus * &modulus;
        }
        let lcinv_f = make_monic_mod(f, &modulus);
        return (vec![lcinv_f], modulus);
    }
    // binary split
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let gp = left.iter().fold(vec![1u64], |a, b| fpp_mul(&a, b, p));
    let hp = right.iter().fold(vec![1u64], |a, b| fpp_mul(&a, b, p));
    let (sp, tp) = fpp_bezout(&gp, &hp, p);
    // lift (g, h) with g*h = monic image of f
    let mut g = fpp_to_zpoly(&gp);
    let mut h = fpp_to_zpoly(&hp);
    let mut s = fpp_to_zpoly(&sp);
    let mut t = fpp_to_zpoly(&tp);
    let fm_target = {
        let mut m = Int::from(p);
        while &m < target {
            m = &m * &m;
        }
        m
    };
    let fmonic = make_monic_mod(f, &fm_target);
    while &modulus < target {
        let fmod = zp_mod(&fmonic, &(&modulus * &modulus));
        let (g1, h1, s1, t1) = hensel_step(&fmod, &g, &h, &s, &t, &modulus);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        modulus = &modulus * &modulus;
    }
    let (mut out_l, _) = hensel_lift_tree_sub(&g, left, p, &modulus);
    let (out_r, _) = hensel_lift_tree_sub(&h, right, p, &modulus);
    out_l.extend(out_r);
    (out_l, modulus)
}

/// Lift factors of a monic polynomial fm (coefficients mod `modulus`).
fn hensel_lift_tree_sub(
    fm: &ZPoly,
    factors: &[FpPoly],
    p: u64,
    modulus: &Int,
) -> (Vec<ZPoly>, Int) {
    if factors.len() == 1 {
        return (vec![zp_mod(fm, modulus)], modulus.clone());
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let gp = left.iter().fold(vec![1u64], |a, b| fpp_mul(&a, b, p));
    let hp = right.iter().fold(vec![1u64], |a, b| fpp_mul(&a, b, p));
    let (sp, tp) = fpp_bezout(&gp, &hp, p);
    let mut g = fpp_to_zpoly(&gp);
    let mut h = fpp_to_zpoly(&hp);
    let mut s = fpp_to_zpoly(&sp);
    let mut t = fpp_to_zpoly(&tp);
    let mut m = Int::from(p);
    while &m < modulus {
        let fmod = zp_mod(fm, &(&m * &m));
        let (g1, h1, s1, t1) = hensel_step(&fmod, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let (mut out_l, _) = hensel_lift_tree_sub(&g, left, p, modulus);
    let (out_r, _) = hensel_lift_tree_sub(&h, right, p, modulus);
    out_l.extend(out_r);
    (out_l, modulus.clone())
}

fn make_monic_mod(f: &ZPoly, m: &Int) -> ZPoly {
    let lc = f.lc().mod_floor(m);
    let inv = mod_inv(&lc, m);
    zp_mod(&f.scale(&inv), m)
}

fn mod_inv(a: &Int, m: &Int) -> Int {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "non-invertible element mod m");
    e.x.mod_floor(m)
}

// ---- top level ----

/// 2-norm squared of the coefficient vector.
fn norm2_sq(f: &ZPoly) -> Int {
    f.coeffs().iter().map(|c| c * c).sum()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| {
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
    })
}

/// Factor a primitive squarefree integer polynomial (deg >= 1) into
/// irreducible primitive factors with positive leading coefficient
/// convention applied to all but possibly the first.
fn factor_squarefree_primitive(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.deg();
    if n == 1 {
        return vec![f.clone()];
    }
    // choose a prime keeping f squarefree, preferring few modular factors
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (f.lc() % Int::from(p)).is_zero() {
            continue;
        }
        let fp = zpoly_to_fpp(f, p);
        let dfp = fpp_deriv(&fp, p);
        if dfp.is_empty() || fpp_deg(&fpp_gcd(&fp, &dfp, p)) > 0 {
            continue;
        }
        let lcinv = fp_inv(*fp.last().unwrap(), p);
        let fp_monic: FpPoly = fp.iter().map(|&c| fp_mul(c, lcinv, p)).collect();
        let factors = fpp_factor_squarefree(&fp_monic, p);
        let better = match &best {
            None => true,
            Some((_, bf)) => factors.len() < bf.len(),
        };
        if better {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 4 || best.as_ref().map_or(false, |(_, bf)| bf.len() == 1) {
            break;
        }
    }
    let (p, local) = best.expect("no usable prime found");
    if local.len() == 1 {
        return vec![f.clone()];
    }
    // Landau-Mignotte style bound on factor coefficients (times |lc|)
    let bound: Int = (Int::one() << (n + 1)) * crate::rat::isqrt(&norm2_sq(f)) * f.lc().abs();
    let target = &bound * Int::from(2) + Int::one();
    let (lifted, modulus) = hensel_lift_tree(f, &local, p, &target);
    // recombination
    let mut avail: Vec<ZPoly> = lifted;
    let mut rest = f.clone();
    let mut out = vec![];
    let mut size = 1usize;
    'outer: while 2 * size <= avail.len() {
        let idxs: Vec<usize> = (0..avail.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut prod = ZPoly::constant(rest.lc());
            for &i in &combo {
                prod = zp_mulmod(&prod, &avail[i], &modulus);
            }
            let cand = zp_balanced(&prod, &modulus);
            let content = cand.content();
            if content.is_zero() {
                continue;
            }
            let cand = ZPoly::new(cand.coeffs().iter().map(|c| c / &content).collect());
            // trial division over Q
            let (q, r) = rest.to_qpoly().divrem(&cand.to_qpoly());
            if r.is_zero() {
                out.push(cand);
                let (qz, _) = q.primitive();
                let qz = if q.lc().is_negative() { qz.neg() } else { qz };
                rest = qz;
                let mut keep = vec![];
                for (i, g) in avail.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(g);
                    }
                }
                avail = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if rest.deg() > 0 {
        out.push(rest);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Factor a nonzero rational polynomial: returns (content, factors) where
/// content * prod(g^mult) = f with every g monic irreducible over Q.
pub fn factor_rational(f: &QPoly) -> Result<(Rat, Vec<(QPoly, usize)>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok((f.coeff(0), vec![]));
    }
    let content = f.lc();
    let mut out: Vec<(QPoly, usize)> = vec![];
    for (g, mult) in f.squarefree_decomposition() {
        let (gz, _) = g.primitive();
        for h in factor_squarefree_primitive(&gz) {
            out.push((h.to_qpoly().monic(), mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.deg(), fmt_key(&a.0), a.1).cmp(&(b.0.deg(), fmt_key(&b.0), b.1))
    });
    Ok((content, out))
}

fn fmt_key(p: &QPoly) -> Vec<(Int, Int)> {
    p.coeffs()
        .iter()
        .map(|c| (c.numer().clone(), c.denom().clone()))
        .collect()
}

pub fn is_irreducible(f: &QPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(false);
    }
    if f.deg() == 1 {
        return Ok(true);
    }
    let (_, factors) = factor_rational(f)?;
    Ok(factors.len() == 1 && factors[0].1 == 1)
}

/// The n-th cyclotomic polynomial, computed by exact division of x^n - 1.
pub fn cyclotomic(n: u64) -> ZPoly {
    assert!(n >= 1);
    let mut num = ZPoly::monomial(Int::one(), n as usize).sub(&ZPoly::one());
    for d in 1..n {
        if n % d == 0 {
            let cd = cyclotomic(d);
            let (q, r) = num.to_qpoly().divrem(&cd.to_qpoly());
            debug_assert!(r.is_zero());
            num = q.to_int_poly().unwrap();
        }
    }
    num
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Moebius function.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut k = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_pretty;
    use crate::rat;

    fn qp(v: &[i64]) -> QPoly {
        QPoly::new(v.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn factors_x4_minus_1() {
        let f = qp(&[-1, 0, 0, 0, 1]);
        let (c, factors) = factor_rational(&f).unwrap();
        assert_eq!(c, rat(1, 1));
        let expect = vec![
            (qp(&[-1, 1]), 1),
            (qp(&[1, 1]), 1),
            (qp(&[1, 0, 1]), 1),
        ];
        assert_eq!(factors, expect);
    }

    #[test]
    fn factors_quadratic() {
        let f = qp(&[2, 3, 1]);
        let (_, factors) = factor_rational(&f).unwrap();
        assert_eq!(factors, vec![(qp(&[1, 1]), 1), (qp(&[2, 1]), 1)]);
    }

    #[test]
    fn x8_plus_1_is_irreducible() {
        assert!(is_irreducible(&qp(&[1, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap());
        assert!(is_irreducible(&qp(&[1, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn product_reconstructs_input() {
        let f = parse_pretty("x^6 - 3*x^5 + x^4 - 2*x^3 + 7*x^2 - x - 10").unwrap();
        let (c, factors) = factor_rational(&f).unwrap();
        let mut prod = QPoly::constant(c);
        for (g, m) in &factors {
            prod = prod.mul(&g.pow(*m));
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn multiplicities() {
        let f = qp(&[-1, 1]).pow(2).mul(&qp(&[1, 0, 1])).mul(&qp(&[3, 1]).pow(3));
        let (_, factors) = factor_rational(&f).unwrap();
        assert_eq!(
            factors,
            vec![(qp(&[-1, 1]), 2), (qp(&[3, 1]), 3), (qp(&[1, 0, 1]), 1)]
        );
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), ZPoly::new(vec![Int::from(-1), Int::from(1)]));
        assert_eq!(cyclotomic(6), ZPoly::new(vec![Int::from(1), Int::from(-1), Int::from(1)]));
        assert_eq!(
            cyclotomic(8),
            ZPoly::new(vec![Int::from(1), Int::from(0), Int::from(0), Int::from(0), Int::from(1)])
        );
        assert_eq!(euler_phi(12), 4);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(8), 0);
        assert_eq!(moebius(5), -1);
    }

    #[test]
    fn big_coefficient_factorization() {
        // (x^3 - 2)(x^3 + 2) with an extra large factor
        let f = qp(&[-2, 0, 0, 1]).mul(&qp(&[2, 0, 0, 1])).mul(&qp(&[1000000007i64, 1]));
        let (_, factors) = factor_rational(&f).unwrap();
        assert_eq!(factors.len(), 3);
    }
}
