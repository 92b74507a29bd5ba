//! Small helpers on exact rationals: integer square roots, certified root
//! bounds and dyadic rounding used to keep interval endpoints short.

use crate::{Int, Rat};
use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn is_int(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Floor of sqrt(n) for n >= 0.
pub fn isqrt(n: &Int) -> Int {
    assert!(!n.is_negative(), "isqrt of negative");
    n.sqrt()
}

/// Floor of sqrt(x) over the rationals (x >= 0).
pub fn sqrt_floor(x: &Rat) -> Int {
    assert!(!x.is_negative());
    let (p, q) = (x.numer(), x.denom());
    let mut a = isqrt(&(p * q)) / q;
    // a = floor(sqrt(x)) iff a^2 <= x < (a+1)^2
    while Rat::from(&a * &a) > *x {
        a -= 1;
    }
    while Rat::from((&a + 1) * (&a + 1)) <= *x {
        a += 1;
    }
    a
}

/// Rational lower bound of sqrt(x) with |sqrt(x) - lb| <= 2^-bits, lb <= sqrt(x).
pub fn sqrt_lb(x: &Rat, bits: u32) -> Rat {
    assert!(!x.is_negative());
    if x.is_zero() {
        return Rat::zero();
    }
    let scale = Int::one() << (2 * bits);
    let y = x * Rat::from(scale.clone());
    let s = isqrt(&y.to_integer());
    Rat::new(s, Int::one() << bits)
}

/// Rational upper bound of sqrt(x): ub >= sqrt(x), ub - sqrt(x) <= 2^-bits.
pub fn sqrt_ub(x: &Rat, bits: u32) -> Rat {
    assert!(!x.is_negative());
    if x.is_zero() {
        return Rat::zero();
    }
    let lb = sqrt_lb(x, bits + 1);
    let step = Rat::new(Int::one(), Int::one() << bits);
    let mut ub = lb + step;
    while &ub * &ub < *x {
        ub += Rat::new(Int::one(), Int::one() << bits);
    }
    ub
}

/// Floor of the k-th root of n >= 0.
pub fn iroot(n: &Int, k: u32) -> Int {
    assert!(!n.is_negative());
    n.nth_root(k)
}

/// Rational lower bound on x^(1/k) for x >= 0.
pub fn root_lb(x: &Rat, k: u32, bits: u32) -> Rat {
    assert!(!x.is_negative());
    if x.is_zero() {
        return Rat::zero();
    }
    let scale = Int::one() << (k * bits);
    let y = (x * Rat::from(scale)).to_integer();
    Rat::new(iroot(&y, k), Int::one() << bits)
}

/// Rational upper bound on x^(1/k) for x >= 0.
pub fn root_ub(x: &Rat, k: u32, bits: u32) -> Rat {
    assert!(!x.is_negative());
    if x.is_zero() {
        return Rat::zero();
    }
    let lb = root_lb(x, k, bits);
    let step = Rat::new(Int::one(), Int::one() << bits);
    let mut ub = lb + step.clone();
    while pow_rat(&ub, k as i64) < *x {
        ub += step.clone();
    }
    ub
}

pub fn pow_rat(x: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    if e < 0 {
        return Rat::one() / pow_rat(x, -e);
    }
    let mut base = x.clone();
    let mut e = e as u64;
    let mut acc = Rat::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Round x to the nearest integer (ties away from zero).
pub fn round_nearest(x: &Rat) -> Int {
    let two = Int::from(2);
    let num = x.numer() * &two;
    let den = x.denom() * &two;
    // floor((2n + d) / (2d)) = round-half-up for positive; symmetric for negative.
    if x.is_negative() {
        -round_nearest(&(-x))
    } else {
        (num + x.denom()).div_floor(&den)
    }
}

/// Largest rational with denominator 2^bits that is <= x.
pub fn dyadic_floor(x: &Rat, bits: u32) -> Rat {
    let d = Int::one() << bits;
    Rat::new((x * Rat::from(d.clone())).floor().to_integer(), d)
}

/// Smallest rational with denominator 2^bits that is >= x.
pub fn dyadic_ceil(x: &Rat, bits: u32) -> Rat {
    let d = Int::one() << bits;
    Rat::new((x * Rat::from(d.clone())).ceil().to_integer(), d)
}

/// Round x to denominator 2^bits, nearest.
pub fn dyadic_round(x: &Rat, bits: u32) -> Rat {
    let d = Int::one() << bits;
    Rat::new(round_nearest(&(x * Rat::from(d.clone()))), d)
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let n: Int = a.trim().parse().ok()?;
        let d: Int = b.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: Int = s.parse().ok()?;
        Some(Rat::from(n))
    }
}

pub fn fmt_rat(x: &Rat) -> String {
    if is_int(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact squarefree test for integers (trial division; desk scale).
pub fn is_squarefree_int(n: &Int) -> bool {
    let mut m = n.abs();
    if m.is_zero() {
        return false;
    }
    let mut p = Int::from(2);
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            m /= &p;
            if (&m % &p).is_zero() {
                return false;
            }
        }
        p += 1u32;
    }
    true
}

/// Squarefree part of a nonzero integer, with sign preserved.
pub fn squarefree_part(n: &Int) -> Int {
    let mut m = n.abs();
    let mut out = Int::one();
    let mut p = Int::from(2);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1u32;
    }
    out *= &m;
    if n.sign() == Sign::Minus {
        -out
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn sqrt_bounds_enclose() {
        let x = rat(2, 1);
        let lb = sqrt_lb(&x, 30);
        let ub = sqrt_ub(&x, 30);
        assert!(&lb * &lb <= x);
        assert!(&ub * &ub >= x);
        assert!(&ub - &lb <= rat(1, 1 << 29));
    }

    #[test]
    fn rounding() {
        assert_eq!(round_nearest(&rat(3, 2)), Int::from(2));
        assert_eq!(round_nearest(&rat(-3, 2)), Int::from(-2));
        assert_eq!(round_nearest(&rat(7, 5)), Int::from(1));
        assert_eq!(round_nearest(&rat(-7, 5)), Int::from(-1));
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree_int(&Int::from(5)));
        assert!(is_squarefree_int(&Int::from(-7)));
        assert!(!is_squarefree_int(&Int::from(12)));
        assert_eq!(squarefree_part(&Int::from(12)), Int::from(3));
        assert_eq!(squarefree_part(&Int::from(-8)), Int::from(-2));
    }

    #[test]
    fn parse_and_fmt() {
        assert_eq!(parse_rat("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_rat("-2"), Some(rat(-2, 1)));
        assert_eq!(fmt_rat(&rat(3, 4)), "3/4");
        assert_eq!(fmt_rat(&rat(8, 4)), "2");
    }
}
