//! Certified interval arithmetic over the rationals: real intervals,
//! complex boxes, and enclosures of exp, log, pi and square roots.
//!
//! Every operation returns an interval containing the exact result; widths
//! are kept in check by outward dyadic rounding.

use crate::rat::{dyadic_ceil, dyadic_floor, sqrt_lb, sqrt_ub};
use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl fmt::Debug for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "invalid interval");
        RatInterval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Self::point(Rat::zero())
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from(Int::from(2))
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    pub fn intersect(&self, other: &RatInterval) -> Option<RatInterval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        if lo <= hi {
            Some(RatInterval::new(lo, hi))
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let c: [Rat; 4] = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, c: &Rat) -> RatInterval {
        if c.is_negative() {
            RatInterval::new(&self.hi * c, &self.lo * c)
        } else {
            RatInterval::new(&self.lo * c, &self.hi * c)
        }
    }

    pub fn square(&self) -> RatInterval {
        if !self.lo.is_negative() {
            RatInterval::new(&self.lo * &self.lo, &self.hi * &self.hi)
        } else if !self.hi.is_positive() {
            RatInterval::new(&self.hi * &self.hi, &self.lo * &self.lo)
        } else {
            let a = &self.lo * &self.lo;
            let b = &self.hi * &self.hi;
            RatInterval::new(Rat::zero(), a.max(b))
        }
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self) -> RatInterval {
        assert!(self.lo.is_positive() || self.hi.is_negative());
        RatInterval::new(Rat::one() / &self.hi, Rat::one() / &self.lo)
    }

    /// Enclosure of |x| over the interval.
    pub fn abs(&self) -> RatInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            RatInterval::new(Rat::zero(), self.lo.abs().max(self.hi.abs()))
        }
    }

    /// Enclosure of sqrt over a nonnegative interval.
    pub fn sqrt(&self, bits: u32) -> RatInterval {
        assert!(!self.lo.is_negative());
        RatInterval::new(sqrt_lb(&self.lo, bits), sqrt_ub(&self.hi, bits))
    }

    /// Enclosure of the k-th root over a nonnegative interval.
    pub fn nth_root(&self, k: u32, bits: u32) -> RatInterval {
        assert!(!self.lo.is_negative());
        RatInterval::new(
            crate::rat::root_lb(&self.lo, k, bits),
            crate::rat::root_ub(&self.hi, k, bits),
        )
    }

    pub fn pow(&self, e: u32) -> RatInterval {
        let mut acc = RatInterval::point(Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Round endpoints outward to denominator 2^bits.
    pub fn trim(&self, bits: u32) -> RatInterval {
        RatInterval::new(dyadic_floor(&self.lo, bits), dyadic_ceil(&self.hi, bits))
    }

    /// Strict comparison against a rational if the interval separates it.
    pub fn cmp_rat(&self, x: &Rat) -> Option<std::cmp::Ordering> {
        if &self.hi < x {
            Some(std::cmp::Ordering::Less)
        } else if &self.lo > x {
            Some(std::cmp::Ordering::Greater)
        } else if &self.lo == x && &self.hi == x {
            Some(std::cmp::Ordering::Equal)
        } else {
            None
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl fmt::Debug for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?} i)", self.re, self.im)
    }
}

impl ComplexBox {
    pub fn new(re: RatInterval, im: RatInterval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(re: Rat, im: Rat) -> Self {
        ComplexBox {
            re: RatInterval::point(re),
            im: RatInterval::point(im),
        }
    }

    pub fn real(i: RatInterval) -> Self {
        ComplexBox {
            re: i,
            im: RatInterval::zero(),
        }
    }

    pub fn is_real_line(&self) -> bool {
        self.im.lo.is_zero() && self.im.hi.is_zero()
    }

    pub fn add(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn neg(&self) -> ComplexBox {
        ComplexBox::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox::new(self.re.clone(), self.im.neg())
    }

    pub fn scale(&self, c: &Rat) -> ComplexBox {
        ComplexBox::new(self.re.scale(c), self.im.scale(c))
    }

    /// Enclosure of |z|^2 over the box.
    pub fn abs_sq(&self) -> RatInterval {
        self.re.square().add(&self.im.square())
    }

    /// Enclosure of |z| over the box.
    pub fn abs(&self, bits: u32) -> RatInterval {
        self.abs_sq().sqrt(bits)
    }

    pub fn width(&self) -> Rat {
        self.re.width().max(self.im.width())
    }

    pub fn mid(&self) -> (Rat, Rat) {
        (self.re.mid(), self.im.mid())
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains(&Rat::zero()) && self.im.contains(&Rat::zero())
    }

    pub fn intersects(&self, o: &ComplexBox) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn trim(&self, bits: u32) -> ComplexBox {
        ComplexBox::new(self.re.trim(bits), self.im.trim(bits))
    }

    /// Evaluate a polynomial with rational coefficients over the box.
    pub fn eval_qpoly(&self, f: &crate::QPoly) -> ComplexBox {
        let mut acc = ComplexBox::point(Rat::zero(), Rat::zero());
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self).add(&ComplexBox::point(c.clone(), Rat::zero()));
        }
        acc
    }
}

/// Enclosure of exp(x) for rational x, width about 2^-bits relative.
pub fn exp_point(x: &Rat, bits: u32) -> RatInterval {
    // split x = n + s with |s| <= 1/2
    let n = crate::rat::round_nearest(x);
    let s = x - Rat::from(n.clone());
    let guard = bits + 16;
    let es = exp_small(&s, guard);
    let e1 = e_interval(guard);
    let mut acc = RatInterval::point(Rat::one());
    let npow = num_traits::ToPrimitive::to_u64(&n.abs()).expect("exp argument out of range");
    // e^n by squaring on intervals
    let mut base = e1;
    let mut e = npow;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).trim(4 * guard);
        }
        base = base.mul(&base).trim(4 * guard);
        e >>= 1;
    }
    if n.is_negative() {
        acc = acc.recip();
    }
    acc.mul(&es).trim(guard)
}

/// Enclosure of exp over an interval.
pub fn exp_interval(x: &RatInterval, bits: u32) -> RatInterval {
    let lo = exp_point(&x.lo, bits);
    let hi = exp_point(&x.hi, bits);
    RatInterval::new(lo.lo, hi.hi)
}

/// exp(s) for |s| <= 1 via Taylor series with explicit tail bound.
fn exp_small(s: &Rat, bits: u32) -> RatInterval {
    assert!(s.abs() <= Rat::one());
    let mut term = Rat::one();
    let mut sum = Rat::one();
    let eps = Rat::new(Int::one(), Int::one() << bits);
    let mut k = 1u32;
    loop {
        term = term * s / Rat::from(Int::from(k));
        sum += term.clone();
        // tail <= |term| * 3 once |s|/k <= 2/3
        if term.abs() * Rat::from(Int::from(3)) < eps && k >= 2 {
            break;
        }
        k += 1;
        assert!(k < 10_000);
    }
    let tail = term.abs() * Rat::from(Int::from(3));
    RatInterval::new(&sum - &tail, &sum + &tail)
}

/// Enclosure of e.
pub fn e_interval(bits: u32) -> RatInterval {
    exp_small(&Rat::one(), bits)
}

/// Enclosure of ln(x) for rational x > 0.
pub fn ln_point(x: &Rat, bits: u32) -> RatInterval {
    assert!(x.is_positive());
    let guard = bits + 8;
    // scale into [2/3, 3/2) by powers of 2: x = 2^k * s
    let mut k: i64 = 0;
    let mut s = x.clone();
    let three_halves = crate::rat(3, 2);
    let two_thirds = crate::rat(2, 3);
    while s >= three_halves {
        s /= Rat::from(Int::from(2));
        k += 1;
    }
    while s < two_thirds {
        s *= Rat::from(Int::from(2));
        k -= 1;
    }
    // ln(s) = 2 atanh((s-1)/(s+1)), |u| <= 1/5
    let u = (&s - Rat::one()) / (&s + Rat::one());
    let mut term = u.clone();
    let mut sum = u.clone();
    let u2 = &u * &u;
    let eps = Rat::new(Int::one(), Int::one() << guard);
    let mut j = 1u32;
    loop {
        term = term * &u2;
        let add = &term / Rat::from(Int::from(2 * j + 1));
        sum += add.clone();
        if add.abs() * Rat::from(Int::from(2)) < eps {
            break;
        }
        j += 1;
        assert!(j < 10_000);
    }
    let tail = term.abs();
    let ln_s = RatInterval::new(
        (&sum - &tail) * Rat::from(Int::from(2)),
        (&sum + &tail) * Rat::from(Int::from(2)),
    );
    let ln2 = ln2_interval(guard);
    ln_s.add(&ln2.scale(&Rat::from(Int::from(k)))).trim(guard)
}

fn ln2_interval(bits: u32) -> RatInterval {
    // ln2 = 2 atanh(1/3)
    let u = crate::rat(1, 3);
    let mut term = u.clone();
    let mut sum = u.clone();
    let u2 = &u * &u;
    let eps = Rat::new(Int::one(), Int::one() << bits);
    let mut j = 1u32;
    loop {
        term = term * &u2;
        let add = &term / Rat::from(Int::from(2 * j + 1));
        sum += add.clone();
        if add.abs() * Rat::from(Int::from(2)) < eps {
            break;
        }
        j += 1;
    }
    let tail = term.abs();
    RatInterval::new(
        (&sum - &tail) * Rat::from(Int::from(2)),
        (&sum + &tail) * Rat::from(Int::from(2)),
    )
}

/// Enclosure of pi (Machin's formula).
pub fn pi_interval(bits: u32) -> RatInterval {
    // pi/4 = 4 atan(1/5) - atan(1/239)
    let a = atan_inv(5, bits + 8);
    let b = atan_inv(239, bits + 8);
    a.scale(&Rat::from(Int::from(16)))
        .sub(&b.scale(&Rat::from(Int::from(4))))
        .trim(bits + 4)
}

fn atan_inv(q: u64, bits: u32) -> RatInterval {
    let x = Rat::new(Int::one(), Int::from(q));
    let x2 = &x * &x;
    let mut term = x.clone();
    let mut sum = x.clone();
    let mut sign = -1i32;
    let eps = Rat::new(Int::one(), Int::one() << bits);
    let mut j = 1u32;
    loop {
        term = term * &x2;
        let add = &term / Rat::from(Int::from(2 * j + 1));
        if sign > 0 {
            sum += add.clone();
        } else {
            sum -= add.clone();
        }
        if add < eps {
            break;
        }
        sign = -sign;
        j += 1;
    }
    let tail = term.abs();
    RatInterval::new(&sum - &tail, &sum + &tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn exp_of_zero_and_one() {
        let e0 = exp_point(&Rat::zero(), 30);
        assert!(e0.contains(&Rat::one()));
        let e1 = exp_point(&Rat::one(), 40);
        // e = 2.718281828459045...
        assert!(e1.lo < rat(2_718_281_829, 1_000_000_000));
        assert!(e1.hi > rat(2_718_281_828, 1_000_000_000));
        assert!(e1.width() < rat(1, 1 << 30));
    }

    #[test]
    fn exp_monotone_enclosure() {
        let i = RatInterval::new(rat(0, 1), rat(1, 1));
        let e = exp_interval(&i, 30);
        assert!(e.lo <= Rat::one());
        assert!(e.hi >= rat(2_718_281_828, 1_000_000_000));
    }

    #[test]
    fn ln_inverts_exp() {
        let l = ln_point(&rat(2, 1), 40);
        // ln 2 = 0.6931471805599453...
        assert!(l.lo < rat(693_147_181, 1_000_000_000));
        assert!(l.hi > rat(693_147_180, 1_000_000_000));
        let l3 = ln_point(&rat(1, 4), 30);
        // ln(1/4) = -1.3862943611...
        assert!(l3.lo < rat(-1_386_294_361, 1_000_000_000));
        assert!(l3.hi > rat(-1_386_294_362, 1_000_000_000));
    }

    #[test]
    fn pi_enclosure() {
        let p = pi_interval(40);
        assert!(p.contains(&rat(3_141_592_653_589_793, 1_000_000_000_000_000)));
        assert!(p.width() < rat(1, 1 << 35));
    }

    #[test]
    fn box_abs_sq() {
        let b = ComplexBox::point(rat(3, 1), rat(4, 1));
        assert_eq!(b.abs_sq(), RatInterval::point(rat(25, 1)));
        let a = b.abs(30);
        assert!(a.contains(&rat(5, 1)));
    }

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::new(rat(-2, 1), rat(3, 1));
        let b = RatInterval::new(rat(-1, 1), rat(4, 1));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-8, 1));
        assert_eq!(p.hi, rat(12, 1));
        assert_eq!(a.square().lo, rat(0, 1));
        assert_eq!(a.square().hi, rat(9, 1));
    }
}
