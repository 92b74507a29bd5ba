//! Dense univariate polynomials, generic over the coefficient ring.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so
//! the zero polynomial is the empty list.  Concrete aliases live at the
//! crate root: `ZPoly` over integers, `QPoly` over rationals and `KPoly`
//! over number-field elements.

use crate::rat::{fmt_rat, parse_rat};
use crate::{Int, QPoly, Rat, ZPoly};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficient ring requirements for generic polynomial arithmetic.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Sub<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
        + Neg<Output = T>
{
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// Monomial c * x^k.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k];
        v.push(c);
        Poly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 via `deg`, use
    /// `is_zero` to distinguish.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn lc(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + &rhs.coeff(i));
        }
        Poly::new(v)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - &rhs.coeff(i));
        }
        Poly::new(v)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = std::mem::replace(&mut v[i + j], T::zero()) + &(a.clone() * b);
            }
        }
        Poly::new(v)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at a polynomial argument (composition self(g)).
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut k = T::zero();
            for _ in 0..i {
                k = k + c;
            }
            v.push(k);
        }
        Poly::new(v)
    }

    /// Substitute x -> -x.
    pub fn reflect(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Shift the polynomial up by x^k (multiply by x^k).
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly::new(v)
    }
}

/// Division with remainder where the divisor's leading coefficient must be
/// invertible via the supplied closure (fields pass `|c| 1/c`).
impl<T: Coeff> Poly<T> {
    pub fn divrem_by(&self, d: &Self, inv_lc: impl Fn(&T) -> T) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.deg() < d.deg() {
            return (Poly::zero(), self.clone());
        }
        let ilc = inv_lc(&d.lc());
        let mut rem = self.coeffs.clone();
        let dd = d.deg();
        let mut q = vec![T::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone() * &ilc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i - dd + j] = std::mem::replace(&mut rem[i - dd + j], T::zero())
                        - &(c.clone() * dc);
                }
            }
            q[i - dd] = c;
        }
        rem.truncate(dd);
        (Poly::new(q), Poly::new(rem))
    }
}

impl QPoly {
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        self.divrem_by(d, |c| Rat::one() / c)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lc = a.lc();
        a.scale(&(Rat::one() / lc))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rat::one() / self.lc()))
    }

    /// Clear denominators and content: primitive integer polynomial with
    /// positive leading coefficient, plus the rational multiplier.
    pub fn primitive(&self) -> (ZPoly, Rat) {
        if self.is_zero() {
            return (ZPoly::zero(), Rat::one());
        }
        let mut den = Int::one();
        for c in self.coeffs() {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<Int> = self
            .coeffs()
            .iter()
            .map(|c| (c * Rat::from(den.clone())).to_integer())
            .collect();
        let mut content = Int::zero();
        for c in &ints {
            content = num_integer::gcd(content, c.clone());
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<Int> = ints.iter().map(|c| c / &content).collect();
        (ZPoly::new(prim), Rat::new(content, den))
    }

    pub fn to_int_poly(&self) -> Option<ZPoly> {
        let mut v = Vec::with_capacity(self.coeffs().len());
        for c in self.coeffs() {
            if !c.denom().is_one() {
                return None;
            }
            v.push(c.numer().clone());
        }
        Some(ZPoly::new(v))
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == 0 {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }

    /// Yun's squarefree decomposition: list of (factor, multiplicity) with
    /// factors pairwise coprime, squarefree and monic.
    pub fn squarefree_decomposition(&self) -> Vec<(QPoly, usize)> {
        assert!(!self.is_zero());
        let f = self.monic();
        if f.deg() == 0 {
            return vec![];
        }
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.divrem(&a).0;
        let mut c = df.divrem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut out = vec![];
        let mut i = 1usize;
        loop {
            if b.deg() == 0 {
                break;
            }
            a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.monic(), i));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }
}

impl ZPoly {
    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs().iter().map(|c| Rat::from(c.clone())).collect())
    }

    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in self.coeffs() {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Max |coefficient|.
    pub fn height(&self) -> Int {
        self.coeffs()
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }
}

impl<T: Coeff + fmt::Display> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", c)?;
            } else if i == 1 {
                write!(f, "({})*x", c)?;
            } else {
                write!(f, "({})*x^{}", c, i)?;
            }
        }
        Ok(())
    }
}

/// Parse the ascending comma-separated coefficient format, e.g. "2,-1,1"
/// for x^2 - x + 2.  Entries may be rationals "p/q".
pub fn parse_coeff_list(s: &str) -> Option<QPoly> {
    let mut v = vec![];
    for part in s.split(',') {
        v.push(parse_rat(part)?);
    }
    Some(QPoly::new(v))
}

/// Human-readable parser for expressions like "x^3 - 2*x + 5" or
/// "x^2 - x + 2".  Accepts an optional `*` between coefficient and `x`.
pub fn parse_pretty(s: &str) -> Option<QPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return None;
    }
    let mut terms: Vec<(Rat, usize)> = vec![];
    let mut rest = compact.as_str();
    let mut sign = Rat::one();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -Rat::one();
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    while !rest.is_empty() {
        let end = rest
            .char_indices()
            .skip(1)
            .find(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = &rest[..end];
        let (coeff, exp) = parse_term(term)?;
        terms.push((sign.clone() * coeff, exp));
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' {
            -Rat::one()
        } else {
            Rat::one()
        };
        rest = &rest[end + 1..];
    }
    let deg = terms.iter().map(|(_, e)| *e).max()?;
    let mut v = vec![Rat::zero(); deg + 1];
    for (c, e) in terms {
        v[e] += c;
    }
    Some(QPoly::new(v))
}

fn parse_term(t: &str) -> Option<(Rat, usize)> {
    if let Some(pos) = t.find('x') {
        let coeff_str = t[..pos].trim_end_matches('*');
        let coeff = if coeff_str.is_empty() {
            Rat::one()
        } else {
            parse_rat(coeff_str)?
        };
        let rest = &t[pos + 1..];
        let exp = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')?.parse().ok()?
        };
        Some((coeff, exp))
    } else {
        Some((parse_rat(t)?, 0))
    }
}

pub fn fmt_coeff_list(p: &QPoly) -> String {
    p.coeffs()
        .iter()
        .map(fmt_rat)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn qp(v: &[i64]) -> QPoly {
        QPoly::new(v.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn mul_divrem_roundtrip() {
        let a = qp(&[1, 2, 3]);
        let b = qp(&[-5, 1, 0, 2]);
        let p = a.mul(&b);
        let (q, r) = p.divrem(&a);
        assert!(r.is_zero());
        assert_eq!(q, b);
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = qp(&[-1, 1]); // x - 1
        let f = a.mul(&qp(&[1, 1])); // (x-1)(x+1)
        let g = a.mul(&qp(&[2, 1])); // (x-1)(x+2)
        assert_eq!(f.gcd(&g), a.monic());
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // (x-1)^2 (x+2)^3
        let f = qp(&[-1, 1]).pow(2).mul(&qp(&[2, 1]).pow(3));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (qp(&[-1, 1]), 2));
        assert_eq!(dec[1], (qp(&[2, 1]), 3));
    }

    #[test]
    fn parse_formats() {
        assert_eq!(parse_coeff_list("2,-1,1").unwrap(), qp(&[2, -1, 1]));
        assert_eq!(parse_pretty("x^2 - x + 2").unwrap(), qp(&[2, -1, 1]));
        assert_eq!(parse_pretty("x^3+5").unwrap(), qp(&[5, 0, 0, 1]));
        assert_eq!(parse_pretty("-x + 1/2").unwrap(), QPoly::new(vec![rat(1, 2), rat(-1, 1)]));
        assert_eq!(parse_pretty("3*x^2").unwrap(), qp(&[0, 0, 3]));
    }

    #[test]
    fn compose_and_reflect() {
        let f = qp(&[2, -1, 1]); // x^2 - x + 2
        let g = f.compose(&qp(&[0, -1])); // f(-x) = x^2 + x + 2
        assert_eq!(g, qp(&[2, 1, 1]));
        assert_eq!(f.reflect(), qp(&[2, 1, 1]));
    }
}
