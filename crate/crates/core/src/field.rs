//! Number fields Q[x]/(f) with exact power-basis arithmetic.

use crate::error::{Error, Result};
use crate::interval::ComplexBox;
use crate::la;
use crate::poly::Poly;
use crate::roots::{self, RootSet};
use crate::zfactor;
use crate::{Int, QPoly, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

/// An algebraic number field presented as Q[x]/(f) for a monic integer
/// irreducible f.  Degree 1 (f = x or x - c) is allowed and models Q.
pub struct NumberField {
    defining: ZPolyAlias,
    degree: usize,
    disc_equation_order: Int,
    // x^(n+k) mod f for k = 0..n-2, as coordinate vectors
    high_powers: Vec<Vec<Rat>>,
    embeddings: Mutex<Option<RootSet>>,
}

type ZPolyAlias = crate::ZPoly;

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({:?})", self.defining)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.defining == other.defining
    }
}

impl NumberField {
    /// Build Q[x]/(f); f must be monic with integer coefficients and
    /// irreducible over Q.
    pub fn new(f: &QPoly) -> Result<Arc<NumberField>> {
        if f.is_zero() || f.deg() == 0 {
            return Err(Error::NotMonicInteger);
        }
        let fz = f.to_int_poly().ok_or(Error::NotMonicInteger)?;
        if !fz.is_monic() {
            return Err(Error::NotMonicInteger);
        }
        let (_, factors) = zfactor::factor_rational(f)?;
        if factors.len() != 1 || factors[0].1 != 1 {
            let g = factors
                .iter()
                .find(|(g, _)| g.deg() < f.deg())
                .map(|(g, _)| g.clone())
                .unwrap_or_else(|| factors[0].0.clone());
            return Err(Error::Reducible(format!("{:?}", g)));
        }
        Ok(Arc::new(Self::new_unchecked(fz)))
    }

    /// Build without the irreducibility check (callers that factored f
    /// already).
    pub fn new_unchecked(fz: ZPolyAlias) -> NumberField {
        let n = fz.deg();
        let fq = fz.to_qpoly();
        // x^(n+k) mod f by iterated reduction
        let mut high_powers = Vec::with_capacity(n.saturating_sub(1));
        let mut cur: Vec<Rat> = (0..n)
            .map(|i| -fq.coeff(i))
            .collect(); // x^n mod f
        high_powers.push(cur.clone());
        for _ in 1..n.saturating_sub(1) {
            // multiply by x
            let carry = cur[n - 1].clone();
            let mut next = vec![Rat::zero(); n];
            for i in (1..n).rev() {
                next[i] = cur[i - 1].clone();
            }
            for i in 0..n {
                next[i] += &carry * &(-fq.coeff(i));
            }
            cur = next;
            high_powers.push(cur.clone());
        }
        let disc = discriminant(&fq);
        NumberField {
            defining: fz,
            degree: n,
            disc_equation_order: disc.to_integer(),
            high_powers,
            embeddings: Mutex::new(None),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn defining_poly(&self) -> QPoly {
        self.defining.to_qpoly()
    }

    pub fn defining_zpoly(&self) -> &ZPolyAlias {
        &self.defining
    }

    /// Discriminant of the equation order Z[x]/(f).
    pub fn disc_equation_order(&self) -> Int {
        self.disc_equation_order.clone()
    }

    /// Certified boxes for all embeddings into C, refined to 2^-bits and
    /// cached; stable order across refinements.
    pub fn embeddings(self: &Arc<Self>, bits: u32) -> Vec<ComplexBox> {
        let w = Rat::new(Int::one(), Int::one() << bits);
        let mut guard = self.embeddings.lock().unwrap();
        match guard.as_mut() {
            Some(rs) => {
                if rs.max_width() > w {
                    *rs = roots::refine(rs, &w);
                }
                rs.boxes().into_iter().map(|(b, _)| b).collect()
            }
            None => {
                let rs = roots::isolate_roots(&self.defining_poly(), &w).unwrap();
                let out = rs.boxes().into_iter().map(|(b, _)| b).collect();
                *guard = Some(rs);
                out
            }
        }
    }

    pub fn generator(self: &Arc<Self>) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.degree];
        if self.degree == 1 {
            // the generator is the rational root of the degree-1 polynomial
            coords[0] = -self.defining_poly().coeff(0);
        } else {
            coords[1] = Rat::one();
        }
        FieldElement {
            field: Some(Arc::clone(self)),
            coords,
        }
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rat>) -> FieldElement {
        assert_eq!(coords.len(), self.degree, "coordinate length mismatch");
        FieldElement {
            field: Some(Arc::clone(self)),
            coords,
        }
    }

    pub fn from_rat(self: &Arc<Self>, c: Rat) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.degree];
        coords[0] = c;
        FieldElement {
            field: Some(Arc::clone(self)),
            coords,
        }
    }

    fn reduce(&self, raw: &[Rat]) -> Vec<Rat> {
        let n = self.degree;
        let mut out = vec![Rat::zero(); n];
        for (i, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < n {
                out[i] += c;
            } else {
                let hp = &self.high_powers[i - n];
                for j in 0..n {
                    out[j] += c * &hp[j];
                }
            }
        }
        out
    }
}

/// Resultant of two rational polynomials.
pub fn resultant(a: &QPoly, b: &QPoly) -> Rat {
    if a.is_zero() || b.is_zero() {
        return Rat::zero();
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = Rat::one();
    loop {
        if b.deg() == 0 {
            return acc * crate::rat::pow_rat(&b.coeff(0), a.deg() as i64);
        }
        let (_, r) = a.divrem(&b);
        if r.is_zero() {
            return Rat::zero();
        }
        let da = a.deg() as i64;
        let db = b.deg() as i64;
        let dr = r.deg() as i64;
        // res(a,b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        let mut factor = crate::rat::pow_rat(&b.lc(), da - dr);
        if (da * db) % 2 == 1 {
            factor = -factor;
        }
        acc *= factor;
        a = b;
        b = r;
    }
}

/// Discriminant of a monic polynomial.
pub fn discriminant(f: &QPoly) -> Rat {
    let n = f.deg() as i64;
    let r = resultant(f, &f.derivative());
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Element of a number field in the power basis.  `field = None` encodes a
/// rational constant that unifies with any field on first contact.
#[derive(Clone)]
pub struct FieldElement {
    field: Option<Arc<NumberField>>,
    coords: Vec<Rat>,
}

impl FieldElement {
    pub fn rational(c: Rat) -> FieldElement {
        FieldElement {
            field: None,
            coords: vec![c],
        }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Rat {
        self.coords.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coord(0))
        } else {
            None
        }
    }

    fn unify(&self, other: &Self) -> (Arc<NumberField>, Vec<Rat>, Vec<Rat>) {
        let field = match (&self.field, &other.field) {
            (Some(a), Some(b)) => {
                assert!(
                    Arc::ptr_eq(a, b) || a.as_ref() == b.as_ref(),
                    "field elements from different fields"
                );
                Arc::clone(a)
            }
            (Some(a), None) => Arc::clone(a),
            (None, Some(b)) => Arc::clone(b),
            (None, None) => {
                // pure rational arithmetic in a degree-1 dummy is avoided;
                // handled by the caller paths below
                let mut a = self.coords.clone();
                let mut b = other.coords.clone();
                a.resize(1.max(a.len()), Rat::zero());
                b.resize(1.max(b.len()), Rat::zero());
                return (dummy_q(), a, b);
            }
        };
        let n = field.degree();
        let mut a = self.coords.clone();
        let mut b = other.coords.clone();
        a.resize(n, Rat::zero());
        b.resize(n, Rat::zero());
        (field, a, b)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let (field, a, b) = self.unify(other);
        let coords = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x + y)
            .collect();
        FieldElement {
            field: pack_field(field),
            coords,
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let (field, a, b) = self.unify(other);
        let coords = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        FieldElement {
            field: pack_field(field),
            coords,
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let (field, a, b) = self.unify(other);
        if field.degree() == 0 {
            // both rational constants
            return FieldElement::rational(&self.coord(0) * &other.coord(0));
        }
        let mut raw = vec![Rat::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        let coords = field.reduce(&raw);
        FieldElement {
            field: pack_field(field),
            coords,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.coords.iter().all(|c| c.is_zero()) {
            return Err(Error::DivisionByZero);
        }
        let Some(field) = &self.field else {
            return Ok(FieldElement::rational(Rat::one() / self.coord(0)));
        };
        if field.degree() == 1 {
            return Ok(FieldElement {
                field: self.field.clone(),
                coords: vec![Rat::one() / self.coord(0)],
            });
        }
        // extended Euclid of coordinate polynomial with the defining poly
        let a = Poly::new(self.coords.clone());
        let f = field.defining_poly();
        let (g, s) = half_ext_gcd(&a, &f);
        debug_assert_eq!(g.deg(), 0);
        let ginv = Rat::one() / g.coeff(0);
        let mut coords: Vec<Rat> = s.coeffs().iter().map(|c| c * &ginv).collect();
        coords.resize(field.degree(), Rat::zero());
        // s may have degree >= n only if inputs were unreduced; reduce then
        Ok(FieldElement {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inverse()?))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = FieldElement::rational(Rat::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// Certified value of this element under the field's i-th embedding.
    pub fn eval_box(&self, emb: &ComplexBox) -> ComplexBox {
        emb.eval_qpoly(&Poly::new(self.coords.clone()))
    }

    /// Multiplication matrix on the power basis (columns are images of
    /// basis vectors).
    pub fn mul_matrix(&self) -> la::Mat {
        let field = self.field.as_ref().expect("rational constant");
        let n = field.degree();
        let mut cols = vec![];
        let mut cur = self.clone();
        let gen = field.generator();
        for j in 0..n {
            if j > 0 {
                cur = cur.mul_ref(&gen);
            }
            let mut c = cur.coords.clone();
            c.resize(n, Rat::zero());
            cols.push(c);
        }
        // mul_matrix[i][j] = coords of self * x^j
        la::transpose(&cols)
    }

    /// (trace, norm) over Q.
    pub fn trace_norm(&self) -> (Rat, Rat) {
        match &self.field {
            None => (self.coord(0), self.coord(0)),
            Some(field) => {
                if field.degree() == 1 {
                    return (self.coord(0), self.coord(0));
                }
                let m = self.mul_matrix();
                let n = field.degree();
                let mut tr = Rat::zero();
                for i in 0..n {
                    tr += &m[i][i];
                }
                (tr, la::det(&m))
            }
        }
    }

    /// Monic minimal polynomial over Q.
    pub fn min_poly(&self) -> QPoly {
        let Some(field) = &self.field else {
            return QPoly::new(vec![-self.coord(0), Rat::one()]);
        };
        let n = field.degree();
        if n == 1 {
            return QPoly::new(vec![-self.coord(0), Rat::one()]);
        }
        // find the first linear dependency among 1, a, a^2, ...
        let mut rows = vec![];
        let mut cur = FieldElement::rational(Rat::one());
        for _ in 0..=n {
            let mut c = cur.coords.clone();
            c.resize(n, Rat::zero());
            rows.push(c);
            if let Some(dep) = la::first_row_dependency(&rows) {
                let k = rows.len();
                let lead = dep[k - 1].clone();
                let coeffs: Vec<Rat> = dep.iter().take(k).map(|c| c / &lead).collect();
                return QPoly::new(coeffs);
            }
            cur = cur.mul_ref(self);
        }
        unreachable!("no dependency found within degree bound");
    }
}

fn pack_field(f: Arc<NumberField>) -> Option<Arc<NumberField>> {
    if f.degree() == 0 {
        None
    } else {
        Some(f)
    }
}

fn dummy_q() -> Arc<NumberField> {
    // degree-0 marker used only to signal "both rational"; never escapes
    thread_local! {
        static DUMMY: Arc<NumberField> = Arc::new(NumberField {
            defining: crate::ZPoly::one(),
            degree: 0,
            disc_equation_order: Int::one(),
            high_powers: vec![],
            embeddings: Mutex::new(None),
        });
    }
    DUMMY.with(Arc::clone)
}

/// gcd(a, b) together with s such that s*a = gcd mod b.
fn half_ext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
    while !r1.is_zero() {
        let (q, r2) = r0.divrem(&r1);
        let s2 = s0.sub(&q.mul(&s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    (r0, s0)
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coords.len().max(other.coords.len());
        (0..n).all(|i| self.coord(i) == other.coord(i))
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement {
            field: None,
            coords: vec![],
        }
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::rational(Rat::one())
    }
    fn is_one(&self) -> bool {
        self.coord(0).is_one() && self.coords.iter().skip(1).all(|c| c.is_zero())
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a FieldElement> for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'a FieldElement) -> Self {
        self.add_ref(rhs)
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<'a> Sub<&'a FieldElement> for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'a FieldElement) -> Self {
        self.sub_ref(rhs)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a FieldElement> for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'a FieldElement) -> Self {
        self.mul_ref(rhs)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", crate::rat::fmt_rat(c))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parse "[1/2,1/2]" style power-basis coordinates.
pub fn parse_element(field: &Arc<NumberField>, s: &str) -> Option<FieldElement> {
    let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?;
    let mut coords = vec![];
    for part in inner.split(',') {
        coords.push(crate::rat::parse_rat(part)?);
    }
    coords.resize(field.degree(), Rat::zero());
    Some(field.element(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_pretty;
    use crate::rat;

    fn field(s: &str) -> Arc<NumberField> {
        NumberField::new(&parse_pretty(s).unwrap()).unwrap()
    }

    #[test]
    fn create_and_reject() {
        let k = field("x^2 - x + 2");
        assert_eq!(k.degree(), 2);
        assert_eq!(k.disc_equation_order(), Int::from(-7));
        assert!(matches!(
            NumberField::new(&parse_pretty("x^2 - 4").unwrap()),
            Err(Error::Reducible(_))
        ));
        assert!(matches!(
            NumberField::new(&QPoly::new(vec![rat(1, 2), rat(0, 1), rat(1, 1)])),
            Err(Error::NotMonicInteger)
        ));
        let gauss = field("x^2 + 1");
        assert_eq!(gauss.degree(), 2);
    }

    #[test]
    fn arithmetic_mod_f() {
        // alpha^2 = alpha - 2 in Q[x]/(x^2 - x + 2)
        let k = field("x^2 - x + 2");
        let a = k.generator();
        let sq = a.mul_ref(&a);
        assert_eq!(sq, k.element(vec![rat(-2, 1), rat(1, 1)]));
        // 1/i = -i in Q(i)
        let g = field("x^2 + 1");
        let i = g.generator();
        let inv = i.inverse().unwrap();
        assert_eq!(inv, g.element(vec![rat(0, 1), rat(-1, 1)]));
        assert!(matches!(
            g.from_rat(rat(0, 1)).inverse(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn minpoly_examples() {
        let k = field("x^3 - 2");
        let a = k.generator();
        assert_eq!(a.min_poly(), parse_pretty("x^3 - 2").unwrap());
        let a2 = a.mul_ref(&a);
        assert_eq!(a2.min_poly(), parse_pretty("x^3 - 4").unwrap());
        let c = k.from_rat(rat(1, 2));
        assert_eq!(c.min_poly(), parse_pretty("x - 1/2").unwrap());
        // minpoly evaluated at the element is zero
        let e = k.element(vec![rat(1, 1), rat(-2, 3), rat(5, 1)]);
        let mp = e.min_poly();
        let mut acc = FieldElement::zero();
        for c in mp.coeffs().iter().rev() {
            acc = acc.mul_ref(&e).add_ref(&FieldElement::rational(c.clone()));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn trace_and_norm() {
        // zeta5: trace -1
        let k = field("x^4 + x^3 + x^2 + x + 1");
        let (tr, _) = k.generator().trace_norm();
        assert_eq!(tr, rat(-1, 1));
        // sqrt5: trace 0
        let k5 = field("x^2 - 5");
        let (tr5, n5) = k5.generator().trace_norm();
        assert_eq!(tr5, rat(0, 1));
        assert_eq!(n5, rat(-5, 1));
        // 1 + i: norm 2
        let g = field("x^2 + 1");
        let e = g.element(vec![rat(1, 1), rat(1, 1)]);
        let (_, n) = e.trace_norm();
        assert_eq!(n, rat(2, 1));
    }

    #[test]
    fn degree_one_field() {
        let q = NumberField::new(&parse_pretty("x - 3").unwrap()).unwrap();
        assert_eq!(q.degree(), 1);
        let g = q.generator();
        assert_eq!(g.as_rational(), Some(rat(3, 1)));
        let (tr, n) = g.trace_norm();
        assert_eq!(tr, rat(3, 1));
        assert_eq!(n, rat(3, 1));
        assert_eq!(g.min_poly(), parse_pretty("x - 3").unwrap());
    }

    #[test]
    fn embeddings_are_roots() {
        let k = field("x^3 - 2");
        let embs = k.embeddings(20);
        assert_eq!(embs.len(), 3);
        for b in embs {
            let v = b.eval_qpoly(&k.defining_poly());
            assert!(v.abs_sq().lo < rat(1, 1000));
        }
    }

    #[test]
    fn resultant_and_discriminant() {
        // disc(x^2 - 5) = 20
        assert_eq!(
            discriminant(&parse_pretty("x^2 - 5").unwrap()),
            rat(20, 1)
        );
        // disc(x^3 - 3) = -27 * 9 = -243
        assert_eq!(
            discriminant(&parse_pretty("x^3 - 3").unwrap()),
            rat(-243, 1)
        );
        // disc(x^2 - x + 2) = 1 - 8 = -7
        assert_eq!(
            discriminant(&parse_pretty("x^2 - x + 2").unwrap()),
            rat(-7, 1)
        );
    }
}
