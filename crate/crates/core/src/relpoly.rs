//! Polynomials over a number field: gcd arithmetic, norm-based (Trager)
//! factorization, absolute minimal polynomials and splitting fields.

use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::poly::Poly;
use crate::zfactor;
use crate::{KPoly, QPoly, Rat};
use num_traits::{One, Zero};
use std::ops::Neg;
use std::sync::Arc;

pub fn kpoly_from_qpoly(f: &QPoly) -> KPoly {
    Poly::new(
        f.coeffs()
            .iter()
            .map(|c| FieldElement::rational(c.clone()))
            .collect(),
    )
}

/// Coefficients of a KPoly as rational polynomials in the field generator.
fn coeff_polys(g: &KPoly) -> Vec<QPoly> {
    g.coeffs()
        .iter()
        .map(|c| Poly::new(c.coords().to_vec()))
        .collect()
}

pub fn kpoly_divrem(a: &KPoly, b: &KPoly) -> (KPoly, KPoly) {
    a.divrem_by(b, |c| c.inverse().expect("division by zero coefficient"))
}

pub fn kpoly_monic(a: &KPoly) -> KPoly {
    if a.is_zero() {
        return a.clone();
    }
    let inv = a.lc().inverse().unwrap();
    a.scale(&inv)
}

pub fn kpoly_gcd(a: &KPoly, b: &KPoly) -> KPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = kpoly_divrem(&a, &b);
        a = b;
        b = r;
    }
    if a.is_zero() {
        a
    } else {
        kpoly_monic(&a)
    }
}

pub fn kpoly_derivative(a: &KPoly) -> KPoly {
    a.derivative()
}

/// Evaluate g at a field element.
pub fn kpoly_eval(g: &KPoly, x: &FieldElement) -> FieldElement {
    let mut acc = FieldElement::zero();
    for c in g.coeffs().iter().rev() {
        acc = acc.mul_ref(x).add_ref(c);
    }
    acc
}

/// Substitute x -> x - s*alpha (alpha the field generator) into g.
pub fn kpoly_shift_gen(k: &Arc<NumberField>, g: &KPoly, s: i64) -> KPoly {
    let alpha = k.generator();
    let shift = Poly::new(vec![
        alpha.scale(&Rat::from(crate::int(-s))),
        FieldElement::one(),
    ]);
    g.compose(&shift)
}

/// Norm of g from K(x) down to Q(x): the resultant Res_t(f(t), G(t, x))
/// where f defines K and G writes g's coefficients as polynomials in t.
/// Its roots are exactly the roots of all conjugates of g; degree is
/// [K:Q] * deg g when g is monic.
pub fn norm_poly(k: &Arc<NumberField>, g: &KPoly) -> QPoly {
    let n = k.degree();
    if n == 1 {
        // coefficients are rational already; evaluate generator value
        let a0 = k.generator().as_rational().unwrap();
        return QPoly::new(
            g.coeffs()
                .iter()
                .map(|c| Poly::new(c.coords().to_vec()).eval(&a0))
                .collect(),
        );
    }
    let e = g.deg();
    let out_deg = n * e;
    let f = k.defining_poly();
    let cps = coeff_polys(g);
    // interpolate N(x) through out_deg + 1 points
    let mut xs = vec![];
    let mut ys = vec![];
    let mut j: i64 = 0;
    while xs.len() <= out_deg {
        // G(t, x_j) as polynomial in t
        let mut gt = QPoly::zero();
        let xj = Rat::from(crate::int(j));
        let mut xpow = Rat::one();
        for cp in &cps {
            gt = gt.add(&cp.scale(&xpow));
            xpow *= &xj;
        }
        // gt = sum_i g_i(t) * x_j^i
        let r = crate::field::resultant(&f, &gt);
        xs.push(xj);
        ys.push(r);
        j += 1;
    }
    lagrange_interpolate(&xs, &ys)
}

fn lagrange_interpolate(xs: &[Rat], ys: &[Rat]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, yi) in ys.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut li = QPoly::one();
        let mut denom = Rat::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                li = li.mul(&QPoly::new(vec![-xj.clone(), Rat::one()]));
                denom *= &xs[i] - xj;
            }
        }
        acc = acc.add(&li.scale(&(yi / &denom)));
    }
    acc
}

/// Resultant-based norm of g(x - s*alpha).
fn norm_shifted(k: &Arc<NumberField>, g: &KPoly, s: i64) -> QPoly {
    if k.degree() == 1 {
        return norm_poly(k, g);
    }
    let e = g.deg();
    let out_deg = k.degree() * e;
    let f = k.defining_poly();
    let cps = coeff_polys(g);
    let mut xs = vec![];
    let mut ys = vec![];
    let mut j: i64 = 0;
    while xs.len() <= out_deg {
        let xj = Rat::from(crate::int(j));
        // G(t, x_j - s t) = sum_i g_i(t) (x_j - s t)^i
        let lin = QPoly::new(vec![xj.clone(), Rat::from(crate::int(-s))]);
        let mut gt = QPoly::zero();
        let mut lp = QPoly::one();
        for cp in &cps {
            gt = gt.add(&cp.mul(&lp));
            lp = lp.mul(&lin);
        }
        let r = crate::field::resultant(&f, &gt);
        xs.push(xj);
        ys.push(r);
        j += 1;
    }
    lagrange_interpolate(&xs, &ys)
}

/// The monic rational polynomial of degree [K:Q]*deg g whose roots are the
/// roots of all conjugates of g (g monic irreducible over K).
pub fn absolute_minpoly(k: &Arc<NumberField>, g: &KPoly) -> QPoly {
    norm_poly(k, g).monic()
}

/// Minimal polynomial over Q of a root of monic irreducible g over K: the
/// unique monic irreducible rational polynomial whose power equals N(g).
pub fn root_minpoly_over_q(k: &Arc<NumberField>, g: &KPoly) -> Result<QPoly> {
    let n = absolute_minpoly(k, g);
    let sf = n.squarefree_part();
    if !zfactor::is_irreducible(&sf)? {
        return Err(Error::NotIrreducible);
    }
    Ok(sf)
}

/// Squarefree decomposition over K.
pub fn kpoly_squarefree_decomposition(g: &KPoly) -> Vec<(KPoly, usize)> {
    assert!(!g.is_zero());
    let g = kpoly_monic(g);
    if g.deg() == 0 {
        return vec![];
    }
    let dg = g.derivative();
    let mut a = kpoly_gcd(&g, &dg);
    let mut b = kpoly_divrem(&g, &a).0;
    let mut c = kpoly_divrem(&dg, &a).0;
    let mut d = c.sub(&b.derivative());
    let mut out = vec![];
    let mut i = 1usize;
    loop {
        if b.deg() == 0 {
            break;
        }
        a = kpoly_gcd(&b, &d);
        if a.deg() > 0 {
            out.push((kpoly_monic(&a), i));
        }
        b = kpoly_divrem(&b, &a).0;
        c = kpoly_divrem(&d, &a).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// Monic irreducible factors of g over K with multiplicities (Trager).
pub fn factor_over_field(k: &Arc<NumberField>, g: &KPoly) -> Result<Vec<(KPoly, usize)>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.deg() == 0 {
        return Ok(vec![]);
    }
    if k.degree() == 1 {
        let a0 = k.generator().as_rational().unwrap();
        let gq = QPoly::new(
            g.coeffs()
                .iter()
                .map(|c| Poly::new(c.coords().to_vec()).eval(&a0))
                .collect(),
        );
        let (_, factors) = zfactor::factor_rational(&gq)?;
        return Ok(factors
            .into_iter()
            .map(|(h, m)| (kpoly_from_qpoly(&h), m))
            .collect());
    }
    let mut out: Vec<(KPoly, usize)> = vec![];
    for (h, mult) in kpoly_squarefree_decomposition(g) {
        for piece in factor_squarefree_over_field(k, &h)? {
            out.push((piece, mult));
        }
    }
    out.sort_by_key(|(h, m)| (h.deg(), kpoly_sort_key(h), *m));
    Ok(out)
}

fn kpoly_sort_key(h: &KPoly) -> Vec<Vec<(crate::Int, crate::Int)>> {
    h.coeffs()
        .iter()
        .map(|c| {
            c.coords()
                .iter()
                .map(|q| (q.numer().clone(), q.denom().clone()))
                .collect()
        })
        .collect()
}

fn factor_squarefree_over_field(k: &Arc<NumberField>, h: &KPoly) -> Result<Vec<KPoly>> {
    if h.deg() == 1 {
        return Ok(vec![kpoly_monic(h)]);
    }
    // find a shift making the norm squarefree
    for s in 0..64i64 {
        let n = norm_shifted(k, h, s);
        if n.is_zero() {
            continue;
        }
        let sf = n.gcd(&n.derivative());
        if sf.deg() > 0 {
            continue;
        }
        let (_, factors) = zfactor::factor_rational(&n)?;
        if factors.len() == 1 {
            return Ok(vec![kpoly_monic(h)]);
        }
        let mut out = vec![];
        let mut rest = kpoly_monic(h);
        for (fi, _) in factors {
            if rest.deg() == 0 {
                break;
            }
            // candidate = gcd(h(x), F_i(x + s*alpha))
            let fik = kpoly_shift_gen(k, &kpoly_from_qpoly(&fi), -s);
            let cand = kpoly_gcd(&rest, &fik);
            if cand.deg() > 0 {
                rest = kpoly_divrem(&rest, &cand).0;
                out.push(cand);
            }
        }
        debug_assert_eq!(rest.deg(), 0);
        return Ok(out);
    }
    Err(Error::Inconclusive(
        "no squarefree norm shift found".to_string(),
    ))
}

/// A field tower step: L contains the base field via `base_gen_image` and
/// carries the roots of the split polynomial.
#[derive(Debug, Clone)]
pub struct SplittingField {
    pub field: Arc<NumberField>,
    pub base_gen_image: FieldElement,
    pub roots: Vec<FieldElement>,
    pub tower_degrees: Vec<usize>,
}

/// Compute a splitting field of g over K by iterated adjunction of roots,
/// with primitive elements found by shifting with small integer multiples
/// of the previous generator.  `degree_cap` bounds [L:Q].
pub fn splitting_field(
    k: &Arc<NumberField>,
    g: &KPoly,
    degree_cap: usize,
) -> Result<SplittingField> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut field = Arc::clone(k);
    let mut base_gen_image = k.generator();
    let mut poly = kpoly_monic(g);
    let mut tower = vec![k.degree()];
    loop {
        let factors = factor_over_field(&field, &poly)?;
        let mut roots: Vec<FieldElement> = vec![];
        let mut nonlinear: Option<KPoly> = None;
        for (h, m) in &factors {
            if h.deg() == 1 {
                let root = h.coeff(0).clone().neg();
                for _ in 0..*m {
                    roots.push(root.clone());
                }
            } else if nonlinear.is_none() {
                nonlinear = Some(h.clone());
            }
        }
        let Some(h) = nonlinear else {
            return Ok(SplittingField {
                field,
                base_gen_image,
                roots,
                tower_degrees: tower,
            });
        };
        let (new_field, theta_image, _beta) = adjoin_root(&field, &h, degree_cap)?;
        base_gen_image = map_element(&base_gen_image, &theta_image, &new_field);
        poly = Poly::new(
            poly.coeffs()
                .iter()
                .map(|c| map_element(c, &theta_image, &new_field))
                .collect(),
        );
        tower.push(new_field.degree());
        field = new_field;
    }
}

/// Express an element of the old field (coordinates in theta) inside the
/// new field given the image of theta.
pub fn map_element(
    elem: &FieldElement,
    theta_image: &FieldElement,
    new_field: &Arc<NumberField>,
) -> FieldElement {
    let p = Poly::new(elem.coords().to_vec());
    let mut acc = new_field.from_rat(Rat::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc
            .mul_ref(theta_image)
            .add_ref(&new_field.from_rat(c.clone()));
    }
    acc
}

/// Rescale a monic rational polynomial to a monic integer one: returns
/// (b, d) with b(x) = d^n a(x/d), so roots of b are d times roots of a.
fn integral_model(a: &QPoly) -> (QPoly, Rat) {
    let mut d = crate::Int::one();
    for c in a.coeffs() {
        d = num_integer::lcm(d, c.denom().clone());
    }
    let d = Rat::from(d);
    let n = a.deg();
    let coeffs: Vec<Rat> = a
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c * crate::rat::pow_rat(&d, (n - i) as i64))
        .collect();
    (QPoly::new(coeffs), d)
}

/// Adjoin a root of monic irreducible h over `field`, producing the
/// compositum as an absolute field: returns (M, image of field's generator
/// in M, the adjoined root in M).
pub fn adjoin_root(
    field: &Arc<NumberField>,
    h: &KPoly,
    degree_cap: usize,
) -> Result<(Arc<NumberField>, FieldElement, FieldElement)> {
    let new_deg = field.degree() * h.deg();
    if new_deg > degree_cap {
        return Err(Error::DegreeTooLarge(new_deg, degree_cap));
    }
    if field.degree() == 1 {
        // absolute case: M = Q[x]/(h~) for an integral model of h
        let a0 = field.generator().as_rational().unwrap();
        let hq = QPoly::new(
            h.coeffs()
                .iter()
                .map(|c| Poly::new(c.coords().to_vec()).eval(&a0))
                .collect(),
        )
        .monic();
        let (b, d) = integral_model(&hq);
        let m = Arc::new(NumberField::new_unchecked(b.to_int_poly().unwrap()));
        let theta = m.from_rat(a0);
        let beta = m.generator().scale(&(Rat::one() / &d));
        return Ok((m, theta, beta));
    }
    for s in 0..64i64 {
        let a = norm_shifted(field, h, s);
        let sf_test = a.gcd(&a.derivative());
        if sf_test.deg() > 0 {
            continue;
        }
        // gamma = beta + s*theta is primitive with minimal polynomial a
        let (b, d) = integral_model(&a.monic());
        let m = Arc::new(NumberField::new_unchecked(b.to_int_poly().unwrap()));
        let gamma = m.generator().scale(&(Rat::one() / &d));
        // theta in M: the linear gcd of (f_theta(t), h(gamma - s t)) over M
        let f_theta_m: KPoly = Poly::new(
            field
                .defining_poly()
                .coeffs()
                .iter()
                .map(|q| m.from_rat(q.clone()))
                .collect(),
        );
        // h(gamma - s t) as polynomial in t over M, with h's coefficients
        // rewritten as polynomials in t as well
        let cps = coeff_polys(h);
        let mut ht = Poly::<FieldElement>::zero();
        let lin = Poly::new(vec![gamma.clone(), m.from_rat(Rat::from(crate::int(-s)))]);
        let mut lp = Poly::<FieldElement>::one();
        for cp in &cps {
            let cpm: KPoly =
                Poly::new(cp.coeffs().iter().map(|q| m.from_rat(q.clone())).collect());
            ht = ht.add(&cpm.mul(&lp));
            lp = lp.mul(&lin);
        }
        let lin_gcd = kpoly_gcd(&f_theta_m, &ht);
        if lin_gcd.deg() != 1 {
            continue;
        }
        let theta = lin_gcd.coeff(0).clone().neg();
        let beta = gamma.sub_ref(&theta.scale(&Rat::from(crate::int(s))));
        return Ok((m, theta, beta));
    }
    Err(Error::Inconclusive("no primitive shift found".to_string()))
}

/// Trace of the class of x^k in K[x]/(g) over K, via Newton power sums.
pub fn rel_power_traces(g: &KPoly, upto: usize) -> Vec<FieldElement> {
    let e = g.deg();
    // p_0 = e
    let mut p = vec![FieldElement::rational(Rat::from(crate::int(e as i64)))];
    // Newton: p_k + c_{e-1} p_{k-1} + ... + c_{e-k+1} p_1 + k c_{e-k} = 0
    for k in 1..=upto {
        let mut acc = FieldElement::zero();
        for i in 1..k {
            if i > e {
                break;
            }
            let c = g.coeff(e - i);
            acc = acc.add_ref(&c.mul_ref(&p[k - i]));
        }
        let ck = if k <= e {
            g.coeff(e - k)
        } else {
            FieldElement::zero()
        };
        let term = ck.scale(&Rat::from(crate::int(k as i64)));
        let pk = acc.add_ref(&term).neg();
        p.push(pk);
    }
    p
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
    fn factor_x2_plus_1_over_gauss() {
        let k = field("x^2 + 1");
        let g = kpoly_from_qpoly(&parse_pretty("x^2 + 1").unwrap());
        let factors = factor_over_field(&k, &g).unwrap();
        assert_eq!(factors.len(), 2);
        for (h, m) in &factors {
            assert_eq!(h.deg(), 1);
            assert_eq!(*m, 1);
        }
        // roots are +-i
        let i = k.generator();
        let roots: Vec<FieldElement> =
            factors.iter().map(|(h, _)| h.coeff(0).clone().neg()).collect();
        assert!(roots.contains(&i));
        assert!(roots.contains(&i.clone().neg()));
    }

    #[test]
    fn factor_x2_minus_2_over_sqrt2() {
        let k = field("x^2 - 2");
        let g = kpoly_from_qpoly(&parse_pretty("x^2 - 2").unwrap());
        let factors = factor_over_field(&k, &g).unwrap();
        assert_eq!(factors.len(), 2);
    }

    #[test]
    fn absolute_minpoly_of_sqrt2() {
        let k = field("x^2 - 2");
        // g = x - sqrt2
        let g = Poly::new(vec![k.generator().neg(), FieldElement::one()]);
        let n = absolute_minpoly(&k, &g);
        assert_eq!(n, parse_pretty("x^2 - 2").unwrap());
        // g = x - 1: norm is (x-1)^2
        let g1 = Poly::new(vec![
            FieldElement::rational(rat(-1, 1)),
            FieldElement::one(),
        ]);
        let n1 = absolute_minpoly(&k, &g1);
        assert_eq!(n1, parse_pretty("x^2 - 2*x + 1").unwrap());
    }

    #[test]
    fn splitting_field_of_x2_plus_1() {
        let q = field("x - 0");
        let g = kpoly_from_qpoly(&parse_pretty("x^2 + 1").unwrap());
        let sp = splitting_field(&q, &g, 16).unwrap();
        assert_eq!(sp.field.degree(), 2);
        assert_eq!(sp.roots.len(), 2);
        for r in &sp.roots {
            let v = kpoly_eval(
                &Poly::new(vec![
                    sp.field.from_rat(rat(1, 1)),
                    sp.field.from_rat(rat(0, 1)),
                    sp.field.from_rat(rat(1, 1)),
                ]),
                r,
            );
            assert!(v.is_zero());
        }
    }

    #[test]
    fn splitting_field_of_x3_minus_2() {
        let q = field("x - 0");
        let g = kpoly_from_qpoly(&parse_pretty("x^3 - 2").unwrap());
        let sp = splitting_field(&q, &g, 24).unwrap();
        assert_eq!(sp.field.degree(), 6);
        assert_eq!(sp.roots.len(), 3);
        // every root satisfies x^3 = 2
        for r in &sp.roots {
            let cube = r.pow(3);
            assert_eq!(cube.as_rational(), Some(rat(2, 1)));
        }
    }

    #[test]
    fn already_split_stays_put() {
        let k = field("x^2 - 2");
        // (x - sqrt2)(x + sqrt2)
        let s = k.generator();
        let g = Poly::new(vec![s.clone().neg(), FieldElement::one()]).mul(&Poly::new(vec![
            s.clone(),
            FieldElement::one(),
        ]));
        let sp = splitting_field(&k, &g, 16).unwrap();
        assert_eq!(sp.field.degree(), 2);
        assert_eq!(sp.roots.len(), 2);
    }

    #[test]
    fn example_field_factorization() {
        // over Q(cbrt 3): X^8 - 4aX^7 + 7a^2X^6 - 21X^5 + 13aX^4 - 5a^2X^3 + 3X^2
        // factors as X^2 (a - X)^2 (X^4 - 2aX^3 + 2a^2X^2 - 3X + a)
        let k = field("x^3 - 3");
        let a = k.generator();
        let a2 = a.mul_ref(&a);
        let z = FieldElement::zero();
        let g = Poly::new(vec![
            z.clone(),
            z.clone(),
            FieldElement::rational(rat(3, 1)),
            a2.scale(&rat(-5, 1)),
            a.scale(&rat(13, 1)),
            FieldElement::rational(rat(-21, 1)),
            a2.scale(&rat(7, 1)),
            a.scale(&rat(-4, 1)),
            FieldElement::one(),
        ]);
        let factors = factor_over_field(&k, &g).unwrap();
        // X (mult 2), X - a (mult 2), quartic (mult 1)
        assert_eq!(factors.len(), 3);
        let degs: Vec<(usize, usize)> = factors.iter().map(|(h, m)| (h.deg(), *m)).collect();
        assert!(degs.contains(&(1, 2)));
        assert!(degs.contains(&(4, 1)));
        // the quartic is X^4 - 2aX^3 + 2a^2X^2 - 3X + a
        let quartic = factors.iter().find(|(h, _)| h.deg() == 4).unwrap();
        let expect = Poly::new(vec![
            a.clone(),
            FieldElement::rational(rat(-3, 1)),
            a2.scale(&rat(2, 1)),
            a.scale(&rat(-2, 1)),
            FieldElement::one(),
        ]);
        assert_eq!(quartic.0, expect);
        // product reconstructs g
        let mut prod = Poly::<FieldElement>::one();
        for (h, m) in &factors {
            prod = prod.mul(&h.pow(*m));
        }
        assert_eq!(prod, kpoly_monic(&g));
    }

    #[test]
    fn power_traces() {
        let k = field("x^2 - 2");
        let s = k.generator();
        // g = x^2 - sqrt2 x + 1: roots b1, b2 with b1+b2 = sqrt2, b1 b2 = 1
        let g = Poly::new(vec![
            FieldElement::one(),
            s.clone().neg(),
            FieldElement::one(),
        ]);
        let p = rel_power_traces(&g, 2);
        assert_eq!(p[1], s); // b1 + b2
        // b1^2 + b2^2 = (b1+b2)^2 - 2 b1 b2 = 2 - 2 = 0
        assert!(p[2].is_zero());
    }
}
