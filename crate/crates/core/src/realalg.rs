//! Exact comparisons of real algebraic quantities against rationals.
//!
//! The interval path refines until separation; ties are broken exactly by
//! locating the value among the real roots of a witness polynomial it is
//! known to satisfy.  The main client is the square-norm boundary test
//! (sum of |root|^2 of a polynomial against a rational), whose per-factor
//! exact values come from totally-real traces, quadratic constant terms,
//! complex-conjugation automorphisms, resolvent cubics and root-difference
//! polynomials.

use crate::error::{Error, Result};
use crate::field::{resultant, FieldElement, NumberField};
use crate::interval::RatInterval;
use crate::roots;
use crate::sturm::SturmChain;
use crate::zfactor;
use crate::{Int, QPoly, Rat};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Nested-enclosure producer: bits -> interval containing the value.
pub type Refiner<'a> = Box<dyn Fn(u32) -> RatInterval + 'a>;

/// Decide value vs c where `value` is known to be a real root of
/// `witness` and `refine` produces nested enclosures of it.
pub fn cmp_alg_vs_rat(witness: &QPoly, refine: &dyn Fn(u32) -> RatInterval, c: &Rat) -> Ordering {
    let at_c = witness.eval(c);
    let mut bits = 32u32;
    if !at_c.is_zero() {
        // value != c, refinement separates
        loop {
            let iv = refine(bits);
            if let Some(ord) = iv.cmp_rat(c) {
                return ord;
            }
            bits *= 2;
            assert!(bits < 1 << 22, "separation failed for nonroot rational");
        }
    }
    // c is a root of the witness: value equals c iff the enclosure
    // eventually isolates c among the witness roots
    let sf = witness.squarefree_part();
    let chain = SturmChain::new(&sf);
    loop {
        let iv = refine(bits);
        if let Some(ord) = iv.cmp_rat(c) {
            return ord;
        }
        // widen to non-root endpoints so every root in [lo, hi] is counted
        let mut step = iv.width().max(Rat::new(Int::one(), Int::one() << bits));
        let mut lo2 = &iv.lo - &step;
        while sf.eval(&lo2).is_zero() {
            step = &step * Rat::from(Int::from(2));
            lo2 = &iv.lo - &step;
        }
        let mut hi2 = iv.hi.clone();
        while sf.eval(&hi2).is_zero() {
            hi2 = &hi2 + &step;
        }
        let inside = chain.count_interval(&lo2, &hi2);
        if inside == 1 && &lo2 < c && c <= &hi2 {
            return Ordering::Equal;
        }
        bits *= 2;
        assert!(bits < 1 << 22, "isolation failed in exact tie-break");
    }
}

/// One summand of an algebraic sum: either exactly rational or an
/// algebraic value with a witness polynomial and a refiner.
pub enum Summand<'a> {
    Exact(Rat),
    Algebraic(QPoly, Refiner<'a>),
}

/// Decide sum of summands vs c.  Composes witnesses by resultants when
/// more than one irrational term remains; degrees are capped.
pub fn cmp_sum_vs_rat(terms: Vec<Summand<'_>>, c: &Rat, degree_cap: usize) -> Result<Ordering> {
    let mut rational = -c.clone();
    let mut algebraic: Vec<(QPoly, Refiner<'_>)> = vec![];
    for t in terms {
        match t {
            Summand::Exact(r) => rational += r,
            Summand::Algebraic(w, r) => algebraic.push((w, r)),
        }
    }
    match algebraic.len() {
        0 => Ok(rational.cmp(&Rat::zero())),
        1 => {
            let (w, r) = &algebraic[0];
            let target = -rational.clone();
            Ok(cmp_alg_vs_rat(w, r, &target))
        }
        _ => {
            // fold terms pairwise via the sum-resultant
            let mut it = algebraic.into_iter();
            let (mut w, mut r) = it.next().unwrap();
            for (w2, r2) in it {
                if w.deg() * w2.deg() > degree_cap {
                    return Err(Error::Inconclusive(
                        "algebraic sum witness degree exceeds cap".into(),
                    ));
                }
                w = compose_sum(&w, &w2);
                let r1 = r;
                r = Box::new(move |bits| r1(bits).add(&r2(bits)));
            }
            let target = -rational.clone();
            Ok(cmp_alg_vs_rat(&w, &r, &target))
        }
    }
}

/// Polynomial with roots a + b over roots a of w1 and b of w2.
pub fn compose_sum(w1: &QPoly, w2: &QPoly) -> QPoly {
    let d = w1.deg() * w2.deg();
    let mut xs = vec![];
    let mut ys = vec![];
    let mut j = 0i64;
    while xs.len() <= d {
        let xj = Rat::from(Int::from(j));
        // w2(x_j - y) as polynomial in y
        let sub = QPoly::new(vec![xj.clone(), -Rat::one()]);
        let w2s = w2.compose(&sub);
        ys.push(resultant(w1, &w2s));
        xs.push(xj);
        j += 1;
    }
    lagrange(&xs, &ys)
}

fn lagrange(xs: &[Rat], ys: &[Rat]) -> QPoly {
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

/// Per-irreducible-factor exact value of sum |root|^2, when available.
fn factor_sq_sum_exact(g: &QPoly) -> Option<Rat> {
    let n = g.deg();
    let p2 = power_sum2(g);
    if n == 1 {
        return Some(p2);
    }
    let chain = SturmChain::new(g);
    let real = chain.count_real();
    if real == n {
        return Some(p2);
    }
    if n == 2 {
        // complex pair: |r|^2 = constant term
        return Some(g.coeff(0) * Rat::from(Int::from(2)));
    }
    // pure binomial x^n + c: all |root|^2 = |c|^(2/n)
    if is_binomial(g) {
        let c2 = g.coeff(0).abs();
        // rational only when |c|^2 is an exact n-th power
        let num = crate::rat::iroot(c2.numer(), n as u32);
        let den = crate::rat::iroot(c2.denom(), n as u32);
        let cand = Rat::new(num.clone(), den.clone());
        if crate::rat::pow_rat(&cand, n as i64) == c2 {
            return Some(&cand * &cand * Rat::from(Int::from(n as i64)));
        }
        return None;
    }
    // complex-conjugation automorphism (CM or totally real already handled)
    if n <= 10 {
        if let Some(q) = cm_trace_value(g) {
            return Some(q);
        }
    }
    None
}

fn is_binomial(g: &QPoly) -> bool {
    (1..g.deg()).all(|i| g.coeff(i).is_zero()) && !g.coeff(0).is_zero()
}

/// Sum of squares of the roots from the first two coefficients.
pub fn power_sum2(g: &QPoly) -> Rat {
    let n = g.deg();
    let e1 = -g.coeff(n - 1);
    let e2 = if n >= 2 { g.coeff(n - 2) } else { Rat::zero() };
    &e1 * &e1 - e2 * Rat::from(Int::from(2))
}

/// If the field Q[x]/(g) carries an automorphism acting as complex
/// conjugation under every embedding, sum |root|^2 = Tr(x * c(x)) exactly.
fn cm_trace_value(g: &QPoly) -> Option<Rat> {
    let k = NumberField::new(&g.monic()).ok()?;
    let factors =
        crate::relpoly::factor_over_field(&k, &crate::relpoly::kpoly_from_qpoly(g)).ok()?;
    let roots_in_k: Vec<FieldElement> = factors
        .iter()
        .filter(|(h, _)| h.deg() == 1)
        .map(|(h, _)| {
            use std::ops::Neg;
            h.coeff(0).clone().neg()
        })
        .collect();
    'cand: for cand in &roots_in_k {
        let mut bits = 40u32;
        loop {
            let embs = k.embeddings(bits);
            let mut confirmed = true;
            for e in &embs {
                // sigma(cand) is a root of g, enclosed by img; it must land
                // in exactly one isolating box and that box must be conj(e)
                let img = cand.eval_box(e);
                let conj = e.conj();
                let hits: Vec<usize> = embs
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| b.intersects(&img))
                    .map(|(j, _)| j)
                    .collect();
                if hits.len() != 1 {
                    confirmed = false;
                    break;
                }
                if embs[hits[0]] != conj {
                    continue 'cand;
                }
            }
            if confirmed {
                let gen = k.generator();
                let prod = gen.mul_ref(cand);
                let (tr, _) = prod.trace_norm();
                return Some(tr);
            }
            bits *= 2;
            if bits > 1 << 12 {
                continue 'cand;
            }
        }
    }
    None
}

/// Witness polynomial and refiner for sum |root|^2 of an irreducible g
/// that has no exact rational value (degree <= 4 complete).
fn factor_sq_sum_witness(g: QPoly) -> Option<(QPoly, Refiner<'static>)> {
    let n = g.deg();
    let gr = g.clone();
    let refiner: Refiner<'static> = Box::new(move |bits: u32| {
        let w = Rat::new(Int::one(), Int::one() << bits);
        let rs = roots::isolate_roots(&gr, &w).unwrap();
        rs.abs_sq_sum()
    });
    if is_binomial(&g) {
        // s = n |c|^(2/n): s^n = n^n c^2
        let c = g.coeff(0);
        let nn = crate::rat::pow_rat(&Rat::from(Int::from(n as i64)), n as i64);
        let w = QPoly::monomial(Rat::one(), n).sub(&QPoly::constant(nn * &c * &c));
        return Some((w, refiner));
    }
    let chain = SturmChain::new(&g);
    let real = chain.count_real();
    if n == 3 && real == 1 {
        // one real root a, pair with product -c0/a:
        // s = a^2 - 2 c0 / a = 3a^2 + 2 c2 a + 2 c1 as element of Q[a]
        let k = NumberField::new(&g.monic()).ok()?;
        let elem = k.element(vec![
            g.coeff(1) * Rat::from(Int::from(2)),
            g.coeff(2) * Rat::from(Int::from(2)),
            Rat::from(Int::from(3)),
        ]);
        let w = elem.min_poly();
        return Some((w, refiner));
    }
    if n == 4 && real == 0 {
        // two pairs: s = 2(rr' + ss') = 2 * (a root of the resolvent cubic)
        // witness: resolvent scaled by 2
        let p = g.coeff(3);
        let q = g.coeff(2);
        let r = g.coeff(1);
        let s0 = g.coeff(0);
        // resolvent cubic y^3 - q y^2 + (pr - 4s) y - (p^2 s - 4 q s + r^2)
        let res = QPoly::new(vec![
            -(&p * &p * &s0 - &q * &s0 * Rat::from(Int::from(4)) + &r * &r),
            &p * &r - &s0 * Rat::from(Int::from(4)),
            -q.clone(),
            Rat::one(),
        ]);
        // value = 2y where y is a root: witness W(x) = res(x/2)
        let half = crate::rat(1, 2);
        let w = res.compose(&QPoly::new(vec![Rat::zero(), half]));
        return Some((w, refiner));
    }
    if n == 4 && real == 2 {
        // s = p2 + v where v = -(r - conj r)^2 is a root of the
        // difference-square polynomial
        let p2 = power_sum2(&g);
        let diffs = difference_poly(&g);
        // roots of diffs are (r_i - r_j); v = -d^2 for the imaginary pair:
        // witness roots -d^2: W(u) = Res_x(diffs, x^2 + u)
        let w = neg_square_roots_poly(&diffs);
        let shifted = w.compose(&QPoly::new(vec![-p2.clone(), Rat::one()]));
        return Some((shifted, refiner));
    }
    None
}

/// Polynomial whose roots are the differences r_i - r_j (i != j) of the
/// roots of g.
pub fn difference_poly(g: &QPoly) -> QPoly {
    let n = g.deg();
    let d = n * n;
    let mut xs = vec![];
    let mut ys = vec![];
    let mut j = 0i64;
    while xs.len() <= d {
        let xj = Rat::from(Int::from(j));
        let shifted = g.compose(&QPoly::new(vec![xj.clone(), Rat::one()]));
        ys.push(resultant(g, &shifted));
        xs.push(xj);
        j += 1;
    }
    let full = lagrange(&xs, &ys);
    // remove the x^n factor from the diagonal i = j
    let mut coeffs = full.coeffs().to_vec();
    coeffs.drain(0..n);
    QPoly::new(coeffs)
}

/// Polynomial whose roots are -d^2 over the roots d of w.
fn neg_square_roots_poly(w: &QPoly) -> QPoly {
    let d = w.deg();
    let mut xs = vec![];
    let mut ys = vec![];
    let mut j = 0i64;
    while xs.len() <= d {
        let u = Rat::from(Int::from(j));
        // Res_x(w(x), x^2 + u)
        let q = QPoly::new(vec![u.clone(), Rat::zero(), Rat::one()]);
        ys.push(resultant(w, &q));
        xs.push(u);
        j += 1;
    }
    lagrange(&xs, &ys)
}

/// Decide sum of |roots|^2 of f (with multiplicity) against rational c.
pub fn cmp_sq_sum(f: &QPoly, c: &Rat) -> Result<Ordering> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(Rat::zero().cmp(c));
    }
    // interval path first
    let mut bits = 24u32;
    while bits <= 128 {
        let w = Rat::new(Int::one(), Int::one() << bits);
        let rs = roots::isolate_roots(f, &w)?;
        if let Some(ord) = rs.abs_sq_sum().cmp_rat(c) {
            return Ok(ord);
        }
        bits *= 2;
    }
    // exact path per irreducible factor
    let (_, factors) = zfactor::factor_rational(f)?;
    let mut terms: Vec<Summand<'static>> = vec![];
    for (g, m) in &factors {
        if let Some(v) = factor_sq_sum_exact(g) {
            terms.push(Summand::Exact(v * Rat::from(Int::from(*m as i64))));
            continue;
        }
        let (w, r) = factor_sq_sum_witness(g.clone()).ok_or_else(|| {
            Error::Inconclusive(format!("no exact witness for degree {} factor", g.deg()))
        })?;
        if *m == 1 {
            terms.push(Summand::Algebraic(w, r));
        } else {
            // value scaled by multiplicity: witness W(x/m)
            let minv = Rat::new(Int::one(), Int::from(*m as i64));
            let wm = w.compose(&QPoly::new(vec![Rat::zero(), minv]));
            let mm = *m;
            let rm: Refiner<'static> =
                Box::new(move |bits| r(bits).scale(&Rat::from(Int::from(mm as i64))));
            terms.push(Summand::Algebraic(wm, rm));
        }
    }
    cmp_sum_vs_rat(terms, c, 4096)
}

/// q(f) = (sum |roots|^2) / deg f compared against a rational bound.
pub fn cmp_q_of_poly(f: &QPoly, bound: &Rat) -> Result<Ordering> {
    let n = f.deg();
    cmp_sq_sum(f, &(bound * Rat::from(Int::from(n as i64))))
}

/// Exact rational value of q for a monic irreducible minimal polynomial,
/// when one of the exact layers applies.
pub fn q_exact(minpoly: &QPoly) -> Option<Rat> {
    let n = minpoly.deg();
    factor_sq_sum_exact(minpoly).map(|s| s / Rat::from(Int::from(n as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_pretty;
    use crate::rat;

    #[test]
    fn boundary_cases_exact() {
        // (x+2)^3 has q exactly 4
        let f = parse_pretty("x^3 + 6*x^2 + 12*x + 8").unwrap();
        assert_eq!(cmp_q_of_poly(&f, &rat(4, 1)).unwrap(), Ordering::Equal);
        // x^2 + 4: complex pair, q = 4
        let g = parse_pretty("x^2 + 4").unwrap();
        assert_eq!(cmp_q_of_poly(&g, &rat(4, 1)).unwrap(), Ordering::Equal);
        // x^4 + 16: q = 4 with two complex pairs
        let h = parse_pretty("x^4 + 16").unwrap();
        assert_eq!(cmp_q_of_poly(&h, &rat(4, 1)).unwrap(), Ordering::Equal);
        // x^4 - 16: roots +-2, +-2i
        let h2 = parse_pretty("x^4 - 16").unwrap();
        assert_eq!(cmp_q_of_poly(&h2, &rat(4, 1)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn strict_cases() {
        let f = parse_pretty("x^2 - x + 2").unwrap();
        assert_eq!(cmp_q_of_poly(&f, &rat(4, 1)).unwrap(), Ordering::Less);
        assert_eq!(cmp_q_of_poly(&f, &rat(2, 1)).unwrap(), Ordering::Equal);
        assert_eq!(cmp_q_of_poly(&f, &rat(1, 1)).unwrap(), Ordering::Greater);
        // x^3 - 3: q = 3^(2/3), irrational
        let g = parse_pretty("x^3 - 3").unwrap();
        assert_eq!(cmp_q_of_poly(&g, &rat(2, 1)).unwrap(), Ordering::Greater);
        assert_eq!(
            cmp_q_of_poly(&g, &rat(2081, 1000)).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn totally_real_boundary() {
        // x^3 - 2x^2 - x + 1 is totally real with q exactly 2
        let f = parse_pretty("x^3 - 2*x^2 - x + 1").unwrap();
        assert_eq!(cmp_q_of_poly(&f, &rat(2, 1)).unwrap(), Ordering::Equal);
        assert_eq!(q_exact(&f), Some(rat(2, 1)));
    }

    #[test]
    fn cubic_one_real_boundary() {
        // cubic with a complex pair whose q is irrational: x^3 + x + 1
        let f = parse_pretty("x^3 + x + 1").unwrap();
        // s = 3a^2 + 2: compare against nearby rationals both ways
        assert_eq!(cmp_sq_sum(&f, &rat(3, 1)).unwrap(), Ordering::Greater);
        assert_eq!(cmp_sq_sum(&f, &rat(4, 1)).unwrap(), Ordering::Less);
    }

    #[test]
    fn quartic_two_real_boundary() {
        // x^4 - 2: roots +-2^(1/4), +-i 2^(1/4): sum |r|^2 = 4*sqrt2
        let f = parse_pretty("x^4 - 2").unwrap();
        assert_eq!(cmp_sq_sum(&f, &rat(56, 10)).unwrap(), Ordering::Greater);
        assert_eq!(cmp_sq_sum(&f, &rat(57, 10)).unwrap(), Ordering::Less);
        // and q_exact knows binomials with exact powers
        assert_eq!(q_exact(&parse_pretty("x^4 + 16").unwrap()), Some(rat(4, 1)));
        assert_eq!(q_exact(&parse_pretty("x^4 - 2").unwrap()), None);
    }

    #[test]
    fn cyclotomic_cm_value() {
        // zeta_5: q = 1 via the conjugation automorphism
        let f = parse_pretty("x^4 + x^3 + x^2 + x + 1").unwrap();
        assert_eq!(q_exact(&f), Some(rat(1, 1)));
        assert_eq!(cmp_q_of_poly(&f, &rat(1, 1)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn composed_sum_ties() {
        // sqrt2 + (2 - sqrt2) = 2 decided exactly through composition
        let w1 = parse_pretty("x^2 - 2").unwrap();
        let w2 = parse_pretty("x^2 - 4*x + 2").unwrap(); // roots 2 +- sqrt2
        let terms = vec![
            Summand::Algebraic(
                w1.clone(),
                Box::new(|bits| {
                    let w = rat(1, 1) / Rat::from(Int::one() << bits);
                    let rs = roots::isolate_roots(&w1, &w).unwrap();
                    // positive root
                    rs.boxes()
                        .iter()
                        .map(|(b, _)| b.re.clone())
                        .find(|i| i.lo.is_positive())
                        .unwrap()
                }),
            ),
            Summand::Algebraic(
                w2.clone(),
                Box::new(|bits| {
                    let w = rat(1, 1) / Rat::from(Int::one() << bits);
                    let rs = roots::isolate_roots(&w2, &w).unwrap();
                    // smaller root 2 - sqrt2
                    rs.boxes()
                        .iter()
                        .map(|(b, _)| b.re.clone())
                        .min_by(|a, b| a.lo.cmp(&b.lo))
                        .unwrap()
                }),
            ),
        ];
        assert_eq!(cmp_sum_vs_rat(terms, &rat(2, 1), 64).unwrap(), Ordering::Equal);
    }
}
