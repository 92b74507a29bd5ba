//! Certified complex root isolation and refinement.
//!
//! Multiplicities come from exact squarefree decomposition; real roots are
//! isolated by Sturm bisection and complex ones by floating-point Aberth
//! iteration followed by an exact one-root disk certificate, so every
//! returned box is backed by rational arithmetic only.

use crate::error::{Error, Result};
use crate::interval::{ComplexBox, RatInterval};
use crate::rat::{dyadic_round, sqrt_lb, sqrt_ub};
use crate::sturm::{self, SturmChain};
use crate::{Int, QPoly, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BoxKind {
    Real,
    Upper,
}

#[derive(Debug, Clone)]
struct RootBox {
    bx: ComplexBox,
    mult: usize,
    part: usize,
    kind: BoxKind,
}

/// Certified enclosures for all complex roots of a rational polynomial.
#[derive(Debug, Clone)]
pub struct RootSet {
    poly: QPoly,
    parts: Vec<QPoly>,
    roots: Vec<RootBox>,
}

impl RootSet {
    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    /// All root boxes with multiplicity, conjugates included, in a stable
    /// order (upper-half boxes immediately followed by their mirrors).
    pub fn boxes(&self) -> Vec<(ComplexBox, usize)> {
        let mut out = vec![];
        for r in &self.roots {
            out.push((r.bx.clone(), r.mult));
            if r.kind == BoxKind::Upper {
                out.push((r.bx.conj(), r.mult));
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.roots
            .iter()
            .map(|r| match r.kind {
                BoxKind::Real => r.mult,
                BoxKind::Upper => 2 * r.mult,
            })
            .sum()
    }

    pub fn max_width(&self) -> Rat {
        self.roots
            .iter()
            .map(|r| r.bx.width())
            .max()
            .unwrap_or_else(Rat::zero)
    }

    /// Certified enclosure of the sum of |root|^2 over all roots with
    /// multiplicity.
    pub fn abs_sq_sum(&self) -> RatInterval {
        let mut acc = RatInterval::zero();
        for r in &self.roots {
            let weight = match r.kind {
                BoxKind::Real => r.mult,
                BoxKind::Upper => 2 * r.mult,
            };
            let a = r.bx.abs_sq();
            acc = acc.add(&a.scale(&Rat::from(Int::from(weight as i64))));
        }
        acc
    }

    /// Certified enclosure of the product of |root|^2 over all roots.
    pub fn abs_sq_prod(&self) -> RatInterval {
        let mut acc = RatInterval::point(Rat::one());
        for r in &self.roots {
            let weight = match r.kind {
                BoxKind::Real => r.mult,
                BoxKind::Upper => 2 * r.mult,
            };
            let a = r.bx.abs_sq();
            for _ in 0..weight {
                acc = acc.mul(&a);
            }
        }
        acc
    }

    /// Certified enclosure of max |root|.
    pub fn max_abs(&self, bits: u32) -> RatInterval {
        let mut lo = Rat::zero();
        let mut hi = Rat::zero();
        for r in &self.roots {
            let a = r.bx.abs(bits);
            if a.lo > lo {
                lo = a.lo.clone();
            }
            if a.hi > hi {
                hi = a.hi.clone();
            }
        }
        RatInterval::new(lo, hi)
    }

    pub fn real_root_count(&self) -> usize {
        self.roots
            .iter()
            .filter(|r| r.kind == BoxKind::Real)
            .map(|r| r.mult)
            .sum()
    }
}

// ---- exact one-root certificate ----

pub(crate) type CRat = (Rat, Rat);

pub(crate) fn c_add(a: &CRat, b: &CRat) -> CRat {
    (&a.0 + &b.0, &a.1 + &b.1)
}

pub(crate) fn c_mul(a: &CRat, b: &CRat) -> CRat {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

pub(crate) fn c_abs_sq(a: &CRat) -> Rat {
    &a.0 * &a.0 + &a.1 * &a.1
}

pub(crate) fn c_div(a: &CRat, b: &CRat) -> CRat {
    let d = c_abs_sq(b);
    let n = c_mul(a, &(b.0.clone(), -b.1.clone()));
    (n.0 / &d, n.1 / &d)
}

/// Taylor coefficients of f(c + w) in w, exact.
fn taylor_at(f: &QPoly, c: &CRat) -> Vec<CRat> {
    let n = f.deg();
    let mut work: Vec<CRat> = f
        .coeffs()
        .iter()
        .map(|q| (q.clone(), Rat::zero()))
        .collect();
    let mut out = Vec::with_capacity(n + 1);
    for _k in 0..=n {
        if work.is_empty() {
            break;
        }
        // synthetic division of work by (w - c): remainder is the next coefficient
        let mut rem = (Rat::zero(), Rat::zero());
        for j in (0..work.len()).rev() {
            rem = c_add(&c_mul(&rem, c), &work[j]);
            work[j] = rem.clone();
        }
        out.push(work.remove(0));
    }
    out
}

/// Exact Rouché test: the open disk |z - c| < rho contains exactly one
/// root of f.
pub(crate) fn one_root_in_disk(f: &QPoly, cx: &Rat, cy: &Rat, rho: &Rat) -> bool {
    let a = taylor_at(f, &(cx.clone(), cy.clone()));
    if a.len() < 2 {
        return false;
    }
    let bits = 32;
    let lb_a1 = sqrt_lb(&c_abs_sq(&a[1]), bits);
    let lhs = lb_a1 * rho;
    let mut rhs = sqrt_ub(&c_abs_sq(&a[0]), bits);
    let mut rp = rho.clone();
    for ak in a.iter().skip(2) {
        rp *= rho;
        rhs += sqrt_ub(&c_abs_sq(ak), bits) * &rp;
    }
    lhs > rhs
}

// ---- floating point Aberth-Ehrlich hints ----

fn aberth_f64(coeffs: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return vec![];
    }
    let an = coeffs[n];
    let an_abs = (an.0 * an.0 + an.1 * an.1).sqrt().max(1e-300);
    let mut radius: f64 = 1.0;
    for c in coeffs.iter().take(n) {
        let m = (c.0 * c.0 + c.1 * c.1).sqrt() / an_abs;
        radius = radius.max(1.0 + m);
    }
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            let r = radius * (0.5 + 0.5 * ((k % 7) as f64 + 1.0) / 7.0);
            (r * theta.cos(), r * theta.sin())
        })
        .collect();
    let cdiv = |a: (f64, f64), b: (f64, f64)| -> (f64, f64) {
        let d = (b.0 * b.0 + b.1 * b.1).max(1e-300);
        ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
    };
    let cmul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    for _ in 0..500 {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let mut p = (0.0, 0.0);
            let mut dp = (0.0, 0.0);
            for c in coeffs.iter().rev() {
                dp = {
                    let t = cmul(dp, z[i]);
                    (t.0 + p.0, t.1 + p.1)
                };
                p = {
                    let t = cmul(p, z[i]);
                    (t.0 + c.0, t.1 + c.1)
                };
            }
            if p.0 == 0.0 && p.1 == 0.0 {
                continue;
            }
            let newton = cdiv(p, dp);
            let mut s = (0.0, 0.0);
            for j in 0..n {
                if i != j {
                    let d = (z[i].0 - z[j].0, z[i].1 - z[j].1);
                    let inv = cdiv((1.0, 0.0), d);
                    s = (s.0 + inv.0, s.1 + inv.1);
                }
            }
            let denom = (
                1.0 - (newton.0 * s.0 - newton.1 * s.1),
                -(newton.0 * s.1 + newton.1 * s.0),
            );
            let w = cdiv(newton, denom);
            z[i] = (z[i].0 - w.0, z[i].1 - w.1);
            moved = moved.max((w.0 * w.0 + w.1 * w.1).sqrt());
        }
        if moved < 1e-14 * radius.max(1.0) {
            break;
        }
    }
    z
}

// ---- high precision fallback: Aberth over dyadic rationals ----

fn aberth_exact(f: &QPoly, seeds: &[CRat], bits: u32, iters: usize) -> Vec<CRat> {
    let df = f.derivative();
    let n = seeds.len();
    let mut z: Vec<CRat> = seeds.to_vec();
    for _ in 0..iters {
        for i in 0..n {
            let zi = z[i].clone();
            let p = eval_c(f, &zi);
            if p.0.is_zero() && p.1.is_zero() {
                continue;
            }
            let dp = eval_c(&df, &zi);
            if dp.0.is_zero() && dp.1.is_zero() {
                continue;
            }
            let newton = c_div(&p, &dp);
            let mut s = (Rat::zero(), Rat::zero());
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let d = (&zi.0 - &zj.0, &zi.1 - &zj.1);
                    if d.0.is_zero() && d.1.is_zero() {
                        continue;
                    }
                    let inv = c_div(&(Rat::one(), Rat::zero()), &d);
                    s = c_add(&s, &inv);
                }
            }
            let prod = c_mul(&newton, &s);
            let denom = (Rat::one() - &prod.0, -prod.1.clone());
            let w = if denom.0.is_zero() && denom.1.is_zero() {
                newton
            } else {
                c_div(&newton, &denom)
            };
            z[i] = (
                dyadic_round(&(&zi.0 - &w.0), bits),
                dyadic_round(&(&zi.1 - &w.1), bits),
            );
        }
    }
    z
}

pub(crate) fn eval_c(f: &QPoly, z: &CRat) -> CRat {
    let mut acc = (Rat::zero(), Rat::zero());
    for c in f.coeffs().iter().rev() {
        acc = c_mul(&acc, z);
        acc.0 += c;
    }
    acc
}

// ---- isolation ----

/// Rational point in (lo, hi) that is not a root of f.
fn nonroot_between(f: &QPoly, lo: &Rat, hi: &Rat) -> Rat {
    let two = Rat::from(Int::from(2));
    let mut m = (lo + hi) / &two;
    let mut k = 3i64;
    while f.eval(&m).is_zero() {
        m = lo + (hi - lo) / Rat::from(Int::from(k));
        k += 1;
    }
    m
}

/// Isolate the real roots of squarefree g into strictly disjoint closed
/// intervals with non-root endpoints, each of width <= w.
fn isolate_real(g: &QPoly, w: &Rat) -> Vec<RatInterval> {
    let chain = SturmChain::new(g);
    let total = chain.count_real();
    if total == 0 {
        return vec![];
    }
    let b = sturm::cauchy_bound(g);
    let mut work = vec![(-b.clone(), b.clone())];
    let mut found = vec![];
    while let Some((lo, hi)) = work.pop() {
        let n = chain.count_interval(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo <= *w {
            found.push(RatInterval::new(lo, hi));
            continue;
        }
        let m = nonroot_between(g, &lo, &hi);
        work.push((lo, m.clone()));
        work.push((m, hi));
    }
    found.sort_by(|a, b| a.lo.cmp(&b.lo));
    debug_assert_eq!(found.len(), total);
    found
}

/// Certify one upper-half-plane box per complex-conjugate root pair of
/// squarefree g.  `pairs` is the expected number of pairs.
fn isolate_upper(g: &QPoly, pairs: usize, width: &Rat) -> Result<Vec<ComplexBox>> {
    if pairs == 0 {
        return Ok(vec![]);
    }
    let coeffs_f64: Option<Vec<(f64, f64)>> = g
        .coeffs()
        .iter()
        .map(|c| c.to_f64().map(|x| (x, 0.0)))
        .collect();
    let mut prec_bits = 60u32;
    let mut seeds: Vec<CRat> = match coeffs_f64 {
        Some(cs) if cs.iter().all(|c| c.0.is_finite()) => aberth_f64(&cs)
            .into_iter()
            .map(|(x, y)| (approx_rat(x), approx_rat(y)))
            .collect(),
        _ => ring_seeds(g),
    };
    for _attempt in 0..12 {
        let mut cand: Vec<CRat> = seeds.clone();
        cand.sort_by(|a, b| b.1.cmp(&a.1));
        cand.truncate(pairs);
        if cand.len() == pairs && cand.iter().all(|c| c.1.is_positive()) {
            if let Some(boxes) = certify_all(g, &cand, width) {
                return Ok(boxes);
            }
        }
        prec_bits *= 2;
        seeds = aberth_exact(g, &ring_seeds(g), prec_bits, 40 + 4 * g.deg());
        if prec_bits > 4000 {
            break;
        }
    }
    Err(Error::Inconclusive(format!(
        "complex root isolation did not converge for degree {}",
        g.deg()
    )))
}

fn ring_seeds(g: &QPoly) -> Vec<CRat> {
    let n = g.deg();
    let b = sturm::cauchy_bound(g);
    (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            (approx_rat(theta.cos()) * &b, approx_rat(theta.sin()) * &b)
        })
        .collect()
}

fn approx_rat(x: f64) -> Rat {
    if !x.is_finite() {
        return Rat::zero();
    }
    let scaled = (x * (1u64 << 40) as f64).round();
    if scaled.abs() >= 9.0e18 {
        return Rat::from(Int::from(scaled as i128));
    }
    Rat::new(Int::from(scaled as i64), Int::from(1u64 << 40))
}

fn certify_all(g: &QPoly, centers: &[CRat], width: &Rat) -> Option<Vec<ComplexBox>> {
    let mut centers = centers.to_vec();
    let df = g.derivative();
    let mut out = vec![];
    for i in 0..centers.len() {
        let mut c = centers[i].clone();
        let mut cert: Option<ComplexBox> = None;
        let mut bits = 80u32;
        for _ in 0..12 {
            let mut min_sep = c.1.clone() * Rat::from(Int::from(2));
            for (j, o) in centers.iter().enumerate() {
                if j != i {
                    let d2 = c_abs_sq(&(&c.0 - &o.0, &c.1 - &o.1));
                    let d = sqrt_lb(&d2, 20);
                    if d < min_sep {
                        min_sep = d;
                    }
                    let d2m = c_abs_sq(&(&c.0 - &o.0, &c.1 + &o.1));
                    let dm = sqrt_lb(&d2m, 20);
                    if dm < min_sep {
                        min_sep = dm;
                    }
                }
            }
            if min_sep.is_positive() {
                let mut rho = min_sep / Rat::from(Int::from(3));
                for _ in 0..6 {
                    if rho < c.1 && one_root_in_disk(g, &c.0, &c.1, &rho) {
                        cert = Some(ComplexBox::new(
                            RatInterval::new(&c.0 - &rho, &c.0 + &rho),
                            RatInterval::new(&c.1 - &rho, &c.1 + &rho),
                        ));
                        break;
                    }
                    rho /= Rat::from(Int::from(2));
                }
            }
            if cert.is_some() {
                break;
            }
            let p = eval_c(g, &c);
            let dp = eval_c(&df, &c);
            if dp.0.is_zero() && dp.1.is_zero() {
                return None;
            }
            let w = c_div(&p, &dp);
            c = (
                dyadic_round(&(&c.0 - &w.0), bits),
                dyadic_round(&(&c.1 - &w.1), bits),
            );
            bits *= 2;
        }
        let bx = cert?;
        centers[i] = c.clone();
        out.push(refine_upper(g, &bx, width));
    }
    for i in 0..out.len() {
        for j in 0..out.len() {
            if i != j && (out[i].intersects(&out[j]) || out[i].intersects(&out[j].conj())) {
                return None;
            }
        }
        if !out[i].im.lo.is_positive() {
            return None;
        }
    }
    Some(out)
}

/// Shrink a certified upper box around a simple root of g to width <= w.
/// Newton iteration at doubling precision, then a direct disk certificate
/// at the target radius.
fn refine_upper(g: &QPoly, bx: &ComplexBox, w: &Rat) -> ComplexBox {
    if bx.width() <= *w {
        return bx.clone();
    }
    let df = g.derivative();
    let target = w / Rat::from(Int::from(4));
    let mut c = (bx.re.mid(), bx.im.mid());
    let mut bits = 64u32;
    loop {
        for _ in 0..2 {
            let p = eval_c(g, &c);
            let dp = eval_c(&df, &c);
            if dp.0.is_zero() && dp.1.is_zero() {
                break;
            }
            let step = c_div(&p, &dp);
            c = (
                dyadic_round(&(&c.0 - &step.0), bits),
                dyadic_round(&(&c.1 - &step.1), bits),
            );
        }
        let mut rho = target.clone();
        for _ in 0..4 {
            if rho < c.1 && one_root_in_disk(g, &c.0, &c.1, &rho) {
                let nb = ComplexBox::new(
                    RatInterval::new(&c.0 - &rho, &c.0 + &rho),
                    RatInterval::new(&c.1 - &rho, &c.1 + &rho),
                );
                if nb.intersects(bx) && nb.width() <= *w {
                    return nb;
                }
                break;
            }
            rho = &rho * Rat::from(Int::from(2));
            if &rho * Rat::from(Int::from(2)) > *w {
                break;
            }
        }
        // Newton may have wandered outside the certified region; restart
        if !(bx.re.contains(&c.0) && bx.im.contains(&c.1)) {
            c = (bx.re.mid(), bx.im.mid());
        }
        bits = bits.saturating_mul(2);
        if bits > 1 << 22 {
            panic!("complex root refinement failed to converge");
        }
    }
}

/// Isolate all complex roots of f with multiplicities into boxes of side
/// <= width.  The box list is conjugate-symmetric.
pub fn isolate_roots(f: &QPoly, width: &Rat) -> Result<RootSet> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dec = f.squarefree_decomposition();
    let mut parts = vec![];
    let mut roots: Vec<RootBox> = vec![];
    for (g, mult) in dec {
        let part_idx = parts.len();
        let reals = isolate_real(&g, width);
        let pairs = (g.deg() - reals.len()) / 2;
        let uppers = isolate_upper(&g, pairs, width)?;
        for r in reals {
            roots.push(RootBox {
                bx: ComplexBox::real(r),
                mult,
                part: part_idx,
                kind: BoxKind::Real,
            });
        }
        for u in uppers {
            roots.push(RootBox {
                bx: u,
                mult,
                part: part_idx,
                kind: BoxKind::Upper,
            });
        }
        parts.push(g);
    }
    let mut rs = RootSet {
        poly: f.clone(),
        parts,
        roots,
    };
    separate(&mut rs, width);
    sort_roots(&mut rs);
    Ok(rs)
}

fn sort_roots(rs: &mut RootSet) {
    rs.roots
        .sort_by(|a, b| (&a.bx.re.lo, &a.bx.im.lo).cmp(&(&b.bx.re.lo, &b.bx.im.lo)));
}

/// Refine until all boxes (with mirrors) are pairwise disjoint.
fn separate(rs: &mut RootSet, width: &Rat) {
    let mut w = width.clone();
    loop {
        let mut clash = false;
        'scan: for i in 0..rs.roots.len() {
            for j in 0..rs.roots.len() {
                if i == j {
                    continue;
                }
                let a = &rs.roots[i];
                let b = &rs.roots[j];
                let hit = a.bx.intersects(&b.bx)
                    || (b.kind == BoxKind::Upper && a.bx.intersects(&b.bx.conj()))
                    || (a.kind == BoxKind::Upper && a.bx.conj().intersects(&b.bx));
                if hit {
                    clash = true;
                    break 'scan;
                }
            }
        }
        if !clash {
            return;
        }
        w /= Rat::from(Int::from(4));
        refine_all(rs, &w);
    }
}

fn refine_all(rs: &mut RootSet, w: &Rat) {
    for i in 0..rs.roots.len() {
        let part = rs.parts[rs.roots[i].part].clone();
        match rs.roots[i].kind {
            BoxKind::Real => {
                let cur = rs.roots[i].bx.re.clone();
                if cur.width() > *w {
                    let (lo, hi) = refine_real_box(&part, &cur, w);
                    rs.roots[i].bx = ComplexBox::real(RatInterval::new(lo, hi));
                }
            }
            BoxKind::Upper => {
                let cur = rs.roots[i].bx.clone();
                rs.roots[i].bx = refine_upper(&part, &cur, w);
            }
        }
    }
}

fn refine_real_box(g: &QPoly, cur: &RatInterval, w: &Rat) -> (Rat, Rat) {
    let mut lo = cur.lo.clone();
    let mut hi = cur.hi.clone();
    if &hi - &lo <= *w {
        return (lo, hi);
    }
    let df = g.derivative();
    // establish a sign change; fall back to Sturm bisection when the
    // endpoints do not separate signs yet (root at the boundary region)
    let mut flo = g.eval(&lo);
    let mut fhi = g.eval(&hi);
    if flo.is_zero() || fhi.is_zero() || flo.is_positive() == fhi.is_positive() {
        let chain = SturmChain::new(g);
        while &hi - &lo > *w {
            let m = nonroot_between(g, &lo, &hi);
            if chain.count_interval(&lo, &m) == 1 {
                hi = m;
            } else {
                lo = m;
            }
        }
        return (lo, hi);
    }
    let target = w / Rat::from(Int::from(4));
    let mut bits = 64u32;
    loop {
        // Newton from the midpoint at doubling precision
        let mut c = (&lo + &hi) / Rat::from(Int::from(2));
        for _ in 0..2 {
            let p = g.eval(&c);
            let dp = df.eval(&c);
            if dp.is_zero() {
                break;
            }
            c = dyadic_round(&(&c - p / dp), bits);
        }
        let clo = (&c - &target).max(lo.clone());
        let chi = (&c + &target).min(hi.clone());
        if clo < chi {
            let vlo = g.eval(&clo);
            let vhi = g.eval(&chi);
            if !vlo.is_zero() && !vhi.is_zero() && vlo.is_positive() != vhi.is_positive() {
                return (clo, chi);
            }
        }
        // one bisection step keeps progress guaranteed
        let m = nonroot_between(g, &lo, &hi);
        let fm = g.eval(&m);
        if fm.is_positive() == flo.is_positive() {
            lo = m;
            flo = fm;
        } else {
            hi = m;
            fhi = fm;
        }
        let _ = &fhi;
        if &hi - &lo <= *w {
            return (lo, hi);
        }
        bits = bits.saturating_mul(2);
        if bits > 1 << 22 {
            panic!("real root refinement failed to converge");
        }
    }
}

/// Same roots, boxes shrunk to side <= width; idempotent at equal width.
pub fn refine(rs: &RootSet, width: &Rat) -> RootSet {
    let mut out = rs.clone();
    if out.max_width() <= *width {
        return out;
    }
    refine_all(&mut out, width);
    separate(&mut out, width);
    sort_roots(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn qp(v: &[i64]) -> QPoly {
        QPoly::new(v.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn isolates_x2_plus_1() {
        let rs = isolate_roots(&qp(&[1, 0, 1]), &rat(1, 64)).unwrap();
        let boxes = rs.boxes();
        assert_eq!(boxes.len(), 2);
        assert!(boxes.iter().any(|(b, _)| b.im.lo.is_positive()));
        assert!(boxes.iter().any(|(b, _)| b.im.hi.is_negative()));
        for (b, _) in &boxes {
            assert!(b.re.contains(&Rat::zero()));
            assert!(b.abs_sq().contains(&rat(1, 1)));
        }
    }

    #[test]
    fn proof7_example_magnitudes() {
        // x^2 - x + 2 has roots (1 +- i sqrt7)/2 of squared magnitude 2
        let rs = isolate_roots(&qp(&[2, -1, 1]), &rat(1, 1 << 20)).unwrap();
        let sum = rs.abs_sq_sum();
        assert!(sum.contains(&rat(4, 1)));
        assert!(sum.width() < rat(1, 1 << 10));
    }

    #[test]
    fn cube_root_of_three() {
        let w = rat(1, 1 << 20);
        let rs = isolate_roots(&qp(&[-3, 0, 0, 1]), &w).unwrap();
        assert_eq!(rs.real_root_count(), 1);
        let boxes = rs.boxes();
        assert_eq!(boxes.len(), 3);
        // real root approx 1.442249570
        let real = boxes.iter().find(|(b, _)| b.is_real_line()).unwrap();
        assert!(real.0.re.lo < rat(1_442_250, 1_000_000));
        assert!(real.0.re.hi > rat(1_442_249, 1_000_000));
    }

    #[test]
    fn multiplicities_via_squarefree() {
        // (x^2+1)^2 (x-1)^3
        let f = qp(&[1, 0, 1]).pow(2).mul(&qp(&[-1, 1]).pow(3));
        let rs = isolate_roots(&f, &rat(1, 256)).unwrap();
        assert_eq!(rs.degree(), 7);
        let boxes = rs.boxes();
        let mults: Vec<usize> = boxes.iter().map(|(_, m)| *m).collect();
        assert!(mults.contains(&2));
        assert!(mults.contains(&3));
    }

    #[test]
    fn refinement_is_nested_and_idempotent() {
        let f = qp(&[2, -1, 1]);
        let rs = isolate_roots(&f, &rat(1, 16)).unwrap();
        let r1 = refine(&rs, &rat(1, 1 << 12));
        assert!(r1.max_width() <= rat(1, 1 << 12));
        let r2 = refine(&r1, &rat(1, 1 << 12));
        assert_eq!(r2.max_width(), r1.max_width());
        for (nb, _) in r1.boxes() {
            assert!(rs
                .boxes()
                .iter()
                .any(|(ob, _)| ob.re.contains_interval(&nb.re) && ob.im.contains_interval(&nb.im)));
        }
    }

    #[test]
    fn soundness_random_polys() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let deg = rng.gen_range(1..=6);
            let mut v: Vec<Rat> = (0..deg).map(|_| rat(rng.gen_range(-9..=9), 1)).collect();
            v.push(rat(rng.gen_range(1..=5), 1));
            let f = QPoly::new(v);
            if f.is_zero() || f.deg() == 0 {
                continue;
            }
            let w = rat(1, 1 << 16);
            let rs = isolate_roots(&f, &w).unwrap();
            assert_eq!(rs.degree(), f.deg());
            for (b, _) in rs.boxes() {
                let val = b.eval_qpoly(&f);
                let m = val.abs_sq();
                assert!(m.lo < rat(1, 1 << 8), "f large at root box of {:?}", f);
            }
        }
    }
}
