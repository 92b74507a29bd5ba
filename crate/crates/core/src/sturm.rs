//! Exact real-root counting and isolation via Sturm sequences.
//!
//! Chains are computed with a primitive-part pseudo-remainder sequence so
//! all arithmetic stays in the integers.

use crate::{Int, QPoly, Rat, ZPoly};
use num_traits::{One, Signed, Zero};

/// Sturm chain of a squarefree-or-not rational polynomial (applied to the
/// squarefree part internally for isolation; counting works regardless
/// since common factors only drop the chain's length).
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<ZPoly>,
}

fn neg_prem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    // pseudo-remainder lc(b)^(d+1) * a mod b, content-stripped and with the
    // sign arranged so the result is a positive multiple of -(a mod b)
    let d = a.deg() as i64 - b.deg() as i64;
    if d < 0 {
        return a.clone();
    }
    let lb = b.lc();
    let mut r = a.clone();
    for _ in 0..=(d as usize) {
        if r.is_zero() || r.deg() < b.deg() {
            r = r.scale(&lb);
            continue;
        }
        let k = r.deg() - b.deg();
        let c = r.lc();
        r = r.scale(&lb).sub(&b.scale(&c).shift_up(k));
    }
    let content = r.content();
    if content.is_zero() {
        return ZPoly::zero();
    }
    let r = ZPoly::new(r.coeffs().iter().map(|c| c / &content).collect());
    let mult_negative = lb.is_negative() && (d + 1) % 2 == 1;
    if mult_negative {
        r
    } else {
        r.neg()
    }
}

impl SturmChain {
    pub fn new(f: &QPoly) -> Self {
        let (fz, _) = f.primitive();
        let mut chain = vec![];
        if fz.is_zero() {
            return SturmChain { chain };
        }
        chain.push(fz.clone());
        let df = fz.derivative();
        if !df.is_zero() {
            chain.push(df);
            loop {
                let n = chain.len();
                let r = neg_prem(&chain[n - 2], &chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r);
            }
        }
        SturmChain { chain }
    }

    fn sign_at(p: &ZPoly, x: &Rat) -> i32 {
        let mut acc = Rat::zero();
        for c in p.coeffs().iter().rev() {
            acc = acc * x + Rat::from(c.clone());
        }
        if acc.is_zero() {
            0
        } else if acc.is_positive() {
            1
        } else {
            -1
        }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut last = 0;
        let mut v = 0;
        for p in &self.chain {
            let s = Self::sign_at(p, x);
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    fn variations_at_inf(&self, positive: bool) -> usize {
        let mut last = 0;
        let mut v = 0;
        for p in &self.chain {
            if p.is_zero() {
                continue;
            }
            let mut s = if p.lc().is_positive() { 1 } else { -1 };
            if !positive && p.deg() % 2 == 1 {
                s = -s;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct real roots in (a, b].
    pub fn count_interval(&self, a: &Rat, b: &Rat) -> usize {
        assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_at_inf(false) - self.variations_at_inf(true)
    }

    /// Number of distinct real roots in (a, +inf).
    pub fn count_above(&self, a: &Rat) -> usize {
        self.variations_at(a) - self.variations_at_inf(true)
    }
}

/// Cauchy bound: all complex roots of f lie strictly inside |z| < bound.
pub fn cauchy_bound(f: &QPoly) -> Rat {
    assert!(!f.is_zero());
    let lc = f.lc();
    let mut m = Rat::zero();
    for c in f.coeffs().iter().take(f.deg()) {
        let a = (c / &lc).abs();
        if a > m {
            m = a;
        }
    }
    m + Rat::one()
}

/// Isolating intervals (lo, hi] for the distinct real roots of f (any
/// nonzero f; isolation runs on the squarefree part), sorted ascending.
pub fn isolate_real_roots(f: &QPoly) -> Vec<(Rat, Rat)> {
    assert!(!f.is_zero());
    let sf = f.squarefree_part();
    if sf.deg() == 0 {
        return vec![];
    }
    let chain = SturmChain::new(&sf);
    let b = cauchy_bound(&sf);
    let mut out = vec![];
    let mut stack = vec![(-b.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_interval(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / Rat::from(Int::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Shrink an isolating interval of the squarefree part of f to width <= w.
pub fn refine_root_interval(f: &QPoly, mut lo: Rat, mut hi: Rat, w: &Rat) -> (Rat, Rat) {
    let sf = f.squarefree_part();
    let chain = SturmChain::new(&sf);
    debug_assert_eq!(chain.count_interval(&lo, &hi), 1);
    let two = Rat::from(Int::from(2));
    while &hi - &lo > *w {
        let mid = (&lo + &hi) / &two;
        if chain.count_interval(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn qp(v: &[i64]) -> QPoly {
        QPoly::new(v.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn counts_real_roots() {
        // (x^2 - 2)(x^2 + 1): two real roots
        let f = qp(&[-2, 0, 1]).mul(&qp(&[1, 0, 1]));
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_real(), 2);
        // x^3 - 3x + 1 has three real roots
        assert_eq!(SturmChain::new(&qp(&[1, -3, 0, 1])).count_real(), 3);
        // x^2 + 1 has none
        assert_eq!(SturmChain::new(&qp(&[1, 0, 1])).count_real(), 0);
    }

    #[test]
    fn isolates_and_refines() {
        let f = qp(&[-2, 0, 1]); // x^2 - 2
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        let w = rat(1, 1 << 20);
        let (lo, hi) = refine_root_interval(&f, roots[1].0.clone(), roots[1].1.clone(), &w);
        assert!(&hi - &lo <= w);
        // sqrt(2) = 1.41421356...
        assert!(lo < rat(1_414_214, 1_000_000));
        assert!(hi > rat(1_414_213, 1_000_000));
    }

    #[test]
    fn multiplicities_do_not_confuse_isolation() {
        let f = qp(&[-1, 1]).pow(3).mul(&qp(&[-3, 0, 1]));
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
    }
}
