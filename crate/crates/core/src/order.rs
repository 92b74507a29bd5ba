//! Orders in number fields: the equation order, coordinates in an order
//! basis, and maximal orders by the round-2 enlargement at primes whose
//! square divides the discriminant.

use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::la;
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::Arc;

#[derive(Clone)]
pub struct OrderBasis {
    field: Arc<NumberField>,
    basis: Vec<FieldElement>,
    basis_inv: la::Mat,
    discriminant: Int,
}

impl std::fmt::Debug for OrderBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrderBasis(disc {}, basis {:?})", self.discriminant, self.basis)
    }
}

impl OrderBasis {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    pub fn discriminant(&self) -> Int {
        self.discriminant.clone()
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// Coordinates of x in the order basis.
    pub fn coords(&self, x: &FieldElement) -> Vec<Rat> {
        let n = self.field.degree();
        let mut v = x.coords().to_vec();
        v.resize(n, Rat::zero());
        la::mat_vec(&self.basis_inv, &v)
    }

    /// Is x in the order?
    pub fn contains(&self, x: &FieldElement) -> bool {
        self.coords(x).iter().all(|c| c.denom().is_one())
    }

    /// Element from order-basis coordinates.
    pub fn element(&self, coords: &[Rat]) -> FieldElement {
        let mut acc = self.field.from_rat(Rat::zero());
        for (c, b) in coords.iter().zip(&self.basis) {
            acc = acc.add_ref(&b.scale(c));
        }
        acc
    }

    /// Least positive integer d with d*x in the order.
    pub fn denominator_of(&self, x: &FieldElement) -> Int {
        let mut d = Int::one();
        for c in self.coords(x) {
            d = d.lcm(c.denom());
        }
        d
    }

    /// Build from an explicit basis; validates that the module is a ring
    /// containing 1 and computes the trace-form discriminant.
    pub fn from_basis(field: &Arc<NumberField>, basis: Vec<FieldElement>) -> Result<OrderBasis> {
        let n = field.degree();
        if basis.len() != n {
            return Err(Error::Usage("order basis length must equal degree".into()));
        }
        let mat: la::Mat = basis
            .iter()
            .map(|b| {
                let mut v = b.coords().to_vec();
                v.resize(n, Rat::zero());
                v
            })
            .collect();
        let mat_t = la::transpose(&mat);
        let inv = la::inverse(&mat_t).ok_or_else(|| {
            Error::Usage("order basis is linearly dependent".into())
        })?;
        let ob = OrderBasis {
            field: Arc::clone(field),
            basis,
            basis_inv: inv,
            discriminant: Int::zero(),
        };
        // ring checks: 1 in span with integer coords, basis closed under
        // multiplication
        let one = field.from_rat(Rat::one());
        if !ob.contains(&one) {
            return Err(Error::Usage("order must contain 1".into()));
        }
        for i in 0..n {
            for j in i..n {
                let prod = ob.basis[i].mul_ref(&ob.basis[j]);
                if !ob.contains(&prod) {
                    return Err(Error::Usage("basis is not multiplicatively closed".into()));
                }
            }
        }
        let disc = trace_form_disc(&ob);
        Ok(OrderBasis {
            discriminant: disc,
            ..ob
        })
    }
}

fn trace_form_disc(ob: &OrderBasis) -> Int {
    let n = ob.degree();
    let mut t = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let (tr, _) = ob.basis[i].mul_ref(&ob.basis[j]).trace_norm();
            t[i][j] = tr.clone();
            t[j][i] = tr;
        }
    }
    la::det(&t).to_integer()
}

/// The equation order Z[alpha].
pub fn equation_order(field: &Arc<NumberField>) -> OrderBasis {
    let n = field.degree();
    let mut basis = vec![];
    let mut cur = field.from_rat(Rat::one());
    let gen = field.generator();
    for i in 0..n {
        if i > 0 {
            cur = cur.mul_ref(&gen);
        }
        basis.push(cur.clone());
    }
    let mat: la::Mat = basis
        .iter()
        .map(|b| {
            let mut v = b.coords().to_vec();
            v.resize(n, Rat::zero());
            v
        })
        .collect();
    let inv = la::inverse(&la::transpose(&mat)).unwrap();
    OrderBasis {
        field: Arc::clone(field),
        basis,
        basis_inv: inv,
        discriminant: field.disc_equation_order(),
    }
}

fn factor_int(n: &Int) -> Result<Vec<(Int, u32)>> {
    let mut m = n.abs();
    let mut out = vec![];
    let mut p = Int::from(2);
    let bound = Int::from(1_000_000u64);
    while &p * &p <= m && p <= bound {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1u32;
    }
    if m > Int::one() {
        // remainder has no factor <= 10^6; a square remainder would hide
        // enlargeable primes
        let r = crate::rat::isqrt(&m);
        if &r * &r == m {
            return Err(Error::Inconclusive(format!(
                "cannot factor square discriminant part {}",
                m
            )));
        }
        out.push((m, 1));
    }
    Ok(out)
}

/// Maximal order by round-2 enlargement; degree capped.
pub fn maximal_order(field: &Arc<NumberField>) -> Result<OrderBasis> {
    maximal_order_capped(field, 8)
}

pub fn maximal_order_capped(field: &Arc<NumberField>, cap: usize) -> Result<OrderBasis> {
    let n = field.degree();
    if n > cap {
        return Err(Error::DegreeTooLarge(n, cap));
    }
    let mut ob = equation_order(field);
    if n == 1 {
        return Ok(ob);
    }
    let disc = ob.discriminant();
    for (p, e) in factor_int(&disc)? {
        if e < 2 {
            continue;
        }
        loop {
            match enlarge_at(&ob, &p)? {
                Some(bigger) => ob = bigger,
                None => break,
            }
        }
    }
    Ok(ob)
}

/// One round-2 step at p: radical of pO, then its ring of multipliers.
/// Returns None when O is already p-maximal.
fn enlarge_at(ob: &OrderBasis, p: &Int) -> Result<Option<OrderBasis>> {
    let n = ob.degree();
    let pu = p.to_u64().ok_or_else(|| {
        Error::Inconclusive("enlargement prime exceeds machine size".into())
    })?;
    // multiplication table in order-basis coordinates (integral)
    let mut table = vec![vec![vec![Int::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = ob.basis[i].mul_ref(&ob.basis[j]);
            for (k, c) in ob.coords(&prod).iter().enumerate() {
                debug_assert!(c.denom().is_one());
                table[i][j][k] = c.numer().clone();
            }
        }
    }
    let mul_mod = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] == 0 {
                    continue;
                }
                let ab = (a[i] as u128 * b[j] as u128 % pu as u128) as u64;
                for k in 0..n {
                    let t = table[i][j][k].mod_floor(p).to_u64().unwrap();
                    out[k] = ((out[k] as u128 + ab as u128 * t as u128) % pu as u128) as u64;
                }
            }
        }
        out
    };
    // Frobenius x -> x^(p^e) with p^e >= n
    let mut q = 1u128;
    let mut e = 0u32;
    while q < n as u128 {
        q *= pu as u128;
        e += 1;
    }
    let one_coords: Vec<u64> = ob
        .coords(&ob.field.from_rat(Rat::one()))
        .iter()
        .map(|c| c.numer().mod_floor(p).to_u64().unwrap())
        .collect();
    let frob = |v: &[u64]| -> Vec<u64> {
        let mut cur = v.to_vec();
        for _ in 0..e {
            // cur^p by square-and-multiply on the exponent p
            let mut acc = one_coords.clone();
            let mut base = cur.clone();
            let mut exp = pu;
            while exp > 0 {
                if exp & 1 == 1 {
                    acc = mul_mod(&acc, &base);
                }
                base = mul_mod(&base, &base);
                exp >>= 1;
            }
            cur = acc;
        }
        cur
    };
    // matrix of Frobenius over F_p (columns = frob of basis vectors)
    let mut cols = vec![];
    for i in 0..n {
        let mut ei = vec![0u64; n];
        ei[i] = 1;
        cols.push(frob(&ei));
    }
    let kernel = fp_kernel(&cols, pu);
    // radical I_p generated by p*O and kernel lifts
    let mut gens: Vec<Vec<Int>> = vec![];
    for i in 0..n {
        let mut r = vec![Int::zero(); n];
        r[i] = p.clone();
        gens.push(r);
    }
    for kvec in &kernel {
        gens.push(kvec.iter().map(|&x| Int::from(x)).collect());
    }
    let rad = la::hnf(&gens);
    debug_assert_eq!(rad.len(), n);
    // multiplier ring: y in O with y * b_i in p*I_p for all i
    // coordinates of y*b_i in the radical basis must all be divisible by p
    let rad_q: la::Mat = rad
        .iter()
        .map(|row| row.iter().map(|x| Rat::from(x.clone())).collect())
        .collect();
    let rad_inv = la::inverse(&la::transpose(&rad_q)).unwrap();
    // linear map over F_p: y (n coords) -> (coords of y*b_i in radical)/1 mod p
    let mut cond_rows: Vec<Vec<u64>> = vec![];
    // y*b where b has integer order-coords: bilinear via table
    let mul_int = |a: &[Int], b: &[Int]| -> Vec<Int> {
        let mut out = vec![Int::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..n {
                    out[k] += &ab * &table[i][j][k];
                }
            }
        }
        out
    };
    for bi in &rad {
        // condition matrix rows: for each radical-coordinate l, the map
        // y -> coeff_l(y*bi) mod p must vanish
        for l in 0..n {
            let mut row = vec![0u64; n];
            for ycoord in 0..n {
                let mut y = vec![Int::zero(); n];
                y[ycoord] = Int::one();
                let prod = mul_int(&y, bi);
                let prod_q: Vec<Rat> = prod.iter().map(|x| Rat::from(x.clone())).collect();
                // y*b_i lies in the radical (an ideal of O), so its
                // radical-basis coordinates are integers; the multiplier
                // condition is that they vanish mod p
                let in_rad = la::mat_vec(&rad_inv, &prod_q);
                debug_assert!(in_rad[l].denom().is_one());
                row[ycoord] = in_rad[l].numer().mod_floor(p).to_u64().unwrap();
            }
            cond_rows.push(row);
        }
    }
    // kernel of the stacked condition matrix (rows are functionals)
    let cond_cols: Vec<Vec<u64>> = (0..n)
        .map(|j| cond_rows.iter().map(|r| r[j]).collect())
        .collect();
    let ker = fp_kernel_rows(&cond_cols, pu, cond_rows.len());
    if ker.is_empty() {
        return Ok(None);
    }
    // O' = O + (1/p) * span(ker)
    let mut new_gens: Vec<Vec<Int>> = vec![];
    for i in 0..n {
        let mut r = vec![Int::zero(); n];
        r[i] = p.clone();
        new_gens.push(r);
    }
    let mut grew = false;
    for kvec in &ker {
        let v: Vec<Int> = kvec.iter().map(|&x| Int::from(x)).collect();
        if v.iter().any(|x| !(x % p).is_zero()) {
            grew = true;
        }
        new_gens.push(v);
    }
    if !grew {
        return Ok(None);
    }
    let hb = la::hnf(&new_gens);
    // new basis elements: (1/p) * rows in old order basis
    let new_basis: Vec<FieldElement> = hb
        .iter()
        .map(|row| {
            let coords: Vec<Rat> = row
                .iter()
                .map(|x| Rat::new(x.clone(), p.clone()))
                .collect();
            ob.element(&coords)
        })
        .collect();
    // index check: did the order actually grow?
    let old_det = Rat::one();
    let new_det: Rat = hb
        .iter()
        .enumerate()
        .map(|(i, r)| Rat::new(r[i].clone(), p.clone()))
        .product();
    if new_det >= old_det {
        return Ok(None);
    }
    let out = OrderBasis::from_basis(&ob.field, new_basis)?;
    Ok(Some(out))
}

/// Kernel of the linear map with the given columns over F_p.
fn fp_kernel(cols: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = cols.len();
    let rows = cols[0].len();
    fp_kernel_rows(cols, p, rows.max(n))
}

fn fp_kernel_rows(cols: &[Vec<u64>], p: u64, nrows: usize) -> Vec<Vec<u64>> {
    let ncols = cols.len();
    // matrix[r][c]
    let mut m = vec![vec![0u64; ncols]; nrows];
    for (c, col) in cols.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            m[r][c] = v % p;
        }
    }
    let inv = |a: u64| -> u64 {
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = (r as u128 * b as u128 % p as u128) as u64;
            }
            b = (b as u128 * b as u128 % p as u128) as u64;
            e >>= 1;
        }
        r
    };
    let mut pivots: Vec<(usize, usize)> = vec![];
    let mut rank = 0usize;
    for c in 0..ncols {
        let mut pr = None;
        for r in rank..nrows {
            if m[r][c] != 0 {
                pr = Some(r);
                break;
            }
        }
        let Some(r0) = pr else {
            continue;
        };
        m.swap(rank, r0);
        let iv = inv(m[rank][c]);
        for cc in 0..ncols {
            m[rank][cc] = (m[rank][cc] as u128 * iv as u128 % p as u128) as u64;
        }
        for r in 0..nrows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for cc in 0..ncols {
                    let t = (f as u128 * m[rank][cc] as u128 % p as u128) as u64;
                    m[r][cc] = (m[r][cc] + p - t) % p;
                }
            }
        }
        pivots.push((rank, c));
        rank += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut out = vec![];
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for &(r, c) in &pivots {
            // x_c = -m[r][free]
            v[c] = (p - m[r][free] % p) % p;
        }
        out.push(v);
    }
    out
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
    fn golden_ratio_order() {
        let k = field("x^2 - 5");
        let ob = maximal_order(&k).unwrap();
        assert_eq!(ob.discriminant(), Int::from(5));
        // contains (1 + sqrt5)/2
        let phi = k.element(vec![rat(1, 2), rat(1, 2)]);
        assert!(ob.contains(&phi));
        assert!(!ob.contains(&k.element(vec![rat(1, 2), rat(1, 3)])));
    }

    #[test]
    fn imaginary_quadratic() {
        let k = field("x^2 + 7");
        let ob = maximal_order(&k).unwrap();
        assert_eq!(ob.discriminant(), Int::from(-7));
        let half_gen = k.element(vec![rat(1, 2), rat(1, 2)]);
        assert!(ob.contains(&half_gen));
    }

    #[test]
    fn cbrt3_equation_order_is_maximal() {
        let k = field("x^3 - 3");
        let ob = maximal_order(&k).unwrap();
        assert_eq!(ob.discriminant(), Int::from(-243));
        for b in ob.basis() {
            // basis of the equation order: 1, a, a^2
            assert!(equation_order(&k).contains(b));
        }
    }

    #[test]
    fn gaussian_integers() {
        let k = field("x^2 + 1");
        let ob = maximal_order(&k).unwrap();
        assert_eq!(ob.discriminant(), Int::from(-4));
    }

    #[test]
    fn coordinates_and_denominator() {
        let k = field("x^2 - 5");
        let ob = maximal_order(&k).unwrap();
        let phi = k.element(vec![rat(1, 2), rat(1, 2)]);
        let c = ob.coords(&phi);
        assert!(c.iter().all(|x| x.denom().is_one()));
        let half = k.from_rat(rat(1, 2));
        assert_eq!(ob.denominator_of(&half), Int::from(2));
        assert_eq!(ob.denominator_of(&phi), Int::from(1));
    }

    #[test]
    fn mult_table_is_integral() {
        for s in ["x^2 - 5", "x^3 - 3", "x^3 + 5", "x^4 + 1", "x^3 - x^2 + 3*x + 2"] {
            let k = field(s);
            let ob = maximal_order(&k).unwrap();
            let n = k.degree();
            let one = k.from_rat(rat(1, 1));
            assert!(ob.contains(&one));
            for i in 0..n {
                for j in 0..n {
                    let prod = ob.basis()[i].mul_ref(&ob.basis()[j]);
                    assert!(ob.contains(&prod), "table not integral for {}", s);
                }
            }
        }
    }
}
