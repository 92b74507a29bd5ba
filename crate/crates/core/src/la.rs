//! Dense exact linear algebra over the rationals, sized for field degrees
//! and lattice ranks in the tens.

use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};

pub type Mat = Vec<Vec<Rat>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                let t = &a[i][l] * &b[l][j];
                out[i][j] += t;
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    let m = a[0].len();
    (0..m)
        .map(|j| (0..n).map(|i| a[i][j].clone()).collect())
        .collect()
}

/// Determinant by fraction-free-ish Gaussian elimination.
pub fn det(a: &Mat) -> Rat {
    let n = a.len();
    let mut m = a.to_vec();
    let mut d = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        let pv = m[col][col].clone();
        d *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..n {
                let t = &factor * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    d
}

/// Solve a * x = b; None when singular.
pub fn solve(a: &Mat, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Mat = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        let pv = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &pv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut m: Mat = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        let pv = m[col][col].clone();
        for c in col..2 * n {
            m[col][c] = &m[col][c] / &pv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..2 * n {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Left null space vector of the row span of `rows` (first dependency among
/// the rows, expressed in the original row indices), or None if the rows
/// are independent.
pub fn first_row_dependency(rows: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let cols = rows.first()?.len();
    let mut basis: Vec<(Vec<Rat>, Vec<Rat>)> = vec![]; // (reduced row, combination)
    for (i, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        let mut comb = vec![Rat::zero(); rows.len()];
        comb[i] = Rat::one();
        for (b, bc) in &basis {
            let lead = b.iter().position(|x| !x.is_zero()).unwrap();
            if !r[lead].is_zero() {
                let f = &r[lead] / &b[lead];
                for c in 0..cols {
                    let t = &f * &b[c];
                    r[c] -= t;
                }
                for c in 0..rows.len() {
                    let t = &f * &bc[c];
                    comb[c] -= t;
                }
            }
        }
        if r.iter().all(|x| x.is_zero()) {
            return Some(comb);
        }
        basis.push((r, comb));
        basis.sort_by_key(|(b, _)| b.iter().position(|x| !x.is_zero()).unwrap());
    }
    None
}

/// Hermite normal form of an integer matrix (rows are generators); returns
/// the row-style HNF with positive pivots, zero rows dropped.
pub fn hnf(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    if m.is_empty() {
        return m;
    }
    let cols = m[0].len();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        loop {
            let mut idx: Option<usize> = None;
            let mut best: Option<Int> = None;
            for r in pivot_row..m.len() {
                if !m[r][col].is_zero() {
                    let a = m[r][col].abs();
                    if best.as_ref().map_or(true, |b| &a < b) {
                        best = Some(a);
                        idx = Some(r);
                    }
                }
            }
            let Some(i) = idx else {
                break;
            };
            m.swap(pivot_row, i);
            let mut done = true;
            for r in pivot_row + 1..m.len() {
                if !m[r][col].is_zero() {
                    let q = num_integer::Integer::div_floor(&m[r][col], &m[pivot_row][col]);
                    for c in 0..cols {
                        let t = &q * &m[pivot_row][c];
                        m[r][c] -= t;
                    }
                    if !m[r][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < m.len() && !m[pivot_row][col].is_zero() {
            if m[pivot_row][col].is_negative() {
                for c in 0..cols {
                    m[pivot_row][c] = -m[pivot_row][c].clone();
                }
            }
            // reduce rows above
            for r in 0..pivot_row {
                let q = num_integer::Integer::div_floor(&m[r][col], &m[pivot_row][col]);
                if !q.is_zero() {
                    for c in 0..cols {
                        let t = &q * &m[pivot_row][c];
                        m[r][c] -= t;
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == m.len() {
                break;
            }
        }
    }
    m.truncate(pivot_row);
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn det_and_inverse() {
        let a = vec![
            vec![rat(2, 1), rat(1, 1)],
            vec![rat(1, 1), rat(2, 1)],
        ];
        assert_eq!(det(&a), rat(3, 1));
        let inv = inverse(&a).unwrap();
        let prod = mat_mul(&a, &inv);
        assert_eq!(prod, identity(2));
    }

    #[test]
    fn solve_system() {
        let a = vec![
            vec![rat(1, 1), rat(2, 1)],
            vec![rat(3, 1), rat(4, 1)],
        ];
        let x = solve(&a, &[rat(5, 1), rat(11, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(2, 1)]);
    }

    #[test]
    fn dependency_detection() {
        let rows = vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1)],
            vec![rat(2, 1), rat(3, 1)],
        ];
        let dep = first_row_dependency(&rows).unwrap();
        // 2*r0 + 3*r1 - r2 = 0
        assert_eq!(dep, vec![rat(-2, 1), rat(-3, 1), rat(1, 1)]);
    }

    #[test]
    fn hnf_basic() {
        let rows = vec![
            vec![Int::from(2), Int::from(0)],
            vec![Int::from(1), Int::from(1)],
            vec![Int::from(0), Int::from(2)],
        ];
        let h = hnf(&rows);
        assert_eq!(h.len(), 2);
        assert_eq!(h[0], vec![Int::from(1), Int::from(1)]);
        assert_eq!(h[1], vec![Int::from(0), Int::from(2)]);
    }
}
