//! Gaussian elimination over the scalar tower.

use super::scalar::Scalar;
use super::AlgError;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut [Vec<Scalar>]) -> Result<Vec<usize>, AlgError> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv()?;
        for j in c..cols {
            m[r][j] = m[r][j].checked_mul(&inv)?;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = f.checked_mul(&m[r][j])?;
                    m[i][j] = m[i][j].checked_sub(&t)?;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank(m: &[Vec<Scalar>]) -> Result<usize, AlgError> {
    let mut a = m.to_vec();
    Ok(rref(&mut a)?.len())
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace(m: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, AlgError> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.to_vec();
    let pivots = rref(&mut a)?;
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[row][free];
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Determinant by elimination.
pub fn det(m: &[Vec<Scalar>]) -> Result<Scalar, AlgError> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut acc = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(Scalar::zero());
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        acc = acc.checked_mul(&a[c][c])?;
        let inv = a[c][c].inv()?;
        for i in (c + 1)..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].checked_mul(&inv)?;
            for j in c..n {
                let t = f.checked_mul(&a[c][j])?;
                a[i][j] = a[i][j].checked_sub(&t)?;
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a).unwrap(), 2);
        let k = nullspace(&a).unwrap();
        assert_eq!(k.len(), 1);
        for row in &a {
            let s = row.iter().zip(&k[0]).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y));
            assert!(s.is_zero());
        }
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])).unwrap(), Scalar::from(-1));
        assert!(det(&a).unwrap().is_zero());
    }

    #[test]
    fn over_the_parameter_field() {
        let u = Scalar::u();
        let a = vec![vec![u.clone(), Scalar::one()], vec![Scalar::one(), u.clone()]];
        // det = u^2 - 1
        assert_eq!(det(&a).unwrap(), &(&u * &u) - &Scalar::one());
        assert_eq!(rank(&a).unwrap(), 2);
    }
}
