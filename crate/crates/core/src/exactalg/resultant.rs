//! Univariate gcd and resultants over the scalar tower.

use super::mpoly::MPoly;
use super::scalar::Scalar;
use super::upoly::UPolyU;
use super::AlgError;

/// Dense univariate polynomials (low degree first) over [`Scalar`].
pub mod dense {
    use super::*;

    pub fn trim(mut v: Vec<Scalar>) -> Vec<Scalar> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    pub fn degree(v: &[Scalar]) -> Option<usize> {
        v.iter().rposition(|c| !c.is_zero())
    }

    pub fn divrem(a: &[Scalar], b: &[Scalar]) -> Result<(Vec<Scalar>, Vec<Scalar>), AlgError> {
        let b = trim(b.to_vec());
        let db = b.len().checked_sub(1).ok_or(AlgError::DivisionByZero)?;
        let inv = b[db].inv()?;
        let mut r = trim(a.to_vec());
        if r.len() <= db {
            return Ok((Vec::new(), r));
        }
        let mut q = vec![Scalar::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db].checked_mul(&inv)?;
            if !c.is_zero() {
                for (j, bc) in b.iter().enumerate() {
                    r[k + j] = r[k + j].checked_sub(&c.checked_mul(bc)?)?;
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        Ok((trim(q), trim(r)))
    }

    /// Monic gcd.
    pub fn gcd(a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>, AlgError> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y)?;
            x = y;
            y = r;
        }
        if let Some(lc) = x.last() {
            let inv = lc.inv()?;
            x = x.iter().map(|c| c * &inv).collect();
        }
        Ok(x)
    }

    fn as_upoly(c: &Scalar) -> Option<UPolyU> {
        match c {
            Scalar::Rat(r) => Some(UPolyU::constant(r.clone())),
            Scalar::Func(f) if f.is_polynomial() => Some(f.num().clone()),
            _ => None,
        }
    }

    /// `lc(b)^(deg a - deg b + 1) a mod b`, coefficients in `Q[u]`, high degree last.
    fn pseudo_rem(a: &[UPolyU], b: &[UPolyU]) -> Vec<UPolyU> {
        let mut r = a.to_vec();
        let lb = b.last().unwrap();
        let db = b.len() - 1;
        let mut e = a.len() - b.len() + 1;
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1;
            let lr = r[k].clone();
            for c in r.iter_mut() {
                *c = &*c * lb;
            }
            for (i, bc) in b.iter().enumerate() {
                let j = k - db + i;
                r[j] = &r[j] - &(&lr * bc);
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            e -= 1;
        }
        let f = lb.pow(e as u32);
        r.iter().map(|c| c * &f).collect()
    }

    /// Subresultant remainder sequence over `Q[u]`: every division is exact, so
    /// no rational functions appear.
    fn resultant_poly(f: Vec<UPolyU>, g: Vec<UPolyU>) -> UPolyU {
        let deg = |v: &Vec<UPolyU>| v.len() - 1;
        let (mut a, mut b) = (f, g);
        let mut s = UPolyU::one();
        if deg(&a) < deg(&b) {
            if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
                s = -&s;
            }
            std::mem::swap(&mut a, &mut b);
        }
        if deg(&b) == 0 {
            return &s * &b[0].pow(deg(&a) as u32);
        }
        let (mut g, mut h) = (UPolyU::one(), UPolyU::one());
        loop {
            let delta = deg(&a) - deg(&b);
            if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
                s = -&s;
            }
            let r = pseudo_rem(&a, &b);
            if r.is_empty() {
                return UPolyU::zero();
            }
            let div = &g * &h.pow(delta as u32);
            a = b;
            b = r.iter().map(|c| c.div_exact(&div).expect("subresultant division is exact")).collect();
            g = a.last().unwrap().clone();
            h = if delta == 0 { h } else { g.pow(delta as u32).div_exact(&h.pow(delta as u32 - 1)).expect("exact") };
            if deg(&b) == 0 {
                let da = deg(&a) as u32;
                let lb = b[0].pow(da);
                let h_final = if da == 0 { lb } else { lb.div_exact(&h.pow(da - 1)).expect("exact") };
                return &s * &h_final;
            }
        }
    }

    /// Resultant; subresultant sequence for coefficients in `Q[u]`, the Euclidean
    /// remainder sequence otherwise.
    pub fn resultant(f: &[Scalar], g: &[Scalar]) -> Result<Scalar, AlgError> {
        let mut a = trim(f.to_vec());
        let mut b = trim(g.to_vec());
        if a.is_empty() || b.is_empty() {
            return Err(AlgError::ZeroPolynomial);
        }
        let pa: Option<Vec<UPolyU>> = a.iter().map(as_upoly).collect();
        let pb: Option<Vec<UPolyU>> = b.iter().map(as_upoly).collect();
        if let (Some(pa), Some(pb)) = (pa, pb) {
            return Ok(Scalar::from(resultant_poly(pa, pb)));
        }
        let mut acc = Scalar::one();
        loop {
            let m = a.len() - 1;
            let n = b.len() - 1;
            if n == 0 {
                return acc.checked_mul(&b[0].pow(m as u32));
            }
            if m == 0 {
                return acc.checked_mul(&a[0].pow(n as u32));
            }
            let (_, r) = divrem(&a, &b)?;
            if r.is_empty() {
                return Ok(Scalar::zero());
            }
            let k = r.len() - 1;
            if (m * n) % 2 == 1 {
                acc = -acc;
            }
            acc = acc.checked_mul(&b[n].pow((m - k) as u32))?;
            a = b;
            b = r;
        }
    }
}

/// Resultant of `f` and `g` with respect to `var`; both must involve no other
/// variable.
pub fn resultant_in(f: &MPoly, g: &MPoly, var: &str) -> Result<Scalar, AlgError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let a = f.as_univariate(var)?;
    let b = g.as_univariate(var)?;
    dense::resultant(&a, &b)
}

/// Resultant of two univariate polynomials whose coefficients are polynomials in
/// `u`. The eliminated variable is the one occurring in the inputs.
pub fn resultant(f: &MPoly, g: &MPoly) -> Result<UPolyU, AlgError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let mut sup = f.support_vars();
    if f.vars() != g.vars() {
        return Err(AlgError::VariableMismatch { expected: f.vars().join(","), found: g.vars().join(",") });
    }
    sup.extend(g.support_vars());
    sup.sort();
    sup.dedup();
    let var = match sup.as_slice() {
        [] => f.vars().first().cloned().unwrap_or_default(),
        [i] => f.vars()[*i].clone(),
        _ => return Err(AlgError::NotUnivariate(f.vars().join(","))),
    };
    for c in f.terms().values().chain(g.terms().values()) {
        match c.as_func() {
            Some(r) if r.is_polynomial() => {}
            _ => return Err(AlgError::NonPolynomialCoefficient(c.to_string())),
        }
    }
    let r = if var.is_empty() {
        // two constants
        Scalar::one()
    } else {
        resultant_in(f, g, &var)?
    };
    let rf = r.as_func().ok_or_else(|| AlgError::NonPolynomialCoefficient(r.to_string()))?;
    if !rf.is_polynomial() {
        return Err(AlgError::NonPolynomialCoefficient(rf.to_string()));
    }
    Ok(rf.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly;

    #[test]
    fn small_resultants() {
        let f = parse_poly("a^2 - 1", &["a"]).unwrap();
        let g = parse_poly("a - 2", &["a"]).unwrap();
        // Res(a^2-1, a-2) = f(2) = 3
        assert_eq!(resultant(&f, &g).unwrap(), UPolyU::from_ints(&[3]));
        let h = parse_poly("a - u", &["a"]).unwrap();
        assert_eq!(resultant(&f, &h).unwrap(), UPolyU::from_ints(&[-1, 0, 1]));
        let z = parse_poly("0", &["a"]).unwrap();
        assert_eq!(resultant(&f, &z), Err(AlgError::ZeroPolynomial));
    }

    #[test]
    fn gcd_over_scalars() {
        let a = vec![Scalar::from(-1), Scalar::zero(), Scalar::one()];
        let b = vec![Scalar::from(1), Scalar::one()];
        assert_eq!(dense::gcd(&a, &b).unwrap(), b);
    }
}
