//! Quadratic extensions Q(u)(sqrt d).

use std::fmt;

use super::rat::{rat_square_part, Rat};
use super::ratfunc::RatFuncU;
use super::upoly::UPolyU;
use super::AlgError;

/// `p + q*sqrt(d)`. The radicand `d` is normalized by [`normalize_radicand`] and is
/// never a square in Q(u).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    pub p: RatFuncU,
    pub q: RatFuncU,
    pub d: RatFuncU,
}

/// Result of pulling squares out of a radicand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicandForm {
    /// The radicand is `c^2`; carries the principal root `c`.
    Square(RatFuncU),
    /// The radicand is `c^2 * d` with `d` square-free; `sqrt = c*sqrt(d)`.
    Reduced { c: RatFuncU, d: RatFuncU },
}

/// Writes `r` as `c^2 * d` with `d` a square-reduced polynomial.
/// The principal root of a square has a positive leading coefficient.
pub fn normalize_radicand(r: &RatFuncU) -> RadicandForm {
    if r.is_zero() {
        return RadicandForm::Square(RatFuncU::zero());
    }
    // n/m = n*m / m^2
    let m = r.den().clone();
    let pnm = r.num() * &m;
    let (k, prim) = {
        let lc = pnm.lc();
        (lc.clone(), pnm.monic())
    };
    let mut root = UPolyU::one();
    let mut rest = UPolyU::one();
    for (s, i) in prim.square_free_decomposition() {
        root = &root * &s.pow(i / 2);
        if i % 2 == 1 {
            rest = &rest * &s;
        }
    }
    let (kc, km) = rat_square_part(&k);
    let root = root.scale(&kc);
    let rest = rest.scale(&Rat::from_integer(km));
    let c = RatFuncU::new(root, m).expect("nonzero denominator");
    if rest.is_one() {
        RadicandForm::Square(c)
    } else {
        RadicandForm::Reduced { c, d: RatFuncU::from_poly(rest) }
    }
}

impl QuadExt {
    pub fn new(p: RatFuncU, q: RatFuncU, d: RatFuncU) -> Self {
        QuadExt { p, q, d }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt { p: self.p.clone(), q: -&self.q, d: self.d.clone() }
    }

    /// `p^2 - q^2 d`
    pub fn norm(&self) -> RatFuncU {
        &(&self.p * &self.p) - &(&(&self.q * &self.q) * &self.d)
    }

    fn same_radicand(&self, o: &Self) -> Result<(), AlgError> {
        if self.d == o.d {
            Ok(())
        } else {
            Err(AlgError::RadicandMismatch { left: self.d.to_string(), right: o.d.to_string() })
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, AlgError> {
        self.same_radicand(o)?;
        Ok(QuadExt { p: &self.p + &o.p, q: &self.q + &o.q, d: self.d.clone() })
    }

    pub fn mul(&self, o: &Self) -> Result<Self, AlgError> {
        self.same_radicand(o)?;
        let p = &(&self.p * &o.p) + &(&(&self.q * &o.q) * &self.d);
        let q = &(&self.p * &o.q) + &(&self.q * &o.p);
        Ok(QuadExt { p, q, d: self.d.clone() })
    }

    pub fn neg(&self) -> Self {
        QuadExt { p: -&self.p, q: -&self.q, d: self.d.clone() }
    }

    pub fn inv(&self) -> Result<Self, AlgError> {
        let n = self.norm();
        let ninv = n.inv().ok_or(AlgError::DivisionByZero)?;
        let c = self.conj();
        Ok(QuadExt { p: &c.p * &ninv, q: &c.q * &ninv, d: self.d.clone() })
    }

    pub fn scale(&self, c: &RatFuncU) -> Self {
        QuadExt { p: &self.p * c, q: &self.q * c, d: self.d.clone() }
    }

    pub fn sqrt_text(&self) -> String {
        format!("sqrt({})", self.d)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rad = self.sqrt_text();
        let qpart = if self.q.is_one() {
            rad
        } else if (-&self.q).is_one() {
            format!("-{rad}")
        } else {
            format!("{}*{}", self.q.fmt_atom(), rad)
        };
        if self.p.is_zero() {
            f.write_str(&qpart)
        } else if let Some(stripped) = qpart.strip_prefix('-') {
            write!(f, "{} - {}", self.p, stripped)
        } else {
            write!(f, "{} + {}", self.p, qpart)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat;

    fn p(c: &[i64]) -> UPolyU {
        UPolyU::from_ints(c)
    }

    #[test]
    fn radicand_normalization() {
        // 4u -> 2 sqrt(u)
        match normalize_radicand(&RatFuncU::from_poly(p(&[0, 4]))) {
            RadicandForm::Reduced { c, d } => {
                assert_eq!(c, RatFuncU::from_rat(rat(2, 1)));
                assert_eq!(d, RatFuncU::u());
            }
            other => panic!("{other:?}"),
        }
        // u^2 (u-1)^2 / 4 is a square
        let sq = RatFuncU::new(p(&[0, -1, 1]).pow(2), p(&[4])).unwrap();
        assert_eq!(normalize_radicand(&sq), RadicandForm::Square(RatFuncU::from_poly(p(&[0, -1, 1]).scale(&rat(1, 2)))));
        // (3u+1)(1-u) is kept as is
        let th = RatFuncU::from_poly(p(&[1, 2, -3]));
        assert_eq!(normalize_radicand(&th), RadicandForm::Reduced { c: RatFuncU::one(), d: th });
    }

    #[test]
    fn conjugate_product_is_norm() {
        let d = RatFuncU::u();
        let a = QuadExt::new(RatFuncU::from_poly(p(&[1, 1])), RatFuncU::from_poly(p(&[2])), d);
        let prod = a.mul(&a.conj()).unwrap();
        assert!(prod.q.is_zero());
        assert_eq!(prod.p, a.norm());
        let one = a.mul(&a.inv().unwrap()).unwrap();
        assert!(one.p.is_one() && one.q.is_zero());
    }
}
