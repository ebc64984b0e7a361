//! Elements of Q(u) kept as reduced fractions with a monic denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::Rat;
use super::upoly::UPolyU;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFuncU {
    num: UPolyU,
    den: UPolyU,
}

impl RatFuncU {
    pub fn zero() -> Self {
        RatFuncU { num: UPolyU::zero(), den: UPolyU::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(UPolyU::one())
    }

    pub fn u() -> Self {
        Self::from_poly(UPolyU::u())
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_poly(UPolyU::constant(r))
    }

    pub fn from_poly(p: UPolyU) -> Self {
        RatFuncU { num: p, den: UPolyU::one() }
    }

    /// Builds `num/den` in canonical form. Returns `None` when `den` is zero.
    pub fn new(num: UPolyU, den: UPolyU) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        if den.degree() == Some(0) {
            let c = den.lc().recip();
            return Some(RatFuncU { num: num.scale(&c), den: UPolyU::one() });
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() { (num, den) } else { (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap()) };
        let l = d.lc().recip();
        n = n.scale(&l);
        d = d.scale(&l);
        Some(RatFuncU { num: n, den: d })
    }

    pub fn num(&self) -> &UPolyU {
        &self.num
    }

    pub fn den(&self) -> &UPolyU {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self * &i)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFuncU { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFuncU { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Value at `u = x`; `None` if the denominator vanishes there.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Exact square root in Q(u), if one exists.
    pub fn sqrt_exact(&self) -> Option<Self> {
        // den is monic, so a square root of den must be monic as well
        let d = self.den.sqrt_exact()?;
        if let Some(n) = self.num.sqrt_exact() {
            return Self::new(n, d);
        }
        None
    }

    fn fmt_poly_atom(p: &UPolyU) -> String {
        let s = p.to_string();
        if p.term_count() > 1 || (p.term_count() == 1 && s.starts_with('-')) {
            format!("({s})")
        } else {
            s
        }
    }

    /// Printed form, wrapped in parentheses whenever it is not a single atom.
    pub fn fmt_atom(&self) -> String {
        if self.den.is_one() {
            let s = self.num.to_string();
            if self.num.term_count() > 1 || s.starts_with('-') || s.contains('/') {
                format!("({s})")
            } else {
                s
            }
        } else {
            format!("({})", self)
        }
    }
}

impl fmt::Display for RatFuncU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let n = if self.num.term_count() > 1 || self.num.to_string().contains('/') {
                format!("({})", self.num)
            } else {
                self.num.to_string()
            };
            write!(f, "{}/{}", n, Self::fmt_poly_atom(&self.den))
        }
    }
}

impl Add for &RatFuncU {
    type Output = RatFuncU;
    fn add(self, o: &RatFuncU) -> RatFuncU {
        if self.den == o.den {
            if self.den.is_one() {
                return RatFuncU::from_poly(&self.num + &o.num);
            }
            return RatFuncU::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        RatFuncU::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }
}

impl Sub for &RatFuncU {
    type Output = RatFuncU;
    fn sub(self, o: &RatFuncU) -> RatFuncU {
        self + &(-o)
    }
}

impl Mul for &RatFuncU {
    type Output = RatFuncU;
    fn mul(self, o: &RatFuncU) -> RatFuncU {
        if self.is_zero() || o.is_zero() {
            return RatFuncU::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFuncU::from_poly(&self.num * &o.num);
        }
        // cross-cancel before multiplying to keep sizes down
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        // both inputs are reduced, so after cross-cancelling the product is too
        let (n, d) = (&n1 * &n2, &d1 * &d2);
        let l = d.lc().recip();
        RatFuncU { num: n.scale(&l), den: d.scale(&l) }
    }
}

impl Neg for &RatFuncU {
    type Output = RatFuncU;
    fn neg(self) -> RatFuncU {
        RatFuncU { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned_ops!(RatFuncU);

impl Zero for RatFuncU {
    fn zero() -> Self {
        RatFuncU::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFuncU {
    fn one() -> Self {
        RatFuncU::one()
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
    fn canonical_form() {
        // (2u^2 - 2)/(4u - 4) = (u + 1)/2
        let f = RatFuncU::new(p(&[-2, 0, 2]), p(&[-4, 4])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &p(&[1, 1]).scale(&rat(1, 2)));
        let g = RatFuncU::new(p(&[1]), p(&[0, -2])).unwrap();
        assert_eq!(g.den(), &p(&[0, 1]));
        assert_eq!(g.num(), &p(&[1]).scale(&rat(-1, 2)));
        assert!(RatFuncU::new(p(&[1]), UPolyU::zero()).is_none());
    }

    #[test]
    fn field_ops() {
        let a = RatFuncU::new(p(&[1]), p(&[-1, 1])).unwrap();
        let b = RatFuncU::new(p(&[0, 1]), p(&[1, 1])).unwrap();
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        assert_eq!((&a * &b).div(&b).unwrap(), a);
        assert_eq!(&a * &a.inv().unwrap(), RatFuncU::one());
        assert_eq!(a.eval(&rat(3, 1)), Some(rat(1, 2)));
        assert_eq!(a.eval(&rat(1, 1)), None);
    }

    #[test]
    fn display_forms() {
        let mu = RatFuncU::new(p(&[16, -16, -3]), p(&[4, -8, 4])).unwrap();
        assert_eq!(mu.to_string(), "(-3/4*u^2 - 4*u + 4)/(u^2 - 2*u + 1)");
    }
}
