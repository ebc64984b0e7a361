//! The coefficient tower Q -> Q(u) -> Q(u)(sqrt d).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::quadext::{normalize_radicand, QuadExt, RadicandForm};
use super::rat::{fmt_rat, Rat};
use super::ratfunc::RatFuncU;
use super::upoly::UPolyU;
use super::AlgError;

/// Always stored at the lowest level of the tower that holds the value, so derived
/// equality is exact equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(Rat),
    Func(RatFuncU),
    Quad(QuadExt),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::Rat(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Rat(Rat::from_integer(BigInt::from(n)))
    }
}

impl From<RatFuncU> for Scalar {
    fn from(f: RatFuncU) -> Self {
        Scalar::func(f)
    }
}

impl From<UPolyU> for Scalar {
    fn from(p: UPolyU) -> Self {
        Scalar::func(RatFuncU::from_poly(p))
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rat::one())
    }

    pub fn u() -> Self {
        Scalar::Func(RatFuncU::u())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(Rat::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn func(f: RatFuncU) -> Self {
        match f.as_rat() {
            Some(r) => Scalar::Rat(r),
            None => Scalar::Func(f),
        }
    }

    pub fn quad(q: QuadExt) -> Self {
        if q.q.is_zero() {
            Scalar::func(q.p)
        } else {
            Scalar::Quad(q)
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Func(f) => f.is_zero(),
            Scalar::Quad(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// The value as an element of Q(u), if it has no radical part.
    pub fn as_func(&self) -> Option<RatFuncU> {
        match self {
            Scalar::Rat(r) => Some(RatFuncU::from_rat(r.clone())),
            Scalar::Func(f) => Some(f.clone()),
            Scalar::Quad(_) => None,
        }
    }

    pub fn radicand(&self) -> Option<&RatFuncU> {
        match self {
            Scalar::Quad(q) => Some(&q.d),
            _ => None,
        }
    }

    /// `sqrt(self)` for a value in Q(u). A perfect square collapses to its principal
    /// root (positive leading coefficient).
    pub fn sqrt(&self) -> Result<Scalar, AlgError> {
        let f = self.as_func().ok_or(AlgError::NestedRadical)?;
        Ok(match normalize_radicand(&f) {
            RadicandForm::Square(c) => Scalar::func(c),
            RadicandForm::Reduced { c, d } => Scalar::quad(QuadExt::new(RatFuncU::zero(), c, d)),
        })
    }

    fn to_quad(&self, d: &RatFuncU) -> QuadExt {
        match self {
            Scalar::Quad(q) => q.clone(),
            other => QuadExt::new(other.as_func().unwrap(), RatFuncU::zero(), d.clone()),
        }
    }

    fn common_radicand<'a>(&'a self, o: &'a Scalar) -> Option<&'a RatFuncU> {
        self.radicand().or_else(|| o.radicand())
    }

    pub fn checked_add(&self, o: &Scalar) -> Result<Scalar, AlgError> {
        Ok(match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Quad(_), _) | (_, Scalar::Quad(_)) => {
                let d = self.common_radicand(o).unwrap();
                Scalar::quad(self.to_quad(d).add(&o.to_quad(d))?)
            }
            _ => Scalar::func(&self.as_func().unwrap() + &o.as_func().unwrap()),
        })
    }

    pub fn checked_sub(&self, o: &Scalar) -> Result<Scalar, AlgError> {
        self.checked_add(&o.neg_ref())
    }

    pub fn checked_mul(&self, o: &Scalar) -> Result<Scalar, AlgError> {
        Ok(match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Func(f)) | (Scalar::Func(f), Scalar::Rat(a)) => Scalar::func(f.scale(a)),
            (Scalar::Quad(_), _) | (_, Scalar::Quad(_)) => {
                let d = self.common_radicand(o).unwrap();
                Scalar::quad(self.to_quad(d).mul(&o.to_quad(d))?)
            }
            _ => Scalar::func(&self.as_func().unwrap() * &o.as_func().unwrap()),
        })
    }

    pub fn inv(&self) -> Result<Scalar, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Func(f) => Scalar::func(f.inv().unwrap()),
            Scalar::Quad(q) => Scalar::quad(q.inv()?),
        })
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, AlgError> {
        self.checked_mul(&o.inv()?)
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Func(f) => Scalar::Func(-f),
            Scalar::Quad(q) => Scalar::Quad(q.neg()),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces `u` by another scalar. Fails if a denominator vanishes or two
    /// different radicands would have to be combined.
    pub fn subst_u(&self, val: &Scalar) -> Result<Scalar, AlgError> {
        fn eval_poly(p: &UPolyU, val: &Scalar) -> Result<Scalar, AlgError> {
            let mut acc = Scalar::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc.checked_mul(val)?.checked_add(&Scalar::Rat(c.clone()))?;
            }
            Ok(acc)
        }
        fn eval_func(f: &RatFuncU, val: &Scalar) -> Result<Scalar, AlgError> {
            let n = eval_poly(f.num(), val)?;
            let d = eval_poly(f.den(), val)?;
            if d.is_zero() {
                return Err(AlgError::Specialization(format!("denominator {} vanishes at u = {}", f.den(), val)));
            }
            n.checked_div(&d)
        }
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Func(f) => eval_func(f, val),
            Scalar::Quad(q) => {
                let p = eval_func(&q.p, val)?;
                let c = eval_func(&q.q, val)?;
                let d = eval_func(&q.d, val)?;
                let root = d.sqrt()?;
                p.checked_add(&c.checked_mul(&root)?)
            }
        }
    }

    pub fn eval_u(&self, r: &Rat) -> Result<Scalar, AlgError> {
        self.subst_u(&Scalar::Rat(r.clone()))
    }

    /// Text that can be juxtaposed with `*` without changing meaning.
    pub fn fmt_atom(&self) -> String {
        let s = self.to_string();
        if needs_parens(&s) {
            format!("({s})")
        } else {
            s
        }
    }
}

fn needs_parens(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    body.contains(' ') || body.contains('/')
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&fmt_rat(r)),
            Scalar::Func(r) => write!(f, "{r}"),
            Scalar::Quad(q) => write!(f, "{q}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.checked_add(o).expect("scalar addition")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.checked_sub(o).expect("scalar subtraction")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.checked_mul(o).expect("scalar multiplication")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

forward_owned_ops!(Scalar);
