//! Dense univariate polynomials in the parameter `u` over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{fmt_rat, gcd_numers, lcm_denoms, rat_sqrt, Rat};

/// Coefficients are stored low degree first and the vector never ends in a zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPolyU {
    coeffs: Vec<Rat>,
}

impl UPolyU {
    pub fn zero() -> Self {
        UPolyU { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `u`.
    pub fn u() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `u - r`
    pub fn linear_root(r: &Rat) -> Self {
        Self::from_coeffs(vec![-r.clone(), Rat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPolyU { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPolyU { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer(BigInt::from(i))).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc_inv = d.lc().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        // primitive remainder sequence keeps the coefficients small
        let mut a = self.primitive().1;
        let mut b = other.primitive().1;
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.primitive().1;
        }
        a.monic()
    }

    /// Writes `self = c * p` with `p` having coprime integer coefficients and positive
    /// leading coefficient.
    pub fn primitive(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (Rat::zero(), Self::zero());
        }
        let l = lcm_denoms(&self.coeffs);
        let scaled: Vec<Rat> = self.coeffs.iter().map(|c| c * Rat::from_integer(l.clone())).collect();
        let mut g = gcd_numers(&scaled);
        if scaled.last().unwrap().is_negative() {
            g = -g;
        }
        let gr = Rat::from_integer(g);
        let p = Self::from_coeffs(scaled.iter().map(|c| c / &gr).collect());
        (gr / Rat::from_integer(l), p)
    }

    /// Exact square root, if `self` is the square of a polynomial over Q.
    pub fn sqrt_exact(&self) -> Option<Self> {
        let n = match self.degree() {
            None => return Some(Self::zero()),
            Some(n) => n,
        };
        if n % 2 == 1 {
            return None;
        }
        let m = n / 2;
        let lead = rat_sqrt(&self.lc())?;
        // Determine coefficients of the root from the top down.
        let mut s = vec![Rat::zero(); m + 1];
        s[m] = lead.clone();
        let two_lead = &lead + &lead;
        for k in (0..m).rev() {
            // coefficient of u^(m+k) in s^2 fixes s[k]
            let mut acc = self.coeff(m + k);
            for i in (k + 1)..=m {
                let j = m + k - i;
                if j > k && j <= m {
                    acc -= &s[i] * &s[j];
                }
            }
            s[k] = acc / &two_lead;
        }
        let r = Self::from_coeffs(s);
        (&r * &r == *self).then_some(r)
    }

    /// Yun's algorithm. Returns monic square-free parts `s_i` with multiplicities so
    /// that `self = lc * prod s_i^i`.
    pub fn square_free_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Substitutes `u -> a*u + b`.
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> Self {
        let lin = Self::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                s.push_str(&fmt_rat(&a));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}*{}", fmt_rat(&a), mono));
            }
        }
        s
    }

    /// Number of terms with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for UPolyU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("u"))
    }
}

impl Add for &UPolyU {
    type Output = UPolyU;
    fn add(self, o: &UPolyU) -> UPolyU {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPolyU::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UPolyU {
    type Output = UPolyU;
    fn sub(self, o: &UPolyU) -> UPolyU {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPolyU::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UPolyU {
    type Output = UPolyU;
    fn mul(self, o: &UPolyU) -> UPolyU {
        if self.is_zero() || o.is_zero() {
            return UPolyU::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPolyU::from_coeffs(out)
    }
}

impl Neg for &UPolyU {
    type Output = UPolyU;
    fn neg(self) -> UPolyU {
        UPolyU { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

forward_owned_ops!(UPolyU);
