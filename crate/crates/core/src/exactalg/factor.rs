//! Splitting off rational factors of degree at most two from a polynomial in `u`.
//!
//! Candidate factors come from floating-point root approximations and are only
//! accepted after an exact division check, so the result never depends on rounding.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::rat::Rat;
use super::upoly::UPolyU;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UFactorization {
    pub constant: Rat,
    /// Primitive integer polynomials of degree 1 or 2 with positive leading
    /// coefficient, each irreducible over Q.
    pub factors: Vec<(UPolyU, u32)>,
    /// Part with no rational roots and no rational quadratic factor found.
    pub remainder: UPolyU,
}

impl UFactorization {
    pub fn expand(&self) -> UPolyU {
        let mut acc = self.remainder.scale(&self.constant);
        for (f, k) in &self.factors {
            acc = &acc * &f.pow(*k);
        }
        acc
    }

    /// Rational roots, in increasing order.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let mut v: Vec<Rat> = self.factors.iter().filter(|(f, _)| f.degree() == Some(1)).map(|(f, _)| -f.coeff(0) / f.coeff(1)).collect();
        v.sort();
        v
    }

    pub fn has_factor(&self, f: &UPolyU) -> bool {
        let (_, p) = f.primitive();
        self.factors.iter().any(|(g, _)| g == &p)
    }

    /// Factors other than those whose roots lie in `excluded`.
    pub fn factors_avoiding(&self, excluded: &[Rat]) -> Vec<(UPolyU, u32)> {
        self.factors.iter().filter(|(f, _)| !(f.degree() == Some(1) && excluded.contains(&(-f.coeff(0) / f.coeff(1))))).cloned().collect()
    }
}

impl fmt::Display for UFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![super::rat::fmt_rat(&self.constant)];
        for (p, k) in &self.factors {
            let s = if p.term_count() > 1 { format!("({p})") } else { p.to_string() };
            parts.push(if *k == 1 { s } else { format!("{s}^{k}") });
        }
        if !self.remainder.is_one() {
            parts.push(format!("({})", self.remainder));
        }
        f.write_str(&parts.join("*"))
    }
}

fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Complex roots of a square-free polynomial (Durand-Kerner).
fn approx_roots(p: &UPolyU) -> Vec<Complex64> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let lc = to_f64(&p.lc());
    let c: Vec<f64> = p.coeffs().iter().map(|x| to_f64(x) / lc).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a);
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * (radius / 2.0).max(0.5)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::one();
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

fn round_int(x: f64) -> Option<BigInt> {
    if !x.is_finite() || x.abs() > 1e15 {
        return None;
    }
    Some(BigInt::from(x.round() as i64))
}

fn find_small_factor(s: &UPolyU) -> Option<UPolyU> {
    let n = s.degree()?;
    if n <= 1 {
        return None;
    }
    let lc = s.lc();
    let lcf = to_f64(&lc);
    let roots = approx_roots(s);
    for r in &roots {
        if r.im.abs() > 1e-6 * (1.0 + r.re.abs()) {
            continue;
        }
        // a rational root b/a has a | lc, so lc*root is an integer
        let Some(k) = round_int(lcf * r.re) else { continue };
        let cand = Rat::new(k, lc.numer().clone());
        if s.eval(&cand).is_zero() {
            return Some(UPolyU::linear_root(&cand).primitive().1);
        }
    }
    if n < 4 {
        // a cubic without rational roots, or a quadratic, is irreducible over Q
        return None;
    }
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            let s1 = (roots[i] + roots[j]) * lcf;
            let p1 = roots[i] * roots[j] * lcf;
            if s1.im.abs() > 1e-6 * (1.0 + s1.re.abs()) || p1.im.abs() > 1e-6 * (1.0 + p1.re.abs()) {
                continue;
            }
            let (b, c) = match (round_int(-s1.re), round_int(p1.re)) {
                (Some(b), Some(c)) => (b, c),
                _ => continue,
            };
            let lci = lc.numer().clone();
            let cand = UPolyU::from_coeffs(vec![Rat::from_integer(c), Rat::from_integer(b), Rat::from_integer(lci)]).primitive().1;
            if cand.degree() == Some(2) && s.div_exact(&cand).is_some() {
                return Some(cand);
            }
        }
    }
    None
}

/// Splits `p` into its rational linear and quadratic factors with multiplicities.
pub fn factor_square_free_in_u(p: &UPolyU) -> UFactorization {
    let (_, prim) = p.primitive();
    let mut factors: Vec<(UPolyU, u32)> = Vec::new();
    let mut remainder = UPolyU::one();
    for (piece, mult) in prim.square_free_decomposition() {
        let mut s = piece.primitive().1;
        while let Some(f) = find_small_factor(&s) {
            s = s.div_exact(&f).expect("verified factor").primitive().1;
            factors.push((f, mult));
        }
        match s.degree() {
            Some(1) | Some(2) => factors.push((s, mult)),
            _ => remainder = &remainder * &s.pow(mult),
        }
    }
    // quadratics with a rational root have been split above, except when the
    // quadratic was the whole piece; split those here
    let mut out = Vec::new();
    for (f, k) in factors {
        if f.degree() == Some(2) {
            let (a, b, cc) = (f.coeff(2), f.coeff(1), f.coeff(0));
            let disc = &b * &b - Rat::from_integer(BigInt::from(4)) * &a * &cc;
            if let Some(sq) = super::rat::rat_sqrt(&disc) {
                let two_a = &a + &a;
                for r in [(-&b + &sq) / &two_a, (-&b - &sq) / &two_a] {
                    out.push((UPolyU::linear_root(&r).primitive().1, k));
                }
                continue;
            }
        }
        out.push((f, k));
    }
    out.sort_by(|a, b| {
        a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().iter().rev().cmp(b.0.coeffs().iter().rev())).then(a.1.cmp(&b.1))
    });
    // fix the constant so that the product matches p exactly
    let mut prod = remainder.clone();
    for (f, k) in &out {
        prod = &prod * &f.pow(*k);
    }
    let constant = if p.is_zero() { Rat::zero() } else { p.lc() / prod.lc() };
    UFactorization { constant, factors: out, remainder }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::int;

    fn p(c: &[i64]) -> UPolyU {
        UPolyU::from_ints(c)
    }

    #[test]
    fn splits_linear_and_quadratic_factors() {
        // u^2 (4u - 3)
        let f = factor_square_free_in_u(&p(&[0, 0, -3, 4]));
        assert_eq!(f.factors, vec![(p(&[0, 1]), 2), (p(&[-3, 4]), 1)]);
        assert!(f.remainder.is_one());
        assert_eq!(f.constant, int(1));

        let g = factor_square_free_in_u(&p(&[2, -2, 1]));
        assert_eq!(g.factors, vec![(p(&[2, -2, 1]), 1)]);

        let h = factor_square_free_in_u(&p(&[5]));
        assert!(h.factors.is_empty());
        assert_eq!(h.constant, int(5));
        assert!(h.remainder.is_one());
    }

    #[test]
    fn product_of_two_quadratics_and_a_cubic() {
        let a = p(&[-1, 1, 1]); // u^2 + u - 1
        let b = p(&[2, -2, 1]);
        let c = p(&[-2, 0, 0, 1]); // u^3 - 2, no rational factor
        let all = (&(&a * &b.pow(2)) * &c).scale(&Rat::new(BigInt::from(-7), BigInt::from(2)));
        let f = factor_square_free_in_u(&all);
        assert_eq!(f.expand(), all);
        assert!(f.has_factor(&a));
        assert!(f.factors.contains(&(b.clone(), 2)));
        assert_eq!(f.remainder, c);
    }
}
