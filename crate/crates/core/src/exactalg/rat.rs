//! Helpers on top of `BigRational`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root in Q, if any. The nonnegative root is returned.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(Rat::new(n, d))
}

/// Splits a nonzero integer as `k^2 * m` where `m` has no square factor among
/// primes below 1000 and is not itself a perfect square (unless it is +-1).
pub fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut m = n.abs();
    let mut p = BigInt::from(2u32);
    let bound = BigInt::from(1000u32);
    while p < bound && m > BigInt::one() {
        let p2 = &p * &p;
        while (&m % &p2).is_zero() {
            m /= &p2;
            k *= &p;
        }
        p += 1u32;
    }
    if let Some(r) = int_sqrt(&m) {
        k *= &r;
        m = BigInt::one();
    }
    if n.sign() == Sign::Minus {
        m = -m;
    }
    (k, m)
}

/// Rational `r` as `c^2 * m` with `m` a square-reduced integer.
pub fn rat_square_part(r: &Rat) -> (Rat, BigInt) {
    // n/d = n*d / d^2
    let nd = r.numer() * r.denom();
    let (k, m) = square_part(&nd);
    (Rat::new(k, r.denom().clone()), m)
}

pub fn lcm_denoms<'a, I: IntoIterator<Item = &'a Rat>>(it: I) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn gcd_numers<'a, I: IntoIterator<Item = &'a Rat>>(it: I) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-1, 1)), None);
        assert_eq!(rat_sqrt(&Rat::zero()), Some(Rat::zero()));
    }

    #[test]
    fn square_parts() {
        let (k, m) = square_part(&BigInt::from(72));
        assert_eq!((k, m), (BigInt::from(6), BigInt::from(2)));
        let (k, m) = square_part(&BigInt::from(-20));
        assert_eq!((k, m), (BigInt::from(2), BigInt::from(-5)));
        let (c, m) = rat_square_part(&rat(5, 4));
        assert_eq!((c, m), (rat(1, 2), BigInt::from(5)));
    }
}
