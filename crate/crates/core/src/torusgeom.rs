//! The weighted torus action on P^4, the involution swapping `x<->w`, `y<->t`,
//! semi-invariance and degrees of orbit closures.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::exactalg::{MPoly, Scalar};

/// Weights of the action `(x, y, z, t, w) -> (x, l y, l^3 z, l^5 t, l^6 w)`.
pub const ACTION: [i64; 5] = [0, 1, 3, 5, 6];
pub const P4_VARS: [&str; 5] = ["x", "y", "z", "t", "w"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("zero polynomial has no weight")]
    ZeroPolynomial,
    #[error("not semi-invariant: {first_mono} has weight {first_weight}, {second_mono} has weight {second_weight}")]
    NotSemiInvariant { first_mono: String, first_weight: i64, second_mono: String, second_weight: i64 },
    #[error("expected variables (x,y,z,t,w), found ({0})")]
    WrongVariables(String),
    #[error("weight vector has length {weights}, point has {coords} coordinates")]
    LengthMismatch { weights: usize, coords: usize },
    #[error("all coordinates are zero")]
    AllZero,
    #[error("weights must be pairwise distinct")]
    RepeatedWeights,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn new(w: Vec<i64>) -> Self {
        assert!(w.len() >= 2, "weight vector needs at least two entries");
        WeightVector(w)
    }

    pub fn p4() -> Self {
        WeightVector(ACTION.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Weight of a semi-invariant polynomial.
pub fn weight_of(p: &MPoly, action: &WeightVector) -> Result<i64, TorusError> {
    if p.is_zero() {
        return Err(TorusError::ZeroPolynomial);
    }
    if p.vars().len() != action.len() {
        return Err(TorusError::LengthMismatch { weights: action.len(), coords: p.vars().len() });
    }
    let wt = |e: &[u32]| e.iter().zip(&action.0).map(|(&k, &r)| k as i64 * r).sum::<i64>();
    let mut terms = p.sorted_terms().into_iter();
    let (e0, _) = terms.next().unwrap();
    let w0 = wt(e0);
    for (e, _) in terms {
        let w = wt(e);
        if w != w0 {
            let mono = |e: &[u32]| {
                let m = p.fmt_monomial(e);
                if m.is_empty() {
                    "1".to_string()
                } else {
                    m
                }
            };
            return Err(TorusError::NotSemiInvariant { first_mono: mono(e0), first_weight: w0, second_mono: mono(e), second_weight: w });
        }
    }
    Ok(w0)
}

/// `(x, y, z, t, w) -> (w, t, z, y, x)`
pub fn apply_involution(p: &MPoly) -> Result<MPoly, TorusError> {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    if vars != P4_VARS {
        return Err(TorusError::WrongVariables(vars.join(",")));
    }
    Ok(MPoly::from_terms(p.vars().clone(), p.terms().iter().map(|(e, c)| (vec![e[4], e[3], e[2], e[1], e[0]], c.clone()))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPoint {
    pub coords: Vec<Scalar>,
    pub weights: WeightVector,
}

impl WeightedPoint {
    pub fn new(coords: Vec<Scalar>, weights: WeightVector) -> Result<Self, TorusError> {
        if coords.len() != weights.len() {
            return Err(TorusError::LengthMismatch { weights: weights.len(), coords: coords.len() });
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(TorusError::AllZero);
        }
        Ok(WeightedPoint { coords, weights })
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| !self.coords[i].is_zero()).collect()
    }

    /// Projective equality.
    pub fn same_point(&self, other: &WeightedPoint) -> bool {
        same_projective_point(&self.coords, &other.coords)
    }
}

impl fmt::Display for WeightedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// Equality of two coordinate vectors up to a nonzero scalar.
pub fn same_projective_point(a: &[Scalar], b: &[Scalar]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(i) = a.iter().position(|c| !c.is_zero()) else {
        return b.iter().all(|c| c.is_zero());
    };
    if b[i].is_zero() {
        return false;
    }
    // a ~ b iff a_j b_i = b_j a_i for all j
    a.iter().zip(b).all(|(aj, bj)| matches!((aj.checked_mul(&b[i]), bj.checked_mul(&a[i])), (Ok(x), Ok(y)) if x == y))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    pub degree: i64,
    pub support: Vec<usize>,
    pub gcd: i64,
    /// Distinct values `(r_i - r_min)/gcd` over the support, sorted.
    pub normalized_exponents: Vec<i64>,
    pub is_rational_normal: bool,
    pub is_fixed_point: bool,
}

/// Degree of the closure of the orbit `l -> (l^{r_i} a_i)` of a point.
pub fn orbit_info(pt: &WeightedPoint) -> OrbitInfo {
    let support = pt.support();
    let mut ws: Vec<i64> = support.iter().map(|&i| pt.weights.0[i]).collect();
    ws.sort();
    ws.dedup();
    if ws.len() < 2 {
        return OrbitInfo { degree: 0, support, gcd: 1, normalized_exponents: vec![0], is_rational_normal: false, is_fixed_point: true };
    }
    let rmin = ws[0];
    let rmax = *ws.last().unwrap();
    let g = ws.iter().fold(0i64, |acc, &r| acc.gcd(&(r - rmin)));
    let normalized: Vec<i64> = ws.iter().map(|&r| (r - rmin) / g).collect();
    let degree = (rmax - rmin) / g;
    let is_rational_normal = normalized == (0..=degree).collect::<Vec<_>>();
    OrbitInfo { degree, support, gcd: g, normalized_exponents: normalized, is_rational_normal, is_fixed_point: false }
}

/// Limits of the orbit as `l -> 0` and `l -> infinity`.
pub fn orbit_limits(pt: &WeightedPoint) -> (WeightedPoint, WeightedPoint) {
    let support = pt.support();
    let wmin = support.iter().map(|&i| pt.weights.0[i]).min().unwrap();
    let wmax = support.iter().map(|&i| pt.weights.0[i]).max().unwrap();
    let keep = |w: i64| {
        let coords = pt.coords.iter().zip(&pt.weights.0).map(|(c, &r)| if r == w { c.clone() } else { Scalar::zero() }).collect();
        WeightedPoint { coords, weights: pt.weights.clone() }
    };
    (keep(wmin), keep(wmax))
}

/// Coordinate points lying on `{hyp = 0}`; these are all the fixed points when the
/// weights are pairwise distinct.
pub fn fixed_points_on(hyp: &MPoly, action: &WeightVector) -> Result<Vec<WeightedPoint>, TorusError> {
    let mut sorted = action.0.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != action.len() {
        return Err(TorusError::RepeatedWeights);
    }
    if hyp.vars().len() != action.len() {
        return Err(TorusError::LengthMismatch { weights: action.len(), coords: hyp.vars().len() });
    }
    let n = action.len();
    let mut out = Vec::new();
    for i in 0..n {
        let coords: Vec<Scalar> = (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect();
        let v = hyp.eval(&coords).expect("evaluation at a coordinate point");
        if v.is_zero() {
            out.push(WeightedPoint { coords, weights: action.clone() });
        }
    }
    Ok(out)
}
