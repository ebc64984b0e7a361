//! Sparse multivariate polynomials over [`Scalar`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Signed;

use super::scalar::Scalar;
use super::AlgError;

pub type Exps = Vec<u32>;

/// Graded lexicographic comparison; earlier variables are more significant.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Exps, Scalar>,
}

pub fn var_list(names: &[&str]) -> Arc<[String]> {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

fn join_vars(v: &[String]) -> String {
    v.join(",")
}

impl MPoly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Arc<[String]>, c: Scalar) -> Self {
        let n = vars.len();
        Self::monomial(vars, vec![0; n], c)
    }

    pub fn monomial(vars: Arc<[String]>, exps: Exps, c: Scalar) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { vars, terms }
    }

    pub fn var(vars: Arc<[String]>, name: &str) -> Result<Self, AlgError> {
        let i = vars.iter().position(|v| v == name).ok_or_else(|| AlgError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Ok(Self::monomial(vars, e, Scalar::one()))
    }

    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = (Exps, Scalar)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exps, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn try_add_term(&mut self, e: Exps, c: Scalar) -> Result<(), AlgError> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().checked_add(&c)?;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> &BTreeMap<Exps, Scalar> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if the polynomial involves no variable.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.terms.keys().any(|e| e[i] > 0)).collect()
    }

    /// Largest term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Exps, &Scalar)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    fn check_vars(&self, o: &MPoly) -> Result<(), AlgError> {
        if self.vars == o.vars {
            Ok(())
        } else {
            Err(AlgError::VariableMismatch { expected: join_vars(&self.vars), found: join_vars(&o.vars) })
        }
    }

    pub fn checked_add(&self, o: &MPoly) -> Result<MPoly, AlgError> {
        self.check_vars(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.try_add_term(e.clone(), c.clone())?;
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &MPoly) -> Result<MPoly, AlgError> {
        self.checked_add(&o.neg_ref())
    }

    pub fn checked_mul(&self, o: &MPoly) -> Result<MPoly, AlgError> {
        self.check_vars(o)?;
        let mut r = MPoly::zero(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.try_add_term(e, c1.checked_mul(c2)?)?;
            }
        }
        Ok(r)
    }

    fn neg_ref(&self) -> MPoly {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn checked_scale(&self, c: &Scalar) -> Result<MPoly, AlgError> {
        let mut r = MPoly::zero(self.vars.clone());
        if c.is_zero() {
            return Ok(r);
        }
        for (e, a) in &self.terms {
            r.try_add_term(e.clone(), a.checked_mul(c)?)?;
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        self.checked_scale(c).expect("scalar multiple")
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::constant(self.vars.clone(), Scalar::one());
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

    pub fn checked_pow(&self, e: u32) -> Result<MPoly, AlgError> {
        let mut acc = MPoly::constant(self.vars.clone(), Scalar::one());
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Sum of the terms of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == k).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Lowest total degree among the terms.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn partial(&self, var: &str) -> Result<MPoly, AlgError> {
        let i = self.var_index(var).ok_or_else(|| AlgError::UnknownVariable(var.into()))?;
        let mut r = MPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            r.add_term(e2, c * &Scalar::from(e[i] as i64));
        }
        Ok(r)
    }

    /// Simultaneous substitution. Every image must live in the same variable set,
    /// which becomes the variable set of the result; unbound variables of `self` are
    /// carried over by name.
    pub fn substitute(&self, bindings: &[(&str, MPoly)]) -> Result<MPoly, AlgError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let target = bindings[0].1.vars.clone();
        for (_, b) in bindings {
            if b.vars != target {
                return Err(AlgError::VariableMismatch { expected: join_vars(&target), found: join_vars(&b.vars) });
            }
        }
        let mut images: Vec<Option<MPoly>> = vec![None; self.vars.len()];
        for (name, b) in bindings {
            let i = self.var_index(name).ok_or_else(|| AlgError::UnknownVariable(name.to_string()))?;
            images[i] = Some(b.clone());
        }
        for i in self.support_vars() {
            if images[i].is_none() {
                let name = &self.vars[i];
                images[i] = Some(
                    MPoly::var(target.clone(), name)
                        .map_err(|_| AlgError::VariableMismatch { expected: join_vars(&target), found: join_vars(&self.vars) })?,
                );
            }
        }
        let mut cache: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut out = MPoly::zero(target.clone());
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(target.clone(), c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let key = (i, k);
                if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(key) {
                    let p = images[i].as_ref().unwrap().checked_pow(k)?;
                    e.insert(p);
                }
                t = t.checked_mul(&cache[&key])?;
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Evaluates at a point given in variable order.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, AlgError> {
        if point.len() != self.vars.len() {
            return Err(AlgError::VariableMismatch { expected: join_vars(&self.vars), found: format!("{} values", point.len()) });
        }
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t.checked_mul(&v.pow(k))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Exact quotient `self / q`.
    pub fn divide_exact(&self, q: &MPoly) -> Result<MPoly, AlgError> {
        self.check_vars(q)?;
        let (lq, cq) = q.leading_term().ok_or(AlgError::DivisionByZero)?;
        let lq = lq.clone();
        let cinv = cq.inv()?;
        let mut r = self.clone();
        let mut quot = MPoly::zero(self.vars.clone());
        while let Some((lr, cr)) = r.leading_term() {
            if lr.iter().zip(&lq).any(|(a, b)| a < b) {
                return Err(AlgError::NotDivisible);
            }
            let e: Exps = lr.iter().zip(&lq).map(|(a, b)| a - b).collect();
            let c = cr.checked_mul(&cinv)?;
            let t = MPoly::monomial(self.vars.clone(), e, c);
            r = r.checked_sub(&t.checked_mul(q)?)?;
            quot = quot.checked_add(&t)?;
        }
        Ok(quot)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar, AlgError>) -> Result<MPoly, AlgError> {
        let mut r = MPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            r.try_add_term(e.clone(), f(c)?)?;
        }
        Ok(r)
    }

    /// Replaces the parameter `u` in every coefficient.
    pub fn subst_u(&self, val: &Scalar) -> Result<MPoly, AlgError> {
        self.map_coeffs(|c| c.subst_u(val))
    }

    /// Re-expresses the polynomial in a different variable list (matched by name).
    pub fn embed(&self, vars: Arc<[String]>) -> Result<MPoly, AlgError> {
        let mut idx = vec![None; self.vars.len()];
        for (i, v) in self.vars.iter().enumerate() {
            idx[i] = vars.iter().position(|w| w == v);
        }
        for i in self.support_vars() {
            if idx[i].is_none() {
                return Err(AlgError::UnknownVariable(self.vars[i].clone()));
            }
        }
        let mut r = MPoly::zero(vars.clone());
        for (e, c) in &self.terms {
            let mut e2 = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    e2[idx[i].unwrap()] = k;
                }
            }
            r.add_term(e2, c.clone());
        }
        Ok(r)
    }

    /// Coefficients (low degree first) of a polynomial in the single variable `var`.
    pub fn as_univariate(&self, var: &str) -> Result<Vec<Scalar>, AlgError> {
        let i = self.var_index(var).ok_or_else(|| AlgError::UnknownVariable(var.into()))?;
        let deg = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![Scalar::zero(); deg + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return Err(AlgError::NotUnivariate(var.into()));
            }
            out[e[i] as usize] = c.clone();
        }
        while out.len() > 1 && out.last().unwrap().is_zero() {
            out.pop();
        }
        Ok(out)
    }

    pub fn from_univariate(vars: Arc<[String]>, var: &str, coeffs: &[Scalar]) -> Result<MPoly, AlgError> {
        let i = vars.iter().position(|v| v == var).ok_or_else(|| AlgError::UnknownVariable(var.into()))?;
        let n = vars.len();
        Ok(MPoly::from_terms(
            vars,
            coeffs.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; n];
                e[i] = k as u32;
                (e, c.clone())
            }),
        ))
    }

    /// Splits by the power of variable `i`: `self = sum_k coeff_k * v_i^k`.
    pub fn collect_in(&self, i: usize) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[i] = 0;
            out.entry(e[i]).or_insert_with(|| MPoly::zero(self.vars.clone())).add_term(e2, c.clone());
        }
        out
    }

    /// Terms in descending graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Exps, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }

    pub fn fmt_monomial(&self, e: &[u32]) -> String {
        let mut parts = Vec::new();
        for (v, &k) in self.vars.iter().zip(e) {
            match k {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{k}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = self.fmt_monomial(e);
            let (neg, body) = match c {
                Scalar::Rat(r) => {
                    let neg = r.is_negative();
                    let a = if neg { -c } else { c.clone() };
                    let body = if mono.is_empty() {
                        a.to_string()
                    } else if a.is_one() {
                        mono.clone()
                    } else {
                        format!("{a}*{mono}")
                    };
                    (neg, body)
                }
                _ => {
                    let atom = c.fmt_atom();
                    let (neg, a) = match atom.strip_prefix('-') {
                        Some(rest) => (true, rest.to_string()),
                        None => (false, atom),
                    };
                    let body = if mono.is_empty() { a } else { format!("{a}*{mono}") };
                    (neg, body)
                }
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        f.write_str(&out)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        self.checked_add(o).expect("polynomial addition")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self.checked_sub(o).expect("polynomial subtraction")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        self.checked_mul(o).expect("polynomial multiplication")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_ref()
    }
}

forward_owned_ops!(MPoly);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly;

    const P5: [&str; 5] = ["x", "y", "z", "t", "w"];

    #[test]
    fn partials_of_the_quadric() {
        let q = parse_poly("u*(x*w - z^2) + (z^2 - y*t)", &P5).unwrap();
        let dz = q.partial("z").unwrap();
        assert_eq!(dz, parse_poly("2*(1-u)*z", &P5).unwrap());
        let f = parse_poly("x*w - y*t", &P5).unwrap();
        assert_eq!(f.partial("x").unwrap(), parse_poly("w", &P5).unwrap());
    }

    #[test]
    fn exact_division() {
        let p = parse_poly("x^2 - y^2", &["x", "y"]).unwrap();
        let q = parse_poly("x + y", &["x", "y"]).unwrap();
        assert_eq!(p.divide_exact(&q).unwrap(), parse_poly("x - y", &["x", "y"]).unwrap());
        let r = parse_poly("x^2 + y^2", &["x", "y"]).unwrap();
        assert_eq!(r.divide_exact(&q), Err(AlgError::NotDivisible));
        let one = parse_poly("1", &["x", "y"]).unwrap();
        assert_eq!(p.divide_exact(&one).unwrap(), p);
    }

    #[test]
    fn printing_is_grlex() {
        let p = parse_poly("y + x^2 - 3 + (u-1)*x*y - u*y^2", &["x", "y"]).unwrap();
        assert_eq!(p.to_string(), "x^2 + (u - 1)*x*y - u*y^2 + y - 3");
        assert_eq!(MPoly::zero(var_list(&["x"])).to_string(), "0");
    }

    #[test]
    fn substitution_passes_unbound_variables() {
        let p = parse_poly("x*w - y*t", &P5).unwrap();
        let one = MPoly::constant(var_list(&P5), Scalar::one());
        let r = p.substitute(&[("x", one)]).unwrap();
        assert_eq!(r, parse_poly("w - y*t", &P5).unwrap());
    }
}
