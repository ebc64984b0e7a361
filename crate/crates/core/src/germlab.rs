//! Local equations on the quadric: affine charts, Taylor expansion at a point,
//! tangency of two surfaces, singularity along a curve, quadratic forms and the
//! classification of plane curve germs of types A1, A2, A3 and D4.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::catalog::{Catalog, CatalogError, Curve, ZETA_SLOTS};
use crate::curvelab::{admissible_locus, p_label};
use crate::exactalg::mpoly::var_list;
use crate::exactalg::rat::fmt_rat;
use crate::exactalg::resultant::dense;
use crate::exactalg::{linalg, AlgError, MPoly, Rat, Scalar, UPolyU};
use crate::report::CheckResult;
use crate::torusgeom::P4_VARS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GermError {
    #[error("the quadric is not linear in `{0}` with constant coefficient in this chart")]
    NotLinear(String),
    #[error("the point is not on the surface: constant term {0}")]
    NotOnSurface(String),
    #[error("linear part is zero")]
    ZeroLinearJet,
    #[error("the curve is not on both hypersurfaces")]
    CurveNotOnSurfaces,
    #[error("input is the zero polynomial")]
    ZeroPolynomial,
    #[error("expected {expected} variables, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("not a quadratic form")]
    NotQuadratic,
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

// ---------------------------------------------------------------------------
// charts

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartEq {
    /// Coordinate set to 1.
    pub chart: String,
    pub eliminated: String,
    /// Value of the eliminated coordinate from the quadric.
    pub solved: MPoly,
    pub multiplier: Scalar,
    /// `multiplier * surface` restricted to the chart.
    pub local: MPoly,
}

/// Restricts `surface` to the chart `chart = 1` of the quadric, solving the quadric
/// for `eliminate`, and multiplies by `multiplier`. Extra variables of `surface`
/// beyond `(x, y, z, t, w)` are carried along as parameters.
pub fn chart_eq(cat: &Catalog, surface: &MPoly, chart: &str, eliminate: &str, multiplier: &Scalar) -> Result<ChartEq, GermError> {
    let vars = surface.vars().clone();
    let target: Vec<&str> = vars.iter().map(|s| s.as_str()).filter(|v| *v != chart && *v != eliminate).collect();
    let target = var_list(&target);
    let one = MPoly::constant(target.clone(), Scalar::one());
    let q = cat.p("quadric").embed(vars.clone())?;
    let ei = q.var_index(eliminate).ok_or_else(|| AlgError::UnknownVariable(eliminate.into()))?;
    let parts = q.collect_in(ei);
    if parts.keys().any(|&k| k > 1) || !parts.contains_key(&1) {
        return Err(GermError::NotLinear(eliminate.into()));
    }
    let to_chart = |p: &MPoly| p.substitute(&[(chart, one.clone())]);
    let a = to_chart(&parts[&1])?;
    let b = parts.get(&0).map(to_chart).transpose()?.unwrap_or_else(|| MPoly::zero(target.clone()));
    let a = a.as_constant().filter(|c| !c.is_zero()).ok_or_else(|| GermError::NotLinear(eliminate.into()))?;
    let solved = b.scale(&(-a.inv()?));
    let local = surface.substitute(&[(chart, one), (eliminate, solved.clone())])?.checked_scale(multiplier)?;
    Ok(ChartEq { chart: chart.into(), eliminated: eliminate.into(), solved, multiplier: multiplier.clone(), local })
}

// ---------------------------------------------------------------------------
// germs

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Germ {
    pub center: Vec<Scalar>,
    /// Shifted polynomial; the first `center.len()` variables are the barred ones,
    /// any further ones are parameters.
    pub poly: MPoly,
    /// `jets[k]` is the part of degree `k` in the barred variables.
    pub jets: Vec<MPoly>,
}

impl Germ {
    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn jet(&self, k: usize) -> MPoly {
        self.jets.get(k).cloned().unwrap_or_else(|| MPoly::zero(self.poly.vars().clone()))
    }

    pub fn barred_vars(&self) -> Vec<String> {
        self.poly.vars()[..self.dim()].to_vec()
    }
}

fn degree_in_first(e: &[u32], n: usize) -> u32 {
    e[..n].iter().sum()
}

fn split_jets(p: &MPoly, n: usize) -> Vec<MPoly> {
    let mut out: Vec<MPoly> = Vec::new();
    for (e, c) in p.terms() {
        let d = degree_in_first(e, n) as usize;
        while out.len() <= d {
            out.push(MPoly::zero(p.vars().clone()));
        }
        out[d] = &out[d] + &MPoly::monomial(p.vars().clone(), e.clone(), c.clone());
    }
    out
}

/// Expands `eq` at `point` in the variables `v - point_v` (named `vb`), for the
/// first `point.len()` variables of `eq`.
pub fn expand_at(eq: &MPoly, point: &[Scalar]) -> Result<Germ, GermError> {
    let n = point.len();
    let vars = eq.vars();
    if vars.len() < n {
        return Err(GermError::Arity { expected: n, found: vars.len() });
    }
    let names: Vec<String> = vars.iter().enumerate().map(|(i, v)| if i < n { format!("{v}b") } else { v.clone() }).collect();
    let names_ref: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let target = var_list(&names_ref);
    let mut binds = Vec::new();
    for i in 0..n {
        let shifted = &MPoly::var(target.clone(), &names[i])? + &MPoly::constant(target.clone(), point[i].clone());
        binds.push((vars[i].as_str(), shifted));
    }
    for v in &vars[n..] {
        binds.push((v.as_str(), MPoly::var(target.clone(), v)?));
    }
    let poly = eq.substitute(&binds)?;
    let jets = split_jets(&poly, n);
    if let Some(c) = jets.first().filter(|j| !j.is_zero()) {
        return Err(GermError::NotOnSurface(c.to_string()));
    }
    Ok(Germ { center: point.to_vec(), poly, jets })
}

/// Coefficients of a linear form in the barred variables.
fn linear_coeffs(g: &Germ) -> Result<Vec<Scalar>, GermError> {
    let lin = g.jet(1);
    let n = g.dim();
    (0..n)
        .map(|i| {
            let mut e = vec![0; lin.vars().len()];
            e[i] = 1;
            let c = lin.coeff(&e);
            Ok(c)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Proportionality {
    Always,
    Never,
    /// Proportional exactly when `u` is a root of one of these factors.
    Locus(Vec<UPolyU>),
}

impl fmt::Display for Proportionality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Proportionality::Always => f.write_str("always"),
            Proportionality::Never => f.write_str("never"),
            Proportionality::Locus(l) => {
                let parts: Vec<String> = l.iter().map(|p| format!("{p} = 0")).collect();
                f.write_str(&parts.join(" or "))
            }
        }
    }
}

/// All 2x2 minors of the stacked linear jets.
pub fn linear_minors(g1: &Germ, g2: &Germ) -> Result<Vec<Scalar>, GermError> {
    let (a, b) = (linear_coeffs(g1)?, linear_coeffs(g2)?);
    if a.iter().all(|c| c.is_zero()) || b.iter().all(|c| c.is_zero()) {
        return Err(GermError::ZeroLinearJet);
    }
    if a.len() != b.len() {
        return Err(GermError::Arity { expected: a.len(), found: b.len() });
    }
    let mut out = Vec::new();
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            out.push(&(&a[i] * &b[j]) - &(&a[j] * &b[i]));
        }
    }
    Ok(out)
}

/// The condition on `u` for the linear parts to be proportional: the gcd of the
/// numerators of the minors, without the roots `0` and `1`.
pub fn linear_parts_proportional(g1: &Germ, g2: &Germ) -> Result<Proportionality, GermError> {
    let minors = linear_minors(g1, g2)?;
    if minors.iter().all(|m| m.is_zero()) {
        return Ok(Proportionality::Always);
    }
    let mut g = UPolyU::zero();
    for m in &minors {
        let f = m.as_func().ok_or(GermError::NotQuadratic)?;
        g = g.gcd(f.num());
    }
    let locus = admissible_locus(&g);
    Ok(if locus.is_empty() { Proportionality::Never } else { Proportionality::Locus(locus) })
}

// ---------------------------------------------------------------------------
// singularity along a curve

fn gradient(p: &MPoly) -> Result<Vec<MPoly>, AlgError> {
    P4_VARS.iter().map(|v| p.partial(v)).collect()
}

fn on_curve(p: &MPoly, c: &Curve) -> Result<MPoly, AlgError> {
    let binds: Vec<(&str, MPoly)> = P4_VARS.iter().copied().zip(c.coords.iter().cloned()).collect();
    p.substitute(&binds)
}

fn eval_vec(ps: &[MPoly], pt: &[Scalar]) -> Result<Vec<Scalar>, AlgError> {
    ps.iter().map(|p| p.eval(pt)).collect()
}

/// All 2x2 minors of the Jacobian of `(Q, g)` vanish identically along the curve.
pub fn gradient_dependent_on_curve(cat: &Catalog, g: &MPoly, curve: &Curve) -> Result<bool, GermError> {
    let q = cat.p("quadric");
    if !on_curve(q, curve)?.is_zero() || !on_curve(g, curve)?.is_zero() {
        return Err(GermError::CurveNotOnSurfaces);
    }
    let dq: Vec<MPoly> = gradient(q)?.iter().map(|p| on_curve(p, curve)).collect::<Result<_, _>>()?;
    let dg: Vec<MPoly> = gradient(g)?.iter().map(|p| on_curve(p, curve)).collect::<Result<_, _>>()?;
    for i in 0..5 {
        for j in (i + 1)..5 {
            if !(&(&dq[i] * &dg[j]) - &(&dq[j] * &dg[i])).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Certificate for the multiplicity of the surface `Q = g = 0` along a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultCertificate {
    /// Proven lower bound (gradient dependence along the whole curve).
    pub lower: u32,
    /// Proven upper bound at the base point, if one was found.
    pub upper: Option<u32>,
    /// Tangent direction to the quadric where the decisive derivative is nonzero.
    pub direction: Vec<Scalar>,
    pub value: Scalar,
}

impl MultCertificate {
    pub fn exact(&self) -> Option<u32> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Multiplicity of `{Q = g = 0}` along `curve`, certified at `base`: at least 2 when
/// the Jacobian of `(Q, g)` has rank 1 along the curve, and at most `k` when a
/// `k`-th derivative of `g - c Q` in a direction tangent to `Q` is nonzero at `base`.
pub fn mult_along_curve(cat: &Catalog, g: &MPoly, curve: &Curve, base: &[Scalar]) -> Result<MultCertificate, GermError> {
    let q = cat.p("quadric");
    let dep = gradient_dependent_on_curve(cat, g, curve)?;
    let dq = eval_vec(&gradient(q)?, base)?;
    let dg = eval_vec(&gradient(g)?, base)?;
    let tangent = linalg::nullspace(std::slice::from_ref(&dq))?;
    if !dep {
        for v in &tangent {
            let val = dot(&dg, v);
            if !val.is_zero() {
                return Ok(MultCertificate { lower: 1, upper: Some(1), direction: v.clone(), value: val });
            }
        }
        return Ok(MultCertificate { lower: 1, upper: None, direction: Vec::new(), value: Scalar::zero() });
    }
    // g - c Q has zero gradient at base
    let k = (0..5).find(|&i| !dq[i].is_zero()).ok_or(GermError::NotQuadratic)?;
    let c = dg[k].checked_div(&dq[k])?;
    let h = g.checked_sub(&q.checked_scale(&c)?)?;
    let hess: Vec<Vec<MPoly>> =
        P4_VARS.iter().map(|a| P4_VARS.iter().map(|b| h.partial(a).and_then(|p| p.partial(b))).collect()).collect::<Result<_, _>>()?;
    let hm: Vec<Vec<Scalar>> = hess.iter().map(|row| eval_vec(row, base)).collect::<Result<_, _>>()?;
    let form = |v: &[Scalar]| {
        let hv: Vec<Scalar> = hm.iter().map(|row| dot(row, v)).collect();
        dot(v, &hv)
    };
    let mut candidates: Vec<Vec<Scalar>> = tangent.clone();
    for i in 0..tangent.len() {
        for j in (i + 1)..tangent.len() {
            candidates.push(tangent[i].iter().zip(&tangent[j]).map(|(a, b)| a + b).collect());
        }
    }
    for v in candidates {
        let val = form(&v);
        if !val.is_zero() {
            return Ok(MultCertificate { lower: 2, upper: Some(2), direction: v, value: val });
        }
    }
    Ok(MultCertificate { lower: 2, upper: None, direction: Vec::new(), value: Scalar::zero() })
}

// ---------------------------------------------------------------------------
// quadratic forms

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadAnalysis {
    pub rank: usize,
    /// Symmetric Gram matrix in the variable order of the input.
    pub matrix: Vec<Vec<Scalar>>,
    /// `q = c * L^2` when the rank is 1.
    pub square: Option<(Scalar, MPoly)>,
    /// `q = c * L1 * L2` when the rank is at most 2 and the factors exist over the
    /// coefficient field or its extension by one square root.
    pub factors: Option<(Scalar, MPoly, MPoly)>,
}

pub fn gram_matrix(q: &MPoly, n: usize) -> Result<Vec<Vec<Scalar>>, GermError> {
    if q.terms().keys().any(|e| degree_in_first(e, n) != 2 || e[n..].iter().any(|&k| k > 0)) {
        return Err(GermError::NotQuadratic);
    }
    let nv = q.vars().len();
    let half = Scalar::ratio(1, 2);
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut e = vec![0; nv];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(&e);
            m[i][j] = if i == j { c } else { &c * &half };
        }
    }
    Ok(m)
}

fn linear_form(vars: &Arc<[String]>, coeffs: &[Scalar]) -> MPoly {
    let n = vars.len();
    MPoly::from_terms(
        vars.clone(),
        coeffs.iter().enumerate().map(|(i, c)| {
            let mut e = vec![0; n];
            e[i] = 1;
            (e, c.clone())
        }),
    )
}

/// Rank over the coefficient field, the square root of a rank-1 form and the
/// linear factors of a rank-2 form. All variables of `q` are form variables.
pub fn quad_form_analyze(q: &MPoly) -> Result<QuadAnalysis, GermError> {
    let n = q.vars().len();
    let m = gram_matrix(q, n)?;
    let rank = linalg::rank(&m)?;
    let mut out = QuadAnalysis { rank, matrix: m.clone(), square: None, factors: None };
    if rank == 1 {
        let i = (0..n).find(|&i| !m[i][i].is_zero()).expect("rank 1 has a nonzero diagonal entry");
        let l = linear_form(q.vars(), &m[i]);
        let c = m[i][i].inv()?;
        out.square = Some((c.clone(), l.clone()));
        out.factors = Some((c, l.clone(), l));
    } else if rank == 2 {
        out.factors = split_rank_two(q)?;
    }
    Ok(out)
}

fn split_rank_two(q: &MPoly) -> Result<Option<(Scalar, MPoly, MPoly)>, GermError> {
    let n = q.vars().len();
    let vars = q.vars().clone();
    let sq = |i: usize| {
        let mut e = vec![0; n];
        e[i] = 2;
        q.coeff(&e)
    };
    // make some square coefficient nonzero by x_i -> x_i + x_j
    let (q2, undo) = match (0..n).find(|&i| !sq(i).is_zero()) {
        Some(_) => (q.clone(), None),
        None => {
            let (i, j) = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .find(|&(i, j)| {
                    let mut e = vec![0; n];
                    e[i] += 1;
                    e[j] += 1;
                    i < j && !q.coeff(&e).is_zero()
                })
                .ok_or(GermError::NotQuadratic)?;
            let xi = MPoly::var(vars.clone(), &vars[i])?;
            let xj = MPoly::var(vars.clone(), &vars[j])?;
            let fwd = q.substitute(&[(vars[i].as_str(), &xi + &xj)])?;
            (fwd, Some((i, j)))
        }
    };
    let k = (0..n)
        .find(|&i| {
            let mut e = vec![0; n];
            e[i] = 2;
            !q2.coeff(&e).is_zero()
        })
        .unwrap();
    let parts = q2.collect_in(k);
    let a = parts[&2].as_constant().unwrap();
    let b = parts.get(&1).cloned().unwrap_or_else(|| MPoly::zero(vars.clone()));
    let c = parts.get(&0).cloned().unwrap_or_else(|| MPoly::zero(vars.clone()));
    // discriminant b^2 - 4ac is c' * M^2 for a rank-2 form
    let disc = &(&b * &b) - &c.scale(&(&a * &Scalar::from(4)));
    let xk = MPoly::var(vars.clone(), &vars[k])?;
    let two_a = &a * &Scalar::from(2);
    let inv = two_a.inv()?;
    let (l1, l2) = if disc.is_zero() {
        let l = &xk + &b.scale(&inv);
        (l.clone(), l)
    } else {
        let dm = gram_matrix(&disc, n)?;
        if linalg::rank(&dm)? != 1 {
            return Ok(None);
        }
        let i = (0..n).find(|&i| !dm[i][i].is_zero()).unwrap();
        let lm = linear_form(&vars, &dm[i]);
        let root = match dm[i][i].inv()?.sqrt() {
            Ok(r) => r,
            Err(_) => return Ok(None),
        };
        let s = lm.checked_scale(&root)?;
        let l1 = xk.checked_add(&b.checked_add(&s)?.checked_scale(&inv)?)?;
        let l2 = xk.checked_add(&b.checked_sub(&s)?.checked_scale(&inv)?)?;
        (l1, l2)
    };
    let (l1, l2) = match undo {
        None => (l1, l2),
        Some((i, j)) => {
            let xi = MPoly::var(vars.clone(), &vars[i])?;
            let xj = MPoly::var(vars.clone(), &vars[j])?;
            let back = &xi - &xj;
            (l1.substitute(&[(vars[i].as_str(), back.clone())])?, l2.substitute(&[(vars[i].as_str(), back)])?)
        }
    };
    Ok(Some((a, l1, l2)))
}

/// Whether two polynomials agree up to a nonzero constant factor; returns the factor
/// `c` with `p = c * q`.
pub fn proportional(p: &MPoly, q: &MPoly) -> Option<Scalar> {
    let (e, cq) = q.leading_term()?;
    let c = p.coeff(e).checked_div(cq).ok()?;
    (!c.is_zero() && q.checked_scale(&c).ok()? == *p).then_some(c)
}

// ---------------------------------------------------------------------------
// plane germs

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingKind {
    Smooth,
    A1,
    A2,
    A3,
    D4,
    Unclassified,
}

impl fmt::Display for SingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingClass {
    pub kind: SingKind,
    /// Discriminant `b^2 - 4ac` of the quadratic jet `a x^2 + b x y + c y^2`.
    pub quad_discriminant: Option<Scalar>,
    /// Discriminant of the cubic jet when the quadratic jet vanishes.
    pub cubic_discriminant: Option<Scalar>,
    /// After `v = L`: the coefficient of `x^3` (type A2 when nonzero).
    pub gamma: Option<Scalar>,
    /// After `v = L` and completing the square: the coefficient of `x^4`.
    pub beta: Option<Scalar>,
    /// The germ in the coordinates `(v, x)` when the quadratic jet is a square.
    pub normal_form: Option<MPoly>,
}

impl SingClass {
    fn new(kind: SingKind) -> Self {
        SingClass { kind, quad_discriminant: None, cubic_discriminant: None, gamma: None, beta: None, normal_form: None }
    }
}

fn coeff2(p: &MPoly, i: u32, j: u32) -> Scalar {
    p.coeff(&[i, j])
}

/// Discriminant of the binary cubic `a x^3 + b x^2 y + c x y^2 + d y^3`.
pub fn cubic_discriminant(p: &MPoly) -> Scalar {
    let (a, b, c, d) = (coeff2(p, 3, 0), coeff2(p, 2, 1), coeff2(p, 1, 2), coeff2(p, 0, 3));
    let t = |k: i64, xs: &[&Scalar]| xs.iter().fold(Scalar::from(k), |acc, x| &acc * *x);
    &(&(&(&t(1, &[&b, &b, &c, &c]) - &t(4, &[&a, &c, &c, &c])) - &t(4, &[&b, &b, &b, &d])) - &t(27, &[&a, &a, &d, &d]))
        + &t(18, &[&a, &b, &c, &d])
}

/// Classifies a germ at the origin of the plane.
pub fn classify_plane_germ(f: &MPoly) -> Result<SingClass, GermError> {
    if f.is_zero() {
        return Err(GermError::ZeroPolynomial);
    }
    if f.vars().len() != 2 {
        return Err(GermError::Arity { expected: 2, found: f.vars().len() });
    }
    let c0 = f.homogeneous_part(0);
    if !c0.is_zero() {
        return Err(GermError::NotOnSurface(c0.to_string()));
    }
    if !f.homogeneous_part(1).is_zero() {
        return Ok(SingClass::new(SingKind::Smooth));
    }
    let q = f.homogeneous_part(2);
    if q.is_zero() {
        let cub = f.homogeneous_part(3);
        let d = cubic_discriminant(&cub);
        let kind = if !cub.is_zero() && !d.is_zero() { SingKind::D4 } else { SingKind::Unclassified };
        return Ok(SingClass { cubic_discriminant: Some(d), ..SingClass::new(kind) });
    }
    let (a, b, c) = (coeff2(&q, 2, 0), coeff2(&q, 1, 1), coeff2(&q, 0, 2));
    let disc = &(&b * &b) - &(&(&a * &c) * &Scalar::from(4));
    if !disc.is_zero() {
        return Ok(SingClass { quad_discriminant: Some(disc), ..SingClass::new(SingKind::A1) });
    }
    // q = k * L^2 with L normalized so the eliminated coordinate has coefficient 1;
    // the kept coordinate is the first one whenever L involves the second
    let vars = f.vars().clone();
    let half = Scalar::ratio(1, 2);
    let (keep, elim, l_keep, scale) = if !c.is_zero() {
        // L = y + (b / 2c) x
        (0usize, 1usize, (&b * &half).checked_div(&c)?, c.clone())
    } else {
        // L = x + (b / 2a) y
        (1usize, 0usize, (&b * &half).checked_div(&a)?, a.clone())
    };
    let nvars = var_list(&["v", &vars[keep]]);
    let v = MPoly::var(nvars.clone(), "v")?;
    let xk = MPoly::var(nvars.clone(), &vars[keep])?;
    // elim = v - l_keep * keep
    let elim_expr = &v - &xk.scale(&l_keep);
    let binds = [(vars[elim].as_str(), elim_expr), (vars[keep].as_str(), xk)];
    let g = f.substitute(&binds)?.checked_scale(&scale.inv()?)?;
    let gamma = g.coeff(&[0, 3]);
    let mut out = SingClass { quad_discriminant: Some(disc), normal_form: Some(g.clone()), ..SingClass::new(SingKind::Unclassified) };
    if !gamma.is_zero() {
        out.kind = SingKind::A2;
        out.gamma = Some(gamma);
        return Ok(out);
    }
    out.gamma = Some(gamma);
    // weights v:2, x:1; degree-4 part v^2 + p v x^2 + r x^4 (terms of lower weight
    // would be x^2, x^3 or v x, all absent here)
    let p = g.coeff(&[1, 2]);
    let r = g.coeff(&[0, 4]);
    let beta = &r - &(&(&p * &p) * &Scalar::ratio(1, 4));
    out.beta = Some(beta.clone());
    if !beta.is_zero() {
        out.kind = SingKind::A3;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// checks

fn one() -> Scalar {
    Scalar::one()
}

fn center111() -> Vec<Scalar> {
    vec![one(), one(), one()]
}

fn locus_text(l: &[UPolyU]) -> String {
    if l.is_empty() {
        "never".into()
    } else {
        l.iter().map(|p| format!("{p} = 0")).collect::<Vec<_>>().join(" or ")
    }
}

fn is_root(l: &[UPolyU], r: &Rat) -> bool {
    use num_traits::Zero;
    l.iter().any(|p| p.eval(r).is_zero())
}

/// Chart `x = 1` of a named surface at `(1:1:1:1:1)`.
fn germ_x1(cat: &Catalog, name: &str, mult: &Scalar) -> Result<(ChartEq, Germ), GermError> {
    let ch = chart_eq(cat, cat.poly(name)?, "x", "w", mult)?;
    let g = expand_at(&ch.local, &center111())?;
    Ok((ch, g))
}

/// Local equations of the surfaces through Gamma in the chart `x = 1` agree with
/// the displayed ones.
pub fn verify_charts(cat: &Catalog) -> CheckResult {
    let id = "local-charts";
    let claim = "in the chart x = 1 with w = yt/u + (u-1)z^2/u: u^2*N15, u^2*N13, N3, N5, u/(1-u)*S, u*M10, u^3*M20 give the displayed local equations, with the displayed linear parts at (1,1,1)";
    let run = || -> Result<(bool, String), GermError> {
        let entries: [(&str, &str, &str, Option<&str>); 7] = [
            ("N15", "u^2", "N15_chart", Some("N15_linear")),
            ("N13", "u^2", "N13_chart", Some("N13_linear")),
            ("N3", "1", "N3_chart", Some("N3_linear")),
            ("N5", "1", "N5_chart", Some("N5_linear")),
            ("S", "u/(1-u)", "S_chart", Some("S_linear")),
            ("M10", "u", "M10_chart", None),
            ("M20", "u^3", "M20_chart", None),
        ];
        let mut ok = true;
        let mut lines = Vec::new();
        for (name, m, display, lin) in entries {
            let (ch, g) = germ_x1(cat, name, &cat.scalar(m)?)?;
            let good = &ch.local.embed(cat.p(display).vars().clone())? == cat.p(display);
            ok &= good;
            let mut line = format!("{m}*{name}: {}", if good { "matches" } else { "differs" });
            if let Some(l) = lin {
                let j = g.jet(1).embed(cat.p(l).vars().clone())?;
                let lg = proportional(&j, cat.p(l)).is_some();
                ok &= lg;
                line.push_str(&format!(", linear part {j}"));
            }
            if !good {
                line.push_str(&format!(" (computed {})", ch.local));
            }
            lines.push(line);
        }
        // restricted to N3 (z = y^3) the equation of N15 factors
        let n15 = cat.p("N15_chart");
        let yt = cat.varset("YT").unwrap().clone();
        let y = MPoly::var(yt.clone(), "y")?;
        let t = MPoly::var(yt.clone(), "t")?;
        let res = n15.substitute(&[("y", y.clone()), ("z", y.pow(3)), ("t", t)])?;
        let good = &res == cat.p("N3_N15_residual");
        ok &= good;
        lines
            .push(format!("N15 chart on z = y^3: {}", if good { "(t - y^5)*(u^2*t^2 + (u^2-1)*t*y^5 + (u-1)^2*y^10)" } else { "differs" }));
        Ok((ok, lines.join("; ")))
    };
    match run() {
        Ok((ok, w)) => CheckResult::new(id, claim, ok, w),
        Err(e) => CheckResult::new(id, claim, false, e.to_string()),
    }
}

/// Tangency of pairs of surfaces at `(1:1:1:1:1)`.
pub struct TangencyCase {
    pub id: &'static str,
    pub first: (&'static str, &'static str),
    pub second: (&'static str, &'static str),
    /// Expected locus, low degree first; empty means never.
    pub expected: &'static [&'static [i64]],
    pub claim: &'static str,
}

pub const TANGENCY_CASES: [TangencyCase; 4] = [
    TangencyCase {
        id: "tangency-n3-n15",
        first: ("N3", "1"),
        second: ("N15", "u^2"),
        expected: &[&[-2, 3]],
        claim: "N3 and N15 are tangent along Gamma iff u = 2/3",
    },
    TangencyCase {
        id: "tangency-n5-n13",
        first: ("N5", "1"),
        second: ("N13", "u^2"),
        expected: &[&[-2, 1]],
        claim: "N5 and N13 are tangent at (1:1:1:1:1) iff u = 2",
    },
    TangencyCase {
        id: "tangency-n8-n10",
        first: ("N8", "u"),
        second: ("N10", "u"),
        expected: &[],
        claim: "N8 is never tangent to N10 along Gamma",
    },
    TangencyCase {
        id: "tangency-s-n3",
        first: ("S", "u/(1-u)"),
        second: ("N3", "1"),
        expected: &[],
        claim: "S is never tangent to N3 at (1:1:1:1:1)",
    },
];

pub fn verify_tangency(cat: &Catalog, case: &TangencyCase) -> CheckResult {
    let run = || -> Result<CheckResult, GermError> {
        let generic = Catalog::standard();
        let (_, a) = germ_x1(generic, case.first.0, &generic.scalar(case.first.1)?)?;
        let (_, b) = germ_x1(generic, case.second.0, &generic.scalar(case.second.1)?)?;
        let minors = linear_minors(&a, &b)?;
        let prop = linear_parts_proportional(&a, &b)?;
        let expected: Vec<UPolyU> = case.expected.iter().map(|c| UPolyU::from_ints(c)).collect();
        let computed = match &prop {
            Proportionality::Locus(l) => l.clone(),
            _ => Vec::new(),
        };
        let minors_txt = minors.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ");
        let lin = format!("linear parts {} and {}", a.jet(1), b.jet(1));
        match &cat.u {
            None => {
                let ok = computed == expected && prop != Proportionality::Always;
                Ok(CheckResult::new(case.id, case.claim, ok, format!("{lin}; minors {minors_txt}; proportional: {prop}")))
            }
            Some(r) => {
                let (_, a) = germ_x1(cat, case.first.0, &cat.scalar(case.first.1)?)?;
                let (_, b) = germ_x1(cat, case.second.0, &cat.scalar(case.second.1)?)?;
                let ms = linear_minors(&a, &b)?;
                let tangent = ms.iter().all(|m| m.is_zero());
                let expect = is_root(&expected, r);
                Ok(CheckResult::new(
                    case.id,
                    case.claim,
                    tangent == expect,
                    format!("at u = {}: linear parts {} and {}; proportional: {tangent}", fmt_rat(r), a.jet(1), b.jet(1)),
                ))
            }
        }
    };
    run().unwrap_or_else(|e| CheckResult::new(case.id, case.claim, false, e.to_string()))
}

/// Every quintic in the slots of the quintic map is singular along Gamma with
/// multiplicity exactly 2; `f` has multiplicity 1.
pub fn verify_singular_along_gamma(cat: &Catalog) -> CheckResult {
    let id = "quintics-singular-along-gamma";
    let claim = "the surfaces M_i and M15' are singular along Gamma with multiplicity exactly 2";
    let run = || -> Result<CheckResult, GermError> {
        let gamma = cat.curve("Gamma")?;
        let base = cat.pt("Gamma_pt");
        let mut ok = true;
        let mut lines = Vec::new();
        for s in ZETA_SLOTS {
            let dep = gradient_dependent_on_curve(cat, cat.p(s), gamma)?;
            let m = mult_along_curve(cat, cat.p(s), gamma, base)?;
            ok &= dep && m.exact() == Some(2);
            lines.push(format!(
                "{}: {}",
                p_label(s).replace('p', "M"),
                m.exact().map(|k| k.to_string()).unwrap_or_else(|| format!("{}..", m.lower))
            ));
        }
        let mf = mult_along_curve(cat, cat.p("f"), gamma, base)?;
        ok &= mf.exact() == Some(1);
        lines.push(format!("S: {}", mf.exact().map(|k| k.to_string()).unwrap_or_default()));
        Ok(CheckResult::new(id, claim, ok, format!("multiplicity along Gamma: {}", lines.join(", "))))
    };
    run().unwrap_or_else(|e| CheckResult::new(id, claim, false, e.to_string()))
}

fn to_bar(cat: &Catalog, p: &MPoly, set: &str) -> Result<MPoly, GermError> {
    Ok(p.embed(cat.varset(set).unwrap().clone())?)
}

/// Quadratic part of the pencil `g15' + nu g15` at `(1:1:1:1:1)`, parameterized by
/// `nu = (u-1) mu + u + 4`: rank 1 exactly at one value of `mu`.
pub fn verify_pencil_quadratic(cat: &Catalog) -> CheckResult {
    let id = "pencil-quadratic-rank-one";
    let claim = "the quadratic part of M15^mu at (1:1:1:1:1) has rank 1 iff mu = -(3u^2+16u-16)/(4(u-1)^2), where it is a multiple of ((2+3u)yb + 4(u-1)zb + (2-3u)tb)^2";
    let run = || -> Result<CheckResult, GermError> {
        let mult = cat.scalar("u^2/(u-1)")?;
        let ch = chart_eq(cat, cat.p("M15mu"), "x", "w", &mult)?;
        let chart_ok = ch.local.embed(cat.p("M15mu_chart").vars().clone())? == *cat.p("M15mu_chart");
        let g = expand_at(&ch.local, &center111())?;
        let lin_zero = g.jet(1).is_zero();
        let quad = g.jet(2);
        let quad_ok = quad == *cat.p("M15mu_quadratic");
        // entries of the Gram matrix as polynomials in mu
        let bar = cat.varset("BARMU").unwrap().clone();
        let mu_poly = |e: &[u32]| -> Result<Vec<Scalar>, AlgError> {
            let mut p = MPoly::zero(bar.clone());
            for (k, c) in quad.terms() {
                if k[..3] == e[..3] {
                    p = &p + &MPoly::monomial(bar.clone(), vec![0, 0, 0, k[3]], c.clone());
                }
            }
            p.as_univariate("mu")
        };
        let mut m: Vec<Vec<Vec<Scalar>>> = vec![vec![Vec::new(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut e = vec![0u32; 4];
                e[i] += 1;
                e[j] += 1;
                let c = mu_poly(&e)?;
                m[i][j] = if i == j { c } else { c.iter().map(|x| x * &Scalar::ratio(1, 2)).collect() };
            }
        }
        let mul = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
            if a.is_empty() || b.is_empty() {
                return Vec::new();
            }
            let mut r = vec![Scalar::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    r[i + j] = &r[i + j] + &(x * y);
                }
            }
            dense::trim(r)
        };
        let sub = |a: Vec<Scalar>, b: Vec<Scalar>| -> Vec<Scalar> {
            let n = a.len().max(b.len());
            dense::trim(
                (0..n)
                    .map(|i| {
                        let x = a.get(i).cloned().unwrap_or_else(Scalar::zero);
                        let y = b.get(i).cloned().unwrap_or_else(Scalar::zero);
                        &x - &y
                    })
                    .collect(),
            )
        };
        let mut g_all: Vec<Scalar> = Vec::new();
        for (i1, i2) in [(0, 1), (0, 2), (1, 2)] {
            for (j1, j2) in [(0, 1), (0, 2), (1, 2)] {
                let minor = sub(mul(&m[i1][j1], &m[i2][j2]), mul(&m[i1][j2], &m[i2][j1]));
                g_all = dense::gcd(&g_all, &minor)?;
            }
        }
        let expected_mu = cat.scalar("-(3*u^2+16*u-16)/(4*(u-1)^2)")?;
        let gcd_ok = dense::degree(&g_all) == Some(1) && (-&g_all[0]) == expected_mu;
        // at that value
        let at = quad.substitute(&[("mu", MPoly::constant(bar.clone(), expected_mu.clone()))])?;
        let at = to_bar(cat, &at, "BAR")?;
        let qa = quad_form_analyze(&at)?;
        let root = cat.p("M15mu_square_root");
        let sq_ok = qa.rank == 1 && proportional(&at, &root.pow(2)).is_some();
        let factor = proportional(&at, &root.pow(2));
        let nu = cat.scalar("u*(u-4)/(4*(u-1))")?;
        let nu_from_mu = &(&(&cat.scalar("u-1")? * &expected_mu) + &cat.u_scalar()) + &Scalar::from(4);
        let nu_ok = nu == nu_from_mu;
        let ok = chart_ok && lin_zero && quad_ok && gcd_ok && sq_ok && nu_ok;
        let gtxt = MPoly::from_univariate(var_list(&["mu"]), "mu", &g_all)?;
        let w = format!(
            "u^2/(u-1)*(g15' + ((u-1)*mu + u + 4)*g15) gives the displayed chart: {chart_ok}; linear part zero: {lin_zero}; quadratic part matches: {quad_ok}; gcd of 2x2 minors in mu: {gtxt}; at that mu the form is {} * ({root})^2; rank {}; in terms of g15' + nu*g15 the value is nu = {nu}",
            factor.map(|c| c.to_string()).unwrap_or_else(|| "?".into()),
            qa.rank
        );
        let mut r = CheckResult::new(id, claim, ok, w);
        if cat.u.is_none() {
            r = r.with_note("the displayed chart equation corresponds to g15' + ((u-1)mu + u + 4) g15 multiplied by u^2/(u-1), not to g15' + mu g15 multiplied by u^2");
        }
        Ok(r)
    };
    run().unwrap_or_else(|e| CheckResult::new(id, claim, false, e.to_string()))
}

impl Catalog {
    /// The parameter as a scalar: `u` generically, its value when specialized.
    pub fn u_scalar(&self) -> Scalar {
        match &self.u {
            Some(r) => Scalar::Rat(r.clone()),
            None => Scalar::u(),
        }
    }
}

/// The pencil member at the rank-one value has multiplicity exactly 2 along Gamma.
pub fn verify_pencil_multiplicity(cat: &Catalog) -> CheckResult {
    let id = "pencil-double-along-gamma";
    let claim = "M15^mu has a double point at a general point of Gamma, also at the rank-one value of mu";
    let run = || -> Result<CheckResult, GermError> {
        let mu = cat.scalar("-(3*u^2+16*u-16)/(4*(u-1)^2)")?;
        let p4 = cat.varset("P4").unwrap().clone();
        let g = cat.p("M15mu").substitute(&[("mu", MPoly::constant(p4.clone(), mu))])?;
        let g = g.embed(p4)?;
        let m = mult_along_curve(cat, &g, cat.curve("Gamma")?, cat.pt("Gamma_pt"))?;
        Ok(CheckResult::new(
            id,
            claim,
            m.exact() == Some(2),
            format!(
                "multiplicity {:?}..{:?}, Hessian value {} in direction ({})",
                m.lower,
                m.upper,
                m.value,
                m.direction.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
            ),
        ))
    };
    run().unwrap_or_else(|e| CheckResult::new(id, claim, false, e.to_string()))
}

/// Resultant of two quadratic forms in `(yb, zb, tb)` restricted to `tb = 0`.
fn binary_resultant(q1: &MPoly, q2: &MPoly) -> Result<Scalar, GermError> {
    let co = |q: &MPoly| [q.coeff(&[2, 0, 0]), q.coeff(&[1, 1, 0]), q.coeff(&[0, 2, 0])];
    let (a, b) = (co(q1), co(q2));
    let z = Scalar::zero;
    let m = vec![
        vec![a[0].clone(), a[1].clone(), a[2].clone(), z()],
        vec![z(), a[0].clone(), a[1].clone(), a[2].clone()],
        vec![b[0].clone(), b[1].clone(), b[2].clone(), z()],
        vec![z(), b[0].clone(), b[1].clone(), b[2].clone()],
    ];
    Ok(linalg::det(&m)?)
}

/// Quadratic parts of M10 and M20 at `(1:1:1:1:1)`; they share a line exactly at `u = -2`.
pub fn verify_shared_line(cat: &Catalog) -> CheckResult {
    let id = "m10-m20-shared-line";
    let claim = "the quadratic parts of u*M10 and u^2*M20 at (1:1:1:1:1) are degenerate and share a linear factor iff u = -2, namely yb + 3zb - 2tb";
    let run = || -> Result<CheckResult, GermError> {
        let generic = Catalog::standard();
        let (_, g10) = germ_x1(generic, "M10", &generic.scalar("u")?)?;
        let (_, g20) = germ_x1(generic, "M20", &generic.scalar("u^2")?)?;
        let (q10, q20) = (g10.jet(2), g20.jet(2));
        let mut ok = q10 == *generic.p("M10_quadratic") && q20 == *generic.p("M20_quadratic");
        let a10 = quad_form_analyze(&q10)?;
        let a20 = quad_form_analyze(&q20)?;
        ok &= a10.rank == 2 && a20.rank == 2;
        // both line pairs pass through one vertex; on the line tb = 0 through neither
        // it they become binary forms, sharing a root iff they share a line
        let v10 = linalg::nullspace(&a10.matrix)?.remove(0);
        let v20 = linalg::nullspace(&a20.matrix)?.remove(0);
        let common_vertex = q10.eval(&v20)?.is_zero() && q20.eval(&v10)?.is_zero() && !v10[2].is_zero();
        ok &= common_vertex;
        let res = binary_resultant(&q10, &q20)?;
        let num = |s: &Scalar| s.as_func().map(|f| f.num().clone()).unwrap_or_else(UPolyU::zero);
        let locus = admissible_locus(&num(&res));
        ok &= locus == vec![UPolyU::from_ints(&[2, 1])];
        let mut w = format!(
            "ranks {} and {}; common vertex ({}); resultant on tb = 0: {res}; common line iff {}",
            a10.rank,
            a20.rank,
            v10.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
            locus_text(&locus)
        );
        // at u = -2
        let m2 = Rat::from_integer((-2).into());
        let s = generic.at(&m2).map_err(GermError::Catalog)?;
        let (_, h10) = germ_x1(&s, "M10", &s.scalar("u")?)?;
        let (_, h20) = germ_x1(&s, "M20", &s.scalar("u^2")?)?;
        let f10 = quad_form_analyze(&h10.jet(2))?.factors;
        let f20 = quad_form_analyze(&h20.jet(2))?.factors;
        let line = s.p("shared_line");
        let has = |f: &Option<(Scalar, MPoly, MPoly)>| {
            f.as_ref().map(|(_, a, b)| proportional(a, line).is_some() || proportional(b, line).is_some()).unwrap_or(false)
        };
        let disp = proportional(&h10.jet(2), s.p("M10_quadratic_u_minus_2")).is_some()
            && proportional(&h20.jet(2), s.p("M20_quadratic_u_minus_2")).is_some();
        let sq = s.p("M15mu_square_root");
        let sq_ok = proportional(sq, line).is_some();
        ok &= has(&f10) && has(&f20) && disp && sq_ok;
        w.push_str(&format!(
            "; at u = -2: u*M10 -> {}, u^2*M20 -> {}, both contain {line}: {}; the pencil's square root is {sq}",
            h10.jet(2),
            h20.jet(2),
            has(&f10) && has(&f20)
        ));
        if let Some(r) = &cat.u {
            // specialized: share a line iff u = -2
            let (_, k10) = germ_x1(cat, "M10", &cat.scalar("u")?)?;
            let (_, k20) = germ_x1(cat, "M20", &cat.scalar("u^2")?)?;
            let (fa, fb) = (quad_form_analyze(&k10.jet(2))?.factors, quad_form_analyze(&k20.jet(2))?.factors);
            let shared = match (&fa, &fb) {
                (Some((_, a1, a2)), Some((_, b1, b2))) => [a1, a2].iter().any(|x| [b1, b2].iter().any(|y| proportional(x, y).is_some())),
                _ => {
                    let v = linalg::nullspace(&quad_form_analyze(&k10.jet(2))?.matrix)?;
                    let v2 = linalg::nullspace(&quad_form_analyze(&k20.jet(2))?.matrix)?;
                    !v.is_empty() && !v2.is_empty() && k10.jet(2).eval(&v2[0])?.is_zero() && k20.jet(2).eval(&v[0])?.is_zero()
                }
            };
            let expect = is_root(&locus, r);
            return Ok(CheckResult::new(id, claim, ok && shared == expect, format!("at u = {}: common line {shared}; {w}", fmt_rat(r))));
        }
        Ok(CheckResult::new(id, claim, ok, w))
    };
    run().unwrap_or_else(|e| CheckResult::new(id, claim, false, e.to_string()))
}

/// The germ of M15' transversal to Delta.
pub fn verify_delta_slice(cat: &Catalog) -> CheckResult {
    let id = "germ-m15p-along-delta";
    let claim = "in the chart w = 1 with x = z^2 + (ty - z^2)/u, u^2/(u-1)*M15' is the displayed equation; its slice z = 1 is A1 for u != 2 and D4 (ordinary triple point) for u = 2";
    let run = || -> Result<CheckResult, GermError> {
        let generic = Catalog::standard();
        let ch = chart_eq(generic, generic.p("M15p"), "w", "x", &generic.scalar("u^2/(u-1)")?)?;
        let mut ok = ch.local == *generic.p("M15p_chart_w");
        let ty = generic.varset("TY").unwrap().clone();
        let slice = ch.local.substitute(&[
            ("z", MPoly::constant(ty.clone(), one())),
            ("y", MPoly::var(ty.clone(), "y")?),
            ("t", MPoly::var(ty.clone(), "t")?),
        ])?;
        ok &= slice == *generic.p("M15p_slice");
        let on = ["quadric", "M15p"].iter().all(|n| generic.p(n).eval(generic.pt("Delta")).map(|v| v.is_zero()).unwrap_or(false));
        ok &= on;
        let cls = classify_plane_germ(&slice)?;
        let disc = cls.quad_discriminant.clone().unwrap_or_else(Scalar::zero);
        let dpoly = disc.as_func().map(|f| f.num().clone()).unwrap_or_else(UPolyU::zero);
        let locus = admissible_locus(&dpoly);
        ok &= cls.kind == SingKind::A1 && locus == vec![UPolyU::from_ints(&[-2, 1])];
        let s2 = generic.at(&Rat::from_integer(2.into())).map_err(GermError::Catalog)?;
        let slice2 = slice.subst_u(&Scalar::from(2))?;
        let c2 = classify_plane_germ(&slice2)?;
        ok &= slice2 == *s2.p("M15p_slice_u2") && c2.kind == SingKind::D4;
        let roots = crate::exactalg::factor_square_free_in_u(&dpoly);
        let mut w = format!(
            "chart and slice match; Delta on M15': {on}; generic type {} with discriminant {disc} = {roots}, degenerate for {}; at u = 2: {} with cubic discriminant {}",
            cls.kind,
            locus_text(&locus),
            c2.kind,
            c2.cubic_discriminant.clone().unwrap_or_else(Scalar::zero)
        );
        if let Some(r) = &cat.u {
            let s = slice.subst_u(&Scalar::Rat(r.clone()))?;
            let c = classify_plane_germ(&s)?;
            let expect = if is_root(&locus, r) { SingKind::D4 } else { SingKind::A1 };
            ok &= c.kind == expect;
            w = format!("at u = {}: {}; {w}", fmt_rat(r), c.kind);
        }
        Ok(CheckResult::new(id, claim, ok, w))
    };
    run().unwrap_or_else(|e| CheckResult::new(id, claim, false, e.to_string()))
}

/// The germ of M15'' transversal to Upsilon.
pub fn verify_upsilon_slice(cat: &Catalog) -> CheckResult {
    let id = "germ-m15pp-along-upsilon";
    let claim = "in the chart t = 1 with y = z^2 + u(wx - z^2), M15''/(u-1) is the displayed equation; its slice z = 1 is A1 for u != 3/4 (discriminant u^2(4u-3)) and A3 at u = 3/4 with x^4 coefficient -13824 after w = v - 8x";
    let run = || -> Result<CheckResult, GermError> {
        let generic = Catalog::standard();
        let ch = chart_eq(generic, generic.p("M15pp"), "t", "y", &generic.scalar("1/(u-1)")?)?;
        let chart_ok = ch.local == *generic.p("M15pp_chart_t");
        let xw = generic.varset("XW").unwrap().clone();
        let slice = ch.local.substitute(&[
            ("z", MPoly::constant(xw.clone(), one())),
            ("x", MPoly::var(xw.clone(), "x")?),
            ("w", MPoly::var(xw.clone(), "w")?),
        ])?;
        let slice_ok = slice == *generic.p("M15pp_slice");
        let on = ["quadric", "M15pp"].iter().all(|n| generic.p(n).eval(generic.pt("Upsilon")).map(|v| v.is_zero()).unwrap_or(false));
        let off_delta = !generic.p("M15pp").eval(generic.pt("Delta"))?.is_zero();
        let cls = classify_plane_germ(&slice)?;
        let disc = cls.quad_discriminant.clone().unwrap_or_else(Scalar::zero);
        let dpoly = disc.as_func().map(|f| f.num().clone()).unwrap_or_else(UPolyU::zero);
        let disc_ok = dpoly == UPolyU::from_ints(&[0, 0, -3, 4]);
        let locus = admissible_locus(&dpoly);
        // u = 3/4
        let r34 = crate::exactalg::rat::rat(3, 4);
        let s34 = slice.subst_u(&Scalar::Rat(r34.clone()))?;
        let scaled = s34.checked_scale(&Scalar::from(64))?;
        let disp_ok = scaled == *generic.p("M15pp_slice_u34");
        let c34 = classify_plane_germ(&scaled)?;
        let v_ok = c34.normal_form.as_ref().map(|g| g == generic.p("M15pp_slice_u34_v")).unwrap_or(false);
        let beta = c34.beta.clone().unwrap_or_else(Scalar::zero);
        let ok = chart_ok
            && slice_ok
            && on
            && off_delta
            && cls.kind == SingKind::A1
            && disc_ok
            && locus == vec![UPolyU::from_ints(&[-3, 4])]
            && disp_ok
            && v_ok
            && c34.kind == SingKind::A3
            && beta == Scalar::from(-13824);
        let mut w = format!(
            "chart matches: {chart_ok}; slice matches: {slice_ok}; Upsilon on M15'': {on}; Delta off M15'': {off_delta}; generic type {} with discriminant {disc}; at u = 3/4: 64*slice is the displayed germ: {disp_ok}, after w = v - 8x it is the displayed v-germ: {v_ok}; type {} with x^3 coefficient {} and x^4 coefficient {beta}",
            cls.kind,
            c34.kind,
            c34.gamma.clone().unwrap_or_else(Scalar::zero)
        );
        let mut ok = ok;
        if let Some(r) = &cat.u {
            let s = slice.subst_u(&Scalar::Rat(r.clone()))?;
            let c = classify_plane_germ(&s)?;
            let expect = if is_root(&locus, r) { SingKind::A3 } else { SingKind::A1 };
            ok &= c.kind == expect;
            w = format!("at u = {}: {}; {w}", fmt_rat(r), c.kind);
        }
        let mut res = CheckResult::new(id, claim, ok, w);
        if cat.u.is_none() && !chart_ok {
            res = res.with_note(format!("computed chart equation {}", ch.local));
        }
        Ok(res)
    };
    run().unwrap_or_else(|e| CheckResult::new(id, claim, false, e.to_string()))
}

/// Points of N3 and N15 near Gamma: the residual factor, its discriminant and the
/// orbit generators Psi, Psi'.
pub fn verify_psi_curves(cat: &Catalog) -> CheckResult {
    let id = "n3-n15-residual-curves";
    let claim = "N3 . N15 near (1:1:1:1:1) is Gamma plus the curves through Psi and Psi', whose t-coordinates solve u^2 T^2 + (u^2-1) T + (u-1)^2 = 0 with discriminant (u-1)^2 (3u+1)(1-u); Psi = Psi' = (1:1:1:4:-8) at u = -1/3 and Psi' lies on S at u = 2/3";
    let run = || -> Result<CheckResult, GermError> {
        let generic = Catalog::standard();
        let mut ok = true;
        let mut lines = Vec::new();
        for n in ["Psi", "Psi_prime"] {
            let p = generic.pt(n);
            let on = ["quadric", "N3", "N15"].iter().all(|s| generic.p(s).eval(p).map(|v| v.is_zero()).unwrap_or(false));
            ok &= on;
            lines.push(format!("{n} on Q, N3, N15: {on}"));
        }
        let disc = generic.scalar("(u^2-1)^2 - 4*u^2*(u-1)^2")?;
        let target = generic.scalar("(u-1)^2*(3*u+1)*(1-u)")?;
        ok &= disc == target;
        lines.push(format!("discriminant {disc}"));
        use crate::catalog::{psi_generator, Branch, UMode};
        let third = UMode::Specialized(crate::exactalg::rat::rat(-1, 3));
        let both = [Branch::Plus, Branch::Minus].map(|b| psi_generator(b, &third));
        let target = generic.weighted("Psi_at_minus_third");
        let coincide = both.iter().all(|p| p.as_ref().map(|p| p.same_point(&target)).unwrap_or(false));
        ok &= coincide;
        lines.push(format!("u = -1/3: both equal (1:1:1:4:-8): {coincide}"));
        let two3 = crate::exactalg::rat::rat(2, 3);
        let pm = psi_generator(Branch::Minus, &UMode::Specialized(two3.clone())).map_err(GermError::Catalog)?;
        let f = generic.p("f").subst_u(&Scalar::Rat(two3))?;
        let on_s = f.eval(&pm.coords)?.is_zero();
        ok &= on_s;
        lines.push(format!("u = 2/3: Psi' = {pm}, on S: {on_s}"));
        if let Some(r) = &cat.u {
            let mode = UMode::Specialized(r.clone());
            let mut here = Vec::new();
            for (n, b) in [("Psi", Branch::Plus), ("Psi'", Branch::Minus)] {
                match psi_generator(b, &mode) {
                    Ok(p) => {
                        let on = ["quadric", "N3", "N15"].iter().all(|s| cat.p(s).eval(&p.coords).map(|v| v.is_zero()).unwrap_or(false));
                        ok &= on;
                        here.push(format!("{n} = {p} on Q, N3, N15: {on}"));
                    }
                    Err(e) => here.push(format!("{n}: {e}")),
                }
            }
            lines.insert(0, format!("at u = {}: {}", fmt_rat(r), here.join("; ")));
        }
        Ok(CheckResult::new(id, claim, ok, lines.join("; ")))
    };
    run().unwrap_or_else(|e| CheckResult::new(id, claim, false, e.to_string()))
}

/// Proportionality of local linear parts of N5 and N13 at a general point of Delta.
pub fn verify_n5_n13_along_delta(cat: &Catalog) -> CheckResult {
    let id = "tangency-n5-n13-along-delta";
    let claim = "N5 and N13 are not tangent at a general point of Delta; the point (1:0:2:0:2) is on Delta for u = 2";
    let run = || -> Result<CheckResult, GermError> {
        // the point of Delta with x = 1
        let d = cat.pt("Delta");
        let x = d[0].clone();
        let p: Vec<Scalar> = d.iter().map(|c| c.checked_div(&x)).collect::<Result<_, _>>()?;
        let on = ["quadric", "N5", "N13"].iter().all(|s| cat.p(s).eval(&p).map(|v| v.is_zero()).unwrap_or(false));
        let a = chart_eq(cat, cat.p("N5"), "x", "w", &one())?;
        let b = chart_eq(cat, cat.p("N13"), "x", "w", &one())?;
        let ga = expand_at(&a.local, &p[1..4])?;
        let gb = expand_at(&b.local, &p[1..4])?;
        let minors = linear_minors(&ga, &gb)?;
        let nonzero = minors.iter().any(|m| !m.is_zero());
        let mut g = UPolyU::zero();
        for m in &minors {
            if let Some(f) = m.as_func() {
                g = g.gcd(f.num());
            }
        }
        let locus = if cat.u.is_some() { Vec::new() } else { admissible_locus(&g) };
        // the literal point at u = 2
        let two = Catalog::standard().at(&Rat::from_integer(2.into())).map_err(GermError::Catalog)?;
        let lit = cat.pt("Delta_check");
        let lit_ok = ["quadric", "N5", "N13"].iter().all(|s| two.p(s).eval(lit).map(|v| v.is_zero()).unwrap_or(false));
        let ok = on && nonzero && locus.is_empty() && lit_ok;
        Ok(CheckResult::new(
            id,
            claim,
            ok,
            format!(
                "at ({}): linear parts {} and {}; minors {}; (1:0:2:0:2) on Q, N5, N13 at u = 2: {lit_ok}",
                p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(":"),
                ga.jet(1),
                gb.jet(1),
                minors.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
            ),
        ))
    };
    run().unwrap_or_else(|e| CheckResult::new(id, claim, false, e.to_string()))
}
