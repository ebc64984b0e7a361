//! Intersection numbers on the blowup of a threefold along a smooth rational
//! curve, divisors on the exceptional Hirzebruch surface, and the affine
//! inequalities drawn from them.
//!
//! Coefficients are polynomials in the formal symbols `n`, `m`, `eps`, so an
//! identity such as `(H-E)^2 (nH-mE) = 18n - 6m` is checked as a polynomial
//! identity rather than at sample values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactalg::mpoly::var_list;
use crate::exactalg::parse::parse_poly_in;
use crate::exactalg::rat::{fmt_rat, rat};
use crate::exactalg::{MPoly, Rat, Scalar};
use crate::report::CheckResult;

/// Formal symbols: Hirzebruch index `n`, multiplicity `m`, and `eps`.
pub fn formal_vars() -> &'static Arc<[String]> {
    static V: OnceLock<Arc<[String]>> = OnceLock::new();
    V.get_or_init(|| var_list(&["n", "m", "eps"]))
}

/// Parses a polynomial in the formal symbols.
pub fn formal(text: &str) -> MPoly {
    parse_poly_in(text, formal_vars()).unwrap_or_else(|e| panic!("formal expression `{text}`: {e}"))
}

fn fconst(r: Rat) -> MPoly {
    MPoly::constant(formal_vars().clone(), Scalar::Rat(r))
}

fn fint(k: i64) -> MPoly {
    fconst(Rat::from_integer(k.into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("Hirzebruch indices differ: {0} and {1}")]
    MismatchedIndex(String, String),
}

/// Blowup of a threefold `X` with `-K_X = k H` along a smooth rational curve of
/// degree `d` with respect to `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChowContext {
    pub h3: i64,
    pub k: i64,
    pub d: i64,
}

impl ChowContext {
    pub const fn new(h3: i64, k: i64, d: i64) -> Self {
        ChowContext { h3, k, d }
    }

    /// Quadric threefold.
    pub const fn quadric(d: i64) -> Self {
        ChowContext::new(2, 3, d)
    }

    /// Fano threefold of degree 22 and index 1.
    pub const fn v22(d: i64) -> Self {
        ChowContext::new(22, 1, d)
    }

    /// `-K_X . C`.
    pub fn anticanonical_degree(&self) -> i64 {
        self.k * self.d
    }

    /// `H^(3-j) E^j` on the blowup.
    pub fn rule(&self, j: usize) -> i64 {
        match j {
            0 => self.h3,
            1 => 0,
            2 => -self.d,
            // -deg N_C = -(-K.C - 2)
            3 => 2 - self.anticanonical_degree(),
            _ => unreachable!("three factors"),
        }
    }
}

impl fmt::Display for ChowContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H^3 = {}, -K = {}H, deg C = {}", self.h3, self.k, self.d)
    }
}

/// `h * H + e * E` with formal coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowExpr {
    pub h: MPoly,
    pub e: MPoly,
}

impl ChowExpr {
    pub fn new(h: MPoly, e: MPoly) -> Self {
        ChowExpr { h, e }
    }

    /// Parses both coefficients, e.g. `ChowExpr::parse("n", "-m")` for `nH - mE`.
    pub fn parse(h: &str, e: &str) -> Self {
        ChowExpr::new(formal(h), formal(e))
    }

    pub fn ints(h: i64, e: i64) -> Self {
        ChowExpr::new(fint(h), fint(e))
    }

    /// `-K` of the blowup: `kH - E`.
    pub fn anticanonical(ctx: &ChowContext) -> Self {
        ChowExpr::ints(ctx.k, -1)
    }

    pub fn scale(&self, c: &MPoly) -> Self {
        ChowExpr::new(c * &self.h, c * &self.e)
    }
}

impl Add for &ChowExpr {
    type Output = ChowExpr;
    fn add(self, o: &ChowExpr) -> ChowExpr {
        ChowExpr::new(&self.h + &o.h, &self.e + &o.e)
    }
}

impl Sub for &ChowExpr {
    type Output = ChowExpr;
    fn sub(self, o: &ChowExpr) -> ChowExpr {
        ChowExpr::new(&self.h - &o.h, &self.e - &o.e)
    }
}

impl Neg for &ChowExpr {
    type Output = ChowExpr;
    fn neg(self) -> ChowExpr {
        ChowExpr::new(-&self.h, -&self.e)
    }
}

impl fmt::Display for ChowExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})H + ({})E", self.h, self.e)
    }
}

/// Triple intersection, expanded over the eight choices of `H` or `E` per factor.
pub fn triple(ctx: &ChowContext, a: &ChowExpr, b: &ChowExpr, c: &ChowExpr) -> MPoly {
    let mut acc = MPoly::zero(formal_vars().clone());
    for mask in 0u8..8 {
        let pick = |x: &ChowExpr, bit: u8| if mask & bit != 0 { x.e.clone() } else { x.h.clone() };
        let j = mask.count_ones() as usize;
        let coef = &(&pick(a, 1) * &pick(b, 2)) * &pick(c, 4);
        acc = &acc + &coef.scale(&Scalar::from(ctx.rule(j)));
    }
    acc
}

pub fn cube(ctx: &ChowContext, a: &ChowExpr) -> MPoly {
    triple(ctx, a, a, a)
}

/// `(-K)^3` of the blowup.
pub fn anticanonical_cube(ctx: &ChowContext) -> i64 {
    let k = ChowExpr::anticanonical(ctx);
    let v = cube(ctx, &k).as_constant().and_then(|c| c.as_rat().cloned()).expect("numeric");
    v.to_integer().try_into().expect("small")
}

pub fn e_cube(ctx: &ChowContext) -> i64 {
    ctx.rule(3)
}

/// `s_coef * s + l_coef * l` on the Hirzebruch surface `F_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HbClass {
    pub n: MPoly,
    pub s: MPoly,
    pub l: MPoly,
}

impl HbClass {
    pub fn new(n: MPoly, s: MPoly, l: MPoly) -> Self {
        HbClass { n, s, l }
    }

    pub fn parse(n: &str, s: &str, l: &str) -> Self {
        HbClass::new(formal(n), formal(s), formal(l))
    }

    pub fn section(n: &MPoly) -> Self {
        HbClass::new(n.clone(), fint(1), fint(0))
    }

    pub fn fiber(n: &MPoly) -> Self {
        HbClass::new(n.clone(), fint(0), fint(1))
    }
}

impl fmt::Display for HbClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})s + ({})l", self.s, self.l)
    }
}

impl Add for &HbClass {
    type Output = HbClass;
    fn add(self, o: &HbClass) -> HbClass {
        HbClass::new(self.n.clone(), &self.s + &o.s, &self.l + &o.l)
    }
}

impl Sub for &HbClass {
    type Output = HbClass;
    fn sub(self, o: &HbClass) -> HbClass {
        HbClass::new(self.n.clone(), &self.s - &o.s, &self.l - &o.l)
    }
}

impl Mul<&HbClass> for &MPoly {
    type Output = HbClass;
    fn mul(self, o: &HbClass) -> HbClass {
        HbClass::new(o.n.clone(), self * &o.s, self * &o.l)
    }
}

/// Intersection form `s^2 = -n`, `s.l = 1`, `l^2 = 0`.
pub fn hb_intersect(a: &HbClass, b: &HbClass) -> Result<MPoly, ChowError> {
    if a.n != b.n {
        return Err(ChowError::MismatchedIndex(a.n.to_string(), b.n.to_string()));
    }
    Ok(&(&(-&a.n) * &(&a.s * &b.s)) + &(&(&a.s * &b.l) + &(&a.l * &b.s)))
}

/// `kappa` with `(s + kappa l)^2 = e3`.
pub fn hb_solve_kappa(n: &MPoly, e3: &MPoly) -> MPoly {
    (e3 + n).scale(&Scalar::ratio(1, 2))
}

/// Restriction of a divisor on the blowup to `E = F_n`, where `H|_E = d l` and
/// `-E|_E = s + kappa l`.
pub fn restrict_to_exceptional(ctx: &ChowContext, n: &MPoly, x: &ChowExpr) -> HbClass {
    let kappa = hb_solve_kappa(n, &fint(e_cube(ctx)));
    let s = -&x.e;
    let l = &x.h.scale(&Scalar::from(ctx.d)) - &(&x.e * &kappa);
    HbClass::new(n.clone(), s, l)
}

// ---------------------------------------------------------------------------
// affine bounds

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    /// `f >= 0` iff `var <= value`.
    AtMost(String, Rat),
    /// `f >= 0` iff `var >= value`.
    AtLeast(String, Rat),
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::AtMost(v, r) => write!(f, "{v} <= {}", fmt_rat(r)),
            Bound::AtLeast(v, r) => write!(f, "{v} >= {}", fmt_rat(r)),
        }
    }
}

fn rational_coeff(p: &MPoly, e: &[u32]) -> Option<Rat> {
    p.coeff(e).as_rat().cloned()
}

/// The half line where an affine polynomial in one formal symbol is nonnegative.
pub fn affine_bound(f: &MPoly, var: &str) -> Option<Bound> {
    let i = f.var_index(var)?;
    if f.terms().keys().any(|e| e.iter().enumerate().any(|(j, &k)| (j != i && k > 0) || k > 1)) {
        return None;
    }
    let nv = f.vars().len();
    let c0 = rational_coeff(f, &vec![0; nv])?;
    let mut e1 = vec![0; nv];
    e1[i] = 1;
    let c1 = rational_coeff(f, &e1)?;
    if c1.is_zero() {
        return None;
    }
    let root = -c0 / &c1;
    Some(if c1.is_negative() { Bound::AtMost(var.into(), root) } else { Bound::AtLeast(var.into(), root) })
}

fn eval_formal(p: &MPoly, n: &Rat, m: &Rat, eps: &Rat) -> Rat {
    let pt = [Scalar::Rat(n.clone()), Scalar::Rat(m.clone()), Scalar::Rat(eps.clone())];
    p.eval(&pt).ok().and_then(|s| s.as_rat().cloned()).expect("rational")
}

/// Largest integer strictly below `r`.
fn floor_strict(r: &Rat) -> Rat {
    let c = r.ceil();
    c - Rat::one()
}

// ---------------------------------------------------------------------------
// the ledger

struct Ledger {
    ok: bool,
    lines: Vec<String>,
}

impl Ledger {
    fn new() -> Self {
        Ledger { ok: true, lines: Vec::new() }
    }

    fn eq(&mut self, label: &str, got: &MPoly, want: &MPoly) {
        let good = got == want;
        self.ok &= good;
        if good {
            self.lines.push(format!("{label} = {got}"));
        } else {
            self.lines.push(format!("{label} = {got}, expected {want}"));
        }
    }

    fn bound(&mut self, label: &str, f: &MPoly, var: &str, want: &Bound) {
        let b = affine_bound(f, var);
        let good = b.as_ref() == Some(want);
        self.ok &= good;
        match b {
            Some(b) => self.lines.push(format!("{label}: {f} >= 0 iff {b}")),
            None => self.lines.push(format!("{label}: {f} is not affine in {var}")),
        }
    }

    fn holds(&mut self, label: &str, good: bool) {
        self.ok &= good;
        self.lines.push(format!("{label}: {good}"));
    }

    fn result(self, id: &str, claim: &str) -> CheckResult {
        CheckResult::new(id, claim, self.ok, self.lines.join("; "))
    }
}

fn at_most(v: &str, r: Rat) -> Bound {
    Bound::AtMost(v.into(), r)
}

fn he(h: i64, e: i64) -> ChowExpr {
    ChowExpr::ints(h, e)
}

pub fn verify_e_cube() -> CheckResult {
    let mut l = Ledger::new();
    for (label, ctx, want) in [
        ("quadric along Gamma", ChowContext::quadric(6), -16),
        ("V22 along C4", ChowContext::v22(4), -2),
        ("V22 along C6", ChowContext::v22(6), -4),
        ("V22 along C2", ChowContext::v22(2), 0),
    ] {
        let by_triple = cube(&ctx, &he(0, 1));
        l.eq(&format!("E^3, {label}"), &by_triple, &fint(want));
        l.holds(&format!("2 - (-K.C) = {}", e_cube(&ctx)), e_cube(&ctx) == want);
    }
    l.result("chow-e-cube", "E^3 = 2 - (-K.C): -16 for Gamma in the quadric; -2, -4, 0 for the curves of degree 4, 6, 2 in V22")
}

pub fn verify_minus_k_cube() -> CheckResult {
    let mut l = Ledger::new();
    for (label, ctx, want) in [
        ("V22 along C4", ChowContext::v22(4), 12),
        ("V22 along C6", ChowContext::v22(6), 8),
        ("V22 along C2", ChowContext::v22(2), 16),
        ("quadric along Gamma", ChowContext::quadric(6), 16),
    ] {
        let v = anticanonical_cube(&ctx);
        l.eq(&format!("(-K)^3, {label}"), &fint(v), &fint(want));
    }
    l.result("chow-minus-k-cube", "(-K)^3 of the blowup is 12 along C4 and 8 along C6; 16 along C2 and along Gamma in the quadric")
}

/// Blowup of V22 along C4: contraction criterion and multiplicity bounds.
pub fn verify_c4_blowup() -> CheckResult {
    let ctx = ChowContext::v22(4);
    let k = he(1, -1);
    let f = ChowExpr::parse("n", "-m");
    let d = ChowExpr::parse("1", "-m");
    let mut l = Ledger::new();
    l.eq("(H-E)^2 (nH-mE)", &triple(&ctx, &k, &k, &f), &formal("18*n - 6*m"));
    l.eq("(H-E)^2 (H-3E)", &triple(&ctx, &k, &k, &he(1, -3)), &fint(0));
    let v = triple(&ctx, &k, &f, &he(1, -2));
    l.eq("(H-E)(nH-mE)(H-2E)", &v, &formal("14*n - 8*m"));
    let v1 = triple(&ctx, &k, &d, &he(1, -2));
    l.eq("(H-E)(H-mE)(H-2E)", &v1, &formal("14 - 8*m"));
    l.bound("mult along C4", &v1, "m", &at_most("m", rat(7, 4)));
    let v3 = triple(&ctx, &k, &d, &he(1, -3));
    l.eq("(H-E)(H-mE)(H-3E)", &v3, &formal("10 - 10*m"));
    l.bound("mult along C4 when T15' has a triple curve", &v3, "m", &at_most("m", Rat::one()));
    // on the surface with m = 3n: the product vanishes exactly there
    let on_line = triple(&ctx, &k, &k, &f).substitute(&[("m", formal("3*n"))]).expect("formal");
    l.eq("(H-E)^2 (nH-3nE)", &on_line, &fint(0));
    l.eq("(H-E)(nH-3nE)(H-2E)", &v.substitute(&[("m", formal("3*n"))]).expect("formal"), &formal("-10*n"));
    l.result(
        "chow-c4-blowup",
        "along C4: (H-E)^2(nH-mE) = 18n-6m, (H-E)^2(H-3E) = 0, (H-E)(nH-mE)(H-2E) = 14n-8m giving m <= 7/4, and (H-E)(H-mE)(H-3E) = 10-10m",
    )
}

/// Blowup of V22 along C6.
pub fn verify_c6_blowup() -> CheckResult {
    let ctx = ChowContext::v22(6);
    let k = he(1, -1);
    let d = ChowExpr::parse("1", "-m");
    let mut l = Ledger::new();
    let v = triple(&ctx, &k, &d, &he(1, -2));
    l.eq("(H-E)(H-mE)(H-2E)", &v, &formal("10 - 10*m"));
    l.bound("mult along C6", &v, "m", &at_most("m", Rat::one()));
    l.eq("(H-E)^2 (H-2E)", &triple(&ctx, &k, &k, &he(1, -2)), &fint(0));
    l.result("chow-c6-blowup", "along C6: (H-E)(H-mE)(H-2E) = 10-10m, so m <= 1, and (H-E)^2(H-2E) = 0")
}

/// The exceptional surface over Gamma in the blown up quadric.
pub fn verify_gamma_exceptional() -> CheckResult {
    let ctx = ChowContext::quadric(6);
    let n = formal("n");
    let mut l = Ledger::new();
    let kappa = hb_solve_kappa(&n, &fint(e_cube(&ctx)));
    l.eq("kappa", &kappa, &formal("(n-16)/2"));
    let e_on_e = restrict_to_exceptional(&ctx, &n, &he(0, -1));
    l.eq("(-E|_E)^2", &hb_intersect(&e_on_e, &e_on_e).unwrap(), &fint(-16));
    // S is cut out by a quadric and is smooth at a general point of Gamma
    let s_res = restrict_to_exceptional(&ctx, &n, &he(2, -1));
    l.eq("S|_E, l coefficient", &s_res.l, &formal("(n+8)/2"));
    // remove the two fibers over the fixed points
    let gamma = &s_res - &(&fint(2) * &HbClass::fiber(&n));
    l.eq("Gamma~, l coefficient", &gamma.l, &formal("(n+4)/2"));
    let gs = hb_intersect(&gamma, &HbClass::section(&n)).unwrap();
    l.eq("Gamma~ . s", &gs, &formal("(4-n)/2"));
    l.bound("Gamma~ . s >= 0", &gs, "n", &at_most("n", rat(4, 1)));
    let k = restrict_to_exceptional(&ctx, &n, &ChowExpr::anticanonical(&ctx));
    l.eq("-K|_E, l coefficient", &k.l, &formal("(n+20)/2"));
    let deg = hb_intersect(&k, &gamma).unwrap();
    l.eq("-K . Gamma~", &deg, &fint(12));
    l.result(
        "hirzebruch-gamma-exceptional",
        "over Gamma: E^3 = -16 gives kappa = (n-16)/2; S~|_E = s + (n+8)/2 l; Gamma~ = s + (n+4)/2 l with Gamma~.s = (4-n)/2 >= 0, so n <= 4; (s + (n+20)/2 l).Gamma~ = 12",
    )
}

/// The exceptional surface over C2, for `F_0` and `F_2`.
pub fn verify_c2_exceptional() -> CheckResult {
    let ctx = ChowContext::v22(2);
    let mut l = Ledger::new();
    // R ~ 2H - 5E, so D~ = H - mE = R/2 + (5/2 - m)E
    let r = he(2, -5);
    let dt = ChowExpr::parse("1", "-m");
    let split = &r.scale(&fconst(rat(1, 2))) + &ChowExpr::parse("0", "5/2 - m");
    l.holds("H - mE = R/2 + (5/2 - m)E", split == dt);
    l.bound("coefficient of E", &formal("5/2 - m"), "m", &at_most("m", rat(5, 2)));
    // 4/5 D is not log canonical along C2 only if its multiplicity exceeds 1
    l.bound("4m/5 - 1 >= 0", &formal("4*m/5 - 1"), "m", &Bound::AtLeast("m".into(), rat(5, 4)));
    let m_max = rat(5, 2);
    let mut degs = Vec::new();
    for (n, want_l, want_k) in [(0, "8/5", "s + 2l"), (2, "(8 + 4*m)/5", "s + 3l")] {
        let nn = fint(n);
        let res = restrict_to_exceptional(&ctx, &nn, &dt);
        let res = &fconst(rat(4, 5)) * &res;
        l.eq(&format!("F_{n}: 4/5 D~|_E, s coefficient"), &res.s, &formal("4*m/5"));
        l.eq(&format!("F_{n}: 4/5 D~|_E, l coefficient"), &res.l, &formal(want_l));
        // theta kappa <= l coefficient with theta > 1
        let cap = eval_formal(&res.l, &Rat::from_integer(n.into()), &m_max, &Rat::zero());
        let kappa_max = floor_strict(&cap);
        let k = restrict_to_exceptional(&ctx, &nn, &he(1, -1));
        l.holds(&format!("F_{n}: -K|_E = {want_k}"), k.s == fint(1) && k.l == fint(2 + n / 2));
        let kappa = fconst(kappa_max.clone());
        let c = HbClass::new(nn.clone(), fint(1), kappa);
        let deg = hb_intersect(&k, &c).unwrap();
        degs.push(deg.clone());
        l.lines.push(format!("F_{n}: kappa < {} so kappa <= {}, -K.C~ <= {deg}", fmt_rat(&cap), fmt_rat(&kappa_max)));
    }
    l.holds("degree bounds 3 and 4", degs == vec![fint(3), fint(4)]);
    l.result(
        "hirzebruch-c2-exceptional",
        "along C2: D~ = R/2 + (5/2-m)E so m <= 5/2; failure of log canonicity needs m > 5/4; on F_0 kappa <= 1 and -K.C~ = 2 + kappa <= 3; on F_2 kappa <= 3 and -K.C~ = 1 + kappa <= 4",
    )
}

/// Multiplicity bookkeeping after the link along C4 with `eps = 5/6`.
pub fn verify_c4_link() -> CheckResult {
    let mut l = Ledger::new();
    let eps = rat(5, 6);
    let m_max = rat(7, 4);
    let em = &eps * &m_max;
    l.holds(&format!("eps m <= {} < 2", fmt_rat(&em)), em == rat(35, 24) && em < rat(2, 1));
    // -1/(2-m) K ~ -(2 - mult/(2-m)) K
    let mult = formal("3 - 2*m");
    let lhs = fint(1);
    let rhs = &(&fint(2) * &formal("2 - m")) - &mult;
    l.holds("mult D' = 3 - 2m solves 1 = 2(2-m) - mult", lhs == rhs);
    let mult_pair = &(&formal("eps") * &mult) + &(&formal("eps*m - 1") * &fint(2));
    l.eq("mult of eps D' + (eps m - 1) T'", &mult_pair, &formal("3*eps - 2"));
    let v = eval_formal(&mult_pair, &Rat::zero(), &Rat::zero(), &eps);
    l.holds(&format!("3 eps - 2 = {} < 1", fmt_rat(&v)), v == rat(1, 2) && v < Rat::one());
    let class = &(&formal("eps") * &formal("2 - m")) + &formal("eps*m - 1");
    l.eq("class of eps D' + (eps m - 1) T' in units of -K", &class, &formal("2*eps - 1"));
    let c = eval_formal(&class, &Rat::zero(), &Rat::zero(), &eps);
    l.holds(&format!("2 eps - 1 = {}", fmt_rat(&c)), c == rat(2, 3));
    l.result(
        "ledger-c4-link",
        "with eps = 5/6 and m <= 7/4: eps m <= 35/24 < 2; mult D' = 3 - 2m; mult(eps D' + (eps m - 1)T') = 3eps - 2 = 1/2 < 1; the pair is -(2eps - 1)K with 2eps - 1 = 2/3",
    )
}

pub fn verify_all() -> Vec<CheckResult> {
    vec![
        verify_e_cube(),
        verify_minus_k_cube(),
        verify_c4_blowup(),
        verify_c6_blowup(),
        verify_gamma_exceptional(),
        verify_c2_exceptional(),
        verify_c4_link(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules() {
        assert_eq!(e_cube(&ChowContext::quadric(6)), -16);
        assert_eq!(anticanonical_cube(&ChowContext::v22(4)), 12);
        assert_eq!(anticanonical_cube(&ChowContext::v22(6)), 8);
        assert_eq!(anticanonical_cube(&ChowContext::v22(2)), 16);
        let n = formal("n");
        let a = HbClass::parse("n", "1", "(n+20)/2");
        let b = HbClass::parse("n", "1", "(n+4)/2");
        assert_eq!(hb_intersect(&a, &b).unwrap(), fint(12));
        assert_eq!(hb_intersect(&b, &HbClass::section(&n)).unwrap(), formal("(4-n)/2"));
        assert_eq!(hb_intersect(&HbClass::fiber(&n), &HbClass::fiber(&n)).unwrap(), fint(0));
        assert!(hb_intersect(&a, &HbClass::fiber(&fint(2))).is_err());
        assert_eq!(hb_solve_kappa(&n, &fint(-2)), formal("(n-2)/2"));
        assert_eq!(hb_solve_kappa(&n, &formal("-n")), fint(0));
    }

    #[test]
    fn bounds() {
        assert_eq!(affine_bound(&formal("14 - 8*m"), "m"), Some(at_most("m", rat(7, 4))));
        assert_eq!(affine_bound(&formal("2*m - 1"), "m"), Some(Bound::AtLeast("m".into(), rat(1, 2))));
        assert_eq!(affine_bound(&formal("m^2"), "m"), None);
        assert_eq!(affine_bound(&formal("n + m"), "m"), None);
        assert_eq!(floor_strict(&rat(8, 5)), rat(1, 1));
        assert_eq!(floor_strict(&rat(4, 1)), rat(3, 1));
    }

    #[test]
    fn ledger_passes() {
        for r in verify_all() {
            assert!(r.passed(), "{r:?}");
        }
    }
}
