//! The fixed catalog of named polynomials, points and curves, parsed from the
//! text file shipped in `data/catalog.txt`.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::exactalg::parse::parse_poly_in;
use crate::exactalg::{parse_scalar, AlgError, MPoly, Rat, Scalar};
use crate::report::CheckResult;
use crate::torusgeom::{apply_involution, weight_of, WeightVector, WeightedPoint, P4_VARS};

pub const CATALOG_TEXT: &str = include_str!("../data/catalog.txt");
pub const CATALOG_FORMAT: u32 = 1;

/// Coordinates of the quintic map, in slot order.
pub const ZETA_SLOTS: [&str; 14] = ["g9", "g10", "g11", "g12", "g13", "g14", "g15", "g15p", "g16", "g17", "g18", "g19", "g20", "g21"];
pub const ZETA_WEIGHTS: [i64; 14] = [9, 10, 11, 12, 13, 14, 15, 15, 16, 17, 18, 19, 20, 21];
/// Coordinates of the cubic map, in slot order.
pub const GAMMA_SLOTS: [&str; 11] = ["h3", "h5", "h6", "h7", "h8", "h9", "h10", "h11", "h12", "h13", "h15"];
pub const GAMMA_WEIGHTS: [i64; 11] = [3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15];

/// Printable label of a quintic slot (`g15p` prints as `g15'`).
pub fn slot_label(name: &str) -> String {
    name.replace("pp", "''").replace('p', "'")
}

/// Index of the slot paired with `i` by the involution (weight `w -> 30 - w`).
pub fn zeta_partner(i: usize) -> usize {
    match i {
        6 | 7 => i,
        _ => 13 - i,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("catalog line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("catalog line {line}: {source}")]
    Parse { line: usize, source: AlgError },
    #[error("unknown catalog name `{0}`")]
    Unknown(String),
    #[error("`{name}` is a {found}, expected a {expected}")]
    WrongKind { name: String, expected: &'static str, found: &'static str },
    #[error("{0}")]
    Specialization(AlgError),
    #[error("u = {0} is not admissible (the quadric is singular)")]
    SingularParameter(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub params: Arc<[String]>,
    pub coords: Vec<MPoly>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub coords: Vec<Scalar>,
    pub text: String,
}

#[derive(Clone, Debug)]
pub enum CatalogObject<'a> {
    Poly(&'a MPoly),
    Point(&'a Point),
    Curve(&'a Curve),
}

impl CatalogObject<'_> {
    fn kind(&self) -> &'static str {
        match self {
            CatalogObject::Poly(_) => "polynomial",
            CatalogObject::Point(_) => "point",
            CatalogObject::Curve(_) => "curve",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub format: u32,
    varsets: BTreeMap<String, Arc<[String]>>,
    polys: BTreeMap<String, (MPoly, String)>,
    aliases: BTreeMap<String, String>,
    points: BTreeMap<String, Point>,
    curves: BTreeMap<String, Curve>,
    /// Names in definition order.
    order: Vec<String>,
    /// `None` for the generic parameter.
    pub u: Option<Rat>,
}

fn expand(text: &str, raw: &BTreeMap<String, String>, line: usize) -> Result<String, CatalogError> {
    let mut out = String::new();
    let mut rest = text;
    while let Some(i) = rest.find('{') {
        out.push_str(&rest[..i]);
        let j = rest[i..].find('}').ok_or(CatalogError::Format { line, msg: "unclosed `{`".into() })? + i;
        let name = &rest[i + 1..j];
        let body =
            raw.get(name).ok_or_else(|| CatalogError::Format { line, msg: format!("`{{{name}}}` refers to an undefined polynomial") })?;
        out.push('(');
        out.push_str(body);
        out.push(')');
        rest = &rest[j + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut cat = Catalog {
            format: 0,
            varsets: BTreeMap::new(),
            polys: BTreeMap::new(),
            aliases: BTreeMap::new(),
            points: BTreeMap::new(),
            curves: BTreeMap::new(),
            order: Vec::new(),
            u: None,
        };
        let mut raw: BTreeMap<String, String> = BTreeMap::new();
        for (k, full) in text.lines().enumerate() {
            let line = k + 1;
            let l = full.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let fmt_err = |msg: &str| CatalogError::Format { line, msg: msg.into() };
            let (head, body) = match l.split_once('=') {
                Some((h, b)) => (h.trim(), Some(b.trim())),
                None => (l, None),
            };
            let words: Vec<&str> = head.split_whitespace().collect();
            match (words.as_slice(), body) {
                (["format", n], None) => {
                    cat.format = n.parse().map_err(|_| fmt_err("bad format number"))?;
                    if cat.format != CATALOG_FORMAT {
                        return Err(fmt_err(&format!("unsupported format {}", cat.format)));
                    }
                }
                (["vars", set], Some(b)) => {
                    let names: Vec<&str> = b.split_whitespace().collect();
                    cat.varsets.insert(set.to_string(), crate::exactalg::mpoly::var_list(&names));
                }
                (["poly", set, name], Some(b)) => {
                    let vars = cat.varsets.get(*set).ok_or_else(|| fmt_err("unknown variable set"))?.clone();
                    let expanded = expand(b, &raw, line)?;
                    let p = parse_poly_in(&expanded, &vars).map_err(|source| CatalogError::Parse { line, source })?;
                    cat.define(name, line)?;
                    raw.insert(name.to_string(), expanded.clone());
                    cat.polys.insert(name.to_string(), (p, expanded));
                }
                (["alias", name], Some(b)) => {
                    if !cat.polys.contains_key(b) {
                        return Err(fmt_err("alias target must be a polynomial"));
                    }
                    cat.define(name, line)?;
                    cat.aliases.insert(name.to_string(), b.to_string());
                }
                (["point", name], Some(b)) => {
                    let coords = b
                        .split(',')
                        .map(|e| parse_scalar(e.trim()))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|source| CatalogError::Parse { line, source })?;
                    cat.define(name, line)?;
                    cat.points.insert(name.to_string(), Point { coords, text: b.to_string() });
                }
                (["curve", set, name], Some(b)) => {
                    let vars = cat.varsets.get(*set).ok_or_else(|| fmt_err("unknown variable set"))?.clone();
                    let coords = b
                        .split(',')
                        .map(|e| parse_poly_in(e.trim(), &vars))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|source| CatalogError::Parse { line, source })?;
                    cat.define(name, line)?;
                    cat.curves.insert(name.to_string(), Curve { params: vars, coords, text: b.to_string() });
                }
                _ => return Err(fmt_err(&format!("unrecognized line `{l}`"))),
            }
        }
        if cat.format != CATALOG_FORMAT {
            return Err(CatalogError::Format { line: 0, msg: "missing format line".into() });
        }
        Ok(cat)
    }

    fn define(&mut self, name: &str, line: usize) -> Result<(), CatalogError> {
        if self.order.iter().any(|n| n == name) {
            return Err(CatalogError::Format { line, msg: format!("`{name}` defined twice") });
        }
        self.order.push(name.to_string());
        Ok(())
    }

    /// The catalog at generic `u`.
    pub fn standard() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::parse(CATALOG_TEXT).expect("shipped catalog parses"))
    }

    /// Every entry with `u` replaced by a rational value. Square roots of perfect
    /// squares take the root with positive leading coefficient, so the radical
    /// `sqrt((3u+1)(1-u))` becomes `1` at `u = 2/3` and `0` at `u = -1/3`.
    pub fn at(&self, u: &Rat) -> Result<Catalog, CatalogError> {
        let val = Scalar::Rat(u.clone());
        let sp = |p: &MPoly| p.subst_u(&val).map_err(CatalogError::Specialization);
        let mut c = self.clone();
        for (p, _) in c.polys.values_mut() {
            *p = sp(p)?;
        }
        for pt in c.points.values_mut() {
            pt.coords = pt.coords.iter().map(|x| x.subst_u(&val)).collect::<Result<_, _>>().map_err(CatalogError::Specialization)?;
        }
        for cv in c.curves.values_mut() {
            cv.coords = cv.coords.iter().map(sp).collect::<Result<_, _>>()?;
        }
        c.u = Some(u.clone());
        Ok(c)
    }

    /// Names in definition order.
    pub fn names(&self) -> &[String] {
        &self.order
    }

    pub fn get(&self, name: &str) -> Result<CatalogObject<'_>, CatalogError> {
        let key = self.aliases.get(name).map(String::as_str).unwrap_or(name);
        if let Some((p, _)) = self.polys.get(key) {
            return Ok(CatalogObject::Poly(p));
        }
        if let Some(p) = self.points.get(key) {
            return Ok(CatalogObject::Point(p));
        }
        if let Some(c) = self.curves.get(key) {
            return Ok(CatalogObject::Curve(c));
        }
        Err(CatalogError::Unknown(name.to_string()))
    }

    pub fn poly(&self, name: &str) -> Result<&MPoly, CatalogError> {
        match self.get(name)? {
            CatalogObject::Poly(p) => Ok(p),
            other => Err(CatalogError::WrongKind { name: name.into(), expected: "polynomial", found: other.kind() }),
        }
    }

    pub fn point(&self, name: &str) -> Result<&Point, CatalogError> {
        match self.get(name)? {
            CatalogObject::Point(p) => Ok(p),
            other => Err(CatalogError::WrongKind { name: name.into(), expected: "point", found: other.kind() }),
        }
    }

    pub fn curve(&self, name: &str) -> Result<&Curve, CatalogError> {
        match self.get(name)? {
            CatalogObject::Curve(c) => Ok(c),
            other => Err(CatalogError::WrongKind { name: name.into(), expected: "curve", found: other.kind() }),
        }
    }

    /// Source text of a polynomial with `{...}` references spliced in.
    pub fn poly_text(&self, name: &str) -> Result<&str, CatalogError> {
        let key = self.aliases.get(name).map(String::as_str).unwrap_or(name);
        self.polys.get(key).map(|(_, t)| t.as_str()).ok_or_else(|| CatalogError::Unknown(name.into()))
    }

    pub fn varset(&self, name: &str) -> Option<&Arc<[String]>> {
        self.varsets.get(name)
    }

    /// Replaces each `{name}` by the parenthesized text of that polynomial.
    pub fn expand_refs(&self, text: &str) -> Result<String, CatalogError> {
        let mut raw = BTreeMap::new();
        let mut rest = text;
        while let Some(i) = rest.find('{') {
            let j = rest[i..].find('}').map(|j| j + i).ok_or(CatalogError::Format { line: 0, msg: "unclosed `{`".into() })?;
            let name = &rest[i + 1..j];
            raw.insert(name.to_string(), self.poly_text(name)?.to_string());
            rest = &rest[j + 1..];
        }
        expand(text, &raw, 0)
    }

    /// Parses a constant and specializes it to this catalog's `u`.
    pub fn scalar(&self, text: &str) -> Result<Scalar, AlgError> {
        let s = parse_scalar(text)?;
        match &self.u {
            Some(r) => s.eval_u(r),
            None => Ok(s),
        }
    }

    /// Parses a polynomial in one of the catalog's variable sets and specializes it
    /// to this catalog's `u`.
    pub fn parse_in(&self, set: &str, text: &str) -> Result<MPoly, AlgError> {
        let vars = self.varsets.get(set).ok_or_else(|| AlgError::UnknownVariable(set.to_string()))?;
        let p = parse_poly_in(text, vars)?;
        match &self.u {
            Some(r) => p.subst_u(&Scalar::Rat(r.clone())),
            None => Ok(p),
        }
    }

    /// Shorthand for the many call sites that use shipped names.
    pub fn p(&self, name: &str) -> &MPoly {
        self.poly(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn pt(&self, name: &str) -> &[Scalar] {
        &self.point(name).unwrap_or_else(|e| panic!("{e}")).coords
    }

    pub fn zeta(&self) -> Vec<&MPoly> {
        ZETA_SLOTS.iter().map(|n| self.p(n)).collect()
    }

    pub fn gamma(&self) -> Vec<&MPoly> {
        GAMMA_SLOTS.iter().map(|n| self.p(n)).collect()
    }

    pub fn weighted(&self, name: &str) -> WeightedPoint {
        WeightedPoint::new(self.pt(name).to_vec(), WeightVector::p4()).expect("catalog point")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UMode {
    Generic,
    Specialized(Rat),
}

/// Generator of the orbit closure through `(1:1:1:t:w)` lying on both cubic
/// cones `y^3 = x^2 z` and `t^3 = z w^2`, on the chosen branch of the radical.
pub fn psi_generator(branch: Branch, mode: &UMode) -> Result<WeightedPoint, CatalogError> {
    let cat = Catalog::standard();
    let name = match branch {
        Branch::Plus => "Psi",
        Branch::Minus => "Psi_prime",
    };
    let coords = match mode {
        UMode::Generic => cat.pt(name).to_vec(),
        UMode::Specialized(r) => {
            if r.numer() == r.denom() || r.numer() == &0.into() {
                return Err(CatalogError::SingularParameter(crate::exactalg::rat::fmt_rat(r)));
            }
            cat.pt(name).iter().map(|c| c.eval_u(r)).collect::<Result<_, _>>().map_err(CatalogError::Specialization)?
        }
    };
    Ok(WeightedPoint::new(coords, WeightVector::p4()).expect("nonzero first coordinate"))
}

fn on_quadric(cat: &Catalog, coords: &[Scalar]) -> Result<Scalar, AlgError> {
    cat.p("quadric").eval(coords)
}

fn substitute_curve(p: &MPoly, c: &Curve) -> Result<MPoly, AlgError> {
    let binds: Vec<(&str, MPoly)> = P4_VARS.iter().copied().zip(c.coords.iter().cloned()).collect();
    p.substitute(&binds)
}

/// Self-checks of the catalog: weights, involution symmetry, incidences, the
/// product decompositions of the quintics and the separating value of `g15'`.
pub fn verify_catalog(cat: &Catalog) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let act = WeightVector::p4();

    // (a) weights
    {
        let mut bad = Vec::new();
        let mut table = Vec::new();
        for (name, w) in GAMMA_SLOTS.iter().zip(GAMMA_WEIGHTS).chain(ZETA_SLOTS.iter().zip(ZETA_WEIGHTS)) {
            match weight_of(cat.p(name), &act) {
                Ok(k) if k == w => table.push(format!("{}:{k}", slot_label(name))),
                Ok(k) => bad.push(format!("{} has weight {k}, expected {w}", slot_label(name))),
                Err(e) => bad.push(format!("{}: {e}", slot_label(name))),
            }
        }
        let ok = bad.is_empty();
        out.push(CheckResult::new(
            "catalog-weights",
            "h_i and g_i are semi-invariant of weight i; g15' has weight 15",
            ok,
            if ok { table.join(" ") } else { bad.join("; ") },
        ));
    }

    // (b) involution
    {
        let mut bad = Vec::new();
        let pairs: Vec<(&str, &str)> = (0..GAMMA_SLOTS.len())
            .map(|i| (GAMMA_SLOTS[i], GAMMA_SLOTS[GAMMA_SLOTS.len() - 1 - i]))
            .chain((0..14).map(|i| (ZETA_SLOTS[i], ZETA_SLOTS[zeta_partner(i)])))
            .chain([("quadric", "quadric"), ("f", "f"), ("g15pp", "g15pp")])
            .collect();
        for (a, b) in &pairs {
            match apply_involution(cat.p(a)) {
                Ok(img) if &img == cat.p(b) => {}
                Ok(img) => bad.push(format!("iota({a}) - {b} = {}", &img - cat.p(b))),
                Err(e) => bad.push(format!("{a}: {e}")),
            }
        }
        let sf = apply_involution(cat.p("s_first")).unwrap();
        let ss = apply_involution(cat.p("s_second")).unwrap();
        let swapped = (&sf == cat.p("s_first") && &ss == cat.p("s_second")) || (&sf == cat.p("s_second") && &ss == cat.p("s_first"));
        if !swapped {
            bad.push("iota does not preserve {x*w - z^2, z^2 - y*t}".into());
        }
        let ok = bad.is_empty();
        out.push(CheckResult::new(
            "catalog-involution",
            "iota(h_i) = h_{18-i}, iota(g_i) = g_{30-i}, iota fixes g15, g15', g15'', Q_u, f and the pair defining S",
            ok,
            if ok { format!("{} pairs verified", pairs.len()) } else { bad.join("; ") },
        ));
    }

    // (c) the base curve
    {
        let gamma = cat.curve("Gamma").unwrap();
        let res: Vec<String> = ["quadric", "s_first", "s_second", "f"]
            .iter()
            .map(|n| match substitute_curve(cat.p(n), gamma) {
                Ok(p) => format!("{n}|Gamma = {p}"),
                Err(e) => format!("{n}: {e}"),
            })
            .collect();
        let ok = res.iter().all(|s| s.ends_with("= 0"));
        out.push(CheckResult::new(
            "catalog-gamma-on-quadric-and-s",
            "the curve (s0^6 : s0^5 s1 : s0^3 s1^3 : s0 s1^5 : s1^6) lies on Q_u and on S",
            ok,
            res.join("; "),
        ));
    }

    // (d) generators on the quadric
    {
        let mut lines = Vec::new();
        let mut ok = true;
        for n in ["Delta", "Upsilon", "Theta_plus", "Theta_minus", "Psi", "Psi_prime", "Theta10", "Gamma_pt"] {
            match on_quadric(cat, cat.pt(n)) {
                Ok(v) => {
                    ok &= v.is_zero();
                    lines.push(format!("Q({n}) = {v}"));
                }
                Err(e) => {
                    ok = false;
                    lines.push(format!("{n}: {e}"));
                }
            }
        }
        for n in ["conic", "P_lambda", "P_lambda_iota"] {
            let v = substitute_curve(cat.p("quadric"), cat.curve(n).unwrap());
            ok &= matches!(&v, Ok(p) if p.is_zero());
            lines.push(format!("Q|{n} = {}", v.map(|p| p.to_string()).unwrap_or_else(|e| e.to_string())));
        }
        out.push(CheckResult::new(
            "catalog-generators-on-quadric",
            "Delta, Upsilon, Theta+-, Psi, Psi' and the conic of involution-fixed points lie on Q_u",
            ok,
            lines.join("; "),
        ));
    }

    // (e) product decompositions of the quintics
    {
        let f = cat.p("f");
        let f2 = f * f;
        let mut lines = Vec::new();
        let mut ok = true;
        for (g, h) in [("g9", "h3"), ("g11", "h5"), ("g14", "h8"), ("g16", "h10"), ("g19", "h13"), ("g21", "h15")] {
            let q = cat.p(g).divide_exact(f);
            let good = matches!(&q, Ok(q) if q == cat.p(h));
            ok &= good;
            lines.push(format!("{g}/f = {}", if good { h.to_string() } else { format!("{q:?}") }));
        }
        for (g, v) in [("g12", "x"), ("g13", "y"), ("g15", "z"), ("g17", "t"), ("g18", "w")] {
            let q = cat.p(g).divide_exact(&f2);
            let vp = MPoly::var(cat.p(g).vars().clone(), v).unwrap();
            let good = matches!(&q, Ok(q) if *q == vp);
            ok &= good;
            lines.push(format!("{g}/f^2 = {}", q.map(|q| q.to_string()).unwrap_or_else(|e| e.to_string())));
        }
        for g in ["g10", "g20", "g15p"] {
            let nd = cat.p(g).divide_exact(f).is_err();
            ok &= nd;
            lines.push(format!("f does not divide {}", slot_label(g)));
        }
        out.push(CheckResult::new(
            "catalog-quintic-decompositions",
            "M9 = N3 + S, M11 = N5 + S, M12 = Hx + 2S, ..., M21 = N15 + S; f does not divide g10, g20, g15'",
            ok,
            lines.join("; "),
        ));
    }

    // (f) g15 and g15' at (0:1:0:0:1)
    {
        let pt: Vec<Scalar> = [0, 1, 0, 0, 1].iter().map(|&k| Scalar::from(k)).collect();
        let on_q = on_quadric(cat, &pt).map(|v| v.is_zero()).unwrap_or(false);
        let a = cat.p("g15").eval(&pt).unwrap();
        let b = cat.p("g15p").eval(&pt).unwrap();
        let ok = on_q && a.is_zero() && !b.is_zero();
        let mut r = CheckResult::new(
            "catalog-g15prime-separates",
            "(0:1:0:0:1) lies on Q_u, g15 vanishes there and g15' does not",
            ok,
            format!("g15(0,1,0,0,1) = {a}; g15'(0,1,0,0,1) = {b}"),
        );
        if cat.u.is_none() {
            r = r.with_note("the value of g15' at (0:1:0:0:1) is u - 1, not 1; only its nonvanishing is used");
        }
        out.push(r);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat;

    #[test]
    fn lookups() {
        let c = Catalog::standard();
        assert_eq!(c.p("h3").to_string(), "-x^2*z + y^3");
        assert_eq!(c.p("N3"), c.p("h3"));
        assert!(matches!(c.get("nothing"), Err(CatalogError::Unknown(_))));
        assert!(matches!(c.point("h3"), Err(CatalogError::WrongKind { .. })));
        let q6 = crate::exactalg::parse_poly("(u-1)*a^2 - (2*u-4)*a*b + (u-4)*b^2", &["a", "b"]).unwrap();
        assert_eq!(c.p("q6"), &q6);
        assert_eq!(c.curve("Gamma").unwrap().coords[2].to_string(), "s0^3*s1^3");
    }

    #[test]
    fn self_checks_pass() {
        for r in verify_catalog(Catalog::standard()) {
            assert!(r.passed(), "{r:?}");
        }
        for u in [rat(2, 1), rat(-1, 3), rat(3, 4)] {
            for r in verify_catalog(&Catalog::standard().at(&u).unwrap()) {
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn psi_specializations() {
        let minus_third = UMode::Specialized(rat(-1, 3));
        let target = Catalog::standard().weighted("Psi_at_minus_third");
        for b in [Branch::Plus, Branch::Minus] {
            assert!(psi_generator(b, &minus_third).unwrap().same_point(&target));
        }
        let p = psi_generator(Branch::Minus, &UMode::Specialized(rat(2, 3))).unwrap();
        let f = Catalog::standard().p("f").subst_u(&Scalar::Rat(rat(2, 3))).unwrap();
        assert!(f.eval(&p.coords).unwrap().is_zero());
        let q = psi_generator(Branch::Plus, &UMode::Specialized(rat(2, 3))).unwrap();
        assert!(!f.eval(&q.coords).unwrap().is_zero());
        assert!(psi_generator(Branch::Plus, &UMode::Specialized(rat(1, 1))).is_err());
        let g = psi_generator(Branch::Plus, &UMode::Generic).unwrap();
        assert!(g.coords[3].radicand().is_some());
    }

    #[test]
    fn malformed_catalogs_are_rejected() {
        assert!(Catalog::parse("vars A = a\n").is_err());
        assert!(Catalog::parse("format 1\npoly B p = a\n").is_err());
        assert!(Catalog::parse("format 1\nvars A = a\npoly A p = {q}\n").is_err());
        assert!(Catalog::parse("format 1\nvars A = a\npoly A p = a\npoly A p = a\n").is_err());
        assert!(Catalog::parse("format 2\n").is_err());
        match Catalog::parse("format 1\nvars A = a\npoly A p = a +\n") {
            Err(CatalogError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }
}
