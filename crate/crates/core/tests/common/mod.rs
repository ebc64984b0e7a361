//! Strategies and independent oracles shared by the property suite and the
//! acceptance target.
#![allow(dead_code)]

use proptest::prelude::*;

use v22_core::catalog::Catalog;
use v22_core::exactalg::mpoly::var_list;
use v22_core::exactalg::rat::rat;
use v22_core::exactalg::resultant::dense;
use v22_core::exactalg::{parse_poly, MPoly, Rat, RatFuncU, Scalar, UPolyU};
use v22_core::germlab::SingKind;

pub const XY: [&str; 2] = ["x", "y"];

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn upoly() -> impl Strategy<Value = UPolyU> {
    prop::collection::vec(-4i64..=4, 1..=3).prop_map(|c| UPolyU::from_ints(&c))
}

/// Rationals, polynomials in `u`, and quotients by `u - 2` or `u + 3`.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => small_rat().prop_map(Scalar::Rat),
        2 => upoly().prop_map(Scalar::from),
        1 => (upoly(), prop::sample::select(vec![-2i64, 3])).prop_map(|(p, c)| {
            Scalar::func(RatFuncU::new(p, UPolyU::from_ints(&[c, 1])).unwrap())
        }),
    ]
}

pub fn mpoly_in(names: &'static [&'static str]) -> impl Strategy<Value = MPoly> {
    let n = names.len();
    prop::collection::vec((prop::collection::vec(0u32..=2, n), scalar()), 0..=4).prop_map(move |ts| MPoly::from_terms(var_list(names), ts))
}

pub fn xy() -> impl Strategy<Value = MPoly> {
    mpoly_in(&XY)
}

/// Sylvester matrix of two coefficient vectors, low degree first.
pub fn sylvester(f: &[Scalar], g: &[Scalar]) -> Vec<Vec<Scalar>> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::new();
    for (src, shifts) in [(f, n), (g, m)] {
        for s in 0..shifts {
            let mut row = vec![Scalar::zero(); size];
            for (i, c) in src.iter().rev().enumerate() {
                row[s + i] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Fraction-free (Bareiss) determinant, written out here so the check does not
/// reuse the library's linear algebra.
pub fn det(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut sign = Scalar::one();
    let mut prev = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -&sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.checked_div(&prev).unwrap();
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return Scalar::one();
    }
    &sign * &m[n - 1][n - 1]
}

pub fn germs() -> Vec<(MPoly, SingKind)> {
    let cat = Catalog::standard();
    let mut out: Vec<(MPoly, SingKind)> = [
        ("x^2 + y^2 + x^3*y", SingKind::A1),
        ("y^2 - x^3 + x*y^3", SingKind::A2),
        ("y^2 - x^4 + x^5", SingKind::A3),
        ("(y - x^2)^2 + 3*x^4 + y^3", SingKind::A3),
        ("x^3 - x*y^2 + y^4", SingKind::D4),
        ("x + y^2", SingKind::Smooth),
    ]
    .into_iter()
    .map(|(t, k)| (parse_poly(t, &XY).unwrap(), k))
    .collect();
    let rename = |p: &MPoly| {
        let (a, b) = (&p.vars()[0], &p.vars()[1]);
        let xy = var_list(&XY);
        p.substitute(&[(a.as_str(), MPoly::var(xy.clone(), "x").unwrap()), (b.as_str(), MPoly::var(xy, "y").unwrap())]).unwrap()
    };
    out.push((rename(cat.p("M15p_slice")), SingKind::A1));
    out.push((rename(cat.p("M15p_slice_u2")), SingKind::D4));
    out.push((rename(cat.p("M15pp_slice")), SingKind::A1));
    out.push((rename(cat.p("M15pp_slice_u34")), SingKind::A3));
    out
}

/// Integer matrices of determinant +-1 from products of elementary moves.
pub fn unimodular() -> impl Strategy<Value = [[i64; 2]; 2]> {
    prop::collection::vec((0u8..3, -3i64..=3), 1..=4).prop_map(|moves| {
        let mut m = [[1i64, 0], [0, 1]];
        for (kind, k) in moves {
            let e = match kind {
                0 => [[1, k], [0, 1]],
                1 => [[1, 0], [k, 1]],
                _ => [[0, 1], [1, 0]],
            };
            m = [
                [m[0][0] * e[0][0] + m[0][1] * e[1][0], m[0][0] * e[0][1] + m[0][1] * e[1][1]],
                [m[1][0] * e[0][0] + m[1][1] * e[1][0], m[1][0] * e[0][1] + m[1][1] * e[1][1]],
            ];
        }
        m
    })
}

/// `g(m00 x + m01 y, m10 x + m11 y)`.
pub fn linear_change(g: &MPoly, m: &[[i64; 2]; 2]) -> MPoly {
    let vars = var_list(&XY);
    let x = MPoly::var(vars.clone(), "x").unwrap();
    let y = MPoly::var(vars.clone(), "y").unwrap();
    let c = |k: i64| MPoly::constant(vars.clone(), Scalar::from(k));
    let nx = &(&c(m[0][0]) * &x) + &(&c(m[0][1]) * &y);
    let ny = &(&c(m[1][0]) * &x) + &(&c(m[1][1]) * &y);
    g.substitute(&[("x", nx), ("y", ny)]).unwrap()
}

/// `q_k(a, 1)` as a dense coefficient vector in `a`.
pub fn dense_q(cat: &Catalog, k: usize) -> Vec<Scalar> {
    let q = cat.p(&format!("q{k}"));
    let one = MPoly::constant(q.vars().clone(), Scalar::one());
    let a_only = q.substitute(&[("b", one)]).unwrap();
    dense::trim(a_only.as_univariate("a").unwrap())
}
