//! Exact symbolic verification of polynomial identities, orbit degrees, surface
//! germs and intersection numbers on the one-parameter family of quadric
//! threefolds `Q_u : u(xw - z^2) + (z^2 - yt) = 0` with the torus action of
//! weights `(0, 1, 3, 5, 6)`.

pub mod catalog;
pub mod checks;
pub mod chowcalc;
pub mod curvelab;
pub mod exactalg;
pub mod germlab;
pub mod report;
pub mod torusgeom;
