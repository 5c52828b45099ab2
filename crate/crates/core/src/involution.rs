//! Inner involutions from (ℤ,α)-gradings of height at most 2, and the
//! Casimir eigenvalue of `g₀` on the spin module of `g₁`.

use num::Zero;

use crate::error::{Error, Result};
use crate::grading::{q_profile, root_sum, ZGrading};
use crate::rat::{fmt_rat, int, rat, Rat};
use crate::report::{Check, Report};
use crate::rootsys::{identify_type, product_label, Root, RootSystem, SimpleType};

/// `g = g₀ ⊕ g₁` with `g₀ = g(−2) ⊕ g(0) ⊕ g(2)` and `g₁ = g(−1) ⊕ g(1)`.
#[derive(Clone, Debug)]
pub struct Involution {
    pub alpha: usize,
    pub d: i64,
    /// Positive roots of `g₀`: `Δ⁺(0) ∪ Δ(2)`.
    pub g0_roots: Vec<Root>,
    /// `Δ(1)`; the roots of `g₁` are `±Δ(1)`.
    pub g1_roots: Vec<Root>,
    pub g0_base: Vec<Root>,
    pub g0_components: Vec<SimpleType>,
    /// `g₀` has a one-dimensional centre (exactly when `d = 1`).
    pub center: bool,
    pub dim_g0: usize,
    pub dim_g1: usize,
    pub rho0: Vec<Rat>,
}

impl Involution {
    pub fn g0_label(&self) -> String {
        let mut label = product_label(&self.g0_components);
        if self.center {
            label = if label.is_empty() { "T1".into() } else { format!("{label}×T1") };
        }
        label
    }
}

pub fn inner_involution(g: &ZGrading<'_>) -> Result<Involution> {
    let alpha = g
        .defining_root()
        .ok_or_else(|| Error::Unsupported("involution needs a (Z,alpha)-grading".into()))?;
    if g.d() > 2 {
        return Err(Error::Unsupported(format!("d = {} gives no involution", g.d())));
    }
    let rs = g.root_system();
    let mut g0_roots = g.levi_positive().to_vec();
    g0_roots.extend_from_slice(g.positive_piece(2));
    let g0_base = rs.subsystem_base(&g0_roots);
    let g0_components: Vec<SimpleType> = identify_type(&rs.cartan_of(&g0_base))?
        .into_iter()
        .map(|c| c.simple_type)
        .collect();
    let center = g0_base.len() < rs.rank();
    let half = |v: Vec<i64>| -> Vec<Rat> { v.into_iter().map(|x| rat(x, 2)).collect() };
    let rho0 = half(root_sum(rs.rank(), &g0_roots));
    Ok(Involution {
        alpha,
        d: g.d(),
        dim_g0: rs.rank() + 2 * g0_roots.len(),
        dim_g1: 2 * g.m(),
        g1_roots: g.positive_piece(1).to_vec(),
        g0_roots,
        g0_base,
        g0_components,
        center,
        rho0,
    })
}

/// `(ρ, ρ) − (ρ₀, ρ₀)`, checked against `dim g₁ / 16`.
pub fn spin_eigenvalue(rs: &RootSystem, inv: &Involution) -> Result<Rat> {
    let value = rs.form(rs.rho(), rs.rho()) - rs.form(&inv.rho0, &inv.rho0);
    let expected = rat(inv.dim_g1 as i64, 16);
    if value != expected {
        return Err(Error::Consistency(format!(
            "spin eigenvalue {} ≠ dim g1/16 = {}",
            fmt_rat(&value),
            fmt_rat(&expected)
        )));
    }
    Ok(value)
}

/// `24 (ρ, ρ) − dim g`, which must vanish.
pub fn strange_formula_check(rs: &RootSystem) -> Rat {
    int(24) * rs.form(rs.rho(), rs.rho()) - int(rs.dim() as i64)
}

/// Structural identities for one involution.
pub fn involution_invariants(g: &ZGrading<'_>, inv: &Involution) -> Result<Report> {
    let rs = g.root_system();
    let label = format!("{} α{}", rs.simple_type(), inv.alpha + 1);
    let mut r = Report::new();
    r.push(Check::equal(
        format!("{label}: dim g0 + dim g1 = dim g"),
        inv.dim_g0 + inv.dim_g1,
        rs.dim(),
    ));
    r.push(Check::equal(
        format!("{label}: g0 semisimple iff d = 2"),
        !inv.center,
        inv.d == 2,
    ));
    let rank_sum: usize = inv.g0_components.iter().map(|t| t.rank()).sum();
    r.push(Check::equal(
        format!("{label}: rank of [g0, g0]"),
        rank_sum,
        rs.rank() - usize::from(inv.center),
    ));
    let weyl_ok = inv
        .g0_base
        .iter()
        .all(|b| rs.coroot_pairing(&inv.rho0, b) == int(1));
    r.check(format!("{label}: ρ0 is the Weyl vector of g0"), weyl_ok, inv.g0_label());
    let q = q_profile(g)?;
    let w = rs.fundamental_weight(inv.alpha);
    let rho1: Vec<Rat> = w.iter().map(|x| x * rat(q.q(1), 2)).collect();
    let levi_sum: Vec<Rat> = root_sum(rs.rank(), g.levi_positive()).into_iter().map(int).collect();
    r.check(
        format!("{label}: (ρ1, |Δ⁺(0)|) = 0"),
        rs.form(&rho1, &levi_sum).is_zero(),
        fmt_rat(&rs.form(&rho1, &levi_sum)),
    );
    r.push(Check::equal(
        format!("{label}: q(1) + 2q(2) = h* r"),
        q.q(1) + 2 * q.q(2),
        rs.h_star() * rs.length_ratio(inv.alpha),
    ));
    let spin = spin_eigenvalue(rs, inv);
    r.check(
        format!("{label}: spin eigenvalue = dim g1/16"),
        spin.is_ok(),
        match spin {
            Ok(v) => format!("{} = {}/16", fmt_rat(&v), inv.dim_g1),
            Err(e) => e.to_string(),
        },
    );
    Ok(r)
}
