//! Casimir eigenvalues `γ_α(k)` of the Levi part on the graded pieces, the
//! subalgebras `g^[k]`, and the values `δ_α(k)` that are determined by the
//! abelian data of `g_α(1)`.

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::grading::{piece_extremes, root_sum, QProfile, ZGrading};
use crate::rat::{self, fmt_rat, int, Rat};
use crate::report::{Check, Report};
use crate::rootsys::{build_root_system, identify_type, product_label, Component, Root};

/// `γ_α(1), …, γ_α(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaProfile {
    pub gamma: Vec<Rat>,
}

impl GammaProfile {
    pub fn at(&self, k: i64) -> &Rat {
        &self.gamma[k as usize - 1]
    }

    pub fn d(&self) -> i64 {
        self.gamma.len() as i64
    }
}

fn check_k(g: &ZGrading<'_>, k: i64) -> Result<usize> {
    let alpha = g
        .defining_root()
        .ok_or_else(|| Error::Unsupported("operation needs a (Z,alpha)-grading".into()))?;
    if k < 1 || k > g.d() {
        return Err(Error::Argument(format!("k = {k} outside 1..={}", g.d())));
    }
    Ok(alpha)
}

/// `k/(2h* r_α) · Σ_{i≥1} q_α(ki)`.
pub fn gamma_closed(g: &ZGrading<'_>, q: &QProfile, k: i64) -> Result<Rat> {
    let alpha = check_k(g, k)?;
    let rs = g.root_system();
    let sum: i64 = (1..).map(|i| k * i).take_while(|&j| j <= g.d()).map(|j| q.q(j)).sum();
    Ok(Rat::new(
        (k * sum).into(),
        (2 * rs.h_star() * rs.length_ratio(alpha)).into(),
    ))
}

pub fn gamma_profile(g: &ZGrading<'_>, q: &QProfile) -> Result<GammaProfile> {
    let gamma = (1..=g.d())
        .map(|k| gamma_closed(g, q, k))
        .collect::<Result<_>>()?;
    Ok(GammaProfile { gamma })
}

/// `(λ, λ + 2ρ_α(0))` with `λ` the highest root of `Δ_α(k)`.
pub fn gamma_weight_form(g: &ZGrading<'_>, k: i64) -> Result<Rat> {
    check_k(g, k)?;
    let rs = g.root_system();
    let (_, lambda) = piece_extremes(g, k)?;
    let two_rho0 = root_sum(rs.rank(), g.levi_positive());
    let shifted: Vec<Rat> = lambda
        .coeffs()
        .iter()
        .zip(&two_rho0)
        .map(|(&l, &r)| int(l as i64 + r))
        .collect();
    Ok(rs.form(&lambda.to_rat(), &shifted))
}

/// The graded subalgebra `g^[k] = ⊕_i g_α(ki)` and its simple factor `κ`
/// carrying the grading.
#[derive(Clone, Debug)]
pub struct SubalgebraGk {
    pub k: i64,
    /// Positive roots of `g^[k]`.
    pub root_set: Vec<Root>,
    pub base: Vec<Root>,
    /// Components of the base; indices refer to `base`.
    pub components: Vec<Component>,
    /// Unique minimal root of `Δ_α(k)`, a simple root of `κ`.
    pub beta: Root,
    /// Index into `components`.
    pub kappa: usize,
    /// Positive roots of `κ`.
    pub kappa_roots: Vec<Root>,
    pub theta_bar: Root,
    pub kappa_h_star: i64,
    pub dynkin_index: Rat,
    pub transition_factor: Rat,
    /// `ϖ̄_β`, the fundamental weight of `κ` for `β`, in ambient coordinates.
    pub omega_bar: Vec<Rat>,
}

impl SubalgebraGk {
    pub fn component_label(&self) -> String {
        product_label(&self.components.iter().map(|c| c.simple_type).collect::<Vec<_>>())
    }

    pub fn kappa_type(&self) -> crate::rootsys::SimpleType {
        self.components[self.kappa].simple_type
    }
}

impl fmt::Display for SubalgebraGk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} g^[k]={} κ={} β={} θ̄={} ind={} T={}",
            self.k,
            self.component_label(),
            self.kappa_type(),
            self.beta,
            self.theta_bar,
            fmt_rat(&self.dynkin_index),
            fmt_rat(&self.transition_factor)
        )
    }
}

pub fn build_gk(g: &ZGrading<'_>, k: i64) -> Result<SubalgebraGk> {
    let alpha = check_k(g, k)?;
    let rs = g.root_system();
    let root_set: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|r| r.coeff(alpha) as i64 % k == 0)
        .cloned()
        .collect();
    let base = rs.subsystem_base(&root_set);
    let sub_cartan = rs.cartan_of(&base);
    let components = identify_type(&sub_cartan)?;
    let rank_sum: usize = components.iter().map(|c| c.simple_type.rank()).sum();
    if rank_sum != base.len() || base.len() > rs.rank() {
        return Err(Error::Consistency(format!("g^[{k}] is not semisimple")));
    }
    let (beta, _) = piece_extremes(g, k)?;
    let beta_pos = base
        .iter()
        .position(|b| *b == beta)
        .ok_or_else(|| Error::Consistency(format!("β = {beta} is not simple in g^[{k}]")))?;
    let kappa = components
        .iter()
        .position(|c| c.indices.contains(&beta_pos))
        .expect("every base root lies in a component");
    let kappa_base: Vec<&Root> = components[kappa].indices.iter().map(|&i| &base[i]).collect();
    let kappa_roots: Vec<Root> = root_set
        .iter()
        .filter(|r| kappa_base.iter().any(|b| rs.int_form(r.coeffs(), b.coeffs()) != 0))
        .cloned()
        .collect();
    let theta_bar = kappa_roots
        .iter()
        .max_by_key(|r| r.height())
        .expect("κ has roots")
        .clone();
    let kappa_type = components[kappa].simple_type;
    let kappa_h_star = build_root_system(kappa_type).h_star();
    let dynkin_index = rs.root_form(rs.theta(), rs.theta()) / rs.root_form(&theta_bar, &theta_bar);
    let transition_factor = Rat::new(kappa_h_star.into(), rs.h_star().into()) / &dynkin_index;

    let kb: Vec<Root> = kappa_base.iter().map(|r| (*r).clone()).collect();
    let kc: Vec<Vec<Rat>> = rs
        .cartan_of(&kb)
        .iter()
        .map(|row| row.iter().map(|&x| int(x)).collect())
        .collect();
    let kc_inv = rat::invert(&kc).ok_or_else(|| Error::Consistency("singular Cartan".into()))?;
    let beta_in_kappa = kb.iter().position(|b| *b == beta).expect("β is in κ");
    let mut omega_bar = vec![Rat::zero(); rs.rank()];
    for (j, b) in kb.iter().enumerate() {
        for (acc, &c) in omega_bar.iter_mut().zip(b.coeffs()) {
            *acc += &kc_inv[beta_in_kappa][j] * int(c as i64);
        }
    }

    let gk = SubalgebraGk {
        k,
        root_set,
        base,
        components,
        beta,
        kappa,
        kappa_roots,
        theta_bar,
        kappa_h_star,
        dynkin_index,
        transition_factor,
        omega_bar,
    };
    let report = gk_invariants(g, &gk);
    if let Some(bad) = report.failures().next() {
        return Err(Error::Consistency(bad.to_string()));
    }
    Ok(gk)
}

/// Structural facts about `g^[k]` that must hold for every grading.
pub fn gk_invariants(g: &ZGrading<'_>, gk: &SubalgebraGk) -> Report {
    let rs = g.root_system();
    let alpha = g.defining_root().expect("alpha grading");
    let mut r = Report::new();
    let label = format!("{} α{} k={}", rs.simple_type(), alpha + 1, gk.k);
    // κ meets every nonzero degree: κ_β(i) = g_α(ki) for i ≠ 0
    let outside = gk
        .root_set
        .iter()
        .filter(|x| x.coeff(alpha) != 0)
        .any(|x| !gk.kappa_roots.contains(x));
    r.check(format!("{label}: graded part lies in κ"), !outside, gk.to_string());
    let expected_kappa = build_root_system(gk.kappa_type()).num_positive();
    r.push(Check::equal(
        format!("{label}: |Δ⁺(κ)| matches its type"),
        gk.kappa_roots.len(),
        expected_kappa,
    ));
    if gk.k == g.d() {
        r.push(Check::equal(format!("{label}: ind = 1 at k = d"), gk.dynkin_index.clone(), int(1)));
        r.check(
            format!("{label}: θ̄ = θ at k = d"),
            &gk.theta_bar == rs.theta(),
            gk.theta_bar.to_string(),
        );
    }
    let a = rs.simple_root(alpha);
    let factor = int(gk.k) * rs.root_form(a, a) / rs.root_form(&gk.beta, &gk.beta);
    let scaled: Vec<Rat> = gk.omega_bar.iter().map(|x| x * &factor).collect();
    r.check(
        format!("{label}: ϖ_α = k (α,α)/(β,β) ϖ̄_β"),
        scaled.as_slice() == rs.fundamental_weight(alpha),
        format!("factor {}", fmt_rat(&factor)),
    );
    r
}

/// `T · γ̄_β(1)`, with `γ̄_β(1) = q̄_β / (2h*(κ) r̄_β)` computed inside `κ`.
pub fn gamma_via_gk(g: &ZGrading<'_>, k: i64) -> Result<Rat> {
    let gk = build_gk(g, k)?;
    Ok(gamma_from_gk(g, &gk))
}

pub fn gamma_from_gk(g: &ZGrading<'_>, gk: &SubalgebraGk) -> Rat {
    let rs = g.root_system();
    let alpha = g.defining_root().expect("alpha grading");
    let r_bar_roots: Vec<Root> = gk
        .kappa_roots
        .iter()
        .filter(|x| x.coeff(alpha) > 0)
        .cloned()
        .collect();
    let sum: Vec<Rat> = root_sum(rs.rank(), &r_bar_roots).into_iter().map(int).collect();
    let q_bar = rs.coroot_pairing(&sum, &gk.beta);
    let r_bar = rs.root_form(&gk.theta_bar, &gk.theta_bar) / rs.root_form(&gk.beta, &gk.beta);
    let gamma_bar = q_bar / (int(2 * gk.kappa_h_star) * r_bar);
    &gk.transition_factor * gamma_bar
}

/// `q_α(k)/γ_α(k)` for `k > d/2`, checked against
/// `(2h*/k) · (β,β)/(α,α) · ind(κ ↪ g)`.
pub fn ratio_check(g: &ZGrading<'_>, q: &QProfile, k: i64) -> Result<Rat> {
    let alpha = check_k(g, k)?;
    if 2 * k <= g.d() {
        return Err(Error::Unsupported(format!("ratio needs k > d/2 (k = {k}, d = {})", g.d())));
    }
    let rs = g.root_system();
    let gamma = gamma_closed(g, q, k)?;
    let lhs = int(q.q(k)) / &gamma;
    let gk = build_gk(g, k)?;
    let a = rs.simple_root(alpha);
    let rhs = Rat::new((2 * rs.h_star()).into(), k.into())
        * rs.root_form(&gk.beta, &gk.beta)
        / rs.root_form(a, a)
        * &gk.dynkin_index;
    if lhs != rhs {
        return Err(Error::Consistency(format!(
            "q(k)/γ(k) = {} but the g^[k] side gives {}",
            fmt_rat(&lhs),
            fmt_rat(&rhs)
        )));
    }
    Ok(lhs)
}

/// `δ_α(m) = q_α(1)² (ϖ_α, ϖ_α)`, checked against `m q_α(1)/(2h* r_α)`.
pub fn delta_top(g: &ZGrading<'_>, q: &QProfile) -> Result<Rat> {
    let alpha = check_k(g, 1)?;
    let rs = g.root_system();
    let w = rs.fundamental_weight(alpha);
    let q1 = int(q.q(1));
    let value = &q1 * &q1 * rs.form(w, w);
    let other = int(g.m() as i64) * &q1 / int(2 * rs.h_star() * rs.length_ratio(alpha));
    if value != other {
        return Err(Error::Consistency(format!(
            "δ(m): {} ≠ {}",
            fmt_rat(&value),
            fmt_rat(&other)
        )));
    }
    Ok(value)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaValue {
    Determined(Rat),
    Undetermined,
}

impl fmt::Display for DeltaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaValue::Determined(x) => write!(f, "{}", fmt_rat(x)),
            DeltaValue::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// `δ_α(1), …, δ_α(m)` given the maximal abelian dimension `r` in `g_α(1)`.
/// Values strictly between `r` and `m − r` are not determined by this data.
pub fn delta_sequence(g: &ZGrading<'_>, q: &QProfile, max_ab: usize) -> Result<Vec<(usize, DeltaValue)>> {
    let alpha = check_k(g, 1)?;
    let rs = g.root_system();
    let m = g.m();
    if max_ab > m {
        return Err(Error::Argument(format!("abelian dimension {max_ab} exceeds m = {m}")));
    }
    let gamma1 = gamma_closed(g, q, 1)?;
    let unit = Rat::new(q.q(1).into(), (2 * rs.h_star() * rs.length_ratio(alpha)).into());
    let top = delta_top(g, q)?;
    let mut out = Vec::with_capacity(m);
    for k in 1..=m {
        let low = (k <= max_ab).then(|| int(k as i64) * &gamma1);
        let high = (m - k <= max_ab).then(|| {
            let j = (m - k) as i64;
            int(j) * &gamma1 + int(m as i64 - 2 * j) * &unit
        });
        let value = match (low, high) {
            (Some(a), Some(b)) => {
                if a != b {
                    return Err(Error::Consistency(format!("δ({k}) has two values")));
                }
                DeltaValue::Determined(a)
            }
            (Some(a), None) | (None, Some(a)) => DeltaValue::Determined(a),
            (None, None) => DeltaValue::Undetermined,
        };
        out.push((k, value));
    }
    if out.last().map(|x| &x.1) != Some(&DeltaValue::Determined(top)) {
        return Err(Error::Consistency("δ(m) disagrees with the top value".into()));
    }
    Ok(out)
}

/// Identities tying `γ_α` to `q_α`, `h*` and `r_α`.
pub fn gamma_invariants(g: &ZGrading<'_>, q: &QProfile, gp: &GammaProfile) -> Report {
    let rs = g.root_system();
    let alpha = g.defining_root().expect("alpha grading");
    let label = format!("{} α{}", rs.simple_type(), alpha + 1);
    let d = gp.d();
    let hs = rs.h_star();
    let r_a = rs.length_ratio(alpha);
    let two_hr = 2 * hs * r_a;
    let mut r = Report::new();
    let g1 = gp.at(1).clone();
    let gd = gp.at(d).clone();
    r.push(Check::equal(format!("{label}: d γ(1) + γ(d) = 1"), int(d) * &g1 + &gd, int(1)));
    r.check(
        format!("{label}: 1/(2d) ≤ γ(1) < 1/d"),
        Rat::new(1.into(), (2 * d).into()) <= g1 && g1 < Rat::new(1.into(), d.into()),
        fmt_rat(&g1),
    );
    let max = gp.gamma.iter().max().expect("d ≥ 1");
    r.check(format!("{label}: γ(i) ≤ 1/2"), *max <= rat::rat(1, 2), fmt_rat(max));
    if d >= 2 {
        let g2 = gp.at(2);
        r.check(
            format!("{label}: 2γ(1) > γ(2)"),
            int(2) * &g1 > *g2,
            format!("γ(1) = {}, γ(2) = {}", fmt_rat(&g1), fmt_rat(g2)),
        );
        if d % 2 == 1 {
            r.check(
                format!("{label}: d odd ⇒ γ(1) > γ(2)"),
                g1 > *g2,
                format!("γ(1) = {}, γ(2) = {}", fmt_rat(&g1), fmt_rat(g2)),
            );
        }
    }
    r.push(Check::equal(
        format!("{label}: γ(d) = d q(d)/(2h* r)"),
        gd.clone(),
        Rat::new((d * q.q(d)).into(), two_hr.into()),
    ));
    r.push(Check::equal(
        format!("{label}: γ(d) = 1 − d q/(2h* r)"),
        gd,
        int(1) - Rat::new((d * q.q_total).into(), two_hr.into()),
    ));
    r.push(Check::equal(
        format!("{label}: d (q + q(d)) = 2h* r"),
        d * (q.q_total + q.q(d)),
        two_hr,
    ));
    r.check(
        format!("{label}: 2h* r / d ∈ ℕ"),
        two_hr % d == 0,
        format!("{two_hr}/{d}"),
    );
    if d == 1 {
        r.push(Check::equal(format!("{label}: d = 1 ⇒ γ(1) = 1/2"), g1.clone(), rat::rat(1, 2)));
    }
    let theta = rs.theta();
    let touching: Vec<usize> = (0..rs.rank())
        .filter(|&b| rs.int_form(theta.coeffs(), rs.simple_root(b).coeffs()) != 0)
        .collect();
    // A1 is excluded: there θ = 2ϖ but d = 1
    if touching == [alpha] && d == 2 {
        r.push(Check::equal(
            format!("{label}: θ ∈ ℕϖ_α̂ ⇒ γ(1) = (h*−1)/(2h*)"),
            g1,
            Rat::new((hs - 1).into(), (2 * hs).into()),
        ));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{alpha_grading, q_profile};
    use crate::rat::rat;
    use crate::rootsys::{RootSystem, SimpleType};

    fn rs(t: &str) -> RootSystem {
        build_root_system(t.parse().unwrap())
    }

    fn gammas(rs: &RootSystem, a: usize) -> Vec<Rat> {
        let g = alpha_grading(rs, a).unwrap();
        let q = q_profile(&g).unwrap();
        gamma_profile(&g, &q).unwrap().gamma
    }

    #[test]
    fn closed_formula_values() {
        let e8 = rs("E8");
        assert_eq!(gammas(&e8, 1), vec![rat(19, 60), rat(18, 60), rat(3, 60)]);
        assert_eq!(gammas(&rs("F4"), 1)[3], rat(8, 36));
        assert_eq!(
            gammas(&e8, 3),
            vec![rat(11, 60), rat(10, 60), rat(9, 60), rat(8, 60), rat(5, 60)]
        );
        for a in 0..5 {
            assert_eq!(gammas(&rs("A5"), a), vec![rat(1, 2)]);
        }
    }

    #[test]
    fn weight_form_values() {
        let e6 = rs("E6");
        let g = alpha_grading(&e6, 2).unwrap();
        assert_eq!(gamma_weight_form(&g, 2).unwrap(), rat(6, 24));
        for n in 2..=8 {
            let b = build_root_system(SimpleType::new(crate::rootsys::Family::B, n).unwrap());
            let g = alpha_grading(&b, n - 1).unwrap();
            let want = Rat::new((2 * n as i64 - 2).into(), (2 * (2 * n as i64 - 1)).into());
            assert_eq!(gamma_weight_form(&g, 2).unwrap(), want, "B{n}");
        }
    }

    #[test]
    fn three_routes_agree_everywhere() {
        for t in SimpleType::all_up_to(8) {
            let rs = build_root_system(t);
            for a in 0..rs.rank() {
                let g = alpha_grading(&rs, a).unwrap();
                let q = q_profile(&g).unwrap();
                for k in 1..=g.d() {
                    let c = gamma_closed(&g, &q, k).unwrap();
                    assert_eq!(c, gamma_weight_form(&g, k).unwrap(), "{t} α{} k={k}", a + 1);
                    assert_eq!(c, gamma_via_gk(&g, k).unwrap(), "{t} α{} k={k}", a + 1);
                }
            }
        }
    }

    #[test]
    fn via_gk_values() {
        let e8 = rs("E8");
        assert_eq!(gamma_via_gk(&alpha_grading(&e8, 1).unwrap(), 3).unwrap(), rat(3, 60));
        assert_eq!(gamma_via_gk(&alpha_grading(&e8, 4).unwrap(), 6).unwrap(), rat(6, 60));
        let e7 = rs("E7");
        assert_eq!(gamma_via_gk(&alpha_grading(&e7, 3).unwrap(), 2).unwrap(), rat(4, 18));
    }

    #[test]
    fn gk_structure() {
        let g2 = rs("G2");
        let g = alpha_grading(&g2, 0).unwrap();
        let gk = build_gk(&g, 3).unwrap();
        assert_eq!(gk.kappa_type().to_string(), "A2");
        assert_eq!(&gk.theta_bar, g2.theta());
        assert_eq!(gk.dynkin_index, int(1));
        assert_eq!(gk.beta.to_string(), "31");

        let e8 = rs("E8");
        let g = alpha_grading(&e8, 1).unwrap();
        let gk = build_gk(&g, 3).unwrap();
        assert_eq!(gk.component_label(), "E6×A2");
        assert_eq!(gk.kappa_type().to_string(), "A2");
        assert!(build_gk(&g, 4).is_err());
        assert!(build_gk(&g, 0).is_err());
    }

    #[test]
    fn ratios() {
        let e8 = rs("E8");
        let g = alpha_grading(&e8, 1).unwrap();
        let q = q_profile(&g).unwrap();
        assert_eq!(ratio_check(&g, &q, 3).unwrap(), int(20));
        assert!(matches!(ratio_check(&g, &q, 1), Err(Error::Unsupported(_))));
        let g = alpha_grading(&e8, 4).unwrap();
        let q = q_profile(&g).unwrap();
        assert_eq!(ratio_check(&g, &q, 4).unwrap(), int(15));
        for t in SimpleType::all_up_to(8) {
            let rs = build_root_system(t);
            for a in 0..rs.rank() {
                let g = alpha_grading(&rs, a).unwrap();
                let q = q_profile(&g).unwrap();
                let d = g.d();
                let top = ratio_check(&g, &q, d).unwrap();
                assert_eq!(top, Rat::new((2 * rs.h_star() * rs.length_ratio(a)).into(), d.into()));
                for k in (d / 2 + 1)..=d {
                    ratio_check(&g, &q, k).unwrap();
                }
            }
        }
    }

    #[test]
    fn invariants_everywhere() {
        for t in SimpleType::all_up_to(8) {
            let rs = build_root_system(t);
            for a in 0..rs.rank() {
                let g = alpha_grading(&rs, a).unwrap();
                let q = q_profile(&g).unwrap();
                let gp = gamma_profile(&g, &q).unwrap();
                let report = gamma_invariants(&g, &q, &gp);
                assert!(report.all_passed(), "{report}");
            }
        }
    }

    #[test]
    fn strict_middle_examples() {
        for (t, a) in [("E8", 4), ("E8", 5), ("F4", 1)] {
            let gm = gammas(&rs(t), a);
            assert!(int(2) * &gm[0] > gm[1] && gm[1] > gm[0], "{t} {a}");
        }
    }

    #[test]
    fn delta_top_values() {
        // cominuscule: δ(m) = m/2 and m = c h*
        let e7 = rs("E7");
        let g = alpha_grading(&e7, 6).unwrap();
        let q = q_profile(&g).unwrap();
        assert_eq!(g.d(), 2);
        let e6 = rs("E6");
        let g = alpha_grading(&e6, 0).unwrap();
        let q1 = q_profile(&g).unwrap();
        let m = g.m() as i64;
        assert_eq!(delta_top(&g, &q1).unwrap(), rat(m, 2));
        assert_eq!(int(m), &e6.inverse_cartan()[0][0] * int(e6.h_star()));
        // θ = ϖ_α̂: δ(m) = (h* − 2)²/h*
        let _ = q;
        for (t, hat) in [("E6", 5), ("E7", 5), ("E8", 0), ("F4", 3), ("G2", 1), ("D6", 1)] {
            let rs = rs(t);
            let g = alpha_grading(&rs, hat).unwrap();
            let q = q_profile(&g).unwrap();
            let hs = rs.h_star();
            assert_eq!(delta_top(&g, &q).unwrap(), rat((hs - 2) * (hs - 2), hs), "{t}");
        }
        let g2 = rs("G2");
        let g = alpha_grading(&g2, 0).unwrap();
        let q = q_profile(&g).unwrap();
        assert_eq!(q.q_by_level, vec![1, 1, 3]);
        let w = g2.fundamental_weight(0);
        assert_eq!(delta_top(&g, &q).unwrap(), g2.form(w, w));
    }

    #[test]
    fn delta_sequences() {
        // θ = ϖ_α̂ in E7, max abelian dimension in g(1) is h* − 2 = 16 = m/2
        let e7 = rs("E7");
        let g = alpha_grading(&e7, 5).unwrap();
        let q = q_profile(&g).unwrap();
        let m = g.m();
        assert_eq!(m, 32);
        let seq = delta_sequence(&g, &q, 16).unwrap();
        let hs = e7.h_star();
        for k in 0..=16usize {
            let want = rat((hs - 2) * (hs - 2), hs) - rat(k as i64 * (hs - 3), 2 * hs);
            assert_eq!(seq[m - k - 1].1, DeltaValue::Determined(want), "k={k}");
        }
        let values = |seq: &[(usize, DeltaValue)]| -> Vec<Rat> {
            seq.iter()
                .map(|(_, v)| match v {
                    DeltaValue::Determined(x) => x.clone(),
                    DeltaValue::Undetermined => panic!("all determined"),
                })
                .collect()
        };
        // q < 2q(1) here, so the sequence strictly increases
        assert!(q.q_total < 2 * q.q(1));
        assert!(values(&seq).windows(2).all(|w| w[0] < w[1]));

        // d ≥ 3 and a half-dimensional abelian subspace: unimodal, peak at m/2
        let e8 = rs("E8");
        let g = alpha_grading(&e8, 1).unwrap();
        let q = q_profile(&g).unwrap();
        let m = g.m();
        assert!(q.q_total > 2 * q.q(1));
        let v = values(&delta_sequence(&g, &q, m / 2).unwrap());
        assert!(v[..m / 2].windows(2).all(|w| w[0] < w[1]));
        assert!(v[m / 2 - 1..].windows(2).all(|w| w[0] > w[1]));

        // bad case leaves a gap
        let f4 = rs("F4");
        let g = alpha_grading(&f4, 0).unwrap();
        let q = q_profile(&g).unwrap();
        let seq = delta_sequence(&g, &q, 2).unwrap();
        let undetermined: Vec<usize> = seq
            .iter()
            .filter(|(_, v)| *v == DeltaValue::Undetermined)
            .map(|x| x.0)
            .collect();
        assert_eq!(undetermined, vec![3, 4, 5]);
        assert_eq!(seq.last().unwrap().1, DeltaValue::Determined(delta_top(&g, &q).unwrap()));
        assert!(delta_sequence(&g, &q, 9).is_err());
    }
}
