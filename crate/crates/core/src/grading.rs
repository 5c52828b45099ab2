//! ℤ-gradings of a root system defined by a height function on the simple
//! roots, and the integers `q_α(i)` attached to a (ℤ,α)-grading.

use std::collections::HashSet;

use num::Zero;

use crate::error::{Error, Result};
use crate::rat::{int, Rat};
use crate::report::{Check, Report};
use crate::rootsys::{Root, RootSystem};

/// A ℤ-grading `Δ = ⊔ Δ(i)` given by `f: Π → ℤ≥0`.
#[derive(Clone, Debug)]
pub struct ZGrading<'a> {
    rs: &'a RootSystem,
    heights: Vec<i64>,
    defining_root: Option<usize>,
    d: i64,
    /// `pieces[i]` is `Δ(i)` for `1 ≤ i ≤ d`; `pieces[0]` is `Δ⁺(0)`.
    pieces: Vec<Vec<Root>>,
}

/// The (ℤ,α)-grading: `Δ_α(i)` collects the roots whose α-coefficient is `i`.
pub fn alpha_grading(rs: &RootSystem, alpha: usize) -> Result<ZGrading<'_>> {
    if alpha >= rs.rank() {
        return Err(Error::Argument(format!(
            "simple root index {} out of range 1..={}",
            alpha + 1,
            rs.rank()
        )));
    }
    let mut f = vec![0; rs.rank()];
    f[alpha] = 1;
    general_grading(rs, &f)
}

pub fn general_grading<'a>(rs: &'a RootSystem, f: &[i64]) -> Result<ZGrading<'a>> {
    if f.len() != rs.rank() {
        return Err(Error::Argument(format!(
            "height function has {} values for rank {}",
            f.len(),
            rs.rank()
        )));
    }
    if f.iter().any(|&x| x < 0) {
        return Err(Error::Argument("height function must be nonnegative".into()));
    }
    if f.iter().all(|&x| x == 0) {
        return Err(Error::Argument("height function is identically zero".into()));
    }
    let grade = |r: &Root| -> i64 { r.coeffs().iter().zip(f).map(|(&c, &w)| c as i64 * w).sum() };
    let d = grade(rs.theta());
    let mut pieces = vec![Vec::new(); d as usize + 1];
    for r in rs.positive_roots() {
        pieces[grade(r) as usize].push(r.clone());
    }
    // with values in {0, 1} every degree up to d is attained; larger values may skip degrees
    if f.iter().all(|&x| x <= 1) && pieces[1..].iter().any(Vec::is_empty) {
        return Err(Error::Consistency("empty graded piece below the top degree".into()));
    }
    let defining_root = match f.iter().filter(|&&x| x != 0).count() {
        1 => f.iter().position(|&x| x == 1),
        _ => None,
    };
    Ok(ZGrading {
        rs,
        heights: f.to_vec(),
        defining_root,
        d,
        pieces,
    })
}

impl<'a> ZGrading<'a> {
    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    /// Present iff this is a (ℤ,α)-grading.
    pub fn defining_root(&self) -> Option<usize> {
        self.defining_root
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn grade(&self, r: &Root) -> i64 {
        r.coeffs()
            .iter()
            .zip(&self.heights)
            .map(|(&c, &w)| c as i64 * w)
            .sum()
    }

    /// `Δ⁺(0)`, the positive roots of the Levi part.
    pub fn levi_positive(&self) -> &[Root] {
        &self.pieces[0]
    }

    /// `Δ(i)` for `1 ≤ i ≤ d`; empty outside that range.
    pub fn positive_piece(&self, i: i64) -> &[Root] {
        if i >= 1 && i <= self.d {
            &self.pieces[i as usize]
        } else {
            &[]
        }
    }

    /// `Δ(i)` for any integer `i`, with `Δ(−i) = −Δ(i)` and `Δ(0) = ±Δ⁺(0)`.
    pub fn piece(&self, i: i64) -> Vec<Root> {
        match i {
            0 => self.pieces[0]
                .iter()
                .cloned()
                .chain(self.pieces[0].iter().map(Root::neg))
                .collect(),
            i if i > 0 => self.positive_piece(i).to_vec(),
            i => self.positive_piece(-i).iter().map(Root::neg).collect(),
        }
    }

    pub fn dim_piece(&self, i: i64) -> usize {
        if i == 0 {
            self.rs.rank() + 2 * self.pieces[0].len()
        } else {
            self.positive_piece(i.abs()).len()
        }
    }

    /// `m = dim g(1)`.
    pub fn m(&self) -> usize {
        self.dim_piece(1)
    }

    fn require_alpha(&self) -> Result<usize> {
        self.defining_root
            .ok_or_else(|| Error::Unsupported("operation needs a (Z,alpha)-grading".into()))
    }
}

/// Integers `q_α` and `q_α(i)` with `|Δ_α(i)| = q_α(i) ϖ_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QProfile {
    pub alpha: usize,
    pub q_total: i64,
    pub q_by_level: Vec<i64>,
    pub dims: Vec<usize>,
}

impl QProfile {
    /// `q_α(i)`, zero above the top degree.
    pub fn q(&self, i: i64) -> i64 {
        if i >= 1 && (i as usize) <= self.q_by_level.len() {
            self.q_by_level[i as usize - 1]
        } else {
            0
        }
    }

    pub fn d(&self) -> i64 {
        self.q_by_level.len() as i64
    }
}

/// Sum of a set of roots as an integer vector.
pub fn root_sum(rank: usize, roots: &[Root]) -> Vec<i64> {
    let mut s = vec![0i64; rank];
    for r in roots {
        for (acc, &c) in s.iter_mut().zip(r.coeffs()) {
            *acc += c as i64;
        }
    }
    s
}

/// Solves `v = q ϖ` exactly, returning `None` when `v` is not proportional.
fn proportionality(v: &[i64], w: &[Rat]) -> Option<Rat> {
    let pivot = w.iter().position(|x| !x.is_zero())?;
    let q = int(v[pivot]) / &w[pivot];
    v.iter()
        .zip(w)
        .all(|(&a, b)| int(a) == &q * b)
        .then_some(q)
}

pub fn q_profile(g: &ZGrading<'_>) -> Result<QProfile> {
    let alpha = g.require_alpha()?;
    let rs = g.rs;
    let w = rs.fundamental_weight(alpha);
    let mut q_by_level = Vec::with_capacity(g.d as usize);
    let mut dims = Vec::with_capacity(g.d as usize);
    for i in 1..=g.d {
        let piece = g.positive_piece(i);
        let sum = root_sum(rs.rank(), piece);
        let q = proportionality(&sum, w).ok_or_else(|| {
            Error::Consistency(format!("|Δ(α{}, {i})| is not a multiple of ϖ", alpha + 1))
        })?;
        if !q.is_integer() || q <= Rat::zero() {
            return Err(Error::Consistency(format!("q({i}) = {q} is not a positive integer")));
        }
        q_by_level.push(q.to_integer().try_into().expect("small q"));
        dims.push(piece.len());
    }
    let all_positive: Vec<Root> = (1..=g.d).flat_map(|i| g.positive_piece(i).to_vec()).collect();
    let q_total = proportionality(&root_sum(rs.rank(), &all_positive), w)
        .filter(Rat::is_integer)
        .ok_or_else(|| Error::Consistency("|R_α| is not an integral multiple of ϖ".into()))?
        .to_integer()
        .try_into()
        .expect("small q");
    let profile = QProfile {
        alpha,
        q_total,
        q_by_level,
        dims,
    };
    let report = q_profile_invariants(rs, &profile);
    if let Some(bad) = report.failures().next() {
        return Err(Error::Consistency(bad.to_string()));
    }
    Ok(profile)
}

/// Invariants every q-profile must satisfy.
pub fn q_profile_invariants(rs: &RootSystem, p: &QProfile) -> Report {
    let mut r = Report::new();
    let d = p.d();
    let c = rs.inverse_cartan()[p.alpha][p.alpha].clone();
    r.push(Check::equal(
        "sum of q(i) = q",
        p.q_by_level.iter().sum::<i64>(),
        p.q_total,
    ));
    for i in 1..=d {
        let lhs = int(i * p.dims[i as usize - 1] as i64);
        let rhs = &c * int(p.q(i));
        r.push(Check::equal(format!("{i}·dim g({i}) = c·q({i})"), lhs, rhs));
    }
    for i in 1..d {
        r.push(Check::equal(format!("q({i}) = q({})", d - i), p.q(i), p.q(d - i)));
    }
    if d >= 2 {
        r.push(Check::equal(
            "dim g(d-1)·(d-1) = dim g(1)",
            p.dims[d as usize - 2] * (d as usize - 1),
            p.dims[0],
        ));
    }
    if d == 4 {
        r.push(Check::equal("q(4) + q(1) = q(2)", p.q(4) + p.q(1), p.q(2)));
    }
    r
}

/// Minimal and maximal elements of `members` under the order generated by
/// `γ → γ + η`, `η ∈ steps`. Both must be unique, and every member must lie
/// between them.
pub fn extremes_in(rs: &RootSystem, members: &[Root], steps: &[Root]) -> Result<(Root, Root)> {
    if members.is_empty() {
        return Err(Error::Range("empty root set".into()));
    }
    let set: HashSet<&[i32]> = members.iter().map(Root::coeffs).collect();
    let mut has_pred = vec![false; members.len()];
    let mut has_succ = vec![false; members.len()];
    let index: std::collections::HashMap<&[i32], usize> =
        members.iter().enumerate().map(|(i, r)| (r.coeffs(), i)).collect();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); members.len()];
    for (i, g) in members.iter().enumerate() {
        for eta in steps {
            let up = g.add(eta);
            if set.contains(up.coeffs()) && rs.is_root(up.coeffs()) {
                let j = index[up.coeffs()];
                has_succ[i] = true;
                has_pred[j] = true;
                succ[i].push(j);
            }
        }
    }
    let mins: Vec<usize> = (0..members.len()).filter(|&i| !has_pred[i]).collect();
    let maxs: Vec<usize> = (0..members.len()).filter(|&i| !has_succ[i]).collect();
    if mins.len() != 1 || maxs.len() != 1 {
        return Err(Error::Consistency(format!(
            "{} minimal and {} maximal elements",
            mins.len(),
            maxs.len()
        )));
    }
    let mut reached = vec![false; members.len()];
    let mut stack = vec![mins[0]];
    reached[mins[0]] = true;
    while let Some(i) = stack.pop() {
        for &j in &succ[i] {
            if !reached[j] {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    if reached.iter().any(|&x| !x) {
        return Err(Error::Consistency("piece is not generated by its minimal root".into()));
    }
    Ok((members[mins[0]].clone(), members[maxs[0]].clone()))
}

/// Lowest and highest root of `Δ(i)` as a `Δ⁺(0)`-module.
pub fn piece_extremes(g: &ZGrading<'_>, i: i64) -> Result<(Root, Root)> {
    if i == 0 {
        return Err(Error::Argument("extremes are defined for i ≠ 0".into()));
    }
    if i.abs() > g.d {
        return Err(Error::Range(format!("Δ({i}) is empty (d = {})", g.d)));
    }
    let (lo, hi) = extremes_in(g.rs, g.positive_piece(i.abs()), g.levi_positive())?;
    Ok(if i > 0 { (lo, hi) } else { (hi.neg(), lo.neg()) })
}

/// Checks the bounds on `q_α` over all simple roots, returning the witnesses.
pub fn q_bounds_check(rs: &RootSystem) -> Result<Report> {
    let n = rs.rank() as i64;
    let (h, hs) = rs.coxeter_numbers();
    let mut r = Report::new();
    let mut qs = Vec::new();
    for a in 0..rs.rank() {
        let g = alpha_grading(rs, a)?;
        qs.push((q_profile(&g)?.q_total, g.d));
    }
    let theta_s = rs.theta_s().clone();
    let theta = rs.theta().clone();
    for (a, &(q, d)) in qs.iter().enumerate() {
        let label = format!("{} α{}", rs.simple_type(), a + 1);
        let minuscule = rs.coroot_pairing(rs.fundamental_weight(a), &theta_s) == int(1);
        r.check(
            format!("{label}: q ≤ h, equality iff minuscule"),
            q <= h && ((q == h) == minuscule),
            format!("q = {q}, h = {h}, minuscule = {minuscule}"),
        );
        if rs.is_long(rs.simple_root(a)) {
            r.check(
                format!("{label}: long, q ≤ h*, equality iff d = 1"),
                q <= hs && ((q == hs) == (d == 1)),
                format!("q = {q}, h* = {hs}, d = {d}"),
            );
        }
        if theta != theta_s && rs.int_form(theta_s.coeffs(), rs.simple_root(a).coeffs()) != 0 {
            r.push(Check::equal(format!("{label}: (θs, α) ≠ 0 ⇒ q = h − 1"), q, h - 1));
        }
    }
    let min = qs.iter().map(|x| x.0).min().unwrap_or(0);
    let argmin: Vec<String> = (0..qs.len())
        .filter(|&a| qs[a].0 == min)
        .map(|a| format!("α{}", a + 1))
        .collect();
    r.check(
        format!("{}: min q = rank + 1", rs.simple_type()),
        min == n + 1,
        format!("min q = {min} at {}", argmin.join(",")),
    );
    let touching: Vec<usize> = (0..rs.rank())
        .filter(|&a| rs.int_form(theta.coeffs(), rs.simple_root(a).coeffs()) != 0)
        .collect();
    if let [a] = touching[..] {
        // θ = ϖ_α̂ exactly, as opposed to a proper multiple (types A1, C_n)
        if rs.coroot_pairing(&theta.to_rat(), rs.simple_root(a)) == int(1) {
            let (q, d) = qs[a];
            r.check(
                format!("{} α{}: θ fundamental ⇒ α̂ long, d = 2, q = h* − 1", rs.simple_type(), a + 1),
                rs.is_long(rs.simple_root(a)) && d == 2 && q == hs - 1,
                format!("q = {q}, d = {d}, h* = {hs}"),
            );
        }
    }
    Ok(r)
}
