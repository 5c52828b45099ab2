//! Verification suites over lists of simple types. Each suite returns a
//! [`Report`]; an `Err` means a computation broke a proved identity.

use std::collections::BTreeSet;

use crate::abelian::{
    abelian_b_ideals, abelian_report, complement_check, enumerate_b_stable_abelian, half_dim_bound_check,
    max_abelian_dim, max_abelian_via_ideals, mult_free_check, wedge2, Piece,
};
use crate::casimir::{
    build_gk, delta_sequence, gamma_closed, gamma_from_gk, gamma_invariants, gamma_profile, gamma_weight_form,
    gk_invariants, ratio_check, GammaProfile,
};
use crate::error::{Error, Result};
use crate::golden::{self, ReferenceRow};
use crate::grading::{alpha_grading, q_bounds_check, q_profile, q_profile_invariants, QProfile, ZGrading};
use crate::involution::{inner_involution, involution_invariants, spin_eigenvalue, strange_formula_check};
use crate::rat::{fmt_rat, int, Rat};
use crate::report::{Check, Report};
use crate::rootsys::{build_root_system, product_label, Family, RootSystem, SimpleType};

/// Wedge-2 and multiplicity checks only run on pieces up to this size.
pub const SMALL_PIECE: usize = 30;

/// Everything computed once per `(type, α)`.
pub struct AlphaCase<'a> {
    pub grading: ZGrading<'a>,
    pub q: QProfile,
    pub gamma: GammaProfile,
}

impl<'a> AlphaCase<'a> {
    pub fn new(rs: &'a RootSystem, alpha: usize) -> Result<Self> {
        let grading = alpha_grading(rs, alpha)?;
        let q = q_profile(&grading)?;
        let gamma = gamma_profile(&grading, &q)?;
        Ok(AlphaCase { grading, q, gamma })
    }

    pub fn label(&self) -> String {
        let rs = self.grading.root_system();
        format!("{} α{}", rs.simple_type(), self.q.alpha + 1)
    }
}

/// The reference row for one grading: γ, q, h*, r_α, and `g₀` when `d = 2`.
pub fn computed_row(rs: &RootSystem, alpha: usize) -> Result<ReferenceRow> {
    let c = AlphaCase::new(rs, alpha)?;
    let d = c.grading.d();
    let g0 = if d == 2 {
        let inv = inner_involution(&c.grading)?;
        Some(product_label(&inv.g0_components))
    } else {
        None
    };
    Ok(ReferenceRow {
        simple_type: rs.simple_type(),
        alpha: alpha + 1,
        d,
        gamma: c.gamma.gamma,
        q: c.q.q_by_level,
        h_star: Some(rs.h_star()),
        r: Some(rs.length_ratio(alpha)),
        g0,
    })
}

fn fmt_rats(xs: &[Rat]) -> String {
    xs.iter().map(fmt_rat).collect::<Vec<_>>().join(" ")
}

fn fmt_ints<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Compares a computed row with a reference row. Columns the reference
/// leaves blank are not compared.
pub fn compare_row(got: &ReferenceRow, want: &ReferenceRow) -> Check {
    let mut diffs = Vec::new();
    if got.d != want.d {
        diffs.push(format!("d {} vs {}", got.d, want.d));
    }
    if got.gamma != want.gamma {
        diffs.push(format!("γ [{}] vs [{}]", fmt_rats(&got.gamma), fmt_rats(&want.gamma)));
    }
    if got.q != want.q {
        diffs.push(format!("q [{}] vs [{}]", fmt_ints(&got.q), fmt_ints(&want.q)));
    }
    if want.h_star.is_some() && got.h_star != want.h_star {
        diffs.push(format!("h* {:?} vs {:?}", got.h_star, want.h_star));
    }
    if want.r.is_some() && got.r != want.r {
        diffs.push(format!("r {:?} vs {:?}", got.r, want.r));
    }
    if let Some(w) = &want.g0 {
        let g = got.g0.as_deref().unwrap_or("");
        if golden::normalize_label(g) != golden::normalize_label(w) {
            diffs.push(format!("g0 {g} vs {w}"));
        }
    }
    let name = format!("{} α{}: reference row", want.simple_type, want.alpha);
    if diffs.is_empty() {
        let mut detail = format!("γ = {}; q = {}", fmt_rats(&got.gamma), fmt_ints(&got.q));
        if let Some(g0) = &got.g0 {
            detail.push_str(&format!("; g0 = {g0}"));
        }
        Check::new(name, true, detail)
    } else {
        Check::new(name, false, diffs.join("; "))
    }
}

fn alphas_with_d_at_least(rs: &RootSystem, min_d: i64) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..rs.rank() {
        if alpha_grading(rs, a)?.d() >= min_d {
            out.push(a);
        }
    }
    Ok(out)
}

/// Reference rows for a type: transcribed for exceptional types, from the
/// parametric formulas for `B`, `C`, `D`, and empty for `A`.
pub fn reference_rows(t: SimpleType) -> Result<Vec<ReferenceRow>> {
    if t.is_exceptional() {
        Ok(golden::exceptional_gamma_rows()?
            .into_iter()
            .filter(|r| r.simple_type == t)
            .collect())
    } else {
        Ok(golden::classical_gamma_rows(t))
    }
}

/// Every grading with `d ≥ 2` reproduces its reference row, and no reference
/// row is left unmatched.
pub fn gamma_table_reproduction(types: &[SimpleType]) -> Result<Report> {
    let mut r = Report::new();
    for &t in types {
        let rs = build_root_system(t);
        let want = reference_rows(t)?;
        let present = alphas_with_d_at_least(&rs, 2)?;
        let represented: BTreeSet<usize> = present
            .iter()
            .map(|&a| golden::listed_representative(t, a + 1))
            .collect();
        let listed: BTreeSet<usize> = want.iter().map(|w| w.alpha).collect();
        r.push(Check::equal(
            format!("{t}: gradings with d ≥ 2, up to diagram symmetry"),
            fmt_ints(&represented.into_iter().collect::<Vec<_>>()),
            fmt_ints(&listed.into_iter().collect::<Vec<_>>()),
        ));
        for &a in &present {
            let rep = golden::listed_representative(t, a + 1);
            if let Some(w) = want.iter().find(|w| w.alpha == rep) {
                let mut c = compare_row(&computed_row(&rs, a)?, w);
                if rep != a + 1 {
                    c.name = format!("{t} α{}: reference row (listed as α{rep})", a + 1);
                }
                r.push(c);
            }
        }
    }
    Ok(r)
}

/// `(h, h*, q_α for every α)` against the reference lists.
pub fn q_lists(types: &[SimpleType]) -> Result<Report> {
    let mut r = Report::new();
    for &t in types {
        let rs = build_root_system(t);
        let (h, hs, want) = golden::q_list(t)?;
        let mut got = Vec::new();
        for a in 0..rs.rank() {
            got.push(q_profile(&alpha_grading(&rs, a)?)?.q_total);
        }
        r.push(Check::equal(
            format!("{t}: q-list"),
            format!("h = {}, h* = {}, q = {}", rs.h(), rs.h_star(), fmt_ints(&got)),
            format!("h = {h}, h* = {hs}, q = {}", fmt_ints(&want)),
        ));
    }
    Ok(r)
}

/// `γ_α(k)` by the closed formula, by the highest-weight formula and through
/// `g^[k]`, for every `α` and `1 ≤ k ≤ d`.
pub fn three_way(types: &[SimpleType]) -> Result<Report> {
    let mut r = Report::new();
    for &t in types {
        let rs = build_root_system(t);
        for a in 0..rs.rank() {
            let c = AlphaCase::new(&rs, a)?;
            let g = &c.grading;
            for k in 1..=g.d() {
                let closed = gamma_closed(g, &c.q, k)?;
                let weight = gamma_weight_form(g, k)?;
                let gk = build_gk(g, k)?;
                let via = gamma_from_gk(g, &gk);
                let agree = closed == weight && weight == via;
                r.check(
                    format!("{} k={k}: three-way γ", c.label()),
                    agree,
                    format!("{} / {} / {}", fmt_rat(&closed), fmt_rat(&weight), fmt_rat(&via)),
                );
            }
        }
    }
    Ok(r)
}

/// Exact identities for q, γ and the root system itself.
pub fn identities(types: &[SimpleType]) -> Result<Report> {
    let mut r = Report::new();
    for &t in types {
        let rs = build_root_system(t);
        let residual = strange_formula_check(&rs);
        let lhs = int(rs.dim() as i64) + &residual;
        r.check(
            format!("{t}: strange formula"),
            residual == int(0),
            format!("(ρ,ρ)·24 = {}", fmt_rat(&lhs)),
        );
        let suter = rs
            .positive_roots()
            .iter()
            .filter(|g| rs.int_form(rs.theta().coeffs(), g.coeffs()) > 0)
            .count() as i64;
        r.push(Check::equal(format!("{t}: #{{γ > 0 : (γ,θ) > 0}} = 2h* − 3"), suter, 2 * rs.h_star() - 3));
        r.push(Check::equal(
            format!("{t}: h* = 1 + ⟨ρ, θ∨⟩"),
            rs.dual_coxeter_via_rho(),
            int(rs.h_star()),
        ));
        let theta = rs.theta().to_rat();
        r.push(Check::equal(
            format!("{t}: (θ,θ) = 1/h*"),
            rs.canonical_pairing(&theta, &theta)?,
            Rat::new(1.into(), rs.h_star().into()),
        ));
        r.extend(q_bounds_check(&rs)?);
        for a in 0..rs.rank() {
            let c = AlphaCase::new(&rs, a)?;
            let label = c.label();
            for mut check in q_profile_invariants(&rs, &c.q).checks {
                check.name = format!("{label}: {}", check.name);
                r.push(check);
            }
            r.extend(gamma_invariants(&c.grading, &c.q, &c.gamma));
        }
    }
    Ok(r)
}

/// `g^[k]` structure, the `q(k)/γ(k)` ratio for `k > d/2`, and the
/// δ-sequence, for every grading.
pub fn subalgebras(types: &[SimpleType]) -> Result<Report> {
    let mut r = Report::new();
    for &t in types {
        let rs = build_root_system(t);
        for a in 0..rs.rank() {
            let c = AlphaCase::new(&rs, a)?;
            let g = &c.grading;
            for k in 1..=g.d() {
                r.extend(gk_invariants(g, &build_gk(g, k)?));
                if 2 * k > g.d() {
                    let ratio = ratio_check(g, &c.q, k)?;
                    r.check(
                        format!("{} k={k}: q(k)/γ(k) through g^[k]", c.label()),
                        true,
                        fmt_rat(&ratio),
                    );
                }
            }
            let max = if g.d() == 1 {
                g.m()
            } else {
                let piece = Piece::of_grading(g)?;
                max_abelian_dim(g, &piece).0
            };
            let delta = delta_sequence(g, &c.q, max)?;
            let undetermined = delta.iter().filter(|(_, v)| v.to_string() == "undetermined").count();
            r.check(
                format!("{}: δ-sequence", c.label()),
                delta.len() == g.m(),
                format!("m = {}, {} undetermined", g.m(), undetermined),
            );
        }
    }
    Ok(r)
}

fn bad_reference(t: SimpleType, alpha: usize) -> Result<Option<(i64, usize, usize)>> {
    if t.is_exceptional() {
        let name = t.to_string();
        return Ok(golden::exceptional_bad_cases()?
            .into_iter()
            .find(|b| b.simple_type == name && b.alpha == golden::listed_representative(t, alpha + 1))
            .map(|b| (b.d, b.m, b.max)));
    }
    Ok(golden::classical_abelian(t, alpha + 1)
        .filter(|x| !x.2)
        .map(|(m, max, _)| (2, m, max)))
}

/// Good/bad classification of every grading with `d ≥ 2`.
pub fn abelian_classification(types: &[SimpleType]) -> Result<Report> {
    let mut r = Report::new();
    for &t in types {
        let rs = build_root_system(t);
        for a in alphas_with_d_at_least(&rs, 2)? {
            let g = alpha_grading(&rs, a)?;
            let label = format!("{t} α{}", a + 1);
            let piece = Piece::of_grading(&g)?;
            let hd = half_dim_bound_check(&g, &piece)?;
            r.check(
                format!("{label}: max abelian ≤ ⌊m/2⌋"),
                hd.within_bound,
                format!("{} ≤ {}", hd.max, hd.m / 2),
            );
            let reference = bad_reference(t, a)?;
            let got = (!hd.good).then_some((g.d(), hd.m, hd.max));
            r.check(
                format!("{label}: good/bad"),
                got == reference,
                match got {
                    Some((d, m, max)) => format!("bad: d = {d}, m = {m}, max = {max}"),
                    None => format!("good: m = {}, max = {}", hd.m, hd.max),
                },
            );
            if let Some((m, max, good)) = golden::classical_abelian(t, a + 1) {
                r.push(Check::equal(
                    format!("{label}: classical (m, max, good)"),
                    format!("{m}, {max}, {good}"),
                    format!("{}, {}, {}", hd.m, hd.max, hd.good),
                ));
            }
            if hd.good {
                let (_, witness) = max_abelian_dim(&g, &piece);
                let c = complement_check(&witness);
                r.check(
                    format!("{label}: complement of half-dimensional witness"),
                    c.is_ok(),
                    match c {
                        Ok(comp) => format!("{{{witness}}} ∪ {{{comp}}}"),
                        Err(e) => e.to_string(),
                    },
                );
            }
            if g.d() == 2 {
                let all = Piece::positive(&rs)?;
                let ideals = abelian_b_ideals(&all);
                r.push(Check::equal(
                    format!("{label}: max abelian via abelian b-ideals"),
                    max_abelian_via_ideals(&g, &ideals)?,
                    hd.max,
                ));
            }
            let mut rest = abelian_report(&g)?;
            rest.checks.retain(|c| !c.name.ends_with("max abelian ≤ ⌊m/2⌋"));
            r.extend(rest);
        }
    }
    Ok(r)
}

/// The spin-module eigenvalue for every grading with `d ≤ 2`.
pub fn spin(types: &[SimpleType]) -> Result<Report> {
    let mut r = Report::new();
    for &t in types {
        let rs = build_root_system(t);
        for a in 0..rs.rank() {
            let g = alpha_grading(&rs, a)?;
            if g.d() > 2 {
                continue;
            }
            let inv = inner_involution(&g)?;
            let label = format!("{t} α{}", a + 1);
            match spin_eigenvalue(&rs, &inv) {
                Ok(v) => r.check(
                    format!("{label}: spin eigenvalue = dim g1/16"),
                    true,
                    format!("g0 = {}, {} = {}/16", inv.g0_label(), fmt_rat(&v), inv.dim_g1),
                ),
                Err(Error::Consistency(msg)) => {
                    r.check(format!("{label}: spin eigenvalue = dim g1/16"), false, msg)
                }
                Err(e) => return Err(e),
            }
            r.extend(involution_invariants(&g, &inv)?);
        }
    }
    Ok(r)
}

/// Oracle-based property checks: abelian ideal counts, multiplicity
/// freeness, and the wedge-2 root counts.
pub fn properties(types: &[SimpleType]) -> Result<Report> {
    let mut r = Report::new();
    for &t in types {
        let rs = build_root_system(t);
        if t.rank() <= 8 {
            let all = Piece::positive(&rs)?;
            r.push(Check::equal(
                format!("{t}: abelian b-ideals = 2^rank"),
                abelian_b_ideals(&all).len(),
                1usize << t.rank(),
            ));
        }
        for a in alphas_with_d_at_least(&rs, 2)? {
            let g = alpha_grading(&rs, a)?;
            let label = format!("{t} α{}", a + 1);
            if g.m() > SMALL_PIECE {
                continue;
            }
            let piece = Piece::of_grading(&g)?;
            let sets = enumerate_b_stable_abelian(&piece);
            let mut c = mult_free_check(&sets);
            c.name = format!("{label}: {}", c.name);
            r.push(c);
            let w = wedge2(&g);
            let pairs = w.m * w.m.saturating_sub(1) / 2 - w.abelian_pairs;
            r.check(
                format!("{label}: wedge-2 bracket onto g(2)"),
                w.kernel_identity(),
                format!("{} distinct sums, dim g(2) = {}", w.bracket_rank, w.dim_g2),
            );
            let note = if w.pair_identity() {
                "equality"
            } else {
                "strict, pair count identity downgraded"
            };
            r.check(
                format!("{label}: wedge-2 non-abelian pairs ≥ dim g(2)"),
                w.pair_inequality(),
                format!("{pairs} ≥ {} ({note})", w.dim_g2),
            );
        }
    }
    Ok(r)
}

/// Types of rank at most `max_rank`, excluding the exceptional ones.
pub fn classical_up_to(max_rank: usize) -> Vec<SimpleType> {
    SimpleType::all_up_to(max_rank)
        .into_iter()
        .filter(|t| !t.is_exceptional())
        .collect()
}

pub fn exceptional() -> Vec<SimpleType> {
    SimpleType::all_up_to(8)
        .into_iter()
        .filter(|t| t.is_exceptional())
        .collect()
}

/// Classical types with `2 ≤ rank ≤ max_rank`, plus all exceptional types.
pub fn q_list_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out: Vec<SimpleType> = classical_up_to(max_rank)
        .into_iter()
        .filter(|t| t.rank() >= 2 && (t.family() != Family::D || t.rank() >= 4))
        .collect();
    out.extend(exceptional());
    out
}

/// Named suites in run order.
pub const SUITES: [&str; 7] = [
    "gamma-table",
    "q-lists",
    "three-way",
    "identities",
    "subalgebras",
    "abelian",
    "spin",
];

pub fn run_suite(name: &str, types: &[SimpleType]) -> Result<Report> {
    match name {
        "gamma-table" => gamma_table_reproduction(types),
        "q-lists" => q_lists(types),
        "three-way" => three_way(types),
        "identities" => identities(types),
        "subalgebras" => subalgebras(types),
        "abelian" => abelian_classification(types),
        "spin" => spin(types),
        "properties" => properties(types),
        other => Err(Error::Argument(format!("unknown suite {other}"))),
    }
}
