//! The tables behind `levi-casimir table`.

use clap::ValueEnum;

use super::render::{Cell, Table};
use crate::abelian::{half_dim_bound_check, Piece};
use crate::error::Result;
use crate::grading::{alpha_grading, q_profile};
use crate::involution::{inner_involution, spin_eigenvalue};
use crate::rat::Rat;
use crate::rootsys::{build_root_system, SimpleType};
use crate::suite::computed_row;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// γ_α(1..d), q_α(1..d), h*, r_α and g₀, one row per α with d ≥ 2.
    Gamma,
    /// q_α for every simple root, one row per type.
    Q,
    /// d, m = dim g_α(1), maximal abelian dimension and good/bad.
    Abelian,
    /// Spin-module eigenvalue for every α with d ≤ 2.
    Spin,
    /// q_α with its refinement q_α(1..d) and piece dimensions, one row per α.
    Qlist,
}

/// Which `(type, α)` pairs a table covers.
pub struct Selection {
    pub types: Vec<SimpleType>,
    /// 1-based; when given, rows are shown whatever their height.
    pub alpha: Option<usize>,
}

impl Selection {
    fn alphas(&self, t: SimpleType) -> Vec<usize> {
        match self.alpha {
            Some(a) => vec![a - 1],
            None => (0..t.rank()).collect(),
        }
    }
}

fn text(s: impl ToString) -> Cell {
    Cell::Text(s.to_string())
}

fn as_i64(n: usize) -> Cell {
    Cell::Int(n as i64)
}

pub fn build(kind: Kind, sel: &Selection) -> Result<Table> {
    match kind {
        Kind::Gamma => gamma(sel),
        Kind::Q => q(sel),
        Kind::Abelian => abelian(sel),
        Kind::Spin => spin(sel),
        Kind::Qlist => qlist(sel),
    }
}

fn gamma(sel: &Selection) -> Result<Table> {
    let mut t = Table::new(&["type", "alpha", "d", "gamma", "q", "h_star", "r", "g0"]);
    for &ty in &sel.types {
        let rs = build_root_system(ty);
        for a in sel.alphas(ty) {
            let row = computed_row(&rs, a)?;
            if row.d < 2 && sel.alpha.is_none() {
                continue;
            }
            t.push(vec![
                text(ty),
                as_i64(a + 1),
                Cell::Int(row.d),
                Cell::Rats(row.gamma),
                Cell::Ints(row.q),
                row.h_star.map_or(Cell::Empty, Cell::Int),
                row.r.map_or(Cell::Empty, Cell::Int),
                row.g0.map_or(Cell::Empty, Cell::Text),
            ]);
        }
    }
    Ok(t)
}

fn q(sel: &Selection) -> Result<Table> {
    let mut t = Table::new(&["type", "h", "h_star", "q"]);
    for &ty in &sel.types {
        let rs = build_root_system(ty);
        let mut qs = Vec::new();
        for a in 0..rs.rank() {
            qs.push(q_profile(&alpha_grading(&rs, a)?)?.q_total);
        }
        t.push(vec![text(ty), Cell::Int(rs.h()), Cell::Int(rs.h_star()), Cell::Ints(qs)]);
    }
    Ok(t)
}

fn qlist(sel: &Selection) -> Result<Table> {
    let mut t = Table::new(&["type", "alpha", "d", "q_alpha", "q", "dims"]);
    for &ty in &sel.types {
        let rs = build_root_system(ty);
        for a in sel.alphas(ty) {
            let g = alpha_grading(&rs, a)?;
            let p = q_profile(&g)?;
            t.push(vec![
                text(ty),
                as_i64(a + 1),
                Cell::Int(g.d()),
                Cell::Int(p.q_total),
                Cell::Ints(p.q_by_level.clone()),
                Cell::Ints(p.dims.iter().map(|&x| x as i64).collect()),
            ]);
        }
    }
    Ok(t)
}

fn abelian(sel: &Selection) -> Result<Table> {
    let mut t = Table::new(&["type", "alpha", "d", "m", "max", "good"]);
    for &ty in &sel.types {
        let rs = build_root_system(ty);
        for a in sel.alphas(ty) {
            let g = alpha_grading(&rs, a)?;
            if g.d() < 2 {
                if sel.alpha.is_some() {
                    t.push(vec![text(ty), as_i64(a + 1), Cell::Int(1), as_i64(g.m()), as_i64(g.m()), Cell::Flag(None)]);
                }
                continue;
            }
            let piece = Piece::of_grading(&g)?;
            let hd = half_dim_bound_check(&g, &piece)?;
            t.push(vec![
                text(ty),
                as_i64(a + 1),
                Cell::Int(g.d()),
                as_i64(hd.m),
                as_i64(hd.max),
                Cell::Flag(Some(hd.good)),
            ]);
        }
    }
    Ok(t)
}

fn spin(sel: &Selection) -> Result<Table> {
    let mut t = Table::new(&["type", "alpha", "d", "g0", "dim_g1", "gamma_spin", "dim_g1_over_16"]);
    for &ty in &sel.types {
        let rs = build_root_system(ty);
        for a in sel.alphas(ty) {
            let g = alpha_grading(&rs, a)?;
            if g.d() > 2 {
                continue;
            }
            let inv = inner_involution(&g)?;
            let value = spin_eigenvalue(&rs, &inv)?;
            t.push(vec![
                text(ty),
                as_i64(a + 1),
                Cell::Int(g.d()),
                Cell::Text(inv.g0_label()),
                as_i64(inv.dim_g1),
                Cell::Rats(vec![value]),
                Cell::Rats(vec![Rat::new((inv.dim_g1 as i64).into(), 16.into())]),
            ]);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::render::Format;

    fn sel(t: &str, alpha: Option<usize>) -> Selection {
        Selection {
            types: vec![t.parse().unwrap()],
            alpha,
        }
    }

    #[test]
    fn e6_q_row() {
        let s = build(Kind::Q, &sel("E6", None)).unwrap().render(Format::Markdown).unwrap();
        assert!(s.contains("| E6 | 12 | 12 | 12 9 7 9 12 11 |"), "{s}");
    }

    #[test]
    fn e8_alpha4_gamma() {
        let s = build(Kind::Gamma, &sel("E8", Some(4))).unwrap().render(Format::Markdown).unwrap();
        assert!(s.contains("11/60 10/60 9/60 8/60 5/60"), "{s}");
    }

    #[test]
    fn f4_abelian_rows() {
        let t = build(Kind::Abelian, &sel("F4", None)).unwrap();
        let s = t.render(Format::Csv).unwrap();
        assert!(s.contains("F4,1,2,8,2,no\n"), "{s}");
        assert!(s.contains("F4,2,4,6,2,no\n"), "{s}");
    }

    #[test]
    fn gamma_skips_height_one_unless_asked() {
        assert!(build(Kind::Gamma, &sel("A4", None)).unwrap().rows.is_empty());
        assert_eq!(build(Kind::Gamma, &sel("A4", Some(2))).unwrap().rows.len(), 1);
    }

    #[test]
    fn spin_rows_for_g2() {
        let s = build(Kind::Spin, &sel("G2", None)).unwrap().render(Format::Csv).unwrap();
        assert_eq!(s, "type,alpha,d,g0,dim_g1,gamma_spin,dim_g1_over_16\nG2,2,2,A1×A1,8,1/2,1/2\n");
    }
}
