//! Reference values transcribed from published tables, plus the parametric
//! formulas for the classical series. Comparisons elsewhere are by exact value.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rat::{parse_rat, Rat};
use crate::rootsys::{Family, SimpleType};

const GAMMA_ROWS: &str = include_str!("../data/gamma_exceptional.csv");
const BAD_CASES: &str = include_str!("../data/bad_cases.csv");
const Q_LISTS: &str = include_str!("../data/q_lists.csv");

/// One row of the γ/q tables for a grading with `d ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    pub simple_type: SimpleType,
    /// 1-based simple root index.
    pub alpha: usize,
    pub d: i64,
    pub gamma: Vec<Rat>,
    pub q: Vec<i64>,
    pub h_star: Option<i64>,
    pub r: Option<i64>,
    pub g0: Option<String>,
}

#[derive(Deserialize)]
struct RawReference {
    #[serde(rename = "type")]
    simple_type: String,
    alpha: usize,
    d: i64,
    gamma: String,
    q: String,
    h_star: Option<i64>,
    r: Option<i64>,
    g0: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct BadCase {
    #[serde(rename = "type")]
    pub simple_type: String,
    pub alpha: usize,
    pub d: i64,
    pub m: usize,
    pub max: usize,
}

#[derive(Deserialize)]
struct RawQList {
    #[serde(rename = "type")]
    simple_type: String,
    h: i64,
    h_star: i64,
    q: String,
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|x| x.parse().map_err(|_| Error::Argument(format!("bad entry {x:?}"))))
        .collect()
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new().from_reader(text.as_bytes())
}

pub fn exceptional_gamma_rows() -> Result<Vec<ReferenceRow>> {
    let mut out = Vec::new();
    for rec in reader(GAMMA_ROWS).deserialize::<RawReference>() {
        let raw = rec.map_err(|e| Error::Argument(e.to_string()))?;
        let gamma = raw
            .gamma
            .split_whitespace()
            .map(|x| parse_rat(x).ok_or_else(|| Error::Argument(format!("bad fraction {x}"))))
            .collect::<Result<_>>()?;
        out.push(ReferenceRow {
            simple_type: raw.simple_type.parse()?,
            alpha: raw.alpha,
            d: raw.d,
            gamma,
            q: parse_list(&raw.q)?,
            h_star: raw.h_star,
            r: raw.r,
            g0: raw.g0.filter(|s| !s.is_empty()),
        });
    }
    Ok(out)
}

pub fn exceptional_bad_cases() -> Result<Vec<BadCase>> {
    reader(BAD_CASES)
        .deserialize()
        .map(|r| r.map_err(|e| Error::Argument(e.to_string())))
        .collect()
}

fn frac(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// The reference tables list one simple root per orbit of the diagram
/// symmetry; this maps a 1-based index to the listed representative.
pub fn listed_representative(t: SimpleType, alpha: usize) -> usize {
    match (t.family(), t.rank(), alpha) {
        (Family::E, 6, 4) => 2,
        (Family::E, 6, 5) => 1,
        _ => alpha,
    }
}

/// Rows for `B_n`, `C_n`, `D_n` with `d_α = 2`, from the parametric table.
pub fn classical_gamma_rows(t: SimpleType) -> Vec<ReferenceRow> {
    let n = t.rank() as i64;
    let row = |i: i64, gamma: Vec<Rat>, q: Vec<i64>, h_star: i64, r: i64, g0: String| ReferenceRow {
        simple_type: t,
        alpha: i as usize,
        d: 2,
        gamma,
        q,
        h_star: Some(h_star),
        r: Some(r),
        g0: Some(g0),
    };
    let mut out = Vec::new();
    match t.family() {
        Family::B => {
            for i in 2..n {
                out.push(row(
                    i,
                    vec![frac(2 * n - i, 2 * (2 * n - 1)), frac(i - 1, 2 * n - 1)],
                    vec![2 * n - 2 * i + 1, i - 1],
                    2 * n - 1,
                    1,
                    format!("D{i}×B{}", n - i),
                ));
            }
            out.push(row(
                n,
                vec![frac(n, 2 * (2 * n - 1)), frac(2 * n - 2, 2 * (2 * n - 1))],
                vec![2, 2 * n - 2],
                2 * n - 1,
                2,
                format!("D{n}"),
            ));
        }
        Family::C => {
            for i in 1..n {
                out.push(row(
                    i,
                    vec![frac(2 * n + 1 - i, 4 * (n + 1)), frac(i + 1, 2 * (n + 1))],
                    vec![2 * n - 2 * i, i + 1],
                    n + 1,
                    2,
                    format!("C{i}×C{}", n - i),
                ));
            }
        }
        Family::D => {
            for i in 2..=(n - 2) {
                out.push(row(
                    i,
                    vec![frac(2 * n - 1 - i, 2 * (2 * n - 2)), frac(i - 1, 2 * n - 2)],
                    vec![2 * n - 2 * i, i - 1],
                    2 * n - 2,
                    1,
                    format!("D{i}×D{}", n - i),
                ));
            }
        }
        _ => {}
    }
    out
}

/// `(h, h*, q_1..q_n)` for every type.
pub fn q_list(t: SimpleType) -> Result<(i64, i64, Vec<i64>)> {
    let n = t.rank() as i64;
    Ok(match t.family() {
        Family::A => (n + 1, n + 1, vec![n + 1; n as usize]),
        Family::B => {
            let mut q: Vec<i64> = (1..n).map(|i| 2 * n - i).collect();
            q.push(2 * n);
            (2 * n, 2 * n - 1, q)
        }
        Family::C => (2 * n, n + 1, (1..=n).map(|i| 2 * n - i + 1).collect()),
        Family::D => {
            let mut q: Vec<i64> = (1..n - 1).map(|i| 2 * n - i - 1).collect();
            q.extend([2 * n - 2, 2 * n - 2]);
            (2 * n - 2, 2 * n - 2, q)
        }
        _ => {
            let name = t.to_string();
            let raw = reader(Q_LISTS)
                .deserialize::<RawQList>()
                .filter_map(|r| r.ok())
                .find(|r| r.simple_type == name)
                .ok_or_else(|| Error::Argument(format!("no q-list for {name}")))?;
            (raw.h, raw.h_star, parse_list(&raw.q)?)
        }
    })
}

/// Expected `(m, max abelian, good)` for a classical `(ℤ,α)`-grading with
/// `d = 2`: `B_n, α_i` is bad exactly for `3 ≤ i ≤ n`.
pub fn classical_abelian(t: SimpleType, alpha: usize) -> Option<(usize, usize, bool)> {
    let n = t.rank();
    let i = alpha;
    match t.family() {
        Family::B if (3..=n).contains(&i) => Some((2 * i * (n - i) + i, i * (n - i) + 1, false)),
        Family::B if i == 2 => {
            let m = 2 * i * (n - i) + i;
            Some((m, m / 2, true))
        }
        Family::C if i < n => {
            let m = 2 * i * (n - i);
            Some((m, m / 2, true))
        }
        Family::D if (2..=n - 2).contains(&i) => {
            let m = 2 * i * (n - i);
            Some((m, m / 2, true))
        }
        _ => None,
    }
}

/// A product label as a sorted multiset of components, with the low-rank
/// coincidences `D2 = A1×A1`, `D3 = A3`, `B1 = C1 = A1`, `C2 = B2` applied.
pub fn normalize_label(label: &str) -> Vec<String> {
    let mut out = Vec::new();
    for part in label.split(['×', 'x']).map(str::trim).filter(|s| !s.is_empty()) {
        let (f, r) = part.split_at(1);
        let rank: usize = r.trim_start_matches('_').parse().unwrap_or(0);
        match (f, rank) {
            (_, 0) => {}
            ("D", 2) => out.extend(["A1".to_string(), "A1".to_string()]),
            ("D", 3) => out.push("A3".into()),
            ("B" | "C", 1) => out.push("A1".into()),
            ("C", 2) => out.push("B2".into()),
            _ => out.push(format!("{f}{rank}")),
        }
    }
    out.sort();
    out
}
