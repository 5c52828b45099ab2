//! The full record of one `(ℤ,α)`-grading.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::render::Format;
use crate::abelian::{max_abelian_dim, Piece};
use crate::casimir::{build_gk, delta_sequence};
use crate::error::{Error, Result};
use crate::grading::piece_extremes;
use crate::rat::{fmt_common_denominator, fmt_rat, parse_rat};
use crate::rootsys::{build_root_system, SimpleType};
use crate::suite::AlphaCase;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremes {
    pub k: i64,
    pub lowest: String,
    pub highest: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkRecord {
    pub k: i64,
    pub components: String,
    pub kappa: String,
    pub beta: String,
    pub theta_bar: String,
    pub index: String,
    #[serde(rename = "T")]
    pub t: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingRecord {
    #[serde(rename = "type")]
    pub simple_type: String,
    /// 1-based.
    pub alpha: usize,
    pub d: i64,
    pub q_alpha: i64,
    /// `q_α(1), …, q_α(d)`.
    pub q: Vec<i64>,
    pub gamma: Vec<String>,
    /// `dim g_α(1), …, dim g_α(d)`.
    pub dims: Vec<usize>,
    pub h_star: i64,
    pub r: i64,
    pub extremes: Vec<Extremes>,
    pub max_abelian: usize,
    /// `None` when `d = 1`.
    pub good: Option<bool>,
    pub delta: Vec<String>,
    pub gk: Vec<GkRecord>,
}

impl GradingRecord {
    pub fn compute(t: SimpleType, alpha: usize) -> Result<Self> {
        let rs = build_root_system(t);
        if alpha == 0 || alpha > rs.rank() {
            return Err(Error::Argument(format!("alpha must lie in 1..={} for {t}", rs.rank())));
        }
        let a = alpha - 1;
        let c = AlphaCase::new(&rs, a)?;
        let g = &c.grading;
        let d = g.d();
        let mut extremes = Vec::new();
        let mut gk = Vec::new();
        for k in 1..=d {
            let (lo, hi) = piece_extremes(g, k)?;
            extremes.push(Extremes {
                k,
                lowest: lo.to_string(),
                highest: hi.to_string(),
            });
            let s = build_gk(g, k)?;
            gk.push(GkRecord {
                k,
                components: s.component_label(),
                kappa: s.kappa_type().to_string(),
                beta: s.beta.to_string(),
                theta_bar: s.theta_bar.to_string(),
                index: fmt_rat(&s.dynkin_index),
                t: fmt_rat(&s.transition_factor),
            });
        }
        let (max_abelian, good) = if d == 1 {
            (g.m(), None)
        } else {
            let piece = Piece::of_grading(g)?;
            let (max, _) = max_abelian_dim(g, &piece);
            (max, Some(2 * max == g.m()))
        };
        let delta = delta_sequence(g, &c.q, max_abelian)?
            .into_iter()
            .map(|(_, v)| v.to_string())
            .collect();
        Ok(GradingRecord {
            simple_type: t.to_string(),
            alpha,
            d,
            q_alpha: c.q.q_total,
            q: c.q.q_by_level.clone(),
            gamma: c.gamma.gamma.iter().map(fmt_rat).collect(),
            dims: c.q.dims.clone(),
            h_star: rs.h_star(),
            r: rs.length_ratio(a),
            extremes,
            max_abelian,
            good,
            delta,
            gk,
        })
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Argument(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Markdown => Ok(self.markdown()),
            Format::Csv => self.csv(),
        }
    }

    fn gamma_common(&self) -> String {
        let rats: Vec<_> = self.gamma.iter().filter_map(|s| parse_rat(s)).collect();
        fmt_common_denominator(&rats).join(" ")
    }

    fn fields(&self, common_denominator: bool) -> Vec<(String, String)> {
        let ints = |v: &[i64]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let good = match self.good {
            Some(true) => "yes",
            Some(false) => "no",
            None => "",
        };
        let mut out = vec![
            ("type".into(), self.simple_type.clone()),
            ("alpha".into(), self.alpha.to_string()),
            ("d".into(), self.d.to_string()),
            (
                "dims".into(),
                self.dims.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
            ),
            ("q_alpha".into(), self.q_alpha.to_string()),
            ("q".into(), ints(&self.q)),
            (
                "gamma".into(),
                if common_denominator { self.gamma_common() } else { self.gamma.join(" ") },
            ),
            ("h_star".into(), self.h_star.to_string()),
            ("r".into(), self.r.to_string()),
        ];
        for e in &self.extremes {
            out.push((format!("extremes({})", e.k), format!("{} {}", e.lowest, e.highest)));
        }
        out.push(("max_abelian".into(), self.max_abelian.to_string()));
        out.push(("good".into(), good.into()));
        out.push(("delta".into(), self.delta.join(" ")));
        out
    }

    fn markdown(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.fields(true) {
            let _ = writeln!(out, "{k}: {v}");
        }
        out.push_str("\n| k | g^[k] | κ | β | θ̄ | index | T |\n|---|---|---|---|---|---|---|\n");
        for g in &self.gk {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} |",
                g.k, g.components, g.kappa, g.beta, g.theta_bar, g.index, g.t
            );
        }
        out
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Argument(e.to_string());
        w.write_record(["field", "value"]).map_err(io)?;
        for (k, v) in self.fields(false) {
            w.write_record([k, v]).map_err(io)?;
        }
        for g in &self.gk {
            let value = format!(
                "{} {} {} {} {} {}",
                g.components, g.kappa, g.beta, g.theta_bar, g.index, g.t
            );
            w.write_record([format!("gk({})", g.k), value]).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Argument(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Argument(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(t: &str, a: usize) -> GradingRecord {
        GradingRecord::compute(t.parse().unwrap(), a).unwrap()
    }

    #[test]
    fn e8_alpha2() {
        let r = record("E8", 2);
        assert_eq!(r.d, 3);
        assert!(r.render(Format::Markdown).unwrap().contains("gamma: 19/60 18/60 3/60\n"));
        assert_eq!(r.gamma, vec!["19/60", "3/10", "1/20"]);
        assert_eq!(r.gk[2].index, "1");
    }

    #[test]
    fn a3_alpha2_is_cominuscule() {
        let r = record("A3", 2);
        assert_eq!((r.d, r.max_abelian, r.good), (1, 4, None));
        assert_eq!(r.gamma, vec!["1/2"]);
        assert!(r.delta.iter().all(|x| x != "undetermined"));
    }

    #[test]
    fn classical_c_q_values() {
        for n in 3..=6usize {
            for i in 1..n {
                let r = record(&format!("C{n}"), i);
                assert_eq!(r.q, vec![2 * (n - i) as i64, i as i64 + 1], "C{n} α{i}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for (t, a) in [("G2", 1), ("F4", 2), ("E7", 7), ("B4", 3)] {
            let r = record(t, a);
            let text = r.render(Format::Json).unwrap();
            let back: GradingRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(back, r);
            let again = record(&back.simple_type, back.alpha);
            assert_eq!(again.render(Format::Json).unwrap(), text);
        }
    }

    #[test]
    fn bad_alpha() {
        assert!(GradingRecord::compute("G2".parse().unwrap(), 3).is_err());
        assert!(GradingRecord::compute("G2".parse().unwrap(), 0).is_err());
    }
}
