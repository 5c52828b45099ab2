//! Simple root systems in simple-root coordinates.
//!
//! A [`RootSystem`] carries its positive roots, the Cartan matrix, and the
//! canonical invariant form normalized so that `(θ, θ) = 1/h*`.

mod classify;
mod diagram;

pub use classify::{identify_type, product_label, Component};

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rat::{self, int, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Cartan–Killing label `X_n` of a simple Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    /// Validates the label. `D3` is normalized to `A3`; `D2`, `B1`, `C1`
    /// and friends are rejected.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let valid = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !valid {
            return Err(Error::Classification(format!("{}{}", family.letter(), rank)));
        }
        if family == Family::D && rank == 3 {
            return Ok(SimpleType {
                family: Family::A,
                rank: 3,
            });
        }
        Ok(SimpleType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }

    /// All types of rank at most `max_rank`, ordered by family then rank.
    /// `C2` is kept alongside `B2` since the two numberings differ.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        let ranges: [(Family, usize); 7] = [
            (Family::A, 1),
            (Family::B, 2),
            (Family::C, 2),
            (Family::D, 4),
            (Family::E, 6),
            (Family::F, 4),
            (Family::G, 2),
        ];
        for (family, lo) in ranges {
            for rank in lo..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    if t.family == family {
                        out.push(t);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Accepts `E8`, `e8`, `E_8` and `E_{8}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Classification(s.to_string()))?;
        let digits: String = chars.filter(|c| !matches!(c, '_' | '{' | '}')).collect();
        let rank = digits
            .parse::<usize>()
            .map_err(|_| Error::Classification(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Coefficient at the simple root `i`.
    pub fn coeff(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn to_rat(&self) -> Vec<Rat> {
        rat::to_rat_vec(&self.0)
    }
}

impl fmt::Display for Root {
    /// Space-free coefficient string, e.g. `1233211`; negative roots carry a
    /// leading `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().any(|&c| c < 0) {
            write!(f, "-")?;
        }
        let wide = self.0.iter().any(|c| c.abs() > 9);
        let parts: Vec<String> = self.0.iter().map(|c| c.abs().to_string()).collect();
        if wide {
            write!(f, "{}", parts.join("."))
        } else {
            write!(f, "{}", parts.concat())
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s),
        };
        let coeffs: Option<Vec<i32>> = if body.contains('.') {
            body.split('.').map(|p| p.parse::<i32>().ok()).collect()
        } else {
            body.chars().map(|c| c.to_digit(10).map(|d| d as i32)).collect()
        };
        coeffs
            .map(|v| Root(v.into_iter().map(|c| sign * c).collect()))
            .ok_or_else(|| Error::Argument(format!("bad root string {s:?}")))
    }
}

/// Enumerates the positive roots of the finite root system with the given
/// Cartan matrix (`cartan[i][j] = 2(α_i, α_j)/(α_j, α_j)`) by closure under
/// simple-root strings. The result is sorted by height, then by decreasing
/// coefficient sequence, so the simple roots come first in index order.
pub fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> Result<Vec<Root>> {
    const LIMIT: usize = 100_000;
    let n = cartan.len();
    let mut all: HashSet<Vec<i32>> = HashSet::new();
    let mut layer: Vec<Vec<i32>> = (0..n).map(|i| Root::simple(n, i).0).collect();
    let mut out = Vec::new();
    while !layer.is_empty() {
        layer.sort_unstable_by(|a, b| b.cmp(a));
        for r in &layer {
            all.insert(r.clone());
        }
        let mut next: Vec<Vec<i32>> = Vec::new();
        let mut next_seen: HashSet<Vec<i32>> = HashSet::new();
        for r in &layer {
            for j in 0..n {
                // p: how far the α_j-string extends downward from r
                let mut p = 0i64;
                let mut down = r.clone();
                loop {
                    down[j] -= 1;
                    if down[j] >= 0 && all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|i| r[i] as i64 * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = r.clone();
                    up[j] += 1;
                    if next_seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        out.extend(layer.drain(..).map(Root));
        if out.len() > LIMIT {
            return Err(Error::Structure("root closure does not terminate".into()));
        }
        layer = next;
    }
    Ok(out)
}

/// A simple root system with its canonical form and Coxeter data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i64>>,
    lengths: Vec<Rat>,
    /// `6 ×` Gram matrix with long roots of length 2; integral for every type.
    int_gram: Vec<Vec<i64>>,
    gram: Vec<Vec<Rat>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    theta: Root,
    theta_s: Root,
    h: i64,
    h_star: i64,
    inverse_cartan: Vec<Vec<Rat>>,
    rho: Vec<Rat>,
}

pub fn build_root_system(t: SimpleType) -> RootSystem {
    RootSystem::new(t)
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Self {
        let d = diagram::diagram(t);
        let n = t.rank();
        let gram2 = d.gram();
        let int_gram: Vec<Vec<i64>> = gram2
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * int(6)).to_integer().to_i64().expect("small gram entry"))
                    .collect()
            })
            .collect();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * int_gram[i][j] / int_gram[j][j]).collect())
            .collect();
        let positive = positive_roots_from_cartan(&cartan).expect("finite type");
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i))
            .collect();
        let theta = positive.last().expect("nonempty").clone();
        let long_len = 12i64;
        let int_len = |r: &Root| -> i64 { int_bilinear(&int_gram, &r.0, &r.0) };
        let theta_s = positive
            .iter()
            .rev()
            .find(|r| int_len(r) < long_len)
            .unwrap_or(&theta)
            .clone();
        let h = theta.height() as i64 + 1;
        // θ∨ in simple coroots: c_i = θ_i (α_i, α_i) / (θ, θ)
        let h_star = 1 + (0..n)
            .map(|i| theta.0[i] as i64 * int_gram[i][i])
            .sum::<i64>()
            / long_len;
        let gram: Vec<Vec<Rat>> = gram2
            .iter()
            .map(|row| row.iter().map(|x| x / int(2 * h_star)).collect())
            .collect();
        let cartan_rat: Vec<Vec<Rat>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| int(x)).collect())
            .collect();
        let inverse_cartan = rat::invert(&cartan_rat).expect("Cartan matrix is invertible");
        let mut rho = vec![Rat::zero(); n];
        for r in &positive {
            for (acc, &c) in rho.iter_mut().zip(&r.0) {
                *acc += int(c as i64);
            }
        }
        for x in rho.iter_mut() {
            *x /= int(2);
        }
        RootSystem {
            simple_type: t,
            cartan,
            lengths: d.lengths,
            int_gram,
            gram,
            positive,
            index,
            theta,
            theta_s,
            h,
            h_star,
            inverse_cartan,
            rho,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    /// `cartan[i][j] = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.positive[i]
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    /// Dominant short root; equal to θ in simply-laced types.
    pub fn theta_s(&self) -> &Root {
        &self.theta_s
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn h_star(&self) -> i64 {
        self.h_star
    }

    pub fn coxeter_numbers(&self) -> (i64, i64) {
        (self.h, self.h_star)
    }

    /// Canonical Gram matrix of the simple roots.
    pub fn gram_canonical(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    pub fn inverse_cartan(&self) -> &[Vec<Rat>] {
        &self.inverse_cartan
    }

    /// `ϖ_i` in simple-root coordinates (row `i` of the inverse Cartan matrix).
    pub fn fundamental_weight(&self, i: usize) -> &[Rat] {
        &self.inverse_cartan[i]
    }

    pub fn fundamental_weights(&self) -> &[Vec<Rat>] {
        &self.inverse_cartan
    }

    pub fn rho(&self) -> &[Rat] {
        &self.rho
    }

    /// Index of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn positive_index(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i32]) -> bool {
        if coeffs.iter().all(|&c| c >= 0) {
            self.index.contains_key(coeffs)
        } else if coeffs.iter().all(|&c| c <= 0) {
            let neg: Vec<i32> = coeffs.iter().map(|c| -c).collect();
            self.index.contains_key(&neg)
        } else {
            false
        }
    }

    /// `vᵀ G w` in the canonical form.
    pub fn canonical_pairing(&self, v: &[Rat], w: &[Rat]) -> Result<Rat> {
        let n = self.rank();
        if v.len() != n || w.len() != n {
            return Err(Error::Argument(format!(
                "vectors of length {} and {} for rank {n}",
                v.len(),
                w.len()
            )));
        }
        Ok(rat::bilinear(&self.gram, v, w))
    }

    pub(crate) fn form(&self, v: &[Rat], w: &[Rat]) -> Rat {
        rat::bilinear(&self.gram, v, w)
    }

    /// Integral multiple `12 h* (a, b)` of the canonical form on roots.
    pub fn int_form(&self, a: &[i32], b: &[i32]) -> i64 {
        int_bilinear(&self.int_gram, a, b)
    }

    pub fn root_form(&self, a: &Root, b: &Root) -> Rat {
        Rat::new(self.int_form(&a.0, &b.0).into(), (12 * self.h_star).into())
    }

    pub fn is_long(&self, r: &Root) -> bool {
        self.int_form(&r.0, &r.0) == 12
    }

    /// `r_α = (θ, θ)/(α_i, α_i)` for the simple root `i`.
    pub fn length_ratio(&self, i: usize) -> i64 {
        12 / self.int_gram[i][i]
    }

    /// Coordinates of `γ∨ = 2γ/(γ, γ)` in the basis of simple coroots.
    pub fn coroot(&self, r: &Root) -> Vec<Rat> {
        let len = self.int_form(&r.0, &r.0);
        (0..self.rank())
            .map(|i| Rat::new((r.0[i] as i64 * self.int_gram[i][i]).into(), len.into()))
            .collect()
    }

    /// `⟨λ, γ∨⟩ = 2(λ, γ)/(γ, γ)` for a weight in simple-root coordinates.
    pub fn coroot_pairing(&self, weight: &[Rat], r: &Root) -> Rat {
        let g = r.to_rat();
        int(2) * self.form(weight, &g) / self.root_form(r, r)
    }

    /// Dual Coxeter number recomputed as `1 + ⟨ρ, θ∨⟩`.
    pub fn dual_coxeter_via_rho(&self) -> Rat {
        int(1) + self.coroot_pairing(&self.rho, &self.theta)
    }

    /// Squared lengths of the simple roots with long roots of length 2.
    pub fn simple_lengths(&self) -> &[Rat] {
        &self.lengths
    }

    /// Cartan matrix `2(b_i, b_j)/(b_j, b_j)` of an arbitrary family of roots.
    pub fn cartan_of(&self, base: &[Root]) -> Vec<Vec<i64>> {
        base.iter()
            .map(|bi| {
                base.iter()
                    .map(|bj| 2 * self.int_form(&bi.0, &bj.0) / self.int_form(&bj.0, &bj.0))
                    .collect()
            })
            .collect()
    }

    /// Simple roots of a root subsystem relative to the inherited positivity:
    /// the positive members that are not sums of two positive members.
    pub fn subsystem_base(&self, roots: &[Root]) -> Vec<Root> {
        let pos: Vec<&Root> = roots.iter().filter(|r| r.is_positive()).collect();
        let members: HashSet<&[i32]> = pos.iter().map(|r| r.coeffs()).collect();
        let mut decomposable: HashSet<Vec<i32>> = HashSet::new();
        for (i, a) in pos.iter().enumerate() {
            for b in &pos[i + 1..] {
                let s = a.add(b);
                if members.contains(s.coeffs()) {
                    decomposable.insert(s.0);
                }
            }
        }
        let mut base: Vec<Root> = pos
            .into_iter()
            .filter(|r| !decomposable.contains(&r.0))
            .cloned()
            .collect();
        base.sort_by(|a, b| a.height().cmp(&b.height()).then(b.cmp(a)));
        base.dedup();
        base
    }

    /// Coroots of the positive roots, as integral coordinates in the simple
    /// coroots; these are the positive roots of the dual system.
    pub fn dual_positive_roots(&self) -> Vec<Root> {
        self.positive
            .iter()
            .map(|r| {
                Root(
                    self.coroot(r)
                        .iter()
                        .map(|x| x.to_integer().to_i32().expect("integral coroot"))
                        .collect(),
                )
            })
            .collect()
    }

    pub fn dual_cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.cartan[j][i]).collect()).collect()
    }
}

fn int_bilinear(g: &[Vec<i64>], a: &[i32], b: &[i32]) -> i64 {
    let mut acc = 0i64;
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let row = &g[i];
        let s: i64 = b.iter().zip(row).map(|(&bj, &gij)| bj as i64 * gij).sum();
        acc += ai as i64 * s;
    }
    acc
}
