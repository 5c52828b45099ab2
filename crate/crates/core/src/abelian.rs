//! Borel-stable abelian subspaces of graded pieces, decided at root level:
//! a set of roots spans an abelian subspace iff no pairwise sum is a root.
//!
//! Subsets of a piece are bitmasks over at most 128 roots, enough for every
//! piece of every type of rank ≤ 8 (E8 has 120 positive roots).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::grading::{alpha_grading, root_sum, ZGrading};
use crate::report::{Check, Report};
use crate::rootsys::{Root, RootSystem};

/// A set of roots with the data needed to search its abelian upper ideals.
#[derive(Clone, Debug)]
pub struct Piece {
    roots: Vec<Root>,
    /// `conflict[i]`: the `j` with `roots[i] + roots[j]` a root.
    conflict: Vec<u128>,
    /// `up[i]`: the `j` with `roots[j] = roots[i] + η` for a step `η`.
    up: Vec<u128>,
    /// `below[i]`: the `j ≠ i` whose upward closure contains `i`.
    below: Vec<u128>,
    /// Search order: decreasing height, so successors precede predecessors.
    order: Vec<usize>,
}

impl Piece {
    /// `roots`, ordered by the relation generated by adding elements of `steps`.
    pub fn new(rs: &RootSystem, roots: &[Root], steps: &[Root]) -> Result<Self> {
        let n = roots.len();
        if n > 128 {
            return Err(Error::Unsupported(format!("{n} roots exceed the 128-root limit")));
        }
        let index: HashMap<&[i32], usize> =
            roots.iter().enumerate().map(|(i, r)| (r.coeffs(), i)).collect();
        let mut conflict = vec![0u128; n];
        let mut up = vec![0u128; n];
        for i in 0..n {
            for j in 0..n {
                if rs.is_root(roots[i].add(&roots[j]).coeffs()) {
                    conflict[i] |= 1 << j;
                }
            }
            for eta in steps {
                if let Some(&j) = index.get(roots[i].add(eta).coeffs()) {
                    up[i] |= 1 << j;
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (-roots[i].height(), i));
        let mut closure = vec![0u128; n];
        for &i in &order {
            let mut c = up[i];
            for j in bits(up[i]) {
                c |= closure[j];
            }
            closure[i] = c;
        }
        let mut below = vec![0u128; n];
        for y in 0..n {
            for x in bits(closure[y]) {
                below[x] |= 1 << y;
            }
        }
        Ok(Piece {
            roots: roots.to_vec(),
            conflict,
            up,
            below,
            order,
        })
    }

    /// `Δ(1)` ordered by `Δ⁺(0)`.
    pub fn of_grading(g: &ZGrading<'_>) -> Result<Self> {
        Piece::new(g.root_system(), g.positive_piece(1), g.levi_positive())
    }

    /// `Δ⁺` ordered by itself; its abelian upper ideals are the abelian `b`-ideals.
    pub fn positive(rs: &RootSystem) -> Result<Self> {
        Piece::new(rs, rs.positive_roots(), rs.positive_roots())
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    fn full(&self) -> u128 {
        if self.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.len()) - 1
        }
    }

    pub fn set(&self, bits: u128) -> RootSet<'_> {
        RootSet {
            piece: self,
            bits: bits & self.full(),
        }
    }

    /// The subset given by explicit roots; unknown roots are an error.
    pub fn set_of(&self, members: &[Root]) -> Result<RootSet<'_>> {
        let mut b = 0u128;
        for m in members {
            let i = self
                .roots
                .iter()
                .position(|r| r == m)
                .ok_or_else(|| Error::Argument(format!("{m} is not in the piece")))?;
            b |= 1 << i;
        }
        Ok(self.set(b))
    }

    /// Every abelian upper ideal, each exactly once, ordered by size then bits.
    pub fn enumerate_abelian_ideals(&self) -> Vec<RootSet<'_>> {
        let mut out = Vec::new();
        self.enumerate_dfs(0, 0, self.full(), &mut out);
        out.sort_by_key(|&b| (b.count_ones(), b));
        out.into_iter().map(|b| self.set(b)).collect()
    }

    // Decides the elements in `order`; `avail` holds undecided elements that
    // may still be added. Excluding x forbids everything below x.
    fn enumerate_dfs(&self, mut pos: usize, cur: u128, mut avail: u128, out: &mut Vec<u128>) {
        while pos < self.order.len() && avail & (1 << self.order[pos]) == 0 {
            avail &= !self.below[self.order[pos]];
            pos += 1;
        }
        if pos == self.order.len() || avail == 0 {
            out.push(cur);
            return;
        }
        let x = self.order[pos];
        let bit = 1u128 << x;
        self.enumerate_dfs(pos + 1, cur | bit, avail & !bit & !self.conflict[x], out);
        self.enumerate_dfs(pos + 1, cur, avail & !bit & !self.below[x], out);
    }

    /// Largest abelian upper ideal, by branch and bound. The search stops as
    /// soon as `cap` is reached.
    pub fn max_abelian_ideal(&self, cap: Option<usize>) -> RootSet<'_> {
        let cap = cap.unwrap_or(self.len()).min(self.len());
        let mut best = (0usize, 0u128);
        self.max_dfs(0, 0, self.full(), cap, &mut best);
        self.set(best.1)
    }

    fn max_dfs(&self, mut pos: usize, cur: u128, mut avail: u128, cap: usize, best: &mut (usize, u128)) {
        if best.0 >= cap {
            return;
        }
        while pos < self.order.len() && avail & (1 << self.order[pos]) == 0 {
            avail &= !self.below[self.order[pos]];
            pos += 1;
        }
        let size = cur.count_ones() as usize;
        if size > best.0 {
            *best = (size, cur);
        }
        if pos == self.order.len() || size + avail.count_ones() as usize <= best.0 {
            return;
        }
        let x = self.order[pos];
        let bit = 1u128 << x;
        self.max_dfs(pos + 1, cur | bit, avail & !bit & !self.conflict[x], cap, best);
        self.max_dfs(pos + 1, cur, avail & !bit & !self.below[x], cap, best);
    }
}

fn bits(mut b: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if b == 0 {
            None
        } else {
            let i = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(i)
        }
    })
}

/// A subset of a [`Piece`].
#[derive(Clone, Copy)]
pub struct RootSet<'p> {
    piece: &'p Piece,
    bits: u128,
}

impl PartialEq for RootSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.piece, other.piece) && self.bits == other.bits
    }
}

impl Eq for RootSet<'_> {}

impl fmt::Debug for RootSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSet{{{}}}", self)
    }
}

impl fmt::Display for RootSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members().iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl<'p> RootSet<'p> {
    pub fn piece(&self) -> &'p Piece {
        self.piece
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Members in ascending coefficient order.
    pub fn members(&self) -> Vec<Root> {
        let mut v: Vec<Root> = bits(self.bits).map(|i| self.piece.roots[i].clone()).collect();
        v.sort();
        v
    }

    pub fn contains(&self, r: &Root) -> bool {
        bits(self.bits).any(|i| &self.piece.roots[i] == r)
    }

    pub fn is_abelian(&self) -> bool {
        bits(self.bits).all(|i| self.piece.conflict[i] & self.bits == 0)
    }

    pub fn is_upper_ideal(&self) -> bool {
        bits(self.bits).all(|i| self.piece.up[i] & !self.bits == 0)
    }

    pub fn complement(&self) -> RootSet<'p> {
        self.piece.set(!self.bits)
    }

    pub fn weight_sum(&self) -> Vec<i64> {
        let rank = self.piece.roots.first().map_or(0, |r| r.coeffs().len());
        root_sum(rank, &self.members())
    }
}

/// Every subset of `Δ_α(1)` that is `Δ⁺_α(0)`-stable and abelian.
pub fn enumerate_b_stable_abelian(piece: &Piece) -> Vec<RootSet<'_>> {
    piece.enumerate_abelian_ideals()
}

/// Largest `b_α(0)`-stable abelian subspace of `g_α(1)` and its dimension.
/// For `d ≥ 2` the search is capped at `⌊m/2⌋`.
pub fn max_abelian_dim<'p>(g: &ZGrading<'_>, piece: &'p Piece) -> (usize, RootSet<'p>) {
    let cap = (g.d() >= 2).then_some(piece.len() / 2);
    let best = piece.max_abelian_ideal(cap);
    (best.len(), best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfDim {
    pub m: usize,
    pub max: usize,
    pub good: bool,
    pub within_bound: bool,
}

pub fn half_dim_bound_check(g: &ZGrading<'_>, piece: &Piece) -> Result<HalfDim> {
    if g.d() < 2 {
        return Err(Error::Unsupported("g(1) is abelian when d = 1".into()));
    }
    let m = piece.len();
    // search without the cap so that the bound itself is tested
    let max = piece.max_abelian_ideal(None).len();
    Ok(HalfDim {
        m,
        max,
        good: m % 2 == 0 && max == m / 2,
        within_bound: max <= m / 2,
    })
}

/// The complement of a half-dimensional abelian set, which must be abelian.
pub fn complement_check<'p>(s: &RootSet<'p>) -> Result<RootSet<'p>> {
    let m = s.piece.len();
    if m % 2 != 0 || s.len() * 2 != m {
        return Err(Error::Argument(format!("|s| = {} is not half of m = {m}", s.len())));
    }
    let c = s.complement();
    if !c.is_abelian() {
        return Err(Error::Consistency(format!("complement of {{{s}}} is not abelian")));
    }
    Ok(c)
}

/// `Δ_α(1) ∩ Δ_β(1)` together with the facts used to certify it.
#[derive(Clone, Debug)]
pub struct Intersection {
    pub piece: Piece,
    pub bits: u128,
    /// `Δ_α(2) ∩ Δ_β(2) = ∅` and `Δ_α(1) ∩ Δ_β(2) = ∅`.
    pub hypotheses: (bool, bool),
    pub abelian: bool,
    pub stable: bool,
    /// Sum of the simple roots on the diagram path from α to β.
    pub chain_root: Root,
}

impl Intersection {
    pub fn set(&self) -> RootSet<'_> {
        self.piece.set(self.bits)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }
}

fn diagram_path(rs: &RootSystem, from: usize, to: usize) -> Vec<usize> {
    let n = rs.rank();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(v) = queue.pop_front() {
        for w in 0..n {
            if w != v && rs.cartan()[v][w] != 0 && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().expect("nonempty") != from {
        path.push(prev[*path.last().expect("nonempty")]);
    }
    path
}

pub fn intersection_space(rs: &RootSystem, alpha: usize, beta: usize) -> Result<Intersection> {
    if alpha == beta {
        return Err(Error::Argument("α and β must differ".into()));
    }
    let ga = alpha_grading(rs, alpha)?;
    let gb = alpha_grading(rs, beta)?;
    let piece = Piece::of_grading(&ga)?;
    let bits = piece
        .roots()
        .iter()
        .enumerate()
        .filter(|(_, r)| gb.grade(r) == 1)
        .fold(0u128, |acc, (i, _)| acc | 1 << i);
    let h1 = !ga.positive_piece(2).iter().any(|r| gb.grade(r) == 2);
    let h2 = !ga.positive_piece(1).iter().any(|r| gb.grade(r) == 2);
    let set = piece.set(bits);
    let abelian = set.is_abelian();
    let stable = set.is_upper_ideal();
    let mut chain = vec![0i32; rs.rank()];
    for v in diagram_path(rs, alpha, beta) {
        chain[v] = 1;
    }
    let chain_root = Root::new(chain);
    if !rs.is_root(chain_root.coeffs()) || !set.contains(&chain_root) {
        return Err(Error::Consistency(format!("chain root {chain_root} is not in the intersection")));
    }
    if h1 && !abelian {
        return Err(Error::Consistency("intersection is not abelian".into()));
    }
    if h1 && h2 && !stable {
        return Err(Error::Consistency("intersection is not b(0)-stable".into()));
    }
    Ok(Intersection {
        piece,
        bits,
        hypotheses: (h1, h2),
        abelian,
        stable,
        chain_root,
    })
}

/// All abelian ideals of the Borel subalgebra, as upper ideals of `Δ⁺`.
pub fn abelian_b_ideals(piece: &Piece) -> Vec<RootSet<'_>> {
    piece.enumerate_abelian_ideals()
}

/// Maximal abelian dimension in `g(1)` for `d = 2`, recomputed from abelian
/// `b`-ideals: `a ⊕ g(2)` is an abelian ideal, and `I ∩ Δ(1)` is
/// `b(0)`-stable and abelian for any abelian ideal `I`.
pub fn max_abelian_via_ideals(g: &ZGrading<'_>, ideals: &[RootSet<'_>]) -> Result<usize> {
    if g.d() != 2 {
        return Err(Error::Unsupported("ideal route needs d = 2".into()));
    }
    let level: HashSet<&[i32]> = g.positive_piece(1).iter().map(Root::coeffs).collect();
    Ok(ideals
        .iter()
        .map(|s| s.members().iter().filter(|r| level.contains(r.coeffs())).count())
        .max()
        .unwrap_or(0))
}

/// Distinct abelian ideals of `Δ(1)` have distinct weight sums.
pub fn mult_free_check(sets: &[RootSet<'_>]) -> Check {
    let mut seen: HashMap<Vec<i64>, u128> = HashMap::new();
    for s in sets {
        if let Some(other) = seen.insert(s.weight_sum(), s.bits) {
            let clash = s.piece.set(other);
            return Check::new(
                "multiplicity-free",
                false,
                format!("{{{s}}} and {{{clash}}} share a weight"),
            );
        }
    }
    Check::new("multiplicity-free", true, format!("{} sets", sets.len()))
}

/// Root-level data for `⋀² g(1) = A₂ ⊕ d₁(g(2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wedge2 {
    pub m: usize,
    pub dim_g2: usize,
    /// Unordered pairs `{μ, ν}` with `μ + ν` not a root.
    pub abelian_pairs: usize,
    /// Distinct roots `μ + ν`, i.e. the rank of the bracket `⋀² g(1) → g(2)`.
    pub bracket_rank: usize,
}

impl Wedge2 {
    /// `C(m,2) − #abelian pairs = dim g(2)`; only holds when each root of
    /// `Δ(2)` is a sum in exactly one way.
    pub fn pair_identity(&self) -> bool {
        self.m * (self.m.saturating_sub(1)) / 2 - self.abelian_pairs == self.dim_g2
    }

    pub fn pair_inequality(&self) -> bool {
        self.m * (self.m.saturating_sub(1)) / 2 - self.abelian_pairs >= self.dim_g2
    }

    /// `dim ker = C(m,2) − dim g(2)`, i.e. the bracket is onto `g(2)`.
    pub fn kernel_identity(&self) -> bool {
        self.bracket_rank == self.dim_g2
    }
}

pub fn wedge2(g: &ZGrading<'_>) -> Wedge2 {
    let rs = g.root_system();
    let p1 = g.positive_piece(1);
    let mut sums: HashSet<Vec<i32>> = HashSet::new();
    let mut abelian_pairs = 0;
    for (i, a) in p1.iter().enumerate() {
        for b in &p1[i + 1..] {
            let s = a.add(b);
            if rs.is_root(s.coeffs()) {
                sums.insert(s.coeffs().to_vec());
            } else {
                abelian_pairs += 1;
            }
        }
    }
    Wedge2 {
        m: p1.len(),
        dim_g2: g.dim_piece(2),
        abelian_pairs,
        bracket_rank: sums.len(),
    }
}

/// Every check on one grading that is cheap enough for routine runs.
pub fn abelian_report(g: &ZGrading<'_>) -> Result<Report> {
    let rs = g.root_system();
    let label = format!("{} α{}", rs.simple_type(), g.defining_root().map_or(0, |a| a + 1));
    let piece = Piece::of_grading(g)?;
    let mut r = Report::new();
    if g.d() == 1 {
        let all = piece.set(!0);
        r.check(format!("{label}: d = 1 ⇒ g(1) abelian"), all.is_abelian(), format!("m = {}", piece.len()));
        return Ok(r);
    }
    let (max, witness) = max_abelian_dim(g, &piece);
    r.check(
        format!("{label}: max abelian ≤ ⌊m/2⌋"),
        max <= piece.len() / 2,
        format!("{max} ≤ {}", piece.len() / 2),
    );
    r.check(
        format!("{label}: witness is abelian and b(0)-stable"),
        witness.is_abelian() && witness.is_upper_ideal(),
        witness.to_string(),
    );
    if 2 * max == piece.len() {
        let c = complement_check(&witness);
        r.check(
            format!("{label}: complement of half-dimensional witness is abelian"),
            c.is_ok(),
            c.map(|x| x.to_string()).unwrap_or_else(|e| e.to_string()),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family, SimpleType};

    fn rs(t: &str) -> RootSystem {
        build_root_system(t.parse().unwrap())
    }

    /// Brute-force oracle over all subsets of a small piece.
    fn brute_force(piece: &Piece) -> Vec<u128> {
        let n = piece.len();
        assert!(n <= 16);
        let mut out: Vec<u128> = (0u128..1 << n)
            .filter(|&b| {
                let s = piece.set(b);
                s.is_abelian() && s.is_upper_ideal()
            })
            .collect();
        out.sort_by_key(|&b| (b.count_ones(), b));
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for t in ["G2", "B3", "C3", "A4", "B4", "F4", "D4", "C4"] {
            let rs = rs(t);
            for a in 0..rs.rank() {
                let g = alpha_grading(&rs, a).unwrap();
                let piece = Piece::of_grading(&g).unwrap();
                if piece.len() > 16 {
                    continue;
                }
                let fast: Vec<u128> = enumerate_b_stable_abelian(&piece).iter().map(|s| s.bits()).collect();
                assert_eq!(fast, brute_force(&piece), "{t} α{}", a + 1);
                let best = brute_force(&piece).iter().map(|b| b.count_ones()).max().unwrap();
                assert_eq!(piece.max_abelian_ideal(None).len(), best as usize);
            }
        }
    }

    #[test]
    fn no_two_dimensional_abelian() {
        for n in 2..=6 {
            let b = build_root_system(SimpleType::new(Family::B, n).unwrap());
            let g = alpha_grading(&b, n - 1).unwrap();
            let piece = Piece::of_grading(&g).unwrap();
            assert_eq!(max_abelian_dim(&g, &piece).0, 1, "B{n}");
            assert!(enumerate_b_stable_abelian(&piece).iter().all(|s| s.len() <= 1));
        }
        let g2 = rs("G2");
        let g = alpha_grading(&g2, 0).unwrap();
        let piece = Piece::of_grading(&g).unwrap();
        assert_eq!(max_abelian_dim(&g, &piece).0, 1);
        assert!(mult_free_check(&enumerate_b_stable_abelian(&piece)).passed);
    }

    #[test]
    fn cominuscule_piece_is_abelian() {
        let a5 = rs("A5");
        for a in 0..5 {
            let g = alpha_grading(&a5, a).unwrap();
            let piece = Piece::of_grading(&g).unwrap();
            assert!(piece.set(!0).is_abelian());
            let (max, _) = max_abelian_dim(&g, &piece);
            assert_eq!(max, piece.len());
            assert!(matches!(half_dim_bound_check(&g, &piece), Err(Error::Unsupported(_))));
            assert!(mult_free_check(&enumerate_b_stable_abelian(&piece)).passed);
        }
    }

    #[test]
    fn table_rows_small() {
        let f4 = rs("F4");
        for (a, d, m, max) in [(0, 2, 8, 2), (1, 4, 6, 2)] {
            let g = alpha_grading(&f4, a).unwrap();
            let piece = Piece::of_grading(&g).unwrap();
            let h = half_dim_bound_check(&g, &piece).unwrap();
            assert_eq!((g.d(), h.m, h.max, h.good), (d, m, max, false));
        }
        let e6 = rs("E6");
        let g = alpha_grading(&e6, 1).unwrap();
        let piece = Piece::of_grading(&g).unwrap();
        let h = half_dim_bound_check(&g, &piece).unwrap();
        assert_eq!((h.m, h.max, h.good), (20, 10, true));
    }

    #[test]
    fn complements() {
        let e6 = rs("E6");
        let g = alpha_grading(&e6, 1).unwrap();
        let piece = Piece::of_grading(&g).unwrap();
        let (_, w) = max_abelian_dim(&g, &piece);
        let c = complement_check(&w).unwrap();
        assert_eq!(c.len(), 10);
        assert!(complement_check(&piece.set(1)).is_err());

        // θ = ϖ_α̂: any maximal abelian ideal meets g(1) in a half
        let e7 = rs("E7");
        let g = alpha_grading(&e7, 5).unwrap();
        let piece = Piece::of_grading(&g).unwrap();
        let pos = Piece::positive(&e7).unwrap();
        let ideals = abelian_b_ideals(&pos);
        let biggest = ideals.iter().map(RootSet::len).max().unwrap();
        let top = ideals.iter().find(|s| s.len() == biggest).unwrap();
        let meet: Vec<Root> = top
            .members()
            .into_iter()
            .filter(|r| g.grade(r) == 1)
            .collect();
        assert_eq!(meet.len(), e7.h_star() as usize - 2);
        let s = piece.set_of(&meet).unwrap();
        assert!(complement_check(&s).is_ok());

        // d = 1: any upward-closed half has an abelian complement
        let a3 = rs("A3");
        let g = alpha_grading(&a3, 1).unwrap();
        let piece = Piece::of_grading(&g).unwrap();
        let halves: Vec<_> = enumerate_b_stable_abelian(&piece)
            .into_iter()
            .filter(|s| 2 * s.len() == piece.len())
            .collect();
        assert!(!halves.is_empty());
        for s in halves {
            assert!(complement_check(&s).is_ok());
        }
    }

    #[test]
    fn intersections() {
        let e7 = rs("E7");
        let x = intersection_space(&e7, 6, 0).unwrap();
        assert_eq!(x.len(), 15);
        assert!(x.abelian && x.stable);

        let e8 = rs("E8");
        let x = intersection_space(&e8, 3, 6).unwrap();
        assert_eq!(x.len(), 16);
        assert_eq!(x.hypotheses, (true, true));

        // α adjacent to α̂ gives half of g_α(1)
        for (t, a, hat) in [("E6", 2, 5), ("E7", 4, 5), ("E8", 1, 0), ("F4", 2, 3), ("G2", 0, 1)] {
            let rs = rs(t);
            let x = intersection_space(&rs, a, hat).unwrap();
            let m = alpha_grading(&rs, a).unwrap().m();
            assert_eq!(2 * x.len(), m, "{t}");
            assert!(x.abelian && x.stable, "{t}");
        }
        assert!(intersection_space(&e8, 2, 2).is_err());
    }

    #[test]
    fn b_ideal_counts() {
        for t in SimpleType::all_up_to(6) {
            let rs = build_root_system(t);
            let pos = Piece::positive(&rs).unwrap();
            assert_eq!(abelian_b_ideals(&pos).len(), 1 << rs.rank(), "{t}");
        }
        let f4 = rs("F4");
        let pos = Piece::positive(&f4).unwrap();
        let ideals = abelian_b_ideals(&pos);
        assert_eq!(ideals.iter().map(RootSet::len).max(), Some(9));
        let g = alpha_grading(&f4, 0).unwrap();
        assert_eq!(max_abelian_via_ideals(&g, &ideals).unwrap(), 2);

        let e7 = rs("E7");
        let pos = Piece::positive(&e7).unwrap();
        let ideals = abelian_b_ideals(&pos);
        let biggest = ideals.iter().max_by_key(|s| s.len()).unwrap();
        assert_eq!(biggest.len(), 27);
        let g = alpha_grading(&e7, 0).unwrap();
        assert_eq!(biggest.members(), g.positive_piece(1).iter().cloned().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn wedge_two() {
        let e7 = rs("E7");
        let g = alpha_grading(&e7, 5).unwrap();
        let w = wedge2(&g);
        assert!(w.kernel_identity());
        assert!(w.pair_inequality());
        // Heisenberg case: m/2 pairs add up to θ
        assert!(!w.pair_identity());
        let b4 = rs("B4");
        let g = alpha_grading(&b4, 3).unwrap();
        let w = wedge2(&g);
        assert_eq!(w.abelian_pairs, 0);
        assert!(w.pair_identity() && w.kernel_identity());
    }

    #[test]
    fn reports() {
        for t in ["E6", "F4", "G2", "B5", "C4", "D5"] {
            let rs = rs(t);
            for a in 0..rs.rank() {
                let g = alpha_grading(&rs, a).unwrap();
                let r = abelian_report(&g).unwrap();
                assert!(r.all_passed(), "{r}");
            }
        }
    }
}
