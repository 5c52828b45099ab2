//! Exact rational scalars and small dense linear algebra over them.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Renders `p/q` in lowest terms, or `n` when integral.
pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p/q` or `n`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

/// Renders every value over the least common denominator of the row, e.g.
/// `[19/60, 3/10, 1/20]` becomes `["19/60", "18/60", "3/60"]`.
pub fn fmt_common_denominator(xs: &[Rat]) -> Vec<String> {
    let den = xs
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    if den.is_one() {
        return xs.iter().map(fmt_rat).collect();
    }
    xs.iter()
        .map(|x| {
            let num = x.numer() * (&den / x.denom());
            format!("{}/{}", num, den)
        })
        .collect()
}

/// Converts an integral rational to `i64`.
pub fn to_i64(x: &Rat) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn dot(v: &[Rat], w: &[Rat]) -> Rat {
    v.iter().zip(w).map(|(a, b)| a * b).sum()
}

/// `vᵀ·M·w`.
pub fn bilinear(m: &[Vec<Rat>], v: &[Rat], w: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (i, row) in m.iter().enumerate() {
        if v[i].is_zero() {
            continue;
        }
        acc += &v[i] * dot(row, w);
    }
    acc
}

pub fn to_rat_vec(v: &[i32]) -> Vec<Rat> {
    v.iter().map(|&x| int(x as i64)).collect()
}

/// Gauss–Jordan inverse; `None` when singular.
pub fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `M x = b` for square nonsingular `M`.
pub fn solve(m: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let inv = invert(m)?;
    Some(inv.iter().map(|row| dot(row, b)).collect())
}

pub fn is_nonneg(x: &Rat) -> bool {
    !x.is_negative()
}
