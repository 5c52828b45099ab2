//! Dynkin diagrams in the fixed simple-root numbering.
//!
//! Classical series use the usual chain numbering (`B_n`: `α_n` short,
//! `C_n`: `α_n` long, `D_n`: `α_{n-1}`, `α_n` attached to `α_{n-2}`).
//! Exceptional types:
//!
//! ```text
//! E6: 1-2-3-4-5, 6 on 3      E7: 1-2-3-4-5-6, 7 on 4      E8: 1-2-3-4-5-6-7, 8 on 5
//! F4: 1-2=>3-4 (α1, α2 short)                          G2: 1<=2 (α1 short)
//! ```

use super::{Family, SimpleType};
use crate::rat::{int, rat, Rat};

/// Squared root lengths (long roots have length 2) and the undirected bonds.
pub(crate) struct Diagram {
    pub lengths: Vec<Rat>,
    pub bonds: Vec<(usize, usize)>,
}

fn chain(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

pub(crate) fn diagram(t: SimpleType) -> Diagram {
    let n = t.rank();
    let long = || int(2);
    let short = || int(1);
    match t.family() {
        Family::A => Diagram {
            lengths: vec![long(); n],
            bonds: chain(n),
        },
        Family::B => {
            let mut lengths = vec![long(); n];
            lengths[n - 1] = short();
            Diagram {
                lengths,
                bonds: chain(n),
            }
        }
        Family::C => {
            let mut lengths = vec![short(); n];
            lengths[n - 1] = long();
            Diagram {
                lengths,
                bonds: chain(n),
            }
        }
        Family::D => {
            let mut bonds = chain(n - 1);
            bonds.push((n - 3, n - 1));
            Diagram {
                lengths: vec![long(); n],
                bonds,
            }
        }
        Family::E => {
            let (chain_len, branch_at) = match n {
                6 => (5, 2),
                7 => (6, 3),
                _ => (7, 4),
            };
            let mut bonds = chain(chain_len);
            bonds.push((branch_at, n - 1));
            Diagram {
                lengths: vec![long(); n],
                bonds,
            }
        }
        Family::F => Diagram {
            lengths: vec![short(), short(), long(), long()],
            bonds: chain(4),
        },
        Family::G => Diagram {
            lengths: vec![rat(2, 3), long()],
            bonds: chain(2),
        },
    }
}

impl Diagram {
    /// Symmetric Gram matrix of the simple roots, long roots of length 2.
    pub fn gram(&self) -> Vec<Vec<Rat>> {
        let n = self.lengths.len();
        let mut g = vec![vec![int(0); n]; n];
        for i in 0..n {
            g[i][i] = self.lengths[i].clone();
        }
        for &(i, j) in &self.bonds {
            let m = std::cmp::max(&self.lengths[i], &self.lengths[j]).clone();
            let v = -m / int(2);
            g[i][j] = v.clone();
            g[j][i] = v;
        }
        g
    }
}
