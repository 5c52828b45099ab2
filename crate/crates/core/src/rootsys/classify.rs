//! Recognition of simple components from a Cartan matrix.

use super::{Family, SimpleType};
use crate::error::{Error, Result};

/// One connected component of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub simple_type: SimpleType,
    /// Indices of the rows of the input matrix that belong to this component.
    pub indices: Vec<usize>,
}

fn check_axioms(cartan: &[Vec<i64>]) -> Result<()> {
    let n = cartan.len();
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Structure(format!("row {i} has length {}", row.len())));
        }
        if row[i] != 2 {
            return Err(Error::Structure(format!("diagonal entry {i} is {}", row[i])));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if row[j] > 0 {
                return Err(Error::Structure(format!("positive off-diagonal entry at ({i},{j})")));
            }
            if (row[j] == 0) != (cartan[j][i] == 0) {
                return Err(Error::Structure(format!("asymmetric zero pattern at ({i},{j})")));
            }
            let prod = row[j] * cartan[j][i];
            if prod > 3 {
                return Err(Error::Structure(format!(
                    "bond ({i},{j}) has multiplicity {prod}, not of finite type"
                )));
            }
        }
    }
    Ok(())
}

fn components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if !seen[w] && cartan[v][w] != 0 {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Length of the path starting at `from` and walking away from `avoid`.
fn arm_length(adj: &[Vec<usize>], from: usize, avoid: usize) -> usize {
    let (mut prev, mut cur, mut len) = (avoid, from, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [] => return len,
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return usize::MAX,
        }
    }
}

fn classify_component(cartan: &[Vec<i64>], comp: &[usize]) -> Result<SimpleType> {
    let n = comp.len();
    let not_finite = || Error::Structure(format!("component {comp:?} is not of finite type"));
    if n == 1 {
        return SimpleType::new(Family::A, 1);
    }
    // local adjacency
    let mut adj = vec![Vec::new(); n];
    let mut edges = 0;
    let mut multiple = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let (i, j) = (comp[a], comp[b]);
            if cartan[i][j] != 0 {
                adj[a].push(b);
                adj[b].push(a);
                edges += 1;
                let mult = cartan[i][j] * cartan[j][i];
                if mult > 1 {
                    multiple.push((a, b, mult));
                }
            }
        }
    }
    if edges != n - 1 {
        return Err(not_finite());
    }
    let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
    match multiple.as_slice() {
        [] => {
            if max_degree <= 2 {
                return SimpleType::new(Family::A, n);
            }
            let branches: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
            if branches.len() != 1 || adj[branches[0]].len() != 3 {
                return Err(not_finite());
            }
            let b = branches[0];
            let mut arms: Vec<usize> = adj[b].iter().map(|&w| arm_length(&adj, w, b)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => SimpleType::new(Family::D, n),
                [1, 2, 2] => SimpleType::new(Family::E, 6),
                [1, 2, 3] => SimpleType::new(Family::E, 7),
                [1, 2, 4] => SimpleType::new(Family::E, 8),
                _ => Err(not_finite()),
            }
        }
        [(_, _, 3)] => {
            if n == 2 {
                SimpleType::new(Family::G, 2)
            } else {
                Err(not_finite())
            }
        }
        [(a, b, 2)] => {
            if max_degree > 2 {
                return Err(not_finite());
            }
            if n == 2 {
                return SimpleType::new(Family::B, 2);
            }
            let (a, b) = (*a, *b);
            let a_is_end = adj[a].len() == 1;
            let b_is_end = adj[b].len() == 1;
            if a_is_end || b_is_end {
                let (end, inner) = if a_is_end { (a, b) } else { (b, a) };
                // |a_ij| > |a_ji| means α_i is the longer root.
                let end_is_short = cartan[comp[end]][comp[inner]].abs() < cartan[comp[inner]][comp[end]].abs();
                let family = if end_is_short { Family::B } else { Family::C };
                SimpleType::new(family, n)
            } else if n == 4 {
                SimpleType::new(Family::F, 4)
            } else {
                Err(not_finite())
            }
        }
        _ => Err(not_finite()),
    }
}

/// Splits a Cartan matrix of a semisimple root system into its simple
/// components. Components are listed in order of their smallest index.
///
/// Rank-2 double bonds are reported as `B2`; a chain of three simply-laced
/// nodes is `A3`.
pub fn identify_type(cartan: &[Vec<i64>]) -> Result<Vec<Component>> {
    check_axioms(cartan)?;
    components(cartan)
        .into_iter()
        .map(|comp| {
            let simple_type = classify_component(cartan, &comp)?;
            Ok(Component {
                simple_type,
                indices: comp,
            })
        })
        .collect()
}

/// `X × Y × …` label, larger components first.
pub fn product_label(types: &[SimpleType]) -> String {
    let mut sorted = types.to_vec();
    sorted.sort_by(|a, b| b.rank().cmp(&a.rank()).then(a.family().cmp(&b.family())));
    sorted.iter().map(ToString::to_string).collect::<Vec<_>>().join("×")
}
