//! Exhaustive branch-and-bound search for maximum sets of residues mod `d`
//! whose pairwise differences are all coprime to `d`.

use num_integer::Integer;

use crate::error::{Error, Result};

fn compatible(a: usize, b: usize, dim: usize) -> bool {
    a.abs_diff(b).gcd(&dim) == 1
}

fn check_odd(dim: usize) -> Result<()> {
    if dim % 2 == 0 {
        return Err(Error::OddRequired(dim));
    }
    if dim < 3 {
        return Err(Error::DimensionTooSmall { min: 3, got: dim });
    }
    Ok(())
}

struct Search {
    dim: usize,
    best: Vec<usize>,
    /// When set, collect every clique of exactly this size instead of
    /// improving `best`.
    target: Option<usize>,
    found: Vec<Vec<usize>>,
}

impl Search {
    fn extend(&mut self, current: &mut Vec<usize>, candidates: &[usize]) {
        match self.target {
            None => {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            }
            Some(t) => {
                if current.len() == t {
                    self.found.push(current.clone());
                    return;
                }
            }
        }
        let floor = self.target.unwrap_or(self.best.len());
        for (idx, &v) in candidates.iter().enumerate() {
            if current.len() + (candidates.len() - idx) < floor + usize::from(self.target.is_none())
            {
                // too few candidates left to reach the bound
                return;
            }
            let next: Vec<usize> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&w| compatible(v, w, self.dim))
                .collect();
            current.push(v);
            self.extend(current, &next);
            current.pop();
        }
    }

    fn run(dim: usize, target: Option<usize>) -> Search {
        let mut search = Search {
            dim,
            best: Vec::new(),
            target,
            found: Vec::new(),
        };
        let all: Vec<usize> = (0..dim).collect();
        search.extend(&mut Vec::new(), &all);
        search
    }
}

/// The maximum-cardinality coprime-difference set, lexicographically smallest
/// among the maximum ones. `dim` must be odd and at least 3.
pub fn max_clique(dim: usize) -> Result<Vec<usize>> {
    check_odd(dim)?;
    Ok(Search::run(dim, None).best)
}

/// Every maximum-cardinality coprime-difference set, in lexicographic order.
pub fn all_max_cliques(dim: usize) -> Result<Vec<Vec<usize>>> {
    check_odd(dim)?;
    let size = Search::run(dim, None).best.len();
    Ok(Search::run(dim, Some(size)).found)
}
