use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// A variable of the ring `ℤ[x, y, z]`, with 1-based indices.
///
/// * `X(i)`: `x_i`, Chern roots of the tautological quotients.
/// * `Y(i)`: `y_i`, coordinates on the full diagonal torus.
/// * `YBlock(i, j)`: `y_{i,j}`, the `j`-th anti-symmetric coordinate of block `i`.
/// * `Z(i)`: `z_i`, the central coordinate of block `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
    YBlock(usize, usize),
    Z(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::YBlock(i, j) => write!(f, "y{i}_{j}"),
            Var::Z(i) => write!(f, "z{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable name {s:?}"));
        let index = |t: &str| t.parse::<usize>().ok().filter(|&i| i > 0).ok_or_else(bad);
        let (head, rest) = s.split_at(s.chars().next().map_or(0, |c| c.len_utf8()));
        match head {
            "x" => Ok(Var::X(index(rest)?)),
            "z" => Ok(Var::Z(index(rest)?)),
            "y" => match rest.split_once('_') {
                Some((i, j)) => Ok(Var::YBlock(index(i)?, index(j)?)),
                None => Ok(Var::Y(index(rest)?)),
            },
            _ => Err(bad()),
        }
    }
}

/// The variables available to a polynomial, in their canonical order
/// `x₁ < … < x_n < y₁ < … < y_n < y_{1,1} < … < z₁ < … < z_s`.
///
/// A *plain* space carries no composition: only the `x` and full-torus `y`
/// families exist. A space built from a composition `μ` of `n` adds one
/// `y_{i,j}` for each `1 <= j <= ⌊μ_i/2⌋` and one `z_i` per block.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableSpace {
    n: usize,
    mu: Option<Composition>,
    // yblock_start[i - 1] is the id of y_{i,1}
    yblock_start: Vec<usize>,
    z_start: usize,
    len: usize,
}

impl VariableSpace {
    pub fn plain(n: usize) -> Self {
        Self { n, mu: None, yblock_start: Vec::new(), z_start: 2 * n, len: 2 * n }
    }

    pub fn for_composition(mu: &Composition) -> Self {
        let n = mu.total();
        let mut next = 2 * n;
        let mut yblock_start = Vec::with_capacity(mu.len());
        for &m in mu.parts() {
            yblock_start.push(next);
            next += m / 2;
        }
        let z_start = next;
        Self { n, mu: Some(mu.clone()), yblock_start, z_start, len: z_start + mu.len() }
    }

    /// Number of `x` variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks (0 for a plain space).
    pub fn s(&self) -> usize {
        self.mu.as_ref().map_or(0, |m| m.len())
    }

    pub fn composition(&self) -> Option<&Composition> {
        self.mu.as_ref()
    }

    /// Total number of variables.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn id(&self, var: Var) -> Option<usize> {
        match var {
            Var::X(i) if (1..=self.n).contains(&i) => Some(i - 1),
            Var::Y(i) if (1..=self.n).contains(&i) => Some(self.n + i - 1),
            Var::YBlock(i, j) => {
                let mu = self.mu.as_ref()?;
                if (1..=mu.len()).contains(&i) && (1..=mu.part(i) / 2).contains(&j) {
                    Some(self.yblock_start[i - 1] + j - 1)
                } else {
                    None
                }
            }
            Var::Z(i) if (1..=self.s()).contains(&i) => Some(self.z_start + i - 1),
            _ => None,
        }
    }

    pub fn require(&self, var: Var) -> Result<usize> {
        self.id(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))
    }

    /// Inverse of [`VariableSpace::id`].
    pub fn var(&self, id: usize) -> Var {
        assert!(id < self.len, "variable id {id} out of range");
        if id < self.n {
            Var::X(id + 1)
        } else if id < 2 * self.n {
            Var::Y(id - self.n + 1)
        } else if id < self.z_start {
            let block = self.yblock_start.partition_point(|&start| start <= id);
            Var::YBlock(block, id - self.yblock_start[block - 1] + 1)
        } else {
            Var::Z(id - self.z_start + 1)
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.len).map(|id| self.var(id))
    }

    pub(crate) fn to_json(&self) -> SpaceJson {
        SpaceJson { n: self.n, s: self.s(), mu: self.mu.as_ref().map_or_else(Vec::new, |m| m.parts().to_vec()) }
    }

    pub(crate) fn from_json(json: &SpaceJson) -> Result<Self> {
        if json.mu.is_empty() {
            if json.s != 0 {
                return Err(Error::Parse("plain space must have s = 0".into()));
            }
            return Ok(Self::plain(json.n));
        }
        let mu = Composition::new(json.mu.clone())?;
        if mu.total() != json.n || mu.len() != json.s {
            return Err(Error::Parse(format!("space header n={} s={} disagrees with mu", json.n, json.s)));
        }
        Ok(Self::for_composition(&mu))
    }
}

impl fmt::Debug for VariableSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mu {
            Some(mu) => write!(f, "VariableSpace(n={}, mu={mu})", self.n),
            None => write!(f, "VariableSpace(n={})", self.n),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct SpaceJson {
    pub n: usize,
    pub s: usize,
    pub mu: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_round_trip() {
        let mu: Composition = "3,4".parse().unwrap();
        let space = VariableSpace::for_composition(&mu);
        let names: Vec<String> = space.vars().map(|v| v.to_string()).collect();
        assert_eq!(
            names,
            vec![
                "x1", "x2", "x3", "x4", "x5", "x6", "x7", "y1", "y2", "y3", "y4", "y5", "y6", "y7", "y1_1", "y2_1",
                "y2_2", "z1", "z2"
            ]
        );
        for id in 0..space.len() {
            assert_eq!(space.id(space.var(id)), Some(id));
            assert_eq!(space.var(id).to_string().parse::<Var>().unwrap(), space.var(id));
        }
    }

    #[test]
    fn missing_variables() {
        let space = VariableSpace::plain(3);
        assert_eq!(space.id(Var::Z(1)), None);
        assert_eq!(space.id(Var::X(4)), None);
        assert_eq!(space.id(Var::X(0)), None);
        let mu: Composition = "2,3".parse().unwrap();
        let space = VariableSpace::for_composition(&mu);
        assert!(space.id(Var::YBlock(2, 1)).is_some());
        assert_eq!(space.id(Var::YBlock(2, 2)), None);
        assert!(space.require(Var::Z(3)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("y2_1".parse::<Var>().unwrap(), Var::YBlock(2, 1));
        assert_eq!("x10".parse::<Var>().unwrap(), Var::X(10));
        assert!("w1".parse::<Var>().is_err());
        assert!("x0".parse::<Var>().is_err());
        assert!("x".parse::<Var>().is_err());
    }
}
