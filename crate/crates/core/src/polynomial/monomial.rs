use std::cmp::Ordering;

/// A monomial stored sparsely as `(variable id, exponent)` pairs, sorted by
/// id, with no zero exponents.
///
/// Monomials are ordered by total degree first; ties are broken by
/// comparing exponents starting from the *last* variable in the canonical
/// order, the larger exponent winning. On the `x` family this makes
/// `x^{code(w)}` the greatest monomial of every Schubert polynomial `𝔖_w`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(id: usize) -> Self {
        Self { exps: vec![(id as u32, 1)] }
    }

    /// Builds a monomial from `(id, exponent)` pairs in any order; repeated
    /// ids accumulate and zero exponents are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Vec<(u32, u32)> =
            pairs.into_iter().filter(|&(_, e)| e > 0).map(|(id, e)| (id as u32, e)).collect();
        exps.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (id, e) in exps {
            match merged.last_mut() {
                Some((last, acc)) if *last == id => *acc += e,
                _ => merged.push((id, e)),
            }
        }
        Self { exps: merged }
    }

    /// Dense exponent vector over ids `0..len`.
    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(id, &e)| (id, e)))
    }

    pub fn to_dense(&self, len: usize) -> Vec<u32> {
        let mut out = vec![0; len];
        for &(id, e) in &self.exps {
            out[id as usize] = e;
        }
        out
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(id, e)| (id as usize, e))
    }

    pub fn exponent(&self, id: usize) -> u32 {
        match self.exps.binary_search_by_key(&(id as u32), |&(v, _)| v) {
            Ok(pos) => self.exps[pos].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn max_id(&self) -> Option<usize> {
        self.exps.last().map(|&(id, _)| id as usize)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self { exps: out }
    }

    /// Returns a copy with the exponent of `id` replaced by `e`.
    pub fn with_exponent(&self, id: usize, e: u32) -> Self {
        let mut exps: Vec<(u32, u32)> = self.exps.iter().copied().filter(|&(v, _)| v as usize != id).collect();
        if e > 0 {
            let pos = exps.partition_point(|&(v, _)| (v as usize) < id);
            exps.insert(pos, (id as u32, e));
        }
        Self { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut a, mut b) = (self.exps.iter().rev(), other.exps.iter().rev());
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            return va.cmp(&vb);
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
