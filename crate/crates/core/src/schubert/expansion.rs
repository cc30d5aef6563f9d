use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{in_gamma, SchubertCache};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::polynomial::{Polynomial, Var, VariableSpace};

/// A finite combination `Σ c_w 𝔖_w` over `S_n` with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertExpansion {
    n: usize,
    coeffs: BTreeMap<Permutation, BigInt>,
}

impl SchubertExpansion {
    pub fn new(n: usize) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    /// Permutations with a nonzero coefficient, in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.coeffs.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, w: Permutation, c: BigInt) -> Result<()> {
        if w.size() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: w.size() });
        }
        let entry = self.coeffs.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    /// Coefficient-wise sum.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Whether the support is exactly `members` with every coefficient 1.
    pub fn is_unit_sum_over<'a>(&self, members: impl IntoIterator<Item = &'a Permutation>) -> bool {
        let members: Vec<&Permutation> = members.into_iter().collect();
        members.len() == self.coeffs.len()
            && members.iter().all(|w| self.coeffs.get(*w).is_some_and(|c| *c == BigInt::from(1)))
    }

    /// `Σ c_w 𝔖_w` in the plain space of size `n`.
    pub fn reconstruct(&self, cache: &SchubertCache) -> Polynomial {
        let mut acc = Polynomial::zero(&cache.space(self.n));
        for (w, c) in &self.coeffs {
            acc += &cache.get(w).scale(c.clone());
        }
        acc
    }
}

/// Writes `f ∈ Γ` as a combination of Schubert polynomials of `S_n`.
///
/// Repeatedly takes the leading monomial `x^c` of the remainder, finds the
/// permutation whose Lehmer code is `c` and subtracts the matching multiple
/// of its Schubert polynomial. Each step strictly lowers the leading
/// monomial.
pub fn expand_in_schubert_basis(f: &Polynomial, n: usize, cache: &SchubertCache) -> Result<SchubertExpansion> {
    if !in_gamma(f, n)? {
        return Err(Error::NotInGamma { n });
    }
    let space: Arc<VariableSpace> = Arc::clone(f.space());
    let mut remainder = f.clone();
    let mut out = SchubertExpansion::new(n);
    while let Some((lead, c)) = remainder.leading_term() {
        let mut code = vec![0u32; n];
        for (id, e) in lead.pairs() {
            match space.var(id) {
                Var::X(i) if i <= n => code[i - 1] = e,
                _ => return Err(Error::InvalidCode(code)),
            }
        }
        let code_usize: Vec<usize> = code.iter().map(|&e| e as usize).collect();
        let w = Permutation::from_code(&code_usize).map_err(|_| Error::InvalidCode(code.clone()))?;
        if out.coeffs.contains_key(&w) {
            // the leading term failed to drop: arithmetic is inconsistent
            return Err(Error::InvalidCode(code));
        }
        let c = c.clone();
        let schubert = cache.get(&w).reembed(&space)?;
        remainder -= &schubert.scale(c.clone());
        out.coeffs.insert(w, c);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    perm: Permutation,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SchubertExpansion {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionJson {
            n: self.n,
            terms: self.coeffs.iter().map(|(w, c)| TermJson { perm: w.clone(), coeff: c.to_string() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchubertExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = ExpansionJson::deserialize(deserializer)?;
        let mut out = SchubertExpansion::new(json.n);
        for term in json.terms {
            let c: BigInt = term.coeff.parse().map_err(D::Error::custom)?;
            out.add_term(term.perm, c).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}
