//! Product-of-linear-forms representatives of the closed orbit classes, in
//! ordinary and torus-equivariant cohomology, plus the type-A localization
//! machinery they are derived from.

mod equivariant;
mod localization;
mod ordinary;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::composition::Composition;
use crate::error::Result;
use crate::polynomial::{Polynomial, Var, VariableSpace};

pub use equivariant::{
    base_class_orthogonal, base_class_symplectic, block_base_product, class_orthogonal_equivariant,
    class_symplectic_equivariant, f_block, g_block, h_mu_xyz, h_pair_xyz,
};
pub use localization::{
    chern_class_full_torus, restrict_at, restrict_torus_coordinates, specialize_to_ordinary, weight_product,
};
pub use ordinary::{rhs_orthogonal, rhs_orthogonal_factored, rhs_symplectic, rhs_symplectic_factored};

/// Positive roots `ε_k − ε_l` (`k < l`) of `GL_n`, and the Levi subsystem of
/// a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootSystemA {
    n: usize,
}

impl RootSystemA {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All pairs `(k, l)` with `1 <= k < l <= n`.
    pub fn positive_roots(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(|k| (k + 1..=n).map(move |l| (k, l))).collect()
    }

    /// Roots with both indices in the same block of `mu`.
    pub fn levi_roots(&self, mu: &Composition) -> Vec<(usize, usize)> {
        self.positive_roots().into_iter().filter(|&(k, l)| mu.block_of(k).ok() == mu.block_of(l).ok()).collect()
    }

    /// `Φ⁺ ∖ Φ_L⁺`: roots joining two different blocks.
    pub fn cross_roots(&self, mu: &Composition) -> Vec<(usize, usize)> {
        self.positive_roots().into_iter().filter(|&(k, l)| mu.block_of(k).ok() != mu.block_of(l).ok()).collect()
    }
}

/// An unexpanded product `constant · ∏ factors` of linear forms.
#[derive(Clone, Debug)]
pub struct LinearProduct {
    space: Arc<VariableSpace>,
    constant: BigInt,
    factors: Vec<Polynomial>,
}

impl LinearProduct {
    pub(crate) fn new(space: &Arc<VariableSpace>) -> Self {
        Self { space: Arc::clone(space), constant: BigInt::one(), factors: Vec::new() }
    }

    pub(crate) fn push(&mut self, factor: Polynomial) {
        debug_assert!(factor.is_linear());
        self.factors.push(factor);
    }

    pub(crate) fn extend(&mut self, other: LinearProduct) {
        self.constant *= other.constant;
        self.factors.extend(other.factors);
    }

    pub(crate) fn scale(&mut self, k: impl Into<BigInt>) {
        self.constant *= k.into();
    }

    pub fn space(&self) -> &Arc<VariableSpace> {
        &self.space
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn factors(&self) -> &[Polynomial] {
        &self.factors
    }

    /// Number of linear factors (the degree of the product, ignoring the constant).
    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Number of factors in which `var` occurs.
    pub fn factors_containing(&self, var: Var) -> usize {
        self.factors.iter().filter(|f| f.support_vars().contains(&var)).count()
    }

    pub fn expand(&self) -> Polynomial {
        let product =
            Polynomial::product_of_linear_forms(&self.space, &self.factors).expect("factors are linear forms");
        product.scale(self.constant.clone())
    }

    pub fn map_factors(&self, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<Self> {
        let factors = self.factors.iter().map(f).collect::<Result<Vec<_>>>()?;
        let space = factors.first().map_or_else(|| Arc::clone(&self.space), |p| Arc::clone(p.space()));
        Ok(Self { space, constant: self.constant.clone(), factors })
    }
}

impl fmt::Display for LinearProduct {
    /// Single-variable factors collapse into powers; repeated consecutive
    /// factors are written with an exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<String> = Vec::new();
        if !self.constant.is_one() || self.factors.is_empty() {
            pieces.push(self.constant.to_string());
        }
        let mut powers: Vec<(Var, usize)> = Vec::new();
        let mut others: Vec<(&Polynomial, usize)> = Vec::new();
        for factor in &self.factors {
            let vars = factor.support_vars();
            let is_variable = factor.len() == 1 && vars.len() == 1 && factor.leading_term().unwrap().1.is_one();
            if is_variable {
                match powers.iter_mut().find(|(v, _)| *v == vars[0]) {
                    Some((_, e)) => *e += 1,
                    None => powers.push((vars[0], 1)),
                }
            } else {
                match others.last_mut() {
                    Some((prev, e)) if *prev == factor => *e += 1,
                    _ => others.push((factor, 1)),
                }
            }
        }
        powers.sort();
        for (v, e) in powers {
            pieces.push(if e == 1 { v.to_string() } else { format!("{v}^{e}") });
        }
        let grouped: String = others
            .into_iter()
            .map(|(factor, e)| {
                let text = format_linear(factor);
                if e == 1 {
                    format!("({text})")
                } else {
                    format!("({text})^{e}")
                }
            })
            .collect();
        if !grouped.is_empty() {
            pieces.push(grouped);
        }
        write!(f, "{}", pieces.join(" "))
    }
}

/// A linear form with its variables in increasing order and the constant last.
fn format_linear(p: &Polynomial) -> String {
    let mut out = String::new();
    let mut terms: Vec<_> = p.terms().filter(|(m, _)| !m.is_one()).collect();
    terms.extend(p.terms().filter(|(m, _)| m.is_one()));
    for (m, c) in terms {
        let negative = c.sign() == num_bigint::Sign::Minus;
        let magnitude = c.magnitude();
        if out.is_empty() {
            out.push_str(if negative { "-" } else { "" });
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&p.format_monomial(m));
        } else {
            out.push_str(&format!("{magnitude} {}", p.format_monomial(m)));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `Σ sign·var + constant` built with the variable names of `space`;
/// panics if a variable is missing, which indicates an index bug.
pub(crate) fn form(space: &Arc<VariableSpace>, coeffs: &[(Var, i64)]) -> Polynomial {
    Polynomial::linear(space, coeffs, 0).expect("variable exists in its own space")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for n in 1..=7 {
            let roots = RootSystemA::new(n);
            assert_eq!(roots.positive_roots().len(), n * (n - 1) / 2);
            for mu in Composition::enumerate(n, false).unwrap() {
                let cross = roots.cross_roots(&mu).len();
                let levi = roots.levi_roots(&mu).len();
                assert_eq!(cross + levi, n * (n - 1) / 2);
                let expected: usize = (0..mu.len())
                    .flat_map(|i| (i + 1..mu.len()).map(move |j| (i, j)))
                    .map(|(i, j)| mu.parts()[i] * mu.parts()[j])
                    .sum();
                assert_eq!(cross, expected);
            }
        }
    }

    #[test]
    fn display_groups_powers() {
        let space = Arc::new(VariableSpace::plain(3));
        let mut p = LinearProduct::new(&space);
        p.scale(2);
        p.push(form(&space, &[(Var::X(1), 1)]));
        p.push(form(&space, &[(Var::X(2), 1)]));
        p.push(form(&space, &[(Var::X(1), 1)]));
        p.push(form(&space, &[(Var::X(1), 1), (Var::X(2), 1)]));
        p.push(form(&space, &[(Var::X(1), 1), (Var::X(2), 1)]));
        assert_eq!(p.to_string(), "2 x1^2 x2 (x1 + x2)^2");
        assert_eq!(LinearProduct::new(&space).to_string(), "1");
    }
}
