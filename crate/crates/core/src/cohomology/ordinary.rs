use std::sync::Arc;

use super::{form, LinearProduct};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::polynomial::{Polynomial, Var, VariableSpace};

/// Pairs `(j, k)` with `ν_b + 1 <= j < k <= 2ν_b + μ_b − j`, over all blocks.
pub(crate) fn binomial_pairs(mu: &Composition, b: usize) -> Vec<(usize, usize)> {
    let (nu, m) = (mu.nu(b), mu.part(b));
    let mut out = Vec::new();
    for j in mu.block_range(b) {
        for k in j + 1..=(2 * nu + m).saturating_sub(j) {
            out.push((j, k));
        }
    }
    out
}

fn rhs(mu: &Composition, with_delta: bool) -> LinearProduct {
    let space = Arc::new(VariableSpace::plain(mu.total()));
    let mut out = LinearProduct::new(&space);
    for i in 1..=mu.total() {
        let mut e = mu.right_mass(i).expect("position in range");
        if with_delta {
            e += mu.first_half_flag(i).expect("position in range");
        }
        for _ in 0..e {
            out.push(form(&space, &[(Var::X(i), 1)]));
        }
    }
    for b in 1..=mu.len() {
        for (j, k) in binomial_pairs(mu, b) {
            out.push(form(&space, &[(Var::X(j), 1), (Var::X(k), 1)]));
        }
    }
    out
}

/// `∏ x_i^{R(μ,i)+δ(μ,i)} · ∏_b ∏ (x_j + x_k)` in factored form, without the
/// power of two.
pub fn rhs_orthogonal_factored(mu: &Composition) -> LinearProduct {
    rhs(mu, true)
}

pub fn rhs_orthogonal(mu: &Composition) -> Polynomial {
    rhs_orthogonal_factored(mu).expand()
}

/// `∏ x_i^{R(μ,i)} · ∏_b ∏ (x_j + x_k)`; every part must be even.
pub fn rhs_symplectic_factored(mu: &Composition) -> Result<LinearProduct> {
    if !mu.all_even() {
        return Err(Error::OddPart(mu.parts().to_vec()));
    }
    Ok(rhs(mu, false))
}

pub fn rhs_symplectic(mu: &Composition) -> Result<Polynomial> {
    Ok(rhs_symplectic_factored(mu)?.expand())
}
