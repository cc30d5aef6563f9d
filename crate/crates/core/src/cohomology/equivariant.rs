use std::sync::Arc;

use super::ordinary::binomial_pairs;
use super::{form, LinearProduct};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::polynomial::{Polynomial, Var, VariableSpace};
use crate::wset::Family;

fn check_block(mu: &Composition, i: usize) -> Result<()> {
    if i == 0 || i > mu.len() {
        return Err(Error::IndexOutOfRange { index: i, max: mu.len() });
    }
    Ok(())
}

fn space_for(mu: &Composition) -> Arc<VariableSpace> {
    Arc::new(VariableSpace::for_composition(mu))
}

fn f_factors(space: &Arc<VariableSpace>, mu: &Composition, i: usize) -> LinearProduct {
    let mut out = LinearProduct::new(space);
    let start = mu.nu(i);
    for j in start + 1..=start + mu.part(i) / 2 {
        out.push(form(space, &[(Var::X(j), 1), (Var::Z(i), -1)]));
    }
    out
}

fn g_factors(space: &Arc<VariableSpace>, mu: &Composition, i: usize) -> LinearProduct {
    let mut out = LinearProduct::new(space);
    for (j, k) in binomial_pairs(mu, i) {
        out.push(form(space, &[(Var::X(j), 1), (Var::X(k), 1), (Var::Z(i), -2)]));
    }
    out
}

/// `h_{i,j}`: for each `k` in block `i`, the factor `x_k − z_j` when `μ_j` is
/// odd, then `(x_k − y_{j,l} − z_j)(x_k + y_{j,l} − z_j)` for `l <= ⌊μ_j/2⌋`.
fn h_pair_factors(space: &Arc<VariableSpace>, mu: &Composition, i: usize, j: usize) -> LinearProduct {
    let mut out = LinearProduct::new(space);
    let half = mu.part(j) / 2;
    if mu.part(j) % 2 == 1 {
        for k in mu.block_range(i) {
            out.push(form(space, &[(Var::X(k), 1), (Var::Z(j), -1)]));
        }
    }
    for k in mu.block_range(i) {
        for l in 1..=half {
            out.push(form(space, &[(Var::X(k), 1), (Var::YBlock(j, l), -1), (Var::Z(j), -1)]));
            out.push(form(space, &[(Var::X(k), 1), (Var::YBlock(j, l), 1), (Var::Z(j), -1)]));
        }
    }
    out
}

/// `f_i = ∏_{j in the first half of block i} (x_j − z_i)`.
pub fn f_block(mu: &Composition, i: usize) -> Result<LinearProduct> {
    check_block(mu, i)?;
    Ok(f_factors(&space_for(mu), mu, i))
}

/// `g_i = ∏_{ν_i+1 <= j < k <= 2ν_i+μ_i−j} (x_j + x_k − 2z_i)`.
pub fn g_block(mu: &Composition, i: usize) -> Result<LinearProduct> {
    check_block(mu, i)?;
    Ok(g_factors(&space_for(mu), mu, i))
}

pub fn h_pair_xyz(mu: &Composition, i: usize, j: usize) -> Result<LinearProduct> {
    check_block(mu, i)?;
    check_block(mu, j)?;
    if i >= j {
        return Err(Error::IndexOutOfRange { index: i, max: j.saturating_sub(1) });
    }
    Ok(h_pair_factors(&space_for(mu), mu, i, j))
}

/// `h_μ(x,y,z) = ∏_{i<j} h_{i,j}`.
pub fn h_mu_xyz(mu: &Composition) -> LinearProduct {
    h_mu_xyz_in(&space_for(mu), mu)
}

/// `P_n = ∏_{1<=i<=j<=n−i} (x_i + x_j − 2z)`, read literally: the diagonal
/// factors are `2x_i − 2z`. `z` is `z₁` of the single-block space.
pub fn base_class_orthogonal(n: usize) -> Result<Polynomial> {
    let mu = Composition::single(n)?;
    Ok(block_base_product(&mu, Family::Orthogonal)?.expand())
}

/// `P′ = ∏_{1<=i<j<=2n−i} (x_i + x_j − 2z)` for a flag of even size `two_n`.
pub fn base_class_symplectic(two_n: usize) -> Result<Polynomial> {
    if two_n % 2 == 1 {
        return Err(Error::OddSize(two_n));
    }
    let mu = Composition::single(two_n)?;
    Ok(block_base_product(&mu, Family::Symplectic)?.expand())
}

/// `∏_i P_{μ_i}(x^{(i)}, z_i)` (resp. `P′`), each base class written in the
/// variables of its own block.
pub fn block_base_product(mu: &Composition, family: Family) -> Result<LinearProduct> {
    if family == Family::Symplectic && !mu.all_even() {
        return Err(Error::OddPart(mu.parts().to_vec()));
    }
    let space = space_for(mu);
    let mut out = LinearProduct::new(&space);
    for b in 1..=mu.len() {
        let (nu, m) = (mu.nu(b), mu.part(b));
        for a in 1..=m {
            let first = if family == Family::Orthogonal { a } else { a + 1 };
            for c in first..=m.saturating_sub(a) {
                let (j, k) = (nu + a, nu + c);
                let coeffs: Vec<(Var, i64)> = if j == k {
                    vec![(Var::X(j), 2), (Var::Z(b), -2)]
                } else {
                    vec![(Var::X(j), 1), (Var::X(k), 1), (Var::Z(b), -2)]
                };
                out.push(form(&space, &coeffs));
            }
        }
    }
    Ok(out)
}

/// `2^{d(μ)} h_μ(x,y,z) ∏_i f_i g_i`.
pub fn class_orthogonal_equivariant(mu: &Composition) -> LinearProduct {
    let space = space_for(mu);
    let mut out = LinearProduct::new(&space);
    out.scale(num_bigint::BigInt::from(2).pow(mu.half_weight() as u32));
    out.extend(h_mu_xyz_in(&space, mu));
    for i in 1..=mu.len() {
        out.extend(f_factors(&space, mu, i));
        out.extend(g_factors(&space, mu, i));
    }
    out
}

/// `h_μ(x,y,z) ∏_i g_i`; every part must be even.
pub fn class_symplectic_equivariant(mu: &Composition) -> Result<LinearProduct> {
    if !mu.all_even() {
        return Err(Error::OddPart(mu.parts().to_vec()));
    }
    let space = space_for(mu);
    let mut out = LinearProduct::new(&space);
    out.extend(h_mu_xyz_in(&space, mu));
    for i in 1..=mu.len() {
        out.extend(g_factors(&space, mu, i));
    }
    Ok(out)
}

fn h_mu_xyz_in(space: &Arc<VariableSpace>, mu: &Composition) -> LinearProduct {
    let mut out = LinearProduct::new(space);
    for i in 1..=mu.len() {
        for j in i + 1..=mu.len() {
            out.extend(h_pair_factors(space, mu, i, j));
        }
    }
    out
}
