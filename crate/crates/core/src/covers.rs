//! Local model at one divisor: the cyclic cover `w^d = s`, equivariant
//! lattices upstairs, invariant direct images, and parabolic weights.
//!
//! The generator `ζ` of `μ_d` acts on `w` by `ζ·w` and on `𝔤_r` through
//! `Ad(λ(ζ)) = ζ^{(r,λ)}`. A section `w^j X_r` is invariant iff
//! `j ≡ (r,λ) mod d`, and it descends to `s^{(j − (r,λ))/d} X_r` after
//! untwisting by `θ(s)`.

use std::collections::BTreeMap;

use crate::apartment::{denominator_pair, is_in_closed_alcove};
use crate::error::{Error, Result};
use crate::parahoric::{parahoric_lattice, ParahoricLattice};
use crate::rational::{format_q, frac, Coweight, Q};
use crate::rootsys::RootSystem;

/// `w^d = s` with `λ = dθ ∈ Q∨`; the group is `μ_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCoverDatum {
    pub d: i64,
    pub lambda: Vec<i64>,
}

/// Least nonnegative invariant `w`-exponent per root (aligned with
/// [`RootSystem::roots`]); the Cartan exponent is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantLattice {
    pub exponents: Vec<i64>,
}

/// Weights `d_s/n` with `0 ≤ d_1 < ⋯ < n` and the dimensions of the flag
/// `F^1 ⊋ F^2 ⊋ ⋯`, `F^s` the sum of weight spaces of weight `≥ d_s/n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicStructure {
    pub denominator: i64,
    pub weights: Vec<Q>,
    pub multiplicities: Vec<usize>,
    pub flag_dims: Vec<usize>,
    /// Weight of each root space, aligned with the roots.
    pub root_weights: Vec<Q>,
}

pub fn local_cover(rs: &RootSystem, theta: &Coweight) -> Result<CyclicCoverDatum> {
    let pair = denominator_pair(rs, theta)?;
    Ok(CyclicCoverDatum { d: pair.d, lambda: pair.lambda })
}

fn check_cover(rs: &RootSystem, cover: &CyclicCoverDatum, theta: &Coweight) -> Result<()> {
    let scaled = theta.scale(Q::from(cover.d));
    let matches = cover.d > 0
        && cover.lambda.len() == rs.rank()
        && scaled.to_integers().as_deref() == Some(cover.lambda.as_slice());
    if matches {
        Ok(())
    } else {
        Err(Error::CoverMismatch(format!("d = {}, λ = {:?}, θ = {theta}", cover.d, cover.lambda)))
    }
}

/// `j_r = (r, λ) mod d`.
pub fn equivariant_model(rs: &RootSystem, cover: &CyclicCoverDatum, theta: &Coweight) -> Result<EquivariantLattice> {
    check_cover(rs, cover, theta)?;
    let exponents = rs.roots().iter().map(|r| r.pair_int(&cover.lambda).rem_euclid(cover.d)).collect();
    Ok(EquivariantLattice { exponents })
}

/// Invariant sections `w^{j_r} X_r` descend to `s^{m_r} X_r` with
/// `m_r = (j_r − (r, λ))/d`.
pub fn invariant_direct_image(
    rs: &RootSystem,
    cover: &CyclicCoverDatum,
    eq: &EquivariantLattice,
) -> Result<ParahoricLattice> {
    if eq.exponents.len() != rs.num_roots() {
        return Err(Error::RankMismatch { expected: rs.num_roots(), got: eq.exponents.len() });
    }
    let mut shifts = Vec::with_capacity(rs.num_roots());
    for (r, &j) in rs.roots().iter().zip(&eq.exponents) {
        let diff = j - r.pair_int(&cover.lambda);
        if diff % cover.d != 0 {
            return Err(Error::NonIntegralExponent(r.to_string()));
        }
        shifts.push(diff / cover.d);
    }
    Ok(ParahoricLattice::from_shifts(shifts))
}

fn structure_from_root_weights(rs: &RootSystem, denominator: i64, root_weights: Vec<Q>) -> ParabolicStructure {
    let mut counts: BTreeMap<Q, usize> = BTreeMap::new();
    counts.insert(Q::from(0), rs.rank());
    for &w in &root_weights {
        *counts.entry(w).or_default() += 1;
    }
    let weights: Vec<Q> = counts.keys().copied().collect();
    let multiplicities: Vec<usize> = counts.values().copied().collect();
    let flag_dims = (0..multiplicities.len()).map(|s| multiplicities[s..].iter().sum()).collect();
    ParabolicStructure { denominator, weights, multiplicities, flag_dims, root_weights }
}

/// Weights `frac((r, θ))` on `𝔤_r` and `0` on `𝔱`.
pub fn parabolic_weights(rs: &RootSystem, theta: &Coweight) -> Result<ParabolicStructure> {
    if !is_in_closed_alcove(rs, theta) {
        return Err(Error::OutsideAlcove(format!("{theta}")));
    }
    let cover = local_cover(rs, theta)?;
    let root_weights = rs.roots().iter().map(|r| frac(r.pair_unchecked(theta))).collect();
    Ok(structure_from_root_weights(rs, cover.d, root_weights))
}

/// Parabolic weights read off the characters `j_r / d`.
pub fn weights_from_characters(
    rs: &RootSystem,
    cover: &CyclicCoverDatum,
    eq: &EquivariantLattice,
) -> ParabolicStructure {
    let root_weights = eq.exponents.iter().map(|&j| Q::new(j, cover.d)).collect();
    structure_from_root_weights(rs, cover.d, root_weights)
}

/// Rebuilds the equivariant lattice from the lattice downstairs and the
/// parabolic data: pull back, twist by `λ`, then take the largest
/// subsheaf whose quotient has the torsion prescribed by the weights.
pub fn saturate_from_parabolic(
    rs: &RootSystem,
    cover: &CyclicCoverDatum,
    lattice: &ParahoricLattice,
    parabolic: &ParabolicStructure,
) -> EquivariantLattice {
    let d = cover.d;
    let exponents = rs
        .roots()
        .iter()
        .zip(lattice.shifts())
        .zip(&parabolic.root_weights)
        .map(|((r, &m), &w)| {
            let p = r.pair_int(&cover.lambda);
            let pulled = d * m + p;
            let torsion = (w * Q::from(d)).to_integer();
            let floor = pulled - torsion;
            // least j ≥ floor in the residue class of the character
            floor + (p - floor).rem_euclid(d)
        })
        .collect();
    EquivariantLattice { exponents }
}

/// Descent and parabolic data both recover `𝔓_θ`.
pub fn roundtrip_check(rs: &RootSystem, theta: &Coweight) -> Result<bool> {
    let parabolic = parabolic_weights(rs, theta)?;
    let cover = local_cover(rs, theta)?;
    let eq = equivariant_model(rs, &cover, theta)?;
    let downstairs = invariant_direct_image(rs, &cover, &eq)?;
    let lattice = parahoric_lattice(rs, theta);
    Ok(downstairs == lattice
        && weights_from_characters(rs, &cover, &eq) == parabolic
        && saturate_from_parabolic(rs, &cover, &lattice, &parabolic) == eq)
}

impl ParabolicStructure {
    pub fn total_dim(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Nonzero weights pair `w ↔ 1 − w` with equal multiplicity.
    pub fn is_symmetric(&self) -> bool {
        self.weights.iter().zip(&self.multiplicities).all(|(&w, &m)| {
            if w == Q::from(0) {
                return true;
            }
            let partner = Q::from(1) - w;
            self.weights.iter().position(|&x| x == partner).map(|i| self.multiplicities[i]) == Some(m)
        })
    }

    /// Every weight is `d_s/n` with `0 ≤ d_s < n`.
    pub fn weights_over_denominator(&self) -> bool {
        self.weights.iter().all(|w| {
            let scaled = *w * Q::from(self.denominator);
            scaled.is_integer() && scaled >= Q::from(0) && scaled < Q::from(self.denominator)
        })
    }

    pub fn weight_strings(&self) -> Vec<String> {
        self.weights.iter().map(|&w| format_q(w)).collect()
    }
}
