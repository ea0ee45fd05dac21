//! Orbits of the wonderful compactification, standard curves, and the
//! monomial model of the Lie-algebra bundle on the toric chart `Y₀ ≅ 𝔸^ℓ`.
//!
//! Chart coordinates are `x_α = t^α`, so a dominant cocharacter has a limit
//! as `s → 0`. The covering `y_α^{(ℓ+1)d_α} = x_α` turns Ad-integrality of a
//! monomial `x^m X_r` into the inequality `(ℓ+1) d_α m_α + r_α ≥ 0`.

use std::fmt::Write as _;

use crate::apartment::alcove_vertex;
use crate::error::{Error, Result};
use crate::parahoric::{parahoric_lattice, ParahoricLattice, SimpleSubset};
use crate::rational::{Coweight, Q};
use crate::rootsys::{RootSystem, RootVector};

/// The `G × G`-orbits `Z_I`, one per `I ⊆ S`, with `Z_∅` open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPoset {
    rank: usize,
    elements: Vec<SimpleSubset>,
}

pub fn orbit_poset(rs: &RootSystem) -> OrbitPoset {
    let rank = rs.rank();
    let mut elements: Vec<SimpleSubset> = SimpleSubset::all(rank).collect();
    elements.sort_by_key(|s| (s.len(), s.bits()));
    OrbitPoset { rank, elements }
}

impl OrbitPoset {
    /// Orbits ordered by codimension, then bitmask.
    pub fn elements(&self) -> &[SimpleSubset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn codim(&self, i: SimpleSubset) -> usize {
        i.len()
    }

    /// `Z_I ⊆ closure(Z_J)` iff `J ⊆ I`.
    pub fn in_closure(&self, i: SimpleSubset, j: SimpleSubset) -> bool {
        j.is_subset_of(i)
    }

    pub fn open_orbit(&self) -> SimpleSubset {
        SimpleSubset::empty()
    }

    pub fn closed_orbit(&self) -> SimpleSubset {
        SimpleSubset::full(self.rank)
    }

    /// Simple roots of the Levi of the parabolic attached to `Z_I`.
    pub fn levi_basis(&self, i: SimpleSubset) -> SimpleSubset {
        i.complement(self.rank)
    }

    /// Cover relations `(J, I)` with `I = J ∪ {α}`.
    pub fn hasse_edges(&self) -> Vec<(SimpleSubset, SimpleSubset)> {
        let mut edges = Vec::new();
        for &j in &self.elements {
            for k in j.complement(self.rank).slots() {
                edges.push((j, SimpleSubset::from_slots(j.slots().chain([k]))));
            }
        }
        edges
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orbits {\n  rankdir=TB;\n");
        for &i in &self.elements {
            let _ = writeln!(
                out,
                "  \"{}\" [label=\"Z_{}\", codim={}, levi=\"{}\"];",
                node_name(i),
                i,
                i.len(),
                self.levi_basis(i)
            );
        }
        for (j, i) in self.hasse_edges() {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", node_name(j), node_name(i));
        }
        out.push_str("}\n");
        out
    }
}

fn node_name(i: SimpleSubset) -> String {
    if i.is_empty() {
        "open".to_string()
    } else {
        i.names()
    }
}

/// `λ = Σ k_α ω_α∨` with `k ≥ 0`, defining the curve `C_λ` through `z_I`,
/// `I = support(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveDatum {
    k: Vec<i64>,
}

impl CurveDatum {
    pub fn new(k: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = k.iter().find(|&&x| x < 0) {
            return Err(Error::NotDominant(bad));
        }
        Ok(CurveDatum { k })
    }

    /// The standard curve through `z_I`.
    pub fn standard(subset: SimpleSubset, rank: usize) -> Self {
        CurveDatum { k: (0..rank).map(|a| i64::from(subset.contains_slot(a))).collect() }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.k
    }

    pub fn rank(&self) -> usize {
        self.k.len()
    }

    pub fn support(&self) -> SimpleSubset {
        SimpleSubset::from_slots(self.k.iter().enumerate().filter(|(_, &x)| x != 0).map(|(a, _)| a))
    }

    pub fn is_standard(&self) -> bool {
        self.k.iter().all(|&x| x <= 1)
    }
}

fn check_rank(rs: &RootSystem, c: &CurveDatum) -> Result<()> {
    if c.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), got: c.rank() });
    }
    Ok(())
}

/// `θ_λ = Σ k_α θ_α / (ℓ+1)`.
pub fn theta_of_curve(rs: &RootSystem, c: &CurveDatum) -> Result<Coweight> {
    check_rank(rs, c)?;
    let n = rs.rank();
    let sum =
        c.k.iter()
            .enumerate()
            .fold(Coweight::zero(n), |acc, (a, &k)| &acc + &alcove_vertex(rs, a + 1).scale(Q::from(k)));
    Ok(sum.scale(Q::new(1, n as i64 + 1)))
}

/// Divisor exponents `n_{r,α}` of the line summand `𝓡_r`, aligned with
/// [`RootSystem::roots`]; the Cartan summand is trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultidegreeBundle {
    exponents: Vec<Vec<i64>>,
}

impl MultidegreeBundle {
    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    pub fn exponent(&self, root_index: usize) -> &[i64] {
        &self.exponents[root_index]
    }
}

fn covering_degree(rs: &RootSystem, a: usize) -> i64 {
    (rs.rank() as i64 + 1) * rs.ramification_indices()[a]
}

/// `n_{r,α} = −⌊r_α / ((ℓ+1) d_α)⌋`.
pub fn bundle_multidegrees(rs: &RootSystem) -> MultidegreeBundle {
    let degrees: Vec<i64> = (0..rs.rank()).map(|a| covering_degree(rs, a)).collect();
    let exponents = rs
        .roots()
        .iter()
        .map(|r| r.coeffs().iter().zip(&degrees).map(|(&m, &deg)| -m.div_euclid(deg)).collect())
        .collect();
    MultidegreeBundle { exponents }
}

/// Whether `x^m X_r` is a section of `𝓡` over `Y₀`.
pub fn monomial_membership(rs: &RootSystem, r: &RootVector, m: &[i64]) -> bool {
    (0..rs.rank()).all(|a| covering_degree(rs, a) * m[a] + r.coeff(a) >= 0)
}

/// Ad-integrality lattice of sections along `U_λ`: `𝔓_{θ_λ}`.
pub fn restrict_direct(rs: &RootSystem, c: &CurveDatum) -> Result<ParahoricLattice> {
    Ok(parahoric_lattice(rs, &theta_of_curve(rs, c)?))
}

/// Naive pullback exponents `ẽ_r = Σ k_α n_{r,α}`, aligned with the roots.
pub fn restrict_pullback(rs: &RootSystem, c: &CurveDatum) -> Result<Vec<i64>> {
    check_rank(rs, c)?;
    let bundle = bundle_multidegrees(rs);
    Ok(bundle.exponents.iter().map(|n| n.iter().zip(&c.k).map(|(x, k)| x * k).sum()).collect())
}

/// `ẽ_r − m_r` for a standard curve.
pub fn saturation_defect(rs: &RootSystem, c: &CurveDatum) -> Result<Vec<i64>> {
    if let Some(&bad) = c.k.iter().find(|&&x| x > 1) {
        return Err(Error::NotStandard(bad));
    }
    let pullback = restrict_pullback(rs, c)?;
    let direct = restrict_direct(rs, c)?;
    Ok(pullback.iter().zip(direct.shifts()).map(|(p, m)| p - m).collect())
}
