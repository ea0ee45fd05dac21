//! Parahoric Lie-algebra lattices over `A = k[[z]]`.
//!
//! A lattice is recorded by one shift exponent per root: the `r`-weight space
//! of the lattice is `z^{m_r} 𝔤_r(A)`, and the Cartan part is `𝔱(A)`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::apartment::{barycenter, AffineWeylElement, FacetLabel};
use crate::error::{Error, Result};
use crate::rational::{ceil, format_q, int, Coweight, Q};
use crate::rootsys::{RootSystem, RootVector};

/// A subset `I ⊆ S`, stored as a bitmask over affine indices `1..=ℓ`
/// (bit 0 is always clear), so `I ∪ {α₀}` is `bits | 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleSubset(u32);

impl SimpleSubset {
    pub fn new(bits: u32, rank: usize) -> Result<Self> {
        if bits & 1 == 1 || bits >> (rank + 1) != 0 {
            return Err(Error::IndexOutOfRange { index: 31 - bits.leading_zeros() as usize, rank });
        }
        Ok(SimpleSubset(bits))
    }

    pub fn empty() -> Self {
        SimpleSubset(0)
    }

    pub fn full(rank: usize) -> Self {
        SimpleSubset(((1u32 << rank) - 1) << 1)
    }

    /// From 1-based simple-root indices.
    pub fn from_indices(indices: &[usize], rank: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            bits |= 1 << i;
        }
        Ok(SimpleSubset(bits))
    }

    /// From 0-based simple-root slots.
    pub fn from_slots(slots: impl IntoIterator<Item = usize>) -> Self {
        SimpleSubset(slots.into_iter().fold(0, |acc, k| acc | 1 << (k + 1)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Contains the simple root in 0-based slot `k`.
    pub fn contains_slot(self, k: usize) -> bool {
        self.0 >> (k + 1) & 1 == 1
    }

    /// 0-based slots in increasing order.
    pub fn slots(self) -> impl Iterator<Item = usize> {
        (1..32).filter(move |i| self.0 >> i & 1 == 1).map(|i| i - 1)
    }

    pub fn is_subset_of(self, other: SimpleSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, rank: usize) -> SimpleSubset {
        SimpleSubset(SimpleSubset::full(rank).0 & !self.0)
    }

    /// `𝕀 = I ∪ {α₀}`.
    pub fn with_affine_root(self, rank: usize) -> FacetLabel {
        FacetLabel::new(self.0 | 1, rank).expect("nonempty")
    }

    /// All `2^ℓ` subsets, in increasing bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleSubset> {
        (0u32..(1 << rank)).map(|b| SimpleSubset(b << 1))
    }

    pub fn names(self) -> String {
        self.slots().map(|k| format!("a{}", k + 1)).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names())
    }
}

/// `𝔓 = 𝔱(A) ⊕ ⊕_r z^{m_r} 𝔤_r(A)`, shifts aligned with
/// [`RootSystem::roots`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParahoricLattice {
    shifts: Vec<i64>,
    cartan_shift: i64,
}

impl ParahoricLattice {
    pub fn from_shifts(shifts: Vec<i64>) -> Self {
        ParahoricLattice { shifts, cartan_shift: 0 }
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn shift(&self, root_index: usize) -> i64 {
        self.shifts[root_index]
    }

    pub fn cartan_shift(&self) -> i64 {
        self.cartan_shift
    }

    /// Shift of a root given by coefficients.
    pub fn shift_of(&self, rs: &RootSystem, r: &RootVector) -> Option<i64> {
        rs.root_index(r).map(|i| self.shifts[i])
    }

    /// `self ⊆ other`: every shift at least as large.
    pub fn is_sublattice_of(&self, other: &ParahoricLattice) -> bool {
        self.cartan_shift >= other.cartan_shift && self.shifts.iter().zip(&other.shifts).all(|(a, b)| a >= b)
    }

    /// `m_r + m_{−r} ∈ {0, 1}` for every root.
    pub fn has_admissible_pair_sums(&self, rs: &RootSystem) -> bool {
        rs.roots().iter().enumerate().all(|(i, r)| {
            let j = rs.root_index(&r.neg()).expect("Φ = −Φ");
            matches!(self.shifts[i] + self.shifts[j], 0 | 1)
        })
    }

    /// `m_r + m_{r'} ≥ m_{r+r'}` whenever `r + r'` is a root, and the
    /// Cartan bracket `[𝔤_r, 𝔤_{−r}] ⊆ 𝔱` lands in `z^{m_r + m_{−r}}𝔱(A)`.
    pub fn is_bracket_closed(&self, rs: &RootSystem) -> bool {
        let roots = rs.roots();
        for (i, r) in roots.iter().enumerate() {
            for (j, s) in roots.iter().enumerate() {
                let sum = r.add(s);
                if sum.coeffs().iter().all(Zero::is_zero) {
                    if self.shifts[i] + self.shifts[j] < self.cartan_shift {
                        return false;
                    }
                } else if let Some(k) = rs.root_index(&sum) {
                    if self.shifts[i] + self.shifts[j] < self.shifts[k] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Transport along `w ∈ W^aff`: if `self` is the lattice at `θ`, the
    /// result is the lattice at `w·θ`, via `m_{σr}(wθ) = m_r(θ) − (σr, q)`.
    pub fn transport(&self, rs: &RootSystem, w: &AffineWeylElement) -> ParahoricLattice {
        let mut shifts = vec![0; self.shifts.len()];
        for (i, r) in rs.roots().iter().enumerate() {
            let image = w.apply_root(r);
            let k = rs.root_index(&image).expect("Weyl group permutes roots");
            shifts[k] = self.shifts[i] - image.pair_int(w.translation());
        }
        ParahoricLattice { shifts, cartan_shift: self.cartan_shift }
    }
}

/// Lattice attached to a rotation-twisted cocharacter `η = (a, θ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineParahoricLattice {
    lattice: ParahoricLattice,
    cartan_threshold: i64,
}

impl AffineParahoricLattice {
    pub fn lattice(&self) -> &ParahoricLattice {
        &self.lattice
    }

    pub fn shifts(&self) -> &[i64] {
        self.lattice.shifts()
    }

    /// Least power of `z` kept on `𝔱`; always 0 for positive rotation.
    pub fn cartan_threshold(&self) -> i64 {
        self.cartan_threshold
    }
}

/// Weight of a loop monomial: the Cartan or a root space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoopWeight {
    Cartan,
    Root(RootVector),
}

/// `z^b ⊗ X` with `X ∈ 𝔱` or `X ∈ 𝔤_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopMonomial {
    pub weight: LoopWeight,
    pub power: i64,
}

impl LoopMonomial {
    pub fn root(r: RootVector, power: i64) -> Self {
        LoopMonomial { weight: LoopWeight::Root(r), power }
    }

    pub fn cartan(power: i64) -> Self {
        LoopMonomial { weight: LoopWeight::Cartan, power }
    }
}

/// `m_r(θ) = −⌊(r, θ)⌋` for every root.
pub fn parahoric_lattice(rs: &RootSystem, theta: &Coweight) -> ParahoricLattice {
    let shifts = rs.roots().iter().map(|r| -crate::rational::floor(r.pair_unchecked(theta))).collect();
    ParahoricLattice { shifts, cartan_shift: 0 }
}

fn check_rotation(a: Q) -> Result<()> {
    if a.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveRotation(format_q(a)))
    }
}

/// Whether `lim_{s→0} Ad(η(s))(z^b X)` exists for `η = (a, θ)`.
///
/// Conjugation by `η(s)` sends `z^b X_r` to `s^{a·b + (r,θ)} z^b X_r`, so the
/// limit exists iff `a·b + (r, θ) ≥ 0`; on `𝔱` iff `b ≥ 0`.
pub fn limit_membership(rs: &RootSystem, mono: &LoopMonomial, a: Q, theta: &Coweight) -> Result<bool> {
    check_rotation(a)?;
    if theta.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), got: theta.rank() });
    }
    Ok(match &mono.weight {
        LoopWeight::Cartan => mono.power >= 0,
        LoopWeight::Root(r) => !(a * int(mono.power) + r.pair(theta)?).is_negative(),
    })
}

/// `m_r = ⌈−(r, θ)/a⌉`, Cartan threshold 0.
pub fn eta_parahoric(rs: &RootSystem, a: Q, theta: &Coweight) -> Result<AffineParahoricLattice> {
    check_rotation(a)?;
    let shifts = rs.roots().iter().map(|r| ceil(-r.pair_unchecked(theta) / a)).collect();
    Ok(AffineParahoricLattice { lattice: ParahoricLattice { shifts, cartan_shift: 0 }, cartan_threshold: 0 })
}

/// `ev⁻¹(Q_I)`: shift 1 exactly on negative roots whose support meets `I`.
/// The Levi of `Q_I` has simple roots `S ∖ I`.
pub fn std_parahoric(rs: &RootSystem, subset: SimpleSubset) -> ParahoricLattice {
    let shifts =
        rs.roots().iter().map(|r| i64::from(r.is_negative() && r.support().any(|k| subset.contains_slot(k)))).collect();
    ParahoricLattice { shifts, cartan_shift: 0 }
}

/// `std_parahoric(I) == parahoric_lattice(θ_{I ∪ {α₀}})`.
pub fn std_vs_facet_check(rs: &RootSystem, subset: SimpleSubset) -> bool {
    std_parahoric(rs, subset) == parahoric_lattice(rs, &barycenter(rs, subset.with_affine_root(rs.rank())))
}

/// Generator listing: `T(A)` followed by `u_r(z^{m_r} A)` per root.
pub fn generators(rs: &RootSystem, lattice: &ParahoricLattice) -> Vec<String> {
    std::iter::once("T(A)".to_string())
        .chain(rs.roots().iter().zip(lattice.shifts()).map(|(r, m)| format!("u_{r}(z^{m} A)")))
        .collect()
}

/// Smallest `b` in `[lo, hi]` accepted by [`limit_membership`], if any.
pub fn minimal_accepted_power(
    rs: &RootSystem,
    r: &RootVector,
    a: Q,
    theta: &Coweight,
    lo: i64,
    hi: i64,
) -> Result<Option<i64>> {
    for b in lo..=hi {
        if limit_membership(rs, &LoopMonomial::root(r.clone(), b), a, theta)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// The hyperspecial lattice `𝔤(A)`.
pub fn hyperspecial(rs: &RootSystem) -> ParahoricLattice {
    ParahoricLattice { shifts: vec![0; rs.num_roots()], cartan_shift: 0 }
}

/// Homogeneity helper: `θ / a`.
pub fn normalize(theta: &Coweight, a: Q) -> Coweight {
    theta.scale(Q::one() / a)
}
