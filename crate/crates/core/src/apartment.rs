//! The fundamental alcove `a₀`, its facets, and the affine Weyl group
//! `W^aff = W ⋉ Q∨` acting on the apartment `E = Y(T) ⊗ ℚ`.
//!
//! Affine simple roots are indexed `0..=ℓ`: index 0 is `α₀ = 1 − θ_high`,
//! index `k ≥ 1` is the simple root `α_k` (coefficient slot `k − 1`).

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Coweight, Q};
use crate::rootsys::{mat_mul, RootSystem, RootVector};

/// Greedy reduction never needs more steps than this.
pub const REDUCTION_STEP_BOUND: usize = 1_000_000;

/// Name of affine simple root `i`: `"a0"`, `"a1"`, ...
pub fn affine_root_name(i: usize) -> String {
    format!("a{i}")
}

/// A nonempty subset `𝕀` of the affine simple roots, stored as a bitmask
/// (bit 0 = `α₀`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetLabel(u32);

impl FacetLabel {
    pub fn new(bits: u32, rank: usize) -> Result<Self> {
        if bits == 0 {
            return Err(Error::EmptySubset);
        }
        if bits >> (rank + 1) != 0 {
            return Err(Error::IndexOutOfRange { index: 31 - bits.leading_zeros() as usize, rank });
        }
        Ok(FacetLabel(bits))
    }

    pub fn from_indices(indices: &[usize], rank: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            bits |= 1 << i;
        }
        FacetLabel::new(bits, rank)
    }

    /// `𝕊` itself: the open alcove.
    pub fn full(rank: usize) -> Self {
        FacetLabel((1u32 << (rank + 1)) - 1)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn is_subset_of(self, other: FacetLabel) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 >> i & 1 == 1)
    }

    /// Codimension of `Σ_𝕀` in the apartment: `ℓ + 1 − |𝕀|`.
    pub fn codim(self, rank: usize) -> usize {
        rank + 1 - self.len()
    }

    /// Comma-separated names, e.g. `a0,a2`.
    pub fn names(self) -> String {
        self.indices().map(affine_root_name).collect::<Vec<_>>().join(",")
    }

    /// Every nonempty subset of `𝕊`, in increasing bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = FacetLabel> {
        (1u32..(1 << (rank + 1))).map(FacetLabel)
    }
}

impl fmt::Display for FacetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names())
    }
}

/// `θ ↦ (linear, θ) + constant`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineFunctional {
    pub linear: RootVector,
    pub constant: Q,
}

impl AffineFunctional {
    pub fn eval(&self, theta: &Coweight) -> Q {
        self.linear.pair_unchecked(theta) + self.constant
    }

    pub fn neg(&self) -> AffineFunctional {
        AffineFunctional { linear: self.linear.neg(), constant: -self.constant }
    }

    /// Same zero set: equal up to sign.
    pub fn same_hyperplane(&self, other: &AffineFunctional) -> bool {
        self == other || *self == other.neg()
    }
}

impl fmt::Display for AffineFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}", self.linear, crate::rational::format_q(self.constant))
    }
}

/// `(d, λ)` with `d` least positive such that `λ = d·θ ∈ Q∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorPair {
    pub d: i64,
    pub lambda: Vec<i64>,
}

/// `θ_α = ω_α∨ / c_α` for `α ∈ S`, and `0` for `α₀`; indexed `0..=ℓ`.
pub fn alcove_vertices(rs: &RootSystem) -> Vec<Coweight> {
    let n = rs.rank();
    let mut out = vec![Coweight::zero(n)];
    out.extend((0..n).map(|k| Coweight::fundamental(n, k).scale(Q::new(1, rs.highest_root_coefficients()[k]))));
    out
}

/// Vertex `θ_α` for affine index `i`.
pub fn alcove_vertex(rs: &RootSystem, i: usize) -> Coweight {
    let n = rs.rank();
    if i == 0 {
        Coweight::zero(n)
    } else {
        Coweight::fundamental(n, i - 1).scale(Q::new(1, rs.highest_root_coefficients()[i - 1]))
    }
}

/// The `ℓ + 1` wall functionals of `a₀`, indexed `0..=ℓ`.
pub fn affine_simple_roots(rs: &RootSystem) -> Vec<AffineFunctional> {
    let n = rs.rank();
    let mut out = vec![AffineFunctional { linear: rs.highest_root().neg(), constant: Q::one() }];
    out.extend((0..n).map(|k| AffineFunctional { linear: RootVector::simple(n, k), constant: Q::zero() }));
    out
}

fn affine_values(rs: &RootSystem, theta: &Coweight) -> Vec<Q> {
    let h = rs.highest_root().pair_unchecked(theta);
    std::iter::once(Q::one() - h).chain(theta.coords().iter().copied()).collect()
}

pub fn is_in_closed_alcove(rs: &RootSystem, theta: &Coweight) -> bool {
    theta.rank() == rs.rank() && affine_values(rs, theta).iter().all(|v| !v.is_negative())
}

/// The facet `𝕀 = {α : α(θ) ≠ 0}` of the closed alcove containing `θ`.
pub fn facet_of(rs: &RootSystem, theta: &Coweight) -> Result<FacetLabel> {
    check_rank(rs, theta)?;
    let values = affine_values(rs, theta);
    let mut bits = 0u32;
    for (i, v) in values.iter().enumerate() {
        if v.is_negative() {
            return Err(Error::OutsideAlcove(format!("{}({theta})", affine_root_name(i))));
        }
        if !v.is_zero() {
            bits |= 1 << i;
        }
    }
    FacetLabel::new(bits, rs.rank())
}

/// `θ_𝕀 = |𝕀|⁻¹ Σ_{α∈𝕀} θ_α`.
pub fn barycenter(rs: &RootSystem, label: FacetLabel) -> Coweight {
    let sum = label.indices().fold(Coweight::zero(rs.rank()), |acc, i| &acc + &alcove_vertex(rs, i));
    sum.scale(Q::new(1, label.len() as i64))
}

/// Brute force over `k = 1, 2, ...` for the least `k` with `kθ ∈ Q∨`.
pub fn denominator_pair(rs: &RootSystem, theta: &Coweight) -> Result<DenominatorPair> {
    check_rank(rs, theta)?;
    let bound = theta.denominator_lcm() * rs.connection_index();
    for d in 1..=bound {
        let scaled = theta.scale(int(d));
        if let Some(lambda) = scaled.to_integers() {
            if rs.in_coroot_lattice(&lambda) {
                return Ok(DenominatorPair { d, lambda });
            }
        }
    }
    unreachable!("lcm(denominators)·det(A)·θ always lies in the coroot lattice")
}

fn check_rank(rs: &RootSystem, theta: &Coweight) -> Result<()> {
    if theta.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), got: theta.rank() });
    }
    Ok(())
}

/// An element of `W^aff` acting by `θ ↦ Mθ + q` on coweight coordinates,
/// together with the matching linear action `r ↦ Rr` on roots, so that
/// `(Rr, Mθ) = (r, θ)`. `word` lists simple reflections left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeylElement {
    pub word: Vec<usize>,
    coweight_matrix: Vec<Vec<i64>>,
    translation: Vec<i64>,
    root_matrix: Vec<Vec<i64>>,
}

impl AffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        let id: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect();
        AffineWeylElement { word: Vec::new(), coweight_matrix: id.clone(), translation: vec![0; rank], root_matrix: id }
    }

    /// The affine simple reflection `s_i`, `i ∈ 0..=ℓ`.
    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        let n = rs.rank();
        if i > n {
            return Err(Error::InvalidWord { letter: i, rank: n });
        }
        // Reflection in the hyperplane of root `beta`, plus `shift·β∨`.
        let (beta, shift) = if i == 0 { (rs.highest_root().clone(), 1) } else { (RootVector::simple(n, i - 1), 0) };
        let co = rs.coroot(&beta);
        let coweight_matrix =
            (0..n).map(|j| (0..n).map(|m| i64::from(j == m) - co[j] * beta.coeff(m)).collect()).collect();
        let root_matrix = (0..n).map(|j| (0..n).map(|m| i64::from(j == m) - beta.coeff(j) * co[m]).collect()).collect();
        Ok(AffineWeylElement {
            word: vec![i],
            coweight_matrix,
            translation: co.iter().map(|c| c * shift).collect(),
            root_matrix,
        })
    }

    /// Product `s_{w_0} s_{w_1} ⋯` of affine simple reflections.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut out = AffineWeylElement::identity(rs.rank());
        for &i in word {
            out = out.compose(&AffineWeylElement::simple(rs, i)?);
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineWeylElement) -> AffineWeylElement {
        let m = &self.coweight_matrix;
        let translation = (0..m.len())
            .map(|j| m[j].iter().zip(&other.translation).map(|(a, b)| a * b).sum::<i64>() + self.translation[j])
            .collect();
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        AffineWeylElement {
            word,
            coweight_matrix: mat_mul(m, &other.coweight_matrix),
            translation,
            root_matrix: mat_mul(&self.root_matrix, &other.root_matrix),
        }
    }

    pub fn apply(&self, theta: &Coweight) -> Coweight {
        Coweight::new(
            self.coweight_matrix
                .iter()
                .zip(&self.translation)
                .map(|(row, &t)| row.iter().zip(theta.coords()).fold(int(t), |acc, (&m, x)| acc + x * m))
                .collect(),
        )
    }

    /// Linear part on roots.
    pub fn apply_root(&self, r: &RootVector) -> RootVector {
        RootVector::new(
            self.root_matrix.iter().map(|row| row.iter().zip(r.coeffs()).map(|(a, b)| a * b).sum()).collect(),
        )
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    /// Transport of a functional: `(w·f)(x) = f(w⁻¹x)`, so
    /// `(r, b) ↦ (σr, b − (σr, q))`.
    pub fn apply_functional(&self, f: &AffineFunctional) -> AffineFunctional {
        let linear = self.apply_root(&f.linear);
        let shift = linear.pair_int(&self.translation);
        AffineFunctional { constant: f.constant - shift, linear }
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn word_string(&self) -> String {
        word_string(&self.word)
    }
}

/// `"e"` for the empty word, else `s0s2s1`-style.
pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect()
    }
}

/// Moves `θ` into the closed fundamental alcove by repeatedly reflecting in
/// the first violated wall (lowest affine index). Returns the alcove point
/// and an element `w` with `w·θ` equal to it.
pub fn reduce_to_alcove(rs: &RootSystem, theta: &Coweight) -> Result<(Coweight, AffineWeylElement)> {
    check_rank(rs, theta)?;
    let mut point = theta.clone();
    let mut w = AffineWeylElement::identity(rs.rank());
    for _ in 0..REDUCTION_STEP_BOUND {
        let values = affine_values(rs, &point);
        let Some(i) = values.iter().position(Signed::is_negative) else {
            return Ok((point, w));
        };
        let s = AffineWeylElement::simple(rs, i)?;
        point = s.apply(&point);
        w = s.compose(&w);
    }
    Err(Error::StepBound(REDUCTION_STEP_BOUND))
}
