//! Root systems built from Cartan matrices.
//!
//! Conventions: `A[i][j] = ⟨α_i∨, α_j⟩`. Roots are stored by their
//! coefficients in the simple-root basis, coweights by their coordinates in
//! the fundamental-coweight basis, so the pairing `(r, θ)` is a dot product.
//! In these coordinates the simple coroot `α_i∨` is row `i` of `A`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Coweight, Q};

/// Upper bound on the number of roots produced by the reflection closure.
/// E8 has 240; anything larger means the input is not of finite type.
const MAX_ROOTS: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootVector(coeffs)
    }

    pub fn simple(rank: usize, k: usize) -> Self {
        let mut c = vec![0; rank];
        c[k] = 1;
        RootVector(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0[k]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn has_uniform_sign(&self) -> bool {
        self.is_positive() || self.is_negative()
    }

    /// Indices of simple roots with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, _)| k)
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exact pairing `(r, θ) = Σ_k r_k θ^(k)`.
    pub fn pair(&self, theta: &Coweight) -> Result<Q> {
        if self.rank() != theta.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: theta.rank() });
        }
        Ok(self.pair_unchecked(theta))
    }

    pub(crate) fn pair_unchecked(&self, theta: &Coweight) -> Q {
        self.0.iter().zip(theta.coords()).fold(Q::zero(), |acc, (&m, t)| acc + t * m)
    }

    /// Pairing with an integral coweight.
    pub fn pair_int(&self, lambda: &[i64]) -> i64 {
        self.0.iter().zip(lambda).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Free-function form of [`RootVector::pair`].
pub fn pair(r: &RootVector, theta: &Coweight) -> Result<Q> {
    r.pair(theta)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates the matrix: square, diagonal 2, non-positive off-diagonal
    /// entries with symmetric zero pattern, connected Dynkin diagram, and a
    /// positive-definite symmetrization.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is {a}")));
                }
                if i != j && a > 0 {
                    return Err(Error::InvalidCartan(format!("off-diagonal entry ({i},{j}) is positive")));
                }
                if i != j && (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!("entries ({i},{j}) and ({j},{i}) disagree on vanishing")));
                }
            }
        }
        let cartan = CartanMatrix { entries };
        cartan.check_connected()?;
        let sym = cartan.symmetrizer()?;
        cartan.check_positive_definite(&sym)?;
        Ok(cartan)
    }

    /// Cartan matrix for a type tag such as `"A3"`, `"G2"` or `"F4"`.
    ///
    /// Accepted: A1..A7, B2..B4, C2..C4, D4, G2, F4. In B_n the last simple
    /// root is short, in C_n it is long; in G2 and F4 the short roots come
    /// last in the Bourbaki sense, except that G2 lists the short root first.
    pub fn from_type_tag(tag: &str) -> Result<Self> {
        let unknown = || Error::NotFiniteType(format!("unsupported type tag {tag:?}"));
        let t = tag.trim();
        let mut chars = t.chars();
        let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        let allowed = match family {
            'A' => (1..=7).contains(&n),
            'B' | 'C' => (2..=4).contains(&n),
            'D' => n == 4,
            'G' => n == 2,
            'F' => n == 4,
            _ => false,
        };
        if !allowed {
            return Err(unknown());
        }
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        match family {
            'A' | 'B' | 'C' => {
                for i in 0..n.saturating_sub(1) {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
                if family == 'B' {
                    a[n - 1][n - 2] = -2;
                } else if family == 'C' {
                    a[n - 2][n - 1] = -2;
                }
            }
            'D' => {
                for i in 0..n - 2 {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
            }
            'G' => {
                a[0][1] = -3;
                a[1][0] = -1;
            }
            'F' => {
                a[0][1] = -1;
                a[1][0] = -1;
                a[1][2] = -1;
                a[2][1] = -2;
                a[2][3] = -1;
                a[3][2] = -1;
            }
            _ => unreachable!(),
        }
        CartanMatrix::new(a)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    fn check_connected(&self) -> Result<()> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && self.entries[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(j) => Err(Error::Reducible(0, j)),
            None => Ok(()),
        }
    }

    /// Positive `d_i` with `d_i A_ij = d_j A_ji`, normalised so the smallest
    /// is 1. Proportional to the squared root lengths.
    fn symmetrizer(&self) -> Result<Vec<Q>> {
        let n = self.rank();
        let mut d: Vec<Option<Q>> = vec![None; n];
        d[0] = Some(Q::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].expect("visited");
            for j in 0..n {
                if i == j || self.entries[i][j] == 0 {
                    continue;
                }
                let dj = di * int(self.entries[i][j]) / int(self.entries[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::NotFiniteType("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
        let d: Vec<Q> = d.into_iter().map(|x| x.expect("connected")).collect();
        let min = d.iter().copied().min().expect("nonempty");
        Ok(d.into_iter().map(|x| x / min).collect())
    }

    fn check_positive_definite(&self, sym: &[Q]) -> Result<()> {
        let n = self.rank();
        let mut b: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| sym[i] * int(self.entries[i][j])).collect()).collect();
        // Gaussian elimination without pivoting: all pivots positive iff
        // every leading principal minor is positive.
        for k in 0..n {
            let pivot = b[k][k];
            if !pivot.is_positive() {
                return Err(Error::NotFiniteType(format!("leading principal minor {} is not positive", k + 1)));
            }
            for i in k + 1..n {
                let f = b[i][k] / pivot;
                for j in k..n {
                    let v = b[k][j];
                    b[i][j] -= f * v;
                }
            }
        }
        Ok(())
    }

    /// Exact inverse by Gauss-Jordan elimination.
    fn inverse(&self) -> Vec<Vec<Q>> {
        let n = self.rank();
        let mut m: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut row: Vec<Q> = self.entries[i].iter().map(|&a| int(a)).collect();
                row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&i| !m[i][k].is_zero()).expect("positive-definite matrix is invertible");
            m.swap(k, p);
            let pivot = m[k][k];
            for v in m[k].iter_mut() {
                *v /= pivot;
            }
            for i in 0..n {
                if i != k && !m[i][k].is_zero() {
                    let f = m[i][k];
                    for j in 0..2 * n {
                        let v = m[k][j];
                        m[i][j] -= f * v;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n..].to_vec()).collect()
    }

    fn determinant(&self) -> i64 {
        let n = self.rank();
        let mut m: Vec<Vec<Q>> = self.entries.iter().map(|r| r.iter().map(|&a| int(a)).collect()).collect();
        let mut det = Q::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return 0;
            };
            if p != k {
                m.swap(k, p);
                det = -det;
            }
            det *= m[k][k];
            for i in k + 1..n {
                let f = m[i][k] / m[k][k];
                for j in k..n {
                    let v = m[k][j];
                    m[i][j] -= f * v;
                }
            }
        }
        det.to_integer()
    }
}

/// A Weyl group element, as an integer matrix acting on coweight
/// coordinates, with its shortlex-minimal word in the simple reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn apply(&self, theta: &Coweight) -> Coweight {
        Coweight::new(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(theta.coords()).fold(Q::zero(), |acc, (&m, t)| acc + t * m))
                .collect(),
        )
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    sym: Vec<Q>,
    inverse: Vec<Vec<Q>>,
    det: i64,
    roots: Vec<RootVector>,
    index: BTreeMap<RootVector, usize>,
    highest: RootVector,
    c: Vec<i64>,
    e: Vec<i64>,
}

impl RootSystem {
    /// Builds `Φ` as the closure of the simple roots under simple
    /// reflections and populates `c_α`, `e_α`.
    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        let n = cartan.rank();
        let sym = cartan.symmetrizer()?;
        let inverse = cartan.inverse();
        let det = cartan.determinant();

        let mut seen: BTreeSet<RootVector> = BTreeSet::new();
        let mut queue: VecDeque<RootVector> = VecDeque::new();
        for k in 0..n {
            let s = RootVector::simple(n, k);
            seen.insert(s.clone());
            queue.push_back(s);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let s = reflect_root(&cartan, i, &r);
                if seen.insert(s.clone()) {
                    if seen.len() > MAX_ROOTS {
                        return Err(Error::NotFiniteType("reflection closure is unbounded".into()));
                    }
                    queue.push_back(s);
                }
            }
        }
        let mut roots: Vec<RootVector> = seen.into_iter().collect();
        if let Some(bad) = roots.iter().find(|r| !r.has_uniform_sign()) {
            return Err(Error::NotFiniteType(format!("root {bad} has mixed-sign coefficients")));
        }
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let highest = roots.last().expect("nonempty").clone();
        if roots.iter().any(|r| r.coeffs().iter().zip(highest.coeffs()).any(|(a, h)| a > h)) {
            return Err(Error::NotFiniteType("no root dominates all others".into()));
        }
        let c = highest.coeffs().to_vec();

        let mut rs = RootSystem { cartan, sym, inverse, det, roots, index, highest, c, e: Vec::new() };
        rs.e = (0..n).map(|k| rs.brute_force_torsion(k)).collect();
        Ok(rs)
    }

    pub fn from_type_tag(tag: &str) -> Result<Self> {
        RootSystem::new(CartanMatrix::from_type_tag(tag)?)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// All roots, ordered by height and then lexicographically.
    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &RootVector> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn negative_roots(&self) -> impl Iterator<Item = &RootVector> {
        self.roots.iter().filter(|r| r.is_negative())
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// `dim 𝔤 = ℓ + |Φ|`.
    pub fn dim_g(&self) -> usize {
        self.rank() + self.roots.len()
    }

    pub fn root_index(&self, r: &RootVector) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &RootVector) -> bool {
        self.index.contains_key(r)
    }

    pub fn highest_root(&self) -> &RootVector {
        &self.highest
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: k, rank: self.rank() })
        }
    }

    /// `c_α`: coefficient of simple root `k` in the highest root.
    pub fn highest_root_coefficient(&self, k: usize) -> Result<i64> {
        self.check_index(k)?;
        Ok(self.c[k])
    }

    /// `e_α`: order of `ω_α∨` in `P∨/Q∨`.
    pub fn torsion_order(&self, k: usize) -> Result<i64> {
        self.check_index(k)?;
        Ok(self.e[k])
    }

    /// `d_α = e_α · c_α`.
    pub fn ramification_index(&self, k: usize) -> Result<i64> {
        self.check_index(k)?;
        Ok(self.e[k] * self.c[k])
    }

    pub fn highest_root_coefficients(&self) -> &[i64] {
        &self.c
    }

    pub fn torsion_orders(&self) -> &[i64] {
        &self.e
    }

    pub fn ramification_indices(&self) -> Vec<i64> {
        self.e.iter().zip(&self.c).map(|(e, c)| e * c).collect()
    }

    /// `|P∨/Q∨| = det A`.
    pub fn connection_index(&self) -> i64 {
        self.det
    }

    /// Whether an integral coweight (fundamental-coweight coordinates) lies
    /// in the coroot lattice, i.e. `x·A = v` has an integer solution.
    pub fn in_coroot_lattice(&self, v: &[i64]) -> bool {
        let n = self.rank();
        (0..n).all(|j| (0..n).fold(Q::zero(), |acc, i| acc + self.inverse[i][j] * v[i]).is_integer())
    }

    /// Whether a rational coweight lies in `Q∨`.
    pub fn coweight_in_coroot_lattice(&self, theta: &Coweight) -> bool {
        theta.to_integers().is_some_and(|v| self.in_coroot_lattice(&v))
    }

    fn brute_force_torsion(&self, k: usize) -> i64 {
        let n = self.rank();
        (1..=self.det.max(1))
            .find(|&m| {
                let mut v = vec![0i64; n];
                v[k] = m;
                self.in_coroot_lattice(&v)
            })
            .expect("det·ω∨ always lies in the coroot lattice")
    }

    /// Coroot `r∨` in fundamental-coweight coordinates.
    pub fn coroot(&self, r: &RootVector) -> Vec<i64> {
        let n = self.rank();
        // (r, r) with (α_i, α_j) = sym_i · A_ij, up to a common factor.
        let norm = (0..n).fold(Q::zero(), |acc, i| {
            (0..n).fold(acc, |acc, j| acc + self.sym[i] * int(self.cartan.entry(i, j) * r.coeff(i) * r.coeff(j)))
        });
        // r∨ = Σ_i r_i (2 sym_i / (r, r)) α_i∨
        let coeffs: Vec<Q> = (0..n).map(|i| int(2 * r.coeff(i)) * self.sym[i] / norm).collect();
        (0..n)
            .map(|j| {
                let v = (0..n).fold(Q::zero(), |acc, i| acc + coeffs[i] * self.cartan.entry(i, j));
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect()
    }

    pub fn reflect_root(&self, k: usize, r: &RootVector) -> RootVector {
        reflect_root(&self.cartan, k, r)
    }

    /// `s_k(θ) = θ − ⟨α_k, θ⟩ α_k∨`.
    pub fn reflect_coweight(&self, k: usize, theta: &Coweight) -> Coweight {
        let t = theta.coord(k);
        Coweight::new(theta.coords().iter().enumerate().map(|(j, &x)| x - t * self.cartan.entry(k, j)).collect())
    }

    fn simple_reflection_matrix(&self, k: usize) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).map(|m| i64::from(j == m) - if m == k { self.cartan.entry(k, j) } else { 0 }).collect())
            .collect()
    }

    /// `|W| = ℓ! · Π c_α · |P∨/Q∨|`.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank() as u64;
        let fact: u64 = (1..=n).product();
        fact * self.c.iter().map(|&c| c as u64).product::<u64>() * self.det as u64
    }

    /// The full Weyl group, generated breadth-first from the simple
    /// reflections; ordered by word length, then lexicographically by word.
    pub fn weyl_elements(&self) -> Vec<WeylElement> {
        let n = self.rank();
        let gens: Vec<Vec<Vec<i64>>> = (0..n).map(|k| self.simple_reflection_matrix(k)).collect();
        let identity: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::from([identity.clone()]);
        let mut out = vec![WeylElement { word: Vec::new(), matrix: identity }];
        let mut head = 0;
        while head < out.len() {
            let current = out[head].clone();
            head += 1;
            for (k, g) in gens.iter().enumerate() {
                let m = mat_mul(&current.matrix, g);
                if seen.insert(m.clone()) {
                    let mut word = current.word.clone();
                    word.push(k);
                    out.push(WeylElement { word, matrix: m });
                }
            }
        }
        out
    }

    /// `(α_i, α_j)` up to the common normalisation of the symmetrizer.
    pub fn inner_product(&self, a: &RootVector, b: &RootVector) -> Q {
        let n = self.rank();
        (0..n).fold(Q::zero(), |acc, i| {
            (0..n).fold(acc, |acc, j| acc + self.sym[i] * int(self.cartan.entry(i, j) * a.coeff(i) * b.coeff(j)))
        })
    }
}

fn reflect_root(cartan: &CartanMatrix, k: usize, r: &RootVector) -> RootVector {
    let n = cartan.rank();
    let t: i64 = (0..n).map(|j| cartan.entry(k, j) * r.coeff(j)).sum();
    let mut c = r.coeffs().to_vec();
    c[k] -= t;
    RootVector(c)
}

pub(crate) fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b[0].len();
    (0..n).map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn rs(tag: &str) -> RootSystem {
        RootSystem::from_type_tag(tag).unwrap()
    }

    #[test]
    fn a1_has_two_roots() {
        let a1 = RootSystem::new(CartanMatrix::new(vec![vec![2]]).unwrap()).unwrap();
        assert_eq!(a1.roots(), &[RootVector::new(vec![-1]), RootVector::new(vec![1])]);
        assert_eq!(a1.weyl_elements().len(), 2);
    }

    #[test]
    fn counts_for_small_types() {
        // Frozen from an independent alpha-string enumeration.
        for (tag, roots, weyl) in [("A2", 6, 6), ("A3", 12, 24), ("B2", 8, 8), ("C3", 18, 48), ("G2", 12, 12)] {
            let r = rs(tag);
            assert_eq!(r.num_roots(), roots, "{tag}");
            assert_eq!(r.weyl_elements().len(), weyl, "{tag}");
            assert_eq!(r.weyl_order(), weyl as u64, "{tag}");
            assert_eq!(r.positive_roots().count() * 2, roots);
        }
    }

    #[test]
    fn g2_highest_root() {
        let g2 = rs("G2");
        assert_eq!(g2.highest_root().coeffs(), &[3, 2]);
    }

    #[test]
    fn torsion_and_ramification() {
        assert_eq!(rs("A1").torsion_orders(), &[2]);
        assert_eq!(rs("A2").torsion_orders(), &[3, 3]);
        assert_eq!(rs("G2").torsion_orders(), &[1, 1]);
        assert_eq!(rs("A1").ramification_indices(), vec![2]);
        assert_eq!(rs("A2").ramification_indices(), vec![3, 3]);
        assert_eq!(rs("G2").ramification_indices(), vec![3, 2]);
        assert_eq!(rs("A3").ramification_indices(), vec![4, 2, 4]);
        assert_eq!(rs("C3").ramification_indices(), vec![2, 2, 2]);
        assert!(rs("A2").torsion_order(2).is_err());
    }

    #[test]
    fn pairing_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.roots()[1].pair(&Coweight::fundamental(1, 0)).unwrap(), q(1, 1));
        let theta = Coweight::new(vec![q(1, 3), q(1, 3)]);
        assert_eq!(RootVector::new(vec![-1, -1]).pair(&theta).unwrap(), q(-2, 3));
        assert!(RootVector::new(vec![1]).pair(&theta).is_err());
        for r in rs("B2").roots() {
            assert_eq!(r.pair(&Coweight::zero(2)).unwrap(), q(0, 1));
        }
    }

    #[test]
    fn weyl_orders_of_larger_types() {
        assert_eq!(rs("B2").weyl_elements().len(), 8);
        assert_eq!(rs("A3").weyl_elements().len(), 24);
        assert_eq!(rs("F4").weyl_order(), 1152);
        assert_eq!(rs("D4").weyl_order(), 192);
    }

    #[test]
    fn weyl_ordering_is_shortlex() {
        let w = rs("A2").weyl_elements();
        let words: Vec<Vec<usize>> = w.iter().map(|e| e.word.clone()).collect();
        assert_eq!(words, vec![vec![], vec![0], vec![1], vec![0, 1], vec![1, 0], vec![0, 1, 0]]);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(matches!(CartanMatrix::new(vec![vec![2, -1], vec![-1, 3]]), Err(Error::InvalidCartan(_))));
        assert!(matches!(CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]), Err(Error::NotFiniteType(_))));
        assert!(matches!(CartanMatrix::new(vec![vec![2, -1], vec![-4, 2]]), Err(Error::NotFiniteType(_))));
        assert!(matches!(CartanMatrix::new(vec![vec![2, 0], vec![0, 2]]), Err(Error::Reducible(_, _))));
        assert!(matches!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]), Err(Error::InvalidCartan(_))));
        assert!(matches!(CartanMatrix::from_type_tag("XX9"), Err(Error::NotFiniteType(_))));
        assert!(matches!(CartanMatrix::from_type_tag("A8"), Err(Error::NotFiniteType(_))));
        assert!(matches!(CartanMatrix::from_type_tag("E6"), Err(Error::NotFiniteType(_))));
    }

    #[test]
    fn coroot_of_highest_root() {
        // G2: θ = 3α1 + 2α2 is long; its coroot is α1∨ + 2α2∨.
        let g2 = rs("G2");
        let h = g2.highest_root().clone();
        let cr = g2.coroot(&h);
        assert_eq!(h.pair_int(&cr), 2);
        for k in 0..2 {
            let s = RootVector::simple(2, k);
            assert_eq!(s.pair_int(&g2.coroot(&s)), 2);
        }
    }
}
