//! The `𝔸^{ℓ+1}` alcove chart model: rotation-twisted cocharacters `η_λ`,
//! affine Weyl translates of the alcove chart, and a finite window of the
//! facet/parahoric incidence graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::apartment::{
    affine_simple_roots, alcove_vertex, barycenter, denominator_pair, facet_of, reduce_to_alcove, word_string,
    AffineFunctional, AffineWeylElement, FacetLabel,
};
use crate::error::{Error, Result};
use crate::parahoric::{eta_parahoric, AffineParahoricLattice};
use crate::rational::{Coweight, Q};
use crate::rootsys::RootSystem;

/// `η_λ = (a, θ)` for a curve in the affine chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaDatum {
    pub a: Q,
    pub theta: Coweight,
}

impl EtaDatum {
    /// `θ / a`, the point whose parahoric equals `𝔓_η`.
    pub fn normalized(&self) -> Coweight {
        self.theta.scale(Q::from(1) / self.a)
    }
}

/// `η_λ = Σ_{α∈𝕀} k_α (1, θ_α)/(ℓ+1)`; `k` is listed in the index order of
/// `label` and must contain a 1.
pub fn eta_for_subset(rs: &RootSystem, label: FacetLabel, k: &[i64]) -> Result<EtaDatum> {
    if k.len() != label.len() {
        return Err(Error::RankMismatch { expected: label.len(), got: k.len() });
    }
    if let Some(&bad) = k.iter().find(|&&x| !(0..=1).contains(&x)) {
        return Err(Error::NotStandard(bad));
    }
    let n = rs.rank();
    let mut total = 0;
    let mut theta = Coweight::zero(n);
    for (i, &ki) in label.indices().zip(k) {
        if ki == 1 {
            total += 1;
            theta = &theta + &alcove_vertex(rs, i);
        }
    }
    if total == 0 {
        return Err(Error::EmptySubset);
    }
    let scale = Q::new(1, n as i64 + 1);
    Ok(EtaDatum { a: Q::from(total) * scale, theta: theta.scale(scale) })
}

/// `𝔓_{η_λ}`, the lattice of `J` along `U_λ`.
pub fn j_lattice(rs: &RootSystem, label: FacetLabel, k: &[i64]) -> Result<AffineParahoricLattice> {
    let eta = eta_for_subset(rs, label, k)?;
    eta_parahoric(rs, eta.a, &eta.theta)
}

/// The chart `Y_w`: the translate `w·a₀` recorded by its walls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartDatum {
    pub word: Vec<usize>,
    pub walls: Vec<AffineFunctional>,
}

/// Canonical reduced word for the element `word` represents: greedy
/// reduction of the image of the alcove barycenter, read backwards.
pub fn canonical_word(rs: &RootSystem, word: &[usize]) -> Result<Vec<usize>> {
    let w = AffineWeylElement::from_word(rs, word)?;
    let center = barycenter(rs, FacetLabel::full(rs.rank()));
    let (_, back) = reduce_to_alcove(rs, &w.apply(&center))?;
    Ok(back.word.iter().rev().copied().collect())
}

pub fn chart(rs: &RootSystem, word: &[usize]) -> Result<ChartDatum> {
    let canonical = canonical_word(rs, word)?;
    let w = AffineWeylElement::from_word(rs, &canonical)?;
    let walls = affine_simple_roots(rs).iter().map(|f| w.apply_functional(f)).collect();
    Ok(ChartDatum { word: canonical, walls })
}

/// Data a chart attaches to one of its walls.
#[derive(Clone, Debug, PartialEq, Eq)]
struct WallData {
    point: Coweight,
    hyperplane: AffineFunctional,
    chart_label: FacetLabel,
    parahoric_type: FacetLabel,
    ramification: i64,
}

fn wall_data(rs: &RootSystem, word: &[usize]) -> Result<Vec<WallData>> {
    let n = rs.rank();
    let w = AffineWeylElement::from_word(rs, word)?;
    let walls = affine_simple_roots(rs);
    let mut out = Vec::with_capacity(n + 1);
    for (i, f) in walls.iter().enumerate() {
        let label = FacetLabel::new(FacetLabel::full(n).bits() & !(1 << i), n)?;
        let point = w.apply(&barycenter(rs, label));
        let (reduced, _) = reduce_to_alcove(rs, &point)?;
        out.push(WallData {
            hyperplane: w.apply_functional(f),
            chart_label: label,
            parahoric_type: facet_of(rs, &reduced)?,
            ramification: denominator_pair(rs, &reduced)?.d,
            point,
        });
    }
    Ok(out)
}

/// On every codimension-1 facet common to `Y_u` and `Y_v`, both charts
/// attach the same parahoric label and ramification.
pub fn glue_check(rs: &RootSystem, u: &[usize], v: &[usize]) -> Result<bool> {
    Ok(walls_agree(&wall_data(rs, u)?, &wall_data(rs, v)?))
}

fn walls_agree(du: &[WallData], dv: &[WallData]) -> bool {
    du.iter().all(|a| {
        dv.iter().filter(|b| b.point == a.point && b.hyperplane.same_hyperplane(&a.hyperplane)).all(|b| {
            a.chart_label == b.chart_label
                && a.parahoric_type == b.parahoric_type
                && a.chart_label == a.parahoric_type
                && a.ramification == b.ramification
        })
    })
}

/// All words of length `≤ max_len` over `0..=ℓ`, shortlex.
pub fn words_up_to(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..=rank).map(move |i| {
                    let mut next = w.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// [`glue_check`] over every pair of words of length `≤ max_len`; returns
/// the first failing pair.
pub fn glue_sweep(rs: &RootSystem, max_len: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let words = words_up_to(rs.rank(), max_len);
    let data = words.iter().map(|w| wall_data(rs, w)).collect::<Result<Vec<_>>>()?;
    for (i, du) in data.iter().enumerate() {
        for (j, dv) in data.iter().enumerate() {
            if !walls_agree(du, dv) {
                return Ok(Some((words[i].clone(), words[j].clone())));
            }
        }
    }
    Ok(None)
}

/// A facet of the window, keyed by its barycenter in `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingNode {
    /// Stable id `"w:I"` from the first alcove (shortlex) containing it.
    pub id: String,
    pub word: Vec<usize>,
    pub label: FacetLabel,
    pub point: Coweight,
    pub codim: usize,
    /// Facet type of the alcove-reduced barycenter.
    pub parahoric_type: FacetLabel,
    /// Indices of incident alcove nodes.
    pub alcoves: Vec<usize>,
    /// Label seen through each incident alcove's chart, same order.
    pub chart_labels: Vec<FacetLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingGraph {
    pub rank: usize,
    pub radius: usize,
    pub nodes: Vec<BuildingNode>,
    /// `(i, j)` with node `j` a codimension-one face of node `i`.
    pub edges: Vec<(usize, usize)>,
    /// Alcove node indices in shortlex order of their words.
    pub alcoves: Vec<usize>,
}

fn node_id(word: &[usize], label: FacetLabel) -> String {
    format!("{}:{}", word_string(word), label.names())
}

/// Alcoves `w·a₀` with `ℓ(w) ≤ radius` and all their facets.
pub fn building_window(rs: &RootSystem, radius: usize) -> BuildingGraph {
    let n = rs.rank();
    let labels: Vec<FacetLabel> = {
        let mut all: Vec<FacetLabel> = FacetLabel::all(n).collect();
        all.sort_by_key(|l| (std::cmp::Reverse(l.len()), l.bits()));
        all
    };
    let local_points: Vec<Coweight> = labels.iter().map(|&l| barycenter(rs, l)).collect();
    let center = barycenter(rs, FacetLabel::full(n));

    // Breadth-first over w·s_i; letters in increasing order give shortlex words.
    let mut alcove_elems: Vec<AffineWeylElement> = Vec::new();
    let mut seen: BTreeSet<Coweight> = BTreeSet::new();
    let mut queue = VecDeque::from([AffineWeylElement::identity(n)]);
    seen.insert(center.clone());
    while let Some(w) = queue.pop_front() {
        if w.length() < radius {
            for i in 0..=n {
                let next = w.compose(&AffineWeylElement::simple(rs, i).expect("index in range"));
                if seen.insert(next.apply(&center)) {
                    queue.push_back(next);
                }
            }
        }
        alcove_elems.push(w);
    }

    let mut nodes: Vec<BuildingNode> = Vec::new();
    let mut by_point: BTreeMap<Coweight, usize> = BTreeMap::new();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut alcoves = Vec::with_capacity(alcove_elems.len());
    for w in &alcove_elems {
        let mut local: BTreeMap<FacetLabel, usize> = BTreeMap::new();
        for (&label, p) in labels.iter().zip(&local_points) {
            let point = w.apply(p);
            let idx = *by_point.entry(point.clone()).or_insert_with(|| {
                let (reduced, _) = reduce_to_alcove(rs, &point).expect("reduction terminates");
                nodes.push(BuildingNode {
                    id: node_id(&w.word, label),
                    word: w.word.clone(),
                    label,
                    codim: label.codim(n),
                    parahoric_type: facet_of(rs, &reduced).expect("reduced point lies in the alcove"),
                    point,
                    alcoves: Vec::new(),
                    chart_labels: Vec::new(),
                });
                nodes.len() - 1
            });
            local.insert(label, idx);
        }
        let alcove_idx = local[&FacetLabel::full(n)];
        alcoves.push(alcove_idx);
        for (&label, &idx) in &local {
            nodes[idx].alcoves.push(alcove_idx);
            nodes[idx].chart_labels.push(label);
            for i in label.indices() {
                if label.len() > 1 {
                    let face = FacetLabel::new(label.bits() & !(1 << i), n).expect("nonempty");
                    edges.insert((idx, local[&face]));
                }
            }
        }
    }
    BuildingGraph { rank: n, radius, nodes, edges: edges.into_iter().collect(), alcoves }
}

impl BuildingGraph {
    pub fn alcove_count(&self) -> usize {
        self.alcoves.len()
    }

    fn word_of_alcove(&self, alcove: usize) -> &[usize] {
        &self.nodes[alcove].word
    }

    /// Codimension-1 facets incident to an alcove of length below the radius;
    /// both alcoves across such a wall lie in the window.
    pub fn interior_walls(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| {
                let node = &self.nodes[i];
                node.codim == 1 && node.alcoves.iter().any(|&a| self.word_of_alcove(a).len() < self.radius)
            })
            .collect()
    }

    /// Every interior wall borders exactly two alcoves.
    pub fn walls_are_thin(&self) -> bool {
        self.interior_walls().iter().all(|&i| self.nodes[i].alcoves.len() == 2)
    }

    /// Each incident chart sees the node with its parahoric type.
    pub fn labels_chart_independent(&self) -> bool {
        self.nodes.iter().all(|node| node.chart_labels.iter().all(|&l| l == node.parahoric_type))
    }

    /// Number of codimension-1 faces of each alcove.
    pub fn wall_counts(&self) -> Vec<usize> {
        self.alcoves
            .iter()
            .map(|&a| self.edges.iter().filter(|&&(i, j)| i == a && self.nodes[j].codim == 1).count())
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph building {\n");
        for node in &self.nodes {
            let shape = match node.codim {
                0 => "box",
                c if c == self.rank => "circle",
                _ => "ellipse",
            };
            let _ = writeln!(
                out,
                "  \"{}\" [type=\"{}\", codim={}, shape={}];",
                node.id,
                node.parahoric_type.names(),
                node.codim,
                shape
            );
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.nodes[i].id, self.nodes[j].id);
        }
        out.push_str("}\n");
        out
    }
}
