//! Invariant suites over one root system. Each suite counts its checks and
//! keeps the first few witnesses of failure.

use std::collections::BTreeSet;
use std::fmt;

use crate::affine::{building_window, eta_for_subset, glue_sweep, j_lattice};
use crate::apartment::{alcove_vertices, barycenter, denominator_pair, facet_of, reduce_to_alcove, FacetLabel};
use crate::covers::parabolic_weights;
use crate::covers::roundtrip_check;
use crate::error::Result;
use crate::parahoric::{
    eta_parahoric, minimal_accepted_power, parahoric_lattice, std_parahoric, std_vs_facet_check, SimpleSubset,
};
use crate::rational::{format_q, Q};
use crate::rootsys::{CartanMatrix, RootSystem, RootVector};
use crate::sample;
use crate::wonderful::{
    bundle_multidegrees, monomial_membership, orbit_poset, restrict_direct, restrict_pullback, saturation_defect,
    CurveDatum,
};

const MAX_WITNESSES: usize = 5;

/// Suite names in run order.
pub const SUITES: [&str; 9] = [
    "rootsys",
    "standard-parahoric",
    "limit-oracle",
    "facet-constancy",
    "homogeneity",
    "toric-restriction",
    "affine-chart",
    "building-window",
    "cover-roundtrip",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checks: 0, failures: 0, witnesses: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} checks, {} failures)", self.name, self.checks, self.failures)?;
        for w in &self.witnesses {
            write!(f, "\n  {w}")?;
        }
        Ok(())
    }
}

/// Options shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub oracle_points: usize,
    pub facet_points: usize,
    pub rotations: usize,
    pub nonstandard_curves: usize,
    pub cover_points: usize,
    pub max_radius: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            oracle_points: 200,
            facet_points: 50,
            rotations: 100,
            nonstandard_curves: 100,
            cover_points: 500,
            max_radius: 3,
        }
    }
}

pub fn run_suite(rs: &RootSystem, tag: &str, name: &str, cfg: &VerifyConfig) -> Result<Option<SuiteReport>> {
    Ok(Some(match name {
        "rootsys" => rootsys_suite(rs, tag),
        "standard-parahoric" => standard_parahoric_suite(rs, tag),
        "limit-oracle" => limit_oracle_suite(rs, tag, cfg)?,
        "facet-constancy" => facet_constancy_suite(rs, tag, cfg),
        "homogeneity" => homogeneity_suite(rs, tag, cfg)?,
        "toric-restriction" => toric_suite(rs, tag, cfg)?,
        "affine-chart" => affine_chart_suite(rs, tag)?,
        "building-window" => building_suite(rs, tag, cfg)?,
        "cover-roundtrip" => cover_suite(rs, tag, cfg)?,
        _ => return Ok(None),
    }))
}

pub fn run_all(rs: &RootSystem, tag: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|name| Ok(run_suite(rs, tag, name, cfg)?.expect("known suite"))).collect()
}

/// Positive roots grown by `α_i`-strings: `r + α_i` is a root iff
/// `p − ⟨α_i∨, r⟩ > 0`, `p` the length of the downward string.
pub fn positive_roots_by_strings(cartan: &CartanMatrix) -> Vec<RootVector> {
    let n = cartan.rank();
    let mut found: BTreeSet<Vec<i64>> = (0..n).map(|k| RootVector::simple(n, k).coeffs().to_vec()).collect();
    let mut layer: Vec<Vec<i64>> = found.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for r in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = r.clone();
                loop {
                    down[i] -= 1;
                    if found.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan.entry(i, j) * r[j]).sum();
                if p - pairing > 0 {
                    let mut up = r.clone();
                    up[i] += 1;
                    if !found.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        found.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    found.into_iter().map(RootVector::new).collect()
}

fn rootsys_suite(rs: &RootSystem, tag: &str) -> SuiteReport {
    let mut rep = SuiteReport::new("rootsys");
    let by_strings = positive_roots_by_strings(rs.cartan());
    let closure: Vec<RootVector> = rs.positive_roots().cloned().collect();
    rep.check(2 * by_strings.len() == rs.num_roots(), || {
        format!("{tag}: |Φ| = {} but strings give {}", rs.num_roots(), 2 * by_strings.len())
    });
    let mut sorted = closure.clone();
    sorted.sort();
    let mut strings = by_strings.clone();
    strings.sort();
    rep.check(sorted == strings, || format!("{tag}: positive roots differ between closure and strings"));
    let enumerated = rs.weyl_elements().len() as u64;
    rep.check(enumerated == rs.weyl_order(), || {
        format!("{tag}: |W| enumerated {enumerated}, formula {}", rs.weyl_order())
    });
    for (a, vertex) in alcove_vertices(rs).iter().skip(1).enumerate() {
        let d = denominator_pair(rs, vertex).map(|p| p.d).unwrap_or(0);
        let expected = rs.torsion_orders()[a] * rs.highest_root_coefficients()[a];
        rep.check(d == expected && rs.ramification_indices()[a] == expected, || {
            format!("{tag}: α{} has d = {d}, e·c = {expected}", a + 1)
        });
    }
    rep
}

fn standard_parahoric_suite(rs: &RootSystem, tag: &str) -> SuiteReport {
    let mut rep = SuiteReport::new("standard-parahoric");
    for subset in SimpleSubset::all(rs.rank()) {
        rep.check(std_vs_facet_check(rs, subset), || format!("{tag}: I = {subset}"));
    }
    for l in FacetLabel::all(rs.rank()) {
        let lattice = parahoric_lattice(rs, &barycenter(rs, l));
        rep.check(lattice.has_admissible_pair_sums(rs), || format!("{tag}: 𝕀 = {l}: m_r + m_-r ∉ {{0,1}}"));
        rep.check(lattice.is_bracket_closed(rs), || format!("{tag}: 𝕀 = {l}: not bracket closed"));
        for j in FacetLabel::all(rs.rank()).filter(|j| l.is_subset_of(*j)) {
            let bigger = parahoric_lattice(rs, &barycenter(rs, j));
            rep.check(bigger.is_sublattice_of(&lattice), || format!("{tag}: {l} ⊆ {j} but lattices not nested"));
        }
    }
    rep
}

fn limit_oracle_suite(rs: &RootSystem, tag: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("limit-oracle");
    let mut rng = sample::rng(cfg.seed);
    for _ in 0..cfg.oracle_points {
        let theta = sample::alcove_point(rs, &mut rng);
        let lattice = parahoric_lattice(rs, &theta);
        for (r, &m) in rs.roots().iter().zip(lattice.shifts()) {
            let b = minimal_accepted_power(rs, r, Q::from(1), &theta, -10, 10)?;
            rep.check(b == Some(m), || format!("{tag}: θ = {theta}, root {r}: m = {m}, oracle {b:?}"));
        }
        let integral_pairs = rs.roots().iter().zip(lattice.shifts()).all(|(r, &m)| {
            let neg = rs.root_index(&r.neg()).expect("Φ = −Φ");
            (m + lattice.shift(neg) == 0) == r.pair_unchecked(&theta).is_integer()
        });
        rep.check(integral_pairs, || format!("{tag}: θ = {theta}: m_r + m_-r = 0 does not track integrality"));
    }
    Ok(rep)
}

fn facet_constancy_suite(rs: &RootSystem, tag: &str, cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("facet-constancy");
    let mut rng = sample::rng(cfg.seed.wrapping_add(1));
    for l in FacetLabel::all(rs.rank()) {
        let reference = parahoric_lattice(rs, &barycenter(rs, l));
        for _ in 0..cfg.facet_points {
            let theta = sample::facet_point(rs, l, &mut rng);
            rep.check(parahoric_lattice(rs, &theta) == reference, || format!("{tag}: facet {l}, θ = {theta}"));
        }
    }
    rep
}

fn homogeneity_suite(rs: &RootSystem, tag: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("homogeneity");
    let mut rng = sample::rng(cfg.seed.wrapping_add(2));
    for _ in 0..cfg.rotations {
        let a = sample::positive_rational(&mut rng);
        let theta = sample::alcove_point(rs, &mut rng);
        let twisted = eta_parahoric(rs, a, &theta)?;
        let normalized = eta_parahoric(rs, Q::from(1), &theta.scale(Q::from(1) / a))?;
        rep.check(twisted == normalized, || format!("{tag}: a = {}, θ = {theta}", format_q(a)));
        for (r, &m) in rs.roots().iter().zip(twisted.shifts()) {
            let b = minimal_accepted_power(rs, r, a, &theta, m - 1, m)?;
            rep.check(b == Some(m), || format!("{tag}: a = {}, θ = {theta}, root {r}", format_q(a)));
        }
    }
    Ok(rep)
}

fn toric_suite(rs: &RootSystem, tag: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("toric-restriction");
    let n = rs.rank();
    let poset = orbit_poset(rs);
    rep.check(poset.len() == 1 << n, || format!("{tag}: {} orbits", poset.len()));

    let bundle = bundle_multidegrees(rs);
    let box_points = exponent_box(n, 2);
    for (ri, r) in rs.roots().iter().enumerate() {
        let exps = bundle.exponent(ri);
        let neg = rs.root_index(&r.neg()).expect("Φ = −Φ");
        let support_ok = (0..n).all(|a| exps[a] + bundle.exponent(neg)[a] == i64::from(r.coeff(a) != 0));
        rep.check(support_ok, || format!("{tag}: root {r}: n_r + n_-r is not the support indicator"));
        for m in &box_points {
            let model = m.iter().zip(exps).all(|(x, e)| x >= e);
            rep.check(model == monomial_membership(rs, r, m), || format!("{tag}: root {r}, exponent {m:?}"));
        }
    }

    for subset in SimpleSubset::all(n) {
        let c = CurveDatum::standard(subset, n);
        let direct = restrict_direct(rs, &c)?;
        rep.check(direct == std_parahoric(rs, subset), || format!("{tag}: standard curve I = {subset}"));
        let pullback = restrict_pullback(rs, &c)?;
        let defect = saturation_defect(rs, &c)?;
        for (ri, r) in rs.roots().iter().enumerate() {
            let m = direct.shift(ri);
            rep.check(m == pullback[ri].min(1), || {
                format!("{tag}: I = {subset}, root {r}: direct {m}, pullback {}", pullback[ri])
            });
            let vanishes = defect[ri] == 0;
            rep.check(defect[ri] >= 0 && vanishes == (subset.len() <= 1 || pullback[ri] <= 1), || {
                format!("{tag}: I = {subset}, root {r}: defect {}", defect[ri])
            });
        }
    }

    let mut rng = sample::rng(cfg.seed.wrapping_add(3));
    for _ in 0..cfg.nonstandard_curves {
        let c = sample::nonstandard_curve(n, &mut rng);
        let direct = restrict_direct(rs, &c)?;
        let theta = crate::wonderful::theta_of_curve(rs, &c)?;
        let (point, w) = reduce_to_alcove(rs, &theta)?;
        let facet = facet_of(rs, &point)?;
        let expected = parahoric_lattice(rs, &barycenter(rs, facet));
        rep.check(direct.transport(rs, &w) == expected, || {
            format!("{tag}: k = {:?}, θ = {theta}, reduced into facet {facet}", c.coefficients())
        });
    }
    Ok(rep)
}

fn exponent_box(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut next = v.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

fn affine_chart_suite(rs: &RootSystem, tag: &str) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("affine-chart");
    let n = rs.rank();
    for l in FacetLabel::all(n) {
        let ones = vec![1; l.len()];
        let eta = eta_for_subset(rs, l, &ones)?;
        let lattice = j_lattice(rs, l, &ones)?;
        let normalized = eta_parahoric(rs, Q::from(1), &eta.normalized())?;
        rep.check(lattice == normalized, || format!("{tag}: 𝕀 = {l}: 𝔓_η ≠ 𝔓_θ"));
        if l.contains(0) {
            let subset = SimpleSubset::new(l.bits() & !1, n)?;
            rep.check(lattice.lattice() == &std_parahoric(rs, subset), || {
                format!("{tag}: 𝕀 = {l}: j-lattice is not standard")
            });
        }
    }
    Ok(rep)
}

fn building_suite(rs: &RootSystem, tag: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("building-window");
    let n = rs.rank();
    let window0 = building_window(rs, 0);
    rep.check(window0.nodes.len() == (1 << (n + 1)) - 1, || {
        format!("{tag}: radius 0 has {} facets", window0.nodes.len())
    });
    for radius in 0..=cfg.max_radius {
        let g = building_window(rs, radius);
        rep.check(g.walls_are_thin(), || format!("{tag}: radius {radius}: an interior wall is not thin"));
        rep.check(g.labels_chart_independent(), || format!("{tag}: radius {radius}: chart-dependent label"));
        rep.check(g.wall_counts().iter().all(|&c| c == n + 1), || format!("{tag}: radius {radius}: wall count"));
    }
    let failure = glue_sweep(rs, cfg.max_radius)?;
    rep.check(failure.is_none(), || {
        let (u, v) = failure.clone().unwrap_or_default();
        format!("{tag}: charts {u:?} and {v:?} disagree on a shared wall")
    });
    Ok(rep)
}

fn cover_suite(rs: &RootSystem, tag: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("cover-roundtrip");
    let mut points = alcove_vertices(rs);
    points.extend(FacetLabel::all(rs.rank()).map(|l| barycenter(rs, l)));
    let mut rng = sample::rng(cfg.seed.wrapping_add(4));
    points.extend((0..cfg.cover_points).map(|_| sample::alcove_point(rs, &mut rng)));
    for theta in &points {
        rep.check(roundtrip_check(rs, theta)?, || format!("{tag}: roundtrip fails at θ = {theta}"));
        let p = parabolic_weights(rs, theta)?;
        rep.check(p.total_dim() == rs.dim_g() && p.flag_dims.first() == Some(&rs.dim_g()), || {
            format!("{tag}: θ = {theta}: weight multiplicities sum to {}", p.total_dim())
        });
        rep.check(p.is_symmetric() && p.weights_over_denominator(), || {
            format!("{tag}: θ = {theta}: weights {:?} not symmetric over {}", p.weight_strings(), p.denominator)
        });
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strings_match_closure() {
        for tag in ["A1", "A3", "B3", "C3", "D4", "G2", "F4"] {
            let rs = RootSystem::from_type_tag(tag).unwrap();
            assert_eq!(2 * positive_roots_by_strings(rs.cartan()).len(), rs.num_roots(), "{tag}");
        }
    }

    #[test]
    fn quick_suites_pass() {
        let cfg = VerifyConfig {
            oracle_points: 20,
            facet_points: 5,
            rotations: 10,
            nonstandard_curves: 10,
            cover_points: 20,
            max_radius: 2,
            ..VerifyConfig::default()
        };
        for tag in ["A1", "B2", "G2"] {
            let rs = RootSystem::from_type_tag(tag).unwrap();
            for rep in run_all(&rs, tag, &cfg).unwrap() {
                assert!(rep.passed(), "{rep}");
            }
        }
    }

    #[test]
    fn unknown_suite() {
        let rs = RootSystem::from_type_tag("A1").unwrap();
        assert!(run_suite(&rs, "A1", "nope", &VerifyConfig::default()).unwrap().is_none());
    }
}
