//! Acceptance suite: one PASS/FAIL line per criterion over the target types.
//! Reference values are recomputed here from the Cartan matrix alone.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};

use wonderful_core::affine::{building_window, eta_for_subset, glue_check, j_lattice, words_up_to};
use wonderful_core::apartment::{alcove_vertices, barycenter, denominator_pair};
use wonderful_core::covers::{parabolic_weights, roundtrip_check};
use wonderful_core::parahoric::{eta_parahoric, limit_membership, parahoric_lattice, std_parahoric};
use wonderful_core::sample;
use wonderful_core::wonderful::{
    bundle_multidegrees, monomial_membership, restrict_direct, restrict_pullback, saturation_defect,
};
use wonderful_core::{Coweight, CurveDatum, FacetLabel, LoopMonomial, RootSystem, RootVector, SimpleSubset, Q};

const TARGETS: [&str; 6] = ["A1", "A2", "A3", "B2", "C3", "G2"];
const SEED: u64 = 20;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn systems() -> Vec<(&'static str, RootSystem)> {
    TARGETS.iter().map(|&t| (t, RootSystem::from_type_tag(t).expect("target type"))).collect()
}

// ---- reference computations from the Cartan matrix ----

/// Positive roots by α-strings: `r + α_i ∈ Φ` iff `p − ⟨α_i∨, r⟩ > 0`.
fn string_roots(a: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = a.len();
    let unit = |i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>();
    let mut roots: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = roots.iter().cloned().collect();
    // Heights increase layer by layer, so every downward string is complete.
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for r in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut below = r.clone();
                while {
                    below[i] -= 1;
                    roots.contains(&below)
                } {
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| a[i][j] * r[j]).sum();
                if p > pairing {
                    let mut up = r.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    roots
}

/// Orbit of the regular coweight `ρ∨ = Σ ω_i∨`, which has trivial stabiliser.
fn rho_orbit_size(a: &[Vec<i64>]) -> usize {
    let n = a.len();
    let start = vec![1i64; n];
    let mut seen = BTreeSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for i in 0..n {
            let y: Vec<i64> = (0..n).map(|j| x[j] - x[i] * a[i][j]).collect();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

fn det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..].iter().map(|row| [&row[..c], &row[c + 1..]].concat()).collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = (0..n)
                        .filter(|&r| r != j)
                        .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                        .collect();
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    sign * det(&minor)
                })
                .collect()
        })
        .collect()
}

/// Least `k` with `k ω_α∨` an integer combination of the rows of `A`.
fn torsion(a: &[Vec<i64>], alpha: usize) -> i64 {
    let d = det(a);
    let adj = adjugate(a);
    (1..=d).find(|k| adj[alpha].iter().all(|x| (k * x) % d == 0)).expect("k = det works")
}

fn floor_shift(r: &RootVector, theta: &Coweight) -> i64 {
    let v: Q = r.coeffs().iter().zip(theta.coords()).map(|(&c, &x)| x * Q::from(c)).sum();
    -v.floor().to_integer()
}

/// Scan window for the oracle: alcove points have `|(r, θ)| ≤ 1` and the
/// sampled rotations satisfy `a ≥ 1/20`.
const SCAN: i64 = 25;

fn least_accepted(rs: &RootSystem, r: &RootVector, a: Q, theta: &Coweight) -> Option<i64> {
    (-SCAN..=SCAN).find(|&b| limit_membership(rs, &LoopMonomial::root(r.clone(), b), a, theta).unwrap())
}

// ---- criteria ----

fn criterion_1() -> Outcome {
    for (tag, rs) in systems() {
        let a: Vec<Vec<i64>> = rs.cartan().rows().to_vec();
        let positive = string_roots(&a);
        ensure(2 * positive.len() == rs.num_roots(), || {
            format!("{tag}: |Φ| = {}, reference {}", rs.num_roots(), 2 * positive.len())
        })?;
        let library: BTreeSet<Vec<i64>> = rs.positive_roots().map(|r| r.coeffs().to_vec()).collect();
        ensure(library == positive, || format!("{tag}: positive roots differ"))?;
        let orbit = rho_orbit_size(&a) as u64;
        ensure(orbit == rs.weyl_order() && orbit == rs.weyl_elements().len() as u64, || {
            format!("{tag}: |W| = {}, reference {orbit}", rs.weyl_order())
        })?;
        let highest = positive.iter().max_by_key(|r| r.iter().sum::<i64>()).expect("nonempty");
        let vertices = alcove_vertices(&rs);
        for k in 0..rs.rank() {
            let d = torsion(&a, k) * highest[k];
            ensure(rs.ramification_indices()[k] == d, || {
                format!("{tag}: d_α{} = {}, reference {d}", k + 1, rs.ramification_indices()[k])
            })?;
            ensure(denominator_pair(&rs, &vertices[k + 1]).unwrap().d == d, || {
                format!("{tag}: vertex {} denominator differs from d = {d}", k + 1)
            })?;
        }
    }
    let expected = [("A2", 6, 6), ("G2", 12, 12), ("A3", 12, 24)];
    for (tag, roots, weyl) in expected {
        let rs = RootSystem::from_type_tag(tag).unwrap();
        ensure(rs.num_roots() == roots && rs.weyl_order() == weyl, || format!("{tag}: counts"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for (tag, rs) in systems() {
        let n = rs.rank();
        let c = rs.highest_root_coefficients();
        for subset in SimpleSubset::all(n) {
            let std = std_parahoric(&rs, subset);
            let facet = parahoric_lattice(&rs, &barycenter(&rs, subset.with_affine_root(n)));
            let weight = Q::new(1, subset.len() as i64 + 1);
            let theta = Coweight::new(
                (0..n).map(|k| if subset.contains_slot(k) { weight / Q::from(c[k]) } else { Q::from(0) }).collect(),
            );
            for (i, r) in rs.roots().iter().enumerate() {
                let reference = i64::from(r.is_negative() && r.support().any(|k| subset.contains_slot(k)));
                ensure(
                    std.shift(i) == reference && facet.shift(i) == reference && floor_shift(r, &theta) == reference,
                    || format!("{tag}: I = {subset}, root {r}"),
                )?;
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for (tag, rs) in systems() {
        let mut rng = sample::rng(SEED);
        for _ in 0..200 {
            let theta = sample::alcove_point(&rs, &mut rng);
            let lattice = parahoric_lattice(&rs, &theta);
            for (r, &m) in rs.roots().iter().zip(lattice.shifts()) {
                let b = least_accepted(&rs, r, Q::from(1), &theta);
                ensure(b == Some(m) && floor_shift(r, &theta) == m, || {
                    format!("{tag}: θ = {theta}, root {r}: m = {m}, oracle {b:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for (tag, rs) in systems() {
        let mut rng = sample::rng(SEED + 1);
        for label in FacetLabel::all(rs.rank()) {
            let reference = parahoric_lattice(&rs, &barycenter(&rs, label));
            for _ in 0..50 {
                let theta = sample::facet_point(&rs, label, &mut rng);
                ensure(parahoric_lattice(&rs, &theta) == reference, || format!("{tag}: facet {label}, θ = {theta}"))?;
            }
        }
        for _ in 0..100 {
            let a = sample::positive_rational(&mut rng);
            let theta = sample::alcove_point(&rs, &mut rng);
            let lhs = eta_parahoric(&rs, a, &theta).unwrap();
            let rhs = eta_parahoric(&rs, Q::from(1), &theta.scale(Q::from(1) / a)).unwrap();
            ensure(lhs == rhs, || format!("{tag}: a = {a}, θ = {theta}"))?;
            for (r, &m) in rs.roots().iter().zip(lhs.shifts()) {
                ensure(least_accepted(&rs, r, a, &theta) == Some(m), || {
                    format!("{tag}: a = {a}, θ = {theta}, root {r}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for (tag, rs) in systems() {
        let n = rs.rank();
        let bundle = bundle_multidegrees(&rs);
        let mut grid = vec![Vec::new()];
        for _ in 0..n {
            grid =
                grid.into_iter().flat_map(|v: Vec<i64>| (-2..=2).map(move |x| [v.clone(), vec![x]].concat())).collect();
        }
        for (i, r) in rs.roots().iter().enumerate() {
            for m in &grid {
                let model = m.iter().zip(bundle.exponent(i)).all(|(x, e)| x >= e);
                ensure(model == monomial_membership(&rs, r, m), || format!("{tag}: root {r}, exponent {m:?}"))?;
            }
        }
        for subset in SimpleSubset::all(n) {
            let c = CurveDatum::standard(subset, n);
            let direct = restrict_direct(&rs, &c).unwrap();
            ensure(direct == std_parahoric(&rs, subset), || format!("{tag}: I = {subset}: direct restriction"))?;
            let pullback = restrict_pullback(&rs, &c).unwrap();
            let defect = saturation_defect(&rs, &c).unwrap();
            for (i, r) in rs.roots().iter().enumerate() {
                ensure(direct.shift(i) == pullback[i].min(1), || format!("{tag}: I = {subset}, root {r}: clamp law"))?;
                let vanishes = defect[i] == 0;
                ensure(vanishes == (subset.len() <= 1 || pullback[i] <= 1), || {
                    format!("{tag}: I = {subset}, root {r}: defect {}", defect[i])
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (tag, rs) in systems() {
        let n = rs.rank();
        for label in FacetLabel::all(n) {
            let ones = vec![1; label.len()];
            let lattice = j_lattice(&rs, label, &ones).unwrap();
            let eta = eta_for_subset(&rs, label, &ones).unwrap();
            let normalized = eta.theta.scale(Q::from(1) / eta.a);
            ensure(lattice.lattice() == &parahoric_lattice(&rs, &normalized), || {
                format!("{tag}: 𝕀 = {label}: 𝔓_η ≠ 𝔓_θ")
            })?;
            if label.contains(0) {
                let subset = SimpleSubset::new(label.bits() & !1, n).unwrap();
                ensure(lattice.lattice() == &std_parahoric(&rs, subset), || {
                    format!("{tag}: 𝕀 = {label}: not standard")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for (tag, rs) in systems() {
        let g = building_window(&rs, 0);
        let expected = (1usize << (rs.rank() + 1)) - 1;
        ensure(g.nodes.len() == expected, || {
            format!("{tag}: radius 0 has {} facets, expected {expected}", g.nodes.len())
        })?;
    }
    for tag in ["A1", "A2"] {
        let rs = RootSystem::from_type_tag(tag).unwrap();
        for radius in 0..=3 {
            let g = building_window(&rs, radius);
            for &i in &g.interior_walls() {
                let node = &g.nodes[i];
                ensure(node.alcoves.len() == 2, || {
                    format!("{tag}: radius {radius}: wall {} borders {} alcoves", node.id, node.alcoves.len())
                })?;
            }
            ensure(g.labels_chart_independent(), || format!("{tag}: radius {radius}: chart-dependent label"))?;
        }
        let words = words_up_to(rs.rank(), 3);
        for u in &words {
            for v in &words {
                ensure(glue_check(&rs, u, v).unwrap(), || format!("{tag}: charts {u:?}, {v:?} disagree"))?;
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for (tag, rs) in systems() {
        let mut points = alcove_vertices(&rs);
        points.extend(FacetLabel::all(rs.rank()).map(|l| barycenter(&rs, l)));
        let mut rng = sample::rng(SEED + 2);
        points.extend((0..500).map(|_| sample::alcove_point(&rs, &mut rng)));
        for theta in &points {
            ensure(roundtrip_check(&rs, theta).unwrap(), || format!("{tag}: roundtrip at θ = {theta}"))?;
            let p = parabolic_weights(&rs, theta).unwrap();
            ensure(p.total_dim() == rs.rank() + rs.num_roots(), || format!("{tag}: θ = {theta}: multiplicities"))?;
            for (w, m) in p.weights.iter().zip(&p.multiplicities) {
                if *w != Q::from(0) {
                    let partner = Q::from(1) - *w;
                    let pm = p.weights.iter().position(|x| *x == partner).map(|k| p.multiplicities[k]);
                    ensure(pm == Some(*m), || format!("{tag}: θ = {theta}: weight {w} unpaired"))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_wonderful"))
            .args(["verify", "--all"])
            .output()
            .map_err(|e| format!("cannot run binary: {e}"))
    };
    let first = run()?;
    let second = run()?;
    ensure(first.status.success(), || format!("verify exited with {}", first.status))?;
    ensure(!first.stdout.is_empty() && first.stdout == second.stdout, || "reports differ between runs".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("root-system kernel", criterion_1),
        ("standard parahoric identity", criterion_2),
        ("limit oracle equivalence", criterion_3),
        ("facet constancy and homogeneity", criterion_4),
        ("toric restriction to standard curves", criterion_5),
        ("affine chart lattices", criterion_6),
        ("building window", criterion_7),
        ("cover roundtrip and parabolic weights", criterion_8),
        ("determinism of verify --all", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {} ({name}): PASS", k + 1),
            Err(witness) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL: {witness}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
