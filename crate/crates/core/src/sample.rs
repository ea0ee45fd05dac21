//! Seeded random inputs for the property sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::apartment::{alcove_vertex, FacetLabel};
use crate::rational::{Coweight, Q};
use crate::rootsys::RootSystem;
use crate::wonderful::CurveDatum;

/// Largest common denominator used for alcove samples.
pub const MAX_DENOMINATOR: i64 = 60;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Σ t_α θ_α / D` over the affine indices in `support`, with integer
/// weights `t_α ≥ least` and `D ≤ MAX_DENOMINATOR` when possible.
fn combination<R: Rng>(rs: &RootSystem, rng: &mut R, support: &[usize], least: i64) -> Coweight {
    let base = least * support.len() as i64;
    let denom = rng.gen_range(base.max(1)..=MAX_DENOMINATOR.max(base));
    let free = denom - base;
    // Stars and bars: sorted cut points split `free` into |support| parts.
    let mut cuts: Vec<i64> = (1..support.len()).map(|_| rng.gen_range(0..=free)).collect();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(free);
    let mut point = Coweight::zero(rs.rank());
    for (k, &i) in support.iter().enumerate() {
        let t = least + cuts[k + 1] - cuts[k];
        point = &point + &alcove_vertex(rs, i).scale(Q::new(t, denom));
    }
    point
}

/// A point of the closed fundamental alcove.
pub fn alcove_point<R: Rng>(rs: &RootSystem, rng: &mut R) -> Coweight {
    let support: Vec<usize> = (0..=rs.rank()).collect();
    combination(rs, rng, &support, 0)
}

/// A point in the relative interior of the facet labelled `label`.
pub fn facet_point<R: Rng>(rs: &RootSystem, label: FacetLabel, rng: &mut R) -> Coweight {
    let support: Vec<usize> = label.indices().collect();
    combination(rs, rng, &support, 1)
}

/// `p/q` with `p, q ∈ 1..=20`.
pub fn positive_rational<R: Rng>(rng: &mut R) -> Q {
    Q::new(rng.gen_range(1..=20), rng.gen_range(1..=20))
}

/// Dominant `k ∈ [0, 5]^ℓ` with at least one coefficient `≥ 2`.
pub fn nonstandard_curve<R: Rng>(rank: usize, rng: &mut R) -> CurveDatum {
    let mut k: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=5)).collect();
    if k.iter().all(|&x| x < 2) {
        let a = rng.gen_range(0..rank);
        k[a] = rng.gen_range(2..=5);
    }
    CurveDatum::new(k).expect("nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartment::{facet_of, is_in_closed_alcove};

    #[test]
    fn samples_stay_in_place() {
        let mut r = rng(7);
        for tag in ["A2", "B2", "G2", "C3"] {
            let rs = RootSystem::from_type_tag(tag).unwrap();
            for _ in 0..50 {
                assert!(is_in_closed_alcove(&rs, &alcove_point(&rs, &mut r)));
            }
            for label in FacetLabel::all(rs.rank()) {
                for _ in 0..10 {
                    assert_eq!(facet_of(&rs, &facet_point(&rs, label, &mut r)).unwrap(), label);
                }
            }
        }
    }

    #[test]
    fn reproducible() {
        let rs = RootSystem::from_type_tag("A3").unwrap();
        let draw = |seed| {
            let mut r = rng(seed);
            (0..5).map(|_| alcove_point(&rs, &mut r)).collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
        let c = nonstandard_curve(3, &mut rng(1));
        assert!(!c.is_standard());
    }
}
