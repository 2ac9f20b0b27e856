use std::collections::BTreeMap;

use super::{theta_orbit_of, ConstructionSpec, OrbitChoice};
use crate::error::Result;
use crate::group::{stabilizer, GroupAction, GroupOps, Subgroup};
use crate::solution::{permutation_brace, Solution};

/// A spec whose built solution is isomorphic to `s`, read off from the
/// permutation brace `B` of `s`: `η` sends `x` to the element of `π_x`, and
/// `G` acts on `X` through `(a, b) ↦ g̃_a⁻¹ ∘ f_a⁻¹ ∘ f_b`.
pub fn spec_of_solution(s: &Solution) -> Result<ConstructionSpec> {
    let pb = permutation_brace(s)?;
    let b = pb.brace;
    let n = b.order();
    let m = s.size();
    let g = b.semidirect();
    let actions: Vec<Vec<usize>> = (0..n * n)
        .map(|h| {
            let (a, c) = g.decode(h);
            let (fa, gta) = &pb.pair_of[a];
            gta.compose(&fa.inverse())
                .compose(&pb.pair_of[c].0)
                .into_images()
        })
        .collect();
    let sigma = GroupAction::with_generators(&g, m, &g.generators(), |h, x| actions[h][x])
        .expect("the permutation brace acts on X");
    let eta = &pb.gen_of;
    for h in 0..g.order() {
        for x in 0..m {
            assert_eq!(
                eta[sigma.apply(h, x)],
                b.theta(h, eta[x]),
                "η is equivariant"
            );
        }
    }
    // group σ-orbits by the canonical representative of their Θ-orbit
    let mut families: BTreeMap<usize, Vec<Subgroup>> = BTreeMap::new();
    for orbit in sigma.orbits() {
        let x0 = orbit[0];
        let rep = theta_orbit_of(&b, eta[x0])[0];
        let h = (0..g.order())
            .find(|&h| b.theta(h, eta[x0]) == rep)
            .expect("rep lies in the orbit");
        families
            .entry(rep)
            .or_default()
            .push(stabilizer(&sigma, sigma.apply(h, x0)));
    }
    let orbits = families
        .into_iter()
        .map(|(rep, subgroups)| OrbitChoice { rep, subgroups })
        .collect();
    ConstructionSpec::new(b, orbits)
}
