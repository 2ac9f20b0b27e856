use std::collections::HashMap;

use rayon::prelude::*;

use super::{build_solution, certified_map, find_iso_certificate, ConstructionSpec, OrbitChoice};
use crate::brace::SkewBrace;
use crate::caps::Caps;
use crate::error::Result;
use crate::group::{core, subgroup_closure, subgroups_within, Subgroup};
use crate::solution::{solution_isomorphism, Solution};

/// A class representative together with the spec that built it.
#[derive(Clone, Debug)]
pub struct Classified {
    pub solution: Solution,
    pub spec: ConstructionSpec,
}

/// Non-decreasing index sequences of length `1..=max_len` over `0..count`.
fn multisets(count: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..count).map(|i| vec![i]).collect();
    stack.reverse();
    while let Some(m) = stack.pop() {
        if m.len() < max_len {
            let last = *m.last().expect("non-empty");
            for i in (last..count).rev() {
                let mut ext = m.clone();
                ext.push(i);
                stack.push(ext);
            }
        }
        out.push(m);
    }
    out
}

/// Candidate data for one orbit.
struct OrbitOptions {
    rep: usize,
    subgroups: Vec<Subgroup>,
    cores: Vec<Subgroup>,
    families: Vec<Vec<usize>>,
    sizes: Vec<usize>,
}

/// Every valid spec over `b`: non-empty sets of `Θ`-orbits that generate
/// `(B,⋆)`, and per orbit a multiset of at most `caps.families_per_orbit`
/// subgroups of its stabilizer. With `max_size`, specs with a larger `X` are
/// skipped. Orbit sets are visited by bitmask, families lexicographically.
pub fn enumerate_specs(
    b: &SkewBrace,
    caps: &Caps,
    max_size: Option<usize>,
) -> Result<Vec<ConstructionSpec>> {
    let n = b.order();
    let g = b.semidirect();
    let orbits = b.theta_orbits();
    Caps::check(orbits.len(), caps.orbit_subsets)?;
    let limit = max_size.unwrap_or(usize::MAX);
    let mut options = Vec::with_capacity(orbits.len());
    for o in &orbits {
        let rep = o[0];
        let subgroups = subgroups_within(&g, &b.theta_stabilizer(rep), caps)?;
        let cores = subgroups.iter().map(|k| core(&g, k)).collect();
        let families: Vec<Vec<usize>> = multisets(subgroups.len(), caps.families_per_orbit)
            .into_iter()
            .filter(|m| family_size(&subgroups, m, n) <= limit)
            .collect();
        let sizes = families
            .iter()
            .map(|m| family_size(&subgroups, m, n))
            .collect();
        options.push(OrbitOptions {
            rep,
            subgroups,
            cores,
            families,
            sizes,
        });
    }
    let mut specs = Vec::new();
    for mask in 1u64..(1u64 << orbits.len()) {
        let chosen: Vec<usize> = (0..orbits.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let y: Vec<usize> = chosen
            .iter()
            .flat_map(|&i| orbits[i].iter().copied())
            .collect();
        if subgroup_closure(b.star(), &y).order() != n {
            continue;
        }
        let mut picks = vec![0usize; chosen.len()];
        product(&options, &chosen, &mut picks, 0, 0, limit, &mut |picks| {
            let acc = chosen
                .iter()
                .zip(picks)
                .fold(Subgroup::whole(n * n), |acc, (&i, &p)| {
                    options[i].families[p]
                        .iter()
                        .fold(acc, |acc, &s| acc.intersection(&options[i].cores[s]))
                });
            if (1..n).any(|a| acc.contains(a) && acc.contains(a * n + a)) {
                return;
            }
            let spec = ConstructionSpec {
                brace: b.clone(),
                orbits: chosen
                    .iter()
                    .zip(picks)
                    .map(|(&i, &p)| OrbitChoice {
                        rep: options[i].rep,
                        subgroups: options[i].families[p]
                            .iter()
                            .map(|&s| options[i].subgroups[s].clone())
                            .collect(),
                    })
                    .collect(),
            };
            debug_assert!(spec.validate().is_ok());
            specs.push(spec);
        });
    }
    Ok(specs)
}

fn family_size(subgroups: &[Subgroup], family: &[usize], n: usize) -> usize {
    family.iter().map(|&s| n * n / subgroups[s].order()).sum()
}

/// Visit every choice of one family per chosen orbit whose total size fits.
fn product(
    options: &[OrbitOptions],
    chosen: &[usize],
    picks: &mut Vec<usize>,
    depth: usize,
    size: usize,
    limit: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if depth == chosen.len() {
        visit(picks);
        return;
    }
    let opt = &options[chosen[depth]];
    for p in 0..opt.families.len() {
        let s = size + opt.sizes[p];
        if s > limit {
            continue;
        }
        picks[depth] = p;
        product(options, chosen, picks, depth + 1, s, limit, visit);
    }
}

/// Size plus the sorted `(f_x, g_x)` cycle types.
type ClassKey = (usize, Vec<(Vec<usize>, Vec<usize>)>);

/// Cheap isomorphism invariant.
fn class_key(s: &Solution) -> ClassKey {
    let mut rows: Vec<_> = (0..s.size())
        .map(|x| {
            (
                s.f_perm(x).expect("non-degenerate").cycle_type(),
                s.g_perm(x).expect("non-degenerate").cycle_type(),
            )
        })
        .collect();
    rows.sort();
    (s.size(), rows)
}

/// One solution per isomorphism class among the enumerated specs, sorted by
/// `(size, f, g)`. Whenever two specs give isomorphic solutions, a
/// certificate is searched for and, if found, checked.
pub fn classify_solutions(
    b: &SkewBrace,
    caps: &Caps,
    max_size: Option<usize>,
) -> Result<Vec<Classified>> {
    let specs = enumerate_specs(b, caps, max_size)?;
    let built: Vec<Solution> = specs
        .par_iter()
        .map(|s| build_solution(s).map(|r| r.solution))
        .collect::<Result<_>>()?;
    let mut classes: Vec<usize> = Vec::new();
    let mut by_key: HashMap<_, Vec<usize>> = HashMap::new();
    for (k, sol) in built.iter().enumerate() {
        let bucket = by_key.entry(class_key(sol)).or_default();
        let twin = bucket
            .par_iter()
            .find_first(|&&c| solution_isomorphism(&built[c], sol).is_some())
            .copied();
        match twin {
            Some(c) => {
                if let Some(cert) = find_iso_certificate(&specs[c], &specs[k]) {
                    certified_map(&specs[c], &specs[k], &cert)?;
                }
            }
            None => {
                bucket.push(k);
                classes.push(k);
            }
        }
    }
    let mut out: Vec<Classified> = classes
        .into_iter()
        .map(|k| Classified {
            solution: built[k].clone(),
            spec: specs[k].clone(),
        })
        .collect();
    out.sort_by(|a, b| a.solution.cmp(&b.solution));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::multisets;

    #[test]
    fn multisets_are_non_decreasing() {
        let m = multisets(3, 2);
        assert_eq!(m.len(), 3 + 6);
        assert!(m.iter().all(|v| v.windows(2).all(|w| w[0] <= w[1])));
        assert_eq!(m[0], vec![0]);
        assert_eq!(m[1], vec![0, 0]);
    }
}
