//! Solutions with a prescribed permutation brace `B`, assembled from
//! `Θ`-orbits of `B` and subgroups of `G = (B,⋆) ⋊ (B,·)`.
//!
//! Points of `X = ⊔ G/K_{i,j}` are laid out block by block in `(i, j)` order;
//! inside a block, cosets are ordered by their least element.

mod certificate;
mod enumerate;
mod inverse;
mod involutive;
mod racks;


pub use certificate::{certified_map, check_iso_certificate, find_iso_certificate, IsoCertificate};
pub use enumerate::{classify_solutions, enumerate_specs, Classified};
pub use inverse::spec_of_solution;
pub use involutive::{build_involutive, build_irretractable, InvolutiveSpec};
pub use racks::{rack_from_group, BuiltRack};

use thiserror::Error;

use crate::brace::{brace_isomorphism, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{
    core, left_cosets, subgroup_closure, CosetSpace, GroupAction, GroupOps, SemidirectProduct,
    Subgroup,
};
use crate::solution::{permutation_brace, Solution};

/// One chosen orbit: its representative `a_i` and the family `K_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitChoice {
    pub rep: usize,
    pub subgroups: Vec<Subgroup>,
}

/// Input of the coset construction. Subgroups live in `G`, pair-coded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub brace: SkewBrace,
    pub orbits: Vec<OrbitChoice>,
}

/// The first hypothesis a spec fails.
#[derive(Error, Clone, Debug, PartialEq, Eq)]
pub enum SpecViolation {
    #[error("malformed spec: {0}")]
    Malformed(String),
    #[error("a left brace is required")]
    NotALeftBrace,
    #[error("orbit {orbit} has an empty family of subgroups")]
    EmptyFamily { orbit: usize },
    #[error("representatives {first} and {second} lie in the same orbit")]
    OrbitsNotDistinct { first: usize, second: usize },
    #[error("the chosen orbits generate a subgroup of order {generated} instead of {order}")]
    GenerationFails { generated: usize, order: usize },
    #[error(
        "subgroup {family} of orbit {orbit} contains {witness}, which moves the representative"
    )]
    ContainmentFails {
        orbit: usize,
        family: usize,
        witness: usize,
    },
    #[error("brace element {witness} survives in the intersection of the cores")]
    CoreFails { witness: usize },
}

impl From<SpecViolation> for Error {
    fn from(v: SpecViolation) -> Self {
        match v {
            SpecViolation::NotALeftBrace => Error::NotALeftBrace,
            other => Error::SpecInvalid(other.to_string()),
        }
    }
}

/// Where a point of `X` comes from: the coset `rep · K_{orbit, family}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CosetLabel {
    pub orbit: usize,
    pub family: usize,
    pub rep: usize,
}

/// A constructed solution with the provenance of each point.
#[derive(Clone, Debug)]
pub struct BuiltSolution {
    pub solution: Solution,
    pub labels: Vec<CosetLabel>,
    /// `η(x)`, the brace element attached to each point.
    pub eta: Vec<usize>,
}

/// `{(b,c) ∈ G : Θ_{(b,c)}(a) = a}`, by scanning all pairs.
pub fn stabilizer_in_semidirect(b: &SkewBrace, a: usize) -> Subgroup {
    let n = b.order();
    let elems = (0..n * n).filter(|&x| b.theta(x, a) == a).collect();
    Subgroup::from_sorted_unchecked(n * n, elems)
}

/// The `Θ`-orbit of `a`, sorted.
fn theta_orbit_of(b: &SkewBrace, a: usize) -> Vec<usize> {
    let n = b.order();
    let mut seen = vec![false; n];
    for x in 0..n * n {
        seen[b.theta(x, a)] = true;
    }
    (0..n).filter(|&c| seen[c]).collect()
}

/// Shared checks for the orbit data: range, non-empty families, distinct
/// orbits and generation of the star group. `orbit_of` maps a rep to its orbit.
fn check_orbits(
    b: &SkewBrace,
    orbits: &[OrbitChoice],
    parent_order: usize,
    orbit_of: impl Fn(usize) -> Vec<usize>,
) -> Result<Vec<Vec<usize>>, SpecViolation> {
    let n = b.order();
    if orbits.is_empty() {
        return Err(SpecViolation::Malformed("no orbits chosen".into()));
    }
    for (i, o) in orbits.iter().enumerate() {
        if o.rep >= n {
            return Err(SpecViolation::Malformed(format!(
                "representative {} out of range for order {n}",
                o.rep
            )));
        }
        if o.subgroups.is_empty() {
            return Err(SpecViolation::EmptyFamily { orbit: i });
        }
        if let Some(k) = o
            .subgroups
            .iter()
            .find(|k| k.parent_order() != parent_order)
        {
            return Err(SpecViolation::Malformed(format!(
                "subgroup of a group of order {} where {parent_order} is expected",
                k.parent_order()
            )));
        }
    }
    let full: Vec<Vec<usize>> = orbits.iter().map(|o| orbit_of(o.rep)).collect();
    for i in 0..orbits.len() {
        for j in i + 1..orbits.len() {
            if full[i].binary_search(&orbits[j].rep).is_ok() {
                return Err(SpecViolation::OrbitsNotDistinct {
                    first: orbits[i].rep,
                    second: orbits[j].rep,
                });
            }
        }
    }
    let y: Vec<usize> = full.iter().flatten().copied().collect();
    let generated = subgroup_closure(b.star(), &y).order();
    if generated != n {
        return Err(SpecViolation::GenerationFails {
            generated,
            order: n,
        });
    }
    Ok(full)
}

/// The intersection of the cores of every subgroup in the families.
fn joint_core<G: GroupOps + ?Sized>(g: &G, orbits: &[OrbitChoice]) -> Subgroup {
    let mut acc = Subgroup::whole(g.order());
    for k in orbits.iter().flat_map(|o| &o.subgroups) {
        if acc.is_trivial() {
            break;
        }
        acc = acc.intersection(&core(g, k));
    }
    acc
}

/// One block `G/K_{i,j}` of `X`.
pub(crate) struct Block {
    pub orbit: usize,
    pub family: usize,
    pub offset: usize,
    pub cosets: CosetSpace,
}

/// The disjoint-union layout of `X`.
pub(crate) struct Layout {
    pub blocks: Vec<Block>,
    /// Per point: its block and the representative of its coset.
    pub points: Vec<(usize, usize)>,
}

impl Layout {
    pub fn new<G: GroupOps + ?Sized>(g: &G, orbits: &[OrbitChoice]) -> Self {
        let mut blocks = Vec::new();
        let mut points = Vec::new();
        for (i, o) in orbits.iter().enumerate() {
            for (j, k) in o.subgroups.iter().enumerate() {
                let cosets = left_cosets(g, k);
                let bi = blocks.len();
                points.extend(cosets.reps().iter().map(|&r| (bi, r)));
                blocks.push(Block {
                    orbit: i,
                    family: j,
                    offset: points.len() - cosets.len(),
                    cosets,
                });
            }
        }
        Layout { blocks, points }
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// The point `h · y`.
    #[inline]
    pub fn translate<G: GroupOps + ?Sized>(&self, g: &G, h: usize, y: usize) -> usize {
        let (bi, rep) = self.points[y];
        let block = &self.blocks[bi];
        block.offset + block.cosets.coset_of(g.mul(h, rep))
    }

    pub fn labels(&self) -> Vec<CosetLabel> {
        self.points
            .iter()
            .map(|&(bi, rep)| CosetLabel {
                orbit: self.blocks[bi].orbit,
                family: self.blocks[bi].family,
                rep,
            })
            .collect()
    }
}

/// Asserts the permutation brace of `s` is isomorphic to `b`.
pub(crate) fn assert_permutation_brace(s: &Solution, b: &SkewBrace) {
    let pb = permutation_brace(s).expect("constructed solutions are non-degenerate");
    assert!(
        brace_isomorphism(&pb.brace, b).is_some(),
        "permutation brace of a constructed solution is isomorphic to its source"
    );
}

impl ConstructionSpec {
    /// A spec that has passed [`ConstructionSpec::validate`].
    pub fn new(brace: SkewBrace, orbits: Vec<OrbitChoice>) -> Result<Self> {
        let spec = ConstructionSpec { brace, orbits };
        spec.validate()?;
        Ok(spec)
    }

    /// Every `Θ`-orbit, each with the single trivial subgroup.
    pub fn canonical(brace: SkewBrace) -> Self {
        let n = brace.order();
        let orbits = brace
            .theta_orbits()
            .into_iter()
            .map(|o| OrbitChoice {
                rep: o[0],
                subgroups: vec![Subgroup::trivial(n * n)],
            })
            .collect();
        ConstructionSpec { brace, orbits }
    }

    pub fn semidirect(&self) -> SemidirectProduct {
        self.brace.semidirect()
    }

    /// `|X| = Σ [G : K_{i,j}]`.
    pub fn size(&self) -> usize {
        let g = self.brace.order().pow(2);
        self.orbits
            .iter()
            .flat_map(|o| &o.subgroups)
            .map(|k| g / k.order())
            .sum()
    }

    pub fn validate(&self) -> Result<(), SpecViolation> {
        let b = &self.brace;
        let n = b.order();
        check_orbits(b, &self.orbits, n * n, |a| theta_orbit_of(b, a))?;
        for (i, o) in self.orbits.iter().enumerate() {
            for (j, k) in o.subgroups.iter().enumerate() {
                if let Some(&w) = k.elements().iter().find(|&&x| b.theta(x, o.rep) != o.rep) {
                    return Err(SpecViolation::ContainmentFails {
                        orbit: i,
                        family: j,
                        witness: w,
                    });
                }
            }
        }
        let acc = joint_core(&self.semidirect(), &self.orbits);
        // (1, a) is coded a and (a, a) is coded a·n + a
        if let Some(a) = (1..n).find(|&a| acc.contains(a) && acc.contains(a * n + a)) {
            return Err(SpecViolation::CoreFails { witness: a });
        }
        Ok(())
    }

    /// `η((b,c)K_{i,j}) = Θ_{(b,c)}(a_i)` and `σ` = left translation of cosets.
    pub fn induced_eta_sigma(&self) -> (Vec<usize>, GroupAction) {
        let g = self.semidirect();
        let layout = Layout::new(&g, &self.orbits);
        let eta = self.eta(&layout);
        let sigma = GroupAction::with_generators(&g, layout.size(), &g.generators(), |h, y| {
            layout.translate(&g, h, y)
        })
        .expect("left translation is an action");
        (eta, sigma)
    }

    fn eta(&self, layout: &Layout) -> Vec<usize> {
        layout
            .points
            .iter()
            .map(|&(bi, rep)| {
                let a = self.orbits[layout.blocks[bi].orbit].rep;
                self.brace.theta(rep, a)
            })
            .collect()
    }
}

/// The solution on `X = ⊔ G/K_{i,j}` with
/// `f_x(y) = (1, η(x)) · y` and `g_y(x) = (θ, θ)⁻¹ · x`, `θ = λ_{η(x)}(η(y))`.
pub fn build_solution(spec: &ConstructionSpec) -> Result<BuiltSolution> {
    spec.validate()?;
    let b = &spec.brace;
    let g = spec.semidirect();
    let layout = Layout::new(&g, &spec.orbits);
    let m = layout.size();
    let eta = spec.eta(&layout);
    let mut f = vec![0; m * m];
    let mut gt = vec![0; m * m];
    for x in 0..m {
        let left = g.encode(0, eta[x]);
        for y in 0..m {
            f[x * m + y] = layout.translate(&g, left, y);
            let t = b.lambda(eta[x], eta[y]);
            gt[y * m + x] = layout.translate(&g, g.inv(g.encode(t, t)), x);
        }
    }
    let solution =
        Solution::from_flat(m, f, gt).expect("coset constructions satisfy the braid relation");
    assert_permutation_brace(&solution, b);
    Ok(BuiltSolution {
        solution,
        labels: layout.labels(),
        eta,
    })
}

/// The solution `f_x(y) = σ_{(1,η(x))}(y)`, `g_y(x) = σ⁻¹_{(θ,θ)}(x)` with
/// `θ = λ_{η(x)}(η(y))`, for an action `σ` of `G` on `X` and `η: X → B`.
pub fn build_from_eta_sigma(b: &SkewBrace, eta: &[usize], sigma: &GroupAction) -> Result<Solution> {
    let n = b.order();
    let m = eta.len();
    if sigma.group_order() != n * n || sigma.degree() != m {
        return Err(Error::SizeMismatch(sigma.degree(), m));
    }
    if m == 0 {
        return Err(Error::Empty);
    }
    if let Some(&v) = eta.iter().find(|&&v| v >= n) {
        return Err(Error::HypothesisFails {
            name: "range",
            witness: format!("η takes the value {v} outside the brace"),
        });
    }
    let generated = subgroup_closure(b.star(), eta).order();
    if generated != n {
        return Err(Error::HypothesisFails {
            name: "generation",
            witness: format!("η(X) generates a subgroup of order {generated}"),
        });
    }
    let g = b.semidirect();
    let mut seen = std::collections::HashMap::new();
    for a in 0..n {
        let key = (sigma.row(g.encode(0, a)), sigma.row(g.encode(a, a)));
        if let Some(prev) = seen.insert(key, a) {
            return Err(Error::HypothesisFails {
                name: "injectivity",
                witness: format!("elements {prev} and {a} act identically"),
            });
        }
    }
    for h in 0..n * n {
        for x in 0..m {
            if eta[sigma.apply(h, x)] != b.theta(h, eta[x]) {
                return Err(Error::HypothesisFails {
                    name: "compatibility",
                    witness: format!("pair {:?} at point {x}", g.decode(h)),
                });
            }
        }
    }
    let solution = Solution::from_fn(
        m,
        |x, y| sigma.apply(g.encode(0, eta[x]), y),
        |y, x| {
            let t = b.lambda(eta[x], eta[y]);
            sigma.apply(g.inv(g.encode(t, t)), x)
        },
    )
    .expect("the hypotheses force a solution");
    assert_permutation_brace(&solution, b);
    Ok(solution)
}

/// Whether `(1, θ)` and `(θ, θ)` lie in `(b,c) K_{i,j} (b,c)⁻¹` for
/// `θ = Θ_{(b,c)}(a_i)`, over all `(b,c)`, `i`, `j`. Asserted to agree with
/// square-freeness of the built solution.
pub fn check_square_free_spec(spec: &ConstructionSpec) -> Result<bool> {
    let built = build_solution(spec)?;
    let b = &spec.brace;
    let g = spec.semidirect();
    let holds = spec.orbits.iter().all(|o| {
        o.subgroups.iter().all(|k| {
            (0..g.order()).all(|h| {
                let t = b.theta(h, o.rep);
                let hi = g.inv(h);
                // h⁻¹ u h ∈ K  ⟺  u ∈ h K h⁻¹
                k.contains(g.mul(g.mul(hi, g.encode(0, t)), h))
                    && k.contains(g.mul(g.mul(hi, g.encode(t, t)), h))
            })
        })
    });
    assert_eq!(
        holds,
        built.solution.is_square_free(),
        "square-free spec condition matches the built solution"
    );
    Ok(holds)
}
