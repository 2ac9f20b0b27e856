use super::{
    assert_permutation_brace, check_orbits, joint_core, BuiltSolution, ConstructionSpec, Layout,
    OrbitChoice, SpecViolation,
};
use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::solution::Solution;

/// Input of the involutive construction over a left brace: `λ`-orbit
/// representatives and subgroups of `(B,·)` inside their `λ`-stabilizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveSpec {
    pub brace: SkewBrace,
    pub orbits: Vec<OrbitChoice>,
}

fn lambda_orbit_of(b: &SkewBrace, a: usize) -> Vec<usize> {
    let n = b.order();
    let mut seen = vec![false; n];
    for c in 0..n {
        seen[b.lambda(c, a)] = true;
    }
    (0..n).filter(|&c| seen[c]).collect()
}

impl InvolutiveSpec {
    pub fn new(brace: SkewBrace, orbits: Vec<OrbitChoice>) -> Result<Self> {
        let spec = InvolutiveSpec { brace, orbits };
        spec.validate()?;
        Ok(spec)
    }

    /// Every `λ`-orbit with the trivial subgroup.
    pub fn canonical(brace: SkewBrace) -> Self {
        let n = brace.order();
        let orbits = brace
            .lambda_orbits()
            .into_iter()
            .map(|o| OrbitChoice {
                rep: o[0],
                subgroups: vec![Subgroup::trivial(n)],
            })
            .collect();
        InvolutiveSpec { brace, orbits }
    }

    pub fn size(&self) -> usize {
        let n = self.brace.order();
        self.orbits
            .iter()
            .flat_map(|o| &o.subgroups)
            .map(|k| n / k.order())
            .sum()
    }

    /// The same data as a [`ConstructionSpec`], with `K ≤ (B,·)` replaced by
    /// `{(a, k) : a ∈ B, k ∈ K} ≤ G`.
    pub fn lift(&self) -> ConstructionSpec {
        let n = self.brace.order();
        let orbits = self
            .orbits
            .iter()
            .map(|o| OrbitChoice {
                rep: o.rep,
                subgroups: o
                    .subgroups
                    .iter()
                    .map(|k| {
                        let elems = (0..n)
                            .flat_map(|a| k.elements().iter().map(move |&c| a * n + c))
                            .collect();
                        Subgroup::from_sorted_unchecked(n * n, elems)
                    })
                    .collect(),
            })
            .collect();
        ConstructionSpec {
            brace: self.brace.clone(),
            orbits,
        }
    }

    pub fn validate(&self) -> Result<(), SpecViolation> {
        let b = &self.brace;
        if !b.is_left_brace() {
            return Err(SpecViolation::NotALeftBrace);
        }
        check_orbits(b, &self.orbits, b.order(), |a| lambda_orbit_of(b, a))?;
        for (i, o) in self.orbits.iter().enumerate() {
            for (j, k) in o.subgroups.iter().enumerate() {
                if let Some(&w) = k.elements().iter().find(|&&c| b.lambda(c, o.rep) != o.rep) {
                    return Err(SpecViolation::ContainmentFails {
                        orbit: i,
                        family: j,
                        witness: w,
                    });
                }
            }
        }
        let acc = joint_core(b.dot(), &self.orbits);
        if let Some(&w) = acc.elements().iter().find(|&&a| a != 0) {
            return Err(SpecViolation::CoreFails { witness: w });
        }
        Ok(())
    }
}

/// The involutive solution on `X = ⊔ B/K_{i,j}` with
/// `f_{b₁K}(b₂K') = λ_{b₁}(a_i) · b₂K'` and `g_y(x) = f⁻¹_{f_x(y)}(x)`.
pub fn build_involutive(spec: &InvolutiveSpec) -> Result<BuiltSolution> {
    spec.validate()?;
    let b = &spec.brace;
    let dot = b.dot();
    let layout = Layout::new(dot, &spec.orbits);
    let m = layout.size();
    let eta: Vec<usize> = layout
        .points
        .iter()
        .map(|&(bi, rep)| b.lambda(rep, spec.orbits[layout.blocks[bi].orbit].rep))
        .collect();
    let mut f = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            f[x * m + y] = layout.translate(dot, eta[x], y);
        }
    }
    let mut f_inv = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            f_inv[x * m + f[x * m + y]] = y;
        }
    }
    let mut g = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            g[y * m + x] = f_inv[f[x * m + y] * m + x];
        }
    }
    let solution =
        Solution::from_flat(m, f, g).expect("coset constructions satisfy the braid relation");
    assert!(solution.is_involutive() && solution.is_nondegenerate());
    assert_permutation_brace(&solution, b);
    Ok(BuiltSolution {
        solution,
        labels: layout.labels(),
        eta,
    })
}

/// The involutive construction with one family per chosen orbit, each equal to
/// the full `λ`-stabilizer; `reps` picks the orbits. The result is irretractable.
pub fn build_irretractable(b: &SkewBrace, reps: &[usize]) -> Result<BuiltSolution> {
    if !b.is_left_brace() {
        return Err(Error::NotALeftBrace);
    }
    let socle = b.socle();
    if !socle.is_trivial() {
        return Err(Error::SocleNotTrivial(socle.order()));
    }
    let orbits = reps
        .iter()
        .map(|&a| OrbitChoice {
            rep: a,
            subgroups: vec![b.lambda_stabilizer(a)],
        })
        .collect();
    let spec = InvolutiveSpec {
        brace: b.clone(),
        orbits,
    };
    let built = build_involutive(&spec)?;
    assert!(
        built.solution.is_irretractable()?,
        "full stabilizers over a brace with trivial socle give irretractable solutions"
    );
    Ok(built)
}
