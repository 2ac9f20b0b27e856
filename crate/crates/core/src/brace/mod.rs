//! Skew left braces: two groups `(B,⋆)` and `(B,·)` on one index set with
//! `a·(b⋆c) = (a·b) ⋆ a^⋆ ⋆ (a·c)`, identity at 0.

mod examples;
mod iso;
mod regular;

pub(crate) use iso::is_brace_morphism;
pub use iso::{brace_automorphisms, brace_isomorphism};
pub use regular::{
    brace_from_regular_subgroup, enumerate_braces_on, enumerate_braces_on_with,
    regular_subgroup_of, regular_subgroups, BraceEnumeration, DedupeStrategy,
};

use crate::error::{Error, Result};
use crate::group::{
    is_normal, left_cosets, orbit, stabilizer, FiniteGroup, GroupAction, GroupOps,
    SemidirectProduct, Subgroup,
};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    star: FiniteGroup,
    dot: FiniteGroup,
    /// `lambda[a·n + b] = λ_a(b) = a^⋆ ⋆ (a·b)`.
    lambda: Vec<usize>,
}

impl std::fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SkewBrace(order {})", self.order())
    }
}

impl SkewBrace {
    pub fn from_tables(star: &[Vec<usize>], dot: &[Vec<usize>]) -> Result<Self> {
        let star = FiniteGroup::from_table(star).map_err(|e| Error::StarInvalid(Box::new(e)))?;
        let dot = FiniteGroup::from_table(dot).map_err(|e| Error::DotInvalid(Box::new(e)))?;
        Self::from_groups(star, dot)
    }

    /// Check the brace axiom over all triples.
    pub fn from_groups(star: FiniteGroup, dot: FiniteGroup) -> Result<Self> {
        let n = star.order();
        if n != dot.order() {
            return Err(Error::OrderMismatch {
                star: n,
                dot: dot.order(),
            });
        }
        for a in 0..n {
            let ai = star.inv(a);
            for b in 0..n {
                let ab = dot.mul(a, b);
                let lhs_row = star.mul(ab, ai);
                for c in 0..n {
                    let lhs = dot.mul(a, star.mul(b, c));
                    let rhs = star.mul(lhs_row, dot.mul(a, c));
                    if lhs != rhs {
                        return Err(Error::AxiomFails { a, b, c });
                    }
                }
            }
        }
        Ok(Self::from_groups_unchecked(star, dot))
    }

    /// Caller guarantees the brace axiom.
    pub(crate) fn from_groups_unchecked(star: FiniteGroup, dot: FiniteGroup) -> Self {
        let n = star.order();
        let mut lambda = Vec::with_capacity(n * n);
        for a in 0..n {
            let ai = star.inv(a);
            lambda.extend((0..n).map(|b| star.mul(ai, dot.mul(a, b))));
        }
        SkewBrace { star, dot, lambda }
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    pub fn star(&self) -> &FiniteGroup {
        &self.star
    }

    pub fn dot(&self) -> &FiniteGroup {
        &self.dot
    }

    #[inline]
    pub fn star_mul(&self, a: usize, b: usize) -> usize {
        self.star.mul(a, b)
    }

    #[inline]
    pub fn dot_mul(&self, a: usize, b: usize) -> usize {
        self.dot.mul(a, b)
    }

    #[inline]
    pub fn star_inv(&self, a: usize) -> usize {
        self.star.inv(a)
    }

    #[inline]
    pub fn dot_inv(&self, a: usize) -> usize {
        self.dot.inv(a)
    }

    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.order() + b]
    }

    /// `λ_a⁻¹(b) = λ_{a⁻¹}(b)`.
    #[inline]
    pub fn lambda_inv(&self, a: usize, b: usize) -> usize {
        self.lambda(self.dot.inv(a), b)
    }

    pub fn lambda_perm(&self, a: usize) -> Permutation {
        let n = self.order();
        Permutation::from_images_unchecked(self.lambda[a * n..(a + 1) * n].to_vec())
    }

    /// `γ_b(a) = ((b⁻¹·a⁻¹) ⋆ (b⁻¹)^⋆)⁻¹`.
    #[inline]
    pub fn gamma(&self, b: usize, a: usize) -> usize {
        let bi = self.dot.inv(b);
        let inner = self
            .star
            .mul(self.dot.mul(bi, self.dot.inv(a)), self.star.inv(bi));
        self.dot.inv(inner)
    }

    pub fn gamma_perm(&self, b: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.order()).map(|a| self.gamma(b, a)).collect())
    }

    /// Every `γ_b`, indexed by `b`; `γ_a ∘ γ_b = γ_{b·a}` is asserted.
    pub fn gamma_map(&self) -> Vec<Permutation> {
        let perms: Vec<Permutation> = (0..self.order()).map(|b| self.gamma_perm(b)).collect();
        for a in 0..self.order() {
            for b in 0..self.order() {
                assert_eq!(
                    perms[a].compose(&perms[b]),
                    perms[self.dot.mul(b, a)],
                    "gamma anti-morphism"
                );
            }
        }
        perms
    }

    /// `λ` as an action of `(B,·)` on `B`, each `λ_a` checked to be a
    /// `⋆`-automorphism.
    pub fn lambda_action(&self) -> GroupAction {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(
                        self.lambda(a, self.star.mul(b, c)),
                        self.star.mul(self.lambda(a, b), self.lambda(a, c)),
                        "lambda_a preserves star"
                    );
                }
            }
        }
        GroupAction::new(&self.dot, n, |a, b| self.lambda(a, b)).expect("lambda is an action")
    }

    /// `G = (B,⋆) ⋊ (B,·)` via `λ`; the pair `(a, b)` is coded `a·|B| + b`.
    pub fn semidirect(&self) -> SemidirectProduct {
        SemidirectProduct::from_parts(self.star.clone(), self.dot.clone(), self.lambda.clone())
    }

    /// `Θ_{(a,b)}(c) = a ⋆ λ_b(c) ⋆ a^⋆` for the pair code `x = a·|B| + b`.
    #[inline]
    pub fn theta(&self, x: usize, c: usize) -> usize {
        let n = self.order();
        let (a, b) = (x / n, x % n);
        self.star
            .mul(self.star.mul(a, self.lambda(b, c)), self.star.inv(a))
    }

    /// `Θ` as an action of `G` on `B`.
    pub fn theta_action(&self) -> GroupAction {
        let g = self.semidirect();
        GroupAction::with_generators(&g, self.order(), &g.generators(), |x, c| self.theta(x, c))
            .expect("theta is an action")
    }

    /// Θ-orbits in order of least element.
    pub fn theta_orbits(&self) -> Vec<Vec<usize>> {
        self.theta_action().orbits()
    }

    /// `St(a) ≤ G` under `Θ`.
    pub fn theta_stabilizer(&self, a: usize) -> Subgroup {
        stabilizer(&self.theta_action(), a)
    }

    pub fn theta_orbit(&self, a: usize) -> Vec<usize> {
        orbit(&self.theta_action(), a)
    }

    /// Stabilizer of `a` under `λ`, inside `(B,·)`.
    pub fn lambda_stabilizer(&self, a: usize) -> Subgroup {
        let elems = (0..self.order())
            .filter(|&b| self.lambda(b, a) == a)
            .collect();
        Subgroup::from_sorted_unchecked(self.order(), elems)
    }

    pub fn lambda_orbits(&self) -> Vec<Vec<usize>> {
        self.lambda_action().orbits()
    }

    pub fn is_left_brace(&self) -> bool {
        self.star.is_abelian()
    }

    pub fn is_trivial(&self) -> bool {
        self.star == self.dot
    }

    /// First `(b, c, a)` with `(b⋆c)·a ≠ (b·a) ⋆ a^⋆ ⋆ (c·a)`.
    pub fn right_axiom_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for b in 0..n {
            for c in 0..n {
                let bc = self.star.mul(b, c);
                for a in 0..n {
                    let lhs = self.dot.mul(bc, a);
                    let rhs = self.star.mul(
                        self.star.mul(self.dot.mul(b, a), self.star.inv(a)),
                        self.dot.mul(c, a),
                    );
                    if lhs != rhs {
                        return Some((b, c, a));
                    }
                }
            }
        }
        None
    }

    pub fn is_two_sided(&self) -> bool {
        self.right_axiom_failure().is_none()
    }

    fn is_star_central(&self, a: usize) -> bool {
        (0..self.order()).all(|b| self.star.mul(a, b) == self.star.mul(b, a))
    }

    /// `{a : λ_a = id, a ⋆-central}`; asserted to be an ideal.
    pub fn socle(&self) -> Subgroup {
        let n = self.order();
        let elems: Vec<usize> = (0..n)
            .filter(|&a| (0..n).all(|b| self.lambda(a, b) == b) && self.is_star_central(a))
            .collect();
        assert!(self.is_ideal(&elems), "the socle is an ideal");
        Subgroup::from_sorted_unchecked(n, elems)
    }

    /// Kernel of `a ↦ (λ_a, γ_a⁻¹)`.
    pub fn socle_by_gamma_kernel(&self) -> Subgroup {
        let n = self.order();
        let elems = (0..n)
            .filter(|&a| (0..n).all(|b| self.lambda(a, b) == b && self.gamma(a, b) == b))
            .collect();
        Subgroup::from_sorted_unchecked(n, elems)
    }

    /// Kernel of `a ↦ (λ_a, h_a)` with `h_a(b) = a ⋆ λ_a(b) ⋆ a^⋆`.
    pub fn socle_by_conjugation_kernel(&self) -> Subgroup {
        let n = self.order();
        let elems = (0..n)
            .filter(|&a| (0..n).all(|b| self.lambda(a, b) == b && self.theta(a * n + a, b) == b))
            .collect();
        Subgroup::from_sorted_unchecked(n, elems)
    }

    fn is_lambda_invariant(&self, set: &Subgroup) -> bool {
        (0..self.order()).all(|b| {
            set.elements()
                .iter()
                .all(|&y| set.contains(self.lambda(b, y)))
        })
    }

    /// Normal in both groups and `λ`-invariant.
    pub fn is_ideal(&self, subset: &[usize]) -> bool {
        let (Ok(s), Ok(d)) = (
            Subgroup::new(&self.star, subset.to_vec()),
            Subgroup::new(&self.dot, subset.to_vec()),
        ) else {
            return false;
        };
        is_normal(&self.star, &s) && is_normal(&self.dot, &d) && self.is_lambda_invariant(&s)
    }

    /// A `⋆`-subgroup that is `λ`-invariant.
    pub fn is_left_ideal(&self, subset: &[usize]) -> bool {
        match Subgroup::new(&self.star, subset.to_vec()) {
            Ok(s) => self.is_lambda_invariant(&s),
            Err(_) => false,
        }
    }

    /// Closed under both operations (hence both inverses).
    pub fn is_sub_brace(&self, subset: &[usize]) -> bool {
        Subgroup::new(&self.star, subset.to_vec()).is_ok()
            && Subgroup::new(&self.dot, subset.to_vec()).is_ok()
    }

    /// `B/I` on `⋆`-cosets, represented by their least elements in ascending
    /// order.
    pub fn quotient(&self, ideal: &[usize]) -> Result<SkewBrace> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal(format!("{ideal:?}")));
        }
        let sub = Subgroup::new(&self.star, ideal.to_vec())?;
        let cosets = left_cosets(&self.star, &sub);
        let m = cosets.len();
        let induced = |op: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
            let mut t = Vec::with_capacity(m * m);
            for &x in cosets.reps() {
                for &y in cosets.reps() {
                    t.push(cosets.coset_of(op(x, y)));
                }
            }
            t
        };
        let star = induced(&|x, y| self.star.mul(x, y));
        let dot = induced(&|x, y| self.dot.mul(x, y));
        let star = FiniteGroup::from_flat(m, star).map_err(|e| Error::StarInvalid(Box::new(e)))?;
        let dot = FiniteGroup::from_flat(m, dot).map_err(|e| Error::DotInvalid(Box::new(e)))?;
        SkewBrace::from_groups(star, dot)
    }

    /// Elements with `λ_a(a) = a`.
    pub fn square_free_elements(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&a| self.lambda(a, a) == a)
            .collect()
    }
}

#[cfg(test)]
mod tests;
