use super::{generating_set, GroupOps, Subgroup};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A homomorphism from a group into `Sym(degree)`, stored as a flat table whose
/// row `g` holds the images of `0..degree` under `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    group_order: usize,
    degree: usize,
    images: Vec<usize>,
}

impl GroupAction {
    /// Tabulate `act(g, p)` and check it is an action.
    pub fn new<G, F>(group: &G, degree: usize, act: F) -> Result<Self>
    where
        G: GroupOps + ?Sized,
        F: Fn(usize, usize) -> usize,
    {
        let gens = generating_set(group);
        Self::with_generators(group, degree, &gens, act)
    }

    /// As [`GroupAction::new`], with the homomorphism check run on the given
    /// generating set.
    pub fn with_generators<G, F>(group: &G, degree: usize, gens: &[usize], act: F) -> Result<Self>
    where
        G: GroupOps + ?Sized,
        F: Fn(usize, usize) -> usize,
    {
        let n = group.order();
        let mut images = Vec::with_capacity(n * degree);
        for g in 0..n {
            images.extend((0..degree).map(|p| act(g, p)));
        }
        let a = GroupAction {
            group_order: n,
            degree,
            images,
        };
        a.check(group, gens)?;
        Ok(a)
    }

    fn check<G: GroupOps + ?Sized>(&self, group: &G, gens: &[usize]) -> Result<()> {
        let mut seen = vec![usize::MAX; self.degree];
        for g in 0..self.group_order {
            for (p, &q) in self.row(g).iter().enumerate() {
                if q >= self.degree || seen[q] == g {
                    return Err(Error::NotAnAction(format!(
                        "element {g} does not act bijectively (point {p})"
                    )));
                }
                seen[q] = g;
            }
        }
        if let Some(p) = (0..self.degree).find(|&p| self.apply(0, p) != p) {
            return Err(Error::NotAnAction(format!("identity moves point {p}")));
        }
        // rho(g s) = rho(g) rho(s) over generators s forces a homomorphism
        for g in 0..self.group_order {
            for &s in gens {
                let gs = group.mul(g, s);
                for p in 0..self.degree {
                    if self.apply(gs, p) != self.apply(g, self.apply(s, p)) {
                        return Err(Error::NotAnAction(format!(
                            "rho({g}*{s}) differs from rho({g}) rho({s}) at point {p}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn apply(&self, g: usize, p: usize) -> usize {
        self.images[g * self.degree + p]
    }

    pub fn row(&self, g: usize) -> &[usize] {
        &self.images[g * self.degree..(g + 1) * self.degree]
    }

    pub fn perm_of(&self, g: usize) -> Permutation {
        Permutation::from_images_unchecked(self.row(g).to_vec())
    }

    /// Orbits in order of least point, each sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if done[p] {
                continue;
            }
            let o = orbit(self, p);
            for &q in &o {
                done[q] = true;
            }
            out.push(o);
        }
        out
    }
}

/// The orbit of `point`, sorted.
pub fn orbit(act: &GroupAction, point: usize) -> Vec<usize> {
    let mut seen = vec![false; act.degree];
    for g in 0..act.group_order {
        seen[act.apply(g, point)] = true;
    }
    (0..act.degree).filter(|&q| seen[q]).collect()
}

pub fn stabilizer(act: &GroupAction, point: usize) -> Subgroup {
    let elems = (0..act.group_order)
        .filter(|&g| act.apply(g, point) == point)
        .collect();
    Subgroup::from_sorted_unchecked(act.group_order, elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn trivial_action() {
        let g = FiniteGroup::symmetric(3);
        let a = GroupAction::new(&g, 4, |_, p| p).unwrap();
        assert_eq!(orbit(&a, 2), vec![2]);
        assert_eq!(stabilizer(&a, 2).order(), 6);
    }

    #[test]
    fn regular_action_is_transitive() {
        let g = FiniteGroup::cyclic(5);
        let a = GroupAction::new(&g, 5, |x, p| g.mul(x, p)).unwrap();
        assert_eq!(orbit(&a, 0), (0..5).collect::<Vec<_>>());
        assert!(stabilizer(&a, 3).is_trivial());
    }

    #[test]
    fn conjugation_on_s3() {
        let g = FiniteGroup::symmetric(3);
        let a = GroupAction::new(&g, 6, |x, p| g.conj(x, p)).unwrap();
        let o = orbit(&a, 1);
        let st = stabilizer(&a, 1);
        // oracle: scan conjugates directly
        let mut scan: Vec<usize> = (0..6).map(|x| g.conj(x, 1)).collect();
        scan.sort();
        scan.dedup();
        assert_eq!(o, scan);
        assert_eq!(o.len(), 3);
        assert_eq!(st.order(), 2);
        for p in 0..6 {
            assert_eq!(orbit(&a, p).len() * stabilizer(&a, p).order(), 6);
        }
        assert_eq!(a.perm_of(0), Permutation::identity(6));
    }

    #[test]
    fn rejects_right_multiplication() {
        // p -> p * x is an anti-action on a nonabelian group
        let g = FiniteGroup::symmetric(3);
        let err = GroupAction::new(&g, 6, |x, p| g.mul(p, x)).unwrap_err();
        assert!(matches!(err, Error::NotAnAction(_)));
    }
}
