use super::{automorphisms, generating_set, FiniteGroup, GroupAction, GroupOps};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `N ⋊ H` with product `(a,b)(a',b') = (a · act_b(a'), b · b')`, evaluated on
/// demand. The pair `(a, b)` is coded as `a·|H| + b`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    normal: FiniteGroup,
    acting: FiniteGroup,
    /// `act[b·|N| + a]` is the image of `a` under `b`.
    act: Vec<usize>,
}

impl GroupOps for SemidirectProduct {
    fn order(&self) -> usize {
        self.normal.order() * self.acting.order()
    }

    #[inline]
    fn mul(&self, x: usize, y: usize) -> usize {
        let (a, b) = self.decode(x);
        let (a2, b2) = self.decode(y);
        self.encode(
            self.normal.mul(a, self.act_on(b, a2)),
            self.acting.mul(b, b2),
        )
    }

    #[inline]
    fn inv(&self, x: usize) -> usize {
        let (a, b) = self.decode(x);
        let bi = self.acting.inv(b);
        self.encode(self.act_on(bi, self.normal.inv(a)), bi)
    }
}

impl SemidirectProduct {
    /// Caller guarantees `act` is an action of `acting` by automorphisms.
    pub(crate) fn from_parts(normal: FiniteGroup, acting: FiniteGroup, act: Vec<usize>) -> Self {
        debug_assert_eq!(act.len(), normal.order() * acting.order());
        SemidirectProduct {
            normal,
            acting,
            act,
        }
    }

    pub fn normal(&self) -> &FiniteGroup {
        &self.normal
    }

    pub fn acting(&self) -> &FiniteGroup {
        &self.acting
    }

    #[inline]
    pub fn encode(&self, a: usize, b: usize) -> usize {
        a * self.acting.order() + b
    }

    #[inline]
    pub fn decode(&self, x: usize) -> (usize, usize) {
        (x / self.acting.order(), x % self.acting.order())
    }

    #[inline]
    pub fn act_on(&self, b: usize, a: usize) -> usize {
        self.act[b * self.normal.order() + a]
    }

    /// Generators `(s, 1)` and `(1, t)` from generating sets of the factors.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = generating_set(&self.normal)
            .into_iter()
            .map(|s| self.encode(s, 0))
            .collect();
        gens.extend(
            generating_set(&self.acting)
                .into_iter()
                .map(|t| self.encode(0, t)),
        );
        gens
    }

    /// Materialize the Cayley table.
    pub fn to_group(&self) -> FiniteGroup {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(self.mul(x, y));
            }
        }
        FiniteGroup::from_flat(n, table).expect("semidirect products are groups")
    }
}

/// `N ⋊ H` for an action of `H` on the elements of `N` by automorphisms.
pub fn semidirect_product(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    act: &GroupAction,
) -> Result<SemidirectProduct> {
    if act.group_order() != acting.order() || act.degree() != normal.order() {
        return Err(Error::NotAnAction(format!(
            "action of a group of order {} on {} points does not fit {} and {}",
            act.group_order(),
            act.degree(),
            acting.order(),
            normal.order()
        )));
    }
    let gens = generating_set(normal);
    for b in 0..acting.order() {
        for x in 0..normal.order() {
            for &s in &gens {
                let lhs = act.apply(b, normal.mul(x, s));
                let rhs = normal.mul(act.apply(b, x), act.apply(b, s));
                if lhs != rhs {
                    return Err(Error::NotAutomorphismAction {
                        element: b,
                        a: x,
                        b: s,
                    });
                }
            }
        }
    }
    let table = (0..acting.order())
        .flat_map(|b| act.row(b).to_vec())
        .collect();
    Ok(SemidirectProduct::from_parts(
        normal.clone(),
        acting.clone(),
        table,
    ))
}

/// `Hol(A) = A ⋊ Aut(A)`; the acting factor indexes automorphisms in
/// lexicographic order, so index 0 is the identity.
#[derive(Clone, Debug)]
pub struct Holomorph {
    product: SemidirectProduct,
    automorphisms: Vec<Permutation>,
}

impl Holomorph {
    pub fn product(&self) -> &SemidirectProduct {
        &self.product
    }

    pub fn base(&self) -> &FiniteGroup {
        self.product.normal()
    }

    pub fn automorphisms(&self) -> &[Permutation] {
        &self.automorphisms
    }

    pub fn automorphism_group(&self) -> &FiniteGroup {
        self.product.acting()
    }

    /// The natural action `(v, M)(w) = v · M(w)` on `A`.
    #[inline]
    pub fn evaluate(&self, x: usize, w: usize) -> usize {
        let (v, m) = self.product.decode(x);
        self.base().mul(v, self.automorphisms[m].apply(w))
    }

    pub fn evaluation_action(&self) -> GroupAction {
        GroupAction::with_generators(
            &self.product,
            self.base().order(),
            &self.product.generators(),
            |x, w| self.evaluate(x, w),
        )
        .expect("the holomorph acts on its base")
    }
}

pub fn holomorph(base: &FiniteGroup, caps: &Caps) -> Result<Holomorph> {
    let auts = automorphisms(base, caps)?;
    let index: std::collections::HashMap<&Permutation, usize> =
        auts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let m = auts.len();
    let mut table = Vec::with_capacity(m * m);
    for p in &auts {
        for q in &auts {
            table.push(index[&p.compose(q)]);
        }
    }
    let aut_group = FiniteGroup::from_flat(m, table).expect("automorphisms form a group");
    let act = auts.iter().flat_map(|p| p.images().to_vec()).collect();
    Ok(Holomorph {
        product: SemidirectProduct::from_parts(base.clone(), aut_group, act),
        automorphisms: auts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;

    #[test]
    fn trivial_action_is_direct_product() {
        let n = FiniteGroup::cyclic(3);
        let h = FiniteGroup::symmetric(3);
        let act = GroupAction::new(&h, 3, |_, a| a).unwrap();
        let sd = semidirect_product(&n, &h, &act).unwrap().to_group();
        assert_eq!(sd, FiniteGroup::direct_product(&n, &h));
    }

    #[test]
    fn inverting_action_gives_s3() {
        let n = FiniteGroup::cyclic(3);
        let h = FiniteGroup::cyclic(2);
        let act = GroupAction::new(&h, 3, |b, a| if b == 0 { a } else { n.inv(a) }).unwrap();
        let sd = semidirect_product(&n, &h, &act).unwrap();
        let caps = Caps::default();
        assert!(
            are_isomorphic(&sd.to_group(), &FiniteGroup::symmetric(3), &caps)
                .unwrap()
                .is_some()
        );
        for x in 0..6 {
            assert_eq!(sd.mul(x, sd.inv(x)), 0);
            assert_eq!(sd.mul(sd.inv(x), x), 0);
        }
    }

    #[test]
    fn trivial_acting_group() {
        let n = FiniteGroup::dihedral(3);
        let h = FiniteGroup::cyclic(1);
        let act = GroupAction::new(&h, 6, |_, a| a).unwrap();
        assert_eq!(semidirect_product(&n, &h, &act).unwrap().to_group(), n);
    }

    #[test]
    fn rejects_non_automorphisms() {
        let n = FiniteGroup::cyclic(3);
        let h = FiniteGroup::cyclic(2);
        // swapping 0 and 1 is a permutation action but not by automorphisms
        let swap = [1, 0, 2];
        let act = GroupAction::new(&h, 3, |b, a| if b == 0 { a } else { swap[a] }).unwrap();
        assert!(matches!(
            semidirect_product(&n, &h, &act),
            Err(Error::NotAutomorphismAction { .. })
        ));
    }

    #[test]
    fn holomorph_orders() {
        let caps = Caps::default();
        let h2 = holomorph(&FiniteGroup::cyclic(2), &caps).unwrap();
        assert_eq!(h2.product().order(), 2);
        let h3 = holomorph(&FiniteGroup::cyclic(3), &caps).unwrap();
        assert_eq!(h3.product().order(), 6);
        let hv = holomorph(&FiniteGroup::elementary_abelian_2(2), &caps).unwrap();
        assert_eq!(hv.product().order(), 24);
        assert!(
            are_isomorphic(&hv.product().to_group(), &FiniteGroup::symmetric(4), &caps)
                .unwrap()
                .is_some()
        );
        let ev = hv.evaluation_action();
        assert_eq!(ev.orbits().len(), 1);
        assert_eq!(h3.automorphisms()[0], Permutation::identity(3));
    }
}
