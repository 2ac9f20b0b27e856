use std::collections::HashSet;

use super::{FiniteGroup, GroupOps};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// A subgroup, stored as the sorted list of its elements in the parent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
}

impl Subgroup {
    /// Caller guarantees `elements` is sorted and closed.
    pub(crate) fn from_sorted_unchecked(parent_order: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elements.first(), Some(&0));
        Subgroup {
            parent_order,
            elements,
        }
    }

    /// Validate that `elements` is a subgroup of `g`.
    pub fn new<G: GroupOps + ?Sized>(g: &G, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        if let Some(&x) = elements.iter().find(|&&x| x >= g.order()) {
            return Err(Error::NotASubgroup(format!("element {x} out of range")));
        }
        let h = Subgroup {
            parent_order: g.order(),
            elements,
        };
        for &a in &h.elements {
            for &b in &h.elements {
                let p = g.mul(a, b);
                if !h.contains(p) {
                    return Err(Error::NotASubgroup(format!(
                        "{a} * {b} = {p} is not in the subset"
                    )));
                }
            }
        }
        Ok(h)
    }

    pub fn trivial(parent_order: usize) -> Self {
        Subgroup {
            parent_order,
            elements: vec![0],
        }
    }

    pub fn whole(parent_order: usize) -> Self {
        Subgroup {
            parent_order,
            elements: (0..parent_order).collect(),
        }
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup::from_sorted_unchecked(self.parent_order, elements)
    }

    /// `x H x⁻¹`.
    pub fn conjugate<G: GroupOps + ?Sized>(&self, g: &G, x: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.elements.iter().map(|&h| g.conj(x, h)).collect();
        elements.sort_unstable();
        Subgroup::from_sorted_unchecked(self.parent_order, elements)
    }

    /// The subgroup as a standalone group; local index `k` is `elements()[k]`.
    pub fn to_group<G: GroupOps + ?Sized>(&self, g: &G) -> FiniteGroup {
        let m = self.elements.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &self.elements {
            for &b in &self.elements {
                let p = g.mul(a, b);
                table.push(self.elements.binary_search(&p).expect("closed"));
            }
        }
        FiniteGroup::from_flat(m, table).expect("subgroup tables are groups")
    }
}

/// The smallest subgroup containing `generators`.
pub fn subgroup_closure<G: GroupOps + ?Sized>(g: &G, generators: &[usize]) -> Subgroup {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut elems = vec![0];
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for &s in generators {
            let p = g.mul(x, s);
            if !seen[p] {
                seen[p] = true;
                elems.push(p);
            }
        }
        i += 1;
    }
    elems.sort_unstable();
    Subgroup::from_sorted_unchecked(g.order(), elems)
}

/// All subgroups of `g`, sorted by (order, elements).
pub fn all_subgroups<G: GroupOps + ?Sized>(g: &G, caps: &Caps) -> Result<Vec<Subgroup>> {
    subgroups_within(g, &Subgroup::whole(g.order()), caps)
}

/// All subgroups of `h ≤ g`, by cyclic extension: every subgroup is reached
/// from the trivial one by adjoining one element at a time.
pub fn subgroups_within<G: GroupOps + ?Sized>(
    g: &G,
    h: &Subgroup,
    caps: &Caps,
) -> Result<Vec<Subgroup>> {
    Caps::check(h.order(), caps.subgroups)?;
    let universe = h.elements();
    let mut found: HashSet<Vec<usize>> = HashSet::new();
    let trivial = Subgroup::trivial(g.order());
    found.insert(trivial.elements.clone());
    let mut queue = vec![(trivial, Vec::<usize>::new())];
    let mut out = Vec::new();
    let mut tried = vec![false; g.order()];
    while let Some((sub, gens)) = queue.pop() {
        tried.fill(false);
        for &x in universe {
            if tried[x] || sub.contains(x) {
                continue;
            }
            // <H, x> = <H, hx> for h in H
            for &k in sub.elements() {
                tried[g.mul(k, x)] = true;
            }
            let mut ext_gens = gens.clone();
            ext_gens.push(x);
            let ext = subgroup_closure(g, &ext_gens);
            if found.insert(ext.elements.clone()) {
                queue.push((ext, ext_gens));
            }
        }
        out.push(sub);
    }
    out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(out)
}

/// Left cosets `xH`, with the least element of each coset as representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpace {
    subgroup: Subgroup,
    reps: Vec<usize>,
    member_to_coset: Vec<usize>,
}

impl CosetSpace {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, k: usize) -> usize {
        self.reps[k]
    }

    #[inline]
    pub fn coset_of(&self, x: usize) -> usize {
        self.member_to_coset[x]
    }

    pub fn member_to_coset(&self) -> &[usize] {
        &self.member_to_coset
    }

    /// Position of the coset `x · rep_k · H`.
    #[inline]
    pub fn translate<G: GroupOps + ?Sized>(&self, g: &G, x: usize, k: usize) -> usize {
        self.member_to_coset[g.mul(x, self.reps[k])]
    }
}

pub fn left_cosets<G: GroupOps + ?Sized>(g: &G, h: &Subgroup) -> CosetSpace {
    let n = g.order();
    let mut member_to_coset = vec![usize::MAX; n];
    let mut reps = Vec::with_capacity(n / h.order());
    for x in 0..n {
        if member_to_coset[x] != usize::MAX {
            continue;
        }
        let k = reps.len();
        reps.push(x);
        for &y in h.elements() {
            member_to_coset[g.mul(x, y)] = k;
        }
    }
    debug_assert_eq!(reps.len() * h.order(), n);
    CosetSpace {
        subgroup: h.clone(),
        reps,
        member_to_coset,
    }
}

/// `core_G(H)`, the intersection of all conjugates of `H`.
pub fn core<G: GroupOps + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let cosets = left_cosets(g, h);
    let mut acc = h.clone();
    for &x in cosets.reps() {
        if acc.is_trivial() {
            break;
        }
        acc = acc.intersection(&h.conjugate(g, x));
    }
    assert!(is_normal(g, &acc), "core must be normal");
    acc
}

pub fn is_normal<G: GroupOps + ?Sized>(g: &G, h: &Subgroup) -> bool {
    (0..g.order()).all(|x| h.elements().iter().all(|&y| h.contains(g.conj(x, y))))
}
