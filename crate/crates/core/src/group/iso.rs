use super::{generating_set, GroupOps};
use crate::caps::Caps;
use crate::error::Result;
use crate::perm::Permutation;

type PartialCheck<'a> = Box<dyn Fn(&[usize]) -> bool + Sync + 'a>;

/// Backtracking search for isomorphisms `src → dst`.
///
/// Generator images are chosen among target elements with the same signature;
/// after each choice the map is propagated breadth-first over the generated
/// subgroup, rejecting clashes, non-injectivity and signature mismatches.
pub struct IsoSearch<'a> {
    src: &'a (dyn GroupOps + Sync),
    dst: &'a (dyn GroupOps + Sync),
    src_sig: Vec<Vec<usize>>,
    dst_sig: Vec<Vec<usize>>,
    partial: Option<PartialCheck<'a>>,
}

/// Unmapped entries of a partial map.
pub const UNMAPPED: usize = usize::MAX;

impl<'a> IsoSearch<'a> {
    /// Signatures default to (element order, conjugacy class size).
    pub fn new(src: &'a (dyn GroupOps + Sync), dst: &'a (dyn GroupOps + Sync)) -> Self {
        IsoSearch {
            src,
            dst,
            src_sig: group_signatures(src),
            dst_sig: group_signatures(dst),
            partial: None,
        }
    }

    /// Append extra per-element invariants to the signatures.
    pub fn refine(mut self, src_extra: Vec<Vec<usize>>, dst_extra: Vec<Vec<usize>>) -> Self {
        for (s, e) in self.src_sig.iter_mut().zip(src_extra) {
            s.extend(e);
        }
        for (s, e) in self.dst_sig.iter_mut().zip(dst_extra) {
            s.extend(e);
        }
        self
    }

    /// Extra predicate on partial maps (entries [`UNMAPPED`] where undefined).
    pub fn with_partial_check(mut self, check: impl Fn(&[usize]) -> bool + Sync + 'a) -> Self {
        self.partial = Some(Box::new(check));
        self
    }

    /// Whether the signature multisets agree; a necessary condition.
    pub fn profiles_match(&self) -> bool {
        if self.src.order() != self.dst.order() {
            return false;
        }
        let mut a = self.src_sig.clone();
        let mut b = self.dst_sig.clone();
        a.sort();
        b.sort();
        a == b
    }

    pub fn first(&self) -> Option<Permutation> {
        let mut out = Vec::new();
        self.run(&mut out, true);
        out.pop()
    }

    /// Every isomorphism, sorted lexicographically by image vector.
    pub fn all(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        self.run(&mut out, false);
        out.sort();
        out
    }

    fn run(&self, out: &mut Vec<Permutation>, stop_at_first: bool) {
        if !self.profiles_match() {
            return;
        }
        let n = self.src.order();
        let mut gens = generating_set(self.src);
        // trying t = s first makes the identity the first hit on equal inputs
        let candidates_for = |s: usize| -> Vec<usize> {
            let mut c: Vec<usize> = (0..n)
                .filter(|&t| self.dst_sig[t] == self.src_sig[s])
                .collect();
            c.sort_by_key(|&t| (t != s, t));
            c
        };
        gens.sort_by_key(|&s| (candidates_for(s).len(), s));
        let cands: Vec<Vec<usize>> = gens.iter().map(|&s| candidates_for(s)).collect();
        let mut images = vec![UNMAPPED; gens.len()];
        self.dfs(0, &gens, &cands, &mut images, out, stop_at_first);
    }

    fn dfs(
        &self,
        depth: usize,
        gens: &[usize],
        cands: &[Vec<usize>],
        images: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
        stop_at_first: bool,
    ) -> bool {
        let n = self.src.order();
        if depth == gens.len() {
            let map = self
                .propagate(gens, images, depth)
                .expect("checked at the previous depth");
            debug_assert!(map.iter().all(|&m| m != UNMAPPED));
            out.push(Permutation::from_images_unchecked(map));
            return stop_at_first;
        }
        if n == 1 {
            return self.dfs(depth + 1, gens, cands, images, out, stop_at_first);
        }
        for &t in &cands[depth] {
            images[depth] = t;
            let Some(map) = self.propagate(gens, images, depth + 1) else {
                continue;
            };
            if let Some(check) = &self.partial {
                if !check(&map) {
                    continue;
                }
            }
            if self.dfs(depth + 1, gens, cands, images, out, stop_at_first) {
                return true;
            }
        }
        images[depth] = UNMAPPED;
        false
    }

    /// Extend `gens[..k] ↦ images[..k]` to the subgroup they generate.
    fn propagate(&self, gens: &[usize], images: &[usize], k: usize) -> Option<Vec<usize>> {
        let n = self.src.order();
        let mut map = vec![UNMAPPED; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;
        let mut list = vec![0];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for (&s, &t) in gens[..k].iter().zip(&images[..k]) {
                let y = self.src.mul(x, s);
                let im = self.dst.mul(map[x], t);
                if map[y] == UNMAPPED {
                    if used[im] || self.src_sig[y] != self.dst_sig[im] {
                        return None;
                    }
                    map[y] = im;
                    used[im] = true;
                    list.push(y);
                } else if map[y] != im {
                    return None;
                }
            }
            i += 1;
        }
        Some(map)
    }
}

/// Per element: (order, conjugacy class size). The multiset of these covers
/// the order profile, the class-size profile and the center size.
pub fn group_signatures<G: GroupOps + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut class_size = vec![0; n];
    let mut done = vec![false; n];
    let mut members = Vec::new();
    for a in 0..n {
        if done[a] {
            continue;
        }
        members.clear();
        for x in 0..n {
            let c = g.conj(x, a);
            if !done[c] {
                done[c] = true;
                members.push(c);
            }
        }
        for &c in &members {
            class_size[c] = members.len();
        }
    }
    (0..n)
        .map(|a| vec![g.element_order(a), class_size[a]])
        .collect()
}

/// All automorphisms, sorted lexicographically (identity first).
pub fn automorphisms<G: GroupOps + Sync>(g: &G, caps: &Caps) -> Result<Vec<Permutation>> {
    Caps::check(g.order(), caps.automorphisms)?;
    Ok(IsoSearch::new(g, g).all())
}

/// One isomorphism `g1 → g2`, if any.
pub fn are_isomorphic<G1, G2>(g1: &G1, g2: &G2, caps: &Caps) -> Result<Option<Permutation>>
where
    G1: GroupOps + Sync,
    G2: GroupOps + Sync,
{
    Caps::check(g1.order(), caps.isomorphism)?;
    Caps::check(g2.order(), caps.isomorphism)?;
    if g1.order() != g2.order() {
        return Ok(None);
    }
    Ok(IsoSearch::new(g1, g2).first())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{all_permutations, FiniteGroup};

    fn is_hom(g: &FiniteGroup, h: &FiniteGroup, p: &Permutation) -> bool {
        (0..g.order())
            .all(|a| (0..g.order()).all(|b| p.apply(g.mul(a, b)) == h.mul(p.apply(a), p.apply(b))))
    }

    #[test]
    fn aut_z2_is_trivial() {
        let auts = automorphisms(&FiniteGroup::cyclic(2), &Caps::default()).unwrap();
        assert_eq!(auts, vec![Permutation::identity(2)]);
    }

    #[test]
    fn aut_klein_matches_bijection_scan() {
        let v = FiniteGroup::elementary_abelian_2(2);
        let auts = automorphisms(&v, &Caps::default()).unwrap();
        let oracle: Vec<Permutation> = all_permutations(4)
            .into_iter()
            .filter(|p| p.apply(0) == 0 && is_hom(&v, &v, p))
            .collect();
        assert_eq!(oracle.len(), 6);
        assert_eq!(auts, oracle);
    }

    #[test]
    fn aut_counts() {
        let caps = Caps::default();
        let count = |g: FiniteGroup| automorphisms(&g, &caps).unwrap().len();
        assert_eq!(count(FiniteGroup::symmetric(3)), 6);
        assert_eq!(count(FiniteGroup::cyclic(8)), 4);
        assert_eq!(count(FiniteGroup::elementary_abelian_2(3)), 168);
        assert_eq!(count(FiniteGroup::dihedral(4)), 8);
        assert_eq!(count(FiniteGroup::quaternion()), 24);
        for p in automorphisms(&FiniteGroup::dihedral(4), &caps).unwrap() {
            assert!(is_hom(
                &FiniteGroup::dihedral(4),
                &FiniteGroup::dihedral(4),
                &p
            ));
        }
    }

    #[test]
    fn isomorphism_tests() {
        let caps = Caps::default();
        let z4 = FiniteGroup::cyclic(4);
        let v = FiniteGroup::elementary_abelian_2(2);
        assert!(are_isomorphic(&z4, &v, &caps).unwrap().is_none());
        let z2 = FiniteGroup::cyclic(2);
        let z6 = FiniteGroup::cyclic(6);
        let z2z3 = FiniteGroup::direct_product(&z2, &FiniteGroup::cyclic(3));
        let p = are_isomorphic(&z2z3, &z6, &caps).unwrap().unwrap();
        assert!(is_hom(&z2z3, &z6, &p));
        let d4 = FiniteGroup::dihedral(4);
        let q8 = FiniteGroup::quaternion();
        assert!(are_isomorphic(&d4, &q8, &caps).unwrap().is_none());
        let s3 = FiniteGroup::symmetric(3);
        let d3 = FiniteGroup::dihedral(3);
        assert!(are_isomorphic(&s3, &d3, &caps).unwrap().is_some());
    }
}
