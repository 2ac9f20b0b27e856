use super::{brace_isomorphism, SkewBrace};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{holomorph, FiniteGroup, GroupOps, Holomorph, Subgroup};

/// Subgroups `H ≤ Hol(A)` on which the projection to `A` is a bijection,
/// sorted by element list.
///
/// Depth-first: the least point of `A` not yet covered is paired with each
/// automorphism in turn and the generated subgroup is grown only while the
/// projection stays injective. A regular subgroup fixes the automorphism
/// paired with each point, so every one is reached exactly once.
pub fn regular_subgroups(hol: &Holomorph) -> Vec<Subgroup> {
    let mut out = Vec::new();
    let mut gens = Vec::new();
    let mut covered = vec![false; hol.base().order()];
    covered[0] = true;
    regular_dfs(hol, &mut gens, &covered, &mut out);
    out.sort();
    out
}

fn regular_dfs(hol: &Holomorph, gens: &mut Vec<usize>, covered: &[bool], out: &mut Vec<Subgroup>) {
    let p = hol.product();
    let Some(a) = covered.iter().position(|&c| !c) else {
        let h = bounded_closure(hol, gens).expect("accepted at the previous depth");
        let mut elems = h;
        elems.sort_unstable();
        out.push(Subgroup::from_sorted_unchecked(p.order(), elems));
        return;
    };
    for m in 0..hol.automorphisms().len() {
        gens.push(p.encode(a, m));
        if let Some(elems) = bounded_closure(hol, gens) {
            let mut cov = vec![false; covered.len()];
            for &x in &elems {
                cov[p.decode(x).0] = true;
            }
            regular_dfs(hol, gens, &cov, out);
        }
        gens.pop();
    }
}

/// The subgroup generated by `gens`, or `None` once two elements share a
/// first coordinate.
fn bounded_closure(hol: &Holomorph, gens: &[usize]) -> Option<Vec<usize>> {
    let p = hol.product();
    let mut owner = vec![usize::MAX; hol.base().order()];
    owner[0] = 0;
    let mut elems = vec![0];
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for &s in gens {
            let y = p.mul(x, s);
            let v = p.decode(y).0;
            if owner[v] == usize::MAX {
                owner[v] = y;
                elems.push(y);
            } else if owner[v] != y {
                return None;
            }
        }
        i += 1;
    }
    Some(elems)
}

/// The brace on `A` with `a · b = a ⋆ M_a(b)`, where `(a, M_a)` is the unique
/// element of `H` over `a`.
pub fn brace_from_regular_subgroup(hol: &Holomorph, h: &Subgroup) -> Result<SkewBrace> {
    let p = hol.product();
    let a = hol.base();
    let n = a.order();
    if h.parent_order() != p.order() {
        return Err(Error::NotRegular("subgroup of a different group".into()));
    }
    let mut aut_over = vec![usize::MAX; n];
    for &x in h.elements() {
        let (v, m) = p.decode(x);
        if aut_over[v] != usize::MAX {
            return Err(Error::NotRegular(format!("two elements lie over {v}")));
        }
        aut_over[v] = m;
    }
    if let Some(v) = aut_over.iter().position(|&m| m == usize::MAX) {
        return Err(Error::NotRegular(format!("no element lies over {v}")));
    }
    // equivalently, each point is sent to the identity by exactly one element
    for w in 0..n {
        let hits = h
            .elements()
            .iter()
            .filter(|&&x| hol.evaluate(x, w) == 0)
            .count();
        if hits != 1 {
            return Err(Error::NotRegular(format!(
                "{hits} elements send {w} to the identity"
            )));
        }
    }
    let auts = hol.automorphisms();
    let dot: Vec<usize> = (0..n * n)
        .map(|k| {
            let (x, y) = (k / n, k % n);
            a.mul(x, auts[aut_over[x]].apply(y))
        })
        .collect();
    let dot = FiniteGroup::from_flat(n, dot).map_err(|e| Error::DotInvalid(Box::new(e)))?;
    for x in 0..n {
        for y in 0..n {
            let hx = p.encode(x, aut_over[x]);
            let hy = p.encode(y, aut_over[y]);
            let xy = dot.mul(x, y);
            assert_eq!(p.mul(hx, hy), p.encode(xy, aut_over[xy]), "(B,·) ≅ H");
        }
    }
    SkewBrace::from_groups(a.clone(), dot)
}

/// `{(a, λ_a)}` for a brace whose star group is the holomorph's base.
pub fn regular_subgroup_of(hol: &Holomorph, b: &SkewBrace) -> Result<Subgroup> {
    if b.star() != hol.base() {
        return Err(Error::NotRegular("star group differs from the base".into()));
    }
    let p = hol.product();
    let mut elems: Vec<usize> = (0..b.order())
        .map(|a| {
            let m = hol
                .automorphisms()
                .binary_search(&b.lambda_perm(a))
                .expect("λ_a is an automorphism");
            p.encode(a, m)
        })
        .collect();
    elems.sort_unstable();
    Subgroup::new(p, elems)
}

/// How `enumerate_braces_on_with` merges regular subgroups into classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DedupeStrategy {
    BraceIsomorphism,
    AutConjugation,
}

/// Enumeration output: one brace per class, plus the class of each regular
/// subgroup (indexed like [`regular_subgroups`]).
#[derive(Clone, Debug)]
pub struct BraceEnumeration {
    pub braces: Vec<SkewBrace>,
    pub class_of: Vec<usize>,
}

/// Skew braces with star group `A` up to isomorphism, deduplicated both by
/// brace isomorphism and by `Aut(A)`-conjugacy; the two partitions are
/// asserted equal.
pub fn enumerate_braces_on(a: &FiniteGroup, caps: &Caps) -> Result<Vec<SkewBrace>> {
    let by_iso = enumerate_braces_on_with(a, caps, DedupeStrategy::BraceIsomorphism)?;
    let by_conj = enumerate_braces_on_with(a, caps, DedupeStrategy::AutConjugation)?;
    assert_eq!(by_iso.class_of, by_conj.class_of, "dedupe strategies agree");
    Ok(by_iso.braces)
}

pub fn enumerate_braces_on_with(
    a: &FiniteGroup,
    caps: &Caps,
    strategy: DedupeStrategy,
) -> Result<BraceEnumeration> {
    Caps::check(a.order(), caps.brace_enumeration)?;
    let hol = holomorph(a, caps)?;
    let subs = regular_subgroups(&hol);
    let braces: Vec<SkewBrace> = subs
        .iter()
        .map(|h| brace_from_regular_subgroup(&hol, h))
        .collect::<Result<_>>()?;
    let mut class_of = vec![usize::MAX; subs.len()];
    let mut reps: Vec<usize> = Vec::new();
    match strategy {
        DedupeStrategy::BraceIsomorphism => {
            for i in 0..subs.len() {
                let found = reps
                    .iter()
                    .position(|&r| brace_isomorphism(&braces[r], &braces[i]).is_some());
                class_of[i] = found.unwrap_or_else(|| {
                    reps.push(i);
                    reps.len() - 1
                });
            }
        }
        DedupeStrategy::AutConjugation => {
            let p = hol.product();
            let mut canon_index: std::collections::HashMap<Vec<usize>, usize> =
                std::collections::HashMap::new();
            for (i, h) in subs.iter().enumerate() {
                let canon = (0..hol.automorphisms().len())
                    .map(|m| {
                        let phi = p.encode(0, m);
                        let mut c: Vec<usize> =
                            h.elements().iter().map(|&x| p.conj(phi, x)).collect();
                        c.sort_unstable();
                        c
                    })
                    .min()
                    .expect("Aut(A) is non-empty");
                let next = reps.len();
                let k = *canon_index.entry(canon).or_insert_with(|| {
                    reps.push(i);
                    next
                });
                class_of[i] = k;
            }
        }
    }
    Ok(BraceEnumeration {
        braces: reps.into_iter().map(|r| braces[r].clone()).collect(),
        class_of,
    })
}
