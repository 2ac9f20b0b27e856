use std::collections::HashMap;

use super::Solution;
use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupOps};
use crate::perm::Permutation;

/// The permutation brace of a non-degenerate solution, generated by the pairs
/// `π_x = (f_x, g̃_x⁻¹)` in `Sym(X) × Sym(X)`.
#[derive(Clone, Debug)]
pub struct PermBraceResult {
    pub brace: SkewBrace,
    /// Brace element of `π_x`.
    pub gen_of: Vec<usize>,
    /// The pair of permutations behind each brace element.
    pub pair_of: Vec<(Permutation, Permutation)>,
}

/// A pair packed as the images of both components, for hashing.
type Packed = Vec<usize>;

fn pack(p: &Permutation, q: &Permutation) -> Packed {
    let mut v = p.images().to_vec();
    v.extend_from_slice(q.images());
    v
}

fn compose_packed(n: usize, a: &Packed, b: &Packed) -> Packed {
    let mut out = Vec::with_capacity(2 * n);
    out.extend(b[..n].iter().map(|&j| a[j]));
    out.extend(b[n..].iter().map(|&j| a[n + j]));
    out
}

/// Build `(B,·)` as the closure of the generator pairs, then `(B,⋆)` from
/// `m ⋆ π_y = m ∘ π_{f_m⁻¹(y)}` (with `f_m` the first component of `m`),
/// extended to all of `B` along left-normed `⋆`-words found breadth-first.
pub fn permutation_brace(s: &Solution) -> Result<PermBraceResult> {
    if !s.is_nondegenerate() {
        return Err(Error::NondegenerateRequired);
    }
    let n = s.size();
    let finv = s.f_inverse_table();
    let gens: Vec<Packed> = (0..n)
        .map(|x| {
            let f = s.f_perm(x).expect("non-degenerate");
            let gt = s.gtilde_with(&finv, x).inverse();
            pack(&f, &gt)
        })
        .collect();
    let identity: Packed = (0..n).chain(0..n).collect();
    let (dot, elems) = FiniteGroup::from_closure(identity, &gens, |a, b| compose_packed(n, a, b));
    let index: HashMap<&Packed, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let m = elems.len();
    let gen_idx: Vec<usize> = gens.iter().map(|p| index[p]).collect();
    // f-component inverses, per element
    let f_inv: Vec<Vec<usize>> = elems
        .iter()
        .map(|e| {
            let mut inv = vec![0; n];
            for (i, &j) in e[..n].iter().enumerate() {
                inv[j] = i;
            }
            inv
        })
        .collect();
    let step = |u: usize, y: usize| -> usize { dot.mul(u, gen_idx[f_inv[u][y]]) };

    // left-normed ⋆-words from the identity
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut reached = vec![false; m];
    reached[0] = true;
    let mut order = vec![0];
    let mut i = 0;
    while i < order.len() {
        let w = order[i];
        for y in 0..n {
            let c = step(w, y);
            if !reached[c] {
                reached[c] = true;
                parent[c] = Some((w, y));
                order.push(c);
            }
        }
        i += 1;
    }
    assert_eq!(
        order.len(),
        m,
        "the ⋆-closure equals the multiplicative closure"
    );

    let mut star = vec![usize::MAX; m * m];
    for u in 0..m {
        for &w in &order {
            star[u * m + w] = match parent[w] {
                None => u,
                Some((p, y)) => step(star[u * m + p], y),
            };
        }
    }
    let star = FiniteGroup::from_flat(m, star).map_err(|e| Error::StarInvalid(Box::new(e)))?;
    let brace = SkewBrace::from_groups(star, dot)?;
    let pair_of = elems
        .iter()
        .map(|e| {
            (
                Permutation::from_images_unchecked(e[..n].to_vec()),
                Permutation::from_images_unchecked(e[n..].to_vec()),
            )
        })
        .collect();
    Ok(PermBraceResult {
        brace,
        gen_of: gen_idx,
        pair_of,
    })
}
