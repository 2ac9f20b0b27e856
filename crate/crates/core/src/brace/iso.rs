use super::SkewBrace;
use crate::group::{IsoSearch, UNMAPPED};
use crate::perm::Permutation;

/// Per element: `⋆`-order and class size, `λ_a` fixed points and order, and
/// whether `λ_a(a) = a`.
fn brace_signatures(b: &SkewBrace) -> Vec<Vec<usize>> {
    let star_sig = crate::group::group_signatures(b.star());
    (0..b.order())
        .map(|a| {
            let lam = b.lambda_perm(a);
            let fixed = (0..b.order()).filter(|&x| lam.apply(x) == x).count();
            let lam_order = perm_order(&lam);
            let mut s = star_sig[a].clone();
            s.extend([fixed, lam_order, usize::from(b.lambda(a, a) == a)]);
            s
        })
        .collect()
}

fn perm_order(p: &Permutation) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    p.cycle_type()
        .into_iter()
        .fold(1, |acc, l| acc / gcd(acc, l) * l)
}

fn search<'a>(b1: &'a SkewBrace, b2: &'a SkewBrace) -> IsoSearch<'a> {
    let star_ok = move |map: &[usize]| -> bool {
        let n = b1.order();
        let mapped: Vec<usize> = (0..n).filter(|&x| map[x] != UNMAPPED).collect();
        mapped.iter().all(|&x| {
            mapped.iter().all(|&y| {
                let p = map[b1.star_mul(x, y)];
                p == UNMAPPED || p == b2.star_mul(map[x], map[y])
            })
        })
    };
    IsoSearch::new(b1.dot(), b2.dot())
        .refine(brace_signatures(b1), brace_signatures(b2))
        .with_partial_check(star_ok)
}

/// A bijection preserving both operations, if one exists.
pub fn brace_isomorphism(b1: &SkewBrace, b2: &SkewBrace) -> Option<Permutation> {
    if b1.order() != b2.order() {
        return None;
    }
    let iso = search(b1, b2).first()?;
    debug_assert!(is_brace_morphism(b1, b2, &iso));
    Some(iso)
}

/// Every brace automorphism, sorted lexicographically.
pub fn brace_automorphisms(b: &SkewBrace) -> Vec<Permutation> {
    search(b, b).all()
}

pub(crate) fn is_brace_morphism(b1: &SkewBrace, b2: &SkewBrace, p: &Permutation) -> bool {
    let n = b1.order();
    (0..n).all(|x| {
        (0..n).all(|y| {
            p.apply(b1.star_mul(x, y)) == b2.star_mul(p.apply(x), p.apply(y))
                && p.apply(b1.dot_mul(x, y)) == b2.dot_mul(p.apply(x), p.apply(y))
        })
    })
}
