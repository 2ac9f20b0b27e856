use super::SkewBrace;
use crate::group::{FiniteGroup, GroupOps};

impl SkewBrace {
    /// `⋆ = ·`.
    pub fn trivial(g: &FiniteGroup) -> SkewBrace {
        SkewBrace::from_groups(g.clone(), g.clone()).expect("trivial braces are braces")
    }

    /// `g ⋆ h = h · g` with `·` the group law.
    pub fn opposite(g: &FiniteGroup) -> SkewBrace {
        let n = g.order();
        let star = (0..n * n).map(|k| g.mul(k % n, k / n)).collect();
        let star = FiniteGroup::from_flat(n, star).expect("opposite group");
        SkewBrace::from_groups(star, g.clone()).expect("opposite braces are braces")
    }

    /// Order `2n`: `·` is `Z/(2n)` on exponents `a` of a generator, and
    /// `a ⋆ b = (-1)^b a + b`.
    pub fn cyclic_flip(n: usize) -> SkewBrace {
        assert!(n >= 1);
        let m = 2 * n;
        let star = (0..m * m)
            .map(|k| {
                let (a, b) = (k / m, k % m);
                let signed = if b % 2 == 0 { a } else { (m - a) % m };
                (signed + b) % m
            })
            .collect();
        let star = FiniteGroup::from_flat(m, star).expect("star group");
        SkewBrace::from_groups(star, FiniteGroup::cyclic(m)).expect("cyclic flip brace")
    }

    /// Order 21. The element `σ^a ⋆ τ^b` (a mod 7, b mod 3) is coded `3a + b`,
    /// with `(σ^a τ^b) ⋆ (σ^i τ^j) = σ^{a + 2^b i} τ^{b+j}` and
    /// `(σ^a τ^b) · (σ^i τ^j) = σ^{a + 4^b i} τ^{b+j}`.
    pub fn order21() -> SkewBrace {
        let table = |base: usize| -> Vec<usize> {
            let mut t = Vec::with_capacity(21 * 21);
            for x in 0..21 {
                for y in 0..21 {
                    let (a, b) = (x / 3, x % 3);
                    let (i, j) = (y / 3, y % 3);
                    let s = (a + base.pow(b as u32) * i) % 7;
                    t.push(3 * s + (b + j) % 3);
                }
            }
            t
        };
        let star = FiniteGroup::from_flat(21, table(2)).expect("star group");
        let dot = FiniteGroup::from_flat(21, table(4)).expect("dot group");
        SkewBrace::from_groups(star, dot).expect("order 21 brace")
    }

    /// A left brace on `(Z/2)^6`, element `(y_1..y_6)` coded `Σ y_k 2^{k-1}`,
    /// with `λ_y(z) = M(y) z` for the upper unitriangular matrix
    ///
    /// ```text
    /// 1 y3 p 0 0  0
    /// 0 1  q 0 0  0
    /// 0 0  1 0 0  0
    /// 0 0  0 1 y6 y5 + y6 c
    /// 0 0  0 0 1  c
    /// 0 0  0 0 0  1
    /// ```
    ///
    /// where `c = y1 + y2 + y2 y3`, `q = y4 + y5 + y5 y6`, `p = y2 + y3 q`,
    /// and `a · b = a + λ_a(b)`. Its socle is trivial and `(B,·) ≅ D4 × D4`.
    pub fn vendramin() -> SkewBrace {
        let star = FiniteGroup::elementary_abelian_2(6);
        let mut dot = Vec::with_capacity(64 * 64);
        for a in 0..64 {
            for b in 0..64 {
                dot.push(a ^ vendramin_lambda(a, b));
            }
        }
        let dot = FiniteGroup::from_flat(64, dot).expect("dot group");
        SkewBrace::from_groups(star, dot).expect("vendramin brace")
    }
}

fn vendramin_lambda(y: usize, z: usize) -> usize {
    let bit = |v: usize, k: usize| (v >> (k - 1)) & 1;
    let [y1, y2, y3, y4, y5, y6] = [1, 2, 3, 4, 5, 6].map(|k| bit(y, k));
    let c = (y1 + y2 + y2 * y3) % 2;
    let q = (y4 + y5 + y5 * y6) % 2;
    let p = (y2 + y3 * q) % 2;
    let rows: [[usize; 6]; 6] = [
        [1, y3, p, 0, 0, 0],
        [0, 1, q, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, y6, (y5 + y6 * c) % 2],
        [0, 0, 0, 0, 1, c],
        [0, 0, 0, 0, 0, 1],
    ];
    let mut out = 0;
    for (r, row) in rows.iter().enumerate() {
        let s: usize = (0..6).map(|k| row[k] * bit(z, k + 1)).sum();
        out |= (s % 2) << r;
    }
    out
}
