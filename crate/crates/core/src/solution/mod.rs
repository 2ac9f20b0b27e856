//! Set-theoretic solutions `r(x, y) = (f_x(y), g_y(x))` of the Yang-Baxter
//! equation on `X = {0..n-1}`.

mod iso;
mod perm_brace;
mod rack;

pub use iso::{is_morphism, solution_isomorphism};
pub use perm_brace::{permutation_brace, PermBraceResult};
pub use rack::{is_birack, is_quandle, is_rack, rack_failure, RackFailure, RackTable};

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Tables are stored flat: `f[x·n + y] = f_x(y)` and `g[y·n + x] = g_y(x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    size: usize,
    f: Vec<usize>,
    g: Vec<usize>,
}

impl std::fmt::Debug for Solution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Solution(size {})", self.size)
    }
}

/// Outcome of [`verify_ybe`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YbeReport {
    /// First `(x, y, z)` failing one of the component equations.
    pub counterexample: Option<(usize, usize, usize)>,
    /// Which component equation (1, 2 or 3) fails there.
    pub equation: Option<u8>,
}

impl YbeReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn validate_rows(rows: &[Vec<usize>], n: usize) -> Result<Vec<usize>> {
    if rows.len() != n {
        return Err(Error::SizeMismatch(rows.len(), n));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: r,
                len: row.len(),
                expected: n,
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::OutOfRange {
                    row: r,
                    col: c,
                    value: v,
                    order: n,
                });
            }
        }
        flat.extend_from_slice(row);
    }
    Ok(flat)
}

/// First pair colliding under `r`, if `r` is not a bijection of `X × X`.
pub fn bijectivity_failure(n: usize, f: &[usize], g: &[usize]) -> Option<(usize, usize)> {
    let mut seen = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let k = f[x * n + y] * n + g[y * n + x];
            if seen[k] {
                return Some((x, y));
            }
            seen[k] = true;
        }
    }
    None
}

/// First triple failing a component equation of the braid relation:
///
/// 1. `f_{f_x(y)} f_{g_y(x)}(z) = f_x f_y(z)`
/// 2. `g_{f_{g_y(x)}(z)}(f_x(y)) = f_{g_{f_y(z)}(x)}(g_z(y))`
/// 3. `g_z g_y(x) = g_{g_z(y)} g_{f_y(z)}(x)`
pub fn ybe_component_failure(
    n: usize,
    f: &[usize],
    g: &[usize],
) -> Option<((usize, usize, usize), u8)> {
    let fx = |x: usize, y: usize| f[x * n + y];
    let gy = |y: usize, x: usize| g[y * n + x];
    for x in 0..n {
        for y in 0..n {
            let a = fx(x, y);
            let b = gy(y, x);
            for z in 0..n {
                let fyz = fx(y, z);
                if fx(a, fx(b, z)) != fx(x, fyz) {
                    return Some(((x, y, z), 1));
                }
                let gzy = gy(z, y);
                if gy(fx(b, z), a) != fx(gy(fyz, x), gzy) {
                    return Some(((x, y, z), 2));
                }
                if gy(z, b) != gy(gzy, gy(fyz, x)) {
                    return Some(((x, y, z), 3));
                }
            }
        }
    }
    None
}

/// First triple where `r₁r₂r₁ ≠ r₂r₁r₂`, composing the maps directly.
pub fn ybe_composition_failure(
    n: usize,
    f: &[usize],
    g: &[usize],
) -> Option<(usize, usize, usize)> {
    let r = |x: usize, y: usize| (f[x * n + y], g[y * n + x]);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // r1 r2 r1
                let (a, b) = r(x, y);
                let (c, d) = r(b, z);
                let (e, h) = r(a, c);
                let left = (e, h, d);
                // r2 r1 r2
                let (p, q) = r(y, z);
                let (s, t) = r(x, p);
                let (u, v) = r(t, q);
                let right = (s, u, v);
                if left != right {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Component equations, cross-checked against direct composition.
pub fn verify_ybe(n: usize, f: &[usize], g: &[usize]) -> YbeReport {
    let comp = ybe_component_failure(n, f, g);
    let direct = ybe_composition_failure(n, f, g);
    assert_eq!(
        comp.is_none(),
        direct.is_none(),
        "component equations and direct composition disagree"
    );
    YbeReport {
        counterexample: comp.map(|c| c.0),
        equation: comp.map(|c| c.1),
    }
}

fn row_is_perm(row: &[usize]) -> bool {
    let mut seen = vec![false; row.len()];
    row.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

fn invert_rows(n: usize, t: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            inv[x * n + t[x * n + y]] = y;
        }
    }
    inv
}

impl Solution {
    /// Validate tables given as `f[x][y] = f_x(y)` and `g[y][x] = g_y(x)`.
    pub fn new(f: &[Vec<usize>], g: &[Vec<usize>]) -> Result<Self> {
        let n = f.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let f = validate_rows(f, n)?;
        let g = validate_rows(g, n)?;
        Self::from_flat(n, f, g)
    }

    pub fn from_flat(n: usize, f: Vec<usize>, g: Vec<usize>) -> Result<Self> {
        assert_eq!(f.len(), n * n);
        assert_eq!(g.len(), n * n);
        if let Some((x, y)) = bijectivity_failure(n, &f, &g) {
            return Err(Error::NotBijective { x, y });
        }
        if let Some(((x, y, z), _)) = ybe_component_failure(n, &f, &g) {
            return Err(Error::YbeFails { x, y, z });
        }
        Ok(Solution { size: n, f, g })
    }

    /// From `r(x, y) = (f(x, y), g(y, x))`.
    pub fn from_fn(
        n: usize,
        f: impl Fn(usize, usize) -> usize,
        g: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let ft = (0..n * n).map(|k| f(k / n, k % n)).collect();
        let gt = (0..n * n).map(|k| g(k / n, k % n)).collect();
        Self::from_flat(n, ft, gt)
    }

    /// `r(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |_, y| y, |_, x| x).expect("the flip is a solution")
    }

    /// `r(x, y) = (x, y)`.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |x, _| x, |y, _| y).expect("the identity is a solution")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn f(&self, x: usize, y: usize) -> usize {
        self.f[x * self.size + y]
    }

    #[inline]
    pub fn g(&self, y: usize, x: usize) -> usize {
        self.g[y * self.size + x]
    }

    pub fn f_flat(&self) -> &[usize] {
        &self.f
    }

    pub fn g_flat(&self) -> &[usize] {
        &self.g
    }

    pub fn f_rows(&self) -> Vec<Vec<usize>> {
        self.f.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn g_rows(&self) -> Vec<Vec<usize>> {
        self.g.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn f_row(&self, x: usize) -> &[usize] {
        &self.f[x * self.size..(x + 1) * self.size]
    }

    pub fn g_row(&self, y: usize) -> &[usize] {
        &self.g[y * self.size..(y + 1) * self.size]
    }

    /// `f_x` as a permutation; `None` if it is not bijective.
    pub fn f_perm(&self, x: usize) -> Option<Permutation> {
        Permutation::from_images(self.f_row(x).to_vec()).ok()
    }

    pub fn g_perm(&self, y: usize) -> Option<Permutation> {
        Permutation::from_images(self.g_row(y).to_vec()).ok()
    }

    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.f(x, y), self.g(y, x))
    }

    pub fn verify_ybe(&self) -> YbeReport {
        verify_ybe(self.size, &self.f, &self.g)
    }

    /// Every `f_x` and `g_y` is bijective.
    pub fn is_nondegenerate(&self) -> bool {
        (0..self.size).all(|x| row_is_perm(self.f_row(x)) && row_is_perm(self.g_row(x)))
    }

    /// `r² = id`, i.e. `f_{f_x(y)}(g_y(x)) = x` and `g_{g_y(x)}(f_x(y)) = y`.
    pub fn is_involutive(&self) -> bool {
        (0..self.size).all(|x| {
            (0..self.size).all(|y| {
                let (a, b) = self.r(x, y);
                self.r(a, b) == (x, y)
            })
        })
    }

    /// `r(x, x) = (x, x)`.
    pub fn is_square_free(&self) -> bool {
        (0..self.size).all(|x| self.r(x, x) == (x, x))
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::NondegenerateRequired)
        }
    }

    /// Flat table of `f_x⁻¹`.
    pub(crate) fn f_inverse_table(&self) -> Vec<usize> {
        invert_rows(self.size, &self.f)
    }

    /// `g̃_x(y) = g_{f_y⁻¹(x)}(y)`.
    pub fn gtilde(&self, x: usize) -> Result<Permutation> {
        self.require_nondegenerate()?;
        let finv = self.f_inverse_table();
        Ok(self.gtilde_with(&finv, x))
    }

    pub(crate) fn gtilde_with(&self, finv: &[usize], x: usize) -> Permutation {
        let n = self.size;
        let images = (0..n).map(|y| self.g(finv[y * n + x], y)).collect();
        Permutation::from_images(images).expect("g̃_x is bijective for non-degenerate solutions")
    }

    fn require_involutive(&self) -> Result<()> {
        if self.is_involutive() && self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::InvolutiveRequired)
        }
    }

    /// Classes of `x ~ y ⟺ f_x = f_y`, numbered by least member.
    fn f_classes(&self) -> Vec<usize> {
        let n = self.size;
        let mut class_of = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            for (y, c) in class_of.iter_mut().enumerate().skip(x) {
                if *c == usize::MAX && self.f_row(y) == self.f_row(x) {
                    *c = next;
                }
            }
            next += 1;
        }
        class_of
    }

    /// The induced solution on `f`-classes, plus the class of each point.
    pub fn retraction(&self) -> Result<(Solution, Vec<usize>)> {
        self.require_involutive()?;
        let n = self.size;
        let class_of = self.f_classes();
        let m = class_of.iter().max().map_or(0, |&c| c + 1);
        let mut rep = vec![usize::MAX; m];
        for x in (0..n).rev() {
            rep[class_of[x]] = x;
        }
        let ret = Solution::from_fn(
            m,
            |a, b| class_of[self.f(rep[a], rep[b])],
            |b, a| class_of[self.g(rep[b], rep[a])],
        )
        .expect("retractions of involutive solutions are solutions");
        Ok((ret, class_of))
    }

    pub fn is_irretractable(&self) -> Result<bool> {
        self.require_involutive()?;
        Ok(self.f_classes().iter().enumerate().all(|(x, &c)| x == c))
    }

    /// `y ∘ x = f_y g_{f_x⁻¹(y)}(x)`.
    pub fn derived_rack(&self) -> Result<RackTable> {
        self.require_nondegenerate()?;
        let n = self.size;
        let finv = self.f_inverse_table();
        let circ = (0..n * n)
            .map(|k| {
                let (y, x) = (k / n, k % n);
                self.f(y, self.g(finv[x * n + y], x))
            })
            .collect();
        let rack = RackTable::from_flat(n, circ);
        assert!(rack.is_rack(), "derived racks are racks");
        Ok(rack)
    }

    /// `r(x, y) = (y, y ∘ x)`.
    pub fn from_rack(rack: &RackTable) -> Result<Self> {
        Self::from_fn(rack.size(), |_, y| y, |y, x| rack.op(y, x))
    }

    /// `r(a, b) = (λ_a(b), λ⁻¹_{λ_a(b)}(a))` on a left brace.
    pub fn associated(b: &SkewBrace) -> Result<Self> {
        if !b.is_left_brace() {
            return Err(Error::NotALeftBrace);
        }
        let s = Self::from_fn(
            b.order(),
            |x, y| b.lambda(x, y),
            |y, x| b.lambda_inv(b.lambda(x, y), x),
        )
        .expect("associated solutions satisfy the braid relation");
        Ok(s)
    }

    /// `r(a, b) = (λ_a(b), γ_b(a))`, so that `a·b = λ_a(b)·γ_b(a)`.
    pub fn skew_associated(b: &SkewBrace) -> Self {
        Self::from_fn(b.order(), |x, y| b.lambda(x, y), |y, x| b.gamma(y, x))
            .expect("skew associated solutions satisfy the braid relation")
    }
}
