//! Exhaustive search for a category with a given count matrix.
//!
//! Arrows within one hom-set are interchangeable, so the identity of each
//! object is taken to be the first arrow of its diagonal hom-set without
//! losing generality. Composites with an identity factor are then forced,
//! and the remaining cells of the composition table are filled in row-major
//! order, rejecting any partial table that already breaks associativity.

use super::build::Layout;
use super::{CatPresentation, CountMatrix};

/// Default cap on the total number of arrows the search will attempt.
pub const DEFAULT_BUDGET: u64 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A category with this matrix, as a witness.
    Yes(CatPresentation),
    No(NoReason),
    /// The matrix has more arrows than the budget allows searching.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoReason {
    NotReflexive { index: usize },
    NotTransitive { i: usize, j: usize, k: usize },
    /// Every composition table was refuted.
    Exhausted,
}

/// Decides whether `z` is the count matrix of a category, searching only
/// when `z` has at most `budget` arrows in total.
pub fn is_category_matrix(z: &CountMatrix, budget: u64) -> Verdict {
    let m = z.dim();
    if let Some(index) = (0..m).find(|&i| z.get(i, i) == 0) {
        return Verdict::No(NoReason::NotReflexive { index });
    }
    if let Some((i, j, k)) = z.transitivity_failure() {
        return Verdict::No(NoReason::NotTransitive { i, j, k });
    }
    if z.total() > budget {
        return Verdict::Inconclusive;
    }

    let layout = Layout::new(z);
    let n = layout.names.len();
    let mut comp = vec![None; n * n];
    let mut cells = Vec::new();
    for g in 0..n {
        for f in (0..n).filter(|&f| layout.tgt[f] == layout.src[g]) {
            if layout.is_identity(f) {
                comp[g * n + f] = Some(g);
            } else if layout.is_identity(g) {
                comp[g * n + f] = Some(f);
            } else {
                cells.push((g, f));
            }
        }
    }

    let mut search = Search { layout: &layout, n, m, comp, cells: &cells };
    if search.fill(0) {
        let comp = search.comp;
        Verdict::Yes(layout.into_category(comp).to_presentation())
    } else {
        Verdict::No(NoReason::Exhausted)
    }
}

struct Search<'a> {
    layout: &'a Layout,
    n: usize,
    m: usize,
    comp: Vec<Option<usize>>,
    cells: &'a [(usize, usize)],
}

impl Search<'_> {
    fn get(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.n + f]
    }

    fn fill(&mut self, pos: usize) -> bool {
        let Some(&(g, f)) = self.cells.get(pos) else {
            return true;
        };
        let (src, tgt) = (self.layout.src[f], self.layout.tgt[g]);
        let domain = &self.layout.homs[src * self.m + tgt];
        for &candidate in domain {
            self.comp[g * self.n + f] = Some(candidate);
            if self.consistent(g, f) && self.fill(pos + 1) {
                return true;
            }
        }
        self.comp[g * self.n + f] = None;
        false
    }

    /// Checks every associativity instance `c ∘ (b ∘ a) = (c ∘ b) ∘ a` in
    /// which the newly set cell `(g, f)` takes part and whose other cells
    /// are already known.
    fn consistent(&self, g: usize, f: usize) -> bool {
        let l = self.layout;
        let n = self.n;
        let x = self.get(g, f).unwrap();
        let agree = |lhs: Option<usize>, rhs: Option<usize>| match (lhs, rhs) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
        let then = |a: Option<usize>, k: &dyn Fn(usize) -> Option<usize>| a.and_then(k);

        // (g, f) as the inner pair: h ∘ (g ∘ f) = (h ∘ g) ∘ f
        for h in (0..n).filter(|&h| l.src[h] == l.tgt[g]) {
            if !agree(self.get(h, x), then(self.get(h, g), &|hg| self.get(hg, f))) {
                return false;
            }
        }
        // (g, f) as the outer pair: g ∘ (f ∘ e) = (g ∘ f) ∘ e
        for e in (0..n).filter(|&e| l.tgt[e] == l.src[f]) {
            if !agree(then(self.get(f, e), &|fe| self.get(g, fe)), self.get(x, e)) {
                return false;
            }
        }
        for b in 0..n {
            for a in (0..n).filter(|&a| l.tgt[a] == l.src[b]) {
                // f = b ∘ a, so g ∘ f is g ∘ (b ∘ a)
                if self.get(b, a) == Some(f)
                    && l.src[g] == l.tgt[b]
                    && !agree(Some(x), then(self.get(g, b), &|gb| self.get(gb, a)))
                {
                    return false;
                }
                // g = b ∘ a, so g ∘ f is (b ∘ a) ∘ f
                if self.get(b, a) == Some(g)
                    && l.tgt[f] == l.src[a]
                    && !agree(then(self.get(a, f), &|af| self.get(b, af)), Some(x))
                {
                    return false;
                }
            }
        }
        true
    }
}
