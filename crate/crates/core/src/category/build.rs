use super::{Category, CountMatrix};
use crate::error::CategoryError;

/// Arrow layout shared by the matrix-to-category constructions.
///
/// Objects are `a1 .. am`. Hom-sets are laid out in row-major order; within
/// the diagonal hom-set `(i, i)` the identity `1_ai` comes first, and the
/// remaining arrows of every hom-set are `ai>aj:0`, `ai>aj:1`, ...
pub(super) struct Layout {
    pub objects: Vec<String>,
    pub names: Vec<String>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub identity: Vec<usize>,
    /// Arrow indices of each hom-set, `homs[i * m + j]`.
    pub homs: Vec<Vec<usize>>,
}

impl Layout {
    /// Requires every diagonal entry to be at least 1.
    pub fn new(z: &CountMatrix) -> Layout {
        let m = z.dim();
        let objects: Vec<String> = (1..=m).map(|i| format!("a{i}")).collect();
        let mut l = Layout {
            objects,
            names: Vec::new(),
            src: Vec::new(),
            tgt: Vec::new(),
            identity: vec![0; m],
            homs: vec![Vec::new(); m * m],
        };
        for i in 0..m {
            for j in 0..m {
                let count = z.get(i, j) as usize;
                let start = if i == j { 1 } else { 0 };
                if i == j {
                    l.identity[i] = l.push(format!("1_{}", l.objects[i]), i, j);
                }
                for k in 0..count - start.min(count) {
                    l.push(format!("{}>{}:{k}", l.objects[i], l.objects[j]), i, j);
                }
            }
        }
        l
    }

    fn push(&mut self, name: String, i: usize, j: usize) -> usize {
        let ix = self.names.len();
        self.names.push(name);
        self.src.push(i);
        self.tgt.push(j);
        self.homs[i * self.objects.len() + j].push(ix);
        ix
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.src[f]] == f
    }

    pub fn into_category(self, comp: Vec<Option<usize>>) -> Category {
        Category {
            objects: self.objects,
            arrow_names: self.names,
            src: self.src,
            tgt: self.tgt,
            identity: self.identity,
            comp,
        }
    }
}

/// Builds a category whose count matrix is `z`; see [`build_from_matrix`].
pub fn category_from_matrix(z: &CountMatrix) -> Result<super::CatPresentation, CategoryError> {
    Ok(build_from_matrix(z)?.to_presentation())
}

/// Indexed form of [`category_from_matrix`].
///
/// `z` must be transitive with every diagonal entry at least 2. For each
/// nonempty hom-set the designated arrow `φ_ij` is its first non-identity
/// arrow; composites involving an identity are forced, and every other
/// composite `β ∘ α` of `α: i → j`, `β: j → k` is `φ_ik`.
pub fn build_from_matrix(z: &CountMatrix) -> Result<Category, CategoryError> {
    let m = z.dim();
    if let Some(i) = (0..m).find(|&i| z.get(i, i) < 2) {
        return Err(CategoryError::DiagonalTooSmall { index: i, value: z.get(i, i) });
    }
    if let Some((i, j, k)) = z.transitivity_failure() {
        return Err(CategoryError::NotTransitive { i, j, k });
    }
    let layout = Layout::new(z);
    let n = layout.names.len();
    let phi = |i: usize, k: usize| {
        let hom = &layout.homs[i * m + k];
        hom.iter().copied().find(|&f| !layout.is_identity(f)).expect("diagonal >= 2 and transitivity")
    };
    let mut comp = vec![None; n * n];
    for g in 0..n {
        for f in (0..n).filter(|&f| layout.tgt[f] == layout.src[g]) {
            comp[g * n + f] = Some(if layout.is_identity(f) {
                g
            } else if layout.is_identity(g) {
                f
            } else {
                phi(layout.src[f], layout.tgt[g])
            });
        }
    }
    Ok(layout.into_category(comp))
}
