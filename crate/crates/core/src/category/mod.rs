//! Finite categories given by explicit presentations.
//!
//! A [`CatPresentation`] lists objects, arrows, identities and the full
//! composition table by name. [`validate`] checks the category axioms;
//! everything else works on the indexed form [`Category`] it produces.

mod build;
mod count;
mod search;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use build::{build_from_matrix, category_from_matrix};
pub use count::{duplicate_object, random_category_matrix, CountMatrix};
pub use search::{is_category_matrix, NoReason, Verdict, DEFAULT_BUDGET};

use crate::error::CategoryError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// A finite category as plain data. `composition` holds triples
/// `[g, f, g∘f]`, one per composable pair (`tgt f = src g`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatPresentation {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub identities: BTreeMap<String, String>,
    pub composition: Vec<[String; 3]>,
}

/// A failed category axiom, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateObject(String),
    DuplicateArrow(String),
    UnknownObject { arrow: String, object: String },
    UnknownArrow(String),
    MissingIdentity(String),
    IdentityForUnknownObject(String),
    IdentityNotEndomorphism { object: String, arrow: String },
    /// A composite was given for arrows that are not composable, or the
    /// composite has the wrong source or target.
    SourceTargetMismatch { g: String, f: String, gf: String },
    ConflictingComposite { g: String, f: String },
    CompositionUndefined { g: String, f: String },
    LeftUnit { arrow: String },
    RightUnit { arrow: String },
    Associativity { h: String, g: String, f: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            DuplicateObject(o) => write!(fm, "duplicate object {o}"),
            DuplicateArrow(a) => write!(fm, "duplicate arrow {a}"),
            UnknownObject { arrow, object } => write!(fm, "arrow {arrow} refers to unknown object {object}"),
            UnknownArrow(a) => write!(fm, "unknown arrow {a}"),
            MissingIdentity(o) => write!(fm, "object {o} has no identity"),
            IdentityForUnknownObject(o) => write!(fm, "identity given for unknown object {o}"),
            IdentityNotEndomorphism { object, arrow } => {
                write!(fm, "identity {arrow} of {object} is not an endomorphism of {object}")
            }
            SourceTargetMismatch { g, f, gf } => write!(fm, "source/target mismatch in {g} ∘ {f} = {gf}"),
            ConflictingComposite { g, f } => write!(fm, "conflicting composites for {g} ∘ {f}"),
            CompositionUndefined { g, f } => write!(fm, "composition undefined for composable pair {g} ∘ {f}"),
            LeftUnit { arrow } => write!(fm, "left unit law fails for {arrow}"),
            RightUnit { arrow } => write!(fm, "right unit law fails for {arrow}"),
            Associativity { h, g, f } => write!(fm, "associativity fails for {h} ∘ {g} ∘ {f}"),
        }
    }
}

/// A validated category with arrows and objects replaced by indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Category {
    objects: Vec<String>,
    arrow_names: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    /// `comp[g * n + f]` for composable pairs.
    comp: Vec<Option<usize>>,
}

impl Category {
    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrow_names.len()
    }

    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    pub fn tgt(&self, a: usize) -> usize {
        self.tgt[a]
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identity[o]
    }

    pub fn is_identity(&self, a: usize) -> bool {
        self.identity[self.src[a]] == a
    }

    /// `g ∘ f`, defined when `tgt f = src g`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.num_arrows() + f]
    }

    pub fn hom(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_arrows()).filter(move |&f| self.src[f] == a && self.tgt[f] == b)
    }

    pub fn count_matrix(&self) -> CountMatrix {
        let m = self.num_objects();
        let mut entries = vec![0u64; m * m];
        for f in 0..self.num_arrows() {
            entries[self.src[f] * m + self.tgt[f]] += 1;
        }
        CountMatrix::new(m, entries).expect("square by construction")
    }

    pub fn is_isomorphic(&self, a: usize, b: usize) -> bool {
        self.hom(a, b).any(|f| {
            self.hom(b, a).any(|g| {
                self.compose(g, f) == Some(self.identity[a]) && self.compose(f, g) == Some(self.identity[b])
            })
        })
    }

    /// Number of chains `x_0 → x_1 → … → x_n` of non-identity arrows,
    /// counted by enumerating the chains one by one.
    pub fn count_nondegenerate_chains(&self, n: usize) -> u64 {
        if n == 0 {
            return self.num_objects() as u64;
        }
        let nonid: Vec<usize> = (0..self.num_arrows()).filter(|&f| !self.is_identity(f)).collect();
        let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); self.num_objects()];
        for &f in &nonid {
            out_of[self.src[f]].push(f);
        }
        fn walk(out_of: &[Vec<usize>], tgt: &[usize], at: usize, remaining: usize) -> u64 {
            if remaining == 0 {
                return 1;
            }
            out_of[at].iter().map(|&f| walk(out_of, tgt, tgt[f], remaining - 1)).sum()
        }
        nonid.iter().map(|&f| walk(&out_of, &self.tgt, self.tgt[f], n - 1)).sum()
    }

    /// The full subcategory on `keep`, in the order given.
    pub fn full_subcategory(&self, keep: &[usize]) -> Category {
        let mut obj_map = vec![None; self.num_objects()];
        for (new, &old) in keep.iter().enumerate() {
            obj_map[old] = Some(new);
        }
        let arrows: Vec<usize> = (0..self.num_arrows())
            .filter(|&f| obj_map[self.src[f]].is_some() && obj_map[self.tgt[f]].is_some())
            .collect();
        let mut arrow_map = vec![None; self.num_arrows()];
        for (new, &old) in arrows.iter().enumerate() {
            arrow_map[old] = Some(new);
        }
        let n = arrows.len();
        let mut comp = vec![None; n * n];
        for (gi, &g) in arrows.iter().enumerate() {
            for (fi, &f) in arrows.iter().enumerate() {
                comp[gi * n + fi] = self.compose(g, f).and_then(|h| arrow_map[h]);
            }
        }
        Category {
            objects: keep.iter().map(|&o| self.objects[o].clone()).collect(),
            arrow_names: arrows.iter().map(|&f| self.arrow_names[f].clone()).collect(),
            src: arrows.iter().map(|&f| obj_map[self.src[f]].unwrap()).collect(),
            tgt: arrows.iter().map(|&f| obj_map[self.tgt[f]].unwrap()).collect(),
            identity: keep.iter().map(|&o| arrow_map[self.identity[o]].unwrap()).collect(),
            comp,
        }
    }

    /// Full subcategory on the first object of each isomorphism class, in
    /// presentation order.
    pub fn skeleton(&self) -> Category {
        let mut reps: Vec<usize> = Vec::new();
        for o in 0..self.num_objects() {
            if !reps.iter().any(|&r| self.is_isomorphic(r, o)) {
                reps.push(o);
            }
        }
        self.full_subcategory(&reps)
    }

    pub fn is_skeletal(&self) -> bool {
        let m = self.num_objects();
        (0..m).all(|a| (a + 1..m).all(|b| !self.is_isomorphic(a, b)))
    }

    pub fn to_presentation(&self) -> CatPresentation {
        let name = |f: usize| self.arrow_names[f].clone();
        let n = self.num_arrows();
        let mut composition = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if let Some(h) = self.compose(g, f) {
                    composition.push([name(g), name(f), name(h)]);
                }
            }
        }
        CatPresentation {
            objects: self.objects.clone(),
            arrows: (0..n)
                .map(|f| Arrow {
                    name: name(f),
                    src: self.objects[self.src[f]].clone(),
                    tgt: self.objects[self.tgt[f]].clone(),
                })
                .collect(),
            identities: (0..self.num_objects())
                .map(|o| (self.objects[o].clone(), name(self.identity[o])))
                .collect(),
            composition,
        }
    }
}

/// Checks every category axiom. An empty result means `c` is a category.
pub fn validate(c: &CatPresentation) -> Vec<Violation> {
    match index(c) {
        Ok(cat) => check_laws(&cat),
        Err(vs) => vs,
    }
}

/// Validates and indexes a presentation.
pub fn compile(c: &CatPresentation) -> Result<Category, CategoryError> {
    let cat = index(c).map_err(CategoryError::Invalid)?;
    let vs = check_laws(&cat);
    if vs.is_empty() {
        Ok(cat)
    } else {
        Err(CategoryError::Invalid(vs))
    }
}

pub fn count_matrix(c: &CatPresentation) -> Result<CountMatrix, CategoryError> {
    Ok(compile(c)?.count_matrix())
}

pub fn count_nondegenerate_chains(c: &CatPresentation, n: usize) -> Result<u64, CategoryError> {
    Ok(compile(c)?.count_nondegenerate_chains(n))
}

pub fn skeleton(c: &CatPresentation) -> Result<CatPresentation, CategoryError> {
    Ok(compile(c)?.skeleton().to_presentation())
}

/// Resolves names and checks sources, targets and identities. Laws that need
/// a complete table are left to `check_laws`.
fn index(c: &CatPresentation) -> Result<Category, Vec<Violation>> {
    let mut vs = Vec::new();
    let mut obj_ix: HashMap<&str, usize> = HashMap::new();
    for (i, o) in c.objects.iter().enumerate() {
        if obj_ix.insert(o, i).is_some() {
            vs.push(Violation::DuplicateObject(o.clone()));
        }
    }
    let mut arrow_ix: HashMap<&str, usize> = HashMap::new();
    let mut src = Vec::with_capacity(c.arrows.len());
    let mut tgt = Vec::with_capacity(c.arrows.len());
    for (i, a) in c.arrows.iter().enumerate() {
        if arrow_ix.insert(&a.name, i).is_some() {
            vs.push(Violation::DuplicateArrow(a.name.clone()));
        }
        for end in [&a.src, &a.tgt] {
            if !obj_ix.contains_key(end.as_str()) {
                vs.push(Violation::UnknownObject { arrow: a.name.clone(), object: end.clone() });
            }
        }
        src.push(obj_ix.get(a.src.as_str()).copied().unwrap_or(0));
        tgt.push(obj_ix.get(a.tgt.as_str()).copied().unwrap_or(0));
    }

    let mut identity = vec![usize::MAX; c.objects.len()];
    for (o, a) in &c.identities {
        let Some(&oi) = obj_ix.get(o.as_str()) else {
            vs.push(Violation::IdentityForUnknownObject(o.clone()));
            continue;
        };
        let Some(&ai) = arrow_ix.get(a.as_str()) else {
            vs.push(Violation::UnknownArrow(a.clone()));
            continue;
        };
        if src[ai] != oi || tgt[ai] != oi {
            vs.push(Violation::IdentityNotEndomorphism { object: o.clone(), arrow: a.clone() });
        }
        identity[oi] = ai;
    }
    for (oi, o) in c.objects.iter().enumerate() {
        if identity[oi] == usize::MAX && !c.identities.contains_key(o) {
            vs.push(Violation::MissingIdentity(o.clone()));
        }
    }

    let n = c.arrows.len();
    let mut comp = vec![None; n * n];
    let mut seen = HashSet::new();
    for [g, f, gf] in &c.composition {
        let mut lookup = |name: &String| {
            let r = arrow_ix.get(name.as_str()).copied();
            if r.is_none() {
                vs.push(Violation::UnknownArrow(name.clone()));
            }
            r
        };
        let (Some(gi), Some(fi), Some(hi)) = (lookup(g), lookup(f), lookup(gf)) else {
            continue;
        };
        if tgt[fi] != src[gi] || src[hi] != src[fi] || tgt[hi] != tgt[gi] {
            vs.push(Violation::SourceTargetMismatch { g: g.clone(), f: f.clone(), gf: gf.clone() });
            continue;
        }
        if !seen.insert((gi, fi)) {
            if comp[gi * n + fi] != Some(hi) {
                vs.push(Violation::ConflictingComposite { g: g.clone(), f: f.clone() });
            }
            continue;
        }
        comp[gi * n + fi] = Some(hi);
    }

    if !vs.is_empty() {
        return Err(vs);
    }
    Ok(Category {
        objects: c.objects.clone(),
        arrow_names: c.arrows.iter().map(|a| a.name.clone()).collect(),
        src,
        tgt,
        identity,
        comp,
    })
}

fn check_laws(cat: &Category) -> Vec<Violation> {
    let n = cat.num_arrows();
    let name = |f: usize| cat.arrow_names[f].clone();
    let mut vs = Vec::new();
    for g in 0..n {
        for f in 0..n {
            if cat.tgt[f] == cat.src[g] && cat.compose(g, f).is_none() {
                vs.push(Violation::CompositionUndefined { g: name(g), f: name(f) });
            }
        }
    }
    if !vs.is_empty() {
        return vs;
    }
    for f in 0..n {
        if cat.compose(f, cat.identity[cat.src[f]]) != Some(f) {
            vs.push(Violation::RightUnit { arrow: name(f) });
        }
        if cat.compose(cat.identity[cat.tgt[f]], f) != Some(f) {
            vs.push(Violation::LeftUnit { arrow: name(f) });
        }
    }
    for f in 0..n {
        for g in (0..n).filter(|&g| cat.src[g] == cat.tgt[f]) {
            let gf = cat.compose(g, f).unwrap();
            for h in (0..n).filter(|&h| cat.src[h] == cat.tgt[g]) {
                let hg = cat.compose(h, g).unwrap();
                if cat.compose(h, gf) != cat.compose(hg, f) {
                    vs.push(Violation::Associativity { h: name(h), g: name(g), f: name(f) });
                }
            }
        }
    }
    vs
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn arrow(name: &str, src: &str, tgt: &str) -> Arrow {
        Arrow { name: name.into(), src: src.into(), tgt: tgt.into() }
    }

    fn triple(g: &str, f: &str, gf: &str) -> [String; 3] {
        [g.into(), f.into(), gf.into()]
    }

    pub fn terminal() -> CatPresentation {
        CatPresentation {
            objects: vec!["x".into()],
            arrows: vec![arrow("1x", "x", "x")],
            identities: [("x".to_string(), "1x".to_string())].into(),
            composition: vec![triple("1x", "1x", "1x")],
        }
    }

    pub fn z2() -> CatPresentation {
        CatPresentation {
            objects: vec!["*".into()],
            arrows: vec![arrow("e", "*", "*"), arrow("s", "*", "*")],
            identities: [("*".to_string(), "e".to_string())].into(),
            composition: vec![
                triple("e", "e", "e"),
                triple("e", "s", "s"),
                triple("s", "e", "s"),
                triple("s", "s", "e"),
            ],
        }
    }

    /// Two objects with exactly one arrow in each hom-set.
    pub fn indiscrete2() -> CatPresentation {
        CatPresentation {
            objects: vec!["a".into(), "b".into()],
            arrows: vec![
                arrow("1a", "a", "a"),
                arrow("f", "a", "b"),
                arrow("g", "b", "a"),
                arrow("1b", "b", "b"),
            ],
            identities: [("a".to_string(), "1a".to_string()), ("b".to_string(), "1b".to_string())].into(),
            composition: vec![
                triple("1a", "1a", "1a"),
                triple("f", "1a", "f"),
                triple("1b", "f", "f"),
                triple("g", "f", "1a"),
                triple("1a", "g", "g"),
                triple("g", "1b", "g"),
                triple("f", "g", "1b"),
                triple("1b", "1b", "1b"),
            ],
        }
    }

    /// `indiscrete2` beside a terminal object `c`.
    pub fn indiscrete2_plus_point() -> CatPresentation {
        let mut c = indiscrete2();
        c.objects.push("c".into());
        c.arrows.push(arrow("1c", "c", "c"));
        c.identities.insert("c".into(), "1c".into());
        c.composition.push(triple("1c", "1c", "1c"));
        c
    }
}
