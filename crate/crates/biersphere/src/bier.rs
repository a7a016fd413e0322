//! Bier spheres: deleted joins of a proper complex with its Alexander dual.
//!
//! For a proper complex `K` on `[n]`, the sphere `Bier(K)` has one vertex `i`
//! for each singleton face `{i}` of `K`, one vertex `i~` for each `i` with
//! `[n] \ {i}` not a face, and one facet per pair `(A, ν)` with `A` a face,
//! `ν ∉ A`, and `A ∪ {ν}` not a face. The facet's vertex set is `A` unbarred
//! together with `[n] \ (A ∪ {ν})` barred, so every facet has `n - 1`
//! vertices and the sphere has dimension `n - 2`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::complex::{mask_to_set, Mask, SimplicialComplex};
use crate::error::Error;
use crate::Result;

/// Vertex of a Bier sphere: the unbarred copy `i` of a ground-set element or
/// the barred copy `i~`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BierVertex {
    /// `false` for the copy indexed by faces of the complex, `true` for the
    /// copy indexed by faces of the dual. Listed first in `Ord` so sorted
    /// vertex lists put all unbarred vertices before all barred ones.
    pub barred: bool,
    /// 1-based ground-set element.
    pub index: usize,
}

impl BierVertex {
    pub fn unbarred(index: usize) -> Self {
        BierVertex {
            barred: false,
            index,
        }
    }

    pub fn barred(index: usize) -> Self {
        BierVertex {
            barred: true,
            index,
        }
    }
}

impl std::fmt::Display for BierVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.index, if self.barred { "~" } else { "" })
    }
}

/// Facet `(A, ν)` of a Bier sphere: `A` is a face of the complex, the pivot
/// `ν ∉ A` makes `A ∪ {ν}` a non-face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BierFacet {
    /// The face `A`, as a mask.
    pub face: Mask,
    /// The pivot element `ν`, 1-based.
    pub pivot: usize,
}

impl BierFacet {
    /// Mask of the barred part `[n] \ (A ∪ {ν})`.
    pub fn barred_mask(&self, n: usize) -> Mask {
        crate::complex::full_mask(n) & !(self.face | 1 << (self.pivot - 1))
    }

    /// Sorted vertex list: unbarred members of `A`, then barred members of
    /// the complement of `A ∪ {ν}`.
    pub fn vertices(&self, n: usize) -> Vec<BierVertex> {
        let mut out: Vec<BierVertex> = mask_to_set(self.face)
            .into_iter()
            .map(BierVertex::unbarred)
            .collect();
        out.extend(
            mask_to_set(self.barred_mask(n))
                .into_iter()
                .map(BierVertex::barred),
        );
        out
    }
}

impl std::fmt::Display for BierFacet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({:?}, {})",
            mask_to_set(self.face),
            self.pivot
        )
    }
}

/// How a wall (codimension-1 face) sits between its two facets. Writing the
/// wall as a partition `[n] = X1 ⊎ {c1, c2} ⊎ X2` with `X1` a face and
/// `X1 ∪ {c1, c2}` a non-face, the kind records which of `X1 ∪ {c1}`,
/// `X1 ∪ {c2}` are faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RidgeKind {
    /// Both are faces: the facets are `(X1 ∪ {c1}, c2)` and `(X1 ∪ {c2}, c1)`.
    Lambda,
    /// Neither is a face: the facets are `(X1, c1)` and `(X1, c2)`.
    Vee,
    /// Exactly one is a face; by convention `X1 ∪ {c2}` is the face, and the
    /// facets are `(X1 ∪ {c2}, c1)` and `(X1, c1)`.
    Cross,
}

/// Codimension-1 face of a Bier sphere, as the partition
/// `[n] = X1 ⊎ {c1, c2} ⊎ X2` described at [`RidgeKind`]. The ridge's vertex
/// set is `X1` unbarred together with `X2` barred.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ridge {
    pub x1: Mask,
    pub c1: usize,
    pub c2: usize,
    pub x2: Mask,
    pub kind: RidgeKind,
}

impl Ridge {
    /// Mask of `{c1, c2}`.
    pub fn pair_mask(&self) -> Mask {
        1 << (self.c1 - 1) | 1 << (self.c2 - 1)
    }

    /// The two facets containing this ridge.
    pub fn incident_facets(&self) -> [BierFacet; 2] {
        let b1 = 1u32 << (self.c1 - 1);
        let b2 = 1u32 << (self.c2 - 1);
        match self.kind {
            RidgeKind::Lambda => [
                BierFacet {
                    face: self.x1 | b1,
                    pivot: self.c2,
                },
                BierFacet {
                    face: self.x1 | b2,
                    pivot: self.c1,
                },
            ],
            RidgeKind::Vee => [
                BierFacet {
                    face: self.x1,
                    pivot: self.c1,
                },
                BierFacet {
                    face: self.x1,
                    pivot: self.c2,
                },
            ],
            RidgeKind::Cross => [
                BierFacet {
                    face: self.x1 | b2,
                    pivot: self.c1,
                },
                BierFacet {
                    face: self.x1,
                    pivot: self.c1,
                },
            ],
        }
    }

    /// Sorted vertex list of the ridge itself.
    pub fn vertices(&self) -> Vec<BierVertex> {
        let mut out: Vec<BierVertex> = mask_to_set(self.x1)
            .into_iter()
            .map(BierVertex::unbarred)
            .collect();
        out.extend(mask_to_set(self.x2).into_iter().map(BierVertex::barred));
        out
    }
}

/// Coherent facet orientations: `signs[i]` is `+1` or `-1` for the facet at
/// index `i`, chosen so adjacent facets induce opposite orientations on their
/// common ridge. Unique up to a global flip on a connected sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedFacets {
    pub signs: Vec<i8>,
}

/// Result of pushing one new face into the complex: the Bier sphere is
/// re-triangulated by swapping a small set of facets.
#[derive(Clone, Debug)]
pub struct Retriangulation {
    /// Bier sphere of the enlarged complex.
    pub sphere: BierSphere,
    /// Facets of the old sphere that are no longer facets.
    pub removed: Vec<BierFacet>,
    /// Facets of the new sphere that were not facets before.
    pub added: Vec<BierFacet>,
    /// When the added face is all of `[n]` minus one element `i`, the barred
    /// vertex `i~` disappears from the sphere.
    pub dying_barred: Option<usize>,
}

/// The Bier sphere of a proper simplicial complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BierSphere {
    complex: SimplicialComplex,
    dual: SimplicialComplex,
    facets: Vec<BierFacet>,
}

impl BierSphere {
    /// Builds the Bier sphere. The complex must be proper; ghost vertices are
    /// allowed (the corresponding unbarred copies are simply absent).
    pub fn of(complex: &SimplicialComplex) -> Result<Self> {
        let dual = complex.alexander_dual()?;
        let n = complex.n();
        let faces: HashSet<Mask> = complex.faces().into_iter().collect();
        let mut facets = Vec::new();
        for &a in &complex.faces() {
            for v in 1..=n {
                let bit = 1u32 << (v - 1);
                if a & bit == 0 && !faces.contains(&(a | bit)) {
                    facets.push(BierFacet { face: a, pivot: v });
                }
            }
        }
        facets.sort_unstable();
        Ok(BierSphere {
            complex: complex.clone(),
            dual,
            facets,
        })
    }

    pub fn n(&self) -> usize {
        self.complex.n()
    }

    /// Dimension of the sphere, `n - 2`.
    pub fn dim(&self) -> isize {
        self.n() as isize - 2
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// The Alexander dual of the underlying complex.
    pub fn dual(&self) -> &SimplicialComplex {
        &self.dual
    }

    /// Facets in increasing `(face, pivot)` order.
    pub fn facets(&self) -> &[BierFacet] {
        &self.facets
    }

    /// Index of a facet in [`Self::facets`].
    pub fn facet_index(&self, f: &BierFacet) -> Option<usize> {
        self.facets.binary_search(f).ok()
    }

    /// Whether `v` is a vertex of the sphere.
    pub fn has_vertex(&self, v: BierVertex) -> bool {
        if v.index == 0 || v.index > self.n() {
            return false;
        }
        let bit = 1u32 << (v.index - 1);
        if v.barred {
            !self.complex.contains(self.complex.full_mask() & !bit)
        } else {
            self.complex.contains(bit)
        }
    }

    /// Sorted vertex list of the whole sphere.
    pub fn vertices(&self) -> Vec<BierVertex> {
        let mut out = Vec::new();
        for i in 1..=self.n() {
            let v = BierVertex::unbarred(i);
            if self.has_vertex(v) {
                out.push(v);
            }
        }
        for i in 1..=self.n() {
            let v = BierVertex::barred(i);
            if self.has_vertex(v) {
                out.push(v);
            }
        }
        out
    }

    /// Face numbers `(f_0, …, f_{n-2})`: faces of the sphere are pairs of
    /// disjoint faces `(A, B)` with `A` in the complex and `B` in the dual,
    /// counted by `|A| + |B|`.
    pub fn f_vector(&self) -> Vec<usize> {
        let n = self.n();
        let dual_faces: HashSet<Mask> = self.dual.faces().into_iter().collect();
        let mut counts = vec![0usize; n];
        for a in self.complex.faces() {
            let comp = self.complex.full_mask() & !a;
            let mut b = comp;
            loop {
                if dual_faces.contains(&b) {
                    counts[(a.count_ones() + b.count_ones()) as usize] += 1;
                }
                if b == 0 {
                    break;
                }
                b = (b - 1) & comp;
            }
        }
        counts[1..].to_vec()
    }

    /// All codimension-1 faces, each with its kind and the convention of
    /// [`RidgeKind`] applied (`c1 < c2` except that a cross ridge puts the
    /// element extending `X1` to a face second).
    pub fn ridges(&self) -> Vec<Ridge> {
        let n = self.n();
        let faces: HashSet<Mask> = self.complex.faces().into_iter().collect();
        let full = self.complex.full_mask();
        let mut out = Vec::new();
        for c1 in 1..=n {
            for c2 in c1 + 1..=n {
                let pair = (1u32 << (c1 - 1)) | (1u32 << (c2 - 1));
                for &x1 in &self.complex.faces() {
                    if x1 & pair != 0 || faces.contains(&(x1 | pair)) {
                        continue;
                    }
                    let up1 = faces.contains(&(x1 | 1 << (c1 - 1)));
                    let up2 = faces.contains(&(x1 | 1 << (c2 - 1)));
                    let (kind, c1, c2) = match (up1, up2) {
                        (true, true) => (RidgeKind::Lambda, c1, c2),
                        (false, false) => (RidgeKind::Vee, c1, c2),
                        (false, true) => (RidgeKind::Cross, c1, c2),
                        (true, false) => (RidgeKind::Cross, c2, c1),
                    };
                    out.push(Ridge {
                        x1,
                        c1,
                        c2,
                        x2: full & !(x1 | pair),
                        kind,
                    });
                }
            }
        }
        out
    }

    /// Coherent facet orientations via sign propagation across ridges. The
    /// first facet gets `+1`. Fails on spheres of dimension below 1 (a pair
    /// of points has no ridges to propagate through).
    pub fn orient(&self) -> Result<OrientedFacets> {
        let n = self.n();
        if n < 3 {
            return Err(Error::NotConnected);
        }
        let vertex_lists: Vec<Vec<BierVertex>> =
            self.facets.iter().map(|f| f.vertices(n)).collect();
        // Ridge key: (unbarred mask, barred mask) after deleting one vertex.
        let mut by_ridge: HashMap<(Mask, Mask), Vec<(usize, usize)>> = HashMap::new();
        for (fi, f) in self.facets.iter().enumerate() {
            let barred = f.barred_mask(n);
            for (j, v) in vertex_lists[fi].iter().enumerate() {
                let bit = 1u32 << (v.index - 1);
                let key = if v.barred {
                    (f.face, barred & !bit)
                } else {
                    (f.face & !bit, barred)
                };
                by_ridge.entry(key).or_default().push((fi, j));
            }
        }
        for (key, inc) in &by_ridge {
            if inc.len() != 2 {
                let desc = format!(
                    "{:?} ∪ {:?}~",
                    mask_to_set(key.0),
                    mask_to_set(key.1)
                );
                return Err(Error::NotPseudomanifold(desc, inc.len()));
            }
        }
        let mut signs = vec![0i8; self.facets.len()];
        if self.facets.is_empty() {
            return Ok(OrientedFacets { signs });
        }
        signs[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        // Adjacency: facet index -> list of (other facet, my position, other position).
        let mut adj: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); self.facets.len()];
        for inc in by_ridge.values() {
            let (f, j) = inc[0];
            let (g, l) = inc[1];
            adj[f].push((g, j, l));
            adj[g].push((f, l, j));
        }
        while let Some(f) = queue.pop_front() {
            for &(g, j, l) in &adj[f] {
                // Opposite induced orientations on the shared ridge:
                // s_f * (-1)^j = - s_g * (-1)^l.
                let s = if (j + l) % 2 == 0 {
                    -signs[f]
                } else {
                    signs[f]
                };
                if signs[g] == 0 {
                    signs[g] = s;
                    queue.push_back(g);
                } else if signs[g] != s {
                    return Err(Error::NonOrientable);
                }
            }
        }
        if signs.iter().any(|&s| s == 0) {
            return Err(Error::NotConnected);
        }
        Ok(OrientedFacets { signs })
    }

    /// Adds one face (at least two elements, not all of `[n]`, all proper
    /// subsets already faces) to the complex and reports how the Bier sphere
    /// changes: the facets `(A \ {i}, i)` for `i ∈ A` are removed and the
    /// facets `(A, ν)` for `ν ∉ A` appear.
    pub fn retriangulate(&self, face: Mask) -> Result<Retriangulation> {
        let n = self.n();
        if face.count_ones() < 2 {
            return Err(Error::FaceNotAddable {
                face: mask_to_set(face),
                reason: "re-triangulation steps add faces of at least two elements".into(),
            });
        }
        if face == self.complex.full_mask() {
            return Err(Error::FaceNotAddable {
                face: mask_to_set(face),
                reason: "adding the full ground set would make the complex improper".into(),
            });
        }
        let grown = self.complex.add_face(face)?;
        let removed: Vec<BierFacet> = mask_to_set(face)
            .into_iter()
            .map(|i| BierFacet {
                face: face & !(1 << (i - 1)),
                pivot: i,
            })
            .collect();
        let added: Vec<BierFacet> = (1..=n)
            .filter(|i| face & 1 << (i - 1) == 0)
            .map(|i| BierFacet { face, pivot: i })
            .collect();
        let dying_barred = if face.count_ones() as usize == n - 1 {
            Some(mask_to_set(self.complex.full_mask() & !face)[0])
        } else {
            None
        };
        Ok(Retriangulation {
            sphere: BierSphere::of(&grown)?,
            removed,
            added,
            dying_barred,
        })
    }
}
