//! Simplicial complexes on a small ground set, stored by their facets.
//!
//! A complex `K` on `[n] = {1, …, n}` is a downward-closed family of subsets
//! containing the empty set. Faces are bitmasks: bit `i-1` encodes element
//! `i`. Downward closure is implicit in the facet representation (an
//! antichain of maximal faces). Read as a simple game, the faces of `K` are
//! the losing coalitions and the non-faces are the winning ones.

use crate::canon::canonical_hypergraph;
use crate::error::Error;
use crate::Result;

/// Subset of the ground set as a bitmask; bit `i-1` is element `i`.
pub type Mask = u32;

/// Largest ground set supported by the bitmask representation.
pub const MAX_GROUND: usize = 24;

/// All of `[n]` as a mask.
pub fn full_mask(n: usize) -> Mask {
    if n == 32 {
        !0
    } else {
        (1u32 << n) - 1
    }
}

/// Mask of a 1-based vertex list.
pub fn set_to_mask(n: usize, set: &[usize]) -> Result<Mask> {
    let mut m = 0u32;
    for &v in set {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        m |= 1 << (v - 1);
    }
    Ok(m)
}

/// 1-based sorted vertex list of a mask.
pub fn mask_to_set(mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        out.push(b + 1);
        m &= m - 1;
    }
    out
}

/// Validation summary for a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexReport {
    /// `K != 2^[n]`.
    pub proper: bool,
    /// Elements `v` with `{v}` not a face.
    pub ghost_vertices: Vec<usize>,
    /// Elements `v` with `[n] \ {v}` a face (their barred copy is missing
    /// from the Bier sphere).
    pub dual_ghosts: Vec<usize>,
}

/// A simplicial complex, stored as the sorted antichain of its facets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Mask>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=[", self.n)?;
        for (i, &m) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", mask_to_set(m))?;
        }
        write!(f, "])")
    }
}

impl SimplicialComplex {
    /// Builds a complex from 1-based facet vertex lists. Dominated entries
    /// are dropped, so the input may be any generating family.
    pub fn build(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let masks = facets
            .iter()
            .map(|f| set_to_mask(n, f))
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(n, masks)
    }

    /// Builds a complex from a generating family of face masks.
    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = Mask>) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::GroundSetSize {
                got: n,
                max: MAX_GROUND,
            });
        }
        let full = full_mask(n);
        let mut gen: Vec<Mask> = Vec::new();
        for m in masks {
            if m & !full != 0 {
                let v = (m & !full).trailing_zeros() as usize + 1;
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            gen.push(m);
        }
        // Keep only maximal members; the empty face is implicit.
        let mut facets: Vec<Mask> = Vec::new();
        for &m in &gen {
            if m == 0 {
                continue;
            }
            if gen.iter().any(|&g| g != m && m & !g == 0) {
                continue;
            }
            if !facets.contains(&m) {
                facets.push(m);
            }
        }
        facets.sort_unstable();
        Ok(SimplicialComplex { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets in increasing mask order.
    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    /// Facets as sorted 1-based vertex lists.
    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| mask_to_set(m)).collect()
    }

    pub fn full_mask(&self) -> Mask {
        full_mask(self.n)
    }

    /// Face membership. The empty set is always a face.
    pub fn contains(&self, face: Mask) -> bool {
        face & !self.full_mask() == 0 && (face == 0 || self.facets.iter().any(|&f| face & !f == 0))
    }

    /// Bit-vector of all faces, indexed by mask.
    fn face_table(&self) -> Vec<u64> {
        let size = 1usize << self.n;
        let mut bits = vec![0u64; size.div_ceil(64)];
        let set = |bits: &mut Vec<u64>, m: usize| bits[m >> 6] |= 1 << (m & 63);
        let get = |bits: &[u64], m: usize| bits[m >> 6] >> (m & 63) & 1 == 1;
        set(&mut bits, 0);
        for &f in &self.facets {
            set(&mut bits, f as usize);
        }
        for m in (1..size).rev() {
            if get(&bits, m) {
                let mut rest = m;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    set(&mut bits, m & !b);
                    rest &= rest - 1;
                }
            }
        }
        bits
    }

    /// Every face (including the empty one), in increasing mask order.
    pub fn faces(&self) -> Vec<Mask> {
        let bits = self.face_table();
        let mut out = Vec::new();
        for m in 0..(1usize << self.n) {
            if bits[m >> 6] >> (m & 63) & 1 == 1 {
                out.push(m as Mask);
            }
        }
        out
    }

    /// Number of faces, the empty face included.
    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// `K != 2^[n]`, i.e. the full ground set is not a face.
    pub fn is_proper(&self) -> bool {
        self.facets != [self.full_mask()]
    }

    /// Elements whose singleton is not a face.
    pub fn ghost_vertices(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&v| !self.contains(1 << (v - 1)))
            .collect()
    }

    /// Elements `v` with `[n] \ {v}` a face.
    pub fn dual_ghosts(&self) -> Vec<usize> {
        let full = self.full_mask();
        (1..=self.n)
            .filter(|&v| self.contains(full & !(1 << (v - 1))))
            .collect()
    }

    pub fn validate(&self) -> ComplexReport {
        ComplexReport {
            proper: self.is_proper(),
            ghost_vertices: self.ghost_vertices(),
            dual_ghosts: self.dual_ghosts(),
        }
    }

    /// Errors unless the complex is proper and ghost-free (the standing
    /// hypothesis for Bier spheres and game classification).
    pub fn require_classifiable(&self) -> Result<()> {
        if !self.is_proper() {
            return Err(Error::ImproperComplex);
        }
        let ghosts = self.ghost_vertices();
        if !ghosts.is_empty() {
            return Err(Error::GhostVertices(ghosts));
        }
        Ok(())
    }

    /// Inclusion-minimal non-faces, in increasing mask order.
    pub fn minimal_nonfaces(&self) -> Vec<Mask> {
        let bits = self.face_table();
        let get = |m: Mask| bits[(m >> 6) as usize] >> (m & 63) & 1 == 1;
        let mut out = Vec::new();
        for m in 1..=self.full_mask() {
            if get(m) {
                continue;
            }
            let mut minimal = true;
            let mut rest = m;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                if !get(m & !b) {
                    minimal = false;
                    break;
                }
                rest &= rest - 1;
            }
            if minimal {
                out.push(m);
            }
        }
        out
    }

    /// Alexander dual `K° = {A : [n]\A not in K}`. Its facets are the
    /// complements of the minimal non-faces of `K`. Requires `K` proper
    /// (otherwise the dual would not contain the empty set).
    pub fn alexander_dual(&self) -> Result<Self> {
        if !self.is_proper() {
            return Err(Error::ImproperComplex);
        }
        let full = self.full_mask();
        Self::from_masks(self.n, self.minimal_nonfaces().into_iter().map(|m| full & !m))
    }

    /// Canonical byte label; equal labels iff the complexes are related by a
    /// ground-set permutation.
    pub fn canonical_form(&self) -> Vec<u8> {
        let edges: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|&m| mask_to_set(m).iter().map(|v| v - 1).collect())
            .collect();
        canonical_hypergraph(self.n, &edges)
    }

    /// Image under the 1-based permutation `perm` (element `i` maps to
    /// `perm[i-1]`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let remap = |m: Mask| {
            let mut out = 0u32;
            for v in mask_to_set(m) {
                out |= 1 << (perm[v - 1] - 1);
            }
            out
        };
        let mut facets: Vec<Mask> = self.facets.iter().map(|&m| remap(m)).collect();
        facets.sort_unstable();
        SimplicialComplex { n: self.n, facets }
    }

    /// Adds a single new face. The face must be absent and all of its proper
    /// subsets must already be faces, so the result is again a complex.
    pub fn add_face(&self, face: Mask) -> Result<Self> {
        if face & !self.full_mask() != 0 {
            let v = (face & !self.full_mask()).trailing_zeros() as usize + 1;
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if self.contains(face) {
            return Err(Error::FaceNotAddable {
                face: mask_to_set(face),
                reason: "already a face".into(),
            });
        }
        let mut rest = face;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            if !self.contains(face & !b) {
                return Err(Error::FaceNotAddable {
                    face: mask_to_set(face),
                    reason: format!("proper subset {:?} is not a face", mask_to_set(face & !b)),
                });
            }
            rest &= rest - 1;
        }
        let mut masks = self.facets.clone();
        masks.push(face);
        Self::from_masks(self.n, masks)
    }

    /// Reads the complex inside a larger ground set `[ambient]`, adding each
    /// fresh element as a singleton facet so no ghosts appear.
    pub fn embed(&self, ambient: usize) -> Result<Self> {
        if ambient < self.n {
            return Err(Error::GroundSetSize {
                got: ambient,
                max: MAX_GROUND,
            });
        }
        let mut masks = self.facets.clone();
        for v in self.n + 1..=ambient {
            masks.push(1 << (v - 1));
        }
        let mut out = Self::from_masks(ambient, masks)?;
        // K = {∅} embeds with only the fresh singletons; keep old singleton
        // ghosts as ghosts (there are none under our standing hypotheses).
        out.facets.sort_unstable();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn c5() -> SimplicialComplex {
        SimplicialComplex::build(
            5,
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5]],
        )
        .unwrap()
    }

    fn two_pairs() -> SimplicialComplex {
        SimplicialComplex::build(4, &[vec![1, 2], vec![3, 4]]).unwrap()
    }

    #[test]
    fn build_drops_dominated_faces() {
        let k = SimplicialComplex::build(3, &[vec![1], vec![1, 2], vec![2]]).unwrap();
        assert_eq!(k.facet_sets(), vec![vec![1, 2]]);
        // Downward closure is implicit.
        assert!(k.contains(set_to_mask(3, &[1]).unwrap()));
        assert!(k.contains(0));
        assert!(!k.contains(set_to_mask(3, &[3]).unwrap()));
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert!(matches!(
            SimplicialComplex::build(3, &[vec![4]]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(SimplicialComplex::build(0, &[]).is_err());
        assert!(SimplicialComplex::build(25, &[]).is_err());
    }

    #[test]
    fn empty_complex_is_proper_with_all_ghosts() {
        let k = SimplicialComplex::build(3, &[]).unwrap();
        assert!(k.is_proper());
        assert_eq!(k.ghost_vertices(), vec![1, 2, 3]);
        assert_eq!(k.face_count(), 1);
    }

    #[test]
    fn validate_reports() {
        let k = SimplicialComplex::build(3, &[vec![1, 2, 3]]).unwrap();
        let report = k.validate();
        assert!(!report.proper);
        assert!(report.ghost_vertices.is_empty());
        assert_eq!(report.dual_ghosts, vec![1, 2, 3]);

        let k = SimplicialComplex::build(3, &[vec![1, 2]]).unwrap();
        let report = k.validate();
        assert!(report.proper);
        assert_eq!(report.ghost_vertices, vec![3]);
        assert!(report.dual_ghosts.is_empty());
    }

    #[test]
    fn faces_of_two_pairs() {
        let k = two_pairs();
        // {}, 4 singletons, {1,2}, {3,4}
        assert_eq!(k.face_count(), 7);
        assert!(k.is_proper());
        assert!(k.ghost_vertices().is_empty());
    }

    #[test]
    fn minimal_nonfaces_of_c5_are_the_chords() {
        let k = c5();
        let chords: Vec<Mask> = k.minimal_nonfaces();
        let expected: Vec<Mask> = [vec![1, 3], vec![1, 4], vec![2, 4], vec![2, 5], vec![3, 5]]
            .iter()
            .map(|s| set_to_mask(5, s).unwrap())
            .collect();
        let mut expected = expected;
        expected.sort_unstable();
        assert_eq!(chords, expected);
    }

    #[test]
    fn dual_of_c5_matches_known_facets() {
        let dual = c5().alexander_dual().unwrap();
        let mut expected: Vec<Mask> = [
            vec![2, 4, 5],
            vec![2, 3, 5],
            vec![1, 3, 5],
            vec![1, 3, 4],
            vec![1, 2, 4],
        ]
        .iter()
        .map(|s| set_to_mask(5, s).unwrap())
        .collect();
        expected.sort_unstable();
        assert_eq!(dual.facets(), &expected[..]);
    }

    #[test]
    fn dual_is_an_involution_on_samples() {
        for k in [c5(), two_pairs()] {
            let dd = k.alexander_dual().unwrap().alexander_dual().unwrap();
            assert_eq!(dd, k);
        }
    }

    #[test]
    fn dual_of_improper_errors() {
        let k = SimplicialComplex::build(2, &[vec![1, 2]]).unwrap();
        assert!(matches!(k.alexander_dual(), Err(Error::ImproperComplex)));
    }

    #[test]
    fn dual_ghosts_mirror_ghosts_of_dual() {
        let k = SimplicialComplex::build(3, &[vec![1, 2], vec![3]]).unwrap();
        let dual = k.alexander_dual().unwrap();
        assert_eq!(k.dual_ghosts(), dual.ghost_vertices());
    }

    #[test]
    fn canonical_form_is_relabel_invariant() {
        let k = c5();
        let perm = vec![3, 5, 2, 1, 4];
        assert_eq!(k.canonical_form(), k.relabel(&perm).canonical_form());
        // A path on 5 vertices is not a cycle.
        let path =
            SimplicialComplex::build(5, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]]).unwrap();
        assert_ne!(k.canonical_form(), path.canonical_form());
    }

    #[test]
    fn add_face_checks_closure() {
        let k = two_pairs();
        let m13 = set_to_mask(4, &[1, 3]).unwrap();
        let grown = k.add_face(m13).unwrap();
        assert!(grown.contains(m13));
        assert_eq!(grown.face_count(), 8);
        // {1,2,3} is missing {1,3} and {2,3}.
        assert!(k.add_face(set_to_mask(4, &[1, 2, 3]).unwrap()).is_err());
        // Already present.
        assert!(k.add_face(set_to_mask(4, &[1, 2]).unwrap()).is_err());
    }

    #[test]
    fn embed_adds_fresh_singleton_facets() {
        let k = two_pairs().embed(6).unwrap();
        assert_eq!(k.n(), 6);
        assert!(k.ghost_vertices().is_empty());
        assert!(k.contains(set_to_mask(6, &[5]).unwrap()));
        assert!(!k.contains(set_to_mask(6, &[5, 6]).unwrap()));
        assert!(!k.contains(set_to_mask(6, &[1, 5]).unwrap()));
        assert_eq!(k.facets().len(), 4);
    }
}
