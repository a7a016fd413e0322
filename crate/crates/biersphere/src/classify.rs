//! Classification of simple games: weighted, roughly weighted, or neither.
//!
//! Read a proper ghost-free complex `K` as a simple game whose losing
//! coalitions are the faces. The game is *weighted* when positive weights
//! `w` and a quota `q` strictly separate faces from non-faces
//! (`w(face) < q < w(non-face)`), and *roughly weighted* when the weak
//! separation `w(face) ≤ q ≤ w(non-face)` is possible with positive weights.
//! Both questions reduce to exact feasibility of small homogeneous systems:
//! a *reduced* system over the `n` weights and the quota, and an equivalent
//! *wall-crossing* system over one value per vertex of the Bier sphere.

use num::{One, Signed, Zero};

use crate::bier::{BierSphere, BierVertex, Ridge, RidgeKind};
use crate::complex::{mask_to_set, Mask, SimplicialComplex};
use crate::error::Error;
use crate::linfeas::{FeasibilityResult, LinearSystem, Rel};
use crate::rational::{format_rational, Rational};
use crate::Result;

/// Whether separations are required to be strict (weighted games) or weak
/// (roughly weighted games).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Weak,
}

/// Positive weights and a quota witnessing (rough) weightedness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCertificate {
    /// One positive weight per ground-set element, 1-based order.
    pub weights: Vec<Rational>,
    pub quota: Rational,
}

impl WeightCertificate {
    /// Scales so the weights sum to 1; the quota scales along, so the
    /// certified separation is unchanged.
    pub fn normalized(&self) -> WeightCertificate {
        let total: Rational = self.weights.iter().cloned().sum();
        WeightCertificate {
            weights: self.weights.iter().map(|w| w / &total).collect(),
            quota: &self.quota / &total,
        }
    }

    /// Weight of a coalition.
    pub fn weight_of(&self, mask: Mask) -> Rational {
        let mut s = Rational::zero();
        for i in mask_to_set(mask) {
            s += &self.weights[i - 1];
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "weights": self.weights.iter().map(format_rational).collect::<Vec<_>>(),
            "quota": format_rational(&self.quota),
        })
    }
}

/// Values on the vertices of a Bier sphere: `unbarred[i-1]` sits on vertex
/// `i`, `barred[i-1]` on `i~`. Such values satisfying the wall-crossing
/// system make the canonical fan's support data consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSubmodularFunction {
    pub unbarred: Vec<Rational>,
    pub barred: Vec<Rational>,
}

impl KSubmodularFunction {
    pub fn value(&self, v: BierVertex) -> &Rational {
        if v.barred {
            &self.barred[v.index - 1]
        } else {
            &self.unbarred[v.index - 1]
        }
    }

    /// Concatenated value vector in the variable order used by
    /// [`ridge_system`]: all unbarred values, then all barred ones.
    pub fn as_vec(&self) -> Vec<Rational> {
        self.unbarred
            .iter()
            .chain(self.barred.iter())
            .cloned()
            .collect()
    }
}

/// Classification outcome with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameClass {
    Weighted(WeightCertificate),
    RoughlyWeighted(WeightCertificate),
    Neither,
}

impl GameClass {
    pub fn tag(&self) -> &'static str {
        match self {
            GameClass::Weighted(_) => "weighted",
            GameClass::RoughlyWeighted(_) => "roughly-weighted",
            GameClass::Neither => "neither",
        }
    }

    pub fn certificate(&self) -> Option<&WeightCertificate> {
        match self {
            GameClass::Weighted(c) | GameClass::RoughlyWeighted(c) => Some(c),
            GameClass::Neither => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self.certificate() {
            Some(c) => {
                let mut v = c.to_json();
                v["class"] = serde_json::Value::String(self.tag().into());
                v
            }
            None => serde_json::json!({ "class": self.tag() }),
        }
    }
}

/// The reduced system on variables `z1 … zn, Q`: every minimal non-face `S`
/// satisfies `z(S) REL Q`, every facet `T` satisfies `z(T) REL⁻¹ Q`, and all
/// `z_i > 0` (strictly, in both modes). Strict feasibility is weightedness,
/// weak feasibility is rough weightedness.
pub fn reduced_system(k: &SimplicialComplex, mode: Mode) -> LinearSystem {
    let n = k.n();
    let mut names: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    names.push("Q".into());
    let mut sys = LinearSystem::with_names(names);
    let rel = match mode {
        Mode::Strict => Rel::Gt,
        Mode::Weak => Rel::Ge,
    };
    for s in k.minimal_nonfaces() {
        let mut row = vec![Rational::zero(); n + 1];
        for i in mask_to_set(s) {
            row[i - 1] = Rational::one();
        }
        row[n] = -Rational::one();
        sys.push(row, rel);
    }
    for &t in k.facets() {
        let mut row = vec![Rational::zero(); n + 1];
        for i in mask_to_set(t) {
            row[i - 1] = -Rational::one();
        }
        row[n] = Rational::one();
        sys.push(row, rel);
    }
    for i in 0..n {
        let mut row = vec![Rational::zero(); n + 1];
        row[i] = Rational::one();
        sys.push(row, Rel::Gt);
    }
    sys
}

/// Rows contributed by one wall of the sphere, over the `2n` vertex values
/// (`x` unbarred, then `y` barred).
fn rows_for_ridge(r: &Ridge, n: usize, mode: Mode) -> Vec<(Vec<Rational>, Rel)> {
    let x = |i: usize| i - 1;
    let y = |i: usize| n + i - 1;
    let rel = match mode {
        Mode::Strict => Rel::Gt,
        Mode::Weak => Rel::Ge,
    };
    match r.kind {
        RidgeKind::Lambda => {
            let mut row = vec![Rational::zero(); 2 * n];
            row[x(r.c1)] = Rational::one();
            row[x(r.c2)] = Rational::one();
            for i in mask_to_set(r.x1) {
                row[x(i)] = Rational::one();
            }
            for j in mask_to_set(r.x2) {
                row[y(j)] = -Rational::one();
            }
            vec![(row, rel)]
        }
        RidgeKind::Vee => {
            let mut row = vec![Rational::zero(); 2 * n];
            row[y(r.c1)] = Rational::one();
            row[y(r.c2)] = Rational::one();
            for j in mask_to_set(r.x2) {
                row[y(j)] = Rational::one();
            }
            for i in mask_to_set(r.x1) {
                row[x(i)] = -Rational::one();
            }
            vec![(row, rel)]
        }
        RidgeKind::Cross => match mode {
            // The two facets differ only by swapping c2 with c2~; crossing
            // the wall constrains just that pair of values.
            Mode::Strict => {
                let mut row = vec![Rational::zero(); 2 * n];
                row[x(r.c2)] = Rational::one();
                row[y(r.c2)] = Rational::one();
                vec![(row, Rel::Gt)]
            }
            // Weak walls may flatten, but each member of the pair keeps a
            // strictly positive value.
            Mode::Weak => {
                let mut rx = vec![Rational::zero(); 2 * n];
                rx[x(r.c2)] = Rational::one();
                let mut ry = vec![Rational::zero(); 2 * n];
                ry[y(r.c2)] = Rational::one();
                vec![(rx, Rel::Gt), (ry, Rel::Gt)]
            }
        },
    }
}

/// The wall-crossing system of the sphere over `2n` vertex values, one or
/// two rows per ridge as described at [`RidgeKind`].
pub fn ridge_system(sphere: &BierSphere, mode: Mode) -> LinearSystem {
    let n = sphere.n();
    let names: Vec<String> = (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("y{i}")))
        .collect();
    let mut sys = LinearSystem::with_names(names);
    for r in sphere.ridges() {
        for (row, rel) in rows_for_ridge(&r, n, mode) {
            sys.push(row, rel);
        }
    }
    sys
}

/// Checks that the values satisfy every wall-crossing row of the sphere in
/// the given mode.
pub fn check_submodular(
    sphere: &BierSphere,
    f: &KSubmodularFunction,
    mode: Mode,
) -> Result<()> {
    let n = sphere.n();
    if f.unbarred.len() != n || f.barred.len() != n {
        return Err(Error::WitnessWidth {
            expected: 2 * n,
            got: f.unbarred.len() + f.barred.len(),
        });
    }
    let vals = f.as_vec();
    for r in sphere.ridges() {
        for (row, rel) in rows_for_ridge(&r, n, mode) {
            let dot: Rational = row.iter().zip(&vals).map(|(c, v)| c * v).sum();
            let ok = match rel {
                Rel::Gt => dot.is_positive(),
                Rel::Ge => !dot.is_negative(),
            };
            if !ok {
                return Err(Error::CertificateMismatch(format!(
                    "wall {:?}/{:?} with pair ({}, {}) of kind {:?} evaluates to {}",
                    mask_to_set(r.x1),
                    mask_to_set(r.x2),
                    r.c1,
                    r.c2,
                    r.kind,
                    dot
                )));
            }
        }
    }
    Ok(())
}

fn check_certificate(k: &SimplicialComplex, cert: &WeightCertificate, mode: Mode) -> Result<()> {
    let n = k.n();
    if cert.weights.len() != n {
        return Err(Error::InvalidWeights(format!(
            "expected {n} weights, got {}",
            cert.weights.len()
        )));
    }
    if let Some(i) = cert.weights.iter().position(|w| !w.is_positive()) {
        return Err(Error::InvalidWeights(format!(
            "weight of element {} is not positive",
            i + 1
        )));
    }
    if n > 16 {
        return Err(Error::TooLarge {
            op: "certificate verification",
            n,
            limit: 16,
        });
    }
    // Exhaustive check of the defining separation over all coalitions.
    let mut sums = vec![Rational::zero(); 1 << n];
    for m in 1u32..1 << n {
        let low = m.trailing_zeros() as usize;
        sums[m as usize] = &sums[(m & (m - 1)) as usize] + &cert.weights[low];
    }
    for m in 0u32..1 << n {
        let w = &sums[m as usize];
        let losing = k.contains(m);
        let ok = match (mode, losing) {
            (Mode::Strict, true) => w < &cert.quota,
            (Mode::Strict, false) => w > &cert.quota,
            (Mode::Weak, true) => w <= &cert.quota,
            (Mode::Weak, false) => w >= &cert.quota,
        };
        if !ok {
            return Err(Error::CertificateMismatch(format!(
                "coalition {:?} is {} but has weight {} against quota {}",
                mask_to_set(m),
                if losing { "losing" } else { "winning" },
                w,
                cert.quota
            )));
        }
    }
    Ok(())
}

/// Checks a strict certificate: every face weighs strictly less than the
/// quota and every non-face strictly more.
pub fn verify_threshold(k: &SimplicialComplex, cert: &WeightCertificate) -> Result<()> {
    check_certificate(k, cert, Mode::Strict)
}

/// Checks a weak certificate: faces weigh at most the quota, non-faces at
/// least the quota.
pub fn verify_rough(k: &SimplicialComplex, cert: &WeightCertificate) -> Result<()> {
    check_certificate(k, cert, Mode::Weak)
}

fn certificate_from_witness(n: usize, witness: &[Rational]) -> WeightCertificate {
    WeightCertificate {
        weights: witness[..n].to_vec(),
        quota: witness[n].clone(),
    }
    .normalized()
}

/// Classifies the game of a proper ghost-free complex. Returned certificates
/// are normalized to total weight 1 and re-verified against the defining
/// separation before they leave this function.
pub fn classify_game(k: &SimplicialComplex) -> Result<GameClass> {
    k.require_classifiable()?;
    let n = k.n();
    if let FeasibilityResult::Feasible(w) = reduced_system(k, Mode::Strict).solve()? {
        let cert = certificate_from_witness(n, &w);
        verify_threshold(k, &cert)
            .map_err(|e| Error::Internal(format!("unverified strict witness: {e}")))?;
        return Ok(GameClass::Weighted(cert));
    }
    if let FeasibilityResult::Feasible(w) = reduced_system(k, Mode::Weak).solve()? {
        let cert = certificate_from_witness(n, &w);
        verify_rough(k, &cert)
            .map_err(|e| Error::Internal(format!("unverified weak witness: {e}")))?;
        return Ok(GameClass::RoughlyWeighted(cert));
    }
    Ok(GameClass::Neither)
}

/// Convenience wrapper: is the game weighted?
pub fn is_threshold(k: &SimplicialComplex) -> Result<bool> {
    k.require_classifiable()?;
    Ok(reduced_system(k, Mode::Strict).solve()?.is_feasible())
}

/// Builds the vertex values induced by a certificate: `x_i = (1 - q)·w_i` on
/// unbarred vertices and `y_i = q·w_i` on barred ones (after normalizing the
/// certificate). The values are checked against the wall-crossing system in
/// the requested mode before being returned.
pub fn submodular_from_weights(
    k: &SimplicialComplex,
    cert: &WeightCertificate,
    mode: Mode,
) -> Result<KSubmodularFunction> {
    match mode {
        Mode::Strict => verify_threshold(k, cert)?,
        Mode::Weak => verify_rough(k, cert)?,
    }
    let cert = cert.normalized();
    let q = &cert.quota;
    if !q.is_positive() || *q >= Rational::one() {
        return Err(Error::QuotaRange(format_rational(q)));
    }
    let one_minus_q = Rational::one() - q;
    let f = KSubmodularFunction {
        unbarred: cert.weights.iter().map(|w| w * &one_minus_q).collect(),
        barred: cert.weights.iter().map(|w| w * q).collect(),
    };
    let sphere = BierSphere::of(k)?;
    check_submodular(&sphere, &f, mode)
        .map_err(|e| Error::Internal(format!("induced values failed wall check: {e}")))?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::build(n, &facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn c5() -> SimplicialComplex {
        complex(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])
    }

    fn two_pairs() -> SimplicialComplex {
        complex(4, &[&[1, 2], &[3, 4]])
    }

    fn majority3() -> SimplicialComplex {
        complex(3, &[&[1], &[2], &[3]])
    }

    fn two_triangles() -> SimplicialComplex {
        complex(6, &[&[1, 2, 3], &[4, 5, 6]])
    }

    #[test]
    fn majority_game_is_weighted() {
        let class = classify_game(&majority3()).unwrap();
        let GameClass::Weighted(cert) = &class else {
            panic!("majority game should be weighted, got {}", class.tag());
        };
        verify_threshold(&majority3(), cert).unwrap();
        assert_eq!(
            cert.weights.iter().cloned().sum::<Rational>(),
            Rational::one()
        );
        assert!(cert.quota.is_positive() && cert.quota < Rational::one());
    }

    #[test]
    fn five_cycle_is_roughly_weighted_but_not_weighted() {
        let k = c5();
        let class = classify_game(&k).unwrap();
        assert!(matches!(class, GameClass::RoughlyWeighted(_)));
        // The uniform certificate works weakly: chords weigh 2/5 = quota,
        // edges weigh 2/5 = quota.
        let cert = WeightCertificate {
            weights: vec![frac(1, 5); 5],
            quota: frac(2, 5),
        };
        verify_rough(&k, &cert).unwrap();
        assert!(verify_threshold(&k, &cert).is_err());
    }

    #[test]
    fn two_pairs_is_roughly_weighted_but_not_weighted() {
        let k = two_pairs();
        assert!(!is_threshold(&k).unwrap());
        let class = classify_game(&k).unwrap();
        assert!(matches!(class, GameClass::RoughlyWeighted(_)));
        let cert = WeightCertificate {
            weights: vec![frac(1, 4); 4],
            quota: frac(1, 2),
        };
        verify_rough(&k, &cert).unwrap();
    }

    #[test]
    fn two_disjoint_triangles_are_not_even_roughly_weighted() {
        // Summing the weak rows of the three pairings {1,4}, {2,5}, {3,6}
        // forces 3Q ≤ z([6]), while the two facet rows force z([6]) ≤ 2Q.
        let k = two_triangles();
        let class = classify_game(&k).unwrap();
        assert_eq!(class, GameClass::Neither);
        let weak = reduced_system(&k, Mode::Weak);
        assert!(!weak.solve().unwrap().is_feasible());
        assert!(!weak.fourier_motzkin_feasible());
    }

    #[test]
    fn reduced_and_ridge_systems_agree_on_fixtures() {
        for k in [majority3(), two_pairs(), c5(), two_triangles()] {
            let sphere = BierSphere::of(&k).unwrap();
            for mode in [Mode::Strict, Mode::Weak] {
                let reduced = reduced_system(&k, mode).solve().unwrap().is_feasible();
                let walls = ridge_system(&sphere, mode).solve().unwrap().is_feasible();
                assert_eq!(reduced, walls, "n={} mode={mode:?}", k.n());
            }
        }
    }

    #[test]
    fn induced_values_satisfy_the_wall_system() {
        let k = majority3();
        let GameClass::Weighted(cert) = classify_game(&k).unwrap() else {
            panic!()
        };
        let f = submodular_from_weights(&k, &cert, Mode::Strict).unwrap();
        let sphere = BierSphere::of(&k).unwrap();
        check_submodular(&sphere, &f, Mode::Strict).unwrap();
        // x_i + y_i = w_i for a normalized certificate.
        for i in 0..3 {
            assert_eq!(&f.unbarred[i] + &f.barred[i], cert.weights[i]);
        }

        let k = c5();
        let cert = WeightCertificate {
            weights: vec![frac(1, 5); 5],
            quota: frac(2, 5),
        };
        let f = submodular_from_weights(&k, &cert, Mode::Weak).unwrap();
        let sphere = BierSphere::of(&k).unwrap();
        check_submodular(&sphere, &f, Mode::Weak).unwrap();
        // Strictness fails on a flattened wall.
        assert!(check_submodular(&sphere, &f, Mode::Strict).is_err());
    }

    #[test]
    fn certificate_validation_rejects_garbage() {
        let k = majority3();
        let bad_len = WeightCertificate {
            weights: vec![rat(1); 2],
            quota: rat(1),
        };
        assert!(verify_threshold(&k, &bad_len).is_err());
        let negative = WeightCertificate {
            weights: vec![rat(1), rat(-1), rat(1)],
            quota: rat(1),
        };
        assert!(matches!(
            verify_threshold(&k, &negative),
            Err(Error::InvalidWeights(_))
        ));
        let wrong_quota = WeightCertificate {
            weights: vec![frac(1, 3); 3],
            quota: frac(9, 10),
        };
        assert!(matches!(
            verify_threshold(&k, &wrong_quota),
            Err(Error::CertificateMismatch(_))
        ));
    }

    #[test]
    fn classification_is_relabel_invariant() {
        let k = c5();
        let perm = [4, 1, 5, 2, 3];
        let relabeled = k.relabel(&perm);
        assert_eq!(
            classify_game(&k).unwrap().tag(),
            classify_game(&relabeled).unwrap().tag()
        );
    }

    #[test]
    fn game_class_json_shape() {
        let class = classify_game(&majority3()).unwrap();
        let v = class.to_json();
        assert_eq!(v["class"], "weighted");
        assert!(v["weights"].is_array());
        let v = GameClass::Neither.to_json();
        assert_eq!(v["class"], "neither");
        assert!(v.get("weights").is_none());
    }

    #[test]
    fn ghost_and_improper_inputs_are_rejected() {
        let ghost = complex(3, &[&[1, 2]]);
        assert!(matches!(
            classify_game(&ghost),
            Err(Error::GhostVertices(_))
        ));
        let improper = complex(2, &[&[1, 2]]);
        assert!(matches!(
            classify_game(&improper),
            Err(Error::ImproperComplex)
        ));
    }
}
