//! Combinatorial contact-geometry bookkeeping.
//!
//! Self-linking of the boundary of a convex surface from its characteristic
//! foliation or from its positive/negative region decomposition, multicurves
//! on the torus, and the orbit/half-twist arithmetic of a dividing set under
//! a monodromy permutation.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::braid::Permutation;
use crate::error::{Error, Result};

/// Singularity counts of a characteristic foliation, in the order
/// `(e_plus, e_minus, h_plus, h_minus)`: elliptic then hyperbolic, each
/// split by sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoliationData {
    pub e_plus: u32,
    pub e_minus: u32,
    pub h_plus: u32,
    pub h_minus: u32,
}

impl FoliationData {
    pub fn new(e_plus: u32, e_minus: u32, h_plus: u32, h_minus: u32) -> Self {
        Self { e_plus, e_minus, h_plus, h_minus }
    }

    /// `(χ(Σ_+), χ(Σ_-)) = (e_+ - h_+, e_- - h_-)`.
    pub fn regions(&self) -> RegionData {
        RegionData {
            chi_plus: self.e_plus as i64 - self.h_plus as i64,
            chi_minus: self.e_minus as i64 - self.h_minus as i64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionData {
    pub chi_plus: i64,
    pub chi_minus: i64,
}

/// `sl(∂Σ) = -((e_+ - h_+) - (e_- - h_-))`
pub fn sl_from_foliation(f: &FoliationData) -> i64 {
    let plus = f.e_plus as i64 - f.h_plus as i64;
    let minus = f.e_minus as i64 - f.h_minus as i64;
    -(plus - minus)
}

/// `sl(∂Σ) = -(χ(Σ_+) - χ(Σ_-))`
pub fn sl_from_regions(r: &RegionData) -> i64 {
    -(r.chi_plus - r.chi_minus)
}

/// Primitive slope on the torus, normalized so `q > 0`, or `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidSlope(p, q));
        }
        Ok(if q < 0 || (q == 0 && p < 0) { Self { p: -p, q: -q } } else { Self { p, q } })
    }

    /// `|p s - q r|`
    pub fn intersection(&self, other: &Slope) -> u64 {
        (self.p * other.q - self.q * other.p).unsigned_abs()
    }
}

/// Weighted set of pairwise non-parallel slopes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TorusMulticurve {
    entries: BTreeMap<Slope, u32>,
}

impl TorusMulticurve {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parallel entries are merged; zero multiplicities are dropped.
    pub fn new<I: IntoIterator<Item = (i64, i64, u32)>>(entries: I) -> Result<Self> {
        let mut c = Self::empty();
        for (p, q, m) in entries {
            let s = Slope::new(p, q)?;
            if m > 0 {
                *c.entries.entry(s).or_insert(0) += m;
            }
        }
        Ok(c)
    }

    pub fn single(slope: Slope, mult: u32) -> Self {
        let mut c = Self::empty();
        if mult > 0 {
            c.entries.insert(slope, mult);
        }
        c
    }

    pub fn entries(&self) -> impl Iterator<Item = (Slope, u32)> + '_ {
        self.entries.iter().map(|(&s, &m)| (s, m))
    }

    pub fn multiplicity(&self, s: &Slope) -> u32 {
        self.entries.get(s).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Disjoint essential curves on the torus are parallel, so an embedded
    /// multicurve has at most one slope.
    pub fn is_embedded(&self) -> bool {
        self.entries.len() <= 1
    }

    /// Parses `[[p,q,mult],...]`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let triples: Vec<(i64, i64, u32)> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse { line: None, msg: format!("multicurve: {e}") })?;
        Self::new(triples)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.entries().map(|(s, m)| serde_json::json!([s.p, s.q, m])).collect())
    }
}

/// Geometric intersection number on the torus: `Σ m_A m_B |p s - q r|`.
pub fn torus_intersection(a: &TorusMulticurve, b: &TorusMulticurve) -> u64 {
    let mut total = 0;
    for (s, m) in a.entries() {
        for (t, k) in b.entries() {
            total += m as u64 * k as u64 * s.intersection(&t);
        }
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Containment {
    Contained,
    NotContained { witness: Option<Slope> },
}

/// Whether `Γ ⊂ Γ'` up to isotopy: every slope of `Γ` occurs in `Γ'` with at
/// least the same multiplicity. When containment fails, the first test slope
/// `γ` with `γ·Γ > γ·Γ'` is reported as a witness.
pub fn det_curves_decide(gamma: &TorusMulticurve, gamma_prime: &TorusMulticurve, tests: &[Slope]) -> Containment {
    let contained = gamma.entries().all(|(s, m)| gamma_prime.multiplicity(&s) >= m);
    if contained {
        return Containment::Contained;
    }
    let witness = tests.iter().copied().find(|t| {
        let probe = TorusMulticurve::single(*t, 1);
        torus_intersection(&probe, gamma) > torus_intersection(&probe, gamma_prime)
    });
    Containment::NotContained { witness }
}

/// Primitive slopes with `|p|, |q| ≤ bound`, normalized and deduplicated.
pub fn primitive_slopes(bound: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    for q in 0..=bound {
        for p in -bound..=bound {
            if let Ok(s) = Slope::new(p, q) {
                if s.p == p && s.q == q {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Dividing set `Γ` on a fiber as `k` isotopy classes `γ_i` with
/// multiplicities `n_i`, permuted by the monodromy `φ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DividingSetOrbitModel {
    pub classes: usize,
    pub mult: Vec<u32>,
    /// 1-based images of the monodromy on classes.
    pub phi: Vec<usize>,
    pub separating: Vec<bool>,
}

impl DividingSetOrbitModel {
    pub fn new(mult: Vec<u32>, phi: Vec<usize>, separating: Vec<bool>) -> Self {
        Self { classes: mult.len(), mult, phi, separating }
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let m: Self = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse { line: None, msg: format!("model: {e}") })?;
        m.permutation()?;
        Ok(m)
    }

    fn permutation(&self) -> Result<Permutation> {
        let k = self.classes;
        if self.mult.len() != k || self.phi.len() != k || self.separating.len() != k {
            return Err(Error::InvalidModel(format!("expected {k} entries in mult, phi and separating")));
        }
        if self.mult.contains(&0) {
            return Err(Error::InvalidModel("multiplicities must be positive".into()));
        }
        Permutation::from_images(&self.phi)
    }

    /// Checks `φ(Γ) = Γ`: multiplicity must be constant along `φ`.
    pub fn validate(&self) -> Result<Permutation> {
        let phi = self.permutation()?;
        for i in 1..=self.classes {
            let j = phi.apply(i);
            if self.mult[i - 1] != self.mult[j - 1] {
                return Err(Error::InvalidModel(format!(
                    "n_{i} = {} but n_{j} = {} with phi({i}) = {j}",
                    self.mult[i - 1],
                    self.mult[j - 1]
                )));
            }
        }
        Ok(phi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub members: Vec<usize>,
    pub multiplicity: u32,
}

pub fn orbit_classes(model: &DividingSetOrbitModel) -> Result<Vec<Orbit>> {
    let phi = model.validate()?;
    Ok(phi
        .cycles()
        .into_iter()
        .map(|members| {
            let multiplicity = model.mult[members[0] - 1];
            Orbit { members, multiplicity }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTorsion {
    pub members: Vec<usize>,
    pub half_twists: u32,
    pub full_torsion: u32,
    pub orientable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TorsionSummary {
    pub orbits: Vec<OrbitTorsion>,
}

impl TorsionSummary {
    pub fn total_half_twists(&self) -> u64 {
        self.orbits.iter().map(|o| o.half_twists as u64).sum()
    }

    /// Orbits whose odd half-twist count leaves a non-orientable plane field.
    pub fn warnings(&self) -> Vec<String> {
        self.orbits
            .iter()
            .filter(|o| !o.orientable)
            .map(|o| {
                format!(
                    "orbit {:?}: {} half-twists on a non-separating torus give a non-orientable plane field",
                    o.members, o.half_twists
                )
            })
            .collect()
    }
}

/// Each orbit `O_j` of classes under `φ` sweeps out one torus `T_j`; the
/// structure is obtained by adding `n` half-twists along it, where `n` is
/// the common multiplicity on the orbit. Two half-twists make one full twist.
pub fn torsion_summary(model: &DividingSetOrbitModel) -> Result<TorsionSummary> {
    let orbits = orbit_classes(model)?;
    Ok(TorsionSummary {
        orbits: orbits
            .into_iter()
            .map(|o| {
                let n = o.multiplicity;
                let separating = o.members.iter().any(|&i| model.separating[i - 1]);
                OrbitTorsion {
                    half_twists: n,
                    full_torsion: n / 2,
                    orientable: n % 2 == 0 || separating,
                    members: o.members,
                }
            })
            .collect(),
    })
}

/// The maximal self-linking dividing pattern: besides the optional boundary
/// copy, every class comes in parallel pairs, so `Σ_-` is a union of annuli.
/// When `boundary_class_present`, class 1 is the boundary-parallel copy.
pub fn is_torsion_only_dividing_set(model: &DividingSetOrbitModel, boundary_class_present: bool) -> bool {
    let skip = usize::from(boundary_class_present);
    model.mult.iter().skip(skip).all(|m| m % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mc(e: &[(i64, i64, u32)]) -> TorusMulticurve {
        TorusMulticurve::new(e.iter().copied()).unwrap()
    }

    #[test]
    fn foliation_examples() {
        assert_eq!(sl_from_foliation(&FoliationData::new(1, 0, 0, 0)), -1);
        assert_eq!(sl_from_foliation(&FoliationData::new(0, 0, 0, 0)), 0);
        assert_eq!(sl_from_foliation(&FoliationData::new(2, 0, 1, 0)), -1);
        assert_eq!(sl_from_foliation(&FoliationData::new(2, 1, 0, 1)), -2);
    }

    #[test]
    fn region_examples() {
        assert_eq!(sl_from_regions(&RegionData { chi_plus: 1, chi_minus: 0 }), -1);
        assert_eq!(sl_from_regions(&RegionData { chi_plus: -1, chi_minus: 0 }), 1);
        let f = FoliationData::new(3, 1, 4, 2);
        assert_eq!(sl_from_regions(&f.regions()), sl_from_foliation(&f));
    }

    #[test]
    fn slopes() {
        assert_eq!(Slope::new(-1, -2).unwrap(), Slope { p: 1, q: 2 });
        assert_eq!(Slope::new(-1, 0).unwrap(), Slope { p: 1, q: 0 });
        assert!(Slope::new(2, 4).is_err());
        assert!(Slope::new(0, 0).is_err());
        assert_eq!(primitive_slopes(1).len(), 4);
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(torus_intersection(&mc(&[(1, 0, 1)]), &mc(&[(0, 1, 1)])), 1);
        assert_eq!(torus_intersection(&mc(&[(1, 0, 2)]), &mc(&[(1, 0, 3)])), 0);
        assert_eq!(torus_intersection(&mc(&[(1, 2, 1)]), &mc(&[(3, 1, 2)])), 10);
    }

    #[test]
    fn containment_examples() {
        let tests = primitive_slopes(3);
        assert_eq!(det_curves_decide(&mc(&[(1, 0, 1)]), &mc(&[(1, 0, 2)]), &tests), Containment::Contained);
        assert_eq!(
            det_curves_decide(&mc(&[(1, 0, 1)]), &mc(&[(0, 1, 5)]), &[Slope::new(0, 1).unwrap()]),
            Containment::NotContained { witness: Some(Slope { p: 0, q: 1 }) }
        );
        let g = mc(&[(2, 3, 2), (1, 1, 1)]);
        assert_eq!(det_curves_decide(&g, &g, &tests), Containment::Contained);
        assert_eq!(det_curves_decide(&mc(&[]), &mc(&[]), &tests), Containment::Contained);
    }

    #[test]
    fn multicurve_json() {
        let c = TorusMulticurve::from_json(&serde_json::json!([[1, 2, 1], [-1, -2, 2]])).unwrap();
        assert_eq!(c, mc(&[(1, 2, 3)]));
        assert_eq!(c.to_json().to_string(), "[[1,2,3]]");
        assert!(TorusMulticurve::from_json(&serde_json::json!([[2, 2, 1]])).is_err());
    }

    #[test]
    fn orbit_examples() {
        let m = DividingSetOrbitModel::new(vec![1, 3], vec![1, 2], vec![false, false]);
        assert_eq!(orbit_classes(&m).unwrap().len(), 2);
        let m = DividingSetOrbitModel::new(vec![2, 2], vec![2, 1], vec![false, false]);
        assert_eq!(orbit_classes(&m).unwrap(), vec![Orbit { members: vec![1, 2], multiplicity: 2 }]);
        let m = DividingSetOrbitModel::new(vec![1, 2], vec![2, 1], vec![false, false]);
        assert!(matches!(orbit_classes(&m), Err(Error::InvalidModel(_))));
        let m = DividingSetOrbitModel::new(vec![1, 2], vec![1, 1], vec![false, false]);
        assert!(matches!(orbit_classes(&m), Err(Error::InvalidModel(_))));
    }

    #[test]
    fn torsion_examples() {
        let t = torsion_summary(&DividingSetOrbitModel::new(vec![2], vec![1], vec![true])).unwrap();
        assert_eq!(
            t.orbits,
            vec![OrbitTorsion { members: vec![1], half_twists: 2, full_torsion: 1, orientable: true }]
        );
        let t = torsion_summary(&DividingSetOrbitModel::new(vec![1], vec![1], vec![false])).unwrap();
        assert_eq!(t.orbits[0].full_torsion, 0);
        assert!(!t.orbits[0].orientable);
        assert_eq!(t.warnings().len(), 1);
        let t = torsion_summary(&DividingSetOrbitModel::new(vec![2, 2], vec![2, 1], vec![false, false])).unwrap();
        assert_eq!(
            t.orbits,
            vec![OrbitTorsion { members: vec![1, 2], half_twists: 2, full_torsion: 1, orientable: true }]
        );
        // odd on a separating torus stays orientable
        let t = torsion_summary(&DividingSetOrbitModel::new(vec![3], vec![1], vec![true])).unwrap();
        assert!(t.orbits[0].orientable && t.warnings().is_empty());
    }

    #[test]
    fn torsion_only_pattern() {
        let even = DividingSetOrbitModel::new(vec![2, 4], vec![1, 2], vec![false, false]);
        assert!(is_torsion_only_dividing_set(&even, false));
        let odd = DividingSetOrbitModel::new(vec![3], vec![1], vec![false]);
        assert!(!is_torsion_only_dividing_set(&odd, false));
        let empty = DividingSetOrbitModel::new(vec![], vec![], vec![]);
        assert!(is_torsion_only_dividing_set(&empty, false));
        let with_boundary = DividingSetOrbitModel::new(vec![1, 2], vec![1, 2], vec![true, false]);
        assert!(is_torsion_only_dividing_set(&with_boundary, true));
        assert!(!is_torsion_only_dividing_set(&with_boundary, false));
    }

    #[test]
    fn model_json() {
        let v = serde_json::json!({"classes": 2, "mult": [2, 2], "phi": [2, 1], "separating": [false, true]});
        let m = DividingSetOrbitModel::from_json(&v).unwrap();
        assert_eq!(m.phi, vec![2, 1]);
        let bad = serde_json::json!({"classes": 3, "mult": [2, 2], "phi": [2, 1], "separating": [false, true]});
        assert!(DividingSetOrbitModel::from_json(&bad).is_err());
    }
}
