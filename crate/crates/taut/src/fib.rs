//! Finite sets fibered over a finite base, with change of base and its two
//! adjoints computed fiberwise.
//!
//! Elements are identified by a base point tag plus a local label; the
//! constructors keep labels canonical so that isomorphic results compare
//! equal fiberwise.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FibError {
    #[error("base mismatch: {0}")]
    BaseMismatch(String),
    #[error("map not total at {0}")]
    NotTotal(String),
    #[error("unknown base point {0}")]
    UnknownBasePoint(String),
    #[error("duplicate element {0} over {1}")]
    DuplicateElement(String, String),
}

/// A finite set over a finite base: one finite fiber per base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibSet {
    fibers: BTreeMap<String, Vec<String>>,
}

impl FibSet {
    pub fn new(fibers: BTreeMap<String, Vec<String>>) -> Result<FibSet, FibError> {
        let mut out = BTreeMap::new();
        for (b, mut labels) in fibers {
            labels.sort();
            for pair in labels.windows(2) {
                if pair[0] == pair[1] {
                    return Err(FibError::DuplicateElement(pair[0].clone(), b));
                }
            }
            out.insert(b, labels);
        }
        Ok(FibSet { fibers: out })
    }

    pub fn from_sizes(sizes: &[(&str, usize)]) -> FibSet {
        let fibers = sizes
            .iter()
            .map(|(b, n)| ((*b).to_string(), (0..*n).map(|i| format!("e{i}")).collect()))
            .collect();
        FibSet { fibers }
    }

    pub fn base(&self) -> BTreeSet<String> {
        self.fibers.keys().cloned().collect()
    }

    pub fn fiber(&self, b: &str) -> Result<&[String], FibError> {
        self.fibers
            .get(b)
            .map(|v| v.as_slice())
            .ok_or_else(|| FibError::UnknownBasePoint(b.to_string()))
    }

    pub fn total_size(&self) -> usize {
        self.fibers.values().map(Vec::len).sum()
    }

    pub fn fiber_sizes(&self) -> BTreeMap<String, usize> {
        self.fibers.iter().map(|(b, v)| (b.clone(), v.len())).collect()
    }

    /// All elements as (base point, label) pairs, canonical order.
    pub fn elements(&self) -> impl Iterator<Item = (&str, &str)> {
        self.fibers
            .iter()
            .flat_map(|(b, v)| v.iter().map(move |l| (b.as_str(), l.as_str())))
    }
}

/// A total function between finite base sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseMap {
    pub source: BTreeSet<String>,
    pub target: BTreeSet<String>,
    map: BTreeMap<String, String>,
}

impl BaseMap {
    pub fn new(
        source: BTreeSet<String>,
        target: BTreeSet<String>,
        map: BTreeMap<String, String>,
    ) -> Result<BaseMap, FibError> {
        for a in &source {
            let b = map.get(a).ok_or_else(|| FibError::NotTotal(a.clone()))?;
            if !target.contains(b) {
                return Err(FibError::UnknownBasePoint(b.clone()));
            }
        }
        for a in map.keys() {
            if !source.contains(a) {
                return Err(FibError::UnknownBasePoint(a.clone()));
            }
        }
        Ok(BaseMap { source, target, map })
    }

    pub fn from_pairs(pairs: &[(&str, &str)], target_extra: &[&str]) -> BaseMap {
        let source = pairs.iter().map(|(a, _)| (*a).to_string()).collect();
        let mut target: BTreeSet<String> =
            pairs.iter().map(|(_, b)| (*b).to_string()).collect();
        target.extend(target_extra.iter().map(|b| (*b).to_string()));
        let map = pairs
            .iter()
            .map(|(a, b)| ((*a).to_string(), (*b).to_string()))
            .collect();
        BaseMap { source, target, map }
    }

    pub fn identity(base: &BTreeSet<String>) -> BaseMap {
        BaseMap {
            source: base.clone(),
            target: base.clone(),
            map: base.iter().map(|b| (b.clone(), b.clone())).collect(),
        }
    }

    pub fn apply(&self, a: &str) -> Result<&str, FibError> {
        self.map
            .get(a)
            .map(String::as_str)
            .ok_or_else(|| FibError::NotTotal(a.to_string()))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &BaseMap) -> Result<BaseMap, FibError> {
        if other.target != self.source {
            return Err(FibError::BaseMismatch(
                "composition endpoints do not match".into(),
            ));
        }
        let map = other
            .map
            .iter()
            .map(|(a, b)| Ok((a.clone(), self.apply(b)?.to_string())))
            .collect::<Result<_, FibError>>()?;
        BaseMap::new(other.source.clone(), self.target.clone(), map)
    }

    pub fn preimage(&self, b: &str) -> Vec<&str> {
        self.map
            .iter()
            .filter(|(_, v)| v.as_str() == b)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

/// A fiber-preserving map between two fibered sets over the same base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibMap {
    pub source: FibSet,
    pub target: FibSet,
    map: BTreeMap<(String, String), String>,
}

impl FibMap {
    pub fn apply(&self, b: &str, label: &str) -> Option<&str> {
        self.map.get(&(b.to_string(), label.to_string())).map(String::as_str)
    }
}

/// Change of base: the fiber of the result over `a` is the fiber of `chi`
/// over `f(a)`, with labels kept.
pub fn pullback(f: &BaseMap, chi: &FibSet) -> Result<FibSet, FibError> {
    if chi.base() != f.target {
        return Err(FibError::BaseMismatch(
            "pullback: fibered set does not live over the map's target".into(),
        ));
    }
    let mut fibers = BTreeMap::new();
    for a in &f.source {
        let b = f.apply(a)?;
        fibers.insert(a.clone(), chi.fiber(b)?.to_vec());
    }
    FibSet::new(fibers)
}

/// Left adjoint to change of base: postcompose with `f`. The fiber over `b`
/// is the disjoint union of the fibers over the preimage of `b`.
pub fn sigma(f: &BaseMap, psi: &FibSet) -> Result<FibSet, FibError> {
    if psi.base() != f.source {
        return Err(FibError::BaseMismatch(
            "sigma: fibered set does not live over the map's source".into(),
        ));
    }
    let mut fibers: BTreeMap<String, Vec<String>> =
        f.target.iter().map(|b| (b.clone(), Vec::new())).collect();
    for (a, label) in psi.elements() {
        let b = f.apply(a)?;
        fibers
            .get_mut(b)
            .expect("target point present")
            .push(format!("{a}.{label}"));
    }
    FibSet::new(fibers)
}

/// Right adjoint to change of base: the fiber over `b` is the product of the
/// fibers over the preimage of `b`, encoded as tuples in preimage order. An
/// empty preimage yields the one-element fiber containing the empty tuple.
pub fn pi(f: &BaseMap, psi: &FibSet) -> Result<FibSet, FibError> {
    if psi.base() != f.source {
        return Err(FibError::BaseMismatch(
            "pi: fibered set does not live over the map's source".into(),
        ));
    }
    let mut fibers = BTreeMap::new();
    for b in &f.target {
        let preimage = f.preimage(b);
        let mut tuples: Vec<Vec<String>> = vec![Vec::new()];
        for a in &preimage {
            let fiber = psi.fiber(a)?;
            let mut next = Vec::with_capacity(tuples.len() * fiber.len());
            for t in &tuples {
                for label in fiber {
                    let mut v = t.clone();
                    v.push(format!("{a}={label}"));
                    next.push(v);
                }
            }
            tuples = next;
        }
        fibers.insert(
            b.clone(),
            tuples.into_iter().map(|t| format!("({})", t.join(","))).collect(),
        );
    }
    FibSet::new(fibers)
}

/// All fiber-preserving maps between two fibered sets over the same base.
pub fn enumerate_fib_maps(source: &FibSet, target: &FibSet) -> Vec<FibMap> {
    if source.base() != target.base() {
        return Vec::new();
    }
    let mut assignments: Vec<BTreeMap<(String, String), String>> = vec![BTreeMap::new()];
    for (b, label) in source.elements() {
        let images = target.fiber(b).expect("same base");
        let mut next = Vec::with_capacity(assignments.len() * images.len());
        for partial in &assignments {
            for img in images {
                let mut m = partial.clone();
                m.insert((b.to_string(), label.to_string()), img.clone());
                next.push(m);
            }
        }
        assignments = next;
    }
    assignments
        .into_iter()
        .map(|map| FibMap { source: source.clone(), target: target.clone(), map })
        .collect()
}

/// Outcome of the two adjunction checks around change of base.
#[derive(Debug, Clone)]
pub struct AdjunctionReport {
    pub sigma_side: CheckReport,
    pub pi_side: CheckReport,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.sigma_side.passed() && self.pi_side.passed()
    }
}

/// Verify both adjunctions at `f` by exhaustive enumeration: hom-set counts
/// agree and the explicit transpositions are mutually inverse bijections.
/// `chi` lives over the target of `f`, `psi` over its source.
pub fn check_adjunction(
    f: &BaseMap,
    chi: &FibSet,
    psi: &FibSet,
) -> Result<AdjunctionReport, FibError> {
    let pulled = pullback(f, chi)?;

    // Sigma side: Hom_B(Σ_f ψ, χ) vs Hom_A(ψ, f*χ).
    let sig = sigma(f, psi)?;
    let lhs = enumerate_fib_maps(&sig, chi);
    let rhs = enumerate_fib_maps(psi, &pulled);
    let sigma_side = if lhs.len() != rhs.len() {
        CheckReport::fail(
            "sigma-adjunction",
            format!("hom-set sizes differ: {} vs {}", lhs.len(), rhs.len()),
            lhs.len() + rhs.len(),
        )
    } else {
        // transpose g: Σ_f ψ -> χ to ĝ: ψ -> f*χ, ĝ(a, e) = g(f(a), a.e)
        let mut images = BTreeSet::new();
        let mut failure = None;
        for g in &lhs {
            let mut map = BTreeMap::new();
            for (a, label) in psi.elements() {
                let b = f.apply(a)?;
                let img = g
                    .apply(b, &format!("{a}.{label}"))
                    .expect("sigma element present")
                    .to_string();
                map.insert((a.to_string(), label.to_string()), img);
            }
            let transposed = FibMap { source: psi.clone(), target: pulled.clone(), map };
            if !rhs.contains(&transposed) {
                failure = Some(format!("transpose lands outside the hom-set"));
                break;
            }
            if !images.insert(transposed.map.clone()) {
                failure = Some(format!("transposition is not injective"));
                break;
            }
        }
        match failure {
            Some(w) => CheckReport::fail("sigma-adjunction", w, lhs.len()),
            None if images.len() == rhs.len() => {
                CheckReport::pass("sigma-adjunction", lhs.len() + rhs.len())
            }
            None => CheckReport::fail(
                "sigma-adjunction",
                "transposition is not surjective",
                lhs.len(),
            ),
        }
    };

    let pi_side = check_pi_adjunction_against(f, chi, psi, &pi(f, psi)?)?;
    Ok(AdjunctionReport { sigma_side, pi_side })
}

/// Compare `Hom_A(f*χ, ψ)` with `Hom_B(χ, candidate)` where `candidate`
/// claims to be `Π_f ψ`. Counts are compared for any candidate; the explicit
/// roundtrip is exhibited when the candidate has the genuine tuple labels.
pub fn check_pi_adjunction_against(
    f: &BaseMap,
    chi: &FibSet,
    psi: &FibSet,
    candidate: &FibSet,
) -> Result<CheckReport, FibError> {
    let pulled = pullback(f, chi)?;
    let lhs = enumerate_fib_maps(&pulled, psi);
    let rhs = enumerate_fib_maps(chi, candidate);
    if lhs.len() != rhs.len() {
        let witness_map = lhs
            .first()
            .map(|m| format!("{:?}", m))
            .unwrap_or_else(|| "no maps on the left side".to_string());
        return Ok(CheckReport::fail(
            "pi-adjunction",
            format!(
                "hom-set sizes differ: |Hom(f*chi, psi)| = {} vs |Hom(chi, Pi)| = {}; example left map: {}",
                lhs.len(),
                rhs.len(),
                witness_map
            ),
            lhs.len() + rhs.len(),
        ));
    }
    // transpose h: f*χ -> ψ to ĥ: χ -> Π_f ψ,
    // ĥ(b, c) = the tuple (h(a, c))_{a in f^{-1}(b)}
    let mut images = BTreeSet::new();
    for h in &lhs {
        let mut map = BTreeMap::new();
        for (b, c) in chi.elements() {
            let mut parts = Vec::new();
            for a in f.preimage(b) {
                let img = h.apply(a, c).expect("pulled-back element present");
                parts.push(format!("{a}={img}"));
            }
            let tuple = format!("({})", parts.join(","));
            if !candidate.fiber(b)?.iter().any(|l| l == &tuple) {
                return Ok(CheckReport::fail(
                    "pi-adjunction",
                    format!("transpose of a map hits missing tuple {tuple} over {b}"),
                    lhs.len(),
                ));
            }
            map.insert((b.to_string(), c.to_string()), tuple);
        }
        if !images.insert(map) {
            return Ok(CheckReport::fail(
                "pi-adjunction",
                "transposition is not injective",
                lhs.len(),
            ));
        }
    }
    if images.len() != rhs.len() {
        return Ok(CheckReport::fail(
            "pi-adjunction",
            "transposition is not surjective",
            lhs.len(),
        ));
    }
    Ok(CheckReport::pass("pi-adjunction", lhs.len() + rhs.len()))
}

/// Explicit fiberwise bijection between two fibered sets, if their fibers
/// match in size (used to report isomorphisms, not just equal counts).
pub fn fiberwise_bijection(
    x: &FibSet,
    y: &FibSet,
) -> Option<BTreeMap<(String, String), (String, String)>> {
    if x.base() != y.base() {
        return None;
    }
    let mut out = BTreeMap::new();
    for b in x.base() {
        let fx = x.fiber(&b).ok()?;
        let fy = y.fiber(&b).ok()?;
        if fx.len() != fy.len() {
            return None;
        }
        for (l, m) in fx.iter().zip(fy) {
            out.insert((b.clone(), l.clone()), (b.clone(), m.clone()));
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_point_base() -> BTreeSet<String> {
        ["x".to_string(), "y".to_string()].into_iter().collect()
    }

    #[test]
    fn pullback_along_identity_keeps_sizes() {
        let chi = FibSet::from_sizes(&[("x", 2), ("y", 3)]);
        let f = BaseMap::identity(&two_point_base());
        let p = pullback(&f, &chi).unwrap();
        assert_eq!(p.fiber_sizes(), chi.fiber_sizes());
    }

    #[test]
    fn pullback_along_constant_duplicates_fiber() {
        let f = BaseMap::from_pairs(&[("x", "z"), ("y", "z")], &[]);
        let chi = FibSet::from_sizes(&[("z", 3)]);
        let p = pullback(&f, &chi).unwrap();
        assert_eq!(p.fiber("x").unwrap().len(), 3);
        assert_eq!(p.fiber("y").unwrap().len(), 3);
        assert_eq!(p.total_size(), 6);
    }

    #[test]
    fn pullback_of_empty_is_empty() {
        let f = BaseMap::from_pairs(&[("x", "z"), ("y", "z")], &[]);
        let chi = FibSet::from_sizes(&[("z", 0)]);
        assert_eq!(pullback(&f, &chi).unwrap().total_size(), 0);
    }

    #[test]
    fn sigma_unions_fibers() {
        let f = BaseMap::from_pairs(&[("a1", "b"), ("a2", "b")], &[]);
        let psi = FibSet::from_sizes(&[("a1", 2), ("a2", 5)]);
        let s = sigma(&f, &psi).unwrap();
        assert_eq!(s.fiber("b").unwrap().len(), 7);
        assert_eq!(s.total_size(), psi.total_size());
    }

    #[test]
    fn pi_multiplies_fibers() {
        let f = BaseMap::from_pairs(&[("a1", "b1"), ("a2", "b1"), ("a3", "b2")], &[]);
        let psi = FibSet::from_sizes(&[("a1", 3), ("a2", 1), ("a3", 2)]);
        let p = pi(&f, &psi).unwrap();
        assert_eq!(p.fiber("b1").unwrap().len(), 3);
        assert_eq!(p.fiber("b2").unwrap().len(), 2);
    }

    #[test]
    fn pi_empty_factor_empties_fiber() {
        let f = BaseMap::from_pairs(&[("a1", "b"), ("a2", "b")], &[]);
        let psi = FibSet::from_sizes(&[("a1", 0), ("a2", 4)]);
        assert_eq!(pi(&f, &psi).unwrap().fiber("b").unwrap().len(), 0);
    }

    #[test]
    fn pi_empty_preimage_gives_singleton() {
        let f = BaseMap::from_pairs(&[("a", "b1")], &["b2"]);
        let psi = FibSet::from_sizes(&[("a", 2)]);
        let p = pi(&f, &psi).unwrap();
        assert_eq!(p.fiber("b2").unwrap(), &["()".to_string()]);
    }

    #[test]
    fn base_mismatch_is_an_error() {
        let f = BaseMap::from_pairs(&[("x", "z")], &[]);
        let chi = FibSet::from_sizes(&[("w", 1)]);
        assert!(matches!(pullback(&f, &chi), Err(FibError::BaseMismatch(_))));
    }

    #[test]
    fn adjunction_on_identity() {
        let base = two_point_base();
        let f = BaseMap::identity(&base);
        let chi = FibSet::from_sizes(&[("x", 2), ("y", 1)]);
        let psi = FibSet::from_sizes(&[("x", 1), ("y", 2)]);
        let report = check_adjunction(&f, &chi, &psi).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn corrupted_pi_fails_with_witness() {
        let f = BaseMap::from_pairs(&[("a1", "b1"), ("a2", "b1"), ("a3", "b2")], &[]);
        let psi = FibSet::from_sizes(&[("a1", 3), ("a2", 1), ("a3", 2)]);
        let chi = FibSet::from_sizes(&[("b1", 2), ("b2", 2)]);
        // replace the product by the union
        let corrupted = sigma(&f, &psi).unwrap();
        let report = check_pi_adjunction_against(&f, &chi, &psi, &corrupted).unwrap();
        assert!(!report.passed());
        assert!(report.witness.is_some());
    }
}
